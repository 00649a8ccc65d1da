//! Seeded random generators for fuzz checks: hermitian spaces, frames and
//! basis conjugations. Everything is deterministic for a fixed RNG state.

use nalgebra::{DMatrix, DVector};
use rand::Rng;

use crate::lie_frame::{HermitianFrame, LieAlgebra};
use crate::multilinear::{HermitianVectorSpace, KForm};

/// Moderately conditioned random invertible matrix.
pub fn random_basis_change(rng: &mut impl Rng, n: usize) -> DMatrix<f64> {
    loop {
        let mut p = DMatrix::<f64>::identity(n, n);
        for i in 0..n {
            for j in 0..n {
                p[(i, j)] += rng.gen_range(-0.4..0.4);
            }
        }
        if p.determinant().abs() > 0.05 {
            return p;
        }
    }
}

/// Random hermitian structure: the standard pair conjugated by a random
/// basis change, so positivity and compatibility are exact by construction.
pub fn random_hermitian_space(rng: &mut impl Rng, m: usize) -> HermitianVectorSpace {
    let n = 2 * m;
    let std = HermitianVectorSpace::standard(m);
    let p = random_basis_change(rng, n);
    let p_inv = p.clone().try_inverse().expect("checked determinant");
    let j = &p * std.j_matrix() * &p_inv;
    let g = p_inv.transpose() * std.metric() * &p_inv;
    // symmetrize away rounding
    let g = (&g + g.transpose()) * 0.5;
    HermitianVectorSpace::new(g, j).expect("conjugated structure stays hermitian")
}

/// Random k-form with coefficients in [-1, 1].
pub fn random_kform(rng: &mut impl Rng, dim: usize, degree: usize) -> KForm {
    let len = KForm::zero(dim, degree).components().len();
    let comps: Vec<f64> = (0..len).map(|_| rng.gen_range(-1.0..1.0)).collect();
    KForm::from_components(dim, degree, comps).expect("length matches")
}

/// Random vector with entries in [-1, 1].
pub fn random_vector(rng: &mut impl Rng, dim: usize) -> DVector<f64> {
    DVector::from_fn(dim, |_, _| rng.gen_range(-1.0..1.0))
}

/// A random Lie algebra of even dimension: a direct sum of su(2),
/// 3-dimensional Heisenberg, sl(2,R)-type and abelian blocks, conjugated by
/// a random basis change (so the Jacobi identity holds exactly).
pub fn random_lie_algebra(rng: &mut impl Rng, dim: usize) -> LieAlgebra {
    let mut brackets: Vec<(usize, usize, usize, f64)> = Vec::new();
    let mut offset = 0;
    while offset + 3 <= dim {
        match rng.gen_range(0..4u8) {
            0 => {
                // su(2)-type block
                let s = rng.gen_range(0.5..2.0);
                brackets.push((offset + 1, offset + 2, offset, 2.0 * s));
                brackets.push((offset + 2, offset, offset + 1, 2.0 * s));
                brackets.push((offset, offset + 1, offset + 2, 2.0 * s));
            }
            1 => {
                // Heisenberg block
                let s = rng.gen_range(0.5..2.0);
                brackets.push((offset + 1, offset + 2, offset, 2.0 * s));
            }
            2 => {
                // sl(2,R)-type block
                let s = rng.gen_range(0.5..2.0);
                brackets.push((offset + 1, offset + 2, offset, 2.0 * s));
                brackets.push((offset + 2, offset, offset + 1, -2.0 * s));
                brackets.push((offset, offset + 1, offset + 2, -2.0 * s));
            }
            _ => {} // abelian block
        }
        offset += 3;
    }
    let alg = LieAlgebra::new(dim, brackets).expect("block algebras satisfy Jacobi");
    let p = random_basis_change(rng, dim);
    alg.change_basis(&p).expect("basis change preserves Jacobi")
}

/// A random hermitian frame: random algebra plus an unrelated random
/// hermitian pair. The almost complex structure is generally not
/// integrable; use [`conjugated_frame`] for integrable inputs.
pub fn random_hermitian_frame(rng: &mut impl Rng, m: usize) -> HermitianFrame {
    let space = random_hermitian_space(rng, m);
    let algebra = random_lie_algebra(rng, 2 * m);
    HermitianFrame::new(space, algebra).expect("independent data is compatible")
}

/// Conjugate a whole frame (brackets, metric and J) by a random basis
/// change. The result is isomorphic to the input, so every invariant —
/// integrability, parallel torsion, classification flags — is preserved
/// while the coordinate expression is scrambled.
pub fn conjugated_frame(rng: &mut impl Rng, frame: &HermitianFrame) -> HermitianFrame {
    let n = frame.dim();
    let p = random_basis_change(rng, n);
    frame.change_basis(&p).expect("conjugation preserves structure")
}

/// Random complex parameter in the upper half plane, bounded away from the
/// real axis so the modified metric stays well conditioned.
pub fn random_upper_half_plane(rng: &mut impl Rng) -> (f64, f64) {
    (rng.gen_range(-1.5..1.5), rng.gen_range(0.3..2.0))
}
