//! Left-invariant calculus on a Lie algebra frame: Chevalley-Eilenberg
//! differential, the Levi-Civita connection by the Koszul formula, covariant
//! derivatives, curvature and the two codifferentials.
//!
//! Only constant-coefficient tensors are modeled. Directional-derivative
//! terms in the Koszul and compatibility formulas vanish identically for
//! invariant data, so everything here is finite-dimensional linear algebra.
//!
//! The inner product on k-forms is the determinant extension of the metric:
//! increasing wedges of an orthonormal coframe form an orthonormal basis.
//! With that choice `<da, b> = <a, delta b>` holds on unimodular frames.

use nalgebra::{DMatrix, DVector};

use crate::error::{Error, Result};
use crate::multilinear::{HermitianVectorSpace, KForm};
use crate::JACOBI_TOLERANCE;

/// A Lie algebra given by structure constants `[e_i, e_j] = c^k_{ij} e_k`.
#[derive(Debug, Clone)]
pub struct LieAlgebra {
    dim: usize,
    /// Dense table `c[(i*n + j)*n + k]` = c^k_{ij}.
    c: Vec<f64>,
    /// Canonical sparse list with i < j, for serialization.
    sparse: Vec<(usize, usize, usize, f64)>,
}

impl LieAlgebra {
    /// Build from a sparse bracket list (0-based indices, any order;
    /// entries are antisymmetrized over the first two slots). Rejects
    /// structure constants whose Jacobi residual exceeds the fixed
    /// ingestion tolerance.
    pub fn new(dim: usize, brackets: Vec<(usize, usize, usize, f64)>) -> Result<Self> {
        let mut c = vec![0.0; dim * dim * dim];
        let at = |i: usize, j: usize, k: usize| (i * dim + j) * dim + k;
        for &(i, j, k, v) in &brackets {
            if i >= dim || j >= dim || k >= dim {
                return Err(Error::InvalidParameter(format!(
                    "bracket index out of range for dimension {dim}: ({i}, {j}, {k})"
                )));
            }
            if i == j {
                continue;
            }
            c[at(i, j, k)] += v;
            c[at(j, i, k)] -= v;
        }
        let mut sparse = Vec::new();
        for i in 0..dim {
            for j in i + 1..dim {
                for k in 0..dim {
                    let v = c[at(i, j, k)];
                    if v != 0.0 {
                        sparse.push((i, j, k, v));
                    }
                }
            }
        }
        let alg = LieAlgebra { dim, c, sparse };
        let res = alg.jacobi_residual();
        if res > JACOBI_TOLERANCE {
            return Err(Error::JacobiViolation(res));
        }
        Ok(alg)
    }

    pub fn abelian(dim: usize) -> Self {
        LieAlgebra {
            dim,
            c: vec![0.0; dim * dim * dim],
            sparse: Vec::new(),
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn structure_constant(&self, i: usize, j: usize, k: usize) -> f64 {
        self.c[(i * self.dim + j) * self.dim + k]
    }

    pub fn sparse_brackets(&self) -> &[(usize, usize, usize, f64)] {
        &self.sparse
    }

    pub fn bracket(&self, x: &DVector<f64>, y: &DVector<f64>) -> DVector<f64> {
        let n = self.dim;
        let mut out = DVector::zeros(n);
        for &(i, j, k, v) in &self.sparse {
            let coef = x[i] * y[j] - x[j] * y[i];
            out[k] += v * coef;
        }
        out
    }

    /// Max-norm residual of the Jacobi identity.
    pub fn jacobi_residual(&self) -> f64 {
        let n = self.dim;
        let cc = |i: usize, j: usize, k: usize| self.structure_constant(i, j, k);
        let mut worst: f64 = 0.0;
        for i in 0..n {
            for j in i + 1..n {
                for k in j + 1..n {
                    for l in 0..n {
                        let mut sum = 0.0;
                        for m in 0..n {
                            sum += cc(i, j, m) * cc(m, k, l)
                                + cc(j, k, m) * cc(m, i, l)
                                + cc(k, i, m) * cc(m, j, l);
                        }
                        worst = worst.max(sum.abs());
                    }
                }
            }
        }
        worst
    }

    /// Whether all adjoint maps are trace-free.
    pub fn is_unimodular(&self, tol: f64) -> bool {
        let n = self.dim;
        for i in 0..n {
            let mut tr = 0.0;
            for j in 0..n {
                tr += self.structure_constant(i, j, j);
            }
            if tr.abs() > tol {
                return false;
            }
        }
        true
    }

    /// Structure constants of the same algebra expressed in the basis whose
    /// vectors are the columns of `p`.
    pub fn change_basis(&self, p: &DMatrix<f64>) -> Result<LieAlgebra> {
        let n = self.dim;
        let p_inv = p
            .clone()
            .try_inverse()
            .ok_or_else(|| Error::InvalidParameter("singular basis change".into()))?;
        let mut brackets = Vec::new();
        for a in 0..n {
            for b in a + 1..n {
                let x = p.column(a).into_owned();
                let y = p.column(b).into_owned();
                let z = &p_inv * self.bracket(&x, &y);
                for k in 0..n {
                    if z[k].abs() > 1e-15 {
                        brackets.push((a, b, k, z[k]));
                    }
                }
            }
        }
        LieAlgebra::new(n, brackets)
    }

    /// Block-diagonal direct sum.
    pub fn direct_sum(&self, other: &LieAlgebra) -> LieAlgebra {
        let n = self.dim + other.dim;
        let mut brackets: Vec<(usize, usize, usize, f64)> = self.sparse.clone();
        for &(i, j, k, v) in &other.sparse {
            brackets.push((i + self.dim, j + self.dim, k + self.dim, v));
        }
        LieAlgebra::new(n, brackets).expect("direct sum preserves Jacobi")
    }
}

/// Metric connection coefficients `∇_{e_i} e_j = Γ^k_{ij} e_k`.
#[derive(Debug, Clone)]
pub struct Connection {
    dim: usize,
    /// `gamma[(i*n + j)*n + k]` = Γ^k_{ij}.
    gamma: Vec<f64>,
}

impl Connection {
    pub fn from_coefficients(dim: usize, gamma: Vec<f64>) -> Self {
        assert_eq!(gamma.len(), dim * dim * dim);
        Connection { dim, gamma }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn coefficient(&self, i: usize, j: usize, k: usize) -> f64 {
        self.gamma[(i * self.dim + j) * self.dim + k]
    }

    /// `∇_x y` for constant frame vectors.
    pub fn derive(&self, x: &DVector<f64>, y: &DVector<f64>) -> DVector<f64> {
        let n = self.dim;
        let mut out = DVector::zeros(n);
        for i in 0..n {
            if x[i] == 0.0 {
                continue;
            }
            for j in 0..n {
                if y[j] == 0.0 {
                    continue;
                }
                for k in 0..n {
                    out[k] += x[i] * y[j] * self.coefficient(i, j, k);
                }
            }
        }
        out
    }

    /// Residual of metric compatibility `g(∇_X Y, Z) + g(Y, ∇_X Z) = 0`.
    pub fn metric_compatibility_residual(&self, metric: &DMatrix<f64>) -> f64 {
        let n = self.dim;
        let mut worst: f64 = 0.0;
        for i in 0..n {
            for j in 0..n {
                for l in 0..n {
                    let mut sum = 0.0;
                    for k in 0..n {
                        sum += self.coefficient(i, j, k) * metric[(k, l)]
                            + self.coefficient(i, l, k) * metric[(k, j)];
                    }
                    worst = worst.max(sum.abs());
                }
            }
        }
        worst
    }

    /// Torsion `T(X, Y) = ∇_X Y - ∇_Y X - [X, Y]` as a (1,2) tensor,
    /// `T^k_{ij}`.
    pub fn torsion(&self, algebra: &LieAlgebra) -> Tensor {
        let n = self.dim;
        let mut t = Tensor::zeros(n, 3);
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    let v = self.coefficient(i, j, k)
                        - self.coefficient(j, i, k)
                        - algebra.structure_constant(i, j, k);
                    t.set(&[i, j, k], v);
                }
            }
        }
        t
    }
}

/// Dense covariant tensor of small valence in frame coordinates.
#[derive(Debug, Clone)]
pub struct Tensor {
    dim: usize,
    valence: usize,
    data: Vec<f64>,
}

impl Tensor {
    pub fn zeros(dim: usize, valence: usize) -> Self {
        Tensor {
            dim,
            valence,
            data: vec![0.0; dim.pow(valence as u32)],
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn valence(&self) -> usize {
        self.valence
    }

    fn offset(&self, idx: &[usize]) -> usize {
        debug_assert_eq!(idx.len(), self.valence);
        let mut off = 0;
        for &i in idx {
            off = off * self.dim + i;
        }
        off
    }

    pub fn get(&self, idx: &[usize]) -> f64 {
        self.data[self.offset(idx)]
    }

    pub fn set(&mut self, idx: &[usize], value: f64) {
        let off = self.offset(idx);
        self.data[off] = value;
    }

    pub fn add_assign(&mut self, idx: &[usize], value: f64) {
        let off = self.offset(idx);
        self.data[off] += value;
    }

    pub fn data(&self) -> &[f64] {
        &self.data
    }

    pub fn sub(&self, other: &Tensor) -> Tensor {
        assert_eq!(self.dim, other.dim);
        assert_eq!(self.valence, other.valence);
        Tensor {
            dim: self.dim,
            valence: self.valence,
            data: self
                .data
                .iter()
                .zip(&other.data)
                .map(|(a, b)| a - b)
                .collect(),
        }
    }

    /// Frobenius norm of the raw coefficients.
    pub fn coeff_norm(&self) -> f64 {
        self.data.iter().map(|x| x * x).sum::<f64>().sqrt()
    }

    /// Frobenius norm after transforming every index to an orthonormal
    /// basis, i.e. the metric norm of the covariant tensor.
    pub fn metric_norm(&self, space: &HermitianVectorSpace) -> f64 {
        let b = space.adapted_basis();
        let n = self.dim;
        let mut cur = self.data.clone();
        // transform one index at a time
        for axis in 0..self.valence {
            let stride_after: usize = n.pow((self.valence - 1 - axis) as u32);
            let stride_before: usize = n.pow(axis as u32);
            let mut next = vec![0.0; cur.len()];
            for pre in 0..stride_before {
                for a in 0..n {
                    for post in 0..stride_after {
                        let mut acc = 0.0;
                        for i in 0..n {
                            let off = (pre * n + i) * stride_after + post;
                            acc += b[(i, a)] * cur[off];
                        }
                        next[(pre * n + a) * stride_after + post] = acc;
                    }
                }
            }
            cur = next;
        }
        cur.iter().map(|x| x * x).sum::<f64>().sqrt()
    }

    /// Expand an alternating form into a full tensor.
    pub fn from_kform(form: &KForm) -> Tensor {
        let n = form.dim();
        let k = form.degree();
        let mut t = Tensor::zeros(n, k);
        if k == 0 {
            t.data[0] = form.components()[0];
            return t;
        }
        let mut idx = vec![0usize; k];
        fill_antisymmetric(form, &mut t, &mut idx, 0);
        t
    }
}

fn fill_antisymmetric(form: &KForm, t: &mut Tensor, idx: &mut Vec<usize>, depth: usize) {
    let n = form.dim();
    if depth == idx.len() {
        // sort with sign; repeated indices give zero
        let mut sorted: Vec<usize> = idx.clone();
        let mut sign = 1.0;
        for i in 0..sorted.len() {
            for j in (i + 1..sorted.len()).rev() {
                if sorted[j - 1] > sorted[j] {
                    sorted.swap(j - 1, j);
                    sign = -sign;
                }
            }
        }
        if sorted.windows(2).any(|w| w[0] == w[1]) {
            return;
        }
        let v = sign * form.component(&sorted);
        t.set(idx, v);
        return;
    }
    for i in 0..n {
        idx[depth] = i;
        fill_antisymmetric(form, t, idx, depth + 1);
    }
}

/// Chevalley-Eilenberg differential of an invariant form:
/// `da(X_0,…,X_k) = Σ_{i<j} (-1)^{i+j} a([X_i, X_j], X_0,…,X̂_i,…,X̂_j,…)`.
/// For a 1-form this is `da(X, Y) = -a([X, Y])`. On top-degree forms the
/// result is the zero form (not an error).
pub fn exterior_derivative(a: &KForm, algebra: &LieAlgebra) -> KForm {
    let n = algebra.dim();
    assert_eq!(a.dim(), n, "form and algebra dimensions must agree");
    let k = a.degree();
    let mut out = KForm::zero(n, k + 1);
    if k + 1 > n {
        return out;
    }
    // da(e_{s_0}, …, e_{s_k}) over increasing sets s
    let sets = crate::multilinear::index_sets(n, k + 1);
    for set in sets.iter() {
        let mut val = 0.0;
        for i in 0..set.len() {
            for j in i + 1..set.len() {
                let mut rest: Vec<usize> = Vec::with_capacity(k.saturating_sub(1));
                for (pos, &s) in set.iter().enumerate() {
                    if pos != i && pos != j {
                        rest.push(s);
                    }
                }
                let sign = if (i + j) % 2 == 0 { 1.0 } else { -1.0 };
                // a([e_i, e_j], rest…) = Σ_l c^l_{ij} a(e_l, rest…), and
                // a(e_l, rest…) = (-1)^pos a(sorted) with pos the slot l
                // takes in the sorted set.
                for l in 0..n {
                    let c = algebra.structure_constant(set[i], set[j], l);
                    if c == 0.0 {
                        continue;
                    }
                    if let Some((full, ins)) = crate::multilinear::insert_sign(l, &rest) {
                        val += sign * c * ins * a.component(&full);
                    }
                }
            }
        }
        if val != 0.0 {
            out.set_component(set, val);
        }
    }
    out
}

/// Levi-Civita connection by the Koszul formula restricted to invariant
/// fields: `2 g(∇_X Y, Z) = g([X,Y], Z) - g([Y,Z], X) + g([Z,X], Y)`.
pub fn levi_civita(metric: &DMatrix<f64>, algebra: &LieAlgebra) -> Connection {
    let n = algebra.dim();
    let metric_inv = metric
        .clone()
        .try_inverse()
        .expect("metric validated at frame construction");
    let g_of = |i: usize, j: usize, l: usize| -> f64 {
        // g([e_i, e_j], e_l)
        let mut acc = 0.0;
        for k in 0..n {
            let c = algebra.structure_constant(i, j, k);
            if c != 0.0 {
                acc += c * metric[(k, l)];
            }
        }
        acc
    };
    let mut gamma = vec![0.0; n * n * n];
    for i in 0..n {
        for j in 0..n {
            // rhs_l = 2 g(∇_{e_i} e_j, e_l)
            let mut rhs = DVector::<f64>::zeros(n);
            for l in 0..n {
                rhs[l] = g_of(i, j, l) - g_of(j, l, i) + g_of(l, i, j);
            }
            let coeffs = &metric_inv * rhs * 0.5;
            for k in 0..n {
                gamma[(i * n + j) * n + k] = coeffs[k];
            }
        }
    }
    Connection::from_coefficients(n, gamma)
}

/// Covariant derivative of an invariant covariant tensor; the new (first)
/// index is the direction. Valence of the input is capped at 4.
pub fn covariant_derivative(t: &Tensor, conn: &Connection) -> Result<Tensor> {
    if t.valence() > 4 {
        return Err(Error::UnsupportedValence(t.valence()));
    }
    let n = t.dim();
    let r = t.valence();
    let mut out = Tensor::zeros(n, r + 1);
    let mut idx = vec![0usize; r];
    loop {
        for x in 0..n {
            let mut acc = 0.0;
            for slot in 0..r {
                let orig = idx[slot];
                let mut probe = idx.clone();
                for k in 0..n {
                    let g = conn.coefficient(x, orig, k);
                    if g == 0.0 {
                        continue;
                    }
                    probe[slot] = k;
                    acc -= g * t.get(&probe);
                }
                probe[slot] = orig;
            }
            let mut full = Vec::with_capacity(r + 1);
            full.push(x);
            full.extend_from_slice(&idx);
            out.set(&full, acc);
        }
        // advance multi-index
        let mut pos = r;
        loop {
            if pos == 0 {
                return Ok(out);
            }
            pos -= 1;
            idx[pos] += 1;
            if idx[pos] < n {
                break;
            }
            idx[pos] = 0;
            if pos == 0 {
                return Ok(out);
            }
        }
        if r == 0 {
            return Ok(out);
        }
    }
}

/// Covariant derivative of a k-form along every frame direction.
pub fn covariant_derivative_form(a: &KForm, conn: &Connection) -> Vec<KForm> {
    let n = a.dim();
    let k = a.degree();
    let sets = crate::multilinear::index_sets(n, k);
    let mut out = Vec::with_capacity(n);
    for x in 0..n {
        let mut da = KForm::zero(n, k);
        for set in sets.iter() {
            let mut acc = 0.0;
            for (slot, &orig) in set.iter().enumerate() {
                let mut reduced: Vec<usize> = set.to_vec();
                reduced.remove(slot);
                // a(…, e_j at `slot`, …) = (-1)^slot a(e_j, reduced…)
                //                        = (-1)^slot (-1)^pos a(sorted)
                let slot_sign = if slot % 2 == 0 { 1.0 } else { -1.0 };
                for j in 0..n {
                    let g = conn.coefficient(x, orig, j);
                    if g == 0.0 {
                        continue;
                    }
                    if let Some((full, ins)) = crate::multilinear::insert_sign(j, &reduced) {
                        acc -= g * slot_sign * ins * a.component(&full);
                    }
                }
            }
            if acc != 0.0 {
                da.set_component(set, acc);
            }
        }
        out.push(da);
    }
    out
}

/// Curvature of a connection as the lowered 4-tensor
/// `R(X,Y,Z,V) = g((∇_X ∇_Y - ∇_Y ∇_X - ∇_{[X,Y]}) Z, V)`.
pub fn curvature(conn: &Connection, algebra: &LieAlgebra, metric: &DMatrix<f64>) -> Tensor {
    let n = conn.dim();
    let mut r = Tensor::zeros(n, 4);
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                // R(e_i, e_j) e_k (upper index m)
                let mut vec = DVector::<f64>::zeros(n);
                for m in 0..n {
                    let mut acc = 0.0;
                    for l in 0..n {
                        acc += conn.coefficient(j, k, l) * conn.coefficient(i, l, m)
                            - conn.coefficient(i, k, l) * conn.coefficient(j, l, m);
                    }
                    for l in 0..n {
                        let c = algebra.structure_constant(i, j, l);
                        if c != 0.0 {
                            acc -= c * conn.coefficient(l, k, m);
                        }
                    }
                    vec[m] = acc;
                }
                for v in 0..n {
                    let mut low = 0.0;
                    for m in 0..n {
                        low += vec[m] * metric[(m, v)];
                    }
                    r.set(&[i, j, k, v], low);
                }
            }
        }
    }
    r
}

/// A Lie algebra carrying a hermitian structure; the universe every
/// hermitian computation runs in.
#[derive(Debug, Clone)]
pub struct HermitianFrame {
    space: HermitianVectorSpace,
    algebra: LieAlgebra,
}

impl HermitianFrame {
    pub fn new(space: HermitianVectorSpace, algebra: LieAlgebra) -> Result<Self> {
        if space.dim() != algebra.dim() {
            return Err(Error::FrameMismatch {
                left: space.dim(),
                right: algebra.dim(),
            });
        }
        Ok(HermitianFrame { space, algebra })
    }

    pub fn dim(&self) -> usize {
        self.space.dim()
    }

    pub fn complex_dim(&self) -> usize {
        self.space.complex_dim()
    }

    pub fn space(&self) -> &HermitianVectorSpace {
        &self.space
    }

    pub fn algebra(&self) -> &LieAlgebra {
        &self.algebra
    }

    pub fn metric(&self) -> &DMatrix<f64> {
        self.space.metric()
    }

    pub fn exterior_derivative(&self, a: &KForm) -> KForm {
        exterior_derivative(a, &self.algebra)
    }

    pub fn levi_civita(&self) -> Connection {
        levi_civita(self.space.metric(), &self.algebra)
    }

    /// Codifferential `delta = -*d*` (the frame is even-dimensional).
    pub fn codifferential(&self, a: &KForm) -> Result<KForm> {
        if a.degree() == 0 {
            return Err(Error::DegreeUnderflow { needed: 1, got: 0 });
        }
        let star = self.space.hodge_star(a)?;
        let dstar = self.exterior_derivative(&star);
        Ok(self.space.hodge_star(&dstar)?.scale(-1.0))
    }

    /// Connection codifferential `delta^∇ a = -Σ_i e_i ⌟ ∇_{e_i} a` over an
    /// orthonormal basis; vanishes on ∇-parallel forms.
    pub fn nabla_codifferential(&self, a: &KForm, conn: &Connection) -> Result<KForm> {
        if a.degree() == 0 {
            return Err(Error::DegreeUnderflow { needed: 1, got: 0 });
        }
        let n = self.dim();
        let derivatives = covariant_derivative_form(a, conn);
        let b = self.space.adapted_basis();
        let mut out = KForm::zero(n, a.degree() - 1);
        for col in 0..n {
            let dir = b.column(col).into_owned();
            // ∇_{b} a = Σ_i b^i ∇_{e_i} a
            let mut nabla = KForm::zero(n, a.degree());
            for i in 0..n {
                if dir[i] != 0.0 {
                    nabla = nabla.add(&derivatives[i].scale(dir[i]));
                }
            }
            out = out.add(&nabla.interior(&dir)?.scale(-1.0));
        }
        Ok(out)
    }

    /// Express the same frame in the basis given by the columns of `p`.
    pub fn change_basis(&self, p: &DMatrix<f64>) -> Result<HermitianFrame> {
        let p_inv = p
            .clone()
            .try_inverse()
            .ok_or_else(|| Error::InvalidParameter("singular basis change".into()))?;
        let g = p.transpose() * self.space.metric() * p;
        let g = (&g + g.transpose()) * 0.5;
        let j = &p_inv * self.space.j_matrix() * p;
        let space = HermitianVectorSpace::with_tolerance(g, j, self.space.tolerance())?;
        let algebra = self.algebra.change_basis(p)?;
        HermitianFrame::new(space, algebra)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::multilinear::KForm;
    use crate::sampling;
    use rand::Rng;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn heisenberg4() -> LieAlgebra {
        // [e_1, e_2] = 2 e_0 in 0-based indices, fourth direction central
        LieAlgebra::new(4, vec![(1, 2, 0, 2.0)]).unwrap()
    }

    fn su2_algebra(scale: f64) -> LieAlgebra {
        LieAlgebra::new(
            3,
            vec![
                (1, 2, 0, scale),
                (2, 0, 1, scale),
                (0, 1, 2, scale),
            ],
        )
        .unwrap()
    }

    #[test]
    fn abelian_frame_has_zero_differential() {
        let alg = LieAlgebra::abelian(4);
        for i in 0..4 {
            let a = KForm::basis_covector(4, i);
            assert!(exterior_derivative(&a, &alg).coeff_norm() < 1e-15);
        }
    }

    #[test]
    fn heisenberg_differential_matches_hand_computation() {
        let alg = heisenberg4();
        let d = exterior_derivative(&KForm::basis_covector(4, 0), &alg);
        // d e^0 = -2 e^1 ∧ e^2
        let mut expected = KForm::zero(4, 2);
        expected.set_component(&[1, 2], -2.0);
        assert!(d.sub(&expected).coeff_norm() < 1e-14);
    }

    #[test]
    fn d_squared_vanishes_on_su2() {
        let alg = su2_algebra(2.0);
        for i in 0..3 {
            let a = KForm::basis_covector(3, i);
            let dda = exterior_derivative(&exterior_derivative(&a, &alg), &alg);
            assert!(dda.coeff_norm() < 1e-13);
        }
    }

    #[test]
    fn d_squared_vanishes_on_random_frames() {
        let mut rng = ChaCha8Rng::seed_from_u64(41);
        for _ in 0..20 {
            let alg = sampling::random_lie_algebra(&mut rng, 6);
            for k in 0..3 {
                let a = sampling::random_kform(&mut rng, 6, k);
                let dda = exterior_derivative(&exterior_derivative(&a, &alg), &alg);
                assert!(dda.coeff_norm() < 1e-10, "d^2 residual {}", dda.coeff_norm());
            }
        }
    }

    #[test]
    fn exterior_derivative_satisfies_leibniz() {
        let mut rng = ChaCha8Rng::seed_from_u64(73);
        for _ in 0..20 {
            let alg = sampling::random_lie_algebra(&mut rng, 6);
            for p in 1..3usize {
                let a = sampling::random_kform(&mut rng, 6, p);
                let b = sampling::random_kform(&mut rng, 6, 2);
                let lhs = exterior_derivative(&a.wedge(&b).unwrap(), &alg);
                let sign = if p % 2 == 0 { 1.0 } else { -1.0 };
                let rhs = exterior_derivative(&a, &alg)
                    .wedge(&b)
                    .unwrap()
                    .add(&a.wedge(&exterior_derivative(&b, &alg)).unwrap().scale(sign));
                assert!(lhs.sub(&rhs).coeff_norm() < 1e-11);
            }
        }
    }

    #[test]
    fn form_and_tensor_covariant_derivatives_agree() {
        let mut rng = ChaCha8Rng::seed_from_u64(79);
        let frame = sampling::random_hermitian_frame(&mut rng, 3);
        let conn = frame.levi_civita();
        for k in 1..4usize {
            let a = sampling::random_kform(&mut rng, 6, k);
            let by_form = covariant_derivative_form(&a, &conn);
            let by_tensor = covariant_derivative(&Tensor::from_kform(&a), &conn).unwrap();
            let n = frame.dim();
            for x in 0..n {
                let t = Tensor::from_kform(&by_form[x]);
                let mut idx = vec![0usize; k];
                loop {
                    let mut full = vec![x];
                    full.extend_from_slice(&idx);
                    assert!((t.get(&idx) - by_tensor.get(&full)).abs() < 1e-12);
                    let mut pos = k;
                    let done = loop {
                        if pos == 0 {
                            break true;
                        }
                        pos -= 1;
                        idx[pos] += 1;
                        if idx[pos] < n {
                            break false;
                        }
                        idx[pos] = 0;
                    };
                    if done {
                        break;
                    }
                }
            }
        }
    }

    #[test]
    fn jacobi_violation_is_rejected() {
        // [e_0, e_1] = e_1 and [e_1, e_2] = e_0 leave a residual e_0 in the
        // cyclic sum over (e_0, e_1, e_2).
        let r = LieAlgebra::new(3, vec![(0, 1, 1, 1.0), (1, 2, 0, 1.0)]);
        assert!(matches!(r, Err(Error::JacobiViolation(_))));
    }

    #[test]
    fn random_bracket_perturbation_is_rejected() {
        let mut rng = ChaCha8Rng::seed_from_u64(43);
        let mut accepted = 0;
        for _ in 0..50 {
            let alg = sampling::random_lie_algebra(&mut rng, 6);
            if alg.sparse_brackets().is_empty() {
                continue;
            }
            let mut brackets = alg.sparse_brackets().to_vec();
            // perturb one constant well past the ingestion tolerance
            brackets[0].3 += 0.1;
            let other: Vec<_> = brackets.iter().map(|&(i, j, k, _)| (i, j, k)).collect();
            // only count algebras where the perturbed constant actually
            // feeds a Jacobi term
            if LieAlgebra::new(6, brackets).is_err() {
                accepted += 1;
            }
            let _ = other;
        }
        assert!(accepted > 0, "no perturbation tripped the Jacobi gate");
    }

    #[test]
    fn levi_civita_is_torsion_free_and_metric_compatible() {
        let mut rng = ChaCha8Rng::seed_from_u64(47);
        for _ in 0..20 {
            let frame = sampling::random_hermitian_frame(&mut rng, 3);
            let conn = frame.levi_civita();
            let torsion = conn.torsion(frame.algebra());
            assert!(torsion.coeff_norm() < 1e-12, "torsion {}", torsion.coeff_norm());
            let res = conn.metric_compatibility_residual(frame.metric());
            assert!(res < 1e-12, "compatibility {res}");
        }
    }

    #[test]
    fn abelian_levi_civita_vanishes() {
        let alg = LieAlgebra::abelian(4);
        let metric = DMatrix::<f64>::identity(4, 4);
        let conn = levi_civita(&metric, &alg);
        assert!(conn.gamma.iter().all(|&x| x.abs() < 1e-15));
    }

    #[test]
    fn biinvariant_su2_connection_is_half_bracket() {
        let alg = su2_algebra(2.0);
        let metric = DMatrix::<f64>::identity(3, 3);
        let conn = levi_civita(&metric, &alg);
        for i in 0..3 {
            for j in 0..3 {
                for k in 0..3 {
                    let expected = 0.5 * alg.structure_constant(i, j, k);
                    assert!((conn.coefficient(i, j, k) - expected).abs() < 1e-13);
                }
            }
        }
    }

    #[test]
    fn covariant_derivative_of_metric_vanishes() {
        let mut rng = ChaCha8Rng::seed_from_u64(53);
        for _ in 0..10 {
            let frame = sampling::random_hermitian_frame(&mut rng, 3);
            let conn = frame.levi_civita();
            let n = frame.dim();
            let mut g = Tensor::zeros(n, 2);
            for i in 0..n {
                for j in 0..n {
                    g.set(&[i, j], frame.metric()[(i, j)]);
                }
            }
            let dg = covariant_derivative(&g, &conn).unwrap();
            assert!(dg.coeff_norm() < 1e-12);
        }
    }

    #[test]
    fn covariant_derivative_respects_leibniz_against_contraction() {
        // ∇(t(Y, Z)) = (∇t)(·; Y, Z) + t(∇Y, Z) + t(Y, ∇Z) for constant
        // vectors reduces to (∇_X t)(Y,Z) = -t(∇_X Y, Z) - t(Y, ∇_X Z).
        let mut rng = ChaCha8Rng::seed_from_u64(59);
        let frame = sampling::random_hermitian_frame(&mut rng, 2);
        let conn = frame.levi_civita();
        let n = frame.dim();
        let mut t = Tensor::zeros(n, 2);
        for i in 0..n {
            for j in 0..n {
                t.set(&[i, j], rng.gen_range(-1.0..1.0));
            }
        }
        let dt = covariant_derivative(&t, &conn).unwrap();
        for x in 0..n {
            let ex = DVector::from_fn(n, |r, _| if r == x { 1.0 } else { 0.0 });
            for y in 0..n {
                let ey = DVector::from_fn(n, |r, _| if r == y { 1.0 } else { 0.0 });
                for z in 0..n {
                    let ez = DVector::from_fn(n, |r, _| if r == z { 1.0 } else { 0.0 });
                    let dy = conn.derive(&ex, &ey);
                    let dz = conn.derive(&ex, &ez);
                    let mut rhs = 0.0;
                    for k in 0..n {
                        rhs -= dy[k] * t.get(&[k, z]) + dz[k] * t.get(&[y, k]);
                    }
                    assert!((dt.get(&[x, y, z]) - rhs).abs() < 1e-12);
                }
            }
        }
    }

    #[test]
    fn covariant_derivative_valence_cap() {
        let t = Tensor::zeros(4, 5);
        let conn = Connection::from_coefficients(4, vec![0.0; 64]);
        assert!(matches!(
            covariant_derivative(&t, &conn),
            Err(Error::UnsupportedValence(5))
        ));
    }

    #[test]
    fn curvature_of_flat_frame_vanishes() {
        let alg = LieAlgebra::abelian(4);
        let metric = DMatrix::<f64>::identity(4, 4);
        let conn = levi_civita(&metric, &alg);
        let r = curvature(&conn, &alg, &metric);
        assert!(r.coeff_norm() < 1e-15);
    }

    #[test]
    fn curvature_antisymmetries() {
        let mut rng = ChaCha8Rng::seed_from_u64(61);
        let frame = sampling::random_hermitian_frame(&mut rng, 3);
        let conn = frame.levi_civita();
        let r = curvature(&conn, frame.algebra(), frame.metric());
        let n = frame.dim();
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    for l in 0..n {
                        let a = r.get(&[i, j, k, l]);
                        assert!((a + r.get(&[j, i, k, l])).abs() < 1e-11);
                        assert!((a + r.get(&[i, j, l, k])).abs() < 1e-11);
                    }
                }
            }
        }
    }

    #[test]
    fn codifferential_is_adjoint_on_unimodular_frames() {
        let mut rng = ChaCha8Rng::seed_from_u64(67);
        for _ in 0..20 {
            let frame = sampling::random_hermitian_frame(&mut rng, 3);
            if !frame.algebra().is_unimodular(1e-12) {
                continue;
            }
            for k in 1..4usize {
                let a = sampling::random_kform(&mut rng, 6, k - 1);
                let b = sampling::random_kform(&mut rng, 6, k);
                let lhs = frame
                    .space()
                    .form_inner(&frame.exterior_derivative(&a), &b);
                let rhs = frame
                    .space()
                    .form_inner(&a, &frame.codifferential(&b).unwrap());
                assert!((lhs - rhs).abs() < 1e-9, "adjointness defect {}", lhs - rhs);
            }
        }
    }

    #[test]
    fn nabla_codifferential_matches_codifferential_for_levi_civita() {
        // For the Levi-Civita connection delta^∇ coincides with -*d*.
        let mut rng = ChaCha8Rng::seed_from_u64(71);
        for _ in 0..10 {
            let frame = sampling::random_hermitian_frame(&mut rng, 3);
            let conn = frame.levi_civita();
            for k in 1..4usize {
                let a = sampling::random_kform(&mut rng, 6, k);
                let lhs = frame.nabla_codifferential(&a, &conn).unwrap();
                let rhs = frame.codifferential(&a).unwrap();
                assert!(
                    frame.space().form_norm(&lhs.sub(&rhs)) < 1e-9,
                    "delta mismatch at degree {k}"
                );
            }
        }
    }

    #[test]
    fn codifferential_rejects_scalars() {
        let frame = HermitianFrame::new(
            HermitianVectorSpace::standard(2),
            LieAlgebra::abelian(4),
        )
        .unwrap();
        assert!(matches!(
            frame.codifferential(&KForm::scalar(4, 1.0)),
            Err(Error::DegreeUnderflow { .. })
        ));
    }

    #[test]
    fn top_degree_differential_is_zero_form() {
        let alg = heisenberg4();
        let top = KForm::from_components(4, 4, vec![1.0]).unwrap();
        let d = exterior_derivative(&top, &alg);
        assert_eq!(d.degree(), 5);
        assert_eq!(d.components().len(), 0);
    }
}
