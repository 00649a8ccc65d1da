//! Exterior algebra, Hodge star and U(m)-type decomposition over a
//! 2m-dimensional real inner-product space with a compatible complex
//! structure.
//!
//! Forms are stored densely over strictly increasing multi-indices in
//! lexicographic order; dimensions stay tiny (2m <= 12) so nothing is
//! sparse. The evaluation convention is the determinant one:
//! `(e^1 ∧ e^2)(e_1, e_2) = 1`, no factorial weights.
//!
//! Operators induced by `J` follow the group/algebra split
//!
//! ```text
//! (𝔍 a)(X_1, …, X_k) = (-1)^k a(J X_1, …, J X_k)      (group action)
//! (J.a)(X_1, …, X_k) = -Σ_i a(X_1, …, J X_i, …, X_k)  (algebra action)
//! ```
//!
//! Note `𝔍` is multiplicative over wedge products and squares to `(-1)^k`
//! on k-forms.

use nalgebra::{DMatrix, DVector};

use crate::error::{Error, Result};
use crate::DEFAULT_TOLERANCE;

/// Binomial coefficient; arguments are tiny (n <= 16).
pub(crate) fn binomial(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: usize = 1;
    for i in 0..k {
        acc = acc * (n - i) / (i + 1);
    }
    acc
}

/// Rank of a strictly increasing multi-index in the lexicographic order of
/// all k-subsets of {0, …, n-1}.
pub(crate) fn rank_index(n: usize, idx: &[usize]) -> usize {
    let k = idx.len();
    let mut rank = 0usize;
    let mut prev: isize = -1;
    for (pos, &c) in idx.iter().enumerate() {
        for x in (prev + 1) as usize..c {
            rank += binomial(n - 1 - x, k - 1 - pos);
        }
        prev = c as isize;
    }
    rank
}

/// Enumerate all strictly increasing k-subsets of {0, …, n-1} in
/// lexicographic order.
pub(crate) fn index_sets(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::with_capacity(binomial(n, k));
    if k > n {
        return out;
    }
    let mut cur: Vec<usize> = (0..k).collect();
    loop {
        out.push(cur.clone());
        // advance to next combination
        let mut i = k;
        loop {
            if i == 0 {
                return out;
            }
            i -= 1;
            if cur[i] != i + n - k {
                break;
            }
            if i == 0 {
                return out;
            }
        }
        cur[i] += 1;
        for j in i + 1..k {
            cur[j] = cur[j - 1] + 1;
        }
    }
}

/// Merge two disjoint increasing index sets, returning the permutation sign
/// of the concatenation (a, b) relative to the sorted result. Returns `None`
/// when the sets intersect.
pub(crate) fn merge_sign(a: &[usize], b: &[usize]) -> Option<(Vec<usize>, f64)> {
    let mut merged = Vec::with_capacity(a.len() + b.len());
    let mut sign = 1.0;
    let (mut i, mut j) = (0usize, 0usize);
    while i < a.len() && j < b.len() {
        if a[i] == b[j] {
            return None;
        }
        if a[i] < b[j] {
            merged.push(a[i]);
            i += 1;
        } else {
            // b[j] jumps over the remaining entries of a
            if (a.len() - i) % 2 == 1 {
                sign = -sign;
            }
            merged.push(b[j]);
            j += 1;
        }
    }
    merged.extend_from_slice(&a[i..]);
    merged.extend_from_slice(&b[j..]);
    Some((merged, sign))
}

/// Insert one index into an increasing set; sign is (-1)^(position).
pub(crate) fn insert_sign(i: usize, set: &[usize]) -> Option<(Vec<usize>, f64)> {
    if set.contains(&i) {
        return None;
    }
    let pos = set.iter().take_while(|&&x| x < i).count();
    let mut out = Vec::with_capacity(set.len() + 1);
    out.extend_from_slice(&set[..pos]);
    out.push(i);
    out.extend_from_slice(&set[pos..]);
    let sign = if pos % 2 == 0 { 1.0 } else { -1.0 };
    Some((out, sign))
}

/// A degree-k alternating form with constant coefficients in the frame
/// basis. Scalars are degree-0 forms so contractions stay total.
#[derive(Debug, Clone, PartialEq)]
pub struct KForm {
    dim: usize,
    degree: usize,
    comps: Vec<f64>,
}

impl KForm {
    pub fn zero(dim: usize, degree: usize) -> Self {
        KForm {
            dim,
            degree,
            comps: vec![0.0; binomial(dim, degree)],
        }
    }

    pub fn scalar(dim: usize, value: f64) -> Self {
        KForm {
            dim,
            degree: 0,
            comps: vec![value],
        }
    }

    /// The basis covector `e^i` (0-based index).
    pub fn basis_covector(dim: usize, i: usize) -> Self {
        let mut f = KForm::zero(dim, 1);
        f.comps[i] = 1.0;
        f
    }

    pub fn from_components(dim: usize, degree: usize, comps: Vec<f64>) -> Result<Self> {
        if comps.len() != binomial(dim, degree) {
            return Err(Error::FrameMismatch {
                left: comps.len(),
                right: binomial(dim, degree),
            });
        }
        Ok(KForm { dim, degree, comps })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn components(&self) -> &[f64] {
        &self.comps
    }

    /// Component at a strictly increasing multi-index (0-based).
    pub fn component(&self, idx: &[usize]) -> f64 {
        debug_assert!(idx.windows(2).all(|w| w[0] < w[1]));
        self.comps[rank_index(self.dim, idx)]
    }

    pub fn set_component(&mut self, idx: &[usize], value: f64) {
        let r = rank_index(self.dim, idx);
        self.comps[r] = value;
    }

    /// Evaluate on frame vectors given as coordinate columns.
    pub fn eval(&self, args: &[DVector<f64>]) -> f64 {
        assert_eq!(args.len(), self.degree, "argument count must match degree");
        if self.degree == 0 {
            return self.comps[0];
        }
        let sets = index_sets(self.dim, self.degree);
        let k = self.degree;
        let mut total = 0.0;
        for (r, set) in sets.iter().enumerate() {
            let c = self.comps[r];
            if c == 0.0 {
                continue;
            }
            let mut minor = DMatrix::<f64>::zeros(k, k);
            for (row, &i) in set.iter().enumerate() {
                for (col, v) in args.iter().enumerate() {
                    minor[(row, col)] = v[i];
                }
            }
            total += c * minor.determinant();
        }
        total
    }

    pub fn scale(&self, s: f64) -> Self {
        KForm {
            dim: self.dim,
            degree: self.degree,
            comps: self.comps.iter().map(|c| c * s).collect(),
        }
    }

    pub fn add(&self, other: &KForm) -> KForm {
        assert_eq!(self.dim, other.dim);
        assert_eq!(self.degree, other.degree);
        KForm {
            dim: self.dim,
            degree: self.degree,
            comps: self
                .comps
                .iter()
                .zip(&other.comps)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    pub fn sub(&self, other: &KForm) -> KForm {
        self.add(&other.scale(-1.0))
    }

    /// Raw euclidean norm of the coefficient vector. Metric-aware norms live
    /// on [`HermitianVectorSpace`].
    pub fn coeff_norm(&self) -> f64 {
        self.comps.iter().map(|c| c * c).sum::<f64>().sqrt()
    }

    /// Standard alternating product. Degrees add; a result of degree above
    /// the dimension is the zero form with no components.
    pub fn wedge(&self, other: &KForm) -> Result<KForm> {
        if self.dim != other.dim {
            return Err(Error::FrameMismatch {
                left: self.dim,
                right: other.dim,
            });
        }
        let n = self.dim;
        let degree = self.degree + other.degree;
        let mut out = KForm::zero(n, degree);
        if degree > n {
            return Ok(out);
        }
        let left_sets = index_sets(n, self.degree);
        let right_sets = index_sets(n, other.degree);
        for (ra, ia) in left_sets.iter().enumerate() {
            let ca = self.comps[ra];
            if ca == 0.0 {
                continue;
            }
            for (rb, ib) in right_sets.iter().enumerate() {
                let cb = other.comps[rb];
                if cb == 0.0 {
                    continue;
                }
                if let Some((merged, sign)) = merge_sign(ia, ib) {
                    out.comps[rank_index(n, &merged)] += sign * ca * cb;
                }
            }
        }
        Ok(out)
    }

    /// Interior product (contraction in the first slot) with a frame vector.
    pub fn interior(&self, v: &DVector<f64>) -> Result<KForm> {
        if v.len() != self.dim {
            return Err(Error::FrameMismatch {
                left: v.len(),
                right: self.dim,
            });
        }
        if self.degree == 0 {
            return Err(Error::DegreeUnderflow {
                needed: 1,
                got: 0,
            });
        }
        let n = self.dim;
        let mut out = KForm::zero(n, self.degree - 1);
        let targets = index_sets(n, self.degree - 1);
        for (rk, set) in targets.iter().enumerate() {
            let mut acc = 0.0;
            for i in 0..n {
                if v[i] == 0.0 {
                    continue;
                }
                if let Some((full, sign)) = insert_sign(i, set) {
                    acc += sign * v[i] * self.comps[rank_index(n, &full)];
                }
            }
            out.comps[rk] = acc;
        }
        Ok(out)
    }

    /// Components with respect to a new basis whose vectors are the columns
    /// of `basis` in frame coordinates (i.e. the pullback along that matrix).
    pub fn pullback(&self, basis: &DMatrix<f64>) -> KForm {
        assert_eq!(basis.nrows(), self.dim);
        assert_eq!(basis.ncols(), self.dim);
        let n = self.dim;
        let k = self.degree;
        if k == 0 {
            return self.clone();
        }
        let sets = index_sets(n, k);
        let mut out = KForm::zero(n, k);
        for (ra, target) in sets.iter().enumerate() {
            let mut acc = 0.0;
            for (rs, source) in sets.iter().enumerate() {
                let c = self.comps[rs];
                if c == 0.0 {
                    continue;
                }
                let mut minor = DMatrix::<f64>::zeros(k, k);
                for (row, &i) in source.iter().enumerate() {
                    for (col, &a) in target.iter().enumerate() {
                        minor[(row, col)] = basis[(i, a)];
                    }
                }
                acc += c * minor.determinant();
            }
            out.comps[ra] = acc;
        }
        out
    }
}

impl std::ops::Add for &KForm {
    type Output = KForm;
    fn add(self, rhs: &KForm) -> KForm {
        KForm::add(self, rhs)
    }
}

impl std::ops::Sub for &KForm {
    type Output = KForm;
    fn sub(self, rhs: &KForm) -> KForm {
        KForm::sub(self, rhs)
    }
}

/// Result of the U(m)-type projection of a 2- or 3-form.
#[derive(Debug, Clone)]
pub enum TypeSplit {
    /// Degree 2: the (1,1) part and the (2,0)+(0,2) part.
    Two { one_one: KForm, two_zero: KForm },
    /// Degree 3: the (2,1)+(1,2) part, the (3,0)+(0,3) part, and the
    /// trace/trace-free refinement of the mixed part.
    Three {
        mixed: KForm,
        pure: KForm,
        mixed_trace: KForm,
        mixed_trace_free: KForm,
    },
}

/// A 2m-dimensional real vector space with a positive metric and a
/// compatible complex structure.
///
/// An adapted orthonormal basis (`J b_{2i} = b_{2i+1}` in 0-based pairs) is
/// built once at construction by a Gram-Schmidt pass that alternates with
/// `J`; the Hodge star, form inner products and the omega-trace all reduce
/// to combinatorics in that basis. Orientation is the one induced by `J`,
/// so the volume form is `omega^m / m!`.
#[derive(Debug, Clone)]
pub struct HermitianVectorSpace {
    dim: usize,
    metric: DMatrix<f64>,
    j: DMatrix<f64>,
    metric_inv: DMatrix<f64>,
    /// Columns are the adapted orthonormal basis in frame coordinates.
    adapted: DMatrix<f64>,
    adapted_inv: DMatrix<f64>,
    tolerance: f64,
}

impl HermitianVectorSpace {
    pub fn new(metric: DMatrix<f64>, j: DMatrix<f64>) -> Result<Self> {
        Self::with_tolerance(metric, j, DEFAULT_TOLERANCE)
    }

    pub fn with_tolerance(metric: DMatrix<f64>, j: DMatrix<f64>, tolerance: f64) -> Result<Self> {
        let dim = metric.nrows();
        if dim == 0 || dim % 2 != 0 || metric.ncols() != dim {
            return Err(Error::InvalidMetric(format!(
                "need a square matrix of even positive size, got {}x{}",
                metric.nrows(),
                metric.ncols()
            )));
        }
        if j.nrows() != dim || j.ncols() != dim {
            return Err(Error::InvalidComplexStructure(format!(
                "J must be {dim}x{dim}"
            )));
        }
        let sym_res = (&metric - metric.transpose()).norm();
        if sym_res > tolerance {
            return Err(Error::InvalidMetric(format!(
                "asymmetry residual {sym_res:.3e}"
            )));
        }
        let eig = metric.clone().symmetric_eigen();
        let min_eig = eig.eigenvalues.iter().cloned().fold(f64::INFINITY, f64::min);
        if min_eig <= tolerance {
            return Err(Error::InvalidMetric(format!(
                "smallest eigenvalue {min_eig:.3e}"
            )));
        }
        let jj_res = (&j * &j + DMatrix::<f64>::identity(dim, dim)).norm();
        if jj_res > tolerance {
            return Err(Error::InvalidComplexStructure(format!(
                "J*J + I residual {jj_res:.3e}"
            )));
        }
        let herm_res = (j.transpose() * &metric * &j - &metric).norm();
        if herm_res > tolerance {
            return Err(Error::InvalidComplexStructure(format!(
                "g(J.,J.) - g residual {herm_res:.3e}"
            )));
        }
        let metric_inv = metric
            .clone()
            .try_inverse()
            .ok_or_else(|| Error::InvalidMetric("metric is singular".into()))?;
        let adapted = adapted_basis(&metric, &j)?;
        let adapted_inv = adapted
            .clone()
            .try_inverse()
            .ok_or_else(|| Error::InvalidComplexStructure("adapted basis is singular".into()))?;
        Ok(HermitianVectorSpace {
            dim,
            metric,
            j,
            metric_inv,
            adapted,
            adapted_inv,
            tolerance,
        })
    }

    /// The standard flat space: identity metric, `J e_{2i} = e_{2i+1}`.
    pub fn standard(m: usize) -> Self {
        let dim = 2 * m;
        let metric = DMatrix::<f64>::identity(dim, dim);
        let mut j = DMatrix::<f64>::zeros(dim, dim);
        for i in 0..m {
            j[(2 * i + 1, 2 * i)] = 1.0;
            j[(2 * i, 2 * i + 1)] = -1.0;
        }
        Self::new(metric, j).expect("standard structure is hermitian")
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// Complex dimension m.
    pub fn complex_dim(&self) -> usize {
        self.dim / 2
    }

    pub fn tolerance(&self) -> f64 {
        self.tolerance
    }

    pub fn metric(&self) -> &DMatrix<f64> {
        &self.metric
    }

    pub fn metric_inv(&self) -> &DMatrix<f64> {
        &self.metric_inv
    }

    pub fn j_matrix(&self) -> &DMatrix<f64> {
        &self.j
    }

    pub fn adapted_basis(&self) -> &DMatrix<f64> {
        &self.adapted
    }

    pub fn inner_vectors(&self, x: &DVector<f64>, y: &DVector<f64>) -> f64 {
        (x.transpose() * &self.metric * y)[(0, 0)]
    }

    pub fn apply_j(&self, x: &DVector<f64>) -> DVector<f64> {
        &self.j * x
    }

    /// Metric dual covector of a vector.
    pub fn flat(&self, x: &DVector<f64>) -> KForm {
        let comps = (&self.metric * x).iter().cloned().collect();
        KForm {
            dim: self.dim,
            degree: 1,
            comps,
        }
    }

    /// Metric dual vector of a 1-form.
    pub fn sharp(&self, a: &KForm) -> DVector<f64> {
        assert_eq!(a.degree, 1);
        &self.metric_inv * DVector::from_column_slice(&a.comps)
    }

    /// The Kähler form `omega(X, Y) = g(JX, Y)`.
    pub fn kaehler_form(&self) -> KForm {
        let n = self.dim;
        let mut out = KForm::zero(n, 2);
        for i in 0..n {
            for k in i + 1..n {
                // omega_{ik} = g(J e_i, e_k)
                let mut val = 0.0;
                for l in 0..n {
                    val += self.metric[(l, k)] * self.j[(l, i)];
                }
                out.comps[rank_index(n, &[i, k])] = val;
            }
        }
        out
    }

    /// Volume form `omega^m / m!`.
    pub fn volume_form(&self) -> KForm {
        let m = self.complex_dim();
        let omega = self.kaehler_form();
        let mut acc = KForm::scalar(self.dim, 1.0);
        for _ in 0..m {
            acc = acc.wedge(&omega).expect("same space");
        }
        let mut fact = 1.0;
        for i in 1..=m {
            fact *= i as f64;
        }
        acc.scale(1.0 / fact)
    }

    /// Components of a form with respect to the adapted orthonormal basis.
    pub fn to_adapted(&self, a: &KForm) -> KForm {
        a.pullback(&self.adapted)
    }

    pub fn from_adapted(&self, a: &KForm) -> KForm {
        a.pullback(&self.adapted_inv)
    }

    /// Determinant-extension inner product of two k-forms (increasing
    /// orthonormal wedges form an orthonormal basis).
    pub fn form_inner(&self, a: &KForm, b: &KForm) -> f64 {
        assert_eq!(a.degree, b.degree);
        let aa = self.to_adapted(a);
        let bb = self.to_adapted(b);
        aa.comps.iter().zip(&bb.comps).map(|(x, y)| x * y).sum()
    }

    pub fn form_norm(&self, a: &KForm) -> f64 {
        self.form_inner(a, a).max(0.0).sqrt()
    }

    /// Hodge star, defined by `<*a, b> v_g = a ∧ b` against the volume form
    /// `omega^m / m!`.
    pub fn hodge_star(&self, a: &KForm) -> Result<KForm> {
        if a.dim != self.dim {
            return Err(Error::FrameMismatch {
                left: a.dim,
                right: self.dim,
            });
        }
        let n = self.dim;
        let k = a.degree;
        let aa = self.to_adapted(a);
        let mut out = KForm::zero(n, n - k);
        let sets = index_sets(n, k);
        for (r, set) in sets.iter().enumerate() {
            let c = aa.comps[r];
            if c == 0.0 {
                continue;
            }
            let complement: Vec<usize> = (0..n).filter(|i| !set.contains(i)).collect();
            let (_, sign) = merge_sign(set, &complement).expect("disjoint by construction");
            out.comps[rank_index(n, &complement)] += sign * c;
        }
        Ok(self.from_adapted(&out))
    }

    /// Group action of `J` on forms: `(𝔍 a)(X…) = (-1)^k a(JX…)`.
    pub fn j_group_action(&self, a: &KForm) -> KForm {
        let pulled = a.pullback(&self.j);
        if a.degree % 2 == 0 {
            pulled
        } else {
            pulled.scale(-1.0)
        }
    }

    /// Lie-algebra action of `J` on forms:
    /// `(J.a)(X_1,…,X_k) = -Σ_i a(X_1,…,J X_i,…,X_k)`.
    pub fn j_algebra_action(&self, a: &KForm) -> KForm {
        self.endomorphism_action(&self.j, a)
    }

    /// `(A.a)(X_1,…,X_k) = -Σ_i a(…, A X_i, …)` for any endomorphism A.
    pub fn endomorphism_action(&self, endo: &DMatrix<f64>, a: &KForm) -> KForm {
        let n = self.dim;
        let k = a.degree;
        let mut out = KForm::zero(n, k);
        if k == 0 {
            return out;
        }
        let sets = index_sets(n, k);
        for (r, set) in sets.iter().enumerate() {
            let mut acc = 0.0;
            for pos in 0..k {
                let mut reduced: Vec<usize> = set.to_vec();
                let orig = reduced.remove(pos);
                let slot_sign = if pos % 2 == 0 { 1.0 } else { -1.0 };
                for j in 0..n {
                    let coeff = endo[(j, orig)];
                    if coeff == 0.0 {
                        continue;
                    }
                    if let Some((full, sign)) = insert_sign(j, &reduced) {
                        acc -= coeff * slot_sign * sign * a.comps[rank_index(n, &full)];
                    }
                }
            }
            out.comps[r] = acc;
        }
        out
    }

    /// Contraction with the Kähler form: `Σ_{i=1}^{2m} a(e_i, J e_i, …)`
    /// over a full orthonormal basis. The sum runs over all 2m basis
    /// vectors, which makes `omega_trace(omega) = 2m`; a sum over the m
    /// hermitian pairs would halve it.
    pub fn omega_trace(&self, a: &KForm) -> Result<KForm> {
        if a.degree < 2 {
            return Err(Error::DegreeUnderflow {
                needed: 2,
                got: a.degree,
            });
        }
        let n = self.dim;
        let m = self.complex_dim();
        let aa = self.to_adapted(a);
        let k = a.degree;
        let mut out = KForm::zero(n, k - 2);
        let targets = index_sets(n, k - 2);
        for (r, set) in targets.iter().enumerate() {
            let mut acc = 0.0;
            for l in 0..m {
                let pair = [2 * l, 2 * l + 1];
                if set.contains(&pair[0]) || set.contains(&pair[1]) {
                    continue;
                }
                // prepending an adjacent pair keeps the sign +1
                if let Some((full, sign)) = merge_sign(&pair, set) {
                    acc += 2.0 * sign * aa.comps[rank_index(n, &full)];
                }
            }
            out.comps[r] = acc;
        }
        Ok(self.from_adapted(&out))
    }

    /// U(m)-type projection of a 2- or 3-form.
    pub fn type_project(&self, a: &KForm) -> Result<TypeSplit> {
        match a.degree {
            2 => {
                let jg = self.j_group_action(a);
                let one_one = a.add(&jg).scale(0.5);
                let two_zero = a.sub(&jg).scale(0.5);
                Ok(TypeSplit::Two { one_one, two_zero })
            }
            3 => {
                // (J.)^2 acts as -1 on the (2,1)+(1,2) part and as -9 on
                // the (3,0)+(0,3) part.
                let la = self.j_algebra_action(a);
                let la2 = self.j_algebra_action(&la);
                let pure = la2.add(a).scale(-1.0 / 8.0);
                let mixed = a.sub(&pure);
                let m = self.complex_dim();
                if m < 2 {
                    return Err(Error::UnsupportedDimension(m));
                }
                let tau = self.omega_trace(&mixed)?;
                let omega = self.kaehler_form();
                let mixed_trace = tau
                    .scale(1.0 / (2.0 * (m as f64 - 1.0)))
                    .wedge(&omega)?;
                let mixed_trace_free = mixed.sub(&mixed_trace);
                Ok(TypeSplit::Three {
                    mixed,
                    pure,
                    mixed_trace,
                    mixed_trace_free,
                })
            }
            d => Err(Error::DegreeUnsupported(d)),
        }
    }

    /// Trace/trace-free split of a (1,1)-form: the trace part is
    /// `(tr_omega a / 2m) * omega`.
    pub fn one_one_trace_split(&self, a: &KForm) -> Result<(KForm, KForm)> {
        if a.degree != 2 {
            return Err(Error::DegreeUnsupported(a.degree));
        }
        let tr = self.omega_trace(a)?.comps[0];
        let omega = self.kaehler_form();
        let trace_part = omega.scale(tr / (self.dim as f64));
        let trace_free = a.sub(&trace_part);
        Ok((trace_part, trace_free))
    }
}

/// Build an adapted g-orthonormal basis with `J b_{2i} = b_{2i+1}`.
fn adapted_basis(metric: &DMatrix<f64>, j: &DMatrix<f64>) -> Result<DMatrix<f64>> {
    let n = metric.nrows();
    let mut cols: Vec<DVector<f64>> = Vec::with_capacity(n);
    let inner = |x: &DVector<f64>, y: &DVector<f64>| -> f64 { (x.transpose() * metric * y)[(0, 0)] };
    for cand in 0..n {
        if cols.len() == n {
            break;
        }
        let mut v = DVector::<f64>::zeros(n);
        v[cand] = 1.0;
        for b in &cols {
            let c = inner(&v, b);
            v -= b * c;
        }
        let norm = inner(&v, &v).max(0.0).sqrt();
        if norm < 1e-8 {
            continue;
        }
        v /= norm;
        let w = j * &v;
        cols.push(v);
        cols.push(w);
    }
    if cols.len() != n {
        return Err(Error::InvalidComplexStructure(
            "failed to build an adapted basis".into(),
        ));
    }
    Ok(DMatrix::from_columns(&cols))
}
