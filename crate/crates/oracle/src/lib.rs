//! Textbook complex-matrix quantum mechanics for one and two qubits.
//!
//! This crate exists to cross-validate the geometric-algebra engine and
//! deliberately shares no code with it: states are complex amplitude
//! vectors, operators are dense complex matrices, and the eigen/SVD
//! routines are hand-rolled closed forms for the 2x2 case. Only dimensions
//! 2 and 4 are supported; performance is a non-goal.

use num_complex::Complex64;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum OracleError {
    #[error("dimension mismatch: {0} vs {1}")]
    DimensionMismatch(usize, usize),
    #[error("state is not normalized (norm^2 = {0})")]
    NotNormalized(f64),
}

const ZERO: Complex64 = Complex64::new(0.0, 0.0);
const ONE: Complex64 = Complex64::new(1.0, 0.0);

/// A small dense complex matrix (2x2 or 4x4 in practice).
#[derive(Debug, Clone, PartialEq)]
pub struct CMat {
    pub n: usize,
    a: Vec<Complex64>,
}

impl CMat {
    pub fn zeros(n: usize) -> Self {
        Self { n, a: vec![ZERO; n * n] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n);
        for i in 0..n {
            m[(i, i)] = ONE;
        }
        m
    }

    pub fn from_rows(rows: &[&[Complex64]]) -> Self {
        let n = rows.len();
        let mut m = Self::zeros(n);
        for (i, row) in rows.iter().enumerate() {
            assert_eq!(row.len(), n, "ragged matrix literal");
            for (j, v) in row.iter().enumerate() {
                m[(i, j)] = *v;
            }
        }
        m
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        assert_eq!(self.n, rhs.n, "matrix product dimension mismatch");
        let n = self.n;
        let mut out = Self::zeros(n);
        for i in 0..n {
            for k in 0..n {
                let v = self[(i, k)];
                if v == ZERO {
                    continue;
                }
                for j in 0..n {
                    out[(i, j)] += v * rhs[(k, j)];
                }
            }
        }
        out
    }

    pub fn add(&self, rhs: &Self) -> Self {
        assert_eq!(self.n, rhs.n, "matrix sum dimension mismatch");
        let mut out = self.clone();
        for (x, y) in out.a.iter_mut().zip(rhs.a.iter()) {
            *x += y;
        }
        out
    }

    pub fn scale(&self, s: Complex64) -> Self {
        let mut out = self.clone();
        for x in out.a.iter_mut() {
            *x *= s;
        }
        out
    }

    /// Conjugate transpose.
    pub fn adjoint(&self) -> Self {
        let n = self.n;
        let mut out = Self::zeros(n);
        for i in 0..n {
            for j in 0..n {
                out[(i, j)] = self[(j, i)].conj();
            }
        }
        out
    }

    pub fn trace(&self) -> Complex64 {
        (0..self.n).map(|i| self[(i, i)]).sum()
    }

    /// Kronecker product; the left factor indexes the first particle.
    pub fn kron(&self, rhs: &Self) -> Self {
        let (p, q) = (self.n, rhs.n);
        let mut out = Self::zeros(p * q);
        for i in 0..p {
            for j in 0..p {
                for k in 0..q {
                    for l in 0..q {
                        out[(i * q + k, j * q + l)] = self[(i, j)] * rhs[(k, l)];
                    }
                }
            }
        }
        out
    }

    pub fn max_abs_diff(&self, rhs: &Self) -> f64 {
        assert_eq!(self.n, rhs.n);
        self.a
            .iter()
            .zip(rhs.a.iter())
            .fold(0.0, |m: f64, (x, y)| m.max((x - y).norm()))
    }

    /// Determinant of the principal submatrix selected by `idx` (cofactor
    /// expansion; fine for n <= 4).
    fn minor_det(&self, idx: &[usize]) -> Complex64 {
        match idx.len() {
            0 => ONE,
            1 => self[(idx[0], idx[0])],
            _ => {
                let mut det = ZERO;
                let mut sign = 1.0;
                for (col, &j) in idx.iter().enumerate() {
                    let rest: Vec<usize> =
                        idx.iter().enumerate().filter(|(c, _)| *c != col).map(|(_, &v)| v).collect();
                    // expand along the first selected row
                    let sub = self.minor_det_rect(&idx[1..], &rest);
                    det += Complex64::new(sign, 0.0) * self[(idx[0], j)] * sub;
                    sign = -sign;
                }
                det
            }
        }
    }

    fn minor_det_rect(&self, rows: &[usize], cols: &[usize]) -> Complex64 {
        assert_eq!(rows.len(), cols.len());
        match rows.len() {
            0 => ONE,
            1 => self[(rows[0], cols[0])],
            _ => {
                let mut det = ZERO;
                let mut sign = 1.0;
                for (c, &j) in cols.iter().enumerate() {
                    let rest: Vec<usize> =
                        cols.iter().enumerate().filter(|(cc, _)| *cc != c).map(|(_, &v)| v).collect();
                    let sub = self.minor_det_rect(&rows[1..], &rest);
                    det += Complex64::new(sign, 0.0) * self[(rows[0], j)] * sub;
                    sign = -sign;
                }
                det
            }
        }
    }
}

impl std::ops::Index<(usize, usize)> for CMat {
    type Output = Complex64;
    fn index(&self, (i, j): (usize, usize)) -> &Complex64 {
        &self.a[i * self.n + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for CMat {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Complex64 {
        &mut self.a[i * self.n + j]
    }
}

/// A pure state as a complex amplitude vector (dimension 2 or 4).
#[derive(Debug, Clone, PartialEq)]
pub struct ComplexState {
    pub v: Vec<Complex64>,
}

impl ComplexState {
    pub fn new(v: Vec<Complex64>) -> Self {
        assert!(v.len() == 2 || v.len() == 4, "only dimensions 2 and 4 are supported");
        Self { v }
    }

    pub fn dim(&self) -> usize {
        self.v.len()
    }

    /// `<self|other>`, conjugate-linear in `self`.
    pub fn inner(&self, other: &Self) -> Complex64 {
        assert_eq!(self.dim(), other.dim(), "inner product dimension mismatch");
        self.v.iter().zip(other.v.iter()).map(|(a, b)| a.conj() * b).sum()
    }

    pub fn norm_sq(&self) -> f64 {
        self.v.iter().map(|a| a.norm_sqr()).sum()
    }

    pub fn normalized(&self) -> Self {
        let n = self.norm_sq().sqrt();
        assert!(n > 0.0, "cannot normalize the zero state");
        Self { v: self.v.iter().map(|a| a / n).collect() }
    }

    pub fn scale(&self, s: Complex64) -> Self {
        Self { v: self.v.iter().map(|a| a * s).collect() }
    }

    /// Multiplication by the unit imaginary.
    pub fn times_i(&self) -> Self {
        self.scale(Complex64::new(0.0, 1.0))
    }

    /// Tensor product `self (x) other`, first factor indexing the first particle.
    pub fn kron(&self, other: &Self) -> Self {
        let mut v = Vec::with_capacity(self.dim() * other.dim());
        for a in &self.v {
            for b in &other.v {
                v.push(a * b);
            }
        }
        Self::new(v)
    }

    /// Apply a square operator of matching dimension.
    pub fn apply(&self, q: &CMat) -> Self {
        assert_eq!(q.n, self.dim(), "operator dimension mismatch");
        let mut v = vec![ZERO; self.dim()];
        for (i, out) in v.iter_mut().enumerate() {
            for j in 0..self.dim() {
                *out += q[(i, j)] * self.v[j];
            }
        }
        Self { v }
    }

    pub fn max_abs_diff(&self, other: &Self) -> f64 {
        assert_eq!(self.dim(), other.dim());
        self.v
            .iter()
            .zip(other.v.iter())
            .fold(0.0, |m: f64, (a, b)| m.max((a - b).norm()))
    }
}

/// The Pauli matrix for axis k in 1..=3.
pub fn pauli_matrix(k: usize) -> CMat {
    let i = Complex64::new(0.0, 1.0);
    match k {
        1 => CMat::from_rows(&[&[ZERO, ONE], &[ONE, ZERO]]),
        2 => CMat::from_rows(&[&[ZERO, -i], &[i, ZERO]]),
        3 => CMat::from_rows(&[&[ONE, ZERO], &[ZERO, -ONE]]),
        _ => panic!("Pauli axis out of range: {k}"),
    }
}

/// `pauli_k (x) identity` acting on the first particle of a 2-qubit state.
pub fn pauli_on_particle(particle: usize, k: usize) -> CMat {
    match particle {
        1 => pauli_matrix(k).kron(&CMat::identity(2)),
        2 => CMat::identity(2).kron(&pauli_matrix(k)),
        _ => panic!("particle index out of range: {particle}"),
    }
}

/// `pauli_j (x) pauli_k`.
pub fn pauli_tensor(j: usize, k: usize) -> CMat {
    pauli_matrix(j).kron(&pauli_matrix(k))
}

/// A density matrix (2x2 or 4x4).
#[derive(Debug, Clone, PartialEq)]
pub struct DensityMatrix {
    pub m: CMat,
}

impl DensityMatrix {
    /// `|psi><psi|` for a pure state.
    pub fn from_pure(state: &ComplexState) -> Self {
        let n = state.dim();
        let mut m = CMat::zeros(n);
        for i in 0..n {
            for j in 0..n {
                m[(i, j)] = state.v[i] * state.v[j].conj();
            }
        }
        Self { m }
    }

    pub fn dim(&self) -> usize {
        self.m.n
    }

    pub fn trace(&self) -> Complex64 {
        self.m.trace()
    }

    pub fn max_hermiticity_violation(&self) -> f64 {
        self.m.max_abs_diff(&self.m.adjoint())
    }

    /// Positive semidefiniteness via principal minors (Hermitian input).
    pub fn is_positive_semidefinite(&self, tol: f64) -> bool {
        let n = self.dim();
        for mask in 1u32..(1 << n) {
            let idx: Vec<usize> = (0..n).filter(|i| mask & (1 << i) != 0).collect();
            let d = self.m.minor_det(&idx);
            if d.re < -tol {
                return false;
            }
        }
        true
    }

    /// Hermitian within `tol`, unit trace, positive semidefinite.
    pub fn validate(&self, tol: f64) -> bool {
        self.max_hermiticity_violation() <= tol
            && (self.trace() - ONE).norm() <= tol
            && self.is_positive_semidefinite(tol)
    }

    /// Partial trace of a 4x4 two-particle density matrix down to the kept particle.
    pub fn partial_trace(&self, keep: usize) -> DensityMatrix {
        assert_eq!(self.dim(), 4, "partial trace expects a 4x4 density matrix");
        let mut m = CMat::zeros(2);
        for a in 0..2 {
            for b in 0..2 {
                let mut s = ZERO;
                for k in 0..2 {
                    s += match keep {
                        1 => self.m[(2 * a + k, 2 * b + k)],
                        2 => self.m[(2 * k + a, 2 * k + b)],
                        _ => panic!("particle index out of range: {keep}"),
                    };
                }
                m[(a, b)] = s;
            }
        }
        DensityMatrix { m }
    }

    /// Bloch vector `(tr(rho s1), tr(rho s2), tr(rho s3))` of a 2x2 density matrix.
    pub fn bloch_vector(&self) -> [f64; 3] {
        assert_eq!(self.dim(), 2, "Bloch vector expects a 2x2 density matrix");
        let mut p = [0.0; 3];
        for (k, out) in p.iter_mut().enumerate() {
            *out = self.m.mul(&pauli_matrix(k + 1)).trace().re;
        }
        p
    }
}

/// `<Q> = tr(rho Q)`.
pub fn expectation(rho: &DensityMatrix, q: &CMat) -> Complex64 {
    assert_eq!(rho.dim(), q.n, "expectation dimension mismatch");
    rho.m.mul(q).trace()
}

/// Result of the closed-form 2x2 singular value decomposition.
#[derive(Debug, Clone)]
pub struct Svd2 {
    /// Singular values, `m1 >= m2 >= 0`.
    pub m1: f64,
    pub m2: f64,
    /// Left singular vectors as matrix columns.
    pub u: CMat,
    /// Right singular vectors as matrix columns; `c = u diag(m1,m2) v^dagger`.
    pub v: CMat,
}

/// Closed-form SVD of a complex 2x2 matrix through the eigen-decomposition
/// of the Hermitian Gram matrix `C^dagger C`.
pub fn svd_2x2(c: &CMat) -> Svd2 {
    assert_eq!(c.n, 2, "svd_2x2 expects a 2x2 matrix");
    let g = c.adjoint().mul(c);
    let t = g.trace().re;
    let det = (g[(0, 0)] * g[(1, 1)] - g[(0, 1)] * g[(1, 0)]).re;
    let disc = (t * t - 4.0 * det).max(0.0).sqrt();
    let l1 = 0.5 * (t + disc);
    let l2 = (0.5 * (t - disc)).max(0.0);
    let m1 = l1.sqrt();
    let m2 = l2.sqrt();

    // Eigenvector of G for l1: take the better-conditioned of the two
    // cofactor constructions; fall back to e1 when G is (near) scalar.
    let cand_a = [g[(0, 1)], Complex64::new(l1 - g[(0, 0)].re, 0.0)];
    let cand_b = [Complex64::new(l1 - g[(1, 1)].re, 0.0), g[(1, 0)]];
    let na = cand_a[0].norm_sqr() + cand_a[1].norm_sqr();
    let nb = cand_b[0].norm_sqr() + cand_b[1].norm_sqr();
    let (w, nw) = if na >= nb { (cand_a, na) } else { (cand_b, nb) };
    let w1 = if nw.sqrt() > 1e-12 * t.max(1.0) {
        let n = nw.sqrt();
        [w[0] / n, w[1] / n]
    } else {
        [ONE, ZERO]
    };
    let w2 = [-w1[1].conj(), w1[0].conj()];

    let mut u_cols = [[ZERO; 2]; 2];
    for (i, (wi, mi)) in [(w1, m1), (w2, m2)].iter().enumerate() {
        if *mi > 1e-300 {
            u_cols[i] = [
                (c[(0, 0)] * wi[0] + c[(0, 1)] * wi[1]) / *mi,
                (c[(1, 0)] * wi[0] + c[(1, 1)] * wi[1]) / *mi,
            ];
        }
    }
    if m2 <= 1e-300 {
        u_cols[1] = [-u_cols[0][1].conj(), u_cols[0][0].conj()];
    }

    let mut u = CMat::zeros(2);
    let mut v = CMat::zeros(2);
    for i in 0..2 {
        for (j, (ucol, wcol)) in [(u_cols[0], w1), (u_cols[1], w2)].iter().enumerate() {
            u[(i, j)] = ucol[i];
            v[(i, j)] = wcol[i];
        }
    }
    Svd2 { m1, m2, u, v }
}

impl Svd2 {
    /// `u diag(m1, m2) v^dagger`, for residual checks.
    pub fn reconstruct(&self) -> CMat {
        let mut d = CMat::zeros(2);
        d[(0, 0)] = Complex64::new(self.m1, 0.0);
        d[(1, 1)] = Complex64::new(self.m2, 0.0);
        self.u.mul(&d).mul(&self.v.adjoint())
    }
}

/// Overlap probability `|<psi|phi>|^2` of two normalized states.
pub fn overlap(psi: &ComplexState, phi: &ComplexState) -> Result<f64, OracleError> {
    if psi.dim() != phi.dim() {
        return Err(OracleError::DimensionMismatch(psi.dim(), phi.dim()));
    }
    for s in [psi, phi] {
        let n = s.norm_sq();
        if (n - 1.0).abs() > 1e-10 {
            return Err(OracleError::NotNormalized(n));
        }
    }
    Ok(psi.inner(phi).norm_sqr())
}

/// The same probability through `tr(rho_psi rho_phi)`; used for internal
/// consistency checks of the oracle itself.
pub fn overlap_via_trace(psi: &ComplexState, phi: &ComplexState) -> Result<f64, OracleError> {
    if psi.dim() != phi.dim() {
        return Err(OracleError::DimensionMismatch(psi.dim(), phi.dim()));
    }
    let rp = DensityMatrix::from_pure(psi);
    let rq = DensityMatrix::from_pure(phi);
    Ok(rp.m.mul(&rq.m).trace().re)
}
