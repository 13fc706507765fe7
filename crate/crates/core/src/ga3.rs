//! Arithmetic kernel for the geometric algebra of 3D space.
//!
//! A multivector is stored as 8 coefficients over the ordered basis
//!
//! ```text
//!   [1, s1, s2, s3, Is1, Is2, Is3, I]      I = s1 s2 s3
//! ```
//!
//! where the `s_k` are orthonormal vectors (`s_j s_k + s_k s_j = 2 d_jk`),
//! the `Is_k` are the three bivector planes and `I` is the pseudoscalar.
//! `I` squares to -1 and commutes with every element, so each product of
//! basis elements is again (up to sign) a basis element; the full 8x8
//! sign/index table is precomputed against this ordering.

/// Basis index of the scalar component.
pub const IDX_SCALAR: usize = 0;
/// Basis index of the pseudoscalar component.
pub const IDX_PSEUDO: usize = 7;

/// Cayley table for the basis ordering `[1, s1, s2, s3, Is1, Is2, Is3, I]`.
/// `CAYLEY[i][j] = (sign, index)` with `e_i e_j = sign * e_index`.
const CAYLEY: [[(f64, usize); 8]; 8] = [
    [(1., 0), (1., 1), (1., 2), (1., 3), (1., 4), (1., 5), (1., 6), (1., 7)],
    [(1., 1), (1., 0), (1., 6), (-1., 5), (1., 7), (-1., 3), (1., 2), (1., 4)],
    [(1., 2), (-1., 6), (1., 0), (1., 4), (1., 3), (1., 7), (-1., 1), (1., 5)],
    [(1., 3), (1., 5), (-1., 4), (1., 0), (-1., 2), (1., 1), (1., 7), (1., 6)],
    [(1., 4), (1., 7), (-1., 3), (1., 2), (-1., 0), (-1., 6), (1., 5), (-1., 1)],
    [(1., 5), (1., 3), (1., 7), (-1., 1), (1., 6), (-1., 0), (-1., 4), (-1., 2)],
    [(1., 6), (-1., 2), (1., 1), (1., 7), (-1., 5), (1., 4), (-1., 0), (-1., 3)],
    [(1., 7), (1., 4), (1., 5), (1., 6), (-1., 1), (-1., 2), (-1., 3), (-1., 0)],
];

/// Grade of each basis element in the fixed ordering.
const GRADE: [usize; 8] = [0, 1, 1, 1, 2, 2, 2, 3];

/// An element of the 8-dimensional geometric algebra of 3D space.
///
/// Immutable value type; every operation returns a fresh multivector.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct Multivector3 {
    /// Coefficients over `[1, s1, s2, s3, Is1, Is2, Is3, I]`.
    pub c: [f64; 8],
}

impl Multivector3 {
    pub const ZERO: Self = Self { c: [0.0; 8] };
    pub const ONE: Self = Self::basis(0);

    /// The k-th basis element (k in 0..8).
    pub const fn basis(k: usize) -> Self {
        let mut c = [0.0; 8];
        c[k] = 1.0;
        Self { c }
    }

    pub fn from_coefficients(c: [f64; 8]) -> Self {
        Self { c }
    }

    pub fn scalar(s: f64) -> Self {
        let mut c = [0.0; 8];
        c[0] = s;
        Self { c }
    }

    /// The vector `s_k`, k in 1..=3.
    pub fn sigma(k: usize) -> Self {
        assert!((1..=3).contains(&k), "vector index out of range: {k}");
        Self::basis(k)
    }

    /// The bivector `I s_k`, k in 1..=3.
    pub fn i_sigma(k: usize) -> Self {
        assert!((1..=3).contains(&k), "bivector index out of range: {k}");
        Self::basis(3 + k)
    }

    /// The pseudoscalar `I`.
    pub fn pseudoscalar() -> Self {
        Self::basis(IDX_PSEUDO)
    }

    /// A pure bivector with components `(b1, b2, b3)` over `Is1, Is2, Is3`.
    pub fn bivector(b1: f64, b2: f64, b3: f64) -> Self {
        let mut c = [0.0; 8];
        c[4] = b1;
        c[5] = b2;
        c[6] = b3;
        Self { c }
    }

    /// Scalar part `<M>`.
    pub fn scalar_part(&self) -> f64 {
        self.c[0]
    }

    /// Bivector components `(Is1, Is2, Is3)`.
    pub fn bivector_components(&self) -> [f64; 3] {
        [self.c[4], self.c[5], self.c[6]]
    }

    /// Geometric product, expanded through the precomputed sign/index table.
    pub fn gp(&self, rhs: &Self) -> Self {
        let mut out = [0.0; 8];
        for i in 0..8 {
            let a = self.c[i];
            if a == 0.0 {
                continue;
            }
            for j in 0..8 {
                let b = rhs.c[j];
                if b == 0.0 {
                    continue;
                }
                let (sign, k) = CAYLEY[i][j];
                out[k] += sign * a * b;
            }
        }
        Self { c: out }
    }

    /// Reversion: flips the sign of bivector and trivector parts.
    pub fn reverse(&self) -> Self {
        let mut c = self.c;
        for (k, v) in c.iter_mut().enumerate() {
            if GRADE[k] >= 2 {
                *v = -*v;
            }
        }
        Self { c }
    }

    /// Projection onto the grade-k part, k in 0..=3.
    pub fn grade_project(&self, k: usize) -> Self {
        assert!(k <= 3, "grade index out of range: {k}");
        let mut c = [0.0; 8];
        for (i, v) in self.c.iter().enumerate() {
            if GRADE[i] == k {
                c[i] = *v;
            }
        }
        Self { c }
    }

    /// True when every coefficient outside grade k is at most `tol` in magnitude.
    pub fn is_pure_grade(&self, k: usize, tol: f64) -> bool {
        self.c
            .iter()
            .enumerate()
            .all(|(i, v)| GRADE[i] == k || v.abs() <= tol)
    }

    /// Largest absolute coefficient.
    pub fn norm_inf(&self) -> f64 {
        self.c.iter().fold(0.0, |m, v| m.max(v.abs()))
    }

    /// Largest componentwise difference from `other`.
    pub fn max_coeff_delta(&self, other: &Self) -> f64 {
        self.c
            .iter()
            .zip(other.c.iter())
            .fold(0.0, |m: f64, (a, b)| m.max((a - b).abs()))
    }
}

impl std::ops::Add for Multivector3 {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        let mut c = self.c;
        for (a, b) in c.iter_mut().zip(rhs.c.iter()) {
            *a += b;
        }
        Self { c }
    }
}

impl std::ops::Sub for Multivector3 {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        let mut c = self.c;
        for (a, b) in c.iter_mut().zip(rhs.c.iter()) {
            *a -= b;
        }
        Self { c }
    }
}

impl std::ops::Neg for Multivector3 {
    type Output = Self;
    fn neg(self) -> Self {
        let mut c = self.c;
        for a in c.iter_mut() {
            *a = -*a;
        }
        Self { c }
    }
}

impl std::ops::Mul for Multivector3 {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        self.gp(&rhs)
    }
}

impl std::ops::Mul<f64> for Multivector3 {
    type Output = Self;
    fn mul(self, s: f64) -> Self {
        let mut c = self.c;
        for a in c.iter_mut() {
            *a *= s;
        }
        Self { c }
    }
}

/// Exponential of a pure bivector, in closed form.
///
/// For grade-2 `B` with `|B| = sqrt(-<BB>)` the series collapses to
/// `cos|B| + (B/|B|) sin|B|`; the result is a rotor. `|B| = 0` returns 1
/// exactly. Panics if the input carries non-bivector components above 1e-12.
pub fn exp_bivector(b: &Multivector3) -> Multivector3 {
    assert!(
        b.is_pure_grade(2, 1e-12),
        "exp_bivector requires a pure grade-2 argument"
    );
    let [b1, b2, b3] = b.bivector_components();
    let mag = (b1 * b1 + b2 * b2 + b3 * b3).sqrt();
    if mag == 0.0 {
        return Multivector3::ONE;
    }
    let s = mag.sin() / mag;
    let mut c = [0.0; 8];
    c[0] = mag.cos();
    c[4] = b1 * s;
    c[5] = b2 * s;
    c[6] = b3 * s;
    Multivector3 { c }
}

/// Scalar inner product `<AB>` of two pure bivectors.
///
/// Symmetric, and `(Is_k).(Is_k) = -1`. Panics if either argument carries
/// non-bivector components above 1e-12.
pub fn bivector_dot(a: &Multivector3, b: &Multivector3) -> f64 {
    assert!(
        a.is_pure_grade(2, 1e-12) && b.is_pure_grade(2, 1e-12),
        "bivector_dot requires pure grade-2 arguments"
    );
    a.gp(b).scalar_part()
}
