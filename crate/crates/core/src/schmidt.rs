//! Schmidt decomposition of two-qubit pure states.
//!
//! The primary route diagonalizes the 2x2 Hermitian Gram matrix of the
//! coefficient matrix in closed form and extracts the eight parameters
//! `(rho, chi, alpha, tau, theta1, phi1, theta2, phi2)` of the explicit
//! bipartite decomposition; `reconstruct` evaluates that decomposition
//! back into amplitudes. An independent alternating-maximization route
//! ([`decompose_iterative`]) realizes the variational characterization of
//! the dominant Schmidt pair by power iteration and serves as a
//! cross-check, never as the default.
//!
//! Angle conventions: the local bases are unique only up to phase, so
//! equality of two decompositions is always judged by reconstruction,
//! never by comparing raw angle tuples.

use crate::ga3::{exp_bivector, Multivector3};
use crate::msta2::{rotor_form_state, TwoParticleMV};
use crate::spinor1::{spinor_theta_phi, Spinor1};
use crate::Error;
use num_complex::Complex64;

/// Singular-value gap below which a state is treated as degenerate and the
/// canonical-basis tie-break is used.
pub const DEGENERACY_GAP: f64 = 1e-9;

/// Parameters of the explicit bipartite decomposition.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SchmidtForm {
    /// Squared magnitude of the state, `sum |c_ij|^2`.
    pub rho: f64,
    /// Global phase.
    pub chi: f64,
    /// Entanglement angle in `[0, pi/2]`; Schmidt coefficients are
    /// `cos(alpha/2) >= sin(alpha/2)`.
    pub alpha: f64,
    /// Relative phase between the two Schmidt terms.
    pub tau: f64,
    /// Bloch angles of the particle-1 basis.
    pub theta1: f64,
    pub phi1: f64,
    /// Bloch angles of the particle-2 basis.
    pub theta2: f64,
    pub phi2: f64,
}

/// The decomposition as explicit terms: `psi = M1 |u1,v1> + M2 |u2,v2>`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SchmidtTerms {
    /// Schmidt coefficients, `m1 >= m2 >= 0`, `m1^2 + m2^2 = rho`.
    pub m1: f64,
    pub m2: f64,
    /// Orthonormal basis of particle space 1.
    pub u1: Spinor1,
    pub u2: Spinor1,
    /// Orthonormal basis of particle space 2.
    pub v1: Spinor1,
    pub v2: Spinor1,
}

/// Rotor form of a decomposed state: the data of
/// `rho^(1/2) R^1 S^2 (cos(alpha/2) + sin(alpha/2) Is2^1 Is2^2) exp(J chi) E`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RotorForm {
    pub rho: f64,
    pub chi: f64,
    pub alpha: f64,
    /// Local rotor of particle 1, `psi(theta1, phi1) exp(Is3 tau/4)`.
    pub r: Spinor1,
    /// Local rotor of particle 2, `psi(theta2, phi2) exp(Is3 tau/4)`.
    pub s: Spinor1,
}

impl RotorForm {
    /// Assemble the two-particle multivector this form describes.
    pub fn assemble(&self) -> TwoParticleMV {
        rotor_form_state(self.rho, self.chi, self.alpha, &self.r, &self.s)
    }
}

type CVec2 = [Complex64; 2];

fn cvec_scale(v: &CVec2, s: Complex64) -> CVec2 {
    [v[0] * s, v[1] * s]
}

fn cvec_normalize(v: &CVec2) -> CVec2 {
    let n = (v[0].norm_sqr() + v[1].norm_sqr()).sqrt();
    [v[0] / n, v[1] / n]
}

/// The unit vector orthogonal to `v` (unique up to phase).
fn cvec_perp(v: &CVec2) -> CVec2 {
    [-v[1].conj(), v[0].conj()]
}

/// Phase factor that makes the largest-magnitude component real positive.
fn canonical_phase(v: &CVec2) -> Complex64 {
    let lead = if v[0].norm() >= v[1].norm() { v[0] } else { v[1] };
    if lead.norm() == 0.0 {
        Complex64::new(1.0, 0.0)
    } else {
        (lead / lead.norm()).conj()
    }
}

/// The 2x2 coefficient matrix `C[i][j] = c_ij`, rows indexing particle 1.
struct CoeffMatrix {
    m: [[Complex64; 2]; 2],
}

impl CoeffMatrix {
    fn new(amps: &[Complex64; 4]) -> Self {
        Self { m: [[amps[0], amps[1]], [amps[2], amps[3]]] }
    }

    fn row(&self, i: usize) -> CVec2 {
        self.m[i]
    }

    /// `C w` for a column vector `w`.
    fn apply(&self, w: &CVec2) -> CVec2 {
        [
            self.m[0][0] * w[0] + self.m[0][1] * w[1],
            self.m[1][0] * w[0] + self.m[1][1] * w[1],
        ]
    }

    /// `C^dagger u`.
    fn apply_adjoint(&self, u: &CVec2) -> CVec2 {
        [
            self.m[0][0].conj() * u[0] + self.m[1][0].conj() * u[1],
            self.m[0][1].conj() * u[0] + self.m[1][1].conj() * u[1],
        ]
    }

    /// `<u, v | psi> = u^dagger C conj(v)`, the overlap with `|u> (x) |v>`.
    fn pair_overlap(&self, u: &CVec2, v: &CVec2) -> Complex64 {
        let mut s = Complex64::new(0.0, 0.0);
        for i in 0..2 {
            for j in 0..2 {
                s += u[i].conj() * v[j].conj() * self.m[i][j];
            }
        }
        s
    }

    fn norm_sq(&self) -> f64 {
        self.m.iter().flatten().map(|z| z.norm_sqr()).sum()
    }
}

/// Normalized Schmidt coefficients `(m1, m2)` with `m1 >= m2 >= 0` and
/// `m1^2 + m2^2 = 1`, plus the Gram matrix entries used to find them.
struct GramSpectrum {
    m1: f64,
    m2: f64,
    g00: f64,
    g11: f64,
    g01: Complex64,
    l1: f64,
}

fn gram_spectrum(c: &CoeffMatrix, rho: f64) -> GramSpectrum {
    // Gram matrix of the state normalized to unit norm.
    let g00 = (c.m[0][0].norm_sqr() + c.m[1][0].norm_sqr()) / rho;
    let g11 = (c.m[0][1].norm_sqr() + c.m[1][1].norm_sqr()) / rho;
    let g01 = (c.m[0][0].conj() * c.m[0][1] + c.m[1][0].conj() * c.m[1][1]) / rho;
    let t = g00 + g11;
    let det = g00 * g11 - g01.norm_sqr();
    let disc = (t * t - 4.0 * det).max(0.0).sqrt();
    let l1 = 0.5 * (t + disc);
    let l2 = (0.5 * (t - disc)).max(0.0);
    GramSpectrum { m1: l1.sqrt(), m2: l2.sqrt(), g00, g11, g01, l1 }
}

/// Bloch angles `(theta, phi)` of the ray through a complex 2-vector, with
/// `phi = 0` by convention whenever the ray passes through a pole.
fn bloch_angles(v: &CVec2) -> (f64, f64) {
    let (n0, n1) = (v[0].norm(), v[1].norm());
    let theta = 2.0 * n1.atan2(n0);
    if n0 == 0.0 || n1 == 0.0 {
        return (theta, 0.0);
    }
    let mut phi = v[1].arg() - v[0].arg();
    if phi > std::f64::consts::PI {
        phi -= 2.0 * std::f64::consts::PI;
    } else if phi <= -std::f64::consts::PI {
        phi += 2.0 * std::f64::consts::PI;
    }
    (theta, phi)
}

/// The Bloch basis vector `(cos(theta/2) e^{-i phi/2}, sin(theta/2) e^{i phi/2})`.
fn bloch_vec(theta: f64, phi: f64) -> CVec2 {
    [
        Complex64::from_polar((theta / 2.0).cos(), -phi / 2.0),
        Complex64::from_polar((theta / 2.0).sin(), phi / 2.0),
    ]
}

/// Its orthogonal partner `(sin(theta/2) e^{-i phi/2}, -cos(theta/2) e^{i phi/2})`.
fn bloch_vec_perp(theta: f64, phi: f64) -> CVec2 {
    [
        Complex64::from_polar((theta / 2.0).sin(), -phi / 2.0),
        -Complex64::from_polar((theta / 2.0).cos(), phi / 2.0),
    ]
}

/// Decompose the amplitudes `(c00, c01, c10, c11)` into a [`SchmidtForm`].
///
/// The zero state is a domain error. States with near-degenerate Schmidt
/// coefficients fall back to a canonical basis aligned with `|0>` on
/// particle 1, so the output is deterministic there too.
pub fn decompose(amps: &[Complex64; 4]) -> Result<SchmidtForm, Error> {
    let c = CoeffMatrix::new(amps);
    let rho = c.norm_sq();
    if rho <= 0.0 {
        return Err(Error::ZeroState);
    }
    let spec = gram_spectrum(&c, rho);
    let alpha = 2.0 * spec.m2.atan2(spec.m1);

    // First Schmidt pair (u1 spans particle 1, v1 particle 2).
    let (u1, v1) = if spec.m1 - spec.m2 < DEGENERACY_GAP {
        let u1 = [Complex64::new(1.0, 0.0), Complex64::new(0.0, 0.0)];
        let v1 = cvec_normalize(&c.row(0));
        (u1, v1)
    } else {
        // Better-conditioned eigenvector of the Gram matrix for l1; its
        // conjugate is the particle-2 basis vector.
        let cand_a = [spec.g01, Complex64::new(spec.l1 - spec.g00, 0.0)];
        let cand_b = [Complex64::new(spec.l1 - spec.g11, 0.0), spec.g01.conj()];
        let na = cand_a[0].norm_sqr() + cand_a[1].norm_sqr();
        let nb = cand_b[0].norm_sqr() + cand_b[1].norm_sqr();
        let w1 = cvec_normalize(if na >= nb { &cand_a } else { &cand_b });
        let v1 = [w1[0].conj(), w1[1].conj()];
        let u1 = cvec_normalize(&c.apply(&w1));
        (u1, v1)
    };

    let (theta1, phi1) = bloch_angles(&u1);
    let (theta2, phi2) = bloch_angles(&v1);

    // The two term phases are read off by projecting onto the convention-
    // fixed basis rays; chi and tau carry whatever the angles cannot.
    let scale = rho.sqrt();
    let b1 = bloch_vec(theta1, phi1);
    let b2 = bloch_vec(theta2, phi2);
    let proj1 = c.pair_overlap(&b1, &b2) / scale;
    let phase1 = proj1.arg();
    let phase2 = if spec.m2 > 1e-15 {
        let p1 = bloch_vec_perp(theta1, phi1);
        let p2 = bloch_vec_perp(theta2, phi2);
        (c.pair_overlap(&p1, &p2) / scale).arg()
    } else {
        phase1
    };

    Ok(SchmidtForm {
        rho,
        chi: 0.5 * (phase1 + phase2),
        alpha,
        tau: phase1 - phase2,
        theta1,
        phi1,
        theta2,
        phi2,
    })
}

/// Evaluate a [`SchmidtForm`] back into amplitudes `(c00, c01, c10, c11)`.
pub fn reconstruct(f: &SchmidtForm) -> [Complex64; 4] {
    let u1 = bloch_vec(f.theta1, f.phi1);
    let u2 = bloch_vec_perp(f.theta1, f.phi1);
    let v1 = bloch_vec(f.theta2, f.phi2);
    let v2 = bloch_vec_perp(f.theta2, f.phi2);
    let w1 = Complex64::from_polar((f.alpha / 2.0).cos(), f.tau / 2.0);
    let w2 = Complex64::from_polar((f.alpha / 2.0).sin(), -f.tau / 2.0);
    let global = Complex64::from_polar(f.rho.sqrt(), f.chi);
    let mut out = [Complex64::new(0.0, 0.0); 4];
    for i in 0..2 {
        for j in 0..2 {
            out[2 * i + j] = global * (w1 * u1[i] * v1[j] + w2 * u2[i] * v2[j]);
        }
    }
    out
}

/// The entanglement angle alone: 0 for separable states, pi/2 at maximal
/// entanglement.
pub fn entanglement_angle(amps: &[Complex64; 4]) -> Result<f64, Error> {
    let c = CoeffMatrix::new(amps);
    let rho = c.norm_sq();
    if rho <= 0.0 {
        return Err(Error::ZeroState);
    }
    let spec = gram_spectrum(&c, rho);
    Ok(2.0 * spec.m2.atan2(spec.m1))
}

/// Turn a [`SchmidtForm`] into the rotor form of the same state.
pub fn to_rotor_form(f: &SchmidtForm) -> RotorForm {
    let tau_rotor = exp_bivector(&(Multivector3::i_sigma(3) * (f.tau / 4.0)));
    let r = spinor_theta_phi(f.theta1, f.phi1).to_multivector().gp(&tau_rotor);
    let s = spinor_theta_phi(f.theta2, f.phi2).to_multivector().gp(&tau_rotor);
    RotorForm {
        rho: f.rho,
        chi: f.chi,
        alpha: f.alpha,
        r: Spinor1::from_even_multivector(&r),
        s: Spinor1::from_even_multivector(&s),
    }
}

/// Fix the pair phases so the term coefficient is real nonnegative:
/// the leading component of `u` is made real positive and `v` absorbs the
/// remaining phase of `<u, v | psi>`.
fn canonicalize_pair(c: &CoeffMatrix, u: &CVec2, v: &CVec2) -> (CVec2, CVec2, f64) {
    let u = cvec_scale(u, canonical_phase(u));
    let m = c.pair_overlap(&u, v);
    let v = if m.norm() > 0.0 {
        cvec_scale(v, Complex64::from_polar(1.0, m.arg()))
    } else {
        *v
    };
    (u, v, m.norm())
}

/// The iterative realization of the Schmidt construction: alternately
/// maximize `|<u, v|psi>|` over unit `u` and `v` (power iteration on the
/// coefficient matrix), peel off the dominant pair, and read the second
/// pair from the orthogonal complement.
///
/// Degenerate spectra (gap below [`DEGENERACY_GAP`]) are reported through
/// the same canonical `|0>`-aligned tie-break as [`decompose`].
pub fn decompose_iterative(
    amps: &[Complex64; 4],
    tol: f64,
    max_iter: usize,
) -> Result<SchmidtTerms, Error> {
    assert!(tol > 0.0, "tolerance must be positive");
    assert!(max_iter >= 1, "max_iter must be at least 1");
    let c = CoeffMatrix::new(amps);
    let rho = c.norm_sq();
    if rho <= 0.0 {
        return Err(Error::ZeroState);
    }
    let scale = rho.sqrt();

    // Start from the basis vector on the heavier column.
    let col0 = c.m[0][0].norm_sqr() + c.m[1][0].norm_sqr();
    let col1 = c.m[0][1].norm_sqr() + c.m[1][1].norm_sqr();
    let mut v: CVec2 = if col0 >= col1 {
        [Complex64::new(1.0, 0.0), Complex64::new(0.0, 0.0)]
    } else {
        [Complex64::new(0.0, 0.0), Complex64::new(1.0, 0.0)]
    };
    let mut u = cvec_normalize(&c.apply(&[v[0].conj(), v[1].conj()]));

    let mut m_prev = -1.0;
    let mut converged = false;
    for _ in 0..max_iter {
        // Fixing u, the optimal v is the normalized partial contraction,
        // and vice versa.
        let w = c.apply_adjoint(&u);
        v = cvec_normalize(&[w[0].conj(), w[1].conj()]);
        u = cvec_normalize(&c.apply(&[v[0].conj(), v[1].conj()]));
        let m = c.pair_overlap(&u, &v).norm();
        if (m - m_prev).abs() <= tol * m.max(1.0) {
            converged = true;
            break;
        }
        m_prev = m;
    }
    if !converged {
        return Err(Error::NoConvergence(max_iter));
    }

    let (u1, v1, m1) = canonicalize_pair(&c, &u, &v);
    let (u1, v1, m1, degenerate) = {
        // Residual magnitude doubles as the second coefficient estimate.
        let m2_est = (rho - m1 * m1).max(0.0).sqrt();
        if (m1 - m2_est).abs() < DEGENERACY_GAP * scale.max(1.0) {
            // Degenerate: every unit vector maximizes, so pick the
            // canonical |0>-aligned pair for reproducibility.
            let u = [Complex64::new(1.0, 0.0), Complex64::new(0.0, 0.0)];
            let v = cvec_normalize(&c.row(0));
            let (u, v, m) = canonicalize_pair(&c, &u, &v);
            (u, v, m, true)
        } else {
            (u1, v1, m1, false)
        }
    };
    let _ = degenerate;

    // Second pair from the orthogonal complement of the first.
    let u2 = cvec_perp(&u1);
    let v2 = cvec_perp(&v1);
    let (u2, v2, m2) = canonicalize_pair(&c, &u2, &v2);

    Ok(SchmidtTerms {
        m1,
        m2,
        u1: Spinor1::from_complex(u1[0], u1[1]),
        u2: Spinor1::from_complex(u2[0], u2[1]),
        v1: Spinor1::from_complex(v1[0], v1[1]),
        v2: Spinor1::from_complex(v2[0], v2[1]),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    const SQRT_HALF: f64 = std::f64::consts::FRAC_1_SQRT_2;

    fn singlet_amps() -> [Complex64; 4] {
        [c(0., 0.), c(SQRT_HALF, 0.), c(-SQRT_HALF, 0.), c(0., 0.)]
    }

    /// Largest componentwise difference after the best global phase.
    fn phase_free_delta(a: &[Complex64; 4], b: &[Complex64; 4]) -> f64 {
        let overlap: Complex64 = a.iter().zip(b.iter()).map(|(x, y)| x.conj() * y).sum();
        let phase = if overlap.norm() > 0.0 {
            overlap / overlap.norm()
        } else {
            c(1.0, 0.0)
        };
        a.iter()
            .zip(b.iter())
            .fold(0.0, |m: f64, (x, y)| m.max((x * phase - y).norm()))
    }

    #[test]
    fn separable_basis_state() {
        let f = decompose(&[c(1., 0.), c(0., 0.), c(0., 0.), c(0., 0.)]).unwrap();
        assert_eq!(f.alpha, 0.0);
        assert_eq!(f.rho, 1.0);
        assert_eq!(f.theta1, 0.0);
        assert_eq!(f.theta2, 0.0);
        assert_eq!(f.tau, 0.0);
        let r = reconstruct(&f);
        assert!((r[0] - c(1.0, 0.0)).norm() < 1e-15);
    }

    #[test]
    fn singlet_is_maximally_entangled() {
        let f = decompose(&singlet_amps()).unwrap();
        assert!((f.alpha - std::f64::consts::FRAC_PI_2).abs() < 1e-15);
        let r = reconstruct(&f);
        assert!(phase_free_delta(&r, &singlet_amps()) < 1e-15);
    }

    #[test]
    fn zero_state_is_a_domain_error() {
        let z = [c(0., 0.); 4];
        assert!(matches!(decompose(&z), Err(Error::ZeroState)));
        assert!(matches!(entanglement_angle(&z), Err(Error::ZeroState)));
        assert!(matches!(decompose_iterative(&z, 1e-12, 10), Err(Error::ZeroState)));
    }

    #[test]
    fn entanglement_angle_of_diagonal_state() {
        let amps = [c(0.9f64.sqrt(), 0.), c(0., 0.), c(0., 0.), c(0.1f64.sqrt(), 0.)];
        let alpha = entanglement_angle(&amps).unwrap();
        let expect = 2.0 * 0.1f64.sqrt().atan2(0.9f64.sqrt());
        assert!((alpha - expect).abs() < 1e-14);
    }

    #[test]
    fn reconstruct_of_trivial_form() {
        let f = SchmidtForm {
            rho: 1.0,
            chi: 0.0,
            alpha: 0.0,
            tau: 0.0,
            theta1: 0.0,
            phi1: 0.0,
            theta2: 0.0,
            phi2: 0.0,
        };
        let r = reconstruct(&f);
        assert!((r[0] - c(1.0, 0.0)).norm() < 1e-15);
        for v in &r[1..] {
            assert!(v.norm() < 1e-15);
        }
    }

    #[test]
    fn iterative_separable_state_converges_immediately() {
        let t = decompose_iterative(
            &[c(1., 0.), c(0., 0.), c(0., 0.), c(0., 0.)],
            1e-12,
            200,
        )
        .unwrap();
        assert!((t.m1 - 1.0).abs() < 1e-14);
        assert!(t.m2.abs() < 1e-14);
        // orthonormal bases
        assert!(t.u1.inner_product(&t.u2).norm() < 1e-14);
        assert!(t.v1.inner_product(&t.v2).norm() < 1e-14);
    }

    #[test]
    fn iterative_singlet_uses_the_tie_break() {
        let t = decompose_iterative(&singlet_amps(), 1e-12, 200).unwrap();
        assert!((t.m1 - SQRT_HALF).abs() < 1e-12);
        assert!((t.m2 - SQRT_HALF).abs() < 1e-12);
        // canonical |0>-aligned first basis vector
        let (u0, u1) = t.u1.to_complex();
        assert!((u0 - c(1.0, 0.0)).norm() < 1e-14);
        assert!(u1.norm() < 1e-14);
    }

    #[test]
    fn iterative_m_squares_sum_to_rho() {
        let amps = [c(0.3, -0.2), c(0.1, 0.4), c(-0.5, 0.1), c(0.2, 0.6)];
        let rho: f64 = amps.iter().map(|z| z.norm_sqr()).sum();
        let t = decompose_iterative(&amps, 1e-12, 200).unwrap();
        assert!((t.m1 * t.m1 + t.m2 * t.m2 - rho).abs() < 1e-12);
        assert!(t.m1 >= t.m2);
    }

    #[test]
    fn rotor_form_of_trivial_state() {
        let f = decompose(&[c(1., 0.), c(0., 0.), c(0., 0.), c(0., 0.)]).unwrap();
        let rf = to_rotor_form(&f);
        assert!(rf.r.max_coeff_delta(&Spinor1::ONE) < 1e-15);
        assert!(rf.s.max_coeff_delta(&Spinor1::ONE) < 1e-15);
        let assembled = rf.assemble();
        let direct = crate::msta2::from_complex4(&[c(1., 0.), c(0., 0.), c(0., 0.), c(0., 0.)]);
        assert!(assembled.max_coeff_delta(&direct) < 1e-15);
    }

    #[test]
    fn rotor_form_of_singlet_assembles_back() {
        let f = decompose(&singlet_amps()).unwrap();
        let assembled = to_rotor_form(&f).assemble();
        let got = crate::msta2::to_complex4(&assembled).unwrap();
        assert!(phase_free_delta(&got, &singlet_amps()) < 1e-14);
    }

    #[test]
    #[should_panic]
    fn iterative_rejects_nonpositive_tolerance() {
        let _ = decompose_iterative(&singlet_amps(), 0.0, 10);
    }
}
