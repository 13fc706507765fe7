//! The two-particle correlated algebra.
//!
//! States and observables live in the 16-dimensional algebra spanned by
//! products of `{1, Is_j^1}` and `{1, Is_k^2}`; bivectors from different
//! particle spaces commute. Physical states carry a factor of the
//! correlator `E = (1 - Is3^1 Is3^2)/2` on the right, which halves the
//! degrees of freedom and makes right multiplication by the non-simple
//! bivector `J = (Is3^1 + Is3^2)/2` play the role of the unit imaginary.
//!
//! Coefficient layout: `[1, Is1^1, Is2^1, Is3^1, Is1^2, Is2^2, Is3^2]`
//! followed by the nine products `Is_j^1 Is_k^2` row-major in `(j, k)`,
//! `j` indexing particle 1. The product components are grade-4 objects in
//! the underlying relativistic algebra; here they are simply products of
//! commuting bivectors.

use crate::spinor1::Spinor1;
use crate::Error;
use num_complex::Complex64;

/// Tolerance below which a state is accepted as satisfying `psi E = psi`.
pub const PROJECTION_TOL: f64 = 1e-10;
/// Tolerance on `|<psi,psi> - 1|` for operations that require normalization.
pub const NORMALIZATION_TOL: f64 = 1e-10;
/// Projection drift above which the Pauli/imaginary actions re-project.
const DRIFT_TOL: f64 = 1e-13;

/// Single-space product table over `[1, Is1, Is2, Is3]`:
/// `QTAB[p][q] = (sign, index)` with `b_p b_q = sign * b_index`.
const QTAB: [[(f64, usize); 4]; 4] = [
    [(1., 0), (1., 1), (1., 2), (1., 3)],
    [(1., 1), (-1., 0), (-1., 3), (1., 2)],
    [(1., 2), (1., 3), (-1., 0), (-1., 1)],
    [(1., 3), (-1., 2), (1., 1), (-1., 0)],
];

/// Linear index of the basis element `b_p^1 b_q^2` (p, q in 0..=3, 0 = scalar).
const fn pq_to_idx(p: usize, q: usize) -> usize {
    match (p, q) {
        (0, 0) => 0,
        (_, 0) => p,
        (0, _) => 3 + q,
        _ => 7 + 3 * (p - 1) + (q - 1),
    }
}

const fn idx_to_pq(i: usize) -> (usize, usize) {
    match i {
        0 => (0, 0),
        1..=3 => (i, 0),
        4..=6 => (0, i - 3),
        _ => ((i - 7) / 3 + 1, (i - 7) % 3 + 1),
    }
}

/// An element of the 16-dimensional two-particle algebra.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct TwoParticleMV {
    pub c: [f64; 16],
}

impl TwoParticleMV {
    pub const ZERO: Self = Self { c: [0.0; 16] };

    pub fn from_coefficients(c: [f64; 16]) -> Self {
        Self { c }
    }

    pub fn scalar(s: f64) -> Self {
        let mut c = [0.0; 16];
        c[0] = s;
        Self { c }
    }

    /// The bivector `Is_k^1` of particle space 1.
    pub fn i_sigma1(k: usize) -> Self {
        assert!((1..=3).contains(&k), "bivector index out of range: {k}");
        let mut c = [0.0; 16];
        c[pq_to_idx(k, 0)] = 1.0;
        Self { c }
    }

    /// The bivector `Is_k^2` of particle space 2.
    pub fn i_sigma2(k: usize) -> Self {
        assert!((1..=3).contains(&k), "bivector index out of range: {k}");
        let mut c = [0.0; 16];
        c[pq_to_idx(0, k)] = 1.0;
        Self { c }
    }

    /// The product `Is_j^1 Is_k^2`.
    pub fn basis_product(j: usize, k: usize) -> Self {
        assert!((1..=3).contains(&j) && (1..=3).contains(&k));
        let mut c = [0.0; 16];
        c[pq_to_idx(j, k)] = 1.0;
        Self { c }
    }

    /// Coefficient of `Is_j^1 Is_k^2`.
    pub fn product_coefficient(&self, j: usize, k: usize) -> f64 {
        assert!((1..=3).contains(&j) && (1..=3).contains(&k));
        self.c[pq_to_idx(j, k)]
    }

    pub fn scalar_part(&self) -> f64 {
        self.c[0]
    }

    /// Geometric product; each particle space multiplies independently.
    pub fn gp(&self, rhs: &Self) -> Self {
        let mut out = [0.0; 16];
        for i in 0..16 {
            let a = self.c[i];
            if a == 0.0 {
                continue;
            }
            let (p1, q1) = idx_to_pq(i);
            for j in 0..16 {
                let b = rhs.c[j];
                if b == 0.0 {
                    continue;
                }
                let (p2, q2) = idx_to_pq(j);
                let (s1, p) = QTAB[p1][p2];
                let (s2, q) = QTAB[q1][q2];
                out[pq_to_idx(p, q)] += s1 * s2 * a * b;
            }
        }
        Self { c: out }
    }

    /// Reversion: single-space bivectors flip sign, their products do not.
    pub fn reverse(&self) -> Self {
        let mut c = self.c;
        for v in c[1..=6].iter_mut() {
            *v = -*v;
        }
        Self { c }
    }

    pub fn norm_inf(&self) -> f64 {
        self.c.iter().fold(0.0, |m, v| m.max(v.abs()))
    }

    pub fn max_coeff_delta(&self, other: &Self) -> f64 {
        self.c
            .iter()
            .zip(other.c.iter())
            .fold(0.0, |m: f64, (a, b)| m.max((a - b).abs()))
    }
}

impl std::ops::Add for TwoParticleMV {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        let mut c = self.c;
        for (a, b) in c.iter_mut().zip(rhs.c.iter()) {
            *a += b;
        }
        Self { c }
    }
}

impl std::ops::Sub for TwoParticleMV {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        let mut c = self.c;
        for (a, b) in c.iter_mut().zip(rhs.c.iter()) {
            *a -= b;
        }
        Self { c }
    }
}

impl std::ops::Neg for TwoParticleMV {
    type Output = Self;
    fn neg(self) -> Self {
        let mut c = self.c;
        for a in c.iter_mut() {
            *a = -*a;
        }
        Self { c }
    }
}

impl std::ops::Mul for TwoParticleMV {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        self.gp(&rhs)
    }
}

impl std::ops::Mul<f64> for TwoParticleMV {
    type Output = Self;
    fn mul(self, s: f64) -> Self {
        let mut c = self.c;
        for a in c.iter_mut() {
            *a *= s;
        }
        Self { c }
    }
}

/// The two-particle correlator `E = (1 - Is3^1 Is3^2)/2`; idempotent.
pub fn correlator_e() -> TwoParticleMV {
    let mut c = [0.0; 16];
    c[0] = 0.5;
    c[pq_to_idx(3, 3)] = -0.5;
    TwoParticleMV { c }
}

/// The complex structure `J = (Is3^1 + Is3^2)/2`; satisfies `J^2 = -E`.
pub fn complex_structure_j() -> TwoParticleMV {
    let mut c = [0.0; 16];
    c[pq_to_idx(3, 0)] = 0.5;
    c[pq_to_idx(0, 3)] = 0.5;
    TwoParticleMV { c }
}

/// `exp(J chi) = 1 + sin(chi) J + (cos(chi) - 1) E`, the phase factor that
/// right-multiplies correlated states.
pub fn exp_j(chi: f64) -> TwoParticleMV {
    TwoParticleMV::scalar(1.0) + complex_structure_j() * chi.sin()
        + correlator_e() * (chi.cos() - 1.0)
}

/// Embed a one-particle even multivector into particle space 1.
pub fn embed1(s: &Spinor1) -> TwoParticleMV {
    let mut c = [0.0; 16];
    c[0] = s.a[0];
    for k in 1..=3 {
        c[pq_to_idx(k, 0)] = s.a[k];
    }
    TwoParticleMV { c }
}

/// Embed a one-particle even multivector into particle space 2.
pub fn embed2(s: &Spinor1) -> TwoParticleMV {
    let mut c = [0.0; 16];
    c[0] = s.a[0];
    for k in 1..=3 {
        c[pq_to_idx(0, k)] = s.a[k];
    }
    TwoParticleMV { c }
}

/// Deviation from the physical-state invariant: `max |(psi E - psi)_i|`.
pub fn projection_error(psi: &TwoParticleMV) -> f64 {
    psi.gp(&correlator_e()).max_coeff_delta(psi)
}

/// The product state `|psi, phi> <-> psi^1 phi^2 E`.
pub fn product_state(psi: &Spinor1, phi: &Spinor1) -> TwoParticleMV {
    embed1(psi).gp(&embed2(phi)).gp(&correlator_e())
}

fn basis_spinor(bit: usize) -> Spinor1 {
    match bit {
        0 => Spinor1::ONE,
        _ => Spinor1::new(0.0, 0.0, -1.0, 0.0), // -Is2
    }
}

/// Build a correlated state from the four complex amplitudes
/// `(c00, c01, c10, c11)` of `sum c_ij |i,j>`.
pub fn from_complex4(amps: &[Complex64; 4]) -> TwoParticleMV {
    let j = complex_structure_j();
    let mut out = TwoParticleMV::ZERO;
    for (n, amp) in amps.iter().enumerate() {
        let m = product_state(&basis_spinor(n >> 1), &basis_spinor(n & 1));
        out = out + m * amp.re + m.gp(&j) * amp.im;
    }
    out
}

/// Recover the four complex amplitudes of a correlated state.
///
/// Errors if the input violates `psi E = psi` beyond [`PROJECTION_TOL`].
pub fn to_complex4(psi: &TwoParticleMV) -> Result<[Complex64; 4], Error> {
    let dev = projection_error(psi);
    if dev > PROJECTION_TOL {
        return Err(Error::NotProjected(dev));
    }
    let c = &psi.c;
    let idx = pq_to_idx;
    Ok([
        Complex64::new(c[0] - c[idx(3, 3)], c[idx(3, 0)] + c[idx(0, 3)]),
        Complex64::new(-(c[idx(0, 2)] + c[idx(3, 1)]), c[idx(0, 1)] - c[idx(3, 2)]),
        Complex64::new(-(c[idx(2, 0)] + c[idx(1, 3)]), c[idx(1, 0)] - c[idx(2, 3)]),
        Complex64::new(c[idx(2, 2)] - c[idx(1, 1)], -(c[idx(1, 2)] + c[idx(2, 1)])),
    ])
}

fn reproject_if_drifted(m: TwoParticleMV) -> TwoParticleMV {
    if projection_error(&m) > DRIFT_TOL {
        m.gp(&correlator_e())
    } else {
        m
    }
}

/// Action of the k-th Pauli operator on one particle: `-Is_k^a psi J`.
///
/// Keeps the result on the correlated subspace, re-projecting when
/// floating-point drift exceeds the invariant tolerance.
pub fn apply_pauli2(particle: usize, k: usize, psi: &TwoParticleMV) -> TwoParticleMV {
    let b = match particle {
        1 => TwoParticleMV::i_sigma1(k),
        2 => TwoParticleMV::i_sigma2(k),
        _ => panic!("particle index out of range: {particle}"),
    };
    reproject_if_drifted(-b.gp(psi).gp(&complex_structure_j()))
}

/// Action of the unit imaginary: right multiplication by `J`.
pub fn apply_i2(psi: &TwoParticleMV) -> TwoParticleMV {
    reproject_if_drifted(psi.gp(&complex_structure_j()))
}

/// Quantum inner product `<psi|phi> = 2<phi E psi~> - 2<phi J psi~> i`.
pub fn inner_product2(psi: &TwoParticleMV, phi: &TwoParticleMV) -> Complex64 {
    let psi_rev = psi.reverse();
    let re = phi.gp(&correlator_e()).gp(&psi_rev).scalar_part();
    let im = phi.gp(&complex_structure_j()).gp(&psi_rev).scalar_part();
    Complex64::new(2.0 * re, -2.0 * im)
}

/// `<psi,psi>` as a real number.
pub fn norm_sq(psi: &TwoParticleMV) -> f64 {
    inner_product2(psi, psi).re
}

fn require_normalized(psi: &TwoParticleMV) -> Result<(), Error> {
    let n = norm_sq(psi);
    if (n - 1.0).abs() > NORMALIZATION_TOL {
        return Err(Error::NotNormalized(n));
    }
    Ok(())
}

/// The observable `psi E psi~`; scalar part 1/2 for a normalized state.
pub fn observable_e(psi: &TwoParticleMV) -> TwoParticleMV {
    psi.gp(&correlator_e()).gp(&psi.reverse())
}

/// The observable `psi J psi~`; carries only single-space bivector parts
/// and extends the polarization bivector to two particles.
pub fn observable_j(psi: &TwoParticleMV) -> TwoParticleMV {
    psi.gp(&complex_structure_j()).gp(&psi.reverse())
}

/// Scalar inner product of a basis bivector with an observable, i.e. the
/// scalar part of their geometric product.
fn dot_scalar(b: &TwoParticleMV, obs: &TwoParticleMV) -> f64 {
    b.gp(obs).scalar_part()
}

/// Bloch vector of the reduced density matrix of one particle:
/// `P_k = -2 (Is_k^a) . (psi J psi~)`.
///
/// Requires a normalized state; the norm of the result equals `cos(alpha)`.
pub fn reduced_polarization(psi: &TwoParticleMV, particle: usize) -> Result<[f64; 3], Error> {
    require_normalized(psi)?;
    let obs = observable_j(psi);
    let mut p = [0.0; 3];
    for (k, out) in p.iter_mut().enumerate() {
        let b = match particle {
            1 => TwoParticleMV::i_sigma1(k + 1),
            2 => TwoParticleMV::i_sigma2(k + 1),
            _ => panic!("particle index out of range: {particle}"),
        };
        *out = -2.0 * dot_scalar(&b, &obs);
    }
    Ok(p)
}

/// The Pauli expansion coefficients of the pure-state density matrix
/// `rho = (1 + a_k s_k x 1 + b_k 1 x s_k + c_jk s_j x s_k)/4`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DensityCoefficients {
    pub a: [f64; 3],
    pub b: [f64; 3],
    /// `c[j-1][k-1] = <s_j x s_k>`, same (j, k) layout as the product basis.
    pub c: [[f64; 3]; 3],
}

/// Extract all density-matrix degrees of freedom from the two observables:
/// `a_k = -2 Is_k^1 . (psi J psi~)`, `c_jk = -2 (Is_j^1 Is_k^2) . (psi E psi~)`.
pub fn density_coefficients(psi: &TwoParticleMV) -> Result<DensityCoefficients, Error> {
    require_normalized(psi)?;
    let obs_j = observable_j(psi);
    let obs_e = observable_e(psi);
    let mut a = [0.0; 3];
    let mut b = [0.0; 3];
    let mut c = [[0.0; 3]; 3];
    for k in 0..3 {
        a[k] = -2.0 * dot_scalar(&TwoParticleMV::i_sigma1(k + 1), &obs_j);
        b[k] = -2.0 * dot_scalar(&TwoParticleMV::i_sigma2(k + 1), &obs_j);
    }
    for (j, row) in c.iter_mut().enumerate() {
        for (k, v) in row.iter_mut().enumerate() {
            *v = -2.0 * dot_scalar(&TwoParticleMV::basis_product(j + 1, k + 1), &obs_e);
        }
    }
    Ok(DensityCoefficients { a, b, c })
}

/// Measurement overlap probability
/// `P(psi, phi) = <(psi E psi~)(phi E phi~)> - <(psi J psi~)(phi J phi~)>`.
///
/// Both states must be normalized; equals `|<psi|phi>|^2`.
pub fn overlap_probability(psi: &TwoParticleMV, phi: &TwoParticleMV) -> Result<f64, Error> {
    require_normalized(psi)?;
    require_normalized(phi)?;
    let e_part = observable_e(psi).gp(&observable_e(phi)).scalar_part();
    let j_part = observable_j(psi).gp(&observable_j(phi)).scalar_part();
    Ok(e_part - j_part)
}

/// The spin singlet `(|01> - |10>)/sqrt(2) <-> (Is2^1 - Is2^2) E / sqrt(2)`;
/// maximally entangled and isotropic.
pub fn singlet() -> TwoParticleMV {
    let b = TwoParticleMV::i_sigma1(2) - TwoParticleMV::i_sigma2(2);
    (b * std::f64::consts::FRAC_1_SQRT_2).gp(&correlator_e())
}

/// Assemble the rotor-form state
/// `rho^(1/2) R^1 S^2 (cos(alpha/2) + sin(alpha/2) Is2^1 Is2^2) exp(J chi) E`.
///
/// `r` and `s` are the single-particle rotors of the two local frames; the
/// result is invariant under `R -> R exp(Is3 b)`, `S -> S exp(-Is3 b)`.
pub fn rotor_form_state(
    rho: f64,
    chi: f64,
    alpha: f64,
    r: &Spinor1,
    s: &Spinor1,
) -> TwoParticleMV {
    let ent = TwoParticleMV::scalar((alpha / 2.0).cos())
        + TwoParticleMV::basis_product(2, 2) * (alpha / 2.0).sin();
    embed1(r)
        .gp(&embed2(s))
        .gp(&ent)
        .gp(&exp_j(chi))
        .gp(&correlator_e())
        * rho.sqrt()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    const SQRT_HALF: f64 = std::f64::consts::FRAC_1_SQRT_2;

    #[test]
    fn correlator_and_complex_structure_identities() {
        let e = correlator_e();
        let j = complex_structure_j();
        assert_eq!(e.gp(&e), e);
        assert_eq!(j.gp(&j), -e);
        assert_eq!(j.gp(&e), j);
        assert_eq!(e.gp(&j), j);
    }

    #[test]
    fn different_space_bivectors_commute() {
        for j in 1..=3 {
            for k in 1..=3 {
                let a = TwoParticleMV::i_sigma1(j);
                let b = TwoParticleMV::i_sigma2(k);
                assert_eq!(a.gp(&b), b.gp(&a));
            }
        }
    }

    #[test]
    fn product_state_of_basis_spinors() {
        let e = product_state(&Spinor1::ONE, &Spinor1::ONE);
        assert_eq!(e, correlator_e());
        // |01> = -Is2^2 E
        let m01 = product_state(&Spinor1::ONE, &Spinor1::new(0.0, 0.0, -1.0, 0.0));
        let expect = (-TwoParticleMV::i_sigma2(2)).gp(&correlator_e());
        assert_eq!(m01, expect);
    }

    #[test]
    fn from_complex4_basis_states() {
        let e = from_complex4(&[c(1., 0.), c(0., 0.), c(0., 0.), c(0., 0.)]);
        assert_eq!(e, correlator_e());
    }

    #[test]
    fn from_complex4_singlet_matches_bivector_form() {
        let amps = [c(0., 0.), c(SQRT_HALF, 0.), c(-SQRT_HALF, 0.), c(0., 0.)];
        assert!(from_complex4(&amps).max_coeff_delta(&singlet()) < 1e-15);
    }

    #[test]
    fn to_complex4_inverts_from_complex4() {
        let amps = [c(0.3, -0.1), c(0.2, 0.5), c(-0.4, 0.25), c(0.1, 0.7)];
        let round = to_complex4(&from_complex4(&amps)).unwrap();
        for (got, want) in round.iter().zip(amps.iter()) {
            assert!((got - want).norm() < 1e-15);
        }
    }

    #[test]
    fn to_complex4_rejects_uncorrelated_input() {
        let bad = TwoParticleMV::i_sigma1(1); // no E factor
        assert!(matches!(to_complex4(&bad), Err(Error::NotProjected(_))));
    }

    #[test]
    fn states_see_one_imaginary() {
        // psi Is3^1 = psi Is3^2 on the correlated subspace
        let amps = [c(0.3, -0.1), c(0.2, 0.5), c(-0.4, 0.25), c(0.1, 0.7)];
        let psi = from_complex4(&amps);
        let lhs = psi.gp(&TwoParticleMV::i_sigma1(3));
        let rhs = psi.gp(&TwoParticleMV::i_sigma2(3));
        assert!(lhs.max_coeff_delta(&rhs) < 1e-15);
    }

    #[test]
    fn apply_i2_on_correlator_gives_j() {
        assert_eq!(apply_i2(&correlator_e()), complex_structure_j());
    }

    #[test]
    fn apply_i2_twice_negates() {
        let psi = from_complex4(&[c(0.5, 0.1), c(0.0, -0.3), c(0.7, 0.0), c(-0.2, 0.4)]);
        let twice = apply_i2(&apply_i2(&psi));
        assert!(twice.max_coeff_delta(&-psi) < 1e-15);
    }

    #[test]
    fn pauli2_on_correlator() {
        // s3 x 1 |00> = |00>
        let e = correlator_e();
        assert!(apply_pauli2(1, 3, &e).max_coeff_delta(&e) < 1e-15);
        // s1 x 1 |00> = |10>
        let flipped = to_complex4(&apply_pauli2(1, 1, &e)).unwrap();
        assert!((flipped[2] - c(1.0, 0.0)).norm() < 1e-15);
        for i in [0, 1, 3] {
            assert!(flipped[i].norm() < 1e-15);
        }
    }

    #[test]
    fn inner_product2_basics() {
        let e = correlator_e();
        assert!((inner_product2(&e, &e) - c(1.0, 0.0)).norm() < 1e-15);
        let s = singlet();
        assert!((inner_product2(&s, &s) - c(1.0, 0.0)).norm() < 1e-15);
    }

    #[test]
    fn observables_of_the_correlator() {
        assert_eq!(observable_e(&correlator_e()), correlator_e());
        assert_eq!(observable_j(&correlator_e()), complex_structure_j());
    }

    #[test]
    fn singlet_observables() {
        let s = singlet();
        // psi E psi~ = (1 + sum_k Is_k^1 Is_k^2)/2, exactly
        let mut expect = TwoParticleMV::scalar(0.5);
        for k in 1..=3 {
            expect = expect + TwoParticleMV::basis_product(k, k) * 0.5;
        }
        assert!(observable_e(&s).max_coeff_delta(&expect) <= 2.0 * f64::EPSILON);
        // psi J psi~ = 0
        assert!(observable_j(&s).norm_inf() < 1e-14);
    }

    #[test]
    fn singlet_amplitudes() {
        let amps = to_complex4(&singlet()).unwrap();
        assert_eq!(amps[0], c(0.0, 0.0));
        assert!((amps[1] - c(SQRT_HALF, 0.0)).norm() < 1e-15);
        assert!((amps[2] - c(-SQRT_HALF, 0.0)).norm() < 1e-15);
        assert_eq!(amps[3], c(0.0, 0.0));
    }

    #[test]
    fn reduced_polarization_of_basis_and_singlet() {
        let e = correlator_e();
        assert_eq!(reduced_polarization(&e, 1).unwrap(), [0.0, 0.0, 1.0]);
        assert_eq!(reduced_polarization(&e, 2).unwrap(), [0.0, 0.0, 1.0]);
        let s = singlet();
        for particle in [1, 2] {
            let p = reduced_polarization(&s, particle).unwrap();
            assert!(p.iter().all(|v| v.abs() < 1e-15));
        }
    }

    #[test]
    fn reduced_polarization_requires_normalization() {
        let big = correlator_e() * 2.0;
        assert!(matches!(reduced_polarization(&big, 1), Err(Error::NotNormalized(_))));
    }

    #[test]
    fn density_coefficients_of_singlet() {
        let d = density_coefficients(&singlet()).unwrap();
        for k in 0..3 {
            assert!(d.a[k].abs() < 1e-15);
            assert!(d.b[k].abs() < 1e-15);
        }
        for j in 0..3 {
            for k in 0..3 {
                let want = if j == k { -1.0 } else { 0.0 };
                assert!((d.c[j][k] - want).abs() < 1e-14);
            }
        }
    }

    #[test]
    fn overlap_probability_basics() {
        let e = correlator_e();
        assert!((overlap_probability(&e, &e).unwrap() - 1.0).abs() < 1e-15);
        // singlet against the aligned product state: zero
        let s = singlet();
        assert!(overlap_probability(&s, &e).unwrap().abs() < 1e-15);
        let unnorm = e * 1.1;
        assert!(matches!(overlap_probability(&unnorm, &e), Err(Error::NotNormalized(_))));
    }

    #[test]
    fn rotor_form_with_trivial_parameters_is_phase_times_e() {
        let chi = 0.8;
        let got = rotor_form_state(1.0, chi, 0.0, &Spinor1::ONE, &Spinor1::ONE);
        let expect = correlator_e() * chi.cos() + complex_structure_j() * chi.sin();
        assert!(got.max_coeff_delta(&expect) < 1e-15);
    }

    #[test]
    fn exp_j_matches_repeated_i_action() {
        // exp(J pi/2) acting on E equals one application of i
        let rotated = correlator_e().gp(&exp_j(std::f64::consts::FRAC_PI_2));
        assert!(rotated.max_coeff_delta(&complex_structure_j()) < 1e-15);
    }
}
