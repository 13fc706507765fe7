//! Single-particle spinors as even multivectors.
//!
//! A spin state maps to `psi = a0 + a_k Is_k`, with the complex components
//! carried as `c0 = a0 + i a3`, `c1 = -a2 + i a1`, so that `|0> <-> 1` and
//! `|1> <-> -Is2`. The Pauli operators act as `s_k psi s3`, the unit
//! imaginary as right multiplication by `Is3` — complex numbers only ever
//! appear at the API boundary.

use crate::ga3::{bivector_dot, exp_bivector, Multivector3};
use crate::Error;
use num_complex::Complex64;

/// An even multivector `a0 + a1 Is1 + a2 Is2 + a3 Is3` encoding one qubit.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct Spinor1 {
    /// Coefficients `[a0, a1, a2, a3]` over `[1, Is1, Is2, Is3]`.
    pub a: [f64; 4],
}

impl Spinor1 {
    pub const ONE: Self = Self { a: [1.0, 0.0, 0.0, 0.0] };

    pub fn new(a0: f64, a1: f64, a2: f64, a3: f64) -> Self {
        Self { a: [a0, a1, a2, a3] }
    }

    /// Map a complex 2-vector `(c0, c1)` onto a spinor.
    pub fn from_complex(c0: Complex64, c1: Complex64) -> Self {
        Self { a: [c0.re, c1.im, -c1.re, c0.im] }
    }

    /// Inverse of [`Spinor1::from_complex`]; exact round trip.
    pub fn to_complex(&self) -> (Complex64, Complex64) {
        let [a0, a1, a2, a3] = self.a;
        (Complex64::new(a0, a3), Complex64::new(-a2, a1))
    }

    pub fn to_multivector(&self) -> Multivector3 {
        let [a0, a1, a2, a3] = self.a;
        Multivector3::from_coefficients([a0, 0.0, 0.0, 0.0, a1, a2, a3, 0.0])
    }

    /// Read a spinor back out of an even multivector. Panics if odd-grade
    /// contamination exceeds 1e-9.
    pub fn from_even_multivector(m: &Multivector3) -> Self {
        assert!(
            m.c[1].abs() <= 1e-9 && m.c[2].abs() <= 1e-9 && m.c[3].abs() <= 1e-9
                && m.c[7].abs() <= 1e-9,
            "multivector has odd-grade components and is not a spinor"
        );
        Self { a: [m.c[0], m.c[4], m.c[5], m.c[6]] }
    }

    /// Action of the k-th Pauli operator: `s_k psi s3`.
    pub fn apply_pauli(&self, k: usize) -> Self {
        assert!((1..=3).contains(&k), "Pauli axis out of range: {k}");
        let m = Multivector3::sigma(k)
            .gp(&self.to_multivector())
            .gp(&Multivector3::sigma(3));
        Self::from_even_multivector(&m)
    }

    /// Action of the unit imaginary: `psi Is3`.
    pub fn apply_i(&self) -> Self {
        let m = self.to_multivector().gp(&Multivector3::i_sigma(3));
        Self::from_even_multivector(&m)
    }

    /// Quantum inner product `<self|other> = <phi psi~> - <phi Is3 psi~> i`.
    pub fn inner_product(&self, other: &Spinor1) -> Complex64 {
        let phi = other.to_multivector();
        let psi_rev = self.to_multivector().reverse();
        let re = phi.gp(&psi_rev).scalar_part();
        let im = phi.gp(&Multivector3::i_sigma(3)).gp(&psi_rev).scalar_part();
        Complex64::new(re, -im)
    }

    /// Probability density `<psi psi~> = a0^2 + a1^2 + a2^2 + a3^2`.
    pub fn probability_density(&self) -> f64 {
        let m = self.to_multivector();
        m.gp(&m.reverse()).scalar_part()
    }

    /// The polarization bivector `P = <psi Is3 psi~>_2 / rho`.
    ///
    /// Unit magnitude for every nonzero spinor; the zero spinor is a domain
    /// error.
    pub fn polarization_bivector(&self) -> Result<Multivector3, Error> {
        let rho = self.probability_density();
        if rho <= 0.0 {
            return Err(Error::ZeroState);
        }
        let m = self.to_multivector();
        let p = m.gp(&Multivector3::i_sigma(3)).gp(&m.reverse());
        Ok(p.grade_project(2) * (1.0 / rho))
    }

    /// Spin expectation components `P_k = -Is_k . P`.
    pub fn polarization_components(&self) -> Result<[f64; 3], Error> {
        let p = self.polarization_bivector()?;
        let mut out = [0.0; 3];
        for (k, v) in out.iter_mut().enumerate() {
            *v = -bivector_dot(&Multivector3::i_sigma(k + 1), &p);
        }
        Ok(out)
    }

    /// The state orthogonal to this one: `psi Is2`. Same magnitude.
    pub fn orthogonal(&self) -> Result<Spinor1, Error> {
        if self.probability_density() <= 0.0 {
            return Err(Error::ZeroState);
        }
        let m = self.to_multivector().gp(&Multivector3::i_sigma(2));
        Ok(Self::from_even_multivector(&m))
    }

    pub fn scale(&self, s: f64) -> Self {
        let mut a = self.a;
        for v in a.iter_mut() {
            *v *= s;
        }
        Self { a }
    }

    pub fn max_coeff_delta(&self, other: &Self) -> f64 {
        self.a
            .iter()
            .zip(other.a.iter())
            .fold(0.0, |m: f64, (x, y)| m.max((x - y).abs()))
    }
}

/// The Bloch-sphere spinor `psi(theta, phi) = exp(-phi Is3/2) exp(-theta Is2/2)`.
///
/// A rotor for any angles; `theta` in `[0, pi]`, `phi` in `(-pi, pi]`.
pub fn spinor_theta_phi(theta: f64, phi: f64) -> Spinor1 {
    let r_phi = exp_bivector(&(Multivector3::i_sigma(3) * (-phi / 2.0)));
    let r_theta = exp_bivector(&(Multivector3::i_sigma(2) * (-theta / 2.0)));
    Spinor1::from_even_multivector(&r_phi.gp(&r_theta))
}
