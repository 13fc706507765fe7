//! Shared helpers for the cross-validation test suites.

#![allow(dead_code)]

use num_complex::Complex64;
use qga_core::msta2::{self, TwoParticleMV};
use qga_core::spinor1::Spinor1;
use qga_oracle::ComplexState;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

pub fn rng(seed: u64) -> StdRng {
    StdRng::seed_from_u64(seed)
}

pub fn random_complex(rng: &mut StdRng) -> Complex64 {
    Complex64::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0))
}

/// A random spinor with coefficients in [-1, 1); retried if degenerate.
pub fn random_spinor(rng: &mut StdRng) -> Spinor1 {
    loop {
        let s = Spinor1::new(
            rng.gen_range(-1.0..1.0),
            rng.gen_range(-1.0..1.0),
            rng.gen_range(-1.0..1.0),
            rng.gen_range(-1.0..1.0),
        );
        if s.probability_density() > 1e-3 {
            return s;
        }
    }
}

/// A random unit-magnitude spinor, i.e. a rotor.
pub fn random_rotor(rng: &mut StdRng) -> Spinor1 {
    let s = random_spinor(rng);
    s.scale(1.0 / s.probability_density().sqrt())
}

/// Four random complex amplitudes, away from the zero state.
pub fn random_amps(rng: &mut StdRng) -> [Complex64; 4] {
    loop {
        let amps = [
            random_complex(rng),
            random_complex(rng),
            random_complex(rng),
            random_complex(rng),
        ];
        if amps.iter().map(|z| z.norm_sqr()).sum::<f64>() > 1e-3 {
            return amps;
        }
    }
}

/// Random normalized amplitudes.
pub fn random_unit_amps(rng: &mut StdRng) -> [Complex64; 4] {
    let amps = random_amps(rng);
    let n = amps.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
    amps.map(|z| z / n)
}

/// Random normalized correlated two-particle state.
pub fn random_unit_state(rng: &mut StdRng) -> TwoParticleMV {
    msta2::from_complex4(&random_unit_amps(rng))
}

pub fn spinor_to_oracle(s: &Spinor1) -> ComplexState {
    let (c0, c1) = s.to_complex();
    ComplexState::new(vec![c0, c1])
}

pub fn amps_to_oracle(amps: &[Complex64; 4]) -> ComplexState {
    ComplexState::new(amps.to_vec())
}

pub fn state_to_oracle(psi: &TwoParticleMV) -> ComplexState {
    amps_to_oracle(&msta2::to_complex4(psi).expect("state not on the correlated subspace"))
}

/// Largest componentwise difference between two amplitude vectors after
/// aligning the best global phase.
pub fn phase_free_delta(a: &[Complex64; 4], b: &[Complex64; 4]) -> f64 {
    let overlap: Complex64 = a.iter().zip(b.iter()).map(|(x, y)| x.conj() * y).sum();
    let phase = if overlap.norm() > 0.0 {
        overlap / overlap.norm()
    } else {
        Complex64::new(1.0, 0.0)
    };
    a.iter()
        .zip(b.iter())
        .fold(0.0, |m: f64, (x, y)| m.max((x * phase - y).norm()))
}
