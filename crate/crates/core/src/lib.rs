//! Geometric-algebra engine for one- and two-qubit pure states.
//!
//! Qubit states live in the even subalgebra of the geometric algebra of 3D
//! space ([`ga3`]): a single-particle state is a scalar-plus-bivector
//! multivector ([`spinor1::Spinor1`]), a two-particle state lives in the
//! 16-dimensional correlated product algebra ([`msta2::TwoParticleMV`]).
//! [`schmidt`] extracts the Schmidt decomposition of an arbitrary two-qubit
//! state and rebuilds it in rotor form. Everything here is a pure function
//! over immutable values.

use thiserror::Error;

pub mod ga3;
pub mod msta2;
pub mod schmidt;
pub mod spinor1;

/// Domain errors shared across the engine.
#[derive(Debug, Error)]
pub enum Error {
    #[error("the zero state has no meaningful decomposition")]
    ZeroState,
    #[error("multivector is not a correlated two-particle state (projection deviation {0:.3e})")]
    NotProjected(f64),
    #[error("state is not normalized (norm^2 = {0})")]
    NotNormalized(f64),
    #[error("iteration failed to converge within {0} iterations")]
    NoConvergence(usize),
}
