//! Numerics for Ramanujan's third-order mock theta functions `φ` and `ψ`.
//!
//! The crate evaluates the series inside the unit disc and exactly at roots
//! of unity, integrates the Mordell-type integrals that measure their failure
//! to be modular, and computes the asymptotic expansions at roots of unity
//! from exact Euler numbers. The quantum modular behaviour of the pair
//! `(q^{-1/24}φ, q^{-1/24}ψ)` is checked as pointwise residuals.
//!
//! Runnable walkthroughs live in `examples/`; `cargo run --example <name>`.

pub mod asymptotics;
pub mod cli;
pub mod error;
pub mod euler;
pub mod jets;
pub mod mordell;
pub mod numeric;
pub mod qseries;
pub mod quad;
pub mod transforms;
pub mod verify;

pub use error::{Error, Result};
pub use numeric::{Complex, Real};
pub use qseries::{AlphaPoint, Form, RootOfUnity, SeriesId};
pub use quad::QuadratureConfig;
