//! Numerical toolkit for the projection integral
//!
//! ```text
//!     I_n(ν, μ) = ∫₀^∞ x^ν e^{−x/2} J_ν(μx) L_n^{2ν}(x) dx
//! ```
//!
//! with μ ≥ 0 and ν > −1/2, together with every ingredient needed to
//! derive, evaluate and independently verify its closed form
//!
//! ```text
//!     I_n(ν, μ) = 2^ν Γ(ν+1/2) (πμ)^{−1/2} (sin θ)^{ν+1/2} C_n^{ν+1/2}(cos θ),
//!     cos θ = (μ² − 1/4)/(μ² + 1/4).
//! ```
//!
//! The crate is organized around the derivation itself:
//!
//! - [`orthopoly`] — associated Laguerre and Gegenbauer polynomials, their
//!   recurrences, differential formulas and the Laguerre generating function.
//! - [`bessel`] — J_ν(x) for real order ν > −1/2 on x ≥ 0.
//! - [`spectral`] — the closed-form layer: the map μ ↦ θ, the envelope
//!   f_ν(μ), expansion coefficients c_n(μ) and the closed-form integral.
//! - [`tridiag`] — the basis pair (φ_n, φ̃_n), the action of the Bessel
//!   operator on the basis, tridiagonal matrix elements and the three-term
//!   recursion they generate.
//! - [`quadrature`] — an independent adaptive Gauss–Legendre oracle for the
//!   semi-infinite oscillatory integrals, plus series reconstruction of
//!   J_ν(μx) from the expansion coefficients.
//!
//! Everything is plain `f64`; all functions are pure and safe to call from
//! any number of threads.

// Validation is written `!(x > 0.0)` so NaN fails the check; coefficient
// tables keep guard digits beyond f64; parity tests read better as n % 2.
#![allow(clippy::neg_cmp_op_on_partial_ord)]
#![allow(clippy::excessive_precision)]
#![allow(clippy::manual_is_multiple_of)]

pub mod bessel;
mod error;
pub mod orthopoly;
pub mod quadrature;
pub mod spectral;
pub mod tridiag;

pub use error::Error;

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;
