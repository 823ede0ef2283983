//! The closed-form layer.
//!
//! The frequency parameter μ maps onto an angle θ ∈ (0, π] through
//!
//! ```text
//! cos θ = (μ² − 1/4)/(μ² + 1/4),   sin θ = μ/(μ² + 1/4),
//! ```
//!
//! and the projection integral ∫₀^∞ x^ν e^{−x/2} J_ν(μx) L_n^{2ν}(x) dx
//! factors into an n-independent envelope
//!
//! ```text
//! f_ν(μ) = A_ν μ^{−1/2} (sin θ)^{ν+1/2},   A_ν = 2^ν Γ(ν+1/2)/√π,
//! ```
//!
//! times the Gegenbauer polynomial C_n^{ν+1/2}(cos θ). The envelope solves
//! the first-order equation (μ d/dμ + 1/2) f_ν = −(ν+1/2) cos θ · f_ν, and
//! A_ν is pinned by the μ, x → 0 limit of the expansion (the oscillatory
//! boundary value of the Laguerre generating function).

use crate::orthopoly::{gamma_ratio_kernel, gegenbauer_kernel, log_gamma_kernel};
use crate::{Error, Result};

/// The spectral map μ ↦ (cos θ, sin θ).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AngleCoordinates {
    pub mu: f64,
    /// (μ² − 1/4)/(μ² + 1/4), increasing from −1 toward +1.
    pub cos_theta: f64,
    /// μ/(μ² + 1/4) ≥ 0, so θ ∈ (0, π].
    pub sin_theta: f64,
}

/// Map μ ≥ 0 onto the Gegenbauer argument interval.
pub fn angle_map(mu: f64) -> Result<AngleCoordinates> {
    if !(mu >= 0.0) {
        return Err(Error::domain(format!(
            "spectral map requires μ ≥ 0, got {mu}"
        )));
    }
    let m2 = mu * mu;
    let den = m2 + 0.25;
    Ok(AngleCoordinates {
        mu,
        cos_theta: (m2 - 0.25) / den,
        sin_theta: mu / den,
    })
}

fn check_order(nu: f64) -> Result<()> {
    if !(nu > -0.5) {
        return Err(Error::domain(format!(
            "order must satisfy ν > −1/2, got {nu}"
        )));
    }
    Ok(())
}

/// A_ν = 2^ν Γ(ν+1/2)/√π, through log-gamma.
pub fn amplitude_constant(nu: f64) -> Result<f64> {
    check_order(nu)?;
    Ok(amplitude_kernel(nu))
}

fn amplitude_kernel(nu: f64) -> f64 {
    (nu * std::f64::consts::LN_2 + log_gamma_kernel(nu + 0.5) - 0.5 * std::f64::consts::PI.ln())
        .exp()
}

/// Envelope f_ν(μ) = A_ν μ^{−1/2} (sin θ)^{ν+1/2}, μ > 0.
///
/// The power of sin θ goes through exp((ν+1/2)·ln sin θ) so the μ → ∞
/// tail (sin θ ~ 1/μ) underflows gracefully instead of losing accuracy
/// in `powf` of a tiny base.
pub fn envelope(nu: f64, mu: f64) -> Result<f64> {
    check_order(nu)?;
    if !(mu > 0.0) {
        return Err(Error::domain(format!(
            "envelope requires μ > 0 (the closed form handles μ = 0 by its own limit), got {mu}"
        )));
    }
    Ok(envelope_kernel(nu, mu))
}

fn envelope_kernel(nu: f64, mu: f64) -> f64 {
    let m2 = mu * mu;
    let sin_theta = mu / (m2 + 0.25);
    amplitude_kernel(nu) / mu.sqrt() * ((nu + 0.5) * sin_theta.ln()).exp()
}

/// One evaluated cell of the closed form, with the μ = 0 limit flagged so
/// downstream tables can annotate it.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ClosedFormCell {
    pub n: u32,
    pub nu: f64,
    pub mu: f64,
    pub value: f64,
    /// True when the value is the continuous μ → 0 extension rather than
    /// a direct evaluation.
    pub is_limit: bool,
}

/// Closed form of ∫₀^∞ x^ν e^{−x/2} J_ν(μx) L_n^{2ν}(x) dx.
///
/// For μ > 0 this is f_ν(μ) · C_n^{ν+1/2}(cos θ). At μ = 0 the continuous
/// extension is returned: 0 for ν > 0 and 2(−1)ⁿ for ν = 0. For
/// ν ∈ (−1/2, 0) the μ → 0 limit diverges, which is reported as a domain
/// error.
pub fn closed_form_cell(n: u32, nu: f64, mu: f64) -> Result<ClosedFormCell> {
    check_order(nu)?;
    if !(mu >= 0.0) {
        return Err(Error::domain(format!(
            "closed form requires μ ≥ 0, got {mu}"
        )));
    }
    if mu == 0.0 {
        let value = if nu > 0.0 {
            0.0
        } else if nu == 0.0 {
            if n % 2 == 0 {
                2.0
            } else {
                -2.0
            }
        } else {
            return Err(Error::domain(format!(
                "the μ → 0 limit diverges for ν ∈ (−1/2, 0), got ν = {nu}"
            )));
        };
        return Ok(ClosedFormCell {
            n,
            nu,
            mu,
            value,
            is_limit: true,
        });
    }
    let angles = angle_map(mu)?;
    let value = envelope_kernel(nu, mu) * gegenbauer_kernel(n, nu + 0.5, angles.cos_theta);
    Ok(ClosedFormCell {
        n,
        nu,
        mu,
        value,
        is_limit: false,
    })
}

/// Value-only variant of [`closed_form_cell`].
pub fn closed_form_integral(n: u32, nu: f64, mu: f64) -> Result<f64> {
    Ok(closed_form_cell(n, nu, mu)?.value)
}

/// Expansion coefficient c_n(μ) = Γ(n+1)/Γ(n+2ν+1) · f_ν(μ) C_n^{ν+1/2}(cos θ).
pub fn expansion_coefficient(n: u32, nu: f64, mu: f64) -> Result<f64> {
    check_order(nu)?;
    if !(mu > 0.0) {
        return Err(Error::domain(format!(
            "expansion coefficient requires μ > 0, got {mu}"
        )));
    }
    let nf = n as f64;
    let ratio = gamma_ratio_kernel(nf + 1.0, nf + 2.0 * nu + 1.0);
    Ok(ratio * closed_form_integral(n, nu, mu)?)
}

/// P_n(μ) = f_ν(μ) C_n^{ν+1/2}(cos θ) — the Γ-ratio-normalized
/// coefficient, equal to the closed-form integral for μ > 0.
pub fn p_value(n: u32, nu: f64, mu: f64) -> Result<f64> {
    check_order(nu)?;
    if !(mu > 0.0) {
        return Err(Error::domain(format!("P_n(μ) requires μ > 0, got {mu}")));
    }
    let angles = angle_map(mu)?;
    Ok(envelope_kernel(nu, mu) * gegenbauer_kernel(n, nu + 0.5, angles.cos_theta))
}

/// Residual |μ f′ + f/2 + (ν+1/2) cos θ · f| of the envelope equation,
/// with f′ taken by a central difference of step h. Pure discretization
/// error for the exact envelope, O(h²) until the round-off floor.
pub fn envelope_ode_residual(nu: f64, mu: f64, h: f64) -> Result<f64> {
    check_order(nu)?;
    if !(h > 0.0) || !(mu > 2.0 * h) {
        return Err(Error::domain(format!(
            "envelope residual requires μ > 2h > 0, got μ = {mu}, h = {h}"
        )));
    }
    let fp = envelope_kernel(nu, mu + h);
    let fm = envelope_kernel(nu, mu - h);
    let f0 = envelope_kernel(nu, mu);
    let cos_theta = angle_map(mu)?.cos_theta;
    let deriv = (fp - fm) / (2.0 * h);
    Ok((mu * deriv + 0.5 * f0 + (nu + 0.5) * cos_theta * f0).abs())
}
