//! The point commands: eval, expand, recursion, tridiag.

use crate::config::{parse_u32_list, usage_error};
use crate::output::{fmt_f64, Sink};
use crate::{Format, Settings, EXIT_NON_CONVERGED, EXIT_OK};
use bessel_laguerre::orthopoly::gegenbauer_eval;
use bessel_laguerre::quadrature::{reconstruction_error, QuadratureConfig};
use bessel_laguerre::spectral::{amplitude_constant, angle_map, closed_form_cell, envelope};
use bessel_laguerre::tridiag::{
    matrix_element, matrix_element_numeric, recursion_solve, recursion_solve_from_closed_form,
};
use clap::ValueEnum;
use serde_json::json;
use std::io::Write;

pub fn eval(settings: &Settings, n: u32, nu: f64, mu: f64, explain: bool) -> anyhow::Result<i32> {
    let cell = closed_form_cell(n, nu, mu)?;
    let mut sink = Sink::for_settings(settings)?;
    match settings.format {
        Format::Csv => {
            writeln!(sink, "{:.10}", cell.value)?;
            if cell.is_limit {
                writeln!(
                    sink,
                    "note: value is the continuous-extension limit at mu = 0"
                )?;
            }
            if explain && !cell.is_limit {
                let angles = angle_map(mu)?;
                let lam = nu + 0.5;
                let theta = angles.sin_theta.atan2(angles.cos_theta);
                writeln!(sink, "theta = {theta:.10}")?;
                writeln!(sink, "cos_theta = {:.10}", angles.cos_theta)?;
                writeln!(sink, "sin_theta = {:.10}", angles.sin_theta)?;
                writeln!(sink, "amplitude_A = {:.10}", amplitude_constant(nu)?)?;
                writeln!(sink, "envelope_f = {:.10}", envelope(nu, mu)?)?;
                writeln!(
                    sink,
                    "gegenbauer_C = {:.10}",
                    gegenbauer_eval(n, lam, angles.cos_theta)?
                )?;
            }
        }
        Format::Json => {
            let mut obj = json!({
                "n": n,
                "nu": nu,
                "mu": mu,
                "value": cell.value,
                "is_limit": cell.is_limit,
            });
            if explain && !cell.is_limit {
                let angles = angle_map(mu)?;
                obj["theta"] = json!(angles.sin_theta.atan2(angles.cos_theta));
                obj["cos_theta"] = json!(angles.cos_theta);
                obj["sin_theta"] = json!(angles.sin_theta);
                obj["amplitude_A"] = json!(amplitude_constant(nu)?);
                obj["envelope_f"] = json!(envelope(nu, mu)?);
                obj["gegenbauer_C"] = json!(gegenbauer_eval(n, nu + 0.5, angles.cos_theta)?);
            }
            serde_json::to_writer_pretty(&mut sink, &obj)?;
            writeln!(sink)?;
        }
    }
    sink.flush()?;
    Ok(EXIT_OK)
}

pub fn expand(
    settings: &Settings,
    nu: f64,
    mu: f64,
    n_terms: &str,
    x_min: f64,
    x_max: f64,
    x_points: usize,
) -> anyhow::Result<i32> {
    let orders = parse_u32_list(n_terms)?;
    if x_points == 0 {
        return Err(usage_error("--x-points must be at least 1"));
    }
    if !(x_min > 0.0) || !(x_max >= x_min) {
        return Err(usage_error(format!(
            "need 0 < x_min ≤ x_max, got [{x_min}, {x_max}]"
        )));
    }
    let grid: Vec<f64> = if x_points == 1 {
        vec![x_min]
    } else {
        (0..x_points)
            .map(|i| x_min + (x_max - x_min) * i as f64 / (x_points - 1) as f64)
            .collect()
    };
    let mut rows = Vec::with_capacity(orders.len());
    for &n in &orders {
        rows.push((n, reconstruction_error(nu, mu, &grid, n)?));
    }

    let mut sink = Sink::for_settings(settings)?;
    match settings.format {
        Format::Csv => {
            writeln!(sink, "n_terms,sup_error")?;
            for (n, err) in &rows {
                writeln!(sink, "{},{}", n, fmt_f64(*err))?;
            }
        }
        Format::Json => {
            let obj = json!({
                "nu": nu,
                "mu": mu,
                "x_min": x_min,
                "x_max": x_max,
                "x_points": x_points,
                "curve": rows
                    .iter()
                    .map(|(n, e)| json!({"n_terms": n, "sup_error": e}))
                    .collect::<Vec<_>>(),
            });
            serde_json::to_writer_pretty(&mut sink, &obj)?;
            writeln!(sink)?;
        }
    }
    sink.flush()?;
    Ok(EXIT_OK)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum SeedMode {
    /// Seed from the closed-form values P_0, P_1
    ClosedForm,
    /// Seed from --p0/--p1
    Explicit,
}

#[allow(clippy::too_many_arguments)]
pub fn recursion(
    settings: &Settings,
    nu: f64,
    alpha: f64,
    mu: f64,
    n_max: u32,
    seed_mode: SeedMode,
    p0: Option<f64>,
    p1: Option<f64>,
) -> anyhow::Result<i32> {
    let run = match seed_mode {
        SeedMode::ClosedForm => recursion_solve_from_closed_form(nu, alpha, mu, n_max)?,
        SeedMode::Explicit => {
            let (Some(p0), Some(p1)) = (p0, p1) else {
                return Err(usage_error("--seed-mode explicit requires --p0 and --p1"));
            };
            recursion_solve(nu, alpha, mu, n_max, (p0, p1))?
        }
    };
    let residual = run.max_residual();

    let mut sink = Sink::for_settings(settings)?;
    match settings.format {
        Format::Csv => {
            writeln!(sink, "n,p_n")?;
            for (n, v) in run.values.iter().enumerate() {
                writeln!(sink, "{},{}", n, fmt_f64(*v))?;
            }
        }
        Format::Json => {
            let obj = json!({
                "nu": nu,
                "alpha": alpha,
                "mu": mu,
                "seeds": [run.seeds.0, run.seeds.1],
                "values": run.values,
                "self_consistency_residual": residual,
            });
            serde_json::to_writer_pretty(&mut sink, &obj)?;
            writeln!(sink)?;
        }
    }
    sink.flush()?;
    eprintln!("recursion: self-consistency residual {residual:.3e}");
    Ok(EXIT_OK)
}

pub fn tridiag(
    settings: &Settings,
    nu: f64,
    alpha: f64,
    mu: f64,
    n_max: u32,
) -> anyhow::Result<i32> {
    let cfg = QuadratureConfig::default();
    let mut any_non_converged = false;
    let mut rows = Vec::new();
    for n in 0..=n_max {
        for m in 0..=n_max {
            let numeric = matrix_element_numeric(n, m, nu, alpha, mu, &cfg)?;
            let exact = matrix_element(n, m, nu, alpha, mu)?;
            let abs_delta = (numeric.value - exact).abs();
            // relative comparison only where the closed form is nonzero:
            // the far-off-diagonal reference is identically zero
            let rel_delta = if n.abs_diff(m) <= 1 && exact != 0.0 {
                Some(abs_delta / exact.abs())
            } else {
                None
            };
            any_non_converged |= !numeric.converged;
            rows.push((n, m, numeric.value, exact, abs_delta, rel_delta));
        }
    }

    let mut sink = Sink::for_settings(settings)?;
    match settings.format {
        Format::Csv => {
            writeln!(sink, "n,m,numeric,closed_form,abs_delta,rel_delta")?;
            for (n, m, numeric, exact, abs_delta, rel_delta) in &rows {
                writeln!(
                    sink,
                    "{},{},{},{},{},{}",
                    n,
                    m,
                    fmt_f64(*numeric),
                    fmt_f64(*exact),
                    fmt_f64(*abs_delta),
                    rel_delta.map(fmt_f64).unwrap_or_default()
                )?;
            }
        }
        Format::Json => {
            let obj = json!({
                "nu": nu,
                "alpha": alpha,
                "mu": mu,
                "cells": rows
                    .iter()
                    .map(|(n, m, numeric, exact, abs_delta, rel_delta)| {
                        json!({
                            "n": n,
                            "m": m,
                            "numeric": numeric,
                            "closed_form": exact,
                            "abs_delta": abs_delta,
                            "rel_delta": rel_delta,
                        })
                    })
                    .collect::<Vec<_>>(),
            });
            serde_json::to_writer_pretty(&mut sink, &obj)?;
            writeln!(sink)?;
        }
    }
    sink.flush()?;
    Ok(if any_non_converged {
        EXIT_NON_CONVERGED
    } else {
        EXIT_OK
    })
}
