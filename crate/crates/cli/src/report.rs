//! The verification grid: closed form vs quadrature oracle for every
//! (n, ν, μ) cell, rendered as CSV rows or a JSON report.
//!
//! Cells may be evaluated by a worker pool (`--threads`); rows are always
//! emitted in grid order (n fastest, then μ, then ν) regardless of
//! completion order, so output is deterministic.

use crate::config::{parse_f64_list, parse_u32_list};
use crate::output::{fmt_f64, Sink};
use crate::{Format, Settings, EXIT_NON_CONVERGED, EXIT_OK, EXIT_TOLERANCE};
use bessel_laguerre::quadrature::{oracle_integral, QuadratureConfig};
use bessel_laguerre::spectral::closed_form_integral;
use serde::Serialize;
use std::io::Write;
use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::Mutex;
use std::time::Instant;

/// Reference scale under which the pass gate turns absolute: a cell
/// passes when abs_err ≤ tol·max(REL_SCALE_FLOOR, |closed_form|), so the
/// default tol = 1e−7 reproduces the max(1e−8, 1e−7·|closed|) gate and
/// zero cells are still judged against oracle noise rather than 0.
const REL_SCALE_FLOOR: f64 = 0.1;

#[derive(Debug, Clone, Serialize)]
pub struct IntegralComparison {
    pub n: u32,
    pub nu: f64,
    pub mu: f64,
    pub closed_form: f64,
    pub oracle: f64,
    pub abs_err: f64,
    /// abs_err / |closed_form|; equals abs_err when the reference is 0.
    pub rel_err: f64,
    pub oracle_err_estimate: f64,
    pub converged: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct WorstCell {
    pub n: u32,
    pub nu: f64,
    pub mu: f64,
}

#[derive(Debug, Clone, Serialize)]
pub struct Summary {
    pub max_abs_err: f64,
    pub max_rel_err: f64,
    pub worst_cell: WorstCell,
    pub wall_time_s: f64,
    pub all_pass: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct VerificationReport {
    pub cells: Vec<IntegralComparison>,
    pub summary: Summary,
}

fn evaluate_cell(
    n: u32,
    nu: f64,
    mu: f64,
    cfg: &QuadratureConfig,
) -> anyhow::Result<IntegralComparison> {
    let closed = closed_form_integral(n, nu, mu)?;
    let oracle = oracle_integral(n, nu, mu, cfg)?;
    let abs_err = (closed - oracle.value).abs();
    let rel_err = if closed != 0.0 {
        abs_err / closed.abs()
    } else {
        abs_err
    };
    Ok(IntegralComparison {
        n,
        nu,
        mu,
        closed_form: closed,
        oracle: oracle.value,
        abs_err,
        rel_err,
        oracle_err_estimate: oracle.err_estimate,
        converged: oracle.converged,
    })
}

fn run_grid(grid: &[(u32, f64, f64)], threads: usize) -> anyhow::Result<Vec<IntegralComparison>> {
    let cfg = QuadratureConfig::default();
    let slots: Mutex<Vec<Option<anyhow::Result<IntegralComparison>>>> =
        Mutex::new((0..grid.len()).map(|_| None).collect());
    let cursor = AtomicUsize::new(0);
    let workers = threads.min(grid.len().max(1));
    std::thread::scope(|scope| {
        for _ in 0..workers {
            scope.spawn(|| loop {
                let i = cursor.fetch_add(1, Ordering::SeqCst);
                if i >= grid.len() {
                    break;
                }
                let (n, nu, mu) = grid[i];
                let cell = evaluate_cell(n, nu, mu, &cfg);
                slots.lock().expect("worker poisoned the slot lock")[i] = Some(cell);
            });
        }
    });
    slots
        .into_inner()
        .expect("slot lock poisoned")
        .into_iter()
        .map(|slot| slot.expect("every grid index visited"))
        .collect()
}

#[allow(clippy::too_many_arguments)]
pub fn verify(
    settings: &Settings,
    nu_list: Option<&str>,
    mu_list: Option<&str>,
    n_list: Option<&str>,
    n_max: Option<u32>,
) -> anyhow::Result<i32> {
    let nus = match nu_list {
        Some(text) => parse_f64_list(text)?,
        None => settings.nu_list.clone(),
    };
    let mus = match mu_list {
        Some(text) => parse_f64_list(text)?,
        None => settings.mu_list.clone(),
    };
    let ns = match (n_max, n_list) {
        (Some(n), _) => (0..=n).collect(),
        (None, Some(text)) => parse_u32_list(text)?,
        (None, None) => settings.n_list.clone(),
    };

    let mut grid = Vec::with_capacity(nus.len() * mus.len() * ns.len());
    for &nu in &nus {
        for &mu in &mus {
            for &n in &ns {
                grid.push((n, nu, mu));
            }
        }
    }

    let start = Instant::now();
    let cells = run_grid(&grid, settings.threads)?;
    let wall_time_s = start.elapsed().as_secs_f64();

    let mut max_abs_err = 0.0f64;
    let mut max_rel_err = 0.0f64;
    let mut worst = WorstCell {
        n: cells[0].n,
        nu: cells[0].nu,
        mu: cells[0].mu,
    };
    let mut any_fail = false;
    let mut any_non_converged = false;
    for cell in &cells {
        if cell.abs_err > max_abs_err {
            max_abs_err = cell.abs_err;
            worst = WorstCell {
                n: cell.n,
                nu: cell.nu,
                mu: cell.mu,
            };
        }
        max_rel_err = max_rel_err.max(cell.rel_err);
        if !cell.converged {
            any_non_converged = true;
        } else if cell.abs_err > settings.tol * cell.closed_form.abs().max(REL_SCALE_FLOOR) {
            any_fail = true;
        }
    }
    let all_pass = !any_fail && !any_non_converged;

    let mut sink = Sink::for_settings(settings)?;
    match settings.format {
        Format::Csv => {
            writeln!(
                sink,
                "n,nu,mu,closed_form,oracle,abs_err,rel_err,oracle_err_estimate,converged"
            )?;
            for c in &cells {
                writeln!(
                    sink,
                    "{},{},{},{},{},{},{},{},{}",
                    c.n,
                    fmt_f64(c.nu),
                    fmt_f64(c.mu),
                    fmt_f64(c.closed_form),
                    fmt_f64(c.oracle),
                    fmt_f64(c.abs_err),
                    fmt_f64(c.rel_err),
                    fmt_f64(c.oracle_err_estimate),
                    c.converged
                )?;
            }
            sink.flush()?;
            eprintln!(
                "verify: {} cells, max abs err {:.3e} at (n={}, nu={}, mu={}), max rel err {:.3e}, {:.2} s",
                cells.len(),
                max_abs_err,
                worst.n,
                worst.nu,
                worst.mu,
                max_rel_err,
                wall_time_s
            );
        }
        Format::Json => {
            let report = VerificationReport {
                cells,
                summary: Summary {
                    max_abs_err,
                    max_rel_err,
                    worst_cell: worst,
                    wall_time_s,
                    all_pass,
                },
            };
            serde_json::to_writer_pretty(&mut sink, &report)?;
            writeln!(sink)?;
            sink.flush()?;
        }
    }

    Ok(if any_non_converged {
        EXIT_NON_CONVERGED
    } else if any_fail {
        EXIT_TOLERANCE
    } else {
        EXIT_OK
    })
}
