//! One-off convergence study used to freeze reconstruction-error
//! thresholds in the test suite.

use bessel_laguerre::bessel::bessel_j;
use bessel_laguerre::quadrature::{reconstruct_bessel, reconstruction_error};

fn main() {
    // pointwise: ν=0.5, μ=1, x=π/2
    let exact = 2.0 / std::f64::consts::PI;
    for n in [20u32, 40, 60, 120, 240, 480] {
        let got = reconstruct_bessel(0.5, 1.0, std::f64::consts::FRAC_PI_2, n).unwrap();
        println!(
            "pointwise nu=0.5 mu=1 N={n}: err={:.3e}",
            (got - exact).abs()
        );
    }
    // x → 0 limit mechanism: ν=0, μ=0.5
    for n in [20u32, 40, 80, 160, 400] {
        let got = reconstruct_bessel(0.0, 0.5, 1e-3, n).unwrap();
        let exact = bessel_j(0.0, 0.5e-3).unwrap();
        println!("small-x nu=0 mu=0.5 N={n}: err={:.3e}", (got - exact).abs());
    }
    // sup-error over x in [0.1, 20], acceptance grid combos
    let grid: Vec<f64> = (0..=200).map(|i| 0.1 + 19.9 * i as f64 / 200.0).collect();
    for &(nu, mu) in &[(0.0, 0.5), (0.5, 1.0), (1.0, 3.0)] {
        print!("sup nu={nu} mu={mu}:");
        for &n in &[5u32, 10, 20, 40, 80, 160] {
            let e = reconstruction_error(nu, mu, &grid, n).unwrap();
            print!(" N{n}={e:.3e}");
        }
        println!();
    }
    // spot check from the tridiag test: ν=1, μ=3, x=2
    for n in [80u32, 160, 320] {
        let got = reconstruct_bessel(1.0, 3.0, 2.0, n).unwrap();
        let exact = bessel_j(1.0, 6.0).unwrap();
        println!("spot nu=1 mu=3 x=2 N={n}: err={:.3e}", (got - exact).abs());
    }
}
