//! Computing the unstable-manifold Taylor coefficients, exporting them as
//! CSV, and evaluating the manifold parametrizations.
//!
//! ```bash
//! cargo run --example manifold_coefficients
//! ```

use std::sync::Arc;

use num_complex::Complex64;
use wright_psa::bounds::xhat_sha256;
use wright_psa::cheb::build_scheme;
use wright_psa::interval::RealInterval;
use wright_psa::manifold::{
    eval_f, eval_manifold_dde, eval_manifold_psa, recurse_coeffs, ProblemData,
};
use wright_psa::roots::{census_psa, find_dde_pair};
use wright_psa::seq::Beta;
use wright_psa::ProblemKind;

fn main() -> wright_psa::Result<()> {
    let alpha = RealInterval::point(2.0);
    let trunc = 25u32;
    let scheme = Arc::new(build_scheme(10, alpha));
    let (_, pair) = census_psa(&scheme)?;
    let p = ProblemData::assemble(
        ProblemKind::Psa,
        alpha,
        pair,
        Some(scheme.clone()),
        0.02,
        trunc,
    )?;

    // the recursion fills degrees 2..trunc from the first-order data
    let xhat = recurse_coeffs(&p, trunc)?;
    println!(
        "coefficients through degree {trunc}: {} entries",
        xhat.len()
    );
    for b in [Beta(0, 0), Beta(1, 0), Beta(1, 1), Beta(2, 1), Beta(3, 2)] {
        let (re, im) = xhat.get(b).mid();
        println!("  x({}, {}) = {re:+.6e} {im:+.6e} i", b.0, b.1);
    }
    println!("  l1 norm <= {:.6e}", xhat.ell1_upper());

    // the residual under the exact interval map stays at rounding level
    let resid = eval_f(&p, &xhat, trunc)?;
    let worst = resid
        .coeffs()
        .iter()
        .map(|c| c.mag_upper())
        .fold(0.0, f64::max);
    println!("  residual ||F(xhat)||_max <= {worst:.3e}");

    // CSV interchange: beta1,beta2,re_lo,re_hi,im_lo,im_hi
    let path = std::env::temp_dir().join("wright_psa_coefficients.csv");
    xhat.write_csv_file(&path)?;
    println!(
        "  written to {} (sha256 {})",
        path.display(),
        xhat_sha256(&xhat)
    );

    // evaluating the discretized manifold at a parameter point: on the slice
    // sigma_2 = conj(sigma_1) the state vector is real
    let s = Complex64::new(0.4, 0.3);
    let state = eval_manifold_psa(&p, &xhat, (s, s.conj()))?;
    println!("\ndiscretized manifold point at sigma = ({s}, conj):");
    for (k, v) in state.iter().enumerate() {
        println!("  y_{k:2} = {:+.9e}  (im {:+.1e})", v.re, v.im);
    }

    // the delay-equation manifold gives a history segment on [-1, 0]
    let dde_pair = find_dde_pair(alpha)?;
    let pd = ProblemData::assemble(ProblemKind::Dde, alpha, dde_pair, None, 0.02, trunc)?;
    println!("\ndelay-equation history segment at the same sigma:");
    for k in 0..=4 {
        let theta = -(f64::from(k)) / 4.0;
        let v = eval_manifold_dde(&pd, &xhat, (s, s.conj()), theta);
        println!("  x(theta = {theta:+.2}) = {:+.9e}", v.re);
    }
    Ok(())
}
