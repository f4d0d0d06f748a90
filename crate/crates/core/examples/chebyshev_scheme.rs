//! The discretization backbone: the Chebyshev mesh on [-1, 0], the interval
//! differentiation matrix D, and the discrete characteristic function
//! Delta_n(z) = z + alpha ((D - z I)^{-1} D 1)_n.
//!
//! ```bash
//! cargo run --example chebyshev_scheme
//! ```

use wright_psa::cheb::build_scheme;
use wright_psa::interval::{ComplexRect, RealInterval};

fn main() -> wright_psa::Result<()> {
    let alpha = RealInterval::point(2.0);
    let scheme = build_scheme(10, alpha);

    println!("nodes (theta_0 = 0 and theta_n = -1 are exact):");
    for (j, t) in scheme.nodes().iter().enumerate() {
        println!("  theta_{j:2} = {t}");
    }
    println!(
        "||D||_1 (max column sum, rigorous upper) = {:.12}",
        scheme.norm_d_one_upper()
    );

    // Delta_n encloses zero exactly at the eigenvalues of the linearization;
    // elsewhere it is verifiably nonzero
    let z = ComplexRect::point(0.5, 0.0);
    println!("Delta_10(0.5)  = {}", scheme.delta_n(&z)?);
    let (d1, d2) = scheme.delta_n_derivs(&z)?;
    println!("Delta_10'(0.5)  = {d1}");
    println!("Delta_10''(0.5) = {d2}");

    // the closed form at n = 1: Delta_1(z) = z + alpha/(1+z)
    let small = build_scheme(1, alpha);
    println!(
        "Delta_1(0)     = {}   (closed form gives 2)",
        small.delta_n(&ComplexRect::ZERO)?
    );

    // the floating linearization matrix seeds eigenvalue computations
    let a = scheme.assemble_an_float();
    let eigs = a.complex_eigenvalues();
    println!("floating eigenvalues of the linearization:");
    for e in eigs.iter() {
        println!("  {e:.6}");
    }
    Ok(())
}
