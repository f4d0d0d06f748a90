//! Validated eigenvalue enclosures: the unstable pair of the delay equation
//! and the complete certified census of the discretized linearization.
//!
//! ```bash
//! cargo run --example eigenvalues
//! ```

use wright_psa::cheb::build_scheme;
use wright_psa::interval::RealInterval;
use wright_psa::roots::{census_psa, find_dde_pair};

fn main() -> wright_psa::Result<()> {
    let alpha = RealInterval::point(2.0);

    let pair = find_dde_pair(alpha)?;
    println!("delay equation, alpha = 2:");
    println!("  lambda+ in {}", pair.plus_rect());
    println!("  (enclosure width {:.3e})", pair.plus_rect().width());

    let scheme = build_scheme(10, alpha);
    let (certs, psa_pair) = census_psa(&scheme)?;
    println!(
        "\ndiscretized system, n = 10: {} validated, pairwise disjoint eigenvalues",
        certs.len()
    );
    for c in &certs {
        let side = if c.enclosure.re.lo() > 0.0 {
            "unstable"
        } else {
            "stable"
        };
        let (re, im) = c.enclosure.mid();
        println!("  {re:>24.15e} {im:>+24.15e} i   [{side}]");
    }
    println!("\nunstable pair of the discretized system:");
    println!("  lambda_n+ in {}", psa_pair.plus_rect());

    let gap = pair.plus_rect().sub(&psa_pair.plus_rect()).mag_upper();
    println!("\n|lambda+ - lambda_n+| <= {gap:.6e}");

    // at n = 1 both roots are stable: the census reports the honest count
    let tiny = build_scheme(1, alpha);
    match census_psa(&tiny) {
        Err(wright_psa::Error::UnstableCountNotTwo(k)) => {
            println!("n = 1: census finds {k} unstable eigenvalues (no unstable pair)");
        }
        other => println!("n = 1: unexpected outcome {:?}", other.map(|_| "ok")),
    }
    Ok(())
}
