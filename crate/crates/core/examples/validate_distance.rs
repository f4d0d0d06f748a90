//! The full certified pipeline: eigenvalue census, resolvent sweep,
//! coefficient recursion, the four radii-polynomial constants for both
//! problems, and the combined coefficient-distance bound.
//!
//! This runs the shipped configuration (alpha = 2, n = 10, truncation 25,
//! tail threshold 1000); expect on the order of ten seconds.
//!
//! ```bash
//! cargo run --release --example validate_distance
//! ```

use wright_psa::cli::{cmd_validate, RunConfig, ValidateKind};

fn main() -> wright_psa::Result<()> {
    let mut cfg = RunConfig::new("2", 10, 25, 1000)?;
    cfg.out = Some(std::env::temp_dir().join("wright_psa_certificate.json"));
    let cert = cmd_validate(&cfg, ValidateKind::Distance)?;

    println!("\ncertificate summary:");
    println!("  guess hash        {}", cert.xhat_sha256);
    println!("  r_psa          <= {}", cert.r_psa.as_deref().unwrap());
    println!("  r_dde          <= {}", cert.r_dde.as_deref().unwrap());
    println!(
        "  distance bound <= {}",
        cert.total_bound.as_deref().unwrap()
    );
    println!(
        "  checks passed     {}/{}",
        cert.checks.iter().filter(|c| c.passed).count(),
        cert.checks.len()
    );
    Ok(())
}
