//! The scalar certification engine: given a floating root approximation and
//! a trust radius, produce a certificate that the target function has a
//! unique root within a computed distance.
//!
//! ```bash
//! cargo run --example newton_kantorovich
//! ```

use num_complex::Complex64;
use wright_psa::interval::{ComplexRect, RealInterval};
use wright_psa::roots::{nk_validate, CharacteristicFn, DdeChar};

/// g(z) = z^2 - 1.
struct Square;

impl CharacteristicFn for Square {
    fn value(&self, z: &ComplexRect) -> wright_psa::Result<ComplexRect> {
        Ok(z.mul(z).sub(&ComplexRect::ONE))
    }
    fn deriv(&self, z: &ComplexRect) -> wright_psa::Result<ComplexRect> {
        Ok(z.scale(&RealInterval::point(2.0)))
    }
    fn deriv2(&self, _z: &ComplexRect) -> wright_psa::Result<ComplexRect> {
        Ok(ComplexRect::point(2.0, 0.0))
    }
}

fn main() -> wright_psa::Result<()> {
    // around zhat = 1.1 with trust radius 0.2, the contraction certificate
    // proves the unique root z = 1 lies within r0 of zhat
    let cert = nk_validate(&Square, Complex64::new(1.1, 0.0), 0.2)?;
    println!("g(z) = z^2 - 1 around 1.1, trust radius 0.2:");
    println!("  Y (Newton step bound)   = {:.12}", cert.y);
    println!("  Z (contraction bound)   = {:.12}", cert.z);
    println!("  certified radius r0     = {:.12}", cert.r0);
    println!("  enclosure               = {}", cert.enclosure);
    println!(
        "  contains the root 1.0   = {}",
        cert.enclosure.contains(1.0, 0.0)
    );

    // the same machinery applied to the transcendental characteristic
    // function of the delay equation
    let g = DdeChar {
        alpha: RealInterval::point(2.0),
    };
    let cert = nk_validate(&g, Complex64::new(0.17281600284, 1.67368641374), 1e-4)?;
    println!("\ncharacteristic function z + 2 e^(-z) near its unstable root:");
    println!("  certified radius r0     = {:.3e}", cert.r0);
    println!("  enclosure               = {}", cert.enclosure);

    // a trust ball containing a critical point of g is refused
    let refused = nk_validate(&Square, Complex64::new(0.01, 0.0), 0.1);
    println!(
        "\nball around a critical point -> {:?}",
        refused.err().unwrap()
    );
    Ok(())
}
