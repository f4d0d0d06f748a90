//! Tour of the rigorous interval substrate: real intervals, complex
//! rectangles, verified elementary functions, and magnitude bounds.
//!
//! ```bash
//! cargo run --example interval_arithmetic
//! ```

use wright_psa::interval::{ComplexRect, RealInterval};

fn main() -> wright_psa::Result<()> {
    // every operation returns an enclosure of the exact set-valued result
    let a = RealInterval::new(1.0, 2.0)?;
    let b = RealInterval::new(3.0, 4.0)?;
    println!("[1,2] * [3,4]      = {}", a.mul(&b));
    println!("[1,2] / [3,4]      = {}", a.div(&b)?);

    // elementary functions carry their truncation and rounding error
    let e = RealInterval::point(-1.0).exp()?;
    println!("exp(-1)            = {e}   (width {:.3e})", e.width());
    let c = RealInterval::point(100.0).cos()?;
    println!("cos(100)           = {c}   (width {:.3e})", c.width());

    // exp of very negative arguments degrades gracefully to [0, tiny]
    let tiny = RealInterval::point(-1000.0).exp()?;
    println!("exp(-1000)         = {tiny}");

    // complex rectangles: multiplication, division, exponential
    let z = ComplexRect::point(1.0, 2.0);
    let w = ComplexRect::point(3.0, 4.0);
    println!("(1+2i)(3+4i)       = {}", z.mul(&w));
    println!(
        "exp(i pi/2)        = {}",
        ComplexRect::new(RealInterval::ZERO, RealInterval::pi().scale(0.5)).exp()?
    );

    // magnitude bounds: distance from the origin to the rectangle, and the
    // farthest corner
    let r = ComplexRect::new(RealInterval::new(1.0, 2.0)?, RealInterval::new(1.0, 2.0)?);
    let (lo, hi) = r.mag_bounds();
    println!("|[1,2] + [1,2]i|   in [{lo}, {hi}]");

    // division by anything enclosing zero is refused
    let origin = ComplexRect::new(RealInterval::new(-1.0, 1.0)?, RealInterval::new(-1.0, 1.0)?);
    println!(
        "1/([-1,1]+[-1,1]i) -> {:?}",
        ComplexRect::ONE.div(&origin).err().unwrap()
    );
    Ok(())
}
