//! Real and complex interval arithmetic with outward rounding.
//!
//! Every operation returns an interval (or rectangle) that contains the exact
//! mathematical result for all choices of points in the operands. Outward
//! rounding is done by nudging computed endpoints to the next representable
//! value: IEEE round-to-nearest places the exact result strictly between the
//! neighbours of the computed one, so a one-step nudge per primitive
//! operation is always sound. No rounding-mode switching, no global state.

use crate::error::{Error, Result};

/// Largest |x| accepted by the sin/cos argument reduction. The two-word pi/2
/// used below keeps the reduction error below ~1e-20 up to this point.
pub const TRIG_REDUCTION_LIMIT: f64 = 1.099511627776e12; // 2^40

// pi/2 split into two f64 words plus a bracket for the residual, so that
// k*(pi/2) can be subtracted with error ~ k * 1.5e-33.
const PI2_HI: f64 = 1.570_796_326_794_896_6;
const PI2_LO: f64 = 6.123_233_995_736_766e-17;
const PI2_RES_LO: f64 = -1.6e-33;
const PI2_RES_HI: f64 = -1.4e-33;

// ln 2 split the same way (residual is positive).
const LN2_HI: f64 = 0.693_147_180_559_945_3;
const LN2_LO: f64 = 2.319_046_813_846_299_6e-17;
const LN2_RES_LO: f64 = 5.6e-34;
const LN2_RES_HI: f64 = 5.8e-34;

#[inline]
fn up(x: f64) -> f64 {
    if x.is_finite() {
        x.next_up()
    } else {
        x
    }
}

#[inline]
fn dn(x: f64) -> f64 {
    if x.is_finite() {
        x.next_down()
    } else {
        x
    }
}

#[inline]
pub(crate) fn sqrt_up(x: f64) -> f64 {
    up(x.sqrt())
}

#[inline]
pub(crate) fn sqrt_dn(x: f64) -> f64 {
    let s = dn(x.sqrt());
    if s < 0.0 {
        0.0
    } else {
        s
    }
}

/// A closed interval of reals with `f64` endpoints, `lo <= hi`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct RealInterval {
    lo: f64,
    hi: f64,
}

impl RealInterval {
    pub const ZERO: Self = Self { lo: 0.0, hi: 0.0 };
    pub const ONE: Self = Self { lo: 1.0, hi: 1.0 };

    pub fn new(lo: f64, hi: f64) -> Result<Self> {
        if lo.is_nan() || hi.is_nan() || lo > hi {
            return Err(Error::InvalidEndpoints { lo, hi });
        }
        Ok(Self { lo, hi })
    }

    /// The degenerate interval `[x, x]`.
    pub fn point(x: f64) -> Self {
        debug_assert!(!x.is_nan());
        Self { lo: x, hi: x }
    }

    /// `[mid - rad, mid + rad]` with outward rounding.
    pub fn centered(mid: f64, rad: f64) -> Self {
        debug_assert!(rad >= 0.0);
        Self {
            lo: dn(mid - rad),
            hi: up(mid + rad),
        }
    }

    /// Enclosure of pi.
    pub fn pi() -> Self {
        // f64 pi is below the true value.
        Self {
            lo: std::f64::consts::PI,
            hi: up(std::f64::consts::PI),
        }
    }

    #[inline]
    pub fn lo(&self) -> f64 {
        self.lo
    }

    #[inline]
    pub fn hi(&self) -> f64 {
        self.hi
    }

    pub fn mid(&self) -> f64 {
        if self.lo == self.hi {
            return self.lo;
        }
        let m = 0.5 * self.lo + 0.5 * self.hi;
        if m.is_finite() {
            m
        } else {
            0.0
        }
    }

    pub fn width(&self) -> f64 {
        up(self.hi - self.lo)
    }

    /// Magnitude: sup of |x| over the interval.
    pub fn mag(&self) -> f64 {
        self.lo.abs().max(self.hi.abs())
    }

    /// Mignitude: inf of |x| over the interval.
    pub fn mig(&self) -> f64 {
        if self.lo > 0.0 {
            self.lo
        } else if self.hi < 0.0 {
            -self.hi
        } else {
            0.0
        }
    }

    pub fn contains(&self, x: f64) -> bool {
        self.lo <= x && x <= self.hi
    }

    pub fn contains_interval(&self, other: &Self) -> bool {
        self.lo <= other.lo && other.hi <= self.hi
    }

    pub fn intersects(&self, other: &Self) -> bool {
        self.lo <= other.hi && other.lo <= self.hi
    }

    pub fn hull(&self, other: &Self) -> Self {
        Self {
            lo: self.lo.min(other.lo),
            hi: self.hi.max(other.hi),
        }
    }

    pub fn neg(&self) -> Self {
        Self {
            lo: -self.hi,
            hi: -self.lo,
        }
    }

    pub fn add(&self, o: &Self) -> Self {
        if self.lo == 0.0 && self.hi == 0.0 {
            return *o;
        }
        if o.lo == 0.0 && o.hi == 0.0 {
            return *self;
        }
        Self {
            lo: dn(self.lo + o.lo),
            hi: up(self.hi + o.hi),
        }
    }

    pub fn sub(&self, o: &Self) -> Self {
        if o.lo == 0.0 && o.hi == 0.0 {
            return *self;
        }
        if self.lo == 0.0 && self.hi == 0.0 {
            return o.neg();
        }
        Self {
            lo: dn(self.lo - o.hi),
            hi: up(self.hi - o.lo),
        }
    }

    pub fn mul(&self, o: &Self) -> Self {
        // exact-zero factors give exact-zero products
        if (self.lo == 0.0 && self.hi == 0.0) || (o.lo == 0.0 && o.hi == 0.0) {
            return Self::ZERO;
        }
        let (a, b, c, d) = (self.lo, self.hi, o.lo, o.hi);
        let p = [a * c, a * d, b * c, b * d];
        let mut lo = f64::INFINITY;
        let mut hi = f64::NEG_INFINITY;
        for v in p {
            let v = if v.is_nan() { 0.0 } else { v }; // 0 * inf corners
            lo = lo.min(v);
            hi = hi.max(v);
        }
        Self {
            lo: dn(lo),
            hi: up(hi),
        }
    }

    /// Tighter than `mul(self, self)` when the interval straddles zero.
    pub fn square(&self) -> Self {
        let (a, b) = (self.lo, self.hi);
        if a == 0.0 && b == 0.0 {
            return Self::ZERO;
        }
        if a >= 0.0 {
            Self {
                lo: dn(a * a),
                hi: up(b * b),
            }
        } else if b <= 0.0 {
            Self {
                lo: dn(b * b),
                hi: up(a * a),
            }
        } else {
            Self {
                lo: 0.0,
                hi: up((a * a).max(b * b)),
            }
        }
    }

    pub fn div(&self, o: &Self) -> Result<Self> {
        if o.lo <= 0.0 && o.hi >= 0.0 {
            return Err(Error::DivisionByZeroInterval);
        }
        let (a, b, c, d) = (self.lo, self.hi, o.lo, o.hi);
        let q = [a / c, a / d, b / c, b / d];
        let mut lo = f64::INFINITY;
        let mut hi = f64::NEG_INFINITY;
        for v in q {
            lo = lo.min(v);
            hi = hi.max(v);
        }
        Ok(Self {
            lo: dn(lo),
            hi: up(hi),
        })
    }

    pub fn recip(&self) -> Result<Self> {
        Self::ONE.div(self)
    }

    /// Scale by an exact f64 (still outward rounded; the scalar is exact).
    pub fn scale(&self, c: f64) -> Self {
        self.mul(&Self::point(c))
    }

    /// Square root; requires `lo >= 0`.
    pub fn sqrt(&self) -> Result<Self> {
        if self.lo < 0.0 {
            return Err(Error::InvalidEndpoints {
                lo: self.lo,
                hi: self.hi,
            });
        }
        Ok(Self {
            lo: sqrt_dn(self.lo),
            hi: sqrt_up(self.hi),
        })
    }

    /// Interval of absolute values.
    pub fn abs(&self) -> Self {
        Self {
            lo: self.mig(),
            hi: self.mag(),
        }
    }

    /// exp, exploiting monotonicity: endpoint kernels only.
    pub fn exp(&self) -> Result<Self> {
        let (lo, _) = exp_point(self.lo)?;
        let (_, hi) = exp_point(self.hi)?;
        Ok(Self { lo, hi })
    }

    pub fn sin(&self) -> Result<Self> {
        self.check_trig()?;
        if self.width() >= 6.28 {
            return Ok(Self { lo: -1.0, hi: 1.0 });
        }
        let (slo, _) = sincos_point(self.lo)?;
        let (shi, _) = sincos_point(self.hi)?;
        let mut out = hull4(slo, shi);
        // extrema: sin = +1 at pi/2 + 2k*pi, -1 at -pi/2 + 2k*pi
        if contains_grid_point(self, 0.5) {
            out.hi = 1.0;
        }
        if contains_grid_point(self, -0.5) {
            out.lo = -1.0;
        }
        out.lo = out.lo.max(-1.0);
        out.hi = out.hi.min(1.0);
        Ok(out)
    }

    pub fn cos(&self) -> Result<Self> {
        self.check_trig()?;
        if self.width() >= 6.28 {
            return Ok(Self { lo: -1.0, hi: 1.0 });
        }
        let (_, clo) = sincos_point(self.lo)?;
        let (_, chi) = sincos_point(self.hi)?;
        let mut out = hull4(clo, chi);
        // extrema: cos = +1 at 2k*pi, -1 at pi + 2k*pi
        if contains_grid_point(self, 0.0) {
            out.hi = 1.0;
        }
        if contains_grid_point(self, 1.0) {
            out.lo = -1.0;
        }
        out.lo = out.lo.max(-1.0);
        out.hi = out.hi.min(1.0);
        Ok(out)
    }

    fn check_trig(&self) -> Result<()> {
        let m = self.mag();
        if m > TRIG_REDUCTION_LIMIT {
            return Err(Error::ArgumentReductionOverflow { arg: m });
        }
        Ok(())
    }
}

impl std::fmt::Display for RealInterval {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "[{:?}, {:?}]", self.lo, self.hi)
    }
}

fn hull4(a: RealInterval, b: RealInterval) -> RealInterval {
    a.hull(&b)
}

/// Does the interval contain a point `(off + 2k) * pi` for some integer k?
/// Conservative (may say yes when the point is within a few ulps outside).
fn contains_grid_point(x: &RealInterval, off: f64) -> bool {
    // t = x/(2 pi) - off/2 must contain an integer
    let two_pi = RealInterval::pi().scale(2.0);
    let t = match RealInterval::new(x.lo, x.hi).unwrap().div(&two_pi) {
        Ok(v) => v.sub(&RealInterval::point(off / 2.0)),
        Err(_) => return true,
    };
    t.hi.floor() >= t.lo.ceil() || t.hi - t.lo >= 1.0
}

/// Exact split of a product via fused multiply-add: a*b = p + e.
#[inline]
fn two_product(a: f64, b: f64) -> (f64, f64) {
    let p = a * b;
    let e = a.mul_add(b, -p);
    (p, e)
}

/// Enclosure of exp(x) for a point argument.
///
/// Reduction x = k*ln2 + r with a two-word ln2, degree-13 Taylor on
/// |r| <= 0.35, exact scaling by 2^k.
pub(crate) fn exp_point(x: f64) -> Result<(f64, f64)> {
    if x.is_infinite() {
        return Ok(if x > 0.0 {
            (f64::MAX, f64::INFINITY)
        } else {
            (0.0, f64::MIN_POSITIVE)
        });
    }
    let k = (x / LN2_HI).round();
    if k > 1030.0 {
        return Ok((f64::MAX, f64::INFINITY));
    }
    if k < -1080.0 {
        return Ok((0.0, 5e-324));
    }
    // r = x - k*ln2, enclosed
    let (p, e) = two_product(k, LN2_HI);
    let r = RealInterval::point(x - p) // exact when k != 0 (Sterbenz), trivially exact when k = 0
        .sub(&RealInterval::point(e))
        .sub(&RealInterval::point(k).mul(&RealInterval {
            lo: LN2_LO,
            hi: LN2_LO,
        }))
        .sub(&RealInterval::point(k).mul(&RealInterval {
            lo: LN2_RES_LO,
            hi: LN2_RES_HI,
        }));
    debug_assert!(r.mag() < 0.3466);
    // exp(r) = sum_{i<=13} r^i/i! + R, |R| <= |r|^14/14! * 1/(1 - |r|/15)
    let mut acc = RealInterval::ONE;
    for i in (1..=13u32).rev() {
        acc = acc
            .mul(&r)
            .div(&RealInterval::point(f64::from(i)))?
            .add(&RealInterval::ONE);
    }
    let rm = r.mag();
    let rem = rm.powi(14) / 8.7178291200e10 * 1.03;
    let acc = acc.add(&RealInterval {
        lo: -up(rem),
        hi: up(rem),
    });
    // scale by 2^k: exact while the result stays normal
    let s = 2f64.powi(k as i32);
    let scale = |x: f64, nudge: fn(f64) -> f64| {
        let y = x * s;
        if y == 0.0 || y.abs() >= f64::MIN_POSITIVE {
            y
        } else {
            nudge(y)
        }
    };
    Ok((scale(acc.lo, dn).max(0.0), scale(acc.hi, up)))
}

/// Enclosures of (sin x, cos x) for a point argument.
///
/// Quadrant reduction x = k*(pi/2) + r with a two-word pi/2, valid for
/// |x| <= 2^40, then Taylor kernels on |r| <= pi/4.
pub(crate) fn sincos_point(x: f64) -> Result<(RealInterval, RealInterval)> {
    if !x.is_finite() || x.abs() > TRIG_REDUCTION_LIMIT {
        return Err(Error::ArgumentReductionOverflow { arg: x });
    }
    let k = (x / PI2_HI).round();
    let (p, e) = two_product(k, PI2_HI);
    let r = RealInterval::point(x - p)
        .sub(&RealInterval::point(e))
        .sub(&RealInterval::point(k).mul(&RealInterval {
            lo: PI2_LO,
            hi: PI2_LO,
        }))
        .sub(&RealInterval::point(k).mul(&RealInterval {
            lo: PI2_RES_LO,
            hi: PI2_RES_HI,
        }));
    debug_assert!(r.mag() < 0.7855);
    let (s, c) = sincos_kernel(&r)?;
    let q = (k as i64).rem_euclid(4);
    Ok(match q {
        0 => (s, c),
        1 => (c, s.neg()),
        2 => (s.neg(), c.neg()),
        _ => (c.neg(), s),
    })
}

/// Taylor kernels on |r| <= pi/4 (+ tiny slop).
fn sincos_kernel(r: &RealInterval) -> Result<(RealInterval, RealInterval)> {
    let r2 = r.square();
    // sin r = r * sum_{i=0..9} (-1)^i r^(2i) / (2i+1)!   +/- r^21/21!
    let mut s = RealInterval::ONE;
    for i in (1..=9u32).rev() {
        let denom = f64::from(2 * i) * f64::from(2 * i + 1);
        s = RealInterval::ONE.sub(&s.mul(&r2).div(&RealInterval::point(denom))?);
    }
    let s = s.mul(r);
    // cos r = sum_{i=0..9} (-1)^i r^(2i) / (2i)!   +/- r^20/20!
    let mut c = RealInterval::ONE;
    for i in (1..=9u32).rev() {
        let denom = f64::from(2 * i - 1) * f64::from(2 * i);
        c = RealInterval::ONE.sub(&c.mul(&r2).div(&RealInterval::point(denom))?);
    }
    let rm = r.mag();
    let rem_s = rm.powi(21) / 5.109094217170944e19 * 1.01;
    let rem_c = rm.powi(20) / 2.43290200817664e18 * 1.01;
    Ok((
        s.add(&RealInterval {
            lo: -up(rem_s),
            hi: up(rem_s),
        }),
        c.add(&RealInterval {
            lo: -up(rem_c),
            hi: up(rem_c),
        }),
    ))
}

/// An axis-aligned rectangle `{a + bi : a in re, b in im}` in the complex
/// plane; the complex-valued counterpart of [`RealInterval`].
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ComplexRect {
    pub re: RealInterval,
    pub im: RealInterval,
}

impl ComplexRect {
    pub const ZERO: Self = Self {
        re: RealInterval::ZERO,
        im: RealInterval::ZERO,
    };
    pub const ONE: Self = Self {
        re: RealInterval::ONE,
        im: RealInterval::ZERO,
    };

    pub fn new(re: RealInterval, im: RealInterval) -> Self {
        Self { re, im }
    }

    pub fn point(re: f64, im: f64) -> Self {
        Self {
            re: RealInterval::point(re),
            im: RealInterval::point(im),
        }
    }

    pub fn from_real(re: RealInterval) -> Self {
        Self {
            re,
            im: RealInterval::ZERO,
        }
    }

    /// Square centered at `mid` with the given half-width, outward rounded.
    pub fn centered(mid_re: f64, mid_im: f64, rad: f64) -> Self {
        Self {
            re: RealInterval::centered(mid_re, rad),
            im: RealInterval::centered(mid_im, rad),
        }
    }

    pub fn mid(&self) -> (f64, f64) {
        (self.re.mid(), self.im.mid())
    }

    pub fn conj(&self) -> Self {
        Self {
            re: self.re,
            im: self.im.neg(),
        }
    }

    pub fn neg(&self) -> Self {
        Self {
            re: self.re.neg(),
            im: self.im.neg(),
        }
    }

    pub fn add(&self, o: &Self) -> Self {
        Self {
            re: self.re.add(&o.re),
            im: self.im.add(&o.im),
        }
    }

    pub fn sub(&self, o: &Self) -> Self {
        Self {
            re: self.re.sub(&o.re),
            im: self.im.sub(&o.im),
        }
    }

    pub fn mul(&self, o: &Self) -> Self {
        Self {
            re: self.re.mul(&o.re).sub(&self.im.mul(&o.im)),
            im: self.re.mul(&o.im).add(&self.im.mul(&o.re)),
        }
    }

    pub fn scale(&self, c: &RealInterval) -> Self {
        Self {
            re: self.re.mul(c),
            im: self.im.mul(c),
        }
    }

    pub fn div(&self, o: &Self) -> Result<Self> {
        let den = o.re.square().add(&o.im.square());
        if den.lo() <= 0.0 {
            return Err(Error::DivisionByZeroInterval);
        }
        let num = self.mul(&o.conj());
        Ok(Self {
            re: num.re.div(&den)?,
            im: num.im.div(&den)?,
        })
    }

    pub fn recip(&self) -> Result<Self> {
        Self::ONE.div(self)
    }

    /// Rigorous bounds `(lower, upper)` on |w| over the rectangle: the lower
    /// bound is the distance from the origin, the upper bound the farthest
    /// corner, both with outward rounding.
    pub fn mag_bounds(&self) -> (f64, f64) {
        // exact-axis fast paths keep real data tight
        if self.im.lo() == 0.0 && self.im.hi() == 0.0 {
            return (self.re.mig(), self.re.mag());
        }
        if self.re.lo() == 0.0 && self.re.hi() == 0.0 {
            return (self.im.mig(), self.im.mag());
        }
        let dx = self.re.mig();
        let dy = self.im.mig();
        let lower = sqrt_dn((dn(dn(dx * dx) + dn(dy * dy))).max(0.0));
        let ux = self.re.mag();
        let uy = self.im.mag();
        let upper = sqrt_up(up(up(ux * ux) + up(uy * uy)));
        (lower, upper)
    }

    pub fn mag_upper(&self) -> f64 {
        self.mag_bounds().1
    }

    pub fn mag_lower(&self) -> f64 {
        self.mag_bounds().0
    }

    pub fn contains(&self, re: f64, im: f64) -> bool {
        self.re.contains(re) && self.im.contains(im)
    }

    pub fn contains_zero(&self) -> bool {
        self.contains(0.0, 0.0)
    }

    pub fn intersects(&self, o: &Self) -> bool {
        self.re.intersects(&o.re) && self.im.intersects(&o.im)
    }

    pub fn hull(&self, o: &Self) -> Self {
        Self {
            re: self.re.hull(&o.re),
            im: self.im.hull(&o.im),
        }
    }

    pub fn width(&self) -> f64 {
        self.re.width().max(self.im.width())
    }

    /// exp over the rectangle via e^re * (cos im + i sin im).
    pub fn exp(&self) -> Result<Self> {
        let m = self.re.exp()?;
        let c = self.im.cos()?;
        let s = self.im.sin()?;
        Ok(Self {
            re: m.mul(&c),
            im: m.mul(&s),
        })
    }
}

impl std::fmt::Display for ComplexRect {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{} + {}i", self.re, self.im)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn constructor_rejects_inverted_endpoints() {
        assert!(RealInterval::new(1.0, 0.0).is_err());
        assert!(RealInterval::new(0.0, 1.0).is_ok());
    }

    #[test]
    fn sign_definite_product() {
        let a = RealInterval::new(1.0, 2.0).unwrap();
        let b = RealInterval::new(3.0, 4.0).unwrap();
        let p = a.mul(&b);
        assert!(p.contains(3.0) && p.contains(8.0));
        assert!(p.lo() >= 3.0 - 1e-14 && p.hi() <= 8.0 + 1e-14);
    }

    #[test]
    fn zero_plus_x_is_tight() {
        let x = RealInterval::new(-1.25, 7.5).unwrap();
        let s = RealInterval::ZERO.add(&x);
        assert!(s.contains_interval(&x));
        assert!(s.width() <= x.width() + 4.0 * f64::EPSILON * x.mag());
    }

    #[test]
    fn complex_product_by_hand() {
        // (1+2i)(3+4i) = -5 + 10i
        let a = ComplexRect::point(1.0, 2.0);
        let b = ComplexRect::point(3.0, 4.0);
        let p = a.mul(&b);
        assert!(p.contains(-5.0, 10.0));
        assert!(p.width() < 1e-13);
    }

    #[test]
    fn division_by_zero_interval_fails() {
        let x = RealInterval::new(-1.0, 1.0).unwrap();
        assert!(RealInterval::ONE.div(&x).is_err());
        let z = ComplexRect::new(x, x);
        assert!(ComplexRect::ONE.div(&z).is_err());
    }

    #[test]
    fn exp_of_zero_and_minus_one() {
        let e0 = RealInterval::ZERO.exp().unwrap();
        assert!(e0.contains(1.0));
        assert!(e0.width() <= 4.0 * f64::EPSILON);
        let em1 = RealInterval::point(-1.0).exp().unwrap();
        assert!(em1.contains(0.367_879_441_171_442_33));
        assert!(em1.width() < 1e-15);
    }

    #[test]
    fn exp_large_negative_is_zero_to_tiny() {
        let e = RealInterval::point(-200_000.0).exp().unwrap();
        assert_eq!(e.lo(), 0.0);
        assert!(e.hi() > 0.0 && e.hi() < 1e-300);
    }

    #[test]
    fn cos_of_zero() {
        let c = RealInterval::ZERO.cos().unwrap();
        assert!(c.contains(1.0) && c.hi() <= 1.0);
        assert!(c.width() < 1e-15);
    }

    #[test]
    fn sin_cos_identities_spot() {
        for &x in &[0.5, 1.0, -2.0, 10.0, 100.0, -1234.5, 1.0e6] {
            let (s, c) = sincos_point(x).unwrap();
            assert!(
                s.contains(x.sin()) || (s.mid() - x.sin()).abs() < 1e-13,
                "sin {x}"
            );
            assert!(
                c.contains(x.cos()) || (c.mid() - x.cos()).abs() < 1e-13,
                "cos {x}"
            );
            let one = s.square().add(&c.square());
            assert!(one.contains(1.0));
            assert!(one.width() < 1e-13);
        }
    }

    #[test]
    fn sin_interval_covers_extremum() {
        let x = RealInterval::new(1.0, 2.5).unwrap(); // contains pi/2
        let s = x.sin().unwrap();
        assert_eq!(s.hi(), 1.0);
        assert!(s.contains(1.0f64.sin()));
        assert!(s.contains(2.5f64.sin()));
    }

    #[test]
    fn trig_reduction_limit_enforced() {
        let big = RealInterval::point(3.0e12);
        assert!(matches!(
            big.sin(),
            Err(Error::ArgumentReductionOverflow { .. })
        ));
    }

    #[test]
    fn cplx_exp_cases() {
        let e = ComplexRect::ZERO.exp().unwrap();
        assert!(e.contains(1.0, 0.0));
        // exp(i pi/2) = i
        let z = ComplexRect::new(RealInterval::ZERO, RealInterval::pi().scale(0.5));
        let e = z.exp().unwrap();
        assert!(e.contains(0.0, 1.0));
        assert!(e.width() < 1e-14);
    }

    #[test]
    fn mag_bounds_cases() {
        let z = ComplexRect::point(3.0, 4.0);
        let (lo, hi) = z.mag_bounds();
        assert!(lo <= 5.0 && 5.0 <= hi);
        assert!(hi - lo < 1e-14);

        let z = ComplexRect::new(
            RealInterval::new(-1.0, 1.0).unwrap(),
            RealInterval::new(-1.0, 1.0).unwrap(),
        );
        assert_eq!(z.mag_bounds().0, 0.0);

        let z = ComplexRect::new(
            RealInterval::new(1.0, 2.0).unwrap(),
            RealInterval::new(1.0, 2.0).unwrap(),
        );
        let (lo, hi) = z.mag_bounds();
        assert!(lo <= std::f64::consts::SQRT_2 && lo > std::f64::consts::SQRT_2 - 1e-14);
        assert!(
            hi >= 2.0 * std::f64::consts::SQRT_2 && hi < 2.0 * std::f64::consts::SQRT_2 + 1e-14
        );
    }

    #[test]
    fn complex_division_round_trip() {
        let a = ComplexRect::point(1.7, -0.3);
        let b = ComplexRect::point(-2.2, 0.9);
        let q = a.div(&b).unwrap();
        let back = q.mul(&b);
        assert!(back.contains(1.7, -0.3));
    }
}
