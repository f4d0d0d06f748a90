//! Independent high-precision oracles for the interval soundness suite.
//!
//! Field operations are checked against exact rational arithmetic. The
//! elementary functions are checked against a fixed-point interval series
//! evaluation at 256 fractional bits (about 77 decimal digits), implemented
//! directly on big integers with floor/ceil directed rounding — a completely
//! separate code path from the production f64 kernels (no argument
//! reduction, different series organization).

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed};
use rand::rngs::StdRng;
use rand::Rng;

use wright_psa::interval::{ComplexRect, RealInterval};

/// Fractional bits of the fixed-point representation.
const SCALE: u32 = 256;

/// A fixed-point interval: the represented set is [lo, hi] * 2^-SCALE.
#[derive(Clone, Debug)]
struct Fp {
    lo: BigInt,
    hi: BigInt,
}

impl Fp {
    fn from_int(k: i64) -> Fp {
        let v = BigInt::from(k) << SCALE;
        Fp {
            lo: v.clone(),
            hi: v,
        }
    }

    /// Exact embedding of a finite f64 (arguments here satisfy |x| <= 64, so
    /// the exponent never drives the shift negative).
    fn from_f64(x: f64) -> Fp {
        let r = BigRational::from_float(x).expect("finite");
        let scaled = r * BigRational::from_integer(BigInt::one() << SCALE);
        assert!(scaled.is_integer(), "fixed-point embedding must be exact");
        let v = scaled.to_integer();
        Fp {
            lo: v.clone(),
            hi: v,
        }
    }

    fn add(&self, o: &Fp) -> Fp {
        Fp {
            lo: &self.lo + &o.lo,
            hi: &self.hi + &o.hi,
        }
    }

    fn mul(&self, o: &Fp) -> Fp {
        let c = [
            &self.lo * &o.lo,
            &self.lo * &o.hi,
            &self.hi * &o.lo,
            &self.hi * &o.hi,
        ];
        let lo = c.iter().min().unwrap().clone();
        let hi = c.iter().max().unwrap().clone();
        Fp {
            lo: shift_floor(lo),
            hi: shift_ceil(hi),
        }
    }

    fn div_int(&self, k: i64) -> Fp {
        assert!(k > 0);
        Fp {
            lo: div_floor(&self.lo, k),
            hi: div_ceil(&self.hi, k),
        }
    }

    fn widen(&self, units: i64) -> Fp {
        Fp {
            lo: &self.lo - units,
            hi: &self.hi + units,
        }
    }

    fn abs_hi(&self) -> BigInt {
        self.lo.abs().max(self.hi.abs())
    }
}

fn shift_floor(v: BigInt) -> BigInt {
    v >> SCALE // arithmetic shift: floor for both signs
}

fn shift_ceil(v: BigInt) -> BigInt {
    -((-v) >> SCALE)
}

fn div_floor(v: &BigInt, k: i64) -> BigInt {
    let k = BigInt::from(k);
    let q = v / &k;
    if (v - &q * &k).is_negative() {
        q - 1
    } else {
        q
    }
}

fn div_ceil(v: &BigInt, k: i64) -> BigInt {
    -div_floor(&-v, k)
}

/// exp(x) for |x| <= 24: plain Taylor series with an explicit geometric
/// remainder once the term ratio |x|/(k+1) drops below 1/2.
fn exp_fp(x: f64) -> Fp {
    assert!(x.abs() <= 24.0);
    let xf = Fp::from_f64(x);
    let mut term = Fp::from_int(1);
    let mut sum = Fp::from_int(1);
    let mut k: i64 = 0;
    loop {
        k += 1;
        term = term.mul(&xf).div_int(k);
        sum = sum.add(&term);
        if k as f64 > 2.0 * x.abs() + 8.0 && term.abs_hi() < BigInt::from(256) {
            break;
        }
        assert!(k < 500, "series did not settle");
    }
    // ratio <= 1/2 past the stop index, so the dropped tail is at most
    // 2 * |last term| <= 512 units
    sum.widen(1024)
}

/// (sin x, cos x) for |x| <= 24, alternating series with explicit term-based
/// remainders (the first dropped term bounds the tail once terms decrease).
fn sincos_fp(x: f64) -> (Fp, Fp) {
    assert!(x.abs() <= 24.0);
    let xf = Fp::from_f64(x);
    let x2 = xf.mul(&xf);
    let mut s_term = xf.clone();
    let mut s_sum = xf;
    let mut c_term = Fp::from_int(1);
    let mut c_sum = Fp::from_int(1);
    let mut k: i64 = 0;
    loop {
        k += 1;
        // sin: t_{k} = -t_{k-1} x^2 / ((2k)(2k+1)); cos: /((2k-1)(2k))
        s_term = s_term.mul(&x2).div_int(2 * k).div_int(2 * k + 1);
        c_term = c_term.mul(&x2).div_int(2 * k - 1).div_int(2 * k);
        let sign = if k % 2 == 1 { -1 } else { 1 };
        let signed = |t: &Fp| {
            if sign < 0 {
                Fp {
                    lo: -t.hi.clone(),
                    hi: -t.lo.clone(),
                }
            } else {
                t.clone()
            }
        };
        s_sum = s_sum.add(&signed(&s_term));
        c_sum = c_sum.add(&signed(&c_term));
        if (2 * k) as f64 > 2.0 * x.abs() + 8.0
            && s_term.abs_hi() < BigInt::from(256)
            && c_term.abs_hi() < BigInt::from(256)
        {
            break;
        }
        assert!(k < 500, "series did not settle");
    }
    (s_sum.widen(1024), c_sum.widen(1024))
}

/// Certified-disjointness test: true only when the f64 interval provably
/// excludes the oracle's enclosure of the exact value.
fn violates(value: &Fp, iv: &RealInterval) -> bool {
    if !iv.lo().is_finite() || !iv.hi().is_finite() {
        return false; // infinite endpoints never exclude
    }
    let lo = Fp::from_f64(iv.lo());
    let hi = Fp::from_f64(iv.hi());
    value.hi < lo.lo || value.lo > hi.hi
}

fn rational_in(iv: &RealInterval, v: &BigRational) -> bool {
    let lo = BigRational::from_float(iv.lo()).expect("finite");
    let hi = BigRational::from_float(iv.hi()).expect("finite");
    &lo <= v && v <= &hi
}

fn rand_interval(rng: &mut StdRng, span: f64) -> RealInterval {
    let a = rng.random_range(-span..span);
    let w = rng.random_range(0.0..span / 8.0);
    RealInterval::new(a, a + w).unwrap()
}

fn sample(rng: &mut StdRng, iv: &RealInterval) -> f64 {
    if iv.lo() == iv.hi() {
        iv.lo()
    } else {
        rng.random_range(iv.lo()..=iv.hi())
    }
}

/// Containment of exact rational results for +, -, *, / on real intervals
/// and *, / on complex rectangles.
pub fn run_field_op_checks(rng: &mut StdRng, count: usize) {
    let rat = |x: f64| BigRational::from_float(x).expect("finite");
    for case in 0..count {
        let a = rand_interval(rng, 50.0);
        let b = rand_interval(rng, 50.0);
        let x = sample(rng, &a);
        let y = sample(rng, &b);
        let (rx, ry) = (rat(x), rat(y));
        assert!(rational_in(&a.add(&b), &(&rx + &ry)), "add case {case}");
        assert!(rational_in(&a.sub(&b), &(&rx - &ry)), "sub case {case}");
        assert!(rational_in(&a.mul(&b), &(&rx * &ry)), "mul case {case}");
        if b.mig() > 0.0 {
            assert!(
                rational_in(&a.div(&b).unwrap(), &(&rx / &ry)),
                "div case {case}"
            );
        }
        // complex multiplication: exact rational components
        let c = ComplexRect::new(a, rand_interval(rng, 50.0));
        let d = ComplexRect::new(b, rand_interval(rng, 50.0));
        let (cx, cy) = (sample(rng, &c.im), sample(rng, &d.im));
        let (ix, iy) = (rat(cx), rat(cy));
        let prod = c.mul(&d);
        let pre = &rx * &ry - &ix * &iy;
        let pim = &rx * &iy + &ix * &ry;
        assert!(rational_in(&prod.re, &pre), "cplx mul re case {case}");
        assert!(rational_in(&prod.im, &pim), "cplx mul im case {case}");
        // complex division checked through the defining identity q * d = c:
        // the quotient enclosure must contain the exact rational quotient
        let den = &ry * &ry + &iy * &iy;
        if d.mag_lower() > 1e-3 {
            let q = c.div(&d).unwrap();
            let qre = (&rx * &ry + &ix * &iy) / &den;
            let qim = (&ix * &ry - &rx * &iy) / &den;
            assert!(rational_in(&q.re, &qre), "cplx div re case {case}");
            assert!(rational_in(&q.im, &qim), "cplx div im case {case}");
        }
    }
}

/// Containment of exp/sin/cos values at random points of [-20, 20], with the
/// complex exponential folded in.
pub fn run_elem_fn_checks(rng: &mut StdRng, count: usize) {
    for case in 0..count {
        let x = rng.random_range(-20.0..20.0);
        let xi = RealInterval::point(x);
        let e = xi.exp().unwrap();
        assert!(!violates(&exp_fp(x), &e), "exp at {x} (case {case}): {e}");
        let s = xi.sin().unwrap();
        let c = xi.cos().unwrap();
        let (so, co) = sincos_fp(x);
        assert!(!violates(&so, &s), "sin at {x} (case {case}): {s}");
        assert!(!violates(&co, &c), "cos at {x} (case {case}): {c}");
        if case % 10 == 0 {
            // complex exponential: e^{a+bi} componentwise
            let a = rng.random_range(-5.0..5.0);
            let b = rng.random_range(-20.0..20.0);
            let z = ComplexRect::point(a, b);
            let w = z.exp().unwrap();
            let ea = exp_fp(a);
            let (sb, cb) = sincos_fp(b);
            assert!(!violates(&ea.mul(&cb), &w.re), "cplx exp re at {a}+{b}i");
            assert!(!violates(&ea.mul(&sb), &w.im), "cplx exp im at {a}+{b}i");
        }
    }
}

#[test]
fn oracle_rejects_a_wrong_interval() {
    // an interval that stops short of e must be flagged
    let wrong = RealInterval::new(2.7182, 2.71828).unwrap();
    assert!(violates(&exp_fp(1.0), &wrong));
    let right = RealInterval::new(2.718281828459045, 2.7182818284590455).unwrap();
    assert!(!violates(&exp_fp(1.0), &right));
    // a one-ulp f64 bracket of sin(1) must be accepted
    let (s, _) = sincos_fp(1.0);
    let v = 1.0f64.sin();
    let reference = RealInterval::new(v.next_down(), v.next_up()).unwrap();
    assert!(!violates(&s, &reference));
    // while a degenerate point cannot contain the irrational value
    assert!(violates(&s, &RealInterval::point(v)));
}
