//! The four radii-polynomial constants, the tail estimates behind them, and
//! extraction of the validated radius.
//!
//! For a guess `xhat` and the block operators built on it, the constants
//!
//! ```text
//! Y0 >= ||A F(xhat)||      Z0 >= ||I - A Adag||
//! Z1 >= ||A (DF(xhat) - Adag)||      Z2 >= Lipschitz bound of A DF near xhat
//! ```
//!
//! make `p(r) = Z2 r^2 - (1 - Z0 - Z1) r + Y0` a radii polynomial: a
//! certified `p(r) < 0` proves a unique zero of F within distance `r` of
//! `xhat` in the l1 norm. `A` acts as the floating inverse block on degrees
//! up to N and as multiplication by `Delta^{-1}` beyond; the tail pieces of
//! every constant come from Neumann-series resolvent estimates (discretized
//! problem) or the exponential decay of the characteristic function (delay
//! problem).

use rayon::prelude::*;
use serde::Serialize;
use sha2::{Digest, Sha256};

use crate::cheb::ChebyshevScheme;
use crate::error::{Error, Result};
use crate::interval::{ComplexRect, RealInterval};
use crate::linalg::IntervalMatrix;
use crate::manifold::{eval_f, ApproxSolution, ProblemData};
use crate::roots::SpectralPair;
use crate::seq::{degree_indices, Beta, TaylorSeq2};
use crate::ProblemKind;

/// Tail data for the discretized problem: the constants certified by the
/// invertibility sweep.
#[derive(Clone, Debug)]
pub struct PsaTailData {
    /// Tail threshold: indices with |beta| >= m are covered by Neumann bounds.
    pub m: u32,
    /// The epsilon in the threshold inequalities; defaults to just below
    /// `Re(lambda) m - ||D||`.
    pub epsilon: f64,
    /// Upper bound on ||D|| (induced 1-norm).
    pub norm_d: f64,
    /// ||ones|| in the paired vector norm (= n, exactly).
    pub norm_one: f64,
    /// Lower bound on the real part of the unstable pair.
    pub re_lambda_lo: f64,
    /// Upper bound on the blow-up last component for |beta| >= m:
    /// ||D|| ||1|| / epsilon.
    pub resolvent_tail: f64,
    /// Max of |blow-up last component| over the explicitly solved region,
    /// |beta| <= m.
    pub finite_max: f64,
    /// Max of 1/|Delta_n(<lambda, beta>)| over N < |beta| <= m.
    pub delta_inv_band_max: f64,
    /// Upper bound on 1/|Delta_n| for |beta| >= m:
    /// 1/(Re(lambda) m - alpha ||D|| ||1|| / epsilon).
    pub delta_tail_inv: f64,
}

/// Tail data for the delay problem, with the threshold applied at the
/// truncation degree.
#[derive(Clone, Debug)]
pub struct DdeTailData {
    pub m: u32,
    pub re_lambda_lo: f64,
    /// Lower bound on `Re(lambda) m - alpha e^{-Re(lambda) m}`, verified
    /// positive; its reciprocal bounds 1/|Delta| beyond degree m.
    pub tail_denom_lo: f64,
}

#[derive(Clone, Debug)]
pub enum TailData {
    Psa(PsaTailData),
    Dde(DdeTailData),
}

impl TailData {
    pub fn as_psa(&self) -> &PsaTailData {
        match self {
            TailData::Psa(t) => t,
            TailData::Dde(_) => panic!("expected pseudospectral tail data"),
        }
    }

    pub fn as_dde(&self) -> &DdeTailData {
        match self {
            TailData::Dde(t) => t,
            TailData::Psa(_) => panic!("expected delay tail data"),
        }
    }
}

/// Certify that `D - <lambda, beta> I` is invertible for every beta, and
/// record the resolvent maxima the bound formulas need.
///
/// Indices with `|<lambda, beta>| >= ||D|| + epsilon` are handled by the
/// Neumann series (which also bounds the blow-up component by
/// `||D|| ||1|| / epsilon`); the remaining finitely many indices get explicit
/// verified solves, cached per distinct `<lambda, beta>` value, i.e. per
/// (|beta|, beta1 - beta2) with beta1 - beta2 >= 0 by conjugate symmetry.
pub fn invertibility_sweep(
    scheme: &ChebyshevScheme,
    lambda: &SpectralPair,
    m: u32,
    trunc_n: u32,
    epsilon_override: Option<f64>,
) -> Result<PsaTailData> {
    assert_eq!(lambda.kind(), ProblemKind::Psa);
    let norm_d = scheme.norm_d_one_upper();
    let norm_one = scheme.n() as f64; // ||ones||_1 exactly
    let re_lo = lambda.re_lower();
    if re_lo <= 0.0 {
        return Err(Error::ThresholdViolated(
            "unstable pair has no certified positive real part".into(),
        ));
    }
    let epsilon = match epsilon_override {
        Some(e) => e,
        None => {
            // just below Re(lambda) m - ||D||, so the strict threshold holds
            let slack = RealInterval::point(re_lo)
                .scale(f64::from(m))
                .sub(&RealInterval::point(norm_d));
            slack.lo() * (1.0 - 2.0f64.powi(-20))
        }
    };
    if !(epsilon > 0.0) {
        return Err(Error::ThresholdViolated(format!(
            "epsilon = {epsilon} must be positive: increase the tail threshold m"
        )));
    }
    // threshold 1: m > (||D|| + epsilon)/Re(lambda)
    let t1 = RealInterval::point(re_lo)
        .scale(f64::from(m))
        .sub(&RealInterval::point(norm_d).add(&RealInterval::point(epsilon)));
    if !(t1.lo() > 0.0) {
        return Err(Error::ThresholdViolated(format!(
            "m = {m} fails m Re(lambda) > ||D|| + epsilon (margin {})",
            t1.lo()
        )));
    }
    let resolvent_tail = RealInterval::point(norm_d)
        .scale(norm_one)
        .div(&RealInterval::point(epsilon))?
        .hi();
    // threshold 2: m > alpha ||D|| ||1|| / (Re(lambda) epsilon)
    let alpha_hi = scheme.alpha().hi();
    let t2 = RealInterval::point(alpha_hi)
        .mul(&RealInterval::point(resolvent_tail))
        .div(&RealInterval::point(re_lo))?;
    if !(f64::from(m) > t2.hi()) {
        return Err(Error::ThresholdViolated(format!(
            "m = {m} fails m > alpha ||D|| ||1|| / (Re(lambda) eps) = {}",
            t2.hi()
        )));
    }
    // 1/|Delta_n| beyond the threshold
    let dt_denom = RealInterval::point(re_lo)
        .scale(f64::from(m))
        .sub(&RealInterval::point(alpha_hi).mul(&RealInterval::point(resolvent_tail)));
    if !(dt_denom.lo() > 0.0) {
        return Err(Error::ThresholdViolated(
            "characteristic tail denominator not positive".into(),
        ));
    }
    let delta_tail_inv = RealInterval::ONE
        .div(&RealInterval::point(dt_denom.lo()))?
        .hi();

    let lam_rect = lambda.plus_rect();
    let neumann_gate = RealInterval::point(norm_d)
        .add(&RealInterval::point(epsilon))
        .hi();

    // per-degree scan; q = beta1 - beta2 >= 0 by conjugate symmetry
    let per_s: Vec<Result<(f64, f64)>> = (0..=m)
        .into_par_iter()
        .map(|s| {
            let mut local_finite = 0.0f64;
            let mut local_band = 0.0f64;
            let mut q = s % 2;
            while q <= s {
                let beta = Beta((s + q) / 2, (s - q) / 2);
                let z = crate::seq::lam_dot(&lam_rect, beta);
                let zlo = z.mag_lower();
                if zlo >= neumann_gate {
                    // Neumann region: blow-up below resolvent_tail by
                    // construction; in-band indices still feed the band max
                    if s > trunc_n {
                        let denom = RealInterval::point(zlo).sub(&RealInterval::point(norm_d));
                        let blow_bound = RealInterval::point(norm_d).scale(norm_one).div(&denom)?;
                        let dlo = RealInterval::point(zlo)
                            .sub(&RealInterval::point(alpha_hi).mul(&blow_bound));
                        if !(dlo.lo() > 0.0) {
                            return Err(Error::ResonantIndex(beta.0, beta.1));
                        }
                        local_band = local_band
                            .max(RealInterval::ONE.div(&RealInterval::point(dlo.lo()))?.hi());
                    }
                } else {
                    let v = scheme.blowup_vector(&z).map_err(|e| match e {
                        Error::NotVerifiablyInvertible { .. } => Error::SweepSolveFailed {
                            beta1: beta.0,
                            beta2: beta.1,
                        },
                        other => other,
                    })?;
                    let last = *v.last();
                    local_finite = local_finite.max(last.mag_upper());
                    if s > trunc_n {
                        let delta = z.add(&last.scale(&scheme.alpha()));
                        let dlo = delta.mag_lower();
                        if !(dlo > 0.0) {
                            return Err(Error::ResonantIndex(beta.0, beta.1));
                        }
                        local_band =
                            local_band.max(RealInterval::ONE.div(&RealInterval::point(dlo))?.hi());
                    }
                }
                q += 2;
            }
            Ok((local_finite, local_band))
        })
        .collect();

    let mut finite_max = 0.0f64;
    let mut delta_inv_band_max = 0.0f64;
    for r in per_s {
        let (f, b) = r?;
        finite_max = finite_max.max(f);
        delta_inv_band_max = delta_inv_band_max.max(b);
    }
    Ok(PsaTailData {
        m,
        epsilon,
        norm_d,
        norm_one,
        re_lambda_lo: re_lo,
        resolvent_tail,
        finite_max,
        delta_inv_band_max,
        delta_tail_inv,
    })
}

/// Verify the delay-problem tail threshold at degree `m` (the truncation
/// degree in practice) and record the tail denominator.
pub fn dde_tail(lambda: &SpectralPair, alpha: RealInterval, m: u32) -> Result<DdeTailData> {
    assert_eq!(lambda.kind(), ProblemKind::Dde);
    let re_lo = lambda.re_lower();
    if re_lo <= 0.0 {
        return Err(Error::ThresholdViolated(
            "unstable pair has no certified positive real part".into(),
        ));
    }
    let t = RealInterval::point(re_lo).scale(f64::from(m));
    let denom = t.sub(&alpha.mul(&t.neg().exp()?));
    if !(denom.lo() > 0.0) {
        return Err(Error::ThresholdViolated(format!(
            "m = {m} fails Re(lambda) m > alpha e^(-Re(lambda) m)"
        )));
    }
    Ok(DdeTailData {
        m,
        re_lambda_lo: re_lo,
        tail_denom_lo: denom.lo(),
    })
}

/// The four certified constants for one problem.
#[derive(Clone, Debug)]
pub struct BoundSet {
    pub kind: ProblemKind,
    pub y0: RealInterval,
    pub z0: RealInterval,
    pub z1: RealInterval,
    pub z2: RealInterval,
}

/// Upper bound on `||A F(xhat)||`: the floating inverse block applied to the
/// head residual, plus `Delta^{-1}` against the pure-convolution band
/// N+1 <= |beta| <= 2N (the guess has no coefficients there, so the residual
/// is exactly the quadratic term).
pub fn y0_bound(p: &ProblemData, sol: &ApproxSolution) -> Result<RealInterval> {
    let n = sol.n_trunc();
    let f = eval_f(p, sol.xhat(), 2 * n)?;
    // head: || Abar F_head ||_l1
    let abar = IntervalMatrix::from_complex_exact(sol.abar_block());
    let head_len = crate::seq::tri_len(n);
    let f_head = crate::linalg::IntervalVector::new(f.coeffs()[..head_len].to_vec());
    let af = abar.mat_vec(&f_head)?;
    let mut total = RealInterval::ZERO;
    for i in 0..af.len() {
        let (lo, hi) = af.entry(i).mag_bounds();
        total = total.add(&RealInterval::new(lo, hi).expect("bounds ordered"));
    }
    // tail: sum of |F_beta| / |Delta_beta| over the band
    for s in n + 1..=2 * n {
        for b in degree_indices(s) {
            let (nlo, nhi) = f.get(b).mag_bounds();
            if nhi == 0.0 {
                continue;
            }
            let (dlo, dhi) = p.delta_at(b)?.mag_bounds();
            if !(dlo > 0.0) {
                return Err(Error::ResonantIndex(b.0, b.1));
            }
            let term = RealInterval::new(nlo, nhi)
                .expect("ordered")
                .div(&RealInterval::new(dlo, dhi).expect("ordered"))?;
            total = total.add(&term.abs());
        }
    }
    Ok(total)
}

/// Upper bound on `||I - Abar Adag_mid||` in the l1 operator norm (max
/// column sum) over the finite block.
pub fn z0_bound(sol: &ApproxSolution) -> Result<RealInterval> {
    let abar = IntervalMatrix::from_complex_exact(sol.abar_block());
    let adag_mid = IntervalMatrix::from_complex_exact(&sol.adag_block().mid());
    let prod = abar.mat_mat(&adag_mid)?;
    let e = IntervalMatrix::identity(prod.rows()).sub(&prod);
    let hi = e.one_norm_upper();
    Ok(RealInterval::new(0.0, hi).expect("nonnegative"))
}

/// Upper bound on `||A (DF(xhat) - Adag)||`: the finite-block mismatch
/// (the interval enclosure of the exact block against its floating midpoint)
/// plus the problem-specific tail term.
pub fn z1_bound(p: &ProblemData, sol: &ApproxSolution, tail: &TailData) -> Result<RealInterval> {
    let abar = IntervalMatrix::from_complex_exact(sol.abar_block());
    let adag_mid = IntervalMatrix::from_complex_exact(&sol.adag_block().mid());
    let mismatch = sol.adag_block().sub(&adag_mid);
    let finite = abar.mat_mat(&mismatch)?.one_norm_upper();

    let alpha_hi = p.alpha().hi();
    let xhat_norm = sol.xhat().ell1_upper();
    let tail_term = match (p.kind(), tail) {
        (ProblemKind::Psa, TailData::Psa(t)) => {
            let band = t.delta_inv_band_max.max(t.delta_tail_inv);
            let mult_norm = t.finite_max.max(t.resolvent_tail);
            let rx_norm = sol.xhat().apply_multiplier(p.mult()).ell1_upper();
            RealInterval::point(alpha_hi)
                .mul(&RealInterval::point(band))
                .mul(
                    &RealInterval::point(rx_norm)
                        .add(&RealInterval::point(xhat_norm).mul(&RealInterval::point(mult_norm))),
                )
                .hi()
        }
        (ProblemKind::Dde, TailData::Dde(t)) => RealInterval::point(2.0 * alpha_hi)
            .mul(&RealInterval::point(xhat_norm))
            .div(&RealInterval::point(t.tail_denom_lo))?
            .hi(),
        _ => panic!("tail data kind does not match the problem"),
    };
    let hi = RealInterval::point(finite)
        .add(&RealInterval::point(tail_term))
        .hi();
    Ok(RealInterval::new(0.0, hi).expect("nonnegative"))
}

/// Lipschitz bound: `||A (DF(xhat + y) - DF(xhat))|| <= Z2 ||y||` for all y.
pub fn z2_bound(p: &ProblemData, sol: &ApproxSolution, tail: &TailData) -> Result<RealInterval> {
    let abar = IntervalMatrix::from_complex_exact(sol.abar_block());
    let norm_a = abar.one_norm_upper();
    let alpha_hi = p.alpha().hi();
    let hi = match (p.kind(), tail) {
        (ProblemKind::Psa, TailData::Psa(t)) => {
            let first = t.delta_inv_band_max.max(t.delta_tail_inv).max(norm_a);
            let second = t.finite_max.max(t.resolvent_tail);
            RealInterval::point(2.0 * alpha_hi)
                .mul(&RealInterval::point(first))
                .mul(&RealInterval::point(second))
                .hi()
        }
        (ProblemKind::Dde, TailData::Dde(t)) => {
            let amp = norm_a.max(
                RealInterval::ONE
                    .div(&RealInterval::point(t.tail_denom_lo))?
                    .hi(),
            );
            RealInterval::point(2.0 * alpha_hi)
                .mul(&RealInterval::point(amp))
                .hi()
        }
        _ => panic!("tail data kind does not match the problem"),
    };
    Ok(RealInterval::new(0.0, hi).expect("nonnegative"))
}

/// Relative upward nudge applied to the candidate radius before certifying
/// `p(r) < 0`.
const RADIUS_NUDGE: f64 = 1.0 + 9.5367431640625e-7; // 1 + 2^-20

/// Find a certified radius: the smallest positive root candidate of
/// `p(r) = Z2 r^2 - (1 - Z0 - Z1) r + Y0`, nudged up, with `p(r) < 0`
/// verified by interval evaluation. Success also certifies `Z0 + Z1 < 1`,
/// hence the invertibility of the finite block operator.
pub fn radii_root(b: &BoundSet) -> Result<f64> {
    let y0 = b.y0.hi();
    let z0 = b.z0.hi();
    let z1 = b.z1.hi();
    let z2 = b.z2.hi();
    let c = 1.0 - z0 - z1;
    if !(c > 0.0) {
        return Err(Error::NoNegativePoint);
    }
    let mut r = if z2 == 0.0 {
        y0 / c
    } else {
        let disc = c * c - 4.0 * z2 * y0;
        if disc < 0.0 {
            return Err(Error::NoNegativePoint);
        }
        2.0 * y0 / (c + disc.sqrt())
    };
    r *= RADIUS_NUDGE;
    if r == 0.0 {
        // exact zero residual: any tiny radius certifies
        r = 1e-300;
    }
    // certified sign: evaluate p at r with every constant at its upper bound
    let rp = RealInterval::point(r);
    let p_at_r = RealInterval::point(z2)
        .mul(&rp.square())
        .sub(
            &RealInterval::ONE
                .sub(&RealInterval::point(z0))
                .sub(&RealInterval::point(z1))
                .mul(&rp),
        )
        .add(&RealInterval::point(y0));
    if !(p_at_r.hi() < 0.0) {
        return Err(Error::NoNegativePoint);
    }
    Ok(r)
}

/// Outward-rounded sum of the two validated radii.
pub fn distance_bound(r_psa: f64, r_dde: f64) -> f64 {
    RealInterval::point(r_psa)
        .add(&RealInterval::point(r_dde))
        .hi()
}

/// SHA-256 of the canonical CSV serialization of a coefficient sequence.
pub fn xhat_sha256(x: &TaylorSeq2) -> String {
    let mut hasher = Sha256::new();
    hasher.update(x.csv_bytes());
    let digest = hasher.finalize();
    let mut s = String::with_capacity(64);
    for byte in digest {
        s.push_str(&format!("{byte:02x}"));
    }
    s
}

/// Decimal string guaranteed to be >= the given value (17 significant
/// digits of the next representable number up).
pub fn decimal_upper(x: f64) -> String {
    format!("{:.16e}", f64::next_up(x))
}

/// Endpoint serialization: one representable step outward, so the shortest
/// decimal form stays outside the original interval.
pub fn json_lo(x: f64) -> f64 {
    f64::next_down(x)
}

pub fn json_hi(x: f64) -> f64 {
    f64::next_up(x)
}

#[derive(Clone, Debug, Serialize)]
pub struct CertConfig {
    pub alpha: String,
    pub n: usize,
    pub trunc_n: u32,
    pub tail_m: u32,
    pub epsilon: f64,
    pub xi_scale: f64,
    pub norm: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct EnclosureOut {
    pub re: [f64; 2],
    pub im: [f64; 2],
}

impl EnclosureOut {
    pub fn from_rect(r: &ComplexRect) -> Self {
        Self {
            re: [json_lo(r.re.lo()), json_hi(r.re.hi())],
            im: [json_lo(r.im.lo()), json_hi(r.im.hi())],
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct LambdaOut {
    pub plus: EnclosureOut,
    pub minus: EnclosureOut,
}

impl LambdaOut {
    pub fn from_pair(p: &SpectralPair) -> Self {
        Self {
            plus: EnclosureOut::from_rect(&p.plus().enclosure),
            minus: EnclosureOut::from_rect(&p.minus().enclosure),
        }
    }
}

#[derive(Clone, Debug, Serialize)]
#[allow(non_snake_case)]
pub struct BoundsOut {
    pub Y0: String,
    pub Z0: String,
    pub Z1: String,
    pub Z2: String,
}

impl BoundsOut {
    pub fn from_set(b: &BoundSet) -> Self {
        Self {
            Y0: decimal_upper(b.y0.hi()),
            Z0: decimal_upper(b.z0.hi()),
            Z1: decimal_upper(b.z1.hi()),
            Z2: decimal_upper(b.z2.hi()),
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct Check {
    pub name: String,
    pub passed: bool,
}

/// The machine-checkable record of a validation run. Emitted only when every
/// listed check passed.
#[derive(Clone, Debug, Serialize)]
pub struct ValidationCertificate {
    pub timestamp: String,
    pub config: CertConfig,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub lambda_dde: Option<LambdaOut>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub lambda_psa: Option<LambdaOut>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub bounds_psa: Option<BoundsOut>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub bounds_dde: Option<BoundsOut>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub r_psa: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub r_dde: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub total_bound: Option<String>,
    pub xhat_sha256: String,
    pub checks: Vec<Check>,
}

impl ValidationCertificate {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("certificate serializes")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn bound_set(y0: f64, z0: f64, z1: f64, z2: f64) -> BoundSet {
        BoundSet {
            kind: ProblemKind::Psa,
            y0: RealInterval::new(0.0, y0).unwrap(),
            z0: RealInterval::new(0.0, z0).unwrap(),
            z1: RealInterval::new(0.0, z1).unwrap(),
            z2: RealInterval::new(0.0, z2).unwrap(),
        }
    }

    #[test]
    fn z0_hand_cases() {
        use crate::manifold::ApproxSolution;
        use nalgebra::DMatrix;
        use num_complex::Complex64;
        // an exact inverse gives zero defect
        let x = TaylorSeq2::zeros(0);
        let two = IntervalMatrix::from_real(1, 1, &[2.0]);
        let half = DMatrix::from_row_slice(1, 1, &[Complex64::new(0.5, 0.0)]);
        let sol = ApproxSolution::from_parts(x.clone(), two.clone(), half);
        // an exact inverse leaves only the outward-rounding slack
        assert!(z0_bound(&sol).unwrap().hi() <= 1e-15);
        // identity against 2I gives 1 (plus the same slack)
        let id = DMatrix::from_row_slice(1, 1, &[Complex64::new(1.0, 0.0)]);
        let sol = ApproxSolution::from_parts(x, two, id);
        let z0 = z0_bound(&sol).unwrap().hi();
        assert!((1.0..=1.0 + 1e-14).contains(&z0), "z0 = {z0}");
    }

    #[test]
    fn zero_guess_gives_zero_y0_and_tiny_z1() {
        use crate::cheb::build_scheme;
        use crate::manifold::{recurse_coeffs, ApproxSolution, ProblemData};
        use crate::roots::census_psa;
        use std::sync::Arc;
        // first-order scale zero: the recursion stays at zero, the map value
        // vanishes identically, and the derivative mismatch carries only the
        // interval widths of the characteristic enclosures
        let alpha = RealInterval::point(2.0);
        let scheme = Arc::new(build_scheme(4, alpha));
        let (_, pair) = census_psa(&scheme).unwrap();
        let p = ProblemData::assemble(
            crate::ProblemKind::Psa,
            alpha,
            pair.clone(),
            Some(scheme.clone()),
            0.0,
            6,
        )
        .unwrap();
        let xhat = recurse_coeffs(&p, 6).unwrap();
        assert_eq!(xhat.ell1_upper(), 0.0);
        let sol = ApproxSolution::build(&p, xhat, 6).unwrap();
        let y0 = y0_bound(&p, &sol).unwrap();
        assert_eq!(y0.hi(), 0.0);
        let tail = TailData::Psa(invertibility_sweep(&scheme, &pair, 800, 6, Some(10.0)).unwrap());
        let z1 = z1_bound(&p, &sol, &tail).unwrap();
        assert!(z1.hi() <= 1e-9, "Z1 = {}", z1.hi());
    }

    #[test]
    fn radii_quadratic_hand_example() {
        // p(r) = 0.5 r^2 - 0.6 r + 0.1: roots 0.2 and 1.0
        let b = bound_set(0.1, 0.2, 0.2, 0.5);
        let r = radii_root(&b).unwrap();
        assert!(r > 0.2 && r < 0.2 * 1.0001, "r = {r}");
        // spot value away from the root
        let p_half: f64 = 0.5 * 0.25 - 0.6 * 0.5 + 0.1;
        assert!((p_half + 0.075).abs() < 1e-15);
    }

    #[test]
    fn radii_linear_case() {
        let b = bound_set(0.1, 0.25, 0.25, 0.0);
        let r = radii_root(&b).unwrap();
        assert!(r > 0.2 && r < 0.2 * 1.0001, "r = {r}");
    }

    #[test]
    fn radii_rejects_contraction_failure() {
        let b = bound_set(0.1, 0.6, 0.6, 0.1);
        assert!(matches!(radii_root(&b), Err(Error::NoNegativePoint)));
        // discriminant failure: minimum of p is positive
        let b = bound_set(1.0, 0.1, 0.1, 10.0);
        assert!(matches!(radii_root(&b), Err(Error::NoNegativePoint)));
    }

    #[test]
    fn radii_monotone_in_y0() {
        // inflating Y0 by 10% must still certify while the polynomial admits
        // a negative point
        let b = bound_set(0.1, 0.2, 0.2, 0.5);
        let r1 = radii_root(&b).unwrap();
        let b2 = bound_set(0.11, 0.2, 0.2, 0.5);
        let r2 = radii_root(&b2).unwrap();
        assert!(r2 > r1);
    }

    #[test]
    fn distance_bound_cases() {
        assert_eq!(distance_bound(0.0, 0.0), 0.0);
        let d = distance_bound(1e-13, 2e-9);
        assert!(d >= 2.0001e-9 - 1e-13 && d <= 2.0002e-9);
    }

    #[test]
    fn decimal_upper_is_upper() {
        for &x in &[0.1, 1.0 / 3.0, 1.956701163090857e-9, 51.25071389190387] {
            let s = decimal_upper(x);
            let back: f64 = s.parse().unwrap();
            assert!(back >= x, "{s} < {x:?}");
        }
    }

    #[test]
    fn hash_is_stable_and_sensitive() {
        let mut x = TaylorSeq2::zeros(2);
        let h1 = xhat_sha256(&x);
        assert_eq!(h1.len(), 64);
        assert_eq!(h1, xhat_sha256(&x));
        x.set(Beta(1, 0), ComplexRect::point(0.5, 0.0));
        assert_ne!(h1, xhat_sha256(&x));
    }
}
