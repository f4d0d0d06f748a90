//! Validated scalar root-finding and the characteristic-equation machinery.
//!
//! The core tool certifies, around a floating approximation `zhat` of a root
//! of an analytic `g`, constants
//!
//! ```text
//! Y  >= |g(zhat) / g'(zhat)|
//! Z  >= sup |g g'' / (g')^2|   over the closed ball B(zhat, rstar)
//! ```
//!
//! If `Z < 1` and `r0 = Y / (1 - Z) < rstar`, then the Newton map of `g` is a
//! contraction and `g` has a unique root within distance `r0` of `zhat`.
//!
//! Applied to the delay characteristic function `Delta(z) = z + alpha e^{-z}`
//! and its pseudospectral counterpart `Delta_n`, this yields validated
//! eigenvalue enclosures, including a complete census of the spectrum of the
//! discretized linearization.

use nalgebra::DMatrix;
use num_complex::Complex64;

use crate::cheb::ChebyshevScheme;
use crate::error::{Error, Result};
use crate::interval::{ComplexRect, RealInterval};
use crate::ProblemKind;

/// A validated root: the unique zero of the target function within
/// `enclosure`, a square of half-width `r0` around `zhat`.
#[derive(Clone, Debug)]
pub struct RootCertificate {
    pub zhat: Complex64,
    pub r0: f64,
    pub enclosure: ComplexRect,
    pub y: f64,
    pub z: f64,
    pub rstar: f64,
}

impl RootCertificate {
    /// Mirror across the real axis; valid for real-coefficient targets.
    pub fn conjugate(&self) -> Self {
        Self {
            zhat: self.zhat.conj(),
            r0: self.r0,
            enclosure: self.enclosure.conj(),
            y: self.y,
            z: self.z,
            rstar: self.rstar,
        }
    }
}

/// The conjugate unstable eigenvalue pair of one of the two problems.
#[derive(Clone, Debug)]
pub struct SpectralPair {
    plus: RootCertificate,
    minus: RootCertificate,
    kind: ProblemKind,
}

impl SpectralPair {
    /// Assemble from the validated upper root; the lower one is its mirror,
    /// which encloses a root because the target has real coefficients.
    pub fn from_plus(plus: RootCertificate, kind: ProblemKind) -> Result<Self> {
        if !(plus.enclosure.im.lo() > 0.0) {
            return Err(Error::SeedNotInRightHalfPlane);
        }
        if !(plus.enclosure.re.lo() > 0.0) {
            return Err(Error::SeedNotInRightHalfPlane);
        }
        let minus = plus.conjugate();
        Ok(Self { plus, minus, kind })
    }

    pub fn plus(&self) -> &RootCertificate {
        &self.plus
    }

    pub fn minus(&self) -> &RootCertificate {
        &self.minus
    }

    pub fn kind(&self) -> ProblemKind {
        self.kind
    }

    /// Enclosure of the upper eigenvalue.
    pub fn plus_rect(&self) -> ComplexRect {
        self.plus.enclosure
    }

    /// Rigorous lower bound on the (shared) real part.
    pub fn re_lower(&self) -> f64 {
        self.plus.enclosure.re.lo()
    }
}

/// A scalar complex function with two derivatives, evaluated over rectangles.
pub trait CharacteristicFn {
    fn value(&self, z: &ComplexRect) -> Result<ComplexRect>;
    fn deriv(&self, z: &ComplexRect) -> Result<ComplexRect>;
    fn deriv2(&self, z: &ComplexRect) -> Result<ComplexRect>;

    /// All three at once; override when a shared factorization helps.
    fn all(&self, z: &ComplexRect) -> Result<(ComplexRect, ComplexRect, ComplexRect)> {
        Ok((self.value(z)?, self.deriv(z)?, self.deriv2(z)?))
    }
}

/// Wright's characteristic function Delta(z) = z + alpha e^{-z}.
#[derive(Clone, Debug)]
pub struct DdeChar {
    pub alpha: RealInterval,
}

impl DdeChar {
    fn exp_neg(&self, z: &ComplexRect) -> Result<ComplexRect> {
        z.neg().exp()
    }
}

impl CharacteristicFn for DdeChar {
    fn value(&self, z: &ComplexRect) -> Result<ComplexRect> {
        Ok(z.add(&self.exp_neg(z)?.scale(&self.alpha)))
    }

    fn deriv(&self, z: &ComplexRect) -> Result<ComplexRect> {
        Ok(ComplexRect::ONE.sub(&self.exp_neg(z)?.scale(&self.alpha)))
    }

    fn deriv2(&self, z: &ComplexRect) -> Result<ComplexRect> {
        Ok(self.exp_neg(z)?.scale(&self.alpha))
    }

    fn all(&self, z: &ComplexRect) -> Result<(ComplexRect, ComplexRect, ComplexRect)> {
        let e = self.exp_neg(z)?.scale(&self.alpha);
        Ok((z.add(&e), ComplexRect::ONE.sub(&e), e))
    }
}

/// The discrete characteristic function Delta_n evaluated by verified
/// resolvent solves.
pub struct PsaChar<'a> {
    pub scheme: &'a ChebyshevScheme,
}

impl CharacteristicFn for PsaChar<'_> {
    fn value(&self, z: &ComplexRect) -> Result<ComplexRect> {
        self.scheme.delta_n(z)
    }

    fn deriv(&self, z: &ComplexRect) -> Result<ComplexRect> {
        Ok(self.scheme.delta_n_derivs(z)?.0)
    }

    fn deriv2(&self, z: &ComplexRect) -> Result<ComplexRect> {
        Ok(self.scheme.delta_n_derivs(z)?.1)
    }

    fn all(&self, z: &ComplexRect) -> Result<(ComplexRect, ComplexRect, ComplexRect)> {
        self.scheme.delta_n_all(z)
    }
}

/// Subdivision depth for the contraction bound: the trust ball is covered by
/// a grid of this many rectangles per axis, and rectangles wholly outside the
/// disk are discarded. Plain one-rectangle evaluation overestimates the sup
/// enough to reject healthy certificates.
const Z_GRID: usize = 4;

/// Certify a unique root of `g` near `zhat` within trust radius `rstar`.
pub fn nk_validate(
    g: &dyn CharacteristicFn,
    zhat: Complex64,
    rstar: f64,
) -> Result<RootCertificate> {
    assert!(rstar > 0.0, "trust radius must be positive");
    let zh = ComplexRect::point(zhat.re, zhat.im);

    // derivative must be verifiably nonzero on the whole hull of the ball
    let hull = ComplexRect::centered(zhat.re, zhat.im, rstar);
    let dball = g.deriv(&hull)?;
    if dball.mag_lower() <= 0.0 {
        return Err(Error::DerivativeVanishes);
    }

    // Y = |g(zhat)/g'(zhat)|, upper bound
    let g0 = g.value(&zh)?;
    let d0 = g.deriv(&zh)?;
    if d0.mag_lower() <= 0.0 {
        return Err(Error::DerivativeVanishes);
    }
    let y = g0.div(&d0)?.mag_upper();

    // Z = sup |g g''/(g')^2| over the ball, via a subdivided covering
    let mut z = 0.0f64;
    let xs = grid(hull.re, Z_GRID);
    let ys = grid(hull.im, Z_GRID);
    for i in 0..Z_GRID {
        for j in 0..Z_GRID {
            let cell = ComplexRect::new(
                RealInterval::new(xs[i], xs[i + 1]).unwrap(),
                RealInterval::new(ys[j], ys[j + 1]).unwrap(),
            );
            if cell_outside_disk(&cell, zhat, rstar) {
                continue;
            }
            let (gv, g1, g2) = g.all(&cell)?;
            let den = g1.mag_lower();
            if den <= 0.0 {
                return Err(Error::DerivativeVanishes);
            }
            let num = RealInterval::point(gv.mag_upper()).mul(&RealInterval::point(g2.mag_upper()));
            let cell_z = num.div(&RealInterval::point(den).square())?.hi();
            z = z.max(cell_z);
        }
    }
    if !(z < 1.0) {
        return Err(Error::ContractionFailed { z });
    }

    let r0 = RealInterval::point(y)
        .div(&RealInterval::point(1.0).sub(&RealInterval::point(z)))?
        .hi();
    if !(r0 < rstar) {
        return Err(Error::RadiusTooLarge { r0, rstar });
    }
    Ok(RootCertificate {
        zhat,
        r0,
        enclosure: ComplexRect::centered(zhat.re, zhat.im, r0),
        y,
        z,
        rstar,
    })
}

fn grid(iv: RealInterval, k: usize) -> Vec<f64> {
    let mut xs = Vec::with_capacity(k + 1);
    for i in 0..=k {
        let t = i as f64 / k as f64;
        xs.push(iv.lo() + t * (iv.hi() - iv.lo()));
    }
    xs[0] = iv.lo();
    xs[k] = iv.hi();
    xs
}

/// True only when the cell is certainly disjoint from the closed disk.
fn cell_outside_disk(cell: &ComplexRect, center: Complex64, r: f64) -> bool {
    let shifted = cell.sub(&ComplexRect::point(center.re, center.im));
    shifted.mag_lower() > r
}

/// Retry wrapper: halve the trust radius on contraction or radius failures.
pub fn nk_validate_with_retry(
    g: &dyn CharacteristicFn,
    zhat: Complex64,
    rstar: f64,
    max_halvings: u32,
) -> Result<RootCertificate> {
    let mut r = rstar;
    let mut last = None;
    for _ in 0..=max_halvings {
        match nk_validate(g, zhat, r) {
            Ok(cert) => return Ok(cert),
            Err(e @ (Error::ContractionFailed { .. } | Error::RadiusTooLarge { .. })) => {
                last = Some(e);
                r *= 0.5;
            }
            Err(other) => return Err(other),
        }
    }
    Err(last.unwrap_or(Error::ContractionFailed { z: f64::INFINITY }))
}

/// Default trust radius for characteristic roots; well below the spacing of
/// the spectra at the parameters of interest.
pub const DEFAULT_RSTAR: f64 = 1e-4;

/// Hayes range for the parameter: exactly two unstable characteristic roots.
pub fn alpha_in_hayes_range(alpha: f64) -> bool {
    let lo = std::f64::consts::FRAC_PI_2;
    let hi = 2.5 * std::f64::consts::PI;
    alpha > lo && alpha < hi
}

/// Locate and validate the unstable conjugate root pair of
/// `Delta(z) = z + alpha e^{-z}`.
///
/// The count (exactly two unstable roots for pi/2 < alpha < 5 pi/2) is taken
/// as a precondition on alpha; the returned enclosures themselves are fully
/// validated and verified to lie in the open right half-plane.
pub fn find_dde_pair(alpha: RealInterval) -> Result<SpectralPair> {
    let am = alpha.mid();
    if !alpha_in_hayes_range(am) {
        return Err(Error::Config(format!(
            "alpha = {am} outside (pi/2, 5 pi/2); unstable root count unknown"
        )));
    }
    let delta = |z: Complex64| z + am * (-z).exp();
    let ddelta = |z: Complex64| Complex64::ONE - am * (-z).exp();

    // coarse scan of the upper right quarter-plane, then Newton polishing
    let mut best: Vec<Complex64> = Vec::new();
    let mut seeds: Vec<(f64, Complex64)> = Vec::new();
    for i in 0..48 {
        for j in 0..48 {
            let z = Complex64::new(
                1e-3 + (i as f64 / 47.0) * am.max(1.5),
                0.3 + (j as f64 / 47.0) * 7.9,
            );
            seeds.push((delta(z).norm(), z));
        }
    }
    seeds.sort_by(|a, b| a.0.total_cmp(&b.0));
    for &(_, seed) in seeds.iter().take(10) {
        let mut z = seed;
        for _ in 0..60 {
            let d = ddelta(z);
            if d.norm() < 1e-14 {
                break;
            }
            let step = delta(z) / d;
            z -= step;
            if step.norm() < 1e-15 {
                break;
            }
        }
        if delta(z).norm() < 1e-10 && z.re > 1e-9 && z.im > 1e-9 {
            if !best.iter().any(|b| (b - z).norm() < 1e-6) {
                best.push(z);
            }
        }
    }
    let zhat = *best
        .iter()
        .min_by(|a, b| delta(**a).norm().total_cmp(&delta(**b).norm()))
        .ok_or(Error::SeedNotInRightHalfPlane)?;

    let g = DdeChar { alpha };
    let cert = nk_validate_with_retry(&g, zhat, DEFAULT_RSTAR, 8)?;
    SpectralPair::from_plus(cert, ProblemKind::Dde)
}

/// Validate every eigenvalue of the discretized linearization.
///
/// Floating eigenvalues seed one Newton-Kantorovich certificate per root of
/// `Delta_n`; the n+1 enclosures must be pairwise disjoint, which proves they
/// exhaust the spectrum. Exactly two must lie in the open right half-plane;
/// these form the returned pair.
pub fn census_psa(scheme: &ChebyshevScheme) -> Result<(Vec<RootCertificate>, SpectralPair)> {
    let n = scheme.n();
    let a = scheme.assemble_an_float();
    let eigs = a.complex_eigenvalues();
    let g = PsaChar { scheme };

    // polish each seed on Delta_n before validating
    let mut certs: Vec<RootCertificate> = Vec::with_capacity(n + 1);
    for k in 0..n + 1 {
        let mut z = eigs[k];
        for _ in 0..30 {
            let (v, d) = match (scheme.delta_n_float(z), delta_n_deriv_float(scheme, z)) {
                (Ok(v), Ok(d)) => (v, d),
                _ => break,
            };
            if d.norm() < 1e-14 {
                break;
            }
            let step = v / d;
            z -= step;
            if step.norm() < 3e-16 * (1.0 + z.norm()) {
                break;
            }
        }
        certs.push(nk_validate_with_retry(&g, z, DEFAULT_RSTAR, 8)?);
    }
    if certs.len() != n + 1 {
        return Err(Error::CensusCountMismatch {
            found: certs.len(),
            expected: n + 1,
        });
    }
    for i in 0..certs.len() {
        for j in i + 1..certs.len() {
            if certs[i].enclosure.intersects(&certs[j].enclosure) {
                return Err(Error::EnclosuresOverlap);
            }
        }
    }
    // half-plane classification must be decided by interval signs
    let mut unstable: Vec<&RootCertificate> = Vec::new();
    for c in &certs {
        if c.enclosure.re.lo() > 0.0 {
            unstable.push(c);
        } else if !(c.enclosure.re.hi() < 0.0) {
            return Err(Error::CensusCountMismatch {
                found: 0,
                expected: n + 1,
            });
        }
    }
    if unstable.len() != 2 {
        return Err(Error::UnstableCountNotTwo(unstable.len()));
    }
    let plus = unstable
        .iter()
        .find(|c| c.enclosure.im.lo() > 0.0)
        .ok_or(Error::UnstableCountNotTwo(unstable.len()))?;
    let minus = unstable
        .iter()
        .find(|c| c.enclosure.im.hi() < 0.0)
        .ok_or(Error::UnstableCountNotTwo(unstable.len()))?;
    // the mirrored plus enclosure and the validated minus one must agree
    if !plus.enclosure.conj().intersects(&minus.enclosure) {
        return Err(Error::EnclosuresOverlap);
    }
    let pair = SpectralPair::from_plus((*plus).clone(), ProblemKind::Psa)?;
    Ok((certs, pair))
}

fn delta_n_deriv_float(scheme: &ChebyshevScheme, z: Complex64) -> Result<Complex64> {
    let n = scheme.n();
    let d = scheme.d_mid();
    let m = DMatrix::from_fn(n, n, |i, j| {
        Complex64::new(d[(i, j)], 0.0) - if i == j { z } else { Complex64::ZERO }
    });
    let lu = m.lu();
    let w1 = lu
        .solve(&DMatrix::from_fn(n, 1, |i, _| {
            Complex64::new(scheme.d_one().entry(i).re.mid(), 0.0)
        }))
        .ok_or(Error::NumericallySingular)?;
    let w2 = lu.solve(&w1).ok_or(Error::NumericallySingular)?;
    Ok(Complex64::ONE + scheme.alpha().mid() * w2[(n - 1, 0)])
}
