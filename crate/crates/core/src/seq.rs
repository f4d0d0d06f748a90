//! Truncated bivariate Taylor-coefficient sequences, the l1 norm, the Cauchy
//! convolution, projections, and the diagonal multiplier operators.
//!
//! Coefficients are indexed by beta = (beta1, beta2) and stored in total
//! degree order with lexicographic tie-breaking inside a degree: degree s
//! occupies positions s(s+1)/2 .. s(s+1)/2 + s, ordered by ascending beta1.
//! This index map is the single source of truth for every matrix block and
//! CSV row in the crate.

use std::io::{BufRead, Write};
use std::sync::Arc;

use crate::cheb::ChebyshevScheme;
use crate::error::{Error, Result};
use crate::interval::{ComplexRect, RealInterval};
use crate::ProblemKind;

/// A bivariate Taylor index.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Beta(pub u32, pub u32);

impl Beta {
    pub fn deg(&self) -> u32 {
        self.0 + self.1
    }

    /// (beta2, beta1); the conjugate-symmetric partner.
    pub fn swap(&self) -> Beta {
        Beta(self.1, self.0)
    }

    pub fn checked_sub(&self, o: &Beta) -> Option<Beta> {
        if self.0 >= o.0 && self.1 >= o.1 {
            Some(Beta(self.0 - o.0, self.1 - o.1))
        } else {
            None
        }
    }
}

/// Number of indices with total degree at most `n`.
pub fn tri_len(n: u32) -> usize {
    ((n as usize + 1) * (n as usize + 2)) / 2
}

/// Position of `beta` in degree order.
pub fn index_of(beta: Beta) -> usize {
    let s = beta.deg() as usize;
    s * (s + 1) / 2 + beta.0 as usize
}

/// Inverse of [`index_of`].
pub fn beta_at(i: usize) -> Beta {
    let mut s = 0usize;
    while (s + 1) * (s + 2) / 2 <= i {
        s += 1;
    }
    let b1 = i - s * (s + 1) / 2;
    Beta(b1 as u32, (s - b1) as u32)
}

/// All indices of total degree exactly `s`, in storage order.
pub fn degree_indices(s: u32) -> impl Iterator<Item = Beta> {
    (0..=s).map(move |b1| Beta(b1, s - b1))
}

/// `beta1 lambda_plus + beta2 conj(lambda_plus)` for a conjugate pair.
pub fn lam_dot(lambda_plus: &ComplexRect, beta: Beta) -> ComplexRect {
    let re = lambda_plus.re.scale(f64::from(beta.deg()));
    let q = f64::from(beta.0) - f64::from(beta.1);
    let im = lambda_plus.im.scale(q);
    ComplexRect::new(re, im)
}

/// Which part [`TaylorSeq2::project`] keeps.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Part {
    Head,
    Tail,
}

/// A truncated element of the bivariate sequence space: coefficients for all
/// |beta| <= trunc, implicitly zero beyond.
#[derive(Clone, Debug)]
pub struct TaylorSeq2 {
    trunc: u32,
    coeffs: Vec<ComplexRect>,
}

impl TaylorSeq2 {
    pub fn zeros(trunc: u32) -> Self {
        Self {
            trunc,
            coeffs: vec![ComplexRect::ZERO; tri_len(trunc)],
        }
    }

    pub fn from_coeffs(trunc: u32, coeffs: Vec<ComplexRect>) -> Self {
        assert_eq!(coeffs.len(), tri_len(trunc));
        Self { trunc, coeffs }
    }

    pub fn trunc(&self) -> u32 {
        self.trunc
    }

    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Coefficient at `beta`; zero beyond the truncation degree.
    pub fn get(&self, beta: Beta) -> ComplexRect {
        if beta.deg() > self.trunc {
            ComplexRect::ZERO
        } else {
            self.coeffs[index_of(beta)]
        }
    }

    pub fn set(&mut self, beta: Beta, v: ComplexRect) {
        assert!(beta.deg() <= self.trunc, "index beyond truncation");
        self.coeffs[index_of(beta)] = v;
    }

    pub fn coeffs(&self) -> &[ComplexRect] {
        &self.coeffs
    }

    pub fn coeffs_mut(&mut self) -> &mut [ComplexRect] {
        &mut self.coeffs
    }

    /// Rigorous enclosure of sum_beta |x_beta|.
    pub fn ell1_norm(&self) -> RealInterval {
        let mut lo = 0.0f64;
        for c in &self.coeffs {
            lo += c.mag_lower();
        }
        // the floating sum of nonnegative lower bounds overestimates by at
        // most a (1 + 2k eps) factor, deflate symmetrically
        let k = self.coeffs.len() as f64;
        let lo = (lo * (1.0 - 2.0 * k * f64::EPSILON)).max(0.0);
        let hi = crate::linalg::sum_upper(self.coeffs.iter().map(|c| c.mag_upper()));
        RealInterval::new(lo.min(hi), hi).expect("lower <= upper")
    }

    /// Upper bound on the l1 norm.
    pub fn ell1_upper(&self) -> f64 {
        self.ell1_norm().hi()
    }

    /// Keep |beta| <= n (head) or |beta| > n (tail); head + tail = self.
    pub fn project(&self, n: u32, part: Part) -> TaylorSeq2 {
        let mut out = TaylorSeq2::zeros(self.trunc);
        for (i, c) in self.coeffs.iter().enumerate() {
            let keep = match part {
                Part::Head => beta_at(i).deg() <= n,
                Part::Tail => beta_at(i).deg() > n,
            };
            if keep {
                out.coeffs[i] = *c;
            }
        }
        out
    }

    /// Cauchy convolution `(x * y)_beta = sum_{g + d = beta} x_g y_d`,
    /// truncated at `out_trunc`.
    pub fn conv(&self, other: &TaylorSeq2, out_trunc: u32) -> TaylorSeq2 {
        let mut out = TaylorSeq2::zeros(out_trunc);
        for (i, out_c) in out.coeffs.iter_mut().enumerate() {
            let b = beta_at(i);
            let mut acc = ComplexRect::ZERO;
            for g1 in 0..=b.0 {
                for g2 in 0..=b.1 {
                    let g = Beta(g1, g2);
                    let d = Beta(b.0 - g1, b.1 - g2);
                    if g.deg() > self.trunc || d.deg() > other.trunc {
                        continue;
                    }
                    acc = acc.add(&self.coeffs[index_of(g)].mul(&other.coeffs[index_of(d)]));
                }
            }
            *out_c = acc;
        }
        out
    }

    /// Entrywise application of a diagonal multiplier table.
    pub fn apply_multiplier(&self, m: &MultiplierTable) -> TaylorSeq2 {
        assert!(m.maxdeg >= self.trunc, "multiplier table too short");
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .map(|(i, c)| c.mul(&m.values[i]))
            .collect();
        TaylorSeq2 {
            trunc: self.trunc,
            coeffs,
        }
    }

    /// Write the coefficients as CSV: `beta1,beta2,re_lo,re_hi,im_lo,im_hi`,
    /// one row per stored index, header included. Endpoints are written in
    /// shortest round-trip form, so import reproduces the values bit-exactly.
    pub fn write_csv<W: Write>(&self, mut w: W) -> Result<()> {
        writeln!(w, "beta1,beta2,re_lo,re_hi,im_lo,im_hi")?;
        for (i, c) in self.coeffs.iter().enumerate() {
            let b = beta_at(i);
            writeln!(
                w,
                "{},{},{:?},{:?},{:?},{:?}",
                b.0,
                b.1,
                c.re.lo(),
                c.re.hi(),
                c.im.lo(),
                c.im.hi()
            )?;
        }
        Ok(())
    }

    pub fn write_csv_file(&self, path: &std::path::Path) -> Result<()> {
        let mut f = std::io::BufWriter::new(std::fs::File::create(path)?);
        self.write_csv(&mut f)
    }

    /// The exact CSV bytes; also the canonical input of the coefficient hash.
    pub fn csv_bytes(&self) -> Vec<u8> {
        let mut buf = Vec::new();
        self.write_csv(&mut buf).expect("in-memory write");
        buf
    }

    /// Parse the CSV written by [`TaylorSeq2::write_csv`]. Rows may arrive in
    /// any order but must cover every index up to a triangular count.
    pub fn read_csv<R: BufRead>(r: R) -> Result<TaylorSeq2> {
        let mut lines = r.lines();
        let header = lines
            .next()
            .ok_or_else(|| Error::Parse("empty file".into()))??;
        if header.trim() != "beta1,beta2,re_lo,re_hi,im_lo,im_hi" {
            return Err(Error::Parse(format!("unexpected header: {header}")));
        }
        let mut rows: Vec<(Beta, ComplexRect)> = Vec::new();
        for line in lines {
            let line = line?;
            if line.trim().is_empty() {
                continue;
            }
            let parts: Vec<&str> = line.split(',').collect();
            if parts.len() != 6 {
                return Err(Error::Parse(format!("expected 6 columns: {line}")));
            }
            let b1: u32 = parts[0].trim().parse().map_err(|_| bad(&line))?;
            let b2: u32 = parts[1].trim().parse().map_err(|_| bad(&line))?;
            let nums: Vec<f64> = parts[2..]
                .iter()
                .map(|s| s.trim().parse::<f64>().map_err(|_| bad(&line)))
                .collect::<Result<_>>()?;
            let c = ComplexRect::new(
                RealInterval::new(nums[0], nums[1])
                    .map_err(|_| Error::Parse(format!("re endpoints inverted: {line}")))?,
                RealInterval::new(nums[2], nums[3])
                    .map_err(|_| Error::Parse(format!("im endpoints inverted: {line}")))?,
            );
            rows.push((Beta(b1, b2), c));
        }
        let count = rows.len();
        let trunc = (0..).find(|&t| tri_len(t) >= count).unwrap();
        if tri_len(trunc) != count {
            return Err(Error::Parse(format!(
                "{count} rows is not a triangular count"
            )));
        }
        let mut seen = vec![false; count];
        let mut out = TaylorSeq2::zeros(trunc);
        for (b, c) in rows {
            if b.deg() > trunc {
                return Err(Error::Parse(format!(
                    "index ({}, {}) out of range",
                    b.0, b.1
                )));
            }
            let i = index_of(b);
            if seen[i] {
                return Err(Error::Parse(format!("duplicate index ({}, {})", b.0, b.1)));
            }
            seen[i] = true;
            out.coeffs[i] = c;
        }
        if !seen.iter().all(|&s| s) {
            return Err(Error::Parse("missing indices".into()));
        }
        Ok(out)
    }

    pub fn read_csv_file(path: &std::path::Path) -> Result<TaylorSeq2> {
        let f = std::io::BufReader::new(std::fs::File::open(path)?);
        Self::read_csv(f)
    }
}

fn bad(line: &str) -> Error {
    Error::Parse(format!("malformed row: {line}"))
}

/// The diagonal multiplier at each index: `e^{-<lambda, beta>}` for the delay
/// equation, `((D - <lambda, beta> I)^{-1} D 1)_n` for the pseudospectral
/// system.
#[derive(Clone, Debug)]
pub struct MultiplierTable {
    kind: ProblemKind,
    maxdeg: u32,
    values: Vec<ComplexRect>,
}

impl MultiplierTable {
    pub fn kind(&self) -> ProblemKind {
        self.kind
    }

    pub fn maxdeg(&self) -> u32 {
        self.maxdeg
    }

    pub fn value(&self, beta: Beta) -> ComplexRect {
        self.values[index_of(beta)]
    }

    pub fn values(&self) -> &[ComplexRect] {
        &self.values
    }

    /// Largest magnitude upper bound in the table.
    pub fn mag_upper_max(&self) -> f64 {
        self.values
            .iter()
            .map(|v| v.mag_upper())
            .fold(0.0, f64::max)
    }
}

/// Build the multiplier table for all |beta| <= maxdeg.
///
/// For the pseudospectral kind every index requires a verified resolvent
/// solve at `<lambda, beta>`; a solve that cannot be certified reports the
/// offending index, since it voids the well-definedness of the zero map.
pub fn multipliers(
    kind: ProblemKind,
    lambda_plus: &ComplexRect,
    scheme: Option<&Arc<ChebyshevScheme>>,
    maxdeg: u32,
) -> Result<MultiplierTable> {
    let mut values = Vec::with_capacity(tri_len(maxdeg));
    for s in 0..=maxdeg {
        for b in degree_indices(s) {
            let z = lam_dot(lambda_plus, b);
            let v = match kind {
                ProblemKind::Dde => z.neg().exp()?,
                ProblemKind::Psa => {
                    let scheme = scheme.expect("pseudospectral multipliers need a scheme");
                    *scheme
                        .blowup_vector(&z)
                        .map_err(|e| match e {
                            Error::NotVerifiablyInvertible { .. } => Error::ResonantIndex(b.0, b.1),
                            other => other,
                        })?
                        .last()
                }
            };
            values.push(v);
        }
    }
    Ok(MultiplierTable {
        kind,
        maxdeg,
        values,
    })
}
