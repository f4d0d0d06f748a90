//! The parametrization-method core: the coefficient recursion, the
//! zero-finding maps and their derivative blocks, manifold evaluation, and a
//! vector-valued cross-check oracle.
//!
//! Both problems reduce to the same shape of scalar zero-finding map on
//! bivariate coefficient sequences:
//!
//! ```text
//! F(x)_beta = x_beta                                           beta = 0
//!             x_beta - xi_beta                                |beta| = 1
//!             Delta(<lambda, beta>) x_beta + alpha (x * r(x))_beta   else
//! ```
//!
//! where `r` multiplies coefficient beta by `e^{-<lambda, beta>}` (delay
//! equation) or by the last component of the resolvent blow-up vector
//! (pseudospectral system). Setting `F(x) = 0` and solving degree by degree
//! gives the recursion `x_beta = -alpha Delta(<lambda, beta>)^{-1}
//! (x * r(x))_beta`, which is well-founded because the convolution at degree
//! s only consumes degrees 1 .. s-1.

use std::sync::Arc;

use nalgebra::DMatrix;
use num_complex::Complex64;

use crate::cheb::ChebyshevScheme;
use crate::error::{Error, Result};
use crate::interval::{ComplexRect, RealInterval};
use crate::linalg::{float_inverse, IntervalMatrix, IntervalVector, VerifiedSolver};
use crate::roots::{RootCertificate, SpectralPair};
use crate::seq::{
    degree_indices, index_of, lam_dot, multipliers, tri_len, Beta, MultiplierTable, TaylorSeq2,
};
use crate::ProblemKind;

/// Everything needed to evaluate one problem's zero-finding map.
pub struct ProblemData {
    kind: ProblemKind,
    alpha: RealInterval,
    lambda: SpectralPair,
    mult: MultiplierTable,
    xi: (ComplexRect, ComplexRect),
    scheme: Option<Arc<ChebyshevScheme>>,
}

impl ProblemData {
    /// Assemble the problem data; builds the multiplier table up to `maxdeg`.
    ///
    /// The first-order data is `xi_(1,0) = xi_(0,1) = xi_scale`, a real
    /// scale; with conjugate eigenvalues this makes the computed coefficients
    /// conjugate-symmetric and the manifold real on sigma_2 = conj(sigma_1).
    pub fn assemble(
        kind: ProblemKind,
        alpha: RealInterval,
        lambda: SpectralPair,
        scheme: Option<Arc<ChebyshevScheme>>,
        xi_scale: f64,
        maxdeg: u32,
    ) -> Result<Self> {
        assert_eq!(
            lambda.kind(),
            kind,
            "eigenvalue pair belongs to the other problem"
        );
        if kind == ProblemKind::Psa {
            assert!(
                scheme.is_some(),
                "pseudospectral problem data needs the scheme"
            );
        }
        let mult = multipliers(kind, &lambda.plus_rect(), scheme.as_ref(), maxdeg)?;
        let xi = (
            ComplexRect::point(xi_scale, 0.0),
            ComplexRect::point(xi_scale, 0.0),
        );
        Ok(Self {
            kind,
            alpha,
            lambda,
            mult,
            xi,
            scheme,
        })
    }

    pub fn kind(&self) -> ProblemKind {
        self.kind
    }

    pub fn alpha(&self) -> RealInterval {
        self.alpha
    }

    pub fn lambda(&self) -> &SpectralPair {
        &self.lambda
    }

    pub fn mult(&self) -> &MultiplierTable {
        &self.mult
    }

    pub fn xi(&self) -> (ComplexRect, ComplexRect) {
        self.xi
    }

    pub fn xi_at(&self, beta: Beta) -> ComplexRect {
        match beta {
            Beta(1, 0) => self.xi.0,
            Beta(0, 1) => self.xi.1,
            _ => ComplexRect::ZERO,
        }
    }

    pub fn scheme(&self) -> Option<&Arc<ChebyshevScheme>> {
        self.scheme.as_ref()
    }

    pub fn lam_dot(&self, beta: Beta) -> ComplexRect {
        lam_dot(&self.lambda.plus_rect(), beta)
    }

    /// Enclosure of the characteristic value at `<lambda, beta>`.
    pub fn delta_at(&self, beta: Beta) -> Result<ComplexRect> {
        let z = self.lam_dot(beta);
        match self.kind {
            ProblemKind::Dde => {
                let e = z.neg().exp()?.scale(&self.alpha);
                Ok(z.add(&e))
            }
            ProblemKind::Psa => self
                .scheme
                .as_ref()
                .expect("checked at assembly")
                .delta_n(&z)
                .map_err(|e| match e {
                    Error::NotVerifiablyInvertible { .. } => Error::ResonantIndex(beta.0, beta.1),
                    other => other,
                }),
        }
    }
}

/// Run the coefficient recursion in floating midpoint arithmetic up to total
/// degree `trunc_n`, returning point rectangles.
///
/// Rigor is not needed here: the output is only a candidate zero, and every
/// certified bound later evaluates the exact map on it. The recursion still
/// verifies non-resonance rigorously, since a characteristic enclosure
/// containing zero voids the division.
pub fn recurse_coeffs(p: &ProblemData, trunc_n: u32) -> Result<TaylorSeq2> {
    assert!(
        p.mult.maxdeg() >= trunc_n,
        "multiplier table shorter than the truncation"
    );
    let alpha = p.alpha.mid();
    let mut coeffs = vec![Complex64::ZERO; tri_len(trunc_n)];
    let mult: Vec<Complex64> = p
        .mult
        .values()
        .iter()
        .map(|v| {
            let (re, im) = v.mid();
            Complex64::new(re, im)
        })
        .collect();
    let (xr, xi_) = p.xi.0.mid();
    coeffs[index_of(Beta(1, 0))] = Complex64::new(xr, xi_);
    let (xr, xi_) = p.xi.1.mid();
    coeffs[index_of(Beta(0, 1))] = Complex64::new(xr, xi_);
    for s in 2..=trunc_n {
        for b in degree_indices(s) {
            let delta = p.delta_at(b)?;
            if delta.contains_zero() {
                return Err(Error::ResonantIndex(b.0, b.1));
            }
            let (dr, di) = delta.mid();
            let conv = conv_entry_float(&coeffs, &mult, b);
            coeffs[index_of(b)] = -alpha * conv / Complex64::new(dr, di);
        }
    }
    Ok(TaylorSeq2::from_coeffs(
        trunc_n,
        coeffs
            .iter()
            .map(|z| ComplexRect::point(z.re, z.im))
            .collect(),
    ))
}

/// (x * r(x))_beta in floats, using only strictly lower degrees.
fn conv_entry_float(coeffs: &[Complex64], mult: &[Complex64], b: Beta) -> Complex64 {
    let mut acc = Complex64::ZERO;
    let s = b.deg();
    for g1 in 0..=b.0 {
        for g2 in 0..=b.1 {
            let g = Beta(g1, g2);
            if g.deg() == 0 || g.deg() == s {
                continue; // x_0 = 0 removes both extreme terms
            }
            let d = Beta(b.0 - g1, b.1 - g2);
            acc += coeffs[index_of(g)] * mult[index_of(d)] * coeffs[index_of(d)];
        }
    }
    acc
}

/// Interval-arithmetic variant of the recursion; used by the vector oracle
/// equivalence checks, where both routes must enclose the same exact object.
pub fn recurse_coeffs_interval(p: &ProblemData, trunc_n: u32) -> Result<TaylorSeq2> {
    assert!(p.mult.maxdeg() >= trunc_n);
    let mut x = TaylorSeq2::zeros(trunc_n);
    x.set(Beta(1, 0), p.xi.0);
    x.set(Beta(0, 1), p.xi.1);
    let neg_alpha = ComplexRect::from_real(p.alpha.neg());
    for s in 2..=trunc_n {
        for b in degree_indices(s) {
            let delta = p.delta_at(b)?;
            if delta.contains_zero() {
                return Err(Error::ResonantIndex(b.0, b.1));
            }
            let mut acc = ComplexRect::ZERO;
            for g1 in 0..=b.0 {
                for g2 in 0..=b.1 {
                    let g = Beta(g1, g2);
                    if g.deg() == 0 || g.deg() == s {
                        continue;
                    }
                    let d = Beta(b.0 - g1, b.1 - g2);
                    acc = acc.add(&x.get(g).mul(&p.mult.value(d)).mul(&x.get(d)));
                }
            }
            x.set(b, neg_alpha.mul(&acc).div(&delta)?);
        }
    }
    Ok(x)
}

/// Interval evaluation of the zero-finding map on `x`, through total degree
/// `out_trunc` (at most twice the truncation of `x`; beyond the truncation
/// only the convolution term survives).
pub fn eval_f(p: &ProblemData, x: &TaylorSeq2, out_trunc: u32) -> Result<TaylorSeq2> {
    assert!(
        out_trunc <= 2 * x.trunc(),
        "quadratic map reaches at most twice the degree"
    );
    assert!(p.mult.maxdeg() >= x.trunc());
    let rx = x.apply_multiplier(&p.mult);
    let conv = x.conv(&rx, out_trunc);
    let alpha = ComplexRect::from_real(p.alpha);
    let mut out = TaylorSeq2::zeros(out_trunc);
    for s in 0..=out_trunc {
        for b in degree_indices(s) {
            let v = if s == 0 {
                x.get(b)
            } else if s == 1 {
                x.get(b).sub(&p.xi_at(b))
            } else if s <= x.trunc() {
                p.delta_at(b)?.mul(&x.get(b)).add(&alpha.mul(&conv.get(b)))
            } else {
                alpha.mul(&conv.get(b))
            };
            out.set(b, v);
        }
    }
    Ok(out)
}

/// Interval enclosure of the head block `pi_N DF(xhat) pi_N` in degree order:
/// identity rows for |beta| <= 1 and
///
/// ```text
/// (DF(x) v)_beta = Delta_beta v_beta + alpha (r(x) * v + r(v) * x)_beta
/// ```
///
/// for |beta| >= 2. The column at index gamma is the image of the unit
/// sequence delta_gamma, giving entry `alpha (m_{beta-gamma} x_{beta-gamma} +
/// m_gamma x_{beta-gamma})` plus the diagonal characteristic term.
pub fn assemble_df_block(p: &ProblemData, xhat: &TaylorSeq2, n: u32) -> Result<IntervalMatrix> {
    assert!(xhat.trunc() <= n, "block must cover the full truncation");
    assert!(p.mult.maxdeg() >= n);
    let len = tri_len(n);
    let alpha = ComplexRect::from_real(p.alpha);
    let mut m = IntervalMatrix::zeros(len, len);
    for row in 0..len {
        let b = crate::seq::beta_at(row);
        if b.deg() <= 1 {
            *m.entry_mut(row, row) = ComplexRect::ONE;
            continue;
        }
        *m.entry_mut(row, row) = p.delta_at(b)?;
        for col in 0..len {
            let g = crate::seq::beta_at(col);
            let Some(d) = b.checked_sub(&g) else { continue };
            let xd = xhat.get(d);
            let term = p.mult.value(d).mul(&xd).add(&p.mult.value(g).mul(&xd));
            let add = alpha.mul(&term);
            *m.entry_mut(row, col) = m.entry(row, col).add(&add);
        }
    }
    Ok(m)
}

/// The shared numerical guess and its finite derivative blocks for one
/// problem.
pub struct ApproxSolution {
    xhat: TaylorSeq2,
    n_trunc: u32,
    adag_block: IntervalMatrix,
    abar_block: DMatrix<Complex64>,
}

impl ApproxSolution {
    /// Build the blocks at a given guess (shared between the two problems).
    pub fn build(p: &ProblemData, xhat: TaylorSeq2, n_trunc: u32) -> Result<Self> {
        assert_eq!(xhat.trunc(), n_trunc);
        let adag_block = assemble_df_block(p, &xhat, n_trunc)?;
        let abar_block = float_inverse(&adag_block.mid())?;
        Ok(Self {
            xhat,
            n_trunc,
            adag_block,
            abar_block,
        })
    }

    /// Assemble from explicit blocks; the bound routines are defined for any
    /// such triple, which the hand-computable unit cases rely on.
    pub fn from_parts(
        xhat: TaylorSeq2,
        adag_block: IntervalMatrix,
        abar_block: DMatrix<Complex64>,
    ) -> Self {
        let n_trunc = xhat.trunc();
        Self {
            xhat,
            n_trunc,
            adag_block,
            abar_block,
        }
    }

    pub fn xhat(&self) -> &TaylorSeq2 {
        &self.xhat
    }

    pub fn n_trunc(&self) -> u32 {
        self.n_trunc
    }

    /// Interval enclosure of the exact head block of DF(xhat).
    pub fn adag_block(&self) -> &IntervalMatrix {
        &self.adag_block
    }

    /// Floating approximate inverse of the midpoint of the head block.
    pub fn abar_block(&self) -> &DMatrix<Complex64> {
        &self.abar_block
    }
}

/// Evaluate the delay-equation manifold at parameter `sigma` as a history
/// value at `theta` in [-1, 0]: sum of `x_beta e^{<lambda, beta> theta}
/// sigma^beta`. Floating arithmetic; meaningful for |sigma_i| < 1.
pub fn eval_manifold_dde(
    p: &ProblemData,
    x: &TaylorSeq2,
    sigma: (Complex64, Complex64),
    theta: f64,
) -> Complex64 {
    let (lr, li) = p.lambda.plus_rect().mid();
    let lam = Complex64::new(lr, li);
    let mut acc = Complex64::ZERO;
    for i in 0..x.len() {
        let b = crate::seq::beta_at(i);
        let (cr, ci) = x.coeffs()[i].mid();
        let z = lam * f64::from(b.0) + lam.conj() * f64::from(b.1);
        acc += Complex64::new(cr, ci) * (z * theta).exp() * sigma.0.powu(b.0) * sigma.1.powu(b.1);
    }
    acc
}

/// Evaluate the pseudospectral manifold at `sigma` as an (n+1)-vector:
/// sum of `x_beta (1, (D - <lambda, beta> I)^{-1} D 1) sigma^beta`.
pub fn eval_manifold_psa(
    p: &ProblemData,
    x: &TaylorSeq2,
    sigma: (Complex64, Complex64),
) -> Result<Vec<Complex64>> {
    let scheme = p
        .scheme
        .as_ref()
        .expect("pseudospectral data carries the scheme");
    let n = scheme.n();
    let (lr, li) = p.lambda.plus_rect().mid();
    let lam = Complex64::new(lr, li);
    let mut acc = vec![Complex64::ZERO; n + 1];
    for i in 0..x.len() {
        let b = crate::seq::beta_at(i);
        let (cr, ci) = x.coeffs()[i].mid();
        let c = Complex64::new(cr, ci) * sigma.0.powu(b.0) * sigma.1.powu(b.1);
        if c == Complex64::ZERO {
            continue;
        }
        let z = lam * f64::from(b.0) + lam.conj() * f64::from(b.1);
        let blow = scheme.blowup_float(z)?;
        acc[0] += c;
        for k in 0..n {
            acc[k + 1] += c * blow[k];
        }
    }
    Ok(acc)
}

/// Solve the full (n+1)-dimensional homological equations directly, without
/// the scalar reduction: for each beta with |beta| >= 2,
///
/// ```text
/// (<lambda, beta> I - A_n) V_beta = (G_beta, 0, ..., 0)
/// ```
///
/// with `G_beta = -alpha sum_{g+d=beta} (V_g)_n (V_d)_0`, seeded by
/// `V_0 = 0` and the scaled eigenvectors at |beta| = 1. Every solve is
/// verified, and each `<lambda, beta>` is first checked against the census
/// enclosures. This is the independent cross-check for the scalar route:
/// `V_beta` must overlap `x_beta (1, blowup(<lambda, beta>))` componentwise.
pub fn vector_homological_oracle(
    scheme: &ChebyshevScheme,
    p: &ProblemData,
    census: &[RootCertificate],
    maxdeg: u32,
) -> Result<Vec<IntervalVector>> {
    assert_eq!(
        p.kind,
        ProblemKind::Psa,
        "the oracle targets the discretized system"
    );
    let n = scheme.n();
    let a_int = scheme.assemble_an_interval();
    let neg_alpha = ComplexRect::from_real(p.alpha.neg());
    let mut out: Vec<IntervalVector> = Vec::with_capacity(tri_len(maxdeg));
    out.push(IntervalVector::zeros(n + 1)); // beta = 0
    for s in 1..=maxdeg {
        for b in degree_indices(s) {
            let z = p.lam_dot(b);
            if s == 1 {
                // scaled eigenvector (1, blowup)
                let blow = scheme.blowup_vector(&z)?;
                let xi = p.xi_at(b);
                let mut v = Vec::with_capacity(n + 1);
                v.push(xi);
                for k in 0..n {
                    v.push(xi.mul(blow.entry(k)));
                }
                out.push(IntervalVector::new(v));
                continue;
            }
            // non-resonance precheck against the validated spectrum
            for cert in census {
                if z.intersects(&cert.enclosure) {
                    return Err(Error::ResonantIndex(b.0, b.1));
                }
            }
            // right-hand side from lower-order vectors
            let mut g = ComplexRect::ZERO;
            for g1 in 0..=b.0 {
                for g2 in 0..=b.1 {
                    let gb = Beta(g1, g2);
                    let db = Beta(b.0 - g1, b.1 - g2);
                    if gb.deg() == 0 || db.deg() == 0 {
                        continue; // V_0 = 0
                    }
                    let vg = &out[index_of(gb)];
                    let vd = &out[index_of(db)];
                    g = g.add(&vg.entry(n).mul(vd.entry(0)));
                }
            }
            g = neg_alpha.mul(&g);
            // (z I - A) V = rhs  <=>  (A - z I) V = -rhs
            let mut rhs = vec![ComplexRect::ZERO; n + 1];
            rhs[0] = g.neg();
            let solver = VerifiedSolver::new(&a_int.shift_diag(&z))?;
            out.push(solver.solve(&IntervalVector::new(rhs))?);
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cheb::build_scheme;
    use crate::roots::census_psa;

    fn psa_problem(n: usize, trunc: u32, xi: f64) -> (Arc<ChebyshevScheme>, ProblemData) {
        let alpha = RealInterval::point(2.0);
        let scheme = Arc::new(build_scheme(n, alpha));
        let (_, pair) = census_psa(&scheme).unwrap();
        let p = ProblemData::assemble(
            ProblemKind::Psa,
            alpha,
            pair,
            Some(scheme.clone()),
            xi,
            trunc,
        )
        .unwrap();
        (scheme, p)
    }

    #[test]
    fn recursion_fixes_low_order_data() {
        let (_, p) = psa_problem(4, 6, 0.1);
        let x = recurse_coeffs(&p, 6).unwrap();
        assert!(x.get(Beta(0, 0)).contains(0.0, 0.0));
        assert!(x.get(Beta(1, 0)).contains(0.1, 0.0));
        assert!(x.get(Beta(0, 1)).contains(0.1, 0.0));
    }

    #[test]
    fn degree_two_coefficient_matches_hand_expansion() {
        // x_(1,1) = -alpha Delta(<lambda,(1,1)>)^{-1} xi^2 (m_(0,1) + m_(1,0))
        let (_, p) = psa_problem(4, 4, 0.25);
        let x = recurse_coeffs(&p, 4).unwrap();
        let delta = p.delta_at(Beta(1, 1)).unwrap();
        let (dr, di) = delta.mid();
        let (m10r, m10i) = p.mult().value(Beta(1, 0)).mid();
        let (m01r, m01i) = p.mult().value(Beta(0, 1)).mid();
        let expect = -2.0 * 0.0625 * (Complex64::new(m10r, m10i) + Complex64::new(m01r, m01i))
            / Complex64::new(dr, di);
        let (gr, gi) = x.get(Beta(1, 1)).mid();
        assert!((Complex64::new(gr, gi) - expect).norm() < 1e-14);
    }

    #[test]
    fn conjugate_symmetry_of_coefficients() {
        let (_, p) = psa_problem(5, 8, 0.3);
        let x = recurse_coeffs(&p, 8).unwrap();
        for i in 0..x.len() {
            let b = crate::seq::beta_at(i);
            let (ar, ai) = x.get(b).mid();
            let (br, bi) = x.get(b.swap()).mid();
            assert!(
                (ar - br).abs() <= 1e-14 && (ai + bi).abs() <= 1e-14,
                "beta ({},{})",
                b.0,
                b.1
            );
        }
    }

    #[test]
    fn eval_f_at_zero_is_minus_xi() {
        let (_, p) = psa_problem(3, 4, 0.2);
        let zero = TaylorSeq2::zeros(4);
        let f = eval_f(&p, &zero, 4).unwrap();
        for i in 0..f.len() {
            let b = crate::seq::beta_at(i);
            if b == Beta(1, 0) || b == Beta(0, 1) {
                assert!(f.get(b).contains(-0.2, 0.0));
            } else {
                assert!(f.get(b).contains(0.0, 0.0));
            }
        }
    }

    #[test]
    fn recursion_residual_is_tiny() {
        let (_, p) = psa_problem(6, 10, 0.2);
        let x = recurse_coeffs(&p, 10).unwrap();
        let f = eval_f(&p, &x, 10).unwrap();
        for i in 0..f.len() {
            assert!(
                f.coeffs()[i].mag_upper() <= 1e-12,
                "residual at index {i}: {}",
                f.coeffs()[i].mag_upper()
            );
        }
    }

    #[test]
    fn triangularity_of_f() {
        // F(x)_beta depends only on degrees <= |beta|: changing higher-order
        // coefficients must not move lower-order residuals
        let (_, p) = psa_problem(3, 6, 0.15);
        let x = recurse_coeffs(&p, 6).unwrap();
        let mut y = x.clone();
        y.set(Beta(3, 3), ComplexRect::point(0.123, -0.456));
        let fx = eval_f(&p, &x, 6).unwrap();
        let fy = eval_f(&p, &y, 6).unwrap();
        for i in 0..tri_len(5) {
            let (ar, ai) = fx.coeffs()[i].mid();
            let (br, bi) = fy.coeffs()[i].mid();
            assert!((ar - br).abs() < 1e-15 && (ai - bi).abs() < 1e-15);
        }
    }

    #[test]
    fn df_block_at_zero_is_diagonal() {
        let (_, p) = psa_problem(3, 4, 0.2);
        let zero = TaylorSeq2::zeros(4);
        let m = assemble_df_block(&p, &zero, 4).unwrap();
        for i in 0..m.rows() {
            for j in 0..m.cols() {
                let b = crate::seq::beta_at(i);
                if i == j {
                    if b.deg() <= 1 {
                        assert!(m.entry(i, j).contains(1.0, 0.0));
                    } else {
                        let d = p.delta_at(b).unwrap();
                        assert!(m.entry(i, j).intersects(&d));
                    }
                } else {
                    assert!(m.entry(i, j).contains(0.0, 0.0));
                }
            }
        }
    }

    #[test]
    fn df_block_euler_identity() {
        // the quadratic part is 2-homogeneous: DF(x) x = (linear rows) +
        // Delta x + 2 alpha (x * r(x)), so DF(x) x - F(x) picks up exactly
        // one extra convolution and the order-one data
        let (_, p) = psa_problem(4, 6, 0.2);
        let x = recurse_coeffs(&p, 6).unwrap();
        let m = assemble_df_block(&p, &x, 6).unwrap();
        let xv = IntervalVector::new(x.coeffs().to_vec());
        let dfx = m.mat_vec(&xv).unwrap();
        let f = eval_f(&p, &x, 6).unwrap();
        let rx = x.apply_multiplier(p.mult());
        let conv = x.conv(&rx, 6);
        let alpha = ComplexRect::from_real(p.alpha());
        for i in 0..tri_len(6) {
            let b = crate::seq::beta_at(i);
            let expect = match b.deg() {
                0 => ComplexRect::ZERO,
                1 => x.get(b),
                _ => f.get(b).add(&alpha.mul(&conv.get(b))),
            };
            assert!(
                dfx.entry(i).intersects(&expect),
                "row {i}: {} vs {}",
                dfx.entry(i),
                expect
            );
        }
    }

    #[test]
    fn manifold_evaluation_cases() {
        let (_, p) = psa_problem(4, 6, 0.2);
        let x = recurse_coeffs(&p, 6).unwrap();
        // sigma = 0 lands on the equilibrium
        let v = eval_manifold_psa(&p, &x, (Complex64::ZERO, Complex64::ZERO)).unwrap();
        assert!(v.iter().all(|z| z.norm() < 1e-15));
        // on the reality slice sigma_2 = conj(sigma_1) the vector is real
        let s = Complex64::new(0.3, 0.2);
        let v = eval_manifold_psa(&p, &x, (s, s.conj())).unwrap();
        assert!(
            v.iter().all(|z| z.im.abs() < 1e-10),
            "imaginary residue {v:?}"
        );
    }

    #[test]
    fn dde_manifold_tangent_at_first_order() {
        let alpha = RealInterval::point(2.0);
        let pair = crate::roots::find_dde_pair(alpha).unwrap();
        let p = ProblemData::assemble(ProblemKind::Dde, alpha, pair, None, 0.2, 4).unwrap();
        let mut x = TaylorSeq2::zeros(4);
        x.set(Beta(1, 0), p.xi().0);
        x.set(Beta(0, 1), p.xi().1);
        let s = Complex64::new(0.1, 0.05);
        let got = eval_manifold_dde(&p, &x, (s, s.conj()), -0.5);
        let (lr, li) = p.lambda().plus_rect().mid();
        let lam = Complex64::new(lr, li);
        let expect = 0.2 * s * (lam * -0.5).exp() + 0.2 * s.conj() * (lam.conj() * -0.5).exp();
        assert!((got - expect).norm() < 1e-12);
        assert!(expect.im.abs() < 1e-12);
    }

    #[test]
    fn oracle_matches_scalar_reduction_small() {
        let (scheme, p) = psa_problem(3, 4, 0.2);
        let (census, _) = census_psa(&scheme).unwrap();
        let oracle = vector_homological_oracle(&scheme, &p, &census, 3).unwrap();
        let x = recurse_coeffs_interval(&p, 3).unwrap();
        for i in 0..tri_len(3) {
            let b = crate::seq::beta_at(i);
            let xb = x.get(b);
            let pred_first = xb;
            assert!(
                oracle[i].entry(0).intersects(&pred_first),
                "first component at ({}, {})",
                b.0,
                b.1
            );
            if b.deg() >= 1 {
                let blow = scheme.blowup_vector(&p.lam_dot(b)).unwrap();
                for k in 0..scheme.n() {
                    let pred = xb.mul(blow.entry(k));
                    assert!(
                        oracle[i].entry(k + 1).intersects(&pred),
                        "component {k} at ({}, {})",
                        b.0,
                        b.1
                    );
                }
            }
        }
    }
}
