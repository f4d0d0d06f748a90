//! Chebyshev-extremal mesh on [-1, 0], the differentiation matrix D, and the
//! discrete characteristic function Delta_n.
//!
//! The mesh is theta_j = (cos(j pi / n) - 1) / 2 for j = 0..n, strictly
//! decreasing from theta_0 = 0 to theta_n = -1 (both pinned exactly). D is
//! the n x n matrix of Lagrange-basis derivatives l_j'(theta_k) for
//! 1 <= j, k <= n, built from the node-difference formulas in interval
//! arithmetic: with barycentric weights w_j = 1 / prod_{m != j}(theta_j -
//! theta_m),
//!
//! ```text
//! l_j'(theta_k) = (w_j / w_k) / (theta_k - theta_j)      (j != k)
//! l_j'(theta_j) = sum_{m != j} 1 / (theta_j - theta_m).
//! ```
//!
//! The last component convention: index n of the reduced vector y corresponds
//! to the node theta_n = -1, so `(v)_n` below is always `v.last()`.

use nalgebra::DMatrix;
use num_complex::Complex64;

use crate::error::Result;
use crate::interval::{ComplexRect, RealInterval};
use crate::linalg::{IntervalMatrix, IntervalVector, VerifiedSolver};

/// The fixed discretization data for one index `n` and one Wright parameter.
#[derive(Clone, Debug)]
pub struct ChebyshevScheme {
    n: usize,
    alpha: RealInterval,
    nodes: Vec<RealInterval>,
    diffs: Vec<RealInterval>,
    w: Vec<RealInterval>,
    d: IntervalMatrix,
    d_one: IntervalVector,
    d_mid: DMatrix<f64>,
    d_one_mid: Vec<f64>,
}

/// Build the scheme: enclosed nodes, interval D, and D applied to the ones
/// vector.
pub fn build_scheme(n: usize, alpha: RealInterval) -> ChebyshevScheme {
    assert!(n >= 1, "discretization index must be at least 1");
    let nodes = chebyshev_nodes(n);
    let diffs = node_differences(n);
    let w = barycentric_weights(&diffs);
    let mut d = IntervalMatrix::zeros(n, n);
    for k in 1..=n {
        for j in 1..=n {
            *d.entry_mut(k - 1, j - 1) = ComplexRect::from_real(lagrange_deriv(&diffs, &w, k, j));
        }
    }
    let ones = IntervalVector::from_real(&vec![1.0; n]);
    let d_one = d.mat_vec(&ones).expect("square by construction");
    let d_mid = DMatrix::from_fn(n, n, |i, j| d.entry(i, j).re.mid());
    let d_one_mid = (0..n).map(|i| d_one.entry(i).re.mid()).collect();
    ChebyshevScheme {
        n,
        alpha,
        nodes,
        diffs,
        w,
        d,
        d_one,
        d_mid,
        d_one_mid,
    }
}

/// Tight enclosure of sin(k pi / denom) for 0 <= k <= denom, folding into
/// [0, pi/2] first so the relative accuracy of the kernel is preserved.
fn sin_frac(k: usize, denom: usize) -> RealInterval {
    let k = k.min(denom - k);
    if k == 0 {
        return RealInterval::ZERO;
    }
    let ratio = RealInterval::point(k as f64)
        .div(&RealInterval::point(denom as f64))
        .expect("denom > 0");
    RealInterval::pi()
        .mul(&ratio)
        .sin()
        .expect("argument below reduction limit")
}

/// theta_j = (cos(j pi / n) - 1)/2 = -sin^2(j pi / (2n)); the sine form keeps
/// full relative accuracy near theta = 0 where the mesh clusters.
fn chebyshev_nodes(n: usize) -> Vec<RealInterval> {
    (0..=n)
        .map(|j| {
            if j == 0 {
                RealInterval::ZERO
            } else if j == n {
                RealInterval::point(-1.0)
            } else {
                sin_frac(j, 2 * n).square().neg()
            }
        })
        .collect()
}

/// Pairwise node differences via the cancellation-free product form
/// theta_j - theta_m = sin((m+j) pi / 2n) * sin((m-j) pi / 2n) for j < m.
fn node_differences(n: usize) -> Vec<RealInterval> {
    let mut diffs = vec![RealInterval::ZERO; (n + 1) * (n + 1)];
    for j in 0..=n {
        for m in 0..=n {
            if j == m {
                continue;
            }
            let (lo, hi) = (j.min(m), j.max(m));
            let v = sin_frac(hi + lo, 2 * n).mul(&sin_frac(hi - lo, 2 * n));
            diffs[j * (n + 1) + m] = if j < m { v } else { v.neg() };
        }
    }
    diffs
}

fn diff_at(diffs: &[RealInterval], n: usize, j: usize, m: usize) -> RealInterval {
    diffs[j * (n + 1) + m]
}

/// Barycentric weights w_j = 1 / prod_{m != j} (theta_j - theta_m).
fn barycentric_weights(diffs: &[RealInterval]) -> Vec<RealInterval> {
    let n1 = (diffs.len() as f64).sqrt() as usize;
    let n = n1 - 1;
    (0..=n)
        .map(|j| {
            let mut p = RealInterval::ONE;
            for m in 0..=n {
                if m != j {
                    p = p.mul(&diff_at(diffs, n, j, m));
                }
            }
            p.recip().expect("distinct nodes")
        })
        .collect()
}

/// l_j'(theta_k) over the full node set, 0 <= j, k <= n.
fn lagrange_deriv(diffs: &[RealInterval], w: &[RealInterval], k: usize, j: usize) -> RealInterval {
    let n = w.len() - 1;
    if j != k {
        w[j].div(&w[k])
            .and_then(|q| q.div(&diff_at(diffs, n, k, j)))
            .expect("distinct nodes")
    } else {
        let mut s = RealInterval::ZERO;
        for m in 0..=n {
            if m != j {
                s = s.add(&diff_at(diffs, n, j, m).recip().expect("distinct nodes"));
            }
        }
        s
    }
}

impl ChebyshevScheme {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn alpha(&self) -> RealInterval {
        self.alpha
    }

    pub fn nodes(&self) -> &[RealInterval] {
        &self.nodes
    }

    pub fn d(&self) -> &IntervalMatrix {
        &self.d
    }

    pub fn d_one(&self) -> &IntervalVector {
        &self.d_one
    }

    pub fn d_mid(&self) -> &DMatrix<f64> {
        &self.d_mid
    }

    /// Enclosure of l_0'(theta_k), k = 1..n; the column of the full
    /// differentiation rule that the reduced matrix D leaves out.
    pub fn ell0_prime(&self) -> Vec<RealInterval> {
        (1..=self.n)
            .map(|k| lagrange_deriv(&self.diffs, &self.w, k, 0))
            .collect()
    }

    /// A verified solver for (D - z I); success certifies invertibility.
    pub fn resolvent(&self, z: &ComplexRect) -> Result<VerifiedSolver> {
        VerifiedSolver::new(&self.d.shift_diag(z))
    }

    /// Enclosure of (D - z I)^{-1} D 1.
    pub fn blowup_vector(&self, z: &ComplexRect) -> Result<IntervalVector> {
        self.resolvent(z)?.solve(&self.d_one)
    }

    /// Enclosure of Delta_n(z) = z + alpha ((D - z I)^{-1} D 1)_n.
    pub fn delta_n(&self, z: &ComplexRect) -> Result<ComplexRect> {
        let v = self.blowup_vector(z)?;
        Ok(z.add(&v.last().scale(&self.alpha)))
    }

    /// Enclosures of Delta_n'(z) and Delta_n''(z):
    ///
    /// ```text
    /// Delta_n'(z)  = 1 + alpha ((D - z I)^{-2} D 1)_n
    /// Delta_n''(z) = 2 alpha ((D - z I)^{-3} D 1)_n
    /// ```
    ///
    /// computed by three chained solves against the same factorization.
    pub fn delta_n_derivs(&self, z: &ComplexRect) -> Result<(ComplexRect, ComplexRect)> {
        let solver = self.resolvent(z)?;
        let w1 = solver.solve(&self.d_one)?;
        let w2 = solver.solve(&w1)?;
        let w3 = solver.solve(&w2)?;
        let d1 = ComplexRect::ONE.add(&w2.last().scale(&self.alpha));
        let d2 = w3
            .last()
            .scale(&self.alpha)
            .scale(&RealInterval::point(2.0));
        Ok((d1, d2))
    }

    /// Delta_n, Delta_n', Delta_n'' in one factorization.
    pub fn delta_n_all(&self, z: &ComplexRect) -> Result<(ComplexRect, ComplexRect, ComplexRect)> {
        let solver = self.resolvent(z)?;
        let w1 = solver.solve(&self.d_one)?;
        let w2 = solver.solve(&w1)?;
        let w3 = solver.solve(&w2)?;
        let d0 = z.add(&w1.last().scale(&self.alpha));
        let d1 = ComplexRect::ONE.add(&w2.last().scale(&self.alpha));
        let d2 = w3
            .last()
            .scale(&self.alpha)
            .scale(&RealInterval::point(2.0));
        Ok((d0, d1, d2))
    }

    /// The floating (n+1) x (n+1) matrix of the linearized pseudospectral
    /// system `(y_0, y) -> (-alpha y_n, D y - y_0 D 1)`. Nonrigorous; seeds
    /// the eigenvalue census and cross-checks.
    pub fn assemble_an_float(&self) -> DMatrix<f64> {
        let n = self.n;
        let alpha = self.alpha.mid();
        let mut a = DMatrix::zeros(n + 1, n + 1);
        a[(0, n)] = -alpha;
        for k in 0..n {
            a[(k + 1, 0)] = -self.d_one_mid[k];
            for j in 0..n {
                a[(k + 1, j + 1)] = self.d_mid[(k, j)];
            }
        }
        a
    }

    /// Interval enclosure of the same (n+1) x (n+1) linearization; used by
    /// the vector-valued homological solves.
    pub fn assemble_an_interval(&self) -> IntervalMatrix {
        let n = self.n;
        let mut a = IntervalMatrix::zeros(n + 1, n + 1);
        *a.entry_mut(0, n) = ComplexRect::from_real(self.alpha.neg());
        for k in 0..n {
            *a.entry_mut(k + 1, 0) = self.d_one.entry(k).neg();
            for j in 0..n {
                *a.entry_mut(k + 1, j + 1) = *self.d.entry(k, j);
            }
        }
        a
    }

    /// Rigorous upper bound on ||D||_1 (max column sum), the matrix norm used
    /// by the tail lemmas; its paired vector norm gives ||ones||_1 = n.
    pub fn norm_d_one_upper(&self) -> f64 {
        self.d.one_norm_upper()
    }

    /// Floating blow-up vector (D - z I)^{-1} D 1 for nonrigorous evaluation.
    pub fn blowup_float(&self, z: Complex64) -> Result<Vec<Complex64>> {
        let n = self.n;
        let m = DMatrix::from_fn(n, n, |i, j| {
            Complex64::new(self.d_mid[(i, j)], 0.0) - if i == j { z } else { Complex64::ZERO }
        });
        let rhs = DMatrix::from_fn(n, 1, |i, _| Complex64::new(self.d_one_mid[i], 0.0));
        let sol = m
            .lu()
            .solve(&rhs)
            .ok_or(crate::error::Error::NumericallySingular)?;
        Ok((0..n).map(|i| sol[(i, 0)]).collect())
    }

    /// Floating Delta_n for seeding root searches.
    pub fn delta_n_float(&self, z: Complex64) -> Result<Complex64> {
        Ok(z + self.alpha.mid() * self.blowup_float(z)?[self.n - 1])
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn scheme(n: usize) -> ChebyshevScheme {
        build_scheme(n, RealInterval::point(2.0))
    }

    #[test]
    fn n1_closed_form() {
        // l_1(theta) = -theta, so D = [-1] and D 1 = [-1]
        let s = scheme(1);
        assert_eq!(s.nodes()[0], RealInterval::ZERO);
        assert_eq!(s.nodes()[1], RealInterval::point(-1.0));
        assert!(s.d().entry(0, 0).contains(-1.0, 0.0));
        assert!(s.d().entry(0, 0).width() < 1e-14);
        assert!(s.d_one().entry(0).contains(-1.0, 0.0));
    }

    #[test]
    fn n2_middle_node() {
        let s = scheme(2);
        assert!(s.nodes()[1].contains(-0.5));
        assert!(s.nodes()[1].width() < 1e-14);
    }

    #[test]
    fn endpoints_pinned_and_decreasing() {
        let s = scheme(10);
        assert_eq!(s.nodes()[0], RealInterval::ZERO);
        assert_eq!(s.nodes()[10], RealInterval::point(-1.0));
        for j in 0..10 {
            assert!(s.nodes()[j].lo() > s.nodes()[j + 1].hi());
        }
    }

    #[test]
    fn node_symmetry() {
        // theta_j + theta_{n-j} = -1
        let s = scheme(9);
        for j in 0..=9 {
            let sum = s.nodes()[j].add(&s.nodes()[9 - j]);
            assert!(sum.contains(-1.0), "j = {j}: {sum}");
        }
    }

    #[test]
    fn row_sum_identity() {
        // l_0'(theta_k) + sum_j l_j'(theta_k) = 0
        let s = scheme(8);
        let l0 = s.ell0_prime();
        for k in 0..8 {
            let mut total = l0[k];
            for j in 0..8 {
                total = total.add(&s.d().entry(k, j).re);
            }
            assert!(total.contains(0.0), "row {k}: {total}");
        }
    }

    #[test]
    fn differentiation_exact_on_monomials() {
        // full (n+1)-point rule applied to theta^m reproduces m theta^{m-1}
        let n = 7;
        let s = scheme(n);
        let l0 = s.ell0_prime();
        for m in 0..=n as u32 {
            for k in 1..=n {
                // p(theta_j) for all nodes; node 0 handled via the l_0' column
                let mut acc = l0[k - 1].mul(&pow(&s.nodes()[0], m));
                for j in 1..=n {
                    acc = acc.add(&s.d().entry(k - 1, j - 1).re.mul(&pow(&s.nodes()[j], m)));
                }
                let expect = if m == 0 {
                    RealInterval::ZERO
                } else {
                    pow(&s.nodes()[k], m - 1).scale(f64::from(m))
                };
                assert!(
                    acc.intersects(&expect),
                    "m = {m}, node {k}: rule {acc} vs {expect}"
                );
            }
        }
    }

    fn pow(x: &RealInterval, m: u32) -> RealInterval {
        let mut p = RealInterval::ONE;
        for _ in 0..m {
            p = p.mul(x);
        }
        p
    }

    #[test]
    fn blowup_n1_closed_form() {
        // n = 1: (D - z) v = D 1 gives v = 1/(1+z)
        let s = scheme(1);
        let v = s.blowup_vector(&ComplexRect::ZERO).unwrap();
        assert!(v.entry(0).contains(1.0, 0.0));
        let v = s.blowup_vector(&ComplexRect::point(1.0, 0.0)).unwrap();
        assert!(v.entry(0).contains(0.5, 0.0));
    }

    #[test]
    fn delta_1_closed_form() {
        // Delta_1(z) = z + alpha/(1+z); at z = 0, alpha = 2: 2
        let s = scheme(1);
        let d = s.delta_n(&ComplexRect::ZERO).unwrap();
        assert!(d.contains(2.0, 0.0));
        assert!(d.width() < 1e-13);
        // derivatives at 0: 1 - 2/(1+0)^2 = -1 and 4/(1+0)^3 = 4
        let (d1, d2) = s.delta_n_derivs(&ComplexRect::ZERO).unwrap();
        assert!(d1.contains(-1.0, 0.0));
        assert!(d2.contains(4.0, 0.0));
    }

    #[test]
    fn delta_1_linear_when_alpha_zero() {
        let s = build_scheme(1, RealInterval::ZERO);
        let (d1, d2) = s.delta_n_derivs(&ComplexRect::point(0.3, -0.2)).unwrap();
        assert!(d1.contains(1.0, 0.0) && d1.width() < 1e-13);
        assert!(d2.contains(0.0, 0.0) && d2.width() < 1e-13);
    }

    #[test]
    fn an_matrix_n1() {
        let s = scheme(1);
        let a = s.assemble_an_float();
        assert_eq!(a[(0, 0)], 0.0);
        assert!((a[(0, 1)] + 2.0).abs() < 1e-14);
        assert!((a[(1, 0)] - 1.0).abs() < 1e-14);
        assert!((a[(1, 1)] + 1.0).abs() < 1e-14);
    }

    #[test]
    fn alpha_zero_first_row_zero() {
        let s = build_scheme(3, RealInterval::ZERO);
        let a = s.assemble_an_float();
        for j in 0..=3 {
            assert_eq!(a[(0, j)], 0.0);
        }
    }

    #[test]
    fn delta_n_derivs_match_finite_differences() {
        let s = scheme(10);
        let z0 = Complex64::new(0.1728, 1.6737);
        let h = 1e-6;
        let f = |z: Complex64| s.delta_n_float(z).unwrap();
        let fd = (f(z0 + Complex64::new(h, 0.0)) - f(z0 - Complex64::new(h, 0.0)))
            / Complex64::new(2.0 * h, 0.0);
        let (d1, _) = s.delta_n_derivs(&ComplexRect::point(z0.re, z0.im)).unwrap();
        let (m_re, m_im) = d1.mid();
        assert!((fd - Complex64::new(m_re, m_im)).norm() < 1e-7 * (1.0 + fd.norm()));
    }

    #[test]
    fn norm_d_matches_float_value() {
        // max column sum for n = 10 on the rescaled mesh
        let s = scheme(10);
        let nd = s.norm_d_one_upper();
        assert!((nd - 121.565_288_936_247_38).abs() < 1e-9, "{nd}");
    }
}
