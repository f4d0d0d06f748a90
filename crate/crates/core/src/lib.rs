//! Validated unstable manifolds for Wright's equation and its pseudospectral
//! approximation.
//!
//! This crate computes rigorously enclosed local unstable manifolds of the
//! zero equilibrium of Wright's delay differential equation
//!
//! ```text
//! x'(t) = -alpha * x(t-1) * (1 + x(t))
//! ```
//!
//! and of the (n+1)-dimensional ODE obtained by pseudospectral discretization
//! of the history segment on a Chebyshev mesh. Both manifolds are represented
//! as bivariate Taylor-coefficient sequences; the crate certifies, via the
//! radii polynomial theorem, a radius around one shared numerical coefficient
//! sequence within which each problem has an exact solution, and hence an
//! upper bound on the l1 distance between the two coefficient sequences.
//!
//! The layers, bottom up:
//!
//! - [`interval`]: self-contained real/complex interval arithmetic with
//!   outward rounding and verified exp/sin/cos.
//! - [`linalg`]: dense interval vectors and matrices, rigorous norms, and a
//!   verified linear solver (approximate inverse + residual contraction).
//! - [`cheb`]: the Chebyshev mesh on [-1, 0], the differentiation matrix D,
//!   and the discrete characteristic function Delta_n.
//! - [`seq`]: truncated bivariate Taylor sequences, the l1 norm, Cauchy
//!   convolution, and the diagonal multiplier operators.
//! - [`roots`]: validated scalar root-finding (Newton-Kantorovich) applied to
//!   the characteristic functions, including the full eigenvalue census.
//! - [`manifold`]: the coefficient recursion, the zero-finding maps F and
//!   their derivative blocks, and a vector-valued cross-check oracle.
//! - [`bounds`]: the radii-polynomial constants Y0, Z0, Z1, Z2, tail
//!   estimates, and certificate assembly.
//! - [`cli`]: batch orchestration for the `wright-psa` binary.

pub mod bounds;
pub mod cheb;
pub mod cli;
pub mod error;
pub mod interval;
pub mod linalg;
pub mod manifold;
pub mod roots;
pub mod seq;

pub use error::{Error, Result};
pub use interval::{ComplexRect, RealInterval};

/// Which of the two problems a value belongs to.
#[derive(Clone, Copy, Debug, PartialEq, Eq, serde::Serialize)]
#[serde(rename_all = "lowercase")]
pub enum ProblemKind {
    /// The delay differential equation itself.
    Dde,
    /// Its pseudospectral ODE approximation.
    Psa,
}

impl std::fmt::Display for ProblemKind {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            ProblemKind::Dde => write!(f, "dde"),
            ProblemKind::Psa => write!(f, "psa"),
        }
    }
}
