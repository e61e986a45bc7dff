//! Exact symbolic algebra over the Gaussian rationals: polynomials and
//! rational functions in `z, z̄`, and formal `ν`-series of holomorphic
//! differential operators.

pub mod expr;
pub mod formal;
pub mod gauss;
pub mod parse;
pub mod poly;

pub use expr::{RationalExpr, Var};
pub use formal::{DiffOp, FormalOperator, NuSeries};
pub use gauss::GaussRational;
pub use parse::parse_expr;
pub use poly::{gcd, Mono, Poly};
