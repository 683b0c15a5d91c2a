//! Exact polynomial and truncated-series arithmetic.

mod laurent;
mod qnum;
mod series;

pub use laurent::{LaurentPoly, Monomial, PolyJson, TermJson, Var};
pub use qnum::{q_binomial, q_factorial, q_int, stirling_product};
pub use series::{qterm, sprod_range, sprod_range_inverse, z, TruncSeries};
