//! Polynomial families by recurrence, closed form and defining series, and the
//! verifier that ties them to distributions of statistics.

mod dist;
mod families;
mod series;
mod verify;

pub use dist::{dist, stat_value, Family, Object, StatSpec};
pub use families::{
    aqt, catalan_c, e_poly, e_r_general, e_r_poly, fuss_catalan_c, n2_poly, n3_poly, n3k_closed,
    n3k_enum, n3k_poly, n3pm_poly, narayana, Bounds, Families, Sign,
};
pub use series::{series_sum, SeriesName};
pub use verify::{
    identity, registry, series_check, verify, verify_all, Case, Identity, Status,
    VerificationReport, Witness,
};
