//! Each defining expansion collapses to z once the families come from their recurrences.
use qcatalan::identities::{series_sum, Families, SeriesName};
use qcatalan::qpoly::z;

fn main() {
    let mut fam = Families::new();
    for (name, r, order) in [
        (SeriesName::DefCn, 1, 8),
        (SeriesName::Cnrinsum, 2, 6),
        (SeriesName::Einqq, 2, 5),
        (SeriesName::Einprod, 1, 4),
    ] {
        let s = series_sum(&mut fam, name, r, order).unwrap();
        println!(
            "{} r={r} to z^{order}: {}",
            name.name(),
            if s == z(order) { "z" } else { "mismatch" }
        );
    }
}
