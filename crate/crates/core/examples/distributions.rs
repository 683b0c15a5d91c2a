//! Generating polynomials of statistics over whole families.
use qcatalan::identities::{dist, Family, StatSpec};

fn main() {
    let runs = [
        (Family::Stirling { r: 2 }, 3, "inv"),
        (Family::Stirling { r: 2 }, 3, "maj"),
        (Family::Dyck { r: 1 }, 4, "maj"),
        (Family::Dyck { r: 2 }, 2, "E"),
        (Family::Nc, 4, "maj"),
        (Family::Perm231, 4, "q=tmaj,t=twt"),
        (Family::Symmetric, 3, "inv"),
    ];
    for (family, n, stat) in runs {
        let p = dist(family, n, &StatSpec::parse(stat).unwrap()).unwrap();
        println!("{family} n={n} {stat}: {p}");
    }
}
