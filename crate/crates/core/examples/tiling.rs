//! Builds the cover-inclusive Dyck tiling of a permutation and draws it.
use qcatalan::objects::Permutation;
use qcatalan::tilings::{build_tiling, render_tiling, tiling_maj, tiling_wtprime};

fn main() {
    let perm = std::env::args().nth(1).unwrap_or_else(|| "24135".into());
    let w: Permutation = perm.parse().unwrap();
    let t = build_tiling(&w).unwrap();
    print!("{}", render_tiling(&t));
    println!("maj {} wt' {}", tiling_maj(&t), tiling_wtprime(&t));
    assert_eq!(t.read_permutation().unwrap(), w);
}
