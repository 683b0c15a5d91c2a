//! 231-avoiding Stirling words to r-Dyck paths, carrying INV to Inv.
use qcatalan::bijections::{alpha_vector, kappa, kappa_inv};
use qcatalan::objects::RStirlingWord;
use qcatalan::statistics::{r_dyck_inv, stirling_inv};

fn main() {
    let w = RStirlingWord::parse("42112334", 2).unwrap();
    let p = kappa(&w).unwrap();
    println!("{w} -> alpha {:?} -> {p}", alpha_vector(&w));
    println!("INV {} = Inv {}", stirling_inv(&w).unwrap(), r_dyck_inv(&p));
    assert_eq!(kappa_inv(&p).unwrap(), w);
}
