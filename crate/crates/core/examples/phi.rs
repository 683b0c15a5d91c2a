//! The MAJ to INV transport on Stirling words, step by step.
use qcatalan::bijections::{phi, phi_inv, phi_trace};
use qcatalan::objects::{word_string, RStirlingWord};
use qcatalan::statistics::{stirling_inv, stirling_maj};

fn main() {
    let v = RStirlingWord::parse("2255431134", 2).unwrap();
    for (left, right) in phi_trace(&v).unwrap() {
        println!("{:>12} {:>12}", word_string(&left), word_string(&right));
    }
    let w = phi(&v).unwrap();
    println!(
        "MAJ({v}) = {} = INV({w}) = {}",
        stirling_maj(&v),
        stirling_inv(&w).unwrap()
    );
    assert_eq!(phi_inv(&w).unwrap(), v);
}
