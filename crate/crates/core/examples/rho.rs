use qcatalan::bijections::{descent_sets_of, rho, rho_inv};
use qcatalan::objects::Permutation;

fn main() {
    let w: Permutation = "631245".parse().unwrap();
    let d = rho(&w).unwrap();
    let (des, ides) = descent_sets_of(&d);
    println!("{w} -> {d}  Des {des:?} iDes {ides:?}");
    assert_eq!(rho_inv(&d).unwrap(), w);
}
