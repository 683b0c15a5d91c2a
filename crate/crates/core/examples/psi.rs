use qcatalan::bijections::{psi, psi_inv};
use qcatalan::objects::enumerate_r_dyck;

fn main() {
    for d in enumerate_r_dyck(4, 1) {
        let s = psi(&d).unwrap();
        println!("{d} -> {s}");
        assert_eq!(psi_inv(&s).unwrap(), d);
    }
}
