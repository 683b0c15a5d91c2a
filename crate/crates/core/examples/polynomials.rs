use qcatalan::identities::{catalan_c, e_r_general, fuss_catalan_c, n3k_closed, narayana};
use qcatalan::qpoly::{q_binomial, q_int, LaurentPoly};

fn main() {
    let c4 = catalan_c(4);
    println!("C_4 = {c4}");
    println!("C^(2)_3 = {}", fuss_catalan_c(3, 2));
    println!("E^(2)_2 = {}", e_r_general(2, 2));
    println!("N(4,2) = {}", narayana(4, 2).unwrap());
    println!("N3(3,1,1) = {}", n3k_closed(3, 1, 1).unwrap());

    let macmahon = q_binomial(8, 4).exact_div(&q_int(5)).unwrap();
    println!("[8 choose 4]/[5] = {macmahon}");
    let p: LaurentPoly = "q^-1 + 2*q*t".parse().unwrap();
    println!("({p})^2 = {}", p.pow(2));
}
