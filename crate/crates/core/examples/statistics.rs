use qcatalan::objects::{parse_nc, RDyckPath, RStirlingWord, SymmetricPath};
use qcatalan::statistics::{
    alpha_beta, maj, nc_maj, nc_wtprime, r_dyck_iinv, r_dyck_inv, stirling_inv, stirling_maj,
    sym_inv, sym_maj, DescentConvention,
};

fn main() {
    let p = RDyckPath::parse("010110101111", 2).unwrap();
    let (alpha, beta) = alpha_beta(p.word());
    println!(
        "path {p}: maj {} iInv {} Inv {}",
        maj(p.letters(), DescentConvention::Standard),
        r_dyck_iinv(&p),
        r_dyck_inv(&p)
    );
    println!("  alpha {alpha} beta {beta}");

    let w = RStirlingWord::parse("2255431134", 2).unwrap();
    println!(
        "word {w}: INV {} MAJ {}",
        stirling_inv(&w).unwrap(),
        stirling_maj(&w)
    );

    let pi = parse_nc("158/24/3/67").unwrap();
    println!(
        "partition {pi}: maj {} wt' {}",
        nc_maj(&pi),
        nc_wtprime(&pi)
    );

    let s: SymmetricPath = "0101".parse().unwrap();
    println!("symmetric {s}: maj {} inv {}", sym_maj(&s), sym_inv(&s));
}
