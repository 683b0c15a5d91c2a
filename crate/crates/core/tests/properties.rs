mod common;

use proptest::prelude::*;
use qcatalan::bijections::{
    kappa, kappa_inv, nc_from_312, nc_to_312, phi, phi_inv, psi, psi_inv, rho, rho_inv,
};
use qcatalan::objects::{
    enumerate_nc, enumerate_permutations, enumerate_r_dyck, enumerate_r_stirling, is_231_avoiding,
    Permutation,
};
use qcatalan::qpoly::{q_binomial, LaurentPoly, Monomial, Var};
use qcatalan::statistics::{
    des_set, inv, maj, r_dyck_iinv, r_dyck_inv, stirling_inv, stirling_maj, DescentConvention,
};
use qcatalan::tilings::{build_tiling, tiling_wtprime};

fn poly() -> impl Strategy<Value = LaurentPoly> {
    prop::collection::vec((-4i64..5, -3i64..4, -2i64..3), 0..6).prop_map(|terms| {
        let mut p = LaurentPoly::zero();
        for (c, a, b) in terms {
            p.add_term(Monomial::q(a).times(&Monomial::var(Var::T, b)), c.into());
        }
        p
    })
}

fn dense() -> impl Strategy<Value = Vec<i128>> {
    prop::collection::vec(-9i128..10, 0..7)
}

fn permutation(max: usize) -> impl Strategy<Value = Permutation> {
    (0..=max)
        .prop_flat_map(|n| Just((1..=n).collect::<Vec<usize>>()).prop_shuffle())
        .prop_map(|v| Permutation::new(v).unwrap())
}

fn pick<T>(mut items: impl Iterator<Item = T>, seed: usize, count: usize) -> T {
    items.nth(seed % count).unwrap()
}

fn from_dense(p: &LaurentPoly) -> Vec<i128> {
    let (lo, v) = p.to_dense_q().unwrap();
    let mut out = vec![0; lo as usize];
    out.extend(v.iter().map(|c| i128::try_from(c).unwrap()));
    common::trim(out)
}

proptest! {
    #[test]
    fn ring_laws(a in poly(), b in poly(), c in poly()) {
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&a * &LaurentPoly::one(), a.clone());
        prop_assert!((&a - &a).is_zero());
    }

    #[test]
    fn arithmetic_matches_dense(a in dense(), b in dense()) {
        let (pa, pb) = (common::to_poly(&a), common::to_poly(&b));
        prop_assert_eq!(from_dense(&(&pa + &pb)), common::add(&a, &b));
        prop_assert_eq!(from_dense(&(&pa * &pb)), common::mul(&a, &b));
    }

    #[test]
    fn exact_division_undoes_multiplication(a in dense(), b in dense()) {
        prop_assume!(!common::trim(b.clone()).is_empty());
        let (pa, pb) = (common::to_poly(&a), common::to_poly(&b));
        prop_assert_eq!((&pa * &pb).exact_div(&pb).unwrap(), pa);
    }

    #[test]
    fn q_binomial_symmetry(n in 0usize..14, k in 0usize..14) {
        prop_assume!(k <= n);
        let p = q_binomial(n as i64, k as i64);
        prop_assert_eq!(&p, &q_binomial(n as i64, (n - k) as i64));
        prop_assert_eq!(p.eval_one(), common::binomial(n as u128, k as u128).into());
        prop_assert_eq!(from_dense(&p), common::q_binom(n, k));
    }

    #[test]
    fn permutation_statistics(w in permutation(8)) {
        let n = w.n();
        prop_assert_eq!(inv(w.values()), inv(w.inverse().values()));
        prop_assert!(maj(w.values(), DescentConvention::Standard) <= common::choose2(n));
        prop_assert!(des_set(w.values(), DescentConvention::Standard).len() <= n.saturating_sub(1));
        prop_assert_eq!(inv(w.values()) + inv(w.complement().values()), common::choose2(n));
    }

    #[test]
    fn tiling_weight_is_inversions(w in permutation(6)) {
        let t = build_tiling(&w).unwrap();
        prop_assert!(t.is_cover_inclusive());
        prop_assert_eq!(tiling_wtprime(&t), inv(w.values()));
        prop_assert_eq!(t.read_permutation().unwrap(), w);
    }

    #[test]
    fn path_inversions_complement(n in 0usize..7, r in 1usize..4, seed in any::<usize>()) {
        let count = enumerate_r_dyck(n, r).count();
        let p = pick(enumerate_r_dyck(n, r), seed, count);
        prop_assert_eq!(r_dyck_iinv(&p) + r_dyck_inv(&p), r * common::choose2(n));
    }

    #[test]
    fn phi_round_trip(n in 0usize..6, r in 1usize..4, seed in any::<usize>()) {
        let count = enumerate_r_stirling(n, r).count();
        let v = pick(enumerate_r_stirling(n, r), seed, count);
        let w = phi(&v).unwrap();
        prop_assert_eq!(stirling_inv(&w).unwrap(), stirling_maj(&v));
        prop_assert_eq!(phi_inv(&w).unwrap(), v);
    }

    #[test]
    fn kappa_round_trip(n in 0usize..6, r in 1usize..4, seed in any::<usize>()) {
        let words: Vec<_> = enumerate_r_stirling(n, r).filter(|w| is_231_avoiding(w.values())).collect();
        let v = words[seed % words.len()].clone();
        let p = kappa(&v).unwrap();
        prop_assert_eq!(kappa_inv(&p).unwrap(), v);
    }

    #[test]
    fn rho_round_trip(n in 0usize..8, seed in any::<usize>()) {
        let count = enumerate_permutations(n, Some([2, 3, 1])).count();
        let w = pick(enumerate_permutations(n, Some([2, 3, 1])), seed, count);
        prop_assert_eq!(rho_inv(&rho(&w).unwrap()).unwrap(), w);
    }

    #[test]
    fn nc_312_round_trip(n in 0usize..9, seed in any::<usize>()) {
        let count = enumerate_nc(n).count();
        let pi = pick(enumerate_nc(n), seed, count);
        prop_assert_eq!(nc_from_312(&nc_to_312(&pi).unwrap()).unwrap(), pi);
    }

    #[test]
    fn psi_round_trip(n in 1usize..8, seed in any::<usize>()) {
        let count = enumerate_r_dyck(n, 1).count();
        let d = pick(enumerate_r_dyck(n, 1), seed, count);
        let s = psi(&d).unwrap();
        prop_assert_eq!(s.size(), n - 1);
        prop_assert_eq!(psi_inv(&s).unwrap(), d);
    }
}
