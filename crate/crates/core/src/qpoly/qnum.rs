use super::LaurentPoly;

/// `[n]_q = 1 + q + ... + q^(n-1)`.
pub fn q_int(n: usize) -> LaurentPoly {
    let mut p = LaurentPoly::zero();
    for i in 0..n {
        p += LaurentPoly::q_pow(i as i64);
    }
    p
}

/// `[n]_q! = [1]_q [2]_q ... [n]_q`.
pub fn q_factorial(n: usize) -> LaurentPoly {
    (1..=n).fold(LaurentPoly::one(), |acc, i| &acc * &q_int(i))
}

/// Gaussian binomial, built by the q-Pascal rule so no division is involved.
pub fn q_binomial(n: i64, k: i64) -> LaurentPoly {
    if k < 0 || n < 0 || k > n {
        return LaurentPoly::zero();
    }
    let (n, k) = (n as usize, k as usize);
    let mut row = vec![LaurentPoly::one()];
    for m in 1..=n {
        let mut next = vec![LaurentPoly::zero(); m + 1];
        for j in 0..=m {
            let mut v = LaurentPoly::zero();
            if j >= 1 {
                v += &row[j - 1];
            }
            if j < m {
                v += row[j].mul_monomial(&super::Monomial::q(j as i64));
            }
            next[j] = v;
        }
        row = next;
    }
    row.swap_remove(k)
}

/// `prod_{j=0}^{n-1} [j r + 1]_q`, the INV/MAJ generating function of r-Stirling words.
pub fn stirling_product(n: usize, r: usize) -> LaurentPoly {
    (0..n).fold(LaurentPoly::one(), |acc, j| &acc * &q_int(j * r + 1))
}
