//! Dense univariate arithmetic over i128, independent of the sparse polynomial type.
#![allow(dead_code)]

use qcatalan::qpoly::LaurentPoly;

pub type Dense = Vec<i128>;

pub fn trim(mut a: Dense) -> Dense {
    while a.last() == Some(&0) {
        a.pop();
    }
    a
}

pub fn add(a: &[i128], b: &[i128]) -> Dense {
    let mut out = vec![0; a.len().max(b.len())];
    for (i, c) in a.iter().enumerate() {
        out[i] += c;
    }
    for (i, c) in b.iter().enumerate() {
        out[i] += c;
    }
    trim(out)
}

pub fn mul(a: &[i128], b: &[i128]) -> Dense {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![0; a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    trim(out)
}

/// Long division that panics on a non-zero remainder.
pub fn div_exact(a: &[i128], b: &[i128]) -> Dense {
    let (mut rem, b) = (trim(a.to_vec()), trim(b.to_vec()));
    let lead = *b.last().expect("non-zero divisor");
    if rem.len() < b.len() {
        assert!(rem.is_empty(), "inexact division");
        return Vec::new();
    }
    let mut quot = vec![0; rem.len() - b.len() + 1];
    for i in (0..quot.len()).rev() {
        let top = rem[i + b.len() - 1];
        assert_eq!(top % lead, 0, "inexact division");
        quot[i] = top / lead;
        for (j, c) in b.iter().enumerate() {
            rem[i + j] -= quot[i] * c;
        }
    }
    assert!(rem.iter().all(|&c| c == 0), "inexact division");
    trim(quot)
}

pub fn q_int(n: usize) -> Dense {
    vec![1; n]
}

pub fn q_binom(n: usize, k: usize) -> Dense {
    if k > n {
        return Vec::new();
    }
    let (mut num, mut den) = (vec![1], vec![1]);
    for i in 1..=k {
        num = mul(&num, &q_int(n - k + i));
        den = mul(&den, &q_int(i));
    }
    div_exact(&num, &den)
}

pub fn catalan(n: usize) -> Dense {
    div_exact(&q_binom(2 * n, n), &q_int(n + 1))
}

/// `prod_{j<n} [j r + 1]`.
pub fn stirling_product(n: usize, r: usize) -> Dense {
    (0..n).fold(vec![1], |acc, j| mul(&acc, &q_int(j * r + 1)))
}

/// `q^d a(1/q)`.
pub fn reverse(a: &[i128], d: usize) -> Dense {
    let mut out = vec![0; d + 1];
    for (i, c) in a.iter().enumerate() {
        out[d - i] = *c;
    }
    trim(out)
}

pub fn to_poly(a: &[i128]) -> LaurentPoly {
    let coeffs: Vec<_> = a.iter().map(|&c| c.into()).collect();
    LaurentPoly::from_dense_q(0, &coeffs)
}

pub fn binomial(n: u128, k: u128) -> u128 {
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

pub fn choose2(n: usize) -> usize {
    n * n.saturating_sub(1) / 2
}

/// Area generating function of Dyck paths by first-return decomposition.
pub fn area_catalan(n: usize) -> Dense {
    let mut a: Vec<Dense> = vec![vec![1]];
    for m in 0..n {
        let mut next = Vec::new();
        for k in 0..=m {
            let mut shifted = vec![0; k];
            shifted.extend(mul(&a[k], &a[m - k]));
            next = add(&next, &shifted);
        }
        a.push(next);
    }
    a.swap_remove(n)
}

/// `C_n(q)` from the defining expansion, equal to the area polynomial read backwards.
pub fn carlitz(n: usize) -> Dense {
    reverse(&area_catalan(n), choose2(n))
}
