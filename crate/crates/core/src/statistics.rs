//! Inversion numbers, major indices and the other statistics on words, paths,
//! permutations, Stirling words, non-crossing partitions and symmetric paths.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::objects::{
    BinaryWord, NonCrossingPartition, Permutation, RDyckPath, RStirlingWord, SymmetricPath,
};

/// Which positions count as descents.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
pub enum DescentConvention {
    /// `{i : f_i > f_{i+1}}`.
    #[default]
    Standard,
    /// Standard descents together with the last position n.
    Augmented,
    /// Standard descents of a half-word, together with its length m when the last letter is 1.
    Symmetric,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct StatValue {
    pub name: String,
    pub value: u64,
}

/// Number of pairs j < k with f_j > f_k.
pub fn inv<T: Ord>(f: &[T]) -> usize {
    let mut count = 0;
    for (j, a) in f.iter().enumerate() {
        count += f[j + 1..].iter().filter(|b| a > *b).count();
    }
    count
}

/// Sorted descent set (1-based positions).
pub fn des_set<T: Copy + Ord + Into<usize>>(f: &[T], conv: DescentConvention) -> Vec<usize> {
    let mut d: Vec<usize> = (1..f.len()).filter(|&i| f[i - 1] > f[i]).collect();
    match conv {
        DescentConvention::Standard => {}
        DescentConvention::Augmented => {
            if !f.is_empty() {
                d.push(f.len());
            }
        }
        DescentConvention::Symmetric => {
            if f.last().is_some_and(|&x| x.into() == 1) {
                d.push(f.len());
            }
        }
    }
    d
}

pub fn maj<T: Copy + Ord + Into<usize>>(f: &[T], conv: DescentConvention) -> usize {
    des_set(f, conv).iter().sum()
}

/// Descent set of the inverse permutation.
pub fn ides_set(p: &Permutation, conv: DescentConvention) -> Vec<usize> {
    des_set(p.inverse().values(), conv)
}

/// Cells between the path and the top path 0^n 1^{rn}: for each up step, the number
/// of right steps before it.
pub fn r_dyck_iinv(p: &RDyckPath) -> usize {
    let mut ones = 0;
    let mut total = 0;
    for &b in p.letters() {
        if b == 0 {
            total += ones;
        } else {
            ones += 1;
        }
    }
    total
}

/// Cells between the path and the lowest path (0 1^r)^n.
pub fn r_dyck_inv(p: &RDyckPath) -> usize {
    let n = p.n();
    p.r() * n * n.saturating_sub(1) / 2 - r_dyck_iinv(p)
}

/// `inv(v) / r`.
pub fn stirling_inv(v: &RStirlingWord) -> Result<usize> {
    let i = inv(v.values());
    if !i.is_multiple_of(v.r()) {
        return Err(Error::Internal(format!(
            "inv({v}) = {i} is not divisible by {}",
            v.r()
        )));
    }
    Ok(i / v.r())
}

/// Positions j <= r(n-1) with v_j > v_{j+1} = ... = v_{j+r}.
pub fn stirling_j_set(v: &RStirlingWord) -> Vec<usize> {
    let r = v.r();
    let w = v.values();
    let bound = r * v.n().saturating_sub(1);
    (1..=bound)
        .filter(|&j| w[j - 1] > w[j] && w[j..j + r].iter().all(|&x| x == w[j]))
        .collect()
}

pub fn stirling_maj(v: &RStirlingWord) -> usize {
    stirling_j_set(v).iter().sum()
}

/// `wt(B) = j_1 + j_p + 2 (j_2 + ... + j_{p-1}) - p + 1`, zero on singletons.
pub fn nc_wt(block: &[usize]) -> usize {
    let p = block.len();
    if p <= 1 {
        return 0;
    }
    let inner: usize = block[1..p - 1].iter().sum();
    block[0] + block[p - 1] + 2 * inner + 1 - p
}

pub fn nc_maj(pi: &NonCrossingPartition) -> usize {
    pi.blocks().iter().map(|b| nc_wt(b)).sum()
}

/// `sum_B sum_{j in B} (j - min B)`.
pub fn nc_wtprime(pi: &NonCrossingPartition) -> usize {
    pi.blocks()
        .iter()
        .map(|b| b.iter().map(|j| j - b[0]).sum::<usize>())
        .sum()
}

pub fn sym_maj(s: &SymmetricPath) -> usize {
    maj(s.letters(), DescentConvention::Symmetric)
}

/// `k + #{(b_j, a_i) : a_i opens right of b_j} + #{(b_j, b_l) : b_l right of b_j}`.
pub fn sym_inv1(s: &SymmetricPath) -> usize {
    let halves = s.half_arches();
    let mut total = halves.len();
    for &b in halves {
        total += s.arches().iter().filter(|(open, _)| *open > b).count();
        total += halves.iter().filter(|&&c| c > b).count();
    }
    total
}

/// Pairs i < j with (ν_i, ν_j) = (1, 0).
pub fn sym_inv2(s: &SymmetricPath) -> usize {
    inv(s.letters())
}

pub fn sym_inv(s: &SymmetricPath) -> usize {
    sym_inv1(s) + sym_inv2(s)
}

/// `(α, β)`: over standard descents i of w, the number of zeros resp. ones in w_1..w_i.
pub fn alpha_beta(w: &BinaryWord) -> (usize, usize) {
    let letters = w.letters();
    let mut zeros = 0;
    let (mut alpha, mut beta) = (0, 0);
    for i in 0..letters.len() {
        if letters[i] == 0 {
            zeros += 1;
        }
        if i + 1 < letters.len() && letters[i] > letters[i + 1] {
            alpha += zeros;
            beta += i + 1 - zeros;
        }
    }
    (alpha, beta)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::objects::{parse_multiword, parse_nc, parse_word};

    fn sw(s: &str, r: usize) -> RStirlingWord {
        RStirlingWord::parse(s, r).unwrap()
    }

    #[test]
    fn inversions_and_descents() {
        assert_eq!(inv(&parse_multiword("321").unwrap()), 3);
        assert_eq!(inv(&parse_multiword("322311").unwrap()), 10);
        assert_eq!(
            maj(
                parse_word("00010111").unwrap().letters(),
                DescentConvention::Standard
            ),
            4
        );
        assert_eq!(
            maj(
                parse_word("010101").unwrap().letters(),
                DescentConvention::Symmetric
            ),
            12
        );
        let p: Permutation = "631245".parse().unwrap();
        assert_eq!(des_set(p.values(), DescentConvention::Augmented), [1, 2, 6]);
        assert_eq!(ides_set(&p, DescentConvention::Augmented), [2, 5, 6]);
        assert_eq!(
            des_set(
                Permutation::identity(4).values(),
                DescentConvention::Augmented
            ),
            [4]
        );
    }

    #[test]
    fn stirling_statistics() {
        assert_eq!(stirling_inv(&sw("332112", 2)).unwrap(), 5);
        assert_eq!(stirling_inv(&sw("322113", 2)).unwrap(), 4);
        assert_eq!(stirling_maj(&sw("113223", 2)), 3);
        assert_eq!(stirling_j_set(&sw("311322", 2)), [1, 4]);
        assert_eq!(stirling_maj(&sw("112233", 2)), 0);
    }

    #[test]
    fn path_areas() {
        let top = RDyckPath::top(4, 2);
        let low = RDyckPath::lowest(4, 2);
        assert_eq!(r_dyck_iinv(&top), 0);
        assert_eq!(r_dyck_iinv(&low), 12);
        assert_eq!(r_dyck_inv(&low), 0);
    }

    #[test]
    fn noncrossing_weights() {
        assert_eq!(nc_wt(&[1, 3]), 3);
        assert_eq!(nc_wt(&[5]), 0);
        assert_eq!(nc_maj(&parse_nc("158/24/3/67").unwrap()), 34);
        assert_eq!(nc_wtprime(&parse_nc("134/2/58/67").unwrap()), 9);
        assert_eq!(nc_wtprime(&parse_nc("1/2/3").unwrap()), 0);
    }

    #[test]
    fn symmetric_statistics() {
        let s = |t: &str| t.parse::<SymmetricPath>().unwrap();
        assert_eq!(sym_maj(&s("0011.0")), 4);
        assert_eq!(sym_maj(&s("000")), 0);
        assert_eq!(sym_maj(&s("01.00")), 2);
        assert_eq!(sym_inv(&s("01")), 0);
        assert_eq!(sym_inv(&s("0")), 1);
        let mut q2: Vec<usize> = ["00", "001", "010", "0011", "0101"]
            .iter()
            .map(|t| sym_inv(&s(t)))
            .collect();
        q2.sort();
        assert_eq!(q2, [0, 1, 2, 2, 3]);
    }

    #[test]
    fn refined_major_index() {
        let w = |t| parse_word(t).unwrap();
        assert_eq!(alpha_beta(&w("011011")), (1, 2));
        assert_eq!(alpha_beta(&w("001111")), (0, 0));
        assert_eq!(alpha_beta(&w("010111")), (1, 1));
    }
}
