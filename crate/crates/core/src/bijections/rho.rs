use crate::error::{Error, Result};
use crate::objects::{is_231_avoiding, BinaryWord, Permutation, RDyckPath};
use crate::statistics::{des_set, ides_set, DescentConvention};

/// Builds the Dyck word right to left: `j_1` ones, `i_1` zeros, `j_2 - j_1` ones, `i_2 - i_1` zeros, ...
/// where `i_k` and `j_k` run over the augmented descent sets of π and π⁻¹.
pub fn rho(p: &Permutation) -> Result<RDyckPath> {
    if !is_231_avoiding(p.values()) {
        return Err(Error::Domain(format!("{p} contains 231")));
    }
    let des = des_set(p.values(), DescentConvention::Augmented);
    let ides = ides_set(p, DescentConvention::Augmented);
    if des.len() != ides.len() {
        return Err(Error::Internal(format!("|Des| != |iDes| for {p}")));
    }
    let mut rev = Vec::with_capacity(2 * p.n());
    let (mut pi, mut pj) = (0, 0);
    for (&i, &j) in des.iter().zip(&ides) {
        rev.extend(std::iter::repeat_n(1, j - pj));
        rev.extend(std::iter::repeat_n(0, i - pi));
        pi = i;
        pj = j;
    }
    rev.reverse();
    RDyckPath::new(BinaryWord::from_vec_unchecked(rev), 1)
}

/// Recovers the two descent sets from the block structure of the path, then searches
/// for the 231-avoiding permutation having them.
pub fn rho_inv(d: &RDyckPath) -> Result<Permutation> {
    if d.r() != 1 {
        return Err(Error::Domain("ρ⁻¹ takes an ordinary Dyck path".into()));
    }
    let n = d.n();
    let (des, ides) = descent_sets_of(d);
    let is_des: Vec<bool> = (0..=n).map(|i| des.contains(&i)).collect();
    let is_ides: Vec<bool> = (0..=n).map(|i| ides.contains(&i)).collect();
    let mut placed = vec![0usize; n + 2];
    let mut word = Vec::with_capacity(n);
    if search(n, &is_des, &is_ides, &mut word, &mut placed) {
        Ok(Permutation::from_vec_unchecked(word))
    } else {
        Err(Error::Domain(format!(
            "{d} is not the image of a 231-avoiding permutation"
        )))
    }
}

/// (Des, iDes) read from the reversed word `1^{a_1} 0^{b_1} 1^{a_2} 0^{b_2} ...`.
pub fn descent_sets_of(d: &RDyckPath) -> (Vec<usize>, Vec<usize>) {
    let mut rev: Vec<u8> = d.letters().to_vec();
    rev.reverse();
    let (mut des, mut ides) = (Vec::new(), Vec::new());
    let (mut i, mut j) = (0, 0);
    let mut k = 0;
    while k < rev.len() {
        while k < rev.len() && rev[k] == 1 {
            j += 1;
            k += 1;
        }
        while k < rev.len() && rev[k] == 0 {
            i += 1;
            k += 1;
        }
        des.push(i);
        ides.push(j);
    }
    (des, ides)
}

fn search(
    n: usize,
    is_des: &[bool],
    is_ides: &[bool],
    word: &mut Vec<usize>,
    placed: &mut [usize],
) -> bool {
    let k = word.len();
    if k == n {
        return true;
    }
    for v in 1..=n {
        if placed[v] != 0 {
            continue;
        }
        if let Some(&prev) = word.last() {
            if (prev > v) != is_des[k] {
                continue;
            }
        }
        // v-1 placed earlier means v-1 is not an inverse descent; v+1 placed earlier means v is one
        if v > 1 && placed[v - 1] != 0 && is_ides[v - 1] {
            continue;
        }
        if v < n && placed[v + 1] != 0 && !is_ides[v] {
            continue;
        }
        word.push(v);
        if ends_in_231(word) {
            word.pop();
            continue;
        }
        placed[v] = k + 1;
        if search(n, is_des, is_ides, word, placed) {
            return true;
        }
        placed[v] = 0;
        word.pop();
    }
    false
}

/// Some i < j before the last letter c with c < w_i < w_j.
fn ends_in_231(w: &[usize]) -> bool {
    let Some((&c, rest)) = w.split_last() else {
        return false;
    };
    let mut smallest_above_c: Option<usize> = None;
    for &b in rest {
        if smallest_above_c.is_some_and(|a| a < b) {
            return true;
        }
        if b > c {
            smallest_above_c = Some(smallest_above_c.map_or(b, |a| a.min(b)));
        }
    }
    false
}
