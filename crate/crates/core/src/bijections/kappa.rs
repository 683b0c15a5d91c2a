use crate::error::{Error, Result};
use crate::objects::{is_231_avoiding, BinaryWord, RDyckPath, RStirlingWord};

/// `α_i` = number of letters larger than i to the left of the leftmost i.
pub fn alpha_vector(v: &RStirlingWord) -> Vec<usize> {
    let w = v.values();
    (1..=v.n())
        .map(|i| {
            let first = w.iter().position(|&x| x == i).unwrap_or(0);
            w[..first].iter().filter(|&&x| x > i).count()
        })
        .collect()
}

/// The path whose k-th up step (from the bottom) is preceded by `r(k-1) - α_{n+1-k}` right steps.
pub fn kappa(v: &RStirlingWord) -> Result<RDyckPath> {
    if !is_231_avoiding(v.values()) {
        return Err(Error::Domain(format!("{v} contains 231")));
    }
    let (n, r) = (v.n(), v.r());
    let alpha = alpha_vector(v);
    let mut word = Vec::with_capacity(n * (r + 1));
    let mut ones = 0;
    for k in 1..=n {
        let before = r * (k - 1) - alpha[n - k];
        if before < ones {
            return Err(Error::Internal(format!(
                "α of {v} does not give a lattice path"
            )));
        }
        word.extend(std::iter::repeat_n(1, before - ones));
        word.push(0);
        ones = before;
    }
    word.extend(std::iter::repeat_n(1, r * n - ones));
    RDyckPath::new(BinaryWord::from_vec_unchecked(word), r)
}

/// Reads α off the path and rebuilds the word by inserting `i^r` at gap α_i for i = n, ..., 1.
pub fn kappa_inv(p: &RDyckPath) -> Result<RStirlingWord> {
    let (n, r) = (p.n(), p.r());
    let mut alpha = vec![0; n];
    let mut ones = 0;
    let mut k = 0;
    for &b in p.letters() {
        if b == 1 {
            ones += 1;
        } else {
            k += 1;
            alpha[n - k] = r * (k - 1) - ones;
        }
    }
    let w = insert_blocks(&alpha, r);
    if !is_231_avoiding(&w) {
        return Err(Error::Internal(format!("κ⁻¹({p}) contains 231")));
    }
    Ok(RStirlingWord::from_vec_unchecked(w, r))
}

/// Inserts `i^r` for i = n down to 1, each with α_i letters before it.
pub(crate) fn insert_blocks(alpha: &[usize], r: usize) -> Vec<usize> {
    let n = alpha.len();
    let mut w: Vec<usize> = Vec::with_capacity(n * r);
    for i in (1..=n).rev() {
        let at = alpha[i - 1];
        w.splice(at..at, std::iter::repeat_n(i, r));
    }
    w
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn worked_example() {
        let v = RStirlingWord::parse("42112334", 2).unwrap();
        assert_eq!(alpha_vector(&v), [2, 1, 1, 0]);
        let p = kappa(&v).unwrap();
        assert_eq!(p.to_string(), "010110101111");
        assert_eq!(kappa_inv(&p).unwrap(), v);
    }

    #[test]
    fn extremes() {
        let low = RStirlingWord::parse("112233", 2).unwrap();
        assert_eq!(kappa(&low).unwrap(), RDyckPath::lowest(3, 2));
        let high = RStirlingWord::parse("332211", 2).unwrap();
        assert_eq!(kappa(&high).unwrap(), RDyckPath::top(3, 2));
        assert!(kappa(&RStirlingWord::parse("322311", 2).unwrap()).is_err());
    }
}
