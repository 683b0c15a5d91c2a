use std::fmt;
use std::str::FromStr;

use crate::error::{invalid, Error, Result};
use crate::objects::{parse_word, BinaryWord, Dfs};

/// A symmetric Dyck path, stored as its left half ν. Matched brackets of ν are arches;
/// unmatched zeros are half-arches, closed by the mirror image.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SymmetricPath {
    half_word: BinaryWord,
    arches: Vec<(usize, usize)>,
    half_arches: Vec<usize>,
}

/// Bracket matching on a half-word. Positions are 1-based; arches are sorted by opening position.
pub fn arch_decompose(v: &BinaryWord) -> Result<(Vec<(usize, usize)>, Vec<usize>)> {
    let mut stack = Vec::new();
    let mut arches = Vec::new();
    for (i, &b) in v.letters().iter().enumerate() {
        if b == 0 {
            stack.push(i + 1);
        } else {
            let open = stack
                .pop()
                .ok_or_else(|| invalid(format!("{v} has a prefix with more 1s than 0s")))?;
            arches.push((open, i + 1));
        }
    }
    arches.sort_unstable();
    Ok((arches, stack))
}

impl SymmetricPath {
    pub fn new(half_word: BinaryWord) -> Result<Self> {
        let (arches, half_arches) = arch_decompose(&half_word)?;
        Ok(SymmetricPath {
            half_word,
            arches,
            half_arches,
        })
    }

    pub fn half_word(&self) -> &BinaryWord {
        &self.half_word
    }

    pub fn letters(&self) -> &[u8] {
        self.half_word.letters()
    }

    pub fn arches(&self) -> &[(usize, usize)] {
        &self.arches
    }

    pub fn half_arches(&self) -> &[usize] {
        &self.half_arches
    }

    /// #arches + #half-arches, which is also the number of zeros in ν.
    pub fn size(&self) -> usize {
        self.arches.len() + self.half_arches.len()
    }

    /// The full Dyck word ν followed by its reversed complement.
    pub fn full_word(&self) -> BinaryWord {
        let v = self.letters();
        let mut w = v.to_vec();
        w.extend(v.iter().rev().map(|&b| 1 - b));
        BinaryWord::from_vec_unchecked(w)
    }
}

impl FromStr for SymmetricPath {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        SymmetricPath::new(parse_word(s)?)
    }
}

impl fmt::Display for SymmetricPath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.half_word.fmt(f)
    }
}

/// All symmetric Dyck paths of size n: shorter half-words first, then lexicographic.
pub fn enumerate_symmetric(n: usize) -> impl Iterator<Item = SymmetricPath> {
    (0..=n).flat_map(move |ones| {
        Dfs::new(move |prefix: &[u8]| {
            if prefix.len() == n + ones {
                return None;
            }
            let z = prefix.iter().filter(|&&b| b == 0).count();
            let o = prefix.len() - z;
            let mut next = Vec::with_capacity(2);
            if z < n {
                next.push(0);
            }
            if o < ones && o < z {
                next.push(1);
            }
            Some(next)
        })
        .map(|v| {
            SymmetricPath::new(BinaryWord::from_vec_unchecked(v)).expect("prefix condition holds")
        })
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sp(s: &str) -> SymmetricPath {
        s.parse().unwrap()
    }

    #[test]
    fn decomposition() {
        let p = sp("010");
        assert_eq!(p.arches(), [(1, 2)]);
        assert_eq!(p.half_arches(), [3]);
        assert_eq!(p.size(), 2);
        assert_eq!(sp("01").size(), 1);
        let p = sp("00110");
        assert_eq!(p.arches(), [(1, 4), (2, 3)]);
        assert_eq!(p.half_arches(), [5]);
        assert_eq!(p.size(), 3);
        assert!("10".parse::<SymmetricPath>().is_err());
        assert_eq!(sp("0011.0").full_word().to_string(), "0011010011");
    }

    #[test]
    fn enumeration() {
        let v: Vec<String> = enumerate_symmetric(2).map(|p| p.to_string()).collect();
        assert_eq!(v, ["00", "001", "010", "0011", "0101"]);
        let e: Vec<_> = enumerate_symmetric(0).collect();
        assert_eq!(e.len(), 1);
        assert!(e[0].half_word().is_empty());
        assert_eq!(enumerate_symmetric(3).count(), 14);
    }
}
