use std::fmt;
use std::str::FromStr;

use crate::error::{invalid, Error, Result};
use crate::objects::Dfs;

/// A finite word over {0,1}. `0` is an up step (or opening bracket), `1` a right step.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct BinaryWord(Vec<u8>);

impl BinaryWord {
    pub fn new(letters: Vec<u8>) -> Result<Self> {
        if let Some(i) = letters.iter().position(|&b| b > 1) {
            return Err(Error::Parse {
                index: i,
                found: char::from(b'0' + letters[i].min(9)),
            });
        }
        Ok(BinaryWord(letters))
    }

    pub fn letters(&self) -> &[u8] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn zeros(&self) -> usize {
        self.0.iter().filter(|&&b| b == 0).count()
    }

    pub fn ones(&self) -> usize {
        self.0.len() - self.zeros()
    }

    pub fn into_vec(self) -> Vec<u8> {
        self.0
    }

    pub(crate) fn from_vec_unchecked(v: Vec<u8>) -> Self {
        debug_assert!(v.iter().all(|&b| b <= 1));
        BinaryWord(v)
    }
}

/// Strips decorative dots and reads a {0,1} word.
pub fn parse_word(text: &str) -> Result<BinaryWord> {
    let mut v = Vec::with_capacity(text.len());
    for (index, c) in text.chars().enumerate() {
        match c {
            '0' => v.push(0),
            '1' => v.push(1),
            '.' => {}
            found => return Err(Error::Parse { index, found }),
        }
    }
    Ok(BinaryWord(v))
}

impl FromStr for BinaryWord {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        parse_word(s)
    }
}

impl fmt::Display for BinaryWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for &b in &self.0 {
            f.write_str(if b == 0 { "0" } else { "1" })?;
        }
        Ok(())
    }
}

/// True iff `w` has #1 = r·#0 and no prefix with #1 > r·#0.
pub fn is_r_dyck(w: &BinaryWord, r: usize) -> bool {
    let mut height: i64 = 0;
    for &b in w.letters() {
        height += if b == 0 { r as i64 } else { -1 };
        if height < 0 {
            return false;
        }
    }
    height == 0
}

/// A lattice path from (0,0) to (rn,n) that never goes below the line y = x/r.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RDyckPath {
    word: BinaryWord,
    r: usize,
}

impl RDyckPath {
    pub fn new(word: BinaryWord, r: usize) -> Result<Self> {
        if r == 0 {
            return Err(invalid("slope r must be positive"));
        }
        if !is_r_dyck(&word, r) {
            return Err(invalid(format!("{word} is not a {r}-Dyck path")));
        }
        Ok(RDyckPath { word, r })
    }

    pub fn parse(text: &str, r: usize) -> Result<Self> {
        Self::new(parse_word(text)?, r)
    }

    pub fn word(&self) -> &BinaryWord {
        &self.word
    }

    pub fn letters(&self) -> &[u8] {
        self.word.letters()
    }

    pub fn r(&self) -> usize {
        self.r
    }

    pub fn n(&self) -> usize {
        self.word.zeros()
    }

    /// The lowest path (0 1^r)^n.
    pub fn lowest(n: usize, r: usize) -> Self {
        let mut v = Vec::with_capacity(n * (r + 1));
        for _ in 0..n {
            v.push(0);
            v.extend(std::iter::repeat_n(1, r));
        }
        RDyckPath {
            word: BinaryWord(v),
            r,
        }
    }

    /// The top path 0^n 1^{rn}.
    pub fn top(n: usize, r: usize) -> Self {
        let mut v = vec![0; n];
        v.extend(std::iter::repeat_n(1, r * n));
        RDyckPath {
            word: BinaryWord(v),
            r,
        }
    }

    /// Number of valleys, i.e. factors `10`.
    pub fn valleys(&self) -> usize {
        self.letters().windows(2).filter(|w| w == &[1, 0]).count()
    }
}

impl fmt::Display for RDyckPath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.word.fmt(f)
    }
}

/// True iff the path touches y = x/r only at its two endpoints.
pub fn is_prime(p: &RDyckPath) -> bool {
    let r = p.r as i64;
    let w = p.letters();
    if w.is_empty() {
        return false;
    }
    let mut height = 0i64;
    for &b in &w[..w.len() - 1] {
        height += if b == 0 { r } else { -1 };
        if height == 0 {
            return false;
        }
    }
    true
}

/// All r-Dyck paths of size n in lexicographic order (0 < 1).
pub fn enumerate_r_dyck(n: usize, r: usize) -> impl Iterator<Item = RDyckPath> {
    let len = n * (r + 1);
    Dfs::new(move |prefix: &[u8]| {
        if prefix.len() == len {
            return None;
        }
        let zeros = prefix.iter().filter(|&&b| b == 0).count();
        let ones = prefix.len() - zeros;
        let mut next = Vec::with_capacity(2);
        if zeros < n {
            next.push(0);
        }
        if ones < r * zeros {
            next.push(1);
        }
        Some(next)
    })
    .map(move |v| RDyckPath {
        word: BinaryWord(v),
        r,
    })
}

/// `(1/(nr+1)) binom((r+1)n, n)`.
pub fn fuss_catalan_number(n: usize, r: usize) -> u128 {
    let m = (r + 1) * n;
    let mut b: u128 = 1;
    for i in 0..n {
        b = b * (m - i) as u128 / (i + 1) as u128;
    }
    b / (n * r + 1) as u128
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_strips_dots() {
        assert_eq!(parse_word("0011.01").unwrap().to_string(), "001101");
        assert!(parse_word("").unwrap().is_empty());
        assert_eq!(
            parse_word("01x").unwrap_err(),
            Error::Parse {
                index: 2,
                found: 'x'
            }
        );
    }

    #[test]
    fn dyck_predicates() {
        assert!(is_r_dyck(&parse_word("010101").unwrap(), 1));
        assert!(!is_r_dyck(&parse_word("10").unwrap(), 1));
        assert!(is_r_dyck(&parse_word("010110101111").unwrap(), 2));
        let p = |s| RDyckPath::parse(s, 1).unwrap();
        assert!(is_prime(&p("000111")));
        assert!(is_prime(&p("001011")));
        assert!(!is_prime(&p("010101")));
    }

    #[test]
    fn dyck_enumeration_order() {
        let v: Vec<String> = enumerate_r_dyck(3, 1).map(|p| p.to_string()).collect();
        assert_eq!(v, ["000111", "001011", "001101", "010011", "010101"]);
        let empty: Vec<_> = enumerate_r_dyck(0, 2).collect();
        assert_eq!(empty.len(), 1);
        assert!(empty[0].word().is_empty());
        assert_eq!(enumerate_r_dyck(3, 2).count(), 12);
    }

    #[test]
    fn fuss_catalan_formula() {
        assert_eq!(fuss_catalan_number(3, 2), 12);
        assert_eq!(fuss_catalan_number(10, 1), 16796);
        assert_eq!(fuss_catalan_number(0, 3), 1);
    }
}
