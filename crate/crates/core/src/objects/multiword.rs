use std::fmt;
use std::str::FromStr;

use crate::error::{invalid, Error, Result};
use crate::objects::Dfs;

/// Reads a word over positive integers: a digit string such as `42112334`, or a
/// comma-separated list such as `10,2,1` (required once a letter exceeds 9).
pub fn parse_multiword(text: &str) -> Result<Vec<usize>> {
    let text = text.trim();
    if text.contains(',') {
        let mut v = Vec::new();
        let mut offset = 0;
        for part in text.split(',') {
            let t = part.trim();
            let val: usize = t.parse().map_err(|_| Error::Parse {
                index: offset,
                found: t.chars().next().unwrap_or(','),
            })?;
            if val == 0 {
                return Err(Error::Parse {
                    index: offset,
                    found: '0',
                });
            }
            v.push(val);
            offset += part.len() + 1;
        }
        return Ok(v);
    }
    text.chars()
        .enumerate()
        .map(|(index, c)| match c.to_digit(10) {
            Some(d) if d > 0 => Ok(d as usize),
            _ => Err(Error::Parse { index, found: c }),
        })
        .collect()
}

pub(crate) fn format_multiword(v: &[usize], f: &mut fmt::Formatter<'_>) -> fmt::Result {
    if v.iter().all(|&x| x <= 9) {
        for x in v {
            write!(f, "{x}")?;
        }
    } else {
        for (i, x) in v.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{x}")?;
        }
    }
    Ok(())
}

/// Text form of a word over positive integers.
pub fn word_string(v: &[usize]) -> String {
    struct W<'a>(&'a [usize]);
    impl fmt::Display for W<'_> {
        fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
            format_multiword(self.0, f)
        }
    }
    W(v).to_string()
}

/// A permutation of [1,n] in one-line notation.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation(Vec<usize>);

impl Permutation {
    pub fn new(values: Vec<usize>) -> Result<Self> {
        let n = values.len();
        let mut seen = vec![false; n + 1];
        for &v in &values {
            if v == 0 || v > n || seen[v] {
                return Err(invalid(format!(
                    "{values:?} is not a permutation of [1,{n}]"
                )));
            }
            seen[v] = true;
        }
        Ok(Permutation(values))
    }

    pub fn identity(n: usize) -> Self {
        Permutation((1..=n).collect())
    }

    pub fn values(&self) -> &[usize] {
        &self.0
    }

    pub fn n(&self) -> usize {
        self.0.len()
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0; self.0.len()];
        for (i, &v) in self.0.iter().enumerate() {
            inv[v - 1] = i + 1;
        }
        Permutation(inv)
    }

    /// `v -> n+1-v` applied to every value.
    pub fn complement(&self) -> Permutation {
        let n = self.0.len();
        Permutation(self.0.iter().map(|&v| n + 1 - v).collect())
    }

    /// 1-based position of value `v`.
    pub fn pos(&self, v: usize) -> usize {
        self.0.iter().position(|&x| x == v).map_or(0, |p| p + 1)
    }

    pub(crate) fn from_vec_unchecked(v: Vec<usize>) -> Self {
        Permutation(v)
    }
}

impl FromStr for Permutation {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Permutation::new(parse_multiword(s)?)
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        format_multiword(&self.0, f)
    }
}

/// True iff every value of [1, len/r] occurs exactly r times and any letter strictly
/// between two copies of j is smaller than j.
pub fn is_stirling(v: &[usize], r: usize) -> bool {
    if r == 0 || !v.len().is_multiple_of(r) {
        return false;
    }
    let n = v.len() / r;
    let mut count = vec![0usize; n + 1];
    let mut first = vec![usize::MAX; n + 1];
    let mut last = vec![0; n + 1];
    for (i, &x) in v.iter().enumerate() {
        if x == 0 || x > n {
            return false;
        }
        count[x] += 1;
        first[x] = first[x].min(i);
        last[x] = i;
    }
    (1..=n).all(|j| count[j] == r && v[first[j]..=last[j]].iter().all(|&x| x <= j))
}

/// An r-Stirling permutation: each of 1..n occurs r times, letters between two j's are < j.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RStirlingWord {
    values: Vec<usize>,
    r: usize,
}

impl RStirlingWord {
    pub fn new(values: Vec<usize>, r: usize) -> Result<Self> {
        if !is_stirling(&values, r) {
            return Err(invalid(format!(
                "{values:?} is not a {r}-Stirling permutation"
            )));
        }
        Ok(RStirlingWord { values, r })
    }

    pub fn parse(text: &str, r: usize) -> Result<Self> {
        Self::new(parse_multiword(text)?, r)
    }

    pub fn values(&self) -> &[usize] {
        &self.values
    }

    pub fn r(&self) -> usize {
        self.r
    }

    pub fn n(&self) -> usize {
        self.values.len() / self.r
    }

    pub fn from_permutation(p: &Permutation) -> Self {
        RStirlingWord {
            values: p.values().to_vec(),
            r: 1,
        }
    }

    pub(crate) fn from_vec_unchecked(values: Vec<usize>, r: usize) -> Self {
        debug_assert!(is_stirling(&values, r));
        RStirlingWord { values, r }
    }
}

impl fmt::Display for RStirlingWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        format_multiword(&self.values, f)
    }
}

/// True iff some i<j<k has `(v_i, v_j, v_k)` in the relative order `pattern`,
/// where `pattern` lists ranks 1..=3.
fn contains(v: &[usize], pattern: [u8; 3]) -> bool {
    (2..v.len()).any(|k| ends_with(&v[..=k], pattern))
}

/// Occurrence whose last entry is the last letter of `v`.
fn ends_with(v: &[usize], pattern: [u8; 3]) -> bool {
    let Some((&c, rest)) = v.split_last() else {
        return false;
    };
    let same = |x: usize, y: usize, px: u8, py: u8| (x < y) == (px < py) && x != y;
    for j in 1..rest.len() {
        let b = rest[j];
        if !same(b, c, pattern[1], pattern[2]) {
            continue;
        }
        for &a in &rest[..j] {
            if same(a, b, pattern[0], pattern[1]) && same(a, c, pattern[0], pattern[2]) {
                return true;
            }
        }
    }
    false
}

/// No i<j<k with v_k < v_i < v_j.
pub fn is_231_avoiding(v: &[usize]) -> bool {
    !contains(v, [2, 3, 1])
}

/// No i<j<k with v_j < v_k < v_i.
pub fn is_312_avoiding(v: &[usize]) -> bool {
    !contains(v, [3, 1, 2])
}

/// No i<j<k with v_i < v_k < v_j.
pub fn is_132_avoiding(v: &[usize]) -> bool {
    !contains(v, [1, 3, 2])
}

/// All r-Stirling permutations of size n, lexicographically.
pub fn enumerate_r_stirling(n: usize, r: usize) -> impl Iterator<Item = RStirlingWord> {
    stirling_dfs(n, r, None)
}

/// Lexicographic r-Stirling words; with `avoid`, prefixes containing the pattern are pruned.
pub(crate) fn stirling_dfs(
    n: usize,
    r: usize,
    avoid: Option<[u8; 3]>,
) -> impl Iterator<Item = RStirlingWord> {
    let len = n * r;
    Dfs::new(move |prefix: &[usize]| {
        if let Some(p) = avoid {
            if ends_with(prefix, p) {
                return Some(Vec::new());
            }
        }
        if prefix.len() == len {
            return None;
        }
        let mut count = vec![0usize; n + 1];
        for &x in prefix {
            count[x] += 1;
        }
        let open = |j: usize| count[j] > 0 && count[j] < r;
        let next = (1..=n)
            .filter(|&v| count[v] < r && (1..=n).all(|j| j == v || !open(j) || j > v))
            .collect();
        Some(next)
    })
    .map(move |values| RStirlingWord { values, r })
}

/// All permutations of [n] lexicographically, optionally avoiding a pattern
/// given as ranks, e.g. `[2, 3, 1]`.
pub fn enumerate_permutations(
    n: usize,
    avoid: Option<[u8; 3]>,
) -> impl Iterator<Item = Permutation> {
    stirling_dfs(n, 1, avoid).map(|w| Permutation(w.values))
}

/// `prod_{s=1}^{n-1} (s r + 1)`.
pub fn stirling_count(n: usize, r: usize) -> u128 {
    (1..n).map(|s| (s * r + 1) as u128).product()
}

#[cfg(test)]
mod tests {
    use super::*;

    const FIFTEEN: [&str; 15] = [
        "112233", "211233", "221133", "113223", "311223", "321123", "322113", "113322", "311322",
        "331122", "332112", "332211", "223113", "223311", "322311",
    ];

    #[test]
    fn stirling_predicate() {
        assert!(is_stirling(&parse_multiword("322311").unwrap(), 2));
        assert!(is_stirling(&parse_multiword("113322").unwrap(), 2));
        assert!(!is_stirling(&parse_multiword("1212").unwrap(), 2));
    }

    #[test]
    fn fifteen_two_stirling_words() {
        let mut got: Vec<String> = enumerate_r_stirling(3, 2).map(|w| w.to_string()).collect();
        let mut want: Vec<String> = FIFTEEN.iter().map(|s| s.to_string()).collect();
        let sorted = got.clone();
        want.sort();
        got.sort();
        assert_eq!(got, want);
        assert_eq!(sorted, want, "enumeration is lexicographic");
    }

    #[test]
    fn avoidance() {
        let w = |s| parse_multiword(s).unwrap();
        assert!(!is_231_avoiding(&w("322311")));
        assert!(is_231_avoiding(&w("332211")));
        assert!(is_231_avoiding(&w("112233")));
        let containing: Vec<_> = FIFTEEN.iter().filter(|s| !is_231_avoiding(&w(s))).collect();
        assert_eq!(containing, [&"223113", &"223311", &"322311"]);
        assert!(!is_312_avoiding(&w("312")));
        assert!(!is_132_avoiding(&w("132")));
    }

    #[test]
    fn permutation_enumeration() {
        let all: Vec<String> = enumerate_permutations(3, None)
            .map(|p| p.to_string())
            .collect();
        assert_eq!(all, ["123", "132", "213", "231", "312", "321"]);
        assert_eq!(enumerate_permutations(5, Some([2, 3, 1])).count(), 42);
        for p in enumerate_permutations(5, Some([2, 3, 1])) {
            assert!(is_231_avoiding(p.values()));
        }
    }

    #[test]
    fn multiword_formats() {
        assert_eq!(parse_multiword("10,2,1").unwrap(), vec![10, 2, 1]);
        assert!(parse_multiword("1a").is_err());
        let p: Permutation = "631245".parse().unwrap();
        assert_eq!(p.inverse().to_string(), "342561");
        assert_eq!(p.complement().to_string(), "146532");
        let big = Permutation::new((1..=10).rev().collect()).unwrap();
        assert_eq!(big.to_string(), "10,9,8,7,6,5,4,3,2,1");
    }

    #[test]
    fn counts() {
        assert_eq!(enumerate_r_stirling(4, 2).count(), 105);
        assert_eq!(enumerate_r_stirling(1, 3).count(), 1);
        assert_eq!(stirling_count(5, 3), 3640);
    }
}
