use std::fmt;
use std::str::FromStr;

use crate::error::{invalid, Error, Result};
use crate::objects::Dfs;

/// A non-crossing set partition of [1,n]; blocks are sorted and ordered by their minima.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct NonCrossingPartition {
    n: usize,
    blocks: Vec<Vec<usize>>,
}

impl NonCrossingPartition {
    pub fn new(mut blocks: Vec<Vec<usize>>) -> Result<Self> {
        for b in &mut blocks {
            if b.is_empty() {
                return Err(invalid("empty block"));
            }
            b.sort_unstable();
        }
        blocks.sort_unstable_by_key(|b| b[0]);
        let n: usize = blocks.iter().map(|b| b.len()).sum();
        let mut seen = vec![false; n + 1];
        for &x in blocks.iter().flatten() {
            if x == 0 || x > n || seen[x] {
                return Err(invalid(format!(
                    "blocks {blocks:?} do not partition [1,{n}]"
                )));
            }
            seen[x] = true;
        }
        if let Some((a, b, c, d)) = crossing(&blocks) {
            return Err(Error::Crossing { a, b, c, d });
        }
        Ok(NonCrossingPartition { n, blocks })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn blocks(&self) -> &[Vec<usize>] {
        &self.blocks
    }

    /// `n - #blocks`.
    pub fn rank(&self) -> usize {
        self.n - self.blocks.len()
    }

    /// Restricted-growth encoding: entry i is the index of the block holding i+1.
    pub fn rgs(&self) -> Vec<usize> {
        let mut v = vec![0; self.n];
        for (k, b) in self.blocks.iter().enumerate() {
            for &x in b {
                v[x - 1] = k;
            }
        }
        v
    }

    fn from_rgs(rgs: &[usize]) -> Self {
        let k = rgs.iter().max().map_or(0, |m| m + 1);
        let mut blocks = vec![Vec::new(); k];
        for (i, &b) in rgs.iter().enumerate() {
            blocks[b].push(i + 1);
        }
        NonCrossingPartition {
            n: rgs.len(),
            blocks,
        }
    }
}

/// Smallest witness a<b<c<d with {a,c} and {b,d} in distinct blocks.
fn crossing(blocks: &[Vec<usize>]) -> Option<(usize, usize, usize, usize)> {
    let n: usize = blocks.iter().map(|b| b.len()).sum();
    let mut owner = vec![0; n + 1];
    for (k, b) in blocks.iter().enumerate() {
        for &x in b {
            owner[x] = k;
        }
    }
    for a in 1..=n {
        for b in a + 1..=n {
            for c in b + 1..=n {
                if owner[c] != owner[a] || owner[b] == owner[a] {
                    continue;
                }
                for d in c + 1..=n {
                    if owner[d] == owner[b] {
                        return Some((a, b, c, d));
                    }
                }
            }
        }
    }
    None
}

/// Reads `134/2/58/67` or, for n > 9, `1,3,4/2/5,8/6,7/.../10,11`.
pub fn parse_nc(text: &str) -> Result<NonCrossingPartition> {
    let mut blocks = Vec::new();
    let mut offset = 0;
    for part in text.trim().split('/') {
        let block: Vec<usize> = if part.contains(',') {
            part.split(',')
                .map(|t| {
                    t.trim().parse().map_err(|_| Error::Parse {
                        index: offset,
                        found: t.chars().next().unwrap_or(','),
                    })
                })
                .collect::<Result<_>>()?
        } else {
            part.chars()
                .enumerate()
                .map(|(i, c)| {
                    c.to_digit(10).map(|d| d as usize).ok_or(Error::Parse {
                        index: offset + i,
                        found: c,
                    })
                })
                .collect::<Result<_>>()?
        };
        if block.is_empty() {
            return Err(Error::Parse {
                index: offset,
                found: '/',
            });
        }
        blocks.push(block);
        offset += part.len() + 1;
    }
    NonCrossingPartition::new(blocks)
}

impl FromStr for NonCrossingPartition {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        parse_nc(s)
    }
}

impl fmt::Display for NonCrossingPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let short = self.n <= 9;
        for (k, b) in self.blocks.iter().enumerate() {
            if k > 0 {
                f.write_str("/")?;
            }
            for (i, x) in b.iter().enumerate() {
                if i > 0 && !short {
                    f.write_str(",")?;
                }
                write!(f, "{x}")?;
            }
        }
        Ok(())
    }
}

/// All non-crossing partitions of [n], lexicographic in the restricted-growth encoding.
pub fn enumerate_nc(n: usize) -> impl Iterator<Item = NonCrossingPartition> {
    Dfs::new(move |prefix: &[usize]| {
        if prefix.len() == n {
            return None;
        }
        let blocks = prefix.iter().max().map_or(0, |m| m + 1);
        // last[k] = largest element so far in block k (1-based element labels)
        let mut last = vec![0; blocks];
        for (i, &b) in prefix.iter().enumerate() {
            last[b] = i + 1;
        }
        let mut next = Vec::new();
        for b in 0..blocks {
            // joining block b at i = prefix.len()+1 crosses iff some other block has
            // an element before last[b] and another element after it
            let m = last[b];
            let crosses = (0..blocks).filter(|&c| c != b).any(|c| {
                let before = prefix[..m - 1].contains(&c);
                let after = prefix[m..].contains(&c);
                before && after
            });
            if !crosses {
                next.push(b);
            }
        }
        next.push(blocks);
        Some(next)
    })
    .map(|rgs| NonCrossingPartition::from_rgs(&rgs))
}
