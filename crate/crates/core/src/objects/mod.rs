//! Words, paths, permutations, partitions and their ordered enumerators.

mod multiword;
mod noncrossing;
mod symmetric;
mod word;

pub use multiword::{
    enumerate_permutations, enumerate_r_stirling, is_132_avoiding, is_231_avoiding,
    is_312_avoiding, is_stirling, parse_multiword, stirling_count, word_string, Permutation,
    RStirlingWord,
};
pub use noncrossing::{enumerate_nc, parse_nc, NonCrossingPartition};
pub use symmetric::{arch_decompose, enumerate_symmetric, SymmetricPath};
pub use word::{
    enumerate_r_dyck, fuss_catalan_number, is_prime, is_r_dyck, parse_word, BinaryWord, RDyckPath,
};

use serde::{Deserialize, Serialize};

/// Lazy depth-first search over words. `extend` returns `None` for a complete word and
/// otherwise the admissible next letters in increasing order, so words come out lexicographically.
pub(crate) struct Dfs<T, F> {
    stack: Vec<Vec<T>>,
    extend: F,
}

impl<T: Copy, F: FnMut(&[T]) -> Option<Vec<T>>> Dfs<T, F> {
    pub(crate) fn new(extend: F) -> Self {
        Dfs {
            stack: vec![Vec::new()],
            extend,
        }
    }
}

impl<T: Copy, F: FnMut(&[T]) -> Option<Vec<T>>> Iterator for Dfs<T, F> {
    type Item = Vec<T>;

    fn next(&mut self) -> Option<Vec<T>> {
        while let Some(prefix) = self.stack.pop() {
            match (self.extend)(&prefix) {
                None => return Some(prefix),
                Some(children) => {
                    for c in children.into_iter().rev() {
                        let mut p = Vec::with_capacity(prefix.len() + 1);
                        p.extend_from_slice(&prefix);
                        p.push(c);
                        self.stack.push(p);
                    }
                }
            }
        }
        None
    }
}

/// JSON rendering of a single object.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ObjectRecord {
    pub family: String,
    pub r: usize,
    pub n: usize,
    pub value: String,
}
