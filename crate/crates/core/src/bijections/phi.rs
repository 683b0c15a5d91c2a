use crate::error::{Error, Result};
use crate::objects::RStirlingWord;
use crate::statistics::inv;

/// `inv(w) / r` on a Stirling word over an arbitrary set of values.
fn inv_r(w: &[usize], r: usize) -> usize {
    inv(w) / r
}

/// MAJ on a Stirling word over an arbitrary set of values.
fn maj_r(w: &[usize], r: usize) -> usize {
    let bound = w.len().saturating_sub(r);
    (1..=bound)
        .filter(|&j| w[j - 1] > w[j] && w[j..j + r].iter().all(|&x| x == w[j]))
        .sum()
}

fn with_block(w: &[usize], at: usize, m: usize, r: usize) -> Vec<usize> {
    let mut out = w.to_vec();
    out.splice(at..at, std::iter::repeat_n(m, r));
    out
}

/// Removes the block of the smallest letter; returns (letter, letters before it, remainder).
fn strip_min(w: &[usize], r: usize) -> (usize, usize, Vec<usize>) {
    let m = *w.iter().min().expect("non-empty word");
    let at = w.iter().position(|&x| x == m).unwrap_or(0);
    let mut rest = w[..at].to_vec();
    rest.extend_from_slice(&w[at + r..]);
    (m, at, rest)
}

fn phi_rec(w: &[usize], r: usize, trace: &mut Vec<(Vec<usize>, Vec<usize>)>) -> Result<Vec<usize>> {
    if w.len() <= r {
        trace.push((w.to_vec(), w.to_vec()));
        return Ok(w.to_vec());
    }
    let (m, _, rest) = strip_min(w, r);
    let image = phi_rec(&rest, r, trace)?;
    let q = maj_r(w, r) as i64 - maj_r(&rest, r) as i64;
    let base = inv_r(&image, r) as i64;
    let gap = (0..=image.len())
        .find(|&g| inv_r(&with_block(&image, g, m, r), r) as i64 - base == q)
        .ok_or_else(|| Error::Internal(format!("no gap of Φ({rest:?}) raises INV by {q}")))?;
    let out = with_block(&image, gap, m, r);
    trace.push((w.to_vec(), out.clone()));
    Ok(out)
}

/// Foata-type map with `INV(Φ(v)) = MAJ(v)`.
pub fn phi(v: &RStirlingWord) -> Result<RStirlingWord> {
    let image = match phi_trace(v)?.pop() {
        Some((_, w)) => w,
        None => Vec::new(),
    };
    Ok(RStirlingWord::from_vec_unchecked(image, v.r()))
}

/// Pairs (restriction of v to its largest letters, its image), from one letter up to all of v.
pub fn phi_trace(v: &RStirlingWord) -> Result<Vec<(Vec<usize>, Vec<usize>)>> {
    let mut trace = Vec::new();
    if !v.values().is_empty() {
        phi_rec(v.values(), v.r(), &mut trace)?;
    }
    Ok(trace)
}

fn phi_inv_rec(w: &[usize], r: usize) -> Result<Vec<usize>> {
    if w.len() <= r {
        return Ok(w.to_vec());
    }
    let (m, gap, rest) = strip_min(w, r);
    let pre = phi_inv_rec(&rest, r)?;
    let base = maj_r(&pre, r);
    let at = (0..=pre.len())
        .find(|&i| maj_r(&with_block(&pre, i, m, r), r) == base + gap)
        .ok_or_else(|| Error::Internal(format!("no gap of {pre:?} raises MAJ by {gap}")))?;
    Ok(with_block(&pre, at, m, r))
}

pub fn phi_inv(w: &RStirlingWord) -> Result<RStirlingWord> {
    Ok(RStirlingWord::from_vec_unchecked(
        phi_inv_rec(w.values(), w.r())?,
        w.r(),
    ))
}
