use serde::Serialize;

use crate::error::{Error, Result};
use crate::objects::{BinaryWord, NonCrossingPartition, Permutation, RDyckPath};

/// `L_i = #{j > i : μ_j < μ_i}`.
pub fn lehmer_code(p: &Permutation) -> Vec<usize> {
    let v = p.values();
    (0..v.len())
        .map(|i| v[i + 1..].iter().filter(|&&x| x < v[i]).count())
        .collect()
}

pub fn from_lehmer_code(code: &[usize]) -> Result<Permutation> {
    let n = code.len();
    let mut pool: Vec<usize> = (1..=n).collect();
    let mut out = Vec::with_capacity(n);
    for (i, &a) in code.iter().enumerate() {
        if a >= pool.len() {
            return Err(Error::Domain(format!(
                "Lehmer entry {a} at {} exceeds {}",
                i + 1,
                n - i - 1
            )));
        }
        out.push(pool.remove(a));
    }
    Permutation::new(out)
}

/// Dyck word of length 2n with up-down peaks at `peaks` and down-up valleys at `valleys`
/// (positions of the first letter of each `01` resp. `10`).
pub fn path_from_peaks_valleys(n: usize, peaks: &[usize], valleys: &[usize]) -> Result<RDyckPath> {
    if n == 0 && peaks.is_empty() && valleys.is_empty() {
        return RDyckPath::new(BinaryWord::from_vec_unchecked(Vec::new()), 1);
    }
    if peaks.len() != valleys.len() + 1 {
        return Err(Error::Domain("need one more peak than valleys".into()));
    }
    let mut w = Vec::with_capacity(2 * n);
    let mut at = 0;
    for (k, &p) in peaks.iter().enumerate() {
        let end = valleys.get(k).copied().unwrap_or(2 * n);
        if p < at || end < p {
            return Err(Error::Domain("peaks and valleys do not interleave".into()));
        }
        w.extend(std::iter::repeat_n(0, p - at));
        w.extend(std::iter::repeat_n(1, end - p));
        at = end;
    }
    RDyckPath::new(BinaryWord::from_vec_unchecked(w), 1)
}

/// Every stage of π ↦ d(π) ↦ μ ↦ σ.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Nc312Trace {
    pub minima: Vec<usize>,
    pub maxima: Vec<usize>,
    pub peaks: Vec<usize>,
    pub valleys: Vec<usize>,
    pub path: String,
    pub lehmer: Vec<usize>,
    pub mu: String,
    pub sigma: String,
}

pub fn nc_to_312_trace(pi: &NonCrossingPartition) -> Result<(Permutation, Nc312Trace)> {
    let n = pi.n();
    let mut xs: Vec<usize> = pi.blocks().iter().map(|b| b[0]).collect();
    let mut ys: Vec<usize> = pi.blocks().iter().map(|b| b[b.len() - 1]).collect();
    xs.sort_unstable();
    ys.sort_unstable();
    let m = xs.len();
    let peaks: Vec<usize> = (0..m).map(|k| xs[k] + ys[k] - 1).collect();
    let valleys: Vec<usize> = (0..m.saturating_sub(1))
        .map(|k| xs[k + 1] + ys[k] - 1)
        .collect();
    let d = path_from_peaks_valleys(n, &peaks, &valleys)?;
    let mut ones_before_zero = Vec::with_capacity(n);
    let mut ones = 0;
    for &b in d.letters() {
        if b == 0 {
            ones_before_zero.push(ones);
        } else {
            ones += 1;
        }
    }
    let code: Vec<usize> = (1..=n).map(|i| ones_before_zero[n - i]).collect();
    let mu = from_lehmer_code(&code)?;
    let sigma = mu.inverse().complement();
    let trace = Nc312Trace {
        minima: xs,
        maxima: ys,
        peaks,
        valleys,
        path: d.to_string(),
        lehmer: code,
        mu: mu.to_string(),
        sigma: sigma.to_string(),
    };
    Ok((sigma, trace))
}

/// The 312-avoiding permutation σ attached to a non-crossing partition.
pub fn nc_to_312(pi: &NonCrossingPartition) -> Result<Permutation> {
    nc_to_312_trace(pi).map(|(s, _)| s)
}

/// Inverse of [`nc_to_312`]: σ ↦ μ ↦ d ↦ (minima, maxima) ↦ π.
pub fn nc_from_312(sigma: &Permutation) -> Result<NonCrossingPartition> {
    let n = sigma.n();
    let mu = sigma.complement().inverse();
    let code = lehmer_code(&mu);
    let mut w = Vec::with_capacity(2 * n);
    let mut ones = 0;
    for i in (1..=n).rev() {
        let a = code[i - 1];
        if a < ones {
            return Err(Error::Domain(format!("{sigma} is not 312-avoiding")));
        }
        w.extend(std::iter::repeat_n(1, a - ones));
        w.push(0);
        ones = a;
    }
    w.extend(std::iter::repeat_n(1, n - ones));
    let d = RDyckPath::new(BinaryWord::from_vec_unchecked(w), 1)?;
    let l = d.letters();
    let peaks: Vec<usize> = (1..l.len())
        .filter(|&i| l[i - 1] == 0 && l[i] == 1)
        .collect();
    let valleys: Vec<usize> = (1..l.len())
        .filter(|&i| l[i - 1] == 1 && l[i] == 0)
        .collect();
    // i_1 = 1, i_{k+1} - i_k = v_k - p_k, j_k = p_k - i_k + 1
    let mut xs = vec![1];
    for k in 0..valleys.len() {
        xs.push(xs[k] + valleys[k] - peaks[k]);
    }
    let ys: Vec<usize> = peaks.iter().zip(&xs).map(|(p, x)| p + 1 - x).collect();
    blocks_from_extremes(n, &xs, &ys)
}

/// The unique non-crossing partition with the given sorted block minima and maxima.
fn blocks_from_extremes(n: usize, xs: &[usize], ys: &[usize]) -> Result<NonCrossingPartition> {
    let mut blocks: Vec<Vec<usize>> = Vec::new();
    let mut open: Vec<usize> = Vec::new();
    let is_min = |i: usize| xs.contains(&i);
    let is_max = |i: usize| ys.contains(&i);
    for i in 1..=n {
        if is_min(i) {
            blocks.push(vec![i]);
            open.push(blocks.len() - 1);
        } else {
            let top = *open
                .last()
                .ok_or_else(|| Error::Domain("no open block".into()))?;
            blocks[top].push(i);
        }
        if is_max(i) {
            open.pop()
                .ok_or_else(|| Error::Domain("unbalanced extremes".into()))?;
        }
    }
    NonCrossingPartition::new(blocks)
}

/// `maj(σ) = Σ A(π)` and `maj(σ⁻¹) = Σ B(π)` with
/// `A = {i < n : i+1 not a block minimum}`, `B = {i < n : i not a block maximum}`.
pub fn lemma_majors(pi: &NonCrossingPartition) -> (usize, usize) {
    let n = pi.n();
    let mins: Vec<usize> = pi.blocks().iter().map(|b| b[0]).collect();
    let maxs: Vec<usize> = pi.blocks().iter().map(|b| b[b.len() - 1]).collect();
    let a = (1..n).filter(|i| !mins.contains(&(i + 1))).sum();
    let b = (1..n).filter(|i| !maxs.contains(i)).sum();
    (a, b)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::objects::{enumerate_nc, is_312_avoiding, parse_nc};
    use crate::statistics::{maj, DescentConvention};

    #[test]
    fn worked_example() {
        let pi = parse_nc("158/24/3/67").unwrap();
        let (sigma, t) = nc_to_312_trace(&pi).unwrap();
        assert_eq!(t.minima, [1, 2, 3, 6]);
        assert_eq!(t.maxima, [3, 4, 7, 8]);
        assert_eq!(t.peaks, [3, 5, 9, 13]);
        assert_eq!(t.valleys, [4, 6, 12]);
        assert_eq!(t.path, "0001010001110111");
        assert_eq!(t.lehmer, [5, 2, 2, 2, 1, 0, 0, 0]);
        assert_eq!(t.mu, "63452178");
        assert_eq!(sigma.to_string(), "34765821");
        assert_eq!(sigma.inverse().to_string(), "87125436");
        assert_eq!(maj(sigma.values(), DescentConvention::Standard), 20);
        assert_eq!(
            maj(sigma.inverse().values(), DescentConvention::Standard),
            14
        );
        assert_eq!(lemma_majors(&pi), (20, 14));
        assert_eq!(nc_from_312(&sigma).unwrap(), pi);
    }

    #[test]
    fn lehmer_round_trip() {
        let p: Permutation = "63452178".parse().unwrap();
        assert_eq!(from_lehmer_code(&lehmer_code(&p)).unwrap(), p);
    }

    #[test]
    fn small_sweep() {
        for pi in enumerate_nc(6) {
            let s = nc_to_312(&pi).unwrap();
            assert!(is_312_avoiding(s.values()));
            assert_eq!(nc_from_312(&s).unwrap(), pi);
        }
    }
}
