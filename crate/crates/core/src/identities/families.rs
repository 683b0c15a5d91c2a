use std::collections::HashMap;

use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::objects::{enumerate_nc, enumerate_permutations, enumerate_symmetric, SymmetricPath};
use crate::qpoly::{q_binomial, q_int, LaurentPoly, Monomial, Var};
use crate::statistics::{des_set, maj, nc_maj, sym_maj, DescentConvention};

/// Summation bounds for the Narayana-type recurrences.
///
/// `Printed` keeps the inner range `s = 0..j-1` as displayed, which drops the
/// `j = 0, s = 0` term. `Corrected` sums `s` over `0..r-1` and relies on the
/// vanishing conventions instead.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Bounds {
    Corrected,
    Printed,
}

/// Last letter of a symmetric half-word.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Sign {
    Plus,
    Minus,
}

fn binom2(n: i64) -> i64 {
    n * (n - 1) / 2
}

fn q(e: i64) -> LaurentPoly {
    LaurentPoly::q_pow(e)
}

/// Memoized evaluators for every polynomial family. One cache per worker.
#[derive(Debug, Default)]
pub struct Families {
    catalan: Vec<LaurentPoly>,
    fuss_prime: HashMap<(usize, usize), LaurentPoly>,
    e_general: HashMap<(usize, usize), LaurentPoly>,
    narayana: HashMap<(i64, i64), LaurentPoly>,
    n_rec: HashMap<(Bounds, i64, i64), LaurentPoly>,
    n2_rec: HashMap<(Bounds, i64, i64), LaurentPoly>,
    n3: HashMap<(i64, i64), LaurentPoly>,
    n3k: HashMap<(i64, i64, i64), LaurentPoly>,
    n3_minus: HashMap<(i64, i64, i64), LaurentPoly>,
}

impl Families {
    pub fn new() -> Self {
        Self::default()
    }

    /// `C_{n+1} = sum_k C_k C_{n-k} q^{(k+1)(n-k)}`, `C_0 = 1`.
    pub fn catalan(&mut self, n: usize) -> LaurentPoly {
        if self.catalan.is_empty() {
            self.catalan.push(LaurentPoly::one());
        }
        while self.catalan.len() <= n {
            let m = self.catalan.len() - 1;
            let mut next = LaurentPoly::zero();
            for k in 0..=m {
                let e = ((k + 1) * (m - k)) as i64;
                next += (&self.catalan[k] * &self.catalan[m - k]).mul_monomial(&Monomial::q(e));
            }
            self.catalan.push(next);
        }
        self.catalan[n].clone()
    }

    /// `C'_n = sum_{l_0 + ... + l_r = n-1} prod_i C'_{l_i} q^{sum_j j l_j}`.
    fn fuss_prime(&mut self, n: usize, r: usize) -> LaurentPoly {
        if n == 0 {
            return LaurentPoly::one();
        }
        if let Some(p) = self.fuss_prime.get(&(n, r)) {
            return p.clone();
        }
        let m = n - 1;
        let base: Vec<LaurentPoly> = (0..=m).map(|l| self.fuss_prime(l, r)).collect();
        // acc[s] collects the products over the first parts summing to s
        let mut acc = base.clone();
        for j in 1..=r {
            let mut next = vec![LaurentPoly::zero(); m + 1];
            for (s, a) in acc.iter().enumerate() {
                if a.is_zero() {
                    continue;
                }
                for l in 0..=m - s {
                    next[s + l] += (a * &base[l]).mul_monomial(&Monomial::q((j * l) as i64));
                }
            }
            acc = next;
        }
        let p = acc.swap_remove(m);
        self.fuss_prime.insert((n, r), p.clone());
        p
    }

    /// `C^{(r)}_n(q) = q^{r C(n,2)} C'_n(1/q)`.
    pub fn fuss_catalan(&mut self, n: usize, r: usize) -> LaurentPoly {
        self.fuss_prime(n, r)
            .reverse_q((r as i64) * binom2(n as i64))
    }

    /// `E_n(q) = [2n choose n] / [n+1]`.
    pub fn e_poly(&mut self, n: usize) -> Result<LaurentPoly> {
        q_binomial(2 * n as i64, n as i64).exact_div(&q_int(n + 1))
    }

    /// `E^{(r)}_n(x; a, b)` by the first-return decomposition.
    pub fn e_r_general(&mut self, n: usize, r: usize) -> LaurentPoly {
        if n == 0 {
            return LaurentPoly::one();
        }
        if let Some(p) = self.e_general.get(&(n, r)) {
            return p.clone();
        }
        let m = n - 1;
        let lower: Vec<LaurentPoly> = (0..=m).map(|k| self.e_r_general(k, r)).collect();
        let mut total = LaurentPoly::zero();
        let mut parts = vec![0usize; r + 1];
        compositions(m, &mut parts, 0, &mut |parts| {
            let ax = Monomial::var(Var::A, 1).times(&Monomial::var(Var::X, 1));
            let mut term = lower[parts[0]].substitute_x(&ax);
            let mut before = parts[0];
            for i in 1..=r {
                let shift = Monomial::var(Var::A, (1 + before) as i64)
                    .times(&Monomial::var(Var::B, (i + r * before) as i64));
                let image = shift.times(&Monomial::var(Var::X, 1));
                let mut factor = lower[parts[i]].substitute_x(&image);
                if parts[i] > 0 {
                    factor = factor.mul_monomial(&image);
                }
                term = &term * &factor;
                before += parts[i];
            }
            total += term;
        });
        self.e_general.insert((n, r), total.clone());
        total
    }

    /// `E^{(r)}_n(q)`: the specialization `a = b = q`, `x = 1`.
    pub fn e_r_poly(&mut self, n: usize, r: usize) -> LaurentPoly {
        self.e_r_general(n, r)
            .substitute(Var::A, &Monomial::q(1))
            .substitute(Var::B, &Monomial::q(1))
            .substitute(Var::X, &Monomial::ONE)
    }

    /// `N(n, r) = [n choose r] [n choose r+1] q^{r(r+1)} / [n]`, with `N(0, 0) = 1`.
    pub fn narayana(&mut self, n: i64, r: i64) -> Result<LaurentPoly> {
        if n < 0 || r < 0 {
            return Ok(LaurentPoly::zero());
        }
        if n == 0 {
            return Ok(if r == 0 {
                LaurentPoly::one()
            } else {
                LaurentPoly::zero()
            });
        }
        if let Some(p) = self.narayana.get(&(n, r)) {
            return Ok(p.clone());
        }
        let num =
            (&q_binomial(n, r) * &q_binomial(n, r + 1)).mul_monomial(&Monomial::q(r * (r + 1)));
        let p = num.exact_div(&q_int(n as usize))?;
        self.narayana.insert((n, r), p.clone());
        Ok(p)
    }

    /// `N(n,r) = q^r N(n-1,r) + sum_j sum_s N(j,s) N(n-1-j,r-s-1) q^{2(j+1)(r-s)+s}`.
    pub fn narayana_rec(&mut self, n: i64, r: i64, bounds: Bounds) -> LaurentPoly {
        self.narayana_like(n, r, bounds, false)
    }

    /// `N_2(n,r) = q^{2r} N_2(n-1,r) + sum_j sum_s N_2(j,s) N_2(n-j-1,r-s-1) q^{2(j+1)(r-s)-j+2s}`.
    pub fn n2_rec(&mut self, n: i64, r: i64, bounds: Bounds) -> LaurentPoly {
        self.narayana_like(n, r, bounds, true)
    }

    fn narayana_like(&mut self, n: i64, r: i64, bounds: Bounds, second: bool) -> LaurentPoly {
        if n < 0 || r < 0 {
            return LaurentPoly::zero();
        }
        if n == 0 {
            return if r == 0 {
                LaurentPoly::one()
            } else {
                LaurentPoly::zero()
            };
        }
        if bounds == Bounds::Corrected && r >= n {
            return LaurentPoly::zero();
        }
        let key = (bounds, n, r);
        let cached = if second {
            self.n2_rec.get(&key)
        } else {
            self.n_rec.get(&key)
        };
        if let Some(p) = cached {
            return p.clone();
        }
        let lead = if second { 2 * r } else { r };
        let mut total = self
            .narayana_like(n - 1, r, bounds, second)
            .mul_monomial(&Monomial::q(lead));
        for j in 0..=n - 2 {
            let s_max = match bounds {
                Bounds::Corrected => r - 1,
                Bounds::Printed => j - 1,
            };
            for s in 0..=s_max {
                let left = self.narayana_like(j, s, bounds, second);
                if left.is_zero() {
                    continue;
                }
                let right = self.narayana_like(n - j - 1, r - s - 1, bounds, second);
                if right.is_zero() {
                    continue;
                }
                let e = if second {
                    2 * (j + 1) * (r - s) - j + 2 * s
                } else {
                    2 * (j + 1) * (r - s) + s
                };
                total += (&left * &right).mul_monomial(&Monomial::q(e));
            }
        }
        let slot = if second {
            &mut self.n2_rec
        } else {
            &mut self.n_rec
        };
        slot.insert(key, total.clone());
        total
    }

    /// `N_3(n,r) = q^r N_3(n-1,r) + sum_{j=1}^n sum_{s=0}^{j-1} N(j-1,s) N_3(n-j,r-s-1) q^{2j(r-s)+s}`.
    pub fn n3(&mut self, n: i64, r: i64) -> Result<LaurentPoly> {
        if n < 0 || r < 0 {
            return Ok(LaurentPoly::zero());
        }
        if n == 0 {
            return Ok(if r == 0 {
                LaurentPoly::one()
            } else {
                LaurentPoly::zero()
            });
        }
        if let Some(p) = self.n3.get(&(n, r)) {
            return Ok(p.clone());
        }
        let mut total = self.n3(n - 1, r)?.mul_monomial(&Monomial::q(r));
        for j in 1..=n {
            for s in 0..j.min(r) {
                let left = self.narayana(j - 1, s)?;
                let right = self.n3(n - j, r - s - 1)?;
                total += (&left * &right).mul_monomial(&Monomial::q(2 * j * (r - s) + s));
            }
        }
        self.n3.insert((n, r), total.clone());
        Ok(total)
    }

    /// `N_3(n,r,k) = q^r N_3(n-1,r,k-1) + sum_j sum_s N(j-1,s) N_3(n-j,r-s-1,k) q^{2j(r-s)+s}`.
    pub fn n3k(&mut self, n: i64, r: i64, k: i64) -> Result<LaurentPoly> {
        if n < 0 || r < 0 || k < 0 {
            return Ok(LaurentPoly::zero());
        }
        if n == 0 {
            let one = r == 0 && k == 0;
            return Ok(if one {
                LaurentPoly::one()
            } else {
                LaurentPoly::zero()
            });
        }
        if let Some(p) = self.n3k.get(&(n, r, k)) {
            return Ok(p.clone());
        }
        let mut total = self.n3k(n - 1, r, k - 1)?.mul_monomial(&Monomial::q(r));
        for j in 1..=n {
            for s in 0..j.min(r) {
                let left = self.narayana(j - 1, s)?;
                let right = self.n3k(n - j, r - s - 1, k)?;
                total += (&left * &right).mul_monomial(&Monomial::q(2 * j * (r - s) + s));
            }
        }
        self.n3k.insert((n, r, k), total.clone());
        Ok(total)
    }

    /// `[n choose r][n choose r-1][n-r choose k] q^{r(r+1)+2(n-r-k)} / [n choose k+1]`.
    ///
    /// The ratio is 0/0 for `r = 0` and for `k >= n`; those cases are `δ_{k,n}` and 0.
    pub fn n3k_closed(&mut self, n: i64, r: i64, k: i64) -> Result<LaurentPoly> {
        if n < 0 || r < 0 || k < 0 {
            return Ok(LaurentPoly::zero());
        }
        if r == 0 {
            return Ok(if k == n {
                LaurentPoly::one()
            } else {
                LaurentPoly::zero()
            });
        }
        if k >= n || k > n - r {
            return Ok(LaurentPoly::zero());
        }
        let num = &(&q_binomial(n, r) * &q_binomial(n, r - 1)) * &q_binomial(n - r, k);
        let num = num.mul_monomial(&Monomial::q(r * (r + 1) + 2 * (n - r - k)));
        num.exact_div(&q_binomial(n, k + 1))
    }

    /// `N_{3,+}(n,r,k) = N_3(n-1,r,k-1)` and
    /// `N_{3,-}(n,r,k) = q^{2n-k} N_3(n-1,r-1,k) + q N_{3,-}(n,r,k+1)`.
    pub fn n3_split(&mut self, sign: Sign, n: i64, r: i64, k: i64) -> Result<LaurentPoly> {
        if n <= 0 || r < 0 || k < 0 {
            return Ok(LaurentPoly::zero());
        }
        match sign {
            Sign::Plus => self.n3k(n - 1, r, k - 1),
            Sign::Minus => {
                if k >= n {
                    return Ok(LaurentPoly::zero());
                }
                if let Some(p) = self.n3_minus.get(&(n, r, k)) {
                    return Ok(p.clone());
                }
                let head = self
                    .n3k(n - 1, r - 1, k)?
                    .mul_monomial(&Monomial::q(2 * n - k));
                let tail = self
                    .n3_split(Sign::Minus, n, r, k + 1)?
                    .mul_monomial(&Monomial::q(1));
                let p = head + tail;
                self.n3_minus.insert((n, r, k), p.clone());
                Ok(p)
            }
        }
    }
}

/// Calls `f` on every weak composition of `m` into `parts.len()` parts, in lexicographic order.
pub(crate) fn compositions(m: usize, parts: &mut [usize], at: usize, f: &mut impl FnMut(&[usize])) {
    if at + 1 == parts.len() {
        parts[at] = m;
        f(parts);
        return;
    }
    for v in 0..=m {
        parts[at] = v;
        compositions(m - v, parts, at + 1, f);
    }
}

pub fn catalan_c(n: usize) -> LaurentPoly {
    Families::new().catalan(n)
}

pub fn fuss_catalan_c(n: usize, r: usize) -> LaurentPoly {
    Families::new().fuss_catalan(n, r)
}

pub fn e_poly(n: usize) -> Result<LaurentPoly> {
    Families::new().e_poly(n)
}

pub fn e_r_general(n: usize, r: usize) -> LaurentPoly {
    Families::new().e_r_general(n, r)
}

pub fn e_r_poly(n: usize, r: usize) -> LaurentPoly {
    Families::new().e_r_poly(n, r)
}

pub fn narayana(n: usize, r: usize) -> Result<LaurentPoly> {
    Families::new().narayana(n as i64, r as i64)
}

/// `N_2(n, r)`: the nc_maj distribution over non-crossing partitions of rank r.
pub fn n2_poly(n: usize, r: usize) -> LaurentPoly {
    let mut p = LaurentPoly::zero();
    for pi in enumerate_nc(n).filter(|pi| pi.rank() == r) {
        p += q(nc_maj(&pi) as i64);
    }
    p
}

pub fn n3_poly(n: usize, r: usize) -> Result<LaurentPoly> {
    Families::new().n3(n as i64, r as i64)
}

pub fn n3k_poly(n: usize, r: usize, k: usize) -> Result<LaurentPoly> {
    Families::new().n3k(n as i64, r as i64, k as i64)
}

pub fn n3k_closed(n: usize, r: usize, k: usize) -> Result<LaurentPoly> {
    Families::new().n3k_closed(n as i64, r as i64, k as i64)
}

pub fn n3pm_poly(sign: Sign, n: usize, r: usize, k: usize) -> Result<LaurentPoly> {
    Families::new().n3_split(sign, n as i64, r as i64, k as i64)
}

fn sym_descents(s: &SymmetricPath) -> usize {
    des_set(s.letters(), DescentConvention::Symmetric).len()
}

/// Sum of `q^maj` over symmetric paths of size n with r descents and k half-arches,
/// optionally restricted by the last letter of the half-word.
pub fn n3k_enum(n: usize, r: usize, k: usize, sign: Option<Sign>) -> LaurentPoly {
    let mut p = LaurentPoly::zero();
    for s in enumerate_symmetric(n) {
        if sym_descents(&s) != r || s.half_arches().len() != k {
            continue;
        }
        let last = s.letters().last().copied();
        let keep = match sign {
            None => true,
            Some(Sign::Plus) => last == Some(0),
            Some(Sign::Minus) => last == Some(1),
        };
        if keep {
            p += q(sym_maj(&s) as i64);
        }
    }
    p
}

/// `A(q,t) = sum over 312-avoiding σ of q^{maj σ} t^{maj σ^{-1}}`.
pub fn aqt(n: usize) -> LaurentPoly {
    let mut p = LaurentPoly::zero();
    for s in enumerate_permutations(n, Some([3, 1, 2])) {
        let a = maj(s.values(), DescentConvention::Standard) as i64;
        let b = maj(s.inverse().values(), DescentConvention::Standard) as i64;
        p += LaurentPoly::monomial(Monomial::q(a).times(&Monomial::var(Var::T, b)));
    }
    p
}
