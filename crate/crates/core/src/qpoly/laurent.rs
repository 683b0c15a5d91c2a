use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// The five formal variables, in the order used for exponent vectors and term ordering.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Var {
    Q,
    T,
    A,
    B,
    X,
}

impl Var {
    pub const ALL: [Var; 5] = [Var::Q, Var::T, Var::A, Var::B, Var::X];

    pub fn index(self) -> usize {
        self as usize
    }

    pub fn name(self) -> &'static str {
        ["q", "t", "a", "b", "x"][self.index()]
    }

    pub fn from_name(s: &str) -> Option<Var> {
        Var::ALL.into_iter().find(|v| v.name() == s)
    }
}

/// Exponent vector over (q, t, a, b, x). Ordered graded-lexicographically.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct Monomial(pub [i64; 5]);

impl Monomial {
    pub const ONE: Monomial = Monomial([0; 5]);

    pub fn var(v: Var, e: i64) -> Monomial {
        let mut m = [0; 5];
        m[v.index()] = e;
        Monomial(m)
    }

    pub fn q(e: i64) -> Monomial {
        Monomial::var(Var::Q, e)
    }

    pub fn exp(&self, v: Var) -> i64 {
        self.0[v.index()]
    }

    pub fn total(&self) -> i64 {
        self.0.iter().sum()
    }

    pub fn times(&self, other: &Monomial) -> Monomial {
        let mut m = self.0;
        for (a, b) in m.iter_mut().zip(other.0) {
            *a += b;
        }
        Monomial(m)
    }

    pub fn pow(&self, k: i64) -> Monomial {
        Monomial(self.0.map(|e| e * k))
    }

    fn fmt_vars(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for v in Var::ALL {
            let e = self.exp(v);
            if e == 0 {
                continue;
            }
            if !first {
                f.write_str("*")?;
            }
            first = false;
            if e == 1 {
                f.write_str(v.name())?;
            } else {
                write!(f, "{}^{}", v.name(), e)?;
            }
        }
        Ok(())
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.total()
            .cmp(&other.total())
            .then_with(|| other.0.cmp(&self.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

/// Sparse Laurent polynomial in q, t, a, b, x with big-integer coefficients.
///
/// Zero coefficients are never stored, so structural equality is mathematical equality.
#[derive(Debug, Clone, PartialEq, Eq, Default, Hash)]
pub struct LaurentPoly {
    terms: BTreeMap<Monomial, BigInt>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(1)
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        Self::term(c, Monomial::ONE)
    }

    pub fn term(c: impl Into<BigInt>, m: Monomial) -> Self {
        let mut p = Self::zero();
        p.add_term(m, c.into());
        p
    }

    pub fn monomial(m: Monomial) -> Self {
        Self::term(1, m)
    }

    pub fn var(v: Var) -> Self {
        Self::monomial(Monomial::var(v, 1))
    }

    /// `q^e`.
    pub fn q_pow(e: i64) -> Self {
        Self::monomial(Monomial::q(e))
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &BigInt)> {
        self.terms.iter()
    }

    pub fn coeff(&self, m: &Monomial) -> BigInt {
        self.terms.get(m).cloned().unwrap_or_default()
    }

    pub fn add_term(&mut self, m: Monomial, c: BigInt) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(m).or_default();
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&m);
        }
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        LaurentPoly {
            terms: self.terms.iter().map(|(m, k)| (*m, k * c)).collect(),
        }
    }

    pub fn mul_monomial(&self, m: &Monomial) -> Self {
        LaurentPoly {
            terms: self
                .terms
                .iter()
                .map(|(k, c)| (k.times(m), c.clone()))
                .collect(),
        }
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }

    /// Sum of coefficients, i.e. the value at all variables equal to 1.
    pub fn eval_one(&self) -> BigInt {
        self.terms.values().sum()
    }

    pub fn max_degree(&self, v: Var) -> Option<i64> {
        self.terms.keys().map(|m| m.exp(v)).max()
    }

    pub fn min_degree(&self, v: Var) -> Option<i64> {
        self.terms.keys().map(|m| m.exp(v)).min()
    }

    /// True when only q occurs.
    pub fn is_univariate_q(&self) -> bool {
        self.terms.keys().all(|m| m.0[1..].iter().all(|&e| e == 0))
    }

    /// Replace `v` by the monomial `m` everywhere.
    pub fn substitute(&self, v: Var, m: &Monomial) -> Self {
        let mut out = Self::zero();
        for (k, c) in &self.terms {
            let d = k.exp(v);
            let mut base = *k;
            base.0[v.index()] = 0;
            out.add_term(base.times(&m.pow(d)), c.clone());
        }
        out
    }

    /// Replace x by `m`, where `m` is the image of x (typically itself containing x once).
    pub fn substitute_x(&self, m: &Monomial) -> Self {
        self.substitute(Var::X, m)
    }

    /// `q^d p(1/q)`.
    pub fn reverse_q(&self, d: i64) -> Self {
        let mut out = Self::zero();
        for (k, c) in &self.terms {
            let mut m = *k;
            m.0[0] = d - m.0[0];
            out.add_term(m, c.clone());
        }
        out
    }

    /// Dense coefficient list of a univariate polynomial in q, together with the lowest exponent.
    pub fn to_dense_q(&self) -> Result<(i64, Vec<BigInt>)> {
        if !self.is_univariate_q() {
            return Err(Error::Domain(format!("{self} is not univariate in q")));
        }
        let Some(lo) = self.min_degree(Var::Q) else {
            return Ok((0, Vec::new()));
        };
        let hi = self.max_degree(Var::Q).unwrap_or(lo);
        let mut v = vec![BigInt::zero(); (hi - lo + 1) as usize];
        for (k, c) in &self.terms {
            v[(k.0[0] - lo) as usize] = c.clone();
        }
        Ok((lo, v))
    }

    pub fn from_dense_q(lo: i64, coeffs: &[BigInt]) -> Self {
        let mut p = Self::zero();
        for (i, c) in coeffs.iter().enumerate() {
            p.add_term(Monomial::q(lo + i as i64), c.clone());
        }
        p
    }

    /// Exact division of univariate polynomials in q. Fails if the remainder is non-zero.
    pub fn exact_div(&self, divisor: &LaurentPoly) -> Result<LaurentPoly> {
        if divisor.is_zero() {
            return Err(Error::Domain("division by zero".into()));
        }
        let (nlo, mut num) = self.to_dense_q()?;
        let (dlo, den) = divisor.to_dense_q()?;
        if num.is_empty() {
            return Ok(Self::zero());
        }
        let lead = den.last().cloned().unwrap_or_default();
        if num.len() < den.len() {
            return Err(Error::NonExactDivision(self.to_string()));
        }
        let qlen = num.len() - den.len() + 1;
        let mut quot = vec![BigInt::zero(); qlen];
        for i in (0..qlen).rev() {
            let top = num[i + den.len() - 1].clone();
            if top.is_zero() {
                continue;
            }
            if !(&top % &lead).is_zero() {
                return Err(Error::NonExactDivision(self.to_string()));
            }
            let f = &top / &lead;
            for (j, d) in den.iter().enumerate() {
                num[i + j] -= &f * d;
            }
            quot[i] = f;
        }
        if num.iter().any(|c| !c.is_zero()) {
            let rem = LaurentPoly::from_dense_q(nlo, &num);
            return Err(Error::NonExactDivision(rem.to_string()));
        }
        Ok(LaurentPoly::from_dense_q(nlo - dlo, &quot))
    }

    pub fn to_json(&self) -> PolyJson {
        PolyJson {
            terms: self
                .terms
                .iter()
                .map(|(m, c)| TermJson {
                    coeff: c.to_string(),
                    exps: Var::ALL
                        .into_iter()
                        .filter(|v| m.exp(*v) != 0)
                        .map(|v| (v.name().to_string(), m.exp(v)))
                        .collect(),
                })
                .collect(),
        }
    }

    pub fn from_json(j: &PolyJson) -> Result<Self> {
        let mut p = Self::zero();
        for t in &j.terms {
            let c: BigInt = t
                .coeff
                .parse()
                .map_err(|_| Error::Domain(format!("bad coefficient {:?}", t.coeff)))?;
            let mut m = Monomial::ONE;
            for (name, e) in &t.exps {
                let v =
                    Var::from_name(name).ok_or_else(|| crate::error::unknown("variable", name))?;
                m.0[v.index()] += e;
            }
            p.add_term(m, c);
        }
        Ok(p)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TermJson {
    pub coeff: String,
    pub exps: BTreeMap<String, i64>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PolyJson {
    pub terms: Vec<TermJson>,
}

impl Serialize for LaurentPoly {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.to_json().serialize(s)
    }
}

impl<'de> Deserialize<'de> for LaurentPoly {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let j = PolyJson::deserialize(d)?;
        LaurentPoly::from_json(&j).map_err(serde::de::Error::custom)
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (i, (m, c)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            let abs = c.abs();
            match (i, neg) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            if *m == Monomial::ONE {
                write!(f, "{abs}")?;
            } else {
                if !abs.is_one() {
                    write!(f, "{abs}*")?;
                }
                m.fmt_vars(f)?;
            }
        }
        Ok(())
    }
}

impl FromStr for LaurentPoly {
    type Err = Error;

    /// Parses the text format produced by `Display`, e.g. `1 + 2*q^2 - a*b^-1*x`.
    fn from_str(s: &str) -> Result<Self> {
        let chars: Vec<(usize, char)> = s
            .char_indices()
            .filter(|(_, c)| !c.is_whitespace())
            .collect();
        let mut p = LaurentPoly::zero();
        let mut i = 0;
        let err = |i: usize| -> Error {
            match chars.get(i) {
                Some(&(index, found)) => Error::Parse { index, found },
                None => Error::Parse {
                    index: s.len(),
                    found: '\0',
                },
            }
        };
        let read_int = |i: &mut usize| -> Option<i64> {
            let start = *i;
            if matches!(chars.get(*i), Some((_, '-'))) {
                *i += 1;
            }
            while matches!(chars.get(*i), Some((_, c)) if c.is_ascii_digit()) {
                *i += 1;
            }
            let text: String = chars[start..*i].iter().map(|(_, c)| c).collect();
            text.parse().ok()
        };
        if chars.is_empty() {
            return Err(err(0));
        }
        let mut first = true;
        while i < chars.len() {
            let mut sign = BigInt::one();
            match chars[i].1 {
                '+' if !first => i += 1,
                '-' => {
                    sign = -sign;
                    i += 1;
                }
                _ if first => {}
                _ => return Err(err(i)),
            }
            first = false;
            let mut coeff = BigInt::one();
            let mut m = Monomial::ONE;
            let mut factors = 0;
            loop {
                match chars.get(i).map(|x| x.1) {
                    Some(c) if c.is_ascii_digit() => {
                        let start = i;
                        while matches!(chars.get(i), Some((_, c)) if c.is_ascii_digit()) {
                            i += 1;
                        }
                        let text: String = chars[start..i].iter().map(|(_, c)| c).collect();
                        coeff *= text.parse::<BigInt>().map_err(|_| err(start))?;
                    }
                    Some(c) => {
                        let v = Var::from_name(&c.to_string()).ok_or_else(|| err(i))?;
                        i += 1;
                        let mut e = 1;
                        if matches!(chars.get(i), Some((_, '^'))) {
                            i += 1;
                            e = read_int(&mut i).ok_or_else(|| err(i))?;
                        }
                        m.0[v.index()] += e;
                    }
                    None => return Err(err(i)),
                }
                factors += 1;
                if matches!(chars.get(i), Some((_, '*'))) {
                    i += 1;
                } else {
                    break;
                }
            }
            debug_assert!(factors > 0);
            p.add_term(m, sign * coeff);
        }
        Ok(p)
    }
}

impl From<i64> for LaurentPoly {
    fn from(c: i64) -> Self {
        LaurentPoly::constant(c)
    }
}

impl<'a> Add<&'a LaurentPoly> for &'a LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Add for LaurentPoly {
    type Output = LaurentPoly;
    fn add(mut self, rhs: LaurentPoly) -> LaurentPoly {
        self += &rhs;
        self
    }
}

impl AddAssign<&LaurentPoly> for LaurentPoly {
    fn add_assign(&mut self, rhs: &LaurentPoly) {
        for (m, c) in &rhs.terms {
            self.add_term(*m, c.clone());
        }
    }
}

impl AddAssign for LaurentPoly {
    fn add_assign(&mut self, rhs: LaurentPoly) {
        *self += &rhs;
    }
}

impl SubAssign<&LaurentPoly> for LaurentPoly {
    fn sub_assign(&mut self, rhs: &LaurentPoly) {
        for (m, c) in &rhs.terms {
            self.add_term(*m, -c.clone());
        }
    }
}

impl<'a> Sub<&'a LaurentPoly> for &'a LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl Sub for LaurentPoly {
    type Output = LaurentPoly;
    fn sub(mut self, rhs: LaurentPoly) -> LaurentPoly {
        self -= &rhs;
        self
    }
}

impl Neg for LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly {
            terms: self.terms.into_iter().map(|(m, c)| (m, -c)).collect(),
        }
    }
}

impl<'a> Mul<&'a LaurentPoly> for &'a LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = LaurentPoly::zero();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                out.add_term(ma.times(mb), ca * cb);
            }
        }
        out
    }
}

impl Mul for LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: LaurentPoly) -> LaurentPoly {
        &self * &rhs
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> LaurentPoly {
        s.parse().unwrap()
    }

    #[test]
    fn display_orders_by_degree() {
        let x = p("q^3 + 1 + 2*q^2");
        assert_eq!(x.to_string(), "1 + 2*q^2 + q^3");
        assert_eq!(p("-q + q^-1").to_string(), "q^-1 - q");
        assert_eq!(LaurentPoly::zero().to_string(), "0");
    }

    #[test]
    fn substitute_x_shifts_by_image() {
        let f = p("1 + a*b*x + a*b^2*x");
        let m = Monomial([0, 0, 1, 1, 1]);
        assert_eq!(f.substitute_x(&m), p("1 + a^2*b^2*x + a^2*b^3*x"));
    }

    #[test]
    fn exact_division() {
        let num = p("1 + 2*q + 2*q^2 + q^3");
        let den = p("1 + q");
        assert_eq!(num.exact_div(&den).unwrap(), p("1 + q + q^2"));
        assert!(matches!(
            p("1 + q^2").exact_div(&den),
            Err(Error::NonExactDivision(_))
        ));
        assert_eq!(p("q^-1 + 1").exact_div(&p("q^-1")).unwrap(), p("1 + q"));
    }

    #[test]
    fn json_round_trip() {
        let f = p("3 - 2*q^-2*t + a^4*b*x^2");
        let s = serde_json::to_string(&f).unwrap();
        let g: LaurentPoly = serde_json::from_str(&s).unwrap();
        assert_eq!(f, g);
    }

    #[test]
    fn reverse_q_reflects_degrees() {
        assert_eq!(
            p("1 + q + 2*q^2 + q^3").reverse_q(3),
            p("1 + 2*q + q^2 + q^3")
        );
    }

    #[test]
    fn cancellation_removes_terms() {
        let f = p("q + t");
        let g = &f - &p("t");
        assert_eq!(g, p("q"));
        assert_eq!(g.len(), 1);
    }
}
