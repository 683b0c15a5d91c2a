use std::fmt;

use num_bigint::BigInt;
use num_traits::One;

use super::{LaurentPoly, Monomial};
use crate::error::{Error, Result};

/// Power series in z with Laurent-polynomial coefficients, truncated after `z^order`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TruncSeries {
    order: usize,
    coeffs: Vec<LaurentPoly>,
}

impl TruncSeries {
    pub fn zero(order: usize) -> Self {
        TruncSeries {
            order,
            coeffs: vec![LaurentPoly::zero(); order + 1],
        }
    }

    pub fn one(order: usize) -> Self {
        Self::monomial(LaurentPoly::one(), 0, order)
    }

    /// `c z^k`, or zero when `k` is beyond the truncation order.
    pub fn monomial(c: LaurentPoly, k: usize, order: usize) -> Self {
        let mut s = Self::zero(order);
        if k <= order {
            s.coeffs[k] = c;
        }
        s
    }

    /// `1 + c z^k`.
    pub fn one_plus(c: LaurentPoly, k: usize, order: usize) -> Self {
        let mut s = Self::one(order);
        s.add_at(k, &c);
        s
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn coeff(&self, k: usize) -> &LaurentPoly {
        &self.coeffs[k]
    }

    pub fn coeffs(&self) -> &[LaurentPoly] {
        &self.coeffs
    }

    pub fn add_at(&mut self, k: usize, c: &LaurentPoly) {
        if k <= self.order {
            self.coeffs[k] += c;
        }
    }

    pub fn truncate(&self, order: usize) -> Self {
        let order = order.min(self.order);
        TruncSeries {
            order,
            coeffs: self.coeffs[..=order].to_vec(),
        }
    }

    pub fn add(&self, other: &TruncSeries) -> TruncSeries {
        let order = self.order.min(other.order);
        TruncSeries {
            order,
            coeffs: (0..=order)
                .map(|k| &self.coeffs[k] + &other.coeffs[k])
                .collect(),
        }
    }

    pub fn sub(&self, other: &TruncSeries) -> TruncSeries {
        let order = self.order.min(other.order);
        TruncSeries {
            order,
            coeffs: (0..=order)
                .map(|k| &self.coeffs[k] - &other.coeffs[k])
                .collect(),
        }
    }

    pub fn mul(&self, other: &TruncSeries) -> TruncSeries {
        let order = self.order.min(other.order);
        let mut out = Self::zero(order);
        for i in 0..=order {
            if self.coeffs[i].is_zero() {
                continue;
            }
            for j in 0..=order - i {
                if other.coeffs[j].is_zero() {
                    continue;
                }
                out.coeffs[i + j] += &self.coeffs[i] * &other.coeffs[j];
            }
        }
        out
    }

    pub fn scale(&self, c: &LaurentPoly) -> TruncSeries {
        TruncSeries {
            order: self.order,
            coeffs: self.coeffs.iter().map(|x| x * c).collect(),
        }
    }

    /// Multiplicative inverse; the constant term must be 1 or -1.
    pub fn inverse(&self) -> Result<TruncSeries> {
        let c0 = &self.coeffs[0];
        let unit = if *c0 == LaurentPoly::one() {
            BigInt::one()
        } else if *c0 == -LaurentPoly::one() {
            -BigInt::one()
        } else {
            return Err(Error::Domain(format!("constant term {c0} is not a unit")));
        };
        let mut inv = Self::zero(self.order);
        inv.coeffs[0] = LaurentPoly::constant(unit.clone());
        for k in 1..=self.order {
            let mut acc = LaurentPoly::zero();
            for j in 1..=k {
                acc += &self.coeffs[j] * &inv.coeffs[k - j];
            }
            inv.coeffs[k] = (-acc).scale(&unit);
        }
        Ok(inv)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    /// First index where the two series differ, if any.
    pub fn first_difference(&self, other: &TruncSeries) -> Option<usize> {
        let order = self.order.min(other.order);
        (0..=order).find(|&k| self.coeffs[k] != other.coeffs[k])
    }
}

/// `prod_{i in range} (1 + f(i) z^k)`, truncated.
pub fn sprod_range(
    range: impl IntoIterator<Item = i64>,
    k: usize,
    order: usize,
    f: impl Fn(i64) -> LaurentPoly,
) -> TruncSeries {
    range.into_iter().fold(TruncSeries::one(order), |acc, i| {
        acc.mul(&TruncSeries::one_plus(f(i), k, order))
    })
}

/// `1 / prod_{i in range} (1 + f(i) z)`, expanding each factor as a geometric series.
pub fn sprod_range_inverse(
    range: impl IntoIterator<Item = i64>,
    order: usize,
    f: impl Fn(i64) -> LaurentPoly,
) -> TruncSeries {
    range.into_iter().fold(TruncSeries::one(order), |acc, i| {
        let c = -f(i);
        let mut geo = TruncSeries::zero(order);
        let mut pw = LaurentPoly::one();
        for k in 0..=order {
            geo.coeffs[k] = pw.clone();
            pw = &pw * &c;
        }
        acc.mul(&geo)
    })
}

/// `z` as a truncated series.
pub fn z(order: usize) -> TruncSeries {
    TruncSeries::monomial(LaurentPoly::one(), 1, order)
}

/// `c * q^e` shorthand used by product formulas.
pub fn qterm(c: i64, e: i64) -> LaurentPoly {
    LaurentPoly::term(c, Monomial::q(e))
}

impl fmt::Display for TruncSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                f.write_str(" + ")?;
            }
            first = false;
            write!(f, "({c})*z^{k}")?;
        }
        if first {
            f.write_str("0")?;
        }
        write!(f, " + O(z^{})", self.order + 1)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn inverse_of_one_plus_qz() {
        let s = TruncSeries::one_plus(qterm(1, 1), 1, 4);
        let inv = s.inverse().unwrap();
        assert_eq!(inv.coeff(3), &qterm(-1, 3));
        assert_eq!(s.mul(&inv), TruncSeries::one(4));
        let geo = sprod_range_inverse([1], 4, |i| qterm(1, i));
        assert_eq!(geo, inv);
    }

    #[test]
    fn product_truncates() {
        let p = sprod_range(0..3, 2, 3, |i| qterm(-1, i));
        assert_eq!(p.coeff(2).to_string(), "-1 - q - q^2");
        assert!(p.coeff(3).is_zero());
    }

    #[test]
    fn non_unit_constant_has_no_inverse() {
        let s = TruncSeries::monomial(LaurentPoly::constant(2), 0, 3);
        assert!(s.inverse().is_err());
    }
}
