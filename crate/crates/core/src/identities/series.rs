use super::families::Families;
use crate::error::{unknown, Result};
use crate::qpoly::{
    qterm, sprod_range, sprod_range_inverse, LaurentPoly, Monomial, TruncSeries, Var,
};

/// The defining expansions whose sum should be exactly `z`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SeriesName {
    /// `sum_{n>=1} C_{n-1} z^n (z;q)_n`.
    DefCn,
    /// `sum_{n>=0} C^{(r)}_n z^{rn+1} prod_{i=0}^{rn} (1 - q^i z^r)`.
    Cnrinsum,
    /// `sum_{n>=1} E^{(r)}_n z^n / (q^{C(n,2)} (-q^{-n} z)_n (-q z)_{rn})`.
    Einqq,
    /// `sum_{n>=1} a^{-C(n,2)} E^{(r)}_n(x;a,b) z^n / (prod_{i<=n} (1 + a^{-i} z) prod_{i<=rn} (1 + x b^i z))`.
    Einprod,
}

impl SeriesName {
    pub const ALL: [SeriesName; 4] = [
        SeriesName::DefCn,
        SeriesName::Cnrinsum,
        SeriesName::Einqq,
        SeriesName::Einprod,
    ];

    pub fn parse(name: &str) -> Result<SeriesName> {
        SeriesName::ALL
            .into_iter()
            .find(|s| s.name() == name)
            .ok_or_else(|| unknown("series", name))
    }

    pub fn name(&self) -> &'static str {
        match self {
            SeriesName::DefCn => "defCn",
            SeriesName::Cnrinsum => "Cnrinsum",
            SeriesName::Einqq => "Einqq",
            SeriesName::Einprod => "Einprod",
        }
    }

    /// Whether the expansion depends on r.
    pub fn takes_r(&self) -> bool {
        !matches!(self, SeriesName::DefCn)
    }
}

fn binom2(n: usize) -> i64 {
    (n * n.saturating_sub(1) / 2) as i64
}

/// Sums the expansion up to `z^order` with every family taken from its recurrence.
pub fn series_sum(
    fam: &mut Families,
    name: SeriesName,
    r: usize,
    order: usize,
) -> Result<TruncSeries> {
    let mut total = TruncSeries::zero(order);
    match name {
        SeriesName::DefCn => {
            for n in 1..=order {
                let c = fam.catalan(n - 1);
                let poch = sprod_range(0..n as i64, 1, order, |i| qterm(-1, i));
                total = total.add(&TruncSeries::monomial(c, n, order).mul(&poch));
            }
        }
        SeriesName::Cnrinsum => {
            let mut n = 0;
            while r * n < order {
                let c = fam.fuss_catalan(n, r);
                let prod = sprod_range(0..=(r * n) as i64, r, order, |i| qterm(-1, i));
                total = total.add(&TruncSeries::monomial(c, r * n + 1, order).mul(&prod));
                n += 1;
            }
        }
        SeriesName::Einqq => {
            for n in 1..=order {
                let e = fam.e_r_poly(n, r).mul_monomial(&Monomial::q(-binom2(n)));
                let ni = n as i64;
                let first = sprod_range_inverse(0..ni, order, |i| qterm(1, i - ni));
                let second = sprod_range_inverse(0..(r * n) as i64, order, |i| qterm(1, i + 1));
                total = total.add(&TruncSeries::monomial(e, n, order).mul(&first).mul(&second));
            }
        }
        SeriesName::Einprod => {
            for n in 1..=order {
                let e = fam
                    .e_r_general(n, r)
                    .mul_monomial(&Monomial::var(Var::A, -binom2(n)));
                let first = sprod_range_inverse(1..=n as i64, order, |i| {
                    LaurentPoly::monomial(Monomial::var(Var::A, -i))
                });
                let second = sprod_range_inverse(1..=(r * n) as i64, order, |i| {
                    LaurentPoly::monomial(Monomial::var(Var::X, 1).times(&Monomial::var(Var::B, i)))
                });
                total = total.add(&TruncSeries::monomial(e, n, order).mul(&first).mul(&second));
            }
        }
    }
    Ok(total)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qpoly::z;

    #[test]
    fn expansions_reduce_to_z() {
        let mut f = Families::new();
        assert_eq!(series_sum(&mut f, SeriesName::DefCn, 1, 8).unwrap(), z(8));
        assert_eq!(
            series_sum(&mut f, SeriesName::Cnrinsum, 2, 7).unwrap(),
            z(7)
        );
        assert_eq!(series_sum(&mut f, SeriesName::Einqq, 2, 5).unwrap(), z(5));
        assert_eq!(series_sum(&mut f, SeriesName::Einprod, 1, 4).unwrap(), z(4));
    }
}
