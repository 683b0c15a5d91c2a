use std::fmt;

use crate::bijections::rho;
use crate::error::{invalid, unknown, Error, Result};
use crate::objects::{
    enumerate_nc, enumerate_permutations, enumerate_r_dyck, enumerate_r_stirling,
    enumerate_symmetric, is_231_avoiding, parse_nc, NonCrossingPartition, Permutation, RDyckPath,
    RStirlingWord, SymmetricPath,
};
use crate::qpoly::{LaurentPoly, Monomial, Var};
use crate::statistics::{
    alpha_beta, des_set, ides_set, inv, maj, nc_maj, nc_wtprime, r_dyck_iinv, r_dyck_inv,
    stirling_inv, stirling_maj, sym_inv, sym_inv1, sym_inv2, sym_maj, DescentConvention,
};
use crate::tilings::{build_tiling, tiling_maj, tiling_wtprime};

/// An enumerable family of objects of size n.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Family {
    Dyck { r: usize },
    Stirling { r: usize },
    Stirling231 { r: usize },
    Perm,
    Perm231,
    Perm312,
    Perm132,
    Nc,
    Symmetric,
}

impl Family {
    pub const NAMES: [&'static str; 9] = [
        "dyck",
        "stirling",
        "stirling231",
        "perm",
        "perm231",
        "perm312",
        "perm132",
        "nc",
        "sym",
    ];

    pub fn parse(name: &str, r: usize) -> Result<Family> {
        if r == 0 {
            return Err(Error::Domain("r must be at least 1".into()));
        }
        Ok(match name {
            "dyck" => Family::Dyck { r },
            "stirling" => Family::Stirling { r },
            "stirling231" => Family::Stirling231 { r },
            "perm" => Family::Perm,
            "perm231" => Family::Perm231,
            "perm312" => Family::Perm312,
            "perm132" => Family::Perm132,
            "nc" => Family::Nc,
            "sym" => Family::Symmetric,
            _ => return Err(unknown("family", name)),
        })
    }

    pub fn name(&self) -> &'static str {
        match self {
            Family::Dyck { .. } => "dyck",
            Family::Stirling { .. } => "stirling",
            Family::Stirling231 { .. } => "stirling231",
            Family::Perm => "perm",
            Family::Perm231 => "perm231",
            Family::Perm312 => "perm312",
            Family::Perm132 => "perm132",
            Family::Nc => "nc",
            Family::Symmetric => "sym",
        }
    }

    pub fn r(&self) -> usize {
        match self {
            Family::Dyck { r } | Family::Stirling { r } | Family::Stirling231 { r } => *r,
            _ => 1,
        }
    }

    /// The same family restricted to 231-avoiders, where that makes sense.
    pub fn avoiding_231(self) -> Result<Family> {
        match self {
            Family::Stirling { r } | Family::Stirling231 { r } => Ok(Family::Stirling231 { r }),
            Family::Perm | Family::Perm231 => Ok(Family::Perm231),
            other => Err(Error::Domain(format!(
                "--filter 231 does not apply to {}",
                other.name()
            ))),
        }
    }

    /// Statistic names accepted on this family.
    pub fn stats(&self) -> &'static [&'static str] {
        match self {
            Family::Dyck { .. } => &["maj", "iinv", "inv", "des", "alpha", "beta", "valleys"],
            Family::Stirling { .. } | Family::Stirling231 { .. } => &["inv", "maj"],
            Family::Perm | Family::Perm231 | Family::Perm312 | Family::Perm132 => {
                &["inv", "maj", "imaj", "des", "tmaj", "twt", "dmaj"]
            }
            Family::Nc => &["maj", "wtprime", "rank", "blocks"],
            Family::Symmetric => &["maj", "inv", "inv1", "inv2", "des", "half"],
        }
    }

    /// Objects of size n in the family's canonical order.
    pub fn objects(&self, n: usize) -> Box<dyn Iterator<Item = Object>> {
        match *self {
            Family::Dyck { r } => Box::new(enumerate_r_dyck(n, r).map(Object::Path)),
            Family::Stirling { r } => Box::new(enumerate_r_stirling(n, r).map(Object::Stirling)),
            Family::Stirling231 { r } => Box::new(
                enumerate_r_stirling(n, r)
                    .filter(|w| is_231_avoiding(w.values()))
                    .map(Object::Stirling),
            ),
            Family::Perm => Box::new(enumerate_permutations(n, None).map(Object::Perm)),
            Family::Perm231 => {
                Box::new(enumerate_permutations(n, Some([2, 3, 1])).map(Object::Perm))
            }
            Family::Perm312 => {
                Box::new(enumerate_permutations(n, Some([3, 1, 2])).map(Object::Perm))
            }
            Family::Perm132 => {
                Box::new(enumerate_permutations(n, Some([1, 3, 2])).map(Object::Perm))
            }
            Family::Nc => Box::new(enumerate_nc(n).map(Object::Nc)),
            Family::Symmetric => Box::new(enumerate_symmetric(n).map(Object::Sym)),
        }
    }

    /// Parses one object of this family from text.
    pub fn parse_object(&self, text: &str) -> Result<Object> {
        let obj = match *self {
            Family::Dyck { r } => Object::Path(RDyckPath::parse(text, r)?),
            Family::Stirling { r } | Family::Stirling231 { r } => {
                Object::Stirling(RStirlingWord::parse(text, r)?)
            }
            Family::Perm | Family::Perm231 | Family::Perm312 | Family::Perm132 => {
                Object::Perm(text.parse()?)
            }
            Family::Nc => Object::Nc(parse_nc(text)?),
            Family::Symmetric => Object::Sym(text.parse()?),
        };
        let pattern = match self {
            Family::Stirling231 { .. } | Family::Perm231 => Some(([2, 3, 1], "231")),
            Family::Perm312 => Some(([3, 1, 2], "312")),
            Family::Perm132 => Some(([1, 3, 2], "132")),
            _ => None,
        };
        if let (Some((_, name)), Object::Perm(p)) = (pattern, &obj) {
            let ok = match name {
                "231" => is_231_avoiding(p.values()),
                "312" => crate::objects::is_312_avoiding(p.values()),
                _ => crate::objects::is_132_avoiding(p.values()),
            };
            if !ok {
                return Err(invalid(format!("{p} contains {name}")));
            }
        }
        if let (Family::Stirling231 { .. }, Object::Stirling(w)) = (self, &obj) {
            if !is_231_avoiding(w.values()) {
                return Err(invalid(format!("{w} contains 231")));
            }
        }
        Ok(obj)
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Family::Dyck { r } | Family::Stirling { r } | Family::Stirling231 { r } if *r > 1 => {
                write!(f, "{}(r={r})", self.name())
            }
            _ => f.write_str(self.name()),
        }
    }
}

/// One object of any family.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Object {
    Path(RDyckPath),
    Stirling(RStirlingWord),
    Perm(Permutation),
    Nc(NonCrossingPartition),
    Sym(SymmetricPath),
}

impl fmt::Display for Object {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Object::Path(p) => p.fmt(f),
            Object::Stirling(w) => w.fmt(f),
            Object::Perm(p) => p.fmt(f),
            Object::Nc(pi) => pi.fmt(f),
            Object::Sym(s) => s.fmt(f),
        }
    }
}

/// Value of the named statistic on an object.
pub fn stat_value(name: &str, obj: &Object) -> Result<usize> {
    let std = DescentConvention::Standard;
    let v = match (obj, name) {
        (Object::Path(p), "maj") => maj(p.letters(), std),
        (Object::Path(p), "iinv") => r_dyck_iinv(p),
        (Object::Path(p), "inv") => r_dyck_inv(p),
        (Object::Path(p), "des") => des_set(p.letters(), std).len(),
        (Object::Path(p), "alpha") => alpha_beta(p.word()).0,
        (Object::Path(p), "beta") => alpha_beta(p.word()).1,
        (Object::Path(p), "valleys") => p.valleys(),
        (Object::Stirling(w), "inv") => stirling_inv(w)?,
        (Object::Stirling(w), "maj") => stirling_maj(w),
        (Object::Perm(p), "inv") => inv(p.values()),
        (Object::Perm(p), "maj") => maj(p.values(), std),
        (Object::Perm(p), "imaj") => ides_set(p, std).iter().sum(),
        (Object::Perm(p), "des") => des_set(p.values(), std).len(),
        (Object::Perm(p), "tmaj") => tiling_maj(&build_tiling(p)?),
        (Object::Perm(p), "twt") => tiling_wtprime(&build_tiling(p)?),
        (Object::Perm(p), "dmaj") => maj(rho(p)?.letters(), std),
        (Object::Nc(pi), "maj") => nc_maj(pi),
        (Object::Nc(pi), "wtprime") => nc_wtprime(pi),
        (Object::Nc(pi), "rank") => pi.rank(),
        (Object::Nc(pi), "blocks") => pi.blocks().len(),
        (Object::Sym(s), "maj") => sym_maj(s),
        (Object::Sym(s), "inv") => sym_inv(s),
        (Object::Sym(s), "inv1") => sym_inv1(s),
        (Object::Sym(s), "inv2") => sym_inv2(s),
        (Object::Sym(s), "des") => des_set(s.letters(), DescentConvention::Symmetric).len(),
        (Object::Sym(s), "half") => s.half_arches().len(),
        _ => return Err(unknown("statistic", name)),
    };
    Ok(v)
}

/// A monomial-valued statistic: each listed statistic becomes the exponent of its variable.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StatSpec(Vec<(Var, String)>);

impl StatSpec {
    /// Accepts `maj`, `q=maj,t=imaj`, or the shorthand `E` for `x=des,a=alpha,b=beta`.
    pub fn parse(text: &str) -> Result<StatSpec> {
        if text == "E" {
            return Self::parse("x=des,a=alpha,b=beta");
        }
        let mut parts = Vec::new();
        for item in text.split(',') {
            let (var, stat) = match item.split_once('=') {
                Some((v, s)) => (
                    Var::from_name(v.trim()).ok_or_else(|| unknown("variable", v))?,
                    s.trim(),
                ),
                None => (Var::Q, item.trim()),
            };
            if stat.is_empty() {
                return Err(unknown("statistic", item));
            }
            parts.push((var, stat.to_string()));
        }
        Ok(StatSpec(parts))
    }

    pub fn single(stat: &str) -> StatSpec {
        StatSpec(vec![(Var::Q, stat.to_string())])
    }

    pub fn monomial(&self, obj: &Object) -> Result<Monomial> {
        let mut m = Monomial::ONE;
        for (v, s) in &self.0 {
            m = m.times(&Monomial::var(*v, stat_value(s, obj)? as i64));
        }
        Ok(m)
    }
}

/// `sum over the family at size n` of the monomial given by `spec`.
pub fn dist(family: Family, n: usize, spec: &StatSpec) -> Result<LaurentPoly> {
    let mut p = LaurentPoly::zero();
    for obj in family.objects(n) {
        p.add_term(spec.monomial(&obj)?, 1.into());
    }
    Ok(p)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn examples() {
        let p = |s: &str| -> LaurentPoly { s.parse().unwrap() };
        let s3 = dist(Family::Stirling { r: 1 }, 3, &StatSpec::single("inv")).unwrap();
        assert_eq!(s3, p("1 + 2*q + 2*q^2 + q^3"));
        let e2 = dist(Family::Dyck { r: 2 }, 2, &StatSpec::parse("E").unwrap()).unwrap();
        assert_eq!(e2, p("1 + a*b*x + a*b^2*x"));
        let nc3 = dist(Family::Nc, 3, &StatSpec::single("maj")).unwrap();
        assert_eq!(nc3, p("1 + q^2 + q^3 + q^4 + q^6"));
        assert!(StatSpec::parse("w=maj").is_err());
        assert!(dist(Family::Nc, 3, &StatSpec::single("iinv")).is_err());
    }
}
