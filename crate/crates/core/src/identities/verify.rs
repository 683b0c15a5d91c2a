use std::cell::RefCell;
use std::fmt;

use rayon::prelude::*;
use serde::Serialize;

use super::dist::{dist, Family, StatSpec};
use super::families::{aqt, n2_poly, n3k_enum, Bounds, Families, Sign};
use super::series::{series_sum, SeriesName};
use crate::bijections::{
    kappa, kappa_inv, lemma_majors, nc_from_312, nc_to_312, phi, phi_inv, psi, psi_inv, rho,
    rho_inv,
};
use crate::error::{unknown, Result};
use crate::objects::{
    enumerate_nc, enumerate_permutations, enumerate_r_dyck, enumerate_r_stirling,
    enumerate_symmetric, fuss_catalan_number, is_231_avoiding, is_312_avoiding, stirling_count,
};
use crate::qpoly::{stirling_product, z, LaurentPoly, Monomial, Var};
use crate::statistics::{maj, nc_maj, r_dyck_inv, stirling_inv, stirling_maj, DescentConvention};
use crate::tilings::{build_tiling, tiling_maj, zigzag_maj_formula};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "UPPERCASE")]
pub enum Status {
    Pass,
    Fail,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
        })
    }
}

/// One parameter tuple of a sweep.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct Case {
    pub n: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub r: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub k: Option<usize>,
}

impl Case {
    pub fn n(n: usize) -> Case {
        Case {
            n,
            r: None,
            k: None,
        }
    }

    pub fn nr(n: usize, r: usize) -> Case {
        Case {
            n,
            r: Some(r),
            k: None,
        }
    }

    pub fn nrk(n: usize, r: usize, k: usize) -> Case {
        Case {
            n,
            r: Some(r),
            k: Some(k),
        }
    }

    fn r(&self) -> usize {
        self.r.unwrap_or(1)
    }

    fn k(&self) -> usize {
        self.k.unwrap_or(0)
    }
}

impl fmt::Display for Case {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "n={}", self.n)?;
        if let Some(r) = self.r {
            write!(f, " r={r}")?;
        }
        if let Some(k) = self.k {
            write!(f, " k={k}")?;
        }
        Ok(())
    }
}

/// The offending parameters, objects and both sides of a failed check.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Witness {
    pub case: Case,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub objects: Vec<String>,
    pub lhs: String,
    pub rhs: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerificationReport {
    pub identity: String,
    pub n_max: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub r_max: Option<usize>,
    pub status: Status,
    pub expected: Status,
    pub cases: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Witness>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<&'static str>,
}

impl VerificationReport {
    /// The outcome differs from the registered expectation.
    pub fn unexpected(&self) -> bool {
        self.status != self.expected
    }
}

impl fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} {} n<={}", self.status, self.identity, self.n_max)?;
        if let Some(r) = self.r_max {
            write!(f, " r<={r}")?;
        }
        if self.expected == Status::Fail {
            f.write_str(if self.status == Status::Fail {
                " (expected)"
            } else {
                " (expected FAIL)"
            })?;
        }
        if let Some(w) = &self.witness {
            write!(f, "\n  witness {}", w.case)?;
            if !w.objects.is_empty() {
                write!(f, " [{}]", w.objects.join(", "))?;
            }
            write!(f, "\n  lhs: {}\n  rhs: {}", w.lhs, w.rhs)?;
        }
        if let Some(note) = self.note {
            write!(f, "\n  note: {note}")?;
        }
        Ok(())
    }
}

/// Left side, right side, and the objects responsible, for a failed case.
struct Mismatch {
    objects: Vec<String>,
    lhs: String,
    rhs: String,
}

type Check = Result<Option<Mismatch>>;

fn poly_eq(lhs: &LaurentPoly, rhs: &LaurentPoly) -> Check {
    Ok((lhs != rhs).then(|| Mismatch {
        objects: Vec::new(),
        lhs: lhs.to_string(),
        rhs: rhs.to_string(),
    }))
}

fn count_eq(lhs: u128, rhs: u128) -> Check {
    Ok((lhs != rhs).then(|| Mismatch {
        objects: Vec::new(),
        lhs: lhs.to_string(),
        rhs: rhs.to_string(),
    }))
}

fn object_fail(obj: impl fmt::Display, lhs: impl fmt::Display, rhs: impl fmt::Display) -> Check {
    Ok(Some(Mismatch {
        objects: vec![obj.to_string()],
        lhs: lhs.to_string(),
        rhs: rhs.to_string(),
    }))
}

fn binom2(n: usize) -> i64 {
    (n * n.saturating_sub(1) / 2) as i64
}

fn q_at_t(p: &LaurentPoly) -> LaurentPoly {
    p.substitute(Var::T, &Monomial::q(1))
}

/// A registered theorem check.
pub struct Identity {
    pub name: &'static str,
    pub summary: &'static str,
    /// Sweeps r over 1..=r_max.
    pub uses_r: bool,
    pub expected: Status,
    pub default_n: usize,
    pub default_r: usize,
    /// Largest n that stays interactive.
    pub limit: usize,
    pub note: Option<&'static str>,
    cases: fn(usize, usize) -> Vec<Case>,
    check: fn(&mut Families, Case) -> Check,
}

fn sweep_n(from: usize) -> impl Fn(usize) -> Vec<Case> {
    move |n_max| (from..=n_max).map(Case::n).collect()
}

fn sweep_nr(n_max: usize, r_max: usize) -> Vec<Case> {
    let mut v = Vec::new();
    for n in 0..=n_max {
        for r in 1..=r_max {
            v.push(Case::nr(n, r));
        }
    }
    v
}

/// r over `0..=n + extra - 1`, clipped at 0 for n = 0.
fn sweep_n_rank(n_max: usize, extra: usize) -> Vec<Case> {
    let mut v = Vec::new();
    for n in 0..=n_max {
        for r in 0..(n + extra).max(1) {
            v.push(Case::nr(n, r));
        }
    }
    v
}

fn sweep_nrk(n_max: usize, r_from: usize) -> Vec<Case> {
    let mut v = Vec::new();
    for n in 0..=n_max {
        for r in r_from..=n {
            for k in 0..=n {
                v.push(Case::nrk(n, r, k));
            }
        }
    }
    v
}

const NOTE_BOUNDS: &str =
    "inner sum taken over s = 0..r-1 with N(0,0) = 1 and N(j,s) = 0 for s >= max(j,1)";
const NOTE_PRINTED: &str = "printed inner range s = 0..j-1 drops the j = 0, s = 0 term";
const NOTE_COR: &str =
    "swept over 0 <= r <= n-1, the range of the Narayana numbers; (n,r) = (1,1) also fails";

pub fn registry() -> Vec<Identity> {
    vec![
        Identity {
            name: "count-dyck",
            summary: "|P^r_n| = (1/(nr+1)) binom((r+1)n, n)",
            uses_r: true,
            expected: Status::Pass,
            default_n: 6,
            default_r: 3,
            limit: 12,
            note: None,
            cases: sweep_nr,
            check: |_, c| {
                count_eq(
                    enumerate_r_dyck(c.n, c.r()).count() as u128,
                    fuss_catalan_number(c.n, c.r()),
                )
            },
        },
        Identity {
            name: "count-stirling",
            summary: "|S^(r)_n| = prod (sr + 1)",
            uses_r: true,
            expected: Status::Pass,
            default_n: 5,
            default_r: 3,
            limit: 8,
            note: None,
            cases: sweep_nr,
            check: |_, c| {
                count_eq(
                    enumerate_r_stirling(c.n, c.r()).count() as u128,
                    stirling_count(c.n, c.r()),
                )
            },
        },
        Identity {
            name: "count-nc",
            summary: "|NC(n)| = C_n(1)",
            uses_r: false,
            expected: Status::Pass,
            default_n: 9,
            default_r: 1,
            limit: 12,
            note: None,
            cases: |n, _| sweep_n(0)(n),
            check: |f, c| {
                let cat = f.catalan(c.n).eval_one();
                count_eq(
                    enumerate_nc(c.n).count() as u128,
                    cat.try_into().unwrap_or(u128::MAX),
                )
            },
        },
        Identity {
            name: "count-sym",
            summary: "|Q_n| = C_{n+1}(1)",
            uses_r: false,
            expected: Status::Pass,
            default_n: 8,
            default_r: 1,
            limit: 11,
            note: None,
            cases: |n, _| sweep_n(0)(n),
            check: |f, c| {
                let cat = f.catalan(c.n + 1).eval_one();
                count_eq(
                    enumerate_symmetric(c.n).count() as u128,
                    cat.try_into().unwrap_or(u128::MAX),
                )
            },
        },
        Identity {
            name: "thm-INVMAJ",
            summary: "INV and MAJ over S^(r)_n both equal prod [jr+1]",
            uses_r: true,
            expected: Status::Pass,
            default_n: 5,
            default_r: 3,
            limit: 7,
            note: None,
            cases: sweep_nr,
            check: |_, c| {
                let fam = Family::Stirling { r: c.r() };
                let target = stirling_product(c.n, c.r());
                let by_inv = dist(fam, c.n, &StatSpec::single("inv"))?;
                if by_inv != target {
                    return poly_eq(&by_inv, &target);
                }
                poly_eq(&dist(fam, c.n, &StatSpec::single("maj"))?, &target)
            },
        },
        Identity {
            name: "phi-transport",
            summary: "INV(Φ(v)) = MAJ(v) and Φ⁻¹(Φ(v)) = v on S^(r)_n",
            uses_r: true,
            expected: Status::Pass,
            default_n: 5,
            default_r: 3,
            limit: 7,
            note: None,
            cases: sweep_nr,
            check: |_, c| {
                for v in enumerate_r_stirling(c.n, c.r()) {
                    let w = phi(&v)?;
                    let (a, b) = (stirling_inv(&w)?, stirling_maj(&v));
                    if a != b {
                        return object_fail(&v, format!("INV(Φ) = {a}"), format!("MAJ = {b}"));
                    }
                    let back = phi_inv(&w)?;
                    if back != v {
                        return object_fail(&v, format!("Φ⁻¹(Φ) = {back}"), &v);
                    }
                }
                Ok(None)
            },
        },
        Identity {
            name: "eq-iInv",
            summary: "iInv over P^r_n = C^(r)_n(q)",
            uses_r: true,
            expected: Status::Pass,
            default_n: 6,
            default_r: 3,
            limit: 9,
            note: None,
            cases: sweep_nr,
            check: |f, c| {
                let lhs = dist(Family::Dyck { r: c.r() }, c.n, &StatSpec::single("iinv"))?;
                poly_eq(&lhs, &f.fuss_catalan(c.n, c.r()))
            },
        },
        Identity {
            name: "eq-majE",
            summary: "maj over P^r_n = E^(r)_n(q)",
            uses_r: true,
            expected: Status::Pass,
            default_n: 6,
            default_r: 3,
            limit: 9,
            note: None,
            cases: sweep_nr,
            check: |f, c| {
                let lhs = dist(Family::Dyck { r: c.r() }, c.n, &StatSpec::single("maj"))?;
                poly_eq(&lhs, &f.e_r_poly(c.n, c.r()))
            },
        },
        Identity {
            name: "thm-E",
            summary: "x^|Des| a^α b^β over P^r_n = E^(r)_n(x;a,b) by recurrence",
            uses_r: true,
            expected: Status::Pass,
            default_n: 6,
            default_r: 3,
            limit: 8,
            note: Some("d1(i) = 1 + sum_{j<i} n_j and d2(i) = i + r sum_{j<i} n_j, with j from 0"),
            cases: sweep_nr,
            check: |f, c| {
                let lhs = dist(Family::Dyck { r: c.r() }, c.n, &StatSpec::parse("E")?)?;
                poly_eq(&lhs, &f.e_r_general(c.n, c.r()))
            },
        },
        Identity {
            name: "prop-231INV",
            summary: "INV over S^(r)_n(231) = q^{r C(n,2)} C^(r)_n(1/q)",
            uses_r: true,
            expected: Status::Pass,
            default_n: 5,
            default_r: 3,
            limit: 7,
            note: None,
            cases: sweep_nr,
            check: |f, c| {
                let lhs = dist(
                    Family::Stirling231 { r: c.r() },
                    c.n,
                    &StatSpec::single("inv"),
                )?;
                let rhs = f
                    .fuss_catalan(c.n, c.r())
                    .reverse_q(c.r() as i64 * binom2(c.n));
                poly_eq(&lhs, &rhs)
            },
        },
        Identity {
            name: "kappa-bij",
            summary: "κ: S^(r)_n(231) → P^r_n is a bijection with INV(v) = Inv(κ(v))",
            uses_r: true,
            expected: Status::Pass,
            default_n: 5,
            default_r: 3,
            limit: 7,
            note: None,
            cases: sweep_nr,
            check: |_, c| {
                let mut seen = std::collections::HashSet::new();
                for v in enumerate_r_stirling(c.n, c.r()).filter(|v| is_231_avoiding(v.values())) {
                    let d = kappa(&v)?;
                    let (a, b) = (stirling_inv(&v)?, r_dyck_inv(&d));
                    if a != b {
                        return object_fail(&v, format!("INV = {a}"), format!("Inv(κ) = {b}"));
                    }
                    if kappa_inv(&d)? != v || !seen.insert(d.to_string()) {
                        return object_fail(&v, format!("κ = {d}"), "not invertible");
                    }
                }
                count_eq(seen.len() as u128, fuss_catalan_number(c.n, c.r()))
            },
        },
        Identity {
            name: "eq-132inv",
            summary: "inv over S_n(132) = C_n(q)",
            uses_r: false,
            expected: Status::Pass,
            default_n: 8,
            default_r: 1,
            limit: 10,
            note: None,
            cases: |n, _| sweep_n(0)(n),
            check: |f, c| {
                poly_eq(
                    &dist(Family::Perm132, c.n, &StatSpec::single("inv"))?,
                    &f.catalan(c.n),
                )
            },
        },
        Identity {
            name: "fuss-r1",
            summary: "C^(1)_n = C_n",
            uses_r: false,
            expected: Status::Pass,
            default_n: 10,
            default_r: 1,
            limit: 16,
            note: None,
            cases: |n, _| sweep_n(0)(n),
            check: |f, c| poly_eq(&f.fuss_catalan(c.n, 1), &f.catalan(c.n)),
        },
        Identity {
            name: "thm-NCtoCat",
            summary: "nc_maj over NC(n) = [2n choose n]/[n+1]",
            uses_r: false,
            expected: Status::Pass,
            default_n: 9,
            default_r: 1,
            limit: 11,
            note: None,
            cases: |n, _| sweep_n(0)(n),
            check: |f, c| {
                poly_eq(
                    &dist(Family::Nc, c.n, &StatSpec::single("maj"))?,
                    &f.e_poly(c.n)?,
                )
            },
        },
        Identity {
            name: "narayana-maj",
            summary: "maj over Dyck paths with r valleys = N(n,r) closed form",
            uses_r: false,
            expected: Status::Pass,
            default_n: 9,
            default_r: 1,
            limit: 12,
            note: None,
            cases: |n, _| sweep_n_rank(n, 0),
            check: |f, c| {
                let mut lhs = LaurentPoly::zero();
                for p in enumerate_r_dyck(c.n, 1).filter(|p| p.valleys() == c.r()) {
                    lhs += LaurentPoly::q_pow(maj(p.letters(), DescentConvention::Standard) as i64);
                }
                poly_eq(&lhs, &f.narayana(c.n as i64, c.r() as i64)?)
            },
        },
        Identity {
            name: "narayana-sum",
            summary: "sum_r N(n,r) = E_n(q)",
            uses_r: false,
            expected: Status::Pass,
            default_n: 10,
            default_r: 1,
            limit: 16,
            note: None,
            cases: |n, _| sweep_n(0)(n),
            check: |f, c| {
                let mut lhs = LaurentPoly::zero();
                for r in 0..c.n.max(1) {
                    lhs += f.narayana(c.n as i64, r as i64)?;
                }
                poly_eq(&lhs, &f.e_poly(c.n)?)
            },
        },
        Identity {
            name: "eq-Nrec",
            summary: "N(n,r) recurrence = closed form",
            uses_r: false,
            expected: Status::Pass,
            default_n: 9,
            default_r: 1,
            limit: 14,
            note: Some(NOTE_BOUNDS),
            cases: |n, _| sweep_n_rank(n, 0),
            check: |f, c| {
                let (n, r) = (c.n as i64, c.r() as i64);
                poly_eq(&f.narayana_rec(n, r, Bounds::Corrected), &f.narayana(n, r)?)
            },
        },
        Identity {
            name: "eq-Nrec-printed",
            summary: "N(n,r) recurrence with the printed inner bounds = closed form",
            uses_r: false,
            expected: Status::Fail,
            default_n: 9,
            default_r: 1,
            limit: 14,
            note: Some(NOTE_PRINTED),
            cases: |n, _| sweep_n_rank(n, 0),
            check: |f, c| {
                let (n, r) = (c.n as i64, c.r() as i64);
                poly_eq(&f.narayana_rec(n, r, Bounds::Printed), &f.narayana(n, r)?)
            },
        },
        Identity {
            name: "prop-N2N",
            summary: "N_2(n,r) by enumeration = N(n,r)",
            uses_r: false,
            expected: Status::Pass,
            default_n: 9,
            default_r: 1,
            limit: 11,
            note: None,
            cases: |n, _| sweep_n_rank(n, 0),
            check: |f, c| poly_eq(&n2_poly(c.n, c.r()), &f.narayana(c.n as i64, c.r() as i64)?),
        },
        Identity {
            name: "eq-N2rec",
            summary: "N_2(n,r) recurrence = enumeration",
            uses_r: false,
            expected: Status::Pass,
            default_n: 9,
            default_r: 1,
            limit: 11,
            note: Some(NOTE_BOUNDS),
            cases: |n, _| sweep_n_rank(n, 0),
            check: |f, c| {
                poly_eq(
                    &f.n2_rec(c.n as i64, c.r() as i64, Bounds::Corrected),
                    &n2_poly(c.n, c.r()),
                )
            },
        },
        Identity {
            name: "eq-N2rec-printed",
            summary: "N_2(n,r) recurrence with the printed inner bounds = enumeration",
            uses_r: false,
            expected: Status::Fail,
            default_n: 9,
            default_r: 1,
            limit: 11,
            note: Some(NOTE_PRINTED),
            cases: |n, _| sweep_n_rank(n, 0),
            check: |f, c| {
                poly_eq(
                    &f.n2_rec(c.n as i64, c.r() as i64, Bounds::Printed),
                    &n2_poly(c.n, c.r()),
                )
            },
        },
        Identity {
            name: "prop-wtprime",
            summary: "wt' over NC(n) = q^{C(n,2)} C_n(1/q)",
            uses_r: false,
            expected: Status::Pass,
            default_n: 9,
            default_r: 1,
            limit: 11,
            note: None,
            cases: |n, _| sweep_n(0)(n),
            check: |f, c| {
                let rhs = f.catalan(c.n).reverse_q(binom2(c.n));
                poly_eq(&dist(Family::Nc, c.n, &StatSpec::single("wtprime"))?, &rhs)
            },
        },
        Identity {
            name: "thm-NC312",
            summary: "maj(π) = maj(σ) + maj(σ⁻¹) with σ the 312-avoiding image of π",
            uses_r: false,
            expected: Status::Pass,
            default_n: 8,
            default_r: 1,
            limit: 10,
            note: None,
            cases: |n, _| sweep_n(0)(n),
            check: |_, c| {
                let std = DescentConvention::Standard;
                for pi in enumerate_nc(c.n) {
                    let s = nc_to_312(&pi)?;
                    let (a, b) = (maj(s.values(), std), maj(s.inverse().values(), std));
                    if nc_maj(&pi) != a + b || lemma_majors(&pi) != (a, b) {
                        return object_fail(&pi, nc_maj(&pi), format!("{a} + {b}"));
                    }
                    if !is_312_avoiding(s.values()) || nc_from_312(&s)? != pi {
                        return object_fail(&pi, &s, "not a 312-avoiding preimage");
                    }
                }
                Ok(None)
            },
        },
        Identity {
            name: "cor-Aqq",
            summary: "A(q,q) = E_n(q)",
            uses_r: false,
            expected: Status::Pass,
            default_n: 8,
            default_r: 1,
            limit: 10,
            note: None,
            cases: |n, _| sweep_n(1)(n),
            check: |f, c| poly_eq(&q_at_t(&aqt(c.n)), &f.e_poly(c.n)?),
        },
        Identity {
            name: "thm-majD",
            summary: "tile maj of the tiling of π = maj(ρ(π)) on S_n(231)",
            uses_r: false,
            expected: Status::Pass,
            default_n: 8,
            default_r: 1,
            limit: 9,
            note: None,
            cases: |n, _| sweep_n(0)(n),
            check: |_, c| {
                for w in enumerate_permutations(c.n, Some([2, 3, 1])) {
                    let t = tiling_maj(&build_tiling(&w)?);
                    let d = rho(&w)?;
                    let m = maj(d.letters(), DescentConvention::Standard);
                    if t != m {
                        return object_fail(
                            &w,
                            format!("tiling maj {t}"),
                            format!("maj(ρ) = {m} for {d}"),
                        );
                    }
                }
                Ok(None)
            },
        },
        Identity {
            name: "eq-tilemaj",
            summary: "maj of the zigzag tile on trajectory i = i + 1 - pos(i) + 2(n - i), or 0",
            uses_r: false,
            expected: Status::Pass,
            default_n: 8,
            default_r: 1,
            limit: 9,
            note: None,
            cases: |n, _| sweep_n(0)(n),
            check: |_, c| {
                for w in enumerate_permutations(c.n, Some([2, 3, 1])) {
                    let t = build_tiling(&w)?;
                    for i in 1..=c.n {
                        let tile: usize =
                            t.zigzags().filter(|z| z.label == i).map(|z| z.maj()).sum();
                        let formula = zigzag_maj_formula(&w, i);
                        if tile != formula {
                            return object_fail(&w, format!("tile maj {tile} at {i}"), formula);
                        }
                    }
                }
                Ok(None)
            },
        },
        Identity {
            name: "rho-bij",
            summary: "ρ⁻¹(ρ(π)) = π on S_n(231)",
            uses_r: false,
            expected: Status::Pass,
            default_n: 8,
            default_r: 1,
            limit: 9,
            note: None,
            cases: |n, _| sweep_n(0)(n),
            check: |_, c| {
                for w in enumerate_permutations(c.n, Some([2, 3, 1])) {
                    let d = rho(&w)?;
                    let back = rho_inv(&d)?;
                    if back != w {
                        return object_fail(&w, &d, &back);
                    }
                }
                Ok(None)
            },
        },
        Identity {
            name: "prop-tiling-wtprime",
            summary: "wt' over the tilings of S_n(231) = q^{C(n,2)} C_n(1/q)",
            uses_r: false,
            expected: Status::Pass,
            default_n: 8,
            default_r: 1,
            limit: 9,
            note: None,
            cases: |n, _| sweep_n(0)(n),
            check: |f, c| {
                let rhs = f.catalan(c.n).reverse_q(binom2(c.n));
                poly_eq(&dist(Family::Perm231, c.n, &StatSpec::single("twt"))?, &rhs)
            },
        },
        Identity {
            name: "tiling-allperm",
            summary: "every π in S_n has a valid cover-inclusive tiling that reads back π",
            uses_r: false,
            expected: Status::Pass,
            default_n: 6,
            default_r: 1,
            limit: 8,
            note: None,
            cases: |n, _| sweep_n(0)(n),
            check: |_, c| {
                for w in enumerate_permutations(c.n, None) {
                    let t = build_tiling(&w)?;
                    t.validate()?;
                    if !t.is_cover_inclusive() {
                        return object_fail(&w, "tiling", "not cover-inclusive");
                    }
                    let back = t.read_permutation()?;
                    if back != w {
                        return object_fail(&w, "reads back", back);
                    }
                }
                Ok(None)
            },
        },
        Identity {
            name: "thm-symmaj",
            summary: "maj over Q_n = [2(n+1) choose n+1]/[n+2]",
            uses_r: false,
            expected: Status::Pass,
            default_n: 8,
            default_r: 1,
            limit: 10,
            note: None,
            cases: |n, _| sweep_n(0)(n),
            check: |f, c| {
                poly_eq(
                    &dist(Family::Symmetric, c.n, &StatSpec::single("maj"))?,
                    &f.e_poly(c.n + 1)?,
                )
            },
        },
        Identity {
            name: "psi-bij",
            summary: "Ψ: Dyck paths of size n+1 → Q_n is a bijection",
            uses_r: false,
            expected: Status::Pass,
            default_n: 8,
            default_r: 1,
            limit: 10,
            note: None,
            cases: |n, _| sweep_n(0)(n),
            check: |_, c| {
                let mut seen = std::collections::HashSet::new();
                for d in enumerate_r_dyck(c.n + 1, 1) {
                    let s = psi(&d)?;
                    if psi_inv(&s)? != d || !seen.insert(s.to_string()) {
                        return object_fail(&d, &s, "Ψ is not invertible here");
                    }
                }
                count_eq(seen.len() as u128, enumerate_symmetric(c.n).count() as u128)
            },
        },
        Identity {
            name: "thm-N3k",
            summary: "N_3(n,r,k): closed form = recurrence = enumeration, r >= 1",
            uses_r: false,
            expected: Status::Pass,
            default_n: 8,
            default_r: 1,
            limit: 10,
            note: Some("closed form guarded: r = 0 gives δ_{k,n}, k >= n with r >= 1 gives 0"),
            cases: |n, _| sweep_nrk(n, 1),
            check: |f, c| {
                let (n, r, k) = (c.n as i64, c.r() as i64, c.k() as i64);
                let rec = f.n3k(n, r, k)?;
                let closed = f.n3k_closed(n, r, k)?;
                if rec != closed {
                    return poly_eq(&rec, &closed);
                }
                poly_eq(&rec, &n3k_enum(c.n, c.r(), c.k(), None))
            },
        },
        Identity {
            name: "lem-N3",
            summary: "N_3(n,r) recurrence = N(n+1,r) = enumeration",
            uses_r: false,
            expected: Status::Pass,
            default_n: 8,
            default_r: 1,
            limit: 10,
            note: None,
            cases: |n, _| sweep_n_rank(n, 1),
            check: |f, c| {
                let (n, r) = (c.n as i64, c.r() as i64);
                let rec = f.n3(n, r)?;
                let nar = f.narayana(n + 1, r)?;
                if rec != nar {
                    return poly_eq(&rec, &nar);
                }
                let mut lhs = LaurentPoly::zero();
                for k in 0..=c.n {
                    lhs += n3k_enum(c.n, c.r(), k, None);
                }
                poly_eq(&lhs, &rec)
            },
        },
        Identity {
            name: "lem-N3split",
            summary: "N_{3,+} + N_{3,-} = N_3(n,r,k), each split matching enumeration",
            uses_r: false,
            expected: Status::Pass,
            default_n: 8,
            default_r: 1,
            limit: 10,
            note: None,
            cases: |n, _| {
                sweep_nrk(n.max(1), 0)
                    .into_iter()
                    .filter(|c| c.n >= 1)
                    .collect()
            },
            check: |f, c| {
                let (n, r, k) = (c.n as i64, c.r() as i64, c.k() as i64);
                let plus = f.n3_split(Sign::Plus, n, r, k)?;
                let minus = f.n3_split(Sign::Minus, n, r, k)?;
                for (sign, got) in [(Sign::Plus, &plus), (Sign::Minus, &minus)] {
                    let want = n3k_enum(c.n, c.r(), c.k(), Some(sign));
                    if *got != want {
                        return poly_eq(got, &want);
                    }
                }
                poly_eq(&(&plus + &minus), &f.n3k(n, r, k)?)
            },
        },
        Identity {
            name: "cor-N3sum2",
            summary: "sum_k N_3(n,r,k) = N(n+1,r)",
            uses_r: false,
            expected: Status::Pass,
            default_n: 8,
            default_r: 1,
            limit: 10,
            note: None,
            cases: |n, _| sweep_n_rank(n, 1),
            check: |f, c| {
                let (n, r) = (c.n as i64, c.r() as i64);
                let mut lhs = LaurentPoly::zero();
                for k in 0..=n {
                    lhs += f.n3k(n, r, k)?;
                }
                poly_eq(&lhs, &f.narayana(n + 1, r)?)
            },
        },
        Identity {
            name: "cor-N3sum2-printed",
            summary: "sum_k N_3(n,r,k) = N(n,r)",
            uses_r: false,
            expected: Status::Fail,
            default_n: 8,
            default_r: 1,
            limit: 10,
            note: Some(NOTE_COR),
            cases: |n, _| sweep_n_rank(n, 0),
            check: |f, c| {
                let (n, r) = (c.n as i64, c.r() as i64);
                let mut lhs = LaurentPoly::zero();
                for k in 0..=n {
                    lhs += f.n3k(n, r, k)?;
                }
                poly_eq(&lhs, &f.narayana(n, r)?)
            },
        },
        Identity {
            name: "prop-symInv",
            summary: "Inv_1 + Inv_2 over Q_n = C_{n+1}(q)",
            uses_r: false,
            expected: Status::Pass,
            default_n: 8,
            default_r: 1,
            limit: 10,
            note: None,
            cases: |n, _| sweep_n(0)(n),
            check: |f, c| {
                poly_eq(
                    &dist(Family::Symmetric, c.n, &StatSpec::single("inv"))?,
                    &f.catalan(c.n + 1),
                )
            },
        },
        Identity {
            name: "series-defCn",
            summary: "sum C_{n-1} z^n (z;q)_n = z up to z^N",
            uses_r: false,
            expected: Status::Pass,
            default_n: 12,
            default_r: 1,
            limit: 16,
            note: None,
            cases: |n, _| vec![Case::n(n)],
            check: |f, c| series_case(f, SeriesName::DefCn, 1, c.n),
        },
        Identity {
            name: "series-Cnrinsum",
            summary: "sum C^(r)_n z^{rn+1} prod_{i<=rn} (1 - q^i z^r) = z up to z^N",
            uses_r: true,
            expected: Status::Pass,
            default_n: 8,
            default_r: 3,
            limit: 12,
            note: None,
            cases: |n, r| (1..=r).map(|r| Case::nr(n, r)).collect(),
            check: |f, c| series_case(f, SeriesName::Cnrinsum, c.r(), c.n),
        },
        Identity {
            name: "series-Einqq",
            summary: "sum E^(r)_n z^n / (q^{C(n,2)} (-q^{-n} z)_n (-qz)_{rn}) = z up to z^N",
            uses_r: true,
            expected: Status::Pass,
            default_n: 8,
            default_r: 3,
            limit: 10,
            note: None,
            cases: |n, r| (1..=r).map(|r| Case::nr(n, r)).collect(),
            check: |f, c| series_case(f, SeriesName::Einqq, c.r(), c.n),
        },
        Identity {
            name: "series-Einprod",
            summary: "the (x;a,b) expansion of E^(r)_n sums to z up to z^N",
            uses_r: true,
            expected: Status::Pass,
            default_n: 6,
            default_r: 2,
            limit: 7,
            note: None,
            cases: |n, r| (1..=r).map(|r| Case::nr(n, r)).collect(),
            check: |f, c| series_case(f, SeriesName::Einprod, c.r(), c.n),
        },
    ]
}

fn series_case(f: &mut Families, name: SeriesName, r: usize, order: usize) -> Check {
    let s = series_sum(f, name, r, order)?;
    let target = z(order);
    Ok(s.first_difference(&target).map(|k| Mismatch {
        objects: vec![format!("z^{k}")],
        lhs: s.coeff(k).to_string(),
        rhs: target.coeff(k).to_string(),
    }))
}

pub fn identity(name: &str) -> Result<Identity> {
    registry()
        .into_iter()
        .find(|i| i.name == name)
        .ok_or_else(|| unknown("identity", name))
}

thread_local! {
    static CACHE: RefCell<Families> = RefCell::new(Families::new());
}

fn run_case(id: &Identity, c: Case) -> Option<Witness> {
    let outcome = CACHE.with(|f| (id.check)(&mut f.borrow_mut(), c));
    let m = match outcome {
        Ok(None) => return None,
        Ok(Some(m)) => m,
        Err(e) => Mismatch {
            objects: Vec::new(),
            lhs: format!("error: {e}"),
            rhs: "-".into(),
        },
    };
    Some(Witness {
        case: c,
        objects: m.objects,
        lhs: m.lhs,
        rhs: m.rhs,
    })
}

/// Runs one identity over `n <= n_max` (and `r <= r_max` where it sweeps r).
/// The witness is always the first failing case in (n, r, k) order.
pub fn verify(id: &Identity, n_max: usize, r_max: usize, parallel: bool) -> VerificationReport {
    let mut cases = (id.cases)(n_max, r_max);
    cases.sort();
    let witness = if parallel {
        let results: Vec<Option<Witness>> = cases.par_iter().map(|&c| run_case(id, c)).collect();
        results.into_iter().flatten().next()
    } else {
        cases.iter().find_map(|&c| run_case(id, c))
    };
    VerificationReport {
        identity: id.name.to_string(),
        n_max,
        r_max: id.uses_r.then_some(r_max),
        status: if witness.is_some() {
            Status::Fail
        } else {
            Status::Pass
        },
        expected: id.expected,
        cases: cases.len(),
        witness,
        note: id.note,
    }
}

/// Runs every registered identity at its default sizes, or at `n_max`/`r_max` when given.
pub fn verify_all(
    n_max: Option<usize>,
    r_max: Option<usize>,
    parallel: bool,
) -> Vec<VerificationReport> {
    let run = |id: &Identity| {
        let n = n_max.unwrap_or(id.default_n).min(id.limit);
        let r = r_max.unwrap_or(id.default_r);
        verify(id, n, r, false)
    };
    let reg = registry();
    if parallel {
        reg.par_iter().map(run).collect()
    } else {
        reg.iter().map(run).collect()
    }
}

/// Checks one defining expansion against `z` to the given order.
pub fn series_check(name: SeriesName, r: usize, order: usize) -> VerificationReport {
    let id = identity(&format!("series-{}", name.name())).expect("every series is registered");
    verify(&id, order, r, false)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn printed_variants_fail_at_two_one() {
        for name in ["eq-Nrec-printed", "eq-N2rec-printed", "cor-N3sum2-printed"] {
            let rep = verify(&identity(name).unwrap(), 6, 1, false);
            assert_eq!(rep.status, Status::Fail, "{name}");
            assert_eq!(rep.witness.unwrap().case, Case::nr(2, 1), "{name}");
        }
    }

    #[test]
    fn small_sweeps_pass() {
        for id in registry().iter().filter(|i| i.expected == Status::Pass) {
            let rep = verify(id, id.default_n.min(4), id.default_r.min(2), false);
            assert_eq!(rep.status, Status::Pass, "{rep}");
        }
    }

    #[test]
    fn parallel_matches_sequential() {
        let id = identity("cor-N3sum2-printed").unwrap();
        assert_eq!(verify(&id, 5, 1, true), verify(&id, 5, 1, false));
    }
}
