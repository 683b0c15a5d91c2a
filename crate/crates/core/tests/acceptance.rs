//! One line per acceptance criterion. Runs without the libtest harness so the lines always show.

mod common;

use std::time::{Duration, Instant};

use common::{area_catalan, binomial, carlitz, catalan, stirling_product, to_poly};
use qcatalan::bijections::{nc_to_312, phi, rho};
use qcatalan::cli::{golden_dump, TABLES};
use qcatalan::identities::{
    aqt, dist, e_poly, e_r_general, e_r_poly, fuss_catalan_c, identity, n2_poly, n3_poly,
    n3k_closed, n3k_enum, n3k_poly, narayana, series_check, verify, Case, Family, SeriesName,
    StatSpec, Status,
};
use qcatalan::objects::{
    enumerate_nc, enumerate_permutations, enumerate_r_dyck, enumerate_r_stirling,
    enumerate_symmetric,
};
use qcatalan::qpoly::LaurentPoly;
use qcatalan::statistics::{maj, nc_maj, stirling_inv, stirling_maj, DescentConvention};
use qcatalan::tilings::{build_tiling, tiling_maj};

type Outcome = Result<(), String>;

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Outcome {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn same(what: &str, lhs: &LaurentPoly, rhs: &LaurentPoly) -> Outcome {
    ensure(lhs == rhs, || format!("{what}: {lhs} != {rhs}"))
}

fn within(what: &str, elapsed: Duration, limit: Duration) -> Outcome {
    ensure(elapsed < limit, || format!("{what} took {elapsed:?}"))
}

fn q(stat: &str) -> StatSpec {
    StatSpec::single(stat)
}

fn d(family: Family, n: usize, stat: &str) -> Result<LaurentPoly, String> {
    dist(family, n, &q(stat)).map_err(|e| e.to_string())
}

fn registered(name: &str, n_max: usize, r_max: usize) -> Outcome {
    let rep = verify(
        &identity(name).map_err(|e| e.to_string())?,
        n_max,
        r_max,
        false,
    );
    ensure(rep.status == Status::Pass, || rep.to_string())
}

fn counting() -> Outcome {
    let start = Instant::now();
    for n in 0..=10 {
        let want = binomial(2 * n as u128, n as u128) / (n as u128 + 1);
        let got = enumerate_r_dyck(n, 1).count() as u128;
        ensure(got == want, || format!("|P^1_{n}| = {got}, want {want}"))?;
    }
    for r in 1..=3 {
        for n in 0..=6 {
            let (nn, rr) = (n as u128, r as u128);
            let want = binomial((rr + 1) * nn, nn) / (nn * rr + 1);
            let got = enumerate_r_dyck(n, r).count() as u128;
            ensure(got == want, || format!("|P^{r}_{n}| = {got}, want {want}"))?;
        }
        for n in 0..=5 {
            let want: usize = (0..n).map(|s| s * r + 1).product();
            let got = enumerate_r_stirling(n, r).count();
            ensure(got == want, || {
                format!("|S^({r})_{n}| = {got}, want {want}")
            })?;
        }
    }
    for n in 0..=9 {
        let want = binomial(2 * n as u128, n as u128) / (n as u128 + 1);
        let got = enumerate_nc(n).count() as u128;
        ensure(got == want, || format!("|NC({n})| = {got}, want {want}"))?;
    }
    for n in 0..=8 {
        let m = n as u128 + 1;
        let want = binomial(2 * m, m) / (m + 1);
        let got = enumerate_symmetric(n).count() as u128;
        ensure(got == want, || format!("|Q_{n}| = {got}, want {want}"))?;
    }
    within("counting", start.elapsed(), Duration::from_secs(10))
}

fn goldens() -> Outcome {
    let dir = std::path::Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/golden");
    for id in TABLES {
        let want = std::fs::read_to_string(dir.join(format!("{id}.txt")))
            .map_err(|e| format!("{id}: {e}"))?;
        let got = golden_dump(id).map_err(|e| e.to_string())?;
        ensure(got == want, || format!("{id} differs from its golden"))?;
    }
    Ok(())
}

fn inv_maj_stirling() -> Outcome {
    let start = Instant::now();
    for r in 1..=3 {
        for n in 0..=5 {
            let want = to_poly(&stirling_product(n, r));
            same(
                &format!("INV r={r} n={n}"),
                &d(Family::Stirling { r }, n, "inv")?,
                &want,
            )?;
            same(
                &format!("MAJ r={r} n={n}"),
                &d(Family::Stirling { r }, n, "maj")?,
                &want,
            )?;
            for v in enumerate_r_stirling(n, r) {
                let image = phi(&v).map_err(|e| e.to_string())?;
                let inv = stirling_inv(&image).map_err(|e| e.to_string())?;
                ensure(inv == stirling_maj(&v), || format!("INV(Φ({v})) = {inv}"))?;
            }
        }
    }
    ensure(enumerate_r_stirling(5, 3).count() == 3640, || {
        "largest sweep size".into()
    })?;
    within("Stirling sweep", start.elapsed(), Duration::from_secs(5))
}

fn fuss_and_e() -> Outcome {
    for r in 1..=3 {
        for n in 0..=6 {
            same(
                &format!("iInv r={r} n={n}"),
                &d(Family::Dyck { r }, n, "iinv")?,
                &fuss_catalan_c(n, r),
            )?;
            same(
                &format!("maj r={r} n={n}"),
                &d(Family::Dyck { r }, n, "maj")?,
                &e_r_poly(n, r),
            )?;
        }
    }
    let spec = StatSpec::parse("E").map_err(|e| e.to_string())?;
    for r in 1..=2 {
        for n in 1..=6 {
            let stat = dist(Family::Dyck { r }, n, &spec).map_err(|e| e.to_string())?;
            same(&format!("E r={r} n={n}"), &stat, &e_r_general(n, r))?;
        }
        let rep = series_check(SeriesName::Einprod, r, 6);
        ensure(rep.status == Status::Pass, || rep.to_string())?;
    }
    Ok(())
}

fn nc_catalan_and_narayana() -> Outcome {
    for n in 0..=9 {
        same(
            &format!("nc maj n={n}"),
            &d(Family::Nc, n, "maj")?,
            &to_poly(&catalan(n)),
        )?;
        for r in 0..=n {
            let nar = narayana(n, r).map_err(|e| e.to_string())?;
            same(&format!("N2({n},{r})"), &n2_poly(n, r), &nar)?;
            let mut by_valleys = LaurentPoly::zero();
            for p in enumerate_r_dyck(n, 1).filter(|p| p.valleys() == r) {
                by_valleys +=
                    LaurentPoly::q_pow(maj(p.letters(), DescentConvention::Standard) as i64);
            }
            same(&format!("N({n},{r}) by valleys"), &by_valleys, &nar)?;
        }
    }
    Ok(())
}

fn nc_wtprime() -> Outcome {
    for n in 0..=9 {
        let want = to_poly(&area_catalan(n));
        same(&format!("wt' n={n}"), &d(Family::Nc, n, "wtprime")?, &want)?;
    }
    Ok(())
}

fn nc_to_312_majors() -> Outcome {
    let std = DescentConvention::Standard;
    for n in 0..=8 {
        for pi in enumerate_nc(n) {
            let s = nc_to_312(&pi).map_err(|e| e.to_string())?;
            let sum = maj(s.values(), std) + maj(s.inverse().values(), std);
            ensure(nc_maj(&pi) == sum, || {
                format!("{pi}: maj {} vs {sum}", nc_maj(&pi))
            })?;
        }
    }
    for n in 1..=8 {
        let at_qq = aqt(n).substitute(qcatalan::qpoly::Var::T, &qcatalan::qpoly::Monomial::q(1));
        same(
            &format!("A(q,q) n={n}"),
            &at_qq,
            &e_poly(n).map_err(|e| e.to_string())?,
        )?;
    }
    Ok(())
}

fn tilings() -> Outcome {
    let start = Instant::now();
    for n in 0..=8 {
        let mut count = 0;
        for w in enumerate_permutations(n, Some([2, 3, 1])) {
            let t = build_tiling(&w).map_err(|e| e.to_string())?;
            let path = rho(&w).map_err(|e| e.to_string())?;
            let (lhs, rhs) = (
                tiling_maj(&t),
                maj(path.letters(), DescentConvention::Standard),
            );
            ensure(lhs == rhs, || {
                format!("{w}: tiling maj {lhs}, path maj {rhs}")
            })?;
            count += 1;
        }
        if n == 8 {
            ensure(count == 1430, || format!("{count} tilings at n = 8"))?;
        }
        let want = to_poly(&area_catalan(n));
        same(&format!("twt n={n}"), &d(Family::Perm231, n, "twt")?, &want)?;
    }
    within("tiling sweep", start.elapsed(), Duration::from_secs(10))?;
    for n in 0..=6 {
        for w in enumerate_permutations(n, None) {
            let t = build_tiling(&w).map_err(|e| e.to_string())?;
            t.validate().map_err(|e| format!("{w}: {e}"))?;
            ensure(t.is_cover_inclusive(), || {
                format!("{w}: not cover-inclusive")
            })?;
            let back = t.read_permutation().map_err(|e| e.to_string())?;
            ensure(back == w, || format!("{w} read back as {back}"))?;
        }
    }
    Ok(())
}

fn symmetric() -> Outcome {
    for n in 0..=8 {
        same(
            &format!("sym maj n={n}"),
            &d(Family::Symmetric, n, "maj")?,
            &to_poly(&catalan(n + 1)),
        )?;
        for r in 1..=n + 1 {
            for k in 0..=n + 1 {
                let closed = n3k_closed(n, r, k).map_err(|e| e.to_string())?;
                let rec = n3k_poly(n, r, k).map_err(|e| e.to_string())?;
                same(&format!("N3({n},{r},{k}) closed vs rec"), &closed, &rec)?;
                same(
                    &format!("N3({n},{r},{k}) rec vs enum"),
                    &rec,
                    &n3k_enum(n, r, k, None),
                )?;
            }
        }
        for r in 0..=n {
            let n3 = n3_poly(n, r).map_err(|e| e.to_string())?;
            same(
                &format!("N3({n},{r})"),
                &n3,
                &narayana(n + 1, r).map_err(|e| e.to_string())?,
            )?;
        }
    }
    registered("lem-N3split", 8, 1)
}

fn symmetric_inv() -> Outcome {
    for n in 0..=8 {
        same(
            &format!("sym inv n={n}"),
            &d(Family::Symmetric, n, "inv")?,
            &to_poly(&carlitz(n + 1)),
        )?;
    }
    Ok(())
}

fn series() -> Outcome {
    let runs = [
        (SeriesName::DefCn, 1, 12),
        (SeriesName::Cnrinsum, 2, 8),
        (SeriesName::Cnrinsum, 3, 8),
        (SeriesName::Einqq, 2, 8),
        (SeriesName::Einqq, 3, 8),
        (SeriesName::Einprod, 1, 6),
        (SeriesName::Einprod, 2, 6),
    ];
    for (name, r, order) in runs {
        let rep = series_check(name, r, order);
        ensure(rep.status == Status::Pass, || {
            format!("{} r={r}: {rep}", name.name())
        })?;
    }
    Ok(())
}

fn discrepancies() -> Outcome {
    for name in ["cor-N3sum2-printed", "eq-Nrec-printed", "eq-N2rec-printed"] {
        let rep = verify(&identity(name).map_err(|e| e.to_string())?, 8, 1, false);
        ensure(rep.status == Status::Fail, || format!("{name} passed"))?;
        let case = rep.witness.as_ref().map(|w| w.case);
        ensure(case == Some(Case::nr(2, 1)), || {
            format!("{name} witness {case:?}")
        })?;
    }
    for name in ["cor-N3sum2", "eq-Nrec", "eq-N2rec"] {
        registered(name, 8, 1)?;
    }
    Ok(())
}

fn main() {
    let criteria: [(&str, fn() -> Outcome); 12] = [
        ("counting", counting),
        ("golden tables", goldens),
        ("INV/MAJ on Stirling words", inv_maj_stirling),
        ("Fuss-Catalan and E families", fuss_and_e),
        ("NC maj and Narayana", nc_catalan_and_narayana),
        ("NC wt'", nc_wtprime),
        ("NC to 312 majors", nc_to_312_majors),
        ("Dyck tilings", tilings),
        ("symmetric paths and N3", symmetric),
        ("symmetric inv", symmetric_inv),
        ("series reduce to z", series),
        ("printed variants fail", discrepancies),
    ];
    let mut failed = 0;
    for (i, (title, check)) in criteria.iter().enumerate() {
        let start = Instant::now();
        match check() {
            Ok(()) => println!("PASS {:>2} {title} ({:.2?})", i + 1, start.elapsed()),
            Err(msg) => {
                failed += 1;
                println!("FAIL {:>2} {title}: {msg}", i + 1);
            }
        }
    }
    if failed > 0 {
        std::process::exit(1);
    }
}
