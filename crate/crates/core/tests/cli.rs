use qcatalan::cli::run_with;
use qcatalan::identities::{Family, StatSpec};
use qcatalan::objects::Permutation;
use qcatalan::qpoly::LaurentPoly;
use qcatalan::tilings::DyckTiling;
use serde_json::Value;

fn run(args: &[&str]) -> (i32, String, String) {
    let (mut out, mut err) = (Vec::new(), Vec::new());
    let argv = std::iter::once("qcatalan").chain(args.iter().copied());
    let code = run_with(argv, &mut out, &mut err);
    (
        code,
        String::from_utf8(out).unwrap(),
        String::from_utf8(err).unwrap(),
    )
}

fn json(args: &[&str]) -> Value {
    let mut v = vec!["--json"];
    v.extend_from_slice(args);
    let (code, out, err) = run(&v);
    assert_eq!(code, 0, "{err}");
    serde_json::from_str(&out).unwrap()
}

#[test]
fn enumerate_lists_paths_in_order() {
    let (code, out, _) = run(&["enumerate", "dyck", "--n", "3"]);
    assert_eq!(code, 0);
    assert_eq!(
        out.lines().collect::<Vec<_>>(),
        ["000111", "001011", "001101", "010011", "010101"]
    );
}

#[test]
fn enumerated_json_parses_back() {
    for (family, r) in [
        ("dyck", "2"),
        ("stirling", "2"),
        ("nc", "1"),
        ("sym", "1"),
        ("perm231", "1"),
    ] {
        let fam = Family::parse(family, r.parse().unwrap()).unwrap();
        let rows = json(&["enumerate", family, "--n", "3", "--r", r]);
        let rows = rows.as_array().unwrap();
        assert_eq!(rows.len(), fam.objects(3).count());
        for (row, obj) in rows.iter().zip(fam.objects(3)) {
            let parsed = fam.parse_object(row["value"].as_str().unwrap()).unwrap();
            assert_eq!(parsed, obj);
        }
    }
}

#[test]
fn poly_and_dist_json_round_trip() {
    let v = json(&["poly", "catalan", "--n", "4"]);
    let p: LaurentPoly = serde_json::from_value(v["poly"].clone()).unwrap();
    assert_eq!(p, v["text"].as_str().unwrap().parse().unwrap());
    assert_eq!(p.to_string(), "1 + q + 2*q^2 + 3*q^3 + 3*q^4 + 3*q^5 + q^6");

    let v = json(&["dist", "dyck", "E", "--n", "2", "--r", "2"]);
    let p: LaurentPoly = serde_json::from_value(v["poly"].clone()).unwrap();
    let want = qcatalan::identities::dist(Family::Dyck { r: 2 }, 2, &StatSpec::parse("E").unwrap())
        .unwrap();
    assert_eq!(p, want);
}

#[test]
fn stat_and_map() {
    assert_eq!(
        json(&["stat", "maj", "--object", "0101", "--family", "dyck"])["value"],
        2
    );
    let (code, out, _) = run(&["map", "phi", "--r", "2", "--input", "2255431134"]);
    assert_eq!((code, out.trim()), (0, "5113223544"));
    let (_, back, _) = run(&[
        "map",
        "phi",
        "--inverse",
        "--r",
        "2",
        "--input",
        "5113223544",
    ]);
    assert_eq!(back.trim(), "2255431134");
    assert_eq!(
        json(&["map", "kappa", "--r", "2", "--input", "42112334"])["output"],
        "010110101111"
    );
}

#[test]
fn rendered_tiling_json_reads_back() {
    let v = json(&["render", "tiling", "--perm", "24135"]);
    assert_eq!(v["maj"], 12);
    let t: DyckTiling = serde_json::from_value(v["tiling"].clone()).unwrap();
    t.validate().unwrap();
    assert_eq!(
        t.read_permutation().unwrap(),
        "24135".parse::<Permutation>().unwrap()
    );
}

#[test]
fn verify_reports_and_exit_codes() {
    let (code, out, _) = run(&["verify", "thm-majD", "--n-max", "6"]);
    assert_eq!((code, out.trim()), (0, "PASS thm-majD n<=6"));

    let (code, out, _) = run(&["verify", "eq-Nrec-printed", "--n-max", "4"]);
    assert_eq!(code, 0);
    assert!(out.starts_with("FAIL eq-Nrec-printed"), "{out}");
    assert!(out.contains("n=2 r=1"), "{out}");

    let v = json(&["verify", "cor-N3sum2-printed", "--n-max", "5"]);
    assert_eq!(v[0]["status"], "FAIL");
    assert_eq!(v[0]["witness"]["case"]["n"], 2);
    assert_eq!(v[0]["witness"]["case"]["r"], 1);

    let (code, out, _) = run(&["verify", "list"]);
    assert_eq!(code, 0);
    assert!(out.lines().any(|l| l.starts_with("lem-N3split")), "{out}");
}

#[test]
fn errors_exit_with_two() {
    let (code, _, err) = run(&["verify", "nope"]);
    assert_eq!(code, 2);
    assert!(err.starts_with("error[unknown-name]"), "{err}");

    let (code, _, err) = run(&["enumerate", "dyck", "--n", "20"]);
    assert_eq!(code, 2);
    assert!(err.starts_with("error[size-limit]"), "{err}");

    let (code, _, err) = run(&["stat", "maj", "--object", "0110", "--family", "dyck"]);
    assert_eq!(code, 2, "{err}");

    let (code, _, _) = run(&["frobnicate"]);
    assert_eq!(code, 2);
}

#[test]
fn max_lifts_the_cap_with_a_warning() {
    let (code, _, _) = run(&["poly", "n2", "--n", "11", "--r", "3"]);
    assert_eq!(code, 2);
    let (code, out, err) = run(&["--max", "poly", "n2", "--n", "11", "--r", "3"]);
    assert_eq!(code, 0);
    let p: LaurentPoly = out.trim().parse().unwrap();
    assert_eq!(p, qcatalan::identities::narayana(11, 3).unwrap());
    assert!(err.starts_with("warning"), "{err}");
}

#[test]
fn series_check_passes() {
    let (code, out, _) = run(&["series", "Einqq", "--order", "4", "--r", "2"]);
    assert_eq!((code, out.trim()), (0, "PASS series-Einqq n<=4 r<=2"));
}
