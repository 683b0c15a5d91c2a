//! The `qcatalan` command line, runnable in-process for tests.

mod golden;

use std::ffi::OsString;
use std::io::Write;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::json;

pub use golden::{golden_dump, TABLES};

use crate::bijections::{
    alpha_vector, descent_sets_of, kappa, kappa_inv, nc_from_312, nc_to_312_trace, phi, phi_inv,
    phi_trace, psi, psi_inv, rho, rho_inv,
};
use crate::error::{Error, Result};
use crate::identities::{
    aqt, dist, identity, n2_poly, n3k_enum, registry, series_check, stat_value, verify, verify_all,
    Bounds, Families, Family, SeriesName, Sign, StatSpec, VerificationReport,
};
use crate::objects::{parse_nc, word_string, ObjectRecord, Permutation, RDyckPath, RStirlingWord};
use crate::qpoly::LaurentPoly;
use crate::tilings::{build_tiling, render_tiling, tiling_maj};

#[derive(Debug, Parser)]
#[command(
    name = "qcatalan",
    version,
    about = "q-Catalan combinatorics: objects, statistics, bijections, identities"
)]
pub struct Cli {
    /// Machine-readable JSON output.
    #[arg(long, global = true)]
    pub json: bool,
    /// Lift the size limits (prints a warning).
    #[arg(long, global = true)]
    pub max: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// List every object of a family, one per line.
    Enumerate {
        family: String,
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 1)]
        r: usize,
        /// Keep only pattern avoiders (`231`).
        #[arg(long)]
        filter: Option<String>,
    },
    /// Evaluate one statistic on one object.
    Stat {
        name: String,
        #[arg(long)]
        object: String,
        #[arg(long)]
        family: String,
        #[arg(long, default_value_t = 1)]
        r: usize,
    },
    /// Generating polynomial of a statistic over a family (`maj`, `q=maj,t=imaj`, `E`, ...).
    Dist {
        family: String,
        stat: String,
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 1)]
        r: usize,
        #[arg(long)]
        filter: Option<String>,
    },
    /// Apply a bijection or its inverse.
    Map {
        map: MapName,
        #[arg(long)]
        inverse: bool,
        #[arg(long)]
        input: String,
        #[arg(long, default_value_t = 1)]
        r: usize,
        /// Print the intermediate data as well.
        #[arg(long)]
        trace: bool,
    },
    /// Evaluate a polynomial family.
    Poly {
        name: String,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        r: Option<usize>,
        #[arg(long)]
        k: Option<usize>,
    },
    /// Check that a defining expansion sums to z.
    Series {
        name: String,
        #[arg(long)]
        order: usize,
        #[arg(long, default_value_t = 1)]
        r: usize,
    },
    /// Run a registered identity check, `all`, or `list`.
    Verify {
        identity: String,
        #[arg(long)]
        n_max: Option<usize>,
        #[arg(long)]
        r_max: Option<usize>,
        #[arg(long)]
        parallel: bool,
    },
    /// Draw an object.
    Render {
        what: RenderWhat,
        #[arg(long)]
        perm: String,
    },
    /// Dump a table or worked example in its fixed layout.
    Golden { table: String },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum MapName {
    Kappa,
    Phi,
    Rho,
    Nc312,
    Psi,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum RenderWhat {
    Tiling,
}

/// Which polynomial families `poly` knows.
pub const POLY_NAMES: [&str; 18] = [
    "catalan",
    "fuss-catalan",
    "e",
    "e-r",
    "e-r-general",
    "narayana",
    "narayana-rec",
    "narayana-rec-printed",
    "n2",
    "n2-rec",
    "n2-rec-printed",
    "n3",
    "n3k",
    "n3k-closed",
    "n3k-enum",
    "n3plus",
    "n3minus",
    "aqt",
];

/// Outcome of a command: what to print and the exit code.
struct Outcome {
    text: String,
    code: i32,
}

impl Outcome {
    fn ok(text: impl Into<String>) -> Outcome {
        Outcome {
            text: text.into(),
            code: 0,
        }
    }
}

struct Ctx<'a> {
    json: bool,
    max: bool,
    err: &'a mut dyn Write,
}

impl Ctx<'_> {
    /// n <= 12 for r = 1, n <= 8 for r >= 2, tighter for the full symmetric group.
    fn check_size(&mut self, n: usize, limit: usize) -> Result<()> {
        if n <= limit {
            return Ok(());
        }
        if self.max {
            let _ = writeln!(
                self.err,
                "warning: n = {n} is above the limit {limit}; this may take long"
            );
            return Ok(());
        }
        Err(Error::SizeLimit { n, limit })
    }

    fn emit(&self, text: String, value: impl Serialize) -> Outcome {
        if self.json {
            Outcome::ok(serde_json::to_string_pretty(&value).unwrap_or_default())
        } else {
            Outcome::ok(text)
        }
    }
}

fn default_limit(r: usize) -> usize {
    if r <= 1 {
        12
    } else {
        8
    }
}

fn family_limit(f: Family) -> usize {
    match f {
        Family::Perm | Family::Stirling { r: 1 } => 9,
        _ => default_limit(f.r()),
    }
}

fn resolve_family(name: &str, r: usize, filter: Option<&str>) -> Result<Family> {
    let f = Family::parse(name, r)?;
    match filter {
        None => Ok(f),
        Some("231") => f.avoiding_231(),
        Some(other) => Err(Error::Domain(format!(
            "unsupported filter {other:?}; only 231 is known"
        ))),
    }
}

fn poly_json(name: &str, p: &LaurentPoly, extra: serde_json::Value) -> serde_json::Value {
    json!({ "name": name, "params": extra, "text": p.to_string(), "poly": p.to_json() })
}

fn need(v: Option<usize>, flag: &str, name: &str) -> Result<usize> {
    v.ok_or_else(|| Error::Domain(format!("poly {name} needs {flag}")))
}

fn eval_poly(name: &str, n: usize, r: Option<usize>, k: Option<usize>) -> Result<LaurentPoly> {
    let mut f = Families::new();
    let ni = n as i64;
    let r_or_1 = r.unwrap_or(1);
    Ok(match name {
        "catalan" => f.catalan(n),
        "fuss-catalan" => f.fuss_catalan(n, r_or_1),
        "e" => f.e_poly(n)?,
        "e-r" => f.e_r_poly(n, r_or_1),
        "e-r-general" => f.e_r_general(n, r_or_1),
        "narayana" => f.narayana(ni, need(r, "--r", name)? as i64)?,
        "narayana-rec" => f.narayana_rec(ni, need(r, "--r", name)? as i64, Bounds::Corrected),
        "narayana-rec-printed" => f.narayana_rec(ni, need(r, "--r", name)? as i64, Bounds::Printed),
        "n2" => n2_poly(n, need(r, "--r", name)?),
        "n2-rec" => f.n2_rec(ni, need(r, "--r", name)? as i64, Bounds::Corrected),
        "n2-rec-printed" => f.n2_rec(ni, need(r, "--r", name)? as i64, Bounds::Printed),
        "n3" => f.n3(ni, need(r, "--r", name)? as i64)?,
        "n3k" | "n3k-closed" | "n3k-enum" | "n3plus" | "n3minus" => {
            let (r, k) = (need(r, "--r", name)?, need(k, "--k", name)?);
            let (ri, ki) = (r as i64, k as i64);
            match name {
                "n3k" => f.n3k(ni, ri, ki)?,
                "n3k-closed" => f.n3k_closed(ni, ri, ki)?,
                "n3k-enum" => n3k_enum(n, r, k, None),
                "n3plus" => f.n3_split(Sign::Plus, ni, ri, ki)?,
                _ => f.n3_split(Sign::Minus, ni, ri, ki)?,
            }
        }
        "aqt" => aqt(n),
        _ => return Err(crate::error::unknown("polynomial", name)),
    })
}

fn run_map(
    ctx: &Ctx,
    map: MapName,
    inverse: bool,
    input: &str,
    r: usize,
    trace: bool,
) -> Result<Outcome> {
    let mut lines: Vec<(String, String)> = Vec::new();
    let output = match (map, inverse) {
        (MapName::Kappa, false) => {
            let w = RStirlingWord::parse(input, r)?;
            lines.push(("alpha".into(), format!("{:?}", alpha_vector(&w))));
            kappa(&w)?.to_string()
        }
        (MapName::Kappa, true) => {
            let w = kappa_inv(&RDyckPath::parse(input, r)?)?;
            lines.push(("alpha".into(), format!("{:?}", alpha_vector(&w))));
            w.to_string()
        }
        (MapName::Phi, false) => {
            let w = RStirlingWord::parse(input, r)?;
            for (a, b) in phi_trace(&w)? {
                lines.push((
                    "step".into(),
                    format!("{} -> {}", word_string(&a), word_string(&b)),
                ));
            }
            phi(&w)?.to_string()
        }
        (MapName::Phi, true) => phi_inv(&RStirlingWord::parse(input, r)?)?.to_string(),
        (MapName::Rho, false) => {
            let d = rho(&input.parse::<Permutation>()?)?;
            let (des, ides) = descent_sets_of(&d);
            lines.push(("Des".into(), format!("{des:?}")));
            lines.push(("iDes".into(), format!("{ides:?}")));
            d.to_string()
        }
        (MapName::Rho, true) => {
            let d = RDyckPath::parse(input, 1)?;
            let (des, ides) = descent_sets_of(&d);
            lines.push(("Des".into(), format!("{des:?}")));
            lines.push(("iDes".into(), format!("{ides:?}")));
            rho_inv(&d)?.to_string()
        }
        (MapName::Nc312, false) => {
            let (sigma, t) = nc_to_312_trace(&parse_nc(input)?)?;
            lines.push(("minima".into(), format!("{:?}", t.minima)));
            lines.push(("maxima".into(), format!("{:?}", t.maxima)));
            lines.push(("peaks".into(), format!("{:?}", t.peaks)));
            lines.push(("valleys".into(), format!("{:?}", t.valleys)));
            lines.push(("path".into(), t.path.clone()));
            lines.push(("lehmer".into(), format!("{:?}", t.lehmer)));
            lines.push(("mu".into(), t.mu.clone()));
            sigma.to_string()
        }
        (MapName::Nc312, true) => nc_from_312(&input.parse()?)?.to_string(),
        (MapName::Psi, false) => psi(&RDyckPath::parse(input, 1)?)?.to_string(),
        (MapName::Psi, true) => psi_inv(&input.parse()?)?.to_string(),
    };
    let mut text = output.clone();
    if trace {
        for (k, v) in &lines {
            text.push_str(&format!("\n{k}: {v}"));
        }
    }
    let trace_json: Vec<serde_json::Value> = lines
        .iter()
        .map(|(k, v)| json!({ "key": k, "value": v }))
        .collect();
    let name = format!("{map:?}").to_lowercase();
    Ok(ctx.emit(
        text,
        json!({ "map": name, "inverse": inverse, "input": input, "output": output, "trace": trace_json }),
    ))
}

fn report_outcome(ctx: &Ctx, reports: Vec<VerificationReport>, summary: bool) -> Outcome {
    let bad = reports.iter().filter(|r| r.unexpected()).count();
    let mut text = reports
        .iter()
        .map(|r| r.to_string())
        .collect::<Vec<_>>()
        .join("\n");
    if summary {
        let pass = reports.iter().filter(|r| !r.unexpected()).count();
        text.push_str(&format!("\n{pass} as expected, {bad} unexpected"));
    }
    let mut o = if ctx.json {
        Outcome::ok(serde_json::to_string_pretty(&reports).unwrap_or_default())
    } else {
        Outcome::ok(text)
    };
    o.code = i32::from(bad > 0);
    o
}

fn execute(cli: Cli, ctx: &mut Ctx) -> Result<Outcome> {
    match cli.command {
        Command::Enumerate {
            family,
            n,
            r,
            filter,
        } => {
            let f = resolve_family(&family, r, filter.as_deref())?;
            ctx.check_size(n, family_limit(f))?;
            let objects: Vec<String> = f.objects(n).map(|o| o.to_string()).collect();
            let records: Vec<ObjectRecord> = objects
                .iter()
                .map(|v| ObjectRecord {
                    family: f.name().to_string(),
                    r: f.r(),
                    n,
                    value: v.clone(),
                })
                .collect();
            Ok(ctx.emit(objects.join("\n"), records))
        }
        Command::Stat {
            name,
            object,
            family,
            r,
        } => {
            let f = Family::parse(&family, r)?;
            let obj = f.parse_object(&object)?;
            let v = stat_value(&name, &obj)?;
            Ok(ctx.emit(
                v.to_string(),
                json!({ "family": f.name(), "r": f.r(), "object": obj.to_string(), "stat": name, "value": v }),
            ))
        }
        Command::Dist {
            family,
            stat,
            n,
            r,
            filter,
        } => {
            let f = resolve_family(&family, r, filter.as_deref())?;
            ctx.check_size(n, family_limit(f))?;
            let p = dist(f, n, &StatSpec::parse(&stat)?)?;
            let params = json!({ "family": f.name(), "r": f.r(), "n": n, "stat": stat });
            Ok(ctx.emit(p.to_string(), poly_json("dist", &p, params)))
        }
        Command::Map {
            map,
            inverse,
            input,
            r,
            trace,
        } => run_map(ctx, map, inverse, &input, r, trace),
        Command::Poly { name, n, r, k } => {
            let by_enumeration = matches!(name.as_str(), "aqt" | "n2" | "n3k-enum");
            ctx.check_size(
                n,
                if by_enumeration {
                    10
                } else {
                    default_limit(r.unwrap_or(1))
                },
            )?;
            let p = eval_poly(&name, n, r, k)?;
            Ok(ctx.emit(
                p.to_string(),
                poly_json(&name, &p, json!({ "n": n, "r": r, "k": k })),
            ))
        }
        Command::Series { name, order, r } => {
            let s = SeriesName::parse(&name)?;
            let limit = identity(&format!("series-{name}"))?.limit;
            ctx.check_size(order, limit)?;
            let rep = series_check(s, r, order);
            Ok(report_outcome(ctx, vec![rep], false))
        }
        Command::Verify {
            identity: name,
            n_max,
            r_max,
            parallel,
        } => match name.as_str() {
            "list" => {
                let reg = registry();
                let text = reg
                    .iter()
                    .map(|i| format!("{:<22} {}", i.name, i.summary))
                    .collect::<Vec<_>>()
                    .join("\n");
                let names: Vec<&str> = reg.iter().map(|i| i.name).collect();
                Ok(ctx.emit(text, names))
            }
            "all" => {
                if let Some(n) = n_max {
                    ctx.check_size(n, default_limit(r_max.unwrap_or(1)))?;
                }
                Ok(report_outcome(
                    ctx,
                    verify_all(n_max, r_max, parallel),
                    true,
                ))
            }
            _ => {
                let id = identity(&name)?;
                let n = n_max.unwrap_or(id.default_n);
                let r = r_max.unwrap_or(id.default_r);
                let limit = id.limit.min(if id.uses_r { default_limit(r) } else { 16 });
                ctx.check_size(n, limit)?;
                Ok(report_outcome(
                    ctx,
                    vec![verify(&id, n, r, parallel)],
                    false,
                ))
            }
        },
        Command::Render {
            what: RenderWhat::Tiling,
            perm,
        } => {
            let w: Permutation = perm.parse()?;
            ctx.check_size(w.n(), default_limit(1))?;
            let t = build_tiling(&w)?;
            let value = json!({ "perm": w.to_string(), "maj": tiling_maj(&t), "tiling": t });
            Ok(ctx.emit(render_tiling(&t), value))
        }
        Command::Golden { table } => {
            let text = golden_dump(&table)?;
            Ok(ctx.emit(
                text.trim_end().to_string(),
                json!({ "table": table, "text": text }),
            ))
        }
    }
}

/// Parses `args` (program name first), runs the command and returns the exit code:
/// 0 success, 1 a verification result other than the expected one, 2 usage or input error.
pub fn run_with<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            if code == 0 {
                let _ = write!(out, "{text}");
            } else {
                let _ = write!(err, "{text}");
            }
            return code;
        }
    };
    let mut ctx = Ctx {
        json: cli.json,
        max: cli.max,
        err,
    };
    match execute(cli, &mut ctx) {
        Ok(o) => {
            let _ = writeln!(out, "{}", o.text);
            o.code
        }
        Err(e) => {
            let _ = writeln!(ctx.err, "error[{}]: {e}", e.code());
            2
        }
    }
}

/// [`run_with`] on the process's stdout and stderr.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let stdout = std::io::stdout();
    let stderr = std::io::stderr();
    run_with(args, &mut stdout.lock(), &mut stderr.lock())
}
