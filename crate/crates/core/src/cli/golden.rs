use std::fmt::Write;

use crate::bijections::{
    alpha_vector, descent_sets_of, kappa, nc_to_312_trace, phi_trace, psi, rho,
};
use crate::error::{unknown, Result};
use crate::identities::Families;
use crate::objects::{
    enumerate_nc, enumerate_permutations, enumerate_r_dyck, enumerate_r_stirling, parse_nc,
    word_string, Permutation, RStirlingWord,
};
use crate::statistics::{maj, nc_maj, stirling_inv, stirling_maj, sym_maj, DescentConvention};
use crate::tilings::{build_tiling, tiling_maj};

pub const TABLES: [&str; 11] = [
    "table-1", "table-2", "table-4", "figure-3", "figure-4", "catalan", "e2", "kappa", "phi",
    "beta", "rho",
];

fn join<T: ToString>(v: &[T], sep: &str) -> String {
    v.iter().map(T::to_string).collect::<Vec<_>>().join(sep)
}

/// Fixed text layout of one table or worked example.
pub fn golden_dump(id: &str) -> Result<String> {
    let std = DescentConvention::Standard;
    let mut out = String::new();
    match id {
        "table-1" => {
            out.push_str("word INV MAJ\n");
            for w in enumerate_r_stirling(3, 2) {
                let _ = writeln!(out, "{w} {} {}", stirling_inv(&w)?, stirling_maj(&w));
            }
        }
        "table-2" => {
            out.push_str("pi maj\n");
            let mut rows: Vec<(usize, String)> = enumerate_nc(3)
                .map(|p| (nc_maj(&p), p.to_string()))
                .collect();
            rows.sort();
            for (m, p) in rows {
                let _ = writeln!(out, "{p} {m}");
            }
        }
        "table-4" => {
            out.push_str("path maj psi maj\n");
            for d in enumerate_r_dyck(4, 1) {
                let s = psi(&d)?;
                let _ = writeln!(out, "{d} {} {s} {}", maj(d.letters(), std), sym_maj(&s));
            }
        }
        "figure-3" => {
            let w: Permutation = "24135".parse()?;
            let t = build_tiling(&w)?;
            let _ = writeln!(out, "perm {w}");
            for z in t.zigzags() {
                let (x, y) = z.leftmost();
                let _ = writeln!(
                    out,
                    "zigzag {}+{}+{}={}",
                    z.length(),
                    x,
                    (y - 1) / 2,
                    z.maj()
                );
            }
            let _ = writeln!(out, "maj {}", tiling_maj(&t));
        }
        "figure-4" => {
            out.push_str("perm path tiles maj\n");
            for w in enumerate_permutations(4, Some([2, 3, 1])) {
                let t = build_tiling(&w)?;
                let mut majs: Vec<usize> = t.zigzags().map(|z| z.maj()).collect();
                majs.sort_unstable();
                let tiles = if majs.is_empty() {
                    "-".to_string()
                } else {
                    join(&majs, ",")
                };
                let _ = writeln!(out, "{w} {} {tiles} {}", rho(&w)?, tiling_maj(&t));
            }
        }
        "catalan" => {
            let mut f = Families::new();
            for n in 0..=4 {
                let _ = writeln!(out, "C_{n} = {}", f.catalan(n));
            }
        }
        "e2" => {
            let mut f = Families::new();
            for n in 1..=3 {
                let _ = writeln!(out, "E_{n} = {}", f.e_r_general(n, 2));
            }
        }
        "kappa" => {
            let w = RStirlingWord::parse("42112334", 2)?;
            let _ = writeln!(out, "word {w}");
            let _ = writeln!(out, "alpha {}", join(&alpha_vector(&w), " "));
            let _ = writeln!(out, "path {}", kappa(&w)?);
        }
        "phi" => {
            let w = RStirlingWord::parse("2255431134", 2)?;
            let chain = phi_trace(&w)?;
            let left: Vec<String> = chain.iter().map(|(a, _)| word_string(a)).collect();
            let right: Vec<String> = chain.iter().map(|(_, b)| word_string(b)).collect();
            let _ = writeln!(out, "maj {}", left.join(" "));
            let _ = writeln!(out, "inv {}", right.join(" "));
            let image = RStirlingWord::parse(right.last().map_or("", String::as_str), 2)?;
            let _ = writeln!(out, "MAJ {}", stirling_maj(&w));
            let _ = writeln!(out, "INV {}", stirling_inv(&image)?);
        }
        "beta" => {
            let pi = parse_nc("158/24/3/67")?;
            let (sigma, t) = nc_to_312_trace(&pi)?;
            let inv = sigma.inverse();
            let _ = writeln!(out, "pi {pi}");
            let _ = writeln!(out, "maj {}", nc_maj(&pi));
            let _ = writeln!(out, "SX {}", join(&t.minima, " "));
            let _ = writeln!(out, "SY {}", join(&t.maxima, " "));
            let _ = writeln!(out, "SP {}", join(&t.peaks, " "));
            let _ = writeln!(out, "SV {}", join(&t.valleys, " "));
            let _ = writeln!(out, "path {}", t.path);
            let _ = writeln!(out, "mu {}", t.mu);
            let _ = writeln!(out, "sigma {sigma}");
            let _ = writeln!(out, "sigma^-1 {inv}");
            let _ = writeln!(out, "maj(sigma) {}", maj(sigma.values(), std));
            let _ = writeln!(out, "maj(sigma^-1) {}", maj(inv.values(), std));
        }
        "rho" => {
            let w: Permutation = "631245".parse()?;
            let d = rho(&w)?;
            let (des, ides) = descent_sets_of(&d);
            let _ = writeln!(out, "pi {w}");
            let _ = writeln!(out, "Des {}", join(&des, " "));
            let _ = writeln!(out, "iDes {}", join(&ides, " "));
            let _ = writeln!(out, "path {d}");
        }
        _ => return Err(unknown("table", id)),
    }
    Ok(out)
}
