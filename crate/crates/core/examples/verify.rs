//! Runs the whole identity registry and prints one line per check.
use qcatalan::identities::verify_all;

fn main() {
    let reports = verify_all(None, None, false);
    for rep in &reports {
        println!("{rep}");
    }
    let bad = reports.iter().filter(|r| r.unexpected()).count();
    println!("{} checks, {bad} unexpected", reports.len());
}
