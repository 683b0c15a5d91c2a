//! Lists every family at a small size.
use qcatalan::identities::Family;

fn main() {
    for (name, r) in [
        ("dyck", 1),
        ("dyck", 2),
        ("stirling", 2),
        ("perm231", 1),
        ("nc", 1),
        ("sym", 1),
    ] {
        let family = Family::parse(name, r).unwrap();
        let objects: Vec<String> = family.objects(3).map(|o| o.to_string()).collect();
        println!("{family} n=3 ({}): {}", objects.len(), objects.join(" "));
    }
}
