use qcatalan::cli::{golden_dump, TABLES};

fn main() {
    for id in TABLES {
        println!("== {id}");
        print!("{}", golden_dump(id).unwrap());
    }
}
