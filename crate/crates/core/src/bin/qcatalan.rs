fn main() {
    std::process::exit(qcatalan::cli::run(std::env::args_os()));
}
