//! Thin process wrapper over [`biint::cli::run`]: forward the argv,
//! print what came back, exit with the verdict code.

fn main() {
    let outcome = biint::cli::run(std::env::args_os());
    print!("{}", outcome.stdout);
    eprint!("{}", outcome.stderr);
    std::process::exit(outcome.code);
}
