fn main() {
    let outcome = hocalg::cli::run::run(std::env::args_os());
    print!("{}", outcome.output);
    std::process::exit(outcome.exit);
}
