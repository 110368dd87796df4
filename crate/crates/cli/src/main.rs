fn main() {
    let code = leibniz::cli::main_with_args(std::env::args().collect());
    std::process::exit(code);
}
