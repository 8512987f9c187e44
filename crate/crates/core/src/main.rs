fn main() {
    std::process::exit(simplex_sum::cli::main_with_args());
}
