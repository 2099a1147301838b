fn main() {
    std::process::exit(invariant_set::cli::main_with_args(std::env::args_os()));
}
