fn main() {
    std::process::exit(codegree::cli::main_with_args(std::env::args_os()));
}
