fn main() {
    std::process::exit(orientable::cli::main_with_args(std::env::args_os()));
}
