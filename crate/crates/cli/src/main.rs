fn main() {
    std::process::exit(lefschetz_cli::main_with_args(std::env::args_os()));
}
