fn main() {
    std::process::exit(mvrank::cli::main_with_args(std::env::args_os()));
}
