fn main() {
    std::process::exit(jifkit::cli::main_with_args(std::env::args_os()));
}
