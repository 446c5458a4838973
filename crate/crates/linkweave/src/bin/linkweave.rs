fn main() {
    std::process::exit(linkweave::cli::main_with_args(std::env::args_os()));
}
