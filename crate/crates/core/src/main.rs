fn main() {
    std::process::exit(ncq::cli::main_with_args(std::env::args_os()));
}
