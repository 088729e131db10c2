fn main() {
    std::process::exit(schurring::cli::run(std::env::args_os()));
}
