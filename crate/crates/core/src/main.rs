fn main() {
    std::process::exit(conjrel::cli::run(std::env::args_os()));
}
