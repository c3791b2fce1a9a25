fn main() {
    std::process::exit(bpskalc::cli::run(std::env::args_os()));
}
