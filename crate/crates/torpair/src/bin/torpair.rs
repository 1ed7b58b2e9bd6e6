fn main() {
    std::process::exit(torpair::cli::run(std::env::args_os()));
}
