fn main() {
    std::process::exit(weil::cli::run(std::env::args_os()));
}
