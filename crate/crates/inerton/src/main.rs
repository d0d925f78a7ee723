fn main() {
    std::process::exit(inerton::cli::run(std::env::args()));
}
