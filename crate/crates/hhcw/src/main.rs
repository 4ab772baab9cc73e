fn main() {
    std::process::exit(hhcw::cli::run_from_env());
}
