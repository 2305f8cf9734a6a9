fn main() {
    std::process::exit(qshuffle::cli::run());
}
