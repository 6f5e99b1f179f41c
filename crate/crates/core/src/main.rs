fn main() {
    std::process::exit(rigidlab::cli::run());
}
