fn main() {
    std::process::exit(casimirlab::cli::main());
}
