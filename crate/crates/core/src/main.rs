fn main() {
    std::process::exit(adeg::cli::main());
}
