fn main() {
    std::process::exit(bqa::cli::main());
}
