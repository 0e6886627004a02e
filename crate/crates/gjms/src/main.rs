fn main() {
    std::process::exit(gjms::cli::main());
}
