fn main() {
    std::process::exit(motivic::cli::main());
}
