fn main() {
    std::process::exit(cyclo_schur::cli::main());
}
