fn main() {
    std::process::exit(qdetect::cli::main());
}
