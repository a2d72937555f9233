fn main() {
    std::process::exit(josephus_cli::run());
}
