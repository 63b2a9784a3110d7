fn main() {
    std::process::exit(mechlie::cli::run(std::env::args_os()));
}
