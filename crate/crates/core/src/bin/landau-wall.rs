fn main() {
    std::process::exit(landau_wall::cli::run(std::env::args_os()));
}
