fn main() {
    std::process::exit(specfun::cli::run(std::env::args_os()));
}
