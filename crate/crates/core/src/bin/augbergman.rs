fn main() {
    std::process::exit(augbergman::cli::run(std::env::args_os()));
}
