fn main() {
    std::process::exit(supertrop::cli::run(std::env::args_os()));
}
