fn main() {
    std::process::exit(gitkit_cli::run(std::env::args_os()));
}
