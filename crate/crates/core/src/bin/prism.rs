fn main() {
    std::process::exit(prism::shell::run(std::env::args_os()));
}
