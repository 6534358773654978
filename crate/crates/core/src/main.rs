fn main() {
    let code = prodcut::cli::run(std::env::args_os());
    std::process::exit(code);
}
