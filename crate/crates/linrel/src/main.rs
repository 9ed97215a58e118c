fn main() {
    let (code, out) = linrel::cli::run(std::env::args_os());
    print!("{out}");
    std::process::exit(code);
}
