fn main() {
    let (code, out) = weylgraded::cli::run_command(std::env::args_os());
    if code == 0 {
        println!("{out}");
    } else {
        eprintln!("{out}");
    }
    std::process::exit(code);
}
