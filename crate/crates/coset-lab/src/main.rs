use std::io::{IsTerminal, Read};

fn main() {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let mut input = String::new();
    let wants_stdin = !args.iter().any(|a| matches!(a.as_str(), "--in" | "verify" | "help" | "-h" | "--help" | "-V" | "--version") || a.starts_with("--in="));
    if wants_stdin && !std::io::stdin().is_terminal() {
        let _ = std::io::stdin().read_to_string(&mut input);
    }
    let (out, code) = coset_lab::cli::run(&args, &input);
    print!("{out}");
    std::process::exit(code);
}
