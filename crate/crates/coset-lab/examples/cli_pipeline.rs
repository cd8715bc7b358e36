//! The command-line front end driven in-process.

use coset_lab::cli::run;

fn main() {
    let args = |s: &str| s.split_whitespace().map(String::from).collect::<Vec<_>>();
    let doc = r#"{"p": 3, "mu": 2, "generators": [[1, 1], [1, 4]]}"#;
    let (out, code) = run(&args("submodule canon"), doc);
    println!("exit {code}\n{out}");

    let (out, code) = run(&args("mat inverse"), r#"{"a": {"p": 3, "mu": 2, "rows": [[3, 0], [0, 1]]}}"#);
    println!("exit {code}\n{out}");

    let (report, code) = run(&args("verify coset --p 3 --mu 2 --seed 7"), "");
    print!("{report}");
    println!("exit {code}");
}
