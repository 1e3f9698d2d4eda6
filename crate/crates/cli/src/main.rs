use std::io::{Read, Write};
use std::process::ExitCode;

fn main() -> ExitCode {
    let args: Vec<String> = std::env::args().collect();
    // only block on stdin when a file argument asks for it
    let mut stdin = Vec::new();
    if args.iter().skip(1).any(|a| a == "-") {
        if let Err(e) = std::io::stdin().read_to_end(&mut stdin) {
            eprintln!("error: stdin: {e}");
            return ExitCode::from(2);
        }
    }
    let out = rkp_cli::run(&args, &stdin);
    let _ = std::io::stdout().write_all(&out.stdout);
    let _ = std::io::stderr().write_all(&out.stderr);
    ExitCode::from(out.code as u8)
}
