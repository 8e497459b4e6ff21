use std::io::Write;
use std::process::ExitCode;

use blfilter::cli::{run_args, EXIT_USAGE};

fn main() -> ExitCode {
    let (code, text) = run_args(std::env::args_os());
    if code == EXIT_USAGE {
        eprint!("{text}");
    } else {
        let mut out = std::io::stdout().lock();
        let _ = out.write_all(text.as_bytes());
    }
    ExitCode::from(code as u8)
}
