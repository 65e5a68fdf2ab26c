use std::io::Write;
use std::process::ExitCode;

fn main() -> ExitCode {
    let outcome = althecke::cli::run(std::env::args_os());
    if let Some(msg) = &outcome.diagnostic {
        eprintln!("{}", msg.trim_end());
    }
    match &outcome.out {
        Some(path) => {
            if let Err(e) = std::fs::write(path, &outcome.output) {
                eprintln!("error: cannot write {}: {e}", path.display());
                return ExitCode::from(1);
            }
        }
        None => {
            let mut stdout = std::io::stdout().lock();
            let _ = stdout.write_all(outcome.output.as_bytes());
        }
    }
    ExitCode::from(outcome.code as u8)
}
