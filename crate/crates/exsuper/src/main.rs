use std::io::Write;
use std::process::ExitCode;

use clap::Parser;
use exsuper::cli::{run, Cli};

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = match run(&cli.command) {
        Ok(o) => o,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    };
    // Render fully before writing so a failure never leaves partial JSON.
    let mut text = serde_json::to_string_pretty(&outcome.json).expect("json renders");
    text.push('\n');
    let written = match cli.command.opts().out.as_deref() {
        Some(p) if p.as_os_str() != "-" => std::fs::write(p, text),
        _ => std::io::stdout().lock().write_all(text.as_bytes()),
    };
    if let Err(e) = written {
        eprintln!("error: {e}");
        return ExitCode::from(2);
    }
    ExitCode::from(outcome.exit_code() as u8)
}
