use std::io::Write;
use std::process::ExitCode;

use clap::Parser;

use seqcm_cli::commands::exit;
use seqcm_cli::{run, Cli, Format};

/// Caps the rayon pool when `SEQCM_THREADS` is set.
fn configure_threads() -> Result<(), String> {
    let Ok(raw) = std::env::var("SEQCM_THREADS") else { return Ok(()) };
    let n: usize = raw.trim().parse().ok().filter(|&n| n > 0).ok_or(format!("SEQCM_THREADS must be a positive integer, got '{raw}'"))?;
    rayon::ThreadPoolBuilder::new().num_threads(n).build_global().map_err(|e| e.to_string())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Err(msg) = configure_threads() {
        eprintln!("error: {msg}");
        return ExitCode::from(exit::INPUT);
    }
    let outcome = run(&cli);
    if let Some(report) = &outcome.report {
        let out = match cli.format {
            Format::Text => report.to_text(),
            Format::Json => report.to_json(),
        };
        let mut stdout = std::io::stdout().lock();
        // a closed pipe is not worth a panic
        let _ = stdout.write_all(out.as_bytes()).and_then(|_| stdout.flush());
    }
    if let Some(err) = &outcome.error {
        eprintln!("error: {err}");
        if let Some(doc) = &outcome.dump {
            eprintln!("\nthis is a bug; please report it with the following input:\n");
            eprintln!("command: {}", std::env::args().collect::<Vec<_>>().join(" "));
            eprint!("{doc}");
        }
    }
    ExitCode::from(outcome.exit_code)
}
