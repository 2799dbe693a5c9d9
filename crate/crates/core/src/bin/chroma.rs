use std::io::Write;
use std::process::ExitCode;

use clap::Parser;

use chroma::cli::{configure_threads, run, Cli, JobSpec};

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Err(e) = configure_threads() {
        eprintln!("chroma: {e}");
        return ExitCode::from(2);
    }
    let job = JobSpec::from(cli);
    let out = run(&job);
    if let Some(e) = &out.error {
        eprintln!("chroma: {e}");
    }
    if job.output.is_none() {
        if let Some(r) = &out.report {
            let mut stdout = std::io::stdout().lock();
            let _ = stdout.write_all(r.as_bytes());
        }
    }
    ExitCode::from(out.code as u8)
}
