//! Driving the command-line jobs from code: the same reports the binary prints.
//!
//! Run with `cargo run --example cli_jobs`.

use chroma::cli::{run_on, Command, Format, JobSpec};

fn main() {
    let c3_rank2 = include_str!("../data/c3_rank2.json");
    for command in [Command::Diagram, Command::CheckDatum, Command::CheckDouble] {
        let mut job = JobSpec::new(command);
        job.format = Format::Text;
        let out = run_on(&job, c3_rank2);
        println!("== {} (exit {})", command.name(), out.code);
        print!("{}", out.report.unwrap_or_default());
    }
    let job = JobSpec::new(Command::Triangular);
    let out = run_on(&job, r#"{"group": {"orders": [2, 2]}, "beta": [["0", "1/2"], ["1/2", "0"]]}"#);
    println!("== triangular (exit {})\n{}", out.code, out.report.unwrap_or_default());
}
