use std::process::ExitCode;

use clap::Parser;
use lanke_cli::{run, to_json, to_text, Cli, Format};

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(envelope) => {
            let out = match cli.format {
                Format::Text => to_text(&envelope),
                Format::Json => to_json(&envelope) + "\n",
            };
            print!("{out}");
            if envelope.report.all_as_expected() {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
