use std::process::ExitCode;

use clap::Parser;
use tda_cli::{run, Cli};

fn main() -> ExitCode {
    let config = Cli::parse().into_config();
    let stdout = std::io::stdout();
    match run(&config, &mut stdout.lock()) {
        Ok(written) => {
            for path in written {
                eprintln!("wrote {}", path.display());
            }
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("tda: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
