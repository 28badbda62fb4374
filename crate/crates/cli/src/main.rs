use std::process::ExitCode;

use clap::Parser;

fn main() -> ExitCode {
    let cli = bicolor_cli::commands::Cli::parse();
    let stdout = std::io::stdout();
    let stderr = std::io::stderr();
    match bicolor_cli::commands::run(cli, &mut stdout.lock(), &mut stderr.lock()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.code as u8)
        }
    }
}
