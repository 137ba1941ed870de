use std::process::ExitCode;

use clap::Parser;

use chromaq_cli::{apply_env_caps, run, CommandConfig};

fn main() -> ExitCode {
    let config = CommandConfig::parse();
    let result = apply_env_caps().and_then(|()| run(&config));
    match result {
        Ok(out) => {
            let written = match &config.output {
                Some(path) => std::fs::write(path, &out.document),
                None => {
                    use std::io::Write;
                    std::io::stdout().write_all(out.document.as_bytes())
                }
            };
            if let Err(e) = written {
                eprintln!("chromaq: cannot write output: {e}");
                return ExitCode::from(chromaq_cli::EXIT_USAGE as u8);
            }
            ExitCode::from(out.status as u8)
        }
        Err(e) => {
            eprintln!("chromaq: {}", e.message);
            ExitCode::from(e.status as u8)
        }
    }
}
