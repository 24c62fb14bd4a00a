use std::io::Write;
use std::process::ExitCode;

use clap::Parser;
use cusp_atlas_cli::{render::render, run, Cli, Exit};

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = run(&cli);
    for line in &outcome.diagnostics {
        eprintln!("{line}");
    }
    let mut code = outcome.exit;
    if let Some(doc) = &outcome.document {
        let text = render(doc, cli.format);
        let written = match &cli.output {
            Some(path) => std::fs::write(path, text)
                .map_err(|e| format!("cannot write {}: {e}", path.display())),
            None => std::io::stdout()
                .write_all(text.as_bytes())
                .map_err(|e| format!("cannot write stdout: {e}")),
        };
        if let Err(e) = written {
            eprintln!("{e}");
            code = Exit::Usage;
        }
    }
    ExitCode::from(code.code() as u8)
}
