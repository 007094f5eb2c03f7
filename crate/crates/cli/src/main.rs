use std::io::Write;

use clap::Parser;

fn main() {
    let cli = superpair_cli::Cli::parse();
    let out = superpair_cli::run(&cli);
    let _ = std::io::stdout().write_all(out.stdout.as_bytes());
    let _ = std::io::stderr().write_all(out.stderr.as_bytes());
    std::process::exit(out.code);
}
