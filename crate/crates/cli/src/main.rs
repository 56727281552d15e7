mod args;
mod commands;
mod corpus;
mod error;
mod output;

use std::io::{self, BufWriter, Write};
use std::process::ExitCode;

use clap::Parser;

use args::{Cli, Command, Format};
use commands::Ctx;
use corpus::Guard;
use error::CliError;
use output::Doc;

fn run(cli: &Cli) -> Result<(Vec<Doc>, bool), CliError> {
    let mut pool = rayon::ThreadPoolBuilder::new();
    if let Some(w) = cli.workers.filter(|&w| w > 0) {
        pool = pool.num_threads(w);
    }
    let ctx = Ctx {
        guard: Guard {
            max_n: cli.max_n,
            force: cli.force,
        },
        pool: pool.build().map_err(|e| CliError::Input(e.to_string()))?,
    };
    let docs = match &cli.command {
        Command::Ideal { source, kind } => commands::ideal(&ctx, source, *kind)?,
        Command::Primes { source, kind } => commands::primes(&ctx, source, *kind)?,
        Command::SpVertices { source, kind } => commands::sp_vertices(&ctx, source, *kind)?,
        Command::Invariants { source, kind } => commands::invariants(&ctx, source, *kind)?,
        Command::Sympower { ideal, m } => commands::sympower(ideal, *m)?,
        Command::Verify {
            theorem,
            corpus,
            kind,
        } => return commands::verify(&ctx, theorem, corpus, *kind),
        Command::Conjectures { source } => commands::conjectures(&ctx, source)?,
    };
    Ok((docs, true))
}

fn emit(docs: &[Doc], format: Format) -> io::Result<()> {
    let mut out = BufWriter::new(io::stdout().lock());
    for d in docs {
        match format {
            Format::Json => writeln!(out, "{}", d.json)?,
            Format::Text => writeln!(out, "{}", d.text)?,
        }
    }
    out.flush()
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok((docs, ok)) => {
            if let Err(e) = emit(&docs, cli.format) {
                eprintln!("edgesym: {e}");
                return ExitCode::from(2);
            }
            ExitCode::from(if ok { 0 } else { 1 })
        }
        Err(e) => {
            eprintln!("edgesym: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
