use std::fs::File;
use std::io::{self, BufRead, BufReader, Write};
use std::net::{Ipv4Addr, SocketAddr};
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::sync::Arc;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use qsq_cli::{analyze, batch, bench, open_lexicon, server};
use qsq_core::{Lexicon, ParseError, ParserMode};

#[derive(Parser, Debug)]
#[command(
    name = "qsq",
    version,
    about = "Parse quantified-self questions into structured queries"
)]
struct Cli {
    /// Lexicon file (defaults to the bundled lexicon)
    #[arg(long, global = true)]
    lexicon: Option<PathBuf>,

    /// Parser mode: bag of words (bl), plus tense (iv), plus comparison (ivt)
    #[arg(long, global = true, default_value = "ivt")]
    mode: ParserMode,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Format {
    Json,
    Text,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Parse one query and print its tuple and diagnostics
    Parse {
        query: String,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
    },
    /// Parse a newline-delimited corpus, one JSON result per line
    Batch { corpus: PathBuf },
    /// Measure per-parse latency over a corpus
    Bench {
        corpus: PathBuf,
        #[arg(long, default_value_t = 100, value_parser = clap::value_parser!(u32).range(1..))]
        reps: u32,
    },
    /// Serve the parser over HTTP on localhost
    Serve {
        #[arg(long, default_value_t = 7878)]
        port: u16,
    },
}

fn load(path: Option<&Path>) -> Result<Lexicon, ExitCode> {
    open_lexicon(path).map_err(|e| {
        eprintln!("error: {e}");
        ExitCode::from(1)
    })
}

fn open_corpus(path: &Path) -> Result<BufReader<File>, ExitCode> {
    File::open(path).map(BufReader::new).map_err(|e| {
        eprintln!("error: cannot read corpus {}: {e}", path.display());
        ExitCode::from(1)
    })
}

fn run(cli: Cli) -> Result<(), ExitCode> {
    let lexicon_path = cli.lexicon.as_deref();
    match cli.command {
        Command::Parse { query, format } => {
            let lex = load(lexicon_path)?;
            match analyze(&lex, &query, cli.mode) {
                Ok(analysis) => {
                    match format {
                        Format::Json => println!("{}", analysis.to_json()),
                        Format::Text => print!("{}", analysis.to_text()),
                    }
                    Ok(())
                }
                Err(ParseError::EmptyQuery) => {
                    eprintln!("error: {}", ParseError::EmptyQuery);
                    Err(ExitCode::from(2))
                }
            }
        }
        Command::Batch { corpus } => {
            let lex = load(lexicon_path)?;
            let reader = open_corpus(&corpus)?;
            let stdout = io::stdout();
            let mut out = io::BufWriter::new(stdout.lock());
            batch::run_batch(&lex, reader, cli.mode, &mut out)
                .and_then(|_| out.flush())
                .map_err(|e| {
                    eprintln!("error: {e}");
                    ExitCode::from(1)
                })
        }
        Command::Bench { corpus, reps } => {
            let start = Instant::now();
            let lex = load(lexicon_path)?;
            let load_us = start.elapsed().as_secs_f64() * 1e6;
            let queries: Vec<String> = open_corpus(&corpus)?
                .lines()
                .collect::<Result<Vec<_>, _>>()
                .map_err(|e| {
                    eprintln!("error: cannot read corpus {}: {e}", corpus.display());
                    ExitCode::from(1)
                })?
                .into_iter()
                .map(|l| l.trim().to_string())
                .filter(|l| !l.is_empty())
                .collect();
            let report = bench::run_bench(&lex, &queries, cli.mode, reps as usize, load_us)
                .map_err(|e| {
                    eprintln!("error: {e}");
                    ExitCode::from(1)
                })?;
            println!(
                "{}",
                serde_json::to_string(&report).expect("report serializes")
            );
            Ok(())
        }
        Command::Serve { port } => {
            let lex = Arc::new(load(lexicon_path)?);
            let addr = SocketAddr::from((Ipv4Addr::LOCALHOST, port));
            let runtime = tokio::runtime::Runtime::new().map_err(|e| {
                eprintln!("error: {e}");
                ExitCode::from(1)
            })?;
            runtime.block_on(server::serve(addr, lex)).map_err(|e| {
                eprintln!("error: {e}");
                ExitCode::from(1)
            })
        }
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(code) => code,
    }
}
