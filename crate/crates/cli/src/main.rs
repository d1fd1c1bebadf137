use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use wazn::oracle;
use wazn_cli::{load_lexicon, run, Mode, OutputFormat, RunConfig};

/// Morphological analyzer and stemmer for unvocalized Arabic text.
#[derive(Parser, Debug)]
#[command(version, about, args_conflicts_with_subcommands = true)]
struct Cli {
    /// Lexicon directory (defaults to the bundled seed lexicon).
    #[arg(long, global = true, env = "WAZN_LEXICONS", value_name = "DIR")]
    lexicons: Option<PathBuf>,

    /// What the stem column holds.
    #[arg(long, value_enum, default_value = "full")]
    mode: Mode,

    #[arg(long, value_enum, default_value = "tsv")]
    format: OutputFormat,

    /// Skip tokens whose best analysis is a stop word.
    #[arg(long)]
    drop_stop_words: bool,

    /// One line per candidate analysis, with a rank column.
    #[arg(long)]
    all_candidates: bool,

    /// Print token and root counts to standard error when done.
    #[arg(long)]
    stats: bool,

    /// Input file; standard input when absent.
    input: Option<PathBuf>,

    #[command(subcommand)]
    command: Option<Command>,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Compare the segmenter against the brute-force oracle for each word.
    Diff {
        #[arg(required = true)]
        words: Vec<String>,
    },
}

fn diff(config: &RunConfig, words: &[String]) -> anyhow::Result<bool> {
    let lex = load_lexicon(config)?;
    let mut out = io::stdout().lock();
    let mut all_agree = true;
    for word in words {
        let report = oracle::check(&wazn::normalize(word), &lex);
        all_agree &= report.agrees();
        serde_json::to_writer(&mut out, &report)?;
        writeln!(out)?;
    }
    Ok(all_agree)
}

fn is_broken_pipe(err: &anyhow::Error) -> bool {
    err.chain()
        .filter_map(|e| e.downcast_ref::<io::Error>())
        .any(|e| e.kind() == io::ErrorKind::BrokenPipe)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let config = RunConfig {
        lexicon_dir: cli.lexicons,
        mode: cli.mode,
        output_format: cli.format,
        drop_stop_words: cli.drop_stop_words,
        all_candidates: cli.all_candidates,
        input: cli.input,
        stats: cli.stats,
    };
    let result = match &cli.command {
        Some(Command::Diff { words }) => diff(&config, words).map(|ok| ok as u8),
        None => run(&config).map(|_| 1),
    };
    match result {
        Ok(1) => ExitCode::SUCCESS,
        Ok(_) => ExitCode::FAILURE,
        Err(e) if is_broken_pipe(&e) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("wazn: {e:#}");
            ExitCode::FAILURE
        }
    }
}
