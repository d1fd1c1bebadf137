//! Corpus front end: reads text, analyzes every token and writes one TSV or
//! JSONL record per token (or per candidate) in input order.

use std::collections::{BTreeMap, BTreeSet};
use std::fs::File;
use std::io::{self, BufRead, BufReader, Write};
use std::path::PathBuf;

use anyhow::{Context, Result};
use rayon::prelude::*;
use serde::Serialize;
use wazn::{analyze, stem_of, Analysis, AnalysisKind, AnalysisSet, LexiconSet, StemMode, Token};

/// Tokens analyzed per parallel batch.
const BATCH_TOKENS: usize = 8192;

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Mode {
    Root,
    Light,
    Segment,
    Full,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum OutputFormat {
    Tsv,
    Jsonl,
}

#[derive(Debug, Clone)]
pub struct RunConfig {
    /// `None` means the bundled seed lexicon.
    pub lexicon_dir: Option<PathBuf>,
    pub mode: Mode,
    pub output_format: OutputFormat,
    pub drop_stop_words: bool,
    pub all_candidates: bool,
    /// `None` means standard input.
    pub input: Option<PathBuf>,
    pub stats: bool,
}

impl Default for RunConfig {
    fn default() -> Self {
        RunConfig {
            lexicon_dir: None,
            mode: Mode::Full,
            output_format: OutputFormat::Tsv,
            drop_stop_words: false,
            all_candidates: false,
            input: None,
            stats: false,
        }
    }
}

pub const TSV_COLUMNS: [&str; 13] = [
    "position",
    "raw",
    "normalized",
    "kind",
    "proclitic",
    "prefix",
    "stem",
    "suffix",
    "enclitic",
    "root",
    "scheme",
    "category",
    "class",
];

pub fn load_lexicon(config: &RunConfig) -> Result<LexiconSet> {
    match &config.lexicon_dir {
        Some(dir) => wazn::load_lexicons(dir)
            .with_context(|| format!("loading lexicons from {}", dir.display())),
        None => Ok(LexiconSet::seed()),
    }
}

/// Counts collected while processing.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Stats {
    pub tokens: usize,
    pub emitted_lines: usize,
    pub kinds: BTreeMap<&'static str, usize>,
    pub roots: BTreeSet<String>,
}

impl Stats {
    fn record(&mut self, set: &AnalysisSet) {
        self.tokens += 1;
        let best = set.best();
        *self.kinds.entry(best.kind.as_str()).or_default() += 1;
        if let Some(root) = &best.root {
            self.roots.insert(root.clone());
        }
    }

    pub fn write_summary(&self, out: &mut dyn Write) -> io::Result<()> {
        writeln!(out, "tokens\t{}", self.tokens)?;
        for kind in AnalysisKind::ALL {
            let n = self.kinds.get(kind.as_str()).copied().unwrap_or(0);
            writeln!(out, "kind.{}\t{}", kind.as_str(), n)?;
        }
        writeln!(out, "distinct_roots\t{}", self.roots.len())
    }
}

fn stem_text(analysis: &Analysis, mode: Mode) -> String {
    match mode {
        Mode::Root => stem_of(analysis, StemMode::Root).to_text(),
        Mode::Light | Mode::Segment | Mode::Full => analysis.base.clone(),
    }
}

/// Escapes backslash, TAB and line breaks so a field never splits a record.
pub fn escape_tsv(field: &str) -> String {
    let mut out = String::with_capacity(field.len());
    for c in field.chars() {
        match c {
            '\\' => out.push_str("\\\\"),
            '\t' => out.push_str("\\t"),
            '\n' => out.push_str("\\n"),
            '\r' => out.push_str("\\r"),
            c => out.push(c),
        }
    }
    out
}

#[derive(Serialize)]
struct JsonRow<'a> {
    position: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    rank: Option<usize>,
    raw: &'a str,
    normalized: &'a str,
    stem: String,
    #[serde(flatten)]
    analysis: &'a Analysis,
}

fn format_row(
    token: &Token,
    analysis: &Analysis,
    rank: Option<usize>,
    config: &RunConfig,
    out: &mut String,
) {
    let stem = stem_text(analysis, config.mode);
    match config.output_format {
        OutputFormat::Tsv => {
            let mut fields: Vec<String> = vec![token.position.to_string()];
            if let Some(rank) = rank {
                fields.push(rank.to_string());
            }
            let opt = |s: &Option<String>| s.clone().unwrap_or_default();
            fields.extend(
                [
                    token.raw.clone(),
                    token.normalized.clone(),
                    analysis.kind.as_str().to_owned(),
                    analysis.proclitic.clone(),
                    analysis.prefix.clone(),
                    stem,
                    analysis.suffix.clone(),
                    analysis.enclitic.clone(),
                    opt(&analysis.root),
                    opt(&analysis.scheme),
                    analysis
                        .category
                        .map(|c| c.as_str().to_owned())
                        .unwrap_or_default(),
                    analysis
                        .successor_class
                        .map(|c| c.as_str().to_owned())
                        .unwrap_or_default(),
                ]
                .iter()
                .map(|f| escape_tsv(f)),
            );
            out.push_str(&fields.join("\t"));
        }
        OutputFormat::Jsonl => {
            let row = JsonRow {
                position: token.position,
                rank,
                raw: &token.raw,
                normalized: &token.normalized,
                stem,
                analysis,
            };
            out.push_str(&serde_json::to_string(&row).expect("rows serialize"));
        }
    }
    out.push('\n');
}

fn render(set: &AnalysisSet, config: &RunConfig) -> String {
    let mut out = String::new();
    if config.drop_stop_words && set.best().kind == AnalysisKind::StopWord {
        return out;
    }
    if config.all_candidates {
        for (i, a) in set.candidates.iter().enumerate() {
            format_row(&set.token, a, Some(i + 1), config, &mut out);
        }
    } else {
        format_row(&set.token, set.best(), None, config, &mut out);
    }
    out
}

/// Streams `input` through the analyzer into `output`. Batches are analyzed
/// in parallel and written back in input order.
pub fn process<R: BufRead, W: Write>(
    lex: &LexiconSet,
    config: &RunConfig,
    mut input: R,
    output: &mut W,
) -> io::Result<Stats> {
    let mut stats = Stats::default();
    let mut next_position = 0;
    let mut batch: Vec<Token> = Vec::with_capacity(BATCH_TOKENS);
    let mut line = String::new();

    let flush = |batch: &mut Vec<Token>, stats: &mut Stats, output: &mut W| -> io::Result<()> {
        let rendered: Vec<(AnalysisSet, String)> = batch
            .par_iter()
            .map(|t| {
                let set = analyze(t, lex);
                let text = render(&set, config);
                (set, text)
            })
            .collect();
        for (set, text) in &rendered {
            stats.record(set);
            stats.emitted_lines += text.lines().count();
            output.write_all(text.as_bytes())?;
        }
        batch.clear();
        Ok(())
    };

    loop {
        line.clear();
        if input.read_line(&mut line)? == 0 {
            break;
        }
        let tokens = wazn::normalizer::tokenize_from(&line, next_position);
        next_position += tokens.len();
        batch.extend(tokens);
        if batch.len() >= BATCH_TOKENS {
            flush(&mut batch, &mut stats, output)?;
        }
    }
    flush(&mut batch, &mut stats, output)?;
    output.flush()?;
    Ok(stats)
}

/// Runs a whole configuration against the real files and standard streams.
pub fn run(config: &RunConfig) -> Result<Stats> {
    let lex = load_lexicon(config)?;
    let stdout = io::stdout();
    let mut out = io::BufWriter::new(stdout.lock());
    let stats = match &config.input {
        Some(path) => {
            let file =
                File::open(path).with_context(|| format!("cannot open {}", path.display()))?;
            process(&lex, config, BufReader::new(file), &mut out)
                .with_context(|| format!("reading {}", path.display()))?
        }
        None => {
            process(&lex, config, io::stdin().lock(), &mut out).context("reading standard input")?
        }
    };
    if config.stats {
        stats.write_summary(&mut io::stderr().lock())?;
    }
    Ok(stats)
}
