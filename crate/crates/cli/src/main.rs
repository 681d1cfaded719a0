use std::fs::{self, File};
use std::io::{self, BufReader, BufWriter, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{anyhow, Context};
use clap::{Args, Parser, Subcommand, ValueEnum};
use ocrlev::noise::{generate_stratified_corpus, read_corpus, write_corpus};
use ocrlev::{
    distance_matrix, evaluate, generate_corpus, lookup, ConfusionGroupSet, CorpusPair, CostModel,
    Lexicon, LoadOptions, NoiseParams, DEFAULT_K,
};

#[derive(Parser)]
#[command(
    name = "ocrlev",
    version,
    about = "Dictionary lookup with confusion-group weighted Levenshtein distance"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the distance between two words
    Distance(DistanceArgs),
    /// Print the nearest dictionary words to a query
    Lookup(LookupArgs),
    /// Write a corpus of dictionary words with simulated OCR noise
    Corrupt(CorruptArgs),
    /// Compare classic and weighted correction over a noisy corpus
    Eval(EvalArgs),
}

#[derive(Args)]
struct DistanceArgs {
    source: String,
    target: String,
    /// Confusion group file (`MEMBERS WEIGHT` lines); classic costs if absent
    #[arg(long)]
    groups: Option<PathBuf>,
    /// Also print the full DP matrix
    #[arg(short, long)]
    verbose: bool,
}

#[derive(Args)]
struct LexiconArgs {
    /// Dictionary file, one word per line
    dict: PathBuf,
    /// Keep only dictionary words of these lengths, e.g. `3,5`
    #[arg(long, value_delimiter = ',')]
    lengths: Vec<usize>,
}

#[derive(Args)]
struct LookupArgs {
    query: String,
    #[command(flatten)]
    lexicon: LexiconArgs,
    /// Confusion group file; classic costs if absent
    #[arg(long)]
    groups: Option<PathBuf>,
    /// Number of candidates; ties with the last one are always included
    #[arg(long, default_value_t = DEFAULT_K, value_parser = clap::builder::RangedU64ValueParser::<usize>::new().range(1..))]
    k: usize,
}

#[derive(Args)]
struct NoiseArgs {
    /// Number of corpus pairs, split evenly across `--lengths` when given
    #[arg(long, default_value_t = 500)]
    n: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Per-letter substitution probability
    #[arg(long = "p-sub", default_value_t = NoiseParams::DEFAULT_P_SUB)]
    p_sub: f64,
    /// Probability that a substituted grouped letter stays in its group
    #[arg(long, default_value_t = NoiseParams::DEFAULT_BIAS)]
    bias: f64,
}

#[derive(Args)]
struct CorruptArgs {
    #[command(flatten)]
    lexicon: LexiconArgs,
    #[command(flatten)]
    noise: NoiseArgs,
    /// Confusion group file; the built-in groups if absent
    #[arg(long)]
    groups: Option<PathBuf>,
    /// Output file; standard output if absent
    #[arg(long, short)]
    out: Option<PathBuf>,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Human,
    Machine,
}

#[derive(Args)]
struct EvalArgs {
    #[command(flatten)]
    lexicon: LexiconArgs,
    /// Corpus TSV to evaluate; generated from the noise flags if absent
    #[arg(long)]
    corpus: Option<PathBuf>,
    #[command(flatten)]
    noise: NoiseArgs,
    /// Confusion group file for the weighted method; the built-in groups if absent
    #[arg(long)]
    groups: Option<PathBuf>,
    #[arg(long, default_value_t = DEFAULT_K, value_parser = clap::builder::RangedU64ValueParser::<usize>::new().range(1..))]
    k: usize,
    #[arg(long, value_enum, default_value_t = Format::Human)]
    format: Format,
}

/// A failure and the exit status it maps to.
enum Failure {
    /// Bad usage or configuration (exit 1).
    Config(anyhow::Error),
    /// Bad or unreadable data (exit 2).
    Data(anyhow::Error),
}

impl From<ocrlev::Error> for Failure {
    fn from(e: ocrlev::Error) -> Failure {
        if e.is_config() {
            Failure::Config(e.into())
        } else {
            Failure::Data(e.into())
        }
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Failure {
        Failure::Data(e.into())
    }
}

type CmdResult = Result<(), Failure>;

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() {
                ExitCode::from(1)
            } else {
                ExitCode::SUCCESS
            };
        }
    };
    let result = match cli.command {
        Command::Distance(args) => cmd_distance(args),
        Command::Lookup(args) => cmd_lookup(args),
        Command::Corrupt(args) => cmd_corrupt(args),
        Command::Eval(args) => cmd_eval(args),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Config(e)) => {
            eprintln!("error: {e:#}");
            ExitCode::from(1)
        }
        Err(Failure::Data(e)) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}

fn load_groups(path: &Path) -> Result<ConfusionGroupSet, Failure> {
    let text = fs::read_to_string(path)
        .with_context(|| format!("reading group file {}", path.display()))
        .map_err(Failure::Config)?;
    ConfusionGroupSet::parse_config(&text)
        .with_context(|| format!("group file {}", path.display()))
        .map_err(Failure::Config)
}

fn model_or_classic(groups: Option<&Path>) -> Result<CostModel, Failure> {
    Ok(match groups {
        Some(p) => CostModel::new(load_groups(p)?),
        None => CostModel::classic(),
    })
}

fn groups_or_default(groups: Option<&Path>) -> Result<ConfusionGroupSet, Failure> {
    match groups {
        Some(p) => load_groups(p),
        None => Ok(ConfusionGroupSet::default_groups()),
    }
}

fn load_lexicon(args: &LexiconArgs) -> Result<Lexicon, Failure> {
    let options = if args.lengths.is_empty() {
        LoadOptions::default()
    } else {
        LoadOptions::lengths(args.lengths.iter().copied())
    };
    let lex = Lexicon::load_path(&args.dict, &options)
        .with_context(|| format!("loading dictionary {}", args.dict.display()))
        .map_err(Failure::Data)?;
    let stats = lex.stats();
    if stats.skipped > 0 {
        eprintln!(
            "note: {} of {} dictionary lines skipped (non-words or filtered lengths)",
            stats.skipped,
            stats.skipped + stats.duplicates + lex.len()
        );
    }
    Ok(lex)
}

fn generate(
    lex: &Lexicon,
    lengths: &[usize],
    noise: &NoiseArgs,
    groups: &ConfusionGroupSet,
) -> Result<Vec<CorpusPair>, Failure> {
    let params = NoiseParams::new(noise.p_sub, noise.bias, noise.seed)?;
    if lengths.is_empty() {
        return Ok(generate_corpus(lex, noise.n, &params, groups)?);
    }
    let mut lengths = lengths.to_vec();
    lengths.sort_unstable();
    lengths.dedup();
    let share = noise.n / lengths.len();
    let extra = noise.n % lengths.len();
    let plan: Vec<(usize, usize)> = lengths
        .iter()
        .enumerate()
        .map(|(i, &len)| (len, share + usize::from(i < extra)))
        .collect();
    generate_stratified_corpus(lex, &plan, &params, groups)
        .with_context(|| "the dictionary has no words of some requested length")
        .map_err(Failure::Data)
}

fn cmd_distance(args: DistanceArgs) -> CmdResult {
    let model = model_or_classic(args.groups.as_deref())?;
    let matrix = distance_matrix(&args.source, &args.target, &model)?;
    let mut out = io::stdout().lock();
    if args.verbose {
        write!(out, "{matrix}")?;
    }
    writeln!(out, "{}", matrix.bottom_right())?;
    Ok(())
}

fn cmd_lookup(args: LookupArgs) -> CmdResult {
    let model = model_or_classic(args.groups.as_deref())?;
    let lex = load_lexicon(&args.lexicon)?;
    let result = lookup(&lex, &args.query, &model, args.k)?;
    let mut out = BufWriter::new(io::stdout().lock());
    for c in &result.candidates {
        writeln!(out, "{}\t{}", c.word, c.dist)?;
    }
    out.flush()?;
    Ok(())
}

fn cmd_corrupt(args: CorruptArgs) -> CmdResult {
    let groups = groups_or_default(args.groups.as_deref())?;
    let lex = load_lexicon(&args.lexicon)?;
    let pairs = generate(&lex, &args.lexicon.lengths, &args.noise, &groups)?;
    match &args.out {
        Some(path) => {
            let file = File::create(path)
                .with_context(|| format!("creating {}", path.display()))
                .map_err(Failure::Data)?;
            write_corpus(&pairs, BufWriter::new(file))?;
        }
        None => write_corpus(&pairs, BufWriter::new(io::stdout().lock()))?,
    }
    Ok(())
}

fn cmd_eval(args: EvalArgs) -> CmdResult {
    let groups = groups_or_default(args.groups.as_deref())?;
    let lex = load_lexicon(&args.lexicon)?;
    let pairs = match &args.corpus {
        Some(path) => {
            let file = File::open(path)
                .with_context(|| format!("opening corpus {}", path.display()))
                .map_err(Failure::Data)?;
            read_corpus(BufReader::new(file))
                .with_context(|| format!("corpus {}", path.display()))
                .map_err(Failure::Data)?
        }
        None => generate(&lex, &args.lexicon.lengths, &args.noise, &groups)?,
    };
    if pairs.is_empty() {
        return Err(Failure::Data(anyhow!("empty corpus")));
    }
    let report = evaluate(
        &lex,
        &pairs,
        &CostModel::classic(),
        &CostModel::new(groups),
        args.k,
    )?;
    if report.skipped > 0 {
        eprintln!(
            "note: {} corpus records with an empty observed word skipped",
            report.skipped
        );
    }
    let text = match args.format {
        Format::Human => report.to_human(),
        Format::Machine => report.to_machine(),
    };
    io::stdout().lock().write_all(text.as_bytes())?;
    Ok(())
}
