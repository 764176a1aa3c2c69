use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use freebraid::braid::{self, BraidWord, InvariantOptions};
use freebraid::dynamics::{self, Detector, DynamicalSystem};
use freebraid::group::{
    are_conjugate_with, are_equal_with, enumerate_tetrahedron_relations, parse_word, reduce_with,
    CyclicWord, GroupSignature, Word,
};
use freebraid::picture;
use freebraid::Error;

/// Free k-braid groups: word and conjugacy problems, trisecant invariants
/// of braids, pictures.
#[derive(Parser, Debug)]
#[command(name = "freebraid", version)]
struct Cli {
    /// Number of strands.
    #[arg(long, global = true)]
    n: Option<usize>,
    /// Generator size (2 or more; 3 or 4 for invariants and scans).
    #[arg(long, global = true)]
    k: Option<usize>,
    /// Seed for perturbation retries.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Maximum number of states visited by a reduction.
    #[arg(long, global = true, default_value_t = freebraid::group::DEFAULT_BUDGET)]
    budget: usize,
    /// Read the (first) input from this file instead of the command line.
    #[arg(long, global = true)]
    file: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Print the least minimal representative and its length.
    Reduce { word: Option<String> },
    /// Decide whether two words are equal.
    Equal { a: String, b: Option<String> },
    /// Decide whether two words are conjugate.
    Conjugate { a: String, b: Option<String> },
    /// Trisecant (k = 3) or concyclicity (k = 4) invariant of a braid.
    Invariant { braid: Option<String> },
    /// Trisecant count versus the complexity of the invariant, as JSON.
    Lowerbound { braid: Option<String> },
    /// Draw a word.
    Draw {
        word: Option<String>,
        #[arg(long, value_enum, default_value_t = Format::Svg)]
        format: Format,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// List the tetrahedron relations and their count.
    Relations,
    /// Report the events of a dynamical system file.
    Scan { system: Option<String> },
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum Format {
    Svg,
    Dot,
}

/// Exit statuses; clap uses 2 for usage errors.
fn exit_code(e: &Error) -> u8 {
    match e {
        Error::Parse(_) => 3,
        Error::BudgetExhausted { .. } => 4,
        Error::InvalidSignature { .. }
        | Error::WrongCardinality { .. }
        | Error::IndexOutOfRange { .. }
        | Error::DuplicateIndex(_)
        | Error::SignatureMismatch(..)
        | Error::UnsupportedSignature(_)
        | Error::TooFewStrands { .. }
        | Error::NotPure => 5,
        Error::Degenerate(_) | Error::NotPleasant(_) | Error::PleasantnessUnobtainable { .. } => 6,
        Error::MoveNotApplicable { .. } => 1,
    }
}

struct Failure {
    code: u8,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure {
            code: exit_code(&e),
            message: e.to_string(),
        }
    }
}

fn io_failure(what: &str, e: std::io::Error) -> Failure {
    Failure {
        code: 1,
        message: format!("{what}: {e}"),
    }
}

impl Cli {
    fn signature(&self) -> Result<Option<GroupSignature>, Error> {
        match (self.n, self.k) {
            (Some(n), Some(k)) => Ok(Some(GroupSignature::new(n, k)?)),
            _ => Ok(None),
        }
    }

    fn require_signature(&self) -> Result<GroupSignature, Error> {
        self.signature()?
            .ok_or_else(|| Error::Parse("--n and --k are required".into()))
    }

    /// First input: the positional argument, else the contents of --file.
    fn input(&self, arg: &Option<String>) -> Result<String, Failure> {
        match (arg, &self.file) {
            (Some(text), _) => Ok(text.clone()),
            (None, Some(path)) => {
                fs::read_to_string(path).map_err(|e| io_failure(&path.display().to_string(), e))
            }
            (None, None) => Ok(String::new()),
        }
    }

    fn word(&self, text: &str) -> Result<Word, Error> {
        parse_word(text.trim(), self.signature()?)
    }

    /// Two words: `a b` on the command line, or `a` read from --file and
    /// the positional argument as `b`.
    fn word_pair(&self, a: &str, b: &Option<String>) -> Result<(Word, Word), Failure> {
        let (a, b) = match (b, &self.file) {
            (Some(b), _) => (a.to_string(), b.clone()),
            (None, Some(_)) => (self.input(&None)?, a.to_string()),
            (None, None) => {
                return Err(Error::Parse("two words are needed".into()).into());
            }
        };
        Ok((self.word(&a)?, self.word(&b)?))
    }

    fn braid(&self, arg: &Option<String>) -> Result<BraidWord, Failure> {
        let n = self
            .n
            .ok_or_else(|| Error::Parse("--n is required".into()))?;
        Ok(braid::parse_artin(&self.input(arg)?, n)?)
    }

    fn detector(&self) -> Result<Detector, Error> {
        match self.k.unwrap_or(3) {
            3 => Ok(Detector::Collinearity),
            4 => Ok(Detector::Concyclicity),
            k => Err(Error::UnsupportedSignature(format!(
                "k={k}: only 3 (collinearity) and 4 (concyclicity) are available"
            ))),
        }
    }
}

fn run(cli: &Cli) -> Result<String, Failure> {
    match &cli.command {
        Command::Reduce { word } => {
            let w = cli.word(&cli.input(word)?)?;
            let r = reduce_with(&w, cli.budget)?;
            Ok(format!("{}\ncomplexity {}\n", r.least(), r.length()))
        }
        Command::Equal { a, b } => {
            let (x, y) = cli.word_pair(a, b)?;
            Ok(format!("{}\n", are_equal_with(&x, &y, cli.budget)?))
        }
        Command::Conjugate { a, b } => {
            let (x, y) = cli.word_pair(a, b)?;
            let v = are_conjugate_with(&CyclicWord::new(x), &CyclicWord::new(y), cli.budget)?;
            Ok(format!("{v}\n"))
        }
        Command::Invariant { braid } => {
            let b = cli.braid(braid)?;
            let options = InvariantOptions {
                seed: cli.seed,
                ..InvariantOptions::default()
            };
            let w = braid::invariant_with(&b, cli.detector()?, &options)?;
            Ok(format!("{}\n", w.to_text_with_header()))
        }
        Command::Lowerbound { braid } => {
            let b = cli.braid(braid)?;
            let options = InvariantOptions {
                seed: cli.seed,
                ..InvariantOptions::default()
            };
            let cert = braid::trisecant_certificate_with(&b, &options, cli.budget)?;
            Ok(format!("{}\n", cert.to_json()))
        }
        Command::Draw { word, format, out } => {
            let w = cli.word(&cli.input(word)?)?;
            let text = match format {
                Format::Svg => picture::render_svg(&picture::layout(&w)),
                Format::Dot => picture::render_minimal_graph(&w)?,
            };
            match out {
                Some(path) => {
                    fs::write(path, &text).map_err(|e| io_failure(&path.display().to_string(), e))?;
                    Ok(String::new())
                }
                None => Ok(text),
            }
        }
        Command::Relations => {
            let sig = cli.require_signature()?;
            let rels = enumerate_tetrahedron_relations(sig);
            let mut out = format!("count {}\n", rels.len());
            for r in rels {
                out.push_str(&format!("{r}\n"));
            }
            Ok(out)
        }
        Command::Scan { system } => {
            let sys = DynamicalSystem::parse(&cli.input(system)?)?;
            let analysis = dynamics::analyze(&sys, cli.detector()?)?;
            let mut out = dynamics::format_event_report(&analysis.events);
            if analysis.violations.is_empty() {
                out.push_str("pleasant\n");
            } else {
                for v in &analysis.violations {
                    out.push_str(&format!("violation {v}\n"));
                }
            }
            Ok(out)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(text) => {
            print!("{text}");
            ExitCode::SUCCESS
        }
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
