//! `kara`: classification reports, LCP solving, corpus verification and
//! counterexample search over exact rational matrices.

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use kara_core::conelcp::cone_lcp_solutions;
use kara_core::corpus::{corpus_entries, corpus_from_json, corpus_to_json, verify_corpus, CorpusEntry};
use kara_core::lcp::lcp_solutions;
use kara_core::matrix::vector_from_json;
use kara_core::minors::DEFAULT_CAP;
use kara_core::predicates::{EvalConfig, Predicate};
use kara_core::rational::format_vector;
use kara_core::report::classify;
use kara_core::search::{reverify, run_search, SearchConfig, Target};
use kara_core::{Error, Matrix, Vector};

#[derive(Debug, Parser)]
#[command(name = "kara", version, about = "Exact matrix-class decisions for linear complementarity")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Text,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Evaluate every predicate on a matrix.
    Classify {
        /// Matrix JSON file, or `-` for stdin.
        input: PathBuf,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 16)]
        max_candidates: usize,
        /// Candidate d as a JSON array; repeatable.
        #[arg(long = "hint-d")]
        hint_d: Vec<String>,
        /// Largest accepted order.
        #[arg(long, default_value_t = DEFAULT_CAP)]
        cap: usize,
        /// Comma-separated predicate names to leave out.
        #[arg(long, value_delimiter = ',')]
        skip: Vec<String>,
        /// Report zero wall times so output is byte-reproducible.
        #[arg(long)]
        no_timings: bool,
    },
    /// List the solutions of LCP(A, q), or of LCP(A, K, q) with `--cone`.
    Lcp {
        matrix: PathBuf,
        /// JSON array file.
        q: PathBuf,
        #[arg(long)]
        cone: bool,
        #[arg(long, default_value_t = DEFAULT_CAP)]
        cap: usize,
    },
    /// Check every corpus entry against its expected verdicts.
    VerifyCorpus {
        /// Keep entries carrying this tag.
        #[arg(long)]
        filter: Option<String>,
        /// Write the corpus as JSON to this path instead of verifying.
        #[arg(long)]
        dump: Option<PathBuf>,
        /// Read the corpus from a JSON file instead of the embedded one.
        #[arg(long)]
        corpus: Option<PathBuf>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Random search for counterexamples to an open question.
    Search {
        #[arg(long, value_parser = parse_target)]
        target: Target,
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 1000)]
        trials: u64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Probability `p/q` that an entry is nonzero.
        #[arg(long, default_value = "1/1", value_parser = parse_density)]
        density: (u32, u32),
        #[arg(long, default_value_t = 3)]
        entry_bound: i64,
        #[arg(long, default_value_t = 16)]
        max_candidates: usize,
        #[arg(long, default_value_t = DEFAULT_CAP)]
        cap: usize,
        /// JSON-lines hit log; stdout when absent.
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

fn parse_target(s: &str) -> Result<Target, String> {
    Target::parse(s).ok_or_else(|| format!("unknown target `{s}` (phash-not-karamardian | propc-not-phash)"))
}

fn parse_density(s: &str) -> Result<(u32, u32), String> {
    let (p, q) = s.split_once('/').unwrap_or((s, "1"));
    let p: u32 = p.trim().parse().map_err(|_| format!("bad density `{s}`"))?;
    let q: u32 = q.trim().parse().map_err(|_| format!("bad density `{s}`"))?;
    if q == 0 || p > q {
        return Err(format!("density `{s}` must be p/q with 0 <= p <= q"));
    }
    Ok((p, q))
}

/// Failure carrying its process exit code.
struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn usage(message: impl Into<String>) -> Self {
        Self {
            code: 2,
            message: message.into(),
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = if matches!(e, Error::TooLarge { .. }) { 3 } else { 2 };
        Self {
            code,
            message: e.to_string(),
        }
    }
}

fn read_input(path: &Path) -> Result<String, Failure> {
    if path.as_os_str() == "-" {
        let mut s = String::new();
        std::io::Read::read_to_string(&mut std::io::stdin(), &mut s).map_err(|e| Failure::usage(format!("stdin: {e}")))?;
        return Ok(s);
    }
    fs::read_to_string(path).map_err(|e| Failure::usage(format!("{}: {e}", path.display())))
}

fn read_matrix(path: &Path) -> Result<Matrix, Failure> {
    Matrix::from_json_str(&read_input(path)?).map_err(|e| Failure::usage(format!("{}: {e}", path.display())))
}

fn parse_vector(text: &str, field: &str) -> Result<Vector, Failure> {
    let v: serde_json::Value =
        serde_json::from_str(text).map_err(|e| Failure::usage(format!("{field}: {e}")))?;
    Ok(vector_from_json(&v, field)?)
}

fn configure_threads() -> Result<(), Failure> {
    let Ok(value) = std::env::var("KARA_THREADS") else {
        return Ok(());
    };
    let n: usize = value
        .parse()
        .ok()
        .filter(|&n| n > 0)
        .ok_or_else(|| Failure::usage(format!("KARA_THREADS: expected a positive integer, got `{value}`")))?;
    rayon::ThreadPoolBuilder::new()
        .num_threads(n)
        .build_global()
        .map_err(|e| Failure::usage(format!("KARA_THREADS: {e}")))
}

fn run(cli: Cli) -> Result<u8, Failure> {
    configure_threads()?;
    let mut stdout = std::io::stdout().lock();
    let mut emit = |s: &str| {
        // A closed pipe is not an error worth reporting.
        let _ = stdout.write_all(s.as_bytes());
    };
    match cli.command {
        Command::Classify {
            input,
            format,
            seed,
            max_candidates,
            hint_d,
            cap,
            skip,
            no_timings,
        } => {
            let a = read_matrix(&input)?;
            let hint_ds = hint_d.iter().map(|h| parse_vector(h, "hint-d")).collect::<Result<Vec<_>, _>>()?;
            let skip = skip
                .iter()
                .map(|s| Predicate::parse(s.trim()).ok_or_else(|| Failure::usage(format!("skip: unknown predicate `{s}`"))))
                .collect::<Result<Vec<_>, _>>()?;
            let n = a.order()?;
            if let Some(d) = hint_ds.iter().find(|d| d.len() != n) {
                return Err(Failure::usage(format!("hint-d: length {} does not match order {n}", d.len())));
            }
            let config = EvalConfig {
                seed,
                max_candidates,
                hint_ds,
                cap,
            };
            let report = classify(&a, &config, &skip, !no_timings)?;
            match format {
                Format::Json => emit(&format!("{}\n", report.to_json_string())),
                Format::Text => emit(&report.to_text()),
            }
            Ok(0)
        }
        Command::Lcp { matrix, q, cone, cap } => {
            let a = read_matrix(&matrix)?;
            let q = parse_vector(&read_input(&q)?, "q")?;
            let set = if cone {
                cone_lcp_solutions(&a, &q, cap)?
            } else {
                lcp_solutions(&a, &q, cap)?
            };
            for x in &set.solutions {
                emit(&format!("x = {}\n", format_vector(x)));
            }
            emit(&format!("count: {}\n", set.count()));
            emit(&format!("complete: {}\n", set.complete));
            for s in &set.degenerate_supports {
                emit(&format!("degenerate support: {s:?}\n"));
            }
            Ok(0)
        }
        Command::VerifyCorpus {
            filter,
            dump,
            corpus,
            seed,
        } => {
            let mut entries: Vec<CorpusEntry> = match &corpus {
                Some(path) => corpus_from_json(&read_input(path)?)?,
                None => corpus_entries(),
            };
            if let Some(tag) = &filter {
                entries.retain(|e| e.has_tag(tag));
            }
            if let Some(path) = dump {
                let text = serde_json::to_string_pretty(&corpus_to_json(&entries)).expect("valid JSON");
                fs::write(&path, text + "\n").map_err(|e| Failure::usage(format!("{}: {e}", path.display())))?;
                return Ok(0);
            }
            let config = EvalConfig {
                seed,
                ..EvalConfig::default()
            };
            let results = verify_corpus(&entries, &config)?;
            let mut failed = 0;
            for r in &results {
                if r.passed() {
                    emit(&format!("PASS {} ({} checks)\n", r.id, r.checks.len()));
                    continue;
                }
                failed += 1;
                for c in r.checks.iter().filter(|c| !c.pass) {
                    emit(&format!("FAIL {}: {} expected {} got {}\n", r.id, c.predicate, c.expected, c.actual));
                }
            }
            emit(&format!("{} entries, {} passed, {} failed\n", results.len(), results.len() - failed, failed));
            Ok(u8::from(failed > 0))
        }
        Command::Search {
            target,
            n,
            trials,
            seed,
            density,
            entry_bound,
            max_candidates,
            cap,
            out,
        } => {
            let config = SearchConfig {
                target,
                n,
                trials,
                seed,
                density,
                entry_bound,
                max_candidates,
                cap,
            };
            let outcome = run_search(&config)?;
            for hit in &outcome.hits {
                if !reverify(hit, &config)? {
                    return Err(Failure {
                        code: 1,
                        message: format!("hit at trial {} failed re-verification", hit.trial),
                    });
                }
            }
            let log = outcome.to_json_lines(target);
            match out {
                Some(path) => fs::write(&path, log).map_err(|e| Failure::usage(format!("{}: {e}", path.display())))?,
                None => emit(&log),
            }
            eprintln!(
                "{}: {} trials, {} screened, {} hits",
                target.name(),
                outcome.trials,
                outcome.screened,
                outcome.hits.len()
            );
            Ok(0)
        }
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => ExitCode::from(code),
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
