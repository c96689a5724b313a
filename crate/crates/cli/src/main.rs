use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use realtri::{
    evaluate_lazy, lazy_real_triangularize, real_triangularize_with, Rational, RegularSAS, SamplePoint,
    SemiAlgebraicSystem, DEFAULT_MAX_DEPTH,
};
use realtri_cli::corpus::{self, Status};
use realtri_cli::{parse_system, Document, Mode};

const EXIT_MISMATCH: u8 = 1;
const EXIT_PARSE: u8 = 2;
const EXIT_SOLVER: u8 = 3;

#[derive(Parser)]
#[command(name = "realtri", version, about = "Real triangular decomposition of semi-algebraic systems")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Decompose the system in a file.
    Solve {
        path: PathBuf,
        #[arg(long, value_enum, default_value = "lazy")]
        mode: Mode,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
        /// Resolve the deferred systems of a lazy run.
        #[arg(long)]
        evaluate: bool,
        #[arg(long, default_value_t = DEFAULT_MAX_DEPTH)]
        max_depth: usize,
        /// Compare input and output at this many random rational points.
        #[arg(long, default_value_t = 0)]
        check: usize,
        /// Seed for `--check`.
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Run a directory of system files against their golden reports.
    Corpus {
        dir: PathBuf,
        #[arg(long, default_value_t = DEFAULT_MAX_DEPTH)]
        max_depth: usize,
        /// Write golden reports from this run instead of comparing.
        #[arg(long)]
        bless: bool,
    },
}

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::new().filter("RT_LOG")).init();
    match Cli::parse().command {
        Command::Solve { path, mode, format, evaluate, max_depth, check, seed } => {
            solve(path, mode, format, evaluate, max_depth, check, seed)
        }
        Command::Corpus { dir, max_depth, bless } => run_corpus(dir, max_depth, bless),
    }
}

fn solve(
    path: PathBuf,
    mode: Mode,
    format: Format,
    evaluate: bool,
    max_depth: usize,
    check: usize,
    seed: u64,
) -> ExitCode {
    let text = match fs::read_to_string(&path) {
        Ok(t) => t,
        Err(e) => {
            eprintln!("error: {}: {e}", path.display());
            return ExitCode::from(EXIT_PARSE);
        }
    };
    let s = match parse_system(&text) {
        Ok(s) => s,
        Err(e) => {
            eprintln!("error: {}: {e}", path.display());
            return ExitCode::from(EXIT_PARSE);
        }
    };
    let start = Instant::now();
    let solved = match mode {
        Mode::Lazy => lazy_real_triangularize(&s).and_then(|lazy| {
            if evaluate {
                let out = evaluate_lazy(&lazy, max_depth)?;
                Ok((Document::from_full(&s, Mode::Lazy, &out), Some(out)))
            } else {
                Ok((Document::from_lazy(&s, &lazy), None))
            }
        }),
        Mode::Full => {
            real_triangularize_with(&s, max_depth).map(|out| (Document::from_full(&s, Mode::Full, &out), Some(out)))
        }
    };
    let (mut doc, full) = match solved {
        Ok(x) => x,
        Err(e) => {
            eprintln!("error: solver failed: {e}");
            return ExitCode::from(EXIT_SOLVER);
        }
    };
    doc.elapsed_ms = Some(start.elapsed().as_millis() as u64);
    match format {
        Format::Text => print!("{}", doc.render_text()),
        Format::Json => println!("{}", doc.to_json()),
    }
    if check > 0 {
        let Some(out) = full else {
            eprintln!("error: --check needs a full decomposition (--mode full or --evaluate)");
            return ExitCode::from(EXIT_PARSE);
        };
        let bad = spot_check(&s, &out, check, seed);
        eprintln!("check: {} points, {} disagreements", check, bad);
        if bad > 0 {
            return ExitCode::from(EXIT_MISMATCH);
        }
    }
    ExitCode::SUCCESS
}

// exact comparison of input and output membership at random rational points
fn spot_check(s: &SemiAlgebraicSystem, out: &[RegularSAS], n: usize, seed: u64) -> usize {
    let mut g = ChaCha8Rng::seed_from_u64(seed);
    let mut bad = 0;
    for _ in 0..n {
        let x: Vec<Rational> = (0..s.nvars())
            .map(|_| {
                let d: i64 = g.gen_range(1..=8);
                Rational::new(g.gen_range(-4 * d..=4 * d).into(), d.into())
            })
            .collect();
        let inside = out.iter().any(|c| {
            let free = c.t.free_vars();
            let sp = SamplePoint { vars: free.clone(), coords: free.iter().map(|&v| x[v].clone()).collect() };
            c.q.holds(&sp)
                && c.t.polys().iter().all(|t| sp_zero(t.eval(&x)))
                && c.p.iter().all(|p| p.eval(&x) > Rational::from_integer(0.into()))
        });
        if inside != s.holds_at(&x) {
            log::warn!("disagreement at {:?}", x.iter().map(|r| r.to_string()).collect::<Vec<_>>());
            bad += 1;
        }
    }
    bad
}

fn sp_zero(r: Rational) -> bool {
    r == Rational::from_integer(0.into())
}

fn run_corpus(dir: PathBuf, max_depth: usize, bless: bool) -> ExitCode {
    let results = match corpus::run(&dir, max_depth, bless) {
        Ok(r) => r,
        Err(e) => {
            eprintln!("error: {}: {e}", dir.display());
            return ExitCode::from(EXIT_PARSE);
        }
    };
    let mut failed = 0;
    for r in &results {
        let mode = match r.mode {
            Mode::Lazy => "lazy",
            Mode::Full => "full",
        };
        let verdict = match &r.status {
            Status::Pass => "PASS".to_string(),
            Status::Blessed => "BLESSED".to_string(),
            Status::Mismatch(m) => {
                failed += 1;
                format!("FAIL ({m})")
            }
            Status::Error(e) => {
                failed += 1;
                format!("ERROR ({e})")
            }
        };
        println!("{verdict:<8} {:<28} {mode}  {} ms", r.name, r.millis);
    }
    println!("{} cases, {} failed", results.len(), failed);
    if failed > 0 {
        ExitCode::from(EXIT_MISMATCH)
    } else {
        ExitCode::SUCCESS
    }
}
