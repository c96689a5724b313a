//! Golden-file corpus runs.
//!
//! A corpus directory holds system files `NAME.sys` and, for each mode to
//! check, a golden report `NAME.lazy.json` or `NAME.full.json`. Systems run
//! on separate threads; a panic fails only its own system.

use std::fs;
use std::path::{Path, PathBuf};
use std::time::Instant;

use realtri::{lazy_real_triangularize, real_triangularize_with};

use crate::report::{Document, Mode};
use crate::system_file::parse_system;

/// Runs one system file in `mode` and returns the untimed report.
pub fn solve_file(path: &Path, mode: Mode, max_depth: usize) -> Result<Document, String> {
    let text = fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))?;
    let s = parse_system(&text).map_err(|e| format!("{}: {e}", path.display()))?;
    let doc = match mode {
        Mode::Lazy => Document::from_lazy(&s, &lazy_real_triangularize(&s).map_err(|e| e.to_string())?),
        Mode::Full => {
            Document::from_full(&s, mode, &real_triangularize_with(&s, max_depth).map_err(|e| e.to_string())?)
        }
    };
    Ok(doc)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Status {
    Pass,
    /// The golden file was written from this run.
    Blessed,
    Mismatch(String),
    Error(String),
}

#[derive(Clone, Debug)]
pub struct CaseResult {
    pub name: String,
    pub mode: Mode,
    pub status: Status,
    pub millis: u128,
}

fn golden_path(sys: &Path, mode: Mode) -> PathBuf {
    let stem = sys.file_stem().and_then(|s| s.to_str()).unwrap_or_default();
    let m = match mode {
        Mode::Lazy => "lazy",
        Mode::Full => "full",
    };
    sys.with_file_name(format!("{stem}.{m}.json"))
}

/// The (system, mode) pairs of `dir`: every mode with a golden file, or with
/// `bless` every mode for systems lacking goldens altogether.
pub fn cases(dir: &Path, bless: bool) -> std::io::Result<Vec<(PathBuf, Mode)>> {
    let mut systems: Vec<PathBuf> = fs::read_dir(dir)?
        .filter_map(|e| e.ok().map(|e| e.path()))
        .filter(|p| p.extension().is_some_and(|x| x == "sys"))
        .collect();
    systems.sort();
    let mut out = Vec::new();
    for s in systems {
        let modes: Vec<Mode> = [Mode::Lazy, Mode::Full].into_iter().filter(|&m| golden_path(&s, m).exists()).collect();
        if modes.is_empty() && bless {
            out.push((s.clone(), Mode::Lazy));
            out.push((s, Mode::Full));
        } else {
            out.extend(modes.into_iter().map(|m| (s.clone(), m)));
        }
    }
    Ok(out)
}

fn run_case(sys: &Path, mode: Mode, max_depth: usize, bless: bool) -> Status {
    let doc = match solve_file(sys, mode, max_depth) {
        Ok(d) => d,
        Err(e) => return Status::Error(e),
    };
    let golden = golden_path(sys, mode);
    if bless {
        return match fs::write(&golden, doc.to_json() + "\n") {
            Ok(()) => Status::Blessed,
            Err(e) => Status::Error(format!("{}: {e}", golden.display())),
        };
    }
    let expected = match fs::read_to_string(&golden).map_err(|e| e.to_string()).and_then(|t| Document::from_json(&t)) {
        Ok(d) => d,
        Err(e) => return Status::Error(format!("{}: {e}", golden.display())),
    };
    if expected.untimed() == doc {
        Status::Pass
    } else {
        Status::Mismatch(first_difference(&expected, &doc))
    }
}

fn first_difference(want: &Document, got: &Document) -> String {
    let (a, b) = (want.untimed().to_json(), got.to_json());
    for (i, (x, y)) in a.lines().zip(b.lines()).enumerate() {
        if x != y {
            return format!("line {}: expected `{}`, got `{}`", i + 1, x.trim(), y.trim());
        }
    }
    format!("expected {} lines, got {}", a.lines().count(), b.lines().count())
}

/// Runs every case of `dir` in parallel.
pub fn run(dir: &Path, max_depth: usize, bless: bool) -> std::io::Result<Vec<CaseResult>> {
    let cases = cases(dir, bless)?;
    let results = std::thread::scope(|scope| {
        let handles: Vec<_> = cases
            .iter()
            .map(|(sys, mode)| {
                scope.spawn(move || {
                    let start = Instant::now();
                    let status = run_case(sys, *mode, max_depth, bless);
                    (status, start.elapsed().as_millis())
                })
            })
            .collect();
        handles
            .into_iter()
            .zip(&cases)
            .map(|(h, (sys, mode))| {
                let (status, millis) = h.join().unwrap_or_else(|_| (Status::Error("solver panicked".into()), 0));
                let name = sys.file_stem().and_then(|s| s.to_str()).unwrap_or_default().to_string();
                CaseResult { name, mode: *mode, status, millis }
            })
            .collect()
    });
    Ok(results)
}
