//! Command-line interface. Every command renders a block of `key = value`
//! lines; `--summary` appends a short prose paragraph.
//!
//! Exit status: 0 when every check passes, 1 when a check fails, 2 on
//! usage, IO or format errors.

use std::fmt::Write as _;
use std::fs;
use std::path::{Path, PathBuf};

use clap::{ArgAction, Parser, Subcommand};

use crate::algebra::{check_arithmetic_properties, parse_algebra, validate_bl, FiniteBLAlgebra};
use crate::filters::{enumerate_filters, FilterKind};
use crate::fuzzy::{parse_fuzzy_set, FuzzySet};
use crate::rational::UnitRational;
use crate::taxonomy::{classify_with, threshold_profile};
use crate::verify::{audit_examples, generate_bl_algebras, verify_selected, Equivalence, GridSpec};

pub const EXIT_OK: i32 = 0;
pub const EXIT_CHECK_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

/// Counterexamples listed per check; the count line is always exact.
const LISTED_COUNTEREXAMPLES: usize = 10;

#[derive(Debug, Parser)]
#[command(
    name = "blfilter",
    version,
    about = "Finite BL-algebras and generalized fuzzy filters"
)]
pub struct Cli {
    /// Append a prose summary after the key = value block.
    #[arg(long, global = true)]
    pub summary: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Check the BL-algebra axioms and arithmetic identities.
    Validate { algebra: PathBuf },
    /// List every filter of one kind.
    Filters {
        algebra: PathBuf,
        #[arg(long)]
        kind: String,
    },
    /// Classify a fuzzy set under every variant and kind.
    Classify {
        algebra: PathBuf,
        fuzzy_set: PathBuf,
        /// Extra `(α, β]` pair to decide; may be repeated.
        #[arg(long, num_args = 2, value_names = ["ALPHA", "BETA"], action = ArgAction::Append)]
        thresholds: Vec<String>,
    },
    /// Print the threshold profile of a fuzzy set for one kind.
    Profile {
        algebra: PathBuf,
        fuzzy_set: PathBuf,
        #[arg(long)]
        kind: String,
    },
    /// Run the equivalence suites over a grid of fuzzy sets.
    Verify {
        algebra: PathBuf,
        /// Grid denominator d: degrees range over {0, 1/d, …, 1}.
        #[arg(long, default_value_t = 2)]
        grid: u32,
        /// Comma-separated check tokens, or `all`.
        #[arg(long, default_value = "all")]
        theorems: String,
    },
    /// Generate all BL-algebras of a given size up to isomorphism.
    Generate {
        #[arg(long)]
        size: usize,
    },
    /// Re-check every `.claims` file in a directory.
    Audit { dir: PathBuf },
}

struct Failure(i32, String);

fn usage(msg: impl std::fmt::Display) -> Failure {
    Failure(EXIT_USAGE, format!("error: {msg}\n"))
}

fn read(path: &Path) -> Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| usage(format!("{}: {e}", path.display())))
}

fn load_algebra(path: &Path) -> Result<FiniteBLAlgebra, Failure> {
    parse_algebra(&read(path)?).map_err(|e| usage(format!("{}: {e}", path.display())))
}

fn load_fuzzy<'a>(path: &Path, alg: &'a FiniteBLAlgebra) -> Result<FuzzySet<'a>, Failure> {
    parse_fuzzy_set(&read(path)?, alg).map_err(|e| usage(format!("{}: {e}", path.display())))
}

fn kind(token: &str) -> Result<FilterKind, Failure> {
    token.parse().map_err(usage)
}

/// Appends `bl_valid = …` and any axiom failures; true when valid.
fn validity(out: &mut String, alg: &FiniteBLAlgebra) -> bool {
    let report = validate_bl(alg);
    let _ = writeln!(out, "bl_valid = {}", report.valid());
    for v in &report.violations {
        let _ = writeln!(
            out,
            "axiom.{} = fail {}",
            v.axiom.token(),
            tuple(alg, &v.witness)
        );
    }
    report.valid()
}

fn tuple(alg: &FiniteBLAlgebra, elems: &[crate::Elem]) -> String {
    ["x", "y", "z"]
        .iter()
        .zip(elems)
        .map(|(v, &e)| format!("{v}={}", alg.elem_name(e)))
        .collect::<Vec<_>>()
        .join(" ")
}

struct Report {
    status: i32,
    body: String,
    summary: String,
}

fn validate(path: &Path) -> Result<Report, Failure> {
    let alg = load_algebra(path)?;
    let mut out = format!("algebra = {}\nelements = {}\n", alg.name(), alg.size());
    if !validity(&mut out, &alg) {
        return Ok(Report {
            status: EXIT_CHECK_FAILED,
            body: out,
            summary: format!("{} violates the BL-algebra axioms.", alg.name()),
        });
    }
    let props = check_arithmetic_properties(&alg).expect("algebra is valid");
    for o in &props.outcomes {
        match &o.witness {
            None => writeln!(out, "property.{} = pass", o.property.token()),
            Some(w) => writeln!(
                out,
                "property.{} = fail {}",
                o.property.token(),
                tuple(&alg, w)
            ),
        }
        .expect("writing to a string");
    }
    let _ = writeln!(out, "properties_pass = {}", props.all_pass());
    let summary = format!(
        "{} is a BL-algebra on {} elements; {} of {} arithmetic identities hold.",
        alg.name(),
        alg.size(),
        props.outcomes.iter().filter(|o| o.passed()).count(),
        props.outcomes.len()
    );
    Ok(Report {
        status: if props.all_pass() {
            EXIT_OK
        } else {
            EXIT_CHECK_FAILED
        },
        body: out,
        summary,
    })
}

fn filters(path: &Path, kind_token: &str) -> Result<Report, Failure> {
    let k = kind(kind_token)?;
    let alg = load_algebra(path)?;
    let mut out = format!("algebra = {}\nkind = {k}\n", alg.name());
    if !validity(&mut out, &alg) {
        return Ok(Report {
            status: EXIT_CHECK_FAILED,
            body: out,
            summary: format!("{} is not a BL-algebra.", alg.name()),
        });
    }
    if alg.size() > crate::filters::ENUMERATION_LIMIT {
        return Err(usage(format!(
            "filter enumeration supports at most {} elements",
            crate::filters::ENUMERATION_LIMIT
        )));
    }
    let found = enumerate_filters(&alg, k);
    let _ = writeln!(out, "filter_count = {}", found.len());
    for s in &found {
        let _ = writeln!(out, "filter = {}", s.render(&alg));
    }
    Ok(Report {
        status: EXIT_OK,
        summary: format!("{} has {} {k} filters.", alg.name(), found.len()),
        body: out,
    })
}

fn classify(alg_path: &Path, fz_path: &Path, thresholds: &[String]) -> Result<Report, Failure> {
    let alg = load_algebra(alg_path)?;
    let f = load_fuzzy(fz_path, &alg)?;
    let mut pairs = Vec::new();
    for pair in thresholds.chunks(2) {
        let q = |s: &str| {
            s.parse::<UnitRational>()
                .map_err(|e| usage(format!("`{s}`: {e}")))
        };
        let (a, b) = (q(&pair[0])?, q(&pair[1])?);
        if a >= b {
            return Err(usage(format!("thresholds need α < β; got ({a}, {b}]")));
        }
        pairs.push((a, b));
    }
    let mut out = format!("algebra = {}\nfuzzy_set = {}\n", alg.name(), f.name());
    if !validity(&mut out, &alg) {
        return Ok(Report {
            status: EXIT_CHECK_FAILED,
            body: out,
            summary: format!("{} is not a BL-algebra.", alg.name()),
        });
    }
    let record = match classify_with(&f, &pairs) {
        Ok(r) => r,
        Err(e) => {
            let _ = writeln!(out, "consistent = false\nerror = {e}");
            return Ok(Report {
                status: EXIT_CHECK_FAILED,
                body: out,
                summary: "The inequality and level-set routes disagree.".into(),
            });
        }
    };
    for v in &record.verdicts {
        let _ = writeln!(out, "{}.{} = {}", v.variant, v.kind, v.holds);
        if let Some(w) = &v.witness {
            let _ = writeln!(out, "{}.{}.witness = {}", v.variant, v.kind, w.render(&alg));
        }
    }
    for (k, j) in &record.profiles {
        let _ = writeln!(out, "profile.{k} = {j}");
    }
    let held: Vec<String> = record
        .verdicts
        .iter()
        .filter(|v| v.holds)
        .map(|v| format!("{}.{}", v.variant, v.kind))
        .collect();
    let summary = if held.is_empty() {
        format!(
            "{} satisfies none of the classified filter conditions.",
            f.name()
        )
    } else {
        format!("{} satisfies: {}.", f.name(), held.join(", "))
    };
    Ok(Report {
        status: EXIT_OK,
        body: out,
        summary,
    })
}

fn profile(alg_path: &Path, fz_path: &Path, kind_token: &str) -> Result<Report, Failure> {
    let k = kind(kind_token)?;
    let alg = load_algebra(alg_path)?;
    let f = load_fuzzy(fz_path, &alg)?;
    let mut out = format!("algebra = {}\nfuzzy_set = {}\n", alg.name(), f.name());
    if !validity(&mut out, &alg) {
        return Ok(Report {
            status: EXIT_CHECK_FAILED,
            body: out,
            summary: format!("{} is not a BL-algebra.", alg.name()),
        });
    }
    let j = threshold_profile(&f, k);
    let _ = writeln!(out, "profile.{k} = {j}");
    Ok(Report {
        status: EXIT_OK,
        summary: format!(
            "Level sets of {} are empty or {k} filters exactly for t in {j}.",
            f.name()
        ),
        body: out,
    })
}

fn selection(list: &str) -> Result<Vec<Equivalence>, Failure> {
    let mut out: Vec<Equivalence> = Vec::new();
    for token in list.split(',').map(str::trim).filter(|t| !t.is_empty()) {
        let group: Vec<Equivalence> = match token {
            "all" => Equivalence::all().collect(),
            "characterizations" => Equivalence::CHARACTERIZATIONS.to_vec(),
            "decomposition" => Equivalence::DECOMPOSITION.to_vec(),
            t => vec![t.parse().map_err(usage)?],
        };
        for e in group {
            if !out.contains(&e) {
                out.push(e);
            }
        }
    }
    if out.is_empty() {
        return Err(usage("no theorems selected"));
    }
    Ok(out)
}

fn verify(path: &Path, grid: u32, theorems: &str) -> Result<Report, Failure> {
    let grid = GridSpec::new(grid).map_err(usage)?;
    let wanted = selection(theorems)?;
    let alg = load_algebra(path)?;
    let mut out = format!(
        "algebra = {}\ngrid = 1/{}\n",
        alg.name(),
        grid.denominator()
    );
    if !validity(&mut out, &alg) {
        return Ok(Report {
            status: EXIT_CHECK_FAILED,
            body: out,
            summary: format!("{} is not a BL-algebra.", alg.name()),
        });
    }
    if alg.size() > crate::filters::ENUMERATION_LIMIT {
        return Err(usage("algebra too large for exhaustive verification"));
    }
    let report = verify_selected(&alg, grid, &wanted);
    let _ = writeln!(out, "fuzzy_sets = {}", report.fuzzy_sets);
    for c in &report.checks {
        let t = c.equivalence.token();
        let _ = writeln!(out, "{t}.instances = {}", c.instances);
        let _ = writeln!(out, "{t}.counterexamples = {}", c.counterexamples.len());
        for ce in c.counterexamples.iter().take(LISTED_COUNTEREXAMPLES) {
            let _ = writeln!(out, "{t}.counterexample = {} : {}", ce.subject, ce.detail);
        }
        let _ = writeln!(out, "{t}.pass = {}", c.passed());
    }
    let _ = writeln!(out, "verify_pass = {}", report.passed());
    let failed = report.checks.iter().filter(|c| !c.passed()).count();
    Ok(Report {
        status: if report.passed() {
            EXIT_OK
        } else {
            EXIT_CHECK_FAILED
        },
        summary: format!(
            "Checked {} instances over {} fuzzy sets; {failed} of {} checks found counterexamples.",
            report.instances(),
            report.fuzzy_sets,
            report.checks.len()
        ),
        body: out,
    })
}

fn generate(size: usize) -> Result<Report, Failure> {
    let algs = generate_bl_algebras(size).map_err(usage)?;
    let mut out = format!("size = {size}\ncount = {}\n", algs.len());
    for a in &algs {
        let _ = write!(out, "\n{}", a.to_source());
    }
    Ok(Report {
        status: EXIT_OK,
        summary: format!(
            "There are {} BL-algebras on {size} elements up to isomorphism.",
            algs.len()
        ),
        body: out,
    })
}

fn audit(dir: &Path) -> Result<Report, Failure> {
    let results = audit_examples(dir).map_err(usage)?;
    let mut out = String::new();
    let (mut claims, mut disagreements, mut mismatches, mut errors) = (0, 0, 0, 0);
    for (path, result) in &results {
        let finding = match result {
            Ok(f) => f,
            Err(e) => {
                errors += 1;
                let stem = path
                    .file_stem()
                    .map(|s| s.to_string_lossy())
                    .unwrap_or_default();
                let _ = writeln!(out, "{stem}.error = {e}");
                continue;
            }
        };
        let id = &finding.example;
        let _ = writeln!(out, "{id}.algebra = {}", finding.algebra);
        let _ = writeln!(out, "{id}.fuzzy_set = {}", finding.fuzzy_set);
        for c in &finding.claims {
            claims += 1;
            disagreements += usize::from(!c.agrees());
            mismatches += usize::from(!c.oracle_agrees());
            let _ = writeln!(
                out,
                "{id}.{} = stated:{} machine:{} oracle:{} agree:{}",
                c.claim.subject,
                c.claim.stated,
                c.machine,
                c.oracle,
                c.agrees()
            );
            if let Some(w) = &c.witness {
                let _ = writeln!(out, "{id}.{}.witness = {w}", c.claim.subject);
            }
        }
        let _ = writeln!(out, "{id}.agreement = {}", finding.agreement());
    }
    let _ = writeln!(out, "examples = {}", results.len());
    let _ = writeln!(out, "claims = {claims}");
    let _ = writeln!(out, "disagreements = {disagreements}");
    let _ = writeln!(out, "oracle_mismatches = {mismatches}");
    let _ = writeln!(out, "file_errors = {errors}");
    let failed = disagreements + mismatches + errors > 0;
    Ok(Report {
        status: if failed { EXIT_CHECK_FAILED } else { EXIT_OK },
        summary: format!(
            "Audited {} examples with {claims} claims: {disagreements} stated claims disagree with the machine verdict, {mismatches} verdicts differ from the oracle, {errors} files failed to load.",
            results.len()
        ),
        body: out,
    })
}

/// Executes a parsed command line, returning the exit status and the report
/// (or diagnostic) text.
pub fn run(cli: &Cli) -> (i32, String) {
    let result = match &cli.command {
        Command::Validate { algebra } => validate(algebra),
        Command::Filters { algebra, kind } => filters(algebra, kind),
        Command::Classify {
            algebra,
            fuzzy_set,
            thresholds,
        } => classify(algebra, fuzzy_set, thresholds),
        Command::Profile {
            algebra,
            fuzzy_set,
            kind,
        } => profile(algebra, fuzzy_set, kind),
        Command::Verify {
            algebra,
            grid,
            theorems,
        } => verify(algebra, *grid, theorems),
        Command::Generate { size } => generate(*size),
        Command::Audit { dir } => audit(dir),
    };
    match result {
        Ok(mut r) => {
            if cli.summary {
                r.body.push('\n');
                r.body.push_str(&r.summary);
                r.body.push('\n');
            }
            (r.status, r.body)
        }
        Err(Failure(code, msg)) => (code, msg),
    }
}

/// Parses `args` (including the program name) and runs the command. Clap
/// usage errors map to status 2; `--help` and `--version` to 0.
pub fn run_args<I, T>(args: I) -> (i32, String)
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    match Cli::try_parse_from(args) {
        Ok(cli) => run(&cli),
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            (code, e.render().to_string())
        }
    }
}
