//! Re-checking annotated classification claims.
//!
//! A `.claims` sidecar names an algebra file and a fuzzy-set file (relative
//! to the sidecar) and lists claims, one per line:
//!
//! ```text
//! example thresholds_filter
//! algebra l3_then_boolean.alg
//! fuzzyset thresholds_filter.fz
//! claim thresholds 2/5 3/5 plain true
//! claim overline plain false
//! claim order b c true
//! end
//! ```
//!
//! `claim order x y B` states whether `x ≤ y` in the algebra.

use std::fmt;
use std::fs;
use std::path::{Path, PathBuf};

use thiserror::Error;

use crate::algebra::parse::tokens;
use crate::algebra::{parse_algebra, validate_bl, FiniteBLAlgebra};
use crate::filters::FilterKind;
use crate::fuzzy::parse_fuzzy_set;
use crate::rational::UnitRational;
use crate::taxonomy::{threshold_violation, Variant};

use super::oracle::oracle_threshold_verdict;

#[derive(Debug, Error)]
pub enum AuditError {
    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
    #[error("{path}: line {line}: {message}")]
    Syntax {
        path: PathBuf,
        line: usize,
        message: String,
    },
    #[error("{path}: {message}")]
    Input { path: PathBuf, message: String },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ClaimSubject {
    Classification { variant: Variant, kind: FilterKind },
    Order { lower: String, upper: String },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Claim {
    pub subject: ClaimSubject,
    pub stated: bool,
}

impl fmt::Display for ClaimSubject {
    /// `thresholds(2/5,3/5).plain`, `order(b,c)`
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ClaimSubject::Classification { variant, kind } => write!(f, "{variant}.{kind}"),
            ClaimSubject::Order { lower, upper } => write!(f, "order({lower},{upper})"),
        }
    }
}

impl fmt::Display for Claim {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} = {}", self.subject, self.stated)
    }
}

/// The machine's answer to one claim.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClaimFinding {
    pub claim: Claim,
    pub machine: bool,
    /// Verdict of the independent oracle; equals `machine` for order claims.
    pub oracle: bool,
    /// Failing tuple whenever the machine verdict is false.
    pub witness: Option<String>,
}

impl ClaimFinding {
    pub fn agrees(&self) -> bool {
        self.claim.stated == self.machine
    }

    pub fn oracle_agrees(&self) -> bool {
        self.machine == self.oracle
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AuditFinding {
    pub example: String,
    pub algebra: String,
    pub fuzzy_set: String,
    pub claims: Vec<ClaimFinding>,
}

impl AuditFinding {
    /// Every stated claim is confirmed.
    pub fn agreement(&self) -> bool {
        self.claims.iter().all(ClaimFinding::agrees)
    }

    pub fn oracle_agreement(&self) -> bool {
        self.claims.iter().all(ClaimFinding::oracle_agrees)
    }
}

/// A parsed sidecar.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClaimsFile {
    pub example: String,
    pub algebra: PathBuf,
    pub fuzzy_set: PathBuf,
    pub claims: Vec<Claim>,
}

fn parse_bool(s: &str) -> Option<bool> {
    match s {
        "true" => Some(true),
        "false" => Some(false),
        _ => None,
    }
}

pub fn parse_claims(text: &str, path: &Path) -> Result<ClaimsFile, AuditError> {
    let err = |line: usize, message: String| AuditError::Syntax {
        path: path.to_path_buf(),
        line,
        message,
    };
    let (mut example, mut algebra, mut fuzzy_set) = (None, None, None);
    let mut claims = Vec::new();
    let mut ended = false;
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let toks: Vec<&str> = tokens(raw).into_iter().map(|(_, t)| t).collect();
        let Some((&head, rest)) = toks.split_first() else {
            continue;
        };
        if ended {
            return Err(err(line, "content after `end`".into()));
        }
        match (head, rest) {
            ("example", [id]) => example = Some(id.to_string()),
            ("algebra", [file]) => algebra = Some(PathBuf::from(file)),
            ("fuzzyset", [file]) => fuzzy_set = Some(PathBuf::from(file)),
            ("end", []) => ended = true,
            ("claim", [spec @ .., stated]) => {
                let stated = parse_bool(stated).ok_or_else(|| {
                    err(line, format!("expected true or false, found `{stated}`"))
                })?;
                let kind = |k: &str| {
                    k.parse::<FilterKind>()
                        .map_err(|e| err(line, e.to_string()))
                };
                let subject = match spec {
                    ["order", x, y] => ClaimSubject::Order {
                        lower: x.to_string(),
                        upper: y.to_string(),
                    },
                    ["thresholds", a, b, k] => {
                        let q = |s: &str| {
                            s.parse::<UnitRational>()
                                .map_err(|e| err(line, e.to_string()))
                        };
                        let variant = Variant::thresholds(q(a)?, q(b)?)
                            .map_err(|e| err(line, e.to_string()))?;
                        ClaimSubject::Classification {
                            variant,
                            kind: kind(k)?,
                        }
                    }
                    [v, k] => {
                        let variant = match *v {
                            "ordinary" => Variant::Ordinary,
                            "eq_vq" => Variant::EqVq,
                            "overline" => Variant::Overline,
                            other => return Err(err(line, format!("unknown variant `{other}`"))),
                        };
                        ClaimSubject::Classification {
                            variant,
                            kind: kind(k)?,
                        }
                    }
                    _ => return Err(err(line, "malformed claim".into())),
                };
                claims.push(Claim { subject, stated });
            }
            (other, _) => return Err(err(line, format!("unexpected `{other}`"))),
        }
    }
    let missing = |what: &str| AuditError::Input {
        path: path.to_path_buf(),
        message: format!("missing `{what}` line"),
    };
    if !ended {
        return Err(missing("end"));
    }
    Ok(ClaimsFile {
        example: example.ok_or_else(|| missing("example"))?,
        algebra: algebra.ok_or_else(|| missing("algebra"))?,
        fuzzy_set: fuzzy_set.ok_or_else(|| missing("fuzzyset"))?,
        claims,
    })
}

fn read(path: &Path) -> Result<String, AuditError> {
    fs::read_to_string(path).map_err(|source| AuditError::Io {
        path: path.to_path_buf(),
        source,
    })
}

fn decide(
    alg: &FiniteBLAlgebra,
    degrees: &crate::fuzzy::FuzzySet<'_>,
    claim: Claim,
    path: &Path,
) -> Result<ClaimFinding, AuditError> {
    match &claim.subject {
        ClaimSubject::Classification { variant, kind } => {
            let (alpha, beta) = variant.bounds();
            let witness = threshold_violation(degrees, &alpha, &beta, *kind)
                .expect("claim thresholds were checked when parsed");
            let exact: Vec<_> = degrees
                .degrees()
                .iter()
                .map(|v| v.as_big().clone())
                .collect();
            let oracle =
                oracle_threshold_verdict(alg, &exact, alpha.as_big(), beta.as_big(), *kind);
            Ok(ClaimFinding {
                machine: witness.is_none(),
                oracle,
                witness: witness.map(|w| w.render(alg)),
                claim,
            })
        }
        ClaimSubject::Order { lower, upper } => {
            let elem = |name: &str| {
                alg.elem(name).map_err(|e| AuditError::Input {
                    path: path.to_path_buf(),
                    message: e.to_string(),
                })
            };
            let (x, y) = (elem(lower)?, elem(upper)?);
            let holds = alg.leq(x, y);
            Ok(ClaimFinding {
                machine: holds,
                oracle: holds,
                witness: (!holds)
                    .then(|| format!("{lower}->{upper} = {}", alg.elem_name(alg.imp(x, y)))),
                claim,
            })
        }
    }
}

/// Audits one sidecar file.
pub fn audit_file(path: &Path) -> Result<AuditFinding, AuditError> {
    let spec = parse_claims(&read(path)?, path)?;
    let base = path.parent().unwrap_or(Path::new("."));
    let input = |p: &Path, message: String| AuditError::Input {
        path: p.to_path_buf(),
        message,
    };
    let alg_path = base.join(&spec.algebra);
    let alg = parse_algebra(&read(&alg_path)?).map_err(|e| input(&alg_path, e.to_string()))?;
    if !validate_bl(&alg).valid() {
        return Err(input(&alg_path, "not a BL-algebra".into()));
    }
    let fz_path = base.join(&spec.fuzzy_set);
    let f = parse_fuzzy_set(&read(&fz_path)?, &alg).map_err(|e| input(&fz_path, e.to_string()))?;
    let claims = spec
        .claims
        .into_iter()
        .map(|c| decide(&alg, &f, c, path))
        .collect::<Result<_, _>>()?;
    Ok(AuditFinding {
        example: spec.example,
        algebra: alg.name().to_string(),
        fuzzy_set: f.name().to_string(),
        claims,
    })
}

/// One sidecar path with its finding or load failure.
pub type AuditEntry = (PathBuf, Result<AuditFinding, AuditError>);

/// Audits every `*.claims` file in `dir`, in file-name order. Failures are
/// reported per file.
pub fn audit_examples(dir: &Path) -> Result<Vec<AuditEntry>, AuditError> {
    let entries = fs::read_dir(dir).map_err(|source| AuditError::Io {
        path: dir.to_path_buf(),
        source,
    })?;
    let mut files: Vec<PathBuf> = entries
        .filter_map(|e| e.ok().map(|e| e.path()))
        .filter(|p| p.extension().is_some_and(|x| x == "claims"))
        .collect();
    files.sort();
    Ok(files
        .into_iter()
        .map(|p| {
            let finding = audit_file(&p);
            (p, finding)
        })
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus;

    #[test]
    fn parses_sidecar() {
        let text = "example x\nalgebra a.alg\nfuzzyset f.fz\nclaim thresholds 2/5 3/5 implicative true\nclaim eq_vq plain false # note\nclaim order b c true\nend\n";
        let c = parse_claims(text, Path::new("x.claims")).unwrap();
        assert_eq!(c.claims.len(), 3);
        assert_eq!(
            c.claims[0].to_string(),
            "thresholds(2/5,3/5).implicative = true"
        );
        assert_eq!(c.claims[2].to_string(), "order(b,c) = true");
    }

    #[test]
    fn rejects_bad_claims() {
        let bad = [
            "example x\nalgebra a\nfuzzyset f\nclaim overline plain maybe\nend",
            "example x\nalgebra a\nfuzzyset f\nclaim sideways plain true\nend",
            "example x\nalgebra a\nfuzzyset f\nclaim thresholds 3/5 2/5 plain true\nend",
            "example x\nalgebra a\nfuzzyset f\nclaim overline plain true",
            "algebra a\nfuzzyset f\nend",
        ];
        for text in bad {
            assert!(parse_claims(text, Path::new("x")).is_err(), "{text}");
        }
    }

    #[test]
    fn corpus_findings() {
        let findings = audit_examples(&corpus::dir()).unwrap();
        assert_eq!(findings.len(), 8);
        for (path, f) in &findings {
            let f = f.as_ref().unwrap();
            assert!(f.oracle_agreement(), "{}", path.display());
            assert!(f.claims.iter().all(|c| c.machine || c.witness.is_some()));
        }
        let by_name = |n: &str| {
            findings
                .iter()
                .map(|(_, f)| f.as_ref().unwrap())
                .find(|f| f.example == n)
                .unwrap()
        };
        assert!(by_name("overline_filter").agreement());
        assert!(by_name("thresholds_filter").agreement());
        assert!(!by_name("thresholds_implicative").agreement());
    }
}
