//! Batch front end. Every subcommand reads files, prints one report to
//! stdout, and maps failures to exit codes: 0 success, 2 bad input,
//! 3 resource caps, 1 internal.

use std::ffi::OsString;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::calculus::{alternating_sum, weighted_sum, CalculusError, KnotSystem, DEFAULT_WORD_CAP};
use crate::complex::{boundary, difference_rank, ChainElement, ComplexError};
use crate::diagram::{parse_pd, resolve, Diagram, DiagramError, MoveKind, MoveSet, Perturber, SingularDiagram};
use crate::invariants::{
    conway, fingerprint, jones, series_coefficient, v2, vassiliev_vanishing_check, writhe, FiniteTypeInvariant,
    InvariantError, Verdict, MAX_SERIES_ORDER,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum SumMode {
    Alt,
    Weighted,
}

/// Parsed command line.
#[derive(Debug, Parser)]
#[command(name = "regcalc", version, about = "Crossing-change calculus for knot diagrams")]
pub struct RunConfig {
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    /// Largest number of double points whose 2^r resolutions are enumerated.
    #[arg(long, global = true, default_value_t = DEFAULT_WORD_CAP)]
    pub cap: usize,
    /// Seed for randomized subcommands.
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Resolve every double point by one letter of a word.
    Resolve {
        #[arg(long)]
        pd: PathBuf,
        #[arg(long, default_value = "")]
        word: String,
    },
    /// Alternating or word-weighted sum over all resolutions.
    Sum {
        #[arg(long)]
        pd: PathBuf,
        #[arg(long, value_enum, default_value_t = SumMode::Alt)]
        mode: SumMode,
    },
    /// Boundary of a chain read from JSON.
    Boundary {
        #[arg(long)]
        chain: PathBuf,
    },
    /// Check that order-n invariants vanish on the alternating sum.
    Verify {
        #[arg(long)]
        pd: PathBuf,
        #[arg(long, default_value_t = 2)]
        order: usize,
    },
    /// Sampled difference-group ranks from a manifest of chain files.
    Rank {
        #[arg(long)]
        manifest: PathBuf,
    },
    /// Jones, Conway, v2 and series coefficients of a knot.
    Invariant {
        #[arg(long)]
        pd: PathBuf,
        #[arg(long, default_value_t = MAX_SERIES_ORDER)]
        order: usize,
    },
    /// Random Reidemeister moves; reports whether the fingerprint survived.
    Perturb {
        #[arg(long)]
        pd: PathBuf,
        #[arg(long, default_value_t = 20)]
        steps: usize,
        #[arg(long, default_value_t = 12)]
        max_crossings: usize,
    },
}

/// Chain files carry string class labels.
pub type Chain = ChainElement<String>;

/// Rank job: generators at `degree` and at `degree + 1`. Paths are relative
/// to the manifest.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct RankManifest {
    pub degree: usize,
    pub lower: Vec<PathBuf>,
    pub upper: Vec<PathBuf>,
}

#[derive(Debug)]
pub enum CliError {
    Input(String),
    Cap(String),
    Internal(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Input(_) => 2,
            CliError::Cap(_) => 3,
            CliError::Internal(_) => 1,
        }
    }

    fn message(&self) -> &str {
        match self {
            CliError::Input(m) | CliError::Cap(m) | CliError::Internal(m) => m,
        }
    }
}

impl From<DiagramError> for CliError {
    fn from(e: DiagramError) -> Self {
        CliError::Input(e.to_string())
    }
}

impl From<InvariantError> for CliError {
    fn from(e: InvariantError) -> Self {
        match e {
            InvariantError::TooManyCrossings { .. } | InvariantError::RecursionBudgetExceeded(_) => {
                CliError::Cap(e.to_string())
            }
            _ => CliError::Input(e.to_string()),
        }
    }
}

impl From<CalculusError> for CliError {
    fn from(e: CalculusError) -> Self {
        match e {
            CalculusError::CapExceeded { .. } => CliError::Cap(e.to_string()),
            CalculusError::Invariant(inner) => inner.into(),
            _ => CliError::Input(e.to_string()),
        }
    }
}

impl From<ComplexError> for CliError {
    fn from(e: ComplexError) -> Self {
        CliError::Input(e.to_string())
    }
}

fn read(path: &Path) -> Result<String, CliError> {
    fs::read_to_string(path).map_err(|e| CliError::Input(format!("{}: {e}", path.display())))
}

fn read_singular(path: &Path) -> Result<SingularDiagram, CliError> {
    Ok(parse_pd(&read(path)?)?)
}

fn read_knot(path: &Path) -> Result<Diagram, CliError> {
    Ok(Diagram::try_from(read_singular(path)?)?)
}

fn read_chain(path: &Path) -> Result<Chain, CliError> {
    let c: Chain =
        serde_json::from_str(&read(path)?).map_err(|e| CliError::Input(format!("{}: {e}", path.display())))?;
    // Re-validate degrees, which deserialization does not check.
    Ok(ChainElement::new(c.degree(), c.terms().clone())?)
}

/// A finished report: its JSON form and its plain-text form.
struct Report {
    json: Value,
    text: String,
}

fn chain_text(c: &Chain) -> String {
    if c.is_zero() {
        return "0".into();
    }
    c.terms().iter().map(|((w, k), n)| format!("{n}*[{w}, {k}]")).collect::<Vec<_>>().join(" + ")
}

fn execute(cfg: &RunConfig) -> Result<Report, CliError> {
    match &cfg.command {
        Command::Resolve { pd, word } => {
            let d = read_singular(pd)?;
            let w = word.parse().map_err(|e: CalculusError| CliError::Input(e.to_string()))?;
            let k = resolve(&d, &w)?;
            let code = k.to_string();
            Ok(Report { json: json!({"command": "resolve", "word": word, "pd": code}), text: code })
        }
        Command::Sum { pd, mode } => {
            let s = KnotSystem::new(read_singular(pd)?)?;
            match mode {
                SumMode::Alt => {
                    let sum = alternating_sum(&s, cfg.cap)?;
                    Ok(Report {
                        json: json!({"command": "sum", "mode": "alt", "regions": s.diagram().r(), "sum": sum}),
                        text: sum.to_string(),
                    })
                }
                SumMode::Weighted => {
                    let sum = weighted_sum(&s, cfg.cap)?;
                    let text = sum.iter().map(|((w, k), n)| format!("{n}*[{w}, {k}]")).collect::<Vec<_>>().join(" + ");
                    Ok(Report {
                        json: json!({"command": "sum", "mode": "weighted", "regions": s.diagram().r(), "sum": sum}),
                        text,
                    })
                }
            }
        }
        Command::Boundary { chain } => {
            let c = read_chain(chain)?;
            let d = boundary(&c)?;
            Ok(Report { json: json!({"command": "boundary", "input": c, "boundary": d}), text: chain_text(&d) })
        }
        Command::Verify { pd, order } => {
            let order = *order;
            if order > MAX_SERIES_ORDER {
                return Err(InvariantError::SeriesOrder { n: order, max: MAX_SERIES_ORDER }.into());
            }
            let s = KnotSystem::new(read_singular(pd)?)?;
            let r = s.diagram().r();
            if r < order {
                return Err(CliError::Input(format!(
                    "order {order} needs at least {} double points for a vanishing claim ({} for a report); diagram has {r}",
                    order + 1,
                    order
                )));
            }
            let mut invariants = vec![FiniteTypeInvariant::JonesSeries(order)];
            if order == 2 {
                invariants.insert(0, FiniteTypeInvariant::V2);
            }
            let mut reports = Vec::new();
            let mut lines = Vec::new();
            for inv in invariants {
                let rep = vassiliev_vanishing_check(inv, &s, cfg.cap)?;
                let verdict = match rep.verdict {
                    Verdict::Pass => "PASS",
                    Verdict::Fail => "FAIL",
                    Verdict::Info => "INFO",
                };
                let name = match inv {
                    FiniteTypeInvariant::V2 => "v2".to_string(),
                    FiniteTypeInvariant::JonesSeries(n) => format!("jones_series[{n}]"),
                };
                lines.push(format!("{verdict} {name} r={r} order={order} value={}", rep.value));
                reports.push(json!({"invariant": name, "report": rep}));
            }
            Ok(Report { json: json!({"command": "verify", "regions": r, "order": order, "checks": reports}), text: lines.join("\n") })
        }
        Command::Rank { manifest } => {
            let m: RankManifest = serde_json::from_str(&read(manifest)?)
                .map_err(|e| CliError::Input(format!("{}: {e}", manifest.display())))?;
            let dir = manifest.parent().unwrap_or(Path::new("."));
            let load = |paths: &[PathBuf]| paths.iter().map(|p| read_chain(&dir.join(p))).collect::<Result<Vec<_>, _>>();
            let report = difference_rank(m.degree, &load(&m.lower)?, &load(&m.upper)?)?;
            let text = format!(
                "{} at degree {}: rank span {}, rank boundaries {}, quotient rank {}, torsion [{}]",
                report.kind,
                report.degree,
                report.rank_span,
                report.rank_boundaries,
                report.rank_quotient,
                report.torsion.join(", ")
            );
            Ok(Report { json: json!({"command": "rank", "report": report}), text })
        }
        Command::Invariant { pd, order } => {
            let d = read_knot(pd)?;
            let j = jones(&d)?;
            let c = conway(&d)?;
            let series = (0..=*order).map(|n| series_coefficient(&j, n).map(|x| x.to_string())).collect::<Result<Vec<_>, _>>()?;
            let class = fingerprint(&d)?;
            let (w, v) = (writhe(&d)?, v2(&d)?);
            let text = format!(
                "class: {class}\nwrithe: {w}\njones: {j}\nconway: {c}\nv2: {v}\nseries: [{}]",
                series.join(", ")
            );
            Ok(Report {
                json: json!({"command": "invariant", "class": class, "writhe": w, "jones": j, "conway": c, "v2": v, "series": series}),
                text,
            })
        }
        Command::Perturb { pd, steps, max_crossings } => {
            let d = read_knot(pd)?;
            let before = fingerprint(&d)?;
            let mut p = Perturber::new(cfg.seed, MoveSet::ALL, *max_crossings);
            let mut cur = d.clone();
            let mut counts = [0usize; 3];
            for _ in 0..*steps {
                let Some((mv, next)) = p.step(&cur) else { break };
                counts[match mv.kind() {
                    MoveKind::R1 => 0,
                    MoveKind::R2 => 1,
                    MoveKind::R3 => 2,
                }] += 1;
                cur = next;
            }
            let after = fingerprint(&cur)?;
            let stable = before == after;
            let code = cur.to_string();
            Ok(Report {
                json: json!({
                    "command": "perturb",
                    "seed": cfg.seed,
                    "moves": {"r1": counts[0], "r2": counts[1], "r3": counts[2]},
                    "pd": code,
                    "class": after,
                    "fingerprint_stable": stable,
                }),
                text: format!("{code}\nmoves: r1={} r2={} r3={}\nfingerprint stable: {stable}", counts[0], counts[1], counts[2]),
            })
        }
    }
}

/// Parses `args` (including the program name), runs the command, and
/// returns the exit code.
pub fn run<I, T>(args: I, out: &mut impl Write, err: &mut impl Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cfg = match RunConfig::try_parse_from(args) {
        Ok(cfg) => cfg,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = write!(if code == 0 { out as &mut dyn Write } else { err as &mut dyn Write }, "{e}");
            return code;
        }
    };
    match execute(&cfg) {
        Ok(report) => {
            let body = match cfg.format {
                Format::Text => report.text,
                Format::Json => match serde_json::to_string_pretty(&report.json) {
                    Ok(s) => s,
                    Err(e) => {
                        let _ = writeln!(err, "error: {e}");
                        return 1;
                    }
                },
            };
            match writeln!(out, "{body}") {
                Ok(()) => 0,
                Err(_) => 1,
            }
        }
        Err(e) => {
            let _ = writeln!(err, "error: {}", e.message());
            e.exit_code()
        }
    }
}
