//! Command-line front end for reduced-word graphs: enumerate words,
//! export graphs, measure distances and diameters, build canonical
//! words, certify accessibility, list flats, evaluate closed-form
//! counts, and survey diameter bounds over whole groups.
//!
//! [`run`] drives everything and is exposed so tests can invoke commands
//! in process with captured output. Exit codes: 0 on success, 1 when an
//! internal invariant breaks, 2 on invalid input, 3 when a budget is
//! exceeded.

mod render;

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::error::ErrorKind;
use clap::{Args, Parser, Subcommand, ValueEnum};
use rayon::prelude::*;

use redwords_core::canonical::{canonical_word, flag_level};
use redwords_core::coxeter::{Element, Family, GroupSpec, Word};
use redwords_core::formulas::{
    assemble_report, conjecture_row, count_flats_by_geometry, l2_closed_form, ConjectureReport,
    WeylFamily, DEFAULT_ELEMENT_BUDGET,
};
use redwords_core::rank2::{enumerate_flats, l2_of, Rank2Flat};
use redwords_core::wordgraph::{
    bfs_distances, build_graph, diameter_with, enumerate_words, is_accessible, DiameterMethod,
    DiameterMode, ALL_PAIRS_THRESHOLD, DEFAULT_WORD_BUDGET,
};
use redwords_core::Error as CoreError;

pub const EXIT_OK: i32 = 0;
pub const EXIT_INVARIANT: i32 = 1;
pub const EXIT_INVALID: i32 = 2;
pub const EXIT_BUDGET: i32 = 3;

/// Map a library error to the process exit code its class carries.
pub fn exit_code(err: &CoreError) -> i32 {
    match err {
        CoreError::InvariantViolation { .. } => EXIT_INVARIANT,
        CoreError::BudgetExceeded { .. } => EXIT_BUDGET,
        _ => EXIT_INVALID,
    }
}

struct Failure {
    code: i32,
    message: String,
}

impl From<CoreError> for Failure {
    fn from(e: CoreError) -> Self {
        Failure { code: exit_code(&e), message: e.to_string() }
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure { code: EXIT_INVARIANT, message: e.to_string() }
    }
}

impl From<serde_json::Error> for Failure {
    fn from(e: serde_json::Error) -> Self {
        Failure { code: EXIT_INVARIANT, message: e.to_string() }
    }
}

type CliResult = Result<(), Failure>;

#[derive(Parser)]
#[command(
    name = "redwords",
    version,
    about = "Reduced-word graphs of finite Coxeter groups of types A and B"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Clone)]
struct Target {
    /// Group family: A (permutations) or B (signed permutations)
    family: String,
    /// Number of letters moved by the group
    n: usize,
    /// Element in one-line notation (digits, or comma-separated values),
    /// or "w0" for the longest element
    #[arg(allow_hyphen_values = true)]
    element: String,
}

impl Target {
    fn spec(&self) -> Result<GroupSpec, CoreError> {
        GroupSpec::new(parse_family(&self.family)?, self.n)
    }

    fn element(&self) -> Result<Element, CoreError> {
        Element::parse(self.spec()?, &self.element)
    }
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum Format {
    Dot,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// List the reduced words of an element, one per line, sorted
    Words {
        #[command(flatten)]
        target: Target,
        /// Print only the number of words
        #[arg(long)]
        count: bool,
        /// Cap on the number of words (default from REDWORDS_BUDGET)
        #[arg(long)]
        budget: Option<usize>,
    },
    /// Export the braid-move graph of an element
    Graph {
        #[command(flatten)]
        target: Target,
        /// Output format
        #[arg(long, value_enum, default_value_t = Format::Dot)]
        format: Format,
        /// Write to a file instead of standard output
        #[arg(short, long)]
        output: Option<PathBuf>,
        #[arg(long)]
        budget: Option<usize>,
    },
    /// Distances and separation sizes from a source word to every word
    Distance {
        #[command(flatten)]
        target: Target,
        /// Source reduced word
        source: String,
        #[arg(long)]
        budget: Option<usize>,
    },
    /// Diameter of the braid-move graph
    Diameter {
        #[command(flatten)]
        target: Target,
        /// Use the closed-form flat count (longest element only) instead
        /// of traversal
        #[arg(long)]
        shortcut: bool,
        #[arg(long)]
        budget: Option<usize>,
        /// Seed for the sweep heuristic on oversized graphs (default from
        /// REDWORDS_SEED)
        #[arg(long)]
        seed: Option<u64>,
    },
    /// The canonical reduced word crossing walls level by level
    Canonical {
        #[command(flatten)]
        target: Target,
        /// Also print the crossing sequence and its levels
        #[arg(long)]
        levels: bool,
    },
    /// Check that distances from a word equal its separation sizes
    Accessible {
        #[command(flatten)]
        target: Target,
        /// Source word to check; without it, survey every word and list
        /// the inaccessible ones
        source: Option<String>,
        #[arg(long)]
        budget: Option<usize>,
    },
    /// Rank-two flats of the arrangement, or those covered by an element
    Flats {
        /// Group family: A or B
        family: String,
        /// Number of letters moved by the group
        n: usize,
        /// Restrict to the flats covered by this element
        #[arg(allow_hyphen_values = true)]
        element: Option<String>,
    },
    /// Closed-form rank-two flat counts for the finite reflection families
    Formulas {
        /// Family: A, B, D, E6, E7, E8, F4, H3, H4, I2
        family: String,
        /// Rank parameter, required for A, B, D, I2 and rejected otherwise
        n: Option<u64>,
        /// Also count the flats geometrically and require agreement
        #[arg(long)]
        geometry: bool,
    },
    /// Survey a whole group: exact diameters against flat-count bounds
    Conjecture {
        /// Group family: A or B
        family: String,
        /// Number of letters moved by the group
        n: usize,
        #[arg(long)]
        budget: Option<usize>,
        /// Cap on the group order
        #[arg(long)]
        element_budget: Option<u64>,
        /// Worker threads; 1 runs sequentially
        #[arg(long)]
        workers: Option<usize>,
        /// Emit JSON instead of a table
        #[arg(long)]
        json: bool,
    },
}

fn parse_family(s: &str) -> Result<Family, CoreError> {
    match s {
        "A" | "a" => Ok(Family::TypeA),
        "B" | "b" => Ok(Family::TypeB),
        other => Err(CoreError::Parse {
            input: other.to_string(),
            reason: "expected family A or B".to_string(),
        }),
    }
}

fn env_parsed<T: std::str::FromStr>(name: &str) -> Result<Option<T>, CoreError> {
    match std::env::var(name) {
        Ok(raw) => raw.parse::<T>().map(Some).map_err(|_| CoreError::Parse {
            input: raw,
            reason: format!("environment variable {name} must be a number"),
        }),
        Err(_) => Ok(None),
    }
}

fn resolve_budget(flag: Option<usize>) -> Result<usize, CoreError> {
    Ok(flag
        .or(env_parsed::<usize>("REDWORDS_BUDGET")?)
        .unwrap_or(DEFAULT_WORD_BUDGET))
}

fn resolve_seed(flag: Option<u64>) -> Result<u64, CoreError> {
    Ok(flag.or(env_parsed::<u64>("REDWORDS_SEED")?).unwrap_or(0))
}

/// Parse `args` (including the program name) and run the selected
/// command, writing results to `out` and diagnostics to `err`. Returns
/// the process exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(out, "{e}");
                    EXIT_OK
                }
                _ => {
                    let _ = write!(err, "{e}");
                    EXIT_INVALID
                }
            }
        }
    };
    match dispatch(cli.command, out) {
        Ok(()) => EXIT_OK,
        Err(f) => {
            let _ = writeln!(err, "error: {}", f.message);
            f.code
        }
    }
}

fn dispatch(command: Command, out: &mut dyn Write) -> CliResult {
    match command {
        Command::Words { target, count, budget } => {
            let words = enumerate_words(&target.element()?, resolve_budget(budget)?)?;
            if count {
                writeln!(out, "{}", words.len())?;
            } else {
                for w in &words {
                    writeln!(out, "{w}")?;
                }
            }
            Ok(())
        }
        Command::Graph { target, format, output, budget } => {
            let g = build_graph(&target.element()?, resolve_budget(budget)?)?;
            let rendered = match format {
                Format::Dot => render::render_dot(&g),
                Format::Json => {
                    let mut s = serde_json::to_string_pretty(&render::graph_json(&g))?;
                    s.push('\n');
                    s
                }
            };
            match output {
                Some(path) => std::fs::write(path, rendered)?,
                None => out.write_all(rendered.as_bytes())?,
            }
            Ok(())
        }
        Command::Distance { target, source, budget } => {
            let g = build_graph(&target.element()?, resolve_budget(budget)?)?;
            let source = Word::parse(g.spec(), &source)?;
            let report = bfs_distances(&g, &source)?;
            for (i, w) in g.words().iter().enumerate() {
                writeln!(out, "{w} {} {}", report.distances()[i], report.separation_sizes()[i])?;
            }
            writeln!(out, "eccentricity: {}", report.eccentricity())?;
            writeln!(out, "max gap: {}", report.max_gap())?;
            Ok(())
        }
        Command::Diameter { target, shortcut, budget, seed } => {
            let g = build_graph(&target.element()?, resolve_budget(budget)?)?;
            let mode = if shortcut { DiameterMode::TheoremShortcut } else { DiameterMode::Exact };
            let res = diameter_with(&g, mode, ALL_PAIRS_THRESHOLD, 8, resolve_seed(seed)?)?;
            let method = match res.method {
                DiameterMethod::AllPairsBfs => "all pairs",
                DiameterMethod::SweepLowerBound => "sweep lower bound",
                DiameterMethod::ClosedForm => "closed form",
            };
            if res.exhaustive {
                writeln!(out, "diameter: {} ({method})", res.value)?;
            } else {
                writeln!(out, "diameter: >= {} ({method})", res.value)?;
            }
            Ok(())
        }
        Command::Canonical { target, levels } => {
            let word = canonical_word(&target.element()?)?;
            writeln!(out, "{word}")?;
            if levels {
                let cs = word.crossing_sequence()?;
                writeln!(out, "crossings: {cs}")?;
                let lv: Vec<String> =
                    cs.crossings().iter().map(|h| flag_level(*h).to_string()).collect();
                writeln!(out, "levels: {}", lv.join(","))?;
            }
            Ok(())
        }
        Command::Accessible { target, source, budget } => {
            let g = build_graph(&target.element()?, resolve_budget(budget)?)?;
            match source {
                Some(s) => {
                    let word = Word::parse(g.spec(), &s)?;
                    let report = is_accessible(&g, &word)?;
                    writeln!(out, "source: {}", report.source)?;
                    writeln!(out, "accessible: {}", report.accessible)?;
                    writeln!(out, "eccentricity: {}", report.eccentricity)?;
                    if let Some(w) = report.witness {
                        writeln!(
                            out,
                            "witness: {} distance {} separation {}",
                            w.word, w.distance, w.separation
                        )?;
                    }
                }
                None => {
                    let words: Vec<Word> = g.words().to_vec();
                    let mut accessible = 0usize;
                    for w in &words {
                        let report = is_accessible(&g, w)?;
                        if report.accessible {
                            accessible += 1;
                        } else {
                            let witness = report.witness.expect("inaccessible needs a witness");
                            writeln!(
                                out,
                                "inaccessible: {w} witness {} distance {} separation {}",
                                witness.word, witness.distance, witness.separation
                            )?;
                        }
                    }
                    writeln!(out, "accessible: {accessible} of {}", words.len())?;
                }
            }
            Ok(())
        }
        Command::Flats { family, n, element } => {
            let spec = GroupSpec::new(parse_family(&family)?, n)?;
            let flats: Vec<Rank2Flat> = match element {
                Some(e) => l2_of(&Element::parse(spec, &e)?),
                None => enumerate_flats(spec),
            };
            for x in &flats {
                let members: Vec<String> =
                    x.members().iter().map(|h| h.name(spec.family())).collect();
                writeln!(out, "{}: {}", x.name(), members.join(","))?;
            }
            writeln!(out, "count: {}", flats.len())?;
            Ok(())
        }
        Command::Formulas { family, n, geometry } => {
            let family = WeylFamily::parse(&family)?;
            let closed = l2_closed_form(family, n)?;
            if geometry {
                let param = n.ok_or(CoreError::InvalidSpec {
                    reason: "geometric counting needs a rank parameter".to_string(),
                })?;
                let geo = count_flats_by_geometry(family, param)?;
                writeln!(out, "closed form: {closed}")?;
                writeln!(out, "geometry: {geo}")?;
                if geo != closed {
                    return Err(CoreError::InvariantViolation {
                        what: format!(
                            "geometric count {geo} disagrees with closed form {closed} for {family} with n = {param}"
                        ),
                    }
                    .into());
                }
                writeln!(out, "agree: true")?;
            } else {
                writeln!(out, "{closed}")?;
            }
            Ok(())
        }
        Command::Conjecture { family, n, budget, element_budget, workers, json } => {
            let spec = GroupSpec::new(parse_family(&family)?, n)?;
            let word_budget = resolve_budget(budget)?;
            let element_budget = element_budget.unwrap_or(DEFAULT_ELEMENT_BUDGET);
            let order = spec.checked_order().unwrap_or(u64::MAX);
            if order > element_budget {
                return Err(CoreError::BudgetExceeded {
                    what: format!("the group order of {spec}"),
                    budget: element_budget as usize,
                }
                .into());
            }
            let elements = spec.elements();
            let rows = match workers {
                Some(1) => elements
                    .iter()
                    .map(|w| conjecture_row(w, word_budget))
                    .collect::<Result<Vec<_>, _>>()?,
                Some(k) => {
                    let pool = rayon::ThreadPoolBuilder::new()
                        .num_threads(k)
                        .build()
                        .map_err(|e| Failure { code: EXIT_INVARIANT, message: e.to_string() })?;
                    pool.install(|| {
                        elements
                            .par_iter()
                            .map(|w| conjecture_row(w, word_budget))
                            .collect::<Result<Vec<_>, _>>()
                    })?
                }
                None => elements
                    .par_iter()
                    .map(|w| conjecture_row(w, word_budget))
                    .collect::<Result<Vec<_>, _>>()?,
            };
            let report = assemble_report(spec, rows);
            if json {
                let mut s = serde_json::to_string_pretty(&conjecture_json(&report))?;
                s.push('\n');
                out.write_all(s.as_bytes())?;
            } else {
                write_conjecture_table(out, &report)?;
            }
            Ok(())
        }
    }
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn write_conjecture_table(out: &mut dyn Write, report: &ConjectureReport) -> CliResult {
    writeln!(out, "element length words l2 diameter lower upper within double")?;
    for row in &report.rows {
        writeln!(
            out,
            "{} {} {} {} {} {} {} {} {}",
            row.element,
            row.length,
            row.word_count,
            row.l2_size,
            row.diameter,
            row.lower,
            row.upper,
            yes_no(row.within),
            yes_no(row.double_bound_ok)
        )?;
    }
    writeln!(out, "rows: {}", report.rows.len())?;
    writeln!(out, "all within bounds: {}", report.all_within)?;
    writeln!(out, "double bound holds: {}", report.all_double)?;
    match &report.min_ratio {
        Some((w, r)) => writeln!(out, "min ratio: {r:.3} ({w})")?,
        None => writeln!(out, "min ratio: none")?,
    }
    match &report.max_ratio {
        Some((w, r)) => writeln!(out, "max ratio: {r:.3} ({w})")?,
        None => writeln!(out, "max ratio: none")?,
    }
    Ok(())
}

fn conjecture_json(report: &ConjectureReport) -> serde_json::Value {
    let ratio = |pair: &Option<(Element, f64)>| match pair {
        Some((w, r)) => serde_json::json!({"element": w.to_string(), "ratio": r}),
        None => serde_json::Value::Null,
    };
    serde_json::json!({
        "family": report.spec.family().to_string(),
        "n": report.spec.n(),
        "rows": report.rows.iter().map(|row| serde_json::json!({
            "element": row.element.to_string(),
            "length": row.length,
            "words": row.word_count,
            "l2": row.l2_size,
            "diameter": row.diameter,
            "lower": row.lower,
            "upper": row.upper,
            "within": row.within,
            "double_ok": row.double_bound_ok,
        })).collect::<Vec<_>>(),
        "all_within": report.all_within,
        "all_double": report.all_double,
        "min_ratio": ratio(&report.min_ratio),
        "max_ratio": ratio(&report.max_ratio),
    })
}
