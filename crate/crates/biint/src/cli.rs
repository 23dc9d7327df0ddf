//! The `biint` command-line interface.
//!
//! One binary, verb–noun subcommands.  Every verb is a pure function
//! from its inputs (flags plus the files it reads) to a single
//! [`Document`], rendered as indented text or JSON via `--format` and
//! delivered to stdout or `--output`.  The process exit code encodes
//! the verdict:
//!
//! * `0` — the command ran and its check passed (or it was purely
//!   informational);
//! * `1` — the command ran but the logical claim failed: a consequence
//!   has a counterexample, a derivation does not check, a reproduction
//!   report came back false;
//! * `2` — usage or format error: unknown flags, unreadable files,
//!   malformed documents, unparsable formulas.
//!
//! Output is deterministic byte-for-byte for fixed inputs and flags —
//! including under `--jobs`, because the parallel search still reports
//! the canonically first hit.
//!
//! [`run`] is the whole interface; the binary in `src/bin/biint.rs`
//! only forwards `std::env::args_os()` and applies the exit code, so
//! integration tests can drive the CLI in-process.

use std::collections::BTreeSet;
use std::path::{Path, PathBuf};

use clap::error::ErrorKind;
use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::aal::{
    equivalential_report_on, finite_equivalential_refutation, implicative_report,
    isomorphism_failure_report, no_alg_sem_witness, pdt_counterexample, pt_counterexample,
    ForcingRow,
};
use crate::algebra::{
    algebra_from_json, algebra_to_json, all_congruences, eq_consequence, lattice_filters,
    upset_algebra, Congruence, Equation, FinBiHA,
};
use crate::hilbert::{
    canned, catalog, check, derivation_from_json, derivation_to_json, Consecution, LogicId,
};
use crate::kripke::{
    countermodel_search, model_from_json, model_to_json, n_bisimilar, ConsequenceMode,
    KripkeModel, SearchOutcome,
};
use crate::report::Document;
use crate::syntax::{Formula, RenderOptions};

/// What a CLI invocation produced, before touching the process.
#[derive(Debug)]
pub struct CliResult {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

/// Parses `argv` and runs the selected verb.  Never panics on user
/// input; all failure modes land in the exit code contract above.
pub fn run<I, T>(argv: I) -> CliResult
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(err) => {
            let rendered = err.render().to_string();
            return match err.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => CliResult {
                    code: 0,
                    stdout: rendered,
                    stderr: String::new(),
                },
                _ => CliResult {
                    code: 2,
                    stdout: String::new(),
                    stderr: rendered,
                },
            };
        }
    };
    let doc = match dispatch(cli.command, cli.jobs) {
        Ok(doc) => doc,
        Err(message) => {
            return CliResult {
                code: 2,
                stdout: String::new(),
                stderr: format!("error: {message}\n"),
            }
        }
    };
    let rendered = match cli.format {
        Format::Text => doc.to_text(),
        Format::Structured => {
            let mut s = doc.to_json();
            s.push('\n');
            s
        }
    };
    let code = i32::from(!doc.pass);
    match cli.output {
        Some(path) => match std::fs::write(&path, &rendered) {
            Ok(()) => CliResult {
                code,
                stdout: String::new(),
                stderr: String::new(),
            },
            Err(err) => CliResult {
                code: 2,
                stdout: String::new(),
                stderr: format!("error: cannot write {}: {err}\n", path.display()),
            },
        },
        None => CliResult {
            code,
            stdout: rendered,
            stderr: String::new(),
        },
    }
}

#[derive(Parser)]
#[command(
    name = "biint",
    version,
    about = "Workbench for bi-intuitionistic logic at finite scale",
    long_about = "Proof checking, Kripke model checking, finite bi-Heyting algebras, and the \
                  reproduction suite for the weak/strong separation results."
)]
struct Cli {
    /// Report rendering: indented text or a JSON document.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Write the report to this path instead of stdout.
    #[arg(long, global = true, value_name = "PATH")]
    output: Option<PathBuf>,
    /// Worker cap for search-backed verbs (0 and 1 mean sequential).
    #[arg(long, global = true, default_value_t = 1, value_name = "N")]
    jobs: usize,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Structured,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum ModeArg {
    /// Some world forces all premises but not the conclusion.
    Local,
    /// Premises hold everywhere, the conclusion fails somewhere.
    Global,
}

impl From<ModeArg> for ConsequenceMode {
    fn from(mode: ModeArg) -> ConsequenceMode {
        match mode {
            ModeArg::Local => ConsequenceMode::Local,
            ModeArg::Global => ConsequenceMode::Global,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum LogicArg {
    /// DN introduction only on theorems (wDN).
    Weak,
    /// DN introduction under hypotheses (sDN).
    Strong,
}

impl From<LogicArg> for LogicId {
    fn from(logic: LogicArg) -> LogicId {
        match logic {
            LogicArg::Weak => LogicId::Weak,
            LogicArg::Strong => LogicId::Strong,
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Parse a formula and print its canonical rendering.
    Parse {
        formula: String,
        /// Re-sugar negations, co-negations, and biconditionals.
        #[arg(long)]
        sugar: bool,
        /// Render with unicode connectives.
        #[arg(long)]
        unicode: bool,
    },
    /// Kripke model checking, consequence, bisimulation, and search.
    #[command(subcommand)]
    Model(ModelCmd),
    /// Finite bi-Heyting algebras: laws, congruences, filters, evaluation.
    #[command(subcommand)]
    Algebra(AlgebraCmd),
    /// Hilbert derivations: check proof files, instantiate the registry.
    #[command(subcommand)]
    Proof(ProofCmd),
    /// Reproduce the separation results end to end.
    #[command(subcommand)]
    Repro(ReproCmd),
    /// Truth- and degree-preserving consequence over algebra families.
    #[command(subcommand)]
    Aal(AalCmd),
}

#[derive(Subcommand)]
enum ModelCmd {
    /// Does a world of the model force a formula?
    Check {
        file: PathBuf,
        #[arg(long, value_name = "STR")]
        formula: String,
        #[arg(long, value_name = "W")]
        world: usize,
    },
    /// Does a consequence hold on the model?
    Consequence {
        file: PathBuf,
        #[arg(long, value_enum)]
        mode: ModeArg,
        /// Premise formulas; repeat the flag for several.
        #[arg(long, value_name = "STR")]
        gamma: Vec<String>,
        #[arg(long, value_name = "STR")]
        phi: String,
    },
    /// Are two pointed models n-bisimilar?
    Bisim {
        file1: PathBuf,
        w1: usize,
        file2: PathBuf,
        w2: usize,
        #[arg(long)]
        n: usize,
    },
    /// Exhaustively search for a countermodel (capped at 5 worlds).
    Search {
        /// Premise formulas; repeat the flag for several.
        #[arg(long, value_name = "STR")]
        gamma: Vec<String>,
        #[arg(long, value_name = "STR")]
        phi: String,
        #[arg(long, value_name = "K")]
        max_worlds: usize,
        #[arg(long, value_enum)]
        mode: ModeArg,
    },
}

#[derive(Subcommand)]
enum AlgebraCmd {
    /// Check the bi-Heyting laws on an algebra file.
    Validate { file: PathBuf },
    /// List every congruence, coarsest first.
    Congruences { file: PathBuf },
    /// List every lattice filter, smallest first.
    Filters { file: PathBuf },
    /// Evaluate a formula under an element assignment.
    Eval {
        file: PathBuf,
        /// Assignment like `p=1,q=0`; names resolve labels first.
        #[arg(long, value_name = "BINDINGS", value_delimiter = ',')]
        val: Vec<String>,
        #[arg(long, value_name = "STR")]
        formula: String,
    },
    /// Equational consequence over one or more algebra files.
    Entails {
        #[arg(required = true, value_name = "FILE")]
        files: Vec<PathBuf>,
        /// Premise equations like `x & y = x`; repeat for several.
        #[arg(long, value_name = "EQ")]
        theta: Vec<String>,
        #[arg(long, value_name = "EQ")]
        eq: String,
    },
    /// Convert a Kripke model into its algebra of upward-closed sets.
    Upsets {
        model: PathBuf,
        /// Where to write the algebra file.
        #[arg(short = 'o', value_name = "ALGFILE")]
        out: PathBuf,
    },
    /// How many DN iterations until the pointwise map stabilizes?
    #[command(name = "dn-stab")]
    DnStab { file: PathBuf },
}

#[derive(Subcommand)]
enum ProofCmd {
    /// Check a derivation file against the weak or strong calculus.
    Check {
        file: PathBuf,
        #[arg(long, value_enum)]
        logic: LogicArg,
    },
    /// Instantiate a registry derivation (no name lists the catalog).
    Canned {
        name: Option<String>,
        /// Formula arguments for the chosen entry.
        #[arg(value_name = "FORMULA")]
        args: Vec<String>,
        /// Write the instantiated derivation to this path.
        #[arg(long, value_name = "PATH")]
        emit: Option<PathBuf>,
    },
}

#[derive(Subcommand)]
enum ReproCmd {
    /// The three-element chain: two congruences, three filters.
    #[command(name = "c3-isomorphism-failure")]
    C3IsomorphismFailure,
    /// Level-n refutation of the n-truncated equivalence set.
    Xmas {
        #[arg(long)]
        n: usize,
    },
    /// Glue copies under a hub to defeat a candidate defining equation.
    #[command(name = "no-alg-sem")]
    NoAlgSem {
        #[arg(long, value_name = "STR")]
        epsilon: String,
        #[arg(long, value_name = "STR")]
        delta: String,
        #[arg(long, value_name = "FILE")]
        model: PathBuf,
        #[arg(long, value_name = "W")]
        world: usize,
    },
    /// The implicative-condition scorecard for both calculi.
    Implicative,
    /// Which equivalence-set conditions hold on a model at bound k.
    Equivalential {
        /// Model file (defaults to the two-element chain).
        #[arg(long, value_name = "FILE")]
        model: Option<PathBuf>,
        #[arg(long, default_value_t = 2)]
        k: usize,
    },
}

#[derive(Subcommand)]
enum AalCmd {
    /// Truth-preserving consequence over the given algebras.
    Pt {
        #[arg(required = true, value_name = "ALGFILE")]
        algebras: Vec<PathBuf>,
        /// Premise formulas; repeat the flag for several.
        #[arg(long, value_name = "STR")]
        gamma: Vec<String>,
        #[arg(long, value_name = "STR")]
        phi: String,
    },
    /// Degree-preserving consequence over the given algebras.
    Pdt {
        #[arg(required = true, value_name = "ALGFILE")]
        algebras: Vec<PathBuf>,
        /// Premise formulas; repeat the flag for several.
        #[arg(long, value_name = "STR")]
        gamma: Vec<String>,
        #[arg(long, value_name = "STR")]
        phi: String,
    },
}

const SEARCH_WORLD_CAP: usize = 5;

fn dispatch(command: Command, jobs: usize) -> Result<Document, String> {
    match command {
        Command::Parse {
            formula,
            sugar,
            unicode,
        } => cmd_parse(&formula, sugar, unicode),
        Command::Model(cmd) => match cmd {
            ModelCmd::Check {
                file,
                formula,
                world,
            } => cmd_model_check(&file, &formula, world),
            ModelCmd::Consequence {
                file,
                mode,
                gamma,
                phi,
            } => cmd_model_consequence(&file, mode, &gamma, &phi),
            ModelCmd::Bisim {
                file1,
                w1,
                file2,
                w2,
                n,
            } => cmd_model_bisim(&file1, w1, &file2, w2, n),
            ModelCmd::Search {
                gamma,
                phi,
                max_worlds,
                mode,
            } => cmd_model_search(&gamma, &phi, max_worlds, mode, jobs),
        },
        Command::Algebra(cmd) => match cmd {
            AlgebraCmd::Validate { file } => cmd_algebra_validate(&file),
            AlgebraCmd::Congruences { file } => cmd_algebra_congruences(&file),
            AlgebraCmd::Filters { file } => cmd_algebra_filters(&file),
            AlgebraCmd::Eval { file, val, formula } => cmd_algebra_eval(&file, &val, &formula),
            AlgebraCmd::Entails { files, theta, eq } => cmd_algebra_entails(&files, &theta, &eq),
            AlgebraCmd::Upsets { model, out } => cmd_algebra_upsets(&model, &out),
            AlgebraCmd::DnStab { file } => cmd_algebra_dn_stab(&file),
        },
        Command::Proof(cmd) => match cmd {
            ProofCmd::Check { file, logic } => cmd_proof_check(&file, logic),
            ProofCmd::Canned { name, args, emit } => {
                cmd_proof_canned(name.as_deref(), &args, emit.as_deref())
            }
        },
        Command::Repro(cmd) => match cmd {
            ReproCmd::C3IsomorphismFailure => cmd_repro_c3(),
            ReproCmd::Xmas { n } => cmd_repro_xmas(n),
            ReproCmd::NoAlgSem {
                epsilon,
                delta,
                model,
                world,
            } => cmd_repro_no_alg_sem(&epsilon, &delta, &model, world),
            ReproCmd::Implicative => cmd_repro_implicative(),
            ReproCmd::Equivalential { model, k } => {
                cmd_repro_equivalential(model.as_deref(), k)
            }
        },
        Command::Aal(cmd) => match cmd {
            AalCmd::Pt {
                algebras,
                gamma,
                phi,
            } => cmd_aal_preserve(&algebras, &gamma, &phi, true),
            AalCmd::Pdt {
                algebras,
                gamma,
                phi,
            } => cmd_aal_preserve(&algebras, &gamma, &phi, false),
        },
    }
}

// ---------------------------------------------------------------- helpers

fn show(f: &Formula) -> String {
    f.render(&RenderOptions::sugared())
}

fn parse_formula(src: &str) -> Result<Formula, String> {
    Formula::parse(src).map_err(|err| format!("in formula `{src}`: {err}"))
}

fn parse_gamma(items: &[String]) -> Result<Vec<Formula>, String> {
    items.iter().map(|src| parse_formula(src)).collect()
}

fn parse_equation(src: &str) -> Result<Equation, String> {
    let (lhs, rhs) = src
        .split_once('=')
        .ok_or_else(|| format!("equation `{src}` must have the shape `lhs = rhs`"))?;
    Ok(Equation::new(parse_formula(lhs)?, parse_formula(rhs)?))
}

fn read_file(path: &Path) -> Result<String, String> {
    std::fs::read_to_string(path).map_err(|err| format!("cannot read {}: {err}", path.display()))
}

fn load_model(doc: &mut Document, path: &Path) -> Result<KripkeModel, String> {
    let text = read_file(path)?;
    doc.input(path.display().to_string(), text.as_bytes());
    model_from_json(&text).map_err(|err| format!("{}: {err}", path.display()))
}

/// Parses an algebra file without checking the laws (`validate` reports
/// on those itself).
fn load_algebra_raw(doc: &mut Document, path: &Path) -> Result<FinBiHA, String> {
    let text = read_file(path)?;
    doc.input(path.display().to_string(), text.as_bytes());
    algebra_from_json(&text).map_err(|err| format!("{}: {err}", path.display()))
}

/// Parses an algebra file and insists the bi-Heyting laws hold — every
/// verb except `validate` is meaningless on a lawless table.
fn load_algebra(doc: &mut Document, path: &Path) -> Result<FinBiHA, String> {
    let alg = load_algebra_raw(doc, path)?;
    match alg.validate() {
        Ok(()) => Ok(alg),
        Err(violation) => Err(format!("{}: {violation}", path.display())),
    }
}

fn check_world(m: &KripkeModel, world: usize, path: &Path) -> Result<(), String> {
    if world >= m.size() {
        return Err(format!(
            "world {world} out of range: {} has {} worlds",
            path.display(),
            m.size()
        ));
    }
    Ok(())
}

fn model_value(m: &KripkeModel) -> Value {
    serde_json::from_str(&model_to_json(m)).expect("model JSON reparses")
}

fn strings(items: impl IntoIterator<Item = String>) -> Value {
    Value::Array(items.into_iter().map(Value::String).collect())
}

fn element_labels(alg: &FinBiHA, elements: impl IntoIterator<Item = usize>) -> Value {
    strings(elements.into_iter().map(|e| alg.label(e)))
}

fn congruence_value(alg: &FinBiHA, theta: &Congruence) -> Value {
    Value::Array(
        theta
            .blocks()
            .into_iter()
            .map(|block| element_labels(alg, block))
            .collect(),
    )
}

fn filters_value(alg: &FinBiHA, filters: &[BTreeSet<usize>]) -> Value {
    Value::Array(
        filters
            .iter()
            .map(|filter| element_labels(alg, filter.iter().copied()))
            .collect(),
    )
}

fn valuation_value(alg: &FinBiHA, valuation: &crate::algebra::AlgValuation) -> Value {
    let mut map = serde_json::Map::new();
    for (var, &element) in valuation {
        map.insert(var.clone(), Value::String(alg.label(element)));
    }
    Value::Object(map)
}

fn forcing_row_value(row: &ForcingRow) -> Value {
    json!({ "formula": show(&row.formula), "forced": row.forced })
}

fn outcome_value(outcome: &SearchOutcome) -> Value {
    json!({
        "frame_index": outcome.frame_index,
        "model": model_value(&outcome.model),
        "valuation_index": outcome.valuation_index,
        "witness_world": outcome.world,
        "worlds": outcome.model.size(),
    })
}

// ------------------------------------------------------------------ parse

fn cmd_parse(src: &str, sugar: bool, unicode: bool) -> Result<Document, String> {
    let formula = parse_formula(src)?;
    let mut doc = Document::new("parse");
    doc.finding("input", src);
    doc.finding("canonical", formula.render(&RenderOptions::default()));
    if sugar {
        doc.finding("sugared", formula.render(&RenderOptions::sugared()));
    }
    if unicode {
        doc.finding("unicode", formula.render(&RenderOptions::unicode()));
    }
    doc.finding("depth", formula.depth());
    doc.finding("variables", strings(formula.variables()));
    Ok(doc)
}

// ------------------------------------------------------------------ model

fn cmd_model_check(file: &Path, formula: &str, world: usize) -> Result<Document, String> {
    let mut doc = Document::new("model check");
    let m = load_model(&mut doc, file)?;
    check_world(&m, world, file)?;
    let f = parse_formula(formula)?;
    let forced = m.forces(world, &f);
    doc.finding("formula", show(&f));
    doc.finding("world", world);
    doc.finding("world_label", m.label(world));
    doc.finding("forced", forced);
    doc.pass = forced;
    Ok(doc)
}

fn cmd_model_consequence(
    file: &Path,
    mode: ModeArg,
    gamma: &[String],
    phi: &str,
) -> Result<Document, String> {
    let mut doc = Document::new("model consequence");
    let m = load_model(&mut doc, file)?;
    let gamma = parse_gamma(gamma)?;
    let phi = parse_formula(phi)?;
    let counterexample = match mode {
        ModeArg::Local => m.local_counterexample(&gamma, &phi),
        ModeArg::Global => m.global_counterexample(&gamma, &phi),
    };
    doc.finding("mode", ConsequenceMode::from(mode).to_string());
    doc.finding("gamma", strings(gamma.iter().map(show)));
    doc.finding("phi", show(&phi));
    doc.finding("holds", counterexample.is_none());
    if let Some(world) = counterexample {
        doc.finding(
            "counterexample",
            json!({ "world": world, "world_label": m.label(world) }),
        );
    }
    doc.pass = counterexample.is_none();
    Ok(doc)
}

fn cmd_model_bisim(
    file1: &Path,
    w1: usize,
    file2: &Path,
    w2: usize,
    n: usize,
) -> Result<Document, String> {
    let mut doc = Document::new("model bisim");
    let m1 = load_model(&mut doc, file1)?;
    let m2 = load_model(&mut doc, file2)?;
    check_world(&m1, w1, file1)?;
    check_world(&m2, w2, file2)?;
    let bisimilar = n_bisimilar(&m1, w1, &m2, w2, n);
    doc.finding("w1", w1);
    doc.finding("w2", w2);
    doc.finding("n", n);
    doc.finding("bisimilar", bisimilar);
    doc.pass = bisimilar;
    Ok(doc)
}

fn cmd_model_search(
    gamma: &[String],
    phi: &str,
    max_worlds: usize,
    mode: ModeArg,
    jobs: usize,
) -> Result<Document, String> {
    if max_worlds == 0 || max_worlds > SEARCH_WORLD_CAP {
        return Err(format!(
            "--max-worlds must be between 1 and {SEARCH_WORLD_CAP}: \
             the frame enumeration is doubly exponential"
        ));
    }
    let gamma = parse_gamma(gamma)?;
    let phi = parse_formula(phi)?;
    let outcome = countermodel_search(&gamma, &phi, max_worlds, mode.into(), jobs);
    let mut doc = Document::new("model search");
    doc.finding("gamma", strings(gamma.iter().map(show)));
    doc.finding("phi", show(&phi));
    doc.finding("mode", ConsequenceMode::from(mode).to_string());
    doc.finding("max_worlds", max_worlds);
    doc.finding("found", outcome.is_some());
    if let Some(outcome) = &outcome {
        doc.finding("countermodel", outcome_value(outcome));
    }
    doc.pass = outcome.is_some();
    Ok(doc)
}

// ---------------------------------------------------------------- algebra

fn cmd_algebra_validate(file: &Path) -> Result<Document, String> {
    let mut doc = Document::new("algebra validate");
    let alg = load_algebra_raw(&mut doc, file)?;
    let verdict = alg.validate();
    doc.finding("size", alg.size());
    doc.finding("laws_hold", verdict.is_ok());
    if let Err(violation) = &verdict {
        doc.finding(
            "violation",
            json!({
                "law": violation.law,
                "elements": element_labels(&alg, violation.elements.iter().copied()),
                "detail": violation.detail.clone(),
            }),
        );
    }
    doc.pass = verdict.is_ok();
    Ok(doc)
}

fn cmd_algebra_congruences(file: &Path) -> Result<Document, String> {
    let mut doc = Document::new("algebra congruences");
    let alg = load_algebra(&mut doc, file)?;
    let congruences = all_congruences(&alg);
    doc.finding("size", alg.size());
    doc.finding("count", congruences.len());
    doc.finding("simple", congruences.len() == 2);
    doc.finding(
        "congruences",
        Value::Array(
            congruences
                .iter()
                .map(|theta| congruence_value(&alg, theta))
                .collect(),
        ),
    );
    Ok(doc)
}

fn cmd_algebra_filters(file: &Path) -> Result<Document, String> {
    let mut doc = Document::new("algebra filters");
    let alg = load_algebra(&mut doc, file)?;
    let filters = lattice_filters(&alg);
    doc.finding("size", alg.size());
    doc.finding("count", filters.len());
    doc.finding("filters", filters_value(&alg, &filters));
    Ok(doc)
}

fn cmd_algebra_eval(file: &Path, val: &[String], formula: &str) -> Result<Document, String> {
    let mut doc = Document::new("algebra eval");
    let alg = load_algebra(&mut doc, file)?;
    let mut valuation = crate::algebra::AlgValuation::new();
    for binding in val {
        let (name, element) = binding
            .split_once('=')
            .ok_or_else(|| format!("binding `{binding}` must have the shape `var=element`"))?;
        let element = alg.element_by_name(element.trim()).ok_or_else(|| {
            format!(
                "`{}` names no element of {} (size {})",
                element.trim(),
                file.display(),
                alg.size()
            )
        })?;
        valuation.insert(name.trim().to_string(), element);
    }
    let f = parse_formula(formula)?;
    let value = alg
        .interpret(&f, &valuation)
        .map_err(|err| err.to_string())?;
    doc.finding("formula", show(&f));
    doc.finding("valuation", valuation_value(&alg, &valuation));
    doc.finding("value", alg.label(value));
    doc.finding("value_index", value);
    doc.finding("is_top", value == alg.top());
    Ok(doc)
}

fn cmd_algebra_entails(files: &[PathBuf], theta: &[String], eq: &str) -> Result<Document, String> {
    let mut doc = Document::new("algebra entails");
    let mut family = Vec::new();
    for file in files {
        family.push(load_algebra(&mut doc, file)?);
    }
    let premises: Vec<Equation> = theta
        .iter()
        .map(|src| parse_equation(src))
        .collect::<Result<_, _>>()?;
    let conclusion = parse_equation(eq)?;
    let verdict = eq_consequence(&family, &premises, &conclusion);
    doc.finding("theta", strings(premises.iter().map(|eq| eq.to_string())));
    doc.finding("eq", conclusion.to_string());
    doc.finding("holds", verdict.is_ok());
    if let Err(counterexample) = &verdict {
        let alg = &family[counterexample.algebra];
        doc.finding(
            "counterexample",
            json!({
                "algebra": files[counterexample.algebra].display().to_string(),
                "valuation": valuation_value(alg, &counterexample.valuation),
            }),
        );
    }
    doc.pass = verdict.is_ok();
    Ok(doc)
}

fn cmd_algebra_upsets(model: &Path, out: &Path) -> Result<Document, String> {
    let mut doc = Document::new("algebra upsets");
    let m = load_model(&mut doc, model)?;
    let ua = upset_algebra(&m).map_err(|err| format!("{}: {err}", model.display()))?;
    let mut text = algebra_to_json(&ua.algebra);
    text.push('\n');
    std::fs::write(out, &text)
        .map_err(|err| format!("cannot write {}: {err}", out.display()))?;
    doc.finding("worlds", m.size());
    doc.finding("elements", ua.algebra.size());
    doc.finding("atom_elements", valuation_value(&ua.algebra, &ua.valuation));
    doc.finding("written", out.display().to_string());
    doc.finding("written_sha256", crate::report::digest(text.as_bytes()));
    Ok(doc)
}

fn cmd_algebra_dn_stab(file: &Path) -> Result<Document, String> {
    let mut doc = Document::new("algebra dn-stab");
    let alg = load_algebra(&mut doc, file)?;
    let index = alg.dn_stabilization();
    let within = index <= alg.size();
    doc.finding("size", alg.size());
    doc.finding("stabilization_index", index);
    doc.finding(
        "dn_map",
        element_labels(&alg, (0..alg.size()).map(|e| alg.dn_element(e))),
    );
    doc.finding("index_within_size", within);
    doc.pass = within;
    Ok(doc)
}

// ------------------------------------------------------------------ proof

fn cmd_proof_check(file: &Path, logic: LogicArg) -> Result<Document, String> {
    let mut doc = Document::new("proof check");
    let text = read_file(file)?;
    doc.input(file.display().to_string(), text.as_bytes());
    let d = derivation_from_json(&text).map_err(|err| format!("{}: {err}", file.display()))?;
    let logic = LogicId::from(logic);
    let verdict = check(&d, logic);
    doc.finding("logic", logic.to_string());
    doc.finding("context", strings(d.context().iter().map(show)));
    doc.finding("conclusion", show(d.formula()));
    doc.finding("nodes", d.node_count());
    doc.finding("valid", verdict.is_ok());
    if let Err(failure) = &verdict {
        doc.finding(
            "failure",
            json!({
                "path": failure.path.clone(),
                "at": failure.consecution.to_string(),
                "reason": failure.reason.clone(),
            }),
        );
    }
    doc.pass = verdict.is_ok();
    Ok(doc)
}

fn cmd_proof_canned(
    name: Option<&str>,
    args: &[String],
    emit: Option<&Path>,
) -> Result<Document, String> {
    let mut doc = Document::new("proof canned");
    let Some(name) = name else {
        if !args.is_empty() {
            return Err("formula arguments need an entry name".to_string());
        }
        let entries = catalog();
        doc.finding("count", entries.len());
        doc.finding(
            "entries",
            Value::Array(
                entries
                    .iter()
                    .map(|info| {
                        json!({
                            "name": info.name,
                            "arity": info.arity,
                            "logic": info.logic.to_string(),
                            "summary": info.summary,
                        })
                    })
                    .collect(),
            ),
        );
        return Ok(doc);
    };
    let args: Vec<Formula> = args
        .iter()
        .map(|src| parse_formula(src))
        .collect::<Result<_, _>>()?;
    let proof = canned(name, &args).map_err(|err| err.to_string())?;
    let consecution = Consecution::new(
        proof.derivation.context().clone(),
        proof.derivation.formula().clone(),
    );
    doc.finding("name", proof.name);
    doc.finding("logic", proof.logic.to_string());
    doc.finding("consecution", consecution.to_string());
    doc.finding("nodes", proof.derivation.node_count());
    let mut pass = true;
    if proof.logic.includes_weak() {
        let ok = check(&proof.derivation, LogicId::Weak).is_ok();
        doc.finding("weak_valid", ok);
        pass &= ok;
    }
    if proof.logic.includes_strong() {
        let ok = check(&proof.derivation, LogicId::Strong).is_ok();
        doc.finding("strong_valid", ok);
        pass &= ok;
    }
    if let Some(path) = emit {
        let mut text = derivation_to_json(&proof.derivation);
        text.push('\n');
        std::fs::write(path, &text)
            .map_err(|err| format!("cannot write {}: {err}", path.display()))?;
        doc.finding("written", path.display().to_string());
        doc.finding("written_sha256", crate::report::digest(text.as_bytes()));
    }
    doc.pass = pass;
    Ok(doc)
}

// ------------------------------------------------------------------ repro

fn cmd_repro_c3() -> Result<Document, String> {
    let report = isomorphism_failure_report();
    let alg = &report.algebra;
    let mut doc = Document::new("repro c3-isomorphism-failure");
    doc.finding("size", alg.size());
    doc.finding("congruence_count", report.congruences.len());
    doc.finding("lattice_filter_count", report.filters.len());
    doc.finding(
        "congruences",
        Value::Array(
            report
                .congruences
                .iter()
                .map(|theta| congruence_value(alg, theta))
                .collect(),
        ),
    );
    doc.finding("lattice_filters", filters_value(alg, &report.filters));
    doc.finding(
        "weak_deductive_filters",
        filters_value(alg, &report.weak_deductive_filters),
    );
    doc.finding(
        "strong_deductive_filters",
        filters_value(alg, &report.strong_deductive_filters),
    );
    doc.finding("filters_coincide_with_weak", report.filters_coincide);
    doc.finding("simple", report.simple);
    doc.finding("notes", strings(report.notes.iter().map(|s| s.to_string())));
    doc.pass = report.pass;
    Ok(doc)
}

fn cmd_repro_xmas(n: usize) -> Result<Document, String> {
    let report = finite_equivalential_refutation(n).map_err(|err| err.to_string())?;
    let mut doc = Document::new("repro xmas");
    doc.finding("level", report.level);
    doc.finding("worlds", report.model.size());
    doc.finding(
        "premises",
        Value::Array(report.premises.iter().map(forcing_row_value).collect()),
    );
    doc.finding("conclusion", forcing_row_value(&report.conclusion));
    doc.finding(
        "premises_forced_at_base",
        report.premises.iter().all(|row| row.forced[0]),
    );
    doc.finding("conclusion_forced_at_base", report.conclusion.forced[0]);
    doc.finding("model", model_value(&report.model));
    doc.pass = report.pass;
    Ok(doc)
}

fn cmd_repro_no_alg_sem(
    epsilon: &str,
    delta: &str,
    model: &Path,
    world: usize,
) -> Result<Document, String> {
    let mut doc = Document::new("repro no-alg-sem");
    let m = load_model(&mut doc, model)?;
    check_world(&m, world, model)?;
    let e = parse_formula(epsilon)?;
    let d = parse_formula(delta)?;
    let report = no_alg_sem_witness(&e, &d, &m, world).map_err(|err| err.to_string())?;
    doc.finding("epsilon", show(&e));
    doc.finding("delta", show(&d));
    doc.finding("depth", report.depth);
    doc.finding("base_world", report.base_world);
    doc.finding("copies", report.glued.copies());
    doc.finding("hub", report.glued.hub);
    doc.finding("glued_worlds", report.glued.model.size());
    doc.finding(
        "checks",
        Value::Array(
            report
                .checks
                .iter()
                .map(|check| {
                    json!({ "name": check.name, "detail": check.detail, "holds": check.holds })
                })
                .collect(),
        ),
    );
    doc.pass = report.pass;
    Ok(doc)
}

fn cmd_repro_implicative() -> Result<Document, String> {
    let report = implicative_report();
    let mut doc = Document::new("repro implicative");
    doc.finding(
        "items",
        Value::Array(
            report
                .items
                .iter()
                .map(|item| {
                    json!({
                        "condition": item.condition,
                        "canned": item.canned,
                        "consecution": item.consecution,
                        "strong_ok": item.strong_ok,
                        "weak_ok": item.weak_ok,
                    })
                })
                .collect(),
        ),
    );
    doc.finding(
        "excl_local_countermodel",
        report
            .excl_local_countermodel
            .as_ref()
            .map(outcome_value)
            .unwrap_or(Value::Null),
    );
    doc.pass = report.pass;
    Ok(doc)
}

fn cmd_repro_equivalential(model: Option<&Path>, k: usize) -> Result<Document, String> {
    let mut doc = Document::new("repro equivalential");
    let m = match model {
        Some(path) => load_model(&mut doc, path)?,
        None => crate::kripke::two_chain(),
    };
    let report = equivalential_report_on(&m, k).map_err(|err| err.to_string())?;
    doc.finding("bound", report.bound);
    doc.finding("worlds", m.size());
    doc.finding(
        "checks",
        Value::Array(
            report
                .checks
                .iter()
                .map(|check| {
                    json!({
                        "name": check.name.clone(),
                        "statement": check.statement.clone(),
                        "holds": check.holds,
                    })
                })
                .collect(),
        ),
    );
    doc.pass = report.pass;
    Ok(doc)
}

// -------------------------------------------------------------------- aal

fn cmd_aal_preserve(
    files: &[PathBuf],
    gamma: &[String],
    phi: &str,
    truth: bool,
) -> Result<Document, String> {
    let mut doc = Document::new(if truth { "aal pt" } else { "aal pdt" });
    let mut family = Vec::new();
    for file in files {
        family.push(load_algebra(&mut doc, file)?);
    }
    let gamma = parse_gamma(gamma)?;
    let phi = parse_formula(phi)?;
    let counterexample = if truth {
        pt_counterexample(&family, &gamma, &phi)
    } else {
        pdt_counterexample(&family, &gamma, &phi)
    };
    doc.finding("relation", if truth { "pt" } else { "pdt" });
    doc.finding("gamma", strings(gamma.iter().map(show)));
    doc.finding("phi", show(&phi));
    doc.finding("holds", counterexample.is_none());
    if let Some(counterexample) = &counterexample {
        let alg = &family[counterexample.algebra];
        let mut entry = serde_json::Map::new();
        entry.insert(
            "algebra".to_string(),
            Value::String(files[counterexample.algebra].display().to_string()),
        );
        entry.insert(
            "valuation".to_string(),
            valuation_value(alg, &counterexample.valuation),
        );
        if let Some(bound) = counterexample.bound {
            entry.insert("premise_infimum".to_string(), Value::String(alg.label(bound)));
        }
        doc.finding("counterexample", Value::Object(entry));
    }
    doc.pass = counterexample.is_none();
    Ok(doc)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_args(args: &[&str]) -> CliResult {
        run(args.iter().copied())
    }

    #[test]
    fn parse_verb_reports_canonical_rendering() {
        let result = run_args(&["biint", "parse", "p \\ q"]);
        assert_eq!(result.code, 0, "stderr: {}", result.stderr);
        assert!(result.stdout.contains("command: parse"));
        assert!(result.stdout.contains("canonical:"));
        assert!(result.stdout.ends_with("result: PASS\n"));
    }

    #[test]
    fn parse_verb_rejects_garbage_with_usage_exit() {
        let result = run_args(&["biint", "parse", "p -> ("]);
        assert_eq!(result.code, 2);
        assert!(result.stdout.is_empty());
        assert!(result.stderr.contains("parse error"));
    }

    #[test]
    fn unknown_verb_is_a_usage_error() {
        let result = run_args(&["biint", "frobnicate"]);
        assert_eq!(result.code, 2);
    }

    #[test]
    fn help_exits_zero_on_stdout() {
        let result = run_args(&["biint", "--help"]);
        assert_eq!(result.code, 0);
        assert!(result.stdout.contains("biint"));
        assert!(result.stderr.is_empty());
    }

    #[test]
    fn repro_c3_passes_with_expected_counts() {
        let result = run_args(&["biint", "repro", "c3-isomorphism-failure"]);
        assert_eq!(result.code, 0, "stderr: {}", result.stderr);
        assert!(result.stdout.contains("congruence_count: 2"));
        assert!(result.stdout.contains("lattice_filter_count: 3"));
        assert!(result.stdout.ends_with("result: PASS\n"));
    }

    #[test]
    fn structured_format_is_valid_json() {
        let result = run_args(&[
            "biint",
            "repro",
            "c3-isomorphism-failure",
            "--format",
            "structured",
        ]);
        assert_eq!(result.code, 0);
        let doc: serde_json::Value = serde_json::from_str(&result.stdout).unwrap();
        assert_eq!(doc["pass"], serde_json::Value::Bool(true));
        assert_eq!(doc["findings"]["congruence_count"], serde_json::json!(2));
    }

    #[test]
    fn repeated_runs_are_byte_identical() {
        let invoke = || run_args(&["biint", "repro", "xmas", "--n", "1"]);
        let first = invoke();
        let second = invoke();
        assert_eq!(first.code, 0);
        assert_eq!(first.stdout, second.stdout);
    }

    #[test]
    fn xmas_level_zero_is_usage_error() {
        let result = run_args(&["biint", "repro", "xmas", "--n", "0"]);
        assert_eq!(result.code, 2);
    }

    #[test]
    fn search_finds_the_separating_model() {
        let result = run_args(&[
            "biint", "model", "search", "--gamma", "p", "--phi", "!~p", "--max-worlds", "2",
            "--mode", "local",
        ]);
        assert_eq!(result.code, 0, "stderr: {}", result.stderr);
        assert!(result.stdout.contains("found: true"));
    }

    #[test]
    fn search_cap_is_enforced() {
        let result = run_args(&[
            "biint", "model", "search", "--gamma", "p", "--phi", "q", "--max-worlds", "9",
            "--mode", "local",
        ]);
        assert_eq!(result.code, 2);
        assert!(result.stderr.contains("max-worlds"));
    }

    #[test]
    fn canned_catalog_lists_entries() {
        let result = run_args(&["biint", "proof", "canned"]);
        assert_eq!(result.code, 0);
        assert!(result.stdout.contains("imp_refl"));
    }

    #[test]
    fn canned_unknown_name_is_usage_error() {
        let result = run_args(&["biint", "proof", "canned", "no_such_entry"]);
        assert_eq!(result.code, 2);
    }
}
