//! The `qcalc` command line: argument parsing, dispatch and exit codes.
//!
//! Exit codes: 0 the property holds or every check passes, 1 the property is
//! false, 2 a validation or computation error, 3 unreadable or unparsable input.

pub mod corpus;
pub mod laws;
pub mod paper;
pub mod workspace;

use std::sync::Arc;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::error::Error;
use crate::mcomplete::{
    free_extension, is_m_complete, is_m_conically_cocomplete, is_m_cocomplete, is_m_cocontinuous, is_m_continuous,
    is_m_cotensored, is_m_tensored, is_pdag_algebra_hom, is_phat_algebra_hom, MoritaReport,
};
use crate::morita::{cauchy_complete_report, cauchy_completion, morita_equivalent};
use crate::presheaf::{cotensor_witness, find_inf_functor, find_sup_functor, tensor_witness, PresheafCategory};
use crate::qcat::QCategory;
use crate::qdist::QDistributor;
use corpus::{CorpusSpec, Family};
use laws::{render_run, run_suite, Fixtures, Suite};
use workspace::{parse_workspace, Workspace, WorkspaceError};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FALSE: i32 = 1;
pub const EXIT_INVALID: i32 = 2;
pub const EXIT_PARSE: i32 = 3;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Table,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Property {
    MCocomplete,
    MComplete,
    Cocomplete,
    Complete,
    MTensored,
    MCotensored,
    MConical,
    CauchyComplete,
    Skeletal,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum DistProperty {
    LeftAdjoint,
    RightAdjoint,
    MCocontinuous,
    MContinuous,
    PhatHom,
    PdagHom,
    FreeExtension,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Switch {
    On,
    Off,
}

#[derive(Debug, Parser)]
#[command(name = "qcalc", version, about = "Categories enriched in finite quantaloids")]
pub struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value = "table")]
    pub format: Format,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Parse and validate a workspace file.
    Validate { file: String },
    /// List the presheaves on a category with the Yoneda rows and their star.
    Presheaves {
        file: String,
        category: String,
        /// Restrict to presheaves of this quantaloid object.
        #[arg(long = "type")]
        ty: Option<String>,
    },
    /// Decide a completeness property of a category.
    Check {
        file: String,
        category: String,
        #[arg(long, value_enum)]
        property: Property,
        /// Whether the empty weight counts for M-conical cocompleteness.
        #[arg(long, value_enum, default_value = "on")]
        conical_empty: Switch,
    },
    /// Compute the Cauchy completion of a category.
    Cauchy { file: String, category: String },
    /// Decide Morita equivalence of two categories.
    Morita { file: String, first: String, second: String },
    /// Decide a property of a distributor.
    Dist {
        file: String,
        distributor: String,
        #[arg(long, value_enum)]
        property: DistProperty,
    },
    /// Run law suites over fixtures and, optionally, a generated corpus.
    Laws {
        /// Workspace whose quantaloids and categories serve as fixtures.
        #[arg(required_unless_present = "builtin", conflicts_with = "builtin")]
        file: Option<String>,
        /// Use the built-in fixtures.
        #[arg(long)]
        builtin: bool,
        #[arg(long, default_value = "all")]
        suite: Suite,
        /// Number of generated instances.
        #[arg(long)]
        random: Option<usize>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value = "mixed")]
        family: Family,
        #[arg(long, default_value_t = 3)]
        max_objects: usize,
    },
    /// Reproduce the two worked examples.
    Paper,
}

/// What a command printed and how it ended.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn ok(code: i32, stdout: String) -> Self {
        Outcome { code, stdout, stderr: String::new() }
    }

    fn fail(code: i32, stderr: String) -> Self {
        Outcome { code, stdout: String::new(), stderr }
    }
}

impl From<WorkspaceError> for Outcome {
    fn from(e: WorkspaceError) -> Self {
        let code = if e.is_parse() { EXIT_PARSE } else { EXIT_INVALID };
        Outcome::fail(code, format!("error: {e}\n"))
    }
}

impl From<Error> for Outcome {
    fn from(e: Error) -> Self {
        Outcome::fail(EXIT_INVALID, format!("error: {e}\n"))
    }
}

/// Parses arguments (the first item is the program name) and runs the command.
pub fn run_args<I, S>(args: I) -> Outcome
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    match Cli::try_parse_from(args) {
        Ok(cli) => run(&cli),
        Err(e) => {
            let code = match e.kind() {
                clap::error::ErrorKind::DisplayHelp | clap::error::ErrorKind::DisplayVersion => EXIT_OK,
                _ => EXIT_PARSE,
            };
            let text = e.render().to_string();
            if code == EXIT_OK {
                Outcome::ok(code, text)
            } else {
                Outcome::fail(code, text)
            }
        }
    }
}

pub fn run(cli: &Cli) -> Outcome {
    match execute(cli) {
        Ok(o) | Err(o) => o,
    }
}

fn load(file: &str) -> Result<Workspace, Outcome> {
    let text = std::fs::read_to_string(file)
        .map_err(|e| Outcome::fail(EXIT_PARSE, format!("error: cannot read {file}: {e}\n")))?;
    Ok(parse_workspace(&text)?)
}

fn category(ws: &Workspace, name: &str) -> Result<Arc<QCategory>, Outcome> {
    ws.category(name)
        .cloned()
        .ok_or_else(|| Outcome::fail(EXIT_INVALID, format!("error: no category named `{name}`\n")))
}

fn json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("reports serialize");
    s.push('\n');
    s
}

fn emit<T: Serialize>(format: Format, value: &T, table: impl FnOnce() -> String) -> String {
    match format {
        Format::Json => json(value),
        Format::Table => table(),
    }
}

fn verdict_code(v: bool) -> i32 {
    if v {
        EXIT_OK
    } else {
        EXIT_FALSE
    }
}

pub fn render_report(r: &MoritaReport) -> String {
    let mut out = format!("{} {}: {}\n", r.subject, r.property, r.verdict);
    if let Some(w) = &r.witness {
        out.push_str(&format!("witness: {w}\n"));
    }
    for (route, v) in &r.routes {
        out.push_str(&format!("route {route}: {v}\n"));
    }
    for n in &r.notes {
        out.push_str(&format!("note: {n}\n"));
    }
    out
}

/// Decides `property` for `a`.
pub fn check_property(a: &Arc<QCategory>, property: Property, conical_empty: bool) -> crate::Result<MoritaReport> {
    let name = a.name();
    Ok(match property {
        Property::MCocomplete => is_m_cocomplete(a.clone())?,
        Property::MComplete => is_m_complete(a.clone())?,
        Property::Cocomplete => {
            let v = find_sup_functor(&PresheafCategory::presheaves(a.clone())?).is_some();
            MoritaReport::new(name, "cocomplete", v, (!v).then(|| "Y_A has no left adjoint functor".to_string()))
        }
        Property::Complete => {
            let v = find_inf_functor(&PresheafCategory::copresheaves(a.clone())?).is_some();
            MoritaReport::new(name, "complete", v, (!v).then(|| "Y†_A has no right adjoint functor".to_string()))
        }
        Property::MTensored => is_m_tensored(a.clone())?,
        Property::MCotensored => is_m_cotensored(a.clone())?,
        Property::MConical => {
            let mut r = is_m_conically_cocomplete(a.clone(), conical_empty)?;
            r.notes.push(format!("empty weight {}", if conical_empty { "included" } else { "excluded" }));
            r
        }
        Property::CauchyComplete => cauchy_complete_report(a.clone())?,
        Property::Skeletal => {
            let n = a.len();
            let pair = (0..n).flat_map(|x| (x + 1..n).map(move |y| (x, y))).find(|&(x, y)| a.is_iso(x, y));
            MoritaReport::new(
                name,
                "skeletal",
                pair.is_none(),
                pair.map(|(x, y)| format!("{} ≅ {}", a.objects()[x], a.objects()[y])),
            )
        }
    })
}

/// Decides `property` for `d`.
pub fn dist_property(d: &QDistributor, property: DistProperty) -> crate::Result<MoritaReport> {
    let q = d.base();
    let describe = |e: &QDistributor| -> String {
        let (a, b) = (e.dom(), e.cod());
        (0..a.len())
            .flat_map(|x| (0..b.len()).map(move |y| (x, y)))
            .map(|(x, y)| format!("{}→{}={}", a.objects()[x], b.objects()[y], q.hom(a.ty(x), b.ty(y)).element_name(e.get(x, y))))
            .collect::<Vec<_>>()
            .join(" ")
    };
    Ok(match property {
        DistProperty::LeftAdjoint => {
            let v = d.is_left_adjoint();
            let mut r = MoritaReport::new(&d.name, "left-adjoint", v, (!v).then(|| "A ≰ φ*∘φ".to_string()));
            r.notes.push(format!("candidate right adjoint φ* = {}", describe(&d.star())));
            r
        }
        DistProperty::RightAdjoint => {
            let v = d.is_right_adjoint();
            let mut r = MoritaReport::new(&d.name, "right-adjoint", v, (!v).then(|| "B ≰ φ∘(A↙φ)".to_string()));
            r.notes.push(format!("candidate left adjoint A↙φ = {}", describe(&d.left_adjoint_candidate())));
            r
        }
        DistProperty::MCocontinuous => is_m_cocontinuous(d)?,
        DistProperty::MContinuous => is_m_continuous(d)?,
        DistProperty::PhatHom => is_phat_algebra_hom(d)?,
        DistProperty::PdagHom => is_pdag_algebra_hom(d)?,
        DistProperty::FreeExtension => {
            let fe = free_extension(d, true)?;
            let v = fe.report.all_hold();
            let mut r = MoritaReport::new(
                &d.name,
                "free-extension",
                v,
                (!v).then(|| fe.report.failures().map(|c| format!("{} {}", c.law, c.detail)).collect::<Vec<_>>().join("; ")),
            );
            r.routes = fe.report.checks.iter().map(|c| (c.law.clone(), c.holds)).collect();
            r.notes.push(format!("η = {}", describe(&fe.eta)));
            r
        }
    })
}

#[derive(Debug, Serialize)]
struct ValidateSummary<'a> {
    lattices: Vec<&'a String>,
    quantaloids: Vec<&'a String>,
    categories: Vec<&'a String>,
    distributors: Vec<&'a String>,
}

#[derive(Debug, Serialize)]
struct CauchySummary {
    category: String,
    members: Vec<String>,
    cauchy_complete: bool,
    completion_objects: Vec<String>,
    completion_homs: Vec<Vec<String>>,
}

#[derive(Debug, Serialize)]
struct MoritaSummary {
    first: String,
    second: String,
    equivalent: bool,
    first_completion: Vec<String>,
    second_completion: Vec<String>,
    isomorphism: Option<Vec<(String, String)>>,
    distributors_inverse: Option<bool>,
}

fn execute(cli: &Cli) -> Result<Outcome, Outcome> {
    let fmt = cli.format;
    match &cli.command {
        Command::Validate { file } => {
            let ws = load(file)?;
            let s = ValidateSummary {
                lattices: ws.lattices.keys().collect(),
                quantaloids: ws.quantaloids.keys().collect(),
                categories: ws.categories.keys().collect(),
                distributors: ws.distributors.keys().collect(),
            };
            let out = emit(fmt, &s, || {
                format!(
                    "valid: {} lattices, {} quantaloids, {} categories, {} distributors\n",
                    s.lattices.len(),
                    s.quantaloids.len(),
                    s.categories.len(),
                    s.distributors.len()
                )
            });
            Ok(Outcome::ok(EXIT_OK, out))
        }
        Command::Presheaves { file, category: name, ty } => {
            let ws = load(file)?;
            let a = category(&ws, name)?;
            let t = match ty {
                Some(t) => Some(a.base().object(t).map_err(Outcome::from)?),
                None => None,
            };
            let rows = paper::presheaf_rows(&a, t)?;
            Ok(Outcome::ok(EXIT_OK, emit(fmt, &rows, || paper::render_rows(&a, &rows))))
        }
        Command::Check { file, category: name, property, conical_empty } => {
            let ws = load(file)?;
            let a = category(&ws, name)?;
            let r = check_property(&a, *property, *conical_empty == Switch::On)?;
            Ok(Outcome::ok(verdict_code(r.verdict), emit(fmt, &r, || render_report(&r))))
        }
        Command::Cauchy { file, category: name } => {
            let ws = load(file)?;
            let a = category(&ws, name)?;
            let cc = cauchy_completion(a.clone())?;
            let c = &cc.category;
            let s = CauchySummary {
                category: a.name().to_string(),
                members: cc.members.iter().map(|&i| cc.presheaves.label(i).to_string()).collect(),
                cauchy_complete: cauchy_complete_report(a.clone())?.verdict,
                completion_objects: c.objects().to_vec(),
                completion_homs: (0..c.len()).map(|x| (0..c.len()).map(|y| c.hom_name(x, y).to_string()).collect()).collect(),
            };
            let out = emit(fmt, &s, || {
                let mut t = format!("{}_cc has {} objects: {}\n", s.category, s.members.len(), s.members.join(" "));
                for (x, row) in s.completion_homs.iter().enumerate() {
                    t.push_str(&format!("  {} | {}\n", s.members[x], row.join(" ")));
                }
                t.push_str(&format!("{} cauchy-complete: {}\n", s.category, s.cauchy_complete));
                t
            });
            Ok(Outcome::ok(EXIT_OK, out))
        }
        Command::Morita { file, first, second } => {
            let ws = load(file)?;
            let (a, b) = (category(&ws, first)?, category(&ws, second)?);
            let w = morita_equivalent(a.clone(), b.clone())?;
            let labels = |c: &crate::morita::CauchyCompletion| -> Vec<String> {
                c.members.iter().map(|&i| c.presheaves.label(i).to_string()).collect()
            };
            let (lc, rc) = match &w {
                Some(w) => (labels(&w.left), labels(&w.right)),
                None => (labels(&cauchy_completion(a.clone())?), labels(&cauchy_completion(b.clone())?)),
            };
            let s = MoritaSummary {
                first: a.name().to_string(),
                second: b.name().to_string(),
                equivalent: w.is_some(),
                first_completion: lc,
                second_completion: rc,
                isomorphism: w.as_ref().map(|w| {
                    let (ls, rs) = (&w.left_skeleton.0, &w.right_skeleton.0);
                    w.iso.iter().enumerate().map(|(i, &j)| (ls.objects()[i].clone(), rs.objects()[j].clone())).collect()
                }),
                distributors_inverse: match &w {
                    Some(w) => Some(w.distributors_inverse()?),
                    None => None,
                },
            };
            let out = emit(fmt, &s, || {
                let mut t = format!("{} ~ {}: {}\n", s.first, s.second, s.equivalent);
                t.push_str(&format!("{}_cc: {}\n{}_cc: {}\n", s.first, s.first_completion.join(" "), s.second, s.second_completion.join(" ")));
                if let Some(iso) = &s.isomorphism {
                    let pairs: Vec<String> = iso.iter().map(|(l, r)| format!("{l} ↦ {r}")).collect();
                    t.push_str(&format!("skeleton isomorphism: {}\n", pairs.join(", ")));
                }
                if let Some(inv) = s.distributors_inverse {
                    t.push_str(&format!("transported distributors inverse: {inv}\n"));
                }
                t
            });
            Ok(Outcome::ok(verdict_code(s.equivalent), out))
        }
        Command::Dist { file, distributor, property } => {
            let ws = load(file)?;
            let d = ws
                .distributors
                .get(distributor)
                .ok_or_else(|| Outcome::fail(EXIT_INVALID, format!("error: no distributor named `{distributor}`\n")))?;
            let r = dist_property(d, *property)?;
            Ok(Outcome::ok(verdict_code(r.verdict), emit(fmt, &r, || render_report(&r))))
        }
        Command::Laws { file, builtin: _, suite, random, seed, family, max_objects } => {
            let fx = match file {
                Some(f) => Fixtures::from_workspace(&load(f)?),
                None => Fixtures::builtin(),
            };
            let corpus = random.map(|count| CorpusSpec { seed: *seed, count, max_objects: *max_objects, family: *family });
            let run = run_suite(*suite, &fx, corpus);
            Ok(Outcome::ok(verdict_code(run.passes()), emit(fmt, &run, || render_run(&run))))
        }
        Command::Paper => {
            let r = paper::paper_report();
            Ok(Outcome::ok(verdict_code(r.passes()), emit(fmt, &r, || paper::render_paper(&r))))
        }
    }
}

/// Tensor and cotensor witnesses in words, for diagnostics.
pub fn tensor_summary(a: &QCategory) -> String {
    let q = a.base();
    let t = tensor_witness(a).map(|(x, f)| format!("no tensor of {} by {}", a.objects()[x], q.arrow_name(f)));
    let c = cotensor_witness(a).map(|(x, g)| format!("no cotensor of {} by {}", a.objects()[x], q.arrow_name(g)));
    match (t, c) {
        (None, None) => "tensored and cotensored".into(),
        (t, c) => [t, c].into_iter().flatten().collect::<Vec<_>>().join("; "),
    }
}
