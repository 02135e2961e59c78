//! Command-line front end. `run` is pure: it returns the exit code and both output streams.

use std::collections::BTreeMap;
use std::fmt::Write;
use std::path::PathBuf;
use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::Mutex;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::arquiver::{
    almost_split_sequence_oracle, almost_split_verify, ar_quiver, export_dot, ARSequence, ARSequenceJson, T4Context,
    VerificationReport,
};
use crate::corpus::{preset, random_special_biserial, CorpusSpec};
use crate::error::{Error, Result};
use crate::nakayama::{
    check_t5_in, indecomposables_in, lattice_is_chain, structure_suite, verdict_from, Indecomposable, NakayamaIndex,
    Route, SuiteReport, T5Report, WalkReading,
};
use crate::presentation::{parse_presentation, Presentation};
use crate::repmod::{injective, is_indecomposable_capped, isomorphic_unbounded, projective, string_module, DegreeReport, Rep};
use crate::stringcomb::{StringAlgebra, StringWord};

pub const SCHEMA_VERSION: u32 = 1;

pub const EXIT_OK: i32 = 0;
pub const EXIT_PRECONDITION: i32 = 2;
pub const EXIT_DISAGREEMENT: i32 = 3;

#[derive(Debug, Parser)]
#[command(name = "nakayama", version, about = "Right n-Nakayama classification and almost split sequences for special biserial algebras")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Check admissibility and special biserialness, and look for a band.
    Validate(CommonArgs),
    /// Compute the right n-Nakayama index and cross-check the walk conditions.
    Classify(CommonArgs),
    /// List the indecomposable modules with their factor-serial degrees.
    Modules(CommonArgs),
    /// The almost split sequence ending at a module.
    Ar {
        #[command(flatten)]
        common: CommonArgs,
        /// Canonical string, `P(v)`, `I(v)` or `PI(p,q)`.
        #[arg(long)]
        module: String,
    },
    /// The Auslander-Reiten quiver.
    Arquiver(CommonArgs),
    /// Structure-theorem suite on one algebra, or an aggregate over generated algebras.
    Verify {
        #[command(flatten)]
        common: CommonArgs,
        /// Run over randomly generated algebras instead of one input.
        #[arg(long)]
        corpus: bool,
        /// Seed range `a..b` (exclusive), `a..=b` or a single seed.
        #[arg(long, default_value = "0..100")]
        seeds: String,
        /// Generator bounds `vertices,arrows,relation_length`.
        #[arg(long, default_value = "6,8,4")]
        bounds: String,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Text,
    Dot,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Reading {
    Strings,
    Reduced,
}

impl From<Reading> for WalkReading {
    fn from(r: Reading) -> Self {
        match r {
            Reading::Strings => WalkReading::StringsOnly,
            Reading::Reduced => WalkReading::AllReduced,
        }
    }
}

#[derive(Debug, Clone, Args)]
pub struct CommonArgs {
    /// Presentation file.
    #[arg(value_name = "FILE")]
    pub path: Option<PathBuf>,
    #[arg(long = "file", value_name = "FILE")]
    pub file: Option<PathBuf>,
    /// Built-in presentation, e.g. `a_3_linear` or `self_injective(1,2,3)`.
    #[arg(long)]
    pub preset: Option<String>,
    #[arg(long)]
    pub format: Option<Format>,
    /// Field characteristic.
    #[arg(long = "char")]
    pub characteristic: Option<u32>,
    #[arg(long, value_enum, default_value = "strings")]
    pub walk_reading: Reading,
    /// Dimension cap for submodule enumeration.
    #[arg(long, default_value_t = crate::repmod::DEFAULT_SUB_CAP)]
    pub cap_sub: usize,
    /// Dimension cap for the endomorphism-ring check.
    #[arg(long, default_value_t = crate::repmod::DEFAULT_END_CAP)]
    pub cap_end: usize,
    /// Length cap for the admissibility path search.
    #[arg(long)]
    pub path_cap: Option<usize>,
}

/// Exit code and the two output streams of one invocation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Outcome { code: EXIT_OK, stdout, stderr: String::new() }
    }

    fn with_code(code: i32, stdout: String) -> Self {
        Outcome { code, stdout, stderr: String::new() }
    }
}

fn exit_code(e: &Error) -> i32 {
    match e {
        Error::ConstructionMismatch(_) | Error::Ambiguous(_) => EXIT_DISAGREEMENT,
        _ => EXIT_PRECONDITION,
    }
}

fn failure(e: Error) -> Outcome {
    Outcome {
        code: exit_code(&e),
        stdout: String::new(),
        stderr: format!("error: {e}\n"),
    }
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    match Cli::try_parse_from(args) {
        Ok(cli) => execute(&cli),
        Err(e) => {
            let text = e.render().to_string();
            let code = e.exit_code();
            if code == 0 {
                Outcome::ok(text)
            } else {
                Outcome { code: EXIT_PRECONDITION, stdout: String::new(), stderr: text }
            }
        }
    }
}

pub fn execute(cli: &Cli) -> Outcome {
    let r = match &cli.command {
        Command::Validate(c) => cmd_validate(c),
        Command::Classify(c) => cmd_classify(c),
        Command::Modules(c) => cmd_modules(c),
        Command::Ar { common, module } => cmd_ar(common, module),
        Command::Arquiver(c) => cmd_arquiver(c),
        Command::Verify { common, corpus: true, seeds, bounds } => cmd_verify_corpus(common, seeds, bounds),
        Command::Verify { common, .. } => cmd_verify(common),
    };
    r.unwrap_or_else(failure)
}

fn load(c: &CommonArgs) -> Result<Presentation> {
    let p = match (&c.path, &c.file, &c.preset) {
        (Some(f), None, None) | (None, Some(f), None) => {
            let text = std::fs::read_to_string(f).map_err(|e| Error::Io(format!("{}: {e}", f.display())))?;
            parse_presentation(&text)?
        }
        (None, None, Some(name)) => preset(name)?,
        _ => return Err(Error::InvalidParameters("exactly one of FILE, --file or --preset is required".into())),
    };
    configure(p, c)
}

fn configure(mut p: Presentation, c: &CommonArgs) -> Result<Presentation> {
    if let Some(ch) = c.characteristic {
        p = p.with_characteristic(ch)?;
    }
    if let Some(cap) = c.path_cap {
        p = p.with_path_cap(cap);
    }
    Ok(p)
}

fn format_of(c: &CommonArgs, default: Format, allowed: &[Format]) -> Result<Format> {
    let f = c.format.unwrap_or(default);
    if allowed.contains(&f) {
        Ok(f)
    } else {
        Err(Error::InvalidParameters(format!("format {f:?} is not available for this command").to_lowercase()))
    }
}

fn json_line<T: Serialize>(v: &T) -> String {
    let mut s = serde_json::to_string(v).expect("serializable report");
    s.push('\n');
    s
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

/// Rep-finite special biserial data, or the band that rules it out.
fn string_algebra(p: &Presentation) -> Result<StringAlgebra> {
    let sa = StringAlgebra::special_biserial(p)?;
    if let Some(b) = sa.find_band() {
        return Err(Error::BandExists(b.display(sa.quiver())));
    }
    Ok(sa)
}

#[derive(Serialize)]
struct ValidateJson {
    schema_version: u32,
    admissible: bool,
    nilpotency_bound: usize,
    dimension: usize,
    special_biserial: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    witness: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    band: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    representation_finite: Option<bool>,
}

fn validate_report(p: &Presentation) -> Result<ValidateJson> {
    let v = p.validate_admissible()?;
    let sb = p.is_special_biserial()?;
    let band = if sb.special_biserial {
        let sa = StringAlgebra::special_biserial(p)?;
        Some(sa.find_band().map(|b| b.display(sa.quiver())))
    } else {
        None
    };
    Ok(ValidateJson {
        schema_version: SCHEMA_VERSION,
        admissible: true,
        nilpotency_bound: v.nilpotency_bound,
        dimension: v.dimension,
        special_biserial: sb.special_biserial,
        witness: sb.witness,
        band: band.clone().flatten(),
        representation_finite: band.as_ref().map(Option::is_none),
    })
}

/// Admissibility, special biserialness and band search as one JSON object.
pub fn validate_json(p: &Presentation) -> Result<String> {
    Ok(serde_json::to_string(&validate_report(p)?).expect("serializable report"))
}

/// The classification report printed by `classify --format json`.
pub fn classify_json(p: &Presentation, reading: WalkReading) -> Result<String> {
    Ok(serde_json::to_string(&classify_report(p, reading)?).expect("serializable report"))
}

/// The listing printed by `modules --format json`.
pub fn modules_json(p: &Presentation, cap_sub: usize, cap_end: usize) -> Result<String> {
    Ok(serde_json::to_string(&modules_report(p, cap_sub, cap_end)?).expect("serializable report"))
}

fn cmd_validate(c: &CommonArgs) -> Result<Outcome> {
    let fmt = format_of(c, Format::Text, &[Format::Text, Format::Json])?;
    let p = load(c)?;
    let report = validate_report(&p)?;
    if fmt == Format::Json {
        return Ok(Outcome::ok(json_line(&report)));
    }
    let mut s = format!("admissible N={}; special biserial: ", report.nilpotency_bound);
    match (&report.band, report.representation_finite) {
        (Some(b), _) => {
            let _ = write!(s, "yes; band: {b}; representation-infinite");
        }
        (None, Some(_)) => s.push_str("yes; representation-finite"),
        (None, None) => {
            s.push_str("no");
            if let Some(w) = &report.witness {
                let _ = write!(s, " ({w})");
            }
        }
    }
    s.push('\n');
    Ok(Outcome::ok(s))
}

#[derive(Serialize)]
struct ClassifyJson {
    index: NakayamaIndex,
    schema_version: u32,
    route: Route,
    witnesses: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    t5: Option<T5Report>,
    #[serde(skip_serializing_if = "Option::is_none")]
    agree: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    structure_suite: Option<SuiteReport>,
}

fn classify_report(p: &Presentation, reading: WalkReading) -> Result<ClassifyJson> {
    let sa = StringAlgebra::special_biserial(p)?;
    if let Some(b) = sa.find_band() {
        return Ok(ClassifyJson {
            index: NakayamaIndex::Infinite,
            schema_version: SCHEMA_VERSION,
            route: Route::ModuleLevel,
            witnesses: vec![b.display(sa.quiver())],
            t5: None,
            agree: None,
            structure_suite: None,
        });
    }
    let mods = indecomposables_in(&sa)?;
    let v = verdict_from(&mods);
    let t5 = check_t5_in(&sa, reading);
    let right4 = v.index == NakayamaIndex::Finite(4);
    let agree = right4 == t5.verdict;
    if !agree {
        log::warn!("classifier disagreement: module index {}, walk conditions {}", v.index, t5.verdict);
    }
    Ok(ClassifyJson {
        index: v.index,
        schema_version: SCHEMA_VERSION,
        route: if agree { Route::Both } else { v.route },
        witnesses: v.witnesses,
        t5: Some(t5),
        agree: Some(agree),
        structure_suite: right4.then(|| structure_suite(&mods)),
    })
}

fn t5_text(t: &T5Report) -> String {
    let conds = [
        ("i", &t.i),
        ("ii", &t.ii),
        ("iii", &t.iii),
        ("iv_a", &t.iv_a),
        ("iv_b", &t.iv_b),
        ("iv_c", &t.iv_c),
    ];
    let mut s = String::new();
    for (name, c) in conds {
        let _ = write!(s, "  {name}: {}", yes_no(c.holds));
        if let Some(w) = &c.witness {
            let _ = write!(s, " ({w})");
        }
        s.push('\n');
    }
    let _ = writeln!(s, "  verdict: {}", if t.verdict { "right 4-Nakayama" } else { "not right 4-Nakayama" });
    s
}

fn cmd_classify(c: &CommonArgs) -> Result<Outcome> {
    let fmt = format_of(c, Format::Json, &[Format::Text, Format::Json])?;
    let p = load(c)?;
    let r = classify_report(&p, c.walk_reading.into())?;
    let code = if r.agree == Some(false) { EXIT_DISAGREEMENT } else { EXIT_OK };
    if fmt == Format::Json {
        return Ok(Outcome::with_code(code, json_line(&r)));
    }
    let mut s = format!("index: {}\n", r.index);
    for w in &r.witnesses {
        let _ = writeln!(s, "witness: {w}");
    }
    if let Some(t) = &r.t5 {
        s.push_str("walk conditions:\n");
        s.push_str(&t5_text(t));
    }
    if let Some(a) = r.agree {
        let _ = writeln!(s, "classifiers agree: {}", yes_no(a));
    }
    if let Some(suite) = &r.structure_suite {
        let _ = writeln!(s, "structure suite: {}", if suite.passed { "passed" } else { "failed" });
    }
    Ok(Outcome::with_code(code, s))
}

#[derive(Serialize)]
struct ModuleJson {
    label: String,
    dims: BTreeMap<String, usize>,
    projective: bool,
    degree: DegreeReport,
    /// `None` when the dimension exceeds `--cap-end`.
    end_local: Option<bool>,
    /// `None` when the dimension exceeds `--cap-sub`.
    uniserial_lattice: Option<bool>,
}

#[derive(Serialize)]
struct ModulesJson {
    schema_version: u32,
    count: usize,
    modules: Vec<ModuleJson>,
}

fn capped(r: Result<bool>) -> Result<Option<bool>> {
    match r {
        Ok(b) => Ok(Some(b)),
        Err(Error::CapExceeded { .. }) => Ok(None),
        Err(e) => Err(e),
    }
}

fn dims_map(m: &Rep) -> BTreeMap<String, usize> {
    let q = m.quiver();
    (0..q.vertex_count()).map(|v| (q.vertex_name(v).to_string(), m.dim(v))).collect()
}

fn modules_report(p: &Presentation, cap_sub: usize, cap_end: usize) -> Result<ModulesJson> {
    let sa = string_algebra(p)?;
    let mods = indecomposables_in(&sa)?;
    let mut out = Vec::with_capacity(mods.len());
    for m in &mods {
        out.push(ModuleJson {
            label: m.label.clone(),
            dims: dims_map(&m.rep),
            projective: m.projective,
            degree: m.degree.clone(),
            end_local: capped(is_indecomposable_capped(&m.rep, cap_end))?,
            uniserial_lattice: capped(lattice_is_chain(&m.rep, cap_sub))?,
        });
    }
    Ok(ModulesJson {
        schema_version: SCHEMA_VERSION,
        count: out.len(),
        modules: out,
    })
}

fn cmd_modules(c: &CommonArgs) -> Result<Outcome> {
    let fmt = format_of(c, Format::Text, &[Format::Text, Format::Json])?;
    let p = load(c)?;
    let report = modules_report(&p, c.cap_sub, c.cap_end)?;
    if fmt == Format::Json {
        return Ok(Outcome::ok(json_line(&report)));
    }
    let out = report.modules;
    let mut degrees: BTreeMap<usize, usize> = BTreeMap::new();
    let mut s = String::new();
    for m in &out {
        *degrees.entry(m.degree.degree).or_default() += 1;
        let dims: Vec<String> = m.dims.values().map(usize::to_string).collect();
        let _ = writeln!(
            s,
            "{}\tdims={}\tdegree={}\tlength={}\tloewy={}{}",
            m.label,
            dims.join(","),
            m.degree.degree,
            m.degree.length,
            m.degree.loewy_length,
            if m.projective { "\tprojective" } else { "" }
        );
    }
    let hist: Vec<String> = degrees.iter().map(|(d, k)| format!("{d}x{k}")).collect();
    let _ = writeln!(s, "{} modules; degrees: {}", out.len(), hist.join(", "));
    Ok(Outcome::ok(s))
}

/// Resolves a selector: canonical string, `P(v)`, `I(v)` or `PI(p,q)`.
pub fn select_module(p: &Presentation, selector: &str) -> Result<Rep> {
    let sel = selector.trim();
    let q = p.quiver();
    let vertex = |inner: &str| {
        q.vertex_id(inner.trim())
            .ok_or_else(|| Error::UnknownVertex(inner.trim().to_string()))
    };
    if sel.starts_with("PI(") {
        let sa = StringAlgebra::special_biserial(p)?;
        let compact: String = sel.chars().filter(|c| !c.is_whitespace()).collect();
        let pair = sa
            .pairs()
            .iter()
            .find(|pr| pr.display(q).chars().filter(|c| !c.is_whitespace()).collect::<String>() == compact)
            .ok_or_else(|| Error::UnknownModule(sel.to_string()))?;
        return crate::repmod::biserial_pi(p, pair);
    }
    if let Some(inner) = sel.strip_prefix("P(").and_then(|s| s.strip_suffix(')')) {
        return projective(p, vertex(inner)?);
    }
    if let Some(inner) = sel.strip_prefix("I(").and_then(|s| s.strip_suffix(')')) {
        return injective(p, vertex(inner)?);
    }
    let w = StringWord::parse(q, sel)?;
    string_module(p, &w)
}

#[derive(Serialize)]
struct ArJson {
    schema_version: u32,
    module: String,
    route: &'static str,
    labels: ArLabels,
    sequence: ARSequenceJson,
    verification: VerificationReport,
}

#[derive(Serialize)]
struct ArLabels {
    left: String,
    middle: Vec<String>,
    right: String,
}

fn label_of(mods: &[Indecomposable], m: &Rep) -> String {
    mods.iter()
        .find(|x| isomorphic_unbounded(&x.rep, m))
        .map_or_else(|| "?".to_string(), |x| x.label.clone())
}

fn cmd_ar(c: &CommonArgs, selector: &str) -> Result<Outcome> {
    let fmt = format_of(c, Format::Json, &[Format::Text, Format::Json])?;
    let p = load(c)?;
    let sa = string_algebra(&p)?;
    let m = select_module(&p, selector)?;
    let (route, seq, report): (&'static str, ARSequence, VerificationReport) = match T4Context::new(&p) {
        Ok(ctx) => {
            let seq = ctx.sequence(&m)?;
            let r = ctx.verify(&seq);
            ("t4", seq, r)
        }
        Err(Error::NotRight4(_)) => {
            let seq = almost_split_sequence_oracle(&p, &m)?;
            let r = almost_split_verify(&p, &seq)?;
            ("oracle", seq, r)
        }
        Err(e) => return Err(e),
    };
    let mods = indecomposables_in(&sa)?;
    let labels = ArLabels {
        left: label_of(&mods, &seq.left),
        middle: seq.middle.iter().map(|x| label_of(&mods, x)).collect(),
        right: label_of(&mods, &seq.right),
    };
    let code = if report.passed() { EXIT_OK } else { EXIT_DISAGREEMENT };
    if fmt == Format::Json {
        let out = ArJson {
            schema_version: SCHEMA_VERSION,
            module: labels.right.clone(),
            route,
            labels,
            sequence: seq.to_json(),
            verification: report,
        };
        return Ok(Outcome::with_code(code, json_line(&out)));
    }
    let mut s = format!(
        "0 -> {} -> {} -> {} -> 0\n",
        labels.left,
        labels.middle.join(" + "),
        labels.right
    );
    let _ = writeln!(s, "route: {route}; case: {}; ambient: {}", seq.case_tag, seq.ambient);
    let _ = writeln!(
        s,
        "exact: {}; non-split: {}; translate: {}; oracle middle: {}; right almost split: {}",
        yes_no(report.exact),
        yes_no(report.non_split),
        yes_no(report.tau_matches),
        yes_no(report.oracle_middle),
        yes_no(report.right_almost_split)
    );
    for n in &report.notes {
        let _ = writeln!(s, "note: {n}");
    }
    Ok(Outcome::with_code(code, s))
}

fn cmd_arquiver(c: &CommonArgs) -> Result<Outcome> {
    let fmt = format_of(c, Format::Dot, &[Format::Dot, Format::Json, Format::Text])?;
    let p = load(c)?;
    let g = ar_quiver(&p)?;
    let s = match fmt {
        Format::Dot => export_dot(&g),
        Format::Json => {
            #[derive(Serialize)]
            struct Wrapped<'a> {
                schema_version: u32,
                #[serde(flatten)]
                quiver: &'a crate::arquiver::ArQuiver,
            }
            json_line(&Wrapped { schema_version: SCHEMA_VERSION, quiver: &g })
        }
        Format::Text => {
            let mut s = String::new();
            for (a, b) in &g.arrows {
                let _ = writeln!(s, "{a} -> {b}");
            }
            for (m, t) in &g.translates {
                let _ = writeln!(s, "tau {m} = {t}");
            }
            s
        }
    };
    Ok(Outcome::ok(s))
}

#[derive(Serialize)]
struct VerifyJson {
    schema_version: u32,
    #[serde(flatten)]
    suite: SuiteReport,
}

fn cmd_verify(c: &CommonArgs) -> Result<Outcome> {
    let fmt = format_of(c, Format::Json, &[Format::Text, Format::Json])?;
    let p = load(c)?;
    let suite = crate::nakayama::verify_structure_theorems(&p)?;
    let code = if suite.passed { EXIT_OK } else { EXIT_DISAGREEMENT };
    if fmt == Format::Json {
        return Ok(Outcome::with_code(code, json_line(&VerifyJson { schema_version: SCHEMA_VERSION, suite })));
    }
    let mut s = format!("{} modules\n", suite.modules);
    for (name, r) in &suite.checks {
        let _ = write!(s, "{name}: {} checked, {} failed", r.checked, r.failures.len());
        if !r.failures.is_empty() {
            let _ = write!(s, " ({})", r.failures.join(", "));
        }
        s.push('\n');
    }
    let _ = writeln!(s, "{}", if suite.passed { "passed" } else { "failed" });
    Ok(Outcome::with_code(code, s))
}

/// Parses `a..b`, `a..=b` or `a`.
pub fn parse_seeds(text: &str) -> Result<std::ops::Range<u64>> {
    let bad = || Error::InvalidParameters(format!("bad seed range `{text}`"));
    let num = |s: &str| s.trim().parse::<u64>().map_err(|_| bad());
    if let Some((a, b)) = text.split_once("..=") {
        return Ok(num(a)?..num(b)?.checked_add(1).ok_or_else(bad)?);
    }
    if let Some((a, b)) = text.split_once("..") {
        return Ok(num(a)?..num(b)?);
    }
    let a = num(text)?;
    Ok(a..a + 1)
}

fn parse_bounds(text: &str) -> Result<(usize, usize, usize)> {
    let bad = || Error::InvalidParameters(format!("bad bounds `{text}`"));
    let parts: Vec<usize> = text
        .split(',')
        .map(|s| s.trim().parse().map_err(|_| bad()))
        .collect::<Result<_>>()?;
    match parts[..] {
        [v, a, l] => Ok((v, a, l)),
        _ => Err(bad()),
    }
}

/// Applies `f` to every item on a small thread pool, keeping input order.
pub(crate) fn par_map<T: Sync, R: Send>(items: &[T], f: impl Fn(&T) -> R + Sync) -> Vec<R> {
    let workers = std::thread::available_parallelism().map_or(1, |n| n.get()).min(items.len().max(1));
    let next = AtomicUsize::new(0);
    let slots: Mutex<Vec<Option<R>>> = Mutex::new((0..items.len()).map(|_| None).collect());
    std::thread::scope(|s| {
        for _ in 0..workers {
            s.spawn(|| loop {
                let i = next.fetch_add(1, Ordering::Relaxed);
                if i >= items.len() {
                    break;
                }
                let r = f(&items[i]);
                slots.lock().expect("no poisoned workers")[i] = Some(r);
            });
        }
    });
    slots
        .into_inner()
        .expect("no poisoned workers")
        .into_iter()
        .map(|r| r.expect("every slot filled"))
        .collect()
}

#[derive(Debug, Default, Serialize)]
struct SeedOutcome {
    generated: bool,
    finite: bool,
    right4: bool,
    disagreement: bool,
    suite_failures: Vec<String>,
    sequences: usize,
    sequence_failures: Vec<String>,
    error: Option<String>,
}

fn check_seed(seed: u64, bounds: (usize, usize, usize), c: &CommonArgs) -> SeedOutcome {
    let mut o = SeedOutcome::default();
    let p = match random_special_biserial(&CorpusSpec::new(seed, bounds)).and_then(|p| configure(p, c)) {
        Ok(p) => p,
        Err(e) => {
            o.error = Some(e.to_string());
            return o;
        }
    };
    o.generated = true;
    let r = match classify_report(&p, c.walk_reading.into()) {
        Ok(r) => r,
        Err(e) => {
            o.error = Some(e.to_string());
            return o;
        }
    };
    o.finite = r.index != NakayamaIndex::Infinite;
    o.disagreement = r.agree == Some(false);
    o.right4 = r.index == NakayamaIndex::Finite(4);
    if let Some(s) = &r.structure_suite {
        for (name, ch) in &s.checks {
            o.suite_failures.extend(ch.failures.iter().map(|f| format!("{name}: {f}")));
        }
    }
    if o.right4 {
        match T4Context::new(&p) {
            Ok(ctx) => {
                for m in ctx.indecomposables().iter().filter(|m| !m.projective) {
                    o.sequences += 1;
                    match ctx.sequence(&m.rep) {
                        Ok(seq) => {
                            let v = ctx.verify(&seq);
                            if !v.passed() || !v.oracle_middle {
                                o.sequence_failures.push(format!("{} ({})", m.label, seq.case_tag));
                            }
                        }
                        Err(e) => o.sequence_failures.push(format!("{}: {e}", m.label)),
                    }
                }
            }
            Err(e) => o.error = Some(e.to_string()),
        }
    }
    o
}

#[derive(Serialize)]
struct CorpusJson {
    schema_version: u32,
    seeds: String,
    bounds: [usize; 3],
    attempted: usize,
    generated: usize,
    representation_finite: usize,
    right4: usize,
    classifier_disagreements: Vec<u64>,
    suite_failures: BTreeMap<u64, Vec<String>>,
    sequences_checked: usize,
    sequence_failures: BTreeMap<u64, Vec<String>>,
    errors: BTreeMap<u64, String>,
    passed: bool,
}

fn cmd_verify_corpus(c: &CommonArgs, seeds: &str, bounds: &str) -> Result<Outcome> {
    let fmt = format_of(c, Format::Json, &[Format::Text, Format::Json])?;
    if c.path.is_some() || c.file.is_some() || c.preset.is_some() {
        return Err(Error::InvalidParameters("--corpus takes no input file or preset".into()));
    }
    let range = parse_seeds(seeds)?;
    let b = parse_bounds(bounds)?;
    CorpusSpec::new(range.start, b).check()?;
    let list: Vec<u64> = range.collect();
    let results = par_map(&list, |&s| check_seed(s, b, c));
    let mut rep = CorpusJson {
        schema_version: SCHEMA_VERSION,
        seeds: seeds.to_string(),
        bounds: [b.0, b.1, b.2],
        attempted: list.len(),
        generated: 0,
        representation_finite: 0,
        right4: 0,
        classifier_disagreements: Vec::new(),
        suite_failures: BTreeMap::new(),
        sequences_checked: 0,
        sequence_failures: BTreeMap::new(),
        errors: BTreeMap::new(),
        passed: true,
    };
    for (&seed, o) in list.iter().zip(results) {
        rep.generated += usize::from(o.generated);
        rep.representation_finite += usize::from(o.finite);
        rep.right4 += usize::from(o.right4);
        rep.sequences_checked += o.sequences;
        if o.disagreement {
            rep.classifier_disagreements.push(seed);
        }
        if !o.suite_failures.is_empty() {
            rep.suite_failures.insert(seed, o.suite_failures);
        }
        if !o.sequence_failures.is_empty() {
            rep.sequence_failures.insert(seed, o.sequence_failures);
        }
        if let Some(e) = o.error {
            if o.generated {
                rep.errors.insert(seed, e);
            }
        }
    }
    rep.passed = rep.classifier_disagreements.is_empty()
        && rep.suite_failures.is_empty()
        && rep.sequence_failures.is_empty()
        && rep.errors.is_empty();
    let code = if rep.passed { EXIT_OK } else { EXIT_DISAGREEMENT };
    if fmt == Format::Json {
        return Ok(Outcome::with_code(code, json_line(&rep)));
    }
    let mut s = format!(
        "seeds {}: {} generated, {} representation-finite, {} right 4-Nakayama\n",
        rep.seeds, rep.generated, rep.representation_finite, rep.right4
    );
    let _ = writeln!(s, "classifier disagreements: {}", rep.classifier_disagreements.len());
    let _ = writeln!(s, "structure suite failures: {}", rep.suite_failures.len());
    let _ = writeln!(
        s,
        "almost split sequences: {} checked, {} algebras with failures",
        rep.sequences_checked,
        rep.sequence_failures.len()
    );
    let _ = writeln!(s, "{}", if rep.passed { "passed" } else { "failed" });
    Ok(Outcome::with_code(code, s))
}
