//! Command-line front end. Every command prints one JSON document; the
//! process exits 0 iff the report passes.

use crate::error::Error;
use crate::realization::{
    osp12_in, r_m_adjoint, realize, verify_nilpot_identity, Decomposition, Model, DEFAULT_CAP,
};
use crate::rootsys::checks::suite;
use crate::rootsys::{enumerate, AlgebraType, Family, RootSystemView, Window};
use crate::shadow::{
    build_parabolic, build_zeta, check_axioms, inject_case4, inject_close_violation,
    synth_labeling, verify_zeta, SynthKind,
};
use clap::{Args, Parser, Subcommand, ValueEnum};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use serde_json::{json, Value};
use std::path::PathBuf;
use std::time::Instant;

#[derive(Debug, Parser)]
#[command(
    name = "affroots",
    version,
    about = "Root systems and matrix models of twisted affine superalgebras"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Export the roots with |d| ≤ N.
    Enumerate(Common),
    /// Run the root-system invariant suite.
    Verify {
        #[command(flatten)]
        common: Common,
        /// Drop one root from the enumeration before checking.
        #[arg(long, hide = true)]
        corrupt: bool,
    },
    /// Axioms, ζ and parabolic checks on synthetic shadow labelings.
    Shadow {
        #[command(flatten)]
        common: Common,
        #[arg(long, value_enum, default_value_t = KindArg::AllUp)]
        kind: KindArg,
        #[arg(long, default_value_t = 10)]
        seeds: u64,
        #[arg(long, value_enum)]
        inject: Option<Inject>,
    },
    /// Build the matrix model and cross-check it against the roots.
    Realize {
        #[command(flatten)]
        common: Common,
        #[arg(long, default_value_t = 200)]
        trials: usize,
        /// Largest k+l accepted.
        #[arg(long, default_value_t = DEFAULT_CAP)]
        cap: usize,
    },
}

#[derive(Debug, Clone, Args, Serialize)]
pub struct Common {
    #[arg(long = "type", value_enum, default_value_t = TypeArg::AEvenOdd)]
    #[serde(rename = "type")]
    pub ty: TypeArg,
    #[arg(long, default_value_t = 1)]
    pub k: usize,
    #[arg(long, default_value_t = 1)]
    pub l: usize,
    #[arg(long, default_value_t = 8)]
    pub window: i64,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
pub enum TypeArg {
    #[value(name = "A-2k-2l-1-tw2")]
    #[serde(rename = "A-2k-2l-1-tw2")]
    AEvenOdd,
    #[value(name = "A-2k-1-2l-1-tw2")]
    #[serde(rename = "A-2k-1-2l-1-tw2")]
    AOddOdd,
    #[value(name = "A-2k-2l-tw4")]
    #[serde(rename = "A-2k-2l-tw4")]
    AEvenEven,
    #[value(name = "D-tw2")]
    #[serde(rename = "D-tw2")]
    D,
}

impl TypeArg {
    pub fn family(self) -> Family {
        match self {
            TypeArg::AEvenOdd => Family::AEvenOdd,
            TypeArg::AOddOdd => Family::AOddOdd,
            TypeArg::AEvenEven => Family::AEvenEven,
            TypeArg::D => Family::D,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum KindArg {
    AllUp,
    AllDown,
    MixedTight,
}

impl KindArg {
    fn synth(self) -> SynthKind {
        match self {
            KindArg::AllUp => SynthKind::AllUp,
            KindArg::AllDown => SynthKind::AllDown,
            KindArg::MixedTight => SynthKind::MixedTight,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Inject {
    Case4,
    Close,
}

/// One named check.
#[derive(Debug, Clone, Serialize)]
pub struct Item {
    pub name: String,
    pub passed: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub skipped: Option<String>,
    pub millis: f64,
}

impl Item {
    fn new(name: impl Into<String>, witness: Option<String>, millis: f64) -> Self {
        Item {
            name: name.into(),
            passed: witness.is_none(),
            witness,
            skipped: None,
            millis,
        }
    }

    fn skip(name: impl Into<String>, reason: &str) -> Self {
        Item {
            name: name.into(),
            passed: true,
            witness: None,
            skipped: Some(reason.into()),
            millis: 0.0,
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct Report {
    pub command: String,
    pub config: Value,
    pub status: &'static str,
    pub items: Vec<Item>,
    #[serde(skip_serializing_if = "Value::is_null")]
    pub summary: Value,
    pub millis: f64,
}

impl Report {
    fn new(command: &str, config: Value, items: Vec<Item>, summary: Value, start: Instant) -> Self {
        let status = if items.iter().all(|i| i.passed) {
            "pass"
        } else {
            "fail"
        };
        Report {
            command: command.into(),
            config,
            status,
            items,
            summary,
            millis: ms(start),
        }
    }

    pub fn passed(&self) -> bool {
        self.status == "pass"
    }
}

/// What a run produced: the JSON text, whether it passed, and where it goes.
#[derive(Debug)]
pub struct Outcome {
    pub json: String,
    pub passed: bool,
    pub out: Option<PathBuf>,
}

/// A problem with the arguments rather than with the mathematics.
#[derive(Debug)]
pub struct UsageError(pub String);

fn ms(t: Instant) -> f64 {
    t.elapsed().as_secs_f64() * 1e3
}

fn algebra(c: &Common) -> Result<(AlgebraType, Window), UsageError> {
    if c.window < 0 {
        return Err(UsageError("window must be nonnegative".into()));
    }
    let ty = AlgebraType::new(c.ty.family(), c.k, c.l).map_err(|e| UsageError(e.to_string()))?;
    Ok((ty, Window::new(c.window)))
}

fn config(c: &Common, extra: Value) -> Value {
    let mut v = serde_json::to_value(c).expect("config serializes");
    v.as_object_mut().unwrap().remove("out");
    if let (Some(o), Value::Object(e)) = (v.as_object_mut(), extra) {
        o.extend(e);
    }
    v
}

#[derive(Serialize)]
struct RootRecord<'a> {
    delta: i64,
    eps: &'a [i64],
    del: &'a [i64],
    class: &'static str,
    parity: &'static str,
}

#[derive(Serialize)]
struct RootList<'a> {
    #[serde(rename = "type")]
    ty: TypeArg,
    k: usize,
    l: usize,
    window: i64,
    roots: Vec<RootRecord<'a>>,
}

/// The root-list document for a view.
pub fn root_list_json(arg: TypeArg, view: &RootSystemView) -> String {
    let roots = view
        .entries
        .iter()
        .map(|e| RootRecord {
            delta: e.root.d,
            eps: &e.root.e,
            del: &e.root.f,
            class: e.class.tag(),
            parity: e.parity.tag(),
        })
        .collect();
    let doc = RootList {
        ty: arg,
        k: view.ty.k,
        l: view.ty.l,
        window: view.window.n,
        roots,
    };
    serde_json::to_string_pretty(&doc).expect("root list serializes")
}

pub fn run_enumerate(c: &Common) -> Result<Outcome, UsageError> {
    let (ty, w) = algebra(c)?;
    let json = root_list_json(c.ty, &enumerate(&ty, w));
    Ok(Outcome {
        json,
        passed: true,
        out: c.out.clone(),
    })
}

pub fn run_verify(c: &Common, corrupt: bool) -> Result<Report, UsageError> {
    let start = Instant::now();
    let (ty, w) = algebra(c)?;
    let mut view = enumerate(&ty, w);
    if corrupt {
        if let Some(i) = view
            .entries
            .iter()
            .position(|e| e.root.d == 1 && !e.root.is_zero())
        {
            view.entries.remove(i);
        }
    }
    let items = suite(&view)
        .into_iter()
        .map(|(chk, t)| Item::new(chk.name, chk.witness, t.as_secs_f64() * 1e3))
        .collect();
    Ok(Report::new(
        "verify",
        config(c, json!({ "corrupt": corrupt })),
        items,
        Value::Null,
        start,
    ))
}

pub fn run_shadow(
    c: &Common,
    kind: KindArg,
    seeds: u64,
    inject: Option<Inject>,
) -> Result<Report, UsageError> {
    let start = Instant::now();
    let (ty, w) = algebra(c)?;
    let mut items = vec![];
    let mut passed_seeds = 0u64;
    for seed in c.seed..c.seed + seeds {
        let before = items.len();
        let mut lab = synth_labeling(&ty, seed, kind.synth());
        let mut expect = None;
        match inject {
            Some(Inject::Case4) => {
                let (bad, _) = inject_case4(&lab);
                lab = bad;
                expect = Some(crate::shadow::Axiom::Case4);
            }
            Some(Inject::Close) => match inject_close_violation(&lab, w) {
                Some((bad, _, _)) => {
                    lab = bad;
                    expect = Some(crate::shadow::Axiom::CloseSum);
                }
                None => items.push(Item::new(
                    format!("seed {seed}: inject"),
                    Some("no close(i) site in window".into()),
                    0.0,
                )),
            },
            None => {}
        }
        let t = Instant::now();
        let rep = check_axioms(&lab, w);
        if let Some(ax) = expect {
            // the injected fault must surface as its own axiom
            let witness = match rep.first(ax) {
                Some(v) => v.to_string(),
                None => format!("{ax:?} not detected"),
            };
            items.push(Item::new(
                format!("seed {seed}: axioms"),
                Some(witness),
                ms(t),
            ));
            continue;
        }
        items.push(Item::new(
            format!("seed {seed}: axioms"),
            rep.violations.first().map(|v| v.to_string()),
            ms(t),
        ));
        let t = Instant::now();
        items.push(Item::new(
            format!("seed {seed}: pattern round-trip"),
            lab.roundtrip_witness(w),
            ms(t),
        ));
        if kind == KindArg::MixedTight {
            items.push(Item::skip(format!("seed {seed}: zeta"), "tight"));
        } else {
            let t = Instant::now();
            match build_zeta(&lab) {
                Ok(z) => {
                    let bad = verify_zeta(&lab, &z, w)
                        .into_iter()
                        .find_map(|ch| ch.witness.map(|x| format!("{}: {x}", ch.name)));
                    items.push(Item::new(
                        format!("seed {seed}: zeta case {}", z.case.number()),
                        bad,
                        ms(t),
                    ));
                }
                Err(e) => items.push(Item::new(
                    format!("seed {seed}: zeta"),
                    Some(e.to_string()),
                    ms(t),
                )),
            }
            for i in 1..=2 {
                let t = Instant::now();
                let witness = match build_parabolic(&lab, i, w) {
                    Ok(p) => {
                        let ok = p.passed();
                        p.witness.filter(|_| !ok)
                    }
                    Err(e) => Some(e.to_string()),
                };
                items.push(Item::new(format!("seed {seed}: P{i}"), witness, ms(t)));
            }
        }
        if items[before..].iter().all(|i| i.passed) {
            passed_seeds += 1;
        }
    }
    let cfg = config(c, json!({ "kind": kind, "seeds": seeds, "inject": inject }));
    let summary = json!({ "seeds_passed": passed_seeds, "seeds": seeds });
    Ok(Report::new("shadow", cfg, items, summary, start))
}

fn nilpot_items(model: &Model, seed: u64, pairs: usize) -> Item {
    let t = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut witness = None;
    for _ in 0..pairs {
        let ox = rng.gen_bool(0.5);
        let x = model.random_element(&mut rng, ox);
        let y = model.random_element(&mut rng, true);
        if y.is_zero() {
            continue;
        }
        match verify_nilpot_identity(&x, &y, 3) {
            Ok(r) if r.passed() => {}
            Ok(r) => {
                witness = r.failures.into_iter().next();
                break;
            }
            Err(e) => {
                witness = Some(e.to_string());
                break;
            }
        }
    }
    Item::new("nilpotent-identity", witness, ms(t))
}

pub fn run_realize(c: &Common, trials: usize, cap: usize) -> Result<Report, UsageError> {
    let start = Instant::now();
    let (ty, w) = algebra(c)?;
    let rep = match realize(&ty, w, trials, c.seed, cap) {
        Err(e @ Error::SizeCap(..)) => return Err(UsageError(format!("refused: {e}"))),
        Err(e) => return Err(UsageError(e.to_string())),
        Ok(r) => r,
    };
    let mut items: Vec<Item> = rep
        .checks
        .iter()
        .map(|ch| Item::new(&ch.name, ch.witness.clone(), ch.millis))
        .collect();
    let model = Model::with_cap(&ty, cap).map_err(|e| UsageError(e.to_string()))?;
    items.push(nilpot_items(&model, c.seed, 20));
    let t = Instant::now();
    let dec = Decomposition::new(model).map_err(|e| UsageError(e.to_string()))?;
    match osp12_in(&dec) {
        Ok(o) => {
            for m in 1..=3 {
                let r = r_m_adjoint(&o, m);
                let witness = (!r.passed)
                    .then(|| format!("r_{m} at nu(h)={} expected {}", r.nu_h, r.expected));
                items.push(Item::new(format!("r_{m}"), witness, ms(t)));
            }
        }
        Err(_) => items.push(Item::skip("r_m", "no odd root with nonzero double")),
    }
    let cfg = config(c, json!({ "trials": trials, "cap": cap }));
    let summary = json!({
        "algebra": rep.algebra,
        "model": rep.model,
        "dim": rep.dim,
        "order": rep.order,
        "expected_order": rep.expected_order,
        "weights": rep.weights,
    });
    Ok(Report::new("realize", cfg, items, summary, start))
}

/// Run a parsed command line.
pub fn run(cli: Cli) -> Result<Outcome, UsageError> {
    let (report, out) = match cli.command {
        Command::Enumerate(c) => return run_enumerate(&c),
        Command::Verify { common, corrupt } => (run_verify(&common, corrupt)?, common.out),
        Command::Shadow {
            common,
            kind,
            seeds,
            inject,
        } => (run_shadow(&common, kind, seeds, inject)?, common.out),
        Command::Realize {
            common,
            trials,
            cap,
        } => (run_realize(&common, trials, cap)?, common.out),
    };
    let json = serde_json::to_string_pretty(&report).expect("report serializes");
    Ok(Outcome {
        json,
        passed: report.passed(),
        out,
    })
}

/// Parse and run; clap errors become usage errors.
pub fn run_from<I, T>(args: I) -> Result<Outcome, UsageError>
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = Cli::try_parse_from(args).map_err(|e| UsageError(e.to_string()))?;
    run(cli)
}

/// Timing fields vary between runs; strip them for comparisons.
pub fn without_timing(v: &mut Value) {
    match v {
        Value::Object(m) => {
            m.remove("millis");
            m.values_mut().for_each(without_timing);
        }
        Value::Array(a) => a.iter_mut().for_each(without_timing),
        _ => {}
    }
}
