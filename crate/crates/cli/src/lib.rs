//! The `peaklab` command line: permutation statistics, order polynomials,
//! idempotents, structure constants, quasisymmetric expansions and the
//! theorem registry, all printed as JSON.
//!
//! Exit status: 0 pass, 1 a checked claim failed, 2 usage, 3 resource limit.

pub mod error;
pub mod registry;

use std::collections::BTreeMap;

use clap::{Args, Parser, Subcommand};
use peaklab_algebra::{
    classes, idempotents, multiplicative_closure, structure_constants, ClassFamily, GAElem, Group, StructureFamily,
};
use peaklab_order::{
    enriched_gf, identity_check_43, order_polynomial, peak_polynomial, Identity43, OrderPolyKind, PeakPolyKind,
};
use peaklab_perm::stats::{
    cyclic_descent_set, descent_set, peak_set, sign_stat, signed_cyclic_descent_set, signed_descent_set,
    signed_peak_set, PeakKind,
};
use peaklab_perm::{AnyPermutation, GroupKind, StatResult};
use peaklab_qsym::{delta_expansion, gamma_expansion, ExpansionBasis, Flavor};
use serde::Serialize;
use serde_json::{json, Value};

pub use error::CliError;
pub use registry::{lookup, registry, Entry, Expectation, Outcome};

/// Environment variable that replaces both default size limits.
pub const MAX_N_ENV: &str = "PEAKLAB_MAX_N";
pub const DEFAULT_MAX_S: usize = 6;
pub const DEFAULT_MAX_B: usize = 4;

#[derive(Parser, Debug)]
#[command(name = "peaklab", version, about = "Descent and peak algebras of S_n and B_n, computed exactly")]
struct Cli {
    /// Ignore the size limits on n.
    #[arg(long, global = true)]
    force: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Descent, cyclic descent, peak and sign statistics of one permutation.
    Stats {
        perm: String,
        /// Read the permutation as signed even without negative entries.
        #[arg(long)]
        signed: bool,
    },
    /// Order polynomial of a chain, or its generating function.
    OrderPoly {
        #[arg(long)]
        kind: String,
        perm: String,
        #[arg(long)]
        gf: bool,
        #[arg(long)]
        signed: bool,
    },
    /// Orthogonal idempotents of a structure polynomial family.
    Idempotents {
        #[arg(long)]
        family: String,
        #[arg(short)]
        n: usize,
    },
    /// Check registered claims.
    Verify(VerifyArgs),
    /// Class structure constants N^K_{I,J}.
    StructureConstants {
        #[arg(long)]
        family: String,
        #[arg(short)]
        n: usize,
    },
    /// Quasisymmetric expansions.
    Qsym {
        #[command(subcommand)]
        command: QsymCommand,
    },
    /// Eulerian and peak polynomials with the identities relating them.
    PeakTable {
        #[arg(short)]
        n: usize,
    },
    /// Multiplicative closure of the span of a class family.
    Closure {
        #[arg(long)]
        family: String,
        #[arg(short)]
        n: usize,
    },
}

#[derive(Args, Debug)]
#[group(skip)]
struct VerifyArgs {
    #[arg(long, conflicts_with_all = ["all", "list"], required_unless_present_any = ["all", "list"])]
    theorem: Option<String>,
    /// Every registered claim that is stated for this n.
    #[arg(long, conflicts_with = "list")]
    all: bool,
    /// Print the registry without running anything.
    #[arg(long)]
    list: bool,
    #[arg(short, required_unless_present = "list")]
    n: Option<usize>,
}

#[derive(Subcommand, Debug)]
enum QsymCommand {
    /// Expansion of the chain function of a permutation.
    Expand {
        /// interior, left, B, or ordinary
        #[arg(long)]
        flavor: String,
        /// monomial or fundamental
        #[arg(long)]
        basis: String,
        perm: String,
        #[arg(long)]
        signed: bool,
    },
}

/// Result of one invocation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Output {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

/// Size limits in force for one invocation; `None` means unlimited.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Limits {
    pub symmetric: Option<usize>,
    pub hyperoctahedral: Option<usize>,
}

impl Limits {
    pub fn from_env(force: bool) -> Result<Limits, CliError> {
        if force {
            return Ok(Limits { symmetric: None, hyperoctahedral: None });
        }
        match std::env::var(MAX_N_ENV) {
            Ok(v) => {
                let m = v
                    .trim()
                    .parse()
                    .map_err(|_| CliError::Usage(format!("{MAX_N_ENV} must be a nonnegative integer, got {v:?}")))?;
                Ok(Limits { symmetric: Some(m), hyperoctahedral: Some(m) })
            }
            Err(_) => Ok(Limits { symmetric: Some(DEFAULT_MAX_S), hyperoctahedral: Some(DEFAULT_MAX_B) }),
        }
    }

    pub fn check(&self, kind: GroupKind, n: usize) -> Result<(), CliError> {
        let limit = match kind {
            GroupKind::Symmetric => self.symmetric,
            GroupKind::Hyperoctahedral => self.hyperoctahedral,
        };
        match limit {
            Some(m) if n > m => Err(CliError::Resource(format!(
                "{kind} with n = {n} is above the limit {m}; pass --force or set {MAX_N_ENV}"
            ))),
            _ => Ok(()),
        }
    }
}

/// Parses `argv` (including the program name), runs the command and
/// returns what it would print.
pub fn run<I, T>(argv: I) -> Output
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            let text = e.render().to_string();
            return match e.kind() {
                clap::error::ErrorKind::DisplayHelp | clap::error::ErrorKind::DisplayVersion => {
                    Output { code: 0, stdout: text, stderr: String::new() }
                }
                _ => Output { code: 2, stdout: String::new(), stderr: text },
            };
        }
    };
    let result = Limits::from_env(cli.force).and_then(|limits| dispatch(cli.command, limits));
    match result {
        Ok((code, value)) => Output { code, stdout: render(&value), stderr: String::new() },
        Err(e) => Output { code: e.exit_code(), stdout: String::new(), stderr: format!("error: {e}\n") },
    }
}

fn render(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("JSON values always serialize");
    s.push('\n');
    s
}

fn to_value<T: Serialize>(x: &T) -> Value {
    serde_json::to_value(x).expect("domain types serialize")
}

fn positive(n: usize) -> Result<usize, CliError> {
    if n == 0 {
        return Err(CliError::Usage("n must be at least 1".into()));
    }
    Ok(n)
}

fn dispatch(cmd: Command, limits: Limits) -> Result<(i32, Value), CliError> {
    match cmd {
        Command::Stats { perm, signed } => Ok((0, stats(&AnyPermutation::parse(&perm, signed)?))),
        Command::OrderPoly { kind, perm, gf, signed } => {
            let kind: OrderPolyKind = kind.parse()?;
            let p = AnyPermutation::parse(&perm, signed)?;
            let v = if gf {
                json!({ "kind": kind.tag(), "perm": p, "gf": enriched_gf(&p, kind)? })
            } else {
                json!({ "kind": kind.tag(), "perm": p, "poly": order_polynomial(&p, kind)? })
            };
            Ok((0, v))
        }
        Command::Idempotents { family, n } => {
            let f: StructureFamily = family.parse()?;
            limits.check(f.group(), positive(n)?)?;
            Ok((0, to_value(&idempotents(n, f)?)))
        }
        Command::Verify(args) => verify(args, limits),
        Command::StructureConstants { family, n } => {
            let f: ClassFamily = family.parse()?;
            limits.check(f.group(), positive(n)?)?;
            let sc = structure_constants(n, f)?;
            let mut v = to_value(&sc);
            v["well_defined"] = json!(sc.well_defined());
            Ok((0, v))
        }
        Command::Qsym { command: QsymCommand::Expand { flavor, basis, perm, signed } } => {
            let p = AnyPermutation::parse(&perm, signed)?;
            limits.check(p.kind(), p.n())?;
            let basis = ExpansionBasis::parse(&basis)?;
            let e = if flavor == "ordinary" {
                gamma_expansion(&p, basis)?
            } else {
                delta_expansion(&p, Flavor::parse(&flavor)?, basis)?
            };
            Ok((0, to_value(&e)))
        }
        Command::PeakTable { n } => {
            positive(n)?;
            limits.check(GroupKind::Symmetric, n)?;
            limits.check(GroupKind::Hyperoctahedral, n)?;
            peak_table(n)
        }
        Command::Closure { family, n } => {
            let f: ClassFamily = family.parse()?;
            limits.check(f.group(), positive(n)?)?;
            let g = Group::get(f.group(), n)?;
            let sums: Vec<GAElem> = classes(&g, f)?.iter().map(|c| c.sum(&g)).collect();
            let c = multiplicative_closure(&sums, g.order())?;
            Ok((
                0,
                json!({
                    "family": f.tag(),
                    "n": n,
                    "span_dimension": c.initial_rank,
                    "dimension": c.dimension,
                    "closed": c.initially_closed(),
                    "witness": c.witness,
                    "basis": c.basis,
                }),
            ))
        }
    }
}

fn stats(p: &AnyPermutation) -> Value {
    let r = |s| to_value(&StatResult::from(s));
    match p {
        AnyPermutation::Symmetric(x) => json!({
            "perm": p,
            "group": "S",
            "descent": r(descent_set(x)),
            "cyclic_descent": r(cyclic_descent_set(x)),
            "peaks": {
                "interior": r(peak_set(x, PeakKind::Interior)),
                "left": r(peak_set(x, PeakKind::Left)),
                "right": r(peak_set(x, PeakKind::Right)),
                "exterior": r(peak_set(x, PeakKind::Exterior)),
            },
        }),
        AnyPermutation::Signed(x) => json!({
            "perm": p,
            "group": "B",
            "descent": r(signed_descent_set(x)),
            "cyclic_descent": r(signed_cyclic_descent_set(x)),
            "peaks": r(signed_peak_set(x)),
            "sign": sign_stat(x),
        }),
    }
}

fn peak_table(n: usize) -> Result<(i32, Value), CliError> {
    let mut kinds = vec![
        PeakPolyKind::AEulerian,
        PeakPolyKind::BEulerian,
        PeakPolyKind::BCyclicEulerian,
        PeakPolyKind::WInterior,
        PeakPolyKind::WLeft,
        PeakPolyKind::WPlus,
        PeakPolyKind::WMinus,
    ];
    kinds.extend((0..=n).map(PeakPolyKind::WWeighted));
    let mut polys = BTreeMap::new();
    for k in kinds {
        polys.insert(k.tag(), to_value(&peak_polynomial(n, k)?));
    }
    let mut ids = BTreeMap::new();
    for which in Identity43::ALL {
        ids.insert(which.tag(), identity_check_43(n, which)?);
    }
    let code = if ids.values().all(|&b| b) { 0 } else { 1 };
    Ok((code, json!({ "n": n, "polynomials": polys, "identities": ids })))
}

fn check_entry(e: &Entry, n: usize, limits: Limits) -> Result<Outcome, CliError> {
    for &g in &e.groups {
        limits.check(g, n)?;
    }
    e.run(n)
}

fn verify(args: VerifyArgs, limits: Limits) -> Result<(i32, Value), CliError> {
    if args.list {
        let list: Vec<Value> = registry()
            .iter()
            .map(|e| {
                json!({
                    "id": e.id,
                    "statement": e.statement,
                    "groups": e.groups.iter().map(|g| g.tag()).collect::<Vec<_>>(),
                    "min_n": e.sizes.0,
                    "max_n": if e.sizes.1 == usize::MAX { Value::Null } else { json!(e.sizes.1) },
                    "fails_from": match e.expectation {
                        Expectation::Holds => Value::Null,
                        Expectation::FailsFrom(m) => json!(m),
                    },
                })
            })
            .collect();
        return Ok((0, Value::Array(list)));
    }
    let n = positive(args.n.expect("clap requires -n here"))?;
    if let Some(id) = args.theorem {
        let out = check_entry(&lookup(&id)?, n, limits)?;
        return Ok((if out.ok { 0 } else { 1 }, to_value(&out)));
    }
    let mut results = Vec::new();
    let mut skipped = Vec::new();
    let mut resource = false;
    for e in registry() {
        if !e.applies_to(n) {
            skipped.push(json!({ "id": e.id, "reason": "not stated for this n" }));
            continue;
        }
        match check_entry(&e, n, limits) {
            Ok(o) => results.push(o),
            Err(CliError::Resource(msg)) => {
                resource = true;
                skipped.push(json!({ "id": e.id, "reason": msg }));
            }
            Err(other) => return Err(other),
        }
    }
    let mismatches: Vec<&str> = results.iter().filter(|o| !o.as_expected()).map(|o| o.id.as_str()).collect();
    let code = if !mismatches.is_empty() {
        1
    } else if resource {
        3
    } else {
        0
    };
    Ok((
        code,
        json!({ "n": n, "all_as_expected": mismatches.is_empty(), "mismatches": mismatches, "results": results, "skipped": skipped }),
    ))
}
