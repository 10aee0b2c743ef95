//! Every checkable claim under a stable id, with the sizes it applies to and
//! the outcome it is expected to have.

use peaklab_algebra::{
    classes, cyclic_isomorphism, in_span, multiplicative_closure, structure_constants, theorems, verify_theorem,
    ClassFamily, GAElem, GridMode, Group, Route, Theorem,
};
use peaklab_order::{identity_check_43, reciprocity_check, vanishing_check, Identity43, OrderPolyKind};
use peaklab_perm::{AnyPermutation, GroupElement, GroupKind, Permutation, SignedPermutation};
use peaklab_qsym::{bipartite_report, fibonacci, peak_basis_rank, specialization_check, BipartiteFlavor, Flavor};
use serde::Serialize;
use serde_json::{json, Value};

use crate::error::CliError;

/// Number of variables used by the `mon` and `fun` realizations.
pub const SPECIALIZATION_VARIABLES: usize = 3;
/// Alphabet parameters used by the `gf_*` checks.
pub const BIPARTITE_PQ: usize = 2;

#[derive(Clone, Copy, Debug)]
enum Check {
    Multiplicative(&'static str),
    CyclicIso,
    Recip(OrderPolyKind),
    Identity(Identity43),
    Monomial,
    Fundamental,
    Bipartite(BipartiteFlavor),
    FibRank(Flavor),
    RightPeakNumClosure,
    RightPeakSetConstancy,
}

/// When a claim is expected to hold.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Expectation {
    Holds,
    /// Holds below this size and fails from it on.
    FailsFrom(usize),
}

impl Expectation {
    pub fn at(self, n: usize) -> bool {
        match self {
            Expectation::Holds => true,
            Expectation::FailsFrom(m) => n < m,
        }
    }
}

#[derive(Clone, Debug)]
pub struct Entry {
    pub id: String,
    pub statement: String,
    /// Groups whose full listing the check walks through.
    pub groups: Vec<GroupKind>,
    pub expectation: Expectation,
    /// Sizes the claim is stated for.
    pub sizes: (usize, usize),
    check: Check,
}

#[derive(Clone, Debug, Serialize)]
pub struct Outcome {
    pub id: String,
    pub n: usize,
    pub statement: String,
    pub ok: bool,
    pub expected: bool,
    pub detail: Value,
}

impl Outcome {
    pub fn as_expected(&self) -> bool {
        self.ok == self.expected
    }
}

fn multiplicative(t: &Theorem) -> Entry {
    let expectation = if t.expected { Expectation::Holds } else { Expectation::FailsFrom(PHI_TIMES_RHO_FIRST_FAILURE) };
    Entry {
        id: t.id.to_string(),
        statement: t.statement(),
        groups: vec![t.group],
        expectation,
        sizes: (1, usize::MAX),
        check: Check::Multiplicative(t.id),
    }
}

/// Smallest `n` at which `φ(y)ρ(x)` is not a polynomial in `xy`.
const PHI_TIMES_RHO_FIRST_FAILURE: usize = 3;

fn entry(id: &str, statement: &str, groups: &[GroupKind], sizes: (usize, usize), check: Check) -> Entry {
    Entry {
        id: id.to_string(),
        statement: statement.to_string(),
        groups: groups.to_vec(),
        expectation: Expectation::Holds,
        sizes,
        check,
    }
}

/// The full registry in a fixed order.
pub fn registry() -> Vec<Entry> {
    use GroupKind::{Hyperoctahedral as B, Symmetric as S};
    let any = (1, usize::MAX);
    let mut v: Vec<Entry> = theorems().iter().map(multiplicative).collect();
    v.push(entry(
        "cyclic_iso",
        "π ↦ (1/n) Σ_i π̂ ω^i is an algebra isomorphism from the Eulerian algebra of S_(n-1) onto the cyclic Eulerian algebra of S_n",
        &[S],
        (3, 6),
        Check::CyclicIso,
    ));
    let recip = [
        (
            "recip_interior",
            OrderPolyKind::EnrichedInterior,
            S,
            "Ω'(π;-x) = (-1)^n Ω'(π;x), and Ω'(π;k) = 0 for 0 <= k <= pe(π)",
        ),
        ("recip_left", OrderPolyKind::EnrichedLeft, S, "Ω^(ℓ)(π;-x-1/2) = (-1)^n Ω^(ℓ)(π;x-1/2)"),
        ("recip_right", OrderPolyKind::EnrichedRight, S, "Ω^(r)(π;-x-1/2) = (-1)^n Ω^(r)(π;x-1/2)"),
        (
            "recip_exterior",
            OrderPolyKind::EnrichedExterior,
            S,
            "Ω^(e)(π;-x) = (-1)^n Ω^(e)(π;x), and Ω^(e)(π;k) = 0 for 0 <= k < epe(π)",
        ),
        (
            "recip_B",
            OrderPolyKind::EnrichedB,
            B,
            "Ω'_B satisfies its reciprocity law and vanishes below pe_B(π) + ς(π)",
        ),
    ];
    for (id, kind, g, st) in recip {
        v.push(entry(id, st, &[g], any, Check::Recip(kind)));
    }
    let ids = [
        (
            Identity43::PeEul1,
            &[S, B][..],
            "W_n(u) = 2^(n+1) A_n(t)/(1+t)^(n+1) = 2 B^(c)_n(t)/(1+t)^(n+1), u = 4t/(1+t)^2",
        ),
        (Identity43::PeEul2, &[S, B][..], "W^(ℓ)_n(u) = B_n(t)/(1+t)^n, u = 4t/(1+t)^2"),
        (Identity43::BPeEul1, &[B][..], "W^+_n(u) + (1+t)/2 W^-_n(u) = Σ_k (4k+1)^n t^k (1-t)^(n+1)/(1+t)^n"),
        (Identity43::BPeEul2, &[B][..], "Σ_i α^i W_(n,i)(t)/(1-t)^(n+1) = Σ_k ((α+1)k+1)^n t^k"),
        (Identity43::AugEul, &[S, B][..], "B^(c)_n(t) = 2^n A_n(t)"),
    ];
    for (which, groups, st) in ids {
        v.push(entry(which.tag(), st, groups, any, Check::Identity(which)));
    }
    v.push(entry(
        "mon",
        "monomial expansions of the enriched chain functions realize to the enriched P-partition enumeration in 3 variables",
        &[S, B],
        any,
        Check::Monomial,
    ));
    v.push(entry(
        "fun",
        "fundamental expansions of the enriched chain functions realize to the same polynomials as the monomial ones",
        &[S, B],
        any,
        Check::Fundamental,
    ));
    for flavor in BipartiteFlavor::ALL {
        let id = format!(
            "gf_{}",
            match flavor.tag() {
                "gesA" => "ges",
                "peakideal_mixed" => "peakideal",
                "interiordescent_mixed" => "interiordescent",
                t => t,
            }
        );
        let g = if flavor.is_type_b() { B } else { S };
        let sizes = if flavor.is_type_b() { (1, 3) } else { (1, 4) };
        let st = format!(
            "bipartite generating function identity ({}) over the product alphabet, p = q = {BIPARTITE_PQ}",
            flavor.tag()
        );
        v.push(entry(&id, &st, &[g], sizes, Check::Bipartite(flavor)));
    }
    let fib = [
        ("fib_rank_interior", Flavor::Interior, "interior peak functions span a space of dimension f_(n-1)"),
        ("fib_rank_left", Flavor::Left, "left peak functions span a space of dimension f_n"),
        ("fib_rank_B", Flavor::B, "type B peak functions span a space of dimension f_(n+1)"),
    ];
    for (id, flavor, st) in fib {
        v.push(entry(id, st, &[], (1, 7), Check::FibRank(flavor)));
    }
    let mut closure = entry(
        "right_peak_num_closure",
        "the span of right peak number class sums is closed under multiplication",
        &[S],
        any,
        Check::RightPeakNumClosure,
    );
    closure.expectation = Expectation::FailsFrom(3);
    v.push(closure);
    let mut constancy = entry(
        "right_peak_set_constancy",
        "right peak set class sums have well-defined structure constants",
        &[S],
        any,
        Check::RightPeakSetConstancy,
    );
    constancy.expectation = Expectation::FailsFrom(3);
    v.push(constancy);
    v
}

pub fn lookup(id: &str) -> Result<Entry, CliError> {
    registry().into_iter().find(|e| e.id == id).ok_or_else(|| CliError::Usage(format!("unknown theorem id {id:?}")))
}

impl Entry {
    pub fn applies_to(&self, n: usize) -> bool {
        (self.sizes.0..=self.sizes.1).contains(&n)
    }

    /// Runs the check at size `n`.
    pub fn run(&self, n: usize) -> Result<Outcome, CliError> {
        if !self.applies_to(n) {
            return Err(CliError::Usage(format!(
                "{} is stated for {} <= n <= {}, not n = {n}",
                self.id,
                self.sizes.0,
                if self.sizes.1 == usize::MAX { "∞".to_string() } else { self.sizes.1.to_string() }
            )));
        }
        let (ok, detail) = match self.check {
            Check::Multiplicative(id) => {
                let t = theorems().into_iter().find(|t| t.id == id).expect("registered theorem");
                let r = verify_theorem(n, &t, GridMode::default_for(t.group, n), Route::Collapsed)?;
                (r.ok, json!({ "nodes": r.nodes, "counterexample": r.counterexample }))
            }
            Check::CyclicIso => {
                let c = cyclic_isomorphism(n)?;
                (c.holds(), serde_json::to_value(&c).expect("serializable"))
            }
            Check::Recip(kind) => recip(n, kind)?,
            Check::Identity(which) => (identity_check_43(n, which)?, Value::Null),
            Check::Monomial | Check::Fundamental => specialization(n, matches!(self.check, Check::Fundamental))?,
            Check::Bipartite(flavor) => {
                let r = bipartite_report(n, flavor, BIPARTITE_PQ, BIPARTITE_PQ)?;
                (r.holds(), json!({ "checked": r.checked, "failures": r.failures }))
            }
            Check::FibRank(flavor) => {
                let rank = peak_basis_rank(n, flavor)?;
                let want = match flavor {
                    Flavor::Interior => fibonacci(n - 1),
                    Flavor::Left => fibonacci(n),
                    Flavor::B => fibonacci(n + 1),
                };
                (rank as u64 == want, json!({ "rank": rank, "fibonacci": want }))
            }
            Check::RightPeakNumClosure => right_peak_closure(n)?,
            Check::RightPeakSetConstancy => {
                let sc = structure_constants(n, ClassFamily::PeakRightSet)?;
                (sc.well_defined(), json!({ "counterexample": sc.violation }))
            }
        };
        Ok(Outcome {
            id: self.id.clone(),
            n,
            statement: self.statement.clone(),
            ok,
            expected: self.expectation.at(n),
            detail,
        })
    }
}

fn elements(kind: GroupKind, n: usize) -> Result<Vec<AnyPermutation>, CliError> {
    Ok(match kind {
        GroupKind::Symmetric => Permutation::elements(n)?.into_iter().map(AnyPermutation::from).collect(),
        GroupKind::Hyperoctahedral => SignedPermutation::elements(n)?.into_iter().map(AnyPermutation::from).collect(),
    })
}

fn recip(n: usize, kind: OrderPolyKind) -> Result<(bool, Value), CliError> {
    let with_zeros = !matches!(kind, OrderPolyKind::EnrichedLeft | OrderPolyKind::EnrichedRight);
    let all = elements(kind.group(), n)?;
    for p in &all {
        let good = reciprocity_check(p, kind)? && (!with_zeros || vanishing_check(p, kind)?);
        if !good {
            return Ok((false, json!({ "counterexample": p.to_string() })));
        }
    }
    Ok((true, json!({ "checked": all.len() })))
}

fn specialization(n: usize, fundamental: bool) -> Result<(bool, Value), CliError> {
    let mut checked = 0;
    for (kind, flavors) in
        [(GroupKind::Symmetric, &[Flavor::Interior, Flavor::Left][..]), (GroupKind::Hyperoctahedral, &[Flavor::B][..])]
    {
        for p in elements(kind, n)? {
            for &f in flavors {
                let s = specialization_check(&p, f, SPECIALIZATION_VARIABLES)?;
                let good = if fundamental {
                    s.bases_agree && s.matches_enumeration
                } else {
                    s.matches_enumeration && s.matches_order_polynomial
                };
                checked += 1;
                if !good {
                    return Ok((false, json!({ "counterexample": p.to_string(), "flavor": f.tag(), "result": s })));
                }
            }
        }
    }
    Ok((true, json!({ "checked": checked, "variables": SPECIALIZATION_VARIABLES })))
}

fn right_peak_closure(n: usize) -> Result<(bool, Value), CliError> {
    let g = Group::symmetric(n)?;
    let cls = classes(&g, ClassFamily::PeakRightNum)?;
    let sums: Vec<GAElem> = cls.iter().map(|c| c.sum(&g)).collect();
    let closure = multiplicative_closure(&sums, g.order())?;
    let counterexample = match closure.witness {
        Some((i, j)) => {
            let product = &sums[i] * &sums[j];
            debug_assert!(!in_span(&sums, &product)?);
            json!({ "left": cls[i].label, "right": cls[j].label, "product": product })
        }
        None => Value::Null,
    };
    Ok((
        closure.initially_closed(),
        json!({
            "span_dimension": closure.initial_rank,
            "closure_dimension": closure.dimension,
            "counterexample": counterexample,
        }),
    ))
}
