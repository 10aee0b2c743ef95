//! Honest polynomials in finitely many variables.
//!
//! Type A functions live in `z_1..z_m` (slot `i - 1`), type B functions in
//! `z_0..z_m` (slot `i`).

use std::collections::HashMap;

use num_traits::One;
use peaklab_arith::{MultiPoly, Rational};
use peaklab_order::{order_polynomial, OrderPolyKind};
use peaklab_perm::{AnyPermutation, PosSet};
use peaklab_poset::{BPoset, EnrichedValue, ImageSetSpec, Poset};

use crate::basis::{Basis, QIndex, QsymExpansion};
use crate::expand::{delta_expansion, ExpansionBasis, Flavor};
use crate::{guard, QsymError, Result, MAX_VARIABLES};

/// Number of variables and whether slot 0 holds `z_0`.
pub(crate) fn layout(spec: ImageSetSpec) -> Result<(usize, bool)> {
    let m = spec.k();
    match spec {
        ImageSetSpec::Ordinary(_) | ImageSetSpec::Enriched(_) => Ok((m, false)),
        ImageSetSpec::LeftEnriched(_) | ImageSetSpec::OrdinaryB(_) | ImageSetSpec::BEnriched(_) => Ok((m + 1, true)),
        _ => Err(QsymError::WrongGroup(format!("no variable layout for the image set {spec}"))),
    }
}

pub(crate) fn slot(v: EnrichedValue, zero_slot: bool) -> usize {
    let mag = v.magnitude() as usize;
    if zero_slot {
        mag
    } else {
        mag - 1
    }
}

/// Collects weighted assignments into a polynomial.
pub(crate) fn collect(arity: usize, counts: HashMap<Vec<u32>, u64>) -> MultiPoly {
    let mut out = MultiPoly::zero(arity);
    for (e, c) in counts {
        out.add_term(e, Rational::from_integer(c.into())).expect("arity");
    }
    out
}

/// `Σ_f Π_i z_{|f(i)|}` over the P-partitions of the chain `pi` into `spec`.
pub fn realize_direct(pi: &AnyPermutation, spec: ImageSetSpec) -> Result<MultiPoly> {
    guard("m", spec.k(), MAX_VARIABLES)?;
    let (arity, zero_slot) = layout(spec)?;
    let sys = match (pi, spec.is_type_b()) {
        (AnyPermutation::Symmetric(p), false) => Poset::chain(p).constraints(),
        (AnyPermutation::Signed(p), true) => BPoset::chain(p).constraints(),
        _ => return Err(QsymError::WrongGroup(format!("image set {spec} does not apply to {pi}"))),
    };
    let vals = spec.values();
    let mut counts: HashMap<Vec<u32>, u64> = HashMap::new();
    sys.for_each(&spec.alphabet(), |assign| {
        let mut e = vec![0u32; arity];
        for &a in assign {
            e[slot(vals[a], zero_slot)] += 1;
        }
        *counts.entry(e).or_insert(0) += 1;
    });
    Ok(collect(arity, counts))
}

/// Parts `α_1, ..., α_k` cut out of `[n]` by the positions in `s`.
fn composition(n: usize, s: PosSet) -> Vec<u32> {
    let mut parts = Vec::new();
    let mut prev = 0;
    for x in s.iter().chain(std::iter::once(n)) {
        parts.push((x - prev) as u32);
        prev = x;
    }
    parts
}

/// Strictly increasing `k`-tuples from `lo..=hi`.
fn increasing(k: usize, lo: usize, hi: usize, visit: &mut impl FnMut(&[usize])) {
    fn go(k: usize, next: usize, hi: usize, cur: &mut Vec<usize>, visit: &mut impl FnMut(&[usize])) {
        if cur.len() == k {
            visit(cur);
            return;
        }
        for i in next..=hi {
            if hi + 1 - i < k - cur.len() {
                break;
            }
            cur.push(i);
            go(k, i + 1, hi, cur, visit);
            cur.pop();
        }
    }
    go(k, lo, hi, &mut Vec::with_capacity(k), visit);
}

fn monomial_element(n: usize, basis: Basis, s: PosSet, m: usize) -> MultiPoly {
    let parts = composition(n, s);
    match basis {
        Basis::M => {
            let mut out = MultiPoly::zero(m);
            increasing(parts.len(), 1, m, &mut |idx| {
                let mut e = vec![0u32; m];
                for (&i, &a) in idx.iter().zip(&parts) {
                    e[i - 1] = a;
                }
                out.add_term(e, Rational::one()).expect("arity");
            });
            out
        }
        Basis::N => {
            let mut out = MultiPoly::zero(m + 1);
            increasing(parts.len() - 1, 1, m, &mut |idx| {
                let mut e = vec![0u32; m + 1];
                e[0] = parts[0];
                for (&i, &a) in idx.iter().zip(&parts[1..]) {
                    e[i] = a;
                }
                out.add_term(e, Rational::one()).expect("arity");
            });
            out
        }
        _ => unreachable!("monomial bases only"),
    }
}

/// The expansion with every variable past `z_m` set to zero.
pub fn truncate_realize(expansion: &QsymExpansion, m: usize) -> Result<MultiPoly> {
    guard("m", m, MAX_VARIABLES)?;
    let mono = expansion.to_monomial()?;
    let arity = if mono.basis == Basis::N { m + 1 } else { m };
    let mut out = MultiPoly::zero(arity);
    for (idx, c) in mono.terms() {
        let QIndex::Set(s) = idx else { unreachable!("monomial indices are sets") };
        out = &out + &monomial_element(mono.n, mono.basis, *s, m).scale(c);
    }
    Ok(out)
}

/// The enriched image set realizing `flavor` with `m` magnitudes.
pub(crate) fn flavor_spec(flavor: Flavor, m: usize) -> ImageSetSpec {
    match flavor {
        Flavor::Interior => ImageSetSpec::Enriched(m),
        Flavor::Left => ImageSetSpec::LeftEnriched(m),
        Flavor::B => ImageSetSpec::BEnriched(m),
    }
}

fn order_kind(flavor: Flavor) -> OrderPolyKind {
    match flavor {
        Flavor::Interior => OrderPolyKind::EnrichedInterior,
        Flavor::Left => OrderPolyKind::EnrichedLeft,
        Flavor::B => OrderPolyKind::EnrichedB,
    }
}

/// Result of comparing an expansion against the partitions it counts.
#[derive(Clone, Debug, PartialEq, Eq, serde::Serialize)]
pub struct Specialization {
    /// Monomial and fundamental expansions realize to the same polynomial.
    pub bases_agree: bool,
    /// The realization equals the direct enumeration.
    pub matches_enumeration: bool,
    /// All-ones evaluation equals the order polynomial at `m`.
    pub matches_order_polynomial: bool,
}

impl Specialization {
    pub fn holds(&self) -> bool {
        self.bases_agree && self.matches_enumeration && self.matches_order_polynomial
    }
}

pub fn specialization_check(pi: &AnyPermutation, flavor: Flavor, m: usize) -> Result<Specialization> {
    let mono = truncate_realize(&delta_expansion(pi, flavor, ExpansionBasis::Monomial)?, m)?;
    let fund = truncate_realize(&delta_expansion(pi, flavor, ExpansionBasis::Fundamental)?, m)?;
    let direct = realize_direct(pi, flavor_spec(flavor, m))?;
    let ones = vec![Rational::one(); mono.arity()];
    let value = mono.eval(&ones)?;
    let expected = order_polynomial(pi, order_kind(flavor))?.eval(&Rational::from_integer((m as i64).into()));
    Ok(Specialization {
        bases_agree: mono == fund,
        matches_enumeration: mono == direct,
        matches_order_polynomial: value == expected,
    })
}
