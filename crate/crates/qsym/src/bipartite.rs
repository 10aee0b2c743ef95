//! Product identities `F(π)(XY) = Σ_{στ=π} G(σ)(X) H(τ)(Y)`.
//!
//! The left side counts partitions of the chain `π` into the product
//! alphabet ordered by the up-down rule: pairs `(a, b)` compare by the major
//! letter `a`, then by `b` upward when `ε(a) = +` and downward otherwise,
//! with `ε(a, b) = ε(a)ε(b)`. With an ordinary major alphabet this is the
//! lexicographic order. The letter `(a, b)` has weight `y_|a| x_|b|`; the
//! major coordinate carries `τ` and the minor coordinate `σ`.

use std::cmp::Ordering;
use std::collections::HashMap;

use peaklab_arith::MultiPoly;
use peaklab_perm::{AnyPermutation, GroupElement, Permutation, SignedPermutation};
use peaklab_poset::{Alphabet, BPoset, EnrichedValue, ImageSetSpec, Poset, Sign};
use serde::Serialize;

use crate::realize::{collect, layout, realize_direct, slot};
use crate::{guard, QsymError, Result};

/// One coordinate of the product alphabet.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum Side {
    /// `P`, or `{0} ∪ ±P` in type B
    Ordinary,
    /// `P'`
    Enriched,
    /// `{0} ∪ P'`
    LeftEnriched,
    /// `Z'`
    BEnriched,
}

impl Side {
    fn spec(self, m: usize) -> ImageSetSpec {
        match self {
            Side::Ordinary => ImageSetSpec::Ordinary(m),
            Side::Enriched => ImageSetSpec::Enriched(m),
            Side::LeftEnriched => ImageSetSpec::LeftEnriched(m),
            Side::BEnriched => ImageSetSpec::BEnriched(m),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum BipartiteFlavor {
    GesA,
    Interior,
    Left,
    B,
    PeakidealMixed,
    InteriordescentMixed,
}

impl BipartiteFlavor {
    pub const ALL: [BipartiteFlavor; 6] = [
        BipartiteFlavor::GesA,
        BipartiteFlavor::Interior,
        BipartiteFlavor::Left,
        BipartiteFlavor::B,
        BipartiteFlavor::PeakidealMixed,
        BipartiteFlavor::InteriordescentMixed,
    ];

    pub fn tag(self) -> &'static str {
        match self {
            BipartiteFlavor::GesA => "gesA",
            BipartiteFlavor::Interior => "interior",
            BipartiteFlavor::Left => "left",
            BipartiteFlavor::B => "B",
            BipartiteFlavor::PeakidealMixed => "peakideal_mixed",
            BipartiteFlavor::InteriordescentMixed => "interiordescent_mixed",
        }
    }

    pub fn parse(s: &str) -> Result<Self> {
        Self::ALL.into_iter().find(|f| f.tag() == s).ok_or_else(|| QsymError::UnknownTag(s.to_string()))
    }

    pub fn is_type_b(self) -> bool {
        self == BipartiteFlavor::B
    }

    /// `(major, minor)` alphabets of each equation in the family.
    pub fn equations(self) -> Vec<(Side, Side)> {
        use Side::*;
        match self {
            BipartiteFlavor::GesA => vec![(Ordinary, Ordinary)],
            BipartiteFlavor::Interior => vec![(Enriched, Enriched)],
            BipartiteFlavor::Left => vec![(LeftEnriched, LeftEnriched)],
            BipartiteFlavor::B => vec![(BEnriched, BEnriched)],
            BipartiteFlavor::PeakidealMixed => vec![(Enriched, LeftEnriched), (LeftEnriched, Enriched)],
            BipartiteFlavor::InteriordescentMixed => vec![(Ordinary, Enriched)],
        }
    }
}

/// One letter `(a, b)` of a product alphabet.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
struct Pair(EnrichedValue, EnrichedValue);

fn updown(x: &Pair, y: &Pair) -> Ordering {
    x.0.cmp(&y.0).then_with(|| match x.0.epsilon {
        Sign::Plus => x.1.cmp(&y.1),
        Sign::Minus => y.1.cmp(&x.1),
    })
}

fn product_alphabet(major: ImageSetSpec, minor: ImageSetSpec) -> (Vec<Pair>, Alphabet) {
    let mut letters: Vec<Pair> =
        major.values().into_iter().flat_map(|a| minor.values().into_iter().map(move |b| Pair(a, b))).collect();
    letters.sort_by(updown);
    let plus = letters.iter().map(|p| (p.0.epsilon == Sign::Plus) == (p.1.epsilon == Sign::Plus)).collect();
    let alph = Alphabet::new(plus);
    let alph = if major.is_type_b() { alph.symmetric() } else { alph };
    (letters, alph)
}

/// Variables: major slots first, then minor slots.
struct Layout {
    major: (usize, bool),
    minor: (usize, bool),
}

impl Layout {
    fn arity(&self) -> usize {
        self.major.0 + self.minor.0
    }

    fn embed(&self, poly: &MultiPoly, major: bool) -> MultiPoly {
        let (offset, width) = if major { (0, self.major.0) } else { (self.major.0, self.minor.0) };
        let mut out = MultiPoly::zero(self.arity());
        for (e, c) in poly.terms() {
            let mut v = vec![0u32; self.arity()];
            v[offset..offset + width].copy_from_slice(e);
            out.add_term(v, c.clone()).expect("arity");
        }
        out
    }
}

fn lhs(pi: &AnyPermutation, major: ImageSetSpec, minor: ImageSetSpec, lay: &Layout) -> MultiPoly {
    let (letters, alph) = product_alphabet(major, minor);
    let sys = match pi {
        AnyPermutation::Symmetric(p) => Poset::chain(p).constraints(),
        AnyPermutation::Signed(p) => BPoset::chain(p).constraints(),
    };
    let mut counts: HashMap<Vec<u32>, u64> = HashMap::new();
    sys.for_each(&alph, |assign| {
        let mut e = vec![0u32; lay.arity()];
        for &i in assign {
            let Pair(a, b) = letters[i];
            e[slot(a, lay.major.1)] += 1;
            e[lay.major.0 + slot(b, lay.minor.1)] += 1;
        }
        *counts.entry(e).or_insert(0) += 1;
    });
    collect(lay.arity(), counts)
}

fn rhs<G: GroupElement + Into<AnyPermutation>>(
    pi: &G,
    group: &[G],
    major: &HashMap<G, MultiPoly>,
    minor: &HashMap<G, MultiPoly>,
    lay: &Layout,
) -> MultiPoly {
    let mut out = MultiPoly::zero(lay.arity());
    for sigma in group {
        let tau = sigma.inverse().compose_unchecked(pi);
        out = &out + &(&lay.embed(&minor[sigma], false) * &lay.embed(&major[&tau], true));
    }
    out
}

/// Outcome of one identity over a whole group.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BipartiteReport {
    pub flavor: &'static str,
    pub n: usize,
    pub p: usize,
    pub q: usize,
    pub checked: usize,
    /// Permutations where some equation of the family fails.
    pub failures: Vec<String>,
}

impl BipartiteReport {
    pub fn holds(&self) -> bool {
        self.failures.is_empty()
    }
}

fn check_guards(n: usize, p: usize, q: usize) -> Result<()> {
    guard("n", n, 4)?;
    guard("p", p, 3)?;
    guard("q", q, 3)
}

fn run<G: GroupElement + Into<AnyPermutation>>(
    targets: &[G],
    n: usize,
    flavor: BipartiteFlavor,
    p: usize,
    q: usize,
) -> Result<Vec<String>> {
    let group = G::elements(n)?;
    let mut failures = Vec::new();
    for (maj, min) in flavor.equations() {
        let (major, minor) = (maj.spec(p), min.spec(q));
        let (major_b, minor_b) = if G::KIND == peaklab_perm::GroupKind::Hyperoctahedral {
            (ImageSetSpec::BEnriched(p), ImageSetSpec::BEnriched(q))
        } else {
            (major, minor)
        };
        let lay = Layout { major: layout(major_b)?, minor: layout(minor_b)? };
        let mut maj_real = HashMap::new();
        let mut min_real = HashMap::new();
        for g in &group {
            let a: AnyPermutation = g.clone().into();
            maj_real.insert(g.clone(), realize_direct(&a, major_b)?);
            min_real.insert(g.clone(), realize_direct(&a, minor_b)?);
        }
        for pi in targets {
            let a: AnyPermutation = pi.clone().into();
            if lhs(&a, major_b, minor_b, &lay) != rhs(pi, &group, &maj_real, &min_real, &lay) {
                let s = pi.to_string();
                if !failures.contains(&s) {
                    failures.push(s);
                }
            }
        }
    }
    Ok(failures)
}

fn matches_group(pi: &AnyPermutation, flavor: BipartiteFlavor) -> Result<()> {
    if matches!(pi, AnyPermutation::Signed(_)) != flavor.is_type_b() {
        return Err(QsymError::WrongGroup(format!("flavor {} does not apply to {pi}", flavor.tag())));
    }
    Ok(())
}

/// Whether the identity holds at `pi` with `p` major and `q` minor magnitudes.
pub fn bipartite_check(pi: &AnyPermutation, flavor: BipartiteFlavor, p: usize, q: usize) -> Result<bool> {
    matches_group(pi, flavor)?;
    let n = pi.n();
    check_guards(n, p, q)?;
    let failures = match pi {
        AnyPermutation::Symmetric(x) => run(std::slice::from_ref(x), n, flavor, p, q)?,
        AnyPermutation::Signed(x) => run(std::slice::from_ref(x), n, flavor, p, q)?,
    };
    Ok(failures.is_empty())
}

/// Checks the identity at every element of `S_n` or `B_n`.
pub fn bipartite_report(n: usize, flavor: BipartiteFlavor, p: usize, q: usize) -> Result<BipartiteReport> {
    check_guards(n, p, q)?;
    let (checked, failures) = if flavor.is_type_b() {
        let all = SignedPermutation::elements(n)?;
        (all.len(), run(&all, n, flavor, p, q)?)
    } else {
        let all = Permutation::elements(n)?;
        (all.len(), run(&all, n, flavor, p, q)?)
    };
    Ok(BipartiteReport { flavor: flavor.tag(), n, p, q, checked, failures })
}
