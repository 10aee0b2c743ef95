use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};
use peaklab_arith::{int, rational, Rational};
use peaklab_perm::GroupKind;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::group::Group;
use crate::structure::{class_expansion, structure_polynomial, ClassTerm, StructureFamily};
use crate::{AlgebraError, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Arg {
    X,
    Y,
}

impl Arg {
    fn name(self) -> char {
        match self {
            Arg::X => 'x',
            Arg::Y => 'y',
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Factor {
    pub family: StructureFamily,
    pub arg: Arg,
}

/// `left(u) · right(v) = result(xy)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Equality {
    pub left: Factor,
    pub right: Factor,
    pub result: StructureFamily,
}

impl fmt::Display for Equality {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{}({}) {}({}) = {}(xy)",
            self.left.family,
            self.left.arg.name(),
            self.right.family,
            self.right.arg.name(),
            self.result
        )
    }
}

/// A registered multiplicative identity between structure polynomials.
#[derive(Clone, Debug)]
pub struct Theorem {
    pub id: &'static str,
    pub group: GroupKind,
    pub equalities: Vec<Equality>,
    /// `false` for the products known not to be polynomials in `xy`.
    pub expected: bool,
}

impl Theorem {
    pub fn statement(&self) -> String {
        self.equalities.iter().map(ToString::to_string).collect::<Vec<_>>().join("; ")
    }
}

fn eq(l: StructureFamily, la: Arg, r: StructureFamily, ra: Arg, res: StructureFamily) -> Equality {
    Equality { left: Factor { family: l, arg: la }, right: Factor { family: r, arg: ra }, result: res }
}

fn thm(id: &'static str, equalities: Vec<Equality>) -> Theorem {
    let group = equalities[0].result.group();
    Theorem { id, group, equalities, expected: true }
}

/// Every registered identity in a fixed order.
pub fn theorems() -> Vec<Theorem> {
    use Arg::{X, Y};
    use StructureFamily::*;
    let mut v = vec![
        thm("ges", vec![eq(Phi, X, Phi, Y, Phi)]),
        thm("cyc", vec![eq(PhiC, X, PhiC, Y, PhiC)]),
        thm("chow", vec![eq(PhiB, X, PhiB, Y, PhiB)]),
        thm("cyclicB", vec![eq(PhiBC, X, PhiBC, Y, PhiBC)]),
        thm("idealB", vec![eq(PhiBC, X, PhiB, Y, PhiBC), eq(PhiB, Y, PhiBC, X, PhiBC)]),
        thm("interior_1", vec![eq(Rho, X, Rho, Y, Rho)]),
        thm("interior_2", vec![eq(RhoBar, X, RhoBar, Y, RhoBar)]),
        thm("interior_3", vec![eq(RhoBar, X, Rho, Y, RhoBar)]),
        thm("interior_4", vec![eq(Rho, X, RhoBar, Y, Rho)]),
        thm("left_1", vec![eq(RhoL, X, RhoL, Y, RhoL)]),
        thm("left_2", vec![eq(RhoR, X, RhoR, Y, RhoL)]),
        thm("left_3", vec![eq(RhoL, X, RhoR, Y, RhoR)]),
        thm("left_4", vec![eq(RhoR, X, RhoL, Y, RhoR)]),
        thm("peakideal_1", vec![eq(Rho, X, RhoL, Y, Rho), eq(RhoL, Y, Rho, X, Rho)]),
        thm("peakideal_2", vec![eq(RhoBar, X, RhoL, Y, RhoBar), eq(RhoL, Y, RhoBar, X, RhoBar)]),
        thm("peakideal_3", vec![eq(Rho, X, RhoR, Y, Rho), eq(RhoR, Y, RhoBar, X, Rho)]),
        thm("peakideal_4", vec![eq(RhoBar, X, RhoR, Y, RhoBar), eq(RhoR, Y, Rho, X, RhoBar)]),
        thm("interiordescent_1", vec![eq(Rho, X, Phi, Y, Rho)]),
        thm("interiordescent_2", vec![eq(RhoBar, X, Phi, Y, RhoBar)]),
        thm("peakalg2", vec![eq(RhoB, X, RhoB, Y, RhoB)]),
    ];
    let mut neg = thm("phi_times_rho", vec![eq(Phi, Y, Rho, X, Rho)]);
    neg.expected = false;
    v.push(neg);
    v
}

pub fn theorem(id: &str) -> Result<Theorem> {
    theorems().into_iter().find(|t| t.id == id).ok_or_else(|| AlgebraError::UnknownTheorem(id.to_string()))
}

/// Evaluation nodes for a bivariate identity.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GridMode {
    /// `x, y = 1, ..., d+1` where `d` bounds every degree involved.
    Full,
    /// `count` random pairs with `|x|, |y| <= range`.
    Sampled { count: usize, seed: u64, range: i64 },
}

impl GridMode {
    /// Full grid inside `S_n, n <= 6` and `B_n, n <= 4`, sampled beyond.
    pub fn default_for(kind: GroupKind, n: usize) -> GridMode {
        let limit = match kind {
            GroupKind::Symmetric => 6,
            GroupKind::Hyperoctahedral => 4,
        };
        if n <= limit {
            GridMode::Full
        } else {
            GridMode::Sampled { count: 12, seed: 0, range: 60 }
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Route {
    /// Products of class sums computed once, then combined at every node.
    Collapsed,
    /// Full convolution of the evaluated structure polynomials at every node.
    Direct,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Counterexample {
    pub equality: String,
    pub x: i64,
    pub y: i64,
    pub perm: Vec<i32>,
    #[serde(with = "rational::serde_str")]
    pub lhs: Rational,
    #[serde(with = "rational::serde_str")]
    pub rhs: Rational,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Verification {
    pub theorem: String,
    pub n: usize,
    pub statement: String,
    pub ok: bool,
    pub expected: bool,
    pub nodes: usize,
    pub counterexample: Option<Counterexample>,
}

pub fn verify_identity(n: usize, id: &str) -> Result<Verification> {
    let t = theorem(id)?;
    verify_theorem(n, &t, GridMode::default_for(t.group, n), Route::Collapsed)
}

pub fn verify_theorem(n: usize, t: &Theorem, mode: GridMode, route: Route) -> Result<Verification> {
    let mut nodes = 0;
    let mut counterexample = None;
    for e in &t.equalities {
        let (k, ce) = match route {
            Route::Collapsed => check_collapsed(n, e, mode)?,
            Route::Direct => check_direct(n, e, mode)?,
        };
        nodes += k;
        if ce.is_some() {
            counterexample = ce;
            break;
        }
    }
    Ok(Verification {
        theorem: t.id.to_string(),
        n,
        statement: t.statement(),
        ok: counterexample.is_none(),
        expected: t.expected,
        nodes,
        counterexample,
    })
}

fn max_degree(terms: &[&[ClassTerm]]) -> usize {
    terms.iter().flat_map(|t| t.iter()).filter_map(|c| c.poly.degree()).max().unwrap_or(0)
}

fn nodes(mode: GridMode, d: usize) -> Vec<(i64, i64)> {
    match mode {
        GridMode::Full => {
            let r = 1..=d as i64 + 1;
            r.clone().flat_map(|x| r.clone().map(move |y| (x, y))).collect()
        }
        GridMode::Sampled { count, seed, range } => {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            (0..count).map(|_| (rng.gen_range(-range..=range), rng.gen_range(-range..=range))).collect()
        }
    }
}

fn pick(arg: Arg, x: &Rational, y: &Rational) -> Rational {
    match arg {
        Arg::X => x.clone(),
        Arg::Y => y.clone(),
    }
}

fn check_collapsed(n: usize, e: &Equality, mode: GridMode) -> Result<(usize, Option<Counterexample>)> {
    let g = Group::get(e.result.group(), n)?;
    let a = class_expansion(n, e.left.family)?;
    let b = class_expansion(n, e.right.family)?;
    let c = class_expansion(n, e.result)?;
    let m = g.order();
    // products[ia][ib][π] = #{(σ, τ) : σ in A_ia, τ in B_ib, στ = π}
    let mut products = vec![vec![vec![0i64; m]; b.len()]; a.len()];
    for (ia, ca) in a.iter().enumerate() {
        for (ib, cb) in b.iter().enumerate() {
            let row = &mut products[ia][ib];
            for &s in &ca.members {
                for &t in &cb.members {
                    row[g.mul(s, t)] += 1;
                }
            }
        }
    }
    let mut class_of = vec![0usize; m];
    for (ic, cc) in c.iter().enumerate() {
        for &p in &cc.members {
            class_of[p] = ic;
        }
    }
    let grid = nodes(mode, max_degree(&[&a, &b, &c]));
    for &(x, y) in &grid {
        let (xr, yr) = (int(x), int(y));
        let u = pick(e.left.arg, &xr, &yr);
        let v = pick(e.right.arg, &xr, &yr);
        let pa: Vec<Rational> = a.iter().map(|t| t.poly.eval(&u)).collect();
        let qb: Vec<Rational> = b.iter().map(|t| t.poly.eval(&v)).collect();
        let rc: Vec<Rational> = c.iter().map(|t| t.poly.eval(&(&xr * &yr))).collect();
        let mut weights = Vec::new();
        for (ia, p) in pa.iter().enumerate() {
            for (ib, q) in qb.iter().enumerate() {
                let w = p * q;
                if !w.is_zero() {
                    weights.push((ia, ib, w));
                }
            }
        }
        let den = weights
            .iter()
            .map(|(_, _, w)| w.denom())
            .chain(rc.iter().map(|r| r.denom()))
            .fold(BigInt::one(), |acc, d| acc.lcm(d));
        let scale = |r: &Rational| r.numer() * (&den / r.denom());
        let wi: Vec<(usize, usize, BigInt)> = weights.iter().map(|(ia, ib, w)| (*ia, *ib, scale(w))).collect();
        let ri: Vec<BigInt> = rc.iter().map(scale).collect();
        for p in 0..m {
            let mut lhs = BigInt::zero();
            for (ia, ib, w) in &wi {
                let k = products[*ia][*ib][p];
                if k != 0 {
                    lhs += w * k;
                }
            }
            let rhs = &ri[class_of[p]];
            if &lhs != rhs {
                return Ok((
                    grid.len(),
                    Some(Counterexample {
                        equality: e.to_string(),
                        x,
                        y,
                        perm: g.images(p),
                        lhs: Rational::new(lhs, den.clone()),
                        rhs: Rational::new(rhs.clone(), den),
                    }),
                ));
            }
        }
    }
    Ok((grid.len(), None))
}

fn check_direct(n: usize, e: &Equality, mode: GridMode) -> Result<(usize, Option<Counterexample>)> {
    let g = Group::get(e.result.group(), n)?;
    let a = structure_polynomial(n, e.left.family)?;
    let b = structure_polynomial(n, e.right.family)?;
    let c = structure_polynomial(n, e.result)?;
    let d = [&a, &b, &c].iter().filter_map(|p| p.degree()).max().unwrap_or(0);
    let grid = nodes(mode, d);
    for &(x, y) in &grid {
        let (xr, yr) = (int(x), int(y));
        let lhs = a.eval(&pick(e.left.arg, &xr, &yr)).try_mul(&b.eval(&pick(e.right.arg, &xr, &yr)))?;
        let rhs = c.eval(&(&xr * &yr));
        if lhs != rhs {
            let p = (0..g.order()).find(|&p| lhs.coeff(p) != rhs.coeff(p)).expect("elements differ");
            return Ok((
                grid.len(),
                Some(Counterexample {
                    equality: e.to_string(),
                    x,
                    y,
                    perm: g.images(p),
                    lhs: lhs.coeff(p),
                    rhs: rhs.coeff(p),
                }),
            ));
        }
    }
    Ok((grid.len(), None))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn registry_ids_are_unique() {
        let t = theorems();
        let mut ids: Vec<&str> = t.iter().map(|t| t.id).collect();
        ids.sort();
        ids.dedup();
        assert_eq!(ids.len(), t.len());
        assert!(theorem("nope").is_err());
        for t in &t {
            for e in &t.equalities {
                assert_eq!(e.left.family.group(), t.group);
                assert_eq!(e.right.family.group(), t.group);
            }
        }
    }

    #[test]
    fn ges_and_peakideal_hold_at_three() {
        assert!(verify_identity(3, "ges").unwrap().ok);
        assert!(verify_identity(3, "peakideal_1").unwrap().ok);
    }

    #[test]
    fn phi_times_rho_fails_at_three() {
        let v = verify_identity(3, "phi_times_rho").unwrap();
        assert!(!v.ok && !v.expected);
        let c = v.counterexample.unwrap();
        assert_ne!(c.lhs, c.rhs);
    }

    #[test]
    fn routes_agree() {
        for t in theorems() {
            let n = if t.group == GroupKind::Symmetric { 3 } else { 2 };
            let a = verify_theorem(n, &t, GridMode::Full, Route::Collapsed).unwrap();
            let b = verify_theorem(n, &t, GridMode::Full, Route::Direct).unwrap();
            assert_eq!(a.ok, b.ok, "{}", t.id);
            assert_eq!(a.ok, t.expected, "{}", t.id);
        }
    }

    #[test]
    fn sampled_nodes_are_deterministic() {
        let m = GridMode::Sampled { count: 5, seed: 7, range: 10 };
        assert_eq!(nodes(m, 3), nodes(m, 3));
        assert_eq!(nodes(GridMode::Full, 2).len(), 9);
    }
}
