use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use peaklab_perm::stats;
use serde::Serialize;

use crate::elem::GAElem;
use crate::group::{Elements, Group};
use crate::linalg::span_rank;
use crate::{AlgebraError, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Refinement {
    /// `F_i^±`: signed permutations with `i` cyclic descents, split by the sign of `π(n)`.
    TypeB,
    /// `F_i^1, F_i^0`: permutations with `i-1` interior peaks, split by whether 1 is a descent.
    TypeA,
}

impl Refinement {
    pub fn tag(self) -> &'static str {
        match self {
            Refinement::TypeB => "typeB_F",
            Refinement::TypeA => "typeA_F",
        }
    }
}

impl fmt::Display for Refinement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

impl FromStr for Refinement {
    type Err = AlgebraError;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "typeB_F" => Ok(Refinement::TypeB),
            "typeA_F" => Ok(Refinement::TypeA),
            _ => Err(AlgebraError::UnknownFamily(s.to_string())),
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct Named {
    pub name: String,
    pub elem: GAElem,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Relation {
    pub statement: String,
    pub holds: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct RefinedDecomposition {
    pub which: &'static str,
    pub n: usize,
    pub pieces: Vec<Named>,
    pub relations: Vec<Relation>,
    /// Rank of the nonzero pieces, which should equal their number.
    pub rank: usize,
    pub nonzero_pieces: usize,
}

impl RefinedDecomposition {
    pub fn all_hold(&self) -> bool {
        self.relations.iter().all(|r| r.holds) && self.rank == self.nonzero_pieces
    }
}

fn sum_where(g: &Arc<Group>, pred: impl Fn(usize) -> bool) -> GAElem {
    GAElem::sum_of(g, (0..g.order()).filter(|&i| pred(i)))
}

fn rel(statement: String, lhs: &GAElem, rhs: &GAElem) -> Relation {
    Relation { statement, holds: lhs == rhs }
}

pub fn refined_decomposition(n: usize, which: Refinement) -> Result<RefinedDecomposition> {
    match which {
        Refinement::TypeB => type_b(n),
        Refinement::TypeA => type_a(n),
    }
}

fn type_b(n: usize) -> Result<RefinedDecomposition> {
    let g = Group::hyperoctahedral(n)?;
    let Elements::Hyperoctahedral(e) = &g.elems else { unreachable!() };
    // plus[i], minus[i] for i in 0..=n; index 0 is always zero
    let f =
        |i: usize, positive: bool| sum_where(&g, |p| stats::cdes_b(&e[p]) == i && (e[p].at(n as i32) > 0) == positive);
    let plus: Vec<GAElem> = (0..=n + 1).map(|i| f(i, true)).collect();
    let minus: Vec<GAElem> = (0..=n + 1).map(|i| f(i, false)).collect();
    let eb = |i: usize| sum_where(&g, |p| stats::des_b(&e[p]) + 1 == i);
    let ebc = |i: usize| sum_where(&g, |p| stats::cdes_b(&e[p]) == i);
    let mut relations = vec![
        rel("E_B,1 = F_1^+".into(), &eb(1), &plus[1]),
        rel(format!("E_B,{} = F_{n}^-", n + 1), &eb(n + 1), &minus[n]),
    ];
    for i in 2..=n {
        relations.push(rel(format!("E_B,{i} = F_{}^- + F_{i}^+", i - 1), &eb(i), &(&minus[i - 1] + &plus[i])));
    }
    for i in 1..=n {
        relations.push(rel(format!("E^c_B,{i} = F_{i}^- + F_{i}^+"), &ebc(i), &(&minus[i] + &plus[i])));
    }
    let mut pieces = Vec::new();
    for i in 1..=n {
        pieces.push(Named { name: format!("F_{i}^-"), elem: minus[i].clone() });
        pieces.push(Named { name: format!("F_{i}^+"), elem: plus[i].clone() });
    }
    finish("typeB_F", n, pieces, relations)
}

fn type_a(n: usize) -> Result<RefinedDecomposition> {
    let g = Group::symmetric(n)?;
    let Elements::Symmetric(e) = &g.elems else { unreachable!() };
    let top = (n + 1) / 2;
    let f = |i: usize, one: bool| {
        if i == 0 {
            return GAElem::zero(&g);
        }
        sum_where(&g, |p| stats::pe(&e[p]) + 1 == i && stats::descent_set(&e[p]).contains(1) == one)
    };
    let f1: Vec<GAElem> = (0..=top + 1).map(|i| f(i, true)).collect();
    let f0: Vec<GAElem> = (0..=top + 1).map(|i| f(i, false)).collect();
    let el = |i: usize| sum_where(&g, |p| stats::lpe(&e[p]) + 1 == i);
    let ep = |i: usize| sum_where(&g, |p| stats::pe(&e[p]) + 1 == i);
    let last = n / 2 + 1;
    let mut relations = vec![rel("E^l_1 = F_1^0".into(), &el(1), &f0[1])];
    if n % 2 == 0 {
        relations.push(rel(format!("E^l_{last} = F_{}^1", n / 2), &el(last), &f1[n / 2]));
    } else {
        relations.push(rel(
            format!("E^l_{last} = F_{}^1 + F_{}^0", (n - 1) / 2, (n + 1) / 2),
            &el(last),
            &(&f1[(n - 1) / 2] + &f0[(n + 1) / 2]),
        ));
    }
    for i in 2..last {
        relations.push(rel(format!("E^l_{i} = F_{}^1 + F_{i}^0", i - 1), &el(i), &(&f1[i - 1] + &f0[i])));
    }
    for i in 1..=top {
        relations.push(rel(format!("E'_{i} = F_{i}^1 + F_{i}^0"), &ep(i), &(&f1[i] + &f0[i])));
    }
    let mut pieces = Vec::new();
    for i in 1..=top {
        pieces.push(Named { name: format!("F_{i}^1"), elem: f1[i].clone() });
        pieces.push(Named { name: format!("F_{i}^0"), elem: f0[i].clone() });
    }
    finish("typeA_F", n, pieces, relations)
}

fn finish(which: &'static str, n: usize, pieces: Vec<Named>, relations: Vec<Relation>) -> Result<RefinedDecomposition> {
    let nonzero: Vec<GAElem> = pieces.iter().filter(|p| !p.elem.is_zero()).map(|p| p.elem.clone()).collect();
    Ok(RefinedDecomposition { which, n, rank: span_rank(&nonzero)?, nonzero_pieces: nonzero.len(), pieces, relations })
}
