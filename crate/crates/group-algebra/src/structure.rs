use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use peaklab_arith::{int, rat, Rational, UniPoly};
use peaklab_order::{order_polynomial, OrderPolyKind};
use peaklab_perm::GroupKind;
use serde::Serialize;

use crate::elem::{GAElem, GAPoly};
use crate::family::{classes, ClassFamily, ClassLabel};
use crate::group::Group;
use crate::{AlgebraError, Result};

/// The nine structure polynomials `Σ_π Ω(π; t(x)) π`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum StructureFamily {
    Phi,
    PhiC,
    PhiB,
    PhiBC,
    Rho,
    RhoBar,
    RhoL,
    RhoR,
    RhoB,
}

impl StructureFamily {
    pub const ALL: [StructureFamily; 9] = [
        StructureFamily::Phi,
        StructureFamily::PhiC,
        StructureFamily::PhiB,
        StructureFamily::PhiBC,
        StructureFamily::Rho,
        StructureFamily::RhoBar,
        StructureFamily::RhoL,
        StructureFamily::RhoR,
        StructureFamily::RhoB,
    ];

    pub fn tag(self) -> &'static str {
        match self {
            StructureFamily::Phi => "phi",
            StructureFamily::PhiC => "phi_c",
            StructureFamily::PhiB => "phi_B",
            StructureFamily::PhiBC => "phi_B_c",
            StructureFamily::Rho => "rho",
            StructureFamily::RhoBar => "rho_bar",
            StructureFamily::RhoL => "rho_l",
            StructureFamily::RhoR => "rho_r",
            StructureFamily::RhoB => "rho_B",
        }
    }

    pub fn order_kind(self) -> OrderPolyKind {
        match self {
            StructureFamily::Phi => OrderPolyKind::AOrdinary,
            StructureFamily::PhiC => OrderPolyKind::ACyclic,
            StructureFamily::PhiB => OrderPolyKind::BOrdinary,
            StructureFamily::PhiBC => OrderPolyKind::BCyclic,
            StructureFamily::Rho => OrderPolyKind::EnrichedInterior,
            StructureFamily::RhoBar => OrderPolyKind::EnrichedExterior,
            StructureFamily::RhoL => OrderPolyKind::EnrichedLeft,
            StructureFamily::RhoR => OrderPolyKind::EnrichedRight,
            StructureFamily::RhoB => OrderPolyKind::EnrichedB,
        }
    }

    /// The statistic the order polynomial depends on.
    pub fn class_family(self) -> ClassFamily {
        match self {
            StructureFamily::Phi => ClassFamily::DescentNum,
            StructureFamily::PhiC => ClassFamily::CyclicDescentNum,
            StructureFamily::PhiB => ClassFamily::BDescentNum,
            StructureFamily::PhiBC => ClassFamily::BCyclicDescentNum,
            StructureFamily::Rho => ClassFamily::PeakInteriorNum,
            StructureFamily::RhoBar => ClassFamily::PeakExteriorNum,
            StructureFamily::RhoL => ClassFamily::PeakLeftNum,
            StructureFamily::RhoR => ClassFamily::PeakRightNum,
            StructureFamily::RhoB => ClassFamily::BPeakSignNum,
        }
    }

    pub fn group(self) -> GroupKind {
        self.order_kind().group()
    }

    /// `(a, b)` with `t(x) = a x + b`.
    pub fn substitution(self) -> (Rational, Rational) {
        match self {
            StructureFamily::Phi | StructureFamily::PhiC => (int(1), int(0)),
            StructureFamily::PhiB | StructureFamily::RhoL | StructureFamily::RhoR => (rat(1, 2), rat(-1, 2)),
            StructureFamily::PhiBC | StructureFamily::Rho | StructureFamily::RhoBar => (rat(1, 2), int(0)),
            StructureFamily::RhoB => (rat(1, 4), rat(-1, 4)),
        }
    }
}

impl fmt::Display for StructureFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

impl FromStr for StructureFamily {
    type Err = AlgebraError;
    fn from_str(s: &str) -> Result<Self> {
        Self::ALL.into_iter().find(|f| f.tag() == s).ok_or_else(|| AlgebraError::UnknownFamily(s.to_string()))
    }
}

/// One class of a structure polynomial: its class sum and the substituted
/// order polynomial shared by its members.
#[derive(Clone, Debug, Serialize)]
pub struct ClassTerm {
    pub label: ClassLabel,
    pub poly: UniPoly,
    #[serde(skip)]
    pub members: Vec<usize>,
    #[serde(skip)]
    pub elem: GAElem,
}

fn substituted(group: &Group, family: StructureFamily, i: usize) -> Result<UniPoly> {
    let (a, b) = family.substitution();
    Ok(order_polynomial(&group.element(i), family.order_kind())?.compose_linear(&a, &b))
}

fn group_for(n: usize, family: StructureFamily) -> Result<Arc<Group>> {
    Group::get(family.group(), n)
}

/// The structure polynomial as `Σ_c q_c(x) E_c`, reading each class's
/// polynomial off its representative.
pub fn class_expansion(n: usize, family: StructureFamily) -> Result<Vec<ClassTerm>> {
    let g = group_for(n, family)?;
    classes(&g, family.class_family())?
        .into_iter()
        .map(|c| {
            Ok(ClassTerm {
                poly: substituted(&g, family, c.representative())?,
                elem: c.sum(&g),
                label: c.label,
                members: c.members,
            })
        })
        .collect()
}

/// `Σ_π Ω(π; t(x)) π`, summed element by element.
pub fn structure_polynomial(n: usize, family: StructureFamily) -> Result<GAPoly> {
    let g = group_for(n, family)?;
    let mut coeffs: Vec<Vec<(usize, Rational)>> = Vec::new();
    for i in 0..g.order() {
        for (p, c) in substituted(&g, family, i)?.into_coeffs().into_iter().enumerate() {
            if coeffs.len() <= p {
                coeffs.resize_with(p + 1, Vec::new);
            }
            coeffs[p].push((i, c));
        }
    }
    GAPoly::new(&g, coeffs.into_iter().map(|t| GAElem::from_terms(&g, t)).collect())
}

/// The coefficients `e_0, ..., e_d` of the structure polynomial, indexed by
/// power of `x`, recovered by interpolating its values at `x = 1, ..., d+1`.
pub fn idempotents(n: usize, family: StructureFamily) -> Result<Vec<GAElem>> {
    let g = group_for(n, family)?;
    let terms = class_expansion(n, family)?;
    let d = terms.iter().filter_map(|t| t.poly.degree()).max().unwrap_or(0);
    let points: Vec<(Rational, GAElem)> = (1..=d as i64 + 1)
        .map(|x| {
            let x = int(x);
            let v = terms.iter().fold(GAElem::zero(&g), |acc, t| &acc + &t.elem.scale(&t.poly.eval(&x)));
            (x, v)
        })
        .collect();
    let poly = GAPoly::interpolate(&g, &points)?;
    Ok((0..=d).map(|p| poly.coeff(p)).collect())
}
