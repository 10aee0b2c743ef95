use peaklab_algebra::{structure_constants, ClassFamily, StructureConstants};
use serde::Serialize;

use crate::{QsymError, Result};

/// The four coproducts: `a` on `F_K`, `c` on interior `K_U`, `d` on left
/// `K_{(0,U)}` and `b` on sign-peak `K_{U'}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum CoalgebraFamily {
    A,
    C,
    D,
    B,
}

impl CoalgebraFamily {
    pub const ALL: [CoalgebraFamily; 4] =
        [CoalgebraFamily::A, CoalgebraFamily::C, CoalgebraFamily::D, CoalgebraFamily::B];

    pub fn tag(self) -> &'static str {
        match self {
            CoalgebraFamily::A => "a",
            CoalgebraFamily::C => "c",
            CoalgebraFamily::D => "d",
            CoalgebraFamily::B => "b",
        }
    }

    pub fn parse(s: &str) -> Result<Self> {
        Self::ALL.into_iter().find(|f| f.tag() == s).ok_or_else(|| QsymError::UnknownTag(s.to_string()))
    }

    /// The class statistic whose factorization counts are the constants.
    pub fn class_family(self) -> ClassFamily {
        match self {
            CoalgebraFamily::A => ClassFamily::DescentSet,
            CoalgebraFamily::C => ClassFamily::PeakInteriorSet,
            CoalgebraFamily::D => ClassFamily::PeakLeftSet,
            CoalgebraFamily::B => ClassFamily::BPeakSignSet,
        }
    }
}

/// Factorization counts `N^K_{I,J}`; the coproduct sends the basis element
/// of `K` to `Σ N^K_{I,J} (I ⊗ J)`.
pub fn coalgebra_constants(n: usize, family: CoalgebraFamily) -> Result<StructureConstants> {
    Ok(structure_constants(n, family.class_family())?)
}
