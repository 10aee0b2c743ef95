use peaklab_arith::int;
use peaklab_perm::stats::{descent_set, peak_set, sign_stat, signed_descent_set, signed_peak_set, PeakKind};
use peaklab_perm::{AnyPermutation, PosSet};

use crate::basis::{Basis, QIndex, QsymExpansion};
use crate::peaks::SignPeakSet;
use crate::{QsymError, Result};

/// Which enriched generating function: `Δ(π)`, `Δ^(ℓ)(π)` or `Δ_B(π)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Flavor {
    Interior,
    Left,
    B,
}

impl Flavor {
    pub const ALL: [Flavor; 3] = [Flavor::Interior, Flavor::Left, Flavor::B];

    pub fn tag(self) -> &'static str {
        match self {
            Flavor::Interior => "interior",
            Flavor::Left => "left",
            Flavor::B => "B",
        }
    }

    pub fn parse(s: &str) -> Result<Self> {
        Flavor::ALL.into_iter().find(|f| f.tag() == s).ok_or_else(|| QsymError::UnknownTag(s.to_string()))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ExpansionBasis {
    Monomial,
    Fundamental,
}

impl ExpansionBasis {
    pub fn parse(s: &str) -> Result<Self> {
        match s {
            "monomial" => Ok(ExpansionBasis::Monomial),
            "fundamental" => Ok(ExpansionBasis::Fundamental),
            _ => Err(QsymError::UnknownTag(s.to_string())),
        }
    }
}

fn pow2(k: usize) -> peaklab_arith::Rational {
    int(1i64 << k)
}

/// `K_S` (set index) or `K_{S'}` (sign-peak index) in the monomial or
/// fundamental basis of its ring.
pub fn k_function(n: usize, idx: QIndex, basis: ExpansionBasis) -> Result<QsymExpansion> {
    match idx {
        QIndex::Set(peaks) => {
            if !Basis::KA.is_valid(n, &idx) {
                return Err(QsymError::InvalidIndex { basis: "K_A", n, index: idx.to_string() });
            }
            let universe = Basis::M.universe(n);
            match basis {
                ExpansionBasis::Monomial => {
                    let mut e = QsymExpansion::zero(n, Basis::M);
                    for s in universe.subsets() {
                        if peaks.is_subset(s.union(s.shifted())) {
                            e.add(QIndex::Set(s), pow2(s.len() + 1))?;
                        }
                    }
                    Ok(e)
                }
                ExpansionBasis::Fundamental => {
                    let mut e = QsymExpansion::zero(n, Basis::F);
                    for d in universe.subsets() {
                        if peaks.is_subset(d.symmetric_difference(d.shifted())) {
                            e.add(QIndex::Set(d), pow2(peaks.len() + 1))?;
                        }
                    }
                    Ok(e)
                }
            }
        }
        QIndex::SignPeak(sp) => {
            if !sp.is_valid(n) {
                return Err(QsymError::InvalidIndex { basis: "K_B", n, index: idx.to_string() });
            }
            let universe = Basis::N.universe(n);
            let sign_ok = |s: PosSet| sp.sign == 0 || s.contains(0);
            match basis {
                ExpansionBasis::Monomial => {
                    let mut e = QsymExpansion::zero(n, Basis::N);
                    for s in universe.subsets() {
                        if sign_ok(s) && sp.peaks.is_subset(s.union(s.shifted())) {
                            e.add(QIndex::Set(s), pow2(s.len()))?;
                        }
                    }
                    Ok(e)
                }
                ExpansionBasis::Fundamental => {
                    let mut e = QsymExpansion::zero(n, Basis::L);
                    for d in universe.subsets() {
                        if sign_ok(d) && sp.peaks.is_subset(d.symmetric_difference(d.shifted())) {
                            e.add(QIndex::Set(d), pow2(sp.peaks.len() + sp.sign as usize))?;
                        }
                    }
                    Ok(e)
                }
            }
        }
    }
}

/// The peak index that `Δ`, `Δ^(ℓ)` or `Δ_B` of `pi` depends on.
pub(crate) fn peak_index(pi: &AnyPermutation, flavor: Flavor) -> Result<QIndex> {
    match (flavor, pi) {
        (Flavor::Interior, AnyPermutation::Symmetric(p)) => Ok(QIndex::Set(peak_set(p, PeakKind::Interior))),
        (Flavor::Left, AnyPermutation::Symmetric(p)) => {
            Ok(QIndex::SignPeak(SignPeakSet { sign: 0, peaks: peak_set(p, PeakKind::Left) }))
        }
        (Flavor::B, AnyPermutation::Signed(p)) => {
            Ok(QIndex::SignPeak(SignPeakSet { sign: sign_stat(p) as u8, peaks: signed_peak_set(p) }))
        }
        _ => Err(QsymError::WrongGroup(format!("flavor {} does not apply to {pi}", flavor.tag()))),
    }
}

/// `Δ(π)`, `Δ^(ℓ)(π)` or `Δ_B(π)` expanded in the monomial or fundamental basis.
pub fn delta_expansion(pi: &AnyPermutation, flavor: Flavor, basis: ExpansionBasis) -> Result<QsymExpansion> {
    k_function(pi.n(), peak_index(pi, flavor)?, basis)
}

/// `Γ(π) = F_{Des(π)}`, or `L_{Des_B(π)}` for a signed permutation.
pub fn gamma_expansion(pi: &AnyPermutation, basis: ExpansionBasis) -> Result<QsymExpansion> {
    let f = match pi {
        AnyPermutation::Symmetric(p) => {
            QsymExpansion::basis_element(p.images().len(), Basis::F, QIndex::Set(descent_set(p)))?
        }
        AnyPermutation::Signed(p) => {
            QsymExpansion::basis_element(pi.n(), Basis::L, QIndex::Set(signed_descent_set(p)))?
        }
    };
    match basis {
        ExpansionBasis::Fundamental => Ok(f),
        ExpansionBasis::Monomial => f.to_monomial(),
    }
}
