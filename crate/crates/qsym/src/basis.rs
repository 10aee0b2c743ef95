use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Zero};
use peaklab_arith::{int, Rational};
use peaklab_perm::PosSet;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::expand::{k_function, ExpansionBasis};
use crate::peaks::SignPeakSet;
use crate::{QsymError, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Basis {
    /// Type A monomial, indexed by subsets of `[1, n-1]`.
    M,
    /// Type A fundamental.
    F,
    /// Type B monomial, indexed by subsets of `[0, n-1]`.
    N,
    /// Type B fundamental.
    L,
    /// Interior peak functions `K_S`.
    #[serde(rename = "K_A")]
    KA,
    /// Sign-peak functions `K_{S'}`.
    #[serde(rename = "K_B")]
    KB,
}

impl Basis {
    pub const ALL: [Basis; 6] = [Basis::M, Basis::F, Basis::N, Basis::L, Basis::KA, Basis::KB];

    pub fn tag(self) -> &'static str {
        match self {
            Basis::M => "M",
            Basis::F => "F",
            Basis::N => "N",
            Basis::L => "L",
            Basis::KA => "K_A",
            Basis::KB => "K_B",
        }
    }

    pub fn parse(s: &str) -> Result<Self> {
        Basis::ALL.into_iter().find(|b| b.tag() == s).ok_or_else(|| QsymError::UnknownTag(s.to_string()))
    }

    /// Whether the basis lives in the type B (`z_0, z_1, ...`) ring.
    pub fn is_type_b(self) -> bool {
        matches!(self, Basis::N | Basis::L | Basis::KB)
    }

    /// The positions a set index may use.
    pub fn universe(self, n: usize) -> PosSet {
        if self.is_type_b() {
            PosSet::interval(0, n.saturating_sub(1))
        } else {
            PosSet::interval(1, n.saturating_sub(1))
        }
    }

    pub fn is_valid(self, n: usize, idx: &QIndex) -> bool {
        match (self, idx) {
            (Basis::KB, QIndex::SignPeak(s)) => s.is_valid(n),
            (Basis::KA, QIndex::Set(s)) => s.is_subset(PosSet::interval(2, n.saturating_sub(1))) && s.is_sparse(),
            (Basis::M | Basis::F | Basis::N | Basis::L, QIndex::Set(s)) => s.is_subset(self.universe(n)),
            _ => false,
        }
    }
}

impl fmt::Display for Basis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

/// A basis index: a position set, or a sign-peak pair for `K_B`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(untagged)]
pub enum QIndex {
    Set(PosSet),
    SignPeak(SignPeakSet),
}

impl fmt::Display for QIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            QIndex::Set(s) => s.fmt(f),
            QIndex::SignPeak(s) => s.fmt(f),
        }
    }
}

/// A homogeneous degree-`n` element written in one basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QsymExpansion {
    pub n: usize,
    pub basis: Basis,
    coeffs: BTreeMap<QIndex, Rational>,
}

impl QsymExpansion {
    pub fn zero(n: usize, basis: Basis) -> Self {
        QsymExpansion { n, basis, coeffs: BTreeMap::new() }
    }

    /// The single basis element at `idx`.
    pub fn basis_element(n: usize, basis: Basis, idx: QIndex) -> Result<Self> {
        let mut e = Self::zero(n, basis);
        e.add(idx, Rational::one())?;
        Ok(e)
    }

    pub fn add(&mut self, idx: QIndex, c: Rational) -> Result<()> {
        if !self.basis.is_valid(self.n, &idx) {
            return Err(QsymError::InvalidIndex { basis: self.basis.tag(), n: self.n, index: idx.to_string() });
        }
        if c.is_zero() {
            return Ok(());
        }
        let slot = self.coeffs.entry(idx).or_insert_with(Rational::zero);
        *slot += c;
        if slot.is_zero() {
            self.coeffs.remove(&idx);
        }
        Ok(())
    }

    pub fn coeff(&self, idx: &QIndex) -> Rational {
        self.coeffs.get(idx).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn terms(&self) -> &BTreeMap<QIndex, Rational> {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    fn same_ring(&self, o: &Self) -> Result<()> {
        if self.n != o.n || self.basis.is_type_b() != o.basis.is_type_b() {
            return Err(QsymError::WrongGroup(format!(
                "cannot combine {} at n = {} with {} at n = {}",
                self.basis, self.n, o.basis, o.n
            )));
        }
        Ok(())
    }

    fn accumulate(&mut self, other: &Self, scale: &Rational) -> Result<()> {
        for (idx, c) in &other.coeffs {
            self.add(*idx, c * scale)?;
        }
        Ok(())
    }

    /// Rewrites in `M` (type A) or `N` (type B).
    pub fn to_monomial(&self) -> Result<Self> {
        let target = if self.basis.is_type_b() { Basis::N } else { Basis::M };
        let mut out = Self::zero(self.n, target);
        let universe = target.universe(self.n);
        for (idx, c) in &self.coeffs {
            match (self.basis, idx) {
                (Basis::M | Basis::N, _) => out.add(*idx, c.clone())?,
                (Basis::F | Basis::L, QIndex::Set(s)) => {
                    for t in universe.difference(*s).subsets() {
                        out.add(QIndex::Set(s.union(t)), c.clone())?;
                    }
                }
                _ => out.accumulate(&k_function(self.n, *idx, ExpansionBasis::Monomial)?, c)?,
            }
        }
        Ok(out)
    }

    /// Rewrites in `F` (type A) or `L` (type B).
    pub fn to_fundamental(&self) -> Result<Self> {
        let target = if self.basis.is_type_b() { Basis::L } else { Basis::F };
        let mut out = Self::zero(self.n, target);
        let universe = target.universe(self.n);
        for (idx, c) in &self.coeffs {
            match (self.basis, idx) {
                (Basis::F | Basis::L, _) => out.add(*idx, c.clone())?,
                (Basis::M | Basis::N, QIndex::Set(s)) => {
                    for t in universe.difference(*s).subsets() {
                        let sign = if t.len() % 2 == 0 { int(1) } else { int(-1) };
                        out.add(QIndex::Set(s.union(t)), c * sign)?;
                    }
                }
                _ => out.accumulate(&k_function(self.n, *idx, ExpansionBasis::Fundamental)?, c)?,
            }
        }
        Ok(out)
    }

    /// Equality as elements of the ring, regardless of basis.
    pub fn same_element(&self, o: &Self) -> Result<bool> {
        self.same_ring(o)?;
        Ok(self.to_monomial()? == o.to_monomial()?)
    }
}

#[derive(Serialize, Deserialize)]
struct WireTerm {
    set: QIndex,
    #[serde(with = "peaklab_arith::rational::serde_str")]
    coeff: Rational,
}

#[derive(Serialize, Deserialize)]
struct Wire {
    basis: Basis,
    n: usize,
    terms: Vec<WireTerm>,
}

impl Serialize for QsymExpansion {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let terms = self.coeffs.iter().map(|(set, coeff)| WireTerm { set: *set, coeff: coeff.clone() }).collect();
        Wire { basis: self.basis, n: self.n, terms }.serialize(s)
    }
}

impl<'de> Deserialize<'de> for QsymExpansion {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error;
        let w = Wire::deserialize(d)?;
        let mut e = QsymExpansion::zero(w.n, w.basis);
        for t in w.terms {
            e.add(t.set, t.coeff).map_err(D::Error::custom)?;
        }
        Ok(e)
    }
}
