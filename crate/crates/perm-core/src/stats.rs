//! Descent, cyclic descent and peak statistics.
//!
//! Boundary values use the sentinels `π(0) = π(n+1) = 0`.

use serde::{Deserialize, Serialize};

use crate::{Permutation, PosSet, SignedPermutation};

/// A position set together with its size.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct StatResult {
    pub set: PosSet,
    pub count: usize,
}

impl From<PosSet> for StatResult {
    fn from(set: PosSet) -> Self {
        StatResult { set, count: set.len() }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum DescentKind {
    Linear,
    Cyclic,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum PeakKind {
    /// `1 < i < n`
    Interior,
    /// `1 <= i < n`
    Left,
    /// `1 < i <= n`
    Right,
    /// `1 <= i <= n`
    Exterior,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum SignedKind {
    Descent,
    CyclicDescent,
    Peak,
    Sign,
}

/// `{ i in [1, n-1] : π(i) > π(i+1) }`.
pub fn descent_set(p: &Permutation) -> PosSet {
    let n = p.images().len();
    (1..n).filter(|&i| p.at(i) > p.at(i + 1)).collect()
}

/// Descent set plus `n` when `π(n) > π(1)`.
pub fn cyclic_descent_set(p: &Permutation) -> PosSet {
    let n = p.images().len();
    let mut s = descent_set(p);
    if n >= 1 && p.at(n) > p.at(1) {
        s.insert(n);
    }
    s
}

pub fn descent_stat(p: &Permutation, kind: DescentKind) -> StatResult {
    match kind {
        DescentKind::Linear => descent_set(p),
        DescentKind::Cyclic => cyclic_descent_set(p),
    }
    .into()
}

pub fn peak_set(p: &Permutation, kind: PeakKind) -> PosSet {
    let n = p.images().len();
    let (lo, hi) = match kind {
        PeakKind::Interior => (2, n.saturating_sub(1)),
        PeakKind::Left => (1, n.saturating_sub(1)),
        PeakKind::Right => (2, n),
        PeakKind::Exterior => (1, n),
    };
    (lo..=hi).filter(|&i| p.at(i - 1) < p.at(i) && p.at(i) > p.at(i + 1)).collect()
}

pub fn peak_stat(p: &Permutation, kind: PeakKind) -> StatResult {
    peak_set(p, kind).into()
}

/// `{ i in [0, n-1] : π(i) > π(i+1) }` with `π(0) = 0`.
pub fn signed_descent_set(p: &SignedPermutation) -> PosSet {
    let n = p.images().len() as i32;
    (0..n).filter(|&i| p.at(i) > p.at(i + 1)).map(|i| i as usize).collect()
}

/// Signed descents plus `n` when `π(n) > 0`.
pub fn signed_cyclic_descent_set(p: &SignedPermutation) -> PosSet {
    let n = p.images().len();
    let mut s = signed_descent_set(p);
    if n >= 1 && p.at(n as i32) > 0 {
        s.insert(n);
    }
    s
}

/// Peaks at positions `1..n-1` with `π(0) = 0`.
pub fn signed_peak_set(p: &SignedPermutation) -> PosSet {
    let n = p.images().len() as i32;
    (1..n).filter(|&i| p.at(i - 1) < p.at(i) && p.at(i) > p.at(i + 1)).map(|i| i as usize).collect()
}

/// `ς(π)`: 1 when `π(1) < 0`, else 0.
pub fn sign_stat(p: &SignedPermutation) -> usize {
    usize::from(p.images().first().is_some_and(|&x| x < 0))
}

pub fn signed_stat(p: &SignedPermutation, kind: SignedKind) -> StatResult {
    match kind {
        SignedKind::Descent => signed_descent_set(p).into(),
        SignedKind::CyclicDescent => signed_cyclic_descent_set(p).into(),
        SignedKind::Peak => signed_peak_set(p).into(),
        SignedKind::Sign => {
            let c = sign_stat(p);
            let set = if c == 1 { PosSet::EMPTY.with(1) } else { PosSet::EMPTY };
            StatResult { set, count: c }
        }
    }
}

pub fn des(p: &Permutation) -> usize {
    descent_set(p).len()
}

pub fn cdes(p: &Permutation) -> usize {
    cyclic_descent_set(p).len()
}

pub fn pe(p: &Permutation) -> usize {
    peak_set(p, PeakKind::Interior).len()
}

pub fn lpe(p: &Permutation) -> usize {
    peak_set(p, PeakKind::Left).len()
}

pub fn rpe(p: &Permutation) -> usize {
    peak_set(p, PeakKind::Right).len()
}

pub fn epe(p: &Permutation) -> usize {
    peak_set(p, PeakKind::Exterior).len()
}

pub fn des_b(p: &SignedPermutation) -> usize {
    signed_descent_set(p).len()
}

pub fn cdes_b(p: &SignedPermutation) -> usize {
    signed_cyclic_descent_set(p).len()
}

pub fn pe_b(p: &SignedPermutation) -> usize {
    signed_peak_set(p).len()
}
