//! Permutations of `[n]`, signed permutations of `±[n]`, and the descent and
//! peak statistics defined on them.
//!
//! Composition is function composition: `(s.compose(t))(i) = s(t(i))`.

mod any;
mod perm;
mod posset;
mod signed;
pub mod stats;

pub use any::AnyPermutation;
pub use perm::Permutation;
pub use posset::PosSet;
pub use signed::SignedPermutation;
pub use stats::StatResult;

use std::fmt::{Debug, Display};
use std::hash::Hash;
use thiserror::Error;

/// Default upper bound on `n` when listing all of `S_n`.
pub const MAX_SYMMETRIC_N: usize = 8;
/// Default upper bound on `n` when listing all of `B_n`.
pub const MAX_HYPEROCTAHEDRAL_N: usize = 6;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PermError {
    #[error("not a valid permutation: {0}")]
    Invalid(String),
    #[error("size mismatch: {left} vs {right}")]
    SizeMismatch { left: usize, right: usize },
    #[error("{group} with n = {n} exceeds the size guard n <= {limit}")]
    Guard { group: GroupKind, n: usize, limit: usize },
    #[error("cannot parse permutation from {0:?}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, PermError>;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum GroupKind {
    Symmetric,
    Hyperoctahedral,
}

impl GroupKind {
    /// One-letter tag used in JSON: `"S"` or `"B"`.
    pub fn tag(self) -> &'static str {
        match self {
            GroupKind::Symmetric => "S",
            GroupKind::Hyperoctahedral => "B",
        }
    }

    pub fn default_limit(self) -> usize {
        match self {
            GroupKind::Symmetric => MAX_SYMMETRIC_N,
            GroupKind::Hyperoctahedral => MAX_HYPEROCTAHEDRAL_N,
        }
    }

    /// Group order: `n!` or `2^n n!`.
    pub fn order(self, n: usize) -> usize {
        let f: usize = (1..=n).product();
        match self {
            GroupKind::Symmetric => f,
            GroupKind::Hyperoctahedral => f << n,
        }
    }
}

impl Display for GroupKind {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            GroupKind::Symmetric => write!(f, "S_n"),
            GroupKind::Hyperoctahedral => write!(f, "B_n"),
        }
    }
}

/// What the group-algebra layer needs from a group element.
pub trait GroupElement: Clone + Eq + Ord + Hash + Debug + Display + Send + Sync + 'static {
    const KIND: GroupKind;

    fn n(&self) -> usize;
    fn identity(n: usize) -> Self;
    /// `self ∘ other`; panics if sizes differ.
    fn compose_unchecked(&self, other: &Self) -> Self;
    fn inverse(&self) -> Self;
    /// Index of `self` in the deterministic listing returned by `elements`.
    fn rank(&self) -> usize;
    /// Every element of the group, lexicographic on one-line images.
    fn elements_unguarded(n: usize) -> Vec<Self>;
    /// Signed one-line images.
    fn images_i32(&self) -> Vec<i32>;
    fn from_images_i32(images: &[i32]) -> Result<Self>;

    /// `elements_unguarded` behind the default size guard.
    fn elements(n: usize) -> Result<Vec<Self>> {
        Self::elements_guarded(n, Self::KIND.default_limit())
    }

    fn elements_guarded(n: usize, limit: usize) -> Result<Vec<Self>> {
        if n > limit {
            return Err(PermError::Guard { group: Self::KIND, n, limit });
        }
        Ok(Self::elements_unguarded(n))
    }

    fn try_compose(&self, other: &Self) -> Result<Self> {
        if self.n() != other.n() {
            return Err(PermError::SizeMismatch { left: self.n(), right: other.n() });
        }
        Ok(self.compose_unchecked(other))
    }
}

/// Splits `"[2,-1,3]"` (brackets and spaces optional) into integers.
pub(crate) fn parse_ints(s: &str) -> Result<Vec<i32>> {
    let t = s.trim();
    let t = t.strip_prefix('[').unwrap_or(t);
    let t = t.strip_suffix(']').unwrap_or(t).trim();
    if t.is_empty() {
        return Ok(Vec::new());
    }
    t.split(',').map(|x| x.trim().parse::<i32>().map_err(|_| PermError::Parse(s.to_string()))).collect()
}

pub(crate) fn fmt_ints(v: &[i32], f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
    write!(f, "[")?;
    for (i, x) in v.iter().enumerate() {
        if i > 0 {
            write!(f, ",")?;
        }
        write!(f, "{x}")?;
    }
    write!(f, "]")
}
