use std::fmt;

use serde::Serialize;

use crate::{parse_ints, GroupElement, GroupKind, Permutation, Result, SignedPermutation};

/// Either kind of permutation, as read from user input.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(untagged)]
pub enum AnyPermutation {
    Symmetric(Permutation),
    Signed(SignedPermutation),
}

impl AnyPermutation {
    /// Parses `"[2,1,3]"`; any negative entry, or `signed = true`, yields a
    /// signed permutation.
    pub fn parse(s: &str, signed: bool) -> Result<Self> {
        let v = parse_ints(s)?;
        if signed || v.iter().any(|&x| x < 0) {
            Ok(AnyPermutation::Signed(SignedPermutation::new(v)?))
        } else {
            Ok(AnyPermutation::Symmetric(Permutation::from_images_i32(&v)?))
        }
    }

    pub fn kind(&self) -> GroupKind {
        match self {
            AnyPermutation::Symmetric(_) => GroupKind::Symmetric,
            AnyPermutation::Signed(_) => GroupKind::Hyperoctahedral,
        }
    }

    pub fn n(&self) -> usize {
        match self {
            AnyPermutation::Symmetric(p) => p.n(),
            AnyPermutation::Signed(p) => p.n(),
        }
    }
}

impl fmt::Display for AnyPermutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AnyPermutation::Symmetric(p) => p.fmt(f),
            AnyPermutation::Signed(p) => p.fmt(f),
        }
    }
}

impl From<Permutation> for AnyPermutation {
    fn from(p: Permutation) -> Self {
        AnyPermutation::Symmetric(p)
    }
}

impl From<SignedPermutation> for AnyPermutation {
    fn from(p: SignedPermutation) -> Self {
        AnyPermutation::Signed(p)
    }
}
