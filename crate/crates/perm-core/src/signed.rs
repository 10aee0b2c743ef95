use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::{fmt_ints, parse_ints, GroupElement, GroupKind, PermError, Result};

/// A signed permutation `(π(1), ..., π(n))` of `±[n]`.
///
/// Only the positive half is stored; `π(-i) = -π(i)` and `π(0) = 0`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SignedPermutation {
    images: Vec<i32>,
}

impl SignedPermutation {
    pub fn new(images: Vec<i32>) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n + 1];
        for &x in &images {
            let a = x.unsigned_abs() as usize;
            if a == 0 || a > n || seen[a] {
                return Err(PermError::Invalid(format!("{images:?}")));
            }
            seen[a] = true;
        }
        Ok(SignedPermutation { images })
    }

    pub fn images(&self) -> &[i32] {
        &self.images
    }

    /// `π(i)` for any `i` in `-n..=n`; `π(0) = 0`.
    pub fn at(&self, i: i32) -> i32 {
        match i {
            0 => 0,
            i if i > 0 => self.images[i as usize - 1],
            i => -self.images[(-i) as usize - 1],
        }
    }

    pub fn compose(&self, other: &Self) -> Result<Self> {
        self.try_compose(other)
    }

    /// Number of negative images.
    pub fn neg_count(&self) -> usize {
        self.images.iter().filter(|&&x| x < 0).count()
    }
}

impl GroupElement for SignedPermutation {
    const KIND: GroupKind = GroupKind::Hyperoctahedral;

    fn n(&self) -> usize {
        self.images.len()
    }

    fn identity(n: usize) -> Self {
        SignedPermutation { images: (1..=n as i32).collect() }
    }

    fn compose_unchecked(&self, other: &Self) -> Self {
        assert_eq!(self.n(), other.n(), "size mismatch");
        SignedPermutation { images: other.images.iter().map(|&j| self.at(j)).collect() }
    }

    fn inverse(&self) -> Self {
        let mut v = vec![0; self.n()];
        for (i, &x) in self.images.iter().enumerate() {
            let i = i as i32 + 1;
            v[x.unsigned_abs() as usize - 1] = if x > 0 { i } else { -i };
        }
        SignedPermutation { images: v }
    }

    fn rank(&self) -> usize {
        // lexicographic on the integer tuple: at each step the remaining
        // candidates are ±a for each unused a, sorted as integers
        let n = self.n();
        let mut used = vec![false; n + 1];
        let mut r = 0;
        for (i, &x) in self.images.iter().enumerate() {
            let below = (1..=n as i32).filter(|&a| !used[a as usize]).flat_map(|a| [a, -a]).filter(|&c| c < x).count();
            let rest = n - i - 1;
            r += below * GroupKind::Hyperoctahedral.order(rest);
            used[x.unsigned_abs() as usize] = true;
        }
        r
    }

    fn elements_unguarded(n: usize) -> Vec<Self> {
        fn rec(n: i32, cur: &mut Vec<i32>, used: &mut [bool], out: &mut Vec<SignedPermutation>) {
            if cur.len() == n as usize {
                out.push(SignedPermutation { images: cur.clone() });
                return;
            }
            for v in (-n..=n).filter(|&v| v != 0) {
                let a = v.unsigned_abs() as usize;
                if !used[a] {
                    used[a] = true;
                    cur.push(v);
                    rec(n, cur, used, out);
                    cur.pop();
                    used[a] = false;
                }
            }
        }
        let mut out = Vec::with_capacity(GroupKind::Hyperoctahedral.order(n));
        rec(n as i32, &mut Vec::new(), &mut vec![false; n + 1], &mut out);
        out
    }

    fn images_i32(&self) -> Vec<i32> {
        self.images.clone()
    }

    fn from_images_i32(images: &[i32]) -> Result<Self> {
        Self::new(images.to_vec())
    }
}

impl FromStr for SignedPermutation {
    type Err = PermError;
    fn from_str(s: &str) -> Result<Self> {
        Self::new(parse_ints(s)?)
    }
}

impl fmt::Display for SignedPermutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt_ints(&self.images, f)
    }
}

impl fmt::Debug for SignedPermutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl Serialize for SignedPermutation {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.images.serialize(s)
    }
}

impl<'de> Deserialize<'de> for SignedPermutation {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let v = Vec::<i32>::deserialize(d)?;
        SignedPermutation::new(v).map_err(serde::de::Error::custom)
    }
}
