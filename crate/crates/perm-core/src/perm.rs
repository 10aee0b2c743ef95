use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::{fmt_ints, parse_ints, GroupElement, GroupKind, PermError, Result};

/// A bijection of `[n]` in one-line notation `(π(1), ..., π(n))`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Vec<u32>,
}

impl Permutation {
    pub fn new(images: Vec<u32>) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n + 1];
        for &x in &images {
            let x = x as usize;
            if x == 0 || x > n || seen[x] {
                return Err(PermError::Invalid(format!("{images:?}")));
            }
            seen[x] = true;
        }
        Ok(Permutation { images })
    }

    pub fn images(&self) -> &[u32] {
        &self.images
    }

    /// `π(i)` for `1 <= i <= n`; the sentinels `π(0) = π(n+1) = 0`.
    pub fn at(&self, i: usize) -> u32 {
        if i == 0 || i > self.images.len() {
            0
        } else {
            self.images[i - 1]
        }
    }

    pub fn compose(&self, other: &Self) -> Result<Self> {
        self.try_compose(other)
    }

    /// `η = (n, n-1, ..., 1)`.
    pub fn eta(n: usize) -> Self {
        Permutation { images: (1..=n as u32).rev().collect() }
    }

    /// `ω = (2, 3, ..., n, 1)`; the empty permutation when `n = 0`.
    pub fn omega(n: usize) -> Self {
        Permutation { images: (0..n as u32).map(|i| (i + 1) % n as u32 + 1).collect() }
    }

    /// Embeds `S_{n-1}` in `S_n` by appending `n`. `n` is the target size.
    pub fn hat(&self, n: usize) -> Result<Self> {
        if self.images.len() + 1 != n {
            return Err(PermError::SizeMismatch { left: self.images.len(), right: n - 1 });
        }
        let mut v = self.images.clone();
        v.push(n as u32);
        Ok(Permutation { images: v })
    }

    /// `σ^k`, with `k = 0` the identity.
    pub fn power(&self, k: usize) -> Self {
        let mut acc = Self::identity(self.n());
        for _ in 0..k {
            acc = acc.compose_unchecked(self);
        }
        acc
    }
}

impl GroupElement for Permutation {
    const KIND: GroupKind = GroupKind::Symmetric;

    fn n(&self) -> usize {
        self.images.len()
    }

    fn identity(n: usize) -> Self {
        Permutation { images: (1..=n as u32).collect() }
    }

    fn compose_unchecked(&self, other: &Self) -> Self {
        assert_eq!(self.n(), other.n(), "size mismatch");
        Permutation { images: other.images.iter().map(|&j| self.images[j as usize - 1]).collect() }
    }

    fn inverse(&self) -> Self {
        let mut v = vec![0; self.n()];
        for (i, &x) in self.images.iter().enumerate() {
            v[x as usize - 1] = i as u32 + 1;
        }
        Permutation { images: v }
    }

    fn rank(&self) -> usize {
        // Lehmer code in factorial base
        let n = self.n();
        let mut r = 0;
        for i in 0..n {
            let smaller = self.images[i + 1..].iter().filter(|&&y| y < self.images[i]).count();
            r = r * (n - i) + smaller;
        }
        r
    }

    fn elements_unguarded(n: usize) -> Vec<Self> {
        let mut out = Vec::with_capacity(GroupKind::Symmetric.order(n));
        let mut cur: Vec<u32> = (1..=n as u32).collect();
        loop {
            out.push(Permutation { images: cur.clone() });
            // next permutation in lexicographic order
            let Some(i) = (1..n).rev().find(|&i| cur[i - 1] < cur[i]) else { break };
            let j = (i..n).rev().find(|&j| cur[j] > cur[i - 1]).expect("pivot exists");
            cur.swap(i - 1, j);
            cur[i..].reverse();
        }
        out
    }

    fn images_i32(&self) -> Vec<i32> {
        self.images.iter().map(|&x| x as i32).collect()
    }

    fn from_images_i32(images: &[i32]) -> Result<Self> {
        if images.iter().any(|&x| x <= 0) {
            return Err(PermError::Invalid(format!("{images:?}")));
        }
        Self::new(images.iter().map(|&x| x as u32).collect())
    }
}

impl FromStr for Permutation {
    type Err = PermError;
    fn from_str(s: &str) -> Result<Self> {
        Self::from_images_i32(&parse_ints(s)?)
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt_ints(&self.images_i32(), f)
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl Serialize for Permutation {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.images.serialize(s)
    }
}

impl<'de> Deserialize<'de> for Permutation {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let v = Vec::<u32>::deserialize(d)?;
        Permutation::new(v).map_err(serde::de::Error::custom)
    }
}
