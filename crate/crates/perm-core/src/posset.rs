use serde::{Deserialize, Deserializer, Serialize, Serializer};
use std::fmt;

/// A set of small nonnegative positions stored as a bitmask (bit `i` is position `i`).
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct PosSet(pub u64);

impl PosSet {
    pub const EMPTY: PosSet = PosSet(0);

    /// `{lo, lo+1, ..., hi}`; empty when `hi < lo`.
    pub fn interval(lo: usize, hi: usize) -> PosSet {
        (lo..=hi).collect()
    }

    pub fn contains(self, i: usize) -> bool {
        i < 64 && self.0 >> i & 1 == 1
    }

    pub fn insert(&mut self, i: usize) {
        assert!(i < 64, "position {i} out of range");
        self.0 |= 1 << i;
    }

    pub fn with(mut self, i: usize) -> PosSet {
        self.insert(i);
        self
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn union(self, o: PosSet) -> PosSet {
        PosSet(self.0 | o.0)
    }

    pub fn intersection(self, o: PosSet) -> PosSet {
        PosSet(self.0 & o.0)
    }

    pub fn difference(self, o: PosSet) -> PosSet {
        PosSet(self.0 & !o.0)
    }

    pub fn symmetric_difference(self, o: PosSet) -> PosSet {
        PosSet(self.0 ^ o.0)
    }

    pub fn is_subset(self, o: PosSet) -> bool {
        self.0 & !o.0 == 0
    }

    /// `{ i + 1 : i in self }`.
    pub fn shifted(self) -> PosSet {
        PosSet(self.0 << 1)
    }

    pub fn iter(self) -> impl Iterator<Item = usize> {
        (0..64).filter(move |&i| self.contains(i))
    }

    pub fn to_vec(self) -> Vec<usize> {
        self.iter().collect()
    }

    pub fn max(self) -> Option<usize> {
        (self.0 != 0).then(|| 63 - self.0.leading_zeros() as usize)
    }

    /// All subsets of `self`, in increasing bitmask order.
    pub fn subsets(self) -> impl Iterator<Item = PosSet> {
        let full = self.0;
        let mut cur = Some(0u64);
        std::iter::from_fn(move || {
            let c = cur?;
            cur = if c == full { None } else { Some(((c | !full).wrapping_add(1)) & full) };
            Some(PosSet(c))
        })
    }

    /// True when no two members are consecutive integers.
    pub fn is_sparse(self) -> bool {
        self.0 & (self.0 >> 1) == 0
    }
}

impl FromIterator<usize> for PosSet {
    fn from_iter<I: IntoIterator<Item = usize>>(it: I) -> Self {
        let mut s = PosSet::EMPTY;
        for i in it {
            s.insert(i);
        }
        s
    }
}

impl fmt::Debug for PosSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl fmt::Display for PosSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

impl Serialize for PosSet {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_seq(self.iter())
    }
}

impl<'de> Deserialize<'de> for PosSet {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let v = Vec::<usize>::deserialize(d)?;
        if let Some(&bad) = v.iter().find(|&&i| i >= 64) {
            return Err(serde::de::Error::custom(format!("position {bad} out of range")));
        }
        Ok(v.into_iter().collect())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn subsets_enumerate_all() {
        let s: PosSet = [1, 3, 4].into_iter().collect();
        let subs: Vec<_> = s.subsets().collect();
        assert_eq!(subs.len(), 8);
        assert!(subs.iter().all(|t| t.is_subset(s)));
        assert_eq!(PosSet::EMPTY.subsets().count(), 1);
    }

    #[test]
    fn sparse_and_shift() {
        let s: PosSet = [1, 3].into_iter().collect();
        assert!(s.is_sparse());
        assert_eq!(s.shifted().to_vec(), vec![2, 4]);
        assert!(!s.union(PosSet::EMPTY.with(2)).is_sparse());
        assert_eq!(PosSet::interval(2, 4).to_vec(), vec![2, 3, 4]);
        assert!(PosSet::interval(3, 2).is_empty());
    }
}
