use std::fmt;

use peaklab_algebra::RowSpace;
use peaklab_arith::Rational;
use peaklab_perm::PosSet;
use serde::{Deserialize, Serialize};

use crate::basis::QIndex;
use crate::expand::{k_function, ExpansionBasis, Flavor};
use crate::{guard, QsymError, Result};

/// `(ς, S)`: the sign of `π(1)` (1 when negative) and the type B peak set.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct SignPeakSet {
    pub sign: u8,
    pub peaks: PosSet,
}

impl SignPeakSet {
    /// Checks the peak set lies in `[1, n-1]`, has no two adjacent members,
    /// and avoids 1 when the sign is negative.
    pub fn new(n: usize, sign: u8, peaks: PosSet) -> Result<Self> {
        let s = SignPeakSet { sign, peaks };
        if s.is_valid(n) {
            Ok(s)
        } else {
            Err(QsymError::InvalidIndex { basis: "K_B", n, index: s.to_string() })
        }
    }

    pub fn is_valid(&self, n: usize) -> bool {
        self.sign <= 1
            && self.peaks.is_subset(PosSet::interval(1, n.saturating_sub(1)))
            && self.peaks.is_sparse()
            && !(self.sign == 1 && self.peaks.contains(1))
    }
}

impl fmt::Display for SignPeakSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.sign, self.peaks)
    }
}

/// `f_0 = f_1 = 1`, `f_n = f_{n-1} + f_{n-2}`.
pub fn fibonacci(n: usize) -> u64 {
    let (mut a, mut b) = (1u64, 1u64);
    for _ in 0..n {
        (a, b) = (b, a + b);
    }
    a
}

fn sparse_subsets(lo: usize, hi: usize) -> Vec<PosSet> {
    PosSet::interval(lo, hi).subsets().filter(|s| s.is_sparse()).collect()
}

/// Interior peak sets: sparse subsets of `[2, n-1]`.
pub fn interior_peak_sets(n: usize) -> Vec<PosSet> {
    sparse_subsets(2, n.saturating_sub(1))
}

/// Left peak sets: sparse subsets of `[1, n-1]`.
pub fn left_peak_sets(n: usize) -> Vec<PosSet> {
    sparse_subsets(1, n.saturating_sub(1))
}

pub fn sign_peak_sets(n: usize) -> Vec<SignPeakSet> {
    let mut out: Vec<SignPeakSet> = left_peak_sets(n).into_iter().map(|peaks| SignPeakSet { sign: 0, peaks }).collect();
    out.extend(left_peak_sets(n).into_iter().filter(|s| !s.contains(1)).map(|peaks| SignPeakSet { sign: 1, peaks }));
    out.sort();
    out
}

/// Rank of the peak functions of one family in the fundamental basis.
pub fn peak_basis_rank(n: usize, flavor: Flavor) -> Result<usize> {
    guard("n", n, 7)?;
    let indices: Vec<QIndex> = match flavor {
        Flavor::Interior => interior_peak_sets(n).into_iter().map(QIndex::Set).collect(),
        Flavor::Left => {
            left_peak_sets(n).into_iter().map(|peaks| QIndex::SignPeak(SignPeakSet { sign: 0, peaks })).collect()
        }
        Flavor::B => sign_peak_sets(n).into_iter().map(QIndex::SignPeak).collect(),
    };
    let universe: Vec<PosSet> = match flavor {
        Flavor::Interior => PosSet::interval(1, n.saturating_sub(1)).subsets().collect(),
        _ => PosSet::interval(0, n.saturating_sub(1)).subsets().collect(),
    };
    let mut space = RowSpace::new();
    for idx in indices {
        let e = k_function(n, idx, ExpansionBasis::Fundamental)?;
        let row: Vec<Rational> = universe.iter().map(|&s| e.coeff(&QIndex::Set(s))).collect();
        space.insert(row);
    }
    Ok(space.rank())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fibonacci_values() {
        let f: Vec<u64> = (0..8).map(fibonacci).collect();
        assert_eq!(f, vec![1, 1, 2, 3, 5, 8, 13, 21]);
    }

    #[test]
    fn documented_counts() {
        let set = |v: &[usize]| v.iter().copied().collect::<PosSet>();
        assert_eq!(interior_peak_sets(4), vec![set(&[]), set(&[2]), set(&[3])]);
        assert_eq!(interior_peak_sets(1), vec![set(&[])]);
        let b3: Vec<String> = sign_peak_sets(3).iter().map(|s| s.to_string()).collect();
        assert_eq!(b3, ["(0, {})", "(0, {1})", "(0, {2})", "(1, {})", "(1, {2})"]);
    }

    #[test]
    fn validity() {
        assert!(SignPeakSet::new(3, 1, [1].into_iter().collect()).is_err());
        assert!(SignPeakSet::new(4, 0, [1, 2].into_iter().collect()).is_err());
        assert!(SignPeakSet::new(3, 0, [3].into_iter().collect()).is_err());
        assert!(SignPeakSet::new(3, 1, [2].into_iter().collect()).is_ok());
    }

    #[test]
    fn ranks_are_fibonacci() {
        for n in 1..=6 {
            assert_eq!(peak_basis_rank(n, Flavor::Interior).unwrap() as u64, fibonacci(n - 1), "n={n}");
            assert_eq!(peak_basis_rank(n, Flavor::Left).unwrap() as u64, fibonacci(n), "n={n}");
            assert_eq!(peak_basis_rank(n, Flavor::B).unwrap() as u64, fibonacci(n + 1), "n={n}");
        }
    }
}
