//! Labeled posets of type A and B, their linear extensions, and brute-force
//! counters for ordinary and enriched P-partitions.
//!
//! The counters here are deliberately naive: they are the oracle that every
//! closed form elsewhere in the workspace is tested against.

mod alphabet;
mod engine;
mod partitions;
mod poset;
mod random;

pub use alphabet::{Alphabet, EnrichedValue, ImageSetSpec, Sign};
pub use engine::{Constraint, ConstraintSystem, Term};
pub use partitions::{
    count_partitions, count_partitions_guarded, for_each_partition, support_counts, PartitionDomain, SupportCounts,
};
pub use poset::{BPoset, Poset};
pub use random::{random_bposet, random_poset};

use peaklab_perm::PermError;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PosetError {
    #[error("relations contain a cycle through {0}")]
    Cycle(i32),
    #[error("label {0} out of range")]
    OutOfRange(i32),
    #[error("relation {0} <_P {1} lacks its mirror {mirror_a} <_P {mirror_b}", mirror_a = -.1, mirror_b = -.0)]
    NotSymmetric(i32, i32),
    #[error("{what} = {value} exceeds the guard {limit}")]
    Guard { what: &'static str, value: usize, limit: usize },
    #[error("image set {0} is not valid here: {1}")]
    WrongKind(String, &'static str),
    #[error("position {0} out of range for the zig-zag")]
    BadPosition(usize),
    #[error(transparent)]
    Perm(#[from] PermError),
}

pub type Result<T> = std::result::Result<T, PosetError>;

/// Size guards for the enumerators.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Guard {
    pub max_n: usize,
    pub max_k: usize,
}

impl Default for Guard {
    fn default() -> Self {
        Guard { max_n: 6, max_k: 5 }
    }
}

impl Guard {
    pub fn check(&self, n: usize, k: usize) -> Result<()> {
        if n > self.max_n {
            return Err(PosetError::Guard { what: "n", value: n, limit: self.max_n });
        }
        if k > self.max_k {
            return Err(PosetError::Guard { what: "k", value: k, limit: self.max_k });
        }
        Ok(())
    }
}
