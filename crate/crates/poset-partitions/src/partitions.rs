use crate::engine::ConstraintSystem;
use crate::{BPoset, EnrichedValue, Guard, ImageSetSpec, Poset, PosetError, Result};

/// A poset whose P-partitions can be enumerated.
pub trait PartitionDomain {
    const TYPE_B: bool;
    fn size(&self) -> usize;
    fn constraint_system(&self) -> ConstraintSystem;
}

impl PartitionDomain for Poset {
    const TYPE_B: bool = false;
    fn size(&self) -> usize {
        self.n()
    }
    fn constraint_system(&self) -> ConstraintSystem {
        self.constraints()
    }
}

impl PartitionDomain for BPoset {
    const TYPE_B: bool = true;
    fn size(&self) -> usize {
        self.n()
    }
    fn constraint_system(&self) -> ConstraintSystem {
        self.constraints()
    }
}

fn check_kind<P: PartitionDomain>(spec: ImageSetSpec) -> Result<()> {
    if spec.is_type_b() != P::TYPE_B {
        let why =
            if P::TYPE_B { "signed posets need a type B image set" } else { "type B image set on an unsigned poset" };
        return Err(PosetError::WrongKind(spec.to_string(), why));
    }
    Ok(())
}

/// Number of P-partitions into `spec`, under the default size guard.
pub fn count_partitions<P: PartitionDomain>(p: &P, spec: ImageSetSpec) -> Result<u128> {
    count_partitions_guarded(p, spec, Guard::default())
}

pub fn count_partitions_guarded<P: PartitionDomain>(p: &P, spec: ImageSetSpec, guard: Guard) -> Result<u128> {
    check_kind::<P>(spec)?;
    guard.check(p.size(), spec.k())?;
    Ok(p.constraint_system().count(&spec.alphabet()))
}

/// Calls `visit` with `(f(1), ..., f(n))` for every P-partition into `spec`.
/// For signed posets only the positive labels are reported.
pub fn for_each_partition<P: PartitionDomain>(
    p: &P,
    spec: ImageSetSpec,
    guard: Guard,
    mut visit: impl FnMut(&[EnrichedValue]),
) -> Result<()> {
    check_kind::<P>(spec)?;
    guard.check(p.size(), spec.k())?;
    let vals = spec.values();
    let mut buf = Vec::with_capacity(p.size());
    p.constraint_system().for_each(&spec.alphabet(), |a| {
        buf.clear();
        buf.extend(a.iter().map(|&i| vals[i]));
        visit(&buf);
    });
    Ok(())
}

/// Enriched P-partition counts bucketed by the set of absolute values used.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SupportCounts {
    /// `c[l-1]` counts maps into `P'` whose magnitudes are exactly `{1..l}`, `l = 1..=n`.
    pub c: Vec<u128>,
    /// `c0[l]` counts maps into `P^(l)` whose magnitudes are exactly `{0..l}`, `l = 0..n`.
    pub c0: Vec<u128>,
}

impl SupportCounts {
    /// `Σ_l C(k,l) c_l`.
    pub fn enriched_at(&self, k: u64) -> u128 {
        self.c.iter().enumerate().map(|(i, &c)| binom(k, i as u64 + 1) * c).sum()
    }

    /// `Σ_l C(k,l) c_l + Σ_l C(k,l) c0_l`.
    pub fn left_enriched_at(&self, k: u64) -> u128 {
        self.enriched_at(k) + self.c0.iter().enumerate().map(|(l, &c)| binom(k, l as u64) * c).sum::<u128>()
    }
}

fn binom(k: u64, l: u64) -> u128 {
    if l > k {
        return 0;
    }
    (0..l).fold(1u128, |acc, j| acc * (k - j) as u128 / (j + 1) as u128)
}

/// Support counts of a type A poset, read off one enumeration into
/// `[k]^(l)`. `spec` must be enriched or left enriched with `k >= n`.
pub fn support_counts(p: &Poset, spec: ImageSetSpec, guard: Guard) -> Result<SupportCounts> {
    let k = match spec {
        ImageSetSpec::Enriched(k) | ImageSetSpec::LeftEnriched(k) => k,
        _ => return Err(PosetError::WrongKind(spec.to_string(), "support counts need an enriched image set")),
    };
    let n = p.n();
    if k < n {
        return Err(PosetError::WrongKind(spec.to_string(), "support counts need k >= n"));
    }
    let mut c = vec![0u128; n];
    let mut c0 = vec![0u128; n];
    for_each_partition(p, ImageSetSpec::LeftEnriched(k), guard, |f| {
        let mut mask = 0u64;
        for v in f {
            mask |= 1 << v.magnitude();
        }
        let top = 63 - mask.leading_zeros() as usize;
        if mask & 1 == 0 && mask == (1u64 << (top + 1)) - 2 {
            c[top - 1] += 1;
        } else if mask & 1 == 1 && mask == (1u64 << (top + 1)) - 1 {
            c0[top] += 1;
        }
    })?;
    Ok(SupportCounts { c, c0 })
}
