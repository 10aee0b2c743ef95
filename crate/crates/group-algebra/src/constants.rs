use std::collections::BTreeMap;

use serde::Serialize;

use crate::family::{classes, ClassFamily, ClassLabel};
use crate::group::Group;
use crate::Result;

/// Two members of class `k` that receive different factorization counts.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ConstancyViolation {
    pub i: ClassLabel,
    pub j: ClassLabel,
    pub k: ClassLabel,
    pub representative: Vec<i32>,
    pub representative_count: u64,
    pub other: Vec<i32>,
    pub other_count: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TensorEntry {
    pub i: ClassLabel,
    pub j: ClassLabel,
    pub k: ClassLabel,
    pub value: u64,
}

/// `N^K_{I,J}`: number of pairs `(σ, τ)` with `σ` in class `I`, `τ` in
/// class `J` and `στ` equal to the lexicographically least member of `K`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct StructureConstants {
    pub family: &'static str,
    pub n: usize,
    pub labels: Vec<ClassLabel>,
    pub class_sizes: Vec<usize>,
    /// Nonzero entries, ordered by `(i, j, k)`.
    pub entries: Vec<TensorEntry>,
    pub violation: Option<ConstancyViolation>,
}

impl StructureConstants {
    pub fn well_defined(&self) -> bool {
        self.violation.is_none()
    }

    pub fn get(&self, i: &ClassLabel, j: &ClassLabel, k: &ClassLabel) -> u64 {
        self.entries.iter().find(|e| (&e.i, &e.j, &e.k) == (i, j, k)).map_or(0, |e| e.value)
    }
}

pub fn structure_constants(n: usize, family: ClassFamily) -> Result<StructureConstants> {
    let g = Group::get(family.group(), n)?;
    let cls = classes(&g, family)?;
    let m = g.order();
    let mut class_of = vec![0usize; m];
    for (c, cl) in cls.iter().enumerate() {
        for &p in &cl.members {
            class_of[p] = c;
        }
    }
    let r = cls.len();
    // counts[(I * r + J) * m + π]
    let mut counts = vec![0u64; r * r * m];
    for s in 0..m {
        let base = class_of[s] * r;
        for t in 0..m {
            counts[(base + class_of[t]) * m + g.mul(s, t)] += 1;
        }
    }
    let mut entries = BTreeMap::new();
    let mut violation = None;
    for i in 0..r {
        for j in 0..r {
            let row = &counts[(i * r + j) * m..(i * r + j + 1) * m];
            for (k, cl) in cls.iter().enumerate() {
                let rep = cl.representative();
                let v = row[rep];
                if violation.is_none() {
                    if let Some(&o) = cl.members.iter().find(|&&p| row[p] != v) {
                        violation = Some(ConstancyViolation {
                            i: cls[i].label,
                            j: cls[j].label,
                            k: cl.label,
                            representative: g.images(rep),
                            representative_count: v,
                            other: g.images(o),
                            other_count: row[o],
                        });
                    }
                }
                if v != 0 {
                    entries.insert((i, j, k), v);
                }
            }
        }
    }
    Ok(StructureConstants {
        family: family.tag(),
        n,
        labels: cls.iter().map(|c| c.label).collect(),
        class_sizes: cls.iter().map(|c| c.members.len()).collect(),
        entries: entries
            .into_iter()
            .map(|((i, j, k), value)| TensorEntry { i: cls[i].label, j: cls[j].label, k: cls[k].label, value })
            .collect(),
        violation,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use peaklab_perm::PosSet;

    #[test]
    fn descent_sets_in_s2() {
        let t = structure_constants(2, ClassFamily::DescentSet).unwrap();
        let one = ClassLabel::Set(PosSet::EMPTY.with(1));
        let empty = ClassLabel::Set(PosSet::EMPTY);
        assert_eq!(t.get(&one, &one, &empty), 1);
        assert!(t.well_defined());
    }

    #[test]
    fn row_sums_count_all_pairs() {
        let t = structure_constants(3, ClassFamily::DescentSet).unwrap();
        for (a, i) in t.labels.iter().enumerate() {
            for (b, j) in t.labels.iter().enumerate() {
                let total: u64 =
                    t.labels.iter().enumerate().map(|(c, k)| t.get(i, j, k) * t.class_sizes[c] as u64).sum();
                assert_eq!(total, (t.class_sizes[a] * t.class_sizes[b]) as u64);
            }
        }
    }

    #[test]
    fn interior_peak_sets_well_defined() {
        let t = structure_constants(3, ClassFamily::PeakInteriorSet).unwrap();
        assert_eq!(t.labels.len(), 2);
        assert!(t.well_defined());
    }
}
