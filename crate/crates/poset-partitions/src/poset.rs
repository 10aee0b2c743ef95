use peaklab_perm::{GroupElement, Permutation, PosSet, SignedPermutation};

use crate::engine::{ConstraintSystem, Term};
use crate::{PosetError, Result};

fn closure(m: usize, less: &mut [bool]) {
    for k in 0..m {
        for i in 0..m {
            if less[i * m + k] {
                for j in 0..m {
                    if less[k * m + j] {
                        less[i * m + j] = true;
                    }
                }
            }
        }
    }
}

/// A strict partial order on the labels `1..=n`, stored transitively closed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Poset {
    n: usize,
    less: Vec<bool>,
}

impl Poset {
    /// Builds the order generated by `a <_P b` for each pair.
    pub fn from_relations(n: usize, rels: &[(i32, i32)]) -> Result<Self> {
        let mut less = vec![false; n * n];
        for &(a, b) in rels {
            for x in [a, b] {
                if x < 1 || x as usize > n {
                    return Err(PosetError::OutOfRange(x));
                }
            }
            less[(a as usize - 1) * n + b as usize - 1] = true;
        }
        closure(n, &mut less);
        if let Some(i) = (0..n).find(|&i| less[i * n + i]) {
            return Err(PosetError::Cycle(i as i32 + 1));
        }
        Ok(Poset { n, less })
    }

    pub fn antichain(n: usize) -> Self {
        Poset { n, less: vec![false; n * n] }
    }

    /// The chain `π(1) <_P π(2) <_P ... <_P π(n)`.
    pub fn chain(p: &Permutation) -> Self {
        Self::zigzag(p, PosSet::EMPTY).expect("empty set is in range")
    }

    /// Chain of `π` with the relation between `π(s)` and `π(s+1)` reversed for `s` in `flips`.
    pub fn zigzag(p: &Permutation, flips: PosSet) -> Result<Self> {
        let n = p.n();
        if let Some(bad) = flips.iter().find(|&s| s == 0 || s >= n) {
            return Err(PosetError::BadPosition(bad));
        }
        let rels: Vec<(i32, i32)> = (1..n)
            .map(|s| {
                let (a, b) = (p.at(s) as i32, p.at(s + 1) as i32);
                if flips.contains(s) {
                    (b, a)
                } else {
                    (a, b)
                }
            })
            .collect();
        Self::from_relations(n, &rels)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// `a <_P b` for labels in `1..=n`.
    pub fn less(&self, a: usize, b: usize) -> bool {
        self.less[(a - 1) * self.n + b - 1]
    }

    /// Every related pair `(a, b)` with `a <_P b`.
    pub fn relations(&self) -> Vec<(usize, usize)> {
        let n = self.n;
        (1..=n).flat_map(|a| (1..=n).map(move |b| (a, b))).filter(|&(a, b)| self.less(a, b)).collect()
    }

    /// All `π` with `a <_P b ⟹ π⁻¹(a) < π⁻¹(b)`, in lexicographic order.
    pub fn linear_extensions(&self) -> Result<Vec<Permutation>> {
        let n = self.n;
        if n > peaklab_perm::MAX_SYMMETRIC_N {
            return Err(PosetError::Guard { what: "n", value: n, limit: peaklab_perm::MAX_SYMMETRIC_N });
        }
        let mut out = Vec::new();
        let mut placed = vec![false; n + 1];
        let mut cur = Vec::with_capacity(n);
        self.extend(&mut placed, &mut cur, &mut out);
        Ok(out)
    }

    fn extend(&self, placed: &mut [bool], cur: &mut Vec<u32>, out: &mut Vec<Permutation>) {
        let n = self.n;
        if cur.len() == n {
            out.push(Permutation::new(cur.clone()).expect("bijection"));
            return;
        }
        for v in 1..=n {
            if placed[v] || (1..=n).any(|u| !placed[u] && self.less(u, v)) {
                continue;
            }
            placed[v] = true;
            cur.push(v as u32);
            self.extend(placed, cur, out);
            cur.pop();
            placed[v] = false;
        }
    }

    /// Constraint system on variables `label - 1`.
    pub fn constraints(&self) -> ConstraintSystem {
        let mut sys = ConstraintSystem::new(self.n);
        for (a, b) in self.relations() {
            sys.push(Term::var(a - 1), Term::var(b - 1), a < b);
        }
        sys
    }
}

/// A strict partial order on `-n..=n` closed under `a <_P b ⟹ -b <_P -a`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BPoset {
    n: usize,
    less: Vec<bool>,
}

impl BPoset {
    /// Builds the order generated by `rels`; the result must already be
    /// symmetric, otherwise the offending pair is reported.
    pub fn new(n: usize, rels: &[(i32, i32)]) -> Result<Self> {
        let m = 2 * n + 1;
        let ni = n as i32;
        let mut less = vec![false; m * m];
        for &(a, b) in rels {
            for x in [a, b] {
                if x.abs() > ni {
                    return Err(PosetError::OutOfRange(x));
                }
            }
            less[(a + ni) as usize * m + (b + ni) as usize] = true;
        }
        closure(m, &mut less);
        let p = BPoset { n, less };
        if let Some(i) = (-ni..=ni).find(|&i| p.less(i, i)) {
            return Err(PosetError::Cycle(i));
        }
        for a in -ni..=ni {
            for b in -ni..=ni {
                if p.less(a, b) && !p.less(-b, -a) {
                    return Err(PosetError::NotSymmetric(a, b));
                }
            }
        }
        Ok(p)
    }

    /// Adds the mirror of every relation before building.
    pub fn symmetrized(n: usize, rels: &[(i32, i32)]) -> Result<Self> {
        let all: Vec<(i32, i32)> = rels.iter().flat_map(|&(a, b)| [(a, b), (-b, -a)]).collect();
        Self::new(n, &all)
    }

    pub fn antichain(n: usize) -> Self {
        let m = 2 * n + 1;
        BPoset { n, less: vec![false; m * m] }
    }

    /// The chain `0 <_P π(1) <_P ... <_P π(n)` with its mirror image.
    pub fn chain(p: &SignedPermutation) -> Self {
        Self::zigzag(p, PosSet::EMPTY).expect("empty set is in range")
    }

    /// Chain of `0, π(1), ..., π(n)` with the relation at step `s` reversed
    /// for `s` in `flips` (`0 <= s < n`).
    pub fn zigzag(p: &SignedPermutation, flips: PosSet) -> Result<Self> {
        let n = p.n();
        if let Some(bad) = flips.iter().find(|&s| s >= n) {
            return Err(PosetError::BadPosition(bad));
        }
        let rels: Vec<(i32, i32)> = (0..n)
            .map(|s| {
                let (a, b) = (p.at(s as i32), p.at(s as i32 + 1));
                if flips.contains(s) {
                    (b, a)
                } else {
                    (a, b)
                }
            })
            .collect();
        Self::symmetrized(n, &rels)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// `a <_P b` for `a, b` in `-n..=n`.
    pub fn less(&self, a: i32, b: i32) -> bool {
        let m = 2 * self.n + 1;
        let ni = self.n as i32;
        self.less[(a + ni) as usize * m + (b + ni) as usize]
    }

    /// Every related pair `(a, b)` with `a <_P b`.
    pub fn relations(&self) -> Vec<(i32, i32)> {
        let ni = self.n as i32;
        (-ni..=ni).flat_map(|a| (-ni..=ni).map(move |b| (a, b))).filter(|&(a, b)| self.less(a, b)).collect()
    }

    /// Does the total order `-π(n) < ... < -π(1) < 0 < π(1) < ... < π(n)` extend `P`?
    pub fn is_extension(&self, p: &SignedPermutation) -> bool {
        let n = self.n;
        let mut pos = vec![0i32; 2 * n + 1];
        for s in 1..=n as i32 {
            let v = p.at(s);
            pos[(v + n as i32) as usize] = s;
            pos[(-v + n as i32) as usize] = -s;
        }
        self.relations().into_iter().all(|(a, b)| pos[(a + n as i32) as usize] < pos[(b + n as i32) as usize])
    }

    /// Signed permutations whose induced total order extends `P`, lexicographic.
    pub fn linear_extensions(&self) -> Result<Vec<SignedPermutation>> {
        let n = self.n;
        if n > peaklab_perm::MAX_HYPEROCTAHEDRAL_N {
            return Err(PosetError::Guard { what: "n", value: n, limit: peaklab_perm::MAX_HYPEROCTAHEDRAL_N });
        }
        let rels = self.relations();
        let mut out = Vec::new();
        for signs in 0u32..(1 << n) {
            // element v sits above 0 iff sign(v) matches the choice for |v|
            let up = |v: i32| v != 0 && ((v > 0) == (signs >> (v.unsigned_abs() - 1) & 1 == 0));
            let down = |v: i32| v != 0 && !up(v);
            let consistent = rels.iter().all(|&(a, b)| !((up(a) || a == 0) && (down(b) || b == 0)));
            if !consistent {
                continue;
            }
            let pos_side: Vec<i32> = (1..=n as i32).map(|i| if signs >> (i - 1) & 1 == 0 { i } else { -i }).collect();
            let mut placed = vec![false; n];
            let mut cur = Vec::with_capacity(n);
            self.extend_b(&pos_side, &mut placed, &mut cur, &mut out);
        }
        out.sort();
        Ok(out)
    }

    fn extend_b(&self, side: &[i32], placed: &mut [bool], cur: &mut Vec<i32>, out: &mut Vec<SignedPermutation>) {
        let n = side.len();
        if cur.len() == n {
            out.push(SignedPermutation::new(cur.clone()).expect("signed bijection"));
            return;
        }
        for i in 0..n {
            if placed[i] || (0..n).any(|j| !placed[j] && self.less(side[j], side[i])) {
                continue;
            }
            placed[i] = true;
            cur.push(side[i]);
            self.extend_b(side, placed, cur, out);
            cur.pop();
            placed[i] = false;
        }
    }

    /// Constraint system on variables `i - 1` for `f(i)`, `i = 1..=n`.
    pub fn constraints(&self) -> ConstraintSystem {
        let term = |v: i32| match v {
            0 => Term::Zero,
            v => Term::Var { index: v.unsigned_abs() as usize - 1, negated: v < 0 },
        };
        let mut sys = ConstraintSystem::new(self.n);
        // a pair and its mirror impose the same condition; keep one of each
        for (a, b) in self.relations() {
            if a + b >= 0 {
                sys.push(term(a), term(b), a < b);
            }
        }
        sys
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Permutation {
        s.parse().unwrap()
    }

    #[test]
    fn two_linearizations() {
        // 1 >_P 3 <_P 2
        let poset = Poset::from_relations(3, &[(3, 1), (3, 2)]).unwrap();
        assert_eq!(poset.linear_extensions().unwrap(), vec![p("[3,1,2]"), p("[3,2,1]")]);
        let chain = Poset::chain(&p("[3,2,1]"));
        assert_eq!(chain.linear_extensions().unwrap(), vec![p("[3,2,1]")]);
        assert_eq!(Poset::antichain(4).linear_extensions().unwrap().len(), 24);
    }

    #[test]
    fn rejects_cycles_and_range() {
        assert_eq!(Poset::from_relations(2, &[(1, 2), (2, 1)]), Err(PosetError::Cycle(1)));
        assert_eq!(Poset::from_relations(2, &[(1, 3)]), Err(PosetError::OutOfRange(3)));
        assert!(matches!(BPoset::new(2, &[(0, 2)]), Err(PosetError::NotSymmetric(0, 2))));
        assert!(BPoset::symmetrized(2, &[(0, 2)]).is_ok());
        assert!(matches!(BPoset::symmetrized(1, &[(1, -1)]), Ok(_)));
        assert!(matches!(BPoset::symmetrized(1, &[(1, 0), (0, 1)]), Err(PosetError::Cycle(_))));
    }

    #[test]
    fn zigzag_type_a() {
        let x = p("[3,1,5,2,4]");
        let z = Poset::zigzag(&x, [2, 3].into_iter().collect()).unwrap();
        // π(1) < π(2) > π(3) > π(4) < π(5)
        assert!(z.less(3, 1) && z.less(5, 1) && z.less(2, 5) && z.less(2, 4));
        assert!(!z.less(3, 5) && !z.less(5, 3));
        assert_eq!(Poset::zigzag(&x, PosSet::EMPTY).unwrap(), Poset::chain(&x));
        assert!(Poset::zigzag(&x, PosSet::EMPTY.with(5)).is_err());
    }

    #[test]
    fn zigzag_type_b() {
        let x: SignedPermutation = "[-3,1,-2]".parse().unwrap();
        let z = BPoset::zigzag(&x, [0, 2].into_iter().collect()).unwrap();
        // 2 > -1 < 3 > 0 > -3 < 1 > -2
        for (a, b) in [(-1, 2), (-1, 3), (0, 3), (-3, 0), (-3, 1), (-2, 1)] {
            assert!(z.less(a, b), "{a} < {b}");
        }
        assert!(!z.less(2, 3) && !z.less(3, 2));
    }

    #[test]
    fn b_extensions_match_filter() {
        let cases = [
            BPoset::symmetrized(2, &[(0, 2)]).unwrap(),
            BPoset::antichain(2),
            BPoset::symmetrized(3, &[(1, -2), (0, 3)]).unwrap(),
            BPoset::chain(&"[-2,3,1]".parse().unwrap()),
        ];
        for poset in cases {
            let brute: Vec<_> =
                SignedPermutation::elements(poset.n()).unwrap().into_iter().filter(|x| poset.is_extension(x)).collect();
            assert_eq!(poset.linear_extensions().unwrap(), brute);
        }
        assert_eq!(BPoset::symmetrized(2, &[(0, 2)]).unwrap().linear_extensions().unwrap().len(), 4);
    }
}
