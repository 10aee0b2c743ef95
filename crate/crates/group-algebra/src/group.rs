use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, Mutex, OnceLock};

use peaklab_perm::{AnyPermutation, GroupElement, GroupKind, Permutation, SignedPermutation};

use crate::{AlgebraError, Result};

/// Multiplication tables are cached up to this many entries.
const TABLE_LIMIT: usize = 4_000_000;

#[derive(Debug)]
pub(crate) enum Elements {
    Symmetric(Vec<Permutation>),
    Hyperoctahedral(Vec<SignedPermutation>),
}

/// A listed copy of `S_n` or `B_n`. Elements are addressed by their rank,
/// which is also their position in lexicographic order.
pub struct Group {
    kind: GroupKind,
    n: usize,
    pub(crate) elems: Elements,
    inverses: Vec<u32>,
    identity: usize,
    table: OnceLock<Option<Vec<u32>>>,
}

impl fmt::Debug for Group {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Group({}, n={})", self.kind.tag(), self.n)
    }
}

fn registry() -> &'static Mutex<HashMap<(GroupKind, usize), Arc<Group>>> {
    static REG: OnceLock<Mutex<HashMap<(GroupKind, usize), Arc<Group>>>> = OnceLock::new();
    REG.get_or_init(|| Mutex::new(HashMap::new()))
}

impl Group {
    /// Shared instance behind the default size guard of perm-core.
    pub fn get(kind: GroupKind, n: usize) -> Result<Arc<Group>> {
        Self::get_guarded(kind, n, kind.default_limit())
    }

    pub fn get_guarded(kind: GroupKind, n: usize, limit: usize) -> Result<Arc<Group>> {
        if n > limit {
            return Err(AlgebraError::Perm(peaklab_perm::PermError::Guard { group: kind, n, limit }));
        }
        if let Some(g) = registry().lock().expect("registry poisoned").get(&(kind, n)) {
            return Ok(g.clone());
        }
        let g = Arc::new(Self::build(kind, n));
        registry().lock().expect("registry poisoned").entry((kind, n)).or_insert(g.clone());
        Ok(g)
    }

    pub fn symmetric(n: usize) -> Result<Arc<Group>> {
        Self::get(GroupKind::Symmetric, n)
    }

    pub fn hyperoctahedral(n: usize) -> Result<Arc<Group>> {
        Self::get(GroupKind::Hyperoctahedral, n)
    }

    fn build(kind: GroupKind, n: usize) -> Group {
        let (elems, inverses, identity) = match kind {
            GroupKind::Symmetric => {
                let e = Permutation::elements_unguarded(n);
                let inv = e.iter().map(|p| p.inverse().rank() as u32).collect();
                (Elements::Symmetric(e), inv, Permutation::identity(n).rank())
            }
            GroupKind::Hyperoctahedral => {
                let e = SignedPermutation::elements_unguarded(n);
                let inv = e.iter().map(|p| p.inverse().rank() as u32).collect();
                (Elements::Hyperoctahedral(e), inv, SignedPermutation::identity(n).rank())
            }
        };
        Group { kind, n, elems, inverses, identity, table: OnceLock::new() }
    }

    pub fn kind(&self) -> GroupKind {
        self.kind
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn order(&self) -> usize {
        self.inverses.len()
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    pub fn inverse(&self, i: usize) -> usize {
        self.inverses[i] as usize
    }

    fn compose_rank(&self, i: usize, j: usize) -> usize {
        match &self.elems {
            Elements::Symmetric(e) => e[i].compose_unchecked(&e[j]).rank(),
            Elements::Hyperoctahedral(e) => e[i].compose_unchecked(&e[j]).rank(),
        }
    }

    fn table(&self) -> Option<&Vec<u32>> {
        self.table
            .get_or_init(|| {
                let m = self.order();
                (m * m <= TABLE_LIMIT).then(|| {
                    let mut t = Vec::with_capacity(m * m);
                    for i in 0..m {
                        for j in 0..m {
                            t.push(self.compose_rank(i, j) as u32);
                        }
                    }
                    t
                })
            })
            .as_ref()
    }

    /// Rank of `elem(i) ∘ elem(j)`.
    pub fn mul(&self, i: usize, j: usize) -> usize {
        match self.table() {
            Some(t) => t[i * self.order() + j] as usize,
            None => self.compose_rank(i, j),
        }
    }

    pub fn images(&self, i: usize) -> Vec<i32> {
        match &self.elems {
            Elements::Symmetric(e) => e[i].images_i32(),
            Elements::Hyperoctahedral(e) => e[i].images_i32(),
        }
    }

    pub fn element(&self, i: usize) -> AnyPermutation {
        match &self.elems {
            Elements::Symmetric(e) => AnyPermutation::Symmetric(e[i].clone()),
            Elements::Hyperoctahedral(e) => AnyPermutation::Signed(e[i].clone()),
        }
    }

    pub fn index_of_images(&self, images: &[i32]) -> Result<usize> {
        if images.len() != self.n {
            return Err(AlgebraError::Perm(peaklab_perm::PermError::SizeMismatch {
                left: self.n,
                right: images.len(),
            }));
        }
        Ok(match self.kind {
            GroupKind::Symmetric => Permutation::from_images_i32(images)?.rank(),
            GroupKind::Hyperoctahedral => SignedPermutation::from_images_i32(images)?.rank(),
        })
    }

    pub fn index_of(&self, p: &AnyPermutation) -> Result<usize> {
        if p.kind() != self.kind {
            return Err(AlgebraError::GroupMismatch);
        }
        self.index_of_images(&match p {
            AnyPermutation::Symmetric(x) => x.images_i32(),
            AnyPermutation::Signed(x) => x.images_i32(),
        })
    }

    pub(crate) fn same(&self, other: &Group) -> bool {
        self.kind == other.kind && self.n == other.n
    }
}
