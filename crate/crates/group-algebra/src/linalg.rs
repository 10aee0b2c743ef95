use num_traits::Zero;
use peaklab_arith::Rational;
use serde::Serialize;

use crate::elem::GAElem;
use crate::{AlgebraError, Result};

/// Row-reduced span of dense coefficient vectors over the rationals.
#[derive(Clone, Debug, Default)]
pub struct RowSpace {
    /// `(pivot column, row)`; each row is zero left of its pivot and has 1 there.
    rows: Vec<(usize, Vec<Rational>)>,
}

impl RowSpace {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    fn reduce(&self, mut v: Vec<Rational>) -> Vec<Rational> {
        for (p, row) in &self.rows {
            if !v[*p].is_zero() {
                let f = v[*p].clone();
                for (x, r) in v.iter_mut().zip(row).skip(*p) {
                    if !r.is_zero() {
                        *x -= &f * r;
                    }
                }
            }
        }
        v
    }

    pub fn contains(&self, v: &[Rational]) -> bool {
        self.reduce(v.to_vec()).iter().all(Zero::is_zero)
    }

    /// Adds `v`; returns false when it was already in the span.
    pub fn insert(&mut self, v: Vec<Rational>) -> bool {
        let mut v = self.reduce(v);
        let Some(p) = v.iter().position(|x| !x.is_zero()) else { return false };
        let inv = v[p].recip();
        for x in v.iter_mut().skip(p) {
            *x *= &inv;
        }
        self.rows.push((p, v));
        true
    }
}

fn same_group(elems: &[GAElem]) -> Result<()> {
    match elems.split_first() {
        Some((a, rest)) if rest.iter().any(|b| b.kind() != a.kind() || b.n() != a.n()) => {
            Err(AlgebraError::GroupMismatch)
        }
        _ => Ok(()),
    }
}

/// Dimension of the rational span.
pub fn span_rank(elems: &[GAElem]) -> Result<usize> {
    same_group(elems)?;
    let mut s = RowSpace::new();
    for e in elems {
        s.insert(e.to_dense());
    }
    Ok(s.rank())
}

/// Whether `target` lies in the span of `elems`.
pub fn in_span(elems: &[GAElem], target: &GAElem) -> Result<bool> {
    same_group(elems)?;
    let mut s = RowSpace::new();
    for e in elems {
        s.insert(e.to_dense());
    }
    Ok(s.contains(&target.to_dense()))
}

#[derive(Clone, Debug, Serialize)]
pub struct Closure {
    pub initial_rank: usize,
    pub dimension: usize,
    /// First pair `(i, j)` of input elements whose product leaves their span.
    pub witness: Option<(usize, usize)>,
    pub basis: Vec<GAElem>,
}

impl Closure {
    pub fn initially_closed(&self) -> bool {
        self.witness.is_none()
    }
}

/// Smallest subspace containing `elems` and closed under multiplication.
/// Fails once the dimension would exceed `cap`.
pub fn multiplicative_closure(elems: &[GAElem], cap: usize) -> Result<Closure> {
    same_group(elems)?;
    let mut space = RowSpace::new();
    let mut basis: Vec<GAElem> = Vec::new();
    for e in elems {
        if space.insert(e.to_dense()) {
            basis.push(e.clone());
        }
    }
    let initial_rank = basis.len();
    if initial_rank > cap {
        return Err(AlgebraError::CapExceeded { cap });
    }
    let mut witness = None;
    'outer: for (i, a) in elems.iter().enumerate() {
        for (j, b) in elems.iter().enumerate() {
            if !space.contains(&(a * b).to_dense()) {
                witness = Some((i, j));
                break 'outer;
            }
        }
    }
    // products already examined: every pair with both indices below `done`
    let mut done = 0;
    while done < basis.len() {
        let end = basis.len();
        for i in 0..end {
            for j in 0..end {
                if i < done && j < done {
                    continue;
                }
                let p = &basis[i] * &basis[j];
                if space.insert(p.to_dense()) {
                    if space.rank() > cap {
                        return Err(AlgebraError::CapExceeded { cap });
                    }
                    basis.push(p);
                }
            }
        }
        done = end;
    }
    Ok(Closure { initial_rank, dimension: basis.len(), witness, basis })
}
