use peaklab_arith::rat;
use peaklab_perm::Permutation;
use serde::Serialize;

use crate::elem::GAElem;
use crate::family::{classes, ClassFamily};
use crate::group::{Elements, Group};
use crate::linalg::span_rank;
use crate::{AlgebraError, Result};

/// Outcome of comparing the Eulerian algebra of `S_{n-1}` with the cyclic
/// Eulerian algebra of `S_n` under `Φ(π) = (1/n) Σ_{i=1}^{n} π̂ ω^i`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CyclicIsomorphism {
    pub n: usize,
    /// `Φ(E_i) Φ(E_j) = Φ(E_i E_j)` for all `i, j`.
    pub multiplicative: bool,
    /// The images of `E_1, ..., E_{n-1}` are independent.
    pub injective: bool,
    /// The image lies in the span of the cyclic class sums.
    pub onto_cyclic_algebra: bool,
    /// `Φ` of the identity is idempotent.
    pub unit_idempotent: bool,
    /// Whether the map without the `1/n` factor would be multiplicative.
    pub multiplicative_without_normalization: bool,
}

impl CyclicIsomorphism {
    pub fn holds(&self) -> bool {
        self.multiplicative && self.injective && self.onto_cyclic_algebra && self.unit_idempotent
    }
}

/// `Σ_i π̂ ω^i` extended linearly, scaled by `scale`.
fn phi_map(x: &GAElem, big: &std::sync::Arc<Group>, scale: &peaklab_arith::Rational) -> Result<GAElem> {
    let n = big.n();
    let Elements::Symmetric(small) = &x.group().elems else { unreachable!() };
    let omega = Permutation::omega(n);
    let powers: Vec<Permutation> = (1..=n).map(|i| omega.power(i)).collect();
    let mut terms = Vec::new();
    for (i, c) in x.terms() {
        let hat = small[i].hat(n)?;
        for w in &powers {
            let p = hat.compose(w)?;
            terms.push((big.index_of_images(&p.images().iter().map(|&v| v as i32).collect::<Vec<_>>())?, c * scale));
        }
    }
    Ok(GAElem::from_terms(big, terms))
}

pub fn cyclic_isomorphism(n: usize) -> Result<CyclicIsomorphism> {
    if !(3..=6).contains(&n) {
        return Err(AlgebraError::Precondition(format!("cyclic isomorphism check needs 3 <= n <= 6, got {n}")));
    }
    let small = Group::symmetric(n - 1)?;
    let big = Group::symmetric(n)?;
    let e: Vec<GAElem> = classes(&small, ClassFamily::DescentNum)?.iter().map(|c| c.sum(&small)).collect();
    let check = |scale| -> Result<bool> {
        for a in &e {
            let fa = phi_map(a, &big, &scale)?;
            for b in &e {
                let fb = phi_map(b, &big, &scale)?;
                if &fa * &fb != phi_map(&(a * b), &big, &scale)? {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    };
    let norm = rat(1, n as i64);
    let images: Vec<GAElem> = e.iter().map(|a| phi_map(a, &big, &norm)).collect::<Result<_>>()?;
    let cyclic: Vec<GAElem> = classes(&big, ClassFamily::CyclicDescentNum)?.iter().map(|c| c.sum(&big)).collect();
    let mut joint = cyclic.clone();
    joint.extend(images.iter().cloned());
    let unit = phi_map(&GAElem::identity(&small), &big, &norm)?;
    Ok(CyclicIsomorphism {
        n,
        multiplicative: check(norm.clone())?,
        injective: span_rank(&images)? == n - 1,
        onto_cyclic_algebra: span_rank(&joint)? == span_rank(&cyclic)?,
        unit_idempotent: &unit * &unit == unit,
        multiplicative_without_normalization: check(rat(1, 1))?,
    })
}

/// True when the normalized map is an injective algebra map into the
/// cyclic Eulerian algebra.
pub fn cyclic_isomorphism_check(n: usize) -> Result<bool> {
    Ok(cyclic_isomorphism(n)?.holds())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn holds_for_three_and_four() {
        for n in [3, 4] {
            let c = cyclic_isomorphism(n).unwrap();
            assert!(c.holds(), "{c:?}");
            assert!(!c.multiplicative_without_normalization);
        }
        assert!(cyclic_isomorphism(2).is_err());
    }
}
