use peaklab_arith::{int, rat, UniPoly};
use peaklab_perm::stats::{epe, pe, pe_b, sign_stat};
use peaklab_perm::AnyPermutation;

use crate::{order_polynomial, OrderError, OrderPolyKind, Result};

/// Checks the functional equation of an enriched order polynomial as a
/// polynomial identity:
/// interior/exterior (and type B with `π(1) < 0`): `Ω(-x) = (-1)^n Ω(x)`;
/// left/right (and type B with `π(1) > 0`): `Ω(-x-1/2) = (-1)^n Ω(x-1/2)`.
pub fn reciprocity_check(p: &AnyPermutation, kind: OrderPolyKind) -> Result<bool> {
    if !kind.is_enriched() {
        return Err(OrderError::NotEnriched(kind));
    }
    let poly = order_polynomial(p, kind)?;
    let half_shift = match (p, kind) {
        (AnyPermutation::Signed(x), OrderPolyKind::EnrichedB) => sign_stat(x) == 0,
        (_, OrderPolyKind::EnrichedLeft | OrderPolyKind::EnrichedRight) => true,
        _ => false,
    };
    Ok(functional_equation(&poly, p.n(), half_shift))
}

/// `Ω(-x + c) == (-1)^n Ω(x + c)` with `c = -1/2` or `0`.
pub(crate) fn functional_equation(poly: &UniPoly, n: usize, half_shift: bool) -> bool {
    let c = if half_shift { rat(-1, 2) } else { int(0) };
    let sign = if n % 2 == 0 { int(1) } else { int(-1) };
    poly.compose_linear(&int(-1), &c) == poly.compose_linear(&int(1), &c).scale(&sign)
}

/// Checks the forced zeros of an enriched order polynomial at small
/// nonnegative integers: interior `Ω'(k) = 0` for `k <= pe`; exterior for
/// `k < epe`; type B `Ω'_B(k) = 0` for `k < pe_B` when `π(1) > 0` and for
/// `k <= pe_B` when `π(1) < 0`.
pub fn vanishing_check(p: &AnyPermutation, kind: OrderPolyKind) -> Result<bool> {
    let bound = match (p, kind) {
        (AnyPermutation::Symmetric(x), OrderPolyKind::EnrichedInterior) => pe(x) + 1,
        (AnyPermutation::Symmetric(x), OrderPolyKind::EnrichedExterior) => epe(x),
        (AnyPermutation::Signed(x), OrderPolyKind::EnrichedB) => pe_b(x) + sign_stat(x),
        _ => return Err(OrderError::NotEnriched(kind)),
    };
    let poly = order_polynomial(p, kind)?;
    Ok((0..bound).all(|k| poly.eval_int(k as i64) == int(0)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use peaklab_perm::{GroupElement, Permutation, SignedPermutation};

    #[test]
    fn documented_cases() {
        for n in [3, 4] {
            for x in Permutation::elements(n).unwrap() {
                assert!(reciprocity_check(&x.into(), OrderPolyKind::EnrichedInterior).unwrap());
            }
        }
        let x = AnyPermutation::parse("[-2,1]", false).unwrap();
        assert!(reciprocity_check(&x, OrderPolyKind::EnrichedB).unwrap());
        assert!(reciprocity_check(&AnyPermutation::parse("[1]", false).unwrap(), OrderPolyKind::AOrdinary).is_err());
    }

    #[test]
    fn branches_are_distinct() {
        // 2x is odd but fails the half-shifted law
        let p = UniPoly::from_ints(&[0, 2]);
        assert!(functional_equation(&p, 1, false));
        assert!(!functional_equation(&p, 1, true));
        // 2x + 1 is the other way round
        let q = UniPoly::from_ints(&[1, 2]);
        assert!(functional_equation(&q, 1, true));
        assert!(!functional_equation(&q, 1, false));
        let x: SignedPermutation = "[1]".parse().unwrap();
        assert!(reciprocity_check(&x.into(), OrderPolyKind::EnrichedB).unwrap());
    }
}
