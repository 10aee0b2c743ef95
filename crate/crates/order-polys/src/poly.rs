use peaklab_arith::{binom_poly, int, interpolate, rat, Rational, RationalGF, UniPoly};
use peaklab_perm::stats::{cdes, cdes_b, des, des_b, epe, lpe, pe, pe_b, rpe, sign_stat};
use peaklab_perm::{AnyPermutation, GroupElement, Permutation, SignedPermutation};
use peaklab_poset::{count_partitions_guarded, BPoset, Guard, Poset};

use crate::{OrderError, OrderPolyKind, Result};

fn gf(num: UniPoly, den: UniPoly) -> RationalGF {
    RationalGF::new(num, den).expect("denominator is a power of (1-t) or (1+t)")
}

fn one_plus_t(e: usize) -> UniPoly {
    UniPoly::from_ints(&[1, 1]).pow(e as u32)
}

fn one_minus_t(e: usize) -> UniPoly {
    UniPoly::from_ints(&[1, -1]).pow(e as u32)
}

/// `u = 4t/(1+t)^2`.
pub fn u_substitution() -> RationalGF {
    gf(UniPoly::from_ints(&[0, 4]), one_plus_t(2))
}

/// `½ (1+t)^(n+1)/(1-t)^(n+1) u^e`; `e = pe+1` for interior chains.
fn interior_gf(n: usize, e: usize) -> RationalGF {
    let base = gf(one_plus_t(n + 1).scale(&rat(1, 2)), one_minus_t(n + 1));
    &base * &u_substitution().pow(e as u32)
}

/// `(1+t)^n/(1-t)^(n+1) u^e`; `e = lpe` for left chains.
fn left_gf(n: usize, e: usize) -> RationalGF {
    let base = gf(one_plus_t(n), one_minus_t(n + 1));
    &base * &u_substitution().pow(e as u32)
}

/// `(1+t)^n/(1-t)^(n+1) (2t/(1+t))^sign u^peaks`.
fn b_gf(n: usize, sign: usize, peaks: usize) -> RationalGF {
    let s = gf(UniPoly::from_ints(&[0, 2]), one_plus_t(1)).pow(sign as u32);
    &left_gf(n, peaks) * &s
}

/// Polynomial of degree <= n whose values at `k = 0..=n` are the series coefficients.
fn poly_from_gf(g: &RationalGF, n: usize) -> UniPoly {
    let pts: Vec<(Rational, Rational)> =
        g.coeffs(n + 1).into_iter().enumerate().map(|(k, c)| (int(k as i64), c)).collect();
    interpolate(&pts).expect("distinct nodes")
}

/// `Ω'` of any `π ∈ S_n` with `pe(π) = peaks`.
pub fn enriched_interior_poly(n: usize, peaks: usize) -> UniPoly {
    poly_from_gf(&interior_gf(n, peaks + 1), n)
}

/// `Ω^(l)` of any `π ∈ S_n` with `lpe(π) = peaks`.
pub fn enriched_left_poly(n: usize, peaks: usize) -> UniPoly {
    poly_from_gf(&left_gf(n, peaks), n)
}

/// `Ω'_B` of any `π ∈ B_n` with `ς(π) = sign` and `pe_B(π) = peaks`.
pub fn enriched_b_poly(n: usize, sign: usize, peaks: usize) -> UniPoly {
    poly_from_gf(&b_gf(n, sign, peaks), n)
}

fn mismatch(kind: OrderPolyKind) -> OrderError {
    OrderError::KindMismatch { kind, expected: kind.group() }
}

/// Order polynomial of a permutation in `S_n` for a type A kind.
pub fn order_polynomial_a(p: &Permutation, kind: OrderPolyKind) -> Result<UniPoly> {
    let n = p.n();
    if n == 0 {
        return Err(OrderError::EmptyPermutation);
    }
    let ni = n as i64;
    Ok(match kind {
        OrderPolyKind::AOrdinary => binom_poly(ni - 1 - des(p) as i64, n),
        OrderPolyKind::ACyclic => binom_poly(ni - 1 - cdes(p) as i64, n - 1).scale(&rat(1, ni)),
        OrderPolyKind::EnrichedInterior => enriched_interior_poly(n, pe(p)),
        OrderPolyKind::EnrichedLeft => enriched_left_poly(n, lpe(p)),
        // right chains of π count like left chains of πη, and lpe(πη) = rpe(π)
        OrderPolyKind::EnrichedRight => enriched_left_poly(n, rpe(p)),
        // exterior chains of π count like interior chains of ηπ, and pe(ηπ) = epe(π) - 1
        OrderPolyKind::EnrichedExterior => enriched_interior_poly(n, epe(p) - 1),
        _ => return Err(mismatch(kind)),
    })
}

/// Order polynomial of a signed permutation for a type B kind.
pub fn order_polynomial_b(p: &SignedPermutation, kind: OrderPolyKind) -> Result<UniPoly> {
    let n = p.n();
    if n == 0 {
        return Err(OrderError::EmptyPermutation);
    }
    let ni = n as i64;
    Ok(match kind {
        OrderPolyKind::BOrdinary => binom_poly(ni - des_b(p) as i64, n),
        OrderPolyKind::BCyclic => binom_poly(ni - cdes_b(p) as i64, n),
        OrderPolyKind::EnrichedB => enriched_b_poly(n, sign_stat(p), pe_b(p)),
        _ => return Err(mismatch(kind)),
    })
}

pub fn order_polynomial(p: &AnyPermutation, kind: OrderPolyKind) -> Result<UniPoly> {
    match p {
        AnyPermutation::Symmetric(p) => order_polynomial_a(p, kind),
        AnyPermutation::Signed(p) => order_polynomial_b(p, kind),
    }
}

/// Closed-form generating function `Σ_k Ω(π;k) t^k` for a type A enriched kind.
pub fn enriched_gf_a(p: &Permutation, kind: OrderPolyKind) -> Result<RationalGF> {
    let n = p.n();
    Ok(match kind {
        OrderPolyKind::EnrichedInterior => interior_gf(n, pe(p) + 1),
        OrderPolyKind::EnrichedLeft => left_gf(n, lpe(p)),
        OrderPolyKind::EnrichedRight => left_gf(n, rpe(p)),
        OrderPolyKind::EnrichedExterior => interior_gf(n, epe(p)),
        OrderPolyKind::EnrichedB => return Err(mismatch(kind)),
        _ => return Err(OrderError::NotEnriched(kind)),
    })
}

/// Closed-form generating function of `Ω'_B(π;k)`.
pub fn enriched_gf_b(p: &SignedPermutation) -> RationalGF {
    b_gf(p.n(), sign_stat(p), pe_b(p))
}

pub fn enriched_gf(p: &AnyPermutation, kind: OrderPolyKind) -> Result<RationalGF> {
    match (p, kind) {
        (AnyPermutation::Signed(p), OrderPolyKind::EnrichedB) => Ok(enriched_gf_b(p)),
        (AnyPermutation::Signed(_), k) if k.is_enriched() => Err(mismatch(k)),
        (AnyPermutation::Symmetric(p), k) => enriched_gf_a(p, k),
        (_, k) => Err(OrderError::NotEnriched(k)),
    }
}

fn oracle_count(p: &AnyPermutation, kind: OrderPolyKind, k: usize, guard: Guard) -> Result<Option<u128>> {
    if kind.group() != p.kind() {
        return Err(mismatch(kind));
    }
    let Some(spec) = kind.image_spec(k) else { return Ok(None) };
    Ok(Some(match p {
        AnyPermutation::Symmetric(x) => count_partitions_guarded(&Poset::chain(x), spec, guard)?,
        AnyPermutation::Signed(x) => count_partitions_guarded(&BPoset::chain(x), spec, guard)?,
    }))
}

/// Builds the polynomial by interpolating brute-force chain counts at
/// `k = 0..=n`. Needs `guard.max_k >= n`; cyclic kinds have no oracle.
pub fn order_polynomial_from_oracle(p: &AnyPermutation, kind: OrderPolyKind, guard: Guard) -> Result<Option<UniPoly>> {
    let n = p.n();
    let mut pts = Vec::with_capacity(n + 1);
    for k in 0..=n {
        match oracle_count(p, kind, k, guard)? {
            None => return Ok(None),
            Some(c) => pts.push((int(k as i64), Rational::from_integer(c.into()))),
        }
    }
    Ok(Some(interpolate(&pts)?))
}

/// First disagreement between the closed form, the generating function
/// (enriched kinds) and the oracle.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OracleMismatch {
    pub k: usize,
    pub polynomial: Rational,
    pub generating_function: Option<Rational>,
    pub oracle: Rational,
}

/// Compares all available routes at `k = 0..=kmax`; `Ok(None)` means full agreement.
pub fn oracle_mismatch(
    p: &AnyPermutation,
    kind: OrderPolyKind,
    kmax: usize,
    guard: Guard,
) -> Result<Option<OracleMismatch>> {
    let poly = order_polynomial(p, kind)?;
    let series = if kind.is_enriched() { Some(enriched_gf(p, kind)?.coeffs(kmax + 1)) } else { None };
    for k in 0..=kmax {
        let Some(c) = oracle_count(p, kind, k, guard)? else { return Ok(None) };
        let oracle = Rational::from_integer(c.into());
        let value = poly.eval_int(k as i64);
        let g = series.as_ref().map(|s| s[k].clone());
        if value != oracle || g.as_ref().is_some_and(|g| *g != oracle) {
            return Ok(Some(OracleMismatch { k, polynomial: value, generating_function: g, oracle }));
        }
    }
    Ok(None)
}
