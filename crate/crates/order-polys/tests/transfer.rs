use peaklab_arith::{int, UniPoly};
use peaklab_order::*;
use peaklab_perm::stats::{epe, lpe, pe, pe_b, rpe, sign_stat};
use peaklab_perm::{AnyPermutation, GroupElement, Permutation, SignedPermutation};
use peaklab_poset::{count_partitions, BPoset, Guard, ImageSetSpec};
use proptest::prelude::*;

const A_KINDS: [OrderPolyKind; 6] = [
    OrderPolyKind::AOrdinary,
    OrderPolyKind::ACyclic,
    OrderPolyKind::EnrichedInterior,
    OrderPolyKind::EnrichedLeft,
    OrderPolyKind::EnrichedRight,
    OrderPolyKind::EnrichedExterior,
];
const B_KINDS: [OrderPolyKind; 3] = [OrderPolyKind::BOrdinary, OrderPolyKind::BCyclic, OrderPolyKind::EnrichedB];

fn wide() -> Guard {
    Guard { max_n: 6, max_k: 6 }
}

#[test]
fn oracle_agrees_on_all_of_s_n() {
    for n in 1..=5 {
        for p in Permutation::elements(n).unwrap() {
            let p = AnyPermutation::from(p);
            for kind in A_KINDS {
                assert_eq!(oracle_mismatch(&p, kind, n + 1, wide()).unwrap(), None, "{p} {kind}");
            }
        }
    }
}

#[test]
fn oracle_agrees_on_all_of_b_n() {
    for n in 1..=3 {
        for p in SignedPermutation::elements(n).unwrap() {
            let p = AnyPermutation::from(p);
            for kind in B_KINDS {
                assert_eq!(oracle_mismatch(&p, kind, n + 1, wide()).unwrap(), None, "{p} {kind}");
            }
        }
    }
}

#[test]
fn interpolated_oracle_matches_polynomial() {
    for p in Permutation::elements(4).unwrap() {
        let p = AnyPermutation::from(p);
        for kind in [OrderPolyKind::AOrdinary, OrderPolyKind::EnrichedInterior, OrderPolyKind::EnrichedExterior] {
            let oracle = order_polynomial_from_oracle(&p, kind, wide()).unwrap().unwrap();
            assert_eq!(oracle, order_polynomial(&p, kind).unwrap());
        }
        assert_eq!(order_polynomial_from_oracle(&p, OrderPolyKind::ACyclic, wide()).unwrap(), None);
    }
}

#[test]
fn enriched_polynomials_depend_only_on_peak_counts() {
    for n in 1..=5 {
        for p in Permutation::elements(n).unwrap() {
            let a = AnyPermutation::from(p.clone());
            assert_eq!(
                order_polynomial(&a, OrderPolyKind::EnrichedInterior).unwrap(),
                enriched_interior_poly(n, pe(&p))
            );
            assert_eq!(order_polynomial(&a, OrderPolyKind::EnrichedLeft).unwrap(), enriched_left_poly(n, lpe(&p)));
            assert_eq!(order_polynomial(&a, OrderPolyKind::EnrichedRight).unwrap(), enriched_left_poly(n, rpe(&p)));
            assert_eq!(
                order_polynomial(&a, OrderPolyKind::EnrichedExterior).unwrap(),
                enriched_interior_poly(n, epe(&p) - 1)
            );
        }
    }
    for n in 1..=4 {
        for p in SignedPermutation::elements(n).unwrap() {
            let a = AnyPermutation::from(p.clone());
            let poly = order_polynomial(&a, OrderPolyKind::EnrichedB).unwrap();
            assert_eq!(poly, enriched_b_poly(n, sign_stat(&p), pe_b(&p)));
        }
    }
}

#[test]
fn reciprocity_and_vanishing_hold_everywhere() {
    for n in 1..=5 {
        for p in Permutation::elements(n).unwrap() {
            let p = AnyPermutation::from(p);
            for kind in A_KINDS.into_iter().filter(|k| k.is_enriched()) {
                assert!(reciprocity_check(&p, kind).unwrap(), "{p} {kind}");
            }
            for kind in [OrderPolyKind::EnrichedInterior, OrderPolyKind::EnrichedExterior] {
                assert!(vanishing_check(&p, kind).unwrap(), "{p} {kind}");
            }
        }
    }
    for n in 1..=4 {
        for p in SignedPermutation::elements(n).unwrap() {
            let p = AnyPermutation::from(p);
            assert!(reciprocity_check(&p, OrderPolyKind::EnrichedB).unwrap(), "{p}");
            assert!(vanishing_check(&p, OrderPolyKind::EnrichedB).unwrap(), "{p}");
        }
    }
}

#[test]
fn peak_polynomial_support_is_small() {
    for n in 1..=7 {
        for kind in [PeakPolyKind::WInterior, PeakPolyKind::WLeft] {
            let w = peak_polynomial(n, kind).unwrap();
            let nonzero = w.coeffs().iter().filter(|c| **c != int(0)).count();
            assert!(nonzero <= (n + 1) / 2 + 1, "{} n={n}: {w}", kind.tag());
        }
        let w = peak_polynomial(n, PeakPolyKind::WInterior).unwrap();
        assert!(w.coeffs().iter().filter(|c| **c != int(0)).count() <= (n + 1) / 2);
    }
}

#[test]
fn documented_small_values() {
    assert_eq!(peak_polynomial(3, PeakPolyKind::WInterior).unwrap(), UniPoly::from_ints(&[0, 4, 2]));
    assert_eq!(peak_polynomial(3, PeakPolyKind::AEulerian).unwrap(), UniPoly::from_ints(&[0, 1, 4, 1]));
    assert_eq!(peak_polynomial(1, PeakPolyKind::BEulerian).unwrap(), UniPoly::from_ints(&[1, 1]));
    assert_eq!(peak_polynomial(1, PeakPolyKind::WLeft).unwrap(), UniPoly::one());
}

#[test]
fn all_identities_through_n_6() {
    for n in 1..=6 {
        for which in Identity43::ALL {
            assert!(identity_check_43(n, which).unwrap(), "{which} n={n}");
        }
    }
}

#[test]
fn split_sign_posets_count_mixed_powers() {
    // 0 < -j for j <= i and 0 < j for j > i
    for n in 1..=3usize {
        for i in 0..=n {
            let rels: Vec<(i32, i32)> =
                (1..=n as i32).map(|j| if j as usize <= i { (0, -j) } else { (0, j) }).collect();
            let p = BPoset::symmetrized(n, &rels).unwrap();
            for k in 0..=4u128 {
                let c = count_partitions(&p, ImageSetSpec::OrdinaryB(k as usize)).unwrap();
                assert_eq!(c, k.pow(i as u32) * (k + 1).pow((n - i) as u32));
            }
        }
    }
}

proptest! {
    #[test]
    fn interior_gf_matches_polynomial(seed in prop::collection::vec(0u32..100, 1..=7)) {
        let mut idx: Vec<usize> = (0..seed.len()).collect();
        idx.sort_by_key(|&i| (seed[i], i));
        let images: Vec<u32> = idx.iter().map(|&i| i as u32 + 1).collect();
        let p = AnyPermutation::from(Permutation::new(images).unwrap());
        for kind in [OrderPolyKind::EnrichedInterior, OrderPolyKind::EnrichedLeft, OrderPolyKind::EnrichedRight, OrderPolyKind::EnrichedExterior] {
            let poly = order_polynomial(&p, kind).unwrap();
            let series = enriched_gf(&p, kind).unwrap().coeffs(12);
            for (k, c) in series.iter().enumerate() {
                prop_assert_eq!(c, &poly.eval_int(k as i64));
            }
        }
    }
}
