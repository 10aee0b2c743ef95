use std::collections::BTreeMap;

use peaklab_arith::{int, MultiPoly, Rational};
use peaklab_perm::{AnyPermutation, GroupElement, Permutation, PosSet, SignedPermutation};
use peaklab_poset::ImageSetSpec;
use peaklab_qsym::*;
use proptest::prelude::*;

fn all(n: usize, signed: bool) -> Vec<AnyPermutation> {
    if signed {
        SignedPermutation::elements(n).unwrap().into_iter().map(Into::into).collect()
    } else {
        Permutation::elements(n).unwrap().into_iter().map(Into::into).collect()
    }
}

fn flavors_for(p: &AnyPermutation) -> &'static [Flavor] {
    match p {
        AnyPermutation::Symmetric(_) => &[Flavor::Interior, Flavor::Left],
        AnyPermutation::Signed(_) => &[Flavor::B],
    }
}

#[test]
fn expansions_match_brute_force() {
    for (n, signed) in [(1, false), (2, false), (3, false), (1, true), (2, true)] {
        for p in all(n, signed) {
            for &f in flavors_for(&p) {
                for m in 1..=3 {
                    let s = specialization_check(&p, f, m).unwrap();
                    assert!(s.holds(), "{p} {} m={m}: {s:?}", f.tag());
                }
            }
        }
    }
}

#[test]
fn specialization_chain_to_order_polynomials() {
    for (n, signed) in [(4, false), (3, true)] {
        for p in all(n, signed) {
            for &f in flavors_for(&p) {
                for m in 1..=3 {
                    assert!(specialization_check(&p, f, m).unwrap().matches_order_polynomial, "{p} {} m={m}", f.tag());
                }
            }
        }
    }
}

#[test]
fn gamma_matches_ordinary_partitions() {
    for (n, signed) in [(3, false), (2, true)] {
        for p in all(n, signed) {
            let spec = if signed { ImageSetSpec::OrdinaryB(3) } else { ImageSetSpec::Ordinary(3) };
            let g = truncate_realize(&gamma_expansion(&p, ExpansionBasis::Fundamental).unwrap(), 3).unwrap();
            assert_eq!(g, realize_direct(&p, spec).unwrap(), "{p}");
        }
    }
}

#[test]
fn realizations_depend_only_on_peak_data() {
    for (n, signed) in [(4, false), (3, true)] {
        for &f in if signed { &[Flavor::B][..] } else { &[Flavor::Interior, Flavor::Left][..] } {
            let mut seen: BTreeMap<String, MultiPoly> = BTreeMap::new();
            for p in all(n, signed) {
                let e = delta_expansion(&p, f, ExpansionBasis::Monomial).unwrap();
                let key = e.terms().iter().map(|(k, v)| format!("{k}:{v}")).collect::<Vec<_>>().join(";");
                let key = match (f, &p) {
                    (Flavor::Interior, AnyPermutation::Symmetric(x)) => {
                        peaklab_perm::stats::peak_set(x, peaklab_perm::stats::PeakKind::Interior).to_string()
                    }
                    (Flavor::Left, AnyPermutation::Symmetric(x)) => {
                        peaklab_perm::stats::peak_set(x, peaklab_perm::stats::PeakKind::Left).to_string()
                    }
                    (_, AnyPermutation::Signed(x)) => {
                        format!("{}{}", peaklab_perm::stats::sign_stat(x), peaklab_perm::stats::signed_peak_set(x))
                    }
                    _ => key,
                };
                let r = realize_direct(
                    &p,
                    match f {
                        Flavor::Interior => ImageSetSpec::Enriched(3),
                        Flavor::Left => ImageSetSpec::LeftEnriched(3),
                        Flavor::B => ImageSetSpec::BEnriched(2),
                    },
                )
                .unwrap();
                if let Some(prev) = seen.get(&key) {
                    assert_eq!(prev, &r, "{p} in class {key}");
                } else {
                    seen.insert(key, r);
                }
            }
            let count = seen.len() as u64;
            let want = match f {
                Flavor::Interior => fibonacci(n - 1),
                Flavor::Left => fibonacci(n),
                Flavor::B => fibonacci(n + 1),
            };
            assert_eq!(count, want);
        }
    }
}

#[test]
fn zero_variable_reduces_left_to_interior() {
    for p in all(4, false) {
        let left = realize_direct(&p, ImageSetSpec::LeftEnriched(2)).unwrap();
        let interior = realize_direct(&p, ImageSetSpec::Enriched(2)).unwrap();
        let mut reduced = MultiPoly::zero(2);
        for (e, c) in left.terms() {
            if e[0] == 0 {
                reduced.add_term(e[1..].to_vec(), c.clone()).unwrap();
            }
        }
        assert_eq!(reduced, interior, "{p}");
    }
}

#[test]
fn k_functions_live_on_valid_indices() {
    for n in 1..=5 {
        for s in PosSet::interval(0, n).subsets() {
            let ok = interior_peak_sets(n).contains(&s);
            assert_eq!(k_function(n, QIndex::Set(s), ExpansionBasis::Monomial).is_ok(), ok, "n={n} {s}");
        }
        for sign in 0..=1u8 {
            for s in PosSet::interval(0, n).subsets() {
                let ok = sign_peak_sets(n).contains(&SignPeakSet { sign, peaks: s });
                assert_eq!(SignPeakSet::new(n, sign, s).is_ok(), ok);
            }
        }
    }
}

#[test]
fn fibonacci_ranks() {
    for n in 1..=6 {
        assert_eq!(peak_basis_rank(n, Flavor::Interior).unwrap() as u64, fibonacci(n - 1));
        assert_eq!(peak_basis_rank(n, Flavor::Left).unwrap() as u64, fibonacci(n));
        assert_eq!(peak_basis_rank(n, Flavor::B).unwrap() as u64, fibonacci(n + 1));
    }
    assert_eq!(peak_basis_rank(4, Flavor::Interior).unwrap(), 3);
    assert_eq!(peak_basis_rank(3, Flavor::B).unwrap(), 5);
}

#[test]
fn bipartite_identities() {
    for flavor in BipartiteFlavor::ALL {
        for n in 1..=3 {
            let r = bipartite_report(n, flavor, 2, 2).unwrap();
            assert!(r.holds(), "{} n={n}: {:?}", flavor.tag(), r.failures);
        }
    }
}

#[test]
fn coalgebra_counts() {
    for f in CoalgebraFamily::ALL {
        let t = coalgebra_constants(3, f).unwrap();
        let idx = |l| t.labels.iter().position(|x| x == l).unwrap();
        let mut pairs: BTreeMap<(usize, usize), u64> = BTreeMap::new();
        for e in &t.entries {
            *pairs.entry((idx(&e.i), idx(&e.j))).or_default() += e.value * t.class_sizes[idx(&e.k)] as u64;
        }
        if t.well_defined() {
            for ((i, j), total) in pairs {
                assert_eq!(total, (t.class_sizes[i] * t.class_sizes[j]) as u64, "{} {i} {j}", f.tag());
            }
        }
        if f == CoalgebraFamily::B {
            for l in &t.labels {
                let peaklab_algebra::ClassLabel::SignSet { sign, peaks } = l else { panic!() };
                assert!(SignPeakSet::new(3, *sign as u8, *peaks).is_ok());
            }
        }
    }
}

fn small_set(n: usize) -> impl Strategy<Value = PosSet> {
    (0u64..(1 << n)).prop_map(|b| PosSet(b << 1))
}

proptest! {
    #[test]
    fn fundamental_monomial_round_trip(n in 1usize..=5, s in small_set(4), c in -5i64..5) {
        let s = s.intersection(PosSet::interval(1, n - 1));
        let mut e = QsymExpansion::zero(n, Basis::F);
        e.add(QIndex::Set(s), int(c)).unwrap();
        e.add(QIndex::Set(PosSet::EMPTY), Rational::new(int(1).numer().clone(), 3.into())).unwrap();
        let m = e.to_monomial().unwrap();
        prop_assert_eq!(m.to_fundamental().unwrap(), e.clone());
        let mut b = QsymExpansion::zero(n, Basis::L);
        b.add(QIndex::Set(s.union(PosSet::EMPTY.with(0))), int(c)).unwrap();
        prop_assert_eq!(b.to_monomial().unwrap().to_fundamental().unwrap(), b);
    }

    #[test]
    fn realization_is_linear(n in 1usize..=4, s in small_set(3), t in small_set(3), m in 1usize..=3) {
        let u = PosSet::interval(1, n - 1);
        let (s, t) = (s.intersection(u), t.intersection(u));
        let one = |x: PosSet| QsymExpansion::basis_element(n, Basis::F, QIndex::Set(x)).unwrap();
        let mut both = one(s);
        both.add(QIndex::Set(t), int(1)).unwrap();
        let sum = &truncate_realize(&one(s), m).unwrap() + &truncate_realize(&one(t), m).unwrap();
        prop_assert_eq!(truncate_realize(&both, m).unwrap(), sum);
    }
}
