use peaklab_perm::stats::*;
use peaklab_perm::{GroupElement, Permutation, PosSet, SignedPermutation};
use proptest::prelude::*;

fn perm(max_n: usize) -> impl Strategy<Value = Permutation> {
    (1..=max_n)
        .prop_flat_map(|n| Just((1..=n as u32).collect::<Vec<_>>()).prop_shuffle())
        .prop_map(|v| Permutation::new(v).unwrap())
}

fn signed(max_n: usize) -> impl Strategy<Value = SignedPermutation> {
    (1..=max_n)
        .prop_flat_map(|n| {
            (Just((1..=n as i32).collect::<Vec<_>>()).prop_shuffle(), prop::collection::vec(any::<bool>(), n))
        })
        .prop_map(|(v, s)| {
            SignedPermutation::new(v.into_iter().zip(s).map(|(x, neg)| if neg { -x } else { x }).collect()).unwrap()
        })
}

proptest! {
    #[test]
    fn peak_set_lattice(p in perm(12)) {
        // at n = 1 position 1 is an exterior peak but neither left nor right
        prop_assume!(p.n() >= 2);
        let l = peak_set(&p, PeakKind::Left);
        let r = peak_set(&p, PeakKind::Right);
        prop_assert_eq!(peak_set(&p, PeakKind::Interior), l.intersection(r));
        prop_assert_eq!(peak_set(&p, PeakKind::Exterior), l.union(r));
    }

    #[test]
    fn reversal_swaps_left_and_right(p in perm(12)) {
        let n = p.n();
        let eta = Permutation::eta(n);
        let flipped: PosSet = peak_set(&p, PeakKind::Left).iter().map(|i| n + 1 - i).collect();
        prop_assert_eq!(peak_set(&p.compose(&eta).unwrap(), PeakKind::Right), flipped);
        prop_assert_eq!(lpe(&p), rpe(&p.compose(&eta).unwrap()));
        prop_assert_eq!(pe(&eta.compose(&p).unwrap()) + 1, epe(&p));
    }

    #[test]
    fn peak_counts_bounded(p in perm(12)) {
        let n = p.n();
        prop_assert!(pe(&p) <= (n - 1) / 2);
        prop_assert!(lpe(&p) <= n / 2);
    }

    #[test]
    fn signed_peaks_bounded(p in signed(10)) {
        prop_assert!(pe_b(&p) <= p.n() / 2);
        prop_assert!(signed_peak_set(&p).is_subset(PosSet::interval(1, p.n() - 1)));
        prop_assert!(signed_descent_set(&p).is_subset(PosSet::interval(0, p.n() - 1)));
    }

    #[test]
    fn signed_inverse(p in signed(10)) {
        prop_assert_eq!(p.compose(&p.inverse()).unwrap(), SignedPermutation::identity(p.n()));
        prop_assert_eq!(p.inverse().compose(&p).unwrap(), SignedPermutation::identity(p.n()));
    }
}

fn group_laws<G: GroupElement>(n: usize) {
    let all = G::elements(n).unwrap();
    let id = G::identity(n);
    for a in &all {
        assert_eq!(a.compose_unchecked(&a.inverse()), id);
        assert_eq!(a.inverse().compose_unchecked(a), id);
        assert_eq!(a.compose_unchecked(&id), *a);
        for b in &all {
            let ab = a.compose_unchecked(b);
            for c in all.iter().step_by(3) {
                assert_eq!(ab.compose_unchecked(c), a.compose_unchecked(&b.compose_unchecked(c)));
            }
        }
    }
}

#[test]
fn group_axioms_exhaustive() {
    for n in 0..=4 {
        group_laws::<Permutation>(n);
    }
    for n in 0..=3 {
        group_laws::<SignedPermutation>(n);
    }
}

#[test]
fn group_orders() {
    for n in 0..=7 {
        assert_eq!(Permutation::elements(n).unwrap().len(), (1..=n).product::<usize>());
    }
    for n in 0..=5 {
        assert_eq!(SignedPermutation::elements(n).unwrap().len(), (1..=n).product::<usize>() << n);
    }
}
