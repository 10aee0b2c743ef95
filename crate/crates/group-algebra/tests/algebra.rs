use std::sync::Arc;

use peaklab_algebra::*;
use peaklab_arith::int;
use peaklab_perm::{AnyPermutation, GroupKind, Permutation};

fn sums(g: &Arc<Group>, f: ClassFamily) -> Vec<GAElem> {
    classes(g, f).unwrap().iter().map(|c| c.sum(g)).collect()
}

fn group_for(f: StructureFamily, n: usize) -> Arc<Group> {
    Group::get(f.group(), n).unwrap()
}

fn sizes(f: StructureFamily) -> std::ops::RangeInclusive<usize> {
    match f.group() {
        GroupKind::Symmetric => 3..=5,
        GroupKind::Hyperoctahedral => 2..=3,
    }
}

#[test]
fn orthogonal_idempotents_for_every_family() {
    for f in StructureFamily::ALL {
        for n in sizes(f) {
            let e = idempotents(n, f).unwrap();
            // e^(r)_i e^(r)_j = δ_ij e^(l)_i
            let sq =
                if f == StructureFamily::RhoR { idempotents(n, StructureFamily::RhoL).unwrap() } else { e.clone() };
            let g = group_for(f, n);
            for (i, a) in e.iter().enumerate() {
                for (j, b) in e.iter().enumerate() {
                    let want = if i == j { sq[i].clone() } else { GAElem::zero(&g) };
                    assert_eq!(a * b, want, "{} n={n} ({i},{j})", f.tag());
                }
            }
        }
    }
}

#[test]
fn idempotents_sum_to_unit_value() {
    for f in StructureFamily::ALL {
        for n in sizes(f) {
            let total = idempotents(n, f).unwrap().into_iter().fold(GAElem::zero(&group_for(f, n)), |s, e| &s + &e);
            assert_eq!(total, structure_polynomial(n, f).unwrap().eval(&int(1)), "{} n={n}", f.tag());
        }
    }
}

#[test]
fn filled_table_cells_at_four_and_five() {
    for n in [4, 5] {
        for cell in table_one() {
            let r = check_cell(n, cell).unwrap();
            assert_ne!(r.holds, Some(false), "n={n} {r:?}");
        }
    }
}

#[test]
fn open_cells_are_computed_only() {
    let cell = table_one().into_iter().find(|c| c.expected.is_none()).unwrap();
    assert_eq!(check_cell(4, cell).unwrap().holds, None);
    let raw = cell_products(4, cell.row, cell.col).unwrap();
    assert!(!raw.is_empty());
}

fn dimension_cases(n: usize) -> Vec<(&'static str, GroupKind, Vec<ClassFamily>, usize)> {
    use ClassFamily::*;
    let mut v = vec![
        ("e", GroupKind::Symmetric, vec![DescentNum], n),
        ("e_c", GroupKind::Symmetric, vec![CyclicDescentNum], n - 1),
        ("p", GroupKind::Symmetric, vec![PeakInteriorNum], (n + 1) / 2),
        ("p_bar", GroupKind::Symmetric, vec![PeakExteriorNum], (n + 1) / 2),
        ("p_l", GroupKind::Symmetric, vec![PeakLeftNum], n / 2 + 1),
        // Both families sum to the whole group, so odd n also gives n.
        ("p_dot", GroupKind::Symmetric, vec![PeakInteriorNum, PeakLeftNum], n),
    ];
    if n <= 3 {
        v.push(("e_B", GroupKind::Hyperoctahedral, vec![BDescentNum], n + 1));
        v.push(("e_dot_B", GroupKind::Hyperoctahedral, vec![BDescentNum, BCyclicDescentNum], 2 * n));
        v.push(("p_B", GroupKind::Hyperoctahedral, vec![BPeakSignNum], n + 1));
    }
    v
}

#[test]
fn dimensions() {
    for n in 2..=5 {
        for (name, kind, fams, want) in dimension_cases(n) {
            let g = Group::get(kind, n).unwrap();
            let elems: Vec<GAElem> = fams.iter().flat_map(|&f| sums(&g, f)).collect();
            assert_eq!(span_rank(&elems).unwrap(), want, "{name} n={n}");
        }
    }
}

#[test]
fn descent_classes_have_eulerian_sizes() {
    for n in 1..=6 {
        let g = Group::symmetric(n).unwrap();
        let got: Vec<usize> = classes(&g, ClassFamily::DescentNum).unwrap().iter().map(|c| c.members.len()).collect();
        let mut a = vec![1usize];
        for m in 2..=n {
            a = (0..m)
                .map(|i| {
                    let keep = if i < a.len() { (i + 1) * a[i] } else { 0 };
                    let up = if i > 0 { (m - i) * a[i - 1] } else { 0 };
                    keep + up
                })
                .collect();
        }
        assert_eq!(got, a, "n={n}");
    }
}

fn eta(g: &Arc<Group>) -> GAElem {
    let i = g.index_of(&AnyPermutation::from(Permutation::eta(g.n()))).unwrap();
    GAElem::basis(g, i)
}

#[test]
fn eta_transfer() {
    for n in 2..=5 {
        let g = Group::symmetric(n).unwrap();
        let h = eta(&g);
        let rho = structure_polynomial(n, StructureFamily::Rho).unwrap();
        let rho_bar = structure_polynomial(n, StructureFamily::RhoBar).unwrap();
        assert_eq!(rho, rho_bar.left_mul(&h).unwrap(), "n={n}");
        let l = structure_polynomial(n, StructureFamily::RhoL).unwrap();
        let r = structure_polynomial(n, StructureFamily::RhoR).unwrap();
        assert_eq!(l, r.right_mul(&h).unwrap(), "n={n}");
    }
}

#[test]
fn interior_peak_algebra_is_an_ideal() {
    for n in 2..=5 {
        let g = Group::symmetric(n).unwrap();
        let p = sums(&g, ClassFamily::PeakInteriorNum);
        let mut dot = p.clone();
        dot.extend(sums(&g, ClassFamily::PeakLeftNum));
        for a in &dot {
            for b in &p {
                assert!(in_span(&p, &(a * b)).unwrap(), "n={n}");
                assert!(in_span(&p, &(b * a)).unwrap(), "n={n}");
            }
        }
    }
}

#[test]
fn descent_and_peak_span_not_commutative() {
    let g = Group::symmetric(3).unwrap();
    let mut elems = sums(&g, ClassFamily::DescentNum);
    elems.extend(sums(&g, ClassFamily::PeakInteriorNum));
    let witness = elems.iter().enumerate().find_map(|(i, a)| {
        elems.iter().enumerate().find(|(_, b)| !a.commutator(b).unwrap().is_zero()).map(|(j, _)| (i, j))
    });
    assert!(witness.is_some());
    let g2 = Group::symmetric(2).unwrap();
    let mut two = sums(&g2, ClassFamily::DescentNum);
    two.extend(sums(&g2, ClassFamily::PeakInteriorNum));
    assert!(two.iter().all(|a| two.iter().all(|b| a.commutator(b).unwrap().is_zero())));
}

#[test]
fn eulerian_algebra_is_closed() {
    let g = Group::symmetric(4).unwrap();
    let c = multiplicative_closure(&sums(&g, ClassFamily::DescentNum), 24).unwrap();
    assert!(c.initially_closed());
    assert_eq!(c.dimension, 4);
}

#[test]
fn right_peak_numbers_not_closed() {
    let g = Group::symmetric(3).unwrap();
    let r = sums(&g, ClassFamily::PeakRightNum);
    assert_eq!(r.len(), 2);
    assert_eq!(r[0].support_len(), 1);
    assert!(!in_span(&r, &(&r[0] * &r[0])).unwrap());
    let c = multiplicative_closure(&r, 6).unwrap();
    assert!(!c.initially_closed());
    assert!(c.witness.is_some());
    assert!(c.dimension > 2);
}

#[test]
fn left_peak_algebra_inside_right_peak_closure() {
    let g = Group::symmetric(4).unwrap();
    let c = multiplicative_closure(&sums(&g, ClassFamily::PeakRightNum), 24).unwrap();
    let left = sums(&g, ClassFamily::PeakLeftNum);
    let mut joint = c.basis.clone();
    joint.extend(left.iter().cloned());
    assert_eq!(span_rank(&joint).unwrap(), c.dimension);
    assert!(span_rank(&left).unwrap() < c.dimension);
}

#[test]
fn algebra_families_have_constant_structure_constants() {
    for n in 1..=4 {
        for f in [ClassFamily::DescentSet, ClassFamily::PeakInteriorSet, ClassFamily::PeakLeftSet] {
            assert!(structure_constants(n, f).unwrap().well_defined(), "{} n={n}", f.tag());
        }
    }
}

#[test]
fn sign_peak_sets_close_only_for_small_n() {
    for n in 1..=2 {
        assert!(structure_constants(n, ClassFamily::BPeakSignSet).unwrap().well_defined(), "n={n}");
    }
    let sc = structure_constants(3, ClassFamily::BPeakSignSet).unwrap();
    assert_eq!(sc.labels.len(), 5);
    let v = sc.violation.expect("B_3 sign-peak sets are not constant");
    assert_eq!((v.representative.clone(), v.other.clone()), (vec![1, -3, -2], vec![1, -2, -3]));
    assert_ne!(v.representative_count, v.other_count);
}

#[test]
fn right_peak_sets_violate_constancy() {
    let first = (1..=4)
        .find(|&n| !structure_constants(n, ClassFamily::PeakRightSet).unwrap().well_defined())
        .expect("violation at some n <= 4");
    let sc = structure_constants(first, ClassFamily::PeakRightSet).unwrap();
    let v = sc.violation.unwrap();
    assert_ne!(v.representative_count, v.other_count);
    println!("right peak sets: first violation at n = {first}: {v:?}");
}

#[test]
fn exterior_peak_sets_search() {
    let first = (1..=5).find(|&n| !structure_constants(n, ClassFamily::PeakExteriorSet).unwrap().well_defined());
    println!("exterior peak sets: first constancy violation at n = {first:?}");
}

#[test]
fn refined_relations() {
    for n in 2..=5 {
        assert!(refined_decomposition(n, Refinement::TypeA).unwrap().all_hold(), "A n={n}");
    }
    for n in 2..=3 {
        assert!(refined_decomposition(n, Refinement::TypeB).unwrap().all_hold(), "B n={n}");
    }
}

#[test]
fn all_theorems_exhaustive_small() {
    for t in theorems() {
        let range = match t.group {
            GroupKind::Symmetric => 3..=5,
            GroupKind::Hyperoctahedral => 2..=3,
        };
        for n in range {
            let v = verify_theorem(n, &t, GridMode::Full, Route::Collapsed).unwrap();
            assert_eq!(v.ok, t.expected, "{} n={n}", t.id);
            assert_eq!(v.counterexample.is_some(), !t.expected, "{} n={n}", t.id);
        }
    }
}

#[test]
fn cyclic_isomorphism_at_three_to_five() {
    for n in 3..=5 {
        assert!(cyclic_isomorphism_check(n).unwrap(), "n={n}");
    }
}

#[test]
fn largest_sizes_on_sampled_grid() {
    let mode = GridMode::Sampled { count: 8, seed: 7, range: 40 };
    for t in theorems() {
        let n = match t.group {
            GroupKind::Symmetric => 6,
            GroupKind::Hyperoctahedral => 4,
        };
        let start = std::time::Instant::now();
        let v = verify_theorem(n, &t, mode, Route::Collapsed).unwrap();
        assert_eq!(v.ok, t.expected, "{} n={n}", t.id);
        println!("{} n={n} nodes={} {:?}", t.id, v.nodes, start.elapsed());
    }
}
