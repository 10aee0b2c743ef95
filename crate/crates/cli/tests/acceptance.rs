//! Acceptance criteria, one PASS/FAIL line each. Every comparison is exact.
//! Exits with status 1 when any criterion fails.

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::sync::Arc;
use std::time::Instant;

use peaklab_algebra::{
    check_cell, classes, cyclic_isomorphism_check, idempotents, multiplicative_closure, span_rank, structure_constants,
    table_one, theorem, theorems, verify_theorem, ClassFamily, GAElem, GridMode, Group, Route, StructureFamily,
};
use peaklab_arith::{int, UniPoly};
use peaklab_order::{identity_check_43, oracle_mismatch, peak_polynomial, Identity43, OrderPolyKind, PeakPolyKind};
use peaklab_perm::{AnyPermutation, GroupElement, GroupKind, Permutation, SignedPermutation};
use peaklab_poset::{count_partitions, random_bposet, random_poset, BPoset, Guard, ImageSetSpec, Poset};
use peaklab_qsym::{bipartite_report, fibonacci, peak_basis_rank, specialization_check, BipartiteFlavor, Flavor};

type Verdict = Result<String, String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn sym(n: usize) -> Vec<AnyPermutation> {
    Permutation::elements(n).unwrap().into_iter().map(AnyPermutation::from).collect()
}

fn hyp(n: usize) -> Vec<AnyPermutation> {
    SignedPermutation::elements(n).unwrap().into_iter().map(AnyPermutation::from).collect()
}

fn sums(g: &Arc<Group>, f: ClassFamily) -> Vec<GAElem> {
    classes(g, f).unwrap().iter().map(|c| c.sum(g)).collect()
}

fn oracle_equivalence() -> Verdict {
    let mut checked = 0;
    let a_kinds = [
        OrderPolyKind::AOrdinary,
        OrderPolyKind::EnrichedInterior,
        OrderPolyKind::EnrichedLeft,
        OrderPolyKind::EnrichedRight,
        OrderPolyKind::EnrichedExterior,
    ];
    let b_kinds = [OrderPolyKind::BOrdinary, OrderPolyKind::EnrichedB];
    let runs: [(Vec<AnyPermutation>, &[OrderPolyKind], usize); 2] =
        [((1..=5).flat_map(sym).collect(), &a_kinds, 4), ((1..=3).flat_map(hyp).collect(), &b_kinds, 3)];
    for (perms, kinds, kmax) in runs {
        let guard = Guard { max_n: 5, max_k: kmax };
        for p in &perms {
            for &kind in kinds {
                if let Some(m) = oracle_mismatch(p, kind, kmax, guard).map_err(|e| e.to_string())? {
                    return Err(format!("{kind} at {p}: {m:?}"));
                }
                checked += 1;
            }
        }
    }
    Ok(format!("{checked} (permutation, flavor) pairs agree with brute force and generating functions"))
}

fn fundamental_lemmas() -> Verdict {
    let mut checked = 0;
    for n in 1..=5 {
        for i in 0..50u64 {
            let density = 0.1 + 0.6 * (i as f64) / 50.0;
            let p = random_poset(n, density, 1000 * n as u64 + i);
            let exts = p.linear_extensions().map_err(|e| e.to_string())?;
            for spec in ImageSetSpec::all_type_a(3) {
                let direct = count_partitions(&p, spec).unwrap();
                let summed: u128 = exts.iter().map(|x| count_partitions(&Poset::chain(x), spec).unwrap()).sum();
                ensure(direct == summed, || format!("{spec} on {p:?}: {direct} vs {summed}"))?;
                checked += 1;
            }
        }
    }
    for n in 1..=3 {
        for i in 0..20u64 {
            let density = 0.1 + 0.4 * (i as f64) / 20.0;
            let p = random_bposet(n, density, 5000 * n as u64 + i);
            let exts = p.linear_extensions().map_err(|e| e.to_string())?;
            for spec in ImageSetSpec::all_type_b(2) {
                let direct = count_partitions(&p, spec).unwrap();
                let summed: u128 = exts.iter().map(|x| count_partitions(&BPoset::chain(x), spec).unwrap()).sum();
                ensure(direct == summed, || format!("{spec} on {p:?}: {direct} vs {summed}"))?;
                checked += 1;
            }
        }
    }
    Ok(format!("{checked} (poset, flavor) pairs"))
}

fn multiplicative_theorems() -> Verdict {
    let start = Instant::now();
    let mut runs = 0;
    let sampled = GridMode::Sampled { count: 12, seed: 0, range: 60 };
    for t in theorems().into_iter().filter(|t| t.expected) {
        let (exhaustive, largest) = match t.group {
            GroupKind::Symmetric => (3..=5, 6),
            GroupKind::Hyperoctahedral => (2..=3, 4),
        };
        let mut plan: Vec<(usize, GridMode)> = exhaustive.map(|n| (n, GridMode::Full)).collect();
        plan.push((largest, sampled));
        plan.push((largest, GridMode::Full));
        for (n, mode) in plan {
            let v = verify_theorem(n, &t, mode, Route::Collapsed).map_err(|e| e.to_string())?;
            ensure(v.ok, || format!("{} at n = {n} ({mode:?}): {:?}", t.id, v.counterexample))?;
            runs += 1;
        }
        let small = if t.group == GroupKind::Symmetric { 3 } else { 2 };
        let v = verify_theorem(small, &t, GridMode::Full, Route::Direct).map_err(|e| e.to_string())?;
        ensure(v.ok, || format!("{} direct route at n = {small}", t.id))?;
    }
    Ok(format!("{runs} theorem checks in {:.1?}", start.elapsed()))
}

fn idempotent_suites() -> Verdict {
    let mut families = 0;
    for f in StructureFamily::ALL {
        let range = match f.group() {
            GroupKind::Symmetric => 3..=5,
            GroupKind::Hyperoctahedral => 2..=3,
        };
        for n in range {
            let e = idempotents(n, f).map_err(|e| e.to_string())?;
            // the ρ^(r) coefficients square to the ρ^(ℓ) ones
            let sq =
                if f == StructureFamily::RhoR { idempotents(n, StructureFamily::RhoL).unwrap() } else { e.clone() };
            let g = Group::get(f.group(), n).unwrap();
            for (i, a) in e.iter().enumerate() {
                for (j, b) in e.iter().enumerate() {
                    let want = if i == j { sq[i].clone() } else { GAElem::zero(&g) };
                    ensure(a * b == want, || format!("{} n = {n}: e_{i} e_{j}", f.tag()))?;
                }
            }
        }
        families += 1;
    }
    let mut cells = 0;
    for n in [4, 5] {
        for cell in table_one() {
            let r = check_cell(n, cell).map_err(|e| e.to_string())?;
            match r.holds {
                Some(true) => cells += 1,
                Some(false) => return Err(format!("table cell {} x {} at n = {n}: {:?}", r.row, r.col, r.failure)),
                None => {}
            }
        }
    }
    Ok(format!("{families} families orthogonal; {cells} filled table cells reproduced"))
}

fn dimensions() -> Verdict {
    use ClassFamily::*;
    let mut failures = Vec::new();
    let mut checked = 0;
    for n in 2..=5usize {
        let mut cases: Vec<(&str, GroupKind, Vec<ClassFamily>, usize)> = vec![
            ("e", GroupKind::Symmetric, vec![DescentNum], n),
            ("e_c", GroupKind::Symmetric, vec![CyclicDescentNum], n - 1),
            ("p", GroupKind::Symmetric, vec![PeakInteriorNum], (n + 1) / 2),
            ("p_ext", GroupKind::Symmetric, vec![PeakExteriorNum], (n + 1) / 2),
            ("p_l", GroupKind::Symmetric, vec![PeakLeftNum], n / 2 + 1),
            ("p_dot", GroupKind::Symmetric, vec![PeakInteriorNum, PeakLeftNum], if n % 2 == 0 { n } else { n + 1 }),
        ];
        if n <= 3 {
            cases.push(("e_B", GroupKind::Hyperoctahedral, vec![BDescentNum], n + 1));
            cases.push(("e_dot_B", GroupKind::Hyperoctahedral, vec![BDescentNum, BCyclicDescentNum], 2 * n));
            cases.push(("p_B", GroupKind::Hyperoctahedral, vec![BPeakSignNum], n + 1));
        }
        for (name, kind, fams, want) in cases {
            let g = Group::get(kind, n).unwrap();
            let elems: Vec<GAElem> = fams.iter().flat_map(|&f| sums(&g, f)).collect();
            let got = span_rank(&elems).map_err(|e| e.to_string())?;
            checked += 1;
            if got != want {
                failures.push(format!("{name} at n = {n}: rank {got}, listed {want}"));
            }
        }
    }
    if failures.is_empty() {
        Ok(format!("{checked} spans have the listed dimension"))
    } else {
        Err(format!("{} of {checked} differ: {}", failures.len(), failures.join("; ")))
    }
}

fn negative_results() -> Verdict {
    let t = theorem("phi_times_rho").unwrap();
    let v = verify_theorem(3, &t, GridMode::Full, Route::Collapsed).map_err(|e| e.to_string())?;
    let ce = v.counterexample.ok_or("phi(y) rho(x) passed at n = 3")?;
    ensure(!v.ok, || "inconsistent verdict".into())?;

    let g = Group::symmetric(3).unwrap();
    let c = multiplicative_closure(&sums(&g, ClassFamily::PeakRightNum), g.order()).map_err(|e| e.to_string())?;
    let (i, j) = c.witness.ok_or("right peak number span closed at n = 3")?;

    let (n, viol) = (1..=4)
        .find_map(|n| structure_constants(n, ClassFamily::PeakRightSet).unwrap().violation.map(|v| (n, v)))
        .ok_or("right peak set constants well defined for all n <= 4")?;
    ensure(viol.representative_count != viol.other_count, || "violation without differing counts".into())?;
    Ok(format!(
        "phi(y)rho(x) at (x,y) = ({},{}) perm {:?}; right peak numbers: product of classes {i},{j} leaves the span \
         (closure dimension {}); right peak sets at n = {n}: {:?} has {} factorizations, {:?} has {}",
        ce.x, ce.y, ce.perm, c.dimension, viol.representative, viol.representative_count, viol.other, viol.other_count
    ))
}

fn eulerian_identities() -> Verdict {
    let plan: [(Identity43, usize); 5] = [
        (Identity43::AugEul, 3),
        (Identity43::PeEul1, 5),
        (Identity43::PeEul2, 5),
        (Identity43::BPeEul1, 3),
        (Identity43::BPeEul2, 3),
    ];
    for (which, top) in plan {
        for n in 1..=top {
            ensure(identity_check_43(n, which).map_err(|e| e.to_string())?, || format!("{which} at n = {n}"))?;
        }
    }
    let w3 = peak_polynomial(3, PeakPolyKind::WInterior).unwrap();
    ensure(w3 == UniPoly::from_ints(&[0, 4, 2]), || format!("W_3 = {w3}"))?;
    let bc2 = peak_polynomial(2, PeakPolyKind::BCyclicEulerian).unwrap();
    let a2 = peak_polynomial(2, PeakPolyKind::AEulerian).unwrap();
    ensure(bc2 == a2.scale(&int(4)), || format!("B^(c)_2 = {bc2}, A_2 = {a2}"))?;
    Ok("all identities hold; W_3 = 4t + 2t^2 and B^(c)_2 = 4 A_2".into())
}

fn qsym_layer() -> Verdict {
    let mut checked = 0;
    for (perms, flavors) in [(sym(3), &[Flavor::Interior, Flavor::Left][..]), (hyp(2), &[Flavor::B][..])] {
        for p in &perms {
            for &f in flavors {
                for m in 1..=3 {
                    let s = specialization_check(p, f, m).map_err(|e| e.to_string())?;
                    ensure(s.holds(), || format!("{} at {p}, m = {m}: {s:?}", f.tag()))?;
                    checked += 1;
                }
            }
        }
    }
    for flavor in BipartiteFlavor::ALL {
        for n in 1..=3 {
            let r = bipartite_report(n, flavor, 2, 2).map_err(|e| e.to_string())?;
            ensure(r.holds(), || format!("{} at n = {n}: {:?}", flavor.tag(), r.failures))?;
        }
    }
    for n in 1..=6 {
        for (f, want) in
            [(Flavor::Interior, fibonacci(n - 1)), (Flavor::Left, fibonacci(n)), (Flavor::B, fibonacci(n + 1))]
        {
            let got = peak_basis_rank(n, f).map_err(|e| e.to_string())? as u64;
            ensure(got == want, || format!("{} rank at n = {n}: {got} vs {want}", f.tag()))?;
        }
    }
    Ok(format!("{checked} realizations; six bipartite identities; Fibonacci ranks"))
}

fn cyclic_isomorphism() -> Verdict {
    for n in [3, 4] {
        ensure(cyclic_isomorphism_check(n).map_err(|e| e.to_string())?, || format!("n = {n}"))?;
    }
    Ok("multiplicative, injective and onto at n = 3, 4".into())
}

fn main() {
    let criteria: [(&str, fn() -> Verdict); 9] = [
        ("oracle equivalence", oracle_equivalence),
        ("fundamental lemmas on random posets", fundamental_lemmas),
        ("multiplicative theorems", multiplicative_theorems),
        ("idempotent suites and table cells", idempotent_suites),
        ("dimension corollaries", dimensions),
        ("negative results", negative_results),
        ("Eulerian and peak polynomial identities", eulerian_identities),
        ("quasisymmetric layer", qsym_layer),
        ("cyclic isomorphism", cyclic_isomorphism),
    ];
    let mut failed = 0;
    for (i, (name, f)) in criteria.iter().enumerate() {
        let verdict = catch_unwind(AssertUnwindSafe(f)).unwrap_or_else(|_| Err("panicked".into()));
        match verdict {
            Ok(note) => println!("PASS {}. {name}: {note}", i + 1),
            Err(why) => {
                failed += 1;
                println!("FAIL {}. {name}: {why}", i + 1);
            }
        }
    }
    println!("{} of {} criteria pass", criteria.len() - failed, criteria.len());
    if failed > 0 {
        std::process::exit(1);
    }
}
