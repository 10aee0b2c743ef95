//! Seeded random posets, built by sampling relations compatible with a
//! hidden random linear extension (so they are acyclic by construction).

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::{BPoset, Poset};

/// Random poset on `1..=n`; each compatible pair is related with probability `density`.
pub fn random_poset(n: usize, density: f64, seed: u64) -> Poset {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut order: Vec<i32> = (1..=n as i32).collect();
    order.shuffle(&mut rng);
    let mut rels = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            if rng.gen_bool(density) {
                rels.push((order[i], order[j]));
            }
        }
    }
    Poset::from_relations(n, &rels).expect("compatible with a linear order")
}

/// Random signed poset on `-n..=n`, sampled the same way against a hidden
/// symmetric total order.
pub fn random_bposet(n: usize, density: f64, seed: u64) -> BPoset {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut top: Vec<i32> = (1..=n as i32).collect();
    top.shuffle(&mut rng);
    for v in top.iter_mut() {
        if rng.gen_bool(0.5) {
            *v = -*v;
        }
    }
    // -top[n-1] < ... < -top[0] < 0 < top[0] < ... < top[n-1]
    let line: Vec<i32> = top.iter().rev().map(|v| -v).chain([0]).chain(top.iter().copied()).collect();
    let mut rels = Vec::new();
    for i in 0..line.len() {
        for j in i + 1..line.len() {
            if rng.gen_bool(density) {
                rels.push((line[i], line[j]));
            }
        }
    }
    BPoset::symmetrized(n, &rels).expect("compatible with a symmetric linear order")
}
