#![allow(dead_code)]

use entmat_core::graph::pair_count;
use entmat_core::Graph;
use rand::Rng;

/// Uniform random labeled graph on `n` vertices with edge probability `p`.
pub fn random_graph<R: Rng>(rng: &mut R, n: usize, p: f64) -> Graph {
    let mut g = Graph::empty(n).unwrap();
    for k in 0..pair_count(n) {
        if rng.random_bool(p) {
            let (i, j) = entmat_core::graph::edge_from_index(k);
            g.add_edge(i, j).unwrap();
        }
    }
    g
}

/// Random nonempty proper vertex subset of `1..=n`.
pub fn random_cut<R: Rng>(rng: &mut R, n: usize) -> Vec<usize> {
    loop {
        let part: Vec<usize> = (1..=n).filter(|_| rng.random_bool(0.5)).collect();
        if !part.is_empty() && part.len() < n {
            return part;
        }
    }
}

/// Random permutation of `1..=n`.
pub fn random_perm<R: Rng>(rng: &mut R, n: usize) -> Vec<usize> {
    let mut p: Vec<usize> = (1..=n).collect();
    for i in (1..n).rev() {
        p.swap(i, rng.random_range(0..=i));
    }
    p
}
