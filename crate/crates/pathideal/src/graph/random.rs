//! Seeded random labeled trees via Prüfer-sequence decoding.

use std::cmp::Reverse;
use std::collections::BinaryHeap;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::Tree;

/// Decodes a Prüfer sequence into the tree on `len + 2` vertices, labels
/// `v1..vN`. Every entry must be a valid vertex index.
pub fn tree_from_prufer(prufer: &[usize]) -> Tree {
    let n = prufer.len() + 2;
    assert!(prufer.iter().all(|&a| a < n), "Prüfer entry out of range");
    let labels: Vec<String> = (1..=n).map(|i| format!("v{i}")).collect();
    Tree::from_edges(&labels, &prufer_edges(prufer)).expect("Prüfer decoding yields a tree")
}

pub(crate) fn prufer_edges(prufer: &[usize]) -> Vec<(usize, usize)> {
    let n = prufer.len() + 2;
    let mut degree = vec![1u32; n];
    for &a in prufer {
        degree[a] += 1;
    }
    let mut leaves: BinaryHeap<Reverse<usize>> = (0..n)
        .filter(|&v| degree[v] == 1)
        .map(Reverse)
        .collect();
    let mut edges = Vec::with_capacity(n - 1);
    for &a in prufer {
        let u = leaves.pop().expect("a leaf always remains").0;
        degree[u] -= 1;
        degree[a] -= 1;
        edges.push((u, a));
        if degree[a] == 1 {
            leaves.push(Reverse(a));
        }
    }
    let u = leaves.pop().unwrap().0;
    let v = leaves.pop().unwrap().0;
    edges.push((u, v));
    edges
}

/// A uniformly random labeled tree on `num_vertices >= 2` vertices,
/// deterministic per seed (ChaCha8-driven Prüfer sequence).
pub fn random_tree(num_vertices: usize, seed: u64) -> Tree {
    assert!(num_vertices >= 2, "a tree needs at least two vertices");
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let prufer: Vec<usize> = (0..num_vertices.saturating_sub(2))
        .map(|_| rng.random_range(0..num_vertices))
        .collect();
    tree_from_prufer(&prufer)
}
