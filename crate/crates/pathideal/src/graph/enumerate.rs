//! Tree isomorphism canonical forms and exhaustive enumeration of
//! isomorphism-class representatives.
//!
//! Two independent enumeration routes are provided and cross-checked in
//! tests: decoding every Prüfer sequence (feasible through 9 vertices) and
//! generating canonical rooted trees recursively (feasible well past 11).

use std::collections::HashSet;

use super::{random::prufer_edges, Tree};

/// Canonical byte string of a tree up to isomorphism: the minimal AHU
/// encoding over the tree's (one or two) centers.
pub fn canonical_form(tree: &Tree) -> Vec<u8> {
    let n = tree.num_vertices();
    let adj: Vec<Vec<usize>> = (0..n).map(|v| tree.neighbors(v).to_vec()).collect();
    canonical_form_adj(&adj)
}

pub(crate) fn canonical_form_adj(adj: &[Vec<usize>]) -> Vec<u8> {
    centers(adj)
        .into_iter()
        .map(|c| encode_rooted(adj, c, usize::MAX))
        .min()
        .expect("nonempty tree")
}

fn centers(adj: &[Vec<usize>]) -> Vec<usize> {
    let n = adj.len();
    if n <= 2 {
        return (0..n).collect();
    }
    let mut degree: Vec<usize> = adj.iter().map(Vec::len).collect();
    let mut layer: Vec<usize> = (0..n).filter(|&v| degree[v] == 1).collect();
    let mut remaining = n;
    while remaining > 2 {
        remaining -= layer.len();
        let mut next = Vec::new();
        for &v in &layer {
            degree[v] = 0;
            for &w in &adj[v] {
                if degree[w] > 1 {
                    degree[w] -= 1;
                    if degree[w] == 1 {
                        next.push(w);
                    }
                }
            }
        }
        layer = next;
    }
    layer
}

fn encode_rooted(adj: &[Vec<usize>], v: usize, parent: usize) -> Vec<u8> {
    let mut children: Vec<Vec<u8>> = adj[v]
        .iter()
        .filter(|&&w| w != parent)
        .map(|&w| encode_rooted(adj, w, v))
        .collect();
    children.sort();
    let mut code = Vec::with_capacity(2 + children.iter().map(Vec::len).sum::<usize>());
    code.push(b'(');
    for c in children {
        code.extend_from_slice(&c);
    }
    code.push(b')');
    code
}

/// Decodes a parenthesized tree code into a [`Tree`] with labels `v1..vN`
/// assigned in depth-first order.
fn decode(code: &[u8]) -> Tree {
    let n = code.len() / 2;
    let labels: Vec<String> = (1..=n).map(|i| format!("v{i}")).collect();
    let mut edges = Vec::with_capacity(n.saturating_sub(1));
    let mut stack: Vec<usize> = Vec::new();
    let mut next = 0usize;
    for &b in code {
        match b {
            b'(' => {
                if let Some(&top) = stack.last() {
                    edges.push((top, next));
                }
                stack.push(next);
                next += 1;
            }
            b')' => {
                stack.pop();
            }
            _ => unreachable!("tree codes contain only parentheses"),
        }
    }
    Tree::from_edges(&labels, &edges).expect("decoded code is a tree")
}

/// One representative tree per isomorphism class on exactly `num_vertices`
/// vertices, produced by recursive generation of canonical rooted trees and
/// deduplication by free canonical form. Sorted by canonical form.
pub fn trees_up_to_iso(num_vertices: usize) -> Vec<Tree> {
    assert!(num_vertices >= 2);
    let codes = rooted_codes(num_vertices);
    let mut canons: Vec<Vec<u8>> = Vec::new();
    let mut seen = HashSet::new();
    for code in &codes[num_vertices] {
        let canon = canonical_form(&decode(code));
        if seen.insert(canon.clone()) {
            canons.push(canon);
        }
    }
    canons.sort();
    canons.iter().map(|c| decode(c)).collect()
}

/// All canonical rooted-tree codes grouped by vertex count `1..=max_n`.
fn rooted_codes(max_n: usize) -> Vec<Vec<Vec<u8>>> {
    let mut codes: Vec<Vec<Vec<u8>>> = vec![Vec::new(); max_n + 1];
    codes[1] = vec![b"()".to_vec()];
    for s in 2..=max_n {
        let mut out = Vec::new();
        let mut acc = Vec::new();
        gen_children(s - 1, None, &codes, &mut acc, &mut out);
        out.sort();
        codes[s] = out;
    }
    codes
}

/// Extends a non-increasing child-code sequence until the size budget is
/// spent, emitting the completed rooted code.
fn gen_children(
    remaining: usize,
    max_code: Option<&[u8]>,
    codes: &[Vec<Vec<u8>>],
    acc: &mut Vec<u8>,
    out: &mut Vec<Vec<u8>>,
) {
    if remaining == 0 {
        let mut code = Vec::with_capacity(acc.len() + 2);
        code.push(b'(');
        code.extend_from_slice(acc);
        code.push(b')');
        out.push(code);
        return;
    }
    for child_size in (1..=remaining).rev() {
        for code in &codes[child_size] {
            if max_code.is_none_or(|m| code.as_slice() <= m) {
                let len = acc.len();
                acc.extend_from_slice(code);
                gen_children(remaining - child_size, Some(code), codes, acc, out);
                acc.truncate(len);
            }
        }
    }
}

/// One representative per isomorphism class on exactly `num_vertices`
/// vertices, by exhausting all `n^(n-2)` Prüfer sequences. Agrees with
/// [`trees_up_to_iso`] but only practical through 9 vertices or so.
pub fn trees_up_to_iso_prufer(num_vertices: usize) -> Vec<Tree> {
    trees_up_to_iso_prufer_impl(num_vertices, true)
}

/// Single-threaded variant for the bench comparison.
pub fn trees_up_to_iso_prufer_sequential(num_vertices: usize) -> Vec<Tree> {
    trees_up_to_iso_prufer_impl(num_vertices, false)
}

fn trees_up_to_iso_prufer_impl(num_vertices: usize, parallel: bool) -> Vec<Tree> {
    assert!(num_vertices >= 2);
    let n = num_vertices;
    let total = (n as u64).pow(n.saturating_sub(2) as u32);
    let chunk = 1u64 << 14;
    let starts: Vec<u64> = (0..total).step_by(chunk as usize).collect();
    let sets = crate::par::map_maybe_parallel(
        &starts,
        |&s| prufer_canon_chunk(n, s..total.min(s + chunk)),
        parallel,
    );
    let mut canons: Vec<Vec<u8>> = sets
        .into_iter()
        .reduce(|mut a, b| {
            a.extend(b);
            a
        })
        .unwrap_or_default()
        .into_iter()
        .collect();
    canons.sort();
    canons.iter().map(|c| decode(c)).collect()
}

fn prufer_canon_chunk(n: usize, range: std::ops::Range<u64>) -> HashSet<Vec<u8>> {
    let len = n.saturating_sub(2);
    let mut prufer = vec![0usize; len];
    let mut seen = HashSet::new();
    for index in range {
        let mut rest = index;
        for slot in prufer.iter_mut() {
            *slot = (rest % n as u64) as usize;
            rest /= n as u64;
        }
        let edges = prufer_edges(&prufer);
        let mut adj = vec![Vec::new(); n];
        for (u, v) in edges {
            adj[u].push(v);
            adj[v].push(u);
        }
        seen.insert(canonical_form_adj(&adj));
    }
    seen
}
