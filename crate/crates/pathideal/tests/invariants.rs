//! Cross-module invariants: the lemma-level facts promised by the library,
//! checked exhaustively on small trees and statistically on random ones.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use pathideal::classify::{check_fn, classify_verified, find_induced_lnk, OracleCaps};
use pathideal::graph::{make_family, trees_up_to_iso, GraphFamilySpec, Tree};
use pathideal::ideal::{path_ideal, restrict, Monomial};
use pathideal::linquot::find_linear_quotients_order;
use pathideal::resolution::has_linear_resolution_capped;

fn small_corpus(max_vertices: usize) -> Vec<Tree> {
    (2..=max_vertices).flat_map(trees_up_to_iso).collect()
}

#[test]
fn unique_path_and_diameter_agree_with_all_pairs_bfs() {
    for tree in small_corpus(9) {
        let n = tree.num_vertices();
        let dist: Vec<Vec<usize>> = (0..n).map(|v| tree.distances_from(v)).collect();
        let mut max_dist = 0;
        for u in 0..n {
            for v in u + 1..n {
                let p = tree.unique_path(u, v);
                assert_eq!(p.length(), dist[u][v]);
                assert_eq!(p.endpoints(), (u, v));
                for w in p.vertices().windows(2) {
                    assert!(tree.has_edge(w[0], w[1]));
                }
                max_dist = max_dist.max(dist[u][v]);
            }
        }
        assert_eq!(tree.diameter(), max_dist, "double-BFS diameter vs all-pairs");
        let (d, longest) = tree.diameter_and_longest_paths();
        assert_eq!(d, max_dist);
        assert!(!longest.is_empty());
        assert!(longest.iter().all(|p| p.length() == d));
    }
}

#[test]
fn caterpillar_decomposition_reconstructs_all_edges() {
    let mut caterpillars = 0;
    for tree in small_corpus(9) {
        let Some(d) = tree.caterpillar_decomposition() else {
            continue;
        };
        if d.central_path().is_empty() {
            continue; // two-vertex degenerate case
        }
        caterpillars += 1;
        let central = d.central_path();
        let mut rebuilt: Vec<(usize, usize)> = Vec::new();
        for i in 0..central.len() {
            if i + 1 < central.len() {
                let (a, b) = (central[i], central[i + 1]);
                rebuilt.push((a.min(b), a.max(b)));
            }
            for &y in d.leaf_neighbors(i) {
                rebuilt.push((central[i].min(y), central[i].max(y)));
            }
        }
        rebuilt.sort_unstable();
        assert_eq!(rebuilt, tree.edges());
    }
    assert!(caterpillars > 50, "most small trees are caterpillars");
}

/// Any two longest paths of a caterpillar share everything but their end
/// vertices: same second and second-to-last vertex (up to reversal), and
/// identical interiors once oriented to match.
#[test]
fn longest_paths_of_caterpillars_share_interiors() {
    let mut rng = ChaCha8Rng::seed_from_u64(41);
    for _ in 0..300 {
        let d = rng.random_range(2..=8usize);
        let mut leaf_counts: Vec<usize> = (0..d - 1).map(|_| rng.random_range(0..=2)).collect();
        let last = leaf_counts.len() - 1;
        leaf_counts[0] = leaf_counts[0].max(if d == 2 { 2 } else { 1 });
        leaf_counts[last] = leaf_counts[last].max(if d == 2 { 2 } else { 1 });
        let spec = GraphFamilySpec::Caterpillar { diameter: d, leaf_counts };
        let tree = make_family(&spec).unwrap().into_tree().unwrap();
        if tree.num_vertices() > 14 {
            continue;
        }
        let (diam, longest) = tree.diameter_and_longest_paths();
        assert_eq!(diam, d);
        for a in 0..longest.len() {
            for b in a + 1..longest.len() {
                let z: Vec<usize> = longest[a].vertices().to_vec();
                let mut w: Vec<usize> = longest[b].vertices().to_vec();
                let ends =
                    |p: &[usize]| -> (usize, usize) { (p[1], p[p.len() - 2]) };
                let (z2, zd) = ends(&z);
                let (w2, wd) = ends(&w);
                assert!(
                    (z2 == w2 && zd == wd) || (z2 == wd && zd == w2),
                    "second/second-to-last vertices must match as a set"
                );
                if z2 != w2 {
                    w.reverse();
                }
                assert_eq!(z[1..z.len() - 1], w[1..w.len() - 1], "interiors coincide");
            }
        }
    }
}

#[test]
fn trim_is_idempotent_and_yields_caterpillars() {
    let mut trimmed_count = 0;
    for tree in small_corpus(9) {
        let Ok(trimmed) = tree.trim() else {
            continue; // ambiguous trim outside the guaranteed range
        };
        trimmed_count += 1;
        assert!(
            trimmed.caterpillar_decomposition().is_some(),
            "trim output is a caterpillar by construction"
        );
        assert_eq!(trimmed.trim().unwrap(), trimmed);
    }
    assert!(trimmed_count > 60);
}

/// Scanning pendant positions `k` in `[3, (n+1)/2]` finds an embedded
/// `L_{n,k}` iff scanning the full `[3, n-2]` does.
#[test]
fn short_and_full_k_ranges_agree() {
    let mut compared = 0;
    let mut hits = 0;
    for tree in small_corpus(11) {
        for n in [5usize, 6, 7] {
            if tree.num_vertices() < n + 2 {
                continue; // too small to embed any L_{n,k}
            }
            let short = find_induced_lnk(&tree, n, 3, (n + 1) / 2).unwrap();
            let full = find_induced_lnk(&tree, n, 3, n - 2).unwrap();
            assert_eq!(
                short.is_some(),
                full.is_some(),
                "k-range equivalence on {} vertices, n = {n}",
                tree.num_vertices()
            );
            compared += 1;
            hits += usize::from(full.is_some());
        }
    }
    assert!(compared > 500, "only {compared} comparisons ran");
    assert!(hits > 50, "only {hits} embeddings found; the check needs positives");
}

/// The zero-ideal boundary and the diameter bound forced by the absence of
/// two disjoint paths.
#[test]
fn nonzero_iff_diameter_reaches_and_no_two_paths_bounds_diameter() {
    for tree in small_corpus(9) {
        let diam = tree.diameter();
        for n in 2..=7 {
            let ideal = path_ideal(&tree, n);
            assert_eq!(!ideal.is_zero(), diam >= n - 1);
            if n >= 4 {
                let report = check_fn(&tree, n).unwrap();
                if report.forbidden.is_none() {
                    assert!(diam <= 2 * n - 1);
                }
            }
        }
    }
}

/// Classifier clause, exhaustive order search, and homology must tell the
/// same story wherever all three run.
#[test]
fn three_way_agreement_on_small_corpus() {
    let caps = OracleCaps { lq_cap: 22, hom_cap: 12 };
    let mut homology_checked = 0;
    for tree in small_corpus(8) {
        for n in 4..=6 {
            let outcome = classify_verified(&tree, n, &caps).unwrap_or_else(|e| {
                panic!("{} vertices, n = {n}: {e}", tree.num_vertices())
            });
            assert!(outcome.lq_oracle_ran);
            if outcome.homology_oracle_ran {
                homology_checked += 1;
            }
        }
    }
    assert!(homology_checked > 40, "only {homology_checked} homology checks ran");
}

/// Restriction preserves linear resolution (on equigenerated ideals) and
/// the existence of a linear-quotients order.
#[test]
fn restriction_preserves_lr_and_lq() {
    let mut rng = ChaCha8Rng::seed_from_u64(977);
    let mut lr_cases = 0;
    let mut lq_cases = 0;
    for tree in small_corpus(8) {
        for n in [4usize, 5] {
            let ideal = path_ideal(&tree, n);
            let q = ideal.num_generators();
            if q == 0 || q > 12 {
                continue;
            }
            let lr = has_linear_resolution_capped(&ideal, 12).unwrap();
            let lq = find_linear_quotients_order(&ideal).unwrap().is_some();
            for _ in 0..3 {
                let support: Vec<usize> =
                    (0..tree.num_vertices()).filter(|_| rng.random_bool(0.8)).collect();
                let m = Monomial::from_support(&support);
                let restricted = restrict(&ideal, &m);
                if restricted.is_zero() {
                    continue;
                }
                if lr {
                    lr_cases += 1;
                    assert!(
                        has_linear_resolution_capped(&restricted, 12).unwrap(),
                        "restriction lost linear resolution"
                    );
                }
                if lq {
                    lq_cases += 1;
                    assert!(
                        find_linear_quotients_order(&restricted).unwrap().is_some(),
                        "restriction lost linear quotients"
                    );
                }
            }
        }
    }
    assert!(lr_cases > 50 && lq_cases > 50, "lr {lr_cases}, lq {lq_cases}");
}

/// Restricting `J_n(G)` to the product of a vertex subset gives exactly the
/// n-path ideal of the induced subgraph on that subset.
#[test]
fn restriction_to_vertex_subsets_is_the_induced_path_ideal() {
    let mut rng = ChaCha8Rng::seed_from_u64(1203);
    for tree in small_corpus(9) {
        for n in [3usize, 4, 5] {
            let ideal = path_ideal(&tree, n);
            for _ in 0..3 {
                let subset: Vec<usize> =
                    (0..tree.num_vertices()).filter(|_| rng.random_bool(0.7)).collect();
                if subset.is_empty() {
                    continue;
                }
                let restricted = restrict(&ideal, &Monomial::from_support(&subset));
                let induced = tree.induced_subgraph(&subset);
                let mut a = restricted.generator_labels();
                let mut b = path_ideal(&induced, n).generator_labels();
                a.iter_mut().for_each(|g| g.sort());
                b.iter_mut().for_each(|g| g.sort());
                a.sort();
                b.sort();
                assert_eq!(a, b, "restriction vs induced subgraph, n = {n}");
            }
        }
    }
}

/// The edge-list document round-trips as a labeled graph.
#[test]
fn edge_document_roundtrip() {
    for tree in small_corpus(8) {
        let doc = tree.to_edge_list_document();
        let back = Tree::parse(&doc).unwrap();
        let mut labels_a: Vec<&String> = tree.labels().iter().collect();
        let mut labels_b: Vec<&String> = back.labels().iter().collect();
        labels_a.sort();
        labels_b.sort();
        assert_eq!(labels_a, labels_b);
        let edge_labels = |t: &Tree| -> Vec<(String, String)> {
            let mut e: Vec<(String, String)> = t
                .edges()
                .into_iter()
                .map(|(u, v)| {
                    let (a, b) = (t.label(u).to_owned(), t.label(v).to_owned());
                    (a.clone().min(b.clone()), a.max(b))
                })
                .collect();
            e.sort();
            e
        };
        assert_eq!(edge_labels(&tree), edge_labels(&back));
    }
}
