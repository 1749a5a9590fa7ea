//! Caterpillar recognition and the central-path/leaf-neighbor decomposition.

use super::Tree;

/// Decomposition of a caterpillar tree of diameter `d`: the central path
/// `x_1 .. x_{d-1}` (all vertices of degree >= 2) plus, for each central
/// vertex, its ordered list of leaf neighbors.
///
/// The vertex set is the disjoint union of the central path and the leaf
/// neighbor lists. Degenerate case: a two-vertex tree has an empty central
/// path and counts as a caterpillar.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CaterpillarDecomposition {
    central: Vec<usize>,
    leaf_neighbors: Vec<Vec<usize>>,
    diameter: usize,
}

impl CaterpillarDecomposition {
    /// Central path vertices `x_1 .. x_{d-1}` in order.
    pub fn central_path(&self) -> &[usize] {
        &self.central
    }

    /// Leaf neighbors of the central vertex at 0-based position `i`,
    /// sorted by label.
    pub fn leaf_neighbors(&self, i: usize) -> &[usize] {
        &self.leaf_neighbors[i]
    }

    /// The counts `l_1 .. l_{d-1}` of leaf neighbors per central vertex.
    pub fn leaf_counts(&self) -> Vec<usize> {
        self.leaf_neighbors.iter().map(Vec::len).collect()
    }

    pub fn diameter(&self) -> usize {
        self.diameter
    }

    /// The same decomposition read from the other end of the central path.
    pub fn reversed(&self) -> Self {
        let mut central = self.central.clone();
        central.reverse();
        let mut leaf_neighbors = self.leaf_neighbors.clone();
        leaf_neighbors.reverse();
        CaterpillarDecomposition {
            central,
            leaf_neighbors,
            diameter: self.diameter,
        }
    }

    /// Total number of vertices covered (central path plus all leaves).
    pub fn num_vertices(&self) -> usize {
        self.central.len() + self.leaf_neighbors.iter().map(Vec::len).sum::<usize>()
    }
}

impl Tree {
    /// Returns the decomposition iff the degree->=2 vertices induce a path.
    ///
    /// The central path is oriented so that its forward label sequence is
    /// lexicographically smaller than the reversed one; leaf-neighbor lists
    /// are sorted by label ascending.
    pub fn caterpillar_decomposition(&self) -> Option<CaterpillarDecomposition> {
        let n = self.num_vertices();
        if n == 2 {
            return Some(CaterpillarDecomposition {
                central: Vec::new(),
                leaf_neighbors: Vec::new(),
                diameter: 1,
            });
        }
        let spine: Vec<usize> = (0..n).filter(|&v| self.degree(v) >= 2).collect();
        debug_assert!(!spine.is_empty(), "a tree on >= 3 vertices has an internal vertex");
        let in_spine = |v: usize| self.degree(v) >= 2;

        // In a tree the spine is automatically connected, so it induces a
        // path iff no spine vertex has three spine neighbors.
        let spine_deg =
            |v: usize| self.neighbors(v).iter().filter(|&&w| in_spine(w)).count();
        if spine.iter().any(|&v| spine_deg(v) > 2) {
            return None;
        }

        let mut central = if spine.len() == 1 {
            spine.clone()
        } else {
            let start = *spine.iter().find(|&&v| spine_deg(v) == 1)?;
            let mut order = vec![start];
            let mut prev = usize::MAX;
            let mut cur = start;
            while order.len() < spine.len() {
                let next = *self
                    .neighbors(cur)
                    .iter()
                    .find(|&&w| in_spine(w) && w != prev)?;
                order.push(next);
                prev = cur;
                cur = next;
            }
            order
        };

        let forward: Vec<&str> = central.iter().map(|&v| self.label(v)).collect();
        let backward: Vec<&str> = central.iter().rev().map(|&v| self.label(v)).collect();
        if backward < forward {
            central.reverse();
        }

        let mut leaf_neighbors = Vec::with_capacity(central.len());
        for (i, &x) in central.iter().enumerate() {
            let prev = if i > 0 { Some(central[i - 1]) } else { None };
            let next = central.get(i + 1).copied();
            let mut ln: Vec<usize> = self
                .neighbors(x)
                .iter()
                .copied()
                .filter(|&w| Some(w) != prev && Some(w) != next)
                .collect();
            debug_assert!(ln.iter().all(|&w| self.degree(w) == 1));
            ln.sort_by(|&a, &b| self.label(a).cmp(self.label(b)));
            leaf_neighbors.push(ln);
        }

        let decomp = CaterpillarDecomposition {
            central,
            leaf_neighbors,
            diameter: self.diameter(),
        };
        debug_assert_eq!(decomp.num_vertices(), n);
        debug_assert_eq!(decomp.diameter, decomp.central.len() + 1);
        debug_assert!(decomp.leaf_neighbors.first().is_none_or(|l| !l.is_empty()));
        debug_assert!(decomp.leaf_neighbors.last().is_none_or(|l| !l.is_empty()));
        Some(decomp)
    }

    pub fn is_caterpillar(&self) -> bool {
        self.caterpillar_decomposition().is_some()
    }
}
