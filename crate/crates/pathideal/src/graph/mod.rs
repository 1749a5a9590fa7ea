//! Labeled simple graphs and trees.
//!
//! Vertices are identified by dense indices; the label list doubles as the
//! variable universe of the ambient polynomial ring. [`Tree`] is a validated
//! connected acyclic [`SimpleGraph`] and is the input type for everything
//! downstream: path enumeration, caterpillar decompositions, trimming and
//! the family constructors.

use std::collections::VecDeque;
use std::fmt;
use std::ops::Deref;

use thiserror::Error;

mod caterpillar;
mod enumerate;
mod family;
mod random;

pub use caterpillar::CaterpillarDecomposition;
pub use enumerate::{
    canonical_form, trees_up_to_iso, trees_up_to_iso_prufer, trees_up_to_iso_prufer_sequential,
};
pub use family::{make_family, FamilyGraph, GraphFamilySpec};
pub use random::{random_tree, tree_from_prufer};

/// Errors raised by graph construction and graph operations.
#[derive(Debug, Error, PartialEq, Eq)]
pub enum GraphError {
    #[error("self-loop on vertex `{0}`")]
    SelfLoop(String),
    #[error("duplicate edge `{0} {1}`")]
    DuplicateEdge(String, String),
    #[error("edge `{0} {1}` closes a cycle")]
    CycleDetected(String, String),
    #[error("input is not a connected tree")]
    DisconnectedInput,
    #[error("malformed edge line: `{0}`")]
    MalformedLine(String),
    #[error("unknown vertex `{0}`")]
    UnknownVertex(String),
    #[error("bad family parameters: {0}")]
    BadFamilyParameters(String),
    #[error("two longest paths produce different trimmed graphs")]
    TrimAmbiguous,
}

/// A finite simple graph with unique string labels and sorted adjacency lists.
///
/// May be disconnected (the `two_paths` family and induced subgraphs need
/// this); [`Tree`] adds the connectivity/acyclicity invariant.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SimpleGraph {
    labels: Vec<String>,
    adj: Vec<Vec<usize>>,
}

impl SimpleGraph {
    /// Builds a graph from labels and index edges, rejecting self-loops and
    /// duplicate edges. Labels must be unique.
    pub fn from_edges<S: AsRef<str>>(
        labels: &[S],
        edges: &[(usize, usize)],
    ) -> Result<Self, GraphError> {
        let labels: Vec<String> = labels.iter().map(|s| s.as_ref().to_owned()).collect();
        for (i, l) in labels.iter().enumerate() {
            if labels[..i].contains(l) {
                return Err(GraphError::BadFamilyParameters(format!(
                    "duplicate label `{l}`"
                )));
            }
        }
        let n = labels.len();
        let mut adj = vec![Vec::new(); n];
        for &(u, v) in edges {
            assert!(u < n && v < n, "edge index out of range");
            if u == v {
                return Err(GraphError::SelfLoop(labels[u].clone()));
            }
            if adj[u].contains(&v) {
                return Err(GraphError::DuplicateEdge(labels[u].clone(), labels[v].clone()));
            }
            adj[u].push(v);
            adj[v].push(u);
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        Ok(SimpleGraph { labels, adj })
    }

    pub fn num_vertices(&self) -> usize {
        self.labels.len()
    }

    pub fn num_edges(&self) -> usize {
        self.adj.iter().map(Vec::len).sum::<usize>() / 2
    }

    pub fn label(&self, v: usize) -> &str {
        &self.labels[v]
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].binary_search(&v).is_ok()
    }

    /// All edges as index pairs `(u, v)` with `u < v`, sorted.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.num_edges());
        for (u, list) in self.adj.iter().enumerate() {
            for &v in list {
                if u < v {
                    out.push((u, v));
                }
            }
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        let n = self.num_vertices();
        if n == 0 {
            return false;
        }
        let mut seen = vec![false; n];
        let mut queue = VecDeque::from([0usize]);
        seen[0] = true;
        let mut count = 1;
        while let Some(u) = queue.pop_front() {
            for &v in &self.adj[u] {
                if !seen[v] {
                    seen[v] = true;
                    count += 1;
                    queue.push_back(v);
                }
            }
        }
        count == n
    }

    /// Induced subgraph on the vertex set `s` (duplicates ignored). Labels
    /// are carried over; vertices are reindexed in ascending original order.
    pub fn induced_subgraph(&self, s: &[usize]) -> SimpleGraph {
        let mut keep: Vec<usize> = s.to_vec();
        keep.sort_unstable();
        keep.dedup();
        let mut pos = vec![usize::MAX; self.num_vertices()];
        for (i, &v) in keep.iter().enumerate() {
            pos[v] = i;
        }
        let labels: Vec<String> = keep.iter().map(|&v| self.labels[v].clone()).collect();
        let mut adj = vec![Vec::new(); keep.len()];
        for (i, &v) in keep.iter().enumerate() {
            for &w in &self.adj[v] {
                if pos[w] != usize::MAX {
                    adj[i].push(pos[w]);
                }
            }
            adj[i].sort_unstable();
        }
        SimpleGraph { labels, adj }
    }

    /// BFS distances from `v`; unreachable vertices get `usize::MAX`.
    pub fn distances_from(&self, v: usize) -> Vec<usize> {
        let mut dist = vec![usize::MAX; self.num_vertices()];
        dist[v] = 0;
        let mut queue = VecDeque::from([v]);
        while let Some(u) = queue.pop_front() {
            for &w in &self.adj[u] {
                if dist[w] == usize::MAX {
                    dist[w] = dist[u] + 1;
                    queue.push_back(w);
                }
            }
        }
        dist
    }

    /// All paths on exactly `n` vertices, deduplicated up to reversal and
    /// sorted. Works on any simple graph via depth-first extension; trees
    /// have the faster distance-pair route in [`Tree::enumerate_paths`].
    pub fn enumerate_paths(&self, n: usize) -> Vec<VertexPath> {
        assert!(n >= 2, "paths need at least two vertices");
        let mut out = Vec::new();
        let mut stack = Vec::with_capacity(n);
        let mut on_path = vec![false; self.num_vertices()];
        for start in 0..self.num_vertices() {
            stack.push(start);
            on_path[start] = true;
            self.extend_paths(n, &mut stack, &mut on_path, &mut out);
            on_path[start] = false;
            stack.pop();
        }
        out.sort();
        out
    }

    fn extend_paths(
        &self,
        n: usize,
        stack: &mut Vec<usize>,
        on_path: &mut [bool],
        out: &mut Vec<VertexPath>,
    ) {
        if stack.len() == n {
            // keep one orientation only
            if stack[0] < stack[n - 1] {
                out.push(VertexPath::new(stack.clone()));
            }
            return;
        }
        let last = *stack.last().unwrap();
        for &w in &self.adj[last] {
            if !on_path[w] {
                stack.push(w);
                on_path[w] = true;
                self.extend_paths(n, stack, on_path, out);
                on_path[w] = false;
                stack.pop();
            }
        }
    }

    /// Serializes to the edge-list document format accepted by
    /// [`Tree::parse`]: one `label label` line per edge.
    pub fn to_edge_list_document(&self) -> String {
        let mut doc = String::new();
        for (u, v) in self.edges() {
            doc.push_str(&format!("{} {}\n", self.labels[u], self.labels[v]));
        }
        doc
    }
}

/// A simple path, stored as the ordered list of vertex indices.
///
/// Canonical form puts the smaller endpoint index first; a path and its
/// reversal are the same object.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct VertexPath {
    vertices: Vec<usize>,
}

impl VertexPath {
    /// Canonicalizes on construction: reverses if the last endpoint index is
    /// smaller than the first.
    pub fn new(mut vertices: Vec<usize>) -> Self {
        assert!(vertices.len() >= 2, "a path has at least two vertices");
        if vertices[0] > vertices[vertices.len() - 1] {
            vertices.reverse();
        }
        VertexPath { vertices }
    }

    pub fn vertices(&self) -> &[usize] {
        &self.vertices
    }

    /// Number of edges: one less than the vertex count.
    pub fn length(&self) -> usize {
        self.vertices.len() - 1
    }

    pub fn endpoints(&self) -> (usize, usize) {
        (self.vertices[0], self.vertices[self.vertices.len() - 1])
    }

    pub fn contains(&self, v: usize) -> bool {
        self.vertices.contains(&v)
    }

    pub fn labels<'g>(&self, g: &'g SimpleGraph) -> Vec<&'g str> {
        self.vertices.iter().map(|&v| g.label(v)).collect()
    }
}

impl fmt::Display for VertexPath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let strs: Vec<String> = self.vertices.iter().map(|v| v.to_string()).collect();
        write!(f, "{}", strs.join("-"))
    }
}

/// A labeled tree: connected, `|E| = |V| - 1`, no self-loops or multi-edges.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Tree {
    graph: SimpleGraph,
}

impl Deref for Tree {
    type Target = SimpleGraph;

    fn deref(&self) -> &SimpleGraph {
        &self.graph
    }
}

impl Tree {
    /// Validates the tree invariants on an already-built graph.
    pub fn from_graph(graph: SimpleGraph) -> Result<Self, GraphError> {
        if graph.num_vertices() == 0 || !graph.is_connected() {
            return Err(GraphError::DisconnectedInput);
        }
        if graph.num_edges() != graph.num_vertices() - 1 {
            // connected with too many edges means some edge closes a cycle
            let (u, v) = graph.edges()[0];
            return Err(GraphError::CycleDetected(
                graph.label(u).to_owned(),
                graph.label(v).to_owned(),
            ));
        }
        Ok(Tree { graph })
    }

    pub fn from_edges<S: AsRef<str>>(
        labels: &[S],
        edges: &[(usize, usize)],
    ) -> Result<Self, GraphError> {
        Tree::from_graph(SimpleGraph::from_edges(labels, edges)?)
    }

    /// Parses the edge-list document format: one edge per line as two
    /// whitespace-separated labels; `#` lines and blank lines are ignored.
    /// Labels are indexed in first-appearance order.
    pub fn parse(text: &str) -> Result<Self, GraphError> {
        let mut labels: Vec<String> = Vec::new();
        let mut index = std::collections::HashMap::new();
        let mut edges: Vec<(usize, usize)> = Vec::new();
        let mut intern = |tok: &str, labels: &mut Vec<String>| -> usize {
            *index.entry(tok.to_owned()).or_insert_with(|| {
                labels.push(tok.to_owned());
                labels.len() - 1
            })
        };
        // union-find for early cycle detection, so the error names the edge
        let mut parent: Vec<usize> = Vec::new();
        fn find(parent: &mut [usize], mut x: usize) -> usize {
            while parent[x] != x {
                parent[x] = parent[parent[x]];
                x = parent[x];
            }
            x
        }
        let mut seen_edges = std::collections::HashSet::new();
        for line in text.lines() {
            let line = line.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let toks: Vec<&str> = line.split_whitespace().collect();
            if toks.len() != 2 {
                return Err(GraphError::MalformedLine(line.to_owned()));
            }
            let u = intern(toks[0], &mut labels);
            let v = intern(toks[1], &mut labels);
            while parent.len() < labels.len() {
                parent.push(parent.len());
            }
            if u == v {
                return Err(GraphError::SelfLoop(labels[u].clone()));
            }
            if !seen_edges.insert((u.min(v), u.max(v))) {
                return Err(GraphError::DuplicateEdge(toks[0].to_owned(), toks[1].to_owned()));
            }
            let (ru, rv) = (find(&mut parent, u), find(&mut parent, v));
            if ru == rv {
                return Err(GraphError::CycleDetected(toks[0].to_owned(), toks[1].to_owned()));
            }
            parent[ru] = rv;
            edges.push((u, v));
        }
        if labels.is_empty() {
            return Err(GraphError::DisconnectedInput);
        }
        Tree::from_graph(SimpleGraph::from_edges(&labels, &edges)?)
    }

    pub fn as_graph(&self) -> &SimpleGraph {
        &self.graph
    }

    /// The unique `u`–`v` path. Panics if `u == v` or an index is out of range.
    pub fn unique_path(&self, u: usize, v: usize) -> VertexPath {
        assert!(u != v, "path endpoints must differ");
        let n = self.num_vertices();
        assert!(u < n && v < n, "vertex index out of range");
        let mut pred = vec![usize::MAX; n];
        let mut queue = VecDeque::from([u]);
        pred[u] = u;
        'bfs: while let Some(x) = queue.pop_front() {
            for &w in self.neighbors(x) {
                if pred[w] == usize::MAX {
                    pred[w] = x;
                    if w == v {
                        break 'bfs;
                    }
                    queue.push_back(w);
                }
            }
        }
        let mut vertices = vec![v];
        let mut cur = v;
        while cur != u {
            cur = pred[cur];
            vertices.push(cur);
        }
        vertices.reverse();
        VertexPath::new(vertices)
    }

    /// Longest-path length, by double BFS. Requires `|V| >= 2`.
    pub fn diameter(&self) -> usize {
        assert!(self.num_vertices() >= 2);
        let d0 = self.distances_from(0);
        let far = (0..self.num_vertices()).max_by_key(|&v| d0[v]).unwrap();
        let d1 = self.distances_from(far);
        d1.into_iter().max().unwrap()
    }

    /// The diameter together with every longest path, deduplicated up to
    /// reversal and sorted. Enumerates all vertex pairs at maximal distance.
    pub fn diameter_and_longest_paths(&self) -> (usize, Vec<VertexPath>) {
        let n = self.num_vertices();
        assert!(n >= 2);
        let dist: Vec<Vec<usize>> = (0..n).map(|v| self.distances_from(v)).collect();
        let d = (0..n)
            .flat_map(|u| dist[u].iter().copied())
            .max()
            .unwrap();
        let mut paths = Vec::new();
        for u in 0..n {
            for v in u + 1..n {
                if dist[u][v] == d {
                    paths.push(self.unique_path(u, v));
                }
            }
        }
        paths.sort();
        paths.dedup();
        (d, paths)
    }

    /// All paths on exactly `n` vertices: the unique paths between vertex
    /// pairs at distance `n - 1`. Deduplicated up to reversal, sorted.
    pub fn enumerate_paths(&self, n: usize) -> Vec<VertexPath> {
        assert!(n >= 2, "paths need at least two vertices");
        let nv = self.num_vertices();
        let mut out = Vec::new();
        for u in 0..nv {
            let dist = self.distances_from(u);
            for v in u + 1..nv {
                if dist[v] == n - 1 {
                    out.push(self.unique_path(u, v));
                }
            }
        }
        out.sort();
        out
    }

    /// Restricts to the closed neighborhoods of a longest path. Computes the
    /// trimmed graph for *every* longest path and errors with
    /// [`GraphError::TrimAmbiguous`] unless they all coincide.
    pub fn trim(&self) -> Result<Tree, GraphError> {
        let (_, longest) = self.diameter_and_longest_paths();
        let mut chosen: Option<Vec<usize>> = None;
        for path in &longest {
            let mut set: Vec<usize> = Vec::new();
            for &v in path.vertices() {
                set.push(v);
                set.extend_from_slice(self.neighbors(v));
            }
            set.sort_unstable();
            set.dedup();
            match &chosen {
                None => chosen = Some(set),
                Some(prev) if *prev != set => return Err(GraphError::TrimAmbiguous),
                Some(_) => {}
            }
        }
        let set = chosen.expect("a tree with >= 2 vertices has a longest path");
        let sub = self.graph.induced_subgraph(&set);
        Tree::from_graph(sub)
    }
}
