//! Named graph families: paths, stars, L_{n,k}, disjoint path pairs, and
//! caterpillars with prescribed leaf counts.

use std::fmt;
use std::str::FromStr;

use super::{GraphError, SimpleGraph, Tree};

/// A parsed family spec, grammar `family:arg1[,arg2...]`.
///
/// * `path:m` — the path P_m on `m >= 2` vertices, labels `x1..xm`.
/// * `star:m` — the star K_{1,m} with `m >= 2` leaves, center `c`, leaves `x1..xm`.
/// * `Lnk:n,k` — the n-vertex path with a pendant (k-1)-vertex path attached
///   at position k; requires `n >= 5`, `k` in `[3, n-2]`. Labels `x1..xn`,
///   `y1..y{k-1}`.
/// * `two_paths:n` — the disjoint union P_n + P_n (not a tree), labels
///   `x1..xn`, `y1..yn`.
/// * `caterpillar:d,l1,...,l{d-1}` — caterpillar of diameter `d` with the
///   given leaf counts along the central path.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GraphFamilySpec {
    Path { m: usize },
    Star { m: usize },
    Lnk { n: usize, k: usize },
    TwoPaths { n: usize },
    Caterpillar { diameter: usize, leaf_counts: Vec<usize> },
}

impl FromStr for GraphFamilySpec {
    type Err = GraphError;

    fn from_str(s: &str) -> Result<Self, GraphError> {
        let bad = |msg: String| GraphError::BadFamilyParameters(msg);
        let (tag, rest) = s
            .split_once(':')
            .ok_or_else(|| bad(format!("`{s}` is not of the form family:args")))?;
        let args: Vec<usize> = rest
            .split(',')
            .map(|a| a.trim().parse::<usize>())
            .collect::<Result<_, _>>()
            .map_err(|_| bad(format!("non-integer argument in `{s}`")))?;
        let spec = match (tag, args.as_slice()) {
            ("path", [m]) => GraphFamilySpec::Path { m: *m },
            ("star", [m]) => GraphFamilySpec::Star { m: *m },
            ("Lnk", [n, k]) => GraphFamilySpec::Lnk { n: *n, k: *k },
            ("two_paths", [n]) => GraphFamilySpec::TwoPaths { n: *n },
            ("caterpillar", [d, ls @ ..]) if !ls.is_empty() => GraphFamilySpec::Caterpillar {
                diameter: *d,
                leaf_counts: ls.to_vec(),
            },
            _ => return Err(bad(format!("unrecognized family spec `{s}`"))),
        };
        spec.validate()?;
        Ok(spec)
    }
}

impl fmt::Display for GraphFamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GraphFamilySpec::Path { m } => write!(f, "path:{m}"),
            GraphFamilySpec::Star { m } => write!(f, "star:{m}"),
            GraphFamilySpec::Lnk { n, k } => write!(f, "Lnk:{n},{k}"),
            GraphFamilySpec::TwoPaths { n } => write!(f, "two_paths:{n}"),
            GraphFamilySpec::Caterpillar { diameter, leaf_counts } => {
                let ls: Vec<String> = leaf_counts.iter().map(|l| l.to_string()).collect();
                write!(f, "caterpillar:{diameter},{}", ls.join(","))
            }
        }
    }
}

impl GraphFamilySpec {
    fn validate(&self) -> Result<(), GraphError> {
        let bad = |msg: String| Err(GraphError::BadFamilyParameters(msg));
        match self {
            GraphFamilySpec::Path { m } if *m < 2 => bad(format!("path:{m} needs m >= 2")),
            GraphFamilySpec::Star { m } if *m < 2 => bad(format!("star:{m} needs m >= 2")),
            GraphFamilySpec::Lnk { n, k } if *n < 5 || *k < 3 || *k > n - 2 => {
                bad(format!("Lnk:{n},{k} needs n >= 5 and k in [3, n-2]"))
            }
            GraphFamilySpec::TwoPaths { n } if *n < 2 => {
                bad(format!("two_paths:{n} needs n >= 2"))
            }
            GraphFamilySpec::Caterpillar { diameter: d, leaf_counts } => {
                if *d < 2 || leaf_counts.len() != d - 1 {
                    return bad(format!(
                        "caterpillar:{d},... needs d >= 2 and exactly d-1 leaf counts"
                    ));
                }
                if *d == 2 && leaf_counts[0] < 2 {
                    return bad("caterpillar:2,l needs l >= 2 to reach diameter 2".into());
                }
                if *d > 2 && (leaf_counts[0] == 0 || *leaf_counts.last().unwrap() == 0) {
                    return bad("caterpillar leaf counts l_1 and l_{d-1} must be >= 1".into());
                }
                Ok(())
            }
            _ => Ok(()),
        }
    }
}

/// A constructed family member: a [`Tree`] for all families except
/// `two_paths`, which is a disconnected [`SimpleGraph`].
#[derive(Clone, Debug)]
pub enum FamilyGraph {
    Tree(Tree),
    Forest(SimpleGraph),
}

impl FamilyGraph {
    pub fn into_tree(self) -> Option<Tree> {
        match self {
            FamilyGraph::Tree(t) => Some(t),
            FamilyGraph::Forest(_) => None,
        }
    }

    pub fn as_graph(&self) -> &SimpleGraph {
        match self {
            FamilyGraph::Tree(t) => t.as_graph(),
            FamilyGraph::Forest(g) => g,
        }
    }
}

/// Builds the named family graph with its canonical labels.
pub fn make_family(spec: &GraphFamilySpec) -> Result<FamilyGraph, GraphError> {
    spec.validate()?;
    match spec {
        GraphFamilySpec::Path { m } => {
            let labels: Vec<String> = (1..=*m).map(|i| format!("x{i}")).collect();
            let edges: Vec<(usize, usize)> = (0..m - 1).map(|i| (i, i + 1)).collect();
            Ok(FamilyGraph::Tree(Tree::from_edges(&labels, &edges)?))
        }
        GraphFamilySpec::Star { m } => {
            let mut labels = vec!["c".to_owned()];
            labels.extend((1..=*m).map(|i| format!("x{i}")));
            let edges: Vec<(usize, usize)> = (1..=*m).map(|i| (0, i)).collect();
            Ok(FamilyGraph::Tree(Tree::from_edges(&labels, &edges)?))
        }
        GraphFamilySpec::Lnk { n, k } => {
            let mut labels: Vec<String> = (1..=*n).map(|i| format!("x{i}")).collect();
            labels.extend((1..*k).map(|j| format!("y{j}")));
            let mut edges: Vec<(usize, usize)> = (0..n - 1).map(|i| (i, i + 1)).collect();
            for j in 0..k - 2 {
                edges.push((n + j, n + j + 1));
            }
            // y_{k-1} x_k
            edges.push((n + k - 2, k - 1));
            Ok(FamilyGraph::Tree(Tree::from_edges(&labels, &edges)?))
        }
        GraphFamilySpec::TwoPaths { n } => {
            let mut labels: Vec<String> = (1..=*n).map(|i| format!("x{i}")).collect();
            labels.extend((1..=*n).map(|i| format!("y{i}")));
            let mut edges: Vec<(usize, usize)> = (0..n - 1).map(|i| (i, i + 1)).collect();
            edges.extend((0..n - 1).map(|i| (n + i, n + i + 1)));
            Ok(FamilyGraph::Forest(SimpleGraph::from_edges(&labels, &edges)?))
        }
        GraphFamilySpec::Caterpillar { diameter: d, leaf_counts } => {
            let central = d - 1;
            let mut labels: Vec<String> = (1..=central).map(|i| format!("x{i}")).collect();
            let mut edges: Vec<(usize, usize)> = (0..central - 1).map(|i| (i, i + 1)).collect();
            for (i, &li) in leaf_counts.iter().enumerate() {
                for j in 1..=li {
                    labels.push(format!("x{}_{j}", i + 1));
                    edges.push((i, labels.len() - 1));
                }
            }
            let tree = Tree::from_edges(&labels, &edges)?;
            debug_assert_eq!(tree.diameter(), *d);
            Ok(FamilyGraph::Tree(tree))
        }
    }
}
