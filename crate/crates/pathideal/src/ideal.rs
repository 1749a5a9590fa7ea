//! Squarefree monomials and monomial ideals over a graph's vertex set.
//!
//! A monomial is a subset of vertex indices (bitset semantics); an ideal is
//! the antichain of its minimal generators. Everything here is exact set
//! arithmetic: lcm is union, divisibility is inclusion, colon ideals come
//! from per-generator set differences.

use thiserror::Error;

use crate::graph::{CaterpillarDecomposition, SimpleGraph, Tree};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum IdealError {
    #[error("operation undefined for the zero ideal")]
    ZeroIdeal,
    #[error("generator label `{0}` is not in the ambient universe")]
    UnknownLabel(String),
}

/// A squarefree monomial: the set of variable indices in its support.
///
/// Supports at most [`Monomial::MAX_VARIABLES`] variables; graph-facing
/// constructors assert the ambient universe fits.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Monomial(u128);

impl Monomial {
    pub const MAX_VARIABLES: usize = 128;

    /// The monomial 1 (empty support).
    pub const ONE: Monomial = Monomial(0);

    pub fn from_support(vars: &[usize]) -> Self {
        let mut bits = 0u128;
        for &v in vars {
            assert!(v < Self::MAX_VARIABLES, "variable index {v} out of range");
            bits |= 1 << v;
        }
        Monomial(bits)
    }

    pub fn variable(v: usize) -> Self {
        Monomial::from_support(&[v])
    }

    pub fn support(&self) -> Vec<usize> {
        (0..Self::MAX_VARIABLES).filter(|&v| self.0 >> v & 1 == 1).collect()
    }

    pub fn degree(&self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn contains_var(&self, v: usize) -> bool {
        self.0 >> v & 1 == 1
    }

    /// Support union: the least common multiple of squarefree monomials.
    pub fn lcm(&self, other: &Monomial) -> Monomial {
        Monomial(self.0 | other.0)
    }

    /// Support intersection: the greatest common divisor.
    pub fn gcd(&self, other: &Monomial) -> Monomial {
        Monomial(self.0 & other.0)
    }

    /// `self / gcd(self, other)`: the part of `self` outside `other`.
    pub fn quotient_by(&self, other: &Monomial) -> Monomial {
        Monomial(self.0 & !other.0)
    }

    pub fn is_one(&self) -> bool {
        self.0 == 0
    }

    pub fn format_with(&self, labels: &[String]) -> String {
        if self.is_one() {
            return "1".to_owned();
        }
        let parts: Vec<&str> = self.support().iter().map(|&v| labels[v].as_str()).collect();
        parts.join("*")
    }

    pub fn label_support(&self, labels: &[String]) -> Vec<String> {
        self.support().iter().map(|&v| labels[v].clone()).collect()
    }
}

/// Keeps only divisibility-minimal elements, deduplicated, sorted by support
/// bits ascending.
fn minimalize(mut gens: Vec<Monomial>) -> Vec<Monomial> {
    gens.sort_by_key(|m| (m.degree(), *m));
    gens.dedup();
    let mut kept: Vec<Monomial> = Vec::with_capacity(gens.len());
    for g in gens {
        if !kept.iter().any(|h| h.divides(&g)) {
            kept.push(g);
        }
    }
    kept.sort();
    kept
}

/// A monomial ideal presented by its minimal generators over a fixed,
/// labeled variable universe. The zero ideal has no generators.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MonomialIdeal {
    labels: Vec<String>,
    gens: Vec<Monomial>,
}

impl MonomialIdeal {
    /// Builds the ideal generated by `gens`, reducing to the minimal
    /// generating antichain and sorting canonically.
    pub fn new(labels: Vec<String>, gens: Vec<Monomial>) -> Self {
        assert!(labels.len() <= Monomial::MAX_VARIABLES);
        MonomialIdeal { labels, gens: minimalize(gens) }
    }

    pub fn zero(labels: Vec<String>) -> Self {
        MonomialIdeal { labels, gens: Vec::new() }
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn num_generators(&self) -> usize {
        self.gens.len()
    }

    /// Minimal generators, sorted by support bits ascending.
    pub fn generators(&self) -> &[Monomial] {
        &self.gens
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn is_equigenerated(&self) -> bool {
        self.gens.windows(2).all(|w| w[0].degree() == w[1].degree())
    }

    /// Common generator degree, when equigenerated and nonzero.
    pub fn generation_degree(&self) -> Option<usize> {
        if self.is_zero() || !self.is_equigenerated() {
            return None;
        }
        Some(self.gens[0].degree())
    }

    /// Generators as sorted arrays of vertex labels (the serialization form).
    pub fn generator_labels(&self) -> Vec<Vec<String>> {
        self.gens.iter().map(|g| g.label_support(&self.labels)).collect()
    }

    /// Rebuilds an ideal from label arrays over the given universe.
    pub fn from_generator_labels(
        labels: Vec<String>,
        gens: &[Vec<String>],
    ) -> Result<Self, IdealError> {
        let mut monomials = Vec::with_capacity(gens.len());
        for g in gens {
            let mut support = Vec::with_capacity(g.len());
            for l in g {
                let v = labels
                    .iter()
                    .position(|x| x == l)
                    .ok_or_else(|| IdealError::UnknownLabel(l.clone()))?;
                support.push(v);
            }
            monomials.push(Monomial::from_support(&support));
        }
        Ok(MonomialIdeal::new(labels, monomials))
    }
}

/// The n-path ideal: one squarefree generator per n-vertex path.
pub fn path_ideal(graph: &SimpleGraph, n: usize) -> MonomialIdeal {
    assert!(n >= 2, "path ideals need n >= 2");
    assert!(
        graph.num_vertices() <= Monomial::MAX_VARIABLES,
        "too many vertices for the bitset monomial representation"
    );
    let paths = graph.enumerate_paths(n);
    let gens: Vec<Monomial> = paths
        .iter()
        .map(|p| Monomial::from_support(p.vertices()))
        .collect();
    let ideal = MonomialIdeal::new(graph.labels().to_vec(), gens);
    // In a forest a path is determined by its vertex set, so the n-path
    // generators are pairwise distinct and already form an antichain. This
    // fact is relied on downstream (strictness of the lex generator order),
    // so it is asserted rather than assumed.
    assert_eq!(
        ideal.num_generators(),
        paths.len(),
        "distinct paths must have distinct supports"
    );
    ideal
}

/// Generators of `(J : m)` with the variable-generation verdict.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ColonResult {
    gens: Vec<Monomial>,
    is_variable_generated: bool,
}

impl ColonResult {
    pub fn generators(&self) -> &[Monomial] {
        &self.gens
    }

    pub fn is_variable_generated(&self) -> bool {
        self.is_variable_generated
    }

    /// The generating variable indices, when variable-generated.
    pub fn variables(&self) -> Option<Vec<usize>> {
        if !self.is_variable_generated {
            return None;
        }
        Some(self.gens.iter().map(|g| g.support()[0]).collect())
    }

    /// Some minimal generator of degree != 1, when not variable-generated.
    pub fn offending_generator(&self) -> Option<Monomial> {
        self.gens.iter().find(|g| g.degree() != 1).copied()
    }
}

/// Minimal generators of the colon ideal `(J : m)`.
pub fn colon(ideal: &MonomialIdeal, m: &Monomial) -> Result<ColonResult, IdealError> {
    if ideal.is_zero() {
        return Err(IdealError::ZeroIdeal);
    }
    let gens = minimalize(ideal.gens.iter().map(|g| g.quotient_by(m)).collect());
    let is_variable_generated = gens.iter().all(|g| g.degree() == 1);
    Ok(ColonResult { gens, is_variable_generated })
}

/// The restriction `I^{<= m}`: the subideal generated by the minimal
/// generators of `I` dividing `m`.
pub fn restrict(ideal: &MonomialIdeal, m: &Monomial) -> MonomialIdeal {
    let gens: Vec<Monomial> = ideal
        .gens
        .iter()
        .filter(|g| g.divides(m))
        .copied()
        .collect();
    MonomialIdeal { labels: ideal.labels.clone(), gens }
}

/// Generators of the n-path ideal of a caterpillar read off its
/// decomposition: `y x_i ... x_{i+n-3} z` with `y` a leaf neighbor of `x_i`
/// or `x_{i-1}`, and `z` a leaf neighbor of `x_{i+n-3}` or `x_{i+n-2}`,
/// dummies out of range dropped. The `n = 2` case degenerates to plain edge
/// enumeration. Must reproduce [`path_ideal`] on the same tree.
pub fn caterpillar_generators(
    tree: &Tree,
    decomp: &CaterpillarDecomposition,
    n: usize,
) -> MonomialIdeal {
    assert!(n >= 2);
    let labels = tree.labels().to_vec();
    if n == 2 {
        let gens = tree
            .edges()
            .into_iter()
            .map(|(u, v)| Monomial::from_support(&[u, v]))
            .collect();
        return MonomialIdeal::new(labels, gens);
    }
    let central = decomp.central_path();
    let d = decomp.diameter();
    let mut gens = Vec::new();
    if d + 1 >= n {
        // 1-based i in [1, d-n+2]; a, b are the 0-based ends of the central run
        for a in 0..=(d + 1 - n) {
            let b = a + n - 3;
            debug_assert!(b < central.len());
            let mut ys: Vec<usize> = decomp.leaf_neighbors(a).to_vec();
            if a >= 1 {
                ys.push(central[a - 1]);
            }
            let mut zs: Vec<usize> = decomp.leaf_neighbors(b).to_vec();
            if b + 1 < central.len() {
                zs.push(central[b + 1]);
            }
            let run = Monomial::from_support(&central[a..=b]);
            for &y in &ys {
                for &z in &zs {
                    if y == z {
                        continue; // only possible when n = 3
                    }
                    gens.push(run.lcm(&Monomial::variable(y)).lcm(&Monomial::variable(z)));
                }
            }
        }
    }
    MonomialIdeal::new(labels, gens)
}
