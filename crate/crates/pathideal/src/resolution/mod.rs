//! Exact Betti numbers, Castelnuovo–Mumford regularity, and the
//! linear-resolution test for small squarefree monomial ideals.
//!
//! The engine is the standard lcm-lattice description of multigraded Betti
//! numbers: for a candidate multidegree `m` (an lcm of generators), the
//! Betti number in homological index `i` is the rank of reduced homology in
//! dimension `i - 1` of the complex of generator subsets whose lcm strictly
//! divides `m`. Homology is computed over the rationals from integer
//! boundary matrices with fraction-free elimination, so every reported
//! number is exact (characteristic 0).

use std::collections::{BTreeMap, HashMap, HashSet};
use std::fmt;

use serde_json::json;
use thiserror::Error;

use crate::ideal::{Monomial, MonomialIdeal};
use crate::par::map_maybe_parallel;

mod matrix;

/// Generator-count cap for Betti computations (2^q subset scan).
pub const DEFAULT_GENERATOR_CAP: usize = 12;
/// Vertex cap for direct homology of a simplicial complex.
pub const DEFAULT_COMPLEX_VERTEX_CAP: usize = 20;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ResolutionError {
    #[error("complex has {0} vertices, above the cap of {1}")]
    TooLarge(usize, usize),
    #[error("ideal has {0} generators, above the cap of {1}")]
    TooManyGenerators(usize, usize),
    #[error("operation undefined for the zero ideal")]
    ZeroIdeal,
    #[error("ideal is not equigenerated")]
    NotEquigenerated,
    #[error("monomials do not form an antichain")]
    NotAnAntichain,
    #[error("m3 must divide lcm(m1, m2)")]
    DivisibilityHypothesisFails,
}

/// A simplicial complex stored by its facets (maximal faces), as bitsets.
///
/// The void complex (no faces at all) and the empty complex (just the empty
/// face) are distinct: `from_facets(n, &[])` is void, `from_facets(n,
/// &[vec![]])` is `{∅}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SimplicialComplex {
    num_vertices: usize,
    facets: Vec<u64>,
}

impl SimplicialComplex {
    pub fn from_facets(num_vertices: usize, facets: &[Vec<usize>]) -> Self {
        assert!(num_vertices <= 64);
        let mut masks: Vec<u64> = facets
            .iter()
            .map(|f| {
                f.iter().fold(0u64, |acc, &v| {
                    assert!(v < num_vertices, "facet vertex out of range");
                    acc | 1 << v
                })
            })
            .collect();
        masks.sort_by_key(|m| std::cmp::Reverse(m.count_ones()));
        let mut kept: Vec<u64> = Vec::new();
        for m in masks {
            if !kept.iter().any(|&k| m & !k == 0) {
                kept.push(m);
            }
        }
        kept.sort_unstable();
        SimplicialComplex { num_vertices, facets: kept }
    }

    pub fn is_void(&self) -> bool {
        self.facets.is_empty()
    }

    pub fn facets(&self) -> &[u64] {
        &self.facets
    }

    /// Ranks of reduced rational homology, indexed so that entry `i` is the
    /// rank in dimension `i - 1` (entry 0 reports the empty-face dimension).
    pub fn reduced_homology_ranks(&self) -> Result<Vec<usize>, ResolutionError> {
        if self.num_vertices > DEFAULT_COMPLEX_VERTEX_CAP {
            return Err(ResolutionError::TooLarge(
                self.num_vertices,
                DEFAULT_COMPLEX_VERTEX_CAP,
            ));
        }
        let mut faces = HashSet::new();
        for &facet in &self.facets {
            // enumerate all submasks of the facet, including 0
            let mut sub = facet;
            loop {
                faces.insert(sub);
                if sub == 0 {
                    break;
                }
                sub = (sub - 1) & facet;
            }
        }
        let faces: Vec<u64> = faces.into_iter().collect();
        Ok(reduced_homology_from_faces(&faces))
    }
}

/// Reduced rational homology ranks of an explicit downward-closed face list
/// (bitset faces, the empty face included when the complex is nonvoid).
/// Entry `i` of the result is the rank in dimension `i - 1`.
fn reduced_homology_from_faces(faces: &[u64]) -> Vec<usize> {
    if faces.is_empty() {
        return Vec::new();
    }
    let max_size = faces.iter().map(|f| f.count_ones() as usize).max().unwrap();
    let mut by_size: Vec<Vec<u64>> = vec![Vec::new(); max_size + 1];
    for &f in faces {
        by_size[f.count_ones() as usize].push(f);
    }
    for level in &mut by_size {
        level.sort_unstable();
    }
    // boundary_rank[s] = rank of the boundary map from size-s faces to
    // size-(s-1) faces; index max_size + 1 stays 0
    let mut boundary_rank = vec![0usize; max_size + 2];
    for s in 1..=max_size {
        let target_index: HashMap<u64, usize> = by_size[s - 1]
            .iter()
            .enumerate()
            .map(|(i, &f)| (f, i))
            .collect();
        let rows = by_size[s - 1].len();
        let cols = by_size[s].len();
        if rows == 0 || cols == 0 {
            continue;
        }
        let mut m = vec![vec![num_bigint::BigInt::from(0); cols]; rows];
        for (c, &face) in by_size[s].iter().enumerate() {
            let mut sign = 1i64;
            for v in 0..64 {
                if face >> v & 1 == 1 {
                    let sub = face & !(1 << v);
                    let r = target_index[&sub];
                    m[r][c] = num_bigint::BigInt::from(sign);
                    sign = -sign;
                }
            }
        }
        boundary_rank[s] = matrix::rank(m);
    }
    (0..=max_size)
        .map(|s| by_size[s].len() - boundary_rank[s] - boundary_rank[s + 1])
        .collect()
}

/// Exact graded and multigraded Betti numbers of a monomial ideal.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BettiTable {
    graded: BTreeMap<(usize, usize), usize>,
    multigraded: BTreeMap<(usize, Monomial), usize>,
}

impl BettiTable {
    /// The graded Betti number in homological index `i`, total degree `j`.
    pub fn entry(&self, i: usize, j: usize) -> usize {
        self.graded.get(&(i, j)).copied().unwrap_or(0)
    }

    pub fn graded(&self) -> &BTreeMap<(usize, usize), usize> {
        &self.graded
    }

    pub fn multigraded(&self) -> &BTreeMap<(usize, Monomial), usize> {
        &self.multigraded
    }

    /// `max { j - i }` over nonzero entries; `None` for the zero ideal.
    pub fn regularity(&self) -> Option<usize> {
        self.graded.keys().map(|&(i, j)| j - i).max()
    }

    /// Serialization: `{"betti": {"i,j": count}, "regularity": r,
    /// "field_char": 0}`.
    pub fn to_json(&self) -> serde_json::Value {
        let betti: BTreeMap<String, usize> = self
            .graded
            .iter()
            .map(|(&(i, j), &c)| (format!("{i},{j}"), c))
            .collect();
        json!({
            "betti": betti,
            "regularity": self.regularity(),
            "field_char": 0,
        })
    }
}

impl fmt::Display for BettiTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (&(i, j), &c) in &self.graded {
            writeln!(f, "beta_{{{i},{j}}} = {c}")?;
        }
        Ok(())
    }
}

/// Betti table with the default generator cap.
pub fn betti_table(ideal: &MonomialIdeal) -> Result<BettiTable, ResolutionError> {
    betti_table_capped(ideal, DEFAULT_GENERATOR_CAP)
}

/// Betti table of `ideal`, refusing more than `cap` generators.
pub fn betti_table_capped(
    ideal: &MonomialIdeal,
    cap: usize,
) -> Result<BettiTable, ResolutionError> {
    betti_table_impl(ideal, cap, true)
}

/// Same computation with the multidegree scan forced onto one thread;
/// the bench suite compares this against the rayon path.
pub fn betti_table_sequential(
    ideal: &MonomialIdeal,
    cap: usize,
) -> Result<BettiTable, ResolutionError> {
    betti_table_impl(ideal, cap, false)
}

fn betti_table_impl(
    ideal: &MonomialIdeal,
    cap: usize,
    parallel: bool,
) -> Result<BettiTable, ResolutionError> {
    let gens = ideal.generators();
    let q = gens.len();
    // the second bound protects the u64 face masks
    if q > cap || q > 63 {
        return Err(ResolutionError::TooManyGenerators(q, cap));
    }

    // candidate multidegrees: lcms of nonempty generator subsets
    let mut lcms: Vec<Monomial> = vec![Monomial::ONE; 1 << q];
    let mut candidates: HashSet<Monomial> = HashSet::new();
    for mask in 1usize..1 << q {
        let low = mask.trailing_zeros() as usize;
        lcms[mask] = lcms[mask & (mask - 1)].lcm(&gens[low]);
        candidates.insert(lcms[mask]);
    }
    let mut candidates: Vec<Monomial> = candidates.into_iter().collect();
    candidates.sort();

    let per_candidate = map_maybe_parallel(
        &candidates,
        |&m| {
            // generators dividing m span the relevant subcomplex
            let relevant: Vec<&Monomial> = gens.iter().filter(|g| g.divides(&m)).collect();
            let r = relevant.len();
            let mut sub_lcm: Vec<Monomial> = vec![Monomial::ONE; 1 << r];
            let mut faces: Vec<u64> = Vec::new();
            for mask in 0u64..1 << r {
                if mask != 0 {
                    let low = mask.trailing_zeros() as usize;
                    sub_lcm[mask as usize] =
                        sub_lcm[(mask & (mask - 1)) as usize].lcm(relevant[low]);
                }
                if sub_lcm[mask as usize] != m {
                    faces.push(mask);
                }
            }
            (m, reduced_homology_from_faces(&faces))
        },
        parallel,
    );

    let mut graded = BTreeMap::new();
    let mut multigraded = BTreeMap::new();
    for (m, ranks) in per_candidate {
        for (i, &rank) in ranks.iter().enumerate() {
            if rank > 0 {
                multigraded.insert((i, m), rank);
                *graded.entry((i, m.degree())).or_insert(0) += rank;
            }
        }
    }
    Ok(BettiTable { graded, multigraded })
}

/// Castelnuovo–Mumford regularity via the Betti table.
pub fn regularity(ideal: &MonomialIdeal) -> Result<usize, ResolutionError> {
    regularity_capped(ideal, DEFAULT_GENERATOR_CAP)
}

pub fn regularity_capped(ideal: &MonomialIdeal, cap: usize) -> Result<usize, ResolutionError> {
    if ideal.is_zero() {
        return Err(ResolutionError::ZeroIdeal);
    }
    let table = betti_table_capped(ideal, cap)?;
    Ok(table.regularity().expect("nonzero ideal has Betti numbers"))
}

/// Whether an equigenerated nonzero ideal has linear resolution:
/// regularity equals the generation degree.
pub fn has_linear_resolution(ideal: &MonomialIdeal) -> Result<bool, ResolutionError> {
    has_linear_resolution_capped(ideal, DEFAULT_GENERATOR_CAP)
}

pub fn has_linear_resolution_capped(
    ideal: &MonomialIdeal,
    cap: usize,
) -> Result<bool, ResolutionError> {
    if ideal.is_zero() {
        return Err(ResolutionError::ZeroIdeal);
    }
    let degree = ideal
        .generation_degree()
        .ok_or(ResolutionError::NotEquigenerated)?;
    Ok(regularity_capped(ideal, cap)? == degree)
}

/// Closed form for two minimal generators: `deg lcm(m1, m2) - 1`.
pub fn reg_two_gens(m1: &Monomial, m2: &Monomial) -> Result<usize, ResolutionError> {
    if m1.divides(m2) || m2.divides(m1) {
        return Err(ResolutionError::NotAnAntichain);
    }
    Ok(m1.lcm(m2).degree() - 1)
}

/// Closed form for three minimal generators with `m3 | lcm(m1, m2)`:
/// `max(deg lcm(m1, m3), deg lcm(m2, m3)) - 1`.
pub fn reg_three_gens(
    m1: &Monomial,
    m2: &Monomial,
    m3: &Monomial,
) -> Result<usize, ResolutionError> {
    let pairs = [(m1, m2), (m1, m3), (m2, m3)];
    if pairs.iter().any(|(a, b)| a.divides(b) || b.divides(a)) {
        return Err(ResolutionError::NotAnAntichain);
    }
    if !m3.divides(&m1.lcm(m2)) {
        return Err(ResolutionError::DivisibilityHypothesisFails);
    }
    Ok(m1.lcm(m3).degree().max(m2.lcm(m3).degree()) - 1)
}
