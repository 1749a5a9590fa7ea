//! Forbidden-structure detection and the linear-quotients classifier for
//! n-path ideals of trees, with independently checkable witnesses.
//!
//! The decision rule: the n-path ideal of a tree has linear quotients iff
//! the diameter is below `n-1` (zero ideal) or the tree is in diameter
//! range `[n-1, 2n-1]` and contains no induced `P_n + P_n` and no induced
//! `L_{n,k}` (with `L_{5,3}` the extra obstruction when `n = 4`). Positive
//! verdicts come with a verified quotient order constructed on the trimmed
//! caterpillar; negative verdicts come with an explicit embedded forbidden
//! subgraph.

use serde_json::json;
use thiserror::Error;

use crate::graph::{make_family, GraphFamilySpec, SimpleGraph, Tree};
use crate::ideal::{path_ideal, Monomial};
use crate::linquot::{
    caterpillar_linear_quotients, find_linear_quotients_order_capped, verify_order,
    CaterpillarCase, LinQuotError, OrderVerdict, QuotientOrder, DEFAULT_LQ_CAP,
};
use crate::resolution::{has_linear_resolution_capped, DEFAULT_GENERATOR_CAP};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ClassifyError {
    #[error("classification needs n >= 4 (got {0}); use the legacy n in {{2,3}} check")]
    UnsupportedN(usize),
    #[error("k range [{0}, {1}] is not contained in [3, n-2]")]
    BadRange(usize, usize),
    #[error("internal contradiction: {0}")]
    InternalContradiction(String),
    #[error("oracle disagreement: {0}")]
    OracleDisagreement(Box<Disagreement>),
    #[error(transparent)]
    LinQuot(#[from] LinQuotError),
}

/// Reproduction bundle for a classifier-vs-oracle mismatch.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Disagreement {
    pub edges: String,
    pub n: usize,
    pub detail: String,
}

impl std::fmt::Display for Disagreement {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{} (n = {}; edges:\n{})", self.detail, self.n, self.edges)
    }
}

/// Which forbidden family was found.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ForbiddenKind {
    /// `P_n + P_n`: two disjoint, mutually non-adjacent n-vertex paths.
    TwoPaths,
    /// `L_{n,k}`: an n-path with a pendant (k-1)-path at position k.
    Lnk { k: usize },
}

/// An embedded forbidden induced subgraph: the explicit label map from the
/// canonical family graph onto vertices of the host tree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ForbiddenWitness {
    kind: ForbiddenKind,
    family_n: usize,
    /// (canonical family label, host vertex index), in family label order.
    iso: Vec<(String, usize)>,
}

impl ForbiddenWitness {
    pub fn kind(&self) -> ForbiddenKind {
        self.kind
    }

    pub fn family_n(&self) -> usize {
        self.family_n
    }

    /// Host vertex indices, ascending.
    pub fn vertices(&self) -> Vec<usize> {
        let mut v: Vec<usize> = self.iso.iter().map(|&(_, x)| x).collect();
        v.sort_unstable();
        v
    }

    pub fn isomorphism(&self) -> &[(String, usize)] {
        &self.iso
    }

    fn family_spec(&self) -> GraphFamilySpec {
        match self.kind {
            ForbiddenKind::TwoPaths => GraphFamilySpec::TwoPaths { n: self.family_n },
            ForbiddenKind::Lnk { k } => GraphFamilySpec::Lnk { n: self.family_n, k },
        }
    }

    /// Re-checks the witness from scratch: the stored map must be a
    /// bijection from the canonical family graph onto an induced subgraph
    /// of `host` with exactly matching edges.
    pub fn verify(&self, host: &SimpleGraph) -> bool {
        let family = match make_family(&self.family_spec()) {
            Ok(f) => f,
            Err(_) => return false,
        };
        let family = family.as_graph();
        if self.iso.len() != family.num_vertices() {
            return false;
        }
        let mut image = vec![usize::MAX; family.num_vertices()];
        for (label, host_v) in &self.iso {
            let Some(fv) = family.index_of(label) else {
                return false;
            };
            if image[fv] != usize::MAX || *host_v >= host.num_vertices() {
                return false;
            }
            image[fv] = *host_v;
        }
        let mut hit: Vec<usize> = image.to_vec();
        hit.sort_unstable();
        if hit.windows(2).any(|w| w[0] == w[1]) {
            return false;
        }
        for a in 0..family.num_vertices() {
            for b in a + 1..family.num_vertices() {
                if family.has_edge(a, b) != host.has_edge(image[a], image[b]) {
                    return false;
                }
            }
        }
        true
    }

    pub fn to_json(&self, host: &SimpleGraph) -> serde_json::Value {
        let vertices: Vec<&str> = self.vertices().iter().map(|&v| host.label(v)).collect();
        let iso: std::collections::BTreeMap<&str, &str> = self
            .iso
            .iter()
            .map(|(fam, v)| (fam.as_str(), host.label(*v)))
            .collect();
        json!({
            "type": "forbidden",
            "kind": match self.kind {
                ForbiddenKind::TwoPaths => "PnPn",
                ForbiddenKind::Lnk { .. } => "Lnk",
            },
            "family_n": self.family_n,
            "k": match self.kind {
                ForbiddenKind::TwoPaths => None,
                ForbiddenKind::Lnk { k } => Some(k),
            },
            "vertices": vertices,
            "isomorphism": iso,
        })
    }
}

fn vertex_mask(vertices: &[usize]) -> u128 {
    vertices.iter().fold(0u128, |acc, &v| acc | 1 << v)
}

/// Finds two vertex-disjoint, mutually non-adjacent n-vertex paths
/// (an induced `P_n + P_n`), if any. Deterministic: paths are scanned in
/// sorted order and the first qualifying pair is returned.
pub fn find_induced_two_paths(tree: &Tree, n: usize) -> Option<ForbiddenWitness> {
    assert!(n >= 2);
    assert!(tree.num_vertices() <= 128);
    let paths = tree.enumerate_paths(n);
    let masks: Vec<u128> = paths.iter().map(|p| vertex_mask(p.vertices())).collect();
    let reach: Vec<u128> = paths
        .iter()
        .zip(&masks)
        .map(|(p, &m)| {
            p.vertices()
                .iter()
                .fold(m, |acc, &v| acc | vertex_mask(tree.neighbors(v)))
        })
        .collect();
    for i in 0..paths.len() {
        for j in i + 1..paths.len() {
            if reach[i] & masks[j] == 0 {
                let mut iso = Vec::with_capacity(2 * n);
                for (idx, &v) in paths[i].vertices().iter().enumerate() {
                    iso.push((format!("x{}", idx + 1), v));
                }
                for (idx, &v) in paths[j].vertices().iter().enumerate() {
                    iso.push((format!("y{}", idx + 1), v));
                }
                let witness = ForbiddenWitness { kind: ForbiddenKind::TwoPaths, family_n: n, iso };
                debug_assert!(witness.verify(tree));
                return Some(witness);
            }
        }
    }
    None
}

/// Depth-first search for a path on `len` vertices starting at `from`,
/// avoiding `banned`. Neighbors are explored in index order.
fn pendant_walk(tree: &Tree, from: usize, banned: usize, len: usize) -> Option<Vec<usize>> {
    fn extend(tree: &Tree, walk: &mut Vec<usize>, banned: usize, len: usize) -> bool {
        if walk.len() == len {
            return true;
        }
        let last = *walk.last().unwrap();
        for &w in tree.neighbors(last) {
            if w == banned || walk.contains(&w) {
                continue;
            }
            walk.push(w);
            if extend(tree, walk, banned, len) {
                return true;
            }
            walk.pop();
        }
        false
    }
    let mut walk = vec![from];
    extend(tree, &mut walk, banned, len).then_some(walk)
}

/// Finds an induced `L_{n,k}` for some `k` in `[k_lo, k_hi]`, scanning k
/// ascending. Anchors every n-path in both orientations and searches for a
/// pendant (k-1)-path hanging off position k; in a tree any such
/// configuration is automatically induced.
pub fn find_induced_lnk(
    tree: &Tree,
    n: usize,
    k_lo: usize,
    k_hi: usize,
) -> Result<Option<ForbiddenWitness>, ClassifyError> {
    assert!(n >= 5, "L_{{n,k}} needs n >= 5");
    assert!(tree.num_vertices() <= 128);
    if k_lo < 3 || k_hi > n - 2 {
        return Err(ClassifyError::BadRange(k_lo, k_hi));
    }
    let paths = tree.enumerate_paths(n);
    for k in k_lo..=k_hi {
        for path in &paths {
            let forward: Vec<usize> = path.vertices().to_vec();
            let mut backward = forward.clone();
            backward.reverse();
            for anchor in [forward, backward] {
                let xk = anchor[k - 1];
                for &w in tree.neighbors(xk) {
                    if w == anchor[k - 2] || w == anchor[k] {
                        continue;
                    }
                    debug_assert!(
                        !anchor.contains(&w),
                        "a tree cannot reattach a neighbor elsewhere on the path"
                    );
                    if let Some(walk) = pendant_walk(tree, w, xk, k - 1) {
                        // walk[0] = y_{k-1} .. walk[k-2] = y_1
                        let mut iso = Vec::with_capacity(n + k - 1);
                        for (idx, &v) in anchor.iter().enumerate() {
                            iso.push((format!("x{}", idx + 1), v));
                        }
                        for (idx, &v) in walk.iter().enumerate() {
                            iso.push((format!("y{}", k - 1 - idx), v));
                        }
                        iso.sort();
                        let witness =
                            ForbiddenWitness { kind: ForbiddenKind::Lnk { k }, family_n: n, iso };
                        debug_assert!(witness.verify(tree));
                        return Ok(Some(witness));
                    }
                }
            }
        }
    }
    Ok(None)
}

/// Report on the forbidden-structure condition for a given `n`.
#[derive(Clone, Debug)]
pub struct FnReport {
    pub n: usize,
    pub diameter: usize,
    pub in_range: bool,
    pub forbidden: Option<ForbiddenWitness>,
}

impl FnReport {
    pub fn holds(&self) -> bool {
        self.in_range && self.forbidden.is_none()
    }
}

/// Evaluates the forbidden condition: diameter in `[n-1, 2n-1]` and no
/// induced `P_n + P_n` or `L_{n,k}`. For `n = 4` the pendant obstruction is
/// `L_{5,3}`; for `n >= 5` the scan covers `k` in `[3, n-2]`.
pub fn check_fn(tree: &Tree, n: usize) -> Result<FnReport, ClassifyError> {
    if n < 4 {
        return Err(ClassifyError::UnsupportedN(n));
    }
    let diameter = tree.diameter();
    let in_range = (n - 1..=2 * n - 1).contains(&diameter);
    let forbidden = match find_induced_two_paths(tree, n) {
        Some(w) => Some(w),
        None => {
            if n == 4 {
                find_induced_lnk(tree, 5, 3, 3)?
            } else {
                find_induced_lnk(tree, n, 3, n - 2)?
            }
        }
    };
    Ok(FnReport { n, diameter, in_range, forbidden })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Verdict {
    LinearQuotients,
    NotLinearQuotients,
    ZeroIdeal,
}

impl Verdict {
    pub fn as_str(&self) -> &'static str {
        match self {
            Verdict::LinearQuotients => "LinearQuotients",
            Verdict::NotLinearQuotients => "NotLinearQuotients",
            Verdict::ZeroIdeal => "ZeroIdeal",
        }
    }
}

/// Which clause of the decision rule fired.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CriterionClause {
    DiameterBelowRange,
    HoldsSmallDiameter,
    HoldsDiameter2nMinus2,
    HoldsDiameter2nMinus1,
    FailsTwoPaths,
    FailsLnk,
    LegacyNoTwoPaths,
    LegacyTwoPaths,
}

impl CriterionClause {
    pub fn as_str(&self) -> &'static str {
        match self {
            CriterionClause::DiameterBelowRange => "diam(G) < n-1",
            CriterionClause::HoldsSmallDiameter => "F_n holds; diam(G) <= 2n-3",
            CriterionClause::HoldsDiameter2nMinus2 => "F_n holds; diam(G) = 2n-2",
            CriterionClause::HoldsDiameter2nMinus1 => "F_n holds; diam(G) = 2n-1",
            CriterionClause::FailsTwoPaths => "F_n fails: induced P_n+P_n",
            CriterionClause::FailsLnk => "F_n fails: induced L_{n,k}",
            CriterionClause::LegacyNoTwoPaths => "legacy n<=3: no induced P_n+P_n",
            CriterionClause::LegacyTwoPaths => "legacy n<=3: induced P_n+P_n",
        }
    }
}

/// The machine-checkable witness attached to every classification.
#[derive(Clone, Debug)]
pub enum Witness {
    /// Verified quotient order over the classified tree's own universe.
    Order(QuotientOrder),
    Forbidden(ForbiddenWitness),
    /// Zero ideal: the diameter is below the required `n - 1`.
    DiameterBound { required: usize },
}

/// A classification verdict plus everything needed to re-check it.
#[derive(Clone, Debug)]
pub struct Classification {
    pub n: usize,
    pub verdict: Verdict,
    pub clause: CriterionClause,
    pub diameter: usize,
    pub witness: Witness,
    /// Labels of the trimmed tree when the positive route ran.
    pub trimmed_labels: Option<Vec<String>>,
}

impl Classification {
    /// Schema: `{"n", "verdict", "criterion_clause", "diameter",
    /// "witness", "trimmed_vertices"}`.
    pub fn to_json(&self, tree: &Tree) -> serde_json::Value {
        let witness = match &self.witness {
            Witness::Order(order) => order.to_json(tree.labels()),
            Witness::Forbidden(w) => w.to_json(tree),
            Witness::DiameterBound { required } => json!({
                "type": "diameter_bound",
                "note": format!(
                    "diameter {} < {} forces the zero ideal",
                    self.diameter, required
                ),
            }),
        };
        json!({
            "n": self.n,
            "verdict": self.verdict.as_str(),
            "criterion_clause": self.clause.as_str(),
            "diameter": self.diameter,
            "witness": witness,
            "trimmed_vertices": self.trimmed_labels,
        })
    }
}

/// Remaps a generator sequence over the trimmed tree's indices back to the
/// host tree's indices via labels.
fn remap_generators(
    order: &QuotientOrder,
    trimmed: &Tree,
    host: &Tree,
) -> Result<Vec<Monomial>, ClassifyError> {
    let map: Vec<usize> = trimmed
        .labels()
        .iter()
        .map(|l| {
            host.index_of(l).ok_or_else(|| {
                ClassifyError::InternalContradiction(format!(
                    "trimmed label `{l}` missing from the host tree"
                ))
            })
        })
        .collect::<Result<_, _>>()?;
    Ok(order
        .generators()
        .iter()
        .map(|g| {
            let support: Vec<usize> = g.support().iter().map(|&v| map[v]).collect();
            Monomial::from_support(&support)
        })
        .collect())
}

/// Classifies whether `J_n(tree)` has linear quotients, `n >= 4`.
///
/// Purely combinatorial: diameter check, forbidden-structure search, then
/// the constructive route (trim to a caterpillar, build the lex order,
/// verify it). Any failed internal assertion aborts with
/// [`ClassifyError::InternalContradiction`] rather than guessing.
pub fn classify(tree: &Tree, n: usize) -> Result<Classification, ClassifyError> {
    if n < 4 {
        return Err(ClassifyError::UnsupportedN(n));
    }
    let diameter = tree.diameter();
    if diameter < n - 1 {
        return Ok(Classification {
            n,
            verdict: Verdict::ZeroIdeal,
            clause: CriterionClause::DiameterBelowRange,
            diameter,
            witness: Witness::DiameterBound { required: n - 1 },
            trimmed_labels: None,
        });
    }

    let report = check_fn(tree, n)?;
    if let Some(witness) = report.forbidden {
        let clause = match witness.kind() {
            ForbiddenKind::TwoPaths => CriterionClause::FailsTwoPaths,
            ForbiddenKind::Lnk { .. } => CriterionClause::FailsLnk,
        };
        return Ok(Classification {
            n,
            verdict: Verdict::NotLinearQuotients,
            clause,
            diameter,
            witness: Witness::Forbidden(witness),
            trimmed_labels: None,
        });
    }
    if !report.in_range {
        // diameter >= 2n forces an induced P_n + P_n along a longest path
        return Err(ClassifyError::InternalContradiction(format!(
            "diameter {diameter} >= 2n but no induced P_{n}+P_{n} was found"
        )));
    }

    let trimmed = tree.trim().map_err(|e| {
        ClassifyError::InternalContradiction(format!(
            "trim must be unambiguous under F_n: {e}"
        ))
    })?;
    let host_ideal = path_ideal(tree, n);
    let trimmed_ideal = path_ideal(&trimmed, n);
    let mut host_gens: Vec<Vec<String>> = host_ideal.generator_labels();
    let mut trim_gens: Vec<Vec<String>> = trimmed_ideal.generator_labels();
    host_gens.sort();
    trim_gens.sort();
    if host_gens != trim_gens {
        return Err(ClassifyError::InternalContradiction(
            "trimming changed the n-path ideal".into(),
        ));
    }

    let (order, case) = caterpillar_linear_quotients(&trimmed, n).map_err(|e| match e {
        LinQuotError::PreconditionViolated(msg) => ClassifyError::InternalContradiction(format!(
            "constructive preconditions must hold under F_n: {msg}"
        )),
        other => ClassifyError::from(other),
    })?;
    let clause = match case {
        CaterpillarCase::Small => CriterionClause::HoldsSmallDiameter,
        CaterpillarCase::MidEmptyAt { .. } => CriterionClause::HoldsDiameter2nMinus2,
        CaterpillarCase::LongEmptyPair => CriterionClause::HoldsDiameter2nMinus1,
    };

    let order = remap_generators(&order, &trimmed, tree)?;
    match verify_order(&host_ideal, &order)? {
        OrderVerdict::Verified(verified) => Ok(Classification {
            n,
            verdict: Verdict::LinearQuotients,
            clause,
            diameter,
            witness: Witness::Order(verified),
            trimmed_labels: Some(trimmed.labels().to_vec()),
        }),
        OrderVerdict::FailedAt { position, .. } => Err(ClassifyError::InternalContradiction(
            format!("remapped lex order failed verification at position {position}"),
        )),
    }
}

/// The cited classification for `n` in `{2, 3}`: linear quotients iff no
/// induced `P_n + P_n`. Experimental; the positive witness comes from the
/// exhaustive order search, not a closed-form construction.
pub fn classify_legacy_n23(tree: &Tree, n: usize) -> Result<Classification, ClassifyError> {
    assert!(n == 2 || n == 3, "legacy route covers n in {{2, 3}} only");
    let diameter = tree.diameter();
    if diameter < n - 1 {
        return Ok(Classification {
            n,
            verdict: Verdict::ZeroIdeal,
            clause: CriterionClause::DiameterBelowRange,
            diameter,
            witness: Witness::DiameterBound { required: n - 1 },
            trimmed_labels: None,
        });
    }
    if let Some(witness) = find_induced_two_paths(tree, n) {
        return Ok(Classification {
            n,
            verdict: Verdict::NotLinearQuotients,
            clause: CriterionClause::LegacyTwoPaths,
            diameter,
            witness: Witness::Forbidden(witness),
            trimmed_labels: None,
        });
    }
    let ideal = path_ideal(tree, n);
    let order = find_linear_quotients_order_capped(&ideal, DEFAULT_LQ_CAP)?.ok_or_else(|| {
        ClassifyError::InternalContradiction(format!(
            "no induced P_{n}+P_{n}, yet J_{n} has no linear quotients"
        ))
    })?;
    Ok(Classification {
        n,
        verdict: Verdict::LinearQuotients,
        clause: CriterionClause::LegacyNoTwoPaths,
        diameter,
        witness: Witness::Order(order),
        trimmed_labels: None,
    })
}

/// Caps for the two verification oracles.
#[derive(Clone, Copy, Debug)]
pub struct OracleCaps {
    /// Generator cap for the exhaustive linear-quotients search.
    pub lq_cap: usize,
    /// Generator cap for the homology engine.
    pub hom_cap: usize,
}

impl Default for OracleCaps {
    fn default() -> Self {
        OracleCaps { lq_cap: DEFAULT_LQ_CAP, hom_cap: DEFAULT_GENERATOR_CAP }
    }
}

/// A classification together with which oracles actually ran.
#[derive(Clone, Debug)]
pub struct VerifiedOutcome {
    pub classification: Classification,
    pub lq_oracle_ran: bool,
    pub homology_oracle_ran: bool,
}

/// Runs [`classify`] and cross-checks the verdict against the exhaustive
/// order search, the homology engine (within caps), and the witness
/// re-checkers. Any mismatch is an [`ClassifyError::OracleDisagreement`]
/// carrying a reproduction bundle.
pub fn classify_verified(
    tree: &Tree,
    n: usize,
    caps: &OracleCaps,
) -> Result<VerifiedOutcome, ClassifyError> {
    let classification = classify(tree, n)?;
    let ideal = path_ideal(tree, n);
    let disagree = |detail: String| {
        ClassifyError::OracleDisagreement(Box::new(Disagreement {
            edges: tree.to_edge_list_document(),
            n,
            detail,
        }))
    };

    // the witness must re-verify from scratch
    match &classification.witness {
        Witness::Order(order) => {
            let ok = matches!(
                verify_order(&ideal, order.generators())?,
                OrderVerdict::Verified(_)
            );
            if !ok {
                return Err(disagree("stored quotient order fails re-verification".into()));
            }
        }
        Witness::Forbidden(w) => {
            if !w.verify(tree) {
                return Err(disagree("stored forbidden witness fails re-verification".into()));
            }
        }
        Witness::DiameterBound { required } => {
            if classification.diameter >= *required || !ideal.is_zero() {
                return Err(disagree("zero-ideal witness is inconsistent".into()));
            }
        }
    }
    if (classification.verdict == Verdict::ZeroIdeal) != ideal.is_zero() {
        return Err(disagree("zero-ideal verdict disagrees with the generator count".into()));
    }

    let mut lq_oracle_ran = false;
    if ideal.num_generators() <= caps.lq_cap {
        lq_oracle_ran = true;
        let found = find_linear_quotients_order_capped(&ideal, caps.lq_cap)?;
        let expected_present = classification.verdict != Verdict::NotLinearQuotients;
        if found.is_some() != expected_present {
            return Err(disagree(format!(
                "classifier says {}, exhaustive search says {}",
                classification.verdict.as_str(),
                if found.is_some() { "order exists" } else { "no order exists" },
            )));
        }
    }

    let mut homology_oracle_ran = false;
    if !ideal.is_zero() && ideal.num_generators() <= caps.hom_cap {
        homology_oracle_ran = true;
        let lr = has_linear_resolution_capped(&ideal, caps.hom_cap).map_err(|e| {
            ClassifyError::InternalContradiction(format!("homology oracle failed: {e}"))
        })?;
        let expected = classification.verdict == Verdict::LinearQuotients;
        if lr != expected {
            return Err(disagree(format!(
                "classifier says {}, homology says linear resolution = {lr}",
                classification.verdict.as_str(),
            )));
        }
    }

    Ok(VerifiedOutcome { classification, lq_oracle_ran, homology_oracle_ran })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn family_tree(spec: &str) -> Tree {
        make_family(&spec.parse().unwrap()).unwrap().into_tree().unwrap()
    }

    fn figure1() -> Tree {
        Tree::parse("x1 x2\nx2 x3\nx3 x4\nx4 x5\nx5 x6\nx6 x7\nx4 x8\nx8 x9").unwrap()
    }

    #[test]
    fn two_paths_in_p9() {
        let t = family_tree("path:9");
        let w = find_induced_two_paths(&t, 4).expect("P_9 contains P_4+P_4");
        let labels: Vec<&str> = w.vertices().iter().map(|&v| t.label(v)).collect();
        assert_eq!(labels, vec!["x1", "x2", "x3", "x4", "x6", "x7", "x8", "x9"]);
        assert!(w.verify(&t));
    }

    #[test]
    fn no_two_paths_in_p8_or_star() {
        assert!(find_induced_two_paths(&family_tree("path:8"), 4).is_none());
        assert!(find_induced_two_paths(&family_tree("star:6"), 3).is_none());
    }

    #[test]
    fn lnk_self_witness_and_symmetry() {
        // L_{6,4} contains L_{6,3} on the reversed anchor
        let t = family_tree("Lnk:6,4");
        let w = find_induced_lnk(&t, 6, 3, 4).unwrap().expect("self-witness");
        assert!(w.verify(&t));
        let ForbiddenKind::Lnk { k } = w.kind() else {
            panic!("expected an Lnk witness")
        };
        assert_eq!(k, 3, "the symmetric smaller k is found first");

        // restricting the scan to the upper half still hits
        let w = find_induced_lnk(&t, 6, 4, 4).unwrap().expect("k = 4 also embeds");
        assert!(w.verify(&t));
    }

    #[test]
    fn no_lnk_in_figure1_or_paths() {
        assert!(find_induced_lnk(&figure1(), 7, 3, 5).unwrap().is_none());
        assert!(find_induced_lnk(&family_tree("path:12"), 6, 3, 4).unwrap().is_none());
        assert_eq!(
            find_induced_lnk(&family_tree("path:12"), 6, 2, 4),
            Err(ClassifyError::BadRange(2, 4))
        );
    }

    #[test]
    fn fn_condition_spec_cases() {
        let l53 = family_tree("Lnk:5,3");
        let r = check_fn(&l53, 5).unwrap();
        assert!(!r.holds());
        assert!(matches!(
            r.forbidden.as_ref().unwrap().kind(),
            ForbiddenKind::Lnk { k: 3 }
        ));

        let r = check_fn(&l53, 4).unwrap();
        assert!(!r.holds(), "L_{{5,3}} violates the n = 4 condition");
        assert_eq!(r.forbidden.as_ref().unwrap().family_n(), 5);

        let r = check_fn(&figure1(), 7).unwrap();
        assert!(r.holds());
        assert_eq!(r.diameter, 6);

        assert_eq!(
            check_fn(&l53, 3).unwrap_err(),
            ClassifyError::UnsupportedN(3)
        );
    }

    #[test]
    fn classify_star_is_zero_ideal() {
        let c = classify(&family_tree("star:5"), 4).unwrap();
        assert_eq!(c.verdict, Verdict::ZeroIdeal);
        assert_eq!(c.clause, CriterionClause::DiameterBelowRange);
        assert_eq!(c.diameter, 2);
    }

    #[test]
    fn classify_l53_not_lq() {
        let t = family_tree("Lnk:5,3");
        let c = classify(&t, 4).unwrap();
        assert_eq!(c.verdict, Verdict::NotLinearQuotients);
        assert_eq!(c.clause, CriterionClause::FailsLnk);
        let Witness::Forbidden(w) = &c.witness else {
            panic!("negative verdicts carry a forbidden witness")
        };
        assert_eq!(w.vertices().len(), 7, "the whole graph is the witness");
        assert!(w.verify(&t));
    }

    #[test]
    fn classify_p9_n4_not_lq_via_two_paths() {
        let c = classify(&family_tree("path:9"), 4).unwrap();
        assert_eq!(c.verdict, Verdict::NotLinearQuotients);
        assert_eq!(c.clause, CriterionClause::FailsTwoPaths);
    }

    #[test]
    fn classify_figure1_n7_lq() {
        let t = figure1();
        let c = classify(&t, 7).unwrap();
        assert_eq!(c.verdict, Verdict::LinearQuotients);
        assert_eq!(c.clause, CriterionClause::HoldsSmallDiameter);
        assert_eq!(
            c.trimmed_labels.as_deref().unwrap(),
            &["x1", "x2", "x3", "x4", "x5", "x6", "x7", "x8"]
        );
        let Witness::Order(order) = &c.witness else {
            panic!("positive verdicts carry an order")
        };
        assert_eq!(order.len(), 1);
    }

    #[test]
    fn classify_verified_spec_instances() {
        let caps = OracleCaps::default();
        for (tree, n) in [
            (family_tree("star:5"), 4),
            (family_tree("Lnk:5,3"), 4),
            (family_tree("path:9"), 4),
            (figure1(), 7),
            (family_tree("path:7"), 4),
            (family_tree("caterpillar:6,1,0,2,1,1"), 4),
        ] {
            let out = classify_verified(&tree, n, &caps).unwrap();
            assert!(out.lq_oracle_ran);
        }
    }

    #[test]
    fn legacy_n2_n3() {
        let p3 = Tree::parse("a b\nb c").unwrap();
        let c = classify_legacy_n23(&p3, 2).unwrap();
        assert_eq!(c.verdict, Verdict::LinearQuotients);

        // two disjoint edges in a path of 5 vertices
        let p5 = family_tree("path:5");
        let c = classify_legacy_n23(&p5, 2).unwrap();
        assert_eq!(c.verdict, Verdict::NotLinearQuotients);

        let p7 = family_tree("path:7");
        let c = classify_legacy_n23(&p7, 3).unwrap();
        assert_eq!(c.verdict, Verdict::NotLinearQuotients);

        let star = family_tree("star:4");
        let c = classify_legacy_n23(&star, 3).unwrap();
        assert_eq!(c.verdict, Verdict::LinearQuotients);
    }
}
