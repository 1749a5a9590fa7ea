//! Deciding and certifying linear quotients.
//!
//! Three routes in increasing specificity: [`verify_order`] checks a given
//! generator order step by step, [`find_linear_quotients_order`] decides
//! existence of any admissible order by reachability over prefix *sets*
//! (whether a generator can be appended depends only on the set of earlier
//! generators, since colon ideals are order-insensitive), and
//! [`caterpillar_linear_quotients`] builds the explicit lex order that works
//! for caterpillars under the diameter/leaf-count preconditions.

use serde_json::json;
use thiserror::Error;

use crate::graph::{CaterpillarDecomposition, Tree};
use crate::ideal::{colon, path_ideal, Monomial, MonomialIdeal};

/// Generator-count cap for the subset-reachability search (2^q states).
pub const DEFAULT_LQ_CAP: usize = 22;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum LinQuotError {
    #[error("order is not a permutation of the minimal generators")]
    NotAPermutation,
    #[error("ideal has {0} generators, above the cap of {1}")]
    TooManyGenerators(usize, usize),
    #[error("ideal is not equigenerated")]
    NotEquigenerated,
    #[error("precondition violated: {0}")]
    PreconditionViolated(String),
    #[error("internal contradiction: {0}")]
    InternalContradiction(String),
}

/// A verified linear-quotients order: generators in sequence, with the
/// variable set generating each successive colon ideal as its certificate.
/// The first position carries an empty certificate.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuotientOrder {
    gens: Vec<Monomial>,
    certificates: Vec<Vec<usize>>,
}

impl QuotientOrder {
    pub fn generators(&self) -> &[Monomial] {
        &self.gens
    }

    /// Certificate at `position` (0-based): the variables generating
    /// `(g_1, ..., g_position) : g_{position+1}`.
    pub fn certificate(&self, position: usize) -> &[usize] {
        &self.certificates[position]
    }

    pub fn len(&self) -> usize {
        self.gens.len()
    }

    pub fn is_empty(&self) -> bool {
        self.gens.is_empty()
    }

    /// Serialization: generator supports plus per-step certificate
    /// variable lists, as labels.
    pub fn to_json(&self, labels: &[String]) -> serde_json::Value {
        let order: Vec<Vec<String>> =
            self.gens.iter().map(|g| g.label_support(labels)).collect();
        let certificates: Vec<Vec<String>> = self
            .certificates
            .iter()
            .map(|c| c.iter().map(|&v| labels[v].clone()).collect())
            .collect();
        json!({ "order": order, "certificates": certificates })
    }
}

/// Outcome of checking a proposed order: verified with certificates, or the
/// first failing position (0-based) with a non-variable colon generator as
/// the counter-certificate.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum OrderVerdict {
    Verified(QuotientOrder),
    FailedAt { position: usize, offending: Monomial },
}

impl OrderVerdict {
    pub fn into_verified(self) -> Option<QuotientOrder> {
        match self {
            OrderVerdict::Verified(q) => Some(q),
            OrderVerdict::FailedAt { .. } => None,
        }
    }
}

/// Checks whether `order` realizes linear quotients for `ideal`. The order
/// must be a permutation of the minimal generators.
pub fn verify_order(
    ideal: &MonomialIdeal,
    order: &[Monomial],
) -> Result<OrderVerdict, LinQuotError> {
    let mut sorted: Vec<Monomial> = order.to_vec();
    sorted.sort();
    sorted.dedup();
    if sorted.len() != order.len() || sorted != ideal.generators() {
        return Err(LinQuotError::NotAPermutation);
    }
    let mut certificates = vec![Vec::new()];
    for k in 1..order.len() {
        let prefix = MonomialIdeal::new(ideal.labels().to_vec(), order[..k].to_vec());
        let result = colon(&prefix, &order[k]).expect("prefix of nonzero ideal is nonzero");
        match result.variables() {
            Some(vars) => certificates.push(vars),
            None => {
                return Ok(OrderVerdict::FailedAt {
                    position: k,
                    offending: result
                        .offending_generator()
                        .expect("non-variable colon has a witness generator"),
                })
            }
        }
    }
    Ok(OrderVerdict::Verified(QuotientOrder { gens: order.to_vec(), certificates }))
}

/// Can `g` be appended after exactly the generator set `prefix`?
fn appendable(prefix: &[Monomial], g: &Monomial) -> bool {
    // (prefix : g) is variable-generated iff each quotient h/gcd(h,g)
    // contains a quotient that is a single variable
    prefix.iter().all(|h| {
        let q = h.quotient_by(g);
        if q.degree() == 1 {
            return true;
        }
        prefix.iter().any(|h2| {
            let q2 = h2.quotient_by(g);
            q2.degree() == 1 && q2.divides(&q)
        })
    })
}

/// Searches for any linear-quotients order by breadth-first reachability on
/// the subset lattice of generators. Sound and complete within the cap:
/// admissibility of appending a generator depends only on the prefix set,
/// so an order exists iff the full set is reachable.
pub fn find_linear_quotients_order(
    ideal: &MonomialIdeal,
) -> Result<Option<QuotientOrder>, LinQuotError> {
    find_linear_quotients_order_capped(ideal, DEFAULT_LQ_CAP)
}

pub fn find_linear_quotients_order_capped(
    ideal: &MonomialIdeal,
    cap: usize,
) -> Result<Option<QuotientOrder>, LinQuotError> {
    let gens = ideal.generators();
    let q = gens.len();
    if q > cap || q > 25 {
        return Err(LinQuotError::TooManyGenerators(q, cap));
    }
    if q == 0 {
        // the zero ideal has linear quotients trivially
        return Ok(Some(QuotientOrder { gens: Vec::new(), certificates: Vec::new() }));
    }

    // last_added[mask] = generator appended to reach mask, usize::MAX if
    // unreached; parent = mask without that generator
    let full: usize = (1usize << q) - 1;
    let mut last_added: Vec<u8> = vec![u8::MAX; 1 << q];
    let mut frontier: Vec<usize> = Vec::new();
    for g in 0..q {
        last_added[1 << g] = g as u8;
        frontier.push(1 << g);
    }
    let mut prefix_buf: Vec<Monomial> = Vec::with_capacity(q);
    while !frontier.is_empty() && last_added[full] == u8::MAX {
        let mut next = Vec::new();
        for &mask in &frontier {
            prefix_buf.clear();
            for g in 0..q {
                if mask >> g & 1 == 1 {
                    prefix_buf.push(gens[g]);
                }
            }
            for g in 0..q {
                let bit = 1usize << g;
                if mask & bit != 0 || last_added[mask | bit] != u8::MAX {
                    continue;
                }
                if appendable(&prefix_buf, &gens[g]) {
                    last_added[mask | bit] = g as u8;
                    next.push(mask | bit);
                }
            }
        }
        frontier = next;
    }
    if last_added[full] == u8::MAX {
        return Ok(None);
    }

    // reconstruct the order and re-verify to attach certificates
    let mut order_rev = Vec::with_capacity(q);
    let mut mask = full;
    while mask != 0 {
        let g = last_added[mask] as usize;
        order_rev.push(gens[g]);
        mask &= !(1 << g);
    }
    order_rev.reverse();
    match verify_order(ideal, &order_rev)? {
        OrderVerdict::Verified(qo) => Ok(Some(qo)),
        OrderVerdict::FailedAt { position, .. } => Err(LinQuotError::InternalContradiction(
            format!("reachability produced an order that fails verification at {position}"),
        )),
    }
}

/// A total order on the variable universe, largest first.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VariableOrder {
    sequence: Vec<usize>,
    rank: Vec<usize>,
}

impl VariableOrder {
    pub fn from_sequence(sequence: Vec<usize>, universe: usize) -> Self {
        assert_eq!(sequence.len(), universe, "order must cover the universe");
        let mut rank = vec![usize::MAX; universe];
        for (r, &v) in sequence.iter().enumerate() {
            assert!(rank[v] == usize::MAX, "duplicate variable in order");
            rank[v] = r;
        }
        VariableOrder { sequence, rank }
    }

    /// Variables from largest to smallest.
    pub fn sequence(&self) -> &[usize] {
        &self.sequence
    }

    /// Position of `v` in the sequence; smaller rank = larger variable.
    pub fn rank(&self, v: usize) -> usize {
        self.rank[v]
    }

    /// Lex key of a squarefree monomial: its support listed largest
    /// variable first, as ranks. Smaller key = lex-larger monomial.
    fn lex_key(&self, m: &Monomial) -> Vec<usize> {
        let mut key: Vec<usize> = m.support().iter().map(|&v| self.rank[v]).collect();
        key.sort_unstable();
        key
    }
}

/// The caterpillar variable order:
/// `x_1 > LN(x_1) > x_2 > LN(x_2) > ... > x_{d-1} > LN(x_{d-1})`,
/// leaf lists read in their stored (label-ascending) order.
pub fn lex_variable_order(tree: &Tree, decomp: &CaterpillarDecomposition) -> VariableOrder {
    let mut sequence = Vec::with_capacity(tree.num_vertices());
    for (i, &x) in decomp.central_path().iter().enumerate() {
        sequence.push(x);
        sequence.extend_from_slice(decomp.leaf_neighbors(i));
    }
    if decomp.central_path().is_empty() {
        // two-vertex degenerate caterpillar: order by label
        let mut all: Vec<usize> = (0..tree.num_vertices()).collect();
        all.sort_by(|&a, &b| tree.label(a).cmp(tree.label(b)));
        sequence = all;
    }
    VariableOrder::from_sequence(sequence, tree.num_vertices())
}

/// Minimal generators sorted strictly descending in the lex order induced
/// by the variable order. Requires an equigenerated ideal; ties are
/// impossible for distinct squarefree monomials.
pub fn lex_generator_order(
    ideal: &MonomialIdeal,
    vo: &VariableOrder,
) -> Result<Vec<Monomial>, LinQuotError> {
    if !ideal.is_equigenerated() {
        return Err(LinQuotError::NotEquigenerated);
    }
    let mut gens = ideal.generators().to_vec();
    gens.sort_by_key(|g| vo.lex_key(g));
    for w in gens.windows(2) {
        assert_ne!(
            vo.lex_key(&w[0]),
            vo.lex_key(&w[1]),
            "distinct squarefree monomials cannot tie in lex order"
        );
    }
    Ok(gens)
}

/// Which constructive case applies to a caterpillar of diameter `d`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CaterpillarCase {
    /// `d <= 2n-3`: the lex order works unconditionally.
    Small,
    /// `d = 2n-2` with no leaf neighbors at central position `n-2`
    /// (after reversing the central path if needed).
    MidEmptyAt { flipped: bool },
    /// `d = 2n-1` with no leaf neighbors at positions `n-2` and `n+1`.
    LongEmptyPair,
}

/// Builds and verifies the lex linear-quotients order for a caterpillar's
/// n-path ideal under the constructive preconditions:
/// `d <= 2n-3`, or `d = 2n-2` with `l_{n-2} = 0` (up to reversal), or
/// `d = 2n-1` with `l_{n-2} = l_{n+1} = 0`.
pub fn caterpillar_linear_quotients(
    tree: &Tree,
    n: usize,
) -> Result<(QuotientOrder, CaterpillarCase), LinQuotError> {
    assert!(n >= 2);
    let decomp = tree.caterpillar_decomposition().ok_or_else(|| {
        LinQuotError::PreconditionViolated("tree is not a caterpillar".into())
    })?;
    let d = decomp.diameter();
    let ideal = path_ideal(tree, n);
    if ideal.is_zero() {
        return Ok((
            QuotientOrder { gens: Vec::new(), certificates: Vec::new() },
            CaterpillarCase::Small,
        ));
    }

    let leaf_counts = decomp.leaf_counts();
    // leaf count at 1-based central position i
    let l_at = |i: usize| leaf_counts.get(i - 1).copied().unwrap_or(0);
    let (decomp, case) = if d <= 2 * n - 3 {
        (decomp, CaterpillarCase::Small)
    } else if d == 2 * n - 2 {
        if l_at(n - 2) == 0 {
            (decomp, CaterpillarCase::MidEmptyAt { flipped: false })
        } else if l_at(n) == 0 {
            // reversal maps position n to position n-2
            (decomp.reversed(), CaterpillarCase::MidEmptyAt { flipped: true })
        } else {
            return Err(LinQuotError::PreconditionViolated(format!(
                "d = 2n-2 = {d} but neither l_{} nor l_{} is zero",
                n - 2,
                n
            )));
        }
    } else if d == 2 * n - 1 {
        if l_at(n - 2) != 0 || l_at(n + 1) != 0 {
            return Err(LinQuotError::PreconditionViolated(format!(
                "d = 2n-1 = {d} but l_{} or l_{} is nonzero",
                n - 2,
                n + 1
            )));
        }
        (decomp, CaterpillarCase::LongEmptyPair)
    } else {
        return Err(LinQuotError::PreconditionViolated(format!(
            "diameter {d} exceeds 2n-1 = {}",
            2 * n - 1
        )));
    };

    let vo = lex_variable_order(tree, &decomp);
    let order = lex_generator_order(&ideal, &vo)?;
    match verify_order(&ideal, &order)? {
        OrderVerdict::Verified(qo) => Ok((qo, case)),
        OrderVerdict::FailedAt { position, offending } => {
            Err(LinQuotError::InternalContradiction(format!(
                "lex order failed at position {position} with colon generator {}; \
                 the constructive preconditions were checked, so this is a bug",
                offending.format_with(tree.labels())
            )))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{make_family, random_tree, Tree};

    fn family_tree(spec: &str) -> Tree {
        make_family(&spec.parse().unwrap()).unwrap().into_tree().unwrap()
    }

    #[test]
    fn verify_order_on_edge_ideal_of_p3() {
        let t = Tree::parse("a b\nb c").unwrap();
        let ideal = path_ideal(&t, 2);
        let order: Vec<Monomial> = ideal.generators().to_vec();
        let verdict = verify_order(&ideal, &order).unwrap();
        let qo = verdict.into_verified().expect("P_3 edge ideal has linear quotients");
        assert_eq!(qo.certificate(0), &[] as &[usize]);
        assert_eq!(qo.certificate(1).len(), 1);
        // step-2 certificate is the vertex outside the overlap
        let cert_label = t.label(qo.certificate(1)[0]);
        assert!(cert_label == "a" || cert_label == "c");
    }

    #[test]
    fn verify_order_fails_on_disjoint_paths() {
        let g = make_family(&"two_paths:4".parse().unwrap()).unwrap();
        let ideal = path_ideal(g.as_graph(), 4);
        assert_eq!(ideal.num_generators(), 2);
        for order in [
            ideal.generators().to_vec(),
            ideal.generators().iter().rev().copied().collect::<Vec<_>>(),
        ] {
            match verify_order(&ideal, &order).unwrap() {
                OrderVerdict::FailedAt { position, offending } => {
                    assert_eq!(position, 1);
                    assert_eq!(offending.degree(), 4);
                }
                OrderVerdict::Verified(_) => panic!("disjoint supports cannot verify"),
            }
        }
    }

    #[test]
    fn verify_order_rejects_non_permutations() {
        let t = Tree::parse("a b\nb c").unwrap();
        let ideal = path_ideal(&t, 2);
        let g = ideal.generators()[0];
        assert_eq!(
            verify_order(&ideal, &[g, g]),
            Err(LinQuotError::NotAPermutation)
        );
        assert_eq!(verify_order(&ideal, &[g]), Err(LinQuotError::NotAPermutation));
    }

    #[test]
    fn lex_order_on_j4_p7_verifies() {
        let t = family_tree("path:7");
        let ideal = path_ideal(&t, 4);
        let decomp = t.caterpillar_decomposition().unwrap();
        let vo = lex_variable_order(&t, &decomp);
        let order = lex_generator_order(&ideal, &vo).unwrap();
        assert!(matches!(
            verify_order(&ideal, &order).unwrap(),
            OrderVerdict::Verified(_)
        ));
    }

    #[test]
    fn dp_finds_no_order_for_j4_l53() {
        let ideal = path_ideal(&family_tree("Lnk:5,3"), 4);
        assert_eq!(ideal.num_generators(), 6);
        assert_eq!(find_linear_quotients_order(&ideal).unwrap(), None);
    }

    #[test]
    fn dp_handles_principal_and_zero_ideals() {
        let t = family_tree("path:7");
        let ideal = path_ideal(&t, 7);
        let qo = find_linear_quotients_order(&ideal).unwrap().unwrap();
        assert_eq!(qo.len(), 1);

        let zero = path_ideal(&family_tree("star:5"), 4);
        let qo = find_linear_quotients_order(&zero).unwrap().unwrap();
        assert!(qo.is_empty());
    }

    #[test]
    fn dp_finds_order_for_diameter5_caterpillar() {
        let t = family_tree("caterpillar:5,2,1,0,1");
        let ideal = path_ideal(&t, 4);
        assert!(!ideal.is_zero());
        let qo = find_linear_quotients_order(&ideal).unwrap();
        assert!(qo.is_some(), "the d <= 2n-3 range must have linear quotients");
    }

    #[test]
    fn dp_agrees_with_permutation_bruteforce() {
        fn brute(ideal: &MonomialIdeal) -> bool {
            fn rec(ideal: &MonomialIdeal, used: &mut Vec<Monomial>, rest: &mut Vec<Monomial>) -> bool {
                if rest.is_empty() {
                    return true;
                }
                for i in 0..rest.len() {
                    let g = rest.remove(i);
                    let ok = used.is_empty() || {
                        let prefix = MonomialIdeal::new(ideal.labels().to_vec(), used.clone());
                        colon(&prefix, &g).unwrap().is_variable_generated()
                    };
                    if ok {
                        used.push(g);
                        if rec(ideal, used, rest) {
                            return true;
                        }
                        used.pop();
                    }
                    rest.insert(i, g);
                }
                false
            }
            rec(ideal, &mut Vec::new(), &mut ideal.generators().to_vec())
        }

        let mut checked = 0;
        for seed in 0..400u64 {
            let t = random_tree(8, seed);
            for n in [3, 4, 5] {
                let ideal = path_ideal(&t, n);
                if ideal.is_zero() || ideal.num_generators() > 7 {
                    continue;
                }
                let dp = find_linear_quotients_order(&ideal).unwrap().is_some();
                assert_eq!(dp, brute(&ideal), "seed {seed}, n {n}");
                checked += 1;
            }
        }
        assert!(checked > 100, "only {checked} ideals exercised");
    }

    #[test]
    fn dp_result_always_verifies() {
        for seed in 0..60u64 {
            let t = random_tree(9, seed);
            let ideal = path_ideal(&t, 4);
            if ideal.num_generators() > DEFAULT_LQ_CAP {
                continue;
            }
            if let Some(qo) = find_linear_quotients_order(&ideal).unwrap() {
                if qo.is_empty() {
                    continue;
                }
                assert!(matches!(
                    verify_order(&ideal, qo.generators()).unwrap(),
                    OrderVerdict::Verified(_)
                ));
            }
        }
    }

    #[test]
    fn p5_lex_variable_order_matches_notation() {
        let t = Tree::parse("v1 v2\nv2 v3\nv3 v4\nv4 v5").unwrap();
        let decomp = t.caterpillar_decomposition().unwrap();
        let vo = lex_variable_order(&t, &decomp);
        let labels: Vec<&str> = vo.sequence().iter().map(|&v| t.label(v)).collect();
        assert_eq!(labels, vec!["v2", "v1", "v3", "v4", "v5"]);
    }

    #[test]
    fn p5_lex_generator_order() {
        let t = Tree::parse("v1 v2\nv2 v3\nv3 v4\nv4 v5").unwrap();
        let ideal = path_ideal(&t, 4);
        let decomp = t.caterpillar_decomposition().unwrap();
        let vo = lex_variable_order(&t, &decomp);
        let order = lex_generator_order(&ideal, &vo).unwrap();
        let first: Vec<&str> = order[0].support().iter().map(|&v| t.label(v)).collect();
        assert_eq!(first, vec!["v1", "v2", "v3", "v4"]);
    }

    #[test]
    fn empty_ln_is_skipped_in_sequence() {
        // central path a-b-c with LN(b) empty: b immediately precedes c
        let t = Tree::parse("z a\na b\nb c\nc w").unwrap();
        let decomp = t.caterpillar_decomposition().unwrap();
        let vo = lex_variable_order(&t, &decomp);
        let labels: Vec<&str> = vo.sequence().iter().map(|&v| t.label(v)).collect();
        assert_eq!(labels, vec!["a", "z", "b", "c", "w"]);
    }

    #[test]
    fn caterpillar_lq_smoke_cases() {
        // n = 4, d = 5: the unconditional small-diameter range
        let t = family_tree("caterpillar:5,1,2,0,1");
        let (qo, case) = caterpillar_linear_quotients(&t, 4).unwrap();
        assert_eq!(case, CaterpillarCase::Small);
        assert!(!qo.is_empty());

        // n = 4, d = 6 with l_2 = 0
        let t = family_tree("caterpillar:6,1,0,1,1,2");
        let (_, case) = caterpillar_linear_quotients(&t, 4).unwrap();
        assert_eq!(case, CaterpillarCase::MidEmptyAt { flipped: false });

        // n = 4, d = 6 with l_4 = 0 only: needs the reversal
        let t = family_tree("caterpillar:6,1,1,1,0,2");
        let (_, case) = caterpillar_linear_quotients(&t, 4).unwrap();
        assert_eq!(case, CaterpillarCase::MidEmptyAt { flipped: true });

        // n = 4, d = 7 with l_2 = l_5 = 0
        let t = family_tree("caterpillar:7,1,0,1,1,0,2");
        let (_, case) = caterpillar_linear_quotients(&t, 4).unwrap();
        assert_eq!(case, CaterpillarCase::LongEmptyPair);

        // violations are reported, not silently worked around
        let t = family_tree("caterpillar:6,1,1,1,1,1");
        assert!(matches!(
            caterpillar_linear_quotients(&t, 4),
            Err(LinQuotError::PreconditionViolated(_))
        ));
        let t = family_tree("Lnk:5,3");
        assert!(matches!(
            caterpillar_linear_quotients(&t, 4),
            Err(LinQuotError::PreconditionViolated(_))
        ));
    }

    #[test]
    fn restriction_preserves_lq_presence() {
        use crate::ideal::restrict;
        for seed in 0..40u64 {
            let t = random_tree(8, seed);
            let ideal = path_ideal(&t, 4);
            if ideal.num_generators() > DEFAULT_LQ_CAP {
                continue;
            }
            if find_linear_quotients_order(&ideal).unwrap().is_none() {
                continue;
            }
            // restrict to a few random-ish submonomials
            for drop in 0..t.num_vertices() {
                let keep: Vec<usize> = (0..t.num_vertices()).filter(|&v| v != drop).collect();
                let m = Monomial::from_support(&keep);
                let restricted = restrict(&ideal, &m);
                assert!(
                    find_linear_quotients_order(&restricted).unwrap().is_some(),
                    "restriction lost linear quotients (seed {seed}, drop {drop})"
                );
            }
        }
    }
}
