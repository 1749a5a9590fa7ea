//! Path ideals of trees: construction, linear-quotients classification with
//! independently checkable witnesses, and exact homological verification.
//!
//! For a tree `G` and an integer `n`, the n-path ideal `J_n(G)` is generated
//! by the products of vertices along each n-vertex path. This crate decides
//! whether `J_n(G)` has linear quotients (equivalently, linear resolution)
//! by a purely combinatorial criterion — diameter bounds plus the absence of
//! two induced forbidden structures — and certifies every verdict:
//!
//! * positive verdicts carry an explicit generator order whose successive
//!   colon ideals are variable-generated, constructed from a lex order on
//!   the trimmed caterpillar and re-verified step by step;
//! * negative verdicts carry an embedded forbidden induced subgraph
//!   (`P_n + P_n` or `L_{n,k}`) with its isomorphism onto the host tree;
//! * both are cross-validated by an exhaustive order search over prefix
//!   sets and by exact (characteristic-0) Betti numbers.
//!
//! The `parallel` feature (default) runs the fuzz harness, Betti multidegree
//! scans, and tree-corpus enumeration on rayon; disabling it leaves
//! sequential fallbacks with identical results.

pub mod classify;
pub mod fuzz;
pub mod graph;
pub mod ideal;
pub mod linquot;
mod par;
pub mod resolution;

pub use classify::{classify, classify_verified, Classification, OracleCaps, Verdict};
pub use graph::{SimpleGraph, Tree};
pub use ideal::{path_ideal, MonomialIdeal};
