//! Naive brute-force reference implementations.
//!
//! Everything here enumerates subsets directly and shares no code with the
//! optimized engines, so agreement between the two is evidence rather than
//! tautology. Shipped as a regular module so expected test values can be
//! re-minted at any time.

use crate::graph::{Graph, VertexSet};
use thiserror::Error;

pub const MAX_SSS_ORACLE_ORDER: usize = 14;
pub const MAX_SP_ORACLE_ORDER: usize = 10;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum OracleError {
    #[error("order {order} exceeds the oracle bound of {max}")]
    OrderTooLarge { order: usize, max: usize },
}

/// Maximal cliques by subset sweep: collect every clique, keep those that no
/// further vertex extends. The empty clique is never reported.
fn subset_top(n: usize) -> u64 {
    if n == 0 {
        1
    } else {
        1u64 << n
    }
}

pub fn maximal_cliques_by_filtering(g: &Graph) -> Vec<VertexSet> {
    let n = g.order();
    assert!(n <= 24, "subset sweep is only meant for small graphs");
    let mut out = Vec::new();
    for mask in 1..subset_top(n) {
        let s = VertexSet::from_mask(mask);
        if !g.is_clique(s) {
            continue;
        }
        let extendable = (0..n).any(|v| !s.contains(v) && s.is_subset_of(g.neighbors(v)));
        if !extendable {
            out.push(s);
        }
    }
    out
}

/// Definitional check: `s` is stable and meets every nonempty maximal clique.
pub fn is_strong_stable_set(g: &Graph, s: VertexSet) -> bool {
    if !s.is_subset_of(g.vertices()) || !g.is_stable_set(s) {
        return false;
    }
    maximal_cliques_by_filtering(g)
        .iter()
        .all(|c| c.intersects(s))
}

/// Every strong stable set of `g`, by exhausting all 2^n subsets.
pub fn all_strong_stable_sets(g: &Graph) -> Result<Vec<VertexSet>, OracleError> {
    let n = g.order();
    if n > MAX_SSS_ORACLE_ORDER {
        return Err(OracleError::OrderTooLarge {
            order: n,
            max: MAX_SSS_ORACLE_ORDER,
        });
    }
    let cliques = maximal_cliques_by_filtering(g);
    let top = subset_top(n);
    let mut out = Vec::new();
    for mask in 0..top {
        let s = VertexSet::from_mask(mask);
        if g.is_stable_set(s) && cliques.iter().all(|c| c.intersects(s)) {
            out.push(s);
        }
    }
    Ok(out)
}

pub fn has_strong_stable_set(g: &Graph) -> Result<bool, OracleError> {
    let n = g.order();
    if n > MAX_SSS_ORACLE_ORDER {
        return Err(OracleError::OrderTooLarge {
            order: n,
            max: MAX_SSS_ORACLE_ORDER,
        });
    }
    let cliques = maximal_cliques_by_filtering(g);
    let top = subset_top(n);
    Ok((0..top).any(|mask| {
        let s = VertexSet::from_mask(mask);
        g.is_stable_set(s) && cliques.iter().all(|c| c.intersects(s))
    }))
}

/// Strong perfection by definition: every one of the 2^n induced subgraphs
/// has a strong stable set. No pruning, no memoization.
pub fn strongly_perfect(g: &Graph) -> Result<bool, OracleError> {
    let n = g.order();
    if n > MAX_SP_ORACLE_ORDER {
        return Err(OracleError::OrderTooLarge {
            order: n,
            max: MAX_SP_ORACLE_ORDER,
        });
    }
    let top = subset_top(n);
    for mask in 0..top {
        let h = g.induced_subgraph(VertexSet::from_mask(mask));
        if !has_strong_stable_set(&h).unwrap() {
            return Ok(false);
        }
    }
    Ok(true)
}
