//! Exhaustive generation of small graphs, one per isomorphism class.

use crate::canon::{canonical_form, canonical_key, CanonicalKey};
use crate::graph::Graph;
use std::collections::BTreeMap;
use thiserror::Error;

/// The built-in enumerator stops at order 8 (12346 classes); larger orders
/// must come from an external graph6 stream.
pub const MAX_ENUMERATION_ORDER: usize = 8;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum EnumerationError {
    #[error("order {0} exceeds the built-in enumeration bound of {MAX_ENUMERATION_ORDER}")]
    OrderTooLargeForEnumeration(usize),
}

/// Exactly one representative (in canonical form) per isomorphism class of
/// simple graphs on `order` vertices, sorted by canonical key.
///
/// Works by vertex augmentation: every class on n vertices arises from some
/// class on n-1 vertices plus one new vertex with some neighbor set, so
/// extending every representative by every mask and deduplicating by
/// canonical key is exhaustive.
pub fn enumerate_nonisomorphic(order: usize) -> Result<Vec<Graph>, EnumerationError> {
    if order > MAX_ENUMERATION_ORDER {
        return Err(EnumerationError::OrderTooLargeForEnumeration(order));
    }
    let mut level: BTreeMap<CanonicalKey, Graph> = BTreeMap::new();
    level.insert(
        canonical_key(&Graph::empty(0).unwrap()),
        Graph::empty(0).unwrap(),
    );
    for n in 1..=order {
        let mut next: BTreeMap<CanonicalKey, Graph> = BTreeMap::new();
        for parent in level.values() {
            let base_edges = parent.edges();
            for mask in 0u64..1 << (n - 1) {
                let mut edges = base_edges.clone();
                for v in 0..n - 1 {
                    if mask >> v & 1 == 1 {
                        edges.push((v, n - 1));
                    }
                }
                let child = Graph::from_edges(n, &edges).unwrap();
                let key = canonical_key(&child);
                next.entry(key).or_insert_with(|| canonical_form(&child));
            }
        }
        level = next;
    }
    Ok(level.into_values().collect())
}

/// All classes of order 0 through `order` inclusive, smaller orders first.
pub fn enumerate_up_to(order: usize) -> Result<Vec<Graph>, EnumerationError> {
    if order > MAX_ENUMERATION_ORDER {
        return Err(EnumerationError::OrderTooLargeForEnumeration(order));
    }
    let mut out = Vec::new();
    for n in 0..=order {
        out.extend(enumerate_nonisomorphic(n)?);
    }
    Ok(out)
}
