//! Simple undirected graphs on at most 64 labeled vertices.
//!
//! Adjacency is stored as one `u64` neighbor mask per vertex, so induced
//! subgraphs, complements and set algebra are a handful of word operations.

use std::fmt;
use thiserror::Error;

/// Hard cap on the number of vertices; vertex sets must fit in one word.
pub const MAX_ORDER: usize = 64;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GraphError {
    #[error("order {0} exceeds the maximum of 64")]
    OrderTooLarge(usize),
    #[error("edge ({0}, {1}) is not valid in a graph of order {2}")]
    BadEdge(usize, usize, usize),
}

/// A subset of the vertices `0..order`, stored as a bit mask.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct VertexSet(u64);

impl VertexSet {
    pub const EMPTY: VertexSet = VertexSet(0);

    pub fn full(n: usize) -> Self {
        debug_assert!(n <= MAX_ORDER);
        if n == 64 {
            VertexSet(!0)
        } else {
            VertexSet((1u64 << n) - 1)
        }
    }

    pub fn singleton(v: usize) -> Self {
        debug_assert!(v < MAX_ORDER);
        VertexSet(1u64 << v)
    }

    pub fn from_mask(mask: u64) -> Self {
        VertexSet(mask)
    }

    pub fn mask(self) -> u64 {
        self.0
    }

    pub fn contains(self, v: usize) -> bool {
        v < MAX_ORDER && self.0 >> v & 1 == 1
    }

    #[must_use]
    pub fn with(self, v: usize) -> Self {
        debug_assert!(v < MAX_ORDER);
        VertexSet(self.0 | 1 << v)
    }

    #[must_use]
    pub fn without(self, v: usize) -> Self {
        VertexSet(self.0 & !(1 << v))
    }

    pub fn insert(&mut self, v: usize) {
        debug_assert!(v < MAX_ORDER);
        self.0 |= 1 << v;
    }

    pub fn remove(&mut self, v: usize) {
        self.0 &= !(1 << v);
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn is_subset_of(self, other: VertexSet) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn intersects(self, other: VertexSet) -> bool {
        self.0 & other.0 != 0
    }

    #[must_use]
    pub fn union(self, other: VertexSet) -> Self {
        VertexSet(self.0 | other.0)
    }

    #[must_use]
    pub fn intersection(self, other: VertexSet) -> Self {
        VertexSet(self.0 & other.0)
    }

    #[must_use]
    pub fn minus(self, other: VertexSet) -> Self {
        VertexSet(self.0 & !other.0)
    }

    /// Smallest element, if any.
    pub fn first(self) -> Option<usize> {
        if self.0 == 0 {
            None
        } else {
            Some(self.0.trailing_zeros() as usize)
        }
    }

    pub fn iter(self) -> BitIter {
        BitIter(self.0)
    }

    pub fn to_vec(self) -> Vec<usize> {
        self.iter().collect()
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<T: IntoIterator<Item = usize>>(iter: T) -> Self {
        let mut s = VertexSet::EMPTY;
        for v in iter {
            s.insert(v);
        }
        s
    }
}

impl std::ops::BitOr for VertexSet {
    type Output = VertexSet;
    fn bitor(self, rhs: Self) -> Self {
        self.union(rhs)
    }
}

impl std::ops::BitAnd for VertexSet {
    type Output = VertexSet;
    fn bitand(self, rhs: Self) -> Self {
        self.intersection(rhs)
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, v) in self.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "}}")
    }
}

impl fmt::Display for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

/// Iterator over the elements of a [`VertexSet`], in ascending order.
pub struct BitIter(u64);

impl Iterator for BitIter {
    type Item = usize;
    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            None
        } else {
            let v = self.0.trailing_zeros() as usize;
            self.0 &= self.0 - 1;
            Some(v)
        }
    }
}

/// A finite simple graph with vertices `0..order`.
///
/// Invariants: no self loops, symmetric adjacency, all neighbor bits below
/// `order`. Construction through [`Graph::from_edges`] enforces them.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    order: usize,
    adj: Vec<u64>,
}

impl Graph {
    pub fn empty(order: usize) -> Result<Graph, GraphError> {
        if order > MAX_ORDER {
            return Err(GraphError::OrderTooLarge(order));
        }
        Ok(Graph {
            order,
            adj: vec![0; order],
        })
    }

    /// Builds a graph from an edge list; symmetric closure is applied and
    /// duplicate pairs are harmless.
    pub fn from_edges(order: usize, edges: &[(usize, usize)]) -> Result<Graph, GraphError> {
        let mut g = Graph::empty(order)?;
        for &(u, v) in edges {
            if u == v || u >= order || v >= order {
                return Err(GraphError::BadEdge(u, v, order));
            }
            g.adj[u] |= 1 << v;
            g.adj[v] |= 1 << u;
        }
        Ok(g)
    }

    pub(crate) fn add_edge(&mut self, u: usize, v: usize) {
        debug_assert!(u != v && u < self.order && v < self.order);
        self.adj[u] |= 1 << v;
        self.adj[v] |= 1 << u;
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.order)
    }

    pub fn neighbors(&self, v: usize) -> VertexSet {
        VertexSet(self.adj[v])
    }

    pub fn neighbor_mask(&self, v: usize) -> u64 {
        self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.order && v < self.order && self.adj[u] >> v & 1 == 1
    }

    /// Edges as ascending `(u, v)` pairs with `u < v`.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for u in 0..self.order {
            for v in VertexSet(self.adj[u]).iter() {
                if v > u {
                    out.push((u, v));
                }
            }
        }
        out
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|m| m.count_ones() as usize).sum::<usize>() / 2
    }

    /// The cycle `0-1-...-(n-1)-0`. Requires `3 <= n <= 64`.
    pub fn cycle(n: usize) -> Graph {
        assert!((3..=MAX_ORDER).contains(&n));
        let mut g = Graph::empty(n).unwrap();
        for i in 0..n {
            g.add_edge(i, (i + 1) % n);
        }
        g
    }

    /// The path `0-1-...-(n-1)`.
    pub fn path(n: usize) -> Graph {
        let mut g = Graph::empty(n).unwrap();
        for i in 1..n {
            g.add_edge(i - 1, i);
        }
        g
    }

    pub fn complete(n: usize) -> Graph {
        let mut g = Graph::empty(n).unwrap();
        for u in 0..n {
            for v in u + 1..n {
                g.add_edge(u, v);
            }
        }
        g
    }

    /// The induced subgraph on `s`, relabeled `0..|s|` preserving the
    /// ascending order of the original labels.
    pub fn induced_subgraph(&self, s: VertexSet) -> Graph {
        let verts: Vec<usize> = s.intersection(self.vertices()).to_vec();
        let mut new_index = [0usize; MAX_ORDER];
        for (i, &v) in verts.iter().enumerate() {
            new_index[v] = i;
        }
        let mut g = Graph {
            order: verts.len(),
            adj: vec![0; verts.len()],
        };
        for (i, &v) in verts.iter().enumerate() {
            for w in VertexSet(self.adj[v] & s.mask()).iter() {
                g.adj[i] |= 1 << new_index[w];
            }
        }
        g
    }

    /// Deletes one vertex, relabeling the rest in ascending order.
    pub fn delete_vertex(&self, v: usize) -> Graph {
        self.induced_subgraph(self.vertices().without(v))
    }

    pub fn complement(&self) -> Graph {
        let full = VertexSet::full(self.order).mask();
        let adj = (0..self.order)
            .map(|v| !self.adj[v] & full & !(1u64 << v))
            .collect();
        Graph {
            order: self.order,
            adj,
        }
    }

    /// Disjoint union; the vertices of `other` are shifted up by `self.order()`.
    pub fn disjoint_union(&self, other: &Graph) -> Result<Graph, GraphError> {
        let n = self.order + other.order;
        if n > MAX_ORDER {
            return Err(GraphError::OrderTooLarge(n));
        }
        let mut adj = self.adj.clone();
        adj.extend(other.adj.iter().map(|m| m << self.order));
        Ok(Graph { order: n, adj })
    }

    pub fn is_clique(&self, s: VertexSet) -> bool {
        s.iter().all(|v| s.without(v).is_subset_of(self.neighbors(v)))
    }

    pub fn is_stable_set(&self, s: VertexSet) -> bool {
        s.iter().all(|v| !s.intersects(self.neighbors(v)))
    }

    /// Connectivity of the induced subgraph on `s` (true for |s| <= 1).
    pub fn is_connected_within(&self, s: VertexSet) -> bool {
        let Some(start) = s.first() else { return true };
        let mut seen = VertexSet::singleton(start);
        let mut frontier = seen;
        while !frontier.is_empty() {
            let mut next = VertexSet::EMPTY;
            for v in frontier.iter() {
                next = next.union(self.neighbors(v).intersection(s));
            }
            frontier = next.minus(seen);
            seen = seen.union(next);
        }
        s.is_subset_of(seen)
    }

    /// Connected components of the induced subgraph on `s`.
    pub fn components_within(&self, s: VertexSet) -> Vec<VertexSet> {
        let mut rest = s;
        let mut out = Vec::new();
        while let Some(start) = rest.first() {
            let mut comp = VertexSet::singleton(start);
            let mut frontier = comp;
            while !frontier.is_empty() {
                let mut next = VertexSet::EMPTY;
                for v in frontier.iter() {
                    next = next.union(self.neighbors(v).intersection(rest));
                }
                frontier = next.minus(comp);
                comp = comp.union(next);
            }
            out.push(comp);
            rest = rest.minus(comp);
        }
        out
    }

    /// Does `s` induce a chordless cycle (of length >= 3)?
    pub fn is_induced_cycle(&self, s: VertexSet) -> bool {
        if s.len() < 3 {
            return false;
        }
        s.iter().all(|v| self.neighbors(v).intersection(s).len() == 2)
            && self.is_connected_within(s)
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.order, self.edges())
    }
}

/// All `k`-element subsets of `0..n` as masks, in ascending numeric order.
pub fn subsets_of_size(n: usize, k: usize) -> SubsetIter {
    debug_assert!(n <= MAX_ORDER);
    let limit = VertexSet::full(n).mask();
    let cur = if k > n {
        None
    } else if k == 0 {
        Some(0)
    } else {
        Some((1u64 << k) - 1)
    };
    SubsetIter { cur, limit }
}

pub struct SubsetIter {
    cur: Option<u64>,
    limit: u64,
}

impl Iterator for SubsetIter {
    type Item = u64;
    fn next(&mut self) -> Option<u64> {
        let m = self.cur?;
        if m > self.limit {
            self.cur = None;
            return None;
        }
        // Gosper's hack for the next mask with the same popcount.
        self.cur = if m == 0 {
            None
        } else {
            let c = m & m.wrapping_neg();
            let r = m.wrapping_add(c);
            if r == 0 {
                None
            } else {
                let shifted = (m ^ r).checked_shr(2 + c.trailing_zeros()).unwrap_or(0);
                Some(r | shifted)
            }
        };
        Some(m)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn builds_empty_graph() {
        let g = Graph::from_edges(0, &[]).unwrap();
        assert_eq!(g.order(), 0);
        assert_eq!(g.edge_count(), 0);
    }

    #[test]
    fn builds_c4() {
        let g = Graph::from_edges(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
        assert_eq!(g.edge_count(), 4);
        assert_eq!(g, Graph::cycle(4));
    }

    #[test]
    fn rejects_loops_and_bad_endpoints() {
        assert_eq!(
            Graph::from_edges(3, &[(0, 0)]),
            Err(GraphError::BadEdge(0, 0, 3))
        );
        assert_eq!(
            Graph::from_edges(3, &[(0, 3)]),
            Err(GraphError::BadEdge(0, 3, 3))
        );
        assert_eq!(Graph::empty(65), Err(GraphError::OrderTooLarge(65)));
    }

    #[test]
    fn induced_subgraph_of_cycle() {
        let c4 = Graph::cycle(4);
        let p3 = c4.induced_subgraph(VertexSet::from_iter([0, 1, 2]));
        assert_eq!(p3.order(), 3);
        assert_eq!(p3.edges(), vec![(0, 1), (1, 2)]);
        assert_eq!(c4.induced_subgraph(c4.vertices()), c4);
        // vertices 0 and 2 of C5 are nonadjacent
        let g = Graph::cycle(5).induced_subgraph(VertexSet::from_iter([0, 2]));
        assert_eq!(g.order(), 2);
        assert_eq!(g.edge_count(), 0);
    }

    #[test]
    fn complement_of_triangle_is_empty() {
        let g = Graph::complete(3).complement();
        assert_eq!(g.edge_count(), 0);
        assert_eq!(g.order(), 3);
    }

    #[test]
    fn complement_is_involution() {
        let g = Graph::cycle(6);
        assert_eq!(g.complement().complement(), g);
    }

    #[test]
    fn complement_of_c6_is_prism() {
        // two triangles {0,2,4} and {1,3,5} plus the matching (0,3),(1,4),(2,5)
        let prism = Graph::from_edges(
            6,
            &[
                (0, 2),
                (2, 4),
                (0, 4),
                (1, 3),
                (3, 5),
                (1, 5),
                (0, 3),
                (1, 4),
                (2, 5),
            ],
        )
        .unwrap();
        assert_eq!(Graph::cycle(6).complement(), prism);
    }

    #[test]
    fn connectivity_and_components() {
        let g = Graph::from_edges(5, &[(0, 1), (2, 3)]).unwrap();
        assert!(!g.is_connected_within(g.vertices()));
        assert_eq!(g.components_within(g.vertices()).len(), 3);
        assert!(g.is_connected_within(VertexSet::from_iter([0, 1])));
    }

    #[test]
    fn induced_cycle_detection() {
        let c5 = Graph::cycle(5);
        assert!(c5.is_induced_cycle(c5.vertices()));
        assert!(!c5.is_induced_cycle(VertexSet::from_iter([0, 1, 2])));
        assert!(!Graph::complete(4).is_induced_cycle(VertexSet::full(4)));
    }

    #[test]
    fn subset_iteration_counts() {
        assert_eq!(subsets_of_size(5, 2).count(), 10);
        assert_eq!(subsets_of_size(5, 0).count(), 1);
        assert_eq!(subsets_of_size(5, 5).count(), 1);
        assert_eq!(subsets_of_size(3, 4).count(), 0);
        assert_eq!(subsets_of_size(64, 1).count(), 64);
    }
}
