//! Canonical forms for isomorphism testing and memo keys.
//!
//! The labeling is computed by iterative neighborhood refinement to an
//! ordered partition, then backtracking over every labeling consistent with
//! the partition (individualize one vertex of the first non-singleton cell,
//! re-refine, recurse), keeping the lexicographically least adjacency
//! matrix. Exactness over speed: keys are equal precisely for isomorphic
//! graphs.

use crate::graph::{Graph, VertexSet, MAX_ORDER};
use crate::graph6::write_graph6;
use std::collections::BTreeMap;

/// Isomorphism-invariant fingerprint of a graph.
///
/// For order <= 62 the bytes are the graph6 record of the canonically
/// relabeled graph; orders 63 and 64 fall back to a tagged raw dump of the
/// canonical adjacency rows.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct CanonicalKey(Vec<u8>);

impl CanonicalKey {
    pub fn as_bytes(&self) -> &[u8] {
        &self.0
    }

    /// The key as text when it is a plain graph6 record (order <= 62).
    pub fn as_graph6(&self) -> Option<&str> {
        if self.0.first() == Some(&0xff) {
            None
        } else {
            std::str::from_utf8(&self.0).ok()
        }
    }
}

pub fn canonical_key(g: &Graph) -> CanonicalKey {
    let canon = canonical_form(g);
    if canon.order() <= 62 {
        CanonicalKey(write_graph6(&canon).unwrap().into_bytes())
    } else {
        let mut bytes = vec![0xff, canon.order() as u8];
        for v in 0..canon.order() {
            bytes.extend_from_slice(&canon.neighbor_mask(v).to_be_bytes());
        }
        CanonicalKey(bytes)
    }
}

pub fn are_isomorphic(a: &Graph, b: &Graph) -> bool {
    a.order() == b.order()
        && a.edge_count() == b.edge_count()
        && canonical_key(a) == canonical_key(b)
}

/// The canonically relabeled copy of `g`.
pub fn canonical_form(g: &Graph) -> Graph {
    let n = g.order();
    if n <= 1 {
        return g.clone();
    }
    let mut cells = vec![(0..n).collect::<Vec<usize>>()];
    refine(g, &mut cells);
    let mut best: Option<Candidate> = None;
    search(g, cells, &mut best);
    let perm = best.unwrap().old_of_new;
    apply_labeling(g, &perm)
}

struct Candidate {
    rows: Vec<u64>,
    old_of_new: Vec<usize>,
}

/// Splits cells by the multiset of neighbor counts into every current cell
/// until the partition is stable. Cell order depends only on the counts, so
/// it is isomorphism-invariant.
fn refine(g: &Graph, cells: &mut Vec<Vec<usize>>) {
    loop {
        let masks: Vec<u64> = cells
            .iter()
            .map(|c| c.iter().fold(0u64, |m, &v| m | 1 << v))
            .collect();
        let mut next: Vec<Vec<usize>> = Vec::with_capacity(cells.len());
        let mut split = false;
        for cell in cells.iter() {
            if cell.len() == 1 {
                next.push(cell.clone());
                continue;
            }
            let mut groups: BTreeMap<Vec<u32>, Vec<usize>> = BTreeMap::new();
            for &v in cell {
                let sig: Vec<u32> = masks
                    .iter()
                    .map(|&m| (g.neighbor_mask(v) & m).count_ones())
                    .collect();
                groups.entry(sig).or_default().push(v);
            }
            if groups.len() > 1 {
                split = true;
            }
            next.extend(groups.into_values());
        }
        *cells = next;
        if !split {
            return;
        }
    }
}

fn search(g: &Graph, cells: Vec<Vec<usize>>, best: &mut Option<Candidate>) {
    if let Some(i) = cells.iter().position(|c| c.len() > 1) {
        for &v in &cells[i] {
            let mut branch = cells.clone();
            let rest: Vec<usize> = branch[i].iter().copied().filter(|&u| u != v).collect();
            branch[i] = vec![v];
            branch.insert(i + 1, rest);
            refine(g, &mut branch);
            search(g, branch, best);
        }
        return;
    }
    // discrete partition: one consistent labeling
    let old_of_new: Vec<usize> = cells.iter().map(|c| c[0]).collect();
    let n = old_of_new.len();
    let mut new_of_old = [0usize; MAX_ORDER];
    for (new, &old) in old_of_new.iter().enumerate() {
        new_of_old[old] = new;
    }
    let mut rows = Vec::with_capacity(n);
    for &old in &old_of_new {
        let mut row = 0u64;
        for w in VertexSet::from_mask(g.neighbor_mask(old)).iter() {
            row |= 1 << new_of_old[w];
        }
        rows.push(row);
        // early exit once this labeling is already worse
        if let Some(b) = best.as_ref() {
            let k = rows.len() - 1;
            match rows[k].cmp(&b.rows[k]) {
                std::cmp::Ordering::Greater => return,
                std::cmp::Ordering::Less => break,
                std::cmp::Ordering::Equal => {}
            }
        }
    }
    while rows.len() < n {
        let old = old_of_new[rows.len()];
        let mut row = 0u64;
        for w in VertexSet::from_mask(g.neighbor_mask(old)).iter() {
            row |= 1 << new_of_old[w];
        }
        rows.push(row);
    }
    let better = match best.as_ref() {
        None => true,
        Some(b) => rows < b.rows,
    };
    if better {
        *best = Some(Candidate { rows, old_of_new });
    }
}

fn apply_labeling(g: &Graph, old_of_new: &[usize]) -> Graph {
    let n = g.order();
    let mut new_of_old = [0usize; MAX_ORDER];
    for (new, &old) in old_of_new.iter().enumerate() {
        new_of_old[old] = new;
    }
    let mut edges = Vec::with_capacity(g.edge_count());
    for (u, v) in g.edges() {
        edges.push((new_of_old[u], new_of_old[v]));
    }
    Graph::from_edges(n, &edges).unwrap()
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::seq::SliceRandom;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn relabel(g: &Graph, perm: &[usize]) -> Graph {
        let edges: Vec<(usize, usize)> =
            g.edges().iter().map(|&(u, v)| (perm[u], perm[v])).collect();
        Graph::from_edges(g.order(), &edges).unwrap()
    }

    #[test]
    fn relabeled_c4_keys_match() {
        let a = Graph::cycle(4);
        let b = Graph::from_edges(4, &[(0, 2), (2, 1), (1, 3), (3, 0)]).unwrap();
        assert_eq!(canonical_key(&a), canonical_key(&b));
    }

    #[test]
    fn c6_and_prism_differ() {
        let prism = Graph::cycle(6).complement();
        assert_ne!(canonical_key(&Graph::cycle(6)), canonical_key(&prism));
    }

    #[test]
    fn random_relabelings_are_invariant() {
        let mut rng = ChaCha8Rng::seed_from_u64(0x5350_47);
        let n = 9;
        let mut edges = Vec::new();
        for u in 0..n {
            for v in u + 1..n {
                if rng.gen_bool(0.4) {
                    edges.push((u, v));
                }
            }
        }
        let g = Graph::from_edges(n, &edges).unwrap();
        let key = canonical_key(&g);
        let mut perm: Vec<usize> = (0..n).collect();
        for _ in 0..100 {
            perm.shuffle(&mut rng);
            assert_eq!(canonical_key(&relabel(&g, &perm)), key);
        }
    }

    /// Brute-force canonical form: minimum adjacency rows over all n!
    /// permutations. Shares nothing with the refinement search.
    fn brute_key(g: &Graph) -> Vec<u64> {
        fn perms(n: usize) -> Vec<Vec<usize>> {
            if n == 0 {
                return vec![vec![]];
            }
            let mut out = Vec::new();
            for p in perms(n - 1) {
                for slot in 0..=p.len() {
                    let mut q = p.clone();
                    q.insert(slot, n - 1);
                    out.push(q);
                }
            }
            out
        }
        let n = g.order();
        let mut best: Option<Vec<u64>> = None;
        for p in perms(n) {
            let h = relabel(g, &p);
            let rows: Vec<u64> = (0..n).map(|v| h.neighbor_mask(v)).collect();
            if best.as_ref().is_none_or(|b| rows < *b) {
                best = Some(rows);
            }
        }
        best.unwrap_or_default()
    }

    #[test]
    fn agrees_with_brute_force_classes_up_to_order_5() {
        use std::collections::HashMap;
        for n in 0..=5usize {
            let pairs: Vec<(usize, usize)> = (0..n)
                .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
                .collect();
            let mut by_brute: HashMap<Vec<u64>, CanonicalKey> = HashMap::new();
            for mask in 0u32..1 << pairs.len() {
                let edges: Vec<(usize, usize)> = pairs
                    .iter()
                    .enumerate()
                    .filter(|(i, _)| mask >> i & 1 == 1)
                    .map(|(_, &e)| e)
                    .collect();
                let g = Graph::from_edges(n, &edges).unwrap();
                let key = canonical_key(&g);
                match by_brute.entry(brute_key(&g)) {
                    std::collections::hash_map::Entry::Occupied(e) => {
                        assert_eq!(e.get(), &key);
                    }
                    std::collections::hash_map::Entry::Vacant(e) => {
                        // distinct brute classes must get distinct keys
                        e.insert(key);
                    }
                }
            }
            let keys: std::collections::HashSet<_> = by_brute.values().collect();
            assert_eq!(keys.len(), by_brute.len());
        }
    }
}
