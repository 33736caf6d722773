//! Structure detectors: simplicial vertices, clique cutsets, odd holes,
//! long antiholes, claws, induced embeddings, and the combined forbidden
//! structure check used by the conjecture scanner.
//!
//! Searches enumerate vertex subsets in increasing size and ascending mask
//! order, so every returned witness is deterministic. Exactness at desk
//! scale is the goal, not asymptotics.

use crate::families::{make_family, FamilyKind, FamilySpec};
use crate::graph::{subsets_of_size, Graph, VertexSet};
use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

/// Vertices whose neighborhood is a clique; isolated and degree-1 vertices
/// qualify.
pub fn simplicial_vertices(g: &Graph) -> VertexSet {
    let mut out = VertexSet::EMPTY;
    for v in 0..g.order() {
        if g.is_clique(g.neighbors(v)) {
            out.insert(v);
        }
    }
    out
}

/// A clique whose removal disconnects the graph, with the split certificate.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CutsetWitness {
    pub clique: VertexSet,
    pub side_a: VertexSet,
    pub side_b: VertexSet,
}

impl CutsetWitness {
    /// Checks the defining properties against a host graph.
    pub fn is_valid_for(&self, g: &Graph) -> bool {
        let all = self.clique.union(self.side_a).union(self.side_b);
        all == g.vertices()
            && self.clique.len() + self.side_a.len() + self.side_b.len() == g.order()
            && !self.side_a.is_empty()
            && !self.side_b.is_empty()
            && g.is_clique(self.clique)
            && self
                .side_a
                .iter()
                .all(|v| !g.neighbors(v).intersects(self.side_b))
    }
}

/// First clique (in prefix enumeration order, the empty clique included)
/// whose removal leaves the graph disconnected. `side_a` is the component
/// of the smallest remaining vertex, `side_b` everything else.
pub fn find_clique_cutset(g: &Graph) -> Option<CutsetWitness> {
    fn check(g: &Graph, clique: VertexSet) -> Option<CutsetWitness> {
        let rest = g.vertices().minus(clique);
        if rest.len() < 2 {
            return None;
        }
        let comps = g.components_within(rest);
        if comps.len() < 2 {
            return None;
        }
        let side_a = comps[0];
        Some(CutsetWitness {
            clique,
            side_a,
            side_b: rest.minus(side_a),
        })
    }
    fn grow(g: &Graph, clique: VertexSet, candidates: VertexSet) -> Option<CutsetWitness> {
        if let Some(w) = check(g, clique) {
            return Some(w);
        }
        for v in candidates.iter() {
            let higher = VertexSet::from_mask(!((1u64 << v << 1).wrapping_sub(1)));
            if let Some(w) = grow(
                g,
                clique.with(v),
                candidates.intersection(g.neighbors(v)).intersection(higher),
            ) {
                return Some(w);
            }
        }
        None
    }
    grow(g, VertexSet::EMPTY, g.vertices())
}

/// Vertex set of some induced odd cycle of length at least five.
pub fn find_odd_hole(g: &Graph) -> Option<VertexSet> {
    let n = g.order();
    let mut size = 5;
    while size <= n {
        for mask in subsets_of_size(n, size) {
            let s = VertexSet::from_mask(mask);
            if g.is_induced_cycle(s) {
                return Some(s);
            }
        }
        size += 2;
    }
    None
}

/// Vertex set inducing the complement of a cycle of length at least six,
/// either parity.
pub fn find_long_antihole(g: &Graph) -> Option<VertexSet> {
    let n = g.order();
    let gc = g.complement();
    for size in 6..=n {
        for mask in subsets_of_size(n, size) {
            let s = VertexSet::from_mask(mask);
            if gc.is_induced_cycle(s) {
                return Some(s);
            }
        }
    }
    None
}

/// Four vertices inducing a claw (one center adjacent to three pairwise
/// nonadjacent leaves).
pub fn find_claw(g: &Graph) -> Option<VertexSet> {
    for v in 0..g.order() {
        let nv = g.neighbors(v).to_vec();
        for (i, &a) in nv.iter().enumerate() {
            for (j, &b) in nv.iter().enumerate().skip(i + 1) {
                if g.has_edge(a, b) {
                    continue;
                }
                for &c in nv.iter().skip(j + 1) {
                    if !g.has_edge(a, c) && !g.has_edge(b, c) {
                        return Some(VertexSet::from_iter([v, a, b, c]));
                    }
                }
            }
        }
    }
    None
}

/// An induced embedding of `pattern` into `host`: an injection preserving
/// both adjacency and non-adjacency.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EmbeddingWitness {
    /// `map[p]` is the host vertex carrying pattern vertex `p`.
    pub map: Vec<usize>,
}

impl EmbeddingWitness {
    pub fn image(&self) -> VertexSet {
        self.map.iter().copied().collect()
    }

    pub fn is_valid_for(&self, pattern: &Graph, host: &Graph) -> bool {
        if self.map.len() != pattern.order() || self.image().len() != self.map.len() {
            return false;
        }
        for u in 0..pattern.order() {
            for v in u + 1..pattern.order() {
                if pattern.has_edge(u, v) != host.has_edge(self.map[u], self.map[v]) {
                    return false;
                }
            }
        }
        true
    }
}

pub fn find_induced_embedding(pattern: &Graph, host: &Graph) -> Option<EmbeddingWitness> {
    if pattern.order() > host.order() {
        return None;
    }
    let mut map = Vec::with_capacity(pattern.order());
    let mut used = VertexSet::EMPTY;
    if embed(pattern, host, &mut map, &mut used) {
        Some(EmbeddingWitness { map })
    } else {
        None
    }
}

fn embed(pattern: &Graph, host: &Graph, map: &mut Vec<usize>, used: &mut VertexSet) -> bool {
    let p = map.len();
    if p == pattern.order() {
        return true;
    }
    'candidates: for h in 0..host.order() {
        if used.contains(h) {
            continue;
        }
        for (q, &hq) in map.iter().enumerate() {
            if pattern.has_edge(p, q) != host.has_edge(h, hq) {
                continue 'candidates;
            }
        }
        map.push(h);
        used.insert(h);
        if embed(pattern, host, map, used) {
            return true;
        }
        map.pop();
        used.remove(h);
    }
    false
}

/// What a forbidden-structure search found.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ForbiddenKind {
    OddHole,
    LongAntihole,
    Family(FamilyKind),
}

impl ForbiddenKind {
    pub fn tag(&self) -> &'static str {
        match self {
            ForbiddenKind::OddHole => "odd-hole",
            ForbiddenKind::LongAntihole => "antihole",
            ForbiddenKind::Family(f) => f.name(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Forbidden {
    pub kind: ForbiddenKind,
    pub vertices: VertexSet,
}

/// All instances of the six forbidden families with at most `max_order`
/// vertices, deduplicated up to isomorphism, ordered family by family and
/// then by (order, parameters). Cached per (max_order, include flag).
pub fn forbidden_catalog(max_order: usize, include_graph_vi: bool) -> Arc<Vec<(FamilyKind, Graph)>> {
    static CACHE: OnceLock<Mutex<HashMap<(usize, bool), Arc<Vec<(FamilyKind, Graph)>>>>> =
        OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    let mut guard = cache.lock().unwrap();
    if let Some(hit) = guard.get(&(max_order, include_graph_vi)) {
        return hit.clone();
    }
    let built = Arc::new(build_catalog(max_order, include_graph_vi));
    guard.insert((max_order, include_graph_vi), built.clone());
    built
}

fn build_catalog(max_order: usize, include_graph_vi: bool) -> Vec<(FamilyKind, Graph)> {
    let mut out = Vec::new();
    let mut push_family = |kind: FamilyKind, tuples: Vec<Vec<(&'static str, usize)>>| {
        let mut seen = Vec::new();
        let mut made: Vec<(usize, Vec<usize>, Graph)> = Vec::new();
        for params in tuples {
            let g = make_family(&FamilySpec::new(kind, &params)).unwrap();
            if g.order() > max_order {
                continue;
            }
            made.push((g.order(), params.iter().map(|&(_, v)| v).collect(), g));
        }
        made.sort_by(|a, b| (a.0, &a.1).cmp(&(b.0, &b.1)));
        for (_, _, g) in made {
            let key = crate::canon::canonical_key(&g);
            if !seen.contains(&key) {
                seen.push(key);
                out.push((kind, g));
            }
        }
    };

    let odd = |max: usize| (1..=max).step_by(2).collect::<Vec<_>>();
    let even = |min: usize, max: usize| {
        (min..=max.max(min)).step_by(2).collect::<Vec<_>>()
    };

    // GraphI: two triangles joined by three odd paths, 3 + a + b + c vertices
    let mut tuples = Vec::new();
    if max_order >= 6 {
        for a in odd(max_order.saturating_sub(5)) {
            for b in odd(max_order.saturating_sub(4 + a)) {
                for c in odd(max_order.saturating_sub(3 + a + b)) {
                    tuples.push(vec![("a", a), ("b", b), ("c", c)]);
                }
            }
        }
    }
    push_family(FamilyKind::GraphI, tuples);

    // GraphII: k + m + r + 1 vertices
    let mut tuples = Vec::new();
    if max_order >= 10 {
        for k in even(4, max_order - 6) {
            for m in even(4, max_order.saturating_sub(k + 2)) {
                for r in odd(max_order.saturating_sub(k + m + 1)) {
                    tuples.push(vec![("k", k), ("m", m), ("r", r)]);
                }
            }
        }
    }
    push_family(FamilyKind::GraphII, tuples);

    // GraphIII: k + m vertices
    let mut tuples = Vec::new();
    if max_order >= 8 {
        for k in even(4, max_order - 4) {
            for m in even(4, max_order - k) {
                tuples.push(vec![("k", k), ("m", m)]);
            }
        }
    }
    push_family(FamilyKind::GraphIII, tuples);

    // GraphIV: k + m + n - 3 vertices
    let mut tuples = Vec::new();
    if max_order >= 9 {
        for k in even(4, max_order) {
            for m in even(4, max_order) {
                for n in even(4, max_order) {
                    if k + m + n - 3 <= max_order {
                        tuples.push(vec![("k", k), ("m", m), ("n", n)]);
                    }
                }
            }
        }
    }
    push_family(FamilyKind::GraphIV, tuples);

    // GraphV (refined form only): k + m + r + 1 vertices
    let mut tuples = Vec::new();
    if max_order >= 10 {
        for k in even(4, max_order - 6) {
            for m in even(4, max_order.saturating_sub(k + 2)) {
                for r in odd(max_order.saturating_sub(k + m + 1)) {
                    tuples.push(vec![("k", k), ("m", m), ("r", r)]);
                }
            }
        }
    }
    push_family(FamilyKind::GraphV, tuples);

    if include_graph_vi {
        // GraphVI: k + m + n - 2 vertices
        let mut tuples = Vec::new();
        if max_order >= 10 {
            for k in even(4, max_order) {
                for m in even(4, max_order) {
                    for n in even(4, max_order) {
                        if k + m + n - 2 <= max_order {
                            tuples.push(vec![("k", k), ("m", m), ("n", n)]);
                        }
                    }
                }
            }
        }
        push_family(FamilyKind::GraphVI, tuples);
    }
    out
}

/// First forbidden structure in the fixed detection order: odd holes, then
/// long antiholes, then the families in numeric order. Graph VI is included
/// by default; [`contains_forbidden_with`] exposes the other reading.
pub fn contains_forbidden(g: &Graph) -> Option<Forbidden> {
    contains_forbidden_with(g, true)
}

pub fn contains_forbidden_with(g: &Graph, include_graph_vi: bool) -> Option<Forbidden> {
    if let Some(s) = find_odd_hole(g) {
        return Some(Forbidden {
            kind: ForbiddenKind::OddHole,
            vertices: s,
        });
    }
    if let Some(s) = find_long_antihole(g) {
        return Some(Forbidden {
            kind: ForbiddenKind::LongAntihole,
            vertices: s,
        });
    }
    let catalog = forbidden_catalog(g.order(), include_graph_vi);
    for (kind, pattern) in catalog.iter() {
        if let Some(w) = find_induced_embedding(pattern, g) {
            return Some(Forbidden {
                kind: ForbiddenKind::Family(*kind),
                vertices: w.image(),
            });
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::enumerate::enumerate_up_to;
    use crate::graph::subsets_of_size;

    #[test]
    fn simplicial_vertices_of_small_graphs() {
        assert_eq!(
            simplicial_vertices(&Graph::path(3)),
            VertexSet::from_iter([0, 2])
        );
        assert_eq!(simplicial_vertices(&Graph::cycle(4)), VertexSet::EMPTY);
        // a larva head sits on a triangle with its side pair, so it is
        // simplicial; the hole vertices are not
        let larva = make_family(&FamilySpec::new(FamilyKind::Larva, &[("k", 4)])).unwrap();
        assert_eq!(simplicial_vertices(&larva), VertexSet::singleton(4));
    }

    #[test]
    fn simplicial_matches_definitional_check() {
        for g in enumerate_up_to(7).unwrap() {
            let expect: VertexSet = (0..g.order())
                .filter(|&v| {
                    let nv = g.neighbors(v).to_vec();
                    nv.iter()
                        .enumerate()
                        .all(|(i, &a)| nv[i + 1..].iter().all(|&b| g.has_edge(a, b)))
                })
                .collect();
            assert_eq!(simplicial_vertices(&g), expect);
        }
    }

    #[test]
    fn cutset_of_a_path() {
        let w = find_clique_cutset(&Graph::path(3)).unwrap();
        assert_eq!(w.clique, VertexSet::singleton(1));
        assert_eq!(w.side_a, VertexSet::singleton(0));
        assert_eq!(w.side_b, VertexSet::singleton(2));
        assert!(w.is_valid_for(&Graph::path(3)));
    }

    #[test]
    fn c4_has_no_clique_cutset() {
        assert_eq!(find_clique_cutset(&Graph::cycle(4)), None);
    }

    #[test]
    fn joined_pupas_have_a_clique_cutset() {
        let g = make_family(&FamilySpec::new(
            FamilyKind::PupaPupa,
            &[("k", 4), ("t", 2), ("m", 4), ("l", 2), ("r", 1)],
        ))
        .unwrap();
        let w = find_clique_cutset(&g).unwrap();
        assert!(w.is_valid_for(&g));
    }

    #[test]
    fn cutset_existence_matches_brute_force() {
        for g in enumerate_up_to(7).unwrap() {
            let brute = (0..1u64 << g.order()).any(|mask| {
                let k = VertexSet::from_mask(mask);
                g.is_clique(k)
                    && g.components_within(g.vertices().minus(k)).len() >= 2
            });
            let found = find_clique_cutset(&g);
            assert_eq!(found.is_some(), brute, "{g:?}");
            if let Some(w) = found {
                assert!(w.is_valid_for(&g));
            }
        }
    }

    #[test]
    fn odd_holes() {
        assert_eq!(find_odd_hole(&Graph::cycle(5)), Some(VertexSet::full(5)));
        assert_eq!(find_odd_hole(&Graph::cycle(6)), None);
        // C7 plus the chord 0-4 splits into a C5 and a C4
        let mut g = Graph::cycle(7);
        g.add_edge(0, 4);
        assert_eq!(find_odd_hole(&g), Some(VertexSet::from_iter([0, 1, 2, 3, 4])));
    }

    #[test]
    fn long_antiholes() {
        let prism = Graph::cycle(6).complement();
        assert_eq!(find_long_antihole(&prism), Some(VertexSet::full(6)));
        assert_eq!(find_long_antihole(&Graph::cycle(6)), None);
        for n in 0..=5 {
            assert_eq!(find_long_antihole(&Graph::complete(n)), None);
        }
    }

    #[test]
    fn hole_detectors_match_brute_force() {
        for g in enumerate_up_to(6).unwrap() {
            let n = g.order();
            let brute_odd = (5..=n).step_by(2).any(|size| {
                subsets_of_size(n, size)
                    .any(|m| g.is_induced_cycle(VertexSet::from_mask(m)))
            });
            assert_eq!(find_odd_hole(&g).is_some(), brute_odd);
            let brute_anti = (6..=n).any(|size| {
                subsets_of_size(n, size).any(|m| {
                    let s = VertexSet::from_mask(m);
                    crate::canon::are_isomorphic(
                        &g.induced_subgraph(s),
                        &Graph::cycle(size).complement(),
                    )
                })
            });
            assert_eq!(find_long_antihole(&g).is_some(), brute_anti, "{g:?}");
        }
    }

    #[test]
    fn claws() {
        let star = Graph::from_edges(4, &[(0, 1), (0, 2), (0, 3)]).unwrap();
        assert_eq!(find_claw(&star), Some(VertexSet::full(4)));
        assert_eq!(find_claw(&Graph::cycle(6)), None);
        for g in enumerate_up_to(6).unwrap() {
            let brute = subsets_of_size(g.order(), 4).any(|m| {
                let h = g.induced_subgraph(VertexSet::from_mask(m));
                h.edge_count() == 3 && (0..4).any(|v| h.degree(v) == 3)
            });
            assert_eq!(find_claw(&g).is_some(), brute);
        }
    }

    #[test]
    fn induced_embeddings() {
        let c4 = Graph::cycle(4);
        let w = find_induced_embedding(&c4, &c4).unwrap();
        assert!(w.is_valid_for(&c4, &c4));
        assert_eq!(find_induced_embedding(&Graph::cycle(5), &Graph::cycle(6)), None);
        let prism = Graph::cycle(6).complement();
        let w = find_induced_embedding(&Graph::complete(3), &prism).unwrap();
        assert!(w.is_valid_for(&Graph::complete(3), &prism));
    }

    #[test]
    fn embeddings_match_brute_force_on_random_pairs() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(77);
        for _ in 0..60 {
            let np = rng.gen_range(1..=5);
            let nh = rng.gen_range(np..=7);
            let random = |rng: &mut rand_chacha::ChaCha8Rng, n: usize| {
                let mut edges = Vec::new();
                for u in 0..n {
                    for v in u + 1..n {
                        if rng.gen_bool(0.5) {
                            edges.push((u, v));
                        }
                    }
                }
                Graph::from_edges(n, &edges).unwrap()
            };
            let pattern = random(&mut rng, np);
            let host = random(&mut rng, nh);
            let brute = subsets_of_size(nh, np).any(|m| {
                crate::canon::are_isomorphic(
                    &host.induced_subgraph(VertexSet::from_mask(m)),
                    &pattern,
                )
            });
            let found = find_induced_embedding(&pattern, &host);
            assert_eq!(found.is_some(), brute);
            if let Some(w) = found {
                assert!(w.is_valid_for(&pattern, &host));
            }
        }
    }

    #[test]
    fn forbidden_priorities() {
        let c5 = Graph::cycle(5);
        assert_eq!(
            contains_forbidden(&c5).unwrap().kind,
            ForbiddenKind::OddHole
        );
        // the prism is both an antihole and the smallest GraphI instance;
        // the antihole check runs first
        let prism = Graph::cycle(6).complement();
        assert_eq!(
            contains_forbidden(&prism).unwrap().kind,
            ForbiddenKind::LongAntihole
        );
        assert_eq!(contains_forbidden(&Graph::cycle(6)), None);
        let g3 = make_family(&FamilySpec::new(FamilyKind::GraphIII, &[("k", 4), ("m", 4)]))
            .unwrap();
        assert_eq!(
            contains_forbidden(&g3).unwrap().kind,
            ForbiddenKind::Family(FamilyKind::GraphIII)
        );
    }

    #[test]
    fn forbidden_freeness_is_hereditary() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(123);
        let mut checked = 0;
        while checked < 40 {
            let n = rng.gen_range(4..=9);
            let mut edges = Vec::new();
            for u in 0..n {
                for v in u + 1..n {
                    if rng.gen_bool(0.4) {
                        edges.push((u, v));
                    }
                }
            }
            let g = Graph::from_edges(n, &edges).unwrap();
            if contains_forbidden(&g).is_none() {
                checked += 1;
                for v in 0..n {
                    assert_eq!(contains_forbidden(&g.delete_vertex(v)), None);
                }
            }
        }
    }

    #[test]
    fn catalog_is_deduplicated() {
        let catalog = forbidden_catalog(10, true);
        for (i, (_, a)) in catalog.iter().enumerate() {
            for (_, b) in catalog.iter().skip(i + 1) {
                assert!(!crate::canon::are_isomorphic(a, b));
            }
        }
        let without = forbidden_catalog(10, false);
        assert!(without.len() < catalog.len());
    }
}
