//! Maximal clique enumeration and exact strong-stable-set search.
//!
//! A strong stable set (SSS) is a stable set meeting every nonempty maximal
//! clique. The search branches on the uncovered clique with the fewest
//! admissible vertices, trying vertices in ascending index, so returned
//! witnesses are deterministic.

use crate::graph::{Graph, VertexSet};
use std::time::Instant;
use thiserror::Error;

/// The maximal cliques of a graph, each exactly once, sorted by mask.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CliqueList {
    pub cliques: Vec<VertexSet>,
}

impl CliqueList {
    pub fn len(&self) -> usize {
        self.cliques.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cliques.is_empty()
    }
}

/// Bron-Kerbosch with pivoting. The empty graph yields an empty list, so
/// every listed clique is nonempty.
pub fn maximal_cliques(g: &Graph) -> CliqueList {
    let mut cliques = Vec::new();
    if g.order() > 0 {
        extend(
            g,
            VertexSet::EMPTY,
            g.vertices(),
            VertexSet::EMPTY,
            &mut cliques,
        );
        cliques.sort();
    }
    CliqueList { cliques }
}

fn extend(g: &Graph, r: VertexSet, mut p: VertexSet, mut x: VertexSet, out: &mut Vec<VertexSet>) {
    if p.is_empty() && x.is_empty() {
        out.push(r);
        return;
    }
    // pivot on the vertex covering most of p
    let pivot = p
        .union(x)
        .iter()
        .max_by_key(|&u| p.intersection(g.neighbors(u)).len())
        .unwrap();
    for v in p.minus(g.neighbors(pivot)).iter() {
        let nv = g.neighbors(v);
        extend(
            g,
            r.with(v),
            p.intersection(nv),
            x.intersection(nv),
            out,
        );
        p.remove(v);
        x.insert(v);
    }
}

/// Side conditions for an SSS search: vertices that must be in the set and
/// vertices that must stay out. A query whose `require_in` is not stable or
/// overlaps `forbid` is unsatisfiable and yields `None`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct SssQuery {
    pub require_in: VertexSet,
    pub forbid: VertexSet,
}

impl SssQuery {
    pub const UNCONSTRAINED: SssQuery = SssQuery {
        require_in: VertexSet::EMPTY,
        forbid: VertexSet::EMPTY,
    };

    pub fn requiring(v: usize) -> Self {
        SssQuery {
            require_in: VertexSet::singleton(v),
            forbid: VertexSet::EMPTY,
        }
    }

    pub fn forbidding(v: usize) -> Self {
        SssQuery {
            require_in: VertexSet::EMPTY,
            forbid: VertexSet::singleton(v),
        }
    }
}

/// Node and wall-clock budget for the backtracking search.
#[derive(Debug)]
pub struct SearchBudget {
    nodes_left: u64,
    nodes_used: u64,
    deadline: Option<Instant>,
}

#[derive(Debug, Error, PartialEq, Eq)]
#[error("search budget exhausted")]
pub struct BudgetExceeded;

impl SearchBudget {
    pub fn unlimited() -> Self {
        SearchBudget {
            nodes_left: u64::MAX,
            nodes_used: 0,
            deadline: None,
        }
    }

    pub fn new(node_limit: u64, deadline: Option<Instant>) -> Self {
        SearchBudget {
            nodes_left: node_limit,
            nodes_used: 0,
            deadline,
        }
    }

    pub fn nodes_used(&self) -> u64 {
        self.nodes_used
    }

    fn tick(&mut self) -> Result<(), BudgetExceeded> {
        if self.nodes_left == 0 {
            return Err(BudgetExceeded);
        }
        self.nodes_left -= 1;
        self.nodes_used += 1;
        if self.nodes_used % 4096 == 0 {
            if let Some(d) = self.deadline {
                if Instant::now() >= d {
                    return Err(BudgetExceeded);
                }
            }
        }
        Ok(())
    }
}

/// Finds a stable set containing `require_in`, avoiding `forbid`, and
/// meeting every nonempty maximal clique; `None` means no such set exists.
/// The empty graph yields the empty set.
pub fn find_sss(g: &Graph, q: &SssQuery) -> Option<VertexSet> {
    find_sss_budgeted(g, q, &mut SearchBudget::unlimited()).unwrap()
}

pub fn find_sss_budgeted(
    g: &Graph,
    q: &SssQuery,
    budget: &mut SearchBudget,
) -> Result<Option<VertexSet>, BudgetExceeded> {
    if !q.require_in.is_subset_of(g.vertices())
        || q.require_in.intersects(q.forbid)
        || !g.is_stable_set(q.require_in)
    {
        return Ok(None);
    }
    let cliques = maximal_cliques(g);
    let mut banned = q.forbid;
    for v in q.require_in.iter() {
        banned = banned.union(g.neighbors(v));
    }
    let found = search(g, &cliques.cliques, q.require_in, banned, budget)?;
    if let Some(s) = found {
        debug_assert!(g.is_stable_set(s));
        assert!(
            cliques.cliques.iter().all(|c| c.intersects(s)),
            "witness failed the clique coverage recheck"
        );
        assert!(g.is_stable_set(s) && q.require_in.is_subset_of(s) && !s.intersects(q.forbid));
    }
    Ok(found)
}

fn search(
    g: &Graph,
    cliques: &[VertexSet],
    chosen: VertexSet,
    banned: VertexSet,
    budget: &mut SearchBudget,
) -> Result<Option<VertexSet>, BudgetExceeded> {
    budget.tick()?;
    // uncovered clique with the smallest admissible domain
    let mut pick: Option<VertexSet> = None;
    let mut pick_size = usize::MAX;
    for &c in cliques {
        if c.intersects(chosen) {
            continue;
        }
        let adm = c.minus(banned);
        let size = adm.len();
        if size == 0 {
            return Ok(None);
        }
        if size < pick_size {
            pick_size = size;
            pick = Some(adm);
            if size == 1 {
                break;
            }
        }
    }
    let Some(domain) = pick else {
        return Ok(Some(chosen));
    };
    let mut banned = banned;
    for v in domain.iter() {
        if let Some(s) = search(
            g,
            cliques,
            chosen.with(v),
            banned.union(g.neighbors(v)).with(v),
            budget,
        )? {
            return Ok(Some(s));
        }
        // later branches must not reuse v, or the split would overlap
        banned.insert(v);
    }
    Ok(None)
}

pub fn has_sss(g: &Graph) -> bool {
    find_sss(g, &SssQuery::UNCONSTRAINED).is_some()
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum StatusError {
    #[error("the graph has no strong stable set, vertex status is undefined")]
    NoSssInGraph,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum StatusKind {
    /// In every strong stable set.
    Wanted,
    /// In no strong stable set.
    Unwanted,
    Free,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct VertexStatus {
    pub status: StatusKind,
    pub desirable: bool,
    pub undesirable: bool,
}

/// Classifies `v` against the strong stable sets of `g`. Needs two SSS
/// queries: wanted means no set avoids `v`, unwanted means no set contains
/// it. The desirable (resp. undesirable) flag additionally requires that `v`
/// is not forced in any one-vertex-deleted subgraph; a deletion without any
/// strong stable set counts as forcing, which can only occur outside the
/// strongly perfect setting the classification is meant for.
pub fn vertex_status(g: &Graph, v: usize) -> Result<VertexStatus, StatusError> {
    assert!(v < g.order());
    if !has_sss(g) {
        return Err(StatusError::NoSssInGraph);
    }
    let wanted = find_sss(g, &SssQuery::forbidding(v)).is_none();
    let unwanted = find_sss(g, &SssQuery::requiring(v)).is_none();
    let status = match (wanted, unwanted) {
        (true, false) => StatusKind::Wanted,
        (false, true) => StatusKind::Unwanted,
        (false, false) => StatusKind::Free,
        (true, true) => unreachable!("graph with an SSS cannot force both ways"),
    };
    let mut desirable = wanted;
    let mut undesirable = unwanted;
    if wanted || unwanted {
        for u in 0..g.order() {
            if u == v {
                continue;
            }
            let h = g.delete_vertex(u);
            let vi = if u < v { v - 1 } else { v };
            let forced = find_sss(&h, &SssQuery::forbidding(vi)).is_none()
                || find_sss(&h, &SssQuery::requiring(vi)).is_none();
            if forced {
                desirable = false;
                undesirable = false;
                break;
            }
        }
    }
    Ok(VertexStatus {
        status,
        desirable: desirable && wanted,
        undesirable: undesirable && unwanted,
    })
}
