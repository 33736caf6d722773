//! Parametric generators for the graph families under study and the three
//! structural operators: evolution (even subdivision of a larva side edge
//! with completion of the opposite side vertex), mutation (adding even
//! chord fans around an even hole under the chain rule), and head joining.
//!
//! Labeling convention, used by every generator: hole vertices first in
//! cyclic order, then auxiliary paths in a fixed documented order, the head
//! (when there is one) last. Tests compare constructions by canonical key,
//! so the convention only needs to be deterministic.

use crate::graph::{Graph, GraphError, VertexSet};
use std::collections::BTreeMap;
use std::fmt;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum FamilyError {
    #[error("parameter {param}={value} violates a parity rule: {rule}")]
    ParityViolation {
        param: &'static str,
        value: usize,
        rule: &'static str,
    },
    #[error("parameter {param}={value} is below the minimum {min}")]
    SizeViolation {
        param: &'static str,
        value: usize,
        min: usize,
    },
    #[error("missing parameter {0}")]
    MissingParam(&'static str),
    #[error("unknown parameter {0}")]
    UnknownParam(String),
    #[error("unknown family {0}")]
    UnknownFamily(String),
    #[error("invalid larva occurrence: {0}")]
    InvalidOccurrence(String),
    #[error("subdivision count {0} must be even and at least 2")]
    OddSubdivisionCount(usize),
    #[error("mutation step would add {0} chords, which must be even and positive")]
    OddChordCount(usize),
    #[error("mutation chain violation: {0}")]
    ChainViolation(String),
    #[error("unsupported composition: {0}")]
    UnsupportedComposition(String),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// The graph families the toolkit can generate.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum FamilyKind {
    /// The even cycle C_k. Identical to A1.
    EvenHole,
    /// Even hole plus a head adjacent to two consecutive hole vertices.
    Larva,
    /// Larva with one side edge evenly subdivided and the opposite side
    /// vertex completed to the new path.
    Pupa,
    /// Head complete to an odd middle path and to the far endpoints of two
    /// even side paths.
    Butterfly,
    A1,
    A2,
    A3,
    A4,
    A5,
    A6,
    /// Two triangles joined corner to corner by three odd paths.
    GraphI,
    /// Two larvas with their heads joined by an odd path.
    GraphII,
    /// Two even holes with a complete K4 between an edge of each.
    GraphIII,
    /// Three even holes, each sharing one edge of a central triangle.
    GraphIV,
    /// GraphII plus one edge between hole neighbors of the two heads.
    GraphV,
    /// The wide form of GraphV with both connecting paths of free length.
    GraphVGeneral,
    /// Three even holes sharing two vertices, with two extra central chords.
    GraphVI,
    PupaPupa,
    ButterflyButterfly,
    PupaButterfly,
    /// GraphIII with the shared corner edge evolved from both sides.
    EvolvedGraphIII,
    /// GraphV with both larvas evolved into pupas.
    EvolvedGraphV,
    /// GraphVI with both central chords evolved away.
    EvolvedGraphVI,
    /// GraphIV with one two-chord mutation on each hole, rotationally.
    MutatedGraphIVA,
    /// GraphIV with mutations on the bottom and right holes sharing a corner.
    MutatedGraphIVB,
    MutatedPupa,
    MutatedButterfly,
}

impl FamilyKind {
    pub const ALL: [FamilyKind; 27] = [
        FamilyKind::EvenHole,
        FamilyKind::Larva,
        FamilyKind::Pupa,
        FamilyKind::Butterfly,
        FamilyKind::A1,
        FamilyKind::A2,
        FamilyKind::A3,
        FamilyKind::A4,
        FamilyKind::A5,
        FamilyKind::A6,
        FamilyKind::GraphI,
        FamilyKind::GraphII,
        FamilyKind::GraphIII,
        FamilyKind::GraphIV,
        FamilyKind::GraphV,
        FamilyKind::GraphVGeneral,
        FamilyKind::GraphVI,
        FamilyKind::PupaPupa,
        FamilyKind::ButterflyButterfly,
        FamilyKind::PupaButterfly,
        FamilyKind::EvolvedGraphIII,
        FamilyKind::EvolvedGraphV,
        FamilyKind::EvolvedGraphVI,
        FamilyKind::MutatedGraphIVA,
        FamilyKind::MutatedGraphIVB,
        FamilyKind::MutatedPupa,
        FamilyKind::MutatedButterfly,
    ];

    pub fn name(self) -> &'static str {
        match self {
            FamilyKind::EvenHole => "even-hole",
            FamilyKind::Larva => "larva",
            FamilyKind::Pupa => "pupa",
            FamilyKind::Butterfly => "butterfly",
            FamilyKind::A1 => "a1",
            FamilyKind::A2 => "a2",
            FamilyKind::A3 => "a3",
            FamilyKind::A4 => "a4",
            FamilyKind::A5 => "a5",
            FamilyKind::A6 => "a6",
            FamilyKind::GraphI => "graph1",
            FamilyKind::GraphII => "graph2",
            FamilyKind::GraphIII => "graph3",
            FamilyKind::GraphIV => "graph4",
            FamilyKind::GraphV => "graph5",
            FamilyKind::GraphVGeneral => "graph5-general",
            FamilyKind::GraphVI => "graph6",
            FamilyKind::PupaPupa => "pupa-pupa",
            FamilyKind::ButterflyButterfly => "butterfly-butterfly",
            FamilyKind::PupaButterfly => "pupa-butterfly",
            FamilyKind::EvolvedGraphIII => "graph3-evolved",
            FamilyKind::EvolvedGraphV => "graph5-evolved",
            FamilyKind::EvolvedGraphVI => "graph6-evolved",
            FamilyKind::MutatedGraphIVA => "graph4-mutated-a",
            FamilyKind::MutatedGraphIVB => "graph4-mutated-b",
            FamilyKind::MutatedPupa => "mutated-pupa",
            FamilyKind::MutatedButterfly => "mutated-butterfly",
        }
    }

    /// Names of the parameters the family expects, in canonical order.
    pub fn param_names(self) -> &'static [&'static str] {
        match self {
            FamilyKind::EvenHole | FamilyKind::Larva | FamilyKind::A1 => &["k"],
            FamilyKind::Pupa | FamilyKind::MutatedPupa => &["k", "t"],
            FamilyKind::Butterfly | FamilyKind::MutatedButterfly => &["p1", "p2", "p3"],
            FamilyKind::A2 | FamilyKind::A3 | FamilyKind::A4 | FamilyKind::GraphIII => &["k", "m"],
            FamilyKind::A5 | FamilyKind::GraphIV | FamilyKind::GraphVI => &["k", "m", "n"],
            FamilyKind::MutatedGraphIVA | FamilyKind::MutatedGraphIVB => &["k", "m", "n"],
            FamilyKind::A6 | FamilyKind::EvolvedGraphIII => &["k", "m", "t"],
            FamilyKind::GraphI => &["a", "b", "c"],
            FamilyKind::GraphII | FamilyKind::GraphV => &["k", "m", "r"],
            FamilyKind::GraphVGeneral => &["k", "m", "p1", "p2"],
            FamilyKind::PupaPupa | FamilyKind::EvolvedGraphV => &["k", "t", "m", "l", "r"],
            FamilyKind::ButterflyButterfly => &["p1", "p2", "p3", "q1", "q2", "q3", "r"],
            FamilyKind::PupaButterfly => &["k", "t", "p1", "p2", "p3", "r"],
            FamilyKind::EvolvedGraphVI => &["k", "m", "n", "t", "l"],
        }
    }
}

impl std::str::FromStr for FamilyKind {
    type Err = FamilyError;
    fn from_str(s: &str) -> Result<Self, FamilyError> {
        FamilyKind::ALL
            .iter()
            .copied()
            .find(|k| k.name() == s)
            .ok_or_else(|| FamilyError::UnknownFamily(s.to_string()))
    }
}

impl fmt::Display for FamilyKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// A family tag plus named integer parameters (hole lengths, path lengths,
/// subdivision counts).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FamilySpec {
    pub kind: FamilyKind,
    pub params: BTreeMap<String, usize>,
}

impl FamilySpec {
    pub fn new(kind: FamilyKind, params: &[(&str, usize)]) -> FamilySpec {
        FamilySpec {
            kind,
            params: params
                .iter()
                .map(|&(k, v)| (k.to_string(), v))
                .collect(),
        }
    }

    fn get(&self, name: &'static str) -> Result<usize, FamilyError> {
        self.params
            .get(name)
            .copied()
            .ok_or(FamilyError::MissingParam(name))
    }
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}(", self.kind)?;
        for (i, name) in self.kind.param_names().iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            match self.params.get(*name) {
                Some(v) => write!(f, "{name}={v}")?,
                None => write!(f, "{name}=?")?,
            }
        }
        write!(f, ")")
    }
}

fn even_at_least(param: &'static str, value: usize, min: usize) -> Result<(), FamilyError> {
    if value < min {
        return Err(FamilyError::SizeViolation {
            param,
            value,
            min,
        });
    }
    if value % 2 != 0 {
        return Err(FamilyError::ParityViolation {
            param,
            value,
            rule: "must be even",
        });
    }
    Ok(())
}

fn odd_at_least(param: &'static str, value: usize, min: usize) -> Result<(), FamilyError> {
    if value < min {
        return Err(FamilyError::SizeViolation {
            param,
            value,
            min,
        });
    }
    if value % 2 != 1 {
        return Err(FamilyError::ParityViolation {
            param,
            value,
            rule: "must be odd",
        });
    }
    Ok(())
}

/// Builds the graph described by `spec`, with the documented deterministic
/// labeling. Rejects parameter tuples breaking a parity or size rule.
pub fn make_family(spec: &FamilySpec) -> Result<Graph, FamilyError> {
    for name in spec.params.keys() {
        if !spec.kind.param_names().contains(&name.as_str()) {
            return Err(FamilyError::UnknownParam(name.clone()));
        }
    }
    match spec.kind {
        FamilyKind::EvenHole | FamilyKind::A1 => {
            let k = spec.get("k")?;
            even_at_least("k", k, 4)?;
            Ok(Graph::cycle(k))
        }
        FamilyKind::Larva => {
            let k = spec.get("k")?;
            even_at_least("k", k, 4)?;
            Ok(larva(k))
        }
        FamilyKind::Pupa => {
            let (k, t) = (spec.get("k")?, spec.get("t")?);
            even_at_least("k", k, 4)?;
            even_at_least("t", t, 2)?;
            Ok(pupa(k, t))
        }
        FamilyKind::Butterfly => {
            let (p1, p2, p3) = (spec.get("p1")?, spec.get("p2")?, spec.get("p3")?);
            even_at_least("p1", p1, 2)?;
            odd_at_least("p2", p2, 1)?;
            even_at_least("p3", p3, 2)?;
            Ok(butterfly(p1, p2, p3))
        }
        FamilyKind::A2 | FamilyKind::A3 | FamilyKind::GraphIII => {
            let (k, m) = (spec.get("k")?, spec.get("m")?);
            even_at_least("k", k, 4)?;
            even_at_least("m", m, 4)?;
            let join: &[(usize, usize)] = match spec.kind {
                // labels: c1=0, c2=1, d1=k, d2=k+1
                FamilyKind::A2 => &[(0, 1), (1, 0), (1, 1)],
                FamilyKind::A3 => &[(1, 0)],
                _ => &[(0, 0), (0, 1), (1, 0), (1, 1)],
            };
            let mut g = two_holes(k, m)?;
            for &(c, d) in join {
                g.add_edge(c, k + d);
            }
            Ok(g)
        }
        FamilyKind::A4 => {
            let (k, m) = (spec.get("k")?, spec.get("m")?);
            even_at_least("k", k, 4)?;
            even_at_least("m", m, 4)?;
            // second hole reuses vertex 1 (c2 = d2); fresh d1 = k, d3.. = k+1..
            let mut g = Graph::empty(k + m - 1)?;
            add_cycle(&mut g, &seq(0, k));
            let mut d = vec![k, 1];
            d.extend(k + 1..k + m - 1);
            add_cycle(&mut g, &d);
            Ok(g)
        }
        FamilyKind::A5 => {
            let (k, m, n) = (spec.get("k")?, spec.get("m")?, spec.get("n")?);
            even_at_least("k", k, 4)?;
            even_at_least("m", m, 4)?;
            even_at_least("n", n, 4)?;
            Ok(three_holes_shared(k, m, n)?)
        }
        FamilyKind::A6 => {
            let (k, m, t) = (spec.get("k")?, spec.get("m")?, spec.get("t")?);
            even_at_least("k", k, 4)?;
            even_at_least("m", m, 4)?;
            even_at_least("t", t, 2)?;
            let mut g = Graph::empty(k + m + t)?;
            add_cycle(&mut g, &seq(0, k));
            add_cycle(&mut g, &seq(k, m));
            g.add_edge(1, k); // c2 d1
            let mut path = vec![0];
            path.extend(seq(k + m, t));
            path.push(k);
            add_path(&mut g, &path);
            for p in seq(k + m, t) {
                g.add_edge(1, p); // c2 complete to the new path
            }
            Ok(g)
        }
        FamilyKind::GraphI => {
            let (a, b, c) = (spec.get("a")?, spec.get("b")?, spec.get("c")?);
            odd_at_least("a", a, 1)?;
            odd_at_least("b", b, 1)?;
            odd_at_least("c", c, 1)?;
            let mut g = Graph::empty(3 + a + b + c)?;
            for (u, v) in [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)] {
                g.add_edge(u, v);
            }
            let mut next = 6;
            for (i, len) in [a, b, c].into_iter().enumerate() {
                let mut path = vec![i];
                path.extend(seq(next, len - 1));
                path.push(3 + i);
                add_path(&mut g, &path);
                next += len - 1;
            }
            Ok(g)
        }
        FamilyKind::GraphII | FamilyKind::GraphV => {
            let (k, m, r) = (spec.get("k")?, spec.get("m")?, spec.get("r")?);
            even_at_least("k", k, 4)?;
            even_at_least("m", m, 4)?;
            odd_at_least("r", r, 1)?;
            let mut g = two_larvas_joined(k, m, r)?;
            if spec.kind == FamilyKind::GraphV {
                g.add_edge(1, k); // c2 d1
            }
            Ok(g)
        }
        FamilyKind::GraphIV => {
            let (k, m, n) = (spec.get("k")?, spec.get("m")?, spec.get("n")?);
            even_at_least("k", k, 4)?;
            even_at_least("m", m, 4)?;
            even_at_least("n", n, 4)?;
            Ok(triangle_of_holes(k, m, n)?.0)
        }
        FamilyKind::GraphVGeneral => {
            let (k, m) = (spec.get("k")?, spec.get("m")?);
            let (p1, p2) = (spec.get("p1")?, spec.get("p2")?);
            even_at_least("k", k, 4)?;
            even_at_least("m", m, 4)?;
            if p1 < 1 {
                return Err(FamilyError::SizeViolation {
                    param: "p1",
                    value: p1,
                    min: 1,
                });
            }
            if p2 < 1 {
                return Err(FamilyError::SizeViolation {
                    param: "p2",
                    value: p2,
                    min: 1,
                });
            }
            if (p1 + p2) % 2 != 0 {
                return Err(FamilyError::ParityViolation {
                    param: "p2",
                    value: p2,
                    rule: "p1 and p2 must have equal parity so the middle hole is even",
                });
            }
            // holes 0..k and k..k+m; apexes u1 = k+m over (0,1), w1 = k+m+1
            // over (k, k+1); path p1 joins the apexes, path p2 joins hole
            // vertices 1 and k+1.
            let u1 = k + m;
            let w1 = k + m + 1;
            let mut g = Graph::empty(k + m + 2 + (p1 - 1) + (p2 - 1))?;
            add_cycle(&mut g, &seq(0, k));
            add_cycle(&mut g, &seq(k, m));
            g.add_edge(u1, 0);
            g.add_edge(u1, 1);
            g.add_edge(w1, k);
            g.add_edge(w1, k + 1);
            let mut next = k + m + 2;
            let mut path = vec![u1];
            path.extend(seq(next, p1 - 1));
            path.push(w1);
            add_path(&mut g, &path);
            next += p1 - 1;
            let mut path = vec![1];
            path.extend(seq(next, p2 - 1));
            path.push(k + 1);
            add_path(&mut g, &path);
            Ok(g)
        }
        FamilyKind::GraphVI => {
            let (k, m, n) = (spec.get("k")?, spec.get("m")?, spec.get("n")?);
            even_at_least("k", k, 4)?;
            even_at_least("m", m, 4)?;
            even_at_least("n", n, 4)?;
            let mut g = three_holes_shared(k, m, n)?;
            g.add_edge(0, k); // c1 d1
            g.add_edge(1, k + 1); // c2 d2
            Ok(g)
        }
        FamilyKind::PupaPupa | FamilyKind::EvolvedGraphV => {
            let (k, t) = (spec.get("k")?, spec.get("t")?);
            let (m, l, r) = (spec.get("m")?, spec.get("l")?, spec.get("r")?);
            even_at_least("k", k, 4)?;
            even_at_least("t", t, 2)?;
            even_at_least("m", m, 4)?;
            even_at_least("l", l, 2)?;
            odd_at_least("r", r, 1)?;
            let left = pupa(k, t);
            let right = pupa(m, l);
            let offset = left.order();
            let mut g = glue_with_path(&left, left.order() - 1, &right, right.order() - 1, r)?;
            if spec.kind == FamilyKind::EvolvedGraphV {
                // the completion vertices of the two pupas become adjacent
                g.add_edge(1, offset + 1);
            }
            Ok(g)
        }
        FamilyKind::ButterflyButterfly => {
            let (p1, p2, p3) = (spec.get("p1")?, spec.get("p2")?, spec.get("p3")?);
            let (q1, q2, q3) = (spec.get("q1")?, spec.get("q2")?, spec.get("q3")?);
            let r = spec.get("r")?;
            even_at_least("p1", p1, 2)?;
            odd_at_least("p2", p2, 1)?;
            even_at_least("p3", p3, 2)?;
            even_at_least("q1", q1, 2)?;
            odd_at_least("q2", q2, 1)?;
            even_at_least("q3", q3, 2)?;
            odd_at_least("r", r, 1)?;
            let left = butterfly(p1, p2, p3);
            let right = butterfly(q1, q2, q3);
            glue_with_path(&left, left.order() - 1, &right, right.order() - 1, r)
        }
        FamilyKind::PupaButterfly => {
            let (k, t) = (spec.get("k")?, spec.get("t")?);
            let (p1, p2, p3) = (spec.get("p1")?, spec.get("p2")?, spec.get("p3")?);
            let r = spec.get("r")?;
            even_at_least("k", k, 4)?;
            even_at_least("t", t, 2)?;
            even_at_least("p1", p1, 2)?;
            odd_at_least("p2", p2, 1)?;
            even_at_least("p3", p3, 2)?;
            even_at_least("r", r, 2)?;
            let left = pupa(k, t);
            let right = butterfly(p1, p2, p3);
            glue_with_path(&left, left.order() - 1, &right, right.order() - 1, r)
        }
        FamilyKind::EvolvedGraphIII => {
            let (k, m, t) = (spec.get("k")?, spec.get("m")?, spec.get("t")?);
            even_at_least("k", k, 4)?;
            even_at_least("m", m, 4)?;
            even_at_least("t", t, 2)?;
            // GraphIII with the c1 d1 corner replaced by an even subdivision;
            // both opposite corners c2 and d2 are complete to the new path.
            let mut g = Graph::empty(k + m + t)?;
            add_cycle(&mut g, &seq(0, k));
            add_cycle(&mut g, &seq(k, m));
            g.add_edge(0, k + 1);
            g.add_edge(1, k);
            g.add_edge(1, k + 1);
            let mut path = vec![0];
            path.extend(seq(k + m, t));
            path.push(k);
            add_path(&mut g, &path);
            for p in seq(k + m, t) {
                g.add_edge(1, p);
                g.add_edge(k + 1, p);
            }
            Ok(g)
        }
        FamilyKind::EvolvedGraphVI => {
            let (k, m, n) = (spec.get("k")?, spec.get("m")?, spec.get("n")?);
            let (t, l) = (spec.get("t")?, spec.get("l")?);
            even_at_least("k", k, 4)?;
            even_at_least("m", m, 4)?;
            even_at_least("n", n, 4)?;
            even_at_least("t", t, 2)?;
            even_at_least("l", l, 2)?;
            // GraphVI with both central chords c1 d1 and c2 d2 subdivided;
            // c2 is complete to the first new path, d1 to the second.
            let mut g = Graph::empty(k + m + n - 2 + t + l)?;
            add_cycle(&mut g, &seq(0, k));
            add_cycle(&mut g, &seq(k, m));
            let mut e = vec![1, k];
            e.extend(seq(k + m, n - 2));
            add_cycle(&mut g, &e);
            let mut next = k + m + n - 2;
            let mut path = vec![0];
            path.extend(seq(next, t));
            path.push(k);
            add_path(&mut g, &path);
            for p in seq(next, t) {
                g.add_edge(1, p);
            }
            next += t;
            let mut path = vec![1];
            path.extend(seq(next, l));
            path.push(k + 1);
            add_path(&mut g, &path);
            for p in seq(next, l) {
                g.add_edge(k, p);
            }
            Ok(g)
        }
        FamilyKind::MutatedGraphIVA | FamilyKind::MutatedGraphIVB => {
            let (k, m, n) = (spec.get("k")?, spec.get("m")?, spec.get("n")?);
            even_at_least("k", k, 6)?;
            even_at_least("m", m, 6)?;
            even_at_least("n", n, 6)?;
            let (mut g, holes) = triangle_of_holes(k, m, n)?;
            let (bottom, left, right) = holes;
            // fixed chord tables: one two-chord mutation step per hole
            g.add_edge(0, left[m - 2]);
            g.add_edge(0, left[m - 3]);
            g.add_edge(1, bottom[1]);
            g.add_edge(1, bottom[2]);
            if spec.kind == FamilyKind::MutatedGraphIVA {
                g.add_edge(2, right[1]);
                g.add_edge(2, right[2]);
            } else {
                g.add_edge(1, right[n - 2]);
                g.add_edge(1, right[n - 3]);
            }
            Ok(g)
        }
        FamilyKind::MutatedPupa => {
            let (k, t) = (spec.get("k")?, spec.get("t")?);
            even_at_least("k", k, 10)?;
            even_at_least("t", t, 2)?;
            let mut g = pupa(k, t);
            // chord table for the three-step chain on the hole 0..k
            for (u, v) in [(0, 2), (0, 3), (3, k - 1), (3, k - 2), (k - 2, 4), (k - 2, 5)] {
                g.add_edge(u, v);
            }
            Ok(g)
        }
        FamilyKind::MutatedButterfly => {
            let (p1, p2, p3) = (spec.get("p1")?, spec.get("p2")?, spec.get("p3")?);
            even_at_least("p1", p1, 6)?;
            odd_at_least("p2", p2, 1)?;
            even_at_least("p3", p3, 4)?;
            let mut g = butterfly(p1, p2, p3);
            let ka = p1 + 1;
            // left side: chords from a_k then from a_2; right side: from c_1
            let c1 = ka + p2 - 1;
            let cm = c1 + p3;
            for (u, v) in [
                (ka - 1, 0),
                (ka - 1, 1),
                (1, ka - 2),
                (1, ka - 3),
                (c1, cm),
                (c1, cm - 1),
            ] {
                g.add_edge(u, v);
            }
            Ok(g)
        }
    }
}

/// The distinguished head vertex of head-bearing families.
pub fn head_vertex(spec: &FamilySpec) -> Option<usize> {
    match spec.kind {
        FamilyKind::Larva
        | FamilyKind::Pupa
        | FamilyKind::Butterfly
        | FamilyKind::MutatedPupa
        | FamilyKind::MutatedButterfly => Some(make_family(spec).ok()?.order() - 1),
        _ => None,
    }
}

fn seq(start: usize, len: usize) -> Vec<usize> {
    (start..start + len).collect()
}

fn add_cycle(g: &mut Graph, verts: &[usize]) {
    for i in 0..verts.len() {
        g.add_edge(verts[i], verts[(i + 1) % verts.len()]);
    }
}

fn add_path(g: &mut Graph, verts: &[usize]) {
    for w in verts.windows(2) {
        g.add_edge(w[0], w[1]);
    }
}

/// Hole 0..k and hole k..k+m, no edges between them.
fn two_holes(k: usize, m: usize) -> Result<Graph, FamilyError> {
    let mut g = Graph::empty(k + m)?;
    add_cycle(&mut g, &seq(0, k));
    add_cycle(&mut g, &seq(k, m));
    Ok(g)
}

/// Larva on hole 0..k: head k adjacent to the side pair (0, 1).
fn larva(k: usize) -> Graph {
    let mut g = Graph::empty(k + 1).unwrap();
    add_cycle(&mut g, &seq(0, k));
    g.add_edge(k, 0);
    g.add_edge(k, 1);
    g
}

/// Pupa on hole 0..k with path vertices k..k+t and head k+t: the head walks
/// to hole vertex 0 along the new path, and hole vertex 1 is complete to
/// the head, the path, and hole vertex 0.
fn pupa(k: usize, t: usize) -> Graph {
    let mut g = Graph::empty(k + t + 1).unwrap();
    add_cycle(&mut g, &seq(0, k));
    let head = k + t;
    let mut path = vec![head];
    path.extend(seq(k, t));
    path.push(0);
    add_path(&mut g, &path);
    g.add_edge(1, head);
    for p in seq(k, t) {
        g.add_edge(1, p);
    }
    g
}

/// Butterfly with side paths of lengths p1 and p3 and middle path of length
/// p2. Vertices: the first side path, then the middle path interior, then
/// the far side path, head last. The head is complete to the middle path
/// and to both far endpoints.
fn butterfly(p1: usize, p2: usize, p3: usize) -> Graph {
    let ka = p1 + 1;
    let a: Vec<usize> = seq(0, ka);
    let mut b = vec![ka - 1];
    b.extend(seq(ka, p2));
    let mut c = vec![*b.last().unwrap()];
    c.extend(seq(ka + p2, p3));
    let head = ka + p2 + p3;
    let mut g = Graph::empty(head + 1).unwrap();
    add_path(&mut g, &a);
    add_path(&mut g, &b);
    add_path(&mut g, &c);
    for &v in &b {
        g.add_edge(head, v);
    }
    g.add_edge(head, a[0]);
    g.add_edge(head, *c.last().unwrap());
    g
}

/// Two larvas with heads joined by an odd path: holes 0..k and k..k+m,
/// heads k+m (over (0,1)) and k+m+1 (over (k,k+1)), path interior last.
fn two_larvas_joined(k: usize, m: usize, r: usize) -> Result<Graph, FamilyError> {
    let u = k + m;
    let w = k + m + 1;
    let mut g = Graph::empty(k + m + 2 + (r - 1))?;
    add_cycle(&mut g, &seq(0, k));
    add_cycle(&mut g, &seq(k, m));
    g.add_edge(u, 0);
    g.add_edge(u, 1);
    g.add_edge(w, k);
    g.add_edge(w, k + 1);
    let mut path = vec![u];
    path.extend(seq(k + m + 2, r - 1));
    path.push(w);
    add_path(&mut g, &path);
    Ok(g)
}

/// Central triangle 0,1,2 with an even hole through each triangle edge:
/// bottom through (0,1), left through (0,2), right through (1,2). Returns
/// each hole as its full cyclic vertex list.
#[allow(clippy::type_complexity)]
fn triangle_of_holes(
    k: usize,
    m: usize,
    n: usize,
) -> Result<(Graph, (Vec<usize>, Vec<usize>, Vec<usize>)), FamilyError> {
    let mut g = Graph::empty(k + m + n - 3)?;
    g.add_edge(0, 1);
    g.add_edge(0, 2);
    g.add_edge(1, 2);
    let mut bottom = vec![0];
    bottom.extend(seq(3, k - 2));
    bottom.push(1);
    add_path(&mut g, &bottom);
    let mut left = vec![0];
    left.extend(seq(3 + (k - 2), m - 2));
    left.push(2);
    add_path(&mut g, &left);
    let mut right = vec![1];
    right.extend(seq(3 + (k - 2) + (m - 2), n - 2));
    right.push(2);
    add_path(&mut g, &right);
    Ok((g, (bottom, left, right)))
}

/// Holes 0..k and k..k+m plus a third even hole through hole vertices 1 and
/// k (sharing the edge between them), interior vertices last.
fn three_holes_shared(k: usize, m: usize, n: usize) -> Result<Graph, FamilyError> {
    let mut g = two_holes(k, m)?;
    let extra = n - 2;
    let mut h = Graph::empty(k + m + extra)?;
    for (u, v) in g.edges() {
        h.add_edge(u, v);
    }
    let mut e = vec![1, k];
    e.extend(seq(k + m, extra));
    add_cycle(&mut h, &e);
    g = h;
    Ok(g)
}

/// Disjoint union of two graphs plus a path of `path_len` edges between the
/// given vertices; used by the joined families and by [`join_heads`].
fn glue_with_path(
    g1: &Graph,
    v1: usize,
    g2: &Graph,
    v2: usize,
    path_len: usize,
) -> Result<Graph, FamilyError> {
    let offset = g1.order();
    let mut edges: Vec<(usize, usize)> = g1.edges();
    edges.extend(g2.edges().iter().map(|&(u, v)| (u + offset, v + offset)));
    let base = offset + g2.order();
    let mut path = vec![v1];
    path.extend(seq(base, path_len - 1));
    path.push(offset + v2);
    for w in path.windows(2) {
        edges.push((w[0], w[1]));
    }
    Ok(Graph::from_edges(base + path_len - 1, &edges)?)
}

/// Joins a vertex of one graph to a vertex of another by a fresh path with
/// `path_len` edges. Parity is not enforced here; wrapping generators do.
pub fn join_heads(
    g1: &Graph,
    v1: usize,
    g2: &Graph,
    v2: usize,
    path_len: usize,
) -> Result<Graph, FamilyError> {
    if v1 >= g1.order() || v2 >= g2.order() {
        return Err(FamilyError::InvalidOccurrence(format!(
            "join endpoint out of range ({v1} in order {}, {v2} in order {})",
            g1.order(),
            g2.order()
        )));
    }
    if path_len == 0 {
        return Err(FamilyError::SizeViolation {
            param: "path_len",
            value: 0,
            min: 1,
        });
    }
    glue_with_path(g1, v1, g2, v2, path_len)
}

/// A larva sitting inside a host graph: an induced even hole listed in
/// cyclic order starting with the side pair, plus the head adjacent to
/// exactly the first two hole vertices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LarvaOccurrence {
    pub head: usize,
    pub hole: Vec<usize>,
}

impl LarvaOccurrence {
    pub fn new(head: usize, hole: Vec<usize>) -> LarvaOccurrence {
        LarvaOccurrence { head, hole }
    }

    /// The same occurrence with the two side vertices swapped (hole listed
    /// in the reverse orientation).
    pub fn flipped(&self) -> LarvaOccurrence {
        let mut hole = self.hole.clone();
        hole.swap(0, 1);
        hole[2..].reverse();
        LarvaOccurrence {
            head: self.head,
            hole,
        }
    }

    pub fn side_pair(&self) -> (usize, usize) {
        (self.hole[0], self.hole[1])
    }

    pub fn validate(&self, g: &Graph) -> Result<(), FamilyError> {
        let k = self.hole.len();
        let fail = |msg: String| Err(FamilyError::InvalidOccurrence(msg));
        if k < 4 || k % 2 != 0 {
            return fail(format!("hole length {k} is not an even number >= 4"));
        }
        let hole_set: VertexSet = self.hole.iter().copied().collect();
        if hole_set.len() != k || self.hole.iter().any(|&v| v >= g.order()) {
            return fail("hole vertices must be distinct and in range".into());
        }
        if self.head >= g.order() || hole_set.contains(self.head) {
            return fail("head must be a vertex outside the hole".into());
        }
        for (i, &v) in self.hole.iter().enumerate() {
            let next = self.hole[(i + 1) % k];
            if !g.has_edge(v, next) {
                return fail(format!("hole edge {v}-{next} missing"));
            }
            if g.neighbors(v).intersection(hole_set).len() != 2 {
                return fail(format!("hole is not induced at vertex {v}"));
            }
        }
        let attach = g.neighbors(self.head).intersection(hole_set);
        if attach != VertexSet::from_iter([self.hole[0], self.hole[1]]) {
            return fail(format!(
                "head {} must be adjacent to exactly the side pair ({}, {})",
                self.head, self.hole[0], self.hole[1]
            ));
        }
        Ok(())
    }
}

/// Which side edge of a larva an evolution subdivides: the edge from the
/// head to the first or to the second hole vertex of the occurrence.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Side {
    First,
    Second,
}

#[derive(Clone, Debug)]
pub struct Evolution {
    pub occurrence: LarvaOccurrence,
    pub side: Side,
    pub subdivisions: usize,
}

impl Evolution {
    fn side_vertex(&self) -> usize {
        match self.side {
            Side::First => self.occurrence.hole[0],
            Side::Second => self.occurrence.hole[1],
        }
    }

    fn opposite_vertex(&self) -> usize {
        match self.side {
            Side::First => self.occurrence.hole[1],
            Side::Second => self.occurrence.hole[0],
        }
    }
}

/// Subdivides the chosen side edge an even number of times and makes the
/// opposite side vertex complete to the new vertices. Applied to a bare
/// larva this produces a pupa.
pub fn evolve(g: &Graph, evolution: &Evolution) -> Result<Graph, FamilyError> {
    emanate(g, std::slice::from_ref(evolution))
}

/// Applies several evolutions at once. Two evolutions may target the same
/// underlying side edge from the two larvas sharing it; the edge is then
/// subdivided once and both opposite vertices are completed to the shared
/// path. Distinct target edges must not share endpoints.
pub fn emanate(g: &Graph, evolutions: &[Evolution]) -> Result<Graph, FamilyError> {
    for ev in evolutions {
        ev.occurrence.validate(g)?;
        if ev.subdivisions < 2 || ev.subdivisions % 2 != 0 {
            return Err(FamilyError::OddSubdivisionCount(ev.subdivisions));
        }
    }
    // group by undirected side edge
    let mut groups: Vec<((usize, usize), Vec<&Evolution>)> = Vec::new();
    for ev in evolutions {
        let (a, b) = (ev.occurrence.head, ev.side_vertex());
        let key = (a.min(b), a.max(b));
        match groups.iter_mut().find(|(k, _)| *k == key) {
            Some((_, list)) => list.push(ev),
            None => groups.push((key, vec![ev])),
        }
    }
    for (i, (e1, _)) in groups.iter().enumerate() {
        for (e2, _) in groups.iter().skip(i + 1) {
            if e1.0 == e2.0 || e1.0 == e2.1 || e1.1 == e2.0 || e1.1 == e2.1 {
                return Err(FamilyError::UnsupportedComposition(
                    "evolutions on distinct side edges must not share endpoints".into(),
                ));
            }
        }
    }
    let mut edges: Vec<(usize, usize)> = Vec::new();
    let removed: Vec<(usize, usize)> = groups.iter().map(|(k, _)| *k).collect();
    for (u, v) in g.edges() {
        if !removed.contains(&(u, v)) {
            edges.push((u, v));
        }
    }
    let mut next = g.order();
    for (edge, list) in &groups {
        let t = list[0].subdivisions;
        if list.len() > 2 {
            return Err(FamilyError::UnsupportedComposition(
                "more than two evolutions on one side edge".into(),
            ));
        }
        if list.len() == 2 {
            let (a, b) = (&list[0], &list[1]);
            if a.subdivisions != b.subdivisions {
                return Err(FamilyError::UnsupportedComposition(
                    "shared side edge with mismatched subdivision counts".into(),
                ));
            }
            if !(a.occurrence.head == b.side_vertex() && b.occurrence.head == a.side_vertex()) {
                return Err(FamilyError::UnsupportedComposition(
                    "a side edge may be shared only by the two larvas whose heads are its ends"
                        .into(),
                ));
            }
        }
        let fresh = seq(next, t);
        next += t;
        let mut path = vec![edge.0];
        path.extend(fresh.iter().copied());
        path.push(edge.1);
        for w in path.windows(2) {
            edges.push((w[0], w[1]));
        }
        for ev in list {
            for &p in &fresh {
                edges.push((ev.opposite_vertex(), p));
            }
        }
    }
    Ok(Graph::from_edges(next, &edges)?)
}

/// Applies a mutation chain to a larva occurrence. The first step adds an
/// even fan of chords from the first side vertex; every later step mutates
/// the previous step's target. Each target names the hole vertex the chord
/// fan runs to; after each step the surviving short cycle is checked to be
/// an even hole of the new graph.
pub fn mutate(g: &Graph, occ: &LarvaOccurrence, targets: &[usize]) -> Result<Graph, FamilyError> {
    occ.validate(g)?;
    let mut g = g.clone();
    // current hole, oriented [mutable, anchor, ...]
    let mut hole: Vec<usize> = occ.hole.clone();
    for &target in targets {
        let r = hole.len();
        let Some(s) = hole.iter().position(|&v| v == target) else {
            return Err(FamilyError::ChainViolation(format!(
                "target {target} is not on the current even hole"
            )));
        };
        if s < 2 {
            return Err(FamilyError::ChainViolation(format!(
                "target {target} is adjacent to the mutating vertex"
            )));
        }
        if s % 2 == 0 {
            return Err(FamilyError::OddChordCount(s - 1));
        }
        if s > r - 3 {
            return Err(FamilyError::ChainViolation(format!(
                "target {target} leaves fewer than four vertices for the next hole"
            )));
        }
        let x = hole[0];
        for &w in &hole[2..=s] {
            if g.has_edge(x, w) {
                return Err(FamilyError::ChainViolation(format!(
                    "chord {x}-{w} already present"
                )));
            }
            g.add_edge(x, w);
        }
        let mut next_hole = vec![target, x];
        next_hole.extend(hole[s + 1..].iter().rev());
        let hole_set: VertexSet = next_hole.iter().copied().collect();
        if !g.is_induced_cycle(hole_set) {
            return Err(FamilyError::ChainViolation(format!(
                "surviving cycle through {target} is not an induced even hole"
            )));
        }
        hole = next_hole;
    }
    Ok(g)
}
