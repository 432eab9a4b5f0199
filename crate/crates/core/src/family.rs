//! Named graph families and the constructions built from them.
//!
//! Canonical vertex orders (the joins depend on them):
//!
//! * `Path(n)`: `0-1-...-(n-1)`.
//! * `Cycle(n)`: the path plus the edge `(n-1)-0`.
//! * `Complete(n)`, `Empty(n)`: vertices `0..n`. `Empty(n)` is the edgeless
//!   graph `S_n`.
//! * `Star(n)`: `K_{1,n}` with the centre at `0` and leaves `1..=n`.
//! * `CompleteBipartite(a, b)`: sides `0..a` and `a..a+b`.
//!
//! [`join`] of `G` and `H` (both on `n` vertices) places `v_i = i-1` of `G`
//! at indices `0..n` and `w_j` of `H` at `n..2n`.

use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use crate::error::{invalid, Error, Result};
use crate::graph::{Graph, MAX_VERTICES};
use crate::set::VertexSet;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Family {
    Path(usize),
    Cycle(usize),
    Complete(usize),
    Star(usize),
    CompleteBipartite(usize, usize),
    Empty(usize),
}

impl Family {
    /// Parses a family name with integer parameters, e.g. `("star", [3])`.
    pub fn parse(kind: &str, params: &[i64]) -> Result<Family> {
        let arity = if kind == "complete_bipartite" { 2 } else { 1 };
        if params.len() != arity {
            return Err(invalid(format!(
                "family {kind} takes {arity} parameter(s), got {}",
                params.len()
            )));
        }
        let mut p = [0usize; 2];
        for (slot, &x) in p.iter_mut().zip(params) {
            *slot = usize::try_from(x)
                .map_err(|_| invalid(format!("negative parameter {x} for {kind}")))?;
        }
        Ok(match kind {
            "path" => Family::Path(p[0]),
            "cycle" => Family::Cycle(p[0]),
            "complete" => Family::Complete(p[0]),
            "star" => Family::Star(p[0]),
            "complete_bipartite" => Family::CompleteBipartite(p[0], p[1]),
            "empty" => Family::Empty(p[0]),
            other => return Err(invalid(format!("unknown family {other}"))),
        })
    }

    pub fn order(self) -> usize {
        match self {
            Family::Path(n) | Family::Cycle(n) | Family::Complete(n) | Family::Empty(n) => n,
            Family::Star(n) => n + 1,
            Family::CompleteBipartite(a, b) => a + b,
        }
    }

    pub fn build(self) -> Result<Graph> {
        let n = self.order();
        if n > MAX_VERTICES {
            return Err(Error::ResourceLimit {
                what: "vertex count",
                size: n,
                limit: MAX_VERTICES,
            });
        }
        let mut g = Graph::empty(n)?;
        match self {
            Family::Path(n) => {
                for i in 1..n {
                    g.add_edge(i - 1, i)?;
                }
            }
            Family::Cycle(n) => {
                if n != 0 && n < 3 {
                    return Err(invalid("a cycle needs at least 3 vertices"));
                }
                for i in 1..n {
                    g.add_edge(i - 1, i)?;
                }
                if n >= 3 {
                    g.add_edge(n - 1, 0)?;
                }
            }
            Family::Complete(n) => {
                for u in 0..n {
                    for v in u + 1..n {
                        g.add_edge(u, v)?;
                    }
                }
            }
            Family::Star(n) => {
                for leaf in 1..=n {
                    g.add_edge(0, leaf)?;
                }
            }
            Family::CompleteBipartite(a, b) => {
                for u in 0..a {
                    for v in a..a + b {
                        g.add_edge(u, v)?;
                    }
                }
            }
            Family::Empty(_) => {}
        }
        Ok(g)
    }
}

pub fn path(n: usize) -> Graph {
    Family::Path(n).build().expect("path order within cap")
}

pub fn cycle(n: usize) -> Graph {
    Family::Cycle(n).build().expect("valid cycle")
}

pub fn complete(n: usize) -> Graph {
    Family::Complete(n).build().expect("complete order within cap")
}

pub fn star(n: usize) -> Graph {
    Family::Star(n).build().expect("star order within cap")
}

pub fn complete_bipartite(a: usize, b: usize) -> Graph {
    Family::CompleteBipartite(a, b)
        .build()
        .expect("bipartite order within cap")
}

/// The edgeless graph `S_n`.
pub fn edgeless(n: usize) -> Graph {
    Family::Empty(n).build().expect("order within cap")
}

fn vertex_name(g: &Graph, v: usize) -> String {
    g.label(v).map_or_else(|| v.to_string(), |l| l.to_string())
}

/// `G ∪ H` on disjoint vertex sets: `G` keeps `0..|G|`, `H` follows.
/// Labels become `0:x` and `1:x`.
pub fn disjoint_union(g: &Graph, h: &Graph) -> Result<Graph> {
    copies(&[g, h])
}

/// `mH`: `m` disjoint copies of `H`, copy `i` occupying the `i`-th
/// contiguous block of indices and labelled `i:x`.
pub fn m_copies(h: &Graph, m: usize) -> Result<Graph> {
    if m == 0 {
        return Err(invalid("mH needs m >= 1"));
    }
    let parts: Vec<&Graph> = vec![h; m];
    copies(&parts)
}

fn copies(parts: &[&Graph]) -> Result<Graph> {
    let total: usize = parts.iter().map(|g| g.n()).sum();
    let mut out = Graph::empty(total)?;
    let mut labels = Vec::with_capacity(total);
    let mut offset = 0;
    for (i, g) in parts.iter().enumerate() {
        for e in g.edges() {
            out.add_edge(offset + e.0, offset + e.1)?;
        }
        for v in 0..g.n() {
            labels.push(format!("{i}:{}", vertex_name(g, v)));
        }
        offset += g.n();
    }
    out.with_labels(labels)
}

/// Parameters of `mH/A`.
#[derive(Clone, Debug)]
pub struct QuotientSpec {
    pub base: Graph,
    pub copies: usize,
    pub glued: VertexSet,
}

impl QuotientSpec {
    pub fn new(base: Graph, copies: usize, glued: VertexSet) -> Self {
        QuotientSpec {
            base,
            copies,
            glued,
        }
    }

    pub fn validate(&self) -> Result<()> {
        self.base.check_set(self.glued)?;
        if self.copies == 0 {
            return Err(invalid("mH/A needs m >= 1"));
        }
        if !self.base.is_independent(self.glued) {
            return Err(invalid("glued set A is not independent"));
        }
        if self.glued == self.base.vertices() {
            return Err(invalid("glued set A must be a proper subset of V(H)"));
        }
        Ok(())
    }

    /// The extra conditions of the obstruction families: `H` connected and
    /// `H - A` connected.
    pub fn is_obstruction_shape(&self) -> bool {
        let rest = self.glued.complement(self.base.n());
        self.base.is_connected() && self.base.components_within(rest).len() == 1
    }

    pub fn vertex_count(&self) -> usize {
        self.copies * (self.base.n() - self.glued.len()) + self.glued.len()
    }
}

/// `mH/A`: `m` copies of `H` with the copies of every vertex of `A`
/// identified.
///
/// The glued vertices come first, in increasing order of their index in `H`,
/// labelled `A:x`; copy `i` of the remaining vertices follows as a
/// contiguous block labelled `i:x`.
pub fn quotient_family(spec: &QuotientSpec) -> Result<Graph> {
    spec.validate()?;
    let h = &spec.base;
    let total = spec.vertex_count();
    if total > MAX_VERTICES {
        return Err(Error::ResourceLimit {
            what: "vertex count",
            size: total,
            limit: MAX_VERTICES,
        });
    }
    let glued: Vec<usize> = spec.glued.to_vec();
    let free: Vec<usize> = spec.glued.complement(h.n()).to_vec();
    let mut labels = Vec::with_capacity(total);
    for &a in &glued {
        labels.push(format!("A:{}", vertex_name(h, a)));
    }
    for copy in 0..spec.copies {
        for &x in &free {
            labels.push(format!("{copy}:{}", vertex_name(h, x)));
        }
    }
    let index = |copy: usize, v: usize| -> usize {
        match glued.binary_search(&v) {
            Ok(i) => i,
            Err(_) => {
                let j = free.binary_search(&v).expect("vertex is free");
                glued.len() + copy * free.len() + j
            }
        }
    };
    let mut g = Graph::empty(total)?;
    for copy in 0..spec.copies {
        for e in h.edges() {
            g.add_edge(index(copy, e.0), index(copy, e.1))?;
        }
    }
    g.with_labels(labels)
}

/// Cross-edge pattern of a join.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum JoinKind {
    /// `v_i w_j` iff `i = j`.
    Mat,
    /// `v_i w_j` iff `i != j`.
    AntiMat,
    /// `v_i w_j` iff `i >= j`.
    Tri,
}

impl JoinKind {
    #[inline]
    pub fn crosses(self, i: usize, j: usize) -> bool {
        match self {
            JoinKind::Mat => i == j,
            JoinKind::AntiMat => i != j,
            JoinKind::Tri => i >= j,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            JoinKind::Mat => "mat",
            JoinKind::AntiMat => "antimat",
            JoinKind::Tri => "tri",
        }
    }
}

impl fmt::Display for JoinKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for JoinKind {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "mat" => Ok(JoinKind::Mat),
            "antimat" => Ok(JoinKind::AntiMat),
            "tri" => Ok(JoinKind::Tri),
            other => Err(invalid(format!("unknown join kind {other}"))),
        }
    }
}

/// `G ⋈ H`, `G anti-⋈ H` or `G ⊲ H` for equal-order `G` and `H`.
pub fn join(g: &Graph, h: &Graph, kind: JoinKind) -> Result<Graph> {
    let n = g.n();
    if h.n() != n {
        return Err(invalid(format!(
            "join needs equal orders, got {} and {}",
            n,
            h.n()
        )));
    }
    let mut out = Graph::empty(2 * n)?;
    for e in g.edges() {
        out.add_edge(e.0, e.1)?;
    }
    for e in h.edges() {
        out.add_edge(n + e.0, n + e.1)?;
    }
    for i in 0..n {
        for j in 0..n {
            if kind.crosses(i, j) {
                out.add_edge(i, n + j)?;
            }
        }
    }
    let labels = (1..=n)
        .map(|i| format!("v{i}"))
        .chain((1..=n).map(|j| format!("w{j}")))
        .collect();
    out.with_labels(labels)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::set::Edge;

    #[test]
    fn family_examples() {
        assert_eq!(path(4).edges(), vec![Edge(0, 1), Edge(1, 2), Edge(2, 3)]);
        assert_eq!(star(3).degree_sequence(), vec![3, 1, 1, 1]);
        let s5 = edgeless(5);
        assert_eq!((s5.n(), s5.edge_count()), (5, 0));
        assert_eq!(complete_bipartite(2, 3).edge_count(), 6);
        assert_eq!(cycle(5).degree_sequence(), vec![2; 5]);
    }

    #[test]
    fn family_parse_rejects_negative() {
        assert!(matches!(
            Family::parse("path", &[-1]),
            Err(Error::InvalidArgument(_))
        ));
        assert_eq!(Family::parse("star", &[3]).unwrap(), Family::Star(3));
        assert!(Family::parse("complete_bipartite", &[2]).is_err());
        assert!(Family::parse("petersen", &[1]).is_err());
        assert!(Family::Complete(64).build().is_err());
    }

    #[test]
    fn copies_examples() {
        let g = m_copies(&complete(2), 3).unwrap();
        assert_eq!((g.n(), g.edge_count(), g.components().len()), (6, 3, 3));
        assert_eq!(g.label(3), Some("1:1"));
        assert_eq!(m_copies(&path(3), 1).unwrap(), path(3));
        let u = disjoint_union(&complete(3), &complete(2)).unwrap();
        assert_eq!((u.n(), u.edge_count()), (5, 4));
        assert!(m_copies(&path(2), 0).is_err());
    }

    #[test]
    fn quotient_of_figure_one() {
        // 4P_4/A with P_4 = abcd and A = {a, d}
        let spec = QuotientSpec::new(path(4), 4, VertexSet::from_slice(&[0, 3]));
        let g = quotient_family(&spec).unwrap();
        assert_eq!(g.n(), 10);
        assert_eq!(g.edge_count(), 12);
        assert_eq!(g.degree(0), 4);
        assert_eq!(g.degree(1), 4);
        assert_eq!(g.label(0), Some("A:0"));
        assert!(spec.is_obstruction_shape());
    }

    #[test]
    fn quotient_rejects_bad_glue() {
        let h = path(3);
        let not_indep = QuotientSpec::new(h.clone(), 2, VertexSet::from_slice(&[0, 1]));
        assert!(quotient_family(&not_indep).is_err());
        let everything = QuotientSpec::new(edgeless(2), 2, VertexSet::full(2));
        assert!(quotient_family(&everything).is_err());
    }

    #[test]
    fn join_cross_patterns() {
        let g = join(&edgeless(2), &edgeless(2), JoinKind::Tri).unwrap();
        assert_eq!(g.edges(), vec![Edge(0, 2), Edge(1, 2), Edge(1, 3)]);
        let a = join(&edgeless(3), &edgeless(3), JoinKind::AntiMat).unwrap();
        assert_eq!(a.degree_sequence(), vec![2; 6]);
        assert!(a.is_connected());
        let m = join(&complete(5), &edgeless(5), JoinKind::Mat).unwrap();
        assert_eq!(m.edge_count(), 10 + 5);
        assert!(join(&path(2), &path(3), JoinKind::Mat).is_err());
    }
}
