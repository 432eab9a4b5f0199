//! The four connectivity functions of a graph.
//!
//! | selector      | ground   | value                                              |
//! |---------------|----------|----------------------------------------------------|
//! | `VertexCut` κ | edges    | vertices touching an edge inside and one outside   |
//! | `EdgeCut` η   | vertices | edges with one end inside                          |
//! | `MatchingCut` ν | vertices | maximum matching of the crossing bipartite graph |
//! | `RankCut` ρ   | vertices | GF(2) rank of the crossing bi-adjacency matrix     |
//!
//! Each vertex function is also available in a *cross* form taking two
//! disjoint sets `A`, `B` and looking only at edges between them; the exact
//! solver uses these on partial assignments because they can only grow as
//! `A` and `B` grow.

use core::fmt;
use core::str::FromStr;

use alloc::format;

use crate::error::{invalid, Error, Result};
use crate::gf2::rank_in_place;
use crate::graph::Graph;
use crate::set::{EdgeSet, VertexSet};

/// ρ_G(S).
pub fn cutrank(g: &Graph, s: VertexSet) -> usize {
    let s = s.intersection(g.vertices());
    cross_rank(g, s, s.complement(g.n()))
}

/// η_G(S).
pub fn edge_boundary(g: &Graph, s: VertexSet) -> usize {
    let s = s.intersection(g.vertices());
    cross_edges(g, s, s.complement(g.n()))
}

/// ν_G(S).
pub fn matching_boundary(g: &Graph, s: VertexSet) -> usize {
    let s = s.intersection(g.vertices());
    cross_matching(g, s, s.complement(g.n()))
}

/// κ_G(F). Every pair in `F` must be an edge of `G`.
pub fn vertex_boundary(g: &Graph, f: &EdgeSet) -> Result<usize> {
    let mut inside = 0u64;
    for e in f.iter() {
        if !g.has_edge(e.0, e.1) {
            return Err(Error::NotAnEdge { u: e.0, v: e.1 });
        }
        inside |= e.ends().bits();
    }
    let mut outside = 0u64;
    for e in g.edges() {
        if !f.contains(e) {
            outside |= e.ends().bits();
        }
    }
    Ok((inside & outside).count_ones() as usize)
}

/// Rank over GF(2) of the `A x B` bi-adjacency matrix.
pub fn cross_rank(g: &Graph, a: VertexSet, b: VertexSet) -> usize {
    let (rows, cols) = if a.len() <= b.len() { (a, b) } else { (b, a) };
    let mut buf = [0u64; 64];
    let mut len = 0;
    for v in rows {
        let r = g.rows()[v] & cols.bits();
        if r != 0 {
            buf[len] = r;
            len += 1;
        }
    }
    rank_in_place(&mut buf[..len])
}

/// Number of edges between `A` and `B`.
pub fn cross_edges(g: &Graph, a: VertexSet, b: VertexSet) -> usize {
    a.iter()
        .map(|v| (g.rows()[v] & b.bits()).count_ones() as usize)
        .sum()
}

/// Maximum matching between `A` and `B` by augmenting paths.
pub fn cross_matching(g: &Graph, a: VertexSet, b: VertexSet) -> usize {
    let mut mate_of_b = [u8::MAX; 64];
    let mut size = 0;
    for v in a {
        if g.rows()[v] & b.bits() == 0 {
            continue;
        }
        let mut visited = 0u64;
        if augment(g, v, b.bits(), &mut visited, &mut mate_of_b) {
            size += 1;
        }
    }
    size
}

fn augment(g: &Graph, v: usize, b: u64, visited: &mut u64, mate: &mut [u8; 64]) -> bool {
    for w in VertexSet(g.rows()[v] & b & !*visited) {
        *visited |= 1u64 << w;
        if mate[w] == u8::MAX || augment(g, mate[w] as usize, b, visited, mate) {
            mate[w] = v as u8;
            return true;
        }
    }
    false
}

/// Selector for one of the four connectivity functions.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ConnFn {
    /// κ, on edge sets.
    VertexCut,
    /// η, on vertex sets.
    EdgeCut,
    /// ν, on vertex sets.
    MatchingCut,
    /// ρ, on vertex sets.
    RankCut,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Ground {
    Vertices,
    Edges,
}

impl ConnFn {
    pub const ALL: [ConnFn; 4] = [
        ConnFn::VertexCut,
        ConnFn::EdgeCut,
        ConnFn::MatchingCut,
        ConnFn::RankCut,
    ];

    pub fn ground(self) -> Ground {
        match self {
            ConnFn::VertexCut => Ground::Edges,
            _ => Ground::Vertices,
        }
    }

    /// Short name used on the command line and in reports.
    pub fn name(self) -> &'static str {
        match self {
            ConnFn::VertexCut => "vc",
            ConnFn::EdgeCut => "ec",
            ConnFn::MatchingCut => "matc",
            ConnFn::RankCut => "cutrk",
        }
    }

    /// Value of the function on the cross pattern between disjoint vertex
    /// sets. Only meaningful for the vertex-ground functions.
    pub(crate) fn cross(self, g: &Graph, a: VertexSet, b: VertexSet) -> usize {
        match self {
            ConnFn::EdgeCut => cross_edges(g, a, b),
            ConnFn::MatchingCut => cross_matching(g, a, b),
            ConnFn::RankCut => cross_rank(g, a, b),
            ConnFn::VertexCut => unreachable!("vertex cut is edge-grounded"),
        }
    }
}

impl fmt::Display for ConnFn {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for ConnFn {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "vc" | "kappa" | "vertex" => Ok(ConnFn::VertexCut),
            "ec" | "eta" | "edge" => Ok(ConnFn::EdgeCut),
            "matc" | "nu" | "matching" => Ok(ConnFn::MatchingCut),
            "cutrk" | "cutrank" | "rho" | "rank" => Ok(ConnFn::RankCut),
            other => Err(invalid(format!("unknown connectivity function {other}"))),
        }
    }
}

/// A subset of a function's ground set.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GroundSet {
    Vertices(VertexSet),
    Edges(EdgeSet),
}

/// Evaluates `f` on `x`; the subset type must match the function's ground.
pub fn eval(f: ConnFn, g: &Graph, x: &GroundSet) -> Result<usize> {
    match (f, x) {
        (ConnFn::VertexCut, GroundSet::Edges(es)) => vertex_boundary(g, es),
        (ConnFn::EdgeCut, GroundSet::Vertices(s)) => {
            g.check_set(*s)?;
            Ok(edge_boundary(g, *s))
        }
        (ConnFn::MatchingCut, GroundSet::Vertices(s)) => {
            g.check_set(*s)?;
            Ok(matching_boundary(g, *s))
        }
        (ConnFn::RankCut, GroundSet::Vertices(s)) => {
            g.check_set(*s)?;
            Ok(cutrank(g, *s))
        }
        (f, _) => Err(invalid(format!(
            "{f} is defined on {:?}, got the other ground type",
            f.ground()
        ))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::family::*;
    use crate::set::Edge;

    fn vs(v: &[usize]) -> VertexSet {
        VertexSet::from_slice(v)
    }

    fn es(e: &[(usize, usize)]) -> EdgeSet {
        e.iter().map(|&(u, v)| Edge::new(u, v)).collect()
    }

    #[test]
    fn cutrank_examples() {
        assert_eq!(cutrank(&complete(4), vs(&[0, 1])), 1);
        assert_eq!(cutrank(&path(4), vs(&[0, 2])), 2);
        assert_eq!(cutrank(&path(4), VertexSet::EMPTY), 0);
        assert_eq!(cutrank(&path(4), VertexSet::full(4)), 0);
    }

    #[test]
    fn edge_boundary_examples() {
        assert_eq!(edge_boundary(&star(3), vs(&[0])), 3);
        assert_eq!(edge_boundary(&cycle(4), vs(&[2])), 2);
        assert_eq!(edge_boundary(&path(5), vs(&[0, 1, 2])), 1);
    }

    #[test]
    fn matching_boundary_examples() {
        let g = m_copies(&complete(2), 3).unwrap();
        assert_eq!(matching_boundary(&g, vs(&[0, 2, 4])), 3);
        assert_eq!(matching_boundary(&star(6), vs(&[0])), 1);
        assert_eq!(matching_boundary(&cycle(6), vs(&[0, 2, 4])), 3);
    }

    #[test]
    fn vertex_boundary_examples() {
        assert_eq!(vertex_boundary(&path(4), &es(&[(0, 1)])).unwrap(), 1);
        let k3 = complete(3);
        assert_eq!(vertex_boundary(&k3, &k3.edge_set()).unwrap(), 0);
        assert_eq!(vertex_boundary(&k3, &EdgeSet::new()).unwrap(), 0);
        assert_eq!(vertex_boundary(&star(3), &es(&[(0, 2)])).unwrap(), 1);
        assert!(vertex_boundary(&path(4), &es(&[(0, 2)])).is_err());
    }

    #[test]
    fn dispatch_matches_and_rejects_mismatch() {
        let p4 = path(4);
        assert_eq!(
            eval(ConnFn::RankCut, &p4, &GroundSet::Vertices(vs(&[0, 2]))).unwrap(),
            2
        );
        assert_eq!(
            eval(ConnFn::EdgeCut, &star(3), &GroundSet::Vertices(vs(&[0]))).unwrap(),
            3
        );
        assert_eq!(
            eval(ConnFn::VertexCut, &p4, &GroundSet::Edges(es(&[(0, 1)]))).unwrap(),
            1
        );
        assert!(eval(ConnFn::RankCut, &p4, &GroundSet::Edges(es(&[(0, 1)]))).is_err());
        assert!(eval(ConnFn::VertexCut, &p4, &GroundSet::Vertices(vs(&[0]))).is_err());
        assert!(eval(ConnFn::EdgeCut, &p4, &GroundSet::Vertices(vs(&[7]))).is_err());
    }

    #[test]
    fn names_round_trip() {
        for f in ConnFn::ALL {
            assert_eq!(f.name().parse::<ConnFn>().unwrap(), f);
        }
        assert!("flow".parse::<ConnFn>().is_err());
    }
}
