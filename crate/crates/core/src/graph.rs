//! Simple undirected graphs stored as one adjacency word per vertex.

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::hash::{Hash, Hasher};

use crate::error::{invalid, Error, Result};
use crate::set::{Edge, EdgeSet, VertexSet};

/// Hard cap on the number of vertices: a vertex set is one `u64` and the
/// graph6 header of every supported order fits the short or medium form.
pub const MAX_VERTICES: usize = 63;

/// A simple undirected graph on vertices `0..n`.
///
/// Row `v` of `adj` is the neighbourhood of `v` as a bitmask. Rows are kept
/// symmetric with a zero diagonal. Optional per-vertex labels track where a
/// vertex came from (copies in `mH`, glued vertices in `mH/A`); equality and
/// hashing ignore them.
#[derive(Clone, Debug)]
pub struct Graph {
    n: usize,
    adj: Vec<u64>,
    labels: Option<Vec<String>>,
}

impl PartialEq for Graph {
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n && self.adj == other.adj
    }
}

impl Eq for Graph {}

impl Hash for Graph {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.n.hash(state);
        self.adj.hash(state);
    }
}

/// The result of a vertex deletion: the compacted graph together with the
/// map from old indices to new ones (`None` for deleted vertices).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Reindexed {
    pub graph: Graph,
    pub old_to_new: Vec<Option<usize>>,
}

impl Graph {
    /// The edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Result<Self> {
        check_order(n)?;
        Ok(Graph {
            n,
            adj: vec![0; n],
            labels: None,
        })
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Graph::empty(n)?;
        for &(u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    /// Builds a graph from raw adjacency rows, checking symmetry and the
    /// zero diagonal.
    pub fn from_rows(rows: Vec<u64>) -> Result<Self> {
        let n = rows.len();
        check_order(n)?;
        let full = VertexSet::full(n).bits();
        for (v, &row) in rows.iter().enumerate() {
            if row & !full != 0 {
                return Err(invalid(format!("row {v} has bits outside 0..{n}")));
            }
            if row >> v & 1 == 1 {
                return Err(invalid(format!("loop at vertex {v}")));
            }
            for u in VertexSet(row) {
                if rows[u] >> v & 1 == 0 {
                    return Err(invalid(format!("adjacency not symmetric at {u},{v}")));
                }
            }
        }
        Ok(Graph {
            n,
            adj: rows,
            labels: None,
        })
    }

    /// Same as [`Graph::from_rows`] without validation, for internal
    /// constructions that maintain the invariants by construction.
    pub(crate) fn from_rows_unchecked(rows: Vec<u64>) -> Self {
        debug_assert!(rows.len() <= MAX_VERTICES);
        Graph {
            n: rows.len(),
            adj: rows,
            labels: None,
        }
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn rows(&self) -> &[u64] {
        &self.adj
    }

    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.n)
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> VertexSet {
        VertexSet(self.adj[v])
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && self.adj[u] >> v & 1 == 1
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|r| r.count_ones() as usize).sum::<usize>() / 2
    }

    /// Edges in lexicographic order of `(u, v)` with `u < v`. Edge-indexed
    /// ground sets (the vertex-cut function) use this order.
    pub fn edges(&self) -> Vec<Edge> {
        let mut out = Vec::with_capacity(self.edge_count());
        for u in 0..self.n {
            for v in VertexSet(self.adj[u] & !((2u64 << u) - 1)) {
                out.push(Edge(u, v));
            }
        }
        out
    }

    pub fn edge_set(&self) -> EdgeSet {
        self.edges().into_iter().collect()
    }

    pub fn degree_sequence(&self) -> Vec<usize> {
        let mut d: Vec<usize> = (0..self.n).map(|v| self.degree(v)).collect();
        d.sort_unstable_by(|a, b| b.cmp(a));
        d
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    pub fn label(&self, v: usize) -> Option<&str> {
        self.labels.as_ref().map(|l| l[v].as_str())
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Result<Self> {
        if labels.len() != self.n {
            return Err(invalid(format!(
                "{} labels for {} vertices",
                labels.len(),
                self.n
            )));
        }
        self.labels = Some(labels);
        Ok(self)
    }

    pub fn without_labels(mut self) -> Self {
        self.labels = None;
        self
    }

    pub fn check_vertex(&self, v: usize) -> Result<()> {
        if v < self.n {
            Ok(())
        } else {
            Err(Error::VertexOutOfRange {
                vertex: v,
                n: self.n,
            })
        }
    }

    pub fn check_set(&self, s: VertexSet) -> Result<()> {
        match s.difference(self.vertices()).first() {
            None => Ok(()),
            Some(v) => Err(Error::VertexOutOfRange {
                vertex: v,
                n: self.n,
            }),
        }
    }

    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<()> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if u == v {
            return Err(invalid(format!("loop at vertex {u}")));
        }
        self.adj[u] |= 1u64 << v;
        self.adj[v] |= 1u64 << u;
        Ok(())
    }

    pub fn remove_edge(&mut self, u: usize, v: usize) -> Result<()> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        self.adj[u] &= !(1u64 << v);
        self.adj[v] &= !(1u64 << u);
        Ok(())
    }

    /// Flips the adjacency between distinct vertices `u` and `v`.
    #[inline]
    pub(crate) fn toggle(&mut self, u: usize, v: usize) {
        debug_assert!(u != v);
        self.adj[u] ^= 1u64 << v;
        self.adj[v] ^= 1u64 << u;
    }

    /// Exchanges the roles of vertices `a` and `b` (rows, columns and labels).
    pub fn swap_vertices(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for row in self.adj.iter_mut() {
            let ba = *row >> a & 1;
            let bb = *row >> b & 1;
            if ba != bb {
                *row ^= (1u64 << a) | (1u64 << b);
            }
        }
        self.adj.swap(a, b);
        if let Some(l) = self.labels.as_mut() {
            l.swap(a, b);
        }
    }

    /// Relabels so that old vertex `v` becomes `perm[v]`.
    pub fn permute(&self, perm: &[usize]) -> Result<Graph> {
        if perm.len() != self.n {
            return Err(invalid("permutation length differs from vertex count"));
        }
        let mut seen = 0u64;
        for &p in perm {
            if p >= self.n || seen >> p & 1 == 1 {
                return Err(invalid("not a permutation"));
            }
            seen |= 1u64 << p;
        }
        let mut rows = vec![0u64; self.n];
        for v in 0..self.n {
            let mut r = 0u64;
            for u in self.neighbors(v) {
                r |= 1u64 << perm[u];
            }
            rows[perm[v]] = r;
        }
        let mut g = Graph::from_rows_unchecked(rows);
        if let Some(l) = &self.labels {
            let mut nl = vec![String::new(); self.n];
            for v in 0..self.n {
                nl[perm[v]] = l[v].clone();
            }
            g.labels = Some(nl);
        }
        Ok(g)
    }

    /// `G[S]`, with vertices renumbered in increasing order of their old index.
    pub fn induced(&self, s: VertexSet) -> Result<Reindexed> {
        self.check_set(s)?;
        let mut old_to_new = vec![None; self.n];
        let keep: Vec<usize> = s.to_vec();
        for (i, &v) in keep.iter().enumerate() {
            old_to_new[v] = Some(i);
        }
        let rows = keep
            .iter()
            .map(|&v| compress(self.adj[v] & s.bits(), s.bits()))
            .collect();
        let mut graph = Graph::from_rows_unchecked(rows);
        if let Some(l) = &self.labels {
            graph.labels = Some(keep.iter().map(|&v| l[v].clone()).collect());
        }
        Ok(Reindexed { graph, old_to_new })
    }

    /// `G - S`.
    pub fn delete_vertices(&self, s: VertexSet) -> Result<Reindexed> {
        self.check_set(s)?;
        self.induced(s.complement(self.n))
    }

    /// `G - F`; fails if some pair in `F` is not an edge.
    pub fn delete_edges(&self, f: &EdgeSet) -> Result<Graph> {
        let mut g = self.clone();
        for e in f.iter() {
            if !self.has_edge(e.0, e.1) {
                return Err(Error::NotAnEdge { u: e.0, v: e.1 });
            }
            g.toggle(e.0, e.1);
        }
        Ok(g)
    }

    /// The complement graph.
    pub fn complement(&self) -> Graph {
        let full = VertexSet::full(self.n).bits();
        let rows = (0..self.n)
            .map(|v| !self.adj[v] & full & !(1u64 << v))
            .collect();
        let mut g = Graph::from_rows_unchecked(rows);
        g.labels = self.labels.clone();
        g
    }

    /// Connected components, ordered by their smallest vertex.
    pub fn components(&self) -> Vec<VertexSet> {
        self.components_within(self.vertices())
    }

    /// Components of `G[within]`.
    pub fn components_within(&self, within: VertexSet) -> Vec<VertexSet> {
        let mut left = within.bits();
        let mut out = Vec::new();
        while left != 0 {
            let start = left.trailing_zeros() as usize;
            let comp = self.reach(start, VertexSet(within.bits()));
            left &= !comp.bits();
            out.push(comp);
        }
        out
    }

    /// Vertices reachable from `start` inside `within`.
    pub fn reach(&self, start: usize, within: VertexSet) -> VertexSet {
        let mut seen = 1u64 << start;
        let mut frontier = seen;
        while frontier != 0 {
            let mut next = 0u64;
            for v in VertexSet(frontier) {
                next |= self.adj[v];
            }
            next &= within.bits() & !seen;
            seen |= next;
            frontier = next;
        }
        VertexSet(seen)
    }

    pub fn is_connected(&self) -> bool {
        self.n == 0 || self.reach(0, self.vertices()) == self.vertices()
    }

    /// True iff no two vertices of `s` are adjacent.
    pub fn is_independent(&self, s: VertexSet) -> bool {
        s.iter().all(|v| self.adj[v] & s.bits() == 0)
    }
}

fn check_order(n: usize) -> Result<()> {
    if n > MAX_VERTICES {
        Err(Error::ResourceLimit {
            what: "vertex count",
            size: n,
            limit: MAX_VERTICES,
        })
    } else {
        Ok(())
    }
}

/// Packs the bits of `word` selected by `mask` into the low bits, keeping
/// their order.
pub(crate) fn compress(word: u64, mask: u64) -> u64 {
    let mut out = 0u64;
    for (i, v) in VertexSet(mask).iter().enumerate() {
        out |= (word >> v & 1) << i;
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p4() -> Graph {
        Graph::from_edges(4, &[(0, 1), (1, 2), (2, 3)]).unwrap()
    }

    #[test]
    fn rejects_loops_and_big_orders() {
        assert!(Graph::from_edges(3, &[(1, 1)]).is_err());
        assert!(Graph::empty(64).is_err());
        assert!(Graph::empty(63).is_ok());
        assert!(Graph::from_rows(vec![0b10, 0]).is_err());
    }

    #[test]
    fn edges_are_sorted() {
        assert_eq!(p4().edges(), vec![Edge(0, 1), Edge(1, 2), Edge(2, 3)]);
        assert_eq!(p4().edge_count(), 3);
    }

    #[test]
    fn induced_reindexes() {
        let r = p4().induced(VertexSet::from_slice(&[1, 2, 3])).unwrap();
        assert_eq!(r.graph.edges(), vec![Edge(0, 1), Edge(1, 2)]);
        assert_eq!(r.old_to_new, vec![None, Some(0), Some(1), Some(2)]);
    }

    #[test]
    fn delete_edges_checks_membership() {
        let g = p4();
        let f: EdgeSet = [Edge(0, 1)].into_iter().collect();
        assert_eq!(g.delete_edges(&f).unwrap().edge_count(), 2);
        let bad: EdgeSet = [Edge(0, 2)].into_iter().collect();
        assert_eq!(g.delete_edges(&bad), Err(Error::NotAnEdge { u: 0, v: 2 }));
    }

    #[test]
    fn complement_twice_is_identity() {
        let g = p4();
        assert_eq!(g.complement().complement(), g);
        assert_eq!(g.complement().edge_count(), 3);
    }

    #[test]
    fn components_and_swap() {
        let g = Graph::from_edges(5, &[(0, 1), (3, 4)]).unwrap();
        let c = g.components();
        assert_eq!(c.len(), 3);
        assert_eq!(c[1].to_vec(), vec![2]);
        // reversing a path is an automorphism
        let mut h = p4();
        h.swap_vertices(0, 3);
        h.swap_vertices(1, 2);
        assert_eq!(h, p4());
        h.swap_vertices(0, 1);
        assert!(h.has_edge(0, 2) && h.has_edge(1, 0) && h.has_edge(2, 3));
    }
}
