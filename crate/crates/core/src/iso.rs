//! Isomorphism, canonical forms and induced / non-induced pattern search.
//!
//! Canonical forms use colour refinement followed by individualisation of
//! the first non-trivial cell, keeping the lexicographically smallest
//! adjacency encoding over all leaves. Vertices of a cell that are twins
//! (same neighbourhood apart from each other) are interchangeable by an
//! automorphism, so only one of them is branched on. This is exponential
//! on highly symmetric graphs but fine at the orders used here.

use alloc::collections::BTreeSet;
use alloc::vec;
use alloc::vec::Vec;

use crate::graph::Graph;
use crate::set::{Edge, EdgeSet, VertexSet};

/// The adjacency rows of a graph under its canonical labelling.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalForm(pub Vec<u64>);

/// Canonical form and the labelling that produces it (`perm[v]` is the
/// canonical index of `v`).
pub fn canonical_labeling(g: &Graph) -> (CanonicalForm, Vec<usize>) {
    let n = g.n();
    if n == 0 {
        return (CanonicalForm(Vec::new()), Vec::new());
    }
    let mut colors: Vec<u32> = {
        let mut by_degree: Vec<(usize, usize)> = (0..n).map(|v| (g.degree(v), v)).collect();
        by_degree.sort_unstable();
        let mut c = vec![0u32; n];
        let mut start = 0;
        for (i, &(d, v)) in by_degree.iter().enumerate() {
            if i > 0 && by_degree[i - 1].0 != d {
                start = i;
            }
            c[v] = start as u32;
        }
        c
    };
    refine(g, &mut colors);
    let mut best: Option<(Vec<u64>, Vec<usize>)> = None;
    search(g, colors, &mut best);
    let (code, perm) = best.expect("at least one leaf");
    (CanonicalForm(code), perm)
}

pub fn canonical_form(g: &Graph) -> CanonicalForm {
    canonical_labeling(g).0
}

/// The canonical representative itself as a graph.
pub fn canonical_graph(g: &Graph) -> Graph {
    Graph::from_rows_unchecked(canonical_form(g).0)
}

/// Refines an ordered partition (colour = start index of the cell) until
/// equitable.
fn refine(g: &Graph, colors: &mut [u32]) {
    let n = g.n();
    loop {
        let mut changed = false;
        let mut sig: Vec<(u32, Vec<u32>, usize)> = (0..n)
            .map(|v| {
                let mut s: Vec<u32> = g.neighbors(v).iter().map(|u| colors[u]).collect();
                s.sort_unstable();
                (colors[v], s, v)
            })
            .collect();
        sig.sort_unstable();
        for i in 0..n {
            let (c, ref s, v) = sig[i];
            let new = if i > 0 && sig[i - 1].0 == c {
                if sig[i - 1].1 == *s {
                    colors[sig[i - 1].2]
                } else {
                    i as u32
                }
            } else {
                c
            };
            if new != colors[v] {
                changed = true;
            }
            colors[v] = new;
        }
        if !changed {
            return;
        }
    }
}

fn search(g: &Graph, colors: Vec<u32>, best: &mut Option<(Vec<u64>, Vec<usize>)>) {
    let n = g.n();
    // find the first non-singleton cell
    let mut count = vec![0u32; n];
    for &c in &colors {
        count[c as usize] += 1;
    }
    let target = (0..n).find(|&c| count[c] > 1);
    let Some(cell) = target else {
        let perm: Vec<usize> = colors.iter().map(|&c| c as usize).collect();
        let mut code = vec![0u64; n];
        for v in 0..n {
            let mut row = 0u64;
            for u in g.neighbors(v) {
                row |= 1u64 << perm[u];
            }
            code[perm[v]] = row;
        }
        match best {
            Some((b, _)) if *b <= code => {}
            _ => *best = Some((code, perm)),
        }
        return;
    };
    let members: Vec<usize> = (0..n).filter(|&v| colors[v] as usize == cell).collect();
    let mut tried: Vec<usize> = Vec::new();
    for &v in &members {
        let twin_of_tried = tried.iter().any(|&u| {
            g.rows()[u] & !(1u64 << v) == g.rows()[v] & !(1u64 << u)
        });
        if twin_of_tried {
            continue;
        }
        tried.push(v);
        let mut next = colors.clone();
        for &u in &members {
            if u != v {
                next[u] = cell as u32 + 1;
            }
        }
        refine(g, &mut next);
        search(g, next, best);
    }
}

pub fn is_isomorphic(g: &Graph, h: &Graph) -> bool {
    if g.n() != h.n() || g.edge_count() != h.edge_count() {
        return false;
    }
    if g.degree_sequence() != h.degree_sequence() {
        return false;
    }
    canonical_form(g) == canonical_form(h)
}

/// All pairwise non-isomorphic graphs on `n` vertices (`n <= 7`), each as
/// its canonical representative, sorted by edge count then code.
pub fn enumerate_graphs(n: usize) -> Vec<Graph> {
    assert!(n <= 7, "exhaustive enumeration is limited to 7 vertices");
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .collect();
    let mut seen: BTreeSet<(usize, CanonicalForm)> = BTreeSet::new();
    for mask in 0u64..(1u64 << pairs.len()) {
        let mut rows = vec![0u64; n];
        for (i, &(u, v)) in pairs.iter().enumerate() {
            if mask >> i & 1 == 1 {
                rows[u] |= 1u64 << v;
                rows[v] |= 1u64 << u;
            }
        }
        let g = Graph::from_rows_unchecked(rows);
        seen.insert((g.edge_count(), canonical_form(&g)));
    }
    seen.into_iter()
        .map(|(_, c)| Graph::from_rows_unchecked(c.0))
        .collect()
}

/// A map from the pattern's vertices into the host graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Embedding {
    /// `map[h]` is the host vertex hosting pattern vertex `h`.
    pub map: Vec<usize>,
}

impl Embedding {
    pub fn vertex_set(&self) -> VertexSet {
        self.map.iter().copied().collect()
    }

    /// Images of the pattern's edges.
    pub fn edge_image(&self, pattern: &Graph) -> EdgeSet {
        pattern
            .edges()
            .into_iter()
            .map(|e| Edge::new(self.map[e.0], self.map[e.1]))
            .collect()
    }

    /// Checks injectivity and that pattern edges land on host edges (and,
    /// when `induced`, non-edges on non-edges).
    pub fn certifies(&self, host: &Graph, pattern: &Graph, induced: bool) -> bool {
        if self.map.len() != pattern.n() || self.map.iter().any(|&x| x >= host.n()) {
            return false;
        }
        if self.vertex_set().len() != self.map.len() {
            return false;
        }
        for a in 0..pattern.n() {
            for b in a + 1..pattern.n() {
                let ph = pattern.has_edge(a, b);
                let gh = host.has_edge(self.map[a], self.map[b]);
                if ph && !gh || induced && !ph && gh {
                    return false;
                }
            }
        }
        true
    }
}

/// Finds `H` as an induced subgraph of `G`.
pub fn find_induced_pattern(g: &Graph, h: &Graph) -> Option<Embedding> {
    find_pattern(g, h, true)
}

/// Finds `H` as a (not necessarily induced) subgraph of `G`.
pub fn find_subgraph_pattern(g: &Graph, h: &Graph) -> Option<Embedding> {
    find_pattern(g, h, false)
}

fn find_pattern(g: &Graph, h: &Graph, induced: bool) -> Option<Embedding> {
    if h.n() > g.n() || !induced && h.edge_count() > g.edge_count() {
        return None;
    }
    if h.n() == 0 {
        return Some(Embedding { map: Vec::new() });
    }
    let order = match_order(h);
    let mut map = vec![usize::MAX; h.n()];
    let max_host_degree = (0..g.n()).map(|v| g.degree(v)).max().unwrap_or(0);
    if (0..h.n()).any(|v| h.degree(v) > max_host_degree) {
        return None;
    }
    if extend(g, h, &order, 0, 0, &mut map, induced) {
        Some(Embedding { map })
    } else {
        None
    }
}

/// Pattern vertices ordered so each one has as many earlier neighbours as
/// possible, starting from a maximum-degree vertex.
fn match_order(h: &Graph) -> Vec<usize> {
    let mut order = Vec::with_capacity(h.n());
    let mut placed = 0u64;
    while order.len() < h.n() {
        let next = (0..h.n())
            .filter(|&v| placed >> v & 1 == 0)
            .max_by_key(|&v| {
                (
                    (h.rows()[v] & placed).count_ones(),
                    h.degree(v),
                    core::cmp::Reverse(v),
                )
            })
            .expect("unplaced vertex");
        placed |= 1u64 << next;
        order.push(next);
    }
    order
}

fn extend(
    g: &Graph,
    h: &Graph,
    order: &[usize],
    depth: usize,
    used: u64,
    map: &mut [usize],
    induced: bool,
) -> bool {
    if depth == order.len() {
        return true;
    }
    let hv = order[depth];
    let mut cand = g.vertices().bits() & !used;
    for &prev in &order[..depth] {
        let row = g.rows()[map[prev]];
        if h.has_edge(hv, prev) {
            cand &= row;
        } else if induced {
            cand &= !row;
        }
    }
    let need = h.degree(hv);
    for c in VertexSet(cand) {
        if g.degree(c) < need {
            continue;
        }
        map[hv] = c;
        if extend(g, h, order, depth + 1, used | 1u64 << c, map, induced) {
            return true;
        }
    }
    map[hv] = usize::MAX;
    false
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::family::*;

    #[test]
    fn isomorphism_examples() {
        let tri = join(&edgeless(2), &edgeless(2), JoinKind::Tri).unwrap();
        assert!(is_isomorphic(&path(4), &tri));
        assert!(!is_isomorphic(&complete(3), &path(3)));
        let q = quotient_family(&QuotientSpec::new(path(3), 2, VertexSet::from_slice(&[0, 2])))
            .unwrap();
        assert!(is_isomorphic(&cycle(4), &q));
        let a = join(&edgeless(3), &edgeless(3), JoinKind::AntiMat).unwrap();
        assert!(is_isomorphic(&cycle(6), &a));
    }

    #[test]
    fn graph_counts() {
        let counts: Vec<usize> = (0..=6).map(|n| enumerate_graphs(n).len()).collect();
        assert_eq!(counts, vec![1, 1, 2, 4, 11, 34, 156]);
    }

    #[test]
    fn induced_pattern_examples() {
        let e = find_induced_pattern(&path(5), &path(3)).unwrap();
        assert!(e.certifies(&path(5), &path(3), true));
        assert!(find_induced_pattern(&complete(4), &edgeless(2)).is_none());
        let m = join(&edgeless(3), &edgeless(3), JoinKind::Mat).unwrap();
        let three_k2 = m_copies(&complete(2), 3).unwrap();
        let e = find_induced_pattern(&m, &three_k2).unwrap();
        assert_eq!(e.vertex_set(), m.vertices());
    }

    #[test]
    fn subgraph_pattern_examples() {
        let e = find_subgraph_pattern(&complete(4), &path(4)).unwrap();
        assert!(e.certifies(&complete(4), &path(4), false));
        assert_eq!(e.edge_image(&path(4)).len(), 3);
        assert!(find_subgraph_pattern(&cycle(5), &complete(3)).is_none());
        let two_k2 = m_copies(&complete(2), 2).unwrap();
        assert!(find_subgraph_pattern(&star(5), &two_k2).is_none());
    }

    #[test]
    fn symmetric_graphs_are_cheap() {
        // twin pruning keeps these from exploding
        assert!(is_isomorphic(&edgeless(20), &edgeless(20)));
        assert!(is_isomorphic(&complete(30), &complete(30)));
        let g = m_copies(&complete(2), 8).unwrap();
        let h = g.permute(&(0..16).rev().collect::<Vec<_>>()).unwrap();
        assert!(is_isomorphic(&g, &h));
    }
}
