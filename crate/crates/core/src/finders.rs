//! Combinatorial finders: Tutte bridges, sunflowers, monochromatic cliques,
//! unavoidable bipartite patterns and the degree-or-induced-path dichotomy.
//!
//! Every positive answer comes with a certificate, and each certificate
//! type has a `check_*` function that validates it from scratch.

use alloc::vec;
use alloc::vec::Vec;

use crate::error::{invalid, Result};
use crate::family::JoinKind;
use crate::graph::{Graph, Reindexed};
use crate::set::{Edge, EdgeSet, VertexSet};

/// A Tutte bridge of `A`: a single edge with both ends in `A`, or a
/// component `C` of `G - A` together with every edge leaving `C`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Bridge {
    pub vertices: VertexSet,
    pub edges: EdgeSet,
    pub attachments: VertexSet,
}

/// All Tutte bridges of `a` in `g`. Components of `G - A` without edges
/// (isolated vertices with no neighbour in `A`) carry no edges and are not
/// listed, so the bridges partition `E(G)`.
pub fn tutte_bridges(g: &Graph, a: VertexSet) -> Result<Vec<Bridge>> {
    g.check_set(a)?;
    let mut out = Vec::new();
    for e in g.edges() {
        if a.contains(e.0) && a.contains(e.1) {
            out.push(Bridge {
                vertices: e.ends(),
                edges: [e].into_iter().collect(),
                attachments: e.ends(),
            });
        }
    }
    let rest = a.complement(g.n());
    for comp in g.components_within(rest) {
        let mut edges = EdgeSet::new();
        let mut attach = VertexSet::EMPTY;
        for v in comp {
            for u in g.neighbors(v) {
                if comp.contains(u) || a.contains(u) {
                    edges.insert(Edge::new(u, v));
                }
                if a.contains(u) {
                    attach.insert(u);
                }
            }
        }
        if !edges.is_empty() {
            out.push(Bridge {
                vertices: comp.union(attach),
                edges,
                attachments: attach,
            });
        }
    }
    Ok(out)
}

/// Classes of the relation on `E(G)` generated by "two edges share an end
/// outside `A`". This is the second description of Tutte bridges.
pub fn edge_classes_avoiding(g: &Graph, a: VertexSet) -> Vec<EdgeSet> {
    let edges = g.edges();
    let m = edges.len();
    let mut parent: Vec<usize> = (0..m).collect();
    fn find(p: &mut [usize], x: usize) -> usize {
        let mut r = x;
        while p[r] != r {
            r = p[r];
        }
        let mut c = x;
        while p[c] != r {
            let next = p[c];
            p[c] = r;
            c = next;
        }
        r
    }
    for v in a.complement(g.n()) {
        let incident: Vec<usize> = (0..m)
            .filter(|&i| edges[i].0 == v || edges[i].1 == v)
            .collect();
        for w in incident.windows(2) {
            let (x, y) = (find(&mut parent, w[0]), find(&mut parent, w[1]));
            parent[x] = y;
        }
    }
    let mut classes: Vec<(usize, EdgeSet)> = Vec::new();
    for i in 0..m {
        let r = find(&mut parent, i);
        match classes.iter_mut().find(|(root, _)| *root == r) {
            Some((_, set)) => {
                set.insert(edges[i]);
            }
            None => classes.push((r, [edges[i]].into_iter().collect())),
        }
    }
    classes.into_iter().map(|(_, s)| s).collect()
}

/// Deletes every bridge of `a` with at most `max_edges` edges: its edges
/// and its vertices outside `a`. Vertices of `a` always survive.
pub fn delete_bridges(g: &Graph, a: VertexSet, max_edges: usize) -> Result<Reindexed> {
    let mut h = g.clone();
    let mut dead = VertexSet::EMPTY;
    for b in tutte_bridges(g, a)? {
        if b.edges.len() <= max_edges {
            for e in b.edges.iter() {
                h.remove_edge(e.0, e.1)?;
            }
            dead = dead.union(b.vertices.difference(a));
        }
    }
    h.delete_vertices(dead)
}

/// A family of finite subsets of `0..64`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SetFamily {
    pub sets: Vec<VertexSet>,
}

impl SetFamily {
    pub fn new(sets: Vec<VertexSet>) -> Self {
        SetFamily { sets }
    }

    pub fn from_slices(sets: &[&[usize]]) -> Self {
        SetFamily::new(sets.iter().map(|s| VertexSet::from_slice(s)).collect())
    }

    pub fn len(&self) -> usize {
        self.sets.len()
    }

    pub fn is_empty(&self) -> bool {
        self.sets.is_empty()
    }
}

/// `p` distinct members whose pairwise intersections all equal `core`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Sunflower {
    pub core: VertexSet,
    pub petals: Vec<usize>,
}

/// Searches for a sunflower with `p` petals. The core of a sunflower with
/// at least two petals is the intersection of any two of them, so only
/// pairwise intersections (and the empty set) are tried as cores.
pub fn find_sunflower(f: &SetFamily, p: usize) -> Option<Sunflower> {
    if p == 0 {
        return Some(Sunflower {
            core: VertexSet::EMPTY,
            petals: Vec::new(),
        });
    }
    // one representative per distinct set
    let mut reps: Vec<usize> = Vec::new();
    for (i, s) in f.sets.iter().enumerate() {
        if !reps.iter().any(|&j| f.sets[j] == *s) {
            reps.push(i);
        }
    }
    if p == 1 {
        return reps.first().map(|&i| Sunflower {
            core: f.sets[i],
            petals: vec![i],
        });
    }
    let mut cores = vec![VertexSet::EMPTY];
    for (x, &i) in reps.iter().enumerate() {
        for &j in &reps[x + 1..] {
            let c = f.sets[i].intersection(f.sets[j]);
            if !cores.contains(&c) {
                cores.push(c);
            }
        }
    }
    for core in cores {
        let cands: Vec<(usize, u64)> = reps
            .iter()
            .filter(|&&i| core.is_subset(f.sets[i]))
            .map(|&i| (i, f.sets[i].difference(core).bits()))
            .collect();
        if cands.len() < p {
            continue;
        }
        let mut chosen = Vec::with_capacity(p);
        if disjoint_pick(&cands, 0, 0, p, &mut chosen) {
            return Some(Sunflower {
                core,
                petals: chosen,
            });
        }
    }
    None
}

fn disjoint_pick(
    cands: &[(usize, u64)],
    from: usize,
    used: u64,
    p: usize,
    chosen: &mut Vec<usize>,
) -> bool {
    if chosen.len() == p {
        return true;
    }
    if cands.len() - from < p - chosen.len() {
        return false;
    }
    for i in from..cands.len() {
        let (idx, res) = cands[i];
        if res & used == 0 {
            chosen.push(idx);
            if disjoint_pick(cands, i + 1, used | res, p, chosen) {
                return true;
            }
            chosen.pop();
        }
    }
    false
}

pub fn check_sunflower(f: &SetFamily, s: &Sunflower, p: usize) -> bool {
    if s.petals.len() != p || s.petals.iter().any(|&i| i >= f.len()) {
        return false;
    }
    for (x, &i) in s.petals.iter().enumerate() {
        if !s.core.is_subset(f.sets[i]) {
            return false;
        }
        for &j in &s.petals[x + 1..] {
            if f.sets[i] == f.sets[j] || f.sets[i].intersection(f.sets[j]) != s.core {
                return false;
            }
        }
    }
    true
}

/// A colouring of the edges of `K_N` with colours `0..colors`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EdgeColoring {
    n: usize,
    colors: usize,
    // colour of {u, v}, u < v, at index u * n + v
    table: Vec<u8>,
}

impl EdgeColoring {
    pub fn new(n: usize, colors: usize, mut color: impl FnMut(usize, usize) -> usize) -> Result<Self> {
        if n > 64 {
            return Err(invalid("edge colorings support at most 64 vertices"));
        }
        if colors == 0 || colors > 255 {
            return Err(invalid("number of colors must be in 1..=255"));
        }
        let mut table = vec![0u8; n * n];
        for u in 0..n {
            for v in u + 1..n {
                let c = color(u, v);
                if c >= colors {
                    return Err(invalid("color out of range"));
                }
                table[u * n + v] = c as u8;
            }
        }
        Ok(EdgeColoring { n, colors, table })
    }

    /// Two colours: edges of `g` get colour 1, non-edges colour 0.
    pub fn from_graph(g: &Graph) -> Self {
        EdgeColoring::new(g.n(), 2, |u, v| g.has_edge(u, v) as usize).expect("valid")
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn colors(&self) -> usize {
        self.colors
    }

    pub fn color(&self, u: usize, v: usize) -> usize {
        let (a, b) = if u < v { (u, v) } else { (v, u) };
        self.table[a * self.n + b] as usize
    }

    fn class(&self, c: usize) -> Vec<u64> {
        let mut rows = vec![0u64; self.n];
        for u in 0..self.n {
            for v in u + 1..self.n {
                if self.color(u, v) == c {
                    rows[u] |= 1 << v;
                    rows[v] |= 1 << u;
                }
            }
        }
        rows
    }
}

/// Looks for `n` vertices all of whose pairs share one colour.
pub fn find_mono_clique(c: &EdgeColoring, n: usize) -> Option<(VertexSet, usize)> {
    if n > c.order() {
        return None;
    }
    if n <= 1 {
        return Some((VertexSet::full(n), 0));
    }
    for color in 0..c.colors() {
        let rows = c.class(color);
        if let Some(s) = clique(&rows, VertexSet::full(c.order()).bits(), 0, n) {
            return Some((VertexSet(s), color));
        }
    }
    None
}

fn clique(rows: &[u64], cand: u64, have: u64, need: usize) -> Option<u64> {
    if need == 0 {
        return Some(have);
    }
    if (cand.count_ones() as usize) < need {
        return None;
    }
    let mut rest = cand;
    while rest != 0 {
        let v = rest.trailing_zeros() as usize;
        rest &= rest - 1;
        if let Some(s) = clique(rows, rest & rows[v], have | 1 << v, need - 1) {
            return Some(s);
        }
        if (rest.count_ones() as usize) < need {
            break;
        }
    }
    None
}

pub fn check_mono_clique(c: &EdgeColoring, n: usize, s: VertexSet, color: usize) -> bool {
    let vs = s.to_vec();
    vs.len() == n
        && vs.iter().all(|&v| v < c.order())
        && vs
            .iter()
            .enumerate()
            .all(|(i, &u)| vs[i + 1..].iter().all(|&v| c.color(u, v) == color))
}

/// Aligned tuples `s`, `t` with `s[i] ~ t[j]` exactly when
/// `kind.crosses(i, j)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BiPattern {
    pub s: Vec<usize>,
    pub t: Vec<usize>,
    pub kind: JoinKind,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TrichotomyReport {
    /// Whether all of `S` (and all of `T`) have pairwise different
    /// neighbourhoods on the other side. Reported only.
    pub distinct_neighborhoods: bool,
    pub witness: Option<BiPattern>,
}

/// Searches the cross edges between `s` and `t` for one of the three
/// canonical `n`-by-`n` patterns, trying matching, half-graph and
/// anti-matching in that order.
pub fn bipartite_trichotomy(
    g: &Graph,
    s: VertexSet,
    t: VertexSet,
    n: usize,
) -> Result<TrichotomyReport> {
    g.check_set(s)?;
    g.check_set(t)?;
    if !s.intersection(t).is_empty() {
        return Err(invalid("S and T must be disjoint"));
    }
    let distinct = |side: VertexSet, other: VertexSet| {
        let nbs: Vec<u64> = side.iter().map(|v| g.rows()[v] & other.bits()).collect();
        nbs.iter()
            .enumerate()
            .all(|(i, a)| !nbs[i + 1..].contains(a))
    };
    let distinct_neighborhoods = distinct(s, t) && distinct(t, s);
    let mut witness = None;
    for kind in [JoinKind::Mat, JoinKind::Tri, JoinKind::AntiMat] {
        let mut st = (Vec::with_capacity(n), Vec::with_capacity(n));
        if align(g, s, t, n, kind, &mut st) {
            witness = Some(BiPattern {
                s: st.0,
                t: st.1,
                kind,
            });
            break;
        }
    }
    Ok(TrichotomyReport {
        distinct_neighborhoods,
        witness,
    })
}

// Chooses s_1, t_1, s_2, t_2, ... keeping every fixed pair consistent.
// Matching and anti-matching are symmetric under simultaneous reordering,
// so there the s side is taken in increasing order.
fn align(
    g: &Graph,
    s: VertexSet,
    t: VertexSet,
    n: usize,
    kind: JoinKind,
    st: &mut (Vec<usize>, Vec<usize>),
) -> bool {
    let i = st.1.len();
    if i == n {
        return true;
    }
    if st.0.len() == i {
        let floor = match (kind, st.0.last()) {
            (JoinKind::Tri, _) | (_, None) => 0,
            (_, Some(&last)) => last + 1,
        };
        let used: VertexSet = st.0.iter().copied().collect();
        for a in s.difference(used).iter().filter(|&a| a >= floor) {
            let ok = st
                .1
                .iter()
                .enumerate()
                .all(|(j, &b)| g.has_edge(a, b) == kind.crosses(i, j));
            if ok {
                st.0.push(a);
                if align(g, s, t, n, kind, st) {
                    return true;
                }
                st.0.pop();
            }
        }
        false
    } else {
        let used: VertexSet = st.1.iter().copied().collect();
        for b in t.difference(used) {
            let ok = st
                .0
                .iter()
                .enumerate()
                .all(|(j, &a)| g.has_edge(a, b) == kind.crosses(j, i));
            if ok {
                st.1.push(b);
                if align(g, s, t, n, kind, st) {
                    return true;
                }
                st.1.pop();
            }
        }
        false
    }
}

pub fn check_bipattern(g: &Graph, s: VertexSet, t: VertexSet, n: usize, w: &BiPattern) -> bool {
    let sv: VertexSet = w.s.iter().copied().collect();
    let tv: VertexSet = w.t.iter().copied().collect();
    w.s.len() == n
        && w.t.len() == n
        && sv.len() == n
        && tv.len() == n
        && sv.is_subset(s)
        && tv.is_subset(t)
        && (0..n).all(|i| (0..n).all(|j| g.has_edge(w.s[i], w.t[j]) == w.kind.crosses(i, j)))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum DegreeOrPath {
    HighDegree(usize),
    InducedPath(Vec<usize>),
    Absent,
}

/// Order from which a connected graph with maximum degree below `k > 3`
/// must contain an induced path on `l` vertices:
/// `ceil((k-1)/(k-3) * (k-2)^(l-2))`. `None` when `k <= 3` or on overflow.
pub fn degree_or_path_threshold(k: usize, l: usize) -> Option<u128> {
    if k <= 3 {
        return None;
    }
    if l < 2 {
        return Some(1);
    }
    let pow = (k as u128 - 2).checked_pow((l - 2) as u32)?;
    let num = (k as u128 - 1).checked_mul(pow)?;
    let den = k as u128 - 3;
    Some(num.div_ceil(den))
}

/// A vertex of degree at least `k`, else an induced path on `l` vertices.
pub fn degree_or_path(g: &Graph, k: usize, l: usize) -> DegreeOrPath {
    if let Some(v) = g.vertices().iter().find(|&v| g.degree(v) >= k) {
        return DegreeOrPath::HighDegree(v);
    }
    if l == 0 {
        return DegreeOrPath::InducedPath(Vec::new());
    }
    let mut path = Vec::with_capacity(l);
    for v in g.vertices() {
        path.push(v);
        if extend_path(g, l, 1u64 << v, 0, &mut path) {
            return DegreeOrPath::InducedPath(path);
        }
        path.pop();
    }
    DegreeOrPath::Absent
}

// `blocked` covers every path vertex before the last one together with its
// neighbours; a new end must avoid all of them.
fn extend_path(g: &Graph, l: usize, on: u64, blocked: u64, path: &mut Vec<usize>) -> bool {
    if path.len() == l {
        return true;
    }
    let last = *path.last().expect("nonempty");
    let nb = g.rows()[last];
    for w in VertexSet(nb & !on & !blocked) {
        path.push(w);
        let prev_block = blocked | nb | (1u64 << last);
        if extend_path(g, l, on | 1 << w, prev_block, path) {
            return true;
        }
        path.pop();
    }
    false
}

pub fn check_degree_or_path(g: &Graph, k: usize, l: usize, c: &DegreeOrPath) -> bool {
    match c {
        DegreeOrPath::HighDegree(v) => *v < g.n() && g.degree(*v) >= k,
        DegreeOrPath::InducedPath(p) => check_induced_path(g, p) && p.len() == l,
        DegreeOrPath::Absent => false,
    }
}

/// Distinct vertices, consecutive ones adjacent, no other adjacencies.
pub fn check_induced_path(g: &Graph, p: &[usize]) -> bool {
    if p.iter().any(|&v| v >= g.n()) {
        return false;
    }
    let set: VertexSet = p.iter().copied().collect();
    if set.len() != p.len() {
        return false;
    }
    (0..p.len()).all(|i| (i + 1..p.len()).all(|j| g.has_edge(p[i], p[j]) == (j == i + 1)))
}
