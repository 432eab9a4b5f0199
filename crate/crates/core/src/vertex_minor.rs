//! Local complementation, pivoting and vertex-minor search.

use alloc::collections::BTreeSet;
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use crate::error::{invalid, Error, Result};
use crate::family::{self, join, JoinKind};
use crate::graph::{Graph, Reindexed};
use crate::iso;
use crate::set::VertexSet;

/// `G * v`: complements the subgraph induced on the neighbourhood of `v`.
pub fn local_complement(g: &Graph, v: usize) -> Result<Graph> {
    g.check_vertex(v)?;
    let mut out = g.clone();
    lc_in_place(&mut out, v);
    Ok(out)
}

#[inline]
fn lc_rows(rows: &mut [u64], v: usize) {
    let nb = rows[v];
    for u in VertexSet(nb) {
        rows[u] ^= nb & !(1u64 << u);
    }
}

fn lc_in_place(g: &mut Graph, v: usize) {
    let nb = g.neighbors(v);
    let list = nb.to_vec();
    for (i, &x) in list.iter().enumerate() {
        for &y in &list[i + 1..] {
            g.toggle(x, y);
        }
    }
}

/// `G ∧ uv` computed directly: every pair `x, y` lying in two different
/// classes among `N(u) \ N[v]`, `N(v) \ N[u]` and `N(u) ∩ N(v)` is flipped,
/// then `u` and `v` exchange places. Equals `G * u * v * u`.
pub fn pivot(g: &Graph, u: usize, v: usize) -> Result<Graph> {
    g.check_vertex(u)?;
    g.check_vertex(v)?;
    if !g.has_edge(u, v) {
        return Err(Error::NotAnEdge { u, v });
    }
    let nu = g.rows()[u];
    let nv = g.rows()[v];
    let only_u = nu & !nv & !(1u64 << v);
    let only_v = nv & !nu & !(1u64 << u);
    let both = nu & nv;
    let mut out = g.clone();
    for (class, others) in [
        (only_u, only_v | both),
        (only_v, only_u | both),
        (both, only_u | only_v),
    ] {
        for x in VertexSet(class) {
            for y in VertexSet(others) {
                if x < y {
                    out.toggle(x, y);
                }
            }
        }
    }
    out.swap_vertices(u, v);
    Ok(out)
}

/// One step of a vertex-minor word. Vertex numbers always refer to the
/// graph the word is first applied to, even after deletions.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum LcOp {
    Lc(usize),
    Pivot(usize, usize),
    Delete(usize),
}

/// A sequence of local complementations, pivots and deletions, applied
/// left to right. Text form: `lc 0; pv 1 2; del 3`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct LcWord(pub Vec<LcOp>);

impl LcWord {
    pub fn new() -> Self {
        LcWord(Vec::new())
    }

    pub fn push(&mut self, op: LcOp) {
        self.0.push(op);
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn deletions(&self) -> usize {
        self.0
            .iter()
            .filter(|op| matches!(op, LcOp::Delete(_)))
            .count()
    }

    pub fn prefix(&self, len: usize) -> LcWord {
        LcWord(self.0[..len].to_vec())
    }

    /// Applies the word; survivors keep their relative order.
    pub fn apply(&self, g: &Graph) -> Result<Reindexed> {
        let mut cur = g.clone();
        let mut alive = g.vertices();
        let check = |alive: VertexSet, v: usize| -> Result<()> {
            g.check_vertex(v)?;
            if alive.contains(v) {
                Ok(())
            } else {
                Err(invalid(format!("vertex {v} was already deleted")))
            }
        };
        for &op in &self.0 {
            match op {
                LcOp::Lc(v) => {
                    check(alive, v)?;
                    lc_in_place(&mut cur, v);
                }
                LcOp::Pivot(u, v) => {
                    check(alive, u)?;
                    check(alive, v)?;
                    cur = pivot(&cur, u, v)?;
                }
                LcOp::Delete(v) => {
                    check(alive, v)?;
                    for u in cur.neighbors(v) {
                        cur.toggle(u, v);
                    }
                    alive.remove(v);
                }
            }
        }
        cur.induced(alive)
    }
}

impl fmt::Display for LcWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, op) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str("; ")?;
            }
            match op {
                LcOp::Lc(v) => write!(f, "lc {v}")?,
                LcOp::Pivot(u, v) => write!(f, "pv {u} {v}")?,
                LcOp::Delete(v) => write!(f, "del {v}")?,
            }
        }
        Ok(())
    }
}

impl FromStr for LcWord {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let mut word = LcWord::new();
        for tok in s.split(';').map(str::trim).filter(|t| !t.is_empty()) {
            let mut parts = tok.split_whitespace();
            let op = parts.next().unwrap_or_default();
            let args: Vec<usize> = parts
                .map(|p| {
                    p.parse::<usize>()
                        .map_err(|_| invalid(format!("bad vertex {p:?} in {tok:?}")))
                })
                .collect::<Result<_>>()?;
            word.push(match (op, args.as_slice()) {
                ("lc", [v]) => LcOp::Lc(*v),
                ("pv", [u, v]) => LcOp::Pivot(*u, *v),
                ("del", [v]) => LcOp::Delete(*v),
                _ => return Err(invalid(format!("cannot parse operation {tok:?}"))),
            });
        }
        Ok(word)
    }
}

/// Default cap on explored states.
pub const DEFAULT_STATE_LIMIT: usize = 2_000_000;

/// Orders from which orbit states are deduplicated up to isomorphism.
pub const ISO_DEDUP_FROM: usize = 8;

/// Largest order the orbit search accepts (states are packed into 128 bits).
pub const MAX_ORBIT_ORDER: usize = 16;

fn pack(rows: &[u64]) -> u128 {
    let mut key = 0u128;
    let mut bit = 0;
    for (v, &row) in rows.iter().enumerate() {
        for u in v + 1..rows.len() {
            key |= ((row >> u & 1) as u128) << bit;
            bit += 1;
        }
    }
    key
}

fn unpack(key: u128, n: usize, rows: &mut [u64]) {
    rows[..n].iter_mut().for_each(|r| *r = 0);
    let mut bit = 0;
    for v in 0..n {
        for u in v + 1..n {
            if key >> bit & 1 == 1 {
                rows[v] |= 1u64 << u;
                rows[u] |= 1u64 << v;
            }
            bit += 1;
        }
    }
}

/// Breadth-first exploration of the graphs locally equivalent to a seed.
///
/// States are stored as labelled graphs with a parent pointer, so every
/// state comes with the word of local complementations that reaches it.
/// From [`ISO_DEDUP_FROM`] vertices on, a state is skipped when an
/// isomorphic one was already seen.
pub struct OrbitSearch {
    n: usize,
    states: Vec<u128>,
    parent: Vec<(u32, u8)>,
    seen: BTreeSet<u128>,
    head: usize,
    yielded: usize,
    limit: usize,
    limit_hit: bool,
    iso_dedup: bool,
}

impl OrbitSearch {
    pub fn new(seed: &Graph, limit: usize) -> Result<Self> {
        let n = seed.n();
        if n > MAX_ORBIT_ORDER {
            return Err(Error::ResourceLimit {
                what: "orbit graph order",
                size: n,
                limit: MAX_ORBIT_ORDER,
            });
        }
        let mut s = OrbitSearch {
            n,
            states: Vec::new(),
            parent: Vec::new(),
            seen: BTreeSet::new(),
            head: 0,
            yielded: 0,
            limit: limit.max(1),
            limit_hit: false,
            iso_dedup: n >= ISO_DEDUP_FROM,
        };
        s.offer(pack(seed.rows()), (u32::MAX, 0));
        Ok(s)
    }

    fn dedup_key(&self, key: u128) -> u128 {
        if self.iso_dedup {
            let mut rows = [0u64; MAX_ORBIT_ORDER];
            unpack(key, self.n, &mut rows);
            let g = Graph::from_rows_unchecked(rows[..self.n].to_vec());
            pack(&iso::canonical_form(&g).0)
        } else {
            key
        }
    }

    fn offer(&mut self, key: u128, parent: (u32, u8)) -> bool {
        if self.states.len() >= self.limit {
            self.limit_hit = true;
            return false;
        }
        if self.seen.insert(self.dedup_key(key)) {
            self.states.push(key);
            self.parent.push(parent);
            true
        } else {
            false
        }
    }

    /// Expands the next unexpanded state; returns false once nothing is
    /// left to expand.
    fn expand_one(&mut self) -> bool {
        if self.head >= self.states.len() {
            return false;
        }
        let idx = self.head;
        self.head += 1;
        let mut rows = [0u64; MAX_ORBIT_ORDER];
        unpack(self.states[idx], self.n, &mut rows);
        for v in 0..self.n {
            if rows[v].count_ones() < 2 {
                continue;
            }
            let mut next = rows;
            lc_rows(&mut next[..self.n], v);
            self.offer(pack(&next[..self.n]), (idx as u32, v as u8));
        }
        true
    }

    /// Runs until the orbit closes or the state limit is reached.
    pub fn run(mut self) -> Orbit {
        while self.expand_one() {}
        self.finish()
    }

    fn finish(self) -> Orbit {
        Orbit {
            n: self.n,
            states: self.states,
            parent: self.parent,
            complete: !self.limit_hit,
        }
    }

    /// True when the state limit stopped the exploration.
    pub fn limit_hit(&self) -> bool {
        self.limit_hit
    }
}

impl Iterator for OrbitSearch {
    type Item = Graph;

    /// Yields states in breadth-first order, expanding lazily.
    fn next(&mut self) -> Option<Graph> {
        while self.yielded >= self.states.len() {
            if !self.expand_one() {
                return None;
            }
        }
        let i = self.yielded;
        self.yielded += 1;
        Some(state_graph(self.n, self.states[i]))
    }
}

fn state_graph(n: usize, key: u128) -> Graph {
    let mut rows = [0u64; MAX_ORBIT_ORDER];
    unpack(key, n, &mut rows);
    Graph::from_rows_unchecked(rows[..n].to_vec())
}

/// A (possibly truncated) local-equivalence class.
pub struct Orbit {
    n: usize,
    states: Vec<u128>,
    parent: Vec<(u32, u8)>,
    complete: bool,
}

impl Orbit {
    pub fn len(&self) -> usize {
        self.states.len()
    }

    pub fn is_empty(&self) -> bool {
        self.states.is_empty()
    }

    /// False when the state limit truncated the search.
    pub fn is_complete(&self) -> bool {
        self.complete
    }

    pub fn graph(&self, i: usize) -> Graph {
        state_graph(self.n, self.states[i])
    }

    /// Local complementations leading from the seed to state `i`.
    pub fn word(&self, i: usize) -> LcWord {
        let mut ops = Vec::new();
        let mut cur = i;
        while self.parent[cur].0 != u32::MAX {
            let (p, v) = self.parent[cur];
            ops.push(LcOp::Lc(v as usize));
            cur = p as usize;
        }
        ops.reverse();
        LcWord(ops)
    }

    pub fn iter(&self) -> impl Iterator<Item = Graph> + '_ {
        (0..self.len()).map(|i| self.graph(i))
    }

    /// Index of a state isomorphic to `h`.
    pub fn find_isomorphic(&self, h: &Graph) -> Option<usize> {
        if h.n() != self.n {
            return None;
        }
        (0..self.len()).find(|&i| iso::is_isomorphic(&self.graph(i), h))
    }
}

/// The graphs locally equivalent to `g`, up to `limit` states.
pub fn orbit(g: &Graph, limit: usize) -> Result<Orbit> {
    Ok(OrbitSearch::new(g, limit)?.run())
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum VertexMinorOutcome {
    /// The word turns `G` into a graph isomorphic to `H`.
    Found(LcWord),
    /// The orbit closed without a hit: `H` is not a vertex-minor.
    Absent,
    /// The state limit was reached first.
    Inconclusive,
}

/// Searches for `H` as a vertex-minor of `G`.
///
/// Deletions commute with local complementations at other vertices, so it
/// is enough to walk the local-equivalence class of `G` and look for `H` as
/// an induced subgraph of each state. The witness is the local
/// complementations reaching that state followed by deletion of every
/// vertex outside the copy of `H`.
pub fn has_vertex_minor(g: &Graph, h: &Graph, limit: usize) -> Result<VertexMinorOutcome> {
    if h.n() > g.n() {
        return Ok(VertexMinorOutcome::Absent);
    }
    let mut search = OrbitSearch::new(g, limit)?;
    let mut checked = 0;
    loop {
        while checked < search.states.len() {
            let state = state_graph(search.n, search.states[checked]);
            if let Some(emb) = iso::find_induced_pattern(&state, h) {
                let orbit = Orbit {
                    n: search.n,
                    states: core::mem::take(&mut search.states),
                    parent: core::mem::take(&mut search.parent),
                    complete: false,
                };
                let mut word = orbit.word(checked);
                for v in emb.vertex_set().complement(g.n()) {
                    word.push(LcOp::Delete(v));
                }
                return Ok(VertexMinorOutcome::Found(word));
            }
            checked += 1;
        }
        if !search.expand_one() {
            break;
        }
    }
    Ok(if search.limit_hit {
        VertexMinorOutcome::Inconclusive
    } else {
        VertexMinorOutcome::Absent
    })
}

/// The named reductions between join graphs.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ConstructionName {
    /// `(K_n ⋈ S_n - w1) * v1 - v1  ≅  S_{n-1} ⋈ S_{n-1}`
    MatKS,
    /// `((K_n ⋈ K_n - {v1, w2}) * v2 * w1) - {v2, w1}  ≅  S_{n-2} ⋈ S_{n-2}`
    MatKK,
    /// `((S_n ⊼ S_n - {v1, w2}) ∧ v2w1) - {v2, w1}  ≅  S_{n-2} ⋈ S_{n-2}`
    AntiMatSS,
    /// `(K_n ⊼ S_n - w1) * v1 - v1  ≅  S_{n-1} ⋈ K_{n-1}`, then `MatKS`
    /// with the sides exchanged, ending at `S_{n-2} ⋈ S_{n-2}`.
    AntiMatKS,
    /// `(K_n ⊼ K_n - w1) * v1 - v1  ≅  S_{n-1} ⋈ S_{n-1}`
    AntiMatKK,
    /// `(K_n ⊲ K_n - w1) * v1 - v1  ≅  S_{n-1} ⊲ K_{n-1}`
    TriKK,
}

impl ConstructionName {
    pub const ALL: [ConstructionName; 6] = [
        ConstructionName::MatKS,
        ConstructionName::MatKK,
        ConstructionName::AntiMatSS,
        ConstructionName::AntiMatKS,
        ConstructionName::AntiMatKK,
        ConstructionName::TriKK,
    ];

    pub fn name(self) -> &'static str {
        match self {
            ConstructionName::MatKS => "mat_ks",
            ConstructionName::MatKK => "mat_kk",
            ConstructionName::AntiMatSS => "antimat_ss",
            ConstructionName::AntiMatKS => "antimat_ks",
            ConstructionName::AntiMatKK => "antimat_kk",
            ConstructionName::TriKK => "tri_kk",
        }
    }

    /// Smallest `n` for which the reduction is stated.
    pub fn threshold(self) -> usize {
        match self {
            ConstructionName::MatKS | ConstructionName::AntiMatKK | ConstructionName::TriKK => 2,
            _ => 3,
        }
    }
}

impl FromStr for ConstructionName {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        ConstructionName::ALL
            .into_iter()
            .find(|c| c.name() == s)
            .ok_or_else(|| invalid(format!("unknown construction {s}")))
    }
}

/// An explicit reduction: applying `word` to `input` gives a graph
/// isomorphic to `target`. When present, `intermediate` names a prefix
/// length of the word and the graph that prefix must produce (up to
/// isomorphism).
#[derive(Clone, Debug)]
pub struct Construction {
    pub name: ConstructionName,
    pub n: usize,
    pub input: Graph,
    pub word: LcWord,
    pub target: Graph,
    pub intermediate: Option<(usize, Graph)>,
}

impl Construction {
    /// Runs the word and checks the target (and intermediate) isomorphisms.
    pub fn verify(&self) -> Result<bool> {
        if let Some((len, mid)) = &self.intermediate {
            let got = self.word.prefix(*len).apply(&self.input)?.graph;
            if !iso::is_isomorphic(&got, mid) {
                return Ok(false);
            }
        }
        let out = self.word.apply(&self.input)?.graph;
        Ok(iso::is_isomorphic(&out, &self.target))
    }

    pub fn describe(&self) -> String {
        format!("{} n={}: {}", self.name.name(), self.n, self.word)
    }
}

pub fn construction(name: ConstructionName, n: usize) -> Result<Construction> {
    if n < name.threshold() {
        return Err(invalid(format!(
            "{} needs n >= {}",
            name.name(),
            name.threshold()
        )));
    }
    let k = family::complete;
    let s = family::edgeless;
    let v = |i: usize| i - 1;
    let w = |j: usize| n + j - 1;
    use LcOp::*;
    let (input, ops, target, intermediate) = match name {
        ConstructionName::MatKS => (
            join(&k(n), &s(n), JoinKind::Mat)?,
            alloc::vec![Delete(w(1)), Lc(v(1)), Delete(v(1))],
            join(&s(n - 1), &s(n - 1), JoinKind::Mat)?,
            None,
        ),
        ConstructionName::MatKK => (
            join(&k(n), &k(n), JoinKind::Mat)?,
            alloc::vec![
                Delete(v(1)),
                Delete(w(2)),
                Lc(v(2)),
                Lc(w(1)),
                Delete(v(2)),
                Delete(w(1))
            ],
            join(&s(n - 2), &s(n - 2), JoinKind::Mat)?,
            None,
        ),
        ConstructionName::AntiMatSS => (
            join(&s(n), &s(n), JoinKind::AntiMat)?,
            alloc::vec![
                Delete(v(1)),
                Delete(w(2)),
                Pivot(v(2), w(1)),
                Delete(v(2)),
                Delete(w(1))
            ],
            join(&s(n - 2), &s(n - 2), JoinKind::Mat)?,
            None,
        ),
        ConstructionName::AntiMatKS => (
            join(&k(n), &s(n), JoinKind::AntiMat)?,
            // after the first three steps the w side is the clique, so the
            // second stage removes v2 (the partner of w2), then w2
            alloc::vec![
                Delete(w(1)),
                Lc(v(1)),
                Delete(v(1)),
                Delete(v(2)),
                Lc(w(2)),
                Delete(w(2))
            ],
            join(&s(n - 2), &s(n - 2), JoinKind::Mat)?,
            Some((3, join(&s(n - 1), &k(n - 1), JoinKind::Mat)?)),
        ),
        ConstructionName::AntiMatKK => (
            join(&k(n), &k(n), JoinKind::AntiMat)?,
            alloc::vec![Delete(w(1)), Lc(v(1)), Delete(v(1))],
            join(&s(n - 1), &s(n - 1), JoinKind::Mat)?,
            None,
        ),
        ConstructionName::TriKK => (
            join(&k(n), &k(n), JoinKind::Tri)?,
            alloc::vec![Delete(w(1)), Lc(v(1)), Delete(v(1))],
            join(&s(n - 1), &k(n - 1), JoinKind::Tri)?,
            None,
        ),
    };
    Ok(Construction {
        name,
        n,
        input,
        word: LcWord(ops),
        target,
        intermediate,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::family::*;

    #[test]
    fn local_complement_examples() {
        let k = local_complement(&star(4), 0).unwrap();
        assert_eq!(k, complete(5));
        let g = cycle(5);
        assert_eq!(local_complement(&local_complement(&g, 2).unwrap(), 2).unwrap(), g);
        assert_eq!(local_complement(&path(3), 1).unwrap(), complete(3));
        assert!(local_complement(&path(3), 3).is_err());
    }

    #[test]
    fn pivot_on_a_single_edge() {
        assert_eq!(pivot(&complete(2), 0, 1).unwrap(), complete(2));
        assert!(pivot(&path(3), 0, 2).is_err());
    }

    #[test]
    fn pivot_six_vertex_example() {
        // vertices: 0 = v, 1 = top, 2 = w, 3 = right, 4 = far left, 5 = far right
        let g = Graph::from_edges(
            6,
            &[(0, 2), (2, 3), (3, 0), (0, 1), (2, 5), (1, 5), (2, 4), (3, 5)],
        )
        .unwrap();
        let expected = Graph::from_edges(
            6,
            &[(2, 0), (0, 3), (3, 2), (2, 1), (0, 4), (0, 5), (1, 3), (4, 3), (1, 4)],
        )
        .unwrap();
        assert_eq!(pivot(&g, 0, 2).unwrap(), expected);
        let composed = [0, 2, 0]
            .iter()
            .fold(g.clone(), |h, &x| local_complement(&h, x).unwrap());
        assert_eq!(composed, expected);
    }

    #[test]
    fn word_text_round_trip() {
        let w: LcWord = "lc 0; pv 1 2; del 3".parse().unwrap();
        assert_eq!(w.0, vec![LcOp::Lc(0), LcOp::Pivot(1, 2), LcOp::Delete(3)]);
        assert_eq!(w.to_string(), "lc 0; pv 1 2; del 3");
        assert!("lc".parse::<LcWord>().is_err());
        assert!("jump 3".parse::<LcWord>().is_err());
        assert_eq!("".parse::<LcWord>().unwrap(), LcWord::new());
    }

    #[test]
    fn word_rejects_reuse_of_deleted_vertex() {
        let w: LcWord = "del 1; lc 1".parse().unwrap();
        assert!(w.apply(&path(3)).is_err());
    }

    #[test]
    fn orbit_examples() {
        let o = orbit(&complete(2), 100).unwrap();
        assert_eq!(o.len(), 1);
        assert!(o.is_complete());
        let o = orbit(&path(3), 100).unwrap();
        assert!(o.find_isomorphic(&complete(3)).is_some());
        let t2 = join(&edgeless(2), &edgeless(2), JoinKind::Tri).unwrap();
        assert!(orbit(&t2, 1000).unwrap().find_isomorphic(&path(4)).is_some());
        let t3 = join(&edgeless(3), &edgeless(3), JoinKind::Tri).unwrap();
        let o = orbit(&t3, 100_000).unwrap();
        let i = o.find_isomorphic(&path(6)).unwrap();
        let replay = o.word(i).apply(&t3).unwrap().graph;
        assert_eq!(replay, o.graph(i));
    }

    #[test]
    fn orbit_truncation_is_flagged() {
        let o = orbit(&cycle(6), 3).unwrap();
        assert_eq!(o.len(), 3);
        assert!(!o.is_complete());
    }

    #[test]
    fn lazy_iteration_matches_run() {
        let g = cycle(5);
        let lazy: Vec<Graph> = OrbitSearch::new(&g, 1000).unwrap().collect();
        let full = orbit(&g, 1000).unwrap();
        assert_eq!(lazy, full.iter().collect::<Vec<_>>());
    }

    #[test]
    fn vertex_minor_examples() {
        match has_vertex_minor(&complete(5), &star(4), 10_000).unwrap() {
            VertexMinorOutcome::Found(w) => {
                let out = w.apply(&complete(5)).unwrap().graph;
                assert!(iso::is_isomorphic(&out, &star(4)));
            }
            other => panic!("expected a witness, got {other:?}"),
        }
        assert_eq!(
            has_vertex_minor(&path(4), &path(4), 10).unwrap(),
            VertexMinorOutcome::Found(LcWord::new())
        );
        let g = join(&complete(3), &edgeless(3), JoinKind::Mat).unwrap();
        let h = join(&edgeless(2), &edgeless(2), JoinKind::Mat).unwrap();
        let VertexMinorOutcome::Found(w) = has_vertex_minor(&g, &h, 100_000).unwrap() else {
            panic!("2K_2 is a vertex-minor of K_3 ⋈ S_3");
        };
        assert!(iso::is_isomorphic(&w.apply(&g).unwrap().graph, &h));
        // local equivalence preserves edgelessness
        assert_eq!(
            has_vertex_minor(&edgeless(4), &complete(2), 1000).unwrap(),
            VertexMinorOutcome::Absent
        );
        assert_eq!(
            has_vertex_minor(&path(2), &path(3), 1000).unwrap(),
            VertexMinorOutcome::Absent
        );
    }

    #[test]
    fn constructions_reach_their_targets() {
        for name in ConstructionName::ALL {
            for n in name.threshold()..=6 {
                let c = construction(name, n).unwrap();
                assert!(c.verify().unwrap(), "{}", c.describe());
            }
            assert!(construction(name, name.threshold() - 1).is_err());
        }
    }

    #[test]
    fn construction_names_parse() {
        for name in ConstructionName::ALL {
            assert_eq!(name.name().parse::<ConstructionName>().unwrap(), name);
        }
    }
}
