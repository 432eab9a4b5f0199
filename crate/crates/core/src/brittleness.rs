//! Partition widths and exact k-brittleness.
//!
//! The f-width of a partition is the maximum of `f` over all unions of its
//! blocks; the k-brittleness of `f` is the minimum width over partitions of
//! the ground set into blocks of at most `k` elements.
//!
//! Ground elements are vertices for η, ν and ρ, and for κ the edges of the
//! graph in the order of [`Graph::edges`]. Internally every element carries
//! a vertex *footprint* (the vertex itself, or the two ends of an edge), so
//! a union of blocks is evaluated from the OR of footprints inside and the
//! OR outside. On a partial assignment those two sets only grow as more
//! elements are placed, and each of the four functions is monotone in them,
//! so the partial width is a lower bound for every completion. The branch
//! and bound search prunes on that.

use alloc::vec;
use alloc::vec::Vec;

use crate::conn::{self, ConnFn, Ground};
use crate::error::{invalid, Error, Result};
use crate::graph::Graph;
use crate::set::VertexSet;

/// Size caps for the exponential routines.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Limits {
    /// Largest ground set for [`brittleness`].
    pub max_ground: usize,
    /// Largest block count for [`partition_width`].
    pub max_blocks: usize,
    /// Largest ground set for [`brittleness_naive`].
    pub naive_max_ground: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            max_ground: 12,
            max_blocks: 25,
            naive_max_ground: 9,
        }
    }
}

/// An ordered partition of a ground set `0..m` into blocks of size at most `k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Partition {
    pub k: usize,
    pub blocks: Vec<Vec<usize>>,
}

impl Partition {
    pub fn new(k: usize, blocks: Vec<Vec<usize>>) -> Self {
        Partition { k, blocks }
    }

    pub fn singletons(m: usize) -> Self {
        Partition::new(1, (0..m).map(|e| vec![e]).collect())
    }

    /// Blocks from a restricted growth string (`rgs[e]` = block of `e`).
    pub fn from_rgs(k: usize, rgs: &[usize]) -> Self {
        let t = rgs.iter().map(|&b| b + 1).max().unwrap_or(0);
        let mut blocks = vec![Vec::new(); t];
        for (e, &b) in rgs.iter().enumerate() {
            blocks[b].push(e);
        }
        Partition::new(k, blocks)
    }

    /// The block index of every element, blocks renumbered by first element.
    pub fn to_rgs(&self, m: usize) -> Vec<usize> {
        let mut owner = vec![usize::MAX; m];
        for (b, block) in self.blocks.iter().enumerate() {
            for &e in block {
                owner[e] = b;
            }
        }
        let mut rename = vec![usize::MAX; self.blocks.len()];
        let mut next = 0;
        owner
            .into_iter()
            .map(|b| {
                if rename[b] == usize::MAX {
                    rename[b] = next;
                    next += 1;
                }
                rename[b]
            })
            .collect()
    }

    /// Checks that the blocks are nonempty, disjoint, cover `0..m`, and have
    /// at most `k` elements each.
    pub fn validate(&self, m: usize) -> Result<()> {
        if self.k == 0 {
            return Err(invalid("block size cap k must be at least 1"));
        }
        let mut seen = vec![false; m];
        for block in &self.blocks {
            if block.is_empty() {
                return Err(invalid("empty block"));
            }
            if block.len() > self.k {
                return Err(invalid("block larger than k"));
            }
            for &e in block {
                if e >= m {
                    return Err(invalid("block element outside the ground set"));
                }
                if core::mem::replace(&mut seen[e], true) {
                    return Err(invalid("blocks are not disjoint"));
                }
            }
        }
        if seen.iter().any(|s| !s) {
            return Err(invalid("blocks do not cover the ground set"));
        }
        Ok(())
    }
}

/// Width of a partition together with a union of blocks attaining it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Width {
    pub value: usize,
    /// Block indices of a maximising union (always contains block 0 when
    /// there is at least one block).
    pub worst_union: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BrittlenessResult {
    pub value: usize,
    pub partition: Partition,
    pub worst_union: Vec<usize>,
}

/// Number of ground elements of `f` on `g`.
pub fn ground_size(f: ConnFn, g: &Graph) -> usize {
    match f.ground() {
        Ground::Vertices => g.n(),
        Ground::Edges => g.edge_count(),
    }
}

fn footprints(f: ConnFn, g: &Graph) -> Vec<u64> {
    match f.ground() {
        Ground::Vertices => (0..g.n()).map(|v| 1u64 << v).collect(),
        Ground::Edges => g.edges().into_iter().map(|e| e.ends().bits()).collect(),
    }
}

/// Evaluates unions of blocks given by their vertex footprints.
struct UnionEval<'a> {
    f: ConnFn,
    g: &'a Graph,
}

impl UnionEval<'_> {
    /// Maximum over unions containing block 0, stopping early once the
    /// value reaches `stop`. Returns the value and the maximising union as
    /// a bitmask over blocks.
    fn max_union(&self, blocks: &[u64], stop: usize) -> (usize, u64) {
        let t = blocks.len();
        if t <= 1 {
            return (0, t as u64);
        }
        match self.f {
            ConnFn::VertexCut => self.max_union_overlapping(blocks, stop),
            _ => self.max_union_disjoint(blocks, stop),
        }
    }

    fn max_union_disjoint(&self, blocks: &[u64], stop: usize) -> (usize, u64) {
        let t = blocks.len();
        let mut inside = blocks[0];
        let mut outside = blocks[1..].iter().fold(0, |a, b| a | b);
        let mut sel = 1u64;
        let mut best = (self.f.cross(self.g, VertexSet(inside), VertexSet(outside)), sel);
        if best.0 >= stop {
            return best;
        }
        for step in 1u64..(1u64 << (t - 1)) {
            let j = step.trailing_zeros() as usize + 1;
            sel ^= 1u64 << j;
            inside ^= blocks[j];
            outside ^= blocks[j];
            let v = self.f.cross(self.g, VertexSet(inside), VertexSet(outside));
            if v > best.0 {
                best = (v, sel);
                if v >= stop {
                    break;
                }
            }
        }
        best
    }

    fn max_union_overlapping(&self, blocks: &[u64], stop: usize) -> (usize, u64) {
        let t = blocks.len();
        // per touched vertex, the set of blocks touching it
        let mut touch = [0u64; 64];
        let mut touched = 0u64;
        for (b, &fp) in blocks.iter().enumerate() {
            for v in VertexSet(fp) {
                touch[v] |= 1u64 << b;
            }
            touched |= fp;
        }
        let mut masks = [0u64; 64];
        let mut len = 0;
        for v in VertexSet(touched) {
            if touch[v].count_ones() > 1 {
                masks[len] = touch[v];
                len += 1;
            }
        }
        let masks = &masks[..len];
        let all = if t == 64 { u64::MAX } else { (1u64 << t) - 1 };
        let value = |sel: u64| {
            masks
                .iter()
                .filter(|&&m| m & sel != 0 && m & !sel & all != 0)
                .count()
        };
        let mut sel = 1u64;
        let mut best = (value(sel), sel);
        if best.0 >= stop {
            return best;
        }
        for step in 1u64..(1u64 << (t - 1)) {
            sel ^= 1u64 << (step.trailing_zeros() + 1);
            let v = value(sel);
            if v > best.0 {
                best = (v, sel);
                if v >= stop {
                    break;
                }
            }
        }
        best
    }
}

/// The f-width of `p`.
pub fn partition_width(f: ConnFn, g: &Graph, p: &Partition) -> Result<Width> {
    partition_width_with(f, g, p, &Limits::default())
}

pub fn partition_width_with(f: ConnFn, g: &Graph, p: &Partition, limits: &Limits) -> Result<Width> {
    let m = ground_size(f, g);
    p.validate(m)?;
    if p.blocks.len() > limits.max_blocks {
        return Err(Error::ResourceLimit {
            what: "block count",
            size: p.blocks.len(),
            limit: limits.max_blocks,
        });
    }
    let fp = footprints(f, g);
    let blocks: Vec<u64> = p
        .blocks
        .iter()
        .map(|b| b.iter().fold(0u64, |acc, &e| acc | fp[e]))
        .collect();
    let (value, sel) = UnionEval { f, g }.max_union(&blocks, usize::MAX);
    Ok(Width {
        value,
        worst_union: VertexSet(sel).to_vec(),
    })
}

/// Exact k-brittleness with the default [`Limits`].
pub fn brittleness(f: ConnFn, g: &Graph, k: usize) -> Result<BrittlenessResult> {
    brittleness_with(f, g, k, &Limits::default())
}

/// Exact k-brittleness by branch and bound over restricted growth strings.
///
/// Among optimal partitions the one with the lexicographically smallest
/// restricted growth string is returned.
pub fn brittleness_with(
    f: ConnFn,
    g: &Graph,
    k: usize,
    limits: &Limits,
) -> Result<BrittlenessResult> {
    if k == 0 {
        return Err(invalid("k must be at least 1"));
    }
    let m = ground_size(f, g);
    if m > limits.max_ground {
        return Err(Error::ResourceLimit {
            what: "ground set size",
            size: m,
            limit: limits.max_ground,
        });
    }
    let fp = footprints(f, g);
    let eval = UnionEval { f, g };

    // Seed the bound with consecutive chunks of size k.
    let chunks: Vec<u64> = fp
        .chunks(k)
        .map(|c| c.iter().fold(0u64, |a, b| a | b))
        .collect();
    let seed = eval.max_union(&chunks, usize::MAX).0;

    let mut search = Search {
        eval,
        fp: &fp,
        k,
        blocks: Vec::with_capacity(m),
        sizes: Vec::with_capacity(m),
        assign: vec![0; m],
        bound: seed + 1,
        best: None,
    };
    search.descend(0);
    let rgs = search.best.expect("the seed partition is always reachable");
    let partition = Partition::from_rgs(k, &rgs);
    let width = partition_width_with(
        f,
        g,
        &partition,
        &Limits {
            max_blocks: m.max(limits.max_blocks),
            ..*limits
        },
    )?;
    Ok(BrittlenessResult {
        value: width.value,
        partition,
        worst_union: width.worst_union,
    })
}

struct Search<'a> {
    eval: UnionEval<'a>,
    fp: &'a [u64],
    k: usize,
    blocks: Vec<u64>,
    sizes: Vec<usize>,
    assign: Vec<usize>,
    /// Only partitions of width strictly below this are of interest.
    bound: usize,
    best: Option<Vec<usize>>,
}

impl Search<'_> {
    fn descend(&mut self, e: usize) {
        if e == self.fp.len() {
            let (w, _) = self.eval.max_union(&self.blocks, self.bound);
            if w < self.bound {
                self.bound = w;
                self.best = Some(self.assign.clone());
            }
            return;
        }
        let t = self.blocks.len();
        for b in 0..=t {
            if b < t && self.sizes[b] == self.k {
                continue;
            }
            if b == t {
                self.blocks.push(self.fp[e]);
                self.sizes.push(1);
            } else {
                self.blocks[b] |= self.fp[e];
                self.sizes[b] += 1;
            }
            self.assign[e] = b;
            // partial width only grows with further assignments
            let (lb, _) = self.eval.max_union(&self.blocks, self.bound);
            if lb < self.bound {
                self.descend(e + 1);
            }
            if b == t {
                self.blocks.pop();
                self.sizes.pop();
            } else {
                self.sizes[b] -= 1;
                let fp = self.fp;
                self.blocks[b] = (0..e)
                    .filter(|&x| self.assign[x] == b)
                    .fold(0u64, |acc, x| acc | fp[x]);
            }
            if self.bound == 0 {
                return;
            }
        }
    }
}

/// Exact k-brittleness by enumerating every partition, with the default
/// [`Limits`]. Meant as an oracle for [`brittleness`].
pub fn brittleness_naive(f: ConnFn, g: &Graph, k: usize) -> Result<usize> {
    brittleness_naive_with(f, g, k, &Limits::default())
}

/// Enumerates all partitions into blocks of size at most `k` (the block of
/// the smallest unplaced element is chosen among all subsets of the
/// remaining elements) and evaluates every union of blocks directly with
/// the public cut functions. Shares no code with the branch and bound.
pub fn brittleness_naive_with(f: ConnFn, g: &Graph, k: usize, limits: &Limits) -> Result<usize> {
    if k == 0 {
        return Err(invalid("k must be at least 1"));
    }
    let m = ground_size(f, g);
    if m > limits.naive_max_ground || m > 64 {
        return Err(Error::ResourceLimit {
            what: "ground set size",
            size: m,
            limit: limits.naive_max_ground.min(64),
        });
    }
    let edges = g.edges();
    // incident edge masks for the edge-grounded function
    let incident: Vec<u64> = (0..g.n())
        .map(|v| {
            edges
                .iter()
                .enumerate()
                .filter(|(_, e)| e.0 == v || e.1 == v)
                .fold(0u64, |acc, (i, _)| acc | 1u64 << i)
        })
        .collect();
    let all = if m == 64 { u64::MAX } else { (1u64 << m) - 1 };
    let value = |union: u64| -> usize {
        match f {
            ConnFn::VertexCut => incident
                .iter()
                .filter(|&&inc| inc & union != 0 && inc & !union & all != 0)
                .count(),
            ConnFn::EdgeCut => conn::edge_boundary(g, VertexSet(union)),
            ConnFn::MatchingCut => conn::matching_boundary(g, VertexSet(union)),
            ConnFn::RankCut => conn::cutrank(g, VertexSet(union)),
        }
    };
    let mut best = usize::MAX;
    let mut blocks: Vec<u64> = Vec::new();
    naive_rec(all, k, &mut blocks, &value, &mut best);
    Ok(best)
}

fn naive_rec(
    remaining: u64,
    k: usize,
    blocks: &mut Vec<u64>,
    value: &dyn Fn(u64) -> usize,
    best: &mut usize,
) {
    if remaining == 0 {
        // width with early exit: stop once it cannot beat the incumbent
        let t = blocks.len();
        let mut union = 0u64;
        let mut width = value(0);
        for step in 1u64..(1u64 << t) {
            if width >= *best {
                break;
            }
            union ^= blocks[step.trailing_zeros() as usize];
            width = width.max(value(union));
        }
        *best = (*best).min(width);
        return;
    }
    let first = remaining & remaining.wrapping_neg();
    let rest = remaining & !first;
    // every subset of `rest` with at most k-1 elements joins `first`
    let mut mates = Vec::new();
    subsets_up_to(rest, k - 1, 0, &mut mates);
    for mate in mates {
        blocks.push(first | mate);
        naive_rec(rest & !mate, k, blocks, value, best);
        blocks.pop();
    }
}

fn subsets_up_to(pool: u64, size: usize, acc: u64, out: &mut Vec<u64>) {
    out.push(acc);
    if size == 0 {
        return;
    }
    let mut p = pool;
    while p != 0 {
        let bit = p & p.wrapping_neg();
        p &= !bit;
        subsets_up_to(p, size - 1, acc | bit, out);
    }
}

/// Both sides of the one-vertex deletion bounds for ν and ρ.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DeletionCheck {
    pub vertex: usize,
    pub k: usize,
    pub matching: (usize, usize),
    pub rank: (usize, usize),
}

impl DeletionCheck {
    /// `β(G) <= β(G - v) + 1` for both functions.
    pub fn holds(&self) -> bool {
        self.matching.0 <= self.matching.1 + 1 && self.rank.0 <= self.rank.1 + 1
    }
}

/// Computes β_k^ν and β_k^ρ of `G` and `G - v` exactly.
pub fn deletion_monotonicity_check(g: &Graph, v: usize, k: usize) -> Result<DeletionCheck> {
    g.check_vertex(v)?;
    let h = g.delete_vertices(VertexSet::singleton(v))?.graph;
    let pair = |f: ConnFn| -> Result<(usize, usize)> {
        Ok((brittleness(f, g, k)?.value, brittleness(f, &h, k)?.value))
    };
    Ok(DeletionCheck {
        vertex: v,
        k,
        matching: pair(ConnFn::MatchingCut)?,
        rank: pair(ConnFn::RankCut)?,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::family::*;

    #[test]
    fn width_examples() {
        let w = partition_width(ConnFn::EdgeCut, &star(3), &Partition::singletons(4)).unwrap();
        assert_eq!(w.value, 3);
        assert!(w.worst_union.contains(&0));
        let g = path(5);
        let one = Partition::new(5, vec![(0..5).collect()]);
        for f in [ConnFn::EdgeCut, ConnFn::MatchingCut, ConnFn::RankCut] {
            assert_eq!(partition_width(f, &g, &one).unwrap().value, 0);
        }
        let three_k2 = m_copies(&complete(2), 3).unwrap();
        let w = partition_width(ConnFn::RankCut, &three_k2, &Partition::singletons(6)).unwrap();
        assert_eq!(w.value, 3);
        // one endpoint of every edge
        let side: Vec<usize> = w.worst_union.clone();
        let verts: VertexSet = side.iter().copied().collect();
        assert_eq!(crate::conn::cutrank(&three_k2, verts), 3);
    }

    #[test]
    fn width_rejects_invalid_partitions() {
        let g = path(3);
        let overlap = Partition::new(2, vec![vec![0, 1], vec![1, 2]]);
        assert!(partition_width(ConnFn::RankCut, &g, &overlap).is_err());
        let short = Partition::new(2, vec![vec![0, 1]]);
        assert!(partition_width(ConnFn::RankCut, &g, &short).is_err());
        let big = Partition::new(1, vec![vec![0, 1], vec![2]]);
        assert!(partition_width(ConnFn::RankCut, &g, &big).is_err());
        let many = Partition::singletons(30);
        assert!(matches!(
            partition_width(ConnFn::RankCut, &edgeless(30), &many),
            Err(Error::ResourceLimit { .. })
        ));
    }

    #[test]
    fn brittleness_examples() {
        for n in 2..7 {
            assert_eq!(brittleness(ConnFn::RankCut, &complete(n), 1).unwrap().value, 1);
        }
        let three_k2 = m_copies(&complete(2), 3).unwrap();
        assert_eq!(brittleness(ConnFn::RankCut, &three_k2, 1).unwrap().value, 3);
        assert_eq!(brittleness(ConnFn::EdgeCut, &star(3), 1).unwrap().value, 3);
        let two_k2 = m_copies(&complete(2), 2).unwrap();
        assert_eq!(brittleness_naive(ConnFn::MatchingCut, &two_k2, 1).unwrap(), 2);
        for f in ConnFn::ALL {
            assert_eq!(brittleness(f, &complete(1), 1).unwrap().value, 0);
            assert_eq!(brittleness_naive(f, &complete(1), 1).unwrap(), 0);
        }
    }

    #[test]
    fn result_is_certified() {
        let g = cycle(6);
        for f in ConnFn::ALL {
            for k in 1..=3 {
                let r = brittleness(f, &g, k).unwrap();
                let w = partition_width(f, &g, &r.partition).unwrap();
                assert_eq!(w.value, r.value);
                assert!(r.partition.blocks.iter().all(|b| b.len() <= k));
                assert_eq!(r.value, brittleness_naive(f, &g, k).unwrap());
            }
        }
    }

    #[test]
    fn witness_is_lexicographically_smallest() {
        // P_3 under ρ with k = 2: {0,1},{2} has width 1, as does the
        // singleton partition; rgs 001 precedes 011 and 012
        let r = brittleness(ConnFn::RankCut, &path(3), 2).unwrap();
        assert_eq!(r.value, 1);
        assert_eq!(r.partition.to_rgs(3), vec![0, 0, 1]);
    }

    #[test]
    fn caps_and_bad_k() {
        assert!(matches!(
            brittleness(ConnFn::RankCut, &edgeless(13), 2),
            Err(Error::ResourceLimit { .. })
        ));
        assert!(matches!(
            brittleness_naive(ConnFn::RankCut, &edgeless(10), 2),
            Err(Error::ResourceLimit { .. })
        ));
        assert!(brittleness(ConnFn::RankCut, &path(3), 0).is_err());
        // κ ignores isolated vertices
        assert_eq!(brittleness(ConnFn::VertexCut, &edgeless(40), 1).unwrap().value, 0);
    }

    #[test]
    fn rgs_round_trip() {
        let p = Partition::from_rgs(2, &[0, 1, 0, 2, 1]);
        assert_eq!(p.blocks, vec![vec![0, 2], vec![1, 4], vec![3]]);
        assert_eq!(p.to_rgs(5), vec![0, 1, 0, 2, 1]);
    }

    #[test]
    fn deletion_examples() {
        assert!(deletion_monotonicity_check(&path(5), 0, 2).unwrap().holds());
        assert!(deletion_monotonicity_check(&complete(1), 0, 1).unwrap().holds());
        let three_k2 = m_copies(&complete(2), 3).unwrap();
        let c = deletion_monotonicity_check(&three_k2, 4, 1).unwrap();
        assert!(c.holds());
        assert_eq!(c.rank, (3, 2));
    }
}
