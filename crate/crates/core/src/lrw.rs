//! Linear layouts and exact linear rank-width.

use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use crate::brittleness::{brittleness, Partition};
use crate::conn::{cutrank, ConnFn};
use crate::error::{invalid, Error, Result};
use crate::graph::Graph;
use crate::set::VertexSet;

/// Largest order accepted by [`linear_rank_width`].
pub const MAX_LRW_ORDER: usize = 20;

/// A sequence of distinct vertices. A layout of `G` lists all of `V(G)`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Layout {
    pub order: Vec<usize>,
}

impl Layout {
    pub fn new(order: Vec<usize>) -> Result<Self> {
        let mut seen = VertexSet::EMPTY;
        for &v in &order {
            if v >= 64 || seen.contains(v) {
                return Err(invalid(format!("vertex {v} repeated or out of range")));
            }
            seen.insert(v);
        }
        Ok(Layout { order })
    }

    pub fn identity(n: usize) -> Self {
        Layout {
            order: (0..n).collect(),
        }
    }

    pub fn support(&self) -> VertexSet {
        self.order.iter().copied().collect()
    }

    pub fn len(&self) -> usize {
        self.order.len()
    }

    pub fn is_empty(&self) -> bool {
        self.order.is_empty()
    }

    pub fn reversed(&self) -> Layout {
        let mut order = self.order.clone();
        order.reverse();
        Layout { order }
    }

    fn check_for(&self, g: &Graph) -> Result<()> {
        if self.order.len() != g.n() || self.support() != g.vertices() {
            return Err(invalid("layout is not a permutation of the vertex set"));
        }
        Ok(())
    }
}

/// `L1 ⊕ L2`; the supports must be disjoint.
pub fn concat(l1: &Layout, l2: &Layout) -> Result<Layout> {
    if !l1.support().intersection(l2.support()).is_empty() {
        return Err(invalid("layouts overlap"));
    }
    let mut order = l1.order.clone();
    order.extend_from_slice(&l2.order);
    Ok(Layout { order })
}

/// Largest cut-rank of a proper prefix; 0 for graphs with at most one vertex.
pub fn layout_width(g: &Graph, l: &Layout) -> Result<usize> {
    l.check_for(g)?;
    let mut prefix = VertexSet::EMPTY;
    let mut w = 0;
    for &v in l.order.iter().take(g.n().saturating_sub(1)) {
        prefix.insert(v);
        w = w.max(cutrank(g, prefix));
    }
    Ok(w)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LrwResult {
    pub value: usize,
    pub layout: Layout,
}

/// Exact linear rank-width by dynamic programming over prefix sets:
/// `cost(S) = max(cutrank(S), min over v in S of cost(S - v))`.
pub fn linear_rank_width(g: &Graph) -> Result<LrwResult> {
    let n = g.n();
    if n > MAX_LRW_ORDER {
        return Err(Error::ResourceLimit {
            what: "linear rank-width order",
            size: n,
            limit: MAX_LRW_ORDER,
        });
    }
    let size = 1usize << n;
    let mut cost = vec![0u8; size];
    for s in 1..size {
        let mut best = u8::MAX;
        let mut rest = s;
        while rest != 0 {
            let bit = rest & rest.wrapping_neg();
            rest ^= bit;
            best = best.min(cost[s ^ bit]);
        }
        let r = cutrank(g, VertexSet(s as u64)) as u8;
        cost[s] = best.max(r);
    }
    // walk back from the full set, peeling off the last vertex each time
    let mut order = Vec::with_capacity(n);
    let mut s = size - 1;
    while s != 0 {
        let target = cost[s];
        let r = cutrank(g, VertexSet(s as u64)) as u8;
        let v = VertexSet(s as u64)
            .iter()
            .find(|&v| cost[s ^ (1 << v)].max(r) == target)
            .expect("some predecessor attains the minimum");
        order.push(v);
        s ^= 1 << v;
    }
    order.reverse();
    Ok(LrwResult {
        value: cost[size - 1] as usize,
        layout: Layout { order },
    })
}

/// Both sides of `lrw(G) <= β_k^ρ(G) + ⌊k/2⌋`, plus the layout that lists
/// the blocks of an optimal partition one after the other.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LrwBoundCheck {
    pub k: usize,
    pub lrw: usize,
    pub beta: usize,
    pub partition: Partition,
    pub block_layout: Layout,
    pub block_layout_width: usize,
}

impl LrwBoundCheck {
    pub fn bound(&self) -> usize {
        self.beta + self.k / 2
    }

    pub fn holds(&self) -> bool {
        self.lrw <= self.bound() && self.block_layout_width <= self.bound()
    }
}

pub fn check_lrw_brittleness_bound(g: &Graph, k: usize) -> Result<LrwBoundCheck> {
    let lrw = linear_rank_width(g)?;
    let b = brittleness(ConnFn::RankCut, g, k)?;
    let mut block_layout = Layout::default();
    for block in &b.partition.blocks {
        block_layout = concat(&block_layout, &Layout::new(block.clone())?)?;
    }
    let block_layout_width = layout_width(g, &block_layout)?;
    Ok(LrwBoundCheck {
        k,
        lrw: lrw.value,
        beta: b.value,
        partition: b.partition,
        block_layout,
        block_layout_width,
    })
}
