mod common;

use brittle_core::conn::{self, eval, ConnFn, GroundSet};
use brittle_core::gf2::BitMatrix;
use brittle_core::iso::enumerate_graphs;
use brittle_core::vertex_minor::local_complement;
use brittle_core::{EdgeSet, Graph, VertexSet};
use common::graph;
use proptest::prelude::*;

fn brute_rank(rows: &[u64]) -> usize {
    // dimension of the span, counted by enumerating it
    let mut span = vec![0u64];
    for &r in rows {
        if !span.contains(&r) {
            let extra: Vec<u64> = span.iter().map(|x| x ^ r).collect();
            span.extend(extra);
        }
    }
    span.len().trailing_zeros() as usize
}

fn brute_cutrank(g: &Graph, s: VertexSet) -> usize {
    let rows: Vec<u64> = s
        .iter()
        .map(|v| g.rows()[v] & !s.bits() & g.vertices().bits())
        .collect();
    brute_rank(&rows)
}

fn brute_matching(g: &Graph, s: VertexSet) -> usize {
    let cross: Vec<(usize, usize)> = g
        .edges()
        .into_iter()
        .filter(|e| s.contains(e.0) != s.contains(e.1))
        .map(|e| (e.0, e.1))
        .collect();
    let mut best = 0;
    for pick in 0u64..(1 << cross.len()) {
        let mut used = 0u64;
        let mut ok = true;
        for (i, &(a, b)) in cross.iter().enumerate() {
            if pick >> i & 1 == 1 {
                let m = 1u64 << a | 1u64 << b;
                ok &= used & m == 0;
                used |= m;
            }
        }
        if ok {
            best = best.max(pick.count_ones() as usize);
        }
    }
    best
}

fn edge_subset(g: &Graph, mask: u64) -> EdgeSet {
    g.edges()
        .into_iter()
        .enumerate()
        .filter(|(i, _)| mask >> i & 1 == 1)
        .map(|(_, e)| e)
        .collect()
}

#[test]
fn symmetry_exhaustive() {
    for n in 0..=6 {
        for g in enumerate_graphs(n) {
            let full = g.vertices();
            for s in 0u64..(1 << n) {
                let x = VertexSet(s);
                let y = x.complement(n);
                assert_eq!(conn::cutrank(&g, x), conn::cutrank(&g, y));
                assert_eq!(conn::edge_boundary(&g, x), conn::edge_boundary(&g, y));
                assert_eq!(conn::matching_boundary(&g, x), conn::matching_boundary(&g, y));
                assert!(x.is_subset(full));
            }
            let m = g.edge_count();
            for f in 0u64..(1 << m) {
                let all = (1u64 << m) - 1;
                let a = conn::vertex_boundary(&g, &edge_subset(&g, f)).unwrap();
                let b = conn::vertex_boundary(&g, &edge_subset(&g, all & !f)).unwrap();
                assert_eq!(a, b);
            }
        }
    }
}

#[test]
fn rank_and_matching_below_edge_cut_exhaustive() {
    for n in 0..=6 {
        for g in enumerate_graphs(n) {
            for s in 0u64..(1 << n) {
                let x = VertexSet(s);
                let rho = conn::cutrank(&g, x);
                let eta = conn::edge_boundary(&g, x);
                let nu = conn::matching_boundary(&g, x);
                assert!(rho <= x.len().min(n - x.len()));
                assert!(rho <= eta, "{g:?} {x:?}");
                assert!(nu <= eta);
                assert!(nu <= x.len().min(n - x.len()));
            }
        }
    }
}

#[test]
fn matching_and_rank_match_brute_force_exhaustive() {
    for n in 0..=6 {
        for g in enumerate_graphs(n) {
            for s in 0u64..(1 << n) {
                let x = VertexSet(s);
                assert_eq!(conn::cutrank(&g, x), brute_cutrank(&g, x));
                assert_eq!(conn::matching_boundary(&g, x), brute_matching(&g, x));
            }
        }
    }
}

fn index_set(n: usize) -> impl Strategy<Value = VertexSet> {
    (0u64..(1 << n)).prop_map(VertexSet)
}

proptest! {
    #[test]
    fn rank_is_submodular(
        rows in proptest::collection::vec(0u64..256, 1..=8),
        x1 in index_set(8), x2 in index_set(8),
        y1 in index_set(8), y2 in index_set(8),
    ) {
        let m = BitMatrix::new(rows, 8).unwrap();
        let lhs = m.sub_rank(x1, y1) + m.sub_rank(x2, y2);
        let rhs = m.sub_rank(x1.intersection(x2), y1.union(y2))
            + m.sub_rank(x1.union(x2), y1.intersection(y2));
        prop_assert!(lhs >= rhs);
    }

    #[test]
    fn cutrank_survives_local_complementation(
        g in graph(1, 12),
        v in any::<prop::sample::Index>(),
        s in any::<u64>(),
    ) {
        let v = v.index(g.n());
        let s = VertexSet(s).intersection(g.vertices());
        let h = local_complement(&g, v).unwrap();
        prop_assert_eq!(conn::cutrank(&g, s), conn::cutrank(&h, s));
    }

    #[test]
    fn vertex_boundary_matches_definition(g in graph(0, 8), mask in any::<u64>()) {
        let f = edge_subset(&g, mask);
        let inside: VertexSet = f.iter().flat_map(|e| [e.0, e.1]).collect();
        let outside: VertexSet = g
            .edges()
            .into_iter()
            .filter(|e| !f.contains(*e))
            .flat_map(|e| [e.0, e.1])
            .collect();
        prop_assert_eq!(
            eval(ConnFn::VertexCut, &g, &GroundSet::Edges(f)).unwrap(),
            inside.intersection(outside).len()
        );
    }

    #[test]
    fn edge_boundary_counts_crossing_edges(g in graph(0, 12), s in any::<u64>()) {
        let s = VertexSet(s).intersection(g.vertices());
        let crossing = g.edges().into_iter().filter(|e| s.contains(e.0) != s.contains(e.1)).count();
        prop_assert_eq!(conn::edge_boundary(&g, s), crossing);
    }
}
