mod common;

use brittle_core::family::{self, join, quotient_family, JoinKind, QuotientSpec};
use brittle_core::iso::{self, enumerate_graphs, find_induced_pattern, find_subgraph_pattern};
use brittle_core::{Graph, VertexSet};
use common::{graph, graph_on, permutations};
use proptest::prelude::*;

/// Isomorphism by trying every bijection.
fn brute_isomorphic(g: &Graph, h: &Graph) -> bool {
    g.n() == h.n()
        && g.edge_count() == h.edge_count()
        && permutations(g.n())
            .iter()
            .any(|p| g.permute(p).unwrap() == *h)
}

/// Pattern search by trying every injection.
fn brute_pattern(g: &Graph, h: &Graph, induced: bool) -> bool {
    fn rec(g: &Graph, h: &Graph, induced: bool, map: &mut Vec<usize>) -> bool {
        let i = map.len();
        if i == h.n() {
            return true;
        }
        for x in 0..g.n() {
            if map.contains(&x) {
                continue;
            }
            let ok = (0..i).all(|j| {
                let he = h.has_edge(i, j);
                let ge = g.has_edge(x, map[j]);
                (!he || ge) && (!induced || he || !ge)
            });
            if ok {
                map.push(x);
                if rec(g, h, induced, map) {
                    return true;
                }
                map.pop();
            }
        }
        false
    }
    rec(g, h, induced, &mut Vec::new())
}

fn permutation(n: usize) -> impl Strategy<Value = Vec<usize>> {
    Just((0..n).collect::<Vec<usize>>()).prop_shuffle()
}

proptest! {
    #[test]
    fn complement_is_an_involution(g in graph(0, 12)) {
        prop_assert_eq!(g.complement().complement(), g);
    }

    #[test]
    fn quotient_vertex_count(
        h in graph(1, 6),
        m in 1usize..5,
        mask in any::<u64>(),
    ) {
        let glued = VertexSet(mask).intersection(h.vertices());
        let spec = QuotientSpec::new(h.clone(), m, glued);
        if spec.validate().is_ok() {
            let g = quotient_family(&spec).unwrap();
            let expected = m * (h.n() - glued.len()) + glued.len();
            prop_assert_eq!(g.n(), expected);
            prop_assert_eq!(g.edge_count(), m * h.edge_count());
        }
    }

    #[test]
    fn join_sides_are_exact(
        (g, h) in (1usize..7).prop_flat_map(|n| (graph_on(n), graph_on(n))),
        kind in prop_oneof![Just(JoinKind::Mat), Just(JoinKind::AntiMat), Just(JoinKind::Tri)],
    ) {
        let n = g.n();
        let j = join(&g, &h, kind).unwrap();
        let left = j.induced(VertexSet::full(n)).unwrap().graph;
        let right = j.induced(VertexSet::full(2 * n).difference(VertexSet::full(n))).unwrap().graph;
        prop_assert_eq!(left.rows(), g.rows());
        prop_assert_eq!(right.rows(), h.rows());
        for a in 0..n {
            for b in 0..n {
                prop_assert_eq!(j.has_edge(a, n + b), kind.crosses(a, b));
            }
        }
    }

    #[test]
    fn isomorphism_survives_relabelling(
        (g, p) in (0usize..10).prop_flat_map(|n| (graph_on(n), permutation(n))),
    ) {
        let h = g.permute(&p).unwrap();
        prop_assert!(iso::is_isomorphic(&g, &g));
        prop_assert!(iso::is_isomorphic(&g, &h));
        prop_assert!(iso::is_isomorphic(&h, &g));
        prop_assert_eq!(iso::canonical_form(&g), iso::canonical_form(&h));
    }

    #[test]
    fn isomorphism_matches_brute_force(
        (g, h) in (0usize..7).prop_flat_map(|n| (graph_on(n), graph_on(n))),
    ) {
        let fast = iso::is_isomorphic(&g, &h);
        prop_assert_eq!(fast, iso::is_isomorphic(&h, &g));
        prop_assert_eq!(fast, brute_isomorphic(&g, &h));
    }

    #[test]
    fn pattern_certificates_and_completeness(
        g in graph(0, 7),
        h in graph(0, 4),
    ) {
        match find_subgraph_pattern(&g, &h) {
            Some(e) => prop_assert!(e.certifies(&g, &h, false)),
            None => prop_assert!(!brute_pattern(&g, &h, false)),
        }
        match find_induced_pattern(&g, &h) {
            Some(e) => prop_assert!(e.certifies(&g, &h, true)),
            None => prop_assert!(!brute_pattern(&g, &h, true)),
        }
    }
}

#[test]
fn graph_counts_up_to_six_vertices() {
    let counts: Vec<usize> = (0..=6).map(|n| enumerate_graphs(n).len()).collect();
    assert_eq!(counts, vec![1, 1, 2, 4, 11, 34, 156]);
}

#[test]
fn enumeration_has_no_isomorphic_repeats() {
    let gs = enumerate_graphs(5);
    for (i, g) in gs.iter().enumerate() {
        for h in &gs[i + 1..] {
            assert!(!brute_isomorphic(g, h));
        }
    }
}

#[test]
fn obstruction_example_counts() {
    // 4P_4/A with A the two ends of the path
    let spec = QuotientSpec::new(family::path(4), 4, VertexSet::from_slice(&[0, 3]));
    let g = quotient_family(&spec).unwrap();
    assert_eq!((g.n(), g.edge_count()), (10, 12));
    assert!(spec.is_obstruction_shape());
}
