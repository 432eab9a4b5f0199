mod common;

use brittle_core::brittleness::brittleness;
use brittle_core::conn::ConnFn;
use brittle_core::finders::*;
use brittle_core::iso::enumerate_graphs;
use brittle_core::{Graph, VertexSet};
use common::{graph, random_graph};
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

#[test]
fn bridges_partition_edges_exhaustive() {
    for n in 0..=6 {
        for g in enumerate_graphs(n) {
            for a in 0u64..(1 << n) {
                let a = VertexSet(a);
                let bridges = tutte_bridges(&g, a).unwrap();
                let mut seen = Vec::new();
                for b in &bridges {
                    assert!(!b.edges.is_empty());
                    for e in b.edges.iter() {
                        assert!(!seen.contains(&e), "edge {e} twice");
                        seen.push(e);
                    }
                    // internal vertices avoid A; attachments are exactly the A-part
                    assert_eq!(b.attachments, b.vertices.intersection(a));
                    assert_eq!(b.edges.vertices(), b.vertices);
                }
                assert_eq!(seen.len(), g.edge_count());

                let mut ours: Vec<_> = bridges.into_iter().map(|b| b.edges).collect();
                let mut theirs = edge_classes_avoiding(&g, a);
                ours.sort_by_key(|s| s.as_slice().to_vec());
                theirs.sort_by_key(|s| s.as_slice().to_vec());
                assert_eq!(ours, theirs, "{g:?} A={a:?}");
            }
        }
    }
}

#[test]
fn bridge_deletion_costs_at_most_the_attachment_set() {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    for _ in 0..200 {
        let n = rng.gen_range(2..=7);
        let g = random_graph(&mut rng, n, 0.45);
        if g.edge_count() > 12 {
            continue;
        }
        let a = VertexSet(rng.gen_range(0..1u64 << n));
        let k = rng.gen_range(1..=2);
        let h = delete_bridges(&g, a, k).unwrap().graph;
        let bg = brittleness(ConnFn::VertexCut, &g, k).unwrap().value;
        let bh = brittleness(ConnFn::VertexCut, &h, k).unwrap().value;
        assert!(bh + a.len() >= bg, "{g:?} A={a:?} k={k}");
    }
}

fn brute_sunflower(f: &SetFamily, p: usize) -> bool {
    let m = f.len();
    (0u32..1 << m).any(|pick| {
        if pick.count_ones() as usize != p {
            return false;
        }
        let idx: Vec<usize> = (0..m).filter(|&i| pick >> i & 1 == 1).collect();
        if idx.len() < 2 {
            return true;
        }
        let core = f.sets[idx[0]].intersection(f.sets[idx[1]]);
        idx.iter().enumerate().all(|(x, &i)| {
            idx[x + 1..]
                .iter()
                .all(|&j| f.sets[i] != f.sets[j] && f.sets[i].intersection(f.sets[j]) == core)
        })
    })
}

fn ordered_tuples(pool: &[usize], n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for (i, &x) in pool.iter().enumerate() {
        let mut rest = pool.to_vec();
        rest.remove(i);
        for mut tail in ordered_tuples(&rest, n - 1) {
            tail.insert(0, x);
            out.push(tail);
        }
    }
    out
}

fn brute_bipattern(g: &Graph, s: VertexSet, t: VertexSet, n: usize) -> bool {
    use brittle_core::family::JoinKind;
    let ss = ordered_tuples(&s.to_vec(), n);
    let ts = ordered_tuples(&t.to_vec(), n);
    [JoinKind::Mat, JoinKind::AntiMat, JoinKind::Tri].iter().any(|&kind| {
        ss.iter().any(|a| {
            ts.iter().any(|b| {
                (0..n).all(|i| (0..n).all(|j| g.has_edge(a[i], b[j]) == kind.crosses(i, j)))
            })
        })
    })
}

fn two_set(universe: usize) -> impl Strategy<Value = VertexSet> {
    (0..universe, 0..universe)
        .prop_filter("distinct", |(a, b)| a != b)
        .prop_map(|(a, b)| VertexSet::from_slice(&[a, b]))
}

proptest! {
    #[test]
    fn sunflower_threshold_two_sets(sets in proptest::collection::btree_set(two_set(12), 9..20)) {
        // more than 2!(3-1)^2 = 8 distinct 2-sets
        let f = SetFamily::new(sets.into_iter().collect());
        let s = find_sunflower(&f, 3).expect("threshold guarantees a sunflower");
        prop_assert!(check_sunflower(&f, &s, 3));
    }

    #[test]
    fn sunflower_matches_brute_force(
        sets in proptest::collection::vec(any::<u8>().prop_map(|b| VertexSet(b as u64)), 0..10),
        p in 1usize..5,
    ) {
        let f = SetFamily::new(sets);
        match find_sunflower(&f, p) {
            Some(s) => prop_assert!(check_sunflower(&f, &s, p)),
            None => prop_assert!(!brute_sunflower(&f, p)),
        }
    }

    #[test]
    fn mono_clique_matches_brute_force(g in graph(0, 8), n in 1usize..5) {
        let c = EdgeColoring::from_graph(&g);
        let brute = (0u64..1 << g.n()).any(|s| {
            VertexSet(s).len() == n && (0..2).any(|col| {
                let v = VertexSet(s).to_vec();
                v.iter().enumerate().all(|(i, &a)| v[i + 1..].iter().all(|&b| c.color(a, b) == col))
            })
        });
        match find_mono_clique(&c, n) {
            Some((s, col)) => prop_assert!(check_mono_clique(&c, n, s, col)),
            None => prop_assert!(!brute),
        }
    }

    #[test]
    fn trichotomy_matches_brute_force(g in graph(2, 8), split in any::<u64>(), n in 1usize..4) {
        let s = VertexSet(split).intersection(g.vertices());
        let t = s.complement(g.n());
        let r = bipartite_trichotomy(&g, s, t, n).unwrap();
        match &r.witness {
            Some(w) => prop_assert!(check_bipattern(&g, s, t, n, w)),
            None => prop_assert!(!brute_bipattern(&g, s, t, n)),
        }
    }

    #[test]
    fn degree_or_path_certificates(g in graph(1, 10), k in 1usize..6, l in 1usize..7) {
        let c = degree_or_path(&g, k, l);
        if c != DegreeOrPath::Absent {
            prop_assert!(check_degree_or_path(&g, k, l, &c));
        } else {
            prop_assert!(g.vertices().iter().all(|v| g.degree(v) < k));
        }
    }
}

#[test]
fn ramsey_on_six_vertices() {
    let mut rng = ChaCha8Rng::seed_from_u64(6);
    for _ in 0..10_000 {
        let c = EdgeColoring::new(6, 2, |_, _| rng.gen_range(0..2)).unwrap();
        let (s, col) = find_mono_clique(&c, 3).expect("R(3;2) = 6");
        assert!(check_mono_clique(&c, 3, s, col));
    }
}

#[test]
fn degree_or_path_guarantee_above_threshold() {
    let mut rng = ChaCha8Rng::seed_from_u64(8);
    let (k, l) = (4, 4);
    let threshold = degree_or_path_threshold(k, l).unwrap() as usize;
    let mut tried = 0;
    while tried < 100 {
        let n = rng.gen_range(threshold..threshold + 6);
        let g = random_graph(&mut rng, n, 0.2);
        if !g.is_connected() {
            continue;
        }
        tried += 1;
        let c = degree_or_path(&g, k, l);
        assert!(check_degree_or_path(&g, k, l, &c), "{g:?}");
    }
    // a long path keeps the maximum degree at 2, so the path side must fire
    let p = brittle_core::family::path(threshold);
    assert!(matches!(degree_or_path(&p, k, l), DegreeOrPath::InducedPath(_)));
}

#[test]
fn absent_induced_path_is_genuine() {
    // exhaustive over small graphs: Absent only if no vertex is heavy and no
    // induced path of the requested order exists
    fn has_path(g: &Graph, l: usize) -> bool {
        common::permutations(g.n()).iter().any(|p| check_induced_path(g, &p[..l]))
    }
    for n in 1..=6 {
        for g in enumerate_graphs(n) {
            for l in 1..=n {
                let c = degree_or_path(&g, n, l);
                assert_eq!(c == DegreeOrPath::Absent, !has_path(&g, l), "{g:?} l={l}");
            }
        }
    }
}
