#![allow(dead_code)]

use brittle_core::Graph;
use proptest::prelude::*;
use rand::Rng;

/// Graph on `n` vertices from upper-triangle bits in row order.
pub fn from_bits(n: usize, bits: &[bool]) -> Graph {
    let mut edges = Vec::new();
    let mut i = 0;
    for u in 0..n {
        for v in u + 1..n {
            if bits[i] {
                edges.push((u, v));
            }
            i += 1;
        }
    }
    Graph::from_edges(n, &edges).unwrap()
}

pub fn graph_on(n: usize) -> impl Strategy<Value = Graph> {
    proptest::collection::vec(any::<bool>(), n * n.saturating_sub(1) / 2)
        .prop_map(move |bits| from_bits(n, &bits))
}

pub fn graph(min_n: usize, max_n: usize) -> impl Strategy<Value = Graph> {
    (min_n..=max_n).prop_flat_map(graph_on)
}

pub fn random_graph<R: Rng>(rng: &mut R, n: usize, p: f64) -> Graph {
    let bits: Vec<bool> = (0..n * n.saturating_sub(1) / 2)
        .map(|_| rng.gen_bool(p))
        .collect();
    from_bits(n, &bits)
}

/// All permutations of `0..n` in lexicographic order.
pub fn permutations(n: usize) -> Vec<Vec<usize>> {
    fn rec(n: usize, cur: &mut Vec<usize>, used: u64, out: &mut Vec<Vec<usize>>) {
        if cur.len() == n {
            out.push(cur.clone());
            return;
        }
        for v in 0..n {
            if used >> v & 1 == 0 {
                cur.push(v);
                rec(n, cur, used | 1 << v, out);
                cur.pop();
            }
        }
    }
    let mut out = Vec::new();
    rec(n, &mut Vec::new(), 0, &mut out);
    out
}
