//! Verification reports and the certificates they carry.
//!
//! Graphs inside witnesses are graph6 strings. [`Witness::validate`]
//! re-checks a certificate from its serialised form alone, so a report read
//! back from JSON can be audited without rerunning the claim.

use std::collections::BTreeMap;

use brittle_core::bounds::{bound_ell, BoundFamily, BoundParams};
use brittle_core::brittleness::{brittleness_with, partition_width_with, Limits, Partition};
use brittle_core::conn::{cutrank, ConnFn};
use brittle_core::family::JoinKind;
use brittle_core::finders::{
    check_bipattern, check_degree_or_path, delete_bridges, check_mono_clique, check_sunflower, BiPattern,
    DegreeOrPath, EdgeColoring, SetFamily, Sunflower,
};
use brittle_core::gf2::BitMatrix;
use brittle_core::iso::is_isomorphic;
use brittle_core::lrw::{layout_width, Layout};
use brittle_core::vertex_minor::{local_complement, pivot, LcWord};
use brittle_core::{Graph, VertexSet};
use serde::{Deserialize, Serialize};

use crate::formats::{emit_graph6, parse_graph6};

/// JSON schema for [`Report`], kept next to the sources.
pub const REPORT_SCHEMA: &str = include_str!("../schema/report.schema.json");

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Inconclusive,
}

impl Status {
    pub fn exit_code(self) -> i32 {
        match self {
            Status::Pass => 0,
            Status::Fail => 1,
            Status::Inconclusive => 2,
        }
    }

    /// Fail beats inconclusive beats pass.
    pub fn worst(self, other: Status) -> Status {
        use Status::*;
        match (self, other) {
            (Fail, _) | (_, Fail) => Fail,
            (Inconclusive, _) | (_, Inconclusive) => Inconclusive,
            _ => Pass,
        }
    }
}

impl std::fmt::Display for Status {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.pad(match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::Inconclusive => "inconclusive",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub claim: String,
    pub params: BTreeMap<String, i64>,
    pub status: Status,
    /// Instances examined.
    pub checked: u64,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub value: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub partition: Option<Vec<Vec<usize>>>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub worst_union: Option<Vec<usize>>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub witness: Option<Witness>,
    pub detail: String,
    pub elapsed_ms: u64,
}

impl Report {
    pub fn line(&self) -> String {
        format!(
            "{:<28} {:<12} checked={:<7} {:>7}ms  {}",
            self.claim, self.status, self.checked, self.elapsed_ms, self.detail
        )
    }
}

fn g6(s: &str) -> Result<Graph, String> {
    parse_graph6(s).map_err(|e| e.to_string())
}

fn conn_fn(s: &str) -> Result<ConnFn, String> {
    s.parse().map_err(|e: brittle_core::Error| e.to_string())
}

fn ensure(ok: bool, msg: impl Into<String>) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg.into())
    }
}

fn join_kind(s: &str) -> Result<JoinKind, String> {
    [JoinKind::Mat, JoinKind::AntiMat, JoinKind::Tri]
        .into_iter()
        .find(|k| k.name() == s)
        .ok_or_else(|| format!("unknown join kind {s}"))
}

fn wide() -> Limits {
    Limits {
        max_ground: 15,
        naive_max_ground: 10,
        ..Limits::default()
    }
}

/// A machine-checkable certificate.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Witness {
    /// An optimal partition: its width is `value`, and no partition does
    /// better. `at_least` is the claimed lower bound, if any.
    Brittleness {
        function: String,
        k: usize,
        graph: String,
        value: usize,
        partition: Vec<Vec<usize>>,
        worst_union: Vec<usize>,
        #[serde(skip_serializing_if = "Option::is_none", default)]
        at_least: Option<usize>,
    },
    /// Two exact values related by `lhs <= rhs + slack`.
    Inequality {
        function: String,
        k: usize,
        larger: String,
        smaller: String,
        lhs: usize,
        rhs: usize,
        slack: usize,
        /// Turns `larger` into `smaller`.
        word: String,
    },
    /// `kappa(G) <= kappa(G') + |A|` where `G'` drops the bridges of `A`
    /// with at most `k` edges.
    BridgeDeletion {
        graph: String,
        a: Vec<usize>,
        k: usize,
        before: usize,
        after: usize,
    },
    Pivot {
        graph: String,
        u: usize,
        v: usize,
        result: String,
    },
    CutRank {
        graph: String,
        vertex: usize,
        set: Vec<usize>,
        value: usize,
    },
    Submodular {
        rows: Vec<u64>,
        cols: usize,
        x1: u64,
        y1: u64,
        x2: u64,
        y2: u64,
        lhs: usize,
        rhs: usize,
    },
    /// `word` applied to `graph` is isomorphic to `target`.
    LcWord {
        graph: String,
        word: String,
        target: String,
    },
    Bound {
        family: String,
        k: u64,
        n: u64,
        value: String,
    },
    Graph6 {
        graph6: String,
        n: usize,
        edges: Vec<[usize; 2]>,
    },
    Sunflower {
        sets: Vec<Vec<usize>>,
        p: usize,
        core: Vec<usize>,
        petals: Vec<usize>,
    },
    MonoClique {
        n: usize,
        /// Colour of `{u, v}` for `u < v`, row by row.
        colors: Vec<Vec<usize>>,
        size: usize,
        clique: Vec<usize>,
        color: usize,
    },
    Bipattern {
        graph: String,
        s: Vec<usize>,
        t: Vec<usize>,
        n: usize,
        join: String,
        s_order: Vec<usize>,
        t_order: Vec<usize>,
    },
    DegreeOrPath {
        graph: String,
        k: usize,
        l: usize,
        #[serde(skip_serializing_if = "Option::is_none", default)]
        vertex: Option<usize>,
        #[serde(skip_serializing_if = "Option::is_none", default)]
        path: Option<Vec<usize>>,
    },
    /// A layout of width at most `beta + k/2`, built from an optimal
    /// ρ-partition by concatenating its blocks.
    LrwLayout {
        graph: String,
        k: usize,
        beta: usize,
        partition: Vec<Vec<usize>>,
        layout: Vec<usize>,
        width: usize,
        lrw: usize,
    },
}

impl Witness {
    pub fn brittleness(f: ConnFn, g: &Graph, k: usize, r: &brittle_core::brittleness::BrittlenessResult, at_least: Option<usize>) -> Self {
        Witness::Brittleness {
            function: f.name().into(),
            k,
            graph: emit_graph6(g),
            value: r.value,
            partition: r.partition.blocks.clone(),
            worst_union: r.worst_union.clone(),
            at_least,
        }
    }

    /// Re-checks the certificate; `Err` explains the first mismatch.
    pub fn validate(&self) -> Result<(), String> {
        match self {
            Witness::Brittleness {
                function,
                k,
                graph,
                value,
                partition,
                worst_union,
                at_least,
            } => {
                let f = conn_fn(function)?;
                let g = g6(graph)?;
                let p = Partition::new(*k, partition.clone());
                let w = partition_width_with(f, &g, &p, &wide()).map_err(|e| e.to_string())?;
                ensure(w.value == *value, format!("partition width {} != {value}", w.value))?;
                let union_width = union_value(f, &g, &p, worst_union)?;
                ensure(union_width == *value, "worst union does not attain the width")?;
                let best = brittleness_with(f, &g, *k, &wide()).map_err(|e| e.to_string())?;
                ensure(best.value == *value, format!("optimum is {}, not {value}", best.value))?;
                ensure(at_least.is_none_or(|b| *value >= b), "below the claimed bound")
            }
            Witness::Inequality {
                function,
                k,
                larger,
                smaller,
                lhs,
                rhs,
                slack,
                word,
            } => {
                let f = conn_fn(function)?;
                let w: LcWord = word.parse().map_err(|e: brittle_core::Error| e.to_string())?;
                let reached = w.apply(&g6(larger)?).map_err(|e| e.to_string())?.graph;
                ensure(is_isomorphic(&reached, &g6(smaller)?), "word does not produce the smaller graph")?;
                let exact = |s: &str| -> Result<usize, String> {
                    Ok(brittleness_with(f, &g6(s)?, *k, &wide())
                        .map_err(|e| e.to_string())?
                        .value)
                };
                ensure(exact(larger)? == *lhs, "left side does not recompute")?;
                ensure(exact(smaller)? == *rhs, "right side does not recompute")?;
                ensure(lhs <= &(rhs + slack), format!("{lhs} > {rhs} + {slack}"))
            }
            Witness::BridgeDeletion {
                graph,
                a,
                k,
                before,
                after,
            } => {
                let g = g6(graph)?;
                let a = VertexSet::from_slice(a);
                let h = delete_bridges(&g, a, *k).map_err(|e| e.to_string())?.graph;
                let exact = |g: &Graph| -> Result<usize, String> {
                    Ok(brittleness_with(ConnFn::VertexCut, g, *k, &wide())
                        .map_err(|e| e.to_string())?
                        .value)
                };
                ensure(exact(&g)? == *before && exact(&h)? == *after, "values do not recompute")?;
                ensure(*before <= after + a.len(), format!("{before} > {after} + {}", a.len()))
            }
            Witness::Pivot { graph, u, v, result } => {
                let g = g6(graph)?;
                let direct = pivot(&g, *u, *v).map_err(|e| e.to_string())?;
                let lc = |g: &Graph, x| local_complement(g, x).map_err(|e| e.to_string());
                let composed = lc(&lc(&lc(&g, *u)?, *v)?, *u)?;
                ensure(direct == composed, "pivot differs from *u*v*u")?;
                ensure(emit_graph6(&direct) == *result, "recorded result differs")
            }
            Witness::CutRank {
                graph,
                vertex,
                set,
                value,
            } => {
                let g = g6(graph)?;
                let h = local_complement(&g, *vertex).map_err(|e| e.to_string())?;
                let s = VertexSet::from_slice(set);
                g.check_set(s).map_err(|e| e.to_string())?;
                ensure(cutrank(&g, s) == *value && cutrank(&h, s) == *value, "cut-rank changed")
            }
            Witness::Submodular {
                rows,
                cols,
                x1,
                y1,
                x2,
                y2,
                lhs,
                rhs,
            } => {
                let m = BitMatrix::new(rows.clone(), *cols).map_err(|e| e.to_string())?;
                let (x1, y1, x2, y2) = (VertexSet(*x1), VertexSet(*y1), VertexSet(*x2), VertexSet(*y2));
                let l = m.sub_rank(x1, y1) + m.sub_rank(x2, y2);
                let r = m.sub_rank(x1.intersection(x2), y1.union(y2))
                    + m.sub_rank(x1.union(x2), y1.intersection(y2));
                ensure(l == *lhs && r == *rhs, "ranks do not recompute")?;
                ensure(l >= r, format!("{l} < {r}"))
            }
            Witness::LcWord { graph, word, target } => {
                let g = g6(graph)?;
                let w: LcWord = word.parse().map_err(|e: brittle_core::Error| e.to_string())?;
                let out = w.apply(&g).map_err(|e| e.to_string())?.graph;
                ensure(is_isomorphic(&out, &g6(target)?), "word does not reach the target")
            }
            Witness::Bound { family, k, n, value } => {
                let fam: BoundFamily = family.parse().map_err(|e: brittle_core::Error| e.to_string())?;
                let got = bound_ell(fam, &BoundParams::new(*k, *n)).map_err(|e| e.to_string())?;
                ensure(got.to_string() == *value, format!("bound recomputes to {got}"))
            }
            Witness::Graph6 { graph6, n, edges } => {
                let pairs: Vec<(usize, usize)> = edges.iter().map(|e| (e[0], e[1])).collect();
                let g = Graph::from_edges(*n, &pairs).map_err(|e| e.to_string())?;
                ensure(emit_graph6(&g) == *graph6, "encoding differs")?;
                ensure(g6(graph6)? == g, "decoding differs")
            }
            Witness::Sunflower { sets, p, core, petals } => {
                let f = SetFamily::new(sets.iter().map(|s| VertexSet::from_slice(s)).collect());
                let s = Sunflower {
                    core: VertexSet::from_slice(core),
                    petals: petals.clone(),
                };
                ensure(check_sunflower(&f, &s, *p), "not a sunflower")
            }
            Witness::MonoClique {
                n,
                colors,
                size,
                clique,
                color,
            } => {
                let palette = colors.iter().flatten().max().map_or(1, |m| m + 1);
                let get = |u: usize, v: usize| {
                    let (a, b) = if u < v { (u, v) } else { (v, u) };
                    colors.get(a).and_then(|r| r.get(b - a - 1)).copied()
                };
                ensure((0..*n).all(|u| (u + 1..*n).all(|v| get(u, v).is_some())), "colouring is incomplete")?;
                let c = EdgeColoring::new(*n, palette, |u, v| get(u, v).unwrap_or(0)).map_err(|e| e.to_string())?;
                ensure(
                    check_mono_clique(&c, *size, VertexSet::from_slice(clique), *color),
                    "not a monochromatic clique",
                )
            }
            Witness::Bipattern {
                graph,
                s,
                t,
                n,
                join,
                s_order,
                t_order,
            } => {
                let g = g6(graph)?;
                let w = BiPattern {
                    s: s_order.clone(),
                    t: t_order.clone(),
                    kind: join_kind(join)?,
                };
                ensure(
                    check_bipattern(&g, VertexSet::from_slice(s), VertexSet::from_slice(t), *n, &w),
                    "pattern does not match",
                )
            }
            Witness::DegreeOrPath {
                graph,
                k,
                l,
                vertex,
                path,
            } => {
                let g = g6(graph)?;
                let c = match (vertex, path) {
                    (Some(v), None) => DegreeOrPath::HighDegree(*v),
                    (None, Some(p)) => DegreeOrPath::InducedPath(p.clone()),
                    _ => return Err("exactly one of vertex and path is expected".into()),
                };
                ensure(check_degree_or_path(&g, *k, *l, &c), "certificate rejected")
            }
            Witness::LrwLayout {
                graph,
                k,
                beta,
                partition,
                layout,
                width,
                lrw,
            } => {
                let g = g6(graph)?;
                let p = Partition::new(*k, partition.clone());
                let pw = partition_width_with(ConnFn::RankCut, &g, &p, &wide()).map_err(|e| e.to_string())?;
                ensure(pw.value == *beta, "partition width differs from beta")?;
                let flat: Vec<usize> = partition.iter().flatten().copied().collect();
                ensure(flat == *layout, "layout is not the block concatenation")?;
                let l = Layout::new(layout.clone()).map_err(|e| e.to_string())?;
                let got = layout_width(&g, &l).map_err(|e| e.to_string())?;
                ensure(got == *width, "layout width does not recompute")?;
                ensure(lrw <= width, "lrw above a layout width")?;
                ensure(*width <= beta + k / 2, format!("{width} > {beta} + {}", k / 2))
            }
        }
    }
}

fn union_value(f: ConnFn, g: &Graph, p: &Partition, blocks: &[usize]) -> Result<usize, String> {
    use brittle_core::conn::{eval, GroundSet};
    use brittle_core::EdgeSet;
    let mut picked = Vec::new();
    for &b in blocks {
        picked.extend(p.blocks.get(b).ok_or("worst union names a missing block")?.iter().copied());
    }
    let x = match f {
        ConnFn::VertexCut => {
            let edges = g.edges();
            let mut es = EdgeSet::new();
            for e in picked {
                es.insert(*edges.get(e).ok_or("edge index out of range")?);
            }
            GroundSet::Edges(es)
        }
        _ => GroundSet::Vertices(VertexSet::from_slice(&picked)),
    };
    eval(f, g, &x).map_err(|e| e.to_string())
}

#[cfg(test)]
mod tests {
    use super::*;
    use brittle_core::brittleness::brittleness;
    use brittle_core::family::{path, star};

    #[test]
    fn brittleness_witness_round_trip() {
        let g = star(3);
        let r = brittleness(ConnFn::EdgeCut, &g, 1).unwrap();
        let w = Witness::brittleness(ConnFn::EdgeCut, &g, 1, &r, Some(3));
        w.validate().unwrap();
        let text = serde_json::to_string(&w).unwrap();
        let back: Witness = serde_json::from_str(&text).unwrap();
        assert_eq!(back, w);
        let Witness::Brittleness { value, .. } = &w else { unreachable!() };
        assert_eq!(*value, 3);
    }

    #[test]
    fn tampered_witnesses_fail() {
        let g = path(4);
        let r = brittleness(ConnFn::RankCut, &g, 2).unwrap();
        let mut w = Witness::brittleness(ConnFn::RankCut, &g, 2, &r, None);
        if let Witness::Brittleness { value, .. } = &mut w {
            *value += 1;
        }
        assert!(w.validate().is_err());
        let w = Witness::Pivot {
            graph: "Ch".into(),
            u: 0,
            v: 1,
            result: "Ch".into(),
        };
        assert!(w.validate().is_err());
        let w = Witness::LcWord {
            graph: "Ch".into(),
            word: "lc 1".into(),
            target: "Ch".into(),
        };
        assert!(w.validate().is_err());
    }
}
