//! Named verification claims.
//!
//! Each claim checks one statement over a parameter grid picked by a
//! [`Scale`]: `small` is the smoke-test grid, `medium` a wider one, and a
//! number sets the claim's main size parameter (documented in
//! [`Claim::grid`]). A passing claim carries a witness that re-validates on
//! its own; the harness checks that before reporting a pass.

use std::collections::BTreeMap;
use std::time::Instant;

use brittle_core::bounds::{bound_ell, BoundFamily, BoundParams};
use brittle_core::brittleness::{
    brittleness_naive_with, brittleness_with, deletion_monotonicity_check, Limits,
};
use brittle_core::conn::{cutrank, ConnFn};
use brittle_core::family::{
    complete, edgeless, join, m_copies, path, quotient_family, star, JoinKind, QuotientSpec,
};
use brittle_core::finders::{
    bipartite_trichotomy, check_bipattern, check_degree_or_path, check_mono_clique,
    check_sunflower, degree_or_path, degree_or_path_threshold, delete_bridges, find_mono_clique,
    find_sunflower, DegreeOrPath, EdgeColoring, SetFamily,
};
use brittle_core::gf2::BitMatrix;
use brittle_core::iso::enumerate_graphs;
use brittle_core::lrw::check_lrw_brittleness_bound;
use brittle_core::vertex_minor::{
    construction, has_vertex_minor, local_complement, pivot, ConstructionName, LcOp, LcWord,
    VertexMinorOutcome, DEFAULT_STATE_LIMIT,
};
use brittle_core::{Error, Graph, VertexSet};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::formats::{emit_graph6, emit_sparse6, parse_graph6, parse_sparse6};
use crate::report::{Report, Status, Witness};

/// Overrides [`DEFAULT_STATE_LIMIT`] for vertex-minor searches.
pub const STATE_LIMIT_ENV: &str = "BRITTLE_STATE_LIMIT";

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Scale {
    Small,
    Medium,
    Size(usize),
}

impl std::str::FromStr for Scale {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "small" => Ok(Scale::Small),
            "medium" => Ok(Scale::Medium),
            other => other
                .parse()
                .map(Scale::Size)
                .map_err(|_| format!("scale must be small, medium or a number, got {other}")),
        }
    }
}

impl Scale {
    /// `small`, `medium`, or the number itself.
    fn pick(self, small: usize, medium: usize) -> usize {
        match self {
            Scale::Small => small,
            Scale::Medium => medium,
            Scale::Size(n) => n,
        }
    }
}

#[derive(Clone, Copy, Debug)]
pub struct Ctx {
    pub scale: Scale,
    pub state_limit: usize,
    pub seed: u64,
}

impl Ctx {
    pub fn new(scale: Scale) -> Self {
        Ctx {
            scale,
            state_limit: DEFAULT_STATE_LIMIT,
            seed: 0x5eed,
        }
    }

    /// Reads the state limit from the environment, if set.
    pub fn from_env(scale: Scale) -> Result<Self, String> {
        let mut ctx = Ctx::new(scale);
        if let Ok(v) = std::env::var(STATE_LIMIT_ENV) {
            ctx.state_limit = v
                .trim()
                .parse()
                .map_err(|_| format!("{STATE_LIMIT_ENV} must be a positive integer, got {v:?}"))?;
        }
        Ok(ctx)
    }

    fn rng(&self, salt: u64) -> ChaCha8Rng {
        ChaCha8Rng::seed_from_u64(self.seed ^ salt.wrapping_mul(0x9e37_79b9_7f4a_7c15))
    }
}

pub struct Claim {
    pub id: &'static str,
    pub about: &'static str,
    /// What `small`, `medium` and a number mean for this claim.
    pub grid: &'static str,
    run: fn(&Ctx, &mut Outcome) -> Result<(), Error>,
}

/// What a claim body fills in.
#[derive(Default)]
struct Outcome {
    params: BTreeMap<String, i64>,
    checked: u64,
    failure: Option<String>,
    undecided: Option<String>,
    witness: Option<Witness>,
    value: Option<u64>,
    partition: Option<Vec<Vec<usize>>>,
    worst_union: Option<Vec<usize>>,
    detail: String,
}

impl Outcome {
    fn param(&mut self, key: &str, v: usize) {
        self.params.insert(key.into(), v as i64);
    }

    /// Records a violation with its counterexample; the first one wins.
    fn fail(&mut self, msg: String, w: Option<Witness>) {
        if self.failure.is_none() {
            self.failure = Some(msg);
            if w.is_some() {
                self.witness = w;
            }
        }
    }
}

pub fn claims() -> &'static [Claim] {
    &CLAIMS
}

pub fn find_claim(id: &str) -> Option<&'static Claim> {
    CLAIMS.iter().find(|c| c.id == id)
}

pub fn claim_ids() -> Vec<&'static str> {
    CLAIMS.iter().map(|c| c.id).collect()
}

impl Claim {
    pub fn run(&self, ctx: &Ctx) -> Report {
        let start = Instant::now();
        let mut o = Outcome::default();
        let res = (self.run)(ctx, &mut o);
        let mut status = match (&res, &o.failure, &o.undecided) {
            (Err(Error::ResourceLimit { .. }), None, _) => Status::Inconclusive,
            (Err(_), _, _) | (_, Some(_), _) => Status::Fail,
            (Ok(()), None, Some(_)) => Status::Inconclusive,
            (Ok(()), None, None) => Status::Pass,
        };
        let mut detail = match (&res, &o.failure, &o.undecided) {
            (Err(e), None, _) => e.to_string(),
            (_, Some(f), _) => f.clone(),
            (_, None, Some(u)) => u.clone(),
            _ => o.detail.clone(),
        };
        if status == Status::Pass {
            match o.witness.as_ref().map(Witness::validate) {
                Some(Ok(())) => {}
                Some(Err(e)) => {
                    status = Status::Fail;
                    detail = format!("witness rejected: {e}");
                }
                None => {
                    status = Status::Fail;
                    detail = "no witness recorded".into();
                }
            }
        }
        Report {
            claim: self.id.into(),
            params: o.params,
            status,
            checked: o.checked,
            value: o.value,
            partition: o.partition,
            worst_union: o.worst_union,
            witness: o.witness,
            detail,
            elapsed_ms: start.elapsed().as_millis() as u64,
        }
    }
}

fn random_graph<R: Rng>(rng: &mut R, n: usize, p: f64) -> Graph {
    let mut g = Graph::empty(n).expect("small order");
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                g.add_edge(u, v).expect("in range");
            }
        }
    }
    g
}

fn wide() -> Limits {
    Limits {
        max_ground: 15,
        naive_max_ground: 10,
        ..Limits::default()
    }
}

fn connected_with_edges(m: usize) -> Vec<Graph> {
    (1..=m + 1)
        .flat_map(enumerate_graphs)
        .filter(|h| h.edge_count() == m && h.is_connected())
        .collect()
}

fn connected_on(n: usize) -> Vec<Graph> {
    enumerate_graphs(n).into_iter().filter(Graph::is_connected).collect()
}

fn record_brittleness(o: &mut Outcome, w: Witness) {
    if let Witness::Brittleness {
        value,
        partition,
        worst_union,
        ..
    } = &w
    {
        o.value = Some(*value as u64);
        o.partition = Some(partition.clone());
        o.worst_union = Some(worst_union.clone());
    }
    o.witness = Some(w);
}

fn oracle_equivalence(ctx: &Ctx, o: &mut Outcome) -> Result<(), Error> {
    let max_n = ctx.scale.pick(5, 6);
    o.param("max_n", max_n);
    o.param("max_k", 3);
    let limits = Limits {
        max_ground: 15,
        naive_max_ground: 15,
        ..Limits::default()
    };
    let mut best: Option<(usize, Witness)> = None;
    for n in 0..=max_n {
        for g in enumerate_graphs(n) {
            for f in ConnFn::ALL {
                for k in 1..=3 {
                    let fast = brittleness_with(f, &g, k, &limits)?;
                    let naive = brittleness_naive_with(f, &g, k, &limits)?;
                    o.checked += 1;
                    let w = Witness::brittleness(f, &g, k, &fast, None);
                    if fast.value != naive {
                        o.fail(format!("{f} k={k} {}: solver {} vs naive {naive}", emit_graph6(&g), fast.value), Some(w));
                        return Ok(());
                    }
                    if best.as_ref().is_none_or(|(v, _)| fast.value > *v) {
                        best = Some((fast.value, w));
                    }
                }
            }
        }
    }
    let (v, w) = best.expect("at least K_0");
    o.detail = format!("solver = naive on every graph with n <= {max_n}; largest value {v}");
    record_brittleness(o, w);
    Ok(())
}

fn pivot_identity(ctx: &Ctx, o: &mut Outcome) -> Result<(), Error> {
    let count = ctx.scale.pick(500, 5000);
    o.param("count", count);
    o.param("max_n", 10);
    let mut rng = ctx.rng(2);
    while (o.checked as usize) < count {
        let n = rng.gen_range(2..=10);
        let p = rng.gen_range(0.2..0.8);
        let g = random_graph(&mut rng, n, p);
        let edges = g.edges();
        if edges.is_empty() {
            continue;
        }
        let e = edges[rng.gen_range(0..edges.len())];
        let (u, v) = if rng.gen_bool(0.5) { (e.0, e.1) } else { (e.1, e.0) };
        let direct = pivot(&g, u, v)?;
        let composed = local_complement(&local_complement(&local_complement(&g, u)?, v)?, u)?;
        o.checked += 1;
        let w = Witness::Pivot {
            graph: emit_graph6(&g),
            u,
            v,
            result: emit_graph6(&direct),
        };
        if direct != composed {
            o.fail(format!("pivot {u} {v} on {} differs from *u*v*u", emit_graph6(&g)), Some(w));
            return Ok(());
        }
        o.witness = Some(w);
    }
    o.detail = format!("{count} pivots equal their *u*v*u composition");
    Ok(())
}

fn cutrank_invariance(ctx: &Ctx, o: &mut Outcome) -> Result<(), Error> {
    let count = ctx.scale.pick(500, 5000);
    o.param("count", count);
    o.param("max_n", 12);
    let mut rng = ctx.rng(3);
    for _ in 0..count {
        let n = rng.gen_range(1..=12);
        let g = random_graph(&mut rng, n, 0.5);
        let v = rng.gen_range(0..n);
        let s = VertexSet(rng.gen_range(0..1u64 << n));
        let h = local_complement(&g, v)?;
        o.checked += 1;
        let w = Witness::CutRank {
            graph: emit_graph6(&g),
            vertex: v,
            set: s.to_vec(),
            value: cutrank(&g, s),
        };
        if cutrank(&g, s) != cutrank(&h, s) {
            o.fail(format!("cut-rank of {s:?} changes under *{v} on {}", emit_graph6(&g)), Some(w));
            return Ok(());
        }
        o.witness = Some(w);
    }
    o.detail = format!("{count} random (G, v, S): cut-rank unchanged by local complementation");
    Ok(())
}

fn vertex_obstruction(ctx: &Ctx, o: &mut Outcome) -> Result<(), Error> {
    let ells: Vec<usize> = match ctx.scale {
        Scale::Small => vec![1],
        Scale::Medium => vec![1, 2],
        Scale::Size(l) => vec![l],
    };
    o.param("max_k", 3);
    let mut tightest: Option<(usize, Witness)> = None;
    let mut skipped = 0;
    for &ell in &ells {
        for k in 1..=3 {
            for h in connected_with_edges(k + 1) {
                for a in 0u64..(1 << h.n()) {
                    let spec = QuotientSpec::new(h.clone(), 2 * ell + 1, VertexSet(a));
                    if spec.validate().is_err() || !spec.is_obstruction_shape() {
                        continue;
                    }
                    let g = quotient_family(&spec)?;
                    if g.edge_count() > wide().max_ground {
                        skipped += 1;
                        continue;
                    }
                    let r = brittleness_with(ConnFn::VertexCut, &g, k, &wide())?;
                    o.checked += 1;
                    let w = Witness::brittleness(ConnFn::VertexCut, &g, k, &r, Some(ell + 1));
                    if r.value < ell + 1 {
                        o.fail(format!("k={k} l={ell} {}: {} < {}", emit_graph6(&g), r.value, ell + 1), Some(w));
                        return Ok(());
                    }
                    let slack = r.value - (ell + 1);
                    if tightest.as_ref().is_none_or(|(s, _)| slack < *s) {
                        tightest = Some((slack, w));
                    }
                }
            }
        }
    }
    o.param("skipped", skipped);
    match tightest {
        Some((slack, w)) => {
            o.detail = format!("every instance reaches l+1 (l in {ells:?}); smallest margin {slack}; {skipped} over the size cap");
            record_brittleness(o, w);
        }
        None => o.undecided = Some(format!("no instance within the size cap for l in {ells:?}")),
    }
    Ok(())
}

fn bridge_deletion(ctx: &Ctx, o: &mut Outcome) -> Result<(), Error> {
    let count = ctx.scale.pick(200, 1000);
    o.param("count", count);
    o.param("max_n", 7);
    o.param("max_k", 2);
    let mut rng = ctx.rng(7);
    while (o.checked as usize) < count {
        let n = rng.gen_range(2..=7);
        let g = random_graph(&mut rng, n, 0.45);
        if g.edge_count() > 12 {
            continue;
        }
        let a = VertexSet(rng.gen_range(0..1u64 << n));
        let k = rng.gen_range(1..=2);
        let h = delete_bridges(&g, a, k)?.graph;
        let bg = brittleness_with(ConnFn::VertexCut, &g, k, &wide())?.value;
        let bh = brittleness_with(ConnFn::VertexCut, &h, k, &wide())?.value;
        o.checked += 1;
        let w = Witness::BridgeDeletion {
            graph: emit_graph6(&g),
            a: a.to_vec(),
            k,
            before: bg,
            after: bh,
        };
        if bg > bh + a.len() {
            o.fail(format!("A={:?} k={k} {}: {bg} > {bh} + {}", a.to_vec(), emit_graph6(&g), a.len()), Some(w));
            return Ok(());
        }
        o.witness = Some(w);
    }
    o.detail = format!("{count} random (G, A): kappa-brittleness drops by at most |A|");
    Ok(())
}

fn edge_obstruction(ctx: &Ctx, o: &mut Outcome) -> Result<(), Error> {
    let max_vertices = ctx.scale.pick(12, 15);
    o.param("max_vertices", max_vertices);
    o.param("max_k", 3);
    let mut skipped = 0;
    let mut largest: Option<(usize, Witness)> = None;
    for k in 1..=3 {
        for h in connected_on(k + 1) {
            for (n, m) in [(3, 1), (5, 2)] {
                let g = m_copies(&h, n)?;
                if g.n() > max_vertices {
                    skipped += 1;
                    continue;
                }
                for f in [ConnFn::EdgeCut, ConnFn::MatchingCut, ConnFn::RankCut] {
                    let r = brittleness_with(f, &g, k, &wide())?;
                    o.checked += 1;
                    let w = Witness::brittleness(f, &g, k, &r, Some(m + 1));
                    if r.value < m + 1 {
                        o.fail(format!("{f} k={k} {n}H with H={}: {} < {}", emit_graph6(&h), r.value, m + 1), Some(w));
                        return Ok(());
                    }
                    if largest.as_ref().is_none_or(|(size, _)| g.n() > *size) {
                        largest = Some((g.n(), w));
                    }
                }
            }
        }
    }
    o.param("skipped", skipped);
    let (size, w) = largest.expect("n = 3 instances always fit");
    o.detail = format!("nH reaches m+1 for eta, nu, rho up to {size} vertices; {skipped} instances over the cap");
    record_brittleness(o, w);
    Ok(())
}

fn star_exact(ctx: &Ctx, o: &mut Outcome) -> Result<(), Error> {
    let max_leaves = ctx.scale.pick(8, 9);
    o.param("max_leaves", max_leaves);
    let mut last = None;
    for total in 2..=max_leaves {
        for k in 1..total {
            let m = total - k;
            let g = star(total);
            let r = brittleness_with(ConnFn::EdgeCut, &g, k, &wide())?;
            let naive = brittleness_naive_with(ConnFn::EdgeCut, &g, k, &wide())?;
            o.checked += 1;
            let w = Witness::brittleness(ConnFn::EdgeCut, &g, k, &r, Some(m + 1));
            if r.value != m + 1 || naive != m + 1 {
                o.fail(format!("K_1,{total} k={k}: solver {} naive {naive}, expected {}", r.value, m + 1), Some(w));
                return Ok(());
            }
            last = Some(w);
        }
    }
    o.detail = format!("eta-brittleness of K_1,k+m is exactly m+1 for k+m <= {max_leaves}");
    if let Some(w) = last {
        record_brittleness(o, w);
    }
    Ok(())
}

fn one_vertex_deletion(ctx: &Ctx, o: &mut Outcome) -> Result<(), Error> {
    let count = ctx.scale.pick(200, 1000);
    o.param("count", count);
    o.param("max_n", 8);
    let mut rng = ctx.rng(11);
    for _ in 0..count {
        let n = rng.gen_range(1..=8);
        let g = random_graph(&mut rng, n, 0.5);
        let v = rng.gen_range(0..n);
        let k = rng.gen_range(1..=3);
        let c = deletion_monotonicity_check(&g, v, k)?;
        o.checked += 1;
        let h = g.delete_vertices(VertexSet::singleton(v))?.graph;
        let w = Witness::Inequality {
            function: ConnFn::MatchingCut.name().into(),
            k,
            larger: emit_graph6(&g),
            smaller: emit_graph6(&h),
            lhs: c.matching.0,
            rhs: c.matching.1,
            slack: 1,
            word: LcWord(vec![LcOp::Delete(v)]).to_string(),
        };
        if !c.holds() {
            o.fail(format!("{} v={v} k={k}: {c:?}", emit_graph6(&g)), Some(w));
            return Ok(());
        }
        o.witness = Some(w);
    }
    o.detail = format!("{count} random (G, v): nu and rho drop by at most one");
    Ok(())
}

/// A random word with `d` deletions and the graph it produces.
fn random_word<R: Rng>(rng: &mut R, g: &Graph, len: usize, d: usize) -> Result<(LcWord, Graph), Error> {
    let mut alive: Vec<usize> = (0..g.n()).collect();
    let mut word = LcWord::new();
    let mut dels = d;
    for step in 0..len + d {
        let remaining = len + d - step;
        let i = rng.gen_range(0..alive.len());
        if dels > 0 && rng.gen_range(0..remaining) < dels {
            word.push(LcOp::Delete(alive.remove(i)));
            dels -= 1;
        } else {
            word.push(LcOp::Lc(alive[i]));
        }
    }
    let h = word.apply(g)?.graph;
    Ok((word, h))
}

fn vertex_minor_monotone(ctx: &Ctx, o: &mut Outcome) -> Result<(), Error> {
    let count = ctx.scale.pick(200, 1000);
    o.param("count", count);
    o.param("max_n", 7);
    let mut rng = ctx.rng(13);
    for _ in 0..count {
        let n = rng.gen_range(2..=7);
        let g = random_graph(&mut rng, n, 0.5);
        let d = rng.gen_range(0..n);
        let len = rng.gen_range(0..5);
        let (word, h) = random_word(&mut rng, &g, len, d)?;
        let k = rng.gen_range(1..=3);
        let bg = brittleness_with(ConnFn::RankCut, &g, k, &wide())?.value;
        let bh = brittleness_with(ConnFn::RankCut, &h, k, &wide())?.value;
        o.checked += 1;
        let w = Witness::Inequality {
            function: ConnFn::RankCut.name().into(),
            k,
            larger: emit_graph6(&g),
            smaller: emit_graph6(&h),
            lhs: bg,
            rhs: bh,
            slack: d,
            word: word.to_string(),
        };
        if bg > bh + d {
            o.fail(format!("{} word {word} k={k}: {bg} > {bh} + {d}", emit_graph6(&g)), Some(w));
            return Ok(());
        }
        o.witness = Some(w);
    }
    o.detail = format!("{count} random vertex-minor pairs: rho-brittleness grows by at most the deletions");
    Ok(())
}

fn construction_claim(name: ConstructionName, ctx: &Ctx, o: &mut Outcome) -> Result<(), Error> {
    let ns: Vec<usize> = match ctx.scale {
        Scale::Small => (name.threshold()..=6).collect(),
        Scale::Medium => (name.threshold()..=9).collect(),
        Scale::Size(n) => vec![n],
    };
    o.param("min_n", ns[0]);
    o.param("max_n", *ns.last().expect("nonempty"));
    let mut texts = Vec::new();
    for n in ns {
        let c = construction(name, n)?;
        o.checked += 1;
        let w = Witness::LcWord {
            graph: emit_graph6(&c.input),
            word: c.word.to_string(),
            target: emit_graph6(&c.target),
        };
        if !c.verify()? {
            o.fail(format!("{} does not reach its target", c.describe()), Some(w));
            return Ok(());
        }
        texts.push(c.describe());
        o.witness = Some(w);
    }
    o.detail = texts.last().cloned().unwrap_or_default();
    Ok(())
}

/// `H_1 ⊲ H_2` against `P_{2n}` by vertex-minor search without deletions.
fn half_graph_to_path(first: fn(usize) -> Graph, ctx: &Ctx, o: &mut Outcome) -> Result<(), Error> {
    let ns: Vec<usize> = match ctx.scale {
        Scale::Small => (1..=4).collect(),
        Scale::Medium => (1..=5).collect(),
        Scale::Size(n) => vec![n],
    };
    o.param("max_n", *ns.last().expect("nonempty"));
    o.param("state_limit", ctx.state_limit);
    for n in ns {
        let g = join(&first(n), &edgeless(n), JoinKind::Tri)?;
        let p = path(2 * n);
        o.checked += 1;
        match has_vertex_minor(&g, &p, ctx.state_limit)? {
            VertexMinorOutcome::Found(word) => {
                o.detail = format!("n={n}: {word}");
                o.witness = Some(Witness::LcWord {
                    graph: emit_graph6(&g),
                    word: word.to_string(),
                    target: emit_graph6(&p),
                });
            }
            VertexMinorOutcome::Absent => {
                o.fail(format!("n={n}: P_{} is not locally equivalent", 2 * n), None);
                return Ok(());
            }
            VertexMinorOutcome::Inconclusive => {
                o.undecided = Some(format!("n={n}: state limit {} reached", ctx.state_limit));
                return Ok(());
            }
        }
    }
    Ok(())
}

fn tri_kk_to_path(ctx: &Ctx, o: &mut Outcome) -> Result<(), Error> {
    let ns: Vec<usize> = match ctx.scale {
        Scale::Small => (2..=5).collect(),
        Scale::Medium => (2..=6).collect(),
        Scale::Size(n) => vec![n],
    };
    o.param("max_n", *ns.last().expect("nonempty"));
    o.param("state_limit", ctx.state_limit);
    for n in ns {
        let c = construction(ConstructionName::TriKK, n)?;
        o.checked += 1;
        if !c.verify()? {
            o.fail(format!("{} does not reach S_{m} ⊲ K_{m}", c.describe(), m = n - 1), None);
            return Ok(());
        }
        let reduced = c.word.apply(&c.input)?;
        let p = path(2 * n - 2);
        match has_vertex_minor(&reduced.graph, &p, ctx.state_limit)? {
            VertexMinorOutcome::Found(tail) => {
                // renumber the tail into the input's vertex ids
                let mut back = vec![0; reduced.graph.n()];
                for (old, new) in reduced.old_to_new.iter().enumerate() {
                    if let Some(new) = new {
                        back[*new] = old;
                    }
                }
                let mut word = c.word.clone();
                for op in tail.0 {
                    word.push(match op {
                        LcOp::Lc(v) => LcOp::Lc(back[v]),
                        LcOp::Pivot(u, v) => LcOp::Pivot(back[u], back[v]),
                        LcOp::Delete(v) => LcOp::Delete(back[v]),
                    });
                }
                o.detail = format!("n={n}: {word}");
                o.witness = Some(Witness::LcWord {
                    graph: emit_graph6(&c.input),
                    word: word.to_string(),
                    target: emit_graph6(&p),
                });
            }
            VertexMinorOutcome::Absent => {
                o.fail(format!("n={n}: no P_{} after the reduction", 2 * n - 2), None);
                return Ok(());
            }
            VertexMinorOutcome::Inconclusive => {
                o.undecided = Some(format!("n={n}: state limit {} reached", ctx.state_limit));
                return Ok(());
            }
        }
    }
    Ok(())
}

fn submodularity(ctx: &Ctx, o: &mut Outcome) -> Result<(), Error> {
    let count = ctx.scale.pick(1000, 10_000);
    o.param("count", count);
    o.param("max_dim", 8);
    let mut rng = ctx.rng(17);
    for _ in 0..count {
        let r = rng.gen_range(1..=8);
        let c = rng.gen_range(1..=8);
        let rows: Vec<u64> = (0..r).map(|_| rng.gen_range(0..1u64 << c)).collect();
        let m = BitMatrix::new(rows.clone(), c)?;
        let mut pick = |bound: usize| VertexSet(rng.gen_range(0..1u64 << bound));
        let (x1, x2, y1, y2) = (pick(r), pick(r), pick(c), pick(c));
        let lhs = m.sub_rank(x1, y1) + m.sub_rank(x2, y2);
        let rhs = m.sub_rank(x1.intersection(x2), y1.union(y2)) + m.sub_rank(x1.union(x2), y1.intersection(y2));
        o.checked += 1;
        let w = Witness::Submodular {
            rows,
            cols: c,
            x1: x1.bits(),
            y1: y1.bits(),
            x2: x2.bits(),
            y2: y2.bits(),
            lhs,
            rhs,
        };
        if lhs < rhs {
            o.fail(format!("{lhs} < {rhs}"), Some(w));
            return Ok(());
        }
        o.witness = Some(w);
    }
    o.detail = format!("{count} random matrices up to 8x8: no violation");
    Ok(())
}

fn lrw_inequality(ctx: &Ctx, o: &mut Outcome) -> Result<(), Error> {
    let max_n = ctx.scale.pick(5, 6);
    o.param("max_n", max_n);
    o.param("max_k", 3);
    let mut best: Option<(usize, Witness)> = None;
    for n in 0..=max_n {
        for g in enumerate_graphs(n) {
            for k in 1..=3 {
                let c = check_lrw_brittleness_bound(&g, k)?;
                o.checked += 1;
                let w = Witness::LrwLayout {
                    graph: emit_graph6(&g),
                    k,
                    beta: c.beta,
                    partition: c.partition.blocks.clone(),
                    layout: c.block_layout.order.clone(),
                    width: c.block_layout_width,
                    lrw: c.lrw,
                };
                if !c.holds() {
                    o.fail(format!("{} k={k}: lrw {} layout {} bound {}", emit_graph6(&g), c.lrw, c.block_layout_width, c.bound()), Some(w));
                    return Ok(());
                }
                if best.as_ref().is_none_or(|(v, _)| c.lrw > *v) {
                    best = Some((c.lrw, w));
                }
            }
        }
    }
    let (v, w) = best.expect("K_0 at least");
    o.value = Some(v as u64);
    o.detail = format!("lrw <= beta_rho + floor(k/2) for all graphs with n <= {max_n}; block layouts attain it; max lrw {v}");
    o.witness = Some(w);
    Ok(())
}

fn bounds(ctx: &Ctx, o: &mut Outcome) -> Result<(), Error> {
    let top = ctx.scale.pick(20, 60) as u64;
    o.param("max_n", top as usize);
    let fixed = [
        (BoundFamily::Vertex, 1, 2, 4096u64),
        (BoundFamily::Edge, 1, 3, 6),
        (BoundFamily::Matching, 2, 3, 18),
    ];
    let name = |f: BoundFamily| match f {
        BoundFamily::Vertex => "vertex",
        BoundFamily::Edge => "edge",
        BoundFamily::Matching => "matching",
        BoundFamily::Rank => "rank",
    };
    for (fam, k, n, want) in fixed {
        let got = bound_ell(fam, &BoundParams::new(k, n))?;
        o.checked += 1;
        if got != want.into() {
            o.fail(format!("{} l({k},{n}) = {got}, expected {want}", name(fam)), None);
            return Ok(());
        }
    }
    // closed forms at k = 1 (and all k for the matching family)
    for n in 1..=top {
        let checks = [
            (BoundFamily::Vertex, 1u64, 256 * n.pow(4)),
            (BoundFamily::Edge, 1, n * (n - 1)),
            (BoundFamily::Matching, 1, 2 * (n - 1)),
            (BoundFamily::Matching, 3, 64 * (n - 1)),
        ];
        for (fam, k, want) in checks {
            let got = bound_ell(fam, &BoundParams::new(k, n))?;
            o.checked += 1;
            if got != want.into() {
                o.fail(format!("{} l({k},{n}) = {got}, expected {want}", name(fam)), None);
                return Ok(());
            }
        }
    }
    o.value = Some(4096);
    o.detail = "l(1,2)=4096 vertex, l(1,3)=6 edge, l(2,3)=18 matching; closed forms agree".into();
    o.witness = Some(Witness::Bound {
        family: "vertex".into(),
        k: 1,
        n: 2,
        value: "4096".into(),
    });
    Ok(())
}

fn graph6_roundtrip(ctx: &Ctx, o: &mut Outcome) -> Result<(), Error> {
    let max_n = ctx.scale.pick(5, 6);
    o.param("max_n", max_n);
    let mut last = None;
    let mut check = |o: &mut Outcome, g: &Graph| -> bool {
        o.checked += 1;
        let s = emit_graph6(g);
        let ok6 = parse_graph6(&s).ok().as_ref() == Some(g)
            && parse_graph6(&s).map(|h| emit_graph6(&h)).ok().as_deref() == Some(s.as_str());
        let sp = emit_sparse6(g);
        let oks = parse_sparse6(&sp).ok().as_ref() == Some(g)
            && parse_sparse6(&sp).map(|h| emit_sparse6(&h)).ok().as_deref() == Some(sp.as_str());
        last = Some(Witness::Graph6 {
            graph6: s,
            n: g.n(),
            edges: g.edges().into_iter().map(|e| [e.0, e.1]).collect(),
        });
        ok6 && oks
    };
    // every labelled graph up to six vertices, random ones beyond
    for n in 0..=max_n.min(6) {
        let pairs: Vec<(usize, usize)> = (0..n).flat_map(|j| (0..j).map(move |i| (i, j))).collect();
        for mask in 0u64..1 << pairs.len() {
            let chosen: Vec<(usize, usize)> = pairs.iter().enumerate().filter(|(b, _)| mask >> b & 1 == 1).map(|(_, &e)| e).collect();
            let g = Graph::from_edges(n, &chosen)?;
            if !check(o, &g) {
                o.fail(format!("round trip broke on {} / {}", emit_graph6(&g), emit_sparse6(&g)), None);
                return Ok(());
            }
        }
    }
    if max_n > 6 {
        let mut rng = ctx.rng(19);
        for _ in 0..10_000 {
            let n = rng.gen_range(7..=max_n.min(brittle_core::MAX_VERTICES));
            let g = random_graph(&mut rng, n, 0.5);
            if !check(o, &g) {
                o.fail(format!("round trip broke on {}", emit_graph6(&g)), None);
                return Ok(());
            }
        }
    }
    o.detail = format!("graph6 and sparse6 bit-exact on every labelled graph with n <= {}", max_n.min(6));
    o.witness = last;
    Ok(())
}

fn sunflowers(ctx: &Ctx, o: &mut Outcome) -> Result<(), Error> {
    let count = ctx.scale.pick(200, 2000);
    o.param("count", count);
    let mut rng = ctx.rng(23);
    // above s!(p-1)^s distinct s-sets a p-sunflower exists
    for (s, p, universe) in [(2usize, 3usize, 12usize), (3, 3, 12), (2, 4, 16)] {
        let threshold = (1..=s).product::<usize>() * (p - 1).pow(s as u32);
        for _ in 0..count / 3 + 1 {
            let size = rng.gen_range(threshold + 1..=threshold + 12);
            let mut sets: Vec<VertexSet> = Vec::new();
            while sets.len() < size {
                let mut x = VertexSet::EMPTY;
                while x.len() < s {
                    x.insert(rng.gen_range(0..universe));
                }
                if !sets.contains(&x) {
                    sets.push(x);
                }
            }
            let f = SetFamily::new(sets);
            o.checked += 1;
            match find_sunflower(&f, p) {
                Some(sf) if check_sunflower(&f, &sf, p) => {
                    o.witness = Some(Witness::Sunflower {
                        sets: f.sets.iter().map(|x| x.to_vec()).collect(),
                        p,
                        core: sf.core.to_vec(),
                        petals: sf.petals,
                    });
                }
                _ => {
                    o.fail(format!("no valid {p}-sunflower among {size} distinct {s}-sets"), None);
                    return Ok(());
                }
            }
        }
    }
    o.detail = "families above s!(p-1)^s always yield a checked sunflower".into();
    Ok(())
}

fn ramsey(ctx: &Ctx, o: &mut Outcome) -> Result<(), Error> {
    let count = ctx.scale.pick(10_000, 100_000);
    o.param("count", count);
    let mut rng = ctx.rng(29);
    // R(3,3) = 6 and R(3,3,3) = 17
    for (order, colors, samples) in [(6, 2, count), (17, 3, count / 100 + 1)] {
        for _ in 0..samples {
            let mut table = vec![vec![0usize; order]; order];
            for u in 0..order {
                for v in u + 1..order {
                    table[u][v] = rng.gen_range(0..colors);
                }
            }
            let c = EdgeColoring::new(order, colors, |u, v| table[u.min(v)][u.max(v)])?;
            o.checked += 1;
            let rows: Vec<Vec<usize>> = (0..order).map(|u| table[u][u + 1..].to_vec()).collect();
            match find_mono_clique(&c, 3) {
                Some((s, col)) if check_mono_clique(&c, 3, s, col) => {
                    o.witness = Some(Witness::MonoClique {
                        n: order,
                        colors: rows,
                        size: 3,
                        clique: s.to_vec(),
                        color: col,
                    });
                }
                _ => {
                    o.fail(format!("no monochromatic triangle in a {colors}-colouring of K_{order}"), None);
                    return Ok(());
                }
            }
        }
    }
    o.detail = "every sampled 2-colouring of K_6 and 3-colouring of K_17 has a checked monochromatic triangle".into();
    Ok(())
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

fn trichotomy(ctx: &Ctx, o: &mut Outcome) -> Result<(), Error> {
    let count = ctx.scale.pick(300, 3000);
    o.param("count", count);
    let mut rng = ctx.rng(31);
    for _ in 0..count {
        let a = rng.gen_range(1..=5);
        let b = rng.gen_range(1..=5);
        let g = random_graph(&mut rng, a + b, 0.5);
        let s = VertexSet::full(a);
        let t = VertexSet::full(a + b).difference(s);
        let n = rng.gen_range(1..=3);
        let r = bipartite_trichotomy(&g, s, t, n)?;
        o.checked += 1;
        match &r.witness {
            Some(w) => {
                if !check_bipattern(&g, s, t, n, w) {
                    o.fail(format!("bad pattern on {}", emit_graph6(&g)), None);
                    return Ok(());
                }
                o.witness = Some(Witness::Bipattern {
                    graph: emit_graph6(&g),
                    s: s.to_vec(),
                    t: t.to_vec(),
                    n,
                    join: w.kind.name().into(),
                    s_order: w.s.clone(),
                    t_order: w.t.clone(),
                });
            }
            None => {
                let ss = ordered_tuples(&s.to_vec(), n);
                let ts = ordered_tuples(&t.to_vec(), n);
                let exists = [JoinKind::Mat, JoinKind::AntiMat, JoinKind::Tri].iter().any(|&kind| {
                    ss.iter().any(|x| {
                        ts.iter().any(|y| (0..n).all(|i| (0..n).all(|j| g.has_edge(x[i], y[j]) == kind.crosses(i, j))))
                    })
                });
                if exists {
                    o.fail(format!("missed a pattern of order {n} on {}", emit_graph6(&g)), None);
                    return Ok(());
                }
                // three distinct neighbourhoods on one side force order 2
                let nbs: Vec<u64> = t.iter().map(|v| g.rows()[v] & s.bits()).collect();
                let mut distinct = nbs.clone();
                distinct.sort_unstable();
                distinct.dedup();
                if n == 2 && distinct.len() >= 3 {
                    o.fail(format!("no order-2 pattern despite distinct neighbourhoods on {}", emit_graph6(&g)), None);
                    return Ok(());
                }
            }
        }
    }
    o.detail = "patterns found are valid and absences agree with exhaustive search".into();
    Ok(())
}

fn degree_path(ctx: &Ctx, o: &mut Outcome) -> Result<(), Error> {
    let count = ctx.scale.pick(100, 1000);
    o.param("count", count);
    let mut rng = ctx.rng(37);
    for (k, l) in [(4usize, 4usize), (5, 4), (4, 5)] {
        let threshold = degree_or_path_threshold(k, l).expect("k > 3") as usize;
        let mut tried = 0;
        while tried < count / 3 + 1 {
            let n = rng.gen_range(threshold..threshold + 6);
            let g = random_graph(&mut rng, n, 2.5 / n as f64);
            if !g.is_connected() {
                continue;
            }
            tried += 1;
            o.checked += 1;
            let c = degree_or_path(&g, k, l);
            if !check_degree_or_path(&g, k, l, &c) {
                o.fail(format!("k={k} l={l} on {}: {c:?}", emit_graph6(&g)), None);
                return Ok(());
            }
            let (vertex, path) = match c {
                DegreeOrPath::HighDegree(v) => (Some(v), None),
                DegreeOrPath::InducedPath(p) => (None, Some(p)),
                DegreeOrPath::Absent => unreachable!("checked above"),
            };
            o.witness = Some(Witness::DegreeOrPath {
                graph: emit_graph6(&g),
                k,
                l,
                vertex,
                path,
            });
        }
    }
    o.detail = "connected graphs past the threshold always give a degree or path certificate".into();
    Ok(())
}

static CLAIMS: [Claim; 25] = [
    Claim {
        id: "oracle-equivalence",
        about: "branch and bound equals exhaustive enumeration, all four functions, k = 1..3",
        grid: "small: every graph with n <= 5; medium: n <= 6; N: n <= N",
        run: oracle_equivalence,
    },
    Claim {
        id: "pivot-identity",
        about: "direct pivot equals G*u*v*u",
        grid: "small: 500 random (G, uv), n <= 10; medium: 5000; N: N samples",
        run: pivot_identity,
    },
    Claim {
        id: "lemma-loc",
        about: "cut-rank is unchanged by local complementation",
        grid: "small: 500 random (G, v, S), n <= 12; medium: 5000; N: N samples",
        run: cutrank_invariance,
    },
    Claim {
        id: "lemma-etabase1",
        about: "vertex k-brittleness of (2l+1)H/A is at least l+1",
        grid: "small: l = 1, H connected with k+1 in {2,3,4} edges, every valid A; medium: l in {1,2} within 15 edges; N: l = N",
        run: vertex_obstruction,
    },
    Claim {
        id: "lemma-removebridge",
        about: "deleting small Tutte bridges of A lowers kappa-brittleness by at most |A|",
        grid: "small: 200 random (G, A), n <= 7, k <= 2; medium: 1000; N: N samples",
        run: bridge_deletion,
    },
    Claim {
        id: "lemma-edgeforward1",
        about: "nH with n > 2m has eta, nu and rho k-brittleness at least m+1",
        grid: "small: H connected on k+1 <= 4 vertices, (n,m) in {(3,1),(5,2)}, at most 12 vertices; medium: 15; N: N vertices",
        run: edge_obstruction,
    },
    Claim {
        id: "lemma-edgeforward2",
        about: "eta k-brittleness of K_1,k+m is m+1",
        grid: "small: k+m <= 8, exact against the naive oracle; medium: k+m <= 9; N: k+m <= N",
        run: star_exact,
    },
    Claim {
        id: "lemma-delmat",
        about: "deleting one vertex lowers nu and rho k-brittleness by at most one",
        grid: "small: 200 random (G, v), n <= 8, k <= 3; medium: 1000; N: N samples",
        run: one_vertex_deletion,
    },
    Claim {
        id: "prop-vmbrittle",
        about: "rho k-brittleness of G is at most that of a vertex-minor H plus |V(G)| - |V(H)|",
        grid: "small: 200 random words with deletions, n <= 7; medium: 1000; N: N samples",
        run: vertex_minor_monotone,
    },
    Claim {
        id: "lemma-tomatching-1",
        about: "K_n mat S_n reduces to S_{n-1} mat S_{n-1}",
        grid: "small: 2 <= n <= 6; medium: n <= 9; N: n = N",
        run: |c, o| construction_claim(ConstructionName::MatKS, c, o),
    },
    Claim {
        id: "lemma-tomatching-2",
        about: "K_n mat K_n reduces to S_{n-2} mat S_{n-2}",
        grid: "small: 3 <= n <= 6; medium: n <= 9; N: n = N",
        run: |c, o| construction_claim(ConstructionName::MatKK, c, o),
    },
    Claim {
        id: "lemma-tomatching-3",
        about: "S_n antimat S_n reduces to S_{n-2} mat S_{n-2}",
        grid: "small: 3 <= n <= 6; medium: n <= 9; N: n = N",
        run: |c, o| construction_claim(ConstructionName::AntiMatSS, c, o),
    },
    Claim {
        id: "lemma-tomatching-4",
        about: "K_n antimat S_n reduces to S_{n-2} mat S_{n-2}",
        grid: "small: 3 <= n <= 6; medium: n <= 9; N: n = N",
        run: |c, o| construction_claim(ConstructionName::AntiMatKS, c, o),
    },
    Claim {
        id: "lemma-tomatching-5",
        about: "K_n antimat K_n reduces to S_{n-1} mat S_{n-1}",
        grid: "small: 2 <= n <= 6; medium: n <= 9; N: n = N",
        run: |c, o| construction_claim(ConstructionName::AntiMatKK, c, o),
    },
    Claim {
        id: "lemma-lengthonecase-1",
        about: "S_n tri S_n is locally equivalent to P_2n",
        grid: "small: 1 <= n <= 4; medium: n <= 5; N: n = N",
        run: |c, o| half_graph_to_path(edgeless, c, o),
    },
    Claim {
        id: "lemma-lengthonecase-2",
        about: "K_n tri S_n is locally equivalent to P_2n",
        grid: "small: 1 <= n <= 4; medium: n <= 5; N: n = N",
        run: |c, o| half_graph_to_path(complete, c, o),
    },
    Claim {
        id: "lemma-lengthonecase-3",
        about: "K_n tri K_n has a P_{2n-2} vertex-minor through S_{n-1} tri K_{n-1}",
        grid: "small: 2 <= n <= 5; medium: n <= 6; N: n = N",
        run: tri_kk_to_path,
    },
    Claim {
        id: "prop-submodularity",
        about: "rank of submatrices is submodular",
        grid: "small: 1000 random matrices up to 8x8; medium: 10000; N: N samples",
        run: submodularity,
    },
    Claim {
        id: "prop-inequality",
        about: "linear rank-width is at most rho k-brittleness plus floor(k/2)",
        grid: "small: every graph with n <= 5, k <= 3; medium: n <= 6; N: n <= N",
        run: lrw_inequality,
    },
    Claim {
        id: "bounds",
        about: "threshold formulas for the vertex, edge and matching families",
        grid: "small: fixed values plus closed forms for n <= 20; medium: n <= 60; N: n <= N",
        run: bounds,
    },
    Claim {
        id: "graph6-roundtrip",
        about: "graph6 and sparse6 encode and decode bit-exactly",
        grid: "small: every labelled graph with n <= 5; medium: n <= 6; N: n <= 6 exhaustive plus random up to N",
        run: graph6_roundtrip,
    },
    Claim {
        id: "sunflower",
        about: "large uniform set families contain a sunflower",
        grid: "small: 200 random families just above s!(p-1)^s; medium: 2000; N: N families",
        run: sunflowers,
    },
    Claim {
        id: "ramsey",
        about: "monochromatic triangles in colourings of K_6 and K_17",
        grid: "small: 10000 colourings of K_6 and 101 of K_17; medium: 100000; N: N",
        run: ramsey,
    },
    Claim {
        id: "trichotomy",
        about: "matching, anti-matching or half-graph patterns between two sides",
        grid: "small: 300 random bipartite splits up to 5+5, n <= 3; medium: 3000; N: N",
        run: trichotomy,
    },
    Claim {
        id: "degree-or-path",
        about: "connected graphs past the threshold have a high degree vertex or a long induced path",
        grid: "small: 100 graphs for (k,l) in {(4,4),(5,4),(4,5)}; medium: 1000; N: N",
        run: degree_path,
    },
];
