//! The `brittle` command line.
//!
//! Exit codes: 0 pass, 1 fail, 2 inconclusive (including size limits),
//! 64 usage or input error.

use std::ffi::OsString;
use std::io::Write;
use std::time::Instant;

use brittle_core::bounds::{bound_ell, BoundFamily, BoundParams};
use brittle_core::brittleness::{brittleness, brittleness_naive};
use brittle_core::conn::{eval, ConnFn, Ground, GroundSet};
use brittle_core::family::Family;
use brittle_core::lrw::linear_rank_width;
use brittle_core::vertex_minor::{has_vertex_minor, local_complement, pivot, VertexMinorOutcome};
use brittle_core::{Edge, EdgeSet, Graph, VertexSet};
use clap::{Parser, Subcommand};
use serde_json::json;

use crate::formats::{emit, resolve_graph, FormatError, GraphFormat};
use crate::harness::{claim_ids, claims, find_claim, Ctx, Scale};
use crate::report::Status;

pub const EXIT_USAGE: i32 = 64;

#[derive(Parser, Debug)]
#[command(name = "brittle", version, about = "Exact brittleness, vertex-minors and rank-width for small graphs")]
struct Cli {
    /// Machine-readable output.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand, Debug)]
enum Cmd {
    /// Build a named graph: path N, cycle N, complete N, star N,
    /// complete_bipartite A B, empty N.
    Gen {
        family: String,
        #[arg(allow_negative_numbers = true)]
        params: Vec<i64>,
        #[arg(long, default_value = "graph6")]
        format: GraphFormat,
    },
    /// Evaluate a connectivity function (vc, ec, matc, cutrk) on a set:
    /// vertices as `0,2`, edges as `0-1,1-2`.
    Conn {
        function: ConnFn,
        graph: String,
        #[arg(default_value = "")]
        set: String,
    },
    /// Exact k-brittleness with an optimal partition.
    Brittleness {
        function: ConnFn,
        #[arg(short)]
        k: usize,
        graph: String,
        /// Use the exhaustive solver instead.
        #[arg(long)]
        naive: bool,
    },
    /// Exact linear rank-width with an optimal layout.
    Lrw { graph: String },
    /// Vertex-minor operations.
    Vm {
        #[command(subcommand)]
        op: VmCmd,
    },
    /// Run a named claim, or `all`.
    Verify {
        #[arg(required_unless_present = "list")]
        claim: Option<String>,
        /// small, medium, or a number (see --list).
        #[arg(long, default_value = "small")]
        scale: Scale,
        /// List claim ids with their parameter grids.
        #[arg(long)]
        list: bool,
    },
    /// Brittleness threshold l(k, n) for a family: vertex, edge, matching, rank.
    Bounds {
        family: BoundFamily,
        #[arg(short)]
        k: u64,
        #[arg(short)]
        n: u64,
    },
}

#[derive(Subcommand, Debug)]
enum VmCmd {
    /// Search for H as a vertex-minor of G.
    Contains {
        g: String,
        h: String,
        /// State limit (default: BRITTLE_STATE_LIMIT or 2000000).
        #[arg(long)]
        limit: Option<usize>,
    },
    /// Local complementation at each listed vertex in turn.
    Lc { graph: String, verts: String },
    /// Pivot on the edge `u,v`.
    Pivot { graph: String, verts: String },
}

#[derive(Debug, thiserror::Error)]
enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Format(#[from] FormatError),
    #[error(transparent)]
    Core(#[from] brittle_core::Error),
}

impl CliError {
    fn code(&self) -> i32 {
        match self {
            CliError::Core(brittle_core::Error::ResourceLimit { .. })
            | CliError::Format(FormatError::Graph(brittle_core::Error::ResourceLimit { .. })) => 2,
            _ => EXIT_USAGE,
        }
    }
}

fn usage(msg: impl Into<String>) -> CliError {
    CliError::Usage(msg.into())
}

/// Runs the command line; returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { 0 };
            let text = e.render().to_string();
            let _ = if e.use_stderr() { err.write_all(text.as_bytes()) } else { out.write_all(text.as_bytes()) };
            return code;
        }
    };
    match dispatch(&cli, out) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            e.code()
        }
    }
}

fn parse_indices(s: &str) -> Result<Vec<usize>, CliError> {
    s.split(',')
        .map(str::trim)
        .filter(|t| !t.is_empty())
        .map(|t| t.parse().map_err(|_| usage(format!("bad vertex {t:?}"))))
        .collect()
}

fn parse_edges(s: &str) -> Result<EdgeSet, CliError> {
    let mut es = EdgeSet::new();
    for t in s.split(',').map(str::trim).filter(|t| !t.is_empty()) {
        let (a, b) = t.split_once('-').ok_or_else(|| usage(format!("bad edge {t:?}, expected u-v")))?;
        let parse = |x: &str| x.trim().parse::<usize>().map_err(|_| usage(format!("bad edge {t:?}")));
        es.insert(Edge::new(parse(a)?, parse(b)?));
    }
    Ok(es)
}

fn edge_text(e: Edge) -> String {
    format!("{}-{}", e.0, e.1)
}

fn print(out: &mut dyn Write, s: impl std::fmt::Display) {
    let _ = writeln!(out, "{s}");
}

fn dispatch(cli: &Cli, out: &mut dyn Write) -> Result<i32, CliError> {
    match &cli.cmd {
        Cmd::Gen { family, params, format } => {
            let g = Family::parse(family, params)?.build()?;
            let f = if cli.json { GraphFormat::Json } else { *format };
            print(out, emit(&g, f));
            Ok(0)
        }
        Cmd::Conn { function, graph, set } => {
            let g = resolve_graph(graph)?;
            let x = match function.ground() {
                Ground::Edges => GroundSet::Edges(parse_edges(set)?),
                Ground::Vertices => {
                    if set.contains('-') {
                        return Err(usage(format!("{function} takes a vertex set like 0,2")));
                    }
                    GroundSet::Vertices(VertexSet::from_slice(&parse_indices(set)?))
                }
            };
            let v = eval(*function, &g, &x)?;
            if cli.json {
                print(out, json!({"function": function.name(), "value": v}));
            } else {
                print(out, v);
            }
            Ok(0)
        }
        Cmd::Brittleness { function, k, graph, naive } => {
            let g = resolve_graph(graph)?;
            let start = Instant::now();
            if *naive {
                let v = brittleness_naive(*function, &g, *k)?;
                if cli.json {
                    print(out, json!({"function": function.name(), "k": k, "value": v, "elapsed_ms": start.elapsed().as_millis() as u64}));
                } else {
                    print(out, v);
                }
                return Ok(0);
            }
            let r = brittleness(*function, &g, *k)?;
            let elapsed = start.elapsed().as_millis() as u64;
            if cli.json {
                print(
                    out,
                    json!({
                        "claim": "brittleness",
                        "params": {"k": k},
                        "function": function.name(),
                        "value": r.value,
                        "partition": r.partition.blocks,
                        "worst_union": r.worst_union,
                        "elapsed_ms": elapsed,
                    }),
                );
                return Ok(0);
            }
            let edges = g.edges();
            let name = |e: usize| match function.ground() {
                Ground::Edges => edge_text(edges[e]),
                Ground::Vertices => e.to_string(),
            };
            let blocks: Vec<String> = r
                .partition
                .blocks
                .iter()
                .map(|b| format!("{{{}}}", b.iter().map(|&e| name(e)).collect::<Vec<_>>().join(",")))
                .collect();
            print(out, r.value);
            print(out, format!("partition: {}", blocks.join(" ")));
            let worst: Vec<String> = r.worst_union.iter().map(|&b| blocks[b].clone()).collect();
            print(out, format!("worst union: {}", worst.join(" ")));
            Ok(0)
        }
        Cmd::Lrw { graph } => {
            let g = resolve_graph(graph)?;
            let r = linear_rank_width(&g)?;
            if cli.json {
                print(out, json!({"value": r.value, "layout": r.layout.order}));
            } else {
                print(out, r.value);
                let l: Vec<String> = r.layout.order.iter().map(usize::to_string).collect();
                print(out, format!("layout: {}", l.join(" ")));
            }
            Ok(0)
        }
        Cmd::Vm { op } => vm(op, cli.json, out),
        Cmd::Verify { claim, scale, list } => {
            if *list {
                for c in claims() {
                    print(out, format!("{:<24} {}\n{:<24} {}", c.id, c.about, "", c.grid));
                }
                return Ok(0);
            }
            let id = claim.as_deref().expect("clap enforces presence");
            let ctx = Ctx::from_env(*scale).map_err(usage)?;
            let chosen: Vec<_> = if id == "all" {
                claims().iter().collect()
            } else {
                let c = find_claim(id).ok_or_else(|| {
                    usage(format!("unknown claim {id}; known claims: all, {}", claim_ids().join(", ")))
                })?;
                vec![c]
            };
            let mut overall = Status::Pass;
            let mut counts = [0usize; 3];
            for c in &chosen {
                let r = c.run(&ctx);
                overall = overall.worst(r.status);
                counts[r.status.exit_code() as usize] += 1;
                if cli.json {
                    print(out, serde_json::to_string(&r).expect("report serialises"));
                } else {
                    print(out, r.line());
                    if chosen.len() == 1 {
                        if let Some(w) = &r.witness {
                            print(out, format!("witness: {}", serde_json::to_string(w).expect("witness serialises")));
                        }
                    }
                }
                let _ = out.flush();
            }
            if !cli.json && chosen.len() > 1 {
                print(out, format!("{} pass, {} fail, {} inconclusive", counts[0], counts[1], counts[2]));
            }
            Ok(overall.exit_code())
        }
        Cmd::Bounds { family, k, n } => {
            let v = bound_ell(*family, &BoundParams::new(*k, *n))?;
            if cli.json {
                print(out, json!({"k": k, "n": n, "value": v.to_string()}));
            } else {
                print(out, v);
            }
            Ok(0)
        }
    }
}

fn vm(op: &VmCmd, as_json: bool, out: &mut dyn Write) -> Result<i32, CliError> {
    let emit_graph = |out: &mut dyn Write, g: &Graph| {
        if as_json {
            print(out, emit(g, GraphFormat::Json));
        } else {
            print(out, emit(g, GraphFormat::Graph6));
        }
    };
    match op {
        VmCmd::Contains { g, h, limit } => {
            let (g, h) = (resolve_graph(g)?, resolve_graph(h)?);
            let limit = match limit {
                Some(l) => *l,
                None => Ctx::from_env(Scale::Small).map_err(usage)?.state_limit,
            };
            let outcome = has_vertex_minor(&g, &h, limit)?;
            let (status, word) = match &outcome {
                VertexMinorOutcome::Found(w) => (Status::Pass, Some(w.to_string())),
                VertexMinorOutcome::Absent => (Status::Fail, None),
                VertexMinorOutcome::Inconclusive => (Status::Inconclusive, None),
            };
            let label = match outcome {
                VertexMinorOutcome::Found(_) => "found",
                VertexMinorOutcome::Absent => "absent",
                VertexMinorOutcome::Inconclusive => "inconclusive",
            };
            if as_json {
                print(out, json!({"outcome": label, "word": word, "limit": limit}));
            } else {
                match word {
                    Some(w) => print(out, format!("found: {w}")),
                    None => print(out, label),
                }
            }
            Ok(status.exit_code())
        }
        VmCmd::Lc { graph, verts } => {
            let mut g = resolve_graph(graph)?;
            for v in parse_indices(verts)? {
                g = local_complement(&g, v)?;
            }
            emit_graph(out, &g);
            Ok(0)
        }
        VmCmd::Pivot { graph, verts } => {
            let g = resolve_graph(graph)?;
            let vs = parse_indices(verts)?;
            let [u, v] = vs[..] else {
                return Err(usage("pivot takes exactly two vertices, u,v"));
            };
            emit_graph(out, &pivot(&g, u, v)?);
            Ok(0)
        }
    }
}
