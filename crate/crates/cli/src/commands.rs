use std::fs;
use std::path::Path;

use edgesym_core::graph::Graph;
use edgesym_core::ideal::graph_naming;
use edgesym_core::invariants::{
    conjecture_report, invariant_report, verify_theorem, Outcome, SymbolicPolyhedron, TheoremId,
};
use edgesym_core::monomial::{minimalize, symbolic_power, VarNaming};
use edgesym_core::polyhedron::is_full;
use edgesym_core::primes::{brute_force_primes, primes_for};
use edgesym_core::{IdealKind, Monomial, MonomialIdeal};
use rayon::prelude::*;
use serde_json::{json, Value};

use crate::args::{Source, SourceOrCorpus};
use crate::corpus::{self, Guard};
use crate::error::CliError;
use crate::output::{self, graph_id, Doc};

pub struct Ctx {
    pub guard: Guard,
    pub pool: rayon::ThreadPool,
}

impl Ctx {
    /// Maps `f` over the graphs on the worker pool, keeping input order;
    /// the first error in input order wins.
    fn map<T, F>(&self, graphs: &[Graph], f: F) -> Result<Vec<T>, CliError>
    where
        T: Send,
        F: Fn(&Graph) -> Result<T, CliError> + Sync,
    {
        let results: Vec<Result<T, CliError>> = self.pool.install(|| graphs.par_iter().map(&f).collect());
        results.into_iter().collect()
    }

    fn guarded(&self, graphs: &[Graph]) -> Result<(), CliError> {
        graphs.iter().try_for_each(|g| self.guard.check(g.n(), "graph"))
    }
}

pub fn load_source(source: &Source) -> Result<Vec<Graph>, CliError> {
    match (&source.graph6, &source.edges, &source.family) {
        (Some(p), _, _) => corpus::graph6_file(p),
        (_, Some(p), _) => Ok(vec![corpus::edges_file(p)?]),
        (_, _, Some(f)) => Ok(vec![corpus::family(f)?]),
        _ => Err(CliError::Input("no graph source given".into())),
    }
}

pub fn ideal(ctx: &Ctx, source: &Source, kind: IdealKind) -> Result<Vec<Doc>, CliError> {
    let graphs = load_source(source)?;
    ctx.map(&graphs, |g| {
        let i = kind.build(g)?;
        let naming = graph_naming(g);
        let mut json = output::ideal(&i, naming);
        json["graph"] = json!(graph_id(g));
        json["kind"] = json!(kind.as_str());
        let text = format!(
            "{} {kind}: {}",
            graph_id(g),
            output::ideal_terms(&i, naming).join(", ")
        );
        Ok(Doc { json, text })
    })
}

pub fn primes(ctx: &Ctx, source: &Source, kind: IdealKind) -> Result<Vec<Doc>, CliError> {
    let graphs = load_source(source)?;
    ctx.guarded(&graphs)?;
    ctx.map(&graphs, |g| {
        let ps = primes_for(g, kind)?;
        let naming = graph_naming(g);
        let json = json!({
            "graph": graph_id(g),
            "kind": kind.as_str(),
            "dim": 2 * g.n(),
            "primes": ps.iter().map(output::prime).collect::<Vec<_>>(),
        });
        let mut text = format!("{} {kind}: {} minimal primes", graph_id(g), ps.len());
        for p in &ps {
            text.push_str("\n  ");
            text.push_str(&output::prime_text(p, naming));
        }
        Ok(Doc { json, text })
    })
}

pub fn sp_vertices(ctx: &Ctx, source: &Source, kind: IdealKind) -> Result<Vec<Doc>, CliError> {
    let graphs = load_source(source)?;
    ctx.guarded(&graphs)?;
    ctx.map(&graphs, |g| {
        let sp = SymbolicPolyhedron::new(g, kind)?;
        let n = g.n();
        let full = sp.vertices.iter().filter(|v| is_full(v, n)).count();
        let json = json!({
            "graph": graph_id(g),
            "kind": kind.as_str(),
            "polyhedron": output::polyhedron(&sp.poly),
            "vertices": sp.vertices.iter().map(|v| json!({
                "coords": output::vertex(v),
                "full": is_full(v, n),
                "sum": output::rational(v.sum()),
            })).collect::<Vec<_>>(),
            "vertex_count": sp.vertices.len(),
            "full_vertex_count": full,
        });
        let mut text = format!(
            "{} {kind}: {} vertices, {full} full",
            graph_id(g),
            sp.vertices.len()
        );
        for v in &sp.vertices {
            let flag = if is_full(v, n) { "  full" } else { "" };
            text.push_str(&format!("\n  {}  sum {}{flag}", output::vertex_text(v), v.sum()));
        }
        Ok(Doc { json, text })
    })
}

pub fn invariants(ctx: &Ctx, source: &Source, kind: IdealKind) -> Result<Vec<Doc>, CliError> {
    let graphs = load_source(source)?;
    ctx.guarded(&graphs)?;
    ctx.map(&graphs, |g| {
        let r = invariant_report(g, kind)?;
        Ok(Doc {
            json: output::report(&r),
            text: output::report_text(&r),
        })
    })
}

/// Reads `{dim, gens}` with one exponent row per generator.
pub fn read_ideal(path: &Path) -> Result<MonomialIdeal, CliError> {
    let bad = |msg: &str| CliError::Input(format!("{}: {msg}", path.display()));
    let text = fs::read_to_string(path).map_err(|e| bad(&e.to_string()))?;
    let v: Value = serde_json::from_str(&text).map_err(|e| bad(&e.to_string()))?;
    let dim = v["dim"]
        .as_u64()
        .ok_or_else(|| bad("`dim` must be a positive integer"))? as usize;
    let rows = v["gens"]
        .as_array()
        .ok_or_else(|| bad("`gens` must be an array"))?;
    let gens = rows
        .iter()
        .map(|row| {
            let exps = row
                .as_array()
                .ok_or_else(|| bad("each generator must be an array of exponents"))?
                .iter()
                .map(|e| {
                    e.as_u64()
                        .and_then(|e| u32::try_from(e).ok())
                        .ok_or_else(|| bad("exponents must be nonnegative integers"))
                })
                .collect::<Result<Vec<u32>, _>>()?;
            Ok(Monomial::new(exps))
        })
        .collect::<Result<Vec<_>, CliError>>()?;
    let checked = MonomialIdeal::from_generators(dim, gens)?;
    Ok(minimalize(checked.gens().to_vec())?)
}

pub fn sympower(path: &Path, m: u32) -> Result<Vec<Doc>, CliError> {
    let ideal = read_ideal(path)?;
    let primes = brute_force_primes(&ideal)?;
    let sym = symbolic_power(&primes, m)?;
    let naming = VarNaming::Plain;
    let mut json = output::ideal(&sym, naming);
    json["m"] = json!(m);
    let text = format!("I^({m}) = ({})", output::ideal_terms(&sym, naming).join(", "));
    Ok(vec![Doc { json, text }])
}

fn outcome_name(o: &Outcome) -> &'static str {
    match o {
        Outcome::Pass => "pass",
        Outcome::Fail(_) => "fail",
        Outcome::NotApplicable(_) => "not_applicable",
    }
}

/// Per-graph lines followed by a summary; the flag is true when nothing
/// failed.
pub fn verify(
    ctx: &Ctx,
    theorem: &str,
    spec: &str,
    kind: Option<IdealKind>,
) -> Result<(Vec<Doc>, bool), CliError> {
    let id: TheoremId = theorem.parse()?;
    let graphs = corpus::load(spec, ctx.guard)?;
    let outcomes = ctx.map(&graphs, |g| Ok(verify_theorem(id, g, kind)?))?;
    Ok(verify_report(id, spec, kind, &graphs, &outcomes))
}

fn verify_report(
    id: TheoremId,
    spec: &str,
    kind: Option<IdealKind>,
    graphs: &[Graph],
    outcomes: &[Outcome],
) -> (Vec<Doc>, bool) {
    let mut docs = Vec::with_capacity(graphs.len() + 1);
    let mut failures = Vec::new();
    let (mut passed, mut na) = (0usize, 0usize);
    for (g, o) in graphs.iter().zip(outcomes) {
        let gid = graph_id(g);
        let detail = match o {
            Outcome::Pass => {
                passed += 1;
                None
            }
            Outcome::NotApplicable(d) => {
                na += 1;
                Some(d.to_string())
            }
            Outcome::Fail(d) => {
                failures.push(json!({ "graph": gid, "detail": d }));
                Some(d.clone())
            }
        };
        let text = match &detail {
            Some(d) => format!("{:<6} {gid}  {d}", outcome_name(o)),
            None => format!("{:<6} {gid}", outcome_name(o)),
        };
        docs.push(Doc {
            json: json!({ "theorem": id.as_str(), "graph": gid, "outcome": outcome_name(o), "detail": detail }),
            text,
        });
    }
    let ok = failures.is_empty();
    docs.push(Doc {
        text: format!(
            "{id} on {spec}: {} checked, {passed} passed, {na} not applicable, {} failed",
            graphs.len(),
            failures.len()
        ),
        json: json!({
            "theorem": id.as_str(),
            "corpus": spec,
            "kind": kind.map(IdealKind::as_str),
            "checked": graphs.len(),
            "passed": passed,
            "not_applicable": na,
            "failures": failures,
        }),
    });
    (docs, ok)
}

pub fn conjectures(ctx: &Ctx, source: &SourceOrCorpus) -> Result<Vec<Doc>, CliError> {
    let graphs = match &source.corpus {
        Some(spec) => corpus::load(spec, ctx.guard)?,
        None => {
            let s = Source {
                graph6: source.graph6.clone(),
                edges: source.edges.clone(),
                family: source.family.clone(),
            };
            load_source(&s)?
        }
    };
    ctx.guarded(&graphs)?;
    let reports = ctx.map(&graphs, |g| Ok(conjecture_report(g)?))?;
    let mut docs = Vec::new();
    for r in &reports {
        let rows = [
            ("gin", r.areg_gin, "induced", r.ell, r.gin_equals_ell()),
            (
                "inid",
                r.areg_inid,
                "admissible",
                r.ell_lex,
                r.inid_equals_ell_lex(),
            ),
        ];
        for (kind, areg, path, order, equal) in rows {
            docs.push(Doc {
                json: json!({
                    "graph": r.graph6,
                    "kind": kind,
                    "areg": output::rational(areg),
                    "path": path,
                    "path_order": order,
                    "path_edges": order.saturating_sub(1),
                    "equal": equal,
                }),
                text: format!(
                    "{} {kind:<4} areg {areg}  longest {path} path {order} vertices  {}",
                    r.graph6,
                    if equal { "equal" } else { "differ" }
                ),
            });
        }
    }
    Ok(docs)
}
