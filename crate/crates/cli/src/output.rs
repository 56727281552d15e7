//! JSON and text renderings of core results.

use edgesym_core::graph::to_graph6;
use edgesym_core::invariants::InvariantReport;
use edgesym_core::monomial::VarNaming;
use edgesym_core::{
    Graph, HPolyhedron, LabeledPrime, Monomial, MonomialIdeal, Provenance, QVector, Rational, VarSet,
    VertexSet,
};
use serde_json::{json, Value};

/// One output record in both renderings.
pub struct Doc {
    pub json: Value,
    pub text: String,
}

pub fn graph_id(g: &Graph) -> String {
    to_graph6(g).unwrap_or_default()
}

pub fn rational(r: Rational) -> Value {
    Value::String(r.to_string())
}

pub fn vertex(v: &QVector) -> Value {
    json!(v.to_strings())
}

pub fn vertex_text(v: &QVector) -> String {
    format!("({})", v.to_strings().join(", "))
}

fn vertex_set(s: VertexSet) -> Value {
    json!(s.to_vec())
}

fn var_set(s: VarSet) -> Value {
    json!(s.iter().collect::<Vec<_>>())
}

pub fn ideal(i: &MonomialIdeal, naming: VarNaming) -> Value {
    json!({
        "dim": i.dim(),
        "gens": i.gens().iter().map(|m| m.exponents().to_vec()).collect::<Vec<_>>(),
        "text": ideal_terms(i, naming),
    })
}

pub fn ideal_terms(i: &MonomialIdeal, naming: VarNaming) -> Vec<String> {
    i.gens().iter().map(|m| m.to_text(naming)).collect()
}

pub fn provenance(p: &Provenance) -> Value {
    match p {
        Provenance::VertexCover(c) => json!({ "cover": vertex_set(*c) }),
        Provenance::Ids { t, u } => json!({ "T": vertex_set(*t), "U": u }),
    }
}

pub fn prime(p: &LabeledPrime) -> Value {
    json!({
        "support": var_set(p.support.members()),
        "provenance": provenance(&p.provenances[0]),
        "provenances": p.provenances.iter().map(provenance).collect::<Vec<_>>(),
    })
}

pub fn prime_text(p: &LabeledPrime, naming: VarNaming) -> String {
    let dim = p.support.dim();
    let vars: Vec<String> = p
        .support
        .members()
        .iter()
        .map(|i| Monomial::from_support(dim, VarSet::singleton(i)).to_text(naming))
        .collect();
    let witness: Vec<String> = p
        .provenances
        .iter()
        .map(|w| match w {
            Provenance::VertexCover(c) => format!("cover {:?}", c.to_vec()),
            Provenance::Ids { t, u } => format!("T={:?} U={:?}", t.to_vec(), u),
        })
        .collect();
    format!("({})  {}", vars.join(", "), witness.join("; "))
}

pub fn polyhedron(p: &HPolyhedron) -> Value {
    json!({
        "dim": p.dim(),
        "one_facets": p.one_facets().iter().map(|m| var_set(m.members())).collect::<Vec<_>>(),
    })
}

pub fn report(r: &InvariantReport) -> Value {
    json!({
        "graph": r.graph6,
        "kind": r.kind.as_str(),
        "n": r.n,
        "alpha": r.alpha,
        "max_gen_degree": r.max_gen_degree,
        "waldschmidt": rational(r.waldschmidt),
        "waldschmidt_lp": rational(r.waldschmidt_lp),
        "areg": rational(r.areg),
        "vertex_count": r.vertex_count,
        "full_vertex_count": r.full_vertex_count,
        "ell": r.ell,
        "ell_lex": r.ell_lex,
    })
}

pub fn report_text(r: &InvariantReport) -> String {
    format!(
        "graph {} kind {} n {}\n  alpha {}  d {}\n  waldschmidt {} (lp {})\n  areg {}\n  vertices {} (full {})\n  ell {}  ell_lex {}",
        r.graph6,
        r.kind,
        r.n,
        r.alpha,
        r.max_gen_degree,
        r.waldschmidt,
        r.waldschmidt_lp,
        r.areg,
        r.vertex_count,
        r.full_vertex_count,
        r.ell,
        r.ell_lex
    )
}
