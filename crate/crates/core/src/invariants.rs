//! Waldschmidt constant, asymptotic regularity, and checkable forms of
//! the structural theorems about symbolic polyhedra of graph ideals.
//!
//! Every quantity here is for a monomial ideal: `in(J_G)`, `gin(J_G)` or
//! `I_G`. Nothing is claimed about the binomial edge ideal itself.

use alloc::collections::BTreeSet;
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use crate::graph::{
    chromatic_number, clique_number, for_each_subset_of_size, longest_admissible_path_order,
    longest_induced_path_order, optimal_coloring, to_graph6, Graph, Vertex, VertexSet,
};
use crate::ideal::IdealKind;
use crate::lp::lp_min_sum;
use crate::monomial::{is_minimal_generator, symbolic_power, IdealError, Monomial, PrimeSupport};
use crate::polyhedron::{build_sp, is_full, max_sum, min_sum, HPolyhedron, PolyhedronError};
use crate::primes::{primes_for, supports, LabeledPrime};
use crate::rational::{QVector, Rational};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum InvariantError {
    #[error(transparent)]
    Ideal(#[from] IdealError),
    #[error(transparent)]
    Polyhedron(#[from] PolyhedronError),
    #[error("graph must be connected")]
    Disconnected,
    #[error("operation is defined for gin and inid only")]
    UnsupportedKind,
    #[error("unknown theorem id `{0}`")]
    UnknownTheorem(String),
}

/// The symbolic polyhedron of one graph ideal with its vertices.
#[derive(Debug, Clone)]
pub struct SymbolicPolyhedron {
    pub kind: IdealKind,
    pub n: usize,
    pub primes: Vec<LabeledPrime>,
    pub poly: HPolyhedron,
    pub vertices: Vec<QVector>,
}

impl SymbolicPolyhedron {
    pub fn new(g: &Graph, kind: IdealKind) -> Result<Self, InvariantError> {
        let primes = primes_for(g, kind)?;
        let poly = build_sp(&supports(&primes), 2 * g.n())?;
        let vertices = poly.enumerate_vertices();
        Ok(SymbolicPolyhedron {
            kind,
            n: g.n(),
            primes,
            poly,
            vertices,
        })
    }

    pub fn prime_supports(&self) -> Vec<PrimeSupport> {
        supports(&self.primes)
    }

    pub fn full_vertices(&self) -> Vec<QVector> {
        self.vertices
            .iter()
            .filter(|v| is_full(v, self.n))
            .cloned()
            .collect()
    }

    /// `ŵ(I)`: least vertex coordinate sum.
    pub fn waldschmidt(&self) -> Rational {
        min_sum(&self.vertices)
    }

    /// `reg-hat(I)`: largest vertex coordinate sum.
    pub fn areg(&self) -> Rational {
        max_sum(&self.vertices)
    }
}

/// `ŵ` of the chosen ideal of `g`.
pub fn waldschmidt(g: &Graph, kind: IdealKind) -> Result<Rational, InvariantError> {
    Ok(SymbolicPolyhedron::new(g, kind)?.waldschmidt())
}

/// `reg-hat` of the chosen ideal of `g`.
pub fn areg(g: &Graph, kind: IdealKind) -> Result<Rational, InvariantError> {
    Ok(SymbolicPolyhedron::new(g, kind)?.areg())
}

fn graph_id(g: &Graph) -> String {
    to_graph6(g).unwrap_or_default()
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InvariantReport {
    pub graph6: String,
    pub kind: IdealKind,
    pub n: usize,
    pub alpha: u64,
    pub max_gen_degree: u64,
    pub waldschmidt: Rational,
    /// The same minimum, found by the exact simplex method.
    pub waldschmidt_lp: Rational,
    pub areg: Rational,
    pub vertex_count: usize,
    pub full_vertex_count: usize,
    /// Vertex count of a longest induced path.
    pub ell: usize,
    /// Vertex count of a longest admissible path.
    pub ell_lex: usize,
}

pub fn invariant_report(g: &Graph, kind: IdealKind) -> Result<InvariantReport, InvariantError> {
    let ideal = kind.build(g)?;
    let sp = SymbolicPolyhedron::new(g, kind)?;
    Ok(InvariantReport {
        graph6: graph_id(g),
        kind,
        n: g.n(),
        alpha: ideal.alpha()?,
        max_gen_degree: ideal.max_gen_degree()?,
        waldschmidt: sp.waldschmidt(),
        waldschmidt_lp: lp_min_sum(&sp.poly),
        areg: sp.areg(),
        vertex_count: sp.vertices.len(),
        full_vertex_count: sp.full_vertices().len(),
        ell: longest_induced_path_order(g),
        ell_lex: longest_admissible_path_order(g),
    })
}

/// Canonical inclusion `R^{2|H|} -> R^{2n}`; `map[k]` is the vertex of `G`
/// labeled `k + 1` in `H`.
pub fn embed(v: &QVector, map: &[Vertex], n: usize) -> QVector {
    let h = map.len();
    let mut out = QVector::zeros(2 * n).coords().to_vec();
    for (k, &old) in map.iter().enumerate() {
        out[old - 1] = v.coords()[k];
        out[n + old - 1] = v.coords()[h + k];
    }
    QVector::new(out)
}

/// Vertex sets of the connected induced subgraphs with at least one edge,
/// by size and then lexicographically.
pub fn connected_induced_subsets(g: &Graph) -> Vec<VertexSet> {
    let mut out = Vec::new();
    for size in 2..=g.n() {
        for_each_subset_of_size(g.n(), size, |w| {
            if g.is_connected_within(w) {
                out.push(w);
            }
        });
    }
    out
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DecompositionPiece {
    pub subset: VertexSet,
    /// Full vertices of the subgraph, embedded in `R^{2n}`.
    pub full_vertices: Vec<QVector>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DecompositionReport {
    pub graph6: String,
    pub kind: IdealKind,
    pub pieces: Vec<DecompositionPiece>,
    pub reconstructed: Vec<QVector>,
    pub direct: Vec<QVector>,
    pub matches: bool,
}

/// Rebuilds the vertices of `SP(I_G)` from the full vertices of every
/// connected induced subgraph with an edge, and compares with direct
/// enumeration.
pub fn subgraph_decomposition(g: &Graph, kind: IdealKind) -> Result<DecompositionReport, InvariantError> {
    if kind == IdealKind::Edge {
        return Err(InvariantError::UnsupportedKind);
    }
    if g.is_edgeless() {
        return Err(IdealError::Edgeless.into());
    }
    if !g.is_connected() {
        return Err(InvariantError::Disconnected);
    }
    let n = g.n();
    let mut pieces = Vec::new();
    let mut union = BTreeSet::new();
    for w in connected_induced_subsets(g) {
        let (h, map) = g.induced_subgraph(w).expect("nonempty subset");
        let full: Vec<QVector> = SymbolicPolyhedron::new(&h, kind)?
            .full_vertices()
            .iter()
            .map(|v| embed(v, &map, n))
            .collect();
        union.extend(full.iter().cloned());
        pieces.push(DecompositionPiece {
            subset: w,
            full_vertices: full,
        });
    }
    let direct = SymbolicPolyhedron::new(g, kind)?.vertices;
    let reconstructed: Vec<QVector> = union.into_iter().collect();
    Ok(DecompositionReport {
        graph6: graph_id(g),
        kind,
        matches: reconstructed == direct,
        pieces,
        reconstructed,
        direct,
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PartitionReport {
    pub graph6: String,
    pub kind: IdealKind,
    /// Components with at least one edge.
    pub components: Vec<VertexSet>,
    /// Vertices of each component's polyhedron, embedded in `R^{2n}`.
    pub parts: Vec<Vec<QVector>>,
    pub direct: Vec<QVector>,
    /// No vertex appears in two parts.
    pub disjoint: bool,
    /// The union of the parts equals the direct vertex set.
    pub matches: bool,
}

/// Compares the vertices of `SP(I_G)` with the disjoint union of the
/// embedded vertex sets of its components. Components without edges have
/// the zero ideal and contribute nothing.
pub fn disconnected_partition(g: &Graph, kind: IdealKind) -> Result<PartitionReport, InvariantError> {
    if g.is_edgeless() {
        return Err(IdealError::Edgeless.into());
    }
    let n = g.n();
    let mut components = Vec::new();
    let mut parts = Vec::new();
    for c in g.connected_components() {
        if c.len() < 2 {
            continue;
        }
        let (h, map) = g.induced_subgraph(c).expect("nonempty component");
        let part: Vec<QVector> = SymbolicPolyhedron::new(&h, kind)?
            .vertices
            .iter()
            .map(|v| embed(v, &map, n))
            .collect();
        components.push(c);
        parts.push(part);
    }
    let total: usize = parts.iter().map(Vec::len).sum();
    let union: BTreeSet<QVector> = parts.iter().flatten().cloned().collect();
    let direct = SymbolicPolyhedron::new(g, kind)?.vertices;
    Ok(PartitionReport {
        graph6: graph_id(g),
        kind,
        disjoint: union.len() == total,
        matches: union.into_iter().collect::<Vec<_>>() == direct,
        components,
        parts,
        direct,
    })
}

/// Theorem-level identities that can be checked on a single graph.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum TheoremId {
    WaldEquality,
    ChiOmega,
    Kpartite,
    PartiteContainment,
    Bipartite,
    WeaklyPerfect,
    WaldInidTwo,
    ClosedAregTwo,
    VertexContainment,
    ZeroOneVertices,
    VertexToGenerator,
    SubgraphDecomposition,
    DisconnectedPartition,
    InducedPathBound,
}

impl TheoremId {
    pub const ALL: [TheoremId; 14] = [
        TheoremId::WaldEquality,
        TheoremId::ChiOmega,
        TheoremId::Kpartite,
        TheoremId::PartiteContainment,
        TheoremId::Bipartite,
        TheoremId::WeaklyPerfect,
        TheoremId::WaldInidTwo,
        TheoremId::ClosedAregTwo,
        TheoremId::VertexContainment,
        TheoremId::ZeroOneVertices,
        TheoremId::VertexToGenerator,
        TheoremId::SubgraphDecomposition,
        TheoremId::DisconnectedPartition,
        TheoremId::InducedPathBound,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            TheoremId::WaldEquality => "wald_equality",
            TheoremId::ChiOmega => "chi_omega",
            TheoremId::Kpartite => "kpartite",
            TheoremId::PartiteContainment => "partite_containment",
            TheoremId::Bipartite => "bipartite",
            TheoremId::WeaklyPerfect => "weakly_perfect",
            TheoremId::WaldInidTwo => "wald_inid_two",
            TheoremId::ClosedAregTwo => "closed_areg_two",
            TheoremId::VertexContainment => "vertex_containment",
            TheoremId::ZeroOneVertices => "zero_one_vertices",
            TheoremId::VertexToGenerator => "vertex_to_generator",
            TheoremId::SubgraphDecomposition => "subgraph_decomposition",
            TheoremId::DisconnectedPartition => "disconnected_partition",
            TheoremId::InducedPathBound => "induced_path_bound",
        }
    }

    /// Ideal kinds the check runs over when none is requested.
    pub fn default_kinds(self) -> &'static [IdealKind] {
        match self {
            TheoremId::VertexContainment
            | TheoremId::SubgraphDecomposition
            | TheoremId::DisconnectedPartition => &[IdealKind::Gin, IdealKind::Inid],
            TheoremId::ZeroOneVertices | TheoremId::VertexToGenerator => &IdealKind::ALL,
            _ => &[],
        }
    }
}

impl fmt::Display for TheoremId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for TheoremId {
    type Err = InvariantError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        TheoremId::ALL
            .into_iter()
            .find(|t| t.as_str() == s.trim())
            .ok_or_else(|| InvariantError::UnknownTheorem(s.into()))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Outcome {
    Pass,
    /// Counterexample or mismatch details.
    Fail(String),
    /// The graph does not meet the theorem's hypotheses.
    NotApplicable(&'static str),
}

impl Outcome {
    pub fn is_fail(&self) -> bool {
        matches!(self, Outcome::Fail(_))
    }

    fn check(ok: bool, detail: impl FnOnce() -> String) -> Outcome {
        if ok {
            Outcome::Pass
        } else {
            Outcome::Fail(detail())
        }
    }

    /// First failure wins; otherwise any pass wins over not-applicable.
    fn and(self, other: Outcome) -> Outcome {
        match (self, other) {
            (f @ Outcome::Fail(_), _) | (_, f @ Outcome::Fail(_)) => f,
            (Outcome::Pass, _) | (_, Outcome::Pass) => Outcome::Pass,
            (na, _) => na,
        }
    }
}

fn ratio(k: usize) -> Rational {
    Rational::new(k as i128, k as i128 - 1)
}

/// Number of parts if `g` is complete multipartite with at least two
/// parts (non-adjacency is an equivalence relation), else `None`.
pub fn complete_multipartite_parts(g: &Graph) -> Option<usize> {
    let n = g.n();
    let mut classes: Vec<VertexSet> = Vec::new();
    for v in 1..=n {
        let non_nb = g.vertices().difference(g.neighbors(v));
        match classes.iter().find(|c| c.contains(v)) {
            Some(c) if *c != non_nb => return None,
            Some(_) => {}
            None => {
                if classes.iter().any(|c| c.intersection(non_nb) != VertexSet::EMPTY) {
                    return None;
                }
                classes.push(non_nb);
            }
        }
    }
    (classes.len() >= 2).then_some(classes.len())
}

/// The complete multipartite graph on the same labels whose parts are the
/// color classes of `colors` (`colors[v - 1]`).
pub fn multipartite_supergraph(g: &Graph, colors: &[usize]) -> Graph {
    let n = g.n();
    Graph::from_edges(
        n,
        (1..=n).flat_map(|i| {
            (i + 1..=n)
                .filter(move |&j| colors[i - 1] != colors[j - 1])
                .map(move |j| (i, j))
        }),
    )
    .expect("labels are in range")
}

/// Checks one theorem on one graph. `kind` selects the ideal for the
/// theorems that hold for several; `None` runs every applicable kind.
pub fn verify_theorem(id: TheoremId, g: &Graph, kind: Option<IdealKind>) -> Result<Outcome, InvariantError> {
    if g.is_edgeless() {
        return Ok(Outcome::NotApplicable("graph has no edges"));
    }
    let kinds: Vec<IdealKind> = match kind {
        Some(k) => alloc::vec![k],
        None => id.default_kinds().to_vec(),
    };
    match id {
        TheoremId::WaldEquality => {
            let gin = waldschmidt(g, IdealKind::Gin)?;
            let edge = waldschmidt(g, IdealKind::Edge)?;
            Ok(Outcome::check(gin == edge, || {
                format!("gin {gin} != edge {edge}")
            }))
        }
        TheoremId::ChiOmega => {
            let (chi, omega) = (chromatic_number(g), clique_number(g));
            let (lo, hi) = (ratio(chi), ratio(omega));
            let edge = waldschmidt(g, IdealKind::Edge)?;
            let gin = waldschmidt(g, IdealKind::Gin)?;
            Ok(Outcome::check(
                lo <= edge && edge <= hi && lo <= gin && gin <= hi,
                || format!("chi {chi}, omega {omega}: bounds {lo}..{hi}, edge {edge}, gin {gin}"),
            ))
        }
        TheoremId::Kpartite => match complete_multipartite_parts(g) {
            None => Ok(Outcome::NotApplicable("not complete multipartite")),
            Some(k) => {
                let w = waldschmidt(g, IdealKind::Gin)?;
                Ok(Outcome::check(w == ratio(k), || {
                    format!("k = {k}: gin {w} != {}", ratio(k))
                }))
            }
        },
        TheoremId::PartiteContainment => {
            if !g.is_connected() {
                return Ok(Outcome::NotApplicable("graph is disconnected"));
            }
            let colors = optimal_coloring(g);
            let sup = multipartite_supergraph(g, &colors);
            let small = SymbolicPolyhedron::new(g, IdealKind::Gin)?;
            let big = SymbolicPolyhedron::new(&sup, IdealKind::Gin)?;
            // SP(H) = conv(vertices) + orthant and the facets have
            // nonnegative normals, so checking vertices suffices
            for v in &small.vertices {
                if !big.poly.contains(v)? {
                    return Ok(Outcome::Fail(format!(
                        "vertex {v:?} outside the multipartite polyhedron"
                    )));
                }
            }
            Ok(Outcome::Pass)
        }
        TheoremId::Bipartite => {
            if chromatic_number(g) != 2 {
                return Ok(Outcome::NotApplicable("not bipartite"));
            }
            let w = waldschmidt(g, IdealKind::Gin)?;
            Ok(Outcome::check(w == Rational::from_integer(2), || {
                format!("gin {w} != 2")
            }))
        }
        TheoremId::WeaklyPerfect => {
            let (chi, omega) = (chromatic_number(g), clique_number(g));
            if chi != omega {
                return Ok(Outcome::NotApplicable("chi != omega"));
            }
            let w = waldschmidt(g, IdealKind::Gin)?;
            Ok(Outcome::check(w == ratio(chi), || {
                format!("chi {chi}: gin {w} != {}", ratio(chi))
            }))
        }
        TheoremId::WaldInidTwo => {
            let sp = SymbolicPolyhedron::new(g, IdealKind::Inid)?;
            let (w, lp) = (sp.waldschmidt(), lp_min_sum(&sp.poly));
            let two = Rational::from_integer(2);
            Ok(Outcome::check(w == two && lp == two, || {
                format!("inid: vertex min {w}, lp {lp}")
            }))
        }
        TheoremId::ClosedAregTwo => {
            if !g.is_closed_labeling() {
                return Ok(Outcome::NotApplicable("labeling is not closed"));
            }
            closed_areg_two(g)
        }
        TheoremId::VertexContainment => kinds
            .iter()
            .try_fold(Outcome::NotApplicable("no kind"), |acc, &k| {
                Ok(acc.and(vertex_containment(g, k)?))
            }),
        TheoremId::ZeroOneVertices => kinds
            .iter()
            .try_fold(Outcome::NotApplicable("no kind"), |acc, &k| {
                Ok(acc.and(zero_one_vertices(g, k)?))
            }),
        TheoremId::VertexToGenerator => kinds
            .iter()
            .try_fold(Outcome::NotApplicable("no kind"), |acc, &k| {
                Ok(acc.and(vertex_to_generator(g, k)?))
            }),
        TheoremId::SubgraphDecomposition => {
            if !g.is_connected() {
                return Ok(Outcome::NotApplicable("graph is disconnected"));
            }
            kinds
                .iter()
                .try_fold(Outcome::NotApplicable("no kind"), |acc, &k| {
                    if k == IdealKind::Edge {
                        return Ok(acc.and(Outcome::NotApplicable("edge ideal")));
                    }
                    let r = subgraph_decomposition(g, k)?;
                    Ok(acc.and(Outcome::check(r.matches, || {
                        format!("{k}: reconstructed {:?}, direct {:?}", r.reconstructed, r.direct)
                    })))
                })
        }
        TheoremId::DisconnectedPartition => {
            if g.is_connected() {
                return Ok(Outcome::NotApplicable("graph is connected"));
            }
            kinds
                .iter()
                .try_fold(Outcome::NotApplicable("no kind"), |acc, &k| {
                    if k == IdealKind::Edge {
                        return Ok(acc.and(Outcome::NotApplicable("edge ideal")));
                    }
                    let r = disconnected_partition(g, k)?;
                    Ok(acc.and(Outcome::check(r.matches && r.disjoint, || {
                        format!("{k}: parts {:?}, direct {:?}", r.parts, r.direct)
                    })))
                })
        }
        TheoremId::InducedPathBound => {
            let a = areg(g, IdealKind::Gin)?;
            let ell = longest_induced_path_order(g);
            Ok(Outcome::check(a >= Rational::from_integer(ell as i128), || {
                format!("gin areg {a} < ell {ell}")
            }))
        }
    }
}

/// `reg-hat(in(J_G)) = 2`, by vertex sums and by the equal-powers route:
/// `d(I) = 2`, and `I^(2) = I^2` when the ambient dimension is at most 12.
fn closed_areg_two(g: &Graph) -> Result<Outcome, InvariantError> {
    let two = Rational::from_integer(2);
    let sp = SymbolicPolyhedron::new(g, IdealKind::Inid)?;
    let a = sp.areg();
    if a != two {
        return Ok(Outcome::Fail(format!("max vertex sum {a} != 2")));
    }
    let ideal = IdealKind::Inid.build(g)?;
    let d = ideal.max_gen_degree()?;
    if d != 2 {
        return Ok(Outcome::Fail(format!("d(I) = {d} != 2")));
    }
    if 2 * g.n() <= 12 {
        let sym = symbolic_power(&sp.prime_supports(), 2)?;
        let ord = ideal.ordinary_power(2)?;
        if sym != ord {
            return Ok(Outcome::Fail(format!(
                "I^(2) has {} generators, I^2 has {}",
                sym.gens().len(),
                ord.gens().len()
            )));
        }
    }
    Ok(Outcome::Pass)
}

/// `i(V(SP(I_H))) ⊆ V(SP(I_G))` for every induced subgraph `H` with an edge.
pub fn vertex_containment(g: &Graph, kind: IdealKind) -> Result<Outcome, InvariantError> {
    if kind == IdealKind::Edge {
        return Ok(Outcome::NotApplicable("edge ideal"));
    }
    let n = g.n();
    let direct: BTreeSet<QVector> = SymbolicPolyhedron::new(g, kind)?.vertices.into_iter().collect();
    let mut result = Ok(Outcome::Pass);
    for size in 2..n {
        for_each_subset_of_size(n, size, |w| {
            if !matches!(result, Ok(Outcome::Pass)) {
                return;
            }
            let (h, map) = g.induced_subgraph(w).expect("nonempty subset");
            if h.is_edgeless() {
                return;
            }
            match SymbolicPolyhedron::new(&h, kind) {
                Err(e) => result = Err(e),
                Ok(sp) => {
                    if let Some(v) = sp.vertices.iter().find(|v| !direct.contains(&embed(v, &map, n))) {
                        result = Ok(Outcome::Fail(format!(
                            "{kind}: subgraph {w:?} vertex {v:?} is not a vertex of G"
                        )));
                    }
                }
            }
        });
    }
    result
}

/// The 0/1 vertices are exactly the exponent vectors of the minimal
/// generators.
pub fn zero_one_vertices(g: &Graph, kind: IdealKind) -> Result<Outcome, InvariantError> {
    let sp = SymbolicPolyhedron::new(g, kind)?;
    let from_vertices: BTreeSet<Vec<u32>> = sp
        .vertices
        .iter()
        .filter(|v| v.is_zero_one())
        .map(|v| v.coords().iter().map(|c| *c.numer() as u32).collect())
        .collect();
    let from_gens: BTreeSet<Vec<u32>> = kind
        .build(g)?
        .gens()
        .iter()
        .map(|m| m.exponents().to_vec())
        .collect();
    Ok(Outcome::check(from_vertices == from_gens, || {
        format!("{kind}: 0/1 vertices {from_vertices:?}, generators {from_gens:?}")
    }))
}

/// Each vertex `z / q` (least common denominator `q`) gives a minimal
/// generator `x^z` of `I^(q)`.
pub fn vertex_to_generator(g: &Graph, kind: IdealKind) -> Result<Outcome, InvariantError> {
    let sp = SymbolicPolyhedron::new(g, kind)?;
    let primes = sp.prime_supports();
    for v in &sp.vertices {
        let (q, z) = v.common_denominator();
        let m = Monomial::new(z.iter().map(|&e| e as u32).collect());
        if !is_minimal_generator(&primes, q as u32, &m)? {
            return Ok(Outcome::Fail(format!(
                "{kind}: vertex {v:?} does not give a minimal generator of I^({q})"
            )));
        }
    }
    Ok(Outcome::Pass)
}

/// Side-by-side numbers for the open questions about `reg-hat`; nothing
/// here is asserted.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConjectureReport {
    pub graph6: String,
    /// Longest induced path, counted in vertices.
    pub ell: usize,
    /// Longest admissible path, counted in vertices.
    pub ell_lex: usize,
    pub areg_gin: Rational,
    pub areg_inid: Rational,
}

impl ConjectureReport {
    /// Path lengths counted in edges.
    pub fn ell_edges(&self) -> usize {
        self.ell.saturating_sub(1)
    }

    pub fn ell_lex_edges(&self) -> usize {
        self.ell_lex.saturating_sub(1)
    }

    pub fn gin_equals_ell(&self) -> bool {
        self.areg_gin == Rational::from_integer(self.ell as i128)
    }

    pub fn inid_equals_ell_lex(&self) -> bool {
        self.areg_inid == Rational::from_integer(self.ell_lex as i128)
    }
}

pub fn conjecture_report(g: &Graph) -> Result<ConjectureReport, InvariantError> {
    Ok(ConjectureReport {
        graph6: graph_id(g),
        ell: longest_induced_path_order(g),
        ell_lex: longest_admissible_path_order(g),
        areg_gin: areg(g, IdealKind::Gin)?,
        areg_inid: areg(g, IdealKind::Inid)?,
    })
}
