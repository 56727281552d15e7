//! The three squarefree monomial ideals attached to a labeled graph.

use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use crate::graph::{enumerate_admissible_paths, enumerate_induced_paths, Graph};
use crate::monomial::{minimalize, IdealError, Monomial, MonomialIdeal, VarNaming};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum IdealKind {
    /// The edge ideal `I_G`.
    Edge,
    /// `gin(J_G)`.
    Gin,
    /// `in(J_G)` under lex with `x_1 > ... > x_n > y_1 > ... > y_n`.
    Inid,
}

impl IdealKind {
    pub const ALL: [IdealKind; 3] = [IdealKind::Edge, IdealKind::Gin, IdealKind::Inid];

    pub fn as_str(self) -> &'static str {
        match self {
            IdealKind::Edge => "edge",
            IdealKind::Gin => "gin",
            IdealKind::Inid => "inid",
        }
    }

    pub fn build(self, g: &Graph) -> Result<MonomialIdeal, IdealError> {
        match self {
            IdealKind::Edge => edge_ideal(g),
            IdealKind::Gin => gin_ideal(g),
            IdealKind::Inid => inid_ideal(g),
        }
    }
}

impl fmt::Display for IdealKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for IdealKind {
    type Err = &'static str;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.trim() {
            "edge" => Ok(IdealKind::Edge),
            "gin" => Ok(IdealKind::Gin),
            "inid" => Ok(IdealKind::Inid),
            _ => Err("ideal kind must be one of edge, gin, inid"),
        }
    }
}

/// Variable naming for ideals of a graph on `n` vertices.
pub fn graph_naming(g: &Graph) -> VarNaming {
    VarNaming::Paired { n: g.n() }
}

fn check_edges(g: &Graph) -> Result<(), IdealError> {
    if g.is_edgeless() {
        Err(IdealError::Edgeless)
    } else {
        Ok(())
    }
}

/// `(x_a x_b | {a, b} ∈ E)` in `2n` variables.
pub fn edge_ideal(g: &Graph) -> Result<MonomialIdeal, IdealError> {
    check_edges(g)?;
    let dim = 2 * g.n();
    let gens = g
        .edges()
        .map(|(a, b)| {
            let mut m = Monomial::one(dim).into_exponents();
            m[a - 1] = 1;
            m[b - 1] = 1;
            Monomial::new(m)
        })
        .collect();
    minimalize(gens)
}

/// `(y_{v_1} ... y_{v_s} x_i x_j | i, v_1, ..., v_s, j an induced path)`.
pub fn gin_ideal(g: &Graph) -> Result<MonomialIdeal, IdealError> {
    check_edges(g)?;
    let n = g.n();
    let paths = enumerate_induced_paths(g);
    let gens: Vec<Monomial> = paths
        .iter()
        .map(|p| {
            let mut e = Monomial::one(2 * n).into_exponents();
            e[p.first() - 1] = 1;
            e[p.last() - 1] = 1;
            for &v in p.interior() {
                e[n + v - 1] = 1;
            }
            Monomial::new(e)
        })
        .collect();
    let count = gens.len();
    let ideal = minimalize(gens)?;
    debug_assert_eq!(
        ideal.gens().len(),
        count,
        "induced-path monomials form an antichain"
    );
    Ok(ideal)
}

/// `(u_π x_i y_j | π admissible from i to j)` where `u_π` is the product
/// of `y_k` over interior `k < i` and `x_l` over interior `l > j`.
///
/// This is the orientation that makes `u_π (x_i y_j - x_j y_i)` lie in
/// `J_G`: for `2 - 1 - 3` the S-pair of the two edge binomials is
/// `y_1 (x_3 y_2 - x_2 y_3)`, with leading term `x_2 y_1 y_3`.
pub fn inid_ideal(g: &Graph) -> Result<MonomialIdeal, IdealError> {
    check_edges(g)?;
    let n = g.n();
    let gens = enumerate_admissible_paths(g)
        .iter()
        .map(|p| {
            let (i, j) = (p.first(), p.last());
            let mut e = Monomial::one(2 * n).into_exponents();
            e[i - 1] = 1;
            e[n + j - 1] = 1;
            for &v in p.interior() {
                if v < i {
                    e[n + v - 1] = 1;
                } else {
                    e[v - 1] = 1;
                }
            }
            Monomial::new(e)
        })
        .collect::<Vec<_>>();
    let count = gens.len();
    let ideal = minimalize(gens)?;
    debug_assert_eq!(
        ideal.gens().len(),
        count,
        "admissible-path monomials form an antichain"
    );
    Ok(ideal)
}
