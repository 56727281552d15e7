//! Minimal primes of the graph ideals in closed form, and a brute-force
//! minimal-transversal oracle for arbitrary squarefree monomial ideals.
//!
//! For an irredundant disconnecting set `T` with `G \ T` split into
//! components `G_1, ..., G_c`, and a choice `U = (u_1, ..., u_c)` with
//! `u_k ∈ G_k`:
//!
//! * `P_{T,U} = (x_i, y_i | i ∈ T) + Σ_k (x_i | i ∈ G_k, i ≠ u_k)` for gin,
//! * `Q_{T,U} = (x_i, y_i | i ∈ T) + Σ_k (x_i | i ∈ G_k, i < u_k)
//!   + (y_i | i ∈ G_k, i > u_k)` for the lex initial ideal.

use alloc::vec::Vec;

use crate::graph::{Graph, Vertex, VertexSet};
use crate::ideal::IdealKind;
use crate::monomial::{IdealError, MonomialIdeal, PrimeSupport, VarSet};

/// The combinatorial witness for a minimal prime.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Provenance {
    VertexCover(VertexSet),
    /// `u[k]` is the representative of the `k`-th component of `G \ t`,
    /// components ordered by their smallest vertex.
    Ids {
        t: VertexSet,
        u: Vec<Vertex>,
    },
}

/// A minimal prime support with every witness that produced it.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct LabeledPrime {
    pub support: PrimeSupport,
    pub provenances: Vec<Provenance>,
}

/// Drops the provenance labels.
pub fn supports(primes: &[LabeledPrime]) -> Vec<PrimeSupport> {
    primes.iter().map(|p| p.support.clone()).collect()
}

/// Merges equal supports, keeping first-seen order and every provenance.
fn dedup(items: impl IntoIterator<Item = (VarSet, Provenance)>, dim: usize) -> Vec<LabeledPrime> {
    let mut out: Vec<LabeledPrime> = Vec::new();
    for (support, prov) in items {
        match out.iter_mut().find(|p| p.support.members() == support) {
            Some(p) => p.provenances.push(prov),
            None => out.push(LabeledPrime {
                support: PrimeSupport::new(dim, support).expect("closed-form supports are nonempty"),
                provenances: alloc::vec![prov],
            }),
        }
    }
    debug_assert!(
        out.iter()
            .all(|a| out.iter().all(|b| a == b || !a.support.is_subset(&b.support))),
        "closed-form primes are pairwise incomparable"
    );
    out
}

/// One prime per minimal vertex cover `C`: support `{i | i ∈ C}` in `2n`
/// variables.
pub fn edge_ideal_primes(g: &Graph) -> Result<Vec<LabeledPrime>, IdealError> {
    if g.is_edgeless() {
        return Err(IdealError::Edgeless);
    }
    let items = g
        .minimal_vertex_covers()
        .into_iter()
        .map(|c| (c.iter().collect::<VarSet>(), Provenance::VertexCover(c)));
    Ok(dedup(items, 2 * g.n()))
}

/// Every `(T, U)` pair: IDS in canonical order, then `U` lexicographic over
/// the component order.
fn for_each_tu(g: &Graph, mut f: impl FnMut(VertexSet, &[Vertex])) {
    for ids in g.enumerate_ids() {
        let t = ids.members;
        let comps = g.components_within(g.vertices().difference(t));
        let members: Vec<Vec<Vertex>> = comps.iter().map(|c| c.to_vec()).collect();
        let mut idx = alloc::vec![0usize; comps.len()];
        loop {
            let u: Vec<Vertex> = idx.iter().zip(&members).map(|(&k, m)| m[k]).collect();
            f(t, &u);
            // odometer, last component varies fastest
            let mut k = comps.len();
            loop {
                if k == 0 {
                    break;
                }
                k -= 1;
                idx[k] += 1;
                if idx[k] < members[k].len() {
                    break;
                }
                idx[k] = 0;
            }
            if idx.iter().all(|&i| i == 0) {
                break;
            }
        }
    }
}

/// Evaluates the `P_{T,U}` (gin) or `Q_{T,U}` (inid) formula for any
/// vertex set `t` and representatives `u` (one per component of `G \ t`,
/// components ordered by smallest vertex). No irredundancy or minimality
/// check is made.
pub fn tu_support(g: &Graph, kind: IdealKind, t: VertexSet, u: &[Vertex]) -> VarSet {
    let n = g.n();
    let comps = g.components_within(g.vertices().difference(t));
    let mut s = VarSet::EMPTY;
    for i in t.iter() {
        s.insert(i);
        s.insert(n + i);
    }
    for (comp, &uk) in comps.iter().zip(u) {
        for i in comp.iter() {
            match kind {
                IdealKind::Gin if i != uk => s.insert(i),
                IdealKind::Inid if i < uk => s.insert(i),
                IdealKind::Inid if i > uk => s.insert(n + i),
                _ => {}
            }
        }
    }
    s
}

fn closed_form(g: &Graph, kind: IdealKind) -> Result<Vec<LabeledPrime>, IdealError> {
    if g.is_edgeless() {
        return Err(IdealError::Edgeless);
    }
    let mut items = Vec::new();
    for_each_tu(g, |t, u| {
        items.push((tu_support(g, kind, t, u), Provenance::Ids { t, u: u.to_vec() }));
    });
    Ok(dedup(items, 2 * g.n()))
}

/// The primes `P_{T,U}` of `gin(J_G)`.
pub fn gin_primes(g: &Graph) -> Result<Vec<LabeledPrime>, IdealError> {
    closed_form(g, IdealKind::Gin)
}

/// The primes `Q_{T,U}` of `in(J_G)`.
pub fn inid_primes(g: &Graph) -> Result<Vec<LabeledPrime>, IdealError> {
    closed_form(g, IdealKind::Inid)
}

pub fn primes_for(g: &Graph, kind: IdealKind) -> Result<Vec<LabeledPrime>, IdealError> {
    match kind {
        IdealKind::Edge => edge_ideal_primes(g),
        IdealKind::Gin => gin_primes(g),
        IdealKind::Inid => inid_primes(g),
    }
}

/// Minimal transversals of the generator supports (Berge's incremental
/// algorithm), sorted by size and then lexicographically.
pub fn brute_force_primes(ideal: &MonomialIdeal) -> Result<Vec<PrimeSupport>, IdealError> {
    if !ideal.is_squarefree() {
        return Err(IdealError::NotSquarefree);
    }
    let mut transversals: Vec<VarSet> = alloc::vec![VarSet::EMPTY];
    for g in ideal.gens() {
        let s = g.support();
        let mut next: Vec<VarSet> = Vec::new();
        for &t in &transversals {
            if t.intersects(s) {
                next.push(t);
            } else {
                next.extend(s.iter().map(|v| t.union(VarSet::singleton(v))));
            }
        }
        next.sort_by(VarSet::canonical_cmp);
        next.dedup();
        let mut kept: Vec<VarSet> = Vec::with_capacity(next.len());
        for t in next {
            // subsets are never larger, so they come first
            if !kept.iter().any(|k| k.is_subset(t)) {
                kept.push(t);
            }
        }
        transversals = kept;
    }
    transversals
        .into_iter()
        .map(|t| PrimeSupport::new(ideal.dim(), t))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{connected_graphs, make_family, Family};
    use crate::ideal::{edge_ideal, gin_ideal, inid_ideal};
    use crate::monomial::{minimalize, Monomial, VarNaming};
    use alloc::vec;

    fn sets(primes: &[LabeledPrime]) -> Vec<Vec<usize>> {
        primes
            .iter()
            .map(|p| p.support.members().iter().collect())
            .collect()
    }

    fn sorted(mut v: Vec<VarSet>) -> Vec<VarSet> {
        v.sort_by(VarSet::canonical_cmp);
        v
    }

    fn fam(f: Family) -> Graph {
        make_family(&f).unwrap()
    }

    #[test]
    fn edge_primes() {
        assert_eq!(
            sets(&edge_ideal_primes(&fam(Family::Complete(3))).unwrap()),
            [[1, 2], [1, 3], [2, 3]]
        );
        assert_eq!(
            sets(&edge_ideal_primes(&fam(Family::Complete(2))).unwrap()),
            [[1], [2]]
        );
        let p3 = sets(&edge_ideal_primes(&fam(Family::Path(3))).unwrap());
        assert_eq!(p3, vec![vec![2], vec![1, 3]]);
        assert_eq!(
            edge_ideal_primes(&Graph::new(2).unwrap()),
            Err(IdealError::Edgeless)
        );
    }

    #[test]
    fn gin_prime_examples() {
        let p3 = gin_primes(&fam(Family::Path(3))).unwrap();
        assert_eq!(sets(&p3), vec![vec![2, 3], vec![1, 3], vec![1, 2], vec![2, 5]]);
        assert_eq!(
            p3[3].provenances,
            vec![Provenance::Ids {
                t: VertexSet::singleton(2),
                u: vec![1, 3]
            }]
        );
        for n in 2..=6 {
            let kn = gin_primes(&fam(Family::Complete(n))).unwrap();
            assert_eq!(kn.len(), n);
            for (k, p) in kn.iter().enumerate() {
                let want: Vec<usize> = (1..=n).filter(|&i| i != k + 1).collect();
                assert_eq!(p.support.members().iter().collect::<Vec<_>>(), want);
            }
        }
        assert_eq!(sets(&gin_primes(&fam(Family::Complete(2))).unwrap()), [[2], [1]]);
    }

    #[test]
    fn inid_prime_examples() {
        // (y2, y3), (x1, y3), (x1, x2)
        let tri = inid_primes(&fam(Family::Complete(3))).unwrap();
        assert_eq!(sets(&tri), [[5, 6], [1, 6], [1, 2]]);
        assert_eq!(sets(&inid_primes(&fam(Family::Complete(2))).unwrap()), [[4], [1]]);
        let net_g = fam(Family::Net);
        let net = inid_primes(&net_g).unwrap();
        // {1, 2, 3} is not irredundant in the net: dropping 1 keeps 3 components
        let t123: VertexSet = [1, 2, 3].into_iter().collect();
        assert_eq!(net_g.component_count_after_removal(t123), 3);
        assert_eq!(net_g.component_count_after_removal(t123.without(1)), 3);
        let formula = tu_support(&net_g, IdealKind::Inid, t123, &[4, 5, 6]);
        assert_eq!(formula.iter().collect::<Vec<_>>(), [1, 2, 3, 7, 8, 9]);
        assert!(net.iter().all(|p| p.support.members() != formula));
        // T = {2, 3}, U = (4): (x1, x2, x3, y2, y3) contains every prime of the triangle
        let p = tu_support(&net_g, IdealKind::Inid, [2, 3].into_iter().collect(), &[4]);
        assert!(net.iter().any(|q| q.support.members() == p));
        for tri in [[8, 9], [1, 9], [1, 2]] {
            assert!(tri.into_iter().collect::<VarSet>().is_subset(p));
        }
    }

    #[test]
    fn brute_force_examples() {
        let m = |t: &str| Monomial::parse_text(t, 4, VarNaming::Plain).unwrap();
        let i = minimalize(vec![m("x1*x2*x3"), m("x1*x2*x4"), m("x3*x4")]).unwrap();
        let got: Vec<Vec<usize>> = brute_force_primes(&i)
            .unwrap()
            .iter()
            .map(|p| p.members().iter().collect())
            .collect();
        assert_eq!(got, [[1, 3], [1, 4], [2, 3], [2, 4], [3, 4]]);
        let i = minimalize(vec![m("x1*x2")]).unwrap();
        assert_eq!(brute_force_primes(&i).unwrap().len(), 2);
        let sq = minimalize(vec![m("x1^2")]).unwrap();
        assert_eq!(brute_force_primes(&sq), Err(IdealError::NotSquarefree));

        let tri = inid_ideal(&fam(Family::Complete(3))).unwrap();
        let got = sorted(
            brute_force_primes(&tri)
                .unwrap()
                .iter()
                .map(|p| p.members())
                .collect(),
        );
        let want = sorted(
            supports(&inid_primes(&fam(Family::Complete(3))).unwrap())
                .iter()
                .map(|p| p.members())
                .collect(),
        );
        assert_eq!(got, want);
    }

    fn check_against_oracle(g: &Graph) {
        let cases = [
            (edge_ideal(g).unwrap(), edge_ideal_primes(g).unwrap()),
            (gin_ideal(g).unwrap(), gin_primes(g).unwrap()),
            (inid_ideal(g).unwrap(), inid_primes(g).unwrap()),
        ];
        for (ideal, closed) in cases {
            let oracle = sorted(
                brute_force_primes(&ideal)
                    .unwrap()
                    .iter()
                    .map(|p| p.members())
                    .collect(),
            );
            let closed = sorted(closed.iter().map(|p| p.support.members()).collect());
            assert_eq!(closed, oracle, "{g:?}");
        }
    }

    #[test]
    fn closed_forms_match_oracle_small() {
        for n in 2..=5 {
            for g in connected_graphs(n) {
                check_against_oracle(&g);
            }
        }
    }

    #[test]
    fn closed_forms_match_oracle_disconnected() {
        for g in crate::graph::two_component_graphs(5) {
            check_against_oracle(&g);
        }
        let k2_k1 = Graph::from_edges(3, [(1, 2)]).unwrap();
        check_against_oracle(&k2_k1);
        let k1_k2 = Graph::from_edges(3, [(2, 3)]).unwrap();
        check_against_oracle(&k1_k2);
    }
}
