mod common;

use std::collections::BTreeSet;

use edgesym_core::graph::{
    chromatic_number, clique_number, enumerate_admissible_paths, enumerate_induced_paths,
    longest_induced_path_order, parse_graph6, to_graph6, Graph,
};
use edgesym_core::invariants::{verify_theorem, Outcome, SymbolicPolyhedron, TheoremId};
use edgesym_core::lp::lp_min_sum;
use edgesym_core::monomial::{minimalize, symbolic_power};
use edgesym_core::polyhedron::is_full;
use edgesym_core::primes::{brute_force_primes, primes_for, supports};
use edgesym_core::{IdealKind, Monomial, MonomialIdeal, PrimeSupport, Rational, VarSet, VertexSet};
use proptest::prelude::*;

use common::{box_symbolic_power, brute_ids, exponent_set, graph_from_bits, support_set};

fn arb_graph(min_n: usize, max_n: usize) -> impl Strategy<Value = Graph> {
    (min_n..=max_n)
        .prop_flat_map(|n| (Just(n), prop::collection::vec(any::<bool>(), n * (n - 1) / 2)))
        .prop_map(|(n, bits)| graph_from_bits(n, &bits))
}

fn arb_graph_with_edge(min_n: usize, max_n: usize) -> impl Strategy<Value = Graph> {
    arb_graph(min_n, max_n).prop_filter("needs an edge", |g| !g.is_edgeless())
}

/// Squarefree ideal from up to five random nonempty supports.
fn arb_squarefree(max_dim: usize) -> impl Strategy<Value = MonomialIdeal> {
    (2..=max_dim)
        .prop_flat_map(|d| (Just(d), prop::collection::vec(1u128..(1 << d), 1..=5)))
        .prop_map(|(d, masks)| {
            let gens = masks
                .into_iter()
                .map(|b| Monomial::from_support(d, VarSet::from_bits(b)))
                .collect();
            minimalize(gens).unwrap()
        })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    #[test]
    fn ids_match_subset_scan(g in arb_graph(1, 7)) {
        let ids = g.enumerate_ids();
        for t in &ids {
            prop_assert_eq!(t.component_count, g.component_count_after_removal(t.members));
        }
        let got: BTreeSet<u64> = ids.iter().map(|t| t.members.bits()).collect();
        prop_assert_eq!(got.len(), ids.len());
        prop_assert_eq!(got, brute_ids(&g));
    }

    #[test]
    fn graph_sanity(g in arb_graph(1, 7)) {
        prop_assert!(chromatic_number(&g) >= clique_number(&g));
        let (h, map) = g.induced_subgraph(g.vertices()).unwrap();
        prop_assert_eq!(&h, &g);
        prop_assert_eq!(map, (1..=g.n()).collect::<Vec<_>>());
        prop_assert_eq!(parse_graph6(&to_graph6(&g).unwrap()).unwrap(), g.clone());

        let covers = g.minimal_vertex_covers();
        for (a, c) in covers.iter().enumerate() {
            prop_assert!(g.edges().all(|(i, j)| c.contains(i) || c.contains(j)));
            for d in &covers[a + 1..] {
                prop_assert!(!c.is_subset(*d) && !d.is_subset(*c));
            }
        }
    }

    #[test]
    fn path_shapes(g in arb_graph(2, 7)) {
        for p in enumerate_induced_paths(&g) {
            let w = p.vertex_set();
            let edges = g.edges().filter(|&(i, j)| w.contains(i) && w.contains(j)).count();
            prop_assert_eq!(edges + 1, p.order());
            prop_assert!(p.vertices.windows(2).all(|e| g.has_edge(e[0], e[1])));
        }
        for p in enumerate_admissible_paths(&g) {
            let (i, j) = (p.first(), p.last());
            prop_assert!(i < j);
            prop_assert!(p.interior().iter().all(|&v| v < i || v > j));
            prop_assert!(p.vertices.windows(2).all(|e| g.has_edge(e[0], e[1])));
            prop_assert!(p.order() == 2 || !g.has_edge(i, j));
        }
    }

    #[test]
    fn ideal_shapes(g in arb_graph_with_edge(2, 7)) {
        let edge = IdealKind::Edge.build(&g).unwrap();
        let gin = IdealKind::Gin.build(&g).unwrap();
        let inid = IdealKind::Inid.build(&g).unwrap();
        prop_assert!(edge.is_subideal_of(&gin));
        for ideal in [&gin, &inid] {
            prop_assert!(ideal.is_squarefree());
            prop_assert!(ideal.is_minimal());
            prop_assert_eq!(&minimalize(ideal.gens().to_vec()).unwrap(), ideal);
        }
    }

    #[test]
    fn closed_form_primes_match_transversals(g in arb_graph_with_edge(2, 6)) {
        for kind in IdealKind::ALL {
            let closed = supports(&primes_for(&g, kind).unwrap());
            let oracle = brute_force_primes(&kind.build(&g).unwrap()).unwrap();
            prop_assert_eq!(support_set(&closed), support_set(&oracle), "{} {:?}", kind, g);
            prop_assert_eq!(closed.len(), oracle.len());
            for (a, p) in closed.iter().enumerate() {
                for q in &closed[a + 1..] {
                    prop_assert!(!p.is_subset(q) && !q.is_subset(p));
                }
            }
        }
    }

    #[test]
    fn subgraph_primes_lift(g in arb_graph_with_edge(2, 6), mask in any::<u64>()) {
        let n = g.n();
        let w = VertexSet::from_bits(mask & VertexSet::full(n).bits());
        prop_assume!(w.len() >= 2 && g.is_connected_within(w));
        let (h, map) = g.induced_subgraph(w).unwrap();
        let lift = |p: &PrimeSupport| -> VarSet {
            p.members()
                .iter()
                .map(|i| if i <= h.n() { map[i - 1] } else { n + map[i - h.n() - 1] })
                .collect()
        };
        for kind in IdealKind::ALL {
            let big = supports(&primes_for(&g, kind).unwrap());
            for p in supports(&primes_for(&h, kind).unwrap()) {
                let image = lift(&p);
                prop_assert!(big.iter().any(|q| image.is_subset(q.members())), "{} {:?} {:?}", kind, g, w);
            }
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn symbolic_power_matches_box(ideal in arb_squarefree(6), m in 1u32..=3) {
        let primes = brute_force_primes(&ideal).unwrap();
        let sym = symbolic_power(&primes, m).unwrap();
        prop_assert_eq!(exponent_set(sym.gens()), box_symbolic_power(&primes, ideal.dim(), m));
        let ord = ideal.ordinary_power(m).unwrap();
        prop_assert!(ord.gens().iter().all(|z| sym.contains(z)));
        if m == 1 {
            prop_assert_eq!(&sym, &ideal);
        }
    }

    #[test]
    fn polyhedron_vertex_properties(g in arb_graph_with_edge(2, 5)) {
        let mut w = Vec::new();
        for kind in IdealKind::ALL {
            let sp = SymbolicPolyhedron::new(&g, kind).unwrap();
            for v in &sp.vertices {
                prop_assert!(sp.poly.is_vertex(v).unwrap());
            }
            for v in sp.full_vertices() {
                prop_assert!(is_full(&v, g.n()) && sp.vertices.contains(&v));
            }
            let wald = sp.waldschmidt();
            prop_assert_eq!(lp_min_sum(&sp.poly), wald);
            prop_assert!(wald <= sp.areg());
            prop_assert!(wald <= Rational::from_integer(kind.build(&g).unwrap().alpha().unwrap() as i128));
            w.push(wald);
        }
        // edge, gin, inid
        prop_assert_eq!(w[0], w[1]);
        prop_assert_eq!(w[2], Rational::from_integer(2));
        let chi = chromatic_number(&g) as i128;
        let omega = clique_number(&g) as i128;
        prop_assert!(Rational::new(chi, chi - 1) <= w[0] && w[0] <= Rational::new(omega, omega - 1));
        let areg = SymbolicPolyhedron::new(&g, IdealKind::Gin).unwrap().areg();
        prop_assert!(areg >= Rational::from_integer(longest_induced_path_order(&g) as i128));
    }

    #[test]
    fn vertex_generator_correspondence(g in arb_graph_with_edge(2, 4)) {
        for t in [TheoremId::ZeroOneVertices, TheoremId::VertexToGenerator] {
            prop_assert_eq!(verify_theorem(t, &g, None).unwrap(), Outcome::Pass);
        }
    }

    #[test]
    fn label_independent_invariants(g in arb_graph_with_edge(2, 5), seed in any::<u64>()) {
        let n = g.n();
        let mut perm: Vec<usize> = (1..=n).collect();
        let mut s = seed;
        for i in (1..n).rev() {
            s = s.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            perm.swap(i, (s >> 33) as usize % (i + 1));
        }
        let h = g.relabeled(&perm).unwrap();
        for kind in [IdealKind::Edge, IdealKind::Gin] {
            let a = SymbolicPolyhedron::new(&g, kind).unwrap();
            let b = SymbolicPolyhedron::new(&h, kind).unwrap();
            prop_assert_eq!(a.waldschmidt(), b.waldschmidt());
            prop_assert_eq!(a.areg(), b.areg());
            prop_assert_eq!(a.vertices.len(), b.vertices.len());
        }
    }
}
