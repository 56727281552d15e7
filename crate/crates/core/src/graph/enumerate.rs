//! Exhaustive small-graph corpora.
//!
//! Isomorphism classes are generated by vertex augmentation and
//! deduplicated with a canonical code: the largest adjacency code over all
//! relabelings that list vertices by non-increasing degree. The
//! representative of each class is the graph relabeled by the maximizing
//! permutation, so its labeling is deterministic.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;

use super::{Graph, Vertex};

fn pair_bit(a: usize, b: usize) -> u64 {
    // 0-based positions, a != b; column-major upper triangle like graph6
    let (i, j) = if a < b { (a, b) } else { (b, a) };
    1u64 << (j * (j - 1) / 2 + i)
}

/// Canonical code and the relabeling (`perm[v - 1]` = new label) that
/// achieves it. Supports `n <= 11`.
fn canonical_form(g: &Graph) -> (u64, Vec<Vertex>) {
    let n = g.n();
    assert!(n <= 11, "canonical form supports at most 11 vertices");
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&v| core::cmp::Reverse(g.neighbors(v + 1).len()));
    // class boundaries by degree
    let mut classes: Vec<Vec<usize>> = Vec::new();
    for &v in &order {
        let d = g.neighbors(v + 1).len();
        match classes.last_mut() {
            Some(c) if g.neighbors(c[0] + 1).len() == d => c.push(v),
            _ => classes.push(vec![v]),
        }
    }
    let edges: Vec<(usize, usize)> = g.edges().map(|(a, b)| (a - 1, b - 1)).collect();
    let mut pos = vec![0usize; n];
    let mut best = (0u64, vec![0usize; n]);
    let mut found = false;
    assign(
        &classes,
        0,
        0,
        &mut pos,
        &mut vec![false; n],
        &edges,
        &mut best,
        &mut found,
    );
    (best.0, best.1.iter().map(|p| p + 1).collect())
}

#[allow(clippy::too_many_arguments)]
fn assign(
    classes: &[Vec<usize>],
    class: usize,
    offset: usize,
    pos: &mut Vec<usize>,
    used: &mut Vec<bool>,
    edges: &[(usize, usize)],
    best: &mut (u64, Vec<usize>),
    found: &mut bool,
) {
    if class == classes.len() {
        let code = edges
            .iter()
            .fold(0u64, |acc, &(a, b)| acc | pair_bit(pos[a], pos[b]));
        if !*found || code > best.0 {
            *found = true;
            best.0 = code;
            best.1.clone_from(pos);
        }
        return;
    }
    let members = &classes[class];
    // place the first unplaced member of this class in each free slot
    let Some(&v) = members.iter().find(|&&v| !used[v]) else {
        assign(
            classes,
            class + 1,
            offset + members.len(),
            pos,
            used,
            edges,
            best,
            found,
        );
        return;
    };
    let slots = offset..offset + members.len();
    let taken: Vec<usize> = members.iter().filter(|&&u| used[u]).map(|&u| pos[u]).collect();
    for slot in slots {
        if taken.contains(&slot) {
            continue;
        }
        used[v] = true;
        pos[v] = slot;
        assign(classes, class, offset, pos, used, edges, best, found);
        used[v] = false;
    }
}

/// One representative per isomorphism class of graphs on `n` vertices
/// (`1 <= n <= 10`), ordered by edge count and then canonical code.
pub fn graphs_up_to_iso(n: usize) -> Vec<Graph> {
    assert!((1..=10).contains(&n), "supported range is 1..=10");
    if n == 1 {
        return vec![Graph::new(1).expect("n = 1 is valid")];
    }
    let mut seen: BTreeMap<(usize, u64), Graph> = BTreeMap::new();
    for base in graphs_up_to_iso(n - 1) {
        for mask in 0u64..(1 << (n - 1)) {
            let mut g = Graph::new(n).expect("n is in range");
            for (a, b) in base.edges() {
                g.add_edge(a, b).expect("edge of a smaller graph");
            }
            for v in 1..n {
                if mask >> (v - 1) & 1 == 1 {
                    g.add_edge(v, n).expect("distinct endpoints");
                }
            }
            let (code, perm) = canonical_form(&g);
            seen.entry((g.edge_count(), code))
                .or_insert_with(|| g.relabeled(&perm).expect("permutation of 1..=n"));
        }
    }
    seen.into_values().collect()
}

/// Connected isomorphism classes on exactly `n` vertices.
pub fn connected_graphs(n: usize) -> Vec<Graph> {
    graphs_up_to_iso(n)
        .into_iter()
        .filter(Graph::is_connected)
        .collect()
}

/// Every connected graph on the labeled vertex set `1..=n` (`n <= 7`),
/// without identifying isomorphic labelings.
pub fn labeled_connected_graphs(n: usize) -> Vec<Graph> {
    assert!((1..=7).contains(&n), "supported range is 1..=7");
    let pairs: Vec<(Vertex, Vertex)> = (1..=n).flat_map(|i| (i + 1..=n).map(move |j| (i, j))).collect();
    (0u64..1 << pairs.len())
        .map(|mask| {
            Graph::from_edges(
                n,
                pairs
                    .iter()
                    .enumerate()
                    .filter(|(k, _)| mask >> k & 1 == 1)
                    .map(|(_, &e)| e),
            )
            .expect("valid pairs")
        })
        .filter(Graph::is_connected)
        .collect()
}

/// Isomorphism classes with exactly two connected components and at least
/// one edge, over all vertex counts `2..=max_n`.
pub fn two_component_graphs(max_n: usize) -> Vec<Graph> {
    (2..=max_n)
        .flat_map(graphs_up_to_iso)
        .filter(|g| g.connected_components().len() == 2 && !g.is_edgeless())
        .collect()
}
