//! Simple labeled graphs on `1..=n` and the graph-theoretic computations the
//! ideal constructions depend on.
//!
//! Vertex labels are significant: the lexicographic initial ideal and the
//! admissible paths depend on the order of the labels, so every operation
//! that builds a new graph from an old one preserves label order.

mod coloring;
mod enumerate;
mod family;
mod format;
mod paths;

use alloc::vec::Vec;
use core::fmt;

pub use coloring::{chromatic_number, clique_number, optimal_coloring};
pub use enumerate::{connected_graphs, graphs_up_to_iso, labeled_connected_graphs, two_component_graphs};
pub use family::{make_family, Family};
pub use format::{parse_edge_list, parse_graph6, to_graph6};
pub use paths::{
    enumerate_admissible_paths, enumerate_induced_paths, longest_admissible_path_order,
    longest_induced_path_order, PathKind, VertexPath,
};

/// 1-based vertex label.
pub type Vertex = usize;

/// Largest supported vertex count (one machine word of adjacency per vertex).
pub const MAX_VERTICES: usize = 64;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum GraphError {
    #[error("graph must have at least one vertex")]
    NoVertices,
    #[error("graph has {0} vertices, at most {MAX_VERTICES} are supported")]
    TooManyVertices(usize),
    #[error("loop at vertex {0}")]
    Loop(Vertex),
    #[error("edge endpoint {vertex} outside 1..={n}")]
    EndpointOutOfRange { vertex: Vertex, n: usize },
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: &'static str },
    #[error("graph6: {0}")]
    Graph6(&'static str),
    #[error("vertex subset must be nonempty")]
    EmptySubset,
    #[error("invalid family parameters: {0}")]
    InvalidFamily(&'static str),
}

/// A set of vertices, stored as a bitmask (vertex `v` is bit `v - 1`).
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct VertexSet(u64);

impl VertexSet {
    pub const EMPTY: VertexSet = VertexSet(0);

    /// All of `1..=n`.
    pub fn full(n: usize) -> Self {
        if n >= 64 {
            VertexSet(u64::MAX)
        } else {
            VertexSet((1u64 << n) - 1)
        }
    }

    pub fn from_bits(bits: u64) -> Self {
        VertexSet(bits)
    }

    pub fn bits(self) -> u64 {
        self.0
    }

    pub fn singleton(v: Vertex) -> Self {
        VertexSet(1u64 << (v - 1))
    }

    pub fn contains(self, v: Vertex) -> bool {
        (1..=64).contains(&v) && self.0 >> (v - 1) & 1 == 1
    }

    pub fn insert(&mut self, v: Vertex) {
        self.0 |= 1u64 << (v - 1);
    }

    pub fn remove(&mut self, v: Vertex) {
        self.0 &= !(1u64 << (v - 1));
    }

    pub fn with(self, v: Vertex) -> Self {
        VertexSet(self.0 | 1u64 << (v - 1))
    }

    pub fn without(self, v: Vertex) -> Self {
        VertexSet(self.0 & !(1u64 << (v - 1)))
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn is_subset(self, other: VertexSet) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn union(self, other: VertexSet) -> Self {
        VertexSet(self.0 | other.0)
    }

    pub fn intersection(self, other: VertexSet) -> Self {
        VertexSet(self.0 & other.0)
    }

    pub fn difference(self, other: VertexSet) -> Self {
        VertexSet(self.0 & !other.0)
    }

    /// Smallest member.
    pub fn min(self) -> Option<Vertex> {
        if self.0 == 0 {
            None
        } else {
            Some(self.0.trailing_zeros() as usize + 1)
        }
    }

    /// Members in ascending order.
    pub fn iter(self) -> impl Iterator<Item = Vertex> {
        let mut bits = self.0;
        core::iter::from_fn(move || {
            if bits == 0 {
                return None;
            }
            let v = bits.trailing_zeros() as usize + 1;
            bits &= bits - 1;
            Some(v)
        })
    }

    pub fn to_vec(self) -> Vec<Vertex> {
        self.iter().collect()
    }

    /// Canonical ordering: by size, then lexicographically on the sorted
    /// member lists.
    pub fn canonical_cmp(&self, other: &VertexSet) -> core::cmp::Ordering {
        self.len()
            .cmp(&other.len())
            .then_with(|| self.iter().cmp(other.iter()))
    }
}

impl FromIterator<Vertex> for VertexSet {
    fn from_iter<I: IntoIterator<Item = Vertex>>(iter: I) -> Self {
        let mut s = VertexSet::EMPTY;
        for v in iter {
            s.insert(v);
        }
        s
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

/// A simple undirected graph on the vertices `1..=n`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: Vec<u64>,
}

impl Graph {
    /// The edgeless graph on `n` vertices.
    pub fn new(n: usize) -> Result<Self, GraphError> {
        if n == 0 {
            return Err(GraphError::NoVertices);
        }
        if n > MAX_VERTICES {
            return Err(GraphError::TooManyVertices(n));
        }
        Ok(Graph {
            n,
            adj: alloc::vec![0; n],
        })
    }

    pub fn from_edges(
        n: usize,
        edges: impl IntoIterator<Item = (Vertex, Vertex)>,
    ) -> Result<Self, GraphError> {
        let mut g = Graph::new(n)?;
        for (a, b) in edges {
            g.add_edge(a, b)?;
        }
        Ok(g)
    }

    /// Adds `{a, b}`; adding an existing edge is a no-op.
    pub fn add_edge(&mut self, a: Vertex, b: Vertex) -> Result<(), GraphError> {
        for v in [a, b] {
            if v == 0 || v > self.n {
                return Err(GraphError::EndpointOutOfRange { vertex: v, n: self.n });
            }
        }
        if a == b {
            return Err(GraphError::Loop(a));
        }
        self.adj[a - 1] |= 1u64 << (b - 1);
        self.adj[b - 1] |= 1u64 << (a - 1);
        Ok(())
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.n)
    }

    pub fn has_edge(&self, a: Vertex, b: Vertex) -> bool {
        a >= 1 && a <= self.n && VertexSet(self.adj[a - 1]).contains(b)
    }

    pub fn neighbors(&self, v: Vertex) -> VertexSet {
        VertexSet(self.adj[v - 1])
    }

    /// Edges `(i, j)` with `i < j`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (Vertex, Vertex)> + '_ {
        (1..=self.n).flat_map(move |i| {
            VertexSet(self.adj[i - 1])
                .iter()
                .filter(move |&j| j > i)
                .map(move |j| (i, j))
        })
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|a| a.count_ones() as usize).sum::<usize>() / 2
    }

    pub fn is_edgeless(&self) -> bool {
        self.adj.iter().all(|&a| a == 0)
    }

    /// The subgraph induced on `w`, relabeled `1..=|w|` in increasing label
    /// order. The returned vector maps new labels to old ones
    /// (`map[k - 1]` is the old label of new vertex `k`).
    pub fn induced_subgraph(&self, w: VertexSet) -> Result<(Graph, Vec<Vertex>), GraphError> {
        if w.is_empty() {
            return Err(GraphError::EmptySubset);
        }
        if !w.is_subset(self.vertices()) {
            let bad = w.difference(self.vertices()).min().unwrap_or(0);
            return Err(GraphError::EndpointOutOfRange {
                vertex: bad,
                n: self.n,
            });
        }
        let map = w.to_vec();
        let mut h = Graph::new(map.len())?;
        for (a, &va) in map.iter().enumerate() {
            for (b, &vb) in map.iter().enumerate().skip(a + 1) {
                if self.has_edge(va, vb) {
                    h.add_edge(a + 1, b + 1)?;
                }
            }
        }
        Ok((h, map))
    }

    /// Connected components of the subgraph induced on `within`, each as a
    /// vertex set, ordered by minimum element.
    pub fn components_within(&self, within: VertexSet) -> Vec<VertexSet> {
        let mut out = Vec::new();
        let mut rest = within.0;
        while rest != 0 {
            let start = rest & rest.wrapping_neg();
            let mut comp = start;
            let mut frontier = start;
            while frontier != 0 {
                let v = frontier.trailing_zeros() as usize;
                frontier &= frontier - 1;
                let new = self.adj[v] & within.0 & !comp;
                comp |= new;
                frontier |= new;
            }
            rest &= !comp;
            out.push(VertexSet(comp));
        }
        out
    }

    pub fn connected_components(&self) -> Vec<VertexSet> {
        self.components_within(self.vertices())
    }

    pub fn is_connected(&self) -> bool {
        self.connected_components().len() == 1
    }

    pub fn is_connected_within(&self, within: VertexSet) -> bool {
        !within.is_empty() && self.components_within(within).len() == 1
    }

    /// `c_G(T)`: the number of components of `G` with `t` deleted, with the
    /// convention `c_G([n]) = 0`.
    pub fn component_count_after_removal(&self, t: VertexSet) -> usize {
        self.components_within(self.vertices().difference(t)).len()
    }

    /// Every irredundant disconnecting set, ordered by size and then
    /// lexicographically. The empty set is always first.
    pub fn enumerate_ids(&self) -> Vec<DisconnectingSet> {
        let n = self.n;
        let mut out = Vec::new();
        for size in 0..=n {
            for_each_subset_of_size(n, size, |t| {
                let c = self.component_count_after_removal(t);
                if t.iter()
                    .all(|i| self.component_count_after_removal(t.without(i)) < c)
                {
                    out.push(DisconnectingSet {
                        members: t,
                        component_count: c,
                    });
                }
            });
        }
        out
    }

    /// All inclusion-minimal vertex covers, ordered by size and then
    /// lexicographically. The edgeless graph has the single cover `∅`.
    ///
    /// Computed as complements of maximal independent sets.
    pub fn minimal_vertex_covers(&self) -> Vec<VertexSet> {
        let all = self.vertices();
        let mut covers = Vec::new();
        // Bron-Kerbosch on the complement graph.
        let non_adj: Vec<u64> = (0..self.n).map(|v| !self.adj[v] & all.0 & !(1u64 << v)).collect();
        fn bk(non_adj: &[u64], r: u64, mut p: u64, mut x: u64, out: &mut Vec<u64>) {
            if p == 0 && x == 0 {
                out.push(r);
                return;
            }
            let pivot = (p | x).trailing_zeros() as usize;
            let mut cand = p & !non_adj[pivot];
            while cand != 0 {
                let v = cand.trailing_zeros() as usize;
                cand &= cand - 1;
                let bit = 1u64 << v;
                bk(non_adj, r | bit, p & non_adj[v], x & non_adj[v], out);
                p &= !bit;
                x |= bit;
            }
        }
        let mut independents = Vec::new();
        bk(&non_adj, 0, all.0, 0, &mut independents);
        for s in independents {
            covers.push(VertexSet(all.0 & !s));
        }
        covers.sort_by(VertexSet::canonical_cmp);
        covers
    }

    /// Whether the given labeling satisfies the closed-graph condition: for
    /// edges `{i,j}`, `{k,l}` with `i < j`, `k < l`, `i = k` forces
    /// `{j,l} ∈ E` and `j = l` forces `{i,k} ∈ E`.
    pub fn is_closed_labeling(&self) -> bool {
        for v in 1..=self.n {
            let nb = self.neighbors(v);
            let below_mask = (1u64 << (v - 1)) - 1;
            let above = VertexSet(nb.0 & !below_mask).without(v);
            let below = VertexSet(nb.0 & below_mask);
            for side in [above, below] {
                for a in side.iter() {
                    for b in side.iter().filter(|&b| b > a) {
                        if !self.has_edge(a, b) {
                            return false;
                        }
                    }
                }
            }
        }
        true
    }

    /// Disjoint union, with `other`'s vertices shifted past `self`'s.
    pub fn disjoint_union(&self, other: &Graph) -> Result<Graph, GraphError> {
        let shift = self.n;
        let mut g = Graph::new(self.n + other.n)?;
        for (a, b) in self.edges() {
            g.add_edge(a, b)?;
        }
        for (a, b) in other.edges() {
            g.add_edge(a + shift, b + shift)?;
        }
        Ok(g)
    }

    /// The graph with vertex `v` relabeled `perm[v - 1]`.
    pub fn relabeled(&self, perm: &[Vertex]) -> Result<Graph, GraphError> {
        Graph::from_edges(self.n, self.edges().map(|(a, b)| (perm[a - 1], perm[b - 1])))
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges=", self.n)?;
        f.debug_list().entries(self.edges()).finish()?;
        write!(f, ")")
    }
}

/// A vertex set `T` with `c_G(T)` recorded.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DisconnectingSet {
    pub members: VertexSet,
    pub component_count: usize,
}

/// Calls `f` on every `size`-subset of `1..=n`, in lexicographic order.
pub fn for_each_subset_of_size(n: usize, size: usize, mut f: impl FnMut(VertexSet)) {
    if size > n {
        return;
    }
    let mut idx: Vec<usize> = (1..=size).collect();
    loop {
        f(idx.iter().copied().collect());
        // advance to the next combination
        let mut k = size;
        loop {
            if k == 0 {
                return;
            }
            k -= 1;
            if idx[k] < n - (size - 1 - k) {
                idx[k] += 1;
                for m in k + 1..size {
                    idx[m] = idx[m - 1] + 1;
                }
                break;
            }
        }
    }
}
