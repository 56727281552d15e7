//! Induced and admissible paths.
//!
//! Path sizes are reported as vertex counts ("order") throughout; the edge
//! count is always one less.

use alloc::vec::Vec;

use super::{Graph, Vertex, VertexSet};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum PathKind {
    Induced,
    Admissible,
}

/// A path `v_0, ..., v_r` of distinct vertices with `v_0 < v_r`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct VertexPath {
    pub vertices: Vec<Vertex>,
    pub kind: PathKind,
}

impl VertexPath {
    pub fn first(&self) -> Vertex {
        self.vertices[0]
    }

    pub fn last(&self) -> Vertex {
        self.vertices[self.vertices.len() - 1]
    }

    pub fn interior(&self) -> &[Vertex] {
        &self.vertices[1..self.vertices.len() - 1]
    }

    /// Number of vertices.
    pub fn order(&self) -> usize {
        self.vertices.len()
    }

    pub fn vertex_set(&self) -> VertexSet {
        self.vertices.iter().copied().collect()
    }
}

fn sort_paths(paths: &mut [VertexPath]) {
    paths.sort_by(|a, b| {
        a.vertices
            .len()
            .cmp(&b.vertices.len())
            .then_with(|| a.vertices.cmp(&b.vertices))
    });
}

/// Every path whose vertex set induces a path graph, each reported once
/// (oriented so that the first vertex is smaller than the last), ordered by
/// vertex count and then lexicographically.
pub fn enumerate_induced_paths(g: &Graph) -> Vec<VertexPath> {
    let mut out = Vec::new();
    let mut path = Vec::new();
    for start in 1..=g.n() {
        path.push(start);
        extend_induced(
            g,
            &mut path,
            VertexSet::singleton(start),
            VertexSet::EMPTY,
            &mut out,
        );
        path.pop();
    }
    sort_paths(&mut out);
    out
}

/// `on_path` holds the path's vertices, `blocked` the neighbours of every
/// path vertex except the last one.
fn extend_induced(
    g: &Graph,
    path: &mut Vec<Vertex>,
    on_path: VertexSet,
    blocked: VertexSet,
    out: &mut Vec<VertexPath>,
) {
    let last = *path.last().expect("path is nonempty");
    let next_blocked = blocked.union(g.neighbors(last));
    for w in g.neighbors(last).difference(on_path).difference(blocked).iter() {
        path.push(w);
        if path[0] < w {
            out.push(VertexPath {
                vertices: path.clone(),
                kind: PathKind::Induced,
            });
        }
        extend_induced(g, path, on_path.with(w), next_blocked, out);
        path.pop();
    }
}

/// Every admissible path `i = v_0, ..., v_r = j` with `i < j`: consecutive
/// vertices adjacent, every interior vertex below `i` or above `j`, and no
/// proper subset of the interior vertices joining `i` to `j`.
///
/// Ordered by vertex count and then lexicographically.
pub fn enumerate_admissible_paths(g: &Graph) -> Vec<VertexPath> {
    let mut out = Vec::new();
    let mut path = Vec::new();
    for start in 1..=g.n() {
        path.push(start);
        extend_admissible(
            g,
            &mut path,
            VertexSet::singleton(start),
            VertexSet::EMPTY,
            usize::MAX,
            &mut out,
        );
        path.pop();
    }
    sort_paths(&mut out);
    out
}

/// `bound` is the smallest interior vertex above the start; the end vertex
/// must lie strictly between the start and `bound`. A chord would give a
/// shortcut through a proper subset of the interior, so the search only
/// follows chordless extensions.
fn extend_admissible(
    g: &Graph,
    path: &mut Vec<Vertex>,
    on_path: VertexSet,
    blocked: VertexSet,
    bound: usize,
    out: &mut Vec<VertexPath>,
) {
    let start = path[0];
    let last = *path.last().expect("path is nonempty");
    let next_blocked = blocked.union(g.neighbors(last));
    for w in g.neighbors(last).difference(on_path).difference(blocked).iter() {
        path.push(w);
        if w > start && w < bound {
            out.push(VertexPath {
                vertices: path.clone(),
                kind: PathKind::Admissible,
            });
        }
        // continue through w as an interior vertex
        let next_bound = if w > start { bound.min(w) } else { bound };
        if next_bound > start + 1 {
            extend_admissible(g, path, on_path.with(w), next_blocked, next_bound, out);
        }
        path.pop();
    }
}

/// Largest vertex count of an induced path; `0` when `g` has no edges.
pub fn longest_induced_path_order(g: &Graph) -> usize {
    enumerate_induced_paths(g)
        .iter()
        .map(VertexPath::order)
        .max()
        .unwrap_or(0)
}

/// Largest vertex count of an admissible path; `0` when `g` has no edges.
pub fn longest_admissible_path_order(g: &Graph) -> usize {
    enumerate_admissible_paths(g)
        .iter()
        .map(VertexPath::order)
        .max()
        .unwrap_or(0)
}
