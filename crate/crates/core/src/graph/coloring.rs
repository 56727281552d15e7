//! Exact chromatic and clique numbers by branch and bound. Intended for
//! graphs with at most a couple dozen vertices.

use alloc::vec;
use alloc::vec::Vec;

use super::Graph;

/// `ω(G)`, the size of a largest clique.
pub fn clique_number(g: &Graph) -> usize {
    fn expand(g: &Graph, size: usize, mut cand: u64, best: &mut usize) {
        if cand == 0 {
            *best = (*best).max(size);
            return;
        }
        while cand != 0 {
            if size + cand.count_ones() as usize <= *best {
                return;
            }
            let v = cand.trailing_zeros() as usize;
            cand &= cand - 1;
            expand(g, size + 1, cand & g.neighbors(v + 1).bits(), best);
        }
    }
    let mut best = 0;
    expand(g, 0, g.vertices().bits(), &mut best);
    best
}

/// `χ(G)`, the least number of colors in a proper coloring.
pub fn chromatic_number(g: &Graph) -> usize {
    optimal_coloring(g).iter().copied().max().map_or(0, |c| c + 1)
}

/// A proper coloring with `χ(G)` colors; `colors[v - 1]` is the color
/// (`0..χ`) of vertex `v`.
pub fn optimal_coloring(g: &Graph) -> Vec<usize> {
    let n = g.n();
    let mut k = clique_number(g).max(1);
    loop {
        let mut colors = vec![usize::MAX; n];
        if color_with(g, k, &mut colors, 0) {
            return colors;
        }
        k += 1;
    }
}

/// Backtracking k-coloring, always branching on the uncolored vertex with
/// the most distinctly colored neighbours (DSATUR order).
fn color_with(g: &Graph, k: usize, colors: &mut [usize], colored: usize) -> bool {
    let n = colors.len();
    if colored == n {
        return true;
    }
    let mut pick = None;
    let mut pick_key = (0usize, 0usize);
    for v in 0..n {
        if colors[v] != usize::MAX {
            continue;
        }
        let mut seen = 0u64;
        for u in g.neighbors(v + 1).iter() {
            if colors[u - 1] != usize::MAX {
                seen |= 1u64 << colors[u - 1];
            }
        }
        let key = (seen.count_ones() as usize, g.neighbors(v + 1).len());
        if pick.is_none() || key > pick_key {
            pick = Some((v, seen));
            pick_key = key;
        }
    }
    let (v, seen) = pick.expect("an uncolored vertex remains");
    // only try one fresh color: unused colors are interchangeable
    let used = colors
        .iter()
        .filter(|&&c| c != usize::MAX)
        .max()
        .map_or(0, |&c| c + 1);
    for c in 0..k.min(used + 1) {
        if seen >> c & 1 == 0 {
            colors[v] = c;
            if color_with(g, k, colors, colored + 1) {
                return true;
            }
        }
    }
    colors[v] = usize::MAX;
    false
}
