//! Exact linear programming for `min Σ a_i` over a symbolic polyhedron.
//!
//! The primal `min 1·a s.t. A a >= 1, a >= 0` is solved through its dual
//! `max 1·y s.t. Aᵀ y <= 1, y >= 0`, whose slack basis is feasible from the
//! start, so no phase one is needed. Pivoting uses Bland's rule, which
//! rules out cycling, over exact rationals.

use alloc::vec;
use alloc::vec::Vec;

use num_traits::{One, Zero};

use crate::polyhedron::HPolyhedron;
use crate::rational::Rational;

/// Optimum of `min Σ a_i` over the polyhedron.
pub fn lp_min_sum(p: &HPolyhedron) -> Rational {
    let m = p.one_facets().len();
    let d = p.dim();
    // rows: one per coordinate i, Σ_{M ∋ i} y_M + s_i = 1
    // columns: y_0..y_{m-1}, then s_0..s_{d-1}, then the right-hand side
    let cols = m + d;
    let mut t: Vec<Vec<Rational>> = (0..d)
        .map(|i| {
            let mut row = vec![Rational::zero(); cols + 1];
            for (f, facet) in p.one_facets().iter().enumerate() {
                if facet.contains(i + 1) {
                    row[f] = Rational::one();
                }
            }
            row[m + i] = Rational::one();
            row[cols] = Rational::one();
            row
        })
        .collect();
    let mut basis: Vec<usize> = (m..m + d).collect();
    // reduced costs for maximizing Σ y: c_j - c_B B^{-1} A_j
    let mut cost = vec![Rational::zero(); cols + 1];
    for c in cost.iter_mut().take(m) {
        *c = Rational::one();
    }

    while let Some(enter) = (0..cols).find(|&j| cost[j] > Rational::zero()) {
        let mut leave: Option<(usize, Rational)> = None;
        for (r, row) in t.iter().enumerate() {
            if row[enter] > Rational::zero() {
                let ratio = row[cols] / row[enter];
                let better = match leave {
                    None => true,
                    Some((lr, best)) => ratio < best || (ratio == best && basis[r] < basis[lr]),
                };
                if better {
                    leave = Some((r, ratio));
                }
            }
        }
        let (r, _) = leave.expect("the dual is bounded because the primal is feasible");
        let pivot = t[r][enter];
        for v in t[r].iter_mut() {
            *v /= pivot;
        }
        let pivot_row = t[r].clone();
        for (k, row) in t.iter_mut().enumerate() {
            if k != r && !row[enter].is_zero() {
                let f = row[enter];
                for (v, pv) in row.iter_mut().zip(&pivot_row) {
                    *v -= f * pv;
                }
            }
        }
        let f = cost[enter];
        for (v, pv) in cost.iter_mut().zip(&pivot_row) {
            *v -= f * pv;
        }
        basis[r] = enter;
    }
    // the objective row's right-hand side holds minus the optimum
    -cost[cols]
}
