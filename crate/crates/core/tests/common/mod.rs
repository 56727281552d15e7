//! Brute-force oracles shared by the integration tests.

#![allow(dead_code)]

use std::collections::BTreeSet;

use edgesym_core::graph::Graph;
use edgesym_core::{Monomial, PrimeSupport, VertexSet};

/// Minimal elements of the box `{0..m}^dim` meeting every prime-sum
/// inequality; exponent vectors, sorted.
pub fn box_symbolic_power(primes: &[PrimeSupport], dim: usize, m: u32) -> BTreeSet<Vec<u32>> {
    let member = |z: &[u32]| {
        primes
            .iter()
            .all(|p| p.members().iter().map(|i| z[i - 1] as u64).sum::<u64>() >= m as u64)
    };
    let mut out = BTreeSet::new();
    let mut z = vec![0u32; dim];
    loop {
        if member(&z) {
            let minimal = (0..dim).all(|i| {
                if z[i] == 0 {
                    return true;
                }
                let mut w = z.clone();
                w[i] -= 1;
                !member(&w)
            });
            if minimal {
                out.insert(z.clone());
            }
        }
        let mut k = 0;
        while k < dim && z[k] == m {
            z[k] = 0;
            k += 1;
        }
        if k == dim {
            return out;
        }
        z[k] += 1;
    }
}

pub fn exponent_set(gens: &[Monomial]) -> BTreeSet<Vec<u32>> {
    gens.iter().map(|g| g.exponents().to_vec()).collect()
}

pub fn support_set(primes: &[PrimeSupport]) -> BTreeSet<u128> {
    primes.iter().map(|p| p.members().bits()).collect()
}

/// Irredundant disconnecting sets by scanning every subset.
pub fn brute_ids(g: &Graph) -> BTreeSet<u64> {
    let n = g.n();
    let c = |t: VertexSet| g.component_count_after_removal(t);
    (0u64..1 << n)
        .map(VertexSet::from_bits)
        .filter(|&t| t.iter().all(|i| c(t) > c(t.without(i))))
        .map(VertexSet::bits)
        .collect()
}

/// Graph on `n` vertices whose edges are picked by `bits` over the pairs
/// `(1,2), (1,3), ..., (n-1,n)`.
pub fn graph_from_bits(n: usize, bits: &[bool]) -> Graph {
    let pairs = (1..=n).flat_map(|i| (i + 1..=n).map(move |j| (i, j)));
    Graph::from_edges(n, pairs.zip(bits).filter(|(_, &b)| b).map(|(p, _)| p)).unwrap()
}
