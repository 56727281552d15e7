//! Symbolic polyhedra `SP(I) = {a >= 0 : Σ_{i ∈ M} a_i >= 1 for every
//! minimal prime support M}` and exact vertex enumeration.
//!
//! Vertices come from the double description method run on the
//! homogenization `{(a, t) : a >= 0, t >= 0, Σ_{i ∈ M} a_i - t >= 0}`.
//! Its extreme rays with `t > 0` are the vertices `a / t`; those with
//! `t = 0` are the coordinate directions of the recession cone. Rays are
//! kept as primitive integer vectors, so no arithmetic is ever rounded.

use alloc::vec;
use alloc::vec::Vec;

use fixedbitset::FixedBitSet;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::monomial::PrimeSupport;
use crate::rational::{QVector, Rational};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum PolyhedronError {
    #[error("at least one facet support is required")]
    NoFacets,
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimMismatch { expected: usize, found: usize },
    #[error("facet supports {0} and {1} are comparable under inclusion")]
    ComparableSupports(usize, usize),
    #[error("point lies outside the polyhedron")]
    NotContained,
    #[error("ambient dimension {dim} is not 2 * {n}")]
    NotPaired { dim: usize, n: usize },
}

/// `{a ∈ Q^dim : a >= 0, Σ_{i ∈ M} a_i >= 1 for each one-facet M}`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct HPolyhedron {
    dim: usize,
    one_facets: Vec<PrimeSupport>,
}

/// Tight constraints at a point: how many, and the rank of their normals.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TightCount {
    pub zero_facets: usize,
    pub one_facets: usize,
    pub rank: usize,
}

impl TightCount {
    pub fn total(&self) -> usize {
        self.zero_facets + self.one_facets
    }
}

/// Builds `SP(I)` from the minimal prime supports of `I`.
pub fn build_sp(primes: &[PrimeSupport], dim: usize) -> Result<HPolyhedron, PolyhedronError> {
    if primes.is_empty() {
        return Err(PolyhedronError::NoFacets);
    }
    for p in primes {
        if p.dim() != dim {
            return Err(PolyhedronError::DimMismatch {
                expected: dim,
                found: p.dim(),
            });
        }
    }
    for (i, a) in primes.iter().enumerate() {
        for (j, b) in primes.iter().enumerate() {
            if i != j && a.is_subset(b) {
                return Err(PolyhedronError::ComparableSupports(i, j));
            }
        }
    }
    Ok(HPolyhedron {
        dim,
        one_facets: primes.to_vec(),
    })
}

impl HPolyhedron {
    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn one_facets(&self) -> &[PrimeSupport] {
        &self.one_facets
    }

    fn check_dim(&self, a: &QVector) -> Result<(), PolyhedronError> {
        if a.dim() == self.dim {
            Ok(())
        } else {
            Err(PolyhedronError::DimMismatch {
                expected: self.dim,
                found: a.dim(),
            })
        }
    }

    fn facet_sum(m: &PrimeSupport, a: &QVector) -> Rational {
        m.members()
            .iter()
            .fold(Rational::zero(), |acc, i| acc + a.coord(i))
    }

    pub fn contains(&self, a: &QVector) -> Result<bool, PolyhedronError> {
        self.check_dim(a)?;
        Ok(a.is_nonnegative()
            && self
                .one_facets
                .iter()
                .all(|m| Self::facet_sum(m, a) >= Rational::one()))
    }

    /// Number of tight zero- and one-facets at `a`, and the rank of their
    /// normal vectors.
    pub fn tight_constraint_count(&self, a: &QVector) -> Result<TightCount, PolyhedronError> {
        if !self.contains(a)? {
            return Err(PolyhedronError::NotContained);
        }
        let mut rows: Vec<Vec<Rational>> = Vec::new();
        let mut zero_facets = 0;
        for i in 1..=self.dim {
            if a.coord(i).is_zero() {
                zero_facets += 1;
                let mut r = vec![Rational::zero(); self.dim];
                r[i - 1] = Rational::one();
                rows.push(r);
            }
        }
        let mut one_facets = 0;
        for m in &self.one_facets {
            if Self::facet_sum(m, a).is_one() {
                one_facets += 1;
                let mut r = vec![Rational::zero(); self.dim];
                for i in m.members().iter() {
                    r[i - 1] = Rational::one();
                }
                rows.push(r);
            }
        }
        Ok(TightCount {
            zero_facets,
            one_facets,
            rank: rank(rows, self.dim),
        })
    }

    /// Whether `a` is a vertex: inside, with tight normals of full rank.
    pub fn is_vertex(&self, a: &QVector) -> Result<bool, PolyhedronError> {
        if !self.contains(a)? {
            return Ok(false);
        }
        Ok(self.tight_constraint_count(a)?.rank == self.dim)
    }

    /// All vertices, sorted lexicographically.
    pub fn enumerate_vertices(&self) -> Vec<QVector> {
        let mut out: Vec<QVector> = double_description(self)
            .into_iter()
            .filter(|r| r.coords[self.dim] > 0)
            .map(|r| {
                let t = r.coords[self.dim];
                QVector::new(
                    r.coords[..self.dim]
                        .iter()
                        .map(|&c| Rational::new(c, t))
                        .collect(),
                )
            })
            .collect();
        out.sort();
        out.dedup();
        out
    }

    /// Vertices with `a_j + a_{n+j} != 0` for every `j ∈ 1..=n`.
    pub fn full_vertices(&self, n: usize) -> Result<Vec<QVector>, PolyhedronError> {
        if self.dim != 2 * n {
            return Err(PolyhedronError::NotPaired { dim: self.dim, n });
        }
        Ok(self
            .enumerate_vertices()
            .into_iter()
            .filter(|v| is_full(v, n))
            .collect())
    }

    /// Least coordinate sum over the vertices.
    pub fn min_coord_sum(&self) -> Rational {
        min_sum(&self.enumerate_vertices())
    }

    /// Largest coordinate sum over the vertices. The polyhedron itself is
    /// unbounded in every coordinate direction, so only vertices count.
    pub fn max_vertex_coord_sum(&self) -> Rational {
        max_sum(&self.enumerate_vertices())
    }
}

pub fn is_full(v: &QVector, n: usize) -> bool {
    (1..=n).all(|j| !(v.coord(j) + v.coord(n + j)).is_zero())
}

/// Least coordinate sum of a nonempty vertex list.
pub fn min_sum(vertices: &[QVector]) -> Rational {
    vertices
        .iter()
        .map(QVector::sum)
        .min()
        .expect("a polyhedron with facets has a vertex")
}

/// Largest coordinate sum of a nonempty vertex list.
pub fn max_sum(vertices: &[QVector]) -> Rational {
    vertices
        .iter()
        .map(QVector::sum)
        .max()
        .expect("a polyhedron with facets has a vertex")
}

fn rank(mut rows: Vec<Vec<Rational>>, cols: usize) -> usize {
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        let pivot_row = rows[r].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i != r && !row[c].is_zero() {
                let f = row[c] / pivot_row[c];
                for (x, p) in row[c..cols].iter_mut().zip(&pivot_row[c..cols]) {
                    *x -= f * p;
                }
            }
        }
        r += 1;
        if r == rows.len() {
            break;
        }
    }
    r
}

/// An extreme ray of the homogenized cone with the set of constraints it
/// makes tight.
struct Ray {
    coords: Vec<i128>,
    zeros: FixedBitSet,
}

fn primitive(mut v: Vec<i128>) -> Vec<i128> {
    let g = v.iter().fold(0i128, |g, &c| g.gcd(&c));
    if g > 1 {
        for c in &mut v {
            *c /= g;
        }
    }
    v
}

/// Extreme rays of `{(a, t) : a >= 0, t >= 0, Σ_M a_i - t >= 0}`.
///
/// Constraint `k < dim + 1` is coordinate `k` being nonnegative (with `t`
/// last); constraint `dim + 1 + f` is one-facet `f`.
fn double_description(p: &HPolyhedron) -> Vec<Ray> {
    let d = p.dim + 1;
    let total = d + p.one_facets.len();
    let mut rays: Vec<Ray> = (0..d)
        .map(|k| {
            let mut coords = vec![0i128; d];
            coords[k] = 1;
            let mut zeros = FixedBitSet::with_capacity(total);
            zeros.insert_range(0..d);
            zeros.set(k, false);
            Ray { coords, zeros }
        })
        .collect();

    // small supports first: they cut the orthant most and keep the
    // intermediate ray sets small
    let mut order: Vec<usize> = (0..p.one_facets.len()).collect();
    order.sort_by(|&a, &b| {
        p.one_facets[a]
            .members()
            .canonical_cmp(&p.one_facets[b].members())
    });

    for &f in &order {
        let members: Vec<usize> = p.one_facets[f].members().iter().collect();
        let eval =
            |r: &Ray| -> i128 { members.iter().map(|&i| r.coords[i - 1]).sum::<i128>() - r.coords[d - 1] };
        let values: Vec<i128> = rays.iter().map(eval).collect();
        let pos: Vec<usize> = (0..rays.len()).filter(|&k| values[k] > 0).collect();
        let neg: Vec<usize> = (0..rays.len()).filter(|&k| values[k] < 0).collect();
        if neg.is_empty() {
            for (k, r) in rays.iter_mut().enumerate() {
                if values[k] == 0 {
                    r.zeros.insert(d + f);
                }
            }
            continue;
        }

        let mut next: Vec<Ray> = Vec::new();
        let mut scratch = FixedBitSet::with_capacity(total);
        for &a in &pos {
            for &b in &neg {
                scratch.clone_from(&rays[a].zeros);
                scratch.intersect_with(&rays[b].zeros);
                // adjacent rays share at least d - 2 independent tight constraints
                if scratch.count_ones(..) + 2 < d {
                    continue;
                }
                let blocked = rays
                    .iter()
                    .enumerate()
                    .any(|(k, r)| k != a && k != b && scratch.is_subset(&r.zeros));
                if blocked {
                    continue;
                }
                let (va, vb) = (values[a], values[b]);
                let coords = rays[a]
                    .coords
                    .iter()
                    .zip(&rays[b].coords)
                    .map(|(&x, &y)| {
                        va.checked_mul(y)
                            .and_then(|u| vb.checked_mul(x).and_then(|w| u.checked_sub(w)))
                            .expect("ray coordinates overflowed 128 bits")
                    })
                    .collect();
                let mut zeros = scratch.clone();
                zeros.insert(d + f);
                next.push(Ray {
                    coords: primitive(coords),
                    zeros,
                });
            }
        }
        for (k, mut r) in rays.into_iter().enumerate() {
            if values[k] == 0 {
                r.zeros.insert(d + f);
                next.push(r);
            } else if values[k] > 0 {
                next.push(r);
            }
        }
        rays = next;
    }
    rays
}
