//! Squarefree monomial ideals attached to labeled graphs and the exact
//! polyhedral machinery used to read off their asymptotic invariants.
//!
//! Three ideals are built from a graph `G` on `1..=n`, all living in the
//! `2n` variables `x_1..x_n, y_1..y_n` (variable `x_i` has index `i`, `y_i`
//! has index `n + i`):
//!
//! * the edge ideal `I_G`,
//! * the generic initial ideal `gin(J_G)` (induced-path generators),
//! * the lexicographic initial ideal `in(J_G)` (admissible-path generators).
//!
//! Their minimal primes are enumerated in closed form ([`primes`]), the
//! symbolic polyhedron is built in facet form and its vertices enumerated
//! exactly ([`polyhedron`]), and the Waldschmidt constant and asymptotic
//! regularity are the minimum and maximum vertex coordinate sums
//! ([`invariants`]).
//!
//! The crate is `no_std` and only needs `alloc`.

#![no_std]

extern crate alloc;
#[cfg(feature = "std")]
extern crate std;

pub mod graph;
pub mod ideal;
pub mod invariants;
pub mod lp;
pub mod monomial;
pub mod polyhedron;
pub mod primes;
pub mod rational;

pub use graph::{Graph, GraphError, Vertex, VertexSet};
pub use ideal::{edge_ideal, gin_ideal, inid_ideal, IdealKind};
pub use invariants::{InvariantError, InvariantReport, Outcome, SymbolicPolyhedron, TheoremId};
pub use monomial::{IdealError, Monomial, MonomialIdeal, PrimeSupport, VarSet};
pub use polyhedron::{HPolyhedron, PolyhedronError};
pub use primes::{LabeledPrime, Provenance};
pub use rational::{QVector, Rational};
