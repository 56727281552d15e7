//! Monomials, monomial ideals, monomial primes, and symbolic powers of
//! squarefree monomial ideals.
//!
//! Variables are indexed `1..=dim`. For ideals built from a graph on `n`
//! vertices, `dim = 2n`, index `i` is `x_i` and index `n + i` is `y_i`.

use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt::{self, Write as _};

/// Largest ambient dimension (variable sets are stored in a `u128`).
pub const MAX_DIM: usize = 128;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum IdealError {
    #[error("the zero ideal has no generators")]
    ZeroIdeal,
    #[error("ambient dimension mismatch: expected {expected}, found {found}")]
    DimMismatch { expected: usize, found: usize },
    #[error("power must be at least 1")]
    ZeroPower,
    #[error("generating set is not minimal")]
    NotMinimal,
    #[error("ideal is not squarefree")]
    NotSquarefree,
    #[error("at least one prime is required")]
    NoPrimes,
    #[error("prime support must be a nonempty subset of 1..={dim}")]
    BadSupport { dim: usize },
    #[error("ambient dimension {0} exceeds the supported maximum {MAX_DIM}")]
    DimTooLarge(usize),
    #[error("graph has no edges")]
    Edgeless,
    #[error("cannot parse monomial: {0}")]
    Parse(&'static str),
}

/// A set of variable indices `1..=128`, stored as a bitmask.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default, PartialOrd, Ord)]
pub struct VarSet(u128);

impl VarSet {
    pub const EMPTY: VarSet = VarSet(0);

    pub fn singleton(i: usize) -> Self {
        VarSet(1u128 << (i - 1))
    }

    pub fn bits(self) -> u128 {
        self.0
    }

    pub fn from_bits(bits: u128) -> Self {
        VarSet(bits)
    }

    pub fn contains(self, i: usize) -> bool {
        (1..=MAX_DIM).contains(&i) && self.0 >> (i - 1) & 1 == 1
    }

    pub fn insert(&mut self, i: usize) {
        self.0 |= 1u128 << (i - 1);
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn is_subset(self, other: VarSet) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn intersects(self, other: VarSet) -> bool {
        self.0 & other.0 != 0
    }

    pub fn union(self, other: VarSet) -> Self {
        VarSet(self.0 | other.0)
    }

    pub fn iter(self) -> impl Iterator<Item = usize> {
        let mut bits = self.0;
        core::iter::from_fn(move || {
            if bits == 0 {
                return None;
            }
            let i = bits.trailing_zeros() as usize + 1;
            bits &= bits - 1;
            Some(i)
        })
    }

    pub fn max(self) -> Option<usize> {
        (self.0 != 0).then(|| 128 - self.0.leading_zeros() as usize)
    }

    /// Size first, then lexicographic on sorted members.
    pub fn canonical_cmp(&self, other: &VarSet) -> Ordering {
        self.len()
            .cmp(&other.len())
            .then_with(|| self.iter().cmp(other.iter()))
    }
}

impl FromIterator<usize> for VarSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut s = VarSet::EMPTY;
        for i in iter {
            s.insert(i);
        }
        s
    }
}

impl fmt::Debug for VarSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

/// How variable indices are printed and parsed.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum VarNaming {
    /// `x1 .. x_dim`.
    Plain,
    /// `x1 .. xn, y1 .. yn` for `dim = 2n`.
    Paired { n: usize },
}

impl VarNaming {
    pub fn for_dim(dim: usize, paired_n: Option<usize>) -> Self {
        match paired_n {
            Some(n) if 2 * n == dim => VarNaming::Paired { n },
            _ => VarNaming::Plain,
        }
    }

    fn name(self, i: usize, out: &mut String) {
        match self {
            VarNaming::Paired { n } if i > n => {
                let _ = write!(out, "y{}", i - n);
            }
            _ => {
                let _ = write!(out, "x{i}");
            }
        }
    }
}

/// `x^a` for an exponent vector `a`; the ambient dimension is `a.len()`.
///
/// Ordered by total degree, then by the lex monomial order with
/// `x_1 > x_2 > ...` (so `x1*x2` precedes `x1*x3`).
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Monomial {
    exps: Vec<u32>,
}

impl Monomial {
    pub fn new(exps: Vec<u32>) -> Self {
        Monomial { exps }
    }

    pub fn one(dim: usize) -> Self {
        Monomial { exps: vec![0; dim] }
    }

    /// The squarefree monomial `∏_{i ∈ s} x_i`.
    pub fn from_support(dim: usize, s: VarSet) -> Self {
        let mut m = Monomial::one(dim);
        for i in s.iter() {
            m.exps[i - 1] = 1;
        }
        m
    }

    pub fn dim(&self) -> usize {
        self.exps.len()
    }

    pub fn exponents(&self) -> &[u32] {
        &self.exps
    }

    pub fn into_exponents(self) -> Vec<u32> {
        self.exps
    }

    /// Exponent of variable `i` (1-based).
    pub fn exp(&self, i: usize) -> u32 {
        self.exps[i - 1]
    }

    pub fn degree(&self) -> u64 {
        self.exps.iter().map(|&e| e as u64).sum()
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.exps.iter().zip(&other.exps).all(|(a, b)| a <= b)
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        Monomial {
            exps: self
                .exps
                .iter()
                .zip(&other.exps)
                .map(|(&a, &b)| a.max(b))
                .collect(),
        }
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial {
            exps: self.exps.iter().zip(&other.exps).map(|(&a, &b)| a + b).collect(),
        }
    }

    pub fn is_squarefree(&self) -> bool {
        self.exps.iter().all(|&e| e <= 1)
    }

    pub fn support(&self) -> VarSet {
        self.exps
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .map(|(i, _)| i + 1)
            .collect()
    }

    /// `x1^2*y3` style text; the unit monomial prints as `1`.
    pub fn to_text(&self, naming: VarNaming) -> String {
        let mut out = String::new();
        for (k, &e) in self.exps.iter().enumerate() {
            if e == 0 {
                continue;
            }
            if !out.is_empty() {
                out.push('*');
            }
            naming.name(k + 1, &mut out);
            if e > 1 {
                let _ = write!(out, "^{e}");
            }
        }
        if out.is_empty() {
            out.push('1');
        }
        out
    }

    /// Inverse of [`Monomial::to_text`]. Repeated factors multiply.
    pub fn parse_text(text: &str, dim: usize, naming: VarNaming) -> Result<Monomial, IdealError> {
        let mut m = Monomial::one(dim);
        let text = text.trim();
        if text == "1" {
            return Ok(m);
        }
        for factor in text.split('*') {
            let factor = factor.trim();
            let (var, exp) = match factor.split_once('^') {
                Some((v, e)) => (
                    v,
                    e.trim()
                        .parse::<u32>()
                        .map_err(|_| IdealError::Parse("bad exponent"))?,
                ),
                None => (factor, 1),
            };
            let (letter, index) = var.split_at(var.len().min(1));
            let index: usize = index
                .parse()
                .map_err(|_| IdealError::Parse("bad variable index"))?;
            let i = match (letter, naming) {
                ("x", VarNaming::Plain) => index,
                ("x", VarNaming::Paired { n }) if index <= n => index,
                ("y", VarNaming::Paired { n }) if index <= n => n + index,
                _ => return Err(IdealError::Parse("unknown variable")),
            };
            if i == 0 || i > dim {
                return Err(IdealError::Parse("variable index out of range"));
            }
            m.exps[i - 1] += exp;
        }
        Ok(m)
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| other.exps.cmp(&self.exps))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text(VarNaming::Plain))
    }
}

/// A nonzero monomial ideal given by generators.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct MonomialIdeal {
    dim: usize,
    gens: Vec<Monomial>,
    minimal: bool,
}

fn check_dims<'a>(dim: usize, ms: impl IntoIterator<Item = &'a Monomial>) -> Result<(), IdealError> {
    for m in ms {
        if m.dim() != dim {
            return Err(IdealError::DimMismatch {
                expected: dim,
                found: m.dim(),
            });
        }
    }
    Ok(())
}

/// Minimal generators of the ideal generated by `gens`: deduplicated,
/// divisibility-free, sorted by degree and then lex (`x_1 > x_2 > ...`).
pub fn minimalize(gens: Vec<Monomial>) -> Result<MonomialIdeal, IdealError> {
    let dim = gens.first().ok_or(IdealError::ZeroIdeal)?.dim();
    check_dims(dim, &gens)?;
    Ok(MonomialIdeal {
        dim,
        gens: minimal_antichain(gens),
        minimal: true,
    })
}

fn minimal_antichain(mut gens: Vec<Monomial>) -> Vec<Monomial> {
    gens.sort();
    gens.dedup();
    let mut kept: Vec<Monomial> = Vec::with_capacity(gens.len());
    for g in gens {
        // divisors have degree <= deg g, so they are already in `kept`
        if !kept.iter().any(|k| k.divides(&g)) {
            kept.push(g);
        }
    }
    kept
}

impl MonomialIdeal {
    /// Wraps `gens` as given, without minimalizing. The ideal is flagged
    /// minimal only if the generators happen to form an antichain.
    pub fn from_generators(dim: usize, gens: Vec<Monomial>) -> Result<Self, IdealError> {
        if gens.is_empty() {
            return Err(IdealError::ZeroIdeal);
        }
        check_dims(dim, &gens)?;
        let minimal = gens
            .iter()
            .enumerate()
            .all(|(i, a)| gens.iter().enumerate().all(|(j, b)| i == j || !a.divides(b)));
        Ok(MonomialIdeal { dim, gens, minimal })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn gens(&self) -> &[Monomial] {
        &self.gens
    }

    pub fn is_minimal(&self) -> bool {
        self.minimal
    }

    pub fn is_squarefree(&self) -> bool {
        self.gens.iter().all(Monomial::is_squarefree)
    }

    /// Whether `m` lies in the ideal.
    pub fn contains(&self, m: &Monomial) -> bool {
        self.gens.iter().any(|g| g.divides(m))
    }

    /// Whether every generator of `self` lies in `other`.
    pub fn is_subideal_of(&self, other: &MonomialIdeal) -> bool {
        self.gens.iter().all(|g| other.contains(g))
    }

    /// Initial degree `α(I)`: the least generator degree.
    pub fn alpha(&self) -> Result<u64, IdealError> {
        self.gens
            .iter()
            .map(Monomial::degree)
            .min()
            .ok_or(IdealError::ZeroIdeal)
    }

    /// `d(I)`: the largest degree of a minimal generator.
    pub fn max_gen_degree(&self) -> Result<u64, IdealError> {
        if !self.minimal {
            return Err(IdealError::NotMinimal);
        }
        self.gens
            .iter()
            .map(Monomial::degree)
            .max()
            .ok_or(IdealError::ZeroIdeal)
    }

    pub fn intersect(&self, other: &MonomialIdeal) -> Result<MonomialIdeal, IdealError> {
        check_dims(self.dim, &other.gens)?;
        let lcms = self
            .gens
            .iter()
            .flat_map(|a| other.gens.iter().map(move |b| a.lcm(b)))
            .collect();
        minimalize(lcms)
    }

    pub fn product(&self, other: &MonomialIdeal) -> Result<MonomialIdeal, IdealError> {
        check_dims(self.dim, &other.gens)?;
        let prods = self
            .gens
            .iter()
            .flat_map(|a| other.gens.iter().map(move |b| a.mul(b)))
            .collect();
        minimalize(prods)
    }

    /// `I^m`, minimalized.
    pub fn ordinary_power(&self, m: u32) -> Result<MonomialIdeal, IdealError> {
        if m == 0 {
            return Err(IdealError::ZeroPower);
        }
        let base = minimalize(self.gens.clone())?;
        let mut acc = base.clone();
        for _ in 1..m {
            acc = acc.product(&base)?;
        }
        Ok(acc)
    }
}

/// The support `M` of the monomial prime `P_M = (x_i | i ∈ M)`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct PrimeSupport {
    dim: usize,
    members: VarSet,
}

impl PrimeSupport {
    pub fn new(dim: usize, members: VarSet) -> Result<Self, IdealError> {
        if dim > MAX_DIM {
            return Err(IdealError::DimTooLarge(dim));
        }
        if members.is_empty() || members.max().is_some_and(|m| m > dim) {
            return Err(IdealError::BadSupport { dim });
        }
        Ok(PrimeSupport { dim, members })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn members(&self) -> VarSet {
        self.members
    }

    pub fn contains(&self, i: usize) -> bool {
        self.members.contains(i)
    }

    pub fn is_subset(&self, other: &PrimeSupport) -> bool {
        self.members.is_subset(other.members)
    }

    /// `Σ_{i ∈ M} z_i`.
    pub fn weight(&self, z: &Monomial) -> u64 {
        self.members.iter().map(|i| z.exp(i) as u64).sum()
    }

    /// Generators of `P_M^m`: every degree-`m` monomial supported on `M`.
    pub fn power(&self, m: u32) -> MonomialIdeal {
        let vars: Vec<usize> = self.members.iter().collect();
        let mut gens = Vec::new();
        let mut exps = vec![0u32; self.dim];
        fn fill(vars: &[usize], left: u32, exps: &mut Vec<u32>, out: &mut Vec<Monomial>) {
            match vars {
                [] => {}
                [last] => {
                    exps[last - 1] = left;
                    out.push(Monomial::new(exps.clone()));
                    exps[last - 1] = 0;
                }
                [first, rest @ ..] => {
                    for e in (0..=left).rev() {
                        exps[first - 1] = e;
                        fill(rest, left - e, exps, out);
                    }
                    exps[first - 1] = 0;
                }
            }
        }
        fill(&vars, m, &mut exps, &mut gens);
        minimalize(gens).expect("support is nonempty")
    }
}

impl fmt::Debug for PrimeSupport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "P{:?}", self.members)
    }
}

fn check_primes(primes: &[PrimeSupport], dim: usize) -> Result<(), IdealError> {
    for p in primes {
        if p.dim != dim {
            return Err(IdealError::DimMismatch {
                expected: dim,
                found: p.dim,
            });
        }
    }
    Ok(())
}

/// Whether `z ∈ ⋂_M P_M^m`, i.e. `Σ_{i ∈ M} z_i >= m` for every prime.
pub fn symbolic_membership(primes: &[PrimeSupport], m: u32, z: &Monomial) -> Result<bool, IdealError> {
    if m == 0 {
        return Err(IdealError::ZeroPower);
    }
    check_primes(primes, z.dim())?;
    Ok(primes.iter().all(|p| p.weight(z) >= m as u64))
}

/// Minimal generators of `I^(m) = ⋂_M P_M^m`, by iterated intersection of
/// the prime powers.
pub fn symbolic_power(primes: &[PrimeSupport], m: u32) -> Result<MonomialIdeal, IdealError> {
    if m == 0 {
        return Err(IdealError::ZeroPower);
    }
    let first = primes.first().ok_or(IdealError::NoPrimes)?;
    check_primes(primes, first.dim)?;
    // small supports first keeps the intermediate generating sets small
    let mut order: Vec<&PrimeSupport> = primes.iter().collect();
    order.sort_by(|a, b| a.members.canonical_cmp(&b.members));
    let mut acc = order[0].power(m);
    for p in &order[1..] {
        // generators already in P^m survive unchanged; only the rest
        // need lcms with the power's generators
        let (inside, outside): (Vec<Monomial>, Vec<Monomial>) =
            acc.gens.into_iter().partition(|g| p.weight(g) >= m as u64);
        let mut gens = inside;
        if !outside.is_empty() {
            let power = p.power(m);
            for g in &outside {
                gens.extend(power.gens.iter().map(|h| g.lcm(h)));
            }
        }
        acc = minimalize(gens)?;
    }
    Ok(acc)
}

/// Whether `z` is a minimal generator of `I^(q)`: `z` is in it and no
/// single-coordinate decrement is.
pub fn is_minimal_generator(primes: &[PrimeSupport], q: u32, z: &Monomial) -> Result<bool, IdealError> {
    if !symbolic_membership(primes, q, z)? {
        return Ok(false);
    }
    let mut w = z.clone();
    for i in 0..w.exps.len() {
        if w.exps[i] == 0 {
            continue;
        }
        w.exps[i] -= 1;
        let inside = primes.iter().all(|p| p.weight(&w) >= q as u64);
        w.exps[i] += 1;
        if inside {
            return Ok(false);
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn mono(dim: usize, text: &str) -> Monomial {
        Monomial::parse_text(text, dim, VarNaming::Plain).unwrap()
    }

    fn texts(i: &MonomialIdeal) -> Vec<String> {
        i.gens().iter().map(|g| g.to_text(VarNaming::Plain)).collect()
    }

    fn prime(dim: usize, members: &[usize]) -> PrimeSupport {
        PrimeSupport::new(dim, members.iter().copied().collect()).unwrap()
    }

    /// Minimal primes of (x1x2x3, x1x2x4, x3x4).
    fn example_primes() -> Vec<PrimeSupport> {
        [[1, 3], [1, 4], [2, 3], [2, 4], [3, 4]]
            .iter()
            .map(|m| prime(4, m))
            .collect()
    }

    #[test]
    fn minimalize_examples() {
        let i = minimalize(vec![mono(3, "x1*x2"), mono(3, "x1*x2*x3")]).unwrap();
        assert_eq!(texts(&i), ["x1*x2"]);
        let i = minimalize(vec![mono(2, "x1"), mono(2, "x2"), mono(2, "x1")]).unwrap();
        assert_eq!(texts(&i), ["x1", "x2"]);
        let i = minimalize(vec![
            mono(4, "x1*x2*x3"),
            mono(4, "x1*x2*x4"),
            mono(4, "x3*x4"),
            mono(4, "x1*x2*x3*x4"),
        ])
        .unwrap();
        assert_eq!(texts(&i), ["x3*x4", "x1*x2*x3", "x1*x2*x4"]);
        assert_eq!(minimalize(vec![]), Err(IdealError::ZeroIdeal));
        assert!(matches!(
            minimalize(vec![mono(2, "x1"), mono(3, "x1")]),
            Err(IdealError::DimMismatch { .. })
        ));
    }

    #[test]
    fn text_round_trip() {
        let n = 3;
        let naming = VarNaming::Paired { n };
        let m = Monomial::parse_text("x1^2*y3", 6, naming).unwrap();
        assert_eq!(m.exponents(), &[2, 0, 0, 0, 0, 1]);
        assert_eq!(m.to_text(naming), "x1^2*y3");
        assert_eq!(Monomial::one(4).to_text(naming), "1");
        assert!(Monomial::parse_text("y4", 6, naming).is_err());
        assert!(Monomial::parse_text("z1", 6, naming).is_err());
        assert!(Monomial::parse_text("x7", 6, VarNaming::Plain).is_err());
        assert!(Monomial::parse_text("x1^a", 6, VarNaming::Plain).is_err());
    }

    #[test]
    fn degrees() {
        let i = minimalize(vec![mono(3, "x1*x3*x2")]).unwrap();
        assert_eq!(i.alpha(), Ok(3));
        let raw = MonomialIdeal::from_generators(2, vec![mono(2, "x1"), mono(2, "x1*x2")]).unwrap();
        assert!(!raw.is_minimal());
        assert_eq!(raw.max_gen_degree(), Err(IdealError::NotMinimal));
        assert_eq!(raw.alpha(), Ok(1));
        assert_eq!(
            MonomialIdeal::from_generators(2, vec![]),
            Err(IdealError::ZeroIdeal)
        );
    }

    #[test]
    fn membership_examples() {
        let primes = example_primes();
        assert_eq!(symbolic_membership(&primes, 2, &mono(4, "x1*x2*x3*x4")), Ok(true));
        assert_eq!(symbolic_membership(&primes, 2, &mono(4, "x3*x4")), Ok(false));
        for g in ["x1*x2*x3", "x1*x2*x4", "x3*x4"] {
            assert_eq!(symbolic_membership(&primes, 1, &mono(4, g)), Ok(true));
        }
        assert_eq!(
            symbolic_membership(&primes, 0, &mono(4, "x1")),
            Err(IdealError::ZeroPower)
        );
    }

    #[test]
    fn symbolic_power_examples() {
        let primes = example_primes();
        let i2 = symbolic_power(&primes, 2).unwrap();
        let mut want = [
            mono(4, "x1^2*x2^2*x3^2"),
            mono(4, "x1^2*x2^2*x4^2"),
            mono(4, "x1*x2*x3*x4"),
            mono(4, "x3^2*x4^2"),
        ];
        want.sort();
        assert_eq!(i2.gens(), &want[..]);

        let i1 = symbolic_power(&primes, 1).unwrap();
        assert_eq!(texts(&i1), ["x3*x4", "x1*x2*x3", "x1*x2*x4"]);

        // edge ideal of the triangle, cover primes {1,2},{1,3},{2,3}
        let tri = [prime(3, &[1, 2]), prime(3, &[1, 3]), prime(3, &[2, 3])];
        let s2 = symbolic_power(&tri, 2).unwrap();
        assert_eq!(texts(&s2), ["x1*x2*x3", "x1^2*x2^2", "x1^2*x3^2", "x2^2*x3^2"]);

        assert_eq!(symbolic_power(&[], 2), Err(IdealError::NoPrimes));
        assert_eq!(symbolic_power(&primes, 0), Err(IdealError::ZeroPower));
    }

    #[test]
    fn ordinary_powers() {
        let i = minimalize(vec![mono(2, "x1*x2")]).unwrap();
        assert_eq!(texts(&i.ordinary_power(2).unwrap()), ["x1^2*x2^2"]);
        let tri = minimalize(vec![mono(3, "x1*x2"), mono(3, "x1*x3"), mono(3, "x2*x3")]).unwrap();
        assert_eq!(tri.ordinary_power(2).unwrap().gens().len(), 6);
        assert_eq!(tri.ordinary_power(1).unwrap(), tri);
        assert_eq!(tri.ordinary_power(0), Err(IdealError::ZeroPower));
    }

    #[test]
    fn minimal_generator_examples() {
        let primes = example_primes();
        assert_eq!(
            is_minimal_generator(&primes, 2, &mono(4, "x1*x2*x3*x4")),
            Ok(true)
        );
        assert_eq!(
            is_minimal_generator(&primes, 2, &mono(4, "x1^2*x2^2*x3^2*x4")),
            Ok(false)
        );
        for g in ["x1*x2*x3", "x1*x2*x4", "x3*x4"] {
            assert_eq!(is_minimal_generator(&primes, 1, &mono(4, g)), Ok(true));
        }
        assert_eq!(
            is_minimal_generator(&primes, 0, &mono(4, "x1")),
            Err(IdealError::ZeroPower)
        );
    }

    #[test]
    fn prime_support_validation() {
        assert!(PrimeSupport::new(3, VarSet::EMPTY).is_err());
        assert!(PrimeSupport::new(3, [4].into_iter().collect()).is_err());
        assert!(PrimeSupport::new(200, [1].into_iter().collect()).is_err());
        let p = prime(3, &[1, 3]);
        assert_eq!(p.power(2).gens().len(), 3);
    }
}
