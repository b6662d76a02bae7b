//! Monomials, monomial ideals and Stanley–Reisner complexes over the
//! bigraded ring `K[x1..xm, y1..yn]`.
//!
//! Variables are numbered densely: `x1..xm` are `0..m`, `y1..yn` are
//! `m..m+n`. Every variable set is a [`VarSet`] bitset, so squarefree ideal
//! algebra is plain set algebra.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Largest supported number of variables.
pub const MAX_VARS: usize = 32;

/// A set of variables stored as a bitset.
#[derive(Clone, Copy, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct VarSet(pub u32);

impl VarSet {
    pub const EMPTY: VarSet = VarSet(0);

    /// The first `count` variables.
    pub fn first(count: usize) -> Self {
        assert!(count <= MAX_VARS);
        if count == MAX_VARS {
            VarSet(u32::MAX)
        } else {
            VarSet((1u32 << count) - 1)
        }
    }

    pub fn singleton(v: usize) -> Self {
        VarSet(1 << v)
    }

    pub fn from_vars<I: IntoIterator<Item = usize>>(vars: I) -> Self {
        vars.into_iter().fold(VarSet::EMPTY, |acc, v| acc | VarSet::singleton(v))
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn contains(self, v: usize) -> bool {
        self.0 >> v & 1 == 1
    }

    pub fn is_subset(self, other: VarSet) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn intersects(self, other: VarSet) -> bool {
        self.0 & other.0 != 0
    }

    pub fn insert(&mut self, v: usize) {
        self.0 |= 1 << v;
    }

    /// Iterates variables in increasing index order.
    pub fn iter(self) -> impl Iterator<Item = usize> {
        let mut bits = self.0;
        std::iter::from_fn(move || {
            if bits == 0 {
                return None;
            }
            let v = bits.trailing_zeros() as usize;
            bits &= bits - 1;
            Some(v)
        })
    }

    /// Iterates all subsets of `self`, including the empty set and `self`,
    /// in increasing numeric order.
    pub fn subsets(self) -> impl Iterator<Item = VarSet> {
        let full = self.0;
        let mut next = Some(0u32);
        std::iter::from_fn(move || {
            let cur = next?;
            next = if cur == full { None } else { Some((cur.wrapping_sub(full)) & full) };
            Some(VarSet(cur))
        })
    }
}

impl std::ops::BitOr for VarSet {
    type Output = VarSet;
    fn bitor(self, rhs: VarSet) -> VarSet {
        VarSet(self.0 | rhs.0)
    }
}

impl std::ops::BitAnd for VarSet {
    type Output = VarSet;
    fn bitand(self, rhs: VarSet) -> VarSet {
        VarSet(self.0 & rhs.0)
    }
}

impl std::ops::Sub for VarSet {
    type Output = VarSet;
    fn sub(self, rhs: VarSet) -> VarSet {
        VarSet(self.0 & !rhs.0)
    }
}

impl fmt::Debug for VarSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

/// Which block a variable belongs to.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Block {
    X,
    Y,
}

/// The ambient ring: `m` variables of degree (1,0) and `n` of degree (0,1).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct RingSpec {
    pub m: usize,
    pub n: usize,
}

impl RingSpec {
    pub fn new(m: usize, n: usize) -> Result<Self> {
        if m + n == 0 {
            return Err(Error::InvalidRing("the ring needs at least one variable".into()));
        }
        if m + n > MAX_VARS {
            return Err(Error::InvalidRing(format!(
                "{} variables requested, at most {MAX_VARS} are supported",
                m + n
            )));
        }
        Ok(RingSpec { m, n })
    }

    pub fn num_vars(&self) -> usize {
        self.m + self.n
    }

    /// The x-variables, generating the ideal `P`.
    pub fn p(&self) -> VarSet {
        VarSet::first(self.m)
    }

    /// The y-variables, generating the ideal `Q`.
    pub fn q(&self) -> VarSet {
        self.all() - self.p()
    }

    /// All variables, generating the maximal ideal `P + Q`.
    pub fn all(&self) -> VarSet {
        VarSet::first(self.num_vars())
    }

    pub fn block(&self, v: usize) -> Block {
        if v < self.m {
            Block::X
        } else {
            Block::Y
        }
    }

    pub fn var_name(&self, v: usize) -> String {
        match self.block(v) {
            Block::X => format!("x{}", v + 1),
            Block::Y => format!("y{}", v - self.m + 1),
        }
    }

    /// Index of `x{i}` (1-based).
    pub fn x(&self, i: usize) -> usize {
        assert!(i >= 1 && i <= self.m, "x{i} outside ring");
        i - 1
    }

    /// Index of `y{j}` (1-based).
    pub fn y(&self, j: usize) -> usize {
        assert!(j >= 1 && j <= self.n, "y{j} outside ring");
        self.m + j - 1
    }

    pub fn fmt_vars(&self, set: VarSet) -> String {
        set.iter().map(|v| self.var_name(v)).collect::<Vec<_>>().join(",")
    }

    pub fn fmt_monomial(&self, set: VarSet) -> String {
        if set.is_empty() {
            "1".to_string()
        } else {
            set.iter().map(|v| self.var_name(v)).collect::<Vec<_>>().join("*")
        }
    }

    fn check(&self, set: VarSet) -> Result<()> {
        if set.is_subset(self.all()) {
            Ok(())
        } else {
            Err(Error::InvalidRing(format!("variable set {set:?} outside a ring with {} variables", self.num_vars())))
        }
    }
}

/// The torsion variable set used for local cohomology.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Torsion {
    /// `P = (x1..xm)`
    P,
    /// `Q = (y1..yn)`
    Q,
    /// the maximal ideal `P + Q`
    #[serde(rename = "m")]
    Max,
}

impl Torsion {
    pub fn vars(self, ring: &RingSpec) -> VarSet {
        match self {
            Torsion::P => ring.p(),
            Torsion::Q => ring.q(),
            Torsion::Max => ring.all(),
        }
    }

    pub fn label(self) -> &'static str {
        match self {
            Torsion::P => "P",
            Torsion::Q => "Q",
            Torsion::Max => "m",
        }
    }
}

impl std::str::FromStr for Torsion {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "P" | "p" => Ok(Torsion::P),
            "Q" | "q" => Ok(Torsion::Q),
            "m" | "M" | "max" => Ok(Torsion::Max),
            other => Err(Error::InvalidRing(format!("unknown torsion set '{other}', expected P, Q or m"))),
        }
    }
}

/// A prime generated by a set of variables.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct MonomialPrime(pub VarSet);

impl MonomialPrime {
    pub fn vars(self) -> VarSet {
        self.0
    }

    pub fn to_ideal(self, ring: RingSpec) -> SquarefreeIdeal {
        SquarefreeIdeal::new(ring, self.0.iter().map(VarSet::singleton)).expect("prime variables lie in the ring")
    }

    /// `cd(T, S/p) = |T| - |p ∩ T|`.
    pub fn cd(self, torsion: VarSet) -> usize {
        torsion.len() - (self.0 & torsion).len()
    }
}

/// Reduces a family of supports to its inclusion-minimal members, sorted.
pub(crate) fn minimalize(mut sets: Vec<VarSet>) -> Vec<VarSet> {
    sets.sort_by_key(|s| (s.len(), s.0));
    sets.dedup();
    let mut out: Vec<VarSet> = Vec::with_capacity(sets.len());
    for s in sets {
        if !out.iter().any(|g| g.is_subset(s)) {
            out.push(s);
        }
    }
    out.sort();
    out
}

/// A squarefree monomial ideal, stored as the antichain of generator supports.
///
/// The zero ideal has no generators; the unit ideal is the single generator
/// with empty support.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SquarefreeIdeal {
    ring: RingSpec,
    gens: Vec<VarSet>,
}

impl SquarefreeIdeal {
    pub fn new<I: IntoIterator<Item = VarSet>>(ring: RingSpec, gens: I) -> Result<Self> {
        let gens: Vec<VarSet> = gens.into_iter().collect();
        for g in &gens {
            ring.check(*g)?;
        }
        Ok(SquarefreeIdeal { ring, gens: minimalize(gens) })
    }

    pub fn zero(ring: RingSpec) -> Self {
        SquarefreeIdeal { ring, gens: Vec::new() }
    }

    pub fn unit(ring: RingSpec) -> Self {
        SquarefreeIdeal { ring, gens: vec![VarSet::EMPTY] }
    }

    pub fn ring(&self) -> RingSpec {
        self.ring
    }

    pub fn generators(&self) -> &[VarSet] {
        &self.gens
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn is_unit(&self) -> bool {
        self.gens.first().is_some_and(|g| g.is_empty())
    }

    /// Whether the squarefree monomial with the given support lies in the ideal.
    pub fn contains(&self, monomial: VarSet) -> bool {
        self.gens.iter().any(|g| g.is_subset(monomial))
    }

    pub fn is_subideal_of(&self, other: &SquarefreeIdeal) -> bool {
        self.gens.iter().all(|g| other.contains(*g))
    }

    fn proper_nonzero(&self) -> Result<()> {
        if self.is_unit() {
            Err(Error::NoProperDecomposition("the unit ideal"))
        } else if self.is_zero() {
            Err(Error::NoProperDecomposition("the zero ideal"))
        } else {
            Ok(())
        }
    }

    fn same_ring(&self, other: &SquarefreeIdeal) -> Result<()> {
        if self.ring == other.ring {
            Ok(())
        } else {
            Err(Error::RingMismatch)
        }
    }

    /// Minimal primes, i.e. the minimal vertex covers of the generator
    /// hypergraph, sorted by their bitsets.
    pub fn minimal_primes(&self) -> Result<Vec<MonomialPrime>> {
        self.proper_nonzero()?;
        Ok(minimal_transversals(&self.gens).into_iter().map(MonomialPrime).collect())
    }

    /// Generators of `self + other`.
    pub fn sum(&self, other: &SquarefreeIdeal) -> Result<SquarefreeIdeal> {
        self.same_ring(other)?;
        let gens = self.gens.iter().chain(&other.gens).copied().collect();
        Ok(SquarefreeIdeal { ring: self.ring, gens: minimalize(gens) })
    }

    /// Generators of `self ∩ other`: pairwise lcms, reduced.
    pub fn intersect_with(&self, other: &SquarefreeIdeal) -> Result<SquarefreeIdeal> {
        self.same_ring(other)?;
        let mut gens = Vec::with_capacity(self.gens.len() * other.gens.len());
        for a in &self.gens {
            for b in &other.gens {
                gens.push(*a | *b);
            }
        }
        Ok(SquarefreeIdeal { ring: self.ring, gens: minimalize(gens) })
    }

    /// Facets of the Stanley–Reisner complex: maximal variable sets
    /// containing no generator support.
    pub fn complex_facets(&self) -> Result<Vec<VarSet>> {
        if self.is_unit() {
            return Err(Error::NoProperDecomposition("the unit ideal"));
        }
        if self.is_zero() {
            return Ok(vec![self.ring.all()]);
        }
        let all = self.ring.all();
        let mut facets: Vec<VarSet> = minimal_transversals(&self.gens).into_iter().map(|c| all - c).collect();
        facets.sort();
        Ok(facets)
    }

    /// Krull dimension of `S/I`: the largest facet size.
    pub fn dim_of_quotient(&self) -> Result<usize> {
        Ok(self.complex_facets()?.into_iter().map(VarSet::len).max().unwrap_or(0))
    }

    pub fn to_general(&self) -> GeneralMonomialIdeal {
        let n = self.ring.num_vars();
        let gens = self
            .gens
            .iter()
            .map(|g| (0..n).map(|v| u32::from(g.contains(v))).collect())
            .collect();
        GeneralMonomialIdeal { ring: self.ring, gens }
    }
}

impl fmt::Debug for SquarefreeIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for SquarefreeIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let gens: Vec<String> = self.gens.iter().map(|g| self.ring.fmt_monomial(*g)).collect();
        write!(f, "({})", gens.join(", "))
    }
}

/// Intersection of a list of squarefree ideals. The empty list gives the
/// unit ideal.
pub fn intersect(ring: RingSpec, ideals: &[SquarefreeIdeal]) -> Result<SquarefreeIdeal> {
    ideals.iter().try_fold(SquarefreeIdeal::unit(ring), |acc, next| acc.intersect_with(next))
}

/// Intersection of the given primes.
pub fn intersect_primes(ring: RingSpec, primes: &[MonomialPrime]) -> SquarefreeIdeal {
    let ideals: Vec<SquarefreeIdeal> = primes.iter().map(|p| p.to_ideal(ring)).collect();
    intersect(ring, &ideals).expect("primes share the ring")
}

/// Minimal transversals (hitting sets) of a hypergraph, by incremental
/// extension over the edges with minimality pruning after every step.
fn minimal_transversals(edges: &[VarSet]) -> Vec<VarSet> {
    let mut edges = edges.to_vec();
    // short edges first keep the intermediate families small
    edges.sort_by_key(|e| (e.len(), e.0));
    let mut current = vec![VarSet::EMPTY];
    for edge in edges {
        let mut next = Vec::with_capacity(current.len() * 2);
        for t in &current {
            if t.intersects(edge) {
                next.push(*t);
            } else {
                for v in edge.iter() {
                    next.push(*t | VarSet::singleton(v));
                }
            }
        }
        current = minimalize(next);
    }
    current
}

/// A monomial ideal given by exponent vectors; the generators form an
/// antichain under componentwise order.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct GeneralMonomialIdeal {
    ring: RingSpec,
    gens: Vec<Vec<u32>>,
}

fn divides(a: &[u32], b: &[u32]) -> bool {
    a.iter().zip(b).all(|(x, y)| x <= y)
}

impl GeneralMonomialIdeal {
    pub fn new<I: IntoIterator<Item = Vec<u32>>>(ring: RingSpec, gens: I) -> Result<Self> {
        let n = ring.num_vars();
        let mut gens: Vec<Vec<u32>> = gens.into_iter().collect();
        if let Some(bad) = gens.iter().find(|g| g.len() != n) {
            return Err(Error::InvalidRing(format!(
                "exponent vector of length {} in a ring with {n} variables",
                bad.len()
            )));
        }
        gens.sort_by_key(|g| (g.iter().sum::<u32>(), g.clone()));
        gens.dedup();
        let mut minimal: Vec<Vec<u32>> = Vec::with_capacity(gens.len());
        for g in gens {
            if !minimal.iter().any(|h| divides(h, &g)) {
                minimal.push(g);
            }
        }
        minimal.sort();
        Ok(GeneralMonomialIdeal { ring, gens: minimal })
    }

    pub fn ring(&self) -> RingSpec {
        self.ring
    }

    pub fn generators(&self) -> &[Vec<u32>] {
        &self.gens
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn is_unit(&self) -> bool {
        self.gens.first().is_some_and(|g| g.iter().all(|&e| e == 0))
    }

    pub fn contains(&self, exponents: &[u32]) -> bool {
        self.gens.iter().any(|g| divides(g, exponents))
    }

    pub fn is_subideal_of(&self, other: &GeneralMonomialIdeal) -> bool {
        self.gens.iter().all(|g| other.contains(g))
    }

    pub fn is_squarefree(&self) -> bool {
        self.gens.iter().all(|g| g.iter().all(|&e| e <= 1))
    }

    /// The squarefree form, if every exponent is at most one.
    pub fn to_squarefree(&self) -> Option<SquarefreeIdeal> {
        if !self.is_squarefree() {
            return None;
        }
        let gens = self
            .gens
            .iter()
            .map(|g| VarSet::from_vars(g.iter().enumerate().filter(|(_, &e)| e > 0).map(|(v, _)| v)));
        Some(SquarefreeIdeal::new(self.ring, gens).expect("same ring"))
    }

    /// Largest exponent appearing in any generator.
    pub fn max_exponent(&self) -> u32 {
        self.gens.iter().flatten().copied().max().unwrap_or(0)
    }
}

impl fmt::Debug for GeneralMonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for GeneralMonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let gens: Vec<String> = self
            .gens
            .iter()
            .map(|g| {
                let parts: Vec<String> = g
                    .iter()
                    .enumerate()
                    .filter(|(_, &e)| e > 0)
                    .map(|(v, &e)| {
                        let name = self.ring.var_name(v);
                        if e == 1 {
                            name
                        } else {
                            format!("{name}^{e}")
                        }
                    })
                    .collect();
                if parts.is_empty() {
                    "1".into()
                } else {
                    parts.join("*")
                }
            })
            .collect();
        write!(f, "({})", gens.join(", "))
    }
}

/// A monomial ideal in either representation.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum MonomialIdeal {
    Squarefree(SquarefreeIdeal),
    General(GeneralMonomialIdeal),
}

impl MonomialIdeal {
    pub fn ring(&self) -> RingSpec {
        match self {
            MonomialIdeal::Squarefree(i) => i.ring(),
            MonomialIdeal::General(i) => i.ring(),
        }
    }

    /// Collapses a general ideal into the squarefree representation when possible.
    pub fn normalized(self) -> Self {
        match self {
            MonomialIdeal::General(g) => match g.to_squarefree() {
                Some(sq) => MonomialIdeal::Squarefree(sq),
                None => MonomialIdeal::General(g),
            },
            sq => sq,
        }
    }

    pub fn as_squarefree(&self) -> Option<&SquarefreeIdeal> {
        match self {
            MonomialIdeal::Squarefree(i) => Some(i),
            MonomialIdeal::General(_) => None,
        }
    }

    pub fn to_general(&self) -> GeneralMonomialIdeal {
        match self {
            MonomialIdeal::Squarefree(i) => i.to_general(),
            MonomialIdeal::General(i) => i.clone(),
        }
    }

    pub fn is_unit(&self) -> bool {
        match self {
            MonomialIdeal::Squarefree(i) => i.is_unit(),
            MonomialIdeal::General(i) => i.is_unit(),
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            MonomialIdeal::Squarefree(i) => i.is_zero(),
            MonomialIdeal::General(i) => i.is_zero(),
        }
    }
}

impl From<SquarefreeIdeal> for MonomialIdeal {
    fn from(i: SquarefreeIdeal) -> Self {
        MonomialIdeal::Squarefree(i)
    }
}

impl From<GeneralMonomialIdeal> for MonomialIdeal {
    fn from(i: GeneralMonomialIdeal) -> Self {
        MonomialIdeal::General(i).normalized()
    }
}

impl fmt::Display for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MonomialIdeal::Squarefree(i) => write!(f, "{i}"),
            MonomialIdeal::General(i) => write!(f, "{i}"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ring33() -> RingSpec {
        RingSpec::new(3, 3).unwrap()
    }

    fn sq(ring: RingSpec, gens: &[&[usize]]) -> SquarefreeIdeal {
        SquarefreeIdeal::new(ring, gens.iter().map(|g| VarSet::from_vars(g.iter().copied()))).unwrap()
    }

    #[test]
    fn subsets_enumerates_power_set() {
        let s = VarSet::from_vars([1, 3, 4]);
        let subs: Vec<VarSet> = s.subsets().collect();
        assert_eq!(subs.len(), 8);
        assert!(subs.iter().all(|t| t.is_subset(s)));
        assert_eq!(VarSet::EMPTY.subsets().count(), 1);
    }

    #[test]
    fn principal_variable_ideal_is_prime() {
        let r = ring33();
        let i = sq(r, &[&[0]]);
        assert_eq!(i.minimal_primes().unwrap(), vec![MonomialPrime(VarSet::singleton(0))]);
    }

    #[test]
    fn minimal_primes_rejects_unit_and_zero() {
        let r = ring33();
        assert!(matches!(SquarefreeIdeal::unit(r).minimal_primes(), Err(Error::NoProperDecomposition(_))));
        assert!(matches!(SquarefreeIdeal::zero(r).minimal_primes(), Err(Error::NoProperDecomposition(_))));
    }

    #[test]
    fn generators_are_minimalized() {
        let r = ring33();
        let i = sq(r, &[&[0, 1], &[0], &[0, 2, 3], &[4]]);
        assert_eq!(i.generators(), &[VarSet::singleton(0), VarSet::singleton(4)]);
    }

    #[test]
    fn intersection_of_moebius_primes() {
        // (x1,x2,y2) ∩ (x1,x2,y1) = (x1, x2, y1 y2)
        let r = ring33();
        let a = sq(r, &[&[0], &[1], &[4]]);
        let b = sq(r, &[&[0], &[1], &[3]]);
        let c = intersect(r, &[a, b]).unwrap();
        assert_eq!(c, sq(r, &[&[0], &[1], &[3, 4]]));
    }

    #[test]
    fn intersection_edge_cases() {
        let r = ring33();
        let a = sq(r, &[&[0, 3], &[5]]);
        assert_eq!(intersect(r, std::slice::from_ref(&a)).unwrap(), a);
        assert!(intersect(r, &[]).unwrap().is_unit());
        assert_eq!(a.intersect_with(&SquarefreeIdeal::unit(r)).unwrap(), a);
        assert!(a.intersect_with(&SquarefreeIdeal::zero(r)).unwrap().is_zero());
    }

    #[test]
    fn zero_ideal_is_full_simplex() {
        let r = RingSpec::new(2, 1).unwrap();
        let z = SquarefreeIdeal::zero(r);
        assert_eq!(z.complex_facets().unwrap(), vec![r.all()]);
        assert_eq!(z.dim_of_quotient().unwrap(), 3);
    }

    #[test]
    fn sum_is_union_reduced() {
        let r = ring33();
        let a = sq(r, &[&[0, 1], &[3]]);
        let b = sq(r, &[&[0], &[4, 5]]);
        assert_eq!(a.sum(&b).unwrap(), sq(r, &[&[0], &[3], &[4, 5]]));
    }

    #[test]
    fn ring_mismatch_is_reported() {
        let a = SquarefreeIdeal::zero(RingSpec::new(1, 1).unwrap());
        let b = SquarefreeIdeal::zero(RingSpec::new(2, 1).unwrap());
        assert!(matches!(a.sum(&b), Err(Error::RingMismatch)));
    }

    #[test]
    fn general_ideal_minimalizes_and_detects_squarefree() {
        let r = RingSpec::new(2, 0).unwrap();
        let i = GeneralMonomialIdeal::new(r, vec![vec![2, 0], vec![1, 1], vec![3, 1]]).unwrap();
        assert_eq!(i.generators().len(), 2);
        assert!(!i.is_squarefree());
        assert_eq!(i.max_exponent(), 2);
        let j = GeneralMonomialIdeal::new(r, vec![vec![1, 1]]).unwrap();
        assert!(matches!(MonomialIdeal::from(j), MonomialIdeal::Squarefree(_)));
    }
}
