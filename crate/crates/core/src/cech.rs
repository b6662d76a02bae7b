//! Local cohomology of monomial quotients `A/B` with support in a variable
//! set `T`, computed strand by strand in the fine `Z^{m+n}` grading.
//!
//! The Čech complex on `T` splits into one finite complex per multidegree
//! `a`. Its component indexed by `W ⊆ T` (the variables made invertible) is
//! `K` when `x^a` lies in `A_W` but not in `B_W`, and zero otherwise. A
//! strand therefore depends only on, for each generator, the set of
//! variables where the generator's exponent exceeds `a`: the generator
//! divides `x^a` after inverting `W` exactly when that set lies in `W`.
//!
//! Squarefree input only needs the degree patterns with exponents in
//! `{-1, 0, 1}`; general input uses the box `[-1, d_max]`.

use std::fmt;

use rayon::prelude::*;
use rustc_hash::FxHashMap;
use smallvec::{smallvec, SmallVec};
use serde::{Deserialize, Serialize};

use crate::combinatorics::{GeneralMonomialIdeal, MonomialIdeal, MonomialPrime, RingSpec, SquarefreeIdeal, VarSet};
use crate::error::{Error, Result};
use crate::linalg::{ChainComplex, FieldSpec, SignMatrix};

/// The module `A/B` for monomial ideals `B ⊆ A`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct QuotientModule {
    numerator: MonomialIdeal,
    denominator: MonomialIdeal,
}

impl QuotientModule {
    pub fn new(numerator: impl Into<MonomialIdeal>, denominator: impl Into<MonomialIdeal>) -> Result<Self> {
        let numerator = numerator.into().normalized();
        let denominator = denominator.into().normalized();
        if numerator.ring() != denominator.ring() {
            return Err(Error::RingMismatch);
        }
        let contained = match (&numerator, &denominator) {
            (MonomialIdeal::Squarefree(a), MonomialIdeal::Squarefree(b)) => b.is_subideal_of(a),
            (a, b) => b.to_general().is_subideal_of(&a.to_general()),
        };
        if !contained {
            return Err(Error::NotASubmodule);
        }
        Ok(QuotientModule { numerator, denominator })
    }

    /// The cyclic module `S/I`.
    pub fn cyclic(ideal: impl Into<MonomialIdeal>) -> Self {
        let ideal = ideal.into().normalized();
        let unit = SquarefreeIdeal::unit(ideal.ring());
        QuotientModule::new(unit, ideal).expect("every ideal lies in the unit ideal")
    }

    pub fn ring(&self) -> RingSpec {
        self.numerator.ring()
    }

    pub fn numerator(&self) -> &MonomialIdeal {
        &self.numerator
    }

    pub fn denominator(&self) -> &MonomialIdeal {
        &self.denominator
    }

    pub fn is_squarefree(&self) -> bool {
        matches!((&self.numerator, &self.denominator), (MonomialIdeal::Squarefree(_), MonomialIdeal::Squarefree(_)))
    }

    /// `A/B = 0`, i.e. `A ⊆ B`.
    pub fn is_zero(&self) -> bool {
        match (&self.numerator, &self.denominator) {
            (MonomialIdeal::Squarefree(a), MonomialIdeal::Squarefree(b)) => a.is_subideal_of(b),
            (a, b) => a.to_general().is_subideal_of(&b.to_general()),
        }
    }

    /// Largest generator exponent over both ideals.
    pub fn max_exponent(&self) -> u32 {
        self.numerator.to_general().max_exponent().max(self.denominator.to_general().max_exponent())
    }
}

impl fmt::Display for QuotientModule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} / {}", self.numerator, self.denominator)
    }
}

/// A support pattern in the squarefree grading: exponent 1 on `pos`, -1 on
/// `neg`, 0 elsewhere.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct DegreePattern {
    pub pos: VarSet,
    pub neg: VarSet,
}

impl DegreePattern {
    pub fn new(pos: VarSet, neg: VarSet, torsion: VarSet) -> Result<Self> {
        if pos.intersects(neg) {
            return Err(Error::Internal(format!("degree pattern has overlapping supports {pos:?} and {neg:?}")));
        }
        if !neg.is_subset(torsion) {
            return Err(Error::Internal(format!("negative support {neg:?} outside the torsion set {torsion:?}")));
        }
        Ok(DegreePattern { pos, neg })
    }

    pub fn to_degree(self, ring: &RingSpec) -> Degree {
        Degree(
            (0..ring.num_vars())
                .map(|v| {
                    if self.pos.contains(v) {
                        1
                    } else if self.neg.contains(v) {
                        -1
                    } else {
                        0
                    }
                })
                .collect(),
        )
    }
}

/// A fine multidegree.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Degree(pub Vec<i32>);

impl Degree {
    /// Variables with negative exponent.
    pub fn negative_support(&self) -> VarSet {
        VarSet::from_vars(self.0.iter().enumerate().filter(|(_, &e)| e < 0).map(|(v, _)| v))
    }

    pub fn render(&self, ring: &RingSpec) -> String {
        let parts: Vec<String> = self
            .0
            .iter()
            .enumerate()
            .filter(|(_, &e)| e != 0)
            .map(|(v, &e)| if e == 1 { ring.var_name(v) } else { format!("{}^{e}", ring.var_name(v)) })
            .collect();
        if parts.is_empty() {
            "1".into()
        } else {
            parts.join("*")
        }
    }
}

impl fmt::Debug for Degree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.0)
    }
}

/// For each generator, the variables where its exponent exceeds `degree`.
fn violation_sets(ideal: &MonomialIdeal, degree: &Degree) -> Vec<VarSet> {
    match ideal {
        MonomialIdeal::Squarefree(i) => {
            let pos = VarSet::from_vars(degree.0.iter().enumerate().filter(|(_, &e)| e >= 1).map(|(v, _)| v));
            i.generators().iter().map(|g| *g - pos).collect()
        }
        MonomialIdeal::General(i) => general_violations(i, degree),
    }
}

fn general_violations(ideal: &GeneralMonomialIdeal, degree: &Degree) -> Vec<VarSet> {
    ideal
        .generators()
        .iter()
        .map(|g| {
            VarSet::from_vars(g.iter().zip(&degree.0).enumerate().filter(|(_, (&ge, &de))| i64::from(ge) > i64::from(de)).map(|(v, _)| v))
        })
        .collect()
}

/// Whether `x^degree` lies in `ideal` after inverting the variables of `w`.
/// Requires the negative support of `degree` to lie in `w`.
pub fn localized_membership(ideal: &MonomialIdeal, degree: &Degree, w: VarSet) -> bool {
    debug_assert!(degree.negative_support().is_subset(w));
    violation_sets(ideal, degree).iter().any(|v| v.is_subset(w))
}

/// The strand of the Čech complex in one multidegree.
#[derive(Clone, Debug)]
pub struct StrandComplex {
    pub degree: Degree,
    /// Nonzero components, ordered by size and then bitset value.
    pub components: Vec<VarSet>,
    pub complex: ChainComplex,
}

impl StrandComplex {
    pub fn cohomology(&self, field: FieldSpec) -> Result<Vec<usize>> {
        self.complex.cohomology_dims(field)
    }
}

/// Bitset over the subsets of `T`, indexed by the compressed form of `W`
/// (bit `k` of the index stands for the `k`-th variable of `T`).
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
struct Mask(SmallVec<[u64; 1]>);

impl Mask {
    fn zeros(t: usize) -> Self {
        Mask(smallvec![0; words(t)])
    }

    fn get(&self, w: usize) -> bool {
        self.0[w / 64] >> (w % 64) & 1 == 1
    }

    fn set(&mut self, w: usize) {
        self.0[w / 64] |= 1 << (w % 64);
    }

    fn or_assign(&mut self, other: &Mask) {
        for (a, b) in self.0.iter_mut().zip(&other.0) {
            *a |= b;
        }
    }

    /// `self & other & !minus`
    fn and_and_not(&self, other: &Mask, minus: &Mask) -> Mask {
        Mask(self.0.iter().zip(&other.0).zip(&minus.0).map(|((a, b), c)| a & b & !c).collect())
    }

    fn is_empty(&self) -> bool {
        self.0.iter().all(|&w| w == 0)
    }

    fn ones(&self) -> impl Iterator<Item = usize> + '_ {
        self.0.iter().enumerate().flat_map(|(i, &word)| {
            let mut bits = word;
            std::iter::from_fn(move || {
                if bits == 0 {
                    return None;
                }
                let b = bits.trailing_zeros() as usize;
                bits &= bits - 1;
                Some(i * 64 + b)
            })
        })
    }
}

fn words(t: usize) -> usize {
    (1usize << t).div_ceil(64)
}

/// Per-profile precomputation: the torsion variables in order, and for
/// every compressed subset `s` the mask of its supersets.
struct Cube {
    torsion: VarSet,
    t: usize,
    position: [u8; crate::combinatorics::MAX_VARS],
    supersets: Vec<Mask>,
}

/// Above this many torsion variables superset masks are built on demand.
const CUBE_TABLE_LIMIT: usize = 12;

impl Cube {
    fn new(torsion: VarSet) -> Self {
        let t = torsion.len();
        let mut position = [0u8; crate::combinatorics::MAX_VARS];
        for (k, v) in torsion.iter().enumerate() {
            position[v] = k as u8;
        }
        let supersets = if t <= CUBE_TABLE_LIMIT { (0..1usize << t).map(|s| Self::superset_mask(t, s)).collect() } else { Vec::new() };
        Cube { torsion, t, position, supersets }
    }

    fn superset_mask(t: usize, s: usize) -> Mask {
        let mut m = Mask::zeros(t);
        for w in 0..1usize << t {
            if w & s == s {
                m.set(w);
            }
        }
        m
    }

    fn compress(&self, set: VarSet) -> usize {
        set.iter().fold(0, |acc, v| acc | 1 << self.position[v])
    }

    fn expand(&self, w: usize) -> VarSet {
        VarSet::from_vars(self.torsion.iter().enumerate().filter(|(k, _)| w >> k & 1 == 1).map(|(_, v)| v))
    }

    fn add_supersets(&self, mask: &mut Mask, s: usize) {
        if self.t <= CUBE_TABLE_LIMIT {
            mask.or_assign(&self.supersets[s]);
        } else {
            mask.or_assign(&Self::superset_mask(self.t, s));
        }
    }

    fn supersets_of(&self, s: usize) -> Mask {
        if self.t <= CUBE_TABLE_LIMIT {
            self.supersets[s].clone()
        } else {
            Self::superset_mask(self.t, s)
        }
    }

    /// Union of the superset masks of all violation sets lying in `T`.
    fn membership(&self, violations: impl Iterator<Item = VarSet>) -> Mask {
        let mut m = Mask::zeros(self.t);
        for v in violations {
            if v.is_subset(self.torsion) {
                self.add_supersets(&mut m, self.compress(v));
            }
        }
        m
    }
}

/// Generators prepared for fast violation-set computation.
enum Prepared<'a> {
    Squarefree(&'a [VarSet]),
    General(&'a [Vec<u32>]),
}

impl<'a> Prepared<'a> {
    fn new(ideal: &'a MonomialIdeal) -> Self {
        match ideal {
            MonomialIdeal::Squarefree(i) => Prepared::Squarefree(i.generators()),
            MonomialIdeal::General(i) => Prepared::General(i.generators()),
        }
    }

    fn violations<'b>(&'b self, exps: &'b [i32], pos: VarSet) -> Box<dyn Iterator<Item = VarSet> + 'b> {
        match self {
            Prepared::Squarefree(gens) => Box::new(gens.iter().map(move |g| *g - pos)),
            Prepared::General(gens) => Box::new(gens.iter().map(move |g| {
                VarSet::from_vars(g.iter().zip(exps).enumerate().filter(|(_, (&ge, &de))| i64::from(ge) > i64::from(de)).map(|(v, _)| v))
            })),
        }
    }
}

/// The set of nonzero components of a strand. Determines the complex.
fn strand_shape(cube: &Cube, num: &Prepared, den: &Prepared, exps: &[i32]) -> Mask {
    let mut pos = VarSet::EMPTY;
    let mut neg = VarSet::EMPTY;
    for (v, &e) in exps.iter().enumerate() {
        if e > 0 {
            pos.insert(v);
        } else if e < 0 {
            neg.insert(v);
        }
    }
    let a = cube.membership(num.violations(exps, pos));
    let b = cube.membership(den.violations(exps, pos));
    a.and_and_not(&cube.supersets_of(cube.compress(neg)), &b)
}

/// `(-1)^{|{w ∈ W : w < j}|}` with `W` and `j` in compressed coordinates.
fn cech_sign(w: usize, j: usize) -> i8 {
    if (w & ((1 << j) - 1)).count_ones().is_multiple_of(2) {
        1
    } else {
        -1
    }
}

fn shape_components(shape: &Mask) -> Vec<usize> {
    let mut comps: Vec<usize> = shape.ones().collect();
    comps.sort_by_key(|w| (w.count_ones(), *w));
    comps
}

fn build_complex(t: usize, components: &[usize]) -> Result<ChainComplex> {
    let mut by_size: Vec<Vec<usize>> = vec![Vec::new(); t + 1];
    for &w in components {
        by_size[w.count_ones() as usize].push(w);
    }
    let dims: Vec<usize> = by_size.iter().map(Vec::len).collect();
    let maps = (0..t)
        .map(|k| {
            let (src, dst) = (&by_size[k], &by_size[k + 1]);
            let mut d = SignMatrix::zeros(dst.len(), src.len());
            for (col, &w) in src.iter().enumerate() {
                for j in (0..t).filter(|j| w >> j & 1 == 0) {
                    if let Ok(row) = dst.binary_search(&(w | 1 << j)) {
                        d.set(row, col, cech_sign(w, j));
                    }
                }
            }
            d
        })
        .collect();
    ChainComplex::new(dims, maps)
}

/// Builds the Čech strand of `module` in `degree` for the torsion set `torsion`.
pub fn strand(module: &QuotientModule, torsion: VarSet, degree: &Degree) -> Result<StrandComplex> {
    if degree.0.len() != module.ring().num_vars() {
        return Err(Error::Internal("degree length differs from the number of variables".into()));
    }
    if !degree.negative_support().is_subset(torsion) {
        return Err(Error::Internal("negative exponents outside the torsion set".into()));
    }
    let cube = Cube::new(torsion);
    let shape = strand_shape(&cube, &Prepared::new(&module.numerator), &Prepared::new(&module.denominator), &degree.0);
    let comps = shape_components(&shape);
    let complex = build_complex(cube.t, &comps)?;
    let components = comps.iter().map(|&w| cube.expand(w)).collect();
    Ok(StrandComplex { degree: degree.clone(), components, complex })
}

/// A variable `j` with `present(W) == present(W ∪ j)` for every `W` makes
/// the strand a cone, hence acyclic.
fn is_cone(t: usize, shape: &Mask) -> bool {
    (0..t).any(|j| (0..1usize << t).filter(|w| w >> j & 1 == 0).all(|w| shape.get(w) == shape.get(w | 1 << j)))
}

fn shape_cohomology(t: usize, shape: &Mask, field: FieldSpec) -> Result<Vec<usize>> {
    let mut h = vec![0; t + 1];
    if shape.is_empty() || is_cone(t, shape) {
        return Ok(h);
    }
    let comps = shape_components(shape);
    if comps.len() == 1 {
        h[comps[0].count_ones() as usize] = 1;
        return Ok(h);
    }
    build_complex(t, &comps)?.cohomology_dims(field)
}

/// How much exponent range to enumerate.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default, Serialize, Deserialize)]
pub enum DegreeBox {
    /// `{-1,0,1}` for squarefree modules, `[-1, d_max]` otherwise.
    #[default]
    Minimal,
    /// One step wider in every direction: `[-2, d_max + 1]`, always through
    /// the general exponent path.
    Enlarged,
}

/// Evaluation strategy.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default, Serialize, Deserialize)]
pub enum Mode {
    /// Every strand is evaluated and strands with nonzero cohomology are
    /// kept in the profile.
    #[default]
    Full,
    /// Sequential; strands that can only contribute to indices that already
    /// have a witness are skipped. Flags and witnesses match `Full`.
    Fast,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub struct ProfileOptions {
    pub mode: Mode,
    pub degree_box: DegreeBox,
    /// Evaluate strands on the rayon pool (`Full` mode only).
    pub parallel: bool,
}

impl ProfileOptions {
    pub fn fast() -> Self {
        ProfileOptions { mode: Mode::Fast, ..Default::default() }
    }
}

/// One strand with nonvanishing cohomology.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct StrandRecord {
    pub degree: Degree,
    pub dims: Vec<usize>,
}

/// Which `H^i_T(A/B)` vanish.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CohomologyProfile {
    pub torsion: VarSet,
    pub field: FieldSpec,
    /// `nonvanishing[i]` is `H^i_T != 0`, for `i = 0..=|T|`.
    pub nonvanishing: Vec<bool>,
    /// Enumeration-least degree carrying each nonvanishing index.
    pub witnesses: Vec<Option<Degree>>,
    pub zero_module: bool,
    /// Present in `Full` mode.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub strands: Option<Vec<StrandRecord>>,
}

impl CohomologyProfile {
    /// Least nonvanishing index; `None` for the zero module.
    pub fn grade(&self) -> Option<usize> {
        self.nonvanishing.iter().position(|&b| b)
    }

    /// Largest nonvanishing index; `None` for the zero module.
    pub fn cd(&self) -> Option<usize> {
        self.nonvanishing.iter().rposition(|&b| b)
    }

    /// Whether every index between grade and cd is nonvanishing.
    pub fn is_gap_free(&self) -> bool {
        match (self.grade(), self.cd()) {
            (Some(g), Some(c)) => (g..=c).all(|i| self.nonvanishing[i]),
            _ => true,
        }
    }

    pub fn nonvanishing_count(&self) -> usize {
        self.nonvanishing.iter().filter(|&&b| b).count()
    }

    fn record(&mut self, dims: &[usize], degree: &[i32]) {
        for (i, &d) in dims.iter().enumerate() {
            if d > 0 && !self.nonvanishing[i] {
                self.nonvanishing[i] = true;
                self.witnesses[i] = Some(Degree(degree.to_vec()));
            }
        }
    }
}

/// Per-variable exponent ranges `(lo, hi)` in enumeration order.
fn exponent_ranges(module: &QuotientModule, torsion: VarSet, degree_box: DegreeBox) -> Vec<(i32, i32)> {
    let squarefree_path = module.is_squarefree() && degree_box == DegreeBox::Minimal;
    let dmax = module.max_exponent().max(1) as i32;
    let (lo, hi) = match degree_box {
        DegreeBox::Minimal => (-1, if squarefree_path { 1 } else { dmax }),
        DegreeBox::Enlarged => (-2, dmax + 1),
    };
    (0..module.ring().num_vars()).map(|v| (if torsion.contains(v) { lo } else { 0 }, hi)).collect()
}

/// Lexicographic odometer over the box, variable 0 most significant.
struct Odometer {
    ranges: Vec<(i32, i32)>,
    current: Vec<i32>,
    started: bool,
}

impl Odometer {
    fn new(ranges: Vec<(i32, i32)>) -> Self {
        let current = ranges.iter().map(|r| r.0).collect();
        Odometer { ranges, current, started: false }
    }

    fn advance(&mut self) -> Option<&[i32]> {
        if !self.started {
            self.started = true;
            return Some(&self.current);
        }
        for v in (0..self.ranges.len()).rev() {
            if self.current[v] < self.ranges[v].1 {
                self.current[v] += 1;
                return Some(&self.current);
            }
            self.current[v] = self.ranges[v].0;
        }
        None
    }
}

type ShapeCache = FxHashMap<Mask, Vec<usize>>;

fn cached_cohomology(cache: &mut ShapeCache, t: usize, shape: Mask, field: FieldSpec) -> Result<&Vec<usize>> {
    use std::collections::hash_map::Entry;
    match cache.entry(shape) {
        Entry::Occupied(e) => Ok(e.into_mut()),
        Entry::Vacant(e) => {
            let dims = shape_cohomology(t, e.key(), field)?;
            Ok(e.insert(dims))
        }
    }
}

/// Computes the nonvanishing pattern of `H^i_T(module)`.
pub fn cohomology_profile(module: &QuotientModule, torsion: VarSet, field: FieldSpec) -> Result<CohomologyProfile> {
    cohomology_profile_with(module, torsion, field, ProfileOptions::default())
}

pub fn cohomology_profile_with(
    module: &QuotientModule,
    torsion: VarSet,
    field: FieldSpec,
    opts: ProfileOptions,
) -> Result<CohomologyProfile> {
    if !torsion.is_subset(module.ring().all()) {
        return Err(Error::InvalidRing("torsion set outside the ring".into()));
    }
    let t = torsion.len();
    let zero_module = module.is_zero();
    let mut profile = CohomologyProfile {
        torsion,
        field,
        nonvanishing: vec![false; t + 1],
        witnesses: vec![None; t + 1],
        zero_module,
        strands: None,
    };
    if zero_module {
        if opts.mode == Mode::Full {
            profile.strands = Some(Vec::new());
        }
        return Ok(profile);
    }
    let cube = Cube::new(torsion);
    let num = Prepared::new(&module.numerator);
    let den = Prepared::new(&module.denominator);
    let mut odometer = Odometer::new(exponent_ranges(module, torsion, opts.degree_box));
    match opts.mode {
        Mode::Full => {
            let mut all = Vec::new();
            while let Some(exps) = odometer.advance() {
                all.push(exps.to_vec());
            }
            let eval = |cache: &mut ShapeCache, exps: Vec<i32>| -> Result<Option<StrandRecord>> {
                let shape = strand_shape(&cube, &num, &den, &exps);
                let dims = cached_cohomology(cache, t, shape, field)?;
                Ok(dims.iter().any(|&d| d > 0).then(|| StrandRecord { degree: Degree(exps), dims: dims.clone() }))
            };
            let results: Vec<Result<Option<StrandRecord>>> = if opts.parallel {
                all.into_par_iter().map_init(ShapeCache::default, eval).collect()
            } else {
                let mut cache = ShapeCache::default();
                all.into_iter().map(|e| eval(&mut cache, e)).collect()
            };
            let mut records = Vec::new();
            for r in results {
                if let Some(rec) = r? {
                    profile.record(&rec.dims, &rec.degree.0);
                    records.push(rec);
                }
            }
            profile.strands = Some(records);
        }
        Mode::Fast => {
            let mut cache = ShapeCache::default();
            while let Some(exps) = odometer.advance() {
                if profile.nonvanishing.iter().all(|&b| b) {
                    break;
                }
                // a strand's cohomology sits at indices >= |neg|
                let neg = exps.iter().filter(|&&e| e < 0).count();
                if profile.nonvanishing[neg..].iter().all(|&b| b) {
                    continue;
                }
                let shape = strand_shape(&cube, &num, &den, exps);
                let dims = cached_cohomology(&mut cache, t, shape, field)?;
                if dims.iter().any(|&d| d > 0) {
                    let dims = dims.clone();
                    let exps = exps.to_vec();
                    profile.record(&dims, &exps);
                }
            }
        }
    }
    if profile.grade().is_none() {
        return Err(Error::Internal(format!("nonzero module {module} has no local cohomology")));
    }
    Ok(profile)
}

/// `cd(T, S/I)` as the largest `|T| - |p ∩ T|` over the minimal primes of `I`.
pub fn cd_via_primes(ideal: &SquarefreeIdeal, torsion: VarSet) -> Result<usize> {
    Ok(ideal.minimal_primes()?.into_iter().map(|p| p.cd(torsion)).max().expect("proper ideals have a minimal prime"))
}

/// Restriction of a monomial ideal to the variables `keep`, setting the
/// others to one. Returns the ring on `keep` and the restricted generators,
/// or `None` when `keep` is empty.
fn restrict(ideal: &GeneralMonomialIdeal, keep: VarSet) -> Option<GeneralMonomialIdeal> {
    let ring = ideal.ring();
    let xs = (keep & ring.p()).len();
    let ys = (keep & ring.q()).len();
    let sub = RingSpec::new(xs, ys).ok()?;
    let vars: Vec<usize> = keep.iter().collect();
    let gens = ideal.generators().iter().map(|g| vars.iter().map(|&v| g[v]).collect());
    Some(GeneralMonomialIdeal::new(sub, gens).expect("restricted exponent vectors fit the subring"))
}

/// Associated primes of `S/I` for an arbitrary monomial ideal.
///
/// `p = (V)` is associated exactly when, after inverting the variables
/// outside `V`, the quotient has nonzero `H^0` with support in `V`.
pub fn associated_primes(ideal: &MonomialIdeal) -> Result<Vec<MonomialPrime>> {
    if ideal.is_unit() {
        return Err(Error::NoProperDecomposition("the unit ideal"));
    }
    let general = ideal.to_general();
    let ring = ideal.ring();
    let mut out = Vec::new();
    for keep in ring.all().subsets() {
        let associated = match restrict(&general, keep) {
            None => general.is_zero(),
            Some(local) => {
                if local.is_unit() {
                    false
                } else {
                    let sub_ring = local.ring();
                    let module = QuotientModule::cyclic(local);
                    let h0 = cohomology_profile_with(&module, sub_ring.all(), FieldSpec::RATIONALS, ProfileOptions::fast())?;
                    h0.nonvanishing[0]
                }
            }
        };
        if associated {
            out.push(MonomialPrime(keep));
        }
    }
    out.sort();
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinatorics::{GeneralMonomialIdeal, RingSpec};
    use crate::fixtures::depth_zero_product;

    fn q() -> FieldSpec {
        FieldSpec::RATIONALS
    }

    fn sq(ring: RingSpec, gens: &[&[usize]]) -> SquarefreeIdeal {
        SquarefreeIdeal::new(ring, gens.iter().map(|g| VarSet::from_vars(g.iter().copied()))).unwrap()
    }

    #[test]
    fn localized_membership_examples() {
        let r = RingSpec::new(3, 3).unwrap();
        let rp2: MonomialIdeal = crate::fixtures::rp2().into();
        let deg = DegreePattern { pos: VarSet::from_vars([0, 1]), neg: VarSet::EMPTY }.to_degree(&r);
        assert!(localized_membership(&rp2, &deg, VarSet::singleton(r.y(1))));

        let zero: MonomialIdeal = SquarefreeIdeal::zero(r).into();
        assert!(!localized_membership(&zero, &deg, r.all()));

        // the x-factor (x1^2, x1x2) of the depth zero product
        let r22 = RingSpec::new(2, 2).unwrap();
        let factor: MonomialIdeal = GeneralMonomialIdeal::new(r22, vec![vec![2, 0, 0, 0], vec![1, 1, 0, 0]]).unwrap().into();
        let d = Degree(vec![1, 0, 0, 0]);
        for w in r22.q().subsets() {
            assert!(!localized_membership(&factor, &d, w));
        }
        // the full ideal contains y1^2, a unit once y1 is inverted
        let product: MonomialIdeal = depth_zero_product().into();
        assert!(!localized_membership(&product, &d, VarSet::EMPTY));
        assert!(localized_membership(&product, &d, VarSet::singleton(r22.y(1))));
    }

    #[test]
    fn top_cohomology_of_one_variable_ring() {
        let r = RingSpec::new(0, 1).unwrap();
        let m = QuotientModule::cyclic(SquarefreeIdeal::zero(r));
        let t = r.q();
        let s = strand(&m, t, &Degree(vec![-1])).unwrap();
        assert_eq!(s.components, vec![t]);
        assert_eq!(s.cohomology(q()).unwrap(), vec![0, 1]);
        let s0 = strand(&m, t, &Degree(vec![0])).unwrap();
        assert_eq!(s0.components.len(), 2);
        assert_eq!(s0.cohomology(q()).unwrap(), vec![0, 0]);
    }

    #[test]
    fn strand_rejects_bad_degrees() {
        let r = RingSpec::new(1, 1).unwrap();
        let m = QuotientModule::cyclic(SquarefreeIdeal::zero(r));
        assert!(strand(&m, r.q(), &Degree(vec![-1, 0])).is_err());
        assert!(strand(&m, r.q(), &Degree(vec![0])).is_err());
    }

    #[test]
    fn non_submodule_is_rejected() {
        let r = RingSpec::new(1, 1).unwrap();
        let a = sq(r, &[&[0]]);
        let b = sq(r, &[&[1]]);
        assert_eq!(QuotientModule::new(a, b), Err(Error::NotASubmodule));
    }

    #[test]
    fn zero_module_has_undefined_invariants() {
        let r = RingSpec::new(1, 1).unwrap();
        let i = sq(r, &[&[0]]);
        let m = QuotientModule::new(i.clone(), i).unwrap();
        let p = cohomology_profile(&m, r.all(), q()).unwrap();
        assert!(p.zero_module);
        assert_eq!(p.grade(), None);
        assert_eq!(p.cd(), None);
    }

    #[test]
    fn rp2_grade_and_cd() {
        let i = crate::fixtures::rp2();
        let r = i.ring();
        let m = QuotientModule::cyclic(i);
        let pq = cohomology_profile(&m, r.q(), q()).unwrap();
        assert_eq!((pq.grade(), pq.cd()), (Some(1), Some(3)));
        let pp = cohomology_profile(&m, r.p(), q()).unwrap();
        assert_eq!((pp.grade(), pp.cd()), (Some(0), Some(2)));
    }

    #[test]
    fn rp2_top_q_strand() {
        let i = crate::fixtures::rp2();
        let r = i.ring();
        let m = QuotientModule::cyclic(i);
        // after inverting every y the ideal becomes (x1, x2, x3), so only
        // the degree with no positive x-exponent survives
        let deg = DegreePattern::new(VarSet::EMPTY, r.q(), r.q()).unwrap().to_degree(&r);
        let s = strand(&m, r.q(), &deg).unwrap();
        assert_eq!(s.cohomology(q()).unwrap(), vec![0, 0, 0, 1]);
        let deg = DegreePattern::new(r.p(), r.q(), r.q()).unwrap().to_degree(&r);
        let s = strand(&m, r.q(), &deg).unwrap();
        assert!(s.components.is_empty());
        let profile = cohomology_profile(&m, r.q(), q()).unwrap();
        assert_eq!(profile.witnesses[3], Some(DegreePattern { pos: VarSet::EMPTY, neg: r.q() }.to_degree(&r)));
    }

    #[test]
    fn depth_zero_product_profiles() {
        let i = depth_zero_product();
        let r = i.ring();
        let m = QuotientModule::cyclic(i);
        let pq = cohomology_profile(&m, r.q(), q()).unwrap();
        assert_eq!((pq.grade(), pq.cd()), (Some(0), Some(1)));
        let pm = cohomology_profile(&m, r.all(), q()).unwrap();
        assert_eq!((pm.grade(), pm.cd()), (Some(0), Some(2)));
    }

    #[test]
    fn fast_and_parallel_modes_agree() {
        let i = crate::fixtures::moebius();
        let r = i.ring();
        let m = QuotientModule::cyclic(i);
        for t in [r.p(), r.q(), r.all()] {
            let full = cohomology_profile(&m, t, q()).unwrap();
            let fast = cohomology_profile_with(&m, t, q(), ProfileOptions::fast()).unwrap();
            let par = cohomology_profile_with(&m, t, q(), ProfileOptions { parallel: true, ..Default::default() }).unwrap();
            assert_eq!(full.nonvanishing, fast.nonvanishing);
            assert_eq!(full.witnesses, fast.witnesses);
            assert_eq!(full, par);
        }
    }

    #[test]
    fn cd_via_primes_examples() {
        let rp2 = crate::fixtures::rp2();
        let r = rp2.ring();
        assert_eq!(cd_via_primes(&rp2, r.q()).unwrap(), 3);
        assert_eq!(cd_via_primes(&rp2, r.p()).unwrap(), 2);
        let mo = crate::fixtures::moebius();
        assert_eq!(cd_via_primes(&mo, r.q()).unwrap(), 2);
        assert_eq!(cd_via_primes(&mo, r.p()).unwrap(), 2);
        let yprime = MonomialPrime(r.q()).to_ideal(r);
        assert_eq!(cd_via_primes(&yprime, r.q()).unwrap(), 0);
    }

    #[test]
    fn associated_primes_of_depth_zero_product() {
        let ass = associated_primes(&depth_zero_product().into()).unwrap();
        let expected: Vec<MonomialPrime> = [vec![0, 2], vec![0, 2, 3], vec![0, 1, 2], vec![0, 1, 2, 3]]
            .into_iter()
            .map(|v| MonomialPrime(VarSet::from_vars(v)))
            .collect::<std::collections::BTreeSet<_>>()
            .into_iter()
            .collect();
        assert_eq!(ass, expected);
    }
}
