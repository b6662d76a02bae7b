//! Dimension filtrations of `S/I` for squarefree `I` relative to a torsion
//! set `T`, and the Cohen–Macaulay family of verdicts built on them.
//!
//! For radical `I` the reduced primary decomposition is the list of minimal
//! primes. Grouping the primes by `cd(T, S/p)` with values
//! `q_1 < ... < q_r` gives the filtration
//!
//! ```text
//! 0 = D_0 ⊊ D_1 ⊊ ... ⊊ D_r = S/I,   D_i = J_i / I,
//! J_i = ⋂ { p : cd(T, S/p) > q_i },  J_0 = I,  J_r = S.
//! ```

use serde::{Deserialize, Serialize};

use crate::cech::{cohomology_profile_with, CohomologyProfile, ProfileOptions, QuotientModule};
use crate::combinatorics::{intersect_primes, minimalize, MonomialIdeal, MonomialPrime, RingSpec, SquarefreeIdeal, VarSet};
use crate::error::{Error, Result};
use crate::linalg::FieldSpec;

/// The dimension filtration with respect to a torsion set.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FiltrationResult {
    pub ring: RingSpec,
    pub torsion: VarSet,
    pub ideal: SquarefreeIdeal,
    /// Distinct values `q_1 < ... < q_r`.
    pub cd_values: Vec<usize>,
    /// `groups[i]` holds the minimal primes with `cd(T, S/p) = cd_values[i]`.
    pub groups: Vec<Vec<MonomialPrime>>,
    /// `J_0 = I, J_1, ..., J_{r-1}`; `J_r` is the unit ideal and not stored.
    pub ideals: Vec<SquarefreeIdeal>,
}

impl FiltrationResult {
    /// Filtration length `r`.
    pub fn len(&self) -> usize {
        self.cd_values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cd_values.is_empty()
    }

    /// `J_i` for `i = 0..=r`.
    pub fn j(&self, i: usize) -> SquarefreeIdeal {
        if i == self.len() {
            SquarefreeIdeal::unit(self.ring)
        } else {
            self.ideals[i].clone()
        }
    }

    /// `D_i = J_i / I` for `i = 0..=r`.
    pub fn submodule(&self, i: usize) -> QuotientModule {
        QuotientModule::new(self.j(i), self.ideal.clone()).expect("I ⊆ J_i")
    }

    /// `B_i = G_1 ∪ ... ∪ G_i`.
    pub fn accumulated(&self, i: usize) -> Vec<MonomialPrime> {
        let mut out: Vec<MonomialPrime> = self.groups[..i].iter().flatten().copied().collect();
        out.sort();
        out
    }

    /// Minimal primes of `I`.
    pub fn primes(&self) -> Vec<MonomialPrime> {
        self.accumulated(self.len())
    }

    /// The ideal `J_{r-1}` whose quotient by `I` is the unmixed component.
    pub fn unmixed_ideal(&self) -> SquarefreeIdeal {
        self.j(self.len() - 1)
    }

    /// Recomputes `cd(T, D_i) = q_i` for every `i` with the Čech engine.
    pub fn verify(&self, field: FieldSpec) -> Result<()> {
        self.verify_up_to(self.len(), field)
    }

    fn verify_up_to(&self, last: usize, field: FieldSpec) -> Result<()> {
        for i in 1..=last {
            let profile = profile(&self.submodule(i), self.torsion, field)?;
            if profile.cd() != Some(self.cd_values[i - 1]) {
                return Err(Error::Internal(format!(
                    "cd(T, D_{i}) = {:?} but the filtration predicts {}",
                    profile.cd(),
                    self.cd_values[i - 1]
                )));
            }
        }
        Ok(())
    }
}

fn profile(module: &QuotientModule, torsion: VarSet, field: FieldSpec) -> Result<CohomologyProfile> {
    cohomology_profile_with(module, torsion, field, ProfileOptions::fast())
}

/// Builds the dimension filtration of `S/I` with respect to `torsion`.
pub fn dimension_filtration(ideal: &SquarefreeIdeal, torsion: VarSet) -> Result<FiltrationResult> {
    let ring = ideal.ring();
    let primes = ideal.minimal_primes()?;
    let mut cd_values: Vec<usize> = primes.iter().map(|p| p.cd(torsion)).collect();
    cd_values.sort_unstable();
    cd_values.dedup();
    let groups: Vec<Vec<MonomialPrime>> =
        cd_values.iter().map(|&q| primes.iter().copied().filter(|p| p.cd(torsion) == q).collect()).collect();
    let mut ideals = vec![ideal.clone()];
    for &q in &cd_values[..cd_values.len() - 1] {
        let above: Vec<MonomialPrime> = primes.iter().copied().filter(|p| p.cd(torsion) > q).collect();
        ideals.push(intersect_primes(ring, &above));
    }
    Ok(FiltrationResult { ring, torsion, ideal: ideal.clone(), cd_values, groups, ideals })
}

/// `J_{r-1}`: the intersection of the minimal primes attaining the largest
/// `cd(T, S/p)`. For relatively unmixed input this is `I` itself.
pub fn unmixed_component(ideal: &SquarefreeIdeal, torsion: VarSet) -> Result<SquarefreeIdeal> {
    Ok(dimension_filtration(ideal, torsion)?.unmixed_ideal())
}

/// Grade/cd pair of a module.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GradeCd {
    pub grade: usize,
    pub cd: usize,
}

fn grade_cd(module: &QuotientModule, torsion: VarSet, field: FieldSpec) -> Result<GradeCd> {
    let p = profile(module, torsion, field)?;
    match (p.grade(), p.cd()) {
        (Some(grade), Some(cd)) => Ok(GradeCd { grade, cd }),
        _ => Err(Error::Internal(format!("unexpected zero module {module}"))),
    }
}

/// Verdicts with respect to one torsion set.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Verdicts {
    pub torsion: VarSet,
    /// `grade(T, S/I)` and `cd(T, S/I)`.
    pub invariants: GradeCd,
    pub cm: bool,
    pub seq_cm: bool,
    pub approx_cm: bool,
    pub relatively_unmixed: bool,
    /// `grade(T, S/J_{i-1})` for `i = 1..=r`.
    pub grade_certificates: Vec<usize>,
    /// The `q_i` these grades are compared with.
    pub cd_values: Vec<usize>,
    /// First `i` (1-based) with `grade(T, S/J_{i-1}) != q_i`.
    pub failing_index: Option<usize>,
    /// `grade` and `cd` of `S/J_{r-1}`.
    pub unmixed_quotient: GradeCd,
}

/// Relative and classical verdicts for `S/I`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassificationReport {
    pub field: FieldSpec,
    pub relative: Verdicts,
    pub classical: Verdicts,
}

fn verdicts(ideal: &SquarefreeIdeal, torsion: VarSet, field: FieldSpec) -> Result<Verdicts> {
    let filtration = dimension_filtration(ideal, torsion)?;
    let r = filtration.len();
    // D_r = S/I coincides with S/J_0, whose profile is computed below
    filtration.verify_up_to(r - 1, field)?;
    let quotients =
        (0..r).map(|i| grade_cd(&QuotientModule::cyclic(filtration.j(i)), torsion, field)).collect::<Result<Vec<_>>>()?;
    let invariants = quotients[0];
    if invariants.cd != filtration.cd_values[r - 1] {
        return Err(Error::Internal(format!(
            "cd(T, S/I) = {} but the filtration predicts {}",
            invariants.cd,
            filtration.cd_values[r - 1]
        )));
    }
    let grade_certificates: Vec<usize> = quotients.iter().map(|g| g.grade).collect();
    let failing_index = grade_certificates.iter().zip(&filtration.cd_values).position(|(g, q)| g != q).map(|i| i + 1);
    let seq_cm = failing_index.is_none();
    let cm = invariants.grade == invariants.cd;
    let unmixed_quotient = quotients[r - 1];
    let close = invariants.grade + 1 >= invariants.cd;
    let by_definition = unmixed_quotient.grade == unmixed_quotient.cd && close;
    let by_sequence = seq_cm && close;
    if by_definition != by_sequence {
        return Err(Error::Internal(format!(
            "approximate Cohen-Macaulay tests disagree for {ideal}: unmixed quotient gives {by_definition}, filtration gives {by_sequence}"
        )));
    }
    if cm && !seq_cm {
        return Err(Error::Internal(format!("{ideal} is Cohen-Macaulay but not sequentially so")));
    }
    Ok(Verdicts {
        torsion,
        invariants,
        cm,
        seq_cm,
        approx_cm: by_definition,
        relatively_unmixed: r == 1,
        grade_certificates,
        cd_values: filtration.cd_values,
        failing_index,
        unmixed_quotient,
    })
}

/// Decides Cohen–Macaulay, sequentially Cohen–Macaulay and approximately
/// Cohen–Macaulay with respect to `torsion` and with respect to all
/// variables.
pub fn classify(ideal: &SquarefreeIdeal, torsion: VarSet, field: FieldSpec) -> Result<ClassificationReport> {
    let relative = verdicts(ideal, torsion, field)?;
    let all = ideal.ring().all();
    let classical = if torsion == all { relative.clone() } else { verdicts(ideal, all, field)? };
    Ok(ClassificationReport { field, relative, classical })
}

/// One checked identity in the invariant report.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct InvariantLine {
    pub name: String,
    pub holds: bool,
    pub detail: String,
}

/// Identities that hold for Cohen–Macaulay `S/I` that are sequentially
/// Cohen–Macaulay with respect to `Q`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CmInvariantReport {
    pub field: FieldSpec,
    pub r: usize,
    pub dim: usize,
    pub cd_p: usize,
    pub cd_q: usize,
    pub grade_q: usize,
    pub lines: Vec<InvariantLine>,
}

/// Checks the invariant identities for a Cohen–Macaulay `S/I` that is
/// sequentially Cohen–Macaulay with respect to `Q`. Unmet preconditions give
/// [`Error::Declined`]; a failing identity gives [`Error::Internal`].
///
/// Non-squarefree input is accepted so that the Cohen–Macaulay check can
/// decline it with a reason; past that check the filtration needs a
/// squarefree ideal.
pub fn cm_invariant_report(ideal: impl Into<MonomialIdeal>, field: FieldSpec) -> Result<CmInvariantReport> {
    let ideal = ideal.into().normalized();
    let ring = ideal.ring();
    let module = QuotientModule::cyclic(ideal.clone());
    let whole = grade_cd(&module, ring.all(), field)?;
    if whole.grade != whole.cd {
        return Err(Error::Declined(format!(
            "S/I is not Cohen-Macaulay over {field} (depth {} != dim {})",
            whole.grade, whole.cd
        )));
    }
    let Some(ideal) = ideal.as_squarefree() else {
        return Err(Error::Declined("the dimension filtration needs a squarefree ideal".into()));
    };
    let q_verdicts = verdicts(ideal, ring.q(), field)?;
    if !q_verdicts.seq_cm {
        return Err(Error::Declined(format!(
            "S/I is not sequentially Cohen-Macaulay with respect to Q over {field} (fails at i = {})",
            q_verdicts.failing_index.unwrap_or(0)
        )));
    }
    let filtration = dimension_filtration(ideal, ring.q())?;
    let r = filtration.len();
    let p_prof = profile(&module, ring.p(), field)?;
    let q_prof = profile(&module, ring.q(), field)?;
    let cd_p = p_prof.cd().expect("nonzero");
    let cd_q = q_prof.cd().expect("nonzero");
    let grade_q = q_prof.grade().expect("nonzero");
    let dim = whole.cd;

    let mut lines = Vec::new();
    for i in 1..=r {
        let d = filtration.submodule(i);
        let on_p = grade_cd(&d, ring.p(), field)?;
        let on_q = grade_cd(&d, ring.q(), field)?;
        let on_all = grade_cd(&d, ring.all(), field)?;
        lines.push(InvariantLine {
            name: format!("cd(P, D_{i}) = cd(P, M)"),
            holds: on_p.cd == cd_p,
            detail: format!("{} vs {}", on_p.cd, cd_p),
        });
        lines.push(InvariantLine {
            name: format!("grade(Q, D_{i}) + cd(P, D_{i}) = dim D_{i}"),
            holds: on_q.grade + on_p.cd == on_all.cd,
            detail: format!("{} + {} vs {}", on_q.grade, on_p.cd, on_all.cd),
        });
        lines.push(InvariantLine {
            name: format!("grade(Q, D_{i}) = grade(Q, M)"),
            holds: on_q.grade == grade_q,
            detail: format!("{} vs {}", on_q.grade, grade_q),
        });
    }
    let sum_matches = cd_p + cd_q == dim + r - 1;
    let gap_free = q_prof.is_gap_free();
    lines.push(InvariantLine {
        name: "cd(P, M) + cd(Q, M) = dim M + r - 1  <=>  H^s_Q(M) != 0 for grade <= s <= cd".into(),
        holds: sum_matches == gap_free,
        detail: format!("{cd_p} + {cd_q} vs {dim} + {r} - 1: {sum_matches}; gap-free Q-profile: {gap_free}"),
    });
    if let Some(bad) = lines.iter().find(|l| !l.holds) {
        return Err(Error::Internal(format!("{} failed for {ideal} over {field}: {}", bad.name, bad.detail)));
    }
    Ok(CmInvariantReport { field, r, dim, cd_p, cd_q, grade_q, lines })
}

/// Search bounds and budget for the nonvanishing-interval question.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SearchConfig {
    pub max_x: usize,
    pub max_y: usize,
    pub field: FieldSpec,
    /// Maximum number of ideals scanned.
    pub budget: usize,
    /// Seed for sampling when the space exceeds the budget.
    pub seed: u64,
}

/// Largest `max_x + max_y` the search accepts.
pub const SEARCH_VAR_CAP: usize = 8;

/// One ideal of interest.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Finding {
    pub ideal: SquarefreeIdeal,
    pub q_nonvanishing: Vec<bool>,
    pub p_nonvanishing: Vec<bool>,
    pub counterexample: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SearchOutcome {
    pub exhaustive: bool,
    pub scanned: usize,
    pub cohen_macaulay: usize,
    pub qualifying: usize,
    /// `width_histogram[k]` counts qualifying ideals with `k` nonvanishing
    /// `H^i_Q`.
    pub width_histogram: Vec<usize>,
    /// Counterexamples, plus qualifying ideals with at least three
    /// nonvanishing `H^i_Q`.
    pub findings: Vec<Finding>,
}

impl SearchOutcome {
    pub fn counterexamples(&self) -> impl Iterator<Item = &Finding> {
        self.findings.iter().filter(|f| f.counterexample)
    }

    pub fn summary(&self) -> String {
        let n = self.counterexamples().count();
        if n == 0 {
            format!("no counterexample in search space ({} ideals scanned, {} qualifying)", self.scanned, self.qualifying)
        } else {
            format!("{n} counterexample candidate(s) among {} ideals", self.scanned)
        }
    }
}

/// Number of antichains in the power set of an `n`-set, for `n <= 8`.
const DEDEKIND: [u128; 9] = [2, 3, 6, 20, 168, 7581, 7_828_354, 2_414_682_040_998, 56_130_437_228_687_557_907_788];

/// Rings `(m', n')` inside the bounds, smallest first.
fn search_rings(max_x: usize, max_y: usize) -> Vec<RingSpec> {
    let mut rings: Vec<RingSpec> = (0..=max_x)
        .flat_map(|m| (0..=max_y).filter_map(move |n| RingSpec::new(m, n).ok()))
        .collect();
    rings.sort_by_key(|r| (r.num_vars(), r.m));
    rings
}

/// All proper squarefree ideals of `ring` (the zero ideal included), in a
/// deterministic order.
pub fn all_squarefree_ideals(ring: RingSpec) -> Vec<SquarefreeIdeal> {
    let n = ring.num_vars();
    let subsets: Vec<VarSet> = (1u32..(1 << n)).map(VarSet).collect();
    let mut out = Vec::new();
    let mut chosen: Vec<VarSet> = Vec::new();
    fn rec(ring: RingSpec, subsets: &[VarSet], start: usize, chosen: &mut Vec<VarSet>, out: &mut Vec<SquarefreeIdeal>) {
        out.push(SquarefreeIdeal::new(ring, chosen.iter().copied()).expect("subsets lie in the ring"));
        for i in start..subsets.len() {
            let s = subsets[i];
            if chosen.iter().all(|c| !c.is_subset(s) && !s.is_subset(*c)) {
                chosen.push(s);
                rec(ring, subsets, i + 1, chosen, out);
                chosen.pop();
            }
        }
    }
    rec(ring, &subsets, 0, &mut chosen, &mut out);
    out
}

/// A pseudo-random proper squarefree ideal.
pub fn random_squarefree_ideal<R: rand::Rng>(ring: RingSpec, rng: &mut R) -> SquarefreeIdeal {
    let n = ring.num_vars();
    let count = rng.gen_range(1..=n + 2);
    let gens: Vec<VarSet> = (0..count).map(|_| VarSet(rng.gen_range(1u32..(1 << n)))).collect();
    SquarefreeIdeal::new(ring, minimalize(gens)).expect("subsets lie in the ring")
}

/// Scans squarefree ideals for Cohen–Macaulay `S/I` whose `Q`-profile is
/// nonvanishing on the whole interval `[grade, cd]` and flags those whose
/// `P`-profile has an interior gap.
///
/// `extra` ideals are scanned first (still counted against the budget).
pub fn question_search(config: &SearchConfig, extra: &[SquarefreeIdeal]) -> Result<SearchOutcome> {
    use rand::SeedableRng;
    use rayon::prelude::*;

    let vars = config.max_x + config.max_y;
    if vars > SEARCH_VAR_CAP {
        let estimate = DEDEKIND.get(vars).map_or("more than 10^23".to_string(), |d| d.to_string());
        return Err(Error::Declined(format!(
            "{vars} variables exceed the cap of {SEARCH_VAR_CAP}; the largest ring alone has {estimate} squarefree ideals, each needing up to {} Čech strands",
            3u128.pow(vars as u32)
        )));
    }
    let rings = search_rings(config.max_x, config.max_y);
    let total: u128 = rings.iter().map(|r| DEDEKIND[r.num_vars()] - 1).sum();
    let mut candidates: Vec<SquarefreeIdeal> = extra.iter().take(config.budget).cloned().collect();
    let remaining = config.budget - candidates.len();
    let exhaustive = total <= remaining as u128;
    if exhaustive {
        for ring in &rings {
            candidates.extend(all_squarefree_ideals(*ring));
        }
    } else if let Some(largest) = rings.last() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(config.seed);
        candidates.extend((0..remaining).map(|_| random_squarefree_ideal(*largest, &mut rng)));
    }

    let field = config.field;
    let scanned: Vec<Result<Option<(usize, Finding)>>> = candidates
        .par_iter()
        .map(|ideal| -> Result<Option<(usize, Finding)>> {
            let ring = ideal.ring();
            let module = QuotientModule::cyclic(ideal.clone());
            let (depth, dim) = crate::homology::depth_dim_oracle(ideal, field)?;
            if depth != dim {
                return Ok(None);
            }
            let q = profile(&module, ring.q(), field)?;
            if !q.is_gap_free() {
                return Ok(Some((0, Finding { ideal: ideal.clone(), q_nonvanishing: q.nonvanishing, p_nonvanishing: Vec::new(), counterexample: false })));
            }
            let p = profile(&module, ring.p(), field)?;
            let counterexample = !p.is_gap_free();
            let width = q.nonvanishing_count();
            Ok(Some((width, Finding { ideal: ideal.clone(), q_nonvanishing: q.nonvanishing, p_nonvanishing: p.nonvanishing, counterexample })))
        })
        .collect();

    let mut outcome = SearchOutcome {
        exhaustive,
        scanned: candidates.len(),
        cohen_macaulay: 0,
        qualifying: 0,
        width_histogram: vec![0; config.max_y + 2],
        findings: Vec::new(),
    };
    for item in scanned {
        let Some((width, finding)) = item? else { continue };
        outcome.cohen_macaulay += 1;
        if width == 0 {
            continue;
        }
        outcome.qualifying += 1;
        outcome.width_histogram[width] += 1;
        if finding.counterexample || width >= 3 {
            outcome.findings.push(finding);
        }
    }
    Ok(outcome)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    fn q() -> FieldSpec {
        FieldSpec::RATIONALS
    }

    fn sorted(mut v: Vec<MonomialPrime>) -> Vec<MonomialPrime> {
        v.sort();
        v
    }

    #[test]
    fn rp2_filtration_wrt_p() {
        let i = fixtures::rp2();
        let p = fixtures::rp2_primes();
        let f = dimension_filtration(&i, i.ring().p()).unwrap();
        assert_eq!(f.len(), 3);
        assert_eq!(f.cd_values, vec![0, 1, 2]);
        assert_eq!(f.j(1), intersect_primes(i.ring(), &p[..9]));
        assert_eq!(f.j(2), intersect_primes(i.ring(), &p[..6]));
        f.verify(q()).unwrap();
    }

    #[test]
    fn rp2_filtration_wrt_q() {
        let i = fixtures::rp2();
        let p = fixtures::rp2_primes();
        let f = dimension_filtration(&i, i.ring().q()).unwrap();
        assert_eq!(f.cd_values, vec![1, 2, 3]);
        assert_eq!(f.j(1), intersect_primes(i.ring(), &p[6..]));
        assert_eq!(f.j(2), p[9].to_ideal(i.ring()));
        assert_eq!(f.groups[0], sorted(p[..6].to_vec()));
    }

    #[test]
    fn prime_input_is_relatively_unmixed() {
        let r = RingSpec::new(2, 2).unwrap();
        let prime = MonomialPrime(VarSet::from_vars([0, 3])).to_ideal(r);
        for t in [r.p(), r.q(), r.all()] {
            let f = dimension_filtration(&prime, t).unwrap();
            assert_eq!(f.len(), 1);
            assert_eq!(f.unmixed_ideal(), prime);
        }
    }

    #[test]
    fn moebius_unmixed_components() {
        let i = fixtures::moebius();
        let p = fixtures::moebius_primes();
        assert_eq!(unmixed_component(&i, i.ring().q()).unwrap(), intersect_primes(i.ring(), &p[..4]));
        assert_eq!(unmixed_component(&i, i.ring().all()).unwrap(), i);
    }

    #[test]
    fn rp2_classification() {
        let i = fixtures::rp2();
        let report = classify(&i, i.ring().q(), q()).unwrap();
        assert!(report.relative.seq_cm);
        assert_eq!(report.relative.grade_certificates, vec![1, 2, 3]);
        assert!(!report.relative.cm);
        assert!(report.classical.cm);
        let report = classify(&i, i.ring().p(), q()).unwrap();
        assert!(report.relative.seq_cm);
        assert_eq!(report.relative.grade_certificates, vec![0, 1, 2]);
    }

    #[test]
    fn moebius_classification() {
        let i = fixtures::moebius();
        let rq = classify(&i, i.ring().q(), q()).unwrap();
        assert!(rq.relative.approx_cm);
        assert_eq!(rq.relative.invariants, GradeCd { grade: 1, cd: 2 });
        assert_eq!(rq.relative.unmixed_quotient, GradeCd { grade: 2, cd: 2 });
        assert!(!rq.classical.approx_cm);
        let rp = classify(&i, i.ring().p(), q()).unwrap();
        assert!(rp.relative.approx_cm);
    }

    #[test]
    fn principal_monomial_ideal_is_approximately_cm_wrt_q() {
        let r = RingSpec::new(2, 2).unwrap();
        for gen in [VarSet::from_vars([0, 2]), VarSet::from_vars([0, 1, 2, 3]), VarSet::from_vars([3]), VarSet::from_vars([1])] {
            let i = SquarefreeIdeal::new(r, [gen]).unwrap();
            assert!(classify(&i, r.q(), q()).unwrap().relative.approx_cm, "{i}");
        }
    }

    #[test]
    fn invariants_on_rp2() {
        let report = cm_invariant_report(fixtures::rp2(), q()).unwrap();
        assert_eq!(report.r, 3);
        assert_eq!((report.cd_p, report.cd_q, report.dim), (2, 3, 3));
        assert!(report.lines.iter().all(|l| l.holds));
    }

    #[test]
    fn invariants_decline_non_cm_input() {
        let f2 = FieldSpec::prime(2).unwrap();
        assert!(matches!(cm_invariant_report(fixtures::rp2(), f2), Err(Error::Declined(_))));
        assert!(matches!(cm_invariant_report(fixtures::moebius(), q()), Err(Error::Declined(_))));
    }

    #[test]
    fn invariants_decline_example_with_depth_zero() {
        let err = cm_invariant_report(fixtures::depth_zero_product(), q()).unwrap_err();
        assert!(matches!(&err, Error::Declined(msg) if msg.contains("depth 0 != dim 2")), "{err}");
    }

    #[test]
    fn single_prime_passes_invariants() {
        let r = RingSpec::new(2, 2).unwrap();
        let prime = MonomialPrime(VarSet::from_vars([1, 2])).to_ideal(r);
        let report = cm_invariant_report(prime, q()).unwrap();
        assert_eq!(report.r, 1);
    }

    #[test]
    fn antichain_counts_match_dedekind_numbers() {
        for (n, &count) in DEDEKIND.iter().enumerate().take(5).skip(1) {
            let r = RingSpec::new(n, 0).unwrap();
            // all antichains except the one containing the empty set
            assert_eq!(all_squarefree_ideals(r).len() as u128, count - 1);
        }
    }

    #[test]
    fn zero_budget_scans_nothing() {
        let cfg = SearchConfig { max_x: 2, max_y: 2, field: q(), budget: 0, seed: 0 };
        let out = question_search(&cfg, &[fixtures::rp2()]).unwrap();
        assert_eq!(out.scanned, 0);
        assert!(out.findings.is_empty());
    }

    #[test]
    fn oversized_search_is_declined() {
        let cfg = SearchConfig { max_x: 5, max_y: 4, field: q(), budget: 10, seed: 0 };
        assert!(matches!(question_search(&cfg, &[]), Err(Error::Declined(_))));
    }
}
