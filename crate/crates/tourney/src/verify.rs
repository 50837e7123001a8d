//! Exhaustive checkers for the structural guarantees the library is built
//! around. Each claim scans a finite universe, an enumerated range of
//! isomorphism classes or a range of family members, and reports every
//! violation it finds, so a pass is a machine check of the guarantee at that
//! scale and a failure carries replayable counterexamples.
//!
//! Checkers go through the public operations of `tourney-core` only; nothing
//! here reaches into engine internals, so a pass certifies the public API.

use std::collections::BTreeSet;
use std::fmt;
use std::sync::Arc;
use std::time::Instant;

use serde::Serialize;
use tourney_core::{
    b6, canonical_code, circular, contains_diamond, criticality_by_seven, diamond,
    e_family, exterior_partition, extend_indecomposable_by_two as extend_by_two, f_family,
    g_family, i5_profile, indecomposable_subtournaments, is_critical, is_indecomposable,
    is_interval, nontrivial_intervals, paley7, removable_vertex, u_family, w_family,
    I5Profile, Tournament, VertexSet, MAX_ENUMERATION_ORDER, MAX_VERTICES,
};

use crate::parallel;

/// Identifiers of the checkable claims, in their standard order.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Claim {
    T1,
    T2,
    T3,
    P4,
    L6,
    P7,
    C8,
    R9,
    R10,
    L11,
    L12,
    R13,
    C14,
    P15,
    C16,
    X17,
}

impl Claim {
    pub const ALL: [Claim; 16] = [
        Claim::T1,
        Claim::T2,
        Claim::T3,
        Claim::P4,
        Claim::L6,
        Claim::P7,
        Claim::C8,
        Claim::R9,
        Claim::R10,
        Claim::L11,
        Claim::L12,
        Claim::R13,
        Claim::C14,
        Claim::P15,
        Claim::C16,
        Claim::X17,
    ];

    pub fn id(self) -> &'static str {
        match self {
            Claim::T1 => "T1",
            Claim::T2 => "T2",
            Claim::T3 => "T3",
            Claim::P4 => "P4",
            Claim::L6 => "L6",
            Claim::P7 => "P7",
            Claim::C8 => "C8",
            Claim::R9 => "R9",
            Claim::R10 => "R10",
            Claim::L11 => "L11",
            Claim::L12 => "L12",
            Claim::R13 => "R13",
            Claim::C14 => "C14",
            Claim::P15 => "P15",
            Claim::C16 => "C16",
            Claim::X17 => "X17",
        }
    }

    pub fn from_id(id: &str) -> Option<Claim> {
        Claim::ALL.into_iter().find(|c| c.id().eq_ignore_ascii_case(id))
    }

    /// One-line statement of what the checker scans for.
    pub fn describes(self) -> &'static str {
        match self {
            Claim::T1 => {
                "critical classes are exactly the three odd rotational families from order 5 up"
            }
            Claim::T2 => {
                "indecomposable classes with no W(5) subtournament form the expected short list"
            }
            Claim::T3 => {
                "an indecomposable class with a diamond and T(5) also contains U(5) and W(5)"
            }
            Claim::P4 => "diamond-free indecomposable classes are exactly the odd T members",
            Claim::L6 => {
                "the exterior partition splits the outside vertices and controls every \
                 decomposable two-point extension"
            }
            Claim::P7 => {
                "an indecomposable subtournament with two outside vertices extends by two of them"
            }
            Claim::C8 => {
                "on even orders any protected vertex leaves another whose deletion stays \
                 indecomposable"
            }
            Claim::R9 => {
                "exactly three indecomposable classes exist on five vertices and every larger \
                 indecomposable class contains one"
            }
            Claim::R10 => {
                "odd T members are regular with cyclic symmetry, dualize by negation, and each \
                 single deletion has one predictable interval"
            }
            Claim::L11 => {
                "inside the three rotational families, indecomposable subtournaments on five or \
                 more vertices match the family on odd counts and vanish on even counts"
            }
            Claim::L12 => {
                "from order 7 up, critical equals having no indecomposable six-vertex \
                 subtournament"
            }
            Claim::R13 => "E, F and G members are indecomposable with fixed five-vertex content",
            Claim::C14 => {
                "classes whose five-vertex content is exactly T(5), or exactly U(5), are the \
                 predicted lists"
            }
            Claim::P15 => {
                "indecomposable seven-vertex content equal to exactly W(7) happens precisely \
                 for odd W members"
            }
            Claim::C16 => {
                "the seven-vertex criticality test agrees with the deletion test on every \
                 indecomposable class"
            }
            Claim::X17 => "survey of classes whose five-vertex content is exactly W(5)",
        }
    }

    /// Default scan bound when `--max-n` is not given.
    pub fn default_bound(self) -> usize {
        match self {
            Claim::T3 | Claim::C8 => 8,
            Claim::L6 | Claim::P7 => 7,
            Claim::R10 | Claim::L11 | Claim::R13 => 11,
            _ => 9,
        }
    }

    /// Largest accepted bound. Enumeration-backed claims stop at the
    /// enumeration guard; family-backed claims stop at the vertex limit.
    pub fn max_bound(self) -> usize {
        match self {
            Claim::R10 | Claim::L11 | Claim::R13 => MAX_VERTICES,
            _ => MAX_ENUMERATION_ORDER,
        }
    }
}

impl fmt::Display for Claim {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.id())
    }
}

/// Errors from claim selection and bound validation.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum VerifyError {
    UnknownClaim { id: String },
    BoundOutOfRange { claim: Claim, max_n: usize, limit: usize },
}

impl fmt::Display for VerifyError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            VerifyError::UnknownClaim { id } => {
                write!(f, "unknown claim id `{id}` (expected one of")?;
                for c in Claim::ALL {
                    write!(f, " {c}")?;
                }
                write!(f, ", or `all`)")
            }
            VerifyError::BoundOutOfRange { claim, max_n, limit } => {
                write!(f, "claim {claim}: max_n {max_n} out of range (1..={limit})")
            }
        }
    }
}

impl std::error::Error for VerifyError {}

/// Shared enumeration levels and per-class analyses, built once and reused
/// across claims. Indexed by order; nothing above the enumeration guard.
pub struct ClassCache {
    all: Vec<Option<Arc<Vec<Tournament>>>>,
    indec: Vec<Option<Arc<Vec<Tournament>>>>,
    crit: Vec<Option<Arc<Vec<bool>>>>,
    prof: Vec<Option<Arc<Vec<I5Profile>>>>,
}

impl ClassCache {
    pub fn new() -> ClassCache {
        ClassCache {
            all: vec![None; MAX_ENUMERATION_ORDER + 1],
            indec: vec![None; MAX_ENUMERATION_ORDER + 1],
            crit: vec![None; MAX_ENUMERATION_ORDER + 1],
            prof: vec![None; MAX_ENUMERATION_ORDER + 1],
        }
    }

    /// Every isomorphism class on `n` vertices, in code order.
    pub fn classes(&mut self, n: usize) -> Arc<Vec<Tournament>> {
        assert!((1..=MAX_ENUMERATION_ORDER).contains(&n), "order {n} outside the enumeration guard");
        if self.all[n].is_none() {
            let level = if n == 1 {
                vec![Tournament::from_arcs(1, &[]).expect("one vertex is valid")]
            } else {
                let prev = self.classes(n - 1);
                parallel::extend_order(&prev)
            };
            self.all[n] = Some(Arc::new(level));
        }
        Arc::clone(self.all[n].as_ref().expect("just built"))
    }

    /// The indecomposable classes on `n` vertices, in code order.
    pub fn indecomposable(&mut self, n: usize) -> Arc<Vec<Tournament>> {
        if self.indec[n].is_none() {
            let classes = self.classes(n);
            let kept = parallel::filter(&classes, is_indecomposable);
            self.indec[n] = Some(Arc::new(kept));
        }
        Arc::clone(self.indec[n].as_ref().expect("just built"))
    }

    /// Criticality flags aligned with `indecomposable(n)`.
    pub fn critical_flags(&mut self, n: usize) -> Arc<Vec<bool>> {
        if self.crit[n].is_none() {
            let indec = self.indecomposable(n);
            let flags = parallel::flags(&indec, is_critical);
            self.crit[n] = Some(Arc::new(flags));
        }
        Arc::clone(self.crit[n].as_ref().expect("just built"))
    }

    /// The critical classes on `n` vertices, in code order.
    pub fn critical(&mut self, n: usize) -> Vec<Tournament> {
        let indec = self.indecomposable(n);
        let flags = self.critical_flags(n);
        indec.iter().zip(flags.iter()).filter(|&(_t, f)| *f).map(|(t, _f)| *t).collect()
    }

    /// Five-vertex content profiles aligned with `indecomposable(n)`.
    pub fn profiles(&mut self, n: usize) -> Arc<Vec<I5Profile>> {
        if self.prof[n].is_none() {
            let indec = self.indecomposable(n);
            let profiles = parallel::map(&indec, i5_profile);
            self.prof[n] = Some(Arc::new(profiles));
        }
        Arc::clone(self.prof[n].as_ref().expect("just built"))
    }
}

impl Default for ClassCache {
    fn default() -> Self {
        ClassCache::new()
    }
}

#[derive(Serialize, Clone, Debug)]
pub struct Bounds {
    pub max_n: usize,
}

/// What was scanned: the top order reached and how many objects sat at it
/// (classes for enumeration-backed claims, family members otherwise).
#[derive(Serialize, Clone, Debug)]
pub struct Universe {
    pub n: usize,
    pub classes: usize,
}

#[derive(Serialize, Clone, Debug)]
pub struct Violation {
    pub code: String,
    pub condition: String,
}

#[derive(Serialize, Clone, Copy, PartialEq, Eq, Debug)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Pass,
    Fail,
}

/// Outcome of one claim check. `counterexamples` lists the distinct offending
/// codes (possibly capped); `violations` pairs those codes with the condition
/// each one broke.
#[derive(Serialize, Clone, Debug)]
pub struct VerificationReport {
    pub claim: String,
    pub bounds: Bounds,
    pub universe: Universe,
    pub verdict: Verdict,
    pub counterexamples: Vec<String>,
    pub violations: Vec<Violation>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub witnesses: Vec<String>,
    pub seconds: f64,
    pub engine: String,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.verdict == Verdict::Pass
    }
}

/// Working state of a single claim scan.
struct Check {
    universe: Universe,
    violations: Vec<Violation>,
    witnesses: Vec<String>,
}

impl Check {
    fn new(universe: Universe) -> Check {
        Check { universe, violations: Vec::new(), witnesses: Vec::new() }
    }

    fn flag(&mut self, code: String, condition: String) {
        self.violations.push(Violation { code, condition });
    }
}

/// Runs one claim at `max_n` (its default bound when `None`). `cap` limits
/// how many distinct counterexample codes the report lists; `None` lists all.
pub fn verify_claim(
    claim: Claim,
    max_n: Option<usize>,
    cap: Option<usize>,
    cache: &mut ClassCache,
) -> Result<VerificationReport, VerifyError> {
    let bound = effective_bound(claim, max_n)?;
    let start = Instant::now();
    let check = run_checker(claim, bound, cache);
    Ok(assemble(claim, bound, check, cap, start.elapsed().as_secs_f64()))
}

/// Runs every claim in standard order against one shared cache. An explicit
/// `max_n` applies to each claim and is validated against every guard first.
pub fn verify_all(
    max_n: Option<usize>,
    cap: Option<usize>,
    cache: &mut ClassCache,
) -> Result<Vec<VerificationReport>, VerifyError> {
    for claim in Claim::ALL {
        effective_bound(claim, max_n)?;
    }
    Claim::ALL
        .into_iter()
        .map(|claim| verify_claim(claim, max_n, cap, cache))
        .collect()
}

fn effective_bound(claim: Claim, max_n: Option<usize>) -> Result<usize, VerifyError> {
    let bound = max_n.unwrap_or_else(|| claim.default_bound());
    let limit = claim.max_bound();
    if bound == 0 || bound > limit {
        return Err(VerifyError::BoundOutOfRange { claim, max_n: bound, limit });
    }
    Ok(bound)
}

fn run_checker(claim: Claim, bound: usize, cache: &mut ClassCache) -> Check {
    match claim {
        Claim::T1 => check_t1(cache, bound),
        Claim::T2 => check_t2(cache, bound),
        Claim::T3 => check_t3(cache, bound, &tourney_core::embeds),
        Claim::P4 => check_p4(cache, bound),
        Claim::L6 => check_l6(cache, bound),
        Claim::P7 => check_p7(cache, bound),
        Claim::C8 => check_c8(cache, bound),
        Claim::R9 => check_r9(cache, bound),
        Claim::R10 => check_r10(bound),
        Claim::L11 => check_l11(bound),
        Claim::L12 => check_l12(cache, bound),
        Claim::R13 => check_r13(bound),
        Claim::C14 => check_c14(cache, bound),
        Claim::P15 => check_p15(cache, bound),
        Claim::C16 => check_c16(cache, bound),
        Claim::X17 => check_x17(cache, bound),
    }
}

fn assemble(
    claim: Claim,
    bound: usize,
    check: Check,
    cap: Option<usize>,
    seconds: f64,
) -> VerificationReport {
    let verdict = if check.violations.is_empty() { Verdict::Pass } else { Verdict::Fail };
    let mut seen = BTreeSet::new();
    let mut counterexamples = Vec::new();
    for v in &check.violations {
        if seen.insert(v.code.clone()) {
            counterexamples.push(v.code.clone());
            if cap.is_some_and(|cap| counterexamples.len() >= cap) {
                break;
            }
        }
    }
    let violations =
        check.violations.into_iter().filter(|v| seen.contains(&v.code)).collect();
    VerificationReport {
        claim: claim.id().to_owned(),
        bounds: Bounds { max_n: bound },
        universe: check.universe,
        verdict,
        counterexamples,
        violations,
        witnesses: check.witnesses,
        seconds,
        engine: format!("tourney {}", env!("CARGO_PKG_VERSION")),
    }
}

// -- shared helpers ---------------------------------------------------------

fn enumeration_universe(cache: &mut ClassCache, bound: usize) -> Universe {
    Universe { n: bound, classes: cache.classes(bound).len() }
}

fn code_of(t: &Tournament) -> String {
    canonical_code(t).to_string()
}

fn family_code(ctor: fn(usize) -> Result<Tournament, tourney_core::FamilyError>, size: usize) -> String {
    code_of(&ctor(size).expect("size was checked by the caller"))
}

/// Compares a found list of canonical representatives against an expected
/// code set, flagging both directions.
fn compare_sets(
    check: &mut Check,
    found: &[Tournament],
    expected: &BTreeSet<String>,
    extra: &str,
    missing: &str,
) {
    let found_codes: BTreeSet<String> = found.iter().map(Tournament::to_string).collect();
    for t in found {
        if !expected.contains(&t.to_string()) {
            check.flag(t.to_string(), extra.to_owned());
        }
    }
    for code in expected {
        if !found_codes.contains(code) {
            check.flag(code.clone(), missing.to_owned());
        }
    }
}

/// Visits every `k`-subset of `{0..n}` until `visit` returns `true`;
/// reports whether any visit did.
fn any_k_subset(n: usize, k: usize, mut visit: impl FnMut(VertexSet) -> bool) -> bool {
    debug_assert!(k >= 1 && n <= MAX_VERTICES);
    if k > n {
        return false;
    }
    let mut mask: u32 = (1 << k) - 1;
    let limit: u32 = 1 << n;
    while mask < limit {
        let set: VertexSet = (0..n).filter(|v| mask >> v & 1 == 1).collect();
        if visit(set) {
            return true;
        }
        let low = mask & mask.wrapping_neg();
        let carry = mask + low;
        mask = (((carry ^ mask) >> 2) / low) | carry;
    }
    false
}

/// Positions inside the sorted `map` of the vertices in `set` (that is, the
/// image of `set` under the relabeling a `subtournament` call performed).
fn positions(map: &[usize], set: VertexSet) -> VertexSet {
    map.iter().enumerate().filter(|(_, v)| set.contains(**v)).map(|(pos, _)| pos).collect()
}

/// Per-class parallel scan that keeps violations in class order.
fn scan_classes(
    check: &mut Check,
    classes: &[Tournament],
    per_class: impl Fn(&Tournament) -> Vec<Violation> + Sync + Send,
) {
    let found = parallel::map(classes, per_class);
    for batch in found {
        check.violations.extend(batch);
    }
}

// -- claim checkers ---------------------------------------------------------

fn check_t1(cache: &mut ClassCache, bound: usize) -> Check {
    let mut check = Check::new(enumeration_universe(cache, bound));
    for m in 2..=bound {
        let critical = cache.critical(m);
        let expected: BTreeSet<String> = if m >= 5 && m % 2 == 1 {
            [family_code(circular, m), family_code(u_family, m), family_code(w_family, m)]
                .into_iter()
                .collect()
        } else {
            BTreeSet::new()
        };
        compare_sets(
            &mut check,
            &critical,
            &expected,
            &format!("critical at order {m} but not a T, U or W member"),
            &format!("expected critical class missing at order {m}"),
        );
    }
    check
}

fn expected_w5_omitting(n: usize) -> BTreeSet<String> {
    let mut expected = BTreeSet::new();
    if n % 2 == 1 && n >= 5 {
        expected.insert(family_code(circular, n));
        expected.insert(family_code(u_family, n));
    }
    if n == 6 {
        expected.insert(code_of(&b6()));
    }
    if n == 7 {
        expected.insert(code_of(&paley7()));
    }
    expected
}

fn check_t2(cache: &mut ClassCache, bound: usize) -> Check {
    let mut check = Check::new(enumeration_universe(cache, bound));
    for n in 5..=bound {
        let indec = cache.indecomposable(n);
        let profiles = cache.profiles(n);
        let found: Vec<Tournament> = indec
            .iter()
            .zip(profiles.iter())
            .filter_map(|(t, p)| (!p.w5).then_some(*t))
            .collect();
        compare_sets(
            &mut check,
            &found,
            &expected_w5_omitting(n),
            &format!("omits W(5) at order {n} but is not on the expected exception list"),
            &format!("expected W(5)-omitting class missing at order {n}"),
        );
    }
    check
}

fn check_t3(
    cache: &mut ClassCache,
    bound: usize,
    embed: &(dyn Fn(&Tournament, &Tournament) -> bool + Sync),
) -> Check {
    let mut check = Check::new(enumeration_universe(cache, bound));
    let d4 = diamond(false);
    let d4d = diamond(true);
    let t5 = circular(5).expect("size 5 is valid");
    let u5 = u_family(5).expect("size 5 is valid");
    let w5 = w_family(5).expect("size 5 is valid");
    for n in 5..=bound {
        let indec = cache.indecomposable(n);
        scan_classes(&mut check, &indec, |t| {
            let premise =
                (embed(&d4, t) || embed(&d4d, t)) && embed(&t5, t);
            if premise && !(embed(&u5, t) && embed(&w5, t)) {
                vec![Violation {
                    code: t.to_string(),
                    condition: "contains a diamond and T(5) but misses U(5) or W(5)".to_owned(),
                }]
            } else {
                Vec::new()
            }
        });
    }
    check
}

fn check_p4(cache: &mut ClassCache, bound: usize) -> Check {
    let mut check = Check::new(enumeration_universe(cache, bound));
    for n in 5..=bound {
        let indec = cache.indecomposable(n);
        let diamond_free = parallel::filter(&indec, |t| !contains_diamond(t));
        let expected: BTreeSet<String> = if n % 2 == 1 {
            [family_code(circular, n)].into_iter().collect()
        } else {
            BTreeSet::new()
        };
        compare_sets(
            &mut check,
            &diamond_free,
            &expected,
            &format!("diamond-free and indecomposable at order {n} but not the T member"),
            &format!("expected diamond-free class missing at order {n}"),
        );
    }
    check
}

/// Eligible bases of `t`: subsets of size at least `min_size` whose induced
/// subtournament is indecomposable, with at least `outside` vertices left.
fn for_each_base(
    t: &Tournament,
    min_size: usize,
    outside: usize,
    mut body: impl FnMut(VertexSet, &Tournament),
) {
    let n = t.order();
    for mask in 0u32..1 << n {
        let size = mask.count_ones() as usize;
        if size < min_size || n - size < outside {
            continue;
        }
        let set: VertexSet = (0..n).filter(|v| mask >> v & 1 == 1).collect();
        let sub = t.restriction(set).expect("subset of the vertex set");
        if is_indecomposable(&sub) {
            body(set, t);
        }
    }
}

fn check_l6(cache: &mut ClassCache, bound: usize) -> Check {
    let cap = bound.min(7);
    let mut check = Check::new(enumeration_universe(cache, cap));
    for n in 3..=cap {
        let classes = cache.classes(n);
        scan_classes(&mut check, &classes, |t| {
            let mut found = Vec::new();
            let mut flag = |condition: String| {
                found.push(Violation { code: t.to_string(), condition });
            };
            for_each_base(t, 3, 0, |x, t| {
                let outside = t.vertices().minus(x);
                let p = match exterior_partition(t, x) {
                    Ok(p) => p,
                    Err(e) => {
                        flag(format!("partition construction failed on base {x}: {e}"));
                        return;
                    }
                };
                let mut total = p.ext().len() + p.bracket().len();
                let mut keyed_outside_base = false;
                for (u, slot) in p.slots() {
                    total += slot.len();
                    keyed_outside_base |= !x.contains(u);
                }
                if keyed_outside_base {
                    flag(format!("a slot of base {x} is keyed by a vertex outside it"));
                }
                if p.covered() != outside || total != outside.len() {
                    flag(format!("parts fail to split the outside of base {x}"));
                    return;
                }
                // Decomposable two-point extensions must collapse exactly as
                // the part containing the first point dictates.
                let decomposes_to = |x: VertexSet, a: usize, b: usize, core: VertexSet| {
                    let s = x.with(a).with(b);
                    let (sub, map) =
                        t.subtournament(s).expect("subset of the vertex set");
                    if is_indecomposable(&sub) {
                        return true;
                    }
                    is_interval(&sub, positions(&map, core))
                        .expect("positions lie inside the subtournament")
                };
                for (u, slot) in p.slots() {
                    for a in slot.iter() {
                        for b in outside.minus(slot).iter() {
                            if !decomposes_to(x, a, b, VertexSet::singleton(u).with(a)) {
                                flag(format!(
                                    "slot pair {{{u},{a}}} not an interval after adding {b} to base {x}"
                                ));
                            }
                        }
                    }
                }
                for a in p.bracket().iter() {
                    for b in outside.minus(p.bracket()).iter() {
                        if !decomposes_to(x, a, b, x.with(b)) {
                            flag(format!(
                                "base plus {b} not an interval after adding bracket vertex {a} to base {x}"
                            ));
                        }
                    }
                }
                for a in p.ext().iter() {
                    for b in p.ext().iter() {
                        if a < b && !decomposes_to(x, a, b, VertexSet::singleton(a).with(b)) {
                            flag(format!(
                                "outsider pair {{{a},{b}}} not an interval over base {x}"
                            ));
                        }
                    }
                }
            });
            found
        });
    }
    check
}

fn check_p7(cache: &mut ClassCache, bound: usize) -> Check {
    let mut check = Check::new(enumeration_universe(cache, bound));
    for n in 5..=bound {
        let indec = cache.indecomposable(n);
        scan_classes(&mut check, &indec, |t| {
            let mut found = Vec::new();
            for_each_base(t, 3, 2, |x, t| match extend_by_two(t, x) {
                Ok((a, b)) => {
                    let bigger = t
                        .restriction(x.with(a).with(b))
                        .expect("extension vertices are in range");
                    if x.contains(a) || x.contains(b) || !is_indecomposable(&bigger) {
                        found.push(Violation {
                            code: t.to_string(),
                            condition: format!(
                                "reported extension ({a},{b}) of base {x} is not indecomposable"
                            ),
                        });
                    }
                }
                Err(e) => found.push(Violation {
                    code: t.to_string(),
                    condition: format!("no two-point extension found for base {x}: {e}"),
                }),
            });
            found
        });
    }
    check
}

fn check_c8(cache: &mut ClassCache, bound: usize) -> Check {
    let mut check = Check::new(enumeration_universe(cache, bound));
    for n in (6..=bound).filter(|n| n % 2 == 0) {
        let indec = cache.indecomposable(n);
        scan_classes(&mut check, &indec, |t| {
            let mut found = Vec::new();
            for keep in 0..t.order() {
                match removable_vertex(t, keep) {
                    Ok(gone) => {
                        let smaller = t
                            .restriction(t.vertices().without(gone))
                            .expect("vertex is in range");
                        if gone == keep || !is_indecomposable(&smaller) {
                            found.push(Violation {
                                code: t.to_string(),
                                condition: format!(
                                    "reported deletion {gone} (protecting {keep}) does not work"
                                ),
                            });
                        }
                    }
                    Err(e) => found.push(Violation {
                        code: t.to_string(),
                        condition: format!("no deletion protects vertex {keep}: {e}"),
                    }),
                }
            }
            found
        });
    }
    check
}

fn check_r9(cache: &mut ClassCache, bound: usize) -> Check {
    let mut check = Check::new(enumeration_universe(cache, bound));
    if bound >= 5 {
        let five = cache.indecomposable(5);
        let expected: BTreeSet<String> =
            [family_code(circular, 5), family_code(u_family, 5), family_code(w_family, 5)]
                .into_iter()
                .collect();
        compare_sets(
            &mut check,
            &five,
            &expected,
            "unexpected indecomposable class at order 5",
            "expected indecomposable class missing at order 5",
        );
    }
    for n in 5..=bound {
        let indec = cache.indecomposable(n);
        let profiles = cache.profiles(n);
        for (t, p) in indec.iter().zip(profiles.iter()) {
            if !p.any() {
                check.flag(
                    t.to_string(),
                    format!("indecomposable at order {n} with no indecomposable five-vertex subtournament"),
                );
            }
        }
    }
    check
}

fn check_r10(bound: usize) -> Check {
    let sizes: Vec<usize> = (5..=bound).filter(|m| m % 2 == 1).collect();
    let mut check = Check::new(Universe { n: bound, classes: sizes.len() });
    for m in sizes {
        let t = circular(m).expect("odd size in range");
        let code = t.to_string();
        let half = (m - 1) / 2;
        if t.score_sequence() != vec![half; m] {
            check.flag(code.clone(), format!("T({m}) is not regular"));
        }
        if tourney_core::automorphism_count(&t) != m as u64 {
            check.flag(code.clone(), format!("T({m}) does not have exactly {m} symmetries"));
        }
        let rotation: Vec<usize> = (0..m).map(|i| (i + 1) % m).collect();
        if t.relabel(&rotation).expect("permutation is valid") != t {
            check.flag(code.clone(), format!("rotation is not a symmetry of T({m})"));
        }
        let negation: Vec<usize> = (0..m).map(|i| (m - i) % m).collect();
        if t.relabel(&negation).expect("permutation is valid") != t.dual() {
            check.flag(code.clone(), format!("negation does not reverse T({m})"));
        }
        for i in 0..m {
            let (sub, map) = t
                .subtournament(t.vertices().without(i))
                .expect("vertex is in range");
            let pair: VertexSet = [(i + half) % m, (i + half + 1) % m].into_iter().collect();
            let expected = positions(&map, pair);
            if nontrivial_intervals(&sub) != vec![expected] {
                check.flag(
                    code.clone(),
                    format!("deleting {i} from T({m}) breaks the predicted interval structure"),
                );
            }
        }
    }
    check
}

fn check_l11(bound: usize) -> Check {
    type Ctor = fn(usize) -> Result<Tournament, tourney_core::FamilyError>;
    let families: [(&str, Ctor); 3] =
        [("T", circular as Ctor), ("U", u_family as Ctor), ("W", w_family as Ctor)];
    let sizes: Vec<usize> = (5..=bound).filter(|m| m % 2 == 1).collect();
    let mut check = Check::new(Universe { n: bound, classes: 3 * sizes.len() });
    for m in sizes {
        for (name, ctor) in families {
            let member = ctor(m).expect("odd size in range");
            for k in 5..=m {
                let classes = indecomposable_subtournaments(&member, k)
                    .expect("k is between 3 and the order");
                if k % 2 == 1 {
                    let expected = family_code(ctor, k);
                    let ok = classes.len() == 1
                        && classes.codes().next().map(|c| c.to_string()) == Some(expected);
                    if !ok {
                        check.flag(
                            member.to_string(),
                            format!(
                                "indecomposable {k}-vertex content of {name}({m}) is not exactly {name}({k})"
                            ),
                        );
                    }
                } else if !classes.is_empty() {
                    check.flag(
                        member.to_string(),
                        format!("{name}({m}) has an indecomposable {k}-vertex subtournament"),
                    );
                }
            }
        }
    }
    check
}

fn check_l12(cache: &mut ClassCache, bound: usize) -> Check {
    let mut check = Check::new(enumeration_universe(cache, bound));
    for n in 7..=bound {
        let indec = cache.indecomposable(n);
        let crit = cache.critical_flags(n);
        let pairs: Vec<(Tournament, bool)> =
            indec.iter().copied().zip(crit.iter().copied()).collect();
        scan_classes(&mut check, &indec, |t| {
            let critical = pairs
                .binary_search_by(|(u, _)| u.cmp(t))
                .map(|i| pairs[i].1)
                .expect("class list is sorted and contains t");
            let has_six = any_k_subset(t.order(), 6, |s| {
                is_indecomposable(&t.restriction(s).expect("subset of the vertex set"))
            });
            match (critical, has_six) {
                (true, true) => vec![Violation {
                    code: t.to_string(),
                    condition: "critical yet contains an indecomposable six-vertex subtournament"
                        .to_owned(),
                }],
                (false, false) => vec![Violation {
                    code: t.to_string(),
                    condition: "no indecomposable six-vertex subtournament yet not critical"
                        .to_owned(),
                }],
                _ => Vec::new(),
            }
        });
    }
    check
}

fn check_r13(bound: usize) -> Check {
    type Ctor = fn(usize) -> Result<Tournament, tourney_core::FamilyError>;
    let want = |t5, u5, w5| I5Profile { t5, u5, w5 };
    let families: [(&str, Ctor, I5Profile); 3] = [
        ("E", e_family as Ctor, want(true, true, true)),
        ("F", f_family as Ctor, want(false, false, true)),
        ("G", g_family as Ctor, want(false, true, true)),
    ];
    let sizes: Vec<usize> = (6..=bound).collect();
    let mut check = Check::new(Universe { n: bound, classes: 3 * sizes.len() });
    for size in sizes {
        for (name, ctor, expected) in families {
            let member = ctor(size).expect("size in range");
            if !is_indecomposable(&member) {
                check.flag(member.to_string(), format!("{name}({size}) is decomposable"));
            }
            let profile = i5_profile(&member);
            if profile != expected {
                check.flag(
                    member.to_string(),
                    format!(
                        "five-vertex content of {name}({size}) is {profile}, expected {expected}"
                    ),
                );
            }
        }
    }
    check
}

fn check_c14(cache: &mut ClassCache, bound: usize) -> Check {
    let mut check = Check::new(enumeration_universe(cache, bound));
    for n in 5..=bound {
        let indec = cache.indecomposable(n);
        let profiles = cache.profiles(n);
        let with = |want: I5Profile| -> Vec<Tournament> {
            indec
                .iter()
                .zip(profiles.iter())
                .filter_map(|(t, p)| (*p == want).then_some(*t))
                .collect()
        };
        let only_t5 = with(I5Profile { t5: true, u5: false, w5: false });
        let expected_t5: BTreeSet<String> = if n % 2 == 1 {
            [family_code(circular, n)].into_iter().collect()
        } else {
            BTreeSet::new()
        };
        compare_sets(
            &mut check,
            &only_t5,
            &expected_t5,
            &format!("five-vertex content exactly T(5) at order {n} but not the T member"),
            &format!("expected class with content exactly T(5) missing at order {n}"),
        );
        let only_u5 = with(I5Profile { t5: false, u5: true, w5: false });
        let mut expected_u5: BTreeSet<String> = if n % 2 == 1 {
            [family_code(u_family, n)].into_iter().collect()
        } else {
            BTreeSet::new()
        };
        if n == 6 {
            expected_u5.insert(code_of(&b6()));
        }
        if n == 7 {
            expected_u5.insert(code_of(&paley7()));
        }
        compare_sets(
            &mut check,
            &only_u5,
            &expected_u5,
            &format!("five-vertex content exactly U(5) at order {n} but not on the expected list"),
            &format!("expected class with content exactly U(5) missing at order {n}"),
        );
    }
    check
}

fn check_p15(cache: &mut ClassCache, bound: usize) -> Check {
    let mut check = Check::new(enumeration_universe(cache, bound));
    let w7 = family_code(w_family, 7);
    for n in 7..=bound {
        let indec = cache.indecomposable(n);
        let expected_code =
            if n % 2 == 1 { Some(family_code(w_family, n)) } else { None };
        scan_classes(&mut check, &indec, |t| {
            let mut some = false;
            let mut all = true;
            any_k_subset(t.order(), 7, |s| {
                let sub = t.restriction(s).expect("subset of the vertex set");
                if is_indecomposable(&sub) {
                    some = true;
                    if code_of(&sub) != w7 {
                        all = false;
                        return true;
                    }
                }
                false
            });
            let has_exactly_w7 = some && all;
            let code = t.to_string();
            let is_w_member = expected_code.as_deref() == Some(code.as_str());
            match (has_exactly_w7, is_w_member) {
                (true, false) => vec![Violation {
                    code: t.to_string(),
                    condition: format!(
                        "seven-vertex content exactly W(7) at order {n} but not the W member"
                    ),
                }],
                (false, true) => vec![Violation {
                    code: t.to_string(),
                    condition: format!(
                        "W({n}) does not have seven-vertex content exactly W(7)"
                    ),
                }],
                _ => Vec::new(),
            }
        });
    }
    check
}

fn check_c16(cache: &mut ClassCache, bound: usize) -> Check {
    let mut check = Check::new(enumeration_universe(cache, bound));
    for n in 7..=bound {
        let indec = cache.indecomposable(n);
        let crit = cache.critical_flags(n);
        let pairs: Vec<(Tournament, bool)> =
            indec.iter().copied().zip(crit.iter().copied()).collect();
        scan_classes(&mut check, &indec, |t| {
            let direct = pairs
                .binary_search_by(|(u, _)| u.cmp(t))
                .map(|i| pairs[i].1)
                .expect("class list is sorted and contains t");
            let by_seven =
                criticality_by_seven(t).expect("indecomposable host of order at least 7");
            if direct != by_seven {
                vec![Violation {
                    code: t.to_string(),
                    condition: format!(
                        "seven-vertex criticality test says {by_seven}, deletion test says {direct}"
                    ),
                }]
            } else {
                Vec::new()
            }
        });
    }
    check
}

fn check_x17(cache: &mut ClassCache, bound: usize) -> Check {
    let mut check = Check::new(enumeration_universe(cache, bound));
    let want = I5Profile { t5: false, u5: false, w5: true };
    for n in 5..=bound {
        let indec = cache.indecomposable(n);
        let profiles = cache.profiles(n);
        for (t, p) in indec.iter().zip(profiles.iter()) {
            if *p == want {
                check.witnesses.push(t.to_string());
            }
        }
    }
    check
}

#[cfg(test)]
mod tests {
    use super::*;
    use tourney_core::{are_isomorphic, embeds};

    fn quick(claim: Claim, max_n: usize) -> VerificationReport {
        let mut cache = ClassCache::new();
        verify_claim(claim, Some(max_n), Some(10), &mut cache).unwrap()
    }

    #[test]
    fn claim_ids_round_trip() {
        for claim in Claim::ALL {
            assert_eq!(Claim::from_id(claim.id()), Some(claim));
            assert_eq!(Claim::from_id(&claim.id().to_lowercase()), Some(claim));
        }
        assert_eq!(Claim::from_id("nope"), None);
    }

    #[test]
    fn bounds_are_validated() {
        let mut cache = ClassCache::new();
        let err = verify_claim(Claim::T1, Some(12), None, &mut cache).unwrap_err();
        assert!(matches!(err, VerifyError::BoundOutOfRange { limit: 10, .. }));
        let err = verify_claim(Claim::T1, Some(0), None, &mut cache).unwrap_err();
        assert!(matches!(err, VerifyError::BoundOutOfRange { .. }));
        assert!(verify_claim(Claim::R10, Some(13), None, &mut cache).is_ok());
    }

    #[test]
    fn small_bounds_pass_quickly() {
        for (claim, bound) in [
            (Claim::T1, 6),
            (Claim::T2, 6),
            (Claim::T3, 6),
            (Claim::P4, 6),
            (Claim::L6, 5),
            (Claim::P7, 6),
            (Claim::C8, 6),
            (Claim::R9, 6),
            (Claim::R10, 7),
            (Claim::L11, 7),
            (Claim::L12, 7),
            (Claim::R13, 7),
            (Claim::C14, 6),
            (Claim::P15, 7),
            (Claim::C16, 7),
        ] {
            let report = quick(claim, bound);
            assert!(
                report.passed(),
                "claim {claim} failed at bound {bound}: {:?}",
                report.violations
            );
            assert!(report.counterexamples.is_empty());
        }
    }

    #[test]
    fn survey_lists_w5_like_classes() {
        let report = quick(Claim::X17, 6);
        assert!(report.passed());
        let w5 = family_code(w_family, 5);
        assert!(report.witnesses.contains(&w5));
        assert!(!report.witnesses.is_empty());
    }

    #[test]
    fn universe_reflects_the_top_order() {
        let report = quick(Claim::T1, 6);
        assert_eq!(report.universe.n, 6);
        assert_eq!(report.universe.classes, 56);
        assert_eq!(report.bounds.max_n, 6);
    }

    // A checker wired to an embedding engine that cannot see W(5) must fail
    // and name a concrete class that needs it.
    #[test]
    fn blind_engine_is_caught() {
        let w5 = w_family(5).unwrap();
        let blind = move |pattern: &Tournament, host: &Tournament| {
            if are_isomorphic(pattern, &w5) {
                false
            } else {
                embeds(pattern, host)
            }
        };
        let mut cache = ClassCache::new();
        let check = check_t3(&mut cache, 6, &blind);
        let report = assemble(Claim::T3, 6, check, Some(10), 0.0);
        assert_eq!(report.verdict, Verdict::Fail);
        let e6 = code_of(&e_family(6).unwrap());
        assert!(
            report.counterexamples.contains(&e6),
            "expected {e6} among {:?}",
            report.counterexamples
        );
    }

    #[test]
    fn counterexample_cap_is_honored() {
        let filled = || {
            let mut check = Check::new(Universe { n: 3, classes: 2 });
            for i in 0..30 {
                check.flag(format!("3:{:03b}", i % 8), "synthetic".to_owned());
            }
            check
        };
        let report = assemble(Claim::T1, 3, filled(), Some(5), 0.0);
        assert_eq!(report.counterexamples.len(), 5);
        assert_eq!(report.verdict, Verdict::Fail);
        let lifted = assemble(Claim::T1, 3, filled(), None, 0.0);
        assert_eq!(lifted.counterexamples.len(), 8);
        assert_eq!(lifted.violations.len(), 30);
    }

    #[test]
    fn reports_serialize_with_stable_fields() {
        let report = quick(Claim::T1, 5);
        let json = serde_json::to_value(&report).unwrap();
        assert_eq!(json["claim"], "T1");
        assert_eq!(json["verdict"], "pass");
        assert_eq!(json["universe"]["classes"], 12);
        assert!(json["seconds"].is_number());
        assert!(json.get("witnesses").is_none(), "empty witness list must be skipped");
        let survey = quick(Claim::X17, 5);
        let json = serde_json::to_value(&survey).unwrap();
        assert!(json["witnesses"].is_array());
    }

    #[test]
    fn shared_cache_is_reused_across_claims() {
        let mut cache = ClassCache::new();
        let first = verify_claim(Claim::R9, Some(6), None, &mut cache).unwrap();
        let second = verify_claim(Claim::C14, Some(6), None, &mut cache).unwrap();
        assert!(first.passed() && second.passed());
        let held = cache.indecomposable(6);
        assert!(Arc::strong_count(&held) > 1, "cache should hold the level it built");
    }
}
