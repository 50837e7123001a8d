//! Acceptance suite: eleven end-to-end criteria, one test (and one pass/fail
//! line) per criterion. Heavy enumeration levels are shared through a single
//! cache so the whole suite stays desk-scale.

use std::collections::BTreeSet;
use std::sync::{LazyLock, Mutex, MutexGuard};
use std::time::{Duration, Instant};

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use tourney::verify::{verify_claim, Claim, ClassCache, VerificationReport};
use tourney::parallel;
use tourney_core::{
    all_tournaments, automorphism_count, canonical_code, circular, contains_diamond, e_family,
    embedding_witness, embeds, is_critical, is_indecomposable, nontrivial_intervals,
    u_family, w_family, Tournament, VertexSet,
};

static CACHE: LazyLock<Mutex<ClassCache>> = LazyLock::new(|| Mutex::new(ClassCache::new()));

fn cache() -> MutexGuard<'static, ClassCache> {
    CACHE.lock().expect("no test panicked while holding the cache")
}

fn run(claim: Claim, bound: usize) -> VerificationReport {
    verify_claim(claim, Some(bound), Some(10), &mut cache()).expect("bound is within the guard")
}

fn assert_pass(report: &VerificationReport) {
    assert!(
        report.passed(),
        "claim {} failed at max_n={}: {:?}",
        report.claim,
        report.bounds.max_n,
        report.violations
    );
}

fn code_set<'a>(ts: impl IntoIterator<Item = &'a Tournament>) -> BTreeSet<String> {
    ts.into_iter().map(Tournament::to_string).collect()
}

fn family_codes(size: usize) -> BTreeSet<String> {
    [circular(size), u_family(size), w_family(size)]
        .map(|t| canonical_code(&t.expect("odd size in range")).to_string())
        .into_iter()
        .collect()
}

/// All `k`-subsets of `{0..n}`, precomputed once per scan.
fn k_subsets(n: usize, k: usize) -> Vec<VertexSet> {
    (0u32..1 << n)
        .filter(|m| m.count_ones() as usize == k)
        .map(|m| (0..n).filter(|v| m >> v & 1 == 1).collect())
        .collect()
}

#[test]
fn criterion_01_five_vertex_census_is_instant() {
    let start = Instant::now();
    let classes = all_tournaments(5).expect("order 5 is in range");
    let indec: Vec<Tournament> =
        classes.iter().copied().filter(is_indecomposable).collect();
    let elapsed = start.elapsed();
    assert_eq!(classes.len(), 12, "expected 12 classes on five vertices");
    assert_eq!(indec.len(), 3, "expected 3 indecomposable classes on five vertices");
    assert_eq!(code_set(&indec), family_codes(5));
    for t in &indec {
        assert!(is_critical(t), "five-vertex class {t} should be critical");
    }
    assert!(elapsed < Duration::from_secs(1), "five-vertex census took {elapsed:?}");
    println!("criterion 01 PASS: 12 classes, 3 indecomposable = T/U/W(5), all critical, {elapsed:?}");
}

#[test]
fn criterion_02_critical_census_through_order_seven() {
    let start = Instant::now();
    let mut fresh = ClassCache::new();
    let report = verify_claim(Claim::T1, Some(7), Some(10), &mut fresh)
        .expect("bound is within the guard");
    let elapsed = start.elapsed();
    assert_pass(&report);
    assert_eq!(report.universe.classes, 456, "expected 456 classes on seven vertices");
    assert_eq!(code_set(&fresh.critical(7)), family_codes(7));
    assert!(elapsed < Duration::from_secs(30), "critical census took {elapsed:?}");
    println!("criterion 02 PASS: T1 at 7, 456 classes, critical trio confirmed, {elapsed:?}");
}

#[test]
fn criterion_03_diamond_promotion_has_no_counterexample() {
    let report = run(Claim::T3, 8);
    assert_pass(&report);
    assert!(report.counterexamples.is_empty());
    println!("criterion 03 PASS: T3 at 8, no counterexamples among {} classes", report.universe.classes);
}

#[test]
fn criterion_04_w5_omitting_census_through_order_nine() {
    let report = run(Claim::T2, 9);
    assert_pass(&report);
    // Spot-check the counts behind the set equality: 1 exception at order 6,
    // 3 at order 7, none at 8, 2 at 9.
    let mut counts = Vec::new();
    for n in [6, 7, 8, 9] {
        let (indec, profiles) = {
            let mut cache = cache();
            (cache.indecomposable(n), cache.profiles(n))
        };
        counts.push(profiles.iter().filter(|p| !p.w5).count());
        assert_eq!(indec.len(), profiles.len());
    }
    assert_eq!(counts, [1, 3, 0, 2]);
    println!("criterion 04 PASS: T2 at 9, exception counts by order 6..9 = {counts:?}");
}

#[test]
fn criterion_05_diamond_free_census_through_order_nine() {
    let report = run(Claim::P4, 9);
    assert_pass(&report);
    // Direct spot check at order 7: the only diamond-free indecomposable
    // class is the T member.
    let indec = cache().indecomposable(7);
    let diamond_free = parallel::filter(&indec, |t| !contains_diamond(t));
    let expected: BTreeSet<String> =
        [canonical_code(&circular(7).expect("size 7 is valid")).to_string()]
            .into_iter()
            .collect();
    assert_eq!(code_set(&diamond_free), expected);
    println!("criterion 05 PASS: P4 at 9; T(7) is the lone diamond-free class at 7");
}

#[test]
fn criterion_06_partition_extension_deletion_laws() {
    let l6 = run(Claim::L6, 7);
    let p7 = run(Claim::P7, 7);
    let c8 = run(Claim::C8, 8);
    assert_pass(&l6);
    assert_pass(&p7);
    assert_pass(&c8);
    println!("criterion 06 PASS: L6 at 7, P7 at 7, C8 at 8");
}

#[test]
fn criterion_07_criticality_characterizations_agree() {
    let l12 = run(Claim::L12, 9);
    let c16 = run(Claim::C16, 9);
    assert_pass(&l12);
    assert_pass(&c16);
    println!("criterion 07 PASS: L12 at 9, C16 at 9");
}

#[test]
fn criterion_08_w_members_by_seven_vertex_content() {
    let report = run(Claim::P15, 9);
    assert_pass(&report);
    let w7 = canonical_code(&w_family(7).expect("size 7 is valid")).to_string();
    for n in [7usize, 8, 9] {
        let indec = cache().indecomposable(n);
        let subsets = k_subsets(n, 7);
        let flags = parallel::flags(&indec, |t| {
            let mut some = false;
            for s in &subsets {
                let sub = t.restriction(*s).expect("subset of the vertex set");
                if is_indecomposable(&sub) {
                    some = true;
                    if canonical_code(&sub).to_string() != w7 {
                        return false;
                    }
                }
            }
            some
        });
        let found: Vec<Tournament> = indec
            .iter()
            .zip(&flags)
            .filter_map(|(t, keep)| keep.then_some(*t))
            .collect();
        let expected: BTreeSet<String> = if n % 2 == 1 {
            [canonical_code(&w_family(n).expect("odd size")).to_string()].into_iter().collect()
        } else {
            BTreeSet::new()
        };
        assert_eq!(
            code_set(&found),
            expected,
            "classes with seven-vertex content exactly W(7) at order {n}"
        );
    }
    println!("criterion 08 PASS: P15 at 9; direct scan gives W(7)@7, none@8, W(9)@9");
}

#[test]
fn criterion_09_rotational_structure_of_t_members() {
    let report = run(Claim::R10, 9);
    assert_pass(&report);
    assert_eq!(automorphism_count(&circular(9).expect("size 9 is valid")), 9);
    println!("criterion 09 PASS: R10 at 9");
}

#[test]
fn criterion_10_efg_members_through_order_twelve() {
    let report = run(Claim::R13, 12);
    assert_pass(&report);
    assert!(is_indecomposable(&e_family(12).expect("size 12 is valid")));
    println!("criterion 10 PASS: R13 at 12");
}

#[test]
fn criterion_11_engine_cross_checks() {
    // Interval engines: the closure-based indecomposability test must agree
    // with a from-scratch subset scan on every class through order 6 and on
    // 1000 seeded random tournaments through order 12.
    let mut pool: Vec<Tournament> = Vec::new();
    for n in 1..=6 {
        pool.extend(all_tournaments(n).expect("order in range"));
    }
    let mut rng = StdRng::seed_from_u64(0xC0FFEE);
    for _ in 0..1000 {
        let n: usize = rng.gen_range(1..=12);
        let npairs = n * (n - 1) / 2;
        let mask = if npairs == 0 { 0 } else { u128::MAX >> (128 - npairs) };
        pool.push(Tournament::from_bits(n, rng.gen::<u128>() & mask).expect("bits are masked"));
    }
    let problems: Vec<Option<String>> = parallel::map(&pool, |t| {
        let n = t.order();
        let mut brute: BTreeSet<Vec<usize>> = BTreeSet::new();
        for mask in 0u32..1 << n {
            let size = mask.count_ones() as usize;
            if size < 2 || size >= n {
                continue;
            }
            let members: Vec<usize> = (0..n).filter(|v| mask >> v & 1 == 1).collect();
            let uniform = (0..n).filter(|w| mask >> w & 1 == 0).all(|w| {
                let beats =
                    members.iter().filter(|&&m| t.has_arc(w, m).expect("in range")).count();
                beats == 0 || beats == members.len()
            });
            if uniform {
                brute.insert(members);
            }
        }
        let found: BTreeSet<Vec<usize>> =
            nontrivial_intervals(t).into_iter().map(|s| s.iter().collect()).collect();
        if found != brute {
            return Some(format!("interval lists differ on {t}"));
        }
        if is_indecomposable(t) != brute.is_empty() {
            return Some(format!("indecomposability disagrees with the scan on {t}"));
        }
        None
    });
    assert!(problems.iter().all(Option::is_none), "{problems:?}");

    // Embedding engine: agree with a brute subset-plus-isomorphism oracle on
    // every (pattern, host) pair of classes through order 6, and produce
    // witnesses that really induce the pattern.
    let levels: Vec<Vec<Tournament>> =
        (1..=6).map(|n| all_tournaments(n).expect("order in range")).collect();
    for host in levels.iter().flatten() {
        let n = host.order();
        for pattern in levels[..n].iter().flatten() {
            let k = pattern.order();
            let brute = k_subsets(n, k).into_iter().any(|s| {
                let sub = host.restriction(s).expect("subset of the vertex set");
                canonical_code(&sub) == canonical_code(pattern)
            });
            assert_eq!(
                embeds(pattern, host),
                brute,
                "embedding disagrees with the oracle for {pattern} in {host}"
            );
            if let Some(witness) = embedding_witness(pattern, host) {
                let sub = host.restriction(witness).expect("witness is a vertex subset");
                assert_eq!(
                    canonical_code(&sub),
                    canonical_code(pattern),
                    "witness for {pattern} in {host} does not induce the pattern"
                );
            } else {
                assert!(!brute, "missing witness for {pattern} in {host}");
            }
        }
    }

    // Counting identity: labeled forms counted through class orbits must
    // match the raw 2^(n choose 2) total for every order through 7.
    for n in 1..=7u32 {
        let classes = cache().classes(n as usize);
        let factorial: u64 = (1..=n as u64).product();
        let total: u64 =
            classes.iter().map(|t| factorial / automorphism_count(t)).sum();
        assert_eq!(total, 1u64 << (n * (n - 1) / 2), "orbit identity fails at order {n}");
    }
    println!("criterion 11 PASS: interval, embedding and counting engines agree");
}
