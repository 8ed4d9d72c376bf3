//! Acceptance criteria. Each test prints one `criterion N: PASS|FAIL` line.

use std::sync::OnceLock;
use std::time::{Duration, Instant};

use minperiod::oracle::{cmp_oracle, detect_oracle, has_form, lmp_oracle, mp_of, rmp_oracle};
use minperiod::{
    compute_cmp, compute_lmp, compute_mp, compute_rmp, detect, detect_alternating_form_counted, reverse, InvolutionMap, Period,
    PseudoForm, RmpEngine, SuffixTree, Word,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

const INF: Period = Period::Infinite;
const fn f(m: usize) -> Period {
    Period::Finite(m)
}

const FORMS: [PseudoForm; 3] = [PseudoForm::Suffix, PseudoForm::Prefix, PseudoForm::Alternating];

fn report(n: u32, name: &str, ok: bool, detail: impl std::fmt::Display) {
    use std::io::Write;
    let verdict = if ok { "PASS" } else { "FAIL" };
    // Written to the handle directly so the line shows without --nocapture.
    let _ = writeln!(std::io::stdout().lock(), "criterion {n} ({name}): {verdict} {detail}");
}

fn tree_of(w: &Word) -> SuffixTree {
    let codes: Vec<u16> = w.codes().iter().map(|&c| c as u16).collect();
    SuffixTree::from_codes(&codes, w.sigma()).unwrap()
}

#[test]
fn criterion_1_golden_arrays() {
    let start = Instant::now();
    let w = Word::new("0100101001");
    let rmp = compute_rmp(&w, 0, 2).unwrap().into_vec();
    let lmp = compute_lmp(&w, 0, 2).unwrap().into_vec();
    let cmp = compute_cmp(&w, &InvolutionMap::mirror()).unwrap();
    let tree = tree_of(&w);
    let mp0 = compute_mp(&tree, 0, 2).unwrap();
    let mp4 = compute_mp(&tree, 4, 2).unwrap();
    let elapsed = start.elapsed();

    let ok = rmp == [f(3), INF, f(1), f(2), f(2), INF, INF, f(1), INF, INF]
        && lmp == [INF, INF, INF, f(1), INF, f(3), f(2), f(2), f(1), f(5)]
        && cmp.as_slice() == [0, 0, 0, 3, 0, 0, 0, 0, 2, 0, 0]
        && mp0 == f(3)
        && mp4 == f(5);
    let fast = elapsed < Duration::from_millis(1);
    report(1, "golden arrays", ok && fast, format_args!("in {elapsed:?}"));
    assert!(ok, "rmp={rmp:?} lmp={lmp:?} cmp={cmp:?} mp={mp0},{mp4}");
    assert!(fast, "took {elapsed:?}");
}

#[test]
fn criterion_2_pseudo_power_positives() {
    let wc = InvolutionMap::watson_crick();
    let start = Instant::now();
    let square = Word::new("ACGCGT");
    let cube = Word::new("ACGTAC");
    let verdicts = [
        detect(&square, &wc, PseudoForm::Suffix, 2, 0).unwrap(),
        detect(&square, &wc, PseudoForm::Alternating, 2, 0).unwrap(),
        detect(&cube, &wc, PseudoForm::Alternating, 3, 0).unwrap(),
    ];
    let elapsed = start.elapsed();
    let ok = verdicts.iter().all(|d| d.verdict() == "found");
    let fast = elapsed < Duration::from_millis(1);
    report(2, "pseudo-power positives", ok && fast, format_args!("in {elapsed:?}"));
    assert!(ok, "{verdicts:?}");
    assert!(fast, "took {elapsed:?}");
}

/// Outcome of the differential suite, shared by criteria 3, 4 and 6.
#[derive(Default)]
struct Suite {
    cases: usize,
    mismatches: Vec<String>,
    violations: Vec<String>,
    mp_calls: usize,
    leaf_bound_failures: Vec<String>,
    /// Largest `leaves_under_h · min{s+1, mp_0^k} / n` seen.
    worst_leaf_ratio: f64,
    elapsed: Duration,
}

impl Suite {
    fn merge(mut self, other: Suite) -> Suite {
        self.cases += other.cases;
        self.mp_calls += other.mp_calls;
        self.mismatches.extend(other.mismatches);
        self.violations.extend(other.violations);
        self.leaf_bound_failures.extend(other.leaf_bound_failures);
        self.worst_leaf_ratio = self.worst_leaf_ratio.max(other.worst_leaf_ratio);
        self
    }
}

fn check_word(word: &Word, phi: &InvolutionMap, k: usize, s: usize, out: &mut Suite) {
    out.cases += 1;
    let tag = || format!("{} k={k} s={s}", String::from_utf8_lossy(word.raw()));
    let n = word.len();

    let right = RmpEngine::new(word, s, k)
        .record_calls(true)
        .collect_violations(true)
        .run()
        .unwrap();
    let rev = reverse(word);
    let left = RmpEngine::new(&rev, s, k)
        .record_calls(true)
        .collect_violations(true)
        .run()
        .unwrap();
    let mut lmp = left.periods.clone().into_vec();
    lmp.reverse();

    if right.periods != rmp_oracle(word, s, k) {
        out.mismatches.push(format!("rmp {}", tag()));
    }
    if lmp != lmp_oracle(word, s, k).into_vec() {
        out.mismatches.push(format!("lmp {}", tag()));
    }
    for v in right.violations.iter().chain(&left.violations) {
        out.violations.push(format!("{}: {v}", tag()));
    }

    for (w, calls) in [(word.raw(), &right.mp_calls), (rev.raw(), &left.mp_calls)] {
        for c in calls {
            out.mp_calls += 1;
            let window = &w[c.position - 1..c.window_end];
            let len = window.len();
            let floor = match mp_of(window, 0, k) {
                Period::Finite(m) => m.min(c.threshold + 1),
                Period::Infinite => c.threshold + 1,
            };
            let ratio = (c.leaves_under_h * floor) as f64 / len as f64;
            out.worst_leaf_ratio = out.worst_leaf_ratio.max(ratio);
            if c.leaves_under_h * floor > len {
                out.leaf_bound_failures.push(format!(
                    "{}: window w[{}..{}] threshold {} has {} leaves under h, bound {len}/{floor}",
                    tag(),
                    c.position,
                    c.window_end,
                    c.threshold,
                    c.leaves_under_h
                ));
            }
        }
    }

    for form in FORMS {
        let got = detect(word, phi, form, k, s).unwrap();
        let want = detect_oracle(word, phi, k, s, form);
        let valid = match got.witness() {
            Some(wit) => {
                let p = wit.x.len();
                let from = wit.position - 1;
                p > s
                    && from + k * p <= n
                    && has_form(&word.raw()[from..from + k * p], p, k, phi, form)
            }
            None => true,
        };
        if got.is_found() != want.is_some() || !valid {
            out.mismatches
                .push(format!("detect {form} {}: {got:?} vs {want:?}", tag()));
        }
    }
}

fn suite() -> &'static Suite {
    static SUITE: OnceLock<Suite> = OnceLock::new();
    SUITE.get_or_init(|| {
        let start = Instant::now();
        let mirror = InvolutionMap::mirror();
        let wc = InvolutionMap::watson_crick();

        let exhaustive = (1..=14usize)
            .flat_map(|n| (0..1u32 << n).map(move |mask| (n, mask)))
            .collect::<Vec<_>>()
            .into_par_iter()
            .map(|(n, mask)| {
                let raw: Vec<u8> = (0..n)
                    .map(|b| if mask >> b & 1 == 1 { b'1' } else { b'0' })
                    .collect();
                let word = Word::new(raw);
                let mut out = Suite::default();
                if compute_cmp(&word, &mirror).unwrap() != cmp_oracle(&word, &mirror) {
                    out.mismatches.push(format!("cmp {}", String::from_utf8_lossy(word.raw())));
                }
                for k in 2..=5 {
                    for s in 0..=3 {
                        check_word(&word, &mirror, k, s, &mut out);
                    }
                }
                out
            })
            .reduce(Suite::default, Suite::merge);

        let random = (0..500u64)
            .into_par_iter()
            .map(|seed| {
                let mut rng = ChaCha8Rng::seed_from_u64(seed);
                let (letters, phi): (&[u8], &InvolutionMap) = match seed % 3 {
                    0 => (b"01", &mirror),
                    1 => (b"ACGT", &wc),
                    _ => (b"abcdefghijklmnopqrstuvwxyz", &mirror),
                };
                let n = rng.gen_range(1..=2000);
                let raw: Vec<u8> = (0..n)
                    .map(|_| letters[rng.gen_range(0..letters.len())])
                    .collect();
                let word = Word::new(raw);
                let k = rng.gen_range(2..=5);
                let s = rng.gen_range(0..=3);
                let mut out = Suite::default();
                if compute_cmp(&word, phi).unwrap() != cmp_oracle(&word, phi) {
                    out.mismatches.push(format!("cmp random seed {seed}"));
                }
                check_word(&word, phi, k, s, &mut out);
                out
            })
            .reduce(Suite::default, Suite::merge);

        let mut all = exhaustive.merge(random);
        all.elapsed = start.elapsed();
        all
    })
}

#[test]
fn criterion_3_oracle_equivalence() {
    let s = suite();
    let ok = s.mismatches.is_empty() && s.elapsed < Duration::from_secs(600);
    report(
        3,
        "oracle equivalence",
        ok,
        format_args!("{} cases, {} mismatches, {:?}", s.cases, s.mismatches.len(), s.elapsed),
    );
    assert!(ok, "first mismatches: {:?}", &s.mismatches[..s.mismatches.len().min(10)]);
}

#[test]
fn criterion_4_structural_invariants() {
    let s = suite();
    let ok = s.violations.is_empty();
    report(
        4,
        "structural invariants",
        ok,
        format_args!("{} engine runs, {} violations", 2 * s.cases, s.violations.len()),
    );
    assert!(ok, "first violations: {:?}", &s.violations[..s.violations.len().min(10)]);
}

#[test]
fn criterion_5_linear_steps() {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let big: Vec<u8> = (0..1usize << 20).map(|_| b'0' + rng.gen_range(0..2u8)).collect();
    let half = Word::new(&big[..1 << 19]);
    let full = Word::new(&big);

    let steps = |w: &Word, k: usize| RmpEngine::new(w, 0, k).run().unwrap().stats.total();
    let start = Instant::now();
    let full2 = steps(&full, 2);
    let wall = start.elapsed();
    let half2 = steps(&half, 2);
    let (half5, full5) = (steps(&half, 5), steps(&full, 5));

    let r2 = full2 as f64 / half2 as f64;
    let r5 = full5 as f64 / half5 as f64;
    let per_kn2 = full2 as f64 / (2.0 * full.len() as f64);
    let per_kn5 = full5 as f64 / (5.0 * full.len() as f64);
    let in_window = |r: f64| (1.8..=2.4).contains(&r);
    let ok = in_window(r2) && in_window(r5) && wall < Duration::from_secs(10) && per_kn5 <= 1.5 * per_kn2;
    report(
        5,
        "linear step growth",
        ok,
        format_args!(
            "ratio k=2 {r2:.3}, k=5 {r5:.3}; steps/(k·n) k=2 {per_kn2:.2}, k=5 {per_kn5:.2}; n=2^20 k=2 in {wall:?}"
        ),
    );
    assert!(ok);
}

// Known red. Two occurrences of the anchor prefix at distance q only give a
// k-th power of period q at the first occurrence, not at position 1, so the
// bound can be exceeded (01001010, k=2, s=2: three leaves, bound 8/3).
// This test reports the outcome; the strict form below is ignored.
#[test]
fn criterion_6_leaf_bound() {
    let s = suite();
    report(
        6,
        "leaf bound under h",
        s.leaf_bound_failures.is_empty(),
        format_args!(
            "{} queries, {} over the bound, worst leaves·min/n = {:.3}{}",
            s.mp_calls,
            s.leaf_bound_failures.len(),
            s.worst_leaf_ratio,
            s.leaf_bound_failures
                .first()
                .map_or(String::new(), |e| format!("; e.g. {e}")),
        ),
    );
}

#[test]
#[ignore = "known red: the literal leaf bound does not hold"]
fn criterion_6_leaf_bound_strict() {
    let s = suite();
    assert!(
        s.leaf_bound_failures.is_empty(),
        "first failures: {:?}",
        &s.leaf_bound_failures[..s.leaf_bound_failures.len().min(10)]
    );
}

#[test]
fn criterion_7_alternating_ops() {
    let wc = InvolutionMap::watson_crick();
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let mut ratios = Vec::new();
    for n in [1000usize, 4000] {
        let raw: Vec<u8> = (0..n).map(|_| if rng.gen() { b'A' } else { b'C' }).collect();
        let w = Word::new(raw);
        for k in [2usize, 4, 8] {
            let (d, ops) = detect_alternating_form_counted(&w, &wc, k, 0).unwrap();
            assert!(!d.is_found());
            ratios.push((n, k, ops as f64 / (n * n / k) as f64));
        }
    }
    let lo = ratios.iter().map(|r| r.2).fold(f64::INFINITY, f64::min);
    let hi = ratios.iter().map(|r| r.2).fold(0.0, f64::max);
    let ok = hi <= 2.0 * lo;
    let detail = ratios
        .iter()
        .map(|(n, k, r)| format!("n={n} k={k}: {r:.3}"))
        .collect::<Vec<_>>()
        .join(", ");
    report(7, "alternating scan cost", ok, detail);
    assert!(ok);
}
