//! Acceptance criteria. Runs without the libtest harness so that every
//! criterion prints exactly one PASS/FAIL line, then exits non-zero if any
//! failed.

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::process::Command;
use std::time::{Duration, Instant};

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use softtop::connectivity::{is_soft_connected, is_soft_path};
use softtop::instances::{
    constant_path_2, crossed_pair_space, jump_path_1_3, nested_pair_space, random_rational, single_point_pair,
};
use softtop::real_line::{
    affine_image, convex_combination_path, int, is_soft_path_affine, rat, ExtRational, Interval, IntervalSet,
    SoftIntervalSet,
};
use softtop::soft::{soft_intersection, soft_union};
use softtop::suite::run_suite;
use softtop::topology::{inverse_images_all_open, is_soft_continuous};
use softtop::{PropertyCase, SoftMapping, SoftSet, SuiteConfig};

// Pinned limits.
const EXAMPLE_LIMIT: Duration = Duration::from_millis(1);
const INTERVAL_LIMIT: Duration = Duration::from_millis(10);
const EXHAUSTIVE_LIMIT: Duration = Duration::from_secs(60);
const ORACLE_LIMIT: Duration = Duration::from_secs(300);
const GROUP_LIMIT: Duration = Duration::from_secs(120);
const CATEGORY_LIMIT: Duration = Duration::from_secs(120);
const REAL_LIMIT: Duration = Duration::from_secs(5);

const RANDOM_INTERVAL_PAIRS: usize = 20;
const RANDOM_CONVEX_PATHS: usize = 20;
const ORACLE_RANDOM_SPACES: usize = 1000;
const ORACLE_RANDOM_MINIMUM: usize = 500;
const PARTITION_CANDIDATES: usize = 200;
const NON_INTERVALS: usize = 50;
const IVT_CASES: usize = 100;

/// Outcome of one criterion: `Err` carries the reason for failure.
type Check = Result<String, String>;

fn ensure(ok: bool, why: impl FnOnce() -> String) -> Result<(), String> {
    if ok { Ok(()) } else { Err(why()) }
}

fn within(elapsed: Duration, limit: Duration) -> Result<(), String> {
    ensure(elapsed < limit, || format!("took {elapsed:?}, limit {limit:?}"))
}

fn suite(ids: &[&str], seed: u64, budget: usize, threads: Option<usize>) -> Result<Vec<PropertyCase>, String> {
    let ids: Vec<String> = ids.iter().map(|s| s.to_string()).collect();
    run_suite(&ids, &SuiteConfig { seed, budget, threads }).map_err(|e| e.to_string())
}

fn all_hold(cases: &[PropertyCase]) -> Result<usize, String> {
    match cases.iter().find(|c| !c.holds()) {
        Some(c) => Err(format!("violation: {}", c.line())),
        None => Ok(cases.iter().map(|c| c.checked).sum()),
    }
}

fn continuous_without_open_preimages() -> Check {
    let (z, z2, h) = single_point_pair();
    let id = SoftMapping::identity(z.universe().clone(), z.params().clone());
    let start = Instant::now();
    let continuous = is_soft_continuous(&id, &z, &z2).map_err(|e| e.to_string())?;
    let preimages = inverse_images_all_open(&id, &z, &z2).map_err(|e| e.to_string())?;
    let elapsed = start.elapsed();
    let pair = (continuous.holds(), preimages.holds());
    ensure(pair == (true, false), || format!("verdict pair {pair:?}"))?;
    ensure(preimages.witness() == Some(&h), || format!("witness {:?}", preimages.witness()))?;
    within(elapsed, EXAMPLE_LIMIT)?;
    Ok(format!("(continuous, preimages open) = (true, false) in {elapsed:?}"))
}

fn crossed_opens() -> Check {
    let (t, u, v) = crossed_pair_space();
    let (x, p) = (t.universe().clone(), t.params().clone());
    let start = Instant::now();
    let join = soft_union(&u, &v).map_err(|e| e.to_string())?;
    let meet = soft_intersection(&u, &v).map_err(|e| e.to_string())?;
    let no_elements = (0..x.len()).all(|i| !u.has_soft_element(i) && !v.has_soft_element(i));
    let connected = is_soft_connected(&t).connected;
    let elapsed = start.elapsed();
    ensure(join == SoftSet::absolute(x.clone(), p.clone()), || format!("U⊔V = {join}"))?;
    ensure(meet == SoftSet::empty(x, p), || format!("U⊓V = {meet}"))?;
    ensure(no_elements, || "some point is a soft element of U or V".into())?;
    ensure(connected, || "space reported disconnected".into())?;
    within(elapsed, EXAMPLE_LIMIT)?;
    Ok(format!("U⊔V absolute, U⊓V empty, no soft elements, connected in {elapsed:?}"))
}

fn doubling_and_convex() -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    let pairs: Vec<_> = (0..RANDOM_INTERVAL_PAIRS)
        .map(|_| (random_rational(&mut rng, 0, 1, 24), random_rational(&mut rng, 1, 4, 24)))
        .filter(|(_, e)| *e > int(0))
        .collect();
    let ends: Vec<_> = (0..RANDOM_CONVEX_PATHS)
        .map(|_| (random_rational(&mut rng, -20, 20, 12), random_rational(&mut rng, -20, 20, 12)))
        .collect();
    ensure(pairs.len() == RANDOM_INTERVAL_PAIRS, || "zero epsilon drawn".into())?;
    let start = Instant::now();
    let gamma = convex_combination_path(int(0), int(2));
    ensure(is_soft_path_affine(&gamma), || "2t is not a soft path".into())?;
    for (a, b) in &ends {
        let p = convex_combination_path(a.clone(), b.clone());
        ensure(is_soft_path_affine(&p) && p.start() == *a && p.end() == *b, || format!("convex path {a} -> {b}"))?;
    }
    for (t, eps) in &pairs {
        let half = eps / int(2);
        let got = affine_image(&int(2), &int(0), &IntervalSet::open_interval(t - &half, t + &half));
        let two_t = t * int(2);
        let want = IntervalSet::open_interval(&two_t - eps, &two_t + eps);
        ensure(got == want, || format!("t={t} eps={eps}: image {got}, expected {want}"))?;
    }
    let elapsed = start.elapsed();
    within(elapsed, INTERVAL_LIMIT)?;
    Ok(format!("{} (t, eps) images exact, {} convex paths in {elapsed:?}", pairs.len(), ends.len()))
}

fn nested_pair_paths() -> Check {
    let (t, u1, _) = nested_pair_space();
    let (g13, g22) = (jump_path_1_3(), constant_path_2());
    let p = t.params().clone();
    let half_open = IntervalSet::from_interval(&Interval {
        lo: ExtRational::from(int(0)),
        lo_closed: true,
        hi: ExtRational::from(rat(1, 2)),
        hi_closed: false,
    });
    let want13 = SoftIntervalSet::new(p.clone(), vec![half_open, IntervalSet::empty()]).map_err(|e| e.to_string())?;
    let want22 = SoftIntervalSet::new(p, vec![IntervalSet::empty(), IntervalSet::unit()]).map_err(|e| e.to_string())?;
    let start = Instant::now();
    let paths = is_soft_path(&g13, &t).map_err(|e| e.to_string())?.holds() && is_soft_path(&g22, &t).map_err(|e| e.to_string())?.holds();
    let (pre13, pre22) = (g13.soft_preimage(&u1), g22.soft_preimage(&u1));
    let elapsed = start.elapsed();
    ensure(paths, || "a step path failed the soft path test".into())?;
    ensure(pre13 == want13, || format!("Γ13⁻¹(U1) = {pre13}"))?;
    ensure(pre22 == want22, || format!("Γ22⁻¹(U1) = {pre22}"))?;
    ensure(!pre13.is_soft_open_in_unit() && !pre22.is_soft_open_in_unit(), || "a preimage is soft open".into())?;
    within(elapsed, EXAMPLE_LIMIT)?;
    Ok(format!("both soft paths, preimages {pre13} and {pre22}, neither open, in {elapsed:?}"))
}

fn exhaustive_theorems() -> Check {
    let start = Instant::now();
    let cases = suite(&["thm-3.4", "thm-4.12", "prop-2.8", "prop-2.16"], 0, 64, Some(1))?;
    let elapsed = start.elapsed();
    for id in ["thm-3.4", "thm-4.12", "prop-2.8", "prop-2.16"] {
        let exhaustive = cases.iter().any(|c| c.property == id && c.population.contains("2x2") && c.checked > 0);
        ensure(exhaustive, || format!("{id} has no exhaustive 2x2 population"))?;
    }
    let n = all_hold(&cases)?;
    within(elapsed, EXHAUSTIVE_LIMIT)?;
    Ok(format!("{n} instances, zero violations, single-threaded in {elapsed:?}"))
}

fn path_oracle() -> Check {
    let start = Instant::now();
    let cases = suite(&["oracle-path"], 0, ORACLE_RANDOM_SPACES, None)?;
    let elapsed = start.elapsed();
    let random: usize = cases.iter().filter(|c| c.population.starts_with("random")).map(|c| c.checked).sum();
    ensure(random >= ORACLE_RANDOM_MINIMUM, || format!("only {random} random spaces"))?;
    let n = all_hold(&cases)?;
    within(elapsed, ORACLE_LIMIT)?;
    Ok(format!("{n} spaces ({random} random 3x2), zero disagreements in {elapsed:?}"))
}

fn group_axioms() -> Check {
    let ids = [
        "prop-2.20", "prop-5.3", "prop-5.4", "prop-5.6", "prop-5.8", "thm-5.2", "thm-5.9", "thm-5.10", "thm-5.11",
    ];
    let start = Instant::now();
    let cases = suite(&ids, 0, 64, None)?;
    let elapsed = start.elapsed();
    let n = all_hold(&cases)?;
    within(elapsed, GROUP_LIMIT)?;
    Ok(format!("{} properties, {n} instances, zero violations in {elapsed:?}", ids.len()))
}

fn category_laws() -> Check {
    let ids = ["prop-6.4", "thm-6.5", "thm-6.12", "thm-6.13", "thm-6.14", "cor-6.15"];
    let start = Instant::now();
    let cases = suite(&ids, 0, 64, None)?;
    let elapsed = start.elapsed();
    let n = all_hold(&cases)?;
    within(elapsed, CATEGORY_LIMIT)?;
    Ok(format!("{} properties, {n} instances, zero violations in {elapsed:?}", ids.len()))
}

fn real_line() -> Check {
    let start = Instant::now();
    let mut cases = suite(&["prop-4.10", "prop-4.11"], 0, PARTITION_CANDIDATES, None)?;
    cases.extend(suite(&["prop-4.8"], 0, NON_INTERVALS, None)?);
    cases.extend(suite(&["thm-4.9"], 0, IVT_CASES, None)?);
    let elapsed = start.elapsed();
    for (id, want) in [("prop-4.10", PARTITION_CANDIDATES), ("prop-4.11", PARTITION_CANDIDATES), ("prop-4.8", NON_INTERVALS), ("thm-4.9", IVT_CASES)] {
        let got: usize = cases.iter().filter(|c| c.property == id).map(|c| c.checked).sum();
        ensure(got == want, || format!("{id} checked {got}, wanted {want}"))?;
    }
    let n = all_hold(&cases)?;
    within(elapsed, REAL_LIMIT)?;
    Ok(format!("{n} cases exact in {elapsed:?}"))
}

fn determinism() -> Check {
    let run = || -> Result<Vec<u8>, String> {
        let out = Command::new(env!("CARGO_BIN_EXE_softtop"))
            .args(["suite", "--seed", "42"])
            .output()
            .map_err(|e| e.to_string())?;
        ensure(out.status.success(), || format!("suite exited with {}", out.status))?;
        Ok(out.stdout)
    };
    let (a, b) = (run()?, run()?);
    ensure(!a.is_empty(), || "empty report".into())?;
    ensure(a == b, || "reports differ".into())?;
    Ok(format!("two runs, {} identical bytes", a.len()))
}

fn main() {
    let criteria: [(&str, fn() -> Check); 10] = [
        ("continuous identity with a non-open preimage", continuous_without_open_preimages),
        ("crossed opens with empty cores", crossed_opens),
        ("doubling and convex-combination paths", doubling_and_convex),
        ("step paths in the nested-pair space", nested_pair_paths),
        ("exhaustive theorem suite at |X|=2, |params|=2", exhaustive_theorems),
        ("path-oracle agreement", path_oracle),
        ("soft topological group properties", group_axioms),
        ("category laws", category_laws),
        ("real-line facts", real_line),
        ("suite determinism", determinism),
    ];
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        let outcome = catch_unwind(AssertUnwindSafe(check)).unwrap_or_else(|_| Err("panicked".into()));
        match outcome {
            Ok(detail) => println!("criterion {:>2} PASS  {name}: {detail}", i + 1),
            Err(why) => {
                failed += 1;
                println!("criterion {:>2} FAIL  {name}: {why}", i + 1);
            }
        }
    }
    println!("acceptance: {} passed, {failed} failed", criteria.len() - failed);
    if failed > 0 {
        std::process::exit(1);
    }
}
