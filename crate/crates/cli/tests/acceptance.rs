//! Acceptance suite: one PASS/FAIL line per criterion, non-zero exit if any
//! criterion fails. Runs under `cargo test` with its own `main`.

use std::fs;
use std::path::Path;
use std::process::Command;
use std::time::{Duration, Instant};

use num_bigint::{BigInt, Sign};
use proptest::strategy::Strategy;
use proptest::test_runner::{Config, RngAlgorithm, TestCaseError, TestRng, TestRunner};
use wedge_core::construction::{builtin_script, execute_text};
use wedge_core::geometry::{
    build_bm15285_figure, build_ybc7289_figure, sq_dist, verify_problem_xii, ybc7289_report,
};
use wedge_core::proofs::{
    decide_sqrt_rational, descent_step, no_solution_search, parity_lemma, verify_gap, DescentPair,
};
use wedge_core::sexagesimal::{best_sex_approx, best_sex_approx_recip, sex_scale};
use wedge_core::{QuadValue, Rational};

type Check = Result<(), String>;
type Criterion = (&'static str, fn() -> Check);

macro_rules! ensure {
    ($cond:expr, $($msg:tt)+) => {
        if !$cond {
            return Err(format!($($msg)+));
        }
    };
}

fn int(n: i64) -> Rational {
    Rational::from_integer(n)
}

fn rat(n: i64, d: i64) -> Rational {
    Rational::new(n, d).unwrap()
}

fn wedge(args: &[&str]) -> (i32, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_wedge")).args(args).output().expect("spawn wedge");
    (out.status.code().unwrap_or(-1), String::from_utf8_lossy(&out.stdout).into_owned())
}

/// Runs `check` on `cases` sides drawn from a fixed seed.
fn for_random_sides(cases: u32, check: impl Fn(&Rational) -> Check) -> Check {
    let config = Config { cases, failure_persistence: None, ..Config::default() };
    let mut runner = TestRunner::new_with_rng(config, TestRng::deterministic_rng(RngAlgorithm::ChaCha));
    let sides = (1i64..100_000, 1i64..1_000).prop_map(|(n, d)| rat(n, d));
    runner.run(&sides, |side| check(&side).map_err(TestCaseError::fail)).map_err(|e| e.to_string())
}

fn within(start: Instant, limit: Duration) -> Check {
    let took = start.elapsed();
    ensure!(took < limit, "took {took:?}, limit {limit:?}");
    Ok(())
}

// Coordinates at side 60 worked out by hand: centre O, the midpoints L, M,
// N, R of OA, OB, OC, OD, and the side midpoints W, X, Y, Z.
#[rustfmt::skip]
const HAND_POINTS: [(&str, i64, i64); 13] = [
    ("A", 0, 0), ("B", 60, 0), ("C", 60, 60), ("D", 0, 60), ("O", 30, 30),
    ("L", 15, 15), ("M", 45, 15), ("N", 45, 45), ("R", 15, 45),
    ("W", 30, 0), ("X", 60, 30), ("Y", 30, 60), ("Z", 0, 30),
];

fn hand(name: &str) -> (i64, i64) {
    let &(_, x, y) = HAND_POINTS.iter().find(|p| p.0 == name).unwrap();
    (x, y)
}

fn criterion_1() -> Check {
    let start = Instant::now();
    let (code, out) = wedge(&["construct", "--builtin", "bm15285_p12", "--side", "60"]);
    ensure!(code == 0, "construct exited {code}");
    ensure!(out.lines().any(|l| l == "T = 225"), "no \"T = 225\" line");
    ensure!(out.lines().any(|l| l == "total = 3600"), "no \"total = 3600\" line");
    let fig = build_bm15285_figure(&int(60)).map_err(|e| e.to_string())?;
    let areas = fig.areas();
    ensure!(areas.len() == 16, "{} triangles", areas.len());
    for ((name, area), t) in areas.iter().zip(fig.triangles()) {
        let [a, b, c] = [0, 1, 2].map(|i| hand(&t.vertices[i]));
        let twice = (b.0 - a.0) * (c.1 - a.1) - (c.0 - a.0) * (b.1 - a.1);
        ensure!(*area == rat(twice.abs(), 2), "{name}: {area} vs hand {}/2", twice.abs());
        ensure!(*area == int(225), "{name} has area {area}");
    }
    let total = areas.iter().fold(Rational::zero(), |acc, (_, a)| acc + a);
    ensure!(total == int(3600), "total {total}");
    within(start, Duration::from_secs(1))
}

fn criterion_2() -> Check {
    let start = Instant::now();
    let fig = build_bm15285_figure(&int(60)).map_err(|e| e.to_string())?;
    let r = verify_problem_xii(&fig).map_err(|e| e.to_string())?;
    ensure!(r.lm_sq == int(900) && r.mn_sq == int(900), "LM^2 {} MN^2 {}", r.lm_sq, r.mn_sq);
    ensure!(r.ln_sq == int(1800), "LN^2 {}", r.ln_sq);
    ensure!(r.lm_sq == int(4) * r.t.clone() && r.ln_sq == int(8) * r.t.clone(), "T = {}", r.t);
    ensure!(&r.lm_sq + &r.mn_sq == r.ln_sq, "LM^2 + MN^2 != LN^2");
    let hand_sq = |p: &str, q: &str| {
        let (a, b) = (hand(p), hand(q));
        int((a.0 - b.0).pow(2) + (a.1 - b.1).pow(2))
    };
    ensure!(hand_sq("L", "M") == r.lm_sq && hand_sq("L", "N") == r.ln_sq, "hand distances disagree");
    for_random_sides(100, |side| {
        let fig = build_bm15285_figure(side).map_err(|e| e.to_string())?;
        let r = verify_problem_xii(&fig).map_err(|e| e.to_string())?;
        let sq = side.square();
        ensure!(r.t == &sq * &rat(1, 16), "side {side}: T = {}", r.t);
        ensure!(r.lm_sq == &r.t * &int(4) && r.mn_sq == &r.t * &int(4), "side {side}: legs");
        ensure!(r.ln_sq == &r.t * &int(8), "side {side}: LN^2 = {}", r.ln_sq);
        ensure!(&r.lm_sq + &r.mn_sq == r.ln_sq, "side {side}: Pythagoras");
        Ok(())
    })?;
    within(start, Duration::from_secs(1))
}

fn criterion_3() -> Check {
    let fig = build_ybc7289_figure(&int(30)).map_err(|e| e.to_string())?;
    let r = ybc7289_report(&fig).map_err(|e| e.to_string())?;
    ensure!(r.diag_sq == int(1800), "diag_sq {}", r.diag_sq);
    for_random_sides(100, |side| {
        let fig = build_ybc7289_figure(side).map_err(|e| e.to_string())?;
        let r = ybc7289_report(&fig).map_err(|e| e.to_string())?;
        let two_sq = int(2) * side.square();
        ensure!(r.diag_sq == two_sq, "side {side}: diag_sq {}", r.diag_sq);
        let bd = sq_dist(fig.point("B").unwrap(), fig.point("D").unwrap());
        ensure!(bd == two_sq, "side {side}: BD^2 {bd}");
        Ok(())
    })
}

fn criterion_4() -> Check {
    let start = Instant::now();
    for h in 1..=100_000u64 {
        let p = parity_lemma(h);
        ensure!(p.h_even == (h % 2 == 0), "parity of {h}");
        ensure!(p.h_sq_even == (h as u128 * h as u128).is_multiple_of(2), "parity of {h}^2");
        ensure!(p.agrees(), "lemma fails at {h}");
    }
    for h in (2..=2000u64).step_by(2) {
        for s in 1..=2000u64 {
            let pair = DescentPair::new(h, s).unwrap();
            let next = descent_step(pair).map_err(|e| e.to_string())?;
            let k = h as i128 * h as i128 - 2 * (s as i128 * s as i128);
            let half = h as i128 / 2;
            let k_next = s as i128 * s as i128 - 2 * half * half;
            ensure!(2 * k_next == -k, "(H={h}, S={s}): k = {k}, k' = {k_next}");
            ensure!(next.defect() == k_next, "(H={h}, S={s}): step gave {next}");
        }
    }
    let report = no_solution_search(10_000).map_err(|e| format!("search: {e}"))?;
    ensure!(report.min_defect == 1, "min defect {}", report.min_defect);
    for w in [report.witness, report.last_witness] {
        let k = w.h() as i128 * w.h() as i128 - 2 * (w.s() as i128 * w.s() as i128);
        ensure!(k.abs() == 1, "witness {w} is not a Pell pair");
    }
    within(start, Duration::from_secs(30))
}

/// Checks with integers alone that `m / 60^3` is at least as close to the
/// target `c·√2 / div` as every other numerator within distance 2, where
/// `c = 60^3`. Distances compare by squaring: for `m < m'`, `m` is strictly
/// closer exactly when `div²(m + m')² > 8c²`.
fn window_optimal(m: i64, div: i64) -> Check {
    let c = BigInt::from(216_000i64);
    let target_sq = BigInt::from(8) * &c * &c;
    for other in m - 2..=m + 2 {
        if other == m {
            continue;
        }
        let sum = BigInt::from(div * (m + other));
        let sum_sq = &sum * &sum;
        let closer = if m < other { sum_sq > target_sq } else { sum_sq < target_sq };
        ensure!(closer, "numerator {other} is at least as close as {m}");
    }
    Ok(())
}

fn criterion_5() -> Check {
    let start = Instant::now();
    let root = best_sex_approx(2, 3).map_err(|e| e.to_string())?;
    ensure!(root.to_string() == "1;24,51,10", "root {root}");
    let recip = best_sex_approx_recip(2, 3).map_err(|e| e.to_string())?;
    ensure!(recip.to_string() == "0;42,25,35", "reciprocal {recip}");
    let root_m = 60i64.pow(3) + 24 * 3600 + 51 * 60 + 10;
    let recip_m = 42 * 3600 + 25 * 60 + 35;
    ensure!(root.to_rational() == rat(root_m, 216_000), "digits of {root}");
    ensure!(recip.to_rational() == rat(recip_m, 216_000), "digits of {recip}");
    window_optimal(root_m, 1)?;
    window_optimal(recip_m, 2)?;

    let err = QuadValue::rational(root.to_rational(), 2)
        .and_then(|x| x.sub(&QuadValue::sqrt(2)?))
        .map_err(|e| e.to_string())?
        .abs();
    let margin = QuadValue::rational(rat(1, 1_000_000), 2).unwrap().sub(&err).unwrap();
    ensure!(margin.sign() == Sign::Plus, "error {} not below 1e-6", err.approx_decimal(12));

    let scaled = sex_scale(&root, 30, 3);
    ensure!(scaled.to_string() == "42;25,35", "30 x root = {scaled}");
    ensure!(scaled.to_rational() == int(30) * root.to_rational(), "scaling is not exact");
    within(start, Duration::from_secs(1))
}

fn isqrt_oracle(n: u64) -> Option<u64> {
    let mut r = 0u64;
    while (r + 1) * (r + 1) <= n {
        r += 1;
    }
    (r * r == n).then_some(r)
}

fn criterion_6() -> Check {
    for n in 1..=17u64 {
        let cert = decide_sqrt_rational(n, 1000).map_err(|e| e.to_string())?;
        let expect_rational = matches!(n, 1 | 4 | 9 | 16);
        ensure!(cert.is_rational() == expect_rational, "n = {n}: rational = {}", cert.is_rational());
        ensure!(cert.check(), "n = {n}: certificate does not recheck");
    }
    let mut r = 0u64;
    for n in 1..=10_000u64 {
        while (r + 1) * (r + 1) <= n {
            r += 1;
        }
        let cert = decide_sqrt_rational(n, 3).map_err(|e| e.to_string())?;
        ensure!(cert.is_rational() == (r * r == n), "n = {n}: disagrees with isqrt");
        ensure!(isqrt_oracle(n).is_some() == (r * r == n), "n = {n}: oracles disagree");
        ensure!(cert.check(), "n = {n}: certificate does not recheck");
    }
    Ok(())
}

fn criterion_7() -> Check {
    for_random_sides(20, |side| {
        let text = builtin_script("bm15285_p12", side).ok_or("bm15285_p12 missing")?;
        let exec = execute_text(&text).map_err(|e| e.to_string())?;
        let kernel = build_bm15285_figure(side).map_err(|e| e.to_string())?;
        ensure!(exec.figure == kernel, "side {side}: script figure differs from kernel");
        ensure!(exec.all_passed(), "side {side}: script assertion failed");
        Ok(())
    })?;

    let dir = tempfile::tempdir().map_err(|e| e.to_string())?;
    let golden = Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/golden");
    for (name, side) in [("bm15285_p12", "60"), ("ybc7289", "30")] {
        let svg = dir.path().join(format!("{name}.svg"));
        let json = dir.path().join(format!("{name}.json"));
        let (code, _) = wedge(&[
            "construct",
            "--builtin",
            name,
            "--side",
            side,
            "--svg",
            svg.to_str().unwrap(),
            "--json",
            json.to_str().unwrap(),
        ]);
        ensure!(code == 0, "{name}: exit {code}");
        for (path, ext) in [(svg, "svg"), (json, "json")] {
            let want =
                fs::read(golden.join(format!("{name}_side{side}.{ext}"))).map_err(|e| e.to_string())?;
            ensure!(fs::read(&path).map_err(|e| e.to_string())? == want, "{name}.{ext} differs from golden");
        }
    }

    let failing = dir.path().join("fail.ct");
    fs::write(&failing, "point A 0 0\npoint B 2 0\npoint C 0 2\ntriangle t A B C\nassert_area t 3\n")
        .unwrap();
    let malformed = dir.path().join("bad.ct");
    fs::write(&malformed, "point A 1/0 0\n").unwrap();
    let (failing, malformed) = (failing.to_str().unwrap(), malformed.to_str().unwrap());
    let matrix: &[(&[&str], i32)] = &[
        (&["construct", "--builtin", "ybc7289"], 0),
        (&["construct", failing], 1),
        (&["construct", malformed], 2),
        (&["verify", "bm15285", "--side", "60"], 0),
        (&["verify", "ybc7289", "--bound", "100"], 0),
        (&["verify", "bm15285", "--side", "-1"], 2),
        (&["prove", "9"], 0),
        (&["prove", "0"], 2),
        (&["sex", "heron", "2", "--x0", "1;30", "--max-iter", "1"], 1),
        (&["sex", "parse", "1;60"], 2),
        (&["sex", "approx", "2"], 0),
    ];
    for (args, want) in matrix {
        let (code, _) = wedge(args);
        ensure!(code == *want, "{args:?} exited {code}, expected {want}");
    }
    Ok(())
}

const PELL: [(u64, u64); 7] = [(3, 2), (7, 5), (17, 12), (41, 29), (99, 70), (239, 169), (577, 408)];

fn criterion_8() -> Check {
    for (p, q) in PELL {
        let g = verify_gap(p, q).map_err(|e| e.to_string())?;
        ensure!(g.bound == Rational::new(1u64, q * (p + 2 * q)).unwrap(), "({p}, {q}): bound {}", g.bound);
        ensure!(g.holds() && g.strict(), "({p}, {q}): margin {:?}", g.margin);
        // Integer cross-check: |p/q − √2| > 1/(q(p+2q)) iff
        // (p+2q)|p² − 2q²| − p > q√2, compared by squaring.
        let (p, q) = (p as i128, q as i128);
        let lhs = (p + 2 * q) * (p * p - 2 * q * q).abs() - p;
        ensure!(lhs > 0 && lhs * lhs > 2 * q * q, "({p}, {q}): integer check fails");
    }
    Ok(())
}

fn main() {
    let criteria: [Criterion; 8] = [
        ("problem xii: sixteen wedges of area 225 summing to 3600", criterion_1),
        ("isosceles Pythagoras LM^2 + MN^2 = LN^2, 100 random sides", criterion_2),
        ("H^2 = 2 S^2 on the YBC 7289 square, 100 random sides", criterion_3),
        ("descent: parity, defect transform, exhaustive search", criterion_4),
        ("sexagesimal root, reciprocal, accuracy and 30 x scaling", criterion_5),
        ("rationality of sqrt n for n <= 17 and n <= 10^4", criterion_6),
        ("construction script, golden files, exit codes", criterion_7),
        ("gap bound 1/(q(p+2q)) for seven Pell convergents", criterion_8),
    ];
    let mut failed = 0;
    for (i, (title, check)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let result = check();
        let ms = start.elapsed().as_millis();
        match result {
            Ok(()) => println!("PASS criterion {}: {title} ({ms} ms)", i + 1),
            Err(why) => {
                failed += 1;
                println!("FAIL criterion {}: {title} ({ms} ms): {why}", i + 1);
            }
        }
    }
    println!("acceptance: {} passed, {failed} failed", criteria.len() - failed);
    if failed > 0 {
        std::process::exit(1);
    }
}
