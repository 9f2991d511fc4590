use num_bigint::Sign;
use wedge_core::construction::default_side;
use wedge_core::geometry::{
    build_bm15285_figure, build_ybc7289_figure, problem_xii_report, ybc7289_report, IdentityCheck,
};
use wedge_core::proofs::{decide_sqrt_rational, Verdict};
use wedge_core::sexagesimal::{best_sex_approx, best_sex_approx_recip, sex_scale, SexValue};
use wedge_core::{QuadValue, Rational};

use crate::Outcome;

fn mark(ok: bool) -> &'static str {
    if ok {
        "PASS"
    } else {
        "FAIL"
    }
}

fn print_identities(checks: &[IdentityCheck]) {
    for c in checks {
        println!("{} {:<12} {:<34} {} = {}", mark(c.holds), c.id, c.statement, c.lhs, c.rhs);
    }
}

fn print_check(ok: bool, id: &str, detail: String) -> bool {
    println!("{} {id:<12} {detail}", mark(ok));
    ok
}

fn irrationality(bound: u64) -> Result<bool, String> {
    let cert = decide_sqrt_rational(2, bound).map_err(|e| e.to_string())?;
    let ok = cert.check() && !cert.is_rational();
    let detail = match &cert.verdict {
        Verdict::Irrational(ev) => format!(
            "no H^2 = 2 S^2 with S < H <= {}; min |H^2 - 2 S^2| = {} at {}",
            ev.exhaustive_bound, ev.min_defect, ev.witness
        ),
        Verdict::Rational { root } => format!("sqrt 2 = {root}"),
    };
    Ok(print_check(ok, "descent", detail))
}

fn side_or_default(side: Option<Rational>, name: &str) -> Rational {
    side.unwrap_or_else(|| default_side(name).expect("builtin name"))
}

pub fn bm15285(side: Option<Rational>, bound: u64) -> Outcome {
    let side = side_or_default(side, "bm15285_p12");
    let fig = build_bm15285_figure(&side).map_err(|e| e.to_string())?;
    let report = problem_xii_report(&fig).map_err(|e| e.to_string())?;
    println!("side = {side}, T = {}", report.t);
    println!("LM^2 = {}, MN^2 = {}, LN^2 = {}", report.lm_sq, report.mn_sq, report.ln_sq);
    print_identities(&report.identities);
    let descent = irrationality(bound)?;
    Ok(report.all_hold() && descent)
}

const YBC_ROOT: &str = "1;24,51,10";
const YBC_RECIP: &str = "0;42,25,35";
const YBC_DIAGONAL: &str = "42;25,35";

pub fn ybc7289(side: Option<Rational>, bound: u64) -> Outcome {
    let side = side_or_default(side, "ybc7289");
    let fig = build_ybc7289_figure(&side).map_err(|e| e.to_string())?;
    let report = ybc7289_report(&fig).map_err(|e| e.to_string())?;
    println!("side = {side}, diag_sq = {}", report.diag_sq);
    print_identities(&report.identities);
    let mut ok = report.all_hold();
    ok &= print_check(
        report.diagonal_exceeds_side && report.half_diagonal_below_side,
        "shrinkage",
        format!("{side} < {side}√2 and {side}√2 / 2 < {side}"),
    );

    let root = best_sex_approx(2, 3).map_err(|e| e.to_string())?;
    ok &= print_check(root.to_string() == YBC_ROOT, "root", format!("best 3-place sqrt 2 = {root}"));
    let recip = best_sex_approx_recip(2, 3).map_err(|e| e.to_string())?;
    ok &=
        print_check(recip.to_string() == YBC_RECIP, "reciprocal", format!("best 3-place 1/sqrt 2 = {recip}"));
    let scaled = sex_scale(&root, 30, 3);
    ok &= print_check(scaled.to_string() == YBC_DIAGONAL, "diagonal", format!("30 x {root} = {scaled}"));
    let (err, below) = error_below_micro(&root);
    ok &=
        print_check(below, "accuracy", format!("|{root} - sqrt 2| = {} < 0.000001", err.approx_decimal(12)));
    ok &= irrationality(bound)?;
    Ok(ok)
}

/// `|x − √2|` and whether it is below 10⁻⁶, decided by exact sign.
fn error_below_micro(x: &SexValue) -> (QuadValue, bool) {
    let sqrt2 = QuadValue::sqrt(2).expect("2 is not a square");
    let approx = QuadValue::rational(x.to_rational(), 2).expect("2 is not a square");
    let err = approx.sub(&sqrt2).expect("same radicand").abs();
    let micro = Rational::new(1, 1_000_000).expect("nonzero denominator");
    let margin = QuadValue::rational(micro, 2).expect("2 is not a square").sub(&err).expect("same radicand");
    (err, margin.sign() == Sign::Plus)
}
