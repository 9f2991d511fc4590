use std::fs;
use std::path::PathBuf;

use wedge_core::proofs::{decide_sqrt_rational, Verdict};

use crate::Outcome;

pub fn run(n: u64, bound: u64, json: Option<PathBuf>) -> Outcome {
    if n == 0 {
        return Err("n must be at least 1".into());
    }
    let cert = decide_sqrt_rational(n, bound).map_err(|e| e.to_string())?;
    match &cert.verdict {
        Verdict::Rational { root } => println!("sqrt {n} = {root}: rational"),
        Verdict::Irrational(ev) => {
            println!("sqrt {n} is irrational");
            for line in &ev.narration {
                println!("  {line}");
            }
            println!(
                "  exhaustive: no H^2 = {n} S^2 with S < H <= {}; min |H^2 - {n} S^2| = {} at {}",
                ev.exhaustive_bound, ev.min_defect, ev.witness
            );
        }
    }
    let text = cert.to_json();
    print!("{text}");
    if let Some(path) = json {
        fs::write(&path, &text).map_err(|e| format!("cannot write {}: {e}", path.display()))?;
    }
    Ok(true)
}
