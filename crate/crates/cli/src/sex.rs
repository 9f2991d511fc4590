use num_bigint::Sign;
use wedge_core::sexagesimal::{best_sex_approx, best_sex_approx_recip, heron_sqrt_sex, parse_sex, SexValue};
use wedge_core::{QuadValue, Rational};

use crate::Outcome;

fn parse_value(text: &str) -> Result<SexValue, String> {
    parse_sex(text).map_err(|e| format!("cannot parse {text:?}: {e}"))
}

pub fn parse(text: &str) -> Outcome {
    let v = parse_value(text)?;
    let places = v.frac().len() as u32;
    let scale = Rational::from_integer(60i64.pow(places));
    let scaled = (v.to_rational() * &scale).numer().clone();
    println!("{v}");
    if places == 0 {
        println!("{}", v.to_rational());
    } else {
        println!("{scaled}/{} = {}", 60u128.pow(places), v.to_rational());
    }
    Ok(true)
}

fn signed(q: &QuadValue, digits: usize) -> String {
    let text = q.approx_decimal(digits);
    if q.sign() == Sign::Plus {
        format!("+{text}")
    } else {
        text
    }
}

pub fn approx(n: u64, digits: usize, recip: bool) -> Outcome {
    let x = if recip { best_sex_approx_recip(n, digits) } else { best_sex_approx(n, digits) }
        .map_err(|e| e.to_string())?;
    let exact = x.to_rational();
    let target = QuadValue::sqrt(n).map_err(|e| e.to_string())?;
    let target = if recip { target.scale(&Rational::new(1, n as i64).expect("n > 0")) } else { target };
    let err = target
        .sub(&QuadValue::rational(exact.clone(), n).expect("n is not a square"))
        .expect("same radicand");
    let name = if recip { format!("1/sqrt {n}") } else { format!("sqrt {n}") };
    println!("{x}");
    println!("= {exact}");
    println!("error {name} - {x} = {}", signed(&err, 2 * digits + 6));
    Ok(true)
}

pub fn heron(n: u64, x0: &str, digits: usize, max_iter: usize) -> Outcome {
    let start = parse_value(x0)?;
    let run = heron_sqrt_sex(n, &start, digits, max_iter).map_err(|e| e.to_string())?;
    for (i, x) in run.iterates.iter().enumerate() {
        println!("{i:>3}  {x}");
    }
    if run.converged {
        println!("fixed point {}", run.last());
    } else {
        println!("no fixed point within {max_iter} steps");
    }
    Ok(run.converged)
}
