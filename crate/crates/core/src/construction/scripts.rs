use std::collections::BTreeMap;

use crate::geometry::{BM15285_TRIANGLES, YBC7289_TRIANGLES};
use crate::numeric::Rational;

/// Placeholder replaced textually by the side length before parsing.
pub const SIDE_VARIABLE: &str = "$side";

const BM15285_P12: &str = include_str!("../../scripts/bm15285_p12.ct");
const YBC7289: &str = include_str!("../../scripts/ybc7289.ct");

/// Bundled script templates by name, each using [`SIDE_VARIABLE`].
pub fn builtin_scripts() -> BTreeMap<&'static str, &'static str> {
    BTreeMap::from([("bm15285_p12", BM15285_P12), ("ybc7289", YBC7289)])
}

/// The side each tablet states: 60 rods for problem xii, 30 on YBC 7289.
pub fn default_side(name: &str) -> Option<Rational> {
    match name {
        "bm15285_p12" => Some(Rational::from_integer(60)),
        "ybc7289" => Some(Rational::from_integer(30)),
        _ => None,
    }
}

/// The named template with `$side` substituted, followed by the tablet's
/// claims for that side as `assert_*` commands.
pub fn builtin_script(name: &str, side: &Rational) -> Option<String> {
    let template = builtin_scripts().get(name).copied()?;
    let mut text = template.replace(SIDE_VARIABLE, &side.to_string());
    let sq = side.square();
    let frac = |n: i64, d: i64| &sq * &Rational::new(n, d).expect("nonzero denominator");
    match name {
        "bm15285_p12" => {
            text.push_str("\n# Claims: sixteen equal wedges T, (LM)^2 = (MN)^2 = 4T, (LN)^2 = 8T.\n");
            let t = frac(1, 16);
            for i in 1..=BM15285_TRIANGLES.len() {
                text.push_str(&format!("assert_area T{i} {t}\n"));
            }
            text.push_str(&format!("assert_sq_dist L M {}\n", frac(1, 4)));
            text.push_str(&format!("assert_sq_dist M N {}\n", frac(1, 4)));
            text.push_str(&format!("assert_sq_dist L N {}\n", frac(1, 2)));
        }
        "ybc7289" => {
            text.push_str("\n# Claims: H^2 = 2 S^2 on both diagonals.\n");
            for i in 1..=YBC7289_TRIANGLES.len() {
                text.push_str(&format!("assert_area T{i} {}\n", frac(1, 4)));
            }
            text.push_str(&format!("assert_sq_dist A C {}\n", frac(2, 1)));
            text.push_str(&format!("assert_sq_dist B D {}\n", frac(2, 1)));
        }
        _ => unreachable!("names come from builtin_scripts"),
    }
    Some(text)
}
