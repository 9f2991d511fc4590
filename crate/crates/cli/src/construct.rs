use std::fs;
use std::path::PathBuf;

use wedge_core::construction::{builtin_script, default_side, execute_text, ScriptError, SIDE_VARIABLE};
use wedge_core::geometry::sq_dist;
use wedge_core::svg::{render_svg, SvgOptions};
use wedge_core::Rational;

use crate::Outcome;

pub enum Source {
    File(PathBuf),
    Builtin(String),
}

fn script_text(source: &Source, side: Option<&Rational>) -> Result<String, String> {
    match source {
        Source::Builtin(name) => {
            let side = match side {
                Some(s) => s.clone(),
                None => default_side(name).ok_or_else(|| format!("unknown builtin {name:?}"))?,
            };
            builtin_script(name, &side).ok_or_else(|| format!("unknown builtin {name:?}"))
        }
        Source::File(path) => {
            let text =
                fs::read_to_string(path).map_err(|e| format!("cannot read {}: {e}", path.display()))?;
            Ok(match side {
                Some(s) => text.replace(SIDE_VARIABLE, &s.to_string()),
                None => text,
            })
        }
    }
}

fn write(path: &PathBuf, contents: &str) -> Result<(), String> {
    fs::write(path, contents).map_err(|e| format!("cannot write {}: {e}", path.display()))
}

pub fn run(
    source: Source,
    side: Option<Rational>,
    svg: Option<PathBuf>,
    json: Option<PathBuf>,
    shade: bool,
) -> Outcome {
    let text = script_text(&source, side.as_ref())?;
    let exec = execute_text(&text).map_err(|e| match e {
        ScriptError::Parse(e) => format!("parse error at {e}"),
        ScriptError::Exec(e) => format!("construction error at {e}"),
    })?;
    let fig = &exec.figure;

    let areas = fig.areas();
    for (name, area) in &areas {
        let t = fig.triangle(name).expect("listed by the figure");
        println!("{name} ({}) area {area}", t.vertices.join(" "));
    }
    if let Some((_, first)) = areas.first() {
        if areas.iter().all(|(_, a)| a == first) {
            println!("T = {first}");
        }
        let total = areas.iter().fold(Rational::zero(), |acc, (_, a)| acc + a);
        println!("total = {total}");
    }
    if let (Ok(a), Ok(c)) = (fig.point("A"), fig.point("C")) {
        println!("diag_sq = {}", sq_dist(a, c));
    }

    if let Some(path) = &json {
        write(path, &fig.to_json())?;
    }
    if let Some(path) = &svg {
        write(path, &render_svg(fig, &SvgOptions { shade }))?;
    }

    let failures: Vec<_> = exec.failures().collect();
    for f in &failures {
        println!("FAIL {}: {}: expected {}, got {}", f.span, f.command, f.expected, f.actual);
    }
    println!("assertions: {} passed, {} failed", exec.assertions.len() - failures.len(), failures.len());
    Ok(failures.is_empty())
}
