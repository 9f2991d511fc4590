use std::collections::HashMap;

use super::{parse_script, Command, ExecError, Script, ScriptError, Span};
use crate::geometry::{
    intersect, line_through, midpoint, perpendicular_through, sq_dist, Figure, GeometryError, Line, Point,
};
use crate::numeric::Rational;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AssertionOutcome {
    pub span: Span,
    /// The assertion command in canonical text.
    pub command: String,
    pub expected: Rational,
    pub actual: Rational,
}

impl AssertionOutcome {
    pub fn passed(&self) -> bool {
        self.expected == self.actual
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Execution {
    pub figure: Figure,
    pub lines: HashMap<String, Line>,
    pub assertions: Vec<AssertionOutcome>,
}

impl Execution {
    pub fn all_passed(&self) -> bool {
        self.assertions.iter().all(AssertionOutcome::passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &AssertionOutcome> {
        self.assertions.iter().filter(|a| !a.passed())
    }
}

#[derive(Default)]
struct Env {
    figure: Figure,
    lines: HashMap<String, Line>,
    assertions: Vec<AssertionOutcome>,
}

impl Env {
    fn line(&self, name: &str) -> Result<&Line, GeometryError> {
        self.lines.get(name).ok_or_else(|| GeometryError::UnknownName(name.to_string()))
    }

    fn define_line(&mut self, name: &str, line: Line) -> Result<(), GeometryError> {
        if self.lines.contains_key(name) {
            return Err(GeometryError::Redefinition(name.to_string()));
        }
        self.lines.insert(name.to_string(), line);
        Ok(())
    }

    fn run(&mut self, command: &Command, span: Span) -> Result<(), GeometryError> {
        match command {
            Command::Point { name, x, y } => self.figure.add_point(name, Point::new(x.clone(), y.clone()))?,
            Command::Square { names, origin: (x, y), side } => {
                if !side.is_positive() {
                    return Err(GeometryError::NonPositiveSide(side.clone()));
                }
                let far_x = x + side;
                let far_y = y + side;
                let corners = [
                    Point::new(x.clone(), y.clone()),
                    Point::new(far_x.clone(), y.clone()),
                    Point::new(far_x, far_y.clone()),
                    Point::new(x.clone(), far_y),
                ];
                for (name, p) in names.iter().zip(corners) {
                    self.figure.add_point(name, p)?;
                }
                for i in 0..4 {
                    self.figure.add_segment(&names[i], &names[(i + 1) % 4])?;
                }
                if self.figure.side().is_none() {
                    self.figure.set_side(side.clone());
                }
            }
            Command::Line { name, through: [p, q] } => {
                let line = line_through(self.figure.point(p)?, self.figure.point(q)?)?;
                self.define_line(name, line)?;
            }
            Command::Perp { name, through, to } => {
                let line = perpendicular_through(self.figure.point(through)?, self.line(to)?);
                self.define_line(name, line)?;
            }
            Command::Midpoint { name, of: [p, q] } => {
                let m = midpoint(self.figure.point(p)?, self.figure.point(q)?);
                self.figure.add_point(name, m)?;
            }
            Command::Intersect { name, lines: [l, m] } => {
                let p = intersect(self.line(l)?, self.line(m)?)?;
                self.figure.add_point(name, p)?;
            }
            Command::Segment { ends: [p, q] } => self.figure.add_segment(p, q)?,
            Command::Triangle { name, vertices: [p, q, r] } => {
                self.figure.add_triangle(name, [p.as_str(), q.as_str(), r.as_str()])?
            }
            Command::AssertArea { name, expected } => {
                let actual = self.figure.area(self.figure.triangle(name)?)?;
                self.record(command, span, expected, actual);
            }
            Command::AssertSqDist { ends: [p, q], expected } => {
                let actual = sq_dist(self.figure.point(p)?, self.figure.point(q)?);
                self.record(command, span, expected, actual);
            }
        }
        Ok(())
    }

    fn record(&mut self, command: &Command, span: Span, expected: &Rational, actual: Rational) {
        self.assertions.push(AssertionOutcome {
            span,
            command: command.to_string(),
            expected: expected.clone(),
            actual,
        });
    }
}

/// Runs the script in order. Geometric errors stop execution and carry the
/// command's span; failed assertions are collected and every one is run.
pub fn execute(script: &Script) -> Result<Execution, ExecError> {
    let mut env = Env::default();
    for statement in script.statements() {
        env.run(&statement.command, statement.span).map_err(|source| ExecError {
            span: statement.span,
            command: statement.command.to_string(),
            source,
        })?;
    }
    Ok(Execution { figure: env.figure, lines: env.lines, assertions: env.assertions })
}

pub fn execute_text(text: &str) -> Result<Execution, ScriptError> {
    Ok(execute(&parse_script(text)?)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::construction::builtin_script;
    use crate::geometry::build_bm15285_figure;

    fn r(s: &str) -> Rational {
        s.parse().unwrap()
    }

    #[test]
    fn square_macro() {
        let exec = execute_text("square P Q R S from 1 2 side 3/2").unwrap();
        let fig = &exec.figure;
        assert_eq!(fig.point("R").unwrap(), &Point::new(r("5/2"), r("7/2")));
        assert_eq!(fig.segments().len(), 4);
        assert_eq!(fig.side(), Some(&r("3/2")));
    }

    #[test]
    fn failed_assertions_are_collected() {
        let mut text = builtin_script("bm15285_p12", &r("60")).unwrap();
        text.push_str("assert_area T1 226\nassert_sq_dist L N 1800\n");
        let exec = execute_text(&text).unwrap();
        let failures: Vec<_> = exec.failures().collect();
        assert_eq!(failures.len(), 1);
        assert_eq!(failures[0].actual, r("225"));
        assert_eq!(failures[0].expected, r("226"));
        assert_eq!(failures[0].command, "assert_area T1 226");
        assert!(!exec.all_passed());
        assert!(exec.assertions.last().unwrap().passed());
    }

    #[test]
    fn geometric_errors_carry_spans() {
        let text = "point A 0 0\npoint B 1 0\npoint C 0 1\npoint D 1 1\n\
                    line l through A B\nline m through C D\nintersect X l m\n";
        let err = execute_text(text).unwrap_err();
        let ScriptError::Exec(e) = err else { panic!("expected exec error") };
        assert_eq!(e.span, Span { line: 7, column: 1 });
        assert!(matches!(e.source, GeometryError::ParallelLines(..)));

        let err = execute_text("point A 0 0\npoint B 0 0\nline l through A B").unwrap_err();
        assert_eq!(err.line(), 3);
        let err = execute_text("square A B C D from 0 0 side -1").unwrap_err();
        assert!(matches!(
            err,
            ScriptError::Exec(ExecError { source: GeometryError::NonPositiveSide(_), .. })
        ));
        let err = execute_text("point A 0 0\npoint B 1 1\npoint C 2 2\ntriangle t A B C").unwrap_err();
        assert_eq!(err.line(), 4);
    }

    #[test]
    fn builtin_matches_kernel_at_sixty() {
        let exec = execute_text(&builtin_script("bm15285_p12", &r("60")).unwrap()).unwrap();
        assert_eq!(exec.figure, build_bm15285_figure(&r("60")).unwrap());
        assert!(exec.all_passed());
    }

    #[test]
    fn ybc_diagonal_assertion() {
        let exec = execute_text(&builtin_script("ybc7289", &r("30")).unwrap()).unwrap();
        let bd = exec.assertions.iter().find(|a| a.command.starts_with("assert_sq_dist B D")).unwrap();
        assert_eq!(bd.command, "assert_sq_dist B D 1800");
        assert!(bd.passed());
        assert!(exec.all_passed());
    }
}
