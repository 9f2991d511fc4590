//! A line-oriented construction language over the geometry kernel.
//!
//! ```text
//! script   := (line NL)* ;
//! line     := comment | command | ε ;
//! comment  := "#" any* ;
//! command  := "point" NAME rat rat
//!           | "square" NAME NAME NAME NAME "from" rat rat "side" rat
//!           | "line" NAME "through" NAME NAME
//!           | "perp" NAME "through" NAME "to" NAME
//!           | "midpoint" NAME NAME NAME
//!           | "intersect" NAME NAME NAME
//!           | "segment" NAME NAME
//!           | "triangle" NAME NAME NAME NAME
//!           | "assert_area" NAME rat
//!           | "assert_sq_dist" NAME NAME rat ;
//! rat      := "-"? INT ("/" POSINT)? ;
//! NAME     := [A-Za-z][A-Za-z0-9_]* ;
//! ```
//!
//! `square` expands to four counterclockwise corners and the four sides.
//! Points, lines and triangles share one namespace; names are defined
//! exactly once and before use.

mod interp;
mod parser;
mod scripts;

use std::fmt;

use thiserror::Error;

use crate::geometry::GeometryError;
use crate::numeric::Rational;

pub use interp::{execute, execute_text, AssertionOutcome, Execution};
pub use parser::parse_script;
pub use scripts::{builtin_script, builtin_scripts, default_side, SIDE_VARIABLE};

/// 1-based position of a command's first token.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub struct Span {
    pub line: usize,
    pub column: usize,
}

impl fmt::Display for Span {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}", self.line, self.column)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum NameKind {
    Point,
    Line,
    Triangle,
}

impl fmt::Display for NameKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            NameKind::Point => "point",
            NameKind::Line => "line",
            NameKind::Triangle => "triangle",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Command {
    Point { name: String, x: Rational, y: Rational },
    Square { names: [String; 4], origin: (Rational, Rational), side: Rational },
    Line { name: String, through: [String; 2] },
    Perp { name: String, through: String, to: String },
    Midpoint { name: String, of: [String; 2] },
    Intersect { name: String, lines: [String; 2] },
    Segment { ends: [String; 2] },
    Triangle { name: String, vertices: [String; 3] },
    AssertArea { name: String, expected: Rational },
    AssertSqDist { ends: [String; 2], expected: Rational },
}

impl fmt::Display for Command {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Command::Point { name, x, y } => write!(f, "point {name} {x} {y}"),
            Command::Square { names: [a, b, c, d], origin: (x, y), side } => {
                write!(f, "square {a} {b} {c} {d} from {x} {y} side {side}")
            }
            Command::Line { name, through: [p, q] } => write!(f, "line {name} through {p} {q}"),
            Command::Perp { name, through, to } => write!(f, "perp {name} through {through} to {to}"),
            Command::Midpoint { name, of: [p, q] } => write!(f, "midpoint {name} {p} {q}"),
            Command::Intersect { name, lines: [l, m] } => write!(f, "intersect {name} {l} {m}"),
            Command::Segment { ends: [p, q] } => write!(f, "segment {p} {q}"),
            Command::Triangle { name, vertices: [p, q, r] } => {
                write!(f, "triangle {name} {p} {q} {r}")
            }
            Command::AssertArea { name, expected } => write!(f, "assert_area {name} {expected}"),
            Command::AssertSqDist { ends: [p, q], expected } => {
                write!(f, "assert_sq_dist {p} {q} {expected}")
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Statement {
    pub command: Command,
    pub span: Span,
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Script {
    statements: Vec<Statement>,
}

impl Script {
    pub fn statements(&self) -> &[Statement] {
        &self.statements
    }

    pub fn commands(&self) -> impl Iterator<Item = &Command> {
        self.statements.iter().map(|s| &s.command)
    }

    /// Canonical text: one command per line, single spaces, no comments.
    pub fn format(&self) -> String {
        self.commands().map(|c| format!("{c}\n")).collect()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ParseErrorKind {
    UnknownCommand,
    Arity { expected: usize, found: usize },
    ExpectedKeyword(&'static str),
    MalformedRational,
    ZeroDenominator,
    BadName,
    UseBeforeDefinition,
    Redefinition,
    WrongKind { expected: NameKind, found: NameKind },
}

impl fmt::Display for ParseErrorKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ParseErrorKind::UnknownCommand => f.write_str("unknown command"),
            ParseErrorKind::Arity { expected, found } => {
                write!(f, "expected {expected} arguments, found {found}")
            }
            ParseErrorKind::ExpectedKeyword(word) => write!(f, "expected keyword {word:?}"),
            ParseErrorKind::MalformedRational => f.write_str("malformed rational"),
            ParseErrorKind::ZeroDenominator => f.write_str("zero denominator"),
            ParseErrorKind::BadName => f.write_str("invalid name"),
            ParseErrorKind::UseBeforeDefinition => f.write_str("used before definition"),
            ParseErrorKind::Redefinition => f.write_str("name already defined"),
            ParseErrorKind::WrongKind { expected, found } => {
                write!(f, "expected a {expected} name, found a {found}")
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("{line}:{column}: {kind} at {token:?}")]
pub struct ParseError {
    pub line: usize,
    pub column: usize,
    pub token: String,
    pub kind: ParseErrorKind,
}

/// A geometric failure while executing the command at `span`.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("{span}: {command}: {source}")]
pub struct ExecError {
    pub span: Span,
    pub command: String,
    pub source: GeometryError,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ScriptError {
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error(transparent)]
    Exec(#[from] ExecError),
}

impl ScriptError {
    pub fn line(&self) -> usize {
        match self {
            ScriptError::Parse(e) => e.line,
            ScriptError::Exec(e) => e.span.line,
        }
    }
}
