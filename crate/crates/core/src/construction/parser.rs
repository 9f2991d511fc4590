use std::collections::HashMap;

use super::{Command, NameKind, ParseError, ParseErrorKind, Script, Span, Statement};
use crate::numeric::{NumericError, Rational};

struct Token<'a> {
    text: &'a str,
    column: usize,
}

/// Splits a line on spaces and tabs, keeping 1-based character columns.
fn tokenize(line: &str) -> Vec<Token<'_>> {
    let mut tokens = Vec::new();
    let mut start: Option<(usize, usize)> = None;
    for (column, (offset, c)) in line.char_indices().enumerate() {
        let column = column + 1;
        if c == ' ' || c == '\t' {
            if let Some((s, col)) = start.take() {
                tokens.push(Token { text: &line[s..offset], column: col });
            }
        } else if start.is_none() {
            start = Some((offset, column));
        }
    }
    if let Some((s, col)) = start {
        tokens.push(Token { text: &line[s..], column: col });
    }
    tokens
}

struct Parser {
    line: usize,
    names: HashMap<String, NameKind>,
}

impl Parser {
    fn error(&self, token: &Token<'_>, kind: ParseErrorKind) -> ParseError {
        ParseError { line: self.line, column: token.column, token: token.text.to_string(), kind }
    }

    fn name(&self, token: &Token<'_>) -> Result<String, ParseError> {
        let mut chars = token.text.chars();
        let valid = chars.next().is_some_and(|c| c.is_ascii_alphabetic())
            && chars.all(|c| c.is_ascii_alphanumeric() || c == '_');
        if !valid {
            return Err(self.error(token, ParseErrorKind::BadName));
        }
        Ok(token.text.to_string())
    }

    /// A name that must already exist with the given kind.
    fn reference(&self, token: &Token<'_>, kind: NameKind) -> Result<String, ParseError> {
        let name = self.name(token)?;
        match self.names.get(&name) {
            None => Err(self.error(token, ParseErrorKind::UseBeforeDefinition)),
            Some(&found) if found != kind => {
                Err(self.error(token, ParseErrorKind::WrongKind { expected: kind, found }))
            }
            Some(_) => Ok(name),
        }
    }

    fn define(&mut self, token: &Token<'_>, kind: NameKind) -> Result<String, ParseError> {
        let name = self.name(token)?;
        if self.names.contains_key(&name) {
            return Err(self.error(token, ParseErrorKind::Redefinition));
        }
        self.names.insert(name.clone(), kind);
        Ok(name)
    }

    fn rational(&self, token: &Token<'_>) -> Result<Rational, ParseError> {
        token.text.parse().map_err(|e| {
            let kind = match e {
                NumericError::ZeroDenominator(_) => ParseErrorKind::ZeroDenominator,
                _ => ParseErrorKind::MalformedRational,
            };
            self.error(token, kind)
        })
    }

    fn keyword(&self, token: &Token<'_>, word: &'static str) -> Result<(), ParseError> {
        if token.text != word {
            return Err(self.error(token, ParseErrorKind::ExpectedKeyword(word)));
        }
        Ok(())
    }

    fn command(&mut self, tokens: &[Token<'_>]) -> Result<Command, ParseError> {
        let head = &tokens[0];
        let arity = match head.text {
            "point" => 3,
            "square" => 9,
            "line" => 4,
            "perp" => 5,
            "midpoint" | "intersect" | "triangle" => 3 + usize::from(head.text == "triangle"),
            "segment" | "assert_area" => 2,
            "assert_sq_dist" => 3,
            _ => return Err(self.error(head, ParseErrorKind::UnknownCommand)),
        };
        let args = &tokens[1..];
        if args.len() != arity {
            let at = args.get(arity).unwrap_or(head);
            return Err(self.error(at, ParseErrorKind::Arity { expected: arity, found: args.len() }));
        }
        use NameKind::{Line, Point, Triangle};
        // References are resolved before the defined name is registered, so a
        // command cannot refer to the name it introduces.
        Ok(match head.text {
            "point" => {
                let (x, y) = (self.rational(&args[1])?, self.rational(&args[2])?);
                Command::Point { name: self.define(&args[0], Point)?, x, y }
            }
            "square" => {
                self.keyword(&args[4], "from")?;
                self.keyword(&args[7], "side")?;
                let origin = (self.rational(&args[5])?, self.rational(&args[6])?);
                let side = self.rational(&args[8])?;
                let names = [
                    self.define(&args[0], Point)?,
                    self.define(&args[1], Point)?,
                    self.define(&args[2], Point)?,
                    self.define(&args[3], Point)?,
                ];
                Command::Square { names, origin, side }
            }
            "line" => {
                self.keyword(&args[1], "through")?;
                let through = [self.reference(&args[2], Point)?, self.reference(&args[3], Point)?];
                Command::Line { name: self.define(&args[0], Line)?, through }
            }
            "perp" => {
                self.keyword(&args[1], "through")?;
                self.keyword(&args[3], "to")?;
                let through = self.reference(&args[2], Point)?;
                let to = self.reference(&args[4], Line)?;
                Command::Perp { name: self.define(&args[0], Line)?, through, to }
            }
            "midpoint" => {
                let of = [self.reference(&args[1], Point)?, self.reference(&args[2], Point)?];
                Command::Midpoint { name: self.define(&args[0], Point)?, of }
            }
            "intersect" => {
                let lines = [self.reference(&args[1], Line)?, self.reference(&args[2], Line)?];
                Command::Intersect { name: self.define(&args[0], Point)?, lines }
            }
            "segment" => Command::Segment {
                ends: [self.reference(&args[0], Point)?, self.reference(&args[1], Point)?],
            },
            "triangle" => {
                let vertices = [
                    self.reference(&args[1], Point)?,
                    self.reference(&args[2], Point)?,
                    self.reference(&args[3], Point)?,
                ];
                Command::Triangle { name: self.define(&args[0], Triangle)?, vertices }
            }
            "assert_area" => Command::AssertArea {
                name: self.reference(&args[0], Triangle)?,
                expected: self.rational(&args[1])?,
            },
            "assert_sq_dist" => Command::AssertSqDist {
                ends: [self.reference(&args[0], Point)?, self.reference(&args[1], Point)?],
                expected: self.rational(&args[2])?,
            },
            _ => unreachable!("command words matched above"),
        })
    }
}

/// Parses a construction script, one command per line.
///
/// Blank lines and lines starting with `#` are skipped. Names are resolved
/// here: every reference must name an earlier definition of the right kind.
pub fn parse_script(text: &str) -> Result<Script, ParseError> {
    let mut parser = Parser { line: 0, names: HashMap::new() };
    let mut statements = Vec::new();
    for (i, line) in text.lines().enumerate() {
        parser.line = i + 1;
        let tokens = tokenize(line);
        let Some(head) = tokens.first() else { continue };
        if head.text.starts_with('#') {
            continue;
        }
        let command = parser.command(&tokens)?;
        statements.push(Statement { command, span: Span { line: i + 1, column: head.column } });
    }
    Ok(Script { statements })
}
