//! Sum-of-products expressions such as `A'C' + A'B + BC`.
//!
//! Juxtaposition is AND, `+` is OR, a trailing `'` or a leading `!`
//! complements a variable, and the terms `1` and `0` are the constants.

use crate::cover::Cover;
use crate::cube::{Cube, Literal};
use crate::error::{Error, Result};

use super::{names_or_default, VariableNames};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParsedExpression {
    pub cover: Cover,
    pub names: VariableNames,
    /// Terms dropped because they contain a variable in both polarities.
    pub contradictions: usize,
}

/// Picks variable names for expressions parsed without an explicit list.
///
/// Every letter is its own variable. When all of them are upper case the
/// names run from `A` to the last letter used, so `A'C' + BC` is over
/// `(A, B, C)`; otherwise names are taken in order of first appearance.
pub fn infer_names<S: AsRef<str>>(texts: &[S]) -> Result<VariableNames> {
    let mut seen: Vec<char> = vec![];
    for text in texts {
        for c in text.as_ref().chars() {
            if c.is_ascii_alphabetic() && !seen.contains(&c) {
                seen.push(c);
            }
        }
    }
    if seen.is_empty() {
        return Ok(VariableNames::default_for(1));
    }
    if seen.iter().all(char::is_ascii_uppercase) {
        let last = *seen.iter().max().unwrap();
        return VariableNames::new(('A'..=last).map(String::from));
    }
    VariableNames::new(seen.into_iter().map(String::from))
}

pub fn parse_expression(text: &str, names: Option<&VariableNames>) -> Result<ParsedExpression> {
    let names = match names {
        Some(n) => n.clone(),
        None => infer_names(&[text])?,
    };
    Parser::new(text, &names).parse()
}

struct Parser<'a> {
    chars: Vec<char>,
    pos: usize,
    names: &'a VariableNames,
}

impl<'a> Parser<'a> {
    fn new(text: &str, names: &'a VariableNames) -> Self {
        Parser {
            chars: text.chars().collect(),
            pos: 0,
            names,
        }
    }

    fn error(&self, msg: impl Into<String>) -> Error {
        Error::Parse {
            pos: self.pos,
            msg: msg.into(),
        }
    }

    fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).copied()
    }

    fn skip_ws(&mut self) {
        while self.peek().is_some_and(char::is_whitespace) {
            self.pos += 1;
        }
    }

    fn parse(mut self) -> Result<ParsedExpression> {
        let width = self.names.len();
        let mut cover = Cover::empty(width)?;
        let mut contradictions = 0;
        loop {
            self.skip_ws();
            match self.term()? {
                Term::Cube(c) => {
                    cover.push(c)?;
                }
                Term::Zero => {}
                Term::Contradiction => contradictions += 1,
            }
            self.skip_ws();
            match self.peek() {
                None => break,
                Some('+') => self.pos += 1,
                Some(c) => return Err(self.error(format!("unexpected {c:?}"))),
            }
        }
        Ok(ParsedExpression {
            cover,
            names: self.names.clone(),
            contradictions,
        })
    }

    fn term(&mut self) -> Result<Term> {
        let width = self.names.len();
        let mut cube = Cube::universal(width)?;
        let mut zero = false;
        let mut contradiction = false;
        let mut factors = 0;
        loop {
            self.skip_ws();
            let Some(c) = self.peek() else { break };
            match c {
                '+' => break,
                '0' => {
                    self.pos += 1;
                    zero = true;
                }
                '1' => {
                    self.pos += 1;
                }
                '!' | 'A'..='Z' | 'a'..='z' => {
                    let (var, lit) = self.literal()?;
                    match (cube.literal(var), lit) {
                        (Literal::Free, _) => cube = cube.with_literal(var, lit),
                        (a, b) if a == b => {}
                        _ => contradiction = true,
                    }
                }
                other => return Err(self.error(format!("unexpected {other:?}"))),
            }
            factors += 1;
        }
        if factors == 0 {
            return Err(self.error("expected a term"));
        }
        Ok(if zero {
            Term::Zero
        } else if contradiction {
            Term::Contradiction
        } else {
            Term::Cube(cube)
        })
    }

    fn literal(&mut self) -> Result<(usize, Literal)> {
        let mut negated = false;
        while self.peek() == Some('!') {
            negated = !negated;
            self.pos += 1;
            self.skip_ws();
        }
        let start = self.pos;
        let mut end = start;
        while self
            .chars
            .get(end)
            .is_some_and(|c| c.is_ascii_alphanumeric() || *c == '_')
        {
            end += 1;
        }
        // Longest known name that prefixes the identifier run.
        let run: String = self.chars[start..end].iter().collect();
        let found = (1..=run.len())
            .rev()
            .find_map(|len| self.names.index_of(&run[..len]).map(|i| (i, len)));
        let Some((var, len)) = found else {
            return Err(self.error(format!("unknown variable in {run:?}")));
        };
        self.pos = start + len;
        while self.peek() == Some('\'') {
            negated = !negated;
            self.pos += 1;
        }
        Ok((var, if negated { Literal::Neg } else { Literal::Pos }))
    }
}

enum Term {
    Cube(Cube),
    Zero,
    Contradiction,
}

/// One product term; the universal cube renders as `1`.
pub fn render_term(cube: &Cube, names: &VariableNames) -> String {
    let sep = if names.all_single_char() { "" } else { " " };
    let parts: Vec<String> = cube
        .literals()
        .enumerate()
        .filter_map(|(i, lit)| match lit {
            Literal::Free => None,
            Literal::Pos => Some(names.get(i).to_string()),
            Literal::Neg => Some(format!("{}'", names.get(i))),
        })
        .collect();
    if parts.is_empty() {
        "1".to_string()
    } else {
        parts.join(sep)
    }
}

pub fn render_expression(cover: &Cover, names: Option<&VariableNames>) -> Result<String> {
    let names = names_or_default(names, cover.width())?;
    if cover.is_empty() {
        return Ok("0".to_string());
    }
    Ok(cover
        .cubes()
        .iter()
        .map(|c| render_term(c, &names))
        .collect::<Vec<_>>()
        .join(" + "))
}
