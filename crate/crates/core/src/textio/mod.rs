//! Text formats: algebraic expressions, single-output PLA files, and ASCII
//! renderings of Tail-Eliminate maps and Karnaugh maps.

mod expr;
mod pla;
mod render;

pub use expr::{infer_names, parse_expression, render_expression, render_term, ParsedExpression};
pub use pla::{read_pla, write_pla, write_pla_cover, Pla};
pub use render::{render_kmap, render_te_map};

use std::fmt;

use crate::cube::MAX_WIDTH;
use crate::error::{Error, Result};

/// Ordered, distinct variable names; index 0 is the most significant bit.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct VariableNames(Vec<String>);

impl VariableNames {
    pub fn new<S: Into<String>, I: IntoIterator<Item = S>>(names: I) -> Result<Self> {
        let names: Vec<String> = names.into_iter().map(Into::into).collect();
        if names.is_empty() || names.len() > MAX_WIDTH {
            return Err(Error::Names(format!(
                "expected 1 to {MAX_WIDTH} names, got {}",
                names.len()
            )));
        }
        for (i, name) in names.iter().enumerate() {
            if !is_valid_name(name) {
                return Err(Error::Names(format!("invalid name {name:?}")));
            }
            if names[..i].contains(name) {
                return Err(Error::Names(format!("duplicate name {name:?}")));
            }
        }
        Ok(VariableNames(names))
    }

    /// `A`, `B`, `C`, ... for the first 26 variables, then `V26`, `V27`, ...
    pub fn default_for(width: usize) -> Self {
        VariableNames(
            (0..width)
                .map(|i| {
                    if i < 26 {
                        char::from(b'A' + i as u8).to_string()
                    } else {
                        format!("V{i}")
                    }
                })
                .collect(),
        )
    }

    /// Parses a comma or whitespace separated list.
    pub fn parse_list(list: &str) -> Result<Self> {
        VariableNames::new(
            list.split(|c: char| c == ',' || c.is_whitespace())
                .filter(|s| !s.is_empty()),
        )
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn get(&self, index: usize) -> &str {
        &self.0[index]
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.0.iter().position(|n| n == name)
    }

    pub fn iter(&self) -> impl Iterator<Item = &str> {
        self.0.iter().map(String::as_str)
    }

    pub(crate) fn all_single_char(&self) -> bool {
        self.0.iter().all(|n| n.len() == 1)
    }

    pub(crate) fn check_width(&self, width: usize) -> Result<()> {
        if self.len() != width {
            Err(Error::Names(format!(
                "{} names given for {width} variables",
                self.len()
            )))
        } else {
            Ok(())
        }
    }
}

impl fmt::Debug for VariableNames {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(&self.0).finish()
    }
}

fn is_valid_name(name: &str) -> bool {
    let mut chars = name.chars();
    matches!(chars.next(), Some(c) if c.is_ascii_alphabetic())
        && chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

pub(crate) fn names_or_default(
    names: Option<&VariableNames>,
    width: usize,
) -> Result<VariableNames> {
    match names {
        Some(n) => {
            n.check_width(width)?;
            Ok(n.clone())
        }
        None => Ok(VariableNames::default_for(width)),
    }
}
