//! Single-output Berkeley PLA files.

use crate::cover::Cover;
use crate::cube::{Cube, Literal};
use crate::error::{Error, Result};
use crate::expand::FunctionSpec;

use super::VariableNames;

/// A parsed PLA: the cubes of its `1` and `-` rows and the optional `.ilb`
/// input names.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Pla {
    pub names: Option<VariableNames>,
    pub on: Cover,
    pub dc: Cover,
}

impl Pla {
    pub fn width(&self) -> usize {
        self.on.width()
    }

    /// Minterm-level view; the ON-set wins where rows overlap.
    pub fn function(&self) -> Result<FunctionSpec> {
        FunctionSpec::new(self.on.minterms()?, self.dc.minterms()?)
    }
}

pub fn read_pla(text: &str) -> Result<Pla> {
    let mut width: Option<usize> = None;
    let mut names: Option<Vec<String>> = None;
    let mut on: Vec<Cube> = vec![];
    let mut dc: Vec<Cube> = vec![];

    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let err = |msg: String| Error::Pla { line: line_no, msg };
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        if let Some(directive) = line.strip_prefix('.') {
            let mut parts = directive.split_whitespace();
            let key = parts.next().unwrap_or("");
            let args: Vec<&str> = parts.collect();
            match key {
                "i" => {
                    let n =
                        single_number(&args).ok_or_else(|| err(".i expects a number".into()))?;
                    crate::cube::check_width(n).map_err(|e| err(e.to_string()))?;
                    width = Some(n);
                }
                "o" => {
                    let n =
                        single_number(&args).ok_or_else(|| err(".o expects a number".into()))?;
                    if n != 1 {
                        return Err(Error::UnsupportedPla(format!(
                            "{n} outputs; only single-output files are supported"
                        )));
                    }
                }
                "p" => {
                    single_number(&args).ok_or_else(|| err(".p expects a number".into()))?;
                }
                "ilb" => names = Some(args.iter().map(|s| s.to_string()).collect()),
                "ob" => {}
                "type" => match args.first().copied() {
                    Some("f" | "fd" | "fr" | "fdr") => {}
                    other => {
                        return Err(Error::UnsupportedPla(format!(
                            "type {}",
                            other.unwrap_or("<missing>")
                        )))
                    }
                },
                "e" | "end" => break,
                other => return Err(err(format!("unknown directive .{other}"))),
            }
            continue;
        }

        let n = width.ok_or_else(|| err("cube line before .i".into()))?;
        let tokens: Vec<&str> = line.split_whitespace().collect();
        let (input, output) = match tokens[..] {
            [input, output] => (input, output),
            [joined] if joined.len() == n + 1 => joined.split_at(n),
            _ => return Err(err(format!("expected '<inputs> <output>', got {line:?}"))),
        };
        if input.chars().count() != n {
            return Err(err(format!(
                "input part has {} characters, expected {n}",
                input.chars().count()
            )));
        }
        let lits = input
            .chars()
            .map(|c| Literal::from_char(c).ok_or_else(|| err(format!("bad input character {c:?}"))))
            .collect::<Result<Vec<_>>>()?;
        let cube = Cube::from_literals(&lits)?;
        match output {
            "1" => on.push(cube),
            "-" | "2" => dc.push(cube),
            "0" | "~" => {}
            other => return Err(err(format!("bad output value {other:?}"))),
        }
    }

    let width = width.ok_or_else(|| Error::UnsupportedPla("missing .i".into()))?;
    let names = match names {
        Some(list) => {
            let v = VariableNames::new(list)?;
            v.check_width(width)?;
            Some(v)
        }
        None => None,
    };
    Ok(Pla {
        names,
        on: Cover::new(width, on)?,
        dc: Cover::new(width, dc)?,
    })
}

fn single_number(args: &[&str]) -> Option<usize> {
    match args {
        [n] => n.parse().ok(),
        _ => None,
    }
}

fn header(width: usize, rows: usize, names: Option<&VariableNames>) -> Result<String> {
    let mut out = format!(".i {width}\n.o 1\n");
    if let Some(names) = names {
        names.check_width(width)?;
        out.push_str(".ilb");
        for n in names.iter() {
            out.push(' ');
            out.push_str(n);
        }
        out.push('\n');
    }
    out.push_str(&format!(".p {rows}\n"));
    Ok(out)
}

/// Writes one full-minterm row per ON minterm (`1`) and DC minterm (`-`).
pub fn write_pla(f: &FunctionSpec, names: Option<&VariableNames>) -> Result<String> {
    let width = f.width();
    let mut out = header(width, f.on().len() + f.dc().len(), names)?;
    for (set, value) in [(f.on(), '1'), (f.dc(), '-')] {
        for m in set.iter() {
            out.push_str(&Cube::from_minterm(width, m)?.encoding());
            out.push(' ');
            out.push(value);
            out.push('\n');
        }
    }
    out.push_str(".e\n");
    Ok(out)
}

/// Writes one row per cube with output `1`.
pub fn write_pla_cover(cover: &Cover, names: Option<&VariableNames>) -> Result<String> {
    let mut out = header(cover.width(), cover.len(), names)?;
    for cube in cover.cubes() {
        out.push_str(&cube.encoding());
        out.push_str(" 1\n");
    }
    out.push_str(".e\n");
    Ok(out)
}
