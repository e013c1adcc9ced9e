//! The `reslat` text format.
//!
//! ```text
//! reslat 3
//! names 0 a 1
//! leq
//! 1 1 1
//! 0 1 1
//! 0 0 1
//! odot
//! 0 0 0
//! 0 a a
//! 0 a 1
//! imp            # optional, checked against the derived residuum
//! 1 1 1
//! 0 1 1
//! 0 a 1
//! ```
//!
//! `#` starts a comment; blank lines are ignored. Lines starting with `#!`
//! carry directives for the audit runner and are kept by [`parse_raw`].

use std::collections::HashMap;
use std::fmt::Write as _;

use thiserror::Error;

use crate::lattice::{LatticeError, ResLattice};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FormatError {
    #[error("line {line}: {message}")]
    Syntax { line: usize, message: String },
    #[error(transparent)]
    Lattice(#[from] LatticeError),
}

/// Tables as written in a file, before any law is checked.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RawTables {
    pub names: Vec<String>,
    pub leq: Vec<Vec<bool>>,
    pub odot: Vec<Vec<usize>>,
    pub imp: Option<Vec<Vec<usize>>>,
    /// Text after `#!` on directive lines, in file order.
    pub directives: Vec<String>,
}

pub fn serialize(rl: &ResLattice) -> String {
    let n = rl.size();
    let mut out = String::new();
    writeln!(out, "reslat {n}").unwrap();
    writeln!(out, "names {}", rl.names().join(" ")).unwrap();
    out.push_str("leq\n");
    for x in 0..n {
        let row: Vec<&str> = (0..n).map(|y| if rl.leq(x, y) { "1" } else { "0" }).collect();
        writeln!(out, "{}", row.join(" ")).unwrap();
    }
    for (block, op) in [("odot", ResLattice::odot as fn(&ResLattice, usize, usize) -> usize), ("imp", ResLattice::imp)] {
        writeln!(out, "{block}").unwrap();
        for x in 0..n {
            let row: Vec<&str> = (0..n).map(|y| rl.name(op(rl, x, y))).collect();
            writeln!(out, "{}", row.join(" ")).unwrap();
        }
    }
    out
}

struct Lines<'a> {
    inner: std::iter::Peekable<Box<dyn Iterator<Item = (usize, Vec<&'a str>)> + 'a>>,
    last_line: usize,
}

impl<'a> Lines<'a> {
    fn next(&mut self, what: &str) -> Result<(usize, Vec<&'a str>), FormatError> {
        match self.inner.next() {
            Some((line, toks)) => {
                self.last_line = line;
                Ok((line, toks))
            }
            None => Err(FormatError::Syntax {
                line: self.last_line + 1,
                message: format!("unexpected end of file, expected {what}"),
            }),
        }
    }
}

fn syntax<T>(line: usize, message: impl Into<String>) -> Result<T, FormatError> {
    Err(FormatError::Syntax {
        line,
        message: message.into(),
    })
}

fn expect_block(lines: &mut Lines, block: &str) -> Result<(), FormatError> {
    let (line, toks) = lines.next(block)?;
    if toks[..] != [block] {
        return syntax(line, format!("expected block {block:?}"));
    }
    Ok(())
}

fn read_rows<'a>(
    lines: &mut Lines<'a>,
    n: usize,
    block: &str,
) -> Result<Vec<(usize, Vec<&'a str>)>, FormatError> {
    let mut rows = Vec::with_capacity(n);
    for _ in 0..n {
        let (line, toks) = lines.next(&format!("{block} row"))?;
        if toks.len() != n {
            return syntax(line, format!("{block} row needs {n} entries, found {}", toks.len()));
        }
        rows.push((line, toks));
    }
    Ok(rows)
}

/// Reads the tables without checking any algebraic law.
pub fn parse_raw(text: &str) -> Result<RawTables, FormatError> {
    let mut directives = Vec::new();
    for raw in text.lines() {
        if let Some(d) = raw.trim_start().strip_prefix("#!") {
            directives.push(d.trim().to_string());
        }
    }
    let iter: Box<dyn Iterator<Item = (usize, Vec<&str>)>> = Box::new(
        text.lines()
            .enumerate()
            .map(|(i, raw)| {
                let content = raw.split('#').next().unwrap_or("");
                (i + 1, content.split_whitespace().collect::<Vec<_>>())
            })
            .filter(|(_, toks)| !toks.is_empty()),
    );
    let mut lines = Lines {
        inner: iter.peekable(),
        last_line: 0,
    };

    let (line, header) = lines.next("header")?;
    let n = match header[..] {
        ["reslat", count] => match count.parse::<usize>() {
            Ok(n) if n >= 2 => n,
            _ => return syntax(line, format!("invalid element count {count:?}")),
        },
        _ => return syntax(line, "expected \"reslat <n>\""),
    };

    let (line, names_line) = lines.next("names")?;
    if names_line.first() != Some(&"names") {
        return syntax(line, "expected \"names\"");
    }
    let names: Vec<String> = names_line[1..].iter().map(|s| s.to_string()).collect();
    if names.len() != n {
        return syntax(line, format!("expected {n} names, found {}", names.len()));
    }
    let mut index: HashMap<&str, usize> = HashMap::new();
    for (i, name) in names_line[1..].iter().enumerate() {
        if index.insert(name, i).is_some() {
            return syntax(line, format!("duplicate name {name:?}"));
        }
    }

    let labels = |rows: Vec<(usize, Vec<&str>)>| -> Result<Vec<Vec<usize>>, FormatError> {
        rows.into_iter()
            .map(|(line, toks)| {
                toks.iter()
                    .map(|t| match index.get(t) {
                        Some(&i) => Ok(i),
                        None => syntax(line, format!("unknown element {t:?}")),
                    })
                    .collect()
            })
            .collect()
    };

    expect_block(&mut lines, "leq")?;
    let leq = read_rows(&mut lines, n, "leq")?
        .into_iter()
        .map(|(line, toks)| {
            toks.iter()
                .map(|t| match *t {
                    "0" => Ok(false),
                    "1" => Ok(true),
                    other => syntax(line, format!("leq entries are 0 or 1, found {other:?}")),
                })
                .collect()
        })
        .collect::<Result<Vec<Vec<bool>>, _>>()?;

    expect_block(&mut lines, "odot")?;
    let odot = labels(read_rows(&mut lines, n, "odot")?)?;

    let imp = if lines.inner.peek().is_some() {
        expect_block(&mut lines, "imp")?;
        Some(labels(read_rows(&mut lines, n, "imp")?)?)
    } else {
        None
    };
    if let Some((line, _)) = lines.inner.next() {
        return syntax(line, "trailing content");
    }
    Ok(RawTables {
        names,
        leq,
        odot,
        imp,
        directives,
    })
}

/// Loads and fully checks a lattice. A declared `imp` block must equal the
/// derived residuum.
pub fn deserialize(text: &str) -> Result<ResLattice, FormatError> {
    let raw = parse_raw(text)?;
    let rl = match raw.imp {
        Some(imp) => ResLattice::with_declared_imp(raw.names, raw.leq, raw.odot, imp)?,
        None => ResLattice::new(raw.names, raw.leq, raw.odot)?,
    };
    Ok(rl)
}

#[cfg(test)]
mod tests {
    use super::*;

    const CHAIN3: &str = "\
# three-element chain with idempotent middle
reslat 3
names 0 a 1
leq
1 1 1
0 1 1
0 0 1
odot
0 0 0
0 a a   # a is idempotent
0 a 1
";

    #[test]
    fn loads_and_round_trips() {
        let rl = deserialize(CHAIN3).unwrap();
        assert_eq!(rl.imp(1, 0), 0);
        let text = serialize(&rl);
        assert!(text.ends_with("imp\n1 1 1\n0 1 1\n0 a 1\n"), "{text}");
        assert_eq!(deserialize(&text).unwrap(), rl);
        assert_eq!(serialize(&deserialize(&text).unwrap()), text);
    }

    #[test]
    fn syntax_errors_carry_lines() {
        let bad = CHAIN3.replace("0 a a", "0 a q");
        assert_eq!(
            deserialize(&bad),
            Err(FormatError::Syntax {
                line: 10,
                message: "unknown element \"q\"".into()
            })
        );
        let short = CHAIN3.replace("0 0 1\nodot", "0 1\nodot");
        assert!(matches!(deserialize(&short), Err(FormatError::Syntax { line: 7, .. })));
        assert!(matches!(
            deserialize("reslat 1\n"),
            Err(FormatError::Syntax { line: 1, .. })
        ));
        let truncated: String = CHAIN3.lines().take(8).map(|l| format!("{l}\n")).collect();
        assert!(matches!(deserialize(&truncated), Err(FormatError::Syntax { line: 9, .. })));
        let extra = format!("{CHAIN3}imp\n1 1 1\n0 1 1\n0 a 1\nodot\n");
        assert_eq!(deserialize(&extra).unwrap_err().to_string(), "line 16: trailing content");
    }

    #[test]
    fn declared_residuum_is_checked() {
        let wrong = format!("{CHAIN3}imp\n1 1 1\n0 1 1\n0 1 1\n");
        assert_eq!(
            deserialize(&wrong),
            Err(FormatError::Lattice(LatticeError::ResiduumMismatch {
                x: 2,
                y: 1,
                declared: 2,
                derived: 1
            }))
        );
    }

    #[test]
    fn directives_are_collected() {
        let text = format!("#! claim bl true\n{CHAIN3}#! claim mv false\n");
        let raw = parse_raw(&text).unwrap();
        assert_eq!(raw.directives, ["claim bl true", "claim mv false"]);
        assert!(raw.imp.is_none());
    }
}
