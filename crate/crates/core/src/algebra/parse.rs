use thiserror::Error;

use super::{AlgebraError, Elem, FiniteBLAlgebra};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ParseError {
    #[error("line {line}, column {column}: {message}")]
    Syntax {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("line {line}, column {column}: duplicate element `{name}`")]
    DuplicateElement {
        line: usize,
        column: usize,
        name: String,
    },
    #[error("line {line}: {table} table has {found} {what}, expected {expected}")]
    TableShape {
        line: usize,
        table: &'static str,
        what: &'static str,
        expected: usize,
        found: usize,
    },
    #[error("line {line}, column {column}: unknown element `{name}`")]
    UnknownElement {
        line: usize,
        column: usize,
        name: String,
    },
    #[error("missing `{0}` declaration")]
    MissingDeclaration(&'static str),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
}

/// Splits a line into whitespace-separated tokens with their 1-based
/// columns, dropping anything after `#`.
pub(crate) fn tokens(line: &str) -> Vec<(usize, &str)> {
    let line = line.split('#').next().unwrap_or("");
    let mut out = Vec::new();
    let mut start = None;
    for (i, c) in line.char_indices() {
        match (c.is_whitespace(), start) {
            (true, Some(s)) => {
                out.push((s, &line[s..i]));
                start = None;
            }
            (false, None) => start = Some(i),
            _ => {}
        }
    }
    if let Some(s) = start {
        out.push((s, &line[s..]));
    }
    out.into_iter()
        .map(|(byte, tok)| (line[..byte].chars().count() + 1, tok))
        .collect()
}

fn syntax(line: usize, column: usize, message: impl Into<String>) -> ParseError {
    ParseError::Syntax {
        line,
        column,
        message: message.into(),
    }
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Section {
    Header,
    Odot,
    Imp,
    Done,
}

/// Parses the algebra file format:
///
/// ```text
/// algebra <name>
/// elements <e1> ... <en>
/// bottom <ei>
/// top <ej>
/// odot:
/// <n rows of n tokens>
/// imp:
/// <n rows of n tokens>
/// end
/// ```
///
/// Row `x`, column `y` holds `x ⊙ y` (resp. `x → y`). No axioms are checked.
pub fn parse_algebra(text: &str) -> Result<FiniteBLAlgebra, ParseError> {
    let mut name: Option<String> = None;
    let mut names: Option<Vec<String>> = None;
    let mut bottom: Option<Elem> = None;
    let mut top: Option<Elem> = None;
    let mut odot: Vec<Vec<Elem>> = Vec::new();
    let mut imp: Vec<Vec<Elem>> = Vec::new();
    let mut section = Section::Header;
    let mut section_line = 0;

    let lookup = |names: &Option<Vec<String>>, line: usize, col: usize, tok: &str| {
        names
            .as_ref()
            .and_then(|ns| ns.iter().position(|n| n == tok))
            .map(Elem)
            .ok_or_else(|| ParseError::UnknownElement {
                line,
                column: col,
                name: tok.to_string(),
            })
    };

    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let toks = tokens(raw);
        let Some(&(col, head)) = toks.first() else {
            continue;
        };
        if section == Section::Done {
            return Err(syntax(line, col, "content after `end`"));
        }

        match head {
            "odot:" | "imp:" | "end" => {
                if let Some(&(c, extra)) = toks.get(1) {
                    return Err(syntax(line, c, format!("unexpected token `{extra}`")));
                }
                let n = names
                    .as_ref()
                    .ok_or(ParseError::MissingDeclaration("elements"))?
                    .len();
                // close the table we were filling
                let (label, rows) = match section {
                    Section::Odot => ("odot", odot.len()),
                    Section::Imp => ("imp", imp.len()),
                    _ => ("", n),
                };
                if rows != n {
                    return Err(ParseError::TableShape {
                        line: section_line,
                        table: label,
                        what: "rows",
                        expected: n,
                        found: rows,
                    });
                }
                section = match (head, section) {
                    ("odot:", Section::Header) => Section::Odot,
                    ("imp:", Section::Odot) => Section::Imp,
                    ("end", Section::Imp) => Section::Done,
                    _ => return Err(syntax(line, col, format!("`{head}` out of order"))),
                };
                section_line = line;
            }
            _ if section == Section::Header => {
                let args = &toks[1..];
                let single = || match args {
                    [(_, v)] => Ok(*v),
                    [] => Err(syntax(
                        line,
                        col + head.len(),
                        format!("`{head}` needs a value"),
                    )),
                    [_, (c, v), ..] => Err(syntax(line, *c, format!("unexpected token `{v}`"))),
                };
                match head {
                    "algebra" => {
                        if name.is_some() {
                            return Err(syntax(line, col, "repeated `algebra` declaration"));
                        }
                        name = Some(single()?.to_string());
                    }
                    "elements" => {
                        if names.is_some() {
                            return Err(syntax(line, col, "repeated `elements` declaration"));
                        }
                        let mut list: Vec<String> = Vec::new();
                        for &(c, tok) in args {
                            if list.iter().any(|n| n == tok) {
                                return Err(ParseError::DuplicateElement {
                                    line,
                                    column: c,
                                    name: tok.to_string(),
                                });
                            }
                            list.push(tok.to_string());
                        }
                        if list.len() < 2 {
                            return Err(syntax(line, col, "at least two elements are required"));
                        }
                        names = Some(list);
                    }
                    "bottom" | "top" => {
                        let tok = single()?;
                        let vcol = args[0].0;
                        if names.is_none() {
                            return Err(syntax(line, col, "`elements` must precede bounds"));
                        }
                        let e = lookup(&names, line, vcol, tok)?;
                        let slot = if head == "bottom" {
                            &mut bottom
                        } else {
                            &mut top
                        };
                        if slot.is_some() {
                            return Err(syntax(
                                line,
                                col,
                                format!("repeated `{head}` declaration"),
                            ));
                        }
                        *slot = Some(e);
                    }
                    _ => return Err(syntax(line, col, format!("unknown keyword `{head}`"))),
                }
            }
            _ => {
                let n = names.as_ref().map_or(0, Vec::len);
                let (label, table) = match section {
                    Section::Odot => ("odot", &mut odot),
                    _ => ("imp", &mut imp),
                };
                if toks.len() != n {
                    return Err(ParseError::TableShape {
                        line,
                        table: label,
                        what: "columns",
                        expected: n,
                        found: toks.len(),
                    });
                }
                if table.len() == n {
                    return Err(ParseError::TableShape {
                        line,
                        table: label,
                        what: "rows",
                        expected: n,
                        found: n + 1,
                    });
                }
                let row = toks
                    .iter()
                    .map(|&(c, t)| lookup(&names, line, c, t))
                    .collect::<Result<Vec<_>, _>>()?;
                table.push(row);
            }
        }
    }

    let name = name.ok_or(ParseError::MissingDeclaration("algebra"))?;
    let names = names.ok_or(ParseError::MissingDeclaration("elements"))?;
    let bottom = bottom.ok_or(ParseError::MissingDeclaration("bottom"))?;
    let top = top.ok_or(ParseError::MissingDeclaration("top"))?;
    match section {
        Section::Done => {}
        Section::Header => return Err(ParseError::MissingDeclaration("odot:")),
        Section::Odot => return Err(ParseError::MissingDeclaration("imp:")),
        Section::Imp => return Err(ParseError::MissingDeclaration("end")),
    }
    Ok(FiniteBLAlgebra::from_tables(
        name, names, bottom, top, odot, imp,
    )?)
}
