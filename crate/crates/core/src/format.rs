//! The `uas` and `ucat` text formats: line oriented, `#` comments,
//! whitespace-separated name tokens.
//!
//! A semigroup document:
//!
//! ```text
//! uas 1
//! order 4
//! names e f a 0
//! mul
//! e a a 0
//! 0 f 0 0
//! 0 a 0 0
//! 0 0 0 0
//! plus e f e 0
//! ```
//!
//! `minus` and `star` lines are optional and follow `plus`. A category
//! document (`ucat 1`) carries `order`, `names`, `plus`, `minus`, then
//! `comp` (`n` rows, `.` for undefined), `ltr` and `rtr` (one row per
//! object, in element order restricted to the object set). Rendering emits
//! canonical whitespace, so parse ∘ render is the identity on rendered
//! documents.

use crate::category::{CategoryTables, TranscriptionCategory};
use crate::semigroup::FiniteUnarySemigroup;
use crate::{Error, UnaryOp};

/// Parse-level failures, with 1-based line numbers.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum FormatError {
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("unsupported format version `{version}`")]
    VersionUnsupported { version: String },
}

/// A parsed document: raw tables, not yet validated as a structure.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum UasDocument {
    Semigroup(RawSemigroup),
    Category(CategoryTables),
}

impl UasDocument {
    pub fn kind(&self) -> &'static str {
        match self {
            UasDocument::Semigroup(_) => "uas",
            UasDocument::Category(_) => "ucat",
        }
    }
}

/// Raw semigroup tables as read from a file.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RawSemigroup {
    pub names: Vec<String>,
    pub mul: Vec<usize>,
    pub plus: Option<Vec<usize>>,
    pub minus: Option<Vec<usize>>,
    pub star: Option<Vec<usize>>,
}

impl RawSemigroup {
    /// Validates the tables into a structure.
    pub fn build(&self) -> Result<FiniteUnarySemigroup, Error> {
        FiniteUnarySemigroup::new(
            self.names.clone(),
            self.mul.clone(),
            self.plus.clone(),
            self.minus.clone(),
            self.star.clone(),
        )
    }
}

struct Lines<'a> {
    // (1-based line number, tokens)
    rows: Vec<(usize, Vec<&'a str>)>,
    at: usize,
}

impl<'a> Lines<'a> {
    fn new(text: &'a str) -> Self {
        let rows = text
            .lines()
            .enumerate()
            .filter_map(|(i, line)| {
                let body = line.split('#').next().unwrap_or("");
                let tokens: Vec<&str> = body.split_whitespace().collect();
                if tokens.is_empty() {
                    None
                } else {
                    Some((i + 1, tokens))
                }
            })
            .collect();
        Lines { rows, at: 0 }
    }

    fn peek(&self) -> Option<&(usize, Vec<&'a str>)> {
        self.rows.get(self.at)
    }

    fn next_row(&mut self, expected: &str) -> Result<(usize, Vec<&'a str>), FormatError> {
        let row = self.rows.get(self.at).cloned().ok_or_else(|| FormatError::Parse {
            line: self.rows.last().map(|(l, _)| *l).unwrap_or(0) + 1,
            message: format!("unexpected end of document, expected {expected}"),
        })?;
        self.at += 1;
        Ok(row)
    }

    fn last_line(&self) -> usize {
        self.rows.last().map(|(l, _)| *l).unwrap_or(0)
    }
}

fn parse_err(line: usize, message: impl Into<String>) -> FormatError {
    FormatError::Parse {
        line,
        message: message.into(),
    }
}

struct NameTable {
    names: Vec<String>,
}

impl NameTable {
    fn index(&self, token: &str, line: usize) -> Result<usize, FormatError> {
        self.names
            .iter()
            .position(|n| n == token)
            .ok_or_else(|| parse_err(line, format!("unknown element name `{token}`")))
    }

    fn row(&self, tokens: &[&str], line: usize, expected: usize) -> Result<Vec<usize>, FormatError> {
        if tokens.len() != expected {
            return Err(parse_err(
                line,
                format!("expected {expected} tokens, found {}", tokens.len()),
            ));
        }
        tokens.iter().map(|t| self.index(t, line)).collect()
    }
}

fn parse_header(lines: &mut Lines) -> Result<&'static str, FormatError> {
    let (line, tokens) = lines.next_row("a `uas 1` or `ucat 1` header")?;
    let kind = match tokens[0] {
        "uas" => "uas",
        "ucat" => "ucat",
        other => return Err(parse_err(line, format!("unknown document kind `{other}`"))),
    };
    if tokens.len() != 2 {
        return Err(parse_err(line, "header must be `<kind> <version>`"));
    }
    if tokens[1] != "1" {
        return Err(FormatError::VersionUnsupported {
            version: tokens[1].to_string(),
        });
    }
    Ok(kind)
}

fn parse_order(lines: &mut Lines) -> Result<usize, FormatError> {
    let (line, tokens) = lines.next_row("`order <n>`")?;
    if tokens.len() != 2 || tokens[0] != "order" {
        return Err(parse_err(line, "expected `order <n>`"));
    }
    let n: usize = tokens[1]
        .parse()
        .map_err(|_| parse_err(line, format!("invalid order `{}`", tokens[1])))?;
    if n == 0 {
        return Err(parse_err(line, "order must be at least 1"));
    }
    Ok(n)
}

fn parse_names(lines: &mut Lines, n: usize) -> Result<NameTable, FormatError> {
    let (line, tokens) = lines.next_row("`names <tokens>`")?;
    if tokens.first() != Some(&"names") {
        return Err(parse_err(line, "expected `names <tokens>`"));
    }
    if tokens.len() != n + 1 {
        return Err(parse_err(
            line,
            format!("expected {n} names, found {}", tokens.len() - 1),
        ));
    }
    let names: Vec<String> = tokens[1..].iter().map(|t| t.to_string()).collect();
    for (i, name) in names.iter().enumerate() {
        if names[..i].iter().any(|m| m == name) {
            return Err(parse_err(line, format!("duplicate element name `{name}`")));
        }
    }
    Ok(NameTable { names })
}

fn parse_semigroup(lines: &mut Lines) -> Result<RawSemigroup, FormatError> {
    let n = parse_order(lines)?;
    let table = parse_names(lines, n)?;
    let (line, tokens) = lines.next_row("`mul`")?;
    if tokens != ["mul"] {
        return Err(parse_err(line, "expected `mul` on its own line"));
    }
    let mut mul = Vec::with_capacity(n * n);
    for _ in 0..n {
        let (line, tokens) = lines.next_row("a multiplication row")?;
        mul.extend(table.row(&tokens, line, n)?);
    }
    let mut plus = None;
    let mut minus = None;
    let mut star = None;
    while let Some((line, tokens)) = lines.peek().cloned() {
        let slot = match tokens[0] {
            "plus" => &mut plus,
            "minus" => &mut minus,
            "star" => &mut star,
            other => {
                return Err(parse_err(
                    line,
                    format!("unexpected section `{other}` in a uas document"),
                ))
            }
        };
        if slot.is_some() {
            return Err(parse_err(line, format!("duplicate section `{}`", tokens[0])));
        }
        *slot = Some(table.row(&tokens[1..], line, n)?);
        lines.at += 1;
    }
    Ok(RawSemigroup {
        names: table.names,
        mul,
        plus,
        minus,
        star,
    })
}

fn parse_category(lines: &mut Lines) -> Result<CategoryTables, FormatError> {
    let n = parse_order(lines)?;
    let table = parse_names(lines, n)?;
    let unary = |lines: &mut Lines, keyword: &str| -> Result<Vec<usize>, FormatError> {
        let (line, tokens) = lines.next_row(keyword)?;
        if tokens.first() != Some(&keyword) {
            return Err(parse_err(line, format!("expected `{keyword} <tokens>`")));
        }
        table.row(&tokens[1..], line, n)
    };
    let plus = unary(lines, "plus")?;
    let minus = unary(lines, "minus")?;
    let (line, tokens) = lines.next_row("`comp`")?;
    if tokens != ["comp"] {
        return Err(parse_err(line, "expected `comp` on its own line"));
    }
    let mut comp = Vec::with_capacity(n * n);
    for _ in 0..n {
        let (line, tokens) = lines.next_row("a composition row")?;
        if tokens.len() != n {
            return Err(parse_err(
                line,
                format!("expected {n} tokens, found {}", tokens.len()),
            ));
        }
        for t in tokens {
            comp.push(if t == "." {
                None
            } else {
                Some(table.index(t, line)?)
            });
        }
    }
    let objects: Vec<usize> = (0..n).filter(|&e| plus[e] == e).collect();
    let k = objects.len();
    let block = |lines: &mut Lines, keyword: &str| -> Result<Vec<usize>, FormatError> {
        let (line, tokens) = lines.next_row(keyword)?;
        if tokens != [keyword] {
            return Err(parse_err(line, format!("expected `{keyword}` on its own line")));
        }
        let mut out = Vec::with_capacity(k * n);
        for _ in 0..k {
            let (line, tokens) = lines.next_row("an object row")?;
            out.extend(table.row(&tokens, line, n)?);
        }
        Ok(out)
    };
    let ltr = block(lines, "ltr")?;
    let rtr = block(lines, "rtr")?;
    Ok(CategoryTables {
        names: table.names,
        plus,
        minus,
        comp,
        ltr,
        rtr,
    })
}

/// Parses a single `uas` or `ucat` document.
pub fn parse(text: &str) -> Result<UasDocument, FormatError> {
    let mut lines = Lines::new(text);
    let kind = parse_header(&mut lines)?;
    let doc = match kind {
        "uas" => UasDocument::Semigroup(parse_semigroup(&mut lines)?),
        _ => UasDocument::Category(parse_category(&mut lines)?),
    };
    if let Some((line, _)) = lines.peek() {
        return Err(parse_err(*line, "trailing content after the document"));
    }
    let _ = lines.last_line();
    Ok(doc)
}

/// Renders a semigroup in canonical whitespace.
pub fn render_semigroup(s: &FiniteUnarySemigroup) -> String {
    let n = s.order();
    let mut out = String::new();
    out.push_str("uas 1\n");
    out.push_str(&format!("order {n}\n"));
    out.push_str(&format!("names {}\n", s.names().join(" ")));
    out.push_str("mul\n");
    for x in 0..n {
        let row: Vec<&str> = (0..n).map(|y| s.name(s.mul(x, y))).collect();
        out.push_str(&row.join(" "));
        out.push('\n');
    }
    for (keyword, op) in [
        ("plus", UnaryOp::Plus),
        ("minus", UnaryOp::Minus),
        ("star", UnaryOp::Star),
    ] {
        if let Some(map) = s.unary(op) {
            let row: Vec<&str> = map.iter().map(|&v| s.name(v)).collect();
            out.push_str(&format!("{keyword} {}\n", row.join(" ")));
        }
    }
    out
}

/// Renders a category in canonical whitespace.
pub fn render_category(c: &TranscriptionCategory) -> String {
    let n = c.order();
    let t = c.tables();
    let mut out = String::new();
    out.push_str("ucat 1\n");
    out.push_str(&format!("order {n}\n"));
    out.push_str(&format!("names {}\n", c.names().join(" ")));
    let unary_row = |map: &[usize]| {
        map.iter()
            .map(|&v| c.name(v))
            .collect::<Vec<_>>()
            .join(" ")
    };
    out.push_str(&format!("plus {}\n", unary_row(&t.plus)));
    out.push_str(&format!("minus {}\n", unary_row(&t.minus)));
    out.push_str("comp\n");
    for x in 0..n {
        let row: Vec<&str> = (0..n)
            .map(|y| c.comp(x, y).map(|v| c.name(v)).unwrap_or("."))
            .collect();
        out.push_str(&row.join(" "));
        out.push('\n');
    }
    for (keyword, tbl) in [("ltr", &t.ltr), ("rtr", &t.rtr)] {
        out.push_str(keyword);
        out.push('\n');
        for row in tbl.chunks(n) {
            let row: Vec<&str> = row.iter().map(|&v| c.name(v)).collect();
            out.push_str(&row.join(" "));
            out.push('\n');
        }
    }
    out
}
