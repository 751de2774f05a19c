//! The `.space` text format.
//!
//! ```text
//! # `cover a < b` means a lies in the closure of b
//! space NAME
//! point a b c
//! cover a < b
//! cover b < c
//! infinite b
//! ```
//!
//! Tokens are separated by whitespace, so identifiers may contain any other
//! characters (`(v,w,x,y-1)` is a valid point name). `#` starts a comment when
//! it begins a token. Every declaration may appear at most once.

use std::collections::HashMap;
use std::fmt::{self, Write as _};

use thiserror::Error;

use crate::poset::{PosetError, SpectralPoset};

/// Position of a token, both 1-based; `column` counts characters.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Position {
    pub line: usize,
    pub column: usize,
}

impl fmt::Display for Position {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "line {}, column {}", self.line, self.column)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DslErrorKind {
    #[error("{0}")]
    Syntax(String),
    #[error(transparent)]
    Invalid(#[from] PosetError),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("{position}: {kind}")]
pub struct DslError {
    pub position: Position,
    pub kind: DslErrorKind,
}

impl DslError {
    fn syntax(position: Position, msg: impl Into<String>) -> Self {
        DslError { position, kind: DslErrorKind::Syntax(msg.into()) }
    }

    fn invalid(position: Position, err: PosetError) -> Self {
        DslError { position, kind: DslErrorKind::Invalid(err) }
    }
}

/// A parsed `.space` file.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SpaceDocument {
    pub name: String,
    pub poset: SpectralPoset,
}

struct Token<'a> {
    text: &'a str,
    pos: Position,
}

fn tokenize(line: &str, line_no: usize) -> Vec<Token<'_>> {
    let mut out = Vec::new();
    let mut start: Option<(usize, usize)> = None;
    let mut column = 0;
    for (byte, ch) in line.char_indices() {
        column += 1;
        if ch.is_whitespace() {
            if let Some((b, c)) = start.take() {
                out.push(Token { text: &line[b..byte], pos: Position { line: line_no, column: c } });
            }
        } else if start.is_none() {
            if ch == '#' {
                return out;
            }
            start = Some((byte, column));
        }
    }
    if let Some((b, c)) = start {
        out.push(Token { text: &line[b..], pos: Position { line: line_no, column: c } });
    }
    out
}

const KEYWORDS: [&str; 4] = ["space", "point", "cover", "infinite"];

fn check_ident(tok: &Token<'_>) -> Result<(), DslError> {
    if tok.text == "<" || KEYWORDS.contains(&tok.text) {
        return Err(DslError::syntax(tok.pos, format!("`{}` cannot be used as an identifier", tok.text)));
    }
    Ok(())
}

/// Parses a document into its name and poset.
pub fn parse_document(text: &str) -> Result<SpaceDocument, DslError> {
    let mut name: Option<(String, Position)> = None;
    let mut points: Vec<String> = Vec::new();
    let mut point_pos: HashMap<String, Position> = HashMap::new();
    let mut covers: Vec<(String, String)> = Vec::new();
    let mut cover_pos: Vec<(Position, Position, Position)> = Vec::new();
    let mut infinite: Vec<(String, Position)> = Vec::new();

    for (i, line) in text.lines().enumerate() {
        let tokens = tokenize(line, i + 1);
        let Some((head, args)) = tokens.split_first() else { continue };
        match head.text {
            "space" => {
                if let Some((_, first)) = &name {
                    return Err(DslError::syntax(head.pos, format!("space name already declared at {first}")));
                }
                match args {
                    [id] => {
                        check_ident(id)?;
                        name = Some((id.text.to_string(), head.pos));
                    }
                    _ => return Err(DslError::syntax(head.pos, "expected `space NAME`")),
                }
            }
            _ if name.is_none() => {
                return Err(DslError::syntax(head.pos, "the first declaration must be `space NAME`"));
            }
            "point" => {
                if args.is_empty() {
                    return Err(DslError::syntax(head.pos, "expected `point ID [ID ...]`"));
                }
                for id in args {
                    check_ident(id)?;
                    if let Some(first) = point_pos.get(id.text) {
                        return Err(DslError::syntax(
                            id.pos,
                            format!("point `{}` already declared at {first}", id.text),
                        ));
                    }
                    point_pos.insert(id.text.to_string(), id.pos);
                    points.push(id.text.to_string());
                }
            }
            "cover" => match args {
                [lo, op, up] if op.text == "<" => {
                    check_ident(lo)?;
                    check_ident(up)?;
                    if let Some(k) = covers.iter().position(|(a, b)| a == lo.text && b == up.text) {
                        return Err(DslError::syntax(
                            head.pos,
                            format!("cover `{} < {}` already declared at {}", lo.text, up.text, cover_pos[k].0),
                        ));
                    }
                    covers.push((lo.text.to_string(), up.text.to_string()));
                    cover_pos.push((head.pos, lo.pos, up.pos));
                }
                _ => return Err(DslError::syntax(head.pos, "expected `cover ID < ID`")),
            },
            "infinite" => {
                if args.is_empty() {
                    return Err(DslError::syntax(head.pos, "expected `infinite ID [ID ...]`"));
                }
                for id in args {
                    check_ident(id)?;
                    if infinite.iter().any(|(f, _)| f == id.text) {
                        return Err(DslError::syntax(id.pos, format!("`{}` is already flagged infinite", id.text)));
                    }
                    infinite.push((id.text.to_string(), id.pos));
                }
            }
            other => {
                return Err(DslError::syntax(head.pos, format!("unknown declaration `{other}`")));
            }
        }
    }

    let end = Position { line: text.lines().count().max(1), column: 1 };
    let Some((name, name_pos)) = name else {
        return Err(DslError::syntax(end, "missing `space NAME` declaration"));
    };
    if points.is_empty() {
        return Err(DslError::syntax(name_pos, "space declares no points"));
    }
    for (k, (lo, up)) in covers.iter().enumerate() {
        for (id, pos) in [(lo, cover_pos[k].1), (up, cover_pos[k].2)] {
            if !point_pos.contains_key(id) {
                return Err(DslError::invalid(pos, PosetError::UnknownPoint(id.clone())));
            }
        }
    }
    for (id, pos) in &infinite {
        if !point_pos.contains_key(id) {
            return Err(DslError::invalid(*pos, PosetError::UnknownPoint(id.clone())));
        }
    }

    let poset = SpectralPoset::build(
        points,
        covers.iter().map(|(a, b)| (a.clone(), b.clone())),
        infinite.iter().map(|(f, _)| f.clone()),
    )
    .map_err(|err| {
        let at_cover = |lo: &str, up: &str| {
            covers
                .iter()
                .position(|(a, b)| a == lo && b == up)
                .map(|k| cover_pos[k].0)
        };
        let pos = match &err {
            PosetError::NotReduced(a, b) => at_cover(a, b),
            PosetError::Cycle(cycle) => cycle.windows(2).find_map(|w| at_cover(&w[0], &w[1])),
            _ => None,
        };
        DslError::invalid(pos.unwrap_or(name_pos), err)
    })?;
    Ok(SpaceDocument { name, poset })
}

/// Parses a document and keeps only the poset.
pub fn parse(text: &str) -> Result<SpectralPoset, DslError> {
    parse_document(text).map(|d| d.poset)
}

/// Convention note placed at the top of every rendered file.
pub const HEADER: &str = "\
# `cover a < b`: a lies in the closure of b (specialization order).
# Closed points sit at the bottom, generic points of components on top.
";

/// Renders a document that [`parse_document`] reads back to an equal poset.
pub fn render(name: &str, poset: &SpectralPoset) -> String {
    let mut out = String::from(HEADER);
    writeln!(out, "space {name}").unwrap();
    for chunk in poset.points().chunks(8) {
        writeln!(out, "point {}", chunk.join(" ")).unwrap();
    }
    for (lo, up) in poset.covers() {
        writeln!(out, "cover {lo} < {up}").unwrap();
    }
    let flagged = poset.infinite_points();
    if !flagged.is_empty() {
        writeln!(out, "infinite {}", flagged.join(" ")).unwrap();
    }
    out
}
