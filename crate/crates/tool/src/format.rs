//! Plain-text file formats.
//!
//! A quandle file is a header `quandle <n>` followed by `n` rows of the
//! table, row `x` listing `s_x(0) … s_x(n−1)`. A row may end in ` # label`;
//! either every row has a label or none does.
//!
//! A group block is one of `cyclic <n>`, `dihedral <n>`, `symmetric <n>`, or
//! `perms <degree>` followed by one generator per line in the bracketed
//! image form `[1 0 2]`. A genpair file is a group block followed by
//! `omega i j …`, indices into the group's canonical element order.
//!
//! Blank lines and lines starting with `//` are ignored.

use quandle_core::perm::{PermGroup, Permutation};
use quandle_core::{GenPair, Quandle};

#[derive(Debug, thiserror::Error)]
pub enum ParseError {
    #[error("line {line}: {message}")]
    Syntax { line: usize, message: String },
    #[error("unexpected end of input: {0}")]
    Eof(String),
    #[error(transparent)]
    Core(#[from] quandle_core::Error),
}

fn syntax(line: usize, message: impl Into<String>) -> ParseError {
    ParseError::Syntax {
        line,
        message: message.into(),
    }
}

/// Non-blank, non-comment lines with their 1-based line numbers.
fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with("//"))
}

fn parse_usize(line: usize, token: &str) -> Result<usize, ParseError> {
    token
        .parse()
        .map_err(|_| syntax(line, format!("expected a non-negative integer, found `{token}`")))
}

/// Rows and labels of a quandle file, without checking the axioms.
pub struct RawTable {
    pub rows: Vec<Vec<usize>>,
    pub labels: Option<Vec<String>>,
}

pub fn parse_table(text: &str) -> Result<RawTable, ParseError> {
    let mut lines = content_lines(text);
    let (hl, header) = lines.next().ok_or_else(|| ParseError::Eof("missing `quandle <n>` header".into()))?;
    let n = match header.split_whitespace().collect::<Vec<_>>().as_slice() {
        ["quandle", n] => parse_usize(hl, n)?,
        _ => return Err(syntax(hl, "expected `quandle <n>`")),
    };
    let mut rows = Vec::with_capacity(n);
    let mut labels = Vec::with_capacity(n);
    for x in 0..n {
        let (ln, line) = lines
            .next()
            .ok_or_else(|| ParseError::Eof(format!("expected {n} rows, found {x}")))?;
        let (cells, label) = match line.split_once(" # ") {
            Some((cells, label)) => (cells, Some(label.trim().to_string())),
            None => (line, None),
        };
        let row = cells
            .split_whitespace()
            .map(|t| parse_usize(ln, t))
            .collect::<Result<Vec<_>, _>>()?;
        rows.push(row);
        labels.push(label);
    }
    if let Some((ln, _)) = lines.next() {
        return Err(syntax(ln, "trailing content after the table"));
    }
    let labels = if labels.iter().all(Option::is_some) {
        Some(labels.into_iter().map(Option::unwrap).collect())
    } else if labels.iter().all(Option::is_none) {
        None
    } else {
        return Err(syntax(hl, "either every row or no row may carry a label"));
    };
    Ok(RawTable { rows, labels })
}

/// Parses and validates a quandle file.
pub fn parse_quandle(text: &str) -> Result<Quandle, ParseError> {
    let raw = parse_table(text)?;
    let q = Quandle::from_rows(raw.rows)?;
    Ok(match raw.labels {
        Some(labels) => q.with_labels(labels)?,
        None => q,
    })
}

pub fn write_quandle(q: &Quandle) -> String {
    let mut out = format!("quandle {}\n", q.order());
    for x in 0..q.order() {
        let cells: Vec<String> = q.row(x).iter().map(|v| v.to_string()).collect();
        out.push_str(&cells.join(" "));
        if let Some(label) = q.label(x) {
            out.push_str(" # ");
            out.push_str(label);
        }
        out.push('\n');
    }
    out
}

/// Parses a group block from the front of `lines`, returning the group and
/// whatever follows it.
fn parse_group_lines<'a>(
    lines: &mut std::iter::Peekable<impl Iterator<Item = (usize, &'a str)>>,
    cap: usize,
) -> Result<PermGroup, ParseError> {
    let (hl, header) = lines.next().ok_or_else(|| ParseError::Eof("missing group header".into()))?;
    let tokens: Vec<&str> = header.split_whitespace().collect();
    let n = match tokens.as_slice() {
        [_, n] => parse_usize(hl, n)?,
        _ => return Err(syntax(hl, "expected `<family> <n>` or `perms <degree>`")),
    };
    Ok(match tokens[0] {
        "cyclic" => PermGroup::cyclic(n)?,
        "dihedral" => PermGroup::dihedral(n)?,
        "symmetric" => PermGroup::symmetric(n, cap)?,
        "perms" => {
            let mut gens = Vec::new();
            while let Some(&(ln, line)) = lines.peek() {
                if !line.starts_with('[') {
                    break;
                }
                lines.next();
                let p: Permutation = line
                    .parse()
                    .map_err(|e: quandle_core::Error| syntax(ln, e.to_string()))?;
                if p.degree() != n {
                    return Err(syntax(ln, format!("generator has degree {}, expected {n}", p.degree())));
                }
                gens.push(p);
            }
            if gens.is_empty() {
                gens.push(Permutation::identity(n));
            }
            PermGroup::generate(gens, cap)?
        }
        other => return Err(syntax(hl, format!("unknown group family `{other}`"))),
    })
}

pub fn parse_group(text: &str, cap: usize) -> Result<PermGroup, ParseError> {
    let mut lines = content_lines(text).peekable();
    let g = parse_group_lines(&mut lines, cap)?;
    if let Some((ln, _)) = lines.next() {
        return Err(syntax(ln, "trailing content after the group"));
    }
    Ok(g)
}

/// Writes a group as a `perms` block with its generators.
pub fn write_group(g: &PermGroup) -> String {
    let mut out = format!("perms {}\n", g.degree());
    for p in g.generators() {
        out.push_str(&p.to_string());
        out.push('\n');
    }
    out
}

pub fn parse_genpair(text: &str, cap: usize) -> Result<GenPair, ParseError> {
    let mut lines = content_lines(text).peekable();
    let group = parse_group_lines(&mut lines, cap)?;
    let (ol, omega_line) = lines.next().ok_or_else(|| ParseError::Eof("missing `omega` line".into()))?;
    let mut tokens = omega_line.split_whitespace();
    if tokens.next() != Some("omega") {
        return Err(syntax(ol, "expected `omega i j …`"));
    }
    let omega = tokens
        .map(|t| {
            let i = parse_usize(ol, t)?;
            if i >= group.order() {
                return Err(syntax(ol, format!("index {i} out of range for a group of order {}", group.order())));
            }
            Ok(group.element(i).clone())
        })
        .collect::<Result<Vec<_>, _>>()?;
    if let Some((ln, _)) = lines.next() {
        return Err(syntax(ln, "trailing content after the omega line"));
    }
    Ok(GenPair::new(group, omega)?)
}

pub fn write_genpair(p: &GenPair) -> String {
    let mut out = write_group(p.group());
    let idx: Vec<String> = p
        .omega()
        .iter()
        .map(|w| p.group().index_of(w).expect("omega lies in the group").to_string())
        .collect();
    out.push_str("omega ");
    out.push_str(&idx.join(" "));
    out.push('\n');
    out
}

/// Which kind of object a file holds, judged by its first content line.
pub fn is_quandle_text(text: &str) -> bool {
    content_lines(text)
        .next()
        .is_some_and(|(_, l)| l.starts_with("quandle"))
}
