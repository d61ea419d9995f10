//! The plain-text poset document and the name-based syntax for ideals
//! and flags on the command line.
//!
//! A document has four sections, each introduced by a header token at
//! the start of a line:
//!
//! ```text
//! colors: a b c d
//! edges: a-b b-c c-d
//! elements: v:a w:c x:b y:d z:c
//! covers: v<x w<x w<y x<z y<z
//! ```
//!
//! Sections may appear in any order and tokens may continue on
//! following lines. Rendering always produces the single-line form
//! above, and parsing that form gives back the identical document.

use crate::diagram::{Color, DynkinDiagram};
use crate::error::Error;
use crate::mvector::MFlag;
use crate::poset::{ColoredPoset, Elem, Ideal};
use std::collections::HashMap;

const SECTION_NAMES: [&str; 4] = ["colors", "edges", "elements", "covers"];

/// A token with its 1-based line and column, for error reports.
#[derive(Debug, Clone)]
struct Token {
    line: usize,
    col: usize,
    text: String,
}

impl Token {
    fn err(&self, msg: impl std::fmt::Display) -> Error {
        Error::input(format!("line {}, column {}: {}", self.line, self.col, msg))
    }
}

fn tokenize_sections(text: &str) -> Result<[Vec<Token>; 4], Error> {
    let mut sections: [Option<Vec<Token>>; 4] = [const { None }; 4];
    let mut current: Option<usize> = None;
    for (lno, line) in text.lines().enumerate() {
        let lno = lno + 1;
        let mut rest = line;
        let mut col = 1;
        let mut first = true;
        loop {
            let trimmed = rest.trim_start();
            col += rest.chars().count() - trimmed.chars().count();
            if trimmed.is_empty() {
                break;
            }
            let end = trimmed.find(char::is_whitespace).unwrap_or(trimmed.len());
            let word = &trimmed[..end];
            let token = Token {
                line: lno,
                col,
                text: word.to_string(),
            };
            if first {
                if let Some(idx) = SECTION_NAMES
                    .iter()
                    .position(|s| word.len() == s.len() + 1 && word.starts_with(s))
                    .filter(|_| word.ends_with(':'))
                {
                    if sections[idx].is_some() {
                        return Err(token.err(format!("section {word} declared twice")));
                    }
                    sections[idx] = Some(Vec::new());
                    current = Some(idx);
                    first = false;
                    col += word.chars().count();
                    rest = &trimmed[end..];
                    continue;
                }
            }
            let Some(cur) = current else {
                return Err(token.err(format!(
                    "expected a section header ({}), found {word}",
                    SECTION_NAMES.map(|s| format!("{s}:")).join(", ")
                )));
            };
            sections[cur].as_mut().unwrap().push(token);
            first = false;
            col += word.chars().count();
            rest = &trimmed[end..];
        }
    }
    let mut out = Vec::new();
    for (idx, s) in sections.into_iter().enumerate() {
        match s {
            Some(tokens) => out.push(tokens),
            None => {
                return Err(Error::input(format!(
                    "missing section {}:",
                    SECTION_NAMES[idx]
                )))
            }
        }
    }
    Ok(out.try_into().unwrap())
}

fn check_identifier(t: &Token, what: &str, text: &str) -> Result<(), Error> {
    if text.is_empty() {
        return Err(t.err(format!("empty {what} name")));
    }
    if let Some(bad) = text
        .chars()
        .find(|c| !c.is_ascii_alphanumeric() && *c != '_')
    {
        return Err(t.err(format!(
            "{what} name {text} contains {bad:?}; use letters, digits, underscore"
        )));
    }
    Ok(())
}

/// One token of the form `left SEP right`, both halves nonempty.
fn split_pair<'t>(t: &'t Token, sep: char, what: &str) -> Result<(&'t str, &'t str), Error> {
    let mut halves = t.text.splitn(2, sep);
    let left = halves.next().unwrap_or("");
    let right = halves.next().unwrap_or("");
    if left.is_empty() || right.is_empty() {
        return Err(t.err(format!(
            "expected {what} as two names joined by {sep:?}, found {}",
            t.text
        )));
    }
    if right.contains(sep) {
        return Err(t.err(format!("{} has more than one {sep:?}", t.text)));
    }
    Ok((left, right))
}

/// Parse a poset document. Syntax errors carry line and column; the
/// semantic validation (unknown names, cycles, redundant covers,
/// connectedness, onto coloring) is the poset constructor's.
pub fn parse_poset(text: &str) -> Result<ColoredPoset, Error> {
    let [colors, edges, elements, covers] = tokenize_sections(text)?;

    let mut color_names = Vec::new();
    for t in &colors {
        check_identifier(t, "color", &t.text)?;
        if color_names.contains(&t.text) {
            return Err(t.err(format!("duplicate color {}", t.text)));
        }
        color_names.push(t.text.clone());
    }
    if color_names.is_empty() {
        return Err(Error::input("needs at least one color"));
    }

    let mut edge_pairs: Vec<(String, String)> = Vec::new();
    for t in &edges {
        let (a, b) = split_pair(t, '-', "an edge")?;
        for side in [a, b] {
            if !color_names.iter().any(|c| c.as_str() == side) {
                return Err(t.err(format!("unknown color {side}")));
            }
        }
        if a == b {
            return Err(t.err(format!("edge {a}-{b} is a loop")));
        }
        let unordered = |x: &str, y: &str| (x.min(y).to_string(), x.max(y).to_string());
        if edge_pairs
            .iter()
            .any(|(x, y)| unordered(x, y) == unordered(a, b))
        {
            return Err(t.err(format!("duplicate edge {a}-{b}")));
        }
        edge_pairs.push((a.to_string(), b.to_string()));
    }

    if elements.is_empty() {
        return Err(Error::input("poset must be nonempty"));
    }
    let mut element_pairs: Vec<(String, String)> = Vec::new();
    for t in &elements {
        let (name, color) = split_pair(t, ':', "an element")?;
        check_identifier(t, "element", name)?;
        if !color_names.iter().any(|c| c.as_str() == color) {
            return Err(t.err(format!("unknown color {color}")));
        }
        if element_pairs.iter().any(|(n, _)| n.as_str() == name) {
            return Err(t.err(format!("duplicate element {name}")));
        }
        element_pairs.push((name.to_string(), color.to_string()));
    }

    let mut cover_pairs: Vec<(String, String)> = Vec::new();
    for t in &covers {
        let (x, y) = split_pair(t, '<', "a cover")?;
        for side in [x, y] {
            if !element_pairs.iter().any(|(n, _)| n.as_str() == side) {
                return Err(t.err(format!("unknown element {side}")));
            }
        }
        if cover_pairs
            .iter()
            .any(|(a, b)| a.as_str() == x && b.as_str() == y)
        {
            return Err(t.err(format!("duplicate cover {x}<{y}")));
        }
        cover_pairs.push((x.to_string(), y.to_string()));
    }

    let diagram = DynkinDiagram::new(&color_names, &edge_pairs)?;
    ColoredPoset::new(diagram, &element_pairs, &cover_pairs)
}

/// The canonical document: one line per section, fixed order, single
/// spaces, trailing newline. Feeding this back to `parse_poset` gives
/// the same poset, and re-rendering gives identical bytes.
pub fn render_poset(p: &ColoredPoset) -> String {
    let d = p.diagram();
    let mut out = String::from("colors:");
    for i in 0..d.len() {
        out.push(' ');
        out.push_str(d.name(Color(i)));
    }
    out.push_str("\nedges:");
    for &(a, b) in d.edges() {
        out.push(' ');
        out.push_str(d.name(a));
        out.push('-');
        out.push_str(d.name(b));
    }
    out.push_str("\nelements:");
    for e in p.elements() {
        out.push(' ');
        out.push_str(p.name(e));
        out.push(':');
        out.push_str(d.name(p.color_of(e)));
    }
    out.push_str("\ncovers:");
    for &(x, y) in p.covers() {
        out.push(' ');
        out.push_str(p.name(x));
        out.push('<');
        out.push_str(p.name(y));
    }
    out.push('\n');
    out
}

/// Split element names back out of their concatenation, longest match
/// first with backtracking, so names like `x1` and `x11` coexist.
/// Repeats are rejected.
fn scan_elements(names: &[(String, Elem)], s: &str, taken: &mut Vec<Elem>) -> bool {
    if s.is_empty() {
        return true;
    }
    for (name, e) in names {
        if s.starts_with(name.as_str()) && !taken.contains(e) {
            taken.push(*e);
            if scan_elements(names, &s[name.len()..], taken) {
                return true;
            }
            taken.pop();
        }
    }
    false
}

/// Read an ideal written as concatenated element names, `0` (or `∅`)
/// for the empty one.
pub fn parse_ideal(p: &ColoredPoset, s: &str) -> Result<Ideal, Error> {
    let t = s.trim();
    if t.is_empty() {
        return Err(Error::input("empty ideal; write 0 for the empty ideal"));
    }
    if t == "0" || t == "∅" {
        return Ok(Ideal::EMPTY);
    }
    let mut names: Vec<(String, Elem)> = p.elements().map(|e| (p.name(e).to_string(), e)).collect();
    names.sort_by(|a, b| b.0.len().cmp(&a.0.len()).then(a.0.cmp(&b.0)));
    let mut taken = Vec::new();
    if !scan_elements(&names, t, &mut taken) {
        return Err(Error::input(format!(
            "cannot read {t} as concatenated element names"
        )));
    }
    let ideal = Ideal::from_elems(taken.iter().copied());
    if !p.is_ideal(ideal) {
        let culprit = taken
            .iter()
            .find_map(|&e| {
                p.lower_covers(e)
                    .iter()
                    .find(|&&u| !ideal.contains(u))
                    .map(|&u| (e, u))
            })
            .expect("some element is missing a lower cover");
        return Err(Error::input(format!(
            "{t} is not downward closed: {} needs {}",
            p.name(culprit.0),
            p.name(culprit.1)
        )));
    }
    Ok(ideal)
}

/// Read a flag `I1;I2;...;Im`, outermost ideal first.
pub fn parse_flag(p: &ColoredPoset, s: &str) -> Result<MFlag, Error> {
    let ideals = s
        .split(';')
        .map(|part| parse_ideal(p, part))
        .collect::<Result<Vec<_>, _>>()?;
    MFlag::new(p, ideals)
}

/// Names of a linear extension joined with `<`.
pub fn render_extension(p: &ColoredPoset, ext: &crate::poset::LinearExtension) -> String {
    ext.order()
        .iter()
        .map(|&e| p.name(e))
        .collect::<Vec<_>>()
        .join("<")
}

/// Read `v<w<x<y<z` as a linear extension.
pub fn parse_extension(p: &ColoredPoset, s: &str) -> Result<crate::poset::LinearExtension, Error> {
    let mut seen = HashMap::new();
    let mut order = Vec::new();
    for part in s.split('<') {
        let name = part.trim();
        let e = p
            .elem(name)
            .ok_or_else(|| Error::input(format!("unknown element {name}")))?;
        if seen.insert(e, ()).is_some() {
            return Err(Error::input(format!("element {name} repeated")));
        }
        order.push(e);
    }
    p.extension(order)
}
