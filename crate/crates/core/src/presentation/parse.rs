use super::{Path, Presentation, Quiver, Relation};
use crate::error::{Error, Result};

fn syntax(line: usize, column: usize, message: impl Into<String>) -> Error {
    Error::Syntax {
        line,
        column,
        message: message.into(),
    }
}

fn is_ident(s: &str) -> bool {
    let mut chars = s.chars();
    match chars.next() {
        Some(c) if c.is_ascii_alphabetic() || c == '_' => {}
        _ => return false,
    }
    chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

fn is_vertex_name(s: &str) -> bool {
    !s.is_empty() && s.chars().all(|c| c.is_ascii_alphanumeric() || c == '_')
}

/// Splits `text` on `sep`, yielding each piece with its byte offset, trimmed.
fn split_offsets(text: &str, sep: char) -> Vec<(usize, &str)> {
    let mut out = Vec::new();
    let mut start = 0;
    for (i, c) in text.char_indices() {
        if c == sep {
            out.push((start, &text[start..i]));
            start = i + 1;
        }
    }
    out.push((start, &text[start..]));
    out.into_iter()
        .map(|(off, s)| {
            let lead = s.len() - s.trim_start().len();
            (off + lead, s.trim())
        })
        .collect()
}

struct RawArrow {
    name: String,
    src: String,
    tgt: String,
}

struct RawRelation {
    text: String,
    line: usize,
    column: usize,
}

/// Parses the line-oriented presentation format:
///
/// ```text
/// vertices: 1 2 3
/// arrows: a: 1 -> 2, b: 2 -> 3
/// relations: a*b
/// ```
pub fn parse_presentation(text: &str) -> Result<Presentation> {
    let mut vertices: Vec<(String, usize, usize)> = Vec::new();
    let mut arrows: Vec<RawArrow> = Vec::new();
    let mut relations: Vec<RawRelation> = Vec::new();
    let mut characteristic: Option<u32> = None;
    let mut saw_vertices = false;

    for (ln, raw_line) in text.lines().enumerate() {
        let line_no = ln + 1;
        let line = raw_line.split('#').next().unwrap_or("");
        if line.trim().is_empty() {
            continue;
        }
        let Some(colon) = line.find(':') else {
            let col = line.len() - line.trim_start().len() + 1;
            return Err(syntax(line_no, col, "expected `key: value`"));
        };
        let key = line[..colon].trim();
        let body = &line[colon + 1..];
        let body_off = colon + 1;
        match key {
            "vertices" => {
                saw_vertices = true;
                let mut off = 0;
                for tok in body.split_whitespace() {
                    let pos = body[off..].find(tok).map(|p| p + off).unwrap_or(off);
                    off = pos + tok.len();
                    if !is_vertex_name(tok) {
                        return Err(syntax(line_no, body_off + pos + 1, format!("bad vertex name `{tok}`")));
                    }
                    vertices.push((tok.to_string(), line_no, body_off + pos + 1));
                }
            }
            "arrows" => {
                if body.trim().is_empty() {
                    continue;
                }
                for (off, item) in split_offsets(body, ',') {
                    let col = body_off + off + 1;
                    let Some(c2) = item.find(':') else {
                        return Err(syntax(line_no, col, "expected `name: source -> target`"));
                    };
                    let name = item[..c2].trim();
                    if !is_ident(name) {
                        return Err(syntax(line_no, col, format!("bad arrow name `{name}`")));
                    }
                    let rest = &item[c2 + 1..];
                    let Some(arrow_pos) = rest.find("->") else {
                        return Err(syntax(line_no, col + c2 + 1, "expected `->`"));
                    };
                    let src = rest[..arrow_pos].trim();
                    let tgt = rest[arrow_pos + 2..].trim();
                    if !is_vertex_name(src) || !is_vertex_name(tgt) {
                        return Err(syntax(line_no, col + c2 + 1, "bad arrow endpoints"));
                    }
                    arrows.push(RawArrow {
                        name: name.to_string(),
                        src: src.to_string(),
                        tgt: tgt.to_string(),
                    });
                }
            }
            "relations" => {
                if body.trim().is_empty() {
                    continue;
                }
                for (off, item) in split_offsets(body, ',') {
                    let col = body_off + off + 1;
                    if item.is_empty() {
                        return Err(syntax(line_no, col, "empty relation"));
                    }
                    relations.push(RawRelation {
                        text: item.to_string(),
                        line: line_no,
                        column: col,
                    });
                }
            }
            "characteristic" => {
                let t = body.trim();
                let p: u32 = t.parse().map_err(|_| {
                    syntax(line_no, body_off + 2, format!("bad characteristic `{t}`"))
                })?;
                characteristic = Some(p);
            }
            other => {
                let col = line.len() - line.trim_start().len() + 1;
                return Err(syntax(line_no, col, format!("unknown section `{other}`")));
            }
        }
    }
    if !saw_vertices || vertices.is_empty() {
        return Err(syntax(1, 1, "missing `vertices:` line"));
    }
    let vnames: Vec<String> = vertices.iter().map(|v| v.0.clone()).collect();
    for a in &arrows {
        for end in [&a.src, &a.tgt] {
            if !vnames.contains(end) {
                return Err(Error::UnknownVertex(end.clone()));
            }
        }
    }
    let triples: Vec<(String, String, String)> =
        arrows.iter().map(|a| (a.name.clone(), a.src.clone(), a.tgt.clone())).collect();
    let quiver = Quiver::new(&vnames, &triples)?;
    let mut rels = Vec::new();
    for r in &relations {
        rels.push(parse_relation_at(&quiver, &r.text, r.line, r.column)?);
    }
    Presentation::new(quiver, rels, characteristic.unwrap_or(2))
}

pub(crate) fn parse_relation_text(q: &Quiver, text: &str) -> Result<Relation> {
    parse_relation_at(q, text, 1, 1)
}

fn parse_relation_at(q: &Quiver, text: &str, line: usize, column: usize) -> Result<Relation> {
    if let Some(pos) = text.find('+') {
        return Err(syntax(
            line,
            column + pos,
            "only monomial and binomial (p - q) relations are supported",
        ));
    }
    let terms = split_offsets(text, '-');
    if terms.len() > 2 {
        return Err(syntax(
            line,
            column + terms[2].0,
            "only monomial and binomial (p - q) relations are supported",
        ));
    }
    let mut paths = Vec::new();
    for (off, term) in &terms {
        let col = column + off;
        if term.is_empty() {
            return Err(syntax(line, col, "empty path"));
        }
        let mut ids = Vec::new();
        for name in term.split('*') {
            let name = name.trim();
            if !is_ident(name) {
                return Err(syntax(line, col, format!("bad arrow name `{name}` in path")));
            }
            ids.push(q.arrow_id(name).ok_or_else(|| Error::UnknownArrow(name.to_string()))?);
        }
        paths.push(Path::new(q, ids).map_err(|_| Error::NonComposablePath(term.to_string()))?);
    }
    let mut it = paths.into_iter();
    let p = it.next().expect("one term");
    Ok(match it.next() {
        None => Relation::Monomial(p),
        Some(r) => Relation::Binomial(p, r),
    })
}
