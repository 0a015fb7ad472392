//! Line-oriented text formats for surfaces and curves.
//!
//! ```text
//! surface torus
//! face F: a b a' b'
//! ```
//!
//! ```text
//! curve meridian: a@1/2
//! arc gamma: START b@1/3 ; a@1/2 ; END b'@1/4
//! ```
//!
//! `#` starts a comment. Labels match `[a-z][a-z0-9_]*`; a trailing `'`
//! marks the inverted occurrence.

use crate::complex::{EdgeToken, Face, PolygonComplex};
use crate::curve::{passage_to_string, passages_to_string, ChordArc, ChordCurve, Passage};
use crate::error::{Error, Result};
use crate::Param;

fn syntax(line: usize, column: usize, message: impl Into<String>) -> Error {
    Error::Syntax {
        line,
        column,
        message: message.into(),
    }
}

fn strip_comment(line: &str) -> &str {
    match line.find('#') {
        Some(i) => &line[..i],
        None => line,
    }
}

/// Whitespace-separated words with their 1-based columns.
fn words(line: &str) -> Vec<(usize, &str)> {
    let mut out = Vec::new();
    let mut start = None;
    for (i, ch) in line.char_indices() {
        if ch.is_whitespace() {
            if let Some(s) = start.take() {
                out.push((s + 1, &line[s..i]));
            }
        } else if start.is_none() {
            start = Some(i);
        }
    }
    if let Some(s) = start {
        out.push((s + 1, &line[s..]));
    }
    out
}

fn is_label(s: &str) -> bool {
    let mut chars = s.chars();
    matches!(chars.next(), Some('a'..='z'))
        && chars.all(|c| c.is_ascii_lowercase() || c.is_ascii_digit() || c == '_')
}

fn is_name(s: &str) -> bool {
    !s.is_empty()
        && s.chars()
            .all(|c| c.is_ascii_alphanumeric() || c == '_' || c == '-')
}

pub fn parse_token(word: &str, line: usize, column: usize) -> Result<EdgeToken> {
    let (label, inverted) = match word.strip_suffix('\'') {
        Some(l) => (l, true),
        None => (word, false),
    };
    if !is_label(label) {
        return Err(syntax(line, column, format!("invalid edge token `{word}`")));
    }
    Ok(EdgeToken::new(label, inverted))
}

/// Splits `keyword name: rest`, returning the name and the rest with its column offset.
fn header<'a>(text: &'a str, keyword: &str, line: usize) -> Result<(&'a str, &'a str, usize)> {
    let body = &text[keyword.len()..];
    let colon = body.find(':').ok_or_else(|| {
        syntax(
            line,
            text.len() + 1,
            format!("expected `:` after {keyword} name"),
        )
    })?;
    let name = body[..colon].trim();
    if !is_name(name) {
        return Err(syntax(
            line,
            keyword.len() + 2,
            format!("invalid {keyword} name `{name}`"),
        ));
    }
    Ok((name, &body[colon + 1..], keyword.len() + colon + 1))
}

pub fn parse_surface(text: &str) -> Result<PolygonComplex> {
    let mut name: Option<String> = None;
    let mut faces = Vec::new();
    for (ln, raw) in text.lines().enumerate() {
        let line = ln + 1;
        let content = strip_comment(raw);
        let trimmed = content.trim_start();
        let indent = content.len() - trimmed.len();
        let trimmed = trimmed.trim_end();
        if trimmed.is_empty() {
            continue;
        }
        let first = trimmed.split_whitespace().next().unwrap_or("");
        match first {
            "surface" => {
                let ws = words(trimmed);
                if ws.len() != 2 || !is_name(ws[1].1) {
                    return Err(syntax(line, indent + 1, "expected `surface <name>`"));
                }
                if name.is_some() {
                    return Err(syntax(line, indent + 1, "duplicate surface line"));
                }
                name = Some(ws[1].1.to_string());
            }
            w if w == "face" || w.starts_with("face") && w[4..].starts_with(':') => {
                let (fname, rest, off) = header(trimmed, "face", line)?;
                let mut tokens = Vec::new();
                for (col, w) in words(rest) {
                    tokens.push(parse_token(w, line, indent + off + col)?);
                }
                if tokens.is_empty() {
                    return Err(Error::EmptyFace(fname.to_string()));
                }
                faces.push(Face {
                    name: fname.to_string(),
                    tokens,
                });
            }
            _ => {
                return Err(syntax(
                    line,
                    indent + 1,
                    format!("unexpected `{first}`, expected `surface` or `face`"),
                ))
            }
        }
    }
    if faces.is_empty() {
        return Err(syntax(1, 1, "no faces declared"));
    }
    PolygonComplex::new(name.unwrap_or_else(|| "surface".into()), faces)
}

pub fn print_surface(c: &PolygonComplex) -> String {
    let mut out = format!("surface {}\n", c.name());
    for face in c.faces() {
        let words: Vec<String> = face.tokens.iter().map(ToString::to_string).collect();
        out.push_str(&format!("face {}: {}\n", face.name, words.join(" ")));
    }
    out
}

fn parse_param(s: &str, line: usize, column: usize) -> Result<Param> {
    let (n, d) = s
        .split_once('/')
        .ok_or_else(|| syntax(line, column, format!("expected <num>/<den>, got `{s}`")))?;
    let n: i64 = n
        .parse()
        .map_err(|_| syntax(line, column, format!("bad numerator `{n}`")))?;
    let d: i64 = d
        .parse()
        .map_err(|_| syntax(line, column, format!("bad denominator `{d}`")))?;
    if d <= 0 {
        return Err(syntax(line, column, "denominator must be positive"));
    }
    Ok(Param::new(n, d))
}

pub fn parse_passage(
    word: &str,
    c: &PolygonComplex,
    line: usize,
    column: usize,
) -> Result<Passage> {
    let (tok, param) = word.split_once('@').ok_or_else(|| {
        syntax(
            line,
            column,
            format!("expected <token>@<num>/<den>, got `{word}`"),
        )
    })?;
    let token = parse_token(tok, line, column)?;
    let side = c
        .find_side(&token)
        .ok_or_else(|| Error::UnknownLabel(token.to_string()))?;
    let param = parse_param(param, line, column + tok.len() + 1)?;
    Ok(Passage::new(side, param))
}

/// Named curves and arcs read from a curve file.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct CurveFile {
    pub curves: Vec<(String, ChordCurve)>,
    pub arcs: Vec<(String, ChordArc)>,
}

pub fn parse_curves(text: &str, c: &PolygonComplex) -> Result<CurveFile> {
    let mut file = CurveFile::default();
    for (ln, raw) in text.lines().enumerate() {
        let line = ln + 1;
        let content = strip_comment(raw);
        let trimmed = content.trim_start();
        let indent = content.len() - trimmed.len();
        let trimmed = trimmed.trim_end();
        if trimmed.is_empty() {
            continue;
        }
        if trimmed.starts_with("curve") {
            let (name, rest, off) = header(trimmed, "curve", line)?;
            let mut ps = Vec::new();
            for (col, w) in words(rest) {
                ps.push(parse_passage(w, c, line, indent + off + col)?);
            }
            if ps.is_empty() {
                return Err(syntax(
                    line,
                    indent + 1,
                    format!("curve `{name}` has no passages"),
                ));
            }
            file.curves.push((name.to_string(), ChordCurve::new(ps)));
        } else if trimmed.starts_with("arc") {
            let (name, rest, off) = header(trimmed, "arc", line)?;
            let parts: Vec<&str> = rest.split(';').collect();
            if parts.len() != 3 {
                return Err(syntax(
                    line,
                    indent + off + 1,
                    "expected `START <anchor> ; <passages> ; END <anchor>`",
                ));
            }
            let col0 = indent + off + 1;
            let start = anchor(parts[0], "START", c, line, col0)?;
            let mut ps = Vec::new();
            for (col, w) in words(parts[1]) {
                ps.push(parse_passage(w, c, line, col0 + parts[0].len() + col)?);
            }
            let end = anchor(
                parts[2],
                "END",
                c,
                line,
                col0 + parts[0].len() + parts[1].len() + 2,
            )?;
            file.arcs.push((
                name.to_string(),
                ChordArc {
                    start,
                    passages: ps,
                    end,
                },
            ));
        } else {
            return Err(syntax(line, indent + 1, "expected `curve` or `arc`"));
        }
    }
    Ok(file)
}

fn anchor(
    part: &str,
    keyword: &str,
    c: &PolygonComplex,
    line: usize,
    column: usize,
) -> Result<Passage> {
    let ws = words(part);
    if ws.len() != 2 || ws[0].1 != keyword {
        return Err(syntax(
            line,
            column,
            format!("expected `{keyword} <token>@<num>/<den>`"),
        ));
    }
    parse_passage(ws[1].1, c, line, column + ws[1].0 - 1)
}

pub fn print_curves(file: &CurveFile, c: &PolygonComplex) -> String {
    let mut out = String::new();
    for (name, curve) in &file.curves {
        out.push_str(&format!(
            "curve {}: {}\n",
            name,
            passages_to_string(&curve.passages, c)
        ));
    }
    for (name, arc) in &file.arcs {
        let mid = passages_to_string(&arc.passages, c);
        let mid = if mid.is_empty() {
            " ".to_string()
        } else {
            format!(" {mid} ")
        };
        out.push_str(&format!(
            "arc {}: START {} ;{}; END {}\n",
            name,
            passage_to_string(&arc.start, c),
            mid,
            passage_to_string(&arc.end, c)
        ));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_square_torus() {
        let c = parse_surface("face F: a b a' b'").unwrap();
        assert_eq!(c.face_count(), 1);
        assert_eq!(c.label_count(), 2);
    }

    #[test]
    fn projective_plane_word_parses() {
        let c = parse_surface("face F: a a").unwrap();
        assert!(!c.is_orientable());
    }

    #[test]
    fn unpaired_label_is_rejected() {
        assert_eq!(
            parse_surface("face F: a b a").unwrap_err(),
            Error::MissingPartner("b".into())
        );
    }

    #[test]
    fn empty_face_is_rejected() {
        assert_eq!(
            parse_surface("face F:\n").unwrap_err(),
            Error::EmptyFace("F".into())
        );
    }

    #[test]
    fn syntax_errors_carry_position() {
        match parse_surface("surface t\nface F: a B a' b'\n").unwrap_err() {
            Error::Syntax { line, column, .. } => {
                assert_eq!(line, 2);
                assert_eq!(column, 11);
            }
            e => panic!("unexpected {e:?}"),
        }
        assert!(matches!(
            parse_surface("polygon F: a a'").unwrap_err(),
            Error::Syntax {
                line: 1,
                column: 1,
                ..
            }
        ));
    }

    #[test]
    fn comments_and_blank_lines_are_ignored() {
        let text = "# a torus\nsurface t # name\n\nface F: a b a' b' # word\n";
        let c = parse_surface(text).unwrap();
        assert_eq!(print_surface(&c), "surface t\nface F: a b a' b'\n");
    }

    #[test]
    fn curve_file_round_trip() {
        let c = parse_surface("face F: a b a' b'").unwrap();
        let text = "curve m: a@1/2\ncurve d: a@1/3 b@2/3\narc g: START b@1/3 ; a@1/4 ; END b@2/5\narc h: START a@1/5 ; ; END a@2/5\n";
        let file = parse_curves(text, &c).unwrap();
        assert_eq!(file.curves.len(), 2);
        assert_eq!(file.arcs[1].1.passages.len(), 0);
        assert_eq!(print_curves(&file, &c), text);
    }

    #[test]
    fn bad_passage_reports_column() {
        let c = parse_surface("face F: a b a' b'").unwrap();
        assert!(matches!(
            parse_curves("curve m: a@1-2", &c).unwrap_err(),
            Error::Syntax { line: 1, .. }
        ));
        assert_eq!(
            parse_curves("curve m: z@1/2", &c).unwrap_err(),
            Error::UnknownLabel("z".into())
        );
    }
}
