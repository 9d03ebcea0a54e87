//! Line-oriented triple snapshot format.
//!
//! One statement per line, N-Triples style:
//!
//! ```text
//! <subjIRI> <predIRI> <objIRI> .
//! <subjIRI> <predIRI> "literal" .
//! ```
//!
//! Blank lines and lines starting with `#` are skipped. Literals support
//! exactly two escapes, `\"` and `\\`. No language tags, datatypes, blank
//! nodes, or prefix directives.

use std::fmt;

use crate::error::{Error, Result};

/// Object position of a triple: an IRI or a plain string literal.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Object {
    Iri(String),
    Literal(String),
}

impl Object {
    pub fn as_iri(&self) -> Option<&str> {
        match self {
            Object::Iri(iri) => Some(iri),
            Object::Literal(_) => None,
        }
    }

    pub fn as_literal(&self) -> Option<&str> {
        match self {
            Object::Iri(_) => None,
            Object::Literal(text) => Some(text),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Triple {
    pub subject: String,
    pub predicate: String,
    pub object: Object,
}

impl Triple {
    pub fn new(subject: impl Into<String>, predicate: impl Into<String>, object: Object) -> Self {
        Self {
            subject: subject.into(),
            predicate: predicate.into(),
            object,
        }
    }

    pub fn iri(
        subject: impl Into<String>,
        predicate: impl Into<String>,
        object: impl Into<String>,
    ) -> Self {
        Self::new(subject, predicate, Object::Iri(object.into()))
    }

    pub fn literal(
        subject: impl Into<String>,
        predicate: impl Into<String>,
        object: impl Into<String>,
    ) -> Self {
        Self::new(subject, predicate, Object::Literal(object.into()))
    }
}

impl fmt::Display for Triple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "<{}> <{}> ", self.subject, self.predicate)?;
        match &self.object {
            Object::Iri(iri) => write!(f, "<{iri}>")?,
            Object::Literal(text) => write!(f, "\"{}\"", escape_literal(text))?,
        }
        write!(f, " .")
    }
}

fn escape_literal(text: &str) -> String {
    text.replace('\\', "\\\\").replace('"', "\\\"")
}

/// Parsed triples in input order, with their 1-based source lines.
///
/// Duplicate statements are retained here; consumers deduplicate.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct TripleSet {
    pub triples: Vec<Triple>,
    pub lines: Vec<usize>,
}

impl TripleSet {
    pub fn len(&self) -> usize {
        self.triples.len()
    }

    pub fn is_empty(&self) -> bool {
        self.triples.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Triple, usize)> {
        self.triples.iter().zip(self.lines.iter().copied())
    }

    /// Renders the set back to snapshot text, one statement per line.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for triple in &self.triples {
            out.push_str(&triple.to_string());
            out.push('\n');
        }
        out
    }
}

/// Parses snapshot text into a [`TripleSet`].
///
/// The first malformed line aborts the parse with [`Error::Parse`].
pub fn parse_triples(text: &str) -> Result<TripleSet> {
    let mut set = TripleSet::default();
    for (idx, line) in text.lines().enumerate() {
        let lineno = idx + 1;
        let trimmed = line.trim();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            continue;
        }
        let triple = parse_line(trimmed).map_err(|reason| Error::Parse {
            line: lineno,
            reason,
        })?;
        set.triples.push(triple);
        set.lines.push(lineno);
    }
    Ok(set)
}

struct Cursor<'a> {
    rest: &'a str,
}

impl<'a> Cursor<'a> {
    fn skip_ws(&mut self) {
        self.rest = self.rest.trim_start();
    }

    fn eat(&mut self, expected: char) -> bool {
        if let Some(rest) = self.rest.strip_prefix(expected) {
            self.rest = rest;
            true
        } else {
            false
        }
    }

    fn peek(&self) -> Option<char> {
        self.rest.chars().next()
    }
}

fn parse_line(line: &str) -> std::result::Result<Triple, String> {
    let mut cur = Cursor { rest: line };

    let subject = parse_iri(&mut cur, "subject")?;
    cur.skip_ws();
    let predicate = parse_iri(&mut cur, "predicate")?;
    cur.skip_ws();

    let object = match cur.peek() {
        Some('<') => Object::Iri(parse_iri(&mut cur, "object")?),
        Some('"') => Object::Literal(parse_literal(&mut cur)?),
        _ => return Err("expected IRI or string literal in object position".into()),
    };

    cur.skip_ws();
    if !cur.eat('.') {
        return Err("missing terminating ' .'".into());
    }
    cur.skip_ws();
    if !cur.rest.is_empty() {
        return Err(format!("unexpected trailing characters {:?}", cur.rest));
    }

    Ok(Triple {
        subject,
        predicate,
        object,
    })
}

fn parse_iri(cur: &mut Cursor, position: &str) -> std::result::Result<String, String> {
    if !cur.eat('<') {
        return Err(format!("expected '<' to open {position} IRI"));
    }
    match cur.rest.find('>') {
        Some(end) => {
            let iri = &cur.rest[..end];
            cur.rest = &cur.rest[end + 1..];
            validate_iri(iri, position)?;
            Ok(iri.to_string())
        }
        None => Err(format!("unterminated {position} IRI (missing '>')")),
    }
}

fn validate_iri(iri: &str, position: &str) -> std::result::Result<(), String> {
    if iri.is_empty() {
        return Err(format!("empty {position} IRI"));
    }
    if iri.chars().any(char::is_whitespace) {
        return Err(format!("whitespace inside {position} IRI <{iri}>"));
    }
    if !iri.contains(':') {
        return Err(format!("{position} IRI <{iri}> is not absolute"));
    }
    Ok(())
}

fn parse_literal(cur: &mut Cursor) -> std::result::Result<String, String> {
    // Caller peeked the opening quote.
    cur.eat('"');
    let mut value = String::new();
    let mut chars = cur.rest.char_indices();
    while let Some((idx, ch)) = chars.next() {
        match ch {
            '"' => {
                cur.rest = &cur.rest[idx + 1..];
                return Ok(value);
            }
            '\\' => match chars.next() {
                Some((_, '"')) => value.push('"'),
                Some((_, '\\')) => value.push('\\'),
                Some((_, other)) => {
                    return Err(format!("invalid escape sequence '\\{other}' in literal"))
                }
                None => return Err("unterminated literal (dangling '\\')".into()),
            },
            other => value.push(other),
        }
    }
    Err("unterminated literal (missing closing '\"')".into())
}
