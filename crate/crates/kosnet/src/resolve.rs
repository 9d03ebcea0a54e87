//! Lexical keyword normalization and keyword→concept resolution.
//!
//! Normalization unifies the three grouping headaches of raw author-supplied
//! keywords: spelling/punctuation variants ("e-learning" vs "elearning"),
//! synonyms carried as alternative labels, and acronyms ("OCW" vs
//! "Open CourseWare").

use unicode_normalization::char::is_combining_mark;
use unicode_normalization::UnicodeNormalization;

use crate::error::{Error, Result};
use crate::kos::KosIndex;
use crate::vocab;
use crate::Iri;

/// Outcome of resolving one keyword against the concept scheme.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Resolution {
    /// The keyword as supplied.
    pub keyword: String,
    /// Normalized lookup key.
    pub key: String,
    /// Scheme concept, or the pseudo-concept `urn:kw:<key>` when unresolved.
    pub concept: Iri,
    pub resolved: bool,
    /// True when two or more scheme concepts shared the key; the
    /// lexicographically smallest IRI wins.
    pub ambiguous: bool,
}

/// Case-folds, compatibility-decomposes (dropping combining marks), and
/// removes every non-alphanumeric character. Total: may return an empty
/// string, never fails.
pub fn normalize_label(label: &str) -> String {
    label
        .to_lowercase()
        .nfkd()
        .filter(|c| !is_combining_mark(*c))
        .flat_map(char::to_lowercase)
        .filter(|c| c.is_alphanumeric())
        .collect()
}

/// The pseudo-concept IRI minted for an unresolved normalized key.
pub fn pseudo_concept(key: &str) -> Iri {
    format!("{}{key}", vocab::PSEUDO_CONCEPT_PREFIX)
}

/// Resolves a keyword via the label index.
///
/// Exactly one concept carrying the key wins outright; several tie-break to
/// the smallest IRI with `ambiguous` set; none falls back to a
/// pseudo-concept. Errors with [`Error::EmptyKey`] when the keyword has no
/// alphanumeric content.
pub fn resolve_keyword(kos: &KosIndex, keyword: &str) -> Result<Resolution> {
    let key = normalize_label(keyword);
    if key.is_empty() {
        return Err(Error::EmptyKey(keyword.to_string()));
    }
    let hits = kos.label_index.get(&key);
    match hits {
        Some(iris) if !iris.is_empty() => {
            let concept = iris.iter().next().unwrap().clone();
            Ok(Resolution {
                keyword: keyword.to_string(),
                concept,
                resolved: true,
                ambiguous: iris.len() > 1,
                key,
            })
        }
        _ => Ok(Resolution {
            keyword: keyword.to_string(),
            concept: pseudo_concept(&key),
            resolved: false,
            ambiguous: false,
            key,
        }),
    }
}
