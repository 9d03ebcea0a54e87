//! Validated scholarly catalog assembled from parsed triples.

use std::collections::{BTreeMap, BTreeSet};

use crate::error::{Error, Result};
use crate::triple::{Object, Triple, TripleSet};
use crate::vocab;
use crate::warnings::WarningLog;
use crate::Iri;

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct PaperRecord {
    pub title: String,
    pub year: Option<i32>,
    pub author_iris: BTreeSet<Iri>,
    /// Keyword literals kept verbatim, sorted and deduplicated.
    pub keywords: Vec<String>,
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct AuthorRecord {
    pub name: String,
    pub org_iri: Option<Iri>,
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct OrgRecord {
    pub name: String,
    /// Two-letter country code, verbatim from the snapshot.
    pub country: Option<String>,
}

/// Papers, authors, and organizations with validated cross-references.
///
/// All maps are `BTreeMap`s, so iteration order is lexicographic by IRI and
/// the catalog built from any permutation of the same triples is identical.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Catalog {
    pub papers: BTreeMap<Iri, PaperRecord>,
    pub authors: BTreeMap<Iri, AuthorRecord>,
    pub orgs: BTreeMap<Iri, OrgRecord>,
    pub warnings: WarningLog,
}

impl Catalog {
    pub fn is_empty(&self) -> bool {
        self.papers.is_empty() && self.authors.is_empty() && self.orgs.is_empty()
    }

    /// Canonical serialization: the catalog re-expressed as sorted triples.
    ///
    /// Re-parsing and rebuilding from this output yields an equal catalog.
    pub fn to_triples(&self) -> Vec<Triple> {
        let mut out = Vec::new();
        for (iri, paper) in &self.papers {
            out.push(Triple::iri(iri, vocab::TYPE, vocab::CLASS_PAPER));
            if !paper.title.is_empty() {
                out.push(Triple::literal(iri, vocab::TITLE, &paper.title));
            }
            if let Some(year) = paper.year {
                out.push(Triple::literal(iri, vocab::YEAR, year.to_string()));
            }
            for author in &paper.author_iris {
                out.push(Triple::iri(iri, vocab::HAS_AUTHOR, author));
            }
            for keyword in &paper.keywords {
                out.push(Triple::literal(iri, vocab::KEYWORD, keyword));
            }
        }
        for (iri, author) in &self.authors {
            out.push(Triple::iri(iri, vocab::TYPE, vocab::CLASS_AUTHOR));
            if !author.name.is_empty() {
                out.push(Triple::literal(iri, vocab::NAME, &author.name));
            }
            if let Some(org) = &author.org_iri {
                out.push(Triple::iri(iri, vocab::AFFILIATED_WITH, org));
            }
        }
        for (iri, org) in &self.orgs {
            out.push(Triple::iri(iri, vocab::TYPE, vocab::CLASS_ORG));
            if !org.name.is_empty() {
                out.push(Triple::literal(iri, vocab::ORG_NAME, &org.name));
            }
            if let Some(country) = &org.country {
                out.push(Triple::literal(iri, vocab::COUNTRY, country));
            }
        }
        out
    }

    /// `to_triples` rendered as snapshot text.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for triple in self.to_triples() {
            out.push_str(&triple.to_string());
            out.push('\n');
        }
        out
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum EntityKind {
    Paper,
    Author,
    Org,
}

/// Materializes a [`Catalog`] from parsed triples.
///
/// Duplicate statements collapse. Unknown predicates, subjects without a type
/// declaration, and object-kind mismatches are skipped with a counted warning.
/// Structural violations are hard errors: a paper with zero authors, a
/// `hasAuthor`/`affiliatedWith` reference to an undeclared entity, or
/// conflicting type declarations.
pub fn build_catalog(ts: &TripleSet) -> Result<Catalog> {
    let unique: BTreeSet<&Triple> = ts.triples.iter().collect();
    let mut warnings = WarningLog::new();

    let mut kinds: BTreeMap<&str, EntityKind> = BTreeMap::new();
    for triple in unique.iter().filter(|t| t.predicate == vocab::TYPE) {
        let class = match triple.object.as_iri() {
            Some(class) => class,
            None => {
                warnings.warn(format!(
                    "literal object in type declaration for <{}>",
                    triple.subject
                ));
                continue;
            }
        };
        let kind = match class {
            vocab::CLASS_PAPER => EntityKind::Paper,
            vocab::CLASS_AUTHOR => EntityKind::Author,
            vocab::CLASS_ORG => EntityKind::Org,
            other => {
                warnings.warn(format!(
                    "skipped <{}>: unhandled type <{other}>",
                    triple.subject
                ));
                continue;
            }
        };
        if let Some(existing) = kinds.insert(triple.subject.as_str(), kind) {
            if existing != kind {
                return Err(Error::integrity(
                    &triple.subject,
                    "conflicting type declarations",
                ));
            }
        }
    }

    let mut papers: BTreeMap<Iri, PaperRecord> = BTreeMap::new();
    let mut authors: BTreeMap<Iri, AuthorRecord> = BTreeMap::new();
    let mut orgs: BTreeMap<Iri, OrgRecord> = BTreeMap::new();
    let mut paper_keywords: BTreeMap<Iri, BTreeSet<String>> = BTreeMap::new();

    for (iri, kind) in &kinds {
        match kind {
            EntityKind::Paper => {
                papers.insert((*iri).to_string(), PaperRecord::default());
            }
            EntityKind::Author => {
                authors.insert((*iri).to_string(), AuthorRecord::default());
            }
            EntityKind::Org => {
                orgs.insert((*iri).to_string(), OrgRecord::default());
            }
        }
    }

    for triple in unique.iter().filter(|t| t.predicate != vocab::TYPE) {
        let subject = triple.subject.as_str();
        let kind = match kinds.get(subject) {
            Some(kind) => *kind,
            None => {
                warnings.warn(format!(
                    "skipped statement about untyped subject <{subject}>"
                ));
                continue;
            }
        };
        match (triple.predicate.as_str(), kind) {
            (vocab::TITLE, EntityKind::Paper) => {
                if let Some(text) = expect_literal(triple, &mut warnings) {
                    set_string_field(
                        &mut papers.get_mut(subject).unwrap().title,
                        text,
                        subject,
                        "title",
                        &mut warnings,
                    );
                }
            }
            (vocab::YEAR, EntityKind::Paper) => {
                if let Some(text) = expect_literal(triple, &mut warnings) {
                    match text.parse::<i32>() {
                        Ok(year) => {
                            let slot = &mut papers.get_mut(subject).unwrap().year;
                            match slot {
                                None => *slot = Some(year),
                                Some(existing) => {
                                    warnings.warn(format!(
                                        "multiple year values for <{subject}>; keeping the smallest"
                                    ));
                                    *slot = Some((*existing).min(year));
                                }
                            }
                        }
                        Err(_) => warnings.warn(format!(
                            "unparsable year {text:?} for <{subject}>; skipped"
                        )),
                    }
                }
            }
            (vocab::HAS_AUTHOR, EntityKind::Paper) => {
                if let Some(author) = expect_iri(triple, &mut warnings) {
                    papers
                        .get_mut(subject)
                        .unwrap()
                        .author_iris
                        .insert(author.to_string());
                }
            }
            (vocab::KEYWORD, EntityKind::Paper) => {
                if let Some(text) = expect_literal(triple, &mut warnings) {
                    paper_keywords
                        .entry(subject.to_string())
                        .or_default()
                        .insert(text.to_string());
                }
            }
            (vocab::NAME, EntityKind::Author) => {
                if let Some(text) = expect_literal(triple, &mut warnings) {
                    set_string_field(
                        &mut authors.get_mut(subject).unwrap().name,
                        text,
                        subject,
                        "name",
                        &mut warnings,
                    );
                }
            }
            (vocab::AFFILIATED_WITH, EntityKind::Author) => {
                if let Some(org) = expect_iri(triple, &mut warnings) {
                    let slot = &mut authors.get_mut(subject).unwrap().org_iri;
                    match slot {
                        None => *slot = Some(org.to_string()),
                        Some(existing) => {
                            warnings.warn(format!(
                                "multiple affiliations for <{subject}>; keeping the smallest IRI"
                            ));
                            if org < existing.as_str() {
                                *slot = Some(org.to_string());
                            }
                        }
                    }
                }
            }
            (vocab::ORG_NAME, EntityKind::Org) => {
                if let Some(text) = expect_literal(triple, &mut warnings) {
                    set_string_field(
                        &mut orgs.get_mut(subject).unwrap().name,
                        text,
                        subject,
                        "orgName",
                        &mut warnings,
                    );
                }
            }
            (vocab::COUNTRY, EntityKind::Org) => {
                if let Some(text) = expect_literal(triple, &mut warnings) {
                    if text.len() == 2 && text.chars().all(|c| c.is_ascii_alphabetic()) {
                        let slot = &mut orgs.get_mut(subject).unwrap().country;
                        match slot {
                            None => *slot = Some(text.to_string()),
                            Some(existing) => {
                                warnings.warn(format!(
                                    "multiple countries for <{subject}>; keeping the smallest"
                                ));
                                if text < existing.as_str() {
                                    *slot = Some(text.to_string());
                                }
                            }
                        }
                    } else {
                        warnings.warn(format!(
                            "invalid country code {text:?} for <{subject}>; skipped"
                        ));
                    }
                }
            }
            (
                vocab::TITLE | vocab::YEAR | vocab::HAS_AUTHOR | vocab::KEYWORD | vocab::NAME
                | vocab::AFFILIATED_WITH | vocab::ORG_NAME | vocab::COUNTRY,
                _,
            ) => {
                warnings.warn(format!(
                    "predicate <{}> does not apply to <{subject}>; skipped",
                    triple.predicate
                ));
            }
            (other, _) => {
                warnings.warn(format!("unknown predicate <{other}>; skipped"));
            }
        }
    }

    for (iri, keywords) in paper_keywords {
        papers.get_mut(&iri).unwrap().keywords = keywords.into_iter().collect();
    }

    // Reference checks run after assembly so they see the full entity sets.
    for (iri, paper) in &papers {
        if paper.author_iris.is_empty() {
            return Err(Error::integrity(iri, "paper has no authors"));
        }
        for author in &paper.author_iris {
            if !authors.contains_key(author) {
                return Err(Error::integrity(
                    author,
                    format!("referenced as author of <{iri}> but never declared"),
                ));
            }
        }
    }
    for (iri, author) in &authors {
        if let Some(org) = &author.org_iri {
            if !orgs.contains_key(org) {
                return Err(Error::integrity(
                    org,
                    format!("referenced as affiliation of <{iri}> but never declared"),
                ));
            }
        }
    }

    Ok(Catalog {
        papers,
        authors,
        orgs,
        warnings,
    })
}

fn expect_literal<'t>(triple: &'t Triple, warnings: &mut WarningLog) -> Option<&'t str> {
    match &triple.object {
        Object::Literal(text) => Some(text),
        Object::Iri(_) => {
            warnings.warn(format!(
                "predicate <{}> expects a literal object; skipped for <{}>",
                triple.predicate, triple.subject
            ));
            None
        }
    }
}

fn expect_iri<'t>(triple: &'t Triple, warnings: &mut WarningLog) -> Option<&'t str> {
    match &triple.object {
        Object::Iri(iri) => Some(iri),
        Object::Literal(_) => {
            warnings.warn(format!(
                "predicate <{}> expects an IRI object; skipped for <{}>",
                triple.predicate, triple.subject
            ));
            None
        }
    }
}

/// Multi-valued single-slot fields resolve to the lexicographically smallest
/// value so the result is independent of input order.
fn set_string_field(
    slot: &mut String,
    value: &str,
    subject: &str,
    field: &str,
    warnings: &mut WarningLog,
) {
    if slot.is_empty() {
        *slot = value.to_string();
    } else {
        warnings.warn(format!(
            "multiple {field} values for <{subject}>; keeping the smallest"
        ));
        if value < slot.as_str() {
            *slot = value.to_string();
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::triple::parse_triples;

    const S: &str = "http://kosnet.dev/s#";

    fn fixture_text() -> String {
        format!(
            "<urn:p1> <{S}type> <{S}Paper> .\n\
             <urn:p1> <{S}title> \"Open data\" .\n\
             <urn:p1> <{S}hasAuthor> <urn:a1> .\n\
             <urn:p1> <{S}hasAuthor> <urn:a2> .\n\
             <urn:p1> <{S}keyword> \"elearning\" .\n\
             <urn:a1> <{S}type> <{S}Author> .\n\
             <urn:a1> <{S}name> \"Ada\" .\n\
             <urn:a2> <{S}type> <{S}Author> .\n"
        )
    }

    #[test]
    fn builds_catalog_from_fixture() {
        let ts = parse_triples(&fixture_text()).unwrap();
        let cat = build_catalog(&ts).unwrap();
        assert_eq!(cat.papers.len(), 1);
        assert_eq!(cat.authors.len(), 2);
        let paper = &cat.papers["urn:p1"];
        assert_eq!(paper.title, "Open data");
        assert_eq!(paper.author_iris.len(), 2);
        assert_eq!(paper.keywords, vec!["elearning"]);
        assert!(cat.warnings.is_empty());
    }

    #[test]
    fn undeclared_author_reference_is_integrity_error() {
        let text = format!(
            "<urn:p1> <{S}type> <{S}Paper> .\n\
             <urn:p1> <{S}hasAuthor> <urn:a9> .\n"
        );
        let ts = parse_triples(&text).unwrap();
        match build_catalog(&ts).unwrap_err() {
            Error::Integrity { iri, .. } => assert_eq!(iri, "urn:a9"),
            other => panic!("unexpected error {other:?}"),
        }
    }

    #[test]
    fn paper_with_zero_authors_is_rejected() {
        let text = format!("<urn:p1> <{S}type> <{S}Paper> .\n");
        let ts = parse_triples(&text).unwrap();
        match build_catalog(&ts).unwrap_err() {
            Error::Integrity { iri, reason } => {
                assert_eq!(iri, "urn:p1");
                assert!(reason.contains("no authors"));
            }
            other => panic!("unexpected error {other:?}"),
        }
    }

    #[test]
    fn empty_tripleset_yields_empty_catalog() {
        let cat = build_catalog(&TripleSet::default()).unwrap();
        assert!(cat.is_empty());
    }

    #[test]
    fn unknown_predicates_warn_and_are_counted() {
        let mut text = fixture_text();
        text.push_str("<urn:p1> <urn:other:pred> \"x\" .\n");
        text.push_str("<urn:p1> <urn:other:pred> \"y\" .\n");
        let ts = parse_triples(&text).unwrap();
        let cat = build_catalog(&ts).unwrap();
        assert_eq!(cat.warnings.total(), 2);
        assert_eq!(cat.papers.len(), 1);
    }

    #[test]
    fn duplicate_triples_collapse() {
        let mut text = fixture_text();
        text.push_str(&fixture_text());
        let ts = parse_triples(&text).unwrap();
        let cat = build_catalog(&ts).unwrap();
        assert_eq!(cat.papers["urn:p1"].keywords.len(), 1);
        assert_eq!(cat.papers["urn:p1"].author_iris.len(), 2);
    }

    #[test]
    fn conflicting_types_are_rejected() {
        let text = format!(
            "<urn:x> <{S}type> <{S}Paper> .\n\
             <urn:x> <{S}type> <{S}Author> .\n"
        );
        let ts = parse_triples(&text).unwrap();
        assert!(matches!(
            build_catalog(&ts),
            Err(Error::Integrity { .. })
        ));
    }

    #[test]
    fn affiliation_to_undeclared_org_is_rejected() {
        let text = format!(
            "<urn:a1> <{S}type> <{S}Author> .\n\
             <urn:a1> <{S}affiliatedWith> <urn:o9> .\n"
        );
        let ts = parse_triples(&text).unwrap();
        match build_catalog(&ts).unwrap_err() {
            Error::Integrity { iri, .. } => assert_eq!(iri, "urn:o9"),
            other => panic!("unexpected error {other:?}"),
        }
    }

    #[test]
    fn catalog_round_trips_through_triples() {
        let ts = parse_triples(&fixture_text()).unwrap();
        let cat = build_catalog(&ts).unwrap();
        let reparsed = parse_triples(&cat.to_text()).unwrap();
        let rebuilt = build_catalog(&reparsed).unwrap();
        assert_eq!(cat, rebuilt);
    }
}
