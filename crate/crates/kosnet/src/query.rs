//! The three catalog/scheme queries: papers of a knowledge area, authors and
//! keywords of a paper set, and top concepts of keywords.

use std::collections::BTreeSet;

use crate::catalog::Catalog;
use crate::error::{Error, Result};
use crate::kos::KosIndex;
use crate::resolve::{normalize_label, resolve_keyword};
use crate::Iri;

/// Papers whose keywords fall inside a knowledge area.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AreaQueryResult {
    pub concept: Iri,
    /// Narrower closure of the area concept.
    pub expanded: BTreeSet<Iri>,
    /// Papers with at least one keyword resolving into `expanded`.
    pub papers: BTreeSet<Iri>,
}

/// Finds the papers related to a knowledge area: the area concept is
/// expanded to its narrower closure and a paper qualifies when any of its
/// keywords resolves to a concept in that closure.
pub fn papers_by_area(cat: &Catalog, kos: &KosIndex, area: &str) -> Result<AreaQueryResult> {
    let expanded = kos.narrower_closure(area)?;
    let mut papers = BTreeSet::new();
    for (iri, paper) in &cat.papers {
        for keyword in &paper.keywords {
            if normalize_label(keyword).is_empty() {
                continue;
            }
            let resolution = resolve_keyword(kos, keyword)?;
            if resolution.resolved && expanded.contains(&resolution.concept) {
                papers.insert(iri.clone());
                break;
            }
        }
    }
    Ok(AreaQueryResult {
        concept: area.to_string(),
        expanded,
        papers,
    })
}

/// One row per distinct author over the paper set, with the union of their
/// keywords within the set (order-preserving, deduplicated). Rows sorted by
/// author IRI.
pub fn authors_and_keywords_of(
    cat: &Catalog,
    papers: &BTreeSet<Iri>,
) -> Result<Vec<(Iri, Vec<String>)>> {
    for iri in papers {
        if !cat.papers.contains_key(iri) {
            return Err(Error::UnknownPaper(iri.clone()));
        }
    }
    let mut rows: std::collections::BTreeMap<Iri, (Vec<String>, BTreeSet<String>)> =
        std::collections::BTreeMap::new();
    for iri in papers {
        let paper = &cat.papers[iri];
        for author in &paper.author_iris {
            let (keywords, seen) = rows.entry(author.clone()).or_default();
            for keyword in &paper.keywords {
                if seen.insert(keyword.clone()) {
                    keywords.push(keyword.clone());
                }
            }
        }
    }
    Ok(rows
        .into_iter()
        .map(|(author, (keywords, _))| (author, keywords))
        .collect())
}

/// Top concepts reachable from each keyword, in input order; a keyword that
/// resolves to no scheme concept gets an empty set.
pub fn tops_of_keywords(
    kos: &KosIndex,
    keywords: &[String],
) -> Result<Vec<(String, BTreeSet<Iri>)>> {
    let mut out = Vec::with_capacity(keywords.len());
    for keyword in keywords {
        let resolution = resolve_keyword(kos, keyword)?;
        let tops = if resolution.resolved {
            kos.top_concepts_of(&resolution.concept)?
        } else {
            BTreeSet::new()
        };
        out.push((keyword.clone(), tops));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::build_catalog;
    use crate::kos::build_kos;
    use crate::triple::parse_triples;

    const S: &str = "http://kosnet.dev/s#";

    fn kos() -> KosIndex {
        let text = format!(
            "<urn:c:education> <{S}type> <{S}Concept> .\n\
             <urn:c:education> <{S}prefLabel> \"Education\" .\n\
             <urn:c:elearning> <{S}type> <{S}Concept> .\n\
             <urn:c:elearning> <{S}prefLabel> \"E-Learning\" .\n\
             <urn:c:elearning> <{S}broader> <urn:c:education> .\n\
             <urn:c:ocw> <{S}type> <{S}Concept> .\n\
             <urn:c:ocw> <{S}prefLabel> \"Open CourseWare\" .\n\
             <urn:c:ocw> <{S}altLabel> \"OCW\" .\n\
             <urn:c:ocw> <{S}broader> <urn:c:elearning> .\n"
        );
        build_kos(&parse_triples(&text).unwrap()).unwrap()
    }

    fn catalog() -> Catalog {
        let text = format!(
            "<urn:p:1> <{S}type> <{S}Paper> .\n\
             <urn:p:1> <{S}hasAuthor> <urn:a:1> .\n\
             <urn:p:1> <{S}hasAuthor> <urn:a:2> .\n\
             <urn:p:1> <{S}keyword> \"OCW\" .\n\
             <urn:p:2> <{S}type> <{S}Paper> .\n\
             <urn:p:2> <{S}hasAuthor> <urn:a:2> .\n\
             <urn:p:2> <{S}keyword> \"Quantum Sensing\" .\n\
             <urn:a:1> <{S}type> <{S}Author> .\n\
             <urn:a:2> <{S}type> <{S}Author> .\n"
        );
        build_catalog(&parse_triples(&text).unwrap()).unwrap()
    }

    #[test]
    fn area_query_pulls_descendant_keyworded_papers() {
        let result = papers_by_area(&catalog(), &kos(), "urn:c:education").unwrap();
        assert!(result.papers.contains("urn:p:1"));
        assert!(!result.papers.contains("urn:p:2"));
        assert_eq!(result.expanded.len(), 3);
    }

    #[test]
    fn leaf_area_without_matches_is_empty() {
        let text = format!(
            "<urn:c:x> <{S}type> <{S}Concept> .\n\
             <urn:c:x> <{S}prefLabel> \"Nothing Uses This\" .\n"
        );
        let lone = build_kos(&parse_triples(&text).unwrap()).unwrap();
        let result = papers_by_area(&catalog(), &lone, "urn:c:x").unwrap();
        assert!(result.papers.is_empty());
    }

    #[test]
    fn unknown_area_is_an_error() {
        assert!(matches!(
            papers_by_area(&catalog(), &kos(), "urn:c:ghost"),
            Err(Error::UnknownConcept(_))
        ));
    }

    #[test]
    fn author_rows_project_keywords() {
        let papers: BTreeSet<Iri> = ["urn:p:1".to_string()].into_iter().collect();
        let rows = authors_and_keywords_of(&catalog(), &papers).unwrap();
        assert_eq!(
            rows,
            vec![
                ("urn:a:1".to_string(), vec!["OCW".to_string()]),
                ("urn:a:2".to_string(), vec!["OCW".to_string()]),
            ]
        );
    }

    #[test]
    fn empty_paper_set_yields_no_rows() {
        let rows = authors_and_keywords_of(&catalog(), &BTreeSet::new()).unwrap();
        assert!(rows.is_empty());
    }

    #[test]
    fn unknown_paper_is_an_error() {
        let papers: BTreeSet<Iri> = ["urn:p:9".to_string()].into_iter().collect();
        assert!(matches!(
            authors_and_keywords_of(&catalog(), &papers),
            Err(Error::UnknownPaper(_))
        ));
    }

    #[test]
    fn tops_resolve_through_the_chain() {
        let rows = tops_of_keywords(
            &kos(),
            &["OCW".to_string(), "mystery term".to_string(), "Education".to_string()],
        )
        .unwrap();
        assert_eq!(rows[0].1, BTreeSet::from(["urn:c:education".to_string()]));
        assert!(rows[1].1.is_empty());
        assert_eq!(rows[2].1, BTreeSet::from(["urn:c:education".to_string()]));
    }

    #[test]
    fn empty_key_keyword_propagates_error() {
        assert!(matches!(
            tops_of_keywords(&kos(), &["???".to_string()]),
            Err(Error::EmptyKey(_))
        ));
    }
}
