//! Potential-collaboration recommendations: non-co-author pairs ranked by
//! weighted Jaccard similarity of their enriched interest profiles.

use std::collections::BTreeMap;

use crate::catalog::Catalog;
use crate::enrich::ConceptProfile;
use crate::graph::WeightedGraph;
use crate::Iri;

/// A scored non-co-author pair with the overlap that explains the score.
#[derive(Debug, Clone, PartialEq)]
pub struct Recommendation {
    pub author_a: Iri,
    pub author_b: Iri,
    /// Weighted Jaccard similarity in `[0, 1]`.
    pub score: f64,
    /// `(concept, min(weight_a, weight_b))`, sorted by weight descending
    /// then IRI; non-empty whenever the score is positive.
    pub shared_concepts: Vec<(Iri, f64)>,
}

/// Weighted Jaccard similarity `Σ min(p_c, q_c) / Σ max(p_c, q_c)`.
///
/// Symmetric, in `[0, 1]`, and invariant under uniform positive scaling of
/// both profiles. Two empty profiles score 0.
pub fn profile_similarity(p: &ConceptProfile, q: &ConceptProfile) -> f64 {
    let mut sum_min = 0.0;
    let mut sum_max = 0.0;
    // Union of supports in sorted key order; summation order is fixed so
    // the result is bit-identical across runs.
    let keys: std::collections::BTreeSet<&str> = p
        .weights
        .keys()
        .chain(q.weights.keys())
        .map(String::as_str)
        .collect();
    for key in keys {
        let a = p.weight(key);
        let b = q.weight(key);
        sum_min += a.min(b);
        sum_max += a.max(b);
    }
    if sum_max <= 0.0 {
        0.0
    } else {
        sum_min / sum_max
    }
}

fn shared_concepts(p: &ConceptProfile, q: &ConceptProfile) -> Vec<(Iri, f64)> {
    let mut shared: Vec<(Iri, f64)> = p
        .weights
        .iter()
        .filter_map(|(concept, &a)| {
            let b = q.weight(concept);
            if a > 0.0 && b > 0.0 {
                Some((concept.clone(), a.min(b)))
            } else {
                None
            }
        })
        .collect();
    shared.sort_by(|(ca, wa), (cb, wb)| wb.partial_cmp(wa).unwrap().then_with(|| ca.cmp(cb)));
    shared
}

/// Scores every unordered author pair without a co-authorship edge, keeps
/// those at or above `min_score`, sorts by score descending then pair id,
/// and truncates to `top_k`.
pub fn recommend_pairs(
    cat: &Catalog,
    graph: &WeightedGraph,
    profiles: &BTreeMap<Iri, ConceptProfile>,
    top_k: usize,
    min_score: f64,
) -> Vec<Recommendation> {
    let authors: Vec<&Iri> = cat.authors.keys().collect();
    let mut out: Vec<Recommendation> = Vec::new();
    for i in 0..authors.len() {
        for j in (i + 1)..authors.len() {
            let (a, b) = (authors[i], authors[j]);
            if graph.has_edge(a, b) {
                continue;
            }
            let (pa, pb) = match (profiles.get(a), profiles.get(b)) {
                (Some(pa), Some(pb)) => (pa, pb),
                _ => continue,
            };
            let score = profile_similarity(pa, pb);
            if score < min_score {
                continue;
            }
            out.push(Recommendation {
                author_a: a.clone(),
                author_b: b.clone(),
                score,
                shared_concepts: shared_concepts(pa, pb),
            });
        }
    }
    out.sort_by(|x, y| {
        y.score
            .partial_cmp(&x.score)
            .unwrap()
            .then_with(|| x.author_a.cmp(&y.author_a))
            .then_with(|| x.author_b.cmp(&y.author_b))
    });
    out.truncate(top_k);
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::{AuthorRecord, Catalog};

    fn profile(author: &str, weights: &[(&str, f64)]) -> ConceptProfile {
        ConceptProfile {
            author: author.to_string(),
            weights: weights.iter().map(|(k, v)| (k.to_string(), *v)).collect(),
        }
    }

    #[test]
    fn identical_profiles_score_one() {
        let p = profile("a", &[("x", 2.0), ("y", 0.5)]);
        assert_eq!(profile_similarity(&p, &p), 1.0);
    }

    #[test]
    fn disjoint_supports_score_zero() {
        let p = profile("a", &[("x", 1.0)]);
        let q = profile("b", &[("y", 1.0)]);
        assert_eq!(profile_similarity(&p, &q), 0.0);
    }

    #[test]
    fn hand_case_is_one_third() {
        let p = profile("a", &[("x", 1.0), ("y", 1.0)]);
        let q = profile("b", &[("y", 1.0), ("z", 1.0)]);
        let s = profile_similarity(&p, &q);
        assert!((s - 1.0 / 3.0).abs() < 1e-9);
        assert_eq!(profile_similarity(&q, &p), s);
    }

    #[test]
    fn empty_profiles_score_zero() {
        let p = ConceptProfile::empty("a");
        let q = ConceptProfile::empty("b");
        assert_eq!(profile_similarity(&p, &q), 0.0);
    }

    fn two_author_setup() -> (Catalog, WeightedGraph, BTreeMap<Iri, ConceptProfile>) {
        let mut cat = Catalog::default();
        cat.authors.insert("urn:a:1".into(), AuthorRecord::default());
        cat.authors.insert("urn:a:2".into(), AuthorRecord::default());
        let mut graph = WeightedGraph::new();
        graph.add_node("urn:a:1");
        graph.add_node("urn:a:2");
        let mut profiles = BTreeMap::new();
        profiles.insert("urn:a:1".to_string(), profile("urn:a:1", &[("x", 1.0), ("y", 1.0)]));
        profiles.insert("urn:a:2".to_string(), profile("urn:a:2", &[("y", 1.0), ("z", 1.0)]));
        (cat, graph, profiles)
    }

    #[test]
    fn non_coauthors_with_overlap_are_recommended() {
        let (cat, graph, profiles) = two_author_setup();
        let recs = recommend_pairs(&cat, &graph, &profiles, 20, 0.05);
        assert_eq!(recs.len(), 1);
        let rec = &recs[0];
        assert_eq!(rec.author_a, "urn:a:1");
        assert_eq!(rec.author_b, "urn:a:2");
        assert!((rec.score - 1.0 / 3.0).abs() < 1e-9);
        assert_eq!(rec.shared_concepts, vec![("y".to_string(), 1.0)]);
    }

    #[test]
    fn existing_coauthors_never_appear() {
        let (cat, mut graph, profiles) = two_author_setup();
        graph.add_edge("urn:a:1", "urn:a:2", 1);
        let recs = recommend_pairs(&cat, &graph, &profiles, 20, 0.0);
        assert!(recs.is_empty());
    }

    #[test]
    fn top_k_zero_yields_empty_list() {
        let (cat, graph, profiles) = two_author_setup();
        let recs = recommend_pairs(&cat, &graph, &profiles, 0, 0.0);
        assert!(recs.is_empty());
    }

    #[test]
    fn min_score_filters_low_overlap() {
        let (cat, graph, profiles) = two_author_setup();
        let recs = recommend_pairs(&cat, &graph, &profiles, 20, 0.5);
        assert!(recs.is_empty());
    }

    #[test]
    fn scaling_both_profiles_preserves_scores() {
        let p = profile("a", &[("x", 1.0), ("y", 3.0)]);
        let q = profile("b", &[("y", 2.0), ("z", 1.0)]);
        let scaled = |pr: &ConceptProfile| ConceptProfile {
            author: pr.author.clone(),
            weights: pr.weights.iter().map(|(k, v)| (k.clone(), v * 7.5)).collect(),
        };
        let s1 = profile_similarity(&p, &q);
        let s2 = profile_similarity(&scaled(&p), &scaled(&q));
        assert!((s1 - s2).abs() < 1e-12);
    }
}
