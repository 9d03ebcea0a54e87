//! Property tests for the invariants the modules promise.

use std::collections::{BTreeMap, BTreeSet};

use proptest::prelude::*;

use kosnet::{
    aggregate_graph, all_profiles, author_profile, build_catalog, build_kos, coauthorship_graph,
    enrich_keyword, label_propagation, normalize_label, parse_triples, profile_similarity,
    resolve_keyword, AggregationLevel, ConceptProfile, EnrichConfig, Triple, TripleSet,
    WeightedGraph, DEFAULT_MAX_ITERS,
};

const S: &str = "http://kosnet.dev/s#";

fn triple_set(triples: Vec<Triple>) -> TripleSet {
    let lines = (1..=triples.len()).collect();
    TripleSet { triples, lines }
}

// --- generators -----------------------------------------------------------

/// Triples of a structurally valid catalog: orgs, authors (some affiliated),
/// papers with at least one author each.
fn catalog_triples() -> impl Strategy<Value = Vec<Triple>> {
    let org_count = 0usize..4;
    let author_count = 1usize..8;
    let paper_count = 0usize..8;
    (org_count, author_count, paper_count).prop_flat_map(|(orgs, authors, papers)| {
        let org_ids: Vec<String> = (0..orgs).map(|i| format!("urn:o:{i}")).collect();
        let author_ids: Vec<String> = (0..authors).map(|i| format!("urn:a:{i}")).collect();
        let paper_ids: Vec<String> = (0..papers).map(|i| format!("urn:p:{i}")).collect();

        let author_orgs = proptest::collection::vec(
            proptest::option::of(0..orgs.max(1)),
            authors,
        );
        let countries = proptest::collection::vec(
            proptest::option::of(prop::sample::select(vec!["EC", "ES", "US"])),
            orgs,
        );
        let paper_authors = proptest::collection::vec(
            proptest::collection::btree_set(0..authors, 1..=authors.min(4)),
            papers,
        );
        let paper_keywords = proptest::collection::vec(
            proptest::collection::btree_set(
                prop::sample::select(vec![
                    "OER",
                    "e-Learning",
                    "elearning",
                    "OCW",
                    "Linked Data",
                    "blockchain",
                    "robotics",
                ]),
                0..4,
            ),
            papers,
        );
        let titles = proptest::collection::vec("[ -~]{0,12}", papers);

        (author_orgs, countries, paper_authors, paper_keywords, titles).prop_map(
            move |(author_orgs, countries, paper_authors, paper_keywords, titles)| {
                let mut triples = Vec::new();
                for (i, org) in org_ids.iter().enumerate() {
                    triples.push(Triple::iri(org, format!("{S}type"), format!("{S}Org")));
                    triples.push(Triple::literal(org, format!("{S}orgName"), format!("Org {i}")));
                    if let Some(Some(code)) = countries.get(i) {
                        triples.push(Triple::literal(org, format!("{S}country"), *code));
                    }
                }
                for (i, author) in author_ids.iter().enumerate() {
                    triples.push(Triple::iri(author, format!("{S}type"), format!("{S}Author")));
                    triples.push(Triple::literal(author, format!("{S}name"), format!("Author {i}")));
                    if let Some(Some(org_idx)) = author_orgs.get(i) {
                        if *org_idx < org_ids.len() {
                            triples.push(Triple::iri(
                                author,
                                format!("{S}affiliatedWith"),
                                &org_ids[*org_idx],
                            ));
                        }
                    }
                }
                for (i, paper) in paper_ids.iter().enumerate() {
                    triples.push(Triple::iri(paper, format!("{S}type"), format!("{S}Paper")));
                    if let Some(title) = titles.get(i) {
                        if !title.is_empty() {
                            triples.push(Triple::literal(paper, format!("{S}title"), title));
                        }
                    }
                    for author_idx in &paper_authors[i] {
                        triples.push(Triple::iri(
                            paper,
                            format!("{S}hasAuthor"),
                            &author_ids[*author_idx],
                        ));
                    }
                    for keyword in &paper_keywords[i] {
                        triples.push(Triple::literal(paper, format!("{S}keyword"), *keyword));
                    }
                }
                triples
            },
        )
    })
}

/// A random concept scheme over `urn:c:<i>` with arbitrary broader edges
/// (cycles allowed) and one-sided related declarations.
fn kos_triples(max_concepts: usize) -> impl Strategy<Value = Vec<Triple>> {
    (1usize..=max_concepts).prop_flat_map(move |n| {
        let broader = proptest::collection::vec((0..n, 0..n), 0..(2 * n));
        let related = proptest::collection::vec((0..n, 0..n), 0..n);
        let tops = proptest::collection::vec(0..n, 0..2);
        (broader, related, tops).prop_map(move |(broader, related, tops)| {
            let mut triples = Vec::new();
            for i in 0..n {
                let iri = format!("urn:c:{i}");
                triples.push(Triple::iri(&iri, format!("{S}type"), format!("{S}Concept")));
                triples.push(Triple::literal(&iri, format!("{S}prefLabel"), format!("Label {i}")));
            }
            for (a, b) in broader {
                triples.push(Triple::iri(
                    format!("urn:c:{a}"),
                    format!("{S}broader"),
                    format!("urn:c:{b}"),
                ));
            }
            for (a, b) in related {
                if a != b {
                    triples.push(Triple::iri(
                        format!("urn:c:{a}"),
                        format!("{S}related"),
                        format!("urn:c:{b}"),
                    ));
                }
            }
            for t in tops {
                triples.push(Triple::iri(
                    format!("urn:c:{t}"),
                    format!("{S}topConceptOf"),
                    "urn:scheme:test",
                ));
            }
            triples
        })
    })
}

fn profile_strategy() -> impl Strategy<Value = ConceptProfile> {
    proptest::collection::btree_map("[a-e]", 0.0f64..4.0, 0..6).prop_map(|weights| ConceptProfile {
        author: "urn:a:x".to_string(),
        weights,
    })
}

// --- keyword normalization -------------------------------------------------

proptest! {
    #[test]
    fn normalize_is_idempotent(s in "\\PC*") {
        let once = normalize_label(&s);
        prop_assert_eq!(normalize_label(&once), once);
    }

    #[test]
    fn normalize_output_is_lowercase_alphanumeric(s in "\\PC*") {
        let out = normalize_label(&s);
        prop_assert!(out.chars().all(|c| c.is_alphanumeric() && !c.is_uppercase()));
    }

    #[test]
    fn equal_keys_resolve_to_equal_concepts(
        kos_spec in kos_triples(6),
        a in "[A-Za-z -]{1,10}",
        b in "[A-Za-z -]{1,10}",
    ) {
        let kos = build_kos(&triple_set(kos_spec)).unwrap();
        let (ka, kb) = (normalize_label(&a), normalize_label(&b));
        prop_assume!(!ka.is_empty() && !kb.is_empty());
        if ka == kb {
            let ra = resolve_keyword(&kos, &a).unwrap();
            let rb = resolve_keyword(&kos, &b).unwrap();
            prop_assert_eq!(ra.concept, rb.concept);
        }
    }
}

// --- catalog ---------------------------------------------------------------

proptest! {
    #[test]
    fn catalog_round_trips_through_serialization(triples in catalog_triples()) {
        let cat = build_catalog(&triple_set(triples)).unwrap();
        let reparsed = parse_triples(&cat.to_text()).unwrap();
        let rebuilt = build_catalog(&reparsed).unwrap();
        prop_assert_eq!(cat, rebuilt);
    }

    #[test]
    fn catalog_is_permutation_invariant(
        triples in catalog_triples().prop_shuffle(),
        rev in any::<bool>(),
    ) {
        let mut shuffled = triples.clone();
        if rev {
            shuffled.reverse();
        }
        let a = build_catalog(&triple_set(triples)).unwrap();
        let b = build_catalog(&triple_set(shuffled)).unwrap();
        prop_assert_eq!(&a, &b);
        prop_assert_eq!(a.to_text(), b.to_text());
    }

    #[test]
    fn duplicate_triples_change_nothing(triples in catalog_triples()) {
        let once = build_catalog(&triple_set(triples.clone())).unwrap();
        let mut doubled = triples.clone();
        doubled.extend(triples);
        let twice = build_catalog(&triple_set(doubled)).unwrap();
        prop_assert_eq!(once, twice);
    }
}

// --- concept scheme --------------------------------------------------------

proptest! {
    #[test]
    fn closures_are_reflexive_idempotent_and_dual(kos_spec in kos_triples(12)) {
        let kos = build_kos(&triple_set(kos_spec)).unwrap();
        let iris: Vec<String> = kos.concepts.keys().cloned().collect();
        for iri in &iris {
            let up = kos.broader_closure(iri).unwrap();
            prop_assert!(up.contains(iri));
            // Idempotent fixpoint: the union of members' closures adds nothing.
            let mut union: BTreeSet<String> = BTreeSet::new();
            for member in &up {
                union.extend(kos.broader_closure(member).unwrap());
            }
            prop_assert_eq!(&union, &up);
        }
        // Duality: b in up(a) <=> a in down(b).
        for a in &iris {
            let up = kos.broader_closure(a).unwrap();
            for b in &iris {
                let down = kos.narrower_closure(b).unwrap();
                prop_assert_eq!(up.contains(b), down.contains(a));
            }
        }
    }

    #[test]
    fn related_is_always_symmetric(kos_spec in kos_triples(10)) {
        let kos = build_kos(&triple_set(kos_spec)).unwrap();
        for (iri, concept) in &kos.concepts {
            for other in &concept.related {
                prop_assert!(other != iri);
                prop_assert!(kos.concepts[other].related.contains(iri));
            }
        }
    }
}

// --- enrichment ------------------------------------------------------------

fn arbitrary_weights() -> impl Strategy<Value = EnrichConfig> {
    (0.01f64..10.0, 0.0f64..1.0, 0.0f64..1.0).prop_map(|(d, r_frac, b_frac)| {
        let r = d * r_frac;
        EnrichConfig {
            w_direct: d,
            w_related: r,
            w_broader: r * b_frac,
            enrichment_enabled: true,
        }
    })
}

proptest! {
    #[test]
    fn signature_weights_come_from_the_configured_levels(
        kos_spec in kos_triples(8),
        cfg in arbitrary_weights(),
        idx in 0usize..8,
    ) {
        let kos = build_kos(&triple_set(kos_spec)).unwrap();
        prop_assume!(!kos.is_empty());
        let keyword = format!("Label {}", idx % kos.len());
        let sig = enrich_keyword(&kos, &cfg, &keyword).unwrap();
        for weight in sig.weights.values() {
            prop_assert!(*weight <= cfg.w_direct);
            let is_level = [cfg.w_direct, cfg.w_related, cfg.w_broader]
                .iter()
                .any(|lvl| (lvl - weight).abs() < 1e-12);
            prop_assert!(is_level);
        }
        let direct = resolve_keyword(&kos, &keyword).unwrap().concept;
        prop_assert_eq!(sig.weights.get(&direct).copied(), Some(cfg.w_direct));
    }

    #[test]
    fn profiles_are_additive_over_paper_keyword_pairs(
        triples in catalog_triples(),
        kos_spec in kos_triples(8),
    ) {
        let cat = build_catalog(&triple_set(triples)).unwrap();
        let kos = build_kos(&triple_set(kos_spec)).unwrap();
        let cfg = EnrichConfig::default();
        for author in cat.authors.keys() {
            let profile = author_profile(&cat, &kos, &cfg, author).unwrap();
            let mut expected: BTreeMap<String, f64> = BTreeMap::new();
            for paper in cat.papers.values() {
                if !paper.author_iris.contains(author) {
                    continue;
                }
                for keyword in &paper.keywords {
                    if normalize_label(keyword).is_empty() {
                        continue;
                    }
                    for (concept, w) in enrich_keyword(&kos, &cfg, keyword).unwrap().weights {
                        *expected.entry(concept).or_insert(0.0) += w;
                    }
                }
            }
            prop_assert_eq!(&profile.weights, &expected);
        }
    }

    #[test]
    fn disabled_enrichment_supports_exactly_the_direct_concepts(
        triples in catalog_triples(),
        kos_spec in kos_triples(8),
    ) {
        let cat = build_catalog(&triple_set(triples)).unwrap();
        let kos = build_kos(&triple_set(kos_spec)).unwrap();
        let cfg = EnrichConfig::disabled();
        for author in cat.authors.keys() {
            let profile = author_profile(&cat, &kos, &cfg, author).unwrap();
            let mut direct: BTreeSet<String> = BTreeSet::new();
            for paper in cat.papers.values() {
                if paper.author_iris.contains(author) {
                    for keyword in &paper.keywords {
                        if !normalize_label(keyword).is_empty() {
                            direct.insert(resolve_keyword(&kos, keyword).unwrap().concept);
                        }
                    }
                }
            }
            let support: BTreeSet<String> = profile.weights.keys().cloned().collect();
            prop_assert_eq!(support, direct);
        }
    }
}

// --- similarity ------------------------------------------------------------

proptest! {
    #[test]
    fn similarity_is_symmetric_and_bounded(p in profile_strategy(), q in profile_strategy()) {
        let s = profile_similarity(&p, &q);
        prop_assert!((0.0..=1.0).contains(&s));
        prop_assert_eq!(s, profile_similarity(&q, &p));
    }

    #[test]
    fn similarity_is_scale_invariant(
        p in profile_strategy(),
        q in profile_strategy(),
        scale in 0.1f64..50.0,
    ) {
        let scaled = |pr: &ConceptProfile| ConceptProfile {
            author: pr.author.clone(),
            weights: pr.weights.iter().map(|(k, v)| (k.clone(), v * scale)).collect(),
        };
        let s1 = profile_similarity(&p, &q);
        let s2 = profile_similarity(&scaled(&p), &scaled(&q));
        prop_assert!((s1 - s2).abs() < 1e-9);
    }
}

// --- graphs ----------------------------------------------------------------

proptest! {
    #[test]
    fn aggregate_weights_are_bounded_and_monotone_under_paper_removal(
        triples in catalog_triples(),
    ) {
        let cat = build_catalog(&triple_set(triples)).unwrap();
        let paper_total = cat.papers.len() as u64;
        for level in [AggregationLevel::Institution, AggregationLevel::Country] {
            let (graph, _) = aggregate_graph(&cat, level);
            for (_, _, w) in graph.edges() {
                prop_assert!(w <= paper_total);
            }
        }
        if let Some(first) = cat.papers.keys().next().cloned() {
            let mut smaller = cat.clone();
            smaller.papers.remove(&first);
            let (full, _) = aggregate_graph(&cat, AggregationLevel::Institution);
            let (reduced, _) = aggregate_graph(&smaller, AggregationLevel::Institution);
            for (a, b, w) in reduced.edges() {
                prop_assert!(w <= full.weight(a, b));
            }
        }
    }

    #[test]
    fn coauthor_weight_counts_shared_papers(triples in catalog_triples()) {
        let cat = build_catalog(&triple_set(triples)).unwrap();
        let graph = coauthorship_graph(&cat);
        let authors: Vec<&String> = cat.authors.keys().collect();
        for i in 0..authors.len() {
            for j in (i + 1)..authors.len() {
                let shared = cat
                    .papers
                    .values()
                    .filter(|p| {
                        p.author_iris.contains(authors[i]) && p.author_iris.contains(authors[j])
                    })
                    .count() as u64;
                prop_assert_eq!(graph.weight(authors[i], authors[j]), shared);
            }
        }
    }
}

// --- communities -----------------------------------------------------------

proptest! {
    #[test]
    fn label_propagation_recovers_disjoint_cliques(
        sizes in proptest::collection::vec(1usize..5, 1..5),
    ) {
        let mut graph = WeightedGraph::new();
        let mut expected: BTreeMap<String, BTreeSet<String>> = BTreeMap::new();
        let mut next = 0usize;
        for size in sizes {
            let ids: Vec<String> = (0..size).map(|k| format!("n{:03}", next + k)).collect();
            next += size;
            for id in &ids {
                graph.add_node(id.clone());
            }
            for i in 0..ids.len() {
                for j in (i + 1)..ids.len() {
                    graph.add_edge(&ids[i], &ids[j], 1);
                }
            }
            expected.insert(ids[0].clone(), ids.into_iter().collect());
        }
        let partition = label_propagation(&graph, DEFAULT_MAX_ITERS);
        prop_assert!(partition.converged);
        prop_assert_eq!(partition.communities(), expected);
    }
}

// --- pipeline-level determinism on generated inputs -------------------------

proptest! {
    #[test]
    fn profiles_and_recommendations_are_input_order_invariant(
        triples in catalog_triples().prop_shuffle(),
        kos_spec in kos_triples(8).prop_shuffle(),
    ) {
        let mut triples_rev = triples.clone();
        triples_rev.reverse();
        let mut kos_rev = kos_spec.clone();
        kos_rev.reverse();

        let run = |t: Vec<Triple>, k: Vec<Triple>| {
            let cat = build_catalog(&triple_set(t)).unwrap();
            let kos = build_kos(&triple_set(k)).unwrap();
            let cfg = EnrichConfig::default();
            let profiles = all_profiles(&cat, &kos, &cfg).unwrap();
            let graph = coauthorship_graph(&cat);
            let recs = kosnet::recommend_pairs(&cat, &graph, &profiles, 10, 0.0);
            (profiles, recs)
        };
        let (p1, r1) = run(triples, kos_spec);
        let (p2, r2) = run(triples_rev, kos_rev);
        prop_assert_eq!(p1, p2);
        prop_assert_eq!(r1, r2);
    }

    #[test]
    fn positive_scores_always_carry_shared_concepts(
        triples in catalog_triples(),
        kos_spec in kos_triples(8),
    ) {
        let cat = build_catalog(&triple_set(triples)).unwrap();
        let kos = build_kos(&triple_set(kos_spec)).unwrap();
        let profiles = all_profiles(&cat, &kos, &EnrichConfig::default()).unwrap();
        let graph = coauthorship_graph(&cat);
        for rec in kosnet::recommend_pairs(&cat, &graph, &profiles, usize::MAX, 0.0) {
            prop_assert!(rec.author_a < rec.author_b);
            prop_assert_eq!(graph.weight(&rec.author_a, &rec.author_b), 0);
            prop_assert!((0.0..=1.0).contains(&rec.score));
            if rec.score > 0.0 {
                prop_assert!(!rec.shared_concepts.is_empty());
            }
        }
    }
}
