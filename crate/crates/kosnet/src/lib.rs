//! Discover potential research-collaboration networks from linked scholarly
//! metadata.
//!
//! The pipeline ingests triple snapshots of papers/authors/organizations and a
//! SKOS-style concept scheme, resolves paper keywords against the scheme,
//! enriches them with related and broader concepts, builds weighted
//! co-authorship graphs at author/institution/country level, detects
//! communities, and recommends author pairs that have never collaborated but
//! share enriched interest profiles.

pub mod catalog;
pub mod community;
pub mod enrich;
pub mod error;
pub mod export;
pub mod graph;
pub mod kos;
pub mod pipeline;
pub mod query;
pub mod recommend;
pub mod resolve;
pub mod triple;
pub mod vocab;
pub mod warnings;

pub use catalog::{build_catalog, AuthorRecord, Catalog, OrgRecord, PaperRecord};
pub use community::{
    connected_components, label_propagation, topic_community, Partition, TopicCommunity,
    DEFAULT_MAX_ITERS,
};
pub use enrich::{all_profiles, author_profile, enrich_keyword, ConceptProfile, ConceptSignature, EnrichConfig};
pub use error::{Error, Result};
pub use export::{export_graph, ExportFormat};
pub use graph::{aggregate_graph, coauthorship_graph, AggregationLevel, WeightedGraph};
pub use kos::{build_kos, Concept, KosIndex};
pub use pipeline::{run_pipeline, PipelineConfig, PipelineSummary};
pub use query::{authors_and_keywords_of, papers_by_area, tops_of_keywords, AreaQueryResult};
pub use recommend::{profile_similarity, recommend_pairs, Recommendation};
pub use resolve::{normalize_label, resolve_keyword, Resolution};
pub use triple::{parse_triples, Object, Triple, TripleSet};
pub use warnings::WarningLog;

/// Absolute IRI, kept as a plain string throughout.
pub type Iri = String;
