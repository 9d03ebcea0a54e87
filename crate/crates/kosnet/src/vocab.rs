//! Predicate and class IRIs understood by the ingestion layer.

/// Namespace every vocabulary term lives under.
pub const NS: &str = "http://kosnet.dev/s#";

// Classes.
pub const CLASS_PAPER: &str = "http://kosnet.dev/s#Paper";
pub const CLASS_AUTHOR: &str = "http://kosnet.dev/s#Author";
pub const CLASS_ORG: &str = "http://kosnet.dev/s#Org";
pub const CLASS_CONCEPT: &str = "http://kosnet.dev/s#Concept";

// Shared predicates.
pub const TYPE: &str = "http://kosnet.dev/s#type";

// Paper predicates.
pub const TITLE: &str = "http://kosnet.dev/s#title";
pub const HAS_AUTHOR: &str = "http://kosnet.dev/s#hasAuthor";
pub const KEYWORD: &str = "http://kosnet.dev/s#keyword";
pub const YEAR: &str = "http://kosnet.dev/s#year";

// Author predicates.
pub const NAME: &str = "http://kosnet.dev/s#name";
pub const AFFILIATED_WITH: &str = "http://kosnet.dev/s#affiliatedWith";

// Org predicates.
pub const ORG_NAME: &str = "http://kosnet.dev/s#orgName";
pub const COUNTRY: &str = "http://kosnet.dev/s#country";

// Concept-scheme predicates.
pub const PREF_LABEL: &str = "http://kosnet.dev/s#prefLabel";
pub const ALT_LABEL: &str = "http://kosnet.dev/s#altLabel";
pub const BROADER: &str = "http://kosnet.dev/s#broader";
pub const RELATED: &str = "http://kosnet.dev/s#related";
pub const TOP_CONCEPT_OF: &str = "http://kosnet.dev/s#topConceptOf";

/// Prefix of pseudo-concepts minted for keywords that resolve to no scheme
/// concept.
pub const PSEUDO_CONCEPT_PREFIX: &str = "urn:kw:";
