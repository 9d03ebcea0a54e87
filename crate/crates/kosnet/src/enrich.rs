//! Weighted concept signatures for keywords and aggregated per-author
//! interest profiles.
//!
//! A resolved keyword contributes its concept at full weight, the concept's
//! related neighbors at `w_related`, and every broader ancestor at
//! `w_broader`. A concept reached by several routes keeps the maximum of the
//! competing weights, so dense scheme neighborhoods are not double-counted.
//! Pseudo-concepts never expand: they carry the lexical-only baseline.

use std::collections::BTreeMap;

use crate::catalog::Catalog;
use crate::error::{Error, Result};
use crate::kos::KosIndex;
use crate::resolve::{normalize_label, resolve_keyword};
use crate::Iri;

#[derive(Debug, Clone, PartialEq)]
pub struct EnrichConfig {
    pub w_direct: f64,
    pub w_related: f64,
    pub w_broader: f64,
    pub enrichment_enabled: bool,
}

impl Default for EnrichConfig {
    fn default() -> Self {
        Self {
            w_direct: 1.0,
            w_related: 0.5,
            w_broader: 0.25,
            enrichment_enabled: true,
        }
    }
}

impl EnrichConfig {
    /// Same weights, expansion turned off.
    pub fn disabled() -> Self {
        Self {
            enrichment_enabled: false,
            ..Self::default()
        }
    }

    /// Weights must satisfy `w_direct ≥ w_related ≥ w_broader ≥ 0` and
    /// `w_direct > 0`, and be finite.
    pub fn validate(&self) -> Result<()> {
        let (d, r, b) = (self.w_direct, self.w_related, self.w_broader);
        if !(d.is_finite() && r.is_finite() && b.is_finite()) {
            return Err(Error::Config("enrichment weights must be finite".into()));
        }
        if !(d >= r && r >= b && b >= 0.0) {
            return Err(Error::Config(format!(
                "enrichment weights must satisfy w_direct >= w_related >= w_broader >= 0 \
                 (got {d} / {r} / {b})"
            )));
        }
        if d <= 0.0 {
            return Err(Error::Config("w_direct must be positive".into()));
        }
        Ok(())
    }
}

/// Weighted concept set contributed by a single keyword.
#[derive(Debug, Clone, Default, PartialEq)]
pub struct ConceptSignature {
    pub weights: BTreeMap<Iri, f64>,
}

/// Per-author interest profile: the element-wise sum of the signatures of
/// every keyword on every paper the author wrote.
#[derive(Debug, Clone, PartialEq)]
pub struct ConceptProfile {
    pub author: Iri,
    pub weights: BTreeMap<Iri, f64>,
}

impl ConceptProfile {
    pub fn empty(author: impl Into<Iri>) -> Self {
        Self {
            author: author.into(),
            weights: BTreeMap::new(),
        }
    }

    /// Weight of a concept; absent keys read as zero.
    pub fn weight(&self, concept: &str) -> f64 {
        self.weights.get(concept).copied().unwrap_or(0.0)
    }
}

/// Expands one keyword into its weighted concept signature.
///
/// With enrichment disabled, or for a keyword that resolves to no scheme
/// concept, the signature is the direct concept alone.
pub fn enrich_keyword(kos: &KosIndex, cfg: &EnrichConfig, keyword: &str) -> Result<ConceptSignature> {
    let resolution = resolve_keyword(kos, keyword)?;
    let mut weights: BTreeMap<Iri, f64> = BTreeMap::new();
    weights.insert(resolution.concept.clone(), cfg.w_direct);

    if cfg.enrichment_enabled && resolution.resolved {
        for related in kos.related_of(&resolution.concept)? {
            max_combine(&mut weights, related, cfg.w_related);
        }
        for ancestor in kos.broader_closure(&resolution.concept)? {
            if ancestor != resolution.concept {
                max_combine(&mut weights, ancestor, cfg.w_broader);
            }
        }
    }

    Ok(ConceptSignature { weights })
}

fn max_combine(weights: &mut BTreeMap<Iri, f64>, concept: Iri, weight: f64) {
    weights
        .entry(concept)
        .and_modify(|w| *w = w.max(weight))
        .or_insert(weight);
}

/// Sums keyword signatures over every paper authored by `author`.
///
/// A keyword repeated across papers adds up — repetition reads as stronger
/// interest. Keywords with no alphanumeric content carry no lexical signal
/// and are skipped.
pub fn author_profile(
    cat: &Catalog,
    kos: &KosIndex,
    cfg: &EnrichConfig,
    author: &str,
) -> Result<ConceptProfile> {
    if !cat.authors.contains_key(author) {
        return Err(Error::UnknownAuthor(author.to_string()));
    }
    let mut profile = ConceptProfile::empty(author);
    for paper in cat.papers.values() {
        if !paper.author_iris.contains(author) {
            continue;
        }
        for keyword in &paper.keywords {
            if normalize_label(keyword).is_empty() {
                continue;
            }
            let signature = enrich_keyword(kos, cfg, keyword)?;
            for (concept, weight) in signature.weights {
                *profile.weights.entry(concept).or_insert(0.0) += weight;
            }
        }
    }
    Ok(profile)
}

/// Profiles for every author in the catalog, keyed by author IRI.
pub fn all_profiles(
    cat: &Catalog,
    kos: &KosIndex,
    cfg: &EnrichConfig,
) -> Result<BTreeMap<Iri, ConceptProfile>> {
    let mut profiles = BTreeMap::new();
    for author in cat.authors.keys() {
        profiles.insert(author.clone(), author_profile(cat, kos, cfg, author)?);
    }
    Ok(profiles)
}
