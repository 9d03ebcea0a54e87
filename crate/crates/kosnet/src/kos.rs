//! SKOS-style concept scheme index: labels, broader/narrower closures, top
//! concepts, related neighbors.

use std::collections::{BTreeMap, BTreeSet};

use crate::error::{Error, Result};
use crate::resolve::normalize_label;
use crate::triple::{Object, Triple, TripleSet};
use crate::vocab;
use crate::warnings::WarningLog;
use crate::Iri;

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Concept {
    pub iri: Iri,
    pub pref_label: String,
    pub alt_labels: BTreeSet<String>,
    pub broader: BTreeSet<Iri>,
    /// Symmetric by construction: `b ∈ related(a)` iff `a ∈ related(b)`.
    pub related: BTreeSet<Iri>,
    pub is_top: bool,
}

impl Concept {
    /// A concept counts as top when explicitly flagged or when it has no
    /// broader concept at all.
    pub fn is_effective_top(&self) -> bool {
        self.is_top || self.broader.is_empty()
    }
}

/// Immutable concept-scheme index; all query operations are read-only.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct KosIndex {
    pub concepts: BTreeMap<Iri, Concept>,
    /// Normalized label key → concept IRIs carrying that label.
    pub label_index: BTreeMap<String, BTreeSet<Iri>>,
    /// Inverse of the broader relation.
    narrower: BTreeMap<Iri, BTreeSet<Iri>>,
    pub warnings: WarningLog,
}

impl KosIndex {
    pub fn len(&self) -> usize {
        self.concepts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.concepts.is_empty()
    }

    pub fn contains(&self, iri: &str) -> bool {
        self.concepts.contains_key(iri)
    }

    fn require(&self, iri: &str) -> Result<&Concept> {
        self.concepts
            .get(iri)
            .ok_or_else(|| Error::UnknownConcept(iri.to_string()))
    }

    /// Reflexive–transitive closure over broader edges, sorted by IRI.
    ///
    /// Cycles terminate via the visited set.
    pub fn broader_closure(&self, iri: &str) -> Result<BTreeSet<Iri>> {
        self.require(iri)?;
        Ok(self.closure(iri, |c| self.concepts.get(c).map(|x| &x.broader)))
    }

    /// Reflexive–transitive closure over narrower (inverted broader) edges.
    pub fn narrower_closure(&self, iri: &str) -> Result<BTreeSet<Iri>> {
        self.require(iri)?;
        Ok(self.closure(iri, |c| self.narrower.get(c)))
    }

    fn closure<'a, F>(&'a self, start: &str, edges: F) -> BTreeSet<Iri>
    where
        F: Fn(&str) -> Option<&'a BTreeSet<Iri>>,
    {
        let mut seen: BTreeSet<Iri> = BTreeSet::new();
        let mut stack = vec![start.to_string()];
        while let Some(current) = stack.pop() {
            if seen.insert(current.clone()) {
                for next in edges(&current).into_iter().flatten() {
                    if !seen.contains(next) {
                        stack.push(next.clone());
                    }
                }
            }
        }
        seen
    }

    /// Top concepts among the broader closure of `iri`.
    ///
    /// Empty when the concept sits in a broader cycle that never reaches a
    /// top; `build_kos` records a warning for every such concept.
    pub fn top_concepts_of(&self, iri: &str) -> Result<BTreeSet<Iri>> {
        let closure = self.broader_closure(iri)?;
        Ok(closure
            .into_iter()
            .filter(|c| self.concepts[c].is_effective_top())
            .collect())
    }

    /// One-step related neighbors, sorted; never contains `iri` itself.
    pub fn related_of(&self, iri: &str) -> Result<BTreeSet<Iri>> {
        Ok(self.require(iri)?.related.clone())
    }
}

/// Assembles a [`KosIndex`] from parsed triples.
///
/// Related edges are symmetrized regardless of how many sides the input
/// declares. Broader/related references to undeclared concepts are integrity
/// errors; a concept without a prefLabel is too.
pub fn build_kos(ts: &TripleSet) -> Result<KosIndex> {
    let unique: BTreeSet<&Triple> = ts.triples.iter().collect();
    let mut warnings = WarningLog::new();

    let mut concepts: BTreeMap<Iri, Concept> = BTreeMap::new();
    for triple in unique.iter().filter(|t| t.predicate == vocab::TYPE) {
        match triple.object.as_iri() {
            Some(vocab::CLASS_CONCEPT) => {
                concepts
                    .entry(triple.subject.clone())
                    .or_insert_with(|| Concept {
                        iri: triple.subject.clone(),
                        ..Concept::default()
                    });
            }
            Some(other) => warnings.warn(format!(
                "skipped <{}>: unhandled type <{other}>",
                triple.subject
            )),
            None => warnings.warn(format!(
                "literal object in type declaration for <{}>",
                triple.subject
            )),
        }
    }

    let mut related_pairs: BTreeSet<(Iri, Iri)> = BTreeSet::new();

    for triple in unique.iter().filter(|t| t.predicate != vocab::TYPE) {
        let subject = triple.subject.as_str();
        if !concepts.contains_key(subject) {
            warnings.warn(format!(
                "skipped statement about untyped subject <{subject}>"
            ));
            continue;
        }
        match triple.predicate.as_str() {
            vocab::PREF_LABEL => {
                if let Object::Literal(text) = &triple.object {
                    let concept = concepts.get_mut(subject).unwrap();
                    if concept.pref_label.is_empty() {
                        concept.pref_label = text.clone();
                    } else {
                        warnings.warn(format!(
                            "multiple prefLabel values for <{subject}>; keeping the smallest"
                        ));
                        if text < &concept.pref_label {
                            concept.pref_label = text.clone();
                        }
                    }
                } else {
                    warnings.warn(format!("prefLabel of <{subject}> must be a literal; skipped"));
                }
            }
            vocab::ALT_LABEL => {
                if let Object::Literal(text) = &triple.object {
                    concepts.get_mut(subject).unwrap().alt_labels.insert(text.clone());
                } else {
                    warnings.warn(format!("altLabel of <{subject}> must be a literal; skipped"));
                }
            }
            vocab::BROADER => {
                if let Some(target) = triple.object.as_iri() {
                    if !concepts.contains_key(target) {
                        return Err(Error::integrity(
                            target,
                            format!("broader target of <{subject}> is not a declared concept"),
                        ));
                    }
                    concepts.get_mut(subject).unwrap().broader.insert(target.to_string());
                } else {
                    warnings.warn(format!("broader of <{subject}> must be an IRI; skipped"));
                }
            }
            vocab::RELATED => {
                if let Some(target) = triple.object.as_iri() {
                    if !concepts.contains_key(target) {
                        return Err(Error::integrity(
                            target,
                            format!("related target of <{subject}> is not a declared concept"),
                        ));
                    }
                    if target == subject {
                        warnings.warn(format!("self-related edge on <{subject}>; skipped"));
                    } else {
                        related_pairs.insert((subject.to_string(), target.to_string()));
                    }
                } else {
                    warnings.warn(format!("related of <{subject}> must be an IRI; skipped"));
                }
            }
            vocab::TOP_CONCEPT_OF => {
                if triple.object.as_iri().is_some() {
                    concepts.get_mut(subject).unwrap().is_top = true;
                } else {
                    warnings.warn(format!(
                        "topConceptOf of <{subject}> must be a scheme IRI; skipped"
                    ));
                }
            }
            other => warnings.warn(format!("unknown predicate <{other}>; skipped")),
        }
    }

    for (a, b) in related_pairs {
        concepts.get_mut(&a).unwrap().related.insert(b.clone());
        concepts.get_mut(&b).unwrap().related.insert(a);
    }

    for (iri, concept) in &concepts {
        if concept.pref_label.is_empty() {
            return Err(Error::integrity(iri, "concept has no prefLabel"));
        }
    }

    let mut label_index: BTreeMap<String, BTreeSet<Iri>> = BTreeMap::new();
    for (iri, concept) in &concepts {
        for label in std::iter::once(&concept.pref_label).chain(&concept.alt_labels) {
            let key = normalize_label(label);
            if key.is_empty() {
                warnings.warn(format!(
                    "label {label:?} of <{iri}> normalizes to an empty key; not indexed"
                ));
                continue;
            }
            label_index.entry(key).or_default().insert(iri.clone());
        }
    }

    let mut narrower: BTreeMap<Iri, BTreeSet<Iri>> = BTreeMap::new();
    for (iri, concept) in &concepts {
        for b in &concept.broader {
            narrower.entry(b.clone()).or_default().insert(iri.clone());
        }
    }

    let index = KosIndex {
        concepts,
        label_index,
        narrower,
        warnings,
    };
    Ok(warn_unreachable_tops(index))
}

/// One reverse sweep from every top concept down the narrower edges; a
/// concept the sweep never reaches sits in a broader cycle with no top.
fn warn_unreachable_tops(mut index: KosIndex) -> KosIndex {
    let mut reached: BTreeSet<Iri> = index
        .concepts
        .values()
        .filter(|c| c.is_effective_top())
        .map(|c| c.iri.clone())
        .collect();
    let mut stack: Vec<Iri> = reached.iter().cloned().collect();
    while let Some(current) = stack.pop() {
        if let Some(children) = index.narrower.get(&current) {
            for child in children {
                if reached.insert(child.clone()) {
                    stack.push(child.clone());
                }
            }
        }
    }
    for iri in index.concepts.keys() {
        if !reached.contains(iri) {
            index
                .warnings
                .warn(format!("no top concept reachable from <{iri}>"));
        }
    }
    index
}
