//! Weighted undirected collaboration graphs at author, institution, and
//! country granularity.

use std::collections::{BTreeMap, BTreeSet};

use crate::catalog::Catalog;
use crate::warnings::WarningLog;

/// Undirected weighted graph over string node ids (IRIs or country codes).
///
/// Adjacency is stored symmetrically; self-loops are rejected. Iteration over
/// nodes and edges is sorted, and edges surface once under `a < b`.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct WeightedGraph {
    adj: BTreeMap<String, BTreeMap<String, u64>>,
}

impl WeightedGraph {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn add_node(&mut self, id: impl Into<String>) {
        self.adj.entry(id.into()).or_default();
    }

    /// Adds `w` to the edge weight between `a` and `b`, creating both nodes
    /// as needed. Panics on self-loops; callers never produce them.
    pub fn add_edge(&mut self, a: &str, b: &str, w: u64) {
        assert_ne!(a, b, "self-loops are not allowed");
        if w == 0 {
            return;
        }
        *self
            .adj
            .entry(a.to_string())
            .or_default()
            .entry(b.to_string())
            .or_insert(0) += w;
        *self
            .adj
            .entry(b.to_string())
            .or_default()
            .entry(a.to_string())
            .or_insert(0) += w;
    }

    pub fn node_count(&self) -> usize {
        self.adj.len()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.values().map(BTreeMap::len).sum::<usize>() / 2
    }

    pub fn contains_node(&self, id: &str) -> bool {
        self.adj.contains_key(id)
    }

    /// Edge weight between two nodes; 0 when absent (either direction).
    pub fn weight(&self, a: &str, b: &str) -> u64 {
        self.adj
            .get(a)
            .and_then(|n| n.get(b))
            .copied()
            .unwrap_or(0)
    }

    pub fn has_edge(&self, a: &str, b: &str) -> bool {
        self.weight(a, b) > 0
    }

    pub fn nodes(&self) -> impl Iterator<Item = &str> {
        self.adj.keys().map(String::as_str)
    }

    pub fn neighbors(&self, id: &str) -> impl Iterator<Item = (&str, u64)> {
        self.adj
            .get(id)
            .into_iter()
            .flat_map(|n| n.iter().map(|(k, w)| (k.as_str(), *w)))
    }

    /// Edges in canonical order: sorted pairs with `a < b`.
    pub fn edges(&self) -> impl Iterator<Item = (&str, &str, u64)> {
        self.adj.iter().flat_map(|(a, neighbors)| {
            neighbors
                .iter()
                .filter(move |(b, _)| a.as_str() < b.as_str())
                .map(move |(b, w)| (a.as_str(), b.as_str(), *w))
        })
    }

    /// Subgraph induced on `keep`: those nodes and every edge between them.
    pub fn induced_subgraph(&self, keep: &BTreeSet<String>) -> WeightedGraph {
        let mut sub = WeightedGraph::new();
        for node in keep {
            sub.add_node(node.clone());
        }
        for (a, b, w) in self.edges() {
            if keep.contains(a) && keep.contains(b) {
                sub.add_edge(a, b, w);
            }
        }
        sub
    }
}

/// Author-level co-authorship graph: every author is a node and each paper
/// adds one to the weight of every unordered pair of its authors.
pub fn coauthorship_graph(cat: &Catalog) -> WeightedGraph {
    let mut graph = WeightedGraph::new();
    for author in cat.authors.keys() {
        graph.add_node(author.clone());
    }
    for paper in cat.papers.values() {
        let authors: Vec<&String> = paper.author_iris.iter().collect();
        for i in 0..authors.len() {
            for j in (i + 1)..authors.len() {
                graph.add_edge(authors[i], authors[j], 1);
            }
        }
    }
    graph
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum AggregationLevel {
    Institution,
    Country,
}

/// Collaboration graph aggregated to institutions or countries.
///
/// The weight between two distinct groups is the number of distinct papers
/// with at least one author in each. Authors without an affiliation (or
/// whose org lacks a country, at country level) are skipped with a warning.
pub fn aggregate_graph(cat: &Catalog, level: AggregationLevel) -> (WeightedGraph, WarningLog) {
    let mut warnings = WarningLog::new();
    let mut skipped_authors: BTreeSet<&str> = BTreeSet::new();
    let mut skipped_orgs: BTreeSet<&str> = BTreeSet::new();
    let mut graph = WeightedGraph::new();

    for paper in cat.papers.values() {
        let mut groups: BTreeSet<String> = BTreeSet::new();
        for author in &paper.author_iris {
            let org_iri = match &cat.authors[author].org_iri {
                Some(org) => org,
                None => {
                    skipped_authors.insert(author);
                    continue;
                }
            };
            match level {
                AggregationLevel::Institution => {
                    groups.insert(org_iri.clone());
                }
                AggregationLevel::Country => match &cat.orgs[org_iri].country {
                    Some(code) => {
                        groups.insert(code.clone());
                    }
                    None => {
                        skipped_orgs.insert(org_iri);
                    }
                },
            }
        }
        let groups: Vec<&String> = groups.iter().collect();
        for g in &groups {
            graph.add_node((*g).clone());
        }
        for i in 0..groups.len() {
            for j in (i + 1)..groups.len() {
                graph.add_edge(groups[i], groups[j], 1);
            }
        }
    }

    for author in skipped_authors {
        warnings.warn(format!("author <{author}> has no affiliation; skipped"));
    }
    for org in skipped_orgs {
        warnings.warn(format!("org <{org}> has no country; skipped"));
    }
    (graph, warnings)
}
