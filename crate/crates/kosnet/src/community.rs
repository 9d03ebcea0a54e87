//! Community detection over collaboration graphs: connected components,
//! deterministic weighted label propagation, and topic-focused communities.

use std::collections::{BTreeMap, BTreeSet};

use crate::enrich::ConceptProfile;
use crate::error::Result;
use crate::graph::WeightedGraph;
use crate::kos::KosIndex;
use crate::Iri;

pub const DEFAULT_MAX_ITERS: usize = 100;

/// Assignment of every graph node to a community label.
///
/// Labels are canonical: each community is labeled by its smallest member
/// id, so the label is always a member of its own community.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Partition {
    pub assignment: BTreeMap<String, String>,
    /// False only when label propagation hit its iteration cap while labels
    /// were still moving.
    pub converged: bool,
}

impl Partition {
    /// Communities keyed by label, each a sorted member set.
    pub fn communities(&self) -> BTreeMap<String, BTreeSet<String>> {
        let mut out: BTreeMap<String, BTreeSet<String>> = BTreeMap::new();
        for (node, label) in &self.assignment {
            out.entry(label.clone()).or_default().insert(node.clone());
        }
        out
    }

    pub fn community_count(&self) -> usize {
        self.assignment.values().collect::<BTreeSet<_>>().len()
    }

    pub fn is_empty(&self) -> bool {
        self.assignment.is_empty()
    }

    fn canonicalize(assignment: BTreeMap<String, String>, converged: bool) -> Partition {
        let mut smallest: BTreeMap<&str, &str> = BTreeMap::new();
        for (node, label) in &assignment {
            smallest
                .entry(label.as_str())
                .and_modify(|m| {
                    if node.as_str() < *m {
                        *m = node.as_str();
                    }
                })
                .or_insert(node.as_str());
        }
        let canonical: BTreeMap<String, String> = assignment
            .iter()
            .map(|(node, label)| (node.clone(), smallest[label.as_str()].to_string()))
            .collect();
        Partition {
            assignment: canonical,
            converged,
        }
    }
}

/// Standard undirected connected components; each component is labeled by
/// its smallest node id.
pub fn connected_components(graph: &WeightedGraph) -> Partition {
    let mut assignment: BTreeMap<String, String> = BTreeMap::new();
    for start in graph.nodes() {
        if assignment.contains_key(start) {
            continue;
        }
        // Nodes are visited in ascending order, so the first unvisited node
        // of a component is its smallest member.
        let mut stack = vec![start.to_string()];
        assignment.insert(start.to_string(), start.to_string());
        while let Some(current) = stack.pop() {
            for (next, _) in graph.neighbors(&current) {
                if !assignment.contains_key(next) {
                    assignment.insert(next.to_string(), start.to_string());
                    stack.push(next.to_string());
                }
            }
        }
    }
    Partition {
        assignment,
        converged: true,
    }
}

/// Deterministic weighted label propagation.
///
/// Every node starts with its own id as label. Nodes update asynchronously
/// in ascending id order: each adopts the label carrying the maximal summed
/// incident edge weight, ties broken by the smallest label. The sweep
/// repeats until a full pass changes nothing or `max_iters` passes ran.
pub fn label_propagation(graph: &WeightedGraph, max_iters: usize) -> Partition {
    let max_iters = max_iters.max(1);
    let nodes: Vec<String> = graph.nodes().map(String::from).collect();
    let mut labels: BTreeMap<String, String> =
        nodes.iter().map(|n| (n.clone(), n.clone())).collect();

    let mut converged = false;
    for _ in 0..max_iters {
        let mut changed = false;
        for node in &nodes {
            let mut tally: BTreeMap<&str, u64> = BTreeMap::new();
            for (neighbor, weight) in graph.neighbors(node) {
                *tally.entry(labels[neighbor].as_str()).or_insert(0) += weight;
            }
            // Ascending label iteration makes "first strictly greater wins"
            // equivalent to max-weight with smallest-label tie-breaking.
            let mut best: Option<(&str, u64)> = None;
            for (label, weight) in tally {
                match best {
                    Some((_, best_weight)) if weight <= best_weight => {}
                    _ => best = Some((label, weight)),
                }
            }
            if let Some((label, _)) = best {
                if labels[node] != label {
                    let label = label.to_string();
                    labels.insert(node.clone(), label);
                    changed = true;
                }
            }
        }
        if !changed {
            converged = true;
            break;
        }
    }
    Partition::canonicalize(labels, converged)
}

/// Community structure of the authors interested in a topic.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TopicCommunity {
    /// Authors whose profile touches any concept in the topic's narrower
    /// closure with positive weight.
    pub members: BTreeSet<Iri>,
    /// Connected components of the collaboration subgraph induced on the
    /// members; isolated members are singletons.
    pub partition: Partition,
}

pub fn topic_community(
    kos: &KosIndex,
    profiles: &BTreeMap<Iri, ConceptProfile>,
    graph: &WeightedGraph,
    topic: &str,
) -> Result<TopicCommunity> {
    let expanded = kos.narrower_closure(topic)?;
    let mut members: BTreeSet<Iri> = BTreeSet::new();
    for (author, profile) in profiles {
        if expanded.iter().any(|c| profile.weight(c) > 0.0) {
            members.insert(author.clone());
        }
    }
    let induced = graph.induced_subgraph(&members);
    let partition = connected_components(&induced);
    Ok(TopicCommunity { members, partition })
}
