//! Byte-deterministic exports: DOT and JSON graph renderings plus the JSON
//! views used by reports and the CLI.
//!
//! Every object key is emitted in lexicographic order (serde_json's default
//! `BTreeMap`-backed map) and every fractional number is rendered with
//! exactly six decimals, so repeated runs over the same inputs produce
//! byte-identical artifacts.

use std::collections::BTreeSet;

use serde_json::{json, Map, Number, Value};

use crate::community::{Partition, TopicCommunity};
use crate::error::Result;
use crate::graph::WeightedGraph;
use crate::kos::KosIndex;
use crate::query::{authors_and_keywords_of, papers_by_area, tops_of_keywords};
use crate::recommend::Recommendation;
use crate::warnings::WarningLog;
use crate::Catalog;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ExportFormat {
    Dot,
    Json,
}

impl ExportFormat {
    pub fn parse(s: &str) -> Option<ExportFormat> {
        match s {
            "dot" => Some(ExportFormat::Dot),
            "json" => Some(ExportFormat::Json),
            _ => None,
        }
    }
}

/// Renders a graph in the requested format; output is byte-deterministic.
pub fn export_graph(graph: &WeightedGraph, format: ExportFormat) -> String {
    match format {
        ExportFormat::Dot => graph_to_dot(graph),
        ExportFormat::Json => render(&graph_to_json(graph)),
    }
}

fn dot_escape(id: &str) -> String {
    id.replace('\\', "\\\\").replace('"', "\\\"")
}

fn graph_to_dot(graph: &WeightedGraph) -> String {
    let mut out = String::from("graph G {\n");
    for node in graph.nodes() {
        out.push_str(&format!("  \"{}\";\n", dot_escape(node)));
    }
    for (a, b, w) in graph.edges() {
        out.push_str(&format!(
            "  \"{}\" -- \"{}\" [weight={w}];\n",
            dot_escape(a),
            dot_escape(b)
        ));
    }
    out.push_str("}\n");
    out
}

fn graph_to_json(graph: &WeightedGraph) -> Value {
    let nodes: Vec<Value> = graph.nodes().map(|n| Value::String(n.to_string())).collect();
    let edges: Vec<Value> = graph
        .edges()
        .map(|(a, b, w)| json!({ "a": a, "b": b, "w": w }))
        .collect();
    json!({ "edges": edges, "nodes": nodes })
}

/// A fractional number pinned to exactly six decimals.
///
/// Built through serde_json's arbitrary-precision representation so the
/// rendered digits are exactly the formatted ones.
pub fn fixed6(value: f64) -> Value {
    let text = format!("{value:.6}");
    Value::Number(text.parse::<Number>().expect("fixed-point literal"))
}

pub fn partition_to_json(partition: &Partition) -> Value {
    let communities: Vec<Value> = partition
        .communities()
        .into_iter()
        .map(|(label, members)| {
            json!({
                "label": label,
                "members": members.into_iter().collect::<Vec<_>>(),
            })
        })
        .collect();
    let count = communities.len();
    json!({
        "communities": communities,
        "converged": partition.converged,
        "count": count,
    })
}

pub fn topic_community_to_json(topic: &str, tc: &TopicCommunity) -> Value {
    let mut obj = partition_to_json(&tc.partition);
    let map = obj.as_object_mut().unwrap();
    map.insert(
        "members".to_string(),
        Value::Array(tc.members.iter().map(|m| Value::String(m.clone())).collect()),
    );
    map.insert("topic".to_string(), Value::String(topic.to_string()));
    obj
}

pub fn recommendations_to_json(recs: &[Recommendation]) -> Value {
    let items: Vec<Value> = recs
        .iter()
        .map(|rec| {
            let shared: Vec<Value> = rec
                .shared_concepts
                .iter()
                .map(|(concept, weight)| json!({ "concept": concept, "weight": fixed6(*weight) }))
                .collect();
            json!({
                "author_a": rec.author_a,
                "author_b": rec.author_b,
                "score": fixed6(rec.score),
                "shared_concepts": shared,
            })
        })
        .collect();
    Value::Array(items)
}

pub fn warnings_to_json(warnings: &WarningLog) -> Value {
    let entries: Vec<Value> = warnings
        .iter()
        .map(|(message, count)| json!({ "count": count, "message": message }))
        .collect();
    json!({ "entries": entries, "total": warnings.total() })
}

pub fn area_result_to_json(result: &crate::query::AreaQueryResult) -> Value {
    json!({
        "area": result.concept,
        "expanded": result.expanded.iter().collect::<Vec<_>>(),
        "papers": result.papers.iter().collect::<Vec<_>>(),
    })
}

pub fn author_rows_to_json(rows: &[(String, Vec<String>)]) -> Value {
    Value::Array(
        rows.iter()
            .map(|(author, keywords)| json!({ "author": author, "keywords": keywords }))
            .collect(),
    )
}

pub fn keyword_tops_to_json(rows: &[(String, BTreeSet<String>)]) -> Value {
    Value::Array(
        rows.iter()
            .map(|(keyword, tops)| {
                json!({ "keyword": keyword, "tops": tops.iter().collect::<Vec<_>>() })
            })
            .collect(),
    )
}

/// Composition of the three queries for one area: its papers, the authors
/// and keywords of those papers, and the top concepts of every distinct
/// keyword.
pub fn area_table_json(cat: &Catalog, kos: &KosIndex, area: &str) -> Result<Value> {
    let result = papers_by_area(cat, kos, area)?;
    let rows = authors_and_keywords_of(cat, &result.papers)?;
    let distinct: BTreeSet<String> = rows.iter().flat_map(|(_, kws)| kws.iter().cloned()).collect();
    let keywords: Vec<String> = distinct.into_iter().collect();
    let tops = tops_of_keywords(kos, &keywords)?;
    let mut obj = Map::new();
    obj.insert("area".to_string(), Value::String(result.concept.clone()));
    obj.insert(
        "authors".to_string(),
        author_rows_to_json(&rows),
    );
    obj.insert(
        "expanded".to_string(),
        Value::Array(result.expanded.iter().map(|i| Value::String(i.clone())).collect()),
    );
    obj.insert("keyword_tops".to_string(), keyword_tops_to_json(&tops));
    obj.insert(
        "papers".to_string(),
        Value::Array(result.papers.iter().map(|i| Value::String(i.clone())).collect()),
    );
    Ok(Value::Object(obj))
}

/// Pretty-prints a JSON value with a trailing newline.
pub fn render(value: &Value) -> String {
    let mut text = serde_json::to_string_pretty(value).expect("serializable value");
    text.push('\n');
    text
}
