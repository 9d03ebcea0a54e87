//! End-to-end run: ingest both snapshots, enrich, build graphs, detect
//! communities, recommend pairs, and write deterministic artifacts.

use std::fs;
use std::path::{Path, PathBuf};

use serde_json::{json, Value};

use crate::catalog::{build_catalog, Catalog};
use crate::community::{label_propagation, Partition, DEFAULT_MAX_ITERS};
use crate::enrich::{all_profiles, EnrichConfig};
use crate::error::{Error, Result};
use crate::export::{
    export_graph, fixed6, partition_to_json, recommendations_to_json, render, warnings_to_json,
    ExportFormat,
};
use crate::graph::{aggregate_graph, coauthorship_graph, AggregationLevel};
use crate::kos::{build_kos, KosIndex};
use crate::recommend::recommend_pairs;
use crate::triple::parse_triples;
use crate::warnings::WarningLog;

pub const DEFAULT_TOP_K: usize = 20;
pub const DEFAULT_MIN_SCORE: f64 = 0.05;

#[derive(Debug, Clone)]
pub struct PipelineConfig {
    pub data_path: PathBuf,
    pub kos_path: PathBuf,
    pub enrich: EnrichConfig,
    pub top_k: usize,
    pub min_score: f64,
    pub output_dir: PathBuf,
}

impl PipelineConfig {
    pub fn new(data_path: impl Into<PathBuf>, kos_path: impl Into<PathBuf>, output_dir: impl Into<PathBuf>) -> Self {
        Self {
            data_path: data_path.into(),
            kos_path: kos_path.into(),
            enrich: EnrichConfig::default(),
            top_k: DEFAULT_TOP_K,
            min_score: DEFAULT_MIN_SCORE,
            output_dir: output_dir.into(),
        }
    }

    pub fn validate(&self) -> Result<()> {
        self.enrich.validate()?;
        if !(0.0..=1.0).contains(&self.min_score) {
            return Err(Error::Config(format!(
                "min_score must be within [0, 1] (got {})",
                self.min_score
            )));
        }
        Ok(())
    }
}

/// What a pipeline run produced.
#[derive(Debug, Clone)]
pub struct PipelineSummary {
    pub papers: usize,
    pub authors: usize,
    pub orgs: usize,
    pub concepts: usize,
    pub communities: usize,
    pub recommendations: usize,
    pub warning_total: u64,
    pub written: Vec<PathBuf>,
}

pub fn read_to_string(path: &Path) -> Result<String> {
    fs::read_to_string(path).map_err(|source| Error::Io {
        path: path.display().to_string(),
        source,
    })
}

/// Parses a snapshot file, tagging errors with the file path.
pub fn load_triples(path: &Path) -> Result<crate::triple::TripleSet> {
    let text = read_to_string(path)?;
    parse_triples(&text).map_err(|e| Error::in_file(path.display().to_string(), e))
}

/// Loads and validates both inputs.
pub fn load_inputs(data_path: &Path, kos_path: &Path) -> Result<(Catalog, KosIndex)> {
    let data = load_triples(data_path)?;
    let catalog = build_catalog(&data)
        .map_err(|e| Error::in_file(data_path.display().to_string(), e))?;
    let kos_triples = load_triples(kos_path)?;
    let kos = build_kos(&kos_triples)
        .map_err(|e| Error::in_file(kos_path.display().to_string(), e))?;
    Ok((catalog, kos))
}

fn write_artifact(dir: &Path, name: &str, contents: &str) -> Result<PathBuf> {
    let path = dir.join(name);
    fs::write(&path, contents).map_err(|source| Error::Io {
        path: path.display().to_string(),
        source,
    })?;
    Ok(path)
}

/// Runs the whole pipeline and writes `report.json`, `authors.dot`,
/// `orgs.dot`, and `countries.dot` into the output directory.
///
/// All artifacts are byte-identical across repeated runs on the same inputs
/// and across permutations of the input triple order.
pub fn run_pipeline(cfg: &PipelineConfig) -> Result<PipelineSummary> {
    cfg.validate()?;
    let (catalog, kos) = load_inputs(&cfg.data_path, &cfg.kos_path)?;

    let profiles = all_profiles(&catalog, &kos, &cfg.enrich)?;
    let author_graph = coauthorship_graph(&catalog);
    let partition = label_propagation(&author_graph, DEFAULT_MAX_ITERS);
    let (org_graph, org_warnings) = aggregate_graph(&catalog, AggregationLevel::Institution);
    let (country_graph, country_warnings) = aggregate_graph(&catalog, AggregationLevel::Country);
    let recommendations =
        recommend_pairs(&catalog, &author_graph, &profiles, cfg.top_k, cfg.min_score);

    let mut warnings = WarningLog::new();
    warnings.merge(&catalog.warnings);
    warnings.merge(&kos.warnings);
    warnings.merge(&org_warnings);
    warnings.merge(&country_warnings);

    let report = build_report(&catalog, &kos, cfg, &partition, &recommendations, &warnings);

    fs::create_dir_all(&cfg.output_dir).map_err(|source| Error::Io {
        path: cfg.output_dir.display().to_string(),
        source,
    })?;
    let written = vec![
        write_artifact(&cfg.output_dir, "report.json", &render(&report))?,
        write_artifact(
            &cfg.output_dir,
            "authors.dot",
            &export_graph(&author_graph, ExportFormat::Dot),
        )?,
        write_artifact(
            &cfg.output_dir,
            "orgs.dot",
            &export_graph(&org_graph, ExportFormat::Dot),
        )?,
        write_artifact(
            &cfg.output_dir,
            "countries.dot",
            &export_graph(&country_graph, ExportFormat::Dot),
        )?,
    ];

    Ok(PipelineSummary {
        papers: catalog.papers.len(),
        authors: catalog.authors.len(),
        orgs: catalog.orgs.len(),
        concepts: kos.len(),
        communities: partition.community_count(),
        recommendations: recommendations.len(),
        warning_total: warnings.total(),
        written,
    })
}

fn build_report(
    catalog: &Catalog,
    kos: &KosIndex,
    cfg: &PipelineConfig,
    partition: &Partition,
    recommendations: &[crate::recommend::Recommendation],
    warnings: &WarningLog,
) -> Value {
    let distinct_keywords: std::collections::BTreeSet<&str> = catalog
        .papers
        .values()
        .flat_map(|p| p.keywords.iter().map(String::as_str))
        .collect();
    json!({
        "catalog": {
            "authors": catalog.authors.len(),
            "concepts": kos.len(),
            "distinct_keywords": distinct_keywords.len(),
            "orgs": catalog.orgs.len(),
            "papers": catalog.papers.len(),
        },
        "communities": partition_to_json(partition),
        "config": {
            "enrichment_enabled": cfg.enrich.enrichment_enabled,
            "min_score": fixed6(cfg.min_score),
            "top_k": cfg.top_k,
            "w_broader": fixed6(cfg.enrich.w_broader),
            "w_direct": fixed6(cfg.enrich.w_direct),
            "w_related": fixed6(cfg.enrich.w_related),
        },
        "recommendations": recommendations_to_json(recommendations),
        "warnings": warnings_to_json(warnings),
    })
}
