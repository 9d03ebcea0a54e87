//! `kosnet` command line: validate snapshots, run the full pipeline, and
//! export graphs, communities, recommendations, and query results.
//!
//! Exit codes: 0 success, 1 usage/configuration error, 2 snapshot parse
//! error, 3 integrity or unknown-entity error.

mod config;

use std::collections::BTreeSet;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use kosnet::export::{
    area_result_to_json, author_rows_to_json, keyword_tops_to_json, partition_to_json, render,
    topic_community_to_json,
};
use kosnet::pipeline::{load_inputs, DEFAULT_MIN_SCORE, DEFAULT_TOP_K};
use kosnet::{
    aggregate_graph, authors_and_keywords_of, coauthorship_graph, connected_components,
    export_graph, label_propagation, papers_by_area, recommend_pairs, run_pipeline,
    tops_of_keywords, AggregationLevel, EnrichConfig, Error, ExportFormat, PipelineConfig,
    DEFAULT_MAX_ITERS,
};

const OUTPUT_DIR_ENV: &str = "KOSNET_OUTPUT_DIR";

#[derive(Parser)]
#[command(
    name = "kosnet",
    version,
    about = "Discover potential collaboration networks from scholarly triple snapshots"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug, Clone)]
struct InputOpts {
    /// Scholarly data snapshot (papers, authors, orgs)
    #[arg(long, value_name = "FILE")]
    data: Option<PathBuf>,

    /// Concept scheme snapshot
    #[arg(long, value_name = "FILE")]
    kos: Option<PathBuf>,

    /// Flat `key = value` config file; flags override its values
    #[arg(long, value_name = "FILE")]
    config: Option<PathBuf>,
}

#[derive(Args, Debug, Clone)]
struct EnrichOpts {
    /// Weight of the directly resolved concept
    #[arg(long, value_name = "W")]
    w_direct: Option<f64>,

    /// Weight of one-step related concepts
    #[arg(long, value_name = "W")]
    w_related: Option<f64>,

    /// Weight of broader ancestors
    #[arg(long, value_name = "W")]
    w_broader: Option<f64>,

    /// Disable related/broader expansion (lexical-only profiles)
    #[arg(long)]
    no_enrich: bool,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum GraphLevel {
    Author,
    Org,
    Country,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum OutputFormat {
    Dot,
    Json,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Algorithm {
    Components,
    Labelprop,
}

#[derive(Subcommand)]
enum Command {
    /// Parse and validate both snapshots, printing a summary
    Validate {
        #[command(flatten)]
        input: InputOpts,
    },

    /// Run the full pipeline and write report.json plus DOT exports
    Pipeline {
        #[command(flatten)]
        input: InputOpts,

        #[command(flatten)]
        enrich: EnrichOpts,

        /// Output directory (fallback: config file, then $KOSNET_OUTPUT_DIR, then ./out)
        #[arg(long, value_name = "DIR")]
        out: Option<PathBuf>,

        /// Keep at most this many recommendations
        #[arg(long, value_name = "K")]
        top: Option<usize>,

        /// Drop recommendations scoring below this
        #[arg(long, value_name = "S")]
        min_score: Option<f64>,
    },

    /// Export a collaboration graph
    Graph {
        #[command(flatten)]
        input: InputOpts,

        #[arg(long, value_enum)]
        level: GraphLevel,

        #[arg(long, value_enum, default_value = "dot")]
        format: OutputFormat,
    },

    /// Detect communities in the author graph
    Communities {
        #[command(flatten)]
        input: InputOpts,

        #[command(flatten)]
        enrich: EnrichOpts,

        #[arg(long, value_enum, default_value = "labelprop")]
        algorithm: Algorithm,

        /// Restrict to authors interested in this concept (components over
        /// the induced subgraph)
        #[arg(long, value_name = "IRI")]
        topic: Option<String>,
    },

    /// Rank non-co-author pairs by enriched-profile similarity
    Recommend {
        #[command(flatten)]
        input: InputOpts,

        #[command(flatten)]
        enrich: EnrichOpts,

        /// Keep at most this many recommendations
        #[arg(long, value_name = "K")]
        top: Option<usize>,

        /// Drop recommendations scoring below this
        #[arg(long, value_name = "S")]
        min_score: Option<f64>,
    },

    /// Run one of the data-gathering queries
    Query {
        #[command(subcommand)]
        which: QueryCommand,
    },
}

#[derive(Subcommand)]
enum QueryCommand {
    /// Papers whose keywords fall inside a knowledge area
    Area {
        #[command(flatten)]
        input: InputOpts,

        /// Area concept IRI
        concept: String,
    },

    /// Authors and keywords of a paper set (explicit or from an area query)
    Authors {
        #[command(flatten)]
        input: InputOpts,

        /// Take the papers of this area concept
        #[arg(long, value_name = "IRI", conflicts_with = "papers")]
        area: Option<String>,

        /// Explicit paper IRIs
        #[arg(long, value_name = "IRI", num_args = 1..)]
        papers: Vec<String>,
    },

    /// Top concepts associated with keywords
    Tops {
        #[command(flatten)]
        input: InputOpts,

        /// Keywords to resolve
        #[arg(required = true)]
        keywords: Vec<String>,
    },
}

/// Option sources merged in precedence order: flag, config file, default.
struct Settings {
    data: PathBuf,
    kos: Option<PathBuf>,
    enrich: EnrichConfig,
    top_k: usize,
    min_score: f64,
    output_dir: PathBuf,
}

fn resolve_settings(input: &InputOpts, enrich: Option<&EnrichOpts>) -> Result<Settings, Error> {
    let file = match &input.config {
        Some(path) => config::load(path)?,
        None => config::FileConfig::default(),
    };

    let data = input.data.clone().or(file.data).ok_or_else(|| {
        Error::Config("no data snapshot given; usage: --data <FILE> (or config key `data`)".into())
    })?;
    let kos = input.kos.clone().or(file.kos);

    let defaults = EnrichConfig::default();
    let mut cfg = EnrichConfig {
        w_direct: file.w_direct.unwrap_or(defaults.w_direct),
        w_related: file.w_related.unwrap_or(defaults.w_related),
        w_broader: file.w_broader.unwrap_or(defaults.w_broader),
        enrichment_enabled: file.enrichment_enabled.unwrap_or(defaults.enrichment_enabled),
    };
    if let Some(opts) = enrich {
        if let Some(w) = opts.w_direct {
            cfg.w_direct = w;
        }
        if let Some(w) = opts.w_related {
            cfg.w_related = w;
        }
        if let Some(w) = opts.w_broader {
            cfg.w_broader = w;
        }
        if opts.no_enrich {
            cfg.enrichment_enabled = false;
        }
    }
    cfg.validate()?;

    let output_dir = file
        .output_dir
        .or_else(|| std::env::var_os(OUTPUT_DIR_ENV).map(PathBuf::from))
        .unwrap_or_else(|| PathBuf::from("out"));

    Ok(Settings {
        data,
        kos,
        enrich: cfg,
        top_k: file.top_k.unwrap_or(DEFAULT_TOP_K),
        min_score: file.min_score.unwrap_or(DEFAULT_MIN_SCORE),
        output_dir,
    })
}

fn require_kos(settings: &Settings) -> Result<PathBuf, Error> {
    settings.kos.clone().ok_or_else(|| {
        Error::Config("no concept scheme given; usage: --kos <FILE> (or config key `kos`)".into())
    })
}

fn run(cli: Cli) -> Result<(), Error> {
    match cli.command {
        Command::Validate { input } => {
            let settings = resolve_settings(&input, None)?;
            let kos_path = require_kos(&settings)?;
            let (catalog, kos) = load_inputs(&settings.data, &kos_path)?;
            let mut warnings = catalog.warnings.clone();
            warnings.merge(&kos.warnings);
            println!("papers: {}", catalog.papers.len());
            println!("authors: {}", catalog.authors.len());
            println!("orgs: {}", catalog.orgs.len());
            println!("concepts: {}", kos.len());
            println!("warnings: {}", warnings.total());
            for (message, count) in warnings.iter() {
                println!("  [{count}x] {message}");
            }
            println!("ok");
            Ok(())
        }

        Command::Pipeline {
            input,
            enrich,
            out,
            top,
            min_score,
        } => {
            let settings = resolve_settings(&input, Some(&enrich))?;
            let kos_path = require_kos(&settings)?;
            let cfg = PipelineConfig {
                data_path: settings.data.clone(),
                kos_path,
                enrich: settings.enrich.clone(),
                top_k: top.unwrap_or(settings.top_k),
                min_score: min_score.unwrap_or(settings.min_score),
                output_dir: out.unwrap_or_else(|| settings.output_dir.clone()),
            };
            let summary = run_pipeline(&cfg)?;
            for path in &summary.written {
                println!("wrote {}", path.display());
            }
            println!(
                "papers: {}  authors: {}  orgs: {}  concepts: {}",
                summary.papers, summary.authors, summary.orgs, summary.concepts
            );
            println!(
                "communities: {}  recommendations: {}  warnings: {}",
                summary.communities, summary.recommendations, summary.warning_total
            );
            Ok(())
        }

        Command::Graph {
            input,
            level,
            format,
        } => {
            let settings = resolve_settings(&input, None)?;
            let text = std::fs::read_to_string(&settings.data).map_err(|source| Error::Io {
                path: settings.data.display().to_string(),
                source,
            })?;
            let triples = kosnet::parse_triples(&text)
                .map_err(|e| Error::in_file(settings.data.display().to_string(), e))?;
            let catalog = kosnet::build_catalog(&triples)
                .map_err(|e| Error::in_file(settings.data.display().to_string(), e))?;
            let graph = match level {
                GraphLevel::Author => coauthorship_graph(&catalog),
                GraphLevel::Org => aggregate_graph(&catalog, AggregationLevel::Institution).0,
                GraphLevel::Country => aggregate_graph(&catalog, AggregationLevel::Country).0,
            };
            let format = match format {
                OutputFormat::Dot => ExportFormat::Dot,
                OutputFormat::Json => ExportFormat::Json,
            };
            print!("{}", export_graph(&graph, format));
            Ok(())
        }

        Command::Communities {
            input,
            enrich,
            algorithm,
            topic,
        } => {
            let settings = resolve_settings(&input, Some(&enrich))?;
            let kos_path = require_kos(&settings)?;
            let (catalog, kos) = load_inputs(&settings.data, &kos_path)?;
            let graph = coauthorship_graph(&catalog);
            let value = match topic {
                Some(topic) => {
                    let profiles = kosnet::all_profiles(&catalog, &kos, &settings.enrich)?;
                    let tc = kosnet::topic_community(&kos, &profiles, &graph, &topic)?;
                    topic_community_to_json(&topic, &tc)
                }
                None => {
                    let partition = match algorithm {
                        Algorithm::Components => connected_components(&graph),
                        Algorithm::Labelprop => label_propagation(&graph, DEFAULT_MAX_ITERS),
                    };
                    partition_to_json(&partition)
                }
            };
            print!("{}", render(&value));
            Ok(())
        }

        Command::Recommend {
            input,
            enrich,
            top,
            min_score,
        } => {
            let settings = resolve_settings(&input, Some(&enrich))?;
            let kos_path = require_kos(&settings)?;
            let (catalog, kos) = load_inputs(&settings.data, &kos_path)?;
            let min_score = min_score.unwrap_or(settings.min_score);
            if !(0.0..=1.0).contains(&min_score) {
                return Err(Error::Config(format!(
                    "min_score must be within [0, 1] (got {min_score})"
                )));
            }
            let profiles = kosnet::all_profiles(&catalog, &kos, &settings.enrich)?;
            let graph = coauthorship_graph(&catalog);
            let recs = recommend_pairs(
                &catalog,
                &graph,
                &profiles,
                top.unwrap_or(settings.top_k),
                min_score,
            );
            print!("{}", render(&kosnet::export::recommendations_to_json(&recs)));
            Ok(())
        }

        Command::Query { which } => match which {
            QueryCommand::Area { input, concept } => {
                let settings = resolve_settings(&input, None)?;
                let kos_path = require_kos(&settings)?;
                let (catalog, kos) = load_inputs(&settings.data, &kos_path)?;
                let result = papers_by_area(&catalog, &kos, &concept)?;
                print!("{}", render(&area_result_to_json(&result)));
                Ok(())
            }
            QueryCommand::Authors {
                input,
                area,
                papers,
            } => {
                let settings = resolve_settings(&input, None)?;
                let kos_path = require_kos(&settings)?;
                let (catalog, kos) = load_inputs(&settings.data, &kos_path)?;
                let paper_set: BTreeSet<String> = match area {
                    Some(area) => papers_by_area(&catalog, &kos, &area)?.papers,
                    None => {
                        if papers.is_empty() {
                            return Err(Error::Config(
                                "query authors needs --area or --papers".into(),
                            ));
                        }
                        papers.into_iter().collect()
                    }
                };
                let rows = authors_and_keywords_of(&catalog, &paper_set)?;
                print!("{}", render(&author_rows_to_json(&rows)));
                Ok(())
            }
            QueryCommand::Tops { input, keywords } => {
                let settings = resolve_settings(&input, None)?;
                let kos_path = require_kos(&settings)?;
                let (_, kos) = load_inputs(&settings.data, &kos_path)?;
                let rows = tops_of_keywords(&kos, &keywords)?;
                print!("{}", render(&keyword_tops_to_json(&rows)));
                Ok(())
            }
        },
    }
}

fn exit_code(err: &Error) -> u8 {
    match err.root() {
        Error::Parse { .. } => 2,
        Error::Integrity { .. }
        | Error::UnknownConcept(_)
        | Error::UnknownAuthor(_)
        | Error::UnknownPaper(_)
        | Error::EmptyKey(_) => 3,
        Error::Config(_) | Error::Io { .. } => 1,
        Error::InFile { .. } => unreachable!("root() unwraps file context"),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(err) => {
            use clap::error::ErrorKind;
            if matches!(err.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                print!("{err}");
                return ExitCode::SUCCESS;
            }
            eprint!("{err}");
            return ExitCode::from(1);
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::from(exit_code(&err))
        }
    }
}
