//! The `sweep` subcommand: run the pipeline over a corpus at each threshold
//! in a range and tabulate mean ROUGE scores and mean frequent-itemset
//! counts (overall and for sizes one through four).

use std::collections::BTreeMap;
use std::path::{Path, PathBuf};

use serde_json::json;

use itemsum_core::annotation::{filter_semantic_types, ConceptAnnotation, Mode};
use itemsum_core::document::Document;
use itemsum_core::fraction::Fraction;
use itemsum_core::rouge::{evaluate_summary, RougeMetric};
use itemsum_core::summarizer::{fraction_string, summarize, SummaryConfig};
use itemsum_core::transactions::ItemSource;

use crate::config::ResolvedConfig;
use crate::error::AppError;
use crate::formats;
use crate::report;

pub const DEFAULT_SWEEP_RANGE: &str = "0.02:0.20:0.01";
pub const DEFAULT_SWEEP_METRICS: [RougeMetric; 2] = [RougeMetric::Rouge2, RougeMetric::RougeSu4];

pub struct SweepRow {
    pub threshold: Fraction,
    pub label: String,
    pub mean_recall: BTreeMap<RougeMetric, f64>,
    /// Summed itemset counts over the corpus: [all, 1-, 2-, 3-, 4-itemsets].
    pub total_counts: [u64; 5],
    pub mean_counts: [f64; 5],
}

pub struct SweepOutcome {
    pub doc_ids: Vec<String>,
    pub metrics: Vec<RougeMetric>,
    pub rows: Vec<SweepRow>,
    pub files: Vec<PathBuf>,
}

enum PreparedSource {
    Concepts(Vec<ConceptAnnotation>),
    Terms,
}

struct CorpusEntry {
    id: String,
    doc: Document,
    model: String,
    source: PreparedSource,
}

pub fn run(
    cfg: &ResolvedConfig,
    corpus: &Path,
    range_spec: Option<&str>,
) -> Result<SweepOutcome, AppError> {
    let thresholds = parse_sweep_spec(range_spec.unwrap_or(DEFAULT_SWEEP_RANGE))?;
    let metrics = cfg
        .metrics
        .clone()
        .unwrap_or_else(|| DEFAULT_SWEEP_METRICS.to_vec());
    let entries = load_corpus(cfg, corpus)?;
    if entries.is_empty() {
        return Err(AppError::data(format!(
            "{}: no <id>.doc.txt / .doc.json / .doc.lines documents found",
            corpus.display()
        )));
    }
    let stopwords = formats::load_stopwords(cfg.stopwords.as_deref())?;

    let mut rows = Vec::new();
    for (threshold, label) in &thresholds {
        let mut total_counts = [0u64; 5];
        let mut recall_sums: BTreeMap<RougeMetric, f64> =
            metrics.iter().map(|&m| (m, 0.0)).collect();
        for entry in &entries {
            let config = SummaryConfig::new(cfg.rate, cfg.mode, *threshold)
                .map_err(|e| AppError::usage(format!("document {}: {e}", entry.id)))?;
            let source = match &entry.source {
                PreparedSource::Concepts(annotations) => ItemSource::Concepts(annotations),
                PreparedSource::Terms => ItemSource::Terms(&stopwords),
            };
            let output = summarize(&entry.doc, source, &config)
                .map_err(|e| AppError::data(format!("document {}: {e}", entry.id)))?;

            total_counts[0] += output.frequent_itemsets.len() as u64;
            for fi in &output.frequent_itemsets {
                if (1..=4).contains(&fi.items.len()) {
                    total_counts[fi.items.len()] += 1;
                }
            }

            let scores = evaluate_summary(
                &output.result.rendered_text,
                std::slice::from_ref(&entry.model),
                &metrics,
            )
            .map_err(|e| AppError::data(format!("document {}: {e}", entry.id)))?;
            for (&metric, sum) in recall_sums.iter_mut() {
                *sum += scores[&metric].recall;
            }
        }
        let n_docs = entries.len() as f64;
        rows.push(SweepRow {
            threshold: *threshold,
            label: label.clone(),
            mean_recall: recall_sums
                .into_iter()
                .map(|(m, sum)| (m, sum / n_docs))
                .collect(),
            total_counts,
            mean_counts: total_counts.map(|c| c as f64 / n_docs),
        });
    }

    let outcome = SweepOutcome {
        doc_ids: entries.into_iter().map(|e| e.id).collect(),
        metrics,
        rows,
        files: Vec::new(),
    };
    write_outputs(cfg, corpus, range_spec, outcome)
}

fn write_outputs(
    cfg: &ResolvedConfig,
    corpus: &Path,
    range_spec: Option<&str>,
    mut outcome: SweepOutcome,
) -> Result<SweepOutcome, AppError> {
    let table = sweep_table(&outcome);
    let csv_path = cfg.out.join("sweep.csv");
    formats::write_file(&csv_path, &report::csv_table(&table))?;
    let txt_path = cfg.out.join("sweep.txt");
    formats::write_file(&txt_path, &report::aligned_table(&table))?;
    let echo = cfg.echo_json(&[
        ("command", json!("sweep")),
        ("corpus", json!(corpus.to_string_lossy())),
        (
            "sweep_range",
            json!(range_spec.unwrap_or(DEFAULT_SWEEP_RANGE)),
        ),
        (
            "documents",
            json!(outcome.doc_ids),
        ),
    ]);
    let config_path = cfg.out.join("sweep.config.json");
    formats::write_file(
        &config_path,
        &serde_json::to_string_pretty(&echo).expect("echo serialization cannot fail"),
    )?;
    outcome.files = vec![csv_path, txt_path, config_path];
    Ok(outcome)
}

pub fn sweep_table(outcome: &SweepOutcome) -> Vec<Vec<String>> {
    let mut header = vec!["min_sup".to_string()];
    for metric in &outcome.metrics {
        header.push(format!("mean_{}", metric.label()));
    }
    header.extend(
        [
            "mean_itemsets_all",
            "mean_itemsets_1",
            "mean_itemsets_2",
            "mean_itemsets_3",
            "mean_itemsets_4",
        ]
        .map(str::to_string),
    );
    let mut rows = vec![header];
    for row in &outcome.rows {
        let mut cells = vec![row.label.clone()];
        for metric in &outcome.metrics {
            cells.push(report::fmt_score(row.mean_recall[metric]));
        }
        cells.extend(row.mean_counts.iter().map(|&c| report::fmt_mean_count(c)));
        rows.push(cells);
    }
    rows
}

/// Parses `start:end:step` or a comma-separated list into thresholds with
/// display labels. Values must be strictly increasing and inside (0, 1).
pub fn parse_sweep_spec(spec: &str) -> Result<Vec<(Fraction, String)>, AppError> {
    let mut values = Vec::new();
    if spec.contains(':') {
        let parts: Vec<&str> = spec.split(':').collect();
        if parts.len() != 3 {
            return Err(AppError::usage(format!(
                "sweep-range must be start:end:step, got {spec:?}"
            )));
        }
        let start = crate::config::parse_fraction_arg(parts[0], "sweep-range start")?;
        let end = crate::config::parse_fraction_arg(parts[1], "sweep-range end")?;
        let step = crate::config::parse_fraction_arg(parts[2], "sweep-range step")?;
        if step.is_zero() {
            return Err(AppError::usage("sweep-range step must be positive"));
        }
        if end < start {
            return Err(AppError::usage("sweep-range end must not precede start"));
        }
        let mut v = start;
        while v <= end {
            values.push(v);
            v = v.add(step);
        }
    } else {
        for token in spec.split(',').map(str::trim).filter(|t| !t.is_empty()) {
            values.push(crate::config::parse_fraction_arg(token, "sweep value")?);
        }
    }
    if values.is_empty() {
        return Err(AppError::usage("sweep range contains no thresholds"));
    }
    for pair in values.windows(2) {
        if pair[1] <= pair[0] {
            return Err(AppError::usage(
                "sweep thresholds must be strictly increasing",
            ));
        }
    }
    if values[0].is_zero() || *values.last().unwrap() >= Fraction::ONE {
        return Err(AppError::usage("sweep thresholds must lie in (0, 1)"));
    }
    Ok(values
        .into_iter()
        .map(|v| (v, fraction_string(v)))
        .collect())
}

fn load_corpus(cfg: &ResolvedConfig, corpus: &Path) -> Result<Vec<CorpusEntry>, AppError> {
    let mut doc_paths: Vec<PathBuf> = std::fs::read_dir(corpus)
        .map_err(|e| AppError::data(format!("{}: {e}", corpus.display())))?
        .filter_map(|entry| entry.ok().map(|e| e.path()))
        .filter(|p| {
            let name = p.file_name().and_then(|n| n.to_str()).unwrap_or("");
            name.ends_with(".doc.txt")
                || name.ends_with(".doc.json")
                || name.ends_with(".doc.lines")
        })
        .collect();
    doc_paths.sort();

    let blocked = formats::load_blocked_types(cfg.blocked_types.as_deref())?;
    let mut entries = Vec::new();
    for path in doc_paths {
        let id = formats::doc_id_from_path(&path);
        let (doc, _stripped) = formats::load_document(&path, cfg.format)
            .map_err(|e| AppError::data(format!("document {id}: parse: {e}")))?;
        let model_path = corpus.join(format!("{id}.model.txt"));
        let model = formats::load_text(&model_path)
            .map_err(|e| AppError::data(format!("document {id}: model: {e}")))?;
        let source = match cfg.mode {
            Mode::Concept => {
                let ann_path = corpus.join(format!("{id}.annotations.jsonl"));
                let annotations = formats::load_concept_annotations(&ann_path)
                    .map_err(|e| AppError::data(format!("document {id}: annotate: {e}")))?;
                PreparedSource::Concepts(filter_semantic_types(annotations, &blocked))
            }
            Mode::Term => PreparedSource::Terms,
        };
        entries.push(CorpusEntry {
            id,
            doc,
            model,
            source,
        });
    }
    Ok(entries)
}
