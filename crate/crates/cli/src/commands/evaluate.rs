//! The `evaluate` subcommand: score system summaries against model summaries
//! paired by shared id, then report per-document rows and a corpus mean.

use std::collections::BTreeMap;
use std::path::{Path, PathBuf};

use serde_json::json;

use itemsum_core::rouge::{evaluate_summary, RougeMetric, RougeScore};

use crate::error::AppError;
use crate::formats::{self, doc_id_from_path};
use crate::report;

pub struct EvalRow {
    pub doc_id: String,
    pub scores: BTreeMap<RougeMetric, RougeScore>,
}

pub struct EvalReport {
    pub metrics: Vec<RougeMetric>,
    pub rows: Vec<EvalRow>,
    pub mean: BTreeMap<RougeMetric, RougeScore>,
}

pub fn run(
    system_files: &[PathBuf],
    model_files: &[PathBuf],
    metrics: &[RougeMetric],
    out: Option<&Path>,
) -> Result<EvalReport, AppError> {
    let report = evaluate_files(system_files, model_files, metrics)?;
    if let Some(dir) = out {
        formats::write_file(&dir.join("report.json"), &report_json(&report))?;
        formats::write_file(&dir.join("report.txt"), &report_text(&report))?;
    }
    Ok(report)
}

pub fn evaluate_files(
    system_files: &[PathBuf],
    model_files: &[PathBuf],
    metrics: &[RougeMetric],
) -> Result<EvalReport, AppError> {
    let systems = index_by_id(system_files)?;
    let models = index_by_id(model_files)?;

    let unpaired: Vec<&str> = systems
        .keys()
        .filter(|id| !models.contains_key(*id))
        .chain(models.keys().filter(|id| !systems.contains_key(*id)))
        .map(String::as_str)
        .collect();
    if !unpaired.is_empty() {
        return Err(AppError::data(format!(
            "unpaired document ids: {}",
            unpaired.join(", ")
        )));
    }

    let mut rows = Vec::new();
    for (id, system_path) in &systems {
        let system_text = formats::load_text(system_path)?;
        let model_text = formats::load_text(&models[id])?;
        let scores = evaluate_summary(&system_text, &[model_text], metrics)
            .map_err(|e| AppError::data(format!("document {id}: {e}")))?;
        rows.push(EvalRow {
            doc_id: id.clone(),
            scores,
        });
    }

    let mean = mean_scores(metrics, &rows);
    Ok(EvalReport {
        metrics: metrics.to_vec(),
        rows,
        mean,
    })
}

fn index_by_id(files: &[PathBuf]) -> Result<BTreeMap<String, PathBuf>, AppError> {
    let mut map = BTreeMap::new();
    for f in files {
        let id = doc_id_from_path(f);
        if let Some(previous) = map.insert(id.clone(), f.clone()) {
            return Err(AppError::usage(format!(
                "id {id:?} appears twice: {} and {}",
                previous.display(),
                f.display()
            )));
        }
    }
    Ok(map)
}

fn mean_scores(metrics: &[RougeMetric], rows: &[EvalRow]) -> BTreeMap<RougeMetric, RougeScore> {
    let n = rows.len().max(1) as f64;
    metrics
        .iter()
        .map(|&metric| {
            let (mut r, mut p, mut f1) = (0.0, 0.0, 0.0);
            for row in rows {
                let s = row.scores[&metric];
                r += s.recall;
                p += s.precision;
                f1 += s.f1;
            }
            (
                metric,
                RougeScore {
                    metric,
                    recall: r / n,
                    precision: p / n,
                    f1: f1 / n,
                },
            )
        })
        .collect()
}

pub fn report_json(report: &EvalReport) -> String {
    let doc_entry = |scores: &BTreeMap<RougeMetric, RougeScore>| {
        let mut obj = serde_json::Map::new();
        for metric in &report.metrics {
            let s = scores[metric];
            obj.insert(
                metric.label().to_string(),
                json!({"recall": s.recall, "precision": s.precision, "f1": s.f1}),
            );
        }
        serde_json::Value::Object(obj)
    };
    let value = json!({
        "documents": report
            .rows
            .iter()
            .map(|row| json!({"doc_id": row.doc_id, "scores": doc_entry(&row.scores)}))
            .collect::<Vec<_>>(),
        "mean": doc_entry(&report.mean),
    });
    serde_json::to_string_pretty(&value).expect("report serialization cannot fail")
}

/// Aligned columns: recall, precision, F1 per metric, one row per document
/// plus a MEAN row.
pub fn report_text(report: &EvalReport) -> String {
    let mut header = vec!["doc_id".to_string()];
    for metric in &report.metrics {
        header.push(format!("{}(R)", metric.label()));
        header.push(format!("{}(P)", metric.label()));
        header.push(format!("{}(F)", metric.label()));
    }
    let mut rows = vec![header];
    let row_of = |label: &str, scores: &BTreeMap<RougeMetric, RougeScore>| {
        let mut row = vec![label.to_string()];
        for metric in &report.metrics {
            let s = scores[metric];
            row.push(report::fmt_score(s.recall));
            row.push(report::fmt_score(s.precision));
            row.push(report::fmt_score(s.f1));
        }
        row
    };
    for r in &report.rows {
        rows.push(row_of(&r.doc_id, &r.scores));
    }
    rows.push(row_of("MEAN", &report.mean));
    report::aligned_table(&rows)
}
