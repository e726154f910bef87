//! The `summarize` subcommand: document in, three files out (rendered
//! extract, JSON result, frequent-itemset dump). Failures name their stage:
//! parse, annotate, mine, or select.

use std::path::PathBuf;

use serde_json::json;

use itemsum_core::annotation::{filter_semantic_types, Mode};
use itemsum_core::miner::itemsets_to_json;
use itemsum_core::summarizer::{
    result_to_json, summarize, PipelineOutput, SummarizerError, SummaryConfig,
};
use itemsum_core::transactions::ItemSource;

use crate::config::ResolvedConfig;
use crate::error::AppError;
use crate::formats;

pub struct SummarizeOutcome {
    pub doc_id: String,
    pub n: usize,
    pub stripped_blocks: usize,
    pub files: Vec<PathBuf>,
}

fn stage_of(e: &SummarizerError) -> &'static str {
    match e {
        SummarizerError::Transaction(_) => "annotate",
        SummarizerError::Miner(_) => "mine",
        _ => "select",
    }
}

/// Runs the pipeline and writes the output files. Returns what was written.
pub fn run(cfg: &ResolvedConfig, dump_transactions: bool) -> Result<SummarizeOutcome, AppError> {
    let (output, doc_id, stripped) = run_pipeline(cfg)?;

    let echo = cfg.echo_json(&[("command", json!("summarize"))]);
    let out_dir = &cfg.out;
    let mut files = Vec::new();

    let summary_txt = out_dir.join(format!("{doc_id}.summary.txt"));
    let mut rendered = output.result.rendered_text.clone();
    rendered.push('\n');
    formats::write_file(&summary_txt, &rendered)?;
    files.push(summary_txt);

    let summary_json = out_dir.join(format!("{doc_id}.summary.json"));
    formats::write_file(&summary_json, &result_to_json(&output.result, &echo))?;
    files.push(summary_json);

    let itemsets_json = out_dir.join(format!("{doc_id}.itemsets.json"));
    formats::write_file(&itemsets_json, &itemsets_to_json(&output.frequent_itemsets))?;
    files.push(itemsets_json);

    if dump_transactions {
        let tx_json = out_dir.join(format!("{doc_id}.transactions.json"));
        formats::write_file(&tx_json, &output.transactions.to_debug_json())?;
        files.push(tx_json);
    }

    Ok(SummarizeOutcome {
        doc_id,
        n: output.result.selected_indices.len(),
        stripped_blocks: stripped,
        files,
    })
}

/// The pipeline without file output; shared with the sweep harness.
pub fn run_pipeline(cfg: &ResolvedConfig) -> Result<(PipelineOutput, String, usize), AppError> {
    let doc_path = cfg.require_document()?;
    let (doc, stripped) = formats::load_document(doc_path, cfg.format)
        .map_err(|e| AppError::data(format!("parse: {e}")))?;

    let summary_config = SummaryConfig::new(cfg.rate, cfg.mode, cfg.min_sup)
        .map_err(|e| AppError::usage(format!("select: {e}")))?;

    let output = match cfg.mode {
        Mode::Concept => {
            let ann_path = cfg.annotations.as_deref().ok_or_else(|| {
                AppError::data("annotate: concept mode requires an annotation file (--annotations)")
            })?;
            let annotations = formats::load_concept_annotations(ann_path)
                .map_err(|e| AppError::data(format!("annotate: {e}")))?;
            let blocked = formats::load_blocked_types(cfg.blocked_types.as_deref())
                .map_err(|e| AppError::data(format!("annotate: {e}")))?;
            let filtered = filter_semantic_types(annotations, &blocked);
            summarize(&doc, ItemSource::Concepts(&filtered), &summary_config)
        }
        Mode::Term => {
            let stopwords = formats::load_stopwords(cfg.stopwords.as_deref())
                .map_err(|e| AppError::data(format!("annotate: {e}")))?;
            summarize(&doc, ItemSource::Terms(&stopwords), &summary_config)
        }
    }
    .map_err(|e| AppError::data(format!("{}: {e}", stage_of(&e))))?;

    Ok((output, doc.id, stripped))
}
