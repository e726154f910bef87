//! Lead and Random baselines with the same output layout as `summarize`.

use std::path::PathBuf;

use serde_json::json;

use itemsum_core::summarizer::{
    compression_to_count, lead_baseline, random_baseline, result_to_json, SummaryConfig,
};

use crate::args::BaselineKind;
use crate::config::ResolvedConfig;
use crate::error::AppError;
use crate::formats;

pub struct BaselineOutcome {
    pub doc_id: String,
    pub n: usize,
    pub files: Vec<PathBuf>,
}

pub fn run(cfg: &ResolvedConfig, kind: BaselineKind) -> Result<BaselineOutcome, AppError> {
    let doc_path = cfg.require_document()?;
    let (doc, _stripped) = formats::load_document(doc_path, cfg.format)
        .map_err(|e| AppError::data(format!("parse: {e}")))?;

    let n = compression_to_count(cfg.rate, doc.sentences.len());
    let summary_config = SummaryConfig::new(cfg.rate, cfg.mode, cfg.min_sup)
        .map_err(|e| AppError::usage(format!("select: {e}")))?;

    let (kind_name, result) = match kind {
        BaselineKind::Lead => (
            "lead",
            lead_baseline(&doc, n, &summary_config)
                .map_err(|e| AppError::data(format!("select: {e}")))?,
        ),
        BaselineKind::Random => {
            let seed = cfg
                .seed
                .ok_or_else(|| AppError::usage("random baseline requires --seed"))?;
            (
                "random",
                random_baseline(&doc, n, seed, &summary_config)
                    .map_err(|e| AppError::data(format!("select: {e}")))?,
            )
        }
    };

    let echo = cfg.echo_json(&[
        ("command", json!("baseline")),
        ("baseline", json!(kind_name)),
    ]);
    let mut files = Vec::new();
    let doc_id = doc.id.clone();

    let summary_txt = cfg.out.join(format!("{doc_id}.summary.txt"));
    let mut rendered = result.rendered_text.clone();
    rendered.push('\n');
    formats::write_file(&summary_txt, &rendered)?;
    files.push(summary_txt);

    let summary_json = cfg.out.join(format!("{doc_id}.summary.json"));
    formats::write_file(&summary_json, &result_to_json(&result, &echo))?;
    files.push(summary_json);

    Ok(BaselineOutcome {
        doc_id,
        n,
        files,
    })
}
