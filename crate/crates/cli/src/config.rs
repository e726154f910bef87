//! Run configuration: defaults, config-file values, and flag overrides, in
//! rising precedence. Every run echoes the resolved configuration into its
//! output files so results can be reproduced byte for byte.

use std::path::{Path, PathBuf};

use serde::Deserialize;
use serde_json::{json, Value};

use itemsum_core::annotation::Mode;
use itemsum_core::document::SourceFormat;
use itemsum_core::fraction::Fraction;
use itemsum_core::rouge::RougeMetric;

use crate::args::{CommonArgs, FormatArg, ModeArg};
use crate::error::AppError;

pub const DEFAULT_MIN_SUP_CONCEPT: &str = "0.08";
pub const DEFAULT_MIN_SUP_TERM: &str = "0.10";
pub const DEFAULT_RATE: &str = "0.30";
pub const DEFAULT_OUT: &str = "itemsum_out";

/// The JSON config-file shape; every field optional.
#[derive(Debug, Default, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RunConfigFile {
    pub mode: Option<String>,
    pub min_sup: Option<Value>,
    pub compression_rate: Option<Value>,
    pub document: Option<PathBuf>,
    pub annotations: Option<PathBuf>,
    pub stopwords: Option<PathBuf>,
    pub blocked_types: Option<PathBuf>,
    pub out: Option<PathBuf>,
    pub seed: Option<u64>,
    pub format: Option<String>,
    pub metrics: Option<Vec<String>>,
}

/// A fully resolved run configuration.
#[derive(Clone, Debug)]
pub struct ResolvedConfig {
    pub mode: Mode,
    pub min_sup: Fraction,
    pub min_sup_str: String,
    pub rate: Fraction,
    pub rate_str: String,
    pub document: Option<PathBuf>,
    pub annotations: Option<PathBuf>,
    pub stopwords: Option<PathBuf>,
    pub blocked_types: Option<PathBuf>,
    pub out: PathBuf,
    pub seed: Option<u64>,
    pub format: Option<SourceFormat>,
    /// `None` when neither flag nor config file named metrics; each command
    /// applies its own default.
    pub metrics: Option<Vec<RougeMetric>>,
}

impl ResolvedConfig {
    pub fn resolve(common: &CommonArgs, document: Option<&Path>) -> Result<Self, AppError> {
        let file = match &common.config {
            Some(path) => load_config_file(path)?,
            None => RunConfigFile::default(),
        };

        let mode = match common.mode {
            Some(ModeArg::Concept) => Mode::Concept,
            Some(ModeArg::Term) => Mode::Term,
            None => match file.mode.as_deref() {
                Some("concept") | None => Mode::Concept,
                Some("term") => Mode::Term,
                Some(other) => {
                    return Err(AppError::usage(format!(
                        "config: unknown mode {other:?} (expected \"concept\" or \"term\")"
                    )))
                }
            },
        };

        let min_sup_str = common
            .min_sup
            .clone()
            .or_else(|| file.min_sup.as_ref().map(value_to_string))
            .unwrap_or_else(|| {
                match mode {
                    Mode::Concept => DEFAULT_MIN_SUP_CONCEPT,
                    Mode::Term => DEFAULT_MIN_SUP_TERM,
                }
                .to_string()
            });
        let min_sup = parse_fraction_arg(&min_sup_str, "min-sup")?;
        if min_sup.is_zero() || min_sup > Fraction::ONE {
            return Err(AppError::usage(format!(
                "min-sup must lie in (0, 1], got {min_sup_str}"
            )));
        }

        let rate_str = common
            .rate
            .clone()
            .or_else(|| file.compression_rate.as_ref().map(value_to_string))
            .unwrap_or_else(|| DEFAULT_RATE.to_string());
        let rate = parse_fraction_arg(&rate_str, "rate")?;
        if rate.is_zero() || rate >= Fraction::ONE {
            return Err(AppError::usage(format!(
                "rate must lie strictly between 0 and 1, got {rate_str}"
            )));
        }

        let format = match common.format {
            Some(FormatArg::Plain) => Some(SourceFormat::Plain),
            Some(FormatArg::StructuredJson) => Some(SourceFormat::StructuredJson),
            Some(FormatArg::PreSegmented) => Some(SourceFormat::PreSegmented),
            None => match file.format.as_deref() {
                None => None,
                Some("plain") => Some(SourceFormat::Plain),
                Some("structured-json") => Some(SourceFormat::StructuredJson),
                Some("pre-segmented") => Some(SourceFormat::PreSegmented),
                Some(other) => {
                    return Err(AppError::usage(format!(
                        "config: unknown format {other:?}"
                    )))
                }
            },
        };

        let metrics = match &common.metrics {
            Some(spec) => Some(parse_metrics(spec)?),
            None => match &file.metrics {
                Some(list) => Some(parse_metrics(&list.join(","))?),
                None => None,
            },
        };

        Ok(ResolvedConfig {
            mode,
            min_sup,
            min_sup_str,
            rate,
            rate_str,
            document: document
                .map(Path::to_path_buf)
                .or(file.document),
            annotations: common.annotations.clone().or(file.annotations),
            stopwords: common.stopwords.clone().or(file.stopwords),
            blocked_types: common.blocked_types.clone().or(file.blocked_types),
            out: common
                .out
                .clone()
                .or(file.out)
                .unwrap_or_else(|| PathBuf::from(DEFAULT_OUT)),
            seed: common.seed.or(file.seed),
            format,
            metrics,
        })
    }

    pub fn require_document(&self) -> Result<&Path, AppError> {
        self.document
            .as_deref()
            .ok_or_else(|| AppError::usage("a document path is required (positional or config)"))
    }

    /// The resolved configuration as a JSON object, with optional extra
    /// fields (e.g. the baseline kind).
    pub fn echo_json(&self, extra: &[(&str, Value)]) -> Value {
        let mut obj = json!({
            "mode": self.mode.to_string(),
            "min_sup": self.min_sup_str,
            "compression_rate": self.rate_str,
            "document": self.document.as_deref().map(path_string),
            "annotations": self.annotations.as_deref().map(path_string),
            "stopwords": self.stopwords.as_deref().map(path_string),
            "blocked_types": self.blocked_types.as_deref().map(path_string),
            "out": path_string(&self.out),
            "seed": self.seed,
            "format": self.format.map(|f| f.to_string()),
            "metrics": self
                .metrics
                .as_ref()
                .map(|ms| ms.iter().map(|m| m.label()).collect::<Vec<_>>()),
        });
        for (key, value) in extra {
            obj[*key] = value.clone();
        }
        obj
    }
}

fn path_string(p: &Path) -> String {
    p.to_string_lossy().into_owned()
}

fn load_config_file(path: &Path) -> Result<RunConfigFile, AppError> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| AppError::data(format!("config {}: {e}", path.display())))?;
    serde_json::from_str(&text)
        .map_err(|e| AppError::data(format!("config {}: {e}", path.display())))
}

/// Accepts a JSON string ("0.08") or number (0.08). Numbers go through their
/// shortest decimal rendering, so short literals stay exact.
fn value_to_string(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        other => other.to_string(),
    }
}

pub fn parse_fraction_arg(s: &str, what: &str) -> Result<Fraction, AppError> {
    Fraction::parse(s).map_err(|e| AppError::usage(format!("{what}: {e} (got {s:?})")))
}

pub fn parse_metrics(spec: &str) -> Result<Vec<RougeMetric>, AppError> {
    let mut out = Vec::new();
    for token in spec.split(',').map(str::trim).filter(|t| !t.is_empty()) {
        let metric = RougeMetric::parse_flag(token).ok_or_else(|| {
            AppError::usage(format!(
                "unknown metric {token:?} (expected r1, r2, rw12, rsu4)"
            ))
        })?;
        if !out.contains(&metric) {
            out.push(metric);
        }
    }
    if out.is_empty() {
        return Err(AppError::usage("metric list is empty"));
    }
    Ok(out)
}
