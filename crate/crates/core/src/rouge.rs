//! ROUGE metrics: R-1, R-2, R-W-1.2 (weighted LCS), and R-SU4 (skip-bigram
//! plus unigram, gap at most four).
//!
//! Tokenization is lowercase with splits on non-alphanumeric characters, and
//! is identical for system and model texts. Recall is the headline number;
//! precision and F1 are always computed alongside.

use alloc::collections::BTreeMap;
use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;

use serde::{Serialize, Serializer};

use crate::stem::porter_stem;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum RougeMetric {
    Rouge1,
    Rouge2,
    RougeW12,
    RougeSu4,
}

impl RougeMetric {
    pub const ALL: [RougeMetric; 4] = [
        RougeMetric::Rouge1,
        RougeMetric::Rouge2,
        RougeMetric::RougeW12,
        RougeMetric::RougeSu4,
    ];

    pub fn label(&self) -> &'static str {
        match self {
            RougeMetric::Rouge1 => "R-1",
            RougeMetric::Rouge2 => "R-2",
            RougeMetric::RougeW12 => "R-W-1.2",
            RougeMetric::RougeSu4 => "R-SU4",
        }
    }

    /// Parses the compact flag form: r1, r2, rw12, rsu4 (case-insensitive).
    pub fn parse_flag(s: &str) -> Option<RougeMetric> {
        match s.to_lowercase().as_str() {
            "r1" | "r-1" => Some(RougeMetric::Rouge1),
            "r2" | "r-2" => Some(RougeMetric::Rouge2),
            "rw12" | "r-w-1.2" | "rw" => Some(RougeMetric::RougeW12),
            "rsu4" | "r-su4" | "rsu" => Some(RougeMetric::RougeSu4),
            _ => None,
        }
    }
}

impl fmt::Display for RougeMetric {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.label())
    }
}

impl Serialize for RougeMetric {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.serialize_str(self.label())
    }
}

/// Recall, precision, and their harmonic mean for one metric.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct RougeScore {
    #[serde(skip)]
    pub metric: RougeMetric,
    pub recall: f64,
    pub precision: f64,
    pub f1: f64,
}

impl RougeScore {
    fn new(metric: RougeMetric, recall: f64, precision: f64) -> RougeScore {
        let f1 = if recall + precision == 0.0 {
            0.0
        } else {
            2.0 * recall * precision / (recall + precision)
        };
        RougeScore {
            metric,
            recall,
            precision,
            f1,
        }
    }
}

/// Lowercased tokens in text order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TokenSequence {
    pub tokens: Vec<String>,
}

impl TokenSequence {
    /// Lowercase and split on non-alphanumeric boundaries.
    pub fn tokenize(text: &str) -> TokenSequence {
        TokenSequence {
            tokens: text
                .to_lowercase()
                .split(|c: char| !c.is_alphanumeric())
                .filter(|t| !t.is_empty())
                .map(ToString::to_string)
                .collect(),
        }
    }

    /// Tokenize and Porter-stem every token; a sensitivity switch, off by
    /// default everywhere.
    pub fn tokenize_stemmed(text: &str) -> TokenSequence {
        let base = Self::tokenize(text);
        TokenSequence {
            tokens: base.tokens.iter().map(|t| porter_stem(t)).collect(),
        }
    }

    pub fn len(&self) -> usize {
        self.tokens.len()
    }

    pub fn is_empty(&self) -> bool {
        self.tokens.is_empty()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum RougeError {
    EmptyModel,
    EmptyModelList,
    InvalidParameter(&'static str),
}

impl fmt::Display for RougeError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RougeError::EmptyModel => write!(f, "model summary has no tokens"),
            RougeError::EmptyModelList => write!(f, "at least one model summary is required"),
            RougeError::InvalidParameter(what) => write!(f, "invalid parameter: {what}"),
        }
    }
}

impl core::error::Error for RougeError {}

/// Clipped counting-unit overlap: recall and precision of the multiset
/// intersection.
fn clipped_overlap(
    metric: RougeMetric,
    system_units: &BTreeMap<String, usize>,
    model_units: &BTreeMap<String, usize>,
) -> RougeScore {
    let matches: usize = system_units
        .iter()
        .map(|(unit, &count)| count.min(model_units.get(unit).copied().unwrap_or(0)))
        .sum();
    let system_total: usize = system_units.values().sum();
    let model_total: usize = model_units.values().sum();
    let recall = ratio(matches, model_total);
    let precision = ratio(matches, system_total);
    RougeScore::new(metric, recall, precision)
}

fn ratio(num: usize, den: usize) -> f64 {
    if den == 0 {
        0.0
    } else {
        num as f64 / den as f64
    }
}

fn ngram_counts(tokens: &[String], n: usize) -> BTreeMap<String, usize> {
    let mut counts = BTreeMap::new();
    if tokens.len() >= n {
        for window in tokens.windows(n) {
            *counts.entry(window.join(" ")).or_insert(0) += 1;
        }
    }
    counts
}

/// ROUGE-N: clipped n-gram overlap. The spec'd uses are n = 1 and n = 2.
pub fn rouge_n(
    system: &TokenSequence,
    model: &TokenSequence,
    n: usize,
) -> Result<RougeScore, RougeError> {
    if n == 0 {
        return Err(RougeError::InvalidParameter("n must be at least 1"));
    }
    if model.is_empty() {
        return Err(RougeError::EmptyModel);
    }
    let metric = match n {
        1 => RougeMetric::Rouge1,
        _ => RougeMetric::Rouge2,
    };
    Ok(clipped_overlap(
        metric,
        &ngram_counts(&system.tokens, n),
        &ngram_counts(&model.tokens, n),
    ))
}

fn f_weight(k: f64, weight: f64) -> f64 {
    libm::pow(k, weight)
}

fn f_inverse(x: f64, weight: f64) -> f64 {
    if x <= 0.0 {
        0.0
    } else {
        libm::pow(x, 1.0 / weight)
    }
}

/// Weighted LCS score: consecutive match runs of length k contribute
/// f(k) = k^weight, rewarding contiguity superlinearly; scores are mapped
/// back through f^-1.
pub fn rouge_w(
    system: &TokenSequence,
    model: &TokenSequence,
    weight: f64,
) -> Result<RougeScore, RougeError> {
    if weight <= 1.0 {
        return Err(RougeError::InvalidParameter("weight must exceed 1"));
    }
    if model.is_empty() {
        return Err(RougeError::EmptyModel);
    }
    let wlcs = weighted_lcs(&model.tokens, &system.tokens, weight);
    let recall = f_inverse(wlcs / f_weight(model.len() as f64, weight), weight);
    let precision = if system.is_empty() {
        0.0
    } else {
        f_inverse(wlcs / f_weight(system.len() as f64, weight), weight)
    };
    Ok(RougeScore::new(RougeMetric::RougeW12, recall, precision))
}

/// The WLCS dynamic program: on a match ending consecutive runs of length k,
/// the cell gains f(k+1) - f(k); otherwise the run resets.
fn weighted_lcs(x: &[String], y: &[String], weight: f64) -> f64 {
    let (m, n) = (x.len(), y.len());
    let mut score = alloc::vec![0.0f64; (m + 1) * (n + 1)];
    let mut run = alloc::vec![0usize; (m + 1) * (n + 1)];
    let idx = |i: usize, j: usize| i * (n + 1) + j;
    for i in 1..=m {
        for j in 1..=n {
            if x[i - 1] == y[j - 1] {
                let k = run[idx(i - 1, j - 1)];
                score[idx(i, j)] = score[idx(i - 1, j - 1)]
                    + f_weight((k + 1) as f64, weight)
                    - f_weight(k as f64, weight);
                run[idx(i, j)] = k + 1;
            } else if score[idx(i - 1, j)] >= score[idx(i, j - 1)] {
                score[idx(i, j)] = score[idx(i - 1, j)];
            } else {
                score[idx(i, j)] = score[idx(i, j - 1)];
            }
        }
    }
    score[idx(m, n)]
}

/// ROUGE-SU: counting units are all unigrams plus all ordered pairs
/// (t_i, t_j) with i < j <= i + max_skip + 1; overlap is clipped as in
/// ROUGE-N.
pub fn rouge_su(
    system: &TokenSequence,
    model: &TokenSequence,
    max_skip: usize,
) -> Result<RougeScore, RougeError> {
    if model.is_empty() {
        return Err(RougeError::EmptyModel);
    }
    Ok(clipped_overlap(
        RougeMetric::RougeSu4,
        &su_units(&system.tokens, max_skip),
        &su_units(&model.tokens, max_skip),
    ))
}

fn su_units(tokens: &[String], max_skip: usize) -> BTreeMap<String, usize> {
    let mut counts = BTreeMap::new();
    for (i, tok) in tokens.iter().enumerate() {
        *counts.entry(tok.clone()).or_insert(0) += 1;
        for j in (i + 1)..tokens.len().min(i + max_skip + 2) {
            let mut pair = String::with_capacity(tok.len() + tokens[j].len() + 1);
            pair.push_str(tok);
            pair.push(' ');
            pair.push(' '); // distinguishes pairs from unigrams and bigrams
            pair.push_str(&tokens[j]);
            *counts.entry(pair).or_insert(0) += 1;
        }
    }
    counts
}

fn compute_metric(
    metric: RougeMetric,
    system: &TokenSequence,
    model: &TokenSequence,
) -> Result<RougeScore, RougeError> {
    match metric {
        RougeMetric::Rouge1 => rouge_n(system, model, 1),
        RougeMetric::Rouge2 => rouge_n(system, model, 2),
        RougeMetric::RougeW12 => rouge_w(system, model, 1.2),
        RougeMetric::RougeSu4 => rouge_su(system, model, 4),
    }
}

/// Scores a system summary against one or more model summaries. With several
/// models the score of the best-recall model is reported per metric (ties go
/// to the earlier model); a single model degenerates to the pairwise score.
pub fn evaluate_summary(
    system_text: &str,
    model_texts: &[String],
    metrics: &[RougeMetric],
) -> Result<BTreeMap<RougeMetric, RougeScore>, RougeError> {
    if model_texts.is_empty() {
        return Err(RougeError::EmptyModelList);
    }
    let system = TokenSequence::tokenize(system_text);
    let models: Vec<TokenSequence> = model_texts
        .iter()
        .map(|t| TokenSequence::tokenize(t))
        .collect();
    if let Some(_empty) = models.iter().find(|m| m.is_empty()) {
        return Err(RougeError::EmptyModel);
    }
    let mut out = BTreeMap::new();
    for &metric in metrics {
        let mut best: Option<RougeScore> = None;
        for model in &models {
            let score = compute_metric(metric, &system, model)?;
            let better = match best {
                None => true,
                Some(b) => score.recall > b.recall,
            };
            if better {
                best = Some(score);
            }
        }
        out.insert(metric, best.expect("at least one model"));
    }
    Ok(out)
}
