//! Sentence scoring and extract assembly.
//!
//! Each sentence scores the sum of the support values of the frequent
//! itemsets that cover its transaction. The top N sentences are selected
//! (ties prefer the shorter sentence, then the earlier one) and arranged in
//! appearance order. Lead and Random baselines share the output shape.

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha12Rng;
use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use crate::annotation::Mode;
use crate::document::Document;
use crate::fraction::Fraction;
use crate::miner::{apriori, FrequentItemset, MinerConfig, MinerError};
use crate::transactions::{build_transactions, ItemSource, TransactionError, TransactionSet};

/// Exact score of one sentence plus how many itemsets covered it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SentenceScore {
    pub sentence_index: usize,
    pub score: Fraction,
    pub covering_itemsets: usize,
}

/// Parameters of a summarization run, echoed into every result.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SummaryConfig {
    pub compression_rate: Fraction,
    pub mode: Mode,
    pub min_sup: Fraction,
    pub random_seed: Option<u64>,
}

impl SummaryConfig {
    /// Validates `0 < compression_rate < 1` and `0 < min_sup <= 1`.
    pub fn new(
        compression_rate: Fraction,
        mode: Mode,
        min_sup: Fraction,
    ) -> Result<SummaryConfig, SummarizerError> {
        if compression_rate.is_zero() || compression_rate >= Fraction::ONE {
            return Err(SummarizerError::InvalidCompressionRate);
        }
        if min_sup.is_zero() || min_sup > Fraction::ONE {
            return Err(SummarizerError::Miner(MinerError::InvalidMinSup));
        }
        Ok(SummaryConfig {
            compression_rate,
            mode,
            min_sup,
            random_seed: None,
        })
    }

    pub fn with_seed(mut self, seed: u64) -> SummaryConfig {
        self.random_seed = Some(seed);
        self
    }
}

impl Serialize for SummaryConfig {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut s = serializer.serialize_struct("SummaryConfig", 4)?;
        s.serialize_field("compression_rate", &fraction_string(self.compression_rate))?;
        s.serialize_field("mode", &self.mode)?;
        s.serialize_field("min_sup", &fraction_string(self.min_sup))?;
        s.serialize_field("random_seed", &self.random_seed)?;
        s.end()
    }
}

/// Decimal form when it is finite ("0.08"), `num/den` otherwise ("7/85").
pub fn fraction_string(f: Fraction) -> String {
    f.to_decimal_string()
        .unwrap_or_else(|| alloc::format!("{}/{}", f.numer(), f.denom()))
}

/// A finished extract: indices in appearance order, all sentence scores, the
/// rendered text, and the parameters that produced it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SummaryResult {
    pub selected_indices: Vec<usize>,
    pub scores: Vec<SentenceScore>,
    pub rendered_text: String,
    pub config_echo: SummaryConfig,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SummarizerError {
    InvalidCompressionRate,
    SelectionCount { requested: usize, total: usize },
    MissingSeed,
    Transaction(TransactionError),
    Miner(MinerError),
}

impl fmt::Display for SummarizerError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SummarizerError::InvalidCompressionRate => {
                write!(f, "compression rate must lie strictly between 0 and 1")
            }
            SummarizerError::SelectionCount { requested, total } => write!(
                f,
                "cannot select {requested} sentences from a document of {total}"
            ),
            SummarizerError::MissingSeed => {
                write!(f, "random baseline requires an explicit seed")
            }
            SummarizerError::Transaction(e) => write!(f, "{e}"),
            SummarizerError::Miner(e) => write!(f, "{e}"),
        }
    }
}

impl core::error::Error for SummarizerError {}

impl From<TransactionError> for SummarizerError {
    fn from(e: TransactionError) -> Self {
        SummarizerError::Transaction(e)
    }
}

impl From<MinerError> for SummarizerError {
    fn from(e: MinerError) -> Self {
        SummarizerError::Miner(e)
    }
}

/// Scores every sentence: the exact sum of `Support(FI)` over the frequent
/// itemsets covering its transaction. An empty itemset list scores all
/// sentences zero.
pub fn score_sentences(
    frequent_itemsets: &[FrequentItemset],
    ts: &TransactionSet,
) -> Vec<SentenceScore> {
    ts.transactions
        .iter()
        .map(|t| {
            let mut score = Fraction::ZERO;
            let mut covering = 0usize;
            for fi in frequent_itemsets {
                if fi.items.iter().all(|i| t.items.contains(i)) {
                    score = score.add(fi.support.value());
                    covering += 1;
                }
            }
            SentenceScore {
                sentence_index: t.index,
                score,
                covering_itemsets: covering,
            }
        })
        .collect()
}

/// Sentence budget for a compression rate: round-half-up of
/// `rate * total_sentences`, with a floor of one.
pub fn compression_to_count(rate: Fraction, total_sentences: usize) -> usize {
    assert!(total_sentences >= 1, "document must have sentences");
    let num = rate.numer() as u128 * total_sentences as u128;
    let den = rate.denom() as u128;
    let rounded = (2 * num + den) / (2 * den);
    (rounded.max(1) as usize).min(total_sentences)
}

/// Picks the top `n` sentences by (descending score, ascending word count,
/// ascending index) and returns their indices in appearance order.
pub fn select_sentences(
    scores: &[SentenceScore],
    doc: &Document,
    n: usize,
) -> Result<Vec<usize>, SummarizerError> {
    let total = doc.sentences.len();
    if n == 0 || n > total {
        return Err(SummarizerError::SelectionCount {
            requested: n,
            total,
        });
    }
    let mut ranked: Vec<&SentenceScore> = scores.iter().collect();
    ranked.sort_by(|a, b| {
        b.score
            .cmp(&a.score)
            .then_with(|| {
                let wa = doc.sentences[a.sentence_index].word_count;
                let wb = doc.sentences[b.sentence_index].word_count;
                wa.cmp(&wb)
            })
            .then_with(|| a.sentence_index.cmp(&b.sentence_index))
    });
    let mut selected: Vec<usize> = ranked[..n].iter().map(|s| s.sentence_index).collect();
    selected.sort_unstable();
    Ok(selected)
}

/// Joins the selected sentences with newlines, in document order.
pub fn render_summary(doc: &Document, selected_indices: &[usize]) -> String {
    let mut out = String::new();
    for (i, &idx) in selected_indices.iter().enumerate() {
        if i > 0 {
            out.push('\n');
        }
        out.push_str(&doc.sentences[idx].text);
    }
    out
}

/// Everything a summarization run produces, including the mining artifacts
/// for dumps and reports.
#[derive(Clone, Debug)]
pub struct PipelineOutput {
    pub result: SummaryResult,
    pub frequent_itemsets: Vec<FrequentItemset>,
    pub transactions: TransactionSet,
}

/// Runs the full pipeline: transactions, Apriori, scoring, selection,
/// rendering.
pub fn summarize(
    doc: &Document,
    source: ItemSource<'_>,
    config: &SummaryConfig,
) -> Result<PipelineOutput, SummarizerError> {
    let transactions = build_transactions(doc, source)?;
    let miner_config = MinerConfig::new(config.min_sup)?;
    let frequent_itemsets = apriori(&transactions, &miner_config);
    let scores = score_sentences(&frequent_itemsets, &transactions);
    let n = compression_to_count(config.compression_rate, doc.sentences.len());
    let selected_indices = select_sentences(&scores, doc, n)?;
    let rendered_text = render_summary(doc, &selected_indices);
    Ok(PipelineOutput {
        result: SummaryResult {
            selected_indices,
            scores,
            rendered_text,
            config_echo: config.clone(),
        },
        frequent_itemsets,
        transactions,
    })
}

fn zero_scores(doc: &Document) -> Vec<SentenceScore> {
    doc.sentences
        .iter()
        .map(|s| SentenceScore {
            sentence_index: s.index,
            score: Fraction::ZERO,
            covering_itemsets: 0,
        })
        .collect()
}

/// Returns the first `n` sentences. `config` is echoed verbatim.
pub fn lead_baseline(
    doc: &Document,
    n: usize,
    config: &SummaryConfig,
) -> Result<SummaryResult, SummarizerError> {
    let total = doc.sentences.len();
    if n == 0 || n > total {
        return Err(SummarizerError::SelectionCount {
            requested: n,
            total,
        });
    }
    let selected_indices: Vec<usize> = (0..n).collect();
    Ok(SummaryResult {
        rendered_text: render_summary(doc, &selected_indices),
        selected_indices,
        scores: zero_scores(doc),
        config_echo: config.clone(),
    })
}

/// Selects `n` distinct sentences uniformly at random and returns them in
/// appearance order. The generator is a ChaCha12 stream cipher RNG seeded
/// with `seed` (`ChaCha12Rng::seed_from_u64`), sampled by a partial
/// Fisher-Yates shuffle, so the same `(document, n, seed)` always reproduces
/// the same summary.
pub fn random_baseline(
    doc: &Document,
    n: usize,
    seed: u64,
    config: &SummaryConfig,
) -> Result<SummaryResult, SummarizerError> {
    let total = doc.sentences.len();
    if n == 0 || n > total {
        return Err(SummarizerError::SelectionCount {
            requested: n,
            total,
        });
    }
    let mut rng = ChaCha12Rng::seed_from_u64(seed);
    let mut pool: Vec<usize> = (0..total).collect();
    for i in 0..n {
        let j = rng.gen_range(i..total);
        pool.swap(i, j);
    }
    let mut selected_indices = pool[..n].to_vec();
    selected_indices.sort_unstable();
    Ok(SummaryResult {
        rendered_text: render_summary(doc, &selected_indices),
        selected_indices,
        scores: zero_scores(doc),
        config_echo: config.clone().with_seed(seed),
    })
}

/// Canonical JSON for a result file:
/// `{"selected": […], "N": …, "scores": [{"index": …, "score_num": …,
/// "score_den": …}], "config": …}`. The caller supplies the config object so
/// run harnesses can echo their full resolved configuration.
pub fn result_to_json(result: &SummaryResult, config: &serde_json::Value) -> String {
    #[derive(Serialize)]
    struct ScoreEntry {
        index: usize,
        score_num: u64,
        score_den: u64,
    }
    #[derive(Serialize)]
    struct ResultFile<'a> {
        selected: &'a [usize],
        #[serde(rename = "N")]
        n: usize,
        scores: Vec<ScoreEntry>,
        config: &'a serde_json::Value,
    }
    let file = ResultFile {
        selected: &result.selected_indices,
        n: result.selected_indices.len(),
        scores: result
            .scores
            .iter()
            .map(|s| ScoreEntry {
                index: s.sentence_index,
                score_num: s.score.numer(),
                score_den: s.score.denom(),
            })
            .collect(),
        config,
    };
    serde_json::to_string_pretty(&file).expect("result serialization cannot fail")
}
