//! Transactional representation of a document: one transaction per sentence,
//! items are the sentence's distinct concept ids or stems.
//!
//! Sentences with no items still produce (empty) transactions, so the support
//! denominator is always the full sentence count.

use alloc::collections::BTreeSet;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use serde::Serialize;

use crate::annotation::{concept_items, term_items, ConceptAnnotation, StopwordList};
use crate::document::Document;

/// The item set of one sentence. Items are stored by key; set semantics are
/// guaranteed by construction.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Transaction {
    pub index: usize,
    pub items: BTreeSet<String>,
}

/// All transactions of a document, in sentence order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TransactionSet {
    pub transactions: Vec<Transaction>,
    pub item_universe: BTreeSet<String>,
    pub total: usize,
}

/// Where transaction items come from.
#[derive(Clone, Copy, Debug)]
pub enum ItemSource<'a> {
    /// Already semantic-type-filtered concept annotations.
    Concepts(&'a [ConceptAnnotation]),
    /// Stop-word list for the term pipeline.
    Terms(&'a StopwordList),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum TransactionError {
    SentenceIndexOutOfRange { sentence_index: usize, total: usize },
}

impl fmt::Display for TransactionError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TransactionError::SentenceIndexOutOfRange {
                sentence_index,
                total,
            } => write!(
                f,
                "annotation refers to sentence {sentence_index} but the document has {total} sentences"
            ),
        }
    }
}

impl core::error::Error for TransactionError {}

/// Builds the transactional representation of `doc`.
pub fn build_transactions(
    doc: &Document,
    source: ItemSource<'_>,
) -> Result<TransactionSet, TransactionError> {
    let total = doc.sentences.len();
    if let ItemSource::Concepts(annotations) = source {
        if let Some(bad) = annotations.iter().find(|a| a.sentence_index >= total) {
            return Err(TransactionError::SentenceIndexOutOfRange {
                sentence_index: bad.sentence_index,
                total,
            });
        }
    }
    let transactions: Vec<Transaction> = doc
        .sentences
        .iter()
        .map(|sentence| {
            let items = match source {
                ItemSource::Concepts(annotations) => concept_items(sentence.index, annotations),
                ItemSource::Terms(stopwords) => term_items(sentence, stopwords),
            };
            Transaction {
                index: sentence.index,
                items: items.into_iter().map(|i| i.key).collect(),
            }
        })
        .collect();
    Ok(TransactionSet::from_transactions(transactions))
}

impl TransactionSet {
    /// Assembles a set from per-sentence item sets; indices are positional.
    /// Useful for tests and for mining data that did not come from a
    /// document.
    pub fn from_item_sets(item_sets: Vec<BTreeSet<String>>) -> TransactionSet {
        let transactions = item_sets
            .into_iter()
            .enumerate()
            .map(|(index, items)| Transaction { index, items })
            .collect();
        TransactionSet::from_transactions(transactions)
    }

    fn from_transactions(transactions: Vec<Transaction>) -> TransactionSet {
        let item_universe = transactions
            .iter()
            .flat_map(|t| t.items.iter().cloned())
            .collect();
        TransactionSet {
            total: transactions.len(),
            transactions,
            item_universe,
        }
    }

    /// Canonical JSON debug dump: `{"total": …, "transactions": [{"index": …,
    /// "items": […]}]}` with items in sorted order.
    pub fn to_debug_json(&self) -> String {
        #[derive(Serialize)]
        struct Dump<'a> {
            total: usize,
            transactions: Vec<TxDump<'a>>,
        }
        #[derive(Serialize)]
        struct TxDump<'a> {
            index: usize,
            items: Vec<&'a str>,
        }
        let dump = Dump {
            total: self.total,
            transactions: self
                .transactions
                .iter()
                .map(|t| TxDump {
                    index: t.index,
                    items: t.items.iter().map(String::as_str).collect(),
                })
                .collect(),
        };
        serde_json::to_string_pretty(&dump).expect("dump serialization cannot fail")
    }
}
