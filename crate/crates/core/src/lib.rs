//! Itemset-mining extractive summarization.
//!
//! The pipeline turns a document into a transaction database (one transaction
//! per sentence, items are either biomedical concept ids or word stems), mines
//! frequent itemsets with Apriori, scores each sentence by the summed support
//! of the itemsets covering it, and selects the top sentences under a
//! compression rate. ROUGE metrics are included for evaluating extracts
//! against model summaries.
//!
//! The crate is `no_std` + `alloc`: everything here is pure computation over
//! in-memory data. File handling and the command-line surface live in the
//! companion `itemsum-cli` crate.

#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod annotation;
pub mod document;
pub mod fraction;
pub mod miner;
pub mod rouge;
pub mod stem;
pub mod summarizer;
pub mod transactions;

pub use annotation::{Concept, ConceptAnnotation, Item, Mode};
pub use document::{Document, Sentence, SourceFormat};
pub use fraction::Fraction;
pub use miner::{FrequentItemset, MinerConfig, SupportFraction};
pub use rouge::{RougeMetric, RougeScore, TokenSequence};
pub use summarizer::{SentenceScore, SummaryConfig, SummaryResult};
pub use transactions::{ItemSource, Transaction, TransactionSet};
