//! Item extraction: external concept annotations (concept mode) or the
//! stop-word + stemming pipeline (term mode).
//!
//! Concept annotations arrive as JSON lines, one object per sentence:
//! `{"sentence_index": 23, "concepts": [{"concept_id": "...",
//! "preferred_name": "...", "semantic_type": "..."}]}`. Concepts whose
//! semantic type is too generic are filtered out before mining.

use alloc::collections::BTreeSet;
use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;

use serde::{Deserialize, Serialize};

use crate::document::Sentence;
use crate::stem::porter_stem;

/// Which item vocabulary a run uses.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Mode {
    Concept,
    Term,
}

impl fmt::Display for Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Mode::Concept => write!(f, "concept"),
            Mode::Term => write!(f, "term"),
        }
    }
}

/// A mapped concept as produced by an external concept mapper.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Concept {
    pub concept_id: String,
    pub preferred_name: String,
    pub semantic_type: String,
}

/// All concepts mapped for one sentence.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConceptAnnotation {
    pub sentence_index: usize,
    pub concepts: Vec<Concept>,
}

/// An element of a transaction. Items compare, hash, and order by `key`
/// alone; `display` is a human-readable label carried along for reports.
#[derive(Clone, Debug)]
pub struct Item {
    pub key: String,
    pub display: String,
}

impl Item {
    pub fn new(key: impl Into<String>, display: impl Into<String>) -> Item {
        Item {
            key: key.into(),
            display: display.into(),
        }
    }
}

impl PartialEq for Item {
    fn eq(&self, other: &Item) -> bool {
        self.key == other.key
    }
}

impl Eq for Item {}

impl PartialOrd for Item {
    fn partial_cmp(&self, other: &Item) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Item {
    fn cmp(&self, other: &Item) -> Ordering {
        self.key.cmp(&other.key)
    }
}

impl core::hash::Hash for Item {
    fn hash<H: core::hash::Hasher>(&self, state: &mut H) {
        self.key.hash(state);
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum AnnotationError {
    /// A JSON line failed to parse or violated the schema. Line numbers are
    /// 1-based.
    Schema { line: usize, message: String },
}

impl fmt::Display for AnnotationError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AnnotationError::Schema { line, message } => {
                write!(f, "annotation line {line}: {message}")
            }
        }
    }
}

impl core::error::Error for AnnotationError {}

/// Parses JSON-lines concept annotations. Blank lines are skipped; every
/// concept must carry a non-empty `concept_id`. An empty input yields an
/// empty list.
pub fn parse_annotations(text: &str) -> Result<Vec<ConceptAnnotation>, AnnotationError> {
    let mut out = Vec::new();
    for (idx, line) in text.lines().enumerate() {
        let line_no = idx + 1;
        let trimmed = line.trim();
        if trimmed.is_empty() {
            continue;
        }
        let ann: ConceptAnnotation =
            serde_json::from_str(trimmed).map_err(|e| AnnotationError::Schema {
                line: line_no,
                message: e.to_string(),
            })?;
        if let Some(c) = ann.concepts.iter().find(|c| c.concept_id.is_empty()) {
            return Err(AnnotationError::Schema {
                line: line_no,
                message: alloc::format!(
                    "concept with empty concept_id (preferred_name {:?})",
                    c.preferred_name
                ),
            });
        }
        out.push(ann);
    }
    Ok(out)
}

/// A set of semantic types to discard, matched case-insensitively.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct BlockedTypes {
    types: BTreeSet<String>,
}

impl BlockedTypes {
    /// The nine overly broad semantic types blocked by default.
    pub fn bundled() -> BlockedTypes {
        Self::parse(include_str!("../data/blocked_types.txt"))
    }

    /// Parses a one-type-per-line listing; `#` starts a comment line.
    pub fn parse(text: &str) -> BlockedTypes {
        BlockedTypes {
            types: parse_word_list(text).map(|w| w.to_lowercase()).collect(),
        }
    }

    pub fn empty() -> BlockedTypes {
        BlockedTypes::default()
    }

    pub fn contains(&self, semantic_type: &str) -> bool {
        self.types.contains(&semantic_type.to_lowercase())
    }

    pub fn len(&self) -> usize {
        self.types.len()
    }

    pub fn is_empty(&self) -> bool {
        self.types.is_empty()
    }
}

/// Lowercased stop-words for the term pipeline.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct StopwordList {
    words: BTreeSet<String>,
}

impl StopwordList {
    /// The English list bundled with the crate.
    pub fn bundled() -> StopwordList {
        Self::parse(include_str!("../data/stopwords.txt"))
    }

    pub fn parse(text: &str) -> StopwordList {
        StopwordList {
            words: parse_word_list(text).map(|w| w.to_lowercase()).collect(),
        }
    }

    pub fn contains(&self, word: &str) -> bool {
        self.words.contains(word)
    }

    pub fn len(&self) -> usize {
        self.words.len()
    }

    pub fn is_empty(&self) -> bool {
        self.words.is_empty()
    }
}

fn parse_word_list(text: &str) -> impl Iterator<Item = &str> {
    text.lines()
        .map(str::trim)
        .filter(|l| !l.is_empty() && !l.starts_with('#'))
}

/// Drops every concept whose semantic type is blocked. Annotations keep their
/// sentence index even when all of their concepts are removed, so downstream
/// transaction counts stay aligned with the document.
pub fn filter_semantic_types(
    annotations: Vec<ConceptAnnotation>,
    blocked: &BlockedTypes,
) -> Vec<ConceptAnnotation> {
    annotations
        .into_iter()
        .map(|ann| ConceptAnnotation {
            sentence_index: ann.sentence_index,
            concepts: ann
                .concepts
                .into_iter()
                .filter(|c| !blocked.contains(&c.semantic_type))
                .collect(),
        })
        .collect()
}

/// Term-mode items: lowercase, split on non-alphanumeric boundaries, drop
/// stop-words, Porter-stem the rest, and keep the distinct stems.
pub fn term_items(sentence: &Sentence, stopwords: &StopwordList) -> BTreeSet<Item> {
    let mut items = BTreeSet::new();
    for token in sentence
        .text
        .to_lowercase()
        .split(|c: char| !c.is_alphanumeric())
        .filter(|t| !t.is_empty())
    {
        if stopwords.contains(token) {
            continue;
        }
        let stem = porter_stem(token);
        items.insert(Item {
            display: stem.clone(),
            key: stem,
        });
    }
    items
}

/// Concept-mode items: the distinct concept ids annotated for the sentence.
/// A multi-word phrase mapped to one concept contributes exactly one item;
/// repeated ids collapse. Sentences without annotations yield an empty set.
pub fn concept_items(sentence_index: usize, annotations: &[ConceptAnnotation]) -> BTreeSet<Item> {
    let mut items = BTreeSet::new();
    for ann in annotations.iter().filter(|a| a.sentence_index == sentence_index) {
        for concept in &ann.concepts {
            items.insert(Item::new(&concept.concept_id, &concept.preferred_name));
        }
    }
    items
}
