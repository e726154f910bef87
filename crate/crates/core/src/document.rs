//! Document parsing, figure/table stripping, and sentence segmentation.
//!
//! Three input formats are supported: plain UTF-8 text, a structured JSON
//! layout with tagged prose/figure/table blocks, and pre-segmented text with
//! one sentence per line. Segmentation is deliberately rule-based so that the
//! same bytes always produce the same sentence list.

use alloc::borrow::ToOwned;
use alloc::collections::BTreeSet;
use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;

use serde::{Deserialize, Serialize};

/// How the raw input bytes are to be interpreted.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum SourceFormat {
    Plain,
    StructuredJson,
    PreSegmented,
}

impl fmt::Display for SourceFormat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SourceFormat::Plain => write!(f, "plain"),
            SourceFormat::StructuredJson => write!(f, "structured-json"),
            SourceFormat::PreSegmented => write!(f, "pre-segmented"),
        }
    }
}

/// One sentence of a document. `char_span` holds byte offsets of the trimmed
/// sentence in the source text (for structured input: in the concatenation of
/// its prose blocks).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Sentence {
    pub index: usize,
    pub text: String,
    pub char_span: (usize, usize),
    pub word_count: usize,
}

/// An ordered, indexed sentence list; the unit of summarization.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Document {
    pub id: String,
    pub title: Option<String>,
    pub sentences: Vec<Sentence>,
    pub source_format: SourceFormat,
}

impl Document {
    pub fn sentence_count(&self) -> usize {
        self.sentences.len()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum BlockKind {
    Prose,
    Figure,
    Table,
}

/// A tagged region of structured input.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Block {
    pub kind: BlockKind,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
    pub text: String,
}

/// The structured-json input layout.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct StructuredDocument {
    pub id: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub title: Option<String>,
    pub blocks: Vec<Block>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum DocumentError {
    InvalidUtf8,
    EmptyDocument,
    MalformedStructured(String),
}

impl fmt::Display for DocumentError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DocumentError::InvalidUtf8 => write!(f, "input is not valid UTF-8"),
            DocumentError::EmptyDocument => {
                write!(f, "document has no sentences after preprocessing")
            }
            DocumentError::MalformedStructured(msg) => {
                write!(f, "malformed structured input: {msg}")
            }
        }
    }
}

impl core::error::Error for DocumentError {}

/// Sentence-boundary exceptions: a period after any of these tokens does not
/// end a sentence. Entries are normalized to their last whitespace-separated
/// word, lowercased, with the trailing period removed ("et al." -> "al").
#[derive(Clone, Debug, Default)]
pub struct AbbreviationList {
    entries: BTreeSet<String>,
}

impl AbbreviationList {
    /// The list bundled with the crate.
    pub fn bundled() -> AbbreviationList {
        Self::parse(include_str!("../data/abbreviations.txt"))
    }

    /// Parses a one-abbreviation-per-line listing.
    pub fn parse(text: &str) -> AbbreviationList {
        let entries = text
            .lines()
            .map(str::trim)
            .filter(|l| !l.is_empty())
            .map(normalize_abbrev)
            .collect();
        AbbreviationList { entries }
    }

    fn matches(&self, token: &str) -> bool {
        self.entries.contains(&normalize_abbrev(token))
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }
}

fn normalize_abbrev(entry: &str) -> String {
    let last = entry.split_whitespace().next_back().unwrap_or(entry);
    last.trim_end_matches('.').to_lowercase()
}

/// Splits `text` into sentences. A boundary is terminal punctuation (. ! ?)
/// followed by whitespace and then an uppercase letter or digit; a period is
/// ignored when the preceding token is a known abbreviation. Text without any
/// boundary is a single sentence.
pub fn segment_sentences(text: &str, abbreviations: &AbbreviationList) -> Vec<Sentence> {
    let mut sentences = Vec::new();
    let mut start: Option<usize> = None;

    for (pos, ch) in text.char_indices() {
        if start.is_none() {
            if !ch.is_whitespace() {
                start = Some(pos);
            }
            continue;
        }
        if !matches!(ch, '.' | '!' | '?') {
            continue;
        }
        let punct_end = pos + ch.len_utf8();
        if !is_boundary_after(&text[punct_end..]) {
            continue;
        }
        if ch == '.' && abbreviations.matches(token_before(text, start.unwrap(), pos)) {
            continue;
        }
        let span = (start.unwrap(), punct_end);
        sentences.push(make_sentence(sentences.len(), &text[span.0..span.1], span));
        start = None;
    }

    if let Some(s) = start {
        let trimmed = text[s..].trim_end();
        if !trimmed.is_empty() {
            let span = (s, s + trimmed.len());
            sentences.push(make_sentence(sentences.len(), trimmed, span));
        }
    }
    sentences
}

fn is_boundary_after(rest: &str) -> bool {
    let mut chars = rest.chars();
    match chars.next() {
        Some(c) if c.is_whitespace() => {}
        _ => return false,
    }
    for c in chars {
        if c.is_whitespace() {
            continue;
        }
        return c.is_uppercase() || c.is_ascii_digit();
    }
    false
}

/// The token immediately before byte `pos`, with leading punctuation peeled
/// off so "(Fig." checks as "Fig.".
fn token_before<'a>(text: &'a str, sentence_start: usize, pos: usize) -> &'a str {
    let upto = &text[sentence_start..pos];
    let token_start = upto
        .rfind(|c: char| c.is_whitespace())
        .map(|i| i + 1)
        .unwrap_or(0);
    let token = &upto[token_start..];
    token.trim_start_matches(|c: char| !c.is_alphanumeric())
}

fn make_sentence(index: usize, text: &str, char_span: (usize, usize)) -> Sentence {
    Sentence {
        index,
        text: text.to_owned(),
        char_span,
        word_count: text.split_whitespace().count(),
    }
}

/// Removes figure and table blocks, returning the retained document and the
/// removed blocks for reporting. Untagged (prose-only) input passes through
/// unchanged.
pub fn strip_nonprose(doc: StructuredDocument) -> (StructuredDocument, Vec<Block>) {
    let mut kept = Vec::new();
    let mut removed = Vec::new();
    for block in doc.blocks {
        match block.kind {
            BlockKind::Prose => kept.push(block),
            BlockKind::Figure | BlockKind::Table => removed.push(block),
        }
    }
    (
        StructuredDocument {
            id: doc.id,
            title: doc.title,
            blocks: kept,
        },
        removed,
    )
}

/// Parses raw bytes into a [`Document`] using the bundled abbreviation list.
///
/// Structured input is stripped of figure/table blocks and its prose block
/// texts are concatenated in file order before segmentation. Pre-segmented
/// input takes one sentence per non-blank line.
pub fn parse_document(raw: &[u8], format: SourceFormat) -> Result<Document, DocumentError> {
    parse_document_with(raw, format, &AbbreviationList::bundled())
}

/// [`parse_document`] with a caller-supplied abbreviation list.
pub fn parse_document_with(
    raw: &[u8],
    format: SourceFormat,
    abbreviations: &AbbreviationList,
) -> Result<Document, DocumentError> {
    let text = core::str::from_utf8(raw).map_err(|_| DocumentError::InvalidUtf8)?;
    let doc = match format {
        SourceFormat::Plain => Document {
            id: String::new(),
            title: None,
            sentences: segment_sentences(text, abbreviations),
            source_format: format,
        },
        SourceFormat::PreSegmented => Document {
            id: String::new(),
            title: None,
            sentences: presegmented_sentences(text),
            source_format: format,
        },
        SourceFormat::StructuredJson => {
            let structured: StructuredDocument = serde_json::from_str(text)
                .map_err(|e| DocumentError::MalformedStructured(e.to_string()))?;
            let (kept, _removed) = strip_nonprose(structured);
            document_from_structured(&kept, abbreviations)
        }
    };
    if doc.sentences.is_empty() {
        return Err(DocumentError::EmptyDocument);
    }
    Ok(doc)
}

/// Builds a [`Document`] from already-stripped structured input.
pub fn document_from_structured(
    doc: &StructuredDocument,
    abbreviations: &AbbreviationList,
) -> Document {
    let mut text = String::new();
    for block in &doc.blocks {
        let body = block.text.trim();
        if body.is_empty() {
            continue;
        }
        if !text.is_empty() {
            text.push(' ');
        }
        text.push_str(body);
    }
    Document {
        id: doc.id.clone(),
        title: doc.title.clone(),
        sentences: segment_sentences(&text, abbreviations),
        source_format: SourceFormat::StructuredJson,
    }
}

fn presegmented_sentences(text: &str) -> Vec<Sentence> {
    let mut sentences = Vec::new();
    let mut offset = 0;
    for line in text.split('\n') {
        let line_start = offset;
        offset += line.len() + 1;
        let trimmed = line.trim_end_matches('\r').trim();
        if trimmed.is_empty() {
            continue;
        }
        let leading = line.len() - line.trim_start().len();
        let start = line_start + leading;
        let span = (start, start + trimmed.len());
        sentences.push(make_sentence(sentences.len(), trimmed, span));
    }
    sentences
}
