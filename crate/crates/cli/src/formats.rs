//! File loading: documents in their three formats, JSON-lines concept
//! annotations, word lists, and model summaries.

use std::path::Path;

use itemsum_core::annotation::{parse_annotations, BlockedTypes, ConceptAnnotation, StopwordList};
use itemsum_core::document::{
    document_from_structured, parse_document, strip_nonprose, AbbreviationList, Document,
    DocumentError, SourceFormat, StructuredDocument,
};

use crate::error::AppError;

/// Infers the input format from the file extension: `.json` is structured,
/// `.lines` is pre-segmented, anything else is plain text.
pub fn detect_format(path: &Path) -> SourceFormat {
    match path.extension().and_then(|e| e.to_str()) {
        Some("json") => SourceFormat::StructuredJson,
        Some("lines") => SourceFormat::PreSegmented,
        _ => SourceFormat::Plain,
    }
}

/// The document id carried by a path: the file stem with a trailing `.doc`,
/// `.summary`, or `.model` marker removed.
pub fn doc_id_from_path(path: &Path) -> String {
    let stem = path
        .file_stem()
        .and_then(|s| s.to_str())
        .unwrap_or("document");
    for marker in [".doc", ".summary", ".model", ".annotations"] {
        if let Some(prefix) = stem.strip_suffix(marker) {
            return prefix.to_string();
        }
    }
    stem.to_string()
}

/// Reads and parses a document. Returns the document and the number of
/// figure/table blocks stripped (always zero outside the structured format).
/// A document with an empty id inherits one from its path.
pub fn load_document(
    path: &Path,
    format_override: Option<SourceFormat>,
) -> Result<(Document, usize), AppError> {
    let format = format_override.unwrap_or_else(|| detect_format(path));
    let raw = std::fs::read(path)
        .map_err(|e| AppError::data(format!("{}: {e}", path.display())))?;
    let abbreviations = AbbreviationList::bundled();
    let (mut doc, removed) = match format {
        SourceFormat::StructuredJson => {
            let text = std::str::from_utf8(&raw).map_err(|_| {
                AppError::data(format!("{}: {}", path.display(), DocumentError::InvalidUtf8))
            })?;
            let structured: StructuredDocument = serde_json::from_str(text).map_err(|e| {
                AppError::data(format!(
                    "{}: {}",
                    path.display(),
                    DocumentError::MalformedStructured(e.to_string())
                ))
            })?;
            let (kept, removed) = strip_nonprose(structured);
            let doc = document_from_structured(&kept, &abbreviations);
            if doc.sentences.is_empty() {
                return Err(AppError::data(format!(
                    "{}: {}",
                    path.display(),
                    DocumentError::EmptyDocument
                )));
            }
            (doc, removed.len())
        }
        other => {
            let doc = parse_document(&raw, other)
                .map_err(|e| AppError::data(format!("{}: {e}", path.display())))?;
            (doc, 0)
        }
    };
    if doc.id.is_empty() {
        doc.id = doc_id_from_path(path);
    }
    Ok((doc, removed))
}

/// Loads JSON-lines concept annotations from a file.
pub fn load_concept_annotations(path: &Path) -> Result<Vec<ConceptAnnotation>, AppError> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| AppError::data(format!("{}: {e}", path.display())))?;
    parse_annotations(&text).map_err(|e| AppError::data(format!("{}: {e}", path.display())))
}

/// Loads a stop-word list, or the bundled one when no path is given.
pub fn load_stopwords(path: Option<&Path>) -> Result<StopwordList, AppError> {
    match path {
        None => Ok(StopwordList::bundled()),
        Some(p) => {
            let text = std::fs::read_to_string(p)
                .map_err(|e| AppError::data(format!("{}: {e}", p.display())))?;
            Ok(StopwordList::parse(&text))
        }
    }
}

/// Loads a blocked-semantic-type list, or the bundled nine.
pub fn load_blocked_types(path: Option<&Path>) -> Result<BlockedTypes, AppError> {
    match path {
        None => Ok(BlockedTypes::bundled()),
        Some(p) => {
            let text = std::fs::read_to_string(p)
                .map_err(|e| AppError::data(format!("{}: {e}", p.display())))?;
            Ok(BlockedTypes::parse(&text))
        }
    }
}

pub fn load_text(path: &Path) -> Result<String, AppError> {
    std::fs::read_to_string(path).map_err(|e| AppError::data(format!("{}: {e}", path.display())))
}

pub fn write_file(path: &Path, contents: &str) -> Result<(), AppError> {
    if let Some(parent) = path.parent() {
        std::fs::create_dir_all(parent)
            .map_err(|e| AppError::data(format!("{}: {e}", parent.display())))?;
    }
    std::fs::write(path, contents)
        .map_err(|e| AppError::data(format!("{}: {e}", path.display())))
}
