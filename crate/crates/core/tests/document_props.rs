//! Segmentation and parsing properties: reconstruction, round-trip counts,
//! strip idempotence, and byte determinism.

use proptest::prelude::*;

use itemsum_core::document::{
    parse_document, segment_sentences, strip_nonprose, AbbreviationList, Block, BlockKind,
    SourceFormat, StructuredDocument,
};

fn word() -> impl Strategy<Value = String> {
    prop_oneof![
        4 => prop::sample::select(vec![
            "autism", "risk", "genetic", "studies", "overlap", "deletion", "variant",
            "schizophrenia", "evidence", "cohort", "allele", "protein",
        ]).prop_map(str::to_string),
        1 => prop::sample::select(vec!["Fig.", "e.g.", "et al.", "approx."]).prop_map(str::to_string),
    ]
}

fn sentence_text() -> impl Strategy<Value = String> {
    (
        proptest::collection::vec(word(), 1..8),
        prop::sample::select(vec![".", "!", "?"]),
    )
        .prop_map(|(words, punct)| {
            let mut text = words.join(" ");
            // capitalize the head so the next boundary check sees an
            // uppercase start
            let mut chars = text.chars();
            if let Some(first) = chars.next() {
                text = first.to_uppercase().collect::<String>() + chars.as_str();
            }
            text.push_str(punct);
            text
        })
}

fn text_strategy() -> impl Strategy<Value = String> {
    proptest::collection::vec(sentence_text(), 1..10).prop_map(|s| s.join(" "))
}

fn block_strategy() -> impl Strategy<Value = Block> {
    (
        prop::sample::select(vec![BlockKind::Prose, BlockKind::Figure, BlockKind::Table]),
        text_strategy(),
    )
        .prop_map(|(kind, text)| Block {
            kind,
            name: None,
            text,
        })
}

proptest! {
    #[test]
    fn spans_tile_the_text(text in text_strategy()) {
        let abbrevs = AbbreviationList::bundled();
        let sentences = segment_sentences(&text, &abbrevs);
        let mut prev_end = 0;
        for s in &sentences {
            let (start, end) = s.char_span;
            prop_assert!(start >= prev_end);
            prop_assert!(text[prev_end..start].trim().is_empty());
            prop_assert_eq!(&text[start..end], s.text.as_str());
            prop_assert_eq!(s.word_count, s.text.split_whitespace().count());
            prev_end = end;
        }
        prop_assert!(text[prev_end..].trim().is_empty());
    }

    #[test]
    fn rejoining_preserves_the_sentence_count(text in text_strategy()) {
        let abbrevs = AbbreviationList::bundled();
        let first = segment_sentences(&text, &abbrevs);
        let joined = first
            .iter()
            .map(|s| s.text.as_str())
            .collect::<Vec<_>>()
            .join(" ");
        let second = segment_sentences(&joined, &abbrevs);
        prop_assert_eq!(first.len(), second.len());
    }

    #[test]
    fn strip_nonprose_is_idempotent(blocks in proptest::collection::vec(block_strategy(), 0..6)) {
        let doc = StructuredDocument { id: "d".into(), title: None, blocks };
        let (once, removed) = strip_nonprose(doc);
        let (twice, removed_again) = strip_nonprose(once.clone());
        prop_assert_eq!(once, twice);
        prop_assert!(removed_again.is_empty());
        let _ = removed;
    }

    #[test]
    fn parsing_is_byte_deterministic(text in text_strategy()) {
        let a = parse_document(text.as_bytes(), SourceFormat::Plain);
        let b = parse_document(text.as_bytes(), SourceFormat::Plain);
        prop_assert_eq!(a, b);
    }

    #[test]
    fn indices_are_contiguous_and_texts_nonempty(text in text_strategy()) {
        if let Ok(doc) = parse_document(text.as_bytes(), SourceFormat::Plain) {
            for (k, s) in doc.sentences.iter().enumerate() {
                prop_assert_eq!(s.index, k);
                prop_assert!(!s.text.trim().is_empty());
            }
        }
    }
}
