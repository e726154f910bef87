//! Porter suffix-stripping stemmer (the classic 1980 formulation).
//!
//! Words are processed as lowercase ASCII. Tokens that are not purely
//! ASCII-alphabetic, or are shorter than three characters, are returned
//! unchanged; the stemmer's rules are only defined over English letter
//! sequences.

use alloc::string::String;
use alloc::vec::Vec;

/// Stems a single token. The input is lowercased first.
pub fn porter_stem(word: &str) -> String {
    let lower = word.to_lowercase();
    if lower.len() <= 2 || !lower.bytes().all(|b| b.is_ascii_lowercase()) {
        return lower;
    }
    let mut buf: Vec<u8> = lower.into_bytes();
    step1a(&mut buf);
    step1b(&mut buf);
    step1c(&mut buf);
    step2(&mut buf);
    step3(&mut buf);
    step4(&mut buf);
    step5a(&mut buf);
    step5b(&mut buf);
    String::from_utf8(buf).expect("stemmer operates on ASCII")
}

/// True if `w[i]` acts as a consonant. A 'y' is a consonant when it starts
/// the word or follows a vowel.
fn is_consonant(w: &[u8], i: usize) -> bool {
    match w[i] {
        b'a' | b'e' | b'i' | b'o' | b'u' => false,
        b'y' => i == 0 || !is_consonant(w, i - 1),
        _ => true,
    }
}

/// The measure m of `w`: the number of vowel-consonant transitions in the
/// form [C](VC)^m[V].
fn measure(w: &[u8]) -> usize {
    let mut m = 0;
    let mut prev_vowel = false;
    for i in 0..w.len() {
        let cons = is_consonant(w, i);
        if prev_vowel && cons {
            m += 1;
        }
        prev_vowel = !cons;
    }
    m
}

fn contains_vowel(w: &[u8]) -> bool {
    (0..w.len()).any(|i| !is_consonant(w, i))
}

/// *d: ends with a double consonant.
fn ends_double_consonant(w: &[u8]) -> bool {
    let n = w.len();
    n >= 2 && w[n - 1] == w[n - 2] && is_consonant(w, n - 1)
}

/// *o: ends consonant-vowel-consonant where the final consonant is not
/// w, x, or y.
fn ends_cvc(w: &[u8]) -> bool {
    let n = w.len();
    if n < 3 {
        return false;
    }
    is_consonant(w, n - 1)
        && !is_consonant(w, n - 2)
        && is_consonant(w, n - 3)
        && !matches!(w[n - 1], b'w' | b'x' | b'y')
}

fn ends_with(w: &[u8], suffix: &[u8]) -> bool {
    w.len() >= suffix.len() && &w[w.len() - suffix.len()..] == suffix
}

fn replace_suffix(w: &mut Vec<u8>, suffix: &[u8], replacement: &[u8]) {
    let keep = w.len() - suffix.len();
    w.truncate(keep);
    w.extend_from_slice(replacement);
}

fn step1a(w: &mut Vec<u8>) {
    if ends_with(w, b"sses") {
        replace_suffix(w, b"sses", b"ss");
    } else if ends_with(w, b"ies") {
        replace_suffix(w, b"ies", b"i");
    } else if !ends_with(w, b"ss") && ends_with(w, b"s") {
        w.truncate(w.len() - 1);
    }
}

fn step1b(w: &mut Vec<u8>) {
    if ends_with(w, b"eed") {
        if measure(&w[..w.len() - 3]) > 0 {
            w.truncate(w.len() - 1);
        }
        return;
    }
    let stripped = if ends_with(w, b"ed") && contains_vowel(&w[..w.len() - 2]) {
        w.truncate(w.len() - 2);
        true
    } else if ends_with(w, b"ing") && contains_vowel(&w[..w.len() - 3]) {
        w.truncate(w.len() - 3);
        true
    } else {
        false
    };
    if !stripped {
        return;
    }
    if ends_with(w, b"at") || ends_with(w, b"bl") || ends_with(w, b"iz") {
        w.push(b'e');
    } else if ends_double_consonant(w) && !matches!(w[w.len() - 1], b'l' | b's' | b'z') {
        w.truncate(w.len() - 1);
    } else if measure(w) == 1 && ends_cvc(w) {
        w.push(b'e');
    }
}

fn step1c(w: &mut Vec<u8>) {
    if ends_with(w, b"y") && contains_vowel(&w[..w.len() - 1]) {
        let n = w.len();
        w[n - 1] = b'i';
    }
}

/// Longest-suffix-first rule tables for steps 2-4. Only the first matching
/// suffix is considered; if its condition fails the step does nothing.
const STEP2_RULES: &[(&[u8], &[u8])] = &[
    (b"ational", b"ate"),
    (b"ization", b"ize"),
    (b"iveness", b"ive"),
    (b"fulness", b"ful"),
    (b"ousness", b"ous"),
    (b"tional", b"tion"),
    (b"biliti", b"ble"),
    (b"ousli", b"ous"),
    (b"entli", b"ent"),
    (b"ation", b"ate"),
    (b"alism", b"al"),
    (b"aliti", b"al"),
    (b"iviti", b"ive"),
    (b"enci", b"ence"),
    (b"anci", b"ance"),
    (b"izer", b"ize"),
    (b"abli", b"able"),
    (b"alli", b"al"),
    (b"ator", b"ate"),
    (b"eli", b"e"),
];

const STEP3_RULES: &[(&[u8], &[u8])] = &[
    (b"icate", b"ic"),
    (b"ative", b""),
    (b"alize", b"al"),
    (b"iciti", b"ic"),
    (b"ical", b"ic"),
    (b"ness", b""),
    (b"ful", b""),
];

const STEP4_SUFFIXES: &[&[u8]] = &[
    b"ement", b"ance", b"ence", b"able", b"ible", b"ment", b"ant", b"ent", b"ion", b"ism",
    b"ate", b"iti", b"ous", b"ive", b"ize", b"al", b"er", b"ic", b"ou",
];

fn apply_rules(w: &mut Vec<u8>, rules: &[(&[u8], &[u8])]) {
    for (suffix, replacement) in rules {
        if ends_with(w, suffix) {
            if measure(&w[..w.len() - suffix.len()]) > 0 {
                replace_suffix(w, suffix, replacement);
            }
            return;
        }
    }
}

fn step2(w: &mut Vec<u8>) {
    apply_rules(w, STEP2_RULES);
}

fn step3(w: &mut Vec<u8>) {
    apply_rules(w, STEP3_RULES);
}

fn step4(w: &mut Vec<u8>) {
    for suffix in STEP4_SUFFIXES {
        if ends_with(w, suffix) {
            let stem_len = w.len() - suffix.len();
            let stem = &w[..stem_len];
            let ion_ok = *suffix != b"ion"
                || (stem_len >= 1 && matches!(stem[stem_len - 1], b's' | b't'));
            if measure(stem) > 1 && ion_ok {
                w.truncate(stem_len);
            }
            return;
        }
    }
}

fn step5a(w: &mut Vec<u8>) {
    if !ends_with(w, b"e") {
        return;
    }
    let stem = &w[..w.len() - 1];
    let m = measure(stem);
    if m > 1 || (m == 1 && !ends_cvc(stem)) {
        w.truncate(w.len() - 1);
    }
}

fn step5b(w: &mut Vec<u8>) {
    if ends_with(w, b"l") && ends_double_consonant(w) && measure(w) > 1 {
        w.truncate(w.len() - 1);
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const VOCAB: &str = include_str!("../data/porter_vocab.txt");

    fn vocab_pairs() -> impl Iterator<Item = (&'static str, &'static str)> {
        VOCAB
            .lines()
            .map(str::trim)
            .filter(|l| !l.is_empty() && !l.starts_with('#'))
            .map(|l| {
                let mut parts = l.split_whitespace();
                (parts.next().unwrap(), parts.next().unwrap())
            })
    }

    #[test]
    fn vocabulary_pairs_stem_as_expected() {
        for (word, expected) in vocab_pairs() {
            assert_eq!(porter_stem(word), expected, "word {word:?}");
        }
    }

    #[test]
    fn stemming_is_idempotent_on_vocabulary_stems() {
        for (_, stem) in vocab_pairs() {
            assert_eq!(porter_stem(stem), stem, "stem {stem:?} is not a fixed point");
        }
    }

    /// These stems are themselves stemmable ("agre" -> "agr", "decis" ->
    /// "deci", ...), so the words live here rather than in the bundled
    /// fixed-point vocabulary.
    #[test]
    fn non_fixed_point_words_still_stem_correctly() {
        assert_eq!(porter_stem("agreed"), "agre");
        assert_eq!(porter_stem("cease"), "ceas");
        assert_eq!(porter_stem("decisiveness"), "decis");
        assert_eq!(porter_stem("defensible"), "defens");
        assert_eq!(porter_stem("callousness"), "callous");
    }

    #[test]
    fn short_and_nonalpha_tokens_pass_through() {
        assert_eq!(porter_stem("as"), "as");
        assert_eq!(porter_stem("be"), "be");
        assert_eq!(porter_stem("5ht2a"), "5ht2a");
        assert_eq!(porter_stem("naïve"), "naïve");
    }

    #[test]
    fn uppercase_input_is_lowercased() {
        assert_eq!(porter_stem("Running"), "run");
        assert_eq!(porter_stem("STUDIES"), "studi");
    }
}
