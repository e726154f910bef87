//! ROUGE properties: score bounds, identity, containment, the recall /
//! precision transpose relation, the skip-unit counting formula, and
//! agreement with an independently written weighted-LCS reference.

use proptest::prelude::*;

use itemsum_core::rouge::{rouge_n, rouge_su, rouge_w, RougeMetric, TokenSequence};

fn token() -> impl Strategy<Value = String> {
    prop::sample::select(vec!["a", "b", "c", "d", "e", "f", "g"]).prop_map(str::to_string)
}

fn tokens(max_len: usize) -> impl Strategy<Value = Vec<String>> {
    proptest::collection::vec(token(), 1..=max_len)
}

fn seq(tokens: Vec<String>) -> TokenSequence {
    TokenSequence {
        tokens,
    }
}

/// Reference weighted-LCS written as a plain recursive definition with
/// memoization over (i, j, run-length bookkeeping by table pairs).
fn reference_wlcs(x: &[String], y: &[String], weight: f64) -> f64 {
    fn f(k: usize, w: f64) -> f64 {
        (k as f64).powf(w)
    }
    let (m, n) = (x.len(), y.len());
    let mut c = vec![vec![0.0f64; n + 1]; m + 1];
    let mut w_table = vec![vec![0usize; n + 1]; m + 1];
    for i in 1..=m {
        for j in 1..=n {
            if x[i - 1] == y[j - 1] {
                let k = w_table[i - 1][j - 1];
                c[i][j] = c[i - 1][j - 1] + f(k + 1, weight) - f(k, weight);
                w_table[i][j] = k + 1;
            } else {
                c[i][j] = c[i - 1][j].max(c[i][j - 1]);
                w_table[i][j] = 0;
            }
        }
    }
    c[m][n]
}

fn reference_rouge_w_recall(system: &[String], model: &[String], weight: f64) -> f64 {
    let wlcs = reference_wlcs(model, system, weight);
    let denom = (model.len() as f64).powf(weight);
    (wlcs / denom).powf(1.0 / weight)
}

proptest! {
    #[test]
    fn every_component_is_bounded(sys in tokens(12), model in tokens(12)) {
        let s = seq(sys);
        let m = seq(model);
        for score in [
            rouge_n(&s, &m, 1).unwrap(),
            rouge_n(&s, &m, 2).unwrap(),
            rouge_w(&s, &m, 1.2).unwrap(),
            rouge_su(&s, &m, 4).unwrap(),
        ] {
            prop_assert!((0.0..=1.0).contains(&score.recall));
            prop_assert!((0.0..=1.0).contains(&score.precision));
            prop_assert!((0.0..=1.0).contains(&score.f1));
        }
    }

    #[test]
    fn self_comparison_is_always_one(text in tokens(12)) {
        let s = seq(text.clone());
        let m = seq(text);
        prop_assert_eq!(rouge_n(&s, &m, 1).unwrap().f1, 1.0);
        prop_assert!((rouge_w(&s, &m, 1.2).unwrap().recall - 1.0).abs() < 1e-12);
        prop_assert_eq!(rouge_su(&s, &m, 4).unwrap().recall, 1.0);
    }

    #[test]
    fn contained_system_has_unit_unigram_precision(
        model in tokens(12),
        take in proptest::collection::vec(any::<prop::sample::Index>(), 1..6),
    ) {
        // system tokens drawn from the model multiset (without replacement)
        let mut pool = model.clone();
        let mut sys = Vec::new();
        for idx in take {
            if pool.is_empty() {
                break;
            }
            sys.push(pool.remove(idx.index(pool.len())));
        }
        prop_assume!(!sys.is_empty());
        let r = rouge_n(&seq(sys), &seq(model), 1).unwrap();
        prop_assert_eq!(r.precision, 1.0);
    }

    #[test]
    fn recall_and_precision_transpose(a in tokens(12), b in tokens(12)) {
        for n in [1usize, 2] {
            let fwd = rouge_n(&seq(a.clone()), &seq(b.clone()), n).unwrap();
            let rev = rouge_n(&seq(b.clone()), &seq(a.clone()), n).unwrap();
            prop_assert_eq!(fwd.recall, rev.precision);
            prop_assert_eq!(fwd.precision, rev.recall);
        }
    }

    #[test]
    fn wlcs_matches_the_reference_program(sys in tokens(10), model in tokens(10)) {
        let got = rouge_w(&seq(sys.clone()), &seq(model.clone()), 1.2).unwrap();
        let want = reference_rouge_w_recall(&sys, &model, 1.2);
        prop_assert!((got.recall - want).abs() < 1e-9);
    }
}

/// A length-L text with distinct tokens has L + sum_i min(max_skip+1, L-1-i)
/// SU counting units; recovered through the precision of a single-token
/// model.
#[test]
fn su_unit_count_follows_the_combinatorial_formula() {
    let alphabet = ["t0", "t1", "t2", "t3", "t4", "t5", "t6", "t7", "t8", "t9"];
    for len in 1..=10usize {
        let text: Vec<String> = alphabet[..len].iter().map(|s| s.to_string()).collect();
        let expected: usize =
            len + (0..len).map(|i| (4usize + 1).min(len - 1 - i)).sum::<usize>();
        let model = seq(vec![text[0].clone()]);
        let r = rouge_su(&seq(text), &model, 4).unwrap();
        // exactly one system unit (the unigram t0) matches the model's unit
        let total_units = (1.0 / r.precision).round() as usize;
        assert_eq!(total_units, expected, "length {len}");
    }
}
