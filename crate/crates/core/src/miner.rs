//! Frequent-itemset mining with Apriori: level-wise candidate generation with
//! prefix join and subset pruning.
//!
//! Support values are exact `count/total` fractions and every threshold
//! comparison cross-multiplies integers; rounded decimals appear only in
//! display output. Association-rule generation is deliberately absent.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::string::String;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;

use serde::Serialize;

use crate::fraction::Fraction;
use crate::transactions::TransactionSet;

/// Exact support: the number of covered transactions over the total.
/// Deliberately kept unreduced so dumps preserve the raw counts.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SupportFraction {
    pub count: u64,
    pub total: u64,
}

impl SupportFraction {
    pub fn new(count: u64, total: u64) -> SupportFraction {
        assert!(total > 0, "support total must be positive");
        assert!(count <= total, "support count cannot exceed total");
        SupportFraction { count, total }
    }

    /// The reduced rational value.
    pub fn value(&self) -> Fraction {
        Fraction::new(self.count, self.total)
    }

    /// True when `count/total >= min_sup`, compared exactly.
    pub fn meets(&self, min_sup: Fraction) -> bool {
        self.count as u128 * min_sup.denom() as u128
            >= min_sup.numer() as u128 * self.total as u128
    }

    pub fn as_f64(&self) -> f64 {
        self.count as f64 / self.total as f64
    }

    /// Display value truncated to three decimals (0.10588... -> "0.105"),
    /// matching the convention of the support tables this tool prints.
    pub fn display_truncated(&self) -> String {
        let milli = self.count as u128 * 1000 / self.total as u128;
        alloc::format!("{}.{:03}", milli / 1000, milli % 1000)
    }

    /// The truncated display value as a float, for JSON dumps.
    pub fn display_value(&self) -> f64 {
        let milli = self.count as u128 * 1000 / self.total as u128;
        milli as f64 / 1000.0
    }
}

impl PartialOrd for SupportFraction {
    fn partial_cmp(&self, other: &SupportFraction) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for SupportFraction {
    fn cmp(&self, other: &SupportFraction) -> Ordering {
        let lhs = self.count as u128 * other.total as u128;
        let rhs = other.count as u128 * self.total as u128;
        lhs.cmp(&rhs)
    }
}

impl fmt::Display for SupportFraction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.count, self.total)
    }
}

/// A frequent itemset: lexicographically sorted item keys plus exact support.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FrequentItemset {
    pub items: Vec<String>,
    pub support: SupportFraction,
}

/// Mining parameters. `min_sup` must lie in (0, 1]; `max_itemset_size` caps
/// the level-wise search when set.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MinerConfig {
    pub min_sup: Fraction,
    pub max_itemset_size: Option<usize>,
}

impl MinerConfig {
    pub fn new(min_sup: Fraction) -> Result<MinerConfig, MinerError> {
        if min_sup.is_zero() || min_sup > Fraction::ONE {
            return Err(MinerError::InvalidMinSup);
        }
        Ok(MinerConfig {
            min_sup,
            max_itemset_size: None,
        })
    }

    pub fn with_max_size(mut self, max: usize) -> MinerConfig {
        self.max_itemset_size = Some(max);
        self
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum MinerError {
    EmptyItemset,
    InvalidMinSup,
}

impl fmt::Display for MinerError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MinerError::EmptyItemset => write!(f, "itemset must not be empty"),
            MinerError::InvalidMinSup => write!(f, "min_sup must lie in (0, 1]"),
        }
    }
}

impl core::error::Error for MinerError {}

/// Exact support of `itemset`: the number of transactions whose item set is a
/// superset, over the transaction total.
pub fn support(
    itemset: &BTreeSet<String>,
    ts: &TransactionSet,
) -> Result<SupportFraction, MinerError> {
    if itemset.is_empty() {
        return Err(MinerError::EmptyItemset);
    }
    let count = ts
        .transactions
        .iter()
        .filter(|t| itemset.iter().all(|i| t.items.contains(i)))
        .count() as u64;
    Ok(SupportFraction::new(count, ts.total as u64))
}

/// True iff `itemset` is frequent at `min_sup`, under exact comparison.
pub fn is_frequent(
    itemset: &BTreeSet<String>,
    ts: &TransactionSet,
    min_sup: Fraction,
) -> Result<bool, MinerError> {
    Ok(support(itemset, ts)?.meets(min_sup))
}

/// Mines all frequent itemsets, level-wise. The result is in canonical order:
/// descending support, then ascending lexicographic items.
pub fn apriori(ts: &TransactionSet, config: &MinerConfig) -> Vec<FrequentItemset> {
    let universe: Vec<&String> = ts.item_universe.iter().collect();
    let total = ts.total as u64;
    if total == 0 || universe.is_empty() {
        return Vec::new();
    }
    let key_to_id: BTreeMap<&str, u32> = universe
        .iter()
        .enumerate()
        .map(|(id, key)| (key.as_str(), id as u32))
        .collect();
    // ids are assigned in key order, so sorted id vectors are sorted key
    // vectors
    let transactions: Vec<Vec<u32>> = ts
        .transactions
        .iter()
        .map(|t| t.items.iter().map(|k| key_to_id[k.as_str()]).collect())
        .collect();

    let meets = |count: u64| -> bool {
        count as u128 * config.min_sup.denom() as u128
            >= config.min_sup.numer() as u128 * total as u128
    };

    let mut result: Vec<(Vec<u32>, u64)> = Vec::new();

    // level 1
    let mut counts = alloc::vec![0u64; universe.len()];
    for t in &transactions {
        for &id in t {
            counts[id as usize] += 1;
        }
    }
    let mut level: Vec<Vec<u32>> = Vec::new();
    for (id, &count) in counts.iter().enumerate() {
        if meets(count) {
            level.push(alloc::vec![id as u32]);
            result.push((alloc::vec![id as u32], count));
        }
    }

    let mut size = 1;
    while !level.is_empty() {
        size += 1;
        if config.max_itemset_size.is_some_and(|max| size > max) {
            break;
        }
        let prev: BTreeSet<&[u32]> = level.iter().map(Vec::as_slice).collect();
        let mut next = Vec::new();
        // join step: pairs sharing a (k-2)-prefix, in lexicographic order
        for i in 0..level.len() {
            for j in (i + 1)..level.len() {
                let (a, b) = (&level[i], &level[j]);
                if a[..size - 2] != b[..size - 2] {
                    break;
                }
                let mut candidate = a.clone();
                candidate.push(b[size - 2]);
                if prune(&candidate, &prev) {
                    continue;
                }
                let count = transactions
                    .iter()
                    .filter(|t| is_subset(&candidate, t))
                    .count() as u64;
                if meets(count) {
                    next.push((candidate, count));
                }
            }
        }
        level = next.iter().map(|(c, _)| c.clone()).collect();
        result.extend(next);
    }

    let mut out: Vec<FrequentItemset> = result
        .into_iter()
        .map(|(ids, count)| FrequentItemset {
            items: ids.iter().map(|&id| universe[id as usize].clone()).collect(),
            support: SupportFraction::new(count, total),
        })
        .collect();
    out.sort_by(|a, b| {
        b.support
            .cmp(&a.support)
            .then_with(|| a.items.cmp(&b.items))
    });
    out
}

/// True when some (k-1)-subset of `candidate` is not frequent.
fn prune(candidate: &[u32], prev: &BTreeSet<&[u32]>) -> bool {
    let mut subset = Vec::with_capacity(candidate.len() - 1);
    for skip in 0..candidate.len() {
        subset.clear();
        subset.extend(
            candidate
                .iter()
                .enumerate()
                .filter(|(i, _)| *i != skip)
                .map(|(_, &v)| v),
        );
        if !prev.contains(subset.as_slice()) {
            return true;
        }
    }
    false
}

/// Two-pointer subset test over sorted id slices.
fn is_subset(needle: &[u32], haystack: &[u32]) -> bool {
    let mut it = haystack.iter();
    'outer: for &n in needle {
        for &h in it.by_ref() {
            match h.cmp(&n) {
                Ordering::Equal => continue 'outer,
                Ordering::Greater => return false,
                Ordering::Less => {}
            }
        }
        return false;
    }
    true
}

/// Canonical JSON dump of mined itemsets: an array of
/// `{"items": […], "count": …, "total": …, "support": …}` in the miner's
/// output order. `support` is the truncated display value; `count`/`total`
/// carry the exact fraction.
pub fn itemsets_to_json(itemsets: &[FrequentItemset]) -> String {
    #[derive(Serialize)]
    struct Entry<'a> {
        items: &'a [String],
        count: u64,
        total: u64,
        support: f64,
    }
    let entries: Vec<Entry<'_>> = itemsets
        .iter()
        .map(|fi| Entry {
            items: &fi.items,
            count: fi.support.count,
            total: fi.support.total,
            support: fi.support.display_value(),
        })
        .collect();
    serde_json::to_string_pretty(&entries).expect("dump serialization cannot fail")
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;

    fn set(items: &[&str]) -> BTreeSet<String> {
        items.iter().map(ToString::to_string).collect()
    }

    /// 85 transactions; "proteins" in exactly 7, a disorder triple in 9, a
    /// mutation pair in 6 — the support figures of the worked example.
    fn sample_scale_transactions() -> TransactionSet {
        let mut sets: Vec<BTreeSet<String>> = Vec::new();
        for i in 0..85 {
            let mut items = BTreeSet::new();
            if i < 7 {
                items.insert("proteins".to_string());
            }
            if (10..19).contains(&i) {
                items.insert("autistic disorder".to_string());
                items.insert("bipolar disorder".to_string());
                items.insert("schizophrenia".to_string());
            }
            if (30..36).contains(&i) {
                items.insert("deletion mutation".to_string());
                items.insert("nrxn1 gene".to_string());
            }
            sets.push(items);
        }
        TransactionSet::from_item_sets(sets)
    }

    #[test]
    fn support_fractions_from_worked_example() {
        let ts = sample_scale_transactions();
        assert_eq!(
            support(&set(&["proteins"]), &ts).unwrap(),
            SupportFraction::new(7, 85)
        );
        let triple = support(
            &set(&["autistic disorder", "bipolar disorder", "schizophrenia"]),
            &ts,
        )
        .unwrap();
        assert_eq!(triple, SupportFraction::new(9, 85));
        assert_eq!(triple.display_truncated(), "0.105");
        assert_eq!(
            support(&set(&["deletion mutation", "nrxn1 gene"]), &ts).unwrap(),
            SupportFraction::new(6, 85)
        );
    }

    #[test]
    fn frequency_at_the_exact_boundary() {
        let ts = sample_scale_transactions();
        let min_sup = Fraction::new(7, 85);
        assert!(is_frequent(&set(&["proteins"]), &ts, min_sup).unwrap());
        assert!(is_frequent(
            &set(&["autistic disorder", "bipolar disorder", "schizophrenia"]),
            &ts,
            min_sup
        )
        .unwrap());
        assert!(!is_frequent(&set(&["deletion mutation", "nrxn1 gene"]), &ts, min_sup).unwrap());
    }

    #[test]
    fn minimal_threshold_accepts_any_present_item() {
        let ts = sample_scale_transactions();
        assert!(is_frequent(&set(&["proteins"]), &ts, Fraction::new(1, 85)).unwrap());
    }

    #[test]
    fn empty_itemset_is_rejected() {
        let ts = sample_scale_transactions();
        assert_eq!(support(&set(&[]), &ts), Err(MinerError::EmptyItemset));
        assert_eq!(
            is_frequent(&set(&[]), &ts, Fraction::new(1, 2)),
            Err(MinerError::EmptyItemset)
        );
    }

    /// The four-transaction example: at min_sup 0.5 all singletons and pairs
    /// qualify, the triple {a,b,c} does not.
    #[test]
    fn four_transaction_example() {
        let ts = TransactionSet::from_item_sets(alloc::vec![
            set(&["a", "b", "c"]),
            set(&["a", "b"]),
            set(&["a", "c"]),
            set(&["b", "c"]),
        ]);
        let config = MinerConfig::new(Fraction::parse("0.5").unwrap()).unwrap();
        let mined = apriori(&ts, &config);
        let expected: Vec<(Vec<&str>, u64)> = alloc::vec![
            (alloc::vec!["a"], 3),
            (alloc::vec!["b"], 3),
            (alloc::vec!["c"], 3),
            (alloc::vec!["a", "b"], 2),
            (alloc::vec!["a", "c"], 2),
            (alloc::vec!["b", "c"], 2),
        ];
        let got: Vec<(Vec<&str>, u64)> = mined
            .iter()
            .map(|fi| {
                (
                    fi.items.iter().map(String::as_str).collect(),
                    fi.support.count,
                )
            })
            .collect();
        assert_eq!(got, expected);
        assert!(mined.iter().all(|fi| fi.support.total == 4));
    }

    #[test]
    fn maximal_threshold_with_no_universal_item_yields_nothing() {
        let ts = TransactionSet::from_item_sets(alloc::vec![set(&["a"]), set(&["b"])]);
        let config = MinerConfig::new(Fraction::ONE).unwrap();
        assert!(apriori(&ts, &config).is_empty());
    }

    #[test]
    fn min_sup_above_every_support_yields_nothing() {
        let ts = sample_scale_transactions();
        let config = MinerConfig::new(Fraction::parse("0.9").unwrap()).unwrap();
        assert!(apriori(&ts, &config).is_empty());
    }

    #[test]
    fn max_itemset_size_caps_the_search() {
        let ts = TransactionSet::from_item_sets(alloc::vec![
            set(&["a", "b", "c"]),
            set(&["a", "b", "c"]),
        ]);
        let config = MinerConfig::new(Fraction::new(1, 2))
            .unwrap()
            .with_max_size(2);
        let mined = apriori(&ts, &config);
        assert_eq!(mined.len(), 6); // 3 singletons + 3 pairs, no triple
        assert!(mined.iter().all(|fi| fi.items.len() <= 2));
    }

    #[test]
    fn invalid_min_sup_is_rejected() {
        assert_eq!(
            MinerConfig::new(Fraction::ZERO),
            Err(MinerError::InvalidMinSup)
        );
        assert_eq!(
            MinerConfig::new(Fraction::new(3, 2)),
            Err(MinerError::InvalidMinSup)
        );
    }

    #[test]
    fn truncated_display_matches_table_style() {
        assert_eq!(SupportFraction::new(30, 85).display_truncated(), "0.352");
        assert_eq!(SupportFraction::new(19, 85).display_truncated(), "0.223");
        assert_eq!(SupportFraction::new(9, 85).display_truncated(), "0.105");
        assert_eq!(SupportFraction::new(6, 85).display_truncated(), "0.070");
        assert_eq!(SupportFraction::new(85, 85).display_truncated(), "1.000");
    }

    #[test]
    fn dump_is_in_canonical_order() {
        let ts = TransactionSet::from_item_sets(alloc::vec![
            set(&["b", "a"]),
            set(&["b"]),
        ]);
        let config = MinerConfig::new(Fraction::new(1, 2)).unwrap();
        let json = itemsets_to_json(&apriori(&ts, &config));
        let parsed: serde_json::Value = serde_json::from_str(&json).unwrap();
        let entries = parsed.as_array().unwrap();
        // "b" (2/2) sorts before "a" (1/2); pair {"a","b"} (1/2) after "a"
        assert_eq!(entries[0]["items"][0], "b");
        assert_eq!(entries[0]["count"], 2);
        assert_eq!(entries[1]["items"][0], "a");
        assert_eq!(entries[2]["items"].as_array().unwrap().len(), 2);
        assert_eq!(entries[0]["support"], 1.0);
    }
}
