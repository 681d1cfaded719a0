mod common;

use common::naive_lookup;
use ocrlev::{lookup, CostModel, CostUnits, Lexicon, LookupResult};
use proptest::prelude::*;

fn lexicon_words() -> impl Strategy<Value = Vec<String>> {
    prop::collection::vec("[ODQUVBYSRNX]{1,6}", 1..80)
}

fn model(weighted: bool) -> CostModel {
    if weighted {
        CostModel::weighted_default()
    } else {
        CostModel::classic()
    }
}

fn listing(r: &LookupResult) -> Vec<(CostUnits, String)> {
    r.candidates
        .iter()
        .map(|c| (c.dist, c.word.to_string()))
        .collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(500))]

    #[test]
    fn pruned_equals_full_scan(
        words in lexicon_words(),
        query in "[ODQUVBYSRNX]{1,7}",
        k in 1usize..8,
        weighted: bool,
    ) {
        let lex = Lexicon::from_words(words.iter().map(String::as_str)).unwrap();
        let m = model(weighted);
        let got = lookup(&lex, &query, &m, k).unwrap();
        prop_assert_eq!(listing(&got), naive_lookup(&lex, &query, &m, k));
        prop_assert_eq!(got.k_requested, k);
        prop_assert!(got.candidates.len() >= k.min(lex.len()));
    }

    #[test]
    fn result_for_k_is_prefix_of_k_plus_one(
        words in lexicon_words(),
        query in "[ODQUVBYSRNX]{1,7}",
        k in 1usize..8,
        weighted: bool,
    ) {
        let lex = Lexicon::from_words(words.iter().map(String::as_str)).unwrap();
        let m = model(weighted);
        let a = lookup(&lex, &query, &m, k).unwrap();
        let b = lookup(&lex, &query, &m, k + 1).unwrap();
        prop_assert!(b.candidates.starts_with(&a.candidates));
    }

    #[test]
    fn exact_match_comes_first(words in lexicon_words(), pick in any::<prop::sample::Index>(), weighted: bool) {
        let lex = Lexicon::from_words(words.iter().map(String::as_str)).unwrap();
        let query = pick.get(&words).clone();
        let r = lookup(&lex, &query, &model(weighted), 1).unwrap();
        prop_assert_eq!(r.candidates[0].word.as_str(), query.as_str());
        prop_assert_eq!(r.candidates[0].dist, CostUnits::ZERO);
        prop_assert_eq!(r.candidates.len(), 1);
    }

    #[test]
    fn input_order_does_not_matter(words in lexicon_words(), query in "[ODQUVBYSRNX]{1,7}", k in 1usize..6) {
        let m = CostModel::weighted_default();
        let forward = Lexicon::from_words(words.iter().map(String::as_str)).unwrap();
        let backward = Lexicon::from_words(words.iter().rev().map(String::as_str)).unwrap();
        let a = lookup(&forward, &query, &m, k).unwrap();
        prop_assert_eq!(&a, &lookup(&backward, &query, &m, k).unwrap());
        prop_assert_eq!(&a, &lookup(&forward, &query, &m, k).unwrap());
    }
}
