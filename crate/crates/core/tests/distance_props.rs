mod common;

use common::{group_sub_cost, recursive_distance, textbook_levenshtein, DEFAULT_GROUPS};
use ocrlev::{
    distance, distance_matrix, distance_with_cutoff, Bounded, ConfusionGroup, CostModel, CostUnits,
};
use proptest::prelude::*;

/// Letters that appear in the built-in groups plus a few that do not.
const LETTERS: &str = "[ODQIJLTUVFPCGABXY]";

fn word(max: usize) -> impl Strategy<Value = String> {
    proptest::string::string_regex(&format!("{LETTERS}{{0,{max}}}")).unwrap()
}

/// Random disjoint groups over A-Z with weights in 1..=10 units.
fn groups() -> impl Strategy<Value = Vec<(String, u32)>> {
    let letters: Vec<char> = ('A'..='Z').collect();
    (
        Just(letters).prop_shuffle(),
        prop::collection::vec((2usize..=4, 1u32..=10), 0..=5),
    )
        .prop_map(|(letters, shapes)| {
            let mut at = 0;
            shapes
                .into_iter()
                .map(|(size, weight)| {
                    let members: String = letters[at..at + size].iter().collect();
                    at += size;
                    (members, weight)
                })
                .collect()
        })
}

fn model_of(groups: &[(String, u32)]) -> CostModel {
    CostModel::from_groups(
        groups
            .iter()
            .map(|(m, w)| ConfusionGroup::new(m, CostUnits(*w)).unwrap())
            .collect(),
    )
    .unwrap()
}

fn as_refs(groups: &[(String, u32)]) -> Vec<(&str, u32)> {
    groups.iter().map(|(m, w)| (m.as_str(), *w)).collect()
}

#[test]
fn exhaustive_small_alphabet_matches_recursion() {
    let alphabet = ['O', 'D', 'Q', 'U', 'V', 'X'];
    let words = common::all_words(&alphabet, 3);
    let weighted = CostModel::weighted_default();
    let sub = |a, b| group_sub_cost(&DEFAULT_GROUPS, a, b);
    for s in &words {
        for t in &words {
            assert_eq!(
                distance(s, t, &weighted).unwrap().units(),
                recursive_distance(s, t, &sub),
                "{s:?} {t:?}"
            );
        }
    }
}

#[test]
fn substitution_costs_match_group_table() {
    let m = CostModel::weighted_default();
    for a in 'A'..='Z' {
        for b in 'A'..='Z' {
            assert_eq!(
                m.substitution_cost(a, b).unwrap().units(),
                group_sub_cost(&DEFAULT_GROUPS, a, b)
            );
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(2000))]

    #[test]
    fn matches_recursion_under_random_models(s in word(7), t in word(7), g in groups()) {
        let model = model_of(&g);
        let refs = as_refs(&g);
        let want = recursive_distance(&s, &t, &|a, b| group_sub_cost(&refs, a, b));
        prop_assert_eq!(distance(&s, &t, &model).unwrap().units(), want);
    }

    #[test]
    fn matrix_corner_equals_rolling(s in word(8), t in word(8), g in groups()) {
        let model = model_of(&g);
        let m = distance_matrix(&s, &t, &model).unwrap();
        prop_assert_eq!(m.bottom_right(), distance(&s, &t, &model).unwrap());
        for c in 0..m.cols() {
            prop_assert_eq!(m.get(0, c), CostUnits(10 * c as u32));
        }
        for r in 0..m.rows() {
            prop_assert_eq!(m.get(r, 0), CostUnits(10 * r as u32));
        }
        for r in 0..m.rows() {
            for c in 0..m.cols() {
                if r > 0 {
                    prop_assert!(m.get(r, c).units().abs_diff(m.get(r - 1, c).units()) <= 10);
                }
                if c > 0 {
                    prop_assert!(m.get(r, c).units().abs_diff(m.get(r, c - 1).units()) <= 10);
                }
            }
        }
    }

    #[test]
    fn classic_is_ten_times_textbook(s in "[A-Z]{0,9}", t in "[A-Z]{0,9}") {
        let d = distance(&s, &t, &CostModel::classic()).unwrap();
        prop_assert_eq!(d.units() % 10, 0);
        prop_assert_eq!(d.units() as usize, 10 * textbook_levenshtein(&s, &t));
    }

    #[test]
    fn weighted_never_exceeds_classic(s in word(8), t in word(8), g in groups()) {
        prop_assert!(distance(&s, &t, &model_of(&g)).unwrap() <= distance(&s, &t, &CostModel::classic()).unwrap());
    }

    #[test]
    fn metric_axioms(s in word(6), t in word(6), u in word(6), g in groups()) {
        let m = model_of(&g);
        let d = |a: &str, b: &str| distance(a, b, &m).unwrap();
        prop_assert_eq!(d(&s, &t) == CostUnits::ZERO, s == t);
        prop_assert_eq!(d(&s, &t), d(&t, &s));
        prop_assert!(d(&s, &u) <= d(&s, &t) + d(&t, &u));
    }

    #[test]
    fn length_bounds(s in word(8), t in word(8), g in groups()) {
        let d = distance(&s, &t, &model_of(&g)).unwrap().units() as usize;
        prop_assert!(d >= 10 * s.len().abs_diff(t.len()));
        prop_assert!(d <= 10 * s.len().max(t.len()));
    }

    #[test]
    fn cutoff_agrees_with_distance(s in word(8), t in word(8), g in groups(), bound in 0u32..90) {
        let m = model_of(&g);
        let d = distance(&s, &t, &m).unwrap();
        let got = distance_with_cutoff(&s, &t, &m, CostUnits(bound)).unwrap();
        if d.units() <= bound {
            prop_assert_eq!(got, Bounded::Within(d));
        } else {
            prop_assert_eq!(got, Bounded::Exceeded);
        }
    }

    #[test]
    fn lowercase_is_normalized(s in "[a-z]{0,6}", t in "[A-Z]{0,6}") {
        let m = CostModel::weighted_default();
        prop_assert_eq!(distance(&s, &t, &m).unwrap(), distance(&s.to_uppercase(), &t, &m).unwrap());
    }
}
