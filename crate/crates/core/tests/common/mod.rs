//! Reference implementations used only by tests. Nothing here calls into the
//! DP routines under test.
#![allow(dead_code)]

use std::collections::HashMap;

use ocrlev::{CostModel, CostUnits, Lexicon};

/// Substitution cost straight from a list of `(members, weight)` groups.
pub fn group_sub_cost(groups: &[(&str, u32)], a: char, b: char) -> u32 {
    if a == b {
        return 0;
    }
    groups
        .iter()
        .find(|(m, _)| m.contains(a) && m.contains(b))
        .map_or(10, |&(_, w)| w)
}

/// Memoized recursion on prefix lengths:
/// `d(i, 0) = 10 i`, `d(0, j) = 10 j`,
/// `d(i, j) = min(d(i-1, j) + 10, d(i, j-1) + 10, d(i-1, j-1) + sub)`.
pub fn recursive_distance(s: &str, t: &str, sub: &dyn Fn(char, char) -> u32) -> u32 {
    fn go(
        s: &[char],
        t: &[char],
        i: usize,
        j: usize,
        sub: &dyn Fn(char, char) -> u32,
        memo: &mut HashMap<(usize, usize), u32>,
    ) -> u32 {
        if i == 0 {
            return 10 * j as u32;
        }
        if j == 0 {
            return 10 * i as u32;
        }
        if let Some(&d) = memo.get(&(i, j)) {
            return d;
        }
        let d = (go(s, t, i - 1, j, sub, memo) + 10)
            .min(go(s, t, i, j - 1, sub, memo) + 10)
            .min(go(s, t, i - 1, j - 1, sub, memo) + sub(s[i - 1], t[j - 1]));
        memo.insert((i, j), d);
        d
    }
    let s: Vec<char> = s.chars().collect();
    let t: Vec<char> = t.chars().collect();
    go(&s, &t, s.len(), t.len(), sub, &mut HashMap::new())
}

/// Textbook unit-cost Levenshtein in whole edits.
pub fn textbook_levenshtein(s: &str, t: &str) -> usize {
    let t: Vec<char> = t.chars().collect();
    let mut row: Vec<usize> = (0..=t.len()).collect();
    for (i, a) in s.chars().enumerate() {
        let mut diag = row[0];
        row[0] = i + 1;
        for (j, &b) in t.iter().enumerate() {
            let above = row[j + 1];
            row[j + 1] = (above + 1).min(row[j] + 1).min(diag + usize::from(a != b));
            diag = above;
        }
    }
    row[t.len()]
}

/// Full scan: distance to every word, sort by (distance, word), keep the
/// first `k` plus everything tied with the k-th.
pub fn naive_lookup(
    lex: &Lexicon,
    query: &str,
    model: &CostModel,
    k: usize,
) -> Vec<(CostUnits, String)> {
    let mut all: Vec<(CostUnits, String)> = lex
        .words()
        .iter()
        .map(|w| (ocrlev::distance(query, w, model).unwrap(), w.to_string()))
        .collect();
    all.sort();
    if all.len() > k {
        let cut = all[k - 1].0;
        all.retain(|(d, _)| *d <= cut);
    }
    all
}

/// Words from `alphabet` of every length `0..=max_len`.
pub fn all_words(alphabet: &[char], max_len: usize) -> Vec<String> {
    let mut out = vec![String::new()];
    let mut frontier = vec![String::new()];
    for _ in 0..max_len {
        frontier = frontier
            .iter()
            .flat_map(|w| alphabet.iter().map(move |c| format!("{w}{c}")))
            .collect();
        out.extend(frontier.iter().cloned());
    }
    out
}

/// The five built-in groups as plain data.
pub const DEFAULT_GROUPS: [(&str, u32); 5] =
    [("ODQ", 4), ("IJLT", 4), ("UV", 4), ("FP", 4), ("CG", 4)];

pub const WORDS_PATH: &str = concat!(env!("CARGO_MANIFEST_DIR"), "/../../data/words.txt");
