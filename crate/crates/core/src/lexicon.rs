//! Word lists and nearest-word lookup.

use std::collections::{BTreeMap, BTreeSet, BinaryHeap};
use std::fs::File;
use std::io::{BufRead, BufReader};
use std::path::Path;

use crate::cost::CostModel;
use crate::distance::{word_distance_with_cutoff, Bounded};
use crate::error::{Error, Result};
use crate::units::CostUnits;
use crate::word::Word;

/// Number of candidates returned by default. Ties at the cut are always kept.
pub const DEFAULT_K: usize = 4;

/// Word-length filters applied while loading.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct LoadOptions {
    pub min_len: Option<usize>,
    pub max_len: Option<usize>,
    pub allowed_lengths: Option<BTreeSet<usize>>,
}

impl LoadOptions {
    pub fn lengths(lengths: impl IntoIterator<Item = usize>) -> LoadOptions {
        LoadOptions {
            allowed_lengths: Some(lengths.into_iter().collect()),
            ..LoadOptions::default()
        }
    }

    fn accepts(&self, len: usize) -> bool {
        self.min_len.is_none_or(|m| len >= m)
            && self.max_len.is_none_or(|m| len <= m)
            && self
                .allowed_lengths
                .as_ref()
                .is_none_or(|a| a.contains(&len))
    }
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct LoadStats {
    /// Lines rejected as non-words or by the length filters.
    pub skipped: usize,
    /// Valid lines that repeated an earlier word.
    pub duplicates: usize,
}

/// An immutable, deduplicated list of uppercase words.
#[derive(Debug, Clone)]
pub struct Lexicon {
    /// Sorted ascending.
    words: Vec<Word>,
    /// Word length -> indices into `words`, ascending.
    by_length: BTreeMap<usize, Vec<u32>>,
    source_name: String,
    stats: LoadStats,
}

impl Lexicon {
    /// Reads one word per line. Lines are trimmed and uppercased; blank lines
    /// and lines starting with `#` are ignored; lines that are not `[A-Z]+`
    /// after normalization or fail the length filters are skipped and counted.
    pub fn load<R: BufRead>(
        reader: R,
        options: &LoadOptions,
        source_name: impl Into<String>,
    ) -> Result<Lexicon> {
        let mut stats = LoadStats::default();
        let mut set = BTreeSet::new();
        for line in reader.lines() {
            let line = line?;
            let trimmed = line.trim();
            if trimmed.is_empty() || trimmed.starts_with('#') {
                continue;
            }
            match Word::new(trimmed) {
                Ok(w) if options.accepts(w.len()) => {
                    if !set.insert(w) {
                        stats.duplicates += 1;
                    }
                }
                _ => stats.skipped += 1,
            }
        }
        Lexicon::build(set, source_name.into(), stats)
    }

    pub fn load_path(path: impl AsRef<Path>, options: &LoadOptions) -> Result<Lexicon> {
        let path = path.as_ref();
        let file = File::open(path)?;
        Lexicon::load(BufReader::new(file), options, path.display().to_string())
    }

    /// Builds a lexicon from in-memory words, with no length filter.
    pub fn from_words<'a>(words: impl IntoIterator<Item = &'a str>) -> Result<Lexicon> {
        let text = words.into_iter().collect::<Vec<_>>().join("\n");
        Lexicon::load(text.as_bytes(), &LoadOptions::default(), "<memory>")
    }

    fn build(set: BTreeSet<Word>, source_name: String, stats: LoadStats) -> Result<Lexicon> {
        if set.is_empty() {
            return Err(Error::EmptyLexicon);
        }
        let words: Vec<Word> = set.into_iter().collect();
        let mut by_length: BTreeMap<usize, Vec<u32>> = BTreeMap::new();
        for (i, w) in words.iter().enumerate() {
            by_length.entry(w.len()).or_default().push(i as u32);
        }
        Ok(Lexicon {
            words,
            by_length,
            source_name,
            stats,
        })
    }

    /// The words of one length, as a lexicon of their own.
    pub fn with_length(&self, len: usize) -> Result<Lexicon> {
        let set = self
            .by_length
            .get(&len)
            .into_iter()
            .flatten()
            .map(|&i| self.words[i as usize].clone())
            .collect();
        Lexicon::build(
            set,
            format!("{}[len={len}]", self.source_name),
            LoadStats::default(),
        )
    }

    pub fn len(&self) -> usize {
        self.words.len()
    }

    pub fn is_empty(&self) -> bool {
        self.words.is_empty()
    }

    /// All words in ascending order.
    pub fn words(&self) -> &[Word] {
        &self.words
    }

    pub fn contains(&self, word: &str) -> bool {
        self.words
            .binary_search_by(|w| w.as_str().cmp(word))
            .is_ok()
    }

    /// Word counts per length.
    pub fn length_histogram(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.by_length.iter().map(|(&len, ids)| (len, ids.len()))
    }

    pub fn words_of_length(&self, len: usize) -> impl Iterator<Item = &Word> + '_ {
        self.by_length
            .get(&len)
            .into_iter()
            .flatten()
            .map(|&i| &self.words[i as usize])
    }

    pub fn source_name(&self) -> &str {
        &self.source_name
    }

    pub fn stats(&self) -> LoadStats {
        self.stats
    }
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Candidate {
    pub dist: CostUnits,
    pub word: Word,
}

/// Nearest lexicon words to a query, sorted by distance then spelling.
///
/// Holds the `k` nearest words plus every further word tied with the k-th
/// one; fewer than `k` only when the lexicon is smaller than `k`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LookupResult {
    pub query: Word,
    pub candidates: Vec<Candidate>,
    pub k_requested: usize,
}

impl LookupResult {
    /// Smallest candidate distance.
    pub fn best_distance(&self) -> Option<CostUnits> {
        self.candidates.first().map(|c| c.dist)
    }

    /// Candidates sharing the smallest distance.
    pub fn best(&self) -> &[Candidate] {
        let n = match self.best_distance() {
            Some(d) => self.candidates.iter().take_while(|c| c.dist == d).count(),
            None => 0,
        };
        &self.candidates[..n]
    }

    pub fn contains(&self, word: &str) -> bool {
        self.candidates.iter().any(|c| c.word.as_str() == word)
    }
}

/// Finds the `k` nearest words to `query`, expanding ties at the cut.
///
/// Lengths are scanned in order of their gap to the query. A length is
/// skipped once its gap alone exceeds the current k-th best distance, and
/// each distance is computed with that distance as a cutoff.
pub fn lookup(lex: &Lexicon, query: &str, model: &CostModel, k: usize) -> Result<LookupResult> {
    if k == 0 {
        return Err(Error::InvalidK);
    }
    let query = Word::non_empty(query)?;

    let mut lengths: Vec<usize> = lex.by_length.keys().copied().collect();
    lengths.sort_by_key(|&len| (len.abs_diff(query.len()), len));

    // Max-heap of the k smallest distances seen so far, with multiplicity.
    let mut kth: BinaryHeap<CostUnits> = BinaryHeap::with_capacity(k + 1);
    let bound = |kth: &BinaryHeap<CostUnits>| {
        if kth.len() == k {
            *kth.peek().expect("k >= 1")
        } else {
            CostUnits::MAX
        }
    };
    let mut found: Vec<(CostUnits, u32)> = Vec::new();

    for len in lengths {
        let gap = CostUnits::ONE * len.abs_diff(query.len()) as u32;
        if gap > bound(&kth) {
            break;
        }
        for &idx in &lex.by_length[&len] {
            let cut = bound(&kth);
            let word = &lex.words[idx as usize];
            if let Bounded::Within(d) = word_distance_with_cutoff(&query, word, model, cut) {
                found.push((d, idx));
                if kth.len() < k {
                    kth.push(d);
                } else if d < cut {
                    kth.pop();
                    kth.push(d);
                }
            }
        }
    }

    let cut = bound(&kth);
    let mut candidates: Vec<Candidate> = found
        .into_iter()
        .filter(|&(d, _)| d <= cut)
        .map(|(dist, idx)| Candidate {
            dist,
            word: lex.words[idx as usize].clone(),
        })
        .collect();
    candidates.sort();
    Ok(LookupResult {
        query,
        candidates,
        k_requested: k,
    })
}

/// How a lookup result relates to the word that was meant.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum RecognitionOutcome {
    /// The truth is the only candidate at the smallest distance.
    UniqueBest,
    /// The truth is at the smallest distance, tied with other words.
    TiedBest,
    /// The truth is a candidate, but not at the smallest distance.
    InCandidates,
    Miss,
}

impl RecognitionOutcome {
    pub fn recognized_strict(self) -> bool {
        self == RecognitionOutcome::UniqueBest
    }

    pub fn recognized_coverage(self) -> bool {
        self != RecognitionOutcome::Miss
    }
}

pub fn classify_recognition(result: &LookupResult, truth: &str) -> Result<RecognitionOutcome> {
    let truth = Word::new(truth)?;
    let Some(hit) = result.candidates.iter().find(|c| c.word == truth) else {
        return Ok(RecognitionOutcome::Miss);
    };
    let best = result.best();
    Ok(if hit.dist != best[0].dist {
        RecognitionOutcome::InCandidates
    } else if best.len() == 1 {
        RecognitionOutcome::UniqueBest
    } else {
        RecognitionOutcome::TiedBest
    })
}
