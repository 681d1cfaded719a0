//! Deterministic OCR-style letter substitution noise.
//!
//! # Random stream
//!
//! All randomness comes from SplitMix64 (Steele, Lea & Flood, 2014):
//!
//! ```text
//! next(state):  state += 0x9E3779B97F4A7C15
//!               z = state
//!               z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9
//!               z = (z ^ (z >> 27)) * 0x94D049BB133111EB
//!               return z ^ (z >> 31)
//! ```
//!
//! with wrapping 64-bit arithmetic. `child(seed, i)` is the `i+1`-th output
//! of a generator whose state starts at `seed`. Derived values:
//!
//! * `unit()` = `(next() >> 11) * 2^-53`, a float in `[0, 1)`.
//! * `below(n)` = `(next() * n) >> 64` computed in 128 bits.
//!
//! # Corrupting a word
//!
//! Position `i` of a word uses its own generator seeded with
//! `child(seed, i)`, so each letter's fate depends only on the seed and its
//! position. For each letter `c`:
//!
//! 1. Substitute if `unit() < p_sub`, else keep `c`.
//! 2. If `c` belongs to a confusion group, draw `unit()`; when it is below
//!    `within_group_bias` the replacement is `others[below(others.len())]`,
//!    where `others` lists the other group members alphabetically.
//! 3. Otherwise (ungrouped letter, or the bias draw failed) take
//!    `r = below(25)` and replace `c` with the `r`-th letter of the alphabet
//!    with `c` removed.
//!
//! # Generating a corpus
//!
//! Pair `i` uses a generator seeded with `child(seed, i)`: its first
//! `below(lexicon size)` picks the truth from the sorted lexicon, its next
//! raw output is the seed passed to word corruption.

use std::io::{self, BufRead, Write};

use crate::error::{Error, Result};
use crate::groups::ConfusionGroupSet;
use crate::lexicon::Lexicon;
use crate::word::Word;

const GAMMA: u64 = 0x9E37_79B9_7F4A_7C15;

/// The SplitMix64 generator.
#[derive(Debug, Clone)]
pub struct SplitMix64 {
    state: u64,
}

impl SplitMix64 {
    pub fn new(seed: u64) -> SplitMix64 {
        SplitMix64 { state: seed }
    }

    pub fn next_u64(&mut self) -> u64 {
        self.state = self.state.wrapping_add(GAMMA);
        finalize(self.state)
    }

    /// Uniform in `[0, 1)` with 53 bits of precision.
    pub fn unit(&mut self) -> f64 {
        (self.next_u64() >> 11) as f64 * (1.0 / (1u64 << 53) as f64)
    }

    /// Uniform in `0..n`. `n` must be positive.
    pub fn below(&mut self, n: usize) -> usize {
        debug_assert!(n > 0);
        ((u128::from(self.next_u64()) * n as u128) >> 64) as usize
    }
}

fn finalize(mut z: u64) -> u64 {
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

/// The `index+1`-th output of a generator started at `seed`.
pub fn child_seed(seed: u64, index: u64) -> u64 {
    finalize(seed.wrapping_add(GAMMA.wrapping_mul(index.wrapping_add(1))))
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct NoiseParams {
    p_sub: f64,
    within_group_bias: f64,
    seed: u64,
}

impl NoiseParams {
    /// Substitution rate used by default (0.3).
    pub const DEFAULT_P_SUB: f64 = 0.3;
    /// Within-group bias used by default (0.8).
    pub const DEFAULT_BIAS: f64 = 0.8;

    pub fn new(p_sub: f64, within_group_bias: f64, seed: u64) -> Result<NoiseParams> {
        for (name, value) in [("p_sub", p_sub), ("within_group_bias", within_group_bias)] {
            if !(0.0..=1.0).contains(&value) {
                return Err(Error::InvalidProbability { name, value });
            }
        }
        Ok(NoiseParams {
            p_sub,
            within_group_bias,
            seed,
        })
    }

    pub fn with_seed(self, seed: u64) -> NoiseParams {
        NoiseParams { seed, ..self }
    }

    pub fn p_sub(&self) -> f64 {
        self.p_sub
    }

    pub fn within_group_bias(&self) -> f64 {
        self.within_group_bias
    }

    pub fn seed(&self) -> u64 {
        self.seed
    }
}

/// A lexicon word and its noisy reading.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CorpusPair {
    pub truth: Word,
    pub observed: Word,
}

/// Substitutes letters of `word` independently; see the module docs for the
/// exact procedure.
pub fn corrupt_word(word: &Word, params: &NoiseParams, groups: &ConfusionGroupSet) -> Word {
    let out: String = word
        .chars()
        .enumerate()
        .map(|(pos, c)| {
            let mut rng = SplitMix64::new(child_seed(params.seed, pos as u64));
            if rng.unit() >= params.p_sub {
                return c;
            }
            if let Some(group) = groups.group_of(c) {
                if rng.unit() < params.within_group_bias {
                    let others: Vec<char> = group.members().filter(|&m| m != c).collect();
                    return others[rng.below(others.len())];
                }
            }
            let r = rng.below(25) as u8;
            let skip = c as u8 - b'A';
            char::from(b'A' + if r < skip { r } else { r + 1 })
        })
        .collect();
    Word::new(&out).expect("substitutions stay within A-Z")
}

/// Draws `n` truths uniformly from `lex` and corrupts each one.
pub fn generate_corpus(
    lex: &Lexicon,
    n: usize,
    params: &NoiseParams,
    groups: &ConfusionGroupSet,
) -> Result<Vec<CorpusPair>> {
    generate_pairs(lex, 0, n, params, groups)
}

/// Draws `count` pairs for each `(length, count)` in `plan`, in order. Pair
/// indices run on across lengths, so every pair has its own stream.
pub fn generate_stratified_corpus(
    lex: &Lexicon,
    plan: &[(usize, usize)],
    params: &NoiseParams,
    groups: &ConfusionGroupSet,
) -> Result<Vec<CorpusPair>> {
    let mut pairs = Vec::with_capacity(plan.iter().map(|p| p.1).sum());
    for &(len, count) in plan {
        let stratum = lex.with_length(len)?;
        pairs.extend(generate_pairs(
            &stratum,
            pairs.len() as u64,
            count,
            params,
            groups,
        )?);
    }
    Ok(pairs)
}

fn generate_pairs(
    lex: &Lexicon,
    first_index: u64,
    n: usize,
    params: &NoiseParams,
    groups: &ConfusionGroupSet,
) -> Result<Vec<CorpusPair>> {
    if lex.is_empty() {
        return Err(Error::EmptyLexicon);
    }
    let words = lex.words();
    Ok((0..n as u64)
        .map(|i| {
            let mut rng = SplitMix64::new(child_seed(params.seed, first_index + i));
            let truth = words[rng.below(words.len())].clone();
            let observed = corrupt_word(&truth, &params.with_seed(rng.next_u64()), groups);
            CorpusPair { truth, observed }
        })
        .collect())
}

/// Writes `truth<TAB>observed` lines.
pub fn write_corpus<W: Write>(pairs: &[CorpusPair], mut out: W) -> io::Result<()> {
    for p in pairs {
        writeln!(out, "{}\t{}", p.truth, p.observed)?;
    }
    out.flush()
}

/// Reads `truth<TAB>observed` lines. Blank lines and `#` comments are
/// ignored. The observed field may be empty; the truth may not.
pub fn read_corpus<R: BufRead>(reader: R) -> Result<Vec<CorpusPair>> {
    let mut pairs = Vec::new();
    for (n, line) in reader.lines().enumerate() {
        let line = line?;
        let line = line.trim_end_matches(['\r', '\n']);
        if line.trim().is_empty() || line.starts_with('#') {
            continue;
        }
        let parse_err = |message: String| Error::Parse {
            line: n + 1,
            message,
        };
        let Some((truth, observed)) = line.split_once('\t') else {
            return Err(parse_err("expected `truth<TAB>observed`".into()));
        };
        if observed.contains('\t') {
            return Err(parse_err("too many fields".into()));
        }
        let truth = Word::non_empty(truth).map_err(|e| parse_err(format!("truth: {e}")))?;
        let observed = Word::new(observed).map_err(|e| parse_err(format!("observed: {e}")))?;
        pairs.push(CorpusPair { truth, observed });
    }
    Ok(pairs)
}
