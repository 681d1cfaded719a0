//! Classic vs. confusion-weighted correction over a noisy corpus.
//!
//! Every pair is looked up twice with the same `k`, once per cost model, and
//! the outcomes are counted per truth length. A word is unrecognized in
//! strict mode unless it is the unique best candidate, and in coverage mode
//! unless it appears among the candidates at all.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt::{self, Write as _};
use std::str::FromStr;

use rayon::prelude::*;
use sha2::{Digest, Sha256};

use crate::cost::CostModel;
use crate::error::{Error, Result};
use crate::lexicon::{classify_recognition, lookup, Lexicon, RecognitionOutcome};
use crate::noise::{write_corpus, CorpusPair};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Method {
    /// Classic unit-cost Levenshtein.
    Ld,
    /// Confusion-group weighted Levenshtein.
    Mld,
}

impl Method {
    pub fn as_str(self) -> &'static str {
        match self {
            Method::Ld => "LD",
            Method::Mld => "MLD",
        }
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Method {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "LD" => Ok(Method::Ld),
            "MLD" => Ok(Method::Mld),
            _ => Err(format!("unknown method {s:?}")),
        }
    }
}

/// Rows are grouped by truth length, plus one overall row.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Bucket {
    Length(usize),
    All,
}

impl fmt::Display for Bucket {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Bucket::Length(n) => write!(f, "{n}"),
            Bucket::All => f.write_str("all"),
        }
    }
}

impl FromStr for Bucket {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        if s == "all" {
            return Ok(Bucket::All);
        }
        s.parse()
            .map(Bucket::Length)
            .map_err(|_| format!("unknown bucket {s:?}"))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EvalRow {
    pub bucket: Bucket,
    pub method: Method,
    pub total: usize,
    /// Pairs whose observed word differs from the truth, i.e. misses with no
    /// correction at all.
    pub uncorrected: usize,
    pub unrecognized_strict: usize,
    pub unrecognized_coverage: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EvalReport {
    /// SHA-256 of the corpus in its TSV form.
    pub corpus_sha256: String,
    pub k: usize,
    /// Records skipped because the observed word was empty.
    pub skipped: usize,
    /// Pairs where some classic candidate is absent from the weighted
    /// candidate list.
    pub ld_not_in_mld: usize,
    /// Sorted by bucket, then method.
    pub rows: Vec<EvalRow>,
}

/// Per-pair outcome under both models.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PairOutcome {
    pub ld: RecognitionOutcome,
    pub mld: RecognitionOutcome,
    pub ld_subset_of_mld: bool,
}

/// SHA-256 of `pairs` serialized as corpus TSV, in lowercase hex.
pub fn corpus_digest(pairs: &[CorpusPair]) -> String {
    let mut bytes = Vec::new();
    write_corpus(pairs, &mut bytes).expect("writing to memory");
    Sha256::digest(&bytes)
        .iter()
        .fold(String::with_capacity(64), |mut s, b| {
            let _ = write!(s, "{b:02x}");
            s
        })
}

pub fn evaluate_pair(
    lex: &Lexicon,
    pair: &CorpusPair,
    classic: &CostModel,
    weighted: &CostModel,
    k: usize,
) -> Result<PairOutcome> {
    let ld = lookup(lex, &pair.observed, classic, k)?;
    let mld = lookup(lex, &pair.observed, weighted, k)?;
    let mld_words: BTreeSet<&str> = mld.candidates.iter().map(|c| c.word.as_str()).collect();
    Ok(PairOutcome {
        ld: classify_recognition(&ld, &pair.truth)?,
        mld: classify_recognition(&mld, &pair.truth)?,
        ld_subset_of_mld: ld
            .candidates
            .iter()
            .all(|c| mld_words.contains(c.word.as_str())),
    })
}

/// Runs both lookups for every pair. Pairs are processed in parallel and
/// aggregated in corpus order.
pub fn evaluate(
    lex: &Lexicon,
    pairs: &[CorpusPair],
    classic: &CostModel,
    weighted: &CostModel,
    k: usize,
) -> Result<EvalReport> {
    if k == 0 {
        return Err(Error::InvalidK);
    }
    let outcomes: Vec<Option<PairOutcome>> = pairs
        .par_iter()
        .map(|p| {
            if p.observed.is_empty() {
                Ok(None)
            } else {
                evaluate_pair(lex, p, classic, weighted, k).map(Some)
            }
        })
        .collect::<Result<_>>()?;

    let mut counts: BTreeMap<(Bucket, Method), EvalRow> = BTreeMap::new();
    let mut skipped = 0;
    let mut ld_not_in_mld = 0;
    for (pair, outcome) in pairs.iter().zip(&outcomes) {
        let Some(outcome) = outcome else {
            skipped += 1;
            continue;
        };
        ld_not_in_mld += usize::from(!outcome.ld_subset_of_mld);
        for bucket in [Bucket::Length(pair.truth.len()), Bucket::All] {
            for (method, result) in [(Method::Ld, outcome.ld), (Method::Mld, outcome.mld)] {
                let row = counts.entry((bucket, method)).or_insert(EvalRow {
                    bucket,
                    method,
                    total: 0,
                    uncorrected: 0,
                    unrecognized_strict: 0,
                    unrecognized_coverage: 0,
                });
                row.total += 1;
                row.uncorrected += usize::from(pair.observed != pair.truth);
                row.unrecognized_strict += usize::from(!result.recognized_strict());
                row.unrecognized_coverage += usize::from(!result.recognized_coverage());
            }
        }
    }

    Ok(EvalReport {
        corpus_sha256: corpus_digest(pairs),
        k,
        skipped,
        ld_not_in_mld,
        rows: counts.into_values().collect(),
    })
}

const MACHINE_HEADER: &str =
    "bucket\tmethod\ttotal\tuncorrected\tunrecognized_strict\tunrecognized_coverage";

impl EvalReport {
    pub fn row(&self, bucket: Bucket, method: Method) -> Option<&EvalRow> {
        self.rows
            .iter()
            .find(|r| r.bucket == bucket && r.method == method)
    }

    pub fn buckets(&self) -> Vec<Bucket> {
        let set: BTreeSet<Bucket> = self.rows.iter().map(|r| r.bucket).collect();
        set.into_iter().collect()
    }

    /// Line-oriented TSV: `#key<TAB>value` metadata lines, a header line,
    /// then one record per bucket and method.
    pub fn to_machine(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "#corpus_sha256\t{}", self.corpus_sha256);
        let _ = writeln!(out, "#k\t{}", self.k);
        let _ = writeln!(out, "#skipped\t{}", self.skipped);
        let _ = writeln!(out, "#ld_not_in_mld\t{}", self.ld_not_in_mld);
        out.push_str(MACHINE_HEADER);
        out.push('\n');
        for r in &self.rows {
            let _ = writeln!(
                out,
                "{}\t{}\t{}\t{}\t{}\t{}",
                r.bucket,
                r.method,
                r.total,
                r.uncorrected,
                r.unrecognized_strict,
                r.unrecognized_coverage
            );
        }
        out
    }

    pub fn parse_machine(text: &str) -> Result<EvalReport> {
        let mut meta: BTreeMap<&str, &str> = BTreeMap::new();
        let mut rows = Vec::new();
        let mut seen_header = false;
        for (n, line) in text.lines().enumerate() {
            let err = |message: String| Error::Parse {
                line: n + 1,
                message,
            };
            if line.is_empty() {
                continue;
            }
            if let Some(rest) = line.strip_prefix('#') {
                let (key, value) = rest
                    .split_once('\t')
                    .ok_or_else(|| err("metadata line without a value".into()))?;
                meta.insert(key, value);
                continue;
            }
            if line == MACHINE_HEADER {
                seen_header = true;
                continue;
            }
            if !seen_header {
                return Err(err("record before header".into()));
            }
            let f: Vec<&str> = line.split('\t').collect();
            if f.len() != 6 {
                return Err(err(format!("expected 6 fields, found {}", f.len())));
            }
            let num = |s: &str| s.parse::<usize>().map_err(|e| err(format!("{s:?}: {e}")));
            rows.push(EvalRow {
                bucket: f[0].parse().map_err(err)?,
                method: f[1].parse().map_err(err)?,
                total: num(f[2])?,
                uncorrected: num(f[3])?,
                unrecognized_strict: num(f[4])?,
                unrecognized_coverage: num(f[5])?,
            });
        }
        let get = |key: &str| {
            meta.get(key).copied().ok_or_else(|| Error::Parse {
                line: 0,
                message: format!("missing #{key}"),
            })
        };
        let num = |key: &str| -> Result<usize> {
            get(key)?.parse().map_err(|e| Error::Parse {
                line: 0,
                message: format!("#{key}: {e}"),
            })
        };
        Ok(EvalReport {
            corpus_sha256: get("corpus_sha256")?.to_string(),
            k: num("k")?,
            skipped: num("skipped")?,
            ld_not_in_mld: num("ld_not_in_mld")?,
            rows,
        })
    }

    /// Aligned table for terminals.
    pub fn to_human(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "corpus sha256: {}", self.corpus_sha256);
        let _ = writeln!(
            out,
            "k = {}, skipped records = {}, pairs with LD candidates missing from MLD = {}",
            self.k, self.skipped, self.ld_not_in_mld
        );
        let _ = writeln!(out);
        let _ = writeln!(
            out,
            "{:>6} {:>7} {:>11} | {:>9} {:>10} | {:>11} {:>12}",
            "length",
            "total",
            "uncorrected",
            "LD strict",
            "MLD strict",
            "LD coverage",
            "MLD coverage"
        );
        for bucket in self.buckets() {
            let (Some(ld), Some(mld)) =
                (self.row(bucket, Method::Ld), self.row(bucket, Method::Mld))
            else {
                continue;
            };
            let _ = writeln!(
                out,
                "{:>6} {:>7} {:>11} | {:>9} {:>10} | {:>11} {:>12}",
                bucket.to_string(),
                ld.total,
                ld.uncorrected,
                ld.unrecognized_strict,
                mld.unrecognized_strict,
                ld.unrecognized_coverage,
                mld.unrecognized_coverage
            );
        }
        let _ = writeln!(out);
        let _ = writeln!(out, "counts are unrecognized words after correction");
        out
    }
}
