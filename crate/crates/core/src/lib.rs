//! Levenshtein distance with confusion-group weights, for correcting words
//! misread by OCR.
//!
//! Letters that look alike (O, D and Q, for instance) are grouped, and a
//! substitution inside a group costs less than a full edit. Costs are exact
//! fixed-point [`CostUnits`], so ties between dictionary candidates are
//! detected exactly.
//!
//! ```
//! use ocrlev::{distance, lookup, CostModel, Lexicon};
//!
//! let weighted = CostModel::weighted_default();
//! assert_eq!(distance("BDQY", "BODY", &weighted).unwrap().to_string(), "0.8");
//!
//! let lex = Lexicon::from_words(["BODY", "BUSY", "BURY", "BONY"]).unwrap();
//! let result = lookup(&lex, "BDQY", &weighted, 4).unwrap();
//! assert_eq!(result.candidates[0].word.as_str(), "BODY");
//! ```

mod cost;
mod distance;
mod error;
pub mod eval;
mod groups;
mod lexicon;
pub mod noise;
mod units;
mod word;

pub use cost::CostModel;
pub use distance::{
    distance, distance_matrix, distance_with_cutoff, word_distance, word_distance_with_cutoff,
    Bounded, DpMatrix,
};
pub use error::{Error, Result};
pub use eval::{evaluate, EvalReport, EvalRow};
pub use groups::{ConfusionGroup, ConfusionGroupSet, DEFAULT_GROUP_MEMBERS, DEFAULT_GROUP_WEIGHT};
pub use lexicon::{
    classify_recognition, lookup, Candidate, Lexicon, LoadOptions, LoadStats, LookupResult,
    RecognitionOutcome, DEFAULT_K,
};
pub use noise::{corrupt_word, generate_corpus, CorpusPair, NoiseParams};
pub use units::CostUnits;
pub use word::{letter_index, Word, ALPHABET_LEN};
