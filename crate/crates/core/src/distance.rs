//! Levenshtein distance under a [`CostModel`].
//!
//! Every routine evaluates the same recurrence:
//!
//! ```text
//! d[i, j] = min(d[i-1, j] + delete, d[i, j-1] + insert, d[i-1, j-1] + sub(s[i], t[j]))
//! ```
//!
//! with the first row and column initialised to multiples of one edit.
//! [`distance_matrix`] keeps every cell, [`distance`] keeps two rows and
//! [`distance_with_cutoff`] additionally stops once a whole row exceeds a
//! bound.

use std::fmt;

use crate::cost::CostModel;
use crate::error::Result;
use crate::units::CostUnits;
use crate::word::Word;

/// The full dynamic-programming table for a source word `s` and target `t`.
///
/// Columns follow the source (`0..=len(s)`), rows follow the target
/// (`0..=len(t)`), so row 0 and column 0 hold the cost of building each
/// prefix from nothing.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DpMatrix {
    source: Word,
    target: Word,
    cells: Vec<CostUnits>,
}

impl DpMatrix {
    pub fn rows(&self) -> usize {
        self.target.len() + 1
    }

    pub fn cols(&self) -> usize {
        self.source.len() + 1
    }

    pub fn get(&self, row: usize, col: usize) -> CostUnits {
        assert!(
            row < self.rows() && col < self.cols(),
            "cell ({row}, {col}) out of range"
        );
        self.cells[row * self.cols() + col]
    }

    pub fn row(&self, row: usize) -> &[CostUnits] {
        let cols = self.cols();
        &self.cells[row * cols..(row + 1) * cols]
    }

    /// The distance between the two words.
    pub fn bottom_right(&self) -> CostUnits {
        *self.cells.last().expect("matrix has at least one cell")
    }

    pub fn source(&self) -> &Word {
        &self.source
    }

    pub fn target(&self) -> &Word {
        &self.target
    }
}

/// Tab-separated grid: source letters across the top, target letters down
/// the left, each cell as a decimal cost.
impl fmt::Display for DpMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "\t")?;
        for c in self.source.chars() {
            write!(f, "\t{c}")?;
        }
        writeln!(f)?;
        for r in 0..self.rows() {
            if r > 0 {
                write!(f, "{}", &self.target[r - 1..r])?;
            }
            for cell in self.row(r) {
                write!(f, "\t{cell}")?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

/// Result of a bounded distance computation.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Bounded {
    /// The exact distance, which is at most the bound.
    Within(CostUnits),
    /// The distance is strictly greater than the bound.
    Exceeded,
}

impl Bounded {
    pub fn within(self) -> Option<CostUnits> {
        match self {
            Bounded::Within(d) => Some(d),
            Bounded::Exceeded => None,
        }
    }
}

/// Builds the complete DP table. Inputs are normalized with [`Word::new`].
pub fn distance_matrix(s: &str, t: &str, model: &CostModel) -> Result<DpMatrix> {
    let source = Word::new(s)?;
    let target = Word::new(t)?;
    let (sb, tb) = (source.as_bytes(), target.as_bytes());
    let cols = sb.len() + 1;
    let rows = tb.len() + 1;
    let mut cells = vec![CostUnits::ZERO; rows * cols];
    for c in 1..cols {
        cells[c] = cells[c - 1] + model.insert_cost();
    }
    for r in 1..rows {
        cells[r * cols] = cells[(r - 1) * cols] + model.delete_cost();
        for c in 1..cols {
            let above = cells[(r - 1) * cols + c] + model.delete_cost();
            let left = cells[r * cols + c - 1] + model.insert_cost();
            let diag = cells[(r - 1) * cols + c - 1] + model.sub_bytes(sb[c - 1], tb[r - 1]);
            cells[r * cols + c] = above.min(left).min(diag);
        }
    }
    Ok(DpMatrix {
        source,
        target,
        cells,
    })
}

/// Distance between two words, normalized with [`Word::new`].
pub fn distance(s: &str, t: &str, model: &CostModel) -> Result<CostUnits> {
    Ok(word_distance(&Word::new(s)?, &Word::new(t)?, model))
}

/// Exact distance if it is at most `bound`, otherwise [`Bounded::Exceeded`].
pub fn distance_with_cutoff(
    s: &str,
    t: &str,
    model: &CostModel,
    bound: CostUnits,
) -> Result<Bounded> {
    Ok(word_distance_with_cutoff(
        &Word::new(s)?,
        &Word::new(t)?,
        model,
        bound,
    ))
}

/// Distance between two already-normalized words, using two rows of storage
/// sized by the shorter word.
pub fn word_distance(s: &Word, t: &Word, model: &CostModel) -> CostUnits {
    match rolling(s.as_bytes(), t.as_bytes(), model, None) {
        Bounded::Within(d) => d,
        Bounded::Exceeded => unreachable!("no bound given"),
    }
}

pub fn word_distance_with_cutoff(
    s: &Word,
    t: &Word,
    model: &CostModel,
    bound: CostUnits,
) -> Bounded {
    let gap = s.len().abs_diff(t.len());
    if CostUnits::ONE * gap as u32 > bound {
        return Bounded::Exceeded;
    }
    rolling(s.as_bytes(), t.as_bytes(), model, Some(bound))
}

fn rolling(s: &[u8], t: &[u8], model: &CostModel, bound: Option<CostUnits>) -> Bounded {
    // Costs are symmetric, so the shorter word can always index the row.
    let (outer, inner) = if s.len() >= t.len() { (s, t) } else { (t, s) };
    let ins = model.insert_cost();
    let del = model.delete_cost();

    let mut prev: Vec<CostUnits> = (0..=inner.len() as u32).map(|j| ins * j).collect();
    let mut cur = vec![CostUnits::ZERO; inner.len() + 1];
    for (i, &a) in outer.iter().enumerate() {
        cur[0] = del * (i as u32 + 1);
        let mut row_min = cur[0];
        for (j, &b) in inner.iter().enumerate() {
            let cell = (prev[j + 1] + del)
                .min(cur[j] + ins)
                .min(prev[j] + model.sub_bytes(a, b));
            cur[j + 1] = cell;
            row_min = row_min.min(cell);
        }
        // Every path to the corner crosses this row, and costs never decrease
        // along a path.
        if bound.is_some_and(|b| row_min > b) {
            return Bounded::Exceeded;
        }
        std::mem::swap(&mut prev, &mut cur);
    }
    let d = prev[inner.len()];
    match bound {
        Some(b) if d > b => Bounded::Exceeded,
        _ => Bounded::Within(d),
    }
}
