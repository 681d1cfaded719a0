//! Confusion groups: sets of letters that are easily mistaken for one
//! another, each with a reduced substitution weight.

use std::collections::BTreeSet;
use std::fmt;

use crate::error::{Error, Result};
use crate::units::CostUnits;
use crate::word::{letter_index, ALPHABET_LEN};

/// Default weight for every built-in group (0.4).
pub const DEFAULT_GROUP_WEIGHT: CostUnits = CostUnits(4);

/// Letters of the built-in groups: round shapes, vertical strokes, open
/// bowls, hooked stems and open curves.
pub const DEFAULT_GROUP_MEMBERS: [&str; 5] = ["ODQ", "IJLT", "UV", "FP", "CG"];

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConfusionGroup {
    members: BTreeSet<char>,
    weight: CostUnits,
}

impl ConfusionGroup {
    pub fn new(members: &str, weight: CostUnits) -> Result<ConfusionGroup> {
        let mut set = BTreeSet::new();
        for c in members.chars() {
            if !c.is_ascii_uppercase() {
                return Err(Error::OutOfAlphabet(c));
            }
            set.insert(c);
        }
        if set.len() < 2 {
            return Err(Error::GroupTooSmall(members.to_string()));
        }
        if weight == CostUnits::ZERO || weight > CostUnits::ONE {
            return Err(Error::WeightOutOfRange(weight.to_string()));
        }
        Ok(ConfusionGroup {
            members: set,
            weight,
        })
    }

    pub fn members(&self) -> impl Iterator<Item = char> + '_ {
        self.members.iter().copied()
    }

    pub fn contains(&self, c: char) -> bool {
        self.members.contains(&c)
    }

    pub fn weight(&self) -> CostUnits {
        self.weight
    }
}

/// A validated set of pairwise-disjoint confusion groups.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct ConfusionGroupSet {
    groups: Vec<ConfusionGroup>,
    /// Group index per letter, `None` for ungrouped letters.
    group_of: [Option<u8>; ALPHABET_LEN],
}

impl ConfusionGroupSet {
    /// The empty set, which yields the classic Levenshtein cost model.
    pub fn empty() -> ConfusionGroupSet {
        ConfusionGroupSet::default()
    }

    pub fn new(groups: Vec<ConfusionGroup>) -> Result<ConfusionGroupSet> {
        let mut group_of = [None; ALPHABET_LEN];
        for (gi, group) in groups.iter().enumerate() {
            for c in group.members() {
                let slot = &mut group_of[letter_index(c)?];
                if slot.is_some() {
                    return Err(Error::DuplicateLetter(c));
                }
                *slot = Some(gi as u8);
            }
        }
        Ok(ConfusionGroupSet { groups, group_of })
    }

    /// The five built-in groups, all weighted [`DEFAULT_GROUP_WEIGHT`].
    pub fn default_groups() -> ConfusionGroupSet {
        Self::uniform(DEFAULT_GROUP_WEIGHT)
    }

    /// The five built-in groups with every weight set to `weight`.
    pub fn uniform(weight: CostUnits) -> ConfusionGroupSet {
        let groups = DEFAULT_GROUP_MEMBERS
            .iter()
            .map(|m| ConfusionGroup::new(m, weight))
            .collect::<Result<Vec<_>>>()
            .expect("weight must lie in (0, 1.0]");
        ConfusionGroupSet::new(groups).expect("built-in groups are disjoint")
    }

    /// Parses a group configuration: one `MEMBERS WEIGHT` pair per line,
    /// e.g. `ODQ 0.4`. Blank lines and lines starting with `#` are ignored.
    /// Members may be given in any case.
    pub fn parse_config(text: &str) -> Result<ConfusionGroupSet> {
        let mut groups = Vec::new();
        for (n, raw) in text.lines().enumerate() {
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let parse_err = |message: String| Error::Parse {
                line: n + 1,
                message,
            };
            let fields: Vec<&str> = line.split_whitespace().collect();
            let [members, weight] = fields[..] else {
                return Err(parse_err(format!(
                    "expected `MEMBERS WEIGHT`, found {line:?}"
                )));
            };
            let members = members.to_ascii_uppercase();
            let distinct: BTreeSet<char> = members.chars().collect();
            if distinct.len() != members.chars().count() {
                return Err(parse_err(format!("repeated letter in group {members:?}")));
            }
            groups.push(ConfusionGroup::new(&members, weight.parse()?)?);
        }
        ConfusionGroupSet::new(groups)
    }

    pub fn groups(&self) -> &[ConfusionGroup] {
        &self.groups
    }

    pub fn is_empty(&self) -> bool {
        self.groups.is_empty()
    }

    /// The group containing letter `c`, if any.
    pub fn group_of(&self, c: char) -> Option<&ConfusionGroup> {
        let idx = letter_index(c).ok()?;
        self.group_of[idx].map(|g| &self.groups[usize::from(g)])
    }

    pub(crate) fn group_index(&self, letter: usize) -> Option<u8> {
        self.group_of[letter]
    }
}

/// Renders in the config format accepted by [`ConfusionGroupSet::parse_config`].
impl fmt::Display for ConfusionGroupSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for g in &self.groups {
            let members: String = g.members().collect();
            writeln!(f, "{members} {}", g.weight())?;
        }
        Ok(())
    }
}
