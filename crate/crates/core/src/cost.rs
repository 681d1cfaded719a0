use crate::error::Result;
use crate::groups::{ConfusionGroup, ConfusionGroupSet};
use crate::units::CostUnits;
use crate::word::{letter_index, ALPHABET_LEN};

/// Edit costs over the A-Z alphabet.
///
/// Insertion and deletion always cost one edit. Substituting a letter for
/// itself is free, two letters of the same confusion group cost that group's
/// weight, and any other substitution costs one edit.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CostModel {
    table: [[CostUnits; ALPHABET_LEN]; ALPHABET_LEN],
    groups: ConfusionGroupSet,
}

impl CostModel {
    /// Unit-cost Levenshtein.
    pub fn classic() -> CostModel {
        CostModel::new(ConfusionGroupSet::empty())
    }

    /// The built-in confusion groups at weight 0.4.
    pub fn weighted_default() -> CostModel {
        CostModel::new(ConfusionGroupSet::default_groups())
    }

    pub fn new(groups: ConfusionGroupSet) -> CostModel {
        let mut table = [[CostUnits::ONE; ALPHABET_LEN]; ALPHABET_LEN];
        for (a, row) in table.iter_mut().enumerate() {
            for (b, cell) in row.iter_mut().enumerate() {
                *cell = if a == b {
                    CostUnits::ZERO
                } else {
                    match (groups.group_index(a), groups.group_index(b)) {
                        (Some(ga), Some(gb)) if ga == gb => {
                            groups.groups()[usize::from(ga)].weight()
                        }
                        _ => CostUnits::ONE,
                    }
                };
            }
        }
        CostModel { table, groups }
    }

    /// Validates `groups` and builds the model in one step.
    pub fn from_groups(groups: Vec<ConfusionGroup>) -> Result<CostModel> {
        Ok(CostModel::new(ConfusionGroupSet::new(groups)?))
    }

    pub fn groups(&self) -> &ConfusionGroupSet {
        &self.groups
    }

    pub fn is_classic(&self) -> bool {
        self.table.iter().enumerate().all(|(a, row)| {
            row.iter().enumerate().all(|(b, &c)| {
                c == if a == b {
                    CostUnits::ZERO
                } else {
                    CostUnits::ONE
                }
            })
        })
    }

    pub fn insert_cost(&self) -> CostUnits {
        CostUnits::ONE
    }

    pub fn delete_cost(&self) -> CostUnits {
        CostUnits::ONE
    }

    /// Substitution cost between two letters (either case).
    pub fn substitution_cost(&self, a: char, b: char) -> Result<CostUnits> {
        Ok(self.table[letter_index(a)?][letter_index(b)?])
    }

    /// Substitution cost for two uppercase ASCII bytes.
    #[inline]
    pub(crate) fn sub_bytes(&self, a: u8, b: u8) -> CostUnits {
        self.table[usize::from(a - b'A')][usize::from(b - b'A')]
    }
}

impl Default for CostModel {
    fn default() -> CostModel {
        CostModel::classic()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::error::Error;

    fn letters() -> impl Iterator<Item = char> + Clone {
        'A'..='Z'
    }

    #[test]
    fn default_group_costs() {
        let m = CostModel::weighted_default();
        assert_eq!(m.substitution_cost('O', 'D').unwrap(), CostUnits(4));
        assert_eq!(m.substitution_cost('O', 'O').unwrap(), CostUnits(0));
        assert_eq!(m.substitution_cost('O', 'X').unwrap(), CostUnits(10));
        assert_eq!(m.substitution_cost('j', 't').unwrap(), CostUnits(4));
        assert_eq!(m.substitution_cost('U', 'O').unwrap(), CostUnits(10));
    }

    #[test]
    fn out_of_alphabet() {
        let m = CostModel::classic();
        assert!(matches!(
            m.substitution_cost('O', '0'),
            Err(Error::OutOfAlphabet('0'))
        ));
    }

    #[test]
    fn empty_groups_are_classic() {
        let m = CostModel::classic();
        assert!(m.is_classic());
        for a in letters() {
            for b in letters() {
                let want = if a == b { 0 } else { 10 };
                assert_eq!(m.substitution_cost(a, b).unwrap(), CostUnits(want));
            }
        }
        assert!(!CostModel::weighted_default().is_classic());
        assert!(CostModel::new(ConfusionGroupSet::uniform(CostUnits::ONE)).is_classic());
    }

    #[test]
    fn overlapping_groups_rejected() {
        let err = CostModel::from_groups(vec![
            ConfusionGroup::new("ODQ", CostUnits(4)).unwrap(),
            ConfusionGroup::new("DX", CostUnits(4)).unwrap(),
        ])
        .unwrap_err();
        assert_eq!(err.to_string(), "letter D in two groups");
    }

    #[test]
    fn symmetric_and_triangle() {
        let mixed = CostModel::from_groups(vec![
            ConfusionGroup::new("ODQ", CostUnits(1)).unwrap(),
            ConfusionGroup::new("IJLT", CostUnits(9)).unwrap(),
            ConfusionGroup::new("UV", CostUnits(5)).unwrap(),
        ])
        .unwrap();
        for m in [CostModel::classic(), CostModel::weighted_default(), mixed] {
            for a in letters() {
                for b in letters() {
                    let ab = m.substitution_cost(a, b).unwrap();
                    assert_eq!(ab, m.substitution_cost(b, a).unwrap());
                    for c in letters() {
                        let via =
                            m.substitution_cost(a, c).unwrap() + m.substitution_cost(c, b).unwrap();
                        assert!(ab <= via, "{a}{b} via {c}");
                    }
                    // A substitution never beats delete + insert.
                    assert!(ab <= m.delete_cost() + m.insert_cost());
                }
            }
        }
    }
}
