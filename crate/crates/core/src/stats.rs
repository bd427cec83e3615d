//! Named integer statistics for every family value.

use alloc::vec;
use alloc::vec::Vec;

use crate::families::{
    BicoloredPartition, FPartition, PartitionPair, SignedPartition, XLabeledPartition,
};
use crate::membership::FamilyValue;
use crate::partition::Partition;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Statistic {
    Weight,
    /// Number of parts.
    Length,
    EvenParts,
    OddParts,
    /// Plain 1's of an overlined-one partition.
    PlainOnes,
    /// Odd parts above 1 together with the overlined 1.
    OverlinedOdd,
    LabeledParts,
    RedParts,
    PositiveParts,
    NegativeParts,
    /// Length of the first component of a pair.
    AlphaLength,
    /// Length of the second component of a pair.
    BetaLength,
}

impl Statistic {
    pub fn name(self) -> &'static str {
        match self {
            Statistic::Weight => "weight",
            Statistic::Length => "length",
            Statistic::EvenParts => "even_parts",
            Statistic::OddParts => "odd_parts",
            Statistic::PlainOnes => "plain_ones",
            Statistic::OverlinedOdd => "overlined_odd",
            Statistic::LabeledParts => "labeled_parts",
            Statistic::RedParts => "red_parts",
            Statistic::PositiveParts => "positive_parts",
            Statistic::NegativeParts => "negative_parts",
            Statistic::AlphaLength => "alpha_length",
            Statistic::BetaLength => "beta_length",
        }
    }
}

pub trait Statistics {
    /// Every statistic defined for the value. Weight is always first.
    fn statistics(&self) -> Vec<(Statistic, i64)>;

    fn statistic(&self, which: Statistic) -> Option<i64> {
        self.statistics()
            .into_iter()
            .find_map(|(s, v)| (s == which).then_some(v))
    }
}

impl Statistics for Partition {
    fn statistics(&self) -> Vec<(Statistic, i64)> {
        vec![
            (Statistic::Weight, self.weight() as i64),
            (Statistic::Length, self.len() as i64),
            (Statistic::EvenParts, self.count_even() as i64),
            (Statistic::OddParts, self.count_odd() as i64),
        ]
    }
}

impl Statistics for FPartition {
    fn statistics(&self) -> Vec<(Statistic, i64)> {
        vec![
            (Statistic::Weight, self.weight() as i64),
            (Statistic::PlainOnes, self.plain_ones() as i64),
            (Statistic::OverlinedOdd, self.overlined_odd_count() as i64),
        ]
    }
}

impl Statistics for SignedPartition {
    fn statistics(&self) -> Vec<(Statistic, i64)> {
        vec![
            (Statistic::Weight, self.weight()),
            (Statistic::PositiveParts, self.positive_len() as i64),
            (Statistic::NegativeParts, self.negative_len() as i64),
        ]
    }
}

impl Statistics for XLabeledPartition {
    fn statistics(&self) -> Vec<(Statistic, i64)> {
        vec![
            (Statistic::Weight, self.weight() as i64),
            (Statistic::Length, self.len() as i64),
            (Statistic::LabeledParts, self.labeled_count() as i64),
        ]
    }
}

impl Statistics for PartitionPair {
    fn statistics(&self) -> Vec<(Statistic, i64)> {
        vec![
            (Statistic::Weight, self.weight() as i64),
            (Statistic::AlphaLength, self.alpha.len() as i64),
            (Statistic::BetaLength, self.beta.len() as i64),
        ]
    }
}

impl Statistics for BicoloredPartition {
    fn statistics(&self) -> Vec<(Statistic, i64)> {
        vec![
            (Statistic::Weight, self.weight() as i64),
            (Statistic::Length, self.len() as i64),
            (Statistic::RedParts, self.red_count() as i64),
        ]
    }
}

impl Statistics for FamilyValue {
    fn statistics(&self) -> Vec<(Statistic, i64)> {
        match self {
            FamilyValue::Partition(v) => v.statistics(),
            FamilyValue::F(v) => v.statistics(),
            FamilyValue::Signed(v) => v.statistics(),
            FamilyValue::XLabeled(v) => v.statistics(),
            FamilyValue::Pair(v) => v.statistics(),
            FamilyValue::Bicolored(v) => v.statistics(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    #[test]
    fn signed_partition_example() {
        let s = SignedPartition::new(
            Partition::new(vec![4, 4, 2, 1]).unwrap(),
            Partition::new(vec![2, 1, 1]).unwrap(),
        );
        assert_eq!(
            s.statistics(),
            vec![
                (Statistic::Weight, 7),
                (Statistic::PositiveParts, 4),
                (Statistic::NegativeParts, 3)
            ]
        );
    }

    #[test]
    fn empty_partition() {
        let e = Partition::empty();
        assert_eq!(e.statistic(Statistic::Weight), Some(0));
        assert_eq!(e.statistic(Statistic::Length), Some(0));
        assert_eq!(e.statistic(Statistic::RedParts), None);
    }

    #[test]
    fn overlined_one_example() {
        let f = FPartition::new(Partition::new(vec![4, 1, 1, 1]).unwrap(), true);
        assert_eq!(
            f.statistics(),
            vec![
                (Statistic::Weight, 8),
                (Statistic::PlainOnes, 3),
                (Statistic::OverlinedOdd, 1)
            ]
        );
    }
}
