//! Value types for the partition families other than the plain partition.
//!
//! Every type here is only structurally validated on construction (positive
//! parts, canonical order). Family membership, which carries the real
//! combinatorial constraints, is decided in [`crate::membership`].

use alloc::vec::Vec;
use core::cmp::Ordering;

use crate::error::StructureError;
use crate::partition::{Part, Partition};

/// A partition that may carry one overlined 1 on top of its plain parts.
///
/// `parts` holds the plain parts only; the overlined 1, when present, is an
/// extra part of size 1 that is not counted among the plain 1's.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct FPartition {
    pub parts: Partition,
    pub overlined_one: bool,
}

impl FPartition {
    pub fn new(parts: Partition, overlined_one: bool) -> Self {
        Self {
            parts,
            overlined_one,
        }
    }

    pub fn weight(&self) -> u64 {
        self.parts.weight() + u64::from(self.overlined_one)
    }

    /// Number of plain (non-overlined) 1's.
    pub fn plain_ones(&self) -> usize {
        self.parts.multiplicity(1)
    }

    /// Odd parts above 1, plus the overlined 1 if present.
    pub fn overlined_odd_count(&self) -> usize {
        self.parts
            .parts()
            .iter()
            .filter(|&&p| p > 1 && p % 2 == 1)
            .count()
            + usize::from(self.overlined_one)
    }

    /// Display sequence: parts descending, the overlined 1 ahead of the
    /// plain 1's. The boolean marks the overlined entry.
    pub fn sequence(&self) -> Vec<(Part, bool)> {
        let mut out = Vec::with_capacity(self.parts.len() + 1);
        let mut placed = !self.overlined_one;
        for &p in self.parts.parts() {
            if !placed && p == 1 {
                out.push((1, true));
                placed = true;
            }
            out.push((p, false));
        }
        if !placed {
            out.push((1, true));
        }
        out
    }
}

impl Ord for FPartition {
    fn cmp(&self, other: &Self) -> Ordering {
        self.sequence().cmp(&other.sequence())
    }
}

impl PartialOrd for FPartition {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// A pair of partitions whose weight is the positive weight minus the
/// negative weight.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SignedPartition {
    pub positive: Partition,
    pub negative: Partition,
}

impl SignedPartition {
    pub fn new(positive: Partition, negative: Partition) -> Self {
        Self { positive, negative }
    }

    pub fn weight(&self) -> i64 {
        self.positive.weight() as i64 - self.negative.weight() as i64
    }

    pub fn positive_len(&self) -> usize {
        self.positive.len()
    }

    pub fn negative_len(&self) -> usize {
        self.negative.len()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct LabeledPart {
    pub value: Part,
    pub labeled: bool,
}

/// A partition into distinct parts where some parts carry the label x.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct XLabeledPartition {
    entries: Vec<LabeledPart>,
}

impl XLabeledPartition {
    pub fn new(entries: Vec<LabeledPart>) -> Result<Self, StructureError> {
        for (i, e) in entries.iter().enumerate() {
            if e.value == 0 {
                return Err(StructureError::ZeroPart(i));
            }
            if i > 0 && entries[i - 1].value <= e.value {
                return Err(StructureError::NotStrictlyDecreasing(i));
            }
        }
        Ok(Self { entries })
    }

    pub fn entries(&self) -> &[LabeledPart] {
        &self.entries
    }

    pub fn weight(&self) -> u64 {
        self.entries.iter().map(|e| u64::from(e.value)).sum()
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn labeled_count(&self) -> usize {
        self.entries.iter().filter(|e| e.labeled).count()
    }

    /// The underlying partition with labels dropped.
    pub fn shape(&self) -> Partition {
        Partition::from_sorted_unchecked(self.entries.iter().map(|e| e.value).collect())
    }

    /// Gap between entry `i` and the next one, taking the value after the
    /// last entry to be zero.
    pub fn gap_after(&self, i: usize) -> Part {
        let next = self.entries.get(i + 1).map_or(0, |e| e.value);
        self.entries[i].value - next
    }
}

/// An ordered pair of partitions.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct PartitionPair {
    pub alpha: Partition,
    pub beta: Partition,
}

impl PartitionPair {
    pub fn new(alpha: Partition, beta: Partition) -> Self {
        Self { alpha, beta }
    }

    pub fn weight(&self) -> u64 {
        self.alpha.weight() + self.beta.weight()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Color {
    Blue,
    Red,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct ColoredPart {
    pub value: Part,
    pub color: Color,
}

impl ColoredPart {
    pub fn blue(value: Part) -> Self {
        Self {
            value,
            color: Color::Blue,
        }
    }

    pub fn red(value: Part) -> Self {
        Self {
            value,
            color: Color::Red,
        }
    }

    /// Canonical sequence order: larger values first, blue before red.
    pub fn canonical_cmp(&self, other: &Self) -> Ordering {
        other
            .value
            .cmp(&self.value)
            .then(self.color.cmp(&other.color))
    }
}

/// A multiset of blue and red parts, kept in canonical order.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct BicoloredPartition {
    entries: Vec<ColoredPart>,
}

impl BicoloredPartition {
    /// Entries must already be in canonical order.
    pub fn new(entries: Vec<ColoredPart>) -> Result<Self, StructureError> {
        for (i, e) in entries.iter().enumerate() {
            if e.value == 0 {
                return Err(StructureError::ZeroPart(i));
            }
            if i > 0 && entries[i - 1].canonical_cmp(e) == Ordering::Greater {
                return Err(StructureError::NotCanonical(i));
            }
        }
        Ok(Self { entries })
    }

    pub fn from_unsorted(mut entries: Vec<ColoredPart>) -> Result<Self, StructureError> {
        entries.sort_by(ColoredPart::canonical_cmp);
        Self::new(entries)
    }

    pub fn all_blue(parts: &Partition) -> Self {
        Self {
            entries: parts
                .parts()
                .iter()
                .map(|&v| ColoredPart::blue(v))
                .collect(),
        }
    }

    pub fn entries(&self) -> &[ColoredPart] {
        &self.entries
    }

    pub fn weight(&self) -> u64 {
        self.entries.iter().map(|e| u64::from(e.value)).sum()
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn red_count(&self) -> usize {
        self.entries
            .iter()
            .filter(|e| e.color == Color::Red)
            .count()
    }

    pub fn values_of(&self, color: Color) -> Vec<Part> {
        self.entries
            .iter()
            .filter(|e| e.color == color)
            .map(|e| e.value)
            .collect()
    }

    fn sort_key(&self) -> Vec<(Part, core::cmp::Reverse<Color>)> {
        self.entries
            .iter()
            .map(|e| (e.value, core::cmp::Reverse(e.color)))
            .collect()
    }
}

impl Ord for BicoloredPartition {
    fn cmp(&self, other: &Self) -> Ordering {
        self.sort_key().cmp(&other.sort_key())
    }
}

impl PartialOrd for BicoloredPartition {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn p(parts: &[Part]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn f_partition_statistics() {
        let f = FPartition::new(p(&[4, 1, 1, 1]), true);
        assert_eq!(f.weight(), 8);
        assert_eq!(f.plain_ones(), 3);
        assert_eq!(f.overlined_odd_count(), 1);
        assert_eq!(
            f.sequence(),
            vec![(4, false), (1, true), (1, false), (1, false), (1, false)]
        );
    }

    #[test]
    fn signed_weight_can_be_negative() {
        let s = SignedPartition::new(p(&[4, 4, 2, 1]), p(&[2, 1, 1]));
        assert_eq!(s.weight(), 7);
        assert_eq!(SignedPartition::new(p(&[1]), p(&[3])).weight(), -2);
    }

    #[test]
    fn bicolored_canonical_order() {
        let b = BicoloredPartition::from_unsorted(vec![
            ColoredPart::red(2),
            ColoredPart::blue(1),
            ColoredPart::blue(2),
        ])
        .unwrap();
        assert_eq!(
            b.entries(),
            &[
                ColoredPart::blue(2),
                ColoredPart::red(2),
                ColoredPart::blue(1)
            ]
        );
        assert!(BicoloredPartition::new(vec![ColoredPart::red(2), ColoredPart::blue(2)]).is_err());
    }

    #[test]
    fn labeled_requires_strict_decrease() {
        let e = |value, labeled| LabeledPart { value, labeled };
        assert!(XLabeledPartition::new(vec![e(3, true), e(3, false)]).is_err());
        let x = XLabeledPartition::new(vec![e(4, true), e(2, false)]).unwrap();
        assert_eq!(x.gap_after(0), 2);
        assert_eq!(x.gap_after(1), 2);
        assert_eq!(x.labeled_count(), 1);
    }
}
