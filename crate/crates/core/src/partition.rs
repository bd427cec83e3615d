//! The plain integer partition.

use alloc::vec::Vec;
use core::ops::Index;

use crate::error::StructureError;

pub type Part = u32;

/// A weakly decreasing sequence of positive parts. The empty partition has
/// weight zero.
///
/// The derived `Ord` is lexicographic on the parts; canonical listing order
/// throughout the crate is the reverse of it.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Partition {
    parts: Vec<Part>,
}

impl Partition {
    pub fn empty() -> Self {
        Self { parts: Vec::new() }
    }

    /// Builds a partition from parts that must already be weakly decreasing.
    pub fn new(parts: Vec<Part>) -> Result<Self, StructureError> {
        check_parts(&parts)?;
        Ok(Self { parts })
    }

    /// Builds a partition from parts in any order.
    pub fn from_unsorted(mut parts: Vec<Part>) -> Result<Self, StructureError> {
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Self::new(parts)
    }

    /// Skips validation. Callers guarantee the invariant.
    pub(crate) fn from_sorted_unchecked(parts: Vec<Part>) -> Self {
        debug_assert!(check_parts(&parts).is_ok());
        Self { parts }
    }

    pub fn parts(&self) -> &[Part] {
        &self.parts
    }

    pub fn into_parts(self) -> Vec<Part> {
        self.parts
    }

    pub fn weight(&self) -> u64 {
        self.parts.iter().map(|&p| u64::from(p)).sum()
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Largest part, zero for the empty partition.
    pub fn max_part(&self) -> Part {
        self.parts.first().copied().unwrap_or(0)
    }

    pub fn count_even(&self) -> usize {
        self.parts.iter().filter(|&&p| p % 2 == 0).count()
    }

    pub fn count_odd(&self) -> usize {
        self.parts.iter().filter(|&&p| p % 2 == 1).count()
    }

    pub fn multiplicity(&self, value: Part) -> usize {
        self.parts.iter().filter(|&&p| p == value).count()
    }

    /// True when no part repeats.
    pub fn has_distinct_parts(&self) -> bool {
        self.parts.windows(2).all(|w| w[0] > w[1])
    }

    /// True when no even part repeats; odd parts are free.
    pub fn has_distinct_even_parts(&self) -> bool {
        self.parts.windows(2).all(|w| w[0] > w[1] || w[0] % 2 == 1)
    }

    /// Multiset union of the parts of both partitions.
    pub fn union(&self, other: &Partition) -> Partition {
        let mut parts = Vec::with_capacity(self.len() + other.len());
        let (mut i, mut j) = (0, 0);
        while i < self.parts.len() || j < other.parts.len() {
            let take_left = match (self.parts.get(i), other.parts.get(j)) {
                (Some(a), Some(b)) => a >= b,
                (Some(_), None) => true,
                _ => false,
            };
            if take_left {
                parts.push(self.parts[i]);
                i += 1;
            } else {
                parts.push(other.parts[j]);
                j += 1;
            }
        }
        Partition { parts }
    }
}

impl Index<usize> for Partition {
    type Output = Part;

    fn index(&self, index: usize) -> &Part {
        &self.parts[index]
    }
}

impl TryFrom<Vec<Part>> for Partition {
    type Error = StructureError;

    fn try_from(parts: Vec<Part>) -> Result<Self, Self::Error> {
        Partition::new(parts)
    }
}

fn check_parts(parts: &[Part]) -> Result<(), StructureError> {
    for (i, &p) in parts.iter().enumerate() {
        if p == 0 {
            return Err(StructureError::ZeroPart(i));
        }
        if i > 0 && parts[i - 1] < p {
            return Err(StructureError::NotDecreasing(i));
        }
    }
    Ok(())
}
