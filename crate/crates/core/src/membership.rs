//! Family tags and membership predicates.

use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use crate::error::UnknownTag;
use crate::families::{
    BicoloredPartition, Color, FPartition, PartitionPair, SignedPartition, XLabeledPartition,
};
use crate::partition::Partition;

/// The eight partition families.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Family {
    /// Partitions with distinct even parts.
    Ped,
    /// Smallest part 1, optional overlined 1, parts at most twice the
    /// number of plain 1's, odd parts above 1 distinct.
    F,
    /// Signed: positive parts even and distinct, negative parts odd,
    /// distinct and at most `2 * positive_len - 1`.
    FSigned,
    /// Pairs of distinct-part partitions with `max(beta) <= len(alpha)`.
    V,
    /// Distinct parts, x-labels only on parts whose gap below is at least 2.
    A,
    /// Signed: positive parts differ by at least 2 with smallest at least 2,
    /// negative parts distinct and at most `positive_len`.
    ASigned,
    /// Bicolored partitions with every red matched to its own blue.
    B,
    /// Distinct parts paired with distinct even parts.
    C,
}

impl Family {
    pub const ALL: [Family; 8] = [
        Family::Ped,
        Family::F,
        Family::FSigned,
        Family::V,
        Family::A,
        Family::ASigned,
        Family::B,
        Family::C,
    ];

    pub fn tag(self) -> &'static str {
        match self {
            Family::Ped => "ped",
            Family::F => "F",
            Family::FSigned => "F-1",
            Family::V => "V",
            Family::A => "A",
            Family::ASigned => "A-1",
            Family::B => "B",
            Family::C => "C",
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

impl FromStr for Family {
    type Err = UnknownTag;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let lower = s.trim().to_ascii_lowercase();
        Ok(match lower.as_str() {
            "ped" => Family::Ped,
            "f" => Family::F,
            "f-1" | "f_-1" | "fsigned" | "f-signed" | "f_signed" => Family::FSigned,
            "v" => Family::V,
            "a" => Family::A,
            "a-1" | "a_-1" | "asigned" | "a-signed" | "a_signed" => Family::ASigned,
            "b" => Family::B,
            "c" => Family::C,
            _ => {
                return Err(UnknownTag {
                    kind: "family",
                    tag: s.to_string(),
                })
            }
        })
    }
}

/// Any value of one of the family types.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FamilyValue {
    Partition(Partition),
    F(FPartition),
    Signed(SignedPartition),
    XLabeled(XLabeledPartition),
    Pair(PartitionPair),
    Bicolored(BicoloredPartition),
}

impl FamilyValue {
    pub fn weight(&self) -> i64 {
        match self {
            FamilyValue::Partition(v) => v.weight() as i64,
            FamilyValue::F(v) => v.weight() as i64,
            FamilyValue::Signed(v) => v.weight(),
            FamilyValue::XLabeled(v) => v.weight() as i64,
            FamilyValue::Pair(v) => v.weight() as i64,
            FamilyValue::Bicolored(v) => v.weight() as i64,
        }
    }
}

macro_rules! impl_from_value {
    ($($variant:ident($ty:ty)),*) => {
        $(impl From<$ty> for FamilyValue {
            fn from(v: $ty) -> Self {
                FamilyValue::$variant(v)
            }
        })*
    };
}

impl_from_value!(
    Partition(Partition),
    F(FPartition),
    Signed(SignedPartition),
    XLabeled(XLabeledPartition),
    Pair(PartitionPair),
    Bicolored(BicoloredPartition)
);

/// Why a value is not a member of a family.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Rejection {
    pub reason: String,
}

impl Rejection {
    fn new(reason: impl Into<String>) -> Self {
        Self {
            reason: reason.into(),
        }
    }
}

impl fmt::Display for Rejection {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.reason)
    }
}

impl core::error::Error for Rejection {}

pub type Membership = Result<(), Rejection>;

/// Decides whether `value` belongs to `family`.
pub fn validate_membership(family: Family, value: &FamilyValue) -> Membership {
    match (family, value) {
        (Family::Ped, FamilyValue::Partition(p)) => check_ped(p),
        (Family::F, FamilyValue::F(f)) => check_f(f),
        (Family::FSigned, FamilyValue::Signed(s)) => check_f_signed(s),
        (Family::ASigned, FamilyValue::Signed(s)) => check_a_signed(s),
        (Family::A, FamilyValue::XLabeled(x)) => check_a(x),
        (Family::V, FamilyValue::Pair(p)) => check_v(p),
        (Family::C, FamilyValue::Pair(p)) => check_c(p),
        (Family::B, FamilyValue::Bicolored(b)) => check_b(b),
        (family, _) => Err(Rejection::new(format!(
            "value has the wrong kind for family {family}"
        ))),
    }
}

pub fn check_ped(p: &Partition) -> Membership {
    if p.has_distinct_even_parts() {
        Ok(())
    } else {
        Err(Rejection::new("an even part repeats"))
    }
}

pub fn check_f(f: &FPartition) -> Membership {
    if f.weight() == 0 {
        return Ok(());
    }
    let ones = f.plain_ones();
    if ones == 0 {
        return Err(Rejection::new("no plain part equal to 1"));
    }
    let bound = 2 * ones as u64;
    if u64::from(f.parts.max_part()) > bound {
        return Err(Rejection::new(format!(
            "part {} exceeds twice the number of plain 1's ({bound})",
            f.parts.max_part()
        )));
    }
    let parts = f.parts.parts();
    if parts
        .windows(2)
        .any(|w| w[0] == w[1] && w[0] > 1 && w[0] % 2 == 1)
    {
        return Err(Rejection::new("an odd part above 1 repeats"));
    }
    Ok(())
}

fn check_nonnegative(s: &SignedPartition) -> Membership {
    if s.weight() < 0 {
        Err(Rejection::new("negative weight"))
    } else {
        Ok(())
    }
}

pub fn check_f_signed(s: &SignedPartition) -> Membership {
    let pos = &s.positive;
    let neg = &s.negative;
    if pos.parts().iter().any(|p| p % 2 == 1) {
        return Err(Rejection::new("a positive part is odd"));
    }
    if !pos.has_distinct_parts() {
        return Err(Rejection::new("positive parts repeat"));
    }
    if neg.parts().iter().any(|p| p % 2 == 0) {
        return Err(Rejection::new("a negative part is even"));
    }
    if !neg.has_distinct_parts() {
        return Err(Rejection::new("negative parts repeat"));
    }
    let bound = 2 * pos.len() as i64 - 1;
    if !neg.is_empty() && i64::from(neg.max_part()) > bound {
        return Err(Rejection::new(format!(
            "negative part {} exceeds 2*{}-1",
            neg.max_part(),
            pos.len()
        )));
    }
    check_nonnegative(s)
}

pub fn check_a_signed(s: &SignedPartition) -> Membership {
    let pos = s.positive.parts();
    if pos.windows(2).any(|w| w[0] < w[1] + 2) {
        return Err(Rejection::new("positive parts differ by less than 2"));
    }
    if pos.last().is_some_and(|&p| p < 2) {
        return Err(Rejection::new("smallest positive part is below 2"));
    }
    if !s.negative.has_distinct_parts() {
        return Err(Rejection::new("negative parts repeat"));
    }
    if s.negative.max_part() as usize > pos.len() {
        return Err(Rejection::new(format!(
            "negative part {} exceeds the number of positive parts {}",
            s.negative.max_part(),
            pos.len()
        )));
    }
    check_nonnegative(s)
}

pub fn check_a(x: &XLabeledPartition) -> Membership {
    for (i, e) in x.entries().iter().enumerate() {
        if e.labeled && x.gap_after(i) < 2 {
            return Err(Rejection::new(format!(
                "labeled part {} is less than 2 above the next part",
                e.value
            )));
        }
    }
    Ok(())
}

pub fn check_v(pair: &PartitionPair) -> Membership {
    if !pair.alpha.has_distinct_parts() {
        return Err(Rejection::new("alpha has repeated parts"));
    }
    if !pair.beta.has_distinct_parts() {
        return Err(Rejection::new("beta has repeated parts"));
    }
    if pair.beta.max_part() as usize > pair.alpha.len() {
        return Err(Rejection::new("max(beta) exceeds len(alpha)"));
    }
    Ok(())
}

pub fn check_c(pair: &PartitionPair) -> Membership {
    if !pair.alpha.has_distinct_parts() {
        return Err(Rejection::new("alpha has repeated parts"));
    }
    if pair.beta.parts().iter().any(|p| p % 2 == 1) {
        return Err(Rejection::new("beta has an odd part"));
    }
    if !pair.beta.has_distinct_parts() {
        return Err(Rejection::new("beta has repeated parts"));
    }
    Ok(())
}

pub fn check_b(b: &BicoloredPartition) -> Membership {
    for color in [Color::Blue, Color::Red] {
        let values = b.values_of(color);
        if values.windows(2).any(|w| w[0] == w[1]) {
            let name = if color == Color::Blue { "blue" } else { "red" };
            return Err(Rejection::new(format!("{name} parts repeat")));
        }
    }
    if red_blue_matching(b).is_none() {
        return Err(Rejection::new(
            "reds cannot be matched to distinct blues of value c or c+1",
        ));
    }
    Ok(())
}

/// Finds an injective assignment of every red entry to a blue entry of the
/// same value or one more. Returns `(red index, blue index)` pairs over
/// `b.entries()`, in red order, or `None` when no such assignment exists.
pub fn red_blue_matching(b: &BicoloredPartition) -> Option<Vec<(usize, usize)>> {
    let entries = b.entries();
    let reds: Vec<usize> = (0..entries.len())
        .filter(|&i| entries[i].color == Color::Red)
        .collect();
    let blues: Vec<usize> = (0..entries.len())
        .filter(|&i| entries[i].color == Color::Blue)
        .collect();
    let adjacency: Vec<Vec<usize>> = reds
        .iter()
        .map(|&r| {
            let c = entries[r].value;
            (0..blues.len())
                .filter(|&j| entries[blues[j]].value == c || entries[blues[j]].value == c + 1)
                .collect()
        })
        .collect();

    let mut blue_owner: Vec<Option<usize>> = vec![None; blues.len()];
    for red in 0..reds.len() {
        let mut seen = vec![false; blues.len()];
        if !augment(red, &adjacency, &mut blue_owner, &mut seen) {
            return None;
        }
    }
    let mut pairs: Vec<(usize, usize)> = blue_owner
        .iter()
        .enumerate()
        .filter_map(|(j, owner)| owner.map(|r| (reds[r], blues[j])))
        .collect();
    pairs.sort_unstable();
    Some(pairs)
}

fn augment(
    red: usize,
    adjacency: &[Vec<usize>],
    blue_owner: &mut [Option<usize>],
    seen: &mut [bool],
) -> bool {
    for &blue in &adjacency[red] {
        if seen[blue] {
            continue;
        }
        seen[blue] = true;
        let free = match blue_owner[blue] {
            None => true,
            Some(other) => augment(other, adjacency, blue_owner, seen),
        };
        if free {
            blue_owner[blue] = Some(red);
            return true;
        }
    }
    false
}
