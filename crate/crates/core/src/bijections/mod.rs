//! The five explicit bijections and their inverses.
//!
//! | map | domain → codomain | statistics carried |
//! |-----|-------------------|--------------------|
//! | f1  | ped → F           | (len, even parts) → (plain 1's, overlined odd) |
//! | f2  | ped → F-1         | (len, even parts) → (pos len, pos len − neg len) |
//! | g1  | V → A             | len(beta) → labeled parts |
//! | g2  | A → A-1           | (len, labeled) → (pos len, pos len − neg len) |
//! | h   | C → B             | len(beta) → red parts |
//!
//! Every map validates membership of its input (failures are
//! [`BijectionError::Domain`]) and of its output (failures are
//! [`BijectionError::Integrity`], which always indicate a bug).

mod f1;
mod f2;
mod g1;
mod g2;
mod h;
mod roundtrip;

use alloc::format;
use alloc::string::ToString;
use core::fmt;
use core::str::FromStr;

pub use f1::{apply_f1, apply_f1_inv};
pub use f2::{apply_f2, apply_f2_inv};
pub use g1::{apply_g1, apply_g1_inv};
pub use g2::{apply_g2, apply_g2_inv};
pub use h::{apply_h, apply_h_inv};
pub use roundtrip::{roundtrip_report, Cell, Failure, RoundtripReport};

use crate::error::{BijectionError, UnknownTag};
use crate::membership::{validate_membership, Family, FamilyValue};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Bijection {
    F1,
    F2,
    G1,
    G2,
    H,
}

impl Bijection {
    pub const ALL: [Bijection; 5] = [
        Bijection::F1,
        Bijection::F2,
        Bijection::G1,
        Bijection::G2,
        Bijection::H,
    ];

    pub fn tag(self) -> &'static str {
        match self {
            Bijection::F1 => "f1",
            Bijection::F2 => "f2",
            Bijection::G1 => "g1",
            Bijection::G2 => "g2",
            Bijection::H => "h",
        }
    }

    pub fn domain(self) -> Family {
        match self {
            Bijection::F1 | Bijection::F2 => Family::Ped,
            Bijection::G1 => Family::V,
            Bijection::G2 => Family::A,
            Bijection::H => Family::C,
        }
    }

    pub fn codomain(self) -> Family {
        match self {
            Bijection::F1 => Family::F,
            Bijection::F2 => Family::FSigned,
            Bijection::G1 => Family::A,
            Bijection::G2 => Family::ASigned,
            Bijection::H => Family::B,
        }
    }

    /// Applies the map, or its inverse, to a type-erased value.
    pub fn apply(self, value: &FamilyValue, inverse: bool) -> Result<FamilyValue, BijectionError> {
        let wrong = || {
            BijectionError::Domain(format!(
                "{} expects a {} value",
                self.tag(),
                if inverse {
                    self.codomain()
                } else {
                    self.domain()
                }
            ))
        };
        Ok(match (self, inverse, value) {
            (Bijection::F1, false, FamilyValue::Partition(p)) => apply_f1(p)?.into(),
            (Bijection::F1, true, FamilyValue::F(f)) => apply_f1_inv(f)?.into(),
            (Bijection::F2, false, FamilyValue::Partition(p)) => apply_f2(p)?.into(),
            (Bijection::F2, true, FamilyValue::Signed(s)) => apply_f2_inv(s)?.into(),
            (Bijection::G1, false, FamilyValue::Pair(p)) => apply_g1(p)?.into(),
            (Bijection::G1, true, FamilyValue::XLabeled(x)) => apply_g1_inv(x)?.into(),
            (Bijection::G2, false, FamilyValue::XLabeled(x)) => apply_g2(x)?.into(),
            (Bijection::G2, true, FamilyValue::Signed(s)) => apply_g2_inv(s)?.into(),
            (Bijection::H, false, FamilyValue::Pair(p)) => apply_h(p)?.into(),
            (Bijection::H, true, FamilyValue::Bicolored(b)) => apply_h_inv(b)?.into(),
            _ => return Err(wrong()),
        })
    }
}

impl fmt::Display for Bijection {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

impl FromStr for Bijection {
    type Err = UnknownTag;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Bijection::ALL
            .into_iter()
            .find(|b| b.tag().eq_ignore_ascii_case(s.trim()))
            .ok_or_else(|| UnknownTag {
                kind: "bijection",
                tag: s.to_string(),
            })
    }
}

fn require_domain(family: Family, value: FamilyValue) -> Result<(), BijectionError> {
    validate_membership(family, &value)
        .map_err(|r| BijectionError::Domain(format!("not in {family}: {r}")))
}

fn require_codomain(family: Family, value: FamilyValue) -> Result<(), BijectionError> {
    validate_membership(family, &value)
        .map_err(|r| BijectionError::Integrity(format!("output not in {family}: {r}")))
}

fn integrity(msg: impl fmt::Display) -> BijectionError {
    BijectionError::Integrity(msg.to_string())
}
