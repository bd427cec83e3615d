//! Text notation: parts joined by `+` in descending order, `0` for the
//! empty partition. Markers are suffixes: `1*` is the overlined one, `x` an
//! x-label, `r` a red part. Blue parts print bare and parse with or without
//! a `b` suffix. Signed partitions print as `POS | NEG`, pairs as
//! `(ALPHA, BETA)`. `ε` is accepted anywhere `0` is.

use alloc::string::ToString;
use alloc::vec::Vec;
use core::cmp::Reverse;
use core::fmt::{self, Write};
use core::str::FromStr;

use crate::error::ParseError;
use crate::families::{
    BicoloredPartition, Color, ColoredPart, FPartition, LabeledPart, PartitionPair,
    SignedPartition, XLabeledPartition,
};
use crate::membership::{Family, FamilyValue};
use crate::partition::{Part, Partition};

fn write_joined<I, F>(f: &mut fmt::Formatter<'_>, items: I, mut each: F) -> fmt::Result
where
    I: IntoIterator,
    F: FnMut(&mut fmt::Formatter<'_>, I::Item) -> fmt::Result,
{
    let mut first = true;
    for item in items {
        if !first {
            f.write_char('+')?;
        }
        first = false;
        each(f, item)?;
    }
    if first {
        f.write_char('0')?;
    }
    Ok(())
}

/// Splits `s` into `+`-separated tokens; `None` for the empty object.
fn tokens(s: &str) -> Result<Option<Vec<&str>>, ParseError> {
    let s = s.trim();
    if s.is_empty() {
        return Err(ParseError::Empty);
    }
    if s == "0" || s == "ε" {
        return Ok(None);
    }
    Ok(Some(s.split('+').map(str::trim).collect()))
}

fn parse_value(token: &str, whole: &str) -> Result<Part, ParseError> {
    match token.parse::<Part>() {
        Ok(v) if v > 0 => Ok(v),
        _ => Err(ParseError::InvalidPart(whole.to_string())),
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_joined(f, self.parts(), |f, p| write!(f, "{p}"))
    }
}

impl FromStr for Partition {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let Some(tokens) = tokens(s)? else {
            return Ok(Partition::empty());
        };
        let parts = tokens
            .iter()
            .map(|t| parse_value(t, t))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(Partition::from_unsorted(parts)?)
    }
}

impl fmt::Display for FPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_joined(f, self.sequence(), |f, (v, over)| {
            if over {
                f.write_str("1*")
            } else {
                write!(f, "{v}")
            }
        })
    }
}

impl FromStr for FPartition {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let Some(tokens) = tokens(s)? else {
            return Ok(FPartition::default());
        };
        let mut overlined = false;
        let mut parts = Vec::with_capacity(tokens.len());
        for t in tokens {
            if t == "1*" {
                if overlined {
                    return Err(ParseError::InvalidPart(t.to_string()));
                }
                overlined = true;
            } else {
                parts.push(parse_value(t, t)?);
            }
        }
        Ok(FPartition::new(Partition::from_unsorted(parts)?, overlined))
    }
}

impl fmt::Display for SignedPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} | {}", self.positive, self.negative)
    }
}

impl FromStr for SignedPartition {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let (pos, neg) = s.split_once('|').ok_or(ParseError::MissingBar)?;
        Ok(SignedPartition::new(pos.parse()?, neg.parse()?))
    }
}

impl fmt::Display for XLabeledPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_joined(f, self.entries(), |f, e| {
            write!(f, "{}{}", e.value, if e.labeled { "x" } else { "" })
        })
    }
}

impl FromStr for XLabeledPartition {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let Some(tokens) = tokens(s)? else {
            return Ok(XLabeledPartition::default());
        };
        let mut entries = tokens
            .iter()
            .map(|t| match t.strip_suffix('x') {
                Some(v) => parse_value(v, t).map(|value| LabeledPart {
                    value,
                    labeled: true,
                }),
                None => parse_value(t, t).map(|value| LabeledPart {
                    value,
                    labeled: false,
                }),
            })
            .collect::<Result<Vec<_>, _>>()?;
        entries.sort_by_key(|e| Reverse(e.value));
        Ok(XLabeledPartition::new(entries)?)
    }
}

impl fmt::Display for BicoloredPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_joined(f, self.entries(), |f, e| match e.color {
            Color::Blue => write!(f, "{}", e.value),
            Color::Red => write!(f, "{}r", e.value),
        })
    }
}

impl FromStr for BicoloredPartition {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let Some(tokens) = tokens(s)? else {
            return Ok(BicoloredPartition::default());
        };
        let entries = tokens
            .iter()
            .map(|t| {
                if let Some(v) = t.strip_suffix('r') {
                    parse_value(v, t).map(ColoredPart::red)
                } else {
                    parse_value(t.strip_suffix('b').unwrap_or(t), t).map(ColoredPart::blue)
                }
            })
            .collect::<Result<Vec<_>, _>>()?;
        Ok(BicoloredPartition::from_unsorted(entries)?)
    }
}

impl fmt::Display for PartitionPair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.alpha, self.beta)
    }
}

impl FromStr for PartitionPair {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let inner = s
            .trim()
            .strip_prefix('(')
            .and_then(|r| r.strip_suffix(')'))
            .ok_or(ParseError::MalformedPair)?;
        let (alpha, beta) = inner.split_once(',').ok_or(ParseError::MalformedPair)?;
        Ok(PartitionPair::new(alpha.parse()?, beta.parse()?))
    }
}

impl fmt::Display for FamilyValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FamilyValue::Partition(v) => v.fmt(f),
            FamilyValue::F(v) => v.fmt(f),
            FamilyValue::Signed(v) => v.fmt(f),
            FamilyValue::XLabeled(v) => v.fmt(f),
            FamilyValue::Pair(v) => v.fmt(f),
            FamilyValue::Bicolored(v) => v.fmt(f),
        }
    }
}

impl FamilyValue {
    /// Parses `text` as the kind of object `family` is made of. Membership
    /// is not checked.
    pub fn parse_as(family: Family, text: &str) -> Result<FamilyValue, ParseError> {
        Ok(match family {
            Family::Ped => FamilyValue::Partition(text.parse()?),
            Family::F => FamilyValue::F(text.parse()?),
            Family::FSigned | Family::ASigned => FamilyValue::Signed(text.parse()?),
            Family::A => FamilyValue::XLabeled(text.parse()?),
            Family::V | Family::C => FamilyValue::Pair(text.parse()?),
            Family::B => FamilyValue::Bicolored(text.parse()?),
        })
    }
}
