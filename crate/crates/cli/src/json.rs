//! JSON forms of the family objects.

use parteq_core::families::{ColoredPart, LabeledPart};
use parteq_core::{
    BicoloredPartition, Color, FPartition, Family, FamilyValue, Part, Partition, PartitionPair,
    SignedPartition, StructureError, XLabeledPartition,
};
use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::error::CliError;

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct PartsJson {
    parts: Vec<Part>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct FJson {
    parts: Vec<Part>,
    #[serde(default)]
    overlined_one: bool,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct LabeledJson {
    v: Part,
    #[serde(default)]
    x: bool,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct XLabeledJson {
    entries: Vec<LabeledJson>,
}

#[derive(Serialize, Deserialize)]
enum ColorJson {
    #[serde(rename = "b")]
    Blue,
    #[serde(rename = "r")]
    Red,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct ColoredJson {
    v: Part,
    c: ColorJson,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct BicoloredJson {
    entries: Vec<ColoredJson>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct SignedJson {
    pos: Vec<Part>,
    neg: Vec<Part>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct PairJson {
    alpha: Vec<Part>,
    beta: Vec<Part>,
}

pub fn to_json(value: &FamilyValue) -> Value {
    let parts = |p: &Partition| p.parts().to_vec();
    let result = match value {
        FamilyValue::Partition(p) => serde_json::to_value(PartsJson { parts: parts(p) }),
        FamilyValue::F(f) => serde_json::to_value(FJson {
            parts: parts(&f.parts),
            overlined_one: f.overlined_one,
        }),
        FamilyValue::Signed(s) => serde_json::to_value(SignedJson {
            pos: parts(&s.positive),
            neg: parts(&s.negative),
        }),
        FamilyValue::XLabeled(x) => serde_json::to_value(XLabeledJson {
            entries: x
                .entries()
                .iter()
                .map(|e| LabeledJson {
                    v: e.value,
                    x: e.labeled,
                })
                .collect(),
        }),
        FamilyValue::Pair(pair) => serde_json::to_value(PairJson {
            alpha: parts(&pair.alpha),
            beta: parts(&pair.beta),
        }),
        FamilyValue::Bicolored(b) => serde_json::to_value(BicoloredJson {
            entries: b
                .entries()
                .iter()
                .map(|e| ColoredJson {
                    v: e.value,
                    c: match e.color {
                        Color::Blue => ColorJson::Blue,
                        Color::Red => ColorJson::Red,
                    },
                })
                .collect(),
        }),
    };
    result.expect("plain data serializes")
}

fn structure(e: StructureError) -> CliError {
    CliError::Usage(format!("malformed object: {e}"))
}

/// Reads the JSON form of an object of `family`. Parts may come in any
/// order.
pub fn from_json(family: Family, text: &str) -> Result<FamilyValue, CliError> {
    let partition = |parts: Vec<Part>| Partition::from_unsorted(parts).map_err(structure);
    Ok(match family {
        Family::Ped => {
            let j: PartsJson = serde_json::from_str(text)?;
            FamilyValue::Partition(partition(j.parts)?)
        }
        Family::F => {
            let j: FJson = serde_json::from_str(text)?;
            FamilyValue::F(FPartition::new(partition(j.parts)?, j.overlined_one))
        }
        Family::FSigned | Family::ASigned => {
            let j: SignedJson = serde_json::from_str(text)?;
            FamilyValue::Signed(SignedPartition::new(partition(j.pos)?, partition(j.neg)?))
        }
        Family::A => {
            let j: XLabeledJson = serde_json::from_str(text)?;
            let mut entries: Vec<LabeledPart> = j
                .entries
                .into_iter()
                .map(|e| LabeledPart {
                    value: e.v,
                    labeled: e.x,
                })
                .collect();
            entries.sort_by_key(|e| std::cmp::Reverse(e.value));
            FamilyValue::XLabeled(XLabeledPartition::new(entries).map_err(structure)?)
        }
        Family::V | Family::C => {
            let j: PairJson = serde_json::from_str(text)?;
            FamilyValue::Pair(PartitionPair::new(partition(j.alpha)?, partition(j.beta)?))
        }
        Family::B => {
            let j: BicoloredJson = serde_json::from_str(text)?;
            let entries = j
                .entries
                .into_iter()
                .map(|e| match e.c {
                    ColorJson::Blue => ColoredPart::blue(e.v),
                    ColorJson::Red => ColoredPart::red(e.v),
                })
                .collect();
            FamilyValue::Bicolored(BicoloredPartition::from_unsorted(entries).map_err(structure)?)
        }
    })
}

/// Accepts either notation: JSON when the input starts with `{`, text
/// otherwise.
pub fn parse_input(family: Family, input: &str) -> Result<FamilyValue, CliError> {
    if input.trim_start().starts_with('{') {
        from_json(family, input)
    } else {
        Ok(FamilyValue::parse_as(family, input)?)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn json_round_trips() {
        let cases = [
            (Family::Ped, "4+3+1"),
            (Family::F, "4+1*+1+1+1"),
            (Family::FSigned, "8+6+2 | 5+3"),
            (Family::A, "4x+2"),
            (Family::V, "(3+1, 2)"),
            (Family::B, "5+4r+2"),
        ];
        for (family, text) in cases {
            let value = parse_input(family, text).unwrap();
            let json = to_json(&value).to_string();
            assert_eq!(from_json(family, &json).unwrap(), value, "{json}");
        }
    }

    #[test]
    fn documented_shapes() {
        let b = parse_input(Family::B, "5+4r").unwrap();
        assert_eq!(
            to_json(&b).to_string(),
            r#"{"entries":[{"v":5,"c":"b"},{"v":4,"c":"r"}]}"#
        );
        let f = parse_input(Family::F, "1*+1").unwrap();
        assert_eq!(
            to_json(&f).to_string(),
            r#"{"parts":[1],"overlined_one":true}"#
        );
        let pair = parse_input(Family::C, r#"{"alpha":[3],"beta":[8]}"#).unwrap();
        assert_eq!(pair.to_string(), "(3, 8)");
    }

    #[test]
    fn bad_json_is_a_usage_error() {
        for input in [r#"{"parts":[0]}"#, r#"{"parts":[1],"extra":1}"#, "{"] {
            assert_eq!(
                parse_input(Family::Ped, input).unwrap_err().exit_code(),
                2,
                "{input}"
            );
        }
    }
}
