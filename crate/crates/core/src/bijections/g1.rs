//! Pairs of distinct-part partitions to x-labeled partitions: each part
//! `j` of the second component labels position `j` and lifts the first
//! `j` parts by one.

use alloc::vec::Vec;

use super::{integrity, require_codomain, require_domain};
use crate::error::BijectionError;
use crate::families::{LabeledPart, PartitionPair, XLabeledPartition};
use crate::membership::Family;
use crate::partition::{Part, Partition};

fn lift(beta: &[Part], position: usize) -> Part {
    beta.iter().filter(|&&b| b as usize >= position).count() as Part
}

pub fn apply_g1(pair: &PartitionPair) -> Result<XLabeledPartition, BijectionError> {
    require_domain(Family::V, pair.clone().into())?;
    let beta = pair.beta.parts();
    let entries = pair
        .alpha
        .parts()
        .iter()
        .enumerate()
        .map(|(i, &a)| LabeledPart {
            value: a + lift(beta, i + 1),
            labeled: beta.contains(&(i as Part + 1)),
        })
        .collect();
    let lambda = XLabeledPartition::new(entries).map_err(integrity)?;
    require_codomain(Family::A, lambda.clone().into())?;
    Ok(lambda)
}

pub fn apply_g1_inv(lambda: &XLabeledPartition) -> Result<PartitionPair, BijectionError> {
    require_domain(Family::A, lambda.clone().into())?;
    let beta: Vec<Part> = (1..=lambda.len() as Part)
        .rev()
        .filter(|&j| lambda.entries()[j as usize - 1].labeled)
        .collect();
    let mut alpha = Vec::with_capacity(lambda.len());
    for (i, e) in lambda.entries().iter().enumerate() {
        let l = lift(&beta, i + 1);
        if e.value <= l {
            return Err(integrity("lowering produced a non-positive part"));
        }
        alpha.push(e.value - l);
    }
    let pair = PartitionPair::new(
        Partition::new(alpha).map_err(integrity)?,
        Partition::new(beta).map_err(integrity)?,
    );
    require_codomain(Family::V, pair.clone().into())?;
    Ok(pair)
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::{String, ToString};

    fn g1(s: &str) -> String {
        apply_g1(&s.parse().unwrap()).unwrap().to_string()
    }

    fn g1_inv(s: &str) -> String {
        apply_g1_inv(&s.parse().unwrap()).unwrap().to_string()
    }

    #[test]
    fn hand_traced_examples() {
        assert_eq!(g1("(3+1, 2)"), "4+2x");
        assert_eq!(g1("(2+1, 2+1)"), "4x+2x");
        assert_eq!(g1("(5+2, 0)"), "5+2");
        assert_eq!(g1_inv("4+2x"), "(3+1, 2)");
        assert_eq!(g1_inv("4x+2x"), "(2+1, 2+1)");
        assert_eq!(g1_inv("5+2"), "(5+2, 0)");
    }

    #[test]
    fn rejects_non_members() {
        assert!(matches!(
            apply_g1(&"(3, 2)".parse().unwrap()),
            Err(BijectionError::Domain(_))
        ));
        assert!(matches!(
            apply_g1_inv(&"3x+2".parse().unwrap()),
            Err(BijectionError::Domain(_))
        ));
    }
}
