//! x-labeled partitions to signed partitions whose positive parts differ by
//! at least 2. The positions of the unlabeled parts become the negative
//! parts; each unlabeled position lifts every part up to and including it.

use alloc::vec::Vec;

use super::{integrity, require_codomain, require_domain};
use crate::error::BijectionError;
use crate::families::{LabeledPart, SignedPartition, XLabeledPartition};
use crate::membership::Family;
use crate::partition::{Part, Partition};

/// Number of listed positions at or after `j`.
fn lift(positions: &[usize], j: usize) -> Part {
    positions.iter().filter(|&&i| i >= j).count() as Part
}

pub fn apply_g2(lambda: &XLabeledPartition) -> Result<SignedPartition, BijectionError> {
    require_domain(Family::A, lambda.clone().into())?;
    let unlabeled: Vec<usize> = (1..=lambda.len())
        .filter(|&j| !lambda.entries()[j - 1].labeled)
        .collect();
    let positive = lambda
        .entries()
        .iter()
        .enumerate()
        .map(|(i, e)| e.value + lift(&unlabeled, i + 1))
        .collect();
    let negative = unlabeled.iter().rev().map(|&i| i as Part).collect();
    let sigma = SignedPartition::new(
        Partition::new(positive).map_err(integrity)?,
        Partition::new(negative).map_err(integrity)?,
    );
    require_codomain(Family::ASigned, sigma.clone().into())?;
    if sigma.positive_len() != lambda.len() {
        return Err(integrity("number of parts not preserved"));
    }
    Ok(sigma)
}

pub fn apply_g2_inv(sigma: &SignedPartition) -> Result<XLabeledPartition, BijectionError> {
    require_domain(Family::ASigned, sigma.clone().into())?;
    let unlabeled: Vec<usize> = sigma.negative.parts().iter().map(|&p| p as usize).collect();
    let mut entries = Vec::with_capacity(sigma.positive_len());
    for (i, &part) in sigma.positive.parts().iter().enumerate() {
        let l = lift(&unlabeled, i + 1);
        if part <= l {
            return Err(integrity("lowering produced a non-positive part"));
        }
        entries.push(LabeledPart {
            value: part - l,
            labeled: !unlabeled.contains(&(i + 1)),
        });
    }
    let lambda = XLabeledPartition::new(entries).map_err(integrity)?;
    require_codomain(Family::A, lambda.clone().into())?;
    Ok(lambda)
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::{String, ToString};

    fn g2(s: &str) -> String {
        apply_g2(&s.parse().unwrap()).unwrap().to_string()
    }

    fn g2_inv(s: &str) -> String {
        apply_g2_inv(&s.parse().unwrap()).unwrap().to_string()
    }

    #[test]
    fn hand_traced_examples() {
        assert_eq!(g2("3x+1"), "4+2 | 2");
        assert_eq!(g2("3+1"), "5+2 | 2+1");
        assert_eq!(g2("0"), "0 | 0");
        assert_eq!(g2_inv("4+2 | 2"), "3x+1");
        assert_eq!(g2_inv("5+2 | 2+1"), "3+1");
        assert_eq!(g2_inv("0 | 0"), "0");
    }

    #[test]
    fn rejects_non_members() {
        assert!(matches!(
            apply_g2_inv(&"4+3 | 1".parse().unwrap()),
            Err(BijectionError::Domain(_))
        ));
    }
}
