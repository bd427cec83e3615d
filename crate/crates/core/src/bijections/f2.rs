//! Distinct-even partitions to signed partitions with distinct even
//! positive parts and distinct odd negative parts.

use alloc::vec::Vec;

use super::{integrity, require_codomain, require_domain};
use crate::error::BijectionError;
use crate::families::SignedPartition;
use crate::membership::Family;
use crate::partition::{Part, Partition};

pub fn apply_f2(lambda: &Partition) -> Result<SignedPartition, BijectionError> {
    require_domain(Family::Ped, lambda.clone().into())?;
    let odd_total = lambda.count_odd() as Part;
    let mut seen = 0;
    let mut positive = Vec::with_capacity(lambda.len());
    let mut negative = Vec::with_capacity(odd_total as usize);
    for (j, &part) in lambda.parts().iter().enumerate() {
        let is_odd = part % 2 == 1;
        seen += Part::from(is_odd);
        positive.push(part + 2 * (odd_total - seen) + Part::from(is_odd));
        if is_odd {
            negative.push(2 * (j as Part + 1) - 1);
        }
    }
    negative.reverse();
    let sigma = SignedPartition::new(
        Partition::new(positive).map_err(integrity)?,
        Partition::new(negative).map_err(integrity)?,
    );
    require_codomain(Family::FSigned, sigma.clone().into())?;
    Ok(sigma)
}

pub fn apply_f2_inv(sigma: &SignedPartition) -> Result<Partition, BijectionError> {
    require_domain(Family::FSigned, sigma.clone().into())?;
    let mut positions: Vec<usize> = sigma
        .negative
        .parts()
        .iter()
        .map(|&v| (v as usize).div_ceil(2))
        .collect();
    positions.sort_unstable();
    let odd_total = positions.len() as i64;
    let mut seen = 0i64;
    let mut parts = Vec::with_capacity(sigma.positive_len());
    for (j, &part) in sigma.positive.parts().iter().enumerate() {
        let at_position = positions.binary_search(&(j + 1)).is_ok();
        seen += i64::from(at_position);
        let value = i64::from(part) - 2 * (odd_total - seen) - i64::from(at_position);
        if value < 1 {
            return Err(integrity("reconstruction produced a non-positive part"));
        }
        parts.push(value as Part);
    }
    let lambda = Partition::new(parts).map_err(integrity)?;
    require_codomain(Family::Ped, lambda.clone().into())?;
    if lambda.count_odd() as i64 != odd_total {
        return Err(integrity("odd-part count not restored"));
    }
    Ok(lambda)
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::{String, ToString};

    fn f2(s: &str) -> String {
        apply_f2(&s.parse().unwrap()).unwrap().to_string()
    }

    fn f2_inv(s: &str) -> String {
        apply_f2_inv(&s.parse().unwrap()).unwrap().to_string()
    }

    #[test]
    fn hand_traced_examples() {
        assert_eq!(f2("4+3+1"), "8+6+2 | 5+3");
        assert_eq!(f2("2"), "2 | 0");
        assert_eq!(f2("1"), "2 | 1");
        assert_eq!(f2_inv("8+6+2 | 5+3"), "4+3+1");
        assert_eq!(f2_inv("2 | 0"), "2");
        assert_eq!(f2_inv("2 | 1"), "1");
    }

    #[test]
    fn rejects_non_members() {
        assert!(matches!(
            apply_f2_inv(&"2 | 3".parse().unwrap()),
            Err(BijectionError::Domain(_))
        ));
    }
}
