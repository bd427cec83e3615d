//! Distinct-even partitions to overlined-one partitions.
//!
//! Step 1 strips a staircase keyed on the positions of the even parts,
//! leaving all-odd parts and collecting `2i - 1` for each even position `i`.
//! Step 2 peels a 1 from every part, step 3 conjugates the (halved) even
//! remainder. The collected `2i - 1` become the odd parts, with a 1 there
//! becoming the overlined one.

use alloc::vec::Vec;

use super::{integrity, require_codomain, require_domain};
use crate::error::BijectionError;
use crate::families::FPartition;
use crate::membership::Family;
use crate::partition::{Part, Partition};

pub fn apply_f1(lambda: &Partition) -> Result<FPartition, BijectionError> {
    require_domain(Family::Ped, lambda.clone().into())?;
    let parts = lambda.parts();
    let m = parts.len();
    let k = lambda.count_even() as i64;

    // Step 1.
    let mut seen_even = 0i64;
    let mut odd_shape = Vec::with_capacity(m);
    let mut collected = Vec::with_capacity(k as usize);
    for (j, &part) in parts.iter().enumerate() {
        let is_even = part % 2 == 0;
        seen_even += i64::from(is_even);
        let reduced = i64::from(part) - 2 * k + 2 * seen_even - i64::from(is_even);
        if reduced < 1 || reduced % 2 == 0 {
            return Err(integrity(
                "staircase removal left a non-positive or even part",
            ));
        }
        odd_shape.push(reduced as Part);
        if is_even {
            collected.push(2 * (j as Part + 1) - 1);
        }
    }
    if odd_shape.windows(2).any(|w| w[0] < w[1]) {
        return Err(integrity("staircase removal broke the ordering"));
    }
    let removed: u64 = odd_shape
        .iter()
        .chain(&collected)
        .map(|&p| u64::from(p))
        .sum();
    if removed != lambda.weight() {
        return Err(integrity("staircase removal did not preserve weight"));
    }

    // Step 2: parts above 1 lose a unit; m ones are set aside.
    let even_shape: Vec<Part> = odd_shape
        .iter()
        .filter(|&&p| p > 1)
        .map(|p| p - 1)
        .collect();

    // Step 3: part 2s repeated (even_shape[s-1] - even_shape[s]) / 2 times.
    let mut rebuilt = Vec::new();
    for s in (1..=even_shape.len()).rev() {
        let next = even_shape.get(s).copied().unwrap_or(0);
        let times = (even_shape[s - 1] - next) / 2;
        rebuilt.extend(core::iter::repeat_n(2 * s as Part, times as usize));
    }

    let overlined = collected.first() == Some(&1);
    let mut all = rebuilt;
    all.extend(collected.iter().copied().filter(|&p| p > 1));
    all.extend(core::iter::repeat_n(1, m));
    let mu = FPartition::new(Partition::from_unsorted(all).map_err(integrity)?, overlined);
    require_codomain(Family::F, mu.clone().into())?;
    Ok(mu)
}

pub fn apply_f1_inv(mu: &FPartition) -> Result<Partition, BijectionError> {
    require_domain(Family::F, mu.clone().into())?;
    let m = mu.plain_ones();

    // Odd parts (the overlined 1 included) give the even positions.
    let mut positions: Vec<usize> = mu
        .parts
        .parts()
        .iter()
        .filter(|&&p| p > 1 && p % 2 == 1)
        .map(|&p| (p as usize).div_ceil(2))
        .collect();
    if mu.overlined_one {
        positions.push(1);
    }
    positions.sort_unstable();
    let k = positions.len() as i64;

    // Undo step 3: even_shape[s-1] = 2 * #{even parts >= 2s}.
    let evens: Vec<Part> = mu
        .parts
        .parts()
        .iter()
        .copied()
        .filter(|p| p % 2 == 0)
        .collect();
    let t = evens.first().map_or(0, |&p| p as usize / 2);
    if t > m || positions.last().is_some_and(|&i| i > m) {
        return Err(integrity("parts too large for the number of plain 1's"));
    }
    let even_shape: Vec<Part> = (1..=t)
        .map(|s| 2 * evens.iter().filter(|&&p| p as usize >= 2 * s).count() as Part)
        .collect();

    // Undo step 2, then step 1.
    let mut parts = Vec::with_capacity(m);
    let mut seen = 0i64;
    for j in 1..=m {
        let odd = if j <= t { even_shape[j - 1] + 1 } else { 1 };
        let at_position = positions.binary_search(&j).is_ok();
        seen += i64::from(at_position);
        let value = i64::from(odd) + 2 * k - 2 * seen + i64::from(at_position);
        parts.push(value as Part);
    }
    let lambda = Partition::new(parts).map_err(integrity)?;
    require_codomain(Family::Ped, lambda.clone().into())?;
    if lambda.count_even() as i64 != k {
        return Err(integrity("even-part count not restored"));
    }
    Ok(lambda)
}
