//! Pairs (distinct parts, distinct even parts) to bicolored partitions.
//!
//! The small parts of alpha (those not above `k = len(beta)`) are folded
//! into beta, each even-or-odd entry of the lifted beta is split into a
//! blue/red pair, and the pairs are slid leftwards one by one through the
//! remaining blue parts. Sliding a pair past a blue part `a` turns
//! `a, c, c_r` into `c+1, c_r, a-1` and `a, c, (c-1)_r` into `c, c_r, a-1`.

use alloc::format;
use alloc::vec::Vec;
use core::cmp::Reverse;

use super::{integrity, require_codomain, require_domain};
use crate::error::BijectionError;
use crate::families::{BicoloredPartition, Color, ColoredPart, PartitionPair};
use crate::membership::Family;
use crate::partition::{Part, Partition};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
struct Slot {
    value: Part,
    color: Color,
    /// Blue half of a pair, or any red.
    paired: bool,
}

impl Slot {
    fn free(value: Part) -> Self {
        Slot {
            value,
            color: Color::Blue,
            paired: false,
        }
    }

    fn pair_blue(value: Part) -> Self {
        Slot {
            value,
            color: Color::Blue,
            paired: true,
        }
    }

    fn pair_red(value: Part) -> Self {
        Slot {
            value,
            color: Color::Red,
            paired: true,
        }
    }
}

/// Lifts beta by the small parts of alpha: `beta'_j = beta_j + #{s : s >= j}`.
fn fold_small_parts(alpha: &Partition, k: usize) -> (Vec<Part>, Vec<Part>) {
    let big: Vec<Part> = alpha
        .parts()
        .iter()
        .copied()
        .filter(|&a| a as usize > k)
        .collect();
    let small: Vec<Part> = alpha
        .parts()
        .iter()
        .copied()
        .filter(|&a| a as usize <= k)
        .collect();
    (big, small)
}

fn split(b: Part) -> (Part, Part) {
    (b.div_ceil(2), b / 2)
}

/// Slides the pair whose blue half sits at `i` leftwards until the part
/// before it is larger, or is a red.
fn slide_forward(seq: &mut [Slot], mut i: usize) -> Result<(), BijectionError> {
    while i > 0 {
        let prev = seq[i - 1];
        let blue = seq[i].value;
        let red = seq[i + 1].value;
        let must_move = prev.value < blue || (prev.value == blue && prev.color == Color::Blue);
        if !must_move {
            break;
        }
        if prev.paired {
            return Err(integrity(format!(
                "pair {blue}+{red}r would have to pass the paired part {}",
                prev.value
            )));
        }
        if prev.value == 1 {
            return Err(integrity("forward adjustment would remove a part"));
        }
        let (new_blue, new_red) = if blue == red {
            (blue + 1, red)
        } else if blue == red + 1 {
            (blue, red + 1)
        } else {
            return Err(integrity("malformed pair"));
        };
        seq[i - 1] = Slot::pair_blue(new_blue);
        seq[i] = Slot::pair_red(new_red);
        seq[i + 1] = Slot::free(prev.value - 1);
        i -= 1;
    }
    Ok(())
}

pub fn apply_h(pair: &PartitionPair) -> Result<BicoloredPartition, BijectionError> {
    require_domain(Family::C, pair.clone().into())?;
    let k = pair.beta.len();
    if k == 0 {
        return Ok(BicoloredPartition::all_blue(&pair.alpha));
    }

    // Step 1.
    let (big, small) = fold_small_parts(&pair.alpha, k);
    let lifted: Vec<Part> = pair
        .beta
        .parts()
        .iter()
        .enumerate()
        .map(|(j, &b)| b + small.iter().filter(|&&s| s as usize > j).count() as Part)
        .collect();
    let gained: u64 = small.iter().map(|&s| u64::from(s)).sum();
    let lifted_weight: u64 = lifted.iter().map(|&b| u64::from(b)).sum();
    if lifted_weight != pair.beta.weight() + gained {
        return Err(integrity("lifting beta did not absorb the small parts"));
    }

    // Steps 2 and 3.
    let mut seq: Vec<Slot> = big.iter().map(|&a| Slot::free(a)).collect();
    for &b in &lifted {
        let (blue, red) = split(b);
        seq.push(Slot::pair_blue(blue));
        seq.push(Slot::pair_red(red));
        let at = seq.len() - 2;
        slide_forward(&mut seq, at)?;
    }

    if seq.windows(2).any(|w| w[0].value < w[1].value) {
        return Err(integrity("adjusted sequence is not weakly decreasing"));
    }
    let entries = seq
        .iter()
        .map(|s| ColoredPart {
            value: s.value,
            color: s.color,
        })
        .collect();
    let lambda = BicoloredPartition::from_unsorted(entries).map_err(integrity)?;
    require_codomain(Family::B, lambda.clone().into())?;
    if lambda.red_count() != k {
        return Err(integrity("red count differs from len(beta)"));
    }
    Ok(lambda)
}

/// Every injective choice of blue partner (value `c` or `c + 1`) for each
/// red `c`, as a list of blue indices parallel to `reds`.
fn pairings(entries: &[ColoredPart], reds: &[usize]) -> Vec<Vec<usize>> {
    fn go(
        entries: &[ColoredPart],
        reds: &[usize],
        chosen: &mut Vec<usize>,
        out: &mut Vec<Vec<usize>>,
    ) {
        let Some(&r) = reds.get(chosen.len()) else {
            out.push(chosen.clone());
            return;
        };
        let c = entries[r].value;
        for (j, e) in entries.iter().enumerate() {
            if e.color == Color::Blue && (e.value == c || e.value == c + 1) && !chosen.contains(&j)
            {
                chosen.push(j);
                go(entries, reds, chosen, out);
                chosen.pop();
            }
        }
    }
    let mut out = Vec::new();
    go(entries, reds, &mut Vec::new(), &mut out);
    out
}

/// Reverses the slides of the last pair until it is at the end, then
/// detaches it. Returns the merged value `blue + red`.
fn detach_last_pair(seq: &mut Vec<Slot>) -> Option<Part> {
    let mut i = seq
        .iter()
        .rposition(|s| s.paired && s.color == Color::Blue)?;
    if seq.get(i + 1).is_none_or(|s| s.color != Color::Red) {
        return None;
    }
    while i + 2 < seq.len() {
        let next = seq[i + 2];
        if next.paired {
            return None;
        }
        let (blue, red) = (seq[i].value, seq[i + 1].value);
        let (new_blue, new_red) = if blue == red {
            (blue, red.checked_sub(1).filter(|&r| r > 0)?)
        } else if blue == red + 1 {
            (red, red)
        } else {
            return None;
        };
        seq[i] = Slot::free(next.value + 1);
        seq[i + 1] = Slot::pair_blue(new_blue);
        seq[i + 2] = Slot::pair_red(new_red);
        i += 1;
    }
    let red = seq.pop()?.value;
    let blue = seq.pop()?.value;
    Some(blue + red)
}

/// Undoes the folding of small parts: the lift `d_j = beta'_j - beta_j`
/// has the parity of `beta'_j`, never decreases going up, and steps by at
/// most one, so it is determined by the parities alone.
fn unfold(lifted: &[Part]) -> Option<(Vec<Part>, Vec<Part>)> {
    let k = lifted.len();
    let mut beta = alloc::vec![0; k];
    let mut small = Vec::new();
    let mut below = 0;
    for j in (0..k).rev() {
        let d = if lifted[j] % 2 == below % 2 {
            below
        } else {
            below + 1
        };
        if d > below {
            small.push(j as Part + 1);
        }
        beta[j] = lifted[j].checked_sub(d).filter(|&b| b > 0)?;
        below = d;
    }
    Some((beta, small))
}

/// Rebuilds the slid sequence for one pairing and undoes every slide.
///
/// Canonical order puts blue before red at equal values, but a slid
/// sequence may have an earlier pair's red `c` directly before a later
/// pair's blue `c`. So the sequence is rebuilt from units (a pair, or a
/// free blue) ordered by their blue value, which is unique since blues are
/// distinct, and then checked to be weakly decreasing.
fn preimage_for(entries: &[ColoredPart], reds: &[usize], blues: &[usize]) -> Option<PartitionPair> {
    let mut units: Vec<(Part, Option<Part>)> = entries
        .iter()
        .enumerate()
        .filter(|(j, e)| e.color == Color::Blue && !blues.contains(j))
        .map(|(_, e)| (e.value, None))
        .collect();
    units.extend(
        reds.iter()
            .zip(blues)
            .map(|(&r, &b)| (entries[b].value, Some(entries[r].value))),
    );
    units.sort_unstable_by_key(|u| Reverse(u.0));
    let mut seq: Vec<Slot> = Vec::with_capacity(entries.len());
    for (blue, red) in units {
        match red {
            None => seq.push(Slot::free(blue)),
            Some(red) => {
                seq.push(Slot::pair_blue(blue));
                seq.push(Slot::pair_red(red));
            }
        }
    }
    if seq.windows(2).any(|w| w[0].value < w[1].value) {
        return None;
    }
    let mut lifted = Vec::with_capacity(reds.len());
    for _ in 0..reds.len() {
        lifted.push(detach_last_pair(&mut seq)?);
    }
    lifted.reverse();
    let (beta, small) = unfold(&lifted)?;
    let alpha: Vec<Part> = seq.iter().map(|s| s.value).chain(small).collect();
    let alpha = Partition::from_unsorted(alpha).ok()?;
    let beta = Partition::new(beta).ok()?;
    Some(PartitionPair::new(alpha, beta))
}

/// Inverts [`apply_h`] by trying every red/blue pairing, undoing the slides
/// for each, and keeping the candidates that map forward to `lambda`.
pub fn apply_h_inv(lambda: &BicoloredPartition) -> Result<PartitionPair, BijectionError> {
    require_domain(Family::B, lambda.clone().into())?;
    let entries = lambda.entries();
    let reds: Vec<usize> = (0..entries.len())
        .filter(|&i| entries[i].color == Color::Red)
        .collect();
    if reds.is_empty() {
        let alpha = Partition::new(entries.iter().map(|e| e.value).collect()).map_err(integrity)?;
        return Ok(PartitionPair::new(alpha, Partition::empty()));
    }

    let mut found: Vec<PartitionPair> = Vec::new();
    for blues in pairings(entries, &reds) {
        let Some(candidate) = preimage_for(entries, &reds, &blues) else {
            continue;
        };
        if crate::membership::check_c(&candidate).is_err() || found.contains(&candidate) {
            continue;
        }
        if apply_h(&candidate).as_ref() == Ok(lambda) {
            found.push(candidate);
        }
    }
    match found.len() {
        0 => Err(integrity(format!("no preimage found for {lambda}"))),
        1 => Ok(found.remove(0)),
        _ => Err(BijectionError::BijectivityViolation(format!(
            "{lambda} has {} preimages: {} and {}",
            found.len(),
            found[0],
            found[1]
        ))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::{String, ToString};

    fn h(s: &str) -> String {
        apply_h(&s.parse().unwrap()).unwrap().to_string()
    }

    fn h_inv(s: &str) -> String {
        apply_h_inv(&s.parse().unwrap()).unwrap().to_string()
    }

    #[test]
    fn worked_examples() {
        assert_eq!(h("(3, 8)"), "5+4r+2");
        assert_eq!(h("(2+1, 8)"), "5+5r+1");
        assert_eq!(h("(11, 0)"), "11");
        assert_eq!(h("(3+2, 4+2)"), "3+3r+2+2r+1");
        assert_eq!(h_inv("5+4r+2"), "(3, 8)");
        assert_eq!(h_inv("6+5r"), "(1, 10)");
        assert_eq!(h_inv("4b"), "(4, 0)");
    }

    #[test]
    fn unfold_inverts_lifting() {
        // small parts {1, 2} on beta = (6, 2): lifted (8, 3).
        assert_eq!(
            unfold(&[8, 3]),
            Some((alloc::vec![6, 2], alloc::vec![2, 1]))
        );
        assert_eq!(unfold(&[8]), Some((alloc::vec![8], alloc::vec![])));
    }

    #[test]
    fn rejects_non_members() {
        assert!(matches!(
            apply_h(&"(3, 3)".parse().unwrap()),
            Err(BijectionError::Domain(_))
        ));
        assert!(matches!(
            apply_h_inv(&"3+1r".parse().unwrap()),
            Err(BijectionError::Domain(_))
        ));
    }
}
