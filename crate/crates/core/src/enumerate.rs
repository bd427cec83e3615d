//! Exhaustive, deterministic generators for the eight families.
//!
//! These are deliberately direct searches over the family definitions and
//! never go through a bijection, so they can serve as the oracle for every
//! bijection and generating-function check. Output is in canonical order:
//! descending under each type's `Ord`.

use alloc::vec::Vec;

use crate::error::EnumerateError;
use crate::families::{
    BicoloredPartition, ColoredPart, FPartition, LabeledPart, PartitionPair, SignedPartition,
    XLabeledPartition,
};
use crate::membership::{check_b, Family, FamilyValue};
use crate::partition::{Part, Partition};

pub const DEFAULT_LIMIT: usize = 60;

/// Runs the family generators, refusing weights above `limit`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Enumerator {
    limit: usize,
}

impl Default for Enumerator {
    fn default() -> Self {
        Self {
            limit: DEFAULT_LIMIT,
        }
    }
}

impl Enumerator {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn with_limit(limit: usize) -> Self {
        Self { limit }
    }

    pub fn limit(&self) -> usize {
        self.limit
    }

    fn check(&self, n: usize) -> Result<(), EnumerateError> {
        if n > self.limit {
            Err(EnumerateError::LimitExceeded {
                n,
                limit: self.limit,
            })
        } else {
            Ok(())
        }
    }

    /// Partitions of `n` with distinct even parts, optionally restricted to
    /// `m` parts of which `k` are even.
    pub fn ped(
        &self,
        n: usize,
        m: Option<usize>,
        k: Option<usize>,
    ) -> Result<Vec<Partition>, EnumerateError> {
        self.check(n)?;
        let mut out: Vec<Partition> =
            parts_by_rule(n as Part, n as Part, 1, |_| true, |p| p % 2 == 1)
                .into_iter()
                .map(Partition::from_sorted_unchecked)
                .filter(|p| m.is_none_or(|m| p.len() == m) && k.is_none_or(|k| p.count_even() == k))
                .collect();
        canonical_sort(&mut out);
        Ok(out)
    }

    /// Overlined-one partitions of `n` with `m` plain 1's and `k` odd parts
    /// counting the overlined 1.
    pub fn f(
        &self,
        n: usize,
        m: Option<usize>,
        k: Option<usize>,
    ) -> Result<Vec<FPartition>, EnumerateError> {
        self.check(n)?;
        let mut out = Vec::new();
        if n == 0 {
            out.push(FPartition::default());
        }
        for overlined in [false, true] {
            let fixed = usize::from(overlined);
            for ones in 1..=n.saturating_sub(fixed) {
                if m.is_some_and(|m| m != ones) {
                    continue;
                }
                let rest = n - ones - fixed;
                // Parts other than 1 lie in [2, 2*ones]; odd ones may not repeat.
                for big in
                    parts_by_rule(rest as Part, 2 * ones as Part, 2, |_| true, |p| p % 2 == 0)
                {
                    let mut parts = big;
                    parts.extend(core::iter::repeat_n(1, ones));
                    let value = FPartition::new(Partition::from_sorted_unchecked(parts), overlined);
                    if k.is_none_or(|k| value.overlined_odd_count() == k) {
                        out.push(value);
                    }
                }
            }
        }
        canonical_sort(&mut out);
        Ok(out)
    }

    /// Signed partitions of `n` with distinct even positive parts and
    /// distinct odd negative parts at most `2 * positive_len - 1`.
    ///
    /// The family is infinite as a set of pairs of unbounded weight, so the
    /// search uses two bounds that follow from the constraints. With `m`
    /// positive parts, `|pos| >= 2 + 4 + ... + 2m = m(m+1)` and
    /// `|neg| <= 1 + 3 + ... + (2m-1) = m^2`, hence `n >= m`. Writing the
    /// negative parts as the odd numbers below `2m` minus a complement set,
    /// the complement sums to `m^2 - |neg| = m^2 + n - |pos| <= n - m`.
    pub fn f_signed(
        &self,
        n: usize,
        m: Option<usize>,
        k: Option<usize>,
    ) -> Result<Vec<SignedPartition>, EnumerateError> {
        self.check(n)?;
        let mut out = Vec::new();
        for len in 0..=n {
            if m.is_some_and(|m| m != len) {
                continue;
            }
            let odd_pool: Vec<Part> = (0..len as Part).map(|i| 2 * i + 1).collect();
            let slack = (n - len) as Part;
            for complement in subsets_with_sum_at_most(&odd_pool, slack) {
                let negative = set_difference(&odd_pool, &complement);
                if k.is_some_and(|k| len < k || negative.len() != len - k) {
                    continue;
                }
                let neg_weight: u64 = negative.iter().map(|&p| u64::from(p)).sum();
                let pos_weight = n as u64 + neg_weight;
                if pos_weight % 2 == 1 {
                    continue;
                }
                let half = (pos_weight / 2) as Part;
                for halves in strict_parts(half, len, half, 1, 1) {
                    let positive = halves.into_iter().map(|p| 2 * p).collect();
                    out.push(SignedPartition::new(
                        Partition::from_sorted_unchecked(positive),
                        Partition::from_sorted_unchecked(negative.clone()),
                    ));
                }
            }
        }
        canonical_sort(&mut out);
        Ok(out)
    }

    /// Pairs of distinct-part partitions with total weight `n`, `k` parts
    /// in the second component and `max(beta) <= len(alpha)`.
    pub fn v(&self, n: usize, k: Option<usize>) -> Result<Vec<PartitionPair>, EnumerateError> {
        self.check(n)?;
        let mut out = Vec::new();
        for alpha_weight in 0..=n {
            for alpha in distinct_parts(alpha_weight as Part, alpha_weight as Part) {
                let cap = alpha.len() as Part;
                let rest = (n - alpha_weight) as Part;
                for beta in distinct_parts(rest, cap) {
                    if k.is_none_or(|k| beta.len() == k) {
                        out.push(PartitionPair::new(
                            Partition::from_sorted_unchecked(alpha.clone()),
                            Partition::from_sorted_unchecked(beta),
                        ));
                    }
                }
            }
        }
        canonical_sort(&mut out);
        Ok(out)
    }

    /// Distinct-part partitions of `n` with `k` x-labels, each on a part at
    /// least 2 above the next one (the last part is compared with 0).
    pub fn a(&self, n: usize, k: Option<usize>) -> Result<Vec<XLabeledPartition>, EnumerateError> {
        self.check(n)?;
        let mut out = Vec::new();
        for shape in distinct_parts(n as Part, n as Part) {
            let eligible: Vec<usize> = (0..shape.len())
                .filter(|&i| shape[i] - shape.get(i + 1).copied().unwrap_or(0) >= 2)
                .collect();
            for mask in 0u64..(1u64 << eligible.len()) {
                if k.is_some_and(|k| mask.count_ones() as usize != k) {
                    continue;
                }
                let mut entries: Vec<LabeledPart> = shape
                    .iter()
                    .map(|&value| LabeledPart {
                        value,
                        labeled: false,
                    })
                    .collect();
                for (bit, &i) in eligible.iter().enumerate() {
                    entries[i].labeled = mask >> bit & 1 == 1;
                }
                out.push(XLabeledPartition::new(entries).expect("distinct parts"));
            }
        }
        canonical_sort(&mut out);
        Ok(out)
    }

    /// Signed partitions of `n` whose positive parts differ by at least 2
    /// with the smallest at least 2, and whose negative parts are distinct
    /// and at most `positive_len`; `k = positive_len - negative_len`.
    ///
    /// With `m` positive parts, `|pos| >= 2 + 4 + ... + 2m = m(m+1)` and
    /// `|neg| <= 1 + ... + m = m(m+1)/2`, so `m(m+1)/2 <= n`. The complement
    /// of the negative parts in `{1..m}` sums to at most `n - m(m+1)/2`.
    pub fn a_signed(
        &self,
        n: usize,
        k: Option<usize>,
    ) -> Result<Vec<SignedPartition>, EnumerateError> {
        self.check(n)?;
        let mut out = Vec::new();
        let mut len = 0usize;
        while len * (len + 1) / 2 <= n {
            let pool: Vec<Part> = (1..=len as Part).collect();
            let slack = (n - len * (len + 1) / 2) as Part;
            for complement in subsets_with_sum_at_most(&pool, slack) {
                let negative = set_difference(&pool, &complement);
                if k.is_some_and(|k| len < k || negative.len() != len - k) {
                    continue;
                }
                let neg_weight: u64 = negative.iter().map(|&p| u64::from(p)).sum();
                let pos_weight = (n as u64 + neg_weight) as Part;
                for positive in strict_parts(pos_weight, len, pos_weight, 2, 2) {
                    out.push(SignedPartition::new(
                        Partition::from_sorted_unchecked(positive),
                        Partition::from_sorted_unchecked(negative.clone()),
                    ));
                }
            }
            len += 1;
        }
        canonical_sort(&mut out);
        Ok(out)
    }

    /// Bicolored partitions of `n` with `k` red parts: blues distinct, reds
    /// distinct, and each red `c` matched to its own blue `c` or `c + 1`.
    pub fn b(&self, n: usize, k: Option<usize>) -> Result<Vec<BicoloredPartition>, EnumerateError> {
        self.check(n)?;
        let mut out = Vec::new();
        for blue_weight in 0..=n {
            let blues = distinct_parts(blue_weight as Part, blue_weight as Part);
            let reds = distinct_parts((n - blue_weight) as Part, (n - blue_weight) as Part);
            for red in &reds {
                if k.is_some_and(|k| red.len() != k) {
                    continue;
                }
                for blue in &blues {
                    let entries = blue
                        .iter()
                        .map(|&v| ColoredPart::blue(v))
                        .chain(red.iter().map(|&v| ColoredPart::red(v)))
                        .collect();
                    let value = BicoloredPartition::from_unsorted(entries).expect("positive parts");
                    if check_b(&value).is_ok() {
                        out.push(value);
                    }
                }
            }
        }
        canonical_sort(&mut out);
        Ok(out)
    }

    /// Pairs of a distinct-part partition and a distinct-even-part partition
    /// with total weight `n` and `k` parts in the second component.
    pub fn c(&self, n: usize, k: Option<usize>) -> Result<Vec<PartitionPair>, EnumerateError> {
        self.check(n)?;
        let mut out = Vec::new();
        for alpha_weight in 0..=n {
            let rest = n - alpha_weight;
            if rest % 2 == 1 {
                continue;
            }
            let alphas = distinct_parts(alpha_weight as Part, alpha_weight as Part);
            for half in distinct_parts((rest / 2) as Part, (rest / 2) as Part) {
                if k.is_some_and(|k| half.len() != k) {
                    continue;
                }
                let beta = Partition::from_sorted_unchecked(half.iter().map(|p| 2 * p).collect());
                for alpha in &alphas {
                    out.push(PartitionPair::new(
                        Partition::from_sorted_unchecked(alpha.clone()),
                        beta.clone(),
                    ));
                }
            }
        }
        canonical_sort(&mut out);
        Ok(out)
    }

    /// Type-erased front end. `m` is honoured only by the three families
    /// refined by length (`ped`, `F`, `F-1`).
    pub fn family(
        &self,
        family: Family,
        n: usize,
        m: Option<usize>,
        k: Option<usize>,
    ) -> Result<Vec<FamilyValue>, EnumerateError> {
        fn wrap<T: Into<FamilyValue>>(v: Vec<T>) -> Vec<FamilyValue> {
            v.into_iter().map(Into::into).collect()
        }
        Ok(match family {
            Family::Ped => wrap(self.ped(n, m, k)?),
            Family::F => wrap(self.f(n, m, k)?),
            Family::FSigned => wrap(self.f_signed(n, m, k)?),
            Family::V => wrap(self.v(n, k)?),
            Family::A => wrap(self.a(n, k)?),
            Family::ASigned => wrap(self.a_signed(n, k)?),
            Family::B => wrap(self.b(n, k)?),
            Family::C => wrap(self.c(n, k)?),
        })
    }
}

fn canonical_sort<T: Ord>(items: &mut [T]) {
    items.sort_unstable_by(|a, b| b.cmp(a));
}

/// All weakly decreasing sequences summing to `total` with parts in
/// `[min, max]` satisfying `admissible`, where a part may repeat only if
/// `repeatable` says so. Lexicographically descending.
fn parts_by_rule(
    total: Part,
    max: Part,
    min: Part,
    admissible: impl Fn(Part) -> bool + Copy,
    repeatable: impl Fn(Part) -> bool + Copy,
) -> Vec<Vec<Part>> {
    fn go(
        remaining: Part,
        max: Part,
        min: Part,
        prefix: &mut Vec<Part>,
        out: &mut Vec<Vec<Part>>,
        admissible: impl Fn(Part) -> bool + Copy,
        repeatable: impl Fn(Part) -> bool + Copy,
    ) {
        if remaining == 0 {
            out.push(prefix.clone());
            return;
        }
        let mut part = max.min(remaining);
        while part >= min && part > 0 {
            if admissible(part) {
                prefix.push(part);
                let next_max = if repeatable(part) { part } else { part - 1 };
                go(
                    remaining - part,
                    next_max,
                    min,
                    prefix,
                    out,
                    admissible,
                    repeatable,
                );
                prefix.pop();
            }
            part -= 1;
        }
    }
    let mut out = Vec::new();
    go(
        total,
        max,
        min,
        &mut Vec::new(),
        &mut out,
        admissible,
        repeatable,
    );
    out
}

fn distinct_parts(total: Part, max: Part) -> Vec<Vec<Part>> {
    parts_by_rule(total, max, 1, |_| true, |_| false)
}

/// Sequences of exactly `len` parts in `[min, max]`, consecutive parts
/// differing by at least `gap`, summing to `total`.
fn strict_parts(total: Part, len: usize, max: Part, min: Part, gap: Part) -> Vec<Vec<Part>> {
    fn go(
        remaining: u64,
        left: usize,
        max: u64,
        min: u64,
        gap: u64,
        prefix: &mut Vec<Part>,
        out: &mut Vec<Vec<Part>>,
    ) {
        if left == 0 {
            if remaining == 0 {
                out.push(prefix.clone());
            }
            return;
        }
        let l = left as u64;
        // Cheapest completion: min, min+gap, ..., min+(left-1)gap.
        let floor = l * min + gap * l * (l - 1) / 2;
        if remaining < floor || max < min + gap * (l - 1) {
            return;
        }
        let top = max.min(remaining - (floor - min - gap * (l - 1)));
        let mut part = top;
        while part >= min + gap * (l - 1) {
            // Largest completion below `part`.
            let below = l - 1;
            let ceiling = part + below * part - gap * below * (below + 1) / 2;
            if ceiling < remaining {
                break;
            }
            prefix.push(part as Part);
            go(
                remaining - part,
                left - 1,
                part.saturating_sub(gap),
                min,
                gap,
                prefix,
                out,
            );
            prefix.pop();
            part -= 1;
        }
    }
    let mut out = Vec::new();
    go(
        u64::from(total),
        len,
        u64::from(max),
        u64::from(min),
        u64::from(gap),
        &mut Vec::new(),
        &mut out,
    );
    out
}

/// Subsets of the ascending `pool` whose sum is at most `bound`, each
/// returned in descending order.
fn subsets_with_sum_at_most(pool: &[Part], bound: Part) -> Vec<Vec<Part>> {
    fn go(
        pool: &[Part],
        start: usize,
        budget: Part,
        chosen: &mut Vec<Part>,
        out: &mut Vec<Vec<Part>>,
    ) {
        let mut subset = chosen.clone();
        subset.reverse();
        out.push(subset);
        for i in start..pool.len() {
            if pool[i] > budget {
                break;
            }
            chosen.push(pool[i]);
            go(pool, i + 1, budget - pool[i], chosen, out);
            chosen.pop();
        }
    }
    let mut out = Vec::new();
    go(pool, 0, bound, &mut Vec::new(), &mut out);
    out
}

/// Elements of ascending `pool` not in `remove` (descending), returned
/// descending.
fn set_difference(pool: &[Part], remove: &[Part]) -> Vec<Part> {
    let mut out: Vec<Part> = pool
        .iter()
        .copied()
        .filter(|p| !remove.contains(p))
        .collect();
    out.reverse();
    out
}

/// Every partition of `n`, lexicographically descending.
pub fn all_partitions(n: usize) -> Vec<Partition> {
    parts_by_rule(n as Part, n as Part, 1, |_| true, |_| true)
        .into_iter()
        .map(Partition::from_sorted_unchecked)
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::membership::validate_membership;
    use alloc::string::{String, ToString};

    fn texts<T: ToString>(v: &[T]) -> Vec<String> {
        v.iter().map(ToString::to_string).collect()
    }

    const PED_PREFIX: [usize; 8] = [1, 1, 2, 3, 4, 6, 9, 12];

    #[test]
    fn ped_small_cases() {
        let e = Enumerator::new();
        assert_eq!(texts(&e.ped(0, None, None).unwrap()), ["0"]);
        assert_eq!(
            texts(&e.ped(4, None, None).unwrap()),
            ["4", "3+1", "2+1+1", "1+1+1+1"]
        );
        for (n, &count) in PED_PREFIX.iter().enumerate() {
            assert_eq!(e.ped(n, None, None).unwrap().len(), count, "n={n}");
        }
    }

    #[test]
    fn f_small_cases() {
        let e = Enumerator::new();
        assert_eq!(texts(&e.f(2, None, None).unwrap()), ["1*+1", "1+1"]);
        assert_eq!(texts(&e.f(1, None, None).unwrap()), ["1"]);
        for (n, &count) in PED_PREFIX.iter().enumerate() {
            assert_eq!(e.f(n, None, None).unwrap().len(), count, "n={n}");
        }
        let f831 = e.f(8, Some(3), Some(1)).unwrap();
        assert!(texts(&f831).contains(&"4+1*+1+1+1".to_string()));
    }

    #[test]
    fn f_signed_small_cases() {
        let e = Enumerator::new();
        assert_eq!(texts(&e.f_signed(0, None, None).unwrap()), ["0 | 0"]);
        assert_eq!(texts(&e.f_signed(1, Some(1), Some(0)).unwrap()), ["2 | 1"]);
        for (n, &count) in PED_PREFIX.iter().enumerate() {
            assert_eq!(e.f_signed(n, None, None).unwrap().len(), count, "n={n}");
        }
    }

    #[test]
    fn lebesgue_side_small_cases() {
        let e = Enumerator::new();
        assert_eq!(texts(&e.v(0, Some(0)).unwrap()), ["(0, 0)"]);
        assert!(texts(&e.v(6, Some(2)).unwrap()).contains(&"(2+1, 2+1)".to_string()));
        for (n, &count) in PED_PREFIX.iter().enumerate() {
            assert_eq!(e.v(n, None).unwrap().len(), count, "n={n}");
        }
        assert!(texts(&e.a(4, Some(1)).unwrap()).contains(&"3x+1".to_string()));
        assert!(e.a(1, Some(1)).unwrap().is_empty());
        assert!(texts(&e.a_signed(4, Some(1)).unwrap()).contains(&"4+2 | 2".to_string()));
        assert_eq!(texts(&e.a_signed(0, Some(0)).unwrap()), ["0 | 0"]);
    }

    #[test]
    fn bicolored_small_cases() {
        let e = Enumerator::new();
        assert_eq!(
            texts(&e.b(4, None).unwrap()),
            ["4", "3+1", "2+2r", "2+1+1r"]
        );
        assert_eq!(texts(&e.b(0, None).unwrap()), ["0"]);
        for (n, &count) in PED_PREFIX.iter().enumerate() {
            assert_eq!(e.b(n, None).unwrap().len(), count, "n={n}");
        }
    }

    #[test]
    fn pairs_with_even_second_component() {
        let e = Enumerator::new();
        assert_eq!(e.c(11, None).unwrap().len(), 38);
        assert_eq!(texts(&e.c(0, Some(0)).unwrap()), ["(0, 0)"]);
        // Splits of 4: alpha in {4, 3+1} with beta empty, alpha = 2 with
        // beta = 2, and alpha empty with beta = 4.
        assert_eq!(
            texts(&e.c(4, None).unwrap()),
            ["(4, 0)", "(3+1, 0)", "(2, 2)", "(0, 4)"]
        );
        assert_eq!(texts(&e.c(4, Some(1)).unwrap()), ["(2, 2)", "(0, 4)"]);
    }

    #[test]
    fn limit_is_enforced() {
        let e = Enumerator::with_limit(5);
        assert_eq!(
            e.ped(6, None, None),
            Err(EnumerateError::LimitExceeded { n: 6, limit: 5 })
        );
        assert!(e.b(5, None).is_ok());
    }

    #[test]
    fn deterministic_and_members() {
        let e = Enumerator::new();
        for family in Family::ALL {
            for n in 0..=9 {
                let first = e.family(family, n, None, None).unwrap();
                assert_eq!(first, e.family(family, n, None, None).unwrap());
                for v in &first {
                    assert_eq!(validate_membership(family, v), Ok(()), "{family} {v:?}");
                    assert_eq!(v.weight(), n as i64);
                }
            }
        }
    }

    #[test]
    fn strict_parts_matches_filter() {
        for total in 0..25u32 {
            for len in 0..6 {
                for gap in 1..3 {
                    let fast = strict_parts(total, len, total, 2, gap);
                    let slow: Vec<Vec<Part>> = parts_by_rule(total, total, 2, |_| true, |_| false)
                        .into_iter()
                        .filter(|p| p.len() == len && p.windows(2).all(|w| w[0] >= w[1] + gap))
                        .collect();
                    assert_eq!(fast, slow, "total={total} len={len} gap={gap}");
                }
            }
        }
    }

    #[test]
    fn signed_searches_match_plain_brute_force() {
        // Oracle: scan all (pos, neg) pairs drawn from the raw part-set
        // constraints up to a crude weight cap, then filter with the
        // membership predicates. No complement-sum argument involved.
        let e = Enumerator::new();
        for n in 0..=8usize {
            let mut f_brute = Vec::new();
            // |pos| <= n + |neg| <= n + n^2 since at most n positive parts.
            for pos_weight in n..=n + n * n {
                let w = pos_weight as Part;
                let neg_w = (pos_weight - n) as Part;
                for pos in parts_by_rule(w, w, 1, |p| p % 2 == 0, |_| false) {
                    for neg in parts_by_rule(neg_w, neg_w, 1, |p| p % 2 == 1, |_| false) {
                        let s = SignedPartition::new(
                            Partition::from_sorted_unchecked(pos.clone()),
                            Partition::from_sorted_unchecked(neg),
                        );
                        if crate::membership::check_f_signed(&s).is_ok() {
                            f_brute.push(s);
                        }
                    }
                }
            }
            let mut a_brute = Vec::new();
            // |neg| <= 1 + ... + m <= n here.
            for pos_weight in n..=2 * n {
                let neg_w = (pos_weight - n) as Part;
                for pos in all_partitions(pos_weight) {
                    for neg in parts_by_rule(neg_w, neg_w, 1, |_| true, |_| false) {
                        let s = SignedPartition::new(
                            pos.clone(),
                            Partition::from_sorted_unchecked(neg),
                        );
                        if crate::membership::check_a_signed(&s).is_ok() {
                            a_brute.push(s);
                        }
                    }
                }
            }
            canonical_sort(&mut f_brute);
            canonical_sort(&mut a_brute);
            assert_eq!(f_brute, e.f_signed(n, None, None).unwrap(), "n={n}");
            assert_eq!(a_brute, e.a_signed(n, None).unwrap(), "n={n}");
        }
    }
}
