//! The generating-function identities behind the counting results, each
//! with two independently computed sides and, where the series counts one
//! of the families, an enumeration cross-check at low degree.

use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use num_bigint::BigInt;
use num_traits::Zero;

use super::pochhammer::{divide_finite, poch_infinite, poch_infinite_inv};
use super::poly::CoeffPoly;
use super::series::{QMonomial, TruncatedSeries};
use crate::counts::{cell_counts, Cell};
use crate::enumerate::Enumerator;
use crate::error::UnknownTag;
use crate::membership::Family;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Identity {
    /// `sum ped(n) q^n = (-q^2; q^2)_inf / (q; q^2)_inf`.
    PedGf,
    /// `sum (-yq; q^2)_n x^n q^n / (q^2; q^2)_n = (-xyq^2; q^2)_inf / (xq; q^2)_inf`.
    QbinomialPed,
    /// The overlined-one series against the signed form, graded by `x^m y^k`.
    Thm12Gf,
    /// `sum (-xq; q)_n q^(n(n+1)/2) / (q; q)_n = (-xq^2; q^2)_inf (-q; q)_inf`.
    Lebesgue,
    /// The x-labeled series against the signed form, graded by `x^k`.
    AGf,
    /// `1 / (q; q^2)_inf = (-q; q)_inf`.
    Euler,
    /// `(-xq^2; q^2)_inf / (q; q^2)_inf = (-q; q)_inf (-xq^2; q^2)_inf`.
    Thm4Gf,
}

impl Identity {
    pub const ALL: [Identity; 7] = [
        Identity::PedGf,
        Identity::QbinomialPed,
        Identity::Thm12Gf,
        Identity::Lebesgue,
        Identity::AGf,
        Identity::Euler,
        Identity::Thm4Gf,
    ];

    pub fn tag(self) -> &'static str {
        match self {
            Identity::PedGf => "ped_gf",
            Identity::QbinomialPed => "qbinomial_ped",
            Identity::Thm12Gf => "thm12_gf",
            Identity::Lebesgue => "lebesgue",
            Identity::AGf => "a_gf",
            Identity::Euler => "euler",
            Identity::Thm4Gf => "thm4_gf",
        }
    }

    /// Families whose refined counts must equal the series coefficients.
    pub fn enumerated_families(self) -> &'static [Family] {
        match self {
            Identity::PedGf => &[Family::Ped],
            Identity::Thm12Gf => &[Family::Ped, Family::F, Family::FSigned],
            Identity::AGf => &[Family::A, Family::V, Family::ASigned],
            Identity::Thm4Gf => &[Family::Ped, Family::B, Family::C],
            _ => &[],
        }
    }

    /// Highest weight enumerated by default.
    pub fn default_enumeration_bound(self) -> Option<usize> {
        match self {
            Identity::PedGf | Identity::Thm12Gf | Identity::AGf => Some(30),
            Identity::Thm4Gf => Some(22),
            _ => None,
        }
    }

    /// Both sides modulo `q^order`.
    pub fn sides(self, order: usize) -> (TruncatedSeries, TruncatedSeries) {
        let q = QMonomial::q_power;
        let inf = |a, step| poch_infinite(a, step, order).expect("positive step");
        let inf_inv = |a, step| poch_infinite_inv(a, step, order).expect("positive degree");
        let prod = |a: TruncatedSeries, b: TruncatedSeries| a.mul(&b).expect("same order");
        match self {
            Identity::PedGf => (ped_counts(order), prod(inf(-q(2), 2), inf_inv(q(1), 2))),
            Identity::QbinomialPed => (
                overlined_one_sum(order),
                prod(
                    inf(-q(2).with_x(1).with_y(1), 2),
                    inf_inv(q(1).with_x(1), 2),
                ),
            ),
            Identity::Thm12Gf => (overlined_one_sum(order), signed_form(order, &DISTINCT_EVEN)),
            Identity::Lebesgue => (
                lebesgue_sum(order),
                prod(inf(-q(2).with_x(1), 2), inf(-q(1), 1)),
            ),
            Identity::AGf => (lebesgue_sum(order), signed_form(order, &GAPPED)),
            Identity::Euler => (inf_inv(q(1), 2), inf(-q(1), 1)),
            Identity::Thm4Gf => {
                let mut lhs = inf(-q(2).with_x(1), 2);
                divide_finite(&mut lhs, q(1), 2, order).expect("positive degree");
                // Multiply factor by factor rather than through a full product.
                let mut rhs = inf(-q(1), 1);
                for j in (2..order as u32).step_by(2) {
                    rhs.mul_binomial(-q(j).with_x(1));
                }
                (lhs, rhs)
            }
        }
    }

    /// The enumerated counts of `family` at weight `n`, as the polynomial
    /// this identity's series carries at `q^n`.
    fn enumerated(self, enumerator: &Enumerator, family: Family, n: usize) -> CoeffPoly {
        let counts = cell_counts(enumerator, family, n).expect("weight within limit");
        let exponent = |e: i64| u32::try_from(e).unwrap_or(u32::MAX);
        CoeffPoly::from_terms(counts.into_iter().map(|((m, k), c): (Cell, u64)| {
            let exps = match self {
                Identity::PedGf => (0, 0),
                Identity::Thm12Gf => (exponent(m), exponent(k)),
                _ => (exponent(k), 0),
            };
            (exps, BigInt::from(c))
        }))
    }
}

impl fmt::Display for Identity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

impl FromStr for Identity {
    type Err = UnknownTag;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Identity::ALL
            .into_iter()
            .find(|i| i.tag().eq_ignore_ascii_case(s.trim()))
            .ok_or_else(|| UnknownTag {
                kind: "identity",
                tag: String::from(s),
            })
    }
}

/// First degree where two coefficient polynomials differ.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Mismatch {
    pub degree: usize,
    pub lhs: CoeffPoly,
    pub rhs: CoeffPoly,
    /// `"rhs"`, or the tag of the enumerated family compared with the LHS.
    pub against: &'static str,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdentityReport {
    pub identity: Identity,
    pub order: usize,
    pub equal: bool,
    /// Highest weight compared against enumeration, if any.
    pub enumerated_through: Option<usize>,
    pub first_mismatch: Option<Mismatch>,
}

/// Checks `identity` modulo `q^order`, enumerating up to the identity's
/// default bound.
pub fn verify_identity(identity: Identity, order: usize) -> IdentityReport {
    verify_identity_with(identity, order, identity.default_enumeration_bound())
}

/// As [`verify_identity`], with the enumeration bound given explicitly. It
/// is capped at `order - 1`; `None` skips enumeration.
pub fn verify_identity_with(
    identity: Identity,
    order: usize,
    enumeration_bound: Option<usize>,
) -> IdentityReport {
    let (lhs, rhs) = identity.sides(order);
    let mut mismatch = lhs
        .coefficients()
        .iter()
        .zip(rhs.coefficients())
        .position(|(a, b)| a != b)
        .map(|degree| Mismatch {
            degree,
            lhs: lhs.coefficients()[degree].clone(),
            rhs: rhs.coefficients()[degree].clone(),
            against: "rhs",
        });

    let bound = enumeration_bound
        .filter(|_| !identity.enumerated_families().is_empty() && order > 0)
        .map(|b| b.min(order - 1));
    if let Some(bound) = bound {
        let enumerator = Enumerator::with_limit(bound);
        'degrees: for n in 0..=bound {
            if mismatch.as_ref().is_some_and(|m| m.degree <= n) {
                break;
            }
            for &family in identity.enumerated_families() {
                let counted = identity.enumerated(&enumerator, family, n);
                if counted != lhs.coefficients()[n] {
                    mismatch = Some(Mismatch {
                        degree: n,
                        lhs: lhs.coefficients()[n].clone(),
                        rhs: counted,
                        against: family.tag(),
                    });
                    break 'degrees;
                }
            }
        }
    }

    IdentityReport {
        identity,
        order,
        equal: mismatch.is_none(),
        enumerated_through: bound,
        first_mismatch: mismatch,
    }
}

/// Partitions with distinct even parts counted by a direct recursion over
/// part sizes: each odd size any number of times, each even size at most
/// once.
fn ped_counts(order: usize) -> TruncatedSeries {
    let mut counts = vec![BigInt::zero(); order];
    if let Some(c) = counts.first_mut() {
        *c = BigInt::from(1);
    }
    for part in 1..order {
        if part % 2 == 1 {
            for w in part..order {
                let prev = counts[w - part].clone();
                counts[w] += prev;
            }
        } else {
            for w in (part..order).rev() {
                let prev = counts[w - part].clone();
                counts[w] += prev;
            }
        }
    }
    TruncatedSeries::from_coefficients(
        order,
        counts.into_iter().map(|c| CoeffPoly::monomial(c, 0, 0)),
    )
}

/// `sum_n (-yq; q^2)_n (xq)^n / (q^2; q^2)_n`. The n-th summand starts at
/// `q^n`.
fn overlined_one_sum(order: usize) -> TruncatedSeries {
    let mut total = TruncatedSeries::one(order);
    let mut term = TruncatedSeries::one(order);
    for n in 1..order as u32 {
        term.mul_binomial(-QMonomial::q_power(2 * n - 1).with_y(1));
        term = term.shift(QMonomial::q_power(1).with_x(1));
        term.div_binomial(QMonomial::q_power(2 * n))
            .expect("positive degree");
        total.add_assign(&term).expect("same order");
    }
    total
}

/// `sum_n (-xq; q)_n q^(n(n+1)/2) / (q; q)_n`. The n-th summand starts at
/// `q^(n(n+1)/2)`.
fn lebesgue_sum(order: usize) -> TruncatedSeries {
    let mut total = TruncatedSeries::one(order);
    let mut term = TruncatedSeries::one(order);
    let mut n = 1u32;
    while ((n * (n + 1) / 2) as usize) < order {
        term.mul_binomial(-QMonomial::q_power(n).with_x(1));
        term = term.shift(QMonomial::q_power(n));
        term.div_binomial(QMonomial::q_power(n))
            .expect("positive degree");
        total.add_assign(&term).expect("same order");
        n += 1;
    }
    total
}

/// Generating function of a signed family `(pi, nu)` with `m` positive
/// parts. Positive parts contribute `q^base(m) / (q^s; q^s)_m`; the negative
/// parts are drawn from `values(1..=m)` and are counted through their
/// complement `R` in that set, which contributes `x^a y^b q^(sum R)`.
struct SignedForm {
    value: fn(u32) -> u32,
    base: fn(u32) -> usize,
    step: u32,
    monomial: fn(u32, u32) -> (u32, u32),
}

/// Signed partitions with even distinct positive parts and odd distinct
/// negative parts below `2 l+`, by `x^(l+) y^(l+ - l-)`. Since the
/// complement of `nu` among `1, 3, .., 2m-1` sums to `m^2 - |nu|`, the
/// weight is `m + sum R` above `m(m+1)` minus `m^2`.
const DISTINCT_EVEN: SignedForm = SignedForm {
    value: |j| 2 * j - 1,
    base: |m| m as usize,
    step: 2,
    monomial: |m, r| (m, r),
};

/// Signed partitions with gap-2 positive parts (all at least 2) and
/// distinct negative parts at most `l+`, by `x^(l+ - l-)`.
const GAPPED: SignedForm = SignedForm {
    value: |j| j,
    base: |m| (m * (m + 1) / 2) as usize,
    step: 1,
    monomial: |_, r| (r, 0),
};

fn signed_form(order: usize, form: &SignedForm) -> TruncatedSeries {
    // subsets[r][c]: subsets of the first m values with r elements summing
    // to c < order.
    let mut subsets: Vec<Vec<BigInt>> = vec![vec![BigInt::zero(); order]];
    if order > 0 {
        subsets[0][0] = BigInt::from(1);
    }
    let mut numerators = Vec::new();
    let mut m = 0u32;
    while (form.base)(m) < order {
        if m > 0 {
            let v = (form.value)(m) as usize;
            subsets.push(vec![BigInt::zero(); order]);
            for r in (0..subsets.len() - 1).rev() {
                for c in (0..order.saturating_sub(v)).rev() {
                    if !subsets[r][c].is_zero() {
                        let add = subsets[r][c].clone();
                        subsets[r + 1][c + v] += add;
                    }
                }
            }
        }
        let base = (form.base)(m);
        let mut coeffs: Vec<Vec<((u32, u32), BigInt)>> = vec![Vec::new(); order];
        for (r, row) in subsets.iter().enumerate() {
            for (c, count) in row.iter().enumerate().take(order - base) {
                if !count.is_zero() {
                    coeffs[base + c].push(((form.monomial)(m, r as u32), count.clone()));
                }
            }
        }
        numerators.push(TruncatedSeries::from_coefficients(
            order,
            coeffs.into_iter().map(CoeffPoly::from_terms),
        ));
        m += 1;
    }

    // sum_m N_m / (q^s; q^s)_m evaluated from the innermost term outwards.
    let mut acc = TruncatedSeries::zero(order);
    for (m, numerator) in numerators.iter().enumerate().rev() {
        acc.div_binomial(QMonomial::q_power(form.step * (m as u32 + 1)))
            .expect("positive degree");
        acc.add_assign(numerator).expect("same order");
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;

    #[test]
    fn ped_prefix() {
        let report = verify_identity(Identity::PedGf, 8);
        assert!(report.equal, "{report:?}");
        let (lhs, rhs) = Identity::PedGf.sides(8);
        let coeffs: Vec<String> = rhs.coefficients().iter().map(ToString::to_string).collect();
        assert_eq!(coeffs, ["1", "1", "2", "3", "4", "6", "9", "12"]);
        assert_eq!(lhs, rhs);
        assert_eq!(rhs.coefficient(7).unwrap().to_string(), "12");
    }

    #[test]
    fn overlined_one_series_at_two() {
        let (lhs, _) = Identity::Thm12Gf.sides(3);
        assert_eq!(lhs.coefficient(2).unwrap().to_string(), "x^2+xy");
    }

    #[test]
    fn order_one_is_trivial() {
        for identity in Identity::ALL {
            let report = verify_identity(identity, 1);
            assert!(report.equal);
            let (lhs, rhs) = identity.sides(1);
            assert_eq!(lhs, TruncatedSeries::one(1));
            assert_eq!(rhs, TruncatedSeries::one(1));
        }
    }

    #[test]
    fn constant_terms_are_one() {
        for identity in Identity::ALL {
            let (lhs, rhs) = identity.sides(5);
            assert_eq!(lhs.coefficient(0).unwrap(), &CoeffPoly::one());
            assert_eq!(rhs.coefficient(0).unwrap(), &CoeffPoly::one());
        }
    }

    #[test]
    fn catalog_at_moderate_order() {
        for identity in Identity::ALL {
            let report = verify_identity_with(identity, 40, Some(12));
            assert!(report.equal, "{identity}: {:?}", report.first_mismatch);
        }
    }

    #[test]
    fn tags_parse() {
        for identity in Identity::ALL {
            assert_eq!(identity.tag().parse::<Identity>(), Ok(identity));
        }
        assert!("thm9".parse::<Identity>().is_err());
    }

    #[test]
    fn a_broken_side_is_caught() {
        let (lhs, mut rhs) = Identity::Euler.sides(10);
        rhs.mul_binomial(QMonomial::q_power(7));
        let first = lhs
            .coefficients()
            .iter()
            .zip(rhs.coefficients())
            .position(|(a, b)| a != b);
        assert_eq!(first, Some(7));
    }
}
