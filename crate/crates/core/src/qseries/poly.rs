//! Sparse integer polynomials in the tracking variables `x` and `y`.

use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

/// Exponent pair `(x degree, y degree)`.
pub type Exponents = (u32, u32);

/// A polynomial in `x` and `y` with arbitrary-precision integer
/// coefficients. Terms are kept sorted by exponents, zeros are never stored.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct CoeffPoly {
    terms: Vec<(Exponents, BigInt)>,
}

impl CoeffPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(1)
    }

    pub fn constant(c: i64) -> Self {
        Self::monomial(BigInt::from(c), 0, 0)
    }

    pub fn monomial(coeff: BigInt, x: u32, y: u32) -> Self {
        if coeff.is_zero() {
            Self::zero()
        } else {
            Self {
                terms: alloc::vec![((x, y), coeff)],
            }
        }
    }

    /// Builds a polynomial from terms in any order, summing repeats.
    pub fn from_terms(terms: impl IntoIterator<Item = (Exponents, BigInt)>) -> Self {
        let mut terms: Vec<_> = terms.into_iter().collect();
        terms.sort_by_key(|a| a.0);
        let mut out: Vec<(Exponents, BigInt)> = Vec::with_capacity(terms.len());
        for (e, c) in terms {
            match out.last_mut() {
                Some((last, acc)) if *last == e => *acc += c,
                _ => out.push((e, c)),
            }
        }
        out.retain(|(_, c)| !c.is_zero());
        Self { terms: out }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> &[(Exponents, BigInt)] {
        &self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, x: u32, y: u32) -> BigInt {
        self.terms
            .binary_search_by(|(e, _)| e.cmp(&(x, y)))
            .map(|i| self.terms[i].1.clone())
            .unwrap_or_default()
    }

    /// Sum of all coefficients, i.e. the value at `x = y = 1`.
    pub fn total(&self) -> BigInt {
        self.terms.iter().map(|(_, c)| c).sum()
    }

    /// `self += sign * x^dx * y^dy * other`.
    pub fn add_shifted(&mut self, other: &CoeffPoly, negate: bool, dx: u32, dy: u32) {
        if other.is_zero() {
            return;
        }
        let mut merged = Vec::with_capacity(self.terms.len() + other.terms.len());
        let mut left = core::mem::take(&mut self.terms).into_iter().peekable();
        let mut right = other.terms.iter().peekable();
        loop {
            let order = match (left.peek(), right.peek()) {
                (None, None) => break,
                (Some(_), None) => Ordering::Less,
                (None, Some(_)) => Ordering::Greater,
                (Some((le, _)), Some(((rx, ry), _))) => le.cmp(&(rx + dx, ry + dy)),
            };
            match order {
                Ordering::Less => merged.push(left.next().expect("peeked")),
                Ordering::Greater => {
                    let ((rx, ry), c) = right.next().expect("peeked");
                    let c = if negate { -c.clone() } else { c.clone() };
                    merged.push(((rx + dx, ry + dy), c));
                }
                Ordering::Equal => {
                    let (e, mut acc) = left.next().expect("peeked");
                    let (_, c) = right.next().expect("peeked");
                    if negate {
                        acc -= c;
                    } else {
                        acc += c;
                    }
                    if !acc.is_zero() {
                        merged.push((e, acc));
                    }
                }
            }
        }
        self.terms = merged;
    }

    pub fn add_assign(&mut self, other: &CoeffPoly) {
        self.add_shifted(other, false, 0, 0);
    }

    pub fn sub_assign(&mut self, other: &CoeffPoly) {
        self.add_shifted(other, true, 0, 0);
    }

    pub fn neg(&self) -> CoeffPoly {
        CoeffPoly {
            terms: self.terms.iter().map(|(e, c)| (*e, -c)).collect(),
        }
    }

    pub fn mul(&self, other: &CoeffPoly) -> CoeffPoly {
        CoeffPoly::from_terms(self.terms.iter().flat_map(|((ax, ay), ac)| {
            other
                .terms
                .iter()
                .map(move |((bx, by), bc)| ((ax + bx, ay + by), ac * bc))
        }))
    }
}

impl fmt::Display for CoeffPoly {
    /// Monomials by descending `(x, y)` degree, e.g. `x^2+xy`, `12`, `3y-1`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (i, ((x, y), c)) in self.terms.iter().rev().enumerate() {
            if c.is_negative() {
                f.write_str("-")?;
            } else if i > 0 {
                f.write_str("+")?;
            }
            let abs = c.abs();
            let bare = *x == 0 && *y == 0;
            if !abs.is_one() || bare {
                write!(f, "{abs}")?;
            }
            for (name, power) in [("x", *x), ("y", *y)] {
                match power {
                    0 => {}
                    1 => f.write_str(name)?,
                    p => write!(f, "{name}^{p}")?,
                }
            }
        }
        Ok(())
    }
}
