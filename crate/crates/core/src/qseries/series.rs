//! Power series in `q`, truncated at a fixed order, over [`CoeffPoly`].

use alloc::vec;
use alloc::vec::Vec;
use core::ops::Neg;

use num_bigint::BigInt;

use super::poly::CoeffPoly;
use super::SeriesError;

/// A signed monomial `±x^x y^y q^q`, the parameter `a` of a binomial
/// factor `1 - a`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct QMonomial {
    pub negative: bool,
    pub x: u32,
    pub y: u32,
    pub q: u32,
}

impl QMonomial {
    pub const ONE: QMonomial = QMonomial {
        negative: false,
        x: 0,
        y: 0,
        q: 0,
    };

    pub fn q_power(q: u32) -> Self {
        Self { q, ..Self::ONE }
    }

    pub fn with_x(self, x: u32) -> Self {
        Self { x, ..self }
    }

    pub fn with_y(self, y: u32) -> Self {
        Self { y, ..self }
    }

    /// `self * q^step`.
    pub fn shift_q(self, step: u32) -> Self {
        Self {
            q: self.q + step,
            ..self
        }
    }
}

impl Neg for QMonomial {
    type Output = Self;

    fn neg(self) -> Self {
        Self {
            negative: !self.negative,
            ..self
        }
    }
}

/// A series `sum c_n q^n` with `c_n` known exactly for `n < order`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct TruncatedSeries {
    coeffs: Vec<CoeffPoly>,
}

impl TruncatedSeries {
    pub fn zero(order: usize) -> Self {
        Self {
            coeffs: vec![CoeffPoly::zero(); order],
        }
    }

    pub fn one(order: usize) -> Self {
        Self::monomial(order, QMonomial::ONE)
    }

    pub fn monomial(order: usize, m: QMonomial) -> Self {
        let mut s = Self::zero(order);
        if (m.q as usize) < order {
            let c = if m.negative { -1 } else { 1 };
            s.coeffs[m.q as usize] = CoeffPoly::monomial(BigInt::from(c), m.x, m.y);
        }
        s
    }

    /// Series with the given coefficients; anything past `order` is dropped.
    pub fn from_coefficients(order: usize, coeffs: impl IntoIterator<Item = CoeffPoly>) -> Self {
        let mut coeffs: Vec<CoeffPoly> = coeffs.into_iter().take(order).collect();
        coeffs.resize(order, CoeffPoly::zero());
        Self { coeffs }
    }

    /// Truncation bound `N`: the series is exact modulo `q^N`.
    pub fn order(&self) -> usize {
        self.coeffs.len()
    }

    pub fn coefficients(&self) -> &[CoeffPoly] {
        &self.coeffs
    }

    pub fn coefficient(&self, n: usize) -> Result<&CoeffPoly, SeriesError> {
        self.coeffs.get(n).ok_or(SeriesError::OutOfRange {
            degree: n,
            order: self.order(),
        })
    }

    fn same_order(&self, other: &Self) -> Result<(), SeriesError> {
        if self.order() == other.order() {
            Ok(())
        } else {
            Err(SeriesError::OrderMismatch {
                left: self.order(),
                right: other.order(),
            })
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self, SeriesError> {
        self.same_order(other)?;
        let mut out = self.clone();
        out.add_assign(other)?;
        Ok(out)
    }

    pub fn add_assign(&mut self, other: &Self) -> Result<(), SeriesError> {
        self.same_order(other)?;
        for (a, b) in self.coeffs.iter_mut().zip(&other.coeffs) {
            a.add_assign(b);
        }
        Ok(())
    }

    pub fn sub(&self, other: &Self) -> Result<Self, SeriesError> {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        Self {
            coeffs: self.coeffs.iter().map(CoeffPoly::neg).collect(),
        }
    }

    /// Cauchy product modulo `q^N`.
    pub fn mul(&self, other: &Self) -> Result<Self, SeriesError> {
        self.same_order(other)?;
        let n = self.order();
        let mut out = Self::zero(n);
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs[..n - i].iter().enumerate() {
                if !b.is_zero() {
                    out.coeffs[i + j].add_assign(&a.mul(b));
                }
            }
        }
        Ok(out)
    }

    /// Multiplies by a monomial (sign included).
    pub fn shift(&self, m: QMonomial) -> Self {
        let mut out = Self::zero(self.order());
        let d = m.q as usize;
        for i in d..self.order() {
            out.coeffs[i].add_shifted(&self.coeffs[i - d], m.negative, m.x, m.y);
        }
        out
    }

    /// `self *= (1 - a)`.
    pub fn mul_binomial(&mut self, a: QMonomial) {
        let d = a.q as usize;
        // 1 - a has coefficient -a; subtracting means the opposite sign.
        let negate = !a.negative;
        if d == 0 {
            for c in &mut self.coeffs {
                let scaled = {
                    let mut t = CoeffPoly::zero();
                    t.add_shifted(c, negate, a.x, a.y);
                    t
                };
                c.add_assign(&scaled);
            }
            return;
        }
        for i in (d..self.order()).rev() {
            let (low, high) = self.coeffs.split_at_mut(i);
            high[0].add_shifted(&low[i - d], negate, a.x, a.y);
        }
    }

    /// `self /= (1 - a)`, expanding `1/(1 - a) = 1 + a + a^2 + ...`. Needs a
    /// positive power of `q` in `a` for the expansion to terminate mod q^N.
    pub fn div_binomial(&mut self, a: QMonomial) -> Result<(), SeriesError> {
        let d = a.q as usize;
        if d == 0 {
            return Err(SeriesError::NotInvertible);
        }
        for i in d..self.order() {
            let (low, high) = self.coeffs.split_at_mut(i);
            high[0].add_shifted(&low[i - d], a.negative, a.x, a.y);
        }
        Ok(())
    }
}
