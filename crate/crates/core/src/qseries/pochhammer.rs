//! q-Pochhammer symbols with a monomial parameter.

use super::series::{QMonomial, TruncatedSeries};
use super::SeriesError;

/// `(a; q^step)_n = (1 - a)(1 - a q^step)...(1 - a q^{(n-1) step})` mod q^N.
pub fn poch_finite(a: QMonomial, step: u32, n: usize, order: usize) -> TruncatedSeries {
    let mut s = TruncatedSeries::one(order);
    for j in 0..n {
        let factor = a.shift_q(step * j as u32);
        if factor.q as usize >= order {
            break;
        }
        s.mul_binomial(factor);
    }
    s
}

/// `1 / (a; q^step)_n`.
pub fn poch_finite_inv(
    a: QMonomial,
    step: u32,
    n: usize,
    order: usize,
) -> Result<TruncatedSeries, SeriesError> {
    let mut s = TruncatedSeries::one(order);
    divide_finite(&mut s, a, step, n)?;
    Ok(s)
}

/// `(a; q^step)_inf` mod q^N. Factors from the first one with q-degree at
/// least N on are all 1.
pub fn poch_infinite(
    a: QMonomial,
    step: u32,
    order: usize,
) -> Result<TruncatedSeries, SeriesError> {
    Ok(poch_finite(a, step, factors_below(a, step, order)?, order))
}

/// `1 / (a; q^step)_inf`.
pub fn poch_infinite_inv(
    a: QMonomial,
    step: u32,
    order: usize,
) -> Result<TruncatedSeries, SeriesError> {
    poch_finite_inv(a, step, factors_below(a, step, order)?, order)
}

/// `s /= (a; q^step)_n`.
pub fn divide_finite(
    s: &mut TruncatedSeries,
    a: QMonomial,
    step: u32,
    n: usize,
) -> Result<(), SeriesError> {
    if n > 0 && a.q == 0 {
        return Err(SeriesError::NotInvertible);
    }
    for j in 0..n {
        let factor = a.shift_q(step * j as u32);
        if factor.q as usize >= s.order() {
            break;
        }
        s.div_binomial(factor)?;
    }
    Ok(())
}

fn factors_below(a: QMonomial, step: u32, order: usize) -> Result<usize, SeriesError> {
    let offset = a.q as usize;
    if offset >= order {
        return Ok(0);
    }
    if step == 0 {
        return Err(SeriesError::Divergent);
    }
    Ok((order - offset).div_ceil(step as usize))
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::{String, ToString};
    use alloc::vec::Vec;

    fn display(s: &TruncatedSeries) -> Vec<String> {
        s.coefficients().iter().map(ToString::to_string).collect()
    }

    #[test]
    fn empty_product_is_one() {
        let a = QMonomial::q_power(1).with_x(3);
        assert_eq!(poch_finite(a, 1, 0, 5), TruncatedSeries::one(5));
    }

    #[test]
    fn negative_q_two_terms() {
        let s = poch_finite(-QMonomial::q_power(1), 1, 2, 6);
        assert_eq!(display(&s), ["1", "1", "1", "1", "0", "0"]);
    }

    #[test]
    fn pentagonal_prefix() {
        let s = poch_infinite(QMonomial::q_power(1), 1, 6).unwrap();
        assert_eq!(display(&s), ["1", "-1", "-1", "0", "0", "1"]);
    }

    #[test]
    fn odd_part_partitions_of_four() {
        let s = poch_infinite_inv(QMonomial::q_power(1), 2, 5).unwrap();
        assert_eq!(s.coefficient(4).unwrap().to_string(), "2");
    }

    #[test]
    fn order_one_gives_one() {
        for (a, step) in [
            (QMonomial::q_power(1), 1),
            (-QMonomial::q_power(2).with_x(1), 2),
        ] {
            assert_eq!(poch_infinite(a, step, 1).unwrap(), TruncatedSeries::one(1));
            assert_eq!(
                poch_infinite_inv(a, step, 1).unwrap(),
                TruncatedSeries::one(1)
            );
        }
    }

    #[test]
    fn degenerate_parameters() {
        assert_eq!(
            poch_infinite(QMonomial::q_power(1), 0, 4),
            Err(SeriesError::Divergent)
        );
        assert_eq!(
            poch_infinite(QMonomial::q_power(4), 0, 4),
            Ok(TruncatedSeries::one(4))
        );
        assert_eq!(
            poch_finite_inv(QMonomial::ONE.with_x(1), 1, 2, 4),
            Err(SeriesError::NotInvertible)
        );
    }

    #[test]
    fn constant_first_factor() {
        // (x; q)_2 = (1 - x)(1 - xq)
        let s = poch_finite(QMonomial::ONE.with_x(1), 1, 2, 3);
        assert_eq!(display(&s), ["-x+1", "x^2-x", "0"]);
    }
}
