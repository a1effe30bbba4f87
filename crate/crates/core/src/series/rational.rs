use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::IntPoly;
use crate::{Error, Result};

/// A formal power series `numerator / denominator` whose denominator has
/// constant term 1, so every coefficient is an exact integer.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RationalSeries {
    numerator: IntPoly,
    denominator: IntPoly,
}

impl RationalSeries {
    pub fn new(numerator: IntPoly, denominator: IntPoly) -> Result<Self> {
        let c0 = denominator.constant_term();
        if !c0.is_one() {
            return Err(Error::Normalization(format!(
                "denominator {denominator} has constant term {c0}, expected 1"
            )));
        }
        Ok(RationalSeries {
            numerator,
            denominator,
        })
    }

    pub fn numerator(&self) -> &IntPoly {
        &self.numerator
    }

    pub fn denominator(&self) -> &IntPoly {
        &self.denominator
    }

    /// `c_0..=c_n` from `c_k = a_k − Σ_{i≥1} b_i c_{k−i}`.
    pub fn coefficients_from_zero(&self, n: usize) -> Vec<BigInt> {
        let den = self.denominator.coeffs();
        let mut c: Vec<BigInt> = Vec::with_capacity(n + 1);
        for k in 0..=n {
            let mut acc = self.numerator.coeff(k);
            for (i, b) in den.iter().enumerate().skip(1).take(k) {
                if !b.is_zero() {
                    acc -= b * &c[k - i];
                }
            }
            c.push(acc);
        }
        c
    }

    /// Coefficient of `x^k`.
    pub fn coeff(&self, k: usize) -> BigInt {
        self.coefficients_from_zero(k)
            .pop()
            .expect("at least one coefficient")
    }
}

/// `c_1..=c_n` of the expansion of `s`.
pub fn series_coeffs(s: &RationalSeries, n: usize) -> Vec<BigInt> {
    let mut c = s.coefficients_from_zero(n);
    c.remove(0);
    c
}
