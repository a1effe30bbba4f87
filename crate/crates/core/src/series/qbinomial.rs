use super::IntPoly;
use crate::{Error, Result};

/// Row `m` of the Gaussian triangle, `[m over j]_q` for `j = 0..=m`, by
/// `[m, j] = [m−1, j−1] + q^j [m−1, j]`.
fn gaussian_row(m: u64) -> Vec<IntPoly> {
    let mut row = vec![IntPoly::one()];
    for top in 1..=m as usize {
        let mut next = Vec::with_capacity(top + 1);
        next.push(IntPoly::one());
        for j in 1..top {
            next.push(&row[j - 1] + &row[j].shift(j));
        }
        next.push(IntPoly::one());
        row = next;
    }
    row
}

/// `[m over j]` in the variable `q^base_exponent`, as a polynomial in `q`.
/// Zero when `j < 0` or `j > m`.
pub fn q_binomial(m: u64, j: i64, base_exponent: usize) -> Result<IntPoly> {
    if base_exponent == 0 {
        return Err(Error::Parameter("base exponent must be positive".into()));
    }
    if j < 0 || j as u64 > m {
        return Ok(IntPoly::zero());
    }
    let j = j as u64;
    // Only the first min(j, m−j) columns matter; walk the short side.
    let k = j.min(m - j) as usize;
    let mut col = vec![IntPoly::one(); k + 1];
    // col[i] holds [t over i] for the current top t, starting at t = 0 where only i = 0 is valid.
    for t in 1..=m as usize {
        for i in (1..=k.min(t)).rev() {
            col[i] = if i == t {
                IntPoly::one()
            } else {
                &col[i - 1] + &col[i].shift(i)
            };
        }
    }
    Ok(col[k].substitute_power(base_exponent))
}

/// `q^M Σ_j [M−1 over j]_q`; the coefficient of `q^n` is the number of
/// partitions of `n` with perimeter `M`.
pub fn perimeter_q_row(m: u64) -> Result<IntPoly> {
    if m == 0 {
        return Err(Error::Parameter("perimeter M must be at least 1".into()));
    }
    let sum = gaussian_row(m - 1)
        .iter()
        .fold(IntPoly::zero(), |acc, p| &acc + p);
    Ok(sum.shift(m as usize))
}
