use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::One;

use super::{IntPoly, RationalSeries};
use crate::{Error, Result};

/// Generating functions indexed by perimeter.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum GfName {
    /// Total parts over odd-part partitions.
    G,
    /// Total parts over distinct-part partitions.
    H,
    /// Odd parts except one even part value.
    G1,
    /// Distinct parts except one repeated value.
    H1,
    GMinusH,
    /// Every multiplicity below `r`.
    HR,
    /// No part divisible by `r`.
    GR,
    /// Every part congruent to `d` mod `r`.
    GRD,
}

impl GfName {
    pub const ALL: [GfName; 8] = [
        GfName::G,
        GfName::H,
        GfName::G1,
        GfName::H1,
        GfName::GMinusH,
        GfName::HR,
        GfName::GR,
        GfName::GRD,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            GfName::G => "g",
            GfName::H => "h",
            GfName::G1 => "g1",
            GfName::H1 => "h1",
            GfName::GMinusH => "g_minus_h",
            GfName::HR => "h_r",
            GfName::GR => "g_r",
            GfName::GRD => "g_r_d",
        }
    }

    pub fn needs_r(self) -> bool {
        matches!(self, GfName::HR | GfName::GR | GfName::GRD)
    }
}

impl fmt::Display for GfName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for GfName {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        GfName::ALL
            .into_iter()
            .find(|n| n.as_str() == s)
            .ok_or_else(|| Error::Parameter(format!("unknown generating function {s:?}")))
    }
}

fn one_minus_x() -> IntPoly {
    IntPoly::from_i64s(&[1, -1])
}

fn fib_den_squared() -> IntPoly {
    IntPoly::from_i64s(&[1, -1, -1]).pow(2)
}

/// `x^lo + … + x^hi`
fn geometric(lo: usize, hi: usize) -> IntPoly {
    let mut c = vec![BigInt::default(); hi + 1];
    for slot in &mut c[lo..=hi] {
        *slot = BigInt::one();
    }
    IntPoly::new(c)
}

/// Numerator and denominator of the named generating function.
pub fn gf_catalog(name: GfName, r: Option<u64>, d: Option<u64>) -> Result<RationalSeries> {
    let r = if name.needs_r() {
        let r = r.ok_or_else(|| Error::Parameter(format!("{name} needs r")))?;
        if r < 2 {
            return Err(Error::Parameter(format!("r = {r} must be at least 2")));
        }
        r as usize
    } else {
        0
    };
    let p = IntPoly::from_i64s;
    match name {
        GfName::G => RationalSeries::new(p(&[0, 1, 0, -1]), fib_den_squared()),
        GfName::H => RationalSeries::new(p(&[0, 1, -1]), fib_den_squared()),
        GfName::G1 | GfName::H1 => RationalSeries::new(p(&[0, 0, 1]), fib_den_squared()),
        GfName::GMinusH => RationalSeries::new(p(&[0, 0, 1, -1]), fib_den_squared()),
        GfName::HR => RationalSeries::new(geometric(1, r - 1), &IntPoly::one() - &geometric(1, r)),
        GfName::GR => {
            // z/(1-2z) · ((1-z)^{r-1} - z^{r-1}) / ((1-z)^{r-1} - z^r); the
            // factor 1-2z divides the middle numerator since both terms agree at z = 1/2.
            let base = one_minus_x().pow(r as u32 - 1);
            let top = &base - &IntPoly::x_pow(r - 1);
            let reduced = top.div_exact(&p(&[1, -2]))?;
            RationalSeries::new(reduced.shift(1), &base - &IntPoly::x_pow(r))
        }
        GfName::GRD => {
            let d = d.ok_or_else(|| Error::Parameter("g_r_d needs d".into()))? as usize;
            if d == 0 || d >= r {
                return Err(Error::Parameter(format!(
                    "residue d = {d} must satisfy 1 <= d < r = {r}"
                )));
            }
            let mut den = &IntPoly::one() - &IntPoly::x_pow(1);
            den = &den - &IntPoly::x_pow(r);
            RationalSeries::new(IntPoly::x_pow(d), den)
        }
    }
}
