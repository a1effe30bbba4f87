//! Binomial closed forms, the second-order recurrences with Fibonacci
//! forcing, and the Fibonacci convolutions for the perimeter sequences.

use std::fmt;
use std::str::FromStr;

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};

use crate::partitions::fibonacci_table;
use crate::{Error, Result};

/// `C(n, k)` exactly; zero when `k > n`.
pub fn binomial(n: u64, k: u64) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigUint::one();
    for i in 0..k {
        acc *= n - i;
        acc /= i + 1;
    }
    acc
}

macro_rules! named_enum {
    ($(#[$meta:meta])* $name:ident { $($variant:ident => $text:literal),* $(,)? }) => {
        $(#[$meta])*
        #[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
        pub enum $name { $($variant),* }

        impl $name {
            pub const ALL: &'static [$name] = &[$($name::$variant),*];

            pub fn as_str(self) -> &'static str {
                match self { $($name::$variant => $text),* }
            }
        }

        impl fmt::Display for $name {
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                f.write_str(self.as_str())
            }
        }

        impl FromStr for $name {
            type Err = Error;

            fn from_str(s: &str) -> Result<Self> {
                $name::ALL
                    .iter()
                    .copied()
                    .find(|v| v.as_str() == s)
                    .ok_or_else(|| Error::Parameter(format!(
                        "unknown {} {s:?}", stringify!($name)
                    )))
            }
        }
    };
}

named_enum!(
    /// Sequences with a finite binomial-sum formula.
    ClosedFormName { G => "g", H => "h", G1 => "g1", IndexSum => "index_sum" }
);

named_enum!(
    /// Sequences obeying `f(M) = f(M−1) + f(M−2) + F_k`.
    RecurrenceName { G => "g", H => "h", G1 => "g1", H1 => "h1" }
);

named_enum!(
    /// The four Fibonacci-convolution expressions.
    ConvolutionName { Cfib1 => "cfib1", Cfib2 => "cfib2", Cfib3 => "cfib3", Cfib4 => "cfib4" }
);

fn positive_m(m: u64) -> Result<()> {
    if m == 0 {
        return Err(Error::Parameter("perimeter M must be at least 1".into()));
    }
    Ok(())
}

/// Evaluates the binomial sum for `name` at perimeter `m`, over every index
/// where the binomial is non-zero.
pub fn closed_form(name: ClosedFormName, m: u64) -> Result<BigInt> {
    positive_m(m)?;
    let mut acc = BigInt::zero();
    match name {
        ClosedFormName::G => {
            for n in (0..).take_while(|n| 2 * n < m) {
                acc += BigInt::from(m - 2 * n) * BigInt::from(binomial(m - n - 1, n));
            }
        }
        ClosedFormName::H => {
            for j in (0..).take_while(|j| 2 * j < m) {
                acc += BigInt::from(j + 1) * BigInt::from(binomial(m - j - 1, j));
            }
        }
        ClosedFormName::G1 => {
            for k in (0..).take_while(|k| 2 * k + 2 <= m) {
                acc += BigInt::from(k + 1) * BigInt::from(binomial(m - k - 1, k + 1));
            }
        }
        ClosedFormName::IndexSum => {
            for n in (0..).take_while(|n| 2 * n < m) {
                let weight = m as i64 - 3 * n as i64 - 1;
                acc += BigInt::from(weight) * BigInt::from(binomial(m - n - 1, n));
            }
        }
    }
    Ok(acc)
}

/// Index of the Fibonacci forcing term: `F_{M−1}` for g, g1, h1 and `F_{M−2}` for h.
fn forcing_lag(name: RecurrenceName) -> u64 {
    match name {
        RecurrenceName::H => 2,
        _ => 1,
    }
}

/// `f(M)` from `f(M−2)` and `f(M−1)`.
pub fn recurrence_step(
    name: RecurrenceName,
    prev2: &BigInt,
    prev1: &BigInt,
    m: u64,
) -> Result<BigInt> {
    if m < 2 {
        return Err(Error::Parameter(format!(
            "recurrence needs M >= 2, got {m}"
        )));
    }
    let forcing = crate::partitions::fibonacci((m - forcing_lag(name)) as i64)?;
    Ok(prev2 + prev1 + BigInt::from(forcing))
}

/// `f(1..=n)` by iterating the recurrence from `f(0) = 0` and the tabulated `f(1)`.
pub fn recurrence_sequence(name: RecurrenceName, n: usize) -> Vec<BigInt> {
    let fib = fibonacci_table(n + 1);
    let f = |k: u64| BigInt::from(fib[(k + 1) as usize].clone());
    let first = match name {
        RecurrenceName::G | RecurrenceName::H => BigInt::one(),
        RecurrenceName::G1 | RecurrenceName::H1 => BigInt::zero(),
    };
    let mut out = Vec::with_capacity(n);
    let (mut prev2, mut prev1) = (BigInt::zero(), first);
    for m in 1..=n as u64 {
        if m >= 2 {
            let next = &prev2 + &prev1 + f(m - forcing_lag(name));
            prev2 = std::mem::replace(&mut prev1, next);
        }
        out.push(prev1.clone());
    }
    out
}

/// `Σ_{k=1}^{upper} F_k F_{total−k}` using a table indexed from `F₋₁`.
fn convolve(fib: &[BigUint], upper: u64, total: u64) -> BigUint {
    let f = |k: u64| &fib[(k + 1) as usize];
    (1..=upper).map(|k| f(k) * f(total - k)).sum()
}

/// Evaluates a Fibonacci-convolution expression at `m ≥ 2`.
pub fn fib_convolution(name: ConvolutionName, m: u64) -> Result<BigInt> {
    if m < 2 {
        return Err(Error::Parameter(format!(
            "convolution needs M >= 2, got {m}"
        )));
    }
    let fib = fibonacci_table(m as usize);
    let f = |k: u64| fib[(k + 1) as usize].clone();
    let value = match name {
        ConvolutionName::Cfib1 => f(m) + convolve(&fib, m - 1, m),
        ConvolutionName::Cfib2 => f(m) + convolve(&fib, m.saturating_sub(2), m - 1),
        ConvolutionName::Cfib3 => convolve(&fib, m - 1, m),
        ConvolutionName::Cfib4 => f(m - 1) + convolve(&fib, m.saturating_sub(3), m - 2),
    };
    Ok(BigInt::from(value))
}
