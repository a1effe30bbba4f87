//! Partitions, their boundary-profile encoding, constraint classes and
//! exhaustive enumeration.

mod constraint;
mod enumerate;
mod profile;

use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::{Error, Result};

pub use constraint::{Constraint, ConstraintSpec};
pub use enumerate::{
    enumerate_by_perimeter, enumerate_by_size, perimeter_word_parts, PartitionsOfSize,
    MAX_ENUM_PERIMETER,
};
pub use profile::{from_profile, to_profile, ProfileWord};

/// Exact non-negative integer used for every count.
pub type BigCount = BigUint;

/// A finite non-increasing sequence of positive integers.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition {
    parts: Vec<u64>,
}

impl Partition {
    /// Builds a partition, rejecting zero parts and increasing steps.
    pub fn new(parts: Vec<u64>) -> Result<Self> {
        if let Some(i) = parts.iter().position(|&p| p == 0) {
            return Err(Error::InvalidPartition(format!(
                "part {} is zero; parts must be positive",
                i + 1
            )));
        }
        if let Some(i) = parts.windows(2).position(|w| w[0] < w[1]) {
            return Err(Error::InvalidPartition(format!(
                "parts must be non-increasing, but {} is followed by {}",
                parts[i],
                parts[i + 1]
            )));
        }
        Ok(Partition { parts })
    }

    /// The empty partition of 0.
    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    /// Sorts arbitrary positive parts into a partition.
    pub fn from_unsorted(mut parts: Vec<u64>) -> Result<Self> {
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition::new(parts)
    }

    pub(crate) fn from_sorted_unchecked(parts: Vec<u64>) -> Self {
        debug_assert!(parts.windows(2).all(|w| w[0] >= w[1]));
        debug_assert!(parts.iter().all(|&p| p > 0));
        Partition { parts }
    }

    pub fn parts(&self) -> &[u64] {
        &self.parts
    }

    pub fn into_parts(self) -> Vec<u64> {
        self.parts
    }

    /// Sum of the parts.
    pub fn size(&self) -> u64 {
        self.parts.iter().sum()
    }

    /// Number of parts.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn largest(&self) -> Option<u64> {
        self.parts.first().copied()
    }

    pub fn perimeter(&self) -> u64 {
        perimeter(self)
    }

    /// Number of parts equal to `value`.
    pub fn multiplicity(&self, value: u64) -> usize {
        self.parts.iter().filter(|&&p| p == value).count()
    }

    /// `(value, multiplicity)` pairs, values strictly decreasing.
    pub fn runs(&self) -> Vec<(u64, usize)> {
        runs(&self.parts).collect()
    }

    /// Multiset union of the parts of `self` and `other`.
    pub fn union(&self, other: &Partition) -> Partition {
        let mut parts = Vec::with_capacity(self.len() + other.len());
        let (mut a, mut b) = (self.parts.iter().peekable(), other.parts.iter().peekable());
        loop {
            match (a.peek(), b.peek()) {
                (Some(&&x), Some(&&y)) => {
                    if x >= y {
                        parts.push(x);
                        a.next();
                    } else {
                        parts.push(y);
                        b.next();
                    }
                }
                (Some(_), None) => parts.extend(a.by_ref()),
                (None, Some(_)) => parts.extend(b.by_ref()),
                (None, None) => break,
            }
        }
        Partition { parts }
    }

    pub fn all_odd(&self) -> bool {
        self.parts.iter().all(|p| p % 2 == 1)
    }

    pub fn all_distinct(&self) -> bool {
        self.parts.windows(2).all(|w| w[0] != w[1])
    }
}

/// Runs of equal values in a sorted slice, as `(value, multiplicity)`.
pub fn runs(parts: &[u64]) -> impl Iterator<Item = (u64, usize)> + '_ {
    parts
        .chunk_by(|a, b| a == b)
        .map(|chunk| (chunk[0], chunk.len()))
}

impl fmt::Display for Partition {
    /// Comma-separated parts, largest first. The empty partition prints as "".
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{p}")?;
        }
        Ok(())
    }
}

impl FromStr for Partition {
    type Err = Error;

    /// Parses `"a,b,c"`, largest part first. Empty input (or `"()"`) is the
    /// empty partition. Unsorted input is rejected, never re-sorted.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let s = s
            .strip_prefix('(')
            .and_then(|t| t.strip_suffix(')'))
            .unwrap_or(s)
            .trim();
        if s.is_empty() {
            return Ok(Partition::empty());
        }
        let parts = s
            .split(',')
            .map(|tok| {
                let tok = tok.trim();
                tok.parse::<u64>().map_err(|_| {
                    Error::InvalidPartition(format!("token {tok:?} is not a positive integer"))
                })
            })
            .collect::<Result<Vec<_>>>()?;
        Partition::new(parts)
    }
}

impl From<Partition> for Vec<u64> {
    fn from(p: Partition) -> Self {
        p.parts
    }
}

/// Largest hook length `λ₁ + ℓ(λ) − 1`; zero for the empty partition.
pub fn perimeter(p: &Partition) -> u64 {
    match p.largest() {
        Some(first) => first + p.len() as u64 - 1,
        None => 0,
    }
}

/// The index `ℓ(λ) − 1 − ⌊λ₁/2⌋` (the M2-rank on odd-part partitions).
pub fn m2_index(p: &Partition) -> Result<i64> {
    let first = p
        .largest()
        .ok_or_else(|| Error::Domain("index of the empty partition is undefined".into()))?;
    Ok(p.len() as i64 - 1 - (first / 2) as i64)
}

/// Fibonacci numbers with `F₋₁ = 1`, `F₀ = 0`, `F₁ = 1`.
pub fn fibonacci(m: i64) -> Result<BigCount> {
    if m < -1 {
        return Err(Error::Domain(format!("fibonacci index {m} is below -1")));
    }
    if m == -1 {
        return Ok(BigUint::one());
    }
    let (mut a, mut b) = (BigUint::zero(), BigUint::one());
    for _ in 0..m {
        let next = &a + &b;
        a = std::mem::replace(&mut b, next);
    }
    Ok(a)
}

/// `F₋₁..=F_max` as a vector indexed from `-1` (entry `k + 1` holds `F_k`).
pub(crate) fn fibonacci_table(max: usize) -> Vec<BigUint> {
    let mut table = Vec::with_capacity(max + 2);
    table.push(BigUint::one());
    table.push(BigUint::zero());
    for k in 1..=max {
        let next = &table[k] + &table[k - 1];
        table.push(next);
    }
    table
}

#[cfg(test)]
mod tests {
    use super::*;

    fn part(s: &str) -> Partition {
        s.parse().unwrap()
    }

    #[test]
    fn perimeter_examples() {
        assert_eq!(perimeter(&part("6,6,3,2,2,1")), 11);
        assert_eq!(perimeter(&part("1")), 1);
        assert_eq!(perimeter(&Partition::empty()), 0);
    }

    #[test]
    fn m2_index_examples() {
        assert_eq!(m2_index(&part("1,1,1,1")).unwrap(), 3);
        assert_eq!(m2_index(&part("3,1")).unwrap(), 0);
        assert_eq!(m2_index(&part("5")).unwrap(), -2);
        assert!(matches!(
            m2_index(&Partition::empty()),
            Err(Error::Domain(_))
        ));
    }

    #[test]
    fn fibonacci_values() {
        assert_eq!(fibonacci(-1).unwrap(), BigUint::from(1u32));
        assert_eq!(fibonacci(0).unwrap(), BigUint::from(0u32));
        assert_eq!(fibonacci(1).unwrap(), BigUint::from(1u32));
        assert_eq!(fibonacci(8).unwrap(), BigUint::from(21u32));
        assert!(fibonacci(-2).is_err());
        let table = fibonacci_table(30);
        for k in -1..=30i64 {
            assert_eq!(table[(k + 1) as usize], fibonacci(k).unwrap());
        }
    }

    #[test]
    fn parse_rejects_unsorted_and_garbage() {
        assert!(matches!(
            "1,2".parse::<Partition>(),
            Err(Error::InvalidPartition(msg)) if msg.contains("1 is followed by 2")
        ));
        assert!(matches!(
            "3,x".parse::<Partition>(),
            Err(Error::InvalidPartition(msg)) if msg.contains("\"x\"")
        ));
        assert!("2,0".parse::<Partition>().is_err());
        assert_eq!("".parse::<Partition>().unwrap(), Partition::empty());
        assert_eq!(" (3, 1) ".parse::<Partition>().unwrap(), part("3,1"));
    }

    #[test]
    fn union_and_runs() {
        let u = part("4,4,1").union(&part("3,1"));
        assert_eq!(u, part("4,4,3,1,1"));
        assert_eq!(u.runs(), vec![(4, 2), (3, 1), (1, 2)]);
        assert_eq!(u.size(), 13);
        assert_eq!(u.to_string(), "4,4,3,1,1");
        assert_eq!(Partition::empty().to_string(), "");
    }
}
