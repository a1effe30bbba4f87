use std::fmt;

use super::{runs, Partition};
use crate::{Error, Result};

/// One predicate on a partition.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Constraint {
    AllOdd,
    AllDistinct,
    /// No part divisible by `r` (r-regular).
    NoPartDivisibleBy(u64),
    /// Every part value occurs fewer than `r` times.
    MultiplicitiesBelow(u64),
    /// Exactly `j` distinct part values are divisible by `r`; with `u`, each
    /// of those values occurs exactly `u` times.
    DivisibleValues {
        r: u64,
        j: usize,
        u: Option<usize>,
    },
    /// Exactly `j` distinct part values occur at least `r` times; with `u`,
    /// each of those values equals `u`.
    RepeatedValues {
        r: u64,
        j: usize,
        u: Option<u64>,
    },
    /// Every part is congruent to `d` modulo `r`.
    Congruent {
        d: u64,
        r: u64,
    },
    PerimeterEquals(u64),
    SizeEquals(u64),
    NoOnes,
}

impl Constraint {
    fn validate(&self) -> Result<()> {
        let need_r = |r: u64| {
            if r < 2 {
                Err(Error::Parameter(format!(
                    "modulus r = {r} must be at least 2"
                )))
            } else {
                Ok(())
            }
        };
        match *self {
            Constraint::NoPartDivisibleBy(r) | Constraint::MultiplicitiesBelow(r) => need_r(r),
            Constraint::DivisibleValues { r, u, .. } => {
                need_r(r)?;
                if u == Some(0) {
                    return Err(Error::Parameter(
                        "repetition count u must be at least 1".into(),
                    ));
                }
                Ok(())
            }
            Constraint::RepeatedValues { r, u, .. } => {
                need_r(r)?;
                if u == Some(0) {
                    return Err(Error::Parameter(
                        "repeated part value u must be at least 1".into(),
                    ));
                }
                Ok(())
            }
            Constraint::Congruent { d, r } => {
                need_r(r)?;
                if d == 0 || d >= r {
                    return Err(Error::Parameter(format!(
                        "residue d = {d} must satisfy 1 <= d < r = {r}"
                    )));
                }
                Ok(())
            }
            Constraint::PerimeterEquals(0) => {
                Err(Error::Parameter("perimeter must be at least 1".into()))
            }
            _ => Ok(()),
        }
    }

    /// Tests the predicate on parts sorted in either direction.
    pub(crate) fn matches_sorted(&self, parts: &[u64]) -> bool {
        match *self {
            Constraint::AllOdd => parts.iter().all(|p| p % 2 == 1),
            Constraint::AllDistinct => parts.windows(2).all(|w| w[0] != w[1]),
            Constraint::NoPartDivisibleBy(r) => parts.iter().all(|p| p % r != 0),
            Constraint::MultiplicitiesBelow(r) => runs(parts).all(|(_, m)| (m as u64) < r),
            Constraint::DivisibleValues { r, j, u } => {
                let mut count = 0;
                for (value, m) in runs(parts) {
                    if value % r == 0 {
                        if u.is_some_and(|u| u != m) {
                            return false;
                        }
                        count += 1;
                    }
                }
                count == j
            }
            Constraint::RepeatedValues { r, j, u } => {
                let mut count = 0;
                for (value, m) in runs(parts) {
                    if m as u64 >= r {
                        if u.is_some_and(|u| u != value) {
                            return false;
                        }
                        count += 1;
                    }
                }
                count == j
            }
            Constraint::Congruent { d, r } => parts.iter().all(|p| p % r == d),
            Constraint::PerimeterEquals(m) => {
                let largest = match (parts.first(), parts.last()) {
                    (Some(&a), Some(&b)) => a.max(b),
                    _ => return m == 0,
                };
                largest + parts.len() as u64 - 1 == m
            }
            Constraint::SizeEquals(n) => parts.iter().sum::<u64>() == n,
            Constraint::NoOnes => parts.iter().all(|&p| p != 1),
        }
    }
}

impl fmt::Display for Constraint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Constraint::AllOdd => write!(f, "odd"),
            Constraint::AllDistinct => write!(f, "distinct"),
            Constraint::NoPartDivisibleBy(r) => write!(f, "regular({r})"),
            Constraint::MultiplicitiesBelow(r) => write!(f, "mult-below({r})"),
            Constraint::DivisibleValues { r, j, u } => match u {
                Some(u) => write!(f, "div-values({r},{j},u={u})"),
                None => write!(f, "div-values({r},{j})"),
            },
            Constraint::RepeatedValues { r, j, u } => match u {
                Some(u) => write!(f, "rep-values({r},{j},u={u})"),
                None => write!(f, "rep-values({r},{j})"),
            },
            Constraint::Congruent { d, r } => write!(f, "mod({r},{d})"),
            Constraint::PerimeterEquals(m) => write!(f, "perimeter({m})"),
            Constraint::SizeEquals(n) => write!(f, "size({n})"),
            Constraint::NoOnes => write!(f, "no-ones"),
        }
    }
}

/// A conjunction of [`Constraint`]s. The empty spec admits every partition.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ConstraintSpec {
    constraints: Vec<Constraint>,
}

impl ConstraintSpec {
    pub fn new() -> Self {
        Self::default()
    }

    /// Adds a predicate after checking its parameters.
    pub fn with(mut self, c: Constraint) -> Result<Self> {
        c.validate()?;
        self.constraints.push(c);
        Ok(self)
    }

    pub fn from_constraints(constraints: impl IntoIterator<Item = Constraint>) -> Result<Self> {
        constraints
            .into_iter()
            .try_fold(Self::new(), |spec, c| spec.with(c))
    }

    pub fn odd() -> Self {
        Self {
            constraints: vec![Constraint::AllOdd],
        }
    }

    pub fn distinct() -> Self {
        Self {
            constraints: vec![Constraint::AllDistinct],
        }
    }

    pub fn constraints(&self) -> &[Constraint] {
        &self.constraints
    }

    pub fn is_empty(&self) -> bool {
        self.constraints.is_empty()
    }

    pub fn matches(&self, p: &Partition) -> bool {
        self.matches_sorted(p.parts())
    }

    pub(crate) fn matches_sorted(&self, parts: &[u64]) -> bool {
        self.constraints.iter().all(|c| c.matches_sorted(parts))
    }
}

impl fmt::Display for ConstraintSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.constraints.is_empty() {
            return f.write_str("all");
        }
        for (i, c) in self.constraints.iter().enumerate() {
            if i > 0 {
                f.write_str("&")?;
            }
            write!(f, "{c}")?;
        }
        Ok(())
    }
}
