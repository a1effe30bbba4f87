//! Brute-force counters. Everything here comes from exhaustive enumeration;
//! none of it touches the series engine, so it serves as ground truth for
//! the formulas.

use std::collections::BTreeMap;

use num_bigint::{BigInt, BigUint};
use num_traits::Zero;
use rayon::prelude::*;
use serde::Serialize;

use crate::partitions::{
    enumerate_by_size, perimeter_word_parts, runs, BigCount, Constraint, ConstraintSpec,
    PartitionsOfSize,
};
use crate::{Error, Result};

/// Largest perimeter the exhaustive counters accept.
pub const EXHAUSTIVE_PERIMETER_BOUND: u32 = 24;

/// Words handled per parallel task in the perimeter sweeps.
const CHUNK: u64 = 1 << 14;

fn check_r(r: u64) -> Result<()> {
    if r < 2 {
        return Err(Error::Parameter(format!("r = {r} must be at least 2")));
    }
    Ok(())
}

fn check_perimeter(m: u32) -> Result<()> {
    if m == 0 || m > EXHAUSTIVE_PERIMETER_BOUND {
        return Err(Error::Parameter(format!(
            "perimeter {m} outside the exhaustive range 1..={EXHAUSTIVE_PERIMETER_BOUND}"
        )));
    }
    Ok(())
}

fn count(spec: &ConstraintSpec, n: u64) -> BigCount {
    BigUint::from(enumerate_by_size(n, spec).count())
}

/// `p(n)` by Euler's pentagonal-number recurrence.
pub fn partition_count(n: u64) -> BigCount {
    let n = n as usize;
    let mut p: Vec<BigInt> = vec![BigInt::zero(); n + 1];
    p[0] = BigInt::from(1);
    for i in 1..=n {
        let mut acc = BigInt::zero();
        for k in 1.. {
            let g1 = k * (3 * k - 1) / 2;
            if g1 > i {
                break;
            }
            let sign_positive = k % 2 == 1;
            let mut term = p[i - g1].clone();
            let g2 = k * (3 * k + 1) / 2;
            if g2 <= i {
                term += &p[i - g2];
            }
            if sign_positive {
                acc += term;
            } else {
                acc -= term;
            }
        }
        p[i] = acc;
    }
    p[n].to_biguint()
        .expect("partition numbers are non-negative")
}

/// `(|O(n;r,j)|, |D(n;r,j)|)`.
pub fn franklin_counts(n: u64, r: u64, j: usize) -> Result<(BigCount, BigCount)> {
    check_r(r)?;
    let o = ConstraintSpec::new().with(Constraint::DivisibleValues { r, j, u: None })?;
    let d = ConstraintSpec::new().with(Constraint::RepeatedValues { r, j, u: None })?;
    Ok((count(&o, n), count(&d, n)))
}

/// `|O(n;r,j)|` and `|D(n;r,j)|` for every `j` at once.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FranklinHistogram {
    pub n: u64,
    pub r: u64,
    /// Entry `j` is `|O(n;r,j)|`.
    pub divisible: Vec<BigCount>,
    /// Entry `j` is `|D(n;r,j)|`.
    pub repeated: Vec<BigCount>,
}

impl FranklinHistogram {
    pub fn divisible_at(&self, j: usize) -> BigCount {
        self.divisible.get(j).cloned().unwrap_or_default()
    }

    pub fn repeated_at(&self, j: usize) -> BigCount {
        self.repeated.get(j).cloned().unwrap_or_default()
    }
}

/// One enumeration pass tallying both Franklin classes by `j`.
pub fn franklin_histogram(n: u64, r: u64) -> Result<FranklinHistogram> {
    check_r(r)?;
    let mut divisible = Vec::<u64>::new();
    let mut repeated = Vec::<u64>::new();
    let bump = |v: &mut Vec<u64>, j: usize| {
        if v.len() <= j {
            v.resize(j + 1, 0);
        }
        v[j] += 1;
    };
    for p in PartitionsOfSize::new(n) {
        let (mut dj, mut rj) = (0, 0);
        for (value, m) in runs(p.parts()) {
            dj += usize::from(value % r == 0);
            rj += usize::from(m as u64 >= r);
        }
        bump(&mut divisible, dj);
        bump(&mut repeated, rj);
    }
    let big = |v: Vec<u64>| v.into_iter().map(BigUint::from).collect();
    Ok(FranklinHistogram {
        n,
        r,
        divisible: big(divisible),
        repeated: big(repeated),
    })
}

/// `(α_u^{(r)}(n), β_u^{(r)}(n))`.
pub fn refined_counts(n: u64, r: u64, u: u64) -> Result<(BigCount, BigCount)> {
    check_r(r)?;
    let alpha = ConstraintSpec::new().with(Constraint::DivisibleValues {
        r,
        j: 1,
        u: Some(u as usize),
    })?;
    let beta = ConstraintSpec::new().with(Constraint::RepeatedValues {
        r,
        j: 1,
        u: Some(u),
    })?;
    Ok((count(&alpha, n), count(&beta, n)))
}

/// Part totals over odd-part and distinct-part partitions of `n`, with the
/// two `j = 1` class sizes.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BeckTotals {
    /// Total number of parts over partitions of `n` into odd parts.
    pub a: BigCount,
    /// Total number of parts over partitions of `n` into distinct parts.
    pub b: BigCount,
    /// `|O(n;2,1)|`
    pub o: BigCount,
    /// `|D(n;2,1)|`
    pub d: BigCount,
}

pub fn beck_totals(n: u64) -> BeckTotals {
    let (mut a, mut b, mut o, mut d) = (0u64, 0u64, 0u64, 0u64);
    // The empty partition has no parts, so it adds nothing to a or b and sits
    // in neither j = 1 class.
    for p in PartitionsOfSize::new(n) {
        if p.all_odd() {
            a += p.len() as u64;
        }
        if p.all_distinct() {
            b += p.len() as u64;
        }
        let (mut even_values, mut repeated_values) = (0, 0);
        for (value, m) in runs(p.parts()) {
            even_values += usize::from(value % 2 == 0);
            repeated_values += usize::from(m >= 2);
        }
        o += u64::from(even_values == 1);
        d += u64::from(repeated_values == 1);
    }
    BeckTotals {
        a: a.into(),
        b: b.into(),
        o: o.into(),
        d: d.into(),
    }
}

/// Statistics over all partitions of one perimeter.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PerimeterTable {
    pub m: u32,
    /// Total parts over odd-part partitions, `g(M)`.
    pub g: BigCount,
    /// Total parts over distinct-part partitions, `h(M)`.
    pub h: BigCount,
    /// Exactly one even part value, any multiplicity.
    pub g1: BigCount,
    /// Exactly one repeated part value.
    pub h1: BigCount,
    /// Sum of the index over odd-part partitions.
    pub index_sum: BigInt,
    /// Members of the `g1` class with no part equal to 1.
    pub g1_no_one: BigCount,
    /// `|G(M)|`
    pub odd_count: BigCount,
    /// `|H(M)|`
    pub distinct_count: BigCount,
    /// `t_n(M)` keyed by size, zero entries omitted.
    pub t_row: BTreeMap<u64, BigCount>,
}

#[derive(Clone, Default)]
struct TableAcc {
    g: u64,
    h: u64,
    g1: u64,
    h1: u64,
    index_sum: i64,
    g1_no_one: u64,
    odd_count: u64,
    distinct_count: u64,
    t_row: Vec<u64>,
}

impl TableAcc {
    fn merge(mut self, other: TableAcc) -> TableAcc {
        self.g += other.g;
        self.h += other.h;
        self.g1 += other.g1;
        self.h1 += other.h1;
        self.index_sum += other.index_sum;
        self.g1_no_one += other.g1_no_one;
        self.odd_count += other.odd_count;
        self.distinct_count += other.distinct_count;
        if self.t_row.len() < other.t_row.len() {
            self.t_row.resize(other.t_row.len(), 0);
        }
        for (slot, v) in self.t_row.iter_mut().zip(other.t_row) {
            *slot += v;
        }
        self
    }

    fn record(&mut self, parts: &[u64]) {
        // `parts` is smallest first.
        let len = parts.len() as u64;
        let largest = *parts.last().expect("perimeter words are non-empty");
        let size: u64 = parts.iter().sum();
        if self.t_row.len() <= size as usize {
            self.t_row.resize(size as usize + 1, 0);
        }
        self.t_row[size as usize] += 1;

        let (mut even_values, mut repeated_values, mut all_odd, mut distinct) = (0, 0, true, true);
        for (value, m) in runs(parts) {
            if value % 2 == 0 {
                even_values += 1;
                all_odd = false;
            }
            if m >= 2 {
                repeated_values += 1;
                distinct = false;
            }
        }
        if all_odd {
            self.odd_count += 1;
            self.g += len;
            self.index_sum += len as i64 - 1 - (largest / 2) as i64;
        }
        if distinct {
            self.distinct_count += 1;
            self.h += len;
        }
        if even_values == 1 {
            self.g1 += 1;
            if parts[0] != 1 {
                self.g1_no_one += 1;
            }
        }
        if repeated_values == 1 {
            self.h1 += 1;
        }
    }
}

fn chunk_ranges(m: u32) -> Vec<(u64, u64)> {
    let total = 1u64 << (m - 1);
    (0..total.div_ceil(CHUNK))
        .map(|c| (c * CHUNK, ((c + 1) * CHUNK).min(total)))
        .collect()
}

/// One pass over every perimeter-`m` partition. Chunks of the word space run
/// in parallel; all accumulators are exact sums, so the merge is independent
/// of scheduling.
pub fn perimeter_table(m: u32) -> Result<PerimeterTable> {
    check_perimeter(m)?;
    let acc = chunk_ranges(m)
        .into_par_iter()
        .map(|(lo, hi)| {
            let mut acc = TableAcc::default();
            let mut buf = Vec::with_capacity(m as usize);
            for index in lo..hi {
                perimeter_word_parts(m, index, &mut buf);
                acc.record(&buf);
            }
            acc
        })
        .reduce(TableAcc::default, TableAcc::merge);
    Ok(PerimeterTable {
        m,
        g: acc.g.into(),
        h: acc.h.into(),
        g1: acc.g1.into(),
        h1: acc.h1.into(),
        index_sum: acc.index_sum.into(),
        g1_no_one: acc.g1_no_one.into(),
        odd_count: acc.odd_count.into(),
        distinct_count: acc.distinct_count.into(),
        t_row: acc
            .t_row
            .into_iter()
            .enumerate()
            .filter(|&(_, v)| v > 0)
            .map(|(n, v)| (n as u64, BigUint::from(v)))
            .collect(),
    })
}

/// `g_r(M)`, `h_r(M)` and optionally `g_r^{(d)}(M)` at one perimeter.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RegularCounts {
    pub m: u32,
    pub r: u64,
    /// No part divisible by `r`.
    pub g_r: BigCount,
    /// Every multiplicity below `r`.
    pub h_r: BigCount,
    pub d: Option<u64>,
    /// Every part congruent to `d` mod `r`.
    pub g_r_d: Option<BigCount>,
}

pub fn regular_perimeter_counts(m: u32, r: u64, d: Option<u64>) -> Result<RegularCounts> {
    check_perimeter(m)?;
    check_r(r)?;
    if let Some(d) = d {
        if d == 0 || d >= r {
            return Err(Error::Parameter(format!(
                "residue d = {d} must satisfy 1 <= d < r = {r}"
            )));
        }
    }
    let (g, h, gd) = chunk_ranges(m)
        .into_par_iter()
        .map(|(lo, hi)| {
            let (mut g, mut h, mut gd) = (0u64, 0u64, 0u64);
            let mut buf = Vec::with_capacity(m as usize);
            for index in lo..hi {
                perimeter_word_parts(m, index, &mut buf);
                g += u64::from(buf.iter().all(|p| p % r != 0));
                h += u64::from(runs(&buf).all(|(_, mult)| (mult as u64) < r));
                if let Some(d) = d {
                    gd += u64::from(buf.iter().all(|p| p % r == d));
                }
            }
            (g, h, gd)
        })
        .reduce(|| (0, 0, 0), |a, b| (a.0 + b.0, a.1 + b.1, a.2 + b.2));
    Ok(RegularCounts {
        m,
        r,
        g_r: g.into(),
        h_r: h.into(),
        d,
        g_r_d: d.map(|_| gd.into()),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn big(v: u64) -> BigCount {
        BigUint::from(v)
    }

    #[test]
    fn pentagonal_partition_numbers() {
        let expected = [1u64, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42];
        for (n, &p) in expected.iter().enumerate() {
            assert_eq!(partition_count(n as u64), big(p));
        }
        assert_eq!(partition_count(50), big(204_226));
        assert_eq!(partition_count(100), big(190_569_292));
    }

    #[test]
    fn franklin_small() {
        assert_eq!(franklin_counts(5, 2, 1).unwrap(), (big(4), big(4)));
        assert_eq!(franklin_counts(0, 2, 0).unwrap(), (big(1), big(1)));
        assert!(franklin_counts(5, 1, 0).is_err());
        let hist = franklin_histogram(5, 2).unwrap();
        for j in 0..4 {
            let (o, d) = franklin_counts(5, 2, j).unwrap();
            assert_eq!(hist.divisible_at(j), o);
            assert_eq!(hist.repeated_at(j), d);
        }
    }

    #[test]
    fn refined_small() {
        assert_eq!(refined_counts(3, 2, 1).unwrap(), (big(1), big(1)));
        assert_eq!(refined_counts(1, 2, 1).unwrap(), (big(0), big(0)));
    }

    #[test]
    fn beck_small() {
        let t = beck_totals(5);
        assert_eq!((t.a, t.b, t.o, t.d), (big(9), big(5), big(4), big(4)));
        let t = beck_totals(0);
        assert_eq!((t.a, t.b, t.o, t.d), (big(0), big(0), big(0), big(0)));
        let t = beck_totals(1);
        assert_eq!((t.a, t.b, t.o, t.d), (big(1), big(1), big(0), big(0)));
    }

    #[test]
    fn perimeter_table_small() {
        let t = perimeter_table(5).unwrap();
        assert_eq!((t.g.clone(), t.h.clone()), (big(15), big(10)));
        assert_eq!((t.g1.clone(), t.h1.clone()), (big(10), big(10)));
        let row: Vec<(u64, u64)> = t
            .t_row
            .iter()
            .map(|(&n, c)| (n, u64::try_from(c).unwrap()))
            .collect();
        assert_eq!(row, vec![(5, 5), (6, 3), (7, 4), (8, 3), (9, 1)]);

        let t = perimeter_table(4).unwrap();
        assert_eq!((t.g, t.h), (big(8), big(5)));
        assert_eq!(t.index_sum, BigInt::from(3));
        assert_eq!(t.g1_no_one, big(3));

        let t = perimeter_table(1).unwrap();
        assert_eq!((t.g, t.h, t.g1, t.h1), (big(1), big(1), big(0), big(0)));
        assert_eq!(t.index_sum, BigInt::zero());
        assert_eq!(t.t_row, BTreeMap::from([(1, big(1))]));

        assert!(perimeter_table(0).is_err());
        assert!(perimeter_table(EXHAUSTIVE_PERIMETER_BOUND + 1).is_err());
    }

    #[test]
    fn regular_small() {
        let c = regular_perimeter_counts(3, 3, None).unwrap();
        assert_eq!((c.g_r, c.h_r, c.g_r_d), (big(3), big(3), None));
        let c = regular_perimeter_counts(1, 2, Some(1)).unwrap();
        assert_eq!((c.g_r, c.h_r, c.g_r_d), (big(1), big(1), Some(big(1))));
        let c = regular_perimeter_counts(6, 2, Some(1)).unwrap();
        assert_eq!(c.g_r_d, Some(big(8)));
        assert!(regular_perimeter_counts(6, 3, Some(3)).is_err());
    }
}
