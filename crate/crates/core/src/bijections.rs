//! The constructive maps: Glaisher's bijection, the refined Franklin map for
//! a single special part value, and the profile rewrite from distinct parts
//! to odd parts at fixed perimeter.
//!
//! Every map checks its precondition up front and names the offending part
//! or digit when it fails.

use crate::partitions::{from_profile, to_profile, Partition, ProfileWord};
use crate::{Error, Result};

/// A partition in exponential notation: `(value, multiplicity)` pairs with
/// strictly decreasing values.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MultiplicityView {
    pairs: Vec<(u64, u64)>,
}

impl MultiplicityView {
    pub fn of(p: &Partition) -> Self {
        MultiplicityView {
            pairs: p.runs().into_iter().map(|(v, m)| (v, m as u64)).collect(),
        }
    }

    pub fn pairs(&self) -> &[(u64, u64)] {
        &self.pairs
    }

    pub fn size(&self) -> u64 {
        self.pairs.iter().map(|&(v, m)| v * m).sum()
    }

    pub fn to_partition(&self) -> Partition {
        let mut parts = Vec::new();
        for &(v, m) in &self.pairs {
            parts.extend(std::iter::repeat_n(v, m as usize));
        }
        Partition::from_sorted_unchecked(parts)
    }
}

fn check_modulus(op: &'static str, r: u64) -> Result<()> {
    if r < 2 {
        return Err(Error::precondition(
            op,
            format!("r = {r} must be at least 2"),
        ));
    }
    Ok(())
}

fn collect_parts(pairs: impl IntoIterator<Item = (u64, u64)>) -> Partition {
    let mut parts = Vec::new();
    for (v, m) in pairs {
        parts.extend(std::iter::repeat_n(v, m as usize));
    }
    parts.sort_unstable_by(|a, b| b.cmp(a));
    Partition::from_sorted_unchecked(parts)
}

/// Glaisher's map from r-regular partitions to partitions with every
/// multiplicity below `r`.
///
/// A part `a` with multiplicity `m = Σ mᵢ rⁱ` (base `r`) becomes `mᵢ`
/// copies of `a·rⁱ`.
pub fn glaisher(p: &Partition, r: u64) -> Result<Partition> {
    const OP: &str = "glaisher";
    check_modulus(OP, r)?;
    if let Some(&bad) = p.parts().iter().find(|&&a| a % r == 0) {
        return Err(Error::precondition(
            OP,
            format!("part {bad} is divisible by r = {r}"),
        ));
    }
    let mut out = Vec::new();
    for (a, m) in p.runs() {
        let (mut m, mut scale) = (m as u64, 1u64);
        while m > 0 {
            let digit = m % r;
            if digit > 0 {
                out.push((a * scale, digit));
            }
            m /= r;
            scale *= r;
        }
    }
    Ok(collect_parts(out))
}

/// Inverse of [`glaisher`]: each part `a·rⁱ` (with `r ∤ a`) becomes `rⁱ`
/// copies of `a`.
pub fn glaisher_inv(p: &Partition, r: u64) -> Result<Partition> {
    const OP: &str = "glaisher_inv";
    check_modulus(OP, r)?;
    let runs = p.runs();
    if let Some(&(v, m)) = runs.iter().find(|&&(_, m)| m as u64 >= r) {
        return Err(Error::precondition(
            OP,
            format!("part {v} occurs {m} times, not fewer than r = {r}"),
        ));
    }
    let out = runs.into_iter().map(|(v, m)| {
        let (mut a, mut copies) = (v, 1u64);
        while a % r == 0 {
            a /= r;
            copies *= r;
        }
        (a, copies * m as u64)
    });
    Ok(collect_parts(out))
}

/// The refined Franklin map from partitions with exactly one part value
/// divisible by `r` (repeated `u` times) to partitions whose unique value
/// of multiplicity `≥ r` equals `u`.
///
/// Writes `p = μ ∪ ((rj)^u)` and returns `glaisher(μ) ∪ (u^{rj})`.
pub fn theorem1_map(p: &Partition, r: u64) -> Result<Partition> {
    const OP: &str = "theorem1_map";
    check_modulus(OP, r)?;
    let runs = p.runs();
    let divisible: Vec<_> = runs.iter().filter(|&&(v, _)| v % r == 0).collect();
    let &&(special, u) = match divisible.as_slice() {
        [one] => one,
        [] => {
            return Err(Error::precondition(
                OP,
                format!("no part is divisible by r = {r}"),
            ))
        }
        [first, second, ..] => {
            return Err(Error::precondition(
                OP,
                format!(
                    "parts {} and {} are both divisible by r = {r}",
                    first.0, second.0
                ),
            ))
        }
    };
    let rest = Partition::from_sorted_unchecked(
        p.parts()
            .iter()
            .copied()
            .filter(|&v| v != special)
            .collect(),
    );
    let image = glaisher(&rest, r)?;
    let block = Partition::from_sorted_unchecked(vec![u as u64; special as usize]);
    Ok(image.union(&block))
}

/// Inverse of [`theorem1_map`].
///
/// With `m_u = q·r + s` (`0 ≤ s < r`), removes `q·r` copies of `u` and
/// returns `glaisher_inv(rest) ∪ ((q·r)^u)`.
pub fn theorem1_inv(p: &Partition, r: u64) -> Result<Partition> {
    const OP: &str = "theorem1_inv";
    check_modulus(OP, r)?;
    let runs = p.runs();
    let heavy: Vec<_> = runs.iter().filter(|&&(_, m)| m as u64 >= r).collect();
    let &&(u, m_u) = match heavy.as_slice() {
        [one] => one,
        [] => {
            return Err(Error::precondition(
                OP,
                format!("no part occurs at least r = {r} times"),
            ))
        }
        [first, second, ..] => {
            return Err(Error::precondition(
                OP,
                format!(
                    "parts {} and {} both occur at least r = {r} times",
                    first.0, second.0
                ),
            ))
        }
    };
    let q = m_u as u64 / r;
    let removed = (q * r) as usize;
    let mut rest = Vec::with_capacity(p.len() - removed);
    let mut skipped = 0;
    for &v in p.parts() {
        if v == u && skipped < removed {
            skipped += 1;
        } else {
            rest.push(v);
        }
    }
    let base = glaisher_inv(&Partition::from_sorted_unchecked(rest), r)?;
    let block = Partition::from_sorted_unchecked(vec![q * r; u as usize]);
    Ok(base.union(&block))
}

/// Profile rewrite from distinct-part partitions to odd-part partitions of
/// the same perimeter.
///
/// Position by position on the original word: the first digit stays 1; a
/// 1 after a 1 becomes 0; a 1 after a 0 stays 1; an internal 0 becomes 1;
/// the final 0 stays 0.
pub fn fu_tang(p: &Partition) -> Result<Partition> {
    const OP: &str = "fu_tang";
    if let Some(w) = p.parts().windows(2).find(|w| w[0] == w[1]) {
        return Err(Error::precondition(
            OP,
            format!("part {} is repeated; parts must be distinct", w[0]),
        ));
    }
    let word = to_profile(p);
    let digits = word.digits();
    let last = digits.len().saturating_sub(1);
    let image = digits
        .iter()
        .enumerate()
        .map(|(i, &d)| match (i, d) {
            (0, _) => true,
            (i, false) => i != last,
            (i, true) => !digits[i - 1],
        })
        .collect();
    Ok(from_profile(&ProfileWord::from_digits_unchecked(image)))
}

/// Inverse of [`fu_tang`], reconstructing the original word left to right
/// from the previous original digit and the current image digit.
pub fn fu_tang_inv(p: &Partition) -> Result<Partition> {
    const OP: &str = "fu_tang_inv";
    if let Some(&bad) = p.parts().iter().find(|&&a| a % 2 == 0) {
        return Err(Error::precondition(
            OP,
            format!("part {bad} is even; parts must be odd"),
        ));
    }
    let word = to_profile(p);
    let image = word.digits();
    if image.is_empty() {
        return Ok(Partition::empty());
    }
    let last = image.len() - 1;
    let mut original = Vec::with_capacity(image.len());
    original.push(true);
    for (i, &c) in image.iter().enumerate().skip(1) {
        let prev = original[i - 1];
        let digit = if i == last {
            false
        } else {
            match (prev, c) {
                (true, false) => true,
                (true, true) => false,
                (false, true) => true,
                (false, false) => return Err(Error::Consistency(format!(
                    "word {word} has no preimage: digit {} is an internal 0 after an original 0",
                    i + 1
                ))),
            }
        };
        original.push(digit);
    }
    if last > 0 && !original[last - 1] {
        return Err(Error::Consistency(format!(
            "word {word} has no preimage: reconstruction ends in 00"
        )));
    }
    Ok(from_profile(&ProfileWord::from_digits_unchecked(original)))
}
