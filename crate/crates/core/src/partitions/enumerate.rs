use super::{ConstraintSpec, Partition};
use crate::{Error, Result};

/// Largest perimeter whose words fit the 64-bit enumeration counter.
pub const MAX_ENUM_PERIMETER: u32 = 63;

/// All partitions of `n` in lexicographically decreasing order.
#[derive(Clone, Debug)]
pub struct PartitionsOfSize {
    current: Vec<u64>,
    done: bool,
}

impl PartitionsOfSize {
    pub fn new(n: u64) -> Self {
        let current = if n == 0 { Vec::new() } else { vec![n] };
        PartitionsOfSize {
            current,
            done: false,
        }
    }

    fn advance(&mut self) {
        let mut spare = 0;
        while self.current.last() == Some(&1) {
            self.current.pop();
            spare += 1;
        }
        let Some(last) = self.current.last_mut() else {
            self.done = true;
            return;
        };
        *last -= 1;
        let cap = *last;
        spare += 1;
        while spare > 0 {
            let next = cap.min(spare);
            self.current.push(next);
            spare -= next;
        }
    }
}

impl Iterator for PartitionsOfSize {
    type Item = Partition;

    fn next(&mut self) -> Option<Partition> {
        if self.done {
            return None;
        }
        let out = Partition::from_sorted_unchecked(self.current.clone());
        self.advance();
        Some(out)
    }
}

/// Partitions of `n` admitted by `c`, lexicographically decreasing.
pub fn enumerate_by_size(n: u64, c: &ConstraintSpec) -> impl Iterator<Item = Partition> + '_ {
    PartitionsOfSize::new(n).filter(move |p| c.matches(p))
}

/// Decodes word number `index` of perimeter `m` into `parts`, smallest part first.
///
/// Word `index` has first digit 1, last digit 0, and middle digits equal to
/// the `m - 1` binary digits of `index`, most significant first.
pub fn perimeter_word_parts(m: u32, index: u64, parts: &mut Vec<u64>) {
    parts.clear();
    let mut width = 1u64;
    for pos in (0..m - 1).rev() {
        if (index >> pos) & 1 == 1 {
            width += 1;
        } else {
            parts.push(width);
        }
    }
    parts.push(width);
}

/// Perimeter-`m` partitions admitted by `c`, in increasing binary order of
/// their profile words.
pub fn enumerate_by_perimeter(
    m: u32,
    c: &ConstraintSpec,
) -> Result<impl Iterator<Item = Partition> + '_> {
    if m == 0 || m > MAX_ENUM_PERIMETER {
        return Err(Error::Parameter(format!(
            "perimeter {m} must lie in 1..={MAX_ENUM_PERIMETER}"
        )));
    }
    let mut buf = Vec::with_capacity(m as usize);
    Ok((0..1u64 << (m - 1)).filter_map(move |index| {
        perimeter_word_parts(m, index, &mut buf);
        if !c.matches_sorted(&buf) {
            return None;
        }
        let parts = buf.iter().rev().copied().collect();
        Some(Partition::from_sorted_unchecked(parts))
    }))
}
