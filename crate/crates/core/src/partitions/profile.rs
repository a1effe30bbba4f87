use std::fmt;
use std::str::FromStr;

use super::Partition;
use crate::{Error, Result};

/// Boundary walk of a Ferrers diagram from its SW corner going NE:
/// `1` per step right, `0` per step up.
///
/// A non-empty word starts with `1`, ends with `0`, has `perimeter + 1`
/// digits, and one `0` per part.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ProfileWord {
    digits: Vec<bool>,
}

impl ProfileWord {
    /// Validates a digit sequence (`true` = 1).
    pub fn new(digits: Vec<bool>) -> Result<Self> {
        if let (Some(&first), Some(&last)) = (digits.first(), digits.last()) {
            if !first {
                return Err(Error::Encoding(
                    "word must start with 1 (digit 1 is 0)".into(),
                ));
            }
            if last {
                return Err(Error::Encoding(format!(
                    "word must end with 0 (digit {} is 1)",
                    digits.len()
                )));
            }
        }
        Ok(ProfileWord { digits })
    }

    pub(crate) fn from_digits_unchecked(digits: Vec<bool>) -> Self {
        ProfileWord { digits }
    }

    pub fn digits(&self) -> &[bool] {
        &self.digits
    }

    pub fn len(&self) -> usize {
        self.digits.len()
    }

    pub fn is_empty(&self) -> bool {
        self.digits.is_empty()
    }

    /// Perimeter of the encoded partition.
    pub fn perimeter(&self) -> usize {
        self.digits.len().saturating_sub(1)
    }

    /// Number of parts of the encoded partition.
    pub fn zeros(&self) -> usize {
        self.digits.iter().filter(|&&d| !d).count()
    }
}

impl fmt::Display for ProfileWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for &d in &self.digits {
            f.write_str(if d { "1" } else { "0" })?;
        }
        Ok(())
    }
}

impl FromStr for ProfileWord {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let digits = s
            .trim()
            .chars()
            .enumerate()
            .map(|(i, c)| match c {
                '1' => Ok(true),
                '0' => Ok(false),
                other => Err(Error::Encoding(format!(
                    "digit {} is {other:?}, expected 0 or 1",
                    i + 1
                ))),
            })
            .collect::<Result<Vec<_>>>()?;
        ProfileWord::new(digits)
    }
}

/// Encodes a partition as its boundary profile word.
pub fn to_profile(p: &Partition) -> ProfileWord {
    let mut digits = Vec::with_capacity(p.perimeter() as usize + 1);
    let mut width = 0;
    // Smallest part sits at the bottom of the diagram, so walk the parts in reverse.
    for &part in p.parts().iter().rev() {
        digits.extend(std::iter::repeat_n(true, (part - width) as usize));
        digits.push(false);
        width = part;
    }
    ProfileWord::from_digits_unchecked(digits)
}

/// Decodes a profile word back to its partition.
pub fn from_profile(w: &ProfileWord) -> Partition {
    let mut parts = Vec::with_capacity(w.zeros());
    let mut width = 0u64;
    for &d in w.digits() {
        if d {
            width += 1;
        } else {
            parts.push(width);
        }
    }
    parts.reverse();
    Partition::from_sorted_unchecked(parts)
}
