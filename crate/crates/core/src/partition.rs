//! Integer partitions, used as cycle types.

use std::cmp::Ordering;
use std::fmt;

use crate::error::{Error, Result};

/// A partition: a weakly decreasing list of positive parts. The empty
/// partition is allowed and has weight zero.
///
/// Partitions order by weight first, then lexicographically by parts, so
/// `[] < [3] < [4] < [3,3] < [4,2] < [6]`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Partition(Vec<usize>);

impl Partition {
    /// Sorts `parts` into non-increasing order. Zero parts are rejected.
    pub fn new(mut parts: Vec<usize>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(Error::arg("partition parts must be positive"));
        }
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Ok(Partition(parts))
    }

    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn weight(&self) -> usize {
        self.0.iter().sum()
    }

    /// Number of parts.
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

impl Ord for Partition {
    fn cmp(&self, other: &Self) -> Ordering {
        self.weight()
            .cmp(&other.weight())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Partition {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (i, p) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{p}")?;
        }
        f.write_str("]")
    }
}

/// All partitions of weight at most `max_weight` whose parts are all at
/// least `min_part`, in ascending [`Partition`] order.
pub fn partitions_up_to(max_weight: usize, min_part: usize) -> Vec<Partition> {
    fn extend(rest: usize, largest: usize, min_part: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if rest == 0 {
            out.push(Partition(cur.clone()));
            return;
        }
        for part in (min_part..=largest.min(rest)).rev() {
            cur.push(part);
            extend(rest - part, part, min_part, cur, out);
            cur.pop();
        }
    }
    let min_part = min_part.max(1);
    let mut out = Vec::new();
    for w in 0..=max_weight {
        extend(w, w, min_part, &mut Vec::new(), &mut out);
    }
    out.sort();
    out
}
