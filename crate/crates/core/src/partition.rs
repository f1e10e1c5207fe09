//! Integer partitions σ = (a_1 ≥ a_2 ≥ … ≥ a_s) of the edge size r.

use std::fmt;
use std::str::FromStr;

use num_integer::Integer;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PartitionError {
    #[error("partition is empty")]
    Empty,
    #[error("partition parts must be positive, got {0}")]
    NonPositivePart(i64),
    #[error("invalid partition token {0:?}")]
    InvalidToken(String),
}

/// A partition of `r`, stored with parts sorted non-increasing.
///
/// Input order is not significant: `Partition::new(vec![1, 2])` and
/// `Partition::new(vec![2, 1])` are equal.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    pub fn new(mut parts: Vec<usize>) -> Result<Self, PartitionError> {
        if parts.is_empty() {
            return Err(PartitionError::Empty);
        }
        if parts.contains(&0) {
            return Err(PartitionError::NonPositivePart(0));
        }
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Ok(Partition { parts })
    }

    /// Parses comma-separated positive integers, e.g. `"2,1"`.
    pub fn parse(text: &str) -> Result<Self, PartitionError> {
        let text = text.trim();
        if text.is_empty() {
            return Err(PartitionError::Empty);
        }
        let mut parts = Vec::new();
        for token in text.split(',') {
            let token = token.trim();
            let value: i64 = token
                .parse()
                .map_err(|_| PartitionError::InvalidToken(token.to_string()))?;
            if value <= 0 {
                return Err(PartitionError::NonPositivePart(value));
            }
            parts.push(value as usize);
        }
        Partition::new(parts)
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// The uniformity r = Σ a_i.
    pub fn r(&self) -> usize {
        self.parts.iter().sum()
    }

    /// Number of parts s.
    pub fn s(&self) -> usize {
        self.parts.len()
    }

    /// Largest part Δ.
    pub fn delta_max(&self) -> usize {
        self.parts[0]
    }

    /// Smallest part δ.
    pub fn delta_min(&self) -> usize {
        self.parts[self.parts.len() - 1]
    }

    pub fn gcd(&self) -> usize {
        self.parts.iter().fold(0, |g, &a| g.gcd(&a))
    }

    pub fn is_rectangular(&self) -> bool {
        self.delta_max() == self.delta_min()
    }

    pub fn is_square(&self) -> bool {
        self.is_rectangular() && self.delta_max() == self.s()
    }

    /// Sum of the first `p` parts.
    pub fn prefix_sum(&self, p: usize) -> usize {
        self.parts[..p].iter().sum()
    }

    /// Row offset of part `i` within a block: a_0 + … + a_{i-1}.
    pub(crate) fn offset(&self, i: usize) -> usize {
        self.prefix_sum(i)
    }

    /// Multiplicities of the distinct part sizes, largest size first.
    pub fn multiplicities(&self) -> Vec<(usize, usize)> {
        let mut out: Vec<(usize, usize)> = Vec::new();
        for &a in &self.parts {
            match out.last_mut() {
                Some((size, count)) if *size == a => *count += 1,
                _ => out.push((a, 1)),
            }
        }
        out
    }

    /// Every partition of `r`, each listed once, in reverse lexicographic order.
    pub fn all_of(r: usize) -> Vec<Partition> {
        fn rec(remaining: usize, max: usize, current: &mut Vec<usize>, out: &mut Vec<Partition>) {
            if remaining == 0 {
                out.push(Partition {
                    parts: current.clone(),
                });
                return;
            }
            for a in (1..=max.min(remaining)).rev() {
                current.push(a);
                rec(remaining - a, a, current, out);
                current.pop();
            }
        }
        let mut out = Vec::new();
        if r > 0 {
            rec(r, r, &mut Vec::new(), &mut out);
        }
        out
    }
}

impl FromStr for Partition {
    type Err = PartitionError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Partition::parse(s)
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let joined: Vec<String> = self.parts.iter().map(|a| a.to_string()).collect();
        write!(f, "({})", joined.join(","))
    }
}
