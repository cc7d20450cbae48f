use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// An integer partition, stored with parts in weakly decreasing order.
///
/// A partition doubles as a cycle type and as the index of a power-sum
/// monomial `p_α = p_{α_1} ⋯ p_{α_l}`. The empty partition indexes the
/// constant monomial.
///
/// Partitions order by weight first and then lexicographically by parts,
/// so a `BTreeMap<Partition, _>` iterates by `(n, α)`.
#[derive(Clone, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    /// Builds a partition from parts in any order. Zero parts are rejected.
    pub fn new(mut parts: Vec<usize>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(Error::InvalidPartition(format!(
                "zero part in {parts:?}"
            )));
        }
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Ok(Partition { parts })
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    /// `(1^n)`, the cycle type of the identity.
    pub fn ones(n: usize) -> Self {
        Partition { parts: vec![1; n] }
    }

    /// The partition with the single part `m`.
    pub fn single(m: usize) -> Self {
        assert!(m > 0, "parts are positive");
        Partition { parts: vec![m] }
    }

    pub(crate) fn from_sorted_unchecked(parts: Vec<usize>) -> Self {
        debug_assert!(parts.windows(2).all(|w| w[0] >= w[1]));
        debug_assert!(!parts.contains(&0));
        Partition { parts }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// `|α|`, the number being partitioned.
    pub fn weight(&self) -> usize {
        self.parts.iter().sum()
    }

    /// `l(α)`, the number of parts.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn largest(&self) -> Option<usize> {
        self.parts.first().copied()
    }

    /// How many parts equal `r`.
    pub fn multiplicity(&self, r: usize) -> usize {
        self.parts.iter().filter(|&&p| p == r).count()
    }

    /// `(part, multiplicity)` pairs, largest part first.
    pub fn multiplicities(&self) -> Vec<(usize, usize)> {
        let mut out: Vec<(usize, usize)> = Vec::new();
        for &p in &self.parts {
            match out.last_mut() {
                Some((q, m)) if *q == p => *m += 1,
                _ => out.push((p, 1)),
            }
        }
        out
    }

    /// Removes one part equal to `r`, if present.
    pub fn without_part(&self, r: usize) -> Option<Partition> {
        let pos = self.parts.iter().position(|&p| p == r)?;
        let mut parts = self.parts.clone();
        parts.remove(pos);
        Some(Partition { parts })
    }

    /// Inserts one part `r > 0`.
    pub fn with_part(&self, r: usize) -> Partition {
        assert!(r > 0, "parts are positive");
        let pos = self.parts.partition_point(|&p| p >= r);
        let mut parts = self.parts.clone();
        parts.insert(pos, r);
        Partition { parts }
    }

    /// `α ∪ β`: all parts of both, re-sorted.
    pub fn union(&self, other: &Partition) -> Partition {
        let mut parts = Vec::with_capacity(self.len() + other.len());
        parts.extend_from_slice(&self.parts);
        parts.extend_from_slice(&other.parts);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition { parts }
    }

    /// Removes the multiset `sub` from `self`. Returns `None` unless `sub ⊆ self`.
    pub fn difference(&self, sub: &Partition) -> Option<Partition> {
        let mut rest = self.parts.clone();
        for &p in &sub.parts {
            let pos = rest.iter().position(|&q| q == p)?;
            rest.remove(pos);
        }
        Some(Partition { parts: rest })
    }

    /// All partitions of `n`, in decreasing lexicographic order starting at `(n)`.
    pub fn all(n: usize) -> Vec<Partition> {
        let mut out = Vec::new();
        let mut current = Vec::new();
        fill(n, n, &mut current, &mut out);
        out
    }

    /// All partitions of every `n` in `1..=max`, grouped by weight.
    pub fn all_up_to(max: usize) -> Vec<Partition> {
        (1..=max).flat_map(Partition::all).collect()
    }

    /// All sub-multisets of the parts, including empty and `self`.
    pub fn sub_multisets(&self) -> Vec<Partition> {
        let mults = self.multiplicities();
        let mut out = vec![Vec::new()];
        for (part, m) in mults {
            let mut next = Vec::with_capacity(out.len() * (m + 1));
            for prefix in &out {
                for take in 0..=m {
                    let mut v: Vec<usize> = prefix.clone();
                    v.extend(std::iter::repeat(part).take(take));
                    next.push(v);
                }
            }
            out = next;
        }
        out.into_iter()
            .map(Partition::from_sorted_unchecked)
            .collect()
    }
}

fn fill(rest: usize, max_part: usize, current: &mut Vec<usize>, out: &mut Vec<Partition>) {
    if rest == 0 {
        out.push(Partition {
            parts: current.clone(),
        });
        return;
    }
    for p in (1..=max_part.min(rest)).rev() {
        current.push(p);
        fill(rest - p, p, current, out);
        current.pop();
    }
}

impl Ord for Partition {
    fn cmp(&self, other: &Self) -> Ordering {
        self.weight()
            .cmp(&other.weight())
            .then_with(|| self.parts.cmp(&other.parts))
    }
}

impl PartialOrd for Partition {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Comma-separated parts, e.g. `3,1,1`. The empty partition prints as nothing.
impl fmt::Display for Partition {
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

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({self})")
    }
}

impl FromStr for Partition {
    type Err = Error;

    /// Parses comma-separated positive integers in any order.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() {
            return Err(Error::InvalidPartition("empty input".into()));
        }
        let mut parts = Vec::new();
        for token in s.split(',') {
            let token = token.trim();
            match token.parse::<usize>() {
                Ok(0) => {
                    return Err(Error::InvalidPartition(format!(
                        "parts must be positive, got `{token}`"
                    )))
                }
                Ok(p) => parts.push(p),
                Err(_) => {
                    return Err(Error::InvalidPartition(format!(
                        "not a positive integer: `{token}`"
                    )))
                }
            }
        }
        Partition::new(parts)
    }
}

impl TryFrom<Vec<usize>> for Partition {
    type Error = Error;

    fn try_from(parts: Vec<usize>) -> Result<Self> {
        Partition::new(parts)
    }
}

impl From<Partition> for Vec<usize> {
    fn from(p: Partition) -> Self {
        p.parts
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn new_sorts_descending() {
        assert_eq!(p(&[1, 3]).parts(), &[3, 1]);
        assert!(Partition::new(vec![3, 0]).is_err());
    }

    #[test]
    fn partition_counts() {
        let counts: Vec<usize> = (1..=10).map(|n| Partition::all(n).len()).collect();
        assert_eq!(counts, vec![1, 2, 3, 5, 7, 11, 15, 22, 30, 42]);
        assert_eq!(Partition::all(0), vec![Partition::empty()]);
    }

    #[test]
    fn ordering_is_by_weight_then_parts() {
        let mut v = vec![p(&[2, 1]), p(&[1, 1]), p(&[3]), p(&[1, 1, 1]), p(&[2])];
        v.sort();
        assert_eq!(v, vec![p(&[1, 1]), p(&[2]), p(&[1, 1, 1]), p(&[2, 1]), p(&[3])]);
    }

    #[test]
    fn parse_and_print() {
        assert_eq!("3,1,1".parse::<Partition>().unwrap(), p(&[3, 1, 1]));
        assert_eq!("1,3".parse::<Partition>().unwrap(), p(&[3, 1]));
        assert!("3,0".parse::<Partition>().is_err());
        assert!("3,x".parse::<Partition>().is_err());
        assert_eq!(p(&[4, 2, 2]).to_string(), "4,2,2");
    }

    #[test]
    fn part_surgery() {
        let a = p(&[3, 2, 2, 1]);
        assert_eq!(a.without_part(2), Some(p(&[3, 2, 1])));
        assert_eq!(a.without_part(4), None);
        assert_eq!(a.with_part(2), p(&[3, 2, 2, 2, 1]));
        assert_eq!(a.difference(&p(&[2, 1])), Some(p(&[3, 2])));
        assert_eq!(a.difference(&p(&[3, 3])), None);
        assert_eq!(a.multiplicities(), vec![(3, 1), (2, 2), (1, 1)]);
        assert_eq!(a.sub_multisets().len(), 2 * 3 * 2);
    }
}
