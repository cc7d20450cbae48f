use std::fmt;
use std::ops::Mul;

use crate::error::{Error, Result};

use super::Partition;

/// A permutation of the ground set `{1, …, n}`.
///
/// Composition follows `(p ∘ q)(x) = p(q(x))`: the right factor acts first.
/// With this convention `(3 2 1) ∘ (1 2 4)(3 5 6) = (1)(2 4 3 5 6)`, and a
/// factorization `δ_1 ⋯ δ_k = σ` means `σ(x) = δ_1(δ_2(⋯ δ_k(x)))`.
///
/// Points are 1-based in every public method.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    // 0-based images
    images: Vec<usize>,
}

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Permutation {
            images: (0..n).collect(),
        }
    }

    /// Builds from 1-based images: `images[x - 1] = σ(x)`.
    pub fn from_images(images: &[usize]) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        let mut zero_based = Vec::with_capacity(n);
        for &y in images {
            if y == 0 || y > n || seen[y - 1] {
                return Err(Error::InvalidPermutation(format!(
                    "{images:?} is not a bijection of 1..={n}"
                )));
            }
            seen[y - 1] = true;
            zero_based.push(y - 1);
        }
        Ok(Permutation { images: zero_based })
    }

    /// Builds from 1-based cycles; omitted points are fixed.
    pub fn from_cycles(n: usize, cycles: &[Vec<usize>]) -> Result<Self> {
        let mut images: Vec<usize> = (0..n).collect();
        let mut used = vec![false; n];
        for cycle in cycles {
            for &x in cycle {
                if x == 0 || x > n {
                    return Err(Error::InvalidPermutation(format!(
                        "point {x} outside 1..={n}"
                    )));
                }
                if used[x - 1] {
                    return Err(Error::InvalidPermutation(format!(
                        "point {x} appears twice"
                    )));
                }
                used[x - 1] = true;
            }
            for (i, &x) in cycle.iter().enumerate() {
                let y = cycle[(i + 1) % cycle.len()];
                images[x - 1] = y - 1;
            }
        }
        Ok(Permutation { images })
    }

    /// Parses cycle notation such as `(1 2 4)(3 5 6)`. Fixed points may be
    /// omitted; `n` defaults to the largest point mentioned.
    pub fn parse(text: &str, n: Option<usize>) -> Result<Self> {
        let mut cycles = Vec::new();
        let mut rest = text.trim();
        while !rest.is_empty() {
            let open = rest
                .strip_prefix('(')
                .ok_or_else(|| Error::InvalidPermutation(format!("expected `(` in `{text}`")))?;
            let close = open
                .find(')')
                .ok_or_else(|| Error::InvalidPermutation(format!("unclosed cycle in `{text}`")))?;
            let body = &open[..close];
            let cycle = body
                .split(|c: char| c.is_whitespace() || c == ',')
                .filter(|t| !t.is_empty())
                .map(|t| {
                    t.parse::<usize>().map_err(|_| {
                        Error::InvalidPermutation(format!("bad point `{t}` in `{text}`"))
                    })
                })
                .collect::<Result<Vec<_>>>()?;
            cycles.push(cycle);
            rest = open[close + 1..].trim_start();
        }
        let max_point = cycles.iter().flatten().copied().max().unwrap_or(0);
        let n = n.unwrap_or(max_point);
        Self::from_cycles(n, &cycles)
    }

    /// The canonical permutation of type `alpha`: `(1 … α_1)(α_1+1 … α_1+α_2)⋯`.
    pub fn canonical(alpha: &Partition) -> Self {
        let n = alpha.weight();
        let mut images = Vec::with_capacity(n);
        let mut start = 0;
        for &len in alpha.parts() {
            for i in 0..len {
                images.push(start + (i + 1) % len);
            }
            start += len;
        }
        Permutation { images }
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    /// `σ(x)` for 1-based `x`.
    pub fn apply(&self, x: usize) -> usize {
        self.images[x - 1] + 1
    }

    pub(crate) fn from_images0(images: Vec<usize>) -> Self {
        Permutation { images }
    }

    /// 1-based image list.
    pub fn images(&self) -> Vec<usize> {
        self.images.iter().map(|&y| y + 1).collect()
    }

    /// `self ∘ other`, i.e. `x ↦ self(other(x))`.
    pub fn compose(&self, other: &Permutation) -> Result<Permutation> {
        if self.degree() != other.degree() {
            return Err(Error::DegreeMismatch {
                left: self.degree(),
                right: other.degree(),
            });
        }
        Ok(self.compose_unchecked(other))
    }

    pub(crate) fn compose_unchecked(&self, other: &Permutation) -> Permutation {
        Permutation {
            images: other.images.iter().map(|&y| self.images[y]).collect(),
        }
    }

    pub fn inverse(&self) -> Permutation {
        let mut images = vec![0; self.degree()];
        for (x, &y) in self.images.iter().enumerate() {
            images[y] = x;
        }
        Permutation { images }
    }

    /// `g ∘ self ∘ g⁻¹`.
    pub fn conjugate_by(&self, g: &Permutation) -> Result<Permutation> {
        g.compose(self)?.compose(&g.inverse())
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(x, &y)| x == y)
    }

    /// Points moved by the permutation, ascending and 1-based.
    pub fn support(&self) -> Vec<usize> {
        self.images
            .iter()
            .enumerate()
            .filter(|(x, y)| x != *y)
            .map(|(x, _)| x + 1)
            .collect()
    }

    /// Disjoint cycles including fixed points, each starting at its smallest
    /// point, sorted by that point. 1-based.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        self.cycles0()
            .into_iter()
            .map(|c| c.into_iter().map(|x| x + 1).collect())
            .collect()
    }

    pub(crate) fn cycles0(&self) -> Vec<Vec<usize>> {
        let n = self.degree();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut cycle = Vec::new();
            let mut x = start;
            while !seen[x] {
                seen[x] = true;
                cycle.push(x);
                x = self.images[x];
            }
            out.push(cycle);
        }
        out
    }

    /// Cycle lengths, fixed points included, as a partition of `n`.
    pub fn cycle_type(&self) -> Partition {
        let n = self.degree();
        let mut seen = vec![false; n];
        let mut lengths = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut len = 0;
            let mut x = start;
            while !seen[x] {
                seen[x] = true;
                len += 1;
                x = self.images[x];
            }
            lengths.push(len);
        }
        lengths.sort_unstable_by(|a, b| b.cmp(a));
        Partition::from_sorted_unchecked(lengths)
    }

    /// Number of disjoint cycles, fixed points included.
    pub fn num_cycles(&self) -> usize {
        self.cycle_type().len()
    }

    /// True iff this is a single `d`-cycle with all other points fixed.
    pub fn is_cycle_of_length(&self, d: usize) -> bool {
        let n = self.degree();
        let t = self.cycle_type();
        if d == 1 {
            return self.is_identity();
        }
        t.parts().first() == Some(&d) && t.len() == n - d + 1
    }

    /// Whether the permutation is even.
    pub fn is_even(&self) -> bool {
        (self.degree() - self.num_cycles()) % 2 == 0
    }
}

impl Mul for &Permutation {
    type Output = Permutation;

    /// Panics on degree mismatch; use [`Permutation::compose`] to handle it.
    fn mul(self, rhs: &Permutation) -> Permutation {
        self.compose(rhs).expect("degree mismatch in permutation product")
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for cycle in self.cycles() {
            f.write_str("(")?;
            for (i, x) in cycle.iter().enumerate() {
                if i > 0 {
                    f.write_str(" ")?;
                }
                write!(f, "{x}")?;
            }
            f.write_str(")")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}
