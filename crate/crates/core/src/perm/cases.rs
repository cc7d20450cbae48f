//! How a 3-cycle `ω = (j3 j2 j1)` acts on the cycles of a permutation `σ`.
//!
//! Writing `ω = (j3 j2 j1)` (so `j3 ↦ j2 ↦ j1 ↦ j3`), every `σ` falls into
//! exactly one of four shapes relative to `ω`:
//!
//! | case | `σ`                       | `ωσ`                      | cycles of `ωσ` |
//! |------|---------------------------|---------------------------|----------------|
//! | 1    | `(j1…)(j2…)(j3…)…`        | `(j3…j2…j1…)…`            | `l − 2`        |
//! | 2    | `(j1…j2…)(j3…)…`          | `(j1…)(j2…j3…)…`          | `l`            |
//! | 3    | `(j1…j2…j3…)…`            | `(j1…)(j2…)(j3…)…`        | `l + 2`        |
//! | 4    | `(j1…j3…j2…)…`            | `(j1…j2…j3…)…`            | `l`            |
//!
//! Case 2 absorbs every placement with exactly two of the points sharing a
//! cycle: the three ways of writing `ω` relabel the points cyclically.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

use super::Permutation;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum CaseTag {
    Case1,
    Case2,
    Case3,
    Case4,
}

impl CaseTag {
    pub const ALL: [CaseTag; 4] = [CaseTag::Case1, CaseTag::Case2, CaseTag::Case3, CaseTag::Case4];

    /// Change in the number of disjoint cycles going from `σ` to `ωσ`.
    pub fn cycle_count_delta(self) -> i64 {
        match self {
            CaseTag::Case1 => -2,
            CaseTag::Case2 => 0,
            CaseTag::Case3 => 2,
            CaseTag::Case4 => 0,
        }
    }

    pub fn index(self) -> usize {
        match self {
            CaseTag::Case1 => 0,
            CaseTag::Case2 => 1,
            CaseTag::Case3 => 2,
            CaseTag::Case4 => 3,
        }
    }
}

impl fmt::Display for CaseTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Case{}", self.index() + 1)
    }
}

/// Labels `(j1, j2, j3)` of a 3-cycle written as `(j3 j2 j1)`, with `j1` the
/// smallest moved point.
pub fn three_cycle_labels(omega: &Permutation) -> Result<[usize; 3]> {
    if !omega.is_cycle_of_length(3) {
        return Err(Error::NotThreeCycle(omega.to_string()));
    }
    let j1 = omega.support()[0];
    let j3 = omega.apply(j1);
    let j2 = omega.apply(j3);
    Ok([j1, j2, j3])
}

/// The case of `σ` relative to the 3-cycle `ω`.
pub fn classify_3cycle_case(omega: &Permutation, sigma: &Permutation) -> Result<CaseTag> {
    if omega.degree() != sigma.degree() {
        return Err(Error::DegreeMismatch {
            left: omega.degree(),
            right: sigma.degree(),
        });
    }
    let [j1, j2, j3] = three_cycle_labels(omega)?;
    Ok(classify_labels([j1, j2, j3], sigma))
}

/// Classifies `σ` against `ω = (j3 j2 j1)` given explicit labels.
///
/// Any of the three cyclic relabelings `(j1, j2, j3) → (j3, j1, j2)` of the
/// same `ω` gives the same answer.
pub fn classify_labels(labels: [usize; 3], sigma: &Permutation) -> CaseTag {
    let [j1, j2, j3] = labels;
    let cycle_of = cycle_ids(sigma);
    let (c1, c2, c3) = (cycle_of[j1 - 1], cycle_of[j2 - 1], cycle_of[j3 - 1]);
    if c1 != c2 && c2 != c3 && c1 != c3 {
        return CaseTag::Case1;
    }
    if !(c1 == c2 && c2 == c3) {
        return CaseTag::Case2;
    }
    // one cycle: which of j2, j3 follows j1 first
    let mut x = sigma.apply(j1);
    loop {
        if x == j2 {
            return CaseTag::Case3;
        }
        if x == j3 {
            return CaseTag::Case4;
        }
        x = sigma.apply(x);
    }
}

fn cycle_ids(sigma: &Permutation) -> Vec<usize> {
    let mut ids = vec![usize::MAX; sigma.degree()];
    for (id, cycle) in sigma.cycles0().iter().enumerate() {
        for &x in cycle {
            ids[x] = id;
        }
    }
    ids
}

/// The smallest `l ≥ 1` with `σ^l(j)` in `set`.
pub fn dist(j: usize, sigma: &Permutation, set: [usize; 3]) -> Result<usize> {
    let n = sigma.degree();
    if !set.contains(&j) {
        return Err(Error::InvalidPoint {
            point: j,
            reason: "must belong to the three-point set",
        });
    }
    if set.iter().any(|&x| x == 0 || x > n) {
        return Err(Error::InvalidPoint {
            point: j,
            reason: "set points must lie in 1..=n",
        });
    }
    let mut x = sigma.apply(j);
    let mut steps = 1;
    while !set.contains(&x) {
        x = sigma.apply(x);
        steps += 1;
    }
    Ok(steps)
}

/// An explicit shortest transitive 3-cycle factorization.
///
/// For odd `n` returns `(n−1)/2` 3-cycles whose product `δ_1 ⋯ δ_m` is
/// `(n n−1 … 2 1)`; for even `n`, `n/2` 3-cycles with product
/// `(n n−1)(n−2 … 2 1)`.
pub fn minimal_3cycle_chain(n: usize) -> Result<Vec<Permutation>> {
    if n < 3 {
        return Err(Error::ChainTooShort(n));
    }
    let tri = |a: usize, b: usize, c: usize| Permutation::from_cycles(n, &[vec![a, b, c]]);
    if n % 2 == 1 {
        let m = (n - 1) / 2;
        // δ_{m−i+1} = (2i+1 2i 2i−1), listed here as δ_1, …, δ_m
        (1..=m).rev().map(|i| tri(2 * i + 1, 2 * i, 2 * i - 1)).collect()
    } else {
        let m = n / 2;
        let mut chain = vec![tri(n, n - 1, n - 2)?];
        // δ_{m−i+2} = (2i−1 2i−2 2i−3) for 2 ≤ i ≤ m
        for i in (2..=m).rev() {
            chain.push(tri(2 * i - 1, 2 * i - 2, 2 * i - 3)?);
        }
        Ok(chain)
    }
}
