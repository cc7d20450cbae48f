//! Counting ordered transitive factorizations into `d`-cycles.
//!
//! `h_k^d(α)` is the number of `k`-tuples `(δ_1, …, δ_k)` of `d`-cycles with
//! `δ_1 ⋯ δ_k σ_0 = 1` for a fixed `σ_0` of type `α`, whose generated group
//! is transitive on `{1, …, n}`. `σ_0` is [`Permutation::canonical`]; the
//! count does not depend on that choice. The minimal `d`-Hurwitz number
//! `h^d(α)` is `h_k^d(α)` at the least `k` where it is nonzero.

mod dp;
mod enumerate;
mod support;

pub use dp::{FactorizationDp, OrbitKey};
pub use enumerate::{
    classify_leading_case, enumerate_factorizations, enumerate_factorizations_with,
    is_transitive, CaseHistogram, DEFAULT_ENUMERATION_BUDGET,
};
pub use support::SupportPartition;

use std::collections::BTreeMap;

use num_bigint::BigUint;
use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::perm::{mu, Partition, Permutation};

fn check_args(n: usize, d: usize, alpha: &Partition) -> Result<()> {
    if d < 2 {
        return Err(Error::UnsupportedDegree(d));
    }
    if n == 0 || alpha.weight() != n {
        return Err(Error::InvalidPartition(format!(
            "({alpha}) is not a partition of n={n}"
        )));
    }
    Ok(())
}

/// `h_k^d(α)` (with `transitive`) or the unrestricted count of `k`-tuples of
/// `d`-cycles multiplying to one fixed permutation of type `α`.
///
/// For `d > n` there are no `d`-cycles, so only `k = 0` can be nonzero.
pub fn count_factorizations(
    n: usize,
    d: usize,
    k: usize,
    alpha: &Partition,
    transitive: bool,
) -> Result<BigUint> {
    check_args(n, d, alpha)?;
    Ok(FactorizationDp::run(n, d, k).count(k, alpha, transitive))
}

/// Whether `k` `d`-cycles can have a product of type `α` at all: each
/// `d`-cycle has sign `(−1)^{d−1}`.
pub fn parity_allows(n: usize, d: usize, k: usize, alpha: &Partition) -> bool {
    (k * (d - 1)) % 2 == (n - alpha.len()) % 2
}

/// The least `k` admitting a transitive factorization and `h^d(α)` there.
///
/// Searches `k = 0 ..= n + l − 2`, an upper bound because a `d`-cycle is a
/// product of `d − 1` transpositions. Returns `None` if nothing in range works.
pub fn minimal_k(n: usize, d: usize, alpha: &Partition) -> Result<Option<(usize, BigUint)>> {
    check_args(n, d, alpha)?;
    let bound = n + alpha.len() - 2;
    let dp = FactorizationDp::run(n, d, bound);
    for k in 0..=bound {
        if !parity_allows(n, d, k, alpha) {
            continue;
        }
        let h = dp.count(k, alpha, true);
        if !h.is_zero() {
            return Ok(Some((k, h)));
        }
    }
    Ok(None)
}

/// Key of a [`CountTable`] entry.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct CountKey {
    pub n: usize,
    pub d: usize,
    pub k: usize,
    pub alpha: Partition,
    pub transitive: bool,
}

/// Exact counts `(n, d, k, α, transitive) → count` for a fixed `σ_0` of type `α`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct CountTable {
    entries: BTreeMap<CountKey, BigUint>,
}

impl CountTable {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn insert(&mut self, key: CountKey, count: BigUint) {
        self.entries.insert(key, count);
    }

    pub fn get(&self, key: &CountKey) -> Option<&BigUint> {
        self.entries.get(key)
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&CountKey, &BigUint)> {
        self.entries.iter()
    }

    /// Transitive counts at `k = μ^d(α)` for every `α ⊢ n ≤ n_max` with an
    /// integral `μ^d(α)`. One DP run per `n` serves every `α ⊢ n`.
    pub fn minimal(d: usize, n_max: usize) -> Self {
        let mut table = CountTable::new();
        for n in 1..=n_max {
            let alphas: Vec<(Partition, usize)> = Partition::all(n)
                .into_iter()
                .filter_map(|a| mu(d, &a).as_usize().map(|k| (a, k)))
                .collect();
            let k_max = alphas.iter().map(|(_, k)| *k).max().unwrap_or(0);
            let dp = FactorizationDp::run(n, d, k_max);
            for (alpha, k) in alphas {
                let count = dp.count(k, &alpha, true);
                table.insert(
                    CountKey {
                        n,
                        d,
                        k,
                        alpha,
                        transitive: true,
                    },
                    count,
                );
            }
        }
        table
    }

    /// `h^d(α)` read at `k = μ^d(α)`: `Some(0)` when `μ` is not an integer,
    /// `None` when the entry is missing.
    pub fn minimal_count(&self, d: usize, alpha: &Partition) -> Option<BigUint> {
        let Some(k) = mu(d, alpha).as_usize() else {
            return Some(BigUint::zero());
        };
        self.get(&CountKey {
            n: alpha.weight(),
            d,
            k,
            alpha: alpha.clone(),
            transitive: true,
        })
        .cloned()
    }
}

/// The fixed representative used for type `α`.
pub fn representative(alpha: &Partition) -> Permutation {
    Permutation::canonical(alpha)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn spec_counts() {
        let c = |n, d, k, a: &[usize], t| count_factorizations(n, d, k, &p(a), t).unwrap();
        assert_eq!(c(3, 2, 2, &[3], true), BigUint::from(3u32));
        assert_eq!(c(3, 3, 1, &[3], true), BigUint::from(1u32));
        assert_eq!(c(3, 3, 1, &[2, 1], true), BigUint::zero());
        assert_eq!(c(3, 3, 1, &[2, 1], false), BigUint::zero());
    }

    #[test]
    fn minimal_examples() {
        assert_eq!(
            minimal_k(3, 3, &Partition::ones(3)).unwrap(),
            Some((2, BigUint::from(2u32)))
        );
        assert_eq!(
            minimal_k(3, 2, &p(&[3])).unwrap(),
            Some((2, BigUint::from(3u32)))
        );
        assert_eq!(minimal_k(3, 3, &p(&[2, 1])).unwrap(), None);
        assert_eq!(
            minimal_k(1, 3, &p(&[1])).unwrap(),
            Some((0, BigUint::from(1u32)))
        );
    }

    #[test]
    fn argument_errors() {
        assert!(count_factorizations(3, 2, 1, &p(&[2, 1, 1]), true).is_err());
        assert!(count_factorizations(3, 1, 1, &p(&[2, 1]), true).is_err());
    }

    #[test]
    fn small_d_bigger_than_n() {
        assert_eq!(
            count_factorizations(2, 3, 0, &Partition::ones(2), false).unwrap(),
            BigUint::from(1u32)
        );
        assert_eq!(
            count_factorizations(2, 3, 0, &Partition::ones(2), true).unwrap(),
            BigUint::zero()
        );
        assert_eq!(
            count_factorizations(2, 3, 1, &Partition::ones(2), false).unwrap(),
            BigUint::zero()
        );
    }

    #[test]
    fn minimal_table_lookup() {
        let t = CountTable::minimal(3, 4);
        assert_eq!(t.minimal_count(3, &p(&[3])), Some(BigUint::from(1u32)));
        assert_eq!(t.minimal_count(3, &Partition::ones(3)), Some(BigUint::from(2u32)));
        assert_eq!(t.minimal_count(3, &p(&[2, 1])), Some(BigUint::zero()));
        assert_eq!(t.minimal_count(3, &p(&[5])), None);
    }
}
