//! Permutations of `{1, …, n}`, integer partitions, conjugacy classes, and
//! the 3-cycle case calculus.

mod cases;
mod partition;
mod permutation;

pub use cases::{
    classify_3cycle_case, classify_labels, dist, minimal_3cycle_chain, three_cycle_labels, CaseTag,
};
pub use partition::Partition;
pub use permutation::Permutation;

use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_rational::{BigRational, Ratio};
use num_traits::{One, ToPrimitive};

/// `n!` as a big integer.
pub fn factorial(n: usize) -> BigUint {
    (2..=n).fold(BigUint::one(), |acc, k| acc * BigUint::from(k))
}

/// Number of permutations of cycle type `alpha`: `n! / ∏_r r^{m_r} m_r!`.
pub fn class_size(alpha: &Partition) -> BigUint {
    let mut centralizer = BigUint::one();
    for (r, m) in alpha.multiplicities() {
        centralizer *= BigUint::from(r).pow(m as u32) * factorial(m);
    }
    factorial(alpha.weight()) / centralizer
}

/// Every `d`-cycle of `S_n`, each exactly once. Empty when `d > n` or `d < 2`.
///
/// There are `C(n, d)·(d−1)!` of them.
pub fn all_d_cycles(n: usize, d: usize) -> Vec<Permutation> {
    let mut out = Vec::new();
    if d < 2 || d > n {
        return out;
    }
    let mut subset = Vec::with_capacity(d);
    for_each_subset(n, d, 0, &mut subset, &mut |support| {
        // fix the smallest point first, order the rest every way
        let first = support[0];
        let mut rest = support[1..].to_vec();
        for_each_permutation(&mut rest, 0, &mut |order| {
            let mut images: Vec<usize> = (0..n).collect();
            let mut prev = first;
            for &x in order {
                images[prev] = x;
                prev = x;
            }
            images[prev] = first;
            out.push(Permutation::from_images0(images));
        });
    });
    out
}

/// All `n!` permutations of `S_n`, for brute-force checks.
pub fn all_permutations(n: usize) -> Vec<Permutation> {
    let mut out = Vec::new();
    let mut items: Vec<usize> = (0..n).collect();
    for_each_permutation(&mut items, 0, &mut |order| {
        out.push(Permutation::from_images0(order.to_vec()));
    });
    out.sort();
    out
}

fn for_each_subset(
    n: usize,
    k: usize,
    start: usize,
    current: &mut Vec<usize>,
    f: &mut dyn FnMut(&[usize]),
) {
    if current.len() == k {
        f(current);
        return;
    }
    for x in start..n {
        if n - x < k - current.len() {
            break;
        }
        current.push(x);
        for_each_subset(n, k, x + 1, current, f);
        current.pop();
    }
}

fn for_each_permutation(items: &mut [usize], k: usize, f: &mut dyn FnMut(&[usize])) {
    if k == items.len() {
        f(items);
        return;
    }
    for i in k..items.len() {
        items.swap(k, i);
        for_each_permutation(items, k + 1, f);
        items.swap(k, i);
    }
}

/// The minimal-length function `μ^d(α) = (n + l − 2)/(d − 1)`, extended to
/// every partition as an exact rational.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct Mu {
    value: Ratio<i64>,
}

impl Mu {
    pub fn value(&self) -> Ratio<i64> {
        self.value
    }

    /// True iff the value is a nonnegative integer. For `d = 3` this is the
    /// same as `n − l` being even, i.e. type `α` lying in the alternating group.
    pub fn is_admissible(&self) -> bool {
        self.value.is_integer() && *self.value.numer() >= 0
    }

    /// The integer value, when admissible.
    pub fn as_usize(&self) -> Option<usize> {
        if self.is_admissible() {
            self.value.to_integer().to_usize()
        } else {
            None
        }
    }

    pub fn to_big(&self) -> BigRational {
        BigRational::new(BigInt::from(*self.value.numer()), BigInt::from(*self.value.denom()))
    }
}

impl fmt::Display for Mu {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.value)
    }
}

impl fmt::Debug for Mu {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Mu({})", self.value)
    }
}

/// `μ^d(α) = (|α| + l(α) − 2)/(d − 1)`. Panics if `d < 2`.
pub fn mu(d: usize, alpha: &Partition) -> Mu {
    assert!(d >= 2, "mu needs d >= 2");
    let n = alpha.weight() as i64;
    let l = alpha.len() as i64;
    Mu {
        value: Ratio::new(n + l - 2, d as i64 - 1),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn class_sizes_against_enumeration() {
        let s3 = all_permutations(3);
        let count = |alpha: &Partition| s3.iter().filter(|s| &s.cycle_type() == alpha).count();
        assert_eq!(class_size(&p(&[2, 1])), BigUint::from(3u32));
        assert_eq!(count(&p(&[2, 1])), 3);
        assert_eq!(class_size(&p(&[3])), BigUint::from(2u32));
        assert_eq!(count(&p(&[3])), 2);
        assert_eq!(class_size(&Partition::ones(6)), BigUint::one());
    }

    #[test]
    fn class_sizes_sum_to_factorial() {
        for n in 1..=9 {
            let total: BigUint = Partition::all(n).iter().map(class_size).sum();
            assert_eq!(total, factorial(n), "n = {n}");
        }
    }

    #[test]
    fn d_cycle_counts() {
        assert_eq!(all_d_cycles(3, 3).len(), 2);
        assert_eq!(all_d_cycles(4, 3).len(), 8);
        assert_eq!(all_d_cycles(2, 2).len(), 1);
        assert!(all_d_cycles(3, 4).is_empty());
        // cross-check by filtering S_n
        for n in 2..=6 {
            for d in 2..=n {
                let filtered: Vec<Permutation> = all_permutations(n)
                    .into_iter()
                    .filter(|s| s.is_cycle_of_length(d))
                    .collect();
                let mut listed = all_d_cycles(n, d);
                listed.sort();
                assert_eq!(listed, filtered, "n={n} d={d}");
            }
        }
    }

    #[test]
    fn mu_values() {
        assert_eq!(mu(2, &p(&[3, 1])).as_usize(), Some(4));
        let m = mu(3, &p(&[3]));
        assert!(m.is_admissible());
        assert_eq!(m.as_usize(), Some(1));
        let m = mu(3, &p(&[2, 1]));
        assert!(!m.is_admissible());
        assert_eq!(m.value(), Ratio::new(3, 2));
        assert_eq!(mu(4, &p(&[4])).as_usize(), Some(1));
    }

    #[test]
    fn mu3_admissibility_is_parity() {
        for alpha in Partition::all_up_to(10) {
            let n = alpha.weight();
            let l = alpha.len();
            let even = (n - l) % 2 == 0;
            assert_eq!(mu(3, &alpha).is_admissible(), even, "{alpha:?}");
            assert_eq!(Permutation::canonical(&alpha).is_even(), even);
        }
    }
}
