use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::perm::{all_d_cycles, classify_3cycle_case, mu, CaseTag, Partition, Permutation};

use super::SupportPartition;

/// Tuples examined by default before the enumerator refuses.
pub const DEFAULT_ENUMERATION_BUDGET: u128 = 20_000_000;

/// Whether `⟨δ_1, …, δ_k⟩` acts transitively on `{1, …, n}`.
pub fn is_transitive(n: usize, tuple: &[Permutation]) -> bool {
    let mut blocks = SupportPartition::discrete(n);
    for delta in tuple {
        blocks = blocks.merge(&delta.support());
    }
    blocks.is_transitive()
}

/// Every transitive `k`-tuple of `d`-cycles with `δ_1 ⋯ δ_k σ_0 = 1`, found
/// by trying all `|d-cycles|^k` tuples.
pub fn enumerate_factorizations(
    n: usize,
    d: usize,
    k: usize,
    alpha: &Partition,
    budget: u128,
) -> Result<Vec<Vec<Permutation>>> {
    enumerate_factorizations_with(n, d, k, alpha, true, budget)
}

/// As [`enumerate_factorizations`], optionally without the transitivity filter.
pub fn enumerate_factorizations_with(
    n: usize,
    d: usize,
    k: usize,
    alpha: &Partition,
    transitive: bool,
    budget: u128,
) -> Result<Vec<Vec<Permutation>>> {
    if alpha.weight() != n {
        return Err(Error::InvalidPartition(format!(
            "({alpha}) is not a partition of n={n}"
        )));
    }
    let cycles = all_d_cycles(n, d);
    let needed = (cycles.len() as u128)
        .checked_pow(k as u32)
        .unwrap_or(u128::MAX);
    if needed > budget {
        return Err(Error::BudgetExceeded { needed, budget });
    }
    let target = Permutation::canonical(alpha).inverse();
    let mut out = Vec::new();
    let mut stack = Vec::with_capacity(k);
    walk(
        &cycles,
        k,
        &Permutation::identity(n),
        &target,
        transitive,
        &mut stack,
        &mut out,
    );
    Ok(out)
}

fn walk(
    cycles: &[Permutation],
    remaining: usize,
    product: &Permutation,
    target: &Permutation,
    transitive: bool,
    stack: &mut Vec<Permutation>,
    out: &mut Vec<Vec<Permutation>>,
) {
    if remaining == 0 {
        if product == target && (!transitive || is_transitive(product.degree(), stack)) {
            out.push(stack.clone());
        }
        return;
    }
    for delta in cycles {
        let next = product.compose_unchecked(delta);
        stack.push(delta.clone());
        walk(cycles, remaining - 1, &next, target, transitive, stack, out);
        stack.pop();
    }
}

/// Counts of `(σ, δ_1)` over minimal transitive 3-cycle factorizations,
/// bucketed by the case of `σ` relative to `δ_1⁻¹` (the 3-cycle taking `σ`
/// to `σ' = δ_2 ⋯ δ_k`).
///
/// In that frame Case 3 means `δ_1` joined three cycles lying in three
/// different components of `⟨δ_2, …, δ_k⟩` (leading type 1), Case 2 joins
/// one cycle and cuts another across two components (type 2), Case 1 cuts
/// one cycle into three inside a single component (type 3), and Case 4 is
/// impossible for minimal factorizations.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct CaseHistogram {
    pub counts: [u64; 4],
}

impl CaseHistogram {
    pub fn case(&self, tag: CaseTag) -> u64 {
        self.counts[tag.index()]
    }

    pub fn total(&self) -> u64 {
        self.counts.iter().sum()
    }

    /// `|Ã³_i(α)|` for the fixed representative, `i ∈ {1, 2, 3}`.
    pub fn leading_type(&self, i: usize) -> u64 {
        match i {
            1 => self.case(CaseTag::Case3),
            2 => self.case(CaseTag::Case2),
            3 => self.case(CaseTag::Case1),
            _ => panic!("leading types are 1, 2, 3"),
        }
    }
}

/// Histogram of leading cases over minimal transitive 3-cycle factorizations.
///
/// Every tuple must consist of 3-cycles, be transitive, and have length
/// `μ³` of its product's type.
pub fn classify_leading_case(tuples: &[Vec<Permutation>]) -> Result<CaseHistogram> {
    let mut hist = CaseHistogram::default();
    for tuple in tuples {
        let Some(first) = tuple.first() else {
            return Err(Error::NotMinimal("empty tuple has no leading factor".into()));
        };
        let n = first.degree();
        if let Some(bad) = tuple.iter().find(|t| !t.is_cycle_of_length(3)) {
            return Err(Error::NotThreeCycle(bad.to_string()));
        }
        let sigma = tuple[1..]
            .iter()
            .try_fold(first.clone(), |acc, t| acc.compose(t))?;
        let alpha = sigma.cycle_type();
        if mu(3, &alpha).as_usize() != Some(tuple.len()) {
            return Err(Error::NotMinimal(format!(
                "{} factors for type ({alpha}), minimal length is {}",
                tuple.len(),
                mu(3, &alpha)
            )));
        }
        if !is_transitive(n, tuple) {
            return Err(Error::NotMinimal("factors are not transitive".into()));
        }
        let tag = classify_3cycle_case(&first.inverse(), &sigma)?;
        hist.counts[tag.index()] += 1;
    }
    Ok(hist)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn inverse_pairs_in_s3() {
        let tuples =
            enumerate_factorizations(3, 3, 2, &Partition::ones(3), DEFAULT_ENUMERATION_BUDGET)
                .unwrap();
        assert_eq!(tuples.len(), 2);
        for t in &tuples {
            assert_eq!(t[1], t[0].inverse());
        }
    }

    #[test]
    fn transposition_pairs_for_three_cycle() {
        let tuples =
            enumerate_factorizations(3, 2, 2, &p(&[3]), DEFAULT_ENUMERATION_BUDGET).unwrap();
        assert_eq!(tuples.len(), 3);
    }

    #[test]
    fn budget_is_enforced() {
        let err = enumerate_factorizations(6, 3, 5, &Partition::ones(6), 1000).unwrap_err();
        assert!(matches!(err, Error::BudgetExceeded { .. }));
    }

    #[test]
    fn single_three_cycle_is_type_one() {
        let tuples =
            enumerate_factorizations(3, 3, 1, &p(&[3]), DEFAULT_ENUMERATION_BUDGET).unwrap();
        assert_eq!(tuples.len(), 1);
        let hist = classify_leading_case(&tuples).unwrap();
        assert_eq!(hist.leading_type(1), 1);
        assert_eq!(hist.total(), 1);
    }

    #[test]
    fn identity_type_has_no_case_four() {
        let tuples =
            enumerate_factorizations(3, 3, 2, &Partition::ones(3), DEFAULT_ENUMERATION_BUDGET)
                .unwrap();
        let hist = classify_leading_case(&tuples).unwrap();
        assert_eq!(hist.case(CaseTag::Case4), 0);
        assert_eq!(hist.total(), 2);
    }

    #[test]
    fn rejects_non_minimal_tuples() {
        // four 3-cycles multiplying to a 3-cycle in S_3 is not minimal
        let tuples =
            enumerate_factorizations(3, 3, 4, &p(&[3]), DEFAULT_ENUMERATION_BUDGET).unwrap();
        assert!(!tuples.is_empty());
        assert!(matches!(
            classify_leading_case(&tuples),
            Err(Error::NotMinimal(_))
        ));
    }
}
