use num_bigint::BigInt;
use num_rational::BigRational;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::factorize::{classify_leading_case, enumerate_factorizations, CaseHistogram};
use crate::perm::{class_size, factorial, mu, CaseTag, Partition};
use crate::symfunc::{du_at_one, int, PSeries};
use crate::wop::{first_derivatives, product_term};

use super::{generating_series, sum_all, third, triples, Residual};

/// Leading-case statistics for one cycle type.
#[derive(Clone, Debug, Serialize)]
pub struct ComponentRow {
    pub alpha: Partition,
    pub k: usize,
    pub histogram: CaseHistogram,
}

/// The split of `∂F̃_3/∂u` by the type of the leading factor, compared with
/// the three component equations.
#[derive(Clone, Debug)]
pub struct ComponentReport {
    pub truncation: usize,
    pub rows: Vec<ComponentRow>,
    /// Cycle types skipped because enumerating them would exceed the budget.
    pub skipped: Vec<Partition>,
    pub case4_total: u64,
    pub eq1: Residual,
    pub eq2_literal: Residual,
    pub eq2_index_consistent: Residual,
    pub eq3: Residual,
    pub sum: Residual,
}

impl ComponentReport {
    /// Case 4 never seen, equations 1 and 3 and the sum check exact, and
    /// nothing skipped.
    pub fn pass(&self) -> bool {
        self.case4_total == 0
            && self.eq1.pass
            && self.eq3.pass
            && self.sum.pass
            && self.skipped.is_empty()
    }

    pub fn covered(&self) -> Vec<Partition> {
        self.rows.iter().map(|r| r.alpha.clone()).collect()
    }
}

/// Enumerates every minimal transitive 3-cycle factorization for `α ⊢ n ≤ N`,
/// buckets them by leading type, and checks the component equations.
///
/// Cycle types whose enumeration exceeds `budget` are listed in
/// [`ComponentReport::skipped`] and their monomials are left out of every
/// residual.
pub fn check_components(truncation: usize, budget: u128) -> Result<ComponentReport> {
    let n_max = truncation;
    let mut rows = Vec::new();
    let mut skipped = Vec::new();
    let mut comps = [
        PSeries::zero(n_max),
        PSeries::zero(n_max),
        PSeries::zero(n_max),
    ];
    for n in 1..=n_max {
        for alpha in Partition::all(n) {
            let Some(k) = mu(3, &alpha).as_usize() else {
                continue;
            };
            if k == 0 {
                continue;
            }
            let tuples = match enumerate_factorizations(n, 3, k, &alpha, budget) {
                Ok(t) => t,
                Err(Error::BudgetExceeded { .. }) => {
                    skipped.push(alpha);
                    continue;
                }
                Err(e) => return Err(e),
            };
            let histogram = classify_leading_case(&tuples)?;
            let weight = BigRational::new(
                BigInt::from(class_size(&alpha)),
                BigInt::from(factorial(n) * factorial(k - 1)),
            );
            for (i, comp) in comps.iter_mut().enumerate() {
                let count = histogram.leading_type(i + 1) as usize;
                comp.add_term(alpha.clone(), &weight * int(count));
            }
            rows.push(ComponentRow {
                alpha,
                k,
                histogram,
            });
        }
    }
    let case4_total = rows.iter().map(|r| r.histogram.case(CaseTag::Case4)).sum();

    let f = generating_series(3, truncation)?;
    let df = first_derivatives(&f);
    let n = truncation;
    let mut rhs1 = Vec::new();
    let mut rhs2_lit = Vec::new();
    let mut rhs2_alt = Vec::new();
    let mut rhs3 = Vec::new();
    for (i, j, k) in triples(n) {
        let s = i + j + k;
        rhs1.push(product_term(n, &int(i * j * k), &[s], &[&df[i], &df[j], &df[k]]));
        rhs2_lit.push(product_term(
            n,
            &int(i * (j + k)),
            &[i + k, j],
            &[&df[i], &df[j + k]],
        ));
        rhs2_alt.push(product_term(
            n,
            &int(i * (j + k)),
            &[i, j + k],
            &[&df[i], &df[j + k]],
        ));
        rhs3.push(product_term(n, &int(s), &[i, j, k], &[&df[s]]));
    }
    let rhs1 = sum_all(n, rhs1).scale(&third());
    let rhs2_lit = sum_all(n, rhs2_lit);
    let rhs2_alt = sum_all(n, rhs2_alt);
    let rhs3 = sum_all(n, rhs3).scale(&third());

    let drop_skipped = |s: PSeries| -> PSeries {
        s.map_coeffs(|a, c| {
            if skipped.contains(a) {
                BigRational::from_integer(0.into())
            } else {
                c.clone()
            }
        })
    };
    let total = sum_all(n, comps.iter().cloned());
    let eq1 = Residual::new("components_eq1", drop_skipped(comps[0].sub(&rhs1)?), false);
    let eq2_literal = Residual::new(
        "components_eq2_literal",
        drop_skipped(comps[1].sub(&rhs2_lit)?),
        false,
    );
    let eq2_index_consistent = Residual::new(
        "components_eq2_index_consistent",
        drop_skipped(comps[1].sub(&rhs2_alt)?),
        false,
    );
    let eq3 = Residual::new("components_eq3", drop_skipped(comps[2].sub(&rhs3)?), false);
    let sum = Residual::new(
        "components_sum",
        drop_skipped(total.sub(&du_at_one(3, &f))?),
        false,
    );
    Ok(ComponentReport {
        truncation,
        rows,
        skipped,
        case4_total,
        eq1,
        eq2_literal,
        eq2_index_consistent,
        eq3,
        sum,
    })
}
