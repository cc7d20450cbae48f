//! Shape-by-shape reconstruction of `W([d])` as a differential operator.
//!
//! A `d`-cycle `ω` multiplying `σ` touches some set of cycles of `σ`, with
//! cycle type `B`, and replaces them by cycles of type `A`. Counting, for a
//! fixed `σ_B` of type `B` on `{1, …, |B|}`, the `d`-cycles that meet every
//! cycle of `σ_B` and produce type `A` gives `N(B, A)`. Then
//!
//! `W([d]) = Σ_{B,A} c(B, A) p_A ∂^B`,  `c(B, A) = N(B, A)/|Aut(B)|`,
//!
//! where `∂^B = ∏_{b∈B} ∂/∂p_b` and `|Aut(B)| = ∏_r m_r(B)!`.

use std::collections::BTreeMap;

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::perm::{all_d_cycles, factorial, Partition, Permutation};
use crate::symfunc::{format_rational, int, PSeries};

use super::{first_derivatives, product_term};

/// `N(B, A)`, `|Aut(B)|` and `c(B, A) = N/|Aut(B)|`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LocalCoefficient {
    pub n: u64,
    pub aut: BigUint,
    pub c: BigRational,
}

/// `|Aut(B)| = ∏_r m_r(B)!`.
pub fn automorphisms(b: &Partition) -> BigUint {
    b.multiplicities()
        .into_iter()
        .map(|(_, m)| factorial(m))
        .product()
}

/// Output types of `ω·σ` over the `d`-cycles `ω` meeting every cycle of `σ`.
pub fn meeting_counts(d: usize, sigma: &Permutation) -> BTreeMap<Partition, u64> {
    let cycles = sigma.cycles();
    let mut block = vec![0usize; sigma.degree() + 1];
    for (idx, cyc) in cycles.iter().enumerate() {
        for &x in cyc {
            block[x] = idx;
        }
    }
    let mut tally = BTreeMap::new();
    let mut seen = vec![false; cycles.len()];
    for omega in all_d_cycles(sigma.degree(), d) {
        seen.iter_mut().for_each(|s| *s = false);
        for x in omega.support() {
            seen[block[x]] = true;
        }
        if seen.iter().all(|&s| s) {
            *tally
                .entry(omega.compose_unchecked(sigma).cycle_type())
                .or_default() += 1;
        }
    }
    tally
}

/// `c(B, A)` by brute force over the `d`-cycles of `S_{|B|}`.
pub fn local_coefficient(d: usize, b: &Partition, a: &Partition) -> LocalCoefficient {
    let n = if b.is_empty() || a.weight() != b.weight() {
        0
    } else {
        meeting_counts(d, &Permutation::canonical(b))
            .get(a)
            .copied()
            .unwrap_or(0)
    };
    let aut = automorphisms(b);
    let c = BigRational::new(BigInt::from(n), BigInt::from(aut.clone()));
    LocalCoefficient { n, aut, c }
}

/// One summand `c·p_A ∂^B` of `W([d])`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OperatorTerm {
    pub b: Partition,
    pub a: Partition,
    pub n: u64,
    #[serde(with = "rational_string")]
    pub c: BigRational,
    pub degree: usize,
}

mod rational_string {
    use num_rational::BigRational;
    use serde::{Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(c: &BigRational, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&crate::symfunc::format_rational(c))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<BigRational, D::Error> {
        let text = String::deserialize(d)?;
        crate::symfunc::parse_rational(&text).map_err(serde::de::Error::custom)
    }
}

/// Every nonzero `c(B, A)` with `|B| ≤ M`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OperatorTermTable {
    d: usize,
    max_weight: usize,
    terms: Vec<OperatorTerm>,
}

impl OperatorTermTable {
    pub fn build(d: usize, max_weight: usize) -> Self {
        let mut terms = Vec::new();
        for m in d.max(1)..=max_weight {
            for b in Partition::all(m) {
                if b.len() > d {
                    continue;
                }
                let aut = BigInt::from(automorphisms(&b));
                for (a, n) in meeting_counts(d, &Permutation::canonical(&b)) {
                    let degree = a.len() + b.len();
                    terms.push(OperatorTerm {
                        c: BigRational::new(BigInt::from(n), aut.clone()),
                        b: b.clone(),
                        a,
                        n,
                        degree,
                    });
                }
            }
        }
        terms.sort_by(|x, y| (&x.b, &x.a).cmp(&(&y.b, &y.a)));
        OperatorTermTable {
            d,
            max_weight,
            terms,
        }
    }

    pub fn d(&self) -> usize {
        self.d
    }

    pub fn max_weight(&self) -> usize {
        self.max_weight
    }

    /// Terms sorted by `(B, A)`.
    pub fn terms(&self) -> &[OperatorTerm] {
        &self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn get(&self, b: &Partition, a: &Partition) -> Option<&OperatorTerm> {
        self.terms
            .binary_search_by(|t| (&t.b, &t.a).cmp(&(b, a)))
            .ok()
            .map(|i| &self.terms[i])
    }

    /// Terms with a given `B`, in order of `A`.
    pub fn with_b<'a>(&'a self, b: &'a Partition) -> impl Iterator<Item = &'a OperatorTerm> {
        let start = self.terms.partition_point(|t| &t.b < b);
        self.terms[start..].iter().take_while(move |t| &t.b == b)
    }

    /// Distinct degrees `l(A) + l(B)` present, ascending.
    pub fn degrees(&self) -> Vec<usize> {
        let mut v: Vec<usize> = self.terms.iter().map(|t| t.degree).collect();
        v.sort_unstable();
        v.dedup();
        v
    }

    /// Human-readable listing, one term per line.
    pub fn describe(&self) -> String {
        self.terms
            .iter()
            .map(|t| {
                format!(
                    "B=({}) A=({}) N={} c={} degree={}",
                    t.b,
                    t.a,
                    t.n,
                    format_rational(&t.c),
                    t.degree
                )
            })
            .collect::<Vec<_>>()
            .join("\n")
    }
}

fn binomial(n: usize, k: usize) -> BigUint {
    factorial(n) / (factorial(k) * factorial(n - k))
}

/// `W([d])F` from the term table:
/// `W p_μ = Σ_{B ⊆ μ} Σ_A N(B, A)·∏_r C(m_r(μ), m_r(B)) p_{μ∖B ∪ A}`.
pub fn apply_reconstructed_linear(table: &OperatorTermTable, f: &PSeries) -> Result<PSeries> {
    let mut out = PSeries::zero(f.truncation());
    for (mu, coeff) in f.terms() {
        if mu.weight() > table.max_weight() {
            return Err(Error::TableIncomplete {
                have: table.max_weight(),
                need: mu.weight(),
            });
        }
        for b in mu.sub_multisets() {
            if b.is_empty() {
                continue;
            }
            let rest = mu.difference(&b).expect("sub-multiset");
            let choices: BigUint = b
                .multiplicities()
                .into_iter()
                .map(|(r, m)| binomial(mu.multiplicity(r), m))
                .product();
            let choices = BigRational::from_integer(BigInt::from(choices));
            for term in table.with_b(&b) {
                out.add_term(
                    rest.union(&term.a),
                    coeff * &choices * int(term.n as usize),
                );
            }
        }
    }
    Ok(out)
}

/// `H̃W([d])F`: the degree-`(d+1)` terms of the table with `∂^B` replaced by
/// `∏_{b∈B} ∂F/∂p_b`.
pub fn apply_tilde_hw(d: usize, table: &OperatorTermTable, f: &PSeries) -> Result<PSeries> {
    if table.d() != d {
        return Err(Error::UnsupportedDegree(d));
    }
    let n = f.truncation();
    if table.max_weight() < n {
        return Err(Error::TableIncomplete {
            have: table.max_weight(),
            need: n,
        });
    }
    let df = first_derivatives(f);
    let mut out = PSeries::zero(n);
    for term in table.terms().iter().filter(|t| t.degree == d + 1) {
        if term.b.weight() > n {
            continue;
        }
        let factors: Vec<&PSeries> = term.b.parts().iter().map(|&b| &df[b]).collect();
        let piece = product_term(n, &term.c, term.a.parts(), &factors);
        out = out.add(&piece)?;
    }
    Ok(out)
}
