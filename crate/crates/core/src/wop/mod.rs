//! The `W([d])` operators on `ℚ[p_1, p_2, …]`.
//!
//! `W([d])` is pinned down by its action on class sums: for `g ∈ ℚS_n`,
//! `Φ(K_{1^{n−d}d}·g) = W([d])Φ(g)`, where `K_{1^{n−d}d}` is the sum of all
//! `d`-cycles of `S_n` and `Φ` sends a permutation to `p` of its cycle type.
//! That action is computed directly in [`apply_w_groupalg`]. The explicit
//! differential forms for `d = 2, 3` live in [`apply_w2_explicit`] and
//! [`apply_w3_explicit`]; the shape-by-shape term table in [`terms`]
//! reconstructs the operator for any `d`.

pub mod terms;

pub use terms::{
    apply_reconstructed_linear, apply_tilde_hw, local_coefficient, LocalCoefficient,
    OperatorTerm, OperatorTermTable,
};

use std::collections::BTreeMap;

use num_rational::BigRational;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::perm::{all_d_cycles, Partition, Permutation};
use crate::symfunc::{int, PSeries};

/// How many `d`-cycles `ω` of `S_n` give `ω·σ_0` each cycle type, for the
/// canonical `σ_0` of type `alpha`.
pub fn class_product_row(d: usize, alpha: &Partition) -> BTreeMap<Partition, u64> {
    let sigma = Permutation::canonical(alpha);
    let mut row = BTreeMap::new();
    for omega in all_d_cycles(alpha.weight(), d) {
        *row.entry(omega.compose_unchecked(&sigma).cycle_type()).or_default() += 1;
    }
    row
}

/// Multiplies a class-algebra vector by `K_{1^{n−d}d}`.
///
/// The vector is in `Φ` coordinates: the entry at `α` is the total
/// coefficient of all permutations of type `α`.
pub fn class_product_vector(
    d: usize,
    n: usize,
    v: &BTreeMap<Partition, BigRational>,
) -> Result<BTreeMap<Partition, BigRational>> {
    let mut out: BTreeMap<Partition, BigRational> = BTreeMap::new();
    for (alpha, c) in v {
        if alpha.weight() != n {
            return Err(Error::InvalidPartition(format!(
                "({alpha}) is not a partition of n={n}"
            )));
        }
        for (beta, m) in class_product_row(d, alpha) {
            *out.entry(beta).or_insert_with(BigRational::zero) += c * int(m as usize);
        }
    }
    out.retain(|_, c| !c.is_zero());
    Ok(out)
}

/// `W([d])F` through the group algebra, term by term.
pub fn apply_w_groupalg(d: usize, f: &PSeries) -> PSeries {
    let mut out = PSeries::zero(f.truncation());
    for (alpha, c) in f.terms() {
        for (beta, m) in class_product_row(d, alpha) {
            out.add_term(beta, c * int(m as usize));
        }
    }
    out
}

fn half() -> BigRational {
    BigRational::new(1.into(), 2.into())
}

fn third() -> BigRational {
    BigRational::new(1.into(), 3.into())
}

fn sum_all(truncation: usize, parts: impl IntoIterator<Item = PSeries>) -> PSeries {
    parts.into_iter().fold(PSeries::zero(truncation), |acc, s| {
        acc.add(&s).expect("same truncation")
    })
}

/// Ordered triples of positive integers with sum at most `max`.
fn triples(max: usize) -> impl Iterator<Item = (usize, usize, usize)> {
    (1..=max).flat_map(move |a| {
        (1..=max).flat_map(move |b| {
            (1..=max)
                .filter(move |&c| a + b + c <= max)
                .map(move |c| (a, b, c))
        })
    })
}

/// The cut-and-join operator
/// `W([2]) = ½ Σ_{i,j≥1} (ij p_{i+j} ∂²/∂p_i∂p_j + (i+j) p_i p_j ∂/∂p_{i+j})`.
pub fn apply_w2_explicit(f: &PSeries) -> PSeries {
    let n = f.truncation();
    let mut out = PSeries::zero(n);
    for i in 1..n {
        for j in 1..=n - i {
            let join = f.d_dp(i).d_dp(j).mul_by_p(i + j).scale(&int(i * j));
            let cut = f.d_dp(i + j).mul_by_p(j).mul_by_p(i).scale(&int(i + j));
            out = sum_all(n, [out, join, cut]);
        }
    }
    out.scale(&half())
}

/// `W([3])` as the six-summation display over ordered triples
/// `(i_1, i_2, i_3)`, with every higher derivative taken literally.
pub fn apply_w3_explicit(f: &PSeries) -> PSeries {
    let n = f.truncation();
    let mut out = PSeries::zero(n);
    for (a, b, c) in triples(n) {
        let s = a + b + c;
        let terms = [
            f.d_dp(a).d_dp(b).d_dp(c).mul_by_p(s).scale(&int(a * b * c)),
            f.d_dp(a)
                .d_dp(b + c)
                .mul_by_p(a + c)
                .mul_by_p(b)
                .scale(&int(a * (b + c))),
            f.d_dp(b)
                .d_dp(a + c)
                .mul_by_p(a + b)
                .mul_by_p(c)
                .scale(&int(b * (a + c))),
            f.d_dp(c)
                .d_dp(a + b)
                .mul_by_p(c + b)
                .mul_by_p(a)
                .scale(&int(c * (a + b))),
            f.d_dp(s).mul_by_p(a).mul_by_p(b).mul_by_p(c).scale(&int(s)),
            f.d_dp(s).mul_by_p(s).scale(&int(s)),
        ];
        out = sum_all(n, std::iter::once(out).chain(terms));
    }
    out.scale(&third())
}

/// First derivatives `∂F/∂p_i` for `i = 1..=N`, index 0 unused.
pub(crate) fn first_derivatives(f: &PSeries) -> Vec<PSeries> {
    (0..=f.truncation())
        .map(|i| {
            if i == 0 {
                PSeries::zero(f.truncation())
            } else {
                f.d_dp(i)
            }
        })
        .collect()
}

/// `p_{parts}·∏ factors`, truncated.
pub(crate) fn product_term(
    truncation: usize,
    coeff: &BigRational,
    p_parts: &[usize],
    factors: &[&PSeries],
) -> PSeries {
    let base_weight: usize = p_parts.iter().sum();
    if base_weight > truncation {
        return PSeries::zero(truncation);
    }
    let mut acc = PSeries::constant(truncation, coeff.clone());
    for &i in p_parts {
        acc = acc.mul_by_p(i);
    }
    for g in factors {
        if acc.is_zero() {
            break;
        }
        acc = acc.mul(g).expect("same truncation");
    }
    acc
}

/// `W̃([d])F` for `d ∈ {2, 3}`: the displays of `W([2])`, `W([3])` with each
/// derivative `∂^s/∂p_{b_1}⋯∂p_{b_s}` replaced by `∏_j ∂F/∂p_{b_j}`.
pub fn apply_tilde_w(d: usize, f: &PSeries) -> Result<PSeries> {
    let n = f.truncation();
    let df = first_derivatives(f);
    match d {
        2 => {
            let mut parts = Vec::new();
            for i in 1..n {
                for j in 1..=n - i {
                    parts.push(product_term(n, &int(i * j), &[i + j], &[&df[i], &df[j]]));
                    parts.push(product_term(n, &int(i + j), &[i, j], &[&df[i + j]]));
                }
            }
            Ok(sum_all(n, parts).scale(&half()))
        }
        3 => {
            let mut parts = Vec::new();
            for (a, b, c) in triples(n) {
                let s = a + b + c;
                parts.push(product_term(n, &int(a * b * c), &[s], &[&df[a], &df[b], &df[c]]));
                parts.push(product_term(n, &int(a * (b + c)), &[a + c, b], &[&df[a], &df[b + c]]));
                parts.push(product_term(n, &int(b * (a + c)), &[a + b, c], &[&df[b], &df[a + c]]));
                parts.push(product_term(n, &int(c * (a + b)), &[c + b, a], &[&df[c], &df[a + b]]));
                parts.push(product_term(n, &int(s), &[a, b, c], &[&df[s]]));
                parts.push(product_term(n, &int(s), &[s], &[&df[s]]));
            }
            Ok(sum_all(n, parts).scale(&third()))
        }
        _ => Err(Error::UnsupportedDegree(d)),
    }
}

/// The degree-2 summation of `W̃([3])`,
/// `⅓ Σ_{i,j,k≥1} (i+j+k) p_{i+j+k} ∂F/∂p_{i+j+k}`, which collapses to
/// `Σ_s C(s,3) p_s ∂F/∂p_s`. With `literal` set, the `⅓` is dropped.
pub fn degree_two_summation(f: &PSeries, literal: bool) -> PSeries {
    let n = f.truncation();
    let mut out = PSeries::zero(n);
    for s in 3..=n {
        // s·C(s−1, 2) ordered triples each contribute s
        let ordered = s * (s - 1) * (s - 2) / 2;
        let w = if literal {
            int(ordered)
        } else {
            int(ordered) * third()
        };
        out = out
            .add(&f.d_dp(s).mul_by_p(s).scale(&w))
            .expect("same truncation");
    }
    out
}
