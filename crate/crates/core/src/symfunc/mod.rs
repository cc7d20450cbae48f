//! Truncated series in `z` and the power sums `p_1, p_2, …` with exact
//! rational coefficients.
//!
//! Every series in play is `z`-homogeneous in the sense that `p_α` always
//! carries `z^{|α|}`, so a term is keyed by its partition alone and the
//! `z`-degree is read off as the weight. Truncation at `N` keeps the terms
//! with `|α| ≤ N`.

mod generating;

pub use generating::{build_f, du_at_one, euler_shift, u_weight};

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::perm::Partition;

/// A truncated series `Σ c_α z^{|α|} p_α` over partitions with `|α| ≤ N`.
#[derive(Clone, PartialEq, Eq)]
pub struct PSeries {
    truncation: usize,
    terms: BTreeMap<Partition, BigRational>,
}

/// One term in serialized form.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TermRecord {
    pub n: usize,
    pub alpha: Vec<usize>,
    pub coeff: String,
}

impl PSeries {
    pub fn zero(truncation: usize) -> Self {
        PSeries {
            truncation,
            terms: BTreeMap::new(),
        }
    }

    /// The constant series `c`.
    pub fn constant(truncation: usize, c: BigRational) -> Self {
        Self::monomial(truncation, Partition::empty(), c)
    }

    /// `c·z^{|α|}p_α`, or zero if `|α| > N`.
    pub fn monomial(truncation: usize, alpha: Partition, c: BigRational) -> Self {
        let mut s = Self::zero(truncation);
        s.add_term(alpha, c);
        s
    }

    /// `Φ(α) = p_α` at `z`-degree `|α|`, truncated exactly at `|α|`.
    pub fn phi(alpha: &Partition) -> Self {
        Self::monomial(alpha.weight(), alpha.clone(), BigRational::one())
    }

    pub fn truncation(&self) -> usize {
        self.truncation
    }

    /// Drops terms above `n` and records `n` as the new truncation.
    /// Raising the truncation is refused since the missing terms are unknown.
    pub fn truncate(&self, n: usize) -> Result<Self> {
        if n > self.truncation {
            return Err(Error::TruncationMismatch {
                left: self.truncation,
                right: n,
            });
        }
        Ok(PSeries {
            truncation: n,
            terms: self
                .terms
                .iter()
                .filter(|(a, _)| a.weight() <= n)
                .map(|(a, c)| (a.clone(), c.clone()))
                .collect(),
        })
    }

    pub fn coeff(&self, alpha: &Partition) -> BigRational {
        self.terms.get(alpha).cloned().unwrap_or_else(BigRational::zero)
    }

    /// Nonzero terms in `(n, α)` order.
    pub fn terms(&self) -> impl Iterator<Item = (&Partition, &BigRational)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Largest absolute coefficient, zero for the zero series.
    pub fn max_abs(&self) -> BigRational {
        self.terms
            .values()
            .map(|c| c.abs())
            .max()
            .unwrap_or_else(BigRational::zero)
    }

    /// Adds `c·p_α` in place, ignoring terms above the truncation.
    pub fn add_term(&mut self, alpha: Partition, c: BigRational) {
        if c.is_zero() || alpha.weight() > self.truncation {
            return;
        }
        match self.terms.entry(alpha) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    fn check_same(&self, other: &PSeries) -> Result<()> {
        if self.truncation != other.truncation {
            return Err(Error::TruncationMismatch {
                left: self.truncation,
                right: other.truncation,
            });
        }
        Ok(())
    }

    pub fn add(&self, other: &PSeries) -> Result<PSeries> {
        self.check_same(other)?;
        let mut out = self.clone();
        for (a, c) in &other.terms {
            out.add_term(a.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn sub(&self, other: &PSeries) -> Result<PSeries> {
        self.check_same(other)?;
        let mut out = self.clone();
        for (a, c) in &other.terms {
            out.add_term(a.clone(), -c.clone());
        }
        Ok(out)
    }

    pub fn scale(&self, k: &BigRational) -> PSeries {
        if k.is_zero() {
            return Self::zero(self.truncation);
        }
        self.map_coeffs(|_, c| c * k)
    }

    /// Product, dropping everything above the truncation.
    pub fn mul(&self, other: &PSeries) -> Result<PSeries> {
        self.check_same(other)?;
        let mut out = Self::zero(self.truncation);
        for (a, x) in &self.terms {
            let room = self.truncation - a.weight();
            for (b, y) in other.terms.iter().take_while(|(b, _)| b.weight() <= room) {
                out.add_term(a.union(b), x * y);
            }
        }
        Ok(out)
    }

    /// `∂/∂p_i`: a term with `m` parts equal to `i` loses one of them and is
    /// multiplied by `m`.
    pub fn d_dp(&self, i: usize) -> PSeries {
        let mut out = Self::zero(self.truncation);
        for (a, c) in &self.terms {
            let m = a.multiplicity(i);
            if let Some(rest) = a.without_part(i) {
                out.add_term(rest, c * BigRational::from_integer(BigInt::from(m)));
            }
        }
        out
    }

    /// `z ∂/∂z`: multiplies each term by its `z`-degree.
    pub fn euler_z(&self) -> PSeries {
        self.map_coeffs(|a, c| c * int(a.weight()))
    }

    /// `Σ_i p_i ∂/∂p_i`: multiplies each term by its length.
    pub fn euler_p(&self) -> PSeries {
        self.map_coeffs(|a, c| c * int(a.len()))
    }

    /// Multiplication by `z^i p_i`.
    pub fn mul_by_p(&self, i: usize) -> PSeries {
        let mut out = Self::zero(self.truncation);
        for (a, c) in &self.terms {
            out.add_term(a.with_part(i), c.clone());
        }
        out
    }

    /// Applies `f(α, c)` to every coefficient, dropping results that vanish.
    pub fn map_coeffs(&self, f: impl Fn(&Partition, &BigRational) -> BigRational) -> PSeries {
        let mut out = Self::zero(self.truncation);
        for (a, c) in &self.terms {
            out.add_term(a.clone(), f(a, c));
        }
        out
    }

    pub fn to_records(&self) -> Vec<TermRecord> {
        self.terms
            .iter()
            .map(|(a, c)| TermRecord {
                n: a.weight(),
                alpha: a.parts().to_vec(),
                coeff: format_rational(c),
            })
            .collect()
    }

    pub fn from_records(truncation: usize, records: &[TermRecord]) -> Result<PSeries> {
        let mut out = Self::zero(truncation);
        for r in records {
            let alpha = Partition::new(r.alpha.clone())?;
            if alpha.weight() != r.n {
                return Err(Error::InvalidPartition(format!(
                    "record n={} does not match alpha {:?}",
                    r.n, r.alpha
                )));
            }
            out.add_term(alpha, parse_rational(&r.coeff)?);
        }
        Ok(out)
    }
}

impl fmt::Debug for PSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "PSeries[N={}]", self.truncation)?;
        f.debug_map()
            .entries(self.terms.iter().map(|(a, c)| (a, c.to_string())))
            .finish()
    }
}

impl fmt::Display for PSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (idx, (a, c)) in self.terms.iter().enumerate() {
            if idx > 0 {
                write!(f, " + ")?;
            }
            write!(f, "({c})")?;
            if !a.is_empty() {
                write!(f, "·z^{}", a.weight())?;
                for p in a.parts() {
                    write!(f, "·p{p}")?;
                }
            }
        }
        Ok(())
    }
}

pub(crate) fn int(n: usize) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

/// Rationals always as `"num/den"`, integers included.
pub fn format_rational(c: &BigRational) -> String {
    format!("{}/{}", c.numer(), c.denom())
}

/// Reads `"num/den"` or a bare integer.
pub fn parse_rational(text: &str) -> Result<BigRational> {
    let bad = || Error::InvalidRational(text.to_string());
    let (num, den) = match text.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (text.trim(), "1"),
    };
    let num: BigInt = num.parse().map_err(|_| bad())?;
    let den: BigInt = den.parse().map_err(|_| bad())?;
    if den.is_zero() {
        return Err(bad());
    }
    Ok(BigRational::new(num, den))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    #[test]
    fn phi_is_one_monomial() {
        let s = PSeries::phi(&p(&[3, 1]));
        assert_eq!(s.truncation(), 4);
        assert_eq!(s.len(), 1);
        assert_eq!(s.coeff(&p(&[3, 1])), q(1, 1));
    }

    #[test]
    fn products_respect_truncation() {
        let x = PSeries::monomial(2, p(&[1]), q(1, 1));
        assert_eq!(x.mul(&x).unwrap(), PSeries::monomial(2, p(&[1, 1]), q(1, 1)));
        let y = PSeries::monomial(1, p(&[1]), q(1, 1));
        assert!(y.mul(&y).unwrap().is_zero());
        assert!(x.mul(&y).is_err());
        assert_eq!(x.add(&PSeries::zero(2)).unwrap(), x);
    }

    #[test]
    fn derivatives() {
        let s = PSeries::monomial(4, p(&[1, 1]), q(1, 1));
        assert_eq!(s.d_dp(1), PSeries::monomial(4, p(&[1]), q(2, 1)));
        let t = PSeries::monomial(4, p(&[3, 1]), q(1, 1));
        assert!(t.d_dp(2).is_zero());
        assert_eq!(t.d_dp(3), PSeries::monomial(4, p(&[1]), q(1, 1)));
    }

    #[test]
    fn euler_operators() {
        let t = PSeries::monomial(4, p(&[3, 1]), q(5, 7));
        assert_eq!(t.euler_z().coeff(&p(&[3, 1])), q(20, 7));
        assert_eq!(t.euler_p().coeff(&p(&[3, 1])), q(10, 7));
        let one = PSeries::constant(2, q(1, 1));
        assert_eq!(one.mul_by_p(2), PSeries::monomial(2, p(&[2]), q(1, 1)));
        assert!(one.mul_by_p(3).is_zero());
    }

    #[test]
    fn records_round_trip() {
        let mut s = PSeries::zero(4);
        s.add_term(p(&[2, 1, 1]), q(-3, 4));
        s.add_term(p(&[1]), q(2, 1));
        let recs = s.to_records();
        assert_eq!(recs[0].coeff, "2/1");
        assert_eq!(recs[1].alpha, vec![2, 1, 1]);
        assert_eq!(PSeries::from_records(4, &recs).unwrap(), s);
        assert_eq!(parse_rational("6").unwrap(), q(6, 1));
        assert!(parse_rational("1/0").is_err());
    }
}
