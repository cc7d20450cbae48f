use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;

use crate::error::{Error, Result};
use crate::factorize::CountTable;
use crate::perm::{class_size, factorial, mu, Partition};

use super::{int, PSeries};

/// The generating series `F_d = Σ h^d(α)·|C_α| z^n/(n!·μ^d(α)!) p_α` truncated at `N`.
///
/// `h^d(α)` in the table is counted for one fixed permutation of type `α`;
/// the series counts factorizations of every permutation of that type, so
/// each coefficient picks up the class size `|C_α|`. Partitions whose `μ^d`
/// is not a nonnegative integer contribute nothing.
pub fn build_f(d: usize, truncation: usize, counts: &CountTable) -> Result<PSeries> {
    if d < 2 {
        return Err(Error::UnsupportedDegree(d));
    }
    let mut f = PSeries::zero(truncation);
    for n in 1..=truncation {
        for alpha in Partition::all(n) {
            let Some(k) = mu(d, &alpha).as_usize() else {
                continue;
            };
            let h = counts
                .minimal_count(d, &alpha)
                .ok_or_else(|| Error::MissingCount {
                    n,
                    alpha: alpha.clone(),
                })?;
            let num = BigInt::from(h * class_size(&alpha));
            let den = BigInt::from(factorial(n) * factorial(k));
            f.add_term(alpha, BigRational::new(num, den));
        }
    }
    Ok(f)
}

/// Exponent of `u` carried by `p_α`: `μ^d(α)`, possibly fractional.
pub fn u_weight(d: usize, alpha: &Partition) -> BigRational {
    mu(d, alpha).to_big()
}

/// `∂/∂u` at `u = 1` of the `u`-refined series whose `u = 1` value is `f`:
/// each term is multiplied by its `u` exponent.
pub fn du_at_one(d: usize, f: &PSeries) -> PSeries {
    f.map_coeffs(|a, c| c * u_weight(d, a))
}

/// `(z∂_z + Σ p_i∂_{p_i} − 2)F / (d − 1)`.
pub fn euler_shift(d: usize, f: &PSeries) -> PSeries {
    let two = int(2);
    let lowered = f
        .euler_z()
        .add(&f.euler_p())
        .and_then(|s| s.sub(&f.scale(&two)))
        .expect("same truncation");
    lowered.scale(&(BigRational::one() / int(d - 1)))
}
