//! Expected average sensitivity of a typical monotone Boolean function.
//!
//! Every quantity is evaluated in exact rational arithmetic with big-integer
//! binomials, floors omitted, and converted to `f64` only at the end. The
//! intermediate counts are kept as named fields so each step of the
//! derivation can be inspected on its own.

use num_rational::BigRational;
use num_traits::One;

use super::params::{binom_q, pow2, rat, to_f64};
use crate::error::{Error, Result};

/// Intermediate counts for even `n`, band `n/2 - 1 ..= n/2 + 1`.
///
/// Counts refer to a fixed variable `x_j` and to the layer `n/2 - 1`; the
/// layer `n/2 + 1` contributes the same amounts by duality.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EvenTerms {
    /// Minimal ones on layer `n/2 - 1` with `x_j = 1`.
    pub sensitive_minimal_ones: BigRational,
    /// Zeros on layer `n/2 - 1`.
    pub lower_layer_zeros: BigRational,
    /// Ones on the middle layer (half of it).
    pub middle_layer_ones: BigRational,
    /// Zeros on layer `n/2 - 1` with `x_j = 0` whose `x_j = 1` neighbour is a one.
    pub zero_to_one_edges: BigRational,
    /// Twice the two counts above, added.
    pub sensitive_edges_sum: BigRational,
    /// Closed form of [`EvenTerms::sensitive_edges_sum`].
    pub sensitive_edges: BigRational,
    /// `n 2^{-n+1}` times the sensitive edge count.
    pub estimate: BigRational,
}

pub fn even_terms(n: usize) -> Result<EvenTerms> {
    if n % 2 != 0 || n < 2 {
        return Err(Error::ParityMismatch { n, case: "even" });
    }
    let ni = n as i64;
    let half = rat(1, 2);
    let c_low = binom_q(n, n / 2 - 1);
    let p = pow2(-ni / 2 - 1);
    let one = BigRational::one();

    let sensitive_minimal_ones = &half * &c_low * &p;
    let lower_layer_zeros = &c_low * (&one - &p);
    let middle_layer_ones = &half * binom_q(n, n / 2);
    let zero_to_one_edges = rat(1, 4) * &c_low * (&one - &p);
    let sensitive_edges_sum = rat(2, 1) * &sensitive_minimal_ones + rat(2, 1) * &zero_to_one_edges;
    let sensitive_edges = &half * &c_low * (&p + &one);
    let estimate = rat(ni, 1) * pow2(1 - ni) * &sensitive_edges;
    Ok(EvenTerms {
        sensitive_minimal_ones,
        lower_layer_zeros,
        middle_layer_ones,
        zero_to_one_edges,
        sensitive_edges_sum,
        sensitive_edges,
        estimate,
    })
}

/// `n 2^{-n} C(n, n/2-1) (2^{-n/2-1} + 1)`, exactly.
pub fn expected_avg_sensitivity_even_exact(n: usize) -> Result<BigRational> {
    even_terms(n).map(|t| t.estimate)
}

pub fn expected_avg_sensitivity_even(n: usize) -> Result<f64> {
    expected_avg_sensitivity_even_exact(n).map(|q| to_f64(&q))
}

/// Intermediate counts for one odd-`n` band.
///
/// The band has a lower layer `a`, a central layer `a + 1` and an upper
/// layer `a + 2`. Counts refer to a fixed variable `x_j`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BandTerms {
    /// Minimal ones on the lower layer with `x_j = 1`.
    pub lower_minimal_ones: BigRational,
    /// Zeros on the lower layer with `x_j = 0`.
    pub lower_zeros: BigRational,
    /// Ones on the central layer divided by its size.
    pub middle_one_probability: BigRational,
    /// Sensitive edges between the lower and central layers.
    pub lower_contribution: BigRational,
    /// Maximal zeros on the upper layer with `x_j = 0`.
    pub upper_maximal_zeros: BigRational,
    /// Ones on the upper layer with `x_j = 1`.
    pub upper_ones: BigRational,
    /// Zeros on the central layer divided by its size.
    pub middle_zero_probability: BigRational,
    /// Sensitive edges between the central and upper layers.
    pub upper_contribution: BigRational,
    /// `n 2^{-n+1}` times the sum of both contributions.
    pub estimate: BigRational,
}

/// Layer indices and exponents that distinguish the two odd bands.
struct BandLayout {
    lower: usize,
    middle: usize,
    upper: usize,
    /// `2^{-lower_exp}` is the fraction of lower-layer points that are minimal ones.
    lower_exp: i64,
    /// `2^{-upper_exp}` is the fraction of upper-layer points that are maximal zeros.
    upper_exp: i64,
    /// Multiplier of the minimal-one count in the central-layer ones count.
    lower_cover_coef: BigRational,
    /// Multiplier of the maximal-zero count in the central-layer ones count.
    upper_cover_coef: BigRational,
}

impl BandLayout {
    fn lower(n: usize) -> Self {
        let ni = n as i64;
        BandLayout {
            lower: (n - 3) / 2,
            middle: (n - 1) / 2,
            upper: (n + 1) / 2,
            lower_exp: (ni + 3) / 2,
            upper_exp: (ni + 1) / 2,
            lower_cover_coef: rat(ni + 3, 2),
            upper_cover_coef: rat(ni + 1, 2),
        }
    }

    fn upper(n: usize) -> Self {
        let ni = n as i64;
        BandLayout {
            lower: (n - 1) / 2,
            middle: (n + 1) / 2,
            upper: (n + 3) / 2,
            lower_exp: (ni + 1) / 2,
            upper_exp: (ni + 3) / 2,
            // (n-1)/2 here, not the (n+1)/2 upper-cover count of the lower
            // layer; kept as published since the regression values use it.
            lower_cover_coef: rat(ni - 1, 2),
            upper_cover_coef: rat(ni + 3, 2),
        }
    }

    fn terms(&self, n: usize) -> BandTerms {
        let ni = n as i64;
        let half = rat(1, 2);
        let one = BigRational::one();
        let c_low = binom_q(n, self.lower);
        let c_mid = binom_q(n, self.middle);
        let c_up = binom_q(n, self.upper);
        let p_low = pow2(-self.lower_exp);
        let p_up = pow2(-self.upper_exp);

        // ones on the central layer, as a fraction of that layer
        let middle_ones_fraction = || {
            c_mid.recip()
                * (&half
                    * (&c_mid + &c_low * &p_low * &self.lower_cover_coef
                        - &c_up * &p_up * &self.upper_cover_coef))
        };

        let lower_minimal_ones = &half * &c_low * &p_low;
        let lower_zeros = &half * &c_low * (&one - &p_low);
        let middle_one_probability = middle_ones_fraction();
        let lower_contribution =
            &half * &c_low * &p_low + &half * &c_low * (&one - &p_low) * middle_ones_fraction();

        let upper_maximal_zeros = &half * &c_up * &p_up;
        let upper_ones = &half * &c_up * (&one - &p_up);
        let middle_zero_probability = &one - middle_ones_fraction();
        let upper_contribution = &half * &c_up * &p_up
            + &half * &c_up * (&one - &p_up) * (&one - middle_ones_fraction());

        let estimate = rat(ni, 1) * pow2(1 - ni) * (&lower_contribution + &upper_contribution);
        BandTerms {
            lower_minimal_ones,
            lower_zeros,
            middle_one_probability,
            lower_contribution,
            upper_maximal_zeros,
            upper_ones,
            middle_zero_probability,
            upper_contribution,
            estimate,
        }
    }
}

fn check_odd(n: usize) -> Result<()> {
    if n % 2 != 1 || n < 3 {
        return Err(Error::ParityMismatch { n, case: "odd" });
    }
    Ok(())
}

/// Terms for the band on layers `(n-3)/2 ..= (n+1)/2`.
pub fn odd_lower_terms(n: usize) -> Result<BandTerms> {
    check_odd(n)?;
    Ok(BandLayout::lower(n).terms(n))
}

/// Terms for the band on layers `(n-1)/2 ..= (n+3)/2`.
pub fn odd_upper_terms(n: usize) -> Result<BandTerms> {
    check_odd(n)?;
    Ok(BandLayout::upper(n).terms(n))
}

/// Exact estimates for the lower and upper odd bands.
pub fn expected_avg_sensitivity_odd_components_exact(
    n: usize,
) -> Result<(BigRational, BigRational)> {
    Ok((odd_lower_terms(n)?.estimate, odd_upper_terms(n)?.estimate))
}

pub fn expected_avg_sensitivity_odd_components(n: usize) -> Result<(f64, f64)> {
    let (a, b) = expected_avg_sensitivity_odd_components_exact(n)?;
    Ok((to_f64(&a), to_f64(&b)))
}

/// Estimate for any `n >= 2`: the even formula, or the mean of the two odd
/// bands, which are equally likely.
pub fn expected_avg_sensitivity_exact(n: usize) -> Result<BigRational> {
    if n < 2 {
        return Err(Error::VariableCountOutOfRange {
            n,
            min: 2,
            max: usize::MAX,
        });
    }
    if n % 2 == 0 {
        expected_avg_sensitivity_even_exact(n)
    } else {
        let (a, b) = expected_avg_sensitivity_odd_components_exact(n)?;
        Ok((a + b) * rat(1, 2))
    }
}

pub fn expected_avg_sensitivity(n: usize) -> Result<f64> {
    expected_avg_sensitivity_exact(n).map(|q| to_f64(&q))
}
