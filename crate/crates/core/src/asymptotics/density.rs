use std::f64::consts::{LN_2, PI};

use super::params::{binom, ln_big, ParityCase};
use crate::error::{Error, Result};

/// Gaussian shape of the fraction of monotone functions whose parameter
/// triple sits at offsets `(k, t, u)` from the typical `(r, z, v)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DensityShape {
    /// Natural log of the value at `k = t = u = 0`.
    pub ln_prefactor: f64,
    /// Coefficients `a` in `exp(-a_k k^2 - a_t t^2 - a_u u^2)`.
    pub k_coef: f64,
    pub t_coef: f64,
    pub u_coef: f64,
}

impl DensityShape {
    pub fn new(n: usize, case: ParityCase) -> Result<Self> {
        case.check(n)?;
        let lnb = |k: usize| ln_big(&binom(n, k));
        // 2^e / C(n, k)
        let ratio = |e: f64, k: usize| (e * LN_2 - lnb(k)).exp();
        let nf = n as f64;
        // ln sqrt(2^{n+1} / (pi^3 C^3))
        let ln_root = |k: usize| 0.5 * ((nf + 1.0) * LN_2 - 3.0 * PI.ln() - 3.0 * lnb(k));
        let shape = match case {
            ParityCase::Even => DensityShape {
                ln_prefactor: ln_root(n / 2),
                k_coef: ratio(nf / 2.0, n / 2 - 1),
                t_coef: ratio(nf / 2.0, n / 2 - 1),
                u_coef: ratio(1.0, n / 2),
            },
            ParityCase::OddLower => DensityShape {
                ln_prefactor: ln_root((n - 1) / 2) - LN_2,
                k_coef: ratio((nf + 1.0) / 2.0, (n - 3) / 2),
                t_coef: ratio((nf - 1.0) / 2.0, (n + 1) / 2),
                u_coef: ratio(1.0, (n - 1) / 2),
            },
            ParityCase::OddUpper => DensityShape {
                ln_prefactor: ln_root((n - 1) / 2) - LN_2,
                k_coef: ratio((nf - 1.0) / 2.0, (n - 1) / 2),
                t_coef: ratio((nf + 1.0) / 2.0, (n + 3) / 2),
                u_coef: ratio(1.0, (n + 1) / 2),
            },
        };
        Ok(shape)
    }

    pub fn eval(&self, k: f64, t: f64, u: f64) -> f64 {
        (self.ln_prefactor - self.k_coef * k * k - self.t_coef * t * t - self.u_coef * u * u).exp()
    }
}

/// Offsets for which the density asymptotics hold: `|k|, |t| <= n 2^{n/4}`
/// and `|u| <= n 2^{n/2}`.
pub fn offset_window(n: usize) -> (f64, f64) {
    let nf = n as f64;
    (nf * 2f64.powf(nf / 4.0), nf * 2f64.powf(nf / 2.0))
}

/// Asymptotic fraction `|M(n, r, z, v)| / |M(n)|` of monotone functions with
/// the parameter triple displaced by `(k, t, u)` from the typical one.
///
/// Offsets outside [`offset_window`] are rejected.
pub fn density_ratio(n: usize, case: ParityCase, k: i64, t: i64, u: i64) -> Result<f64> {
    let shape = DensityShape::new(n, case)?;
    let (kt_bound, u_bound) = offset_window(n);
    for (name, value, bound) in [("k", k, kt_bound), ("t", t, kt_bound), ("u", u, u_bound)] {
        if value.unsigned_abs() as f64 > bound {
            return Err(Error::OffsetOutsideWindow { name, value, bound });
        }
    }
    Ok(shape.eval(k as f64, t as f64, u as f64))
}
