use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive};

use crate::error::{Error, Result};

/// Which layer band a typical function concentrates on.
///
/// For even `n` there is one band around the middle layer. For odd `n` the
/// band either sits just below (`OddLower`) or just above (`OddUpper`) the
/// two central layers.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ParityCase {
    Even,
    OddLower,
    OddUpper,
}

impl ParityCase {
    pub fn name(self) -> &'static str {
        match self {
            ParityCase::Even => "even",
            ParityCase::OddLower => "odd-lower",
            ParityCase::OddUpper => "odd-upper",
        }
    }

    pub fn matches(self, n: usize) -> bool {
        match self {
            ParityCase::Even => n % 2 == 0,
            ParityCase::OddLower | ParityCase::OddUpper => n % 2 == 1,
        }
    }

    /// Rejects a case whose parity differs from `n`, or an `n` too small for
    /// every layer of the band to exist.
    pub(crate) fn check(self, n: usize) -> Result<()> {
        if !self.matches(n) {
            return Err(Error::ParityMismatch {
                n,
                case: self.name(),
            });
        }
        let min = if self == ParityCase::Even { 2 } else { 3 };
        if n < min {
            return Err(Error::VariableCountOutOfRange {
                n,
                min,
                max: usize::MAX,
            });
        }
        Ok(())
    }
}

impl fmt::Display for ParityCase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// The `(r, z, v)` triple of a typical special function: `r` minimal ones on
/// the lowest band layer, `z` ones on the central layer of the band and `v`
/// maximal zeros on the highest band layer.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SpecialParams {
    pub r_int: BigInt,
    pub z_int: BigInt,
    pub v_int: BigInt,
    pub r_real: BigRational,
    pub z_real: BigRational,
    pub v_real: BigRational,
}

pub(crate) fn binom(n: usize, k: usize) -> BigInt {
    num_integer::binomial(BigInt::from(n), BigInt::from(k))
}

pub(crate) fn binom_q(n: usize, k: usize) -> BigRational {
    BigRational::from_integer(binom(n, k))
}

/// `2^e` for any sign of `e`.
pub(crate) fn pow2(e: i64) -> BigRational {
    let p = BigInt::one() << e.unsigned_abs() as usize;
    if e >= 0 {
        BigRational::from_integer(p)
    } else {
        BigRational::new(BigInt::one(), p)
    }
}

pub(crate) fn rat(num: i64, den: i64) -> BigRational {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

pub(crate) fn to_f64(q: &BigRational) -> f64 {
    q.to_f64().unwrap_or(f64::NAN)
}

/// Natural log of a positive big integer, good to double precision.
pub(crate) fn ln_big(x: &BigInt) -> f64 {
    let bits = x.bits();
    if bits <= 1000 {
        return x.to_f64().unwrap().ln();
    }
    let shift = bits - 64;
    let top: BigInt = x >> shift as usize;
    top.to_f64().unwrap().ln() + shift as f64 * std::f64::consts::LN_2
}

/// Parameter triple for `n` variables under `case`.
///
/// The rational values carry no floors. The integer values floor `r` and
/// `v` first and then floor the `z` expression built from those integers.
pub fn special_params(n: usize, case: ParityCase) -> Result<SpecialParams> {
    case.check(n)?;
    let ni = n as i64;
    let half = rat(1, 2);
    let (r_real, v_real, z_of) = match case {
        ParityCase::Even => {
            let r = binom_q(n, n / 2 - 1) * pow2(-ni / 2 - 1);
            let middle = binom_q(n, n / 2);
            let z = move |_: &BigRational, _: &BigRational| &half * &middle;
            (
                r.clone(),
                r,
                Box::new(z) as Box<dyn Fn(&_, &_) -> BigRational>,
            )
        }
        ParityCase::OddLower => {
            let r = binom_q(n, (n - 3) / 2) * pow2(-(ni + 3) / 2);
            let v = binom_q(n, (n + 1) / 2) * pow2(-(ni + 1) / 2);
            let middle = binom_q(n, (n - 1) / 2);
            let z = move |r: &BigRational, v: &BigRational| {
                &half * (&middle + r * rat((ni + 3) / 2, 1) - v * rat((ni + 1) / 2, 1))
            };
            (r, v, Box::new(z) as Box<dyn Fn(&_, &_) -> BigRational>)
        }
        ParityCase::OddUpper => {
            let r = binom_q(n, (n - 1) / 2) * pow2(-(ni + 1) / 2);
            let v = binom_q(n, (n + 3) / 2) * pow2(-(ni + 3) / 2);
            let middle = binom_q(n, (n + 1) / 2);
            let z = move |r: &BigRational, v: &BigRational| {
                &half * (&middle + r * rat((ni - 1) / 2, 1) - v * rat((ni + 3) / 2, 1))
            };
            (r, v, Box::new(z) as Box<dyn Fn(&_, &_) -> BigRational>)
        }
    };
    let r_int = r_real.floor().to_integer();
    let v_int = v_real.floor().to_integer();
    let z_real = z_of(&r_real, &v_real);
    let z_int = z_of(
        &BigRational::from_integer(r_int.clone()),
        &BigRational::from_integer(v_int.clone()),
    )
    .floor()
    .to_integer();
    Ok(SpecialParams {
        r_int,
        z_int,
        v_int,
        r_real,
        z_real,
        v_real,
    })
}

impl SpecialParams {
    pub fn is_non_negative(&self) -> bool {
        !self.r_int.is_negative() && !self.z_int.is_negative() && !self.v_int.is_negative()
    }
}
