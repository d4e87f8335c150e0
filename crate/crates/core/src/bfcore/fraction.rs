use std::cmp::Ordering;
use std::fmt;
use std::hash::{Hash, Hasher};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;

/// A non-negative dyadic rational `numerator / 2^log2_denominator`.
///
/// Equality, ordering and hashing are by value, so `1/2` and `2/4` compare
/// equal regardless of how they were produced.
#[derive(Debug, Clone, Copy)]
pub struct ExactFraction {
    numerator: u64,
    log2_denominator: u32,
}

impl ExactFraction {
    pub const ZERO: ExactFraction = ExactFraction {
        numerator: 0,
        log2_denominator: 0,
    };

    pub fn new(numerator: u64, log2_denominator: u32) -> Self {
        assert!(log2_denominator < 64, "denominator exponent too large");
        ExactFraction {
            numerator,
            log2_denominator,
        }
    }

    pub fn from_integer(value: u64) -> Self {
        ExactFraction::new(value, 0)
    }

    pub fn numerator(&self) -> u64 {
        self.numerator
    }

    pub fn log2_denominator(&self) -> u32 {
        self.log2_denominator
    }

    /// Lowest-terms representative.
    pub fn reduced(self) -> Self {
        if self.numerator == 0 {
            return ExactFraction::ZERO;
        }
        let shift = self.numerator.trailing_zeros().min(self.log2_denominator);
        ExactFraction {
            numerator: self.numerator >> shift,
            log2_denominator: self.log2_denominator - shift,
        }
    }

    pub fn denominator(&self) -> u64 {
        1u64 << self.log2_denominator
    }

    pub fn to_f64(&self) -> f64 {
        self.numerator as f64 / self.denominator() as f64
    }

    pub fn to_big_rational(&self) -> BigRational {
        BigRational::new(
            BigInt::from(self.numerator),
            BigInt::one() << self.log2_denominator as usize,
        )
    }

    /// `self <= sqrt(bound)`, decided without rounding.
    pub fn le_sqrt(&self, bound: u64) -> bool {
        let num = self.numerator as u128;
        let rhs = (bound as u128) << (2 * self.log2_denominator);
        num.checked_mul(num).is_some_and(|sq| sq <= rhs)
    }

    /// Both values scaled onto the common denominator `2^max(k1, k2)`.
    fn aligned(&self, other: &Self) -> (u128, u128) {
        let k = self.log2_denominator.max(other.log2_denominator);
        (
            (self.numerator as u128) << (k - self.log2_denominator),
            (other.numerator as u128) << (k - other.log2_denominator),
        )
    }
}

impl PartialEq for ExactFraction {
    fn eq(&self, other: &Self) -> bool {
        let (a, b) = self.aligned(other);
        a == b
    }
}

impl Eq for ExactFraction {}

impl PartialOrd for ExactFraction {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for ExactFraction {
    fn cmp(&self, other: &Self) -> Ordering {
        let (a, b) = self.aligned(other);
        a.cmp(&b)
    }
}

impl Hash for ExactFraction {
    fn hash<H: Hasher>(&self, state: &mut H) {
        let r = self.reduced();
        r.numerator.hash(state);
        r.log2_denominator.hash(state);
    }
}

impl fmt::Display for ExactFraction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let r = self.reduced();
        if r.log2_denominator == 0 {
            write!(f, "{}", r.numerator)
        } else {
            write!(f, "{}/{}", r.numerator, r.denominator())
        }
    }
}
