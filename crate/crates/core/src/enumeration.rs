//! Exhaustive enumeration of monotone Boolean functions for `n <= 6`.
//!
//! A function of `n` variables splits on its last variable into the pair
//! `(g, h)` of restrictions `x_n = 0` and `x_n = 1`. It is monotone exactly
//! when `g` and `h` are monotone and `g <= h` pointwise, so `M(n)` is built
//! from ordered pairs of `M(n-1)`. Every table for `n <= 6` fits in one
//! 64-bit word; `g` occupies the low half and `h` the high half.

use std::sync::OnceLock;

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use rayon::prelude::*;

use crate::asymptotics::{binomial_u64, classify_layers};
use crate::bfcore::{word_neighbor_view, word_variable, ExactFraction, TruthTable};
use crate::error::{Error, Result};

/// Largest `n` handled by the enumerator; `|M(6)| = 7,828,354`.
pub const MAX_ENUM_VARS: usize = 6;

/// Known sizes of `M(n)` for `n = 0..=6`.
pub const DEDEKIND: [u64; 7] = [2, 3, 6, 20, 168, 7581, 7_828_354];

/// Classification is reported for `n >= 4`; smaller sizes record 0.
pub const MIN_SPECIAL_VARS: usize = 4;

fn check_n(n: usize) -> Result<()> {
    if n > MAX_ENUM_VARS {
        Err(Error::VariableCountOutOfRange {
            n,
            min: 0,
            max: MAX_ENUM_VARS,
        })
    } else {
        Ok(())
    }
}

/// Memoized `M(n)` for `n <= 5`, in generation order.
fn monotone_words(n: usize) -> &'static [u64] {
    static CACHE: [OnceLock<Vec<u64>>; MAX_ENUM_VARS] = [const { OnceLock::new() }; MAX_ENUM_VARS];
    CACHE[n].get_or_init(|| {
        if n == 0 {
            return vec![0, 1];
        }
        let mut out = Vec::new();
        for_each_word(n, |w| out.push(w));
        out
    })
}

/// Calls `visit` on every monotone `n`-variable table (`1 <= n <= 6`).
fn for_each_word(n: usize, mut visit: impl FnMut(u64)) {
    let sub = monotone_words(n - 1);
    for &g in sub {
        for_each_word_with_low(n, g, &mut visit);
    }
}

/// Visits every monotone table whose `x_n = 0` half is `g`.
#[inline]
fn for_each_word_with_low(n: usize, g: u64, visit: &mut impl FnMut(u64)) {
    let half = 1u32 << (n - 1);
    for &h in monotone_words(n - 1) {
        if g & !h == 0 {
            visit(g | (h << half));
        }
    }
}

/// Calls `visitor` once for every monotone function of `n` variables, in a
/// fixed order, and returns how many there were.
pub fn enumerate_monotone(n: usize, mut visitor: impl FnMut(&TruthTable)) -> Result<u64> {
    check_n(n)?;
    let mut count = 0u64;
    let mut call = |w: u64| {
        visitor(&TruthTable::from_u64(n, w).unwrap());
        count += 1;
    };
    if n == 0 {
        monotone_words(0).iter().for_each(|&w| call(w));
    } else {
        for_each_word(n, call);
    }
    Ok(count)
}

/// Exact statistics of average sensitivity over all of `M(n)`.
#[derive(Debug, Clone, PartialEq)]
pub struct ExactStats {
    pub n: usize,
    pub count: BigUint,
    pub mean_avg_sensitivity: BigRational,
    pub max_avg_sensitivity: ExactFraction,
    pub min_avg_sensitivity: ExactFraction,
    /// Fraction of functions with at least one band membership; 0 for
    /// `n < 4`.
    pub special_fraction: BigRational,
    pub special_count: u64,
}

/// Associative, commutative partial sums.
#[derive(Debug, Clone, Copy)]
struct Accumulator {
    count: u64,
    /// Sum of average sensitivities scaled by `2^n`.
    scaled_sum: u128,
    max: u64,
    min: u64,
    special: u64,
}

impl Accumulator {
    const EMPTY: Accumulator = Accumulator {
        count: 0,
        scaled_sum: 0,
        max: 0,
        min: u64::MAX,
        special: 0,
    };

    fn merge(self, o: Accumulator) -> Accumulator {
        Accumulator {
            count: self.count + o.count,
            scaled_sum: self.scaled_sum + o.scaled_sum,
            max: self.max.max(o.max),
            min: self.min.min(o.min),
            special: self.special + o.special,
        }
    }
}

/// Per-`n` tables that make a single-word function cheap to measure.
struct WordMeter {
    n: usize,
    layer_masks: Vec<u64>,
    layer_sizes: Vec<u64>,
}

impl WordMeter {
    fn new(n: usize) -> Self {
        let mut layer_masks = vec![0u64; n + 1];
        for x in 0..1usize << n {
            layer_masks[x.count_ones() as usize] |= 1 << x;
        }
        WordMeter {
            n,
            layer_masks,
            layer_sizes: (0..=n).map(|k| binomial_u64(n, k)).collect(),
        }
    }

    /// Average sensitivity times `2^n`: the number of sensitive ordered
    /// (point, direction) pairs.
    #[inline]
    fn scaled_sensitivity(&self, w: u64) -> u64 {
        (0..self.n)
            .map(|b| (w ^ word_neighbor_view(w, b)).count_ones() as u64)
            .sum()
    }

    #[inline]
    fn is_special(&self, w: u64) -> bool {
        let mut minimal = w;
        for b in 0..self.n {
            minimal &= !(word_neighbor_view(w, b) & word_variable(b));
        }
        let mut minimal_layers = 0u32;
        let mut full_layers = 0u32;
        for (k, &mask) in self.layer_masks.iter().enumerate() {
            if minimal & mask != 0 {
                minimal_layers |= 1 << k;
            }
            if (w & mask).count_ones() as u64 == self.layer_sizes[k] {
                full_layers |= 1 << k;
            }
        }
        !classify_layers(self.n, minimal_layers, full_layers).is_empty()
    }

    fn measure(&self, w: u64, acc: &mut Accumulator) {
        let s = self.scaled_sensitivity(w);
        acc.count += 1;
        acc.scaled_sum += s as u128;
        acc.max = acc.max.max(s);
        acc.min = acc.min.min(s);
        if self.n >= MIN_SPECIAL_VARS && self.is_special(w) {
            acc.special += 1;
        }
    }
}

/// Exact statistics over `M(n)`, computed in parallel on the current rayon
/// pool.
pub fn exact_stats(n: usize) -> Result<ExactStats> {
    exact_stats_partitioned(n, rayon::current_num_threads() * 8)
}

/// Same as [`exact_stats`] with the outer loop split into `partitions`
/// contiguous chunks. The result does not depend on `partitions`.
pub fn exact_stats_partitioned(n: usize, partitions: usize) -> Result<ExactStats> {
    check_n(n)?;
    let meter = WordMeter::new(n);
    let acc = if n == 0 {
        let mut acc = Accumulator::EMPTY;
        for &w in monotone_words(0) {
            meter.measure(w, &mut acc);
        }
        acc
    } else {
        let lows = monotone_words(n - 1);
        let chunk = lows.len().div_ceil(partitions.max(1));
        lows.par_chunks(chunk)
            .map(|gs| {
                let mut acc = Accumulator::EMPTY;
                for &g in gs {
                    for_each_word_with_low(n, g, &mut |w| meter.measure(w, &mut acc));
                }
                acc
            })
            .reduce(|| Accumulator::EMPTY, Accumulator::merge)
    };

    let count = BigInt::from(acc.count);
    let scale = BigInt::from(1u64) << n;
    Ok(ExactStats {
        n,
        count: BigUint::from(acc.count),
        mean_avg_sensitivity: BigRational::new(BigInt::from(acc.scaled_sum), &count * scale),
        max_avg_sensitivity: ExactFraction::new(acc.max, n as u32),
        min_avg_sensitivity: ExactFraction::new(acc.min, n as u32),
        special_fraction: BigRational::new(BigInt::from(acc.special), count),
        special_count: acc.special,
    })
}
