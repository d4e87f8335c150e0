use std::fmt;

use crate::error::{Error, Result};

/// Largest supported variable count; a table then occupies 2 MiB.
pub const MAX_VARS: usize = 24;

/// Positions whose index has bit `b` set, for `b < 6`, within one 64-bit word.
const VAR_WORD_MASKS: [u64; 6] = [
    0xAAAA_AAAA_AAAA_AAAA,
    0xCCCC_CCCC_CCCC_CCCC,
    0xF0F0_F0F0_F0F0_F0F0,
    0xFF00_FF00_FF00_FF00,
    0xFFFF_0000_FFFF_0000,
    0xFFFF_FFFF_0000_0000,
];

/// Bit-packed truth table of a Boolean function of `n` variables.
///
/// The value at point index `i` is bit `i` of the table, where variable
/// `x_j` (1-based) is bit `j - 1` of `i`. Flipping `x_j` is therefore a XOR
/// with `1 << (j - 1)`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct TruthTable {
    n: usize,
    words: Vec<u64>,
}

impl TruthTable {
    pub fn zero(n: usize) -> Result<Self> {
        check_vars(n)?;
        Ok(TruthTable {
            n,
            words: vec![0; word_count(n)],
        })
    }

    pub fn constant(n: usize, value: bool) -> Result<Self> {
        let mut t = Self::zero(n)?;
        if value {
            t.words.fill(u64::MAX);
            t.clear_tail();
        }
        Ok(t)
    }

    /// Builds a table by evaluating `f` at every point index.
    pub fn from_fn(n: usize, mut f: impl FnMut(usize) -> bool) -> Result<Self> {
        let mut t = Self::zero(n)?;
        for x in 0..t.len() {
            if f(x) {
                t.words[x >> 6] |= 1 << (x & 63);
            }
        }
        Ok(t)
    }

    /// Table for `n <= 6` from its bits packed in a single word.
    pub fn from_u64(n: usize, bits: u64) -> Result<Self> {
        if n > 6 {
            return Err(Error::VariableCountOutOfRange { n, min: 0, max: 6 });
        }
        if bits & !tail_mask(n) != 0 {
            return Err(Error::HexValueTooLarge { n });
        }
        Ok(TruthTable {
            n,
            words: vec![bits],
        })
    }

    pub(crate) fn from_words_unchecked(n: usize, words: Vec<u64>) -> Self {
        debug_assert_eq!(words.len(), word_count(n));
        let mut t = TruthTable { n, words };
        t.clear_tail();
        t
    }

    /// Parses a hex literal whose integer value has bit `i` equal to the
    /// function value at point `i`. An optional `0x` prefix and either
    /// letter case are accepted.
    pub fn parse_hex(text: &str, n: usize) -> Result<Self> {
        check_vars(n)?;
        let digits = text.trim();
        let digits = digits
            .strip_prefix("0x")
            .or_else(|| digits.strip_prefix("0X"))
            .unwrap_or(digits);
        if digits.is_empty() {
            return Err(Error::InvalidHex(text.to_string()));
        }
        let mut t = Self::zero(n)?;
        let len = t.len();
        for (k, c) in digits.chars().rev().enumerate() {
            let d = c
                .to_digit(16)
                .ok_or_else(|| Error::InvalidHex(text.to_string()))? as u64;
            if d == 0 {
                continue;
            }
            let pos = 4 * k;
            if pos >= len || (d >> (len - pos).min(4)) != 0 {
                return Err(Error::HexValueTooLarge { n });
            }
            t.words[pos >> 6] |= d << (pos & 63);
        }
        Ok(t)
    }

    /// Lowercase hex, zero-padded to `ceil(2^n / 4)` digits.
    pub fn to_hex(&self) -> String {
        let width = self.len().div_ceil(4);
        (0..width)
            .rev()
            .map(|k| {
                let pos = 4 * k;
                let d = (self.words[pos >> 6] >> (pos & 63)) & 0xf;
                char::from_digit(d as u32, 16).unwrap()
            })
            .collect()
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Number of points, `2^n`.
    pub fn len(&self) -> usize {
        1 << self.n
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn words(&self) -> &[u64] {
        &self.words
    }

    /// Value at point `x`. Panics if `x >= 2^n`.
    #[inline]
    pub fn get(&self, x: usize) -> bool {
        assert!(x < self.len(), "point {x} out of range");
        (self.words[x >> 6] >> (x & 63)) & 1 == 1
    }

    /// Checked variant of [`TruthTable::get`].
    pub fn value(&self, x: usize) -> Result<bool> {
        self.check_point(x)?;
        Ok(self.get(x))
    }

    #[inline]
    pub fn set(&mut self, x: usize, value: bool) {
        assert!(x < self.len(), "point {x} out of range");
        let bit = 1u64 << (x & 63);
        if value {
            self.words[x >> 6] |= bit;
        } else {
            self.words[x >> 6] &= !bit;
        }
    }

    #[inline]
    pub fn toggle(&mut self, x: usize) {
        assert!(x < self.len(), "point {x} out of range");
        self.words[x >> 6] ^= 1 << (x & 63);
    }

    pub fn count_ones(&self) -> u64 {
        self.words.iter().map(|w| w.count_ones() as u64).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    /// Point indices where the function is 1, ascending.
    pub fn ones(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(i, &w)| {
            let mut w = w;
            std::iter::from_fn(move || {
                if w == 0 {
                    return None;
                }
                let tz = w.trailing_zeros() as usize;
                w &= w - 1;
                Some(i * 64 + tz)
            })
        })
    }

    /// The dual function `x -> !f(!x)`.
    pub fn dual(&self) -> TruthTable {
        let top = self.len() - 1;
        let mut d = TruthTable::zero(self.n).unwrap();
        for x in 0..self.len() {
            if !self.get(top ^ x) {
                d.words[x >> 6] |= 1 << (x & 63);
            }
        }
        d
    }

    /// Table of `x -> f(x XOR e_b)` for the 0-based bit `b`.
    pub(crate) fn neighbor_view(&self, b: usize) -> TruthTable {
        debug_assert!(b < self.n);
        let words = if b < 6 {
            self.words
                .iter()
                .map(|&w| word_neighbor_view(w, b))
                .collect()
        } else {
            let stride = 1usize << (b - 6);
            (0..self.words.len())
                .map(|i| self.words[i ^ stride])
                .collect()
        };
        TruthTable::from_words_unchecked(self.n, words)
    }

    /// Table that is 1 exactly at points with bit `b` set.
    pub(crate) fn variable(n: usize, b: usize) -> TruthTable {
        debug_assert!(b < n);
        let words = (0..word_count(n))
            .map(|i| {
                if b < 6 {
                    VAR_WORD_MASKS[b]
                } else if i >> (b - 6) & 1 == 1 {
                    u64::MAX
                } else {
                    0
                }
            })
            .collect();
        TruthTable::from_words_unchecked(n, words)
    }

    pub(crate) fn zip_with(&self, other: &TruthTable, op: impl Fn(u64, u64) -> u64) -> TruthTable {
        debug_assert_eq!(self.n, other.n);
        let words = self
            .words
            .iter()
            .zip(&other.words)
            .map(|(&a, &b)| op(a, b))
            .collect();
        TruthTable::from_words_unchecked(self.n, words)
    }

    pub(crate) fn check_point(&self, x: usize) -> Result<()> {
        if x < self.len() {
            Ok(())
        } else {
            Err(Error::PointOutOfRange { x, n: self.n })
        }
    }

    pub(crate) fn check_variable(&self, j: usize) -> Result<usize> {
        if (1..=self.n).contains(&j) {
            Ok(j - 1)
        } else {
            Err(Error::VariableIndexOutOfRange { j, n: self.n })
        }
    }

    fn clear_tail(&mut self) {
        if self.n < 6 {
            self.words[0] &= tail_mask(self.n);
        }
    }
}

impl fmt::Debug for TruthTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "TruthTable(n={}, 0x{})", self.n, self.to_hex())
    }
}

/// Single-word form of [`TruthTable::neighbor_view`] for `b < 6`.
#[inline]
pub(crate) fn word_neighbor_view(w: u64, b: usize) -> u64 {
    let s = 1u32 << b;
    let hi = VAR_WORD_MASKS[b];
    ((w >> s) & !hi) | ((w << s) & hi)
}

/// Single-word form of [`TruthTable::variable`] for `b < 6`.
#[inline]
pub(crate) fn word_variable(b: usize) -> u64 {
    VAR_WORD_MASKS[b]
}

fn check_vars(n: usize) -> Result<()> {
    if n > MAX_VARS {
        Err(Error::VariableCountOutOfRange {
            n,
            min: 0,
            max: MAX_VARS,
        })
    } else {
        Ok(())
    }
}

fn word_count(n: usize) -> usize {
    if n < 6 {
        1
    } else {
        1 << (n - 6)
    }
}

fn tail_mask(n: usize) -> u64 {
    if n >= 6 {
        u64::MAX
    } else {
        (1u64 << (1 << n)) - 1
    }
}
