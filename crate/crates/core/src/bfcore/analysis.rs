//! Exact measurements on truth tables: derivatives, activities,
//! sensitivities, monotonicity and the extremal points of monotone functions.

use serde::Serialize;

use super::fraction::ExactFraction;
use super::truth_table::TruthTable;
use crate::error::{Error, Result};

/// Activities of all `n` variables, indexed from `x_1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ActivityVector(pub Vec<ExactFraction>);

impl ActivityVector {
    pub fn sum(&self) -> ExactFraction {
        let k = self
            .0
            .iter()
            .map(|a| a.log2_denominator())
            .max()
            .unwrap_or(0);
        let num = self
            .0
            .iter()
            .map(|a| a.numerator() << (k - a.log2_denominator()))
            .sum();
        ExactFraction::new(num, k)
    }
}

/// Sorted, duplicate-free set of point indices of the `n`-cube.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PointSet {
    pub n: usize,
    pub members: Vec<usize>,
}

impl PointSet {
    fn from_table(t: &TruthTable) -> Self {
        PointSet {
            n: t.n(),
            members: t.ones().collect(),
        }
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }
}

/// Number of ones of a function on each layer `E^{n,k}`, `k = 0..=n`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(transparent)]
pub struct LayerProfile {
    pub counts: Vec<u64>,
}

/// `g(x) = f(x with x_j = 0) XOR f(x with x_j = 1)`.
pub fn partial_derivative(f: &TruthTable, j: usize) -> Result<TruthTable> {
    let b = f.check_variable(j)?;
    Ok(derivative_bit(f, b))
}

fn derivative_bit(f: &TruthTable, b: usize) -> TruthTable {
    f.zip_with(&f.neighbor_view(b), |a, c| a ^ c)
}

/// Fraction of the `2^n` points at which toggling `x_j` changes `f`.
pub fn activity(f: &TruthTable, j: usize) -> Result<ExactFraction> {
    let b = f.check_variable(j)?;
    Ok(activity_bit(f, b))
}

fn activity_bit(f: &TruthTable, b: usize) -> ExactFraction {
    ExactFraction::new(derivative_bit(f, b).count_ones(), f.n() as u32)
}

pub fn activity_vector(f: &TruthTable) -> ActivityVector {
    ActivityVector((0..f.n()).map(|b| activity_bit(f, b)).collect())
}

/// Number of Hamming neighbours of `x` on which `f` takes the other value.
pub fn pointwise_sensitivity(f: &TruthTable, x: usize) -> Result<u32> {
    f.check_point(x)?;
    let v = f.get(x);
    Ok((0..f.n()).filter(|&b| f.get(x ^ (1 << b)) != v).count() as u32)
}

/// Sum of the activities of all variables.
pub fn average_sensitivity(f: &TruthTable) -> ExactFraction {
    activity_vector(f).sum()
}

/// Mean of [`pointwise_sensitivity`] over every point, computed point by
/// point. Always equal to [`average_sensitivity`].
pub fn average_sensitivity_pointwise(f: &TruthTable) -> ExactFraction {
    let total: u64 = (0..f.len())
        .map(|x| pointwise_sensitivity(f, x).unwrap() as u64)
        .sum();
    ExactFraction::new(total, f.n() as u32)
}

/// Checks `f(x) <= f(x + e_j)` across every cover edge of the cube.
pub fn is_monotone(f: &TruthTable) -> bool {
    (0..f.n()).all(|b| {
        let up = f.neighbor_view(b);
        let var = TruthTable::variable(f.n(), b);
        // a one at x (x_b = 0) whose upper neighbour is a zero
        f.words()
            .iter()
            .zip(up.words())
            .zip(var.words())
            .all(|((&v, &u), &has)| v & !u & !has == 0)
    })
}

/// Table of minimal ones: points where `f = 1` and every lower cover is 0.
pub(crate) fn minimal_ones_table(f: &TruthTable) -> TruthTable {
    let mut acc = f.clone();
    for b in 0..f.n() {
        let below = f.neighbor_view(b);
        let var = TruthTable::variable(f.n(), b);
        let blocked = below.zip_with(&var, |v, has| v & has);
        acc = acc.zip_with(&blocked, |a, bl| a & !bl);
    }
    acc
}

/// Table of maximal zeros: points where `f = 0` and every upper cover is 1.
pub(crate) fn maximal_zeros_table(f: &TruthTable) -> TruthTable {
    let all = TruthTable::constant(f.n(), true).unwrap();
    let mut acc = all.zip_with(f, |a, v| a & !v);
    for b in 0..f.n() {
        let above = f.neighbor_view(b);
        let var = TruthTable::variable(f.n(), b);
        let blocked = above.zip_with(&var, |v, has| !v & !has);
        acc = acc.zip_with(&blocked, |a, bl| a & !bl);
    }
    acc
}

/// Minimal ones and maximal zeros of a monotone function.
pub fn extremal_points(f: &TruthTable) -> Result<(PointSet, PointSet)> {
    if !is_monotone(f) {
        return Err(Error::NotMonotone);
    }
    Ok((
        PointSet::from_table(&minimal_ones_table(f)),
        PointSet::from_table(&maximal_zeros_table(f)),
    ))
}

pub fn layer_profile(f: &TruthTable) -> LayerProfile {
    let mut counts = vec![0u64; f.n() + 1];
    for x in f.ones() {
        counts[x.count_ones() as usize] += 1;
    }
    LayerProfile { counts }
}

/// Whether toggling `f` at `x` keeps a monotone `f` monotone.
///
/// Only the covers of `x` are inspected. The result is meaningful only
/// when `f` is monotone and `x < 2^n`; callers that cannot guarantee that
/// should use [`flip_preserves_monotone`].
#[inline]
pub fn flip_allowed_unchecked(f: &TruthTable, x: usize) -> bool {
    if f.get(x) {
        // 1 -> 0: every lower cover must already be 0
        (0..f.n()).all(|b| x >> b & 1 == 0 || !f.get(x ^ (1 << b)))
    } else {
        // 0 -> 1: every upper cover must already be 1
        (0..f.n()).all(|b| x >> b & 1 == 1 || f.get(x | (1 << b)))
    }
}

/// Whether toggling `f` at `x` yields a monotone function.
pub fn flip_preserves_monotone(f: &TruthTable, x: usize) -> Result<bool> {
    f.check_point(x)?;
    if !is_monotone(f) {
        return Err(Error::NotMonotone);
    }
    Ok(flip_allowed_unchecked(f, x))
}
