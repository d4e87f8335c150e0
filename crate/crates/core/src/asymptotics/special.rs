use serde::Serialize;

use crate::bfcore::{is_monotone, layer_profile, minimal_ones_table, TruthTable};
use crate::error::{Error, Result};

/// Layer-band memberships of a monotone function.
///
/// A function belongs to a band when all of its minimal ones lie on the
/// band's three layers and it equals 1 on every layer above the band. This
/// is the coarse structural class (often written `M_0(n)`); the finer class
/// of "special" functions used for the density asymptotics is not decided
/// here. The two odd bands overlap, so both odd flags can be set at once.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Hash, Serialize)]
pub struct SpecialClassSet {
    pub special_even: bool,
    pub special_odd_lower: bool,
    pub special_odd_upper: bool,
}

impl SpecialClassSet {
    pub fn is_empty(&self) -> bool {
        !(self.special_even || self.special_odd_lower || self.special_odd_upper)
    }

    pub fn names(&self) -> Vec<&'static str> {
        let mut out = Vec::new();
        if self.special_even {
            out.push("special_even");
        }
        if self.special_odd_lower {
            out.push("special_odd_lower");
        }
        if self.special_odd_upper {
            out.push("special_odd_upper");
        }
        out
    }
}

/// Smallest `n` for which the classification is computed.
pub const MIN_CLASSIFY_VARS: usize = 3;

/// Band `lo..=hi` for the minimal ones plus the first layer that must be
/// entirely ones.
struct Band {
    lo: usize,
    hi: usize,
    full_from: usize,
}

fn bands(n: usize) -> [Option<Band>; 3] {
    if n % 2 == 0 {
        [
            Some(Band {
                lo: n / 2 - 1,
                hi: n / 2 + 1,
                full_from: n / 2 + 2,
            }),
            None,
            None,
        ]
    } else {
        [
            None,
            Some(Band {
                lo: (n - 3) / 2,
                hi: (n + 1) / 2,
                full_from: (n + 3) / 2,
            }),
            Some(Band {
                lo: (n - 1) / 2,
                hi: (n + 3) / 2,
                full_from: (n + 5) / 2,
            }),
        ]
    }
}

/// Shared decision rule. `minimal_layers` has bit `k` set when some minimal
/// one lies on layer `k`; `full_layers` has bit `k` set when `f` is 1 on the
/// whole layer `k`.
pub(crate) fn classify_layers(n: usize, minimal_layers: u32, full_layers: u32) -> SpecialClassSet {
    let fits = |band: &Option<Band>| {
        band.as_ref().is_some_and(|b| {
            let outside_band = !(((1u32 << (b.hi + 1)) - 1) & !((1u32 << b.lo) - 1));
            let must_be_full = ((1u32 << (n + 1)) - 1) & !((1u32 << b.full_from) - 1);
            minimal_layers & outside_band == 0 && full_layers & must_be_full == must_be_full
        })
    };
    let [even, lower, upper] = bands(n);
    SpecialClassSet {
        special_even: fits(&even),
        special_odd_lower: fits(&lower),
        special_odd_upper: fits(&upper),
    }
}

/// Band memberships of a monotone function with at least
/// [`MIN_CLASSIFY_VARS`] variables.
pub fn classify_special(f: &TruthTable) -> Result<SpecialClassSet> {
    let n = f.n();
    if n < MIN_CLASSIFY_VARS {
        return Err(Error::VariableCountOutOfRange {
            n,
            min: MIN_CLASSIFY_VARS,
            max: crate::bfcore::MAX_VARS,
        });
    }
    if !is_monotone(f) {
        return Err(Error::NotMonotone);
    }
    Ok(classify_unchecked(f))
}

/// [`classify_special`] without the monotonicity and size checks.
pub(crate) fn classify_unchecked(f: &TruthTable) -> SpecialClassSet {
    let n = f.n();
    let minimal_layers = minimal_ones_table(f)
        .ones()
        .fold(0u32, |acc, x| acc | 1 << x.count_ones());
    let full_layers = layer_profile(f)
        .counts
        .iter()
        .enumerate()
        .filter(|&(k, &c)| c == binomial_u64(n, k))
        .fold(0u32, |acc, (k, _)| acc | 1 << k);
    classify_layers(n, minimal_layers, full_layers)
}

pub(crate) fn binomial_u64(n: usize, k: usize) -> u64 {
    let k = k.min(n - k);
    (0..k).fold(1u64, |acc, i| acc * (n - i) as u64 / (i + 1) as u64)
}
