//! Report types and their CSV / JSON renderings.
//!
//! Decimal output never depends on locale: `.` as decimal point, `,` as
//! CSV separator, `\n` line endings. Floating values in CSV carry 12
//! significant digits.

use std::fmt::Write as _;

use num_rational::BigRational;
use serde::Serialize;

use crate::asymptotics::{
    classify_special, expected_avg_sensitivity_exact,
    expected_avg_sensitivity_odd_components_exact, MIN_CLASSIFY_VARS,
};
use crate::bfcore::{
    activity_vector, average_sensitivity, average_sensitivity_pointwise, extremal_points,
    is_monotone, layer_profile, ExactFraction, TruthTable,
};
use crate::enumeration::{exact_stats, MAX_ENUM_VARS};
use crate::error::{Error, Result};
use crate::sampler::{monte_carlo_stats, ChainConfig, MAX_SAMPLER_VARS};

/// Upper end of the curve range.
pub const MAX_CURVE_VARS: usize = 400;

pub const CURVE_HEADER: &str = "n,parity,s_hat,s_hat_1,s_hat_2,sqrt_2n_over_pi";

/// `x` with 12 significant digits, trailing zeros kept.
pub fn format_sig12(x: f64) -> String {
    if x == 0.0 || !x.is_finite() {
        return format!("{x:.11}");
    }
    // the exponent of the already-rounded scientific form decides the
    // number of fractional digits
    let sci = format!("{x:.11e}");
    let exp: i32 = sci[sci.find('e').unwrap() + 1..].parse().unwrap();
    if (0..=11).contains(&exp) || (-5..0).contains(&exp) {
        let decimals = (11 - exp) as usize;
        format!("{x:.decimals$}")
    } else {
        sci
    }
}

fn rational_string(q: &BigRational) -> String {
    if q.is_integer() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

fn rational_f64(q: &BigRational) -> f64 {
    num_traits::ToPrimitive::to_f64(q).unwrap_or(f64::NAN)
}

/// Exact dyadic value as `{"num": "...", "log2_den": k, "float": x}`, in lowest terms.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct FractionJson {
    pub num: String,
    pub log2_den: u32,
    pub float: f64,
}

impl From<ExactFraction> for FractionJson {
    fn from(f: ExactFraction) -> Self {
        let f = f.reduced();
        FractionJson {
            num: f.numerator().to_string(),
            log2_den: f.log2_denominator(),
            float: f.to_f64(),
        }
    }
}

impl FractionJson {
    pub fn to_exact(&self) -> Option<ExactFraction> {
        Some(ExactFraction::new(self.num.parse().ok()?, self.log2_den))
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct AnalysisReport {
    pub n: usize,
    pub hex: String,
    pub monotone: bool,
    pub activities: Vec<FractionJson>,
    pub average_sensitivity: FractionJson,
    pub minimal_ones: Option<Vec<usize>>,
    pub maximal_zeros: Option<Vec<usize>>,
    pub layer_profile: Vec<u64>,
    /// `null` for non-monotone input or fewer than three variables.
    pub special_classes: Option<Vec<&'static str>>,
}

/// Full analysis of the function given by `hex` on `n` variables.
pub fn analyze(hex: &str, n: usize) -> Result<AnalysisReport> {
    let f = TruthTable::parse_hex(hex, n)?;
    analyze_table(&f)
}

pub fn analyze_table(f: &TruthTable) -> Result<AnalysisReport> {
    let activities = activity_vector(f);
    let s = average_sensitivity(f);
    if s != average_sensitivity_pointwise(f) || s != activities.sum() {
        return Err(Error::InvariantViolation(format!(
            "average sensitivity paths disagree for {f:?}"
        )));
    }
    let monotone = is_monotone(f);
    let (minimal_ones, maximal_zeros) = if monotone {
        let (mins, maxz) = extremal_points(f)?;
        (Some(mins.members), Some(maxz.members))
    } else {
        (None, None)
    };
    let special_classes = if monotone && f.n() >= MIN_CLASSIFY_VARS {
        Some(classify_special(f)?.names())
    } else {
        None
    };
    Ok(AnalysisReport {
        n: f.n(),
        hex: f.to_hex(),
        monotone,
        activities: activities.0.into_iter().map(FractionJson::from).collect(),
        average_sensitivity: s.into(),
        minimal_ones,
        maximal_zeros,
        layer_profile: layer_profile(f).counts,
        special_classes,
    })
}

/// One point of the expected-average-sensitivity curve.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CurveRow {
    pub n: usize,
    pub parity: &'static str,
    pub s_hat: f64,
    pub s_hat_1: Option<f64>,
    pub s_hat_2: Option<f64>,
    pub sqrt_2n_over_pi: f64,
}

impl CurveRow {
    pub fn to_csv(&self) -> String {
        let opt = |v: Option<f64>| v.map(format_sig12).unwrap_or_default();
        format!(
            "{},{},{},{},{},{}",
            self.n,
            self.parity,
            format_sig12(self.s_hat),
            opt(self.s_hat_1),
            opt(self.s_hat_2),
            format_sig12(self.sqrt_2n_over_pi)
        )
    }
}

pub fn curve_row(n: usize) -> Result<CurveRow> {
    let s_hat = rational_f64(&expected_avg_sensitivity_exact(n)?);
    let (parity, s_hat_1, s_hat_2) = if n % 2 == 0 {
        ("even", None, None)
    } else {
        let (a, b) = expected_avg_sensitivity_odd_components_exact(n)?;
        ("odd", Some(rational_f64(&a)), Some(rational_f64(&b)))
    };
    Ok(CurveRow {
        n,
        parity,
        s_hat,
        s_hat_1,
        s_hat_2,
        sqrt_2n_over_pi: (2.0 * n as f64 / std::f64::consts::PI).sqrt(),
    })
}

pub fn curve_rows(n_min: usize, n_max: usize) -> Result<Vec<CurveRow>> {
    if !(2 <= n_min && n_min <= n_max && n_max <= MAX_CURVE_VARS) {
        return Err(Error::InvalidRange(format!(
            "need 2 <= min <= max <= {MAX_CURVE_VARS}, got {n_min}..={n_max}"
        )));
    }
    (n_min..=n_max).map(curve_row).collect()
}

/// Header plus one line per `n`.
pub fn curve_csv(n_min: usize, n_max: usize) -> Result<String> {
    let mut out = String::from(CURVE_HEADER);
    out.push('\n');
    for row in curve_rows(n_min, n_max)? {
        out.push_str(&row.to_csv());
        out.push('\n');
    }
    Ok(out)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum VerifyMode {
    Exact,
    Sample,
}

impl VerifyMode {
    pub fn as_str(self) -> &'static str {
        match self {
            VerifyMode::Exact => "exact",
            VerifyMode::Sample => "sample",
        }
    }
}

/// Closed-form estimate for a typical function next to the mean over all
/// of `M(n)`.
///
/// The two are different quantities: `s_hat_typical` describes the most
/// likely layer structure, `mean_over_all_monotone` averages uniformly over
/// every monotone function. `ratio` is `mean_over_all_monotone / s_hat_typical`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct VerifyReport {
    pub n: usize,
    pub mode: VerifyMode,
    pub s_hat_typical: f64,
    pub s_hat_typical_exact: String,
    pub mean_over_all_monotone: f64,
    /// Exact rational, exact mode only.
    pub mean_exact: Option<String>,
    /// Sample mode only.
    pub stderr: Option<f64>,
    pub ratio: f64,
    pub ratio_exact: Option<String>,
    /// Fraction of functions in at least one layer band (0 below n = 4).
    pub special_fraction: f64,
    pub special_fraction_exact: Option<String>,
    pub function_count: Option<String>,
    pub n_samples: Option<u64>,
    pub r_hat: Option<f64>,
    /// `"ok"`, or `"non_converged"` when sampling exceeded the r-hat threshold.
    pub status: &'static str,
}

pub const VERIFY_HEADER: &str = "n,mode,s_hat_typical,mean_over_all_monotone,mean_exact,stderr,\
ratio,ratio_exact,special_fraction,special_fraction_exact,function_count,n_samples,r_hat,status";

impl VerifyReport {
    pub fn to_csv(&self) -> String {
        let f = |v: Option<f64>| v.map(format_sig12).unwrap_or_default();
        let s = |v: &Option<String>| v.clone().unwrap_or_default();
        let mut out = String::from(VERIFY_HEADER);
        out.push('\n');
        writeln!(
            out,
            "{},{},{},{},{},{},{},{},{},{},{},{},{},{}",
            self.n,
            self.mode.as_str(),
            format_sig12(self.s_hat_typical),
            format_sig12(self.mean_over_all_monotone),
            s(&self.mean_exact),
            f(self.stderr),
            format_sig12(self.ratio),
            s(&self.ratio_exact),
            format_sig12(self.special_fraction),
            s(&self.special_fraction_exact),
            s(&self.function_count),
            self.n_samples.map(|v| v.to_string()).unwrap_or_default(),
            f(self.r_hat),
            self.status
        )
        .unwrap();
        out
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).unwrap()
    }
}

/// Compares the closed form against exhaustive enumeration (`2 <= n <= 6`).
pub fn verify_exact(n: usize) -> Result<VerifyReport> {
    if n > MAX_ENUM_VARS {
        return Err(Error::VariableCountOutOfRange {
            n,
            min: 2,
            max: MAX_ENUM_VARS,
        });
    }
    let s_hat = expected_avg_sensitivity_exact(n)?;
    let stats = exact_stats(n)?;
    let ratio = &stats.mean_avg_sensitivity / &s_hat;
    Ok(VerifyReport {
        n,
        mode: VerifyMode::Exact,
        s_hat_typical: rational_f64(&s_hat),
        s_hat_typical_exact: rational_string(&s_hat),
        mean_over_all_monotone: rational_f64(&stats.mean_avg_sensitivity),
        mean_exact: Some(rational_string(&stats.mean_avg_sensitivity)),
        stderr: None,
        ratio: rational_f64(&ratio),
        ratio_exact: Some(rational_string(&ratio)),
        special_fraction: rational_f64(&stats.special_fraction),
        special_fraction_exact: Some(rational_string(&stats.special_fraction)),
        function_count: Some(stats.count.to_string()),
        n_samples: None,
        r_hat: None,
        status: "ok",
    })
}

/// Compares the closed form against Markov-chain sampling (`2 <= n <= 20`).
pub fn verify_sample(n: usize, cfg: &ChainConfig) -> Result<VerifyReport> {
    if n > MAX_SAMPLER_VARS {
        return Err(Error::VariableCountOutOfRange {
            n,
            min: 2,
            max: MAX_SAMPLER_VARS,
        });
    }
    let s_hat = expected_avg_sensitivity_exact(n)?;
    let est = monte_carlo_stats(n, cfg)?;
    let s_hat_f = rational_f64(&s_hat);
    Ok(VerifyReport {
        n,
        mode: VerifyMode::Sample,
        s_hat_typical: s_hat_f,
        s_hat_typical_exact: rational_string(&s_hat),
        mean_over_all_monotone: est.mean,
        mean_exact: None,
        stderr: Some(est.stderr),
        ratio: est.mean / s_hat_f,
        ratio_exact: None,
        special_fraction: est.special_fraction_estimate,
        special_fraction_exact: None,
        function_count: None,
        n_samples: Some(est.n_samples),
        r_hat: Some(est.r_hat),
        status: if est.converged { "ok" } else { "non_converged" },
    })
}
