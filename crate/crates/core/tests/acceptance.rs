//! Acceptance suite: one PASS/FAIL line per criterion, tolerances pinned below.
//!
//! Run with `cargo test -p monosens --test acceptance`.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use monosens::asymptotics::{
    density_ratio, expected_avg_sensitivity, expected_avg_sensitivity_even,
    expected_avg_sensitivity_even_exact, expected_avg_sensitivity_odd_components_exact, ParityCase,
};
use monosens::bfcore::{average_sensitivity, average_sensitivity_pointwise};
use monosens::enumeration::{enumerate_monotone, exact_stats, ExactStats, DEDEKIND};
use monosens::report::curve_csv;
use monosens::sampler::{monte_carlo_stats, ChainConfig, MonotoneChain};
use monosens::TruthTable;
use num_bigint::BigInt;
use num_integer::binomial;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use statrs::distribution::{ChiSquared, ContinuousCDF};

const EVEN_10: f64 = 2.0828247070312;
const EVEN_10_TOL: f64 = 1e-9;
const ODD_9: f64 = 1.9188824;
const ODD_9_TOL: f64 = 1e-6;
const SCALING_TOL_EVEN: f64 = 0.02;
const SCALING_TOL_ODD: f64 = 0.05;
const DENSITY_TOL: f64 = 0.01;
const CHI_SQUARE_P_MIN: f64 = 0.001;
const SAMPLER_SIGMAS: f64 = 3.0;
const SAMPLER_STATES: u64 = 60_000;
const RANDOM_TABLES_PER_N: usize = 1_000;
const ONE_SECOND: Duration = Duration::from_secs(1);
const TEN_MINUTES: Duration = Duration::from_secs(600);

type Outcome = Result<String, String>;

fn ratio(num: i64, den: i64) -> BigRational {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

fn c(n: usize, k: usize) -> BigRational {
    BigRational::from_integer(binomial(BigInt::from(n), BigInt::from(k)))
}

fn inv_pow2(e: usize) -> BigRational {
    BigRational::new(BigInt::one(), BigInt::one() << e)
}

fn half() -> BigRational {
    ratio(1, 2)
}

/// One band of the odd-n estimator written out directly from the layer
/// picture: minimal ones on the lower layer `lo`, ones on the middle layer with
/// probability `p`, maximal zeros on the upper layer `hi`.
///
/// `e_lo`/`e_hi` are the exponents of the halving factors on the outer layers
/// and `w_lo`/`w_hi` the cover weights used in the middle-layer count.
fn band_oracle(
    n: usize,
    lo: usize,
    e_lo: usize,
    w_lo: usize,
    hi: usize,
    e_hi: usize,
    w_hi: usize,
) -> BigRational {
    let mid = lo + 1;
    let ones_mid = half()
        * (c(n, mid) + c(n, lo) * inv_pow2(e_lo) * BigRational::from_integer(w_lo.into())
            - c(n, hi) * inv_pow2(e_hi) * BigRational::from_integer(w_hi.into()));
    let p = ones_mid / c(n, mid);
    let one = BigRational::one();
    let below =
        half() * c(n, lo) * inv_pow2(e_lo) + half() * c(n, lo) * (&one - inv_pow2(e_lo)) * &p;
    let above = half() * c(n, hi) * inv_pow2(e_hi)
        + half() * c(n, hi) * (&one - inv_pow2(e_hi)) * (&one - &p);
    BigRational::from_integer(n.into()) * inv_pow2(n - 1) * (below + above)
}

fn within(x: f64, target: f64, rel: f64) -> bool {
    (x / target - 1.0).abs() <= rel
}

fn criterion_1() -> Outcome {
    let start = Instant::now();
    let m2 = exact_stats(2)
        .map_err(|e| e.to_string())?
        .mean_avg_sensitivity;
    let m3 = exact_stats(3)
        .map_err(|e| e.to_string())?
        .mean_avg_sensitivity;
    let elapsed = start.elapsed();
    let detail = format!("mean(2) = {m2}, mean(3) = {m3}, {elapsed:.2?}");
    if m2 == ratio(2, 3) && m3 == ratio(39, 40) && elapsed < ONE_SECOND {
        Ok(detail)
    } else {
        Err(detail)
    }
}

fn criterion_2(stats6: &mut Option<ExactStats>) -> Outcome {
    let mut counts = Vec::new();
    for n in 0..=5 {
        counts.push(enumerate_monotone(n, |_| {}).map_err(|e| e.to_string())?);
    }
    let start = Instant::now();
    let s6 = exact_stats(6).map_err(|e| e.to_string())?;
    let elapsed = start.elapsed();
    counts.push(s6.count.to_u64().unwrap_or(0));
    *stats6 = Some(s6);
    let detail = format!("counts {counts:?}, n = 6 in {elapsed:.2?}");
    if counts == DEDEKIND && elapsed < TEN_MINUTES {
        Ok(detail)
    } else {
        Err(detail)
    }
}

fn criterion_3() -> Outcome {
    let e4 = expected_avg_sensitivity_even_exact(4).map_err(|e| e.to_string())?;
    let e10 = expected_avg_sensitivity_even(10).map_err(|e| e.to_string())?;
    // n 2^-n C(n, n/2 - 1) (2^-(n/2+1) + 1)
    let oracle = |n: usize| {
        BigRational::from_integer(n.into())
            * inv_pow2(n)
            * c(n, n / 2 - 1)
            * (inv_pow2(n / 2 + 1) + BigRational::one())
    };
    let detail = format!("s_hat(4) = {e4}, s_hat(10) = {e10:.13}");
    if e4 == ratio(9, 8)
        && e4 == oracle(4)
        && (e10 - EVEN_10).abs() <= EVEN_10_TOL
        && expected_avg_sensitivity_even_exact(10).ok() == Some(oracle(10))
    {
        Ok(detail)
    } else {
        Err(detail)
    }
}

fn criterion_4() -> Outcome {
    let n = 9;
    let (s1, s2) = expected_avg_sensitivity_odd_components_exact(n).map_err(|e| e.to_string())?;
    let o1 = band_oracle(
        n,
        (n - 3) / 2,
        (n + 3) / 2,
        (n + 3) / 2,
        (n + 1) / 2,
        (n + 1) / 2,
        (n + 1) / 2,
    );
    let o2 = band_oracle(
        n,
        (n - 1) / 2,
        (n + 1) / 2,
        (n - 1) / 2,
        (n + 3) / 2,
        (n + 3) / 2,
        (n + 3) / 2,
    );
    let combined = expected_avg_sensitivity(n).map_err(|e| e.to_string())?;
    let detail = format!("s_hat_1 = {s1}, s_hat_2 = {s2}, s_hat = {combined:.8}");
    if s1 == ratio(504_441, 262_144)
        && s2 == ratio(250_803, 131_072)
        && s1 == o1
        && s2 == o2
        && (combined - ODD_9).abs() <= ODD_9_TOL
    {
        Ok(detail)
    } else {
        Err(format!("{detail}; oracle {o1}, {o2}"))
    }
}

fn criterion_5() -> Outcome {
    let start = Instant::now();
    let s200 = expected_avg_sensitivity(200).map_err(|e| e.to_string())?;
    let s201 = expected_avg_sensitivity(201).map_err(|e| e.to_string())?;
    let elapsed = start.elapsed();
    let m200 = (400.0 / std::f64::consts::PI).sqrt();
    let m201 = (402.0 / std::f64::consts::PI).sqrt();
    let detail = format!(
        "s_hat(200)/sqrt = {:.5}, s_hat(201)/sqrt = {:.5}, {elapsed:.2?}",
        s200 / m200,
        s201 / m201
    );
    if within(s200, m200, SCALING_TOL_EVEN)
        && within(s201, m201, SCALING_TOL_ODD)
        && elapsed < ONE_SECOND
    {
        Ok(detail)
    } else {
        Err(detail)
    }
}

fn criterion_6() -> Outcome {
    let rk = (6.0 * (210.0_f64 / 32.0 / 2.0).sqrt()).floor() as i64;
    let ru = (6.0 * (252.0_f64 / 4.0).sqrt()).floor() as i64;
    let mut sum = 0.0;
    for k in -rk..=rk {
        for t in -rk..=rk {
            for u in -ru..=ru {
                sum += density_ratio(10, ParityCase::Even, k, t, u).map_err(|e| e.to_string())?;
            }
        }
    }
    let target = 210.0 / 252.0;
    let detail = format!("grid |k|,|t| <= {rk}, |u| <= {ru}: mass {sum:.6} vs {target:.6}");
    if within(sum, target, DENSITY_TOL) {
        Ok(detail)
    } else {
        Err(detail)
    }
}

fn criterion_7(stats6: Option<&ExactStats>) -> Outcome {
    let cfg = ChainConfig::default();
    let mut chain = MonotoneChain::new(2, cfg.seed, 0).map_err(|e| e.to_string())?;
    chain.run_sweeps(cfg.burn_in_sweeps);
    let mut all = Vec::new();
    enumerate_monotone(2, |f| all.push(f.clone())).map_err(|e| e.to_string())?;
    let mut counts = vec![0u64; all.len()];
    for _ in 0..SAMPLER_STATES {
        chain.run_sweeps(1);
        let i = all
            .iter()
            .position(|f| f == chain.state())
            .ok_or("non-monotone state")?;
        counts[i] += 1;
    }
    let expected = SAMPLER_STATES as f64 / all.len() as f64;
    let stat: f64 = counts
        .iter()
        .map(|&o| (o as f64 - expected).powi(2) / expected)
        .sum();
    let p = ChiSquared::new((all.len() - 1) as f64).unwrap().sf(stat);

    let exact = match stats6 {
        Some(s) => s.mean_avg_sensitivity.clone(),
        None => {
            exact_stats(6)
                .map_err(|e| e.to_string())?
                .mean_avg_sensitivity
        }
    };
    let exact = exact.to_f64().unwrap();
    let est = monte_carlo_stats(6, &cfg).map_err(|e| e.to_string())?;
    let z = (est.mean - exact).abs() / est.stderr;
    let detail = format!(
        "n = 2 chi2 = {stat:.2} (p = {p:.3}); n = 6 mean {:.5} ± {:.5} vs {exact:.5} ({z:.2} se, r_hat {:.4})",
        est.mean, est.stderr, est.r_hat
    );
    if p > CHI_SQUARE_P_MIN && z <= SAMPLER_SIGMAS {
        Ok(detail)
    } else {
        Err(detail)
    }
}

fn criterion_8() -> Outcome {
    let mut worst = Vec::new();
    let mut ok = true;
    for n in 0..=5 {
        let s = exact_stats(n).map_err(|e| e.to_string())?;
        ok &= s.max_avg_sensitivity.le_sqrt(n as u64);
        worst.push(s.max_avg_sensitivity.to_string());
    }
    let detail = format!("max s^f for n = 0..5: {}", worst.join(", "));
    if ok {
        Ok(detail)
    } else {
        Err(detail)
    }
}

fn criterion_9() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    for n in 1..=10 {
        for _ in 0..RANDOM_TABLES_PER_N {
            let f = TruthTable::from_fn(n, |_| rng.random::<bool>()).unwrap();
            if average_sensitivity(&f) != average_sensitivity_pointwise(&f) {
                return Err(format!("mismatch at {f:?}"));
            }
        }
    }
    Ok(format!(
        "{RANDOM_TABLES_PER_N} random tables for each n = 1..10 agree exactly"
    ))
}

fn criterion_10() -> Outcome {
    let first = curve_csv(2, 30).map_err(|e| e.to_string())?;
    let second = curve_csv(2, 30).map_err(|e| e.to_string())?;
    if first != second {
        return Err("curve output differs between runs".into());
    }
    let mut even: Vec<(usize, f64)> = Vec::new();
    let mut odd: Vec<(usize, f64)> = Vec::new();
    for line in first.lines().skip(1) {
        let fields: Vec<&str> = line.split(',').collect();
        let n: usize = fields[0].parse().map_err(|_| line.to_string())?;
        let s: f64 = fields[2].parse().map_err(|_| line.to_string())?;
        match fields[1] {
            "even" => even.push((n, s)),
            "odd" => odd.push((n, s)),
            _ => return Err(format!("bad parity in {line}")),
        }
    }
    let increasing = |v: &[(usize, f64)]| v.windows(2).all(|w| w[0].1 < w[1].1);
    let at = |v: &[(usize, f64)], n| v.iter().find(|r| r.0 == n).map(|r| r.1);
    let spots_ok = at(&even, 4) == Some(1.125)
        && at(&even, 10).is_some_and(|s| (s - EVEN_10).abs() <= 1e-9)
        && at(&odd, 9).is_some_and(|s| (s - ODD_9).abs() <= ODD_9_TOL);
    let detail = format!(
        "{} rows, {} bytes; even/odd increasing: {}/{}",
        even.len() + odd.len(),
        first.len(),
        increasing(&even),
        increasing(&odd)
    );
    if even.len() + odd.len() == 29 && increasing(&even) && increasing(&odd) && spots_ok {
        Ok(detail)
    } else {
        Err(detail)
    }
}

/// Values pinned from the n = 6 enumeration rather than a closed form.
fn regression_n6(stats6: Option<&ExactStats>) -> Outcome {
    let s = stats6.ok_or("n = 6 enumeration unavailable")?;
    let special = ratio(7_701_973, 7_828_354);
    let detail = format!(
        "special fraction {} (~{:.6}), max s^f {} <= sqrt(6): {}",
        s.special_fraction,
        s.special_fraction.to_f64().unwrap(),
        s.max_avg_sensitivity,
        s.max_avg_sensitivity.le_sqrt(6)
    );
    if s.special_fraction == special && s.max_avg_sensitivity.le_sqrt(6) {
        Ok(detail)
    } else {
        Err(detail)
    }
}

fn main() -> ExitCode {
    let mut stats6 = None;
    let mut failures = 0;
    let mut report = |label: &str, name: &str, outcome: Outcome| {
        let (tag, detail) = match outcome {
            Ok(d) => ("PASS", d),
            Err(d) => {
                failures += 1;
                ("FAIL", d)
            }
        };
        println!("{tag} {label:>3} {name:<28} {detail}");
    };

    report("1", "exact enumeration oracle", criterion_1());
    report("2", "dedekind regression", criterion_2(&mut stats6));
    report("3", "even estimator values", criterion_3());
    report("4", "odd estimator values", criterion_4());
    report("5", "asymptotic scaling", criterion_5());
    report("6", "density normalization", criterion_6());
    report("7", "sampler uniformity", criterion_7(stats6.as_ref()));
    report("8", "monotone bound", criterion_8());
    report("9", "path equivalence", criterion_9());
    report("10", "curve reproduction", criterion_10());
    report("R", "n = 6 regression", regression_n6(stats6.as_ref()));

    if failures == 0 {
        ExitCode::SUCCESS
    } else {
        println!("{failures} acceptance check(s) failed");
        ExitCode::FAILURE
    }
}
