//! Approximately uniform sampling of monotone Boolean functions.
//!
//! The chain is single-site Metropolis on `M(n)`: pick a point uniformly at
//! random and toggle the function there if the result stays monotone,
//! otherwise stay put. Proposals are symmetric, so the uniform law on
//! `M(n)` is stationary; self-loops make the chain aperiodic, and any
//! monotone function can be emptied one minimal one at a time, so it is
//! irreducible.
//!
//! Random streams: chain `i` of a run with seed `s` draws from
//! `ChaCha8Rng::seed_from_u64(s)` with stream number `i` (rand_chacha 0.9).
//! A proposed point is the top `n` bits of one `next_u64` draw. Both choices
//! are part of the reproducibility contract; changing either changes every
//! sampled output.

use rand::{RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::asymptotics::classify_unchecked;
use crate::bfcore::{average_sensitivity, flip_allowed_unchecked, is_monotone, TruthTable};
use crate::enumeration::MIN_SPECIAL_VARS;
use crate::error::{Error, Result};

pub const MIN_SAMPLER_VARS: usize = 2;
pub const MAX_SAMPLER_VARS: usize = 20;

/// Above this potential scale reduction the run is flagged as not converged.
pub const R_HAT_THRESHOLD: f64 = 1.1;

/// Run configuration. One sweep is `2^n` proposals.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct ChainConfig {
    pub seed: u64,
    pub burn_in_sweeps: u64,
    pub thinning_sweeps: u64,
    pub samples_per_chain: u64,
    pub chains: u64,
}

impl Default for ChainConfig {
    fn default() -> Self {
        ChainConfig {
            seed: 0x6d6f_6e6f_7365_6e73,
            burn_in_sweeps: 64,
            thinning_sweeps: 8,
            samples_per_chain: 2000,
            chains: 4,
        }
    }
}

impl ChainConfig {
    pub fn validate(&self) -> Result<()> {
        if self.burn_in_sweeps == 0 {
            return Err(Error::InvalidConfig("burn-in sweeps must be positive"));
        }
        if self.thinning_sweeps == 0 {
            return Err(Error::InvalidConfig("thinning sweeps must be positive"));
        }
        if self.samples_per_chain < 2 {
            return Err(Error::InvalidConfig("need at least 2 samples per chain"));
        }
        if self.chains < 2 {
            return Err(Error::InvalidConfig("need at least 2 chains"));
        }
        Ok(())
    }
}

fn check_n(n: usize) -> Result<()> {
    if (MIN_SAMPLER_VARS..=MAX_SAMPLER_VARS).contains(&n) {
        Ok(())
    } else {
        Err(Error::VariableCountOutOfRange {
            n,
            min: MIN_SAMPLER_VARS,
            max: MAX_SAMPLER_VARS,
        })
    }
}

/// One Markov chain over `M(n)`.
#[derive(Debug, Clone)]
pub struct MonotoneChain {
    state: TruthTable,
    rng: ChaCha8Rng,
    proposals: u64,
    accepted: u64,
}

impl MonotoneChain {
    /// Chain number `chain_index` of a run seeded with `seed`, started at
    /// the threshold function `popcount(x) >= ceil(n/2)`.
    pub fn new(n: usize, seed: u64, chain_index: u64) -> Result<Self> {
        check_n(n)?;
        let threshold = n.div_ceil(2) as u32;
        let state = TruthTable::from_fn(n, |x| x.count_ones() >= threshold)?;
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        rng.set_stream(chain_index);
        Ok(MonotoneChain {
            state,
            rng,
            proposals: 0,
            accepted: 0,
        })
    }

    pub fn state(&self) -> &TruthTable {
        &self.state
    }

    pub fn into_state(self) -> TruthTable {
        self.state
    }

    pub fn proposals(&self) -> u64 {
        self.proposals
    }

    pub fn accepted(&self) -> u64 {
        self.accepted
    }

    /// One proposal; returns whether the state changed.
    #[inline]
    pub fn step(&mut self) -> bool {
        let n = self.state.n();
        let x = (self.rng.next_u64() >> (64 - n)) as usize;
        self.proposals += 1;
        let moved = flip_allowed_unchecked(&self.state, x);
        if moved {
            self.state.toggle(x);
            self.accepted += 1;
            if cfg!(debug_assertions) && self.accepted % 1000 == 0 {
                debug_assert!(is_monotone(&self.state));
            }
        }
        moved
    }

    pub fn run_sweeps(&mut self, sweeps: u64) {
        let per_sweep = self.state.len() as u64;
        for _ in 0..sweeps * per_sweep {
            self.step();
        }
    }
}

/// State of chain 0 after `cfg.burn_in_sweeps` sweeps.
pub fn mcmc_sample(n: usize, cfg: &ChainConfig) -> Result<TruthTable> {
    cfg.validate()?;
    let mut chain = MonotoneChain::new(n, cfg.seed, 0)?;
    chain.run_sweeps(cfg.burn_in_sweeps);
    Ok(chain.into_state())
}

/// Monte-Carlo estimate of the mean average sensitivity over `M(n)`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Estimate {
    pub mean: f64,
    /// `sqrt(s^2 / N)` over all pooled samples. Thinning is the only guard
    /// against autocorrelation; no further correction is applied.
    pub stderr: f64,
    pub n_samples: u64,
    /// Gelman-Rubin potential scale reduction across chains.
    pub r_hat: f64,
    pub converged: bool,
    pub special_fraction_estimate: f64,
    pub chain_means: Vec<f64>,
}

struct ChainSummary {
    values: Vec<f64>,
    special: u64,
}

fn run_chain(n: usize, cfg: &ChainConfig, index: u64) -> Result<ChainSummary> {
    let mut chain = MonotoneChain::new(n, cfg.seed, index)?;
    chain.run_sweeps(cfg.burn_in_sweeps);
    let mut values = Vec::with_capacity(cfg.samples_per_chain as usize);
    let mut special = 0;
    for _ in 0..cfg.samples_per_chain {
        chain.run_sweeps(cfg.thinning_sweeps);
        values.push(average_sensitivity(chain.state()).to_f64());
        if n >= MIN_SPECIAL_VARS && !classify_unchecked(chain.state()).is_empty() {
            special += 1;
        }
    }
    Ok(ChainSummary { values, special })
}

/// Runs `cfg.chains` independent chains on the current rayon pool and pools
/// their thinned samples. The result does not depend on the pool size.
pub fn monte_carlo_stats(n: usize, cfg: &ChainConfig) -> Result<Estimate> {
    check_n(n)?;
    cfg.validate()?;
    let chains = (0..cfg.chains)
        .into_par_iter()
        .map(|i| run_chain(n, cfg, i))
        .collect::<Result<Vec<_>>>()?;

    let per_chain: Vec<&[f64]> = chains.iter().map(|c| c.values.as_slice()).collect();
    let all: Vec<f64> = chains
        .iter()
        .flat_map(|c| c.values.iter().copied())
        .collect();
    let total = all.len() as u64;
    let mean = mean(&all);
    let stderr = (sample_variance(&all) / total as f64).sqrt();
    let r_hat = potential_scale_reduction(&per_chain);
    let special: u64 = chains.iter().map(|c| c.special).sum();
    Ok(Estimate {
        mean,
        stderr,
        n_samples: total,
        r_hat,
        converged: r_hat <= R_HAT_THRESHOLD,
        special_fraction_estimate: special as f64 / total as f64,
        chain_means: per_chain.iter().map(|c| self::mean(c)).collect(),
    })
}

fn mean(xs: &[f64]) -> f64 {
    xs.iter().sum::<f64>() / xs.len() as f64
}

fn sample_variance(xs: &[f64]) -> f64 {
    let m = mean(xs);
    xs.iter().map(|x| (x - m) * (x - m)).sum::<f64>() / (xs.len() as f64 - 1.0)
}

/// Classic (non-split) Gelman-Rubin statistic for equal-length chains.
pub fn potential_scale_reduction(chains: &[&[f64]]) -> f64 {
    let len = chains.iter().map(|c| c.len()).min().unwrap_or(0);
    if chains.len() < 2 || len < 2 {
        return f64::NAN;
    }
    let trimmed: Vec<&[f64]> = chains.iter().map(|c| &c[..len]).collect();
    let means: Vec<f64> = trimmed.iter().map(|c| mean(c)).collect();
    let within = trimmed.iter().map(|c| sample_variance(c)).sum::<f64>() / chains.len() as f64;
    let l = len as f64;
    let between = l * sample_variance(&means);
    if within == 0.0 {
        return if between == 0.0 { 1.0 } else { f64::INFINITY };
    }
    let pooled = (l - 1.0) / l * within + between / l;
    (pooled / within).sqrt()
}
