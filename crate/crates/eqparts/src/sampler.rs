//! Exact random generation of weighted compositions, and Monte Carlo
//! estimation of the equal-parts probability.
//!
//! A composition is built sequentially: with `t` still to place, part `j`
//! is chosen with probability `p_j * P_{t-j} / P_t`, which makes every
//! composition `(c_1, .., c_k)` of `n` appear with probability
//! `p_{c_1} * .. * p_{c_k} / P_n`, the weight-proportional law the rest of
//! the crate computes with.
//!
//! Selection is exact: the cumulative weights at each step are cleared to
//! integers by a common denominator and the random draw is a uniform
//! arbitrary-precision integer below their total, so no floating-point
//! rounding enters the distribution. The generator is ChaCha12 (see
//! [`RNG_ALGORITHM`]), seeded from a caller-supplied 64-bit seed; Monte
//! Carlo derives one sub-seed per tuple coordinate from the master seed
//! with a SplitMix64 step, so runs are reproducible coordinate by
//! coordinate.

use num_bigint::{BigInt, BigUint, RandBigInt};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use rand::SeedableRng;
use rand_chacha::ChaCha12Rng;

use crate::enumerate::{totals_sequence, EnumerateOptions};
use crate::error::{Error, Result};
use crate::partset::PartSet;

/// Identifier of the random number generator, for output metadata.
pub const RNG_ALGORITHM: &str = "chacha12";

/// Cache the per-step scaled weights only while the table stays this size.
const CACHE_ENTRY_LIMIT: u64 = 4_000_000;

/// A seeded sampler for weight-proportional compositions of `n`.
///
/// Holds the prefix totals `P_0 .. P_n`, their integer-cleared forms, and
/// the generator state. Each [`SamplerState::sample_composition`] call
/// advances the generator; two states built with equal arguments produce
/// identical draw sequences.
pub struct SamplerState {
    pub part_set: PartSet,
    pub n: u64,
    pub seed: u64,
    /// Positive support restricted to parts `<= n`, ascending.
    parts: Vec<(u64, BigRational)>,
    totals: Vec<BigRational>,
    /// Common denominator clearing every `p_j * P_t` to an integer.
    scale: BigRational,
    /// `P_t * scale` for `t = 0..n`, the per-step draw bounds.
    scaled_totals: Vec<BigUint>,
    /// `p_j * P_{t-j} * scale` per step, kept when small enough.
    step_weights: Option<Vec<Vec<BigUint>>>,
    rng: ChaCha12Rng,
}

fn sub_seed(master: u64, index: usize) -> u64 {
    // one SplitMix64 step per coordinate index
    let mut z = master.wrapping_add(0x9E37_79B9_7F4A_7C15u64.wrapping_mul(index as u64 + 1));
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

fn exact_biguint(value: &BigRational) -> BigUint {
    debug_assert!(value.denom().is_one(), "scale clears the denominator");
    debug_assert!(!value.is_negative());
    value.numer().magnitude().clone()
}

impl SamplerState {
    pub fn new(set: &PartSet, n: u64, seed: u64) -> Result<Self> {
        Self::new_with(set, n, seed, &EnumerateOptions::default())
    }

    pub fn new_with(
        set: &PartSet,
        n: u64,
        seed: u64,
        options: &EnumerateOptions,
    ) -> Result<Self> {
        if set.has_zero_part() {
            return Err(Error::ZeroPart);
        }
        if n > options.n_max_cap {
            return Err(Error::CapacityExceeded {
                requested: n,
                cap: options.n_max_cap,
            });
        }
        let totals = totals_sequence(set, n);
        if totals[n as usize].is_zero() {
            return Err(Error::NoCompositions { n });
        }
        let parts = match set.finite_positive_parts() {
            Some(mut items) => {
                items.retain(|(part, _)| *part <= n);
                items.sort_by_key(|(part, _)| *part);
                items
            }
            None => {
                let (first, step) = set.positive_progression().unwrap();
                (first..=n)
                    .step_by(step as usize)
                    .map(|part| (part, BigRational::one()))
                    .collect()
            }
        };
        // lcm(weight denominators) * lcm(total denominators) clears every
        // product p_j * P_t
        let weight_denom = parts
            .iter()
            .fold(BigInt::one(), |acc, (_, w)| acc.lcm(w.denom()));
        let total_denom = totals
            .iter()
            .fold(BigInt::one(), |acc, p| acc.lcm(p.denom()));
        let scale = BigRational::from_integer(weight_denom * total_denom);
        let scaled_totals = totals.iter().map(|p| exact_biguint(&(p * &scale))).collect();
        let mut state = SamplerState {
            part_set: set.clone(),
            n,
            seed,
            parts,
            totals,
            scale,
            scaled_totals,
            step_weights: None,
            rng: ChaCha12Rng::seed_from_u64(seed),
        };
        if (n + 1).saturating_mul(state.parts.len() as u64) <= CACHE_ENTRY_LIMIT {
            let table = (0..=n).map(|t| state.step_weight_row(t)).collect();
            state.step_weights = Some(table);
        }
        Ok(state)
    }

    /// `p_j * P_{t-j} * scale` for every part `j <= t`, aligned with
    /// `self.parts` (truncated at the first part exceeding `t`).
    fn step_weight_row(&self, t: u64) -> Vec<BigUint> {
        self.parts
            .iter()
            .take_while(|(j, _)| *j <= t)
            .map(|(j, w)| exact_biguint(&(w * &self.totals[(t - j) as usize] * &self.scale)))
            .collect()
    }

    /// One weight-proportional composition of `n`; advances the generator.
    pub fn sample_composition(&mut self) -> Vec<u64> {
        let mut remaining = self.n;
        let mut composition = Vec::new();
        while remaining > 0 {
            let mut draw = self
                .rng
                .gen_biguint_below(&self.scaled_totals[remaining as usize]);
            let row;
            let weights = match &self.step_weights {
                Some(table) => &table[remaining as usize],
                None => {
                    row = self.step_weight_row(remaining);
                    &row
                }
            };
            let mut chosen = None;
            for (idx, weight) in weights.iter().enumerate() {
                if draw < *weight {
                    chosen = Some(self.parts[idx].0);
                    break;
                }
                draw -= weight;
            }
            let part = chosen.expect("step weights sum to the draw bound");
            composition.push(part);
            remaining -= part;
        }
        debug_assert_eq!(composition.iter().sum::<u64>(), self.n);
        debug_assert!(composition
            .iter()
            .all(|j| !self.part_set.coefficient(*j).is_zero()));
        composition
    }
}

/// Estimate of `pi_n` for a tuple by independent sampling, with the
/// binomial standard error `sqrt(p(1-p)/trials)`. Deterministic per seed.
pub fn monte_carlo_pi(
    tuple: &[PartSet],
    n: u64,
    trials: u64,
    seed: u64,
) -> Result<(f64, f64)> {
    monte_carlo_pi_with(tuple, n, trials, seed, &EnumerateOptions::default())
}

pub fn monte_carlo_pi_with(
    tuple: &[PartSet],
    n: u64,
    trials: u64,
    seed: u64,
    options: &EnumerateOptions,
) -> Result<(f64, f64)> {
    assert!(!tuple.is_empty(), "the tuple must have at least one set");
    assert!(trials >= 1, "at least one trial is required");
    let mut states: Vec<SamplerState> = tuple
        .iter()
        .enumerate()
        .map(|(i, set)| SamplerState::new_with(set, n, sub_seed(seed, i), options))
        .collect::<Result<_>>()?;
    let mut hits = 0u64;
    for _ in 0..trials {
        let mut counts = states.iter_mut().map(|s| s.sample_composition().len());
        let first = counts.next().expect("nonempty tuple");
        if counts.all(|k| k == first) {
            hits += 1;
        }
    }
    let estimate = hits as f64 / trials as f64;
    let standard_error = (estimate * (1.0 - estimate) / trials as f64).sqrt();
    Ok((estimate, standard_error))
}
