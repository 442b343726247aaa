//! Shared test-side oracles: exhaustive enumeration of weighted
//! compositions, independent of the library's dynamic programming.

use std::collections::BTreeMap;

use num_rational::BigRational;
use num_traits::{One, Zero};

use eqparts::PartSet;

/// Every composition of `n` with positive parts in the support, with its
/// weight product. Exponential in `n`; intended for `n <= 12` or so.
pub fn enumerate_weighted_compositions(set: &PartSet, n: u64) -> Vec<(Vec<u64>, BigRational)> {
    let mut out = Vec::new();
    let mut prefix = Vec::new();
    recurse(set, n, &mut prefix, BigRational::one(), &mut out);
    out
}

fn recurse(
    set: &PartSet,
    remaining: u64,
    prefix: &mut Vec<u64>,
    weight: BigRational,
    out: &mut Vec<(Vec<u64>, BigRational)>,
) {
    if remaining == 0 {
        out.push((prefix.clone(), weight));
        return;
    }
    for j in 1..=remaining {
        let w = set.coefficient(j);
        if w.is_zero() {
            continue;
        }
        prefix.push(j);
        recurse(set, remaining - j, prefix, &weight * &w, out);
        prefix.pop();
    }
}

/// Weight mass of compositions of `n`, bucketed by the number of parts.
pub fn weight_by_length(set: &PartSet, n: u64) -> BTreeMap<usize, BigRational> {
    let mut buckets: BTreeMap<usize, BigRational> = BTreeMap::new();
    for (composition, weight) in enumerate_weighted_compositions(set, n) {
        *buckets.entry(composition.len()).or_insert_with(BigRational::zero) += weight;
    }
    buckets
}

/// `D_n` by brute force: sum over shared lengths of the per-coordinate
/// weight masses.
pub fn brute_force_diagonal(tuple: &[PartSet], n: u64) -> BigRational {
    let buckets: Vec<BTreeMap<usize, BigRational>> =
        tuple.iter().map(|set| weight_by_length(set, n)).collect();
    let first = match buckets.first() {
        Some(b) => b,
        None => return BigRational::zero(),
    };
    let mut total = BigRational::zero();
    for (length, mass) in first {
        let mut product = mass.clone();
        for other in &buckets[1..] {
            match other.get(length) {
                Some(m) => product *= m,
                None => {
                    product = BigRational::zero();
                    break;
                }
            }
        }
        total += product;
    }
    total
}

/// Chi-square goodness-of-fit statistic of observed counts against exact
/// probabilities; returns `(statistic, degrees_of_freedom)`.
pub fn chi_square_statistic(observed: &[u64], probabilities: &[f64], draws: u64) -> (f64, usize) {
    assert_eq!(observed.len(), probabilities.len());
    let mut statistic = 0.0;
    for (count, p) in observed.iter().zip(probabilities) {
        let expected = p * draws as f64;
        assert!(expected > 0.0, "every cell needs positive mass");
        let diff = *count as f64 - expected;
        statistic += diff * diff / expected;
    }
    (statistic, observed.len() - 1)
}
