//! Local-limit-theorem diagnostics.
//!
//! For a supercritical part set, the number of parts `X_n` of a uniform
//! (weight-proportional) composition of `n` satisfies a Gaussian local
//! limit theorem: with `mu_n = E X_n` and `sigma_n^2 = var X_n`,
//!
//! ```text
//! sup_x | sigma_n Pr(X_n = floor(mu_n + x sigma_n)) - phi(x) | -> 0,
//! ```
//!
//! where `phi` is the standard normal density. This module measures that
//! deviation exactly (up to certified interval rounding), together with
//! the pairing comparison `|pi_n * 2 sqrt(pi) sigma_n - 1|` that links the
//! equal-parts probability of a pair to `sigma_n`, and its m-fold version
//! `|pi_n(m) * sqrt(m) * (sqrt(2 pi) sigma_n)^{m-1} - 1|`.
//!
//! Moments come from the exact distribution of parts; only `sigma_n`
//! (a square root) and the Gaussian density itself introduce interval
//! rounding. Degenerate cases (`sigma_n = 0`, single-point distributions
//! at tiny `n`) produce a flagged report instead of an error: the
//! deviation then reads `phi(0) = 1/sqrt(2 pi)` and the pairing gap 1.

use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::enumerate::{equal_parts_probability, parts_distribution, PartsDistribution};
use crate::error::Result;
use crate::interval::{self, Interval};
use crate::partset::PartSet;

/// Internal working precision (bits) for the Gaussian evaluations.
const PREC: u64 = 96;

/// Exact-moment LLT diagnostics for one `(part_set, n)`.
#[derive(Debug, Clone)]
pub struct LltReport {
    pub part_set: PartSet,
    pub n: u64,
    /// Exact mean of the number of parts.
    pub mu_n: BigRational,
    /// `sqrt` of the exact variance.
    pub sigma_n: Interval,
    /// Certified enclosure of the sup deviation from the Gaussian density.
    pub deviation: Interval,
    /// `|pi_n * 2 sqrt(pi) sigma_n - 1|` for the pair `(part_set; part_set)`.
    pub pairing_gap: Interval,
    /// True when `sigma_n = 0` (single-point distribution); the deviation
    /// and gap then take their documented edge values.
    pub degenerate: bool,
}

/// Standard normal density at an interval argument.
fn gaussian_density(x: &Interval, prec: u64) -> Interval {
    let half = Interval::point(BigRational::new(1.into(), 2.into()));
    let exponent = (&(x * x) * &half).neg();
    &interval::exp(&exponent, prec) / &interval::pi(prec).mul_int(2).sqrt(prec)
}

fn phi_zero(prec: u64) -> Interval {
    interval::pi(prec).mul_int(2).sqrt(prec).recip()
}

/// `sup_x |sigma Pr(X_n = floor(mu + x sigma)) - phi(x)|`, exactly: on the
/// cell of `k` the candidates are the two endpoints `(k - mu)/sigma` and
/// `(k+1 - mu)/sigma`, plus `x = 0` when the cell contains it (the
/// density is unimodal, so the cell sup is among these).
fn deviation_sup(dist: &PartsDistribution, sigma: &Interval) -> Interval {
    let inv_sigma = sigma.recip();
    let mu = Interval::point(dist.mean.clone());
    let mut best = Interval::point(BigRational::zero());
    let mut left_phi: Option<Interval> = None;
    let mut prev_k: Option<u64> = None;
    for (k, p) in &dist.pmf {
        let x_lo = &(&Interval::from_int(*k as i64) - &mu) * &inv_sigma;
        let x_hi = &(&Interval::from_int(*k as i64 + 1) - &mu) * &inv_sigma;
        let phi_lo = match (prev_k, left_phi.take()) {
            // the right edge of cell k-1 is the left edge of cell k
            (Some(prev), Some(phi)) if prev + 1 == *k => phi,
            _ => gaussian_density(&x_lo, PREC),
        };
        let phi_hi = gaussian_density(&x_hi, PREC);
        let mass = sigma * &Interval::point(p.clone());
        let mut cell = (&mass - &phi_lo).abs().max_with(&(&mass - &phi_hi).abs());
        let contains_zero = x_lo.hi() <= &BigRational::zero() && x_hi.lo() > &BigRational::zero();
        if contains_zero {
            cell = cell.max_with(&(&mass - &phi_zero(PREC)).abs());
        }
        best = best.max_with(&cell);
        left_phi = Some(phi_hi);
        prev_k = Some(*k);
    }
    best
}

/// Full diagnostic report: exact moments, sup deviation, pairing gap.
pub fn llt_deviation(set: &PartSet, n: u64) -> Result<LltReport> {
    let dist = parts_distribution(set, n)?;
    let mu_n = dist.mean.clone();
    if dist.variance.is_zero() {
        // single-point distribution: sup_x |0 - phi(x)| = phi(0), and the
        // pairing product collapses to |0 - 1|
        return Ok(LltReport {
            part_set: set.clone(),
            n,
            mu_n,
            sigma_n: Interval::point(BigRational::zero()),
            deviation: phi_zero(PREC),
            pairing_gap: Interval::point(BigRational::one()),
            degenerate: true,
        });
    }
    let sigma_n = Interval::point(dist.variance.clone()).sqrt(PREC);
    let deviation = deviation_sup(&dist, &sigma_n);
    let pairing_gap = gap_from_sigma(set, 2, n, &sigma_n)?;
    Ok(LltReport {
        part_set: set.clone(),
        n,
        mu_n,
        sigma_n,
        deviation,
        pairing_gap,
        degenerate: false,
    })
}

fn gap_from_sigma(set: &PartSet, m: u32, n: u64, sigma: &Interval) -> Result<Interval> {
    let tuple: Vec<PartSet> = vec![set.clone(); m as usize];
    let pi_n = equal_parts_probability(&tuple, n)?
        .pi_n
        .expect("probability requested");
    // sqrt(m) * (sqrt(2 pi) sigma)^{m-1}
    let sqrt_2pi = interval::pi(PREC).mul_int(2).sqrt(PREC);
    let scaled = (&sqrt_2pi * sigma).powi(m - 1);
    let root_m = Interval::from_int(m as i64).sqrt(PREC);
    let product = &(&Interval::point(pi_n) * &root_m) * &scaled;
    Ok((&product - &Interval::from_int(1)).abs())
}

/// `|pi_n * 2 sqrt(pi) sigma_n - 1|` with both factors exact: the pairing
/// comparison for the pair `(set; set)`.
pub fn pairing_gap(set: &PartSet, n: u64) -> Result<Interval> {
    mfold_pairing_gap(set, 2, n)
}

/// `|pi_n(m) * sqrt(m) * (sqrt(2 pi) sigma_n)^{m-1} - 1|`: the m-fold
/// version of the pairing comparison.
pub fn mfold_pairing_gap(set: &PartSet, m: u32, n: u64) -> Result<Interval> {
    assert!(m >= 2, "the pairing comparison needs m >= 2");
    let dist = parts_distribution(set, n)?;
    if dist.variance.is_zero() {
        return Ok(Interval::point(BigRational::one()));
    }
    let sigma = Interval::point(dist.variance).sqrt(PREC);
    gap_from_sigma(set, m, n, &sigma)
}

/// `integral of g^m = 1 / sqrt((2 pi)^{m-1} m)` for the standard normal
/// density `g`: the constant behind the m-fold pairing comparison.
pub fn gaussian_power_integral(m: u32) -> Interval {
    assert!(m >= 1, "the power must be positive");
    interval::pi(PREC)
        .mul_int(2)
        .powi(m - 1)
        .mul_int(m as i64)
        .sqrt(PREC)
        .recip()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::error::Error;
    use crate::parse_part_spec;
    use num_bigint::BigInt;

    fn ps(text: &str) -> PartSet {
        parse_part_spec(text).unwrap()
    }

    fn overlaps(a: &Interval, b: &Interval) -> bool {
        a.lo() <= b.hi() && b.lo() <= a.hi()
    }

    fn thousandth(mils: i64) -> BigRational {
        BigRational::new(mils.into(), 1000.into())
    }

    #[test]
    fn gaussian_power_integral_values() {
        let one = gaussian_power_integral(1);
        assert!(one.contains(&BigRational::one()));
        assert!(one.width() < BigRational::new(1.into(), BigInt::from(2).pow(64)));

        let two = gaussian_power_integral(2);
        assert!((two.to_f64() - 0.2820947917738781).abs() < 1e-12);
        // 1/(2 sqrt(pi))
        let target = interval::pi(128).sqrt(128).mul_int(2).recip();
        assert!(overlaps(&two, &target));

        let three = gaussian_power_integral(3);
        assert!((three.to_f64() - 0.09188814923697898).abs() < 1e-12);
        // 1/(2 pi sqrt(3))
        let target = (&interval::pi(128).mul_int(2) * &Interval::from_int(3).sqrt(128)).recip();
        assert!(overlaps(&three, &target));
    }

    #[test]
    fn deviation_small_for_all_parts() {
        let report = llt_deviation(&ps("N"), 100).unwrap();
        assert!(!report.degenerate);
        assert!(report.deviation.hi() < &BigRational::new(1.into(), 20.into()));
        assert!(report.deviation.lo() >= &BigRational::zero());
        // exact moments of 1 + Binomial(n-1, 1/2)
        assert_eq!(report.mu_n, BigRational::new(101.into(), 2.into()));
        let sigma_sq = BigRational::new(99.into(), 4.into());
        let sq = &report.sigma_n * &report.sigma_n;
        assert!(sq.contains(&sigma_sq));
    }

    #[test]
    fn deviation_shrinks_with_n() {
        for spec in ["N", "{1,2}", "N>=2"] {
            let set = ps(spec);
            for n in [50u64, 100] {
                let small = llt_deviation(&set, 4 * n).unwrap().deviation;
                let large = llt_deviation(&set, n).unwrap().deviation;
                assert!(small.hi() < large.lo(), "{spec} n={n}");
            }
        }
    }

    #[test]
    fn degenerate_point_distribution_is_flagged() {
        let report = llt_deviation(&ps("{1,2}"), 1).unwrap();
        assert!(report.degenerate);
        assert!(report.sigma_n.width().is_zero());
        // sup |0 - phi(x)| = phi(0) = 1/sqrt(2 pi)
        let phi0 = interval::pi(128).mul_int(2).sqrt(128).recip();
        assert!(overlaps(&report.deviation, &phi0));
        assert!(report.pairing_gap.contains(&BigRational::one()));
    }

    #[test]
    fn deviation_requires_compositions() {
        assert!(matches!(
            llt_deviation(&ps("2N"), 3),
            Err(Error::NoCompositions { n: 3 })
        ));
        assert!(matches!(
            pairing_gap(&ps("2N"), 3),
            Err(Error::NoCompositions { n: 3 })
        ));
    }

    #[test]
    fn pairing_gap_decreasing_trend() {
        for spec in ["N", "{1,2}"] {
            let set = ps(spec);
            let gaps: Vec<Interval> = [50u64, 100, 200, 400]
                .iter()
                .map(|&n| pairing_gap(&set, n).unwrap())
                .collect();
            for pair in gaps.windows(2) {
                assert!(pair[1].hi() < pair[0].lo(), "{spec}");
            }
            assert!(gaps[3].hi() < &thousandth(20), "{spec}");
        }
    }

    #[test]
    fn mfold_gap_matches_pair_case() {
        for n in [50u64, 150] {
            let direct = pairing_gap(&ps("{1,2}"), n).unwrap();
            let via_m = mfold_pairing_gap(&ps("{1,2}"), 2, n).unwrap();
            assert!(overlaps(&direct, &via_m), "n={n}");
        }
    }

    #[test]
    fn mfold_gap_trend_for_triples() {
        let set = ps("{1,2}");
        let gaps: Vec<Interval> = [50u64, 100, 200, 400]
            .iter()
            .map(|&n| mfold_pairing_gap(&set, 3, n).unwrap())
            .collect();
        for pair in gaps.windows(2) {
            assert!(pair[1].hi() < pair[0].lo());
        }
        assert!(gaps[3].hi() < &thousandth(40));
    }

    #[test]
    fn variance_slope_converges_to_k() {
        // |sigma_n^2 / n - K| decreasing on a doubling ladder
        let set = ps("{1,2}");
        let k = crate::asymptotics::variance_coefficient(&set, 128).unwrap();
        let err = |n: u64| -> Interval {
            let dist = parts_distribution(&set, n).unwrap();
            let slope = Interval::point(dist.variance / BigRational::from_integer(n.into()));
            (&slope - &k).abs()
        };
        let (e100, e200, e400) = (err(100), err(200), err(400));
        assert!(e200.hi() < e100.lo());
        assert!(e400.hi() < e200.lo());
    }
}
