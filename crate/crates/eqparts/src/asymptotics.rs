//! Certified asymptotic constants for supercritical, aperiodic part sets.
//!
//! Everything flows from the unique positive root `rho < 1` of
//! `p(rho) = 1`: the number of compositions grows like
//! `P_n ~ rho^{-n} / (rho p'(rho))`, the mean number of parts like
//! `n / (rho p'(rho))`, and the variance like `K n` with
//!
//! ```text
//! K = (rho p''(rho) + p'(rho) - rho p'(rho)^2) / (rho^2 p'(rho)^3).
//! ```
//!
//! For an m-tuple of compositions drawn uniformly and independently, the
//! probability that all coordinates have the same number of parts decays
//! like `C_m / (pi n)^{(m-1)/2}` with
//! `C_m = (1/K)^{(m-1)/2} / sqrt(2^{m-1} m)`; `C_2` is the pair constant.
//!
//! All outputs are intervals with certified endpoints: `rho` comes from
//! bisection with exact rational comparisons of `p` against 1, and the
//! formulas above are evaluated by monotone interval extension (the series
//! coefficients are nonnegative, so `p`, `p'` and `p''` are increasing on
//! the positive axis).

use std::collections::HashMap;
use std::sync::{LazyLock, Mutex};

use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::enumerate::{equal_parts_probability_with, EnumerateOptions};
use crate::error::Result;
use crate::interval::{self, Interval};
use crate::partset::PartSet;

/// Precision used by the operations that do not take an explicit
/// `precision_bits` argument.
pub const DEFAULT_PRECISION_BITS: u64 = 128;

/// The certified constants attached to one part set.
#[derive(Debug, Clone)]
pub struct AsymptoticProfile {
    pub part_set: PartSet,
    /// Bisection tolerance actually used (at least 64 bits).
    pub precision_bits: u64,
    /// Unique positive root of `p(rho) = 1`, inside (0, 1).
    pub rho: Interval,
    /// `1 / (rho p'(rho))`: mean parts per unit of `n`.
    pub mean_coeff: Interval,
    /// Variance coefficient `K` of the number of parts.
    pub k: Interval,
    /// `1 / (rho p'(rho))`: prefactor of `P_n ~ prefactor * rho^{-n}`.
    pub pn_prefactor: Interval,
}

/// `C_m` with its polynomial decay exponent `(m-1)/2`.
#[derive(Debug, Clone)]
pub struct TupleAsymptotics {
    pub m: u32,
    pub c_m: Interval,
    /// `(m-1)/2`, the power of `pi n` dividing `C_m` in `pi_n`.
    pub exponent: BigRational,
}

static PROFILE_CACHE: LazyLock<Mutex<HashMap<(String, u64), AsymptoticProfile>>> =
    LazyLock::new(|| Mutex::new(HashMap::new()));

fn p_at(set: &PartSet, x: &BigRational, order: u8) -> BigRational {
    set.evaluate_p_exact(x, order)
        .expect("arguments stay inside (0,1), where p and its derivatives exist")
}

/// Monotone interval extension of `p^(order)` (nonnegative coefficients).
fn p_over(set: &PartSet, x: &Interval, order: u8) -> Interval {
    Interval::new(p_at(set, x.lo(), order), p_at(set, x.hi(), order))
}

/// The unique positive solution of `p(rho) = 1` as an interval of width
/// at most `2^-precision_bits`, by bisection over dyadic points with exact
/// rational comparisons. An exact hit returns a point interval.
pub fn solve_rho(set: &PartSet, precision_bits: u64) -> Result<Interval> {
    set.validate_for_asymptotics()?;
    let one = BigRational::one();
    let two = BigRational::from_integer(2.into());

    // grow the upper end toward 1 until p exceeds 1
    let mut hi = BigRational::new(1.into(), 2.into());
    loop {
        let val = p_at(set, &hi, 0);
        if val > one {
            break;
        }
        if val == one {
            return Ok(Interval::point(hi));
        }
        hi = (&hi + &one) / &two;
    }
    let mut lo = BigRational::zero();

    let tol = BigRational::new(1.into(), num_traits::pow(num_bigint::BigInt::from(2), precision_bits as usize));
    while &hi - &lo > tol {
        let mid = (&lo + &hi) / &two;
        let val = p_at(set, &mid, 0);
        if val == one {
            return Ok(Interval::point(mid));
        }
        if val < one {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    Ok(Interval::new(lo, hi))
}

/// The full constant profile, memoized per `(set, precision)`.
pub fn profile(set: &PartSet, precision_bits: u64) -> Result<AsymptoticProfile> {
    let precision_bits = precision_bits.max(64);
    let key = (set.to_string(), precision_bits);
    if let Some(cached) = PROFILE_CACHE.lock().unwrap().get(&key) {
        return Ok(cached.clone());
    }
    let rho = solve_rho(set, precision_bits)?;
    let p1 = p_over(set, &rho, 1);
    let p2 = p_over(set, &rho, 2);

    let rho_p1 = &rho * &p1;
    let mean_coeff = rho_p1.recip();
    // K = (rho p'' + p' - rho p'^2) / (rho^2 p'^3)
    let num = &(&(&rho * &p2) + &p1) - &(&rho * &(&p1 * &p1));
    let den = &(&rho * &rho) * &(&(&p1 * &p1) * &p1);
    let k = &num / &den;

    // certified invariants; they can only fail if the precision is far too
    // low for the set, which the 64-bit floor prevents in practice
    assert!(
        k.is_strictly_positive(),
        "variance coefficient not separated from zero at this precision"
    );
    assert!(
        mean_coeff.lo() > &BigRational::zero() && mean_coeff.hi() <= &BigRational::one(),
        "mean coefficient must lie in (0, 1]"
    );

    let prof = AsymptoticProfile {
        part_set: set.clone(),
        precision_bits,
        rho,
        mean_coeff: mean_coeff.clone(),
        k,
        pn_prefactor: mean_coeff,
    };
    PROFILE_CACHE
        .lock()
        .unwrap()
        .insert(key, prof.clone());
    Ok(prof)
}

/// Variance coefficient `K` with `var(X_n) = K n + O(1)`.
pub fn variance_coefficient(set: &PartSet, precision_bits: u64) -> Result<Interval> {
    Ok(profile(set, precision_bits)?.k)
}

/// `x^{(m-1)/2}` for a positive interval.
fn pow_half_integer(x: &Interval, m_minus_1: u32, prec: u64) -> Interval {
    let whole = x.powi(m_minus_1 / 2);
    if m_minus_1 % 2 == 0 {
        whole
    } else {
        &whole * &x.sqrt(prec)
    }
}

/// `C_m = (rho^2 p'^3 / (rho p'' + p' - rho p'^2))^{(m-1)/2} / sqrt(2^{m-1} m)`
/// for the m-fold equal-parts probability. The parenthetical expression is
/// `1/K`; both routes are computed and must agree.
pub fn constant_cm(set: &PartSet, m: u32, precision_bits: u64) -> Result<TupleAsymptotics> {
    assert!(m >= 2, "tuple asymptotics need m >= 2");
    let prof = profile(set, precision_bits)?;
    let prec = prof.precision_bits;
    let p1 = p_over(set, &prof.rho, 1);
    let p2 = p_over(set, &prof.rho, 2);
    let rho = &prof.rho;
    let num = &(&(rho * &p2) + &p1) - &(rho * &(&p1 * &p1));
    let inv_k = &(&(rho * rho) * &(&(&p1 * &p1) * &p1)) / &num;

    let root = Interval::from_int(2).powi(m - 1).mul_int(m as i64).sqrt(prec);
    let c_m = &pow_half_integer(&inv_k, m - 1, prec) / &root;

    // same constant through K; the two certified routes must overlap
    let via_k = &pow_half_integer(&prof.k.recip(), m - 1, prec) / &root;
    assert!(
        c_m.lo() <= via_k.hi() && via_k.lo() <= c_m.hi(),
        "the direct and K-based evaluations of C_m must agree"
    );
    if m == 2 {
        // C * 2 sqrt(K) = 1 exactly
        let check = (&c_m * &prof.k.sqrt(prec)).mul_int(2);
        assert!(
            check.contains(&BigRational::one()),
            "C_2 * 2 sqrt(K) must contain 1"
        );
    }
    Ok(TupleAsymptotics {
        m,
        c_m,
        exponent: BigRational::new((m as i64 - 1).into(), 2.into()),
    })
}

/// First-order approximation `C_m / (pi n)^{(m-1)/2}` of the equal-parts
/// probability for an m-tuple over `set`.
pub fn pi_asymptotic(set: &PartSet, m: u32, n: u64) -> Result<Interval> {
    assert!(n >= 1, "the approximation needs n >= 1");
    let prec = DEFAULT_PRECISION_BITS;
    let constants = constant_cm(set, m, prec)?;
    let pi_n = interval::pi(prec).mul_int(n as i64);
    let denom = pow_half_integer(&pi_n, m - 1, prec);
    Ok(&constants.c_m / &denom)
}

/// First-order approximation `P_n ~ rho^{-n} / (rho p'(rho))`.
pub fn pn_asymptotic(set: &PartSet, n: u64) -> Result<Interval> {
    let prec = DEFAULT_PRECISION_BITS;
    let prof = profile(set, prec)?;
    let growth = prof.rho.recip().powi_rounded(n, prec + 64);
    Ok(&prof.pn_prefactor * &growth)
}

/// Empirical decay rate `exp((ln pi_{n_hi} - ln pi_{n_lo}) / (n_hi - n_lo))`
/// from the exact probabilities; near 1 when the coordinates share a mean
/// parts density, strictly below 1 when they do not.
pub fn mismatch_decay_rate(tuple: &[PartSet], n_lo: u64, n_hi: u64) -> Result<Interval> {
    assert!(n_lo < n_hi, "the range must be increasing");
    for set in tuple {
        set.validate_for_asymptotics()?;
    }
    let prec = DEFAULT_PRECISION_BITS;
    let opts = EnumerateOptions::default();
    let pi_lo = equal_parts_probability_with(tuple, n_lo, &opts)?
        .pi_n
        .expect("probability requested");
    let pi_hi = equal_parts_probability_with(tuple, n_hi, &opts)?
        .pi_n
        .expect("probability requested");
    debug_assert!(pi_lo.is_positive() && pi_hi.is_positive());
    let ln_lo = interval::ln(&Interval::point(pi_lo), prec);
    let ln_hi = interval::ln(&Interval::point(pi_hi), prec);
    let slope = &(&ln_hi - &ln_lo)
        / &Interval::from_int((n_hi - n_lo) as i64);
    Ok(interval::exp(&slope, prec))
}
