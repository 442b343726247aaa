//! Closed-form evaluators, independent of the dynamic programming engine.
//!
//! Each function here recomputes a diagonal count `D_n(m)` (or an
//! ingredient of one) from an explicit formula: binomial power sums for
//! parts {1,2}, Franel-type sums for parts `dN`, a weighted two-part
//! binomial sum, Motzkin-path prefix counts for the ({1,2}; N) pair, and
//! the Fibonacci/Lucas encoding of powers of the golden ratio. The test
//! suite plays them against `enumerate`, which shares no code with them.
//!
//! Sequence offsets (where a formula meets the DP) are pinned by
//! brute-force enumeration at small `n` before being asserted at scale.

use num_bigint::BigUint;
use num_rational::BigRational;
use num_traits::{One, Zero};

/// `binom(n, k)` as an exact big integer, 0 for `k > n`.
pub fn binomial(n: u64, k: u64) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigUint::one();
    for i in 0..k {
        acc = acc * BigUint::from(n - i) / BigUint::from(i + 1);
    }
    acc
}

/// `sum_{k=0}^{n} binom(n-k, k)^m`: the diagonal count for m-tuples of
/// compositions with parts in {1,2}. For m = 1 this telescopes to the
/// Fibonacci number `F_{n+1}`.
pub fn binomial_power_sum(n: u64, m: u32) -> BigUint {
    assert!(m >= 1, "tuple size must be at least 1");
    let mut acc = BigUint::zero();
    for k in 0..=n {
        let b = binomial(n - k, k);
        if !b.is_zero() {
            acc += num_traits::pow(b, m as usize);
        }
    }
    acc
}

/// `sum_{k=0}^{n} binom(n, k)^m`. Order 2 gives central binomials
/// `binom(2n, n)`, order 3 the Franel numbers.
pub fn franel(n: u64, m: u32) -> BigUint {
    assert!(m >= 1, "tuple size must be at least 1");
    let mut acc = BigUint::zero();
    for k in 0..=n {
        acc += num_traits::pow(binomial(n, k), m as usize);
    }
    acc
}

/// Diagonal count for m-tuples over two-part sets `{a^alpha_i, b^beta_i}`
/// sharing the same parts `a < b`:
/// `sum_k binom((n+k(a-b))/a, k)^m * alpha_prod^{(n-kb)/a} * beta_prod^k`,
/// where `k` runs over counts of b-parts, terms with a fractional number
/// of a-parts are zero, and `alpha_prod`/`beta_prod` are the products of
/// the per-coordinate weights.
pub fn two_part_weighted(
    n: u64,
    m: u32,
    a: u64,
    b: u64,
    alpha_prod: &BigRational,
    beta_prod: &BigRational,
) -> BigRational {
    assert!(m >= 1, "tuple size must be at least 1");
    assert!(1 <= a && a < b, "parts must satisfy 1 <= a < b");
    assert!(
        alpha_prod >= &BigRational::zero() && beta_prod >= &BigRational::zero(),
        "weight products must be nonnegative"
    );
    let mut acc = BigRational::zero();
    let mut k = 0u64;
    while k * b <= n {
        let rem = n - k * b;
        if rem % a == 0 {
            let x = rem / a; // number of a-parts
            let positions = num_traits::pow(binomial(x + k, k), m as usize);
            let term = BigRational::from_integer(positions.into())
                * num_traits::pow(alpha_prod.clone(), x as usize)
                * num_traits::pow(beta_prod.clone(), k as usize);
            acc += term;
        }
        k += 1;
    }
    acc
}

/// The first `count` Motzkin numbers `E_0, E_1, ...` by the three-term
/// recurrence `(n+2) E_n = (2n+1) E_{n-1} + 3(n-1) E_{n-2}`.
pub fn motzkin_numbers(count: usize) -> Vec<BigUint> {
    let mut e: Vec<BigUint> = Vec::with_capacity(count);
    for n in 0..count as u64 {
        let next = match n {
            0 | 1 => BigUint::one(),
            _ => {
                let num = &e[(n - 1) as usize] * BigUint::from(2 * n + 1)
                    + &e[(n - 2) as usize] * BigUint::from(3 * (n - 1));
                let den = BigUint::from(n + 2);
                debug_assert!((&num % &den).is_zero());
                num / den
            }
        };
        e.push(next);
    }
    e
}

/// `M_n = 3^n - sum_{k=0}^{n-1} 3^{n-k-1} E_k`: lattice paths of length
/// `n` over steps {up, level, down} that never go below the start (prefix
/// of a Motzkin path, any end height). A free path that does dip has a
/// unique first descent below zero, preceded by an excursion `E_k`; the
/// subtraction removes exactly those. Matches the ({1,2}; N) diagonal
/// count at `n+1`.
pub fn motzkin_directed_animals(n: u64) -> BigUint {
    let e = motzkin_numbers(n as usize);
    let three = BigUint::from(3u32);
    let mut acc = num_traits::pow(three.clone(), n as usize);
    for (k, e_k) in e.iter().enumerate() {
        acc -= num_traits::pow(three.clone(), (n - 1 - k as u64) as usize) * e_k;
    }
    acc
}

/// `(F_m, L_m)` with `F_0 = 0, F_1 = 1` and `L_0 = 2, L_1 = 1`; the pair
/// encodes `phi^m = (F_m sqrt(5) + L_m) / 2`, the limit of consecutive
/// diagonal-count ratios for parts {1,2}.
pub fn golden_ratio_power(m: u32) -> (BigUint, BigUint) {
    let mut f = (BigUint::zero(), BigUint::one());
    let mut l = (BigUint::from(2u32), BigUint::one());
    if m == 0 {
        return (f.0, l.0);
    }
    for _ in 1..m {
        f = (f.1.clone(), f.0 + f.1);
        l = (l.1.clone(), l.0 + l.1);
    }
    (f.1, l.1)
}
