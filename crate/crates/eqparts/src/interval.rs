//! Interval arithmetic over exact rational endpoints.
//!
//! Every operation returns an interval guaranteed to contain the exact
//! mathematical result whenever the operand intervals contain theirs.
//! Endpoints are [`BigRational`], so nothing erodes silently; widening
//! happens only through explicit truncation: [`Interval::round_out`] and
//! the remainder bounds of the series behind [`Interval::sqrt`], [`pi`],
//! [`exp`] and [`ln`].
//!
//! The `prec` argument of the transcendental routines bounds the extra
//! width introduced by series truncation to roughly `2^-prec`; it does not
//! shrink width already present in the input.

use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::sync::{LazyLock, Mutex};

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

/// Closed interval `[lo, hi]` with exact rational endpoints.
#[derive(Debug, Clone, PartialEq)]
pub struct Interval {
    lo: BigRational,
    hi: BigRational,
}

impl Interval {
    /// Interval containing just one rational.
    pub fn point(value: BigRational) -> Self {
        Interval {
            lo: value.clone(),
            hi: value,
        }
    }

    /// Point interval at an integer.
    pub fn from_int(v: i64) -> Self {
        Self::point(BigRational::from_integer(BigInt::from(v)))
    }

    /// Interval with the given endpoints. Panics if `lo > hi`.
    pub fn new(lo: BigRational, hi: BigRational) -> Self {
        assert!(lo <= hi, "interval endpoints out of order");
        Interval { lo, hi }
    }

    pub fn lo(&self) -> &BigRational {
        &self.lo
    }

    pub fn hi(&self) -> &BigRational {
        &self.hi
    }

    pub fn width(&self) -> BigRational {
        &self.hi - &self.lo
    }

    pub fn midpoint(&self) -> BigRational {
        (&self.lo + &self.hi) / BigRational::from_integer(BigInt::from(2))
    }

    pub fn contains(&self, value: &BigRational) -> bool {
        &self.lo <= value && value <= &self.hi
    }

    pub fn contains_interval(&self, other: &Interval) -> bool {
        self.lo <= other.lo && other.hi <= self.hi
    }

    pub fn straddles_zero(&self) -> bool {
        self.lo.is_negative() && self.hi.is_positive()
    }

    /// True when every point of the interval is `> 0`.
    pub fn is_strictly_positive(&self) -> bool {
        self.lo.is_positive()
    }

    pub fn neg(&self) -> Interval {
        Interval {
            lo: -self.hi.clone(),
            hi: -self.lo.clone(),
        }
    }

    pub fn abs(&self) -> Interval {
        if !self.lo.is_negative() {
            self.clone()
        } else if !self.hi.is_positive() {
            self.neg()
        } else {
            let m = if -&self.lo > self.hi {
                -self.lo.clone()
            } else {
                self.hi.clone()
            };
            Interval {
                lo: BigRational::zero(),
                hi: m,
            }
        }
    }

    /// Reciprocal. Panics if the interval contains zero.
    pub fn recip(&self) -> Interval {
        assert!(
            !(self.lo.is_negative() || self.lo.is_zero())
                || !(self.hi.is_positive() || self.hi.is_zero()),
            "reciprocal of interval containing zero"
        );
        Interval {
            lo: self.hi.recip(),
            hi: self.lo.recip(),
        }
    }

    /// Elementwise maximum: contains `max(x, y)` for `x` here, `y` in `other`.
    pub fn max_with(&self, other: &Interval) -> Interval {
        Interval {
            lo: if self.lo > other.lo {
                self.lo.clone()
            } else {
                other.lo.clone()
            },
            hi: if self.hi > other.hi {
                self.hi.clone()
            } else {
                other.hi.clone()
            },
        }
    }

    /// Integer power with the usual sign/monotonicity case split.
    pub fn powi(&self, exp: u32) -> Interval {
        if exp == 0 {
            return Interval::from_int(1);
        }
        let e = exp as i32;
        if !self.lo.is_negative() {
            Interval {
                lo: self.lo.pow(e),
                hi: self.hi.pow(e),
            }
        } else if !self.hi.is_positive() {
            if exp % 2 == 0 {
                Interval {
                    lo: self.hi.pow(e),
                    hi: self.lo.pow(e),
                }
            } else {
                Interval {
                    lo: self.lo.pow(e),
                    hi: self.hi.pow(e),
                }
            }
        } else if exp % 2 == 0 {
            let m = if -&self.lo > self.hi {
                -self.lo.clone()
            } else {
                self.hi.clone()
            };
            Interval {
                lo: BigRational::zero(),
                hi: m.pow(e),
            }
        } else {
            Interval {
                lo: self.lo.pow(e),
                hi: self.hi.pow(e),
            }
        }
    }

    /// Integer power of a nonnegative interval by binary exponentiation,
    /// rounding outward to `bits` dyadic places after every multiplication
    /// so endpoint sizes stay bounded. Intended for large exponents.
    pub fn powi_rounded(&self, exp: u64, bits: u64) -> Interval {
        assert!(
            !self.lo.is_negative(),
            "powi_rounded expects a nonnegative interval"
        );
        let mut result = Interval::from_int(1);
        let mut base = self.round_out(bits);
        let mut e = exp;
        while e > 0 {
            if e & 1 == 1 {
                result = (&result * &base).round_out(bits);
            }
            e >>= 1;
            if e > 0 {
                base = (&base * &base).round_out(bits);
            }
        }
        result
    }

    /// Widen each endpoint outward to the nearest multiple of `2^-bits`.
    pub fn round_out(&self, bits: u64) -> Interval {
        let scale = BigInt::one() << bits;
        Interval {
            lo: floor_to_scale(&self.lo, &scale),
            hi: ceil_to_scale(&self.hi, &scale),
        }
    }

    /// Square root. Requires a nonnegative lower endpoint; adds at most
    /// `2^-prec` of width per endpoint.
    pub fn sqrt(&self, prec: u64) -> Interval {
        assert!(
            !self.lo.is_negative(),
            "sqrt of interval with negative lower endpoint"
        );
        let r = self.round_out(prec + 8);
        let lo = if r.lo.is_negative() {
            BigRational::zero()
        } else {
            sqrt_bounds(&r.lo, prec).0
        };
        let hi = sqrt_bounds(&r.hi, prec).1;
        Interval { lo, hi }
    }

    /// Approximate midpoint as `f64` (for display and diagnostics only).
    pub fn to_f64(&self) -> f64 {
        rational_to_f64(&self.midpoint())
    }

    pub fn lo_f64(&self) -> f64 {
        rational_to_f64(&self.lo)
    }

    pub fn hi_f64(&self) -> f64 {
        rational_to_f64(&self.hi)
    }

    /// Render as `[lo, hi]` with `digits` decimal places, rounded outward.
    pub fn to_bracket_string(&self, digits: usize) -> String {
        format!(
            "[{}, {}]",
            decimal_lower(&self.lo, digits),
            decimal_upper(&self.hi, digits)
        )
    }

    pub fn mul_int(&self, k: i64) -> Interval {
        &Interval::from_int(k) * self
    }
}

impl fmt::Display for Interval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_bracket_string(12))
    }
}

fn floor_to_scale(x: &BigRational, scale: &BigInt) -> BigRational {
    let num = x.numer() * scale;
    BigRational::new(num.div_floor(x.denom()), scale.clone())
}

fn ceil_to_scale(x: &BigRational, scale: &BigInt) -> BigRational {
    let num = x.numer() * scale;
    BigRational::new(Integer::div_ceil(&num, x.denom()), scale.clone())
}

/// `(lo, hi)` rationals with `lo <= sqrt(q) <= hi` and `hi - lo <= 2^-prec`,
/// for `q >= 0`: integer square root of `numer * denom` scaled by `4^prec`.
fn sqrt_bounds(q: &BigRational, prec: u64) -> (BigRational, BigRational) {
    if q.is_zero() {
        return (BigRational::zero(), BigRational::zero());
    }
    let a = q.numer().magnitude();
    let b = q.denom().magnitude();
    let scaled: BigUint = (a * b) << (2 * prec);
    let s = scaled.sqrt();
    let den = BigInt::from(b.clone() << prec);
    (
        BigRational::new(BigInt::from(s.clone()), den.clone()),
        BigRational::new(BigInt::from(s + BigUint::one()), den),
    )
}

impl<'b> Add<&'b Interval> for &Interval {
    type Output = Interval;
    fn add(self, rhs: &'b Interval) -> Interval {
        Interval {
            lo: &self.lo + &rhs.lo,
            hi: &self.hi + &rhs.hi,
        }
    }
}

impl<'b> Sub<&'b Interval> for &Interval {
    type Output = Interval;
    fn sub(self, rhs: &'b Interval) -> Interval {
        Interval {
            lo: &self.lo - &rhs.hi,
            hi: &self.hi - &rhs.lo,
        }
    }
}

impl<'b> Mul<&'b Interval> for &Interval {
    type Output = Interval;
    fn mul(self, rhs: &'b Interval) -> Interval {
        let mut candidates = [
            &self.lo * &rhs.lo,
            &self.lo * &rhs.hi,
            &self.hi * &rhs.lo,
            &self.hi * &rhs.hi,
        ];
        candidates.sort();
        let [first, .., last] = candidates;
        Interval {
            lo: first,
            hi: last,
        }
    }
}

impl<'b> Div<&'b Interval> for &Interval {
    type Output = Interval;
    fn div(self, rhs: &'b Interval) -> Interval {
        self * &rhs.recip()
    }
}

impl Add for Interval {
    type Output = Interval;
    fn add(self, rhs: Interval) -> Interval {
        &self + &rhs
    }
}

impl Sub for Interval {
    type Output = Interval;
    fn sub(self, rhs: Interval) -> Interval {
        &self - &rhs
    }
}

impl Mul for Interval {
    type Output = Interval;
    fn mul(self, rhs: Interval) -> Interval {
        &self * &rhs
    }
}

impl Div for Interval {
    type Output = Interval;
    fn div(self, rhs: Interval) -> Interval {
        &self / &rhs
    }
}

impl Neg for &Interval {
    type Output = Interval;
    fn neg(self) -> Interval {
        Interval::neg(self)
    }
}

static PI_CACHE: LazyLock<Mutex<HashMap<u64, Interval>>> = LazyLock::new(|| Mutex::new(HashMap::new()));
static LN2_CACHE: LazyLock<Mutex<HashMap<u64, Interval>>> = LazyLock::new(|| Mutex::new(HashMap::new()));

/// Bracket of `atan(1/x)` from the alternating series: consecutive partial
/// sums straddle the limit.
fn atan_recip(x: i64, prec: u64) -> Interval {
    let threshold = BigRational::new(BigInt::one(), BigInt::one() << (prec + 8));
    let x_sq = BigRational::from_integer(BigInt::from(x * x));
    let mut power = BigRational::new(BigInt::one(), BigInt::from(x));
    let mut sum = power.clone();
    let mut prev;
    let mut k: u64 = 1;
    loop {
        power /= &x_sq;
        let term = &power / BigRational::from_integer(BigInt::from(2 * k + 1));
        prev = sum.clone();
        if k % 2 == 1 {
            sum -= &term;
        } else {
            sum += &term;
        }
        if term < threshold {
            break;
        }
        k += 1;
    }
    if prev <= sum {
        Interval::new(prev, sum)
    } else {
        Interval::new(sum, prev)
    }
}

/// Certified enclosure of pi via `16 atan(1/5) - 4 atan(1/239)`.
pub fn pi(prec: u64) -> Interval {
    if let Some(cached) = PI_CACHE.lock().unwrap().get(&prec) {
        return cached.clone();
    }
    let a5 = atan_recip(5, prec);
    let a239 = atan_recip(239, prec);
    let result =
        (&(&Interval::from_int(16) * &a5) - &(&Interval::from_int(4) * &a239)).round_out(prec + 4);
    PI_CACHE.lock().unwrap().insert(prec, result.clone());
    result
}

/// Enclosure of `ln 2 = 2 atanh(1/3)`.
fn ln2(prec: u64) -> Interval {
    if let Some(cached) = LN2_CACHE.lock().unwrap().get(&prec) {
        return cached.clone();
    }
    let u = BigRational::new(BigInt::one(), BigInt::from(3));
    let result = atanh_enclosure(&u, prec)
        .mul_int(2)
        .round_out(prec + 4);
    LN2_CACHE.lock().unwrap().insert(prec, result.clone());
    result
}

/// Enclosure of `atanh(u)` for rational `0 <= u <= 1/3`: partial sum plus a
/// geometric remainder bound `u^(2N+3)/(2N+3) * 9/8`.
fn atanh_enclosure(u: &BigRational, prec: u64) -> Interval {
    assert!(!u.is_negative());
    let threshold = BigRational::new(BigInt::one(), BigInt::one() << (prec + 8));
    let u_sq = u * u;
    let mut power = u.clone();
    let mut sum = u.clone();
    let mut j: u64 = 0;
    loop {
        let rem_bound = &power * &u_sq * BigRational::new(BigInt::from(9), BigInt::from(8 * (2 * j + 3) as i64));
        if rem_bound < threshold {
            return Interval::new(sum.clone(), sum + rem_bound);
        }
        j += 1;
        power *= &u_sq;
        sum += &power / BigRational::from_integer(BigInt::from(2 * j + 1));
    }
}

/// Enclosure of `ln q` for a single positive rational.
fn ln_point(q: &BigRational, prec: u64) -> Interval {
    assert!(q.is_positive(), "ln of nonpositive value");
    // q = 2^e * y with y in [1, 2)
    let mut e: i64 = q.numer().magnitude().bits() as i64 - q.denom().magnitude().bits() as i64;
    let two = BigRational::from_integer(BigInt::from(2));
    let mut y = shift_rational(q, -e);
    if y < BigRational::one() {
        e -= 1;
        y = &y * &two;
    } else if y >= two {
        e += 1;
        y = &y / &two;
    }
    let u = (&y - BigRational::one()) / (&y + BigRational::one());
    let ln_y = atanh_enclosure(&u, prec).mul_int(2);
    (&ln2(prec).mul_int(e) + &ln_y).round_out(prec + 2)
}

/// Multiply a rational by `2^e` exactly.
fn shift_rational(q: &BigRational, e: i64) -> BigRational {
    if e >= 0 {
        q * BigRational::from_integer(BigInt::one() << e as u64)
    } else {
        q / BigRational::from_integer(BigInt::one() << (-e) as u64)
    }
}

/// Enclosure of the natural log of an interval with positive lower endpoint.
pub fn ln(x: &Interval, prec: u64) -> Interval {
    assert!(x.lo.is_positive(), "ln of interval reaching zero");
    let r = x.round_out(prec + 8);
    let lo_side = if r.lo.is_positive() { &r.lo } else { &x.lo };
    Interval {
        lo: ln_point(lo_side, prec).lo,
        hi: ln_point(&r.hi, prec).hi,
    }
}

/// Enclosure of `e^r` for a single rational: argument halving to `|t| <= 1/4`,
/// a Taylor bracket with remainder `|t|^(N+1)/(N+1)! * 4/3`, then repeated
/// squaring with outward rounding.
fn exp_point(r: &BigRational, prec: u64) -> Interval {
    if r.is_zero() {
        return Interval::from_int(1);
    }
    let four_abs = r.abs() * BigRational::from_integer(BigInt::from(4));
    let halvings = Integer::div_ceil(four_abs.numer(), four_abs.denom())
        .magnitude()
        .bits();
    let t = shift_rational(r, -(halvings as i64));
    let guard = prec + 2 * halvings + 16;
    let threshold = BigRational::new(BigInt::one(), BigInt::one() << guard);
    let mut term = BigRational::one();
    let mut sum = BigRational::one();
    let mut i: u64 = 1;
    loop {
        term = term * &t / BigRational::from_integer(BigInt::from(i));
        sum += &term;
        let rem = term.abs() / BigRational::from_integer(BigInt::from(3));
        if rem < threshold {
            let mut val = Interval::new(&sum - &rem, &sum + &rem);
            for _ in 0..halvings {
                val = (&val * &val).round_out(guard);
                if val.lo.is_negative() {
                    val.lo = BigRational::zero();
                }
            }
            return val.round_out(prec + 2);
        }
        i += 1;
    }
}

/// Enclosure of the exponential of an interval.
pub fn exp(x: &Interval, prec: u64) -> Interval {
    let r = x.round_out(prec + 8);
    Interval {
        lo: exp_point(&r.lo, prec).lo,
        hi: exp_point(&r.hi, prec).hi,
    }
}

/// Accurate `f64` approximation of a rational of any magnitude.
pub fn rational_to_f64(r: &BigRational) -> f64 {
    if r.is_zero() {
        return 0.0;
    }
    let negative = r.numer().is_negative();
    let num = r.numer().magnitude();
    let den = r.denom().magnitude();
    let shift = num.bits() as i64 - den.bits() as i64 - 64;
    let quotient = if shift >= 0 {
        num / (den.clone() << shift as u64)
    } else {
        (num.clone() << (-shift) as u64) / den
    };
    let mut value = quotient.to_f64().unwrap_or(f64::MAX);
    let mut remaining = shift;
    while remaining != 0 {
        let step = remaining.clamp(-512, 512);
        value *= (step as f64).exp2();
        remaining -= step;
    }
    if negative {
        -value
    } else {
        value
    }
}

/// Decimal string of `r` with `digits` places, rounded toward minus infinity.
pub fn decimal_lower(r: &BigRational, digits: usize) -> String {
    let pow = BigInt::from(10u8).pow(digits as u32);
    let scaled = r * BigRational::from_integer(pow);
    format_scaled(&scaled.numer().div_floor(scaled.denom()), digits)
}

/// Decimal string of `r` with `digits` places, rounded toward plus infinity.
pub fn decimal_upper(r: &BigRational, digits: usize) -> String {
    let pow = BigInt::from(10u8).pow(digits as u32);
    let scaled = r * BigRational::from_integer(pow);
    format_scaled(&Integer::div_ceil(scaled.numer(), scaled.denom()), digits)
}

fn format_scaled(n: &BigInt, digits: usize) -> String {
    let mut s = n.magnitude().to_string();
    if s.len() <= digits {
        s = format!("{}{}", "0".repeat(digits - s.len() + 1), s);
    }
    let point = s.len() - digits;
    let mut out = String::new();
    if n.is_negative() {
        out.push('-');
    }
    out.push_str(&s[..point]);
    if digits > 0 {
        out.push('.');
        out.push_str(&s[point..]);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn rat(n: i64, d: i64) -> BigRational {
        BigRational::new(BigInt::from(n), BigInt::from(d))
    }

    fn width_below(iv: &Interval, bits: u64) -> bool {
        iv.width() <= BigRational::new(BigInt::one(), BigInt::one() << bits)
    }

    /// The interval must land inside consecutive 17-digit decimal bounds.
    fn within(iv: &Interval, lo: BigRational, hi: BigRational) -> bool {
        iv.lo() >= &lo && iv.hi() <= &hi
    }

    #[test]
    fn sqrt_of_two_brackets_known_digits() {
        let s = Interval::point(rat(2, 1)).sqrt(128);
        // 1.41421356237309504880...
        assert!(within(
            &s,
            rat(141_421_356_237_309_504, 100_000_000_000_000_000),
            rat(141_421_356_237_309_505, 100_000_000_000_000_000)
        ));
        assert!(width_below(&s, 120));
        assert!(s.lo().pow(2) <= rat(2, 1));
        assert!(s.hi().pow(2) >= rat(2, 1));
    }

    #[test]
    fn pi_brackets_known_digits() {
        let p = pi(128);
        // 3.14159265358979323846...
        assert!(within(
            &p,
            rat(314_159_265_358_979_323, 100_000_000_000_000_000),
            rat(314_159_265_358_979_324, 100_000_000_000_000_000)
        ));
        assert!(width_below(&p, 120));
    }

    #[test]
    fn exp_one_brackets_e() {
        let e = exp(&Interval::from_int(1), 128);
        // 2.71828182845904523536...
        assert!(within(
            &e,
            rat(271_828_182_845_904_523, 100_000_000_000_000_000),
            rat(271_828_182_845_904_524, 100_000_000_000_000_000)
        ));
        assert!(width_below(&e, 100));
    }

    #[test]
    fn exp_handles_large_negative_arguments() {
        let v = exp(&Interval::from_int(-200), 96);
        assert!(v.lo() >= &BigRational::zero());
        assert!(v.hi() < &rat(1, 1_000_000));
        assert!(width_below(&v, 90));
    }

    #[test]
    fn ln_two_brackets_known_digits() {
        let l = ln(&Interval::from_int(2), 128);
        // 0.69314718055994530941...
        assert!(within(
            &l,
            rat(693_147_180_559_945_309, 1_000_000_000_000_000_000),
            rat(693_147_180_559_945_310, 1_000_000_000_000_000_000)
        ));
        assert!(width_below(&l, 100));
    }

    #[test]
    fn ln_of_power_of_two_uses_cached_constant() {
        let l = ln(&Interval::from_int(1024), 96);
        let ten_ln2 = ln(&Interval::from_int(2), 96).mul_int(10);
        assert!(l.lo() <= ten_ln2.hi() && ten_ln2.lo() <= l.hi());
    }

    #[test]
    fn powi_sign_cases() {
        let straddle = Interval::new(rat(-3, 1), rat(2, 1));
        let sq = straddle.powi(2);
        assert_eq!(sq.lo(), &BigRational::zero());
        assert_eq!(sq.hi(), &rat(9, 1));
        let cube = straddle.powi(3);
        assert_eq!(cube.lo(), &rat(-27, 1));
        assert_eq!(cube.hi(), &rat(8, 1));
        let neg = Interval::new(rat(-3, 1), rat(-2, 1));
        assert_eq!(neg.powi(2), Interval::new(rat(4, 1), rat(9, 1)));
    }

    #[test]
    fn powi_rounded_matches_exact_on_small_exponent() {
        let base = Interval::new(rat(3, 2), rat(3, 2));
        let exact = base.powi(10);
        let rounded = base.powi_rounded(10, 128);
        assert!(rounded.contains_interval(&exact));
        assert!(width_below(&rounded, 100));
    }

    #[test]
    fn decimal_strings_round_outward() {
        assert_eq!(decimal_lower(&rat(1, 3), 4), "0.3333");
        assert_eq!(decimal_upper(&rat(1, 3), 4), "0.3334");
        assert_eq!(decimal_lower(&rat(-1, 3), 4), "-0.3334");
        assert_eq!(decimal_upper(&rat(-1, 3), 4), "-0.3333");
        assert_eq!(decimal_lower(&rat(5, 1), 2), "5.00");
        assert_eq!(decimal_upper(&rat(5, 1), 0), "5");
    }

    #[test]
    fn division_brackets_quotient() {
        let a = Interval::new(rat(1, 1), rat(2, 1));
        let b = Interval::new(rat(3, 1), rat(4, 1));
        let q = &a / &b;
        assert!(q.contains(&rat(1, 3)));
        assert!(q.contains(&rat(2, 3)));
        assert!(q.contains(&rat(5, 12)));
    }

    proptest! {
        #[test]
        fn round_out_contains_original(n in -10_000i64..10_000, d in 1i64..10_000, bits in 4u64..80) {
            let iv = Interval::point(rat(n, d));
            prop_assert!(iv.round_out(bits).contains_interval(&iv));
        }

        #[test]
        fn arithmetic_preserves_containment(
            a in -100i64..100, b in -100i64..100,
            c in -100i64..100, d in -100i64..100,
            da in 1i64..50, db in 1i64..50,
        ) {
            let (x1, x2) = (rat(a.min(b), da), rat(a.max(b), da));
            let (y1, y2) = (rat(c.min(d), db), rat(c.max(d), db));
            let x = Interval::new(x1.clone(), x2.clone());
            let y = Interval::new(y1.clone(), y2.clone());
            let mid_x = x.midpoint();
            let mid_y = y.midpoint();
            prop_assert!((&x + &y).contains(&(&mid_x + &mid_y)));
            prop_assert!((&x - &y).contains(&(&mid_x - &mid_y)));
            prop_assert!((&x * &y).contains(&(&mid_x * &mid_y)));
        }

        #[test]
        fn exp_of_ln_recovers_value(n in 1i64..500, d in 1i64..500) {
            let q = rat(n, d);
            let round_trip = exp(&ln(&Interval::point(q.clone()), 96), 96);
            prop_assert!(round_trip.contains(&q));
        }

        #[test]
        fn sqrt_square_recovers_value(n in 0i64..1000, d in 1i64..1000) {
            let q = rat(n, d);
            let s = Interval::point(q.clone()).sqrt(96);
            prop_assert!(s.powi(2).contains(&q));
        }

        #[test]
        fn to_f64_is_close(n in -1_000_000i64..1_000_000, d in 1i64..1_000_000) {
            let q = rat(n, d);
            let approx = rational_to_f64(&q);
            let exact = n as f64 / d as f64;
            prop_assert!((approx - exact).abs() <= exact.abs() * 1e-12 + 1e-300);
        }
    }
}
