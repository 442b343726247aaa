//! Part sets: which part values a composition may use, with exact rational
//! weights, plus exact evaluation of the part generating function
//! `p(x) = sum_j p_j x^j` and its first two derivatives.
//!
//! Surface syntax (whitespace-insensitive):
//!
//! ```text
//! partset := "N" | "N>=" INT | INT "N" | "odd>=" INT | "{" item ("," item)* "}"
//! item    := INT ("^" weight)?
//! weight  := INT | INT "/" INT
//! tuple   := partset (";" partset)*
//! ```
//!
//! Examples: `N` (all positive integers), `N>=2`, `2N` (even parts),
//! `odd>=3`, `{1,2}`, `{1^2,2^3}` (part 1 with weight 2, part 2 with
//! weight 3).

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::interval::Interval;

/// The family of part values and weights.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PartSetSpec {
    /// Explicit parts with positive weights, strictly increasing.
    Finite(Vec<(u64, BigRational)>),
    /// Every positive integer, weight 1.
    AllParts,
    /// Every integer `>= d`, weight 1. `Tail(0)` (only reachable with the
    /// zero-part override) additionally allows part 0.
    Tail(u64),
    /// Multiples of `d`, weight 1.
    Progression(u64),
    /// Odd integers `>= d` (`d` odd), weight 1.
    OddTail(u64),
}

/// A parsed, canonicalized part set with its derived structure.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PartSet {
    spec: PartSetSpec,
    support_gcd: u64,
    weight_sum_exceeds_one: bool,
    max_part: Option<u64>,
}

/// Parse a part-set expression; part value 0 is rejected.
pub fn parse_part_spec(text: &str) -> Result<PartSet> {
    parse_part_spec_permissive(text, false)
}

/// Parse a part-set expression, optionally allowing part value 0
/// (`N>=0` or an explicit 0 in a finite list).
pub fn parse_part_spec_permissive(text: &str, allow_zero: bool) -> Result<PartSet> {
    let mut parser = Parser::new(text);
    let spec = parser.partset()?;
    parser.end()?;
    PartSet::from_spec(spec, allow_zero)
}

/// Parse a semicolon-separated tuple of part sets.
pub fn parse_tuple_spec(text: &str, allow_zero: bool) -> Result<Vec<PartSet>> {
    let mut parser = Parser::new(text);
    let mut sets = Vec::new();
    loop {
        let spec = parser.partset()?;
        sets.push(PartSet::from_spec(spec, allow_zero)?);
        if !parser.eat(b';') {
            break;
        }
    }
    parser.end()?;
    Ok(sets)
}

impl FromStr for PartSet {
    type Err = Error;
    fn from_str(s: &str) -> Result<PartSet> {
        parse_part_spec(s)
    }
}

impl PartSet {
    /// Canonicalize a raw spec and compute the derived fields.
    ///
    /// Canonical forms: `Tail(1)` and `Progression(1)` become `AllParts`;
    /// duplicate finite parts merge by summing weights; zero-weight entries
    /// are dropped.
    pub fn from_spec(spec: PartSetSpec, allow_zero: bool) -> Result<PartSet> {
        let spec = match spec {
            PartSetSpec::Finite(mut items) => {
                items.sort_by_key(|(part, _)| *part);
                let mut merged: Vec<(u64, BigRational)> = Vec::with_capacity(items.len());
                for (part, weight) in items {
                    match merged.last_mut() {
                        Some((last, acc)) if *last == part => *acc += weight,
                        _ => merged.push((part, weight)),
                    }
                }
                merged.retain(|(_, weight)| !weight.is_zero());
                if merged.iter().any(|(part, _)| *part == 0) && !allow_zero {
                    return Err(Error::ZeroPart);
                }
                if merged.iter().all(|(part, _)| *part == 0) {
                    return Err(Error::EmptySet);
                }
                PartSetSpec::Finite(merged)
            }
            PartSetSpec::Tail(0) if !allow_zero => return Err(Error::ZeroPart),
            PartSetSpec::Tail(1) => PartSetSpec::AllParts,
            PartSetSpec::Progression(0) => return Err(Error::ZeroPart),
            PartSetSpec::Progression(1) => PartSetSpec::AllParts,
            PartSetSpec::OddTail(d) if d % 2 == 0 => {
                return Err(Error::Parse {
                    pos: 0,
                    expected: "odd lower bound",
                })
            }
            other => other,
        };

        let support_gcd = match &spec {
            PartSetSpec::Finite(items) => items
                .iter()
                .fold(0u64, |g, (part, _)| num_integer::gcd(g, *part)),
            PartSetSpec::AllParts | PartSetSpec::Tail(_) | PartSetSpec::OddTail(_) => 1,
            PartSetSpec::Progression(d) => *d,
        };
        let weight_sum_exceeds_one = match &spec {
            PartSetSpec::Finite(items) => {
                let sum: BigRational = items.iter().map(|(_, w)| w.clone()).sum();
                sum > BigRational::one()
            }
            _ => true,
        };
        let max_part = match &spec {
            PartSetSpec::Finite(items) => items.last().map(|(part, _)| *part),
            _ => None,
        };
        Ok(PartSet {
            spec,
            support_gcd,
            weight_sum_exceeds_one,
            max_part,
        })
    }

    pub fn spec(&self) -> &PartSetSpec {
        &self.spec
    }

    /// gcd of all parts with nonzero weight.
    pub fn support_gcd(&self) -> u64 {
        self.support_gcd
    }

    /// True iff the weights sum beyond 1 (divergent sums count as exceeding).
    pub fn weight_sum_exceeds_one(&self) -> bool {
        self.weight_sum_exceeds_one
    }

    /// Largest part, or `None` for the unbounded families.
    pub fn max_part(&self) -> Option<u64> {
        self.max_part
    }

    pub fn is_finite(&self) -> bool {
        matches!(self.spec, PartSetSpec::Finite(_))
    }

    /// Weight of part 0, when present.
    pub fn zero_weight(&self) -> Option<BigRational> {
        match &self.spec {
            PartSetSpec::Finite(items) => items
                .iter()
                .find(|(part, _)| *part == 0)
                .map(|(_, w)| w.clone()),
            PartSetSpec::Tail(0) => Some(BigRational::one()),
            _ => None,
        }
    }

    pub fn has_zero_part(&self) -> bool {
        self.zero_weight().is_some()
    }

    /// The positive support as an arithmetic progression `first, first+step,
    /// first+2 step, ...` for the unit-weight families; `None` for `Finite`.
    pub fn positive_progression(&self) -> Option<(u64, u64)> {
        match &self.spec {
            PartSetSpec::Finite(_) => None,
            PartSetSpec::AllParts => Some((1, 1)),
            PartSetSpec::Tail(0) => Some((1, 1)),
            PartSetSpec::Tail(d) => Some((*d, 1)),
            PartSetSpec::Progression(d) => Some((*d, *d)),
            PartSetSpec::OddTail(d) => Some((*d, 2)),
        }
    }

    /// The positive parts with their weights; unbounded for the families,
    /// so only available for `Finite`.
    pub fn finite_positive_parts(&self) -> Option<Vec<(u64, BigRational)>> {
        match &self.spec {
            PartSetSpec::Finite(items) => Some(
                items
                    .iter()
                    .filter(|(part, _)| *part > 0)
                    .cloned()
                    .collect(),
            ),
            _ => None,
        }
    }

    /// Smallest positive part in the support.
    pub fn min_positive_part(&self) -> u64 {
        match &self.spec {
            PartSetSpec::Finite(items) => items
                .iter()
                .find(|(part, _)| *part > 0)
                .map(|(part, _)| *part)
                .expect("canonical part set has a positive part"),
            _ => self.positive_progression().unwrap().0,
        }
    }

    /// True when every weight is an integer (the big-integer fast path).
    pub fn all_integer_weights(&self) -> bool {
        match &self.spec {
            PartSetSpec::Finite(items) => items.iter().all(|(_, w)| w.denom().is_one()),
            _ => true,
        }
    }

    /// The exact weight `p_j` (0 when `j` is not in the support).
    pub fn coefficient(&self, j: u64) -> BigRational {
        let member = match &self.spec {
            PartSetSpec::Finite(items) => {
                return items
                    .iter()
                    .find(|(part, _)| *part == j)
                    .map(|(_, w)| w.clone())
                    .unwrap_or_else(BigRational::zero)
            }
            PartSetSpec::AllParts => j >= 1,
            PartSetSpec::Tail(d) => j >= *d,
            PartSetSpec::Progression(d) => j >= *d && j % *d == 0,
            PartSetSpec::OddTail(d) => j >= *d && j % 2 == 1,
        };
        if member {
            BigRational::one()
        } else {
            BigRational::zero()
        }
    }

    /// Exact value of `p(x)`, `p'(x)` or `p''(x)` at a rational point.
    ///
    /// Every family has a rational closed form, so no truncation is
    /// involved. Domain: `x >= 0`, and `x < 1` for the unbounded families.
    pub fn evaluate_p_exact(&self, x: &BigRational, order: u8) -> Result<BigRational> {
        assert!(order <= 2, "only orders 0, 1, 2 are defined");
        if x.is_negative() {
            return Err(Error::OutOfDomain {
                message: format!("x = {} is negative", x),
            });
        }
        if !self.is_finite() && *x >= BigRational::one() {
            return Err(Error::OutOfDomain {
                message: format!("x = {} is outside the open unit disk", x),
            });
        }
        let one = BigRational::one();
        Ok(match &self.spec {
            PartSetSpec::Finite(items) => {
                let mut acc = BigRational::zero();
                for (part, weight) in items {
                    let j = *part;
                    // the falling-factorial coefficient of the derivative
                    let (coeff, exponent) = match order {
                        0 => (BigRational::one(), j as i64),
                        1 => (int_rat(j), j as i64 - 1),
                        _ => (int_rat(j) * int_rat(j.saturating_sub(1)), j as i64 - 2),
                    };
                    if coeff.is_zero() {
                        continue;
                    }
                    acc += weight * coeff * pow_rat(x, exponent);
                }
                acc
            }
            PartSetSpec::AllParts => {
                let q = &one - x;
                match order {
                    0 => x / &q,
                    1 => (&q * &q).recip(),
                    _ => int_rat(2) / (&q * &q * &q),
                }
            }
            PartSetSpec::Tail(0) => {
                // 1/(1-x): the all-parts form plus the constant term
                let q = &one - x;
                match order {
                    0 => q.recip(),
                    1 => (&q * &q).recip(),
                    _ => int_rat(2) / (&q * &q * &q),
                }
            }
            PartSetSpec::Tail(d) => {
                // p = x^d / (1-x)
                let d = *d;
                let q = &one - x;
                match order {
                    0 => pow_rat(x, d as i64) / &q,
                    1 => {
                        term(d, x, d as i64 - 1, &q, 1)
                            + pow_rat(x, d as i64) / (&q * &q)
                    }
                    _ => {
                        term(d * d.saturating_sub(1), x, d as i64 - 2, &q, 1)
                            + term(2 * d, x, d as i64 - 1, &q, 2)
                            + int_rat(2) * pow_rat(x, d as i64) / (&q * &q * &q)
                    }
                }
            }
            PartSetSpec::Progression(d) => {
                // p = x^d / (1-x^d)
                let d = *d;
                let xd = pow_rat(x, d as i64);
                let q = &one - &xd;
                match order {
                    0 => &xd / &q,
                    1 => term(d, x, d as i64 - 1, &q, 2),
                    _ => {
                        (term(d * d.saturating_sub(1), x, d as i64 - 2, &q, 0) * &q
                            + term(2 * d * d, x, 2 * d as i64 - 2, &q, 0))
                            / (&q * &q * &q)
                    }
                }
            }
            PartSetSpec::OddTail(d) => {
                // p = x^d / (1-x^2)
                let d = *d;
                let q = &one - &(x * x);
                match order {
                    0 => pow_rat(x, d as i64) / &q,
                    1 => {
                        term(d, x, d as i64 - 1, &q, 1)
                            + int_rat(2) * pow_rat(x, d as i64 + 1) / (&q * &q)
                    }
                    _ => {
                        term(d * d.saturating_sub(1), x, d as i64 - 2, &q, 1)
                            + term(4 * d + 2, x, d as i64, &q, 2)
                            + term(8, x, d as i64 + 2, &q, 3)
                    }
                }
            }
        })
    }

    /// Certified interval for `p(x)` and its derivatives. The closed forms
    /// are exact at rational `x`, so the interval is a point; the width
    /// requirement `<= 2^-precision_bits` holds trivially.
    pub fn evaluate_p(&self, x: &BigRational, order: u8, _precision_bits: u64) -> Result<Interval> {
        Ok(Interval::point(self.evaluate_p_exact(x, order)?))
    }

    /// Upper bound on the dropped tail `sum_{j > j_cut} p_j x^j` of `p(x)`.
    /// Unit-weight families use the full geometric tail `x^(j_cut+1)/(1-x)`;
    /// finite sets get the exact remaining sum.
    pub fn tail_bound(&self, x: &BigRational, j_cut: u64) -> Result<BigRational> {
        if x.is_negative() {
            return Err(Error::OutOfDomain {
                message: format!("x = {} is negative", x),
            });
        }
        match &self.spec {
            PartSetSpec::Finite(items) => Ok(items
                .iter()
                .filter(|(part, _)| *part > j_cut)
                .map(|(part, weight)| weight * pow_rat(x, *part as i64))
                .sum()),
            _ => {
                if *x >= BigRational::one() {
                    return Err(Error::OutOfDomain {
                        message: format!("x = {} is outside the open unit disk", x),
                    });
                }
                Ok(pow_rat(x, j_cut as i64 + 1) / (BigRational::one() - x))
            }
        }
    }

    /// Check the hypotheses of the asymptotic regime: weights summing beyond
    /// 1 and an aperiodic support without part 0.
    pub fn validate_for_asymptotics(&self) -> Result<()> {
        if self.has_zero_part() {
            return Err(Error::ZeroPart);
        }
        if !self.weight_sum_exceeds_one {
            let sum = match &self.spec {
                PartSetSpec::Finite(items) => items
                    .iter()
                    .map(|(_, w)| w.clone())
                    .sum::<BigRational>()
                    .to_string(),
                _ => unreachable!("unit-weight families always exceed 1"),
            };
            return Err(Error::NotSupercritical { weight_sum: sum });
        }
        if self.support_gcd != 1 {
            return Err(Error::Periodic {
                gcd: self.support_gcd as u32,
            });
        }
        Ok(())
    }
}

fn int_rat(v: u64) -> BigRational {
    BigRational::from_integer(BigInt::from(v))
}

/// `x^e` for `e >= 0`; callers guarantee nonnegative exponents by skipping
/// zero-coefficient terms.
fn pow_rat(x: &BigRational, e: i64) -> BigRational {
    assert!(e >= 0, "negative exponent reached with nonzero coefficient");
    if e == 0 {
        return BigRational::one();
    }
    x.pow(e as i32)
}

/// `c * x^e / q^qpow`, skipping the powers entirely when `c = 0`.
fn term(c: u64, x: &BigRational, e: i64, q: &BigRational, qpow: u32) -> BigRational {
    if c == 0 {
        return BigRational::zero();
    }
    let mut denom = BigRational::one();
    for _ in 0..qpow {
        denom *= q;
    }
    int_rat(c) * pow_rat(x, e) / denom
}

impl fmt::Display for PartSetSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PartSetSpec::Finite(items) => {
                write!(f, "{{")?;
                for (i, (part, weight)) in items.iter().enumerate() {
                    if i > 0 {
                        write!(f, ",")?;
                    }
                    write!(f, "{}", part)?;
                    if !weight.is_one() {
                        write!(f, "^{}", weight)?;
                    }
                }
                write!(f, "}}")
            }
            PartSetSpec::AllParts => write!(f, "N"),
            PartSetSpec::Tail(d) => write!(f, "N>={}", d),
            PartSetSpec::Progression(d) => write!(f, "{}N", d),
            PartSetSpec::OddTail(d) => write!(f, "odd>={}", d),
        }
    }
}

impl fmt::Display for PartSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.spec.fmt(f)
    }
}

struct Parser<'a> {
    bytes: &'a [u8],
    pos: usize,
}

impl<'a> Parser<'a> {
    fn new(text: &'a str) -> Self {
        Parser {
            bytes: text.as_bytes(),
            pos: 0,
        }
    }

    fn skip_ws(&mut self) {
        while self
            .bytes
            .get(self.pos)
            .is_some_and(|b| b.is_ascii_whitespace())
        {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.bytes.get(self.pos).copied()
    }

    fn eat(&mut self, b: u8) -> bool {
        if self.peek() == Some(b) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn eat_str(&mut self, token: &str) -> bool {
        self.skip_ws();
        if self.bytes[self.pos..].starts_with(token.as_bytes()) {
            self.pos += token.len();
            true
        } else {
            false
        }
    }

    fn err(&self, expected: &'static str) -> Error {
        Error::Parse {
            pos: self.pos,
            expected,
        }
    }

    fn end(&mut self) -> Result<()> {
        if self.peek().is_some() {
            return Err(self.err("end of input"));
        }
        Ok(())
    }

    fn uint(&mut self, expected: &'static str) -> Result<u64> {
        self.skip_ws();
        let start = self.pos;
        while self
            .bytes
            .get(self.pos)
            .is_some_and(|b| b.is_ascii_digit())
        {
            self.pos += 1;
        }
        if self.pos == start {
            return Err(self.err(expected));
        }
        std::str::from_utf8(&self.bytes[start..self.pos])
            .expect("digits are ASCII")
            .parse::<u64>()
            .map_err(|_| Error::Parse {
                pos: start,
                expected: "integer within range",
            })
    }

    fn big_uint(&mut self, expected: &'static str) -> Result<BigInt> {
        self.skip_ws();
        let start = self.pos;
        while self
            .bytes
            .get(self.pos)
            .is_some_and(|b| b.is_ascii_digit())
        {
            self.pos += 1;
        }
        if self.pos == start {
            return Err(self.err(expected));
        }
        Ok(BigInt::parse_bytes(&self.bytes[start..self.pos], 10).expect("digits are ASCII"))
    }

    fn partset(&mut self) -> Result<PartSetSpec> {
        match self.peek() {
            Some(b'N') => {
                self.pos += 1;
                if self.eat_str(">=") {
                    Ok(PartSetSpec::Tail(self.uint("lower bound")?))
                } else {
                    Ok(PartSetSpec::AllParts)
                }
            }
            Some(b'o') => {
                if !self.eat_str("odd>=") {
                    return Err(self.err("'odd>=' prefix"));
                }
                let at = self.pos;
                let d = self.uint("odd lower bound")?;
                if d % 2 == 0 {
                    return Err(Error::Parse {
                        pos: at,
                        expected: "odd lower bound",
                    });
                }
                Ok(PartSetSpec::OddTail(d))
            }
            Some(b'{') => {
                self.pos += 1;
                let mut items = vec![self.item()?];
                loop {
                    if self.eat(b',') {
                        items.push(self.item()?);
                    } else if self.eat(b'}') {
                        break;
                    } else {
                        return Err(self.err("',' or '}'"));
                    }
                }
                Ok(PartSetSpec::Finite(items))
            }
            Some(c) if c.is_ascii_digit() => {
                let d = self.uint("progression multiplier")?;
                if self.eat(b'N') {
                    Ok(PartSetSpec::Progression(d))
                } else {
                    Err(self.err("'N' after multiplier"))
                }
            }
            _ => Err(self.err("part set")),
        }
    }

    fn item(&mut self) -> Result<(u64, BigRational)> {
        let part = self.uint("part value")?;
        let weight = if self.eat(b'^') {
            let numer = self.big_uint("weight")?;
            if self.eat(b'/') {
                let at = self.pos;
                let denom = self.big_uint("weight denominator")?;
                if denom.is_zero() {
                    return Err(Error::Parse {
                        pos: at,
                        expected: "nonzero denominator",
                    });
                }
                BigRational::new(numer, denom)
            } else {
                BigRational::from_integer(numer)
            }
        } else {
            BigRational::one()
        };
        Ok((part, weight))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn rat(n: i64, d: i64) -> BigRational {
        BigRational::new(BigInt::from(n), BigInt::from(d))
    }

    fn ps(text: &str) -> PartSet {
        parse_part_spec(text).unwrap()
    }

    #[test]
    fn parse_canonical_examples() {
        assert_eq!(
            ps("{1,2}").spec(),
            &PartSetSpec::Finite(vec![(1, rat(1, 1)), (2, rat(1, 1))])
        );
        assert_eq!(
            ps("{1^2,2}").spec(),
            &PartSetSpec::Finite(vec![(1, rat(2, 1)), (2, rat(1, 1))])
        );
        assert_eq!(ps("N").spec(), &PartSetSpec::AllParts);
        assert_eq!(ps("N>=2").spec(), &PartSetSpec::Tail(2));
        assert_eq!(ps("2N").spec(), &PartSetSpec::Progression(2));
        assert_eq!(ps("odd>=3").spec(), &PartSetSpec::OddTail(3));
        assert_eq!(ps(" { 1 ^ 2 , 2 } ").spec(), ps("{1^2,2}").spec());
    }

    #[test]
    fn canonicalization_rules() {
        assert_eq!(ps("N>=1").spec(), &PartSetSpec::AllParts);
        assert_eq!(ps("1N").spec(), &PartSetSpec::AllParts);
        // duplicates merge by adding weights; zero weights vanish
        assert_eq!(ps("{1,1,2}").spec(), ps("{1^2,2}").spec());
        assert_eq!(ps("{2,1^0,3}").spec(), ps("{2,3}").spec());
        assert_eq!(ps("{2^1/2,2^1/2}").spec(), ps("{2}").spec());
    }

    #[test]
    fn derived_fields() {
        assert_eq!(ps("{2,4}").support_gcd(), 2);
        assert_eq!(ps("{1,2}").support_gcd(), 1);
        assert_eq!(ps("3N").support_gcd(), 3);
        assert_eq!(ps("odd>=5").support_gcd(), 1);
        assert!(ps("{1,2}").weight_sum_exceeds_one());
        assert!(!ps("{1}").weight_sum_exceeds_one());
        assert!(!ps("{1^1/2,2^1/2}").weight_sum_exceeds_one());
        assert_eq!(ps("{1,2,7}").max_part(), Some(7));
        assert_eq!(ps("N>=4").max_part(), None);
        assert_eq!(ps("N>=4").min_positive_part(), 4);
        assert_eq!(ps("2N").positive_progression(), Some((2, 2)));
        assert_eq!(ps("odd>=3").positive_progression(), Some((3, 2)));
        assert!(ps("{1^2,2}").all_integer_weights());
        assert!(!ps("{1^1/2,2}").all_integer_weights());
    }

    #[test]
    fn parse_errors_carry_position_and_expectation() {
        match parse_part_spec("{1,") {
            Err(Error::Parse { pos, expected }) => {
                assert_eq!(pos, 3);
                assert_eq!(expected, "part value");
            }
            other => panic!("unexpected: {:?}", other),
        }
        assert!(matches!(
            parse_part_spec(""),
            Err(Error::Parse { expected: "part set", .. })
        ));
        assert!(matches!(
            parse_part_spec("{1}x"),
            Err(Error::Parse { expected: "end of input", .. })
        ));
        assert!(matches!(
            parse_part_spec("3"),
            Err(Error::Parse { expected: "'N' after multiplier", .. })
        ));
        assert!(matches!(
            parse_part_spec("odd>=2"),
            Err(Error::Parse { expected: "odd lower bound", .. })
        ));
        assert!(matches!(
            parse_part_spec("{1^2/0}"),
            Err(Error::Parse { expected: "nonzero denominator", .. })
        ));
        assert!(matches!(parse_part_spec("{0,2}"), Err(Error::ZeroPart)));
        assert!(matches!(parse_part_spec("N>=0"), Err(Error::ZeroPart)));
        assert!(matches!(parse_part_spec("0N"), Err(Error::ZeroPart)));
        assert!(matches!(parse_part_spec("{1^0}"), Err(Error::EmptySet)));
    }

    #[test]
    fn zero_part_override() {
        let with_zero = parse_part_spec_permissive("N>=0", true).unwrap();
        assert!(with_zero.has_zero_part());
        assert_eq!(with_zero.zero_weight(), Some(rat(1, 1)));
        assert_eq!(with_zero.positive_progression(), Some((1, 1)));
        assert_eq!(with_zero.coefficient(0), rat(1, 1));
        let finite = parse_part_spec_permissive("{0,1,2}", true).unwrap();
        assert!(finite.has_zero_part());
        assert_eq!(finite.min_positive_part(), 1);
        // part 0 alone is still rejected: no positive support
        assert!(matches!(
            parse_part_spec_permissive("{0}", true),
            Err(Error::EmptySet)
        ));
        // zero-carrying sets are barred from asymptotics
        assert!(matches!(
            with_zero.validate_for_asymptotics(),
            Err(Error::ZeroPart)
        ));
    }

    #[test]
    fn tuple_parsing() {
        let tuple = parse_tuple_spec("{1,2} ; N ; 2N", false).unwrap();
        assert_eq!(tuple.len(), 3);
        assert_eq!(tuple[1].spec(), &PartSetSpec::AllParts);
        assert!(parse_tuple_spec("{1,2};", false).is_err());
    }

    #[test]
    fn coefficient_examples() {
        assert_eq!(ps("{1,2}").coefficient(2), rat(1, 1));
        assert_eq!(ps("N").coefficient(7), rat(1, 1));
        assert_eq!(ps("{1^2,2}").coefficient(1), rat(2, 1));
        assert_eq!(ps("2N").coefficient(3), rat(0, 1));
        assert_eq!(ps("2N").coefficient(4), rat(1, 1));
        assert_eq!(ps("odd>=3").coefficient(1), rat(0, 1));
        assert_eq!(ps("odd>=3").coefficient(5), rat(1, 1));
        assert_eq!(ps("N>=2").coefficient(1), rat(0, 1));
    }

    #[test]
    fn evaluate_p_examples() {
        let half = rat(1, 2);
        assert_eq!(ps("N").evaluate_p_exact(&half, 0).unwrap(), rat(1, 1));
        assert_eq!(ps("N").evaluate_p_exact(&half, 1).unwrap(), rat(4, 1));
        assert_eq!(ps("N").evaluate_p_exact(&half, 2).unwrap(), rat(16, 1));
        assert_eq!(ps("{1,2}").evaluate_p_exact(&half, 0).unwrap(), rat(3, 4));
        assert_eq!(ps("{1,2}").evaluate_p_exact(&half, 1).unwrap(), rat(2, 1));
        assert_eq!(ps("{1,2}").evaluate_p_exact(&half, 2).unwrap(), rat(2, 1));
        assert_eq!(ps("2N").evaluate_p_exact(&half, 0).unwrap(), rat(1, 3));
        assert_eq!(ps("odd>=1").evaluate_p_exact(&half, 0).unwrap(), rat(2, 3));
        assert_eq!(ps("N>=2").evaluate_p_exact(&half, 0).unwrap(), rat(1, 2));
        // finite sets evaluate anywhere at or beyond 1
        assert_eq!(ps("{1,2}").evaluate_p_exact(&rat(2, 1), 0).unwrap(), rat(6, 1));
        let iv = ps("N").evaluate_p(&half, 1, 64).unwrap();
        assert!(iv.contains(&rat(4, 1)));
        assert!(iv.width().is_zero());
    }

    #[test]
    fn evaluate_p_domain_errors() {
        assert!(matches!(
            ps("N").evaluate_p_exact(&rat(1, 1), 0),
            Err(Error::OutOfDomain { .. })
        ));
        assert!(matches!(
            ps("2N").evaluate_p_exact(&rat(3, 2), 0),
            Err(Error::OutOfDomain { .. })
        ));
        assert!(matches!(
            ps("{1,2}").evaluate_p_exact(&rat(-1, 2), 0),
            Err(Error::OutOfDomain { .. })
        ));
    }

    #[test]
    fn validate_for_asymptotics_cases() {
        assert!(ps("{1,2}").validate_for_asymptotics().is_ok());
        assert!(ps("N").validate_for_asymptotics().is_ok());
        assert!(ps("odd>=1").validate_for_asymptotics().is_ok());
        assert!(matches!(
            ps("{2,4}").validate_for_asymptotics(),
            Err(Error::Periodic { gcd: 2 })
        ));
        assert!(matches!(
            ps("2N").validate_for_asymptotics(),
            Err(Error::Periodic { gcd: 2 })
        ));
        assert!(matches!(
            ps("{1}").validate_for_asymptotics(),
            Err(Error::NotSupercritical { .. })
        ));
    }

    /// Tail of `sum_{j>J} j x^(j-1)` over all integers: derivative of the
    /// geometric tail, an upper bound for any unit-weight family.
    fn deriv1_tail(x: &BigRational, j: u64) -> BigRational {
        let one = BigRational::one();
        let q = &one - x;
        let jj = BigRational::from_integer(BigInt::from(j + 1));
        (&jj * &x.pow(j as i32) * &q + x.pow(j as i32 + 1)) / (&q * &q)
    }

    /// Tail of `sum_{j>J} j (j-1) x^(j-2)` over all integers.
    fn deriv2_tail(x: &BigRational, j: u64) -> BigRational {
        let one = BigRational::one();
        let q = &one - x;
        let jr = BigRational::from_integer(BigInt::from(j));
        let jp = BigRational::from_integer(BigInt::from(j + 1));
        &jr * &jp * x.pow(j as i32 - 1) / &q
            + rat(2, 1) * (&jp * x.pow(j as i32) * &q + x.pow(j as i32 + 1)) / (&q * &q * &q)
    }

    #[test]
    fn closed_forms_match_series_partial_sums() {
        let cut = 200u64;
        for text in ["N", "N>=2", "N>=5", "2N", "3N", "odd>=1", "odd>=3"] {
            let set = ps(text);
            for x in [rat(1, 10), rat(1, 2), rat(7, 10)] {
                let mut partial = [BigRational::zero(), BigRational::zero(), BigRational::zero()];
                for j in 1..=cut {
                    let w = set.coefficient(j);
                    if w.is_zero() {
                        continue;
                    }
                    partial[0] += &w * x.pow(j as i32);
                    partial[1] += &w * rat(j as i64, 1) * x.pow(j as i32 - 1);
                    if j >= 2 {
                        partial[2] += &w * rat((j * (j - 1)) as i64, 1) * x.pow(j as i32 - 2);
                    }
                }
                let tails = [
                    set.tail_bound(&x, cut).unwrap(),
                    deriv1_tail(&x, cut),
                    deriv2_tail(&x, cut),
                ];
                for order in 0..=2u8 {
                    let exact = set.evaluate_p_exact(&x, order).unwrap();
                    assert!(
                        partial[order as usize] <= exact,
                        "{} order {} at {}: partial exceeds closed form",
                        text,
                        order,
                        x
                    );
                    assert!(
                        exact <= &partial[order as usize] + &tails[order as usize],
                        "{} order {} at {}: closed form exceeds partial + tail",
                        text,
                        order,
                        x
                    );
                }
            }
        }
    }

    #[test]
    fn finite_derivatives_by_hand() {
        let set = ps("{1^2,2^3}");
        let x = rat(1, 3);
        assert_eq!(set.evaluate_p_exact(&x, 0).unwrap(), rat(2, 3) + rat(1, 3));
        assert_eq!(set.evaluate_p_exact(&x, 1).unwrap(), rat(4, 1));
        assert_eq!(set.evaluate_p_exact(&x, 2).unwrap(), rat(6, 1));
    }

    fn arb_partset() -> impl Strategy<Value = PartSet> {
        let finite = proptest::collection::btree_map(1u64..40, (1u64..20, 1u64..20), 1..6).prop_map(
            |entries| {
                let items = entries
                    .into_iter()
                    .map(|(part, (n, d))| (part, rat(n as i64, d as i64)))
                    .collect();
                PartSet::from_spec(PartSetSpec::Finite(items), false).unwrap()
            },
        );
        prop_oneof![
            Just(PartSet::from_spec(PartSetSpec::AllParts, false).unwrap()),
            (2u64..20).prop_map(|d| PartSet::from_spec(PartSetSpec::Tail(d), false).unwrap()),
            (2u64..20)
                .prop_map(|d| PartSet::from_spec(PartSetSpec::Progression(d), false).unwrap()),
            (0u64..10)
                .prop_map(|k| PartSet::from_spec(PartSetSpec::OddTail(2 * k + 1), false).unwrap()),
            finite,
        ]
    }

    proptest! {
        #[test]
        fn pair_gcd_matches(a in 1u64..30, delta in 1u64..30) {
            let b = a + delta;
            let set = parse_part_spec(&format!("{{{},{}}}", a, b)).unwrap();
            prop_assert_eq!(set.support_gcd(), num_integer::gcd(a, b));
        }

        #[test]
        fn display_parse_round_trip(set in arb_partset()) {
            let text = set.to_string();
            let reparsed = parse_part_spec(&text).unwrap();
            prop_assert_eq!(set, reparsed);
        }

        #[test]
        fn partial_sum_within_tail_bound(
            num in 1i64..79, set in arb_partset(), cut in 10u64..120,
        ) {
            let x = rat(num, 80);
            let mut partial = BigRational::zero();
            for j in 1..=cut {
                partial += set.coefficient(j) * x.pow(j as i32);
            }
            let exact = set.evaluate_p_exact(&x, 0).unwrap();
            let tail = set.tail_bound(&x, cut).unwrap();
            prop_assert!(partial <= exact);
            prop_assert!(exact <= &partial + &tail);
        }
    }
}
