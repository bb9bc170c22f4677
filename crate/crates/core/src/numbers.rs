//! Exact arithmetic values shared by every other module.
//!
//! [`Natural`] is 1-based (`1, 2, 3, ...`), [`Whole`] includes zero,
//! [`Integer`] is signed and [`Rational`] is always kept reduced with a
//! positive denominator, so two rationals are equal exactly when their
//! fields are.

use std::fmt;
use std::str::FromStr;

use num_bigint::{BigInt, BigUint, Sign};
use num_integer::Integer as _;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Greatest common divisor of two non-negative integers, not both zero.
pub fn gcd(a: &BigUint, b: &BigUint) -> Result<BigUint> {
    if a.is_zero() && b.is_zero() {
        return Err(Error::InvalidArgument("gcd(0, 0) is undefined".into()));
    }
    Ok(a.gcd(b))
}

/// A positive natural number, `n >= 1`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Natural(BigUint);

impl Natural {
    pub fn new(value: BigUint) -> Result<Self> {
        if value.is_zero() {
            return Err(Error::not_in_domain(0, "a natural number (n >= 1)"));
        }
        Ok(Natural(value))
    }

    pub fn one() -> Self {
        Natural(BigUint::one())
    }

    pub fn value(&self) -> &BigUint {
        &self.0
    }

    pub fn into_inner(self) -> BigUint {
        self.0
    }

    pub fn is_even(&self) -> bool {
        self.0.is_even()
    }

    pub fn to_u64(&self) -> Option<u64> {
        self.0.to_u64()
    }

    pub fn to_usize(&self) -> Option<usize> {
        self.0.to_usize()
    }

    /// `self + k`, which stays natural.
    pub fn plus(&self, k: &BigUint) -> Natural {
        Natural(&self.0 + k)
    }

    /// Smart-constructor for the many places where positivity is evident from
    /// the arithmetic.
    pub(crate) fn from_positive(value: BigUint) -> Self {
        debug_assert!(!value.is_zero());
        Natural(value)
    }
}

impl From<std::num::NonZeroU64> for Natural {
    fn from(n: std::num::NonZeroU64) -> Self {
        Natural(BigUint::from(n.get()))
    }
}

impl TryFrom<u64> for Natural {
    type Error = Error;

    fn try_from(n: u64) -> Result<Self> {
        Natural::new(BigUint::from(n))
    }
}

impl TryFrom<Whole> for Natural {
    type Error = Error;

    fn try_from(w: Whole) -> Result<Self> {
        Natural::new(w.0)
    }
}

impl TryFrom<Integer> for Natural {
    type Error = Error;

    fn try_from(z: Integer) -> Result<Self> {
        match z.0.to_biguint() {
            Some(v) if !v.is_zero() => Ok(Natural(v)),
            _ => Err(Error::not_in_domain(z, "a natural number (n >= 1)")),
        }
    }
}

impl fmt::Display for Natural {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

impl FromStr for Natural {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let v = parse_unsigned(s, "a natural number")?;
        Natural::new(v)
    }
}

/// A natural number or zero.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Whole(BigUint);

impl Whole {
    pub fn new(value: BigUint) -> Self {
        Whole(value)
    }

    pub fn zero() -> Self {
        Whole(BigUint::zero())
    }

    pub fn value(&self) -> &BigUint {
        &self.0
    }

    pub fn into_inner(self) -> BigUint {
        self.0
    }
}

impl From<Natural> for Whole {
    fn from(n: Natural) -> Self {
        Whole(n.0)
    }
}

impl From<u64> for Whole {
    fn from(n: u64) -> Self {
        Whole(BigUint::from(n))
    }
}

impl fmt::Display for Whole {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

impl FromStr for Whole {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        parse_unsigned(s, "a whole number").map(Whole)
    }
}

/// A signed integer.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Integer(BigInt);

impl Integer {
    pub fn new(value: BigInt) -> Self {
        Integer(value)
    }

    pub fn zero() -> Self {
        Integer(BigInt::zero())
    }

    pub fn value(&self) -> &BigInt {
        &self.0
    }

    pub fn into_inner(self) -> BigInt {
        self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn is_negative(&self) -> bool {
        self.0.is_negative()
    }

    pub fn is_positive(&self) -> bool {
        self.0.is_positive()
    }

    pub fn abs(&self) -> BigUint {
        self.0.magnitude().clone()
    }

    pub fn to_i64(&self) -> Option<i64> {
        self.0.to_i64()
    }
}

impl std::ops::Neg for Integer {
    type Output = Integer;

    fn neg(self) -> Integer {
        Integer(-self.0)
    }
}

impl From<i64> for Integer {
    fn from(n: i64) -> Self {
        Integer(BigInt::from(n))
    }
}

impl From<Natural> for Integer {
    fn from(n: Natural) -> Self {
        Integer(BigInt::from(n.0))
    }
}

impl From<Whole> for Integer {
    fn from(w: Whole) -> Self {
        Integer(BigInt::from(w.0))
    }
}

impl fmt::Display for Integer {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

impl FromStr for Integer {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        parse_signed(s, "an integer").map(Integer)
    }
}

/// A rational number in lowest terms with a positive denominator.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Rational {
    numerator: BigInt,
    denominator: BigUint,
}

impl Rational {
    /// The unique reduced representative of `p/q`. Fails when `q = 0`.
    pub fn new(p: &Integer, q: &Integer) -> Result<Self> {
        Self::from_parts(p.0.clone(), q.0.clone())
    }

    pub fn from_parts(p: BigInt, q: BigInt) -> Result<Self> {
        if q.is_zero() {
            return Err(Error::InvalidRational {
                numerator: p.to_string(),
            });
        }
        if p.is_zero() {
            return Ok(Rational::zero());
        }
        let sign = if p.sign() == q.sign() {
            Sign::Plus
        } else {
            Sign::Minus
        };
        let (pm, qm) = (p.magnitude(), q.magnitude());
        let g = pm.gcd(qm);
        Ok(Rational {
            numerator: BigInt::from_biguint(sign, pm / &g),
            denominator: qm / &g,
        })
    }

    pub fn from_i64(p: i64, q: i64) -> Result<Self> {
        Self::from_parts(BigInt::from(p), BigInt::from(q))
    }

    pub fn zero() -> Self {
        Rational {
            numerator: BigInt::zero(),
            denominator: BigUint::one(),
        }
    }

    pub fn numerator(&self) -> &BigInt {
        &self.numerator
    }

    pub fn denominator(&self) -> &BigUint {
        &self.denominator
    }

    pub fn is_positive(&self) -> bool {
        self.numerator.is_positive()
    }

    pub fn is_negative(&self) -> bool {
        self.numerator.is_negative()
    }
}

/// Free-function form of [`Rational::new`].
pub fn make_rational(p: &Integer, q: &Integer) -> Result<Rational> {
    Rational::new(p, q)
}

impl std::ops::Neg for Rational {
    type Output = Rational;

    fn neg(self) -> Rational {
        Rational {
            numerator: -self.numerator,
            denominator: self.denominator,
        }
    }
}

impl Ord for Rational {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        let lhs = &self.numerator * BigInt::from(other.denominator.clone());
        let rhs = &other.numerator * BigInt::from(self.denominator.clone());
        lhs.cmp(&rhs)
    }
}

impl PartialOrd for Rational {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.numerator, self.denominator)
    }
}

/// Accepts `p/q` (any representative, normalized on the way in) or a bare
/// integer `p`.
impl FromStr for Rational {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        match s.split_once('/') {
            Some((p, q)) => {
                let p = parse_signed(p, "a rational numerator")
                    .map_err(|_| Error::parse(s, "a rational"))?;
                let q = parse_signed(q, "a rational denominator")
                    .map_err(|_| Error::parse(s, "a rational"))?;
                Rational::from_parts(p, q)
            }
            None => {
                let p = parse_signed(s, "a rational").map_err(|_| Error::parse(s, "a rational"))?;
                Rational::from_parts(p, BigInt::one())
            }
        }
    }
}

/// One decimal digit.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Digit(u8);

impl Digit {
    pub const ZERO: Digit = Digit(0);

    pub fn new(value: u8) -> Result<Self> {
        if value > 9 {
            return Err(Error::InvalidArgument(format!(
                "{value} is not a decimal digit"
            )));
        }
        Ok(Digit(value))
    }

    pub fn from_char(c: char) -> Result<Self> {
        c.to_digit(10)
            .map(|d| Digit(d as u8))
            .ok_or_else(|| Error::parse(&c.to_string(), "a decimal digit"))
    }

    pub fn value(self) -> u8 {
        self.0
    }

    /// `d + 1`, with 9 wrapping to 0.
    pub fn wrapping_succ(self) -> Digit {
        Digit((self.0 + 1) % 10)
    }

    pub fn to_char(self) -> char {
        char::from(b'0' + self.0)
    }
}

impl fmt::Display for Digit {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

fn is_plain_digits(s: &str) -> bool {
    !s.is_empty() && s.bytes().all(|b| b.is_ascii_digit())
}

fn parse_unsigned(s: &str, what: &'static str) -> Result<BigUint> {
    let t = s.trim();
    let t = t.strip_prefix('+').unwrap_or(t);
    if !is_plain_digits(t) {
        return Err(Error::parse(s, what));
    }
    t.parse::<BigUint>().map_err(|_| Error::parse(s, what))
}

fn parse_signed(s: &str, what: &'static str) -> Result<BigInt> {
    let t = s.trim();
    let (neg, body) = match t.strip_prefix('-') {
        Some(rest) => (true, rest),
        None => (false, t.strip_prefix('+').unwrap_or(t)),
    };
    if !is_plain_digits(body) {
        return Err(Error::parse(s, what));
    }
    let mag: BigUint = body.parse().map_err(|_| Error::parse(s, what))?;
    Ok(BigInt::from_biguint(
        if neg { Sign::Minus } else { Sign::Plus },
        mag,
    ))
}
