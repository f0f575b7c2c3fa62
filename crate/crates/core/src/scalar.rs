//! Exact arithmetic in the quadratic field Q(√2).
//!
//! Every coefficient arising from spin branching (powers of √2), from the
//! ⟨⟨α⟩⟩ normalisation and from ratios of Brauer characters lives here.

use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// An element `a + b·√2` with `a`, `b` exact rationals.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Scalar {
    a: BigRational,
    b: BigRational,
}

impl Scalar {
    pub fn new(a: BigRational, b: BigRational) -> Self {
        Scalar { a, b }
    }

    pub fn from_int(n: i64) -> Self {
        Scalar::new(BigRational::from_integer(n.into()), BigRational::zero())
    }

    pub fn from_rational(a: BigRational) -> Self {
        Scalar::new(a, BigRational::zero())
    }

    pub fn from_ratio(num: i64, den: i64) -> Self {
        Scalar::from_rational(BigRational::new(num.into(), den.into()))
    }

    /// `√2`.
    pub fn sqrt2() -> Self {
        Scalar::new(BigRational::zero(), BigRational::one())
    }

    pub fn zero() -> Self {
        Scalar::default()
    }

    pub fn one() -> Self {
        Scalar::from_int(1)
    }

    /// Rational part.
    pub fn rational_part(&self) -> &BigRational {
        &self.a
    }

    /// Coefficient of √2.
    pub fn sqrt2_part(&self) -> &BigRational {
        &self.b
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }

    pub fn is_rational(&self) -> bool {
        self.b.is_zero()
    }

    /// The Galois conjugate `a − b√2`.
    pub fn conjugate(&self) -> Self {
        Scalar::new(self.a.clone(), -self.b.clone())
    }

    /// The field norm `a² − 2b²`.
    pub fn norm(&self) -> BigRational {
        &self.a * &self.a - BigRational::from_integer(2.into()) * &self.b * &self.b
    }

    pub fn checked_div(&self, rhs: &Scalar) -> Result<Scalar> {
        if rhs.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let n = rhs.norm();
        let num = self * &rhs.conjugate();
        Ok(Scalar::new(num.a / &n, num.b / &n))
    }

    pub fn scale(&self, r: &BigRational) -> Scalar {
        Scalar::new(&self.a * r, &self.b * r)
    }

    /// True when the value lies in `Z ∪ Z·√2`.
    pub fn is_integer_or_integer_sqrt2(&self) -> bool {
        (self.b.is_zero() && self.a.is_integer()) || (self.a.is_zero() && self.b.is_integer())
    }

    /// Sign of the real number `a + b√2`: -1, 0 or 1.
    pub fn signum(&self) -> i32 {
        let sa = sign_of(&self.a);
        let sb = sign_of(&self.b);
        if sa == sb || sb == 0 {
            return sa;
        }
        if sa == 0 {
            return sb;
        }
        // opposite signs: compare a² with 2b²
        let a2 = &self.a * &self.a;
        let b2 = BigRational::from_integer(2.into()) * &self.b * &self.b;
        if a2 > b2 {
            sa
        } else {
            sb
        }
    }

    pub fn is_positive(&self) -> bool {
        self.signum() > 0
    }
}

fn sign_of(r: &BigRational) -> i32 {
    if r.is_zero() {
        0
    } else if r.is_positive() {
        1
    } else {
        -1
    }
}

/// `√2^k` for any integer `k`.
pub fn sqrt2_pow(k: i64) -> Scalar {
    let half = k.div_euclid(2);
    let odd = k.rem_euclid(2) == 1;
    let two = BigInt::from(2);
    let p = if half >= 0 {
        BigRational::from_integer(num_traits::pow(two, half as usize))
    } else {
        BigRational::new(BigInt::one(), num_traits::pow(two, (-half) as usize))
    };
    if odd {
        Scalar::new(BigRational::zero(), p)
    } else {
        Scalar::new(p, BigRational::zero())
    }
}

impl From<i64> for Scalar {
    fn from(n: i64) -> Self {
        Scalar::from_int(n)
    }
}

impl From<BigRational> for Scalar {
    fn from(r: BigRational) -> Self {
        Scalar::from_rational(r)
    }
}

impl<'a> Add<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn add(self, rhs: &Scalar) -> Scalar {
        Scalar::new(&self.a + &rhs.a, &self.b + &rhs.b)
    }
}

impl Add for Scalar {
    type Output = Scalar;
    fn add(self, rhs: Scalar) -> Scalar {
        Scalar::new(self.a + rhs.a, self.b + rhs.b)
    }
}

impl AddAssign<&Scalar> for Scalar {
    fn add_assign(&mut self, rhs: &Scalar) {
        self.a += &rhs.a;
        self.b += &rhs.b;
    }
}

impl<'a> Sub<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn sub(self, rhs: &Scalar) -> Scalar {
        Scalar::new(&self.a - &rhs.a, &self.b - &rhs.b)
    }
}

impl Sub for Scalar {
    type Output = Scalar;
    fn sub(self, rhs: Scalar) -> Scalar {
        Scalar::new(self.a - rhs.a, self.b - rhs.b)
    }
}

impl SubAssign<&Scalar> for Scalar {
    fn sub_assign(&mut self, rhs: &Scalar) {
        self.a -= &rhs.a;
        self.b -= &rhs.b;
    }
}

impl<'a> Mul<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn mul(self, rhs: &Scalar) -> Scalar {
        let two = BigRational::from_integer(2.into());
        Scalar::new(
            &self.a * &rhs.a + two * &self.b * &rhs.b,
            &self.a * &rhs.b + &self.b * &rhs.a,
        )
    }
}

impl Mul for Scalar {
    type Output = Scalar;
    fn mul(self, rhs: Scalar) -> Scalar {
        &self * &rhs
    }
}

/// Panics on division by zero; use [`Scalar::checked_div`] to handle it.
impl Div for Scalar {
    type Output = Scalar;
    fn div(self, rhs: Scalar) -> Scalar {
        self.checked_div(&rhs).expect("division by zero in Q(√2)")
    }
}

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        Scalar::new(-self.a, -self.b)
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        Scalar::new(-self.a.clone(), -self.b.clone())
    }
}

fn fmt_rational(r: &BigRational) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Human-readable form: `3`, `-√2`, `1/2·√2`, `1+√2`.
impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.b.is_zero() {
            return write!(f, "{}", fmt_rational(&self.a));
        }
        let sqrt_term = |b: &BigRational| -> String {
            if b.is_one() {
                "√2".to_string()
            } else if (-b).is_one() {
                "-√2".to_string()
            } else {
                format!("{}·√2", fmt_rational(b))
            }
        };
        if self.a.is_zero() {
            return write!(f, "{}", sqrt_term(&self.b));
        }
        let sign = if self.b.is_negative() { "-" } else { "+" };
        write!(f, "{}{}{}", fmt_rational(&self.a), sign, sqrt_term(&self.b.abs()))
    }
}

fn parse_rational(s: &str) -> Result<BigRational> {
    let bad = || Error::Parse(format!("bad rational {s:?}"));
    match s.split_once('/') {
        Some((p, q)) => {
            let p = BigInt::from_str(p.trim()).map_err(|_| bad())?;
            let q = BigInt::from_str(q.trim()).map_err(|_| bad())?;
            if q.is_zero() {
                return Err(bad());
            }
            Ok(BigRational::new(p, q))
        }
        None => Ok(BigRational::from_integer(
            BigInt::from_str(s.trim()).map_err(|_| bad())?,
        )),
    }
}

impl PartialOrd for Scalar {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Scalar {
    /// Structural order on `(a, b)`; only used to sort reports.
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        (self.rational_part(), self.sqrt2_part()).cmp(&(other.rational_part(), other.sqrt2_part()))
    }
}

#[derive(Serialize, Deserialize)]
struct ScalarRepr {
    a: String,
    b: String,
}

/// Serialized as `{"a":"p/q","b":"r/s"}` with the denominator always written.
impl Serialize for Scalar {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        ScalarRepr {
            a: format!("{}/{}", self.a.numer(), self.a.denom()),
            b: format!("{}/{}", self.b.numer(), self.b.denom()),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for Scalar {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let r = ScalarRepr::deserialize(d)?;
        let a = parse_rational(&r.a).map_err(serde::de::Error::custom)?;
        let b = parse_rational(&r.b).map_err(serde::de::Error::custom)?;
        Ok(Scalar::new(a, b))
    }
}
