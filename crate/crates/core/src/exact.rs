//! Exact rational arithmetic and binomial coefficients.
//!
//! Every scalar in the crate (matrix coefficients, eigenvalues, bounds) is a
//! [`Rational`]. Binomials come from a shared Pascal table that grows on
//! demand and is safe to read from many threads.

use std::cmp::Ordering;
use std::fmt;
use std::iter::{Product, Sum};
use std::ops::{Add, AddAssign, Mul, MulAssign, Neg, Sub, SubAssign};
use std::str::FromStr;
use std::sync::{OnceLock, RwLock};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{domain, Error, Result};

/// Arbitrary-precision fraction, always in lowest terms with a positive
/// denominator.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Rational(BigRational);

impl Rational {
    /// `p/q` reduced to lowest terms. Fails when `q == 0`.
    pub fn new(p: impl Into<BigInt>, q: impl Into<BigInt>) -> Result<Self> {
        let q = q.into();
        if q.is_zero() {
            return domain("rational with zero denominator");
        }
        Ok(Rational(BigRational::new(p.into(), q)))
    }

    pub fn from_integer(v: impl Into<BigInt>) -> Self {
        Rational(BigRational::from_integer(v.into()))
    }

    pub fn zero() -> Self {
        Rational(BigRational::zero())
    }

    pub fn one() -> Self {
        Rational(BigRational::one())
    }

    /// `(-1)^e` for any integer exponent.
    pub fn sign_power(e: i64) -> Self {
        if e.rem_euclid(2) == 0 {
            Self::one()
        } else {
            -Self::one()
        }
    }

    pub fn numer(&self) -> &BigInt {
        self.0.numer()
    }

    pub fn denom(&self) -> &BigInt {
        self.0.denom()
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn is_integer(&self) -> bool {
        self.0.is_integer()
    }

    pub fn is_positive(&self) -> bool {
        self.0.is_positive()
    }

    pub fn is_negative(&self) -> bool {
        self.0.is_negative()
    }

    pub fn abs(&self) -> Self {
        Rational(self.0.abs())
    }

    pub fn checked_div(&self, rhs: &Rational) -> Result<Rational> {
        if rhs.is_zero() {
            return domain(format!("division of {self} by zero"));
        }
        Ok(Rational(&self.0 / &rhs.0))
    }

    pub fn recip(&self) -> Result<Rational> {
        Rational::one().checked_div(self)
    }

    /// Nearest `f64`; only ever used for display and test oracles.
    pub fn to_f64(&self) -> f64 {
        self.0.to_f64().unwrap_or(f64::NAN)
    }

    pub fn as_big_rational(&self) -> &BigRational {
        &self.0
    }
}

impl From<BigRational> for Rational {
    fn from(v: BigRational) -> Self {
        Rational(v)
    }
}

impl From<BigInt> for Rational {
    fn from(v: BigInt) -> Self {
        Rational::from_integer(v)
    }
}

macro_rules! from_primitive {
    ($($t:ty),*) => {$(
        impl From<$t> for Rational {
            fn from(v: $t) -> Self {
                Rational::from_integer(BigInt::from(v))
            }
        }
    )*};
}
from_primitive!(i32, i64, u32, u64, usize);

/// Normalised fraction `p/q`; zero denominator is a domain error.
pub fn rational(p: i64, q: i64) -> Result<Rational> {
    Rational::new(p, q)
}

macro_rules! forward_binop {
    ($tr:ident, $method:ident, $assign_tr:ident, $assign_method:ident) => {
        impl $tr<Rational> for Rational {
            type Output = Rational;
            fn $method(self, rhs: Rational) -> Rational {
                Rational(self.0.$method(rhs.0))
            }
        }
        impl $tr<&Rational> for Rational {
            type Output = Rational;
            fn $method(self, rhs: &Rational) -> Rational {
                Rational(self.0.$method(&rhs.0))
            }
        }
        impl $tr<&Rational> for &Rational {
            type Output = Rational;
            fn $method(self, rhs: &Rational) -> Rational {
                Rational((&self.0).$method(&rhs.0))
            }
        }
        impl $tr<Rational> for &Rational {
            type Output = Rational;
            fn $method(self, rhs: Rational) -> Rational {
                Rational((&self.0).$method(rhs.0))
            }
        }
        impl $assign_tr<Rational> for Rational {
            fn $assign_method(&mut self, rhs: Rational) {
                self.0.$assign_method(rhs.0);
            }
        }
        impl $assign_tr<&Rational> for Rational {
            fn $assign_method(&mut self, rhs: &Rational) {
                self.0.$assign_method(&rhs.0);
            }
        }
    };
}

forward_binop!(Add, add, AddAssign, add_assign);
forward_binop!(Sub, sub, SubAssign, sub_assign);
forward_binop!(Mul, mul, MulAssign, mul_assign);

impl Neg for Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        Rational(-self.0)
    }
}

impl Neg for &Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        Rational(-&self.0)
    }
}

impl Sum for Rational {
    fn sum<I: Iterator<Item = Rational>>(iter: I) -> Rational {
        iter.fold(Rational::zero(), |acc, x| acc + x)
    }
}

impl<'a> Sum<&'a Rational> for Rational {
    fn sum<I: Iterator<Item = &'a Rational>>(iter: I) -> Rational {
        iter.fold(Rational::zero(), |acc, x| acc + x)
    }
}

impl Product for Rational {
    fn product<I: Iterator<Item = Rational>>(iter: I) -> Rational {
        iter.fold(Rational::one(), |acc, x| acc * x)
    }
}

impl PartialEq<i64> for Rational {
    fn eq(&self, other: &i64) -> bool {
        self.0.is_integer() && *self.0.numer() == BigInt::from(*other)
    }
}

impl PartialOrd<i64> for Rational {
    fn partial_cmp(&self, other: &i64) -> Option<Ordering> {
        Some(self.cmp(&Rational::from(*other)))
    }
}

/// `p/q`, or just `p` when the denominator is one.
impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_integer() {
            write!(f, "{}", self.0.numer())
        } else {
            write!(f, "{}/{}", self.0.numer(), self.0.denom())
        }
    }
}

impl fmt::Debug for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Accepts `p` or `p/q` with an optional leading minus on `p`. A denominator
/// must be a positive integer without sign.
impl FromStr for Rational {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Parse(format!("invalid rational literal {s:?}"));
        let int = |part: &str, signed: bool| -> Result<BigInt> {
            let digits = if signed {
                part.strip_prefix('-').unwrap_or(part)
            } else {
                part
            };
            if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
                return Err(bad());
            }
            part.parse::<BigInt>().map_err(|_| bad())
        };
        match s.split_once('/') {
            None => Ok(Rational::from_integer(int(s, true)?)),
            Some((p, q)) => {
                let q = int(q, false)?;
                if q.is_zero() {
                    return Err(Error::Parse(format!("zero denominator in {s:?}")));
                }
                Ok(Rational(BigRational::new(int(p, true)?, q)))
            }
        }
    }
}

impl Serialize for Rational {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Rational {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// Rows of Pascal's triangle kept up to this top; larger tops are computed
/// directly by the multiplicative formula.
const MEMO_ROWS: u64 = 1024;

/// Memoised `C(m, r)` for nonnegative `m`, grown row by row.
#[derive(Debug)]
pub struct BinomialTable {
    rows: RwLock<Vec<Vec<BigInt>>>,
}

impl Default for BinomialTable {
    fn default() -> Self {
        Self::new()
    }
}

impl BinomialTable {
    pub fn new() -> Self {
        BinomialTable {
            rows: RwLock::new(vec![vec![BigInt::one()]]),
        }
    }

    /// `C(m, r)`, zero when `r < 0` or `r > m`.
    pub fn get(&self, m: u64, r: i64) -> BigInt {
        if r < 0 || r as u64 > m {
            return BigInt::zero();
        }
        let r = r as u64;
        if m >= MEMO_ROWS {
            return multiplicative(m, r.min(m - r));
        }
        let (mu, ru) = (m as usize, r as usize);
        {
            let rows = self.rows.read().unwrap_or_else(|e| e.into_inner());
            if let Some(row) = rows.get(mu) {
                return row[ru].clone();
            }
        }
        let mut rows = self.rows.write().unwrap_or_else(|e| e.into_inner());
        while rows.len() <= mu {
            let prev = rows.last().expect("row 0 always present");
            let mut next = Vec::with_capacity(prev.len() + 1);
            next.push(BigInt::one());
            for w in prev.windows(2) {
                next.push(&w[0] + &w[1]);
            }
            next.push(BigInt::one());
            rows.push(next);
        }
        rows[mu][ru].clone()
    }

    pub fn cached_rows(&self) -> usize {
        self.rows.read().unwrap_or_else(|e| e.into_inner()).len()
    }
}

fn multiplicative(m: u64, r: u64) -> BigInt {
    let mut acc = BigInt::one();
    for j in 0..r {
        acc *= BigInt::from(m - j);
        acc /= BigInt::from(j + 1);
    }
    acc
}

fn shared_table() -> &'static BinomialTable {
    static TABLE: OnceLock<BinomialTable> = OnceLock::new();
    TABLE.get_or_init(BinomialTable::new)
}

/// `C(m, r)` as an integer. Negative tops are rejected.
pub fn binomial_int(m: i64, r: i64) -> Result<BigInt> {
    if m < 0 {
        return domain(format!("binomial top must be nonnegative, got C({m}, {r})"));
    }
    Ok(shared_table().get(m as u64, r))
}

/// `C(m, r)` under the zero-outside-range convention, as a [`Rational`].
pub fn binomial(m: i64, r: i64) -> Result<Rational> {
    binomial_int(m, r).map(Rational::from_integer)
}
