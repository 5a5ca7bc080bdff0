//! Exact scalar fields: the rationals and prime fields `F_p`.
//!
//! Algorithms are generic over [`Field`]; runtime selection goes through
//! [`Characteristic`] and the [`with_field!`](crate::with_field) macro.

use std::fmt;
use std::hash::Hash;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Characteristic of a coefficient field. `Zero` stands for the rationals
/// (the "p = infinity" case of the combinatorics).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Characteristic {
    Zero,
    Prime(u32),
}

impl Characteristic {
    /// Checked constructor for a prime characteristic.
    pub fn prime(p: u64) -> Result<Self> {
        if p > u32::MAX as u64 || !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        Ok(Characteristic::Prime(p as u32))
    }

    /// The prime, or `None` in characteristic zero.
    pub fn p(self) -> Option<u64> {
        match self {
            Characteristic::Zero => None,
            Characteristic::Prime(p) => Some(p as u64),
        }
    }

    /// Whether a multiplicity `m` is allowed in a regular partition.
    pub fn allows_multiplicity(self, m: usize) -> bool {
        match self {
            Characteristic::Zero => true,
            Characteristic::Prime(p) => (m as u64) < p as u64,
        }
    }
}

impl fmt::Display for Characteristic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Characteristic::Zero => write!(f, "0"),
            Characteristic::Prime(p) => write!(f, "{p}"),
        }
    }
}

// JSON form: {"char": 0} or {"char": 5}
#[derive(Serialize, Deserialize)]
struct CharRepr {
    #[serde(rename = "char")]
    ch: u64,
}

impl Serialize for Characteristic {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        CharRepr {
            ch: self.p().unwrap_or(0),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for Characteristic {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let r = CharRepr::deserialize(d)?;
        if r.ch == 0 {
            Ok(Characteristic::Zero)
        } else {
            Characteristic::prime(r.ch).map_err(serde::de::Error::custom)
        }
    }
}

/// Trial-division primality test; inputs are small.
pub fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// Smallest prime strictly greater than `n`.
pub fn next_prime(n: u64) -> u64 {
    let mut m = n + 1;
    while !is_prime(m) {
        m += 1;
    }
    m
}

/// An exact field with elements of type `Elem`.
pub trait Field: Clone + PartialEq + Eq + Send + Sync + fmt::Debug + 'static {
    type Elem: Clone + PartialEq + Eq + Hash + fmt::Debug + Send + Sync;

    fn characteristic(&self) -> Characteristic;
    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn from_i64(&self, v: i64) -> Self::Elem;
    fn from_u64(&self, v: u64) -> Self::Elem;
    fn is_zero(&self, a: &Self::Elem) -> bool;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    /// Multiplicative inverse, `None` for zero.
    fn inv(&self, a: &Self::Elem) -> Option<Self::Elem>;
    fn format(&self, a: &Self::Elem) -> String;
    fn parse(&self, s: &str) -> Result<Self::Elem>;

    fn is_one(&self, a: &Self::Elem) -> bool {
        *a == self.one()
    }

    /// `acc += a * b`
    fn add_mul(&self, acc: &mut Self::Elem, a: &Self::Elem, b: &Self::Elem) {
        let t = self.mul(a, b);
        *acc = self.add(acc, &t);
    }

    /// `acc -= a * b`
    fn sub_mul(&self, acc: &mut Self::Elem, a: &Self::Elem, b: &Self::Elem) {
        let t = self.mul(a, b);
        *acc = self.sub(acc, &t);
    }

    fn pow(&self, a: &Self::Elem, mut e: u64) -> Self::Elem {
        let mut base = a.clone();
        let mut acc = self.one();
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(&acc, &base);
            }
            base = self.mul(&base, &base);
            e >>= 1;
        }
        acc
    }
}

// ---------------------------------------------------------------------------
// Prime fields

/// `F_p` for a prime `p < 2^32`; residues are stored in `[0, p)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct PrimeField {
    p: u64,
}

impl PrimeField {
    pub fn new(p: u64) -> Result<Self> {
        Characteristic::prime(p)?;
        Ok(PrimeField { p })
    }

    pub fn p(&self) -> u64 {
        self.p
    }
}

impl Field for PrimeField {
    type Elem = u64;

    fn characteristic(&self) -> Characteristic {
        Characteristic::Prime(self.p as u32)
    }
    fn zero(&self) -> u64 {
        0
    }
    fn one(&self) -> u64 {
        1 % self.p
    }
    fn from_i64(&self, v: i64) -> u64 {
        v.rem_euclid(self.p as i64) as u64
    }
    fn from_u64(&self, v: u64) -> u64 {
        v % self.p
    }
    #[inline]
    fn is_zero(&self, a: &u64) -> bool {
        *a == 0
    }
    #[inline]
    fn add(&self, a: &u64, b: &u64) -> u64 {
        let s = a + b;
        if s >= self.p {
            s - self.p
        } else {
            s
        }
    }
    #[inline]
    fn sub(&self, a: &u64, b: &u64) -> u64 {
        if a >= b {
            a - b
        } else {
            a + self.p - b
        }
    }
    #[inline]
    fn neg(&self, a: &u64) -> u64 {
        if *a == 0 {
            0
        } else {
            self.p - a
        }
    }
    #[inline]
    fn mul(&self, a: &u64, b: &u64) -> u64 {
        a * b % self.p
    }
    fn inv(&self, a: &u64) -> Option<u64> {
        if *a == 0 {
            return None;
        }
        let (g, x, _) = ext_gcd(*a as i64, self.p as i64);
        debug_assert_eq!(g, 1);
        Some(self.from_i64(x))
    }
    #[inline]
    fn add_mul(&self, acc: &mut u64, a: &u64, b: &u64) {
        *acc = (*acc + a * b % self.p) % self.p;
    }
    #[inline]
    fn sub_mul(&self, acc: &mut u64, a: &u64, b: &u64) {
        let t = a * b % self.p;
        *acc = self.sub(acc, &t);
    }
    fn format(&self, a: &u64) -> String {
        a.to_string()
    }
    fn parse(&self, s: &str) -> Result<u64> {
        let r: Rational = s.parse()?;
        let (num, den) = r.to_bigints();
        let p = BigInt::from(self.p);
        let den = den.mod_floor(&p).to_u64().unwrap_or(0);
        let inv = self
            .inv(&den)
            .ok_or_else(|| Error::Parse(format!("{s}: denominator vanishes mod {}", self.p)))?;
        let num = num.mod_floor(&p).to_u64().unwrap_or(0);
        Ok(self.mul(&num, &inv))
    }
}

fn ext_gcd(a: i64, b: i64) -> (i64, i64, i64) {
    if b == 0 {
        (a, 1, 0)
    } else {
        let (g, x, y) = ext_gcd(b, a.rem_euclid(b));
        (g, y, x - a.div_euclid(b) * y)
    }
}

// ---------------------------------------------------------------------------
// Rationals

/// Exact rational number in lowest terms with positive denominator.
///
/// Values that fit are kept as a pair of `i64`; arithmetic runs in `i128`
/// and promotes to a [`BigRational`] on overflow. The representation is
/// canonical, so derived equality and hashing are sound.
#[derive(Clone, PartialEq, Eq, Hash)]
pub enum Rational {
    Small(i64, i64),
    Big(BigRational),
}

#[inline]
fn fits(v: i128) -> bool {
    v > i64::MIN as i128 && v <= i64::MAX as i128
}

impl Rational {
    pub fn zero() -> Self {
        Rational::Small(0, 1)
    }

    pub fn one() -> Self {
        Rational::Small(1, 1)
    }

    pub fn integer(v: i64) -> Self {
        if v == i64::MIN {
            Rational::Big(BigRational::from_integer(BigInt::from(v)))
        } else {
            Rational::Small(v, 1)
        }
    }

    /// Builds `num/den` in lowest terms. Panics if `den == 0`.
    pub fn new(num: i64, den: i64) -> Self {
        Self::from_i128(num as i128, den as i128)
    }

    fn from_i128(mut num: i128, mut den: i128) -> Self {
        assert!(den != 0, "zero denominator");
        if den < 0 {
            num = -num;
            den = -den;
        }
        let g = num.gcd(&den);
        if g > 1 {
            num /= g;
            den /= g;
        }
        if fits(num) && fits(den) {
            Rational::Small(num as i64, den as i64)
        } else {
            Rational::Big(BigRational::new_raw(BigInt::from(num), BigInt::from(den)))
        }
    }

    fn from_big(r: BigRational) -> Self {
        // BigRational arithmetic keeps values reduced with positive denominator
        match (r.numer().to_i64(), r.denom().to_i64()) {
            (Some(a), Some(b)) if a != i64::MIN && b != i64::MIN => Rational::Small(a, b),
            _ => Rational::Big(r),
        }
    }

    fn to_big(&self) -> BigRational {
        match self {
            Rational::Small(a, b) => BigRational::new_raw(BigInt::from(*a), BigInt::from(*b)),
            Rational::Big(r) => r.clone(),
        }
    }

    /// Numerator and denominator as big integers.
    pub fn to_bigints(&self) -> (BigInt, BigInt) {
        match self {
            Rational::Small(a, b) => (BigInt::from(*a), BigInt::from(*b)),
            Rational::Big(r) => (r.numer().clone(), r.denom().clone()),
        }
    }

    pub fn is_zero(&self) -> bool {
        matches!(self, Rational::Small(0, _))
    }

    pub fn is_integer(&self) -> bool {
        match self {
            Rational::Small(_, d) => *d == 1,
            Rational::Big(r) => r.is_integer(),
        }
    }

    /// The value as an `i64` if it is an integer that fits.
    pub fn to_i64(&self) -> Option<i64> {
        match self {
            Rational::Small(a, 1) => Some(*a),
            _ => None,
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        match (self, other) {
            (Rational::Small(a, 1), Rational::Small(c, 1)) => match a.checked_add(*c) {
                Some(v) if v != i64::MIN => Rational::Small(v, 1),
                _ => Self::from_i128(*a as i128 + *c as i128, 1),
            },
            (Rational::Small(a, b), Rational::Small(c, d)) => {
                let (a, b, c, d) = (*a as i128, *b as i128, *c as i128, *d as i128);
                if b == d {
                    Self::from_i128(a + c, b)
                } else {
                    Self::from_i128(a * d + c * b, b * d)
                }
            }
            _ => Self::from_big(self.to_big() + other.to_big()),
        }
    }

    pub fn neg(&self) -> Self {
        match self {
            Rational::Small(a, b) => Rational::Small(-a, *b),
            Rational::Big(r) => Self::from_big(-r),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Self {
        match (self, other) {
            (Rational::Small(0, _), _) | (_, Rational::Small(0, _)) => Rational::zero(),
            (Rational::Small(a, 1), Rational::Small(c, 1)) => match a.checked_mul(*c) {
                Some(v) if v != i64::MIN => Rational::Small(v, 1),
                _ => Self::from_i128(*a as i128 * *c as i128, 1),
            },
            (Rational::Small(a, b), Rational::Small(c, d)) => {
                Self::from_i128(*a as i128 * *c as i128, *b as i128 * *d as i128)
            }
            _ => Self::from_big(self.to_big() * other.to_big()),
        }
    }

    pub fn inv(&self) -> Option<Self> {
        match self {
            Rational::Small(0, _) => None,
            Rational::Small(a, b) => Some(Self::from_i128(*b as i128, *a as i128)),
            Rational::Big(r) => Some(Self::from_big(r.recip())),
        }
    }
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Rational::Small(a, 1) => write!(f, "{a}"),
            Rational::Small(a, b) => write!(f, "{a}/{b}"),
            Rational::Big(r) if r.is_integer() => write!(f, "{}", r.numer()),
            Rational::Big(r) => write!(f, "{}/{}", r.numer(), r.denom()),
        }
    }
}

impl fmt::Debug for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for Rational {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Parse(format!("not a rational number: {s:?}"));
        let s = s.trim();
        let (n, d) = match s.split_once('/') {
            Some((n, d)) => (n.trim(), d.trim()),
            None => (s, "1"),
        };
        let num: BigInt = n.parse().map_err(|_| bad())?;
        let den: BigInt = d.parse().map_err(|_| bad())?;
        if den.is_zero() {
            return Err(bad());
        }
        Ok(Self::from_big(BigRational::new(num, den)))
    }
}

impl From<i64> for Rational {
    fn from(v: i64) -> Self {
        Rational::integer(v)
    }
}

impl From<BigRational> for Rational {
    fn from(r: BigRational) -> Self {
        Self::from_big(r)
    }
}

impl From<Rational> for BigRational {
    fn from(r: Rational) -> Self {
        r.to_big()
    }
}

/// The field of rational numbers.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct Rationals;

impl Field for Rationals {
    type Elem = Rational;

    fn characteristic(&self) -> Characteristic {
        Characteristic::Zero
    }
    fn zero(&self) -> Rational {
        Rational::zero()
    }
    fn one(&self) -> Rational {
        Rational::one()
    }
    fn from_i64(&self, v: i64) -> Rational {
        Rational::integer(v)
    }
    fn from_u64(&self, v: u64) -> Rational {
        if v <= i64::MAX as u64 {
            Rational::Small(v as i64, 1)
        } else {
            Rational::Big(BigRational::from_integer(BigInt::from(v)))
        }
    }
    #[inline]
    fn is_zero(&self, a: &Rational) -> bool {
        a.is_zero()
    }
    fn is_one(&self, a: &Rational) -> bool {
        matches!(a, Rational::Small(1, 1))
    }
    fn add(&self, a: &Rational, b: &Rational) -> Rational {
        a.add(b)
    }
    fn sub(&self, a: &Rational, b: &Rational) -> Rational {
        a.sub(b)
    }
    fn neg(&self, a: &Rational) -> Rational {
        a.neg()
    }
    fn mul(&self, a: &Rational, b: &Rational) -> Rational {
        a.mul(b)
    }
    fn inv(&self, a: &Rational) -> Option<Rational> {
        a.inv()
    }
    fn format(&self, a: &Rational) -> String {
        a.to_string()
    }
    fn parse(&self, s: &str) -> Result<Rational> {
        s.parse()
    }
}

impl Rational {
    /// Sign of the value: -1, 0 or 1.
    pub fn signum(&self) -> i32 {
        match self {
            Rational::Small(a, _) => a.signum() as i32,
            Rational::Big(r) => {
                if r.is_positive() {
                    1
                } else if r.is_negative() {
                    -1
                } else {
                    0
                }
            }
        }
    }

    /// Whether this is the big-integer representation (for tests).
    pub fn is_big(&self) -> bool {
        matches!(self, Rational::Big(_))
    }
}

/// Runs `$body` with `$f` bound to the concrete field for a [`Characteristic`].
#[macro_export]
macro_rules! with_field {
    ($ch:expr, |$f:ident| $body:expr) => {
        match $ch {
            $crate::field::Characteristic::Zero => {
                let $f = $crate::field::Rationals;
                $body
            }
            $crate::field::Characteristic::Prime(p) => {
                let $f = $crate::field::PrimeField::new(p as u64)
                    .expect("Characteristic::Prime holds a prime");
                $body
            }
        }
    };
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn prime_checks() {
        assert!(Characteristic::prime(7).is_ok());
        assert_eq!(Characteristic::prime(9), Err(Error::NotPrime(9)));
        assert_eq!(next_prime(5), 7);
        assert_eq!(next_prime(7), 11);
    }

    #[test]
    fn fp_inverse() {
        let f = PrimeField::new(7).unwrap();
        for a in 1..7 {
            let i = f.inv(&a).unwrap();
            assert_eq!(f.mul(&a, &i), 1);
        }
        assert_eq!(f.parse("1/2").unwrap(), 4);
        assert_eq!(f.parse("-3").unwrap(), 4);
        assert!(f.parse("1/7").is_err());
    }

    #[test]
    fn rational_overflow_promotes_and_demotes() {
        let big = Rational::integer(i64::MAX);
        let s = big.add(&Rational::one());
        assert!(s.is_big());
        let back = s.sub(&Rational::one());
        assert_eq!(back, Rational::integer(i64::MAX));
        assert!(!back.is_big());
        let sq = big.mul(&big);
        assert!(sq.is_big());
        assert_eq!(sq.mul(&big.inv().unwrap()), big);
    }

    #[test]
    fn rational_parse_and_display() {
        let r: Rational = "6/-4".parse().unwrap();
        assert_eq!(r.to_string(), "-3/2");
        assert_eq!("12".parse::<Rational>().unwrap(), Rational::integer(12));
        assert!("1/0".parse::<Rational>().is_err());
        let huge: Rational = "123456789012345678901234567891/2".parse().unwrap();
        assert!(huge.is_big());
        assert_eq!(huge.to_string(), "123456789012345678901234567891/2");
    }

    #[test]
    fn characteristic_json() {
        let s = serde_json::to_string(&Characteristic::Prime(5)).unwrap();
        assert_eq!(s, r#"{"char":5}"#);
        let z: Characteristic = serde_json::from_str(r#"{"char":0}"#).unwrap();
        assert_eq!(z, Characteristic::Zero);
        assert!(serde_json::from_str::<Characteristic>(r#"{"char":4}"#).is_err());
    }

    fn big(r: &Rational) -> BigRational {
        r.clone().into()
    }

    proptest! {
        #[test]
        fn rational_matches_bigrational(a in any::<i64>(), b in 1i64..=i64::MAX,
                                        c in any::<i64>(), d in 1i64..=i64::MAX) {
            let x = Rational::from(BigRational::new(a.into(), b.into()));
            let y = Rational::from(BigRational::new(c.into(), d.into()));
            prop_assert_eq!(big(&x.add(&y)), big(&x) + big(&y));
            prop_assert_eq!(big(&x.sub(&y)), big(&x) - big(&y));
            prop_assert_eq!(big(&x.mul(&y)), big(&x) * big(&y));
            if !y.is_zero() {
                prop_assert_eq!(big(&y.inv().unwrap()), big(&y).recip());
            }
            // canonical form: equal values have equal representations
            prop_assert_eq!(x.add(&y).sub(&y), x);
        }

        #[test]
        fn fp_field_axioms(a in 0u64..101, b in 0u64..101, c in 0u64..101) {
            let f = PrimeField::new(101).unwrap();
            prop_assert_eq!(f.mul(&a, &f.add(&b, &c)), f.add(&f.mul(&a, &b), &f.mul(&a, &c)));
            prop_assert_eq!(f.add(&f.sub(&a, &b), &b), a);
            let mut acc = c;
            f.add_mul(&mut acc, &a, &b);
            f.sub_mul(&mut acc, &a, &b);
            prop_assert_eq!(acc, c);
        }
    }
}
