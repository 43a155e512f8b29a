//! Coefficient fields.
//!
//! Everything in the crate is generic over a [`Field`]. Two are provided:
//! the rationals [`Q`] (checked `i128` fractions) and the prime fields
//! [`Fp`]. Overflow in `Q` panics instead of wrapping, so a result is either
//! exact or absent.

use std::fmt::{self, Debug, Display};
use std::hash::Hash;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::str::FromStr;

use num_rational::Ratio;
use num_traits::{CheckedAdd, CheckedMul, CheckedSub, One, Signed, Zero};

pub trait Field:
    Copy
    + Eq
    + Hash
    + Debug
    + Display
    + Send
    + Sync
    + 'static
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
    + Div<Output = Self>
{
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn from_i64(n: i64) -> Self;
    /// Characteristic of the field (0 for `Q`).
    fn characteristic() -> u64;
    /// Short label used in reports and on the command line, e.g. `Q` or `F7`.
    fn label() -> String;
    /// Parse a coefficient such as `3`, `-2/5`.
    fn parse_coeff(s: &str) -> Option<Self>;

    fn is_one(&self) -> bool {
        *self == Self::one()
    }

    fn inv(self) -> Option<Self> {
        if self.is_zero() {
            None
        } else {
            Some(Self::one() / self)
        }
    }

    fn pow(self, mut e: u32) -> Self {
        let mut base = self;
        let mut acc = Self::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * base;
            }
            base = base * base;
            e >>= 1;
        }
        acc
    }

    /// Whether the printed form needs parentheses when used as a factor.
    fn is_negative_display(&self) -> bool {
        false
    }
}

/// Rational numbers with `i128` numerator and denominator.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Q(Ratio<i128>);

impl Q {
    pub fn new(num: i128, den: i128) -> Self {
        Q(Ratio::new(num, den))
    }

    pub fn numer(&self) -> i128 {
        *self.0.numer()
    }

    pub fn denom(&self) -> i128 {
        *self.0.denom()
    }
}

impl Add for Q {
    type Output = Q;
    fn add(self, rhs: Q) -> Q {
        Q(self.0.checked_add(&rhs.0).expect("rational overflow in addition"))
    }
}

impl Sub for Q {
    type Output = Q;
    fn sub(self, rhs: Q) -> Q {
        Q(self.0.checked_sub(&rhs.0).expect("rational overflow in subtraction"))
    }
}

impl Mul for Q {
    type Output = Q;
    fn mul(self, rhs: Q) -> Q {
        Q(self.0.checked_mul(&rhs.0).expect("rational overflow in multiplication"))
    }
}

impl Div for Q {
    type Output = Q;
    fn div(self, rhs: Q) -> Q {
        assert!(!rhs.0.is_zero(), "division by zero");
        let inv = Ratio::new(*rhs.0.denom(), *rhs.0.numer());
        Q(self.0.checked_mul(&inv).expect("rational overflow in division"))
    }
}

impl Neg for Q {
    type Output = Q;
    fn neg(self) -> Q {
        Q(-self.0)
    }
}

impl Debug for Q {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        Display::fmt(self, f)
    }
}

impl Display for Q {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_integer() {
            write!(f, "{}", self.0.numer())
        } else {
            write!(f, "{}/{}", self.0.numer(), self.0.denom())
        }
    }
}

impl Field for Q {
    fn zero() -> Self {
        Q(Ratio::zero())
    }
    fn one() -> Self {
        Q(Ratio::one())
    }
    fn is_zero(&self) -> bool {
        self.0.is_zero()
    }
    fn from_i64(n: i64) -> Self {
        Q(Ratio::from_integer(n as i128))
    }
    fn characteristic() -> u64 {
        0
    }
    fn label() -> String {
        "Q".to_string()
    }
    fn parse_coeff(s: &str) -> Option<Self> {
        let s = s.trim();
        match s.split_once('/') {
            Some((n, d)) => {
                let n = i128::from_str(n.trim()).ok()?;
                let d = i128::from_str(d.trim()).ok()?;
                (d != 0).then(|| Q::new(n, d))
            }
            None => i128::from_str(s).ok().map(|n| Q(Ratio::from_integer(n))),
        }
    }
    fn is_negative_display(&self) -> bool {
        self.0.is_negative()
    }
}

/// The prime field with `P` elements. `P` must be an odd prime; the
/// constructor of the algebraic setting rejects `P = 3` for type G2.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Fp<const P: u32>(u32);

impl<const P: u32> Fp<P> {
    pub fn new(v: i64) -> Self {
        Fp(v.rem_euclid(P as i64) as u32)
    }

    pub fn value(&self) -> u32 {
        self.0
    }
}

impl<const P: u32> Add for Fp<P> {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        Fp(((self.0 as u64 + rhs.0 as u64) % P as u64) as u32)
    }
}

impl<const P: u32> Sub for Fp<P> {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        Fp(((self.0 as u64 + P as u64 - rhs.0 as u64) % P as u64) as u32)
    }
}

impl<const P: u32> Mul for Fp<P> {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        Fp(((self.0 as u64 * rhs.0 as u64) % P as u64) as u32)
    }
}

impl<const P: u32> Neg for Fp<P> {
    type Output = Self;
    fn neg(self) -> Self {
        Fp((P - self.0) % P)
    }
}

impl<const P: u32> Div for Fp<P> {
    type Output = Self;
    fn div(self, rhs: Self) -> Self {
        assert!(rhs.0 != 0, "division by zero in F{P}");
        // Fermat inverse
        self * rhs.pow(P - 2)
    }
}

impl<const P: u32> Debug for Fp<P> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        Display::fmt(self, f)
    }
}

impl<const P: u32> Display for Fp<P> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        // print the representative in (-P/2, P/2] so that small negatives read naturally
        let v = self.0 as i64;
        let v = if v > P as i64 / 2 { v - P as i64 } else { v };
        write!(f, "{v}")
    }
}

impl<const P: u32> Field for Fp<P> {
    fn zero() -> Self {
        Fp(0)
    }
    fn one() -> Self {
        Fp(1 % P)
    }
    fn is_zero(&self) -> bool {
        self.0 == 0
    }
    fn from_i64(n: i64) -> Self {
        Fp::new(n)
    }
    fn characteristic() -> u64 {
        P as u64
    }
    fn label() -> String {
        format!("F{P}")
    }
    fn parse_coeff(s: &str) -> Option<Self> {
        let s = s.trim();
        match s.split_once('/') {
            Some((n, d)) => {
                let n = Fp::new(i64::from_str(n.trim()).ok()?);
                let d = Fp::new(i64::from_str(d.trim()).ok()?);
                (!d.is_zero()).then(|| n / d)
            }
            None => i64::from_str(s).ok().map(Fp::new),
        }
    }
    fn is_negative_display(&self) -> bool {
        self.0 as i64 > P as i64 / 2
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rational_arithmetic() {
        let a = Q::new(1, 2);
        let b = Q::new(1, 3);
        assert_eq!(a + b, Q::new(5, 6));
        assert_eq!(a - b, Q::new(1, 6));
        assert_eq!(a * b, Q::new(1, 6));
        assert_eq!(a / b, Q::new(3, 2));
        assert_eq!(Q::parse_coeff("-2/4"), Some(Q::new(-1, 2)));
        assert_eq!(Q::parse_coeff("7"), Some(Q::from_i64(7)));
        assert_eq!(Q::parse_coeff("1/0"), None);
        assert_eq!(format!("{}", Q::new(-3, 6)), "-1/2");
    }

    #[test]
    #[should_panic(expected = "overflow")]
    fn rational_overflow_panics() {
        let big = Q::from_i64(i64::MAX);
        let _ = big * big * big;
    }

    #[test]
    fn prime_field_inverse() {
        type F7 = Fp<7>;
        for v in 1..7 {
            let x = F7::new(v);
            assert_eq!(x * x.inv().unwrap(), F7::one());
        }
        assert_eq!(F7::new(-1), F7::new(6));
        assert_eq!(format!("{}", F7::new(6)), "-1");
        assert_eq!(F7::parse_coeff("3/2"), Some(F7::new(5)));
    }
}
