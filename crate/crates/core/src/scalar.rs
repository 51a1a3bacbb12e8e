//! Exact rational scalars and the coefficient trait shared by all algebras.

use std::fmt;
use std::hash::Hash;
use std::ops::{Add, AddAssign, Div, Mul, Neg, Sub};
use std::str::FromStr;

use num::bigint::BigInt;
use num::rational::BigRational;
use num::{One, Signed, ToPrimitive, Zero};

use crate::error::AlgebraError;
use crate::param::ParamScalar;

/// Arbitrary-precision rational number in lowest terms.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Scalar(BigRational);

impl Scalar {
    pub fn new(num: i64, den: i64) -> Self {
        assert!(den != 0, "zero denominator");
        Scalar(BigRational::new(BigInt::from(num), BigInt::from(den)))
    }

    pub fn from_int(v: i64) -> Self {
        Scalar(BigRational::from_integer(BigInt::from(v)))
    }

    pub fn from_big(r: BigRational) -> Self {
        Scalar(r)
    }

    pub fn as_big(&self) -> &BigRational {
        &self.0
    }

    pub fn numer(&self) -> &BigInt {
        self.0.numer()
    }

    pub fn denom(&self) -> &BigInt {
        self.0.denom()
    }

    pub fn is_integer(&self) -> bool {
        self.0.is_integer()
    }

    pub fn is_negative(&self) -> bool {
        self.0.is_negative()
    }

    pub fn abs(&self) -> Self {
        Scalar(self.0.abs())
    }

    pub fn to_i64(&self) -> Option<i64> {
        if self.0.is_integer() {
            self.0.numer().to_i64()
        } else {
            None
        }
    }

    pub fn inv(&self) -> Self {
        assert!(!self.0.is_zero(), "inverse of zero");
        Scalar(self.0.recip())
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Scalar::one();
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_integer() {
            write!(f, "{}", self.0.numer())
        } else {
            write!(f, "{}/{}", self.0.numer(), self.0.denom())
        }
    }
}

impl fmt::Debug for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for Scalar {
    type Err = AlgebraError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        let bad = || AlgebraError::Parse(format!("not a rational number: {s:?}"));
        match s.split_once('/') {
            Some((a, b)) => {
                let n: BigInt = a.trim().parse().map_err(|_| bad())?;
                let d: BigInt = b.trim().parse().map_err(|_| bad())?;
                if d.is_zero() {
                    return Err(bad());
                }
                Ok(Scalar(BigRational::new(n, d)))
            }
            None => {
                let n: BigInt = s.parse().map_err(|_| bad())?;
                Ok(Scalar(BigRational::from_integer(n)))
            }
        }
    }
}

impl From<i64> for Scalar {
    fn from(v: i64) -> Self {
        Scalar::from_int(v)
    }
}

impl Zero for Scalar {
    fn zero() -> Self {
        Scalar(BigRational::zero())
    }
    fn is_zero(&self) -> bool {
        self.0.is_zero()
    }
}

impl One for Scalar {
    fn one() -> Self {
        Scalar(BigRational::one())
    }
}

macro_rules! scalar_binop {
    ($tr:ident, $m:ident) => {
        impl $tr for Scalar {
            type Output = Scalar;
            fn $m(self, rhs: Scalar) -> Scalar {
                Scalar(self.0.$m(rhs.0))
            }
        }
        impl<'a> $tr<&'a Scalar> for &'a Scalar {
            type Output = Scalar;
            fn $m(self, rhs: &'a Scalar) -> Scalar {
                Scalar((&self.0).$m(&rhs.0))
            }
        }
    };
}

scalar_binop!(Add, add);
scalar_binop!(Sub, sub);
scalar_binop!(Mul, mul);
scalar_binop!(Div, div);

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        Scalar(-self.0)
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        Scalar(-&self.0)
    }
}

impl AddAssign for Scalar {
    fn add_assign(&mut self, rhs: Scalar) {
        self.0 += rhs.0;
    }
}

impl<'a> AddAssign<&'a Scalar> for Scalar {
    fn add_assign(&mut self, rhs: &'a Scalar) {
        self.0 += &rhs.0;
    }
}

/// Exact coefficient ring: rationals or polynomials in the formal parameters.
pub trait Coeff:
    Clone
    + PartialEq
    + Eq
    + Hash
    + fmt::Debug
    + fmt::Display
    + Send
    + Sync
    + 'static
    + Zero
    + One
    + Neg<Output = Self>
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + for<'a> AddAssign<&'a Self>
{
    fn cadd(&self, o: &Self) -> Self;
    fn csub(&self, o: &Self) -> Self;
    fn cmul(&self, o: &Self) -> Self;
    fn cneg(&self) -> Self;

    fn from_scalar(s: Scalar) -> Self;

    fn from_i64(v: i64) -> Self {
        Self::from_scalar(Scalar::from_int(v))
    }

    /// Conversion from a parameter polynomial; fails when the target ring cannot hold it.
    fn try_from_param(p: &ParamScalar) -> Option<Self>;

    fn to_param(&self) -> ParamScalar;

    fn scale(&self, s: &Scalar) -> Self;

    /// True when the printed form needs parentheses as a factor.
    fn is_compound(&self) -> bool;

    /// `Some(s)` if the value is a plain rational.
    fn as_scalar(&self) -> Option<Scalar>;
}

impl Coeff for Scalar {
    fn cadd(&self, o: &Self) -> Self {
        self + o
    }
    fn csub(&self, o: &Self) -> Self {
        self - o
    }
    fn cmul(&self, o: &Self) -> Self {
        self * o
    }
    fn cneg(&self) -> Self {
        -self
    }

    fn from_scalar(s: Scalar) -> Self {
        s
    }

    fn try_from_param(p: &ParamScalar) -> Option<Self> {
        p.as_constant()
    }

    fn to_param(&self) -> ParamScalar {
        ParamScalar::constant(self.clone())
    }

    fn scale(&self, s: &Scalar) -> Self {
        self * s
    }

    fn is_compound(&self) -> bool {
        false
    }

    fn as_scalar(&self) -> Option<Scalar> {
        Some(self.clone())
    }
}

/// Binomial-type coefficient `(i+1)(i+2)...(i+k-1)/(k-1)!` for integer `i` and `k >= 1`.
pub fn rising_binomial(i: i64, k: i64) -> Scalar {
    assert!(k >= 1);
    let mut num = Scalar::one();
    let mut den = Scalar::one();
    for q in 1..k {
        num = &num * &Scalar::from_int(i + q);
        den = &den * &Scalar::from_int(q);
    }
    &num / &den
}

pub fn binomial(n: u64, k: u64) -> Scalar {
    if k > n {
        return Scalar::zero();
    }
    let mut acc = Scalar::one();
    for q in 0..k {
        acc = &(&acc * &Scalar::from_int((n - q) as i64)) / &Scalar::from_int((q + 1) as i64);
    }
    acc
}

pub fn factorial(n: u64) -> Scalar {
    (1..=n).fold(Scalar::one(), |acc, q| &acc * &Scalar::from_int(q as i64))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn canonical_form() {
        let a = Scalar::new(6, -4);
        assert_eq!(a.to_string(), "-3/2");
        assert_eq!(a.denom(), &BigInt::from(2));
        assert_eq!("4/6".parse::<Scalar>().unwrap(), Scalar::new(2, 3));
        assert!("1/0".parse::<Scalar>().is_err());
    }

    #[test]
    fn arithmetic() {
        let a = Scalar::new(1, 2);
        let b = Scalar::new(1, 3);
        assert_eq!(&a + &b, Scalar::new(5, 6));
        assert_eq!(&a * &b, Scalar::new(1, 6));
        assert_eq!(&a - &b, Scalar::new(1, 6));
        assert_eq!(&a / &b, Scalar::new(3, 2));
        assert_eq!(b.inv(), Scalar::from_int(3));
    }

    #[test]
    fn base_case_coefficients() {
        assert_eq!(rising_binomial(5, 1), Scalar::one());
        assert_eq!(rising_binomial(-3, 2), Scalar::from_int(-2));
        assert_eq!(rising_binomial(-2, 3), Scalar::zero());
        assert_eq!(rising_binomial(2, 3), Scalar::from_int(6));
        assert_eq!(binomial(5, 2), Scalar::from_int(10));
        assert_eq!(factorial(4), Scalar::from_int(24));
    }
}
