//! Scalar abstraction for the linear-algebra and character layers.
//!
//! The matrix code runs over any field-like type implementing [`Scalar`].
//! Exact types ([`crate::Rational`], [`crate::BigRational`]) compare with
//! zero exactly; floating types use a tolerance and are only meant for quick
//! experiments.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::Ratio;
use num_traits::{FromPrimitive, Num, Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

pub trait Scalar:
    Clone + fmt::Debug + fmt::Display + PartialEq + PartialOrd + Num + Neg<Output = Self> + FromPrimitive + Send + Sync
{
    /// True when the value should be treated as zero during elimination.
    fn is_negligible(&self) -> bool;

    fn from_int(v: i64) -> Self {
        Self::from_i64(v).expect("integer fits the scalar type")
    }
}

/// Marker for scalars whose arithmetic is exact.
pub trait ExactScalar: Scalar {}

impl Scalar for Ratio<i64> {
    fn is_negligible(&self) -> bool {
        self.is_zero()
    }
}
impl ExactScalar for Ratio<i64> {}

impl Scalar for Ratio<i128> {
    fn is_negligible(&self) -> bool {
        self.is_zero()
    }
}
impl ExactScalar for Ratio<i128> {}

impl Scalar for Ratio<BigInt> {
    fn is_negligible(&self) -> bool {
        self.is_zero()
    }
}
impl ExactScalar for Ratio<BigInt> {}

impl Scalar for f64 {
    fn is_negligible(&self) -> bool {
        self.abs() < 1e-9
    }
}

impl Scalar for f32 {
    fn is_negligible(&self) -> bool {
        self.abs() < 1e-4
    }
}

/// Element of ½ℤ, stored as twice its value.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct HalfInt(i64);

impl HalfInt {
    pub const ZERO: HalfInt = HalfInt(0);

    pub fn from_int(v: i64) -> Self {
        HalfInt(2 * v)
    }

    pub fn from_doubled(twice: i64) -> Self {
        HalfInt(twice)
    }

    pub fn doubled(self) -> i64 {
        self.0
    }

    pub fn is_integer(self) -> bool {
        self.0 % 2 == 0
    }

    pub fn to_int(self) -> Option<i64> {
        self.is_integer().then_some(self.0 / 2)
    }

    pub fn abs(self) -> Self {
        HalfInt(self.0.abs())
    }

    pub fn scale(self, k: i64) -> Self {
        HalfInt(self.0 * k)
    }

    pub fn to_rational(self) -> Ratio<i64> {
        Ratio::new(self.0, 2)
    }

    pub fn from_rational(r: Ratio<i64>) -> Result<Self> {
        let twice = r * 2;
        if twice.is_integer() {
            Ok(HalfInt(twice.to_integer()))
        } else {
            Err(Error::Parse(format!("{r} is not in (1/2)Z")))
        }
    }

    /// Product of two half-integers as an exact rational.
    pub fn mul_rational(self, other: HalfInt) -> Ratio<i64> {
        Ratio::new(self.0 * other.0, 4)
    }

    pub fn signum(self) -> i64 {
        self.0.signum()
    }
}

impl Add for HalfInt {
    type Output = HalfInt;
    fn add(self, rhs: HalfInt) -> HalfInt {
        HalfInt(self.0 + rhs.0)
    }
}

impl Sub for HalfInt {
    type Output = HalfInt;
    fn sub(self, rhs: HalfInt) -> HalfInt {
        HalfInt(self.0 - rhs.0)
    }
}

impl Neg for HalfInt {
    type Output = HalfInt;
    fn neg(self) -> HalfInt {
        HalfInt(-self.0)
    }
}

impl fmt::Display for HalfInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_integer() {
            write!(f, "{}", self.0 / 2)
        } else {
            write!(f, "{}/2", self.0)
        }
    }
}

impl FromStr for HalfInt {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let bad = || Error::Parse(format!("not a half-integer: {s:?}"));
        if let Some((num, den)) = s.split_once('/') {
            let num: i64 = num.trim().parse().map_err(|_| bad())?;
            let den: i64 = den.trim().parse().map_err(|_| bad())?;
            if den == 0 {
                return Err(bad());
            }
            HalfInt::from_rational(Ratio::new(num, den)).map_err(|_| bad())
        } else if let Ok(v) = s.parse::<i64>() {
            Ok(HalfInt::from_int(v))
        } else {
            // Accept decimal notation for .5 values.
            let v: f64 = s.parse().map_err(|_| bad())?;
            let twice = v * 2.0;
            if (twice - twice.round()).abs() > 1e-12 {
                return Err(bad());
            }
            Ok(HalfInt(twice.round() as i64))
        }
    }
}

impl Serialize for HalfInt {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        match self.to_int() {
            Some(v) => serializer.serialize_i64(v),
            None => serializer.serialize_str(&self.to_string()),
        }
    }
}

impl<'de> Deserialize<'de> for HalfInt {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Repr {
            Int(i64),
            Text(String),
        }
        match Repr::deserialize(deserializer)? {
            Repr::Int(v) => Ok(HalfInt::from_int(v)),
            Repr::Text(s) => s.parse().map_err(serde::de::Error::custom),
        }
    }
}

/// Sign of a rational, used where only the ordering against zero matters.
pub fn sign_of<T: Signed>(v: &T) -> Ordering {
    if v.is_positive() {
        Ordering::Greater
    } else if v.is_negative() {
        Ordering::Less
    } else {
        Ordering::Equal
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn half_int_parse_and_print() {
        let h: HalfInt = "3/2".parse().unwrap();
        assert_eq!(h.doubled(), 3);
        assert_eq!(h.to_string(), "3/2");
        assert_eq!("-2".parse::<HalfInt>().unwrap(), HalfInt::from_int(-2));
        assert_eq!("0.5".parse::<HalfInt>().unwrap(), HalfInt::from_doubled(1));
        assert!("1/3".parse::<HalfInt>().is_err());
    }

    #[test]
    fn half_int_json_round_trip() {
        let v = vec![HalfInt::from_doubled(3), HalfInt::from_int(2)];
        let s = serde_json::to_string(&v).unwrap();
        assert_eq!(s, r#"["3/2",2]"#);
        let back: Vec<HalfInt> = serde_json::from_str(&s).unwrap();
        assert_eq!(back, v);
    }
}
