//! Exact rational arithmetic for weight calibration.
//!
//! Calibrated weights are sums of small fractions and must compare and
//! serialize without floating-point drift, so they are kept as reduced
//! `numerator/denominator` pairs. Conversion to `f64` happens only at
//! display time.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, AddAssign, Mul};
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};
use thiserror::Error;

/// A non-negative rational number in lowest terms.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Rational {
    num: i128,
    den: i128,
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum RationalError {
    #[error("denominator must be non-zero")]
    ZeroDenominator,
    #[error("invalid rational literal: {0:?}")]
    Malformed(String),
}

fn gcd(mut a: i128, mut b: i128) -> i128 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a.abs()
}

impl Rational {
    pub const ZERO: Rational = Rational { num: 0, den: 1 };
    pub const ONE: Rational = Rational { num: 1, den: 1 };

    pub fn new(num: i64, den: i64) -> Result<Rational, RationalError> {
        if den == 0 {
            return Err(RationalError::ZeroDenominator);
        }
        Ok(Self::reduced(num as i128, den as i128))
    }

    fn reduced(num: i128, den: i128) -> Rational {
        debug_assert!(den != 0);
        let sign = if (num < 0) != (den < 0) { -1 } else { 1 };
        let (num, den) = (num.abs(), den.abs());
        let g = gcd(num, den);
        if g == 0 {
            return Rational::ZERO;
        }
        Rational {
            num: sign * (num / g),
            den: den / g,
        }
    }

    pub fn from_integer(n: i64) -> Rational {
        Rational {
            num: n as i128,
            den: 1,
        }
    }

    pub fn numerator(&self) -> i128 {
        self.num
    }

    pub fn denominator(&self) -> i128 {
        self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num == 0
    }

    pub fn to_f64(&self) -> f64 {
        self.num as f64 / self.den as f64
    }

    /// Decimal rendering rounded half-up to `places` digits, e.g. `5/3` at
    /// two places prints `1.67`.
    pub fn to_decimal_string(&self, places: u32) -> String {
        let scale = 10i128.pow(places);
        let scaled = self.num * scale;
        let mut q = scaled / self.den;
        let rem = scaled % self.den;
        if rem.abs() * 2 >= self.den {
            q += if self.num >= 0 { 1 } else { -1 };
        }
        let sign = if q < 0 { "-" } else { "" };
        let q = q.abs();
        if places == 0 {
            return format!("{sign}{q}");
        }
        format!(
            "{sign}{}.{:0width$}",
            q / scale,
            q % scale,
            width = places as usize
        )
    }
}

impl Default for Rational {
    fn default() -> Self {
        Rational::ZERO
    }
}

impl Add for Rational {
    type Output = Rational;

    fn add(self, rhs: Rational) -> Rational {
        Rational::reduced(self.num * rhs.den + rhs.num * self.den, self.den * rhs.den)
    }
}

impl AddAssign for Rational {
    fn add_assign(&mut self, rhs: Rational) {
        *self = *self + rhs;
    }
}

impl Mul for Rational {
    type Output = Rational;

    fn mul(self, rhs: Rational) -> Rational {
        Rational::reduced(self.num * rhs.num, self.den * rhs.den)
    }
}

impl PartialOrd for Rational {
    fn partial_cmp(&self, other: &Rational) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Rational {
    fn cmp(&self, other: &Rational) -> Ordering {
        // Denominators are positive after reduction.
        (self.num * other.den).cmp(&(other.num * self.den))
    }
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den == 1 {
            write!(f, "{}", self.num)
        } else {
            write!(f, "{}/{}", self.num, self.den)
        }
    }
}

impl FromStr for Rational {
    type Err = RationalError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let malformed = || RationalError::Malformed(s.to_string());
        match s.split_once('/') {
            None => {
                let n: i64 = s.trim().parse().map_err(|_| malformed())?;
                Ok(Rational::from_integer(n))
            }
            Some((n, d)) => {
                let n: i64 = n.trim().parse().map_err(|_| malformed())?;
                let d: i64 = d.trim().parse().map_err(|_| malformed())?;
                Rational::new(n, d)
            }
        }
    }
}

// Serialized as text ("4/3" or "2") so model artifacts stay exact and
// human-readable.
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

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reduces_on_construction() {
        let r = Rational::new(6, 9).unwrap();
        assert_eq!((r.numerator(), r.denominator()), (2, 3));
    }

    #[test]
    fn zero_denominator_rejected() {
        assert_eq!(Rational::new(1, 0), Err(RationalError::ZeroDenominator));
    }

    #[test]
    fn addition_is_exact() {
        let mut w = Rational::ONE;
        w += Rational::new(2, 3).unwrap();
        assert_eq!(w, Rational::new(5, 3).unwrap());
        w += Rational::new(1, 3).unwrap();
        assert_eq!(w, Rational::from_integer(2));
    }

    #[test]
    fn ordering_uses_cross_multiplication() {
        let a = Rational::new(267, 100).unwrap();
        let b = Rational::new(233, 100).unwrap();
        assert!(a > b);
        assert_eq!(
            Rational::new(1, 2).unwrap(),
            Rational::new(2, 4).unwrap()
        );
    }

    #[test]
    fn decimal_display_rounds_half_up() {
        assert_eq!(Rational::new(5, 3).unwrap().to_decimal_string(2), "1.67");
        assert_eq!(Rational::new(4, 3).unwrap().to_decimal_string(2), "1.33");
        assert_eq!(Rational::new(8, 3).unwrap().to_decimal_string(2), "2.67");
        assert_eq!(Rational::ONE.to_decimal_string(2), "1.00");
        assert_eq!(Rational::new(1, 2).unwrap().to_decimal_string(0), "1");
    }

    #[test]
    fn text_round_trip() {
        for s in ["0", "1", "4/3", "2539/100"] {
            let r: Rational = s.parse().unwrap();
            assert_eq!(r.to_string(), s);
        }
        let json = serde_json::to_string(&Rational::new(8, 3).unwrap()).unwrap();
        assert_eq!(json, "\"8/3\"");
        let back: Rational = serde_json::from_str(&json).unwrap();
        assert_eq!(back, Rational::new(8, 3).unwrap());
    }
}
