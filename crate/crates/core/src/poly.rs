//! Integer polynomials and Laurent polynomials in one variable `q`.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use serde::{Deserialize, Serialize};

/// Polynomial with integer coefficients, lowest degree first, no trailing
/// zeros.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Poly(Vec<i64>);

impl Poly {
    pub fn zero() -> Self {
        Poly(Vec::new())
    }

    pub fn one() -> Self {
        Poly(vec![1])
    }

    pub fn from_coeffs(mut c: Vec<i64>) -> Self {
        while c.last() == Some(&0) {
            c.pop();
        }
        Poly(c)
    }

    /// `c·q^k`.
    pub fn monomial(c: i64, k: usize) -> Self {
        let mut v = vec![0; k + 1];
        v[k] = c;
        Poly::from_coeffs(v)
    }

    pub fn coeffs(&self) -> &[i64] {
        &self.0
    }

    pub fn coeff(&self, k: usize) -> i64 {
        self.0.get(k).copied().unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    /// Degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.0.len().checked_sub(1)
    }

    pub fn eval_at_one(&self) -> i64 {
        self.0.iter().sum()
    }

    /// Multiplies by `q^k`.
    pub fn shift(&self, k: usize) -> Self {
        if self.is_zero() {
            return Poly::zero();
        }
        let mut v = vec![0; k];
        v.extend_from_slice(&self.0);
        Poly(v)
    }

    pub fn scale(&self, c: i64) -> Self {
        Poly::from_coeffs(self.0.iter().map(|x| x * c).collect())
    }

    pub fn to_laurent(&self) -> Laurent {
        Laurent::from_coeffs(0, self.0.clone())
    }
}

impl Add for &Poly {
    type Output = Poly;
    fn add(self, rhs: &Poly) -> Poly {
        let n = self.0.len().max(rhs.0.len());
        Poly::from_coeffs((0..n).map(|i| self.coeff(i) + rhs.coeff(i)).collect())
    }
}

impl Sub for &Poly {
    type Output = Poly;
    fn sub(self, rhs: &Poly) -> Poly {
        let n = self.0.len().max(rhs.0.len());
        Poly::from_coeffs((0..n).map(|i| self.coeff(i) - rhs.coeff(i)).collect())
    }
}

impl Mul for &Poly {
    type Output = Poly;
    fn mul(self, rhs: &Poly) -> Poly {
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero();
        }
        let mut v = vec![0; self.0.len() + rhs.0.len() - 1];
        for (i, a) in self.0.iter().enumerate() {
            for (j, b) in rhs.0.iter().enumerate() {
                v[i + j] += a * b;
            }
        }
        Poly::from_coeffs(v)
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        self.scale(-1)
    }
}

impl fmt::Display for Poly {
    /// `1 + q + 2q^2`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, &c) in self.0.iter().enumerate() {
            if c == 0 {
                continue;
            }
            let sign = if c < 0 { "-" } else { "+" };
            if first {
                if c < 0 {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            first = false;
            let a = c.abs();
            match (k, a) {
                (0, _) => write!(f, "{a}")?,
                (1, 1) => write!(f, "q")?,
                (1, _) => write!(f, "{a}q")?,
                (_, 1) => write!(f, "q^{k}")?,
                _ => write!(f, "{a}q^{k}")?,
            }
        }
        Ok(())
    }
}

/// Laurent polynomial `Σ c_k q^k` stored from exponent `low` upward.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Laurent {
    low: i64,
    coeffs: Vec<i64>,
}

impl Laurent {
    pub fn zero() -> Self {
        Laurent::default()
    }

    pub fn one() -> Self {
        Laurent::monomial(1, 0)
    }

    pub fn monomial(c: i64, k: i64) -> Self {
        Laurent::from_coeffs(k, vec![c])
    }

    pub fn from_coeffs(low: i64, coeffs: Vec<i64>) -> Self {
        let mut l = Laurent { low, coeffs };
        l.normalize();
        l
    }

    fn normalize(&mut self) {
        while self.coeffs.last() == Some(&0) {
            self.coeffs.pop();
        }
        let lead = self.coeffs.iter().take_while(|&&c| c == 0).count();
        self.coeffs.drain(..lead);
        self.low = if self.coeffs.is_empty() { 0 } else { self.low + lead as i64 };
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coeff(&self, k: i64) -> i64 {
        if k < self.low {
            return 0;
        }
        self.coeffs.get((k - self.low) as usize).copied().unwrap_or(0)
    }

    /// Lowest and highest exponent with a nonzero coefficient.
    pub fn support(&self) -> Option<(i64, i64)> {
        (!self.is_zero()).then(|| (self.low, self.low + self.coeffs.len() as i64 - 1))
    }

    /// Multiplies by `q^k`.
    pub fn shift(&self, k: i64) -> Self {
        Laurent { low: if self.is_zero() { 0 } else { self.low + k }, coeffs: self.coeffs.clone() }
    }

    /// `q ↦ q^{-1}`.
    pub fn bar(&self) -> Self {
        match self.support() {
            None => Laurent::zero(),
            Some((_, hi)) => Laurent::from_coeffs(-hi, self.coeffs.iter().rev().copied().collect()),
        }
    }

    /// The polynomial, if no negative exponents occur.
    pub fn to_poly(&self) -> Option<Poly> {
        match self.support() {
            None => Some(Poly::zero()),
            Some((lo, _)) if lo >= 0 => Some(Poly::from_coeffs(
                std::iter::repeat(0).take(lo as usize).chain(self.coeffs.iter().copied()).collect(),
            )),
            _ => None,
        }
    }
}

impl Add for &Laurent {
    type Output = Laurent;
    fn add(self, rhs: &Laurent) -> Laurent {
        let (Some((a0, a1)), Some((b0, b1))) = (self.support(), rhs.support()) else {
            return if self.is_zero() { rhs.clone() } else { self.clone() };
        };
        let low = a0.min(b0);
        let high = a1.max(b1);
        Laurent::from_coeffs(low, (low..=high).map(|k| self.coeff(k) + rhs.coeff(k)).collect())
    }
}

impl Sub for &Laurent {
    type Output = Laurent;
    fn sub(self, rhs: &Laurent) -> Laurent {
        self + &(-rhs)
    }
}

impl Neg for &Laurent {
    type Output = Laurent;
    fn neg(self) -> Laurent {
        Laurent { low: self.low, coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }
}

impl Mul for &Laurent {
    type Output = Laurent;
    fn mul(self, rhs: &Laurent) -> Laurent {
        if self.is_zero() || rhs.is_zero() {
            return Laurent::zero();
        }
        let mut v = vec![0; self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                v[i + j] += a * b;
            }
        }
        Laurent::from_coeffs(self.low + rhs.low, v)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn poly_arithmetic_and_display() {
        let p = Poly::from_coeffs(vec![1, 1]);
        assert_eq!(p.to_string(), "1 + q");
        assert_eq!((&p * &p).to_string(), "1 + 2q + q^2");
        assert_eq!((&p - &p), Poly::zero());
        assert_eq!(Poly::from_coeffs(vec![0, -1, 0, 3]).to_string(), "-q + 3q^3");
        assert_eq!(Poly::one().to_string(), "1");
        assert_eq!(p.shift(2).degree(), Some(3));
        assert_eq!(p.eval_at_one(), 2);
    }

    #[test]
    fn laurent_bar_and_product() {
        let a = Laurent::from_coeffs(-1, vec![1, 0, 2]);
        assert_eq!(a.bar(), Laurent::from_coeffs(-1, vec![2, 0, 1]));
        assert_eq!(a.bar().bar(), a);
        let q = Laurent::monomial(1, 1);
        let qinv = Laurent::monomial(1, -1);
        assert_eq!(&q * &qinv, Laurent::one());
        assert_eq!((&a - &a), Laurent::zero());
        assert_eq!(Laurent::from_coeffs(2, vec![1, 3]).to_poly(), Some(Poly::from_coeffs(vec![0, 0, 1, 3])));
        assert_eq!(qinv.to_poly(), None);
    }
}
