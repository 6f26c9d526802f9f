//! Weights in ε-coordinates and classical root data.

use std::fmt;
use std::ops::{Add, Neg, Sub};
use std::str::FromStr;

use num_integer::Integer;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::partitions::{Family, LieType};
use crate::scalar::HalfInt;
use crate::Rational;

/// A vector with coordinates in ½ℤ.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Weight(pub Vec<HalfInt>);

impl Weight {
    pub fn zero(dim: usize) -> Self {
        Weight(vec![HalfInt::ZERO; dim])
    }

    pub fn from_ints(v: &[i64]) -> Self {
        Weight(v.iter().map(|&x| HalfInt::from_int(x)).collect())
    }

    /// Builds a weight from doubled coordinates.
    pub fn from_doubled(v: &[i64]) -> Self {
        Weight(v.iter().map(|&x| HalfInt::from_doubled(x)).collect())
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn coords(&self) -> &[HalfInt] {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|c| *c == HalfInt::ZERO)
    }

    pub fn scale(&self, k: i64) -> Weight {
        Weight(self.0.iter().map(|c| c.scale(k)).collect())
    }

    /// Standard inner product, exact.
    pub fn dot(&self, other: &Weight) -> Rational {
        self.0.iter().zip(&other.0).map(|(a, b)| a.mul_rational(*b)).sum()
    }

    /// Pairing with an integral vector, returned as a half-integer.
    pub fn pair_int(&self, v: &[i64]) -> HalfInt {
        self.0.iter().zip(v).fold(HalfInt::ZERO, |acc, (a, &b)| acc + a.scale(b))
    }

    pub fn all_integral(&self) -> bool {
        self.0.iter().all(|c| c.is_integer())
    }

    pub fn all_half_odd(&self) -> bool {
        self.0.iter().all(|c| !c.is_integer())
    }

    /// Membership in the weight lattice of the simply connected group of
    /// type `t` (spin weights allowed in B and D; type A up to a common
    /// shift).
    pub fn in_weight_lattice(&self, t: LieType) -> bool {
        match t.family() {
            Family::A => self.0.windows(2).all(|w| (w[0] - w[1]).is_integer()),
            Family::B | Family::D => self.all_integral() || self.all_half_odd(),
            Family::C => self.all_integral(),
        }
    }

    /// Dominance with respect to the standard upper-triangular Borel.
    pub fn is_dominant(&self, t: LieType) -> bool {
        let c = &self.0;
        let descending = c.windows(2).all(|w| w[0] >= w[1]);
        match t.family() {
            Family::A => descending,
            Family::B | Family::C => descending && c.last().map_or(true, |x| *x >= HalfInt::ZERO),
            Family::D => {
                let n = c.len();
                n < 2 || (c[..n - 1].windows(2).all(|w| w[0] >= w[1]) && c[n - 2] >= c[n - 1].abs())
            }
        }
    }
}

impl Add for &Weight {
    type Output = Weight;
    fn add(self, rhs: &Weight) -> Weight {
        assert_eq!(self.dim(), rhs.dim(), "weight dimension mismatch");
        Weight(self.0.iter().zip(&rhs.0).map(|(a, b)| *a + *b).collect())
    }
}

impl Sub for &Weight {
    type Output = Weight;
    fn sub(self, rhs: &Weight) -> Weight {
        assert_eq!(self.dim(), rhs.dim(), "weight dimension mismatch");
        Weight(self.0.iter().zip(&rhs.0).map(|(a, b)| *a - *b).collect())
    }
}

impl Neg for &Weight {
    type Output = Weight;
    fn neg(self) -> Weight {
        Weight(self.0.iter().map(|a| -*a).collect())
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.0.iter().map(HalfInt::to_string).collect();
        write!(f, "({})", s.join(","))
    }
}

impl FromStr for Weight {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim().trim_start_matches('(').trim_end_matches(')');
        let coords = s
            .split(',')
            .map(str::trim)
            .filter(|t| !t.is_empty())
            .map(str::parse)
            .collect::<Result<Vec<HalfInt>>>()?;
        Ok(Weight(coords))
    }
}

/// Positive roots of a classical type in ε-coordinates, ordered with the
/// simple roots first.
///
/// Type A uses gl_n coordinates (`n = rank + 1`).
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RootSystem {
    pub ty: LieType,
    pub positive: Vec<Weight>,
    pub simple: Vec<Weight>,
}

impl RootSystem {
    pub fn new(ty: LieType) -> Self {
        let n = match ty.family() {
            Family::A => ty.rank() as usize + 1,
            _ => ty.rank() as usize,
        };
        let unit = |i: usize, v: i64| {
            let mut w = vec![0i64; n];
            w[i] = v;
            w
        };
        let combo = |i: usize, a: i64, j: usize, b: i64| {
            let mut w = vec![0i64; n];
            w[i] += a;
            w[j] += b;
            Weight::from_ints(&w)
        };
        let mut simple: Vec<Weight> = (0..n - 1).map(|i| combo(i, 1, i + 1, -1)).collect();
        match ty.family() {
            Family::A => {}
            Family::B => simple.push(Weight::from_ints(&unit(n - 1, 1))),
            Family::C => simple.push(Weight::from_ints(&unit(n - 1, 2))),
            Family::D => simple.push(combo(n - 2, 1, n - 1, 1)),
        }
        let mut positive = simple.clone();
        let mut push = |w: Weight| {
            if !positive.contains(&w) {
                positive.push(w);
            }
        };
        for i in 0..n {
            for j in i + 1..n {
                push(combo(i, 1, j, -1));
                if ty.family() != Family::A {
                    push(combo(i, 1, j, 1));
                }
            }
            match ty.family() {
                Family::B => push(Weight::from_ints(&unit(i, 1))),
                Family::C => push(Weight::from_ints(&unit(i, 2))),
                _ => {}
            }
        }
        RootSystem { ty, positive, simple }
    }

    pub fn coordinate_dim(&self) -> usize {
        self.simple.first().map_or(0, Weight::dim)
    }

    /// Half the sum of the positive roots.
    pub fn rho(&self) -> Weight {
        let dim = self.coordinate_dim();
        let sum = self.positive.iter().fold(Weight::zero(dim), |acc, r| &acc + r);
        // Every coordinate of the sum is an integer, so halving stays in ½ℤ.
        Weight(sum.0.iter().map(|c| HalfInt::from_doubled(c.to_int().expect("integral root sum"))).collect())
    }
}

/// `⟨λ, α^∨⟩ = 2(λ,α)/(α,α)`.
pub fn coroot_pairing(lambda: &Weight, alpha: &Weight) -> Rational {
    lambda.dot(alpha) * 2 / alpha.dot(alpha)
}

/// Weyl dimension formula `∏ ⟨λ,α^∨⟩ / ⟨ρ_L,α^∨⟩` over the given positive
/// roots, where `λ` is the ρ-shifted highest weight. The roots must form the
/// positive system of a reductive subalgebra; `ρ_L` is computed from them.
pub fn weyl_dimension(positive_roots: &[Weight], lambda: &Weight) -> Result<u64> {
    if positive_roots.is_empty() {
        return Ok(1);
    }
    let dim = lambda.dim();
    let sum = positive_roots.iter().fold(Weight::zero(dim), |acc, r| &acc + r);
    let rho_l = Weight(
        sum.0
            .iter()
            .map(|c| HalfInt::from_rational(c.to_rational() / 2).expect("half-sum of roots lies in (1/2)Z"))
            .collect(),
    );
    let mut acc = Rational::from_integer(1);
    for alpha in positive_roots {
        let num = coroot_pairing(lambda, alpha);
        if num <= Rational::from_integer(0) {
            return Err(Error::NotDominant(format!("{lambda} pairs to {num} with the coroot of {alpha}")));
        }
        acc *= num / coroot_pairing(&rho_l, alpha);
    }
    if !acc.is_integer() {
        return Err(Error::NonIntegral(acc.to_string()));
    }
    Ok(*acc.numer() as u64)
}

/// Greatest common divisor of a list of parts.
pub fn gcd_all(values: &[u32]) -> u32 {
    values.iter().fold(0u32, |acc, &v| acc.gcd(&v))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn root_counts() {
        assert_eq!(RootSystem::new(LieType::a(3)).positive.len(), 6);
        assert_eq!(RootSystem::new(LieType::b(3)).positive.len(), 9);
        assert_eq!(RootSystem::new(LieType::c(3)).positive.len(), 9);
        assert_eq!(RootSystem::new(LieType::d(4)).positive.len(), 12);
    }

    #[test]
    fn rho_values() {
        assert_eq!(RootSystem::new(LieType::a(2)).rho(), Weight::from_ints(&[1, 0, -1]));
        assert_eq!(RootSystem::new(LieType::b(2)).rho(), Weight::from_doubled(&[3, 1]));
        assert_eq!(RootSystem::new(LieType::c(2)).rho(), Weight::from_ints(&[2, 1]));
        assert_eq!(RootSystem::new(LieType::d(3)).rho(), Weight::from_ints(&[2, 1, 0]));
    }

    #[test]
    fn weyl_dimension_examples() {
        // Torus: empty product.
        assert_eq!(weyl_dimension(&[], &Weight::from_ints(&[5, -3])).unwrap(), 1);
        // sl2 with λ - ρ = m·ϖ gives m + 1.
        let alpha = Weight::from_ints(&[1, -1]);
        for m in 0..5 {
            let lambda = Weight::from_doubled(&[m + 1, -(m + 1)]);
            assert_eq!(weyl_dimension(std::slice::from_ref(&alpha), &lambda).unwrap(), (m + 1) as u64);
        }
        // sl3 adjoint: λ = 2ρ.
        let a2 = RootSystem::new(LieType::a(2));
        assert_eq!(weyl_dimension(&a2.positive, &a2.rho().scale(2)).unwrap(), 8);
        // Non-dominant input.
        assert!(weyl_dimension(&a2.positive, &Weight::from_ints(&[0, 0, 0])).is_err());
    }

    #[test]
    fn lattice_and_dominance() {
        let w = Weight::from_doubled(&[3, 1]);
        assert!(w.in_weight_lattice(LieType::b(2)));
        assert!(!w.in_weight_lattice(LieType::c(2)));
        assert!(w.is_dominant(LieType::c(2)));
        assert!(Weight::from_ints(&[2, -2]).is_dominant(LieType::d(2)));
        assert!(!Weight::from_ints(&[1, -2]).is_dominant(LieType::d(2)));
    }

    #[test]
    fn weight_parse_round_trip() {
        let w: Weight = "(3/2, 1/2, -1)".parse().unwrap();
        assert_eq!(w.to_string(), "(3/2,1/2,-1)");
        assert_eq!(w.to_string().parse::<Weight>().unwrap(), w);
    }
}
