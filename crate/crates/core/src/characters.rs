//! Formal characters `Σ c_ν e^ν / ∏ (1 − e^{μ_i})` graded by a cocharacter θ.
//!
//! Characters stay in this rational form; series are expanded only when
//! truncated, and finiteness is decided by exact division.

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::coxeter::{WeylElement, WeylGroup};
use crate::error::{Error, Result};
use crate::kl::DecompositionRow;
use crate::matrixlie::{centralizer_grading, levi_degrees, CentralizerGrading, LeviOrbit};
use crate::orbits::LeviDescriptor;
use crate::partitions::{Family, LieType};
use crate::scalar::{HalfInt, Scalar};
use crate::weights::{coroot_pairing, RootSystem, Weight};
use crate::Rational;

pub use crate::weights::weyl_dimension;

/// Depth to which [`simple_character`] checks nonnegativity.
pub const DEFAULT_CHECK_DEPTH: i64 = 10;

/// `Σ c_ν e^ν · ∏ (1 − e^{μ_i})^{-1}` with `⟨θ, μ_i⟩ < 0`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(into = "CharacterRepr<T>", try_from = "CharacterRepr<T>")]
#[serde(bound(serialize = "T: Scalar + Serialize", deserialize = "T: Scalar + Deserialize<'de>"))]
pub struct FormalCharacter<T> {
    theta: Weight,
    numerator: BTreeMap<Weight, T>,
    denominator: Vec<Weight>,
}

#[derive(Serialize, Deserialize)]
struct CharacterRepr<T> {
    theta: Weight,
    numerator: Vec<(Weight, T)>,
    denominator: Vec<Weight>,
}

impl<T: Scalar> From<FormalCharacter<T>> for CharacterRepr<T> {
    fn from(c: FormalCharacter<T>) -> Self {
        CharacterRepr { theta: c.theta, numerator: c.numerator.into_iter().collect(), denominator: c.denominator }
    }
}

impl<T: Scalar> TryFrom<CharacterRepr<T>> for FormalCharacter<T> {
    type Error = Error;
    fn try_from(r: CharacterRepr<T>) -> Result<Self> {
        FormalCharacter::new(r.theta, r.numerator, r.denominator)
    }
}

/// Finite dimension or the lack of one.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Dimension<T> {
    Finite(T),
    Infinite,
}

fn add_term<T: Scalar>(map: &mut BTreeMap<Weight, T>, w: Weight, c: T) {
    if c.is_negligible() {
        return;
    }
    let sum = match map.get(&w) {
        Some(v) => v.clone() + c,
        None => c,
    };
    if sum.is_negligible() {
        map.remove(&w);
    } else {
        map.insert(w, sum);
    }
}

fn times_one_minus<T: Scalar>(num: &BTreeMap<Weight, T>, mu: &Weight) -> BTreeMap<Weight, T> {
    let mut out = num.clone();
    for (w, c) in num {
        add_term(&mut out, w + mu, -c.clone());
    }
    out
}

/// Multiset difference `a \ b`.
fn multiset_minus(a: &[Weight], b: &[Weight]) -> Vec<Weight> {
    let mut left: Vec<Weight> = b.to_vec();
    let mut out = Vec::new();
    for w in a {
        match left.iter().position(|x| x == w) {
            Some(i) => {
                left.swap_remove(i);
            }
            None => out.push(w.clone()),
        }
    }
    out
}

fn is_integral(r: &Rational) -> bool {
    r.is_integer()
}

impl<T: Scalar> FormalCharacter<T> {
    /// Validates dimensions and `⟨θ, μ_i⟩ < 0`.
    pub fn new(
        theta: Weight,
        numerator: impl IntoIterator<Item = (Weight, T)>,
        denominator: Vec<Weight>,
    ) -> Result<Self> {
        let dim = theta.dim();
        let mut num = BTreeMap::new();
        for (w, c) in numerator {
            if w.dim() != dim {
                return Err(Error::WeightDimension { expected: dim, got: w.dim() });
            }
            add_term(&mut num, w, c);
        }
        for mu in &denominator {
            if mu.dim() != dim {
                return Err(Error::WeightDimension { expected: dim, got: mu.dim() });
            }
            let p = theta.dot(mu);
            if p >= Rational::zero() {
                return Err(Error::NonNegativeDenominator { weight: mu.to_string(), pairing: p.to_string() });
            }
        }
        let mut denominator = denominator;
        denominator.sort();
        Ok(FormalCharacter { theta, numerator: num, denominator })
    }

    /// `dim0 · e^{μ₀} · ∏ (1 − e^{μ_i})^{-1}`.
    pub fn verma(theta: Weight, mu0: Weight, dim0: T, denominator: Vec<Weight>) -> Result<Self> {
        FormalCharacter::new(theta, [(mu0, dim0)], denominator)
    }

    pub fn zero(theta: Weight) -> Self {
        FormalCharacter { theta, numerator: BTreeMap::new(), denominator: Vec::new() }
    }

    pub fn theta(&self) -> &Weight {
        &self.theta
    }

    pub fn numerator(&self) -> &BTreeMap<Weight, T> {
        &self.numerator
    }

    pub fn denominator(&self) -> &[Weight] {
        &self.denominator
    }

    pub fn is_zero(&self) -> bool {
        self.numerator.is_empty()
    }

    pub fn scale(&self, c: &T) -> Self {
        let mut out = FormalCharacter { numerator: BTreeMap::new(), ..self.clone() };
        for (w, v) in &self.numerator {
            add_term(&mut out.numerator, w.clone(), v.clone() * c.clone());
        }
        out
    }

    /// Same character over the larger denominator `target ⊇ self.denominator`.
    fn over(&self, target: &[Weight]) -> Result<BTreeMap<Weight, T>> {
        if !multiset_minus(&self.denominator, target).is_empty() {
            return Err(Error::InvalidGroupData("denominator is not a sub-multiset of the target".into()));
        }
        let mut num = self.numerator.clone();
        for mu in multiset_minus(target, &self.denominator) {
            num = times_one_minus(&num, &mu);
        }
        Ok(num)
    }

    fn check_theta(&self, other: &Self) -> Result<()> {
        if self.theta != other.theta {
            return Err(Error::InvalidGroupData(format!("θ differs: {} vs {}", self.theta, other.theta)));
        }
        Ok(())
    }

    /// Sum over the multiset union of the denominators.
    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_theta(other)?;
        if self.is_zero() {
            return Ok(other.clone());
        }
        if other.is_zero() {
            return Ok(self.clone());
        }
        let mut target = self.denominator.clone();
        target.extend(multiset_minus(&other.denominator, &self.denominator));
        target.sort();
        let mut num = self.over(&target)?;
        for (w, c) in other.over(&target)? {
            add_term(&mut num, w, c);
        }
        Ok(FormalCharacter { theta: self.theta.clone(), numerator: num, denominator: target })
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.scale(&-T::one()))
    }

    /// Exact equality after clearing denominators.
    pub fn equals(&self, other: &Self) -> Result<bool> {
        self.check_theta(other)?;
        let a = self.over_union(other)?;
        let b = other.over_union(self)?;
        Ok(a == b)
    }

    fn over_union(&self, other: &Self) -> Result<BTreeMap<Weight, T>> {
        let mut target = self.denominator.clone();
        target.extend(multiset_minus(&other.denominator, &self.denominator));
        self.over(&target)
    }

    /// Highest `⟨θ, ν⟩` over the numerator.
    pub fn top_pairing(&self) -> Option<Rational> {
        self.numerator.keys().map(|w| self.theta.dot(w)).max()
    }

    /// Expansion `Σ m_ν e^ν` restricted to `⟨θ, ν⟩ ≥ floor`.
    pub fn expand_above(&self, floor: Rational) -> BTreeMap<Weight, T> {
        let Some(top) = self.top_pairing() else {
            return BTreeMap::new();
        };
        let budget = top - floor;
        if budget < Rational::zero() {
            return BTreeMap::new();
        }
        let mut series: BTreeMap<Weight, T> = BTreeMap::new();
        series.insert(Weight::zero(self.theta.dim()), T::one());
        for mu in &self.denominator {
            let step = -self.theta.dot(mu);
            let mut next = BTreeMap::new();
            for (sigma, c) in &series {
                let mut w = sigma.clone();
                let mut depth = -self.theta.dot(sigma);
                while depth <= budget {
                    add_term(&mut next, w.clone(), c.clone());
                    w = &w + mu;
                    depth += step;
                }
            }
            series = next;
        }
        let mut out = BTreeMap::new();
        for (nu, c) in &self.numerator {
            let p = self.theta.dot(nu);
            for (sigma, s) in &series {
                if p + self.theta.dot(sigma) >= floor {
                    add_term(&mut out, nu + sigma, c.clone() * s.clone());
                }
            }
        }
        out
    }

    /// Terms of depth `≤ depth` below the leading numerator pairing.
    pub fn truncate(&self, depth: i64) -> BTreeMap<Weight, T> {
        match self.top_pairing() {
            None => BTreeMap::new(),
            Some(top) => self.expand_above(top - Rational::from_integer(depth)),
        }
    }

    /// Graded dimensions `d_0, …, d_depth`, where `d_k` sums the
    /// coefficients at `⟨θ, ν⟩ = top − k`.
    pub fn graded_series(&self, depth: i64) -> Result<Vec<T>> {
        let mut out = vec![T::zero(); depth.max(0) as usize + 1];
        let Some(top) = self.top_pairing() else {
            return Ok(out);
        };
        for (w, c) in self.truncate(depth) {
            let d = top - self.theta.dot(&w);
            if !is_integral(&d) {
                return Err(Error::NonIntegral(format!("θ-depth {d} of {w}")));
            }
            let k = d.to_integer() as usize;
            out[k] = out[k].clone() + c;
        }
        Ok(out)
    }

    /// Errors on the first negative coefficient within `depth`.
    pub fn check_nonnegative(&self, depth: i64) -> Result<()> {
        for (w, c) in self.truncate(depth) {
            if c < T::zero() && !c.is_negligible() {
                return Err(Error::NegativeCoefficient { weight: w.to_string(), coefficient: c.to_string() });
            }
        }
        Ok(())
    }

    /// Exact division of the numerator by every `1 − e^{μ_i}`; the
    /// dimension is the coefficient sum of the quotient.
    pub fn finite_dimension(&self) -> Dimension<T> {
        let mut num = self.numerator.clone();
        for mu in &self.denominator {
            match divide_one_minus(&num, mu) {
                Some(q) => num = q,
                None => return Dimension::Infinite,
            }
        }
        Dimension::Finite(num.values().fold(T::zero(), |a, c| a + c.clone()))
    }
}

/// Line through `ν` in direction `μ`: a canonical key and the position of
/// `ν` on it.
fn line_position(nu: &Weight, mu: &Weight) -> (Vec<Rational>, Rational) {
    let i = mu.0.iter().position(|c| *c != HalfInt::ZERO).expect("nonzero direction");
    let t = nu.0[i].to_rational() / mu.0[i].to_rational();
    let key: Vec<Rational> = nu.0.iter().zip(&mu.0).map(|(a, b)| a.to_rational() - t * b.to_rational()).collect();
    let frac = t - t.floor();
    let mut full = key;
    full.push(frac);
    (full, t)
}

/// `N / (1 − e^μ)` when it is a finite sum: on every line `ν + ℤμ` the
/// coefficients must sum to zero, and the quotient is the running sum.
fn divide_one_minus<T: Scalar>(num: &BTreeMap<Weight, T>, mu: &Weight) -> Option<BTreeMap<Weight, T>> {
    let mut lines: HashMap<Vec<Rational>, Vec<(Rational, Weight, T)>> = HashMap::new();
    for (w, c) in num {
        let (key, t) = line_position(w, mu);
        lines.entry(key).or_default().push((t, w.clone(), c.clone()));
    }
    let mut out = BTreeMap::new();
    for (_, mut pts) in lines {
        pts.sort_by(|a, b| a.0.cmp(&b.0));
        let (t0, w0, _) = pts[0].clone();
        let t_end = pts.last().expect("nonempty line").0;
        let mut acc = T::zero();
        let mut k = 0usize;
        let mut t = t0;
        let mut w = w0;
        while t <= t_end {
            if k < pts.len() && pts[k].0 == t {
                acc = acc + pts[k].2.clone();
                k += 1;
            }
            if t == t_end {
                if !acc.is_negligible() {
                    return None;
                }
                break;
            }
            add_term(&mut out, w.clone(), acc.clone());
            w = &w + mu;
            t += Rational::from_integer(1);
        }
    }
    Some(out)
}

impl<T: Scalar> fmt::Display for FormalCharacter<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms: Vec<String> = self.numerator.iter().map(|(w, c)| format!("{c}·e^{w}")).collect();
        let num = if terms.is_empty() { "0".to_string() } else { terms.join(" + ") };
        if self.denominator.is_empty() {
            return write!(f, "{num}");
        }
        let den: Vec<String> = self.denominator.iter().map(|m| format!("(1 - e^{m})")).collect();
        write!(f, "({num}) / {}", den.join(""))
    }
}

fn theta_weight(g: &CentralizerGrading) -> Weight {
    Weight::from_ints(&g.theta)
}

/// `dim0 · e^{μ₀} · ∏ (1 − e^{μ_i})^{-1}` over the θ-negative weights of
/// the grading.
pub fn verma_character<T: Scalar>(mu0: &Weight, dim0: u64, grading: &CentralizerGrading) -> Result<FormalCharacter<T>> {
    if dim0 == 0 {
        return Err(Error::InvalidGroupData("dim0 must be positive".into()));
    }
    let den = grading.negative_weights().iter().map(|v| Weight::from_ints(v)).collect();
    FormalCharacter::verma(theta_weight(grading), mu0.clone(), T::from_int(dim0 as i64), den)
}

/// Orders `|H₀|`, `|Ā₀|` and `dim V` entering the prefactor of a simple
/// character.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GroupFactors {
    pub h0: u64,
    pub abar0: u64,
    pub dim_v: u64,
}

impl Default for GroupFactors {
    fn default() -> Self {
        GroupFactors { h0: 1, abar0: 1, dim_v: 1 }
    }
}

impl GroupFactors {
    pub fn validate(&self) -> Result<()> {
        if self.h0 == 0 || self.abar0 == 0 || self.dim_v == 0 {
            return Err(Error::InvalidGroupData(format!("{self:?} has a zero entry")));
        }
        Ok(())
    }
}

/// A Levi `g₀ ⊇ t` of a classical algebra with a nilpotent in it, together
/// with the grading of its centralizer and the root data of `g₀(0)`.
#[derive(Clone, Debug)]
pub struct BlockSetup {
    ty: LieType,
    levi: LeviDescriptor,
    grading: CentralizerGrading,
    roots: RootSystem,
    /// Positive roots of `g₀(0)` in ε-coordinates.
    degree_zero_roots: Vec<Weight>,
    /// Generators whose simple roots lie in `g₀`.
    parabolic: Vec<usize>,
}

impl BlockSetup {
    pub fn new(ty: LieType, levi: LeviDescriptor, orbit: &LeviOrbit) -> Result<Self> {
        let grading = centralizer_grading(ty, &levi, orbit)?;
        let degrees = levi_degrees(ty, &levi, orbit)?;
        let roots = RootSystem::new(ty);
        let mut setup = BlockSetup {
            ty,
            levi,
            grading,
            roots: roots.clone(),
            degree_zero_roots: Vec::new(),
            parabolic: Vec::new(),
        };
        let degree = |a: &Weight| a.pair_int(&degrees);
        for a in &roots.positive {
            if setup.project(a)?.is_zero() && degree(a) == HalfInt::ZERO {
                setup.degree_zero_roots.push(a.clone());
            }
        }
        for (i, a) in roots.simple.iter().enumerate() {
            if setup.project(a)?.is_zero() {
                setup.parabolic.push(i);
            }
        }
        Ok(setup)
    }

    /// Zero nilpotent in the Levi: ordinary parabolic category O.
    pub fn parabolic_zero(ty: LieType, levi: LeviDescriptor) -> Result<Self> {
        let orbit = LeviOrbit::zero(&levi);
        BlockSetup::new(ty, levi, &orbit)
    }

    pub fn lie_type(&self) -> LieType {
        self.ty
    }

    pub fn levi(&self) -> &LeviDescriptor {
        &self.levi
    }

    pub fn grading(&self) -> &CentralizerGrading {
        &self.grading
    }

    pub fn rho(&self) -> Weight {
        self.roots.rho()
    }

    pub fn root_system(&self) -> &RootSystem {
        &self.roots
    }

    pub fn degree_zero_roots(&self) -> &[Weight] {
        &self.degree_zero_roots
    }

    pub fn parabolic(&self) -> &[usize] {
        &self.parabolic
    }

    pub fn theta(&self) -> Weight {
        theta_weight(&self.grading)
    }

    /// Restriction of an ε-weight to the centre of the Levi (block sums).
    pub fn project(&self, lambda: &Weight) -> Result<Weight> {
        let coords = self.roots.coordinate_dim();
        if lambda.dim() != coords {
            return Err(Error::WeightDimension { expected: coords, got: lambda.dim() });
        }
        let mut out = vec![HalfInt::ZERO; self.grading.theta.len()];
        let mut i = 0;
        for (j, &size) in self.levi.gl_blocks.iter().enumerate() {
            for _ in 0..size {
                out[j] = out[j] + lambda.0[i];
                i += 1;
            }
        }
        if self.ty.family() == Family::A {
            let last = out.len() - 1;
            for c in &lambda.0[i..] {
                out[last] = out[last] + *c;
            }
        }
        Ok(Weight(out))
    }

    /// `dim L₀₀(λ)` for ρ-shifted `λ`.
    pub fn levi_dimension(&self, lambda: &Weight) -> Result<u64> {
        weyl_dimension(&self.degree_zero_roots, lambda)
    }

    /// Checks that `ϱ₀` is dominant, regular and integral.
    pub fn check_regular_dominant(&self, rho0: &Weight) -> Result<()> {
        if rho0.dim() != self.roots.coordinate_dim() {
            return Err(Error::WeightDimension { expected: self.roots.coordinate_dim(), got: rho0.dim() });
        }
        for a in &self.roots.positive {
            let p = coroot_pairing(rho0, a);
            if !p.is_integer() {
                return Err(Error::NonIntegral(format!("{rho0} pairs to {p} with the coroot of {a}")));
            }
            if p <= Rational::zero() {
                return Err(Error::NotDominant(format!("{rho0} is not regular dominant: {p} at {a}")));
            }
        }
        Ok(())
    }

    /// ρ-shifted highest weight `u⁻¹ϱ₀` of the module labelled `u`.
    pub fn label_weight(&self, u: &WeylElement, rho0: &Weight) -> Result<Weight> {
        u.inverse().act(rho0)
    }
}

/// `e^{λ−ρ} · dim L₀₀(λ) · ∏ (1 − e^{μ_i})^{-1}`, projected to the centre.
pub fn parabolic_verma_image_character<T: Scalar>(lambda: &Weight, setup: &BlockSetup) -> Result<FormalCharacter<T>> {
    let dim = setup.levi_dimension(lambda)?;
    let shifted = lambda - &setup.rho();
    verma_character(&setup.project(&shifted)?, dim, setup.grading())
}

/// `(|H₀| / (|Ā₀| dim V)) · Σ_u c_{w,u} · ch Δ(u⁻¹ϱ₀)` with nonnegativity
/// checked to [`DEFAULT_CHECK_DEPTH`].
pub fn simple_character<T: Scalar>(
    rho0: &Weight,
    c_row: &DecompositionRow,
    setup: &BlockSetup,
    factors: GroupFactors,
) -> Result<FormalCharacter<T>> {
    simple_character_checked(rho0, c_row, setup, factors, DEFAULT_CHECK_DEPTH)
}

pub fn simple_character_checked<T: Scalar>(
    rho0: &Weight,
    c_row: &DecompositionRow,
    setup: &BlockSetup,
    factors: GroupFactors,
    check_depth: i64,
) -> Result<FormalCharacter<T>> {
    factors.validate()?;
    if c_row.w.ty != setup.lie_type() {
        return Err(Error::GroupMismatch(c_row.w.ty.to_string(), setup.lie_type().to_string()));
    }
    if c_row.parabolic != setup.parabolic() {
        return Err(Error::InvalidGenerators(format!(
            "row uses parabolic {:?}, the Levi has {:?}",
            c_row.parabolic,
            setup.parabolic()
        )));
    }
    setup.check_regular_dominant(rho0)?;
    let mut total = FormalCharacter::zero(setup.theta());
    for (u, c) in &c_row.entries {
        let lambda = setup.label_weight(u, rho0)?;
        let verma = parabolic_verma_image_character::<T>(&lambda, setup)?;
        total = total.add(&verma.scale(&T::from_int(*c)))?;
    }
    let pref = T::from_int(factors.h0 as i64) / T::from_int((factors.abar0 * factors.dim_v) as i64);
    let ch = total.scale(&pref);
    ch.check_nonnegative(check_depth)?;
    Ok(ch)
}

/// The element `w` of `W` with `setup`'s parabolic as a row-ready label.
pub fn block_elements(setup: &BlockSetup) -> Result<(std::sync::Arc<WeylGroup>, Vec<u32>)> {
    let g = WeylGroup::get(setup.lie_type())?;
    let reps = g.coset_min_reps(setup.parabolic())?;
    Ok((g, reps))
}

/// `finite_dimension` as a free function.
pub fn finite_dimension<T: Scalar>(ch: &FormalCharacter<T>) -> Dimension<T> {
    ch.finite_dimension()
}
