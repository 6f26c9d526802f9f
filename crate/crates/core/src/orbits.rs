//! Nilpotent orbits labelled by partitions.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::partitions::{
    collapse_family, dominance_covers_below, is_special_family, part_counts, Family, LieType, Partition,
};
use crate::scalar::HalfInt;
use crate::weights::{gcd_all, Weight};

/// Distinguishes the two orbits sharing a very even type D partition.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum VeryEvenTag {
    I,
    II,
}

/// A nilpotent orbit: a Lie type plus a partition of the right type.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct OrbitLabel {
    #[serde(rename = "type")]
    ty: LieType,
    partition: Partition,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    tag: Option<VeryEvenTag>,
}

impl OrbitLabel {
    pub fn new(ty: LieType, partition: Partition) -> Result<Self> {
        let tag = is_very_even(ty, &partition).then_some(VeryEvenTag::I);
        Self::with_tag(ty, partition, tag)
    }

    pub fn with_tag(ty: LieType, partition: Partition, tag: Option<VeryEvenTag>) -> Result<Self> {
        if partition.size() != ty.natural_dim() {
            return Err(Error::SizeMismatch { left: partition.size(), right: ty.natural_dim() });
        }
        if !ty.family().admits(&partition) {
            return Err(Error::WrongType { partition: partition.to_string(), ty: ty.to_string() });
        }
        let very_even = is_very_even(ty, &partition);
        let tag = match (very_even, tag) {
            (true, t) => Some(t.unwrap_or(VeryEvenTag::I)),
            (false, None) => None,
            (false, Some(_)) => {
                return Err(Error::Parse(format!("{partition} is not very even; tags only apply to those")))
            }
        };
        Ok(OrbitLabel { ty, partition, tag })
    }

    pub fn zero(ty: LieType) -> Self {
        OrbitLabel::new(ty, Partition::column(ty.natural_dim())).expect("zero orbit is always valid")
    }

    /// The regular orbit: the largest partition of the type.
    pub fn regular(ty: LieType) -> Self {
        let n = ty.natural_dim();
        let parts = match ty.family() {
            Family::D => vec![n - 1, 1],
            _ => vec![n],
        };
        OrbitLabel::new(ty, Partition::new(parts).unwrap()).expect("regular orbit is always valid")
    }

    pub fn lie_type(&self) -> LieType {
        self.ty
    }

    pub fn family(&self) -> Family {
        self.ty.family()
    }

    pub fn partition(&self) -> &Partition {
        &self.partition
    }

    pub fn tag(&self) -> Option<VeryEvenTag> {
        self.tag
    }

    pub fn is_special(&self) -> bool {
        is_special_family(&self.partition, self.family())
    }

    fn require_special(&self) -> Result<()> {
        if self.is_special() {
            Ok(())
        } else {
            Err(Error::NotSpecial(self.to_string()))
        }
    }

    fn require_classical(&self, what: &str) -> Result<()> {
        if self.family() == Family::A {
            Err(Error::UnsupportedType { family: 'A', reason: what.to_string() })
        } else {
            Ok(())
        }
    }
}

fn is_very_even(ty: LieType, p: &Partition) -> bool {
    ty.family() == Family::D && p.parts().iter().all(|x| x % 2 == 0)
}

impl fmt::Display for OrbitLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}", self.ty, self.partition)?;
        if let Some(tag) = self.tag {
            write!(f, ":{tag:?}")?;
        }
        Ok(())
    }
}

impl FromStr for OrbitLabel {
    type Err = Error;
    /// Accepts `B2:3,1,1` and `D4:2,2,2,2:II`.
    fn from_str(s: &str) -> Result<Self> {
        let mut pieces = s.trim().split(':');
        let ty: LieType = pieces.next().unwrap_or_default().parse()?;
        let partition: Partition = pieces
            .next()
            .ok_or_else(|| Error::Parse(format!("missing partition in {s:?}")))?
            .parse()?;
        let tag = match pieces.next().map(str::trim) {
            None => None,
            Some("I") => Some(VeryEvenTag::I),
            Some("II") => Some(VeryEvenTag::II),
            Some(other) => return Err(Error::Parse(format!("unknown very-even tag {other:?}"))),
        };
        if pieces.next().is_some() {
            return Err(Error::Parse(format!("trailing fields in {s:?}")));
        }
        OrbitLabel::with_tag(ty, partition, tag)
    }
}

/// Dimension of the natural-module algebra of a family: gl_N, so_N or sp_N.
pub fn classical_algebra_dim(family: Family, n: u32) -> u64 {
    let n = n as u64;
    match family {
        Family::A => n * n,
        Family::B | Family::D => n * n.saturating_sub(1) / 2,
        Family::C => n * (n + 1) / 2,
    }
}

/// Centralizer dimension of a nilpotent with Jordan type `p` in gl_N, so_N or
/// sp_N (`N = |p|`).
pub fn classical_centralizer_dim(family: Family, p: &Partition) -> u64 {
    let squares = p.transpose().sum_of_squares();
    let odd = p.parts().iter().filter(|x| *x % 2 == 1).count() as u64;
    match family {
        Family::A => squares,
        Family::B | Family::D => (squares - odd) / 2,
        Family::C => (squares + odd) / 2,
    }
}

/// Orbit dimension in the natural-module algebra of the family.
pub fn classical_orbit_dim(family: Family, p: &Partition) -> u64 {
    classical_algebra_dim(family, p.size()) - classical_centralizer_dim(family, p)
}

/// Dimension of the orbit. Type A is the same in gl_n and sl_n.
pub fn orbit_dimension(o: &OrbitLabel) -> u64 {
    classical_orbit_dim(o.family(), o.partition())
}

/// A Levi subalgebra `gl_{n_k} × … × gl_{n_1} × g(n_0)`, where `g(n_0)` is
/// `so_{2n_0+1}`, `sp_{2n_0}`, `so_{2n_0}` or `gl_{n_0}` by family.
///
/// `gl_blocks` is listed outermost first, so `gl_blocks.last()` is `n_1`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct LeviDescriptor {
    pub family: Family,
    pub gl_blocks: Vec<u32>,
    pub residual_rank: u32,
}

impl LeviDescriptor {
    pub fn new(family: Family, gl_blocks: Vec<u32>, residual_rank: u32) -> Result<Self> {
        if gl_blocks.contains(&0) {
            return Err(Error::InvalidLevi("gl blocks must be positive".into()));
        }
        Ok(LeviDescriptor { family, gl_blocks, residual_rank })
    }

    /// The Levi equal to the whole algebra.
    pub fn trivial(ty: LieType) -> Self {
        let residual_rank = match ty.family() {
            Family::A => ty.natural_dim(),
            _ => ty.rank(),
        };
        LeviDescriptor { family: ty.family(), gl_blocks: Vec::new(), residual_rank }
    }

    /// The Cartan subalgebra as a Levi.
    pub fn cartan(ty: LieType) -> Self {
        match ty.family() {
            Family::A => LeviDescriptor { family: Family::A, gl_blocks: vec![1; ty.natural_dim() as usize - 1], residual_rank: 1 },
            f => LeviDescriptor { family: f, gl_blocks: vec![1; ty.rank() as usize], residual_rank: 0 },
        }
    }

    /// Rank (B/C/D) or matrix size (A) covered by the blocks and residual.
    pub fn total(&self) -> u32 {
        self.gl_blocks.iter().sum::<u32>() + self.residual_rank
    }

    /// Checks that the Levi sits in `ambient`.
    pub fn validate(&self, ambient: LieType) -> Result<()> {
        if self.family != ambient.family() {
            return Err(Error::InvalidLevi(format!("{self} is not a Levi of {ambient}")));
        }
        let expected = match ambient.family() {
            Family::A => ambient.natural_dim(),
            _ => ambient.rank(),
        };
        if self.total() != expected {
            return Err(Error::InvalidLevi(format!("{self}: block sizes sum to {}, expected {expected}", self.total())));
        }
        if self.gl_blocks.contains(&0) {
            return Err(Error::InvalidLevi("gl blocks must be positive".into()));
        }
        Ok(())
    }

    /// Natural dimension of the residual factor.
    pub fn residual_natural_dim(&self) -> u32 {
        match self.family {
            Family::A => self.residual_rank,
            Family::B => 2 * self.residual_rank + 1,
            Family::C | Family::D => 2 * self.residual_rank,
        }
    }

    /// Dimension of the Levi subalgebra (gl conventions in type A).
    pub fn dimension(&self) -> u64 {
        let gl: u64 = self.gl_blocks.iter().map(|&n| (n as u64) * (n as u64)).sum();
        gl + classical_algebra_dim(self.family, self.residual_natural_dim())
    }

    /// Whether `seed` is a valid orbit partition on the residual factor.
    pub fn admits_seed(&self, seed: &Partition) -> bool {
        seed.size() == self.residual_natural_dim() && self.family.admits(seed)
    }
}

impl fmt::Display for LeviDescriptor {
    /// `2,1|1`: blocks outermost first, then the residual rank.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let blocks: Vec<String> = self.gl_blocks.iter().map(u32::to_string).collect();
        write!(f, "{}|{}", blocks.join(","), self.residual_rank)
    }
}

impl LeviDescriptor {
    /// Parses the `2,1|1` format for the given family.
    pub fn parse(family: Family, s: &str) -> Result<Self> {
        let (blocks, residual) = s
            .split_once('|')
            .ok_or_else(|| Error::Parse(format!("Levi {s:?} must look like \"2,1|1\"")))?;
        let gl_blocks = blocks
            .split(',')
            .map(str::trim)
            .filter(|t| !t.is_empty())
            .map(|t| t.parse::<u32>().map_err(|_| Error::Parse(format!("bad block size {t:?}"))))
            .collect::<Result<Vec<_>>>()?;
        let residual_rank = residual
            .trim()
            .parse()
            .map_err(|_| Error::Parse(format!("bad residual rank {residual:?}")))?;
        LeviDescriptor::new(family, gl_blocks, residual_rank)
    }
}

/// Lusztig–Spaltenstein induction from the zero orbit on every gl block and
/// the orbit `seed` on the residual factor.
///
/// Blocks are processed from the innermost outward. A `gl_m` step adds 2 to
/// the first `m` parts and collapses (adds 1, no collapse, in type A).
pub fn ls_induce(ambient: LieType, levi: &LeviDescriptor, seed: &Partition) -> Result<OrbitLabel> {
    levi.validate(ambient)?;
    if !levi.admits_seed(seed) {
        return Err(Error::WrongType {
            partition: seed.to_string(),
            ty: format!("residual factor of {levi}"),
        });
    }
    let family = ambient.family();
    let step = if family == Family::A { 1 } else { 2 };
    let mut mu = seed.clone();
    for &m in levi.gl_blocks.iter().rev() {
        let mut parts = mu.padded(mu.len().max(m as usize));
        for x in parts.iter_mut().take(m as usize) {
            *x += step;
        }
        mu = collapse_family(&Partition::from_unsorted(parts), family);
    }
    OrbitLabel::new(ambient, mu)
}

fn lower_smallest(p: &Partition) -> Partition {
    let mut parts = p.parts().to_vec();
    if let Some(last) = parts.last_mut() {
        *last -= 1;
    }
    Partition::from_unsorted(parts)
}

fn raise_largest(p: &Partition) -> Partition {
    let mut parts = p.parts().to_vec();
    match parts.first_mut() {
        Some(first) => *first += 1,
        None => parts.push(1),
    }
    Partition::from_unsorted(parts)
}

/// Barbasch–Vogan–Spaltenstein duality on special orbits.
///
/// B→C: `[l(λ^t)]_C`; C→B: `[r(λ^t)]_B`; D→D: `[λ^t]_D`; A: `λ^t`.
pub fn bvs_dual(o: &OrbitLabel) -> Result<OrbitLabel> {
    o.require_special()?;
    let t = o.partition().transpose();
    let dual = o.lie_type().dual();
    let p = match o.family() {
        Family::A => t,
        Family::B => collapse_family(&lower_smallest(&t), Family::C),
        Family::C => collapse_family(&raise_largest(&t), Family::B),
        Family::D => collapse_family(&t, Family::D),
    };
    OrbitLabel::new(dual, p)
}

/// The necessary partition pattern for weakly rigid special orbits.
///
/// B: `((2k+1)^{odd}, (2k)^{even}, …, 1^{even})` with every part from the top
/// down to 1 present. C and D: all parts from the top down to 1 present,
/// each with positive even multiplicity.
pub fn is_weakly_rigid_pattern(o: &OrbitLabel) -> Result<bool> {
    o.require_classical("weak rigidity is only described for B, C and D")?;
    o.require_special()?;
    let counts = part_counts(o.partition());
    let top = *counts.keys().next_back().expect("nonempty partition");
    let consecutive = counts.len() as u32 == top;
    let ok = consecutive
        && match o.family() {
            Family::B => top % 2 == 1 && counts.iter().all(|(&part, &m)| (m % 2 == 1) == (part == top)),
            _ => counts.values().all(|m| m % 2 == 0),
        };
    Ok(ok)
}

/// Kind of a simple factor of the reductive centralizer.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum FactorKind {
    Orthogonal,
    Symplectic,
}

/// One factor `O_n` or `Sp_n` of the reductive centralizer, attached to the
/// distinct part `part` of multiplicity `size`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct CentralizerFactor {
    pub kind: FactorKind,
    pub part: u32,
    pub size: u32,
}

impl CentralizerFactor {
    pub fn dimension(&self) -> u64 {
        let n = self.size as u64;
        match self.kind {
            FactorKind::Orthogonal => n * n.saturating_sub(1) / 2,
            FactorKind::Symplectic => n * (n + 1) / 2,
        }
    }
}

/// Reductive part of the centralizer of `e` in the full orthogonal or
/// symplectic group, as a product of factors, largest part first.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct ReductiveCentralizer {
    pub factors: Vec<CentralizerFactor>,
}

impl ReductiveCentralizer {
    pub fn dimension(&self) -> u64 {
        self.factors.iter().map(CentralizerFactor::dimension).sum()
    }

    pub fn orthogonal_count(&self) -> usize {
        self.factors.iter().filter(|f| f.kind == FactorKind::Orthogonal).count()
    }
}

fn factor_kind(family: Family, part: u32) -> FactorKind {
    let odd = part % 2 == 1;
    match (family, odd) {
        (Family::C, false) | (Family::B | Family::D, true) => FactorKind::Orthogonal,
        _ => FactorKind::Symplectic,
    }
}

/// `∏ G_{n_i}` over distinct parts `λ_i` of multiplicity `n_i`. In B and D
/// odd parts give orthogonal factors; type C swaps the rule.
pub fn reductive_centralizer(o: &OrbitLabel) -> Result<ReductiveCentralizer> {
    o.require_classical("use gl_centralizer_factors for GL factors")?;
    let factors = o
        .partition()
        .multiplicities()
        .into_iter()
        .map(|(part, size)| CentralizerFactor { kind: factor_kind(o.family(), part), part, size })
        .collect();
    Ok(ReductiveCentralizer { factors })
}

/// Type A reductive centralizer in GL_n: one `GL_{n_i}` per distinct part,
/// returned as `(part, n_i)` pairs.
pub fn gl_centralizer_factors(o: &OrbitLabel) -> Result<Vec<(u32, u32)>> {
    if o.family() != Family::A {
        return Err(Error::UnsupportedType { family: o.family().letter(), reason: "GL factors exist only in type A".into() });
    }
    Ok(o.partition().multiplicities())
}

/// Which group the component group is taken in.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum GroupForm {
    /// O_N or Sp_N (GL_N in type A).
    Full,
    /// The adjoint group.
    Adjoint,
}

impl FromStr for GroupForm {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_lowercase().as_str() {
            "full" => Ok(GroupForm::Full),
            "adjoint" | "adj" => Ok(GroupForm::Adjoint),
            other => Err(Error::Parse(format!("unknown group form {other:?}"))),
        }
    }
}

/// Order of the component group `A(e)`.
///
/// | family | full       | adjoint                                                   |
/// |--------|------------|-----------------------------------------------------------|
/// | B      | `2^a`      | `2^(a-1)`                                                 |
/// | C      | `2^b`      | `2^b` if every even part has even multiplicity, else `2^(b-1)` |
/// | D      | `2^a`      | `2^max(a-1,0)` if every odd part has even multiplicity, else `2^(a-2)` |
///
/// `a` counts distinct odd parts, `b` distinct even parts. The adjoint column
/// is the quotient of `A(e)` in SO_N or Sp_N by the image of `-1`.
pub fn component_group_order(o: &OrbitLabel, form: GroupForm) -> Result<u64> {
    o.require_classical("the component group is cyclic; use cyclic_component_group_order")?;
    let mults = o.partition().multiplicities();
    let distinct = |odd: bool| mults.iter().filter(|(p, _)| (p % 2 == 1) == odd).count() as u32;
    let all_even_mult = |odd: bool| mults.iter().filter(|(p, _)| (p % 2 == 1) == odd).all(|(_, m)| m % 2 == 0);
    let exponent = match (o.family(), form) {
        (Family::B | Family::D, GroupForm::Full) => distinct(true),
        (Family::C, GroupForm::Full) => distinct(false),
        (Family::B, GroupForm::Adjoint) => distinct(true) - 1,
        (Family::C, GroupForm::Adjoint) => {
            let b = distinct(false);
            if all_even_mult(false) {
                b
            } else {
                b - 1
            }
        }
        (Family::D, GroupForm::Adjoint) => {
            let a = distinct(true);
            if all_even_mult(true) {
                a.saturating_sub(1)
            } else {
                a - 2
            }
        }
        (Family::A, _) => unreachable!(),
    };
    Ok(1u64 << exponent)
}

/// Type A component group order: trivial in GL_n, cyclic of order
/// `gcd(λ)` in PGL_n.
pub fn cyclic_component_group_order(o: &OrbitLabel, form: GroupForm) -> Result<u64> {
    if o.family() != Family::A {
        return Err(Error::UnsupportedType { family: o.family().letter(), reason: "use component_group_order".into() });
    }
    Ok(match form {
        GroupForm::Full => 1,
        GroupForm::Adjoint => gcd_all(o.partition().parts()) as u64,
    })
}

/// Eigenvalues of `h` on the natural module: each part `m` contributes
/// `m-1, m-3, …, 1-m`. Sorted in decreasing order.
pub fn h_eigenvalues(p: &Partition) -> Vec<i64> {
    let mut h: Vec<i64> = p
        .parts()
        .iter()
        .flat_map(|&m| (0..m as i64).map(move |k| m as i64 - 1 - 2 * k))
        .collect();
    h.sort_unstable_by(|a, b| b.cmp(a));
    h
}

/// `½h^∨` for the dual orbit, dominant, read as a weight of the original
/// type in shared ε-coordinates (gl coordinates in type A).
pub fn abv_weight(o: &OrbitLabel) -> Result<Weight> {
    let dual = bvs_dual(o)?;
    let h = h_eigenvalues(dual.partition());
    let keep = match o.family() {
        Family::A => h.len(),
        _ => o.lie_type().rank() as usize,
    };
    Ok(Weight(h.into_iter().take(keep).map(HalfInt::from_doubled).collect()))
}

/// Whether every eigenvalue of `ad h` is even, by the parity criterion.
pub fn is_even_orbit(o: &OrbitLabel) -> bool {
    let parts = o.partition().parts();
    let all_parity = |r: u32| parts.iter().all(|x| x % 2 == r);
    match o.family() {
        Family::B => all_parity(1),
        _ => all_parity(0) || all_parity(1),
    }
}

/// Half of the smallest orbit-dimension drop from the Richardson orbit of the
/// type A parabolic with block sizes `composition` to an orbit covered by it.
/// `None` when the Richardson orbit is the zero orbit.
pub fn richardson_min_codim(composition: &[u32]) -> Result<Option<u64>> {
    if composition.is_empty() || composition.contains(&0) {
        return Err(Error::InvalidPartition(format!("{composition:?} is not a composition")));
    }
    let lambda = Partition::from_unsorted(composition.to_vec());
    let richardson = lambda.transpose();
    let top = classical_orbit_dim(Family::A, &richardson);
    Ok(dominance_covers_below(&richardson)
        .iter()
        .map(|nu| (top - classical_orbit_dim(Family::A, nu)) / 2)
        .min())
}

/// Orbit label plus derived invariants, for JSON output.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OrbitRecord {
    pub label: String,
    #[serde(flatten)]
    pub orbit: OrbitLabel,
    pub dimension: u64,
    pub special: bool,
    pub even: bool,
    pub transpose: Partition,
}

impl OrbitRecord {
    pub fn new(o: &OrbitLabel) -> Self {
        OrbitRecord {
            label: o.to_string(),
            orbit: o.clone(),
            dimension: orbit_dimension(o),
            special: o.is_special(),
            even: is_even_orbit(o),
            transpose: o.partition().transpose(),
        }
    }
}

/// All orbit labels of a type; very even D partitions appear with both tags.
pub fn all_orbits(ty: LieType) -> Vec<OrbitLabel> {
    let mut out = Vec::new();
    for p in crate::partitions::partitions_of_type(ty) {
        if is_very_even(ty, &p) {
            out.push(OrbitLabel::with_tag(ty, p.clone(), Some(VeryEvenTag::I)).unwrap());
            out.push(OrbitLabel::with_tag(ty, p, Some(VeryEvenTag::II)).unwrap());
        } else {
            out.push(OrbitLabel::new(ty, p).unwrap());
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partitions::dominance_leq;

    fn o(s: &str) -> OrbitLabel {
        s.parse().unwrap()
    }

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    #[test]
    fn label_parsing() {
        assert_eq!(o("B2:3,1,1").to_string(), "B2:3,1,1");
        assert_eq!(o("D2:2,2").tag(), Some(VeryEvenTag::I));
        assert_eq!(o("D4:2,2,2,2:II").to_string(), "D4:2,2,2,2:II");
        assert!("B2:4,1".parse::<OrbitLabel>().is_err());
        assert!("B2:3,1".parse::<OrbitLabel>().is_err());
        assert!("B2:3,1,1:I".parse::<OrbitLabel>().is_err());
    }

    #[test]
    fn dimensions() {
        assert_eq!(orbit_dimension(&o("A2:2,1")), 4);
        assert_eq!(orbit_dimension(&o("B2:5")), 8);
        assert_eq!(orbit_dimension(&OrbitLabel::zero(LieType::c(3))), 0);
        // Regular orbits have dimension dim g - rank.
        for ty in [LieType::b(3), LieType::c(3), LieType::d(4)] {
            assert_eq!(orbit_dimension(&OrbitLabel::regular(ty)), ty.algebra_dim() - ty.rank() as u64);
        }
        assert_eq!(orbit_dimension(&OrbitLabel::regular(LieType::a(3))), 12);
    }

    #[test]
    fn induction_examples() {
        let b2 = LieType::b(2);
        let gl1 = LeviDescriptor::new(Family::B, vec![1], 1).unwrap();
        assert_eq!(ls_induce(b2, &gl1, &p("1,1,1")).unwrap(), o("B2:3,1,1"));
        let gl2 = LeviDescriptor::new(Family::B, vec![2], 0).unwrap();
        assert_eq!(ls_induce(b2, &gl2, &p("1")).unwrap(), o("B2:3,1,1"));
        let trivial = LeviDescriptor::trivial(b2);
        assert_eq!(ls_induce(b2, &trivial, &p("3,1,1")).unwrap(), o("B2:3,1,1"));
        // Borel induction gives the regular orbit.
        for ty in [LieType::a(3), LieType::b(3), LieType::c(3), LieType::d(3)] {
            let levi = LeviDescriptor::cartan(ty);
            let seed = Partition::column(levi.residual_natural_dim());
            assert_eq!(ls_induce(ty, &levi, &seed).unwrap(), OrbitLabel::regular(ty));
        }
        assert!(ls_induce(b2, &gl2, &p("1,1,1")).is_err());
    }

    #[test]
    fn induction_preserves_codimension() {
        for ty in [LieType::a(3), LieType::b(3), LieType::c(3), LieType::d(3)] {
            let total = match ty.family() {
                Family::A => ty.natural_dim(),
                _ => ty.rank(),
            };
            for m in 1..=total {
                let levi = LeviDescriptor::new(ty.family(), vec![m], total - m).unwrap();
                let seed_dim = levi.residual_natural_dim();
                let seeds: Vec<Partition> = crate::partitions::all_partitions(seed_dim)
                    .into_iter()
                    .filter(|s| levi.admits_seed(s))
                    .collect();
                let seeds = if seed_dim == 0 { vec![Partition::empty()] } else { seeds };
                for seed in seeds {
                    let induced = ls_induce(ty, &levi, &seed).unwrap();
                    let lhs = classical_algebra_dim(ty.family(), ty.natural_dim()) - orbit_dimension(&induced);
                    let rhs = levi.dimension() - classical_orbit_dim(ty.family(), &seed);
                    assert_eq!(lhs, rhs, "{ty} {levi} {seed}");
                }
            }
        }
    }

    #[test]
    fn induction_block_order_is_irrelevant() {
        let ty = LieType::c(4);
        let a = LeviDescriptor::new(Family::C, vec![2, 1], 1).unwrap();
        let b = LeviDescriptor::new(Family::C, vec![1, 2], 1).unwrap();
        assert_eq!(ls_induce(ty, &a, &p("2")).unwrap(), ls_induce(ty, &b, &p("2")).unwrap());
    }

    #[test]
    fn duality_examples() {
        assert_eq!(bvs_dual(&o("B2:3,1,1")).unwrap(), o("C2:2,2"));
        assert_eq!(bvs_dual(&o("B2:1,1,1,1,1")).unwrap(), o("C2:4"));
        assert_eq!(bvs_dual(&OrbitLabel::regular(LieType::b(3))).unwrap(), OrbitLabel::zero(LieType::c(3)));
        assert_eq!(bvs_dual(&o("A3:3,1")).unwrap(), o("A3:2,1,1"));
        assert!(bvs_dual(&o("B2:2,2,1")).is_err());
    }

    #[test]
    fn duality_is_an_order_reversing_involution() {
        for ty in [LieType::b(3), LieType::c(3), LieType::d(4), LieType::a(4)] {
            let special: Vec<OrbitLabel> = all_orbits(ty).into_iter().filter(OrbitLabel::is_special).collect();
            for x in &special {
                let dx = bvs_dual(x).unwrap();
                assert!(dx.is_special());
                assert_eq!(bvs_dual(&dx).unwrap().partition(), x.partition());
                for y in &special {
                    if dominance_leq(x.partition(), y.partition()).unwrap() {
                        let dy = bvs_dual(y).unwrap();
                        assert!(dominance_leq(dy.partition(), dx.partition()).unwrap());
                    }
                }
            }
        }
    }

    #[test]
    fn weakly_rigid_examples() {
        assert!(is_weakly_rigid_pattern(&o("B4:3,2,2,1,1")).unwrap());
        assert!(!is_weakly_rigid_pattern(&o("B2:3,1,1")).unwrap());
        assert!(is_weakly_rigid_pattern(&o("C3:2,2,1,1")).unwrap());
        assert!(!is_weakly_rigid_pattern(&o("C2:2,2")).unwrap());
        assert!(is_weakly_rigid_pattern(&o("D2:1,1,1,1")).unwrap());
        assert!(is_weakly_rigid_pattern(&o("A2:2,1")).is_err());
        assert!(is_weakly_rigid_pattern(&o("B2:2,2,1")).is_err());
    }

    #[test]
    fn centralizer_examples() {
        let b = reductive_centralizer(&o("B2:3,1,1")).unwrap();
        assert_eq!(
            b.factors,
            vec![
                CentralizerFactor { kind: FactorKind::Orthogonal, part: 3, size: 1 },
                CentralizerFactor { kind: FactorKind::Orthogonal, part: 1, size: 2 },
            ]
        );
        let c = reductive_centralizer(&o("C2:2,2")).unwrap();
        assert_eq!(c.factors, vec![CentralizerFactor { kind: FactorKind::Orthogonal, part: 2, size: 2 }]);
        let reg = reductive_centralizer(&OrbitLabel::regular(LieType::c(3))).unwrap();
        assert!(reg.factors.iter().all(|f| f.size == 1));
        assert!(reductive_centralizer(&o("A1:2")).is_err());
        assert_eq!(gl_centralizer_factors(&o("A3:2,1,1")).unwrap(), vec![(2, 1), (1, 2)]);
    }

    #[test]
    fn component_group_examples() {
        assert_eq!(component_group_order(&o("B2:3,1,1"), GroupForm::Full).unwrap(), 4);
        assert_eq!(component_group_order(&o("B2:3,1,1"), GroupForm::Adjoint).unwrap(), 2);
        assert_eq!(component_group_order(&o("C2:2,2"), GroupForm::Full).unwrap(), 2);
        assert_eq!(component_group_order(&o("C2:2,2"), GroupForm::Adjoint).unwrap(), 2);
        assert_eq!(component_group_order(&o("C2:4"), GroupForm::Adjoint).unwrap(), 1);
        for ty in [LieType::b(3), LieType::c(3), LieType::d(3)] {
            assert_eq!(component_group_order(&OrbitLabel::zero(ty), GroupForm::Adjoint).unwrap(), 1);
        }
        assert_eq!(cyclic_component_group_order(&o("A3:2,2"), GroupForm::Adjoint).unwrap(), 2);
        assert!(component_group_order(&o("A3:2,2"), GroupForm::Full).is_err());
    }

    #[test]
    fn abv_examples() {
        assert_eq!(abv_weight(&o("B2:1,1,1,1,1")).unwrap(), Weight::from_doubled(&[3, 1]));
        assert!(abv_weight(&OrbitLabel::regular(LieType::b(2))).unwrap().is_zero());
        for ty in [LieType::b(3), LieType::c(3), LieType::d(4)] {
            for x in all_orbits(ty).into_iter().filter(OrbitLabel::is_special) {
                let w = abv_weight(&x).unwrap();
                assert!(w.is_dominant(ty), "{x}");
                if is_even_orbit(&bvs_dual(&x).unwrap()) {
                    assert!(w.in_weight_lattice(ty), "{x}");
                }
            }
        }
    }

    #[test]
    fn even_orbit_examples() {
        assert!(is_even_orbit(&o("C2:4")));
        assert!(is_even_orbit(&o("B2:3,1,1")));
        assert!(!is_even_orbit(&o("A2:2,1")));
        assert!(is_even_orbit(&OrbitLabel::zero(LieType::d(3))));
    }

    #[test]
    fn richardson_examples() {
        assert_eq!(richardson_min_codim(&[2, 1]).unwrap(), Some(2));
        assert_eq!(richardson_min_codim(&[1, 1]).unwrap(), Some(1));
        assert_eq!(richardson_min_codim(&[4]).unwrap(), None);
        assert_eq!(richardson_min_codim(&[3, 2, 1]).unwrap(), Some(2));
    }

    #[test]
    fn record_json_round_trip() {
        let r = OrbitRecord::new(&o("D4:2,2,2,2:II"));
        let s = serde_json::to_string(&r).unwrap();
        let back: OrbitRecord = serde_json::from_str(&s).unwrap();
        assert_eq!(back, r);
    }
}
