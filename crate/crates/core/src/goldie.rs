//! Scale factors, bimodule multiplicities and the dimension report.

use std::collections::BTreeMap;

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::cells::CellPartition;
use crate::characters::{simple_character, BlockSetup, Dimension, GroupFactors};
use crate::error::{Error, Result};
use crate::kl::DecompositionRow;
use crate::weights::Weight;
use crate::Rational;

/// Group-theoretic data of a triple `(x, y, V)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct TripleData {
    pub d_x: u64,
    pub d_y: u64,
    pub abar: u64,
    pub a_x: u64,
    pub a_y: u64,
    pub a_xy: u64,
    pub dim_v: u64,
}

impl Default for TripleData {
    fn default() -> Self {
        TripleData { d_x: 1, d_y: 1, abar: 1, a_x: 1, a_y: 1, a_xy: 1, dim_v: 1 }
    }
}

impl TripleData {
    /// Elementary abelian preset: `A_x`, `A_y` spanned by coordinate subsets
    /// of `(ℤ/2)^rank`, `A_{(x,y)} = A_x ∩ A_y`, `dim V = 1`.
    pub fn commutative(d_x: u64, d_y: u64, rank: u32, x_gens: &[u32], y_gens: &[u32]) -> Result<Self> {
        if x_gens.iter().chain(y_gens).any(|&g| g >= rank) {
            return Err(Error::InvalidGroupData(format!("generator index out of range for rank {rank}")));
        }
        let mut x: Vec<u32> = x_gens.to_vec();
        x.sort_unstable();
        x.dedup();
        let mut y: Vec<u32> = y_gens.to_vec();
        y.sort_unstable();
        y.dedup();
        let common = x.iter().filter(|g| y.contains(g)).count() as u32;
        let t = TripleData {
            d_x,
            d_y,
            abar: 1 << rank,
            a_x: 1 << x.len(),
            a_y: 1 << y.len(),
            a_xy: 1 << common,
            dim_v: 1,
        };
        t.validate()?;
        Ok(t)
    }

    pub fn validate(&self) -> Result<()> {
        let fields = [self.d_x, self.d_y, self.abar, self.a_x, self.a_y, self.a_xy, self.dim_v];
        if fields.contains(&0) {
            return Err(Error::InvalidGroupData(format!("{self:?} has a zero entry")));
        }
        let divides = |a: u64, b: u64| b % a == 0;
        if !divides(self.a_xy, self.a_x) || !divides(self.a_xy, self.a_y) {
            return Err(Error::InvalidGroupData(format!("|A_xy| = {} must divide |A_x| and |A_y|", self.a_xy)));
        }
        if !divides(self.a_x, self.abar) || !divides(self.a_y, self.abar) {
            return Err(Error::InvalidGroupData(format!("|A_x|, |A_y| must divide |Ā| = {}", self.abar)));
        }
        Ok(())
    }
}

fn exact_quotient(num: u64, den: u64) -> Result<u64> {
    if num % den != 0 {
        return Err(Error::NonIntegral(format!("{num}/{den}")));
    }
    Ok(num / den)
}

/// `z = dim V · |A_y| / |A_{(x,y)}|`.
pub fn scale_factor(t: &TripleData) -> Result<u64> {
    t.validate()?;
    exact_quotient(t.dim_v * t.a_y, t.a_xy)
}

/// `d_x d_y · |Ā| / |A_{(x,y)}| · dim V`.
pub fn bimodule_multiplicity(t: &TripleData) -> Result<u64> {
    t.validate()?;
    exact_quotient(t.d_x * t.d_y * t.abar * t.dim_v, t.a_xy)
}

/// `(pr_x / pr_y) · |A_y| / |A_{(x,y)}| · dim V`.
pub fn scale_factor_via_premet(pr_x: Rational, pr_y: Rational, t: &TripleData) -> Result<Rational> {
    t.validate()?;
    for pr in [pr_x, pr_y] {
        if pr < Rational::one() {
            return Err(Error::InvalidGroupData(format!("Premet factor {pr} < 1")));
        }
    }
    Ok(pr_x / pr_y * Rational::new(t.a_y as i64, t.a_xy as i64) * Rational::from_integer(t.dim_v as i64))
}

/// Premet scale factors, one per left cell.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct PremetTable {
    pub by_cell: BTreeMap<u32, Rational>,
}

impl PremetTable {
    pub fn insert(&mut self, cell: u32, pr: Rational) -> Result<()> {
        if pr < Rational::one() {
            return Err(Error::InvalidGroupData(format!("Premet factor {pr} < 1")));
        }
        self.by_cell.insert(cell, pr);
        Ok(())
    }

    pub fn for_cell(&self, cell: u32) -> Option<Rational> {
        self.by_cell.get(&cell).copied()
    }

    /// Value for an element, through its left cell.
    pub fn for_element(&self, left_cells: &CellPartition, w: u32) -> Option<Rational> {
        left_cells.cell_of.get(w as usize).and_then(|&c| self.for_cell(c))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GoldieReport {
    pub dimension: u64,
    pub goldie_rank: u64,
    pub scale_factor: u64,
    pub multiplicity: u64,
    /// `(|Ā| / |A_{(x,y)}|) · dimension²`.
    pub multiplicity_from_dimension: Rational,
    /// Premet factor used, if one was supplied.
    pub premet: Option<Rational>,
    /// False when `pr ≠ 1`: dimension and Goldie rank need not agree then.
    pub dimension_equals_goldie_rank: bool,
    /// `scale_factor_via_premet` with the supplied factor for `x` and `y`.
    pub premet_scale_factor: Option<Rational>,
}

/// Runs the simple character pipeline for `c_row`, then the formula layer.
pub fn goldie_report(
    rho0: &Weight,
    c_row: &DecompositionRow,
    setup: &BlockSetup,
    factors: GroupFactors,
    t: &TripleData,
    premet: Option<Rational>,
) -> Result<GoldieReport> {
    let ch = simple_character::<Rational>(rho0, c_row, setup, factors)?;
    let dimension = match ch.finite_dimension() {
        Dimension::Finite(d) if d.is_integer() && d > Rational::zero() => d.to_integer() as u64,
        Dimension::Finite(d) => return Err(Error::NonIntegral(d.to_string())),
        Dimension::Infinite => return Err(Error::InfiniteCharacter),
    };
    let scale = scale_factor(t)?;
    let multiplicity = bimodule_multiplicity(t)?;
    let applicable = premet.is_none_or(|p| p == Rational::one());
    let premet_scale = premet.map(|p| scale_factor_via_premet(p, p, t)).transpose()?;
    Ok(GoldieReport {
        dimension,
        goldie_rank: dimension,
        scale_factor: scale,
        multiplicity,
        multiplicity_from_dimension: Rational::new((t.abar * dimension * dimension) as i64, t.a_xy as i64),
        premet,
        dimension_equals_goldie_rank: applicable,
        premet_scale_factor: premet_scale,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coxeter::WeylElement;
    use crate::kl::inverse_kl_decomposition;
    use crate::orbits::LeviDescriptor;
    use crate::partitions::LieType;

    fn t(d_x: u64, d_y: u64, abar: u64, a_x: u64, a_y: u64, a_xy: u64, dim_v: u64) -> TripleData {
        TripleData { d_x, d_y, abar, a_x, a_y, a_xy, dim_v }
    }

    #[test]
    fn scale_factor_examples() {
        assert_eq!(scale_factor(&TripleData::default()).unwrap(), 1);
        assert_eq!(scale_factor(&t(1, 1, 4, 4, 4, 2, 1)).unwrap(), 2);
        assert_eq!(scale_factor(&t(1, 1, 8, 4, 4, 4, 1)).unwrap(), 1);
        assert!(scale_factor(&t(1, 1, 4, 4, 4, 3, 1)).is_err());
    }

    #[test]
    fn multiplicity_examples() {
        assert_eq!(bimodule_multiplicity(&t(1, 1, 2, 2, 2, 2, 1)).unwrap(), 1);
        assert_eq!(bimodule_multiplicity(&t(1, 1, 2, 1, 1, 1, 1)).unwrap(), 2);
        assert_eq!(bimodule_multiplicity(&t(3, 5, 1, 1, 1, 1, 1)).unwrap(), 15);
    }

    #[test]
    fn premet_examples() {
        let one = Rational::one();
        let data = t(1, 1, 4, 4, 4, 2, 1);
        assert_eq!(scale_factor_via_premet(one, one, &data).unwrap(), Rational::from_integer(2));
        assert_eq!(
            scale_factor_via_premet(Rational::from_integer(2), one, &TripleData::default()).unwrap(),
            Rational::from_integer(2)
        );
        assert!(scale_factor_via_premet(Rational::new(1, 2), one, &data).is_err());
    }

    #[test]
    fn commutative_preset() {
        let d = TripleData::commutative(1, 1, 3, &[0, 1], &[1, 2]).unwrap();
        assert_eq!((d.abar, d.a_x, d.a_y, d.a_xy), (8, 4, 4, 2));
        assert_eq!(scale_factor(&d).unwrap(), 2);
        assert!(TripleData::commutative(1, 1, 2, &[3], &[]).is_err());
    }

    #[test]
    fn premet_table_is_keyed_by_cell() {
        let cells = CellPartition {
            kind: crate::cells::CellKind::Left,
            cell_of: vec![0, 1, 1],
            cells: vec![vec![0], vec![1, 2]],
        };
        let mut table = PremetTable::default();
        table.insert(1, Rational::from_integer(2)).unwrap();
        assert_eq!(table.for_element(&cells, 2), Some(Rational::from_integer(2)));
        assert_eq!(table.for_element(&cells, 0), None);
        assert!(table.insert(0, Rational::new(1, 3)).is_err());
    }

    #[test]
    fn sl2_report() {
        let ty = LieType::a(1);
        let setup = BlockSetup::parabolic_zero(ty, LeviDescriptor::cartan(ty)).unwrap();
        let row = inverse_kl_decomposition(&WeylElement::identity(ty)).unwrap();
        let data = TripleData::default();
        let r = goldie_report(&setup.rho(), &row, &setup, GroupFactors::default(), &data, None).unwrap();
        assert_eq!((r.dimension, r.goldie_rank, r.scale_factor, r.multiplicity), (1, 1, 1, 1));
        assert!(r.dimension_equals_goldie_rank);
        let r = goldie_report(&setup.rho(), &row, &setup, GroupFactors::default(), &data, Some(Rational::from_integer(2)))
            .unwrap();
        assert!(!r.dimension_equals_goldie_rank);
        let s = inverse_kl_decomposition(&WeylElement::generator(ty, 0).unwrap()).unwrap();
        assert_eq!(
            goldie_report(&setup.rho(), &s, &setup, GroupFactors::default(), &data, None),
            Err(Error::InfiniteCharacter)
        );
    }
}
