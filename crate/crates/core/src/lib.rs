//! Nilpotent orbits of classical Lie algebras, Kazhdan–Lusztig data of
//! their Weyl groups, and character formulas for finite W-algebras.
//!
//! Linear algebra and characters are generic over [`scalar::Scalar`]; the
//! aliases below fix the common choices.

pub mod cells;
pub mod characters;
pub mod coxeter;
pub mod error;
pub mod goldie;
pub mod kl;
pub mod linalg;
pub mod matrixlie;
pub mod memo;
pub mod oracle;
pub mod orbits;
pub mod partitions;
pub mod poly;
pub mod scalar;
pub mod weights;

pub use error::{Error, Result};

pub type Rational = num_rational::Ratio<i64>;
pub type BigRational = num_rational::Ratio<num_bigint::BigInt>;

pub type ExactMatrix = linalg::Matrix<BigRational>;
pub type RationalMatrix = linalg::Matrix<Rational>;
pub type FloatMatrix = linalg::Matrix<f64>;
pub type Float32Matrix = linalg::Matrix<f32>;

pub type RationalCharacter = characters::FormalCharacter<Rational>;
pub type ExactCharacter = characters::FormalCharacter<BigRational>;
pub type FloatCharacter = characters::FormalCharacter<f64>;

pub use cells::{compute_cells, rsk_label, CellKind, CellPartition};
pub use characters::{BlockSetup, Dimension, FormalCharacter, GroupFactors};
pub use coxeter::{Coxeter, DihedralGroup, WeylElement, WeylGroup};
pub use goldie::{GoldieReport, TripleData};
pub use kl::{DecompositionRow, KlTable};
pub use orbits::{LeviDescriptor, OrbitLabel};
pub use partitions::{Family, LieType, Partition};
pub use poly::Poly;
pub use weights::Weight;
