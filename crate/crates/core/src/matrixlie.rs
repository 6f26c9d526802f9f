//! Matrix models of gl_N, so_N and sp_N, sl2-triples and centralizers.
//!
//! `so_N` and `sp_N` preserve the anti-diagonal form `J` with
//! `J[i][N-1-i] = ε_i`, where `ε_i = 1` for so and `ε_i = ±1` (first/second
//! half) for sp. With this form the upper-triangular matrices in the algebra
//! form a Borel subalgebra and diagonal matrices a Cartan subalgebra:
//!
//! ```text
//! so_5: J = [0 0 0 0 1]    sp_4: J = [ 0  0  0  1]
//!           [0 0 0 1 0]              [ 0  0  1  0]
//!           [0 0 1 0 0]              [ 0 -1  0  0]
//!           [0 1 0 0 0]              [-1  0  0  0]
//!           [1 0 0 0 0]
//! ```
//!
//! Type A is modelled by gl_N; centralizer dimensions are taken there.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::str::FromStr;
use std::sync::{Arc, OnceLock};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::Matrix;
use crate::memo::Memo;
use crate::orbits::{h_eigenvalues, LeviDescriptor, OrbitLabel};
use crate::partitions::{Family, LieType, Partition};
use crate::scalar::Scalar;

/// Exact field used by the cached entry points.
pub type Exact = crate::BigRational;

/// Environment variable overriding [`DEFAULT_RANK_BOUND`].
pub const RANK_BOUND_ENV: &str = "ORBIT_GOLDIE_RANK_BOUND";
pub const DEFAULT_RANK_BOUND: u32 = 8;

/// Current rank bound for matrix computations.
pub fn rank_bound() -> u32 {
    std::env::var(RANK_BOUND_ENV)
        .ok()
        .and_then(|v| v.trim().parse().ok())
        .unwrap_or(DEFAULT_RANK_BOUND)
}

fn check_rank(ty: LieType) -> Result<()> {
    let bound = rank_bound();
    if ty.rank() > bound {
        return Err(Error::RankBound { rank: ty.rank(), bound });
    }
    Ok(())
}

/// A basis vector `E_lead + s·E_partner` (the partner is absent in gl and
/// for self-paired positions).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct BasisElement {
    pub lead: (usize, usize),
    pub partner: Option<((usize, usize), i64)>,
}

/// gl_N, so_N or sp_N as a space of N×N matrices.
#[derive(Clone, Debug)]
pub struct MatrixAlgebra {
    family: Family,
    n: usize,
    eps: Vec<i64>,
    basis: Vec<BasisElement>,
    lead_index: HashMap<(usize, usize), usize>,
}

impl MatrixAlgebra {
    /// Algebra of the family on an N-dimensional natural module. Degenerate
    /// sizes (so_1, so_2, sp_0, gl_0) are allowed.
    pub fn new(family: Family, n: usize) -> Result<Self> {
        let parity_ok = match family {
            Family::A => true,
            Family::B => n % 2 == 1,
            Family::C | Family::D => n % 2 == 0,
        };
        if !parity_ok {
            return Err(Error::InvalidLieType(format!("no {family} algebra on a {n}-dimensional module")));
        }
        let eps: Vec<i64> = (0..n)
            .map(|i| if family == Family::C && 2 * i >= n { -1 } else { 1 })
            .collect();
        let mut basis = Vec::new();
        for p in 0..n {
            for q in 0..n {
                if family == Family::A {
                    basis.push(BasisElement { lead: (p, q), partner: None });
                    continue;
                }
                let partner = (n - 1 - q, n - 1 - p);
                let s = -eps[n - 1 - p] * eps[n - 1 - q];
                if partner < (p, q) {
                    continue;
                }
                if partner == (p, q) {
                    if s == 1 {
                        basis.push(BasisElement { lead: (p, q), partner: None });
                    }
                    continue;
                }
                basis.push(BasisElement { lead: (p, q), partner: Some((partner, s)) });
            }
        }
        let lead_index = basis.iter().enumerate().map(|(i, b)| (b.lead, i)).collect();
        Ok(MatrixAlgebra { family, n, eps, basis, lead_index })
    }

    pub fn of_type(ty: LieType) -> Self {
        MatrixAlgebra::new(ty.family(), ty.natural_dim() as usize).expect("natural dimension matches family")
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn natural_dim(&self) -> usize {
        self.n
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[BasisElement] {
        &self.basis
    }

    /// Gram matrix of the invariant form (identity for gl).
    pub fn gram<T: Scalar>(&self) -> Matrix<T> {
        let n = self.n;
        if self.family == Family::A {
            return Matrix::identity(n);
        }
        Matrix::from_fn(n, n, |i, j| if i + j + 1 == n { T::from_int(self.eps[i]) } else { T::zero() })
    }

    pub fn basis_matrix<T: Scalar>(&self, i: usize) -> Matrix<T> {
        let mut coords = vec![T::zero(); self.dim()];
        coords[i] = T::one();
        self.element(&coords)
    }

    pub fn element<T: Scalar>(&self, coords: &[T]) -> Matrix<T> {
        assert_eq!(coords.len(), self.dim());
        let mut m = Matrix::zeros(self.n, self.n);
        for (b, c) in self.basis.iter().zip(coords) {
            m[b.lead] = c.clone();
            if let Some((pos, s)) = b.partner {
                m[pos] = c.clone() * T::from_int(s);
            }
        }
        m
    }

    /// Coordinates of a matrix assumed to lie in the algebra.
    pub fn coordinates<T: Scalar>(&self, x: &Matrix<T>) -> Vec<T> {
        self.basis.iter().map(|b| x[b.lead].clone()).collect()
    }

    /// Membership test: `XᵀJ + JX = 0` (always true for gl).
    pub fn contains<T: Scalar>(&self, x: &Matrix<T>) -> bool {
        if x.rows() != self.n || x.cols() != self.n {
            return false;
        }
        if self.family == Family::A {
            return true;
        }
        let j = self.gram::<T>();
        (&(&x.transpose() * &j) + &(&j * x)).is_zero()
    }

    fn index_of(&self, lead: (usize, usize)) -> Option<usize> {
        self.lead_index.get(&lead).copied()
    }
}

/// Entry `(i, j)` of `[e, b]`.
fn bracket_entry<T: Scalar>(e: &Matrix<T>, b: &BasisElement, (i, j): (usize, usize)) -> T {
    let mut acc = T::zero();
    let mut term = |(p, q): (usize, usize), c: i64| {
        if j == q {
            acc = acc.clone() + e[(i, p)].clone() * T::from_int(c);
        }
        if i == p {
            acc = acc.clone() - e[(q, j)].clone() * T::from_int(c);
        }
    };
    term(b.lead, 1);
    if let Some((pos, s)) = b.partner {
        term(pos, s);
    }
    acc
}

/// Kernel dimensions of `ad e`, grouped by `key` of the basis element and by
/// degree.
///
/// `e` must be homogeneous of degree 2 for the diagonal grading `degree`
/// and of degree 0 for `key`.
fn kernel_dims_grouped<T: Scalar, K: Ord + Clone>(
    alg: &MatrixAlgebra,
    e: &Matrix<T>,
    degree: &[i64],
    key: impl Fn((usize, usize)) -> K,
) -> BTreeMap<(K, i64), usize> {
    let mut groups: BTreeMap<(K, i64), Vec<usize>> = BTreeMap::new();
    for (idx, b) in alg.basis.iter().enumerate() {
        let (p, q) = b.lead;
        groups.entry((key(b.lead), degree[p] - degree[q])).or_default().push(idx);
    }
    let mut out = BTreeMap::new();
    for ((k, d), cols) in &groups {
        let rows = groups.get(&(k.clone(), d + 2)).map(Vec::as_slice).unwrap_or(&[]);
        let kernel = if rows.is_empty() {
            cols.len()
        } else {
            let m = Matrix::from_fn(rows.len(), cols.len(), |r, c| {
                bracket_entry(e, &alg.basis[cols[c]], alg.basis[rows[r]].lead)
            });
            cols.len() - m.rank()
        };
        out.insert((k.clone(), *d), kernel);
    }
    out
}

/// An sl2-triple `(e, h, f)`.
#[derive(Clone, Debug, PartialEq)]
pub struct Sl2Triple<T> {
    pub e: Matrix<T>,
    pub h: Matrix<T>,
    pub f: Matrix<T>,
}

impl<T: Scalar> Sl2Triple<T> {
    /// `[h,e] = 2e`, `[h,f] = -2f`, `[e,f] = h`.
    pub fn relations_hold(&self) -> bool {
        let two = T::from_int(2);
        self.h.bracket(&self.e) == self.e.scale(&two)
            && self.h.bracket(&self.f) == self.f.scale(&-two)
            && self.e.bracket(&self.f) == self.h
    }

    /// Diagonal of `h` as integers.
    pub fn h_diagonal(&self) -> Vec<i64> {
        (0..self.h.rows())
            .map(|i| {
                let v = self.h[(i, i)].clone();
                (0..64i64)
                    .flat_map(|k| [k, -k])
                    .find(|&k| T::from_int(k) == v)
                    .expect("h has small integer eigenvalues")
            })
            .collect()
    }
}

/// Deterministic coefficient stream for the generic element of g(2).
fn trial_coefficient(attempt: u64, index: usize) -> i64 {
    if attempt == 0 {
        return 1;
    }
    let mut x = attempt
        .wrapping_mul(0x9E37_79B9_7F4A_7C15)
        .wrapping_add((index as u64).wrapping_mul(0xBF58_476D_1CE4_E5B9));
    x ^= x >> 31;
    x = x.wrapping_mul(0x94D0_49BB_1331_11EB);
    x ^= x >> 29;
    (x % 7) as i64 + 1
}

const MAX_ATTEMPTS: u64 = 64;

/// Builds a triple with `e` of Jordan type `p` inside `alg`.
///
/// `h` is diagonal with the `h`-strings sorted in decreasing order; `e` is a
/// generic element of the `2`-eigenspace of `ad h` and `f` the solution of
/// `[e, f] = h` in the `-2`-eigenspace.
pub fn realize_in<T: Scalar>(alg: &MatrixAlgebra, p: &Partition) -> Result<Sl2Triple<T>> {
    let n = alg.natural_dim();
    if p.size() as usize != n || !alg.family().admits(p) {
        return Err(Error::WrongType { partition: p.to_string(), ty: format!("{}-family algebra of size {n}", alg.family()) });
    }
    let hd = h_eigenvalues(p);
    let h = Matrix::diagonal(&hd.iter().map(|&x| T::from_int(x)).collect::<Vec<_>>());
    let zero = Matrix::zeros(n, n);
    if p.parts().iter().all(|&x| x == 1) {
        return Ok(Sl2Triple { e: zero.clone(), h, f: zero });
    }
    let weight = |b: &BasisElement| hd[b.lead.0] - hd[b.lead.1];
    let by_weight = |w: i64| -> Vec<usize> { (0..alg.dim()).filter(|&i| weight(&alg.basis[i]) == w).collect() };
    let g2 = by_weight(2);
    let g0 = by_weight(0);
    let gm2 = by_weight(-2);
    for attempt in 0..MAX_ATTEMPTS {
        let mut coords = vec![T::zero(); alg.dim()];
        for (k, &i) in g2.iter().enumerate() {
            coords[i] = T::from_int(trial_coefficient(attempt, k));
        }
        let e = alg.element(&coords);
        if e.nilpotent_jordan_type().as_deref() != Some(p.parts()) {
            continue;
        }
        let system = Matrix::from_fn(g0.len(), gm2.len(), |r, c| {
            bracket_entry(&e, &alg.basis[gm2[c]], alg.basis[g0[r]].lead)
        });
        let rhs: Vec<T> = g0.iter().map(|&r| h[alg.basis[r].lead].clone()).collect();
        let Some(x) = system.solve(&rhs) else { continue };
        let mut fc = vec![T::zero(); alg.dim()];
        for (&i, v) in gm2.iter().zip(x) {
            fc[i] = v;
        }
        let f = alg.element(&fc);
        return Ok(Sl2Triple { e, h, f });
    }
    Err(Error::Realization(format!("no generic element of type {p} found after {MAX_ATTEMPTS} attempts")))
}

/// Uncached realization over any scalar type.
pub fn realize_nilpotent_with<T: Scalar>(o: &OrbitLabel) -> Result<Sl2Triple<T>> {
    check_rank(o.lie_type())?;
    realize_in(&MatrixAlgebra::of_type(o.lie_type()), o.partition())
}

fn realization_memo() -> &'static Memo<(LieType, Partition), Sl2Triple<Exact>> {
    static MEMO: OnceLock<Memo<(LieType, Partition), Sl2Triple<Exact>>> = OnceLock::new();
    MEMO.get_or_init(Memo::new)
}

/// Realizes the orbit over exact rationals. Cached; both members of a very
/// even pair share one representative.
pub fn realize_nilpotent(o: &OrbitLabel) -> Result<Arc<Sl2Triple<Exact>>> {
    check_rank(o.lie_type())?;
    let key = (o.lie_type(), o.partition().clone());
    realization_memo().get_or_try_insert(&key, || realize_in(&MatrixAlgebra::of_type(o.lie_type()), o.partition()))
}

/// `dim z_g(e)` by an exact kernel computation (gl_N in type A).
pub fn centralizer_dimension(o: &OrbitLabel) -> Result<u64> {
    let triple = realize_nilpotent(o)?;
    let alg = MatrixAlgebra::of_type(o.lie_type());
    let dims = kernel_dims_grouped(&alg, &triple.e, &h_eigenvalues(o.partition()), |_| ());
    Ok(dims.values().sum::<usize>() as u64)
}

/// `dim (z_g(e) ∩ g(0))`, the reductive part of the centralizer.
pub fn reductive_centralizer_dimension(o: &OrbitLabel) -> Result<u64> {
    let triple = realize_nilpotent(o)?;
    let alg = MatrixAlgebra::of_type(o.lie_type());
    let dims = kernel_dims_grouped(&alg, &triple.e, &h_eigenvalues(o.partition()), |_| ());
    Ok(dims.get(&((), 0)).copied().unwrap_or(0) as u64)
}

/// Eigenvalues of `ad h` on g (sl_N in type A), in decreasing order.
pub fn ad_theta_eigenvalues(o: &OrbitLabel) -> Result<Vec<i64>> {
    check_rank(o.lie_type())?;
    let alg = MatrixAlgebra::of_type(o.lie_type());
    let hd = h_eigenvalues(o.partition());
    let mut ev: Vec<i64> = alg.basis().iter().map(|b| hd[b.lead.0] - hd[b.lead.1]).collect();
    if o.family() == Family::A {
        let zero = ev.iter().position(|&x| x == 0).expect("Cartan contributes zeros");
        ev.swap_remove(zero);
    }
    ev.sort_unstable_by(|a, b| b.cmp(a));
    Ok(ev)
}

/// A nilpotent in a Levi: one partition per gl block (outermost first) and
/// one for the residual factor.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct LeviOrbit {
    pub gl_partitions: Vec<Partition>,
    pub residual: Partition,
}

impl LeviOrbit {
    pub fn zero(levi: &LeviDescriptor) -> Self {
        LeviOrbit {
            gl_partitions: levi.gl_blocks.iter().map(|&n| Partition::column(n)).collect(),
            residual: Partition::column(levi.residual_natural_dim()),
        }
    }

    pub fn validate(&self, levi: &LeviDescriptor) -> Result<()> {
        let sizes_ok = self.gl_partitions.len() == levi.gl_blocks.len()
            && self.gl_partitions.iter().zip(&levi.gl_blocks).all(|(p, &n)| p.size() == n);
        if !sizes_ok {
            return Err(Error::InvalidLevi(format!("gl partitions do not match the blocks of {levi}")));
        }
        if !levi.admits_seed(&self.residual) {
            return Err(Error::WrongType { partition: self.residual.to_string(), ty: format!("residual factor of {levi}") });
        }
        Ok(())
    }

    /// Jordan type of the nilpotent in the ambient natural module.
    pub fn ambient_partition(&self, family: Family) -> Partition {
        let copies = if family == Family::A { 1 } else { 2 };
        let mut parts: Vec<u32> = self.residual.parts().to_vec();
        for p in &self.gl_partitions {
            for _ in 0..copies {
                parts.extend_from_slice(p.parts());
            }
        }
        Partition::from_unsorted(parts)
    }
}

impl fmt::Display for LeviOrbit {
    /// `2,1;1|1,1`: gl partitions outermost first, then the residual.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let gl: Vec<String> = self.gl_partitions.iter().map(Partition::to_string).collect();
        write!(f, "{}|{}", gl.join(";"), self.residual)
    }
}

impl FromStr for LeviOrbit {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let (gl, residual) = s
            .split_once('|')
            .ok_or_else(|| Error::Parse(format!("Levi orbit {s:?} must look like \"2,1;1|1\"")))?;
        let gl_partitions =
            gl.split(';').map(str::trim).filter(|t| !t.is_empty()).map(str::parse).collect::<Result<Vec<_>>>()?;
        Ok(LeviOrbit { gl_partitions, residual: residual.parse()? })
    }
}

/// Nilpotent of the Levi realized in the ambient algebra, with a diagonal
/// grading for which it has degree 2.
fn levi_nilpotent<T: Scalar>(ty: LieType, levi: &LeviDescriptor, orbit: &LeviOrbit) -> Result<(Matrix<T>, Vec<i64>)> {
    levi.validate(ty)?;
    orbit.validate(levi)?;
    let alg = MatrixAlgebra::of_type(ty);
    let n = alg.natural_dim();
    let mirror = ty.family() != Family::A;
    let mut e = Matrix::<T>::zeros(n, n);
    let mut degree = vec![0i64; n];
    let mut offset = 0usize;
    for (block, p) in levi.gl_blocks.iter().zip(&orbit.gl_partitions) {
        let mut start = offset;
        for &a in p.parts() {
            for i in 0..a as usize {
                let pos = start + i;
                degree[pos] = -2 * i as i64;
                if mirror {
                    degree[n - 1 - pos] = 2 * i as i64;
                }
                if i + 1 < a as usize {
                    let lead = (pos, pos + 1);
                    let idx = alg.index_of(lead).or_else(|| {
                        let partner = (n - 2 - pos, n - 1 - pos);
                        alg.index_of(partner)
                    });
                    let idx = idx.expect("gl block entry lies in the algebra");
                    let b = alg.basis[idx];
                    // Scale so that the (pos, pos+1) entry is 1.
                    let c = if b.lead == lead { 1 } else { b.partner.expect("paired").1 };
                    e[b.lead] = T::from_int(c);
                    if let Some((pp, s)) = b.partner {
                        e[pp] = T::from_int(c * s);
                    }
                }
            }
            start += a as usize;
        }
        offset += *block as usize;
    }
    let r = levi.residual_natural_dim() as usize;
    let res_alg = MatrixAlgebra::new(ty.family(), r)?;
    let res = realize_in::<T>(&res_alg, &orbit.residual)?;
    let hd = h_eigenvalues(&orbit.residual);
    for i in 0..r {
        degree[offset + i] = hd[i];
        for j in 0..r {
            let v = res.e[(i, j)].clone();
            if !v.is_negligible() {
                e[(offset + i, offset + j)] = v;
            }
        }
    }
    debug_assert!(alg.contains(&e));
    Ok((e, degree))
}

/// Degree of each ε-coordinate in the grading that makes the Levi
/// nilpotent of `orbit` homogeneous of degree 2.
pub fn levi_degrees(ty: LieType, levi: &LeviDescriptor, orbit: &LeviOrbit) -> Result<Vec<i64>> {
    let (_, degree) = levi_nilpotent::<crate::Rational>(ty, levi, orbit)?;
    let coords = match ty.family() {
        Family::A => degree.len(),
        _ => ty.rank() as usize,
    };
    Ok(degree[..coords].to_vec())
}

/// One z(g₀)-weight space of `z_g(e)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct GradingEntry {
    /// Weight in block coordinates: one per gl block (outermost first), plus
    /// the residual gl block in type A.
    pub t_weight: Vec<i64>,
    /// `⟨θ, t_weight⟩`.
    pub theta: i64,
    pub multiplicity: usize,
}

/// The z(g₀)-weights of `z_g(e)` with multiplicities.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct CentralizerGrading {
    /// `θ` in block coordinates: `(k, …, 1)`, plus `0` for the type A
    /// residual block.
    pub theta: Vec<i64>,
    pub entries: Vec<GradingEntry>,
}

impl CentralizerGrading {
    pub fn total_dimension(&self) -> usize {
        self.entries.iter().map(|e| e.multiplicity).sum()
    }

    /// The weights `μ_1, …, μ_k` with `⟨θ, μ_i⟩ < 0`, repeated by
    /// multiplicity.
    pub fn negative_weights(&self) -> Vec<Vec<i64>> {
        self.entries
            .iter()
            .filter(|e| e.theta < 0)
            .flat_map(|e| std::iter::repeat(e.t_weight.clone()).take(e.multiplicity))
            .collect()
    }

    pub fn negative_count(&self) -> usize {
        self.negative_weights().len()
    }
}

/// Block coordinate of each natural-module index: `(block, sign)`.
fn block_of(ty: LieType, levi: &LeviDescriptor) -> Vec<Option<(usize, i64)>> {
    let n = ty.natural_dim() as usize;
    let k = levi.gl_blocks.len();
    let mut out = vec![None; n];
    let mut offset = 0;
    for (j, &size) in levi.gl_blocks.iter().enumerate() {
        for i in offset..offset + size as usize {
            out[i] = Some((j, 1));
            if ty.family() != Family::A {
                out[n - 1 - i] = Some((j, -1));
            }
        }
        offset += size as usize;
    }
    if ty.family() == Family::A {
        for slot in out.iter_mut().skip(offset) {
            *slot = Some((k, 1));
        }
    }
    out
}

/// `θ` for a Levi in block coordinates.
pub fn levi_theta(ty: LieType, levi: &LeviDescriptor) -> Vec<i64> {
    let k = levi.gl_blocks.len();
    let mut theta: Vec<i64> = (0..k).map(|j| (k - j) as i64).collect();
    if ty.family() == Family::A {
        theta.push(0);
    }
    theta
}

/// Decomposes `z_g(e)` under the centre of the Levi, for `e` the nilpotent
/// of `orbit` inside `levi`.
pub fn centralizer_grading(ty: LieType, levi: &LeviDescriptor, orbit: &LeviOrbit) -> Result<CentralizerGrading> {
    check_rank(ty)?;
    let (e, degree) = levi_nilpotent::<Exact>(ty, levi, orbit)?;
    let alg = MatrixAlgebra::of_type(ty);
    let blocks = block_of(ty, levi);
    let theta = levi_theta(ty, levi);
    let dim = theta.len();
    let tw = |i: usize| -> Vec<i64> {
        let mut v = vec![0i64; dim];
        if let Some((j, s)) = blocks[i] {
            v[j] += s;
        }
        v
    };
    let mut dims: BTreeMap<Vec<i64>, usize> = BTreeMap::new();
    let grouped = kernel_dims_grouped(&alg, &e, &degree, |(p, q)| {
        let (a, b) = (tw(p), tw(q));
        a.iter().zip(&b).map(|(x, y)| x - y).collect::<Vec<i64>>()
    });
    for ((weight, _), m) in grouped {
        *dims.entry(weight).or_insert(0) += m;
    }
    let entries = dims
        .into_iter()
        .filter(|(_, m)| *m > 0)
        .map(|(t_weight, multiplicity)| {
            let pairing = t_weight.iter().zip(&theta).map(|(a, b)| a * b).sum();
            GradingEntry { t_weight, theta: pairing, multiplicity }
        })
        .collect();
    Ok(CentralizerGrading { theta, entries })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::orbits::{all_orbits, is_even_orbit, orbit_dimension, reductive_centralizer};
    use crate::Rational;

    fn o(s: &str) -> OrbitLabel {
        s.parse().unwrap()
    }

    #[test]
    fn algebra_dimensions_and_closure() {
        for ty in [LieType::a(2), LieType::b(2), LieType::c(2), LieType::d(3)] {
            let alg = MatrixAlgebra::of_type(ty);
            let expected = match ty.family() {
                Family::A => ty.algebra_dim() + 1,
                _ => ty.algebra_dim(),
            };
            assert_eq!(alg.dim() as u64, expected);
            for i in 0..alg.dim() {
                let x: Matrix<Rational> = alg.basis_matrix(i);
                assert!(alg.contains(&x));
                for j in (0..alg.dim()).step_by(3) {
                    let y = alg.basis_matrix(j);
                    let z = x.bracket(&y);
                    assert!(alg.contains(&z));
                    assert_eq!(alg.element(&alg.coordinates(&z)), z);
                }
            }
        }
    }

    #[test]
    fn triple_examples() {
        let t = realize_nilpotent(&o("A1:2")).unwrap();
        assert!(t.relations_hold());
        assert_eq!(t.h_diagonal(), vec![1, -1]);
        assert_eq!(t.e.nilpotent_jordan_type().unwrap(), vec![2]);
        let t = realize_nilpotent(&o("B2:3,1,1")).unwrap();
        assert_eq!(t.e.rank(), 2);
        assert_eq!(t.e.pow(2).rank(), 1);
        assert!(t.relations_hold());
        let t = realize_nilpotent(&OrbitLabel::zero(LieType::c(3))).unwrap();
        assert!(t.e.is_zero());
    }

    #[test]
    fn every_small_orbit_realizes() {
        for ty in [LieType::a(3), LieType::b(3), LieType::c(3), LieType::d(4)] {
            let alg = MatrixAlgebra::of_type(ty);
            for x in all_orbits(ty) {
                let t = realize_nilpotent(&x).unwrap();
                assert!(t.relations_hold(), "{x}");
                assert!(alg.contains(&t.e) && alg.contains(&t.h) && alg.contains(&t.f), "{x}");
                assert_eq!(t.e.nilpotent_jordan_type().unwrap(), x.partition().parts(), "{x}");
            }
        }
    }

    #[test]
    fn centralizer_examples() {
        assert_eq!(centralizer_dimension(&o("A2:2,1")).unwrap(), 5);
        assert_eq!(centralizer_dimension(&o("A3:4")).unwrap(), 4);
        assert_eq!(centralizer_dimension(&OrbitLabel::zero(LieType::b(2))).unwrap(), 10);
        assert_eq!(centralizer_dimension(&o("B2:5")).unwrap(), 2);
    }

    #[test]
    fn blocked_kernel_matches_full_kernel() {
        for x in [o("B2:3,1,1"), o("C3:4,2"), o("A3:2,1,1"), o("D3:3,3")] {
            let t = realize_nilpotent_with::<Rational>(&x).unwrap();
            let alg = MatrixAlgebra::of_type(x.lie_type());
            let ad = Matrix::from_fn(alg.dim(), alg.dim(), |r, c| bracket_entry(&t.e, &alg.basis()[c], alg.basis()[r].lead));
            assert_eq!(ad.nullity() as u64, centralizer_dimension(&x).unwrap(), "{x}");
        }
    }

    #[test]
    fn dimensions_match_formula_and_reductive_part() {
        for ty in [LieType::a(3), LieType::b(3), LieType::c(3), LieType::d(3)] {
            let alg_dim = MatrixAlgebra::of_type(ty).dim() as u64;
            for x in all_orbits(ty) {
                assert_eq!(alg_dim - centralizer_dimension(&x).unwrap(), orbit_dimension(&x), "{x}");
                if ty.family() != Family::A {
                    let red = reductive_centralizer(&x).unwrap().dimension();
                    assert_eq!(reductive_centralizer_dimension(&x).unwrap(), red, "{x}");
                }
            }
        }
    }

    #[test]
    fn ad_h_eigenvalues() {
        assert_eq!(ad_theta_eigenvalues(&o("A1:2")).unwrap(), vec![2, 0, -2]);
        assert!(ad_theta_eigenvalues(&OrbitLabel::zero(LieType::c(2))).unwrap().iter().all(|&x| x == 0));
        let ev = ad_theta_eigenvalues(&o("B2:5")).unwrap();
        assert_eq!(ev.len(), 10);
        assert!(ev.iter().all(|x| x % 2 == 0));
        for ty in [LieType::a(3), LieType::b(3), LieType::c(3), LieType::d(4)] {
            for x in all_orbits(ty) {
                let even = ad_theta_eigenvalues(&x).unwrap().iter().all(|v| v % 2 == 0);
                assert_eq!(even, is_even_orbit(&x), "{x}");
            }
        }
    }

    #[test]
    fn levi_orbit_text_round_trip() {
        let o: LeviOrbit = "2,1;1|1,1,1".parse().unwrap();
        assert_eq!(o.gl_partitions.len(), 2);
        assert_eq!(o.to_string(), "2,1;1|1,1,1");
        let bare: LeviOrbit = "|3".parse().unwrap();
        assert!(bare.gl_partitions.is_empty());
        assert!("2,1".parse::<LeviOrbit>().is_err());
    }

    #[test]
    fn rank_bound_is_enforced() {
        let big = OrbitLabel::zero(LieType::c(rank_bound() + 1));
        assert!(matches!(realize_nilpotent(&big), Err(Error::RankBound { .. })));
    }

    #[test]
    fn grading_examples() {
        // sl2, Cartan Levi, e = 0.
        let a1 = LieType::a(1);
        let cartan = LeviDescriptor::cartan(a1);
        let g = centralizer_grading(a1, &cartan, &LeviOrbit::zero(&cartan)).unwrap();
        assert_eq!(g.negative_weights(), vec![vec![-1, 1]]);
        assert_eq!(g.total_dimension(), 4);
        // g0 = g.
        let b2 = LieType::b(2);
        let whole = LeviDescriptor::trivial(b2);
        let orbit = LeviOrbit { gl_partitions: vec![], residual: "3,1,1".parse().unwrap() };
        let g = centralizer_grading(b2, &whole, &orbit).unwrap();
        assert_eq!(g.negative_count(), 0);
        assert_eq!(g.total_dimension() as u64, centralizer_dimension(&o("B2:3,1,1")).unwrap());
        // sl3 with gl2 x gl1 and e regular in g0.
        let a2 = LieType::a(2);
        let levi = LeviDescriptor::new(Family::A, vec![2], 1).unwrap();
        let orbit = LeviOrbit { gl_partitions: vec!["2".parse().unwrap()], residual: "1".parse().unwrap() };
        let g = centralizer_grading(a2, &levi, &orbit).unwrap();
        assert_eq!(g.total_dimension(), 5);
        assert_eq!(g.negative_weights(), vec![vec![-1, 1]]);
    }

    #[test]
    fn grading_totals_match_centralizer() {
        let cases = [
            (LieType::c(3), vec![1], 2, vec!["1"], "2,2"),
            (LieType::b(3), vec![2], 1, vec!["2"], "3"),
            (LieType::d(4), vec![2, 1], 1, vec!["2", "1"], "1,1"),
            (LieType::a(3), vec![2, 1], 1, vec!["2", "1"], "1"),
        ];
        for (ty, blocks, res, gl, r) in cases {
            let levi = LeviDescriptor::new(ty.family(), blocks, res).unwrap();
            let orbit = LeviOrbit { gl_partitions: gl.iter().map(|s| s.parse().unwrap()).collect(), residual: r.parse().unwrap() };
            let g = centralizer_grading(ty, &levi, &orbit).unwrap();
            let ambient = OrbitLabel::new(ty, orbit.ambient_partition(ty.family())).unwrap();
            assert_eq!(g.total_dimension() as u64, centralizer_dimension(&ambient).unwrap(), "{ty} {levi}");
            for entry in &g.entries {
                let pairing: i64 = entry.t_weight.iter().zip(&g.theta).map(|(a, b)| a * b).sum();
                assert_eq!(pairing, entry.theta);
            }
            // Weights come in ± pairs.
            let neg = g.negative_weights();
            let pos: Vec<Vec<i64>> = g
                .entries
                .iter()
                .filter(|e| e.theta > 0)
                .flat_map(|e| std::iter::repeat(e.t_weight.iter().map(|x| -x).collect::<Vec<_>>()).take(e.multiplicity))
                .collect();
            let mut a = neg.clone();
            let mut b = pos;
            a.sort();
            b.sort();
            assert_eq!(a, b);
        }
    }
}
