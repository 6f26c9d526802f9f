//! Kazhdan–Lusztig polynomials and decomposition of simples into Vermas.
//!
//! Labels: with `ϱ₀` dominant regular (ρ-shifted), `L_w = L(w⁻¹ϱ₀)` and
//! `Δ_y = Δ(y⁻¹ϱ₀)`. Then `[Δ_y : L_w] = P_{y,w}(1)` and
//!
//! ```text
//! L_w = Σ_{y ≥ w} (−1)^{ℓ(w)+ℓ(y)} P_{w₀y, w₀w}(1) Δ_y,
//! ```
//!
//! so in `A₁` the finite-dimensional `L_e` equals `Δ_e − Δ_s`.

use std::collections::HashMap;
use std::sync::{Arc, OnceLock};

use serde::{Deserialize, Serialize};

use crate::coxeter::{Coxeter, WeylElement, WeylGroup};
use crate::error::{Error, Result};
use crate::memo::Memo;
use crate::partitions::LieType;
use crate::poly::Poly;

/// Largest group for which a dense `|W|²` table is built.
pub const MAX_KL_ORDER: usize = 3840;

/// All `P_{x,w}` of one group.
#[derive(Debug)]
pub struct KlTable {
    order: usize,
    polys: Vec<Poly>,
    /// `table[w * order + x]` indexes `polys`; 0 is the zero polynomial.
    table: Vec<u32>,
    /// `(x, μ(x, w))` for `x < w` with nonzero `μ`.
    mu_lists: Vec<Vec<(u32, i64)>>,
}

struct Interner {
    polys: Vec<Poly>,
    index: HashMap<Poly, u32>,
}

impl Interner {
    fn new() -> Self {
        let mut i = Interner { polys: Vec::new(), index: HashMap::new() };
        i.intern(Poly::zero());
        i.intern(Poly::one());
        i
    }

    fn intern(&mut self, p: Poly) -> u32 {
        if let Some(&k) = self.index.get(&p) {
            return k;
        }
        let k = self.polys.len() as u32;
        self.index.insert(p.clone(), k);
        self.polys.push(p);
        k
    }
}

fn mu_of(p: &Poly, d: u32) -> i64 {
    if d % 2 == 1 {
        p.coeff(((d - 1) / 2) as usize)
    } else {
        0
    }
}

impl KlTable {
    /// Standard recursion along a left descent `s` of `w`, `v = sw`:
    ///
    /// ```text
    /// P_{x,w} = q^{1−c} P_{sx,v} + q^c P_{x,v} − Σ_{z<v, sz<z} μ(z,v) q^{(ℓ(w)−ℓ(z))/2} P_{x,z}
    /// ```
    ///
    /// with `c = 1` when `sx < x`.
    pub fn compute<G: Coxeter + ?Sized>(g: &G) -> Result<KlTable> {
        let n = g.order();
        if n > MAX_KL_ORDER {
            return Err(Error::InvalidGroupData(format!(
                "{} has {n} elements; KL tables are limited to {MAX_KL_ORDER}",
                g.name()
            )));
        }
        let bruhat = g.bruhat_table();
        let mut interner = Interner::new();
        let mut table = vec![0u32; n * n];
        let mut mu_lists: Vec<Vec<(u32, i64)>> = vec![Vec::new(); n];
        table[0] = 1;
        for w in 1..n as u32 {
            let s = g.left_descent_mask(w).trailing_zeros() as usize;
            let v = g.left_mul(s, w);
            let lw = g.length(w);
            let base_v = v as usize * n;
            let relevant: Vec<(u32, i64)> =
                mu_lists[v as usize].iter().copied().filter(|&(z, _)| g.left_mul(s, z) < z).collect();
            let mut row_mu = Vec::new();
            for x in bruhat[w as usize].ones() {
                let x = x as u32;
                let sx = g.left_mul(s, x);
                let c = usize::from(g.length(sx) < g.length(x));
                let p_sx_v = &interner.polys[table[base_v + sx as usize] as usize];
                let p_x_v = &interner.polys[table[base_v + x as usize] as usize];
                let mut p = &p_sx_v.shift(1 - c) + &p_x_v.shift(c);
                for &(z, m) in &relevant {
                    let pz = table[z as usize * n + x as usize];
                    if pz != 0 {
                        let k = ((lw - g.length(z)) / 2) as usize;
                        p = &p - &interner.polys[pz as usize].scale(m).shift(k);
                    }
                }
                if x != w {
                    let m = mu_of(&p, lw - g.length(x));
                    if m != 0 {
                        row_mu.push((x, m));
                    }
                }
                table[w as usize * n + x as usize] = interner.intern(p);
            }
            mu_lists[w as usize] = row_mu;
        }
        Ok(KlTable { order: n, polys: interner.polys, table, mu_lists })
    }

    /// Shared table of a classical Weyl group.
    pub fn get(ty: LieType) -> Result<Arc<KlTable>> {
        static MEMO: OnceLock<Memo<LieType, KlTable>> = OnceLock::new();
        let memo = MEMO.get_or_init(Memo::new);
        if let Some(t) = memo.get(&ty) {
            return Ok(t);
        }
        let g = WeylGroup::get(ty)?;
        memo.get_or_try_insert(&ty, || KlTable::compute(&*g))
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn poly(&self, x: u32, w: u32) -> &Poly {
        &self.polys[self.table[w as usize * self.order + x as usize] as usize]
    }

    /// Number of distinct polynomials in the table, zero included.
    pub fn distinct_polynomials(&self) -> usize {
        self.polys.len()
    }

    /// `μ(x, w)` for `x < w`; zero otherwise.
    pub fn mu(&self, x: u32, w: u32) -> i64 {
        self.mu_lists[w as usize].iter().find(|&&(z, _)| z == x).map_or(0, |&(_, m)| m)
    }

    /// Pairs `(x, μ(x, w))` with `x < w` and `μ ≠ 0`.
    pub fn mu_list(&self, w: u32) -> &[(u32, i64)] {
        &self.mu_lists[w as usize]
    }

    /// Row `y ↦ c_{w,y}` of `L_w = Σ c_{w,y} Δ_y`, nonzero entries only.
    pub fn inverse_row<G: Coxeter + ?Sized>(&self, g: &G, w: u32) -> Vec<(u32, i64)> {
        let w0 = g.longest();
        let w0w = g.multiply(w0, w);
        let lw = g.length(w);
        (0..g.order() as u32)
            .filter_map(|y| {
                let v = self.poly(g.multiply(w0, y), w0w).eval_at_one();
                let sign = if (lw + g.length(y)) % 2 == 0 { 1 } else { -1 };
                (v != 0).then_some((y, sign * v))
            })
            .collect()
    }

    /// `[Δ_y : L_w] = P_{y,w}(1)` as a dense matrix indexed `[y][w]`.
    pub fn forward_matrix(&self) -> Vec<Vec<i64>> {
        (0..self.order as u32)
            .map(|y| (0..self.order as u32).map(|w| self.poly(y, w).eval_at_one()).collect())
            .collect()
    }

    /// Parabolic row `u ↦ c^J_{w,u}` over `u ∈ W^J`, with
    /// `ch Δ_P(u) = Σ_{z ∈ W_J} (−1)^{ℓ(z)} ch Δ_{uz}`.
    ///
    /// Requires `w` to have no right descent in `J`; the ordinary row is then
    /// constant up to sign on each coset, which is checked.
    pub fn parabolic_row<G: Coxeter + ?Sized>(&self, g: &G, w: u32, j_mask: u32) -> Result<Vec<(u32, i64)>> {
        if g.right_descent_mask(w) & j_mask != 0 {
            return Err(Error::NotInParabolicBlock(format!(
                "element {w} of {} has a right descent in the parabolic subset",
                g.name()
            )));
        }
        let row: HashMap<u32, i64> = self.inverse_row(g, w).into_iter().collect();
        let parabolic: Vec<u32> = (0..g.order() as u32)
            .filter(|&z| g.reduced_word(z).iter().all(|&s| j_mask & (1 << s) != 0))
            .collect();
        let mut out = Vec::new();
        for u in (0..g.order() as u32).filter(|&u| g.right_descent_mask(u) & j_mask == 0) {
            let c = row.get(&u).copied().unwrap_or(0);
            for &z in &parabolic {
                let sign = if g.length(z) % 2 == 0 { 1 } else { -1 };
                let y = g.multiply(u, z);
                if row.get(&y).copied().unwrap_or(0) != sign * c {
                    return Err(Error::NotInParabolicBlock(format!(
                        "ordinary row of element {w} is not a combination of parabolic Vermas"
                    )));
                }
            }
            if c != 0 {
                out.push((u, c));
            }
        }
        Ok(out)
    }
}

/// `P_{x,w}`; zero unless `x ≤ w`.
pub fn kl_polynomial(x: &WeylElement, w: &WeylElement) -> Result<Poly> {
    let (g, xi, wi) = resolve(x, w)?;
    Ok(KlTable::get(g.lie_type())?.poly(xi, wi).clone())
}

/// `μ(x, w)`, the coefficient of `q^{(ℓ(w)−ℓ(x)−1)/2}` in `P_{x,w}`.
pub fn mu(x: &WeylElement, w: &WeylElement) -> Result<i64> {
    let (g, xi, wi) = resolve(x, w)?;
    Ok(KlTable::get(g.lie_type())?.mu(xi, wi))
}

fn resolve(x: &WeylElement, w: &WeylElement) -> Result<(Arc<WeylGroup>, u32, u32)> {
    if x.ty != w.ty {
        return Err(Error::GroupMismatch(x.ty.to_string(), w.ty.to_string()));
    }
    let g = WeylGroup::get(x.ty)?;
    let (xi, wi) = (g.id_of(x)?, g.id_of(w)?);
    Ok((g, xi, wi))
}

/// `L_w = Σ_u c_{w,u} Δ(u)`; for `J = ∅` the `Δ(u)` are ordinary Vermas.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DecompositionRow {
    pub w: WeylElement,
    /// Zero-based generator indices of the parabolic subset.
    pub parabolic: Vec<usize>,
    pub entries: Vec<(WeylElement, i64)>,
}

impl DecompositionRow {
    pub fn coefficient(&self, u: &WeylElement) -> i64 {
        self.entries.iter().find(|(v, _)| v == u).map_or(0, |(_, c)| *c)
    }
}

pub fn inverse_kl_decomposition(w: &WeylElement) -> Result<DecompositionRow> {
    parabolic_verma_decomposition(w, &[])
}

/// `c_{w,u}` over minimal coset representatives `u ∈ W^J`.
pub fn parabolic_verma_decomposition(w: &WeylElement, j: &[usize]) -> Result<DecompositionRow> {
    let g = WeylGroup::get(w.ty)?;
    let wi = g.id_of(w)?;
    let mask = g.generator_mask(j)?;
    let table = KlTable::get(w.ty)?;
    let row = table.parabolic_row(&*g, wi, mask)?;
    let mut parabolic = j.to_vec();
    parabolic.sort_unstable();
    parabolic.dedup();
    Ok(DecompositionRow {
        w: w.clone(),
        parabolic,
        entries: row.into_iter().map(|(u, c)| (g.element(u), c)).collect(),
    })
}
