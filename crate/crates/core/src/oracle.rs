//! Brute-force reference computations.
//!
//! Each function recomputes something the main modules provide, by a
//! slower route that shares none of their algorithms.

use std::collections::{BTreeMap, HashMap};

use fixedbitset::FixedBitSet;
use num_traits::{One, Zero};

use crate::coxeter::{Coxeter, WeylElement};
use crate::error::{Error, Result};
use crate::orbits::{GroupForm, OrbitLabel};
use crate::partitions::{Family, Partition};
use crate::poly::{Laurent, Poly};
use crate::weights::{RootSystem, Weight};
use crate::Rational;

/// All partitions of `n`, parts in decreasing order.
pub fn partitions_of(n: u32) -> Vec<Vec<u32>> {
    fn go(rest: u32, max: u32, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if rest == 0 {
            out.push(cur.clone());
            return;
        }
        for k in (1..=rest.min(max)).rev() {
            cur.push(k);
            go(rest - k, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(n, n, &mut Vec::new(), &mut out);
    out
}

/// `a ≤ b` in dominance, by partial sums.
pub fn dominated(a: &[u32], b: &[u32]) -> bool {
    let len = a.len().max(b.len());
    let (mut sa, mut sb) = (0u32, 0u32);
    for i in 0..len {
        sa += a.get(i).copied().unwrap_or(0);
        sb += b.get(i).copied().unwrap_or(0);
        if sa > sb {
            return false;
        }
    }
    sa == sb
}

/// Parity rule: in B and D even parts, in C odd parts, occur with even
/// multiplicity; B needs an odd total, C and D an even one.
pub fn has_type(family: Family, p: &[u32]) -> bool {
    let n: u32 = p.iter().sum();
    let restricted_parity = match family {
        Family::A => return true,
        Family::B | Family::D => 0,
        Family::C => 1,
    };
    let total_ok = match family {
        Family::B => n % 2 == 1,
        _ => n % 2 == 0,
    };
    let mut counts: HashMap<u32, u32> = HashMap::new();
    for &x in p {
        *counts.entry(x).or_default() += 1;
    }
    total_ok && counts.iter().all(|(&part, &m)| part % 2 != restricted_parity || m % 2 == 0)
}

/// The dominance-largest partition of the given type below `p`, found by
/// scanning every partition of `|p|`.
pub fn collapse_by_search(family: Family, p: &Partition) -> Option<Partition> {
    let below: Vec<Vec<u32>> = partitions_of(p.size())
        .into_iter()
        .filter(|q| has_type(family, q) && dominated(q, p.parts()))
        .collect();
    let top = below.iter().find(|m| below.iter().all(|q| dominated(q, m)))?;
    Partition::new(top.clone()).ok()
}

/// Length as the number of positive roots sent to negative roots.
pub fn length_by_roots(w: &WeylElement) -> u32 {
    let roots = RootSystem::new(w.ty);
    let n = w.one_line.len();
    let image = |alpha: &Weight| -> Vec<i64> {
        let mut out = vec![0i64; n];
        for (i, c) in alpha.0.iter().enumerate() {
            let target = w.one_line[i];
            let v = c.doubled();
            out[target.unsigned_abs() as usize - 1] += if target < 0 { -v } else { v };
        }
        out
    };
    roots
        .positive
        .iter()
        .filter(|a| image(a).iter().find(|&&c| c != 0).is_some_and(|&c| c < 0))
        .count() as u32
}

/// Bruhat order as the transitive closure of `x → xt` (t a reflection,
/// `ℓ(xt) = ℓ(x) + 1`). Entry `w` holds `{x : x ≤ w}`.
pub fn bruhat_by_reflections<G: Coxeter + ?Sized>(g: &G) -> Vec<FixedBitSet> {
    let n = g.order();
    let mut reflections: Vec<u32> = Vec::new();
    for w in 0..n as u32 {
        for s in 0..g.rank() {
            let t = g.multiply(g.right_mul(w, s), g.inverse(w));
            if !reflections.contains(&t) {
                reflections.push(t);
            }
        }
    }
    let mut by_length: Vec<u32> = (0..n as u32).collect();
    by_length.sort_by_key(|&w| g.length(w));
    let mut below = vec![FixedBitSet::with_capacity(n); n];
    for &w in &by_length {
        let mut set = FixedBitSet::with_capacity(n);
        set.insert(w as usize);
        for &t in &reflections {
            let x = g.multiply(w, t);
            if g.length(x) + 1 == g.length(w) {
                set.union_with(&below[x as usize]);
            }
        }
        below[w as usize] = set;
    }
    below
}

/// Hecke algebra element `Σ a_w T_w`, dense.
type Hecke = Vec<Laurent>;

fn times_t<G: Coxeter + ?Sized>(g: &G, h: &Hecke, s: usize) -> Hecke {
    let q = Laurent::monomial(1, 1);
    let q_minus_one = &q - &Laurent::one();
    let mut out = vec![Laurent::zero(); h.len()];
    for (w, a) in h.iter().enumerate() {
        if a.is_zero() {
            continue;
        }
        let ws = g.right_mul(w as u32, s) as usize;
        if g.length(ws as u32) > g.length(w as u32) {
            out[ws] = &out[ws] + a;
        } else {
            out[w] = &out[w] + &(&q_minus_one * a);
            out[ws] = &out[ws] + &(&q * a);
        }
    }
    out
}

/// KL polynomials from the bar involution: with `R_{x,y}` read off
/// `\overline{T_y}`, `P_{x,w}` is the unique solution of
/// `q^{ℓ(w)−ℓ(x)} \overline{P_{x,w}} − P_{x,w} = Σ_{x<y≤w} R_{x,y} P_{y,w}`
/// of degree below `(ℓ(w)−ℓ(x))/2`. Returns `table[w][x]`.
pub fn kl_by_bar_involution<G: Coxeter + ?Sized>(g: &G) -> Result<Vec<Vec<Poly>>> {
    let n = g.order();
    let qinv = Laurent::monomial(1, -1);
    let qinv_minus_one = &qinv - &Laurent::one();
    let mut order: Vec<u32> = (0..n as u32).collect();
    order.sort_by_key(|&w| g.length(w));
    // r_rows[x] = [(y, R_{x,y})] with R ≠ 0 and y ≠ x
    let mut r_rows: Vec<Vec<(u32, Poly)>> = vec![Vec::new(); n];
    let mut bars: Vec<Option<Hecke>> = vec![None; n];
    let mut id = vec![Laurent::zero(); n];
    id[0] = Laurent::one();
    bars[0] = Some(id);
    for &y in &order[1..] {
        let s = (0..g.rank()).find(|&s| g.length(g.right_mul(y, s)) < g.length(y)).expect("nontrivial element");
        let v = g.right_mul(y, s) as usize;
        let prev = bars[v].as_ref().expect("shorter element done");
        let ts = times_t(g, prev, s);
        let bar: Hecke = ts.iter().zip(prev).map(|(a, b)| &(&qinv * a) + &(&qinv_minus_one * b)).collect();
        for (x, b) in bar.iter().enumerate() {
            if b.is_zero() || x as u32 == y {
                continue;
            }
            let sign = if (g.length(x as u32) + g.length(y)) % 2 == 0 { 1 } else { -1 };
            let r = b.shift(i64::from(g.length(y))).to_poly().ok_or_else(|| {
                Error::InvalidGroupData(format!("R-polynomial ({x},{y}) has negative exponents"))
            })?;
            r_rows[x].push((y, r.scale(sign)));
        }
        bars[y as usize] = Some(bar);
    }
    drop(bars);
    let mut table = vec![vec![Poly::zero(); n]; n];
    for w in 0..n as u32 {
        let lw = g.length(w);
        let col = &mut table[w as usize];
        col[w as usize] = Poly::one();
        for &x in order.iter().rev() {
            if x == w || g.length(x) >= lw {
                continue;
            }
            let d = (lw - g.length(x)) as usize;
            let mut rhs = vec![0i64; 2 * d + 2];
            for (y, r) in &r_rows[x as usize] {
                let p = &col[*y as usize];
                if p.is_zero() {
                    continue;
                }
                for (i, a) in r.coeffs().iter().enumerate() {
                    for (j, b) in p.coeffs().iter().enumerate() {
                        rhs[i + j] += a * b;
                    }
                }
            }
            let p = Poly::from_coeffs((0..d).filter(|k| 2 * k < d).map(|k| -rhs[k]).collect());
            let lhs = &p.to_laurent().bar().shift(d as i64) - &p.to_laurent();
            if lhs != Laurent::from_coeffs(0, rhs) {
                return Err(Error::InvalidGroupData(format!("bar equation fails at ({x},{w}) in {}", g.name())));
            }
            col[x as usize] = p;
        }
    }
    Ok(table)
}

/// Exact solution of `A c = b` by Gauss–Jordan elimination, if one exists.
pub fn solve_exact(mut a: Vec<Vec<Rational>>, mut b: Vec<Rational>) -> Option<Vec<Rational>> {
    let rows = a.len();
    let cols = a.first().map_or(0, Vec::len);
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..rows).find(|&i| !a[i][c].is_zero()) else {
            continue;
        };
        a.swap(r, p);
        b.swap(r, p);
        let inv = Rational::one() / a[r][c];
        for k in 0..cols {
            a[r][k] *= inv;
        }
        b[r] *= inv;
        for i in 0..rows {
            if i != r && !a[i][c].is_zero() {
                let f = a[i][c];
                for k in 0..cols {
                    let v = a[r][k];
                    a[i][k] -= f * v;
                }
                let v = b[r];
                b[i] -= f * v;
            }
        }
        pivots.push(c);
        r += 1;
    }
    if b[r..].iter().any(|v| !v.is_zero()) || pivots.len() < cols {
        return None;
    }
    let mut x = vec![Rational::zero(); cols];
    for (i, &c) in pivots.iter().enumerate() {
        x[c] = b[i];
    }
    Some(x)
}

/// Inverse of an integer matrix, if it is integral.
pub fn integer_inverse(m: &[Vec<i64>]) -> Option<Vec<Vec<i64>>> {
    let n = m.len();
    let a: Vec<Vec<Rational>> = m.iter().map(|r| r.iter().map(|&v| Rational::from_integer(v)).collect()).collect();
    let mut inv = vec![vec![0i64; n]; n];
    for j in 0..n {
        let e: Vec<Rational> = (0..n).map(|i| Rational::from_integer(i64::from(i == j))).collect();
        let col = solve_exact(a.clone(), e)?;
        for i in 0..n {
            if !col[i].is_integer() {
                return None;
            }
            inv[i][j] = col[i].to_integer();
        }
    }
    Some(inv)
}

/// Elements of the parabolic subgroup generated by the mask, by closure.
fn parabolic_closure<G: Coxeter + ?Sized>(g: &G, mask: u32) -> Vec<u32> {
    let mut seen = vec![false; g.order()];
    seen[0] = true;
    let mut stack = vec![0u32];
    while let Some(w) = stack.pop() {
        for s in (0..g.rank()).filter(|s| mask & (1 << s) != 0) {
            let ws = g.right_mul(w, s);
            if !seen[ws as usize] {
                seen[ws as usize] = true;
                stack.push(ws);
            }
        }
    }
    (0..g.order() as u32).filter(|&w| seen[w as usize]).collect()
}

/// Coefficients `c_u` (u shortest in `uW_J`) with
/// `Σ_u c_u Σ_{z ∈ W_J} (−1)^{ℓ(z)} Δ_{uz} = Σ_y row[y] Δ_y`, by solving
/// the linear system.
pub fn parabolic_row_by_solve<G: Coxeter + ?Sized>(g: &G, row: &[i64], mask: u32) -> Option<Vec<(u32, i64)>> {
    let sub = parabolic_closure(g, mask);
    let reps: Vec<u32> = (0..g.order() as u32)
        .filter(|&u| sub.iter().all(|&z| g.length(g.multiply(u, z)) >= g.length(u)))
        .collect();
    let n = g.order();
    let mut a = vec![vec![Rational::zero(); reps.len()]; n];
    for (k, &u) in reps.iter().enumerate() {
        for &z in &sub {
            let sign = if g.length(z) % 2 == 0 { 1 } else { -1 };
            a[g.multiply(u, z) as usize][k] += Rational::from_integer(sign);
        }
    }
    let b = row.iter().map(|&v| Rational::from_integer(v)).collect();
    let x = solve_exact(a, b)?;
    let mut out = Vec::new();
    for (k, &u) in reps.iter().enumerate() {
        if !x[k].is_integer() {
            return None;
        }
        if !x[k].is_zero() {
            out.push((u, x[k].to_integer()));
        }
    }
    Some(out)
}

/// Row-insertion recording tableau of a permutation word.
pub fn recording_tableau(word: &[u32]) -> Vec<Vec<u32>> {
    let mut rows: Vec<Vec<u32>> = Vec::new();
    let mut rec: Vec<Vec<u32>> = Vec::new();
    for (t, &a) in word.iter().enumerate() {
        let mut bump = a;
        let mut r = 0;
        while r < rows.len() {
            let k = rows[r].partition_point(|&v| v < bump);
            if k == rows[r].len() {
                break;
            }
            std::mem::swap(&mut rows[r][k], &mut bump);
            r += 1;
        }
        if r == rows.len() {
            rows.push(Vec::new());
            rec.push(Vec::new());
        }
        rows[r].push(bump);
        rec[r].push(t as u32 + 1);
    }
    rec
}

/// Class id per element, grouping permutations with equal recording
/// tableau.
pub fn recording_classes(words: &[Vec<u32>]) -> Vec<usize> {
    let mut ids: BTreeMap<Vec<Vec<u32>>, usize> = BTreeMap::new();
    words
        .iter()
        .map(|w| {
            let q = recording_tableau(w);
            let next = ids.len();
            *ids.entry(q).or_insert(next)
        })
        .collect()
}

/// Number of PBW monomials `f_1^{n_1} ⋯ f_k^{n_k}` of each weight, with
/// `−⟨θ, Σ n_i μ_i⟩ ≤ depth`. Each generator has weight `gens[i]`.
pub fn pbw_counts(theta: &[i64], gens: &[Vec<i64>], depth: i64) -> BTreeMap<Vec<i64>, u64> {
    fn go(
        i: usize,
        budget: i64,
        cur: &mut Vec<i64>,
        theta: &[i64],
        gens: &[Vec<i64>],
        out: &mut BTreeMap<Vec<i64>, u64>,
    ) {
        if i == gens.len() {
            *out.entry(cur.clone()).or_default() += 1;
            return;
        }
        let step: i64 = -gens[i].iter().zip(theta).map(|(a, b)| a * b).sum::<i64>();
        assert!(step > 0, "generator weight must be θ-negative");
        let mut used = 0;
        loop {
            go(i + 1, budget - used * step, cur, theta, gens, out);
            if (used + 1) * step > budget {
                break;
            }
            used += 1;
            for (c, g) in cur.iter_mut().zip(&gens[i]) {
                *c += g;
            }
        }
        for (c, g) in cur.iter_mut().zip(&gens[i]) {
            *c -= used * g;
        }
    }
    let mut out = BTreeMap::new();
    let mut cur = vec![0i64; theta.len()];
    go(0, depth, &mut cur, theta, gens, &mut out);
    out
}

/// `|A(e)|` by enumerating sign vectors on the orthogonal factors of the
/// reductive centralizer: `O(m_i)` for odd parts (B, D) or even parts (C).
/// The special group keeps `∏_{i odd} ε_i = 1` in orthogonal types, and the
/// adjoint form divides by `−1` when it lies in that group.
pub fn component_group_by_signs(o: &OrbitLabel, form: GroupForm) -> Option<u64> {
    let family = o.family();
    let parity = match family {
        Family::A => return None,
        Family::B | Family::D => 1,
        Family::C => 0,
    };
    let mut mult: BTreeMap<u32, u32> = BTreeMap::new();
    for &p in o.partition().parts() {
        *mult.entry(p).or_default() += 1;
    }
    let factors: Vec<(u32, u32)> = mult.into_iter().filter(|(p, _)| p % 2 == parity).collect();
    let k = factors.len();
    if form == GroupForm::Full {
        return Some(1 << k);
    }
    let in_special = |signs: u32| family == Family::C || signs.count_ones() % 2 == 0;
    let minus_one: u32 = factors.iter().enumerate().filter(|(_, (_, m))| m % 2 == 1).fold(0, |acc, (i, _)| acc | (1 << i));
    let n: u32 = o.partition().size();
    let minus_one_in_group = match family {
        Family::B => false,
        _ => n % 2 == 0,
    };
    let special: Vec<u32> = (0..1u32 << k).filter(|&s| in_special(s)).collect();
    let mut classes: Vec<u32> = special
        .iter()
        .map(|&s| if minus_one_in_group { s.min(s ^ minus_one) } else { s })
        .collect();
    classes.sort_unstable();
    classes.dedup();
    Some(classes.len() as u64)
}
