//! Classical Weyl groups as signed permutations.
//!
//! An element `w` is stored in one-line form `[w(1), …, w(n)]` and acts on
//! ε-coordinates by `w(ε_i) = ±ε_{|w(i)|}`. Generators match the simple
//! roots of [`crate::weights::RootSystem`]:
//!
//! * `s_i` (`i < n`) swaps positions `i` and `i+1` (`α_i = ε_i − ε_{i+1}`);
//! * B/C: `s_n` negates the last entry (`ε_n` or `2ε_n`);
//! * D: `s_n` maps the last two entries `(a, b)` to `(−b, −a)` (`ε_{n−1}+ε_n`).
//!
//! Type A of rank `r` uses permutations of `1..=r+1`.

use std::collections::{HashMap, VecDeque};
use std::fmt;
use std::str::FromStr;
use std::sync::{Arc, OnceLock};

use fixedbitset::FixedBitSet;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::memo::Memo;
use crate::partitions::{Family, LieType};
use crate::weights::Weight;

/// Largest group the enumerating constructor accepts.
pub const MAX_GROUP_ORDER: u64 = 50_000;

/// A Weyl group element in one-line notation, tagged with its type.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct WeylElement {
    #[serde(rename = "type")]
    pub ty: LieType,
    pub one_line: Vec<i32>,
}

fn coordinate_count(ty: LieType) -> usize {
    match ty.family() {
        Family::A => ty.rank() as usize + 1,
        _ => ty.rank() as usize,
    }
}

/// Order key: positive entries before negative ones, matching
/// `ε_1 > … > ε_n > 0 > −ε_n > … > −ε_1`.
fn key(a: i32, n: i32) -> i32 {
    if a > 0 {
        a
    } else {
        2 * n + 1 + a
    }
}

impl WeylElement {
    pub fn identity(ty: LieType) -> Self {
        WeylElement { ty, one_line: (1..=coordinate_count(ty) as i32).collect() }
    }

    /// Validates a one-line form for the given type.
    pub fn new(ty: LieType, one_line: Vec<i32>) -> Result<Self> {
        let n = coordinate_count(ty);
        if one_line.len() != n {
            return Err(Error::InvalidElement(format!("{one_line:?} has {} entries, expected {n}", one_line.len())));
        }
        let mut seen = vec![false; n + 1];
        for &a in &one_line {
            let m = a.unsigned_abs() as usize;
            if m == 0 || m > n || seen[m] {
                return Err(Error::InvalidElement(format!("{one_line:?} is not a signed permutation")));
            }
            seen[m] = true;
        }
        let negatives = one_line.iter().filter(|&&a| a < 0).count();
        match ty.family() {
            Family::A if negatives > 0 => {
                return Err(Error::InvalidElement(format!("{one_line:?}: type A elements carry no signs")))
            }
            Family::D if negatives % 2 == 1 => {
                return Err(Error::InvalidElement(format!("{one_line:?}: type D needs an even number of signs")))
            }
            _ => {}
        }
        Ok(WeylElement { ty, one_line })
    }

    pub fn rank(&self) -> usize {
        self.ty.rank() as usize
    }

    fn apply(&self, a: i32) -> i32 {
        let v = self.one_line[a.unsigned_abs() as usize - 1];
        if a < 0 {
            -v
        } else {
            v
        }
    }

    /// `self · other` (apply `other` first).
    pub fn compose(&self, other: &WeylElement) -> Result<WeylElement> {
        if self.ty != other.ty {
            return Err(Error::GroupMismatch(self.ty.to_string(), other.ty.to_string()));
        }
        Ok(WeylElement { ty: self.ty, one_line: other.one_line.iter().map(|&a| self.apply(a)).collect() })
    }

    pub fn inverse(&self) -> WeylElement {
        let mut inv = vec![0; self.one_line.len()];
        for (i, &a) in self.one_line.iter().enumerate() {
            let pos = a.unsigned_abs() as usize - 1;
            inv[pos] = if a < 0 { -(i as i32 + 1) } else { i as i32 + 1 };
        }
        WeylElement { ty: self.ty, one_line: inv }
    }

    /// The simple reflection `s_{i+1}` (zero-based index `i`).
    pub fn generator(ty: LieType, i: usize) -> Result<WeylElement> {
        let r = ty.rank() as usize;
        if i >= r {
            return Err(Error::InvalidGenerators(format!("s{} does not exist in {ty}", i + 1)));
        }
        let mut w = WeylElement::identity(ty);
        let n = w.one_line.len();
        match (ty.family(), i + 1 == r) {
            (Family::A, _) | (_, false) => w.one_line.swap(i, i + 1),
            (Family::B | Family::C, true) => w.one_line[n - 1] = -w.one_line[n - 1],
            (Family::D, true) => {
                w.one_line[n - 2] = -(n as i32);
                w.one_line[n - 1] = -(n as i32 - 1);
            }
        }
        Ok(w)
    }

    /// Length, by counting inversions of the family.
    pub fn length(&self) -> u32 {
        let w = &self.one_line;
        let n = w.len() as i32;
        let mut len = 0u32;
        for i in 0..w.len() {
            for j in i + 1..w.len() {
                if key(w[i], n) > key(w[j], n) {
                    len += 1;
                }
                if self.ty.family() != Family::A && key(w[i], n) > key(-w[j], n) {
                    len += 1;
                }
            }
        }
        if matches!(self.ty.family(), Family::B | Family::C) {
            len += w.iter().filter(|&&a| a < 0).count() as u32;
        }
        len
    }

    /// Zero-based indices `s` with `ℓ(w s) < ℓ(w)`.
    pub fn descents_right(&self) -> Vec<usize> {
        let l = self.length();
        (0..self.rank())
            .filter(|&i| {
                let s = WeylElement::generator(self.ty, i).expect("index in range");
                self.compose(&s).expect("same type").length() < l
            })
            .collect()
    }

    /// `w(λ)` for `λ` in ε-coordinates.
    pub fn act(&self, lambda: &Weight) -> Result<Weight> {
        if lambda.dim() != self.one_line.len() {
            return Err(Error::WeightDimension { expected: self.one_line.len(), got: lambda.dim() });
        }
        let mut out = Weight::zero(lambda.dim());
        for (i, &a) in self.one_line.iter().enumerate() {
            let c = lambda.0[i];
            out.0[a.unsigned_abs() as usize - 1] = if a < 0 { -c } else { c };
        }
        Ok(out)
    }

    /// Zero-based indices `s` with `ℓ(s w) < ℓ(w)`.
    pub fn descents_left(&self) -> Vec<usize> {
        self.inverse().descents_right()
    }
}

impl fmt::Display for WeylElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.one_line.iter().map(i32::to_string).collect();
        write!(f, "[{}]", parts.join(","))
    }
}

/// A finite classical Weyl group with interned elements.
///
/// Ids are stable: elements are sorted by length, then by one-line form,
/// so the identity is id 0 and the longest element has the largest id.
#[derive(Debug)]
pub struct WeylGroup {
    ty: LieType,
    elements: Vec<Vec<i32>>,
    index: HashMap<Vec<i32>, u32>,
    lengths: Vec<u32>,
    right: Vec<Vec<u32>>,
    left: Vec<Vec<u32>>,
    inverse: Vec<u32>,
    right_descents: Vec<u32>,
    left_descents: Vec<u32>,
    bruhat: OnceLock<Vec<FixedBitSet>>,
}

/// Expected `|W|` for a classical type.
pub fn group_order(ty: LieType) -> u64 {
    let r = ty.rank() as u64;
    let fact = |k: u64| (1..=k).product::<u64>();
    match ty.family() {
        Family::A => fact(r + 1),
        Family::B | Family::C => (1u64 << r) * fact(r),
        Family::D => (1u64 << (r - 1)) * fact(r),
    }
}

fn group_memo() -> &'static Memo<LieType, WeylGroup> {
    static MEMO: OnceLock<Memo<LieType, WeylGroup>> = OnceLock::new();
    MEMO.get_or_init(Memo::new)
}

impl WeylGroup {
    /// Shared, cached group of the given type.
    pub fn get(ty: LieType) -> Result<Arc<WeylGroup>> {
        group_memo().get_or_try_insert(&ty, || WeylGroup::build(ty))
    }

    /// Enumerates the group.
    pub fn build(ty: LieType) -> Result<WeylGroup> {
        let order = group_order(ty);
        if order > MAX_GROUP_ORDER {
            return Err(Error::RankBound { rank: ty.rank(), bound: max_rank_for(ty.family()) });
        }
        let r = ty.rank() as usize;
        let gens: Vec<WeylElement> = (0..r).map(|i| WeylElement::generator(ty, i).unwrap()).collect();
        let id = WeylElement::identity(ty);
        let mut seen: HashMap<Vec<i32>, ()> = HashMap::new();
        seen.insert(id.one_line.clone(), ());
        let mut queue = VecDeque::from([id]);
        let mut all = Vec::new();
        while let Some(w) = queue.pop_front() {
            for s in &gens {
                let ws = w.compose(s).unwrap();
                if seen.insert(ws.one_line.clone(), ()).is_none() {
                    queue.push_back(ws);
                }
            }
            all.push(w);
        }
        let mut keyed: Vec<(u32, Vec<i32>)> = all.iter().map(|w| (w.length(), w.one_line.clone())).collect();
        keyed.sort();
        let elements: Vec<Vec<i32>> = keyed.iter().map(|(_, v)| v.clone()).collect();
        let lengths: Vec<u32> = keyed.iter().map(|(l, _)| *l).collect();
        let index: HashMap<Vec<i32>, u32> = elements.iter().enumerate().map(|(i, v)| (v.clone(), i as u32)).collect();
        let lookup = |v: &WeylElement| index[&v.one_line];
        let as_elem = |v: &Vec<i32>| WeylElement { ty, one_line: v.clone() };
        let right: Vec<Vec<u32>> = gens
            .iter()
            .map(|s| elements.iter().map(|v| lookup(&as_elem(v).compose(s).unwrap())).collect())
            .collect();
        let left: Vec<Vec<u32>> = gens
            .iter()
            .map(|s| elements.iter().map(|v| lookup(&s.compose(&as_elem(v)).unwrap())).collect())
            .collect();
        let inverse: Vec<u32> = elements.iter().map(|v| lookup(&as_elem(v).inverse())).collect();
        let desc_mask = |table: &Vec<Vec<u32>>, w: usize| -> u32 {
            (0..r).filter(|&s| lengths[table[s][w] as usize] < lengths[w]).fold(0, |m, s| m | (1 << s))
        };
        let right_descents = (0..elements.len()).map(|w| desc_mask(&right, w)).collect();
        let left_descents = (0..elements.len()).map(|w| desc_mask(&left, w)).collect();
        Ok(WeylGroup {
            ty,
            elements,
            index,
            lengths,
            right,
            left,
            inverse,
            right_descents,
            left_descents,
            bruhat: OnceLock::new(),
        })
    }

    pub fn lie_type(&self) -> LieType {
        self.ty
    }

    pub fn rank(&self) -> usize {
        self.ty.rank() as usize
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn identity(&self) -> u32 {
        0
    }

    pub fn longest(&self) -> u32 {
        self.elements.len() as u32 - 1
    }

    pub fn element(&self, id: u32) -> WeylElement {
        WeylElement { ty: self.ty, one_line: self.elements[id as usize].clone() }
    }

    pub fn id_of(&self, w: &WeylElement) -> Result<u32> {
        if w.ty != self.ty {
            return Err(Error::GroupMismatch(w.ty.to_string(), self.ty.to_string()));
        }
        self.index
            .get(&w.one_line)
            .copied()
            .ok_or_else(|| Error::InvalidElement(format!("{w} is not in {}", self.ty)))
    }

    pub fn length(&self, id: u32) -> u32 {
        self.lengths[id as usize]
    }

    /// `w · s`.
    pub fn right_mul(&self, id: u32, s: usize) -> u32 {
        self.right[s][id as usize]
    }

    /// `s · w`.
    pub fn left_mul(&self, s: usize, id: u32) -> u32 {
        self.left[s][id as usize]
    }

    pub fn inverse(&self, id: u32) -> u32 {
        self.inverse[id as usize]
    }

    pub fn multiply(&self, x: u32, y: u32) -> u32 {
        self.reduced_word(y).into_iter().fold(x, |acc, s| self.right_mul(acc, s))
    }

    /// Right descent set as a bitmask over zero-based generator indices.
    pub fn right_descent_mask(&self, id: u32) -> u32 {
        self.right_descents[id as usize]
    }

    pub fn left_descent_mask(&self, id: u32) -> u32 {
        self.left_descents[id as usize]
    }

    pub fn descents_right(&self, id: u32) -> Vec<usize> {
        mask_to_vec(self.right_descent_mask(id))
    }

    pub fn descents_left(&self, id: u32) -> Vec<usize> {
        mask_to_vec(self.left_descent_mask(id))
    }

    /// A reduced word `s_{i_1} ⋯ s_{i_k}` for `w`, zero-based indices.
    pub fn reduced_word(&self, id: u32) -> Vec<usize> {
        let mut w = id;
        let mut word = Vec::with_capacity(self.length(id) as usize);
        while w != 0 {
            let s = self.right_descent_mask(w).trailing_zeros() as usize;
            word.push(s);
            w = self.right_mul(w, s);
        }
        word.reverse();
        word
    }

    /// Product of generators in the given order.
    pub fn from_word(&self, word: &[usize]) -> Result<u32> {
        word.iter().try_fold(0u32, |acc, &s| {
            if s >= self.rank() {
                Err(Error::InvalidGenerators(format!("s{} does not exist in {}", s + 1, self.ty)))
            } else {
                Ok(self.right_mul(acc, s))
            }
        })
    }

    /// `x ≤ w` in the Bruhat order, by descending along right descents of
    /// `w` (lifting property).
    pub fn bruhat_leq(&self, mut x: u32, mut w: u32) -> bool {
        loop {
            if self.length(x) > self.length(w) {
                return false;
            }
            if w == 0 {
                return x == 0;
            }
            if let Some(table) = self.bruhat.get() {
                return table[w as usize].contains(x as usize);
            }
            let s = self.right_descent_mask(w).trailing_zeros() as usize;
            let xs = self.right_mul(x, s);
            if self.length(xs) < self.length(x) {
                x = xs;
            }
            w = self.right_mul(w, s);
        }
    }

    /// Bruhat lower sets `{x : x ≤ w}` for every `w`, built once.
    pub fn bruhat_table(&self) -> &[FixedBitSet] {
        self.bruhat.get_or_init(|| bruhat_lower_sets(self))
    }

    /// Minimal length representatives of `W / W_J`: no right descent in `J`.
    pub fn coset_min_reps(&self, j: &[usize]) -> Result<Vec<u32>> {
        let mask = self.generator_mask(j)?;
        Ok((0..self.order() as u32).filter(|&w| self.right_descent_mask(w) & mask == 0).collect())
    }

    /// Elements of the parabolic subgroup `W_J`.
    pub fn parabolic_subgroup(&self, j: &[usize]) -> Result<Vec<u32>> {
        let mask = self.generator_mask(j)?;
        Ok((0..self.order() as u32)
            .filter(|&w| self.reduced_word(w).iter().all(|&s| mask & (1 << s) != 0))
            .collect())
    }

    pub fn generator_mask(&self, j: &[usize]) -> Result<u32> {
        j.iter().try_fold(0u32, |m, &s| {
            if s >= self.rank() {
                Err(Error::InvalidGenerators(format!("s{} does not exist in {}", s + 1, self.ty)))
            } else {
                Ok(m | (1 << s))
            }
        })
    }

    /// Coxeter matrix `m_ij`, the order of `s_i s_j`.
    pub fn coxeter_matrix(&self) -> Vec<Vec<u32>> {
        let r = self.rank();
        (0..r)
            .map(|i| {
                (0..r)
                    .map(|j| {
                        let mut w = 0u32;
                        let mut k = 0;
                        loop {
                            w = self.right_mul(self.right_mul(w, i), j);
                            k += 1;
                            if w == 0 {
                                break k;
                            }
                        }
                    })
                    .collect()
            })
            .collect()
    }

    /// Parses `e`, `w0`, `[2,-1,3]` or a word such as `s1s2` / `s1 s2`.
    pub fn parse_element(&self, s: &str) -> Result<u32> {
        let t = s.trim();
        match t {
            "e" | "1" | "id" => return Ok(0),
            "w0" => return Ok(self.longest()),
            _ => {}
        }
        if t.starts_with('[') {
            let w: WeylElement = parse_one_line(self.ty, t)?;
            return self.id_of(&w);
        }
        let word = parse_word(t)?;
        self.from_word(&word)
    }

    pub fn format_word(&self, id: u32) -> String {
        if id == 0 {
            return "e".to_string();
        }
        self.reduced_word(id).iter().map(|s| format!("s{}", s + 1)).collect()
    }
}

/// Interned finite Coxeter group: ids are ordered by length, id 0 is the
/// identity and the last id is the longest element.
pub trait Coxeter {
    fn rank(&self) -> usize;
    fn order(&self) -> usize;
    fn length(&self, id: u32) -> u32;
    /// `w · s`.
    fn right_mul(&self, id: u32, s: usize) -> u32;
    /// `s · w`.
    fn left_mul(&self, s: usize, id: u32) -> u32;
    fn inverse(&self, id: u32) -> u32;
    fn bruhat_table(&self) -> &[FixedBitSet];
    fn name(&self) -> String;

    fn longest(&self) -> u32 {
        self.order() as u32 - 1
    }

    fn right_descent_mask(&self, id: u32) -> u32 {
        (0..self.rank())
            .filter(|&s| self.length(self.right_mul(id, s)) < self.length(id))
            .fold(0, |m, s| m | (1 << s))
    }

    fn left_descent_mask(&self, id: u32) -> u32 {
        (0..self.rank())
            .filter(|&s| self.length(self.left_mul(s, id)) < self.length(id))
            .fold(0, |m, s| m | (1 << s))
    }

    fn reduced_word(&self, id: u32) -> Vec<usize> {
        let mut w = id;
        let mut word = Vec::new();
        while w != 0 {
            let s = self.right_descent_mask(w).trailing_zeros() as usize;
            word.push(s);
            w = self.right_mul(w, s);
        }
        word.reverse();
        word
    }

    /// `x · y`.
    fn multiply(&self, x: u32, y: u32) -> u32 {
        self.reduced_word(y).into_iter().fold(x, |acc, s| self.right_mul(acc, s))
    }

    fn bruhat_leq(&self, x: u32, w: u32) -> bool {
        self.bruhat_table()[w as usize].contains(x as usize)
    }
}

/// Lower Bruhat sets, from `{x ≤ w} = {x ≤ ws} ∪ {x ≤ ws}·s` for a right
/// descent `s` of `w`.
pub fn bruhat_lower_sets<G: Coxeter + ?Sized>(g: &G) -> Vec<FixedBitSet> {
    let n = g.order();
    let mut table: Vec<FixedBitSet> = Vec::with_capacity(n);
    let mut base = FixedBitSet::with_capacity(n);
    base.insert(0);
    table.push(base);
    for w in 1..n as u32 {
        let s = g.right_descent_mask(w).trailing_zeros() as usize;
        let v = g.right_mul(w, s) as usize;
        let mut set = table[v].clone();
        for x in table[v].ones() {
            set.insert(g.right_mul(x as u32, s) as usize);
        }
        table.push(set);
    }
    table
}

impl Coxeter for WeylGroup {
    fn rank(&self) -> usize {
        WeylGroup::rank(self)
    }
    fn order(&self) -> usize {
        WeylGroup::order(self)
    }
    fn length(&self, id: u32) -> u32 {
        WeylGroup::length(self, id)
    }
    fn right_mul(&self, id: u32, s: usize) -> u32 {
        WeylGroup::right_mul(self, id, s)
    }
    fn left_mul(&self, s: usize, id: u32) -> u32 {
        WeylGroup::left_mul(self, s, id)
    }
    fn inverse(&self, id: u32) -> u32 {
        WeylGroup::inverse(self, id)
    }
    fn bruhat_table(&self) -> &[FixedBitSet] {
        WeylGroup::bruhat_table(self)
    }
    fn name(&self) -> String {
        self.ty.to_string()
    }
    fn right_descent_mask(&self, id: u32) -> u32 {
        WeylGroup::right_descent_mask(self, id)
    }
    fn left_descent_mask(&self, id: u32) -> u32 {
        WeylGroup::left_descent_mask(self, id)
    }
    fn bruhat_leq(&self, x: u32, w: u32) -> bool {
        WeylGroup::bruhat_leq(self, x, w)
    }
}

/// The dihedral group `I₂(m)` of order `2m` (`m = 2`: `A₁×A₁`, `3`: `A₂`,
/// `4`: `B₂`, `6`: `G₂`).
///
/// Id `2k−1` is the alternating word of length `k` starting with `s₁`,
/// id `2k` the one starting with `s₂`; the longest element is id `2m−1`.
#[derive(Debug)]
pub struct DihedralGroup {
    m: u32,
    bruhat: OnceLock<Vec<FixedBitSet>>,
}

impl DihedralGroup {
    pub fn new(m: u32) -> Result<Self> {
        if m < 2 {
            return Err(Error::InvalidGroupData(format!("dihedral order parameter {m} < 2")));
        }
        Ok(DihedralGroup { m, bruhat: OnceLock::new() })
    }

    pub fn m(&self) -> u32 {
        self.m
    }

    /// `(length, first letter)`.
    fn decode(&self, id: u32) -> (u32, usize) {
        if id == 0 {
            (0, 0)
        } else if id == 2 * self.m - 1 {
            (self.m, 0)
        } else {
            ((id + 1) / 2, ((id + 1) % 2) as usize)
        }
    }

    fn encode(&self, len: u32, first: usize) -> u32 {
        match len {
            0 => 0,
            l if l == self.m => 2 * self.m - 1,
            l => 2 * l - 1 + first as u32,
        }
    }

    fn word(&self, id: u32) -> Vec<usize> {
        let (len, first) = self.decode(id);
        (0..len as usize).map(|i| (first + i) % 2).collect()
    }

    fn from_reduced(&self, word: &[usize]) -> u32 {
        self.encode(word.len() as u32, word.first().copied().unwrap_or(0))
    }
}

impl Coxeter for DihedralGroup {
    fn rank(&self) -> usize {
        2
    }
    fn order(&self) -> usize {
        2 * self.m as usize
    }
    fn length(&self, id: u32) -> u32 {
        self.decode(id).0
    }
    fn right_mul(&self, id: u32, s: usize) -> u32 {
        let mut word = self.word(id);
        if word.len() as u32 == self.m {
            // w0 = u·s with u the word of length m−1 not ending in s
            let first = if (self.m - 1) % 2 == 1 { 1 - s } else { s };
            return self.encode(self.m - 1, first);
        }
        if word.last() == Some(&s) {
            word.pop();
        } else {
            word.push(s);
        }
        self.from_reduced(&word)
    }
    fn left_mul(&self, s: usize, id: u32) -> u32 {
        self.inverse(self.right_mul(self.inverse(id), s))
    }
    fn inverse(&self, id: u32) -> u32 {
        let mut word = self.word(id);
        word.reverse();
        if word.len() as u32 == self.m {
            return id;
        }
        self.from_reduced(&word)
    }
    fn bruhat_table(&self) -> &[FixedBitSet] {
        self.bruhat.get_or_init(|| bruhat_lower_sets(self))
    }
    fn name(&self) -> String {
        format!("I2({})", self.m)
    }
}

fn max_rank_for(family: Family) -> u32 {
    match family {
        Family::A => 7,
        Family::B | Family::C => 6,
        Family::D => 7,
    }
}

fn mask_to_vec(mask: u32) -> Vec<usize> {
    (0..32).filter(|s| mask & (1 << s) != 0).collect()
}

fn parse_one_line(ty: LieType, t: &str) -> Result<WeylElement> {
    let inner = t.trim().trim_start_matches('[').trim_end_matches(']');
    let entries = inner
        .split(',')
        .map(str::trim)
        .filter(|x| !x.is_empty())
        .map(|x| x.parse::<i32>().map_err(|_| Error::Parse(format!("bad entry {x:?} in {t:?}"))))
        .collect::<Result<Vec<_>>>()?;
    WeylElement::new(ty, entries)
}

/// Parses `s1s2`, `s1 s2` or `s1*s2` into zero-based generator indices.
pub fn parse_word(t: &str) -> Result<Vec<usize>> {
    let cleaned: String = t.chars().filter(|c| !c.is_whitespace() && *c != '*' && *c != '.').collect();
    let mut word = Vec::new();
    for piece in cleaned.split('s').skip(1) {
        let k: usize = piece.parse().map_err(|_| Error::Parse(format!("bad generator in {t:?}")))?;
        if k == 0 {
            return Err(Error::Parse("generators are numbered from s1".into()));
        }
        word.push(k - 1);
    }
    if !cleaned.starts_with('s') || word.is_empty() {
        return Err(Error::Parse(format!("cannot parse Weyl group element {t:?}")));
    }
    Ok(word)
}

impl FromStr for WeylElement {
    type Err = Error;
    /// `A2:[2,1,3]`.
    fn from_str(s: &str) -> Result<Self> {
        let (ty, rest) = s
            .split_once(':')
            .ok_or_else(|| Error::Parse(format!("expected TYPE:[...], got {s:?}")))?;
        parse_one_line(ty.parse()?, rest)
    }
}

/// `x ≤ w` in the Bruhat order; errors when the types differ.
pub fn bruhat_leq(x: &WeylElement, w: &WeylElement) -> Result<bool> {
    if x.ty != w.ty {
        return Err(Error::GroupMismatch(x.ty.to_string(), w.ty.to_string()));
    }
    let g = WeylGroup::get(x.ty)?;
    Ok(g.bruhat_leq(g.id_of(x)?, g.id_of(w)?))
}
