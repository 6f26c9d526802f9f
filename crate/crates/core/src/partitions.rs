//! Partition calculus for classical nilpotent orbits.
//!
//! A [`Partition`] is stored in canonical form: strictly positive parts in
//! weakly decreasing order, no trailing zeros. Operations that need padding
//! take the target length explicitly.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<u32>", into = "Vec<u32>")]
pub struct Partition {
    parts: Vec<u32>,
}

impl Partition {
    /// Builds a partition from parts that must already be weakly decreasing.
    /// Zeros are accepted only as a trailing run and are dropped.
    pub fn new(parts: Vec<u32>) -> Result<Self> {
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidPartition(format!("{parts:?} is not weakly decreasing")));
        }
        let mut parts = parts;
        while parts.last() == Some(&0) {
            parts.pop();
        }
        Ok(Partition { parts })
    }

    /// Sorts arbitrary nonnegative parts into a partition.
    pub fn from_unsorted(mut parts: Vec<u32>) -> Self {
        parts.sort_unstable_by(|a, b| b.cmp(a));
        while parts.last() == Some(&0) {
            parts.pop();
        }
        Partition { parts }
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    /// The single-row partition `(n)`.
    pub fn row(n: u32) -> Self {
        Partition::from_unsorted(vec![n])
    }

    /// The single-column partition `(1^n)`.
    pub fn column(n: u32) -> Self {
        Partition { parts: vec![1; n as usize] }
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn size(&self) -> u32 {
        self.parts.iter().sum()
    }

    /// Part `i` (zero-based), zero beyond the length.
    pub fn part(&self, i: usize) -> u32 {
        self.parts.get(i).copied().unwrap_or(0)
    }

    /// Parts padded with zeros to at least `len` entries.
    pub fn padded(&self, len: usize) -> Vec<u32> {
        let mut v = self.parts.clone();
        if v.len() < len {
            v.resize(len, 0);
        }
        v
    }

    /// Multiplicity of each distinct part, largest part first.
    pub fn multiplicities(&self) -> Vec<(u32, u32)> {
        let mut out: Vec<(u32, u32)> = Vec::new();
        for &p in &self.parts {
            match out.last_mut() {
                Some((q, m)) if *q == p => *m += 1,
                _ => out.push((p, 1)),
            }
        }
        out
    }

    pub fn multiplicity(&self, part: u32) -> u32 {
        self.parts.iter().filter(|&&p| p == part).count() as u32
    }

    pub fn transpose(&self) -> Partition {
        let width = self.part(0) as usize;
        let parts = (1..=width as u32)
            .map(|c| self.parts.iter().filter(|&&p| p >= c).count() as u32)
            .collect();
        Partition { parts }
    }

    /// Partial sums `p_1, p_1 + p_2, ...` padded to `len` entries.
    pub fn partial_sums(&self, len: usize) -> Vec<u32> {
        let mut acc = 0;
        self.padded(len)
            .into_iter()
            .map(|p| {
                acc += p;
                acc
            })
            .collect()
    }

    /// Exponent notation, e.g. `3^1,2^2`.
    pub fn to_exponent_string(&self) -> String {
        self.multiplicities()
            .iter()
            .map(|(p, m)| format!("{p}^{m}"))
            .collect::<Vec<_>>()
            .join(",")
    }

    pub fn sum_of_squares(&self) -> u64 {
        self.parts.iter().map(|&p| (p as u64) * (p as u64)).sum()
    }
}

impl TryFrom<Vec<u32>> for Partition {
    type Error = Error;
    fn try_from(parts: Vec<u32>) -> Result<Self> {
        Partition::new(parts)
    }
}

impl From<Partition> for Vec<u32> {
    fn from(p: Partition) -> Vec<u32> {
        p.parts
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.parts.iter().map(u32::to_string).collect();
        write!(f, "{}", s.join(","))
    }
}

impl FromStr for Partition {
    type Err = Error;

    /// Accepts `3,2,2`, `3 2 2` and exponent form `3^1,2^2`. An empty string
    /// or `0` is the empty partition.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim().trim_start_matches('(').trim_end_matches(')');
        let mut parts = Vec::new();
        for tok in s.split(|c: char| c == ',' || c.is_whitespace()).filter(|t| !t.is_empty()) {
            let bad = || Error::Parse(format!("bad partition token {tok:?}"));
            if let Some((base, exp)) = tok.split_once('^') {
                let base: u32 = base.trim().parse().map_err(|_| bad())?;
                let exp: usize = exp.trim().parse().map_err(|_| bad())?;
                parts.extend(std::iter::repeat(base).take(exp));
            } else {
                parts.push(tok.parse().map_err(|_| bad())?);
            }
        }
        Partition::new(parts)
    }
}

/// Family of a classical Lie algebra.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Family {
    A,
    B,
    C,
    D,
}

impl Family {
    pub fn letter(self) -> char {
        match self {
            Family::A => 'A',
            Family::B => 'B',
            Family::C => 'C',
            Family::D => 'D',
        }
    }

    pub fn from_letter(c: char) -> Result<Self> {
        match c.to_ascii_uppercase() {
            'A' => Ok(Family::A),
            'B' => Ok(Family::B),
            'C' => Ok(Family::C),
            'D' => Ok(Family::D),
            _ => Err(Error::Parse(format!("unknown family {c:?}"))),
        }
    }

    /// Multiplicity rule for this family, ignoring the total size.
    ///
    /// B and D: every even part occurs with even multiplicity.
    /// C: every odd part occurs with even multiplicity.
    pub fn multiplicity_rule_holds(self, p: &Partition) -> bool {
        let bad_parity = match self {
            Family::A => return true,
            Family::B | Family::D => 0,
            Family::C => 1,
        };
        p.multiplicities()
            .iter()
            .all(|&(part, mult)| part % 2 != bad_parity || mult % 2 == 0)
    }

    /// Whether a partition of any size labels an orbit in the matching
    /// classical algebra of that natural dimension (so_N for B/D with N odd /
    /// even, sp_N, gl_N).
    pub fn admits(self, p: &Partition) -> bool {
        let n = p.size();
        let size_ok = match self {
            Family::A => true,
            Family::B => n % 2 == 1,
            Family::C | Family::D => n % 2 == 0,
        };
        size_ok && self.multiplicity_rule_holds(p)
    }

    /// Family whose multiplicity rule the transpose of a special partition
    /// satisfies.
    fn special_transpose_rule(self) -> Family {
        match self {
            Family::A => Family::A,
            Family::B => Family::B,
            Family::C | Family::D => Family::C,
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.letter())
    }
}

/// A classical Lie type: `A(n-1)` is gl_n / sl_n, `B(n)` is so_{2n+1},
/// `C(n)` is sp_{2n}, `D(n)` is so_{2n}.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(try_from = "String", into = "String")]
pub struct LieType {
    family: Family,
    rank: u32,
}

impl LieType {
    pub fn new(family: Family, rank: u32) -> Result<Self> {
        let min = if family == Family::D { 2 } else { 1 };
        if rank < min {
            return Err(Error::InvalidLieType(format!("{family}{rank}: rank must be at least {min}")));
        }
        Ok(LieType { family, rank })
    }

    pub fn a(rank: u32) -> Self {
        LieType::new(Family::A, rank).unwrap()
    }
    pub fn b(rank: u32) -> Self {
        LieType::new(Family::B, rank).unwrap()
    }
    pub fn c(rank: u32) -> Self {
        LieType::new(Family::C, rank).unwrap()
    }
    pub fn d(rank: u32) -> Self {
        LieType::new(Family::D, rank).unwrap()
    }

    pub fn family(self) -> Family {
        self.family
    }

    pub fn rank(self) -> u32 {
        self.rank
    }

    /// Dimension of the natural representation (size of the partitions).
    pub fn natural_dim(self) -> u32 {
        match self.family {
            Family::A => self.rank + 1,
            Family::B => 2 * self.rank + 1,
            Family::C | Family::D => 2 * self.rank,
        }
    }

    /// Dimension of the Lie algebra; type A counts sl_n.
    pub fn algebra_dim(self) -> u64 {
        let n = self.natural_dim() as u64;
        match self.family {
            Family::A => n * n - 1,
            Family::B | Family::D => n * (n - 1) / 2,
            Family::C => n * (n + 1) / 2,
        }
    }

    /// Langlands dual type.
    pub fn dual(self) -> LieType {
        let family = match self.family {
            Family::B => Family::C,
            Family::C => Family::B,
            f => f,
        };
        LieType { family, rank: self.rank }
    }

    /// The type whose natural representation has dimension `n` in this
    /// family, if there is one.
    pub fn from_natural_dim(family: Family, n: u32) -> Result<Self> {
        let rank = match family {
            Family::A => n.checked_sub(1),
            Family::B => (n % 2 == 1).then(|| (n - 1) / 2),
            Family::C | Family::D => (n % 2 == 0).then_some(n / 2),
        };
        rank.map_or_else(
            || Err(Error::InvalidLieType(format!("no {family} type with natural dimension {n}"))),
            |r| LieType::new(family, r),
        )
    }
}

impl fmt::Display for LieType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.family, self.rank)
    }
}

impl FromStr for LieType {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let mut chars = s.chars();
        let letter = chars.next().ok_or_else(|| Error::Parse("empty Lie type".into()))?;
        let family = Family::from_letter(letter)?;
        let rank: u32 = chars
            .as_str()
            .parse()
            .map_err(|_| Error::Parse(format!("bad rank in Lie type {s:?}")))?;
        LieType::new(family, rank)
    }
}

impl TryFrom<String> for LieType {
    type Error = Error;
    fn try_from(s: String) -> Result<Self> {
        s.parse()
    }
}

impl From<LieType> for String {
    fn from(t: LieType) -> String {
        t.to_string()
    }
}

fn check_size(p: &Partition, t: LieType) -> Result<()> {
    if p.size() != t.natural_dim() {
        return Err(Error::SizeMismatch { left: p.size(), right: t.natural_dim() });
    }
    Ok(())
}

/// `p <= q` in the dominance order. Comparing partitions of different sizes
/// is an error.
pub fn dominance_leq(p: &Partition, q: &Partition) -> Result<bool> {
    if p.size() != q.size() {
        return Err(Error::SizeMismatch { left: p.size(), right: q.size() });
    }
    let len = p.len().max(q.len());
    Ok(p.partial_sums(len).iter().zip(q.partial_sums(len)).all(|(a, b)| *a <= b))
}

/// Whether `p` labels a nilpotent orbit of type `t`.
pub fn is_type(p: &Partition, t: LieType) -> Result<bool> {
    check_size(p, t)?;
    Ok(t.family().admits(p))
}

/// Dominance-largest partition of the family's type below `p`.
///
/// Repairs parity violations greedily: take the largest part `q` of the bad
/// parity with odd multiplicity, lower its last occurrence by one and raise
/// the first later part smaller than `q - 1` by one. Repeats until the
/// multiplicity rule holds.
pub fn collapse_family(p: &Partition, family: Family) -> Partition {
    let bad_parity = match family {
        Family::A => return p.clone(),
        Family::B | Family::D => 0,
        Family::C => 1,
    };
    let mut parts = p.parts.clone();
    loop {
        let current = Partition { parts: parts.clone() };
        let offender = current
            .multiplicities()
            .into_iter()
            .find(|&(q, m)| q % 2 == bad_parity && m % 2 == 1)
            .map(|(q, _)| q);
        let Some(q) = offender else { break };
        let last = parts.iter().rposition(|&x| x == q).expect("part present");
        parts[last] -= 1;
        match parts.iter().skip(last + 1).position(|&x| x + 1 < q) {
            Some(off) => parts[last + 1 + off] += 1,
            None => parts.push(1),
        }
        while parts.last() == Some(&0) {
            parts.pop();
        }
    }
    Partition { parts }
}

/// Collapse for a full Lie type, with size validation.
pub fn collapse(p: &Partition, t: LieType) -> Result<Partition> {
    check_size(p, t)?;
    Ok(collapse_family(p, t.family()))
}

/// Special-orbit test by the transpose rule: B needs `p^t` of type B, C needs
/// `p^t` of type C, D needs `p^t` of type C. Every type A orbit is special.
pub fn is_special(p: &Partition, t: LieType) -> Result<bool> {
    if !is_type(p, t)? {
        return Err(Error::WrongType { partition: p.to_string(), ty: t.to_string() });
    }
    Ok(is_special_family(p, t.family()))
}

pub(crate) fn is_special_family(p: &Partition, family: Family) -> bool {
    family.special_transpose_rule().multiplicity_rule_holds(&p.transpose())
}

/// Partitions reachable from `p` by moving one box from a row to a lower
/// row, keeping the shape a partition. Sorted in decreasing lexicographic
/// order.
pub fn dominance_covers_below(p: &Partition) -> Vec<Partition> {
    let mut out = Vec::new();
    let len = p.len();
    for from in 0..len {
        for to in from + 1..=len {
            let mut parts = p.padded(len + 1);
            parts[from] -= 1;
            parts[to] += 1;
            if let Ok(q) = Partition::new(parts) {
                if !out.contains(&q) {
                    out.push(q);
                }
            }
        }
    }
    out.sort_by(|a, b| b.cmp(a));
    out
}

/// All partitions of `n`, in decreasing lexicographic order.
pub fn all_partitions(n: u32) -> Vec<Partition> {
    fn rec(remaining: u32, max: u32, prefix: &mut Vec<u32>, out: &mut Vec<Partition>) {
        if remaining == 0 {
            out.push(Partition { parts: prefix.clone() });
            return;
        }
        for first in (1..=max.min(remaining)).rev() {
            prefix.push(first);
            rec(remaining - first, first, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, n, &mut Vec::new(), &mut out);
    out
}

/// All partitions labelling orbits of type `t`.
pub fn partitions_of_type(t: LieType) -> Vec<Partition> {
    all_partitions(t.natural_dim())
        .into_iter()
        .filter(|p| t.family().admits(p))
        .collect()
}

/// Count of each distinct part as an ordered map, smallest part first.
pub fn part_counts(p: &Partition) -> BTreeMap<u32, u32> {
    let mut m = BTreeMap::new();
    for &x in p.parts() {
        *m.entry(x).or_insert(0) += 1;
    }
    m
}
