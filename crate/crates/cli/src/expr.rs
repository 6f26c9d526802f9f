//! Weight expressions: letter forms such as `a - 2b + 1/2c` (the letters
//! name coordinates) or coordinate vectors such as `(1,0,-1)`.

use std::collections::BTreeMap;

use orbit_goldie::scalar::HalfInt;
use orbit_goldie::{Rational, Weight};

use crate::output::Failure;

#[derive(Clone, Debug, PartialEq)]
pub enum Expr {
    Letters(BTreeMap<usize, Rational>),
    Coords(Weight),
}

impl Expr {
    /// Number of coordinates the expression needs.
    pub fn min_dim(&self) -> usize {
        match self {
            Expr::Letters(m) => m.keys().next_back().map_or(0, |&k| k + 1),
            Expr::Coords(w) => w.dim(),
        }
    }

    pub fn to_weight(&self, dim: usize) -> Result<Weight, Failure> {
        match self {
            Expr::Coords(w) if w.dim() == dim => Ok(w.clone()),
            Expr::Coords(w) => Err(Failure::usage(format!("weight {w} has {} coordinates, expected {dim}", w.dim()))),
            Expr::Letters(m) => {
                let mut coords = vec![HalfInt::from_int(0); dim];
                for (&k, &c) in m {
                    coords[k] = HalfInt::from_rational(c).map_err(|e| Failure::usage(e.to_string()))?;
                }
                Ok(Weight(coords))
            }
        }
    }
}

fn parse_coefficient(s: &str) -> Result<Rational, Failure> {
    let bad = || Failure::usage(format!("bad coefficient {s:?}"));
    match s.split_once('/') {
        Some((n, d)) => {
            let n: i64 = n.parse().map_err(|_| bad())?;
            let d: i64 = d.parse().map_err(|_| bad())?;
            if d == 0 {
                return Err(bad());
            }
            Ok(Rational::new(n, d))
        }
        None => Ok(Rational::from_integer(s.parse().map_err(|_| bad())?)),
    }
}

/// Parses a single expression.
pub fn parse(s: &str) -> Result<Expr, Failure> {
    let s = s.trim();
    if s.starts_with('(') || s.contains(',') {
        return s.parse::<Weight>().map(Expr::Coords).map_err(|e| Failure::usage(e.to_string()));
    }
    let compact: String = s.chars().filter(|c| !c.is_whitespace() && *c != '*').collect();
    let mut terms: BTreeMap<usize, Rational> = BTreeMap::new();
    let mut rest = compact.as_str();
    while !rest.is_empty() {
        let (sign, body) = match rest.as_bytes()[0] {
            b'+' => (1, &rest[1..]),
            b'-' => (-1, &rest[1..]),
            _ => (1, rest),
        };
        let end = body.find(['+', '-']).unwrap_or(body.len());
        let term = &body[..end];
        rest = &body[end..];
        if term.is_empty() {
            return Err(Failure::usage(format!("empty term in {s:?}")));
        }
        let split = term.find(|c: char| c.is_ascii_alphabetic()).unwrap_or(term.len());
        let (coef, letter) = term.split_at(split);
        let coef = if coef.is_empty() { Rational::from_integer(1) } else { parse_coefficient(coef)? };
        let c = coef * Rational::from_integer(sign);
        match letter.as_bytes() {
            [] if c == Rational::from_integer(0) => {}
            [] => return Err(Failure::usage(format!("constant term {term:?} needs a letter"))),
            [l] if l.is_ascii_lowercase() => {
                *terms.entry((l - b'a') as usize).or_insert_with(|| Rational::from_integer(0)) += c;
            }
            _ => return Err(Failure::usage(format!("bad term {term:?}: use a single letter a-z"))),
        }
    }
    terms.retain(|_, c| *c != Rational::from_integer(0));
    Ok(Expr::Letters(terms))
}

/// Parses a list: coordinate vectors `(..),(..)` or comma separated letter
/// expressions.
pub fn parse_list(s: &str) -> Result<Vec<Expr>, Failure> {
    let s = s.trim();
    if s.is_empty() {
        return Ok(Vec::new());
    }
    if s.contains('(') {
        let mut out = Vec::new();
        let mut rest = s;
        while let Some(open) = rest.find('(') {
            let close = rest[open..].find(')').ok_or_else(|| Failure::usage(format!("unbalanced parentheses in {s:?}")))?;
            out.push(parse(&rest[open..=open + close])?);
            rest = &rest[open + close + 1..];
        }
        return Ok(out);
    }
    s.split(',').map(parse).collect()
}

/// Generator indices given 1-based, as `1,3` or `s1s3`.
pub fn parse_generators(s: &str) -> Result<Vec<usize>, Failure> {
    let s = s.trim();
    if s.is_empty() || s == "-" {
        return Ok(Vec::new());
    }
    let tokens: Vec<&str> = s.split(|c: char| c == ',' || c == 's' || c.is_whitespace()).filter(|t| !t.is_empty()).collect();
    let mut out = Vec::new();
    for t in tokens {
        let i: usize = t.parse().map_err(|_| Failure::usage(format!("bad generator {t:?}")))?;
        if i == 0 {
            return Err(Failure::usage("generators are numbered from 1".to_string()));
        }
        out.push(i - 1);
    }
    out.sort_unstable();
    out.dedup();
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn letter_expressions() {
        let e = parse(" -a").unwrap();
        assert_eq!(e.to_weight(1).unwrap(), Weight::from_ints(&[-1]));
        let e = parse("2a - b + 1/2c").unwrap();
        assert_eq!(e.min_dim(), 3);
        assert_eq!(e.to_weight(3).unwrap(), "(2,-1,1/2)".parse().unwrap());
        assert_eq!(parse("0").unwrap().to_weight(2).unwrap(), Weight::zero(2));
        assert!(parse("3").is_err());
        assert!(parse("1/3a").unwrap().to_weight(1).is_err());
    }

    #[test]
    fn lists_and_generators() {
        assert_eq!(parse_list("-a,-b,-a-b").unwrap().len(), 3);
        assert_eq!(parse_list("(-1,0),(0,-1)").unwrap().len(), 2);
        assert_eq!(parse_generators("1,3").unwrap(), vec![0, 2]);
        assert_eq!(parse_generators("s2").unwrap(), vec![1]);
        assert!(parse_generators("0").is_err());
    }
}
