//! The scalar type: arbitrary-precision rationals, stored reduced.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use std::cmp::Ordering;

/// Exact rational scalar. `num`'s `BigRational` keeps the invariants we
/// need (reduced fraction, positive denominator), so it backs the type
/// directly. Serialized everywhere as `p/q` (or plain `p`).
pub type Rat = BigRational;

pub fn rat(n: i64, d: i64) -> Rat {
    Rat::new(BigInt::from(n), BigInt::from(d))
}

pub fn rat_i(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

pub fn zero() -> Rat {
    Rat::zero()
}

pub fn one() -> Rat {
    Rat::one()
}

/// Parse a rational from a `p/q` or integer string.
pub fn parse_rat(s: &str) -> Option<Rat> {
    let t = s.trim();
    t.parse::<Rat>().ok()
}

/// `p/q` string, `p` when the denominator is one.
pub fn format_rat(r: &Rat) -> String {
    r.to_string()
}

pub fn dot(a: &[Rat], b: &[Rat]) -> Rat {
    debug_assert_eq!(a.len(), b.len());
    let mut acc = Rat::zero();
    for (x, y) in a.iter().zip(b) {
        if !x.is_zero() && !y.is_zero() {
            acc += x * y;
        }
    }
    acc
}

pub fn scale(v: &[Rat], c: &Rat) -> Vec<Rat> {
    v.iter().map(|x| x * c).collect()
}

pub fn add(a: &[Rat], b: &[Rat]) -> Vec<Rat> {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

pub fn sub(a: &[Rat], b: &[Rat]) -> Vec<Rat> {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

pub fn neg(v: &[Rat]) -> Vec<Rat> {
    v.iter().map(|x| -x).collect()
}

pub fn is_zero_vec(v: &[Rat]) -> bool {
    v.iter().all(|x| x.is_zero())
}

pub fn zeros(n: usize) -> Vec<Rat> {
    vec![Rat::zero(); n]
}

/// Lexicographic order on rational vectors; the canonical sort used for
/// deterministic output everywhere.
pub fn lex_cmp(a: &[Rat], b: &[Rat]) -> Ordering {
    for (x, y) in a.iter().zip(b) {
        match x.cmp(y) {
            Ordering::Equal => continue,
            o => return o,
        }
    }
    a.len().cmp(&b.len())
}

/// Scale a nonzero vector so its entries' absolute values sum to one.
/// A canonical representative of the ray through `v`.
pub fn l1_normalize(v: &[Rat]) -> Vec<Rat> {
    let s: Rat = v.iter().map(|x| x.abs()).sum();
    debug_assert!(!s.is_zero());
    v.iter().map(|x| x / &s).collect()
}

pub fn l1_norm(v: &[Rat]) -> Rat {
    v.iter().map(|x| x.abs()).sum()
}
