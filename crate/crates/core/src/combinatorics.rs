//! Compositions, partitions, refinement orders and p-equivalence.
//!
//! Both types compare lexicographically on their part sequences, and every
//! enumeration here returns ascending lexicographic order.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::field::Characteristic;

/// An ordered sequence of positive integers. The empty composition is the
/// unique composition of 0.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Composition(Vec<usize>);

/// A weakly decreasing sequence of positive integers.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Partition(Vec<usize>);

impl Composition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(Error::InvalidComposition(parts));
        }
        Ok(Composition(parts))
    }

    /// The one-part composition `(n)`, or the empty composition for `n = 0`.
    pub fn top(n: usize) -> Self {
        if n == 0 {
            Composition(vec![])
        } else {
            Composition(vec![n])
        }
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn n(&self) -> usize {
        self.0.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Partial sums `q1, q1+q2, ...` strictly below `n`, encoded as bit
    /// `k-1` for the partial sum `k`.
    pub fn to_mask(&self) -> u32 {
        let mut mask = 0u32;
        let mut acc = 0;
        for &q in &self.0[..self.0.len().saturating_sub(1)] {
            acc += q;
            mask |= 1 << (acc - 1);
        }
        mask
    }

    /// Inverse of [`Composition::to_mask`].
    pub fn from_mask(n: usize, mask: u32) -> Self {
        if n == 0 {
            return Composition(vec![]);
        }
        let mut parts = Vec::new();
        let mut last = 0;
        for k in 1..n {
            if mask >> (k - 1) & 1 == 1 {
                parts.push(k - last);
                last = k;
            }
        }
        parts.push(n - last);
        Composition(parts)
    }

    /// Concatenation `self # other`.
    pub fn concat(&self, other: &Composition) -> Composition {
        let mut v = self.0.clone();
        v.extend_from_slice(&other.0);
        Composition(v)
    }

    /// Lexicographically smallest rearrangement (parts sorted increasingly).
    pub fn canonical_rearrangement(&self) -> Composition {
        let mut v = self.0.clone();
        v.sort_unstable();
        Composition(v)
    }
}

impl Partition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.contains(&0) || parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidPartition(parts));
        }
        Ok(Partition(parts))
    }

    /// Sorts arbitrary positive parts into a partition.
    pub fn from_parts(mut parts: Vec<usize>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(Error::InvalidPartition(parts));
        }
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Ok(Partition(parts))
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn n(&self) -> usize {
        self.0.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn as_composition(&self) -> Composition {
        Composition(self.0.clone())
    }

    /// Part value -> multiplicity.
    pub fn multiplicities(&self) -> BTreeMap<usize, usize> {
        let mut m = BTreeMap::new();
        for &x in &self.0 {
            *m.entry(x).or_insert(0) += 1;
        }
        m
    }

    /// No part value repeated `p` or more times.
    pub fn is_regular(&self, ch: Characteristic) -> bool {
        self.multiplicities()
            .values()
            .all(|&m| ch.allows_multiplicity(m))
    }

    /// Greatest common divisor of the parts (0 for the empty partition).
    pub fn gcd(&self) -> usize {
        self.0.iter().fold(0, |g, &x| num_integer::gcd(g, x))
    }
}

impl TryFrom<Vec<usize>> for Composition {
    type Error = Error;
    fn try_from(v: Vec<usize>) -> Result<Self> {
        Composition::new(v)
    }
}

impl From<Composition> for Vec<usize> {
    fn from(c: Composition) -> Self {
        c.0
    }
}

impl TryFrom<Vec<usize>> for Partition {
    type Error = Error;
    fn try_from(v: Vec<usize>) -> Result<Self> {
        Partition::new(v)
    }
}

impl From<Partition> for Vec<usize> {
    fn from(p: Partition) -> Self {
        p.0
    }
}

/// Compact label: digits run together when every part is below 10
/// ("2211"), otherwise comma separated ("10,2"). The empty sequence is "0".
fn compact(parts: &[usize]) -> String {
    if parts.is_empty() {
        "0".to_string()
    } else if parts.iter().all(|&x| x < 10) {
        parts.iter().map(|x| x.to_string()).collect()
    } else {
        parts
            .iter()
            .map(|x| x.to_string())
            .collect::<Vec<_>>()
            .join(",")
    }
}

fn parse_compact(s: &str) -> Result<Vec<usize>> {
    let s = s.trim().trim_start_matches('(').trim_end_matches(')');
    let bad = || Error::Parse(format!("cannot read parts from {s:?}"));
    if s == "0" || s.is_empty() {
        return Ok(vec![]);
    }
    if s.contains(',') || s.contains(' ') {
        s.split([',', ' '])
            .filter(|t| !t.is_empty())
            .map(|t| t.trim().parse::<usize>().map_err(|_| bad()))
            .collect()
    } else {
        s.chars()
            .map(|c| c.to_digit(10).map(|d| d as usize).ok_or_else(bad))
            .collect()
    }
}

impl fmt::Display for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&compact(&self.0))
    }
}

impl fmt::Debug for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "C{:?}", self.0)
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&compact(&self.0))
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "P{:?}", self.0)
    }
}

impl FromStr for Composition {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Composition::new(parse_compact(s)?)
    }
}

impl FromStr for Partition {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Partition::new(parse_compact(s)?)
    }
}

/// Shorthand used in tests: `comp(&[2, 1])`. Panics on a zero part.
pub fn comp(parts: &[usize]) -> Composition {
    Composition::new(parts.to_vec()).expect("positive parts")
}

/// Shorthand used in tests: `part(&[2, 1])`. Panics if not a partition.
pub fn part(parts: &[usize]) -> Partition {
    Partition::new(parts.to_vec()).expect("weakly decreasing positive parts")
}

/// All compositions of `n` in ascending lexicographic order.
pub fn compositions(n: usize) -> Vec<Composition> {
    fn rec(n: usize, prefix: &mut Vec<usize>, out: &mut Vec<Composition>) {
        if n == 0 {
            out.push(Composition(prefix.clone()));
            return;
        }
        for first in 1..=n {
            prefix.push(first);
            rec(n - first, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::with_capacity(if n == 0 { 1 } else { 1 << (n - 1) });
    rec(n, &mut Vec::new(), &mut out);
    out
}

/// All partitions of `n` in ascending lexicographic order.
pub fn partitions(n: usize) -> Vec<Partition> {
    fn rec(n: usize, max: usize, prefix: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if n == 0 {
            out.push(Partition(prefix.clone()));
            return;
        }
        for first in 1..=max.min(n) {
            prefix.push(first);
            rec(n - first, first, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, n, &mut Vec::new(), &mut out);
    out
}

/// The partitions of `n` whose part multiplicities are all below `p`
/// (all partitions in characteristic zero).
pub fn p_regular_partitions(n: usize, ch: Characteristic) -> Vec<Partition> {
    partitions(n)
        .into_iter()
        .filter(|l| l.is_regular(ch))
        .collect()
}

/// The partition `λ(q)` obtained by sorting the parts of `q`.
pub fn lambda_of(q: &Composition) -> Partition {
    let mut v = q.0.clone();
    v.sort_unstable_by(|a, b| b.cmp(a));
    Partition(v)
}

fn check_same_n(a: usize, b: usize) -> Result<()> {
    if a != b {
        return Err(Error::DegreeMismatch {
            expected: a,
            found: b,
        });
    }
    Ok(())
}

/// Consecutive blocks of `r` sum to the parts of `q`, in order.
pub fn refines(r: &Composition, q: &Composition) -> Result<bool> {
    check_same_n(q.n(), r.n())?;
    let mut it = r.0.iter();
    for &target in &q.0 {
        let mut acc = 0;
        while acc < target {
            match it.next() {
                Some(&x) => acc += x,
                None => return Ok(false),
            }
        }
        if acc != target {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Some rearrangement of `r` refines `q`: the parts of `r` can be split
/// into groups with sums `q_1, ..., q_k`.
pub fn weakly_refines(r: &Composition, q: &Composition) -> Result<bool> {
    check_same_n(q.n(), r.n())?;
    Ok(parts_fit(r.parts(), q.parts()))
}

/// Weak refinement on partitions, the order written `λ ≼ μ`.
pub fn partition_below(l: &Partition, m: &Partition) -> bool {
    l.n() == m.n() && parts_fit(l.parts(), m.parts())
}

// Can the multiset `items` be packed exactly into bins of the given sizes?
fn parts_fit(items: &[usize], bins: &[usize]) -> bool {
    let mut items = items.to_vec();
    items.sort_unstable_by(|a, b| b.cmp(a));
    let mut caps = bins.to_vec();
    fn rec(i: usize, items: &[usize], caps: &mut [usize]) -> bool {
        if i == items.len() {
            return caps.iter().all(|&c| c == 0);
        }
        let x = items[i];
        for j in 0..caps.len() {
            // bins with equal remaining capacity are interchangeable
            if caps[j] < x || caps[..j].contains(&caps[j]) {
                continue;
            }
            caps[j] -= x;
            let ok = rec(i + 1, items, caps);
            caps[j] += x;
            if ok {
                return true;
            }
        }
        false
    }
    rec(0, &items, &mut caps)
}

/// Canonical invariant of the p-equivalence class: a part `p^a m'` with
/// `p ∤ m'` contributes `p^a` parts equal to `m'`.
pub fn p_prime_type(l: &Partition, p: u64) -> Partition {
    let p = p as usize;
    let mut out = Vec::with_capacity(l.n());
    for &x in &l.0 {
        let mut m = x;
        let mut copies = 1;
        while m % p == 0 {
            m /= p;
            copies *= p;
        }
        out.extend(std::iter::repeat_n(m, copies));
    }
    out.sort_unstable_by(|a, b| b.cmp(a));
    Partition(out)
}

/// `λ ∼_p μ`; equality in characteristic zero.
pub fn p_equivalent(l: &Partition, m: &Partition, ch: Characteristic) -> bool {
    match ch {
        Characteristic::Zero => l == m,
        Characteristic::Prime(p) => p_prime_type(l, p as u64) == p_prime_type(m, p as u64),
    }
}

/// The unique p-regular partition p-equivalent to `λ`: repeatedly merge `p`
/// equal parts `m` into one part `p m`.
pub fn p_regularize(l: &Partition, ch: Characteristic) -> Partition {
    let Some(p) = ch.p() else {
        return l.clone();
    };
    let p = p as usize;
    let mut mult = l.multiplicities();
    loop {
        let Some((&m, &c)) = mult.iter().find(|(_, &c)| c >= p) else {
            break;
        };
        let merged = c / p;
        *mult.get_mut(&m).unwrap() = c % p;
        *mult.entry(m * p).or_insert(0) += merged;
    }
    let mut out = Vec::new();
    for (&m, &c) in mult.iter().rev() {
        out.extend(std::iter::repeat_n(m, c));
    }
    Partition(out)
}

/// `μ^{#s}`: the p-regular representative of the class of `μ` with an extra
/// part `s`.
pub fn concat_sharp(mu: &Partition, s: usize, ch: Characteristic) -> Partition {
    let mut v = mu.0.clone();
    if s > 0 {
        v.push(s);
    }
    v.sort_unstable_by(|a, b| b.cmp(a));
    p_regularize(&Partition(v), ch)
}

/// Parts of `q` with `s` removed from position `i`, dropping a zero part.
pub fn remove_from_part(q: &Composition, i: usize, s: usize) -> Composition {
    let mut v = q.0.clone();
    v[i] -= s;
    if v[i] == 0 {
        v.remove(i);
    }
    Composition(v)
}
