//! Independent check of the structure constants through explicit sums of
//! permutations in the group algebra of `S_n`, for `n <= 6`.
//!
//! `Ξ^q` is realized as the sum of the permutations whose descent set is
//! contained in the partial-sum set of `q`. Two conventions are left open
//! (descents of `σ` or of `σ^{-1}`, and the order in which permutations
//! compose); [`calibrate`] picks the one reproducing the contingency-table
//! constants at `n = 3`.

use std::collections::{BTreeMap, HashMap};

use crate::algebra::structure_constants;
use crate::combinatorics::{compositions, Composition};
use crate::error::{Error, Result};

pub const ORACLE_MAX_N: usize = 6;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Convention {
    /// Use `Des(σ^{-1})` instead of `Des(σ)`.
    pub inverse_descents: bool,
    /// `(στ)(i) = τ(σ(i))`, i.e. apply `σ` first.
    pub left_to_right: bool,
}

impl Convention {
    pub fn all() -> [Convention; 4] {
        let mut out = [Convention {
            inverse_descents: false,
            left_to_right: false,
        }; 4];
        for (k, c) in out.iter_mut().enumerate() {
            c.left_to_right = k & 1 == 1;
            c.inverse_descents = k & 2 == 2;
        }
        out
    }
}

/// Multiplication in `Z S_n` restricted to the elements `Ξ^q`.
#[derive(Debug, Clone)]
pub struct GroupAlgebraOracle {
    n: usize,
    convention: Convention,
    // mul[a * size + b] = index of the product of permutations a and b
    mul: Vec<u16>,
    descents: Vec<u32>,
    size: usize,
}

fn permutations(n: usize) -> Vec<Vec<u8>> {
    fn rec(prefix: &mut Vec<u8>, used: &mut [bool], out: &mut Vec<Vec<u8>>) {
        if prefix.len() == used.len() {
            out.push(prefix.clone());
            return;
        }
        for v in 0..used.len() {
            if !used[v] {
                used[v] = true;
                prefix.push(v as u8);
                rec(prefix, used, out);
                prefix.pop();
                used[v] = false;
            }
        }
    }
    let mut out = Vec::new();
    rec(&mut Vec::new(), &mut vec![false; n], &mut out);
    out
}

fn descent_mask(p: &[u8]) -> u32 {
    let mut m = 0;
    for k in 0..p.len().saturating_sub(1) {
        if p[k] > p[k + 1] {
            m |= 1 << k;
        }
    }
    m
}

fn inverse(p: &[u8]) -> Vec<u8> {
    let mut inv = vec![0u8; p.len()];
    for (i, &v) in p.iter().enumerate() {
        inv[v as usize] = i as u8;
    }
    inv
}

impl GroupAlgebraOracle {
    pub fn new(n: usize, convention: Convention) -> Result<Self> {
        if n > ORACLE_MAX_N {
            return Err(Error::BoundExceeded {
                n,
                bound: ORACLE_MAX_N,
            });
        }
        let perms = permutations(n);
        let size = perms.len();
        let index: HashMap<&[u8], usize> =
            perms.iter().enumerate().map(|(i, p)| (p.as_slice(), i)).collect();
        let mut mul = vec![0u16; size * size];
        for (a, pa) in perms.iter().enumerate() {
            for (b, pb) in perms.iter().enumerate() {
                // right-to-left: (ab)(i) = a(b(i)); left-to-right: b(a(i))
                let prod: Vec<u8> = if convention.left_to_right {
                    pa.iter().map(|&i| pb[i as usize]).collect()
                } else {
                    pb.iter().map(|&i| pa[i as usize]).collect()
                };
                mul[a * size + b] = index[prod.as_slice()] as u16;
            }
        }
        let descents = perms
            .iter()
            .map(|p| {
                if convention.inverse_descents {
                    descent_mask(&inverse(p))
                } else {
                    descent_mask(p)
                }
            })
            .collect();
        Ok(GroupAlgebraOracle {
            n,
            convention,
            mul,
            descents,
            size,
        })
    }

    pub fn convention(&self) -> Convention {
        self.convention
    }

    /// Permutations (by index) in the support of `Ξ^q`.
    pub fn xi_support(&self, q: &Composition) -> Vec<usize> {
        let s = q.to_mask();
        (0..self.size).filter(|&i| self.descents[i] & !s == 0).collect()
    }

    /// `Ξ^r Ξ^q` expanded back into the `Ξ` basis; fails if the product is
    /// not constant on descent classes.
    pub fn product(&self, r: &Composition, q: &Composition) -> Result<BTreeMap<Composition, i64>> {
        if r.n() != self.n || q.n() != self.n {
            return Err(Error::DegreeMismatch {
                expected: self.n,
                found: if r.n() != self.n { r.n() } else { q.n() },
            });
        }
        let mut coef = vec![0i64; self.size];
        let qs = self.xi_support(q);
        for a in self.xi_support(r) {
            for &b in &qs {
                coef[self.mul[a * self.size + b] as usize] += 1;
            }
        }
        let classes = 1usize << self.n.saturating_sub(1);
        // g(D) = coefficient of any permutation with descent set D
        let mut g: Vec<Option<i64>> = vec![None; classes];
        for (i, &c) in coef.iter().enumerate() {
            let d = self.descents[i] as usize;
            match g[d] {
                None => g[d] = Some(c),
                Some(v) if v != c => {
                    return Err(Error::Oracle(format!(
                        "product {r} * {q} is not constant on descent class {d:b}"
                    )))
                }
                _ => {}
            }
        }
        // Möbius inversion on the subset lattice: c_S = Σ_{T ⊇ S} (-1)^{|T\S|} g(T)
        let mut out = BTreeMap::new();
        for s in 0..classes {
            let mut c = 0i64;
            for t in 0..classes {
                if t & s == s {
                    let sign = if (t ^ s).count_ones() % 2 == 0 { 1 } else { -1 };
                    c += sign * g[t].unwrap_or(0);
                }
            }
            if c != 0 {
                out.insert(Composition::from_mask(self.n, s as u32), c);
            }
        }
        Ok(out)
    }

    /// Whether `Ξ^{(n)}` is the identity permutation alone.
    pub fn top_is_identity(&self) -> bool {
        let top = self.xi_support(&Composition::top(self.n));
        top.len() == 1 && self.descents[top[0]] == 0 && top[0] == 0
    }
}

/// Conventions whose products agree with the contingency-table constants on
/// all pairs at `n = 3`.
pub fn matching_conventions() -> Vec<Convention> {
    Convention::all()
        .into_iter()
        .filter(|&c| {
            let Ok(o) = GroupAlgebraOracle::new(3, c) else {
                return false;
            };
            let cs = compositions(3);
            cs.iter().all(|r| {
                cs.iter().all(|q| {
                    let Ok(got) = o.product(r, q) else {
                        return false;
                    };
                    let want: BTreeMap<Composition, i64> = structure_constants(r, q)
                        .expect("same degree")
                        .into_iter()
                        .map(|(s, c)| (s, c as i64))
                        .collect();
                    got == want
                })
            })
        })
        .collect()
}

/// The first calibrated convention.
pub fn calibrate() -> Result<Convention> {
    matching_conventions()
        .into_iter()
        .next()
        .ok_or_else(|| Error::Oracle("no convention reproduces the n = 3 constants".into()))
}

/// A calibrated oracle for `D_n`, `n <= 6`.
pub fn group_algebra_oracle(n: usize) -> Result<GroupAlgebraOracle> {
    GroupAlgebraOracle::new(n, calibrate()?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinatorics::comp;

    #[test]
    fn calibration_finds_a_convention() {
        let found = matching_conventions();
        assert!(!found.is_empty());
        let o = group_algebra_oracle(3).unwrap();
        assert!(o.top_is_identity());
    }

    #[test]
    fn n2_square() {
        let o = group_algebra_oracle(2).unwrap();
        assert_eq!(o.xi_support(&comp(&[1, 1])).len(), 2);
        let sq = o.product(&comp(&[1, 1]), &comp(&[1, 1])).unwrap();
        assert_eq!(sq, BTreeMap::from([(comp(&[1, 1]), 2)]));
    }

    #[test]
    fn rejects_large_n() {
        assert!(group_algebra_oracle(7).is_err());
    }
}
