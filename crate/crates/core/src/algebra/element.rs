use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use super::structure::{pair_constants, structure_table, TABLE_MAX_N};
use super::Algebra;
use crate::combinatorics::{compositions, Composition};
use crate::error::{Error, Result};
use crate::field::{Characteristic, Field};

/// A sparse element `Σ c_q Ξ^q` of `D_n(F)`. Zero coefficients are never
/// stored.
#[derive(Clone, PartialEq, Eq)]
pub struct DescentElement<F: Field> {
    n: usize,
    field: F,
    coeffs: BTreeMap<Composition, F::Elem>,
}

impl<F: Field> DescentElement<F> {
    pub fn zero(n: usize, field: &F) -> Self {
        DescentElement {
            n,
            field: field.clone(),
            coeffs: BTreeMap::new(),
        }
    }

    /// The basis element `Ξ^q`.
    pub fn xi(q: &Composition, field: &F) -> Self {
        let mut e = Self::zero(q.n(), field);
        e.coeffs.insert(q.clone(), field.one());
        e
    }

    /// The identity `Ξ^{(n)}`.
    pub fn identity(n: usize, field: &F) -> Self {
        Self::xi(&Composition::top(n), field)
    }

    pub fn from_terms<I>(n: usize, field: &F, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Composition, F::Elem)>,
    {
        let mut e = Self::zero(n, field);
        for (q, c) in terms {
            if q.n() != n {
                return Err(Error::DegreeMismatch {
                    expected: n,
                    found: q.n(),
                });
            }
            e.add_term(q, c);
        }
        Ok(e)
    }

    /// Integer combination, e.g. `from_ints(3, f, &[(&[2,1], 1), (&[1,2], -1)])`.
    pub fn from_ints(n: usize, field: &F, terms: &[(&[usize], i64)]) -> Result<Self> {
        let terms: Result<Vec<_>> = terms
            .iter()
            .map(|(q, c)| Ok((Composition::new(q.to_vec())?, field.from_i64(*c))))
            .collect();
        Self::from_terms(n, field, terms?)
    }

    pub fn from_dense(alg: &Algebra<F>, x: &[F::Elem]) -> Self {
        let mut e = Self::zero(alg.n(), alg.field());
        for (q, c) in alg.basis().iter().zip(x) {
            if !alg.field().is_zero(c) {
                e.coeffs.insert(q.clone(), c.clone());
            }
        }
        e
    }

    pub fn to_dense(&self, alg: &Algebra<F>) -> Vec<F::Elem> {
        let mut v = alg.zero_vec();
        for (q, c) in &self.coeffs {
            v[alg.index_of(q).expect("composition of n")] = c.clone();
        }
        v
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn field(&self) -> &F {
        &self.field
    }

    pub fn characteristic(&self) -> Characteristic {
        self.field.characteristic()
    }

    pub fn coeff(&self, q: &Composition) -> F::Elem {
        self.coeffs.get(q).cloned().unwrap_or_else(|| self.field.zero())
    }

    pub fn terms(&self) -> &BTreeMap<Composition, F::Elem> {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.coeffs.len()
    }

    fn add_term(&mut self, q: Composition, c: F::Elem) {
        let f = &self.field;
        let entry = self.coeffs.entry(q);
        match entry {
            std::collections::btree_map::Entry::Vacant(v) => {
                if !f.is_zero(&c) {
                    v.insert(c);
                }
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let s = f.add(o.get(), &c);
                if f.is_zero(&s) {
                    o.remove();
                } else {
                    *o.get_mut() = s;
                }
            }
        }
    }

    fn check(&self, other: &Self) -> Result<()> {
        if self.n != other.n {
            return Err(Error::DegreeMismatch {
                expected: self.n,
                found: other.n,
            });
        }
        if self.characteristic() != other.characteristic() {
            return Err(Error::FieldMismatch {
                left: self.characteristic(),
                right: other.characteristic(),
            });
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        let mut e = self.clone();
        for (q, c) in &other.coeffs {
            e.add_term(q.clone(), c.clone());
        }
        Ok(e)
    }

    pub fn neg(&self) -> Self {
        self.scale(&self.field.from_i64(-1))
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.neg())
    }

    pub fn scale(&self, c: &F::Elem) -> Self {
        let f = &self.field;
        let mut e = Self::zero(self.n, f);
        for (q, a) in &self.coeffs {
            e.add_term(q.clone(), f.mul(c, a));
        }
        e
    }

    /// The product `self · other`.
    pub fn multiply(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        let f = &self.field;
        let n = self.n;
        let mut acc: BTreeMap<u32, F::Elem> = BTreeMap::new();
        let mut push = |mask: u32, c: F::Elem| {
            let e = acc.entry(mask).or_insert_with(|| f.zero());
            *e = f.add(e, &c);
        };
        if n <= TABLE_MAX_N {
            let t = structure_table(n)?;
            for (r, a) in &self.coeffs {
                let i = t.index_of(r).expect("composition of n");
                for (q, b) in &other.coeffs {
                    let j = t.index_of(q).expect("composition of n");
                    let ab = f.mul(a, b);
                    for &(k, c) in t.product(i, j) {
                        let mask = t.basis()[k as usize].to_mask();
                        push(mask, f.mul(&ab, &f.from_u64(c as u64)));
                    }
                }
            }
        } else {
            for (r, a) in &self.coeffs {
                for (q, b) in &other.coeffs {
                    let ab = f.mul(a, b);
                    for &(m, c) in pair_constants(n, r.to_mask(), q.to_mask()).iter() {
                        push(m, f.mul(&ab, &f.from_u64(c as u64)));
                    }
                }
            }
        }
        let mut e = Self::zero(n, f);
        for (m, c) in acc {
            e.add_term(Composition::from_mask(n, m), c);
        }
        Ok(e)
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = Self::identity(self.n, &self.field);
        for _ in 0..k {
            acc = acc.multiply(self).expect("same algebra");
        }
        acc
    }

    /// Replaces the coefficient map with one over another field of the same
    /// characteristic family (used when moving integer data into `F`).
    pub fn map_field<G: Field>(&self, g: &G, f: impl Fn(&F::Elem) -> G::Elem) -> DescentElement<G> {
        let mut e = DescentElement::zero(self.n, g);
        for (q, c) in &self.coeffs {
            e.add_term(q.clone(), f(c));
        }
        e
    }

    pub fn to_json_value(&self) -> ElementJson {
        ElementJson {
            n: self.n,
            field: self.characteristic(),
            terms: self
                .coeffs
                .iter()
                .map(|(q, c)| TermJson {
                    comp: q.clone(),
                    coeff: self.field.format(c),
                })
                .collect(),
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(&self.to_json_value()).expect("serializable")
    }

    /// Reads an element; its declared field must match `field`.
    pub fn from_json(s: &str, field: &F) -> Result<Self> {
        let v: ElementJson = serde_json::from_str(s).map_err(|e| Error::Parse(e.to_string()))?;
        Self::from_json_value(&v, field)
    }

    pub fn from_json_value(v: &ElementJson, field: &F) -> Result<Self> {
        if v.field != field.characteristic() {
            return Err(Error::FieldMismatch {
                left: v.field,
                right: field.characteristic(),
            });
        }
        let terms: Result<Vec<_>> = v
            .terms
            .iter()
            .map(|t| Ok((t.comp.clone(), field.parse(&t.coeff)?)))
            .collect();
        Self::from_terms(v.n, field, terms?)
    }

    /// Every basis element `Ξ^q` of `D_n`, in lexicographic order.
    pub fn basis(n: usize, field: &F) -> Vec<Self> {
        compositions(n).iter().map(|q| Self::xi(q, field)).collect()
    }
}

/// JSON shape of an element:
/// `{"n":6,"field":{"char":5},"terms":[{"comp":[2,1,2],"coeff":"3"}]}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ElementJson {
    pub n: usize,
    pub field: Characteristic,
    pub terms: Vec<TermJson>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TermJson {
    pub comp: Composition,
    pub coeff: String,
}

impl<F: Field> fmt::Display for DescentElement<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (q, c) in &self.coeffs {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            if self.field.is_one(c) {
                write!(f, "Ξ^{q}")?;
            } else {
                write!(f, "({})Ξ^{q}", self.field.format(c))?;
            }
        }
        Ok(())
    }
}

impl<F: Field> fmt::Debug for DescentElement<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[n={}, char {}] {}", self.n, self.characteristic(), self)
    }
}
