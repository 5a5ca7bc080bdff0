use std::collections::HashMap;

use super::element::DescentElement;
use crate::combinatorics::{compositions, partitions, Composition, Partition};
use crate::error::{Error, Result};
use crate::field::Field;
use crate::linalg::Matrix;

/// `φ^q(μ)`: the number of ways to send the cycles of a permutation of type
/// `μ` to the blocks of `q` so that block `j` receives total length `q_j`.
/// Equal parts of `μ` count as distinct cycles.
pub fn young_character(q: &Composition, mu: &Partition) -> Result<u64> {
    if q.n() != mu.n() {
        return Err(Error::DegreeMismatch {
            expected: q.n(),
            found: mu.n(),
        });
    }
    let mut memo = HashMap::new();
    Ok(assign(mu.parts(), q.parts().to_vec(), &mut memo))
}

// The count depends only on the multiset of remaining capacities.
fn assign(parts: &[usize], mut caps: Vec<usize>, memo: &mut HashMap<(usize, Vec<usize>), u64>) -> u64 {
    let Some((&x, rest)) = parts.split_first() else {
        return caps.iter().all(|&c| c == 0) as u64;
    };
    caps.sort_unstable();
    let key = (parts.len(), caps.clone());
    if let Some(&v) = memo.get(&key) {
        return v;
    }
    let mut total = 0;
    for j in 0..caps.len() {
        if caps[j] >= x {
            caps[j] -= x;
            total += assign(rest, caps.clone(), memo);
            caps[j] += x;
        }
    }
    memo.insert(key, total);
    total
}

/// A class function of `S_n` with values in `F`, stored over `P(n)` in
/// ascending lexicographic order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassFunction<F: Field> {
    n: usize,
    field: F,
    classes: Vec<Partition>,
    values: Vec<F::Elem>,
}

impl<F: Field> ClassFunction<F> {
    pub fn zero(n: usize, field: &F) -> Self {
        let classes = partitions(n);
        let values = vec![field.zero(); classes.len()];
        ClassFunction {
            n,
            field: field.clone(),
            classes,
            values,
        }
    }

    pub fn from_fn(n: usize, field: &F, mut f: impl FnMut(&Partition) -> F::Elem) -> Self {
        let mut c = Self::zero(n, field);
        c.values = c.classes.iter().map(&mut f).collect();
        c
    }

    /// The Young character `φ^q` reduced into `F`.
    pub fn young(q: &Composition, field: &F) -> Self {
        Self::from_fn(q.n(), field, |mu| {
            field.from_u64(young_character(q, mu).expect("same degree"))
        })
    }

    /// Indicator function of a set of classes.
    pub fn indicator(n: usize, field: &F, member: impl Fn(&Partition) -> bool) -> Self {
        Self::from_fn(n, field, |mu| if member(mu) { field.one() } else { field.zero() })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn classes(&self) -> &[Partition] {
        &self.classes
    }

    pub fn values(&self) -> &[F::Elem] {
        &self.values
    }

    pub fn value(&self, mu: &Partition) -> Option<&F::Elem> {
        self.classes.binary_search(mu).ok().map(|i| &self.values[i])
    }

    pub fn pointwise_mul(&self, other: &Self) -> Self {
        let f = &self.field;
        let mut c = self.clone();
        for (a, b) in c.values.iter_mut().zip(&other.values) {
            *a = f.mul(a, b);
        }
        c
    }

    pub fn add_scaled(&mut self, c: &F::Elem, other: &Self) {
        let f = &self.field;
        for (a, b) in self.values.iter_mut().zip(&other.values) {
            f.add_mul(a, c, b);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.values.iter().all(|v| self.field.is_zero(v))
    }
}

/// The Solomon map `θ`, the linear extension of `Ξ^q ↦ φ^q`.
pub fn theta<F: Field>(x: &DescentElement<F>) -> ClassFunction<F> {
    let f = x.field();
    let mut out = ClassFunction::zero(x.n(), f);
    for (q, c) in x.terms() {
        out.add_scaled(c, &ClassFunction::young(q, f));
    }
    out
}

/// Matrix of `θ`: rows `P(n)`, columns the composition basis.
pub fn theta_matrix<F: Field>(n: usize, field: &F) -> Matrix<F> {
    let ps = partitions(n);
    let cs = compositions(n);
    let rows = ps
        .iter()
        .map(|mu| {
            cs.iter()
                .map(|q| field.from_u64(young_character(q, mu).expect("same degree")))
                .collect()
        })
        .collect();
    Matrix::from_rows(field, cs.len(), rows).expect("rectangular")
}
