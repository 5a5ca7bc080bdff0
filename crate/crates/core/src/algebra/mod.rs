//! The descent algebra `D_n` over a field.
//!
//! [`Algebra`] works with dense coordinate vectors in the lexicographic
//! composition basis and backs every heavier computation;
//! [`DescentElement`] is the sparse user-facing element type.

mod characters;
mod element;
mod radical;
mod regular;
pub mod structure;

use std::sync::Arc;

pub use characters::{theta, theta_matrix, young_character, ClassFunction};
pub use element::DescentElement;
pub use radical::{
    nilpotency_index, radical_basis, radical_power_dims, radical_powers, radical_subspace,
    w_element,
};
pub use regular::{regular_representation, DEFAULT_BOUND};
pub use structure::{structure_constants, structure_table, StructureTable};

use crate::combinatorics::Composition;
use crate::error::Result;
use crate::field::Field;
use crate::linalg::{Matrix, Subspace};

/// Dense vector of coordinates in the composition basis.
pub type Vector<F> = Vec<<F as Field>::Elem>;

/// `D_n(F)` with its multiplication table reduced into `F`.
#[derive(Debug, Clone)]
pub struct Algebra<F: Field> {
    field: F,
    table: Arc<StructureTable>,
    // structure constants as field elements, parallel to the table terms
    consts: Arc<Vec<F::Elem>>,
    start: Arc<Vec<usize>>,
}

impl<F: Field> Algebra<F> {
    pub fn new(n: usize, field: &F) -> Result<Self> {
        let table = structure_table(n)?;
        let d = table.dim();
        let mut consts = Vec::with_capacity(table.nnz());
        let mut start = Vec::with_capacity(d * d + 1);
        start.push(0);
        for i in 0..d {
            for j in 0..d {
                consts.extend(table.product(i, j).iter().map(|&(_, c)| field.from_u64(c as u64)));
                start.push(consts.len());
            }
        }
        Ok(Algebra {
            field: field.clone(),
            table,
            consts: Arc::new(consts),
            start: Arc::new(start),
        })
    }

    pub fn field(&self) -> &F {
        &self.field
    }

    pub fn n(&self) -> usize {
        self.table.n()
    }

    pub fn dim(&self) -> usize {
        self.table.dim()
    }

    pub fn table(&self) -> &StructureTable {
        &self.table
    }

    pub fn basis(&self) -> &[Composition] {
        self.table.basis()
    }

    pub fn index_of(&self, q: &Composition) -> Option<usize> {
        self.table.index_of(q)
    }

    #[inline]
    fn cell(&self, i: usize, j: usize) -> (&[(u32, u32)], &[F::Elem]) {
        let c = i * self.dim() + j;
        let (a, b) = (self.start[c], self.start[c + 1]);
        (self.table.product(i, j), &self.consts[a..b])
    }

    pub fn zero_vec(&self) -> Vector<F> {
        vec![self.field.zero(); self.dim()]
    }

    pub fn basis_vec(&self, i: usize) -> Vector<F> {
        let mut v = self.zero_vec();
        v[i] = self.field.one();
        v
    }

    /// The identity `Ξ^{(n)}` (the last composition in lex order).
    pub fn one(&self) -> Vector<F> {
        self.basis_vec(self.dim() - 1)
    }

    pub fn is_zero(&self, x: &[F::Elem]) -> bool {
        x.iter().all(|a| self.field.is_zero(a))
    }

    pub fn add(&self, x: &[F::Elem], y: &[F::Elem]) -> Vector<F> {
        x.iter().zip(y).map(|(a, b)| self.field.add(a, b)).collect()
    }

    pub fn sub(&self, x: &[F::Elem], y: &[F::Elem]) -> Vector<F> {
        x.iter().zip(y).map(|(a, b)| self.field.sub(a, b)).collect()
    }

    pub fn scale(&self, c: &F::Elem, x: &[F::Elem]) -> Vector<F> {
        x.iter().map(|a| self.field.mul(c, a)).collect()
    }

    fn support(&self, x: &[F::Elem]) -> Vec<usize> {
        (0..x.len()).filter(|&i| !self.field.is_zero(&x[i])).collect()
    }

    /// Product `x y`.
    pub fn mul(&self, x: &[F::Elem], y: &[F::Elem]) -> Vector<F> {
        let f = &self.field;
        let mut out = self.zero_vec();
        let ys = self.support(y);
        for i in self.support(x) {
            for &j in &ys {
                let xy = f.mul(&x[i], &y[j]);
                let (terms, cs) = self.cell(i, j);
                for (&(k, _), c) in terms.iter().zip(cs) {
                    f.add_mul(&mut out[k as usize], &xy, c);
                }
            }
        }
        out
    }

    /// Product with a sparse left factor given as `(index, coefficient)`.
    pub fn mul_sparse_left(&self, x: &[(usize, F::Elem)], y: &[F::Elem]) -> Vector<F> {
        let f = &self.field;
        let mut out = self.zero_vec();
        let ys = self.support(y);
        for (i, xi) in x {
            for &j in &ys {
                let xy = f.mul(xi, &y[j]);
                let (terms, cs) = self.cell(*i, j);
                for (&(k, _), c) in terms.iter().zip(cs) {
                    f.add_mul(&mut out[k as usize], &xy, c);
                }
            }
        }
        out
    }

    pub fn pow(&self, x: &[F::Elem], e: u32) -> Vector<F> {
        let mut acc = self.one();
        for _ in 0..e {
            acc = self.mul(&acc, x);
        }
        acc
    }

    /// Matrix of `v ↦ x v`.
    pub fn left_matrix(&self, x: &[F::Elem]) -> Matrix<F> {
        let f = &self.field;
        let d = self.dim();
        let mut m = Matrix::zeros(f, d, d);
        for i in self.support(x) {
            for j in 0..d {
                let (terms, cs) = self.cell(i, j);
                for (&(k, _), c) in terms.iter().zip(cs) {
                    let mut e = m.get(k as usize, j).clone();
                    f.add_mul(&mut e, &x[i], c);
                    m.set(k as usize, j, e);
                }
            }
        }
        m
    }

    /// Matrix of `v ↦ v x`.
    pub fn right_matrix(&self, x: &[F::Elem]) -> Matrix<F> {
        let f = &self.field;
        let d = self.dim();
        let mut m = Matrix::zeros(f, d, d);
        let xs = self.support(x);
        for i in 0..d {
            for &j in &xs {
                let (terms, cs) = self.cell(i, j);
                for (&(k, _), c) in terms.iter().zip(cs) {
                    let mut e = m.get(k as usize, i).clone();
                    f.add_mul(&mut e, &x[j], c);
                    m.set(k as usize, i, e);
                }
            }
        }
        m
    }

    /// Dimension of `a V b` for a subspace `V` (a two-sided ideal or any
    /// subspace), computed as the span of `a v b` over a basis of `V`.
    pub fn sandwich(&self, a: &[F::Elem], space: &Subspace<F>, b: &[F::Elem]) -> Subspace<F> {
        let la = self.left_matrix(a);
        let rb = self.right_matrix(b);
        let m = la.mul(&rb).expect("same field");
        Subspace::span(
            &self.field,
            self.dim(),
            space.basis().iter().map(|v| m.mul_vec(v).expect("dimensions agree")),
        )
    }

    pub fn to_element(&self, x: &[F::Elem]) -> DescentElement<F> {
        DescentElement::from_dense(self, x)
    }
}
