//! Dense exact linear algebra over a [`Field`].

use crate::error::{Error, Result};
use crate::field::Field;

/// Dense row-major matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Matrix<F: Field> {
    field: F,
    rows: usize,
    cols: usize,
    data: Vec<Vec<F::Elem>>,
}

fn check_field<F: Field>(a: &F, b: &F) -> Result<()> {
    if a.characteristic() != b.characteristic() {
        return Err(Error::FieldMismatch {
            left: a.characteristic(),
            right: b.characteristic(),
        });
    }
    Ok(())
}

impl<F: Field> Matrix<F> {
    pub fn zeros(field: &F, rows: usize, cols: usize) -> Self {
        Matrix {
            field: field.clone(),
            rows,
            cols,
            data: vec![vec![field.zero(); cols]; rows],
        }
    }

    pub fn identity(field: &F, n: usize) -> Self {
        let mut m = Self::zeros(field, n, n);
        for i in 0..n {
            m.data[i][i] = field.one();
        }
        m
    }

    /// Builds a matrix from rows, which must all have length `cols`.
    pub fn from_rows(field: &F, cols: usize, data: Vec<Vec<F::Elem>>) -> Result<Self> {
        if let Some(r) = data.iter().find(|r| r.len() != cols) {
            return Err(Error::DimensionMismatch(format!(
                "row of length {} in a matrix with {cols} columns",
                r.len()
            )));
        }
        Ok(Matrix {
            field: field.clone(),
            rows: data.len(),
            cols,
            data,
        })
    }

    pub fn from_i64(field: &F, rows: &[Vec<i64>]) -> Result<Self> {
        let cols = rows.first().map_or(0, |r| r.len());
        let data = rows
            .iter()
            .map(|r| r.iter().map(|&x| field.from_i64(x)).collect())
            .collect();
        Self::from_rows(field, cols, data)
    }

    pub fn field(&self) -> &F {
        &self.field
    }

    pub fn nrows(&self) -> usize {
        self.rows
    }

    pub fn ncols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &F::Elem {
        &self.data[i][j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: F::Elem) {
        self.data[i][j] = v;
    }

    pub fn row(&self, i: usize) -> &[F::Elem] {
        &self.data[i]
    }

    pub fn rows(&self) -> &[Vec<F::Elem>] {
        &self.data
    }

    pub fn into_rows(self) -> Vec<Vec<F::Elem>> {
        self.data
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(&self.field, self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.data[j][i] = self.data[i][j].clone();
            }
        }
        t
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        check_field(&self.field, &other.field)?;
        if self.cols != other.rows {
            return Err(Error::DimensionMismatch(format!(
                "{}x{} times {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let f = &self.field;
        let mut out = Self::zeros(f, self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self.data[i][k];
                if f.is_zero(a) {
                    continue;
                }
                for j in 0..other.cols {
                    if !f.is_zero(&other.data[k][j]) {
                        f.add_mul(&mut out.data[i][j], a, &other.data[k][j]);
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn mul_vec(&self, v: &[F::Elem]) -> Result<Vec<F::Elem>> {
        if v.len() != self.cols {
            return Err(Error::DimensionMismatch(format!(
                "vector of length {} for {} columns",
                v.len(),
                self.cols
            )));
        }
        let f = &self.field;
        Ok(self
            .data
            .iter()
            .map(|row| {
                let mut acc = f.zero();
                for (a, b) in row.iter().zip(v) {
                    if !f.is_zero(a) && !f.is_zero(b) {
                        f.add_mul(&mut acc, a, b);
                    }
                }
                acc
            })
            .collect())
    }

    /// Reduced row echelon form and its pivot columns.
    pub fn rref_with_pivots(&self) -> (Self, Vec<usize>) {
        let f = &self.field;
        let mut a = self.data.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..self.cols {
            if r == self.rows {
                break;
            }
            let Some(pr) = (r..self.rows).find(|&i| !f.is_zero(&a[i][c])) else {
                continue;
            };
            a.swap(r, pr);
            let inv = f.inv(&a[r][c]).expect("nonzero pivot");
            for x in a[r][c..].iter_mut() {
                *x = f.mul(x, &inv);
            }
            let pivot_row = a[r].clone();
            for (i, row) in a.iter_mut().enumerate() {
                if i == r || f.is_zero(&row[c]) {
                    continue;
                }
                let factor = row[c].clone();
                for (x, y) in row[c..].iter_mut().zip(&pivot_row[c..]) {
                    if !f.is_zero(y) {
                        f.sub_mul(x, &factor, y);
                    }
                }
            }
            pivots.push(c);
            r += 1;
        }
        (
            Matrix {
                field: f.clone(),
                rows: self.rows,
                cols: self.cols,
                data: a,
            },
            pivots,
        )
    }

    pub fn rref(&self) -> Self {
        self.rref_with_pivots().0
    }

    pub fn rank(&self) -> usize {
        Subspace::span(&self.field, self.cols, self.data.iter().cloned()).dim()
    }

    /// Basis of `{x : M x = 0}`.
    pub fn kernel_basis(&self) -> Subspace<F> {
        let f = &self.field;
        let (r, pivots) = self.rref_with_pivots();
        let mut is_pivot = vec![false; self.cols];
        for &c in &pivots {
            is_pivot[c] = true;
        }
        let vectors = (0..self.cols).filter(|&c| !is_pivot[c]).map(|free| {
            let mut x = vec![f.zero(); self.cols];
            x[free] = f.one();
            for (i, &pc) in pivots.iter().enumerate() {
                x[pc] = f.neg(&r.data[i][free]);
            }
            x
        });
        Subspace::span(f, self.cols, vectors)
    }

    /// Some solution of `M x = b`, or `None` if the system is inconsistent.
    pub fn solve(&self, b: &[F::Elem]) -> Result<Option<Vec<F::Elem>>> {
        if b.len() != self.rows {
            return Err(Error::DimensionMismatch(format!(
                "right-hand side of length {} for {} rows",
                b.len(),
                self.rows
            )));
        }
        let f = &self.field;
        let aug: Vec<Vec<F::Elem>> = self
            .data
            .iter()
            .zip(b)
            .map(|(row, bi)| {
                let mut r = row.clone();
                r.push(bi.clone());
                r
            })
            .collect();
        let aug = Matrix::from_rows(f, self.cols + 1, aug)?;
        let (r, pivots) = aug.rref_with_pivots();
        if pivots.last() == Some(&self.cols) {
            return Ok(None);
        }
        let mut x = vec![f.zero(); self.cols];
        for (i, &pc) in pivots.iter().enumerate() {
            x[pc] = r.data[i][self.cols].clone();
        }
        Ok(Some(x))
    }

    /// Entries rendered as strings, row by row.
    pub fn to_string_grid(&self) -> Vec<Vec<String>> {
        self.data
            .iter()
            .map(|r| r.iter().map(|x| self.field.format(x)).collect())
            .collect()
    }
}

/// Solve with a field check between the matrix and the right-hand side's
/// field.
pub fn solve_checked<F: Field>(m: &Matrix<F>, field_b: &F, b: &[F::Elem]) -> Result<Option<Vec<F::Elem>>> {
    check_field(m.field(), field_b)?;
    m.solve(b)
}

/// A subspace of `F^d`, stored as a fully reduced echelon basis so equal
/// subspaces have identical representations.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Subspace<F: Field> {
    field: F,
    ambient: usize,
    rows: Vec<Vec<F::Elem>>,
    pivots: Vec<usize>,
}

impl<F: Field> Subspace<F> {
    pub fn zero(field: &F, ambient: usize) -> Self {
        Subspace {
            field: field.clone(),
            ambient,
            rows: Vec::new(),
            pivots: Vec::new(),
        }
    }

    pub fn full(field: &F, ambient: usize) -> Self {
        let m = Matrix::identity(field, ambient);
        Subspace {
            field: field.clone(),
            ambient,
            rows: m.into_rows(),
            pivots: (0..ambient).collect(),
        }
    }

    pub fn span<I: IntoIterator<Item = Vec<F::Elem>>>(field: &F, ambient: usize, vectors: I) -> Self {
        let mut s = Self::zero(field, ambient);
        for v in vectors {
            s.insert(v);
        }
        s
    }

    pub fn field(&self) -> &F {
        &self.field
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    pub fn basis(&self) -> &[Vec<F::Elem>] {
        &self.rows
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    pub fn is_full(&self) -> bool {
        self.rows.len() == self.ambient
    }

    /// `v` minus its projection onto the span along the pivot coordinates;
    /// zero iff `v` lies in the subspace.
    pub fn reduce(&self, mut v: Vec<F::Elem>) -> Vec<F::Elem> {
        assert_eq!(v.len(), self.ambient, "vector length");
        let f = &self.field;
        for (row, &pc) in self.rows.iter().zip(&self.pivots) {
            if f.is_zero(&v[pc]) {
                continue;
            }
            let factor = v[pc].clone();
            for (x, y) in v[pc..].iter_mut().zip(&row[pc..]) {
                if !f.is_zero(y) {
                    f.sub_mul(x, &factor, y);
                }
            }
        }
        v
    }

    pub fn contains(&self, v: &[F::Elem]) -> bool {
        let f = &self.field;
        self.reduce(v.to_vec()).iter().all(|x| f.is_zero(x))
    }

    /// Adds `v` to the spanning set; returns whether the dimension grew.
    pub fn insert(&mut self, v: Vec<F::Elem>) -> bool {
        if self.is_full() {
            return false;
        }
        let f = self.field.clone();
        let mut v = self.reduce(v);
        let Some(c) = v.iter().position(|x| !f.is_zero(x)) else {
            return false;
        };
        let inv = f.inv(&v[c]).expect("nonzero");
        for x in v[c..].iter_mut() {
            *x = f.mul(x, &inv);
        }
        for row in self.rows.iter_mut() {
            if f.is_zero(&row[c]) {
                continue;
            }
            let factor = row[c].clone();
            for (x, y) in row[c..].iter_mut().zip(&v[c..]) {
                if !f.is_zero(y) {
                    f.sub_mul(x, &factor, y);
                }
            }
        }
        let at = self.pivots.partition_point(|&p| p < c);
        self.rows.insert(at, v);
        self.pivots.insert(at, c);
        true
    }

    pub fn sum(&self, other: &Self) -> Result<Self> {
        self.check_compatible(other)?;
        let mut s = self.clone();
        for v in &other.rows {
            s.insert(v.clone());
        }
        Ok(s)
    }

    pub fn intersection(&self, other: &Self) -> Result<Self> {
        self.check_compatible(other)?;
        let f = &self.field;
        let (a, b) = (self.dim(), other.dim());
        // columns: basis of self, then negated basis of other
        let mut m = Matrix::zeros(f, self.ambient, a + b);
        for (j, v) in self.rows.iter().enumerate() {
            for i in 0..self.ambient {
                m.data[i][j] = v[i].clone();
            }
        }
        for (j, v) in other.rows.iter().enumerate() {
            for i in 0..self.ambient {
                m.data[i][a + j] = f.neg(&v[i]);
            }
        }
        let ker = m.kernel_basis();
        let vectors = ker.rows.iter().map(|k| {
            let mut x = vec![f.zero(); self.ambient];
            for (j, v) in self.rows.iter().enumerate() {
                if f.is_zero(&k[j]) {
                    continue;
                }
                for (xi, vi) in x.iter_mut().zip(v) {
                    f.add_mul(xi, &k[j], vi);
                }
            }
            x
        });
        Ok(Self::span(f, self.ambient, vectors))
    }

    pub fn is_subspace_of(&self, other: &Self) -> bool {
        self.ambient == other.ambient && self.rows.iter().all(|v| other.contains(v))
    }

    /// `dim self - dim sub`, after checking `sub ⊆ self`.
    pub fn quotient_dim(&self, sub: &Self) -> Result<usize> {
        self.check_compatible(sub)?;
        if !sub.is_subspace_of(self) {
            return Err(Error::NotSubspace);
        }
        Ok(self.dim() - sub.dim())
    }

    fn check_compatible(&self, other: &Self) -> Result<()> {
        check_field(&self.field, &other.field)?;
        if self.ambient != other.ambient {
            return Err(Error::DimensionMismatch(format!(
                "ambient dimensions {} and {}",
                self.ambient, other.ambient
            )));
        }
        Ok(())
    }
}
