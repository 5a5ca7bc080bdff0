//! Complete sets of primitive orthogonal idempotents, obtained by lifting
//! preimages of the characteristic functions `char_λ` under `θ`.

use std::collections::BTreeMap;

use crate::algebra::{radical_powers, radical_subspace, theta, theta_matrix, Algebra, ClassFunction, DescentElement, Vector};
use crate::combinatorics::{p_equivalent, p_regular_partitions, Partition};
use crate::error::{Error, Result};
use crate::field::Field;
use crate::linalg::{Matrix, Subspace};

/// `char_λ`: the indicator of the p-equivalence class of `λ`.
pub fn class_indicator<F: Field>(lambda: &Partition, n: usize, field: &F) -> ClassFunction<F> {
    let ch = field.characteristic();
    ClassFunction::indicator(n, field, |mu| p_equivalent(mu, lambda, ch))
}

fn check_regular<F: Field>(lambda: &Partition, n: usize, field: &F) -> Result<()> {
    if lambda.n() != n {
        return Err(Error::DegreeMismatch {
            expected: n,
            found: lambda.n(),
        });
    }
    if !lambda.is_regular(field.characteristic()) {
        return Err(Error::NotRegular(lambda.to_string(), field.characteristic()));
    }
    Ok(())
}

/// Dense `x` with `θ(x) = char_λ`. The system is solved over the columns
/// `Ξ^μ`, `μ` p-regular, falling back to all compositions.
pub fn semisimple_preimage_dense<F: Field>(alg: &Algebra<F>, lambda: &Partition) -> Result<Vector<F>> {
    let f = alg.field();
    let n = alg.n();
    check_regular(lambda, n, f)?;
    let target = class_indicator(lambda, n, f);
    let full = theta_matrix(n, f);
    let regular = p_regular_partitions(n, f.characteristic());
    let cols: Vec<usize> = regular
        .iter()
        .map(|mu| alg.index_of(&mu.as_composition()).expect("composition of n"))
        .collect();
    let restricted: Vec<Vec<F::Elem>> = full
        .rows()
        .iter()
        .map(|row| cols.iter().map(|&j| row[j].clone()).collect())
        .collect();
    let restricted = Matrix::from_rows(f, cols.len(), restricted)?;
    if let Some(y) = restricted.solve(target.values())? {
        let mut x = alg.zero_vec();
        for (&j, v) in cols.iter().zip(y) {
            x[j] = v;
        }
        return Ok(x);
    }
    full.solve(target.values())?
        .ok_or_else(|| Error::Internal(format!("char_{lambda} is not in the image of theta")))
}

/// Some `x` with `θ(x) = char_λ`.
pub fn semisimple_preimage<F: Field>(lambda: &Partition, n: usize, field: &F) -> Result<DescentElement<F>> {
    let alg = Algebra::new(n, field)?;
    Ok(alg.to_element(&semisimple_preimage_dense(&alg, lambda)?))
}

/// Iteration budget for lifting: the error term lies in `Rad^{2^k}` after
/// `k` steps and `Rad^{n-1} = 0`.
pub fn lift_bound(n: usize) -> usize {
    let mut k = 0;
    while (1usize << k) < n.max(1) {
        k += 1;
    }
    k + 1
}

/// Lifts `x` with `x^2 - x` nilpotent to an idempotent via
/// `e ← 3e^2 - 2e^3`, stopping as soon as `e^2 = e`.
pub fn lift_idempotent_dense<F: Field>(alg: &Algebra<F>, x: &[F::Elem]) -> Result<Vector<F>> {
    let f = alg.field();
    let three = f.from_i64(3);
    let two = f.from_i64(2);
    let bound = lift_bound(alg.n());
    let mut e = x.to_vec();
    for _ in 0..=bound {
        let e2 = alg.mul(&e, &e);
        if e2 == e {
            return Ok(e);
        }
        let e3 = alg.mul(&e2, &e);
        e = alg.sub(&alg.scale(&three, &e2), &alg.scale(&two, &e3));
    }
    Err(Error::LiftDidNotConverge(bound))
}

pub fn lift_idempotent<F: Field>(x: &DescentElement<F>) -> Result<DescentElement<F>> {
    let alg = Algebra::new(x.n(), x.field())?;
    Ok(alg.to_element(&lift_idempotent_dense(&alg, &x.to_dense(&alg))?))
}

/// A complete set `{e_λ}` of primitive orthogonal idempotents, keyed by the
/// p-regular partitions of `n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdempotentSet<F: Field> {
    n: usize,
    field: F,
    members: BTreeMap<Partition, DescentElement<F>>,
}

/// Outcome of checking the defining properties of an [`IdempotentSet`].
#[derive(Clone, Debug, PartialEq, Eq, serde::Serialize)]
pub struct IdempotentReport {
    pub idempotent: bool,
    pub orthogonal: bool,
    pub complete: bool,
    pub theta_images: bool,
    pub primitive: bool,
}

impl IdempotentReport {
    pub fn all_pass(&self) -> bool {
        self.idempotent && self.orthogonal && self.complete && self.theta_images && self.primitive
    }
}

impl<F: Field> IdempotentSet<F> {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn field(&self) -> &F {
        &self.field
    }

    pub fn members(&self) -> &BTreeMap<Partition, DescentElement<F>> {
        &self.members
    }

    pub fn get(&self, lambda: &Partition) -> Option<&DescentElement<F>> {
        self.members.get(lambda)
    }

    /// Labels in ascending lexicographic order.
    pub fn labels(&self) -> Vec<Partition> {
        self.members.keys().cloned().collect()
    }

    pub fn from_members(n: usize, field: &F, members: BTreeMap<Partition, DescentElement<F>>) -> Self {
        IdempotentSet {
            n,
            field: field.clone(),
            members,
        }
    }

    /// Checks idempotence, orthogonality, completeness, the θ-images and
    /// primitivity by direct multiplication.
    pub fn verify(&self) -> Result<IdempotentReport> {
        let alg = Algebra::new(self.n, &self.field)?;
        let dense: Vec<(Partition, Vector<F>)> = self
            .members
            .iter()
            .map(|(l, e)| (l.clone(), e.to_dense(&alg)))
            .collect();
        let mut rep = IdempotentReport {
            idempotent: true,
            orthogonal: true,
            complete: true,
            theta_images: true,
            primitive: true,
        };
        let mut sum = alg.zero_vec();
        for (i, (l, e)) in dense.iter().enumerate() {
            sum = alg.add(&sum, e);
            if alg.mul(e, e) != *e {
                rep.idempotent = false;
            }
            for (j, (_, g)) in dense.iter().enumerate() {
                if i != j && !alg.is_zero(&alg.mul(e, g)) {
                    rep.orthogonal = false;
                }
            }
            if theta(&alg.to_element(e)) != class_indicator(l, self.n, &self.field) {
                rep.theta_images = false;
            }
        }
        rep.complete = sum == alg.one()
            && self.labels() == p_regular_partitions(self.n, self.field.characteristic());
        // e (D/Rad) e is one-dimensional
        let rad = radical_subspace(&alg);
        let full = Subspace::full(&self.field, alg.dim());
        for (_, e) in &dense {
            let whole = alg.sandwich(e, &full, e).dim();
            let radical = alg.sandwich(e, &rad, e).dim();
            if whole - radical != 1 {
                rep.primitive = false;
            }
        }
        Ok(rep)
    }
}

/// Idempotents for the labels in `order` (a permutation of the p-regular
/// partitions); the last label receives `1 - Σ others`.
pub fn orthogonal_idempotent_set_in_order<F: Field>(
    alg: &Algebra<F>,
    order: &[Partition],
) -> Result<IdempotentSet<F>> {
    let n = alg.n();
    let f = alg.field();
    let mut expected = p_regular_partitions(n, f.characteristic());
    let mut sorted = order.to_vec();
    sorted.sort();
    expected.sort();
    if sorted != expected {
        return Err(Error::Internal(
            "order must list each regular partition once".into(),
        ));
    }
    let one = alg.one();
    let mut fsum = alg.zero_vec();
    let mut members = BTreeMap::new();
    for (k, lambda) in order.iter().enumerate() {
        let e = if k + 1 == order.len() {
            alg.sub(&one, &fsum)
        } else {
            let x = lift_idempotent_dense(alg, &semisimple_preimage_dense(alg, lambda)?)?;
            let c = alg.sub(&one, &fsum);
            let y = alg.mul(&alg.mul(&c, &x), &c);
            lift_idempotent_dense(alg, &y)?
        };
        fsum = alg.add(&fsum, &e);
        members.insert(lambda.clone(), alg.to_element(&e));
    }
    Ok(IdempotentSet {
        n,
        field: f.clone(),
        members,
    })
}

/// The idempotent set built in ascending lexicographic order.
pub fn orthogonal_idempotent_set<F: Field>(n: usize, field: &F) -> Result<IdempotentSet<F>> {
    let alg = Algebra::new(n, field)?;
    orthogonal_idempotent_set_in_order(&alg, &p_regular_partitions(n, field.characteristic()))
}

/// `eAe` with a basis and its structure constants in that basis.
#[derive(Clone, Debug)]
pub struct CornerAlgebra<F: Field> {
    pub basis: Vec<DescentElement<F>>,
    /// `table[i][j]` = coordinates of `basis[i] * basis[j]`.
    pub table: Vec<Vec<Vec<F::Elem>>>,
    space: Subspace<F>,
    alg: Algebra<F>,
}

impl<F: Field> CornerAlgebra<F> {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    /// Coordinates of an element of the corner in [`CornerAlgebra::basis`].
    pub fn coordinates(&self, x: &DescentElement<F>) -> Option<Vec<F::Elem>> {
        let v = x.to_dense(&self.alg);
        if !self.space.contains(&v) {
            return None;
        }
        Some(self.space.pivots().iter().map(|&p| v[p].clone()).collect())
    }

    pub fn contains(&self, x: &DescentElement<F>) -> bool {
        self.space.contains(&x.to_dense(&self.alg))
    }
}

/// The corner algebra `e D_n e` of an idempotent `e`.
pub fn corner_algebra<F: Field>(e: &DescentElement<F>) -> Result<CornerAlgebra<F>> {
    let alg = Algebra::new(e.n(), e.field())?;
    let ev = e.to_dense(&alg);
    if alg.mul(&ev, &ev) != ev {
        return Err(Error::NotIdempotent);
    }
    let full = Subspace::full(alg.field(), alg.dim());
    let space = alg.sandwich(&ev, &full, &ev);
    let basis: Vec<DescentElement<F>> = space.basis().iter().map(|v| alg.to_element(v)).collect();
    let table = space
        .basis()
        .iter()
        .map(|a| {
            space
                .basis()
                .iter()
                .map(|b| {
                    let ab = alg.mul(a, b);
                    space.pivots().iter().map(|&p| ab[p].clone()).collect()
                })
                .collect()
        })
        .collect();
    Ok(CornerAlgebra {
        basis,
        table,
        space,
        alg,
    })
}

/// Peirce decomposition data for an idempotent set: left and right
/// multiplication matrices of every `e_λ`, plus `Rad` and `Rad^2`.
#[derive(Clone, Debug)]
pub struct Peirce<F: Field> {
    alg: Algebra<F>,
    labels: Vec<Partition>,
    left: Vec<Matrix<F>>,
    right: Vec<Matrix<F>>,
    rad: Subspace<F>,
    rad2: Subspace<F>,
}

impl<F: Field> Peirce<F> {
    pub fn new(alg: &Algebra<F>, idems: &IdempotentSet<F>) -> Self {
        let labels = idems.labels();
        let dense: Vec<Vector<F>> = labels
            .iter()
            .map(|l| idems.get(l).unwrap().to_dense(alg))
            .collect();
        let left = dense.iter().map(|e| alg.left_matrix(e)).collect();
        let right = dense.iter().map(|e| alg.right_matrix(e)).collect();
        let powers = radical_powers(alg);
        let rad = powers
            .first()
            .cloned()
            .unwrap_or_else(|| Subspace::zero(alg.field(), alg.dim()));
        let rad2 = powers
            .get(1)
            .cloned()
            .unwrap_or_else(|| Subspace::zero(alg.field(), alg.dim()));
        Peirce {
            alg: alg.clone(),
            labels,
            left,
            right,
            rad,
            rad2,
        }
    }

    pub fn labels(&self) -> &[Partition] {
        &self.labels
    }

    pub fn radical(&self) -> &Subspace<F> {
        &self.rad
    }

    pub fn radical_squared(&self) -> &Subspace<F> {
        &self.rad2
    }

    pub fn algebra(&self) -> &Algebra<F> {
        &self.alg
    }

    fn index(&self, l: &Partition) -> Result<usize> {
        self.labels
            .binary_search(l)
            .map_err(|_| Error::NotRegular(l.to_string(), self.alg.field().characteristic()))
    }

    /// `V e_λ` for each basis vector of `V`.
    pub fn right_images(&self, lambda: &Partition, space: Option<&Subspace<F>>) -> Result<Vec<Vector<F>>> {
        let r = &self.right[self.index(lambda)?];
        Ok(match space {
            None => r.transpose().into_rows(),
            Some(s) => s.basis().iter().map(|v| r.mul_vec(v).unwrap()).collect(),
        })
    }

    /// `dim e_μ V e_λ` given the vectors `V e_λ`.
    pub fn left_dim(&self, mu: &Partition, images: &[Vector<F>]) -> Result<usize> {
        let l = &self.left[self.index(mu)?];
        Ok(Subspace::span(
            self.alg.field(),
            self.alg.dim(),
            images.iter().map(|v| l.mul_vec(v).unwrap()),
        )
        .dim())
    }

    /// `dim e_μ V e_λ` with `V` the whole algebra when `space` is `None`.
    pub fn corner_dim(&self, mu: &Partition, lambda: &Partition, space: Option<&Subspace<F>>) -> Result<usize> {
        let images = self.right_images(lambda, space)?;
        self.left_dim(mu, &images)
    }

    /// All `dim e_μ V e_λ`, as `out[λ][μ]` over the label order.
    pub fn corner_dims(&self, space: Option<&Subspace<F>>) -> Vec<Vec<usize>> {
        self.labels
            .iter()
            .map(|lambda| {
                let images = self.right_images(lambda, space).unwrap();
                self.labels
                    .iter()
                    .map(|mu| self.left_dim(mu, &images).unwrap())
                    .collect()
            })
            .collect()
    }
}

/// `dim e_μ V e_λ` for every pair, `V` the algebra itself.
pub fn corner_dims<F: Field>(idems: &IdempotentSet<F>) -> Result<Vec<Vec<usize>>> {
    let alg = Algebra::new(idems.n(), idems.field())?;
    Ok(Peirce::new(&alg, idems).corner_dims(None))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinatorics::part;
    use crate::field::{PrimeField, Rationals};

    #[test]
    fn n3_p2_idempotents() {
        let f = PrimeField::new(2).unwrap();
        let e3 = DescentElement::from_ints(3, &f, &[(&[3], 1), (&[2, 1], 1), (&[1, 1, 1], 1)]).unwrap();
        assert_eq!(theta(&e3), class_indicator(&part(&[3]), 3, &f));
        let e21 = DescentElement::from_ints(3, &f, &[(&[2, 1], 1), (&[1, 1, 1], 1)]).unwrap();
        assert_eq!(lift_idempotent(&e21).unwrap(), e21);

        let set = orthogonal_idempotent_set(3, &f).unwrap();
        assert_eq!(set.labels(), vec![part(&[2, 1]), part(&[3])]);
        let sum = set.get(&part(&[2, 1])).unwrap().add(set.get(&part(&[3])).unwrap()).unwrap();
        assert_eq!(sum, DescentElement::identity(3, &f));
        assert!(set.verify().unwrap().all_pass());

        let x = semisimple_preimage(&part(&[3]), 3, &f).unwrap();
        assert_eq!(theta(&x), class_indicator(&part(&[3]), 3, &f));
    }

    #[test]
    fn small_cases() {
        let f2 = PrimeField::new(2).unwrap();
        let set = orthogonal_idempotent_set(2, &f2).unwrap();
        assert_eq!(set.members().len(), 1);
        assert_eq!(set.get(&part(&[2])).unwrap(), &DescentElement::identity(2, &f2));

        let q = Rationals;
        let x = semisimple_preimage(&part(&[2]), 2, &q).unwrap();
        assert_ne!(x, DescentElement::identity(2, &q));
        assert_eq!(theta(&x), class_indicator(&part(&[2]), 2, &q));
        let x1 = semisimple_preimage(&part(&[1]), 1, &q).unwrap();
        assert_eq!(x1, DescentElement::identity(1, &q));

        assert!(semisimple_preimage(&part(&[1, 1]), 2, &f2).is_err());
    }

    #[test]
    fn n4_p2_lift() {
        let f = PrimeField::new(2).unwrap();
        let x = semisimple_preimage(&part(&[4]), 4, &f).unwrap();
        let e = lift_idempotent(&x).unwrap();
        assert_eq!(e.multiply(&e).unwrap(), e);
        let given = DescentElement::from_ints(4, &f, &[(&[4], 1), (&[3, 1], 1), (&[2, 1, 1], 1), (&[1, 1, 1, 1], 1)]).unwrap();
        assert_eq!(given.multiply(&given).unwrap(), given);
        assert_eq!(theta(&given), class_indicator(&part(&[4]), 4, &f));
    }

    #[test]
    fn sets_verify() {
        for n in 1..=6 {
            for p in [2u64, 3, 5, 7] {
                let f = PrimeField::new(p).unwrap();
                let rep = orthogonal_idempotent_set(n, &f).unwrap().verify().unwrap();
                assert!(rep.all_pass(), "n={n} p={p}: {rep:?}");
            }
        }
        for n in 1..=5 {
            let rep = orthogonal_idempotent_set(n, &Rationals).unwrap().verify().unwrap();
            assert!(rep.all_pass(), "n={n} char 0: {rep:?}");
        }
    }

    #[test]
    fn corner_of_identity_is_everything() {
        let f = PrimeField::new(3).unwrap();
        let c = corner_algebra(&DescentElement::identity(4, &f)).unwrap();
        assert_eq!(c.dim(), 8);
        let not_idem = DescentElement::from_ints(4, &f, &[(&[4], 2)]).unwrap();
        assert!(matches!(corner_algebra(&not_idem), Err(Error::NotIdempotent)));
    }

    #[test]
    fn corner_n3_p2() {
        let f = PrimeField::new(2).unwrap();
        let set = orthogonal_idempotent_set(3, &f).unwrap();
        let c = corner_algebra(set.get(&part(&[3])).unwrap()).unwrap();
        assert_eq!(c.dim(), 1);
    }
}
