use rayon::prelude::*;

use super::element::DescentElement;
use super::Algebra;
use crate::combinatorics::{compositions, lambda_of, Composition};
use crate::error::{Error, Result};
use crate::field::Field;
use crate::linalg::Subspace;

/// A basis of `Rad D_n(F) = ker θ`: `Ξ^q` for every `q` with `λ(q)` not
/// p-regular, and `Ξ^q - Ξ^{r(q)}` for the remaining `q` that differ from
/// their sorted rearrangement `r(q)`.
pub fn radical_basis<F: Field>(n: usize, field: &F) -> Vec<DescentElement<F>> {
    let ch = field.characteristic();
    let mut out = Vec::new();
    for q in compositions(n) {
        if !lambda_of(&q).is_regular(ch) {
            out.push(DescentElement::xi(&q, field));
        } else {
            let r = q.canonical_rearrangement();
            if r != q {
                let e = DescentElement::xi(&q, field)
                    .sub(&DescentElement::xi(&r, field))
                    .expect("same algebra");
                out.push(e);
            }
        }
    }
    out
}

// Sparse (index, coefficient) form of the radical basis.
fn sparse_radical<F: Field>(alg: &Algebra<F>) -> Vec<Vec<(usize, F::Elem)>> {
    radical_basis(alg.n(), alg.field())
        .iter()
        .map(|e| {
            e.terms()
                .iter()
                .map(|(q, c)| (alg.index_of(q).expect("composition of n"), c.clone()))
                .collect()
        })
        .collect()
}

/// `Rad D_n(F)` as a coordinate subspace.
pub fn radical_subspace<F: Field>(alg: &Algebra<F>) -> Subspace<F> {
    let d = alg.dim();
    Subspace::span(
        alg.field(),
        d,
        sparse_radical(alg).into_iter().map(|terms| {
            let mut v = alg.zero_vec();
            for (i, c) in terms {
                v[i] = c;
            }
            v
        }),
    )
}

/// `[Rad, Rad^2, ..., Rad^m]` with `Rad^m` the last nonzero power.
/// `Rad^{k+1}` is spanned by the products `r b` with `r` in the radical
/// basis and `b` in a basis of `Rad^k`.
pub fn radical_powers<F: Field>(alg: &Algebra<F>) -> Vec<Subspace<F>> {
    let gens = sparse_radical(alg);
    let mut powers = vec![radical_subspace(alg)];
    loop {
        let prev = powers.last().unwrap();
        if prev.dim() == 0 {
            powers.pop();
            return powers;
        }
        let mut next = Subspace::zero(alg.field(), alg.dim());
        for b in prev.basis() {
            let products: Vec<_> = gens
                .par_iter()
                .map(|r| alg.mul_sparse_left(r, b))
                .collect();
            for v in products {
                next.insert(v);
            }
        }
        powers.push(next);
    }
}

/// `dim Rad^k` for `k = 1, 2, ...`, ending with the first zero.
pub fn radical_power_dims<F: Field>(alg: &Algebra<F>) -> Vec<usize> {
    let mut dims: Vec<usize> = radical_powers(alg).iter().map(|s| s.dim()).collect();
    dims.push(0);
    dims
}

/// The least `m` with `Rad^m = 0`.
pub fn nilpotency_index<F: Field>(alg: &Algebra<F>) -> usize {
    radical_powers(alg).len() + 1
}

/// `w = Ξ^{(n-1,1)} - Ξ^{(1,n-1)}`.
pub fn w_element<F: Field>(n: usize, field: &F) -> Result<DescentElement<F>> {
    if n < 3 {
        return Err(Error::WRequiresDegree3(n));
    }
    let a = Composition::new(vec![n - 1, 1])?;
    let b = Composition::new(vec![1, n - 1])?;
    DescentElement::xi(&a, field).sub(&DescentElement::xi(&b, field))
}
