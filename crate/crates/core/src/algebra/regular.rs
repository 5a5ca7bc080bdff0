use std::collections::BTreeMap;

use super::Algebra;
use crate::combinatorics::Composition;
use crate::error::{Error, Result};
use crate::field::Field;
use crate::linalg::Matrix;

/// Default upper bound on `n` for the regular representation.
pub const DEFAULT_BOUND: usize = 12;

/// Matrix of left multiplication by each `Ξ^q` in the composition basis.
/// Fails when `n` exceeds `bound` or the table limit.
pub fn regular_representation<F: Field>(
    n: usize,
    field: &F,
    bound: usize,
) -> Result<BTreeMap<Composition, Matrix<F>>> {
    if n > bound {
        return Err(Error::BoundExceeded { n, bound });
    }
    let alg = Algebra::new(n, field)?;
    Ok((0..alg.dim())
        .map(|i| (alg.basis()[i].clone(), alg.left_matrix(&alg.basis_vec(i))))
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::w_element;
    use crate::field::{PrimeField, Rationals};
    use rand::{Rng, SeedableRng};

    #[test]
    fn identity_and_homomorphism() {
        let f = PrimeField::new(5).unwrap();
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        for n in 1..=6 {
            let reg = regular_representation(n, &f, DEFAULT_BOUND).unwrap();
            let d = 1 << (n - 1);
            assert_eq!(reg[&Composition::top(n)], Matrix::identity(&f, d));
            let alg = Algebra::new(n, &f).unwrap();
            for _ in 0..10 {
                let x: Vec<u64> = (0..d).map(|_| rng.gen_range(0..5)).collect();
                let y: Vec<u64> = (0..d).map(|_| rng.gen_range(0..5)).collect();
                let lx = alg.left_matrix(&x);
                let ly = alg.left_matrix(&y);
                assert_eq!(alg.left_matrix(&alg.mul(&x, &y)), lx.mul(&ly).unwrap());
            }
        }
        assert!(regular_representation(13, &f, DEFAULT_BOUND).is_err());
        assert!(regular_representation(5, &f, 4).is_err());
    }

    #[test]
    fn w_is_nilpotent_in_the_regular_representation() {
        let q = Rationals;
        for n in 3..=6 {
            let alg = Algebra::new(n, &q).unwrap();
            let w = w_element(n, &q).unwrap().to_dense(&alg);
            let lw = alg.left_matrix(&w);
            let mut m = Matrix::identity(&q, alg.dim());
            for _ in 0..n - 1 {
                m = m.mul(&lw).unwrap();
            }
            assert!(m.rows().iter().flatten().all(|x| x.is_zero()));
        }
    }
}
