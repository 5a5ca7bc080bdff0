//! Decomposition and Cartan matrices, and the relation `C̃ = Dᵀ C D`.

use serde::Serialize;

use crate::algebra::Algebra;
use crate::combinatorics::{p_equivalent, p_regular_partitions, partitions, Partition};
use crate::error::Result;
use crate::field::{Characteristic, Field, PrimeField, Rationals};
use crate::idempotents::{orthogonal_idempotent_set, IdempotentSet, Peirce};

/// Integer matrix, row-major.
pub type IntMatrix = Vec<Vec<i64>>;

/// `d_{λ,μ} = 1` iff `λ ∼_p μ`; rows `P(n)`, columns `Λ⁺_p(n)`.
pub fn decomposition_matrix(n: usize, ch: Characteristic) -> IntMatrix {
    let cols = p_regular_partitions(n, ch);
    partitions(n)
        .iter()
        .map(|l| cols.iter().map(|m| p_equivalent(l, m, ch) as i64).collect())
        .collect()
}

/// Cartan matrix from an idempotent set: entry `(λ, μ)` is
/// `dim e_μ D_n e_λ`, labels in ascending lexicographic order.
pub fn cartan_from_idempotents<F: Field>(idems: &IdempotentSet<F>) -> Result<IntMatrix> {
    let alg = Algebra::new(idems.n(), idems.field())?;
    let peirce = Peirce::new(&alg, idems);
    Ok(to_int(peirce.corner_dims(None)))
}

fn to_int(m: Vec<Vec<usize>>) -> IntMatrix {
    m.into_iter()
        .map(|r| r.into_iter().map(|x| x as i64).collect())
        .collect()
}

/// The Cartan matrix of `D_n(F)`.
pub fn cartan_matrix<F: Field>(n: usize, field: &F) -> Result<IntMatrix> {
    cartan_from_idempotents(&orthogonal_idempotent_set(n, field)?)
}

/// Cartan matrix for a runtime characteristic.
pub fn cartan_matrix_for(n: usize, ch: Characteristic) -> Result<IntMatrix> {
    crate::with_field!(ch, |f| cartan_matrix(n, &f))
}

/// `Aᵀ B A`.
pub fn congruence(a: &IntMatrix, b: &IntMatrix) -> IntMatrix {
    let rows = a.len();
    let cols = a.first().map_or(0, |r| r.len());
    let mut ba = vec![vec![0i64; cols]; rows];
    for i in 0..rows {
        for k in 0..rows {
            if b[i][k] == 0 {
                continue;
            }
            for j in 0..cols {
                ba[i][j] += b[i][k] * a[k][j];
            }
        }
    }
    let mut out = vec![vec![0i64; cols]; cols];
    for i in 0..cols {
        for k in 0..rows {
            if a[k][i] == 0 {
                continue;
            }
            for j in 0..cols {
                out[i][j] += a[k][i] * ba[k][j];
            }
        }
    }
    out
}

/// Orders, the decomposition matrix and both Cartan matrices.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CartanData {
    pub n: usize,
    pub p: Characteristic,
    pub row_order: Vec<Partition>,
    pub col_order: Vec<Partition>,
    pub d: IntMatrix,
    pub c: IntMatrix,
    pub c_tilde: IntMatrix,
}

impl CartanData {
    /// `C` over the rationals and `C̃` over `F_p`, each from its own
    /// idempotent set. In characteristic zero `C̃ = C` and `D` is the
    /// identity.
    pub fn compute(n: usize, p: Characteristic) -> Result<Self> {
        let c = cartan_matrix(n, &Rationals)?;
        let c_tilde = match p {
            Characteristic::Zero => c.clone(),
            Characteristic::Prime(q) => cartan_matrix(n, &PrimeField::new(q as u64)?)?,
        };
        Ok(CartanData {
            n,
            p,
            row_order: partitions(n),
            col_order: p_regular_partitions(n, p),
            d: decomposition_matrix(n, p),
            c,
            c_tilde,
        })
    }
}

/// Entry where the computed `C̃` differs from `Dᵀ C D`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ApwMismatch {
    pub row: Partition,
    pub col: Partition,
    pub computed: i64,
    pub predicted: i64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ApwReport {
    pub data: CartanData,
    pub dt_c_d: IntMatrix,
    pub holds: bool,
    pub mismatches: Vec<ApwMismatch>,
}

/// Computes `C`, `D` and `C̃` independently and compares `C̃` with
/// `Dᵀ C D`.
pub fn verify_apw(n: usize, p: Characteristic) -> Result<ApwReport> {
    let data = CartanData::compute(n, p)?;
    let pred = congruence(&data.d, &data.c);
    let mut mismatches = Vec::new();
    for (i, row) in pred.iter().enumerate() {
        for (j, &v) in row.iter().enumerate() {
            if data.c_tilde[i][j] != v {
                mismatches.push(ApwMismatch {
                    row: data.col_order[i].clone(),
                    col: data.col_order[j].clone(),
                    computed: data.c_tilde[i][j],
                    predicted: v,
                });
            }
        }
    }
    Ok(ApwReport {
        holds: mismatches.is_empty(),
        dt_c_d: pred,
        data,
        mismatches,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinatorics::partition_below;

    #[test]
    fn decomposition_examples() {
        let d = decomposition_matrix(3, Characteristic::Prime(2));
        assert_eq!(d, vec![vec![1, 0], vec![1, 0], vec![0, 1]]);
        let d = decomposition_matrix(4, Characteristic::Prime(3));
        // rows 1^4, 21^2, 2^2, 31, 4; columns 21^2, 2^2, 31, 4
        assert_eq!(d[0], vec![0, 0, 1, 0]);
        let d = decomposition_matrix(4, Characteristic::Prime(5));
        for (i, r) in d.iter().enumerate() {
            for (j, &x) in r.iter().enumerate() {
                assert_eq!(x, (i == j) as i64);
            }
        }
    }

    #[test]
    fn decomposition_columns_are_classes() {
        for n in 1..=7 {
            for p in [2u32, 3, 5] {
                let ch = Characteristic::Prime(p);
                let d = decomposition_matrix(n, ch);
                for r in &d {
                    assert_eq!(r.iter().sum::<i64>(), 1);
                }
                let cols = p_regular_partitions(n, ch);
                for (j, l) in cols.iter().enumerate() {
                    let size = partitions(n).iter().filter(|m| p_equivalent(m, l, ch)).count();
                    assert_eq!(d.iter().map(|r| r[j]).sum::<i64>(), size as i64);
                }
            }
        }
    }

    #[test]
    fn n3_p2() {
        let data = CartanData::compute(3, Characteristic::Prime(2)).unwrap();
        assert_eq!(data.c, vec![vec![1, 0, 0], vec![0, 1, 1], vec![0, 0, 1]]);
        assert_eq!(data.c_tilde, vec![vec![2, 1], vec![0, 1]]);
        assert!(verify_apw(3, Characteristic::Prime(2)).unwrap().holds);
    }

    #[test]
    fn char0_shape() {
        for n in 1..=6 {
            let c = cartan_matrix(n, &Rationals).unwrap();
            let ps = partitions(n);
            for i in 0..ps.len() {
                assert_eq!(c[i][i], 1);
                for j in 0..ps.len() {
                    if c[i][j] != 0 {
                        assert!(i <= j);
                        assert!(partition_below(&ps[i], &ps[j]));
                    }
                }
            }
        }
    }
}
