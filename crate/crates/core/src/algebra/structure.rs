//! Structure constants `Ξ^r Ξ^q = Σ_s N^s_{r,q} Ξ^s` by contingency-table
//! enumeration, and the cached multiplication table of `D_n`.

use std::collections::{BTreeMap, HashMap};
use std::sync::{Arc, Mutex, OnceLock};

use rayon::prelude::*;

use crate::combinatorics::{compositions, Composition};
use crate::error::{Error, Result};

/// Largest degree whose full table is materialized on demand.
pub const TABLE_MAX_N: usize = 10;

/// Enumerates the `ℓ(r) x ℓ(q)` matrices over `N_0` with row sums `r` and
/// column sums `q`, calling `emit` with the partial-sum mask of the
/// row-by-row concatenation of their nonzero entries.
pub fn enumerate_tables(r: &[usize], q: &[usize], mut emit: impl FnMut(u32)) {
    let n: usize = r.iter().sum();
    debug_assert_eq!(n, q.iter().sum::<usize>());
    if n == 0 {
        emit(0);
        return;
    }
    let mut row_suffix = vec![0usize; r.len() + 1];
    for i in (0..r.len()).rev() {
        row_suffix[i] = row_suffix[i + 1] + r[i];
    }
    let mut st = TableState {
        r,
        n,
        rows: r.len(),
        cols: q.len(),
        col_rem: q.to_vec(),
        row_suffix,
    };
    st.rec(0, 0, r[0], 0, 0, &mut emit);
}

struct TableState<'a> {
    r: &'a [usize],
    n: usize,
    rows: usize,
    cols: usize,
    col_rem: Vec<usize>,
    row_suffix: Vec<usize>,
}

impl TableState<'_> {
    fn rec(&mut self, i: usize, j: usize, row_rem: usize, pos: usize, mask: u32, emit: &mut impl FnMut(u32)) {
        if i == self.rows {
            emit(mask);
            return;
        }
        let last_col = j + 1 == self.cols;
        let col_after: usize = self.col_rem[j + 1..].iter().sum();
        let rows_after = self.row_suffix[i + 1];
        let cj = self.col_rem[j];
        // what is left in this row must fit in later columns, and what is
        // left in this column must fit in later rows
        let lo = row_rem.saturating_sub(col_after).max(cj.saturating_sub(rows_after));
        let hi = row_rem.min(cj);
        if lo > hi {
            return;
        }
        for v in lo..=hi {
            if last_col && v != row_rem {
                continue;
            }
            self.col_rem[j] -= v;
            let npos = pos + v;
            let nmask = if v > 0 && npos < self.n {
                mask | 1 << (npos - 1)
            } else {
                mask
            };
            if last_col {
                let next_row = if i + 1 < self.rows { self.r[i + 1] } else { 0 };
                self.rec(i + 1, 0, next_row, npos, nmask, emit);
            } else {
                self.rec(i, j + 1, row_rem - v, npos, nmask, emit);
            }
            self.col_rem[j] += v;
        }
    }
}

/// `N^s_{r,q}` for every `s` with a nonzero count.
pub fn structure_constants(r: &Composition, q: &Composition) -> Result<BTreeMap<Composition, u64>> {
    let n = r.n();
    if q.n() != n {
        return Err(Error::DegreeMismatch {
            expected: n,
            found: q.n(),
        });
    }
    let mut counts: HashMap<u32, u64> = HashMap::new();
    enumerate_tables(r.parts(), q.parts(), |m| *counts.entry(m).or_insert(0) += 1);
    Ok(counts
        .into_iter()
        .map(|(m, c)| (Composition::from_mask(n, m), c))
        .collect())
}

/// Constants by mask, for degrees above [`TABLE_MAX_N`].
pub(crate) fn pair_constants(n: usize, r: u32, q: u32) -> Arc<Vec<(u32, u32)>> {
    type PairCache = Mutex<HashMap<(usize, u32, u32), Arc<Vec<(u32, u32)>>>>;
    static CACHE: OnceLock<PairCache> = OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    if let Some(v) = cache.lock().unwrap().get(&(n, r, q)) {
        return v.clone();
    }
    let rc = Composition::from_mask(n, r);
    let qc = Composition::from_mask(n, q);
    let mut counts: HashMap<u32, u32> = HashMap::new();
    enumerate_tables(rc.parts(), qc.parts(), |m| *counts.entry(m).or_insert(0) += 1);
    let mut v: Vec<(u32, u32)> = counts.into_iter().collect();
    v.sort_unstable();
    let v = Arc::new(v);
    // a racing insert computes the same value, so either copy is fine
    cache.lock().unwrap().entry((n, r, q)).or_insert(v).clone()
}

/// The full multiplication table of `D_n` in the lexicographic basis,
/// stored row-compressed: the terms of `Ξ^{b_i} Ξ^{b_j}` are
/// `terms[offsets[i*d+j]..offsets[i*d+j+1]]` as `(k, N^{b_k}_{b_i,b_j})`.
#[derive(Debug)]
pub struct StructureTable {
    n: usize,
    basis: Vec<Composition>,
    index: HashMap<Composition, usize>,
    mask_to_index: Vec<u32>,
    offsets: Vec<usize>,
    terms: Vec<(u32, u32)>,
}

impl StructureTable {
    /// Builds the table (prefer [`structure_table`], which caches).
    pub fn build(n: usize) -> Result<Self> {
        if n > TABLE_MAX_N {
            return Err(Error::BoundExceeded { n, bound: TABLE_MAX_N });
        }
        let basis = compositions(n);
        let d = basis.len();
        let index: HashMap<Composition, usize> =
            basis.iter().cloned().enumerate().map(|(i, c)| (c, i)).collect();
        let mut mask_to_index = vec![0u32; d];
        for (i, c) in basis.iter().enumerate() {
            mask_to_index[c.to_mask() as usize] = i as u32;
        }
        let rows: Vec<Vec<Vec<(u32, u32)>>> = basis
            .par_iter()
            .map(|r| {
                let mut counts = vec![0u32; d];
                let mut touched = Vec::new();
                basis
                    .iter()
                    .map(|q| {
                        enumerate_tables(r.parts(), q.parts(), |m| {
                            let k = mask_to_index[m as usize] as usize;
                            if counts[k] == 0 {
                                touched.push(k);
                            }
                            counts[k] += 1;
                        });
                        touched.sort_unstable();
                        let out = touched
                            .drain(..)
                            .map(|k| {
                                let c = counts[k];
                                counts[k] = 0;
                                (k as u32, c)
                            })
                            .collect();
                        out
                    })
                    .collect()
            })
            .collect();
        let mut offsets = Vec::with_capacity(d * d + 1);
        let mut terms = Vec::new();
        offsets.push(0);
        for row in rows {
            for cell in row {
                terms.extend(cell);
                offsets.push(terms.len());
            }
        }
        Ok(StructureTable {
            n,
            basis,
            index,
            mask_to_index,
            offsets,
            terms,
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[Composition] {
        &self.basis
    }

    pub fn index_of(&self, q: &Composition) -> Option<usize> {
        self.index.get(q).copied()
    }

    pub fn index_of_mask(&self, m: u32) -> usize {
        self.mask_to_index[m as usize] as usize
    }

    /// Terms `(k, N)` of `Ξ^{b_i} Ξ^{b_j}`.
    #[inline]
    pub fn product(&self, i: usize, j: usize) -> &[(u32, u32)] {
        let c = i * self.basis.len() + j;
        &self.terms[self.offsets[c]..self.offsets[c + 1]]
    }

    /// Number of stored nonzero constants.
    pub fn nnz(&self) -> usize {
        self.terms.len()
    }
}

/// The cached table for `D_n`; built once per process and shared.
pub fn structure_table(n: usize) -> Result<Arc<StructureTable>> {
    type Slot = Arc<OnceLock<Arc<StructureTable>>>;
    static TABLES: OnceLock<Mutex<HashMap<usize, Slot>>> = OnceLock::new();
    if n > TABLE_MAX_N {
        return Err(Error::BoundExceeded { n, bound: TABLE_MAX_N });
    }
    let slot = TABLES
        .get_or_init(Default::default)
        .lock()
        .unwrap()
        .entry(n)
        .or_default()
        .clone();
    // the map lock is released here; concurrent callers for the same n wait
    // on the slot instead of rebuilding
    Ok(slot
        .get_or_init(|| Arc::new(StructureTable::build(n).expect("n within bound")))
        .clone())
}
