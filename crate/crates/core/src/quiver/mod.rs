//! Ext quivers of `D_n(F)`, separated quivers and representation type.

mod conjecture;
mod dynkin;
mod reptype;

use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, Mutex, OnceLock};

use rayon::prelude::*;
use serde::Serialize;

use crate::algebra::Algebra;
use crate::combinatorics::{p_regular_partitions, Partition};
use crate::error::{Error, Result};
use crate::field::{Characteristic, Field};
use crate::idempotents::{orthogonal_idempotent_set, IdempotentSet, Peirce};

pub use conjecture::{conjecture_scan, coprime_to, ConjectureReport, LoopRow, OffDiagonalFinding};
pub use dynkin::{dynkin_classify, ComponentClass, DynkinType, MultiGraph};
pub use reptype::{
    rep_type, rep_type_two_nilpotent, rep_type_with_bound, theorem_verdict, Evidence, RepType,
    RepTypeReport, CERTIFICATE_MAX_N,
};

/// A quiver with labelled vertices; `arrows[i][j]` counts arrows
/// `vertices[i] → vertices[j]`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Quiver<V = Partition> {
    pub vertices: Vec<V>,
    pub arrows: Vec<Vec<usize>>,
}

impl<V: Clone + PartialEq> Quiver<V> {
    pub fn new(vertices: Vec<V>, arrows: Vec<Vec<usize>>) -> Result<Self> {
        let k = vertices.len();
        if arrows.len() != k || arrows.iter().any(|r| r.len() != k) {
            return Err(Error::DimensionMismatch(format!(
                "arrow matrix must be {k}x{k}"
            )));
        }
        Ok(Quiver { vertices, arrows })
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn index_of(&self, v: &V) -> Option<usize> {
        self.vertices.iter().position(|x| x == v)
    }

    /// Number of arrows `a → b`; zero if either vertex is missing.
    pub fn arrows_between(&self, a: &V, b: &V) -> usize {
        match (self.index_of(a), self.index_of(b)) {
            (Some(i), Some(j)) => self.arrows[i][j],
            _ => 0,
        }
    }

    pub fn loops(&self, v: &V) -> usize {
        self.arrows_between(v, v)
    }

    pub fn total_arrows(&self) -> usize {
        self.arrows.iter().flatten().sum()
    }
}

impl<V: fmt::Display> Quiver<V> {
    /// Graphviz digraph; multiplicity `k` becomes `k` parallel edges.
    pub fn to_dot(&self, name: &str) -> String {
        let mut s = format!("digraph {name} {{\n");
        for v in &self.vertices {
            s.push_str(&format!("  \"{v}\";\n"));
        }
        for (i, row) in self.arrows.iter().enumerate() {
            for (j, &m) in row.iter().enumerate() {
                for _ in 0..m {
                    s.push_str(&format!(
                        "  \"{}\" -> \"{}\";\n",
                        self.vertices[i], self.vertices[j]
                    ));
                }
            }
        }
        s.push_str("}\n");
        s
    }

    /// `{vertices: [...], arrows: [[...]]}` with vertex names as strings.
    pub fn to_json_value(&self) -> serde_json::Value {
        serde_json::json!({
            "vertices": self.vertices.iter().map(|v| v.to_string()).collect::<Vec<_>>(),
            "arrows": self.arrows,
        })
    }
}

/// Vertex of a separated quiver: `v` or `v′`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct SepVertex<V> {
    pub base: V,
    pub primed: bool,
}

impl<V: fmt::Display> fmt::Display for SepVertex<V> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.primed {
            write!(f, "{}'", self.base)
        } else {
            write!(f, "{}", self.base)
        }
    }
}

/// Vertices `v_1, …, v_r, v_1′, …, v_r′` with `m` arrows `i → j′` for every
/// `m` arrows `i → j` (loops included).
pub fn separated_quiver<V: Clone>(q: &Quiver<V>) -> Quiver<SepVertex<V>> {
    let r = q.vertices.len();
    let mut vertices: Vec<SepVertex<V>> = q
        .vertices
        .iter()
        .map(|v| SepVertex {
            base: v.clone(),
            primed: false,
        })
        .collect();
    vertices.extend(q.vertices.iter().map(|v| SepVertex {
        base: v.clone(),
        primed: true,
    }));
    let mut arrows = vec![vec![0; 2 * r]; 2 * r];
    for i in 0..r {
        for j in 0..r {
            arrows[i][r + j] = q.arrows[i][j];
        }
    }
    Quiver { vertices, arrows }
}

/// `dim e_μ Rad e_λ − dim e_μ Rad² e_λ`, the number of arrows `λ → μ`.
pub fn ext_dim<F: Field>(peirce: &Peirce<F>, lambda: &Partition, mu: &Partition) -> Result<usize> {
    let a = peirce.corner_dim(mu, lambda, Some(peirce.radical()))?;
    let b = peirce.corner_dim(mu, lambda, Some(peirce.radical_squared()))?;
    Ok(a - b)
}

/// Ext quiver from precomputed Peirce data.
pub fn ext_quiver_from_peirce<F: Field>(peirce: &Peirce<F>) -> Quiver {
    let labels = peirce.labels().to_vec();
    let arrows: Vec<Vec<usize>> = labels
        .par_iter()
        .map(|lambda| {
            let rad = peirce.right_images(lambda, Some(peirce.radical())).unwrap();
            let rad2 = peirce
                .right_images(lambda, Some(peirce.radical_squared()))
                .unwrap();
            labels
                .iter()
                .map(|mu| {
                    peirce.left_dim(mu, &rad).unwrap() - peirce.left_dim(mu, &rad2).unwrap()
                })
                .collect()
        })
        .collect();
    Quiver {
        vertices: labels,
        arrows,
    }
}

/// Ext quiver for a given idempotent set.
pub fn ext_quiver_for<F: Field>(idems: &IdempotentSet<F>) -> Result<Quiver> {
    let alg = Algebra::new(idems.n(), idems.field())?;
    Ok(ext_quiver_from_peirce(&Peirce::new(&alg, idems)))
}

/// The Ext quiver `Q_{n,p}` of `D_n(F)`; vertices are the p-regular
/// partitions in ascending lexicographic order.
pub fn ext_quiver<F: Field>(n: usize, field: &F) -> Result<Quiver> {
    ext_quiver_for(&orthogonal_idempotent_set(n, field)?)
}

type QuiverCell = Arc<OnceLock<Arc<Quiver>>>;

/// Memoized `Q_{n,p}` for a runtime characteristic.
pub fn ext_quiver_cached(n: usize, ch: Characteristic) -> Result<Arc<Quiver>> {
    static CACHE: OnceLock<Mutex<HashMap<(usize, Characteristic), QuiverCell>>> = OnceLock::new();
    let cell = CACHE
        .get_or_init(Default::default)
        .lock()
        .unwrap()
        .entry((n, ch))
        .or_default()
        .clone();
    if let Some(q) = cell.get() {
        return Ok(q.clone());
    }
    let q = Arc::new(crate::with_field!(ch, |f| ext_quiver(n, &f))?);
    Ok(cell.get_or_init(|| q).clone())
}

/// The arrows predicted for `p > n`: `λ → μ` exactly when `μ` comes from
/// `λ` by replacing two parts `x ≠ y` with `x + y`.
pub fn ordinary_quiver(n: usize) -> Quiver {
    let vertices = p_regular_partitions(n, Characteristic::Zero);
    let k = vertices.len();
    let mut arrows = vec![vec![0; k]; k];
    for (i, l) in vertices.iter().enumerate() {
        for mu in merge_two_distinct(l) {
            let j = vertices.binary_search(&mu).unwrap();
            arrows[i][j] = 1;
        }
    }
    Quiver { vertices, arrows }
}

fn merge_two_distinct(l: &Partition) -> Vec<Partition> {
    let parts = l.parts();
    let mut out = Vec::new();
    for a in 0..parts.len() {
        for b in a + 1..parts.len() {
            if parts[a] == parts[b] {
                continue;
            }
            let mut v: Vec<usize> = parts
                .iter()
                .enumerate()
                .filter(|&(k, _)| k != a && k != b)
                .map(|(_, &x)| x)
                .collect();
            v.push(parts[a] + parts[b]);
            let mu = Partition::from_parts(v).unwrap();
            if !out.contains(&mu) {
                out.push(mu);
            }
        }
    }
    out
}
