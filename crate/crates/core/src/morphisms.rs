//! The surjections `Δ_s : D_n → D_{n-s}` and the checks built on them.

use std::collections::BTreeMap;

use rayon::prelude::*;
use serde::Serialize;

use crate::algebra::{young_character, Algebra, DescentElement};
use crate::combinatorics::{
    compositions, concat_sharp, p_regular_partitions, remove_from_part, Composition,
    Partition,
};
use crate::error::{Error, Result};
use crate::field::{Characteristic, Field};
use crate::idempotents::{orthogonal_idempotent_set, IdempotentSet};
use crate::linalg::Subspace;
use crate::quiver::ext_quiver_cached;

/// `Δ_s(Ξ^q) = Σ_{q_i ≥ s} Ξ^{q^{(i)}}` on a single basis element.
pub fn delta_basis(q: &Composition, s: usize) -> Vec<Composition> {
    q.parts()
        .iter()
        .enumerate()
        .filter(|&(_, &x)| x >= s)
        .map(|(i, _)| remove_from_part(q, i, s))
        .collect()
}

/// `Δ_s` extended linearly; the result lives in `D_{n-s}`.
pub fn delta_s<F: Field>(x: &DescentElement<F>, s: usize) -> Result<DescentElement<F>> {
    let n = x.n();
    if s == 0 || s > n {
        return Err(Error::StepOutOfRange { n, s });
    }
    let f = x.field();
    let mut acc: BTreeMap<Composition, F::Elem> = BTreeMap::new();
    for (q, c) in x.terms() {
        for r in delta_basis(q, s) {
            let e = acc.entry(r).or_insert_with(|| f.zero());
            *e = f.add(e, c);
        }
    }
    DescentElement::from_terms(n - s, f, acc)
}

/// Outcome of one named check, with human-readable witnesses of failure.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CheckReport {
    pub check: String,
    pub status: Status,
    pub witnesses: Vec<String>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

impl CheckReport {
    pub fn new(check: impl Into<String>, witnesses: Vec<String>) -> Self {
        CheckReport {
            check: check.into(),
            status: if witnesses.is_empty() {
                Status::Pass
            } else {
                Status::Fail
            },
            witnesses,
        }
    }

    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BgrReport {
    pub n: usize,
    pub s: usize,
    pub p: Characteristic,
    pub pairs_checked: usize,
    /// `(r, q)` with `Δ_s(Ξ^r Ξ^q) ≠ Δ_s(Ξ^r) Δ_s(Ξ^q)`.
    pub failures: Vec<(Composition, Composition)>,
    pub image_rank: usize,
    pub target_dim: usize,
}

impl BgrReport {
    pub fn homomorphism(&self) -> bool {
        self.failures.is_empty()
    }

    pub fn surjective(&self) -> bool {
        self.image_rank == self.target_dim
    }

    pub fn passed(&self) -> bool {
        self.homomorphism() && self.surjective()
    }

    pub fn checks(&self) -> Vec<CheckReport> {
        vec![
            CheckReport::new(
                "homomorphism",
                self.failures
                    .iter()
                    .map(|(r, q)| format!("r={r} q={q}"))
                    .collect(),
            ),
            CheckReport::new(
                "surjectivity",
                if self.surjective() {
                    vec![]
                } else {
                    vec![format!("rank {} < {}", self.image_rank, self.target_dim)]
                },
            ),
        ]
    }
}

/// Multiplicativity of `Δ_s` on every pair of basis elements and the rank
/// of its image.
pub fn verify_bgr_homomorphism<F: Field>(n: usize, s: usize, field: &F) -> Result<BgrReport> {
    if s == 0 || s > n {
        return Err(Error::StepOutOfRange { n, s });
    }
    let basis = DescentElement::basis(n, field);
    let images = basis
        .iter()
        .map(|x| delta_s(x, s))
        .collect::<Result<Vec<_>>>()?;
    let pairs: Vec<(usize, usize)> = (0..basis.len())
        .flat_map(|i| (0..basis.len()).map(move |j| (i, j)))
        .collect();
    let failures = pairs
        .par_iter()
        .filter_map(|&(i, j)| {
            let lhs = delta_s(&basis[i].multiply(&basis[j]).ok()?, s).ok()?;
            let rhs = images[i].multiply(&images[j]).ok()?;
            (lhs != rhs).then(|| {
                let r = basis[i].terms().keys().next().unwrap().clone();
                let q = basis[j].terms().keys().next().unwrap().clone();
                (r, q)
            })
        })
        .collect();
    let target = compositions(n - s);
    let index: BTreeMap<&Composition, usize> = target.iter().enumerate().map(|(i, q)| (q, i)).collect();
    let dense = images.iter().map(|x| {
        let mut v = vec![field.zero(); target.len()];
        for (q, c) in x.terms() {
            v[index[q]] = c.clone();
        }
        v
    });
    let image_rank = Subspace::span(field, target.len(), dense).dim();
    Ok(BgrReport {
        n,
        s,
        p: field.characteristic(),
        pairs_checked: pairs.len(),
        failures,
        image_rank,
        target_dim: target.len(),
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PullbackReport {
    pub mu: Partition,
    pub s: usize,
    pub n: usize,
    pub p: Characteristic,
    pub image: Partition,
    /// Compositions where the eigenvalues differ.
    pub mismatches: Vec<Composition>,
}

impl PullbackReport {
    pub fn passed(&self) -> bool {
        self.mismatches.is_empty()
    }

    pub fn to_check(&self) -> CheckReport {
        CheckReport::new(
            format!("pullback {} -> {}", self.mu, self.image),
            self.mismatches.iter().map(|q| format!("q={q}")).collect(),
        )
    }
}

fn reduce(v: u64, ch: Characteristic) -> u64 {
    match ch.p() {
        Some(p) => v % p,
        None => v,
    }
}

/// Compares, for every `q ⊨ n`, the eigenvalue `Σ_{q_i ≥ s} φ^{q^{(i)}}(μ)`
/// of `Ξ^q` on the pulled-back simple with `φ^q(μ^{#s})`.
pub fn pullback_simple_check(mu: &Partition, s: usize, n: usize, ch: Characteristic) -> Result<PullbackReport> {
    if s == 0 || s > n {
        return Err(Error::StepOutOfRange { n, s });
    }
    if mu.n() + s != n {
        return Err(Error::DegreeMismatch {
            expected: n - s,
            found: mu.n(),
        });
    }
    if !mu.is_regular(ch) {
        return Err(Error::NotRegular(mu.to_string(), ch));
    }
    let image = concat_sharp(mu, s, ch);
    let mut mismatches = Vec::new();
    for q in compositions(n) {
        let mut lhs = 0u64;
        for r in delta_basis(&q, s) {
            lhs += young_character(&r, mu)?;
        }
        let rhs = young_character(&q, &image)?;
        if reduce(lhs, ch) != reduce(rhs, ch) {
            mismatches.push(q);
        }
    }
    Ok(PullbackReport {
        mu: mu.clone(),
        s,
        n,
        p: ch,
        image,
        mismatches,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DeltaIdempotentReport {
    pub n: usize,
    pub s: usize,
    pub p: Characteristic,
    /// `Υ = {μ^{#s}}`, keyed by `μ`.
    pub upsilon: BTreeMap<Partition, Partition>,
    /// `λ ∉ Υ` with `Δ_s(e_λ) ≠ 0`.
    pub nonzero_outside: Vec<Partition>,
    /// `λ ∈ Υ` with `Δ_s(e_λ) = 0`.
    pub zero_inside: Vec<Partition>,
    pub idempotent: bool,
    pub orthogonal: bool,
    pub complete: bool,
    pub theta_images: bool,
    pub primitive: bool,
}

impl DeltaIdempotentReport {
    pub fn passed(&self) -> bool {
        self.nonzero_outside.is_empty()
            && self.zero_inside.is_empty()
            && self.idempotent
            && self.orthogonal
            && self.complete
            && self.theta_images
            && self.primitive
    }

    pub fn to_check(&self) -> CheckReport {
        let mut w: Vec<String> = self
            .nonzero_outside
            .iter()
            .map(|l| format!("nonzero image outside the image set: {l}"))
            .chain(self.zero_inside.iter().map(|l| format!("zero image: {l}")))
            .collect();
        for (ok, what) in [
            (self.idempotent, "images not idempotent"),
            (self.orthogonal, "images not orthogonal"),
            (self.complete, "images incomplete"),
            (self.theta_images, "wrong theta images"),
            (self.primitive, "images not primitive"),
        ] {
            if !ok {
                w.push(what.to_string());
            }
        }
        CheckReport::new("idempotent_image", w)
    }
}

/// Applies `Δ_s` to a complete set of primitive idempotents of `D_n` and
/// checks which images vanish and that the rest form such a set for
/// `D_{n-s}`, relabelled through `μ ↦ μ^{#s}`.
pub fn delta_idempotent_check_for<F: Field>(idems: &IdempotentSet<F>, s: usize) -> Result<DeltaIdempotentReport> {
    let n = idems.n();
    if s == 0 || s > n {
        return Err(Error::StepOutOfRange { n, s });
    }
    let field = idems.field();
    let ch = field.characteristic();
    let upsilon: BTreeMap<Partition, Partition> = p_regular_partitions(n - s, ch)
        .into_iter()
        .map(|mu| {
            let l = concat_sharp(&mu, s, ch);
            (mu, l)
        })
        .collect();
    let back: BTreeMap<&Partition, &Partition> = upsilon.iter().map(|(m, l)| (l, m)).collect();
    let mut nonzero_outside = Vec::new();
    let mut zero_inside = Vec::new();
    let mut images = BTreeMap::new();
    for (l, e) in idems.members() {
        let f = delta_s(e, s)?;
        match (back.get(l), f.is_zero()) {
            (None, false) => nonzero_outside.push(l.clone()),
            (Some(_), true) => zero_inside.push(l.clone()),
            (Some(&mu), false) => {
                images.insert(mu.clone(), f);
            }
            (None, true) => {}
        }
    }
    let rep = IdempotentSet::from_members(n - s, field, images).verify()?;
    Ok(DeltaIdempotentReport {
        n,
        s,
        p: ch,
        upsilon,
        nonzero_outside,
        zero_inside,
        idempotent: rep.idempotent,
        orthogonal: rep.orthogonal,
        complete: rep.complete,
        theta_images: rep.theta_images,
        primitive: rep.primitive,
    })
}

/// [`delta_idempotent_check_for`] on the standard idempotent set.
pub fn delta_idempotent_check(n: usize, s: usize, ch: Characteristic) -> Result<DeltaIdempotentReport> {
    crate::with_field!(ch, |f| delta_idempotent_check_for(
        &orthogonal_idempotent_set(n, &f)?,
        s
    ))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MissingArrow {
    pub from: Partition,
    pub to: Partition,
    pub expected: usize,
    pub found: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EmbeddingReport {
    pub n: usize,
    pub s: usize,
    pub p: Characteristic,
    pub vertex_map: BTreeMap<Partition, Partition>,
    pub arrows_checked: usize,
    pub missing: Vec<MissingArrow>,
}

impl EmbeddingReport {
    pub fn passed(&self) -> bool {
        self.missing.is_empty()
    }

    pub fn to_check(&self) -> CheckReport {
        CheckReport::new(
            "subquiver_embedding",
            self.missing
                .iter()
                .map(|m| format!("{} -> {}: {} < {}", m.from, m.to, m.found, m.expected))
                .collect(),
        )
    }
}

/// Every arrow `μ → ν` of `Q_{n-s,p}` appears, with at least the same
/// multiplicity, as `μ^{#s} → ν^{#s}` in `Q_{n,p}`.
pub fn subquiver_embedding_check(n: usize, s: usize, ch: Characteristic) -> Result<EmbeddingReport> {
    if s == 0 || s > n {
        return Err(Error::StepOutOfRange { n, s });
    }
    let small = ext_quiver_cached(n - s, ch)?;
    let big = ext_quiver_cached(n, ch)?;
    let vertex_map: BTreeMap<Partition, Partition> = small
        .vertices
        .iter()
        .map(|m| (m.clone(), concat_sharp(m, s, ch)))
        .collect();
    let mut missing = Vec::new();
    let mut checked = 0;
    for (i, a) in small.vertices.iter().enumerate() {
        for (j, b) in small.vertices.iter().enumerate() {
            let m = small.arrows[i][j];
            if m == 0 {
                continue;
            }
            checked += 1;
            let found = big.arrows_between(&vertex_map[a], &vertex_map[b]);
            if found < m {
                missing.push(MissingArrow {
                    from: vertex_map[a].clone(),
                    to: vertex_map[b].clone(),
                    expected: m,
                    found,
                });
            }
        }
    }
    Ok(EmbeddingReport {
        n,
        s,
        p: ch,
        vertex_map,
        arrows_checked: checked,
        missing,
    })
}

/// Comparison of `Δ_t ∘ Δ_s` with `Δ_{s+t}` on the basis of `D_n`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CompositionLawReport {
    pub n: usize,
    pub s: usize,
    pub t: usize,
    pub agreeing: usize,
    pub differing: Vec<Composition>,
}

/// Measures `Δ_t(Δ_s(Ξ^q))` against `Δ_{s+t}(Ξ^q)` over `Z`, recording
/// every `q` where they differ.
pub fn composition_law(n: usize, s: usize, t: usize) -> Result<CompositionLawReport> {
    if s == 0 || t == 0 || s + t > n {
        return Err(Error::StepOutOfRange { n, s: s + t });
    }
    let count = |v: Vec<Composition>| {
        let mut m: BTreeMap<Composition, usize> = BTreeMap::new();
        for c in v {
            *m.entry(c).or_default() += 1;
        }
        m
    };
    let mut agreeing = 0;
    let mut differing = Vec::new();
    for q in compositions(n) {
        let two = count(
            delta_basis(&q, s)
                .iter()
                .flat_map(|r| delta_basis(r, t))
                .collect(),
        );
        let one = count(delta_basis(&q, s + t));
        if one == two {
            agreeing += 1;
        } else {
            differing.push(q);
        }
    }
    Ok(CompositionLawReport {
        n,
        s,
        t,
        agreeing,
        differing,
    })
}

/// Dense check that `Δ_s` maps the identity of `D_n` to that of `D_{n-s}`.
pub fn preserves_identity<F: Field>(n: usize, s: usize, field: &F) -> Result<bool> {
    let alg = Algebra::new(n - s, field)?;
    let img = delta_s(&DescentElement::identity(n, field), s)?;
    Ok(img.to_dense(&alg) == alg.one())
}
