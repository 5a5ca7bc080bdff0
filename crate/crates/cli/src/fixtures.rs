//! Regression fixtures bundled with the binary.

use std::collections::BTreeMap;
use std::io::Write;

use descent_core::algebra::theta;
use descent_core::cartan::CartanData;
use descent_core::combinatorics::{p_regular_partitions, Partition};
use descent_core::idempotents::{class_indicator, corner_algebra};
use descent_core::quiver::{conjecture_scan, ext_quiver_cached, rep_type, RepType};
use descent_core::{with_field, Algebra, Characteristic, DescentElement, Field, Subspace};
use rand::{Rng, SeedableRng};
use serde::Deserialize;

use crate::parse::parse_element;
use crate::{CliError, Opts, Outcome};

const CARTAN: &str = include_str!("../fixtures/cartan.json");
const QUIVERS: &str = include_str!("../fixtures/quivers.json");
const IDEMPOTENTS: &str = include_str!("../fixtures/idempotents.json");
const CORNER: &str = include_str!("../fixtures/corner.json");
const LOOPS: &str = include_str!("../fixtures/loops.json");
const TYPES: &str = include_str!("../fixtures/types.json");

#[derive(Deserialize)]
struct File<T> {
    fixtures: Vec<T>,
}

fn characteristic(c: u32) -> Characteristic {
    if c == 0 {
        Characteristic::Zero
    } else {
        Characteristic::Prime(c)
    }
}

#[derive(Deserialize)]
struct CartanFixture {
    name: String,
    n: usize,
    char: u32,
    matrix: String,
    rows: Vec<Vec<i64>>,
}

#[derive(Deserialize)]
struct QuiverFixture {
    name: String,
    n: usize,
    char: u32,
    arrows: Vec<(String, String, usize)>,
}

#[derive(Deserialize)]
struct Identity {
    product: Vec<String>,
    equals: String,
}

#[derive(Deserialize)]
struct IdempotentFixture {
    name: String,
    n: usize,
    char: u32,
    elements: BTreeMap<String, String>,
    idempotents: BTreeMap<String, String>,
    radical: Vec<String>,
    identities: Vec<Identity>,
}

#[derive(Deserialize)]
struct CornerFixture {
    name: String,
    n: usize,
    char: u32,
    elements: BTreeMap<String, String>,
    dim: usize,
    table: Vec<(String, String, String)>,
}

#[derive(Deserialize)]
struct LoopFixture {
    name: String,
    char: u32,
    n_max: usize,
    loops: BTreeMap<String, usize>,
    zero_when_coprime: bool,
}

#[derive(Deserialize)]
struct TypeFixture {
    name: String,
    n: usize,
    char: u32,
    verdict: String,
    #[serde(default)]
    certificate: Option<bool>,
}

/// Result of a single fixture: `None` when skipped, otherwise the list of
/// differences (empty on success).
type Check = Option<Vec<String>>;

fn parse<T: for<'a> Deserialize<'a>>(s: &str) -> Vec<T> {
    serde_json::from_str::<File<T>>(s)
        .expect("bundled fixture files are valid")
        .fixtures
}

fn matrix_diff(want: &[Vec<i64>], got: &[Vec<i64>]) -> Vec<String> {
    if want.len() != got.len() || want.iter().zip(got).any(|(a, b)| a.len() != b.len()) {
        return vec![format!("shape differs: expected {want:?}, got {got:?}")];
    }
    let mut out = Vec::new();
    for (i, (a, b)) in want.iter().zip(got).enumerate() {
        for (j, (x, y)) in a.iter().zip(b).enumerate() {
            if x != y {
                out.push(format!("entry ({i},{j}): expected {x}, got {y}"));
            }
        }
    }
    out
}

fn cartan(f: &CartanFixture) -> Result<Vec<String>, CliError> {
    let data = CartanData::compute(f.n, characteristic(f.char))?;
    let got = match f.matrix.as_str() {
        "c" => &data.c,
        "c_tilde" => &data.c_tilde,
        m => return Err(CliError::Failed(format!("unknown matrix {m}"))),
    };
    Ok(matrix_diff(&f.rows, got))
}

fn quiver(f: &QuiverFixture) -> Result<Vec<String>, CliError> {
    let ch = characteristic(f.char);
    let q = ext_quiver_cached(f.n, ch)?;
    let labels = p_regular_partitions(f.n, ch);
    let mut want = vec![vec![0usize; labels.len()]; labels.len()];
    for (a, b, m) in &f.arrows {
        let idx = |s: &str| -> Result<usize, CliError> {
            let p: Partition = s.parse()?;
            labels
                .binary_search(&p)
                .map_err(|_| CliError::Failed(format!("{s} is not a vertex")))
        };
        want[idx(a)?][idx(b)?] = *m;
    }
    let mut out = Vec::new();
    for (i, a) in labels.iter().enumerate() {
        for (j, b) in labels.iter().enumerate() {
            if want[i][j] != q.arrows[i][j] {
                out.push(format!("{a} -> {b}: expected {}, got {}", want[i][j], q.arrows[i][j]));
            }
        }
    }
    Ok(out)
}

fn named<F: Field>(
    elements: &BTreeMap<String, String>,
    n: usize,
    field: &F,
) -> Result<BTreeMap<String, DescentElement<F>>, CliError> {
    elements
        .iter()
        .map(|(k, v)| Ok((k.clone(), parse_element(v, field, Some(n))?)))
        .collect()
}

fn idempotents_with<F: Field>(f: &IdempotentFixture, field: &F) -> Result<Vec<String>, CliError> {
    let alg = Algebra::new(f.n, field)?;
    let el = named(&f.elements, f.n, field)?;
    let get = |k: &str| {
        el.get(k)
            .cloned()
            .ok_or_else(|| CliError::Failed(format!("undefined element {k}")))
    };
    let rad = descent_core::algebra::radical_subspace(&alg);
    let full = Subspace::full(field, alg.dim());
    let mut out = Vec::new();
    for (label, name) in &f.idempotents {
        let e = get(name)?;
        let lambda: Partition = label.parse()?;
        if e.multiply(&e)? != e {
            out.push(format!("{name} is not idempotent"));
        }
        if theta(&e) != class_indicator(&lambda, f.n, field) {
            out.push(format!("theta({name}) is not the indicator of the class of {lambda}"));
        }
        let d = e.to_dense(&alg);
        if alg.sandwich(&d, &full, &d).dim() - alg.sandwich(&d, &rad, &d).dim() != 1 {
            out.push(format!("{name} is not primitive"));
        }
    }
    for name in &f.radical {
        if !rad.contains(&get(name)?.to_dense(&alg)) {
            out.push(format!("{name} is not in the radical"));
        }
    }
    for id in &f.identities {
        let mut acc = DescentElement::identity(f.n, field);
        for k in &id.product {
            acc = acc.multiply(&get(k)?)?;
        }
        if acc != get(&id.equals)? {
            out.push(format!("{} = {acc}, expected {}", id.product.join("*"), id.equals));
        }
    }
    Ok(out)
}

fn corner_with<F: Field>(f: &CornerFixture, field: &F) -> Result<Vec<String>, CliError> {
    let mut el = named(&f.elements, f.n, field)?;
    let get = |el: &BTreeMap<String, DescentElement<F>>, k: &str| {
        el.get(k)
            .cloned()
            .ok_or_else(|| CliError::Failed(format!("undefined element {k}")))
    };
    let (u, v) = (get(&el, "u")?, get(&el, "v")?);
    el.insert("uu".into(), u.multiply(&u)?);
    el.insert("uv".into(), u.multiply(&v)?);
    el.insert("0".into(), DescentElement::zero(f.n, field));
    let e = get(&el, "e")?;
    let mut out = Vec::new();
    let corner = corner_algebra(&e)?;
    if corner.dim() != f.dim {
        out.push(format!("dim eDe = {}, expected {}", corner.dim(), f.dim));
    }
    let alg = Algebra::new(f.n, field)?;
    let basis: Vec<_> = ["e", "u", "v", "uu", "uv"]
        .iter()
        .map(|k| get(&el, k))
        .collect::<Result<_, _>>()?;
    for (k, b) in ["e", "u", "v", "uu", "uv"].iter().zip(&basis) {
        if !corner.contains(b) {
            out.push(format!("{k} is not in eDe"));
        }
    }
    let span = Subspace::span(field, alg.dim(), basis.iter().map(|b| b.to_dense(&alg)));
    if span.dim() != basis.len() {
        out.push(format!("e, u, v, u^2, uv span only {} dimensions", span.dim()));
    }
    for (a, b, c) in &f.table {
        let got = get(&el, a)?.multiply(&get(&el, b)?)?;
        if got != get(&el, c)? {
            out.push(format!("{a}*{b} = {got}, expected {c}"));
        }
    }
    Ok(out)
}

fn loops(f: &LoopFixture, n_max: usize) -> Result<Vec<String>, CliError> {
    let ch = characteristic(f.char);
    let limit = n_max.min(f.n_max);
    let r = conjecture_scan(limit, ch)?;
    let mut out = Vec::new();
    for (label, &want) in &f.loops {
        let l: Partition = label.parse()?;
        if l.n() > limit {
            continue;
        }
        match r.loop_count(&l) {
            Some(got) if got == want => {}
            got => out.push(format!("loops at {l}: expected {want}, got {got:?}")),
        }
    }
    if f.zero_when_coprime {
        for row in r.loops.iter().filter(|r| r.coprime && r.loops > 0) {
            out.push(format!("{} has {} loops with all parts prime to p", row.lambda, row.loops));
        }
    }
    Ok(out)
}

fn types(f: &TypeFixture) -> Result<Vec<String>, CliError> {
    let r = rep_type(f.n, characteristic(f.char))?;
    let want = match f.verdict.as_str() {
        "finite" => RepType::Finite,
        "wild" => RepType::Wild,
        v => return Err(CliError::Failed(format!("unknown verdict {v}"))),
    };
    let mut out = Vec::new();
    if r.verdict != want {
        out.push(format!("verdict {}, expected {want}", r.verdict));
    }
    if let Some(c) = f.certificate {
        if r.evidence.is_certificate() != c {
            out.push(format!("certificate present: {}, expected {c}", r.evidence.is_certificate()));
        }
    }
    Ok(out)
}

/// Associativity on random basis triples of `D_7` over `F_3`.
fn random_associativity(seed: u64) -> Result<Vec<String>, CliError> {
    let f = descent_core::PrimeField::new(3)?;
    let basis = DescentElement::basis(7, &f);
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::new();
    for _ in 0..64 {
        let mut pick = || basis[rng.gen_range(0..basis.len())].clone();
        let (a, b, c) = (pick(), pick(), pick());
        if a.multiply(&b)?.multiply(&c)? != a.multiply(&b.multiply(&c)?)? {
            out.push(format!("({a})({b})({c})"));
        }
    }
    Ok(out)
}

pub fn run(o: &Opts, only: Option<&str>, n_max: usize, out: &mut dyn Write) -> Outcome {
    let selected = |group: &str, name: &str| match only {
        None => true,
        Some(s) => s == group || name.contains(s),
    };
    let mut results: Vec<(String, Check)> = Vec::new();
    let mut push = |name: &str, n: usize, run: &mut dyn FnMut() -> Result<Vec<String>, CliError>| {
        let r = if n > n_max { None } else { Some(run()?) };
        results.push((name.to_string(), r));
        Ok::<_, CliError>(())
    };
    for f in parse::<CartanFixture>(CARTAN) {
        if selected("cartan", &f.name) {
            push(&f.name, f.n, &mut || cartan(&f))?;
        }
    }
    for f in parse::<QuiverFixture>(QUIVERS) {
        if selected("quiver", &f.name) {
            push(&f.name, f.n, &mut || quiver(&f))?;
        }
    }
    for f in parse::<IdempotentFixture>(IDEMPOTENTS) {
        if selected("idempotents", &f.name) {
            push(&f.name, f.n, &mut || {
                with_field!(characteristic(f.char), |fld| idempotents_with(&f, &fld))
            })?;
        }
    }
    for f in parse::<CornerFixture>(CORNER) {
        if selected("corner", &f.name) {
            push(&f.name, f.n, &mut || {
                with_field!(characteristic(f.char), |fld| corner_with(&f, &fld))
            })?;
        }
    }
    for f in parse::<LoopFixture>(LOOPS) {
        if selected("loops", &f.name) {
            push(&f.name, 1, &mut || loops(&f, n_max))?;
        }
    }
    for f in parse::<TypeFixture>(TYPES) {
        if selected("type", &f.name) {
            push(&f.name, f.n, &mut || types(&f))?;
        }
    }
    if selected("random", "random_associativity") {
        push("random_associativity", 7, &mut || random_associativity(o.seed))?;
    }
    if results.is_empty() {
        return Err(CliError::Usage(format!("no fixture matches {:?}", only.unwrap_or(""))));
    }
    let mut ok = true;
    for (name, r) in &results {
        match r {
            None => writeln!(out, "SKIP {name}")?,
            Some(d) if d.is_empty() => writeln!(out, "PASS {name}")?,
            Some(d) => {
                ok = false;
                writeln!(out, "FAIL {name}")?;
                for line in d {
                    writeln!(out, "  {line}")?;
                }
            }
        }
    }
    Ok(ok)
}
