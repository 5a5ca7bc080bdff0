//! One line per acceptance criterion; exits non-zero if any fails.

use std::collections::BTreeMap;
use std::time::Instant;

use descent_core::algebra::{radical_powers, radical_subspace, structure_constants, w_element};
use descent_core::cartan::{verify_apw, CartanData, IntMatrix};
use descent_core::combinatorics::{compositions, concat_sharp, p_regular_partitions, part, partitions};
use descent_core::field::next_prime;
use descent_core::idempotents::{corner_algebra, orthogonal_idempotent_set, IdempotentReport};
use descent_core::morphisms::{
    delta_idempotent_check, BgrReport, pullback_simple_check, subquiver_embedding_check, verify_bgr_homomorphism,
};
use descent_core::oracle::group_algebra_oracle;
use descent_core::quiver::{
    conjecture_scan, coprime_to, ext_quiver_cached, ordinary_quiver, rep_type, DynkinType, Evidence, Quiver,
    RepType,
};
use descent_core::{with_field, Algebra, Characteristic, Composition, Field, Partition, PrimeField, Subspace};
use rand::{Rng, SeedableRng};
use serde::Deserialize;

type Outcome = Result<(), String>;

fn fail<T>(msg: impl Into<String>) -> Result<T, String> {
    Err(msg.into())
}

fn ch(c: u32) -> Characteristic {
    if c == 0 {
        Characteristic::Zero
    } else {
        Characteristic::Prime(c)
    }
}

fn err(e: descent_core::Error) -> String {
    e.to_string()
}

const FIELDS: [u32; 5] = [2, 3, 5, 7, 0];

// --- fixture files shared with the CLI ---------------------------------------

#[derive(Deserialize)]
struct File<T> {
    fixtures: Vec<T>,
}

#[derive(Deserialize)]
struct CartanFixture {
    name: String,
    n: usize,
    char: u32,
    matrix: String,
    rows: IntMatrix,
}

#[derive(Deserialize)]
struct QuiverFixture {
    name: String,
    n: usize,
    char: u32,
    arrows: Vec<(String, String, usize)>,
}

#[derive(Deserialize)]
struct LoopFixture {
    char: u32,
    n_max: usize,
    loops: BTreeMap<String, usize>,
}

fn load<T: for<'a> Deserialize<'a>>(s: &str) -> Vec<T> {
    serde_json::from_str::<File<T>>(s).expect("fixture parses").fixtures
}

// --- criteria ----------------------------------------------------------------

fn c1() -> Outcome {
    for n in 1..=10 {
        let cs = compositions(n);
        if cs.len() != 1 << (n - 1) {
            return fail(format!("n={n}: {} compositions", cs.len()));
        }
        if cs.windows(2).any(|w| w[0] >= w[1]) || cs.iter().any(|q| q.n() != n) {
            return fail(format!("n={n}: enumeration not strictly increasing or wrong degree"));
        }
    }
    Ok(())
}

fn c2() -> Outcome {
    let check = |o: &descent_core::oracle::GroupAlgebraOracle, r: &Composition, q: &Composition| -> Outcome {
        let got = o.product(r, q).map_err(err)?;
        let want: BTreeMap<Composition, i64> = structure_constants(r, q)
            .map_err(err)?
            .into_iter()
            .map(|(k, v)| (k, v as i64))
            .collect();
        if got != want {
            return fail(format!("Ξ^{r} Ξ^{q}: oracle {got:?}, table {want:?}"));
        }
        Ok(())
    };
    for n in 1..=5 {
        let o = group_algebra_oracle(n).map_err(err)?;
        let cs = compositions(n);
        for r in &cs {
            for q in &cs {
                check(&o, r, q)?;
            }
        }
    }
    let o = group_algebra_oracle(6).map_err(err)?;
    let cs = compositions(6);
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(2024);
    for _ in 0..200 {
        let r = &cs[rng.gen_range(0..cs.len())];
        let q = &cs[rng.gen_range(0..cs.len())];
        check(&o, r, q)?;
    }
    Ok(())
}

fn radical_claims<F: Field>(n: usize, f: &F) -> Vec<String> {
    let mut bad = Vec::new();
    let alg = Algebra::new(n, f).expect("n <= 10");
    let powers = radical_powers(&alg);
    let index = powers.len() + 1;
    if index != n - 1 {
        bad.push(format!("nilpotency index {index}, expected {}", n - 1));
    }
    let w = w_element(n, f).unwrap().pow((n - 2) as u32).to_dense(&alg);
    match powers.get(n - 3) {
        Some(r) if r.dim() == 1 && r.contains(&w) && !alg.is_zero(&w) => {}
        Some(r) => bad.push(format!(
            "dim Rad^{} = {}, w^{} {} it",
            n - 2,
            r.dim(),
            n - 2,
            if r.contains(&w) && !alg.is_zero(&w) { "lies in" } else { "does not span" }
        )),
        None => bad.push(format!("Rad^{} = 0", n - 2)),
    }
    bad
}

fn radical_claims_for(n: usize, c: Characteristic) -> descent_core::Result<Vec<String>> {
    with_field!(c, |f| Ok(radical_claims(n, &f)))
}

fn c3() -> Outcome {
    let mut bad = Vec::new();
    for c in FIELDS {
        for n in 3..=8 {
            let b = radical_claims_for(n, ch(c)).map_err(err)?;
            bad.extend(b.into_iter().map(|m| format!("(n={n}, p={c}) {m}")));
        }
    }
    if bad.is_empty() {
        Ok(())
    } else {
        fail(bad.join("; "))
    }
}

fn c4() -> Outcome {
    let mut bad = Vec::new();
    for f in load::<CartanFixture>(include_str!("../../cli/fixtures/cartan.json")) {
        let d = CartanData::compute(f.n, ch(f.char)).map_err(err)?;
        let got = if f.matrix == "c" { &d.c } else { &d.c_tilde };
        if *got != f.rows {
            bad.push(format!("{}: got {got:?}", f.name));
        }
    }
    // n = 5, p = 5: drop 1^5 from C and double the (5),(5) entry
    let c = CartanData::compute(5, Characteristic::Zero).map_err(err)?.c;
    let mut want: IntMatrix = c[1..].iter().map(|r| r[1..].to_vec()).collect();
    let last = want.len() - 1;
    want[last][last] = 2;
    let got = CartanData::compute(5, Characteristic::Prime(5)).map_err(err)?.c_tilde;
    if got != want {
        bad.push(format!("n=5, p=5 is not C with 1^5 removed and (5),(5) doubled: {got:?}"));
    }
    if bad.is_empty() {
        Ok(())
    } else {
        fail(bad.join("; "))
    }
}

fn c5() -> Outcome {
    for n in 1..=7 {
        for p in [2, 3, 5, 7] {
            let r = verify_apw(n, Characteristic::Prime(p)).map_err(err)?;
            if !r.holds {
                return fail(format!("n={n}, p={p}: {} mismatches", r.mismatches.len()));
            }
        }
    }
    Ok(())
}

fn quiver_matrix(q: &Quiver) -> BTreeMap<(Partition, Partition), usize> {
    let mut m = BTreeMap::new();
    for (i, a) in q.vertices.iter().enumerate() {
        for (j, b) in q.vertices.iter().enumerate() {
            if q.arrows[i][j] > 0 {
                m.insert((a.clone(), b.clone()), q.arrows[i][j]);
            }
        }
    }
    m
}

fn c6() -> Outcome {
    let mut bad = Vec::new();
    for f in load::<QuiverFixture>(include_str!("../../cli/fixtures/quivers.json")) {
        let q = ext_quiver_cached(f.n, ch(f.char)).map_err(err)?;
        let want: BTreeMap<(Partition, Partition), usize> = f
            .arrows
            .iter()
            .map(|(a, b, m)| Ok(((a.parse().map_err(err)?, b.parse().map_err(err)?), *m)))
            .collect::<Result<_, String>>()?;
        if q.vertices != p_regular_partitions(f.n, ch(f.char)) || quiver_matrix(&q) != want {
            bad.push(format!("{}: got {:?}", f.name, quiver_matrix(&q)));
        }
    }
    if bad.is_empty() {
        Ok(())
    } else {
        fail(bad.join("; "))
    }
}

fn c7() -> Outcome {
    for n in 1..=7 {
        let rule = ordinary_quiver(n);
        for c in [Characteristic::Prime(next_prime(n as u64) as u32), Characteristic::Zero] {
            let q = ext_quiver_cached(n, c).map_err(err)?;
            if q.vertices != rule.vertices || q.arrows != rule.arrows {
                return fail(format!("n={n}, {c:?}: computed quiver differs from the rule"));
            }
        }
    }
    Ok(())
}

fn idempotent_report(n: usize, c: Characteristic) -> descent_core::Result<IdempotentReport> {
    with_field!(c, |f| orthogonal_idempotent_set(n, &f)?.verify())
}

fn c8() -> Outcome {
    let mut bad = Vec::new();
    for c in FIELDS {
        let top = if c == 0 { 6 } else { 8 };
        for n in 1..=top {
            let r = idempotent_report(n, ch(c)).map_err(err)?;
            if !r.all_pass() {
                bad.push(format!("n={n}, p={c}: {r:?}"));
            }
        }
    }
    if bad.is_empty() {
        Ok(())
    } else {
        fail(bad.join("; "))
    }
}

fn c9() -> Outcome {
    let f = PrimeField::new(2).map_err(err)?;
    let alg = Algebra::new(4, &f).map_err(err)?;
    let set = orthogonal_idempotent_set(4, &f).map_err(err)?;
    let e = set.get(&part(&[4])).ok_or("no e_4")?.clone();
    let corner = corner_algebra(&e).map_err(err)?;
    if corner.dim() != 5 {
        return fail(format!("dim e_4 D_4 e_4 = {}", corner.dim()));
    }
    let ed = e.to_dense(&alg);
    let local = Subspace::span(&f, alg.dim(), corner.basis.iter().map(|b| b.to_dense(&alg)));
    let rad = local.intersection(&radical_subspace(&alg)).map_err(err)?;
    if rad.dim() != 4 || !local.contains(&ed) {
        return fail(format!("radical of the corner has dimension {}", rad.dim()));
    }
    // all 16 elements of the radical
    let elems: Vec<Vec<_>> = (0u32..16)
        .map(|bits| {
            let mut v = alg.zero_vec();
            for (k, b) in rad.basis().iter().enumerate() {
                if bits >> k & 1 == 1 {
                    v = alg.add(&v, b);
                }
            }
            v
        })
        .collect();
    for u in &elems {
        for v in &elems {
            let uu = alg.mul(u, u);
            let uv = alg.mul(u, v);
            let span = Subspace::span(&f, alg.dim(), [u.clone(), v.clone(), uu.clone(), uv.clone()]);
            if span.dim() != 4 {
                continue;
            }
            let gens = [u, v, &uu, &uv];
            let vanish = gens
                .iter()
                .all(|x| [&uu, &uv].iter().all(|y| alg.is_zero(&alg.mul(x, y)) && alg.is_zero(&alg.mul(y, x))));
            if vanish && alg.is_zero(&alg.mul(v, u)) && alg.mul(v, v) == uu {
                return Ok(());
            }
        }
    }
    fail("no u, v in the corner radical realise the table")
}

fn bgr(n: usize, s: usize, c: Characteristic) -> descent_core::Result<BgrReport> {
    with_field!(c, |f| verify_bgr_homomorphism(n, s, &f))
}

fn c10() -> Outcome {
    let mut bad = Vec::new();
    for c in [2, 3, 5, 0] {
        for n in 1..=7 {
            for s in 1..=n {
                let r = bgr(n, s, ch(c)).map_err(err)?;
                if !r.passed() {
                    bad.push(format!("Δ_{s} on D_{n}, p={c}: {} failures, rank {}", r.failures.len(), r.image_rank));
                }
                for mu in p_regular_partitions(n - s, ch(c)) {
                    let r = pullback_simple_check(&mu, s, n, ch(c)).map_err(err)?;
                    if !r.passed() {
                        bad.push(format!("pullback of {mu} by Δ_{s}, n={n}, p={c}"));
                    }
                }
                if n <= 6 && s < n {
                    let r = delta_idempotent_check(n, s, ch(c)).map_err(err)?;
                    if !r.passed() {
                        bad.push(format!("idempotent image Δ_{s}, n={n}, p={c}"));
                    }
                }
            }
        }
    }
    for p in [2, 3, 5] {
        for n in 2..=6 {
            let r = subquiver_embedding_check(n, 1, Characteristic::Prime(p)).map_err(err)?;
            if !r.passed() {
                bad.push(format!("Q_{{{},{p}}} not inside Q_{{{n},{p}}}: {:?}", n - 1, r.missing));
            }
        }
    }
    // the drawn identification of Q_{5,2} inside Q_{6,2}
    let two = Characteristic::Prime(2);
    let small = ext_quiver_cached(5, two).map_err(err)?;
    let big = ext_quiver_cached(6, two).map_err(err)?;
    let drawn: BTreeMap<Partition, Partition> = [
        (part(&[5]), part(&[6])),
        (part(&[4, 1]), part(&[4, 2])),
        (part(&[3, 2]), part(&[3, 2, 1])),
    ]
    .into_iter()
    .collect();
    if small.vertices.iter().collect::<Vec<_>>() != drawn.keys().collect::<Vec<_>>() {
        bad.push("vertices of Q_{5,2} differ from the drawn example".into());
    }
    for ((a, b), m) in quiver_matrix(&small) {
        if big.arrows_between(&drawn[&a], &drawn[&b]) < m {
            bad.push(format!("drawn map: {a} -> {b} has no image {} -> {}", drawn[&a], drawn[&b]));
        }
    }
    for (mu, img) in &drawn {
        let sharp = concat_sharp(mu, 1, two);
        if sharp != *img {
            // the two identifications differ; only record it
            println!("  note: {mu}^#1 = {sharp}, drawn as {img}");
        }
    }
    if bad.is_empty() {
        Ok(())
    } else {
        fail(bad.join("; "))
    }
}

fn expected_type(n: usize, p: u32) -> RepType {
    let finite = match p {
        2 => n <= 3,
        3 => n <= 4,
        _ => n <= 5,
    };
    if finite {
        RepType::Finite
    } else {
        RepType::Wild
    }
}

fn c11() -> Outcome {
    let mut bad = Vec::new();
    for p in [2, 3, 5, 7, 11, 0] {
        for n in 1..=8 {
            let r = rep_type(n, ch(p)).map_err(err)?;
            if r.verdict != expected_type(n, p) {
                bad.push(format!("n={n}, p={p}: {}", r.verdict));
            }
            if let Evidence::SeparatedQuiver { components, .. } = &r.evidence {
                let wild = components.iter().any(|c| !c.kind.is_dynkin());
                if wild != (r.verdict == RepType::Wild) {
                    bad.push(format!("n={n}, p={p}: certificate disagrees with verdict"));
                }
            }
        }
    }
    for (n, p) in [(5, 3), (6, 5)] {
        let r = rep_type(n, ch(p)).map_err(err)?;
        match &r.evidence {
            Evidence::SeparatedQuiver { components, .. }
                if components.iter().any(|c| c.kind == DynkinType::None) => {}
            e => bad.push(format!("n={n}, p={p}: no non-Dynkin component in {e:?}")),
        }
    }
    if bad.is_empty() {
        Ok(())
    } else {
        fail(bad.join("; "))
    }
}

fn c12() -> Outcome {
    let f = load::<LoopFixture>(include_str!("../../cli/fixtures/loops.json"))
        .pop()
        .ok_or("no loop fixture")?;
    if f.loops.len() != 16 {
        return fail(format!("{} listed values", f.loops.len()));
    }
    let c = ch(f.char);
    let r = conjecture_scan(f.n_max, c).map_err(err)?;
    let mut bad = Vec::new();
    for (l, want) in &f.loops {
        let l: Partition = l.parse().map_err(err)?;
        if r.loop_count(&l) != Some(*want) {
            bad.push(format!("n_{l} = {:?}, expected {want}", r.loop_count(&l)));
        }
    }
    for n in 1..=f.n_max {
        for l in partitions(n).into_iter().filter(|l| l.is_regular(c) && coprime_to(l, c)) {
            if r.loop_count(&l) != Some(0) {
                bad.push(format!("n_{l} = {:?} with all parts odd", r.loop_count(&l)));
            }
        }
    }
    if bad.is_empty() {
        Ok(())
    } else {
        fail(bad.join("; "))
    }
}

fn main() {
    let criteria: [(&str, fn() -> Outcome); 12] = [
        ("dimension 2^(n-1) for n <= 10", c1),
        ("structure constants match the group algebra", c2),
        ("nilpotency index and Rad^(n-2) = <w^(n-2)>", c3),
        ("Cartan fixtures", c4),
        ("C~ = D^T C D for n <= 7", c5),
        ("quiver fixtures", c6),
        ("ordinary quiver rule for p > n", c7),
        ("idempotent invariants", c8),
        ("corner algebra at (4,2)", c9),
        ("BGR maps", c10),
        ("representation type table", c11),
        ("loop counts for p = 2, n <= 8", c12),
    ];
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let t = Instant::now();
        let r = run();
        let secs = t.elapsed().as_secs_f64();
        match r {
            Ok(()) => println!("criterion {:>2}: PASS  {name} ({secs:.1}s)", i + 1),
            Err(m) => {
                failed += 1;
                println!("criterion {:>2}: FAIL  {name} ({secs:.1}s): {m}", i + 1);
            }
        }
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed > 0 {
        std::process::exit(1);
    }
}
