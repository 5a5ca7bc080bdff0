use std::io::Write;

use descent_core::algebra::{self, radical_power_dims};
use descent_core::cartan::{verify_apw, CartanData, IntMatrix};
use descent_core::combinatorics::{compositions, p_regular_partitions, Partition};
use descent_core::idempotents::orthogonal_idempotent_set;
use descent_core::morphisms::{
    delta_idempotent_check, pullback_simple_check, subquiver_embedding_check,
    verify_bgr_homomorphism, CheckReport,
};
use descent_core::quiver::{conjecture_scan, ext_quiver_cached, rep_type as rep_type_of, Evidence};
use descent_core::{with_field, Algebra, Characteristic, Field};
use serde_json::json;

use crate::parse::parse_element;
use crate::{CliError, Format, Opts, Outcome};

fn write_json(out: &mut dyn Write, v: &impl serde::Serialize) -> Result<(), CliError> {
    let s = serde_json::to_string_pretty(v).map_err(|e| CliError::Failed(e.to_string()))?;
    writeln!(out, "{s}")?;
    Ok(())
}

fn unsupported(cmd: &str, f: Format) -> CliError {
    CliError::Usage(format!("{cmd} does not support --format {f:?}"))
}

pub fn basis(o: &Opts, out: &mut dyn Write) -> Outcome {
    let n = o.n()?;
    let cs = compositions(n);
    match o.format() {
        Format::Text => {
            for q in &cs {
                writeln!(out, "{q}")?;
            }
        }
        Format::Json => write_json(out, &cs)?,
        f => return Err(unsupported("basis", f)),
    }
    Ok(true)
}

pub fn multiply(o: &Opts, lhs: &str, rhs: &str, out: &mut dyn Write) -> Outcome {
    let n = o.n.map(|_| o.n()).transpose()?;
    with_field!(o.characteristic()?, |f| {
        let a = parse_element(lhs, &f, n)?;
        let b = parse_element(rhs, &f, Some(a.n()))?;
        let c = a.multiply(&b)?;
        match o.format() {
            Format::Text => writeln!(out, "{c}")?,
            Format::Json => write_json(out, &c.to_json_value())?,
            fmt => return Err(unsupported("multiply", fmt)),
        }
        Ok(true)
    })
}

fn theta_cmd<F: Field>(o: &Opts, element: &str, f: &F, out: &mut dyn Write) -> Outcome {
    let n = o.n.map(|_| o.n()).transpose()?;
    let x = parse_element(element, f, n)?;
    let t = algebra::theta(&x);
    match o.format() {
        Format::Text => {
            for (l, v) in t.classes().iter().zip(t.values()) {
                writeln!(out, "{l}\t{}", f.format(v))?;
            }
        }
        Format::Json => {
            let m: serde_json::Map<String, serde_json::Value> = t
                .classes()
                .iter()
                .zip(t.values())
                .map(|(l, v)| (l.to_string(), json!(f.format(v))))
                .collect();
            write_json(out, &m)?;
        }
        fmt => return Err(unsupported("theta", fmt)),
    }
    Ok(true)
}

pub fn theta(o: &Opts, element: &str, out: &mut dyn Write) -> Outcome {
    with_field!(o.characteristic()?, |f| theta_cmd(o, element, &f, out))
}

pub fn radical(o: &Opts, out: &mut dyn Write) -> Outcome {
    let n = o.n()?;
    let dims = with_field!(o.characteristic()?, |f| {
        radical_power_dims(&Algebra::new(n, &f)?)
    });
    // dims[k] = dim Rad^{k+1}, ending with 0
    let index = dims.iter().position(|&d| d == 0).unwrap() + 1;
    match o.format() {
        Format::Text => {
            for (k, d) in dims.iter().enumerate() {
                writeln!(out, "Rad^{}\t{d}", k + 1)?;
            }
            writeln!(out, "nilpotency index\t{index}")?;
        }
        Format::Json => write_json(
            out,
            &json!({"n": n, "p": o.characteristic()?, "radical_power_dims": dims, "nilpotency_index": index}),
        )?,
        f => return Err(unsupported("radical", f)),
    }
    Ok(true)
}

pub fn idempotents(o: &Opts, out: &mut dyn Write) -> Outcome {
    let n = o.n()?;
    with_field!(o.characteristic()?, |f| {
        let set = orthogonal_idempotent_set(n, &f)?;
        let report = set.verify()?;
        match o.format() {
            Format::Text => {
                for (l, e) in set.members() {
                    writeln!(out, "e_{l} = {e}")?;
                }
                writeln!(out, "{report:?}")?;
            }
            Format::Json => {
                let members: serde_json::Map<String, serde_json::Value> = set
                    .members()
                    .iter()
                    .map(|(l, e)| (l.to_string(), serde_json::to_value(e.to_json_value()).unwrap()))
                    .collect();
                write_json(out, &json!({"idempotents": members, "report": report}))?;
            }
            fmt => return Err(unsupported("idempotents", fmt)),
        }
        Ok(report.all_pass())
    })
}

fn grid_text(rows: &[Partition], cols: &[Partition], m: &IntMatrix, sep: &str) -> String {
    let mut s = String::new();
    for c in cols {
        s.push_str(sep);
        s.push_str(&c.to_string());
    }
    s.push('\n');
    for (r, row) in rows.iter().zip(m) {
        s.push_str(&r.to_string());
        for x in row {
            s.push_str(sep);
            s.push_str(&x.to_string());
        }
        s.push('\n');
    }
    s
}

pub fn cartan(o: &Opts, check: bool, out: &mut dyn Write) -> Outcome {
    let n = o.n()?;
    let ch = o.characteristic()?;
    let (data, holds) = if check {
        let r = verify_apw(n, ch)?;
        let holds = r.holds;
        if o.format() == Format::Json {
            write_json(out, &r)?;
            return Ok(holds);
        }
        (r.data, Some(holds))
    } else {
        (CartanData::compute(n, ch)?, None)
    };
    let sep = match o.format() {
        Format::Json => {
            write_json(out, &data)?;
            return Ok(true);
        }
        Format::Csv => ",",
        Format::Text => "\t",
        f => return Err(unsupported("cartan", f)),
    };
    if ch == Characteristic::Zero {
        write!(out, "{}", grid_text(&data.row_order, &data.row_order, &data.c, sep))?;
    } else {
        writeln!(out, "C")?;
        write!(out, "{}", grid_text(&data.row_order, &data.row_order, &data.c, sep))?;
        writeln!(out, "D")?;
        write!(out, "{}", grid_text(&data.row_order, &data.col_order, &data.d, sep))?;
        writeln!(out, "C~")?;
        write!(out, "{}", grid_text(&data.col_order, &data.col_order, &data.c_tilde, sep))?;
    }
    if let Some(h) = holds {
        writeln!(out, "C~ = D^T C D: {}", if h { "holds" } else { "FAILS" })?;
    }
    Ok(holds.unwrap_or(true))
}

pub fn quiver(o: &Opts, out: &mut dyn Write) -> Outcome {
    let n = o.n()?;
    let ch = o.characteristic()?;
    let q = ext_quiver_cached(n, ch)?;
    match o.format() {
        Format::Dot => write!(out, "{}", q.to_dot(&format!("Q_{n}_{}", ch_name(ch))))?,
        Format::Json => write_json(out, &q.to_json_value())?,
        Format::Text => {
            for (i, a) in q.vertices.iter().enumerate() {
                for (j, b) in q.vertices.iter().enumerate() {
                    if q.arrows[i][j] > 0 {
                        writeln!(out, "{a} -> {b}\t{}", q.arrows[i][j])?;
                    }
                }
            }
        }
        Format::Csv => write!(
            out,
            "{}",
            grid_text(
                &q.vertices,
                &q.vertices,
                &q.arrows
                    .iter()
                    .map(|r| r.iter().map(|&x| x as i64).collect())
                    .collect(),
                ","
            )
        )?,
    }
    Ok(true)
}

fn ch_name(ch: Characteristic) -> String {
    match ch.p() {
        Some(p) => p.to_string(),
        None => "inf".into(),
    }
}

pub fn rep_type(o: &Opts, out: &mut dyn Write) -> Outcome {
    let n = o.n()?;
    let r = rep_type_of(n, o.characteristic()?)?;
    match o.format() {
        Format::Json => write_json(out, &r)?,
        Format::Text => {
            writeln!(out, "{}", r.verdict)?;
            match &r.evidence {
                Evidence::TheoremLookupOnly => writeln!(out, "evidence: theorem lookup only")?,
                Evidence::SeparatedQuiver { components, .. } => {
                    writeln!(out, "evidence: separated quiver of Q_{{{n},{}}}", ch_name(r.p))?;
                    for c in components {
                        writeln!(out, "  {}\t{}", c.kind, c.vertices.join(" "))?;
                    }
                }
            }
        }
        f => return Err(unsupported("type", f)),
    }
    Ok(true)
}

pub fn verify_bgr(o: &Opts, s: usize, out: &mut dyn Write) -> Outcome {
    let n = o.n()?;
    let ch = o.characteristic()?;
    let mut checks: Vec<CheckReport> = with_field!(ch, |f| verify_bgr_homomorphism(n, s, &f))?.checks();
    checks.push(delta_idempotent_check(n, s, ch)?.to_check());
    checks.push(subquiver_embedding_check(n, s, ch)?.to_check());
    for mu in p_regular_partitions(n - s, ch) {
        checks.push(pullback_simple_check(&mu, s, n, ch)?.to_check());
    }
    let ok = checks.iter().all(|c| c.passed());
    match o.format() {
        Format::Text => {
            for c in &checks {
                writeln!(out, "{:?}\t{}\t{}", c.status, c.check, c.witnesses.join("; "))?;
            }
        }
        _ => write_json(out, &checks)?,
    }
    Ok(ok)
}

pub fn conjecture(o: &Opts, n_max: usize, out: &mut dyn Write) -> Outcome {
    let ch = o.characteristic()?;
    if ch == Characteristic::Zero {
        return Err(CliError::Usage("conjecture needs --p".into()));
    }
    if n_max == 0 || n_max > crate::MAX_N {
        return Err(CliError::Usage(format!("--n-max must be in 1..={}", crate::MAX_N)));
    }
    let r = conjecture_scan(n_max, ch)?;
    match o.format() {
        Format::Json => write_json(out, &r)?,
        Format::Text => {
            writeln!(out, "n\tlambda\tloops\tcoprime\tconsistent")?;
            for row in &r.loops {
                writeln!(
                    out,
                    "{}\t{}\t{}\t{}\t{}",
                    row.n, row.lambda, row.loops, row.coprime, row.consistent
                )?;
            }
            writeln!(out, "part (i) consistent: {}", r.part_i_consistent)?;
            writeln!(out, "part (ii) consistent: {}", r.part_ii_consistent)?;
            writeln!(out, "max off-diagonal multiplicity: {}", r.max_off_diagonal)?;
            for f in &r.off_diagonal_findings {
                writeln!(
                    out,
                    "finding: n={} {} -> {} multiplicity {} predicted {}",
                    f.n, f.from, f.to, f.multiplicity, f.predicted
                )?;
            }
        }
        f => return Err(unsupported("conjecture", f)),
    }
    Ok(true)
}
