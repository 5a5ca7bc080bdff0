use descent_core::{Composition, DescentElement, Error, Field, Result};

/// Parses `"21 + -1/2*12 + 3*111"` (compact or comma-separated parts), or
/// the JSON form produced by `DescentElement::to_json`. `n` is taken from
/// the terms when not given.
pub fn parse_element<F: Field>(s: &str, field: &F, n: Option<usize>) -> Result<DescentElement<F>> {
    let s = s.trim();
    if s.starts_with('{') {
        let e = DescentElement::from_json(s, field)?;
        if let Some(n) = n.filter(|&n| n != e.n()) {
            return Err(Error::DegreeMismatch { expected: n, found: e.n() });
        }
        return Ok(e);
    }
    let mut terms = Vec::new();
    for raw in s.split('+') {
        let t = raw.trim();
        if t.is_empty() {
            return Err(Error::Parse(format!("empty term in {s:?}")));
        }
        let (c, q) = match t.split_once('*') {
            Some((c, q)) => (field.parse(c.trim())?, q.trim()),
            None => match t.strip_prefix('-') {
                Some(q) => (field.neg(&field.one()), q.trim()),
                None => (field.one(), t),
            },
        };
        terms.push((q.parse::<Composition>()?, c));
    }
    let n = match n {
        Some(n) => n,
        None => terms[0].0.n(),
    };
    DescentElement::from_terms(n, field, terms)
}
