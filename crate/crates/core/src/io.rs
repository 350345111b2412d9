//! Structured-text file formats for Lie and commutative algebras.
//!
//! Scalars are written as `"p/q"` strings (`"p"` when q = 1), bracket and
//! product keys as `"i,j"` with 0-based indices, and every map is emitted in
//! numeric key order so that export → import → export is byte-identical.

use crate::comm::{CommAlgebra, CommBuilder};
use crate::error::{Error, Result};
use crate::lie::{LieAlgebra, LieBuilder, Sparse};
use crate::scalar::Scalar;
use serde_json::{Map, Value};

/// Either kind of algebra, as read from a file.
#[derive(Clone, Debug)]
pub enum AlgebraFile {
    Lie(LieAlgebra),
    Comm(CommAlgebra),
}

fn sparse_to_value(s: &Sparse) -> Value {
    let mut sorted: Vec<&(usize, Scalar)> = s.iter().collect();
    sorted.sort_by_key(|(k, _)| *k);
    let mut m = Map::new();
    for (k, c) in sorted {
        m.insert(k.to_string(), Value::String(c.to_string()));
    }
    Value::Object(m)
}

fn table_to_value<'a>(entries: impl Iterator<Item = (usize, usize, &'a Sparse)>) -> Value {
    let mut rows: Vec<(usize, usize, &Sparse)> = entries.filter(|(_, _, s)| !s.is_empty()).collect();
    rows.sort_by_key(|&(i, j, _)| (i, j));
    let mut m = Map::new();
    for (i, j, s) in rows {
        m.insert(format!("{i},{j}"), sparse_to_value(s));
    }
    Value::Object(m)
}

fn render(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("values serialise");
    s.push('\n');
    s
}

pub fn lie_to_json(l: &LieAlgebra) -> String {
    let mut m = Map::new();
    m.insert("kind".into(), "lie".into());
    m.insert("name".into(), l.name().into());
    m.insert("dim".into(), l.dim().into());
    m.insert("basis".into(), l.basis_names().to_vec().into());
    m.insert("brackets".into(), table_to_value(l.stored_brackets()));
    render(&Value::Object(m))
}

pub fn comm_to_json(a: &CommAlgebra) -> String {
    let mut m = Map::new();
    m.insert("kind".into(), "commutative".into());
    m.insert("name".into(), a.name().into());
    m.insert("dim".into(), a.dim().into());
    m.insert("basis".into(), a.basis_names().to_vec().into());
    m.insert(
        "unit".into(),
        Value::Array(a.unit().iter().map(|c| Value::String(c.to_string())).collect()),
    );
    m.insert("products".into(), table_to_value(a.stored_products()));
    render(&Value::Object(m))
}

fn perr(origin: &str, msg: impl std::fmt::Display) -> Error {
    Error::Parse(format!("{origin}: {msg}"))
}

fn field<'a>(obj: &'a Map<String, Value>, key: &str, origin: &str) -> Result<&'a Value> {
    obj.get(key).ok_or_else(|| perr(origin, format!("missing field \"{key}\"")))
}

fn scalar(v: &Value, origin: &str, path: &str) -> Result<Scalar> {
    match v {
        Value::String(s) => s.parse().map_err(|e| perr(origin, format!("{path}: {e}"))),
        Value::Number(n) if n.is_i64() => Ok(Scalar::from_int(n.as_i64().expect("checked"))),
        _ => Err(perr(origin, format!("{path}: scalar must be a \"p/q\" string"))),
    }
}

fn index(s: &str, dim: usize, origin: &str, path: &str) -> Result<usize> {
    let i: usize = s.trim().parse().map_err(|_| perr(origin, format!("{path}: bad index \"{s}\"")))?;
    if i >= dim {
        return Err(Error::IndexOutOfRange(format!("{origin}: {path}: index {i} >= dim {dim}")));
    }
    Ok(i)
}

/// Header shared by both formats: name, dim, basis.
fn header(obj: &Map<String, Value>, origin: &str) -> Result<(String, usize, Vec<String>)> {
    let name = field(obj, "name", origin)?
        .as_str()
        .ok_or_else(|| perr(origin, "\"name\" must be a string"))?
        .to_string();
    let dim = field(obj, "dim", origin)?
        .as_u64()
        .ok_or_else(|| perr(origin, "\"dim\" must be a non-negative integer"))? as usize;
    let basis: Vec<String> = match obj.get("basis") {
        None => (0..dim).map(|i| format!("e{i}")).collect(),
        Some(Value::Array(xs)) => xs
            .iter()
            .map(|x| x.as_str().map(str::to_string))
            .collect::<Option<_>>()
            .ok_or_else(|| perr(origin, "\"basis\" must be a list of strings"))?,
        Some(_) => return Err(perr(origin, "\"basis\" must be a list of strings")),
    };
    if basis.len() != dim {
        return Err(Error::Structural(format!(
            "{origin}: basis has {} names but dim is {dim}",
            basis.len()
        )));
    }
    Ok((name, dim, basis))
}

/// `origin` extended with the line and column of the nested keys `path`,
/// found by scanning for each quoted key after the previous one. Falls back
/// to the bare origin when a key cannot be found verbatim (e.g. escapes).
fn locate(text: &str, origin: &str, path: &[&str]) -> String {
    let mut pos = 0;
    for key in path {
        match text[pos..].find(&format!("\"{key}\"")) {
            Some(off) => pos += off,
            None => return origin.to_string(),
        }
    }
    let before = &text[..pos];
    let line = before.matches('\n').count() + 1;
    let column = before.len() - before.rfind('\n').map_or(0, |i| i + 1) + 1;
    format!("{origin}: line {line} column {column}")
}

/// Visits every `"i,j": {"k": c}` entry of a table. `f` also receives the
/// origin with the entry's position, for its own error messages.
fn each_entry(
    table: &Value,
    dim: usize,
    src: (&str, &str),
    what: &str,
    mut f: impl FnMut(usize, usize, usize, Scalar, &str) -> Result<()>,
) -> Result<()> {
    let (text, origin) = src;
    let at_table = locate(text, origin, &[what]);
    let obj = table.as_object().ok_or_else(|| perr(&at_table, format!("\"{what}\" must be an object")))?;
    for (key, row) in obj {
        let path = format!("{what}[\"{key}\"]");
        let at_key = locate(text, origin, &[what, key]);
        let (si, sj) = key
            .split_once(',')
            .ok_or_else(|| perr(&at_key, format!("{path}: key must look like \"i,j\"")))?;
        let (i, j) = (index(si, dim, &at_key, &path)?, index(sj, dim, &at_key, &path)?);
        let row = row.as_object().ok_or_else(|| perr(&at_key, format!("{path} must be an object")))?;
        for (sk, c) in row {
            let at = locate(text, origin, &[what, key, sk]);
            let k = index(sk, dim, &at, &path)?;
            f(i, j, k, scalar(c, &at, &format!("{path}[\"{sk}\"]"))?, &at)?;
        }
    }
    Ok(())
}

fn parse_value(text: &str, origin: &str) -> Result<Map<String, Value>> {
    let v: Value = serde_json::from_str(text)
        .map_err(|e| perr(origin, format!("line {} column {}: {e}", e.line(), e.column())))?;
    match v {
        Value::Object(m) => Ok(m),
        _ => Err(perr(origin, "top level must be an object")),
    }
}

fn parse_lie_obj(obj: &Map<String, Value>, text: &str, origin: &str) -> Result<LieAlgebra> {
    let (name, dim, basis) = header(obj, origin)?;
    let mut b = LieBuilder::new(name, basis);
    if let Some(t) = obj.get("brackets") {
        each_entry(t, dim, (text, origin), "brackets", |i, j, k, c, at| {
            if i >= j {
                return Err(perr(at, format!("bracket key \"{i},{j}\" must have i < j")));
            }
            b.add(i, j, k, c);
            Ok(())
        })?;
    }
    b.build()
}

fn parse_comm_obj(obj: &Map<String, Value>, text: &str, origin: &str) -> Result<CommAlgebra> {
    let (name, dim, basis) = header(obj, origin)?;
    let unit = match field(obj, "unit", origin)? {
        Value::Array(xs) => xs
            .iter()
            .enumerate()
            .map(|(i, x)| scalar(x, &locate(text, origin, &["unit"]), &format!("unit[{i}]")))
            .collect::<Result<Vec<_>>>()?,
        _ => return Err(perr(origin, "\"unit\" must be a list of scalars")),
    };
    if unit.len() != dim {
        return Err(Error::Structural(format!("{origin}: unit has {} entries, dim is {dim}", unit.len())));
    }
    let mut b = CommBuilder::new(name, basis, unit);
    if let Some(t) = obj.get("products") {
        each_entry(t, dim, (text, origin), "products", |i, j, k, c, at| {
            if i > j {
                return Err(perr(at, format!("product key \"{i},{j}\" must have i <= j")));
            }
            b.add(i, j, k, c);
            Ok(())
        })?;
    }
    b.build()
}

/// Parses either format, dispatching on `"kind"`. `origin` names the source
/// in error messages.
pub fn parse_algebra(text: &str, origin: &str) -> Result<AlgebraFile> {
    let obj = parse_value(text, origin)?;
    match field(&obj, "kind", origin)?.as_str() {
        Some("lie") => Ok(AlgebraFile::Lie(parse_lie_obj(&obj, text, origin)?)),
        Some("commutative") => Ok(AlgebraFile::Comm(parse_comm_obj(&obj, text, origin)?)),
        _ => Err(perr(origin, "\"kind\" must be \"lie\" or \"commutative\"")),
    }
}

pub fn parse_lie(text: &str, origin: &str) -> Result<LieAlgebra> {
    match parse_algebra(text, origin)? {
        AlgebraFile::Lie(l) => Ok(l),
        AlgebraFile::Comm(_) => Err(perr(origin, "expected a Lie algebra file")),
    }
}

pub fn parse_comm(text: &str, origin: &str) -> Result<CommAlgebra> {
    match parse_algebra(text, origin)? {
        AlgebraFile::Comm(a) => Ok(a),
        AlgebraFile::Lie(_) => Err(perr(origin, "expected a commutative algebra file")),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;

    #[test]
    fn oscillator_round_trip_is_byte_identical() {
        let text = lie_to_json(&catalog::oscillator().algebra);
        let back = parse_lie(&text, "osc").unwrap();
        assert_eq!(lie_to_json(&back), text);
        assert!(text.contains("\"0,1\""));
    }

    #[test]
    fn comm_round_trip() {
        let text = comm_to_json(&catalog::trunc_poly(4).unwrap());
        assert_eq!(comm_to_json(&parse_comm(&text, "t4").unwrap()), text);
    }

    #[test]
    fn errors_carry_context() {
        let e = parse_lie("{\n \"kind\": \"lie\",\n \"dim\": }", "k.json").unwrap_err();
        assert!(e.to_string().contains("k.json: line 3"), "{e}");
        let bad = r#"{"kind":"lie","name":"x","dim":2,"brackets":{"1,0":{"0":"1"}}}"#;
        assert!(matches!(parse_lie(bad, "x"), Err(Error::Parse(_))));
        let jac = r#"{"kind":"lie","name":"x","dim":3,"brackets":{"0,1":{"2":"1"},"0,2":{"0":"1"}}}"#;
        assert!(matches!(parse_lie(jac, "x"), Err(Error::Jacobi { .. })));
        let scalar = "{\n\"kind\": \"lie\", \"name\": \"x\", \"dim\": 2,\n\"brackets\": {\n  \"0,1\": {\"1\": \"1/0\"}}}";
        let e = parse_lie(scalar, "s.json").unwrap_err();
        assert!(e.to_string().contains("s.json: line 4 column 11"), "{e}");
    }
}
