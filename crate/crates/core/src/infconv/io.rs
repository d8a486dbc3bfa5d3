//! Text and JSON encodings of lattice functions.
//!
//! Text: one line per point, `k` integers followed by a rational `p/q`.
//! JSON: `{"dim", "points", "values"}` with values as `"p/q"` strings.

use serde::{Deserialize, Serialize};

use super::LatticeFunction;
use crate::error::{Error, Result};
use crate::lattice::Point;
use crate::rational;

pub fn parse_function(text: &str) -> Result<LatticeFunction> {
    let mut dim = None;
    let mut pairs = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let err = |msg: String| Error::Parse { line: idx + 1, msg };
        let toks: Vec<&str> = line.split_whitespace().collect();
        let (value, coords) = toks.split_last().expect("nonempty line");
        let coords = coords
            .iter()
            .map(|t| t.parse::<i64>().map_err(|e| err(format!("bad integer {t:?}: {e}"))))
            .collect::<Result<Vec<i64>>>()?;
        if coords.is_empty() {
            return Err(err("expected coordinates before the value".into()));
        }
        match dim {
            None => dim = Some(coords.len()),
            Some(d) if d != coords.len() => {
                return Err(err(format!("expected {d} coordinates, found {}", coords.len())))
            }
            Some(_) => {}
        }
        let v = rational::parse(value).map_err(|_| err(format!("bad rational {value:?}")))?;
        pairs.push((Point::from(coords), v));
    }
    let dim = dim.ok_or(Error::Parse { line: 0, msg: "empty function".into() })?;
    LatticeFunction::from_pairs(dim, pairs)
}

pub fn write_function(f: &LatticeFunction) -> String {
    let mut out = String::new();
    for (p, v) in f.iter() {
        out.push_str(&format!("{p} {}\n", rational::format(v)));
    }
    out
}

#[derive(Serialize, Deserialize)]
struct FunctionJson {
    dim: usize,
    points: Vec<Vec<i64>>,
    values: Vec<String>,
}

pub fn function_to_json(f: &LatticeFunction) -> serde_json::Value {
    serde_json::to_value(FunctionJson {
        dim: f.domain().dim(),
        points: f.domain().coordinate_rows(),
        values: f.values().iter().map(rational::format).collect(),
    })
    .expect("plain data serializes")
}

pub fn function_from_json(text: &str) -> Result<LatticeFunction> {
    let raw: FunctionJson =
        serde_json::from_str(text).map_err(|e| Error::Parse { line: e.line(), msg: e.to_string() })?;
    if raw.points.len() != raw.values.len() {
        return Err(Error::Parse { line: 0, msg: "points and values differ in length".into() });
    }
    let values = raw.values.iter().map(|s| rational::parse(s)).collect::<Result<Vec<_>>>()?;
    LatticeFunction::from_pairs(raw.dim, raw.points.into_iter().map(Point::from).zip(values).collect())
}
