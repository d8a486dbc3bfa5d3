//! Plain-text and JSON encodings of lattice sets.
//!
//! Text: one point per line, `k` whitespace-separated decimal integers. Lines
//! starting with `#` are comments and blank lines are skipped. The dimension
//! is taken from the first data line (or the caller's hint for empty files)
//! and enforced on every later line.

use serde::{Deserialize, Serialize};

use super::{LatticeSet, Point};
use crate::error::{Error, Result};

pub fn parse_set(text: &str, dim_hint: Option<usize>) -> Result<LatticeSet> {
    let mut dim = dim_hint;
    let mut points = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let coords = line
            .split_whitespace()
            .map(|tok| {
                tok.parse::<i64>().map_err(|e| Error::Parse {
                    line: idx + 1,
                    msg: format!("bad integer {tok:?}: {e}"),
                })
            })
            .collect::<Result<Vec<i64>>>()?;
        match dim {
            None => dim = Some(coords.len()),
            Some(d) if d != coords.len() => {
                return Err(Error::Parse {
                    line: idx + 1,
                    msg: format!("expected {d} coordinates, found {}", coords.len()),
                })
            }
            Some(_) => {}
        }
        points.push(Point::from(coords));
    }
    let dim = dim.ok_or(Error::Parse { line: 0, msg: "no points and no dimension given".into() })?;
    if dim == 0 {
        return Err(Error::Parse { line: 0, msg: "dimension must be at least 1".into() });
    }
    LatticeSet::new(dim, points)
}

pub fn write_set(set: &LatticeSet) -> String {
    let mut out = String::new();
    for p in set {
        out.push_str(&p.to_string());
        out.push('\n');
    }
    out
}

#[derive(Serialize, Deserialize)]
struct SetJson {
    dim: usize,
    points: Vec<Vec<i64>>,
}

pub fn set_to_json(set: &LatticeSet) -> serde_json::Value {
    serde_json::to_value(SetJson { dim: set.dim(), points: set.coordinate_rows() })
        .expect("plain data serializes")
}

pub fn set_from_json(text: &str) -> Result<LatticeSet> {
    let raw: SetJson =
        serde_json::from_str(text).map_err(|e| Error::Parse { line: e.line(), msg: e.to_string() })?;
    LatticeSet::new(raw.dim, raw.points.into_iter().map(Point::from))
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn parses_comments_and_blank_lines() {
        let s = parse_set("# a set\n0 0\n\n1 0\n  0 1  \n", None).unwrap();
        assert_eq!(s, LatticeSet::from_arrays(&[[0, 0], [1, 0], [0, 1]]));
    }

    #[test]
    fn enforces_dimension() {
        let err = parse_set("1 2\n3\n", None).unwrap_err();
        assert!(matches!(err, Error::Parse { line: 2, .. }));
    }

    #[test]
    fn rejects_garbage() {
        assert!(matches!(parse_set("1 x\n", None), Err(Error::Parse { line: 1, .. })));
    }

    #[test]
    fn empty_file_needs_hint() {
        assert!(parse_set("# nothing\n", None).is_err());
        assert_eq!(parse_set("", Some(3)).unwrap(), LatticeSet::empty(3));
    }

    #[test]
    fn json_round_trip() {
        let s = LatticeSet::from_arrays(&[[1, -2, 3], [0, 0, 0]]);
        let text = set_to_json(&s).to_string();
        assert_eq!(set_from_json(&text).unwrap(), s);
    }

    proptest! {
        #[test]
        fn text_round_trip(pts in proptest::collection::vec(proptest::collection::vec(-1000i64..1000, 3), 0..40)) {
            let s = LatticeSet::new(3, pts.into_iter().map(Point::from)).unwrap();
            prop_assert_eq!(parse_set(&write_set(&s), Some(3)).unwrap(), s);
        }
    }
}
