//! JSON file formats.
//!
//! Graphs: `{"vertices": k, "edges": [[i, j], ...]}` with 1-based vertices.
//! Configurations: `{"dim": n, "points": [[...], ...]}`, one array per point.
//! Motion subspaces: `{"basis": [m, ...]}`, each `m` an `n×k` matrix given
//! as an array of rows (row `a` holds coordinate `a` of every velocity).
//!
//! Scalars are JSON numbers or strings `"a/b"`, `"a"` or `"1.25"`. Exact
//! output writes strings, float output writes numbers.

use std::str::FromStr;

use num::{BigInt, Zero};
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::linalg::{rational_from_f64, Matrix, Rational, Scalar};
use crate::motions::{Motion, MotionSpace, PointConfiguration};
use crate::rigidity::Graph;

fn syntax(text: &str) -> Result<Value> {
    serde_json::from_str(text)
        .map_err(|e| Error::Parse(format!("line {}, column {}: {}", e.line(), e.column(), e)))
}

fn field_error(path: &str, msg: impl std::fmt::Display) -> Error {
    Error::Parse(format!("field `{path}`: {msg}"))
}

fn get<'a>(v: &'a Value, key: &str) -> Result<&'a Value> {
    v.get(key).ok_or_else(|| field_error(key, "missing"))
}

fn as_array<'a>(v: &'a Value, path: &str) -> Result<&'a Vec<Value>> {
    v.as_array().ok_or_else(|| field_error(path, "expected an array"))
}

fn as_count(v: &Value, path: &str) -> Result<usize> {
    v.as_u64().map(|n| n as usize).ok_or_else(|| field_error(path, "expected a non-negative integer"))
}

fn parse_decimal(s: &str) -> Option<Rational> {
    let (neg, body) = match s.strip_prefix('-') {
        Some(rest) => (true, rest),
        None => (false, s.strip_prefix('+').unwrap_or(s)),
    };
    let (int, frac) = body.split_once('.')?;
    if int.is_empty() && frac.is_empty() {
        return None;
    }
    let digits = format!("{int}{frac}");
    let num = BigInt::from_str(if digits.is_empty() { "0" } else { &digits }).ok()?;
    let den = num::pow(BigInt::from(10), frac.len());
    let r = Rational::new(num, den);
    Some(if neg { -r } else { r })
}

/// A scalar written as a JSON number or a rational string.
pub fn parse_scalar<S: Scalar>(v: &Value, path: &str) -> Result<S> {
    match v {
        Value::Number(n) => {
            if let Some(i) = n.as_i64() {
                Ok(S::from_i64(i))
            } else {
                let f = n.as_f64().ok_or_else(|| field_error(path, "number out of range"))?;
                let r = rational_from_f64(f).ok_or_else(|| field_error(path, "non-finite number"))?;
                Ok(S::from_rational(&r))
            }
        }
        Value::String(s) => {
            let s = s.trim();
            let r = if s.contains('.') {
                parse_decimal(s)
            } else {
                Rational::from_str(s).ok().filter(|r| !r.denom().is_zero())
            };
            r.map(|r| S::from_rational(&r))
                .ok_or_else(|| field_error(path, format!("cannot read {s:?} as a rational")))
        }
        _ => Err(field_error(path, "expected a number or a rational string")),
    }
}

pub fn scalar_to_json<S: Scalar>(v: &S) -> Value {
    if S::EXACT {
        Value::String(v.to_string())
    } else {
        json!(v.to_f64())
    }
}

pub fn parse_graph(text: &str) -> Result<Graph> {
    let v = syntax(text)?;
    let k = as_count(get(&v, "vertices")?, "vertices")?;
    let mut edges = Vec::new();
    for (idx, e) in as_array(get(&v, "edges")?, "edges")?.iter().enumerate() {
        let path = format!("edges[{idx}]");
        let pair = as_array(e, &path)?;
        if pair.len() != 2 {
            return Err(field_error(&path, "expected two vertices"));
        }
        let mut ends = [0usize; 2];
        for (s, end) in pair.iter().enumerate() {
            let sub = format!("{path}[{s}]");
            let i = as_count(end, &sub)?;
            if i == 0 || i > k {
                return Err(field_error(&sub, format!("vertex {i} outside 1..={k}")));
            }
            ends[s] = i - 1;
        }
        edges.push((ends[0], ends[1]));
    }
    Graph::new(k, edges).map_err(|e| field_error("edges", e))
}

pub fn graph_to_json(g: &Graph) -> Value {
    let edges: Vec<Value> = g.edges().map(|(i, j)| json!([i + 1, j + 1])).collect();
    json!({ "vertices": g.vertex_count(), "edges": edges })
}

pub fn parse_config<S: Scalar>(text: &str) -> Result<PointConfiguration<S>> {
    let v = syntax(text)?;
    let n = as_count(get(&v, "dim")?, "dim")?;
    let mut points = Vec::new();
    for (idx, pt) in as_array(get(&v, "points")?, "points")?.iter().enumerate() {
        let path = format!("points[{idx}]");
        let coords = as_array(pt, &path)?;
        if coords.len() != n {
            return Err(field_error(&path, format!("expected {n} coordinates, found {}", coords.len())));
        }
        let p = coords
            .iter()
            .enumerate()
            .map(|(a, c)| parse_scalar(c, &format!("{path}[{a}]")))
            .collect::<Result<Vec<S>>>()?;
        points.push(p);
    }
    if points.is_empty() {
        return Err(field_error("points", "no points"));
    }
    PointConfiguration::from_points(&points).map_err(|e| field_error("points", e))
}

pub fn config_to_json<S: Scalar>(p: &PointConfiguration<S>) -> Value {
    let points: Vec<Value> = (0..p.count())
        .map(|i| Value::Array(p.point(i).iter().map(scalar_to_json).collect()))
        .collect();
    json!({ "dim": p.dim(), "points": points })
}

/// Reads a subspace file against the configuration it describes motions of.
pub fn parse_subspace<S: Scalar>(text: &str, p: &PointConfiguration<S>) -> Result<MotionSpace<S>> {
    let v = syntax(text)?;
    let (n, k) = (p.dim(), p.count());
    let mut motions = Vec::new();
    for (idx, m) in as_array(get(&v, "basis")?, "basis")?.iter().enumerate() {
        let path = format!("basis[{idx}]");
        let rows = as_array(m, &path)?;
        if rows.len() != n {
            return Err(field_error(&path, format!("expected {n} rows, found {}", rows.len())));
        }
        let mut data = Vec::with_capacity(n * k);
        for (a, row) in rows.iter().enumerate() {
            let rp = format!("{path}[{a}]");
            let entries = as_array(row, &rp)?;
            if entries.len() != k {
                return Err(field_error(&rp, format!("expected {k} entries, found {}", entries.len())));
            }
            for (i, e) in entries.iter().enumerate() {
                data.push(parse_scalar(e, &format!("{rp}[{i}]"))?);
            }
        }
        motions.push(Motion::new(Matrix::from_vec(n, k, data)));
    }
    MotionSpace::span(p, &motions)
}

pub fn matrix_to_json<S: Scalar>(m: &Matrix<S>) -> Value {
    Value::Array((0..m.rows()).map(|a| Value::Array(m.row(a).iter().map(scalar_to_json).collect())).collect())
}

pub fn subspace_to_json<S: Scalar>(s: &MotionSpace<S>) -> Value {
    json!({ "basis": s.motions().iter().map(|u| matrix_to_json(u.matrix())).collect::<Vec<_>>() })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn graph_round_trip() {
        let g = parse_graph(r#"{"vertices": 4, "edges": [[1,2],[2,3],[3,4],[4,1]]}"#).unwrap();
        assert_eq!(g.edge_list(), vec![(0, 1), (0, 3), (1, 2), (2, 3)]);
        assert_eq!(parse_graph(&graph_to_json(&g).to_string()).unwrap(), g);
    }

    #[test]
    fn graph_diagnostics() {
        let err = parse_graph("{\"vertices\": 3,\n \"edges\": [[1,2],]}").unwrap_err();
        assert!(matches!(&err, Error::Parse(m) if m.starts_with("line 2")), "{err}");
        let err = parse_graph(r#"{"vertices": 3, "edges": [[1,4]]}"#).unwrap_err();
        assert!(matches!(&err, Error::Parse(m) if m.contains("edges[0][1]")), "{err}");
        let err = parse_graph(r#"{"edges": []}"#).unwrap_err();
        assert!(matches!(&err, Error::Parse(m) if m.contains("vertices")), "{err}");
    }

    #[test]
    fn scalars() {
        let r = |s: &str| parse_scalar::<Rational>(&Value::String(s.into()), "x").unwrap();
        assert_eq!(r("3/4"), Rational::from_ratio(3, 4));
        assert_eq!(r("-1.25"), Rational::from_ratio(-5, 4));
        assert_eq!(r("7"), Rational::from_i64(7));
        assert!(parse_scalar::<Rational>(&Value::String("1/0".into()), "x").is_err());
        assert_eq!(parse_scalar::<Rational>(&json!(0.5), "x").unwrap(), Rational::from_ratio(1, 2));
        assert_eq!(parse_scalar::<f64>(&Value::String("1/4".into()), "x").unwrap(), 0.25);
    }

    #[test]
    fn config_and_subspace_round_trip() {
        let text = r#"{"dim": 3, "points": [["1/2", 0, 0], [0, 1, 0], [0, 0, 1], [1, 1, 1], [2, -1, "3/7"]]}"#;
        let p = parse_config::<Rational>(text).unwrap();
        assert_eq!(p.point(0)[0], Rational::from_ratio(1, 2));
        assert_eq!(parse_config::<Rational>(&config_to_json(&p).to_string()).unwrap(), p);
        let s = crate::admissibility::example_one_space(&p);
        let back = parse_subspace(&subspace_to_json(&s).to_string(), &p).unwrap();
        assert_eq!(back, s);
        let err = parse_config::<Rational>(r#"{"dim": 3, "points": [[1, 2]]}"#).unwrap_err();
        assert!(matches!(&err, Error::Parse(m) if m.contains("points[0]")), "{err}");
    }
}
