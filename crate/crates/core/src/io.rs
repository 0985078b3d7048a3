//! Text and JSON formats for graphs, frameworks, matrices and motions.
//!
//! Rationals are written as canonical strings: `"p/q"` in lowest terms with
//! a positive denominator, or `"p"` when the denominator is one.

use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::cofactor::{Framework, Motion, Point};
use crate::error::{Error, Result};
use crate::graph::{Edge, Graph};
use crate::linalg::{format_rational, parse_rational, Rational};
use crate::projective::Mat3;

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct GraphJson {
    n: usize,
    edges: Vec<[usize; 2]>,
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct FrameworkJson {
    n: usize,
    edges: Vec<[usize; 2]>,
    coords: Vec<[String; 2]>,
}

fn json_err(e: serde_json::Error) -> Error {
    Error::Parse(e.to_string())
}

fn pairs(edges: &[[usize; 2]]) -> Vec<(usize, usize)> {
    edges.iter().map(|&[u, v]| (u, v)).collect()
}

fn edge_list(g: &Graph) -> Vec<[usize; 2]> {
    g.edges().iter().map(|e| e.endpoints()).collect()
}

/// Parses either the text format (`n m` then `m` lines `u v`) or the JSON
/// object `{"n": .., "edges": [[u, v], ..]}`. Lines starting with `#` are
/// ignored in the text format.
pub fn parse_graph(input: &str) -> Result<Graph> {
    if input.trim_start().starts_with('{') {
        let g: GraphJson = serde_json::from_str(input).map_err(json_err)?;
        return Graph::from_pairs(g.n, &pairs(&g.edges));
    }
    let mut lines = input
        .lines()
        .map(str::trim)
        .enumerate()
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
    let numbers = |lineno: usize, line: &str| -> Result<(usize, usize)> {
        let fields: Vec<&str> = line.split_whitespace().collect();
        let [a, b] = fields[..] else {
            return Err(Error::Parse(format!(
                "line {}: expected two integers",
                lineno + 1
            )));
        };
        let parse = |s: &str| {
            s.parse::<usize>()
                .map_err(|_| Error::Parse(format!("line {}: bad integer {s:?}", lineno + 1)))
        };
        Ok((parse(a)?, parse(b)?))
    };
    let (i, header) = lines
        .next()
        .ok_or_else(|| Error::Parse("empty graph file".into()))?;
    let (n, m) = numbers(i, header)?;
    let edges = lines
        .map(|(i, l)| numbers(i, l))
        .collect::<Result<Vec<_>>>()?;
    if edges.len() != m {
        return Err(Error::Parse(format!(
            "header announces {m} edges, found {}",
            edges.len()
        )));
    }
    Graph::from_pairs(n, &edges)
}

pub fn graph_to_text(g: &Graph) -> String {
    let mut out = format!("{} {}\n", g.n(), g.edge_count());
    for e in g.edges() {
        out.push_str(&format!("{} {}\n", e.u(), e.v()));
    }
    out
}

pub fn graph_to_json(g: &Graph) -> Value {
    serde_json::to_value(GraphJson {
        n: g.n(),
        edges: edge_list(g),
    })
    .expect("plain data")
}

/// Parses a comma- or whitespace-separated list of `u-v` edges, e.g.
/// `"0-1,2-3"`. An empty string gives an empty list.
pub fn parse_edge_list(input: &str) -> Result<Vec<Edge>> {
    input
        .split(|c: char| c == ',' || c.is_whitespace())
        .filter(|t| !t.is_empty())
        .map(|t| {
            let (a, b) = t
                .split_once('-')
                .ok_or_else(|| Error::Parse(format!("edge {t:?} is not of the form u-v")))?;
            let parse = |s: &str| {
                s.trim()
                    .parse::<usize>()
                    .map_err(|_| Error::Parse(format!("bad vertex {s:?} in edge {t:?}")))
            };
            Edge::new(parse(a)?, parse(b)?)
        })
        .collect()
}

fn point_strings(p: &Point) -> [String; 2] {
    [format_rational(&p.x), format_rational(&p.y)]
}

fn parse_point(s: &[String; 2]) -> Result<Point> {
    Ok(Point::new(parse_rational(&s[0])?, parse_rational(&s[1])?))
}

pub fn parse_framework(input: &str) -> Result<Framework> {
    let f: FrameworkJson = serde_json::from_str(input).map_err(json_err)?;
    if f.coords.len() != f.n {
        return Err(Error::DimensionMismatch {
            expected: f.n,
            actual: f.coords.len(),
        });
    }
    let g = Graph::from_pairs(f.n, &pairs(&f.edges))?;
    let coords = f
        .coords
        .iter()
        .map(parse_point)
        .collect::<Result<Vec<_>>>()?;
    Framework::new(g, coords)
}

pub fn framework_to_json(f: &Framework) -> Value {
    serde_json::to_value(FrameworkJson {
        n: f.n(),
        edges: edge_list(f.graph()),
        coords: f.coords().iter().map(point_strings).collect(),
    })
    .expect("plain data")
}

pub fn rational_to_json(q: &Rational) -> Value {
    Value::String(format_rational(q))
}

pub fn vector_to_json(v: &[Rational]) -> Value {
    Value::Array(v.iter().map(rational_to_json).collect())
}

/// A motion as one `[q1, q2, q3]` triple of strings per vertex.
pub fn motion_to_json(q: &Motion) -> Value {
    Value::Array(q.0.iter().map(|t| vector_to_json(t)).collect())
}

pub fn parse_motion(input: &str) -> Result<Motion> {
    let rows: Vec<[String; 3]> = serde_json::from_str(input).map_err(json_err)?;
    let triples = rows
        .iter()
        .map(|r| {
            Ok([
                parse_rational(&r[0])?,
                parse_rational(&r[1])?,
                parse_rational(&r[2])?,
            ])
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(Motion(triples))
}

pub fn mat3_to_json(m: &Mat3) -> Value {
    Value::Array(m.0.iter().map(|r| vector_to_json(r)).collect())
}

pub fn parse_mat3(input: &str) -> Result<Mat3> {
    let rows: [[String; 3]; 3] = serde_json::from_str(input).map_err(json_err)?;
    let mut out = Mat3::identity();
    for (i, row) in rows.iter().enumerate() {
        for (j, s) in row.iter().enumerate() {
            out.0[i][j] = parse_rational(s)?;
        }
    }
    Ok(out)
}

/// Exactly four points as `[["x", "y"], ..]`.
pub fn parse_points4(input: &str) -> Result<[Point; 4]> {
    let rows: Vec<[String; 2]> = serde_json::from_str(input).map_err(json_err)?;
    let pts = rows.iter().map(parse_point).collect::<Result<Vec<_>>>()?;
    let len = pts.len();
    pts.try_into().map_err(|_| Error::DimensionMismatch {
        expected: 4,
        actual: len,
    })
}

pub fn points_to_json(pts: &[Point]) -> Value {
    Value::Array(
        pts.iter()
            .map(|p| Value::Array(point_strings(p).into_iter().map(Value::String).collect()))
            .collect(),
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::edge;
    use crate::linalg::{rat, ratio};

    #[test]
    fn text_graph_round_trip() {
        let g = Graph::complete(4);
        let text = graph_to_text(&g);
        assert!(text.starts_with("4 6\n0 1\n"));
        assert_eq!(parse_graph(&text).unwrap(), g);
    }

    #[test]
    fn text_graph_with_comments() {
        let g = parse_graph("# triangle\n3 3\n0 1\n\n1 2\n2 0\n").unwrap();
        assert_eq!(g, Graph::complete(3));
    }

    #[test]
    fn json_graph_round_trip() {
        let g = Graph::complete_bipartite(2, 3);
        let j = graph_to_json(&g).to_string();
        assert_eq!(parse_graph(&j).unwrap(), g);
        assert_eq!(
            parse_graph(r#"{"n": 3, "edges": [[0, 1]]}"#)
                .unwrap()
                .edge_count(),
            1
        );
    }

    #[test]
    fn graph_parse_errors() {
        assert!(parse_graph("").is_err());
        assert!(parse_graph("3 2\n0 1\n").is_err());
        assert!(parse_graph("3 1\n0 x\n").is_err());
        assert!(parse_graph("3 1\n0 3\n").is_err());
        assert!(parse_graph("3 1\n1 1\n").is_err());
        assert!(parse_graph("3 2\n0 1\n1 0\n").is_err());
        assert!(parse_graph(r#"{"n": 3}"#).is_err());
    }

    #[test]
    fn edge_list_parsing() {
        assert_eq!(
            parse_edge_list("0-1, 3-2").unwrap(),
            vec![edge(0, 1), edge(2, 3)]
        );
        assert!(parse_edge_list("").unwrap().is_empty());
        assert!(parse_edge_list("0:1").is_err());
        assert!(parse_edge_list("2-2").is_err());
    }

    #[test]
    fn framework_round_trip() {
        let g = Graph::complete(3);
        let f = Framework::new(
            g,
            vec![
                Point::int(0, 0),
                Point::new(ratio(1, 2), rat(-3)),
                Point::int(2, 5),
            ],
        )
        .unwrap();
        let j = framework_to_json(&f);
        assert_eq!(j["coords"][1][0], "1/2");
        assert_eq!(parse_framework(&j.to_string()).unwrap(), f);
    }

    #[test]
    fn framework_coordinate_count_checked() {
        let bad = r#"{"n": 3, "edges": [], "coords": [["0","0"]]}"#;
        assert!(matches!(
            parse_framework(bad),
            Err(Error::DimensionMismatch { .. })
        ));
    }

    #[test]
    fn mat3_and_motion_round_trip() {
        let m = Mat3::from_i64([[1, 2, 3], [0, -1, 4], [5, 0, 1]]);
        assert_eq!(parse_mat3(&mat3_to_json(&m).to_string()).unwrap(), m);
        let q = Motion(vec![
            [rat(1), ratio(-2, 3), rat(0)],
            [rat(4), rat(5), rat(6)],
        ]);
        assert_eq!(parse_motion(&motion_to_json(&q).to_string()).unwrap(), q);
    }

    #[test]
    fn four_points() {
        let pts = parse_points4(r#"[["0","0"],["1","0"],["0","1"],["1/2","1"]]"#).unwrap();
        assert_eq!(pts[3], Point::new(ratio(1, 2), rat(1)));
        assert!(parse_points4(r#"[["0","0"]]"#).is_err());
        assert_eq!(points_to_json(&pts)[3][0], "1/2");
    }
}
