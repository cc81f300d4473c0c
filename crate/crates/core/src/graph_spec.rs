//! Textual graph specifications such as `cycle:5` or `circulant:8:1,4`.

use std::fmt;
use std::path::PathBuf;
use std::str::FromStr;

use thiserror::Error;

use crate::families::{circulant, complete, cycle, kneser, path};
use crate::graph::{Graph, GraphError};
use crate::monomial::{graph_from_edge_ideal, IdealError, MonomialIdeal};
use crate::vertex_set::VertexSet;

#[derive(Debug, Error)]
pub enum SpecError {
    #[error("graph spec {text:?}, column {column}: {msg}")]
    Parse {
        text: String,
        column: usize,
        msg: String,
    },
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Ideal(#[from] IdealError),
    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        source: std::io::Error,
    },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GraphSpec {
    Cycle(usize),
    Path(usize),
    Complete(usize),
    Circulant(usize, Vec<usize>),
    Kneser(usize, usize),
    File(PathBuf),
    EdgeIdeal(PathBuf),
}

/// A built graph plus optional display names for its vertices.
#[derive(Debug, Clone)]
pub struct BuiltGraph {
    pub graph: Graph,
    pub vertex_names: Option<Vec<String>>,
}

impl GraphSpec {
    pub fn build(&self) -> Result<BuiltGraph, SpecError> {
        let plain = |graph| BuiltGraph {
            graph,
            vertex_names: None,
        };
        Ok(match self {
            GraphSpec::Cycle(n) => plain(cycle(*n)?),
            GraphSpec::Path(n) => plain(path(*n)?),
            GraphSpec::Complete(n) => plain(complete(*n)?),
            GraphSpec::Circulant(n, s) => plain(circulant(*n, s)?),
            GraphSpec::Kneser(n, k) => {
                let kg = kneser(*n, *k)?;
                BuiltGraph {
                    graph: kg.graph,
                    vertex_names: Some(kg.subsets.iter().map(VertexSet::to_string).collect()),
                }
            }
            GraphSpec::File(p) => plain(Graph::parse_text(&read(p)?)?),
            GraphSpec::EdgeIdeal(p) => {
                let ideal = MonomialIdeal::parse_text(&read(p)?, None)?;
                plain(graph_from_edge_ideal(&ideal)?)
            }
        })
    }
}

fn read(p: &PathBuf) -> Result<String, SpecError> {
    std::fs::read_to_string(p).map_err(|source| SpecError::Io {
        path: p.clone(),
        source,
    })
}

impl FromStr for GraphSpec {
    type Err = SpecError;

    fn from_str(text: &str) -> Result<Self, SpecError> {
        let err = |column: usize, msg: String| SpecError::Parse {
            text: text.to_string(),
            column,
            msg,
        };
        let (kind, rest) = text
            .split_once(':')
            .ok_or_else(|| err(1, "expected KIND:ARGS".into()))?;
        let base = kind.len() + 2;
        // fields after the kind, each with its 1-based starting column
        let mut fields = Vec::new();
        let mut col = base;
        for f in rest.split(':') {
            fields.push((col, f));
            col += f.len() + 1;
        }
        let int = |(col, f): (usize, &str)| -> Result<usize, SpecError> {
            f.parse::<usize>()
                .map_err(|_| err(col, format!("expected a nonnegative integer, found {f:?}")))
        };
        let arity = |want: usize| -> Result<(), SpecError> {
            if fields.len() != want {
                Err(err(
                    base,
                    format!("{kind} takes {want} argument(s), found {}", fields.len()),
                ))
            } else {
                Ok(())
            }
        };
        match kind {
            "cycle" | "path" | "complete" => {
                arity(1)?;
                let n = int(fields[0])?;
                Ok(match kind {
                    "cycle" => GraphSpec::Cycle(n),
                    "path" => GraphSpec::Path(n),
                    _ => GraphSpec::Complete(n),
                })
            }
            "circulant" => {
                arity(2)?;
                let n = int(fields[0])?;
                let (scol, list) = fields[1];
                let mut strides = Vec::new();
                let mut c = scol;
                for s in list.split(',') {
                    strides.push(int((c, s))?);
                    c += s.len() + 1;
                }
                Ok(GraphSpec::Circulant(n, strides))
            }
            "kneser" => {
                arity(2)?;
                let n = int(fields[0])?;
                let k = int(fields[1])?;
                if k == 0 || k >= n {
                    return Err(err(fields[1].0, format!("kneser needs 1 <= K < N, got N={n}, K={k}")));
                }
                Ok(GraphSpec::Kneser(n, k))
            }
            "file" | "edgeideal" => {
                if rest.is_empty() {
                    return Err(err(base, "missing path".into()));
                }
                let p = PathBuf::from(rest);
                Ok(if kind == "file" {
                    GraphSpec::File(p)
                } else {
                    GraphSpec::EdgeIdeal(p)
                })
            }
            _ => Err(err(1, format!("unknown graph kind {kind:?}"))),
        }
    }
}

impl fmt::Display for GraphSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GraphSpec::Cycle(n) => write!(f, "cycle:{n}"),
            GraphSpec::Path(n) => write!(f, "path:{n}"),
            GraphSpec::Complete(n) => write!(f, "complete:{n}"),
            GraphSpec::Circulant(n, s) => {
                let s: Vec<String> = s.iter().map(|x| x.to_string()).collect();
                write!(f, "circulant:{n}:{}", s.join(","))
            }
            GraphSpec::Kneser(n, k) => write!(f, "kneser:{n}:{k}"),
            GraphSpec::File(p) => write!(f, "file:{}", p.display()),
            GraphSpec::EdgeIdeal(p) => write!(f, "edgeideal:{}", p.display()),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn parse(s: &str) -> GraphSpec {
        s.parse().unwrap()
    }

    #[test]
    fn grammar() {
        assert_eq!(parse("cycle:5"), GraphSpec::Cycle(5));
        assert_eq!(parse("circulant:8:1,4"), GraphSpec::Circulant(8, vec![1, 4]));
        assert_eq!(parse("kneser:5:2"), GraphSpec::Kneser(5, 2));
        assert_eq!(parse("file:a/b.graph"), GraphSpec::File("a/b.graph".into()));
        for s in ["cycle:5", "path:3", "complete:1", "circulant:8:1,4", "kneser:5:2", "edgeideal:x.ideal"] {
            assert_eq!(parse(s).to_string(), s);
        }
    }

    #[test]
    fn errors_carry_columns() {
        let col = |s: &str| match s.parse::<GraphSpec>() {
            Err(SpecError::Parse { column, .. }) => column,
            other => panic!("{s}: {other:?}"),
        };
        assert_eq!(col("cycle:x"), 7);
        assert_eq!(col("circulant:8:1,y"), 15);
        assert_eq!(col("kneser:5:5"), 10);
        assert_eq!(col("wheel:5"), 1);
        assert_eq!(col("cycle"), 1);
        assert_eq!(col("cycle:5:6"), 7);
    }

    #[test]
    fn build() {
        let p = parse("kneser:5:2").build().unwrap();
        assert_eq!(p.graph.n(), 10);
        assert_eq!(p.vertex_names.unwrap()[0], "{1,2}");
        assert_eq!(parse("cycle:5").build().unwrap().graph.edge_count(), 5);
        assert!(parse("cycle:2").build().is_err());
        assert!(matches!(
            parse("file:/nonexistent/x.graph").build(),
            Err(SpecError::Io { .. })
        ));
    }
}
