//! Simple undirected graphs on vertices `1..=n` with bitmask adjacency.

use std::fmt;

use serde::{Deserialize, Deserializer, Serialize, Serializer};
use thiserror::Error;

use crate::vertex_set::{VertexSet, MAX_VERTICES};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("vertex {vertex} is outside 1..={n}")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("{0} vertices exceeds the supported maximum of {MAX_VERTICES}")]
    TooManyVertices(usize),
    #[error("graph must have at least {min} vertices, got {n}")]
    TooFewVertices { n: usize, min: usize },
    #[error("vertex subset is empty")]
    EmptySubset,
    #[error("graph is disconnected")]
    Disconnected,
    #[error("{0}")]
    Family(String),
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
}

/// Shortest-path length, with `Infinite` ordered above every finite value.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Distance {
    Finite(u32),
    Infinite,
}

impl Distance {
    pub fn finite(self) -> Option<u32> {
        match self {
            Distance::Finite(d) => Some(d),
            Distance::Infinite => None,
        }
    }

    pub fn is_infinite(self) -> bool {
        matches!(self, Distance::Infinite)
    }
}

impl From<u32> for Distance {
    fn from(d: u32) -> Self {
        Distance::Finite(d)
    }
}

impl PartialEq<u32> for Distance {
    fn eq(&self, other: &u32) -> bool {
        *self == Distance::Finite(*other)
    }
}

impl PartialOrd<u32> for Distance {
    fn partial_cmp(&self, other: &u32) -> Option<std::cmp::Ordering> {
        Some(self.cmp(&Distance::Finite(*other)))
    }
}

impl fmt::Display for Distance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Distance::Finite(d) => write!(f, "{d}"),
            Distance::Infinite => f.write_str("inf"),
        }
    }
}

// JSON form: a number, or the string "inf".
impl Serialize for Distance {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match self {
            Distance::Finite(d) => s.serialize_u32(*d),
            Distance::Infinite => s.serialize_str("inf"),
        }
    }
}

impl<'de> Deserialize<'de> for Distance {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Raw {
            Num(u32),
            Str(String),
        }
        match Raw::deserialize(d)? {
            Raw::Num(v) => Ok(Distance::Finite(v)),
            Raw::Str(s) if s == "inf" => Ok(Distance::Infinite),
            Raw::Str(s) => Err(serde::de::Error::custom(format!("bad distance {s:?}"))),
        }
    }
}

/// A simple undirected graph. Immutable once built.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    adj: Vec<VertexSet>,
}

/// A graph derived from another one together with the original label of
/// each of its vertices (`original[i]` is the source label of vertex `i + 1`).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Subgraph {
    pub graph: Graph,
    pub original: Vec<usize>,
}

impl Subgraph {
    pub fn original_label(&self, v: usize) -> usize {
        self.original[v - 1]
    }
}

impl Graph {
    /// Graph on `n` isolated vertices.
    pub fn empty(n: usize) -> Result<Self, GraphError> {
        if n > MAX_VERTICES {
            return Err(GraphError::TooManyVertices(n));
        }
        Ok(Graph {
            adj: vec![VertexSet::empty(n); n],
        })
    }

    /// Builds a graph from 1-based unordered pairs. Duplicate edges collapse.
    pub fn from_edge_list(n: usize, edges: &[(usize, usize)]) -> Result<Self, GraphError> {
        let mut g = Self::empty(n)?;
        for &(u, v) in edges {
            for w in [u, v] {
                if w == 0 || w > n {
                    return Err(GraphError::VertexOutOfRange { vertex: w, n });
                }
            }
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            g.adj[u - 1].insert(v);
            g.adj[v - 1].insert(u);
        }
        Ok(g)
    }

    /// Builds a graph from adjacency sets, checking symmetry and loops.
    pub fn from_adjacency(adj: Vec<VertexSet>) -> Result<Self, GraphError> {
        let n = adj.len();
        if n > MAX_VERTICES {
            return Err(GraphError::TooManyVertices(n));
        }
        for (i, row) in adj.iter().enumerate() {
            if row.universe() != n {
                return Err(GraphError::Family("adjacency row has wrong universe".into()));
            }
            if row.contains(i + 1) {
                return Err(GraphError::SelfLoop(i + 1));
            }
            for j in row {
                if !adj[j - 1].contains(i + 1) {
                    return Err(GraphError::Family(format!(
                        "adjacency not symmetric between {} and {j}",
                        i + 1
                    )));
                }
            }
        }
        Ok(Graph { adj })
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|s| s.len()).sum::<usize>() / 2
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for u in 1..=self.n() {
            for v in self.adj[u - 1].iter().filter(|&v| v > u) {
                out.push((u, v));
            }
        }
        out
    }

    fn check_vertex(&self, v: usize) -> Result<(), GraphError> {
        if v == 0 || v > self.n() {
            Err(GraphError::VertexOutOfRange { vertex: v, n: self.n() })
        } else {
            Ok(())
        }
    }

    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.n())
    }

    /// Open neighborhood `N(v)`. Panics if `v` is out of range.
    #[inline]
    pub fn neighbors(&self, v: usize) -> VertexSet {
        self.adj[v - 1]
    }

    /// Closed neighborhood `N[v] = N(v) ∪ {v}`. Panics if `v` is out of range.
    #[inline]
    pub fn closed_nbhd(&self, v: usize) -> VertexSet {
        let mut s = self.adj[v - 1];
        s.insert(v);
        s
    }

    pub fn closed_neighborhood(&self, v: usize) -> Result<VertexSet, GraphError> {
        self.check_vertex(v)?;
        Ok(self.closed_nbhd(v))
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v - 1].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u >= 1 && u <= self.n() && self.adj[u - 1].contains(v)
    }

    /// BFS distances from `source` inside the subgraph induced on `allowed`.
    /// Vertices outside `allowed`, or unreachable, get `Infinite`.
    pub fn distances_within(&self, source: usize, allowed: VertexSet) -> Vec<Distance> {
        let mut dist = vec![Distance::Infinite; self.n()];
        if !allowed.contains(source) {
            return dist;
        }
        let allowed = allowed.bits();
        let mut seen = 1u64 << (source - 1);
        let mut frontier = seen;
        let mut level = 0u32;
        while frontier != 0 {
            let mut next = 0u64;
            let mut f = frontier;
            while f != 0 {
                let i = f.trailing_zeros() as usize;
                f &= f - 1;
                dist[i] = Distance::Finite(level);
                next |= self.adj[i].bits();
            }
            next &= allowed & !seen;
            seen |= next;
            frontier = next;
            level += 1;
        }
        dist
    }

    /// Shortest-path length between `u` and `v` avoiding vertices outside `allowed`.
    pub fn distance_within(&self, u: usize, v: usize, allowed: VertexSet) -> Distance {
        if !allowed.contains(u) || !allowed.contains(v) {
            return Distance::Infinite;
        }
        let allowed = allowed.bits();
        let target = 1u64 << (v - 1);
        let mut seen = 1u64 << (u - 1);
        let mut frontier = seen;
        let mut level = 0u32;
        while frontier != 0 {
            if frontier & target != 0 {
                return Distance::Finite(level);
            }
            let mut next = 0u64;
            let mut f = frontier;
            while f != 0 {
                let i = f.trailing_zeros() as usize;
                f &= f - 1;
                next |= self.adj[i].bits();
            }
            next &= allowed & !seen;
            seen |= next;
            frontier = next;
            level += 1;
        }
        Distance::Infinite
    }

    pub fn distance(&self, u: usize, v: usize) -> Result<Distance, GraphError> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        Ok(self.distance_within(u, v, self.vertices()))
    }

    /// Diameter of the subgraph induced on `allowed` (0 for a single vertex,
    /// `Infinite` when disconnected, 0 for the empty set).
    pub fn diameter_within(&self, allowed: VertexSet) -> Distance {
        let mut best = Distance::Finite(0);
        for s in &allowed {
            let dist = self.distances_within(s, allowed);
            for t in &allowed {
                let d = dist[t - 1];
                if d.is_infinite() {
                    return Distance::Infinite;
                }
                best = best.max(d);
            }
        }
        best
    }

    pub fn diameter(&self) -> Distance {
        self.diameter_within(self.vertices())
    }

    pub fn is_connected(&self) -> bool {
        if self.n() == 0 {
            return true;
        }
        self.distances_within(1, self.vertices())
            .iter()
            .all(|d| !d.is_infinite())
    }

    /// True iff some component has at least as many edges as vertices.
    pub fn contains_cycle(&self) -> bool {
        let mut unseen = self.vertices();
        while let Some(s) = unseen.first() {
            let dist = self.distances_within(s, unseen);
            let comp = VertexSet::from_labels(
                self.n(),
                (1..=self.n()).filter(|&v| !dist[v - 1].is_infinite()),
            )
            .expect("labels in range");
            let edges: usize = comp.iter().map(|v| self.degree(v)).sum::<usize>() / 2;
            if edges >= comp.len() {
                return true;
            }
            unseen = unseen.difference(&comp);
        }
        false
    }

    /// Induced subgraph on `keep`, relabelled `1..=|keep|` in increasing order.
    pub fn induced_subgraph(&self, keep: VertexSet) -> Result<Subgraph, GraphError> {
        if keep.universe() != self.n() {
            return Err(GraphError::Family("vertex subset over a different universe".into()));
        }
        if keep.is_empty() {
            return Err(GraphError::EmptySubset);
        }
        let original = keep.to_vec();
        let mut new_label = vec![0usize; self.n() + 1];
        for (i, &v) in original.iter().enumerate() {
            new_label[v] = i + 1;
        }
        let m = original.len();
        let adj = original
            .iter()
            .map(|&v| {
                let row = self.adj[v - 1].intersection(&keep);
                VertexSet::from_labels(m, row.iter().map(|w| new_label[w])).expect("in range")
            })
            .collect();
        Ok(Subgraph {
            graph: Graph { adj },
            original,
        })
    }

    /// `G - v`: removes `v` and its incident edges.
    pub fn delete_vertex(&self, v: usize) -> Result<Subgraph, GraphError> {
        self.check_vertex(v)?;
        if self.n() < 2 {
            return Err(GraphError::TooFewVertices { n: self.n(), min: 2 });
        }
        let mut keep = self.vertices();
        keep.remove(v);
        self.induced_subgraph(keep)
    }

    /// Whether `G` has diameter `d` and every vertex deletion pushes the
    /// diameter to at least `d + 1` (disconnection counts as infinite).
    pub fn is_vertex_diameter_critical(&self, d: u32) -> Result<bool, GraphError> {
        if self.n() < 2 {
            return Err(GraphError::TooFewVertices { n: self.n(), min: 2 });
        }
        if !self.is_connected() {
            return Err(GraphError::Disconnected);
        }
        if self.diameter() != d {
            return Ok(false);
        }
        Ok((1..=self.n()).all(|x| self.deletion_raises_diameter(x, d)))
    }

    /// Whether `diam(G - x) >= d + 1`.
    pub fn deletion_raises_diameter(&self, x: usize, d: u32) -> bool {
        let mut rest = self.vertices();
        rest.remove(x);
        self.diameter_within(rest) > d
    }

    /// Two vertices at distance at least `d + 1` in `G - x`, if any.
    pub fn far_pair_without(&self, x: usize, d: u32) -> Option<(usize, usize)> {
        let mut rest = self.vertices();
        rest.remove(x);
        for u in &rest {
            let dist = self.distances_within(u, rest);
            if let Some(v) = rest.iter().find(|&v| v > u && dist[v - 1] > d) {
                return Some((u, v));
            }
        }
        None
    }

    /// Parses the text format: a header `n m` followed by `m` lines `u v`.
    /// Blank lines and text after `#` are ignored.
    pub fn parse_text(text: &str) -> Result<Self, GraphError> {
        let mut lines = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("").trim()))
            .filter(|(_, l)| !l.is_empty());
        let parse_pair = |line: usize, l: &str| -> Result<(usize, usize), GraphError> {
            let fields: Vec<&str> = l.split_whitespace().collect();
            if fields.len() != 2 {
                return Err(GraphError::Parse {
                    line,
                    msg: format!("expected two integers, found {:?}", l),
                });
            }
            let p = |s: &str| {
                s.parse::<usize>().map_err(|e| GraphError::Parse {
                    line,
                    msg: format!("{s:?}: {e}"),
                })
            };
            Ok((p(fields[0])?, p(fields[1])?))
        };
        let (hline, header) = lines.next().ok_or(GraphError::Parse {
            line: 1,
            msg: "missing \"n m\" header".into(),
        })?;
        let (n, m) = parse_pair(hline, header)?;
        let mut edges = Vec::with_capacity(m);
        for (line, l) in lines {
            let (u, v) = parse_pair(line, l)?;
            if u == 0 || u > n || v == 0 || v > n || u == v {
                return Err(GraphError::Parse {
                    line,
                    msg: format!("invalid edge {u} {v} for n = {n}"),
                });
            }
            edges.push((u, v));
        }
        if edges.len() != m {
            return Err(GraphError::Parse {
                line: hline,
                msg: format!("header declares {m} edges, found {}", edges.len()),
            });
        }
        Graph::from_edge_list(n, &edges)
    }

    pub fn to_text(&self) -> String {
        let edges = self.edges();
        let mut s = format!("{} {}\n", self.n(), edges.len());
        for (u, v) in edges {
            s.push_str(&format!("{u} {v}\n"));
        }
        s
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n(), self.edges())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{complete, cycle, path};

    #[test]
    fn edge_list_validation() {
        assert_eq!(
            Graph::from_edge_list(3, &[(1, 4)]),
            Err(GraphError::VertexOutOfRange { vertex: 4, n: 3 })
        );
        assert_eq!(Graph::from_edge_list(3, &[(2, 2)]), Err(GraphError::SelfLoop(2)));
        let g = Graph::from_edge_list(2, &[(1, 2), (2, 1)]).unwrap();
        assert_eq!(g.edge_count(), 1);
        assert!(Graph::empty(65).is_err());
    }

    #[test]
    fn neighborhoods() {
        let c5 = cycle(5).unwrap();
        assert_eq!(c5.closed_neighborhood(1).unwrap().to_vec(), vec![1, 2, 5]);
        let k2 = Graph::from_edge_list(2, &[(1, 2)]).unwrap();
        assert_eq!(k2.closed_neighborhood(2).unwrap().to_vec(), vec![1, 2]);
        assert!(c5.closed_neighborhood(6).is_err());
        assert!(c5.closed_neighborhood(0).is_err());
    }

    #[test]
    fn distances_and_diameter() {
        let c6 = cycle(6).unwrap();
        assert_eq!(c6.distance(1, 4).unwrap(), Distance::Finite(3));
        assert_eq!(c6.distance(2, 2).unwrap(), Distance::Finite(0));
        let two = Graph::empty(2).unwrap();
        assert_eq!(two.distance(1, 2).unwrap(), Distance::Infinite);
        assert_eq!(two.diameter(), Distance::Infinite);
        assert_eq!(cycle(5).unwrap().diameter(), 2);
        assert_eq!(c6.diameter(), 3);
        assert_eq!(Graph::empty(1).unwrap().diameter(), 0);
        assert!(c6.distance(1, 7).is_err());
    }

    #[test]
    fn deletion_and_induced() {
        let c5 = cycle(5).unwrap();
        let p = c5.delete_vertex(3).unwrap();
        assert_eq!(p.graph.n(), 4);
        assert_eq!(p.original, vec![1, 2, 4, 5]);
        // 1-2 and 4-5-1 survive: relabelled 1-2, 3-4, 4-1
        assert_eq!(p.graph.edges(), vec![(1, 2), (1, 4), (3, 4)]);
        assert_eq!(p.graph.diameter(), 3);

        let k2 = Graph::from_edge_list(2, &[(1, 2)]).unwrap();
        let single = k2.delete_vertex(1).unwrap();
        assert_eq!(single.graph.n(), 1);
        assert_eq!(single.original_label(1), 2);
        assert!(single.graph.delete_vertex(1).is_err());

        // C6 - 1 is a path on five vertices
        let q = cycle(6).unwrap().delete_vertex(1).unwrap();
        assert_eq!(q.graph.diameter(), 4);

        let tri = c5.induced_subgraph(VertexSet::from_labels(5, [1, 2, 3]).unwrap()).unwrap();
        assert_eq!(tri.graph.edges(), vec![(1, 2), (2, 3)]);
        assert_eq!(c5.induced_subgraph(c5.vertices()).unwrap().graph, c5);
        assert_eq!(
            c5.induced_subgraph(VertexSet::empty(5)),
            Err(GraphError::EmptySubset)
        );
    }

    #[test]
    fn connectivity_and_cycles() {
        assert!(cycle(7).unwrap().is_connected());
        let kk = Graph::from_edge_list(4, &[(1, 2), (3, 4)]).unwrap();
        assert!(!kk.is_connected());
        assert!(!path(6).unwrap().contains_cycle());
        assert!(cycle(3).unwrap().contains_cycle());
        let pendant = Graph::from_edge_list(
            6,
            &[(1, 2), (2, 3), (3, 4), (4, 5), (5, 1), (5, 6)],
        )
        .unwrap();
        assert!(pendant.contains_cycle());
        // forest with two components
        let forest = Graph::from_edge_list(5, &[(1, 2), (3, 4), (4, 5)]).unwrap();
        assert!(!forest.contains_cycle());
    }

    #[test]
    fn criticality() {
        assert!(cycle(5).unwrap().is_vertex_diameter_critical(2).unwrap());
        assert!(!cycle(4).unwrap().is_vertex_diameter_critical(2).unwrap());
        assert!(!cycle(3).unwrap().is_vertex_diameter_critical(2).unwrap());
        assert!(!complete(4).unwrap().is_vertex_diameter_critical(2).unwrap());
        let kk = Graph::from_edge_list(4, &[(1, 2), (3, 4)]).unwrap();
        assert_eq!(kk.is_vertex_diameter_critical(2), Err(GraphError::Disconnected));
        assert!(Graph::empty(1).unwrap().is_vertex_diameter_critical(2).is_err());
    }

    #[test]
    fn text_format() {
        let text = "# a 5-cycle\n5 5\n1 2\n2 3\n3 4 # comment\n\n4 5\n5 1\n";
        let g = Graph::parse_text(text).unwrap();
        assert_eq!(g, cycle(5).unwrap());
        assert_eq!(Graph::parse_text(&g.to_text()).unwrap(), g);
        assert!(matches!(
            Graph::parse_text("3 2\n1 2\n"),
            Err(GraphError::Parse { .. })
        ));
        assert!(matches!(
            Graph::parse_text("3 1\n1 x\n"),
            Err(GraphError::Parse { line: 2, .. })
        ));
        assert!(matches!(
            Graph::parse_text("3 1\n1 1\n"),
            Err(GraphError::Parse { line: 2, .. })
        ));
    }

    #[test]
    fn distance_json() {
        let s = serde_json::to_string(&[Distance::Finite(3), Distance::Infinite]).unwrap();
        assert_eq!(s, "[3,\"inf\"]");
        let back: Vec<Distance> = serde_json::from_str(&s).unwrap();
        assert_eq!(back, vec![Distance::Finite(3), Distance::Infinite]);
        assert!(Distance::Infinite > Distance::Finite(u32::MAX));
    }
}
