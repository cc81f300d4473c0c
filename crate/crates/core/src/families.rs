//! Named graph families: cycles, paths, complete graphs, circulants and
//! Kneser graphs.

use crate::graph::{Graph, GraphError};
use crate::vertex_set::{VertexSet, MAX_VERTICES};

pub fn cycle(n: usize) -> Result<Graph, GraphError> {
    if n < 3 {
        return Err(GraphError::Family(format!("cycle needs n >= 3, got {n}")));
    }
    let edges: Vec<_> = (1..=n).map(|i| (i, i % n + 1)).collect();
    Graph::from_edge_list(n, &edges)
}

pub fn path(n: usize) -> Result<Graph, GraphError> {
    if n < 1 {
        return Err(GraphError::Family("path needs n >= 1".into()));
    }
    let edges: Vec<_> = (1..n).map(|i| (i, i + 1)).collect();
    Graph::from_edge_list(n, &edges)
}

pub fn complete(n: usize) -> Result<Graph, GraphError> {
    if n < 1 {
        return Err(GraphError::Family("complete graph needs n >= 1".into()));
    }
    let mut edges = Vec::new();
    for u in 1..=n {
        for v in u + 1..=n {
            edges.push((u, v));
        }
    }
    Graph::from_edge_list(n, &edges)
}

/// `C_n(S)`: `i ~ j` iff `|i - j|` or `n - |i - j|` lies in `strides`.
pub fn circulant(n: usize, strides: &[usize]) -> Result<Graph, GraphError> {
    if n < 3 {
        return Err(GraphError::Family(format!("circulant needs n >= 3, got {n}")));
    }
    if let Some(&s) = strides.iter().find(|&&s| s == 0 || s > n / 2) {
        return Err(GraphError::Family(format!(
            "stride {s} outside 1..={} for n = {n}",
            n / 2
        )));
    }
    let mut edges = Vec::new();
    for i in 1..=n {
        for &s in strides {
            let j = (i - 1 + s) % n + 1;
            edges.push((i, j));
        }
    }
    Graph::from_edge_list(n, &edges)
}

/// A Kneser graph together with the k-subset behind each vertex.
#[derive(Debug, Clone)]
pub struct KneserGraph {
    pub graph: Graph,
    /// `subsets[v - 1]` is the k-subset of `[n]` labelling vertex `v`.
    pub subsets: Vec<VertexSet>,
}

/// `K(n, k)`: k-subsets of `[n]`, adjacent when disjoint.
///
/// Vertices are numbered in colexicographic order of their subsets, which is
/// the same as increasing order of the subset bitmasks. For `K(5, 2)` this
/// gives `{1,2}, {1,3}, {2,3}, {1,4}, ...`.
pub fn kneser(n: usize, k: usize) -> Result<KneserGraph, GraphError> {
    if k == 0 || k >= n {
        return Err(GraphError::Family(format!(
            "kneser needs 1 <= k < n, got n = {n}, k = {k}"
        )));
    }
    if n > 63 {
        return Err(GraphError::TooManyVertices(n));
    }
    let count = binomial(n, k);
    if count > MAX_VERTICES as u128 {
        return Err(GraphError::TooManyVertices(count.min(usize::MAX as u128) as usize));
    }
    let mut subsets = Vec::with_capacity(count as usize);
    let mut mask: u64 = (1 << k) - 1;
    while mask < 1 << n {
        subsets.push(VertexSet::from_bits(n, mask).expect("within ground set"));
        // next mask with the same popcount (Gosper's hack)
        let c = mask & mask.wrapping_neg();
        let r = mask + c;
        mask = (((r ^ mask) >> 2) / c) | r;
    }
    let mut edges = Vec::new();
    for (i, a) in subsets.iter().enumerate() {
        for (j, b) in subsets.iter().enumerate().skip(i + 1) {
            if a.is_disjoint(b) {
                edges.push((i + 1, j + 1));
            }
        }
    }
    let graph = Graph::from_edge_list(subsets.len(), &edges)?;
    Ok(KneserGraph { graph, subsets })
}

pub fn binomial(n: usize, k: usize) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    (0..k).fold(1u128, |acc, i| acc * (n - i) as u128 / (i + 1) as u128)
}
