//! Exhaustive generators for small graphs: every labelled graph on `n`
//! vertices, and every tree on `n` vertices up to isomorphism.

use std::collections::BTreeSet;

use crate::graph::Graph;
use crate::vertex_set::VertexSet;

/// Pairs `(u, v)` with `u < v` in the bit order used by [`labelled_graph`].
pub fn vertex_pairs(n: usize) -> Vec<(usize, usize)> {
    let mut pairs = Vec::with_capacity(n * n.saturating_sub(1) / 2);
    for u in 1..=n {
        for v in u + 1..=n {
            pairs.push((u, v));
        }
    }
    pairs
}

/// The labelled graph whose edges are the pairs selected by `mask`.
pub fn labelled_graph(n: usize, pairs: &[(usize, usize)], mask: u64) -> Graph {
    let mut adj = vec![VertexSet::empty(n); n];
    let mut m = mask;
    while m != 0 {
        let b = m.trailing_zeros() as usize;
        m &= m - 1;
        let (u, v) = pairs[b];
        adj[u - 1].insert(v);
        adj[v - 1].insert(u);
    }
    Graph::from_adjacency(adj).expect("symmetric by construction")
}

/// All `2^(n choose 2)` labelled graphs on `n` vertices, in mask order.
/// Intended for `n <= 7`.
pub fn all_labelled_graphs(n: usize) -> impl Iterator<Item = Graph> {
    assert!(n <= 8, "labelled enumeration on {n} vertices is out of reach");
    let pairs = vertex_pairs(n);
    let total = 1u64 << pairs.len();
    (0..total).map(move |mask| labelled_graph(n, &pairs, mask))
}

pub fn connected_labelled_graphs(n: usize) -> impl Iterator<Item = Graph> {
    all_labelled_graphs(n).filter(|g| g.is_connected())
}

/// Decodes a Prüfer sequence (1-based labels) into a labelled tree on
/// `seq.len() + 2` vertices.
pub fn prufer_decode(seq: &[usize]) -> Graph {
    let n = seq.len() + 2;
    let mut degree = vec![1usize; n + 1];
    for &s in seq {
        degree[s] += 1;
    }
    let mut edges = Vec::with_capacity(n - 1);
    for &s in seq {
        let leaf = (1..=n).find(|&v| degree[v] == 1).expect("a leaf always exists");
        edges.push((leaf, s));
        degree[leaf] -= 1;
        degree[s] -= 1;
    }
    let rest: Vec<usize> = (1..=n).filter(|&v| degree[v] == 1).collect();
    edges.push((rest[0], rest[1]));
    Graph::from_edge_list(n, &edges).expect("valid tree")
}

/// Canonical string of a tree, invariant under relabelling. Uses the
/// AHU encoding rooted at the center (or the smaller encoding over both
/// centers of a bicentral tree).
pub fn tree_canonical_form(g: &Graph) -> String {
    let n = g.n();
    if n == 1 {
        return "()".into();
    }
    // peel leaves to find the center
    let mut degree: Vec<usize> = (1..=n).map(|v| g.degree(v)).collect();
    let mut layer: Vec<usize> = (1..=n).filter(|&v| degree[v - 1] <= 1).collect();
    let mut remaining = n;
    while remaining > 2 {
        remaining -= layer.len();
        let mut next = Vec::new();
        for &leaf in &layer {
            for w in g.neighbors(leaf).iter() {
                if degree[w - 1] > 1 {
                    degree[w - 1] -= 1;
                    if degree[w - 1] == 1 {
                        next.push(w);
                    }
                }
            }
            degree[leaf - 1] = 0;
        }
        layer = next;
    }
    layer
        .iter()
        .map(|&c| encode_rooted(g, c, 0))
        .min()
        .expect("a tree has a center")
}

fn encode_rooted(g: &Graph, v: usize, parent: usize) -> String {
    let mut kids: Vec<String> = g
        .neighbors(v)
        .iter()
        .filter(|&w| w != parent)
        .map(|w| encode_rooted(g, w, v))
        .collect();
    kids.sort();
    format!("({})", kids.concat())
}

/// One representative of every isomorphism class of trees on `n` vertices,
/// found by decoding all `n^(n-2)` Prüfer sequences.
pub fn nonisomorphic_trees(n: usize) -> Vec<Graph> {
    assert!(n >= 1);
    if n <= 2 {
        let edges: Vec<_> = if n == 2 { vec![(1, 2)] } else { vec![] };
        return vec![Graph::from_edge_list(n, &edges).unwrap()];
    }
    let len = n - 2;
    let mut seen = BTreeSet::new();
    let mut out = Vec::new();
    let mut seq = vec![1usize; len];
    loop {
        let t = prufer_decode(&seq);
        if seen.insert(tree_canonical_form(&t)) {
            out.push(t);
        }
        // odometer increment
        let mut i = 0;
        loop {
            if i == len {
                return out;
            }
            if seq[i] < n {
                seq[i] += 1;
                break;
            }
            seq[i] = 1;
            i += 1;
        }
    }
}
