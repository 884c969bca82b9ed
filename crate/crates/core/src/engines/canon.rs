//! Canonical certificates for multigraphs.
//!
//! The search individualizes one vertex at a time from the first non-singleton
//! cell of an equitable partition and refines after every step. Each leaf is a
//! discrete partition, i.e. a relabeling, and the certificate is the smallest
//! sorted edge list produced by any leaf. Initial cells are keyed by degree
//! and loop multiplicity, and refinement only ever uses label-free data, so
//! the set of leaves (and hence its minimum) depends only on the isomorphism
//! class.

use crate::structures::Multigraph;

/// Bytes identifying a multigraph up to isomorphism.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalCertificate(Vec<u8>);

impl CanonicalCertificate {
    pub fn as_bytes(&self) -> &[u8] {
        &self.0
    }
}

struct Adjacency {
    n: usize,
    mult: Vec<u32>,
}

impl Adjacency {
    fn new(g: &Multigraph) -> Self {
        let n = g.vertex_count();
        let mut mult = vec![0; n * n];
        for &(u, v) in g.edges() {
            mult[u * n + v] += 1;
            if u != v {
                mult[v * n + u] += 1;
            }
        }
        Self { n, mult }
    }

    fn get(&self, u: usize, v: usize) -> u32 {
        self.mult[u * self.n + v]
    }
}

/// Replaces arbitrary sortable keys by their rank among the distinct keys.
fn rank_keys<K: Ord + Clone>(keys: &[K]) -> Vec<usize> {
    let mut distinct = keys.to_vec();
    distinct.sort();
    distinct.dedup();
    keys.iter()
        .map(|k| distinct.binary_search(k).expect("key present"))
        .collect()
}

fn cell_count(colors: &[usize]) -> usize {
    colors.iter().max().map_or(0, |&c| c + 1)
}

/// Refines `colors` to the coarsest equitable partition below it.
fn refine(adj: &Adjacency, colors: &mut Vec<usize>) {
    let n = adj.n;
    loop {
        let before = cell_count(colors);
        let keys: Vec<(usize, Vec<(usize, u32)>)> = (0..n)
            .map(|v| {
                let mut nbrs: Vec<(usize, u32)> = (0..n)
                    .filter(|&w| w != v && adj.get(v, w) > 0)
                    .map(|w| (colors[w], adj.get(v, w)))
                    .collect();
                nbrs.sort_unstable();
                (colors[v], nbrs)
            })
            .collect();
        *colors = rank_keys(&keys);
        if cell_count(colors) == before {
            return;
        }
    }
}

fn search(
    adj: &Adjacency,
    g: &Multigraph,
    colors: Vec<usize>,
    best: &mut Option<Vec<(usize, usize)>>,
) {
    let n = adj.n;
    let cells = cell_count(&colors);
    if cells == n {
        let mut edges: Vec<(usize, usize)> = g
            .edges()
            .iter()
            .map(|&(u, v)| {
                let (a, b) = (colors[u], colors[v]);
                (a.min(b), a.max(b))
            })
            .collect();
        edges.sort_unstable();
        if best.as_ref().is_none_or(|b| edges < *b) {
            *best = Some(edges);
        }
        return;
    }
    let mut size = vec![0usize; cells];
    for &c in &colors {
        size[c] += 1;
    }
    let target = size
        .iter()
        .position(|&s| s > 1)
        .expect("non-discrete partition");
    for v in (0..n).filter(|&v| colors[v] == target) {
        let keys: Vec<(usize, bool)> = (0..n).map(|w| (colors[w], w != v)).collect();
        let mut next = rank_keys(&keys);
        refine(adj, &mut next);
        search(adj, g, next, best);
    }
}

pub fn canonical_certificate(g: &Multigraph) -> CanonicalCertificate {
    let adj = Adjacency::new(g);
    let n = g.vertex_count();
    let initial: Vec<(u32, u32)> = (0..n)
        .map(|v| {
            let degree: u32 = (0..n).filter(|&w| w != v).map(|w| adj.get(v, w)).sum();
            (degree, adj.get(v, v))
        })
        .collect();
    let mut colors = rank_keys(&initial);
    refine(&adj, &mut colors);
    let mut best = None;
    search(&adj, g, colors, &mut best);
    let edges = best.unwrap_or_default();

    let mut bytes = Vec::with_capacity(8 + 8 * edges.len());
    bytes.extend_from_slice(&(n as u32).to_be_bytes());
    bytes.extend_from_slice(&(edges.len() as u32).to_be_bytes());
    for (u, v) in edges {
        bytes.extend_from_slice(&(u as u32).to_be_bytes());
        bytes.extend_from_slice(&(v as u32).to_be_bytes());
    }
    CanonicalCertificate(bytes)
}
