//! Multigraphs, ranked sets, and generators for the test families.

mod graph;
mod ranked;

pub(crate) use graph::UnionFind;
pub use graph::{EdgeKind, Multigraph};
pub use ranked::{RankMap, RankTableJson, RankedSet, MAX_TABLE_ELEMENTS};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};

pub fn complete_graph(n: usize) -> Multigraph {
    let edges = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .collect();
    Multigraph::new(n, edges).expect("endpoints in range")
}

/// `C_n` for `n >= 1`; `C_1` is a single loop and `C_2` a pair of parallel edges.
pub fn cycle(n: usize) -> Result<Multigraph> {
    if n == 0 {
        return Err(Error::InvalidParameters(
            "cycle needs at least one vertex".into(),
        ));
    }
    Multigraph::new(n, (0..n).map(|u| (u, (u + 1) % n)).collect())
}

pub fn path(n: usize) -> Multigraph {
    Multigraph::new(n, (1..n).map(|v| (v - 1, v)).collect()).expect("endpoints in range")
}

/// Two poles `0` and `1` joined by internally disjoint paths with the given
/// edge counts.
pub fn theta(lengths: &[usize]) -> Result<Multigraph> {
    if lengths.is_empty() || lengths.contains(&0) {
        return Err(Error::InvalidParameters(
            "theta needs path lengths >= 1".into(),
        ));
    }
    let mut n = 2;
    let mut edges = Vec::new();
    for &len in lengths {
        let mut prev = 0;
        for _ in 1..len {
            edges.push((prev, n));
            prev = n;
            n += 1;
        }
        edges.push((prev, 1));
    }
    Multigraph::new(n, edges)
}

pub fn petersen() -> Multigraph {
    let mut edges = Vec::with_capacity(15);
    for i in 0..5 {
        edges.push((i, (i + 1) % 5));
        edges.push((i, i + 5));
        edges.push((i + 5, (i + 2) % 5 + 5));
    }
    Multigraph::new(10, edges).expect("endpoints in range")
}

/// `m` edges with both endpoints uniform over `0..n`, so loops and parallel
/// edges occur naturally. Deterministic in `seed`.
pub fn random_multigraph(n: usize, m: usize, seed: u64) -> Result<Multigraph> {
    if n == 0 && m > 0 {
        return Err(Error::InvalidParameters(
            "edges need at least one vertex".into(),
        ));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let edges = (0..m)
        .map(|_| (rng.gen_range(0..n), rng.gen_range(0..n)))
        .collect();
    Multigraph::new(n, edges)
}
