use std::collections::HashMap;

use super::canon::{canonical_certificate, CanonicalCertificate};
use crate::bipoly::BiPoly;
use crate::structures::{EdgeKind, Multigraph, UnionFind};

/// How the recursion chooses the edge to branch on.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum PivotRule {
    /// Strip every loop and contract every bridge up front, then branch on an
    /// ordinary edge of maximal parallel multiplicity.
    #[default]
    MaxMultiplicity,
    /// Always act on edge 0: `y T(G-e)` for a loop, `x T(G/e)` for a bridge,
    /// `T(G-e) + T(G/e)` otherwise.
    EdgeOrder,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct DelConOptions {
    pub memoize: bool,
    pub pivot: PivotRule,
}

impl Default for DelConOptions {
    fn default() -> Self {
        Self {
            memoize: true,
            pivot: PivotRule::default(),
        }
    }
}

pub fn tutte_deletion_contraction(g: &Multigraph) -> BiPoly {
    tutte_deletion_contraction_with(g, DelConOptions::default())
}

/// Deletion–contraction with an explicit pivot rule and memoization switch.
/// The cache lives only for this call.
pub fn tutte_deletion_contraction_with(g: &Multigraph, options: DelConOptions) -> BiPoly {
    let mut solver = Solver {
        options,
        cache: HashMap::new(),
    };
    match options.pivot {
        PivotRule::MaxMultiplicity => solver.reduced(g.clone()),
        PivotRule::EdgeOrder => solver.edge_order(g.clone()),
    }
}

struct Solver {
    options: DelConOptions,
    cache: HashMap<CanonicalCertificate, BiPoly>,
}

impl Solver {
    fn memoized(&mut self, g: &Multigraph, compute: impl FnOnce(&mut Self) -> BiPoly) -> BiPoly {
        if !self.options.memoize {
            return compute(self);
        }
        let key = canonical_certificate(g);
        if let Some(hit) = self.cache.get(&key) {
            return hit.clone();
        }
        let value = compute(self);
        self.cache.insert(key, value.clone());
        value
    }

    fn reduced(&mut self, g: Multigraph) -> BiPoly {
        let Reduction {
            core,
            loops,
            bridges,
        } = reduce(&g);
        if core.edge_count() == 0 {
            return BiPoly::monomial(bridges, loops, 1);
        }
        let inner = self.memoized(&core, |s| {
            let e = max_multiplicity_edge(&core);
            let deleted = core.delete_edge(e).expect("edge in range");
            let contracted = core.contract_edge(e).expect("core has no loops");
            s.reduced(deleted) + s.reduced(contracted)
        });
        inner.shift(bridges, loops)
    }

    fn edge_order(&mut self, g: Multigraph) -> BiPoly {
        if g.edge_count() == 0 {
            return BiPoly::one();
        }
        self.memoized(&g, |s| match g.classify_edge(0).expect("edge 0 exists") {
            EdgeKind::Loop => s.edge_order(g.delete_edge(0).unwrap()).shift(0, 1),
            EdgeKind::Bridge => s.edge_order(g.contract_edge(0).unwrap()).shift(1, 0),
            EdgeKind::Ordinary => {
                s.edge_order(g.delete_edge(0).unwrap()) + s.edge_order(g.contract_edge(0).unwrap())
            }
        })
    }
}

struct Reduction {
    core: Multigraph,
    loops: u32,
    bridges: u32,
}

/// Removes loops, contracts bridges and drops isolated vertices. The core has
/// only ordinary edges, and `T(g) = x^bridges y^loops T(core)`.
fn reduce(g: &Multigraph) -> Reduction {
    let n = g.vertex_count();
    let proper: Vec<(usize, usize)> = g.edges().iter().copied().filter(|&(u, v)| u != v).collect();
    let loops = (g.edge_count() - proper.len()) as u32;

    let is_bridge: Vec<bool> = (0..proper.len())
        .map(|e| {
            let mut uf = UnionFind::new(n);
            for (f, &(a, b)) in proper.iter().enumerate() {
                if f != e {
                    uf.union(a, b);
                }
            }
            let (u, v) = proper[e];
            uf.find(u) != uf.find(v)
        })
        .collect();
    let bridges = is_bridge.iter().filter(|&&b| b).count() as u32;

    let mut merged = UnionFind::new(n);
    for (e, &(u, v)) in proper.iter().enumerate() {
        if is_bridge[e] {
            merged.union(u, v);
        }
    }
    let kept: Vec<(usize, usize)> = proper
        .iter()
        .zip(&is_bridge)
        .filter(|(_, &b)| !b)
        .map(|(&(u, v), _)| (merged.find(u), merged.find(v)))
        .collect();

    let mut label = vec![usize::MAX; n];
    for &(u, v) in &kept {
        label[u] = 0;
        label[v] = 0;
    }
    let mut next = 0;
    for l in label.iter_mut().filter(|l| **l == 0) {
        *l = next;
        next += 1;
    }
    let core = Multigraph::new(
        next,
        kept.iter().map(|&(u, v)| (label[u], label[v])).collect(),
    )
    .expect("relabeled endpoints in range");
    Reduction {
        core,
        loops,
        bridges,
    }
}

fn max_multiplicity_edge(g: &Multigraph) -> usize {
    let mut count: HashMap<(usize, usize), usize> = HashMap::new();
    let key = |(u, v): (usize, usize)| (u.min(v), u.max(v));
    for &e in g.edges() {
        *count.entry(key(e)).or_default() += 1;
    }
    let mut best = 0;
    for (idx, &e) in g.edges().iter().enumerate() {
        if count[&key(e)] > count[&key(g.edges()[best])] {
            best = idx;
        }
    }
    best
}
