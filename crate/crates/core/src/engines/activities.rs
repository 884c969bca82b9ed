use std::collections::BTreeMap;

use crate::bipoly::BiPoly;
use crate::error::{Error, Result};
use crate::structures::{Multigraph, UnionFind};

/// Spanning trees counted by (internal, external) activity.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ActivityTable {
    counts: BTreeMap<(u32, u32), u64>,
}

impl ActivityTable {
    pub fn count(&self, internal: u32, external: u32) -> u64 {
        self.counts.get(&(internal, external)).copied().unwrap_or(0)
    }

    pub fn counts(&self) -> impl Iterator<Item = ((u32, u32), u64)> + '_ {
        self.counts.iter().map(|(&k, &c)| (k, c))
    }

    pub fn tree_count(&self) -> u64 {
        self.counts.values().sum()
    }

    pub fn to_bipoly(&self) -> BiPoly {
        BiPoly::from_terms(self.counts.iter().map(|(&(i, j), &c)| (i, j, c)))
    }
}

/// Enumerates spanning trees and tallies their activities with respect to the
/// edge-list order. Edge `e` of a tree is internally active when no smaller
/// edge crosses the cut that `T - e` leaves; an edge `f` outside the tree is
/// externally active when it is smaller than every edge of its cycle in `T + f`.
pub fn tutte_activities(g: &Multigraph) -> Result<ActivityTable> {
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let mut table = ActivityTable::default();
    let need = g.vertex_count().saturating_sub(1);
    let mut chosen = Vec::with_capacity(need);
    enumerate(g, 0, &mut chosen, need, &mut |tree| {
        let key = activities(g, tree);
        *table.counts.entry(key).or_default() += 1;
    });
    Ok(table)
}

/// Backtracks over edges in order, taking an edge only if it joins two tree
/// components and skipping it only if the remaining edges can still span.
fn enumerate(
    g: &Multigraph,
    next: usize,
    chosen: &mut Vec<usize>,
    need: usize,
    visit: &mut impl FnMut(&[usize]),
) {
    if chosen.len() == need {
        visit(chosen);
        return;
    }
    if next == g.edge_count() {
        return;
    }
    let edges = g.edges();
    let mut forest = UnionFind::new(g.vertex_count());
    for &e in chosen.iter() {
        forest.union(edges[e].0, edges[e].1);
    }
    let (u, v) = edges[next];
    if forest.find(u) != forest.find(v) {
        chosen.push(next);
        enumerate(g, next + 1, chosen, need, visit);
        chosen.pop();
    }
    for &(a, b) in &edges[next + 1..] {
        forest.union(a, b);
    }
    if forest.sets() == 1 {
        enumerate(g, next + 1, chosen, need, visit);
    }
}

fn activities(g: &Multigraph, tree: &[usize]) -> (u32, u32) {
    let edges = g.edges();
    let n = g.vertex_count();
    let mut in_tree = vec![false; edges.len()];
    for &e in tree {
        in_tree[e] = true;
    }

    let mut internal = 0;
    for &e in tree {
        let mut side = UnionFind::new(n);
        for &f in tree.iter().filter(|&&f| f != e) {
            side.union(edges[f].0, edges[f].1);
        }
        let smallest_crossing = (0..edges.len())
            .find(|&f| side.find(edges[f].0) != side.find(edges[f].1))
            .expect("e itself crosses");
        if smallest_crossing == e {
            internal += 1;
        }
    }

    let mut external = 0;
    for f in (0..edges.len()).filter(|&f| !in_tree[f]) {
        let (u, v) = edges[f];
        let path = tree_path(edges, tree, n, u, v);
        if path.iter().all(|&e| e > f) {
            external += 1;
        }
    }
    (internal, external)
}

/// Edge indices on the tree path from `from` to `to`.
fn tree_path(
    edges: &[(usize, usize)],
    tree: &[usize],
    n: usize,
    from: usize,
    to: usize,
) -> Vec<usize> {
    let mut adj: Vec<Vec<(usize, usize)>> = vec![Vec::new(); n];
    for &e in tree {
        let (a, b) = edges[e];
        adj[a].push((b, e));
        adj[b].push((a, e));
    }
    let mut via: Vec<Option<(usize, usize)>> = vec![None; n];
    let mut seen = vec![false; n];
    let mut stack = vec![from];
    seen[from] = true;
    while let Some(w) = stack.pop() {
        for &(x, e) in &adj[w] {
            if !seen[x] {
                seen[x] = true;
                via[x] = Some((w, e));
                stack.push(x);
            }
        }
    }
    let mut path = Vec::new();
    let mut at = to;
    while at != from {
        let (prev, e) = via[at].expect("tree spans the graph");
        path.push(e);
        at = prev;
    }
    path
}
