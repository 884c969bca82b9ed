use std::fmt::Write as _;

use crate::error::{Error, Result};

/// Undirected multigraph on vertices `0..n`. Loops and parallel edges are
/// allowed, and edge order is significant (it is the activity order).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Multigraph {
    n: usize,
    edges: Vec<(usize, usize)>,
}

/// How an edge behaves under deletion–contraction.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum EdgeKind {
    Loop,
    Bridge,
    Ordinary,
}

/// Disjoint-set forest with path halving.
#[derive(Clone, Debug)]
pub(crate) struct UnionFind {
    parent: Vec<usize>,
    sets: usize,
}

impl UnionFind {
    pub(crate) fn new(n: usize) -> Self {
        Self {
            parent: (0..n).collect(),
            sets: n,
        }
    }

    pub(crate) fn find(&mut self, mut a: usize) -> usize {
        while self.parent[a] != a {
            self.parent[a] = self.parent[self.parent[a]];
            a = self.parent[a];
        }
        a
    }

    /// Returns `false` if `a` and `b` were already joined.
    pub(crate) fn union(&mut self, a: usize, b: usize) -> bool {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        self.parent[ra.max(rb)] = ra.min(rb);
        self.sets -= 1;
        true
    }

    pub(crate) fn sets(&self) -> usize {
        self.sets
    }
}

impl Multigraph {
    pub fn new(n: usize, edges: Vec<(usize, usize)>) -> Result<Self> {
        if let Some(&(u, v)) = edges.iter().find(|&&(u, v)| u >= n || v >= n) {
            return Err(Error::VertexRange { u, v, n });
        }
        Ok(Self { n, edges })
    }

    /// `n` isolated vertices.
    pub fn empty(n: usize) -> Self {
        Self {
            n,
            edges: Vec::new(),
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn edge(&self, e: usize) -> Result<(usize, usize)> {
        self.edges.get(e).copied().ok_or(Error::EdgeIndex {
            index: e,
            len: self.edges.len(),
        })
    }

    fn check_subset(&self, subset: &[usize]) -> Result<()> {
        match subset.iter().find(|&&e| e >= self.edges.len()) {
            Some(&index) => Err(Error::EdgeIndex {
                index,
                len: self.edges.len(),
            }),
            None => Ok(()),
        }
    }

    /// Components of `(V, subset)`, isolated vertices included.
    pub fn component_count(&self, subset: &[usize]) -> Result<usize> {
        self.check_subset(subset)?;
        let mut uf = UnionFind::new(self.n);
        for &e in subset {
            let (u, v) = self.edges[e];
            uf.union(u, v);
        }
        Ok(uf.sets())
    }

    /// `n - k(subset)`.
    pub fn graphic_rank(&self, subset: &[usize]) -> Result<u32> {
        Ok((self.n - self.component_count(subset)?) as u32)
    }

    /// Component count for the edges selected by bit `e` of `mask`.
    pub(crate) fn component_count_mask(&self, mask: u64) -> usize {
        let mut uf = UnionFind::new(self.n);
        for (e, &(u, v)) in self.edges.iter().enumerate() {
            if mask >> e & 1 == 1 {
                uf.union(u, v);
            }
        }
        uf.sets()
    }

    pub fn components(&self) -> usize {
        let mut uf = UnionFind::new(self.n);
        for &(u, v) in &self.edges {
            uf.union(u, v);
        }
        uf.sets()
    }

    /// Rank of the whole edge set, `n - c`.
    pub fn rank(&self) -> u32 {
        (self.n - self.components()) as u32
    }

    /// Connected in the usual sense; the graph on zero vertices counts as connected.
    pub fn is_connected(&self) -> bool {
        self.components() <= 1
    }

    pub fn delete_edge(&self, e: usize) -> Result<Multigraph> {
        self.edge(e)?;
        let mut edges = self.edges.clone();
        edges.remove(e);
        Ok(Self { n: self.n, edges })
    }

    /// Merges the endpoints of `e` into the lower label and shifts the labels
    /// above the higher endpoint down by one. Edges parallel to `e` become loops.
    pub fn contract_edge(&self, e: usize) -> Result<Multigraph> {
        let (u, v) = self.edge(e)?;
        if u == v {
            return Err(Error::ContractLoop(e));
        }
        let (lo, hi) = (u.min(v), u.max(v));
        let relabel = |w: usize| match w.cmp(&hi) {
            std::cmp::Ordering::Less => w,
            std::cmp::Ordering::Equal => lo,
            std::cmp::Ordering::Greater => w - 1,
        };
        let edges = self
            .edges
            .iter()
            .enumerate()
            .filter(|&(f, _)| f != e)
            .map(|(_, &(a, b))| (relabel(a), relabel(b)))
            .collect();
        Ok(Self {
            n: self.n - 1,
            edges,
        })
    }

    pub fn classify_edge(&self, e: usize) -> Result<EdgeKind> {
        let (u, v) = self.edge(e)?;
        if u == v {
            return Ok(EdgeKind::Loop);
        }
        let mut uf = UnionFind::new(self.n);
        for (f, &(a, b)) in self.edges.iter().enumerate() {
            if f != e {
                uf.union(a, b);
            }
        }
        if uf.find(u) == uf.find(v) {
            Ok(EdgeKind::Ordinary)
        } else {
            Ok(EdgeKind::Bridge)
        }
    }

    /// Same graph with the edge list permuted: edge `k` of the result is edge
    /// `order[k]` of `self`.
    pub fn reorder_edges(&self, order: &[usize]) -> Result<Multigraph> {
        let mut seen = vec![false; self.edges.len()];
        if order.len() != self.edges.len() {
            return Err(Error::InvalidParameters(format!(
                "edge order has {} entries, graph has {} edges",
                order.len(),
                self.edges.len()
            )));
        }
        for &e in order {
            if e >= seen.len() || std::mem::replace(&mut seen[e], true) {
                return Err(Error::InvalidParameters(format!(
                    "edge order is not a permutation at {e}"
                )));
            }
        }
        Ok(Self {
            n: self.n,
            edges: order.iter().map(|&e| self.edges[e]).collect(),
        })
    }

    /// Same graph with vertex `w` renamed to `perm[w]`.
    pub fn relabel_vertices(&self, perm: &[usize]) -> Result<Multigraph> {
        Multigraph::new(
            self.n,
            self.edges
                .iter()
                .map(|&(u, v)| (perm[u], perm[v]))
                .collect(),
        )
    }

    /// Parses the text graph format: a `p N M` header followed by `M` lines of
    /// `u v`. Lines starting with `#` and blank lines are ignored.
    pub fn parse(text: &str) -> Result<Multigraph> {
        let mut header: Option<(usize, usize)> = None;
        let mut edges = Vec::new();
        for (idx, raw) in text.lines().enumerate() {
            let line_no = idx + 1;
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let fields: Vec<&str> = line.split_whitespace().collect();
            let bad = |msg: String| Error::ParseLine { line: line_no, msg };
            let num = |s: &str| {
                s.parse::<usize>()
                    .map_err(|_| bad(format!("expected a nonnegative integer, found {s:?}")))
            };
            match header {
                None => {
                    if fields.len() != 3 || fields[0] != "p" {
                        return Err(bad(format!("expected header \"p N M\", found {line:?}")));
                    }
                    header = Some((num(fields[1])?, num(fields[2])?));
                }
                Some((n, m)) => {
                    if fields.len() != 2 {
                        return Err(bad(format!("expected edge \"u v\", found {line:?}")));
                    }
                    if edges.len() == m {
                        return Err(bad(format!("more than the {m} declared edges")));
                    }
                    let (u, v) = (num(fields[0])?, num(fields[1])?);
                    if u >= n || v >= n {
                        return Err(bad(format!("vertex out of range 0..{n} in edge {u} {v}")));
                    }
                    edges.push((u, v));
                }
            }
        }
        let (n, m) = header.ok_or_else(|| Error::Parse("missing \"p N M\" header".into()))?;
        if edges.len() != m {
            return Err(Error::Parse(format!(
                "header declares {m} edges but {} were given",
                edges.len()
            )));
        }
        Multigraph::new(n, edges)
    }

    pub fn to_text(&self) -> String {
        let mut out = format!("p {} {}\n", self.n, self.edges.len());
        for &(u, v) in &self.edges {
            let _ = writeln!(out, "{u} {v}");
        }
        out
    }
}
