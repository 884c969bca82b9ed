//! Oracles and corpora shared by the integration tests. Nothing here calls
//! into the engines under test.
#![allow(dead_code)]

use std::collections::HashSet;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use tutte::Multigraph;

/// Vertex sets of the connected components, by breadth-first search.
fn component_vertices(g: &Multigraph) -> Vec<Vec<usize>> {
    let n = g.vertex_count();
    let mut adj = vec![Vec::new(); n];
    for &(u, v) in g.edges() {
        adj[u].push(v);
        adj[v].push(u);
    }
    let mut seen = vec![false; n];
    let mut out = Vec::new();
    for start in 0..n {
        if seen[start] {
            continue;
        }
        seen[start] = true;
        let mut comp = vec![start];
        let mut head = 0;
        while head < comp.len() {
            let w = comp[head];
            head += 1;
            for &x in &adj[w] {
                if !seen[x] {
                    seen[x] = true;
                    comp.push(x);
                }
            }
        }
        comp.sort_unstable();
        out.push(comp);
    }
    out
}

/// Fraction-free Gaussian elimination.
fn bareiss_determinant(mut a: Vec<Vec<BigInt>>) -> BigInt {
    let n = a.len();
    if n == 0 {
        return BigInt::one();
    }
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if a[k][k].is_zero() {
            match (k + 1..n).find(|&r| !a[r][k].is_zero()) {
                Some(r) => {
                    a.swap(k, r);
                    sign = -sign;
                }
                None => return BigInt::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                a[i][j] = (&a[i][j] * &a[k][k] - &a[i][k] * &a[k][j]) / &prev;
            }
        }
        prev = a[k][k].clone();
    }
    sign * &a[n - 1][n - 1]
}

/// Number of maximal spanning forests: the product over components of a
/// reduced-Laplacian determinant. Loops are ignored, parallel edges add up.
pub fn matrix_tree_count(g: &Multigraph) -> BigInt {
    let mut total = BigInt::one();
    for comp in component_vertices(g) {
        let index = |v: usize| comp.iter().position(|&w| w == v);
        let k = comp.len();
        let mut lap = vec![vec![BigInt::zero(); k]; k];
        for &(u, v) in g.edges() {
            if u == v {
                continue;
            }
            if let (Some(a), Some(b)) = (index(u), index(v)) {
                lap[a][a] += 1;
                lap[b][b] += 1;
                lap[a][b] -= 1;
                lap[b][a] -= 1;
            }
        }
        let minor: Vec<Vec<BigInt>> = lap[1..].iter().map(|row| row[1..].to_vec()).collect();
        total *= bareiss_determinant(minor);
    }
    total
}

pub fn is_connected(g: &Multigraph) -> bool {
    component_vertices(g).len() <= 1
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for pos in 0..n {
            let mut q = p.clone();
            q.insert(pos, n - 1);
            out.push(q);
        }
    }
    out
}

/// Smallest sorted edge list over all relabelings.
fn brute_force_form(edges: &[(usize, usize)], perms: &[Vec<usize>]) -> Vec<(usize, usize)> {
    perms
        .iter()
        .map(|p| {
            let mut e: Vec<(usize, usize)> = edges
                .iter()
                .map(|&(u, v)| (p[u].min(p[v]), p[u].max(p[v])))
                .collect();
            e.sort_unstable();
            e
        })
        .min()
        .unwrap()
}

/// Every connected multigraph (loops and parallel edges allowed) with
/// `1..=max_n` vertices and at most `max_m` edges, one per isomorphism class.
/// Built level by level: each class with `e` edges is extended by every
/// possible edge and the results deduplicated by brute-force canonical form.
pub fn connected_multigraph_corpus(max_n: usize, max_m: usize) -> Vec<Multigraph> {
    let mut out = Vec::new();
    for n in 1..=max_n {
        let slots: Vec<(usize, usize)> = (0..n).flat_map(|u| (u..n).map(move |v| (u, v))).collect();
        let perms = permutations(n);
        let mut level = vec![Multigraph::empty(n)];
        for _ in 0..=max_m {
            out.extend(level.iter().filter(|g| is_connected(g)).cloned());
            let mut seen = HashSet::new();
            let mut next = Vec::new();
            for g in &level {
                for &slot in &slots {
                    let mut edges = g.edges().to_vec();
                    edges.push(slot);
                    if seen.insert(brute_force_form(&edges, &perms)) {
                        next.push(Multigraph::new(n, edges).unwrap());
                    }
                }
            }
            level = next;
        }
    }
    out
}
