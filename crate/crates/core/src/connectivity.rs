//! Vertex connectivity.
//!
//! A graph is k-connected when it has at least `k` vertices and deleting any
//! fewer than `k` of them leaves it connected. Read literally this makes
//! `K_n` n-connected, which is the default here ([`Convention::Inclusive`]).
//! [`Convention::Classical`] gives the textbook `kappa(K_n) = n - 1`; the two
//! agree on every other graph.

use std::collections::VecDeque;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{low_mask, members, Graph, VertexSet};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Convention {
    /// `kappa(K_n) = n`.
    #[default]
    Inclusive,
    /// `kappa(K_n) = n - 1`.
    Classical,
}

/// Largest vertex count accepted by [`connectivity_bruteforce`].
pub const MAX_BRUTEFORCE_VERTICES: usize = 10;

/// Connectivity under [`Convention::Inclusive`].
pub fn connectivity(g: &Graph) -> Result<usize> {
    connectivity_with(g, Convention::Inclusive)
}

/// Connectivity via Menger's theorem: for a non-complete graph, the minimum
/// over non-adjacent pairs of the number of internally disjoint paths.
pub fn connectivity_with(g: &Graph, convention: Convention) -> Result<usize> {
    let n = g.vertex_count();
    if n == 0 {
        return Err(Error::EmptyGraph);
    }
    if g.is_complete() {
        return Ok(complete_value(n, convention));
    }
    if !g.is_connected() {
        return Ok(0);
    }
    let mut best = n - 2;
    for s in 0..n {
        for t in members(!g.neighbors(s) & low_mask(n) & !low_mask(s + 1)) {
            best = best.min(local_connectivity(g, s, t, best));
            if best == 1 {
                return Ok(1);
            }
        }
    }
    Ok(best)
}

fn complete_value(n: usize, convention: Convention) -> usize {
    match convention {
        Convention::Inclusive => n,
        Convention::Classical => n - 1,
    }
}

/// Maximum number of internally vertex-disjoint `s`-`t` paths between
/// non-adjacent `s` and `t`, stopping early once `cap` paths are found.
///
/// Unit-capacity max flow on the split graph: vertex `v` becomes an arc
/// `2v -> 2v + 1` of capacity one, each edge `uv` the arcs
/// `2u + 1 -> 2v` and `2v + 1 -> 2u`.
fn local_connectivity(g: &Graph, s: usize, t: usize, cap: usize) -> usize {
    let n = g.vertex_count();
    let nodes = 2 * n;
    let mut arcs: Vec<Arc> = Vec::new();
    let mut out: Vec<Vec<usize>> = vec![Vec::new(); nodes];
    let mut add = |from: usize, to: usize, capacity: i32, arcs: &mut Vec<Arc>| {
        out[from].push(arcs.len());
        arcs.push(Arc { to, capacity });
        out[to].push(arcs.len());
        arcs.push(Arc { to: from, capacity: 0 });
    };
    let unbounded = n as i32;
    for v in 0..n {
        let c = if v == s || v == t { unbounded } else { 1 };
        add(2 * v, 2 * v + 1, c, &mut arcs);
    }
    for (u, v) in g.edges() {
        add(2 * u + 1, 2 * v, unbounded, &mut arcs);
        add(2 * v + 1, 2 * u, unbounded, &mut arcs);
    }
    let (source, sink) = (2 * s + 1, 2 * t);
    let mut flow = 0;
    let mut parent_arc = vec![usize::MAX; nodes];
    while flow < cap {
        parent_arc.fill(usize::MAX);
        let mut queue = VecDeque::from([source]);
        let mut reached = false;
        while let Some(x) = queue.pop_front() {
            for &a in &out[x] {
                let y = arcs[a].to;
                if arcs[a].capacity > 0 && y != source && parent_arc[y] == usize::MAX {
                    parent_arc[y] = a;
                    if y == sink {
                        reached = true;
                        break;
                    }
                    queue.push_back(y);
                }
            }
            if reached {
                break;
            }
        }
        if !reached {
            break;
        }
        let mut y = sink;
        while y != source {
            let a = parent_arc[y];
            arcs[a].capacity -= 1;
            arcs[a ^ 1].capacity += 1;
            y = arcs[a ^ 1].to;
        }
        flow += 1;
    }
    flow
}

#[derive(Debug, Clone, Copy)]
struct Arc {
    to: usize,
    capacity: i32,
}

/// Connectivity straight from the definition: tries deleting every vertex
/// set in order of increasing size. Inclusive convention; `1 <= n <= 10`.
pub fn connectivity_bruteforce(g: &Graph) -> Result<usize> {
    connectivity_bruteforce_with(g, Convention::Inclusive)
}

pub fn connectivity_bruteforce_with(g: &Graph, convention: Convention) -> Result<usize> {
    let n = g.vertex_count();
    if !(1..=MAX_BRUTEFORCE_VERTICES).contains(&n) {
        return Err(Error::OutOfRange { what: "n", value: n, min: 1, max: MAX_BRUTEFORCE_VERTICES });
    }
    let all = g.vertex_set();
    for size in 0..n {
        let disconnects = (0..=all)
            .filter(|r: &VertexSet| r.count_ones() as usize == size)
            .any(|removed| g.components_within(all & !removed) > 1);
        if disconnects {
            return Ok(size);
        }
    }
    // Only complete graphs survive every deletion.
    Ok(complete_value(n, convention))
}
