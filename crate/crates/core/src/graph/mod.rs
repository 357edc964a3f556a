//! Labeled simple graphs on at most 64 vertices, stored as neighbor bitsets.
//!
//! A graph also stands for its clique complex: faces are the cliques, and
//! since clique complexes are flag the 1-skeleton determines everything.

pub mod io;

use std::fmt;
use std::ops::Range;

use crate::error::{Error, Result};
use crate::transform::CliqueVector;

/// Upper bound on the vertex count; one `u64` holds a neighbor set.
pub const MAX_VERTICES: usize = 64;

/// Largest vertex count accepted by [`enumerate_graphs`].
pub const MAX_ENUMERATION_VERTICES: usize = 8;

/// A vertex subset as a bitmask, bit `v` set iff `v` is in the set.
pub type VertexSet = u64;

#[inline]
pub(crate) fn low_mask(n: usize) -> VertexSet {
    if n >= 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

/// Iterates the members of a vertex set in ascending order.
pub fn members(mut set: VertexSet) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if set == 0 {
            None
        } else {
            let v = set.trailing_zeros() as usize;
            set &= set - 1;
            Some(v)
        }
    })
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: Vec<VertexSet>,
}

impl Graph {
    /// The edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Result<Self> {
        if n > MAX_VERTICES {
            return Err(Error::TooManyVertices { n, max: MAX_VERTICES });
        }
        Ok(Graph { n, adj: vec![0; n] })
    }

    /// Builds a graph from an edge list, rejecting self-loops and duplicates.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Graph::empty(n)?;
        for &(u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    pub fn complete(n: usize) -> Result<Self> {
        let mut g = Graph::empty(n)?;
        let full = low_mask(n);
        for v in 0..n {
            g.adj[v] = full & !(1 << v);
        }
        Ok(g)
    }

    pub fn path(n: usize) -> Result<Self> {
        let edges: Vec<_> = (1..n).map(|v| (v - 1, v)).collect();
        Graph::from_edges(n, &edges)
    }

    /// The cycle `0-1-...-(n-1)-0`; requires `n >= 3`.
    pub fn cycle(n: usize) -> Result<Self> {
        if n < 3 {
            return Err(Error::OutOfRange { what: "cycle length", value: n, min: 3, max: MAX_VERTICES });
        }
        let mut g = Graph::path(n)?;
        g.add_edge(0, n - 1)?;
        Ok(g)
    }

    /// Adds the edge `u v`. Fails on self-loops, out-of-range endpoints and
    /// edges already present.
    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<()> {
        for w in [u, v] {
            if w >= self.n {
                return Err(Error::VertexOutOfRange { vertex: w, n: self.n });
            }
        }
        if u == v {
            return Err(Error::SelfLoop(u));
        }
        if self.has_edge(u, v) {
            return Err(Error::DuplicateEdge(u.min(v), u.max(v)));
        }
        self.adj[u] |= 1 << v;
        self.adj[v] |= 1 << u;
        Ok(())
    }

    #[inline]
    pub fn vertex_count(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && self.adj[u] >> v & 1 == 1
    }

    /// Neighbor set of `v`. Panics if `v >= n`.
    #[inline]
    pub fn neighbors(&self, v: usize) -> VertexSet {
        self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|a| a.count_ones() as usize).sum::<usize>() / 2
    }

    /// Edges `(u, v)` with `u < v`, sorted lexicographically.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |u| members(self.adj[u] & !low_mask(u + 1)).map(move |v| (u, v)))
    }

    pub fn vertex_set(&self) -> VertexSet {
        low_mask(self.n)
    }

    pub fn is_complete(&self) -> bool {
        (0..self.n).all(|v| self.degree(v) == self.n - 1)
    }

    /// The subgraph induced on `w`, relabeled `0..|w|` in ascending order of
    /// the original labels.
    pub fn induced_subgraph(&self, w: VertexSet) -> Result<Graph> {
        if w & !self.vertex_set() != 0 {
            let vertex = (w & !self.vertex_set()).trailing_zeros() as usize;
            return Err(Error::VertexOutOfRange { vertex, n: self.n });
        }
        let kept: Vec<usize> = members(w).collect();
        let mut adj = vec![0; kept.len()];
        for (i, &u) in kept.iter().enumerate() {
            for (j, &v) in kept.iter().enumerate() {
                if self.adj[u] >> v & 1 == 1 {
                    adj[i] |= 1 << j;
                }
            }
        }
        Ok(Graph { n: kept.len(), adj })
    }

    /// Number of connected components of the subgraph induced on `w`,
    /// without materializing it. Bits of `w` outside the graph are ignored.
    pub fn components_within(&self, w: VertexSet) -> usize {
        let mut rest = w & self.vertex_set();
        let mut count = 0;
        while rest != 0 {
            count += 1;
            let mut frontier = rest & rest.wrapping_neg();
            let mut seen = frontier;
            while frontier != 0 {
                let v = frontier.trailing_zeros() as usize;
                frontier &= frontier - 1;
                let fresh = self.adj[v] & rest & !seen;
                seen |= fresh;
                frontier |= fresh;
            }
            rest &= !seen;
        }
        count
    }

    /// Number of connected components; zero only for the null graph.
    pub fn component_count(&self) -> usize {
        self.components_within(self.vertex_set())
    }

    pub fn is_connected(&self) -> bool {
        self.component_count() == 1
    }

    /// `S(G)`: a new vertex `n` joined to every existing vertex.
    pub fn cone(&self) -> Result<Graph> {
        let mut g = self.add_isolated()?;
        let apex = self.n;
        g.adj[apex] = self.vertex_set();
        for v in 0..self.n {
            g.adj[v] |= 1 << apex;
        }
        Ok(g)
    }

    /// `D(G)`: a new isolated vertex `n`.
    pub fn add_isolated(&self) -> Result<Graph> {
        if self.n == MAX_VERTICES {
            return Err(Error::TooManyVertices { n: self.n + 1, max: MAX_VERTICES });
        }
        let mut adj = self.adj.clone();
        adj.push(0);
        Ok(Graph { n: self.n + 1, adj })
    }

    /// Visits every nonempty clique once, as a vertex set, by extending
    /// cliques only with vertices larger than their current maximum.
    pub fn for_each_clique(&self, mut visit: impl FnMut(VertexSet)) {
        fn extend(g: &Graph, clique: VertexSet, candidates: VertexSet, visit: &mut impl FnMut(VertexSet)) {
            for v in members(candidates) {
                let next = clique | 1 << v;
                visit(next);
                extend(g, next, candidates & g.adj[v] & !low_mask(v + 1), visit);
            }
        }
        extend(self, 0, self.vertex_set(), &mut visit);
    }

    /// Clique vector by exhaustive enumeration. This is the reference
    /// implementation the faster chordal routine is checked against.
    pub fn clique_vector_bruteforce(&self) -> Result<CliqueVector> {
        if self.n == 0 {
            return Err(Error::EmptyGraph);
        }
        let mut counts = vec![0u64; self.n + 1];
        let mut overflow = false;
        self.for_each_clique(|c| {
            let slot = &mut counts[c.count_ones() as usize];
            match slot.checked_add(1) {
                Some(x) => *slot = x,
                None => overflow = true,
            }
        });
        if overflow {
            return Err(Error::Overflow);
        }
        let d = counts.iter().rposition(|&c| c > 0).unwrap_or(0);
        CliqueVector::new(counts[1..=d].to_vec())
    }

    /// Edge-mask index of the pair `u < v`, in graph6 column order
    /// `(0,1), (0,2), (1,2), (0,3), ...`.
    #[inline]
    pub fn pair_index(u: usize, v: usize) -> usize {
        debug_assert!(u < v);
        v * (v - 1) / 2 + u
    }

    /// The graph whose edges are the set bits of `mask` under
    /// [`Graph::pair_index`] numbering.
    pub fn from_edge_mask(n: usize, mask: u64) -> Result<Graph> {
        check_enumeration_size(n)?;
        let mut adj = vec![0u64; n];
        let mut bit = 0;
        for v in 1..n {
            for u in 0..v {
                if mask >> bit & 1 == 1 {
                    adj[u] |= 1 << v;
                    adj[v] |= 1 << u;
                }
                bit += 1;
            }
        }
        Ok(Graph { n, adj })
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Graph").field("n", &self.n).field("edges", &self.edges().collect::<Vec<_>>()).finish()
    }
}

fn check_enumeration_size(n: usize) -> Result<()> {
    if !(1..=MAX_ENUMERATION_VERTICES).contains(&n) {
        return Err(Error::OutOfRange { what: "n", value: n, min: 1, max: MAX_ENUMERATION_VERTICES });
    }
    Ok(())
}

/// Number of labeled graphs on `n` vertices, `2^(n(n-1)/2)`.
pub fn labeled_graph_count(n: usize) -> u64 {
    1u64 << (n * n.saturating_sub(1) / 2)
}

/// Streams all labeled graphs on `n` vertices (`1 <= n <= 8`) in edge-mask
/// order.
pub fn enumerate_graphs(n: usize) -> Result<GraphStream> {
    enumerate_graph_range(n, 0..labeled_graph_count(n))
}

/// Streams the labeled graphs whose edge masks fall in `masks`; disjoint
/// ranges give disjoint partitions of [`enumerate_graphs`].
pub fn enumerate_graph_range(n: usize, masks: Range<u64>) -> Result<GraphStream> {
    check_enumeration_size(n)?;
    let end = masks.end.min(labeled_graph_count(n));
    Ok(GraphStream { n, next: masks.start, end })
}

#[derive(Debug, Clone)]
pub struct GraphStream {
    n: usize,
    next: u64,
    end: u64,
}

impl GraphStream {
    pub fn vertex_count(&self) -> usize {
        self.n
    }
}

impl Iterator for GraphStream {
    type Item = Graph;

    fn next(&mut self) -> Option<Graph> {
        if self.next >= self.end {
            return None;
        }
        let g = Graph::from_edge_mask(self.n, self.next).ok();
        self.next += 1;
        g
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let left = self.end.saturating_sub(self.next) as usize;
        (left, Some(left))
    }
}

impl ExactSizeIterator for GraphStream {}
