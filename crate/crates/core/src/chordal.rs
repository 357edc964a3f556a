//! Chordality via maximum cardinality search, and clique counting along a
//! perfect elimination order.

use crate::error::{Error, Result};
use crate::graph::{members, Graph, VertexSet};
use crate::transform::{binomial_u64, CliqueVector};

/// A vertex order, position 0 eliminated first, with each vertex's set of
/// neighbors that come after it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EliminationOrder {
    order: Vec<usize>,
    position: Vec<usize>,
    later: Vec<VertexSet>,
}

impl EliminationOrder {
    /// Wraps `order` for the graph `g`; `order` must be a permutation of
    /// `0..n`.
    pub fn new(g: &Graph, order: Vec<usize>) -> Result<Self> {
        let n = g.vertex_count();
        let position = positions(&order, n)?;
        let mut later = vec![0; n];
        for v in 0..n {
            later[v] = members(g.neighbors(v)).filter(|&u| position[u] > position[v]).fold(0, |s, u| s | 1 << u);
        }
        Ok(EliminationOrder { order, position, later })
    }

    pub fn order(&self) -> &[usize] {
        &self.order
    }

    pub fn position(&self, v: usize) -> usize {
        self.position[v]
    }

    /// Neighbors of `v` eliminated after `v`.
    pub fn later_neighbors(&self, v: usize) -> VertexSet {
        self.later[v]
    }

    pub fn len(&self) -> usize {
        self.order.len()
    }

    pub fn is_empty(&self) -> bool {
        self.order.is_empty()
    }
}

fn positions(order: &[usize], n: usize) -> Result<Vec<usize>> {
    let mut position = vec![usize::MAX; n];
    if order.len() != n {
        return Err(Error::NotAPermutation(n));
    }
    for (i, &v) in order.iter().enumerate() {
        if v >= n || position[v] != usize::MAX {
            return Err(Error::NotAPermutation(n));
        }
        position[v] = i;
    }
    Ok(position)
}

/// Reverse maximum-cardinality-search order, ties broken toward the smallest
/// vertex. A perfect elimination order whenever `g` is chordal.
pub fn mcs_order(g: &Graph) -> Result<EliminationOrder> {
    let n = g.vertex_count();
    if n == 0 {
        return Err(Error::EmptyGraph);
    }
    let mut weight = vec![0usize; n];
    let mut unvisited = g.vertex_set();
    let mut visit = Vec::with_capacity(n);
    while unvisited != 0 {
        let v = members(unvisited).max_by(|&a, &b| weight[a].cmp(&weight[b]).then(b.cmp(&a))).unwrap();
        unvisited &= !(1 << v);
        visit.push(v);
        for u in members(g.neighbors(v) & unvisited) {
            weight[u] += 1;
        }
    }
    visit.reverse();
    EliminationOrder::new(g, visit)
}

/// Whether every later-neighbor set is a clique, by the parent test: the
/// later neighbors of `v` other than the earliest one, `p`, must all be
/// later neighbors of `p`.
pub fn check_peo(g: &Graph, e: &EliminationOrder) -> Result<bool> {
    let n = g.vertex_count();
    let position = positions(&e.order, n)?;
    let later = |v: usize| members(g.neighbors(v)).filter(|&u| position[u] > position[v]).fold(0u64, |s, u| s | 1 << u);
    for v in 0..n {
        let lv = later(v);
        if let Some(parent) = members(lv).min_by_key(|&u| position[u]) {
            if lv & !(1 << parent) & !later(parent) != 0 {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// All-pairs variant of [`check_peo`].
pub fn check_peo_pairwise(g: &Graph, e: &EliminationOrder) -> Result<bool> {
    let position = positions(&e.order, g.vertex_count())?;
    Ok((0..g.vertex_count()).all(|v| {
        let lv: Vec<usize> = members(g.neighbors(v)).filter(|&u| position[u] > position[v]).collect();
        lv.iter().enumerate().all(|(i, &a)| lv[i + 1..].iter().all(|&b| g.has_edge(a, b)))
    }))
}

/// A perfect elimination order if `g` is chordal, `None` otherwise.
pub fn is_chordal(g: &Graph) -> Result<Option<EliminationOrder>> {
    let e = mcs_order(g)?;
    Ok(check_peo(g, &e)?.then_some(e))
}

/// `c_j = sum_v C(m_v, j - 1)` with `m_v` the number of later neighbors of
/// `v`: each clique is counted at its earliest vertex.
pub fn clique_vector_chordal(g: &Graph, e: &EliminationOrder) -> Result<CliqueVector> {
    if g.vertex_count() == 0 {
        return Err(Error::EmptyGraph);
    }
    if !check_peo(g, e)? {
        return Err(Error::NotPerfectEliminationOrder);
    }
    let sizes: Vec<u64> = (0..g.vertex_count()).map(|v| later_mask(g, e, v).count_ones() as u64).collect();
    let d = sizes.iter().max().map_or(0, |m| m + 1) as usize;
    let mut c = vec![0u64; d];
    for &m in &sizes {
        for (j, slot) in c.iter_mut().enumerate().take(m as usize + 1) {
            let term = binomial_u64(m, j as u64).ok_or(Error::Overflow)?;
            *slot = slot.checked_add(term).ok_or(Error::Overflow)?;
        }
    }
    CliqueVector::new(c)
}

fn later_mask(g: &Graph, e: &EliminationOrder, v: usize) -> VertexSet {
    members(g.neighbors(v)).filter(|&u| e.position[u] > e.position[v]).fold(0, |s, u| s | 1 << u)
}

#[cfg(test)]
pub(crate) mod tests {
    use super::*;
    use crate::graph::enumerate_graphs;
    use crate::threshold::{word_to_graph, SdWord};

    /// Chordality oracle: no induced cycle of length at least four.
    pub(crate) fn has_induced_long_cycle(g: &Graph) -> bool {
        (0..1u64 << g.vertex_count()).filter(|w| w.count_ones() >= 4).any(|w| {
            let h = g.induced_subgraph(w).unwrap();
            h.is_connected() && (0..h.vertex_count()).all(|v| h.degree(v) == 2)
        })
    }

    fn all_permutations(n: usize) -> Vec<Vec<usize>> {
        if n == 0 {
            return vec![vec![]];
        }
        let mut out = Vec::new();
        for p in all_permutations(n - 1) {
            for i in 0..=p.len() {
                let mut q = p.clone();
                q.insert(i, n - 1);
                out.push(q);
            }
        }
        out
    }

    #[test]
    fn mcs_examples() {
        let k3 = Graph::complete(3).unwrap();
        assert_eq!(mcs_order(&k3).unwrap().order(), &[2, 1, 0]);

        let p3 = Graph::path(3).unwrap();
        let e = mcs_order(&p3).unwrap();
        assert_eq!(e.order(), &[2, 1, 0]);
        assert!(e.position(2) < e.position(1));

        let c4 = Graph::cycle(4).unwrap();
        assert!(!check_peo(&c4, &mcs_order(&c4).unwrap()).unwrap());
        assert_eq!(mcs_order(&Graph::empty(0).unwrap()), Err(Error::EmptyGraph));
    }

    #[test]
    fn peo_checks() {
        let k4 = Graph::complete(4).unwrap();
        let c4 = Graph::cycle(4).unwrap();
        for p in all_permutations(4) {
            assert!(check_peo(&k4, &EliminationOrder::new(&k4, p.clone()).unwrap()).unwrap());
            assert!(!check_peo(&c4, &EliminationOrder::new(&c4, p).unwrap()).unwrap());
        }
        // star with leaves eliminated first
        let star = Graph::from_edges(5, &[(0, 1), (0, 2), (0, 3), (0, 4)]).unwrap();
        assert!(check_peo(&star, &EliminationOrder::new(&star, vec![1, 2, 3, 4, 0]).unwrap()).unwrap());
        assert!(!check_peo(&star, &EliminationOrder::new(&star, vec![0, 1, 2, 3, 4]).unwrap()).unwrap());

        assert_eq!(EliminationOrder::new(&k4, vec![0, 1, 1, 2]), Err(Error::NotAPermutation(4)));
        let short = EliminationOrder::new(&Graph::complete(3).unwrap(), vec![0, 1, 2]).unwrap();
        assert_eq!(check_peo(&k4, &short), Err(Error::NotAPermutation(4)));
    }

    #[test]
    fn parent_test_matches_pairwise_on_every_order() {
        for g in enumerate_graphs(5).unwrap().step_by(3) {
            for p in all_permutations(5).into_iter().step_by(11) {
                let e = EliminationOrder::new(&g, p).unwrap();
                assert_eq!(check_peo(&g, &e).unwrap(), check_peo_pairwise(&g, &e).unwrap());
            }
        }
    }

    #[test]
    fn chordal_examples() {
        let word: SdWord = "DDDSSDSDDS".parse().unwrap();
        assert!(is_chordal(&word_to_graph(&word).unwrap()).unwrap().is_some());
        assert!(is_chordal(&Graph::cycle(4).unwrap()).unwrap().is_none());
        let mut c5_chord = Graph::cycle(5).unwrap();
        c5_chord.add_edge(0, 2).unwrap();
        assert!(has_induced_long_cycle(&c5_chord));
        assert!(is_chordal(&c5_chord).unwrap().is_none());
    }

    #[test]
    fn recognition_matches_cycle_oracle() {
        for n in 1..=6 {
            for g in enumerate_graphs(n).unwrap() {
                let found = is_chordal(&g).unwrap();
                assert_eq!(found.is_some(), !has_induced_long_cycle(&g), "{g:?}");
                if let Some(e) = found {
                    assert!(check_peo_pairwise(&g, &e).unwrap());
                }
            }
        }
    }

    #[test]
    fn chordal_clique_vector_examples() {
        let cv = |g: &Graph| clique_vector_chordal(g, &mcs_order(g).unwrap()).unwrap().entries().to_vec();
        assert_eq!(cv(&Graph::complete(4).unwrap()), vec![4, 6, 4, 1]);
        assert_eq!(cv(&Graph::path(4).unwrap()), vec![4, 3]);
        let t = word_to_graph(&"DDDSSDSDDS".parse().unwrap()).unwrap();
        assert_eq!(cv(&t), vec![10, 14, 11, 3]);

        let c4 = Graph::cycle(4).unwrap();
        assert_eq!(clique_vector_chordal(&c4, &mcs_order(&c4).unwrap()), Err(Error::NotPerfectEliminationOrder));
    }

    #[test]
    fn chordal_counts_match_brute_force() {
        for n in 1..=7 {
            for g in enumerate_graphs(n).unwrap() {
                if let Some(e) = is_chordal(&g).unwrap() {
                    assert_eq!(clique_vector_chordal(&g, &e).unwrap(), g.clique_vector_bruteforce().unwrap());
                }
            }
        }
    }
}
