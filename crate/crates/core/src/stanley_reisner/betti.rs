use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use super::homology::reduced_homology_ranks;
use crate::error::{Error, Result};
use crate::graph::{low_mask, Graph, VertexSet};

pub const MAX_STRAND_VERTICES: usize = 24;
pub const MAX_FULL_TABLE_VERTICES: usize = 8;

/// Sparse table of graded Betti numbers `beta_(i,j)`; zero entries are not
/// stored and `beta_(0,0) = 1` always is.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(into = "BettiJson", try_from = "BettiJson")]
pub struct BettiTable {
    n: usize,
    entries: BTreeMap<(usize, usize), u64>,
}

#[derive(Serialize, Deserialize)]
struct BettiJson {
    n: usize,
    entries: Vec<[u64; 3]>,
}

impl From<BettiTable> for BettiJson {
    fn from(t: BettiTable) -> Self {
        BettiJson { n: t.n, entries: t.entries.iter().map(|(&(i, j), &v)| [i as u64, j as u64, v]).collect() }
    }
}

impl TryFrom<BettiJson> for BettiTable {
    type Error = String;

    fn try_from(raw: BettiJson) -> std::result::Result<Self, String> {
        let mut t = BettiTable { n: raw.n, entries: BTreeMap::new() };
        for [i, j, v] in raw.entries {
            if v == 0 {
                return Err(format!("zero entry stored at ({i}, {j})"));
            }
            if t.entries.insert((i as usize, j as usize), v).is_some() {
                return Err(format!("duplicate entry ({i}, {j})"));
            }
        }
        if t.get(0, 0) != 1 {
            return Err("beta_(0,0) must be 1".into());
        }
        Ok(t)
    }
}

impl BettiTable {
    fn new(n: usize) -> Self {
        BettiTable { n, entries: BTreeMap::from([((0, 0), 1)]) }
    }

    fn add(&mut self, i: usize, j: usize, value: u64) {
        if value > 0 {
            *self.entries.entry((i, j)).or_insert(0) += value;
        }
    }

    /// Number of variables of the ambient polynomial ring.
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> u64 {
        self.entries.get(&(i, j)).copied().unwrap_or(0)
    }

    /// Nonzero entries `((i, j), beta)`, sorted by `(i, j)`.
    pub fn entries(&self) -> impl Iterator<Item = ((usize, usize), u64)> + '_ {
        self.entries.iter().map(|(&k, &v)| (k, v))
    }

    /// Largest homological degree with a nonzero entry.
    pub fn projective_dimension(&self) -> usize {
        self.entries.keys().map(|&(i, _)| i).max().unwrap_or(0)
    }

    /// `n - pd` by Auslander-Buchsbaum.
    pub fn depth(&self) -> usize {
        self.n - self.projective_dimension()
    }

    /// Every entry other than `beta_(0,0)` lies on `j = i + 1`.
    pub fn has_two_linear_resolution(&self) -> bool {
        self.entries.keys().all(|&(i, j)| (i, j) == (0, 0) || j == i + 1)
    }

    /// Row `j = i + 1` of the table.
    pub fn linear_strand(&self) -> LinearStrand {
        LinearStrand { values: (0..self.n).map(|i| self.get(i, i + 1)).collect() }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("table serializes")
    }

    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::InvalidVector(format!("Betti table JSON: {e}")))
    }
}

/// `beta_(i,i+1)` for `i = 0..n`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LinearStrand {
    values: Vec<u64>,
}

impl LinearStrand {
    pub fn n(&self) -> usize {
        self.values.len()
    }

    pub fn get(&self, i: usize) -> u64 {
        self.values.get(i).copied().unwrap_or(0)
    }

    /// `(i, beta_(i,i+1))` for `i = 1..n`, zeros included.
    pub fn iter(&self) -> impl Iterator<Item = (usize, u64)> + '_ {
        self.values.iter().copied().enumerate().skip(1)
    }

    /// Largest `k <= n` with `beta_(i,i+1) = 0` for every `i >= n - k`.
    pub fn connectivity(&self) -> usize {
        let n = self.n();
        match self.values.iter().rposition(|&b| b > 0) {
            Some(last) => n - last - 1,
            None => n,
        }
    }
}

/// Vertex subsets of size `size` in increasing numeric order (Gosper's hack).
fn subsets_of_size(n: usize, size: usize) -> impl Iterator<Item = VertexSet> {
    let limit = low_mask(n);
    let first = if size == 0 { 0 } else { low_mask(size) };
    let mut next = (size <= n).then_some(first);
    std::iter::from_fn(move || {
        let current = next?;
        next = if current == 0 || current == limit {
            None
        } else {
            let lowest = current & current.wrapping_neg();
            let ripple = current.wrapping_add(lowest);
            if ripple == 0 || ripple > limit {
                None
            } else {
                let candidate = ripple | (((current ^ ripple) >> 2) / lowest);
                (candidate <= limit).then_some(candidate)
            }
        };
        Some(current)
    })
}

fn check_range(n: usize, max: usize) -> Result<()> {
    if !(1..=max).contains(&n) {
        return Err(Error::OutOfRange { what: "n", value: n, min: 1, max });
    }
    Ok(())
}

/// `beta_(i,i+1) = sum over |W| = i + 1 of (components of G_W) - 1`, for
/// `1 <= n <= 24`.
pub fn betti_linear_strand(g: &Graph) -> Result<LinearStrand> {
    let n = g.vertex_count();
    check_range(n, MAX_STRAND_VERTICES)?;
    let mut values = vec![0u64; n];
    for (i, slot) in values.iter_mut().enumerate().skip(1) {
        *slot = subsets_of_size(n, i + 1).map(|w| g.components_within(w) as u64 - 1).sum();
    }
    Ok(LinearStrand { values })
}

/// Connectivity read off the linear strand.
pub fn connectivity_from_betti(g: &Graph) -> Result<usize> {
    Ok(betti_linear_strand(g)?.connectivity())
}

/// The whole table by Hochster's formula, for `1 <= n <= 8`.
pub fn betti_table_full(g: &Graph) -> Result<BettiTable> {
    let n = g.vertex_count();
    check_range(n, MAX_FULL_TABLE_VERTICES)?;
    let mut table = BettiTable::new(n);
    for size in 1..=n {
        for w in subsets_of_size(n, size) {
            let homology = reduced_homology_ranks(&g.induced_subgraph(w)?)?;
            for (q, &rank) in homology.ranks().iter().enumerate() {
                // j = |W|, i = j - q - 1
                if rank > 0 && q < size {
                    table.add(size - q - 1, size, rank);
                }
            }
        }
    }
    Ok(table)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::chordal::is_chordal;
    use crate::connectivity::{connectivity, connectivity_bruteforce, connectivity_with, Convention};
    use crate::graph::enumerate_graphs;

    fn table(entries: &[((usize, usize), u64)]) -> Vec<((usize, usize), u64)> {
        entries.to_vec()
    }

    #[test]
    fn subset_order() {
        let all: Vec<u64> = (0..=4).flat_map(|s| subsets_of_size(4, s)).collect();
        assert_eq!(all.len(), 16);
        assert_eq!(&all[..6], &[0, 1, 2, 4, 8, 3]);
        for s in 0..=4 {
            let sized: Vec<u64> = subsets_of_size(4, s).collect();
            assert!(sized.windows(2).all(|w| w[0] < w[1]));
            assert!(sized.iter().all(|w| w.count_ones() as usize == s));
        }
        assert_eq!(subsets_of_size(3, 4).count(), 0);
        assert_eq!(subsets_of_size(64, 64).count(), 1);
        assert_eq!(subsets_of_size(64, 63).count(), 64);
    }

    #[test]
    fn strand_examples() {
        let p3 = betti_linear_strand(&Graph::path(3).unwrap()).unwrap();
        assert_eq!((p3.get(1), p3.get(2)), (1, 0));
        assert_eq!(p3.connectivity(), 1);
        for n in 1..=6 {
            let k = betti_linear_strand(&Graph::complete(n).unwrap()).unwrap();
            assert!(k.iter().all(|(_, b)| b == 0));
            assert_eq!(k.connectivity(), n);
        }
        let two = betti_linear_strand(&Graph::empty(2).unwrap()).unwrap();
        assert_eq!(two.get(1), 1);
        assert_eq!(two.connectivity(), 0);
        assert!(betti_linear_strand(&Graph::empty(25).unwrap()).is_err());
    }

    #[test]
    fn full_table_examples() {
        let k2 = betti_table_full(&Graph::complete(2).unwrap()).unwrap();
        assert_eq!(k2.entries().collect::<Vec<_>>(), table(&[((0, 0), 1)]));
        assert_eq!((k2.projective_dimension(), k2.depth()), (0, 2));

        let c4 = betti_table_full(&Graph::cycle(4).unwrap()).unwrap();
        assert_eq!(c4.entries().collect::<Vec<_>>(), table(&[((0, 0), 1), ((1, 2), 2), ((2, 4), 1)]));
        assert_eq!((c4.projective_dimension(), c4.depth()), (2, 2));
        assert!(!c4.has_two_linear_resolution());

        let p3 = betti_table_full(&Graph::path(3).unwrap()).unwrap();
        assert_eq!(p3.entries().collect::<Vec<_>>(), table(&[((0, 0), 1), ((1, 2), 1)]));
        assert_eq!((p3.projective_dimension(), p3.depth()), (1, 2));
        assert!(p3.has_two_linear_resolution());

        for n in 1..=5 {
            let k = betti_table_full(&Graph::complete(n).unwrap()).unwrap();
            assert_eq!((k.projective_dimension(), k.depth()), (0, n));
            assert!(k.has_two_linear_resolution());
        }
    }

    #[test]
    fn json_shape() {
        let c4 = betti_table_full(&Graph::cycle(4).unwrap()).unwrap();
        let json = c4.to_json();
        assert_eq!(json, r#"{"n":4,"entries":[[0,0,1],[1,2,2],[2,4,1]]}"#);
        assert_eq!(BettiTable::from_json(&json).unwrap(), c4);
        assert!(BettiTable::from_json(r#"{"n":2,"entries":[[1,2,0]]}"#).is_err());
        assert!(BettiTable::from_json(r#"{"n":2,"entries":[]}"#).is_err());
    }

    /// By hand: 5 non-edges give beta_(1,2); the 5 triples inducing an edge
    /// plus a point give beta_(2,3); 4-subsets induce paths; the whole
    /// complex is a circle, so H~_1 lands at (3, 5).
    #[test]
    fn five_cycle_table() {
        let t = betti_table_full(&Graph::cycle(5).unwrap()).unwrap();
        assert_eq!(t.entries().collect::<Vec<_>>(), table(&[((0, 0), 1), ((1, 2), 5), ((2, 3), 5), ((3, 5), 1)]));
    }

    #[test]
    fn strand_is_the_full_table_row() {
        for n in 1..=5 {
            for g in enumerate_graphs(n).unwrap() {
                let full = betti_table_full(&g).unwrap();
                assert_eq!(full.linear_strand(), betti_linear_strand(&g).unwrap());
                // row 0 holds only beta_(0,0)
                assert!(full.entries().all(|((i, j), _)| i > 0 || j == 0));
            }
        }
    }

    #[test]
    fn homological_connectivity_small() {
        for n in 1..=5 {
            for g in enumerate_graphs(n).unwrap() {
                let kappa = connectivity_bruteforce(&g).unwrap();
                assert_eq!(connectivity_from_betti(&g).unwrap(), kappa);
                let full = betti_table_full(&g).unwrap();
                assert_eq!(full.has_two_linear_resolution(), is_chordal(&g).unwrap().is_some());
                if g.is_complete() {
                    assert_eq!(full.depth(), connectivity_with(&g, Convention::Classical).unwrap() + 1);
                } else {
                    assert!(full.depth() <= connectivity(&g).unwrap() + 1);
                }
            }
        }
    }
}
