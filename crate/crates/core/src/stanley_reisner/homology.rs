//! Reduced simplicial homology of clique complexes over the rationals.
//!
//! Ranks of boundary maps are computed by fraction-free (Bareiss)
//! elimination on integer matrices, which gives the exact rank over Q. The
//! elimination runs in `i64` with overflow checks and restarts in big
//! integers if any intermediate minor does not fit.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::graph::{members, Graph, VertexSet};

/// Largest vertex count accepted by [`reduced_homology_ranks`].
pub const MAX_HOMOLOGY_VERTICES: usize = 10;

/// Face counts and reduced Betti numbers of a nonempty clique complex, both
/// indexed by dimension starting at 0.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HomologyProfile {
    face_counts: Vec<u64>,
    ranks: Vec<u64>,
    components: usize,
}

impl HomologyProfile {
    /// `dim H~_q`; zero outside the computed range, including `q = -1`
    /// (the complex always has a vertex).
    pub fn rank(&self, q: isize) -> u64 {
        usize::try_from(q).ok().and_then(|q| self.ranks.get(q)).copied().unwrap_or(0)
    }

    pub fn ranks(&self) -> &[u64] {
        &self.ranks
    }

    /// Number of `q`-dimensional faces, i.e. `(q+1)`-cliques.
    pub fn face_counts(&self) -> &[u64] {
        &self.face_counts
    }

    /// Reduced Euler characteristic computed from faces (with the empty face
    /// in dimension -1) and from homology.
    pub fn euler_characteristics(&self) -> (i64, i64) {
        let alternating = |xs: &[u64]| {
            xs.iter().enumerate().map(|(q, &x)| if q % 2 == 0 { x as i64 } else { -(x as i64) }).sum::<i64>()
        };
        (alternating(&self.face_counts) - 1, alternating(&self.ranks))
    }

    pub fn euler_poincare_holds(&self) -> bool {
        let (faces, homology) = self.euler_characteristics();
        faces == homology
    }

    fn self_check(&self) -> Result<()> {
        if !self.euler_poincare_holds() {
            let (f, h) = self.euler_characteristics();
            return Err(Error::HomologySelfCheck(format!("Euler characteristic {f} from faces, {h} from homology")));
        }
        if self.rank(0) + 1 != self.components as u64 {
            return Err(Error::HomologySelfCheck(format!(
                "H~_0 has rank {} but the graph has {} components",
                self.rank(0),
                self.components
            )));
        }
        Ok(())
    }
}

/// Reduced homology of the clique complex of `g`, for `1 <= n <= 10`.
///
/// `h_q = f_q - rank d_q - rank d_(q+1)`, where `d_0` is the augmentation
/// onto the empty face. Every result is checked against the Euler-Poincare
/// formula and against the component count before it is returned.
pub fn reduced_homology_ranks(g: &Graph) -> Result<HomologyProfile> {
    let n = g.vertex_count();
    if !(1..=MAX_HOMOLOGY_VERTICES).contains(&n) {
        return Err(Error::OutOfRange { what: "n", value: n, min: 1, max: MAX_HOMOLOGY_VERTICES });
    }
    let mut faces: Vec<Vec<VertexSet>> = vec![Vec::new(); n];
    g.for_each_clique(|c| faces[c.count_ones() as usize - 1].push(c));
    while faces.last().is_some_and(Vec::is_empty) {
        faces.pop();
    }
    for level in &mut faces {
        level.sort_unstable();
    }

    // index[mask] is the row of that face in its dimension.
    let mut index = vec![u32::MAX; 1 << n];
    for level in &faces {
        for (i, &f) in level.iter().enumerate() {
            index[f as usize] = i as u32;
        }
    }

    // boundary_ranks[q] = rank of d_q : C_q -> C_(q-1); one extra zero on top.
    let top = faces.len();
    let mut boundary_ranks = vec![0u64; top + 1];
    boundary_ranks[0] = 1;
    for q in 1..top {
        let rows = faces[q - 1].len();
        let mut matrix: Vec<Vec<i64>> = vec![vec![0; faces[q].len()]; rows];
        for (col, &face) in faces[q].iter().enumerate() {
            for (pos, v) in members(face).enumerate() {
                let row = index[(face & !(1 << v)) as usize] as usize;
                matrix[row][col] = if pos % 2 == 0 { 1 } else { -1 };
            }
        }
        boundary_ranks[q] = rank(matrix) as u64;
    }

    let face_counts: Vec<u64> = faces.iter().map(|l| l.len() as u64).collect();
    let ranks = (0..top).map(|q| face_counts[q] - boundary_ranks[q] - boundary_ranks[q + 1]).collect();
    let profile = HomologyProfile { face_counts, ranks, components: g.component_count() };
    profile.self_check()?;
    Ok(profile)
}

/// Exact rank over Q of an integer matrix.
pub fn rank(matrix: Vec<Vec<i64>>) -> usize {
    match bareiss_rank_i64(matrix.clone()) {
        Some(r) => r,
        None => bareiss_rank_big(matrix.into_iter().map(|row| row.into_iter().map(BigInt::from).collect()).collect()),
    }
}

/// `None` if an intermediate value overflows.
fn bareiss_rank_i64(mut a: Vec<Vec<i64>>) -> Option<usize> {
    let rows = a.len();
    let cols = a.first().map_or(0, Vec::len);
    let mut prev = 1i64;
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| a[i][c] != 0) else { continue };
        a.swap(r, p);
        let pivot = a[r][c];
        let (top, bottom) = a.split_at_mut(r + 1);
        let pivot_row = &top[r];
        for row in bottom {
            let factor = row[c];
            for (x, &p) in row[c + 1..].iter_mut().zip(&pivot_row[c + 1..]) {
                let y = x.checked_mul(pivot)?.checked_sub(factor.checked_mul(p)?)?;
                debug_assert_eq!(y % prev, 0);
                *x = y / prev;
            }
            row[c] = 0;
        }
        prev = pivot;
        r += 1;
    }
    Some(r)
}

fn bareiss_rank_big(mut a: Vec<Vec<BigInt>>) -> usize {
    let rows = a.len();
    let cols = a.first().map_or(0, Vec::len);
    let mut prev = BigInt::from(1);
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !a[i][c].is_zero()) else { continue };
        a.swap(r, p);
        let pivot = a[r][c].clone();
        let (top, bottom) = a.split_at_mut(r + 1);
        let pivot_row = &top[r];
        for row in bottom {
            let factor = row[c].clone();
            for (x, p) in row[c + 1..].iter_mut().zip(&pivot_row[c + 1..]) {
                let (q, rem) = (&*x * &pivot - &factor * p).div_rem(&prev);
                debug_assert!(rem.is_zero());
                *x = q;
            }
            row[c] = BigInt::zero();
        }
        prev = pivot;
        r += 1;
    }
    r
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::enumerate_graphs;
    use num_rational::BigRational;
    use num_traits::One;
    use proptest::prelude::*;

    /// Plain Gaussian elimination over Q.
    fn rational_rank(m: &[Vec<i64>]) -> usize {
        let mut a: Vec<Vec<BigRational>> =
            m.iter().map(|row| row.iter().map(|&x| BigRational::from_integer(x.into())).collect()).collect();
        let rows = a.len();
        let cols = a.first().map_or(0, Vec::len);
        let mut r = 0;
        for c in 0..cols {
            let Some(p) = (r..rows).find(|&i| !a[i][c].is_zero()) else { continue };
            a.swap(r, p);
            let inv = BigRational::one() / &a[r][c];
            for i in r + 1..rows {
                let f = &a[i][c] * &inv;
                let pivot_row = a[r].clone();
                for (x, p) in a[i][c..].iter_mut().zip(&pivot_row[c..]) {
                    *x -= &f * p;
                }
            }
            r += 1;
        }
        r
    }

    #[test]
    fn homology_examples() {
        let point = reduced_homology_ranks(&Graph::empty(1).unwrap()).unwrap();
        assert!(point.ranks().iter().all(|&r| r == 0));
        assert_eq!(point.rank(-1), 0);

        let two = reduced_homology_ranks(&Graph::empty(2).unwrap()).unwrap();
        assert_eq!(two.ranks(), &[1]);

        let c4 = reduced_homology_ranks(&Graph::cycle(4).unwrap()).unwrap();
        assert_eq!(c4.ranks(), &[0, 1]);

        // octahedron K_{2,2,2}: clique complex is a 2-sphere
        let oct = Graph::from_edges(
            6,
            &[(0, 2), (0, 3), (0, 4), (0, 5), (1, 2), (1, 3), (1, 4), (1, 5), (2, 4), (2, 5), (3, 4), (3, 5)],
        )
        .unwrap();
        assert_eq!(reduced_homology_ranks(&oct).unwrap().ranks(), &[0, 0, 1]);

        assert!(reduced_homology_ranks(&Graph::empty(0).unwrap()).is_err());
        assert!(reduced_homology_ranks(&Graph::empty(11).unwrap()).is_err());
    }

    #[test]
    fn every_small_complex_passes_self_checks() {
        for n in 1..=5 {
            for g in enumerate_graphs(n).unwrap() {
                let h = reduced_homology_ranks(&g).unwrap();
                assert!(h.euler_poincare_holds());
                assert_eq!(h.face_counts(), g.clique_vector_bruteforce().unwrap().entries());
            }
        }
    }

    #[test]
    fn big_integer_fallback() {
        let big = 1i64 << 40;
        let m = vec![vec![big, big + 1, 3], vec![big - 7, big, 5], vec![2 * big - 7, 2 * big + 1, 8]];
        assert_eq!(bareiss_rank_i64(m.clone()), None);
        assert_eq!(rank(m.clone()), 2);
        assert_eq!(rational_rank(&m), 2);
    }

    proptest! {
        #[test]
        fn bareiss_matches_rational_elimination(
            m in prop::collection::vec(prop::collection::vec(-3i64..=3, 6), 0..7)
        ) {
            prop_assert_eq!(rank(m.clone()), rational_rank(&m));
            let big: Vec<Vec<BigInt>> = m.iter().map(|r| r.iter().map(|&x| BigInt::from(x)).collect()).collect();
            prop_assert_eq!(bareiss_rank_big(big), rational_rank(&m));
        }
    }
}
