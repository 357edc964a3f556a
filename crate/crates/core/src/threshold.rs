//! Threshold graphs and their SD-words.
//!
//! A threshold graph is built from the null graph by repeatedly adding a
//! dominating vertex (`S`) or an isolated vertex (`D`). Its word lists the
//! operations with the last one applied on the left, so the rightmost letter
//! (the first vertex) is always `S`. Splitting the word after every `S`
//! gives subwords whose lengths form the b-vector.

use std::fmt;
use std::str::FromStr;

use num_traits::{One, ToPrimitive};
use serde::Serialize;

use crate::chordal::{clique_vector_chordal, is_chordal};
use crate::connectivity::connectivity;
use crate::error::{Error, Result};
use crate::graph::{low_mask, members, Graph, MAX_VERTICES};
use crate::transform::{validate, BVector, CliqueVector};

/// Largest vertex count for which [`realize`] re-counts cliques by brute
/// force rather than along the elimination order.
const BRUTE_FORCE_RECOUNT_LIMIT: usize = 16;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Letter {
    /// Cone: add a vertex adjacent to everything.
    S,
    /// Add an isolated vertex.
    D,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SdWord(Vec<Letter>);

impl SdWord {
    pub fn new(letters: Vec<Letter>) -> Result<Self> {
        match letters.last() {
            None => Err(Error::InvalidWord("empty word".into())),
            Some(Letter::D) => Err(Error::InvalidWord("rightmost letter must be S".into())),
            Some(Letter::S) => Ok(SdWord(letters)),
        }
    }

    pub fn letters(&self) -> &[Letter] {
        &self.0
    }

    /// Number of vertices of the graph.
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Number of `S` letters, which is the clique number.
    pub fn s_count(&self) -> usize {
        self.0.iter().filter(|&&l| l == Letter::S).count()
    }
}

impl fmt::Display for SdWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: String = self.0.iter().map(|l| if *l == Letter::S { 'S' } else { 'D' }).collect();
        f.write_str(&s)
    }
}

impl FromStr for SdWord {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let letters = s
            .trim()
            .chars()
            .map(|ch| match ch {
                'S' | 's' => Ok(Letter::S),
                'D' | 'd' => Ok(Letter::D),
                other => Err(Error::InvalidWord(format!("unexpected letter `{other}`"))),
            })
            .collect::<Result<Vec<_>>>()?;
        SdWord::new(letters)
    }
}

impl Serialize for SdWord {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

/// Applies the letters right to left starting from the null graph; the
/// vertex added by the `i`-th operation gets label `i - 1`.
pub fn word_to_graph(w: &SdWord) -> Result<Graph> {
    if w.len() > MAX_VERTICES {
        return Err(Error::TooManyVertices { n: w.len(), max: MAX_VERTICES });
    }
    let mut g = Graph::empty(0)?;
    for letter in w.letters().iter().rev() {
        g = match letter {
            Letter::S => g.cone()?,
            Letter::D => g.add_isolated()?,
        };
    }
    Ok(g)
}

/// Recovers the word of a threshold graph by peeling off an isolated or a
/// dominating vertex (the highest-labeled one) until a single vertex is
/// left. `None` if the peeling gets stuck.
pub fn graph_to_word(g: &Graph) -> Result<Option<SdWord>> {
    let n = g.vertex_count();
    if n == 0 {
        return Err(Error::EmptyGraph);
    }
    let mut alive = low_mask(n);
    let mut letters = Vec::with_capacity(n);
    while alive.count_ones() > 1 {
        let size = alive.count_ones();
        let degree = |v: usize| (g.neighbors(v) & alive).count_ones();
        let isolated = members(alive).filter(|&v| degree(v) == 0).last();
        let dominating = members(alive).filter(|&v| degree(v) == size - 1).last();
        let (v, letter) = match (isolated, dominating) {
            (Some(v), _) => (v, Letter::D),
            (None, Some(v)) => (v, Letter::S),
            (None, None) => return Ok(None),
        };
        alive &= !(1 << v);
        letters.push(letter);
    }
    letters.push(Letter::S);
    SdWord::new(letters).map(Some)
}

/// Lengths of the pieces obtained by cutting the word after every `S`.
pub fn word_to_bvector(w: &SdWord) -> BVector {
    let mut lengths = Vec::with_capacity(w.s_count());
    let mut run = 0u64;
    for &letter in w.letters() {
        run += 1;
        if letter == Letter::S {
            lengths.push(run);
            run = 0;
        }
    }
    BVector::from_u64s(&lengths).expect("a valid word contains an S")
}

/// `D^(b_1 - 1) S D^(b_2 - 1) S ...`, the inverse of [`word_to_bvector`].
/// Words longer than [`MAX_VERTICES`] are rejected.
pub fn bvector_to_word(b: &BVector) -> Result<SdWord> {
    let mut letters = Vec::new();
    for (i, value) in b.entries().iter().enumerate() {
        let run = match value.to_usize() {
            Some(r) if r >= 1 => r,
            _ => return Err(Error::InvalidVector(format!("b_{} = {value} not positive", i + 1))),
        };
        if letters.len() + run > MAX_VERTICES {
            return Err(Error::TooManyVertices { n: (b.sum()).to_usize().unwrap_or(usize::MAX), max: MAX_VERTICES });
        }
        letters.extend(std::iter::repeat_n(Letter::D, run - 1));
        letters.push(Letter::S);
    }
    SdWord::new(letters)
}

/// True iff the first `k` letters exist and are all `S`.
pub fn word_is_k_connected(w: &SdWord, k: usize) -> bool {
    k <= w.len() && w.letters()[..k].iter().all(|&l| l == Letter::S)
}

/// Number of vectors in `B(n, d, k)`: compositions of `n - k` into `d - k`
/// positive parts, `C(n - k - 1, d - k - 1)`. For `d = k` the only candidate
/// is the empty composition, present iff `n = k`.
pub fn bvector_count(n: u64, d: u64, k: u64) -> num_bigint::BigUint {
    if d == 0 || k > d || d > n {
        return 0u32.into();
    }
    if d == k {
        return u32::from(n == k).into();
    }
    crate::transform::binomial(n - k - 1, d - k - 1)
}

/// Streams `B(n, d, k)`: positive `(b_1, ..., b_d)` summing to `n` with
/// `b_1 = ... = b_k = 1`, in lexicographic order. Infeasible parameters give
/// an empty stream.
pub fn enumerate_bvectors(n: usize, d: usize, k: usize) -> BVectorStream {
    let feasible = d >= 1 && k <= d && d <= n && (k < d || n == d);
    let first = feasible.then(|| {
        let mut b = vec![1u64; d];
        b[d - 1] = (n - d + 1) as u64;
        b
    });
    BVectorStream { current: first, fixed: k }
}

#[derive(Debug, Clone)]
pub struct BVectorStream {
    current: Option<Vec<u64>>,
    fixed: usize,
}

impl BVectorStream {
    fn advance(b: &[u64], fixed: usize) -> Option<Vec<u64>> {
        let d = b.len();
        // Increment the rightmost free non-final entry whose suffix has slack.
        let mut suffix = 0;
        let mut i = d - 1;
        while i > fixed {
            suffix += b[i];
            i -= 1;
            if suffix > (d - 1 - i) as u64 {
                let mut next = b.to_vec();
                next[i] += 1;
                let tail = suffix - 1 - (d - 2 - i) as u64;
                next[i + 1..d - 1].fill(1);
                next[d - 1] = tail;
                return Some(next);
            }
        }
        None
    }
}

impl Iterator for BVectorStream {
    type Item = BVector;

    fn next(&mut self) -> Option<BVector> {
        let b = self.current.take()?;
        self.current = Self::advance(&b, self.fixed);
        Some(BVector::from_u64s(&b).expect("d >= 1"))
    }
}

/// A threshold graph realizing a clique vector.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Realization {
    pub b: BVector,
    pub word: SdWord,
    pub graph: Graph,
    pub connectivity: usize,
}

/// Builds a k-connected threshold graph with clique vector `c`, or reports
/// why none exists. The result is re-checked before it is returned.
pub fn realize(c: &CliqueVector, k: usize) -> Result<Realization> {
    let validation = validate(c, k);
    if let Err(v) = validation.verdict {
        return Err(Error::Rejected(v));
    }
    let b = validation.b;
    let word = bvector_to_word(&b)?;
    let graph = word_to_graph(&word)?;

    let peo = is_chordal(&graph)?.ok_or_else(|| Error::Realization(format!("{word} is not chordal")))?;
    let counted = if graph.vertex_count() <= BRUTE_FORCE_RECOUNT_LIMIT {
        graph.clique_vector_bruteforce()?
    } else {
        clique_vector_chordal(&graph, &peo)?
    };
    if &counted != c {
        return Err(Error::Realization(format!("{word} has clique vector {counted}, expected {c}")));
    }
    let kappa = connectivity(&graph)?;
    if kappa < k {
        return Err(Error::Realization(format!("{word} is only {kappa}-connected, expected {k}")));
    }
    Ok(Realization { b, word, graph, connectivity: kappa })
}

/// Number of leading ones of `b`, which for a chordal clique vector is the
/// connectivity of every graph realizing it.
pub fn leading_ones(b: &BVector) -> usize {
    b.entries().iter().take_while(|x| x.is_one()).count()
}
