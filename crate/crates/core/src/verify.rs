//! Exhaustive checks over all labeled graphs up to a vertex bound.
//!
//! Each sweep runs a per-graph check and collects the graphs it rejects as
//! graph6 strings, so any counterexample can be replayed on its own with
//! [`replay`]. Sweeps are split into edge-mask ranges that can run in
//! parallel; results are merged in mask order, so a report does not depend
//! on the number of jobs.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use serde::Serialize;

use crate::chordal::{clique_vector_chordal, is_chordal};
use crate::connectivity::{connectivity, connectivity_bruteforce, connectivity_bruteforce_with, Convention};
use crate::error::{Error, Result};
use crate::graph::io::{format_graph, GraphFormat};
use crate::graph::{enumerate_graph_range, labeled_graph_count, Graph};
use crate::stanley_reisner::{betti_table_full, connectivity_from_betti};
use crate::threshold::{
    bvector_count, enumerate_bvectors, realize, word_is_k_connected, word_to_bvector, word_to_graph, Letter, SdWord,
};
use crate::transform::{validate, BVector};

const COMPLETE_GRAPH_NOTE: &str =
    "complete graphs: kappa(K_n) = n (inclusive convention) is used for the clique-vector \
     theorem and for the Betti connectivity formula; the depth equality depth = kappa + 1 holds for K_n only \
     with the classical kappa(K_n) = n - 1 and is checked that way";

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Theorem {
    /// Clique vectors of k-connected chordal graphs, both directions.
    Main,
    /// Chordal iff the face ring has a 2-linear resolution.
    Froberg,
    /// Connectivity from the linear strand, and the depth corollaries.
    BettiConnectivity,
    /// `|B(n, d, k)| = C(n - k - 1, d - k - 1)` = number of threshold words.
    Counting,
}

impl Theorem {
    pub const ALL: [Theorem; 4] = [Theorem::Main, Theorem::Froberg, Theorem::BettiConnectivity, Theorem::Counting];

    pub fn id(self) -> &'static str {
        match self {
            Theorem::Main => "main",
            Theorem::Froberg => "froberg",
            Theorem::BettiConnectivity => "betti",
            Theorem::Counting => "counting",
        }
    }

    pub fn max_n(self) -> usize {
        match self {
            Theorem::Main => 8,
            Theorem::Froberg | Theorem::BettiConnectivity => 6,
            Theorem::Counting => 9,
        }
    }

    fn statement(self) -> &'static str {
        match self {
            Theorem::Main => {
                "c is the clique vector of a k-connected chordal graph iff b = c_to_b(c) is positive with b_1 = ... = b_k = 1"
            }
            Theorem::Froberg => "G is chordal iff k[Delta(G)] has a 2-linear resolution",
            Theorem::BettiConnectivity => {
                "kappa(G) = max{k : beta_(i,i+1) = 0 for all i >= n - k}; depth <= kappa + 1, with equality for chordal G"
            }
            Theorem::Counting => "|B(n,d,k)| = C(n-k-1, d-k-1) = #{k-connected threshold words, n letters, d S's}",
        }
    }
}

impl fmt::Display for Theorem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.id())
    }
}

impl FromStr for Theorem {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Theorem::ALL.into_iter().find(|t| t.id() == s).ok_or_else(|| Error::UnknownTheorem(s.to_string()))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Counterexample {
    /// The offending graph, when there is one.
    pub graph6: Option<String>,
    pub diagnostic: String,
}

#[derive(Debug, Clone, Serialize)]
pub struct VerificationReport {
    pub theorem: &'static str,
    pub statement: &'static str,
    pub n_min: usize,
    pub n_max: usize,
    pub graphs_scanned: u64,
    /// Named tallies of what was checked, e.g. how many graphs were chordal.
    pub checks: BTreeMap<&'static str, u64>,
    pub notes: Vec<&'static str>,
    pub counterexamples: Vec<Counterexample>,
    pub elapsed_ms: u128,
    pub pass: bool,
}

impl VerificationReport {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}

type Tally = BTreeMap<&'static str, u64>;

#[derive(Default)]
struct Partial {
    scanned: u64,
    tally: Tally,
    counterexamples: Vec<Counterexample>,
}

impl Partial {
    fn merge(mut self, other: Partial) -> Partial {
        self.scanned += other.scanned;
        for (k, v) in other.tally {
            *self.tally.entry(k).or_insert(0) += v;
        }
        self.counterexamples.extend(other.counterexamples);
        self
    }
}

fn bump(tally: &mut Tally, key: &'static str) {
    *tally.entry(key).or_insert(0) += 1;
}

/// Outcome of checking one graph: `Some(diagnostic)` on failure.
type GraphCheck = fn(&Graph, &mut Tally) -> Result<Option<String>>;

fn check_range(theorem: Theorem, n_max: usize) -> Result<()> {
    if !(1..=theorem.max_n()).contains(&n_max) {
        return Err(Error::OutOfRange { what: "n_max", value: n_max, min: 1, max: theorem.max_n() });
    }
    Ok(())
}

/// Runs the check for `theorem` on all labeled graphs with `1..=n_max`
/// vertices using `jobs` worker threads (`0` means all cores).
pub fn verify(theorem: Theorem, n_max: usize, jobs: usize) -> Result<VerificationReport> {
    match theorem {
        Theorem::Main => verify_main_theorem(n_max, jobs),
        Theorem::Froberg => verify_froberg(n_max, jobs),
        Theorem::BettiConnectivity => verify_betti_connectivity(n_max, jobs),
        Theorem::Counting => verify_counting(n_max),
    }
}

/// Checks a single graph against `theorem`; `Some(diagnostic)` if it fails.
/// The counting identity has no per-graph form, so it always passes here.
pub fn replay(theorem: Theorem, g: &Graph) -> Result<Option<String>> {
    let mut scratch = Tally::new();
    match theorem {
        Theorem::Main => check_main_graph(g, &mut scratch),
        Theorem::Froberg => check_froberg_graph(g, &mut scratch),
        Theorem::BettiConnectivity => check_betti_graph(g, &mut scratch),
        Theorem::Counting => Ok(None),
    }
}

pub fn verify_main_theorem(n_max: usize, jobs: usize) -> Result<VerificationReport> {
    check_range(Theorem::Main, n_max)?;
    let start = Instant::now();
    let mut result = sweep(n_max, jobs, check_main_graph)?;
    // Converse: every vector the theorem admits is realized.
    for n in 1..=n_max {
        for d in 1..=n {
            for k in 0..=d {
                for b in enumerate_bvectors(n, d, k) {
                    bump(&mut result.tally, "bvectors_realized");
                    if let Some(counter) = check_bvector(&b, k)? {
                        result.counterexamples.push(counter);
                    }
                }
            }
        }
    }
    Ok(finish(Theorem::Main, n_max, result, start, vec![COMPLETE_GRAPH_NOTE]))
}

pub fn verify_froberg(n_max: usize, jobs: usize) -> Result<VerificationReport> {
    check_range(Theorem::Froberg, n_max)?;
    let start = Instant::now();
    let result = sweep(n_max, jobs, check_froberg_graph)?;
    Ok(finish(Theorem::Froberg, n_max, result, start, Vec::new()))
}

pub fn verify_betti_connectivity(n_max: usize, jobs: usize) -> Result<VerificationReport> {
    check_range(Theorem::BettiConnectivity, n_max)?;
    let start = Instant::now();
    let result = sweep(n_max, jobs, check_betti_graph)?;
    Ok(finish(Theorem::BettiConnectivity, n_max, result, start, vec![COMPLETE_GRAPH_NOTE]))
}

/// Compares, for every `n <= n_max`, `d <= n`, `k <= d`, the size of the
/// b-vector stream, the binomial formula, and the number of threshold words
/// (connectivity measured on the graphs themselves).
pub fn verify_counting(n_max: usize) -> Result<VerificationReport> {
    check_range(Theorem::Counting, n_max)?;
    let start = Instant::now();
    let mut result = Partial::default();
    for n in 1..=n_max {
        // words_by[d][k] = #words with d S's whose graph is k-connected
        let mut words_by = vec![vec![0u64; n + 2]; n + 1];
        let mut letter_rule_by = vec![vec![0u64; n + 2]; n + 1];
        let mut bvectors_by_word: BTreeMap<(usize, usize), Vec<BVector>> = BTreeMap::new();
        for bits in 0..1u32 << (n - 1) {
            let mut letters: Vec<Letter> =
                (0..n - 1).map(|i| if bits >> i & 1 == 1 { Letter::S } else { Letter::D }).collect();
            letters.push(Letter::S);
            let word = SdWord::new(letters)?;
            let d = word.s_count();
            let kappa = connectivity(&word_to_graph(&word)?)?;
            result.scanned += 1;
            for k in 0..=d {
                if kappa >= k {
                    words_by[d][k] += 1;
                }
                if word_is_k_connected(&word, k) {
                    letter_rule_by[d][k] += 1;
                    bvectors_by_word.entry((d, k)).or_default().push(word_to_bvector(&word));
                }
            }
        }
        for d in 1..=n {
            for k in 0..=d {
                bump(&mut result.tally, "parameter_triples");
                let mut streamed: Vec<BVector> = enumerate_bvectors(n, d, k).collect();
                let formula = bvector_count(n as u64, d as u64, k as u64);
                let mut from_words = bvectors_by_word.remove(&(d, k)).unwrap_or_default();
                let sort_key = |b: &BVector| b.entries().to_vec();
                streamed.sort_by_key(sort_key);
                from_words.sort_by_key(sort_key);
                let counts = [streamed.len() as u64, words_by[d][k], letter_rule_by[d][k]];
                if counts.iter().any(|&c| formula != c.into()) || streamed != from_words {
                    result.counterexamples.push(Counterexample {
                        graph6: None,
                        diagnostic: format!(
                            "n={n} d={d} k={k}: formula {formula}, stream {}, words by connectivity {}, words by letters {}, same b-vectors: {}",
                            counts[0],
                            counts[1],
                            counts[2],
                            streamed == from_words
                        ),
                    });
                }
            }
        }
    }
    Ok(finish(Theorem::Counting, n_max, result, start, Vec::new()))
}

fn finish(
    theorem: Theorem,
    n_max: usize,
    result: Partial,
    start: Instant,
    notes: Vec<&'static str>,
) -> VerificationReport {
    VerificationReport {
        theorem: theorem.id(),
        statement: theorem.statement(),
        n_min: 1,
        n_max,
        graphs_scanned: result.scanned,
        checks: result.tally,
        notes,
        pass: result.counterexamples.is_empty(),
        counterexamples: result.counterexamples,
        elapsed_ms: start.elapsed().as_millis(),
    }
}

fn sweep(n_max: usize, jobs: usize, check: GraphCheck) -> Result<Partial> {
    let mut total = Partial::default();
    for n in 1..=n_max {
        let count = labeled_graph_count(n);
        let chunks = count.min(256);
        let ranges: Vec<(u64, u64)> = (0..chunks).map(|i| (count * i / chunks, count * (i + 1) / chunks)).collect();
        let run = |&(lo, hi): &(u64, u64)| -> Result<Partial> {
            let mut part = Partial::default();
            for g in enumerate_graph_range(n, lo..hi)? {
                part.scanned += 1;
                if let Some(diagnostic) = check(&g, &mut part.tally)? {
                    part.counterexamples
                        .push(Counterexample { graph6: Some(format_graph(&g, GraphFormat::Graph6)), diagnostic });
                }
            }
            Ok(part)
        };
        let parts = run_partitions(&ranges, jobs, run)?;
        total = parts.into_iter().fold(total, Partial::merge);
    }
    Ok(total)
}

#[cfg(feature = "parallel")]
fn run_partitions<F>(ranges: &[(u64, u64)], jobs: usize, run: F) -> Result<Vec<Partial>>
where
    F: Fn(&(u64, u64)) -> Result<Partial> + Sync + Send,
{
    use rayon::prelude::*;
    if jobs == 1 {
        return ranges.iter().map(run).collect();
    }
    let pool =
        rayon::ThreadPoolBuilder::new().num_threads(jobs).build().map_err(|e| Error::ThreadPool(e.to_string()))?;
    pool.install(|| ranges.par_iter().map(&run).collect())
}

#[cfg(not(feature = "parallel"))]
fn run_partitions<F>(ranges: &[(u64, u64)], _jobs: usize, run: F) -> Result<Vec<Partial>>
where
    F: Fn(&(u64, u64)) -> Result<Partial>,
{
    ranges.iter().map(run).collect()
}

fn check_main_graph(g: &Graph, tally: &mut Tally) -> Result<Option<String>> {
    let Some(peo) = is_chordal(g)? else { return Ok(None) };
    bump(tally, "chordal_graphs");
    let c = clique_vector_chordal(g, &peo)?;
    let brute = g.clique_vector_bruteforce()?;
    if c != brute {
        return Ok(Some(format!("elimination-order clique vector {c} differs from brute force {brute}")));
    }
    let kappa = connectivity(g)?;
    for k in 0..=kappa {
        bump(tally, "validations");
        if let Err(v) = validate(&c, k).verdict {
            return Ok(Some(format!("{kappa}-connected chordal graph with c = {c} rejected at k = {k}: {v}")));
        }
    }
    // The b-vector pins the connectivity down exactly.
    if validate(&c, kappa + 1).is_valid() {
        return Ok(Some(format!("c = {c} accepted at k = {} but the graph is only {kappa}-connected", kappa + 1)));
    }
    match realize(&c, kappa) {
        Ok(r) if r.connectivity == kappa => Ok(None),
        Ok(r) => {
            Ok(Some(format!("realization {} of c = {c} is {}-connected, expected {kappa}", r.word, r.connectivity)))
        }
        Err(e) => Ok(Some(format!("c = {c} at k = {kappa} not realized: {e}"))),
    }
}

fn check_bvector(b: &BVector, k: usize) -> Result<Option<Counterexample>> {
    let c = b.clique_vector()?;
    let fail = |graph: Option<&Graph>, diagnostic: String| {
        Ok(Some(Counterexample { graph6: graph.map(|g| format_graph(g, GraphFormat::Graph6)), diagnostic }))
    };
    let r = match realize(&c, k) {
        Ok(r) => r,
        Err(e) => return fail(None, format!("b = {b}, k = {k}: {e}")),
    };
    if r.graph.clique_vector_bruteforce()? != c {
        return fail(Some(&r.graph), format!("b = {b}: realization does not have clique vector {c}"));
    }
    if is_chordal(&r.graph)?.is_none() {
        return fail(Some(&r.graph), format!("b = {b}: realization is not chordal"));
    }
    if connectivity_bruteforce(&r.graph)? < k {
        return fail(Some(&r.graph), format!("b = {b}: realization is not {k}-connected"));
    }
    if &word_to_bvector(&r.word) != b {
        return fail(Some(&r.graph), format!("b = {b}: word {} has a different b-vector", r.word));
    }
    Ok(None)
}

fn check_froberg_graph(g: &Graph, tally: &mut Tally) -> Result<Option<String>> {
    let chordal = is_chordal(g)?.is_some();
    let table = betti_table_full(g)?;
    bump(tally, if chordal { "chordal_graphs" } else { "non_chordal_graphs" });
    bump(tally, "full_betti_tables");
    if chordal != table.has_two_linear_resolution() {
        return Ok(Some(format!(
            "chordal = {chordal} but 2-linear resolution = {}; table {}",
            table.has_two_linear_resolution(),
            table.to_json()
        )));
    }
    Ok(None)
}

fn check_betti_graph(g: &Graph, tally: &mut Tally) -> Result<Option<String>> {
    let kappa = connectivity_bruteforce(g)?;
    let from_betti = connectivity_from_betti(g)?;
    let from_flow = connectivity(g)?;
    if from_betti != kappa || from_flow != kappa {
        return Ok(Some(format!("connectivity: definition {kappa}, Betti strand {from_betti}, max flow {from_flow}")));
    }
    let depth = betti_table_full(g)?.depth();
    if g.is_complete() {
        bump(tally, "complete_graphs");
        let classical = connectivity_bruteforce_with(g, Convention::Classical)?;
        if depth != classical + 1 {
            return Ok(Some(format!("K_n: depth {depth} != classical kappa {classical} + 1")));
        }
        return Ok(None);
    }
    if depth > kappa + 1 {
        return Ok(Some(format!("depth {depth} exceeds kappa + 1 = {}", kappa + 1)));
    }
    if is_chordal(g)?.is_some() {
        bump(tally, "non_complete_chordal_graphs");
        if depth != kappa + 1 {
            return Ok(Some(format!("chordal graph with depth {depth} != kappa + 1 = {}", kappa + 1)));
        }
    } else {
        bump(tally, "non_chordal_graphs");
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::io::parse_graph;

    #[test]
    fn small_sweeps_pass() {
        let main = verify_main_theorem(3, 1).unwrap();
        assert!(main.pass);
        assert_eq!(main.graphs_scanned, 1 + 2 + 8);
        assert!(verify_froberg(4, 1).unwrap().pass);
        assert!(verify_betti_connectivity(3, 1).unwrap().pass);
        assert!(verify_counting(6).unwrap().pass);
    }

    #[test]
    fn froberg_sees_the_four_cycle() {
        let report = verify_froberg(4, 1).unwrap();
        assert_eq!(report.checks["non_chordal_graphs"], 3);
        let c4 = parse_graph("4\n0 1\n1 2\n2 3\n0 3\n", GraphFormat::EdgeList).unwrap();
        assert_eq!(replay(Theorem::Froberg, &c4).unwrap(), None);
    }

    #[test]
    fn range_checks() {
        assert!(verify(Theorem::Main, 0, 1).is_err());
        assert!(verify(Theorem::Main, 9, 1).is_err());
        assert!(verify(Theorem::Froberg, 7, 1).is_err());
        assert!(verify(Theorem::BettiConnectivity, 7, 1).is_err());
        assert!(verify(Theorem::Counting, 10, 1).is_err());
    }

    #[test]
    fn reports_do_not_depend_on_jobs() {
        let one = verify_froberg(5, 1).unwrap();
        let four = verify_froberg(5, 4).unwrap();
        assert_eq!(one.graphs_scanned, four.graphs_scanned);
        assert_eq!(one.checks, four.checks);
        assert_eq!(one.counterexamples, four.counterexamples);
    }

    #[test]
    fn theorem_ids_round_trip() {
        for t in Theorem::ALL {
            assert_eq!(t.id().parse::<Theorem>().unwrap(), t);
        }
        assert!("lemma".parse::<Theorem>().is_err());
    }

    /// A deliberately wrong check produces replayable counterexamples.
    #[test]
    fn counterexamples_replay_from_graph6() {
        fn claims_everything_is_a_tree(g: &Graph, _: &mut Tally) -> Result<Option<String>> {
            Ok((g.edge_count() + 1 != g.vertex_count() || !g.is_connected()).then(|| "not a tree".to_string()))
        }
        let result = sweep(4, 1, claims_everything_is_a_tree).unwrap();
        assert!(!result.counterexamples.is_empty());
        for counter in &result.counterexamples {
            let g = parse_graph(counter.graph6.as_deref().unwrap(), GraphFormat::Graph6).unwrap();
            assert!(claims_everything_is_a_tree(&g, &mut Tally::new()).unwrap().is_some());
        }
    }
}
