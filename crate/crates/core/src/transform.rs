//! The change of basis between clique vectors and b-vectors.
//!
//! `sum b_i x^(i-1) = sum c_i (x-1)^(i-1)`, or equivalently
//! `sum c_i x^(i-1) = sum b_i (x+1)^(i-1)`. A positive vector `c` is the clique
//! vector of a k-connected chordal graph iff its b-vector is positive and
//! starts with `k` ones.
//!
//! All arithmetic here is exact: the alternating sums in `c_to_b` overshoot the
//! magnitudes of the inputs long before any entry does.

use std::fmt;
use std::str::FromStr;

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::Serialize;

use crate::error::{Error, Result};

/// Exact binomial coefficient; zero when `k > n`.
pub fn binomial(n: u64, k: u64) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigUint::one();
    for i in 0..k {
        acc = acc * (n - i) / (i + 1);
    }
    acc
}

/// Binomial coefficient in machine words, `None` on overflow.
pub fn binomial_u64(n: u64, k: u64) -> Option<u64> {
    if k > n {
        return Some(0);
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k as u128 {
        // acc = C(n, i) before the step, which is integral and increasing for i <= k <= n/2
        acc = acc.checked_mul(n as u128 - i)? / (i + 1);
        if acc > u64::MAX as u128 {
            return None;
        }
    }
    u64::try_from(acc).ok()
}

/// Pascal rows `0..rows` as big integers.
fn pascal(rows: usize) -> Vec<Vec<BigInt>> {
    let mut table: Vec<Vec<BigInt>> = Vec::with_capacity(rows);
    for r in 0..rows {
        let mut row = vec![BigInt::one(); r + 1];
        for j in 1..r {
            row[j] = &table[r - 1][j - 1] + &table[r - 1][j];
        }
        table.push(row);
    }
    table
}

/// `b_j = sum_{i >= j} (-1)^(i-j) C(i-1, j-1) c_i`. Total on integer sequences.
pub fn c_to_b(c: &[BigInt]) -> Vec<BigInt> {
    let binom = pascal(c.len());
    (0..c.len())
        .map(|j| {
            (j..c.len()).fold(BigInt::zero(), |acc, i| {
                let term = &binom[i][j] * &c[i];
                if (i - j) % 2 == 0 {
                    acc + term
                } else {
                    acc - term
                }
            })
        })
        .collect()
}

/// `c_j = sum_{i >= j} C(i-1, j-1) b_i`. Inverse of [`c_to_b`].
pub fn b_to_c(b: &[BigInt]) -> Vec<BigInt> {
    let binom = pascal(b.len());
    (0..b.len()).map(|j| (j..b.len()).fold(BigInt::zero(), |acc, i| acc + &binom[i][j] * &b[i])).collect()
}

/// Counts `(c_1, ..., c_d)` of cliques by size: nonempty, every entry >= 1.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
#[serde(transparent)]
pub struct CliqueVector(Vec<u64>);

impl CliqueVector {
    pub fn new(entries: Vec<u64>) -> Result<Self> {
        if entries.is_empty() {
            return Err(Error::InvalidVector("clique vector must be nonempty".into()));
        }
        if let Some(i) = entries.iter().position(|&c| c == 0) {
            return Err(Error::InvalidVector(format!("c_{} = 0, clique counts must be positive", i + 1)));
        }
        Ok(CliqueVector(entries))
    }

    pub fn entries(&self) -> &[u64] {
        &self.0
    }

    /// `d`, the largest clique size.
    pub fn clique_number(&self) -> usize {
        self.0.len()
    }

    /// `c_1`, the number of vertices.
    pub fn vertex_count(&self) -> u64 {
        self.0[0]
    }

    pub fn to_bigints(&self) -> Vec<BigInt> {
        self.0.iter().map(|&c| BigInt::from(c)).collect()
    }

    pub fn b_vector(&self) -> BVector {
        BVector(c_to_b(&self.to_bigints()))
    }
}

impl fmt::Display for CliqueVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_joined(f, &self.0)
    }
}

impl FromStr for CliqueVector {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let entries = split_vector(s)?
            .into_iter()
            .map(|t| t.parse::<u64>().map_err(|_| Error::InvalidVector(format!("bad entry `{t}`"))))
            .collect::<Result<Vec<_>>>()?;
        CliqueVector::new(entries)
    }
}

impl TryFrom<Vec<BigInt>> for CliqueVector {
    type Error = Error;

    fn try_from(v: Vec<BigInt>) -> Result<Self> {
        let entries = v
            .iter()
            .map(|c| c.to_u64().ok_or_else(|| Error::InvalidVector(format!("entry {c} is not a clique count"))))
            .collect::<Result<Vec<_>>>()?;
        CliqueVector::new(entries)
    }
}

/// `(b_1, ..., b_d)`; signed, since arbitrary inputs may transform to
/// non-positive entries.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BVector(Vec<BigInt>);

impl BVector {
    pub fn new(entries: Vec<BigInt>) -> Result<Self> {
        if entries.is_empty() {
            return Err(Error::InvalidVector("b-vector must be nonempty".into()));
        }
        Ok(BVector(entries))
    }

    pub fn from_u64s(entries: &[u64]) -> Result<Self> {
        BVector::new(entries.iter().map(|&b| BigInt::from(b)).collect())
    }

    pub fn entries(&self) -> &[BigInt] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_positive(&self) -> bool {
        self.0.iter().all(Signed::is_positive)
    }

    pub fn sum(&self) -> BigInt {
        self.0.iter().sum()
    }

    /// The clique-side vector, as integers (it need not be positive).
    pub fn clique_side(&self) -> Vec<BigInt> {
        b_to_c(&self.0)
    }

    /// The clique vector; fails if some entry is not a positive `u64`.
    pub fn clique_vector(&self) -> Result<CliqueVector> {
        CliqueVector::try_from(self.clique_side())
    }
}

impl fmt::Display for BVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_joined(f, &self.0)
    }
}

impl FromStr for BVector {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        BVector::new(parse_integers(s)?)
    }
}

impl Serialize for BVector {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        // Entries fit in i64 in any realistic use; fall back to strings otherwise.
        s.collect_seq(self.0.iter().map(|b| match b.to_i64() {
            Some(x) => serde_json::Value::from(x),
            None => serde_json::Value::from(b.to_string()),
        }))
    }
}

/// Parses comma-separated integers (whitespace tolerated).
pub fn parse_integers(s: &str) -> Result<Vec<BigInt>> {
    split_vector(s)?
        .into_iter()
        .map(|t| t.parse::<BigInt>().map_err(|_| Error::InvalidVector(format!("bad entry `{t}`"))))
        .collect()
}

fn split_vector(s: &str) -> Result<Vec<&str>> {
    let parts: Vec<&str> = s.split(',').map(str::trim).collect();
    if parts.iter().any(|p| p.is_empty()) {
        return Err(Error::InvalidVector(format!("malformed vector `{s}`")));
    }
    Ok(parts)
}

fn write_joined<T: fmt::Display>(f: &mut fmt::Formatter<'_>, items: &[T]) -> fmt::Result {
    for (i, x) in items.iter().enumerate() {
        if i > 0 {
            f.write_str(",")?;
        }
        write!(f, "{x}")?;
    }
    Ok(())
}

/// First condition a b-vector violates; indices are 1-based.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Violation {
    KExceedsLength { k: usize, d: usize },
    NonPositive { index: usize, value: BigInt },
    NotOne { index: usize, value: BigInt },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::KExceedsLength { k, d } => write!(f, "k = {k} exceeds d = {d}"),
            Violation::NonPositive { index, value } => write!(f, "b_{index} = {value} not positive"),
            Violation::NotOne { index, value } => write!(f, "b_{index} = {value} ≠ 1"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Validation {
    pub b: BVector,
    pub verdict: std::result::Result<(), Violation>,
}

impl Validation {
    pub fn is_valid(&self) -> bool {
        self.verdict.is_ok()
    }
}

/// Whether `c` is the clique vector of some k-connected chordal graph.
pub fn validate(c: &CliqueVector, k: usize) -> Validation {
    let b = c.b_vector();
    let verdict = check_b(&b, k);
    Validation { b, verdict }
}

fn check_b(b: &BVector, k: usize) -> std::result::Result<(), Violation> {
    let d = b.len();
    if k > d {
        return Err(Violation::KExceedsLength { k, d });
    }
    for (i, value) in b.entries().iter().enumerate() {
        let index = i + 1;
        if !value.is_positive() {
            return Err(Violation::NonPositive { index, value: value.clone() });
        }
        if index <= k && !value.is_one() {
            return Err(Violation::NotOne { index, value: value.clone() });
        }
    }
    Ok(())
}
