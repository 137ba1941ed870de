//! Partitions, compositions, index sets and standard Young tableaux.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::One;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{domain, Error, Result};

/// An integer partition: weakly decreasing positive parts.
///
/// Ordering is reverse-lexicographic, so `(3) < (2,1) < (1,1,1)` and sorted
/// collections list the largest partition first.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.is_empty() {
            return Err(domain("partition must have at least one part"));
        }
        if parts.contains(&0) {
            return Err(domain(format!("partition {parts:?} has a zero part")));
        }
        if !parts.windows(2).all(|w| w[0] >= w[1]) {
            return Err(domain(format!("partition {parts:?} is not weakly decreasing")));
        }
        Ok(Partition { parts })
    }

    /// The one-part partition `(n)`.
    pub fn row(n: usize) -> Self {
        assert!(n >= 1);
        Partition { parts: vec![n] }
    }

    /// The partition `(1,1,...,1)` of `n`.
    pub fn column(n: usize) -> Self {
        assert!(n >= 1);
        Partition { parts: vec![1; n] }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn n(&self) -> usize {
        self.parts.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn as_composition(&self) -> Composition {
        Composition { parts: self.parts.clone() }
    }

    /// The conjugate (transposed) partition.
    pub fn conjugate(&self) -> Partition {
        let parts = (1..=self.parts[0]).map(|c| self.parts.iter().filter(|&&p| p >= c).count()).collect();
        Partition { parts }
    }

    /// `m_i`, the number of parts equal to `i`, for `i = 1..=largest part`.
    pub fn multiplicities(&self) -> Vec<usize> {
        let mut m = vec![0; self.parts[0] + 1];
        for &p in &self.parts {
            m[p] += 1;
        }
        m
    }
}

impl Ord for Partition {
    fn cmp(&self, other: &Self) -> Ordering {
        other.parts.cmp(&self.parts)
    }
}

impl PartialOrd for Partition {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", join(&self.parts))
    }
}

impl FromStr for Partition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Partition::new(parse_list(s)?)
    }
}

impl Serialize for Partition {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Partition {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// Parses a comma-joined list of positive integers such as `"2,3,3"`.
pub fn parse_list(s: &str) -> Result<Vec<usize>> {
    s.split(',')
        .map(|tok| {
            tok.trim().parse::<usize>().map_err(|e| domain(format!("cannot parse {tok:?} in {s:?}: {e}")))
        })
        .collect()
}

fn join(xs: &[usize]) -> String {
    xs.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",")
}

/// An ordered sequence of positive integers.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Composition {
    parts: Vec<usize>,
}

impl Composition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.is_empty() || parts.contains(&0) {
            return Err(domain(format!("composition {parts:?} must have positive parts")));
        }
        Ok(Composition { parts })
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn n(&self) -> usize {
        self.parts.iter().sum()
    }
}

impl From<&Partition> for Composition {
    fn from(p: &Partition) -> Self {
        p.as_composition()
    }
}

/// A subset of `[n-1]`, stored as a strictly increasing sequence.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct IndexSet {
    n: usize,
    elems: Vec<usize>,
}

impl IndexSet {
    /// Builds a subset of `[n-1]`; input order and duplicates are normalized.
    pub fn new(n: usize, mut elems: Vec<usize>) -> Result<Self> {
        if n == 0 {
            return Err(domain("degree n must be at least 1"));
        }
        elems.sort_unstable();
        elems.dedup();
        if let Some(&bad) = elems.iter().find(|&&e| e == 0 || e >= n) {
            return Err(domain(format!("element {bad} is not in [{}]", n - 1)));
        }
        Ok(IndexSet { n, elems })
    }

    pub fn empty(n: usize) -> Self {
        IndexSet { n, elems: Vec::new() }
    }

    /// `[n-1]` itself.
    pub fn full(n: usize) -> Self {
        IndexSet { n, elems: (1..n).collect() }
    }

    pub(crate) fn from_sorted_unchecked(n: usize, elems: Vec<usize>) -> Self {
        debug_assert!(elems.windows(2).all(|w| w[0] < w[1]));
        debug_assert!(elems.iter().all(|&e| e >= 1 && e < n));
        IndexSet { n, elems }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn elems(&self) -> &[usize] {
        &self.elems
    }

    pub fn len(&self) -> usize {
        self.elems.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elems.is_empty()
    }

    pub fn contains(&self, e: usize) -> bool {
        self.elems.binary_search(&e).is_ok()
    }

    /// `[n-1] \ S`.
    pub fn complement(&self) -> IndexSet {
        let elems = (1..self.n).filter(|e| !self.contains(*e)).collect();
        IndexSet { n: self.n, elems }
    }

    /// `n - S = { n - a : a in S }`.
    pub fn reflect(&self) -> IndexSet {
        let elems = self.elems.iter().rev().map(|&a| self.n - a).collect();
        IndexSet { n: self.n, elems }
    }

    /// Number of elements not contained in `others`.
    pub fn count_outside(&self, others: &[usize]) -> usize {
        self.elems.iter().filter(|e| !others.contains(e)).count()
    }

    /// All `2^(n-1)` subsets of `[n-1]`.
    pub fn all(n: usize) -> Vec<IndexSet> {
        (0u64..1 << (n - 1))
            .map(|mask| {
                let elems = (1..n).filter(|&e| mask >> (e - 1) & 1 == 1).collect();
                IndexSet { n, elems }
            })
            .collect()
    }
}

impl Serialize for IndexSet {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        self.elems.serialize(serializer)
    }
}

/// A standard Young tableau, rows listed top to bottom.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Tableau {
    shape: Partition,
    rows: Vec<Vec<usize>>,
}

impl Tableau {
    pub fn shape(&self) -> &Partition {
        &self.shape
    }

    pub fn rows(&self) -> &[Vec<usize>] {
        &self.rows
    }

    /// `i` such that `i + 1` sits in a strictly lower row than `i`.
    pub fn descent_set(&self) -> IndexSet {
        let n = self.shape.n();
        let mut row_of = vec![0; n + 1];
        for (r, row) in self.rows.iter().enumerate() {
            for &e in row {
                row_of[e] = r;
            }
        }
        let elems = (1..n).filter(|&i| row_of[i + 1] > row_of[i]).collect();
        IndexSet::from_sorted_unchecked(n, elems)
    }
}

/// All partitions of `n`, largest first.
pub fn partitions_of(n: usize) -> Result<Vec<Partition>> {
    if n == 0 {
        return Err(domain("partitions_of: n must be at least 1"));
    }
    fn go(rest: usize, max: usize, prefix: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if rest == 0 {
            out.push(Partition { parts: prefix.clone() });
            return;
        }
        for p in (1..=rest.min(max)).rev() {
            prefix.push(p);
            go(rest - p, p, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    go(n, n, &mut Vec::new(), &mut out);
    Ok(out)
}

/// Partial sums `r_1 < r_2 < ... < r_k = n` of a composition.
pub fn partial_sums(alpha: &Composition) -> Vec<usize> {
    alpha
        .parts
        .iter()
        .scan(0, |acc, &p| {
            *acc += p;
            Some(*acc)
        })
        .collect()
}

/// Whether `s` meets every run `{r_{i-1}+1, ..., r_i - 1}` of `alpha` in a prefix of that run.
pub fn is_alpha_unimodal(s: &IndexSet, alpha: &Composition) -> Result<bool> {
    if s.n != alpha.n() {
        return Err(domain(format!("subset of [{}] tested against a composition of {}", s.n - 1, alpha.n())));
    }
    let mut lo = 0;
    for r in partial_sums(alpha) {
        // inside (lo, r): members must be lo+1, lo+2, ... with no gaps
        for (expect, &e) in (lo + 1..).zip(s.elems.iter().filter(|&&e| e > lo && e < r)) {
            if e != expect {
                return Ok(false);
            }
        }
        lo = r;
    }
    Ok(true)
}

/// `z_lambda = prod_i i^{m_i} m_i!`.
pub fn z_of(lambda: &Partition) -> BigInt {
    let mut z = BigInt::one();
    for (i, &m) in lambda.multiplicities().iter().enumerate().skip(1) {
        for k in 1..=m {
            z *= i * k;
        }
    }
    z
}

pub fn factorial(n: usize) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, k| acc * k)
}

/// All standard Young tableaux of shape `lambda` with their descent sets.
///
/// Entries `1..=n` are placed in increasing order, each into some row where it
/// keeps the filling standard; rows are tried top to bottom.
pub fn syt_with_descents(lambda: &Partition) -> Vec<(Tableau, IndexSet)> {
    fn place(
        k: usize,
        n: usize,
        shape: &[usize],
        rows: &mut Vec<Vec<usize>>,
        out: &mut Vec<Vec<Vec<usize>>>,
    ) {
        if k > n {
            out.push(rows.clone());
            return;
        }
        for r in 0..shape.len() {
            let len = rows[r].len();
            if len < shape[r] && (r == 0 || rows[r - 1].len() > len) {
                rows[r].push(k);
                place(k + 1, n, shape, rows, out);
                rows[r].pop();
            }
        }
    }
    let n = lambda.n();
    let mut fillings = Vec::new();
    place(1, n, &lambda.parts, &mut vec![Vec::new(); lambda.len()], &mut fillings);
    fillings
        .into_iter()
        .map(|rows| {
            let t = Tableau { shape: lambda.clone(), rows };
            let des = t.descent_set();
            (t, des)
        })
        .collect()
}
