//! Natural unit interval orders, their incomparability graphs, and the word
//! statistics defined relative to them.
//!
//! A natural unit interval order on `[n]` is stored as its area vector
//! `m(1..=n)`: weakly increasing, `i <= m(i) <= n`, with `i <_P j` iff `j > m(i)`.
//! Elements are labelled `1..=n` throughout; words are slices of distinct labels.

use serde::{Deserialize, Serialize};

use crate::combinat::{IndexSet, Partition};
use crate::error::{domain, Error, Result};
use crate::limits;

/// Reals closer than this to a unit gap are rejected as ties.
pub const TIE_TOLERANCE: f64 = 1e-9;

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "NuioRepr")]
pub struct NaturalUnitIntervalOrder {
    n: usize,
    area: Vec<usize>,
}

#[derive(Deserialize)]
struct NuioRepr {
    n: usize,
    area: Vec<usize>,
}

impl TryFrom<NuioRepr> for NaturalUnitIntervalOrder {
    type Error = Error;

    fn try_from(r: NuioRepr) -> Result<Self> {
        if r.area.len() != r.n {
            return Err(domain(format!("n = {} but area has length {}", r.n, r.area.len())));
        }
        NaturalUnitIntervalOrder::from_area(r.area)
    }
}

impl NaturalUnitIntervalOrder {
    /// Validates an area vector; errors name the first offending (1-based) index.
    pub fn from_area(area: Vec<usize>) -> Result<Self> {
        let n = area.len();
        if n == 0 {
            return Err(domain("area vector must be nonempty"));
        }
        for (k, &m) in area.iter().enumerate() {
            let i = k + 1;
            if m < i || m > n {
                return Err(Error::InvalidArea {
                    index: i,
                    reason: format!("m({i}) = {m} not in [{i}, {n}]"),
                });
            }
            if k > 0 && m < area[k - 1] {
                return Err(Error::InvalidArea {
                    index: i,
                    reason: format!("m({i}) = {m} < m({}) = {}", i - 1, area[k - 1]),
                });
            }
        }
        Ok(NaturalUnitIntervalOrder { n, area })
    }

    /// Canonicalizes a realization by strictly increasing reals.
    pub fn from_reals(y: &[f64]) -> Result<Self> {
        let n = y.len();
        if n == 0 {
            return Err(domain("need at least one real"));
        }
        if y.iter().any(|v| !v.is_finite()) {
            return Err(domain("reals must be finite"));
        }
        if let Some(k) = (1..n).find(|&k| y[k] <= y[k - 1]) {
            return Err(domain(format!("reals must be strictly increasing (y_{} >= y_{})", k, k + 1)));
        }
        for i in 0..n {
            for j in i + 1..n {
                if (y[j] - y[i] - 1.0).abs() < TIE_TOLERANCE {
                    return Err(Error::Tie { i: i + 1, j: j + 1 });
                }
            }
        }
        let area = (0..n).map(|i| (i..n).filter(|&j| y[j] < y[i] + 1.0).max().unwrap_or(i) + 1).collect();
        NaturalUnitIntervalOrder::from_area(area)
    }

    pub fn chain(n: usize) -> Self {
        NaturalUnitIntervalOrder { n, area: (1..=n).collect() }
    }

    pub fn antichain(n: usize) -> Self {
        NaturalUnitIntervalOrder { n, area: vec![n; n] }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn area(&self) -> &[usize] {
        &self.area
    }

    /// `a <_P b`.
    #[inline]
    pub fn less(&self, a: usize, b: usize) -> bool {
        b > self.area[a - 1]
    }

    #[inline]
    pub fn comparable(&self, a: usize, b: usize) -> bool {
        self.less(a, b) || self.less(b, a)
    }

    #[inline]
    pub fn incomparable(&self, a: usize, b: usize) -> bool {
        a != b && !self.comparable(a, b)
    }

    /// Induced subposet on `block`, relabelled order-isomorphically onto `[|block|]`.
    pub fn restrict(&self, block: &[usize]) -> Result<Self> {
        if block.is_empty() {
            return Err(domain("cannot restrict to an empty set"));
        }
        let mut b = block.to_vec();
        b.sort_unstable();
        b.dedup();
        if b.len() != block.len() || b.iter().any(|&e| e == 0 || e > self.n) {
            return Err(domain(format!("{block:?} is not a subset of [{}]", self.n)));
        }
        let area = b.iter().map(|&e| b.iter().filter(|&&f| f <= self.area[e - 1]).count()).collect();
        NaturalUnitIntervalOrder::from_area(area)
    }

    pub fn incomparability_graph(&self) -> IncompGraph {
        IncompGraph::from_poset(self)
    }
}

/// All natural unit interval orders on `[n]`, area vectors in lexicographic order.
pub fn enumerate_nuios(n: usize) -> Result<Vec<NaturalUnitIntervalOrder>> {
    if n == 0 {
        return Err(domain("n must be at least 1"));
    }
    limits::check_n(n, "enumerate_nuios")?;
    fn go(n: usize, area: &mut Vec<usize>, out: &mut Vec<NaturalUnitIntervalOrder>) {
        let i = area.len() + 1;
        if i > n {
            out.push(NaturalUnitIntervalOrder { n, area: area.clone() });
            return;
        }
        let lo = area.last().copied().unwrap_or(1).max(i);
        for m in lo..=n {
            area.push(m);
            go(n, area, out);
            area.pop();
        }
    }
    let mut out = Vec::new();
    go(n, &mut Vec::with_capacity(n), &mut out);
    Ok(out)
}

/// Simple graph on `[n]` whose edges are the incomparable pairs of a poset.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IncompGraph {
    n: usize,
    edges: Vec<(usize, usize)>,
    adj: Vec<bool>,
}

impl IncompGraph {
    pub fn from_poset(p: &NaturalUnitIntervalOrder) -> Self {
        let n = p.n();
        let edges = (1..=n).flat_map(|i| (i + 1..=p.area[i - 1]).map(move |j| (i, j))).collect();
        IncompGraph::from_edges_unchecked(n, edges)
    }

    /// Graph from an explicit edge list; pairs are normalized to `(small, large)`.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut es = Vec::with_capacity(edges.len());
        for &(a, b) in edges {
            if a == b || a == 0 || b == 0 || a > n || b > n {
                return Err(domain(format!("({a}, {b}) is not an edge on [{n}]")));
            }
            es.push((a.min(b), a.max(b)));
        }
        es.sort_unstable();
        es.dedup();
        Ok(IncompGraph::from_edges_unchecked(n, es))
    }

    fn from_edges_unchecked(n: usize, edges: Vec<(usize, usize)>) -> Self {
        let mut adj = vec![false; (n + 1) * (n + 1)];
        for &(a, b) in &edges {
            adj[a * (n + 1) + b] = true;
            adj[b * (n + 1) + a] = true;
        }
        IncompGraph { n, edges, adj }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Edges `(i, j)` with `i < j`, lexicographically sorted.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    #[inline]
    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        self.adj[a * (self.n + 1) + b]
    }

    /// Subgraph induced on `block`, relabelled order-preservingly onto `[|block|]`.
    pub fn induced(&self, block: &[usize]) -> Result<IncompGraph> {
        let mut b = block.to_vec();
        b.sort_unstable();
        b.dedup();
        if b.len() != block.len() || b.iter().any(|&e| e == 0 || e > self.n) {
            return Err(domain(format!("{block:?} is not a subset of [{}]", self.n)));
        }
        let mut edges = Vec::new();
        for (x, &a) in b.iter().enumerate() {
            for (y, &c) in b.iter().enumerate().skip(x + 1) {
                if self.has_edge(a, c) {
                    edges.push((x + 1, y + 1));
                }
            }
        }
        Ok(IncompGraph::from_edges_unchecked(b.len(), edges))
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        (1..=self.n).filter(move |&w| self.has_edge(v, w))
    }
}

impl Serialize for IncompGraph {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Repr<'a> {
            n: usize,
            edges: &'a [(usize, usize)],
        }
        Repr { n: self.n, edges: &self.edges }.serialize(serializer)
    }
}

/// Positions `i` (1-based) with `w_i >_P w_{i+1}`, as a subset of `[len-1]`.
pub fn p_descent_set(word: &[usize], p: &NaturalUnitIntervalOrder) -> IndexSet {
    let elems = (1..word.len()).filter(|&i| p.less(word[i], word[i - 1])).collect();
    IndexSet::from_sorted_unchecked(word.len().max(1), elems)
}

/// Positions `j` (1-based) whose entry lies above every earlier entry in `P`.
pub fn lr_p_maxima(word: &[usize], p: &NaturalUnitIntervalOrder) -> Vec<usize> {
    (0..word.len()).filter(|&j| word[..j].iter().all(|&a| p.less(a, word[j]))).map(|j| j + 1).collect()
}

/// Number of position pairs `i < j` with `w_i > w_j` joined by an edge.
pub fn inv_g(word: &[usize], g: &IncompGraph) -> usize {
    let mut count = 0;
    for (i, &a) in word.iter().enumerate() {
        for &b in &word[i + 1..] {
            if a > b && g.has_edge(a, b) {
                count += 1;
            }
        }
    }
    count
}

/// No `P`-descent and no left-to-right `P`-maximum beyond the first position.
pub fn satisfies_n_condition(word: &[usize], p: &NaturalUnitIntervalOrder) -> bool {
    p_descent_set(word, p).is_empty() && lr_p_maxima(word, p).len() <= 1
}

/// Membership in `N_lambda(P)`: cut `word` left to right into segments of
/// lengths `lambda_1, lambda_2, ...` and require the `N` condition on each.
pub fn is_in_n_lambda(word: &[usize], lambda: &Partition, p: &NaturalUnitIntervalOrder) -> Result<bool> {
    if lambda.n() != word.len() || word.len() != p.n() {
        return Err(domain(format!(
            "partition of {} applied to a word of length {} over a poset on [{}]",
            lambda.n(),
            word.len(),
            p.n()
        )));
    }
    Ok(segments(word, lambda).all(|seg| satisfies_n_condition(seg, p)))
}

/// Contiguous segments of `word` with lengths given by the parts of `lambda`.
pub fn segments<'a>(word: &'a [usize], lambda: &'a Partition) -> impl Iterator<Item = &'a [usize]> + 'a {
    lambda.parts().iter().scan(0, move |start, &len| {
        let seg = &word[*start..*start + len];
        *start += len;
        Some(seg)
    })
}
