//! Acyclic orientations of incomparability graphs and the bijection between
//! them and descent-free words.
//!
//! An orientation records, for each edge of the graph's canonical edge list,
//! its head (the vertex the edge points to). A sink is a vertex that is the
//! head of every edge meeting it.

use std::collections::HashMap;

use itertools::Itertools;
use serde::Serialize;

use crate::combinat::Partition;
use crate::error::{domain, Error, Result};
use crate::limits::MAX_ORIENTATION_EDGES;
use crate::order::{IncompGraph, NaturalUnitIntervalOrder};

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Orientation {
    #[serde(skip)]
    n: usize,
    edges: Vec<(usize, usize)>,
    head: Vec<usize>,
}

impl Orientation {
    /// Validates heads against `g`'s canonical edge list and checks acyclicity.
    pub fn new(g: &IncompGraph, head: Vec<usize>) -> Result<Self> {
        let o = Orientation::unchecked(g, head)?;
        if !o.is_acyclic() {
            return Err(domain("orientation has a directed cycle"));
        }
        Ok(o)
    }

    /// Validates heads only; the result may contain a directed cycle.
    pub fn unchecked(g: &IncompGraph, head: Vec<usize>) -> Result<Self> {
        if head.len() != g.edges().len() {
            return Err(domain(format!("{} heads given for {} edges", head.len(), g.edges().len())));
        }
        for (&(a, b), &h) in g.edges().iter().zip(&head) {
            if h != a && h != b {
                return Err(domain(format!("head {h} is not an endpoint of {{{a},{b}}}")));
            }
        }
        Ok(Orientation { n: g.n(), edges: g.edges().to_vec(), head })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn heads(&self) -> &[usize] {
        &self.head
    }

    /// Directed edges as `(tail, head)`.
    pub fn arcs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.edges.iter().zip(&self.head).map(|(&(a, b), &h)| if h == a { (b, a) } else { (a, b) })
    }

    pub fn is_acyclic(&self) -> bool {
        // Kahn: repeatedly strip sinks
        let mut out_deg = vec![0usize; self.n + 1];
        let mut into: Vec<Vec<usize>> = vec![Vec::new(); self.n + 1];
        for (tail, head) in self.arcs() {
            out_deg[tail] += 1;
            into[head].push(tail);
        }
        let mut stack: Vec<usize> = (1..=self.n).filter(|&v| out_deg[v] == 0).collect();
        let mut removed = 0;
        while let Some(v) = stack.pop() {
            removed += 1;
            for &u in &into[v] {
                out_deg[u] -= 1;
                if out_deg[u] == 0 {
                    stack.push(u);
                }
            }
        }
        removed == self.n
    }

    /// Vertices with no outgoing edge, increasing.
    pub fn sinks(&self) -> Vec<usize> {
        let mut has_out = vec![false; self.n + 1];
        for (tail, _) in self.arcs() {
            has_out[tail] = true;
        }
        (1..=self.n).filter(|&v| !has_out[v]).collect()
    }

    /// Number of edges whose head is the larger endpoint.
    pub fn asc(&self) -> usize {
        self.edges.iter().zip(&self.head).filter(|(&(_, b), &h)| h == b).count()
    }
}

/// All acyclic orientations of `g`, ordered lexicographically by head vector.
pub fn enumerate_acyclic(g: &IncompGraph) -> Result<Vec<Orientation>> {
    let m = g.edges().len();
    if m > MAX_ORIENTATION_EDGES {
        return Err(Error::Resource(format!(
            "{m} edges exceeds the orientation cap of {MAX_ORIENTATION_EDGES}"
        )));
    }
    Ok(acyclic_head_vectors(g)
        .into_iter()
        .map(|head| Orientation { n: g.n(), edges: g.edges().to_vec(), head })
        .collect())
}

// Backtracking over edges in canonical order, smaller head first. Adding the
// arc tail -> head closes a cycle exactly when head already reaches tail.
fn acyclic_head_vectors(g: &IncompGraph) -> Vec<Vec<usize>> {
    fn reaches(succ: &[Vec<usize>], from: usize, to: usize) -> bool {
        let mut seen = vec![false; succ.len()];
        let mut stack = vec![from];
        while let Some(v) = stack.pop() {
            if v == to {
                return true;
            }
            if !std::mem::replace(&mut seen[v], true) {
                stack.extend(&succ[v]);
            }
        }
        false
    }

    fn go(
        edges: &[(usize, usize)],
        k: usize,
        succ: &mut Vec<Vec<usize>>,
        head: &mut Vec<usize>,
        out: &mut Vec<Vec<usize>>,
    ) {
        if k == edges.len() {
            out.push(head.clone());
            return;
        }
        let (a, b) = edges[k];
        for (tail, h) in [(b, a), (a, b)] {
            if reaches(succ, h, tail) {
                continue;
            }
            succ[tail].push(h);
            head.push(h);
            go(edges, k + 1, succ, head, out);
            head.pop();
            succ[tail].pop();
        }
    }

    let mut out = Vec::new();
    let mut succ = vec![Vec::new(); g.n() + 1];
    go(g.edges(), 0, &mut succ, &mut Vec::new(), &mut out);
    out
}

/// Orients every edge of `P`'s incomparability graph towards whichever
/// endpoint appears first in `word`.
pub fn phi(p: &NaturalUnitIntervalOrder, word: &[usize]) -> Result<Orientation> {
    let n = p.n();
    let mut pos = vec![usize::MAX; n + 1];
    for (i, &v) in word.iter().enumerate() {
        if v == 0 || v > n || pos[v] != usize::MAX {
            return Err(domain(format!("{word:?} is not a permutation of [{n}]")));
        }
        pos[v] = i;
    }
    if word.len() != n {
        return Err(domain(format!("{word:?} is not a permutation of [{n}]")));
    }
    let g = p.incomparability_graph();
    let head = g.edges().iter().map(|&(a, b)| if pos[a] < pos[b] { a } else { b }).collect();
    Ok(Orientation { n, edges: g.edges().to_vec(), head })
}

/// Inverse of [`phi`] on descent-free words: repeatedly emit the `P`-smallest
/// sink among the vertices not yet emitted.
pub fn psi(p: &NaturalUnitIntervalOrder, o: &Orientation) -> Result<Vec<usize>> {
    let n = p.n();
    let g = p.incomparability_graph();
    if o.n != n || o.edges != g.edges() {
        return Err(domain("orientation is not of this poset's incomparability graph"));
    }
    if !o.is_acyclic() {
        return Err(domain("psi requires an acyclic orientation"));
    }
    let arcs: Vec<(usize, usize)> = o.arcs().collect();
    let mut alive = vec![true; n + 1];
    let mut word = Vec::with_capacity(n);
    for _ in 0..n {
        let mut has_out = vec![false; n + 1];
        for &(tail, head) in &arcs {
            if alive[tail] && alive[head] {
                has_out[tail] = true;
            }
        }
        let sinks: Vec<usize> = (1..=n).filter(|&v| alive[v] && !has_out[v]).collect();
        let least = sinks
            .iter()
            .copied()
            .find(|&s| sinks.iter().all(|&t| t == s || p.less(s, t)))
            .ok_or_else(|| domain(format!("sinks {sinks:?} do not form a chain in P")))?;
        alive[least] = false;
        word.push(least);
    }
    Ok(word)
}

/// Ordered set partition `(B_1, ..., B_k)` of `[n]`; blocks are sorted.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct OrderedSetPartition {
    blocks: Vec<Vec<usize>>,
}

impl OrderedSetPartition {
    /// Validates that the blocks are nonempty, disjoint and cover `[n]`.
    pub fn new(n: usize, blocks: Vec<Vec<usize>>) -> Result<Self> {
        let mut seen = vec![false; n + 1];
        let mut blocks = blocks;
        for b in &mut blocks {
            if b.is_empty() {
                return Err(domain("ordered set partition has an empty block"));
            }
            b.sort_unstable();
            for &v in b.iter() {
                if v == 0 || v > n || std::mem::replace(&mut seen[v], true) {
                    return Err(domain(format!("{v} is repeated or outside [{n}]")));
                }
            }
        }
        if seen[1..].iter().any(|s| !s) {
            return Err(domain(format!("blocks do not cover [{n}]")));
        }
        Ok(OrderedSetPartition { blocks })
    }

    pub fn blocks(&self) -> &[Vec<usize>] {
        &self.blocks
    }

    pub fn n(&self) -> usize {
        self.blocks.iter().map(Vec::len).sum()
    }

    /// Block sizes, in block order.
    pub fn type_sizes(&self) -> Vec<usize> {
        self.blocks.iter().map(Vec::len).collect()
    }

    /// Index of the block containing each vertex (`result[v]`, with `result[0]` unused).
    pub fn block_index(&self) -> Vec<usize> {
        let mut idx = vec![usize::MAX; self.n() + 1];
        for (i, b) in self.blocks.iter().enumerate() {
            for &v in b {
                idx[v] = i;
            }
        }
        idx
    }
}

/// All ordered set partitions of `[n]` whose `i`-th block has `lambda_i` elements.
pub fn ordered_partitions(n: usize, lambda: &Partition) -> Result<Vec<OrderedSetPartition>> {
    if lambda.n() != n {
        return Err(domain(format!("{lambda} is not a partition of {n}")));
    }
    fn go(rest: &[usize], sizes: &[usize], acc: &mut Vec<Vec<usize>>, out: &mut Vec<OrderedSetPartition>) {
        let Some((&k, more)) = sizes.split_first() else {
            out.push(OrderedSetPartition { blocks: acc.clone() });
            return;
        };
        for block in rest.iter().copied().combinations(k) {
            let remaining: Vec<usize> = rest.iter().copied().filter(|v| !block.contains(v)).collect();
            acc.push(block);
            go(&remaining, more, acc, out);
            acc.pop();
        }
    }
    let all: Vec<usize> = (1..=n).collect();
    let mut out = Vec::new();
    go(&all, lambda.parts(), &mut Vec::new(), &mut out);
    Ok(out)
}

/// Pairs `a in B_i`, `b in B_j`, `i < j`, joined by an edge with `a > b`.
pub fn inv_g_blocks(pi: &OrderedSetPartition, g: &IncompGraph) -> usize {
    let blocks = pi.blocks();
    let mut count = 0;
    for (i, bi) in blocks.iter().enumerate() {
        for bj in &blocks[i + 1..] {
            for &a in bi {
                count += bj.iter().filter(|&&b| a > b && g.has_edge(a, b)).count();
            }
        }
    }
    count
}

/// Unique-sink orientations of the subgraph induced on `block`, each given as
/// `(edge index in g, head)` pairs.
fn unique_sink_orientations_on(g: &IncompGraph, block: &[usize]) -> Result<Vec<Vec<(usize, usize)>>> {
    let sub = g.induced(block)?;
    let index_of: HashMap<(usize, usize), usize> =
        g.edges().iter().enumerate().map(|(k, &e)| (e, k)).collect();
    let relabel = |v: usize| block[v - 1];
    Ok(enumerate_acyclic(&sub)?
        .into_iter()
        .filter(|o| o.sinks().len() == 1)
        .map(|o| {
            o.edges()
                .iter()
                .zip(o.heads())
                .map(|(&(a, b), &h)| (index_of[&(relabel(a), relabel(b))], relabel(h)))
                .collect()
        })
        .collect())
}

/// Orientations with a unique sink on every block and every cross-block edge
/// pointing into the earlier block.
///
/// Built as a product of per-block unique-sink orientations glued along the
/// forced cross edges; each result is checked to be acyclic.
pub fn enumerate_ao_star(g: &IncompGraph, pi: &OrderedSetPartition) -> Result<Vec<Orientation>> {
    let n = g.n();
    if pi.n() != n {
        return Err(domain(format!("ordered partition of {} used with a graph on [{n}]", pi.n())));
    }
    let where_is = pi.block_index();
    let mut head: Vec<usize> =
        g.edges().iter().map(|&(a, b)| if where_is[a] <= where_is[b] { a } else { b }).collect();
    let per_block =
        pi.blocks().iter().map(|b| unique_sink_orientations_on(g, b)).collect::<Result<Vec<_>>>()?;

    fn glue(
        per_block: &[Vec<Vec<(usize, usize)>>],
        head: &mut Vec<usize>,
        n: usize,
        edges: &[(usize, usize)],
        out: &mut Vec<Orientation>,
    ) -> Result<()> {
        let Some((choices, rest)) = per_block.split_first() else {
            let o = Orientation { n, edges: edges.to_vec(), head: head.clone() };
            if !o.is_acyclic() {
                return Err(Error::Integrity(format!("glued orientation {:?} has a cycle", o.head)));
            }
            out.push(o);
            return Ok(());
        };
        for choice in choices {
            for &(k, h) in choice {
                head[k] = h;
            }
            glue(rest, head, n, edges, out)?;
        }
        Ok(())
    }

    let mut out = Vec::new();
    glue(&per_block, &mut head, n, g.edges(), &mut out)?;
    Ok(out)
}

/// Descent-free words `D(P)`, in lexicographic order.
pub fn descent_free_words(p: &NaturalUnitIntervalOrder) -> Result<Vec<Vec<usize>>> {
    crate::limits::check_n(p.n(), "descent_free_words")?;
    let n = p.n();
    Ok((1..=n).permutations(n).filter(|w| w.windows(2).all(|x| !p.less(x[1], x[0]))).collect())
}
