//! The chromatic quasisymmetric function `X_G` of the incomparability graph of
//! a natural unit interval order.
//!
//! `X_G` is computed straight from its definition as a sum over proper
//! colorings, and `omega X_G` in the fundamental basis as a sum over all
//! permutations. The power sum coefficients `b_lambda` come from four separate
//! routes:
//!
//! - [`b_lambda_direct`]: inversions summed over `N_lambda(P)`;
//! - [`b_lambda_signed`]: signed sum over permutations whose `P`-descent set is
//!   lambda-unimodal;
//! - [`b_lambda_block`]: ordered set partitions of type lambda, each block
//!   contributing its own `N`-polynomial;
//! - [`b_lambda_orient`]: ascents of acyclic orientations with a unique sink
//!   per block.
//!
//! [`p_expansion_verified`] runs all four and also converts the F-expansion.

use std::collections::{BTreeMap, HashMap};

use itertools::Itertools;
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Zero;
use serde::Serialize;

use crate::combinat::{is_alpha_unimodal, partial_sums, partitions_of, IndexSet, Partition};
use crate::error::{domain, Error, Result};
use crate::limits::{self, MAX_COLORINGS};
use crate::order::{
    inv_g, is_in_n_lambda, p_descent_set, satisfies_n_condition, IncompGraph, NaturalUnitIntervalOrder,
};
use crate::orient::{enumerate_acyclic, enumerate_ao_star, inv_g_blocks, ordered_partitions};
use crate::qsym::{eval_f, f_to_p, omega_f, FVector, PVector};
use crate::tpoly::{TPoly, XPoly};

/// Coefficients `c_lambda` of `X_G = sum_lambda c_lambda e_lambda`.
pub type EExpansion = BTreeMap<Partition, TPoly>;

fn permutations(n: usize) -> impl Iterator<Item = Vec<usize>> {
    (1..=n).permutations(n)
}

fn check_lambda(p: &NaturalUnitIntervalOrder, lambda: &Partition) -> Result<()> {
    if lambda.n() != p.n() {
        return Err(domain(format!("{lambda} is not a partition of {}", p.n())));
    }
    Ok(())
}

/// `sum_kappa t^{asc(kappa)} x_kappa` over proper colorings `kappa: [n] -> [m]`.
pub fn x_brute(p: &NaturalUnitIntervalOrder, m: usize) -> Result<XPoly> {
    if m == 0 {
        return Err(domain("need at least one color"));
    }
    let n = p.n();
    let total = (m as u128).checked_pow(n as u32).unwrap_or(u128::MAX);
    if total > MAX_COLORINGS {
        return Err(Error::Resource(format!("{m}^{n} colorings exceeds the cap of {MAX_COLORINGS}")));
    }
    let g = p.incomparability_graph();
    let mut out = XPoly::zero(m);
    let mut coloring = vec![0usize; n];
    let mut counts: HashMap<(Vec<usize>, usize), u64> = HashMap::new();
    'outer: loop {
        if g.edges().iter().all(|&(a, b)| coloring[a - 1] != coloring[b - 1]) {
            let asc = g.edges().iter().filter(|&&(a, b)| coloring[a - 1] < coloring[b - 1]).count();
            let mut exps = vec![0; m];
            for &c in &coloring {
                exps[c] += 1;
            }
            *counts.entry((exps, asc)).or_default() += 1;
        }
        for slot in coloring.iter_mut() {
            *slot += 1;
            if *slot < m {
                continue 'outer;
            }
            *slot = 0;
        }
        break;
    }
    for ((exps, asc), c) in counts {
        out.add_term(exps, &TPoly::monomial(asc).scale(&BigInt::from(c)))?;
    }
    Ok(out)
}

/// `omega X_G = sum_sigma t^{inv_G(sigma)} F_{n, n - Des_P(sigma)}`.
pub fn omega_x_f(p: &NaturalUnitIntervalOrder) -> Result<FVector> {
    let n = p.n();
    limits::check_n(n, "omega_x_f")?;
    let g = p.incomparability_graph();
    let mut tally: BTreeMap<IndexSet, Vec<u64>> = BTreeMap::new();
    for w in permutations(n) {
        let key = p_descent_set(&w, p).reflect();
        let inv = inv_g(&w, &g);
        let row = tally.entry(key).or_default();
        if row.len() <= inv {
            row.resize(inv + 1, 0);
        }
        row[inv] += 1;
    }
    let mut v = FVector::zero(n);
    for (s, counts) in tally {
        let coef = TPoly::from_coeffs(counts.into_iter().map(BigInt::from).collect());
        v.add_term(s, &coef)?;
    }
    Ok(v)
}

/// `sum_{sigma in N_lambda(P)} t^{inv_G(sigma)}`.
pub fn b_lambda_direct(p: &NaturalUnitIntervalOrder, lambda: &Partition) -> Result<TPoly> {
    check_lambda(p, lambda)?;
    limits::check_n(p.n(), "b_lambda_direct")?;
    let g = p.incomparability_graph();
    let mut counts = Vec::new();
    for w in permutations(p.n()) {
        if is_in_n_lambda(&w, lambda, p)? {
            bump(&mut counts, inv_g(&w, &g));
        }
    }
    Ok(from_counts(counts))
}

/// `sum (-1)^{|Des_P(sigma) \ S(lambda)|} t^{inv_G(sigma)}` over permutations
/// whose `P`-descent set is lambda-unimodal.
pub fn b_lambda_signed(p: &NaturalUnitIntervalOrder, lambda: &Partition) -> Result<TPoly> {
    check_lambda(p, lambda)?;
    limits::check_n(p.n(), "b_lambda_signed")?;
    let g = p.incomparability_graph();
    let comp = lambda.as_composition();
    let sums = partial_sums(&comp);
    let mut signed: Vec<i64> = Vec::new();
    for w in permutations(p.n()) {
        let des = p_descent_set(&w, p);
        if !is_alpha_unimodal(&des, &comp)? {
            continue;
        }
        let inv = inv_g(&w, &g);
        if signed.len() <= inv {
            signed.resize(inv + 1, 0);
        }
        signed[inv] += if des.count_outside(&sums).is_multiple_of(2) { 1 } else { -1 };
    }
    Ok(TPoly::from_i64s(&signed))
}

/// `sum_{pi} t^{inv_G(pi)} prod_i (sum_{sigma_i in N(B_i)} t^{inv_G(sigma_i)})`,
/// each block factor computed in the induced subposet.
pub fn b_lambda_block(p: &NaturalUnitIntervalOrder, lambda: &Partition) -> Result<TPoly> {
    check_lambda(p, lambda)?;
    limits::check_n(p.n(), "b_lambda_block")?;
    let g = p.incomparability_graph();
    let mut block_cache: HashMap<Vec<usize>, TPoly> = HashMap::new();
    let mut total = TPoly::zero();
    for pi in ordered_partitions(p.n(), lambda)? {
        let mut term = TPoly::monomial(inv_g_blocks(&pi, &g));
        for block in pi.blocks() {
            if !block_cache.contains_key(block) {
                let poly = n_polynomial(&p.restrict(block)?);
                block_cache.insert(block.clone(), poly);
            }
            term = &term * &block_cache[block];
            if term.is_zero() {
                break;
            }
        }
        total += &term;
    }
    Ok(total)
}

// sum over N(Q) of t^inv for a poset Q on [k]
fn n_polynomial(q: &NaturalUnitIntervalOrder) -> TPoly {
    let g = q.incomparability_graph();
    let mut counts = Vec::new();
    for w in permutations(q.n()) {
        if satisfies_n_condition(&w, q) {
            bump(&mut counts, inv_g(&w, &g));
        }
    }
    from_counts(counts)
}

/// `sum_{pi} sum_{o in AO*(G, pi)} t^{asc(o)}`.
pub fn b_lambda_orient(p: &NaturalUnitIntervalOrder, lambda: &Partition) -> Result<TPoly> {
    check_lambda(p, lambda)?;
    limits::check_n(p.n(), "b_lambda_orient")?;
    let g = p.incomparability_graph();
    let mut counts = Vec::new();
    for pi in ordered_partitions(p.n(), lambda)? {
        for o in enumerate_ao_star(&g, &pi)? {
            bump(&mut counts, o.asc());
        }
    }
    Ok(from_counts(counts))
}

/// `sum t^{asc(o)}` over acyclic orientations of `g` with exactly one sink.
pub fn unique_sink_poly(g: &IncompGraph) -> Result<TPoly> {
    let mut counts = Vec::new();
    for o in enumerate_acyclic(g)? {
        if o.sinks().len() == 1 {
            bump(&mut counts, o.asc());
        }
    }
    Ok(from_counts(counts))
}

fn bump(counts: &mut Vec<u64>, k: usize) {
    if counts.len() <= k {
        counts.resize(k + 1, 0);
    }
    counts[k] += 1;
}

fn from_counts(counts: Vec<u64>) -> TPoly {
    TPoly::from_coeffs(counts.into_iter().map(BigInt::from).collect())
}

/// Which power-sum routes [`p_expansion`] evaluates.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum Routes {
    /// All four routes plus the F-basis conversion, compared exactly.
    #[default]
    All,
    /// Only the `N_lambda(P)` sum.
    DirectOnly,
}

/// Power sum expansion of `omega X_G`.
pub fn p_expansion(p: &NaturalUnitIntervalOrder, routes: Routes) -> Result<PVector> {
    limits::check_report_n(p.n(), "p_expansion")?;
    let n = p.n();
    let via_f = match routes {
        Routes::All => Some(f_to_p(&omega_x_f(p)?)),
        Routes::DirectOnly => None,
    };
    let mut out = PVector::zero(n);
    for lambda in partitions_of(n)? {
        let direct = b_lambda_direct(p, &lambda)?;
        if routes == Routes::All {
            let others = [
                ("signed", b_lambda_signed(p, &lambda)?),
                ("block", b_lambda_block(p, &lambda)?),
                ("orient", b_lambda_orient(p, &lambda)?),
                ("f_to_p", via_f.as_ref().map(|v| v.get(&lambda)).unwrap_or_default()),
            ];
            for (name, value) in others {
                if value != direct {
                    return Err(Error::Verification {
                        lambda: lambda.to_string(),
                        detail: format!(
                            "poset {:?}: direct route gives {direct}, {name} route gives {value}",
                            p.area()
                        ),
                    });
                }
            }
        }
        out.set(lambda, direct);
    }
    Ok(out)
}

/// [`p_expansion`] with every route cross-checked.
pub fn p_expansion_verified(p: &NaturalUnitIntervalOrder) -> Result<PVector> {
    p_expansion(p, Routes::All)
}

/// `e_k(x_1..x_m)`.
fn elementary(m: usize, k: usize) -> XPoly {
    let mut out = XPoly::zero(m);
    for subset in (0..m).combinations(k) {
        let mut e = vec![0; m];
        for i in subset {
            e[i] = 1;
        }
        out.add_term(e, &TPoly::one()).expect("degree k");
    }
    out
}

fn elementary_product(lambda: &Partition, m: usize) -> XPoly {
    lambda.parts().iter().fold(XPoly::monomial(vec![0; m], TPoly::one()), |acc, &k| {
        acc.mul(&elementary(m, k)).expect("same variable count")
    })
}

fn padded(lambda: &Partition, m: usize) -> Vec<usize> {
    let mut e = lambda.parts().to_vec();
    e.resize(m, 0);
    e
}

/// `X_G` in the elementary basis, solved exactly from its evaluation in `n`
/// variables.
///
/// The system pairs each `e_lambda` with the monomial `x^mu` for every
/// `mu |- n`; elimination is fraction-free and every division is checked.
pub fn e_expansion(p: &NaturalUnitIntervalOrder) -> Result<EExpansion> {
    let n = p.n();
    limits::check_report_n(n, "e_expansion")?;
    let x = eval_f(&omega_f(&omega_x_f(p)?), n)?;
    let parts = partitions_of(n)?;
    let e_polys: Vec<XPoly> = parts.iter().map(|l| elementary_product(l, n)).collect();
    let matrix: Vec<Vec<BigInt>> = parts
        .iter()
        .map(|mu| {
            let exps = padded(mu, n);
            e_polys.iter().map(|e| e.coeff(&exps).coeff(0)).collect()
        })
        .collect();
    let rhs: Vec<TPoly> = parts.iter().map(|mu| x.coeff(&padded(mu, n))).collect();
    let solution = solve_fraction_free(matrix, rhs)?;

    let mut rebuilt = XPoly::zero(n);
    for (e, c) in e_polys.iter().zip(&solution) {
        rebuilt = rebuilt.add(&e.scale_by_tpoly(c))?;
    }
    if rebuilt != x {
        return Err(Error::Integrity(
            "elementary expansion does not reproduce X_G; input is not symmetric".into(),
        ));
    }
    Ok(parts.into_iter().zip(solution).filter(|(_, c)| !c.is_zero()).collect())
}

fn div_exact(a: &BigInt, d: &BigInt) -> Result<BigInt> {
    let (q, r) = a.div_rem(d);
    if !r.is_zero() {
        return Err(Error::Integrity(format!("{a} is not divisible by {d}")));
    }
    Ok(q)
}

/// Solves `A c = r` over the integers with `TPoly` right-hand sides (Bareiss).
fn solve_fraction_free(mut a: Vec<Vec<BigInt>>, mut r: Vec<TPoly>) -> Result<Vec<TPoly>> {
    let size = a.len();
    let mut prev = BigInt::from(1);
    for k in 0..size {
        let pivot = (k..size)
            .find(|&i| !a[i][k].is_zero())
            .ok_or_else(|| Error::Integrity(format!("singular system at column {k}")))?;
        a.swap(k, pivot);
        r.swap(k, pivot);
        for i in k + 1..size {
            let factor = a[i][k].clone();
            for j in k + 1..size {
                let v = &a[k][k] * &a[i][j] - &factor * &a[k][j];
                a[i][j] = div_exact(&v, &prev)?;
            }
            let v = &r[i].scale(&a[k][k]) - &r[k].scale(&factor);
            r[i] = v.div_exact(&prev)?;
            a[i][k] = BigInt::zero();
        }
        prev = a[k][k].clone();
    }
    let mut x = vec![TPoly::zero(); size];
    for i in (0..size).rev() {
        let mut acc = r[i].clone();
        for j in i + 1..size {
            acc -= &x[j].scale(&a[i][j]);
        }
        x[i] = acc
            .div_exact(&a[i][i])
            .map_err(|_| Error::Integrity(format!("non-integral solution in row {i}")))?;
    }
    Ok(x)
}

/// Conjecture-scan flags attached to a report. None of these are asserted.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ReportFlags {
    /// All four power-sum routes and the F-basis conversion agree.
    pub route_agreement: bool,
    /// Every e-coefficient has nonnegative coefficients in `t`.
    pub e_nonnegative: bool,
    /// Each nonzero `b_lambda` is palindromic about `|E|/2`.
    pub b_palindromic: BTreeMap<Partition, bool>,
    /// Each nonzero e-coefficient is palindromic about `|E|/2`.
    pub e_palindromic: BTreeMap<Partition, bool>,
}

impl ReportFlags {
    pub fn all_b_palindromic(&self) -> bool {
        self.b_palindromic.values().all(|&f| f)
    }

    pub fn all_e_palindromic(&self) -> bool {
        self.e_palindromic.values().all(|&f| f)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ChromaticReport {
    pub poset: NaturalUnitIntervalOrder,
    pub edges: usize,
    /// `omega X_G` in the F basis.
    pub fvec: FVector,
    pub pvec: PVector,
    pub evec: EExpansion,
    pub flags: ReportFlags,
    /// Route disagreement message, when there is one.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub mismatch: Option<String>,
}

/// Every expansion of `omega X_G` / `X_G` together with the scan flags.
pub fn report(p: &NaturalUnitIntervalOrder) -> Result<ChromaticReport> {
    limits::check_report_n(p.n(), "report")?;
    let edges = p.incomparability_graph().edges().len();
    let fvec = omega_x_f(p)?;
    let (pvec, route_agreement, mismatch) = match p_expansion_verified(p) {
        Ok(v) => (v, true, None),
        Err(e @ Error::Verification { .. }) => {
            (p_expansion(p, Routes::DirectOnly)?, false, Some(e.to_string()))
        }
        Err(e) => return Err(e),
    };
    let evec = e_expansion(p)?;
    let flags = ReportFlags {
        route_agreement,
        e_nonnegative: evec.values().all(TPoly::is_nonnegative),
        b_palindromic: pvec
            .coefficients()
            .iter()
            .map(|(l, b)| (l.clone(), b.is_palindromic_about(edges)))
            .collect(),
        e_palindromic: evec.iter().map(|(l, c)| (l.clone(), c.is_palindromic_about(edges))).collect(),
    };
    Ok(ChromaticReport { poset: p.clone(), edges, fvec, pvec, evec, flags, mismatch })
}
