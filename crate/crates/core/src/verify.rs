//! Exhaustive cross-checks over every natural unit interval order up to a size.
//!
//! Each suite returns the number of individual comparisons made and a list of
//! failures naming the poset, partition and routes involved. Posets are
//! processed in parallel; results come back in enumeration order.

use std::fmt;
use std::str::FromStr;

use itertools::Itertools;
use num_bigint::BigInt;
use num_traits::One;
use rayon::prelude::*;
use serde::Serialize;

use crate::characters::{chi_roichman, MnOracle};
use crate::chromatic::{
    b_lambda_block, b_lambda_direct, b_lambda_orient, b_lambda_signed, e_expansion, omega_x_f,
    unique_sink_poly, x_brute,
};
use crate::combinat::{partitions_of, Partition};
use crate::error::{domain, Error, Result};
use crate::order::{enumerate_nuios, inv_g, lr_p_maxima, p_descent_set, NaturalUnitIntervalOrder};
use crate::orient::{descent_free_words, enumerate_acyclic, phi, psi};
use crate::qsym::{eval_f, f_to_p, omega_f, rho_f};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Suite {
    Routes,
    Oracle,
    Symmetry,
    Bijection,
    Characters,
}

impl Suite {
    pub const ALL: [Suite; 5] =
        [Suite::Routes, Suite::Oracle, Suite::Symmetry, Suite::Bijection, Suite::Characters];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Routes => "routes",
            Suite::Oracle => "oracle",
            Suite::Symmetry => "symmetry",
            Suite::Bijection => "bijection",
            Suite::Characters => "characters",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Suite::ALL
            .into_iter()
            .find(|x| x.name() == s.trim())
            .ok_or_else(|| domain(format!("unknown suite {s:?}")))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Failure {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub poset: Option<Vec<usize>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub lambda: Option<String>,
    pub routes: String,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SuiteReport {
    pub suite: Suite,
    pub max_n: usize,
    pub checks: u64,
    pub failures: Vec<Failure>,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

#[derive(Default)]
struct Tally {
    checks: u64,
    failures: Vec<Failure>,
}

impl Tally {
    fn check(&mut self, ok: bool, failure: impl FnOnce() -> Failure) {
        self.checks += 1;
        if !ok {
            self.failures.push(failure());
        }
    }

    fn merge(mut self, other: Tally) -> Tally {
        self.checks += other.checks;
        self.failures.extend(other.failures);
        self
    }
}

fn fail(p: &NaturalUnitIntervalOrder, lambda: Option<&Partition>, routes: &str, detail: String) -> Failure {
    Failure {
        poset: Some(p.area().to_vec()),
        lambda: lambda.map(ToString::to_string),
        routes: routes.into(),
        detail,
    }
}

fn all_posets(max_n: usize) -> Result<Vec<NaturalUnitIntervalOrder>> {
    let mut out = Vec::new();
    for n in 1..=max_n {
        out.extend(enumerate_nuios(n)?);
    }
    Ok(out)
}

fn per_poset(max_n: usize, f: impl Fn(&NaturalUnitIntervalOrder) -> Result<Tally> + Sync) -> Result<Tally> {
    let tallies = all_posets(max_n)?.par_iter().map(&f).collect::<Result<Vec<Tally>>>()?;
    Ok(tallies.into_iter().fold(Tally::default(), Tally::merge))
}

/// Runs one suite over every poset on `[k]`, `1 <= k <= max_n`.
pub fn run_suite(suite: Suite, max_n: usize) -> Result<SuiteReport> {
    if max_n == 0 {
        return Err(domain("max_n must be at least 1"));
    }
    let tally = match suite {
        Suite::Routes => per_poset(max_n, check_routes)?,
        Suite::Oracle => per_poset(max_n, check_oracle)?,
        Suite::Symmetry => per_poset(max_n, check_symmetry)?,
        Suite::Bijection => per_poset(max_n, check_bijection)?,
        Suite::Characters => check_characters(max_n)?,
    };
    Ok(SuiteReport { suite, max_n, checks: tally.checks, failures: tally.failures })
}

fn check_routes(p: &NaturalUnitIntervalOrder) -> Result<Tally> {
    let mut t = Tally::default();
    let n = p.n();
    let via_f = f_to_p(&omega_x_f(p)?);
    for lambda in partitions_of(n)? {
        let direct = b_lambda_direct(p, &lambda)?;
        let others = [
            ("direct/signed", b_lambda_signed(p, &lambda)?),
            ("direct/block", b_lambda_block(p, &lambda)?),
            ("direct/orient", b_lambda_orient(p, &lambda)?),
            ("direct/f_to_p", via_f.get(&lambda)),
        ];
        for (routes, value) in others {
            t.check(value == direct, || fail(p, Some(&lambda), routes, format!("{direct} != {value}")));
        }
    }
    let top = via_f.get(&Partition::row(n));
    let sinks = unique_sink_poly(&p.incomparability_graph())?;
    t.check(top == sinks, || {
        fail(p, Some(&Partition::row(n)), "b_n/unique_sink", format!("{top} != {sinks}"))
    });
    let e_top = e_expansion(p)?.get(&Partition::row(n)).cloned().unwrap_or_default();
    t.check(e_top == sinks, || {
        fail(p, Some(&Partition::row(n)), "e_n/unique_sink", format!("{e_top} != {sinks}"))
    });
    Ok(t)
}

/// Proper colorings of `P`'s incomparability graph with `m` colors, counted by
/// backtracking.
pub fn count_proper_colorings(p: &NaturalUnitIntervalOrder, m: usize) -> u64 {
    fn go(p: &NaturalUnitIntervalOrder, m: usize, colors: &mut Vec<usize>) -> u64 {
        let v = colors.len() + 1;
        if v > p.n() {
            return 1;
        }
        let mut total = 0;
        for c in 0..m {
            if (1..v).all(|u| colors[u - 1] != c || !p.incomparable(u, v)) {
                colors.push(c);
                total += go(p, m, colors);
                colors.pop();
            }
        }
        total
    }
    go(p, m, &mut Vec::with_capacity(p.n()))
}

fn check_oracle(p: &NaturalUnitIntervalOrder) -> Result<Tally> {
    let mut t = Tally::default();
    let n = p.n();
    let brute = x_brute(p, n)?;
    let via_f = eval_f(&omega_f(&omega_x_f(p)?), n)?;
    t.check(brute == via_f, || fail(p, None, "brute/F", "coloring sum differs from F-expansion".into()));
    let at_one: BigInt = brute.terms().values().map(|c| c.eval(&BigInt::one())).sum();
    let direct = count_proper_colorings(p, n);
    t.check(at_one == BigInt::from(direct), || {
        fail(p, None, "brute/count", format!("{at_one} != {direct} proper colorings"))
    });
    Ok(t)
}

fn check_symmetry(p: &NaturalUnitIntervalOrder) -> Result<Tally> {
    let mut t = Tally::default();
    let n = p.n();
    let x = x_brute(p, n)?;
    for i in 1..n {
        t.check(x.swap_vars(i - 1, i) == x, || {
            fail(p, None, "brute/swap", format!("not invariant under x{i} <-> x{}", i + 1))
        });
    }
    let v = omega_x_f(p)?;
    t.check(rho_f(&v) == v, || fail(p, None, "rho", "rho moves the F-expansion".into()));
    Ok(t)
}

fn check_bijection(p: &NaturalUnitIntervalOrder) -> Result<Tally> {
    let mut t = Tally::default();
    let g = p.incomparability_graph();
    for w in descent_free_words(p)? {
        let o = phi(p, &w)?;
        t.check(psi(p, &o)? == w, || fail(p, None, "psi.phi", format!("word {w:?}")));
        let (inv, asc) = (inv_g(&w, &g), o.asc());
        t.check(inv == asc, || fail(p, None, "inv/asc", format!("word {w:?}: inv {inv}, asc {asc}")));
        let maxima: Vec<usize> = lr_p_maxima(&w, p).iter().map(|&j| w[j - 1]).sorted().collect();
        let sinks = o.sinks();
        t.check(maxima == sinks, || {
            fail(p, None, "maxima/sinks", format!("word {w:?}: {maxima:?} vs {sinks:?}"))
        });
    }
    for o in enumerate_acyclic(&g)? {
        let w = psi(p, &o)?;
        t.check(p_descent_set(&w, p).is_empty(), || {
            fail(p, None, "psi", format!("psi output {w:?} has a P-descent"))
        });
        t.check(phi(p, &w)? == o, || fail(p, None, "phi.psi", format!("heads {:?}", o.heads())));
    }
    Ok(t)
}

fn check_characters(max_n: usize) -> Result<Tally> {
    let per_n = (1..=max_n)
        .into_par_iter()
        .map(|n| {
            let mut t = Tally::default();
            let mut oracle = MnOracle::new();
            let parts = partitions_of(n)?;
            for lambda in &parts {
                for mu in &parts {
                    let a = chi_roichman(lambda, mu)?;
                    let b = oracle.chi(lambda, mu)?;
                    t.check(a == b, || Failure {
                        poset: None,
                        lambda: Some(lambda.to_string()),
                        routes: "roichman/mn".into(),
                        detail: format!("mu = {mu}: {a} != {b}"),
                    });
                }
            }
            Ok(t)
        })
        .collect::<Result<Vec<Tally>>>()?;
    Ok(per_n.into_iter().fold(Tally::default(), Tally::merge))
}
