//! Acceptance suite. Every criterion is an exact equality over the integers;
//! one PASS/FAIL line is printed per criterion and the process exits nonzero
//! if any criterion fails.

use std::collections::BTreeMap;
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::time::Instant;

use itertools::Itertools;
use rayon::prelude::*;

use chromaq_core::characters::{chi_mn, chi_roichman};
use chromaq_core::chromatic::{
    b_lambda_block, b_lambda_direct, b_lambda_orient, b_lambda_signed, e_expansion, omega_x_f,
    p_expansion_verified, report, unique_sink_poly, x_brute,
};
use chromaq_core::combinat::partitions_of;
use chromaq_core::order::{enumerate_nuios, inv_g, lr_p_maxima, p_descent_set};
use chromaq_core::orient::{descent_free_words, enumerate_acyclic, phi, psi};
use chromaq_core::qsym::{eval_f, f_to_p, omega_f, rho_f};
use chromaq_core::{IndexSet, NaturalUnitIntervalOrder, Partition, TPoly, XPoly};

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn posets_up_to(max_n: usize) -> Vec<NaturalUnitIntervalOrder> {
    (1..=max_n).flat_map(|n| enumerate_nuios(n).unwrap()).collect()
}

fn tp(c: &[i64]) -> TPoly {
    TPoly::from_i64s(c)
}

fn part(s: &str) -> Partition {
    s.parse().unwrap()
}

// ---------------------------------------------------------------------------
// Test-local oracles, written from the definitions and sharing no code with
// the library's enumeration routines.

/// `a <_P b` for the area vector `m`.
fn below(area: &[usize], a: usize, b: usize) -> bool {
    b > area[a - 1]
}

fn edge(area: &[usize], a: usize, b: usize) -> bool {
    a != b && !below(area, a, b) && !below(area, b, a)
}

/// `sum t^inv` over permutations whose lambda-segments have no P-descent and
/// no nontrivial left-to-right P-maximum.
fn oracle_b(area: &[usize], lambda: &[usize]) -> TPoly {
    let n = area.len();
    let mut coeffs = vec![0i64; n * n + 1];
    for w in (1..=n).permutations(n) {
        let mut start = 0;
        let mut ok = true;
        for &len in lambda {
            let seg = &w[start..start + len];
            start += len;
            let descent = seg.windows(2).any(|x| below(area, x[1], x[0]));
            let extra_max = (1..seg.len()).any(|j| seg[..j].iter().all(|&a| below(area, a, seg[j])));
            if descent || extra_max {
                ok = false;
                break;
            }
        }
        if ok {
            let inv = (0..n)
                .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
                .filter(|&(i, j)| w[i] > w[j] && edge(area, w[i], w[j]))
                .count();
            coeffs[inv] += 1;
        }
    }
    tp(&coeffs)
}

/// Coloring sum `sum_kappa t^asc x_kappa` with `m` colors.
fn oracle_coloring_sum(area: &[usize], m: usize) -> XPoly {
    let n = area.len();
    let mut out = XPoly::zero(m);
    for kappa in (0..n).map(|_| 0..m).multi_cartesian_product() {
        let proper =
            (1..=n).tuple_combinations().all(|(a, b)| !edge(area, a, b) || kappa[a - 1] != kappa[b - 1]);
        if !proper {
            continue;
        }
        let asc = (1..=n)
            .tuple_combinations()
            .filter(|&(a, b)| edge(area, a, b) && kappa[a - 1] < kappa[b - 1])
            .count();
        let mut exps = vec![0; m];
        for &c in &kappa {
            exps[c] += 1;
        }
        out.add_term(exps, &TPoly::monomial(asc)).unwrap();
    }
    out
}

// ---------------------------------------------------------------------------

fn four_route_equality() -> Outcome {
    let posets = posets_up_to(6);
    ensure(posets.len() == 196, || format!("expected 196 posets, found {}", posets.len()))?;
    let compared: usize = posets
        .par_iter()
        .map(|p| -> Result<usize, String> {
            let via_f = f_to_p(&omega_x_f(p).unwrap());
            let mut count = 0;
            for lambda in partitions_of(p.n()).unwrap() {
                let direct = b_lambda_direct(p, &lambda).unwrap();
                let routes = [
                    ("signed", b_lambda_signed(p, &lambda).unwrap()),
                    ("block", b_lambda_block(p, &lambda).unwrap()),
                    ("orient", b_lambda_orient(p, &lambda).unwrap()),
                    ("f_to_p", via_f.get(&lambda)),
                ];
                for (name, value) in routes {
                    ensure(value == direct, || {
                        format!("poset {:?} lambda {lambda}: direct {direct} vs {name} {value}", p.area())
                    })?;
                }
                count += 1;
            }
            Ok(count)
        })
        .collect::<Result<Vec<_>, _>>()?
        .into_iter()
        .sum();
    Ok(format!("{} posets, {compared} (poset, lambda) pairs, 5 routes each", posets.len()))
}

fn definition_oracle() -> Outcome {
    let posets = posets_up_to(5);
    let catalan_sum = 1 + 2 + 5 + 14 + 42;
    ensure(posets.len() == catalan_sum, || format!("found {} posets", posets.len()))?;
    posets
        .par_iter()
        .map(|p| {
            let n = p.n();
            let via_f = eval_f(&omega_f(&omega_x_f(p).unwrap()), n).unwrap();
            let brute = x_brute(p, n).unwrap();
            ensure(via_f == brute, || format!("poset {:?}: F-expansion != coloring sum", p.area()))?;
            ensure(brute == oracle_coloring_sum(p.area(), n), || {
                format!("poset {:?}: library coloring sum != test oracle", p.area())
            })
        })
        .collect::<Result<Vec<_>, _>>()?;
    Ok(format!("{} posets, m = n", posets.len()))
}

fn character_tables() -> Outcome {
    let mut entries = 0;
    for n in 1..=8 {
        let parts = partitions_of(n).unwrap();
        for lambda in &parts {
            for mu in &parts {
                let a = chi_roichman(lambda, mu).unwrap();
                let b = chi_mn(lambda, mu).unwrap();
                ensure(a == b, || format!("chi^{lambda}({mu}): roichman {a}, mn {b}"))?;
                entries += 1;
            }
        }
        if n == 8 {
            ensure(parts.len() == 22, || format!("{} partitions of 8", parts.len()))?;
        }
    }
    Ok(format!("{entries} character values, n <= 8"))
}

fn bijection_suite() -> Outcome {
    let posets = posets_up_to(6);
    let words: usize = posets
        .par_iter()
        .map(|p| -> Result<usize, String> {
            let g = p.incomparability_graph();
            let d = descent_free_words(p).unwrap();
            for w in &d {
                let o = phi(p, w).unwrap();
                ensure(&psi(p, &o).unwrap() == w, || format!("{:?}: psi(phi({w:?})) differs", p.area()))?;
                ensure(inv_g(w, &g) == o.asc(), || format!("{:?}: inv != asc at {w:?}", p.area()))?;
                let maxima: Vec<usize> = lr_p_maxima(w, p).iter().map(|&j| w[j - 1]).sorted().collect();
                ensure(maxima == o.sinks(), || format!("{:?}: maxima != sinks at {w:?}", p.area()))?;
            }
            let ao = enumerate_acyclic(&g).unwrap();
            ensure(ao.len() == d.len(), || format!("{:?}: |AO| != |D|", p.area()))?;
            for o in &ao {
                let w = psi(p, o).unwrap();
                ensure(p_descent_set(&w, p).is_empty(), || format!("{:?}: psi has a descent", p.area()))?;
                ensure(&phi(p, &w).unwrap() == o, || format!("{:?}: phi(psi(o)) differs", p.area()))?;
            }
            Ok(d.len())
        })
        .collect::<Result<Vec<_>, _>>()?
        .into_iter()
        .sum();
    Ok(format!("{} posets, {words} descent-free words", posets.len()))
}

fn unique_sink_identity() -> Outcome {
    let posets = posets_up_to(6);
    posets
        .par_iter()
        .map(|p| {
            let row = Partition::row(p.n());
            let b_n = p_expansion_verified(p).map_err(|e| e.to_string())?.get(&row);
            let sinks = unique_sink_poly(&p.incomparability_graph()).unwrap();
            let e_n = e_expansion(p).unwrap().get(&row).cloned().unwrap_or_default();
            ensure(b_n == sinks && sinks == e_n, || {
                format!("poset {:?}: b_n {b_n}, unique-sink {sinks}, e_n {e_n}", p.area())
            })
        })
        .collect::<Result<Vec<_>, _>>()?;
    Ok(format!("{} posets", posets.len()))
}

fn worked_examples() -> Outcome {
    // antichain on two elements
    let k2 = NaturalUnitIntervalOrder::antichain(2);
    let f = omega_x_f(&k2).unwrap();
    let oracle_x = oracle_coloring_sum(k2.area(), 2);
    ensure(oracle_x == XPoly::monomial(vec![1, 1], tp(&[1, 1])), || "K2 coloring oracle".into())?;
    ensure(f.terms().len() == 1 && f.coeff(&IndexSet::empty(2)) == tp(&[1, 1]), || {
        format!("K2: omega X = {f:?}")
    })?;
    ensure(eval_f(&omega_f(&f), 2).unwrap() == oracle_x, || "K2: F-expansion vs oracle".into())?;
    for lambda in partitions_of(2).unwrap() {
        let expected = oracle_b(k2.area(), lambda.parts());
        ensure(expected == tp(&[1, 1]), || format!("K2 oracle b_{lambda} = {expected}"))?;
        let got = p_expansion_verified(&k2).unwrap().get(&lambda);
        ensure(got == expected, || format!("K2 b_{lambda} = {got}"))?;
    }

    // path 1 - 2 - 3
    let path = NaturalUnitIntervalOrder::from_area(vec![2, 3, 3]).unwrap();
    let pv = p_expansion_verified(&path).unwrap();
    for (lambda, literal) in [("3", tp(&[1, 1, 1])), ("2,1", tp(&[1, 2, 1])), ("1,1,1", tp(&[1, 4, 1]))] {
        let lambda = part(lambda);
        let expected = oracle_b(path.area(), lambda.parts());
        ensure(expected == literal, || format!("path oracle b_{lambda} = {expected}"))?;
        ensure(pv.get(&lambda) == expected, || format!("path b_{lambda} = {}", pv.get(&lambda)))?;
    }

    // chains
    for n in 1..=6 {
        let chain = NaturalUnitIntervalOrder::chain(n);
        let pv = p_expansion_verified(&chain).unwrap();
        for lambda in partitions_of(n).unwrap() {
            let expected = oracle_b(chain.area(), lambda.parts());
            let literal = if lambda == Partition::column(n) {
                TPoly::constant(chromaq_core::combinat::factorial(n))
            } else {
                TPoly::zero()
            };
            ensure(expected == literal, || format!("chain {n} oracle b_{lambda} = {expected}"))?;
            ensure(pv.get(&lambda) == expected, || format!("chain {n} b_{lambda}"))?;
        }
    }
    Ok("antichain n=2, path [2,3,3], chains n <= 6".into())
}

fn symmetry_and_rho() -> Outcome {
    let swaps: usize = posets_up_to(5)
        .par_iter()
        .map(|p| -> Result<usize, String> {
            let n = p.n();
            let x = x_brute(p, n).unwrap();
            for i in 1..n {
                ensure(x.swap_vars(i - 1, i) == x, || format!("{:?}: swap x{i}, x{}", p.area(), i + 1))?;
            }
            Ok(n.saturating_sub(1))
        })
        .collect::<Result<Vec<_>, _>>()?
        .into_iter()
        .sum();
    let rho_checked = posets_up_to(6)
        .par_iter()
        .map(|p| {
            let v = omega_x_f(p).unwrap();
            ensure(rho_f(&v) == v, || format!("{:?}: rho moves omega X", p.area()))
        })
        .collect::<Result<Vec<_>, _>>()?
        .len();
    Ok(format!("{swaps} adjacent swaps (n <= 5), rho on {rho_checked} posets (n <= 6)"))
}

fn conjecture_scan() -> Outcome {
    let reports = posets_up_to(6)
        .par_iter()
        .map(|p| report(p).map_err(|e| format!("{:?}: {e}", p.area())))
        .collect::<Result<Vec<_>, _>>()?;
    let mut witnesses: BTreeMap<&str, Vec<Vec<usize>>> = BTreeMap::new();
    for r in &reports {
        let area = r.poset.area().to_vec();
        let flags = &r.flags;
        ensure(flags.b_palindromic.len() == r.pvec.coefficients().len(), || "b flags missing".into())?;
        ensure(flags.e_palindromic.len() == r.evec.len(), || "e flags missing".into())?;
        if !flags.route_agreement {
            witnesses.entry("route disagreement").or_default().push(area.clone());
        }
        if !flags.e_nonnegative {
            witnesses.entry("negative e-coefficient").or_default().push(area.clone());
        }
        if !flags.all_b_palindromic() {
            witnesses.entry("non-palindromic b").or_default().push(area.clone());
        }
        if !flags.all_e_palindromic() {
            witnesses.entry("non-palindromic e").or_default().push(area);
        }
    }
    for (what, posets) in &witnesses {
        println!("    scan witness: {what}: {posets:?}");
    }
    Ok(format!(
        "{} reports; false flags: {}",
        reports.len(),
        if witnesses.is_empty() { "none".to_string() } else { format!("{witnesses:?}") }
    ))
}

fn main() {
    let criteria: [Criterion; 8] = [
        ("four-route power-sum equality, n <= 6", four_route_equality),
        ("definition oracle vs F-expansion, n <= 5", definition_oracle),
        ("character tables, Roichman vs Murnaghan-Nakayama, n <= 8", character_tables),
        ("word/orientation bijection, n <= 6", bijection_suite),
        ("unique-sink identity b_(n) = sinks = e_(n), n <= 6", unique_sink_identity),
        ("worked micro-examples with in-test oracles", worked_examples),
        ("symmetry (n <= 5) and rho-fixedness (n <= 6)", symmetry_and_rho),
        ("conjecture scan completes with flags, n <= 6", conjecture_scan),
    ];
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = catch_unwind(AssertUnwindSafe(run)).unwrap_or_else(|e| {
            let msg = e
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| e.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_else(|| "panic".into());
            Err(format!("panicked: {msg}"))
        });
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(detail) => println!("PASS [{}] {name} ({detail}; {secs:.1}s)", i + 1),
            Err(why) => {
                failed += 1;
                println!("FAIL [{}] {name}: {why} ({secs:.1}s)", i + 1);
            }
        }
    }
    println!("acceptance: {} passed, {failed} failed", criteria.len() - failed);
    if failed > 0 {
        std::process::exit(1);
    }
}
