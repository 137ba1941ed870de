//! Degree-`n` quasisymmetric functions in the fundamental basis and symmetric
//! functions in the (z-normalized) power sum basis.
//!
//! `F_{n,S}` is the sum of `x_{i_1} ... x_{i_n}` over `i_1 <= ... <= i_n` with a
//! strict rise `i_j < i_{j+1}` forced at every `j` in `S`. A [`PVector`] stores
//! `b_lambda` for the expansion `sum_lambda z_lambda^{-1} b_lambda p_lambda`.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use crate::combinat::{
    factorial, is_alpha_unimodal, partial_sums, partitions_of, syt_with_descents, z_of, IndexSet, Partition,
};
use crate::error::{domain, Error, Result};
use crate::tpoly::{TPoly, XPoly};

/// `sum_S a_S F_{n,S}` with `TPoly` coefficients; zero coefficients are never stored.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FVector {
    n: usize,
    terms: BTreeMap<IndexSet, TPoly>,
}

impl FVector {
    pub fn zero(n: usize) -> Self {
        assert!(n >= 1, "degree must be at least 1");
        FVector { n, terms: BTreeMap::new() }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn terms(&self) -> &BTreeMap<IndexSet, TPoly> {
        &self.terms
    }

    pub fn coeff(&self, s: &IndexSet) -> TPoly {
        self.terms.get(s).cloned().unwrap_or_default()
    }

    pub fn add_term(&mut self, s: IndexSet, coef: &TPoly) -> Result<()> {
        if s.n() != self.n {
            return Err(domain(format!("subset of [{}] added to a degree {} vector", s.n() - 1, self.n)));
        }
        if coef.is_zero() {
            return Ok(());
        }
        let slot = self.terms.entry(s.clone()).or_default();
        *slot += coef;
        if slot.is_zero() {
            self.terms.remove(&s);
        }
        Ok(())
    }

    fn map_keys(&self, f: impl Fn(&IndexSet) -> IndexSet) -> FVector {
        let terms = self.terms.iter().map(|(s, c)| (f(s), c.clone())).collect();
        FVector { n: self.n, terms }
    }
}

impl Serialize for FVector {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Term<'a> {
            #[serde(rename = "S")]
            s: &'a IndexSet,
            coef: &'a TPoly,
        }
        let terms: Vec<Term> = self.terms.iter().map(|(s, coef)| Term { s, coef }).collect();
        let mut st = serializer.serialize_struct("FVector", 2)?;
        st.serialize_field("n", &self.n)?;
        st.serialize_field("terms", &terms)?;
        st.end()
    }
}

/// Power sum coefficients `b_lambda` of `sum_lambda z_lambda^{-1} b_lambda p_lambda`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PVector {
    n: usize,
    b: BTreeMap<Partition, TPoly>,
}

impl PVector {
    pub fn zero(n: usize) -> Self {
        PVector { n, b: BTreeMap::new() }
    }

    /// Builds from explicit coefficients, dropping zeros.
    pub fn from_map(n: usize, b: BTreeMap<Partition, TPoly>) -> Result<Self> {
        if let Some(bad) = b.keys().find(|l| l.n() != n) {
            return Err(domain(format!("{bad} is not a partition of {n}")));
        }
        let b = b.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        Ok(PVector { n, b })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Nonzero coefficients, largest partition first.
    pub fn coefficients(&self) -> &BTreeMap<Partition, TPoly> {
        &self.b
    }

    pub fn get(&self, lambda: &Partition) -> TPoly {
        self.b.get(lambda).cloned().unwrap_or_default()
    }

    pub fn set(&mut self, lambda: Partition, value: TPoly) {
        if value.is_zero() {
            self.b.remove(&lambda);
        } else {
            self.b.insert(lambda, value);
        }
    }
}

/// `s_lambda = sum_{Q in SYT(lambda)} F_{n, Des(Q)}`.
pub fn schur_to_f(lambda: &Partition) -> FVector {
    let mut v = FVector::zero(lambda.n());
    for (_, des) in syt_with_descents(lambda) {
        v.add_term(des, &TPoly::one()).expect("descent sets live in [n-1]");
    }
    v
}

/// `omega(F_{n,S}) = F_{n,[n-1] \ S}`.
pub fn omega_f(v: &FVector) -> FVector {
    v.map_keys(IndexSet::complement)
}

/// `rho(F_{n,S}) = F_{n,n-S}`.
pub fn rho_f(v: &FVector) -> FVector {
    v.map_keys(IndexSet::reflect)
}

/// Power sum coefficients of a symmetric function given in the F basis:
/// `b_lambda = sum_{S in U_lambda} (-1)^{|S \ S(lambda)|} a_S`.
///
/// Symmetry of `v` is not checked; see [`f_to_p_checked`].
pub fn f_to_p(v: &FVector) -> PVector {
    let mut out = PVector::zero(v.n);
    for lambda in partitions_of(v.n).expect("n >= 1") {
        let comp = lambda.as_composition();
        let sums = partial_sums(&comp);
        let mut b = TPoly::zero();
        for (s, a) in &v.terms {
            if is_alpha_unimodal(s, &comp).expect("same degree") {
                if s.count_outside(&sums) % 2 == 0 {
                    b += a;
                } else {
                    b -= a;
                }
            }
        }
        out.set(lambda, b);
    }
    out
}

/// [`f_to_p`] followed by a comparison of both expansions evaluated in `n`
/// variables. A mismatch means `v` was not symmetric.
pub fn f_to_p_checked(v: &FVector) -> Result<PVector> {
    let p = f_to_p(v);
    let lhs = eval_f(v, v.n)?;
    let mismatch = match eval_p(&p, v.n) {
        Ok(rhs) => lhs != rhs,
        Err(Error::Integrity(_)) => true,
        Err(e) => return Err(e),
    };
    if mismatch {
        return Err(Error::Verification {
            lambda: "*".into(),
            detail: "F and p expansions evaluate differently; input is not symmetric".into(),
        });
    }
    Ok(p)
}

/// Evaluates an F-expansion in `x_1..x_m`.
pub fn eval_f(v: &FVector, m: usize) -> Result<XPoly> {
    if m == 0 {
        return Err(domain("need at least one variable"));
    }
    let mut out = XPoly::zero(m);
    for (s, c) in &v.terms {
        let mut strict = vec![false; v.n];
        for &j in s.elems() {
            strict[j - 1] = true;
        }
        let mut exps = vec![0; m];
        fundamental_words(&strict, 0, 1, m, &mut exps, &mut |e| {
            out.add_term(e.to_vec(), c).expect("homogeneous of degree n");
        });
    }
    Ok(out)
}

// Visits the exponent vectors of all weakly increasing words in [m] of length
// strict.len() whose j-th step is strict when strict[j-1] holds.
fn fundamental_words(
    strict: &[bool],
    pos: usize,
    min: usize,
    m: usize,
    exps: &mut Vec<usize>,
    visit: &mut dyn FnMut(&[usize]),
) {
    if pos == strict.len() {
        visit(exps);
        return;
    }
    for i in min..=m {
        exps[i - 1] += 1;
        let next = if strict[pos] { i + 1 } else { i };
        fundamental_words(strict, pos + 1, next, m, exps, visit);
        exps[i - 1] -= 1;
    }
}

/// `p_lambda(x_1..x_m)`.
pub fn power_sum_product(lambda: &Partition, m: usize) -> XPoly {
    lambda.parts().iter().fold(XPoly::monomial(vec![0; m], TPoly::one()), |acc, &k| {
        acc.mul(&XPoly::power_sum(m, k)).expect("same variable count")
    })
}

/// Evaluates `sum_lambda z_lambda^{-1} b_lambda p_lambda` in `x_1..x_m`.
///
/// Accumulates `(n!/z_lambda) b_lambda p_lambda` over the integers and divides
/// by `n!` once at the end; a remainder is an integrity error.
pub fn eval_p(v: &PVector, m: usize) -> Result<XPoly> {
    if m == 0 {
        return Err(domain("need at least one variable"));
    }
    let nfact = factorial(v.n);
    let mut acc = XPoly::zero(m);
    for (lambda, b) in &v.b {
        let class_size: BigInt = &nfact / z_of(lambda);
        let term = power_sum_product(lambda, m).scale_by_tpoly(&b.scale(&class_size));
        acc = acc.add(&term)?;
    }
    acc.div_exact(&nfact).map_err(|e| Error::Integrity(format!("power sum evaluation is not integral: {e}")))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tpoly::Exponents;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    fn set(n: usize, e: &[usize]) -> IndexSet {
        IndexSet::new(n, e.to_vec()).unwrap()
    }

    fn fvec(n: usize, terms: &[(&[usize], &[i64])]) -> FVector {
        let mut v = FVector::zero(n);
        for (s, c) in terms {
            v.add_term(set(n, s), &TPoly::from_i64s(c)).unwrap();
        }
        v
    }

    fn xpoly(m: usize, terms: &[(Exponents, i64)]) -> XPoly {
        let mut x = XPoly::zero(m);
        for (e, c) in terms {
            x.add_term(e.clone(), &TPoly::constant(*c)).unwrap();
        }
        x
    }

    #[test]
    fn schur_examples() {
        assert_eq!(schur_to_f(&p("4")), fvec(4, &[(&[], &[1])]));
        assert_eq!(schur_to_f(&p("1,1,1")), fvec(3, &[(&[1, 2], &[1])]));
        assert_eq!(schur_to_f(&p("2,1")), fvec(3, &[(&[1], &[1]), (&[2], &[1])]));
    }

    #[test]
    fn involutions() {
        assert_eq!(omega_f(&fvec(2, &[(&[], &[1])])), fvec(2, &[(&[1], &[1])]));
        let hook = schur_to_f(&p("2,1"));
        assert_eq!(omega_f(&hook), hook);
        assert_eq!(rho_f(&fvec(3, &[(&[1], &[1])])), fvec(3, &[(&[2], &[1])]));
        for n in 1..=6 {
            for s in IndexSet::all(n) {
                let v = fvec(n, &[(s.elems(), &[1, 2])]);
                assert_eq!(omega_f(&omega_f(&v)), v);
                assert_eq!(rho_f(&rho_f(&v)), v);
                assert_eq!(omega_f(&rho_f(&v)), rho_f(&omega_f(&v)));
            }
        }
    }

    #[test]
    fn rho_fixes_schur_functions() {
        for n in 1..=5 {
            for lam in partitions_of(n).unwrap() {
                let s = schur_to_f(&lam);
                assert_eq!(rho_f(&s), s, "{lam}");
            }
        }
    }

    #[test]
    fn f_to_p_examples() {
        let h2 = f_to_p(&fvec(2, &[(&[], &[1])]));
        assert_eq!(h2.get(&p("2")), TPoly::one());
        assert_eq!(h2.get(&p("1,1")), TPoly::one());
        let e2 = f_to_p(&schur_to_f(&p("1,1")));
        assert_eq!(e2.get(&p("2")), TPoly::constant(-1));
        assert_eq!(e2.get(&p("1,1")), TPoly::one());
        for n in 1..=6 {
            let h = f_to_p(&schur_to_f(&Partition::row(n)));
            for lam in partitions_of(n).unwrap() {
                assert_eq!(h.get(&lam), TPoly::one());
            }
        }
    }

    #[test]
    fn eval_f_examples() {
        let f2 = eval_f(&fvec(2, &[(&[], &[1])]), 2).unwrap();
        assert_eq!(f2, xpoly(2, &[(vec![2, 0], 1), (vec![1, 1], 1), (vec![0, 2], 1)]));
        let f21 = eval_f(&fvec(2, &[(&[1], &[1])]), 2).unwrap();
        assert_eq!(f21, xpoly(2, &[(vec![1, 1], 1)]));
        for n in 1..=4 {
            for s in IndexSet::all(n) {
                let x = eval_f(&fvec(n, &[(s.elems(), &[1])]), 1).unwrap();
                if s.is_empty() {
                    assert_eq!(x, xpoly(1, &[(vec![n], 1)]));
                } else {
                    assert!(x.is_zero());
                }
            }
        }
    }

    #[test]
    fn eval_p_examples() {
        let mut h2 = PVector::zero(2);
        h2.set(p("2"), TPoly::one());
        h2.set(p("1,1"), TPoly::one());
        assert_eq!(eval_p(&h2, 2).unwrap(), xpoly(2, &[(vec![2, 0], 1), (vec![1, 1], 1), (vec![0, 2], 1)]));
        let mut e2 = PVector::zero(2);
        e2.set(p("2"), TPoly::constant(-1));
        e2.set(p("1,1"), TPoly::one());
        assert_eq!(eval_p(&e2, 2).unwrap(), xpoly(2, &[(vec![1, 1], 1)]));
        let mut p1n = PVector::zero(4);
        p1n.set(Partition::column(4), TPoly::constant(24));
        assert_eq!(eval_p(&p1n, 1).unwrap(), xpoly(1, &[(vec![4], 1)]));
    }

    #[test]
    fn eval_p_detects_non_integral_input() {
        let mut bad = PVector::zero(2);
        bad.set(p("2"), TPoly::one());
        assert!(matches!(eval_p(&bad, 2), Err(Error::Integrity(_))));
    }

    #[test]
    fn p_and_f_evaluations_agree_on_schur_functions() {
        for n in 1..=6 {
            for lam in partitions_of(n).unwrap() {
                let f = schur_to_f(&lam);
                assert_eq!(eval_p(&f_to_p(&f), n).unwrap(), eval_f(&f, n).unwrap(), "{lam}");
                assert!(f_to_p_checked(&f).is_ok());
            }
        }
    }

    #[test]
    fn checked_conversion_rejects_non_symmetric_input() {
        let v = fvec(3, &[(&[1], &[1])]);
        assert!(matches!(f_to_p_checked(&v), Err(Error::Verification { .. })));
    }

    #[test]
    fn evaluation_separates_schur_images() {
        for n in 1..=5 {
            let images: Vec<XPoly> =
                partitions_of(n).unwrap().iter().map(|l| eval_f(&schur_to_f(l), n).unwrap()).collect();
            for i in 0..images.len() {
                for j in i + 1..images.len() {
                    assert_ne!(images[i], images[j]);
                }
            }
        }
    }

    #[test]
    fn json_forms() {
        let v = fvec(3, &[(&[1], &[0, 1]), (&[], &[1, 2, 1])]);
        assert_eq!(
            serde_json::to_string(&v).unwrap(),
            r#"{"n":3,"terms":[{"S":[],"coef":[1,2,1]},{"S":[1],"coef":[0,1]}]}"#
        );
        let pv = f_to_p(&schur_to_f(&p("3")));
        assert_eq!(serde_json::to_string(&pv).unwrap(), r#"{"n":3,"b":{"3":[1],"2,1":[1],"1,1,1":[1]}}"#);
    }
}
