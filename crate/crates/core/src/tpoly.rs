//! Exact polynomials: `TPoly` in one variable `t` over the integers, and
//! `XPoly`, homogeneous polynomials in `x_1..x_m` with `TPoly` coefficients.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::de::{self, SeqAccess, Visitor};
use serde::ser::SerializeSeq;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{domain, Error, Result};

/// Polynomial in `t` with arbitrary-precision integer coefficients.
///
/// `coeffs[k]` is the coefficient of `t^k`; trailing zeros are always trimmed,
/// so the zero polynomial has no coefficients.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct TPoly {
    coeffs: Vec<BigInt>,
}

impl TPoly {
    pub fn zero() -> Self {
        TPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        TPoly { coeffs: vec![BigInt::one()] }
    }

    /// `t^k`.
    pub fn monomial(k: usize) -> Self {
        let mut coeffs = vec![BigInt::zero(); k + 1];
        coeffs[k] = BigInt::one();
        TPoly { coeffs }
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        TPoly::from_coeffs(vec![c.into()])
    }

    pub fn from_coeffs(coeffs: Vec<BigInt>) -> Self {
        let mut p = TPoly { coeffs };
        p.normalize();
        p
    }

    pub fn from_i64s(coeffs: &[i64]) -> Self {
        TPoly::from_coeffs(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    fn normalize(&mut self) {
        while self.coeffs.last().is_some_and(Zero::is_zero) {
            self.coeffs.pop();
        }
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree in `t`; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Coefficient of `t^k` (zero beyond the degree).
    pub fn coeff(&self, k: usize) -> BigInt {
        self.coeffs.get(k).cloned().unwrap_or_default()
    }

    /// Adds `c * t^k` in place.
    pub fn add_term(&mut self, k: usize, c: &BigInt) {
        if self.coeffs.len() <= k {
            self.coeffs.resize(k + 1, BigInt::zero());
        }
        self.coeffs[k] += c;
        self.normalize();
    }

    pub fn scale(&self, c: &BigInt) -> TPoly {
        TPoly::from_coeffs(self.coeffs.iter().map(|a| a * c).collect())
    }

    /// Divides every coefficient by `d`, failing unless each division is exact.
    pub fn div_exact(&self, d: &BigInt) -> Result<TPoly> {
        if d.is_zero() {
            return Err(Error::Integrity("division by zero".into()));
        }
        let mut out = Vec::with_capacity(self.coeffs.len());
        for c in &self.coeffs {
            let (q, r) = c.div_rem(d);
            if !r.is_zero() {
                return Err(Error::Integrity(format!("{c} is not divisible by {d}")));
            }
            out.push(q);
        }
        Ok(TPoly { coeffs: out })
    }

    pub fn eval(&self, t: &BigInt) -> BigInt {
        self.coeffs.iter().rev().fold(BigInt::zero(), |acc, c| acc * t + c)
    }

    pub fn is_nonnegative(&self) -> bool {
        self.coeffs.iter().all(|c| !c.is_negative())
    }

    /// Whether the (trimmed) coefficient list reads the same in both directions.
    pub fn is_palindromic(&self) -> Result<bool> {
        if self.is_zero() {
            return Err(domain("palindromicity of the zero polynomial is undefined"));
        }
        Ok(self.coeffs.iter().eq(self.coeffs.iter().rev()))
    }

    /// Whether `t^d p(1/t) = p(t)`, i.e. the coefficients are symmetric about `d/2`.
    pub fn is_palindromic_about(&self, d: usize) -> bool {
        if self.degree().is_some_and(|deg| deg > d) {
            return false;
        }
        (0..=d).all(|k| self.coeff(k) == self.coeff(d - k))
    }
}

impl fmt::Display for TPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, "{}", if c.is_negative() { " - " } else { " + " })?;
            } else if c.is_negative() {
                write!(f, "-")?;
            }
            first = false;
            let a = c.abs();
            match (k, a.is_one()) {
                (0, _) => write!(f, "{a}")?,
                (1, true) => write!(f, "t")?,
                (1, false) => write!(f, "{a}t")?,
                (_, true) => write!(f, "t^{k}")?,
                (_, false) => write!(f, "{a}t^{k}")?,
            }
        }
        Ok(())
    }
}

impl Add<&TPoly> for &TPoly {
    type Output = TPoly;
    fn add(self, rhs: &TPoly) -> TPoly {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Add for TPoly {
    type Output = TPoly;
    fn add(mut self, rhs: TPoly) -> TPoly {
        self += &rhs;
        self
    }
}

impl AddAssign<&TPoly> for TPoly {
    fn add_assign(&mut self, rhs: &TPoly) {
        if self.coeffs.len() < rhs.coeffs.len() {
            self.coeffs.resize(rhs.coeffs.len(), BigInt::zero());
        }
        for (a, b) in self.coeffs.iter_mut().zip(&rhs.coeffs) {
            *a += b;
        }
        self.normalize();
    }
}

impl SubAssign<&TPoly> for TPoly {
    fn sub_assign(&mut self, rhs: &TPoly) {
        if self.coeffs.len() < rhs.coeffs.len() {
            self.coeffs.resize(rhs.coeffs.len(), BigInt::zero());
        }
        for (a, b) in self.coeffs.iter_mut().zip(&rhs.coeffs) {
            *a -= b;
        }
        self.normalize();
    }
}

impl Sub<&TPoly> for &TPoly {
    type Output = TPoly;
    fn sub(self, rhs: &TPoly) -> TPoly {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl Neg for &TPoly {
    type Output = TPoly;
    fn neg(self) -> TPoly {
        TPoly { coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }
}

impl Neg for TPoly {
    type Output = TPoly;
    fn neg(self) -> TPoly {
        -&self
    }
}

impl Mul<&TPoly> for &TPoly {
    type Output = TPoly;
    fn mul(self, rhs: &TPoly) -> TPoly {
        if self.is_zero() || rhs.is_zero() {
            return TPoly::zero();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        TPoly::from_coeffs(out)
    }
}

impl Mul for TPoly {
    type Output = TPoly;
    fn mul(self, rhs: TPoly) -> TPoly {
        &self * &rhs
    }
}

impl std::iter::Sum for TPoly {
    fn sum<I: Iterator<Item = TPoly>>(iter: I) -> TPoly {
        iter.fold(TPoly::zero(), |mut acc, p| {
            acc += &p;
            acc
        })
    }
}

// JSON: ascending-degree integer array. Coefficients beyond i64 are written as
// decimal strings.
impl Serialize for TPoly {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut seq = serializer.serialize_seq(Some(self.coeffs.len()))?;
        for c in &self.coeffs {
            match c.to_i64() {
                Some(v) => seq.serialize_element(&v)?,
                None => seq.serialize_element(&c.to_string())?,
            }
        }
        seq.end()
    }
}

impl<'de> Deserialize<'de> for TPoly {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        struct CoeffVisitor;

        impl<'de> Visitor<'de> for CoeffVisitor {
            type Value = TPoly;

            fn expecting(&self, f: &mut fmt::Formatter) -> fmt::Result {
                f.write_str("an array of integers or decimal strings")
            }

            fn visit_seq<A: SeqAccess<'de>>(self, mut seq: A) -> std::result::Result<TPoly, A::Error> {
                #[derive(Deserialize)]
                #[serde(untagged)]
                enum Coeff {
                    Int(i64),
                    Text(String),
                }
                let mut coeffs = Vec::new();
                while let Some(c) = seq.next_element::<Coeff>()? {
                    coeffs.push(match c {
                        Coeff::Int(v) => BigInt::from(v),
                        Coeff::Text(s) => s.parse().map_err(de::Error::custom)?,
                    });
                }
                Ok(TPoly::from_coeffs(coeffs))
            }
        }

        deserializer.deserialize_seq(CoeffVisitor)
    }
}

/// Exponent vector of a monomial in `x_1..x_m`.
pub type Exponents = Vec<usize>;

/// Homogeneous polynomial in `x_1..x_m` with `TPoly` coefficients.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct XPoly {
    nvars: usize,
    terms: BTreeMap<Exponents, TPoly>,
}

impl XPoly {
    pub fn zero(nvars: usize) -> Self {
        XPoly { nvars, terms: BTreeMap::new() }
    }

    /// The monomial `x^exps` with coefficient `coef`.
    pub fn monomial(exps: Exponents, coef: TPoly) -> Self {
        let mut p = XPoly::zero(exps.len());
        p.add_term(exps, &coef).expect("single term is homogeneous");
        p
    }

    /// `x_1^k + ... + x_m^k`.
    pub fn power_sum(nvars: usize, k: usize) -> Self {
        let mut p = XPoly::zero(nvars);
        for i in 0..nvars {
            let mut e = vec![0; nvars];
            e[i] = k;
            p.terms.insert(e, TPoly::one());
        }
        p
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn terms(&self) -> &BTreeMap<Exponents, TPoly> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Total degree, `None` for zero.
    pub fn degree(&self) -> Option<usize> {
        self.terms.keys().next().map(|e| e.iter().sum())
    }

    pub fn coeff(&self, exps: &[usize]) -> TPoly {
        self.terms.get(exps).cloned().unwrap_or_default()
    }

    pub fn add_term(&mut self, exps: Exponents, coef: &TPoly) -> Result<()> {
        if exps.len() != self.nvars {
            return Err(domain(format!(
                "monomial in {} variables added to a polynomial in {}",
                exps.len(),
                self.nvars
            )));
        }
        if let Some(d) = self.degree() {
            let e: usize = exps.iter().sum();
            if e != d {
                return Err(domain(format!("degree {e} term added to a degree {d} polynomial")));
            }
        }
        if coef.is_zero() {
            return Ok(());
        }
        let slot = self.terms.entry(exps).or_default();
        *slot += coef;
        if slot.is_zero() {
            self.terms.retain(|_, c| !c.is_zero());
        }
        Ok(())
    }

    fn check_vars(&self, other: &XPoly) -> Result<()> {
        if self.nvars != other.nvars {
            return Err(domain(format!("mixed variable counts {} and {}", self.nvars, other.nvars)));
        }
        Ok(())
    }

    pub fn add(&self, other: &XPoly) -> Result<XPoly> {
        self.check_vars(other)?;
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), c)?;
        }
        Ok(out)
    }

    pub fn mul(&self, other: &XPoly) -> Result<XPoly> {
        self.check_vars(other)?;
        let mut out = XPoly::zero(self.nvars);
        for (ea, ca) in &self.terms {
            for (eb, cb) in &other.terms {
                let e = ea.iter().zip(eb).map(|(a, b)| a + b).collect();
                out.add_term(e, &(ca * cb))?;
            }
        }
        Ok(out)
    }

    pub fn mul_monomial(&self, exps: &[usize]) -> Result<XPoly> {
        if exps.len() != self.nvars {
            return Err(domain(format!(
                "monomial in {} variables applied to a polynomial in {}",
                exps.len(),
                self.nvars
            )));
        }
        let terms = self
            .terms
            .iter()
            .map(|(e, c)| (e.iter().zip(exps).map(|(a, b)| a + b).collect(), c.clone()))
            .collect();
        Ok(XPoly { nvars: self.nvars, terms })
    }

    pub fn scale_by_tpoly(&self, c: &TPoly) -> XPoly {
        let terms =
            self.terms.iter().map(|(e, a)| (e.clone(), a * c)).filter(|(_, a)| !a.is_zero()).collect();
        XPoly { nvars: self.nvars, terms }
    }

    pub fn div_exact(&self, d: &BigInt) -> Result<XPoly> {
        let mut terms = BTreeMap::new();
        for (e, c) in &self.terms {
            terms.insert(e.clone(), c.div_exact(d)?);
        }
        Ok(XPoly { nvars: self.nvars, terms })
    }

    /// Exchanges the variables `x_i` and `x_j` (0-based).
    pub fn swap_vars(&self, i: usize, j: usize) -> XPoly {
        let terms = self
            .terms
            .iter()
            .map(|(e, c)| {
                let mut e = e.clone();
                e.swap(i, j);
                (e, c.clone())
            })
            .collect();
        XPoly { nvars: self.nvars, terms }
    }
}

impl Serialize for XPoly {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Term<'a> {
            exp: &'a [usize],
            coef: &'a TPoly,
        }
        let mut seq = serializer.serialize_seq(Some(self.terms.len()))?;
        for (e, c) in &self.terms {
            seq.serialize_element(&Term { exp: e, coef: c })?;
        }
        seq.end()
    }
}
