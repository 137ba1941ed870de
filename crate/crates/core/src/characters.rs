//! Irreducible characters of the symmetric group.
//!
//! Two unrelated evaluations are provided: a signed count of standard Young
//! tableaux whose descent sets are unimodal for the cycle type, and the
//! classical border-strip recursion computed on beta-sets. They share no code
//! beyond the `Partition` type, so each checks the other.

use std::collections::HashMap;

use serde::Serialize;

use crate::combinat::{is_alpha_unimodal, partial_sums, partitions_of, syt_with_descents, Partition};
use crate::error::{domain, Result};
use crate::qsym::PVector;
use crate::tpoly::TPoly;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CharacterValue {
    pub lambda: Partition,
    pub mu: Partition,
    pub value: i64,
}

fn check_sizes(lambda: &Partition, mu: &Partition) -> Result<()> {
    if lambda.n() != mu.n() {
        return Err(domain(format!(
            "character chi^{lambda} evaluated at cycle type {mu} of a different size"
        )));
    }
    Ok(())
}

/// `sum (-1)^{|Des(Q) \ S(mu)|}` over `Q in SYT(lambda)` with `Des(Q)` mu-unimodal.
pub fn chi_roichman(lambda: &Partition, mu: &Partition) -> Result<i64> {
    check_sizes(lambda, mu)?;
    let comp = mu.as_composition();
    let sums = partial_sums(&comp);
    let mut value = 0;
    for (_, des) in syt_with_descents(lambda) {
        if is_alpha_unimodal(&des, &comp)? {
            value += if des.count_outside(&sums) % 2 == 0 { 1 } else { -1 };
        }
    }
    Ok(value)
}

/// Border-strip (Murnaghan–Nakayama) evaluation with a private memo table.
#[derive(Debug, Default)]
pub struct MnOracle {
    memo: HashMap<(Vec<usize>, Vec<usize>), i64>,
}

impl MnOracle {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn chi(&mut self, lambda: &Partition, mu: &Partition) -> Result<i64> {
        check_sizes(lambda, mu)?;
        Ok(self.eval(lambda.parts().to_vec(), mu.parts()))
    }

    fn eval(&mut self, shape: Vec<usize>, cycles: &[usize]) -> i64 {
        let Some((&k, rest)) = cycles.split_first() else {
            return i64::from(shape.is_empty());
        };
        let key = (shape, cycles.to_vec());
        if let Some(&v) = self.memo.get(&key) {
            return v;
        }
        let shape = &key.0;
        let len = shape.len();
        let beads: Vec<usize> = shape.iter().enumerate().map(|(i, &p)| p + len - 1 - i).collect();
        let mut total = 0;
        for (idx, &b) in beads.iter().enumerate() {
            if b < k || beads.contains(&(b - k)) {
                continue;
            }
            // a bead sliding from b to b-k removes a rim hook of size k; its
            // height is the number of beads jumped over
            let jumped = beads.iter().filter(|&&c| c > b - k && c < b).count();
            let mut moved = beads.clone();
            moved[idx] = b - k;
            moved.sort_unstable_by(|x, y| y.cmp(x));
            let smaller: Vec<usize> =
                moved.iter().enumerate().map(|(i, &c)| c - (len - 1 - i)).filter(|&p| p > 0).collect();
            let sign = if jumped % 2 == 0 { 1 } else { -1 };
            total += sign * self.eval(smaller, rest);
        }
        self.memo.insert(key, total);
        total
    }
}

/// One-off border-strip evaluation.
pub fn chi_mn(lambda: &Partition, mu: &Partition) -> Result<i64> {
    MnOracle::new().chi(lambda, mu)
}

/// `s_lambda = sum_mu z_mu^{-1} chi^lambda(mu) p_mu`.
pub fn schur_to_p(lambda: &Partition) -> PVector {
    let n = lambda.n();
    let mut out = PVector::zero(n);
    for mu in partitions_of(n).expect("n >= 1") {
        let chi = chi_roichman(lambda, &mu).expect("same size");
        out.set(mu, TPoly::constant(chi));
    }
    out
}

/// Full table for `S_n`, rows `lambda` and columns `mu` both largest first.
pub fn character_table(n: usize) -> Result<Vec<CharacterValue>> {
    let parts = partitions_of(n)?;
    let mut out = Vec::with_capacity(parts.len() * parts.len());
    for lambda in &parts {
        for mu in &parts {
            out.push(CharacterValue {
                lambda: lambda.clone(),
                mu: mu.clone(),
                value: chi_roichman(lambda, mu)?,
            });
        }
    }
    Ok(out)
}
