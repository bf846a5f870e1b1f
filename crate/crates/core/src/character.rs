//! Torus characters from the Weyl character formula.
//!
//! `χ_λ = A_{λ+ρ} / A_ρ` with `A_μ = Σ_w det(w) x^{w μ}`. The Weyl groups used
//! here all act on exponent vectors by signed permutations:
//!
//! | family  | group                      | ρ                  |
//! |---------|----------------------------|--------------------|
//! | `U(k)`  | permutations               | `(k-1, ..., 1, 0)` |
//! | `Sp(n)` | all signed permutations    | `(n, ..., 2, 1)`   |
//! | `SO(2n)`| even number of sign flips  | `(n-1, ..., 1, 0)` |
//!
//! `SU(m)` characters are `U(m)` characters pushed to normalized coordinates.

use itertools::Itertools;
use num_bigint::BigInt;
use num_traits::One;

use crate::error::Result;
use crate::formal_sum::FormalSum;
use crate::irrep::{Family, IrrepLabel};
use crate::laurent::{Exponent, LaurentPoly};

/// A signed permutation `x ↦ (s_0 x_{p_0}, ..., s_{n-1} x_{p_{n-1}})` with its determinant.
#[derive(Clone, Debug)]
struct SignedPerm {
    perm: Vec<usize>,
    signs: Vec<i32>,
    det: i32,
}

impl SignedPerm {
    fn apply(&self, v: &[i32]) -> Exponent {
        self.perm.iter().zip(&self.signs).map(|(&p, &s)| s * v[p]).collect()
    }
}

fn perm_sign(p: &[usize]) -> i32 {
    let mut inversions = 0;
    for i in 0..p.len() {
        for j in i + 1..p.len() {
            if p[i] > p[j] {
                inversions += 1;
            }
        }
    }
    if inversions % 2 == 0 { 1 } else { -1 }
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Flips {
    None,
    All,
    Even,
}

fn weyl_group(n: usize, flips: Flips) -> Vec<SignedPerm> {
    let masks: Vec<u32> = match flips {
        Flips::None => vec![0],
        Flips::All => (0..1u32 << n).collect(),
        Flips::Even => (0..1u32 << n).filter(|m| m.count_ones() % 2 == 0).collect(),
    };
    let mut out = Vec::new();
    for perm in (0..n).permutations(n) {
        let ps = perm_sign(&perm);
        for &mask in &masks {
            let signs: Vec<i32> = (0..n).map(|i| if mask >> i & 1 == 1 { -1 } else { 1 }).collect();
            let det = ps * signs.iter().product::<i32>();
            out.push(SignedPerm { perm: perm.clone(), signs, det });
        }
    }
    out
}

fn alternant(group: &[SignedPerm], mu: &[i32]) -> LaurentPoly {
    let mut a = LaurentPoly::zero(mu.len());
    for w in group {
        a.add_term(w.apply(mu), &BigInt::from(w.det));
    }
    a
}

fn weyl_quotient(weight: &[i32], rho: &[i32], flips: Flips) -> Result<LaurentPoly> {
    let n = weight.len();
    let group = weyl_group(n, flips);
    let shifted: Vec<i32> = weight.iter().zip(rho).map(|(a, b)| a + b).collect();
    alternant(&group, &shifted).div_exact(&alternant(&group, rho))
}

fn unitary_character(weight: &[i32]) -> Result<LaurentPoly> {
    let k = weight.len();
    // Work with a partition and multiply back by the determinant power.
    let shift = *weight.last().unwrap_or(&0);
    let lam: Vec<i32> = weight.iter().map(|a| a - shift).collect();
    let rho: Vec<i32> = (0..k as i32).rev().collect();
    let ch = weyl_quotient(&lam, &rho, Flips::None)?;
    Ok(if shift == 0 { ch } else { ch.shift(&vec![shift; k]) })
}

/// Exact character of an irreducible representation on the standard maximal torus.
pub fn weyl_character(label: &IrrepLabel) -> Result<LaurentPoly> {
    let w = label.full_weight();
    let n = w.len();
    match label.family() {
        Family::Circle => Ok(LaurentPoly::monomial(w, BigInt::one())),
        Family::U => unitary_character(&w),
        Family::SU => {
            let mut full = w;
            full.push(0);
            let ch = unitary_character(&full)?;
            Ok(ch.map_exponents(n, |e| {
                let last = e[n];
                e[..n].iter().map(|a| a - last).collect()
            }))
        }
        Family::Sp => {
            let rho: Vec<i32> = (1..=n as i32).rev().collect();
            weyl_quotient(&w, &rho, Flips::All)
        }
        Family::SO => {
            let rho: Vec<i32> = (0..n as i32).rev().collect();
            weyl_quotient(&w, &rho, Flips::Even)
        }
    }
}

/// Restriction to the maximal torus as a multiset of integer character vectors.
pub fn weight_system(label: &IrrepLabel) -> Result<FormalSum<Vec<i32>>> {
    let ch = weyl_character(label)?;
    let mut out = FormalSum::new();
    for (e, c) in ch.terms() {
        let m = u64::try_from(c).expect("character coefficients are positive and small");
        out.add(e.clone(), m);
    }
    Ok(out)
}
