//! Sparse multivariate Laurent polynomials with exact integer coefficients.
//!
//! Terms are kept in a `BTreeMap` keyed by exponent vector, so the
//! lexicographically largest monomial is always the last entry. Lex order on
//! `Z^v` is a group order, which is what makes leading-term division exact.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

pub type Exponent = Vec<i32>;

#[derive(Clone, PartialEq, Eq, Default)]
pub struct LaurentPoly {
    nvars: usize,
    terms: BTreeMap<Exponent, BigInt>,
}

impl LaurentPoly {
    pub fn zero(nvars: usize) -> Self {
        Self { nvars, terms: BTreeMap::new() }
    }

    pub fn one(nvars: usize) -> Self {
        Self::monomial(vec![0; nvars], BigInt::one())
    }

    pub fn monomial(exp: Exponent, coeff: BigInt) -> Self {
        let nvars = exp.len();
        let mut terms = BTreeMap::new();
        if !coeff.is_zero() {
            terms.insert(exp, coeff);
        }
        Self { nvars, terms }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coeff(&self, exp: &[i32]) -> BigInt {
        self.terms.get(exp).cloned().unwrap_or_default()
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Exponent, &BigInt)> {
        self.terms.iter()
    }

    /// Lex-largest term.
    pub fn leading_term(&self) -> Option<(&Exponent, &BigInt)> {
        self.terms.last_key_value()
    }

    /// Sum of coefficients: the value at the identity of the torus.
    pub fn eval_at_one(&self) -> BigInt {
        self.terms.values().sum()
    }

    /// Adds `coeff * x^exp`, dropping the term if it cancels.
    pub fn add_term(&mut self, exp: Exponent, coeff: &BigInt) {
        debug_assert_eq!(exp.len(), self.nvars);
        if coeff.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(exp) {
            Entry::Vacant(v) => {
                v.insert(coeff.clone());
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += coeff;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    /// `self += factor * other * x^shift`.
    pub fn add_scaled_shifted(&mut self, other: &LaurentPoly, factor: &BigInt, shift: &[i32]) {
        for (e, c) in &other.terms {
            let exp: Exponent = e.iter().zip(shift).map(|(a, b)| a + b).collect();
            self.add_term(exp, &(c * factor));
        }
    }

    pub fn scale(&self, factor: &BigInt) -> LaurentPoly {
        if factor.is_zero() {
            return LaurentPoly::zero(self.nvars);
        }
        LaurentPoly {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(e, c)| (e.clone(), c * factor)).collect(),
        }
    }

    /// Multiplication by the monomial `x^shift`.
    pub fn shift(&self, shift: &[i32]) -> LaurentPoly {
        LaurentPoly {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .map(|(e, c)| (e.iter().zip(shift).map(|(a, b)| a + b).collect(), c.clone()))
                .collect(),
        }
    }

    /// Applies a linear change of exponent coordinates; terms that collide are summed.
    pub fn map_exponents<F>(&self, nvars: usize, f: F) -> LaurentPoly
    where
        F: Fn(&[i32]) -> Exponent,
    {
        let mut out = LaurentPoly::zero(nvars);
        for (e, c) in &self.terms {
            out.add_term(f(e), c);
        }
        out
    }

    /// Keeps only the terms whose exponent satisfies `keep`.
    pub fn filter<F>(&self, keep: F) -> LaurentPoly
    where
        F: Fn(&[i32]) -> bool,
    {
        LaurentPoly {
            nvars: self.nvars,
            terms: self.terms.iter().filter(|(e, _)| keep(e)).map(|(e, c)| (e.clone(), c.clone())).collect(),
        }
    }

    /// Exact division. Fails with [`Error::InexactDivision`] if `divisor` does not divide `self`.
    pub fn div_exact(&self, divisor: &LaurentPoly) -> Result<LaurentPoly> {
        if self.is_zero() {
            return Ok(LaurentPoly::zero(self.nvars));
        }
        let (dlead, dcoeff) = divisor.leading_term().ok_or(Error::InexactDivision)?;
        let dlead = dlead.clone();
        let dcoeff = dcoeff.clone();
        // Newton polytopes add under multiplication, so every quotient exponent
        // lies in the box [min(self) - min(divisor), max(self) - max(divisor)].
        // The box is finite and leading exponents strictly decrease, so this terminates.
        let (slo, shi) = self.bounding_box();
        let (dlo, dhi) = divisor.bounding_box();
        let lo: Vec<i32> = slo.iter().zip(&dlo).map(|(a, b)| a - b).collect();
        let hi: Vec<i32> = shi.iter().zip(&dhi).map(|(a, b)| a - b).collect();
        let mut rem = self.clone();
        let mut quot = LaurentPoly::zero(self.nvars);
        while let Some((lead, c)) = rem.leading_term() {
            if !(c % &dcoeff).is_zero() {
                return Err(Error::InexactDivision);
            }
            let qc = c / &dcoeff;
            let qe: Exponent = lead.iter().zip(&dlead).map(|(a, b)| a - b).collect();
            if qe.iter().zip(lo.iter().zip(&hi)).any(|(q, (l, h))| q < l || q > h) {
                return Err(Error::InexactDivision);
            }
            rem.add_scaled_shifted(divisor, &(-&qc), &qe);
            quot.add_term(qe, &qc);
        }
        Ok(quot)
    }

    /// Coordinatewise minimum and maximum exponent (zeros for the zero polynomial).
    fn bounding_box(&self) -> (Vec<i32>, Vec<i32>) {
        let mut lo = vec![i32::MAX; self.nvars];
        let mut hi = vec![i32::MIN; self.nvars];
        for e in self.terms.keys() {
            for (i, &a) in e.iter().enumerate() {
                lo[i] = lo[i].min(a);
                hi[i] = hi[i].max(a);
            }
        }
        if self.terms.is_empty() {
            return (vec![0; self.nvars], vec![0; self.nvars]);
        }
        (lo, hi)
    }

    /// True when every coefficient is nonnegative.
    pub fn is_nonnegative(&self) -> bool {
        self.terms.values().all(|c| !c.is_negative())
    }
}

impl<'a> Add<&'a LaurentPoly> for &'a LaurentPoly {
    type Output = LaurentPoly;

    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(e.clone(), c);
        }
        out
    }
}

impl<'a> Sub<&'a LaurentPoly> for &'a LaurentPoly {
    type Output = LaurentPoly;

    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(e.clone(), &(-c));
        }
        out
    }
}

impl<'a> Mul<&'a LaurentPoly> for &'a LaurentPoly {
    type Output = LaurentPoly;

    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        assert_eq!(self.nvars, rhs.nvars, "variable count mismatch");
        let mut acc: std::collections::HashMap<Exponent, BigInt> =
            std::collections::HashMap::with_capacity(self.terms.len() * 2);
        for (e1, c1) in &self.terms {
            for (e2, c2) in &rhs.terms {
                let e: Exponent = e1.iter().zip(e2).map(|(a, b)| a + b).collect();
                *acc.entry(e).or_default() += c1 * c2;
            }
        }
        LaurentPoly {
            nvars: self.nvars,
            terms: acc.into_iter().filter(|(_, c)| !c.is_zero()).collect(),
        }
    }
}

impl fmt::Debug for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (e, c)) in self.terms.iter().rev().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            write!(f, "{c}*x^{e:?}")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn mono(e: &[i32], c: i64) -> LaurentPoly {
        LaurentPoly::monomial(e.to_vec(), BigInt::from(c))
    }

    #[test]
    fn arithmetic_cancels_exactly() {
        let a = &mono(&[1, 0], 1) + &mono(&[-1, 0], 1);
        let b = &mono(&[1, 0], 1) - &mono(&[-1, 0], 1);
        let prod = &a * &b;
        assert_eq!(prod, &mono(&[2, 0], 1) - &mono(&[-2, 0], 1));
        assert!((&prod - &prod).is_zero());
    }

    #[test]
    fn exact_division_roundtrip() {
        let a = &(&mono(&[2, 1], 3) + &mono(&[0, -1], -2)) + &mono(&[-1, 4], 5);
        let b = &mono(&[1, 0], 1) - &mono(&[0, 1], 1);
        let prod = &a * &b;
        assert_eq!(prod.div_exact(&b).unwrap(), a);
    }

    #[test]
    fn inexact_division_is_reported() {
        let a = &mono(&[2], 1) + &mono(&[0], 1);
        let b = &mono(&[1], 1) - &mono(&[0], 1);
        assert_eq!(a.div_exact(&b), Err(Error::InexactDivision));
    }

    #[test]
    fn value_at_identity() {
        let a = &mono(&[1], 2) + &mono(&[-3], 5);
        assert_eq!(a.eval_at_one(), BigInt::from(7));
    }
}
