//! Verdicts from multiplicity-freeness of the truncated `(ω ⊗ τ)|_{T×U}` series,
//! and the classification they are checked against.
//!
//! A triple is commutative exactly when `(ω ⊗ τ)|_{T×U}` is multiplicity free.
//! A repeated term at some finite degree is therefore a proof of
//! non-commutativity, while a clean truncation is only evidence.

use std::cmp::Reverse;
use std::fmt;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::irrep::{is_dominant, Family, IrrepLabel};
use crate::metaplectic::{routes_to, Block, CaseId, CaseSpec, CompositeLabel, Route, RouteTally, TauSpec};

/// Outcome of [`classify`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "outcome", rename_all = "kebab-case")]
pub enum Verdict {
    /// `witness` occurs `mult >= 2` times up to the truncation degree. `degree` is
    /// the degree of its second route; `routes` lists every route up to that degree.
    MultiplicityFound { witness: CompositeLabel, mult: u64, degree: u32, routes: Vec<Route> },
    /// No repetition among terms of degree at most `degree`.
    MultiplicityFreeUpTo { degree: u32 },
}

impl Verdict {
    pub fn is_multiplicity_found(&self) -> bool {
        matches!(self, Verdict::MultiplicityFound { .. })
    }

    pub fn witness(&self) -> Option<&CompositeLabel> {
        match self {
            Verdict::MultiplicityFound { witness, .. } => Some(witness),
            Verdict::MultiplicityFreeUpTo { .. } => None,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Expectation {
    Commutative,
    NotCommutative,
}

/// The part of the classification that decides a given `(case, τ)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Rule {
    /// Case I, `τ = ν_k`.
    HeisenbergSu2Only,
    /// Case I, `τ = η` with `η` a constant partition.
    HeisenbergConstantPartition,
    /// Case I, any other `τ`.
    HeisenbergOther,
    /// Cases II, III, IV.
    OnlyTrivial,
    /// Cases V, VI.
    OnlyCircle,
    /// Case VII.
    OnlyUnitary,
    /// Case VIII.
    OnlyCirclesAndUnitary,
    /// Case IX.
    StrongGelfandPair,
}

impl Rule {
    pub fn describe(self) -> &'static str {
        match self {
            Rule::HeisenbergSu2Only => "H-type group, τ a representation of SU(2)",
            Rule::HeisenbergConstantPartition => "H-type group, τ of Sp(n) with constant partition",
            Rule::HeisenbergOther => "H-type group, τ neither SU(2)-only nor a constant Sp(n) partition",
            Rule::OnlyTrivial => "only the trivial τ is commutative",
            Rule::OnlyCircle => "commutative iff τ is a character of the circle",
            Rule::OnlyUnitary => "commutative iff τ is a representation of U(k)",
            Rule::OnlyCirclesAndUnitary => "commutative iff τ lives on the circles and the U(k_j)",
            Rule::StrongGelfandPair => "Heisenberg group with U(n): strong Gelfand pair",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExpectedVerdict {
    pub outcome: Expectation,
    pub source: Rule,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Consistency {
    Consistent,
    /// Expected non-commutative, but no repetition below the truncation degree.
    Inconclusive,
    /// A repetition was found where commutativity is expected.
    Inconsistent,
}

impl fmt::Display for Consistency {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Consistency::Consistent => "CONSISTENT",
            Consistency::Inconclusive => "INCONCLUSIVE",
            Consistency::Inconsistent => "INCONSISTENT",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CrossCheck {
    pub verdict: Verdict,
    pub expected: ExpectedVerdict,
    pub consistency: Consistency,
}

/// A row of a [`sweep`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SweepRow {
    pub case: CaseId,
    pub params: CaseSpec,
    pub tau: TauSpec,
    pub verdict: Verdict,
    pub expected: ExpectedVerdict,
    pub consistency: Consistency,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub witness: Option<CompositeLabel>,
}

/// Default truncation degree: total weight size of `τ` plus 4.
pub fn deg_window(tau: &TauSpec) -> u32 {
    tau.weight_size() + 4
}

/// Scans `(ω ⊗ τ)|_{T×U}` up to degree `d` for a repeated term.
///
/// Among repeated terms the witness minimizes the degree of its second route;
/// ties go to the largest label.
pub fn classify(spec: &CaseSpec, tau: &TauSpec, d: u32) -> Result<Verdict> {
    let tally = RouteTally::compute(spec, tau, d)?;
    let best = tally
        .entries
        .iter()
        .filter_map(|(l, t)| t.second.map(|g| (g, l, t.mult)))
        .min_by_key(|&(g, l, _)| (g, Reverse(l)));
    let Some((degree, witness, mult)) = best else {
        return Ok(Verdict::MultiplicityFreeUpTo { degree: d });
    };
    let routes = routes_to(spec, tau, degree, witness)?;
    Ok(Verdict::MultiplicityFound { witness: witness.clone(), mult, degree, routes })
}

fn factor_labels<'a>(spec: &CaseSpec, tau: &'a TauSpec) -> Result<Vec<(String, &'a IrrepLabel)>> {
    let layout = spec.layout()?;
    Ok(layout.factors.iter().map(|f| f.name.clone()).zip(tau.labels()).collect())
}

/// The classification: which `(case, τ)` are commutative.
pub fn expected_verdict(spec: &CaseSpec, tau: &TauSpec) -> Result<ExpectedVerdict> {
    let factors = factor_labels(spec, tau)?;
    let trivial = |pred: &dyn Fn(&str, &IrrepLabel) -> bool| factors.iter().filter(|(n, l)| pred(n, l)).all(|(_, l)| l.is_trivial());
    let verdict = |ok: bool, source: Rule| ExpectedVerdict {
        outcome: if ok { Expectation::Commutative } else { Expectation::NotCommutative },
        source,
    };
    Ok(match spec.id() {
        CaseId::I => {
            let nu = factors[0].1;
            let eta = factors[1].1;
            if eta.is_trivial() {
                verdict(true, Rule::HeisenbergSu2Only)
            } else if nu.is_trivial() && eta.partition().is_some_and(|p| p.is_constant()) {
                verdict(true, Rule::HeisenbergConstantPartition)
            } else {
                verdict(false, Rule::HeisenbergOther)
            }
        }
        CaseId::II | CaseId::III | CaseId::IV => verdict(tau.is_trivial(), Rule::OnlyTrivial),
        CaseId::V | CaseId::VI => verdict(trivial(&|_, l| l.family() != Family::Circle), Rule::OnlyCircle),
        CaseId::VII => verdict(trivial(&|_, l| l.family() != Family::U), Rule::OnlyUnitary),
        CaseId::VIII => verdict(
            trivial(&|_, l| matches!(l.family(), Family::SU | Family::Sp)),
            Rule::OnlyCirclesAndUnitary,
        ),
        CaseId::IX => verdict(true, Rule::StrongGelfandPair),
    })
}

/// Compares [`classify`] with [`expected_verdict`].
pub fn cross_check(spec: &CaseSpec, tau: &TauSpec, d: u32) -> Result<CrossCheck> {
    let verdict = classify(spec, tau, d)?;
    let expected = expected_verdict(spec, tau)?;
    let consistency = match (expected.outcome, verdict.is_multiplicity_found()) {
        (Expectation::NotCommutative, true) | (Expectation::Commutative, false) => Consistency::Consistent,
        (Expectation::NotCommutative, false) => Consistency::Inconclusive,
        (Expectation::Commutative, true) => Consistency::Inconsistent,
    };
    Ok(CrossCheck { verdict, expected, consistency })
}

/// Labels of a `(family, rank)` group with weight size at most `bound`,
/// by size, then by weight.
pub fn labels_up_to(family: Family, rank: u32, bound: u32) -> Vec<IrrepLabel> {
    let dim = crate::irrep::torus_dim(family, rank);
    let b = bound as i32;
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(dim);
    fn go(dim: usize, b: i32, left: i32, cur: &mut Vec<i32>, out: &mut Vec<Vec<i32>>) {
        if cur.len() == dim {
            out.push(cur.clone());
            return;
        }
        for v in -b.min(left)..=b.min(left) {
            cur.push(v);
            go(dim, b, left - v.abs(), cur, out);
            cur.pop();
        }
    }
    let mut vecs = Vec::new();
    go(dim, b, b, &mut cur, &mut vecs);
    for v in vecs {
        if is_dominant(family, &v) {
            if let Ok(l) = IrrepLabel::new(family, rank, v) {
                out.push(l);
            }
        }
    }
    out.sort_by(|a, b| (a.weight_size(), a.weight()).cmp(&(b.weight_size(), b.weight())));
    out.dedup();
    out
}

/// Every `τ` whose factors all have weight size at most `bound`, graded by total size.
pub fn enumerate_taus(spec: &CaseSpec, bound: u32) -> Result<Vec<TauSpec>> {
    let layout = spec.layout()?;
    let mut acc: Vec<Vec<IrrepLabel>> = vec![Vec::new()];
    for f in &layout.factors {
        let options = labels_up_to(f.family, f.rank, bound);
        acc = acc
            .into_iter()
            .flat_map(|prefix| {
                options.iter().map(move |l| {
                    let mut v = prefix.clone();
                    v.push(l.clone());
                    v
                })
            })
            .collect();
    }
    let mut taus = acc.into_iter().map(|labels| TauSpec::new(spec, labels)).collect::<Result<Vec<_>>>()?;
    taus.sort_by(|a, b| (a.weight_size(), a).cmp(&(b.weight_size(), b)));
    Ok(taus)
}

/// Cross-checks every `τ` from [`enumerate_taus`]. Rows run in parallel and are
/// returned in enumeration order.
pub fn sweep(spec: &CaseSpec, bound: u32, d: u32) -> Result<Vec<SweepRow>> {
    let taus = enumerate_taus(spec, bound)?;
    taus.into_par_iter()
        .map(|tau| {
            let c = cross_check(spec, &tau, d)?;
            Ok(SweepRow {
                case: spec.id(),
                params: spec.clone(),
                witness: c.verdict.witness().cloned(),
                tau,
                verdict: c.verdict,
                expected: c.expected,
                consistency: c.consistency,
            })
        })
        .collect()
}

/// Small instances of every case, as swept by `verify-theorem1`.
pub fn standard_instances() -> Vec<CaseSpec> {
    vec![
        CaseSpec::I { n: 2 },
        CaseSpec::I { n: 3 },
        CaseSpec::II { k1: 1, k2: 1 },
        CaseSpec::III { n: 1 },
        CaseSpec::III { n: 2 },
        CaseSpec::IV { n: 2 },
        CaseSpec::V { n: 3 },
        CaseSpec::VI { n: 3 },
        CaseSpec::VII { k: 1, n: 0 },
        CaseSpec::VII { k: 1, n: 1 },
        CaseSpec::VII { k: 2, n: 0 },
        CaseSpec::VII { k: 2, n: 1 },
        CaseSpec::VIII { m: vec![3], blocks: vec![Block { k: 1, n: 0 }] },
        CaseSpec::IX { n: 1 },
        CaseSpec::IX { n: 2 },
    ]
}
