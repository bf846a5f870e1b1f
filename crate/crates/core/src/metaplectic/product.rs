//! `τ` restricted to `T × U`, and the product series `ω ⊗ τ`.

use std::collections::{BTreeMap, HashMap};
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::character::weight_system;
use crate::error::Result;
use crate::formal_sum::FormalSum;
use crate::irrep::IrrepLabel;
use crate::oracle::decompose_product;

use super::omega::{expand, omega_pieces, OmegaPiece};
use super::{CaseSpec, CompositeLabel, Role, TauSpec};

/// One term of `τ|_{T×U}`: a torus character (with multiplicity) and the slot labels.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TauPiece {
    pub params: Vec<(String, i32)>,
    pub torus: Vec<i32>,
    pub slots: Vec<IrrepLabel>,
    pub mult: u64,
}

/// Terms of `τ|_{T×U}`. Torus factors are listed by weight in descending order;
/// the route parameter of a factor is the index in that order (for `SU(2)` this
/// is the `i` of `χ_{k-2i}`).
pub fn tau_pieces(spec: &CaseSpec, tau: &TauSpec) -> Result<Vec<TauPiece>> {
    let layout = spec.layout()?;
    tau.check(&layout)?;
    let mut acc = vec![TauPiece {
        params: vec![],
        torus: vec![0; layout.torus_dim],
        slots: layout.trivial_slots(),
        mult: 1,
    }];
    for (factor, label) in layout.factors.iter().zip(tau.labels()) {
        match &factor.role {
            Role::Slot(i) => {
                for p in &mut acc {
                    p.slots[*i] = label.clone();
                }
            }
            Role::Torus { offset, param } => {
                let weights: Vec<(Vec<i32>, u64)> = weight_system(label)?.iter_desc().map(|(w, &m)| (w.clone(), m)).collect();
                let mut next = Vec::with_capacity(acc.len() * weights.len());
                for p in &acc {
                    for (idx, (w, m)) in weights.iter().enumerate() {
                        let mut q = p.clone();
                        for (k, v) in w.iter().enumerate() {
                            q.torus[offset + k] += v;
                        }
                        if let Some(name) = param {
                            q.params.push((name.clone(), idx as i32));
                        }
                        q.mult *= m;
                        next.push(q);
                    }
                }
                acc = next;
            }
        }
    }
    Ok(acc)
}

/// `τ` restricted to `T × U` (exact, never truncated).
pub fn tau_restriction(spec: &CaseSpec, tau: &TauSpec) -> Result<FormalSum<CompositeLabel>> {
    Ok(tau_pieces(spec, tau)?
        .into_iter()
        .map(|p| (CompositeLabel::new(p.torus, p.slots), p.mult))
        .collect())
}

/// One way of producing a term of `ω ⊗ τ`: an `ω` term, a `τ` term, and which
/// copy of the result inside their product this is.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Route {
    pub degree: u32,
    pub params: Vec<(String, i32)>,
    pub omega_term: CompositeLabel,
    pub tau_term: CompositeLabel,
    pub copy: u64,
}

impl Route {
    pub fn param(&self, name: &str) -> Option<i32> {
        self.params.iter().find(|(n, _)| n == name).map(|&(_, v)| v)
    }

    /// `name=value` pairs joined by commas.
    pub fn params_string(&self) -> String {
        let v: Vec<String> = self.params.iter().map(|(n, x)| format!("{n}={x}")).collect();
        v.join(", ")
    }
}

/// A single product term handed to [`for_each_route`] callbacks.
pub struct RouteHit<'a> {
    pub omega: &'a OmegaPiece,
    pub omega_u: &'a [IrrepLabel],
    pub tau: &'a TauPiece,
    pub label: CompositeLabel,
    pub mult: u64,
}

impl RouteHit<'_> {
    pub fn params(&self) -> Vec<(String, i32)> {
        self.omega.params.iter().chain(&self.tau.params).cloned().collect()
    }
}

type SlotCache = HashMap<(IrrepLabel, IrrepLabel), Arc<FormalSum<IrrepLabel>>>;

fn slot_product(cache: &mut SlotCache, a: &IrrepLabel, b: &IrrepLabel) -> Result<Arc<FormalSum<IrrepLabel>>> {
    if b.is_trivial() {
        return Ok(Arc::new(FormalSum::singleton(a.clone())));
    }
    let key = (a.clone(), b.clone());
    if let Some(s) = cache.get(&key) {
        return Ok(s.clone());
    }
    let s = Arc::new(decompose_product(&[a.clone(), b.clone()])?);
    cache.insert(key, s.clone());
    Ok(s)
}

/// Visits every term of `(ω ⊗ τ)|_{T×U}` with `ω`-degree at most `d`, in order of degree.
pub fn for_each_route<F>(spec: &CaseSpec, tau: &TauSpec, d: u32, mut f: F) -> Result<()>
where
    F: FnMut(RouteHit<'_>),
{
    let omega = omega_pieces(spec, d)?;
    let taus = tau_pieces(spec, tau)?;
    let mut cache = SlotCache::new();
    for piece in &omega {
        for (u, um) in expand(piece) {
            for tp in &taus {
                let torus: Vec<i32> = piece.torus.iter().zip(&tp.torus).map(|(a, b)| a + b).collect();
                let mut combos: Vec<(Vec<IrrepLabel>, u64)> = vec![(Vec::with_capacity(u.len()), um * tp.mult)];
                for (a, b) in u.iter().zip(&tp.slots) {
                    let prod = slot_product(&mut cache, a, b)?;
                    let mut next = Vec::with_capacity(combos.len() * prod.len());
                    for (labels, m) in &combos {
                        for (l, k) in prod.iter() {
                            let mut v = labels.clone();
                            v.push(l.clone());
                            next.push((v, m * k));
                        }
                    }
                    combos = next;
                }
                for (labels, m) in combos {
                    f(RouteHit {
                        omega: piece,
                        omega_u: &u,
                        tau: tp,
                        label: CompositeLabel::new(torus.clone(), labels),
                        mult: m,
                    });
                }
            }
        }
    }
    Ok(())
}

/// `(ω ⊗ τ)|_{T×U}` truncated at `ω`-degree `d`.
pub fn omega_tensor_tau(spec: &CaseSpec, tau: &TauSpec, d: u32) -> Result<FormalSum<CompositeLabel>> {
    let mut out = FormalSum::truncated(d);
    for_each_route(spec, tau, d, |hit| out.add(hit.label, hit.mult))?;
    Ok(out)
}

/// Per-label multiplicity and the degrees of its first two routes.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Tally {
    pub mult: u64,
    pub first: u32,
    pub second: Option<u32>,
}

/// [`omega_tensor_tau`] together with route degrees.
#[derive(Clone, Debug, Default)]
pub struct RouteTally {
    pub entries: BTreeMap<CompositeLabel, Tally>,
}

impl RouteTally {
    pub fn compute(spec: &CaseSpec, tau: &TauSpec, d: u32) -> Result<Self> {
        let mut entries: BTreeMap<CompositeLabel, Tally> = BTreeMap::new();
        for_each_route(spec, tau, d, |hit| {
            let g = hit.omega.degree;
            let e = entries.entry(hit.label).or_insert(Tally { mult: 0, first: g, second: None });
            if e.second.is_none() && (e.mult > 0 || hit.mult >= 2) {
                e.second = Some(g);
            }
            e.mult += hit.mult;
        })?;
        Ok(Self { entries })
    }

    pub fn to_formal_sum(&self, d: u32) -> FormalSum<CompositeLabel> {
        let mut out = FormalSum::truncated(d);
        for (l, t) in &self.entries {
            out.add(l.clone(), t.mult);
        }
        out
    }
}

/// All routes to `target` with `ω`-degree at most `d`, one per copy.
pub fn routes_to(spec: &CaseSpec, tau: &TauSpec, d: u32, target: &CompositeLabel) -> Result<Vec<Route>> {
    let mut out = Vec::new();
    for_each_route(spec, tau, d, |hit| {
        if &hit.label != target {
            return;
        }
        let omega_term = CompositeLabel::new(hit.omega.torus.clone(), hit.omega_u.to_vec());
        let tau_term = CompositeLabel::new(hit.tau.torus.clone(), hit.tau.slots.clone());
        let params = hit.params();
        for copy in 0..hit.mult {
            out.push(Route {
                degree: hit.omega.degree,
                params: params.clone(),
                omega_term: omega_term.clone(),
                tau_term: tau_term.clone(),
                copy,
            });
        }
    })?;
    Ok(out)
}
