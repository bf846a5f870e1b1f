//! Per-case models of `ω` and `τ` restricted to `T × U`.
//!
//! Every case of the classification is described by a [`CaseSpec`]. Its group
//! `K` is a product of factors, each of which is either expanded into torus
//! characters (the `G` side and the circles of `U`) or kept as an irreducible
//! label of a non-abelian factor of `U` (a "slot"). A term of any series is a
//! [`CompositeLabel`]: an integer vector on all torus coordinates together with
//! one label per slot.

mod omega;
mod product;

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::irrep::{Family, IrrepLabel};

pub use omega::{omega_pieces, omega_series, OmegaPiece};
pub use product::{
    for_each_route, omega_tensor_tau, routes_to, tau_pieces, tau_restriction, Route, RouteHit, RouteTally, Tally,
    TauPiece,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum CaseId {
    I,
    II,
    III,
    IV,
    V,
    VI,
    VII,
    VIII,
    IX,
}

impl CaseId {
    pub const ALL: [CaseId; 9] =
        [CaseId::I, CaseId::II, CaseId::III, CaseId::IV, CaseId::V, CaseId::VI, CaseId::VII, CaseId::VIII, CaseId::IX];

    pub fn parse(s: &str) -> Option<CaseId> {
        CaseId::ALL.into_iter().find(|c| c.to_string().eq_ignore_ascii_case(s.trim()))
    }
}

impl fmt::Display for CaseId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

/// One `su(2)` block of case VIII: `U(k) × Sp(n)` acting on `(C^2)^k ⊕ (C^2)^n`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Block {
    pub k: u32,
    pub n: u32,
}

/// A parametrized entry of the list of Gelfand pairs.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(tag = "case")]
pub enum CaseSpec {
    I { n: u32 },
    II { k1: u32, k2: u32 },
    III { n: u32 },
    IV { n: u32 },
    V { n: u32 },
    VI { n: u32 },
    VII { k: u32, n: u32 },
    VIII { m: Vec<u32>, blocks: Vec<Block> },
    IX { n: u32 },
}

/// How a factor of `K` enters `T × U`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Role {
    /// Expanded into torus characters, written at `offset..offset + torus_dim`.
    /// `param` names the weight index in route descriptions.
    Torus { offset: usize, param: Option<String> },
    /// Kept as an irreducible label of slot `index`.
    Slot(usize),
}

/// A factor of `K`: CLI name, group, and role.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Factor {
    pub name: String,
    pub family: Family,
    pub rank: u32,
    pub role: Role,
}

/// Coordinates of `T × U` for a case: torus dimension and the groups of the slots.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Layout {
    pub torus_dim: usize,
    pub slots: Vec<(Family, u32)>,
    pub factors: Vec<Factor>,
}

impl Layout {
    fn torus(&mut self, name: impl Into<String>, family: Family, rank: u32, param: Option<&str>) -> usize {
        let offset = self.torus_dim;
        self.torus_dim += crate::irrep::torus_dim(family, rank);
        self.factors.push(Factor {
            name: name.into(),
            family,
            rank,
            role: Role::Torus { offset, param: param.map(str::to_string) },
        });
        offset
    }

    fn slot(&mut self, name: impl Into<String>, family: Family, rank: u32) -> usize {
        let index = self.slots.len();
        self.slots.push((family, rank));
        self.factors.push(Factor { name: name.into(), family, rank, role: Role::Slot(index) });
        index
    }

    /// Trivial labels for every slot.
    pub fn trivial_slots(&self) -> Vec<IrrepLabel> {
        self.slots.iter().map(|&(f, r)| IrrepLabel::trivial(f, r).expect("slot groups are valid")).collect()
    }
}

fn bad(msg: impl Into<String>) -> Error {
    Error::InvalidCase(msg.into())
}

impl CaseSpec {
    pub fn id(&self) -> CaseId {
        match self {
            CaseSpec::I { .. } => CaseId::I,
            CaseSpec::II { .. } => CaseId::II,
            CaseSpec::III { .. } => CaseId::III,
            CaseSpec::IV { .. } => CaseId::IV,
            CaseSpec::V { .. } => CaseId::V,
            CaseSpec::VI { .. } => CaseId::VI,
            CaseSpec::VII { .. } => CaseId::VII,
            CaseSpec::VIII { .. } => CaseId::VIII,
            CaseSpec::IX { .. } => CaseId::IX,
        }
    }

    /// Enforces the parameter bounds of each case.
    pub fn validate(&self) -> Result<()> {
        match self {
            CaseSpec::I { n } | CaseSpec::III { n } | CaseSpec::IX { n } if *n < 1 => {
                Err(bad(format!("case {} needs n >= 1", self.id())))
            }
            CaseSpec::II { k1, k2 } if k1 + k2 < 1 => Err(bad("case II needs k1 + k2 >= 1")),
            CaseSpec::IV { n } if *n < 2 => Err(bad("case IV needs n >= 2")),
            CaseSpec::V { n } | CaseSpec::VI { n } if *n < 3 => Err(bad(format!("case {} needs n >= 3", self.id()))),
            CaseSpec::VII { k, .. } if *k < 1 => Err(bad("case VII needs k >= 1")),
            CaseSpec::VIII { m, blocks } => {
                if m.is_empty() && blocks.is_empty() {
                    return Err(bad("case VIII needs at least one block"));
                }
                if let Some(x) = m.iter().find(|&&x| x < 3) {
                    return Err(bad(format!("case VIII needs every m_i >= 3, got {x}")));
                }
                if blocks.iter().any(|b| b.k < 1) {
                    return Err(bad("case VIII needs every k_j >= 1"));
                }
                Ok(())
            }
            _ => Ok(()),
        }
    }

    /// Factors of `K` in canonical order and the coordinates of `T × U`.
    pub fn layout(&self) -> Result<Layout> {
        self.validate()?;
        let mut l = Layout { torus_dim: 0, slots: Vec::new(), factors: Vec::new() };
        match *self {
            CaseSpec::I { n } => {
                l.torus("su2", Family::SU, 2, Some("i"));
                l.slot("sp", Family::Sp, n);
            }
            CaseSpec::II { k1, k2 } => {
                l.torus("su2a", Family::SU, 2, Some("i"));
                l.torus("su2b", Family::SU, 2, Some("j"));
                if k1 > 0 {
                    l.slot("sp1", Family::Sp, k1);
                }
                if k2 > 0 {
                    l.slot("sp2", Family::Sp, k2);
                }
            }
            CaseSpec::III { n } => {
                l.torus("sp2", Family::Sp, 2, Some("w"));
                l.slot("sp", Family::Sp, n);
            }
            CaseSpec::IV { n } => {
                l.torus("so", Family::SO, 2 * n, Some("w"));
            }
            CaseSpec::V { n } | CaseSpec::VI { n } => {
                l.torus("su", Family::SU, n, Some("w"));
                l.torus("s1", Family::Circle, 1, None);
            }
            CaseSpec::VII { k, n } => {
                l.torus("su2", Family::SU, 2, Some("i"));
                l.slot("u", Family::U, k);
                if n > 0 {
                    l.slot("sp", Family::Sp, n);
                }
            }
            CaseSpec::VIII { ref m, ref blocks } => {
                for (i, &mi) in m.iter().enumerate() {
                    l.torus(format!("su_{}", i + 1), Family::SU, mi, Some(&format!("w_{}", i + 1)));
                }
                for j in 0..blocks.len() {
                    l.torus(format!("su2_{}", j + 1), Family::SU, 2, Some(&format!("i_{}", j + 1)));
                }
                for i in 0..m.len() {
                    l.torus(format!("s1_{}", i + 1), Family::Circle, 1, None);
                }
                for (j, b) in blocks.iter().enumerate() {
                    l.slot(format!("u_{}", j + 1), Family::U, b.k);
                    if b.n > 0 {
                        l.slot(format!("sp_{}", j + 1), Family::Sp, b.n);
                    }
                }
            }
            CaseSpec::IX { n } => {
                l.slot("u", Family::U, n);
            }
        }
        Ok(l)
    }

    /// Short parameter rendering, e.g. `n=2` or `m=[3] blocks=[1:0]`.
    pub fn params_string(&self) -> String {
        match self {
            CaseSpec::I { n } | CaseSpec::III { n } | CaseSpec::IV { n } => format!("n={n}"),
            CaseSpec::V { n } | CaseSpec::VI { n } | CaseSpec::IX { n } => format!("n={n}"),
            CaseSpec::II { k1, k2 } => format!("k1={k1} k2={k2}"),
            CaseSpec::VII { k, n } => format!("k={k} n={n}"),
            CaseSpec::VIII { m, blocks } => {
                let m: Vec<String> = m.iter().map(|x| x.to_string()).collect();
                let b: Vec<String> = blocks.iter().map(|b| format!("{}:{}", b.k, b.n)).collect();
                format!("m=[{}] blocks=[{}]", m.join(","), b.join(","))
            }
        }
    }
}

impl fmt::Display for CaseSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} {}", self.id(), self.params_string())
    }
}

/// An irreducible representation of `K`: one label per factor, in layout order.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct TauSpec {
    labels: Vec<IrrepLabel>,
}

impl TauSpec {
    /// Checks the labels against the factors of `spec`.
    pub fn new(spec: &CaseSpec, labels: Vec<IrrepLabel>) -> Result<Self> {
        let layout = spec.layout()?;
        let tau = TauSpec { labels };
        tau.check(&layout)?;
        Ok(tau)
    }

    pub fn trivial(spec: &CaseSpec) -> Result<Self> {
        let layout = spec.layout()?;
        let labels = layout
            .factors
            .iter()
            .map(|f| IrrepLabel::trivial(f.family, f.rank))
            .collect::<Result<Vec<_>>>()?;
        Ok(TauSpec { labels })
    }

    /// Trivial except for the named factors.
    pub fn with(spec: &CaseSpec, assignments: &[(&str, IrrepLabel)]) -> Result<Self> {
        let layout = spec.layout()?;
        let mut tau = Self::trivial(spec)?;
        for (name, label) in assignments {
            let i = layout
                .factors
                .iter()
                .position(|f| f.name == *name)
                .ok_or_else(|| Error::TauMismatch(format!("case {} has no factor named {name}", spec.id())))?;
            tau.labels[i] = label.clone();
        }
        tau.check(&layout)?;
        Ok(tau)
    }

    pub(crate) fn check(&self, layout: &Layout) -> Result<()> {
        if self.labels.len() != layout.factors.len() {
            return Err(Error::TauMismatch(format!(
                "expected {} factors, got {}",
                layout.factors.len(),
                self.labels.len()
            )));
        }
        for (f, l) in layout.factors.iter().zip(&self.labels) {
            if l.family() != f.family || l.rank() != f.rank {
                return Err(Error::TauMismatch(format!("factor {} expects {}({}), got {l:?}", f.name, f.family, f.rank)));
            }
        }
        Ok(())
    }

    pub fn labels(&self) -> &[IrrepLabel] {
        &self.labels
    }

    pub fn is_trivial(&self) -> bool {
        self.labels.iter().all(IrrepLabel::is_trivial)
    }

    /// Sum of the weight sizes of all factors.
    pub fn weight_size(&self) -> u32 {
        self.labels.iter().map(IrrepLabel::weight_size).sum()
    }
}

impl fmt::Display for TauSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.labels.iter().map(|l| l.to_string()).collect();
        f.write_str(&parts.join(" ⊗ "))
    }
}

/// A term of a series on `T × U`: torus character and slot labels.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct CompositeLabel {
    pub torus: Vec<i32>,
    pub u: Vec<IrrepLabel>,
}

impl CompositeLabel {
    pub fn new(torus: Vec<i32>, u: Vec<IrrepLabel>) -> Self {
        Self { torus, u }
    }
}

impl fmt::Display for CompositeLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        match self.torus.len() {
            0 => {}
            1 => parts.push(format!("χ{}", self.torus[0])),
            _ => parts.push(format!("χ{}", crate::irrep::tuple(&self.torus))),
        }
        parts.extend(self.u.iter().map(|l| l.to_string()));
        match parts.len() {
            0 => f.write_str("()"),
            1 => f.write_str(&parts[0]),
            _ => write!(f, "({})", parts.join("; ")),
        }
    }
}
