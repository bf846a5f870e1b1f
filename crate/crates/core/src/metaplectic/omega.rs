//! Degree-truncated decompositions of the metaplectic representation.
//!
//! Each case is assembled from a few building blocks, one per summand of `V`
//! (or per independent grading parameter):
//!
//! | block          | series                                    | used in      |
//! |----------------|-------------------------------------------|--------------|
//! | `Line`         | `⊕_l χ_l` on one coordinate               | II, IV       |
//! | `Quaternionic` | `⊕_j χ_j ⊗ η_(j)`                          | I, II, VII   |
//! | `SymPair`      | `⊕_{r,s} χ_(r,s) ⊗ (η_(r) ⊗ η_(s))`        | III          |
//! | `UnitaryTorus` | monomials of `C^m` under `T^{m-1} × S^1`  | V, VI, VIII  |
//! | `DoubleU`      | `⊕_{r,s} χ_{r-s} ⊗ (υ_(r) ⊗ υ_(s))`        | VII, VIII    |
//! | `Heisenberg`   | `⊕_r υ_(r)`                               | IX           |

use std::sync::Arc;

use crate::error::Result;
use crate::formal_sum::FormalSum;
use crate::irrep::IrrepLabel;
use crate::oracle::decompose_product;
use crate::pieri::tensor_sym_sym;

use super::{CaseSpec, CompositeLabel, Layout};

/// One graded piece of `ω`: torus character and, per slot, a (small) decomposition.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OmegaPiece {
    pub degree: u32,
    pub params: Vec<(String, i32)>,
    pub torus: Vec<i32>,
    pub slots: Vec<Arc<FormalSum<IrrepLabel>>>,
}

#[derive(Clone)]
struct Partial {
    degree: u32,
    params: Vec<(String, i32)>,
    torus: Vec<(usize, i32)>,
    slots: Vec<(usize, Arc<FormalSum<IrrepLabel>>)>,
}

enum Block {
    Line { coord: usize, param: String },
    Quaternionic { coord: usize, slot: Option<(usize, u32)>, param: String },
    SymPair { coords: (usize, usize), slot: usize, n: u32 },
    UnitaryTorus { offset: usize, m: usize, circle: usize, prefix: String, suffix: String },
    DoubleU { coord: usize, slot: usize, k: u32, suffix: String },
    Heisenberg { slot: usize, n: u32 },
}

fn row_label(n: u32, d: u32) -> IrrepLabel {
    IrrepLabel::sp(n, &[d as i32]).expect("a row fits in Sp(n), n >= 1")
}

fn u_row(k: u32, d: u32) -> IrrepLabel {
    let mut w = vec![0; k as usize];
    w[0] = d as i32;
    IrrepLabel::u(k, &w).expect("a row is a U(k) weight")
}

/// All vectors of `len` nonnegative integers with sum at most `budget`, graded by sum.
fn compositions(len: usize, budget: u32) -> Vec<Vec<u32>> {
    fn go(len: usize, left: u32, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if cur.len() == len {
            if left == 0 {
                out.push(cur.clone());
            }
            return;
        }
        for v in (0..=left).rev() {
            cur.push(v);
            go(len, left - v, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    for total in 0..=budget {
        go(len, total, &mut Vec::with_capacity(len), &mut out);
    }
    out
}

impl Block {
    fn pieces(&self, budget: u32) -> Result<Vec<Partial>> {
        let mut out = Vec::new();
        match self {
            Block::Line { coord, param } => {
                for d in 0..=budget {
                    out.push(Partial {
                        degree: d,
                        params: vec![(param.clone(), d as i32)],
                        torus: vec![(*coord, d as i32)],
                        slots: vec![],
                    });
                }
            }
            Block::Quaternionic { coord, slot, param } => {
                let top = if slot.is_some() { budget } else { 0 };
                for d in 0..=top {
                    out.push(Partial {
                        degree: d,
                        params: vec![(param.clone(), d as i32)],
                        torus: vec![(*coord, d as i32)],
                        slots: slot
                            .iter()
                            .map(|&(i, n)| (i, Arc::new(FormalSum::singleton(row_label(n, d)))))
                            .collect(),
                    });
                }
            }
            Block::SymPair { coords, slot, n } => {
                for c in compositions(2, budget) {
                    let (r, s) = (c[0], c[1]);
                    let sum = tensor_sym_sym(r, s, *n)?.terms;
                    let sum = sum.map(|p| IrrepLabel::sp_partition(*n, p).expect("rule output fits Sp(n)"));
                    out.push(Partial {
                        degree: r + s,
                        params: vec![("r".into(), r as i32), ("s".into(), s as i32)],
                        torus: vec![(coords.0, r as i32), (coords.1, s as i32)],
                        slots: vec![(*slot, Arc::new(sum))],
                    });
                }
            }
            Block::UnitaryTorus { offset, m, circle, prefix, suffix } => {
                for c in compositions(*m, budget) {
                    let last = c[m - 1] as i32;
                    let mut torus: Vec<(usize, i32)> =
                        (0..m - 1).map(|i| (offset + i, c[i] as i32 - last)).collect();
                    let total: u32 = c.iter().sum();
                    torus.push((*circle, total as i32));
                    out.push(Partial {
                        degree: total,
                        params: c.iter().enumerate().map(|(i, &v)| (format!("{prefix}{}{suffix}", i + 1), v as i32)).collect(),
                        torus,
                        slots: vec![],
                    });
                }
            }
            Block::DoubleU { coord, slot, k, suffix } => {
                for c in compositions(2, budget) {
                    let (r, s) = (c[0], c[1]);
                    let sum = decompose_product(&[u_row(*k, r), u_row(*k, s)])?;
                    out.push(Partial {
                        degree: r + s,
                        params: vec![(format!("r{suffix}"), r as i32), (format!("s{suffix}"), s as i32)],
                        torus: vec![(*coord, r as i32 - s as i32)],
                        slots: vec![(*slot, Arc::new(sum))],
                    });
                }
            }
            Block::Heisenberg { slot, n } => {
                for d in 0..=budget {
                    out.push(Partial {
                        degree: d,
                        params: vec![("r".into(), d as i32)],
                        torus: vec![],
                        slots: vec![(*slot, Arc::new(FormalSum::singleton(u_row(*n, d))))],
                    });
                }
            }
        }
        Ok(out)
    }
}

fn slot_index(layout: &Layout, name: &str) -> Option<usize> {
    layout.factors.iter().find(|f| f.name == name).and_then(|f| match f.role {
        super::Role::Slot(i) => Some(i),
        _ => None,
    })
}

fn torus_offset(layout: &Layout, name: &str) -> usize {
    layout
        .factors
        .iter()
        .find_map(|f| match (&f.role, f.name == name) {
            (super::Role::Torus { offset, .. }, true) => Some(*offset),
            _ => None,
        })
        .expect("layout has the named torus factor")
}

fn blocks(spec: &CaseSpec, layout: &Layout) -> Vec<Block> {
    let q = |coord, slot: Option<usize>, n: u32, param: &str| Block::Quaternionic {
        coord,
        slot: slot.map(|i| (i, n)),
        param: param.to_string(),
    };
    match spec {
        CaseSpec::I { n } => vec![q(0, Some(0), *n, "s")],
        CaseSpec::II { k1, k2 } => vec![
            q(0, slot_index(layout, "sp1"), *k1, "r"),
            q(1, slot_index(layout, "sp2"), *k2, "s"),
            Block::Line { coord: 0, param: "l1".into() },
            Block::Line { coord: 1, param: "l2".into() },
        ],
        CaseSpec::III { n } => vec![Block::SymPair { coords: (0, 1), slot: 0, n: *n }],
        CaseSpec::IV { n } => (0..*n as usize).map(|i| Block::Line { coord: i, param: format!("k{}", i + 1) }).collect(),
        CaseSpec::V { n } | CaseSpec::VI { n } => vec![Block::UnitaryTorus {
            offset: 0,
            m: *n as usize,
            circle: *n as usize - 1,
            prefix: "m".into(),
            suffix: String::new(),
        }],
        CaseSpec::VII { k, n } => vec![
            Block::DoubleU { coord: 0, slot: 0, k: *k, suffix: String::new() },
            q(0, slot_index(layout, "sp"), *n, "j"),
        ],
        CaseSpec::VIII { m, blocks } => {
            let mut out = Vec::new();
            for (i, &mi) in m.iter().enumerate() {
                out.push(Block::UnitaryTorus {
                    offset: torus_offset(layout, &format!("su_{}", i + 1)),
                    m: mi as usize,
                    circle: torus_offset(layout, &format!("s1_{}", i + 1)),
                    prefix: "j".into(),
                    suffix: format!("_{}", i + 1),
                });
            }
            for (j, b) in blocks.iter().enumerate() {
                let coord = torus_offset(layout, &format!("su2_{}", j + 1));
                let u = slot_index(layout, &format!("u_{}", j + 1)).expect("every block has a U(k) slot");
                out.push(Block::DoubleU { coord, slot: u, k: b.k, suffix: format!("_{}", j + 1) });
                out.push(q(coord, slot_index(layout, &format!("sp_{}", j + 1)), b.n, &format!("j_{}", j + 1)));
            }
            out
        }
        CaseSpec::IX { n } => vec![Block::Heisenberg { slot: 0, n: *n }],
    }
}

/// The graded pieces of `ω` with degree at most `d`, sorted by degree.
pub fn omega_pieces(spec: &CaseSpec, d: u32) -> Result<Vec<OmegaPiece>> {
    let layout = spec.layout()?;
    let mut acc = vec![Partial { degree: 0, params: vec![], torus: vec![], slots: vec![] }];
    for block in blocks(spec, &layout) {
        let mut next = Vec::new();
        let table = block.pieces(d)?;
        for p in &acc {
            for q in table.iter().filter(|q| p.degree + q.degree <= d) {
                let mut m = p.clone();
                m.degree += q.degree;
                m.params.extend(q.params.iter().cloned());
                m.torus.extend(q.torus.iter().cloned());
                m.slots.extend(q.slots.iter().cloned());
                next.push(m);
            }
        }
        acc = next;
    }
    let trivial: Vec<Arc<FormalSum<IrrepLabel>>> =
        layout.trivial_slots().into_iter().map(|l| Arc::new(FormalSum::singleton(l))).collect();
    let mut out: Vec<OmegaPiece> = acc
        .into_iter()
        .map(|p| {
            let mut torus = vec![0; layout.torus_dim];
            for (i, v) in p.torus {
                torus[i] += v;
            }
            let mut slots = trivial.clone();
            for (i, s) in p.slots {
                slots[i] = s;
            }
            OmegaPiece { degree: p.degree, params: p.params, torus, slots }
        })
        .collect();
    out.sort_by_key(|p| p.degree);
    Ok(out)
}

/// Expands the per-slot decompositions of a piece into composite labels.
pub(crate) fn expand(piece: &OmegaPiece) -> Vec<(Vec<IrrepLabel>, u64)> {
    let mut acc: Vec<(Vec<IrrepLabel>, u64)> = vec![(Vec::new(), 1)];
    for slot in &piece.slots {
        let mut next = Vec::with_capacity(acc.len() * slot.len());
        for (labels, m) in &acc {
            for (l, k) in slot.iter() {
                let mut v = labels.clone();
                v.push(l.clone());
                next.push((v, m * k));
            }
        }
        acc = next;
    }
    acc
}

/// `ω` restricted to `T × U`, all terms of degree at most `d`.
pub fn omega_series(spec: &CaseSpec, d: u32) -> Result<FormalSum<CompositeLabel>> {
    let mut out = FormalSum::truncated(d);
    for piece in omega_pieces(spec, d)? {
        for (u, m) in expand(&piece) {
            out.add(CompositeLabel::new(piece.torus.clone(), u), m);
        }
    }
    Ok(out)
}
