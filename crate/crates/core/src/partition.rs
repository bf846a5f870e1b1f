//! Integer partitions and Young-diagram combinatorics.
//!
//! A [`Partition`] is kept in canonical form: weakly decreasing, trailing
//! zeros removed. Everything here is pure and allocation-light; these
//! routines sit underneath every Pieri-type rule in the crate.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A weakly decreasing finite sequence of positive integers.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default, Serialize, Deserialize)]
#[serde(try_from = "Vec<u32>", into = "Vec<u32>")]
pub struct Partition {
    parts: Vec<u32>,
}

impl Partition {
    /// Builds a partition, rejecting increasing sequences. Trailing zeros are dropped.
    pub fn new(mut parts: Vec<u32>) -> Result<Self> {
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidPartition(parts.iter().map(|&p| p as i64).collect()));
        }
        while parts.last() == Some(&0) {
            parts.pop();
        }
        Ok(Self { parts })
    }

    /// Same as [`Partition::new`] but accepts signed input (negative parts are rejected).
    pub fn from_signed(parts: &[i64]) -> Result<Self> {
        if parts.iter().any(|&p| p < 0 || p > u32::MAX as i64) {
            return Err(Error::InvalidPartition(parts.to_vec()));
        }
        Self::new(parts.iter().map(|&p| p as u32).collect())
            .map_err(|_| Error::InvalidPartition(parts.to_vec()))
    }

    pub fn empty() -> Self {
        Self::default()
    }

    /// A single row `(s)`.
    pub fn row(s: u32) -> Self {
        Self::new(vec![s]).expect("single row is a partition")
    }

    /// The rectangle `(a, ..., a)` with `m` rows.
    pub fn rectangle(a: u32, m: usize) -> Self {
        Self::new(vec![a; m]).expect("rectangle is a partition")
    }

    /// Nonzero parts.
    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    /// Number of nonzero parts.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Sum of the parts.
    pub fn size(&self) -> u32 {
        self.parts.iter().sum()
    }

    /// The `i`-th part (0-based); zero past the length.
    pub fn part(&self, i: usize) -> u32 {
        self.parts.get(i).copied().unwrap_or(0)
    }

    /// True when all nonzero parts are equal (the empty partition included).
    pub fn is_constant(&self) -> bool {
        self.parts.windows(2).all(|w| w[0] == w[1])
    }

    /// Reflection of the Young diagram along its main diagonal.
    pub fn conjugate(&self) -> Partition {
        let cols = self.part(0) as usize;
        let parts = (0..cols)
            .map(|c| self.parts.iter().take_while(|&&p| p as usize > c).count() as u32)
            .collect();
        Partition { parts }
    }

    /// Containment of Young diagrams: `inner[i] <= self[i]` for every row.
    pub fn contains(&self, inner: &Partition) -> bool {
        inner.len() <= self.len() && inner.parts.iter().zip(&self.parts).all(|(a, b)| a <= b)
    }

    /// Parts padded with zeros to length `n` (no truncation).
    pub fn padded(&self, n: usize) -> Vec<u32> {
        let mut v = self.parts.clone();
        if v.len() < n {
            v.resize(n, 0);
        }
        v
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Partition{self}")
    }
}

impl TryFrom<Vec<u32>> for Partition {
    type Error = Error;

    fn try_from(parts: Vec<u32>) -> Result<Self> {
        Partition::new(parts)
    }
}

impl From<Partition> for Vec<u32> {
    fn from(p: Partition) -> Self {
        p.parts
    }
}

/// Free-function form of [`Partition::conjugate`].
pub fn conjugate(p: &Partition) -> Partition {
    p.conjugate()
}

/// `inner ⊂ outer` as Young diagrams.
pub fn contains(outer: &Partition, inner: &Partition) -> bool {
    outer.contains(inner)
}

/// Whether `outer / inner` is a horizontal strip, via the interlacing
/// `outer[0] >= inner[0] >= outer[1] >= inner[1] >= ...`.
/// Returns false when `inner` is not contained in `outer`.
pub fn is_horizontal_strip(outer: &Partition, inner: &Partition) -> bool {
    if !outer.contains(inner) {
        return false;
    }
    (0..outer.len()).all(|i| inner.part(i) >= outer.part(i + 1))
}

/// All `ς ⊂ eta` with `eta / ς` a horizontal strip of size at most `max_size`,
/// in descending lexicographic order.
pub fn strip_predecessors(eta: &Partition, max_size: u32) -> Vec<Partition> {
    // ς_i ranges over [eta_{i+1}, eta_i]; choose rows top-down.
    fn go(eta: &Partition, row: usize, budget: u32, cur: &mut Vec<u32>, out: &mut Vec<Partition>) {
        if row == eta.len() {
            out.push(Partition::new(cur.clone()).expect("interlacing keeps order"));
            return;
        }
        let hi = eta.part(row);
        let lo = eta.part(row + 1);
        for v in (lo..=hi).rev() {
            let removed = hi - v;
            if removed > budget {
                break;
            }
            cur.push(v);
            go(eta, row + 1, budget - removed, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(eta, 0, max_size, &mut Vec::with_capacity(eta.len()), &mut out);
    out
}

/// All `σ ⊃ inner` with `σ / inner` a horizontal strip of size exactly `size`
/// and at most `max_len` rows, in descending lexicographic order.
pub fn strip_successors(inner: &Partition, size: u32, max_len: usize) -> Vec<Partition> {
    // σ_0 >= inner_0, and inner_{i-1} >= σ_i >= inner_i for i >= 1.
    let rows = (inner.len() + 1).min(max_len);
    if inner.len() > max_len {
        return Vec::new();
    }
    fn go(
        inner: &Partition,
        rows: usize,
        row: usize,
        left: u32,
        cur: &mut Vec<u32>,
        out: &mut Vec<Partition>,
    ) {
        if row == rows {
            if left == 0 {
                out.push(Partition::new(cur.clone()).expect("interlacing keeps order"));
            }
            return;
        }
        let lo = inner.part(row);
        let cap = if row == 0 { lo + left } else { inner.part(row - 1).min(lo + left) };
        for v in (lo..=cap).rev() {
            cur.push(v);
            go(inner, rows, row + 1, left - (v - lo), cur, out);
            cur.pop();
        }
    }
    if rows == 0 {
        return if size == 0 { vec![inner.clone()] } else { Vec::new() };
    }
    let mut out = Vec::new();
    go(inner, rows, 0, size, &mut Vec::with_capacity(rows), &mut out);
    out
}

/// All partitions of `n` with at most `max_len` parts, descending lexicographic order.
pub fn partitions_of(n: u32, max_len: usize) -> Vec<Partition> {
    fn go(left: u32, max_part: u32, slots: usize, cur: &mut Vec<u32>, out: &mut Vec<Partition>) {
        if left == 0 {
            out.push(Partition { parts: cur.clone() });
            return;
        }
        if slots == 0 {
            return;
        }
        for p in (1..=max_part.min(left)).rev() {
            cur.push(p);
            go(left - p, p, slots - 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(n, n, max_len, &mut Vec::new(), &mut out);
    out
}

/// All partitions of size at most `max_size` with at most `max_len` parts,
/// graded by size and descending lexicographic within a size.
pub fn partitions_up_to(max_size: u32, max_len: usize) -> Vec<Partition> {
    (0..=max_size).flat_map(|n| partitions_of(n, max_len)).collect()
}
