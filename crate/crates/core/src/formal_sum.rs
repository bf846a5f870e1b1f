//! Finite multisets of labels, possibly cut off at a degree bound.

use std::collections::BTreeMap;
use std::fmt;

use serde::de::DeserializeOwned;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

/// Map from label to positive multiplicity. `truncated_at` is `Some(D)` when
/// the sum is the degree-`D` truncation of an infinite series.
#[derive(Clone, PartialEq, Eq)]
pub struct FormalSum<L: Ord> {
    entries: BTreeMap<L, u64>,
    truncated_at: Option<u32>,
}

impl<L: Ord> Default for FormalSum<L> {
    fn default() -> Self {
        Self { entries: BTreeMap::new(), truncated_at: None }
    }
}

impl<L: Ord + Clone> FormalSum<L> {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn truncated(d: u32) -> Self {
        Self { entries: BTreeMap::new(), truncated_at: Some(d) }
    }

    pub fn singleton(label: L) -> Self {
        let mut s = Self::new();
        s.add(label, 1);
        s
    }

    pub fn truncated_at(&self) -> Option<u32> {
        self.truncated_at
    }

    pub fn set_truncation(&mut self, d: Option<u32>) {
        self.truncated_at = d;
    }

    /// Adds `mult` copies of `label`; zero is a no-op.
    pub fn add(&mut self, label: L, mult: u64) {
        if mult > 0 {
            *self.entries.entry(label).or_insert(0) += mult;
        }
    }

    /// Adds every entry of `other` scaled by `factor`.
    pub fn add_all(&mut self, other: &FormalSum<L>, factor: u64) {
        for (l, m) in &other.entries {
            self.add(l.clone(), m * factor);
        }
    }

    pub fn mult(&self, label: &L) -> u64 {
        self.entries.get(label).copied().unwrap_or(0)
    }

    pub fn contains(&self, label: &L) -> bool {
        self.entries.contains_key(label)
    }

    /// Ascending label order.
    pub fn iter(&self) -> impl DoubleEndedIterator<Item = (&L, &u64)> {
        self.entries.iter()
    }

    /// Descending label order (highest weight first).
    pub fn iter_desc(&self) -> impl Iterator<Item = (&L, &u64)> {
        self.entries.iter().rev()
    }

    pub fn labels(&self) -> impl Iterator<Item = &L> {
        self.entries.keys()
    }

    /// Number of distinct labels.
    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Sum of multiplicities.
    pub fn total(&self) -> u64 {
        self.entries.values().sum()
    }

    pub fn is_multiplicity_free(&self) -> bool {
        self.entries.values().all(|&m| m == 1)
    }

    /// Entries with multiplicity at least 2, ascending.
    pub fn repeated(&self) -> impl Iterator<Item = (&L, &u64)> {
        self.entries.iter().filter(|(_, &m)| m >= 2)
    }

    /// Sub-multiset test: every multiplicity here is at most the one in `other`.
    pub fn is_submultiset_of(&self, other: &FormalSum<L>) -> bool {
        self.entries.iter().all(|(l, &m)| m <= other.mult(l))
    }

    /// Relabels entries; colliding labels have their multiplicities summed.
    pub fn map<M: Ord + Clone, F: Fn(&L) -> M>(&self, f: F) -> FormalSum<M> {
        let mut out = FormalSum { entries: BTreeMap::new(), truncated_at: self.truncated_at };
        for (l, &m) in &self.entries {
            out.add(f(l), m);
        }
        out
    }

    /// Same entries, ignoring the truncation marker.
    pub fn same_entries(&self, other: &FormalSum<L>) -> bool {
        self.entries == other.entries
    }
}

impl<L: Ord + Clone> FromIterator<(L, u64)> for FormalSum<L> {
    fn from_iter<I: IntoIterator<Item = (L, u64)>>(iter: I) -> Self {
        let mut s = FormalSum::new();
        for (l, m) in iter {
            s.add(l, m);
        }
        s
    }
}

/// Free-function form of [`FormalSum::is_multiplicity_free`].
pub fn is_multiplicity_free<L: Ord + Clone>(s: &FormalSum<L>) -> bool {
    s.is_multiplicity_free()
}

impl<L: Ord + fmt::Display> fmt::Display for FormalSum<L> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.entries.is_empty() {
            return f.write_str("0");
        }
        for (i, (l, m)) in self.entries.iter().rev().enumerate() {
            if i > 0 {
                f.write_str(" + ")?;
            }
            if *m > 1 {
                write!(f, "{m}·")?;
            }
            write!(f, "{l}")?;
        }
        Ok(())
    }
}

impl<L: Ord + fmt::Debug> fmt::Debug for FormalSum<L> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut m = f.debug_map();
        for (l, c) in self.entries.iter().rev() {
            m.entry(l, c);
        }
        m.finish()?;
        if let Some(d) = self.truncated_at {
            write!(f, " (deg <= {d})")?;
        }
        Ok(())
    }
}

#[derive(Serialize, Deserialize)]
struct Entry<L> {
    label: L,
    mult: u64,
}

#[derive(Serialize, Deserialize)]
struct Truncated<L> {
    truncated_at: u32,
    terms: Vec<Entry<L>>,
}

#[derive(Deserialize)]
#[serde(untagged)]
enum Repr<L> {
    Exact(Vec<Entry<L>>),
    Truncated(Truncated<L>),
}

impl<L: Ord + Clone + Serialize> Serialize for FormalSum<L> {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let terms: Vec<Entry<L>> =
            self.entries.iter().rev().map(|(l, &m)| Entry { label: l.clone(), mult: m }).collect();
        match self.truncated_at {
            None => terms.serialize(serializer),
            Some(d) => Truncated { truncated_at: d, terms }.serialize(serializer),
        }
    }
}

impl<'de, L: Ord + Clone + DeserializeOwned> Deserialize<'de> for FormalSum<L> {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let (terms, truncated_at) = match Repr::<L>::deserialize(deserializer)? {
            Repr::Exact(t) => (t, None),
            Repr::Truncated(t) => (t.terms, Some(t.truncated_at)),
        };
        let mut out = FormalSum { entries: BTreeMap::new(), truncated_at };
        for e in terms {
            if e.mult == 0 {
                return Err(serde::de::Error::custom("multiplicities must be positive"));
            }
            out.add(e.label, e.mult);
        }
        Ok(out)
    }
}
