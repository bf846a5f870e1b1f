//! Brute-force tensor product decomposition by character arithmetic.
//!
//! The product of characters is decomposed greedily: the lexicographically
//! largest surviving dominant exponent is the highest weight of a constituent,
//! and its coefficient is that constituent's multiplicity. Every positive root
//! of every supported family is lex-positive in our coordinates, which is what
//! makes this correct. Only dominant terms are ever tracked.

use std::collections::HashMap;
use std::fs;
use std::path::Path;
use std::sync::{Arc, OnceLock, RwLock};

use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::character;
use crate::error::{Error, Result};
use crate::formal_sum::FormalSum;
use crate::irrep::{is_dominant, Family, IrrepLabel};
use crate::laurent::LaurentPoly;

/// Version tag of the on-disk cache; files with any other value are ignored.
pub const CACHE_SCHEMA: u32 = 1;

type ProductKey = (Family, u32, Vec<i32>, Vec<i32>);

/// Memoizing decomposition engine. Caches are pure memoization: results are
/// identical with or without them.
#[derive(Default)]
pub struct Oracle {
    characters: RwLock<HashMap<IrrepLabel, Arc<LaurentPoly>>>,
    dominant: RwLock<HashMap<IrrepLabel, Arc<LaurentPoly>>>,
    products: RwLock<HashMap<ProductKey, FormalSum<IrrepLabel>>>,
}

#[derive(Serialize, Deserialize)]
struct CacheFile {
    schema: u32,
    products: Vec<CachedProduct>,
}

#[derive(Serialize, Deserialize)]
struct CachedProduct {
    factors: [IrrepLabel; 2],
    result: FormalSum<IrrepLabel>,
}

static GLOBAL: OnceLock<Oracle> = OnceLock::new();

impl Oracle {
    pub fn new() -> Self {
        Self::default()
    }

    /// Process-wide instance used by the free functions.
    pub fn global() -> &'static Oracle {
        GLOBAL.get_or_init(Oracle::new)
    }

    pub fn character(&self, label: &IrrepLabel) -> Result<Arc<LaurentPoly>> {
        if let Some(c) = self.characters.read().unwrap().get(label) {
            return Ok(c.clone());
        }
        let c = Arc::new(character::weyl_character(label)?);
        self.characters.write().unwrap().insert(label.clone(), c.clone());
        Ok(c)
    }

    fn dominant_part(&self, label: &IrrepLabel) -> Result<Arc<LaurentPoly>> {
        if let Some(c) = self.dominant.read().unwrap().get(label) {
            return Ok(c.clone());
        }
        let family = label.family();
        let d = Arc::new(self.character(label)?.filter(|e| is_dominant(family, e)));
        self.dominant.write().unwrap().insert(label.clone(), d.clone());
        Ok(d)
    }

    /// Decomposes a genuine character of a `(family, rank)` group into irreducibles.
    pub fn decompose_character(&self, family: Family, rank: u32, poly: &LaurentPoly) -> Result<FormalSum<IrrepLabel>> {
        let mut rem = poly.filter(|e| is_dominant(family, e));
        let mut out = FormalSum::new();
        while let Some((top, c)) = rem.leading_term() {
            let (top, c) = (top.clone(), c.clone());
            let label = IrrepLabel::new(family, rank, top.clone())?;
            if c.is_negative() {
                return Err(Error::NegativeMultiplicity { label: format!("{label:?}"), mult: c.to_string() });
            }
            let mult = c.to_u64().ok_or_else(|| Error::NegativeMultiplicity {
                label: format!("{label:?}"),
                mult: c.to_string(),
            })?;
            let dom = self.dominant_part(&label)?;
            rem.add_scaled_shifted(&dom, &(-&c), &vec![0; top.len()]);
            debug_assert!(rem.coeff(&top).is_zero());
            out.add(label, mult);
        }
        Ok(out)
    }

    /// Decomposition of `labels[0] ⊗ labels[1] ⊗ ...` into irreducibles.
    pub fn decompose_product(&self, labels: &[IrrepLabel]) -> Result<FormalSum<IrrepLabel>> {
        let (first, rest) = labels.split_first().ok_or(Error::EmptyProduct)?;
        for l in rest {
            if !l.same_group(first) {
                return Err(Error::FamilyMismatch(format!("{first:?}"), format!("{l:?}")));
            }
        }
        let mut acc = FormalSum::singleton(first.clone());
        for next in rest {
            let mut step = FormalSum::new();
            for (l, &m) in acc.iter() {
                step.add_all(&self.pair(l, next)?, m);
            }
            acc = step;
        }
        Ok(acc)
    }

    fn pair(&self, a: &IrrepLabel, b: &IrrepLabel) -> Result<FormalSum<IrrepLabel>> {
        // U(k): pull out determinant powers so both factors are partitions.
        if a.family() == Family::U {
            let sa = *a.weight().last().unwrap();
            let sb = *b.weight().last().unwrap();
            if sa != 0 || sb != 0 {
                let na = shift_u(a, -sa)?;
                let nb = shift_u(b, -sb)?;
                let base = self.pair(&na, &nb)?;
                let mut out = FormalSum::new();
                for (l, &m) in base.iter() {
                    out.add(shift_u(l, sa + sb)?, m);
                }
                return Ok(out);
            }
        }
        let (x, y) = if a.weight() <= b.weight() { (a, b) } else { (b, a) };
        let key: ProductKey = (x.family(), x.rank(), x.weight().to_vec(), y.weight().to_vec());
        if let Some(r) = self.products.read().unwrap().get(&key) {
            return Ok(r.clone());
        }
        let prod = &*self.character(x)? * &*self.character(y)?;
        let result = self.decompose_character(x.family(), x.rank(), &prod)?;
        self.products.write().unwrap().insert(key, result.clone());
        Ok(result)
    }

    /// Number of memoized pairwise products.
    pub fn cached_products(&self) -> usize {
        self.products.read().unwrap().len()
    }

    /// Merges a cache file into memory. Missing files and other schema versions are ignored.
    /// Returns the number of entries loaded.
    pub fn load_cache(&self, path: &Path) -> Result<usize> {
        let text = match fs::read_to_string(path) {
            Ok(t) => t,
            Err(e) if e.kind() == std::io::ErrorKind::NotFound => return Ok(0),
            Err(e) => return Err(Error::Cache(e.to_string())),
        };
        let Ok(file) = serde_json::from_str::<CacheFile>(&text) else {
            return Ok(0);
        };
        if file.schema != CACHE_SCHEMA {
            return Ok(0);
        }
        let mut products = self.products.write().unwrap();
        let n = file.products.len();
        for p in file.products {
            let [a, b] = p.factors;
            products.insert((a.family(), a.rank(), a.weight().to_vec(), b.weight().to_vec()), p.result);
        }
        Ok(n)
    }

    /// Writes all memoized products, sorted by key.
    pub fn save_cache(&self, path: &Path) -> Result<()> {
        let products = self.products.read().unwrap();
        let mut keys: Vec<&ProductKey> = products.keys().collect();
        keys.sort();
        let mut entries = Vec::with_capacity(keys.len());
        for k in keys {
            let (family, rank, wa, wb) = k.clone();
            entries.push(CachedProduct {
                factors: [IrrepLabel::new(family, rank, wa)?, IrrepLabel::new(family, rank, wb)?],
                result: products[k].clone(),
            });
        }
        let file = CacheFile { schema: CACHE_SCHEMA, products: entries };
        let text = serde_json::to_string(&file).map_err(|e| Error::Cache(e.to_string()))?;
        fs::write(path, text).map_err(|e| Error::Cache(e.to_string()))
    }
}

fn shift_u(l: &IrrepLabel, by: i32) -> Result<IrrepLabel> {
    IrrepLabel::u(l.rank(), &l.weight().iter().map(|a| a + by).collect::<Vec<_>>())
}

/// Exact character, memoized in the global oracle.
pub fn weyl_character(label: &IrrepLabel) -> Result<LaurentPoly> {
    Ok((*Oracle::global().character(label)?).clone())
}

/// Tensor product decomposition through the global oracle.
pub fn decompose_product(labels: &[IrrepLabel]) -> Result<FormalSum<IrrepLabel>> {
    Oracle::global().decompose_product(labels)
}

/// `Σ mult · χ_label` as a Laurent polynomial (used to check reconstructions).
pub fn recompose(sum: &FormalSum<IrrepLabel>, nvars: usize) -> Result<LaurentPoly> {
    let mut out = LaurentPoly::zero(nvars);
    for (l, &m) in sum.iter() {
        out.add_scaled_shifted(&*Oracle::global().character(l)?, &BigInt::from(m), &vec![0; nvars]);
    }
    Ok(out)
}
