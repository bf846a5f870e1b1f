//! Highest-weight labels for the compact groups that occur as factors of `K`.
//!
//! Coordinates follow the standard maximal tori:
//!
//! * `U(k)`: `k` circle coordinates, weights are weakly decreasing integer `k`-tuples.
//! * `SU(m)`: `m - 1` coordinates. A `U(m)` weight `a` is normalized to
//!   `(a_1 - a_m, ..., a_{m-1} - a_m)`, i.e. the representative with last entry 0.
//! * `Sp(n)`: `n` coordinates `h_1..h_n` of the diagonal Cartan; weights are partitions.
//! * `SO(2n)`: `n` coordinates (one per rotation block), weights
//!   `a_1 >= ... >= a_{n-1} >= |a_n|`. The `rank` field stores the matrix size `2n`.
//! * Circle: a single coordinate.

use std::fmt;

use num_bigint::BigInt;
use num_traits::One;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::partition::Partition;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Family {
    SU,
    Sp,
    U,
    SO,
    Circle,
}

impl Family {
    pub fn parse(s: &str) -> Option<Family> {
        match s.to_ascii_lowercase().as_str() {
            "su" => Some(Family::SU),
            "sp" => Some(Family::Sp),
            "u" => Some(Family::U),
            "so" => Some(Family::SO),
            "circle" | "s1" | "t" => Some(Family::Circle),
            _ => None,
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Family::SU => "SU",
            Family::Sp => "Sp",
            Family::U => "U",
            Family::SO => "SO",
            Family::Circle => "Circle",
        };
        f.write_str(s)
    }
}

/// An irreducible representation: family, rank parameter and highest weight.
///
/// `SU` and `Sp` weights are stored as partitions without trailing zeros,
/// `U` and `SO` weights as full-length tuples, circle weights as `[r]`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "RawLabel", into = "RawLabel")]
pub struct IrrepLabel {
    family: Family,
    rank: u32,
    weight: Vec<i32>,
}

#[derive(Serialize, Deserialize)]
struct RawLabel {
    family: Family,
    rank: u32,
    weight: Vec<i32>,
}

impl TryFrom<RawLabel> for IrrepLabel {
    type Error = Error;

    fn try_from(raw: RawLabel) -> Result<Self> {
        IrrepLabel::new(raw.family, raw.rank, raw.weight)
    }
}

impl From<IrrepLabel> for RawLabel {
    fn from(l: IrrepLabel) -> Self {
        RawLabel { family: l.family, rank: l.rank, weight: l.weight }
    }
}

fn partition_from(weight: &[i32], what: &str) -> Result<Partition> {
    let w: Vec<i64> = weight.iter().map(|&x| x as i64).collect();
    Partition::from_signed(&w).map_err(|_| Error::InvalidLabel(format!("{what} weight {weight:?} is not a partition")))
}

impl IrrepLabel {
    /// Validating constructor. Partition-type weights may carry trailing zeros.
    pub fn new(family: Family, rank: u32, weight: Vec<i32>) -> Result<Self> {
        let bad = |msg: String| Err(Error::InvalidLabel(msg));
        match family {
            Family::SU => {
                if rank < 2 {
                    return bad(format!("SU({rank}) needs rank >= 2"));
                }
                let p = partition_from(&weight, "SU")?;
                if p.len() > rank as usize - 1 {
                    return bad(format!("SU({rank}) weight {p} longer than {}", rank - 1));
                }
                Ok(Self { family, rank, weight: p.parts().iter().map(|&x| x as i32).collect() })
            }
            Family::Sp => {
                if rank < 1 {
                    return bad("Sp(0) has no nontrivial labels; omit the factor".into());
                }
                let p = partition_from(&weight, "Sp")?;
                if p.len() > rank as usize {
                    return bad(format!("Sp({rank}) weight {p} longer than {rank}"));
                }
                Ok(Self { family, rank, weight: p.parts().iter().map(|&x| x as i32).collect() })
            }
            Family::U => {
                if rank < 1 || weight.len() != rank as usize {
                    return bad(format!("U({rank}) weight {weight:?} must have exactly {rank} entries"));
                }
                if weight.windows(2).any(|w| w[0] < w[1]) {
                    return bad(format!("U({rank}) weight {weight:?} is not weakly decreasing"));
                }
                Ok(Self { family, rank, weight })
            }
            Family::SO => {
                if rank < 4 || !rank.is_multiple_of(2) {
                    return bad(format!("SO({rank}) unsupported: need even rank >= 4"));
                }
                let n = rank as usize / 2;
                if weight.len() != n {
                    return bad(format!("SO({rank}) weight {weight:?} must have exactly {n} entries"));
                }
                let ok = weight.windows(2).enumerate().all(|(i, w)| if i + 2 < n { w[0] >= w[1] } else { w[0] >= w[1].abs() });
                if !ok {
                    return bad(format!("SO({rank}) weight {weight:?} is not dominant"));
                }
                Ok(Self { family, rank, weight })
            }
            Family::Circle => {
                if rank != 1 || weight.len() != 1 {
                    return bad(format!("circle weight {weight:?} must be a single integer"));
                }
                Ok(Self { family, rank, weight })
            }
        }
    }

    pub fn sp(n: u32, weight: &[i32]) -> Result<Self> {
        Self::new(Family::Sp, n, weight.to_vec())
    }

    pub fn su(m: u32, weight: &[i32]) -> Result<Self> {
        Self::new(Family::SU, m, weight.to_vec())
    }

    pub fn u(k: u32, weight: &[i32]) -> Result<Self> {
        Self::new(Family::U, k, weight.to_vec())
    }

    /// `SO(2n)` with `n = weight.len()`.
    pub fn so(weight: &[i32]) -> Result<Self> {
        Self::new(Family::SO, 2 * weight.len() as u32, weight.to_vec())
    }

    pub fn circle(r: i32) -> Self {
        Self { family: Family::Circle, rank: 1, weight: vec![r] }
    }

    /// `Sp(n)` label from a partition.
    pub fn sp_partition(n: u32, p: &Partition) -> Result<Self> {
        let w: Vec<i32> = p.parts().iter().map(|&x| x as i32).collect();
        Self::sp(n, &w)
    }

    /// The `SU(2)` representation on homogeneous polynomials of degree `k`.
    pub fn su2(k: u32) -> Self {
        Self::su(2, &[k as i32]).expect("SU(2) label")
    }

    /// The trivial representation of a family/rank.
    pub fn trivial(family: Family, rank: u32) -> Result<Self> {
        let weight = match family {
            Family::U => vec![0; rank as usize],
            Family::SO => vec![0; rank as usize / 2],
            Family::Circle => vec![0],
            Family::SU | Family::Sp => Vec::new(),
        };
        Self::new(family, rank, weight)
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn rank(&self) -> u32 {
        self.rank
    }

    pub fn weight(&self) -> &[i32] {
        &self.weight
    }

    /// Number of torus coordinates for this family/rank.
    pub fn torus_dim(&self) -> usize {
        torus_dim(self.family, self.rank)
    }

    /// Weight padded to the torus dimension.
    pub fn full_weight(&self) -> Vec<i32> {
        let mut w = self.weight.clone();
        w.resize(self.torus_dim(), 0);
        w
    }

    pub fn is_trivial(&self) -> bool {
        self.weight.iter().all(|&x| x == 0)
    }

    /// Partition view for `SU`/`Sp` labels.
    pub fn partition(&self) -> Option<Partition> {
        match self.family {
            Family::SU | Family::Sp => Some(Partition::new(self.weight.iter().map(|&x| x as u32).collect()).ok()?),
            _ => None,
        }
    }

    /// Size of the weight: sum of absolute values of the entries.
    pub fn weight_size(&self) -> u32 {
        self.weight.iter().map(|x| x.unsigned_abs()).sum()
    }

    /// Same family and rank.
    pub fn same_group(&self, other: &IrrepLabel) -> bool {
        self.family == other.family && self.rank == other.rank
    }

    /// Dimension from the Weyl dimension formula (independent of characters).
    pub fn dimension(&self) -> BigInt {
        weyl_dimension(self)
    }

    /// Rendering without a family prefix, as used in decomposition listings:
    /// `(2,1)` for tuple weights, `ν2` for `SU(2)`, `χ3` for the circle.
    pub fn short(&self) -> String {
        match self.family {
            Family::SU if self.rank == 2 => format!("ν{}", self.weight.first().copied().unwrap_or(0)),
            Family::Circle => format!("χ{}", self.weight[0]),
            Family::U | Family::SO => tuple(&self.weight),
            Family::SU | Family::Sp => tuple(&self.weight),
        }
    }
}

pub(crate) fn tuple(w: &[i32]) -> String {
    let inner: Vec<String> = w.iter().map(|x| x.to_string()).collect();
    format!("({})", inner.join(","))
}

impl fmt::Display for IrrepLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.family {
            Family::Sp => write!(f, "η{}", tuple(&self.weight)),
            Family::SU if self.rank == 2 => write!(f, "{}", self.short()),
            Family::SU => write!(f, "ν{}", tuple(&self.weight)),
            Family::U => write!(f, "υ{}", tuple(&self.weight)),
            Family::SO => write!(f, "ρ{}", tuple(&self.weight)),
            Family::Circle => write!(f, "χ{}", self.weight[0]),
        }
    }
}

impl fmt::Debug for IrrepLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}({})[{}]", self.family, self.rank, self)
    }
}

pub fn torus_dim(family: Family, rank: u32) -> usize {
    match family {
        Family::SU => rank as usize - 1,
        Family::Sp | Family::U => rank as usize,
        Family::SO => rank as usize / 2,
        Family::Circle => 1,
    }
}

/// Dominance test for an exponent vector in the family's torus coordinates.
pub fn is_dominant(family: Family, exp: &[i32]) -> bool {
    let decreasing = exp.windows(2).all(|w| w[0] >= w[1]);
    match family {
        Family::U | Family::Circle => decreasing,
        Family::SU | Family::Sp => decreasing && exp.last().is_none_or(|&x| x >= 0),
        Family::SO => {
            let n = exp.len();
            n < 2 || (exp[..n - 1].windows(2).all(|w| w[0] >= w[1]) && exp[n - 2] >= exp[n - 1].abs())
        }
    }
}

/// Label whose highest weight is the given dominant exponent.
pub fn label_from_dominant(family: Family, rank: u32, exp: &[i32]) -> Result<IrrepLabel> {
    IrrepLabel::new(family, rank, exp.to_vec())
}

/// Weyl dimension formula `∏_{α>0} <λ+ρ, α> / <ρ, α>`, evaluated in exact integers.
pub fn weyl_dimension(label: &IrrepLabel) -> BigInt {
    let w: Vec<i64> = label.full_weight().iter().map(|&x| x as i64).collect();
    let n = w.len();
    let mut num = BigInt::one();
    let mut den = BigInt::one();
    match label.family {
        Family::Circle => {}
        Family::U | Family::SU => {
            // SU(m) labels are U(m) weights with a trailing zero.
            let mut a = w.clone();
            if label.family == Family::SU {
                a.push(0);
            }
            let m = a.len();
            for i in 0..m {
                for j in i + 1..m {
                    num *= a[i] - a[j] + (j - i) as i64;
                    den *= (j - i) as i64;
                }
            }
        }
        Family::Sp => {
            let rho: Vec<i64> = (0..n).map(|i| (n - i) as i64).collect();
            let mu: Vec<i64> = w.iter().zip(&rho).map(|(a, b)| a + b).collect();
            for i in 0..n {
                num *= mu[i];
                den *= rho[i];
                for j in i + 1..n {
                    num *= (mu[i] - mu[j]) * (mu[i] + mu[j]);
                    den *= (rho[i] - rho[j]) * (rho[i] + rho[j]);
                }
            }
        }
        Family::SO => {
            let rho: Vec<i64> = (0..n).map(|i| (n - 1 - i) as i64).collect();
            let mu: Vec<i64> = w.iter().zip(&rho).map(|(a, b)| a + b).collect();
            for i in 0..n {
                for j in i + 1..n {
                    num *= (mu[i] - mu[j]) * (mu[i] + mu[j]);
                    den *= (rho[i] - rho[j]) * (rho[i] + rho[j]);
                }
            }
        }
    }
    num / den
}
