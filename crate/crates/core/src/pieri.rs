//! Closed-form tensor rules for `Sp(n)` against symmetric powers `η_(s)`.
//!
//! * `η_(r) ⊗ η_(s)` for `r >= s`: `⊕_{j=0}^{s} ⊕_{i=0}^{j} η_(r+s-j-i, j-i)`.
//! * `η_(1^r) ⊗ η_(s)` for `r, s > 1`:
//!   `η_(s+1,1^{r-1}) ⊕ η_(s,1^r) ⊕ η_(s-1,1^{r-1}) ⊕ η_(s,1^{r-2})`.
//! * The universal rule `η ⊗ η_(s) = Σ_σ M^σ_{η,s} η_σ`, where `M` counts
//!   partitions `ς` such that `η/ς` and `σ/ς` are horizontal strips with
//!   `|η/ς| + |σ/ς| = s`.
//!
//! Outside the validity window of the first two formulas the oracle is used
//! and the result is tagged [`RuleSource::ViaOracle`].

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::formal_sum::FormalSum;
use crate::irrep::IrrepLabel;
use crate::oracle::decompose_product;
use crate::partition::{strip_predecessors, strip_successors, Partition};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum RuleSource {
    ClosedForm,
    ViaOracle,
}

/// A decomposition into `Sp(n)` irreducibles, labelled by partitions.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RuleOutput {
    pub terms: FormalSum<Partition>,
    pub source: RuleSource,
}

fn check_rank(n: u32) -> Result<()> {
    if n == 0 {
        return Err(Error::InvalidLabel("Sp(0) has no tensor products to decompose".into()));
    }
    Ok(())
}

fn check_label(eta: &Partition, n: u32) -> Result<()> {
    check_rank(n)?;
    if eta.len() > n as usize {
        return Err(Error::InvalidLabel(format!("Sp({n}) weight {eta} longer than {n}")));
    }
    Ok(())
}

/// Oracle decomposition of `η ⊗ μ` in `Sp(n)`, relabelled by partitions.
pub fn oracle_sp_product(eta: &Partition, mu: &Partition, n: u32) -> Result<FormalSum<Partition>> {
    let a = IrrepLabel::sp_partition(n, eta)?;
    let b = IrrepLabel::sp_partition(n, mu)?;
    let sum = decompose_product(&[a, b])?;
    Ok(sum.map(|l| l.partition().expect("Sp labels are partitions")))
}

fn closed(terms: FormalSum<Partition>) -> RuleOutput {
    RuleOutput { terms, source: RuleSource::ClosedForm }
}

fn via_oracle(terms: FormalSum<Partition>) -> RuleOutput {
    RuleOutput { terms, source: RuleSource::ViaOracle }
}

/// `η_(r) ⊗ η_(s)` in `Sp(n)`. Arguments may be given in either order.
pub fn tensor_sym_sym(r: u32, s: u32, n: u32) -> Result<RuleOutput> {
    check_rank(n)?;
    let (r, s) = if r >= s { (r, s) } else { (s, r) };
    if n < 2 {
        return Ok(via_oracle(oracle_sp_product(&Partition::row(r), &Partition::row(s), n)?));
    }
    let mut out = FormalSum::new();
    for j in 0..=s {
        for i in 0..=j {
            out.add(Partition::new(vec![r + s - j - i, j - i])?, 1);
        }
    }
    Ok(closed(out))
}

/// `η_(1^r) ⊗ η_(s)` in `Sp(n)`.
pub fn tensor_column_sym(r: u32, s: u32, n: u32) -> Result<RuleOutput> {
    let column = Partition::rectangle(1, r as usize);
    check_label(&column, n)?;
    if !(r > 1 && s > 1 && r < n) {
        return Ok(via_oracle(oracle_sp_product(&column, &Partition::row(s), n)?));
    }
    let hook = |first: u32, ones: u32| {
        let mut v = vec![first];
        v.extend(std::iter::repeat_n(1, ones as usize));
        Partition::new(v)
    };
    let mut out = FormalSum::new();
    out.add(hook(s + 1, r - 1)?, 1);
    out.add(hook(s, r)?, 1);
    out.add(hook(s - 1, r - 1)?, 1);
    out.add(hook(s, r - 2)?, 1);
    Ok(closed(out))
}

fn strip_size(outer: &Partition, inner: &Partition) -> u32 {
    outer.size() - inner.size()
}

/// `M^σ_{η,s}`: partitions `ς` that are a common strip-predecessor of `η` and `σ`
/// with total strip size `s`.
pub fn pieri_coefficient(eta: &Partition, s: u32, sigma: &Partition, n: u32) -> u64 {
    if eta.len() > n as usize || sigma.len() > n as usize {
        return 0;
    }
    let from_sigma = strip_predecessors(sigma, s);
    strip_predecessors(eta, s)
        .iter()
        .filter(|c| from_sigma.contains(c) && strip_size(eta, c) + strip_size(sigma, c) == s)
        .count() as u64
}

/// `η ⊗ η_(s)` in `Sp(n)` by the universal Pieri rule.
pub fn pieri_tensor(eta: &Partition, s: u32, n: u32) -> Result<RuleOutput> {
    check_label(eta, n)?;
    let mut out = FormalSum::new();
    // Each predecessor ς contributes once to every σ reachable by a strip of the remaining size.
    for c in strip_predecessors(eta, s) {
        for sigma in strip_successors(&c, s - strip_size(eta, &c), n as usize) {
            out.add(sigma, 1);
        }
    }
    Ok(closed(out))
}
