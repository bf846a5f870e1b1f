//! Shared fixtures for the criterion benchmarks.

use multfree_core::{CaseSpec, IrrepLabel, TauSpec};

/// `Sp(n)` label from a weight, panicking on invalid input.
pub fn sp(n: u32, weight: &[i32]) -> IrrepLabel {
    IrrepLabel::sp(n, weight).expect("valid Sp(n) weight")
}

/// The case I triple used for the witness benchmark: `τ = ν_1 ⊗ η_(1)`.
pub fn heisenberg_witness() -> (CaseSpec, TauSpec) {
    let spec = CaseSpec::I { n: 2 };
    let tau = TauSpec::with(&spec, &[("su2", IrrepLabel::su2(1)), ("sp", sp(2, &[1]))]).expect("valid tau");
    (spec, tau)
}
