//! Exact representation-theoretic tools for deciding commutativity of
//! triples `(K, N, τ)` attached to two-step nilpotent Lie groups.
//!
//! The layers, bottom up:
//!
//! * [`partition`]: Young diagrams, horizontal strips.
//! * [`laurent`], [`irrep`], [`character`], [`oracle`]: torus characters and a
//!   brute-force tensor product decomposer.
//! * [`pieri`]: closed-form symplectic tensor rules.
//! * [`metaplectic`]: per-case series for `ω` and `τ` restricted to `T × U`.
//! * [`classifier`]: verdicts, witnesses and the expected classification.

pub mod character;
pub mod classifier;
pub mod error;
pub mod formal_sum;
pub mod irrep;
pub mod laurent;
pub mod metaplectic;
pub mod oracle;
pub mod partition;
pub mod pieri;

pub use character::weight_system;
pub use classifier::{
    classify, cross_check, deg_window, enumerate_taus, expected_verdict, sweep, standard_instances, Consistency,
    CrossCheck, Expectation, ExpectedVerdict, Rule, SweepRow, Verdict,
};
pub use error::{Error, Result};
pub use formal_sum::{is_multiplicity_free, FormalSum};
pub use irrep::{Family, IrrepLabel};
pub use laurent::LaurentPoly;
pub use metaplectic::{
    omega_series, omega_tensor_tau, tau_restriction, Block, CaseId, CaseSpec, CompositeLabel, Route, TauSpec,
};
pub use oracle::{decompose_product, weyl_character, Oracle};
pub use partition::{conjugate, contains, is_horizontal_strip, strip_predecessors, Partition};
pub use pieri::{pieri_coefficient, pieri_tensor, tensor_column_sym, tensor_sym_sym, RuleOutput, RuleSource};
