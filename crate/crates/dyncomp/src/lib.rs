//! Constructive subequivalence for finite models of polynomial-growth
//! group actions.
//!
//! The library computes word-metric ball geometry for `ℤ^d` and the
//! discrete Heisenberg group, exact and Følner densities of point sets
//! under a finite group action, and — given sets `A` and `B` with a
//! density gap — explicit witnesses that `A` is subequivalent to `B`:
//! families of sets together with group elements whose translates are
//! pairwise disjoint inside `B` and jointly cover `A`. Witnesses are
//! produced by a greedy packing pass over a finite step schedule and
//! checked by an independent verifier; a brute-force oracle confirms
//! decisions at desk scale.
//!
//! Everything is exact: metrics, densities, and the shrinking epsilon
//! schedule are arbitrary-precision rationals, so strict inequalities
//! mean what they say.

pub mod action;
pub mod density;
pub mod driver;
pub mod error;
pub mod gen;
pub mod group;
pub mod rat;
pub mod scenario;
pub mod subequiv;

pub use action::{FiniteMetricAction, Metric, PointSet};
pub use density::{exact_density, folner_density, DensityBounds};
pub use driver::{
    brute_force_subequivalent, full_comparison_witness, weak_comparison_witness, DriverTrace,
    OracleDecision, OracleParams,
};
pub use error::{Error, Result};
pub use group::{ElementSet, GroupElement, GroupKind, GroupSpec};
pub use rat::Rat;
pub use scenario::{load_scenario, save_scenario, Scenario};
pub use subequiv::{
    check_hypothesis, greedy_witness, verify_witness, GreedyOptions, GreedyState,
    HypothesisReport, VerifyReport, Witness, WitnessEntry,
};
