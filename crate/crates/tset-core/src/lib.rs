//! Finite t-sets: nonempty carriers with a transitive binary relation, and
//! nothing else assumed — no reflexivity, antisymmetry, or symmetry.
//!
//! The crate provides the bound operators (`ub`, `lb`, `le`, `la`, `sup`,
//! `inf`, closures), subset predicates (upper cone, directed, finitary,
//! upper set), whole-structure completeness predicates, explicit topologies
//! with compactness notions, and an exhaustive enumeration harness that
//! machine-checks a registry of equivalence and implication claims over
//! every t-set up to a given carrier size, reporting violations as
//! re-loadable witnesses.
//!
//! Everything is exact: subsets are bit masks over carriers of at most
//! [`subset::MAX_CARRIER`] elements, and all operators return *sets* (a
//! subset may have several least elements once antisymmetry is dropped).

pub mod bounds;
pub mod completeness;
pub mod fixtures;
pub mod harness;
pub mod oracles;
pub mod relation;
pub mod subset;
pub mod topology;

pub use completeness::reflexive_chain;
pub use harness::{
    clause_vector, code_of, enumerate_codes, enumerate_tsets, find_theorem, sweep, theorems,
    tset_from_code, ClaimKind, ClauseVector, HarnessError, SweepReport, Theorem, Violation,
    MAX_ENUMERATION,
};
pub use relation::{
    BuildError, ClassificationReport, DocError, FiniteTSet, RelationDoc,
};
pub use subset::{CarrierMismatch, Subset, MAX_CARRIER};
pub use topology::{
    alexandroff, scott_star, Topology, TopologyError, TopologyKind,
};
