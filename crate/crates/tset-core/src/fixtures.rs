//! Built-in example structures, also exposed through `tset example`.
//!
//! These are the small structures used throughout the test suites to pin
//! down boundary behavior: interpolation without an abstract base, an
//! abstract base without reflexivity, and a discrete poset that is
//! finitarily but not bounded complete.

use thiserror::Error;

use crate::completeness::reflexive_chain;
use crate::relation::FiniteTSet;

/// Lookup failures for fixture ids.
#[derive(Clone, PartialEq, Eq, Debug, Error)]
pub enum FixtureError {
    #[error("unknown example id {0:?} (known: 3.2, 3.3, 5.1)")]
    UnknownExample(String),
    #[error(
        "example {0} has an infinite carrier (the even numbers under divisibility); \
         finite carriers only — build a finite reflexive chain instead"
    )]
    InfiniteCarrierUnsupported(String),
}

/// {a, b, x} with a, b reflexive and both below x; x is not self-related.
/// Interpolative but not an abstract base.
pub fn e32() -> FiniteTSet {
    FiniteTSet::build(
        &["a", "b", "x"],
        &[("a", "a"), ("b", "b"), ("a", "x"), ("b", "x")],
    )
    .expect("fixture is valid")
}

/// Five elements with only a ≼ a. An abstract base that is not a preorder.
pub fn e33() -> FiniteTSet {
    FiniteTSet::build(&["a", "b", "c", "d", "e"], &[("a", "a")]).expect("fixture is valid")
}

/// Four reflexive, pairwise incomparable elements: a discrete poset,
/// finitarily complete but not bounded complete.
pub fn e51() -> FiniteTSet {
    FiniteTSet::build(
        &["a", "b", "c", "d"],
        &[("a", "a"), ("b", "b"), ("c", "c"), ("d", "d")],
    )
    .expect("fixture is valid")
}

/// Two elements, empty relation.
pub fn empty2() -> FiniteTSet {
    FiniteTSet::build(&["a", "b"], &[]).expect("fixture is valid")
}

/// Three-element reflexive chain c0 ≼ c1 ≼ c2.
pub fn chain3() -> FiniteTSet {
    reflexive_chain(3)
}

/// Fixture lookup by the id used on the command line.
pub fn by_id(id: &str) -> Result<FiniteTSet, FixtureError> {
    match id {
        "3.2" => Ok(e32()),
        "3.3" => Ok(e33()),
        "5.1" => Ok(e51()),
        "5.2" => Err(FixtureError::InfiniteCarrierUnsupported(id.to_string())),
        _ => Err(FixtureError::UnknownExample(id.to_string())),
    }
}
