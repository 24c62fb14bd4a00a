//! Combinatorics of two-Newton-pair cusps on rational unicuspidal plane curves.
//!
//! The crate is organised bottom-up:
//!
//! * [`newton`] validates singularity types `(p1,q1)(p2,q2)` and computes the
//!   closed-form invariants (delta, semigroup generators, exponents).
//! * [`semigroup`] builds the value semigroup as a membership sieve and
//!   answers counting queries `R(n)`.
//! * [`criterion`] derives the candidate degree from the degree-genus
//!   relation and checks the counting condition `R(jd) = (j+1)(j+2)/2`.
//! * [`families`] generates the eight known families and the two types that
//!   pass the counting condition but are ruled out by other means.
//! * [`enumerator`] scans every type up to a degree bound and compares the
//!   survivors with the catalogue.

pub mod arith;
pub mod criterion;
pub mod enumerator;
pub mod families;
pub mod fibonacci;
pub mod json_int;
pub mod newton;
pub mod semigroup;

pub use arith::Overflow;
pub use criterion::{
    cbar_squared, check_sdp, degree_from_delta, evaluate, kodaira_hint, CriterionError,
    CriterionReport, CriterionRow, CurveCandidate, KodairaHint, Verdict,
};
pub use enumerator::{
    cross_check, cross_check_report, enumerate_candidates, expected_entries, Attribution,
    CrossCheckDiff, EnumerationError, EnumerationReport, EnumerationStats, ExpectedEntry,
    PassEntry,
};
pub use families::{
    enumerate_family, identify, instantiate, known_exceptions, ExceptionalType, ExpectedKappa,
    FamilyError, FamilyId, FamilyInstance, FamilyMatch, FamilyParams,
};
pub use fibonacci::fibonacci;
pub use newton::{
    validate_type, DegeneratePuiseuxType, NewtonPairType, ParametrizationExponents, ParseTypeError,
    RejectReason, SemigroupGenerators, SingularityType, TypeError,
};
pub use semigroup::{GapSet, NumericalSemigroup, SemigroupError};
