//! Exact arithmetic for deciding whether a degree-n subextension of a ray
//! class field of F_q(x) has class number one.
//!
//! The pipeline: polynomial arithmetic over F_q ([`poly`]), the unit group
//! `(F_q[x]/m)^*` modulo constants ([`mod@unit`]), Frobenius unit parts and
//! splitting of places in the subextension ([`rayclass`]), and place counts,
//! L-polynomial, and class number of the subextension ([`curve`]). Everything
//! is integer-exact; the class number is derived along two independent paths
//! that every certificate cross-checks.
//!
//! All types are immutable after construction and all operations are pure
//! functions, so values can be shared freely across threads.

pub mod curve;
pub mod error;
pub mod field;
pub mod poly;
pub mod rayclass;
mod text;
pub mod unit;

#[cfg(test)]
pub(crate) mod testutil;

pub use curve::{
    count_places, madan_queen_check, verify_counterexample, Certificate, LPolynomial,
    PlaceCountTable, Verdict,
};
pub use error::{Error, ValidationIssue};
pub use field::FieldChar;
pub use poly::Poly;
pub use rayclass::{
    places_up_to, tame_genus, PlaceK, RayClassField, SplitReport, SubextensionSpec,
    ValidatedConfig,
};
pub use unit::{ResidueCtx, UnitClass};
