//! Error types shared across the crate.

use std::fmt;

/// A single named condition violated while validating a configuration.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ValidationIssue {
    /// The conductor polynomial is not monic irreducible of degree >= 1.
    ConductorNotIrreducible,
    /// The split place polynomial is not monic irreducible of degree >= 1.
    SplitPlaceNotIrreducible,
    /// Conductor and split place coincide.
    ConductorEqualsSplitPlace,
    /// Conductor and split place live over different coefficient fields.
    MixedCharacteristics,
    /// Subextension degree below 2.
    DegreeTooSmall { n: u64 },
    /// n does not divide the unit group order.
    DegreeDoesNotDivideUnitOrder { n: u64, unit_order: u64 },
    /// gcd(n, deg S) > 1: the subextension would not be cut out by the unit
    /// direction alone (and need not be geometric).
    DegreeSharesFactorWithSplitDegree { n: u64, split_degree: u64 },
    /// gcd(n, q) > 1: wildly ramified, outside the tame regime handled here.
    WildRamification { n: u64, q: u64 },
    /// A size cap was exceeded (residue ring, split-place degree, ...).
    SizeCapExceeded(String),
}

impl fmt::Display for ValidationIssue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::ConductorNotIrreducible => {
                write!(f, "conductor must be a monic irreducible polynomial")
            }
            Self::SplitPlaceNotIrreducible => {
                write!(f, "split place must be a monic irreducible polynomial")
            }
            Self::ConductorEqualsSplitPlace => {
                write!(f, "conductor and split place must be distinct")
            }
            Self::MixedCharacteristics => {
                write!(f, "conductor and split place have different characteristics")
            }
            Self::DegreeTooSmall { n } => {
                write!(f, "subextension degree must be at least 2 (got {n})")
            }
            Self::DegreeDoesNotDivideUnitOrder { n, unit_order } => {
                write!(f, "degree {n} does not divide the unit group order {unit_order}")
            }
            Self::DegreeSharesFactorWithSplitDegree { n, split_degree } => {
                write!(f, "degree {n} is not coprime to the split place degree {split_degree}")
            }
            Self::WildRamification { n, q } => {
                write!(f, "degree {n} is not coprime to the characteristic {q} (wild ramification)")
            }
            Self::SizeCapExceeded(what) => write!(f, "size cap exceeded: {what}"),
        }
    }
}

/// Crate-wide error type.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("{0} is not a prime")]
    NotPrime(u64),
    #[error("operands belong to different coefficient fields (F_{left} vs F_{right})")]
    FieldMismatch { left: u64, right: u64 },
    #[error("division by the zero polynomial")]
    DivisionByZero,
    #[error("gcd of two zero polynomials is undefined")]
    BothZero,
    #[error("modulus must be nonconstant")]
    ConstantModulus,
    #[error("irreducibility is undefined for constant polynomials")]
    ConstantPolynomial,
    #[error("element is not invertible modulo the given polynomial")]
    NotInvertible,
    #[error("residue class is zero, not a unit")]
    ZeroResidue,
    #[error("modulus must be monic")]
    ModulusNotMonic,
    #[error("modulus must be irreducible")]
    ModulusReducible,
    #[error("unit classes belong to different residue contexts")]
    ContextMismatch,
    #[error("syntax error at column {col}: {msg}")]
    Parse { col: usize, msg: String },
    #[error("place is the conductor, which ramifies; it has no Frobenius class")]
    RamifiedPlace,
    #[error("invalid configuration: {}", format_issues(.0))]
    Invalid(Vec<ValidationIssue>),
    #[error("genus formula needs (n-1)*deg(m) even (n = {n}, deg m = {conductor_degree})")]
    GenusParity { n: u64, conductor_degree: u64 },
    #[error("degree {n} is wildly ramified in characteristic {q}")]
    Wild { n: u64, q: u64 },
    #[error("criterion applies only to q = 2, genus 4 (got q = {q}, genus {genus})")]
    CriterionInapplicable { q: u64, genus: u64 },
    #[error("place count table covers degrees up to {have}, need {need}")]
    TableTooShallow { need: u64, have: u64 },
    #[error("inconsistent counts: {0}")]
    InconsistentCounts(String),
    #[error("size cap exceeded: {0}")]
    SizeCap(String),
}

fn format_issues(issues: &[ValidationIssue]) -> String {
    issues
        .iter()
        .map(|i| i.to_string())
        .collect::<Vec<_>>()
        .join("; ")
}
