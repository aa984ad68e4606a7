//! Splitting of places in a degree-n subextension of a ray class field of
//! K = F_q(x).
//!
//! The Galois group itself is never materialized. For a configuration with
//! conductor m, split place S of degree d, and a subextension degree n with
//! n | |U| and gcd(n, d) = 1, whether an unramified place P splits is decided
//! entirely inside U, `(F_q[x]/m)^*` modulo constants: form the unit part
//! z = P^d / S^(deg P) mod m (z = S^-1 for the infinite place) and test
//! whether z^(|U|/n) is trivial. Raising to d is an automorphism of the
//! order-n quotient since gcd(d, n) = 1, so the test is equivalent to the
//! Frobenius of P landing in the index-n subgroup. The test is invariant
//! under z -> z^-1, so nothing here depends on the orientation of the
//! reciprocity map, and no signed Frobenius value is ever exposed.

use std::sync::Arc;

use crate::error::{Error, ValidationIssue};
use crate::field::FieldChar;
use crate::poly::Poly;
use crate::unit::{ResidueCtx, UnitClass};

/// Upper bound on deg S; keeps the total field degree d * |U| inside u64.
const MAX_SPLIT_DEGREE: usize = 1 << 15;

/// A place of the rational function field K = F_q(x): a monic irreducible
/// polynomial or the infinite place.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PlaceK {
    Finite(Poly),
    Infinity,
}

impl PlaceK {
    /// Wraps a finite place, validating monic irreducibility.
    pub fn finite(p: Poly) -> Result<Self, Error> {
        if !p.is_monic() {
            return Err(Error::ModulusNotMonic);
        }
        if !p.is_irreducible()? {
            return Err(Error::ModulusReducible);
        }
        Ok(Self::Finite(p))
    }

    /// Degree of the residue field over F_q; the infinite place is rational.
    pub fn degree(&self) -> usize {
        match self {
            Self::Finite(p) => p.degree().expect("finite places are nonconstant"),
            Self::Infinity => 1,
        }
    }
}

impl std::fmt::Display for PlaceK {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Self::Finite(p) => write!(f, "{p}"),
            Self::Infinity => write!(f, "infinity"),
        }
    }
}

/// All places of K of degree at most `max_degree`, in reporting order:
/// finite places of degree 1 in lexicographic order, then the infinite
/// place, then each higher degree in lexicographic order.
pub fn places_up_to(field: FieldChar, max_degree: usize) -> Vec<PlaceK> {
    let mut out = Vec::new();
    for d in 1..=max_degree {
        out.extend(Poly::monic_irreducibles(field, d).into_iter().map(PlaceK::Finite));
        if d == 1 {
            out.push(PlaceK::Infinity);
        }
    }
    out
}

/// A validated ray class field configuration: conductor m, split place S,
/// and the derived constants deg S, |U|, and the total degree deg S * |U|.
#[derive(Clone, Debug)]
pub struct RayClassField {
    ctx: Arc<ResidueCtx>,
    split_place: Poly,
    split_degree: u64,
    total_degree: u64,
}

impl RayClassField {
    pub fn new(conductor: Poly, split_place: Poly) -> Result<Self, Error> {
        let mut issues = Vec::new();
        let conductor_ok = conductor.is_monic()
            && conductor.degree().is_some_and(|d| d >= 1)
            && conductor.is_irreducible().unwrap_or(false);
        if !conductor_ok {
            issues.push(ValidationIssue::ConductorNotIrreducible);
        }
        let split_ok = split_place.is_monic()
            && split_place.degree().is_some_and(|d| d >= 1)
            && split_place.is_irreducible().unwrap_or(false);
        if !split_ok {
            issues.push(ValidationIssue::SplitPlaceNotIrreducible);
        }
        if conductor.field() != split_place.field() {
            issues.push(ValidationIssue::MixedCharacteristics);
            return Err(Error::Invalid(issues));
        }
        if conductor_ok && split_ok && conductor == split_place {
            issues.push(ValidationIssue::ConductorEqualsSplitPlace);
        }
        let split_degree = split_place.degree().unwrap_or(0) as u64;
        if split_degree as usize > MAX_SPLIT_DEGREE {
            issues.push(ValidationIssue::SizeCapExceeded(format!(
                "split place degree {split_degree} exceeds {MAX_SPLIT_DEGREE}"
            )));
        }
        if !issues.is_empty() {
            return Err(Error::Invalid(issues));
        }
        let ctx = ResidueCtx::new(conductor).map_err(|e| match e {
            Error::SizeCap(msg) => Error::Invalid(vec![ValidationIssue::SizeCapExceeded(msg)]),
            other => other,
        })?;
        let total_degree = split_degree.checked_mul(ctx.unit_order()).ok_or_else(|| {
            Error::Invalid(vec![ValidationIssue::SizeCapExceeded(
                "total field degree overflows u64".into(),
            )])
        })?;
        Ok(Self { ctx, split_place, split_degree, total_degree })
    }

    pub fn field(&self) -> FieldChar {
        self.ctx.field()
    }

    pub fn conductor(&self) -> &Poly {
        self.ctx.modulus()
    }

    pub fn split_place(&self) -> &Poly {
        &self.split_place
    }

    pub fn split_degree(&self) -> u64 {
        self.split_degree
    }

    pub fn unit_order(&self) -> u64 {
        self.ctx.unit_order()
    }

    pub fn ctx(&self) -> &Arc<ResidueCtx> {
        &self.ctx
    }

    /// [K_S^m : K] = deg S * |U|.
    pub fn field_degree(&self) -> u64 {
        self.total_degree
    }

    /// The unit part of the Frobenius class of `place`:
    /// `P^(deg S) / S^(deg P) mod m`, or `S^-1 mod m` for the infinite
    /// place. The conductor is ramified and has no unit part. The split
    /// place itself falls out of the general formula as the identity.
    pub fn unit_part(&self, place: &PlaceK) -> Result<UnitClass, Error> {
        let m = self.ctx.modulus();
        match place {
            PlaceK::Infinity => Ok(self.ctx.canonical(&self.split_place)?.inv()),
            PlaceK::Finite(p) => {
                if p == self.conductor() {
                    return Err(Error::RamifiedPlace);
                }
                let num = Poly::powmod(p, self.split_degree, m)?;
                let den = Poly::powmod(&self.split_place, place.degree() as u64, m)?;
                self.ctx.canonical(&num)?.mul(&self.ctx.canonical(&den)?.inv())
            }
        }
    }

    /// Validates a subextension degree against this configuration and
    /// returns the handle the splitting and counting operations hang off.
    /// Every violated condition is reported by name.
    pub fn validate(&self, spec: SubextensionSpec) -> Result<ValidatedConfig, Error> {
        let n = spec.n;
        let q = self.field().q64();
        let unit_order = self.unit_order();
        let mut issues = Vec::new();
        if n < 2 {
            issues.push(ValidationIssue::DegreeTooSmall { n });
        }
        if n == 0 || !unit_order.is_multiple_of(n) {
            issues.push(ValidationIssue::DegreeDoesNotDivideUnitOrder { n, unit_order });
        }
        if gcd(n, self.split_degree) != 1 {
            issues.push(ValidationIssue::DegreeSharesFactorWithSplitDegree {
                n,
                split_degree: self.split_degree,
            });
        }
        if gcd(n, q) != 1 {
            issues.push(ValidationIssue::WildRamification { n, q });
        }
        if !issues.is_empty() {
            return Err(Error::Invalid(issues));
        }
        let genus = tame_genus(self.field(), n, self.conductor().degree().unwrap())
            .expect("validated configurations are tame with even different degree");
        Ok(ValidatedConfig { rcf: self.clone(), n, cofactor: unit_order / n, genus })
    }
}

/// Degree of the subextension F/K. Constructed freely; all checking happens
/// in [`RayClassField::validate`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SubextensionSpec {
    n: u64,
}

impl SubextensionSpec {
    pub fn new(n: u64) -> Self {
        Self { n }
    }

    pub fn n(&self) -> u64 {
        self.n
    }
}

/// Decomposition data of a place of K in the degree-n subextension:
/// ramification index e, residue degree f, and the number of places above.
/// Always e * f * g_count = n, and e = 1 away from the conductor.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SplitReport {
    pub e: u64,
    pub f: u64,
    pub g_count: u64,
}

/// A configuration that passed [`RayClassField::validate`].
#[derive(Clone, Debug)]
pub struct ValidatedConfig {
    rcf: RayClassField,
    n: u64,
    cofactor: u64,
    genus: u64,
}

impl ValidatedConfig {
    /// The identity extension F = K (n = 1). Not reachable through
    /// `validate`; it exists as a self-test fixture for the place-counting
    /// pipeline, where it must reproduce the places of K itself.
    pub fn identity_extension(rcf: RayClassField) -> Self {
        let cofactor = rcf.unit_order();
        Self { rcf, n: 1, cofactor, genus: 0 }
    }

    pub fn rcf(&self) -> &RayClassField {
        &self.rcf
    }

    pub fn n(&self) -> u64 {
        self.n
    }

    /// g_F = 1 - n + (n - 1) * deg(m) / 2.
    pub fn genus(&self) -> u64 {
        self.genus
    }

    fn is_conductor(&self, place: &PlaceK) -> bool {
        matches!(place, PlaceK::Finite(p) if p == self.rcf.conductor())
    }

    /// True iff `place` splits completely in F/K: the unit part raised to
    /// |U|/n is trivial. For the headline parameters this is exactly the
    /// z^3-test.
    pub fn is_split(&self, place: &PlaceK) -> Result<bool, Error> {
        Ok(self.rcf.unit_part(place)?.is_identity_power(self.cofactor))
    }

    /// (e, f, g) of `place` in F/K. The conductor is totally ramified; any
    /// other place is unramified with f the order of the unit part in the
    /// degree-n quotient.
    pub fn decomposition(&self, place: &PlaceK) -> Result<SplitReport, Error> {
        if self.is_conductor(place) {
            return Ok(SplitReport { e: self.n, f: 1, g_count: 1 });
        }
        let u = self.rcf.unit_part(place)?;
        let f = u.pow(self.cofactor as i64).order();
        debug_assert_eq!(self.n % f, 0);
        Ok(SplitReport { e: 1, f, g_count: self.n / f })
    }
}

/// Genus of a tame cyclic degree-n extension of F_q(x) with all n-1
/// nontrivial characters of conductor m: from 2g - 2 = -2n + (n-1) deg(m),
/// g = 1 - n + (n-1) deg(m)/2. Rejects the wild case and odd different
/// degree.
pub fn tame_genus(field: FieldChar, n: u64, conductor_degree: usize) -> Result<u64, Error> {
    let q = field.q64();
    if n == 0 || gcd(n, q) != 1 {
        return Err(Error::Wild { n, q });
    }
    let different = (n - 1).checked_mul(conductor_degree as u64).ok_or_else(|| {
        Error::SizeCap("different degree overflows u64".into())
    })?;
    if different % 2 != 0 {
        return Err(Error::GenusParity { n, conductor_degree: conductor_degree as u64 });
    }
    let g = 1 + different as i128 / 2 - n as i128;
    assert!(g >= 0, "genus formula went negative; conductor degree too small for n = {n}");
    Ok(g as u64)
}

pub(crate) fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}
