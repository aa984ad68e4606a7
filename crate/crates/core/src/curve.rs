//! Place-count tables of the subextension F, the L-polynomial reconstructed
//! from them, the class number h = L(1), and the q = 2 genus-4 criterion.
//!
//! The class number is computed along two independent paths, the criterion
//! on the raw place counts and L(1) via Newton's identities, and a
//! certificate records both. A disagreement is a first-class result: the
//! certificate is marked invalid rather than panicking.

use serde::Serialize;

use crate::error::Error;
use crate::field::FieldChar;
use crate::poly::Poly;
use crate::rayclass::{places_up_to, PlaceK, ValidatedConfig};

/// Enumeration cap for count_places: q^D residue vectors per degree.
const MAX_ENUMERATION: u64 = 1 << 22;

/// `B[d]` = number of places of F of degree d, 1 <= d <= max degree, with
/// per-degree provenance (how much came from the ramified conductor and from
/// the designated split place).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PlaceCountTable {
    rows: Vec<DegreeCount>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct DegreeCount {
    pub total: u64,
    pub from_conductor: u64,
    pub from_split_place: u64,
}

impl PlaceCountTable {
    /// Raw table from totals alone (provenance zeroed); for feeding
    /// externally supplied counts into the L-polynomial machinery.
    pub fn from_counts(counts: &[u64]) -> Self {
        Self {
            rows: counts
                .iter()
                .map(|&total| DegreeCount { total, ..DegreeCount::default() })
                .collect(),
        }
    }

    pub fn max_degree(&self) -> usize {
        self.rows.len()
    }

    /// B_d; panics if d is out of range.
    pub fn count(&self, d: usize) -> u64 {
        self.rows[d - 1].total
    }

    pub fn counts(&self) -> Vec<u64> {
        self.rows.iter().map(|r| r.total).collect()
    }

    pub fn row(&self, d: usize) -> &DegreeCount {
        &self.rows[d - 1]
    }

    /// N_r = sum over d | r of d * B_d, for r = 1..=upto.
    pub fn point_counts(&self, upto: usize) -> Result<Vec<u64>, Error> {
        if upto > self.rows.len() {
            return Err(Error::TableTooShallow {
                need: upto as u64,
                have: self.rows.len() as u64,
            });
        }
        Ok((1..=upto)
            .map(|r| (1..=r).filter(|d| r % d == 0).map(|d| d as u64 * self.count(d)).sum())
            .collect())
    }
}

/// Counts places of F of degree <= `max_degree` by walking every place of K
/// of degree <= `max_degree`: a place P with decomposition (e, f, g) puts g
/// places of degree deg(P) * f above itself, and the conductor puts exactly
/// one place of degree deg(m) (totally ramified, f = 1).
pub fn count_places(cfg: &ValidatedConfig, max_degree: usize) -> Result<PlaceCountTable, Error> {
    let field = cfg.rcf().field();
    let q = field.q64();
    if let Some(d) = (1..=max_degree).find(|&d| {
        q.checked_pow(d as u32).is_none_or(|total| total > MAX_ENUMERATION)
    }) {
        return Err(Error::SizeCap(format!(
            "enumerating places of degree {d} needs {q}^{d} > 2^22 candidates"
        )));
    }
    let mut rows = vec![DegreeCount::default(); max_degree];
    let conductor = cfg.rcf().conductor().clone();
    let split_place = cfg.rcf().split_place().clone();
    for place in places_up_to(field, max_degree) {
        if matches!(&place, PlaceK::Finite(p) if p == &conductor) {
            let d = conductor.degree().unwrap();
            if d <= max_degree {
                rows[d - 1].total += 1;
                rows[d - 1].from_conductor += 1;
            }
            continue;
        }
        let report = cfg.decomposition(&place)?;
        let above = place.degree() * report.f as usize;
        if above <= max_degree {
            rows[above - 1].total += report.g_count;
            if matches!(&place, PlaceK::Finite(p) if p == &split_place) {
                rows[above - 1].from_split_place += report.g_count;
            }
        }
    }
    Ok(PlaceCountTable { rows })
}

/// The numerator of the zeta function of F: integer coefficients a_0..a_2g
/// with a_0 = 1, a_2g = q^g, and the functional equation
/// a_(2g-i) = q^(g-i) a_i. The class number is L(1).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LPolynomial {
    genus: u64,
    q: u64,
    coeffs: Vec<i128>,
}

impl LPolynomial {
    /// Reconstructs L from the first g point counts N_1..N_g.
    ///
    /// Power sums of the inverse roots are s_r = q^r + 1 - N_r; Newton's
    /// identities k e_k = sum_{i=1..k} (-1)^(i-1) e_(k-i) s_i give the
    /// elementary symmetric functions, a_i = (-1)^i e_i, and the functional
    /// equation fills in the upper half. A non-integer step means the
    /// supplied counts cannot come from a curve.
    pub fn from_point_counts(field: FieldChar, genus: u64, counts: &[u64]) -> Result<Self, Error> {
        let g = genus as usize;
        if counts.len() != g {
            return Err(Error::InconsistentCounts(format!(
                "need exactly {g} point counts, got {}",
                counts.len()
            )));
        }
        let q = field.q64() as i128;
        let overflow = || Error::SizeCap("L-polynomial coefficients overflow i128".into());
        let mut q_pow = Vec::with_capacity(g + 1);
        let mut acc = 1i128;
        q_pow.push(acc);
        for _ in 0..g {
            acc = acc.checked_mul(q).ok_or_else(overflow)?;
            q_pow.push(acc);
        }
        let s: Vec<i128> = (1..=g)
            .map(|r| {
                q_pow[r]
                    .checked_add(1)
                    .and_then(|v| v.checked_sub(counts[r - 1] as i128))
                    .ok_or_else(overflow)
            })
            .collect::<Result<_, _>>()?;
        let mut e = vec![1i128];
        for k in 1..=g {
            let mut sum = 0i128;
            for i in 1..=k {
                let term = e[k - i].checked_mul(s[i - 1]).ok_or_else(overflow)?;
                sum = if i % 2 == 1 {
                    sum.checked_add(term).ok_or_else(overflow)?
                } else {
                    sum.checked_sub(term).ok_or_else(overflow)?
                };
            }
            if sum % k as i128 != 0 {
                return Err(Error::InconsistentCounts(format!(
                    "Newton step {k} is not an integer"
                )));
            }
            e.push(sum / k as i128);
        }
        let mut coeffs = vec![0i128; 2 * g + 1];
        for (i, &ei) in e.iter().enumerate() {
            coeffs[i] = if i % 2 == 0 { ei } else { -ei };
        }
        for i in (0..g).rev() {
            coeffs[2 * g - i] = q_pow[g - i].checked_mul(coeffs[i]).ok_or_else(overflow)?;
        }
        let l = Self { genus, q: field.q64(), coeffs };
        debug_assert!(l.functional_equation_holds());
        Ok(l)
    }

    pub fn genus(&self) -> u64 {
        self.genus
    }

    /// a_0..a_2g.
    pub fn coefficients(&self) -> &[i128] {
        &self.coeffs
    }

    pub fn functional_equation_holds(&self) -> bool {
        let g = self.genus as usize;
        let q = self.q as i128;
        self.coeffs[0] == 1
            && (0..=g).all(|i| {
                q.checked_pow((g - i) as u32)
                    .is_some_and(|p| self.coeffs[2 * g - i] == p * self.coeffs[i])
            })
    }

    /// h = L(1) = sum of the coefficients; it is the class number, so a
    /// nonpositive value means the input counts were inconsistent.
    pub fn class_number(&self) -> Result<u64, Error> {
        let mut sum = 0i128;
        for &a in &self.coeffs {
            sum = sum
                .checked_add(a)
                .ok_or_else(|| Error::SizeCap("L(1) overflows i128".into()))?;
        }
        if sum < 1 {
            return Err(Error::InconsistentCounts(format!(
                "class number L(1) = {sum} is not positive"
            )));
        }
        u64::try_from(sum)
            .map_err(|_| Error::SizeCap("class number overflows u64".into()))
    }
}

/// The q = 2, genus-4 criterion: h = 1 iff the field has exactly one place
/// of degree 4 and none of degree 1, 2, or 3. Scoped to exactly those
/// parameters; no other (q, genus) pair is covered.
pub fn madan_queen_check(
    field: FieldChar,
    genus: u64,
    table: &PlaceCountTable,
) -> Result<bool, Error> {
    if field.q() != 2 || genus != 4 {
        return Err(Error::CriterionInapplicable { q: field.q64(), genus });
    }
    if table.max_degree() < 4 {
        return Err(Error::TableTooShallow { need: 4, have: table.max_degree() as u64 });
    }
    Ok((1..=4).map(|d| table.count(d)).collect::<Vec<_>>() == [0, 0, 0, 1])
}

/// Verdict of a verification run; both class-number paths must agree or the
/// certificate is marked invalid.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Verdict {
    #[serde(rename = "class number one")]
    ClassNumberOne,
    #[serde(rename = "class number greater than one")]
    ClassNumberGreaterThanOne,
    #[serde(rename = "invalid")]
    Invalid,
}

impl std::fmt::Display for Verdict {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Self::ClassNumberOne => write!(f, "class number one"),
            Self::ClassNumberGreaterThanOne => write!(f, "class number greater than one"),
            Self::Invalid => write!(f, "invalid"),
        }
    }
}

/// Input echo inside a certificate.
#[derive(Clone, Debug, Serialize)]
pub struct ConfigEcho {
    pub q: u64,
    pub m: Poly,
    #[serde(rename = "S")]
    pub s: Poly,
    pub n: u64,
}

/// One row of decomposition data in a certificate.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PlaceReport {
    pub place: String,
    pub degree: u64,
    pub e: u64,
    pub f: u64,
    pub g: u64,
}

/// The complete, serializable result of one verification run. Field order
/// is part of the golden-file format.
#[derive(Clone, Debug, Serialize)]
pub struct Certificate {
    pub config: ConfigEcho,
    pub field_degree: u64,
    pub genus: u64,
    pub places: Vec<PlaceReport>,
    pub counts: Vec<u64>,
    pub l_poly: Vec<i128>,
    pub class_number: u64,
    pub criterion: Option<bool>,
    pub verdict: Verdict,
    pub tool_version: String,
}

/// Runs the whole pipeline for a validated configuration: decomposition of
/// every place of K of degree <= genus, the place-count table, the
/// L-polynomial, h = L(1), and (for q = 2, genus 4) the place-count
/// criterion.
pub fn verify_counterexample(cfg: &ValidatedConfig) -> Result<Certificate, Error> {
    let rcf = cfg.rcf();
    let field = rcf.field();
    let genus = cfg.genus();
    let mut places = Vec::new();
    for place in places_up_to(field, genus as usize) {
        let report = cfg.decomposition(&place)?;
        places.push(PlaceReport {
            place: place.to_string(),
            degree: place.degree() as u64,
            e: report.e,
            f: report.f,
            g: report.g_count,
        });
    }
    let table = count_places(cfg, genus as usize)?;
    let point_counts = table.point_counts(genus as usize)?;
    let l_poly = LPolynomial::from_point_counts(field, genus, &point_counts)?;
    let class_number = l_poly.class_number()?;
    let criterion = if field.q() == 2 && genus == 4 {
        Some(madan_queen_check(field, genus, &table)?)
    } else {
        None
    };
    let verdict = match criterion {
        Some(c) if c != (class_number == 1) => Verdict::Invalid,
        _ if class_number == 1 => Verdict::ClassNumberOne,
        _ => Verdict::ClassNumberGreaterThanOne,
    };
    Ok(Certificate {
        config: ConfigEcho {
            q: field.q64(),
            m: rcf.conductor().clone(),
            s: rcf.split_place().clone(),
            n: cfg.n(),
        },
        field_degree: rcf.field_degree(),
        genus,
        places,
        counts: table.counts(),
        l_poly: l_poly.coefficients().to_vec(),
        class_number,
        criterion,
        verdict,
        tool_version: env!("CARGO_PKG_VERSION").to_string(),
    })
}
