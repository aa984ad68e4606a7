//! The finite abelian group U, `(F_q[x]/(m))^*` modulo constants.
//!
//! For monic irreducible m the residue ring is a field, every nonzero residue
//! is a unit, and quotienting by F_q^* leaves exactly one monic representative
//! per class. U is cyclic of order (q^deg(m) - 1)/(q - 1); for q = 2 the
//! constant subgroup is trivial and the quotient is the full group F_16^* in
//! the headline case.

use std::sync::Arc;

use crate::error::Error;
use crate::field::FieldChar;
use crate::poly::{prime_divisors, Poly};

/// Residue ring size cap: q^deg(m) <= 2^48 keeps every exponent and the
/// trial-division factorization of the unit order comfortably in u64.
const MAX_RESIDUES: u64 = 1 << 48;

/// Shared context for arithmetic in U: the modulus, the group order, and its
/// prime factorization (computed once; `order` and the split test need it on
/// every call).
#[derive(Debug)]
pub struct ResidueCtx {
    field: FieldChar,
    modulus: Poly,
    unit_order: u64,
    order_factors: Vec<(u64, u32)>,
}

impl ResidueCtx {
    /// Validates that `modulus` is monic irreducible and within the size cap.
    pub fn new(modulus: Poly) -> Result<Arc<Self>, Error> {
        if !modulus.is_monic() {
            return Err(Error::ModulusNotMonic);
        }
        let d = match modulus.degree() {
            None | Some(0) => return Err(Error::ConstantModulus),
            Some(d) => d as u32,
        };
        if !modulus.is_irreducible()? {
            return Err(Error::ModulusReducible);
        }
        let field = modulus.field();
        let q = field.q64();
        let residues = q
            .checked_pow(d)
            .filter(|&r| r <= MAX_RESIDUES)
            .ok_or_else(|| Error::SizeCap(format!("residue ring has more than 2^48 elements ({q}^{d})")))?;
        let unit_order = (residues - 1) / (q - 1);
        let order_factors = factorize(unit_order);
        Ok(Arc::new(Self { field, modulus, unit_order, order_factors }))
    }

    pub fn field(&self) -> FieldChar {
        self.field
    }

    pub fn modulus(&self) -> &Poly {
        &self.modulus
    }

    /// |U| = (q^deg(m) - 1)/(q - 1).
    pub fn unit_order(&self) -> u64 {
        self.unit_order
    }

    pub fn order_factors(&self) -> &[(u64, u32)] {
        &self.order_factors
    }

    /// The class of `f`; requires `f` nonzero mod m.
    ///
    /// Reduces mod m and rescales to the monic representative, which
    /// implements the quotient by constants uniformly in q (a no-op for
    /// q = 2).
    pub fn canonical(self: &Arc<Self>, f: &Poly) -> Result<UnitClass, Error> {
        if f.field() != self.field {
            return Err(Error::FieldMismatch {
                left: self.field.q64(),
                right: f.field().q64(),
            });
        }
        let r = f.rem(&self.modulus)?;
        let rep = r.monic().ok_or(Error::ZeroResidue)?;
        Ok(UnitClass { ctx: Arc::clone(self), rep })
    }

    /// The class of the constants.
    pub fn identity(self: &Arc<Self>) -> UnitClass {
        UnitClass {
            ctx: Arc::clone(self),
            rep: Poly::one(self.field),
        }
    }

    /// All classes, representatives in ascending lexicographic order.
    /// Intended for small contexts (diagnostics and exhaustive tests).
    pub fn all_classes(self: &Arc<Self>) -> Vec<UnitClass> {
        let d = self.modulus.degree().unwrap();
        let q = self.field.q64();
        let mut out = Vec::with_capacity(self.unit_order as usize);
        let mut count_monic = 0u64;
        let total = q.pow(d as u32);
        for k in 1..total {
            let mut coeffs = Vec::with_capacity(d);
            let mut v = k;
            for _ in 0..d {
                coeffs.push((v % q) as u16);
                v /= q;
            }
            let p = Poly::from_coeffs(self.field, coeffs);
            if p.is_monic() {
                count_monic += 1;
                out.push(UnitClass { ctx: Arc::clone(self), rep: p });
            }
        }
        debug_assert_eq!(count_monic, self.unit_order);
        out
    }

    fn same_ctx(&self, other: &Self) -> Result<(), Error> {
        if self.field == other.field && self.modulus == other.modulus {
            Ok(())
        } else {
            Err(Error::ContextMismatch)
        }
    }
}

/// An element of U: the unique monic representative of a residue class
/// modulo constants.
#[derive(Clone, Debug)]
pub struct UnitClass {
    ctx: Arc<ResidueCtx>,
    rep: Poly,
}

impl PartialEq for UnitClass {
    fn eq(&self, other: &Self) -> bool {
        self.rep == other.rep
            && self.ctx.modulus == other.ctx.modulus
            && self.ctx.field == other.ctx.field
    }
}

impl Eq for UnitClass {}

impl UnitClass {
    pub fn rep(&self) -> &Poly {
        &self.rep
    }

    pub fn ctx(&self) -> &Arc<ResidueCtx> {
        &self.ctx
    }

    pub fn is_identity(&self) -> bool {
        self.rep.is_one()
    }

    pub fn mul(&self, other: &Self) -> Result<Self, Error> {
        self.ctx.same_ctx(&other.ctx)?;
        let prod = (&self.rep * &other.rep).rem(&self.ctx.modulus)?;
        Ok(Self {
            ctx: Arc::clone(&self.ctx),
            rep: prod.monic().expect("product of units is a unit"),
        })
    }

    pub fn inv(&self) -> Self {
        let inv = Poly::inverse_mod(&self.rep, &self.ctx.modulus)
            .expect("representative is coprime to the modulus");
        Self {
            ctx: Arc::clone(&self.ctx),
            rep: inv.monic().expect("inverse of a unit is a unit"),
        }
    }

    /// `self^e` by square-and-multiply; negative exponents go through the
    /// inverse.
    pub fn pow(&self, e: i64) -> Self {
        let base = if e < 0 { self.inv() } else { self.clone() };
        let rep = Poly::powmod(&base.rep, e.unsigned_abs(), &self.ctx.modulus)
            .expect("context modulus is nonconstant");
        Self {
            ctx: Arc::clone(&self.ctx),
            rep: rep.monic().expect("power of a unit is a unit"),
        }
    }

    fn pow_u64(&self, e: u64) -> Self {
        let rep = Poly::powmod(&self.rep, e, &self.ctx.modulus)
            .expect("context modulus is nonconstant");
        Self {
            ctx: Arc::clone(&self.ctx),
            rep: rep.monic().expect("power of a unit is a unit"),
        }
    }

    /// Exact multiplicative order, by stripping primes from |U| (Lagrange
    /// bounds the order by |U|, the stored factorization does the rest).
    pub fn order(&self) -> u64 {
        let mut t = self.ctx.unit_order;
        for &(p, _) in &self.ctx.order_factors {
            while t.is_multiple_of(p) && self.pow_u64(t / p).is_identity() {
                t /= p;
            }
        }
        t
    }

    /// True iff `self^k` is the identity class.
    pub fn is_identity_power(&self, k: u64) -> bool {
        self.pow_u64(k).is_identity()
    }
}

fn factorize(mut n: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut d = 2u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            let mut mult = 0;
            while n.is_multiple_of(d) {
                n /= d;
                mult += 1;
            }
            out.push((d, mult));
        }
        d += 1;
    }
    if n > 1 {
        out.push((n, 1));
    }
    debug_assert!(prime_divisors(out.iter().map(|&(p, _)| p).product::<u64>().max(1))
        .iter()
        .all(|p| out.iter().any(|&(q, _)| q == *p)));
    out
}
