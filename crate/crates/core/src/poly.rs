//! Dense polynomials over a prime field F_q, exact throughout.
//!
//! Coefficients are stored little-endian: `coeffs[i]` is the coefficient of
//! `x^i`, with no trailing zeros. The zero polynomial is the empty vector and
//! its degree is `None`, so it can never silently enter a degree formula.

use std::ops::{Add, Mul, Neg, Sub};

use crate::error::Error;
use crate::field::FieldChar;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Poly {
    field: FieldChar,
    coeffs: Vec<u16>,
}

impl Poly {
    /// Builds a polynomial from little-endian coefficients, reducing each
    /// entry mod q and trimming trailing zeros.
    pub fn from_coeffs(field: FieldChar, coeffs: impl IntoIterator<Item = u16>) -> Self {
        let q = field.q();
        let mut coeffs: Vec<u16> = coeffs.into_iter().map(|c| c % q).collect();
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        Self { field, coeffs }
    }

    pub fn zero(field: FieldChar) -> Self {
        Self { field, coeffs: Vec::new() }
    }

    pub fn one(field: FieldChar) -> Self {
        Self::constant(field, 1)
    }

    pub fn constant(field: FieldChar, c: u16) -> Self {
        Self::from_coeffs(field, [c])
    }

    /// The monomial `x`.
    pub fn x(field: FieldChar) -> Self {
        Self::from_coeffs(field, [0, 1])
    }

    /// `c * x^n`.
    pub fn monomial(field: FieldChar, c: u16, n: usize) -> Self {
        let mut coeffs = vec![0u16; n + 1];
        coeffs[n] = c;
        Self::from_coeffs(field, coeffs)
    }

    pub fn field(&self) -> FieldChar {
        self.field
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs == [1]
    }

    /// Coefficient of `x^i` (zero beyond the degree).
    pub fn coeff(&self, i: usize) -> u16 {
        self.coeffs.get(i).copied().unwrap_or(0)
    }

    pub fn coeffs(&self) -> &[u16] {
        &self.coeffs
    }

    pub fn leading_coeff(&self) -> Option<u16> {
        self.coeffs.last().copied()
    }

    pub fn is_monic(&self) -> bool {
        self.leading_coeff() == Some(1)
    }

    /// Scales by the inverse of the leading coefficient. `None` on zero.
    pub fn monic(&self) -> Option<Self> {
        let lc = self.leading_coeff()?;
        if lc == 1 {
            return Some(self.clone());
        }
        let inv = self.field.inv(lc);
        Some(self.scale(inv))
    }

    fn scale(&self, c: u16) -> Self {
        let coeffs: Vec<u16> = self.coeffs.iter().map(|&a| self.field.mul(a, c)).collect();
        Self::from_coeffs(self.field, coeffs)
    }

    fn same_field(&self, other: &Self) -> Result<(), Error> {
        if self.field == other.field {
            Ok(())
        } else {
            Err(Error::FieldMismatch {
                left: self.field.q64(),
                right: other.field.q64(),
            })
        }
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self, Error> {
        self.same_field(other)?;
        let n = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..n)
            .map(|i| self.field.add(self.coeff(i), other.coeff(i)))
            .collect::<Vec<_>>();
        Ok(Self::from_coeffs(self.field, coeffs))
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self, Error> {
        self.same_field(other)?;
        let n = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..n)
            .map(|i| self.field.sub(self.coeff(i), other.coeff(i)))
            .collect::<Vec<_>>();
        Ok(Self::from_coeffs(self.field, coeffs))
    }

    /// Schoolbook product; exact, `deg(fg) = deg f + deg g` for nonzero
    /// inputs since F_q has no zero divisors.
    pub fn checked_mul(&self, other: &Self) -> Result<Self, Error> {
        self.same_field(other)?;
        if self.is_zero() || other.is_zero() {
            return Ok(Self::zero(self.field));
        }
        let q = self.field.q64();
        let mut acc = vec![0u64; self.coeffs.len() + other.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            for (j, &b) in other.coeffs.iter().enumerate() {
                acc[i + j] += a as u64 * b as u64;
            }
        }
        let coeffs = acc.into_iter().map(|v| (v % q) as u16).collect::<Vec<_>>();
        Ok(Self::from_coeffs(self.field, coeffs))
    }

    /// Euclidean division: `self = q * b + r` with `deg r < deg b`.
    pub fn divrem(&self, b: &Self) -> Result<(Self, Self), Error> {
        self.same_field(b)?;
        let db = b.degree().ok_or(Error::DivisionByZero)?;
        let Some(da) = self.degree() else {
            return Ok((Self::zero(self.field), Self::zero(self.field)));
        };
        if da < db {
            return Ok((Self::zero(self.field), self.clone()));
        }
        let field = self.field;
        let lc_inv = field.inv(b.leading_coeff().unwrap());
        let mut rem = self.coeffs.clone();
        let mut quot = vec![0u16; da - db + 1];
        for k in (db..=da).rev() {
            let c = field.mul(rem[k], lc_inv);
            if c == 0 {
                continue;
            }
            quot[k - db] = c;
            for (i, &bc) in b.coeffs.iter().enumerate() {
                rem[k - db + i] = field.sub(rem[k - db + i], field.mul(c, bc));
            }
        }
        rem.truncate(db);
        Ok((Self::from_coeffs(field, quot), Self::from_coeffs(field, rem)))
    }

    pub fn rem(&self, b: &Self) -> Result<Self, Error> {
        Ok(self.divrem(b)?.1)
    }

    /// Extended Euclid: returns `(g, u, v)` with `g = u*a + v*b`, `g` monic.
    ///
    /// `xgcd(f, 0)` gives `(monic(f), lc(f)^-1, 0)`; both inputs zero is an
    /// error.
    pub fn xgcd(a: &Self, b: &Self) -> Result<(Self, Self, Self), Error> {
        a.same_field(b)?;
        if a.is_zero() && b.is_zero() {
            return Err(Error::BothZero);
        }
        let field = a.field;
        // invariants: r0 = u0*a + v0*b, r1 = u1*a + v1*b
        let (mut r0, mut u0, mut v0) = (a.clone(), Self::one(field), Self::zero(field));
        let (mut r1, mut u1, mut v1) = (b.clone(), Self::zero(field), Self::one(field));
        while !r1.is_zero() {
            let (q, r) = r0.divrem(&r1)?;
            let u = &u0 - &(&q * &u1);
            let v = &v0 - &(&q * &v1);
            (r0, u0, v0) = (r1, u1, v1);
            (r1, u1, v1) = (r, u, v);
        }
        let lc_inv = field.inv(r0.leading_coeff().unwrap());
        Ok((r0.scale(lc_inv), u0.scale(lc_inv), v0.scale(lc_inv)))
    }

    /// Monic gcd.
    pub fn gcd(a: &Self, b: &Self) -> Result<Self, Error> {
        Ok(Self::xgcd(a, b)?.0)
    }

    /// `base^e mod modulus` by square-and-multiply, O(log e) products.
    pub fn powmod(base: &Self, mut e: u64, modulus: &Self) -> Result<Self, Error> {
        base.same_field(modulus)?;
        if modulus.degree().is_none_or(|d| d == 0) {
            return Err(Error::ConstantModulus);
        }
        let mut result = Self::one(base.field);
        let mut acc = base.rem(modulus)?;
        while e > 0 {
            if e & 1 == 1 {
                result = (&result * &acc).rem(modulus)?;
            }
            acc = (&acc * &acc).rem(modulus)?;
            e >>= 1;
        }
        Ok(result)
    }

    /// Inverse of `a` modulo `m`; requires `gcd(a, m) = 1`.
    pub fn inverse_mod(a: &Self, m: &Self) -> Result<Self, Error> {
        a.same_field(m)?;
        if m.degree().is_none_or(|d| d == 0) {
            return Err(Error::ConstantModulus);
        }
        let r = a.rem(m)?;
        if r.is_zero() {
            return Err(Error::NotInvertible);
        }
        let (g, u, _) = Self::xgcd(&r, m)?;
        if !g.is_one() {
            return Err(Error::NotInvertible);
        }
        u.rem(m)
    }

    /// Rabin's test: `f` of degree n is irreducible over F_q iff
    /// `x^(q^n) ≡ x (mod f)` and `gcd(x^(q^(n/p)) - x, f) = 1` for every
    /// prime p | n.
    pub fn is_irreducible(&self) -> Result<bool, Error> {
        let n = match self.degree() {
            None | Some(0) => return Err(Error::ConstantPolynomial),
            Some(1) => return Ok(true),
            Some(n) => n,
        };
        let f = self.monic().unwrap();
        let q = self.field.q64();
        let x = Self::x(self.field);
        let primes = prime_divisors(n as u64);
        let mut h = x.rem(&f)?; // x^(q^i), starting at i = 0
        for i in 1..=n {
            h = Self::powmod(&h, q, &f)?;
            if i < n && n % i == 0 && primes.contains(&((n / i) as u64)) {
                let g = Self::gcd(&(&h - &x), &f)?;
                if g.degree() != Some(0) {
                    return Ok(false);
                }
            }
        }
        Ok((&h - &x).rem(&f)?.is_zero())
    }

    /// All monic irreducibles of degree `d`, in ascending lexicographic
    /// order of the coefficient vector (constant term least significant).
    /// The order is part of the contract: sweeps must be deterministic.
    pub fn monic_irreducibles(field: FieldChar, d: usize) -> Vec<Self> {
        assert!(d >= 1, "degree must be positive");
        let q = field.q64();
        let total = q.checked_pow(d as u32).expect("q^d overflows u64");
        let mut out = Vec::new();
        for k in 0..total {
            let mut coeffs = Vec::with_capacity(d + 1);
            let mut v = k;
            for _ in 0..d {
                coeffs.push((v % q) as u16);
                v /= q;
            }
            coeffs.push(1);
            let f = Self::from_coeffs(field, coeffs);
            if f.is_irreducible().unwrap() {
                out.push(f);
            }
        }
        out
    }
}

impl Add for &Poly {
    type Output = Poly;
    fn add(self, rhs: &Poly) -> Poly {
        self.checked_add(rhs).expect("polynomial field mismatch")
    }
}

impl Sub for &Poly {
    type Output = Poly;
    fn sub(self, rhs: &Poly) -> Poly {
        self.checked_sub(rhs).expect("polynomial field mismatch")
    }
}

impl Mul for &Poly {
    type Output = Poly;
    fn mul(self, rhs: &Poly) -> Poly {
        self.checked_mul(rhs).expect("polynomial field mismatch")
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        let coeffs = self.coeffs.iter().map(|&c| self.field.neg(c)).collect::<Vec<_>>();
        Poly::from_coeffs(self.field, coeffs)
    }
}

/// Distinct prime divisors by trial division.
pub(crate) fn prime_divisors(mut n: u64) -> Vec<u64> {
    let mut primes = Vec::new();
    let mut d = 2u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            primes.push(d);
            while n.is_multiple_of(d) {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        primes.push(n);
    }
    primes
}
