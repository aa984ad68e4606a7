//! The prime coefficient field F_q.

use crate::error::Error;

/// A validated prime field characteristic, 2 <= q < 2^16.
///
/// All polynomial and residue arithmetic in this crate is tagged with one of
/// these; mixing values from different fields is an error.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct FieldChar {
    q: u16,
}

impl FieldChar {
    /// Validates primality by trial division.
    pub fn new(q: u16) -> Result<Self, Error> {
        if q < 2 {
            return Err(Error::NotPrime(q as u64));
        }
        let mut d = 2u32;
        while d * d <= q as u32 {
            if (q as u32).is_multiple_of(d) {
                return Err(Error::NotPrime(q as u64));
            }
            d += 1;
        }
        Ok(Self { q })
    }

    pub fn q(self) -> u16 {
        self.q
    }

    pub fn q64(self) -> u64 {
        self.q as u64
    }

    pub(crate) fn add(self, a: u16, b: u16) -> u16 {
        let s = a as u32 + b as u32;
        (s % self.q as u32) as u16
    }

    pub(crate) fn sub(self, a: u16, b: u16) -> u16 {
        let s = a as u32 + self.q as u32 - b as u32;
        (s % self.q as u32) as u16
    }

    pub(crate) fn neg(self, a: u16) -> u16 {
        if a == 0 {
            0
        } else {
            self.q - a
        }
    }

    pub(crate) fn mul(self, a: u16, b: u16) -> u16 {
        (a as u32 * b as u32 % self.q as u32) as u16
    }

    /// Multiplicative inverse via Fermat: a^(q-2) mod q. Panics on zero.
    pub(crate) fn inv(self, a: u16) -> u16 {
        assert!(a != 0, "inverse of zero in F_{}", self.q);
        let mut result = 1u32;
        let mut base = a as u32 % self.q as u32;
        let mut e = self.q as u32 - 2;
        while e > 0 {
            if e & 1 == 1 {
                result = result * base % self.q as u32;
            }
            base = base * base % self.q as u32;
            e >>= 1;
        }
        result as u16
    }
}
