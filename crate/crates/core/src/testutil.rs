//! Deterministic helpers for the test suites.

use crate::field::FieldChar;
use crate::poly::Poly;

/// xorshift64*, good enough for exercising algebraic identities and fully
/// reproducible across platforms.
pub struct XorShift(u64);

impl XorShift {
    pub fn new(seed: u64) -> Self {
        Self(seed.max(1))
    }

    pub fn next(&mut self) -> u64 {
        let mut x = self.0;
        x ^= x << 13;
        x ^= x >> 7;
        x ^= x << 17;
        self.0 = x;
        x.wrapping_mul(0x2545_f491_4f6c_dd1d)
    }

    pub fn below(&mut self, bound: u64) -> u64 {
        self.next() % bound
    }
}

/// Random polynomial of degree at most `max_degree` (possibly zero).
pub fn random_poly(rng: &mut XorShift, field: FieldChar, max_degree: usize) -> Poly {
    let len = rng.below(max_degree as u64 + 2) as usize; // 0 = zero polynomial
    let coeffs: Vec<u16> = (0..len).map(|_| rng.below(field.q64()) as u16).collect();
    Poly::from_coeffs(field, coeffs)
}
