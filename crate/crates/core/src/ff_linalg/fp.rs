//! Arithmetic in the prime field F_p.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::error::{Error, Result};

/// Largest supported characteristic (exclusive). Keeping p below 2^16 lets
/// every product of two reduced entries fit in 32 bits, so dot products can
/// be accumulated in a `u64` without intermediate reduction.
pub const MAX_PRIME: u32 = 1 << 16;

/// Returns true when `p` is an odd prime.
pub fn is_odd_prime(p: u32) -> bool {
    if p < 3 || p.is_multiple_of(2) {
        return false;
    }
    let mut d = 3u32;
    while d * d <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 2;
    }
    true
}

/// Validates that `p` is a supported characteristic.
pub fn check_prime(p: u32) -> Result<()> {
    if is_odd_prime(p) && p < MAX_PRIME {
        Ok(())
    } else {
        Err(Error::InvalidPrime(p))
    }
}

#[inline]
pub fn add(a: u32, b: u32, p: u32) -> u32 {
    let s = a + b;
    if s >= p {
        s - p
    } else {
        s
    }
}

#[inline]
pub fn sub(a: u32, b: u32, p: u32) -> u32 {
    if a >= b {
        a - b
    } else {
        a + p - b
    }
}

#[inline]
pub fn neg(a: u32, p: u32) -> u32 {
    if a == 0 {
        0
    } else {
        p - a
    }
}

#[inline]
pub fn mul(a: u32, b: u32, p: u32) -> u32 {
    ((a as u64 * b as u64) % p as u64) as u32
}

/// Multiplicative inverse of a nonzero element.
pub fn inv(a: u32, p: u32) -> u32 {
    assert!(!a.is_multiple_of(p), "inverse of zero in F_{p}");
    let (mut r0, mut r1) = (p as i64, (a % p) as i64);
    let (mut s0, mut s1) = (0i64, 1i64);
    while r1 != 0 {
        let q = r0 / r1;
        (r0, r1) = (r1, r0 - q * r1);
        (s0, s1) = (s1, s0 - q * s1);
    }
    s0.rem_euclid(p as i64) as u32
}

/// Reduces a signed integer into [0, p).
#[inline]
pub fn from_i64(x: i64, p: u32) -> u32 {
    x.rem_euclid(p as i64) as u32
}

/// Symmetric representative in (-p/2, p/2], handy for printing signs.
pub fn to_signed(a: u32, p: u32) -> i64 {
    if a > p / 2 {
        a as i64 - p as i64
    } else {
        a as i64
    }
}

/// An element of F_p carrying its characteristic.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct Fp {
    value: u32,
    p: u32,
}

impl Fp {
    pub fn new(value: i64, p: u32) -> Self {
        Fp { value: from_i64(value, p), p }
    }

    pub fn zero(p: u32) -> Self {
        Fp { value: 0, p }
    }

    pub fn one(p: u32) -> Self {
        Fp { value: 1, p }
    }

    pub fn value(self) -> u32 {
        self.value
    }

    pub fn p(self) -> u32 {
        self.p
    }

    pub fn is_zero(self) -> bool {
        self.value == 0
    }

    /// Inverse, or `None` for zero.
    pub fn inv(self) -> Option<Fp> {
        if self.value == 0 {
            None
        } else {
            Some(Fp { value: inv(self.value, self.p), p: self.p })
        }
    }

    /// Division, defined only for a nonzero divisor.
    pub fn checked_div(self, other: Fp) -> Option<Fp> {
        other.inv().map(|o| self * o)
    }

    pub fn pow(self, mut e: u64) -> Fp {
        let mut base = self;
        let mut acc = Fp::one(self.p);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * base;
            }
            base = base * base;
            e >>= 1;
        }
        acc
    }
}

impl fmt::Debug for Fp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} (mod {})", self.value, self.p)
    }
}

impl fmt::Display for Fp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.value)
    }
}

impl Add for Fp {
    type Output = Fp;
    fn add(self, o: Fp) -> Fp {
        debug_assert_eq!(self.p, o.p);
        Fp { value: add(self.value, o.value, self.p), p: self.p }
    }
}

impl Sub for Fp {
    type Output = Fp;
    fn sub(self, o: Fp) -> Fp {
        debug_assert_eq!(self.p, o.p);
        Fp { value: sub(self.value, o.value, self.p), p: self.p }
    }
}

impl Mul for Fp {
    type Output = Fp;
    fn mul(self, o: Fp) -> Fp {
        debug_assert_eq!(self.p, o.p);
        Fp { value: mul(self.value, o.value, self.p), p: self.p }
    }
}

impl Neg for Fp {
    type Output = Fp;
    fn neg(self) -> Fp {
        Fp { value: neg(self.value, self.p), p: self.p }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn primes() {
        assert!(is_odd_prime(3) && is_odd_prime(5) && is_odd_prime(11));
        assert!(!is_odd_prime(2) && !is_odd_prime(9) && !is_odd_prime(1));
        assert!(check_prime(65537).is_err());
    }

    #[test]
    fn inverses() {
        for p in [3u32, 5, 7, 11, 101] {
            for a in 1..p {
                assert_eq!(mul(a, inv(a, p), p), 1);
            }
        }
    }

    #[test]
    fn element_ops() {
        let a = Fp::new(3, 7);
        let b = Fp::new(-2, 7);
        assert_eq!((a + b).value(), 1);
        assert_eq!((a - b).value(), 5);
        assert_eq!((a * b).value(), 1);
        assert_eq!((-a).value(), 4);
        assert_eq!(a.checked_div(Fp::zero(7)), None);
        assert_eq!(a.pow(6).value(), 1);
    }
}
