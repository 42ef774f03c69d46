//! Arithmetic in the residue ring `Z/p^alpha`.

use crate::error::{Error, Result};
use serde::{Deserialize, Serialize};

/// The coefficient ring `Z/p^alpha` with `p` prime and `p^alpha < 2^63`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct RingSpec {
    pub p: u64,
    pub alpha: u32,
    pub modulus: u64,
}

/// An element of `Z/p^alpha`, always kept in `[0, modulus)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Residue(pub u64);

impl RingSpec {
    pub fn new(p: u64, alpha: u32) -> Result<Self> {
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        if alpha == 0 {
            return Err(Error::ZeroAlpha);
        }
        let modulus = checked_pow(p, alpha)
            .filter(|&m| m < 1 << 63)
            .ok_or(Error::ModulusTooLarge { p, alpha })?;
        Ok(RingSpec { p, alpha, modulus })
    }

    /// The same prime at a different exponent.
    pub fn with_alpha(&self, alpha: u32) -> Result<Self> {
        RingSpec::new(self.p, alpha)
    }

    /// `p^k`, for `k <= alpha`.
    pub fn p_pow(&self, k: u32) -> u64 {
        self.p.pow(k)
    }

    pub fn residue(&self, v: i128) -> Residue {
        Residue(v.rem_euclid(self.modulus as i128) as u64)
    }

    pub fn is_unit(&self, a: Residue) -> bool {
        !a.0.is_multiple_of(self.p)
    }
}

/// Trial division primality test.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n.is_multiple_of(2) {
        return n == 2;
    }
    let mut d = 3u64;
    while d.saturating_mul(d) <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 2;
    }
    true
}

pub fn checked_pow(base: u64, exp: u32) -> Option<u64> {
    let mut acc: u64 = 1;
    for _ in 0..exp {
        acc = acc.checked_mul(base)?;
    }
    Some(acc)
}

#[inline]
pub fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    if m <= 1 << 32 {
        (a * b) % m
    } else {
        ((a as u128 * b as u128) % m as u128) as u64
    }
}

#[inline]
pub fn add_mod(a: u64, b: u64, m: u64) -> u64 {
    let s = a + b;
    if s >= m {
        s - m
    } else {
        s
    }
}

#[inline]
pub fn sub_mod(a: u64, b: u64, m: u64) -> u64 {
    if a >= b {
        a - b
    } else {
        a + (m - b)
    }
}

/// `a^e mod m` by square-and-multiply.
pub fn pow_mod_u64(a: u64, mut e: u64, m: u64) -> u64 {
    let mut base = a % m;
    let mut acc = 1 % m;
    while e > 0 {
        if e & 1 == 1 {
            acc = mul_mod(acc, base, m);
        }
        base = mul_mod(base, base, m);
        e >>= 1;
    }
    acc
}

/// Inverse of `a` modulo `m`, if `gcd(a, m) = 1`.
pub fn inv_mod_u64(a: u64, m: u64) -> Option<u64> {
    let (mut r0, mut r1) = (m as i128, (a % m) as i128);
    let (mut t0, mut t1) = (0i128, 1i128);
    while r1 != 0 {
        let q = r0 / r1;
        (r0, r1) = (r1, r0 - q * r1);
        (t0, t1) = (t1, t0 - q * t1);
    }
    if r0 != 1 {
        return None;
    }
    Some(t0.rem_euclid(m as i128) as u64)
}

pub fn inv(a: Residue, ring: &RingSpec) -> Result<Residue> {
    if a.0.is_multiple_of(ring.p) {
        return Err(Error::NonUnit {
            value: a.0,
            modulus: ring.modulus,
        });
    }
    inv_mod_u64(a.0, ring.modulus)
        .map(Residue)
        .ok_or(Error::NonUnit {
            value: a.0,
            modulus: ring.modulus,
        })
}

pub fn pow_mod(a: Residue, e: u64, ring: &RingSpec) -> Residue {
    Residue(pow_mod_u64(a.0, e, ring.modulus))
}

/// p-adic valuation of `n`; `None` stands for infinity (`n = 0`).
pub fn valuation(n: i128, p: u64) -> Option<u32> {
    if n == 0 {
        return None;
    }
    let p = p as i128;
    let mut n = n;
    let mut e = 0;
    while n % p == 0 {
        n /= p;
        e += 1;
    }
    Some(e)
}

/// `binom(n, k) mod m`, via Pascal's rule on `u64` residues.
pub fn binomial_mod(n: u64, k: u64, m: u64) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k) as usize;
    let mut row = vec![0u64; k + 1];
    row[0] = 1 % m;
    for i in 1..=n as usize {
        for j in (1..=k.min(i)).rev() {
            row[j] = add_mod(row[j], row[j - 1], m);
        }
    }
    row[k]
}

/// Largest `e` with `p^e <= n`, for `n >= 1`.
pub fn floor_log(n: u64, p: u64) -> u32 {
    assert!(n >= 1 && p >= 2);
    let mut e = 0;
    let mut v = n;
    while v >= p {
        v /= p;
        e += 1;
    }
    e
}

/// Smallest `e` with `p^e >= n`, for `n >= 1`.
pub fn ceil_log(n: u64, p: u64) -> u32 {
    assert!(n >= 1 && p >= 2);
    let mut e = 0;
    let mut v: u128 = 1;
    while v < n as u128 {
        v *= p as u128;
        e += 1;
    }
    e
}

pub fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

pub fn lcm(a: u64, b: u64) -> u64 {
    if a == 0 || b == 0 {
        0
    } else {
        a / gcd(a, b) * b
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn r8() -> RingSpec {
        RingSpec::new(2, 3).unwrap()
    }

    #[test]
    fn inverses() {
        assert_eq!(inv(Residue(1), &r8()).unwrap(), Residue(1));
        assert_eq!(inv(Residue(3), &r8()).unwrap(), Residue(3));
        assert!(matches!(inv(Residue(2), &r8()), Err(Error::NonUnit { .. })));
    }

    #[test]
    fn valuations() {
        assert_eq!(valuation(8, 2), Some(3));
        assert_eq!(valuation(6, 3), Some(1));
        assert_eq!(valuation(0, 5), None);
        assert_eq!(valuation(-12, 2), Some(2));
    }

    #[test]
    fn powers() {
        assert_eq!(pow_mod(Residue(3), 0, &r8()), Residue(1));
        let r4 = RingSpec::new(2, 2).unwrap();
        assert_eq!(pow_mod(Residue(3), 2, &r4), Residue(1));
        assert_eq!(pow_mod(Residue(2), 3, &r8()), Residue(0));
    }

    #[test]
    fn ring_validation() {
        assert_eq!(RingSpec::new(4, 2), Err(Error::NotPrime(4)));
        assert_eq!(RingSpec::new(2, 0), Err(Error::ZeroAlpha));
        assert!(RingSpec::new(2, 62).is_ok());
        assert!(matches!(
            RingSpec::new(2, 63),
            Err(Error::ModulusTooLarge { .. })
        ));
        assert!(RingSpec::new(1_000_003, 3).is_ok());
    }

    #[test]
    fn logs_and_binomials() {
        assert_eq!(floor_log(1, 2), 0);
        assert_eq!(floor_log(8, 2), 3);
        assert_eq!(floor_log(9, 2), 3);
        assert_eq!(ceil_log(1, 3), 0);
        assert_eq!(ceil_log(9, 3), 2);
        assert_eq!(ceil_log(10, 3), 3);
        assert_eq!(binomial_mod(10, 3, 1000), 120);
        assert_eq!(binomial_mod(4, 2, 4), 2);
    }

    proptest! {
        #[test]
        fn inverse_is_involutive(a in 0u64..1_000_000, p in prop::sample::select(vec![2u64, 3, 5, 7]), alpha in 1u32..6) {
            let ring = RingSpec::new(p, alpha).unwrap();
            let a = Residue(a % ring.modulus);
            if ring.is_unit(a) {
                let b = inv(a, &ring).unwrap();
                prop_assert_eq!(mul_mod(a.0, b.0, ring.modulus), 1 % ring.modulus);
                prop_assert_eq!(inv(b, &ring).unwrap(), a);
                let phi = ring.modulus - ring.modulus / p;
                prop_assert_eq!(pow_mod(a, phi, &ring), Residue(1 % ring.modulus));
            }
        }

        #[test]
        fn valuation_is_additive(m in 1i128..100_000, n in 1i128..100_000, p in prop::sample::select(vec![2u64, 3, 5])) {
            prop_assert_eq!(valuation(m * n, p).unwrap(), valuation(m, p).unwrap() + valuation(n, p).unwrap());
        }

        #[test]
        fn mul_mod_matches_wide(a in any::<u64>(), b in any::<u64>(), m in 2u64..(1 << 63)) {
            let (a, b) = (a % m, b % m);
            prop_assert_eq!(mul_mod(a, b, m) as u128, (a as u128 * b as u128) % m as u128);
        }
    }
}
