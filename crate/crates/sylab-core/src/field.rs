//! Prime fields `F_p` with `u32` element representation.

use thiserror::Error;

#[derive(Debug, Error, Clone, Copy, PartialEq, Eq)]
pub enum FieldError {
    #[error("modulus {0} is not prime")]
    NotPrime(u32),
    #[error("modulus {0} is out of range (need 2 <= p < 2^31)")]
    OutOfRange(u32),
}

/// The field `F_p` for a prime `2 <= p < 2^31`.
///
/// Elements are canonical residues in `[0, p)` stored as `u32`; all products
/// are taken through `u64`, so arithmetic never overflows.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct PrimeField {
    p: u32,
}

impl PrimeField {
    pub fn new(p: u32) -> Result<Self, FieldError> {
        if p < 2 || p > (1 << 31) - 1 {
            return Err(FieldError::OutOfRange(p));
        }
        if !is_prime(p) {
            return Err(FieldError::NotPrime(p));
        }
        Ok(PrimeField { p })
    }

    #[inline]
    pub fn modulus(&self) -> u32 {
        self.p
    }

    /// Canonical residue of an arbitrary signed integer.
    #[inline]
    pub fn reduce_i64(&self, x: i64) -> u32 {
        let p = self.p as i64;
        (((x % p) + p) % p) as u32
    }

    #[inline]
    pub fn reduce_u64(&self, x: u64) -> u32 {
        (x % self.p as u64) as u32
    }

    #[inline]
    pub fn add(&self, a: u32, b: u32) -> u32 {
        let s = a as u64 + b as u64;
        let p = self.p as u64;
        (if s >= p { s - p } else { s }) as u32
    }

    #[inline]
    pub fn sub(&self, a: u32, b: u32) -> u32 {
        if a >= b {
            a - b
        } else {
            a + self.p - b
        }
    }

    #[inline]
    pub fn neg(&self, a: u32) -> u32 {
        if a == 0 {
            0
        } else {
            self.p - a
        }
    }

    #[inline]
    pub fn mul(&self, a: u32, b: u32) -> u32 {
        ((a as u64 * b as u64) % self.p as u64) as u32
    }

    pub fn pow(&self, mut base: u32, mut exp: u64) -> u32 {
        let mut acc = 1u32;
        base %= self.p;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            exp >>= 1;
        }
        acc
    }

    /// Multiplicative inverse by extended Euclid. Panics on zero.
    pub fn inv(&self, a: u32) -> u32 {
        assert!(a != 0, "inverse of zero in F_{}", self.p);
        // Invariant: old_r = old_s * a (mod p).
        let (mut old_r, mut r) = (a as i64, self.p as i64);
        let (mut old_s, mut s) = (1i64, 0i64);
        while r != 0 {
            let q = old_r / r;
            let tmp_r = old_r - q * r;
            old_r = r;
            r = tmp_r;
            let tmp_s = old_s - q * s;
            old_s = s;
            s = tmp_s;
        }
        debug_assert_eq!(old_r, 1);
        self.reduce_i64(old_s)
    }

    #[inline]
    pub fn div(&self, a: u32, b: u32) -> u32 {
        self.mul(a, self.inv(b))
    }
}

fn is_prime(n: u32) -> bool {
    if n < 2 {
        return false;
    }
    if n % 2 == 0 {
        return n == 2;
    }
    let mut d = 3u32;
    while (d as u64) * (d as u64) <= n as u64 {
        if n % d == 0 {
            return false;
        }
        d += 2;
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_composites_and_out_of_range() {
        assert_eq!(PrimeField::new(1), Err(FieldError::OutOfRange(1)));
        assert_eq!(PrimeField::new(0), Err(FieldError::OutOfRange(0)));
        assert_eq!(PrimeField::new(4), Err(FieldError::NotPrime(4)));
        assert_eq!(PrimeField::new(91), Err(FieldError::NotPrime(91)));
        assert!(PrimeField::new(2).is_ok());
        assert!(PrimeField::new(2147483647).is_ok()); // 2^31 - 1 is prime
    }

    #[test]
    fn arithmetic_mod_7() {
        let f = PrimeField::new(7).unwrap();
        assert_eq!(f.add(5, 4), 2);
        assert_eq!(f.sub(2, 5), 4);
        assert_eq!(f.mul(3, 5), 1);
        assert_eq!(f.neg(0), 0);
        assert_eq!(f.neg(3), 4);
        assert_eq!(f.reduce_i64(-9), 5);
    }

    #[test]
    fn inverses() {
        for p in [2u32, 3, 5, 7, 31, 65537] {
            let f = PrimeField::new(p).unwrap();
            for a in 1..p.min(200) {
                assert_eq!(f.mul(a, f.inv(a)), 1, "a={a} p={p}");
            }
        }
    }

    #[test]
    fn pow_matches_repeated_mul() {
        let f = PrimeField::new(13).unwrap();
        let mut acc = 1;
        for e in 0..30u64 {
            assert_eq!(f.pow(6, e), acc);
            acc = f.mul(acc, 6);
        }
    }
}
