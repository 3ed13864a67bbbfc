//! Residue arithmetic modulo a prime `p > 3`.

use core::fmt;

use crate::error::Error;

/// A prime `p > 3`, the only moduli this crate works with.
///
/// Residues are stored as `u16`, so `p` must also fit in 16 bits.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Prime(u16);

impl Prime {
    pub fn new(p: u64) -> Result<Self, Error> {
        if p <= 3 || p > u64::from(u16::MAX) || !is_prime(p) {
            return Err(Error::InvalidPrime(p));
        }
        Ok(Prime(p as u16))
    }

    #[inline]
    pub fn get(self) -> u32 {
        u32::from(self.0)
    }

    #[inline]
    pub fn as_u64(self) -> u64 {
        u64::from(self.0)
    }

    /// Reduces an arbitrary integer into `[0, p)`.
    #[inline]
    pub fn reduce(self, x: i64) -> u16 {
        x.rem_euclid(i64::from(self.0)) as u16
    }

    #[inline]
    pub fn add(self, x: u16, y: u16) -> u16 {
        let s = u32::from(x) + u32::from(y);
        let p = u32::from(self.0);
        (if s >= p { s - p } else { s }) as u16
    }

    #[inline]
    pub fn sub(self, x: u16, y: u16) -> u16 {
        let p = u32::from(self.0);
        ((u32::from(x) + p - u32::from(y)) % p) as u16
    }

    #[inline]
    pub fn neg(self, x: u16) -> u16 {
        if x == 0 {
            0
        } else {
            self.0 - x
        }
    }

    #[inline]
    pub fn mul(self, x: u16, y: u16) -> u16 {
        ((u32::from(x) * u32::from(y)) % u32::from(self.0)) as u16
    }

    pub fn pow(self, x: u16, mut e: u64) -> u16 {
        let mut base = x % self.0;
        let mut acc = 1u16 % self.0;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        acc
    }

    /// Multiplicative inverse; `None` for zero.
    pub fn inv(self, x: u16) -> Option<u16> {
        let x = x % self.0;
        if x == 0 {
            return None;
        }
        let (mut r0, mut r1) = (i64::from(self.0), i64::from(x));
        let (mut t0, mut t1) = (0i64, 1i64);
        while r1 != 0 {
            let q = r0 / r1;
            (r0, r1) = (r1, r0 - q * r1);
            (t0, t1) = (t1, t0 - q * t1);
        }
        Some(self.reduce(t0))
    }

    /// The residue of `1/2`.
    #[inline]
    pub fn half(self) -> u16 {
        self.0.div_ceil(2)
    }

    /// `x / 2` as a residue.
    #[inline]
    pub fn halve(self, x: u16) -> u16 {
        self.mul(x, self.half())
    }

    pub fn is_square(self, x: u16) -> bool {
        let x = x % self.0;
        x == 0 || self.pow(x, (self.as_u64() - 1) / 2) == 1
    }

    /// Smallest quadratic non-residue in `[2, p)`.
    pub fn smallest_nonresidue(self) -> u16 {
        (2..self.0)
            .find(|&x| !self.is_square(x))
            .expect("every odd prime has a non-residue")
    }

    /// `n(n-1)/2 mod p` for any integer `n`.
    #[inline]
    pub fn binom2(self, n: i64) -> u16 {
        let p = i64::from(self.0);
        let n = n.rem_euclid(p);
        // n(n-1) is even, reduce after halving in the integers.
        ((n * (n - 1) / 2).rem_euclid(p)) as u16
    }

    /// All residues `0..p`.
    pub fn residues(self) -> impl Iterator<Item = u16> + Clone {
        0..self.0
    }

    /// All nonzero residues `1..p`.
    pub fn units(self) -> impl Iterator<Item = u16> + Clone {
        1..self.0
    }
}

impl fmt::Display for Prime {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}
