//! Elementary arithmetic services: a smallest-prime-factor sieve, the
//! multiplicative functions built on it, residue classification of primes
//! modulo the degree, and exact coprime counting over symmetric intervals.

use crate::error::{Error, Result};

/// Smallest-prime-factor table for every integer in `[2, limit]`.
///
/// Immutable after construction; all queries are pure, so a single sieve can
/// be shared freely across worker threads.
#[derive(Clone)]
pub struct FactorSieve {
    limit: u64,
    spf: Vec<u32>,
}

impl std::fmt::Debug for FactorSieve {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("FactorSieve").field("limit", &self.limit).finish()
    }
}

impl FactorSieve {
    /// Builds the sieve up to `limit` inclusive.
    ///
    /// Storage is four bytes per integer: 10^7 costs ~40 MB, which is the
    /// intended desk scale. Limits above `u32::MAX` are rejected.
    pub fn new(limit: u64) -> Result<Self> {
        if limit < 2 {
            return Err(Error::LimitTooSmall(limit));
        }
        if limit > u32::MAX as u64 {
            return Err(Error::LimitTooLarge(limit));
        }
        let n = limit as usize;
        let mut spf = vec![0u32; n + 1];
        let mut primes: Vec<u32> = Vec::new();
        for i in 2..=n {
            if spf[i] == 0 {
                spf[i] = i as u32;
                primes.push(i as u32);
            }
            let spf_i = spf[i];
            for &p in &primes {
                if p > spf_i || (i as u64) * (p as u64) > limit {
                    break;
                }
                spf[i * p as usize] = p;
            }
        }
        Ok(Self { limit, spf })
    }

    pub fn limit(&self) -> u64 {
        self.limit
    }

    fn check_range(&self, n: u64) -> Result<()> {
        if n < 1 || n > self.limit {
            return Err(Error::OutOfSieveRange {
                n,
                limit: self.limit,
            });
        }
        Ok(())
    }

    /// Smallest prime factor of `n` (requires `2 <= n <= limit`).
    pub fn smallest_prime_factor(&self, n: u64) -> Result<u64> {
        self.check_range(n)?;
        if n < 2 {
            return Err(Error::OutOfSieveRange {
                n,
                limit: self.limit,
            });
        }
        Ok(self.spf[n as usize] as u64)
    }

    pub fn is_prime(&self, n: u64) -> Result<bool> {
        self.check_range(n)?;
        Ok(n >= 2 && self.spf[n as usize] as u64 == n)
    }

    /// All primes `<= limit`, ascending.
    pub fn primes(&self) -> impl Iterator<Item = u64> + '_ {
        (2..=self.limit).filter(move |&n| self.spf[n as usize] as u64 == n)
    }

    /// Visits the distinct prime factors of `n` in ascending order.
    /// Caller guarantees `1 <= n <= limit`.
    #[inline]
    pub(crate) fn for_each_distinct_prime_unchecked<F: FnMut(u64)>(&self, n: u64, mut f: F) {
        let mut m = n as usize;
        while m > 1 {
            let p = self.spf[m] as usize;
            f(p as u64);
            while m % p == 0 {
                m /= p;
            }
        }
    }

    /// Distinct prime factors of `n`, ascending. `n = 1` yields an empty list.
    pub fn distinct_prime_factors(&self, n: u64) -> Result<Vec<u64>> {
        self.check_range(n)?;
        let mut out = Vec::new();
        self.for_each_distinct_prime_unchecked(n, |p| out.push(p));
        Ok(out)
    }

    /// Moebius function: 0 if a square divides `n`, otherwise
    /// (-1)^(number of distinct prime factors).
    pub fn mobius(&self, n: u64) -> Result<i32> {
        self.check_range(n)?;
        let mut m = n as usize;
        let mut sign = 1i32;
        while m > 1 {
            let p = self.spf[m] as usize;
            m /= p;
            if m % p == 0 {
                return Ok(0);
            }
            sign = -sign;
        }
        Ok(sign)
    }

    /// Euler totient.
    pub fn euler_phi(&self, n: u64) -> Result<u64> {
        self.check_range(n)?;
        let mut m = n as usize;
        let mut phi = 1u64;
        while m > 1 {
            let p = self.spf[m] as usize;
            let mut pk = 1u64;
            m /= p;
            while m % p == 0 {
                pk *= p as u64;
                m /= p;
            }
            phi *= pk * (p as u64 - 1);
        }
        Ok(phi)
    }

    /// Number of distinct prime factors.
    pub fn omega(&self, n: u64) -> Result<u32> {
        self.check_range(n)?;
        let mut count = 0;
        self.for_each_distinct_prime_unchecked(n, |_| count += 1);
        Ok(count)
    }

    pub fn is_squarefree(&self, n: u64) -> Result<bool> {
        Ok(self.mobius(n)? != 0)
    }

    /// Exact count of integers `a` with `|a| <= m` and `gcd(a, s) = 1`.
    ///
    /// Since `gcd(0, s) = s`, the value `a = 0` is counted only for `s = 1`.
    /// Computed by Moebius inclusion-exclusion over the divisors of the
    /// radical of `s`, so the result depends on `s` only through its radical.
    pub fn coprime_count(&self, s: u64, m: u64) -> Result<u64> {
        self.check_range(s)?;
        let mut primes = [0u64; 16];
        let mut k = 0;
        self.for_each_distinct_prime_unchecked(s, |p| {
            primes[k] = p;
            k += 1;
        });
        // Sum mu(e) * #{ |a| <= m : e | a } over the 2^k squarefree divisors.
        let mut total: i64 = 0;
        for mask in 0u32..(1 << k) {
            let mut e = 1u64;
            for (i, &p) in primes[..k].iter().enumerate() {
                if mask & (1 << i) != 0 {
                    e *= p;
                }
            }
            let mult = 2 * (m / e) as i64 + 1;
            if mask.count_ones() % 2 == 0 {
                total += mult;
            } else {
                total -= mult;
            }
        }
        Ok(total as u64)
    }
}

/// Residue class of a prime `p` relative to the odd prime degree `d`.
///
/// The three cases partition the primes: `p = d`, `p == 1 (mod d)`, and
/// everything else.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ResidueClass {
    EqualsD,
    OneModD,
    OtherModD,
}

/// Classifies the prime `p` against the odd prime `d`.
pub fn residue_class(p: u64, d: u32) -> Result<ResidueClass> {
    check_odd_prime_degree(d)?;
    if !is_prime_u64(p) {
        return Err(Error::NotPrime(p));
    }
    Ok(classify_prime(p, d))
}

#[inline]
pub(crate) fn classify_prime(p: u64, d: u32) -> ResidueClass {
    if p == d as u64 {
        ResidueClass::EqualsD
    } else if p % d as u64 == 1 {
        ResidueClass::OneModD
    } else {
        ResidueClass::OtherModD
    }
}

/// Exact `#{ n in [lo, hi] : n == r (mod m) }`.
pub fn count_in_class(lo: i64, hi: i64, m: u64, r: i64) -> u64 {
    if lo > hi {
        return 0;
    }
    let m = m as i128;
    let r = r as i128;
    // floor((x - r)/m) counts the class members <= x
    let upto = |x: i128| (x - r).div_euclid(m);
    (upto(hi as i128) - upto(lo as i128 - 1)) as u64
}

/// Trial-division primality test; sufficient for the argument validation
/// done outside sieve range (degrees and individual primes are tiny).
pub(crate) fn is_prime_u64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n % 2 == 0 {
        return n == 2;
    }
    let mut f = 3u64;
    while f * f <= n {
        if n % f == 0 {
            return false;
        }
        f += 2;
    }
    true
}

pub(crate) fn check_odd_prime_degree(d: u32) -> Result<()> {
    if d < 3 || !is_prime_u64(d as u64) {
        return Err(Error::DegreeNotOddPrime(d as u64));
    }
    Ok(())
}

pub(crate) fn gcd_u64(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}
