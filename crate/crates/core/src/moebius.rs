//! Exact set counting in `O(H polylog H)` via finite inclusion-exclusion
//! over squarefree moduli: the exact-arithmetic counterpart of the
//! asymptotic congruence-family counts, restricted by selectors on the
//! residue classes of the prime factors.

use crate::arith::{check_odd_prime_degree, count_in_class, gcd_u64, FactorSieve};
use crate::census::CensusTally;
use crate::error::{Error, Result};

/// Practical cap on heights for the exact engine; keeps every intermediate
/// in comfortable integer range. Far above the desk scale of 10^6.
const MAX_HEIGHT: u64 = 1 << 40;

/// Which family of squarefree moduli a Moebius sum ranges over.
///
/// Membership is decided by the residue classes (mod `d`) of the prime
/// factors alone; every member is squarefree and at least 2.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SelectorKind {
    /// All squarefree `s >= 2`.
    AllSquarefree,
    /// At least one prime factor `== 1 (mod d)`.
    AtLeastOneUnit,
    /// Every prime factor `== 1 (mod d)`.
    AllUnit,
    /// Coprime to `d`, every prime factor `!= 1 (mod d)`.
    AllNonunitCoprimeD,
    /// Every prime factor `!= 1 (mod d)`; `d` itself allowed.
    AllNonunitAllowD,
}

impl SelectorKind {
    /// True when every member of the selector is coprime to the degree,
    /// which the congruence family requires.
    fn coprime_to_degree(self) -> bool {
        matches!(self, SelectorKind::AllUnit | SelectorKind::AllNonunitCoprimeD)
    }

    fn admits_factors(self, primes: &[u64], d: u64) -> bool {
        match self {
            SelectorKind::AllSquarefree => true,
            SelectorKind::AtLeastOneUnit => primes.iter().any(|&p| p % d == 1),
            SelectorKind::AllUnit => primes.iter().all(|&p| p % d == 1),
            SelectorKind::AllNonunitCoprimeD => {
                primes.iter().all(|&p| p % d != 1 && p != d)
            }
            SelectorKind::AllNonunitAllowD => primes.iter().all(|&p| p % d != 1),
        }
    }

    /// Whether the squarefree modulus `s >= 2` belongs to this selector.
    pub fn admits(self, s: u64, degree: u32, sieve: &FactorSieve) -> Result<bool> {
        check_odd_prime_degree(degree)?;
        if s < 2 || !sieve.is_squarefree(s)? {
            return Ok(false);
        }
        let primes = sieve.distinct_prime_factors(s)?;
        Ok(self.admits_factors(&primes, degree as u64))
    }
}

/// Which congruence family the sum counts.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CountFamily {
    /// `s | a_i` for all `i`, `gcd(a_0/s, s) = 1`.
    G,
    /// The `G` conditions plus Eisenstein at `d` and the genus congruence.
    GPrime,
}

fn check_height(height: u64, degree: u32) -> Result<()> {
    if height > MAX_HEIGHT {
        return Err(Error::SpaceTooLarge { height, degree });
    }
    Ok(())
}

/// Exact size of the family `G` at modulus `s`: all `d` coefficients are
/// multiples of `s` bounded by `H`, and `a_0/s` runs over the integers
/// coprime to `s` in the symmetric interval.
pub fn exact_count_g(degree: u32, s: u64, height: u64, sieve: &FactorSieve) -> Result<u128> {
    check_odd_prime_degree(degree)?;
    check_height(height, degree)?;
    if !sieve.is_squarefree(s)? {
        return Err(Error::NotSquarefree(s));
    }
    exact_count_g_unchecked(degree, s, height, sieve)
        .ok_or(Error::SpaceTooLarge { height, degree })
}

fn exact_count_g_unchecked(degree: u32, s: u64, height: u64, sieve: &FactorSieve) -> Option<u128> {
    let q = height / s;
    let slots = 2 * q as u128 + 1;
    let a0_choices = sieve
        .coprime_count(s, q)
        .expect("modulus is within sieve range") as u128;
    slots.checked_pow(degree - 1)?.checked_mul(a0_choices)
}

/// Exact size of the family `G'` at modulus `s` (requires `gcd(s, d) = 1`):
/// the middle coefficients are multiples of `d^2 s`; `a_0 = k d s` with
/// `gcd(k, ds) = 1`; for each `a_0` the top coefficient ranges over a single
/// residue class mod `d^2 s` determined by `a_{d-1} == -a_0 (mod d^2)` and
/// `s | a_{d-1}`.
pub fn exact_count_gprime(degree: u32, s: u64, height: u64, sieve: &FactorSieve) -> Result<u128> {
    check_odd_prime_degree(degree)?;
    check_height(height, degree)?;
    if gcd_u64(s, degree as u64) != 1 {
        return Err(Error::NotCoprimeToDegree { s, d: degree });
    }
    if !sieve.is_squarefree(s)? {
        return Err(Error::NotSquarefree(s));
    }
    exact_count_gprime_unchecked(degree, s, height)
        .ok_or(Error::SpaceTooLarge { height, degree })
}

fn exact_count_gprime_unchecked(degree: u32, s: u64, height: u64) -> Option<u128> {
    let d = degree as u64;
    let dd = d * d;
    let ds = d * s;
    let dds = dd * s;

    let mid_slots = 2 * (height / dds) as u128 + 1;
    let mid = mid_slots.checked_pow(degree - 2)?;

    // s^{-1} mod d^2, for the CRT merge of the top-coefficient constraints
    let s_inv = mod_inverse(s % dd, dd);

    let h = height as i64;
    let k_max = (height / ds) as i64;
    let mut a0_block = 0u128;
    for k in -k_max..=k_max {
        if gcd_u64(k.unsigned_abs(), ds) != 1 {
            continue;
        }
        let a0 = k * ds as i64;
        // unique r mod d^2 s with r == -a_0 (mod d^2) and r == 0 (mod s)
        let c = (-a0).rem_euclid(dd as i64) as u128;
        let r = c * s_inv as u128 % dd as u128 * s as u128;
        a0_block += count_in_class(-h, h, dds, r as i64) as u128;
    }
    mid.checked_mul(a0_block)
}

/// Multiplicative inverse of `a` modulo `m` (`gcd(a, m) = 1`).
fn mod_inverse(a: u64, m: u64) -> u64 {
    let (mut old_r, mut r) = (a as i128, m as i128);
    let (mut old_t, mut t) = (1i128, 0i128);
    while r != 0 {
        let q = old_r / r;
        (old_r, r) = (r, old_r - q * r);
        (old_t, t) = (t, old_t - q * t);
    }
    debug_assert_eq!(old_r, 1, "inverse requires coprime arguments");
    old_t.rem_euclid(m as i128) as u64
}

/// The signed inclusion-exclusion sum `-sum mu(s) * #family(s, H)` over the
/// squarefree `s` in `[2, H]` admitted by the selector.
///
/// For the selector/family pairings used by the set counts the result is a
/// nonnegative integer (a tested property, not an assumption); intermediate
/// partial sums may be negative.
pub fn mobius_sum(
    degree: u32,
    height: u64,
    selector: SelectorKind,
    family: CountFamily,
    sieve: &FactorSieve,
) -> Result<i128> {
    check_odd_prime_degree(degree)?;
    check_height(height, degree)?;
    if family == CountFamily::GPrime && !selector.coprime_to_degree() {
        return Err(Error::SelectorFamilyMismatch { selector, family });
    }
    if sieve.limit() < height {
        return Err(Error::SieveTooSmall {
            needed: height,
            limit: sieve.limit(),
        });
    }
    let d = degree as u64;
    let mut sum = 0i128;
    let mut primes = Vec::with_capacity(16);
    for s in 2..=height {
        // one factorization drives the squarefree test, mu, and the selector
        primes.clear();
        let mut squarefree = true;
        let mut m = s;
        while m > 1 {
            let p = sieve
                .smallest_prime_factor(m)
                .expect("s is within sieve range");
            m /= p;
            if m % p == 0 {
                squarefree = false;
                break;
            }
            primes.push(p);
        }
        if !squarefree || !selector.admits_factors(&primes, d) {
            continue;
        }
        let mu: i128 = if primes.len() % 2 == 0 { 1 } else { -1 };
        let term = match family {
            CountFamily::G => exact_count_g_unchecked(degree, s, height, sieve),
            CountFamily::GPrime => exact_count_gprime_unchecked(degree, s, height),
        }
        .ok_or(Error::SpaceTooLarge { height, degree })?;
        sum -= mu * term as i128;
    }
    Ok(sum)
}

/// Assembles every census tally field from exact Moebius sums, in
/// `O(H polylog H)` and without enumerating the coefficient grid.
pub fn exact_set_counts(degree: u32, height: u64, sieve: &FactorSieve) -> Result<CensusTally> {
    check_odd_prime_degree(degree)?;
    check_height(height, degree)?;
    if sieve.limit() < height {
        return Err(Error::SieveTooSmall {
            needed: height,
            limit: sieve.limit(),
        });
    }

    let as_count = |v: i128, what: &str| -> u128 {
        v.try_into()
            .unwrap_or_else(|_| panic!("{what} must be nonnegative, got {v}"))
    };

    let count_e = as_count(
        mobius_sum(degree, height, SelectorKind::AllSquarefree, CountFamily::G, sieve)?,
        "count_E",
    );
    let count_e1_prose = as_count(
        mobius_sum(degree, height, SelectorKind::AllUnit, CountFamily::G, sieve)?,
        "count_E1_prose",
    );
    let count_a = as_count(
        mobius_sum(degree, height, SelectorKind::AtLeastOneUnit, CountFamily::G, sieve)?,
        "count_A",
    );
    let count_b = as_count(
        mobius_sum(degree, height, SelectorKind::AllNonunitCoprimeD, CountFamily::GPrime, sieve)?,
        "count_B",
    );
    let gprime_all = exact_count_gprime(degree, 1, height, sieve)?;
    let gprime_unit = as_count(
        mobius_sum(degree, height, SelectorKind::AllUnit, CountFamily::GPrime, sieve)?,
        "unit part of count_E2_prose",
    );
    let count_e2_prose = gprime_all - gprime_unit;
    let count_star = count_e - count_e1_prose - count_e2_prose;

    let side = 2 * height as u128 + 1;
    let total = (0..degree).try_fold(1u128, |acc, _| {
        acc.checked_mul(side).ok_or(Error::SpaceTooLarge {
            height,
            degree,
        })
    })?;

    Ok(CensusTally {
        degree,
        height,
        total,
        count_e,
        count_e1_prose,
        count_e2_prose,
        count_star,
        count_a,
        count_b,
    })
}
