//! Monic integer polynomials of odd prime degree: Eisenstein prime
//! detection, the degree-squared congruence block, and classification
//! against the failure conditions.

use std::fmt;

use crate::arith::{check_odd_prime_degree, classify_prime, gcd_u64, is_prime_u64, FactorSieve, ResidueClass};
use crate::error::{Error, Result};

/// Monic polynomial `x^d + a_{d-1} x^{d-1} + ... + a_1 x + a_0` with integer
/// coefficients, stored as the `d` lower coefficients `a_0 .. a_{d-1}`.
/// The degree is an odd prime; `d = 2` is rejected at construction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MonicPoly {
    degree: u32,
    coeffs: Vec<i64>,
}

impl MonicPoly {
    pub fn new(degree: u32, coeffs: Vec<i64>) -> Result<Self> {
        check_odd_prime_degree(degree)?;
        if coeffs.len() != degree as usize {
            return Err(Error::CoefficientCount {
                degree: degree as u64,
                got: coeffs.len(),
            });
        }
        Ok(Self { degree, coeffs })
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    /// Lower coefficients `a_0 .. a_{d-1}`.
    pub fn coeffs(&self) -> &[i64] {
        &self.coeffs
    }

    /// `max |a_i|` over the lower coefficients.
    pub fn height(&self) -> u64 {
        self.coeffs.iter().map(|a| a.unsigned_abs()).max().unwrap_or(0)
    }

    /// Coefficient-list rendering `[a0, a1, ..., a_{d-1}]`.
    pub fn coeff_list(&self) -> String {
        let parts: Vec<String> = self.coeffs.iter().map(|a| a.to_string()).collect();
        format!("[{}]", parts.join(", "))
    }

    /// The companion polynomial `-f(-x)`, i.e. `a_i -> (-1)^(d-i) a_i`.
    /// An involution that preserves degree, height, and classification.
    pub fn mirror(&self) -> MonicPoly {
        let d = self.degree as usize;
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .map(|(i, &a)| if (d - i) % 2 == 1 { -a } else { a })
            .collect();
        MonicPoly {
            degree: self.degree,
            coeffs,
        }
    }

    /// True iff `p` divides every lower coefficient and `p^2` does not divide
    /// `a_0`. A zero constant term is never Eisenstein (`p^2 | 0`).
    pub fn is_eisenstein_at(&self, p: u64) -> Result<bool> {
        if !is_prime_u64(p) {
            return Err(Error::NotPrime(p));
        }
        Ok(self.is_eisenstein_at_unchecked(p))
    }

    fn is_eisenstein_at_unchecked(&self, p: u64) -> bool {
        let a0 = self.coeffs[0].unsigned_abs();
        if a0 == 0 {
            return false;
        }
        if self.coeffs.iter().any(|a| a.unsigned_abs() % p != 0) {
            return false;
        }
        let pp = p as u128 * p as u128;
        !(pp <= a0 as u128 && a0 as u128 % pp == 0)
    }

    /// True iff `a_i == 0 (mod d^2)` for `i = 1 .. d-2` and
    /// `a_0 + a_{d-1} == 0 (mod d^2)`. For `d = 3` the first block is the
    /// single condition `9 | a_1`.
    pub fn genus_congruence(&self) -> bool {
        let d = self.degree as usize;
        let m = (self.degree as i64) * (self.degree as i64);
        if self.coeffs[1..d - 1].iter().any(|a| a.rem_euclid(m) != 0) {
            return false;
        }
        (self.coeffs[0].rem_euclid(m) + self.coeffs[d - 1].rem_euclid(m)) % m == 0
    }

    /// The full Eisenstein prime set of `f`, split by residue class mod `d`,
    /// plus the genus-congruence flag.
    ///
    /// Found by factoring `gcd(a_0, ..., a_{d-1})`: every Eisenstein prime
    /// divides the gcd, and the gcd is at most `|a_0| <= height`, so the
    /// sieve must cover the height.
    pub fn eisenstein_profile(&self, sieve: &FactorSieve) -> Result<EisensteinProfile> {
        let height = self.height();
        if sieve.limit() < height {
            return Err(Error::SieveTooSmall {
                needed: height,
                limit: sieve.limit(),
            });
        }
        let mut profile = EisensteinProfile {
            primes: Vec::new(),
            u_part: Vec::new(),
            v_part: Vec::new(),
            has_d: false,
            congruence: self.genus_congruence(),
        };
        let a0 = self.coeffs[0].unsigned_abs();
        if a0 == 0 {
            return Ok(profile);
        }
        let g = self
            .coeffs
            .iter()
            .fold(0u64, |g, a| gcd_u64(g, a.unsigned_abs()));
        if g >= 2 {
            sieve.for_each_distinct_prime_unchecked(g, |p| {
                let pp = p as u128 * p as u128;
                if pp <= a0 as u128 && a0 as u128 % pp == 0 {
                    return; // p^2 | a_0, not Eisenstein at p
                }
                profile.primes.push(p);
                match classify_prime(p, self.degree) {
                    ResidueClass::EqualsD => profile.has_d = true,
                    ResidueClass::OneModD => profile.u_part.push(p),
                    ResidueClass::OtherModD => profile.v_part.push(p),
                }
            });
        }
        Ok(profile)
    }

    /// Classifies `f` against the two failure branches; exactly one variant
    /// applies. A prime `== 1 (mod d)` takes priority over the ramified
    /// branch (the two are disjoint by definition).
    pub fn classify(&self, sieve: &FactorSieve) -> Result<Classification> {
        Ok(self.eisenstein_profile(sieve)?.classification())
    }
}

/// Renders in the conventional order, e.g. `x^3 + 2x^2 + 2x + 2`;
/// zero terms are skipped.
impl fmt::Display for MonicPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "x^{}", self.degree)?;
        for i in (0..self.degree as usize).rev() {
            let a = self.coeffs[i];
            if a == 0 {
                continue;
            }
            let sign = if a < 0 { '-' } else { '+' };
            let mag = a.unsigned_abs();
            match i {
                0 => write!(f, " {sign} {mag}")?,
                1 if mag == 1 => write!(f, " {sign} x")?,
                1 => write!(f, " {sign} {mag}x")?,
                _ if mag == 1 => write!(f, " {sign} x^{i}")?,
                _ => write!(f, " {sign} {mag}x^{i}")?,
            }
        }
        Ok(())
    }
}

/// The set `P` of primes at which a polynomial is Eisenstein, factored by
/// residue class mod the degree `d`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EisensteinProfile {
    /// All Eisenstein primes, ascending.
    pub primes: Vec<u64>,
    /// Members of `primes` with `p == 1 (mod d)`.
    pub u_part: Vec<u64>,
    /// Members of `primes` with `p != d` and `p != 1 (mod d)`.
    pub v_part: Vec<u64>,
    /// Whether `d` itself is an Eisenstein prime.
    pub has_d: bool,
    /// Whether the genus congruence holds for the polynomial.
    pub congruence: bool,
}

impl EisensteinProfile {
    pub fn is_empty(&self) -> bool {
        self.primes.is_empty()
    }

    pub fn classification(&self) -> Classification {
        if self.primes.is_empty() {
            Classification::NotEisenstein
        } else if !self.u_part.is_empty() {
            Classification::FailByOneModD
        } else if self.has_d && self.congruence {
            Classification::FailByRamifiedD
        } else {
            Classification::Star
        }
    }
}

/// Disposition of a polynomial with respect to the counting condition.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Classification {
    /// Eisenstein at no prime.
    NotEisenstein,
    /// Eisenstein somewhere, no prime `== 1 (mod d)`, and not the ramified
    /// failure: the condition of interest holds.
    Star,
    /// Some Eisenstein prime is `== 1 (mod d)`.
    FailByOneModD,
    /// `d` is an Eisenstein prime, no prime `== 1 (mod d)`, and the genus
    /// congruence holds.
    FailByRamifiedD,
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn poly(d: u32, coeffs: &[i64]) -> MonicPoly {
        MonicPoly::new(d, coeffs.to_vec()).unwrap()
    }

    fn sieve(limit: u64) -> FactorSieve {
        FactorSieve::new(limit).unwrap()
    }

    #[test]
    fn construction_validates_degree_and_length() {
        assert!(MonicPoly::new(3, vec![1, 2, 3]).is_ok());
        assert_eq!(
            MonicPoly::new(2, vec![1, 2]).unwrap_err(),
            Error::DegreeNotOddPrime(2)
        );
        assert_eq!(
            MonicPoly::new(9, vec![0; 9]).unwrap_err(),
            Error::DegreeNotOddPrime(9)
        );
        assert_eq!(
            MonicPoly::new(3, vec![1, 2]).unwrap_err(),
            Error::CoefficientCount { degree: 3, got: 2 }
        );
    }

    #[test]
    fn eisenstein_at_examples() {
        // x^3 + 2x^2 + 2x + 2
        assert!(poly(3, &[2, 2, 2]).is_eisenstein_at(2).unwrap());
        // 4 | a_0
        assert!(!poly(3, &[4, 2, 2]).is_eisenstein_at(2).unwrap());
        // zero constant term: p^2 | 0
        assert!(!poly(3, &[0, 0, 0]).is_eisenstein_at(2).unwrap());
        assert_eq!(
            poly(3, &[2, 2, 2]).is_eisenstein_at(4).unwrap_err(),
            Error::NotPrime(4)
        );
    }

    #[test]
    fn profile_examples() {
        let s = sieve(100);

        let p = poly(3, &[2, 2, 2]).eisenstein_profile(&s).unwrap();
        assert_eq!(p.primes, vec![2]);
        assert!(p.u_part.is_empty());
        assert!(!p.has_d);
        assert_eq!(p.v_part, vec![2]);

        let p = poly(3, &[7, 7, 7]).eisenstein_profile(&s).unwrap();
        assert_eq!(p.primes, vec![7]);
        assert_eq!(p.u_part, vec![7]);

        // x^3 + 3x^2 + 9x + 6
        let p = poly(3, &[6, 9, 3]).eisenstein_profile(&s).unwrap();
        assert_eq!(p.primes, vec![3]);
        assert!(p.has_d);
        assert!(p.congruence);

        // sieve must cover the height
        let tiny = sieve(3);
        assert_eq!(
            poly(3, &[6, 9, 3]).eisenstein_profile(&tiny).unwrap_err(),
            Error::SieveTooSmall { needed: 9, limit: 3 }
        );
    }

    #[test]
    fn genus_congruence_examples() {
        assert!(poly(3, &[6, 9, 3]).genus_congruence());
        assert!(poly(3, &[0, 0, 0]).genus_congruence());
        assert!(!poly(3, &[3, 9, 3]).genus_congruence());
        // d = 5: a_1, a_2, a_3 mod 25 and a_0 + a_4 mod 25
        assert!(poly(5, &[5, 25, -25, 0, 20]).genus_congruence());
        assert!(!poly(5, &[5, 25, -25, 5, 20]).genus_congruence());
    }

    #[test]
    fn classify_examples() {
        let s = sieve(100);
        assert_eq!(poly(3, &[2, 2, 2]).classify(&s).unwrap(), Classification::Star);
        assert_eq!(
            poly(3, &[7, 7, 7]).classify(&s).unwrap(),
            Classification::FailByOneModD
        );
        assert_eq!(
            poly(3, &[6, 9, 3]).classify(&s).unwrap(),
            Classification::FailByRamifiedD
        );
        assert_eq!(
            poly(3, &[0, 4, 1]).classify(&s).unwrap(),
            Classification::NotEisenstein
        );
        // Eisenstein at 3 but the congruence fails: still Star
        assert_eq!(poly(3, &[3, 3, 3]).classify(&s).unwrap(), Classification::Star);
        // Eisenstein at both 7 and 2: the unit prime wins
        assert_eq!(
            poly(3, &[14, 14, 14]).classify(&s).unwrap(),
            Classification::FailByOneModD
        );
    }

    #[test]
    fn mirror_examples() {
        let f = poly(3, &[2, 2, 2]);
        assert_eq!(f.mirror().coeffs(), &[-2, 2, -2]);
        assert_eq!(f.to_string(), "x^3 + 2x^2 + 2x + 2");
        assert_eq!(f.mirror().to_string(), "x^3 - 2x^2 + 2x - 2");
        assert_eq!(poly(3, &[6, 9, 3]).mirror().coeffs(), &[-6, 9, -3]);
    }

    #[test]
    fn display_edge_cases() {
        assert_eq!(poly(3, &[0, 0, 0]).to_string(), "x^3");
        assert_eq!(poly(3, &[-1, 1, 0]).to_string(), "x^3 + x - 1");
        assert_eq!(poly(5, &[2, 0, -1, 0, 0]).to_string(), "x^5 - x^2 + 2");
    }

    #[test]
    fn coeff_list_rendering() {
        assert_eq!(poly(3, &[2, 2, 2]).coeff_list(), "[2, 2, 2]");
        assert_eq!(poly(3, &[-6, 9, -3]).coeff_list(), "[-6, 9, -3]");
    }

    /// Direct definition check on an exhaustive small grid: p is Eisenstein
    /// iff p divides every lower coefficient and p^2 does not divide a_0.
    #[test]
    fn eisenstein_matches_direct_check_small_grid() {
        let s = sieve(100);
        let h = 10i64;
        for a0 in -h..=h {
            for a1 in -h..=h {
                for a2 in -h..=h {
                    let f = poly(3, &[a0, a1, a2]);
                    let profile = f.eisenstein_profile(&s).unwrap();
                    for p in [2u64, 3, 5, 7] {
                        let direct = a0 != 0
                            && [a0, a1, a2].iter().all(|a| a % p as i64 == 0)
                            && a0 % (p * p) as i64 != 0;
                        assert_eq!(f.is_eisenstein_at(p).unwrap(), direct);
                        assert_eq!(profile.primes.contains(&p), direct);
                    }
                    // every Eisenstein prime divides a_0 and fits under the height
                    for &p in &profile.primes {
                        assert!(a0 != 0 && a0 % p as i64 == 0);
                        assert!(p <= f.height());
                    }
                }
            }
        }
    }

    fn coeffs_strategy(d: usize, h: i64) -> impl Strategy<Value = Vec<i64>> {
        proptest::collection::vec(-h..=h, d)
    }

    proptest! {
        #[test]
        fn mirror_is_involution(coeffs in coeffs_strategy(5, 50)) {
            let f = poly(5, &coeffs);
            prop_assert_eq!(f.mirror().mirror(), f.clone());
            prop_assert_eq!(f.mirror().height(), f.height());
        }

        #[test]
        fn mirror_preserves_classification(coeffs in coeffs_strategy(3, 40)) {
            let s = sieve(60);
            let f = poly(3, &coeffs);
            prop_assert_eq!(
                f.classify(&s).unwrap(),
                f.mirror().classify(&s).unwrap()
            );
        }

        #[test]
        fn exactly_one_classification(coeffs in coeffs_strategy(3, 60)) {
            let s = sieve(80);
            let f = poly(3, &coeffs);
            let p = f.eisenstein_profile(&s).unwrap();
            let c = f.classify(&s).unwrap();
            // the partition is driven by the profile
            let not_e = p.is_empty();
            let fail1 = !p.u_part.is_empty();
            let fail2 = p.has_d && p.u_part.is_empty() && p.congruence;
            let star = !not_e && !fail1 && !fail2;
            let expected = match (not_e, fail1, fail2, star) {
                (true, false, false, false) => Classification::NotEisenstein,
                (false, true, _, false) => Classification::FailByOneModD,
                (false, false, true, false) => Classification::FailByRamifiedD,
                (false, false, false, true) => Classification::Star,
                other => panic!("classification predicates overlap: {other:?}"),
            };
            prop_assert_eq!(c, expected);
        }
    }
}
