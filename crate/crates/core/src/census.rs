//! Brute-force exhaustive enumeration over all monic degree-`d` polynomials
//! of height at most `H`: exact tallies of every set in the decomposition,
//! plus direct counts of the congruence families used as oracles for the
//! inclusion-exclusion engine.

use std::thread;

use crate::arith::{check_odd_prime_degree, gcd_u64, FactorSieve};
use crate::error::{Error, Result};

/// Default enumeration budget: reject brute-force runs above this many
/// polynomials unless the caller raises the cap.
pub const DEFAULT_BUDGET: u128 = 1_000_000_000;

/// Exact counts per classification for one `(d, H)` sweep.
///
/// `count_e1_prose` / `count_e2_prose` follow the prose set definitions
/// (membership of a single qualifying prime); `count_a` / `count_b` are the
/// sets the restricted Moebius sums characterize. All four are tallied in the
/// same pass so the two accountings can be compared downstream.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CensusTally {
    pub degree: u32,
    pub height: u64,
    /// `(2H+1)^d`, the full coefficient grid.
    pub total: u128,
    /// Eisenstein at one or more primes.
    pub count_e: u128,
    /// Some Eisenstein prime `== 1 (mod d)`.
    pub count_e1_prose: u128,
    /// `d`-Eisenstein, no Eisenstein prime `== 1 (mod d)`, genus congruence.
    pub count_e2_prose: u128,
    /// Eisenstein somewhere, in neither failure set.
    pub count_star: u128,
    /// Eisenstein at some prime `== 1 (mod d)` and at no other prime.
    pub count_a: u128,
    /// `d`-Eisenstein with the genus congruence, and Eisenstein at some
    /// prime `!= d` with `p != 1 (mod d)`.
    pub count_b: u128,
}

impl CensusTally {
    fn zero(degree: u32, height: u64, total: u128) -> Self {
        Self {
            degree,
            height,
            total,
            count_e: 0,
            count_e1_prose: 0,
            count_e2_prose: 0,
            count_star: 0,
            count_a: 0,
            count_b: 0,
        }
    }

    fn merge(&mut self, other: &CensusTally) {
        self.count_e += other.count_e;
        self.count_e1_prose += other.count_e1_prose;
        self.count_e2_prose += other.count_e2_prose;
        self.count_star += other.count_star;
        self.count_a += other.count_a;
        self.count_b += other.count_b;
    }

    /// The seven count fields with stable names, for reporting and diffing.
    pub fn named_counts(&self) -> [(&'static str, u128); 7] {
        [
            ("total", self.total),
            ("count_E", self.count_e),
            ("count_E1_prose", self.count_e1_prose),
            ("count_E2_prose", self.count_e2_prose),
            ("count_A", self.count_a),
            ("count_B", self.count_b),
            ("count_star", self.count_star),
        ]
    }
}

/// Half-open range of flattened odometer indices into the `(2H+1)^d` grid.
/// Index digits are base `2H+1`, least significant digit = `a_0`, so one
/// strip of the most significant digit is one value of `a_{d-1}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SpaceSlice {
    pub start: u128,
    pub end: u128,
}

impl SpaceSlice {
    pub fn len(&self) -> u128 {
        self.end - self.start
    }

    pub fn is_empty(&self) -> bool {
        self.end <= self.start
    }
}

fn grid_size(degree: u32, height: u64) -> Result<u128> {
    let side = 2 * height as u128 + 1;
    let mut size = 1u128;
    for _ in 0..degree {
        size = size
            .checked_mul(side)
            .filter(|&s| s < (1u128 << 126))
            .ok_or(Error::SpaceTooLarge { height, degree })?;
    }
    Ok(size)
}

/// Splits the full coefficient grid into `parts` contiguous slices whose
/// lengths sum to `(2H+1)^d` (trailing slices may be empty when `parts`
/// exceeds the grid).
pub fn partition_space(degree: u32, height: u64, parts: u32) -> Result<Vec<SpaceSlice>> {
    check_odd_prime_degree(degree)?;
    let parts = parts.max(1) as u128;
    let size = grid_size(degree, height)?;
    let base = size / parts;
    let extra = size % parts;
    let mut slices = Vec::with_capacity(parts as usize);
    let mut start = 0u128;
    for i in 0..parts {
        let len = base + u128::from(i < extra);
        slices.push(SpaceSlice {
            start,
            end: start + len,
        });
        start += len;
    }
    Ok(slices)
}

/// Per-polynomial classification bits shared by the census and the brute
/// family counters.
struct PolyFacts {
    eisenstein: bool,
    has_unit: bool,
    has_d: bool,
    has_v: bool,
}

/// Classifies from `a_0` and the gcd of the remaining coefficients.
/// `g_rest = gcd(a_1, ..., a_{d-1})` (0 when they are all zero).
#[inline]
fn poly_facts(sieve: &FactorSieve, degree: u32, a0: i64, g_rest: u64) -> PolyFacts {
    let mut facts = PolyFacts {
        eisenstein: false,
        has_unit: false,
        has_d: false,
        has_v: false,
    };
    let a0_abs = a0.unsigned_abs();
    if a0_abs == 0 {
        return facts;
    }
    let g = gcd_u64(g_rest, a0_abs);
    if g < 2 {
        return facts;
    }
    let d = degree as u64;
    sieve.for_each_distinct_prime_unchecked(g, |p| {
        let pp = p as u128 * p as u128;
        if pp <= a0_abs as u128 && a0_abs as u128 % pp == 0 {
            return;
        }
        facts.eisenstein = true;
        if p == d {
            facts.has_d = true;
        } else if p % d == 1 {
            facts.has_unit = true;
        } else {
            facts.has_v = true;
        }
    });
    facts
}

/// Walks one slice of the grid, classifying every polynomial.
///
/// The innermost digit is `a_0`; the gcd of the upper coefficients and the
/// middle congruence block are recomputed only when a carry changes them.
fn tally_slice(
    sieve: &FactorSieve,
    degree: u32,
    height: u64,
    slice: SpaceSlice,
    tally: &mut CensusTally,
) {
    if slice.is_empty() {
        return;
    }
    let d = degree as usize;
    let side = 2 * height as u128 + 1;
    let h = height as i64;
    let dd = (degree as i64) * (degree as i64);

    // decode the starting index into odometer digits, a_0 first
    let mut coeffs = vec![0i64; d];
    let mut rem = slice.start;
    for digit in coeffs.iter_mut() {
        *digit = (rem % side) as i64 - h;
        rem /= side;
    }

    let mut idx = slice.start;
    while idx < slice.end {
        let g_rest = coeffs[1..]
            .iter()
            .fold(0u64, |g, a| gcd_u64(g, a.unsigned_abs()));
        // middle congruence block a_1 .. a_{d-2} is fixed for the whole a_0 run
        let mid_congruent = coeffs[1..d - 1].iter().all(|a| a.rem_euclid(dd) == 0);
        let top = coeffs[d - 1];

        let run = ((h - coeffs[0]) as u128 + 1).min(slice.end - idx);
        for step in 0..run as i64 {
            let a0 = coeffs[0] + step;
            let facts = poly_facts(sieve, degree, a0, g_rest);
            if !facts.eisenstein {
                continue;
            }
            tally.count_e += 1;
            let congruence =
                facts.has_d && mid_congruent && (a0.rem_euclid(dd) + top.rem_euclid(dd)) % dd == 0;
            let e1 = facts.has_unit;
            let e2 = facts.has_d && !facts.has_unit && congruence;
            if e1 {
                tally.count_e1_prose += 1;
            }
            if e2 {
                tally.count_e2_prose += 1;
            }
            if !e1 && !e2 {
                tally.count_star += 1;
            }
            if !facts.has_d && !facts.has_v {
                tally.count_a += 1;
            }
            if facts.has_d && facts.has_v && congruence {
                tally.count_b += 1;
            }
        }
        idx += run;
        if idx >= slice.end {
            break;
        }
        // carry into the higher digits
        coeffs[0] = -h;
        for digit in coeffs[1..].iter_mut() {
            *digit += 1;
            if *digit > h {
                *digit = -h;
            } else {
                break;
            }
        }
    }
}

/// Exhaustive census of the `(2H+1)^d` grid with the default budget.
///
/// The tally is independent of `workers`: every partition covers the grid
/// exactly once and the per-field sums are exact integers.
pub fn enumerate_census(
    degree: u32,
    height: u64,
    sieve: &FactorSieve,
    workers: u32,
) -> Result<CensusTally> {
    enumerate_census_with_budget(degree, height, sieve, workers, DEFAULT_BUDGET)
}

/// As [`enumerate_census`] with an explicit polynomial budget.
pub fn enumerate_census_with_budget(
    degree: u32,
    height: u64,
    sieve: &FactorSieve,
    workers: u32,
    budget: u128,
) -> Result<CensusTally> {
    check_odd_prime_degree(degree)?;
    if sieve.limit() < height {
        return Err(Error::SieveTooSmall {
            needed: height,
            limit: sieve.limit(),
        });
    }
    let size = grid_size(degree, height)?;
    if size > budget {
        return Err(Error::BudgetExceeded { cost: size, budget });
    }

    let slices = partition_space(degree, height, workers.max(1))?;
    let mut tally = CensusTally::zero(degree, height, size);
    if workers <= 1 {
        tally_slice(sieve, degree, height, slices[0], &mut tally);
        return Ok(tally);
    }
    let partials = thread::scope(|scope| {
        let handles: Vec<_> = slices
            .into_iter()
            .map(|slice| {
                scope.spawn(move || {
                    let mut part = CensusTally::zero(degree, height, size);
                    tally_slice(sieve, degree, height, slice, &mut part);
                    part
                })
            })
            .collect();
        handles
            .into_iter()
            .map(|h| h.join().expect("census worker panicked"))
            .collect::<Vec<_>>()
    });
    for part in &partials {
        tally.merge(part);
    }
    Ok(tally)
}

/// Direct count of the monic polynomials of height at most `H` with
/// `s | a_i` for all `i` and `gcd(a_0/s, s) = 1`, by full iteration over the
/// admissible coefficients. Oracle counterpart of the closed-form count.
pub fn brute_count_g(degree: u32, s: u64, height: u64) -> Result<u128> {
    check_odd_prime_degree(degree)?;
    let h = height as i64;
    let s_i = s as i64;
    // a_0 = s*k with gcd(k, s) = 1 (k = 0 never qualifies for s >= 2)
    let mut n_a0 = 0u128;
    let mut n_other = 0u128;
    let mut a = -h;
    while a <= h {
        if a % s_i == 0 {
            n_other += 1;
            if gcd_u64((a / s_i).unsigned_abs(), s) == 1 {
                n_a0 += 1;
            }
        }
        a += 1;
    }
    let mut count = n_a0;
    for _ in 1..degree {
        count = count
            .checked_mul(n_other)
            .ok_or(Error::SpaceTooLarge { height, degree })?;
    }
    Ok(count)
}

/// Direct count of the subset of [`brute_count_g`]'s family that is also
/// Eisenstein at `d` and satisfies the genus congruence, by full iteration
/// over the coefficient grid. Requires `gcd(s, d) = 1`.
pub fn brute_count_gprime(degree: u32, s: u64, height: u64) -> Result<u128> {
    check_odd_prime_degree(degree)?;
    if gcd_u64(s, degree as u64) != 1 {
        return Err(Error::NotCoprimeToDegree { s, d: degree });
    }
    let d = degree as usize;
    let h = height as i64;
    let s_i = s as i64;
    let d_i = degree as i64;
    let dd = d_i * d_i;

    let mut count = 0u128;
    let mut coeffs = vec![-h; d];
    'grid: loop {
        count += u128::from(gprime_member(&coeffs, s_i, d_i, dd));
        for i in 0..d {
            coeffs[i] += 1;
            if coeffs[i] <= h {
                continue 'grid;
            }
            coeffs[i] = -h;
        }
        break;
    }
    Ok(count)
}

fn gprime_member(coeffs: &[i64], s: i64, d: i64, dd: i64) -> bool {
    let a0 = coeffs[0];
    if a0 == 0 {
        return false;
    }
    // s | a_i for all i, and gcd(a_0/s, s) = 1
    if coeffs.iter().any(|a| a % s != 0) {
        return false;
    }
    if gcd_u64((a0 / s).unsigned_abs(), s.unsigned_abs()) != 1 {
        return false;
    }
    // Eisenstein at d
    if coeffs.iter().any(|a| a % d != 0) || a0 % dd == 0 {
        return false;
    }
    // genus congruence
    let last = coeffs.len() - 1;
    if coeffs[1..last].iter().any(|a| a.rem_euclid(dd) != 0) {
        return false;
    }
    (a0.rem_euclid(dd) + coeffs[last].rem_euclid(dd)) % dd == 0
}
