//! Cyclotomic polynomials and cyclotomic factorization.
//!
//! `Φ_n` is obtained from the recursion `x^n − 1 = ∏_{d|n} Φ_d`. Factoring a
//! polynomial into cyclotomics scans candidate indices `n ≤ 4·deg²` (the
//! quadratic totient bound `n ≤ 4·φ(n)²`) and extracts exponents by repeated
//! exact division.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use num_bigint::BigInt;

use super::poly::IntPoly;
use crate::Error;

/// Euler's totient.
pub fn totient(n: u64) -> u64 {
    let mut r = n;
    let mut m = n;
    let mut p = 2;
    while p * p <= m {
        if m % p == 0 {
            while m % p == 0 {
                m /= p;
            }
            r -= r / p;
        }
        p += 1;
    }
    if m > 1 {
        r -= r / m;
    }
    r
}

/// Totients of `0..=limit` by sieve.
pub fn totient_sieve(limit: usize) -> Vec<u64> {
    let mut phi: Vec<u64> = (0..=limit as u64).collect();
    for p in 2..=limit {
        if phi[p] == p as u64 {
            let mut k = p;
            while k <= limit {
                phi[k] -= phi[k] / p as u64;
                k += p;
            }
        }
    }
    phi
}

/// Memoizing cache of cyclotomic polynomials.
///
/// The factorization scans revisit small indices constantly, so callers that
/// factor many polynomials should share one cache.
#[derive(Default)]
pub struct CyclotomicCache {
    memo: BTreeMap<u64, IntPoly>,
}

impl CyclotomicCache {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn get(&mut self, n: u64) -> IntPoly {
        assert!(n >= 1, "cyclotomic index must be >= 1");
        if let Some(p) = self.memo.get(&n) {
            return p.clone();
        }
        let mut p = IntPoly::x_pow_minus_one(n as usize);
        for d in 1..n {
            if n % d == 0 {
                let phi_d = self.get(d);
                p = p.exact_div(&phi_d).expect("cyclotomic recursion divides");
            }
        }
        self.memo.insert(n, p.clone());
        p
    }

    /// `Φ_n(−1)`, used by the radius-one census.
    pub fn eval_minus_one(&mut self, n: u64) -> BigInt {
        self.get(n).eval_i64(-1)
    }
}

/// The `n`-th cyclotomic polynomial, monic of degree `φ(n)`.
pub fn cyclotomic(n: u64) -> crate::Result<IntPoly> {
    if n == 0 {
        return Err(Error::Argument("cyclotomic index must be >= 1".into()));
    }
    Ok(CyclotomicCache::new().get(n))
}

/// Multiset of cyclotomic factors plus the non-cyclotomic remainder.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CyclotomicFactorization {
    /// Sorted `(index, exponent)` pairs with exponent ≥ 1.
    pub factors: Vec<(u64, u32)>,
    /// What is left after dividing out every cyclotomic factor.
    pub remainder: IntPoly,
}

impl CyclotomicFactorization {
    /// True iff the polynomial was a product of cyclotomics (up to sign for
    /// non-monic inputs the remainder is the leftover constant).
    pub fn is_cyclotomic_product(&self) -> bool {
        self.remainder.is_one()
    }

    /// Exponent of `Φ_n` in the factorization.
    pub fn exponent_of(&self, n: u64) -> u32 {
        self.factors
            .iter()
            .find(|&&(d, _)| d == n)
            .map_or(0, |&(_, e)| e)
    }

    /// Rebuilds the polynomial `∏ Φ_n^{e_n} · remainder`.
    pub fn product(&self, cache: &mut CyclotomicCache) -> IntPoly {
        let mut p = self.remainder.clone();
        for &(n, e) in &self.factors {
            p = p.mul(&cache.get(n).pow(e));
        }
        p
    }
}

/// Factors `p` into cyclotomic polynomials times a remainder divisible by no `Φ_n`.
///
/// The scan covers all candidate indices `n` with `φ(n) ≤ deg p`, which by the
/// quadratic bound are among `1..=4·(deg p)²`.
pub fn cyclotomic_factor(p: &IntPoly) -> crate::Result<CyclotomicFactorization> {
    cyclotomic_factor_cached(p, &mut CyclotomicCache::new())
}

pub fn cyclotomic_factor_cached(
    p: &IntPoly,
    cache: &mut CyclotomicCache,
) -> crate::Result<CyclotomicFactorization> {
    if p.is_zero() {
        return Err(Error::Argument(
            "cannot factor the zero polynomial".into(),
        ));
    }
    let deg = p.degree_or_zero();
    let mut rem = p.clone();
    let mut factors = Vec::new();
    if deg == 0 {
        return Ok(CyclotomicFactorization { factors, remainder: rem });
    }
    let bound = 4 * deg * deg;
    let phi = totient_sieve(bound);
    for n in 1..=bound as u64 {
        let d = phi[n as usize];
        if d > rem.degree_or_zero() as u64 {
            continue;
        }
        let cyc = cache.get(n);
        let mut e = 0u32;
        while let Some(q) = rem.try_exact_div(&cyc) {
            rem = q;
            e += 1;
        }
        if e > 0 {
            factors.push((n, e));
        }
        if rem.is_constant() {
            break;
        }
    }
    Ok(CyclotomicFactorization { factors, remainder: rem })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_cyclotomics() {
        assert_eq!(cyclotomic(1).unwrap(), IntPoly::from_i64s(&[-1, 1]));
        assert_eq!(cyclotomic(2).unwrap(), IntPoly::from_i64s(&[1, 1]));
        assert_eq!(cyclotomic(6).unwrap(), IntPoly::from_i64s(&[1, -1, 1]));
        // Phi_12 derived by dividing x^12-1 by the proper-divisor cyclotomics
        assert_eq!(cyclotomic(12).unwrap(), IntPoly::from_i64s(&[1, 0, -1, 0, 1]));
        assert!(cyclotomic(0).is_err());
    }

    #[test]
    fn degree_is_totient() {
        for n in 1..=200u64 {
            assert_eq!(
                cyclotomic(n).unwrap().degree_or_zero() as u64,
                totient(n),
                "n={n}"
            );
        }
    }

    #[test]
    fn product_over_divisors_is_x_n_minus_one() {
        let mut cache = CyclotomicCache::new();
        for n in 1..=200u64 {
            let mut p = IntPoly::one();
            for d in 1..=n {
                if n % d == 0 {
                    p = p.mul(&cache.get(d));
                }
            }
            assert_eq!(p, IntPoly::x_pow_minus_one(n as usize), "n={n}");
        }
    }

    #[test]
    fn sieve_matches_direct_totient() {
        let phi = totient_sieve(500);
        for n in 1..=500 {
            assert_eq!(phi[n], totient(n as u64));
        }
    }

    #[test]
    fn factor_x6_minus_one() {
        let f = cyclotomic_factor(&IntPoly::x_pow_minus_one(6)).unwrap();
        assert_eq!(f.factors, alloc::vec![(1, 1), (2, 1), (3, 1), (6, 1)]);
        assert!(f.is_cyclotomic_product());
    }

    #[test]
    fn factor_leaves_non_cyclotomic_remainder() {
        // x^2-3x+1 has roots (3±√5)/2, not roots of unity
        let p = IntPoly::from_i64s(&[1, -3, 1]);
        let f = cyclotomic_factor(&p).unwrap();
        assert!(f.factors.is_empty());
        assert_eq!(f.remainder, p);
    }

    #[test]
    fn factor_with_multiplicities_round_trips() {
        let mut cache = CyclotomicCache::new();
        let p = cache.get(2).pow(3).mul(&cache.get(5)).mul(&cache.get(12));
        let f = cyclotomic_factor_cached(&p, &mut cache).unwrap();
        assert_eq!(f.factors, alloc::vec![(2, 3), (5, 1), (12, 1)]);
        assert_eq!(f.product(&mut cache), p);
    }

    #[test]
    fn self_reciprocal_cyclotomics() {
        // Phi_1 = x-1 is not self-reciprocal, every Phi_n with n >= 2 is
        let mut cache = CyclotomicCache::new();
        assert!(!cache.get(1).is_self_reciprocal());
        for n in 2..=60 {
            assert!(cache.get(n).is_self_reciprocal(), "n={n}");
        }
    }
}
