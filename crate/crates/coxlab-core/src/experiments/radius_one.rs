//! Counting monic integral polynomials of spectral radius one.
//!
//! Kronecker: such a polynomial is a product of cyclotomics, so degree-`n`
//! counts are multiset counts over cyclotomic indices `d` with
//! `φ(d) ≤ n ≤ 4·φ(d)²`-bounded search. Per multiset the census tracks the
//! `Φ_1`-exponent parity (self-reciprocality) and the exact value `f(−1)`
//! (perfect squareness), so the three table rows come out of one DFS.

use alloc::vec::Vec;

use crate::exactmath::{totient_sieve, CyclotomicCache};
use crate::Error;

/// One column of the radius-one table.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct RadiusOneCounts {
    pub n: usize,
    /// Monic degree-`n` polynomials of spectral radius 1.
    pub a: u64,
    /// ... that are self-reciprocal.
    pub b: u64,
    /// ... self-reciprocal with `f(−1)` a perfect square.
    pub c: u64,
}

impl core::ops::Add for RadiusOneCounts {
    type Output = RadiusOneCounts;
    fn add(self, rhs: RadiusOneCounts) -> RadiusOneCounts {
        debug_assert_eq!(self.n, rhs.n);
        RadiusOneCounts {
            n: self.n,
            a: self.a + rhs.a,
            b: self.b + rhs.b,
            c: self.c + rhs.c,
        }
    }
}

fn is_square_i128(x: i128) -> bool {
    if x < 0 {
        return false;
    }
    let r = num_integer::Roots::sqrt(&(x as u128)) as i128;
    r * r == x
}

/// Candidate cyclotomic indices for degree `n`: all `d` with `φ(d) ≤ n`,
/// with `Φ_d(−1)` precomputed.
fn candidates(n: usize) -> Vec<(u64, usize, i128)> {
    let bound = 4 * n * n;
    let phi = totient_sieve(bound);
    let mut cache = CyclotomicCache::new();
    let mut out = Vec::new();
    for d in 1..=bound as u64 {
        let t = phi[d as usize] as usize;
        if t <= n {
            let pm = cache.eval_minus_one(d);
            let pm: i128 = i128::try_from(&pm).expect("small value");
            out.push((d, t, pm));
        }
    }
    out
}

fn dfs(
    cands: &[(u64, usize, i128)],
    k: usize,
    remaining: usize,
    phi1_parity: bool,
    value: i128,
    counts: &mut RadiusOneCounts,
    collector: &mut Option<(&mut Vec<Vec<(u64, u32)>>, &mut Vec<(u64, u32)>, usize)>,
) {
    if remaining == 0 {
        counts.a += 1;
        if !phi1_parity {
            counts.b += 1;
            if is_square_i128(value) {
                counts.c += 1;
            }
        }
        if let Some((store, stack, cap)) = collector {
            if store.len() < *cap {
                store.push(stack.clone());
            }
        }
        return;
    }
    if k == cands.len() {
        return;
    }
    let (d, t, pm) = cands[k];
    // exponent 0
    dfs(cands, k + 1, remaining, phi1_parity, value, counts, collector);
    let mut e = 1u32;
    let mut val = value;
    while t * e as usize <= remaining {
        val = val.saturating_mul(pm);
        let parity = if d == 1 {
            phi1_parity ^ (e % 2 == 1)
        } else {
            phi1_parity
        };
        if let Some((_, stack, _)) = collector {
            stack.push((d, e));
        }
        dfs(
            cands,
            k + 1,
            remaining - t * e as usize,
            parity,
            val,
            counts,
            collector,
        );
        if let Some((_, stack, _)) = collector {
            stack.pop();
        }
        e += 1;
    }
}

/// The `(a, b, c)` counts for degree `n` (supported for `1 ≤ n ≤ 25`).
pub fn count_radius_one(n: usize) -> crate::Result<RadiusOneCounts> {
    if n == 0 {
        return Err(Error::Argument("degree must be >= 1".into()));
    }
    if n > 25 {
        return Err(Error::Argument("radius-one census bounded at degree 25".into()));
    }
    let cands = candidates(n);
    let mut counts = RadiusOneCounts { n, a: 0, b: 0, c: 0 };
    dfs(&cands, 0, n, false, 1, &mut counts, &mut None);
    Ok(counts)
}

/// Counts restricted to multisets with exactly `e1` copies of `Φ_1`
/// (partition piece for parallel drivers; the pieces sum to the full count).
pub fn count_radius_one_with_phi1_exponent(n: usize, e1: u32) -> crate::Result<RadiusOneCounts> {
    if n == 0 {
        return Err(Error::Argument("degree must be >= 1".into()));
    }
    if n > 25 {
        return Err(Error::Argument("radius-one census bounded at degree 25".into()));
    }
    if e1 as usize > n {
        return Ok(RadiusOneCounts { n, a: 0, b: 0, c: 0 });
    }
    let cands: Vec<(u64, usize, i128)> =
        candidates(n).into_iter().filter(|&(d, _, _)| d != 1).collect();
    let mut counts = RadiusOneCounts { n, a: 0, b: 0, c: 0 };
    let value = (-2i128).pow(e1);
    dfs(
        &cands,
        0,
        n - e1 as usize,
        e1 % 2 == 1,
        value,
        &mut counts,
        &mut None,
    );
    Ok(counts)
}

/// First multisets (in DFS order) counted for degree `n`, as
/// `(index, exponent)` lists; used by sampling suites.
pub fn sample_radius_one(n: usize, cap: usize) -> crate::Result<Vec<Vec<(u64, u32)>>> {
    if n == 0 || n > 25 {
        return Err(Error::Argument("degree must be in 1..=25".into()));
    }
    let cands = candidates(n);
    let mut counts = RadiusOneCounts { n, a: 0, b: 0, c: 0 };
    let mut store = Vec::new();
    let mut stack = Vec::new();
    dfs(
        &cands,
        0,
        n,
        false,
        1,
        &mut counts,
        &mut Some((&mut store, &mut stack, cap)),
    );
    Ok(store)
}
