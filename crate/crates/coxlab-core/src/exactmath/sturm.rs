//! Exact real-root counting with Sturm sequences.
//!
//! Counting always happens on the squarefree part `p / gcd(p, p′)`, so the
//! result is the number of *distinct* real roots in the half-open interval
//! `(lo, hi]`. All sign evaluations are exact: rational endpoints are handled
//! as integer pairs, infinite endpoints through leading-coefficient signs.

use alloc::vec::Vec;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

use super::poly::IntPoly;
use crate::Error;

/// Interval endpoint: rational or infinite.
#[derive(Clone, Debug, PartialEq)]
pub enum Bound {
    NegInf,
    Finite(BigRational),
    PosInf,
}

impl Bound {
    pub fn from_i64(x: i64) -> Self {
        Bound::Finite(BigRational::from(BigInt::from(x)))
    }

    pub fn from_ratio(num: i64, den: i64) -> Self {
        assert!(den != 0);
        Bound::Finite(BigRational::new(BigInt::from(num), BigInt::from(den)))
    }
}

/// Sign of `p` at a bound; zeros report 0 (only possible at finite points).
fn sign_at(p: &IntPoly, b: &Bound) -> i8 {
    match p.degree() {
        None => 0,
        Some(d) => match b {
            Bound::PosInf => sign_big(&p.leading()),
            Bound::NegInf => {
                let s = sign_big(&p.leading());
                if d % 2 == 0 {
                    s
                } else {
                    -s
                }
            }
            Bound::Finite(r) => {
                let (u, w) = (r.numer().clone(), r.denom().clone());
                debug_assert!(w.is_positive());
                p.sign_at_rational(&u, &w)
            }
        },
    }
}

fn sign_big(x: &BigInt) -> i8 {
    if x.is_zero() {
        0
    } else if x.is_positive() {
        1
    } else {
        -1
    }
}

/// Sturm chain of a squarefree polynomial.
fn sturm_chain(p: &IntPoly) -> Vec<IntPoly> {
    let mut chain = Vec::new();
    let mut a = p.clone();
    let mut b = p.derivative();
    chain.push(a.clone());
    while !b.is_zero() {
        chain.push(b.clone());
        // -rem(a, b), sign-exact via even-power pseudo-remainder, content removed
        let r = a.pseudo_rem(&b);
        let r = r.primitive_part().negate();
        a = b;
        b = r;
    }
    chain
}

fn variations(chain: &[IntPoly], b: &Bound) -> usize {
    let mut count = 0;
    let mut last: i8 = 0;
    for p in chain {
        let s = sign_at(p, b);
        if s == 0 {
            continue;
        }
        if last != 0 && s != last {
            count += 1;
        }
        last = s;
    }
    count
}

/// Number of distinct real roots of `p` in the half-open interval `(lo, hi]`.
pub fn sturm_count(p: &IntPoly, lo: &Bound, hi: &Bound) -> crate::Result<usize> {
    if p.is_zero() {
        return Err(Error::Argument("sturm_count of the zero polynomial".into()));
    }
    if let (Bound::Finite(a), Bound::Finite(b)) = (lo, hi) {
        if a > b {
            return Err(Error::Argument("empty interval: lo > hi".into()));
        }
    }
    let sf = p.squarefree_part();
    if sf.is_constant() {
        return Ok(0);
    }
    let chain = sturm_chain(&sf);
    let va = variations(&chain, lo);
    let vb = variations(&chain, hi);
    Ok(va.saturating_sub(vb))
}

/// Distinct real roots over all of ℝ.
pub fn count_real_roots(p: &IntPoly) -> crate::Result<usize> {
    sturm_count(p, &Bound::NegInf, &Bound::PosInf)
}
