//! Closed formulas for the Coxeter polynomials of stars, canonical,
//! extended canonical and supercanonical algebras.

use num_bigint::BigInt;

use super::WeightSeq;
use crate::algebras::{Poset, AlgebraSpec};
use crate::coxeter::chi;
use crate::exactmath::{IntPoly, RatFunc};

fn v_or_zero(n: usize) -> IntPoly {
    if n == 0 {
        IntPoly::zero()
    } else {
        IntPoly::v(n).expect("n >= 1")
    }
}

/// Coxeter polynomial of the hereditary star `[p_1, …, p_t]`:
/// `∏ v_{p_i} · ((x+1) − x·Σ v_{p_i−1}/v_{p_i})`, cleared exactly.
///
/// Weight-1 arms contribute trivially. The fractions always cancel; a
/// non-polynomial result would be an internal error.
pub fn star_poly(p: &WeightSeq) -> IntPoly {
    let mut sum = RatFunc::from_poly(IntPoly::zero());
    for &w in p.weights() {
        let term = RatFunc::new(v_or_zero(w - 1), v_or_zero(w)).expect("v_w nonzero");
        sum = sum.add(&term);
    }
    let mut prod = RatFunc::from_poly(IntPoly::from_i64s(&[1, 1]));
    let x = RatFunc::from_poly(IntPoly::x());
    prod = prod.sub(&x.mul(&sum));
    for &w in p.weights() {
        prod = prod.mul(&RatFunc::from_poly(v_or_zero(w)));
    }
    prod.as_polynomial()
        .expect("star formula always clears its denominators")
        .clone()
}

/// `χ(1) = ∏p_i·(2 − Σ(1 − 1/p_i))`, evaluated exactly (an integer).
///
/// Its sign runs the Dynkin / extended-Dynkin / wild trichotomy.
pub fn star_chi_at_one(p: &WeightSeq) -> BigInt {
    let t = p.t() as i64;
    let mut prod = BigInt::from(1);
    for &w in p.weights() {
        prod *= BigInt::from(w as i64);
    }
    let mut acc = BigInt::from(2 - t) * &prod;
    for i in 0..p.t() {
        let mut partial = BigInt::from(1);
        for (j, &w) in p.weights().iter().enumerate() {
            if j != i {
                partial *= BigInt::from(w as i64);
            }
        }
        acc += partial;
    }
    acc
}

/// Canonical Coxeter polynomial `(x−1)²·∏ v_{p_i}`.
pub fn canonical_poly(p: &WeightSeq) -> IntPoly {
    let mut acc = IntPoly::from_i64s(&[1, -2, 1]);
    for &w in p.weights() {
        acc = acc.mul(&v_or_zero(w));
    }
    acc
}

/// Extended canonical Coxeter polynomial
/// `(x+1)·(x−1)²·∏v_{p_i} − x·χ_{[p_1,…,p_t]}`.
pub fn extended_canonical_poly(p: &WeightSeq) -> IntPoly {
    IntPoly::from_i64s(&[1, 1])
        .mul(&canonical_poly(p))
        .sub(&IntPoly::x().mul(&star_poly(p)))
}

/// Supercanonical Coxeter polynomial `(x−1)²·∏ χ_{S_i}` over the arm posets.
pub fn supercanonical_poly(arms: &[Poset]) -> crate::Result<IntPoly> {
    let mut acc = IntPoly::from_i64s(&[1, -2, 1]);
    for s in arms {
        acc = acc.mul(&chi(&AlgebraSpec::Poset(s.clone()))?);
    }
    Ok(acc)
}
