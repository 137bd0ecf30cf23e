//! The rank-one grading group `L(p)` and graded-singularity Hilbert series.
//!
//! `L(p)` is generated by `x⃗_1, …, x⃗_t` with `c⃗ := p_1x⃗_1 = ⋯ = p_tx⃗_t`;
//! every element has the unique normal form `Σ a_i x⃗_i + l·c⃗` with
//! `0 ≤ a_i < p_i`. The coordinate algebra `S(p, λ)` is graded by `L(p)` and
//! its homogeneous component at normal form height `l` has dimension `l + 1`
//! (for `t ≥ 2`); restricting along the dualizing element `ω⃗` produces the
//! ℤ-graded singularity `R` whose Hilbert series the tables describe.

use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use super::formulas::{canonical_poly, extended_canonical_poly, star_chi_at_one, star_poly};
use super::tables::SingularityRow;
use super::WeightSeq;
use crate::exactmath::{IntPoly, RatFunc};
use crate::Error;

/// Normal-form element `Σ a_i x⃗_i + l·c⃗` of `L(p)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LElement {
    pub a: Vec<i64>,
    pub l: i64,
}

/// Normalizes a raw combination `Σ c_i x⃗_i + c_0·c⃗`.
pub fn l_normalize(p: &WeightSeq, coeffs: &[i64], c_coeff: i64) -> crate::Result<LElement> {
    if coeffs.len() != p.t() {
        return Err(Error::Argument(alloc::format!(
            "{} coefficients for {} weights",
            coeffs.len(),
            p.t()
        )));
    }
    let mut a = Vec::with_capacity(p.t());
    let mut l = c_coeff;
    for (&c, &w) in coeffs.iter().zip(p.weights()) {
        let w = w as i64;
        let r = c.rem_euclid(w);
        a.push(r);
        l += (c - r) / w;
    }
    Ok(LElement { a, l })
}

pub fn l_add(p: &WeightSeq, x: &LElement, y: &LElement) -> crate::Result<LElement> {
    let coeffs: Vec<i64> = x.a.iter().zip(&y.a).map(|(u, v)| u + v).collect();
    l_normalize(p, &coeffs, x.l + y.l)
}

pub fn l_neg(p: &WeightSeq, x: &LElement) -> crate::Result<LElement> {
    let coeffs: Vec<i64> = x.a.iter().map(|&u| -u).collect();
    l_normalize(p, &coeffs, -x.l)
}

/// The dualizing element `ω⃗ = (t−2)·c⃗ − Σ x⃗_i`.
pub fn omega(p: &WeightSeq) -> LElement {
    let coeffs: Vec<i64> = p.weights().iter().map(|_| -1i64).collect();
    l_normalize(p, &coeffs, p.t() as i64 - 2).expect("dimensions match")
}

/// Dimension of the homogeneous component `S_x⃗`.
pub fn dim_s(p: &WeightSeq, x: &LElement) -> u64 {
    match p.t() {
        0 => u64::from(x.l == 0),
        1 => u64::from(x.l >= 0),
        _ => {
            if x.l >= 0 {
                x.l as u64 + 1
            } else {
                0
            }
        }
    }
}

fn scaled_omega(p: &WeightSeq, n: i64) -> LElement {
    let w = omega(p);
    let coeffs: Vec<i64> = w.a.iter().map(|&u| n * u).collect();
    l_normalize(p, &coeffs, n * w.l).expect("dimensions match")
}

/// First `n_terms` dimensions of `R = ⊕ R_n` with `R_n = S_{∓n·ω⃗}` by the
/// sign of the orbifold Euler characteristic.
pub fn hilbert_r(p: &WeightSeq, n_terms: usize) -> crate::Result<Vec<BigInt>> {
    let norm = p.normalized();
    if norm.t() > 3 {
        return Err(Error::Argument(
            "Hilbert series supported for at most three weights".into(),
        ));
    }
    let chi1 = star_chi_at_one(p);
    if chi1.is_zero() {
        return Err(Error::Argument(
            "tubular type: no Z-graded coordinate algebra".into(),
        ));
    }
    let sign: i64 = if chi1.is_positive() { -1 } else { 1 };
    Ok((0..n_terms as i64)
        .map(|n| BigInt::from(dim_s(p, &scaled_omega(p, sign * n))))
        .collect())
}

/// Checks, as reduced rational functions, that the closed-form Poincaré
/// series of `R` matches the complete-intersection series of the table row:
/// `χ_num/χ_{(p)} = (1 − x^{d_f}) / ∏(1 − x^{d_i})`, with `χ_num` the star
/// polynomial in the domestic case and the extended canonical polynomial in
/// the wild case.
pub fn hilbert_identity_check(row: &SingularityRow) -> crate::Result<bool> {
    let p = WeightSeq::from_slice(&row.weights)?;
    let chi1 = star_chi_at_one(&p);
    if chi1.is_zero() {
        return Err(Error::Argument("tubular rows have no Hilbert identity".into()));
    }
    let num = if chi1.is_positive() {
        star_poly(&p)
    } else {
        extended_canonical_poly(&p)
    };
    let lhs = RatFunc::new(num, canonical_poly(&p))?;
    let (dx, dy, dz) = row.gen_degrees;
    let rhs = RatFunc::new(
        IntPoly::one_minus_x_pow(row.rel_degree),
        IntPoly::one_minus_x_pow(dx)
            .mul(&IntPoly::one_minus_x_pow(dy))
            .mul(&IntPoly::one_minus_x_pow(dz)),
    )?;
    Ok(lhs.equivalent(&rhs))
}

/// The complete-intersection Hilbert series of a table row, for series
/// cross-checks.
pub fn row_series(row: &SingularityRow, n_terms: usize) -> crate::Result<Vec<BigInt>> {
    let (dx, dy, dz) = row.gen_degrees;
    let rf = RatFunc::new(
        IntPoly::one_minus_x_pow(row.rel_degree),
        IntPoly::one_minus_x_pow(dx)
            .mul(&IntPoly::one_minus_x_pow(dy))
            .mul(&IntPoly::one_minus_x_pow(dz)),
    )?;
    rf.series(n_terms)
}
