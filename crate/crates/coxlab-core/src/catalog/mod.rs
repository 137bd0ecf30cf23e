//! Closed-form Coxeter polynomials, derived-type classification, and the
//! weighted-projective-line numerics (graded singularities, Hilbert series).

mod classify;
mod formulas;
mod lgroup;
mod tables;

use alloc::vec::Vec;

use crate::Error;

pub use classify::{classify_poly, factorization_string, DerivedType};
pub use formulas::{
    canonical_poly, extended_canonical_poly, star_chi_at_one, star_poly, supercanonical_poly,
};
pub use lgroup::{
    dim_s, hilbert_identity_check, hilbert_r, l_add, l_neg, l_normalize, omega, row_series,
    LElement,
};
pub use tables::{
    d_tilde_quiver, domestic_row_d_even, domestic_row_d_odd, domestic_row_pq, domestic_table,
    dynkin_table, extended_dynkin_table, wild_table, DynkinRow, ExtendedDynkinRow, SingularityRow,
};

/// Weight sequence in canonical (ascending) order; entries ≥ 1, with unit
/// weights permitted internally and dropped by [`WeightSeq::normalized`].
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct WeightSeq(Vec<usize>);

impl WeightSeq {
    pub fn new(mut weights: Vec<usize>) -> crate::Result<WeightSeq> {
        if weights.iter().any(|&p| p == 0) {
            return Err(Error::Argument("weights must be >= 1".into()));
        }
        weights.sort_unstable();
        Ok(WeightSeq(weights))
    }

    pub fn from_slice(weights: &[usize]) -> crate::Result<WeightSeq> {
        WeightSeq::new(weights.to_vec())
    }

    pub fn weights(&self) -> &[usize] {
        &self.0
    }

    pub fn t(&self) -> usize {
        self.0.len()
    }

    /// Drops unit weights (they never affect the spectral data).
    pub fn normalized(&self) -> WeightSeq {
        WeightSeq(self.0.iter().copied().filter(|&p| p > 1).collect())
    }

    /// Orbifold Euler characteristic numerator: `∏p_i · (2 − Σ(1 − 1/p_i))`,
    /// always an integer. Positive ⟺ domestic, zero ⟺ tubular, negative ⟺ wild.
    pub fn euler_characteristic_value(&self) -> num_bigint::BigInt {
        star_chi_at_one(self)
    }
}
