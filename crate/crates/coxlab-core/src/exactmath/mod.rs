//! Exact integer polynomial and matrix arithmetic.

mod chebyshev;
mod cyclotomic;
mod matrix;
mod poly;
mod ratfunc;
mod sturm;

pub use chebyshev::chebyshev_u;
pub(crate) use chebyshev::trace_basis;
pub use cyclotomic::{
    cyclotomic, cyclotomic_factor, cyclotomic_factor_cached, totient, totient_sieve,
    CyclotomicCache, CyclotomicFactorization,
};
pub use matrix::{is_perfect_square, IntMatrix};
pub use poly::IntPoly;
pub use ratfunc::RatFunc;
pub use sturm::{count_real_roots, sturm_count, Bound};

/// `v_n = 1 + x + … + x^{n−1}`.
pub fn v_poly(n: usize) -> crate::Result<IntPoly> {
    IntPoly::v(n)
}
