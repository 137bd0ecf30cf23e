//! Normalized Chebyshev polynomials of the second kind.
//!
//! `u_0 = 1`, `u_1 = x`, `u_{n+1} = x·u_n − u_{n−1}`. `u_n` is the
//! characteristic polynomial of the path graph on `n` vertices.

use super::poly::IntPoly;

/// The normalized second-kind Chebyshev polynomial `u_n` (degree `n`).
pub fn chebyshev_u(n: usize) -> IntPoly {
    let mut prev = IntPoly::one();
    if n == 0 {
        return prev;
    }
    let x = IntPoly::x();
    let mut cur = x.clone();
    for _ in 1..n {
        let next = x.mul(&cur).sub(&prev);
        prev = cur;
        cur = next;
    }
    cur
}

/// The trace basis `w_k` with `w_0 = 2`, `w_1 = x`, `w_{k+1} = x·w_k − w_{k−1}`;
/// `w_k(z)` expresses `x^k + x^{−k}` as a polynomial in `z = x + 1/x`.
pub(crate) fn trace_basis(max_k: usize) -> alloc::vec::Vec<IntPoly> {
    let mut out = alloc::vec::Vec::with_capacity(max_k + 1);
    out.push(IntPoly::from_i64s(&[2]));
    if max_k == 0 {
        return out;
    }
    out.push(IntPoly::x());
    let x = IntPoly::x();
    for k in 2..=max_k {
        let next = x.mul(&out[k - 1]).sub(&out[k - 2]);
        out.push(next);
    }
    out
}
