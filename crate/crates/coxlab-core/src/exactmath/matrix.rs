//! Square integer matrices with exact linear algebra.
//!
//! Determinants use fraction-free Bareiss elimination; characteristic
//! polynomials use the division-free Samuelson–Berkowitz algorithm, so both
//! are bit-exact over arbitrary-precision integers. A checked `i64` fast path
//! handles the small matrices that dominate the censuses and falls back to
//! `BigInt` on any overflow.

use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::poly::IntPoly;
use crate::Error;

/// Square matrix of arbitrary-precision integers, row-major.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct IntMatrix {
    n: usize,
    entries: Vec<BigInt>,
}

impl IntMatrix {
    pub fn zeros(n: usize) -> Self {
        IntMatrix {
            n,
            entries: vec![BigInt::zero(); n * n],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = IntMatrix::zeros(n);
        for i in 0..n {
            *m.at_mut(i, i) = BigInt::one();
        }
        m
    }

    pub fn from_fn(n: usize, mut f: impl FnMut(usize, usize) -> BigInt) -> Self {
        let mut m = IntMatrix::zeros(n);
        for i in 0..n {
            for j in 0..n {
                *m.at_mut(i, j) = f(i, j);
            }
        }
        m
    }

    pub fn from_rows_i64(rows: &[&[i64]]) -> Self {
        let n = rows.len();
        assert!(rows.iter().all(|r| r.len() == n), "matrix must be square");
        IntMatrix::from_fn(n, |i, j| BigInt::from(rows[i][j]))
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn at(&self, i: usize, j: usize) -> &BigInt {
        &self.entries[i * self.n + j]
    }

    pub fn at_mut(&mut self, i: usize, j: usize) -> &mut BigInt {
        &mut self.entries[i * self.n + j]
    }

    pub fn transpose(&self) -> IntMatrix {
        IntMatrix::from_fn(self.n, |i, j| self.at(j, i).clone())
    }

    pub fn negate(&self) -> IntMatrix {
        IntMatrix {
            n: self.n,
            entries: self.entries.iter().map(|x| -x).collect(),
        }
    }

    pub fn matmul(&self, other: &IntMatrix) -> IntMatrix {
        assert_eq!(self.n, other.n, "dimension mismatch");
        let n = self.n;
        let mut out = IntMatrix::zeros(n);
        for i in 0..n {
            for k in 0..n {
                let a = self.at(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..n {
                    *out.at_mut(i, j) += a * other.at(k, j);
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[BigInt]) -> Vec<BigInt> {
        assert_eq!(v.len(), self.n, "dimension mismatch");
        (0..self.n)
            .map(|i| (0..self.n).map(|j| self.at(i, j) * &v[j]).sum())
            .collect()
    }

    /// Column `j` as a vector.
    pub fn column(&self, j: usize) -> Vec<BigInt> {
        (0..self.n).map(|i| self.at(i, j).clone()).collect()
    }

    pub fn row(&self, i: usize) -> Vec<BigInt> {
        (0..self.n).map(|j| self.at(i, j).clone()).collect()
    }

    /// Deletes row and column `v`.
    pub fn minor_matrix(&self, v: usize) -> IntMatrix {
        assert!(v < self.n);
        IntMatrix::from_fn(self.n - 1, |i, j| {
            let ii = if i < v { i } else { i + 1 };
            let jj = if j < v { j } else { j + 1 };
            self.at(ii, jj).clone()
        })
    }

    fn to_i64(&self) -> Option<Vec<i64>> {
        self.entries.iter().map(|x| x.to_i64()).collect()
    }

    pub fn is_upper_unitriangular(&self) -> bool {
        for i in 0..self.n {
            if !self.at(i, i).is_one() {
                return false;
            }
            for j in 0..i {
                if !self.at(i, j).is_zero() {
                    return false;
                }
            }
        }
        true
    }

    pub fn is_lower_unitriangular(&self) -> bool {
        self.transpose().is_upper_unitriangular()
    }

    /// Exact determinant by fraction-free (Bareiss) elimination.
    pub fn det(&self) -> BigInt {
        if self.n == 0 {
            return BigInt::one();
        }
        if let Some(small) = self.to_i64() {
            if let Some(d) = bareiss_det_i64(&small, self.n) {
                return BigInt::from(d);
            }
        }
        bareiss_det_big(&self.entries, self.n)
    }

    /// Characteristic polynomial `det(xI − M)`, monic, by the division-free
    /// Berkowitz algorithm.
    pub fn char_poly(&self) -> IntPoly {
        if self.n == 0 {
            return IntPoly::one();
        }
        if let Some(small) = self.to_i64() {
            if let Some(cs) = berkowitz_i64(&small, self.n) {
                return IntPoly::from_i64s(&cs);
            }
        }
        berkowitz_big(self)
    }

    /// Integer inverse for matrices of determinant ±1.
    pub fn inverse_unimodular(&self) -> crate::Result<IntMatrix> {
        let d = self.det();
        if !d.is_one() && d != -BigInt::one() {
            return Err(Error::NotUnimodular(alloc::format!(
                "determinant is {d}, not ±1"
            )));
        }
        if self.is_upper_unitriangular() {
            return Ok(self.unitriangular_inverse());
        }
        if self.is_lower_unitriangular() {
            return Ok(self.transpose().unitriangular_inverse().transpose());
        }
        // adjugate route: inv = adj / det with det = ±1
        let n = self.n;
        let mut inv = IntMatrix::zeros(n);
        for i in 0..n {
            for j in 0..n {
                let mut m = IntMatrix::zeros(n - 1);
                for r in 0..n - 1 {
                    for c in 0..n - 1 {
                        let rr = if r < j { r } else { r + 1 };
                        let cc = if c < i { c } else { c + 1 };
                        *m.at_mut(r, c) = self.at(rr, cc).clone();
                    }
                }
                let mut cof = m.det();
                if (i + j) % 2 == 1 {
                    cof = -cof;
                }
                *inv.at_mut(i, j) = &cof * &d; // divide by det = multiply by ±1
            }
        }
        Ok(inv)
    }

    /// Back-substitution inverse for an upper unitriangular matrix.
    fn unitriangular_inverse(&self) -> IntMatrix {
        let n = self.n;
        let mut x = IntMatrix::zeros(n);
        for j in 0..n {
            *x.at_mut(j, j) = BigInt::one();
            for i in (0..j).rev() {
                let mut s = BigInt::zero();
                for k in i + 1..=j {
                    s += self.at(i, k) * x.at(k, j);
                }
                *x.at_mut(i, j) = -s;
            }
        }
        x
    }
}

fn bareiss_det_big(entries: &[BigInt], n: usize) -> BigInt {
    let mut a: Vec<BigInt> = entries.to_vec();
    let mut sign = false;
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if a[k * n + k].is_zero() {
            let Some(p) = (k + 1..n).find(|&r| !a[r * n + k].is_zero()) else {
                return BigInt::zero();
            };
            for c in 0..n {
                a.swap(k * n + c, p * n + c);
            }
            sign = !sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let t = &a[i * n + j] * &a[k * n + k] - &a[i * n + k] * &a[k * n + j];
                a[i * n + j] = &t / &prev;
            }
            a[i * n + k] = BigInt::zero();
        }
        prev = a[k * n + k].clone();
    }
    let d = a[(n - 1) * n + (n - 1)].clone();
    if sign {
        -d
    } else {
        d
    }
}

fn bareiss_det_i64(entries: &[i64], n: usize) -> Option<i64> {
    let mut a = entries.to_vec();
    let mut sign = false;
    let mut prev: i64 = 1;
    for k in 0..n - 1 {
        if a[k * n + k] == 0 {
            let Some(p) = (k + 1..n).find(|&r| a[r * n + k] != 0) else {
                return Some(0);
            };
            for c in 0..n {
                a.swap(k * n + c, p * n + c);
            }
            sign = !sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let t = a[i * n + j]
                    .checked_mul(a[k * n + k])?
                    .checked_sub(a[i * n + k].checked_mul(a[k * n + j])?)?;
                a[i * n + j] = t / prev;
            }
            a[i * n + k] = 0;
        }
        prev = a[k * n + k];
    }
    let d = a[(n - 1) * n + (n - 1)];
    Some(if sign { -d } else { d })
}

fn berkowitz_big(m: &IntMatrix) -> IntPoly {
    let n = m.dim();
    // p holds descending coefficients of the char poly of the leading r x r block
    let mut p: Vec<BigInt> = vec![BigInt::one(), -m.at(0, 0).clone()];
    for r in 2..=n {
        let rm = r - 1;
        // t_0 = 1, t_1 = -a_rr, t_k = -(R · M^{k-2} · C)
        let mut t: Vec<BigInt> = Vec::with_capacity(r + 1);
        t.push(BigInt::one());
        t.push(-m.at(rm, rm).clone());
        let mut w: Vec<BigInt> = (0..rm).map(|i| m.at(i, rm).clone()).collect();
        for k in 2..=r {
            let dot: BigInt = (0..rm).map(|i| m.at(rm, i) * &w[i]).sum();
            t.push(-dot);
            if k < r {
                w = (0..rm)
                    .map(|i| (0..rm).map(|j| m.at(i, j) * &w[j]).sum())
                    .collect();
            }
        }
        let mut next = vec![BigInt::zero(); r + 1];
        for (i, slot) in next.iter_mut().enumerate() {
            let mut s = BigInt::zero();
            for (j, pj) in p.iter().enumerate() {
                if i >= j && i - j < t.len() {
                    s += &t[i - j] * pj;
                }
            }
            *slot = s;
        }
        p = next;
    }
    p.reverse();
    IntPoly::new(p)
}

fn berkowitz_i64(entries: &[i64], n: usize) -> Option<Vec<i64>> {
    let at = |i: usize, j: usize| entries[i * n + j];
    let mut p: Vec<i64> = vec![1, at(0, 0).checked_neg()?];
    for r in 2..=n {
        let rm = r - 1;
        let mut t: Vec<i64> = Vec::with_capacity(r + 1);
        t.push(1);
        t.push(at(rm, rm).checked_neg()?);
        let mut w: Vec<i64> = (0..rm).map(|i| at(i, rm)).collect();
        for k in 2..=r {
            let mut dot: i64 = 0;
            for i in 0..rm {
                dot = dot.checked_add(at(rm, i).checked_mul(w[i])?)?;
            }
            t.push(dot.checked_neg()?);
            if k < r {
                let mut nw = vec![0i64; rm];
                for (i, slot) in nw.iter_mut().enumerate() {
                    let mut s: i64 = 0;
                    for (j, wj) in w.iter().enumerate() {
                        s = s.checked_add(at(i, j).checked_mul(*wj)?)?;
                    }
                    *slot = s;
                }
                w = nw;
            }
        }
        let mut next = vec![0i64; r + 1];
        for (i, slot) in next.iter_mut().enumerate() {
            let mut s: i64 = 0;
            for (j, pj) in p.iter().enumerate() {
                if i >= j && i - j < t.len() {
                    s = s.checked_add(t[i - j].checked_mul(*pj)?)?;
                }
            }
            *slot = s;
        }
        p = next;
    }
    p.reverse();
    Some(p)
}

/// True iff `n ≥ 0` and `n` is the square of an integer.
pub fn is_perfect_square(n: &BigInt) -> bool {
    if n.is_negative() {
        return false;
    }
    let r = n.sqrt();
    &(&r * &r) == n
}
