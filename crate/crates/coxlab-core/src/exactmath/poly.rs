//! Dense integer polynomials.
//!
//! [`IntPoly`] stores arbitrary-precision coefficients in ascending degree
//! order with no trailing zeros; the empty coefficient vector is the zero
//! polynomial. This is the universal value type for Coxeter polynomials,
//! characteristic polynomials, cyclotomic polynomials and the `v_n` blocks.

use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};
use core::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::Error;

/// Dense univariate polynomial over the integers.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct IntPoly {
    coeffs: Vec<BigInt>,
}

impl IntPoly {
    /// Builds a polynomial from ascending coefficients, trimming trailing zeros.
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        IntPoly { coeffs }
    }

    pub fn from_i64s(coeffs: &[i64]) -> Self {
        IntPoly::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn zero() -> Self {
        IntPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        IntPoly::constant(BigInt::one())
    }

    pub fn constant(c: BigInt) -> Self {
        IntPoly::new(vec![c])
    }

    /// The monomial `c·x^k`.
    pub fn monomial(c: BigInt, k: usize) -> Self {
        let mut coeffs = vec![BigInt::zero(); k + 1];
        coeffs[k] = c;
        IntPoly::new(coeffs)
    }

    pub fn x() -> Self {
        IntPoly::monomial(BigInt::one(), 1)
    }

    /// `x^n − 1`.
    pub fn x_pow_minus_one(n: usize) -> Self {
        let mut coeffs = vec![BigInt::zero(); n + 1];
        coeffs[0] = -BigInt::one();
        coeffs[n] = BigInt::one();
        IntPoly::new(coeffs)
    }

    /// `1 − x^n`.
    pub fn one_minus_x_pow(n: usize) -> Self {
        -&IntPoly::x_pow_minus_one(n)
    }

    /// `v_n = 1 + x + … + x^{n−1}`, the building block of the closed formulas.
    ///
    /// `v_n(1) = n` and `deg v_n = n − 1`.
    pub fn v(n: usize) -> crate::Result<Self> {
        if n == 0 {
            return Err(Error::Argument("v_n requires n >= 1".into()));
        }
        Ok(IntPoly::new(vec![BigInt::one(); n]))
    }

    /// Ascending coefficients, no trailing zeros.
    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    /// Coefficient of `x^k` (zero beyond the degree).
    pub fn coeff(&self, k: usize) -> BigInt {
        self.coeffs.get(k).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    /// Degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Degree of a polynomial known to be nonzero.
    pub fn degree_or_zero(&self) -> usize {
        self.degree().unwrap_or(0)
    }

    pub fn leading(&self) -> BigInt {
        self.coeffs.last().cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn is_monic(&self) -> bool {
        self.coeffs.last().is_some_and(|c| c.is_one())
    }

    pub fn add(&self, other: &IntPoly) -> IntPoly {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut out = vec![BigInt::zero(); n];
        for (i, c) in self.coeffs.iter().enumerate() {
            out[i] += c;
        }
        for (i, c) in other.coeffs.iter().enumerate() {
            out[i] += c;
        }
        IntPoly::new(out)
    }

    pub fn sub(&self, other: &IntPoly) -> IntPoly {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut out = vec![BigInt::zero(); n];
        for (i, c) in self.coeffs.iter().enumerate() {
            out[i] += c;
        }
        for (i, c) in other.coeffs.iter().enumerate() {
            out[i] -= c;
        }
        IntPoly::new(out)
    }

    pub fn negate(&self) -> IntPoly {
        IntPoly::new(self.coeffs.iter().map(|c| -c).collect())
    }

    pub fn mul(&self, other: &IntPoly) -> IntPoly {
        if self.is_zero() || other.is_zero() {
            return IntPoly::zero();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        IntPoly::new(out)
    }

    pub fn scale(&self, c: &BigInt) -> IntPoly {
        IntPoly::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    /// Multiplication by `x^k`.
    pub fn shift_up(&self, k: usize) -> IntPoly {
        if self.is_zero() {
            return IntPoly::zero();
        }
        let mut out = vec![BigInt::zero(); k];
        out.extend(self.coeffs.iter().cloned());
        IntPoly::new(out)
    }

    pub fn pow(&self, mut e: u32) -> IntPoly {
        let mut base = self.clone();
        let mut acc = IntPoly::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    /// Exact division in ℤ[x]; fails with `DivisionError` when the divisor
    /// does not divide exactly.
    pub fn exact_div(&self, divisor: &IntPoly) -> crate::Result<IntPoly> {
        if divisor.is_zero() {
            return Err(Error::Division("division by the zero polynomial".into()));
        }
        if self.is_zero() {
            return Ok(IntPoly::zero());
        }
        let (q, r) = self.div_rem_checked(divisor)?;
        if r.is_zero() {
            Ok(q)
        } else {
            Err(Error::Division("nonzero remainder in exact division".into()))
        }
    }

    /// Division with remainder, requiring every quotient coefficient to be an
    /// integer. Suitable for monic divisors and for exact divisions.
    fn div_rem_checked(&self, divisor: &IntPoly) -> crate::Result<(IntPoly, IntPoly)> {
        let dd = divisor.coeffs.len();
        let lead = divisor.leading();
        let mut rem = self.coeffs.clone();
        let mut quo = vec![BigInt::zero(); self.coeffs.len().saturating_sub(dd) + 1];
        while rem.len() >= dd {
            let top = rem.last().cloned().unwrap_or_else(BigInt::zero);
            if top.is_zero() {
                rem.pop();
                continue;
            }
            let (c, r) = top.div_rem(&lead);
            if !r.is_zero() {
                return Err(Error::Division(
                    "leading coefficient does not divide".into(),
                ));
            }
            let k = rem.len() - dd;
            quo[k] = c.clone();
            for (i, d) in divisor.coeffs.iter().enumerate() {
                rem[k + i] -= &c * d;
            }
            while rem.last().is_some_and(|x| x.is_zero()) {
                rem.pop();
            }
        }
        Ok((IntPoly::new(quo), IntPoly::new(rem)))
    }

    /// Quotient and remainder for a monic divisor.
    pub fn div_rem_monic(&self, divisor: &IntPoly) -> crate::Result<(IntPoly, IntPoly)> {
        if !divisor.is_monic() {
            return Err(Error::Division("divisor is not monic".into()));
        }
        self.div_rem_checked(divisor)
    }

    /// Exact division returning `None` instead of an error.
    pub fn try_exact_div(&self, divisor: &IntPoly) -> Option<IntPoly> {
        self.exact_div(divisor).ok()
    }

    pub fn derivative(&self) -> IntPoly {
        if self.coeffs.len() <= 1 {
            return IntPoly::zero();
        }
        IntPoly::new(
            self.coeffs[1..]
                .iter()
                .enumerate()
                .map(|(i, c)| c * BigInt::from(i + 1))
                .collect(),
        )
    }

    pub fn eval(&self, x: &BigInt) -> BigInt {
        let mut acc = BigInt::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    pub fn eval_i64(&self, x: i64) -> BigInt {
        self.eval(&BigInt::from(x))
    }

    pub fn eval_rational(&self, x: &BigRational) -> BigRational {
        let mut acc = BigRational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + BigRational::from(c.clone());
        }
        acc
    }

    /// Sign of `p(u/w)` for `w > 0`, computed without fractions.
    pub fn sign_at_rational(&self, u: &BigInt, w: &BigInt) -> i8 {
        debug_assert!(w.is_positive());
        let d = match self.degree() {
            None => return 0,
            Some(d) => d,
        };
        // sum c_i u^i w^(d-i)
        let mut acc = BigInt::zero();
        let mut upow = BigInt::one();
        let mut wpows = vec![BigInt::one(); d + 1];
        for i in 1..=d {
            wpows[i] = &wpows[i - 1] * w;
        }
        for (i, c) in self.coeffs.iter().enumerate() {
            acc += c * &upow * &wpows[d - i];
            upow *= u;
        }
        bigint_sign(&acc)
    }

    /// The reciprocal polynomial `x^deg · p(1/x)` (reversed coefficients).
    pub fn reversed(&self) -> IntPoly {
        let mut coeffs = self.coeffs.clone();
        coeffs.reverse();
        IntPoly::new(coeffs)
    }

    /// True iff the coefficient sequence is palindromic, equivalently
    /// `p(x) = x^deg · p(1/x)`.
    pub fn is_self_reciprocal(&self) -> bool {
        !self.is_zero() && self.coeffs == self.reversed().coeffs
    }

    /// Substitutes `x ↦ x^k`.
    pub fn dilate(&self, k: usize) -> IntPoly {
        if self.is_zero() || k == 0 {
            return IntPoly::constant(self.eval(&BigInt::one()));
        }
        let mut out = vec![BigInt::zero(); (self.coeffs.len() - 1) * k + 1];
        for (i, c) in self.coeffs.iter().enumerate() {
            out[i * k] = c.clone();
        }
        IntPoly::new(out)
    }

    /// Substitutes `x ↦ −x`.
    pub fn reflect(&self) -> IntPoly {
        IntPoly::new(
            self.coeffs
                .iter()
                .enumerate()
                .map(|(i, c)| if i % 2 == 1 { -c } else { c.clone() })
                .collect(),
        )
    }

    /// gcd of all coefficients (nonnegative; zero for the zero polynomial).
    pub fn content(&self) -> BigInt {
        let mut g = BigInt::zero();
        for c in &self.coeffs {
            g = g.gcd(c);
            if g.is_one() {
                break;
            }
        }
        g
    }

    /// Divides out the content, keeping the sign of the leading coefficient.
    pub fn primitive_part(&self) -> IntPoly {
        let g = self.content();
        if g.is_zero() || g.is_one() {
            return self.clone();
        }
        IntPoly::new(self.coeffs.iter().map(|c| c / &g).collect())
    }

    /// Primitive part normalized to a positive leading coefficient.
    pub fn primitive_positive(&self) -> IntPoly {
        let p = self.primitive_part();
        if p.leading().is_negative() {
            p.negate()
        } else {
            p
        }
    }

    /// Polynomial gcd over ℤ[x], primitive with positive leading coefficient.
    pub fn gcd(&self, other: &IntPoly) -> IntPoly {
        if self.is_zero() {
            return other.primitive_positive();
        }
        if other.is_zero() {
            return self.primitive_positive();
        }
        let ca = self.content();
        let cb = other.content();
        let cg = ca.gcd(&cb);
        let mut a = self.primitive_positive();
        let mut b = other.primitive_positive();
        if a.degree() < b.degree() {
            core::mem::swap(&mut a, &mut b);
        }
        // primitive remainder sequence
        while !b.is_zero() {
            let r = a.pseudo_rem(&b).primitive_positive();
            a = b;
            b = r;
        }
        a.scale(&cg)
    }

    /// Pseudo-remainder `lc(b)^k · a mod b` with an even power `k` so the
    /// result keeps the sign of the true remainder.
    pub fn pseudo_rem(&self, divisor: &IntPoly) -> IntPoly {
        let dd = divisor.coeffs.len();
        if self.coeffs.len() < dd {
            return self.clone();
        }
        let lead = divisor.leading();
        let mut steps = self.coeffs.len() - dd + 1;
        if steps % 2 == 1 {
            steps += 1;
        }
        let mult = lead.pow(steps as u32);
        let mut rem: Vec<BigInt> = self.coeffs.iter().map(|c| c * &mult).collect();
        while rem.len() >= dd {
            let top = rem.last().cloned().unwrap_or_else(BigInt::zero);
            if top.is_zero() {
                rem.pop();
                continue;
            }
            // lead divides: rem was premultiplied by a sufficient power
            let c = &top / &lead;
            debug_assert!((&top % &lead).is_zero());
            let k = rem.len() - dd;
            for (i, d) in divisor.coeffs.iter().enumerate() {
                rem[k + i] -= &c * d;
            }
            while rem.last().is_some_and(|x| x.is_zero()) {
                rem.pop();
            }
        }
        IntPoly::new(rem)
    }

    /// `p / gcd(p, p′)`: same roots, all simple.
    pub fn squarefree_part(&self) -> IntPoly {
        if self.is_constant() {
            return self.clone();
        }
        let g = self.gcd(&self.derivative());
        if g.is_constant() {
            return self.primitive_positive();
        }
        self.exact_div(&g)
            .expect("gcd divides")
            .primitive_positive()
    }

    /// Bracket form `[c0,c1,...]` used by the CLI and fixtures.
    pub fn bracket(&self) -> String {
        use core::fmt::Write;
        let mut s = String::from("[");
        for (i, c) in self.coeffs.iter().enumerate() {
            if i > 0 {
                s.push(',');
            }
            let _ = write!(s, "{c}");
        }
        s.push(']');
        s
    }
}

fn bigint_sign(x: &BigInt) -> i8 {
    if x.is_zero() {
        0
    } else if x.is_positive() {
        1
    } else {
        -1
    }
}

impl FromStr for IntPoly {
    type Err = Error;

    /// Parses the bracket form `[1,1,1]` (ascending coefficients).
    fn from_str(s: &str) -> crate::Result<IntPoly> {
        let t = s.trim();
        let inner = t
            .strip_prefix('[')
            .and_then(|u| u.strip_suffix(']'))
            .ok_or_else(|| Error::Argument("polynomial must be bracketed, e.g. [1,1,1]".into()))?;
        let inner = inner.trim();
        if inner.is_empty() {
            return Ok(IntPoly::zero());
        }
        let mut coeffs = Vec::new();
        for part in inner.split(',') {
            let c: BigInt = part
                .trim()
                .parse()
                .map_err(|_| Error::Argument(alloc::format!("bad coefficient `{part}`")))?;
            coeffs.push(c);
        }
        Ok(IntPoly::new(coeffs))
    }
}

impl fmt::Display for IntPoly {
    /// Pretty form in descending degree, e.g. `x^2+x+1`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let abs = c.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
                first = false;
            } else if neg {
                write!(f, "-")?;
            } else {
                write!(f, "+")?;
            }
            let show_coeff = !abs.is_one() || i == 0;
            if show_coeff {
                write!(f, "{abs}")?;
            }
            if i > 0 {
                if show_coeff {
                    write!(f, "*")?;
                }
                write!(f, "x")?;
                if i > 1 {
                    write!(f, "^{i}")?;
                }
            }
        }
        Ok(())
    }
}

impl fmt::Debug for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "IntPoly({self})")
    }
}

impl Add for &IntPoly {
    type Output = IntPoly;
    fn add(self, rhs: &IntPoly) -> IntPoly {
        IntPoly::add(self, rhs)
    }
}

impl Sub for &IntPoly {
    type Output = IntPoly;
    fn sub(self, rhs: &IntPoly) -> IntPoly {
        IntPoly::sub(self, rhs)
    }
}

impl Mul for &IntPoly {
    type Output = IntPoly;
    fn mul(self, rhs: &IntPoly) -> IntPoly {
        IntPoly::mul(self, rhs)
    }
}

impl Neg for &IntPoly {
    type Output = IntPoly;
    fn neg(self) -> IntPoly {
        self.negate()
    }
}
