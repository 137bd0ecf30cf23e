//! Reduced ratios of integer polynomials.
//!
//! Used for the Dynkin v-factorizations and the graded-singularity Poincaré
//! series. Normalization divides out the polynomial gcd and the common
//! content and makes the denominator's leading coefficient positive; all the
//! fractions arising here then have monic denominators.

use core::fmt;

use num_traits::Signed;

use super::poly::IntPoly;
use crate::Error;

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct RatFunc {
    num: IntPoly,
    den: IntPoly,
}

impl RatFunc {
    pub fn new(num: IntPoly, den: IntPoly) -> crate::Result<RatFunc> {
        if den.is_zero() {
            return Err(Error::Argument("zero denominator".into()));
        }
        let mut r = RatFunc { num, den };
        r.reduce();
        Ok(r)
    }

    pub fn from_poly(p: IntPoly) -> RatFunc {
        RatFunc {
            num: p,
            den: IntPoly::one(),
        }
    }

    pub fn num(&self) -> &IntPoly {
        &self.num
    }

    pub fn den(&self) -> &IntPoly {
        &self.den
    }

    fn reduce(&mut self) {
        use num_integer::Integer;
        use num_traits::One;
        if self.num.is_zero() {
            self.den = IntPoly::one();
            return;
        }
        let g = self.num.gcd(&self.den);
        if !g.is_constant() {
            self.num = self.num.exact_div(&g).expect("gcd divides num");
            self.den = self.den.exact_div(&g).expect("gcd divides den");
        }
        let c = self.num.content().gcd(&self.den.content());
        if !c.is_one() {
            self.num = IntPoly::new(self.num.coeffs().iter().map(|x| x / &c).collect());
            self.den = IntPoly::new(self.den.coeffs().iter().map(|x| x / &c).collect());
        }
        if self.den.leading().is_negative() {
            self.num = self.num.negate();
            self.den = self.den.negate();
        }
    }

    pub fn mul(&self, other: &RatFunc) -> RatFunc {
        let mut r = RatFunc {
            num: self.num.mul(&other.num),
            den: self.den.mul(&other.den),
        };
        r.reduce();
        r
    }

    pub fn div(&self, other: &RatFunc) -> crate::Result<RatFunc> {
        if other.num.is_zero() {
            return Err(Error::Argument("division by zero rational function".into()));
        }
        let mut r = RatFunc {
            num: self.num.mul(&other.den),
            den: self.den.mul(&other.num),
        };
        r.reduce();
        Ok(r)
    }

    pub fn add(&self, other: &RatFunc) -> RatFunc {
        let mut r = RatFunc {
            num: self.num.mul(&other.den).add(&other.num.mul(&self.den)),
            den: self.den.mul(&other.den),
        };
        r.reduce();
        r
    }

    pub fn sub(&self, other: &RatFunc) -> RatFunc {
        self.add(&RatFunc {
            num: other.num.negate(),
            den: other.den.clone(),
        })
    }

    /// Equality as rational functions (cross multiplication, reduction-free).
    pub fn equivalent(&self, other: &RatFunc) -> bool {
        self.num.mul(&other.den) == other.num.mul(&self.den)
    }

    /// The numerator when the denominator is trivial.
    pub fn as_polynomial(&self) -> Option<&IntPoly> {
        if self.den.is_one() {
            Some(&self.num)
        } else {
            None
        }
    }

    /// First `n` coefficients of the power-series expansion, when the
    /// denominator has a unit constant term.
    pub fn series(&self, n: usize) -> crate::Result<alloc::vec::Vec<num_bigint::BigInt>> {
        use num_bigint::BigInt;
        use num_traits::{One, Zero};
        let d0 = self.den.coeff(0);
        if !(d0.is_one() || d0 == -BigInt::one()) {
            return Err(Error::Argument(
                "series expansion needs a unit constant term in the denominator".into(),
            ));
        }
        let mut out = alloc::vec::Vec::with_capacity(n);
        let mut rem: alloc::vec::Vec<BigInt> =
            (0..n + self.den.degree_or_zero() + 1).map(|i| self.num.coeff(i)).collect();
        for k in 0..n {
            let c = &rem[k] * &d0; // divide by ±1
            for i in 0..=self.den.degree_or_zero() {
                let sub = &c * &self.den.coeff(i);
                rem[k + i] -= sub;
            }
            debug_assert!(rem[k].is_zero());
            out.push(c);
        }
        Ok(out)
    }
}

impl fmt::Display for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({})/({})", self.num, self.den)
        }
    }
}
