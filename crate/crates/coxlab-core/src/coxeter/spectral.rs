//! Spectral classification of Coxeter polynomials.
//!
//! Classification is exact (cyclotomic deflation plus Sturm counts on the
//! representing polynomial); floating point appears only in the numeric
//! reporting routines at the end of this module.

use alloc::vec;
use alloc::vec::Vec;

// Float supplies sqrt/abs through libm when std is absent
#[allow(unused_imports)]
use num_traits::{Float, ToPrimitive, Zero};

use super::coxeter_matrix;
use crate::exactmath::{cyclotomic_factor, IntMatrix, IntPoly};
use crate::spectra::{largest_representing_root, rational_to_f64, represent, roots_outside_interval, roots_real_check};
use crate::Error;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SpectralTag {
    /// All roots on the unit circle (product of cyclotomic polynomials).
    RadiusOne,
    /// Spectral radius strictly greater than one.
    RadiusGreater,
}

/// Exact spectral classification of a self-reciprocal polynomial.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SpectralClass {
    pub tag: SpectralTag,
    /// Distinct roots off the unit circle (multiplicity collapsed).
    pub roots_outside: usize,
    /// Exactly one conjugate pair off the circle, coming from a
    /// self-reciprocal non-cyclotomic factor with one representing root in
    /// `(2, ∞)`.
    pub salem: bool,
}

/// Classifies a monic self-reciprocal polynomial with nonzero constant term.
pub fn spectral_class(poly: &IntPoly) -> crate::Result<SpectralClass> {
    if !poly.is_monic() {
        return Err(Error::Argument("spectral_class needs a monic polynomial".into()));
    }
    if !poly.is_self_reciprocal() {
        return Err(Error::Argument(
            "spectral_class needs a self-reciprocal polynomial".into(),
        ));
    }
    if poly.coeff(0).is_zero() {
        return Err(Error::Argument(
            "spectral_class needs a nonzero constant term".into(),
        ));
    }
    let f = cyclotomic_factor(poly)?;
    let q = represent(poly)?;
    let (outside, _) = roots_outside_interval(&q)?;
    let tag = if f.remainder.is_one() {
        SpectralTag::RadiusOne
    } else {
        SpectralTag::RadiusGreater
    };
    let salem = outside == 2 && !f.remainder.is_constant() && f.remainder.is_self_reciprocal() && {
        let qr = represent(&f.remainder)?;
        let (_, right) = roots_outside_interval(&qr)?;
        right == 1
    };
    Ok(SpectralClass {
        tag,
        roots_outside: outside,
        salem,
    })
}

/// Maximum root modulus within `tol`.
///
/// Cyclotomic factors are deflated exactly; a totally-real representing
/// remainder is bisected exactly and only rounded at the end, everything
/// else falls back to power iteration on the companion matrix.
pub fn spectral_radius_numeric(poly: &IntPoly, tol: f64) -> crate::Result<f64> {
    if poly.is_constant() {
        return Err(Error::Argument(
            "spectral radius needs a nonconstant polynomial".into(),
        ));
    }
    if tol.is_nan() || tol <= 0.0 {
        return Err(Error::Argument("tolerance must be positive".into()));
    }
    let f = cyclotomic_factor(poly)?;
    let rem = f.remainder.clone();
    if rem.is_constant() {
        return Ok(1.0);
    }
    let had_cyclotomic = !f.factors.is_empty();
    if rem.is_self_reciprocal() && !rem.coeff(0).is_zero() {
        let q = represent(&rem)?;
        if roots_real_check(&q)? {
            // exact: largest |root| = ((z²−2) + sqrt((z²−2)²−4))/2 for the
            // extreme representing root z
            if let Some(z) = largest_representing_root(&q, 128)? {
                let zf = rational_to_f64(&z);
                let w = zf * zf - 2.0;
                let mu = (w + (w * w - 4.0).sqrt()) / 2.0;
                return Ok(mu.max(1.0));
            }
            // remainder with all roots on the circle cannot occur for monic
            // input (Kronecker), but a rounding-free answer is still right
            return Ok(1.0);
        }
    }
    let base = power_iteration_radius(&rem, tol)?;
    Ok(if had_cyclotomic { base.max(1.0) } else { base })
}

/// Dominant-root modulus of a polynomial by companion-matrix power iteration.
fn power_iteration_radius(p: &IntPoly, tol: f64) -> crate::Result<f64> {
    let n = p.degree_or_zero();
    let lead = p.leading().to_f64().unwrap_or(f64::NAN);
    let coeffs: Vec<f64> = (0..n)
        .map(|i| p.coeff(i).to_f64().unwrap_or(f64::NAN) / lead)
        .collect();
    let mut v = vec![1.0f64; n];
    let mut prev_estimate = 0.0f64;
    let mut stable = 0u32;
    const CAP: u32 = 1_000_000;
    for iter in 0..CAP {
        // companion action: w_i = v_{i-1} - c_i v_{n-1}
        let top = v[n - 1];
        let mut w = vec![0.0f64; n];
        for i in (1..n).rev() {
            w[i] = v[i - 1] - coeffs[i] * top;
        }
        w[0] = -coeffs[0] * top;
        let norm = w.iter().fold(0.0f64, |m, x| m.max(x.abs()));
        if norm == 0.0 {
            return Ok(0.0);
        }
        for x in &mut w {
            *x /= norm;
        }
        v = w;
        // geometric mean of growth over a window smooths conjugate pairs
        if iter % 8 == 7 {
            let estimate = norm;
            if (estimate - prev_estimate).abs() < tol * estimate.max(1.0) {
                stable += 1;
                if stable >= 4 {
                    return Ok(estimate);
                }
            } else {
                stable = 0;
            }
            prev_estimate = estimate;
        }
    }
    Err(Error::Numeric(
        "power iteration did not converge within the iteration cap".into(),
    ))
}

/// Checks that the spectral radius is a simple root: the repeated-root part
/// `gcd(χ, χ′)` has no root off the unit circle. Exposed as a predicate; no
/// classification decision relies on it.
pub fn spectral_radius_is_simple_root(poly: &IntPoly) -> crate::Result<bool> {
    if poly.is_constant() {
        return Err(Error::Argument("needs a nonconstant polynomial".into()));
    }
    let g = poly.gcd(&poly.derivative());
    if g.is_constant() {
        return Ok(true);
    }
    if g.is_self_reciprocal() {
        let (outside, _) = roots_outside_interval(&represent(&g)?)?;
        return Ok(outside == 0);
    }
    // repeated part not self-reciprocal: count its real roots beyond 1 directly
    use crate::exactmath::{sturm_count, Bound};
    Ok(sturm_count(&g, &Bound::from_i64(1), &Bound::PosInf)? == 0)
}

/// Positive eigenvector of the Coxeter matrix for the spectral radius, for a
/// connected wild hereditary algebra (normalized to unit maximum entry).
pub fn perron_vector(c: &IntMatrix, tol: f64) -> crate::Result<Vec<f64>> {
    if tol.is_nan() || tol <= 0.0 {
        return Err(Error::Argument("tolerance must be positive".into()));
    }
    let phi = coxeter_matrix(c)?;
    let chi = phi.char_poly();
    let class = spectral_class(&chi)?;
    if class.tag == SpectralTag::RadiusOne {
        return Err(Error::Argument(
            "spectral radius one: no Perron vector".into(),
        ));
    }
    // positivity holds in dimension-vector (simples) coordinates
    let cinv = c.inverse_unimodular()?;
    let phi = c.matmul(&phi).matmul(&cinv);
    let n = phi.dim();
    let phif: Vec<Vec<f64>> = (0..n)
        .map(|i| (0..n).map(|j| phi.at(i, j).to_f64().unwrap_or(f64::NAN)).collect())
        .collect();
    let mut y = vec![1.0f64; n];
    const CAP: u32 = 1_000_000;
    let mut converged = false;
    for _ in 0..CAP {
        let z: Vec<f64> = (0..n)
            .map(|i| (0..n).map(|j| phif[i][j] * y[j]).sum())
            .collect();
        let norm = z.iter().fold(0.0f64, |m, x| m.max(x.abs()));
        if norm == 0.0 {
            return Err(Error::Numeric("power iteration collapsed to zero".into()));
        }
        let znext: Vec<f64> = z.iter().map(|x| x / norm).collect();
        let residual: f64 = (0..n)
            .map(|i| {
                let av: f64 = (0..n).map(|j| phif[i][j] * znext[j]).sum();
                (av - norm * znext[i]).abs()
            })
            .fold(0.0, f64::max);
        y = znext;
        if residual < tol {
            converged = true;
            break;
        }
    }
    if !converged {
        return Err(Error::Numeric(
            "Perron iteration did not converge within the iteration cap".into(),
        ));
    }
    // sign-normalize by the largest component
    let mut max_idx = 0;
    for i in 1..n {
        if y[i].abs() > y[max_idx].abs() {
            max_idx = i;
        }
    }
    if y[max_idx] < 0.0 {
        for x in &mut y {
            *x = -*x;
        }
    }
    let maxv = y[max_idx].abs();
    for x in &mut y {
        *x /= maxv;
    }
    if y.iter().any(|&x| x <= 0.0) {
        return Err(Error::Numeric(
            "iteration converged to a non-positive vector".into(),
        ));
    }
    Ok(y)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebras::{cartan_matrix, AlgebraSpec, CartanBasis};
    use crate::coxeter::chi;
    use crate::exactmath::cyclotomic;

    fn star(ws: &[usize]) -> IntPoly {
        chi(&AlgebraSpec::Star {
            weights: ws.to_vec(),
        })
        .unwrap()
    }

    #[test]
    fn dynkin_star_is_radius_one() {
        let s = spectral_class(&star(&[2, 3, 5])).unwrap();
        assert_eq!(s.tag, SpectralTag::RadiusOne);
        assert_eq!(s.roots_outside, 0);
        assert!(!s.salem);
    }

    #[test]
    fn canonical_is_radius_one() {
        let p = chi(&AlgebraSpec::Canonical {
            weights: vec![2, 3, 7],
        })
        .unwrap();
        let s = spectral_class(&p).unwrap();
        assert_eq!(s.tag, SpectralTag::RadiusOne);
        assert_eq!(s.roots_outside, 0);
    }

    #[test]
    fn lehmer_star_is_salem() {
        let p = star(&[2, 3, 7]);
        assert_eq!(p, IntPoly::from_i64s(&[1, 1, 0, -1, -1, -1, -1, -1, 0, 1, 1]));
        let s = spectral_class(&p).unwrap();
        assert_eq!(s.tag, SpectralTag::RadiusGreater);
        assert_eq!(s.roots_outside, 2);
        assert!(s.salem);
    }

    #[test]
    fn quadratic_unit_counts() {
        // x^2-3x+1: both roots real positive, off the circle
        let p = IntPoly::from_i64s(&[1, -3, 1]);
        let s = spectral_class(&p).unwrap();
        assert_eq!(s.roots_outside, 2);
        assert!(s.salem);
        // x^2+3x+1: pair off the circle on the negative axis, not Salem
        let m = IntPoly::from_i64s(&[1, 3, 1]);
        let s = spectral_class(&m).unwrap();
        assert_eq!(s.roots_outside, 2);
        assert!(!s.salem);
    }

    #[test]
    fn argument_errors() {
        assert!(spectral_class(&IntPoly::from_i64s(&[-1, 1])).is_err());
        assert!(spectral_class(&IntPoly::from_i64s(&[0, 1, 0, 0, 1])).is_err());
    }

    #[test]
    fn radius_of_cyclotomic_is_one() {
        assert_eq!(
            spectral_radius_numeric(&cyclotomic(30).unwrap(), 1e-9).unwrap(),
            1.0
        );
    }

    #[test]
    fn radius_of_lehmer() {
        let r = spectral_radius_numeric(&star(&[2, 3, 7]), 1e-9).unwrap();
        assert!((r - 1.176_280_818_1).abs() < 1e-8, "got {r}");
    }

    #[test]
    fn radius_of_quadratic() {
        let r = spectral_radius_numeric(&IntPoly::from_i64s(&[1, -3, 1]), 1e-9).unwrap();
        let expect = (3.0 + 5.0f64.sqrt()) / 2.0;
        assert!((r - expect).abs() < 1e-9, "got {r}");
    }

    #[test]
    fn radius_by_power_iteration() {
        // x - 2 is not self-reciprocal: companion fallback
        let r = spectral_radius_numeric(&IntPoly::from_i64s(&[-2, 1]), 1e-9).unwrap();
        assert!((r - 2.0).abs() < 1e-6, "got {r}");
        // (x-3)(x-1) = x^2-4x+3
        let r = spectral_radius_numeric(&IntPoly::from_i64s(&[3, -4, 1]), 1e-9).unwrap();
        assert!((r - 3.0).abs() < 1e-6, "got {r}");
    }

    #[test]
    fn perron_vector_wild_star() {
        let c = cartan_matrix(
            &AlgebraSpec::Star {
                weights: vec![2, 3, 7],
            },
            CartanBasis::Projectives,
        )
        .unwrap();
        let y = perron_vector(&c, 1e-10).unwrap();
        assert_eq!(y.len(), 10);
        assert!(y.iter().all(|&v| v > 0.0));
        assert!((y.iter().cloned().fold(0.0f64, f64::max) - 1.0).abs() < 1e-12);
        // residual check against the true radius, in simples coordinates
        let phi = coxeter_matrix(&c).unwrap();
        let rho = spectral_radius_numeric(&phi.char_poly(), 1e-12).unwrap();
        let phi_s = c.matmul(&phi).matmul(&c.inverse_unimodular().unwrap());
        for i in 0..10 {
            let av: f64 = (0..10)
                .map(|j| phi_s.at(i, j).to_f64().unwrap() * y[j])
                .sum();
            assert!((av - rho * y[i]).abs() < 1e-6);
        }
    }

    #[test]
    fn simple_root_predicate() {
        // wild star: simple spectral radius
        assert!(spectral_radius_is_simple_root(&star(&[2, 3, 7])).unwrap());
        assert!(spectral_radius_is_simple_root(&star(&[2, 2, 2, 2, 2])).unwrap());
        // squared Salem factor: repeated radius
        let p = IntPoly::from_i64s(&[1, -3, 1]);
        assert!(!spectral_radius_is_simple_root(&p.mul(&p)).unwrap());
        // cyclotomic squares only repeat circle roots
        let c = cyclotomic(5).unwrap();
        assert!(spectral_radius_is_simple_root(&c.mul(&c)).unwrap());
    }

    #[test]
    fn perron_vector_rejects_tame() {
        let c = cartan_matrix(
            &AlgebraSpec::Star {
                weights: vec![2, 3, 5],
            },
            CartanBasis::Projectives,
        )
        .unwrap();
        assert!(matches!(perron_vector(&c, 1e-8), Err(Error::Argument(_))));
    }

    #[test]
    fn wild_star_five_arms() {
        let c = cartan_matrix(
            &AlgebraSpec::Star {
                weights: vec![2, 2, 2, 2, 2],
            },
            CartanBasis::Projectives,
        )
        .unwrap();
        let y = perron_vector(&c, 1e-10).unwrap();
        assert!(y.iter().all(|&v| v > 0.0));
    }
}
