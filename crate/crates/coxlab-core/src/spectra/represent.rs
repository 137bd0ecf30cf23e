//! Representability: the bridge `p(x²) = q*(x) := x^{deg q}·q(x + x⁻¹)`
//! between self-reciprocal polynomials and spectra of symmetric matrices.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

use super::graph::{graph_char_poly, Graph};
use crate::algebras::{cartan_matrix, AlgebraSpec, CartanBasis, Quiver};
use crate::coxeter::coxeter_matrix;
use crate::exactmath::{count_real_roots, sturm_count, trace_basis, Bound, IntPoly};
use crate::Error;

/// The star transform `q*(x) = x^{deg q}·q(x + 1/x)`, always a polynomial.
pub fn star_transform(q: &IntPoly) -> IntPoly {
    let n = q.degree_or_zero();
    let x2p1 = IntPoly::from_i64s(&[1, 0, 1]);
    let mut acc = IntPoly::zero();
    for (j, c) in q.coeffs().iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        // c · (x² + 1)^j · x^{n−j}
        let term = x2p1.pow(j as u32).shift_up(n - j).scale(c);
        acc = acc.add(&term);
    }
    acc
}

/// The unique `q` of the same degree with `p(x²) = x^{deg p}·q(x + 1/x)`.
///
/// Exists exactly for self-reciprocal `p`; computed by the triangular change
/// of basis through the trace polynomials `w_k(z) = x^k + x^{−k}`.
pub fn represent(p: &IntPoly) -> crate::Result<IntPoly> {
    if !p.is_self_reciprocal() {
        return Err(Error::NotRepresentable(
            "only self-reciprocal polynomials are representable".into(),
        ));
    }
    let n = p.degree_or_zero();
    let w = trace_basis(n);
    let mut q = IntPoly::zero();
    // p(x²)/xⁿ = Σ_{k>0, k ≡ n (2)} a_{(n+k)/2}·w_k  (+ a_{n/2} for even n)
    let mut k = n;
    while k > 0 {
        let c = p.coeff((n + k) / 2);
        if !c.is_zero() {
            q = q.add(&w[k].scale(&c));
        }
        if k < 2 {
            break;
        }
        k -= 2;
    }
    if n % 2 == 0 {
        q = q.add(&IntPoly::constant(p.coeff(n / 2)));
    }
    Ok(q)
}

/// All roots of (the squarefree part of) `q` real?
pub fn roots_real_check(q: &IntPoly) -> crate::Result<bool> {
    let sf = q.squarefree_part();
    Ok(count_real_roots(&sf)? == sf.degree_or_zero())
}

/// Root location of a self-reciprocal polynomial, read off from its
/// representing polynomial.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RootsLocation {
    /// All roots in `S¹ ∖ {1}`: a union of Dynkin types.
    UnitCircleMinusOne,
    /// All roots on the unit circle.
    UnitCircle,
    /// Roots in `S¹ ∪ ℝ⁺` (representing polynomial totally real).
    UnitCircleAndPositiveReals,
    /// Roots leave `S¹ ∪ ℝ⁺` (representing polynomial has non-real roots).
    General,
}

/// Classifies the roots of a self-reciprocal `p` via the z-transform.
pub fn roots_location(p: &IntPoly) -> crate::Result<RootsLocation> {
    let q = represent(p)?;
    if q.is_constant() {
        return Ok(RootsLocation::UnitCircleMinusOne);
    }
    let sf = q.squarefree_part();
    let d = sf.degree_or_zero();
    let real = count_real_roots(&sf)?;
    if real < d {
        return Ok(RootsLocation::General);
    }
    let two = Bound::from_i64(2);
    let minus_two = Bound::from_i64(-2);
    let in_half_open = sturm_count(&sf, &minus_two, &two)?;
    let at_minus_two = sf.sign_at_rational(&BigInt::from(-2), &BigInt::from(1)) == 0;
    let closed = in_half_open + usize::from(at_minus_two);
    if closed < d {
        return Ok(RootsLocation::UnitCircleAndPositiveReals);
    }
    let at_two = sf.sign_at_rational(&BigInt::from(2), &BigInt::from(1)) == 0;
    let open = in_half_open - usize::from(at_two);
    if open == d {
        Ok(RootsLocation::UnitCircleMinusOne)
    } else {
        Ok(RootsLocation::UnitCircle)
    }
}

/// Result of the A'Campo comparison `χ_A(x²) = x^n·φ_Δ(x + 1/x)`.
#[derive(Clone, Debug)]
pub struct AcampoReport {
    /// Every vertex a sink or a source (theorem hypothesis).
    pub bipartite: bool,
    /// Whether the identity holds for this quiver.
    pub holds: bool,
    pub lhs: IntPoly,
    pub rhs: IntPoly,
}

/// Compares both sides of A'Campo's identity for a path algebra. For
/// non-bipartite quivers the boolean simply reports the comparison.
pub fn acampo_check(q: &Quiver) -> crate::Result<AcampoReport> {
    let c = cartan_matrix(&AlgebraSpec::Path(q.clone()), CartanBasis::Projectives)?;
    let chi = coxeter_matrix(&c)?.char_poly();
    let lhs = chi.dilate(2);
    let rhs = star_transform(&graph_char_poly(&Graph::from_quiver(q)));
    Ok(AcampoReport {
        bipartite: q.is_bipartite_orientation(),
        holds: lhs == rhs,
        lhs,
        rhs,
    })
}

/// Largest real root of `q` outside `[−2, 2]` in absolute value, isolated by
/// Sturm counts and bisected to the requested dyadic precision. Returns
/// `None` when all real roots lie in `[−2, 2]`.
pub(crate) fn largest_representing_root(
    q: &IntPoly,
    precision_bits: u32,
) -> crate::Result<Option<BigRational>> {
    let sf = q.squarefree_part();
    let two = Bound::from_i64(2);
    let right = sturm_count(&sf, &two, &Bound::PosInf)?;
    let left = sturm_count(&sf, &Bound::NegInf, &Bound::from_i64(-2))?;
    if right == 0 && left == 0 {
        return Ok(None);
    }
    // q has parity symmetry on our inputs, so the extreme roots come in ±
    // pairs; bisect on the positive side when possible, else mirror.
    let target = if right > 0 { sf.clone() } else { sf.reflect() };
    // Cauchy bound: 1 + max |c_i| / |lead|
    let lead = target.leading();
    let mut bound = BigInt::from(1);
    for c in target.coeffs() {
        let mut v = c / &lead;
        if v.sign() == num_bigint::Sign::Minus {
            v = -v;
        }
        if v > bound {
            bound = v;
        }
    }
    bound += 1;
    let mut lo = BigRational::from(BigInt::from(2));
    let mut hi = BigRational::from(bound);
    let half = BigRational::new(BigInt::from(1), BigInt::from(2));
    // shrink until exactly the largest root remains in (lo, hi]
    while sturm_count(&target, &Bound::Finite(lo.clone()), &Bound::Finite(hi.clone()))? > 1 {
        let mid = (&lo + &hi) * &half;
        let upper = sturm_count(&target, &Bound::Finite(mid.clone()), &Bound::Finite(hi.clone()))?;
        if upper >= 1 {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    // plain sign bisection to precision
    let hi_sign = target.sign_at_rational(hi.numer(), hi.denom());
    if hi_sign == 0 {
        return Ok(Some(hi));
    }
    let eps = BigRational::new(BigInt::from(1), BigInt::from(2).pow(precision_bits));
    while &hi - &lo > eps {
        let mid = (&lo + &hi) * &half;
        let s = target.sign_at_rational(mid.numer(), mid.denom());
        if s == 0 {
            return Ok(Some(mid));
        }
        if s == hi_sign {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    Ok(Some((&lo + &hi) * &half))
}

/// Number of distinct real roots of (the squarefree part of) `q` strictly
/// outside `[−2, 2]`, plus the count in `(2, ∞)` alone.
pub(crate) fn roots_outside_interval(q: &IntPoly) -> crate::Result<(usize, usize)> {
    let sf = q.squarefree_part();
    if sf.is_constant() {
        return Ok((0, 0));
    }
    let d = sf.degree_or_zero();
    let in_half_open = sturm_count(&sf, &Bound::from_i64(-2), &Bound::from_i64(2))?;
    let at_minus_two = sf.sign_at_rational(&BigInt::from(-2), &BigInt::from(1)) == 0;
    let closed = in_half_open + usize::from(at_minus_two);
    let right = sturm_count(&sf, &Bound::from_i64(2), &Bound::PosInf)?;
    Ok((d - closed, right))
}

pub(crate) fn rational_to_f64(r: &BigRational) -> f64 {
    use num_traits::ToPrimitive;
    r.to_f64().unwrap_or(f64::NAN)
}
