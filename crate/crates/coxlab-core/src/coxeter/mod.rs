//! Coxeter matrices and polynomials, the one-point-extension calculus, and
//! spectral classification.

mod spectral;

use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::Zero;

pub use spectral::{
    perron_vector, spectral_class, spectral_radius_is_simple_root, spectral_radius_numeric,
    SpectralClass, SpectralTag,
};

use crate::algebras::{cartan_matrix, AlgebraSpec, CartanBasis};
use crate::exactmath::{
    cyclotomic_factor, is_perfect_square, CyclotomicFactorization, IntMatrix, IntPoly,
};
use crate::Error;

/// The Coxeter matrix `Φ = −C⁻¹·Cᵀ` of a unimodular Cartan matrix.
pub fn coxeter_matrix(c: &IntMatrix) -> crate::Result<IntMatrix> {
    let inv = c.inverse_unimodular()?;
    Ok(inv.matmul(&c.transpose()).negate())
}

/// Cartan matrix, Coxeter matrix, Coxeter polynomial and its cyclotomic
/// factorization of one algebra.
#[derive(Clone, Debug)]
pub struct CoxeterData {
    pub cartan: IntMatrix,
    pub coxeter: IntMatrix,
    pub poly: IntPoly,
    pub factorization: CyclotomicFactorization,
}

impl CoxeterData {
    pub fn from_cartan(cartan: IntMatrix) -> crate::Result<CoxeterData> {
        let coxeter = coxeter_matrix(&cartan)?;
        let poly = coxeter.char_poly();
        let factorization = cyclotomic_factor(&poly)?;
        Ok(CoxeterData {
            cartan,
            coxeter,
            poly,
            factorization,
        })
    }
}

/// Full Coxeter data of a supported algebra presentation.
pub fn coxeter_polynomial(a: &AlgebraSpec) -> crate::Result<CoxeterData> {
    CoxeterData::from_cartan(cartan_matrix(a, CartanBasis::Projectives)?)
}

/// Coxeter polynomial alone.
pub fn chi(a: &AlgebraSpec) -> crate::Result<IntPoly> {
    let c = cartan_matrix(a, CartanBasis::Projectives)?;
    Ok(coxeter_matrix(&c)?.char_poly())
}

/// Degree-one coefficient of the Coxeter polynomial: the negative trace of
/// the Coxeter transformation, equal to the alternating sum of Hochschild
/// dimensions. Value 1 is necessary for derived accessibility.
pub fn happel_degree_one(poly: &IntPoly) -> BigInt {
    poly.coeff(1)
}

/// Evaluates at `−1` and tests perfect squareness (the triangular-algebra
/// obstruction).
pub fn chi_minus_one_square(poly: &IntPoly) -> (BigInt, bool) {
    let v = poly.eval_i64(-1);
    let sq = is_perfect_square(&v);
    (v, sq)
}

/// One-point extension polynomial: `χ_A = (1+x)·χ_B − x·χ_C`.
pub fn one_point_poly(chi_b: &IntPoly, chi_c: &IntPoly) -> IntPoly {
    IntPoly::from_i64s(&[1, 1])
        .mul(chi_b)
        .sub(&IntPoly::x().mul(chi_c))
}

/// Coxeter polynomial of the perpendicular category:
/// `χ_B = ((1+x)·χ_A − χ_Ā)/x`. Non-divisibility by `x` signals that the
/// inputs are not an extension pair.
pub fn perp_poly(chi_a: &IntPoly, chi_abar: &IntPoly) -> crate::Result<IntPoly> {
    let num = IntPoly::from_i64s(&[1, 1]).mul(chi_a).sub(chi_abar);
    if !num.coeff(0).is_zero() {
        return Err(Error::InconsistentExtension(
            "(1+x)·χ_A − χ_Ā has a nonzero constant term".into(),
        ));
    }
    let q = IntPoly::new(num.coeffs().get(1..).unwrap_or(&[]).to_vec());
    // a genuine perpendicular polynomial is monic of degree deg(χ_A) − 1
    let ok = match chi_a.degree() {
        Some(d) if d >= 1 => q.is_monic() && q.degree_or_zero() == d - 1,
        Some(_) => q.is_zero() || q.is_one(),
        None => q.is_zero(),
    };
    if !ok {
        return Err(Error::InconsistentExtension(
            "quotient is not a monic polynomial of the perpendicular rank".into(),
        ));
    }
    Ok(q)
}

/// First `n_terms` values of the Poincaré series `⟨e, Φⁿ e⟩` of a class `e`
/// (coordinates in the basis of the given Cartan matrix).
pub fn poincare_series(
    c: &IntMatrix,
    e: &[BigInt],
    n_terms: usize,
) -> crate::Result<Vec<BigInt>> {
    if e.len() != c.dim() {
        return Err(Error::Argument("class dimension mismatch".into()));
    }
    let phi = coxeter_matrix(c)?;
    let mut out = Vec::with_capacity(n_terms);
    let mut w: Vec<BigInt> = e.to_vec();
    for _ in 0..n_terms {
        // <e, w> = e^T C w
        let cw = c.mul_vec(&w);
        let val: BigInt = e.iter().zip(cw.iter()).map(|(a, b)| a * b).sum();
        out.push(val);
        w = phi.mul_vec(&w);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebras::{extend_cartan, Poset, Quiver};
    use crate::exactmath::{cyclotomic, v_poly};
    use num_traits::One;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn chi_of(a: &AlgebraSpec) -> IntPoly {
        chi(a).unwrap()
    }

    #[test]
    fn coxeter_matrix_examples() {
        assert_eq!(
            coxeter_matrix(&IntMatrix::identity(1)).unwrap(),
            IntMatrix::from_rows_i64(&[&[-1]])
        );
        assert_eq!(
            coxeter_matrix(&IntMatrix::from_rows_i64(&[&[1, 1], &[0, 1]])).unwrap(),
            IntMatrix::from_rows_i64(&[&[0, 1], &[-1, -1]])
        );
        assert_eq!(
            coxeter_matrix(&IntMatrix::identity(3)).unwrap(),
            IntMatrix::identity(3).negate()
        );
        assert!(coxeter_matrix(&IntMatrix::from_rows_i64(&[&[2]])).is_err());
    }

    #[test]
    fn coxeter_matrix_is_unimodular() {
        // det Phi = (-1)^n: the constant coefficient of the self-reciprocal
        // characteristic polynomial is 1
        for a in [
            AlgebraSpec::Star { weights: alloc::vec![2, 3, 4] },
            AlgebraSpec::Canonical { weights: alloc::vec![2, 3, 5] },
            AlgebraSpec::linear_x3(8),
        ] {
            let data = coxeter_polynomial(&a).unwrap();
            let n = data.cartan.dim();
            let expect = if n % 2 == 0 { BigInt::one() } else { -BigInt::one() };
            assert_eq!(data.coxeter.det(), expect);
        }
    }

    #[test]
    fn chain_endpoint_polynomials() {
        // A2 path algebra: v_3
        assert_eq!(
            chi_of(&AlgebraSpec::Path(Quiver::linear(2))),
            v_poly(3).unwrap()
        );
        // star [2,3,5] = E8: Phi_30
        assert_eq!(
            chi_of(&AlgebraSpec::Star { weights: alloc::vec![2, 3, 5] }),
            cyclotomic(30).unwrap()
        );
        // x^3 = 0 on 12 vertices: Phi_42
        assert_eq!(chi_of(&AlgebraSpec::linear_x3(12)), cyclotomic(42).unwrap());
    }

    #[test]
    fn happel_degree_one_values() {
        // canonical with t weights: coefficient t - 2
        for t in 2..=5 {
            let weights = alloc::vec![2usize; t];
            let p = chi_of(&AlgebraSpec::Canonical { weights });
            assert_eq!(happel_degree_one(&p), BigInt::from(t as i64 - 2));
        }
        assert_eq!(
            happel_degree_one(&chi_of(&AlgebraSpec::Path(Quiver::linear(2)))),
            BigInt::one()
        );
    }

    #[test]
    fn chi_minus_one_examples() {
        let (v, sq) = chi_minus_one_square(&v_poly(3).unwrap());
        assert_eq!(v, BigInt::one());
        assert!(sq);
        let (v, sq) = chi_minus_one_square(&cyclotomic(4).unwrap());
        assert_eq!(v, BigInt::from(2));
        assert!(!sq);
        let (v, sq) = chi_minus_one_square(&IntPoly::from_i64s(&[1, 0, 0, 1]));
        assert_eq!(v, BigInt::zero());
        assert!(sq);
    }

    #[test]
    fn one_point_poly_examples() {
        // k extended by k gives A2
        assert_eq!(
            one_point_poly(&IntPoly::from_i64s(&[1, 1]), &IntPoly::one()),
            v_poly(3).unwrap()
        );
        assert_eq!(
            one_point_poly(&IntPoly::zero(), &IntPoly::zero()),
            IntPoly::zero()
        );
        // canonical(2,3,7) and star [2,3,7] combine to Phi_42
        let b = chi_of(&AlgebraSpec::Canonical { weights: alloc::vec![2, 3, 7] });
        let c = chi_of(&AlgebraSpec::Star { weights: alloc::vec![2, 3, 7] });
        assert_eq!(one_point_poly(&b, &c), cyclotomic(42).unwrap());
    }

    #[test]
    fn perp_poly_examples() {
        let a = chi_of(&AlgebraSpec::Canonical { weights: alloc::vec![2, 3, 7] });
        let abar = cyclotomic(42).unwrap();
        let star = chi_of(&AlgebraSpec::Star { weights: alloc::vec![2, 3, 7] });
        assert_eq!(perp_poly(&a, &abar).unwrap(), star);
        assert_eq!(
            perp_poly(&IntPoly::from_i64s(&[1, 1]), &v_poly(3).unwrap()).unwrap(),
            IntPoly::one()
        );
        assert!(matches!(
            perp_poly(&IntPoly::from_i64s(&[1, 1]), &IntPoly::from_i64s(&[1, 0, 1])),
            Err(Error::InconsistentExtension(_))
        ));
    }

    #[test]
    fn poincare_series_examples() {
        let k = IntMatrix::identity(1);
        let s = poincare_series(&k, &[BigInt::one()], 6).unwrap();
        let expect: Vec<BigInt> = (0..6)
            .map(|n| if n % 2 == 0 { BigInt::one() } else { -BigInt::one() })
            .collect();
        assert_eq!(s, expect);
        // zero class gives the zero series
        let c = cartan_matrix(
            &AlgebraSpec::Path(Quiver::linear(3)),
            CartanBasis::Projectives,
        )
        .unwrap();
        let z = poincare_series(&c, &[BigInt::zero(), BigInt::zero(), BigInt::zero()], 5).unwrap();
        assert!(z.iter().all(|x| x.is_zero()));
        // A2, e = [P1]: 1, -1, 0, ...
        let a2 = cartan_matrix(
            &AlgebraSpec::Path(Quiver::linear(2)),
            CartanBasis::Projectives,
        )
        .unwrap();
        let s = poincare_series(&a2, &[BigInt::one(), BigInt::zero()], 3).unwrap();
        assert_eq!(s, alloc::vec![BigInt::one(), -BigInt::one(), BigInt::zero()]);
    }

    fn random_tree_quiver(rng: &mut ChaCha8Rng, n: usize) -> Quiver {
        let mut arrows = Vec::new();
        for v in 2..=n {
            let parent = rng.gen_range(1..v);
            if rng.gen_bool(0.5) {
                arrows.push((parent, v));
            } else {
                arrows.push((v, parent));
            }
        }
        Quiver::new(n, arrows).unwrap()
    }

    #[test]
    fn one_point_identity_on_random_trees() {
        // pendant extension: chi_{B[P_b]} = (1+x) chi_B - x chi_{B \ b}
        let mut rng = ChaCha8Rng::seed_from_u64(0x1D1);
        for _ in 0..500 {
            let n = rng.gen_range(1..=8);
            let q = random_tree_quiver(&mut rng, n);
            let b = rng.gen_range(1..=n);
            let cb = cartan_matrix(&AlgebraSpec::Path(q.clone()), CartanBasis::Projectives)
                .unwrap();
            let ext = extend_cartan(&cb, &cb.column(b - 1)).unwrap();
            let chi_a = coxeter_matrix(&ext).unwrap().char_poly();
            let chi_b = coxeter_matrix(&cb).unwrap().char_poly();
            let quotient = AlgebraSpec::Path(q.delete_vertex(b));
            let chi_c = if n == 1 {
                IntPoly::one()
            } else {
                chi_of(&quotient)
            };
            assert_eq!(chi_a, one_point_poly(&chi_b, &chi_c));
        }
    }

    #[test]
    fn poincare_identity_on_random_trees() {
        // chi_B = chi_A (1 - P_{(A,e)}) / x as a series, for e the class of a
        // simple projective P_v and B the vertex-deleted algebra
        let mut rng = ChaCha8Rng::seed_from_u64(0x1D2);
        let mut done = 0;
        while done < 100 {
            let n = rng.gen_range(2..=8);
            let q = random_tree_quiver(&mut rng, n);
            let ca = cartan_matrix(&AlgebraSpec::Path(q.clone()), CartanBasis::Projectives)
                .unwrap();
            // v with column e_v: the projective at v is simple
            let Some(v) = (1..=n).find(|&v| {
                (0..n).all(|i| {
                    let want = if i + 1 == v { BigInt::one() } else { BigInt::zero() };
                    ca.at(i, v - 1) == &want
                })
            }) else {
                continue;
            };
            let chi_a = coxeter_matrix(&ca).unwrap().char_poly();
            let chi_b = chi_of(&AlgebraSpec::Path(q.delete_vertex(v)));
            let terms = 2 * n + 2;
            let e: Vec<BigInt> = (0..n)
                .map(|i| if i + 1 == v { BigInt::one() } else { BigInt::zero() })
                .collect();
            let p = poincare_series(&ca, &e, terms).unwrap();
            // x·χ_B + χ_A·P == χ_A, coefficientwise up to `terms`
            for k in 0..terms {
                let mut lhs = if k >= 1 { chi_b.coeff(k - 1) } else { BigInt::zero() };
                for i in 0..=k {
                    lhs += chi_a.coeff(i) * &p[k - i];
                }
                assert_eq!(lhs, chi_a.coeff(k), "term {k}");
            }
            done += 1;
        }
    }

    #[test]
    fn coxeter_poly_shape_invariants() {
        let specs = alloc::vec![
            AlgebraSpec::Star { weights: alloc::vec![2, 3, 7] },
            AlgebraSpec::Canonical { weights: alloc::vec![2, 2, 2, 3] },
            AlgebraSpec::ExtendedCanonical { weights: alloc::vec![2, 4, 6] },
            AlgebraSpec::Poset(Poset::crown(3).unwrap()),
            AlgebraSpec::linear_x3(10),
        ];
        for a in specs {
            let d = coxeter_polynomial(&a).unwrap();
            assert!(d.poly.is_monic());
            assert!(d.poly.is_self_reciprocal(), "{a:?}");
            assert_eq!(d.poly.degree_or_zero(), a.n_vertices());
            let (_, sq) = chi_minus_one_square(&d.poly);
            assert!(sq, "{a:?}");
        }
    }
}
