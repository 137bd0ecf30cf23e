//! Cartan matrices of the supported presentations.
//!
//! In the projectives basis the entry `(i, j)` counts nonzero paths `i → j`;
//! for monomial algebras paths containing a relation as a contiguous subpath
//! are dropped, for posets the matrix is the zeta matrix of the order, and
//! for the canonical-type families the matrix is built structurally.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::poset::Poset;
use super::quiver::Quiver;
use super::spec::{AlgebraSpec, CartanBasis, LadderVariant};
use crate::exactmath::IntMatrix;
use crate::Error;

/// Number of paths `i → j` avoiding every relation as a contiguous subpath.
///
/// Dynamic programming over the path's recent window of vertices (long
/// enough to recognize any relation ending at the current vertex).
pub fn dim_hom_count(q: &Quiver, relations: &[Vec<usize>], i: usize, j: usize) -> u64 {
    let window_len = relations.iter().map(|r| r.len()).max().unwrap_or(1);
    let mut memo: BTreeMap<Vec<usize>, u64> = BTreeMap::new();
    fn rec(
        q: &Quiver,
        relations: &[Vec<usize>],
        window_len: usize,
        j: usize,
        window: &[usize],
        memo: &mut BTreeMap<Vec<usize>, u64>,
    ) -> u64 {
        if let Some(&c) = memo.get(window) {
            return c;
        }
        let v = *window.last().expect("nonempty window");
        let mut count: u64 = if v == j { 1 } else { 0 };
        for &(s, t) in q.arrows() {
            if s != v {
                continue;
            }
            let mut next: Vec<usize> = window.to_vec();
            next.push(t);
            if relations
                .iter()
                .any(|r| r.len() <= next.len() && next[next.len() - r.len()..] == r[..])
            {
                continue;
            }
            if next.len() >= window_len {
                let cut = next.len() - (window_len - 1).max(1);
                next.drain(..cut.min(next.len() - 1));
            }
            count += rec(q, relations, window_len, j, &next, memo);
        }
        memo.insert(window.to_vec(), count);
        count
    }
    rec(q, relations, window_len, j, &[i], &mut memo)
}

fn path_cartan(q: &Quiver) -> IntMatrix {
    // (I - N)^{-1} = I + N + N^2 + ... with N the arrow-multiplicity matrix
    let n = q.n_vertices();
    let mut nmat = IntMatrix::zeros(n);
    for &(s, t) in q.arrows() {
        *nmat.at_mut(s - 1, t - 1) += BigInt::one();
    }
    let mut c = IntMatrix::identity(n);
    let mut power = nmat.clone();
    for _ in 0..n {
        let mut done = true;
        for i in 0..n {
            for j in 0..n {
                let x = power.at(i, j);
                if !x.is_zero() {
                    done = false;
                    *c.at_mut(i, j) += x;
                }
            }
        }
        if done {
            break;
        }
        power = power.matmul(&nmat);
    }
    c
}

fn monomial_cartan(q: &Quiver, relations: &[Vec<usize>]) -> IntMatrix {
    let n = q.n_vertices();
    IntMatrix::from_fn(n, |i, j| BigInt::from(dim_hom_count(q, relations, i + 1, j + 1)))
}

fn poset_cartan(p: &Poset) -> crate::Result<IntMatrix> {
    let leq = p.leq_matrix()?;
    let n = p.len();
    Ok(IntMatrix::from_fn(n, |i, j| {
        if leq[i][j] {
            BigInt::one()
        } else {
            BigInt::zero()
        }
    }))
}

fn linear_cartan(n: usize, relations: &[(usize, usize)]) -> IntMatrix {
    // staircase: C_{ij} = 1 iff i <= j and no relation [a,b] fits inside [i,j]
    let mut c = IntMatrix::zeros(n);
    for i in 1..=n {
        let mut reach = n;
        for &(a, b) in relations {
            if a >= i {
                reach = reach.min(b - 1);
            }
        }
        for j in i..=reach {
            *c.at_mut(i - 1, j - 1) = BigInt::one();
        }
    }
    c
}

/// Canonical-type Cartan matrix: unique arm paths plus a rank-2 source-sink
/// entry (the `t` parallel arm classes modulo `t − 2` relations).
fn canonical_cartan(weights: &[usize]) -> IntMatrix {
    let interior: usize = weights.iter().map(|&p| p.saturating_sub(1)).sum();
    let n = interior + 2;
    let sink = n - 1; // 0-indexed; source is 0
    let mut c = IntMatrix::identity(n);
    let mut pos = 1usize;
    for &p in weights {
        let arm: Vec<usize> = (pos..pos + p.saturating_sub(1)).collect();
        for (k, &v) in arm.iter().enumerate() {
            *c.at_mut(0, v) = BigInt::one();
            *c.at_mut(v, sink) = BigInt::one();
            for &w in &arm[k + 1..] {
                *c.at_mut(v, w) = BigInt::one();
            }
        }
        pos += p.saturating_sub(1);
    }
    *c.at_mut(0, sink) = BigInt::from(2);
    c
}

fn supercanonical_cartan(arms: &[Poset]) -> crate::Result<IntMatrix> {
    let interior: usize = arms.iter().map(|s| s.len()).sum();
    let n = interior + 2;
    let sink = n - 1;
    let mut c = IntMatrix::identity(n);
    let mut pos = 1usize;
    for s in arms {
        let leq = s.leq_matrix()?;
        for a in 0..s.len() {
            *c.at_mut(0, pos + a) = BigInt::one();
            *c.at_mut(pos + a, sink) = BigInt::one();
            for b in 0..s.len() {
                if leq[a][b] {
                    *c.at_mut(pos + a, pos + b) = BigInt::one();
                }
            }
        }
        pos += s.len();
    }
    *c.at_mut(0, sink) = BigInt::from(2);
    Ok(c)
}

/// Ladder index layout: `t_i ↦ 2i−1`, `b_i ↦ 2i` (1-indexed), so prefixes of
/// the vertex order are again ladders. Variant D's last vertex is `b_{m+1}`.
fn ladder_cartan(variant: LadderVariant, n: usize) -> IntMatrix {
    // classify vertex as (is_top, arm position)
    let class = |v: usize| -> (bool, usize) {
        if matches!(variant, LadderVariant::D) && v == n {
            (false, n.div_ceil(2))
        } else if v % 2 == 1 {
            (true, v.div_ceil(2))
        } else {
            (false, v / 2)
        }
    };
    let mut c = IntMatrix::zeros(n);
    for u in 1..=n {
        for v in u..=n {
            let (ut, ui) = class(u);
            let (vt, vi) = class(v);
            let le = match (ut, vt) {
                (true, true) | (false, false) | (true, false) => ui <= vi,
                (false, true) => false,
            };
            if le {
                *c.at_mut(u - 1, v - 1) = BigInt::one();
            }
        }
    }
    if matches!(variant, LadderVariant::D) {
        // zero relation on the last two bottom arrows kills every class from
        // a top vertex into the final bottom vertex
        for u in (1..n).filter(|&u| class(u).0) {
            *c.at_mut(u - 1, n - 1) = BigInt::zero();
        }
    }
    c
}

/// Cartan matrix of a supported presentation in the requested basis.
pub fn cartan_matrix(a: &AlgebraSpec, basis: CartanBasis) -> crate::Result<IntMatrix> {
    a.validate()?;
    let c = match a {
        AlgebraSpec::Path(q) => path_cartan(q),
        AlgebraSpec::Monomial { quiver, relations } => monomial_cartan(quiver, relations),
        AlgebraSpec::Poset(p) => poset_cartan(p)?,
        AlgebraSpec::LinearWithRelations { n, relations } => linear_cartan(*n, relations),
        AlgebraSpec::Star { weights } => path_cartan(&Quiver::star(weights)?),
        AlgebraSpec::Canonical { weights } => canonical_cartan(weights),
        AlgebraSpec::ExtendedCanonical { weights } => {
            let c = canonical_cartan(weights);
            extend_cartan(&c, &c.column(c.dim() - 1))?
        }
        AlgebraSpec::Supercanonical { arms } => supercanonical_cartan(arms)?,
        AlgebraSpec::Ladder { variant, n } => ladder_cartan(*variant, *n),
    };
    Ok(match basis {
        CartanBasis::Projectives => c,
        CartanBasis::Simples => c.inverse_unimodular()?,
    })
}

/// One-point extension on the Cartan level: the new projective has class
/// `[M] + [S_new]`, so the extended matrix keeps `C` in the upper-left block
/// and appends the column `(m, 1)`.
pub fn extend_cartan(c: &IntMatrix, m: &[BigInt]) -> crate::Result<IntMatrix> {
    let n = c.dim();
    if m.len() != n {
        return Err(Error::Argument(alloc::format!(
            "dimension vector has {} entries, Cartan matrix is {n}x{n}",
            m.len()
        )));
    }
    let mut out = IntMatrix::zeros(n + 1);
    for i in 0..n {
        for j in 0..n {
            *out.at_mut(i, j) = c.at(i, j).clone();
        }
        *out.at_mut(i, n) = m[i].clone();
    }
    *out.at_mut(n, n) = BigInt::one();
    Ok(out)
}

/// Euler form `⟨x, y⟩ = xᵀ C y`.
pub fn euler_form(c: &IntMatrix, x: &[BigInt], y: &[BigInt]) -> crate::Result<BigInt> {
    let n = c.dim();
    if x.len() != n || y.len() != n {
        return Err(Error::Argument("vector dimension mismatch".into()));
    }
    let mut acc = BigInt::zero();
    for i in 0..n {
        for j in 0..n {
            acc += &x[i] * c.at(i, j) * &y[j];
        }
    }
    Ok(acc)
}

/// Tits form `q(v) = Σ v_i² − Σ_{i→j} v_i v_j`.
pub fn tits_form(q: &Quiver, v: &[BigInt]) -> BigInt {
    let mut acc: BigInt = v.iter().map(|x| x * x).sum();
    for &(s, t) in q.arrows() {
        acc -= &v[s - 1] * &v[t - 1];
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn proj(a: &AlgebraSpec) -> IntMatrix {
        cartan_matrix(a, CartanBasis::Projectives).unwrap()
    }

    #[test]
    fn path_algebra_a2() {
        let a = AlgebraSpec::Path(Quiver::linear(2));
        assert_eq!(proj(&a), IntMatrix::from_rows_i64(&[&[1, 1], &[0, 1]]));
    }

    #[test]
    fn linear_with_relation_kills_long_path() {
        let a = AlgebraSpec::LinearWithRelations {
            n: 4,
            relations: vec![(1, 4)],
        };
        let c = proj(&a);
        assert_eq!(
            c,
            IntMatrix::from_rows_i64(&[
                &[1, 1, 1, 0],
                &[0, 1, 1, 1],
                &[0, 0, 1, 1],
                &[0, 0, 0, 1]
            ])
        );
    }

    #[test]
    fn crown_cartan_is_zeta_matrix() {
        let a = AlgebraSpec::Poset(Poset::crown(2).unwrap());
        let c = proj(&a);
        assert_eq!(
            c,
            IntMatrix::from_rows_i64(&[
                &[1, 0, 1, 1],
                &[0, 1, 1, 1],
                &[0, 0, 1, 0],
                &[0, 0, 0, 1]
            ])
        );
    }

    #[test]
    fn dim_hom_examples() {
        let q = Quiver::linear(3);
        assert_eq!(dim_hom_count(&q, &[], 1, 3), 1);
        let q4 = Quiver::linear(4);
        assert_eq!(dim_hom_count(&q4, &[vec![1, 2, 3, 4]], 1, 4), 0);
        let q5 = Quiver::linear(5);
        let rels = vec![vec![1, 2, 3, 4], vec![2, 3, 4, 5]];
        assert_eq!(dim_hom_count(&q5, &rels, 1, 5), 0);
        assert_eq!(dim_hom_count(&q5, &rels, 1, 3), 1);
    }

    #[test]
    fn monomial_count_matches_brute_force_enumeration() {
        // brute-force oracle: enumerate all paths explicitly and filter
        fn enumerate(q: &Quiver, rels: &[Vec<usize>], i: usize, j: usize) -> u64 {
            fn go(q: &Quiver, rels: &[Vec<usize>], path: &mut Vec<usize>, j: usize) -> u64 {
                let v = *path.last().unwrap();
                if rels
                    .iter()
                    .any(|r| r.len() <= path.len() && path[path.len() - r.len()..] == r[..])
                {
                    return 0;
                }
                let mut c = if v == j { 1 } else { 0 };
                let arrows: Vec<(usize, usize)> = q.arrows().to_vec();
                for (s, t) in arrows {
                    if s == v {
                        path.push(t);
                        c += go(q, rels, path, j);
                        path.pop();
                    }
                }
                c
            }
            go(q, rels, &mut vec![i], j)
        }
        let mut rng = ChaCha8Rng::seed_from_u64(0xA1);
        for _ in 0..60 {
            let n = rng.gen_range(2..=8);
            // random DAG respecting the label order
            let mut arrows = Vec::new();
            for s in 1..n {
                for t in s + 1..=n {
                    if rng.gen_bool(0.4) {
                        arrows.push((s, t));
                    }
                }
            }
            let q = Quiver::new(n, arrows).unwrap();
            // random relation: a random path of length >= 2, if one exists
            let mut rels: Vec<Vec<usize>> = Vec::new();
            'find: for _ in 0..10 {
                let mut path = vec![rng.gen_range(1..=n)];
                for _ in 0..3 {
                    let v = *path.last().unwrap();
                    let outs: Vec<usize> = q
                        .arrows()
                        .iter()
                        .filter(|&&(s, _)| s == v)
                        .map(|&(_, t)| t)
                        .collect();
                    if outs.is_empty() {
                        break;
                    }
                    path.push(outs[rng.gen_range(0..outs.len())]);
                }
                if path.len() >= 3 {
                    rels.push(path);
                    break 'find;
                }
            }
            let spec = AlgebraSpec::Monomial {
                quiver: q.clone(),
                relations: rels.clone(),
            };
            if spec.validate().is_err() {
                continue; // rare: duplicate/contained relation draw
            }
            let c = proj(&spec);
            for i in 1..=n {
                for j in 1..=n {
                    assert_eq!(
                        c.at(i - 1, j - 1),
                        &BigInt::from(enumerate(&q, &rels, i, j)),
                        "entry ({i},{j})"
                    );
                }
            }
        }
    }

    #[test]
    fn empty_relations_match_path_algebra() {
        let mut rng = ChaCha8Rng::seed_from_u64(0xB2);
        for _ in 0..40 {
            let n = rng.gen_range(2..=8);
            let mut arrows = Vec::new();
            for s in 1..n {
                for t in s + 1..=n {
                    if rng.gen_bool(0.3) {
                        arrows.push((s, t));
                    }
                }
            }
            let q = Quiver::new(n, arrows).unwrap();
            let m = proj(&AlgebraSpec::Monomial {
                quiver: q.clone(),
                relations: vec![],
            });
            let p = proj(&AlgebraSpec::Path(q));
            assert_eq!(m, p);
        }
    }

    #[test]
    fn unitriangular_determinant_one() {
        let specs = vec![
            AlgebraSpec::Star { weights: vec![2, 3, 4] },
            AlgebraSpec::Canonical { weights: vec![2, 3, 5] },
            AlgebraSpec::ExtendedCanonical { weights: vec![2, 3, 7] },
            AlgebraSpec::Poset(Poset::crown(3).unwrap()),
            AlgebraSpec::linear_x3(9),
            AlgebraSpec::Ladder { variant: LadderVariant::B, n: 8 },
            AlgebraSpec::Ladder { variant: LadderVariant::C, n: 9 },
            AlgebraSpec::Ladder { variant: LadderVariant::D, n: 9 },
        ];
        for s in specs {
            let c = proj(&s);
            assert!(c.is_upper_unitriangular(), "{s:?}");
            assert_eq!(c.det(), BigInt::one(), "{s:?}");
        }
    }

    #[test]
    fn extend_star_gives_canonical() {
        // star [2,3,3] extended by the module with dimension 2 at the center
        let star = proj(&AlgebraSpec::Star { weights: vec![2, 3, 3] });
        let mut m = vec![BigInt::one(); 6];
        m[0] = BigInt::from(2);
        let ext = extend_cartan(&star, &m).unwrap();
        let can = proj(&AlgebraSpec::Canonical { weights: vec![2, 3, 3] });
        assert_eq!(ext, can);
    }

    #[test]
    fn extend_cartan_edge_cases() {
        // extension of k by k is the A2 path algebra
        let k = IntMatrix::identity(1);
        let ext = extend_cartan(&k, &[BigInt::one()]).unwrap();
        assert_eq!(ext, IntMatrix::from_rows_i64(&[&[1, 1], &[0, 1]]));
        // extension by zero is a disjoint point
        let ext0 = extend_cartan(&k, &[BigInt::zero()]).unwrap();
        assert_eq!(ext0, IntMatrix::identity(2));
        assert!(extend_cartan(&k, &[]).is_err());
    }

    #[test]
    fn euler_form_values() {
        let id = IntMatrix::identity(2);
        let e1 = [BigInt::one(), BigInt::zero()];
        assert_eq!(euler_form(&id, &e1, &e1).unwrap(), BigInt::one());
        // spec'd simples-basis example for the A2 path algebra
        let cs = IntMatrix::from_rows_i64(&[&[1, -1], &[0, 1]]);
        let ones = [BigInt::one(), BigInt::one()];
        assert_eq!(euler_form(&cs, &ones, &ones).unwrap(), BigInt::one());
        // <[M],[M]> = 1 for the canonical-extension module over the star
        let star = proj(&AlgebraSpec::Star { weights: vec![2, 3, 3] });
        let mut m = vec![BigInt::one(); 6];
        m[0] = BigInt::from(2);
        let minv = star.inverse_unimodular().unwrap().mul_vec(&m);
        assert_eq!(euler_form(&star, &minv, &minv).unwrap(), BigInt::one());
        assert!(euler_form(&id, &e1, &[]).is_err());
    }

    #[test]
    fn euler_form_reproduces_cartan_entries() {
        let c = proj(&AlgebraSpec::Canonical { weights: vec![2, 3, 4] });
        let n = c.dim();
        for i in 0..n {
            for j in 0..n {
                let ei: Vec<BigInt> = (0..n)
                    .map(|k| if k == i { BigInt::one() } else { BigInt::zero() })
                    .collect();
                let ej: Vec<BigInt> = (0..n)
                    .map(|k| if k == j { BigInt::one() } else { BigInt::zero() })
                    .collect();
                assert_eq!(&euler_form(&c, &ei, &ej).unwrap(), c.at(i, j));
            }
        }
    }

    #[test]
    fn tits_form_examples() {
        let q = Quiver::linear(2);
        let e1 = [BigInt::one(), BigInt::zero()];
        assert_eq!(tits_form(&q, &e1), BigInt::one());
        let ones = [BigInt::one(), BigInt::one()];
        assert_eq!(tits_form(&q, &ones), BigInt::one());
        let kr = Quiver::new(2, vec![(1, 2), (1, 2)]).unwrap();
        assert_eq!(tits_form(&kr, &ones), BigInt::zero());
    }

    #[test]
    fn tits_equals_euler_on_trees() {
        // hereditary case: Tits form = Euler quadratic form in the simples basis
        let mut rng = ChaCha8Rng::seed_from_u64(0xC3);
        for _ in 0..60 {
            let n = rng.gen_range(2..=7);
            let mut arrows = Vec::new();
            for v in 2..=n {
                let parent = rng.gen_range(1..v);
                if rng.gen_bool(0.5) {
                    arrows.push((parent, v));
                } else {
                    arrows.push((v, parent));
                }
            }
            let q = Quiver::new(n, arrows).unwrap();
            let cs = cartan_matrix(&AlgebraSpec::Path(q.clone()), CartanBasis::Simples).unwrap();
            for _ in 0..10 {
                let v: Vec<BigInt> =
                    (0..n).map(|_| BigInt::from(rng.gen_range(-3i64..=3))).collect();
                assert_eq!(tits_form(&q, &v), euler_form(&cs, &v, &v).unwrap());
            }
        }
    }

    #[test]
    fn simples_basis_is_inverse() {
        let a = AlgebraSpec::Path(Quiver::linear(2));
        let cs = cartan_matrix(&a, CartanBasis::Simples).unwrap();
        assert_eq!(cs, IntMatrix::from_rows_i64(&[&[1, -1], &[0, 1]]));
    }

    #[test]
    fn redundant_relations_rejected() {
        let a = AlgebraSpec::LinearWithRelations {
            n: 6,
            relations: vec![(1, 5), (2, 4)],
        };
        assert!(matches!(a.validate(), Err(Error::InvalidAlgebra(_))));
        let b = AlgebraSpec::Monomial {
            quiver: Quiver::linear(5),
            relations: vec![vec![1, 2, 3, 4], vec![2, 3, 4]],
        };
        assert!(matches!(b.validate(), Err(Error::InvalidAlgebra(_))));
    }
}
