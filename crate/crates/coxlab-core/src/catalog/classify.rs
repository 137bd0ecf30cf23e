//! Polynomial → derived-type classification, and the textbook-notation
//! factorization printer.
//!
//! Classification returns *all* catalog matches: isospectral collisions (the
//! Dynkin D₁₂ quiver and the extended canonical type ⟨2,4,6⟩ share their
//! polynomial) are data, not errors.

use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use core::fmt;

use super::formulas::{extended_canonical_poly, star_poly};
use super::WeightSeq;
use crate::exactmath::{cyclotomic_factor_cached, CyclotomicCache, IntPoly};

/// Catalog identification of a Coxeter polynomial.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum DerivedType {
    /// Hereditary star of Dynkin type, by star symbol (`A_n` canonicalized
    /// to the single-arm symbol `[n]`).
    Dynkin(Vec<usize>),
    /// Hereditary star of extended Dynkin type (`χ(1) = 0`), by star symbol.
    ExtendedDynkinStar(Vec<usize>),
    /// Extended Dynkin `Ã_{p,q}` data (identified with canonical weight
    /// sequences of length ≤ 2).
    ExtendedDynkinA(usize, usize),
    /// Canonical algebra with at least three weights.
    Canonical(Vec<usize>),
    /// Extended canonical algebra `⟨p_1, …, p_t⟩`.
    ExtendedCanonical(Vec<usize>),
    /// No catalog match.
    Unknown,
}

impl fmt::Display for DerivedType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fn list(f: &mut fmt::Formatter<'_>, w: &[usize]) -> fmt::Result {
            for (i, p) in w.iter().enumerate() {
                if i > 0 {
                    write!(f, ",")?;
                }
                write!(f, "{p}")?;
            }
            Ok(())
        }
        match self {
            DerivedType::Dynkin(w) | DerivedType::ExtendedDynkinStar(w) => {
                write!(f, "[")?;
                list(f, w)?;
                write!(f, "]")
            }
            DerivedType::ExtendedDynkinA(p, q) => write!(f, "({p},{q})"),
            DerivedType::Canonical(w) => {
                write!(f, "(")?;
                list(f, w)?;
                write!(f, ")")
            }
            DerivedType::ExtendedCanonical(w) => {
                write!(f, "<")?;
                list(f, w)?;
                write!(f, ">")
            }
            DerivedType::Unknown => write!(f, "?"),
        }
    }
}

/// Dynkin star symbols with `n` vertices.
fn dynkin_stars(n: usize) -> Vec<Vec<usize>> {
    let mut out = vec![vec![n]];
    if n >= 4 {
        out.push(vec![2, 2, n - 2]);
    }
    match n {
        6 => out.push(vec![2, 3, 3]),
        7 => out.push(vec![2, 3, 4]),
        8 => out.push(vec![2, 3, 5]),
        _ => {}
    }
    out
}

/// Extended Dynkin star symbols (`χ(1) = 0`) with `n` vertices.
fn extended_dynkin_stars(n: usize) -> Vec<Vec<usize>> {
    match n {
        5 => vec![vec![2, 2, 2, 2]],
        7 => vec![vec![3, 3, 3]],
        8 => vec![vec![2, 4, 4]],
        9 => vec![vec![2, 3, 6]],
        _ => vec![],
    }
}

/// Greedy decomposition of a cyclotomic product as `∏ v_{p_i}`: the largest
/// index present forces its `v`, so the decomposition is unique when it
/// exists. Weights are returned sorted ascending, all ≥ 2.
fn v_decompose(p: &IntPoly, cache: &mut CyclotomicCache) -> Option<Vec<usize>> {
    let f = cyclotomic_factor_cached(p, cache).ok()?;
    if !f.remainder.is_one() {
        return None;
    }
    let mut mult: alloc::collections::BTreeMap<u64, u32> = f.factors.iter().copied().collect();
    let mut weights = Vec::new();
    while let Some((&top, _)) = mult.iter().next_back() {
        // divide by v_top = prod_{d | top, d > 1} Phi_d
        for d in 2..=top {
            if top % d != 0 {
                continue;
            }
            match mult.get_mut(&d) {
                Some(e) if *e > 0 => {
                    *e -= 1;
                    if *e == 0 {
                        mult.remove(&d);
                    }
                }
                _ => return None,
            }
        }
        weights.push(top as usize);
    }
    weights.sort_unstable();
    Some(weights)
}

/// All catalog identifications of a monic self-reciprocal polynomial.
pub fn classify_poly(chi: &IntPoly) -> Vec<DerivedType> {
    let mut cache = CyclotomicCache::new();
    classify_poly_cached(chi, &mut cache)
}

pub fn classify_poly_cached(chi: &IntPoly, cache: &mut CyclotomicCache) -> Vec<DerivedType> {
    let mut out = Vec::new();
    let Some(n) = chi.degree() else {
        return vec![DerivedType::Unknown];
    };
    for sym in dynkin_stars(n) {
        if &star_poly(&WeightSeq::from_slice(&sym).expect("valid")) == chi {
            out.push(DerivedType::Dynkin(sym));
        }
    }
    for sym in extended_dynkin_stars(n) {
        if &star_poly(&WeightSeq::from_slice(&sym).expect("valid")) == chi {
            out.push(DerivedType::ExtendedDynkinStar(sym));
        }
    }
    // canonical: strip (x-1)^2 and v-decompose the rest
    if let Some(q) = chi.try_exact_div(&IntPoly::from_i64s(&[1, -2, 1])) {
        if let Some(weights) = v_decompose(&q, cache) {
            match weights.len() {
                0 => out.push(DerivedType::ExtendedDynkinA(1, 1)),
                1 => out.push(DerivedType::ExtendedDynkinA(weights[0], 1)),
                2 => out.push(DerivedType::ExtendedDynkinA(weights[0], weights[1])),
                _ => out.push(DerivedType::Canonical(weights)),
            }
        }
    }
    // extended canonical: bounded search over weight sequences with
    // sum (p_i - 1) = n - 3, at most 12 weights
    if n >= 5 {
        search_partitions(n - 3, 1, &mut Vec::new(), &mut |parts: &[usize]| {
            if parts.len() < 2 || parts.len() > 12 {
                return;
            }
            let weights: Vec<usize> = parts.iter().map(|&k| k + 1).collect();
            let seq = WeightSeq::from_slice(&weights).expect("valid");
            if &extended_canonical_poly(&seq) == chi {
                out.push(DerivedType::ExtendedCanonical(seq.weights().to_vec()));
            }
        });
    }
    if out.is_empty() {
        out.push(DerivedType::Unknown);
    }
    out
}

fn search_partitions(
    remaining: usize,
    min_part: usize,
    acc: &mut Vec<usize>,
    f: &mut impl FnMut(&[usize]),
) {
    if remaining == 0 {
        f(acc);
        return;
    }
    if acc.len() >= 12 {
        return;
    }
    for part in min_part..=remaining {
        acc.push(part);
        search_partitions(remaining - part, part, acc, f);
        acc.pop();
    }
}

/// Renders a Coxeter polynomial in the usual notation (`v_n`, `Phi_n`,
/// `(x-1)^2` tokens), falling back to an explicit polynomial factor when a
/// non-cyclotomic part remains.
pub fn factorization_string(chi: &IntPoly) -> String {
    let mut cache = CyclotomicCache::new();
    factorization_string_cached(chi, &mut cache)
}

pub fn factorization_string_cached(chi: &IntPoly, cache: &mut CyclotomicCache) -> String {
    use core::fmt::Write;
    let types = classify_poly_cached(chi, cache);
    // Dynkin rows print as reduced v-quotients per type
    for t in &types {
        if let DerivedType::Dynkin(sym) = t {
            return match sym.as_slice() {
                [n] => alloc::format!("v_{}", n + 1),
                [2, 2, m] => {
                    let dn = m + 2;
                    alloc::format!("v_2*v_{}/v_{}", 2 * (dn - 1), dn - 1)
                }
                [2, 3, 3] => "v_2*v_3*v_12/(v_4*v_6)".into(),
                [2, 3, 4] => "v_2*v_3*v_18/(v_6*v_9)".into(),
                [2, 3, 5] => "Phi_30".into(),
                _ => unreachable!("dynkin symbols are exhaustive"),
            };
        }
    }
    // canonical-shaped polynomials print as (x-1)^2 times weight blocks
    for t in &types {
        let weights: Option<Vec<usize>> = match t {
            DerivedType::Canonical(w) => Some(w.clone()),
            DerivedType::ExtendedDynkinA(p, q) => {
                let mut w: Vec<usize> = [*p, *q].iter().copied().filter(|&x| x > 1).collect();
                w.sort_unstable();
                Some(w)
            }
            _ => None,
        };
        if let Some(w) = weights {
            let mut s = String::from("(x-1)^2");
            let mut i = 0;
            while i < w.len() {
                let p = w[i];
                let run = w[i..].iter().take_while(|&&q| q == p).count();
                let _ = write!(s, "*v_{p}");
                if run > 1 {
                    let _ = write!(s, "^{run}");
                }
                i += run;
            }
            return s;
        }
    }
    // cyclotomic products print as Phi tokens, sorted by index
    let f = cyclotomic_factor_cached(chi, cache).expect("nonzero");
    let mut s = String::new();
    for &(d, e) in &f.factors {
        if !s.is_empty() {
            s.push('*');
        }
        if d == 1 {
            let _ = write!(s, "(x-1)");
        } else {
            let _ = write!(s, "Phi_{d}");
        }
        if e > 1 {
            let _ = write!(s, "^{e}");
        }
    }
    if !f.remainder.is_one() {
        if !s.is_empty() {
            s.push('*');
        }
        let _ = write!(s, "({})", f.remainder);
    }
    if s.is_empty() {
        s.push('1');
    }
    s
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::canonical_poly;
    use crate::exactmath::cyclotomic;

    fn ws(w: &[usize]) -> WeightSeq {
        WeightSeq::from_slice(w).unwrap()
    }

    #[test]
    fn classify_dynkin() {
        let t = classify_poly(&cyclotomic(30).unwrap());
        assert_eq!(t, vec![DerivedType::Dynkin(vec![2, 3, 5])]);
    }

    #[test]
    fn classify_canonical() {
        // the tubular type <2,3,6> is derived canonical of type (2,3,7),
        // so both identifications are genuine
        let t = classify_poly(&canonical_poly(&ws(&[2, 3, 7])));
        assert_eq!(
            t,
            vec![
                DerivedType::Canonical(vec![2, 3, 7]),
                DerivedType::ExtendedCanonical(vec![2, 3, 6])
            ]
        );
    }

    #[test]
    fn classify_isospectral_collision() {
        // Phi_2^2 Phi_22 is both the D12 star and <2,4,6>
        let phi2 = cyclotomic(2).unwrap();
        let chi = phi2.mul(&phi2).mul(&cyclotomic(22).unwrap());
        let t = classify_poly(&chi);
        assert!(t.contains(&DerivedType::Dynkin(vec![2, 2, 10])));
        assert!(t.contains(&DerivedType::ExtendedCanonical(vec![2, 4, 6])));
        assert_eq!(t.len(), 2);
    }

    #[test]
    fn classify_tame_collision() {
        // (x-1)^2 v2 v3 v5 is the extended Dynkin star [2,3,6] and canonical (2,3,5)
        let chi = canonical_poly(&ws(&[2, 3, 5]));
        let t = classify_poly(&chi);
        assert!(t.contains(&DerivedType::ExtendedDynkinStar(vec![2, 3, 6])));
        assert!(t.contains(&DerivedType::Canonical(vec![2, 3, 5])));
    }

    #[test]
    fn classify_a_tilde() {
        let chi = canonical_poly(&ws(&[2, 5]));
        let t = classify_poly(&chi);
        assert!(t.contains(&DerivedType::ExtendedDynkinA(2, 5)));
        // Kronecker
        let k = IntPoly::from_i64s(&[1, -2, 1]);
        assert!(classify_poly(&k).contains(&DerivedType::ExtendedDynkinA(1, 1)));
    }

    #[test]
    fn classify_lehmer_as_domestic_extension() {
        // the [2,3,7] star is the double-extended E8 diagram, i.e. the
        // extended canonical type <2,3,5>
        let lehmer = IntPoly::from_i64s(&[1, 1, 0, -1, -1, -1, -1, -1, 0, 1, 1]);
        assert_eq!(
            classify_poly(&lehmer),
            vec![DerivedType::ExtendedCanonical(vec![2, 3, 5])]
        );
    }

    #[test]
    fn classify_unknown() {
        assert_eq!(
            classify_poly(&cyclotomic(4).unwrap()),
            vec![DerivedType::Unknown]
        );
        assert_eq!(
            classify_poly(&IntPoly::from_i64s(&[1, -3, 1])),
            vec![DerivedType::Unknown]
        );
    }

    #[test]
    fn classification_recovers_every_dynkin_star() {
        for n in 1..=12 {
            for sym in dynkin_stars(n) {
                let chi = star_poly(&ws(&sym));
                assert!(
                    classify_poly(&chi).contains(&DerivedType::Dynkin(sym.clone())),
                    "{sym:?}"
                );
            }
        }
    }

    #[test]
    fn strings_match_table_notation() {
        assert_eq!(factorization_string(&IntPoly::v(4).unwrap()), "v_4");
        let d4 = star_poly(&ws(&[2, 2, 2]));
        assert_eq!(factorization_string(&d4), "v_2*v_6/v_3");
        assert_eq!(factorization_string(&cyclotomic(30).unwrap()), "Phi_30");
        assert_eq!(
            factorization_string(&canonical_poly(&ws(&[2, 3, 7]))),
            "(x-1)^2*v_2*v_3*v_7"
        );
        assert_eq!(factorization_string(&cyclotomic(42).unwrap()), "Phi_42");
        let phi2 = cyclotomic(2).unwrap();
        let d12 = phi2.mul(&phi2).mul(&cyclotomic(22).unwrap());
        assert_eq!(factorization_string(&d12), "v_2*v_22/v_11");
        let lehmer = IntPoly::from_i64s(&[1, 1, 0, -1, -1, -1, -1, -1, 0, 1, 1]);
        assert_eq!(
            factorization_string(&lehmer),
            "(x^10+x^9-x^7-x^6-x^5-x^4-x^3+x+1)"
        );
    }

    #[test]
    fn display_forms() {
        assert_eq!(
            alloc::format!("{}", DerivedType::Dynkin(vec![2, 3, 5])),
            "[2,3,5]"
        );
        assert_eq!(
            alloc::format!("{}", DerivedType::Canonical(vec![2, 3, 7])),
            "(2,3,7)"
        );
        assert_eq!(
            alloc::format!("{}", DerivedType::ExtendedCanonical(vec![2, 4, 6])),
            "<2,4,6>"
        );
    }
}
