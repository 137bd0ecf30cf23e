//! Static table data: Dynkin and extended Dynkin rows, and the graded
//! singularity tables (6 domestic families, 14 wild rows).

use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use crate::algebras::Quiver;

/// Row of the Dynkin table: star symbol, completed v-factorization
/// (numerator and denominator index lists, deliberately cancelling terms
/// kept), cyclotomic factorization, Coxeter number.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DynkinRow {
    pub name: String,
    pub star: Vec<usize>,
    pub v_numerator: Vec<usize>,
    pub v_denominator: Vec<usize>,
    pub cyclotomic: Vec<u64>,
    pub coxeter_number: u64,
}

impl DynkinRow {
    /// The v-fraction with the deliberately cancelling terms removed.
    pub fn reduced_v_fraction(&self) -> (Vec<usize>, Vec<usize>) {
        let mut num = self.v_numerator.clone();
        let mut den = Vec::new();
        for &d in &self.v_denominator {
            if let Some(k) = num.iter().position(|&x| x == d) {
                num.remove(k);
            } else {
                den.push(d);
            }
        }
        (num, den)
    }
}

/// Dynkin rows: `A_n` and `D_n` instantiated for `n ≤ max_n`, plus `E_6`,
/// `E_7`, `E_8`.
pub fn dynkin_table(max_n: usize) -> Vec<DynkinRow> {
    let mut rows = Vec::new();
    for n in 1..=max_n {
        rows.push(DynkinRow {
            name: alloc::format!("A{n}"),
            star: vec![n],
            v_numerator: vec![n + 1],
            v_denominator: vec![],
            cyclotomic: (2..=n as u64 + 1).filter(|d| (n as u64 + 1) % d == 0).collect(),
            coxeter_number: n as u64 + 1,
        });
    }
    for n in 4..=max_n {
        let h = 2 * (n as u64 - 1);
        let mut cyc = vec![2];
        cyc.extend((2..=h).filter(|&d| h % d == 0 && (n as u64 - 1) % d != 0));
        cyc.sort_unstable();
        rows.push(DynkinRow {
            name: alloc::format!("D{n}"),
            star: vec![2, 2, n - 2],
            v_numerator: vec![2, 2, n - 2, 2 * (n - 1)],
            v_denominator: vec![2, n - 2, n - 1],
            cyclotomic: cyc,
            coxeter_number: h,
        });
    }
    rows.push(DynkinRow {
        name: "E6".into(),
        star: vec![2, 3, 3],
        v_numerator: vec![2, 3, 3, 12],
        v_denominator: vec![3, 4, 6],
        cyclotomic: vec![3, 12],
        coxeter_number: 12,
    });
    rows.push(DynkinRow {
        name: "E7".into(),
        star: vec![2, 3, 4],
        v_numerator: vec![2, 3, 4, 18],
        v_denominator: vec![4, 6, 9],
        cyclotomic: vec![2, 18],
        coxeter_number: 18,
    });
    rows.push(DynkinRow {
        name: "E8".into(),
        star: vec![2, 3, 5],
        v_numerator: vec![2, 3, 5, 30],
        v_denominator: vec![6, 10, 15],
        cyclotomic: vec![30],
        coxeter_number: 30,
    });
    rows
}

/// Row of the extended Dynkin table: star symbol where the diagram is a
/// star, canonical weight symbol, and the `(x−1)²·∏v` polynomial data.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExtendedDynkinRow {
    pub name: String,
    pub star: Option<Vec<usize>>,
    pub weights: Vec<usize>,
}

/// Extended Dynkin rows: `Ã_{p,q}` for `1 ≤ p ≤ q ≤ max`, `D̃_n` for
/// `4 ≤ n ≤ max`, and `Ẽ_6`, `Ẽ_7`, `Ẽ_8`.
pub fn extended_dynkin_table(max: usize) -> Vec<ExtendedDynkinRow> {
    let mut rows = Vec::new();
    for p in 1..=max {
        for q in p..=max {
            if p + q >= 2 {
                rows.push(ExtendedDynkinRow {
                    name: alloc::format!("A~({p},{q})"),
                    star: None,
                    weights: vec![p, q],
                });
            }
        }
    }
    for n in 4..=max {
        rows.push(ExtendedDynkinRow {
            name: alloc::format!("D~{n}"),
            star: if n == 4 { Some(vec![2, 2, 2, 2]) } else { None },
            weights: vec![2, 2, n - 2],
        });
    }
    rows.push(ExtendedDynkinRow {
        name: "E~6".into(),
        star: Some(vec![3, 3, 3]),
        weights: vec![2, 3, 3],
    });
    rows.push(ExtendedDynkinRow {
        name: "E~7".into(),
        star: Some(vec![2, 4, 4]),
        weights: vec![2, 3, 4],
    });
    rows.push(ExtendedDynkinRow {
        name: "E~8".into(),
        star: Some(vec![2, 3, 6]),
        weights: vec![2, 3, 5],
    });
    rows
}

/// Tree quiver of type `D̃_n` (`n + 1` vertices): a central path with two
/// pendant forks, oriented away from vertex 1.
pub fn d_tilde_quiver(n: usize) -> crate::Result<Quiver> {
    if n < 4 {
        return Err(crate::Error::Argument("D~n needs n >= 4".into()));
    }
    // path 1..n-3 plus forks {n-2, n-1} at vertex 1 and {n, n+1} at n-3
    let mut arrows: Vec<(usize, usize)> = (1..n - 3).map(|i| (i, i + 1)).collect();
    arrows.push((n - 2, 1));
    arrows.push((n - 1, 1));
    arrows.push((n - 3, n));
    arrows.push((n - 3, n + 1));
    Quiver::new(n + 1, arrows)
}

/// Row of the singularity tables: weight type, generator degrees, relation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SingularityRow {
    pub name: String,
    pub weights: Vec<usize>,
    pub gen_degrees: (usize, usize, usize),
    pub rel_degree: usize,
    pub relation: String,
}

/// Domestic row for weight type `(p, q)`: degrees `(1, p, q; p + q)`.
pub fn domestic_row_pq(p: usize, q: usize) -> SingularityRow {
    SingularityRow {
        name: alloc::format!("({p},{q})"),
        weights: vec![p, q],
        gen_degrees: (1, p, q),
        rel_degree: p + q,
        relation: alloc::format!("x^{}-y*z", p + q),
    }
}

/// Domestic row for weight type `(2, 2, 2l)`: degrees `(2, 2l, 2l+1; 2(2l+1))`.
pub fn domestic_row_d_even(l: usize) -> SingularityRow {
    SingularityRow {
        name: alloc::format!("(2,2,{})", 2 * l),
        weights: vec![2, 2, 2 * l],
        gen_degrees: (2, 2 * l, 2 * l + 1),
        rel_degree: 2 * (2 * l + 1),
        relation: alloc::format!("z^2+x*(y^2+y*x^{l})"),
    }
}

/// Domestic row for weight type `(2, 2, 2l+1)`: degrees `(2, 2l+1, 2l+2; 4(l+1))`.
pub fn domestic_row_d_odd(l: usize) -> SingularityRow {
    SingularityRow {
        name: alloc::format!("(2,2,{})", 2 * l + 1),
        weights: vec![2, 2, 2 * l + 1],
        gen_degrees: (2, 2 * l + 1, 2 * l + 2),
        rel_degree: 4 * (l + 1),
        relation: alloc::format!("z^2+x*(y^2+z*x^{l})"),
    }
}

/// The six domestic rows, parametric families at their smallest parameters.
pub fn domestic_table() -> Vec<SingularityRow> {
    vec![
        domestic_row_pq(2, 2),
        domestic_row_d_even(1),
        domestic_row_d_odd(1),
        SingularityRow {
            name: "(2,3,3)".into(),
            weights: vec![2, 3, 3],
            gen_degrees: (3, 4, 6),
            rel_degree: 12,
            relation: "z^2+y^3+x^2*z".into(),
        },
        SingularityRow {
            name: "(2,3,4)".into(),
            weights: vec![2, 3, 4],
            gen_degrees: (4, 6, 9),
            rel_degree: 18,
            relation: "z^2+y^3+x^3*y".into(),
        },
        SingularityRow {
            name: "(2,3,5)".into(),
            weights: vec![2, 3, 5],
            gen_degrees: (6, 10, 15),
            rel_degree: 30,
            relation: "z^2+y^3+x^5".into(),
        },
    ]
}

/// The fourteen wild rows with three generators.
pub fn wild_table() -> Vec<SingularityRow> {
    let rows: [(&str, [usize; 3], (usize, usize, usize), usize, &str); 14] = [
        ("(2,3,7)", [2, 3, 7], (6, 14, 21), 42, "z^2+y^3+x^7"),
        ("(2,3,8)", [2, 3, 8], (6, 8, 15), 30, "z^2+x^5+x*y^3"),
        ("(2,3,9)", [2, 3, 9], (6, 8, 9), 24, "y^3+x*z^2+x^4"),
        ("(2,4,5)", [2, 4, 5], (4, 10, 15), 30, "z^2+y^3+x^5*y"),
        ("(2,4,6)", [2, 4, 6], (4, 6, 11), 22, "z^2+x^4*y+x*y^3"),
        ("(2,4,7)", [2, 4, 7], (4, 6, 7), 18, "y^3+x^3*y+x*z^2"),
        ("(2,5,5)", [2, 5, 5], (4, 5, 10), 20, "z^2+y^2*z+x^5"),
        ("(2,5,6)", [2, 5, 6], (4, 5, 6), 16, "x*z^2+y^2*z+x^4"),
        ("(3,3,4)", [3, 3, 4], (3, 8, 12), 24, "z^2+y^3+x^4*z"),
        ("(3,3,5)", [3, 3, 5], (3, 5, 9), 18, "z^2+x*y^3+x^3*z"),
        ("(3,3,6)", [3, 3, 6], (3, 5, 6), 15, "y^3+x^3*z+x*z^2"),
        ("(3,4,4)", [3, 4, 4], (3, 4, 8), 16, "z^2-y^2*z+x^4*y"),
        ("(3,4,5)", [3, 4, 5], (3, 4, 5), 13, "x^3*y+x*z^2+y^2*z"),
        ("(4,4,4)", [4, 4, 4], (3, 4, 4), 12, "x^4-y*z^2+y^2*z"),
    ];
    rows.iter()
        .map(|(name, w, deg, df, rel)| SingularityRow {
            name: String::from(*name),
            weights: w.to_vec(),
            gen_degrees: *deg,
            rel_degree: *df,
            relation: String::from(*rel),
        })
        .collect()
}
