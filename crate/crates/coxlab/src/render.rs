//! Output rendering: text, JSON and CSV encodings of the computation results.

use coxlab_core::catalog::{DerivedType, SingularityRow};
use coxlab_core::coxeter::{CoxeterData, SpectralClass, SpectralTag};
use coxlab_core::exactmath::{IntMatrix, IntPoly};
use coxlab_core::experiments::{ChainReport, RadiusOneCounts, RelationCensus};
use serde_json::{json, Value};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Text,
    Json,
    Csv,
}

pub fn poly_json(p: &IntPoly) -> Value {
    json!({
        "coeffs": p.coeffs().iter().map(|c| c.to_string()).collect::<Vec<_>>(),
        "bracket": p.bracket(),
        "pretty": p.to_string(),
    })
}

pub fn matrix_text(m: &IntMatrix) -> String {
    let n = m.dim();
    let width = (0..n)
        .flat_map(|i| (0..n).map(move |j| (i, j)))
        .map(|(i, j)| m.at(i, j).to_string().len())
        .max()
        .unwrap_or(1);
    let mut out = String::new();
    for i in 0..n {
        for j in 0..n {
            if j > 0 {
                out.push(' ');
            }
            out.push_str(&format!("{:>width$}", m.at(i, j)));
        }
        out.push('\n');
    }
    out
}

pub fn matrix_json(m: &IntMatrix) -> Value {
    let rows: Vec<Vec<String>> = (0..m.dim())
        .map(|i| (0..m.dim()).map(|j| m.at(i, j).to_string()).collect())
        .collect();
    json!({"n": m.dim(), "rows": rows})
}

pub fn matrix_csv(m: &IntMatrix) -> String {
    let mut out = String::new();
    for i in 0..m.dim() {
        let row: Vec<String> = (0..m.dim()).map(|j| m.at(i, j).to_string()).collect();
        out.push_str(&row.join(","));
        out.push('\n');
    }
    out
}

pub fn derived_type_json(t: &DerivedType) -> Value {
    match t {
        DerivedType::Dynkin(w) => json!({"type": "dynkin", "star": w}),
        DerivedType::ExtendedDynkinStar(w) => json!({"type": "extended-dynkin-star", "star": w}),
        DerivedType::ExtendedDynkinA(p, q) => json!({"type": "extended-dynkin-a", "pq": [p, q]}),
        DerivedType::Canonical(w) => json!({"type": "canonical", "weights": w}),
        DerivedType::ExtendedCanonical(w) => json!({"type": "extended-canonical", "weights": w}),
        DerivedType::Unknown => json!({"type": "unknown"}),
    }
}

pub fn coxeter_text(data: &CoxeterData, factorization: &str) -> String {
    format!(
        "chi = {}\npoly = {}\nbracket = {}\n",
        factorization, data.poly, data.poly.bracket()
    )
}

pub fn coxeter_json(data: &CoxeterData, factorization: &str, types: &[DerivedType]) -> Value {
    json!({
        "poly": poly_json(&data.poly),
        "factorization": factorization,
        "cyclotomic": data.factorization.factors,
        "remainder": data.factorization.remainder.bracket(),
        "types": types.iter().map(derived_type_json).collect::<Vec<_>>(),
    })
}

pub fn spectral_text(class: &SpectralClass, radius: f64) -> String {
    format!(
        "tag = {}\nroots_outside = {}\nsalem = {}\nspectral_radius = {:.9}\n",
        match class.tag {
            SpectralTag::RadiusOne => "radius-one",
            SpectralTag::RadiusGreater => "radius-greater",
        },
        class.roots_outside,
        class.salem,
        radius
    )
}

pub fn spectral_json(class: &SpectralClass, radius: f64) -> Value {
    json!({
        "tag": match class.tag {
            SpectralTag::RadiusOne => "radius-one",
            SpectralTag::RadiusGreater => "radius-greater",
        },
        "roots_outside": class.roots_outside,
        "salem": class.salem,
        "spectral_radius": radius,
    })
}

/// Aligned two-row-per-step chain table mirroring the table layout.
pub fn chain_text(report: &ChainReport) -> String {
    let mut rows: Vec<(String, String, String)> = Vec::new();
    for step in &report.steps {
        rows.push((
            step.s.to_string(),
            step.factorization.clone(),
            ChainReport::type_string(step),
        ));
    }
    let w0 = rows.iter().map(|r| r.0.len()).max().unwrap_or(1).max(1);
    let w1 = rows.iter().map(|r| r.1.len()).max().unwrap_or(3).max(3);
    let mut out = String::new();
    out.push_str(&format!("{:>w0$}  {:<w1$}  type\n", "n", "chi"));
    for (a, b, c) in rows {
        out.push_str(&format!("{a:>w0$}  {b:<w1$}  {c}\n"));
    }
    out
}

pub fn chain_json(report: &ChainReport) -> Value {
    let steps: Vec<Value> = report
        .steps
        .iter()
        .map(|s| {
            json!({
                "n": s.s,
                "poly": poly_json(&s.poly),
                "factorization": s.factorization,
                "types": s.types.iter().map(derived_type_json).collect::<Vec<_>>(),
            })
        })
        .collect();
    json!({"steps": steps})
}

pub fn census_csv(rows: &[RelationCensus]) -> String {
    let mut out = String::from("n,total,distinct,d_type\n");
    for c in rows {
        out.push_str(&format!(
            "{},{},{},{}\n",
            c.n, c.total, c.distinct_polys, c.d_type_count
        ));
    }
    out
}

pub fn census_text(c: &RelationCensus) -> String {
    format!(
        "n = {}\nmin_arrows = {}\ninclude_empty = {}\nidentify_opposites = {}\ntotal = {}\nraw_antichains = {}\ndistinct_polys = {}\nd_type_count = {}\n",
        c.n,
        c.min_arrows,
        c.convention.include_empty,
        c.convention.identify_opposites,
        c.total,
        c.raw_total,
        c.distinct_polys,
        c.d_type_count
    )
}

pub fn census_json(c: &RelationCensus) -> Value {
    json!({
        "n": c.n,
        "min_arrows": c.min_arrows,
        "include_empty": c.convention.include_empty,
        "identify_opposites": c.convention.identify_opposites,
        "total": c.total,
        "raw_antichains": c.raw_total,
        "distinct_polys": c.distinct_polys,
        "d_type_count": c.d_type_count,
    })
}

pub fn radius_one_csv(rows: &[RadiusOneCounts]) -> String {
    let mut out = String::from("n,a,b,c\n");
    for r in rows {
        out.push_str(&format!("{},{},{},{}\n", r.n, r.a, r.b, r.c));
    }
    out
}

pub fn radius_one_text(r: &RadiusOneCounts) -> String {
    format!("n = {}\na = {}\nb = {}\nc = {}\n", r.n, r.a, r.b, r.c)
}

pub fn radius_one_json(r: &RadiusOneCounts) -> Value {
    json!({"n": r.n, "a": r.a, "b": r.b, "c": r.c})
}

pub fn singularity_row_text(row: &SingularityRow, identity: bool) -> String {
    let (dx, dy, dz) = row.gen_degrees;
    format!(
        "{:<10} degrees=({},{},{};{})  relation={:<20} identity={}\n",
        row.name,
        dx,
        dy,
        dz,
        row.rel_degree,
        row.relation,
        if identity { "PASS" } else { "FAIL" }
    )
}

pub fn singularity_row_json(row: &SingularityRow, identity: bool) -> Value {
    let (dx, dy, dz) = row.gen_degrees;
    json!({
        "name": row.name,
        "weights": row.weights,
        "degrees": [dx, dy, dz],
        "relation_degree": row.rel_degree,
        "relation": row.relation,
        "identity": identity,
    })
}
