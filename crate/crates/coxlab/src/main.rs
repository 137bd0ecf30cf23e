//! `coxlab`: exact Coxeter polynomial computations from the command line.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use coxlab::input::{algebra_from_json, graph_from_json, parse_pairs, parse_weights, AlgebraJson};
use coxlab::jobs::{effective_jobs, parallel_census, parallel_radius_one};
use coxlab::render::{self, Format};
use coxlab_core::algebras::{AlgebraSpec, CartanBasis, Quiver};
use coxlab_core::catalog::{
    classify_poly, domestic_row_d_even, domestic_row_d_odd, domestic_row_pq, domestic_table,
    dynkin_table, extended_dynkin_table, factorization_string, hilbert_identity_check, wild_table,
    SingularityRow,
};
use coxlab_core::coxeter::{
    chi, coxeter_polynomial, spectral_class, spectral_radius_numeric,
};
use coxlab_core::exactmath::{cyclotomic_factor, IntPoly};
use coxlab_core::experiments::{analyze_chain, CensusConvention};
use coxlab_core::spectra::{
    acampo_check, canonical_tree_code, find_isospectral_mate, graph_char_poly, represent, Graph,
};
use coxlab_core::Error;

#[derive(Parser)]
#[command(name = "coxlab", version, about = "Exact Coxeter polynomial toolkit")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum FormatArg {
    Text,
    Json,
    Csv,
}

impl From<FormatArg> for Format {
    fn from(f: FormatArg) -> Format {
        match f {
            FormatArg::Text => Format::Text,
            FormatArg::Json => Format::Json,
            FormatArg::Csv => Format::Csv,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum BasisArg {
    Projectives,
    Simples,
}

#[derive(Args)]
struct AlgebraArgs {
    /// Inline algebra kind: path|linear|star|canonical|extended-canonical|poset|ladder
    #[arg(long)]
    algebra: Option<String>,
    /// Weights for star/canonical kinds, e.g. `2,3,7`
    #[arg(long)]
    weights: Option<String>,
    /// Vertex count for path/linear/ladder kinds
    #[arg(long)]
    vertices: Option<usize>,
    /// Arrow list for the path kind, e.g. `1-2,2-3`
    #[arg(long)]
    arrows: Option<String>,
    /// Zero-relation intervals for the linear kind, e.g. `1-4,2-5`
    #[arg(long)]
    relations: Option<String>,
    /// Cover list for the poset kind, e.g. `1-2,2-3`
    #[arg(long)]
    covers: Option<String>,
    /// Ladder variant B|C|D
    #[arg(long)]
    variant: Option<String>,
    /// Generate all zero relations x^k = 0 on the linear quiver
    #[arg(long)]
    nilpotency: Option<usize>,
    /// JSON algebra description (see README for the schema)
    #[arg(long)]
    file: Option<PathBuf>,
}

impl AlgebraArgs {
    fn resolve(&self) -> Result<AlgebraSpec, Error> {
        if let Some(path) = &self.file {
            let text = std::fs::read_to_string(path)
                .map_err(|e| Error::Argument(format!("cannot read {}: {e}", path.display())))?;
            return algebra_from_json(&text);
        }
        let kind = self.algebra.as_deref().ok_or_else(|| {
            Error::Argument("pass --algebra <kind> or --file <json>".into())
        })?;
        if kind == "linear" {
            let n = self
                .vertices
                .ok_or_else(|| Error::Argument("linear needs --vertices".into()))?;
            let mut relations = match (&self.relations, self.nilpotency) {
                (Some(r), None) => parse_pairs(r)?,
                (None, Some(k)) if k >= 2 => {
                    (1..n.saturating_sub(k - 1)).map(|i| (i, i + k)).collect()
                }
                (None, Some(_)) => {
                    return Err(Error::Argument("--nilpotency needs k >= 2".into()))
                }
                (None, None) => Vec::new(),
                (Some(_), Some(_)) => {
                    return Err(Error::Argument(
                        "pass either --relations or --nilpotency, not both".into(),
                    ))
                }
            };
            relations.sort_unstable();
            return Ok(AlgebraSpec::LinearWithRelations { n, relations });
        }
        let json = AlgebraJson {
            kind: kind.replace('-', "_"),
            vertices: self.vertices,
            arrows: self.arrows.as_deref().map(parse_pairs).transpose()?,
            relations: self
                .relations
                .as_deref()
                .map(|s| parse_pairs(s).map(|ps| ps.into_iter().map(|(a, b)| vec![a, b]).collect()))
                .transpose()?,
            covers: self.covers.as_deref().map(parse_pairs).transpose()?,
            weights: self.weights.as_deref().map(parse_weights).transpose()?,
            variant: self.variant.clone(),
            n: self.vertices,
            posets: None,
        };
        json.into_spec()
    }

    fn resolve_quiver(&self) -> Result<Quiver, Error> {
        match self.resolve()? {
            AlgebraSpec::Path(q) => Ok(q),
            AlgebraSpec::Star { weights } => Quiver::star(&weights),
            AlgebraSpec::LinearWithRelations { n, relations } if relations.is_empty() => {
                Ok(Quiver::linear(n))
            }
            _ => Err(Error::Argument(
                "this command needs a hereditary quiver (path, star or relation-free linear)"
                    .into(),
            )),
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Cartan matrix of an algebra
    Cartan {
        #[command(flatten)]
        algebra: AlgebraArgs,
        #[arg(long, value_enum, default_value = "projectives")]
        basis: BasisArg,
        #[arg(long, value_enum, default_value = "text")]
        format: FormatArg,
    },
    /// Coxeter polynomial with its factorization and catalog types
    Coxpoly {
        #[command(flatten)]
        algebra: AlgebraArgs,
        #[arg(long, value_enum, default_value = "text")]
        format: FormatArg,
    },
    /// Cyclotomic factorization of a polynomial
    Factor {
        /// Polynomial in bracket form, e.g. `[1,1,1]`
        #[arg(long)]
        poly: String,
        #[arg(long, value_enum, default_value = "text")]
        format: FormatArg,
    },
    /// Catalog classification of a Coxeter polynomial
    Classify {
        #[arg(long)]
        poly: String,
        #[arg(long, value_enum, default_value = "text")]
        format: FormatArg,
    },
    /// Representing polynomial q with p(x^2) = x^deg q(x + 1/x)
    Represent {
        #[arg(long)]
        poly: String,
        #[arg(long, value_enum, default_value = "text")]
        format: FormatArg,
    },
    /// Compare both sides of the A'Campo identity for a quiver
    Acampo {
        #[command(flatten)]
        algebra: AlgebraArgs,
        #[arg(long, value_enum, default_value = "text")]
        format: FormatArg,
    },
    /// Spectral classification and numeric spectral radius
    Spectral {
        #[arg(long)]
        poly: Option<String>,
        #[command(flatten)]
        algebra: AlgebraArgs,
        #[arg(long, default_value_t = 1e-9)]
        tol: f64,
        #[arg(long, value_enum, default_value = "text")]
        format: FormatArg,
    },
    /// Truncation chain of a linear-with-relations or ladder algebra
    Chain {
        #[command(flatten)]
        algebra: AlgebraArgs,
        #[arg(long, value_enum, default_value = "text")]
        format: FormatArg,
    },
    /// Zero-relation census on the linear quiver
    Census {
        #[arg(long)]
        vertices: usize,
        #[arg(long, default_value_t = 3)]
        min_arrows: usize,
        /// Count the hereditary (empty) relation set
        #[arg(long, default_value_t = true, action = clap::ArgAction::Set)]
        include_empty: bool,
        /// Identify a relation set with its mirror image
        #[arg(long, default_value_t = true, action = clap::ArgAction::Set)]
        identify_opposites: bool,
        /// Worker threads (default: COXLAB_JOBS or 1)
        #[arg(long)]
        jobs: Option<usize>,
        #[arg(long, value_enum, default_value = "text")]
        format: FormatArg,
    },
    /// Spectral-radius-one polynomial counts a(n), b(n), c(n)
    RadiusOne {
        #[arg(long)]
        degree: usize,
        #[arg(long)]
        jobs: Option<usize>,
        #[arg(long, value_enum, default_value = "text")]
        format: FormatArg,
    },
    /// Dynkin, extended Dynkin and singularity tables
    Tables {
        #[arg(long, default_value = "all")]
        table: String,
        /// Range bound for the parametric A/D families
        #[arg(long, default_value_t = 8)]
        max_n: usize,
        #[arg(long, value_enum, default_value = "text")]
        format: FormatArg,
    },
    /// Hilbert identity check for the singularity rows
    HilbertCheck {
        /// Weight type, e.g. `2,3,7` (default: every table row)
        #[arg(long)]
        weights: Option<String>,
        #[arg(long, value_enum, default_value = "text")]
        format: FormatArg,
    },
    /// Isospectral tree mates by exhaustive enumeration
    Isospectral {
        /// Graph JSON file ({"vertices":n,"edges":[[a,b],...]})
        #[arg(long)]
        graph: Option<PathBuf>,
        /// Star tree [p_1,...,p_t], e.g. `2,2,3,5`
        #[arg(long)]
        star: Option<String>,
        #[arg(long, value_enum, default_value = "text")]
        format: FormatArg,
    },
}

fn parse_poly(s: &str) -> Result<IntPoly, Error> {
    s.parse()
}

fn cyclo_token_string(f: &coxlab_core::exactmath::CyclotomicFactorization) -> String {
    use std::fmt::Write;
    let mut s = String::new();
    for &(d, e) in &f.factors {
        if !s.is_empty() {
            s.push('*');
        }
        if d == 1 {
            s.push_str("(x-1)");
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

fn singularity_rows_for(weights: &[usize]) -> Result<Vec<SingularityRow>, Error> {
    let mut sorted = weights.to_vec();
    sorted.sort_unstable();
    let all: Vec<SingularityRow> = domestic_table().into_iter().chain(wild_table()).collect();
    if let Some(row) = all.iter().find(|r| r.weights == sorted) {
        return Ok(vec![row.clone()]);
    }
    // parametric domestic families
    match sorted.as_slice() {
        [p, q] => Ok(vec![domestic_row_pq(*p, *q)]),
        [2, 2, m] if *m >= 2 => Ok(vec![if m % 2 == 0 {
            domestic_row_d_even(m / 2)
        } else {
            domestic_row_d_odd((m - 1) / 2)
        }]),
        _ => Err(Error::Argument(format!(
            "no singularity table row for weight type {sorted:?}"
        ))),
    }
}

fn run(cli: Cli) -> Result<String, Error> {
    match cli.command {
        Command::Cartan {
            algebra,
            basis,
            format,
        } => {
            let spec = algebra.resolve()?;
            let basis = match basis {
                BasisArg::Projectives => CartanBasis::Projectives,
                BasisArg::Simples => CartanBasis::Simples,
            };
            let c = coxlab_core::algebras::cartan_matrix(&spec, basis)?;
            Ok(match format.into() {
                Format::Text => render::matrix_text(&c),
                Format::Json => format!("{}\n", render::matrix_json(&c)),
                Format::Csv => render::matrix_csv(&c),
            })
        }
        Command::Coxpoly { algebra, format } => {
            let spec = algebra.resolve()?;
            let data = coxeter_polynomial(&spec)?;
            let fact = factorization_string(&data.poly);
            Ok(match format.into() {
                Format::Text => render::coxeter_text(&data, &fact),
                Format::Json => {
                    let types = classify_poly(&data.poly);
                    format!("{}\n", render::coxeter_json(&data, &fact, &types))
                }
                Format::Csv => {
                    return Err(Error::Argument("coxpoly has no CSV form".into()));
                }
            })
        }
        Command::Factor { poly, format } => {
            let p = parse_poly(&poly)?;
            let f = cyclotomic_factor(&p)?;
            Ok(match format.into() {
                Format::Text => format!("{}\n", cyclo_token_string(&f)),
                Format::Json => format!(
                    "{}\n",
                    serde_json::json!({
                        "cyclotomic": f.factors,
                        "remainder": f.remainder.bracket(),
                        "string": cyclo_token_string(&f),
                    })
                ),
                Format::Csv => return Err(Error::Argument("factor has no CSV form".into())),
            })
        }
        Command::Classify { poly, format } => {
            let p = parse_poly(&poly)?;
            let types = classify_poly(&p);
            Ok(match format.into() {
                Format::Text => {
                    let mut out = String::new();
                    for t in &types {
                        out.push_str(&format!("{t}\n"));
                    }
                    out
                }
                Format::Json => {
                    let list: Vec<_> = types.iter().map(render::derived_type_json).collect();
                    format!("{}\n", serde_json::Value::Array(list))
                }
                Format::Csv => return Err(Error::Argument("classify has no CSV form".into())),
            })
        }
        Command::Represent { poly, format } => {
            let p = parse_poly(&poly)?;
            let q = represent(&p)?;
            Ok(match format.into() {
                Format::Text => format!("q = {}\nbracket = {}\n", q, q.bracket()),
                Format::Json => format!("{}\n", render::poly_json(&q)),
                Format::Csv => return Err(Error::Argument("represent has no CSV form".into())),
            })
        }
        Command::Acampo { algebra, format } => {
            let quiver = algebra.resolve_quiver()?;
            let report = acampo_check(&quiver)?;
            Ok(match format.into() {
                Format::Text => format!(
                    "bipartite = {}\nholds = {}\nlhs = {}\nrhs = {}\n",
                    report.bipartite, report.holds, report.lhs, report.rhs
                ),
                Format::Json => format!(
                    "{}\n",
                    serde_json::json!({
                        "bipartite": report.bipartite,
                        "holds": report.holds,
                        "lhs": render::poly_json(&report.lhs),
                        "rhs": render::poly_json(&report.rhs),
                    })
                ),
                Format::Csv => return Err(Error::Argument("acampo has no CSV form".into())),
            })
        }
        Command::Spectral {
            poly,
            algebra,
            tol,
            format,
        } => {
            let p = match poly {
                Some(s) => parse_poly(&s)?,
                None => chi(&algebra.resolve()?)?,
            };
            let class = spectral_class(&p)?;
            let radius = spectral_radius_numeric(&p, tol)?;
            Ok(match format.into() {
                Format::Text => render::spectral_text(&class, radius),
                Format::Json => format!("{}\n", render::spectral_json(&class, radius)),
                Format::Csv => return Err(Error::Argument("spectral has no CSV form".into())),
            })
        }
        Command::Chain { algebra, format } => {
            let spec = algebra.resolve()?;
            let report = analyze_chain(&spec)?;
            Ok(match format.into() {
                Format::Text => render::chain_text(&report),
                Format::Json => format!("{}\n", render::chain_json(&report)),
                Format::Csv => return Err(Error::Argument("chain has no CSV form".into())),
            })
        }
        Command::Census {
            vertices,
            min_arrows,
            include_empty,
            identify_opposites,
            jobs,
            format,
        } => {
            let convention = CensusConvention {
                include_empty,
                identify_opposites,
            };
            let jobs = effective_jobs(jobs);
            let census = parallel_census(vertices, min_arrows, convention, jobs)?;
            Ok(match format.into() {
                Format::Text => render::census_text(&census),
                Format::Json => format!("{}\n", render::census_json(&census)),
                Format::Csv => render::census_csv(&[census]),
            })
        }
        Command::RadiusOne {
            degree,
            jobs,
            format,
        } => {
            if degree == 0 || degree > 25 {
                return Err(Error::Argument(
                    "radius-one census supports degrees 1..=25".into(),
                ));
            }
            let jobs = effective_jobs(jobs);
            let counts = parallel_radius_one(degree, jobs)?;
            Ok(match format.into() {
                Format::Text => render::radius_one_text(&counts),
                Format::Json => format!("{}\n", render::radius_one_json(&counts)),
                Format::Csv => render::radius_one_csv(&[counts]),
            })
        }
        Command::Tables {
            table,
            max_n,
            format,
        } => render_tables(&table, max_n, format.into()),
        Command::HilbertCheck { weights, format } => {
            let rows = match weights {
                Some(w) => singularity_rows_for(&parse_weights(&w)?)?,
                None => domestic_table().into_iter().chain(wild_table()).collect(),
            };
            let mut out = String::new();
            let mut list = Vec::new();
            let mut all_pass = true;
            for row in &rows {
                let ok = hilbert_identity_check(row)?;
                all_pass &= ok;
                match format.into() {
                    Format::Text => out.push_str(&render::singularity_row_text(row, ok)),
                    _ => list.push(render::singularity_row_json(row, ok)),
                }
            }
            if !matches!(format.into(), Format::Text) {
                out = format!("{}\n", serde_json::Value::Array(list));
            }
            if !all_pass {
                return Err(Error::Argument(format!(
                    "Hilbert identity failed:\n{out}"
                )));
            }
            Ok(out)
        }
        Command::Isospectral {
            graph,
            star,
            format,
        } => {
            let g = match (graph, star) {
                (Some(path), None) => {
                    let text = std::fs::read_to_string(&path).map_err(|e| {
                        Error::Argument(format!("cannot read {}: {e}", path.display()))
                    })?;
                    graph_from_json(&text)?
                }
                (None, Some(w)) => Graph::star(&parse_weights(&w)?),
                _ => {
                    return Err(Error::Argument(
                        "pass exactly one of --graph or --star".into(),
                    ))
                }
            };
            let mates = find_isospectral_mate(&g, 12)?;
            Ok(match format.into() {
                Format::Text => {
                    let mut out = format!(
                        "tree = {}\nchar_poly = {}\nmates = {}\n",
                        canonical_tree_code(&g)?,
                        graph_char_poly(&g),
                        mates.len()
                    );
                    for m in &mates {
                        out.push_str(&format!("mate edges = {:?}\n", m.edges()));
                    }
                    out
                }
                Format::Json => {
                    let list: Vec<_> = mates
                        .iter()
                        .map(|m| {
                            serde_json::json!({
                                "vertices": m.n_vertices(),
                                "edges": m.edges(),
                            })
                        })
                        .collect();
                    format!(
                        "{}\n",
                        serde_json::json!({
                            "char_poly": render::poly_json(&graph_char_poly(&g)),
                            "mates": list,
                        })
                    )
                }
                Format::Csv => {
                    return Err(Error::Argument("isospectral has no CSV form".into()))
                }
            })
        }
    }
}

fn render_tables(which: &str, max_n: usize, format: Format) -> Result<String, Error> {
    let mut out = String::new();
    let mut json_obj = serde_json::Map::new();
    let want = |name: &str| which == "all" || which == name;
    if want("dynkin") {
        let rows = dynkin_table(max_n);
        match format {
            Format::Text => {
                out.push_str("Dynkin\n");
                for r in &rows {
                    out.push_str(&format!(
                        "{:<4} star={:?} cyclotomic={:?} coxeter_number={}\n",
                        r.name, r.star, r.cyclotomic, r.coxeter_number
                    ));
                }
            }
            Format::Csv => {
                out.push_str("table,name,star,cyclotomic,coxeter_number\n");
                for r in &rows {
                    out.push_str(&format!(
                        "dynkin,{},{:?},{:?},{}\n",
                        r.name, r.star, r.cyclotomic, r.coxeter_number
                    ));
                }
            }
            Format::Json => {
                let list: Vec<_> = rows
                    .iter()
                    .map(|r| {
                        serde_json::json!({
                            "name": r.name,
                            "star": r.star,
                            "v_numerator": r.v_numerator,
                            "v_denominator": r.v_denominator,
                            "cyclotomic": r.cyclotomic,
                            "coxeter_number": r.coxeter_number,
                        })
                    })
                    .collect();
                json_obj.insert("dynkin".into(), serde_json::Value::Array(list));
            }
        }
    }
    if want("extended") {
        let rows = extended_dynkin_table(max_n);
        match format {
            Format::Text => {
                out.push_str("Extended Dynkin\n");
                for r in &rows {
                    out.push_str(&format!(
                        "{:<8} star={:?} weights={:?}\n",
                        r.name, r.star, r.weights
                    ));
                }
            }
            Format::Csv => {
                out.push_str("table,name,star,weights\n");
                for r in &rows {
                    out.push_str(&format!(
                        "extended,{},{:?},{:?}\n",
                        r.name, r.star, r.weights
                    ));
                }
            }
            Format::Json => {
                let list: Vec<_> = rows
                    .iter()
                    .map(|r| {
                        serde_json::json!({
                            "name": r.name,
                            "star": r.star,
                            "weights": r.weights,
                        })
                    })
                    .collect();
                json_obj.insert("extended".into(), serde_json::Value::Array(list));
            }
        }
    }
    if want("singularities") {
        let rows: Vec<SingularityRow> =
            domestic_table().into_iter().chain(wild_table()).collect();
        match format {
            Format::Text => {
                out.push_str("Singularities\n");
                for r in &rows {
                    let ok = hilbert_identity_check(r)?;
                    out.push_str(&render::singularity_row_text(r, ok));
                }
            }
            Format::Csv => {
                out.push_str("table,name,dx,dy,dz,df,relation\n");
                for r in &rows {
                    let (dx, dy, dz) = r.gen_degrees;
                    out.push_str(&format!(
                        "singularity,{},{},{},{},{},{}\n",
                        r.name, dx, dy, dz, r.rel_degree, r.relation
                    ));
                }
            }
            Format::Json => {
                let mut list = Vec::new();
                for r in &rows {
                    let ok = hilbert_identity_check(r)?;
                    list.push(render::singularity_row_json(r, ok));
                }
                json_obj.insert("singularities".into(), serde_json::Value::Array(list));
            }
        }
    }
    if matches!(format, Format::Json) {
        out = format!("{}\n", serde_json::Value::Object(json_obj));
    }
    if out.is_empty() {
        return Err(Error::Argument(format!(
            "unknown table `{which}` (dynkin|extended|singularities|all)"
        )));
    }
    Ok(out)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(output) => {
            print!("{output}");
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("{e}");
            ExitCode::from(1)
        }
    }
}
