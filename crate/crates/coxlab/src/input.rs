//! JSON descriptions of algebras and graphs, and inline option parsing.

use coxlab_core::algebras::{AlgebraSpec, LadderVariant, Poset, Quiver};
use coxlab_core::spectra::Graph;
use coxlab_core::Error;
use serde::Deserialize;

#[derive(Deserialize)]
pub struct PosetJson {
    pub vertices: usize,
    pub covers: Vec<(usize, usize)>,
}

/// On-disk algebra description. `kind` selects the presentation; the other
/// fields are read as that presentation requires.
#[derive(Deserialize)]
pub struct AlgebraJson {
    pub kind: String,
    #[serde(default)]
    pub vertices: Option<usize>,
    #[serde(default)]
    pub arrows: Option<Vec<(usize, usize)>>,
    #[serde(default)]
    pub relations: Option<Vec<Vec<usize>>>,
    #[serde(default)]
    pub covers: Option<Vec<(usize, usize)>>,
    #[serde(default)]
    pub weights: Option<Vec<usize>>,
    #[serde(default)]
    pub variant: Option<String>,
    #[serde(default)]
    pub n: Option<usize>,
    #[serde(default)]
    pub posets: Option<Vec<PosetJson>>,
}

fn need<T>(v: Option<T>, what: &str, kind: &str) -> Result<T, Error> {
    v.ok_or_else(|| Error::InvalidAlgebra(format!("kind `{kind}` needs `{what}`")))
}

/// Expands a 2-vertex relation shorthand `[a, b]` into the unique path from
/// `a` to `b`, erroring when the path is absent or ambiguous.
fn expand_relation(q: &Quiver, rel: &[usize]) -> Result<Vec<usize>, Error> {
    if rel.len() != 2 {
        return Ok(rel.to_vec());
    }
    let (from, to) = (rel[0], rel[1]);
    let mut paths: Vec<Vec<usize>> = Vec::new();
    fn dfs(q: &Quiver, path: &mut Vec<usize>, to: usize, out: &mut Vec<Vec<usize>>) {
        if out.len() > 1 {
            return;
        }
        let v = *path.last().unwrap();
        if v == to && path.len() > 1 {
            out.push(path.clone());
            return;
        }
        for &(s, t) in q.arrows() {
            if s == v {
                path.push(t);
                dfs(q, path, to, out);
                path.pop();
            }
        }
    }
    dfs(q, &mut vec![from], to, &mut paths);
    match paths.len() {
        1 => Ok(paths.pop().unwrap()),
        0 => Err(Error::InvalidAlgebra(format!(
            "relation [{from},{to}]: no path from {from} to {to}"
        ))),
        _ => Err(Error::InvalidAlgebra(format!(
            "relation [{from},{to}] is ambiguous; spell out the vertex path"
        ))),
    }
}

impl AlgebraJson {
    pub fn into_spec(self) -> Result<AlgebraSpec, Error> {
        let kind = self.kind.clone();
        match kind.as_str() {
            "path" => {
                let q = Quiver::new(
                    need(self.vertices, "vertices", &kind)?,
                    need(self.arrows, "arrows", &kind)?,
                )?;
                Ok(AlgebraSpec::Path(q))
            }
            "monomial" => {
                let q = Quiver::new(
                    need(self.vertices, "vertices", &kind)?,
                    need(self.arrows, "arrows", &kind)?,
                )?;
                let rels = self
                    .relations
                    .unwrap_or_default()
                    .iter()
                    .map(|r| expand_relation(&q, r))
                    .collect::<Result<Vec<_>, _>>()?;
                Ok(AlgebraSpec::Monomial {
                    quiver: q,
                    relations: rels,
                })
            }
            "linear" => {
                let n = need(self.vertices, "vertices", &kind)?;
                let relations = self
                    .relations
                    .unwrap_or_default()
                    .iter()
                    .map(|r| {
                        if r.len() == 2 {
                            Ok((r[0], r[1]))
                        } else {
                            Err(Error::InvalidAlgebra(
                                "linear relations are intervals [i,j]".into(),
                            ))
                        }
                    })
                    .collect::<Result<Vec<_>, _>>()?;
                Ok(AlgebraSpec::LinearWithRelations { n, relations })
            }
            "poset" => {
                let p = Poset::new(
                    need(self.vertices, "vertices", &kind)?,
                    need(self.covers, "covers", &kind)?,
                )?;
                Ok(AlgebraSpec::Poset(p))
            }
            "star" => Ok(AlgebraSpec::Star {
                weights: need(self.weights, "weights", &kind)?,
            }),
            "canonical" => Ok(AlgebraSpec::Canonical {
                weights: need(self.weights, "weights", &kind)?,
            }),
            "extended_canonical" | "extended-canonical" => Ok(AlgebraSpec::ExtendedCanonical {
                weights: need(self.weights, "weights", &kind)?,
            }),
            "supercanonical" => {
                let arms = need(self.posets, "posets", &kind)?
                    .into_iter()
                    .map(|p| Poset::new(p.vertices, p.covers))
                    .collect::<Result<Vec<_>, _>>()?;
                Ok(AlgebraSpec::Supercanonical { arms })
            }
            "ladder" => {
                let v = need(self.variant, "variant", &kind)?;
                let variant = match v.as_str() {
                    "B" | "b" => LadderVariant::B,
                    "C" | "c" => LadderVariant::C,
                    "D" | "d" => LadderVariant::D,
                    other => {
                        return Err(Error::InvalidAlgebra(format!(
                            "unknown ladder variant `{other}`"
                        )))
                    }
                };
                Ok(AlgebraSpec::Ladder {
                    variant,
                    n: need(self.n.or(self.vertices), "n", &kind)?,
                })
            }
            other => Err(Error::InvalidAlgebra(format!("unknown kind `{other}`"))),
        }
    }
}

pub fn algebra_from_json(text: &str) -> Result<AlgebraSpec, Error> {
    let parsed: AlgebraJson = serde_json::from_str(text)
        .map_err(|e| Error::InvalidAlgebra(format!("bad algebra JSON: {e}")))?;
    parsed.into_spec()
}

#[derive(Deserialize)]
pub struct GraphJson {
    pub vertices: usize,
    pub edges: Vec<(usize, usize)>,
}

pub fn graph_from_json(text: &str) -> Result<Graph, Error> {
    let parsed: GraphJson = serde_json::from_str(text)
        .map_err(|e| Error::Argument(format!("bad graph JSON: {e}")))?;
    Graph::new(parsed.vertices, parsed.edges)
}

/// Parses `2,3,7` into a weight list.
pub fn parse_weights(s: &str) -> Result<Vec<usize>, Error> {
    s.split(',')
        .map(|p| {
            p.trim()
                .parse::<usize>()
                .map_err(|_| Error::Argument(format!("bad weight `{p}`")))
        })
        .collect()
}

/// Parses pair lists like `1-2,2-3` or `1:2,2:3` (arrows, covers, intervals).
pub fn parse_pairs(s: &str) -> Result<Vec<(usize, usize)>, Error> {
    s.split(',')
        .map(|p| {
            let (a, b) = p
                .trim()
                .split_once(['-', ':'])
                .ok_or_else(|| Error::Argument(format!("bad pair `{p}` (use a-b)")))?;
            Ok((
                a.trim()
                    .parse()
                    .map_err(|_| Error::Argument(format!("bad vertex `{a}`")))?,
                b.trim()
                    .parse()
                    .map_err(|_| Error::Argument(format!("bad vertex `{b}`")))?,
            ))
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use coxlab_core::algebras::{cartan_matrix, CartanBasis};

    #[test]
    fn parses_the_spec_schemas() {
        let m = algebra_from_json(
            r#"{"kind":"monomial","vertices":5,"arrows":[[1,2],[2,3],[3,4],[4,5]],"relations":[[1,4],[2,5]]}"#,
        )
        .unwrap();
        assert_eq!(m.n_vertices(), 5);
        assert!(cartan_matrix(&m, CartanBasis::Projectives).is_ok());
        let p = algebra_from_json(r#"{"kind":"poset","vertices":3,"covers":[[1,2],[2,3]]}"#).unwrap();
        assert_eq!(p.n_vertices(), 3);
        let c = algebra_from_json(r#"{"kind":"canonical","weights":[2,3,7]}"#).unwrap();
        assert_eq!(c.n_vertices(), 11);
        let l = algebra_from_json(r#"{"kind":"ladder","variant":"B","n":12}"#).unwrap();
        assert_eq!(l.n_vertices(), 12);
    }

    #[test]
    fn interval_shorthand_expands_on_monomial_quivers() {
        let m = algebra_from_json(
            r#"{"kind":"monomial","vertices":4,"arrows":[[1,2],[2,3],[3,4]],"relations":[[1,4]]}"#,
        )
        .unwrap();
        match m {
            AlgebraSpec::Monomial { relations, .. } => {
                assert_eq!(relations, vec![vec![1, 2, 3, 4]]);
            }
            _ => panic!("expected monomial"),
        }
    }

    #[test]
    fn unknown_kind_is_invalid_algebra() {
        let err = algebra_from_json(r#"{"kind":"frobnicate"}"#).unwrap_err();
        assert!(format!("{err}").starts_with("InvalidAlgebraError"));
    }

    #[test]
    fn inline_parsers() {
        assert_eq!(parse_weights("2,3,7").unwrap(), vec![2, 3, 7]);
        assert_eq!(parse_pairs("1-4,2:5").unwrap(), vec![(1, 4), (2, 5)]);
        assert!(parse_pairs("nope").is_err());
    }
}
