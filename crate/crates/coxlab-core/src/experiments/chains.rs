//! Chain analysis: Coxeter polynomials and derived types of the truncations
//! of a linear-with-relations or ladder algebra, reproducing the two-row
//! tables of the accessible-chain method.

use alloc::string::String;
use alloc::vec::Vec;

use crate::algebras::{cartan_matrix, AlgebraSpec, CartanBasis, LadderVariant};
use crate::catalog::{classify_poly, factorization_string, DerivedType};
use crate::coxeter::coxeter_matrix;
use crate::exactmath::IntPoly;
use crate::Error;

/// How step `s` extends step `s − 1` (linear chains only).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ExtensionKind {
    /// No relation ends at `s`: extension by the projective at `s − 1`.
    Projective,
    /// The relation `[r, s]` ends at `s`: extension by the injective at `r + 1`.
    Injective { relation_start: usize },
}

#[derive(Clone, Debug)]
pub struct ChainStep {
    pub s: usize,
    pub poly: IntPoly,
    pub factorization: String,
    pub types: Vec<DerivedType>,
    pub extension: Option<ExtensionKind>,
}

#[derive(Clone, Debug)]
pub struct ChainReport {
    pub steps: Vec<ChainStep>,
}

impl ChainReport {
    pub fn last(&self) -> &ChainStep {
        self.steps.last().expect("chains are nonempty")
    }

    /// Joined type string of a step, e.g. `[2,3,6]=(2,3,5)`.
    pub fn type_string(step: &ChainStep) -> String {
        let mut s = String::new();
        for (i, t) in step.types.iter().enumerate() {
            if i > 0 {
                s.push('=');
            }
            s.push_str(&alloc::format!("{t}"));
        }
        s
    }
}

fn truncation(a: &AlgebraSpec, s: usize) -> crate::Result<AlgebraSpec> {
    match a {
        AlgebraSpec::LinearWithRelations { relations, .. } => {
            Ok(AlgebraSpec::LinearWithRelations {
                n: s,
                relations: relations.iter().copied().filter(|&(_, b)| b <= s).collect(),
            })
        }
        AlgebraSpec::Ladder { n, .. } => {
            if s == *n {
                Ok(a.clone())
            } else {
                // prefixes of the interleaved vertex order alternate B/C
                Ok(AlgebraSpec::Ladder {
                    variant: if s % 2 == 0 { LadderVariant::B } else { LadderVariant::C },
                    n: s,
                })
            }
        }
        _ => Err(Error::Argument(
            "chain analysis needs a linear-with-relations or ladder algebra".into(),
        )),
    }
}

/// Analyzes the truncation chain of `a`: Coxeter polynomial, factorization
/// string and catalog types of the restriction to the first `s` vertices,
/// for `s = 1..=n`.
pub fn analyze_chain(a: &AlgebraSpec) -> crate::Result<ChainReport> {
    let n = a.n_vertices();
    a.validate()?;
    let mut steps = Vec::with_capacity(n);
    for s in 1..=n {
        let trunc = truncation(a, s)?;
        let c = cartan_matrix(&trunc, CartanBasis::Projectives)?;
        let poly = coxeter_matrix(&c)?.char_poly();
        let extension = match a {
            AlgebraSpec::LinearWithRelations { relations, .. } => Some(
                relations
                    .iter()
                    .find(|&&(_, b)| b == s)
                    .map(|&(r, _)| ExtensionKind::Injective { relation_start: r })
                    .unwrap_or(ExtensionKind::Projective),
            ),
            _ => None,
        };
        steps.push(ChainStep {
            s,
            factorization: factorization_string(&poly),
            types: classify_poly(&poly),
            poly,
            extension,
        });
    }
    Ok(ChainReport { steps })
}
