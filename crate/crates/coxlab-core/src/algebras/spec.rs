//! Supported algebra presentations.

use alloc::vec::Vec;

use super::poset::Poset;
use super::quiver::Quiver;
use crate::Error;

/// Basis used for the Cartan matrix.
///
/// The two bases give conjugate matrices with the same Coxeter polynomial;
/// the simples-basis matrix is exposed as the inverse of the
/// projectives-basis matrix.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CartanBasis {
    Projectives,
    Simples,
}

/// The three ladder shapes with commutativity (and, for `D`, one zero) relations.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LadderVariant {
    B,
    C,
    D,
}

/// A presentation of a finite dimensional algebra whose Cartan matrix is
/// combinatorially computable.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum AlgebraSpec {
    /// Path algebra of an acyclic quiver.
    Path(Quiver),
    /// Monomial algebra: acyclic quiver modulo zero relations given as
    /// vertex paths of length ≥ 2 arrows.
    Monomial {
        quiver: Quiver,
        relations: Vec<Vec<usize>>,
    },
    /// Incidence algebra of a finite poset (fully commutative quiver).
    Poset(Poset),
    /// Linear quiver `1 → … → n` with zero relations on intervals `[i, j]`,
    /// `j − i ≥ 2` arrows each, forming an inclusion antichain.
    LinearWithRelations {
        n: usize,
        relations: Vec<(usize, usize)>,
    },
    /// Hereditary star `[p_1, …, p_t]` in standard orientation.
    Star { weights: Vec<usize> },
    /// Canonical algebra of weight type `(p_1, …, p_t)` (parameters never
    /// affect the Cartan matrix and are not stored).
    Canonical { weights: Vec<usize> },
    /// One-point extension of a canonical algebra by the sink projective.
    ExtendedCanonical { weights: Vec<usize> },
    /// Supercanonical algebra with arm posets.
    Supercanonical { arms: Vec<Poset> },
    /// Ladder algebra of `n` vertices.
    Ladder { variant: LadderVariant, n: usize },
}

impl AlgebraSpec {
    pub fn linear_x3(n: usize) -> AlgebraSpec {
        // all zero relations x^3 = 0: intervals [i, i+3]
        AlgebraSpec::LinearWithRelations {
            n,
            relations: (1..n.saturating_sub(2)).map(|i| (i, i + 3)).collect(),
        }
    }

    /// Number of vertices of the bound quiver.
    pub fn n_vertices(&self) -> usize {
        match self {
            AlgebraSpec::Path(q) => q.n_vertices(),
            AlgebraSpec::Monomial { quiver, .. } => quiver.n_vertices(),
            AlgebraSpec::Poset(p) => p.len(),
            AlgebraSpec::LinearWithRelations { n, .. } => *n,
            AlgebraSpec::Star { weights } => {
                1 + weights.iter().map(|&p| p.saturating_sub(1)).sum::<usize>()
            }
            AlgebraSpec::Canonical { weights } => {
                2 + weights.iter().map(|&p| p.saturating_sub(1)).sum::<usize>()
            }
            AlgebraSpec::ExtendedCanonical { weights } => {
                3 + weights.iter().map(|&p| p.saturating_sub(1)).sum::<usize>()
            }
            AlgebraSpec::Supercanonical { arms } => {
                2 + arms.iter().map(|s| s.len()).sum::<usize>()
            }
            AlgebraSpec::Ladder { n, .. } => *n,
        }
    }

    /// Validates the presentation-specific invariants.
    pub fn validate(&self) -> crate::Result<()> {
        match self {
            AlgebraSpec::Path(q) => {
                q.topological_order()?;
            }
            AlgebraSpec::Monomial { quiver, relations } => {
                quiver.topological_order()?;
                for r in relations {
                    if r.len() < 3 {
                        return Err(Error::InvalidAlgebra(
                            "monomial relation must span at least 2 arrows".into(),
                        ));
                    }
                    for w in r.windows(2) {
                        match quiver.arrow_multiplicity(w[0], w[1]) {
                            1 => {}
                            0 => {
                                return Err(Error::InvalidAlgebra(alloc::format!(
                                    "relation step {}->{} is not an arrow",
                                    w[0], w[1]
                                )))
                            }
                            _ => {
                                return Err(Error::InvalidAlgebra(alloc::format!(
                                    "relation step {}->{} is ambiguous (parallel arrows)",
                                    w[0], w[1]
                                )))
                            }
                        }
                    }
                }
                for (i, a) in relations.iter().enumerate() {
                    for (j, b) in relations.iter().enumerate() {
                        if i != j && is_contiguous_subseq(a, b) {
                            return Err(Error::InvalidAlgebra(
                                "redundant relation: one relation is a subpath of another".into(),
                            ));
                        }
                    }
                }
            }
            AlgebraSpec::Poset(p) => {
                p.leq_matrix()?;
            }
            AlgebraSpec::LinearWithRelations { n, relations } => {
                for &(a, b) in relations {
                    if a == 0 || b > *n || b < a + 2 {
                        return Err(Error::InvalidAlgebra(alloc::format!(
                            "interval [{a},{b}] invalid on the linear quiver with {n} vertices"
                        )));
                    }
                }
                for (i, &(a, b)) in relations.iter().enumerate() {
                    for (j, &(c, d)) in relations.iter().enumerate() {
                        if i != j && c >= a && d <= b {
                            return Err(Error::InvalidAlgebra(
                                "redundant relation: intervals must form an antichain".into(),
                            ));
                        }
                    }
                }
            }
            AlgebraSpec::Star { weights } => {
                if weights.iter().any(|&p| p < 1) {
                    return Err(Error::InvalidAlgebra("star weights must be >= 1".into()));
                }
            }
            AlgebraSpec::Canonical { weights } | AlgebraSpec::ExtendedCanonical { weights } => {
                if weights.iter().any(|&p| p < 1) {
                    return Err(Error::InvalidAlgebra("weights must be >= 1".into()));
                }
            }
            AlgebraSpec::Supercanonical { arms } => {
                if arms.len() < 2 {
                    return Err(Error::InvalidAlgebra(
                        "supercanonical algebra needs at least 2 arm posets".into(),
                    ));
                }
                for p in arms {
                    p.leq_matrix()?;
                }
            }
            AlgebraSpec::Ladder { variant, n } => match variant {
                LadderVariant::B => {
                    if *n == 0 || *n % 2 != 0 {
                        return Err(Error::InvalidAlgebra(
                            "ladder B_n needs an even number of vertices".into(),
                        ));
                    }
                }
                LadderVariant::C | LadderVariant::D => {
                    if *n % 2 != 1 {
                        return Err(Error::InvalidAlgebra(
                            "ladder C_n/D_n needs an odd number of vertices".into(),
                        ));
                    }
                    if matches!(variant, LadderVariant::D) && *n < 3 {
                        return Err(Error::InvalidAlgebra("ladder D_n needs n >= 3".into()));
                    }
                }
            },
        }
        Ok(())
    }
}

pub(super) fn is_contiguous_subseq(sub: &[usize], of: &[usize]) -> bool {
    sub.len() <= of.len() && of.windows(sub.len()).any(|w| w == sub)
}
