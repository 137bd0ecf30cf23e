//! Finite posets given by cover relations.

use alloc::vec;
use alloc::vec::Vec;

use crate::Error;

/// Poset on elements `1..=n`, stored by its cover (Hasse) arrows `a < b`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct Poset {
    n: usize,
    covers: Vec<(usize, usize)>,
}

impl Poset {
    pub fn new(n: usize, covers: Vec<(usize, usize)>) -> crate::Result<Poset> {
        if n == 0 {
            return Err(Error::InvalidAlgebra("poset needs at least one element".into()));
        }
        for &(a, b) in &covers {
            if a == 0 || b == 0 || a > n || b > n || a == b {
                return Err(Error::InvalidAlgebra(alloc::format!(
                    "bad cover ({a},{b}) on 1..={n}"
                )));
            }
        }
        let p = Poset { n, covers };
        // acyclicity comes with the closure computation
        p.leq_matrix()?;
        Ok(p)
    }

    /// The chain `1 < 2 < … < n`.
    pub fn chain(n: usize) -> Poset {
        Poset {
            n,
            covers: (1..n).map(|i| (i, i + 1)).collect(),
        }
    }

    /// The restricted-type arm poset: a chain of `p − 1` elements with one
    /// extra maximal element covering position `p − s`.
    pub fn restricted_arm(p: usize, s: usize) -> crate::Result<Poset> {
        if p < 2 || s == 0 || s >= p {
            return Err(Error::InvalidAlgebra(
                "restricted arm needs p >= 2 and 1 <= s < p".into(),
            ));
        }
        let mut covers: Vec<(usize, usize)> = (1..p - 1).map(|i| (i, i + 1)).collect();
        covers.push((p - s, p));
        Poset::new(p, covers)
    }

    /// The n-crown on `2n` elements: sources `1..=n`, sinks `n+1..=2n`,
    /// source `i` below sinks `n+i` and `n+1+(i mod n)`.
    pub fn crown(n: usize) -> crate::Result<Poset> {
        if n < 2 {
            return Err(Error::InvalidAlgebra("crown needs n >= 2".into()));
        }
        let mut covers = Vec::new();
        for i in 1..=n {
            covers.push((i, n + i));
            covers.push((i, n + 1 + (i % n)));
        }
        Poset::new(2 * n, covers)
    }

    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    pub fn covers(&self) -> &[(usize, usize)] {
        &self.covers
    }

    /// Reflexive-transitive closure as a 0/1 matrix (`leq[a][b]` ⟺ `a ≤ b`),
    /// 0-indexed. Errors when the covers contain a cycle.
    pub fn leq_matrix(&self) -> crate::Result<Vec<Vec<bool>>> {
        let n = self.n;
        let mut leq = vec![vec![false; n]; n];
        for (i, row) in leq.iter_mut().enumerate() {
            row[i] = true;
        }
        for &(a, b) in &self.covers {
            leq[a - 1][b - 1] = true;
        }
        // Warshall
        for k in 0..n {
            for i in 0..n {
                if leq[i][k] {
                    for j in 0..n {
                        if leq[k][j] {
                            leq[i][j] = true;
                        }
                    }
                }
            }
        }
        for i in 0..n {
            for j in 0..n {
                if i != j && leq[i][j] && leq[j][i] {
                    return Err(Error::InvalidAlgebra(
                        "cover relations contain a cycle".into(),
                    ));
                }
            }
        }
        Ok(leq)
    }

    /// Minimal elements.
    pub fn minimal(&self) -> Vec<usize> {
        (1..=self.n)
            .filter(|&v| self.covers.iter().all(|&(_, b)| b != v))
            .collect()
    }

    /// Maximal elements.
    pub fn maximal(&self) -> Vec<usize> {
        (1..=self.n)
            .filter(|&v| self.covers.iter().all(|&(a, _)| a != v))
            .collect()
    }
}

/// All labelled posets on `n` elements (as cover lists of their closures'
/// Hasse diagrams). Used by exhaustive cross-check suites for small `n`.
pub fn all_posets(n: usize) -> Vec<Poset> {
    // enumerate all reflexive-transitive antisymmetric relations by DFS over
    // the strict pairs, then reduce each to covers
    let pairs: Vec<(usize, usize)> = (1..=n)
        .flat_map(|a| (1..=n).map(move |b| (a, b)))
        .filter(|&(a, b)| a != b)
        .collect();
    let mut out = Vec::new();
    let total = 1usize << pairs.len();
    'subset: for mask in 0..total {
        let mut rel = vec![vec![false; n]; n];
        for (k, &(a, b)) in pairs.iter().enumerate() {
            if mask >> k & 1 == 1 {
                rel[a - 1][b - 1] = true;
            }
        }
        // transitive and antisymmetric?
        for i in 0..n {
            for j in 0..n {
                if rel[i][j] && rel[j][i] {
                    continue 'subset;
                }
                if rel[i][j] {
                    for k in 0..n {
                        if rel[j][k] && !rel[i][k] {
                            continue 'subset;
                        }
                    }
                }
            }
        }
        // covers: remove implied pairs
        let mut covers = Vec::new();
        for i in 0..n {
            for j in 0..n {
                if rel[i][j] && !(0..n).any(|k| k != i && k != j && rel[i][k] && rel[k][j]) {
                    covers.push((i + 1, j + 1));
                }
            }
        }
        out.push(Poset { n, covers });
    }
    out
}
