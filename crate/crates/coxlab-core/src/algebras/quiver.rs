//! Finite quivers without oriented cycles.

use alloc::vec;
use alloc::vec::Vec;

use crate::Error;

/// A quiver on vertices `1..=n` with a list of arrows (parallel arrows allowed).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Quiver {
    n_vertices: usize,
    arrows: Vec<(usize, usize)>,
}

impl Quiver {
    /// Validates vertex labels and acyclicity.
    pub fn new(n_vertices: usize, arrows: Vec<(usize, usize)>) -> crate::Result<Quiver> {
        if n_vertices == 0 {
            return Err(Error::InvalidAlgebra("quiver needs at least one vertex".into()));
        }
        for &(s, t) in &arrows {
            if s == 0 || t == 0 || s > n_vertices || t > n_vertices {
                return Err(Error::InvalidAlgebra(alloc::format!(
                    "arrow ({s},{t}) out of range 1..={n_vertices}"
                )));
            }
            if s == t {
                return Err(Error::InvalidAlgebra(alloc::format!("loop at vertex {s}")));
            }
        }
        let q = Quiver { n_vertices, arrows };
        q.topological_order()?;
        Ok(q)
    }

    /// The linear quiver `1 → 2 → … → n`.
    pub fn linear(n: usize) -> Quiver {
        Quiver {
            n_vertices: n,
            arrows: (1..n).map(|i| (i, i + 1)).collect(),
        }
    }

    /// Star quiver in standard orientation: center 1, arms of `p_i − 1`
    /// vertices directed away from the center.
    pub fn star(weights: &[usize]) -> crate::Result<Quiver> {
        if weights.iter().any(|&p| p < 1) {
            return Err(Error::InvalidAlgebra("star weights must be >= 1".into()));
        }
        let mut arrows = Vec::new();
        let mut next = 2;
        for &p in weights {
            let mut prev = 1;
            for _ in 0..p.saturating_sub(1) {
                arrows.push((prev, next));
                prev = next;
                next += 1;
            }
        }
        Ok(Quiver {
            n_vertices: next - 1,
            arrows,
        })
    }

    /// Oriented cycle quiver of extended Dynkin type `Ã_{p,q}`: `p` arrows
    /// clockwise and `q` anticlockwise around a cycle on `p+q` vertices (no
    /// oriented cycle as long as both `p, q ≥ 1`).
    pub fn a_tilde(p: usize, q: usize) -> crate::Result<Quiver> {
        if p == 0 || q == 0 {
            return Err(Error::InvalidAlgebra(
                "A~(p,q) requires p, q >= 1 (no oriented cycles)".into(),
            ));
        }
        let n = p + q;
        // vertices 1..=n around the cycle; 1 is a source, p+1 is the sink
        let mut arrows = Vec::new();
        for i in 1..=p {
            arrows.push((i, i + 1));
        }
        // anticlockwise chain: 1 -> n -> n-1 -> ... -> p+1
        let mut prev = 1;
        for v in (p + 1..=n).rev() {
            arrows.push((prev, v));
            prev = v;
        }
        Quiver::new(n, arrows)
    }

    pub fn n_vertices(&self) -> usize {
        self.n_vertices
    }

    pub fn arrows(&self) -> &[(usize, usize)] {
        &self.arrows
    }

    /// Number of arrows `s → t` (parallel arrows counted).
    pub fn arrow_multiplicity(&self, s: usize, t: usize) -> usize {
        self.arrows.iter().filter(|&&(a, b)| a == s && b == t).count()
    }

    /// Kahn topological order; errors on oriented cycles.
    pub fn topological_order(&self) -> crate::Result<Vec<usize>> {
        let n = self.n_vertices;
        let mut indeg = vec![0usize; n + 1];
        for &(_, t) in &self.arrows {
            indeg[t] += 1;
        }
        let mut stack: Vec<usize> = (1..=n).filter(|&v| indeg[v] == 0).collect();
        let mut order = Vec::with_capacity(n);
        while let Some(v) = stack.pop() {
            order.push(v);
            for &(s, t) in &self.arrows {
                if s == v {
                    indeg[t] -= 1;
                    if indeg[t] == 0 {
                        stack.push(t);
                    }
                }
            }
        }
        if order.len() != n {
            return Err(Error::InvalidAlgebra("quiver has an oriented cycle".into()));
        }
        Ok(order)
    }

    /// Every vertex a sink or a source.
    pub fn is_bipartite_orientation(&self) -> bool {
        (1..=self.n_vertices).all(|v| {
            let out = self.arrows.iter().any(|&(s, _)| s == v);
            let inn = self.arrows.iter().any(|&(_, t)| t == v);
            !(out && inn)
        })
    }

    /// Full subquiver on the kept vertices (relabelled 1.. in kept order).
    pub fn restrict(&self, keep: &[usize]) -> Quiver {
        let mut map = vec![0usize; self.n_vertices + 1];
        for (new, &old) in keep.iter().enumerate() {
            map[old] = new + 1;
        }
        let arrows = self
            .arrows
            .iter()
            .filter(|&&(s, t)| map[s] != 0 && map[t] != 0)
            .map(|&(s, t)| (map[s], map[t]))
            .collect();
        Quiver {
            n_vertices: keep.len(),
            arrows,
        }
    }

    /// Deletes one vertex.
    pub fn delete_vertex(&self, v: usize) -> Quiver {
        let keep: Vec<usize> = (1..=self.n_vertices).filter(|&u| u != v).collect();
        self.restrict(&keep)
    }
}
