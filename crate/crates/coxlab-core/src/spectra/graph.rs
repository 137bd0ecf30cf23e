//! Undirected graphs and characteristic polynomials of adjacency matrices.

use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;

use crate::algebras::Quiver;
use crate::exactmath::{IntMatrix, IntPoly};
use crate::Error;

/// Undirected graph on `1..=n` without loops; parallel edges are allowed and
/// enter the adjacency matrix as multiplicities.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct Graph {
    n: usize,
    edges: Vec<(usize, usize)>,
}

impl Graph {
    pub fn new(n: usize, edges: Vec<(usize, usize)>) -> crate::Result<Graph> {
        let mut norm = Vec::with_capacity(edges.len());
        for (a, b) in edges {
            if a == 0 || b == 0 || a > n || b > n {
                return Err(Error::Argument(alloc::format!(
                    "edge ({a},{b}) out of range 1..={n}"
                )));
            }
            if a == b {
                return Err(Error::Argument(alloc::format!("loop at vertex {a}")));
            }
            norm.push((a.min(b), a.max(b)));
        }
        norm.sort_unstable();
        Ok(Graph { n, edges: norm })
    }

    /// Path graph `[n]`.
    pub fn path(n: usize) -> Graph {
        Graph {
            n,
            edges: (1..n).map(|i| (i, i + 1)).collect(),
        }
    }

    /// Star graph `[p_1, …, p_t]`: arms of `p_i − 1` vertices from center 1.
    pub fn star(weights: &[usize]) -> Graph {
        let mut edges = Vec::new();
        let mut next = 2;
        for &p in weights {
            let mut prev = 1;
            for _ in 0..p.saturating_sub(1) {
                edges.push((prev, next));
                prev = next;
                next += 1;
            }
        }
        let mut g = Graph {
            n: next - 1,
            edges,
        };
        g.edges.sort_unstable();
        g
    }

    /// Underlying graph of a quiver (orientation forgotten, parallel arrows kept).
    pub fn from_quiver(q: &Quiver) -> Graph {
        let mut edges: Vec<(usize, usize)> = q
            .arrows()
            .iter()
            .map(|&(s, t)| (s.min(t), s.max(t)))
            .collect();
        edges.sort_unstable();
        Graph {
            n: q.n_vertices(),
            edges,
        }
    }

    pub fn n_vertices(&self) -> usize {
        self.n
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn adjacency(&self) -> IntMatrix {
        let mut m = IntMatrix::zeros(self.n);
        for &(a, b) in &self.edges {
            *m.at_mut(a - 1, b - 1) += BigInt::from(1);
            *m.at_mut(b - 1, a - 1) += BigInt::from(1);
        }
        m
    }

    /// Degree counting edge multiplicities.
    pub fn degree(&self, v: usize) -> usize {
        self.edges
            .iter()
            .filter(|&&(a, b)| a == v || b == v)
            .count()
    }

    pub fn neighbors(&self, v: usize) -> Vec<usize> {
        let mut out: Vec<usize> = self
            .edges
            .iter()
            .filter_map(|&(a, b)| {
                if a == v {
                    Some(b)
                } else if b == v {
                    Some(a)
                } else {
                    None
                }
            })
            .collect();
        out.sort_unstable();
        out.dedup();
        out
    }

    /// Number of vertices of degree ≥ 3 (ramification points).
    pub fn ramification_count(&self) -> usize {
        (1..=self.n).filter(|&v| self.degree(v) >= 3).count()
    }

    pub fn delete_vertex(&self, v: usize) -> Graph {
        let edges = self
            .edges
            .iter()
            .filter(|&&(a, b)| a != v && b != v)
            .map(|&(a, b)| {
                (
                    if a > v { a - 1 } else { a },
                    if b > v { b - 1 } else { b },
                )
            })
            .collect();
        Graph {
            n: self.n - 1,
            edges,
        }
    }

    /// Simple, connected, `n − 1` edges.
    pub fn is_tree(&self) -> bool {
        if self.n == 0 || self.edges.len() != self.n - 1 {
            return false;
        }
        let mut simple = self.edges.clone();
        simple.dedup();
        if simple.len() != self.edges.len() {
            return false;
        }
        // connectivity
        let mut seen = vec![false; self.n + 1];
        let mut stack = vec![1usize];
        seen[1] = true;
        let mut count = 0;
        while let Some(v) = stack.pop() {
            count += 1;
            for w in self.neighbors(v) {
                if !seen[w] {
                    seen[w] = true;
                    stack.push(w);
                }
            }
        }
        count == self.n
    }

    /// Orients every edge from the even to the odd side of a 2-coloring,
    /// making every vertex a sink or a source. Errors when the graph has an
    /// odd cycle.
    pub fn bipartite_orientation(&self) -> crate::Result<Quiver> {
        let mut color = vec![u8::MAX; self.n + 1];
        for start in 1..=self.n {
            if color[start] != u8::MAX {
                continue;
            }
            color[start] = 0;
            let mut stack = vec![start];
            while let Some(v) = stack.pop() {
                for w in self.neighbors(v) {
                    if color[w] == u8::MAX {
                        color[w] = 1 - color[v];
                        stack.push(w);
                    } else if color[w] == color[v] {
                        return Err(Error::Argument("graph is not bipartite".into()));
                    }
                }
            }
        }
        let arrows = self
            .edges
            .iter()
            .map(|&(a, b)| if color[a] == 0 { (a, b) } else { (b, a) })
            .collect();
        Quiver::new(self.n, arrows)
    }
}

/// Characteristic polynomial of the adjacency matrix.
pub fn graph_char_poly(g: &Graph) -> IntPoly {
    g.adjacency().char_poly()
}

/// Checks the pendant-vertex recurrence `φ_Δ = x·φ_{Δ∖a} − φ_{Δ∖{a,b}}` for a
/// vertex `a` with unique neighbor `b`; errors unless `deg(a) = 1`.
pub fn deletion_recurrence(g: &Graph, a: usize) -> crate::Result<bool> {
    if g.degree(a) != 1 {
        return Err(Error::Argument(alloc::format!(
            "vertex {a} has degree {}, need a pendant vertex",
            g.degree(a)
        )));
    }
    let b = g.neighbors(a)[0];
    let lhs = graph_char_poly(g);
    let da = g.delete_vertex(a);
    let b_in_da = if b > a { b - 1 } else { b };
    let dab = da.delete_vertex(b_in_da);
    let rhs = IntPoly::x()
        .mul(&graph_char_poly(&da))
        .sub(&graph_char_poly(&dab));
    Ok(lhs == rhs)
}

/// Checks the derivative identity `φ′_Δ = Σ_i φ_{Δ∖i}`.
pub fn derivative_identity(g: &Graph) -> bool {
    let lhs = graph_char_poly(g).derivative();
    let mut rhs = IntPoly::zero();
    for v in 1..=g.n_vertices() {
        rhs = rhs.add(&graph_char_poly(&g.delete_vertex(v)));
    }
    lhs == rhs
}

/// Identifies `v1` and `v2`; the glued vertex keeps `v1`'s label.
pub fn glue_graphs(g1: &Graph, v1: usize, g2: &Graph, v2: usize) -> crate::Result<Graph> {
    if v1 == 0 || v1 > g1.n_vertices() || v2 == 0 || v2 > g2.n_vertices() {
        return Err(Error::Argument("gluing vertex out of range".into()));
    }
    let n = g1.n_vertices() + g2.n_vertices() - 1;
    let mut edges = g1.edges.clone();
    // relabel g2: v2 -> v1, others -> g1.n + position among the rest
    let map = |v: usize| -> usize {
        use core::cmp::Ordering::*;
        match v.cmp(&v2) {
            Equal => v1,
            Less => g1.n_vertices() + v,
            Greater => g1.n_vertices() + v - 1,
        }
    };
    for &(a, b) in &g2.edges {
        let (x, y) = (map(a), map(b));
        edges.push((x.min(y), x.max(y)));
    }
    Graph::new(n, edges)
}

/// Coalescence polynomial `φ₁·φ_{Δ₂∖v₂} + φ_{Δ₁∖v₁}·φ₂ − x·φ_{Δ₁∖v₁}·φ_{Δ₂∖v₂}`,
/// equal to the characteristic polynomial of the glued graph.
pub fn coalescence_poly(g1: &Graph, v1: usize, g2: &Graph, v2: usize) -> crate::Result<IntPoly> {
    if v1 == 0 || v1 > g1.n_vertices() || v2 == 0 || v2 > g2.n_vertices() {
        return Err(Error::Argument("coalescence vertex out of range".into()));
    }
    let p1 = graph_char_poly(g1);
    let p2 = graph_char_poly(g2);
    let d1 = graph_char_poly(&g1.delete_vertex(v1));
    let d2 = graph_char_poly(&g2.delete_vertex(v2));
    Ok(p1.mul(&d2).add(&d1.mul(&p2)).sub(&IntPoly::x().mul(&d1).mul(&d2)))
}
