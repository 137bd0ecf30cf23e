//! Exhaustive free-tree enumeration and isospectral mate search.
//!
//! Rooted trees are generated as canonical level sequences (the classic
//! successor algorithm), free trees are deduplicated through a center-rooted
//! canonical code, so no isomorphic duplicates survive.

use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use super::graph::{graph_char_poly, Graph};
use crate::Error;

/// All level sequences of rooted trees on `n` vertices (root level 1).
fn rooted_level_sequences(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![];
    }
    let mut seq: Vec<usize> = (1..=n).collect();
    let mut out = vec![seq.clone()];
    // successor: rightmost entry > 2, copy the block before it
    while let Some(p) = (0..n).rev().find(|&i| seq[i] > 2) {
        let q = (0..p).rev().find(|&i| seq[i] == seq[p] - 1).expect("parent level exists");
        for i in p..n {
            seq[i] = seq[i - (p - q)];
        }
        out.push(seq.clone());
    }
    out
}

fn edges_of_level_sequence(seq: &[usize]) -> Vec<(usize, usize)> {
    let mut edges = Vec::with_capacity(seq.len().saturating_sub(1));
    for i in 1..seq.len() {
        let parent = (0..i).rev().find(|&j| seq[j] == seq[i] - 1).expect("parent");
        edges.push((parent + 1, i + 1));
    }
    edges
}

fn ahu_code(g: &Graph, root: usize) -> String {
    fn rec(g: &Graph, v: usize, parent: usize) -> String {
        let mut kids: Vec<String> = g
            .neighbors(v)
            .into_iter()
            .filter(|&w| w != parent)
            .map(|w| rec(g, w, v))
            .collect();
        kids.sort();
        let mut s = String::from("(");
        for k in kids {
            s.push_str(&k);
        }
        s.push(')');
        s
    }
    rec(g, root, 0)
}

fn centers(g: &Graph) -> Vec<usize> {
    let n = g.n_vertices();
    if n <= 2 {
        return (1..=n).collect();
    }
    let mut degree: Vec<usize> = (0..=n).map(|v| if v == 0 { 0 } else { g.degree(v) }).collect();
    let mut removed = vec![false; n + 1];
    let mut layer: Vec<usize> = (1..=n).filter(|&v| degree[v] <= 1).collect();
    let mut remaining = n;
    while remaining > 2 {
        let mut next = Vec::new();
        for &v in &layer {
            removed[v] = true;
        }
        remaining -= layer.len();
        for &v in &layer {
            for w in g.neighbors(v) {
                if !removed[w] {
                    degree[w] -= 1;
                    if degree[w] == 1 {
                        next.push(w);
                    }
                }
            }
        }
        layer = next;
    }
    (1..=n).filter(|&v| !removed[v]).collect()
}

/// Canonical code of a free tree: the minimum center-rooted AHU encoding.
pub fn canonical_tree_code(g: &Graph) -> crate::Result<String> {
    if !g.is_tree() {
        return Err(Error::Argument("canonical code requires a tree".into()));
    }
    Ok(centers(g)
        .into_iter()
        .map(|c| ahu_code(g, c))
        .min()
        .expect("tree has a center"))
}

/// All non-isomorphic free trees on `n` vertices, sorted by canonical code.
pub fn free_trees(n: usize) -> Vec<Graph> {
    if n == 0 {
        return vec![];
    }
    if n == 1 {
        return vec![Graph::path(1)];
    }
    let mut seen: BTreeMap<String, Graph> = BTreeMap::new();
    for seq in rooted_level_sequences(n) {
        let g = Graph::new(n, edges_of_level_sequence(&seq)).expect("valid tree edges");
        let code = canonical_tree_code(&g).expect("tree");
        seen.entry(code).or_insert(g);
    }
    seen.into_values().collect()
}

/// All trees on the same vertex count that are isospectral to `g` without
/// being isomorphic to it. The search bound keeps the enumeration exhaustive.
pub fn find_isospectral_mate(g: &Graph, max_vertices: usize) -> crate::Result<Vec<Graph>> {
    if !g.is_tree() {
        return Err(Error::Argument("isospectral search requires a tree".into()));
    }
    let n = g.n_vertices();
    if n > max_vertices || n > 12 {
        return Err(Error::Argument(alloc::format!(
            "tree enumeration bounded at 12 vertices, got {n}"
        )));
    }
    let target = graph_char_poly(g);
    let own = canonical_tree_code(g)?;
    Ok(free_trees(n)
        .into_iter()
        .filter(|t| graph_char_poly(t) == target)
        .filter(|t| canonical_tree_code(t).expect("tree") != own)
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn free_tree_counts() {
        // numbers of free trees: 1, 1, 1, 2, 3, 6, 11, 23, 47, 106
        let expect = [1, 1, 1, 2, 3, 6, 11, 23, 47, 106];
        for (i, &e) in expect.iter().enumerate() {
            assert_eq!(free_trees(i + 1).len(), e, "n={}", i + 1);
        }
    }

    #[test]
    fn rooted_tree_counts() {
        // numbers of rooted trees: 1, 1, 2, 4, 9, 20, 48
        let expect = [1, 1, 2, 4, 9, 20, 48];
        for (i, &e) in expect.iter().enumerate() {
            assert_eq!(rooted_level_sequences(i + 1).len(), e, "n={}", i + 1);
        }
    }

    #[test]
    fn canonical_code_identifies_isomorphic_paths() {
        // [3] and [2,2] are the same tree
        let a = Graph::path(3);
        let b = Graph::star(&[2, 2]);
        assert_eq!(
            canonical_tree_code(&a).unwrap(),
            canonical_tree_code(&b).unwrap()
        );
    }

    #[test]
    fn path4_has_no_mates() {
        assert!(find_isospectral_mate(&Graph::path(4), 12).unwrap().is_empty());
    }

    #[test]
    fn smallest_cospectral_trees() {
        // double star vs spider on 8 vertices
        let double_star = Graph::new(
            8,
            vec![(1, 2), (1, 3), (1, 4), (1, 5), (5, 6), (5, 7), (5, 8)],
        )
        .unwrap();
        let spider = Graph::new(
            8,
            vec![(1, 2), (1, 3), (1, 4), (1, 5), (1, 6), (6, 7), (7, 8)],
        )
        .unwrap();
        assert_eq!(graph_char_poly(&double_star), graph_char_poly(&spider));
        let mates = find_isospectral_mate(&double_star, 12).unwrap();
        assert_eq!(mates.len(), 1);
        assert_eq!(
            canonical_tree_code(&mates[0]).unwrap(),
            canonical_tree_code(&spider).unwrap()
        );
        // and no smaller cospectral pair exists
        for n in 1..8 {
            for t in free_trees(n) {
                assert!(find_isospectral_mate(&t, 12).unwrap().is_empty(), "n={n}");
            }
        }
    }

    #[test]
    fn star_2235_and_comb() {
        let t = Graph::star(&[2, 2, 3, 5]);
        // comb [[1,2,2,2,1,1]]: base 1..6, pendants at 2,3,4
        let comb = Graph::new(
            9,
            vec![(1, 2), (2, 3), (3, 4), (4, 5), (5, 6), (2, 7), (3, 8), (4, 9)],
        )
        .unwrap();
        assert_eq!(graph_char_poly(&t), graph_char_poly(&comb));
        let mates = find_isospectral_mate(&t, 12).unwrap();
        assert!(mates
            .iter()
            .any(|m| canonical_tree_code(m).unwrap() == canonical_tree_code(&comb).unwrap()));
    }
}
