//! Free-tree canonical forms and exhaustive enumeration of unlabeled trees.

use std::collections::BTreeMap;

use super::Graph;
use crate::error::{Error, Result};

/// Largest order [`enumerate_trees`] accepts by default.
pub const DEFAULT_TREE_CAP: usize = 14;

/// Center vertices (one or two) of a tree, by repeated leaf stripping.
pub fn tree_centers(t: &Graph) -> Vec<usize> {
    let n = t.vertex_count();
    if n <= 2 {
        return (0..n).collect();
    }
    let mut degree: Vec<usize> = (0..n).map(|v| t.degree(v)).collect();
    let mut layer: Vec<usize> = (0..n).filter(|&v| degree[v] == 1).collect();
    let mut remaining = n;
    while remaining > 2 {
        remaining -= layer.len();
        let mut next = Vec::new();
        for &u in &layer {
            for &w in t.neighbors(u) {
                if degree[w] > 1 {
                    degree[w] -= 1;
                    if degree[w] == 1 {
                        next.push(w);
                    }
                }
            }
        }
        layer = next;
    }
    layer.sort_unstable();
    layer
}

/// AHU code of `t` rooted at `root`, together with the children of every
/// vertex ordered by their codes.
fn rooted_code(t: &Graph, root: usize) -> (Vec<u8>, Vec<Vec<usize>>) {
    let n = t.vertex_count();
    let mut parent = vec![usize::MAX; n];
    let mut order = vec![root];
    parent[root] = root;
    let mut i = 0;
    while i < order.len() {
        let u = order[i];
        for &w in t.neighbors(u) {
            if parent[w] == usize::MAX {
                parent[w] = u;
                order.push(w);
            }
        }
        i += 1;
    }
    let mut codes: Vec<Vec<u8>> = vec![Vec::new(); n];
    let mut children: Vec<Vec<usize>> = vec![Vec::new(); n];
    for &u in order.iter().rev() {
        let mut kids: Vec<usize> = t
            .neighbors(u)
            .iter()
            .copied()
            .filter(|&w| parent[w] == u && w != root)
            .collect();
        kids.sort_by(|&a, &b| codes[a].cmp(&codes[b]));
        let mut code = vec![b'('];
        for &k in &kids {
            code.extend_from_slice(&codes[k]);
        }
        code.push(b')');
        codes[u] = code;
        children[u] = kids;
    }
    (std::mem::take(&mut codes[root]), children)
}

/// Canonical form of a free tree: equal iff the trees are isomorphic.
pub fn canonical_code(t: &Graph) -> Vec<u8> {
    canonical_root(t).0
}

fn canonical_root(t: &Graph) -> (Vec<u8>, usize, Vec<Vec<usize>>) {
    debug_assert!(t.is_tree(), "canonical_code expects a tree");
    tree_centers(t)
        .into_iter()
        .map(|c| {
            let (code, children) = rooted_code(t, c);
            (code, c, children)
        })
        .min_by(|a, b| a.0.cmp(&b.0))
        .expect("a tree has a center")
}

/// Relabels a tree so that isomorphic trees become identical graphs.
///
/// Vertices are numbered in preorder of the canonically rooted tree with
/// children visited in code order.
pub fn canonical_tree(t: &Graph) -> Graph {
    let (_, root, children) = canonical_root(t);
    let mut perm = vec![0; t.vertex_count()];
    let mut next = 0;
    let mut stack = vec![root];
    while let Some(u) = stack.pop() {
        perm[u] = next;
        next += 1;
        stack.extend(children[u].iter().rev());
    }
    t.relabel(&perm)
}

/// Decodes a Prüfer sequence into the labeled tree on `seq.len() + 2` vertices.
pub fn from_prufer(seq: &[usize]) -> Graph {
    let n = seq.len() + 2;
    let mut degree = vec![1usize; n];
    for &s in seq {
        degree[s] += 1;
    }
    let mut g = Graph::empty(n);
    let mut leaves: std::collections::BinaryHeap<std::cmp::Reverse<usize>> = (0..n)
        .filter(|&v| degree[v] == 1)
        .map(std::cmp::Reverse)
        .collect();
    for &s in seq {
        let std::cmp::Reverse(leaf) = leaves.pop().expect("Prüfer decoding always has a leaf");
        g.add_edge(leaf, s).expect("Prüfer edges are simple");
        degree[s] -= 1;
        if degree[s] == 1 {
            leaves.push(std::cmp::Reverse(s));
        }
    }
    let (std::cmp::Reverse(a), std::cmp::Reverse(b)) =
        (leaves.pop().unwrap(), leaves.pop().unwrap());
    g.add_edge(a, b).expect("last Prüfer edge is simple");
    g
}

/// Uniformly random labeled tree on `n` vertices.
pub fn random_tree<R: rand::Rng + ?Sized>(n: usize, rng: &mut R) -> Graph {
    match n {
        0 => Graph::empty(0),
        1 => Graph::empty(1),
        2 => Graph::path(2),
        _ => {
            let seq: Vec<usize> = (0..n - 2).map(|_| rng.gen_range(0..n)).collect();
            from_prufer(&seq)
        }
    }
}

/// One canonical representative per isomorphism class of trees on `n`
/// vertices, sorted by canonical code.
///
/// Every tree on `n ≥ 2` vertices is a tree on `n - 1` vertices plus a leaf,
/// so classes are generated level by level and deduplicated by code.
pub fn enumerate_trees(n: usize) -> Result<Vec<Graph>> {
    enumerate_trees_capped(n, DEFAULT_TREE_CAP)
}

pub fn enumerate_trees_capped(n: usize, cap: usize) -> Result<Vec<Graph>> {
    if n == 0 {
        return Err(Error::invalid("trees need at least one vertex"));
    }
    if n > cap {
        return Err(Error::cap("tree enumeration", n, cap));
    }
    let mut level: BTreeMap<Vec<u8>, Graph> = BTreeMap::new();
    level.insert(canonical_code(&Graph::empty(1)), Graph::empty(1));
    for _ in 1..n {
        let mut next = BTreeMap::new();
        for t in level.values() {
            for v in 0..t.vertex_count() {
                let mut grown = t.clone();
                let leaf = grown.add_vertex();
                grown.add_edge(v, leaf).unwrap();
                next.entry(canonical_code(&grown))
                    .or_insert_with(|| canonical_tree(&grown));
            }
        }
        level = next;
    }
    Ok(level.into_values().collect())
}

/// All trees with `1..=max_n` vertices, grouped by order.
pub fn enumerate_trees_upto(max_n: usize) -> Result<Vec<Graph>> {
    let mut out = Vec::new();
    for n in 1..=max_n {
        out.extend(enumerate_trees(n)?);
    }
    Ok(out)
}
