//! Simple undirected graphs and the graph-level primitives the games need.

mod format;
mod matching;
mod residual;
pub mod trees;

use std::collections::VecDeque;
use std::fmt;

use crate::error::{Error, Result};

pub use format::{parse_edge_list, parse_graph6, to_edge_list, to_graph6};
pub use matching::{forest_perfect_matching, Matching};
pub use residual::{
    residual_graph, staller_wins, support_classification, Game, Residual, SupportTag,
};

/// Simple undirected graph on the vertices `0..vertex_count`.
///
/// Neighbor lists are kept sorted, so two graphs compare equal exactly when
/// they have the same labelled edge set.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Graph {
    adj: Vec<Vec<usize>>,
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "Graph(n={}, edges={:?})",
            self.vertex_count(),
            self.edges().collect::<Vec<_>>()
        )
    }
}

impl Graph {
    pub fn empty(n: usize) -> Self {
        Graph {
            adj: vec![Vec::new(); n],
        }
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Graph::empty(n);
        for &(u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    /// Adds `uv`, rejecting loops, duplicates and out-of-range ids.
    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<()> {
        let n = self.vertex_count();
        if u >= n || v >= n {
            return Err(Error::invalid(format!(
                "edge {u}-{v} out of range for {n} vertices"
            )));
        }
        if u == v {
            return Err(Error::invalid(format!("self-loop at {u}")));
        }
        match self.adj[u].binary_search(&v) {
            Ok(_) => Err(Error::invalid(format!("duplicate edge {u}-{v}"))),
            Err(pos) => {
                self.adj[u].insert(pos, v);
                let pos = self.adj[v].binary_search(&u).unwrap_err();
                self.adj[v].insert(pos, u);
                Ok(())
            }
        }
    }

    /// Appends a fresh isolated vertex and returns its id.
    pub fn add_vertex(&mut self) -> usize {
        self.adj.push(Vec::new());
        self.adj.len() - 1
    }

    pub fn vertex_count(&self) -> usize {
        self.adj.len()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(Vec::len).sum::<usize>() / 2
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.adj.len() && self.adj[u].binary_search(&v).is_ok()
    }

    /// Edges as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(u, ns)| ns.iter().filter(move |&&v| u < v).map(move |&v| (u, v)))
    }

    pub fn is_leaf(&self, v: usize) -> bool {
        self.degree(v) == 1
    }

    /// Closed neighborhood `N[v]` as a bitmask. Panics above 64 vertices.
    pub fn closed_neighborhood_mask(&self, v: usize) -> u64 {
        assert!(
            self.vertex_count() <= 64,
            "bitmask view needs at most 64 vertices"
        );
        self.adj[v].iter().fold(1u64 << v, |m, &u| m | (1u64 << u))
    }

    /// Connected components, each sorted, ordered by smallest vertex.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let n = self.vertex_count();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for s in 0..n {
            if seen[s] {
                continue;
            }
            seen[s] = true;
            let mut comp = vec![s];
            let mut queue = VecDeque::from([s]);
            while let Some(u) = queue.pop_front() {
                for &w in &self.adj[u] {
                    if !seen[w] {
                        seen[w] = true;
                        comp.push(w);
                        queue.push_back(w);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.vertex_count() <= 1 || self.components().len() == 1
    }

    pub fn is_forest(&self) -> bool {
        self.edge_count() + self.components().len() == self.vertex_count()
    }

    /// Trees are connected and acyclic; the empty graph is not a tree.
    pub fn is_tree(&self) -> bool {
        self.vertex_count() >= 1
            && self.edge_count() + 1 == self.vertex_count()
            && self.is_connected()
    }

    /// Subgraph induced by `keep`; vertex `i` of the result is `keep[i]` here.
    pub fn induced(&self, keep: &[usize]) -> Graph {
        let mut index = vec![usize::MAX; self.vertex_count()];
        for (i, &v) in keep.iter().enumerate() {
            index[v] = i;
        }
        let adj = keep
            .iter()
            .map(|&v| {
                let mut ns: Vec<usize> = self.adj[v]
                    .iter()
                    .filter_map(|&w| (index[w] != usize::MAX).then_some(index[w]))
                    .collect();
                ns.sort_unstable();
                ns
            })
            .collect();
        Graph { adj }
    }

    /// Removes `drop` and returns the remaining graph with the kept original ids.
    pub fn without(&self, drop: &[usize]) -> (Graph, Vec<usize>) {
        let keep: Vec<usize> = (0..self.vertex_count())
            .filter(|v| !drop.contains(v))
            .collect();
        (self.induced(&keep), keep)
    }

    /// Applies a vertex permutation: vertex `v` becomes `perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> Graph {
        let mut g = Graph::empty(self.vertex_count());
        for (u, v) in self.edges() {
            g.add_edge(perm[u], perm[v])
                .expect("permutation preserves simplicity");
        }
        g
    }

    /// Disjoint union; vertices of `other` are shifted by `self.vertex_count()`.
    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let shift = self.vertex_count();
        let mut g = self.clone();
        g.adj.extend(
            other
                .adj
                .iter()
                .map(|ns| ns.iter().map(|&v| v + shift).collect()),
        );
        g
    }

    /// Two-coloring of a forest by BFS parity; `None` if not bipartite.
    pub fn bipartition(&self) -> Option<Vec<bool>> {
        let n = self.vertex_count();
        let mut side: Vec<Option<bool>> = vec![None; n];
        for s in 0..n {
            if side[s].is_some() {
                continue;
            }
            side[s] = Some(false);
            let mut queue = VecDeque::from([s]);
            while let Some(u) = queue.pop_front() {
                let su = side[u].unwrap();
                for &w in &self.adj[u] {
                    match side[w] {
                        None => {
                            side[w] = Some(!su);
                            queue.push_back(w);
                        }
                        Some(sw) if sw == su => return None,
                        _ => {}
                    }
                }
            }
        }
        Some(side.into_iter().map(Option::unwrap).collect())
    }

    /// Vertex sequence of the unique path between `a` and `b` in a tree.
    pub fn tree_path(&self, a: usize, b: usize) -> Option<Vec<usize>> {
        let n = self.vertex_count();
        let mut parent = vec![usize::MAX; n];
        parent[a] = a;
        let mut queue = VecDeque::from([a]);
        while let Some(u) = queue.pop_front() {
            if u == b {
                break;
            }
            for &w in &self.adj[u] {
                if parent[w] == usize::MAX {
                    parent[w] = u;
                    queue.push_back(w);
                }
            }
        }
        if parent[b] == usize::MAX {
            return None;
        }
        let mut path = vec![b];
        let mut cur = b;
        while cur != a {
            cur = parent[cur];
            path.push(cur);
        }
        path.reverse();
        Some(path)
    }

    // Standard families. Vertex numbering is part of the contract since test
    // fixtures refer to concrete ids.

    /// `P_n` with edges `i -- i+1`.
    pub fn path(n: usize) -> Graph {
        let mut g = Graph::empty(n);
        for i in 1..n {
            g.add_edge(i - 1, i).unwrap();
        }
        g
    }

    /// `K_{1,m}` with center 0.
    pub fn star(m: usize) -> Graph {
        let mut g = Graph::empty(m + 1);
        for i in 1..=m {
            g.add_edge(0, i).unwrap();
        }
        g
    }

    /// `S(n_1, ..., n_l)`: center 0, then each branch in order, listed from
    /// the vertex next to the center outwards.
    pub fn subdivided_star(branches: &[usize]) -> Graph {
        let total = 1 + branches.iter().sum::<usize>();
        let mut g = Graph::empty(total);
        let mut next = 1;
        for &len in branches {
            let mut prev = 0;
            for _ in 0..len {
                g.add_edge(prev, next).unwrap();
                prev = next;
                next += 1;
            }
        }
        g
    }

    /// Caterpillar with spine `0..spine_len` and `leaves[i]` pendant vertices
    /// on spine vertex `i`, numbered after the spine in spine order.
    pub fn caterpillar(leaves: &[usize]) -> Graph {
        let spine = leaves.len();
        let total = spine + leaves.iter().sum::<usize>();
        let mut g = Graph::empty(total);
        for i in 1..spine {
            g.add_edge(i - 1, i).unwrap();
        }
        let mut next = spine;
        for (i, &k) in leaves.iter().enumerate() {
            for _ in 0..k {
                g.add_edge(i, next).unwrap();
                next += 1;
            }
        }
        g
    }

    /// The 13-vertex caterpillar used as the worked example for caterpillar
    /// values: spine `v_1..v_8` = `0..=7`, leaves `u_1`=8 on `v_1`,
    /// `u_3`=9 and `u_3'`=10 on `v_3`, `u_4`=11 on `v_4`, `u_8`=12 on `v_8`.
    pub fn example_caterpillar() -> Graph {
        Graph::caterpillar(&[1, 0, 2, 1, 0, 0, 0, 1])
    }
}
