use std::collections::BTreeSet;

use super::Graph;
use crate::error::{Error, Result};

/// A set of pairwise disjoint edges, each stored as `(min, max)`.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Matching {
    edges: BTreeSet<(usize, usize)>,
}

impl Matching {
    pub fn new() -> Self {
        Self::default()
    }

    /// Checks disjointness and that every pair is an edge of `host`.
    pub fn from_pairs(
        host: &Graph,
        pairs: impl IntoIterator<Item = (usize, usize)>,
    ) -> Result<Self> {
        let mut m = Matching::new();
        for (u, v) in pairs {
            if !host.has_edge(u, v) {
                return Err(Error::invalid(format!("{u}-{v} is not an edge")));
            }
            if m.partner(u).is_some() || m.partner(v).is_some() {
                return Err(Error::invalid(format!("{u}-{v} overlaps the matching")));
            }
            m.insert(u, v);
        }
        Ok(m)
    }

    pub(crate) fn insert(&mut self, u: usize, v: usize) {
        self.edges.insert((u.min(v), u.max(v)));
    }

    pub(crate) fn remove(&mut self, u: usize, v: usize) {
        self.edges.remove(&(u.min(v), u.max(v)));
    }

    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.edges.iter().copied()
    }

    pub fn partner(&self, v: usize) -> Option<usize> {
        self.edges.iter().find_map(|&(a, b)| {
            if a == v {
                Some(b)
            } else if b == v {
                Some(a)
            } else {
                None
            }
        })
    }

    pub fn covers(&self, v: usize) -> bool {
        self.partner(v).is_some()
    }

    /// `V(M)`.
    pub fn vertices(&self) -> BTreeSet<usize> {
        self.edges.iter().flat_map(|&(a, b)| [a, b]).collect()
    }

    pub fn is_perfect_for(&self, g: &Graph) -> bool {
        2 * self.len() == g.vertex_count() && self.edges().all(|(u, v)| g.has_edge(u, v))
    }
}

/// Perfect matching of a forest by leaf elimination: a leaf can only be
/// matched to its unique neighbor, so both are fixed and removed. An isolated
/// vertex left behind means no perfect matching exists.
pub fn forest_perfect_matching(f: &Graph) -> Result<Option<Matching>> {
    if !f.is_forest() {
        return Err(Error::NotAForest);
    }
    let n = f.vertex_count();
    let mut alive = vec![true; n];
    let mut degree: Vec<usize> = (0..n).map(|v| f.degree(v)).collect();
    let mut stack: Vec<usize> = (0..n).filter(|&v| degree[v] <= 1).rev().collect();
    let mut m = Matching::new();
    while let Some(u) = stack.pop() {
        if !alive[u] {
            continue;
        }
        let Some(w) = f.neighbors(u).iter().copied().find(|&w| alive[w]) else {
            return Ok(None);
        };
        m.insert(u, w);
        alive[u] = false;
        alive[w] = false;
        for &y in f.neighbors(w) {
            if alive[y] {
                degree[y] -= 1;
                if degree[y] <= 1 {
                    stack.push(y);
                }
            }
        }
    }
    debug_assert!(alive.iter().all(|a| !a));
    Ok(Some(m))
}
