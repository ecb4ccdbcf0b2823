//! Hypergraph game states as bitmask set systems.
//!
//! A vertex set is a `u64` bitmask, so a hypergraph has at most
//! [`MAX_VERTICES`] vertices; larger inputs are rejected, never truncated.
//! Maker (Staller) claiming a vertex is [`Hypergraph::shrink`], Breaker
//! (Dominator) claiming a vertex is [`Hypergraph::delete`].

use std::fmt;

use crate::error::{Error, Result};
use crate::graph::Graph;

pub type VertexSet = u64;

pub const MAX_VERTICES: usize = 64;

pub fn bit(v: usize) -> VertexSet {
    1u64 << v
}

/// Iterates the vertices of a set in increasing order.
pub fn members(set: VertexSet) -> impl Iterator<Item = usize> {
    let mut rest = set;
    std::iter::from_fn(move || {
        if rest == 0 {
            return None;
        }
        let v = rest.trailing_zeros() as usize;
        rest &= rest - 1;
        Some(v)
    })
}

pub fn set_of(vertices: impl IntoIterator<Item = usize>) -> VertexSet {
    vertices.into_iter().fold(0, |s, v| s | bit(v))
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Hypergraph {
    universe: VertexSet,
    edges: Vec<VertexSet>,
    maker_won: bool,
}

/// Memo key of a normalized hypergraph: equal for equal set systems,
/// independent of edge order, stable across runs. Not isomorphism-invariant.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct StateKey(pub(crate) Box<[u64]>);

impl StateKey {
    pub fn words(&self) -> &[u64] {
        &self.0
    }

    pub fn from_words(words: Vec<u64>) -> Self {
        StateKey(words.into_boxed_slice())
    }
}

impl Hypergraph {
    /// Hypergraph with the given edges in the given multiplicity.
    pub fn new(universe: VertexSet, edges: Vec<VertexSet>) -> Result<Self> {
        if let Some(e) = edges.iter().find(|&&e| e & !universe != 0) {
            return Err(Error::invalid(format!(
                "edge {} is not inside the universe",
                fmt_set(*e)
            )));
        }
        if edges.contains(&0) {
            return Err(Error::invalid(
                "empty edges are represented by the maker_won flag",
            ));
        }
        Ok(Hypergraph {
            universe,
            edges,
            maker_won: false,
        })
    }

    /// `H_G`: one edge `N_G[v]` per vertex, duplicates kept.
    pub fn closed_neighborhoods(g: &Graph) -> Result<Self> {
        let n = g.vertex_count();
        if n > MAX_VERTICES {
            return Err(Error::cap("hypergraph", n, MAX_VERTICES));
        }
        let universe = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
        let edges = (0..n).map(|v| g.closed_neighborhood_mask(v)).collect();
        Ok(Hypergraph {
            universe,
            edges,
            maker_won: false,
        })
    }

    pub fn universe(&self) -> VertexSet {
        self.universe
    }

    pub fn vertex_count(&self) -> usize {
        self.universe.count_ones() as usize
    }

    pub fn edges(&self) -> &[VertexSet] {
        &self.edges
    }

    /// Set once shrinking has emptied some edge: Maker owns a winning set.
    pub fn maker_won(&self) -> bool {
        self.maker_won
    }

    pub fn min_edge_size(&self) -> Option<u32> {
        self.edges.iter().map(|e| e.count_ones()).min()
    }

    /// `H - X`: drop the vertices of `X` and every edge meeting `X`.
    pub fn delete(&self, x: VertexSet) -> Result<Self> {
        self.check_subset(x)?;
        let edges: Vec<VertexSet> = self.edges.iter().copied().filter(|&e| e & x == 0).collect();
        Ok(Hypergraph {
            universe: self.universe & !x,
            edges,
            maker_won: self.maker_won,
        })
    }

    /// `H | X`: drop the vertices of `X` from the universe and from every edge.
    pub fn shrink(&self, x: VertexSet) -> Result<Self> {
        self.check_subset(x)?;
        let mut maker_won = self.maker_won;
        let mut edges = Vec::with_capacity(self.edges.len());
        for &e in &self.edges {
            let rest = e & !x;
            if rest == 0 {
                maker_won = true;
            } else {
                edges.push(rest);
            }
        }
        dedup_family(&mut edges);
        Ok(Hypergraph {
            universe: self.universe & !x,
            edges,
            maker_won,
        })
    }

    fn check_subset(&self, x: VertexSet) -> Result<()> {
        if x & !self.universe != 0 {
            Err(Error::invalid(format!(
                "{} is not a subset of the universe",
                fmt_set(x)
            )))
        } else {
            Ok(())
        }
    }

    /// Removes duplicate edges, edges that properly contain another edge, and
    /// vertices that lie in no edge. Both winning numbers are unchanged.
    pub fn normalize(&self) -> Self {
        let edges = minimal_edges(self.edges.clone());
        let universe = edges.iter().fold(0, |u, e| u | e);
        Hypergraph {
            universe,
            edges,
            maker_won: self.maker_won,
        }
    }

    pub fn is_normalized(&self) -> bool {
        *self == self.normalize()
    }

    /// Connected components under shared vertices, ordered by smallest vertex.
    pub fn components(&self) -> Vec<Hypergraph> {
        split_components(&self.edges)
            .into_iter()
            .map(|edges| Hypergraph {
                universe: edges.iter().fold(0, |u, e| u | e),
                edges,
                maker_won: false,
            })
            .collect()
    }

    pub fn canonical_key(&self) -> StateKey {
        let mut edges = self.edges.clone();
        edges.sort_unstable();
        edges.dedup();
        let mut words = Vec::with_capacity(edges.len() + 1);
        words.push(self.universe);
        words.extend(edges);
        StateKey(words.into_boxed_slice())
    }

    /// Number of edges containing `v`.
    pub fn edge_degree(&self, v: usize) -> usize {
        self.edges.iter().filter(|&&e| e & bit(v) != 0).count()
    }

    /// One edge per line as a sorted id list in braces, edges sorted; the
    /// empty edge `{}` is printed first when Maker has already won.
    pub fn to_debug_text(&self) -> String {
        let mut lines: Vec<(Vec<usize>, String)> = self
            .edges
            .iter()
            .map(|&e| (members(e).collect(), fmt_set(e)))
            .collect();
        lines.sort();
        let mut out = String::new();
        if self.maker_won {
            out.push_str("{}\n");
        }
        for (_, line) in lines {
            out.push_str(&line);
            out.push('\n');
        }
        out
    }

    /// Parses the debug text format; the universe is the union of the edges.
    pub fn from_debug_text(text: &str) -> Result<Self> {
        let mut edges = Vec::new();
        let mut maker_won = false;
        for (idx, raw) in text.lines().enumerate() {
            let line = raw.trim();
            if line.is_empty() {
                continue;
            }
            let inner = line
                .strip_prefix('{')
                .and_then(|l| l.strip_suffix('}'))
                .ok_or_else(|| Error::parse(idx + 1, "expected `{a,b,...}`"))?;
            let mut set = 0;
            for tok in inner.split(',').map(str::trim).filter(|t| !t.is_empty()) {
                let v: usize = tok
                    .parse()
                    .map_err(|_| Error::parse(idx + 1, format!("bad vertex {tok:?}")))?;
                if v >= MAX_VERTICES {
                    return Err(Error::parse(
                        idx + 1,
                        format!("vertex {v} above the 64-vertex cap"),
                    ));
                }
                set |= bit(v);
            }
            if set == 0 {
                maker_won = true;
            } else {
                edges.push(set);
            }
        }
        let universe = edges.iter().fold(0, |u, e| u | e);
        Ok(Hypergraph {
            universe,
            edges,
            maker_won,
        })
    }
}

impl fmt::Debug for Hypergraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Hypergraph(V={}, E=[", fmt_set(self.universe))?;
        for (i, &e) in self.edges.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            f.write_str(&fmt_set(e))?;
        }
        write!(f, "]{})", if self.maker_won { ", maker_won" } else { "" })
    }
}

pub fn fmt_set(set: VertexSet) -> String {
    let ids: Vec<String> = members(set).map(|v| v.to_string()).collect();
    format!("{{{}}}", ids.join(","))
}

/// Drops repeated edges, keeping first occurrences in place.
fn dedup_family(edges: &mut Vec<VertexSet>) {
    let mut seen = std::collections::HashSet::with_capacity(edges.len());
    edges.retain(|e| seen.insert(*e));
}

/// Inclusion-minimal members of a family, sorted ascending.
pub(crate) fn minimal_edges(mut edges: Vec<VertexSet>) -> Vec<VertexSet> {
    edges.sort_unstable_by_key(|e| (e.count_ones(), *e));
    edges.dedup();
    let mut kept: Vec<VertexSet> = Vec::with_capacity(edges.len());
    for e in edges {
        if !kept.iter().any(|&k| k & !e == 0) {
            kept.push(e);
        }
    }
    kept.sort_unstable();
    kept
}

/// Groups edges into connected components.
pub(crate) fn split_components(edges: &[VertexSet]) -> Vec<Vec<VertexSet>> {
    let mut rest: Vec<VertexSet> = edges.to_vec();
    let mut out = Vec::new();
    while let Some(first) = rest.first().copied() {
        let mut span = first;
        loop {
            let grown = rest
                .iter()
                .filter(|&&e| e & span != 0)
                .fold(span, |s, e| s | e);
            if grown == span {
                break;
            }
            span = grown;
        }
        let (inside, outside): (Vec<VertexSet>, Vec<VertexSet>) =
            rest.into_iter().partition(|&e| e & span != 0);
        out.push(inside);
        rest = outside;
    }
    out.sort_by_key(|c| c.iter().fold(0u64, |u, e| u | e).trailing_zeros());
    out
}
