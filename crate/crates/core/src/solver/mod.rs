//! Exact winning numbers by memoized game-tree search.
//!
//! Positions are normalized hypergraphs. With Maker to move,
//! `w_M^M(H) = 1 + min_v w_M^B(H | v)` (a move that empties an edge counts
//! as the winning move); with Breaker to move, `w_M^B(H) = max_v w_M^M(H - v)`.
//! Both values of a position live in one memo entry.
//!
//! The default search adds exact reductions on top of the plain recursion:
//! component decomposition, the min-edge-size lower bound, single-move
//! shortcuts for singleton edges, and twin-vertex symmetry. The paranoid
//! configuration switches all of them off and keeps only the memo.

mod cache;

use std::collections::HashMap;

use crate::count::{ExtendedCount, Finite, Infinite};
use crate::error::{Error, Result};
use crate::graph::{forest_perfect_matching, Graph};
use crate::hypergraph::{
    bit, members, minimal_edges, split_components, Hypergraph, StateKey, VertexSet,
};

pub use cache::{CacheLoad, CACHE_HEADER};

pub const DEFAULT_VERTEX_CAP: usize = 16;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SolverConfig {
    /// Largest number of vertices a full solve accepts.
    pub vertex_cap: usize,
    /// Enables the search reductions; `false` is the paranoid mode.
    pub pruning: bool,
}

impl Default for SolverConfig {
    fn default() -> Self {
        SolverConfig {
            vertex_cap: DEFAULT_VERTEX_CAP,
            pruning: true,
        }
    }
}

impl SolverConfig {
    pub fn paranoid() -> Self {
        SolverConfig {
            pruning: false,
            ..Self::default()
        }
    }

    pub fn with_cap(mut self, cap: usize) -> Self {
        self.vertex_cap = cap;
        self
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SolveResult {
    pub value: ExtendedCount,
    /// Smallest optimal vertex; present iff `value` is finite.
    pub best_move: Option<usize>,
    /// Positions expanded (memo misses) during this call.
    pub node_count: u64,
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub(crate) struct MemoEntry {
    pub maker: Option<ExtendedCount>,
    pub breaker: Option<ExtendedCount>,
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct SolverStats {
    pub nodes: u64,
    pub memo_entries: usize,
    /// Tree solves whose restricted-reply value failed certification.
    pub tree_fallbacks: u64,
}

#[derive(Debug, Default)]
pub struct Solver {
    config: SolverConfig,
    memo: HashMap<StateKey, MemoEntry>,
    nodes: u64,
    tree_fallbacks: u64,
}

fn key_of(edges: &[VertexSet]) -> StateKey {
    let universe = edges.iter().fold(0, |u, e| u | e);
    let mut words = Vec::with_capacity(edges.len() + 1);
    words.push(universe);
    words.extend_from_slice(edges);
    StateKey(words.into_boxed_slice())
}

/// `H | v` on a normalized family; `None` when the move completes an edge.
fn shrink_by(edges: &[VertexSet], v: usize) -> Option<Vec<VertexSet>> {
    let mask = !bit(v);
    let mut out = Vec::with_capacity(edges.len());
    for &e in edges {
        let rest = e & mask;
        if rest == 0 {
            return None;
        }
        out.push(rest);
    }
    Some(minimal_edges(out))
}

/// `H - v` on a normalized family; the result is still normalized.
fn delete_by(edges: &[VertexSet], v: usize) -> Vec<VertexSet> {
    edges.iter().copied().filter(|&e| e & bit(v) == 0).collect()
}

fn min_size(edges: &[VertexSet]) -> u32 {
    edges
        .iter()
        .map(|e| e.count_ones())
        .min()
        .unwrap_or(u32::MAX)
}

fn universe_of(edges: &[VertexSet]) -> VertexSet {
    edges.iter().fold(0, |u, e| u | e)
}

/// One representative per class of vertices lying in exactly the same edges.
/// Swapping two such vertices is an automorphism, so one of them suffices.
fn twin_representatives(edges: &[VertexSet]) -> Vec<usize> {
    let universe = universe_of(edges);
    if edges.len() > 128 {
        return members(universe).collect();
    }
    let mut seen: Vec<u128> = Vec::new();
    let mut reps = Vec::new();
    for v in members(universe) {
        let sig = edges.iter().enumerate().fold(0u128, |s, (i, &e)| {
            if e & bit(v) != 0 {
                s | (1u128 << i)
            } else {
                s
            }
        });
        if !seen.contains(&sig) {
            seen.push(sig);
            reps.push(v);
        }
    }
    reps
}

fn edge_degree(edges: &[VertexSet], v: usize) -> usize {
    edges.iter().filter(|&&e| e & bit(v) != 0).count()
}

impl Solver {
    pub fn new(config: SolverConfig) -> Self {
        Solver {
            config,
            ..Default::default()
        }
    }

    pub fn paranoid() -> Self {
        Solver::new(SolverConfig::paranoid())
    }

    pub fn config(&self) -> SolverConfig {
        self.config
    }

    pub fn stats(&self) -> SolverStats {
        SolverStats {
            nodes: self.nodes,
            memo_entries: self.memo.len(),
            tree_fallbacks: self.tree_fallbacks,
        }
    }

    pub fn clear(&mut self) {
        self.memo.clear();
    }

    fn check_cap(&self, what: &'static str, n: usize) -> Result<()> {
        if n > self.config.vertex_cap {
            Err(Error::cap(what, n, self.config.vertex_cap))
        } else {
            Ok(())
        }
    }

    fn prepare(&self, h: &Hypergraph) -> Result<Vec<VertexSet>> {
        if h.maker_won() {
            return Err(Error::invalid("position already won by Maker"));
        }
        let normal = h.normalize();
        self.check_cap("hypergraph", normal.vertex_count())?;
        Ok(normal.edges().to_vec())
    }

    /// `w_M^M(H)`: Maker moves first.
    pub fn maker_start_value(&mut self, h: &Hypergraph) -> Result<SolveResult> {
        let edges = self.prepare(h)?;
        let start = self.nodes;
        let value = self.maker(&edges);
        let best_move = if value.is_finite() {
            self.maker_best_move(&edges, value)
        } else {
            None
        };
        Ok(SolveResult {
            value,
            best_move,
            node_count: self.nodes - start,
        })
    }

    /// `w_M^B(H)`: Breaker moves first.
    pub fn breaker_start_value(&mut self, h: &Hypergraph) -> Result<SolveResult> {
        let edges = self.prepare(h)?;
        let start = self.nodes;
        let value = self.breaker(&edges);
        let best_move = if value.is_finite() {
            self.breaker_best_move(&edges, value)
        } else {
            None
        };
        Ok(SolveResult {
            value,
            best_move,
            node_count: self.nodes - start,
        })
    }

    fn maker_best_move(&mut self, edges: &[VertexSet], value: ExtendedCount) -> Option<usize> {
        members(universe_of(edges)).find(|&v| self.maker_move_value(edges, v) == value)
    }

    fn breaker_best_move(&mut self, edges: &[VertexSet], value: ExtendedCount) -> Option<usize> {
        members(universe_of(edges)).find(|&v| self.breaker_move_value(edges, v) == value)
    }

    /// Maker's number of moves if he plays `v` now and both play on optimally.
    fn maker_move_value(&mut self, edges: &[VertexSet], v: usize) -> ExtendedCount {
        match shrink_by(edges, v) {
            None => Finite(1),
            Some(child) => self.breaker(&child).succ(),
        }
    }

    fn breaker_move_value(&mut self, edges: &[VertexSet], v: usize) -> ExtendedCount {
        self.maker(&delete_by(edges, v))
    }

    /// Values of every legal move in a position of the graph game, indexed
    /// by vertex; `None` for played vertices. `staller_to_move` selects whose
    /// moves are evaluated. Values count Staller's remaining moves.
    pub fn move_values(
        &mut self,
        g: &Graph,
        staller: VertexSet,
        dominator: VertexSet,
        staller_to_move: bool,
    ) -> Result<Vec<Option<ExtendedCount>>> {
        self.check_cap("graph", g.vertex_count())?;
        let h = Hypergraph::closed_neighborhoods(g)?;
        let pos = h.shrink(staller)?.delete(dominator)?.normalize();
        if pos.maker_won() {
            return Err(Error::invalid("Staller already owns a closed neighborhood"));
        }
        let edges = pos.edges().to_vec();
        let universe = pos.universe();
        let played = staller | dominator;
        let mut out = vec![None; g.vertex_count()];
        for (v, slot) in out.iter_mut().enumerate() {
            if played & bit(v) != 0 {
                continue;
            }
            *slot = Some(if universe & bit(v) == 0 {
                // a vertex in no remaining winning set changes nothing
                if staller_to_move {
                    self.breaker(&edges).succ()
                } else {
                    self.maker(&edges)
                }
            } else if staller_to_move {
                self.maker_move_value(&edges, v)
            } else {
                self.breaker_move_value(&edges, v)
            });
        }
        Ok(out)
    }

    /// `γ'_SMB(G) = w_M^M(H_G)`.
    pub fn gamma_smb_prime(&mut self, g: &Graph) -> Result<ExtendedCount> {
        self.check_cap("graph", g.vertex_count())?;
        Ok(self
            .maker_start_value(&Hypergraph::closed_neighborhoods(g)?)?
            .value)
    }

    /// `γ_SMB(G) = w_M^B(H_G)`.
    pub fn gamma_smb(&mut self, g: &Graph) -> Result<ExtendedCount> {
        self.check_cap("graph", g.vertex_count())?;
        Ok(self
            .breaker_start_value(&Hypergraph::closed_neighborhoods(g)?)?
            .value)
    }

    /// `γ'_SMB(T)` for a tree, answering each first move `s` only with
    /// neighbors of `s`.
    ///
    /// For an optimal first move some neighbor is an optimal reply, so the
    /// restricted value of that move is exact; the restricted value of any
    /// other move can only be an underestimate. The minimizing move is
    /// therefore re-evaluated against all replies before its value is
    /// returned, and the plain search takes over if the two disagree.
    pub fn solve_tree_sgame(&mut self, t: &Graph) -> Result<SolveResult> {
        if !t.is_tree() {
            return Err(Error::NotATree);
        }
        self.check_cap("tree", t.vertex_count())?;
        let start = self.nodes;
        let n = t.vertex_count();
        if n == 1 {
            return Ok(SolveResult {
                value: Finite(1),
                best_move: Some(0),
                node_count: 0,
            });
        }
        if forest_perfect_matching(t)?.is_some() {
            return Ok(SolveResult {
                value: Infinite,
                best_move: None,
                node_count: 0,
            });
        }
        let root = Hypergraph::closed_neighborhoods(t)?.normalize();
        let edges = root.edges().to_vec();
        let mut restricted = vec![Infinite; n];
        for (s, slot) in restricted.iter_mut().enumerate() {
            let Some(after) = shrink_by(&edges, s) else {
                *slot = Finite(1);
                continue;
            };
            let universe = universe_of(&after);
            let mut worst = Finite(0);
            for &d in t.neighbors(s) {
                let reply = if universe & bit(d) == 0 {
                    self.maker_by_components(&after)
                } else {
                    self.maker_by_components(&delete_by(&after, d))
                };
                worst = worst.max(reply);
            }
            *slot = worst.succ();
        }
        let value = *restricted.iter().min().expect("tree is non-empty");
        let best = restricted.iter().position(|&r| r == value).unwrap();
        let certified = self.maker_move_value(&edges, best);
        let result = if certified == value {
            SolveResult {
                value,
                best_move: value.is_finite().then_some(best),
                node_count: 0,
            }
        } else {
            self.tree_fallbacks += 1;
            self.maker_start_value(&root)?
        };
        Ok(SolveResult {
            node_count: self.nodes - start,
            ..result
        })
    }

    fn maker_by_components(&mut self, edges: &[VertexSet]) -> ExtendedCount {
        split_components(edges)
            .iter()
            .map(|c| self.maker(c))
            .min()
            .unwrap_or(Infinite)
    }

    fn lookup(&self, key: &StateKey) -> MemoEntry {
        self.memo.get(key).copied().unwrap_or_default()
    }

    fn maker(&mut self, edges: &[VertexSet]) -> ExtendedCount {
        if edges.is_empty() {
            return Infinite;
        }
        let key = key_of(edges);
        if let Some(v) = self.lookup(&key).maker {
            return v;
        }
        self.nodes += 1;
        let value = if self.config.pruning {
            self.maker_pruned(edges)
        } else {
            members(universe_of(edges))
                .map(|v| self.maker_move_value(edges, v))
                .min()
                .expect("non-empty family has vertices")
        };
        self.memo.entry(key).or_default().maker = Some(value);
        value
    }

    fn maker_pruned(&mut self, edges: &[VertexSet]) -> ExtendedCount {
        let lower = min_size(edges);
        if lower == 1 {
            return Finite(1);
        }
        let comps = split_components(edges);
        if comps.len() > 1 {
            return comps.iter().map(|c| self.maker(c)).min().unwrap();
        }
        let mut moves = twin_representatives(edges);
        moves.sort_by_key(|&v| (std::cmp::Reverse(edge_degree(edges, v)), v));
        let mut best = Infinite;
        for v in moves {
            let Some(child) = shrink_by(edges, v) else {
                return Finite(1);
            };
            // Breaker-start value of the child is at least its smallest edge
            if Finite(min_size(&child) + 1) >= best {
                continue;
            }
            best = best.min(self.breaker(&child).succ());
            if best == Finite(lower) {
                break;
            }
        }
        best
    }

    fn breaker(&mut self, edges: &[VertexSet]) -> ExtendedCount {
        if edges.is_empty() {
            return Infinite;
        }
        let key = key_of(edges);
        if let Some(v) = self.lookup(&key).breaker {
            return v;
        }
        self.nodes += 1;
        let value = if self.config.pruning {
            self.breaker_pruned(edges)
        } else {
            members(universe_of(edges))
                .map(|v| self.breaker_move_value(edges, v))
                .max()
                .expect("non-empty family has vertices")
        };
        self.memo.entry(key).or_default().breaker = Some(value);
        value
    }

    fn breaker_pruned(&mut self, edges: &[VertexSet]) -> ExtendedCount {
        let singletons: Vec<VertexSet> = edges
            .iter()
            .copied()
            .filter(|e| e.count_ones() == 1)
            .collect();
        match singletons.len() {
            0 => {}
            1 => return self.maker(&delete_by(edges, singletons[0].trailing_zeros() as usize)),
            _ => return Finite(1),
        }
        let comps = split_components(edges);
        if comps.len() > 1 {
            // With components sorted by w_M^M, Breaker-start play is decided
            // in the weakest component unless it outlasts the runner-up:
            // w_M^B(H) = min(w_M^B(H_1), w_M^M(H_2)).
            let mut values: Vec<(ExtendedCount, usize)> = comps
                .iter()
                .enumerate()
                .map(|(i, c)| (self.maker(c), i))
                .collect();
            values.sort();
            let runner_up = values[1].0;
            if values[0].0 == runner_up {
                return runner_up;
            }
            return self.breaker(&comps[values[0].1]).min(runner_up);
        }
        let smallest = edges
            .iter()
            .copied()
            .min_by_key(|e| e.count_ones())
            .unwrap();
        let mut moves = twin_representatives(edges);
        moves.sort_by_key(|&v| {
            (
                smallest & bit(v) == 0,
                std::cmp::Reverse(edge_degree(edges, v)),
                v,
            )
        });
        let mut best = Finite(0);
        for v in moves {
            best = best.max(self.breaker_move_value(edges, v));
            if best == Infinite {
                break;
            }
        }
        best
    }

    pub(crate) fn memo(&self) -> &HashMap<StateKey, MemoEntry> {
        &self.memo
    }

    pub(crate) fn memo_mut(&mut self) -> &mut HashMap<StateKey, MemoEntry> {
        &mut self.memo
    }
}

/// `γ'_SMB(G)` with a fresh default solver.
pub fn gamma_smb_prime(g: &Graph) -> Result<ExtendedCount> {
    Solver::default().gamma_smb_prime(g)
}

/// `γ_SMB(G)` with a fresh default solver.
pub fn gamma_smb(g: &Graph) -> Result<ExtendedCount> {
    Solver::default().gamma_smb(g)
}
