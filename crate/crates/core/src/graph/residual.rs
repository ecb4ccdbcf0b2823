use super::{forest_perfect_matching, Graph};
use crate::error::{Error, Result};

/// Which player moves first: Dominator (D-game) or Staller (S-game).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, serde::Serialize, serde::Deserialize)]
pub enum Game {
    D,
    S,
}

/// Result of repeatedly deleting pendant `P_2`s.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Residual {
    pub graph: Graph,
    /// `kept[i]` is the id in the input graph of vertex `i` of `graph`.
    pub kept: Vec<usize>,
}

/// Residual graph `R(G)`.
///
/// A pendant `P_2` is a leaf `u` whose neighbor `w` has degree 2 (the pair
/// hangs off the rest of the graph by one edge) or degree 1 (a `P_2`
/// component). The smallest such leaf is removed first, repeatedly.
pub fn residual_graph(g: &Graph) -> Residual {
    let n = g.vertex_count();
    let mut alive = vec![true; n];
    let mut degree: Vec<usize> = (0..n).map(|v| g.degree(v)).collect();
    loop {
        let pendant = (0..n).find_map(|u| {
            if !alive[u] || degree[u] != 1 {
                return None;
            }
            let w = g.neighbors(u).iter().copied().find(|&w| alive[w])?;
            matches!(degree[w], 1 | 2).then_some((u, w))
        });
        let Some((u, w)) = pendant else { break };
        for x in [u, w] {
            alive[x] = false;
            for &y in g.neighbors(x) {
                if alive[y] {
                    degree[y] -= 1;
                }
            }
        }
    }
    let kept: Vec<usize> = (0..n).filter(|&v| alive[v]).collect();
    Residual {
        graph: g.induced(&kept),
        kept,
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SupportTag {
    Leaf,
    WeakSupport,
    StrongSupport,
    Other,
}

/// Tags every vertex. A leaf is tagged `Leaf` even when it also neighbors a
/// leaf (both ends of a `K_2`).
pub fn support_classification(g: &Graph) -> Vec<SupportTag> {
    (0..g.vertex_count())
        .map(|v| {
            if g.is_leaf(v) {
                return SupportTag::Leaf;
            }
            match g.neighbors(v).iter().filter(|&&w| g.is_leaf(w)).count() {
                0 => SupportTag::Other,
                1 => SupportTag::WeakSupport,
                _ => SupportTag::StrongSupport,
            }
        })
        .collect()
}

/// Outcome test on trees, without search.
///
/// D-game: Staller wins iff `R(T)` has at least two strong support vertices.
/// S-game: Staller wins iff `T` has no perfect matching; forests are
/// accepted here since Staller wins on a forest iff she wins on a component.
pub fn staller_wins(g: &Graph, game: Game) -> Result<bool> {
    match game {
        Game::D => {
            if !g.is_tree() {
                return Err(Error::NotATree);
            }
            let r = residual_graph(g).graph;
            let strong = support_classification(&r)
                .into_iter()
                .filter(|&t| t == SupportTag::StrongSupport)
                .count();
            Ok(strong >= 2)
        }
        Game::S => {
            if !g.is_forest() {
                return Err(Error::NotATree);
            }
            Ok(forest_perfect_matching(g)?.is_none())
        }
    }
}
