//! Playing the domination game: transcripts, strategies, matches, and
//! exhaustive checks of strategy guarantees.

use std::fmt;
use std::str::FromStr;
use std::sync::Mutex;

use crate::count::ExtendedCount;
use crate::error::{Error, Result};
use crate::families::{Decomposition, Substructure};
use crate::graph::{Graph, Matching};
use crate::hypergraph::{bit, members, VertexSet, MAX_VERTICES};
use crate::solver::{Solver, SolverConfig};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Role {
    Dominator,
    Staller,
}

impl Role {
    pub fn other(self) -> Role {
        match self {
            Role::Dominator => Role::Staller,
            Role::Staller => Role::Dominator,
        }
    }
}

impl fmt::Display for Role {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Role::Dominator => "dominator",
            Role::Staller => "staller",
        })
    }
}

impl FromStr for Role {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "dominator" | "d" => Ok(Role::Dominator),
            "staller" | "s" => Ok(Role::Staller),
            _ => Err(Error::invalid(format!("unknown role {s:?}"))),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Status {
    /// Staller owns a closed neighborhood after this many of her moves.
    StallerWin(u32),
    /// Dominator owns a dominating set.
    DominatorWin,
    Ongoing,
    /// The named player's strategy produced an illegal move.
    Forfeit(Role),
}

impl Status {
    pub fn is_over(self) -> bool {
        self != Status::Ongoing
    }
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Status::StallerWin(k) => write!(f, "staller-win {k}"),
            Status::DominatorWin => f.write_str("dominator-win"),
            Status::Ongoing => f.write_str("ongoing"),
            Status::Forfeit(r) => write!(f, "forfeit {r}"),
        }
    }
}

/// Moves of one game on a fixed graph, with the resulting status.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Transcript {
    neighborhoods: Vec<VertexSet>,
    first: Role,
    moves: Vec<(Role, usize)>,
    staller: VertexSet,
    dominator: VertexSet,
    status: Status,
}

impl Transcript {
    pub fn new(g: &Graph, first: Role) -> Result<Self> {
        let n = g.vertex_count();
        if n > MAX_VERTICES {
            return Err(Error::cap("game", n, MAX_VERTICES));
        }
        if n == 0 {
            return Err(Error::invalid("the game needs at least one vertex"));
        }
        Ok(Transcript {
            neighborhoods: (0..n).map(|v| g.closed_neighborhood_mask(v)).collect(),
            first,
            moves: Vec::new(),
            staller: 0,
            dominator: 0,
            status: Status::Ongoing,
        })
    }

    pub fn vertex_count(&self) -> usize {
        self.neighborhoods.len()
    }

    pub fn first(&self) -> Role {
        self.first
    }

    pub fn moves(&self) -> &[(Role, usize)] {
        &self.moves
    }

    pub fn status(&self) -> Status {
        self.status
    }

    pub fn staller_set(&self) -> VertexSet {
        self.staller
    }

    pub fn dominator_set(&self) -> VertexSet {
        self.dominator
    }

    pub fn is_played(&self, v: usize) -> bool {
        (self.staller | self.dominator) & bit(v) != 0
    }

    pub fn unplayed(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.vertex_count()).filter(|&v| !self.is_played(v))
    }

    pub fn staller_moves(&self) -> u32 {
        self.staller.count_ones()
    }

    /// Whose turn it is; `None` once the game is over.
    pub fn to_move(&self) -> Option<Role> {
        if self.status.is_over() {
            return None;
        }
        Some(match self.moves.last() {
            None => self.first,
            Some((r, _)) => r.other(),
        })
    }

    /// Plays `v` for the player to move.
    pub fn play(&mut self, v: usize) -> Result<Status> {
        let role = self
            .to_move()
            .ok_or_else(|| Error::invalid("the game is over"))?;
        if v >= self.vertex_count() {
            return Err(Error::invalid(format!("vertex {v} does not exist")));
        }
        if self.is_played(v) {
            return Err(Error::invalid(format!("vertex {v} is already played")));
        }
        self.moves.push((role, v));
        match role {
            Role::Staller => self.staller |= bit(v),
            Role::Dominator => self.dominator |= bit(v),
        }
        self.status = if self.neighborhoods.iter().any(|&nb| nb & !self.staller == 0) {
            Status::StallerWin(self.staller_moves())
        } else if self
            .neighborhoods
            .iter()
            .all(|&nb| nb & self.dominator != 0)
        {
            Status::DominatorWin
        } else {
            Status::Ongoing
        };
        Ok(self.status)
    }

    fn undo(&mut self) {
        if let Some((role, v)) = self.moves.pop() {
            match role {
                Role::Staller => self.staller &= !bit(v),
                Role::Dominator => self.dominator &= !bit(v),
            }
            self.status = Status::Ongoing;
        }
    }

    pub fn forfeit(&mut self, role: Role) {
        self.status = Status::Forfeit(role);
    }

    /// One `role vertex` line per move, then the status line.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for (role, v) in &self.moves {
            out.push_str(&format!("{role} {v}\n"));
        }
        out.push_str(&format!("{}\n", self.status));
        out
    }

    /// Replays a transcript on `g`, checking alternation and the status line.
    pub fn from_text(g: &Graph, text: &str) -> Result<Self> {
        let lines: Vec<&str> = text
            .lines()
            .map(str::trim)
            .filter(|l| !l.is_empty())
            .collect();
        let (status_line, move_lines) = lines
            .split_last()
            .ok_or_else(|| Error::parse(1, "empty transcript"))?;
        let mut parsed = Vec::new();
        for (i, line) in move_lines.iter().enumerate() {
            let (role, v) = line
                .split_once(' ')
                .ok_or_else(|| Error::parse(i + 1, "expected `role vertex`"))?;
            let role: Role = role
                .parse()
                .map_err(|_| Error::parse(i + 1, format!("unknown role {role:?}")))?;
            let v: usize = v
                .trim()
                .parse()
                .map_err(|_| Error::parse(i + 1, format!("bad vertex {v:?}")))?;
            parsed.push((role, v));
        }
        let first = parsed.first().map_or(Role::Staller, |m| m.0);
        let mut t = Transcript::new(g, first)?;
        for (i, (role, v)) in parsed.into_iter().enumerate() {
            if t.to_move() != Some(role) {
                return Err(Error::parse(i + 1, format!("{role} is not to move")));
            }
            t.play(v).map_err(|e| Error::parse(i + 1, e.to_string()))?;
        }
        let line = move_lines.len() + 1;
        if let Some(rest) = status_line.strip_prefix("forfeit ") {
            let role = rest
                .parse()
                .map_err(|_| Error::parse(line, "bad forfeit role"))?;
            if t.to_move() != Some(role) {
                return Err(Error::parse(line, "forfeit by a player not to move"));
            }
            t.forfeit(role);
        } else if *status_line != t.status.to_string() {
            return Err(Error::parse(
                line,
                format!(
                    "status {status_line:?} does not match the moves ({})",
                    t.status
                ),
            ));
        }
        Ok(t)
    }
}

impl fmt::Display for Transcript {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

/// Evidence a strategy is built from.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Certificate {
    Matching(Matching),
    Substructure(Substructure),
}

/// A deterministic player: the move depends on the transcript only.
pub trait Strategy {
    fn role(&self) -> Role;

    /// The next vertex to claim; `None` or an illegal vertex forfeits.
    fn next_move(&self, t: &Transcript) -> Option<usize>;

    fn certificate(&self) -> Option<&Certificate> {
        None
    }
}

fn smallest_unplayed(t: &Transcript) -> Option<usize> {
    t.unplayed().next()
}

/// A matching `M` of `G - (X ∪ Y)` covering every vertex outside `N[X]`,
/// where `X` and `Y` are Dominator's and Staller's vertices.
///
/// Forests use a dynamic program over a rooted order; other graphs are searched
/// exhaustively up to `MAX_VERTICES` vertices.
pub fn pairing_matching(g: &Graph, x: VertexSet, y: VertexSet) -> Result<Option<Matching>> {
    let n = g.vertex_count();
    if n > MAX_VERTICES {
        return Err(Error::cap("pairing host", n, MAX_VERTICES));
    }
    if x & y != 0 {
        return Err(Error::invalid("the two players' vertex sets overlap"));
    }
    let dominated = members(x).fold(0, |acc, v| acc | g.closed_neighborhood_mask(v));
    let all = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
    let need = all & !dominated;
    if need & y != 0 {
        return Ok(None);
    }
    let free = all & !(x | y);
    if g.is_forest() {
        Ok(forest_covering_matching(g, free, need))
    } else {
        let mut m = Matching::new();
        Ok(search_covering_matching(g, free, need, &mut m).then_some(m))
    }
}

/// Dynamic program on each rooted tree of `G[free]`: `inner[v]` says the
/// subtree of `v` can be handled with `v` matched to a child, `open[v]` that
/// it can be handled with `v` left for its parent.
fn forest_covering_matching(g: &Graph, free: VertexSet, need: VertexSet) -> Option<Matching> {
    let n = g.vertex_count();
    let mut parent = vec![usize::MAX; n];
    let mut order = Vec::new();
    let mut roots = Vec::new();
    let mut seen = 0u64;
    for root in members(free) {
        if seen & bit(root) != 0 {
            continue;
        }
        seen |= bit(root);
        roots.push(root);
        let mut i = order.len();
        order.push(root);
        while i < order.len() {
            let u = order[i];
            for &w in g.neighbors(u) {
                if free & bit(w) != 0 && seen & bit(w) == 0 {
                    seen |= bit(w);
                    parent[w] = u;
                    order.push(w);
                }
            }
            i += 1;
        }
    }
    let kids: Vec<Vec<usize>> = (0..n)
        .map(|v| {
            g.neighbors(v)
                .iter()
                .copied()
                .filter(|&c| free & bit(c) != 0 && parent[c] == v)
                .collect()
        })
        .collect();
    let children = |v: usize| kids[v].iter().copied();
    let mut inner = vec![false; n];
    let mut open = vec![false; n];
    let mut pick = vec![usize::MAX; n];
    let settled =
        |v: usize, inner: &[bool], open: &[bool]| inner[v] || (open[v] && need & bit(v) == 0);
    for &v in order.iter().rev() {
        open[v] = children(v).all(|c| settled(c, &inner, &open));
        pick[v] = children(v)
            .find(|&c0| open[c0] && children(v).all(|c| c == c0 || settled(c, &inner, &open)))
            .unwrap_or(usize::MAX);
        inner[v] = pick[v] != usize::MAX;
    }
    let mut m = Matching::new();
    // top-down: `to_parent` marks vertices already matched to their parent
    let mut to_parent = vec![false; n];
    for &root in &roots {
        if !settled(root, &inner, &open) {
            return None;
        }
    }
    for &v in &order {
        let c0 = if to_parent[v] || !inner[v] {
            usize::MAX
        } else {
            pick[v]
        };
        if c0 != usize::MAX {
            m.insert(v, c0);
            to_parent[c0] = true;
        }
    }
    Some(m)
}

fn search_covering_matching(g: &Graph, free: VertexSet, need: VertexSet, m: &mut Matching) -> bool {
    let Some(r) = members(need & free).next() else {
        return true;
    };
    for &w in g.neighbors(r) {
        if free & bit(w) == 0 {
            continue;
        }
        let rest = free & !bit(r) & !bit(w);
        m.insert(r, w);
        if search_covering_matching(g, rest, need & !bit(r) & !bit(w), m) {
            return true;
        }
        m.remove(r, w);
    }
    false
}

/// Dominator answers each Staller move with its matching partner, and
/// otherwise claims the smallest unplayed vertex.
pub struct PairingStrategy {
    certificate: Certificate,
}

pub fn dominator_pairing_strategy(g: &Graph, m: Matching) -> Result<PairingStrategy> {
    for (u, v) in m.edges() {
        if !g.has_edge(u, v) {
            return Err(Error::invalid(format!(
                "certificate pair {u}-{v} is not an edge"
            )));
        }
    }
    Ok(PairingStrategy {
        certificate: Certificate::Matching(m),
    })
}

impl PairingStrategy {
    fn matching(&self) -> &Matching {
        match &self.certificate {
            Certificate::Matching(m) => m,
            Certificate::Substructure(_) => unreachable!(),
        }
    }
}

impl Strategy for PairingStrategy {
    fn role(&self) -> Role {
        Role::Dominator
    }

    fn next_move(&self, t: &Transcript) -> Option<usize> {
        if let Some(&(Role::Staller, v)) = t.moves().last() {
            if let Some(w) = self.matching().partner(v) {
                if !t.is_played(w) {
                    return Some(w);
                }
            }
        }
        smallest_unplayed(t)
    }

    fn certificate(&self) -> Option<&Certificate> {
        Some(&self.certificate)
    }
}

/// Plays `opening` as its player's first move, then defers to `inner`.
pub struct WithOpening<S> {
    pub opening: usize,
    pub inner: S,
}

impl<S: Strategy> Strategy for WithOpening<S> {
    fn role(&self) -> Role {
        self.inner.role()
    }

    fn next_move(&self, t: &Transcript) -> Option<usize> {
        let role = self.role();
        if t.moves().iter().all(|(r, _)| *r != role) {
            Some(self.opening)
        } else {
            self.inner.next_move(t)
        }
    }

    fn certificate(&self) -> Option<&Certificate> {
        self.inner.certificate()
    }
}

/// Plays a solver-optimal move every turn, breaking ties by smallest id.
pub struct OptimalStrategy {
    graph: Graph,
    role: Role,
    solver: Mutex<Solver>,
}

pub fn optimal_strategy(g: &Graph, role: Role) -> Result<OptimalStrategy> {
    optimal_strategy_with(g, role, SolverConfig::default())
}

pub fn optimal_strategy_with(
    g: &Graph,
    role: Role,
    config: SolverConfig,
) -> Result<OptimalStrategy> {
    if g.vertex_count() > config.vertex_cap {
        return Err(Error::cap("graph", g.vertex_count(), config.vertex_cap));
    }
    Ok(OptimalStrategy {
        graph: g.clone(),
        role,
        solver: Mutex::new(Solver::new(config)),
    })
}

impl OptimalStrategy {
    /// Staller's remaining moves after each legal move of the player to
    /// move, under optimal play.
    pub fn move_values(&self, t: &Transcript) -> Result<Vec<Option<ExtendedCount>>> {
        let staller_to_move = t.to_move() == Some(Role::Staller);
        self.solver.lock().unwrap().move_values(
            &self.graph,
            t.staller_set(),
            t.dominator_set(),
            staller_to_move,
        )
    }
}

impl Strategy for OptimalStrategy {
    fn role(&self) -> Role {
        self.role
    }

    fn next_move(&self, t: &Transcript) -> Option<usize> {
        let values = self.move_values(t).ok()?;
        let legal = values
            .iter()
            .enumerate()
            .filter_map(|(v, x)| x.map(|x| (v, x)));
        match self.role {
            Role::Staller => legal.min_by_key(|&(v, x)| (x, v)).map(|(v, _)| v),
            Role::Dominator => legal
                .max_by_key(|&(v, x)| (x, std::cmp::Reverse(v)))
                .map(|(v, _)| v),
        }
    }
}

/// Staller's strategy from a substructure of rank `k`: claim the origin of
/// the current part, then move into a sub-part Dominator has not touched
/// (the one of lower rank first); a single-vertex part is claimed outright.
/// When the transcript leaves this plan she claims the smallest unplayed
/// vertex.
pub struct SubstructureStrategy {
    plan: Decomposition,
    certificate: Certificate,
}

pub fn staller_substructure_strategy(
    host: &Graph,
    sub: Substructure,
) -> Result<SubstructureStrategy> {
    sub.validate(host)?;
    let plan = sub.pattern.decomposition().mapped(&sub.embedding);
    Ok(SubstructureStrategy {
        plan,
        certificate: Certificate::Substructure(sub),
    })
}

fn claim(node: &Decomposition) -> usize {
    match &node.split {
        Some(s) => s.origin,
        None => node.vertices[0],
    }
}

impl SubstructureStrategy {
    fn planned(&self, t: &Transcript) -> Option<usize> {
        let moves = t.moves();
        let mut node = &self.plan;
        let mut dominator: VertexSet = 0;
        let mut started = false;
        for (i, &(role, v)) in moves.iter().enumerate() {
            match role {
                Role::Dominator => dominator |= bit(v),
                Role::Staller => {
                    if started {
                        return None;
                    }
                    if v != claim(node) {
                        return None;
                    }
                    started = true;
                }
            }
            let next_is_staller = moves.get(i + 1).is_none_or(|m| m.0 == Role::Staller);
            if started && next_is_staller {
                let split = node.split.as_ref()?;
                let mut parts: Vec<&Decomposition> =
                    split.parts.iter().map(|b| b.as_ref()).collect();
                parts.sort_by_key(|p| p.rank);
                node = parts
                    .into_iter()
                    .find(|p| p.vertices.iter().all(|&u| dominator & bit(u) == 0))?;
                started = false;
            }
        }
        if started {
            return None;
        }
        let v = claim(node);
        (!t.is_played(v)).then_some(v)
    }
}

impl Strategy for SubstructureStrategy {
    fn role(&self) -> Role {
        Role::Staller
    }

    fn next_move(&self, t: &Transcript) -> Option<usize> {
        self.planned(t).or_else(|| smallest_unplayed(t))
    }

    fn certificate(&self) -> Option<&Certificate> {
        Some(&self.certificate)
    }
}

/// Runs one game to the end.
pub fn play_match(
    g: &Graph,
    staller: &dyn Strategy,
    dominator: &dyn Strategy,
    first: Role,
) -> Result<Transcript> {
    let mut t = Transcript::new(g, first)?;
    while let Some(role) = t.to_move() {
        let player = if role == Role::Staller {
            staller
        } else {
            dominator
        };
        match player.next_move(&t) {
            Some(v) if v < t.vertex_count() && !t.is_played(v) => {
                t.play(v)?;
            }
            _ => t.forfeit(role),
        }
    }
    Ok(t)
}

/// Whether Staller, following `s` in the S-game, wins within `bound` moves
/// against every sequence of Dominator replies.
pub fn verify_strategy_bound(g: &Graph, s: &dyn Strategy, bound: u32) -> Result<bool> {
    verify_strategy_bound_from(g, s, bound, Role::Staller)
}

pub fn verify_strategy_bound_from(
    g: &Graph,
    s: &dyn Strategy,
    bound: u32,
    first: Role,
) -> Result<bool> {
    verify_strategy_bound_at(&Transcript::new(g, first)?, s, bound)
}

/// Same walk starting from a position already reached.
pub fn verify_strategy_bound_at(start: &Transcript, s: &dyn Strategy, bound: u32) -> Result<bool> {
    if start.vertex_count() > WALK_CAP {
        return Err(Error::cap(
            "exhaustive walk",
            start.vertex_count(),
            WALK_CAP,
        ));
    }
    fn walk(t: &mut Transcript, s: &dyn Strategy, bound: u32) -> bool {
        match t.to_move() {
            None => matches!(t.status(), Status::StallerWin(k) if k <= bound),
            Some(Role::Staller) => {
                if t.staller_moves() >= bound {
                    return false;
                }
                match s.next_move(t) {
                    Some(v) if v < t.vertex_count() && !t.is_played(v) => {
                        t.play(v).unwrap();
                        let ok = walk(t, s, bound);
                        t.undo();
                        ok
                    }
                    _ => false,
                }
            }
            Some(Role::Dominator) => {
                let options: Vec<usize> = t.unplayed().collect();
                options.into_iter().all(|v| {
                    t.play(v).unwrap();
                    let ok = walk(t, s, bound);
                    t.undo();
                    ok
                })
            }
        }
    }
    let mut t = start.clone();
    Ok(walk(&mut t, s, bound))
}

/// Whether Dominator, following `d`, keeps Staller from winning against
/// every sequence of Staller moves.
pub fn verify_dominator_never_loses(g: &Graph, d: &dyn Strategy, first: Role) -> Result<bool> {
    verify_dominator_never_loses_at(&Transcript::new(g, first)?, d)
}

/// Same walk starting from a position already reached.
pub fn verify_dominator_never_loses_at(start: &Transcript, d: &dyn Strategy) -> Result<bool> {
    if start.vertex_count() > WALK_CAP {
        return Err(Error::cap(
            "exhaustive walk",
            start.vertex_count(),
            WALK_CAP,
        ));
    }
    fn walk(t: &mut Transcript, d: &dyn Strategy) -> bool {
        match t.to_move() {
            None => !matches!(
                t.status(),
                Status::StallerWin(_) | Status::Forfeit(Role::Dominator)
            ),
            Some(Role::Dominator) => match d.next_move(t) {
                Some(v) if v < t.vertex_count() && !t.is_played(v) => {
                    t.play(v).unwrap();
                    let ok = walk(t, d);
                    t.undo();
                    ok
                }
                _ => false,
            },
            Some(Role::Staller) => {
                let options: Vec<usize> = t.unplayed().collect();
                options.into_iter().all(|v| {
                    t.play(v).unwrap();
                    let ok = walk(t, d);
                    t.undo();
                    ok
                })
            }
        }
    }
    let mut t = start.clone();
    Ok(walk(&mut t, d))
}

/// Exhaustive walks grow like `n!`; this bounds them.
pub const WALK_CAP: usize = 16;
