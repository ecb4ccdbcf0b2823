//! Once-subdivided trees, their ranks, and substructure search.
//!
//! The family `𝒮` consists of the trees obtained from a tree by subdividing
//! every edge once. Such a tree `S` has a distinguished class `X(S)`: the
//! bipartition class holding the leaves (the original vertices). Its rank is
//! the least `k` with `S ∈ 𝒮_k`, where `𝒮_1 = {P_1}` and a member of `𝒮_k`
//! joins a member of `𝒮_{k-1}` and a member of lower rank through a new
//! middle vertex (the origin). Removing any non-`X` vertex of `S` splits it
//! into two smaller members of `𝒮`, which gives the rank recursion
//! `rank(S) = 1 + min_z max(rank(S_1), rank(S_2))`.
//!
//! A substructure of `S` in a host graph `G` is a copy of `S` in which every
//! `X`-vertex keeps its full host degree. On trees, `γ'_SMB(T)` is the least
//! rank of a substructure of `T`, and `∞` when there is none.

use std::collections::{BTreeMap, HashMap};
use std::fmt::Write as _;
use std::sync::{Mutex, OnceLock};

use crate::count::{ExtendedCount, Finite, Infinite};
use crate::error::{Error, Result};
use crate::graph::trees::{canonical_code, canonical_tree, enumerate_trees_capped};
use crate::graph::{parse_edge_list, to_edge_list, Graph};
use crate::hypergraph::{bit, set_of, Hypergraph, VertexSet, MAX_VERTICES};

/// Largest pattern order [`generate_s_upto`] produces by default.
pub const DEFAULT_PATTERN_CAP: usize = 15;
/// Largest host order the substructure search accepts by default.
pub const DEFAULT_HOST_CAP: usize = 16;

/// A member of `𝒮` with its `X`-class and rank.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SubdividedTree {
    tree: Graph,
    x_class: Vec<usize>,
    rank: u32,
}

impl SubdividedTree {
    pub fn new(tree: Graph) -> Result<Self> {
        let x_class = membership_in_s(&tree)
            .ok_or_else(|| Error::invalid("tree is not a subdivided tree"))?;
        let rank = rank_of(&tree, &x_mask(&tree, &x_class));
        Ok(SubdividedTree {
            tree,
            x_class,
            rank,
        })
    }

    pub fn tree(&self) -> &Graph {
        &self.tree
    }

    pub fn x_class(&self) -> &[usize] {
        &self.x_class
    }

    pub fn is_x(&self, v: usize) -> bool {
        self.x_class.binary_search(&v).is_ok()
    }

    pub fn rank(&self) -> u32 {
        self.rank
    }

    pub fn order(&self) -> usize {
        self.tree.vertex_count()
    }

    /// A rank-attaining split tree of the pattern (pattern vertex ids).
    pub fn decomposition(&self) -> Decomposition {
        let xs = x_mask(&self.tree, &self.x_class);
        let all: Vec<usize> = (0..self.order()).collect();
        decompose(&self.tree, &xs, all)
    }
}

fn x_mask(t: &Graph, x_class: &[usize]) -> Vec<bool> {
    let mut xs = vec![false; t.vertex_count()];
    for &x in x_class {
        xs[x] = true;
    }
    xs
}

/// The `X`-class of `T` if `T ∈ 𝒮`: `T` is a tree of odd order whose leaves
/// all lie in one bipartition class and whose other class has only degree-2
/// vertices. `K_1` yields its single vertex.
pub fn membership_in_s(t: &Graph) -> Option<Vec<usize>> {
    if !t.is_tree() || t.vertex_count().is_multiple_of(2) {
        return None;
    }
    if t.vertex_count() == 1 {
        return Some(vec![0]);
    }
    let side = t.bipartition()?;
    let n = t.vertex_count();
    let leaf_side = side[(0..n).find(|&v| t.is_leaf(v))?];
    let leaves_agree = (0..n)
        .filter(|&v| t.is_leaf(v))
        .all(|v| side[v] == leaf_side);
    let others_degree_two = (0..n)
        .filter(|&v| side[v] != leaf_side)
        .all(|v| t.degree(v) == 2);
    (leaves_agree && others_degree_two).then(|| (0..n).filter(|&v| side[v] == leaf_side).collect())
}

fn rank_memo() -> &'static Mutex<HashMap<Vec<u8>, u32>> {
    static MEMO: OnceLock<Mutex<HashMap<Vec<u8>, u32>>> = OnceLock::new();
    MEMO.get_or_init(Default::default)
}

/// Pieces of `t - z` for a non-`X` vertex `z` (two, since `deg z = 2`).
fn split_at(t: &Graph, z: usize) -> [Vec<usize>; 2] {
    let (rest, kept) = t.without(&[z]);
    let comps = rest.components();
    debug_assert_eq!(comps.len(), 2, "non-X vertices have degree 2");
    let lift = |c: &Vec<usize>| c.iter().map(|&i| kept[i]).collect::<Vec<usize>>();
    [lift(&comps[0]), lift(&comps[1])]
}

/// Rank of a member of `𝒮` given its `X` flags; memoized on canonical form.
fn rank_of(t: &Graph, xs: &[bool]) -> u32 {
    if t.vertex_count() == 1 {
        return 1;
    }
    let code = canonical_code(t);
    if let Some(&r) = rank_memo().lock().unwrap().get(&code) {
        return r;
    }
    let r = (0..t.vertex_count())
        .filter(|&z| !xs[z])
        .map(|z| {
            let [a, b] = split_at(t, z);
            let ra = rank_of(&t.induced(&a), &pick(xs, &a));
            let rb = rank_of(&t.induced(&b), &pick(xs, &b));
            ra.max(rb) + 1
        })
        .min()
        .expect("a member of order > 1 has a non-X vertex");
    rank_memo().lock().unwrap().insert(code, r);
    r
}

fn pick(xs: &[bool], vs: &[usize]) -> Vec<bool> {
    vs.iter().map(|&v| xs[v]).collect()
}

/// Rank of a tree; errors when the tree is not in `𝒮`.
pub fn rank(t: &Graph) -> Result<u32> {
    let x = membership_in_s(t).ok_or_else(|| Error::invalid("tree is not a subdivided tree"))?;
    Ok(rank_of(t, &x_mask(t, &x)))
}

/// Split tree witnessing the rank: a leaf is a single `X`-vertex, an inner
/// node names its origin and the two parts left after removing it. The first
/// part has rank exactly `rank - 1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Decomposition {
    pub vertices: Vec<usize>,
    pub rank: u32,
    pub split: Option<Split>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Split {
    pub origin: usize,
    pub parts: [Box<Decomposition>; 2],
}

fn decompose(t: &Graph, xs: &[bool], vertices: Vec<usize>) -> Decomposition {
    if vertices.len() == 1 {
        return Decomposition {
            vertices,
            rank: 1,
            split: None,
        };
    }
    let sub = t.induced(&vertices);
    let sub_x = pick(xs, &vertices);
    let rank = rank_of(&sub, &sub_x);
    let (origin, mut parts) = (0..vertices.len())
        .filter(|&z| !sub_x[z])
        .find_map(|z| {
            let [a, b] = split_at(&sub, z);
            let ra = rank_of(&sub.induced(&a), &pick(&sub_x, &a));
            let rb = rank_of(&sub.induced(&b), &pick(&sub_x, &b));
            (ra.max(rb) + 1 == rank).then(|| {
                let lift = |c: &[usize]| c.iter().map(|&i| vertices[i]).collect::<Vec<_>>();
                let (hi, lo) = if ra >= rb { (a, b) } else { (b, a) };
                (vertices[z], [lift(&hi), lift(&lo)])
            })
        })
        .expect("some split attains the rank");
    let second = std::mem::take(&mut parts[1]);
    let first = std::mem::take(&mut parts[0]);
    Decomposition {
        vertices,
        rank,
        split: Some(Split {
            origin,
            parts: [
                Box::new(decompose(t, xs, first)),
                Box::new(decompose(t, xs, second)),
            ],
        }),
    }
}

impl Decomposition {
    /// Renames every vertex through `map`.
    pub fn mapped(&self, map: &[usize]) -> Decomposition {
        Decomposition {
            vertices: self.vertices.iter().map(|&v| map[v]).collect(),
            rank: self.rank,
            split: self.split.as_ref().map(|s| Split {
                origin: map[s.origin],
                parts: [
                    Box::new(s.parts[0].mapped(map)),
                    Box::new(s.parts[1].mapped(map)),
                ],
            }),
        }
    }
}

/// The once-subdivided graph `S(G)`: vertex `v` of `G` keeps id `v`, the
/// subdivision vertex of the `i`-th edge gets id `|V(G)| + i`.
pub fn subdivide(g: &Graph) -> Graph {
    let n = g.vertex_count();
    let mut s = Graph::empty(n + g.edge_count());
    for (i, (u, v)) in g.edges().enumerate() {
        s.add_edge(u, n + i).unwrap();
        s.add_edge(n + i, v).unwrap();
    }
    s
}

/// Every member of `𝒮` with at most `n` vertices, one per isomorphism
/// class, ordered by (rank, order, canonical form).
pub fn generate_s_upto(n: usize) -> Result<Vec<SubdividedTree>> {
    generate_s_upto_capped(n, DEFAULT_PATTERN_CAP)
}

pub fn generate_s_upto_capped(n: usize, cap: usize) -> Result<Vec<SubdividedTree>> {
    if n > cap {
        return Err(Error::cap("pattern generation", n, cap));
    }
    let mut out = Vec::new();
    // |V(S(G))| = 2|V(G)| - 1
    for base in 1..=n.div_ceil(2) {
        if 2 * base - 1 > n {
            break;
        }
        for g in enumerate_trees_capped(base, usize::MAX)? {
            out.push(SubdividedTree::new(canonical_tree(&subdivide(&g)))?);
        }
    }
    out.sort_by_cached_key(|s| (s.rank, s.order(), canonical_code(&s.tree)));
    Ok(out)
}

fn patterns_for(host_order: usize) -> Result<&'static [SubdividedTree]> {
    static PATTERNS: OnceLock<Vec<SubdividedTree>> = OnceLock::new();
    let all = match PATTERNS.get() {
        Some(p) => p,
        None => {
            let p = generate_s_upto(DEFAULT_PATTERN_CAP)?;
            PATTERNS.get_or_init(|| p)
        }
    };
    let _ = host_order;
    Ok(all)
}

/// A pattern together with its copy in a host graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Substructure {
    pub pattern: SubdividedTree,
    /// `embedding[p]` is the host vertex of pattern vertex `p`.
    pub embedding: Vec<usize>,
}

impl Substructure {
    pub fn rank(&self) -> u32 {
        self.pattern.rank
    }

    /// Checks injectivity, edge preservation and the fixed `X` degrees.
    pub fn validate(&self, host: &Graph) -> Result<()> {
        let p = &self.pattern.tree;
        if self.embedding.len() != p.vertex_count() {
            return Err(Error::invalid("embedding does not cover the pattern"));
        }
        let mut seen = vec![false; host.vertex_count()];
        for &h in &self.embedding {
            if h >= host.vertex_count() || std::mem::replace(&mut seen[h], true) {
                return Err(Error::invalid("embedding is not injective into the host"));
            }
        }
        for (u, v) in p.edges() {
            if !host.has_edge(self.embedding[u], self.embedding[v]) {
                return Err(Error::invalid(format!(
                    "pattern edge {u}-{v} is not a host edge"
                )));
            }
        }
        for &x in &self.pattern.x_class {
            if host.degree(self.embedding[x]) != p.degree(x) {
                return Err(Error::invalid(format!(
                    "X-vertex {x} does not keep its host degree"
                )));
            }
        }
        Ok(())
    }

    /// Host vertices of the pattern's `X`-class.
    pub fn host_x(&self) -> VertexSet {
        set_of(self.pattern.x_class.iter().map(|&x| self.embedding[x]))
    }

    /// Certificate text: rank line, the pattern as an edge list, the
    /// `X`-class, and the embedding pairs.
    pub fn to_text(&self) -> String {
        let mut out = format!("substructure rank {}\n", self.pattern.rank);
        out.push_str(&to_edge_list(&self.pattern.tree));
        let xs: Vec<String> = self.pattern.x_class.iter().map(|x| x.to_string()).collect();
        writeln!(out, "x {}", xs.join(" ")).unwrap();
        let pairs: Vec<String> = self
            .embedding
            .iter()
            .enumerate()
            .map(|(p, h)| format!("{p}->{h}"))
            .collect();
        writeln!(out, "embed {}", pairs.join(" ")).unwrap();
        out
    }

    pub fn from_text(text: &str) -> Result<Self> {
        let mut edge_lines = String::new();
        let mut x_line = None;
        let mut embed_line = None;
        for line in text.lines() {
            let t = line.trim();
            if let Some(rest) = t.strip_prefix("x ") {
                x_line = Some(rest.to_string());
            } else if let Some(rest) = t.strip_prefix("embed") {
                embed_line = Some(rest.trim().to_string());
            } else if !t.starts_with("substructure") {
                edge_lines.push_str(t);
                edge_lines.push('\n');
            }
        }
        let tree = parse_edge_list(&edge_lines)?;
        let pattern = SubdividedTree::new(tree)?;
        let mut xs: Vec<usize> = x_line
            .ok_or_else(|| Error::invalid("certificate lacks an `x` line"))?
            .split_whitespace()
            .map(|s| {
                s.parse()
                    .map_err(|_| Error::invalid(format!("bad X vertex {s:?}")))
            })
            .collect::<Result<_>>()?;
        xs.sort_unstable();
        if xs != pattern.x_class {
            return Err(Error::invalid(
                "certificate X-class does not match the pattern",
            ));
        }
        let mut embedding = vec![usize::MAX; pattern.order()];
        for pair in embed_line
            .ok_or_else(|| Error::invalid("certificate lacks an `embed` line"))?
            .split_whitespace()
        {
            let (p, h) = pair
                .split_once("->")
                .ok_or_else(|| Error::invalid(format!("bad pair {pair:?}")))?;
            let p: usize = p
                .parse()
                .map_err(|_| Error::invalid(format!("bad pair {pair:?}")))?;
            let h: usize = h
                .parse()
                .map_err(|_| Error::invalid(format!("bad pair {pair:?}")))?;
            *embedding
                .get_mut(p)
                .ok_or_else(|| Error::invalid(format!("pattern vertex {p} out of range")))? = h;
        }
        if embedding.contains(&usize::MAX) {
            return Err(Error::invalid("embedding does not cover the pattern"));
        }
        Ok(Substructure { pattern, embedding })
    }
}

/// Finds one copy of `pattern` in `host` with the fixed `X` degrees.
///
/// Backtracking from an `X`-vertex of largest degree, extending along a BFS
/// order of the pattern; `X`-vertices need an exact degree match, others at
/// least their pattern degree.
pub fn find_embedding(pattern: &SubdividedTree, host: &Graph) -> Option<Vec<usize>> {
    let p = &pattern.tree;
    let np = p.vertex_count();
    if np > host.vertex_count() {
        return None;
    }
    let root = *pattern
        .x_class
        .iter()
        .max_by_key(|&&x| (p.degree(x), std::cmp::Reverse(x)))?;
    let mut order = vec![root];
    let mut parent = vec![usize::MAX; np];
    parent[root] = root;
    let mut i = 0;
    while i < order.len() {
        let u = order[i];
        for &w in p.neighbors(u) {
            if parent[w] == usize::MAX {
                parent[w] = u;
                order.push(w);
            }
        }
        i += 1;
    }
    let fits = |pv: usize, hv: usize| {
        if pattern.is_x(pv) {
            host.degree(hv) == p.degree(pv)
        } else {
            host.degree(hv) >= p.degree(pv)
        }
    };
    let mut map = vec![usize::MAX; np];
    let mut used = vec![false; host.vertex_count()];

    fn extend(
        depth: usize,
        order: &[usize],
        parent: &[usize],
        host: &Graph,
        map: &mut [usize],
        used: &mut [bool],
        fits: &dyn Fn(usize, usize) -> bool,
    ) -> bool {
        let Some(&pv) = order.get(depth) else {
            return true;
        };
        let anchor = map[parent[pv]];
        for &hv in host.neighbors(anchor) {
            if used[hv] || !fits(pv, hv) {
                continue;
            }
            map[pv] = hv;
            used[hv] = true;
            if extend(depth + 1, order, parent, host, map, used, fits) {
                return true;
            }
            used[hv] = false;
        }
        map[pv] = usize::MAX;
        false
    }

    for hv in 0..host.vertex_count() {
        if !fits(root, hv) {
            continue;
        }
        map[root] = hv;
        used[hv] = true;
        if extend(1, &order, &parent, host, &mut map, &mut used, &fits) {
            return Some(map);
        }
        used[hv] = false;
    }
    None
}

/// A minimum-rank substructure of `t` and its rank; `None` when `t` has no
/// substructure at all.
pub fn min_rank_substructure(t: &Graph) -> Result<Option<(Substructure, u32)>> {
    min_rank_substructure_capped(t, DEFAULT_HOST_CAP)
}

pub fn min_rank_substructure_capped(t: &Graph, cap: usize) -> Result<Option<(Substructure, u32)>> {
    if !t.is_tree() {
        return Err(Error::NotATree);
    }
    find_min_rank_substructure(t, cap)
}

/// Same search on an arbitrary host graph. Substructures bound `γ'_SMB`
/// from above in every graph, but only on trees is the bound exact.
pub fn find_min_rank_substructure(g: &Graph, cap: usize) -> Result<Option<(Substructure, u32)>> {
    let n = g.vertex_count();
    if n > cap || n > DEFAULT_PATTERN_CAP + 1 {
        return Err(Error::cap(
            "substructure host",
            n,
            cap.min(DEFAULT_PATTERN_CAP + 1),
        ));
    }
    for pattern in patterns_for(n)?.iter().filter(|s| s.order() <= n) {
        if let Some(embedding) = find_embedding(pattern, g) {
            let sub = Substructure {
                pattern: pattern.clone(),
                embedding,
            };
            let k = sub.rank();
            return Ok(Some((sub, k)));
        }
    }
    Ok(None)
}

/// `γ'_SMB(T)` of a tree from its minimum-rank substructure.
pub fn gamma_prime_via_structure(t: &Graph) -> Result<ExtendedCount> {
    Ok(match min_rank_substructure(t)? {
        Some((_, k)) => Finite(k),
        None => Infinite,
    })
}

fn check_bitmask(s: &SubdividedTree) -> Result<()> {
    if s.order() > MAX_VERTICES {
        Err(Error::cap("hypergraph", s.order(), MAX_VERTICES))
    } else {
        Ok(())
    }
}

/// `H_S` restricted to the closed neighborhoods of `X(S)`, on vertex set `V(S)`.
pub fn build_f(s: &SubdividedTree) -> Result<Hypergraph> {
    check_bitmask(s)?;
    let t = &s.tree;
    let edges = s
        .x_class
        .iter()
        .map(|&x| t.closed_neighborhood_mask(x))
        .collect();
    Hypergraph::new(set_of(0..t.vertex_count()), edges)
}

/// The same hypergraph assembled bottom-up along a decomposition: a single
/// vertex `x` contributes `{x}`; joining two parts through an origin `u`
/// adds `u` to the edge of each `X`-neighbor of `u`.
pub fn build_f_recursive(s: &SubdividedTree) -> Result<Hypergraph> {
    check_bitmask(s)?;
    fn assemble(t: &Graph, d: &Decomposition) -> BTreeMap<usize, VertexSet> {
        match &d.split {
            None => BTreeMap::from([(d.vertices[0], bit(d.vertices[0]))]),
            Some(split) => {
                let mut edges = assemble(t, &split.parts[0]);
                edges.extend(assemble(t, &split.parts[1]));
                for &x in t.neighbors(split.origin) {
                    *edges.get_mut(&x).expect("origin neighbors are X-vertices") |=
                        bit(split.origin);
                }
                edges
            }
        }
    }
    let edges = assemble(&s.tree, &s.decomposition())
        .into_values()
        .collect();
    Hypergraph::new(set_of(0..s.order()), edges)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn st(g: Graph) -> SubdividedTree {
        SubdividedTree::new(g).unwrap()
    }

    #[test]
    fn membership_examples() {
        assert_eq!(membership_in_s(&Graph::path(4)), None);
        assert_eq!(membership_in_s(&Graph::empty(1)), Some(vec![0]));
        assert_eq!(membership_in_s(&Graph::path(5)), Some(vec![0, 2, 4]));
        let s = Graph::subdivided_star(&[2, 4, 6]);
        let x = membership_in_s(&s).unwrap();
        assert!(x.contains(&0));
        assert!((0..s.vertex_count())
            .filter(|&v| s.is_leaf(v))
            .all(|v| x.contains(&v)));
        assert_eq!(membership_in_s(&Graph::star(3)), None);
        assert_eq!(membership_in_s(&Graph::subdivided_star(&[1, 1, 2])), None);
    }

    #[test]
    fn rank_examples() {
        assert_eq!(rank(&Graph::empty(1)).unwrap(), 1);
        assert_eq!(rank(&Graph::path(3)).unwrap(), 2);
        assert_eq!(rank(&Graph::path(7)).unwrap(), 3);
        assert_eq!(rank(&Graph::subdivided_star(&[2, 2, 2])).unwrap(), 4);
        assert!(rank(&Graph::path(4)).is_err());
    }

    #[test]
    fn path_ranks_follow_binary_length() {
        // P_n for odd n has rank floor(log2 n) + 1
        for n in (1..=15).step_by(2) {
            assert_eq!(
                rank(&Graph::path(n)).unwrap(),
                crate::count::floor_log2(n as u64) + 1,
                "P_{n}"
            );
        }
    }

    #[test]
    fn generated_members_up_to_seven() {
        let all = generate_s_upto(7).unwrap();
        let codes: Vec<Vec<u8>> = all.iter().map(|s| canonical_code(s.tree())).collect();
        let expected = [
            Graph::empty(1),
            Graph::path(3),
            Graph::path(5),
            Graph::path(7),
            Graph::subdivided_star(&[2, 2, 2]),
        ];
        assert_eq!(all.len(), expected.len());
        for g in expected {
            assert!(codes.contains(&canonical_code(&g)));
        }
        assert_eq!(generate_s_upto(1).unwrap().len(), 1);
        assert!(generate_s_upto(16).is_err());
    }

    #[test]
    fn min_rank_examples() {
        let (sub, k) = min_rank_substructure(&Graph::path(9)).unwrap().unwrap();
        assert_eq!(k, 4);
        assert_eq!(sub.pattern.order(), 9);
        let star = Graph::star(3);
        let (sub, k) = min_rank_substructure(&star).unwrap().unwrap();
        assert_eq!(k, 2);
        assert_eq!(sub.pattern.order(), 3);
        let middle = (0..3).find(|&v| !sub.pattern.is_x(v)).unwrap();
        assert_eq!(
            sub.embedding[middle], 0,
            "the middle of P_3 sits on the center"
        );
        sub.validate(&star).unwrap();
        assert!(min_rank_substructure(&Graph::path(6)).unwrap().is_none());
    }

    #[test]
    fn structure_values() {
        assert_eq!(
            gamma_prime_via_structure(&Graph::path(13)).unwrap(),
            Finite(4)
        );
        assert_eq!(
            gamma_prime_via_structure(&Graph::example_caterpillar()).unwrap(),
            Finite(2)
        );
        assert_eq!(
            gamma_prime_via_structure(&Graph::empty(1)).unwrap(),
            Finite(1)
        );
        assert!(gamma_prime_via_structure(&Graph::path(17)).is_err());
    }

    #[test]
    fn f_examples() {
        let p3 = st(Graph::path(3));
        assert_eq!(
            build_f(&p3).unwrap().edges(),
            &[set_of([0, 1]), set_of([1, 2])]
        );
        let p1 = st(Graph::empty(1));
        assert_eq!(build_f(&p1).unwrap().edges(), &[1]);
        let s = st(Graph::subdivided_star(&[2, 2, 2]));
        let mut a = build_f(&s).unwrap().edges().to_vec();
        let mut b = build_f_recursive(&s).unwrap().edges().to_vec();
        a.sort_unstable();
        b.sort_unstable();
        assert_eq!(a, b);
    }

    #[test]
    fn decomposition_shape() {
        let s = st(Graph::subdivided_star(&[2, 2, 2]));
        let d = s.decomposition();
        assert_eq!(d.rank, 4);
        let split = d.split.as_ref().unwrap();
        assert_eq!(split.parts[0].rank, 3);
        assert_eq!(
            split.parts[0].vertices.len() + split.parts[1].vertices.len() + 1,
            7
        );
    }

    #[test]
    fn certificate_round_trip() {
        let host = Graph::example_caterpillar();
        let (sub, _) = min_rank_substructure(&host).unwrap().unwrap();
        let text = sub.to_text();
        let back = Substructure::from_text(&text).unwrap();
        assert_eq!(back, sub);
        back.validate(&host).unwrap();
        let mut bad = sub.clone();
        bad.embedding.swap(0, 1);
        assert!(bad.validate(&host).is_err());
    }
}
