//! Closed-form values for paths, subdivided stars and caterpillars.

use serde::Serialize;

use crate::count::{ceil_log2, floor_log2, ExtendedCount, Finite, Infinite};
use crate::error::{Error, Result};
use crate::graph::{Game, Graph};

/// Value of `P_n`. Staller never wins the D-game on a path; in the S-game
/// she wins exactly on odd paths, in `⌊log₂ n⌋ + 1` moves.
pub fn path_value(n: usize, game: Game) -> Result<ExtendedCount> {
    if n == 0 {
        return Err(Error::invalid("path order must be positive"));
    }
    Ok(match game {
        Game::D => Infinite,
        Game::S if n % 2 == 1 => Finite(floor_log2(n as u64) + 1),
        Game::S => Infinite,
    })
}

/// `S(n_1, ..., n_l)` as recognized in a host graph.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct StarProfile {
    pub center: usize,
    /// Branch lengths, ascending.
    pub branch_lengths: Vec<usize>,
}

impl StarProfile {
    pub fn new(mut branch_lengths: Vec<usize>) -> Result<Self> {
        if branch_lengths.len() < 2 || branch_lengths.contains(&0) {
            return Err(Error::invalid(
                "a subdivided star needs at least two positive branches",
            ));
        }
        branch_lengths.sort_unstable();
        Ok(StarProfile {
            center: 0,
            branch_lengths,
        })
    }

    pub fn branches(&self) -> usize {
        self.branch_lengths.len()
    }

    pub fn order(&self) -> usize {
        1 + self.branch_lengths.iter().sum::<usize>()
    }

    pub fn is_all_even(&self) -> bool {
        self.branch_lengths.iter().all(|n| n % 2 == 0)
    }

    pub fn to_graph(&self) -> Graph {
        Graph::subdivided_star(&self.branch_lengths)
    }
}

/// Outcome of star recognition.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum StarShape {
    /// A path on the given number of vertices (at most two branches).
    Path(usize),
    Star(StarProfile),
}

/// Recognizes paths and subdivided stars: trees with at most one vertex of
/// degree three or more.
pub fn recognize_star(g: &Graph) -> Option<StarShape> {
    if !g.is_tree() {
        return None;
    }
    let n = g.vertex_count();
    let mut high = (0..n).filter(|&v| g.degree(v) >= 3);
    let Some(center) = high.next() else {
        return Some(StarShape::Path(n));
    };
    if high.next().is_some() {
        return None;
    }
    let mut lengths: Vec<usize> = g
        .neighbors(center)
        .iter()
        .map(|&first| {
            let (mut prev, mut cur, mut len) = (center, first, 1);
            while let Some(&next) = g.neighbors(cur).iter().find(|&&w| w != prev) {
                (prev, cur) = (cur, next);
                len += 1;
            }
            len
        })
        .collect();
    lengths.sort_unstable();
    Some(StarShape::Star(StarProfile {
        center,
        branch_lengths: lengths,
    }))
}

/// S-game value of a subdivided star, or the known bounds when it is open.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum StarValue {
    Exact { value: ExtendedCount },
    Open { lower: u32, upper: u32 },
}

impl StarValue {
    pub fn exact(self) -> Option<ExtendedCount> {
        match self {
            StarValue::Exact { value } => Some(value),
            StarValue::Open { .. } => None,
        }
    }
}

/// `γ'_SMB(S(n_1, ..., n_l))` by parity case.
pub fn star_value_sgame(p: &StarProfile) -> Result<StarValue> {
    let mut lengths = p.branch_lengths.clone();
    if lengths.len() < 2 || lengths.contains(&0) {
        return Err(Error::invalid(
            "a subdivided star needs at least two positive branches",
        ));
    }
    lengths.sort_unstable();
    let exact = |value| Ok(StarValue::Exact { value });
    if lengths.len() == 2 {
        return exact(path_value(p.order(), Game::S)?);
    }
    let odd: Vec<usize> = lengths.iter().copied().filter(|n| n % 2 == 1).collect();
    match odd.len() {
        0 if lengths.len() == 3 => exact(all_even3_value(lengths[0], lengths[1], lengths[2])?.0),
        0 => Ok(StarValue::Open {
            lower: ceil_log2(p.order() as u64),
            upper: all_even_upper_bound(&lengths)?,
        }),
        1 => exact(Infinite),
        _ => exact(Finite(ceil_log2((odd[0] + odd[1] + 1) as u64))),
    }
}

/// Which of the two all-even values a three-branch star takes.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum AllEvenTag {
    T0,
    T1,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct TraceStep {
    pub branches: [usize; 3],
    pub reducible: bool,
    pub k: u32,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AllEvenClass {
    pub tag: AllEvenTag,
    /// Reduction steps from the input down to a non-reducible triple.
    pub trace: Vec<TraceStep>,
}

/// `γ'_SMB(S(n_1, n_2, n_3))` for even branches: `⌈log₂ n⌉`, plus one for
/// the class `T1`.
///
/// With `n = n_1 + n_2 + n_3 + 1` and `k = ⌈log₂ n⌉`, the star is reducible
/// when `⌈log₂ n_3⌉ = k`. A non-reducible star is in `T1` iff
/// `⌈log₂(n_1 + n_2 + 1)⌉ = k`. A reducible one is in `T1` iff its reduction
/// `S(n_1, n_2, n_3 - 2^{k-1})` is, and `⌈log₂(n - 2^{k-2})⌉ = k`.
pub fn all_even3_value(n1: usize, n2: usize, n3: usize) -> Result<(ExtendedCount, AllEvenClass)> {
    let mut b = [n1, n2, n3];
    if b.iter().any(|&x| x == 0 || x % 2 == 1) {
        return Err(Error::invalid(format!(
            "branches {b:?} are not all even and positive"
        )));
    }
    b.sort_unstable();
    let k0 = ceil_log2((b.iter().sum::<usize>() + 1) as u64);
    let mut trace = Vec::new();
    let mut sides = Vec::new();
    loop {
        let n = (b.iter().sum::<usize>() + 1) as u64;
        let k = ceil_log2(n);
        let reducible = ceil_log2(b[2] as u64) == k;
        trace.push(TraceStep {
            branches: b,
            reducible,
            k,
        });
        if !reducible {
            let mut t1 = ceil_log2((b[0] + b[1] + 1) as u64) == k;
            for side in sides.into_iter().rev() {
                t1 = t1 && side;
            }
            let tag = if t1 { AllEvenTag::T1 } else { AllEvenTag::T0 };
            let value = Finite(k0 + u32::from(t1));
            return Ok((value, AllEvenClass { tag, trace }));
        }
        sides.push(ceil_log2(n - (1u64 << (k - 2))) == k);
        b[2] -= 1usize << (k - 1);
        b.sort_unstable();
    }
}

/// Upper bound on `γ'_SMB` of an all-even star with at least three branches:
/// with `n_1 ≥ ... ≥ n_l`, the maximum of `i + ⌈log₂ n_i⌉` over `i ≤ l-2`
/// and `l - 2 + ⌈log₂(n_{l-1} + n_l + 1)⌉`.
pub fn all_even_upper_bound(branches: &[usize]) -> Result<u32> {
    if branches.len() < 3 {
        return Err(Error::invalid("the bound needs at least three branches"));
    }
    if branches.iter().any(|&x| x == 0 || x % 2 == 1) {
        return Err(Error::invalid("the bound applies to all-even stars only"));
    }
    let mut d = branches.to_vec();
    d.sort_unstable_by(|a, b| b.cmp(a));
    let l = d.len();
    let head = (0..l - 2).map(|i| i as u32 + 1 + ceil_log2(d[i] as u64));
    let tail = (l - 2) as u32 + ceil_log2((d[l - 2] + d[l - 1] + 1) as u64);
    Ok(head.chain([tail]).max().unwrap())
}

/// Branch lengths of `Z(l, p)`, longest first.
pub fn z_family_branches(l: u32, p: u32) -> Result<Vec<usize>> {
    if l < 3 {
        return Err(Error::invalid("Z(l, p) needs l >= 3"));
    }
    if p < 2 {
        return Err(Error::invalid("Z(l, p) needs p >= 2"));
    }
    if l + p > 40 {
        return Err(Error::cap("Z(l, p) with l + p", (l + p) as usize, 40));
    }
    let mut b: Vec<usize> = (1..=l - 2).map(|i| 1usize << (l + p - i - 2)).collect();
    b.push((1usize << p) - 2);
    b.push(2);
    Ok(b)
}

/// `Z(l, p)` and its value `l + p - 1`.
pub fn z_family(l: u32, p: u32) -> Result<(Graph, u32)> {
    let b = z_family_branches(l, p)?;
    Ok((Graph::subdivided_star(&b), l + p - 1))
}

/// Spine, leaf counts and clean odd maximal paths of a caterpillar.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CaterpillarProfile {
    pub spine: Vec<usize>,
    pub leaves_at: Vec<usize>,
    /// Leaf-to-leaf paths of odd order.
    pub p_o: Vec<Vec<usize>>,
    /// Members of `p_o` whose interior, past two vertices at each end, has
    /// host degree 2.
    pub p_co: Vec<Vec<usize>>,
    pub p: Option<usize>,
    pub p_star: Option<usize>,
    pub common_vertex_exists: bool,
}

/// Recognizes trees on at least three vertices whose non-leaf vertices
/// induce a path.
pub fn recognize_caterpillar(g: &Graph) -> Option<CaterpillarProfile> {
    let n = g.vertex_count();
    if n < 3 || !g.is_tree() {
        return None;
    }
    let inner: Vec<usize> = (0..n).filter(|&v| !g.is_leaf(v)).collect();
    let is_inner = |v: usize| !g.is_leaf(v);
    let inner_degree = |v: usize| g.neighbors(v).iter().filter(|&&w| is_inner(w)).count();
    if inner.iter().any(|&v| inner_degree(v) > 2) {
        return None;
    }
    let start = *inner.iter().find(|&&v| inner_degree(v) <= 1)?;
    let mut spine = vec![start];
    let mut prev = usize::MAX;
    let mut cur = start;
    while let Some(&next) = g.neighbors(cur).iter().find(|&&w| w != prev && is_inner(w)) {
        spine.push(next);
        (prev, cur) = (cur, next);
    }
    let leaves_at = spine
        .iter()
        .map(|&v| g.neighbors(v).iter().filter(|&&w| g.is_leaf(w)).count())
        .collect();

    let leaves: Vec<usize> = (0..n).filter(|&v| g.is_leaf(v)).collect();
    let mut p_o = Vec::new();
    for (i, &a) in leaves.iter().enumerate() {
        for &b in &leaves[i + 1..] {
            let path = g.tree_path(a, b).expect("trees are connected");
            if path.len() % 2 == 1 {
                p_o.push(path);
            }
        }
    }
    let clean = |path: &Vec<usize>| {
        let k = path.len();
        // u_3 .. u_{k-2} in 1-based positions
        (2..k.saturating_sub(2)).all(|i| g.degree(path[i]) == 2)
    };
    let p_co: Vec<Vec<usize>> = p_o.iter().filter(|p| clean(p)).cloned().collect();
    let p = p_co.iter().map(Vec::len).min();
    let common = |paths: &mut dyn Iterator<Item = &Vec<usize>>| {
        let mut inter: Option<Vec<bool>> = None;
        for path in paths {
            let mut mark = vec![false; n];
            for &v in path {
                mark[v] = true;
            }
            inter = Some(match inter {
                None => mark,
                Some(cur) => cur.iter().zip(&mark).map(|(a, b)| *a && *b).collect(),
            });
        }
        inter.is_some_and(|m| m.contains(&true))
    };
    let common_vertex_exists = common(&mut p_co.iter());
    let p_star = if p_co.is_empty() || common_vertex_exists {
        None
    } else {
        let mut orders: Vec<usize> = p_co.iter().map(Vec::len).collect();
        orders.sort_unstable();
        orders.dedup();
        orders
            .into_iter()
            .find(|&s| !common(&mut p_co.iter().filter(|q| q.len() <= s)))
    };
    Some(CaterpillarProfile {
        spine,
        leaves_at,
        p_o,
        p_co,
        p,
        p_star,
        common_vertex_exists,
    })
}

/// `(γ_SMB, γ'_SMB)` of a caterpillar: `⌈log₂ p*⌉` and `⌈log₂ p⌉`, infinite
/// when there is no clean odd path, and for the D-game also when the clean
/// odd paths share a vertex.
pub fn caterpillar_values(profile: &CaterpillarProfile) -> (ExtendedCount, ExtendedCount) {
    let log = |x: Option<usize>| x.map_or(Infinite, |x| Finite(ceil_log2(x as u64)));
    (log(profile.p_star), log(profile.p))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn path_examples() {
        assert_eq!(path_value(13, Game::S).unwrap(), Finite(4));
        assert_eq!(path_value(6, Game::S).unwrap(), Infinite);
        assert_eq!(path_value(1, Game::S).unwrap(), Finite(1));
        assert_eq!(path_value(9, Game::D).unwrap(), Infinite);
        assert!(path_value(0, Game::S).is_err());
    }

    #[test]
    fn star_recognition() {
        let Some(StarShape::Star(p)) = recognize_star(&Graph::star(3)) else {
            panic!()
        };
        assert_eq!((p.center, p.branch_lengths), (0, vec![1, 1, 1]));
        let g = Graph::subdivided_star(&[6, 2, 4]);
        assert_eq!(g.vertex_count(), 13);
        let Some(StarShape::Star(p)) = recognize_star(&g) else {
            panic!()
        };
        assert_eq!(p.branch_lengths, vec![2, 4, 6]);
        assert_eq!(recognize_star(&Graph::path(7)), Some(StarShape::Path(7)));
        assert_eq!(recognize_star(&Graph::example_caterpillar()), None);
    }

    fn star(b: &[usize]) -> StarValue {
        star_value_sgame(&StarProfile::new(b.to_vec()).unwrap()).unwrap()
    }

    #[test]
    fn star_cases() {
        assert_eq!(star(&[1, 1, 2]).exact(), Some(Finite(2)));
        assert_eq!(star(&[1, 2, 2]).exact(), Some(Infinite));
        assert_eq!(star(&[3, 5, 8]).exact(), Some(Finite(4)));
        assert_eq!(star(&[1, 3, 2]).exact(), Some(Finite(3)));
        assert_eq!(star(&[2, 2, 2]).exact(), Some(Finite(4)));
        assert_eq!(star(&[2, 2, 2, 2]), StarValue::Open { lower: 4, upper: 5 });
        assert_eq!(star(&[2, 4]).exact(), Some(Finite(3)));
    }

    #[test]
    fn all_even_examples() {
        let (v, c) = all_even3_value(2, 2, 2).unwrap();
        assert_eq!((v, c.tag), (Finite(4), AllEvenTag::T1));
        let (v, c) = all_even3_value(2, 2, 4).unwrap();
        assert_eq!((v, c.tag), (Finite(4), AllEvenTag::T0));
        let (v, c) = all_even3_value(2, 2, 10).unwrap();
        assert_eq!((v, c.tag), (Finite(5), AllEvenTag::T1));
        assert_eq!(c.trace.len(), 2);
        assert!(c.trace[0].reducible);
        assert_eq!(c.trace[1].branches, [2, 2, 2]);
        assert!(all_even3_value(2, 3, 4).is_err());
        assert!(all_even3_value(0, 2, 4).is_err());
    }

    #[test]
    fn equal_branches_take_the_larger_value() {
        for k in 1..=255usize {
            let (v, _) = all_even3_value(2 * k, 2 * k, 2 * k).unwrap();
            assert_eq!(v, Finite(ceil_log2(4 * k as u64 + 1) + 1), "k={k}");
        }
    }

    #[test]
    fn upper_bound_examples() {
        assert_eq!(all_even_upper_bound(&[4, 2, 2]).unwrap(), 4);
        assert_eq!(all_even_upper_bound(&[2, 4, 8, 2]).unwrap(), 5);
        assert_eq!(all_even_upper_bound(&[2, 2, 2, 2]).unwrap(), 5);
        assert!(all_even_upper_bound(&[2, 2, 3]).is_err());
    }

    #[test]
    fn z_examples() {
        assert_eq!(z_family_branches(3, 2).unwrap(), vec![4, 2, 2]);
        assert_eq!(z_family_branches(4, 2).unwrap(), vec![8, 4, 2, 2]);
        assert_eq!(z_family_branches(3, 3).unwrap(), vec![8, 6, 2]);
        assert!(z_family_branches(2, 5).is_err());
        assert!(z_family_branches(3, 1).is_err());
        for l in 3..=8u32 {
            for p in 2..=10 - l {
                let (g, expected) = z_family(l, p).unwrap();
                let b = z_family_branches(l, p).unwrap();
                assert_eq!(g.vertex_count(), (1 << (l + p - 2)) + 1);
                assert_eq!(all_even_upper_bound(&b).unwrap(), expected);
                assert_eq!(ceil_log2(g.vertex_count() as u64), expected);
            }
        }
    }

    #[test]
    fn caterpillar_examples() {
        let c = recognize_caterpillar(&Graph::example_caterpillar()).unwrap();
        assert_eq!(c.spine, (0..8).collect::<Vec<_>>());
        assert_eq!(c.leaves_at, vec![1, 0, 2, 1, 0, 0, 0, 1]);
        assert_eq!(c.p_co.len(), 4);
        assert_eq!((c.p, c.p_star), (Some(3), Some(7)));
        assert_eq!(caterpillar_values(&c), (Finite(3), Finite(2)));

        let c = recognize_caterpillar(&Graph::star(3)).unwrap();
        assert_eq!(c.p_co.len(), 3);
        assert!(c.common_vertex_exists);
        assert_eq!(c.p, Some(3));
        assert_eq!(caterpillar_values(&c), (Infinite, Finite(2)));

        let c = recognize_caterpillar(&Graph::path(6)).unwrap();
        assert!(c.p_co.is_empty());
        assert_eq!(caterpillar_values(&c), (Infinite, Infinite));

        assert!(recognize_caterpillar(&Graph::subdivided_star(&[2, 2, 2])).is_none());
        assert!(recognize_caterpillar(&Graph::path(2)).is_none());
    }
}
