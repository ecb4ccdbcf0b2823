#![allow(dead_code)]

use std::collections::{BTreeSet, HashMap};

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use smbd::count::{ExtendedCount, Finite, Infinite};
use smbd::Graph;

/// Plain minimax over claimed sets: no normalization, no reductions.
pub struct BruteGame {
    universe: u64,
    edges: Vec<u64>,
    memo: HashMap<(u64, u64, bool), ExtendedCount>,
}

impl BruteGame {
    pub fn new(universe: u64, edges: &[u64]) -> Self {
        BruteGame {
            universe,
            edges: edges.to_vec(),
            memo: HashMap::new(),
        }
    }

    pub fn graph(g: &Graph) -> Self {
        let n = g.vertex_count();
        let edges: Vec<u64> = (0..n)
            .map(|v| g.neighbors(v).iter().fold(1u64 << v, |s, &w| s | 1u64 << w))
            .collect();
        BruteGame::new((1u64 << n) - 1, &edges)
    }

    /// Maker's number of moves with Maker to move.
    pub fn maker_first(&mut self) -> ExtendedCount {
        self.value(0, 0, true)
    }

    pub fn breaker_first(&mut self) -> ExtendedCount {
        self.value(0, 0, false)
    }

    fn value(&mut self, maker: u64, breaker: u64, maker_turn: bool) -> ExtendedCount {
        if let Some(&v) = self.memo.get(&(maker, breaker, maker_turn)) {
            return v;
        }
        let free = self.universe & !(maker | breaker);
        let moves = (0..64).filter(|&v| free >> v & 1 == 1);
        let result = if maker_turn {
            let mut best = Infinite;
            for v in moves.collect::<Vec<_>>() {
                let m = maker | 1u64 << v;
                let r = if self.edges.iter().any(|&e| e & !m == 0) {
                    Finite(1)
                } else {
                    self.value(m, breaker, false).succ()
                };
                best = best.min(r);
            }
            best
        } else {
            let mut worst: Option<ExtendedCount> = None;
            for v in moves.collect::<Vec<_>>() {
                let r = self.value(maker, breaker | 1u64 << v, true);
                worst = Some(worst.map_or(r, |w| w.max(r)));
            }
            worst.unwrap_or(Infinite)
        };
        self.memo.insert((maker, breaker, maker_turn), result);
        result
    }
}

pub fn rng(seed: u64) -> StdRng {
    StdRng::seed_from_u64(seed)
}

/// Random hypergraph on `0..n` with `m` nonempty edges (possibly repeated).
pub fn random_hypergraph(rng: &mut StdRng, n: usize, m: usize) -> (u64, Vec<u64>) {
    let universe = (1u64 << n) - 1;
    let edges = (0..m)
        .map(|_| loop {
            let e = rng.gen::<u64>() & universe;
            if e != 0 {
                break e;
            }
        })
        .collect();
    (universe, edges)
}

/// Prüfer decoding by the textbook smallest-leaf rule.
pub fn prufer_decode(seq: &[usize]) -> Vec<(usize, usize)> {
    let n = seq.len() + 2;
    let mut degree = vec![1; n];
    for &s in seq {
        degree[s] += 1;
    }
    let mut edges = Vec::new();
    for &s in seq {
        let leaf = (0..n).find(|&v| degree[v] == 1).unwrap();
        edges.push((leaf, s));
        degree[leaf] -= 1;
        degree[s] -= 1;
    }
    let rest: Vec<usize> = (0..n).filter(|&v| degree[v] == 1).collect();
    edges.push((rest[0], rest[1]));
    edges
}

/// Minimum over all roots of the parenthesized rooted form.
pub fn brute_canonical(n: usize, edges: &[(usize, usize)]) -> String {
    let mut adj = vec![Vec::new(); n];
    for &(a, b) in edges {
        adj[a].push(b);
        adj[b].push(a);
    }
    fn rooted(adj: &[Vec<usize>], v: usize, parent: usize) -> String {
        let mut kids: Vec<String> = adj[v]
            .iter()
            .filter(|&&w| w != parent)
            .map(|&w| rooted(adj, w, v))
            .collect();
        kids.sort();
        format!("({})", kids.concat())
    }
    (0..n).map(|r| rooted(&adj, r, usize::MAX)).min().unwrap()
}

/// Isomorphism classes of trees on `n` vertices via all Prüfer sequences.
pub fn prufer_tree_count(n: usize) -> usize {
    if n <= 2 {
        return 1;
    }
    let len = n - 2;
    let mut seq = vec![0; len];
    let mut classes = BTreeSet::new();
    loop {
        classes.insert(brute_canonical(n, &prufer_decode(&seq)));
        let mut i = 0;
        while i < len {
            seq[i] += 1;
            if seq[i] < n {
                break;
            }
            seq[i] = 0;
            i += 1;
        }
        if i == len {
            break;
        }
    }
    classes.len()
}

/// Unrooted tree counts `t(1..=max)` by Otter's formula on top of the
/// rooted-tree recurrence.
pub fn otter_counts(max: usize) -> Vec<u128> {
    let mut r = vec![0u128; max + 1];
    r[1] = 1;
    for n in 1..max {
        // (n) r(n+1) = sum_{k=1}^{n} (sum_{d | k} d r(d)) r(n-k+1)
        let mut total = 0u128;
        for k in 1..=n {
            let s: u128 = (1..=k)
                .filter(|d| k % d == 0)
                .map(|d| d as u128 * r[d])
                .sum();
            total += s * r[n - k + 1];
        }
        r[n + 1] = total / n as u128;
    }
    // t(n) = r(n) - sum_{i<j, i+j=n} r(i) r(j) - [n even] C(r(n/2), 2)
    let mut t = vec![0u128; max + 1];
    for n in 1..=max {
        let unordered: u128 = (1..n).filter(|&i| i < n - i).map(|i| r[i] * r[n - i]).sum();
        let same = if n % 2 == 0 {
            r[n / 2] * (r[n / 2].saturating_sub(1)) / 2
        } else {
            0
        };
        t[n] = r[n] - unordered - same;
    }
    t
}

/// Whether `g` has a perfect matching, by trying every partner of the
/// smallest unmatched vertex.
pub fn brute_perfect_matching(g: &Graph) -> bool {
    fn go(g: &Graph, free: u64) -> bool {
        if free == 0 {
            return true;
        }
        let v = free.trailing_zeros() as usize;
        g.neighbors(v)
            .iter()
            .any(|&w| free >> w & 1 == 1 && go(g, free & !(1u64 << v) & !(1u64 << w)))
    }
    let n = g.vertex_count();
    go(g, (1u64 << n) - 1)
}

pub mod props;
