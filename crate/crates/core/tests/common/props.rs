//! Property checks shared by the property tests and the acceptance run.
//! Each returns the list of violations found.

use std::collections::BTreeSet;

use rand::Rng;
use smbd::count::ExtendedCount;
use smbd::graph::support_classification;
use smbd::graph::to_graph6;
use smbd::graph::trees::random_tree;
use smbd::graph::SupportTag;
use smbd::hypergraph::Hypergraph;
use smbd::{Graph, Solver, SolverConfig};

use super::{random_hypergraph, rng, BruteGame};

fn set(edges: &[u64]) -> BTreeSet<u64> {
    edges.iter().copied().collect()
}

/// `H - X` and `H | X` against their set-level definitions.
pub fn delete_shrink(cases: usize, seed: u64) -> Vec<String> {
    let mut r = rng(seed);
    let mut bad = Vec::new();
    for i in 0..cases {
        let n = r.gen_range(1..=8);
        let m = r.gen_range(1..=7);
        let (universe, edges) = random_hypergraph(&mut r, n, m);
        let x = r.gen::<u64>() & universe;
        let h = Hypergraph::new(universe, edges.clone()).unwrap();

        let d = h.delete(x).unwrap();
        let want: Vec<u64> = edges.iter().copied().filter(|&e| e & x == 0).collect();
        if d.universe() != universe & !x || d.edges() != want.as_slice() || d.maker_won() {
            bad.push(format!("delete case {i}: {edges:?} - {x:#b}"));
        }

        let s = h.shrink(x).unwrap();
        let want: BTreeSet<u64> = edges.iter().map(|&e| e & !x).filter(|&e| e != 0).collect();
        let won = edges.iter().any(|&e| e & !x == 0);
        if s.universe() != universe & !x || set(s.edges()) != want || s.maker_won() != won {
            bad.push(format!("shrink case {i}: {edges:?} | {x:#b}"));
        }

        // claiming vertices one by one agrees with claiming them at once
        let mut stepwise = h.clone();
        for v in (0..n).filter(|&v| x >> v & 1 == 1) {
            stepwise = stepwise.shrink(1 << v).unwrap();
        }
        if set(stepwise.edges()) != set(s.edges()) || stepwise.maker_won() != s.maker_won() {
            bad.push(format!("stepwise shrink case {i}"));
        }
    }
    bad
}

fn values(solver: &mut Solver, h: &Hypergraph) -> (ExtendedCount, ExtendedCount) {
    (
        solver.maker_start_value(h).unwrap().value,
        solver.breaker_start_value(h).unwrap().value,
    )
}

/// Pruned and paranoid search against the brute-force game.
pub fn solver_vs_brute(cases: usize, seed: u64) -> Vec<String> {
    let mut r = rng(seed);
    let mut pruned = Solver::default();
    let mut paranoid = Solver::new(SolverConfig::paranoid());
    let mut bad = Vec::new();
    for i in 0..cases {
        let n = r.gen_range(1..=7);
        let m = r.gen_range(1..=6);
        let (universe, edges) = random_hypergraph(&mut r, n, m);
        let h = Hypergraph::new(universe, edges.clone()).unwrap();
        let mut brute = BruteGame::new(universe, &edges);
        let want = (brute.maker_first(), brute.breaker_first());
        let a = values(&mut pruned, &h);
        let b = values(&mut paranoid, &h);
        if a != want || b != want {
            bad.push(format!(
                "case {i} {edges:?}: brute {want:?} pruned {a:?} paranoid {b:?}"
            ));
        }
    }
    bad
}

/// Normalizing, duplicating an edge or adding a superset of an edge does
/// not change either value.
pub fn normalization_invariance(cases: usize, seed: u64) -> Vec<String> {
    let mut r = rng(seed);
    let mut solver = Solver::default();
    let mut bad = Vec::new();
    for i in 0..cases {
        let n = r.gen_range(1..=9);
        let m = r.gen_range(1..=7);
        let (universe, edges) = random_hypergraph(&mut r, n, m);
        let h = Hypergraph::new(universe, edges.clone()).unwrap();
        let base = values(&mut solver, &h);
        let normal = h.normalize();
        let mut padded = edges.clone();
        padded.push(edges[0]);
        padded.push(edges[0] | (r.gen::<u64>() & universe));
        let padded = Hypergraph::new(universe, padded).unwrap();
        if !normal.is_normalized()
            || values(&mut solver, &normal) != base
            || values(&mut solver, &padded) != base
        {
            bad.push(format!("case {i}: {edges:?}"));
        }
    }
    bad
}

/// `w^M(H) = min_i w^M(H_i)` and `w^M(H_1) <= w^B(H) <= w^M(H_2)` for
/// components ordered by their Maker-start values.
pub fn component_bounds(cases: usize, seed: u64) -> Vec<String> {
    let mut r = rng(seed);
    let mut solver = Solver::default();
    let mut bad = Vec::new();
    for i in 0..cases {
        // two or three blocks on disjoint vertex ranges
        let blocks = r.gen_range(2..=3);
        let mut edges = Vec::new();
        let mut offset = 0;
        for _ in 0..blocks {
            let n = r.gen_range(1..=4);
            let m = r.gen_range(1..=3);
            let (_, es) = random_hypergraph(&mut r, n, m);
            edges.extend(es.into_iter().map(|e| e << offset));
            offset += n;
        }
        let universe = (1u64 << offset) - 1;
        let h = Hypergraph::new(universe, edges.clone()).unwrap();
        let (maker, breaker) = values(&mut solver, &h);
        let mut parts: Vec<ExtendedCount> = h
            .normalize()
            .components()
            .iter()
            .map(|c| solver.maker_start_value(c).unwrap().value)
            .collect();
        parts.sort();
        let first = parts[0];
        let second = parts.get(1).copied().unwrap_or(ExtendedCount::Infinite);
        if maker != first || breaker < first || breaker > second {
            bad.push(format!(
                "case {i}: {edges:?} maker {maker} breaker {breaker} parts {parts:?}"
            ));
        }
    }
    bad
}

/// Fewer or larger winning sets never help Maker.
pub fn monotonicity(cases: usize, seed: u64) -> Vec<String> {
    let mut r = rng(seed);
    let mut solver = Solver::default();
    let mut bad = Vec::new();
    for i in 0..cases {
        let n = r.gen_range(2..=8);
        let m = r.gen_range(2..=6);
        let (universe, edges) = random_hypergraph(&mut r, n, m);
        let big = Hypergraph::new(universe, edges.clone()).unwrap();
        let keep: Vec<u64> = edges.iter().copied().filter(|_| r.gen_bool(0.6)).collect();
        let fewer = Hypergraph::new(universe, keep).unwrap();
        let grown: Vec<u64> = edges
            .iter()
            .map(|&e| e | (r.gen::<u64>() & universe))
            .collect();
        let grown = Hypergraph::new(universe, grown).unwrap();
        let (bm, bb) = values(&mut solver, &big);
        for (name, h) in [("subfamily", &fewer), ("supersets", &grown)] {
            let (m2, b2) = values(&mut solver, h);
            if m2 < bm || b2 < bb {
                bad.push(format!("case {i} {name}: {edges:?}"));
            }
        }
    }
    bad
}

fn without_pair(g: &Graph, a: usize, b: usize) -> Graph {
    g.without(&[a, b]).0
}

/// The three cut-vertex inequalities on random trees.
pub fn cut_inequalities(cases: usize, max_n: usize, seed: u64) -> Vec<String> {
    let mut r = rng(seed);
    let mut solver = Solver::default();
    let mut bad = Vec::new();
    for i in 0..cases {
        let n = r.gen_range(3..=max_n);
        let t = random_tree(n, &mut r);
        let id = to_graph6(&t);
        let s = solver.gamma_smb_prime(&t).unwrap();
        let d = solver.gamma_smb(&t).unwrap();
        let tags = support_classification(&t);
        for v in (0..n).filter(|&v| tags[v] == SupportTag::WeakSupport) {
            let leaf = *t.neighbors(v).iter().find(|&&w| t.degree(w) == 1).unwrap();
            let g2 = without_pair(&t, v, leaf);
            if g2.vertex_count() == 0 {
                continue;
            }
            let s2 = solver.gamma_smb_prime(&g2).unwrap();
            let d2 = solver.gamma_smb(&g2).unwrap();
            if !(s.pred() <= s2 && s2 <= s && d2 <= d) {
                bad.push(format!("case {i} {id} weak support {v}: part (i)"));
            }
            if t.degree(v) == 2 && d.pred() > d2 {
                bad.push(format!("case {i} {id} weak support {v}: part (ii)"));
            }
        }
        for v in (0..n).filter(|&v| t.degree(v) >= 2) {
            let (rest, _) = t.without(&[v]);
            let mut parts: Vec<ExtendedCount> = rest
                .components()
                .iter()
                .map(|c| solver.gamma_smb_prime(&rest.induced(c)).unwrap())
                .collect();
            parts.sort();
            if s > parts[1].succ() {
                bad.push(format!("case {i} {id} cut vertex {v}: part (iii)"));
            }
        }
    }
    bad
}
