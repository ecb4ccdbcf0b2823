use smbd::count::{ceil_log2, Finite, Infinite};
use smbd::formula::{
    all_even3_value, all_even_upper_bound, caterpillar_values, path_value, recognize_caterpillar,
    recognize_star, star_value_sgame, z_family, z_family_branches, StarProfile, StarShape,
    StarValue,
};
use smbd::graph::trees::enumerate_trees;
use smbd::graph::{forest_perfect_matching, to_graph6};
use smbd::harness::partitions;
use smbd::{Game, Graph, Solver, SolverConfig};

fn stars_upto(n: usize, min_branches: usize) -> Vec<Vec<usize>> {
    (3..=n)
        .flat_map(|m| partitions(m - 1, min_branches))
        .collect()
}

#[test]
fn paths_match_solver() {
    let mut solver = Solver::default();
    for n in 1..=14 {
        let g = Graph::path(n);
        assert_eq!(
            path_value(n, Game::S).unwrap(),
            solver.gamma_smb_prime(&g).unwrap(),
            "P_{n}"
        );
        assert_eq!(
            path_value(n, Game::D).unwrap(),
            solver.gamma_smb(&g).unwrap(),
            "P_{n}"
        );
    }
}

#[test]
fn stars_with_an_odd_branch_match_solver() {
    let mut solver = Solver::default();
    let mut checked = 0;
    for b in stars_upto(14, 3) {
        if b.iter().all(|x| x % 2 == 0) {
            continue;
        }
        let g = Graph::subdivided_star(&b);
        let value = star_value_sgame(&StarProfile::new(b.clone()).unwrap())
            .unwrap()
            .exact()
            .unwrap();
        assert_eq!(value, solver.gamma_smb_prime(&g).unwrap(), "{b:?}");
        checked += 1;
    }
    assert!(checked > 100);
}

#[test]
fn all_even_three_branches_match_paranoid_solver() {
    let mut solver = Solver::new(SolverConfig::paranoid());
    for b in stars_upto(15, 3) {
        if b.len() != 3 || b.iter().any(|x| x % 2 == 1) {
            continue;
        }
        let (v, _) = all_even3_value(b[0], b[1], b[2]).unwrap();
        assert_eq!(
            v,
            solver.gamma_smb_prime(&Graph::subdivided_star(&b)).unwrap(),
            "{b:?}"
        );
    }
}

#[test]
fn wider_all_even_stars_stay_within_bounds() {
    let mut solver = Solver::default();
    for b in stars_upto(13, 4) {
        if b.len() > 5 || b.iter().any(|x| x % 2 == 1) {
            continue;
        }
        let p = StarProfile::new(b.clone()).unwrap();
        let StarValue::Open { lower, upper } = star_value_sgame(&p).unwrap() else {
            panic!("{b:?} should be open")
        };
        assert_eq!(upper, all_even_upper_bound(&b).unwrap());
        assert_eq!(lower, ceil_log2(p.order() as u64));
        let v = solver
            .gamma_smb_prime(&p.to_graph())
            .unwrap()
            .finite()
            .unwrap();
        assert!(
            lower <= v && v <= upper,
            "{b:?}: {v} not in [{lower},{upper}]"
        );
    }
}

#[test]
fn z_family_is_tight() {
    for l in 3..=8u32 {
        for p in 2..=10 - l {
            let b = z_family_branches(l, p).unwrap();
            let (g, expected) = z_family(l, p).unwrap();
            assert_eq!(all_even_upper_bound(&b).unwrap(), expected);
            assert_eq!(ceil_log2(g.vertex_count() as u64), expected);
            assert_eq!(expected, l + p - 1);
        }
    }
    let (g, expected) = z_family(3, 2).unwrap();
    assert_eq!(
        Solver::default().gamma_smb_prime(&g).unwrap(),
        Finite(expected)
    );
}

#[test]
fn caterpillars_match_solver_in_both_games() {
    let mut solver = Solver::default();
    let mut checked = 0;
    for n in 3..=13 {
        for t in enumerate_trees(n).unwrap() {
            let Some(c) = recognize_caterpillar(&t) else {
                continue;
            };
            let values = caterpillar_values(&c);
            let solved = (
                solver.gamma_smb(&t).unwrap(),
                solver.gamma_smb_prime(&t).unwrap(),
            );
            assert_eq!(values, solved, "{}", to_graph6(&t));
            // no clean odd path exactly when a perfect matching exists
            assert_eq!(
                c.p_co.is_empty(),
                forest_perfect_matching(&t).unwrap().is_some()
            );
            checked += 1;
        }
    }
    // 1 + sum over n = 4..=13 of 2^(n-4) + 2^(floor(n/2)-2)
    assert_eq!(checked, 1086);
    assert_eq!(
        caterpillar_values(&recognize_caterpillar(&Graph::example_caterpillar()).unwrap()),
        (Finite(3), Finite(2))
    );
}

#[test]
fn overlapping_closed_forms_agree() {
    for n in 3..=13 {
        for t in enumerate_trees(n).unwrap() {
            let Some(c) = recognize_caterpillar(&t) else {
                continue;
            };
            let (d, s) = caterpillar_values(&c);
            match recognize_star(&t) {
                Some(StarShape::Path(m)) => {
                    assert_eq!(d, path_value(m, Game::D).unwrap());
                    assert_eq!(s, path_value(m, Game::S).unwrap());
                }
                Some(StarShape::Star(p)) => {
                    if let StarValue::Exact { value } = star_value_sgame(&p).unwrap() {
                        assert_eq!(s, value, "{:?}", p.branch_lengths);
                    }
                }
                None => {}
            }
        }
    }
    assert_eq!(path_value(2, Game::S).unwrap(), Infinite);
}
