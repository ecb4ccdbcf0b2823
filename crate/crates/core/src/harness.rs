//! Result records, formula dispatch, and the verification sweeps behind
//! the command-line tool.

use std::time::Instant;

use rayon::prelude::*;
use serde::Serialize;

use crate::count::{ExtendedCount, Finite, Infinite};
use crate::error::{Error, Result};
use crate::families::min_rank_substructure;
use crate::formula::{
    caterpillar_values, path_value, recognize_caterpillar, recognize_star, star_value_sgame,
    StarShape, StarValue,
};
use crate::graph::trees::{canonical_tree, enumerate_trees};
use crate::graph::{staller_wins, to_graph6, Game, Graph};
use crate::solver::{Solver, SolverConfig};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Method {
    Solver,
    Formula,
    Structure,
}

/// One graph's values as reported by one method. Unknown values are `null`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ResultRecord {
    pub graph: String,
    pub family: Family,
    pub gamma_smb: Option<ExtendedCount>,
    pub gamma_smb_prime: Option<ExtendedCount>,
    pub method: Method,
    pub time_ms: f64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub interval: Option<[u32; 2]>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub status: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub certificate: Option<String>,
}

impl ResultRecord {
    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("records serialize")
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Family {
    Path,
    Star,
    Caterpillar,
    Tree,
    Forest,
    Graph,
}

impl Family {
    pub fn of(g: &Graph) -> Family {
        if g.is_tree() {
            match recognize_star(g) {
                Some(StarShape::Path(_)) => Family::Path,
                Some(StarShape::Star(_)) => Family::Star,
                None if recognize_caterpillar(g).is_some() => Family::Caterpillar,
                None => Family::Tree,
            }
        } else if g.is_forest() {
            Family::Forest
        } else {
            Family::Graph
        }
    }
}

/// graph6 of the canonical form for trees, of the input otherwise.
pub fn graph_id(g: &Graph) -> String {
    if g.is_tree() {
        to_graph6(&canonical_tree(g))
    } else {
        to_graph6(g)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GameSelection {
    D,
    S,
    Both,
}

impl GameSelection {
    fn d(self) -> bool {
        self != GameSelection::S
    }

    fn s(self) -> bool {
        self != GameSelection::D
    }
}

fn elapsed_ms(start: Instant) -> f64 {
    start.elapsed().as_secs_f64() * 1e3
}

/// Exact values from the game solver.
pub fn solve_record(g: &Graph, games: GameSelection, solver: &mut Solver) -> Result<ResultRecord> {
    let start = Instant::now();
    let gamma_smb = games.d().then(|| solver.gamma_smb(g)).transpose()?;
    let gamma_smb_prime = games.s().then(|| solver.gamma_smb_prime(g)).transpose()?;
    Ok(ResultRecord {
        graph: graph_id(g),
        family: Family::of(g),
        gamma_smb,
        gamma_smb_prime,
        method: Method::Solver,
        time_ms: elapsed_ms(start),
        interval: None,
        status: None,
        certificate: None,
    })
}

/// Values from the closed forms: paths, subdivided stars and caterpillars
/// by their closed forms, other trees by substructure search within its cap.
/// For trees outside the caterpillar class `γ_SMB` is only known when the
/// outcome test says Staller loses the D-game.
pub fn formula_record(g: &Graph) -> Result<ResultRecord> {
    let start = Instant::now();
    if !g.is_tree() {
        return Err(Error::invalid("closed forms cover trees only"));
    }
    let mut rec = ResultRecord {
        graph: graph_id(g),
        family: Family::of(g),
        gamma_smb: None,
        gamma_smb_prime: None,
        method: Method::Formula,
        time_ms: 0.0,
        interval: None,
        status: None,
        certificate: None,
    };
    let caterpillar = recognize_caterpillar(g).map(|c| caterpillar_values(&c));
    let d_outcome = || -> Result<Option<ExtendedCount>> {
        Ok((!staller_wins(g, Game::D)?).then_some(Infinite))
    };
    match recognize_star(g) {
        Some(StarShape::Path(n)) => {
            rec.gamma_smb = Some(path_value(n, Game::D)?);
            rec.gamma_smb_prime = Some(path_value(n, Game::S)?);
        }
        Some(StarShape::Star(profile)) => {
            rec.gamma_smb = match caterpillar {
                Some((d, _)) => Some(d),
                None => d_outcome()?,
            };
            match star_value_sgame(&profile)? {
                StarValue::Exact { value } => rec.gamma_smb_prime = Some(value),
                StarValue::Open { lower, upper } => {
                    rec.interval = Some([lower, upper]);
                    rec.status = Some("OPEN".into());
                }
            }
        }
        None => match caterpillar {
            Some((d, s)) => {
                rec.gamma_smb = Some(d);
                rec.gamma_smb_prime = Some(s);
            }
            None => {
                rec.method = Method::Structure;
                rec.gamma_smb = d_outcome()?;
                rec.gamma_smb_prime = Some(match min_rank_substructure(g)? {
                    Some((sub, k)) => {
                        rec.certificate = Some(sub.to_text());
                        Finite(k)
                    }
                    None => Infinite,
                });
            }
        },
    }
    rec.time_ms = elapsed_ms(start);
    Ok(rec)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SweepFamily {
    Trees,
    Caterpillars,
    Stars,
}

impl std::str::FromStr for SweepFamily {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "trees" => Ok(SweepFamily::Trees),
            "caterpillars" => Ok(SweepFamily::Caterpillars),
            "stars" => Ok(SweepFamily::Stars),
            _ => Err(Error::invalid(format!("unknown family {s:?}"))),
        }
    }
}

/// Members of a family with at most `max_n` vertices. Stars have at least
/// three branches.
pub fn sweep_graphs(family: SweepFamily, max_n: usize) -> Result<Vec<Graph>> {
    match family {
        SweepFamily::Trees => (1..=max_n).map(enumerate_trees).flat_map(flatten).collect(),
        SweepFamily::Caterpillars => Ok((1..=max_n)
            .map(enumerate_trees)
            .flat_map(flatten)
            .collect::<Result<Vec<_>>>()?
            .into_iter()
            .filter(|t| recognize_caterpillar(t).is_some())
            .collect()),
        SweepFamily::Stars => {
            let mut out = Vec::new();
            for n in 4..=max_n {
                for branches in partitions(n - 1, 3) {
                    out.push(Graph::subdivided_star(&branches));
                }
            }
            Ok(out)
        }
    }
}

fn flatten(r: Result<Vec<Graph>>) -> Vec<Result<Graph>> {
    match r {
        Ok(v) => v.into_iter().map(Ok).collect(),
        Err(e) => vec![Err(e)],
    }
}

/// Partitions of `total` into at least `min_parts` parts, each listed
/// ascending.
pub fn partitions(total: usize, min_parts: usize) -> Vec<Vec<usize>> {
    fn go(rest: usize, min: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if rest == 0 {
            out.push(cur.clone());
            return;
        }
        for part in min..=rest {
            cur.push(part);
            go(rest - part, part, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(total, 1, &mut Vec::new(), &mut out);
    out.retain(|p| p.len() >= min_parts);
    out
}

/// One sweep row: solver values next to the closed-form ones.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerifyRow {
    pub graph: String,
    pub n: usize,
    pub family: Family,
    pub solver_gamma_smb: ExtendedCount,
    pub solver_gamma_smb_prime: ExtendedCount,
    /// What the closed form or structure search says, as text: a value,
    /// `finite` when only the outcome is known, or `[lo;hi]` for an open
    /// range.
    pub check_gamma_smb: String,
    pub check_gamma_smb_prime: String,
    pub agree: bool,
}

impl VerifyRow {
    pub const CSV_HEADER: &'static str =
        "graph,n,family,solver_gamma_smb,solver_gamma_smb_prime,check_gamma_smb,check_gamma_smb_prime,agree";

    pub fn to_csv(&self) -> String {
        let family = serde_json::to_value(self.family).unwrap();
        format!(
            "{},{},{},{},{},{},{},{}",
            self.graph,
            self.n,
            family.as_str().unwrap(),
            self.solver_gamma_smb,
            self.solver_gamma_smb_prime,
            self.check_gamma_smb,
            self.check_gamma_smb_prime,
            self.agree
        )
    }

    /// graph6 and both sides of the disagreement.
    pub fn reproducer(&self) -> String {
        format!(
            "graph6 {}\nsolver gamma_smb {} gamma_smb_prime {}\ncheck gamma_smb {} gamma_smb_prime {}\n",
            self.graph, self.solver_gamma_smb, self.solver_gamma_smb_prime, self.check_gamma_smb, self.check_gamma_smb_prime
        )
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerifyReport {
    pub rows: Vec<VerifyRow>,
}

impl VerifyReport {
    pub fn discrepancies(&self) -> impl Iterator<Item = &VerifyRow> {
        self.rows.iter().filter(|r| !r.agree)
    }

    /// The smallest disagreeing graph.
    pub fn minimal_discrepancy(&self) -> Option<&VerifyRow> {
        self.discrepancies().min_by_key(|r| (r.n, r.graph.clone()))
    }

    pub fn to_csv(&self) -> String {
        let mut out = String::from(VerifyRow::CSV_HEADER);
        out.push('\n');
        for r in &self.rows {
            out.push_str(&r.to_csv());
            out.push('\n');
        }
        out
    }
}

fn verify_one(g: &Graph, family: SweepFamily, solver: &mut Solver) -> Result<VerifyRow> {
    let d = solver.gamma_smb(g)?;
    let s = solver.gamma_smb_prime(g)?;
    let (check_d, check_s, agree) = match family {
        SweepFamily::Trees => {
            // structure search for the S-game, outcome tests for finiteness
            let structure = match min_rank_substructure(g)? {
                Some((_, k)) => Finite(k),
                None => Infinite,
            };
            let d_fin = staller_wins(g, Game::D)?;
            let s_fin = staller_wins(g, Game::S)?;
            let agree = structure == s && d_fin == d.is_finite() && s_fin == s.is_finite();
            let d_text = if d_fin {
                "finite".to_string()
            } else {
                Infinite.to_string()
            };
            (d_text, structure.to_string(), agree)
        }
        SweepFamily::Caterpillars => {
            let (cd, cs) = caterpillar_values(
                &recognize_caterpillar(g).ok_or_else(|| Error::invalid("not a caterpillar"))?,
            );
            (cd.to_string(), cs.to_string(), cd == d && cs == s)
        }
        SweepFamily::Stars => {
            let Some(StarShape::Star(p)) = recognize_star(g) else {
                return Err(Error::invalid("not a subdivided star"));
            };
            let d_fin = staller_wins(g, Game::D)?;
            let d_text = if d_fin {
                "finite".to_string()
            } else {
                Infinite.to_string()
            };
            match star_value_sgame(&p)? {
                StarValue::Exact { value } => (
                    d_text,
                    value.to_string(),
                    value == s && d_fin == d.is_finite(),
                ),
                StarValue::Open { lower, upper } => {
                    let inside = s.finite().is_some_and(|v| lower <= v && v <= upper);
                    (
                        d_text,
                        format!("[{lower};{upper}]"),
                        inside && d_fin == d.is_finite(),
                    )
                }
            }
        }
    };
    Ok(VerifyRow {
        graph: graph_id(g),
        n: g.vertex_count(),
        family: Family::of(g),
        solver_gamma_smb: d,
        solver_gamma_smb_prime: s,
        check_gamma_smb: check_d,
        check_gamma_smb_prime: check_s,
        agree,
    })
}

/// Solves every family member up to `max_n` and compares with the closed
/// forms. Rows are sorted by graph id, so the output does not depend on
/// `jobs`. Each worker thread keeps its own solver memo.
pub fn verify_family(
    family: SweepFamily,
    max_n: usize,
    jobs: usize,
    config: SolverConfig,
) -> Result<VerifyReport> {
    if max_n > config.vertex_cap {
        return Err(Error::cap("sweep", max_n, config.vertex_cap));
    }
    let graphs = sweep_graphs(family, max_n)?;
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs.max(1))
        .build()
        .map_err(|e| Error::invalid(format!("thread pool: {e}")))?;
    let mut rows = pool.install(|| {
        graphs
            .par_iter()
            .map_init(
                || Solver::new(config),
                |solver, g| verify_one(g, family, solver),
            )
            .collect::<Result<Vec<_>>>()
    })?;
    rows.sort_by(|a, b| a.graph.cmp(&b.graph));
    Ok(VerifyReport { rows })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn family_tags() {
        assert_eq!(Family::of(&Graph::path(5)), Family::Path);
        assert_eq!(Family::of(&Graph::star(3)), Family::Star);
        assert_eq!(
            Family::of(&Graph::example_caterpillar()),
            Family::Caterpillar
        );
        assert_eq!(Family::of(&Graph::empty(2)), Family::Forest);
        let mut c3 = Graph::path(3);
        c3.add_edge(0, 2).unwrap();
        assert_eq!(Family::of(&c3), Family::Graph);
    }

    #[test]
    fn partitions_small() {
        assert_eq!(partitions(4, 3), vec![vec![1, 1, 1, 1], vec![1, 1, 2]]);
        assert_eq!(partitions(5, 1).len(), 7);
    }

    #[test]
    fn solve_record_json() {
        let mut solver = Solver::default();
        let rec = solve_record(&Graph::path(7), GameSelection::S, &mut solver).unwrap();
        let json: serde_json::Value = serde_json::from_str(&rec.to_json()).unwrap();
        assert_eq!(json["gamma_smb_prime"], 3);
        assert_eq!(json["gamma_smb"], serde_json::Value::Null);
        assert_eq!(json["method"], "solver");
        assert_eq!(json["family"], "path");
        assert!(json.get("interval").is_none());
        let rec = solve_record(
            &Graph::example_caterpillar(),
            GameSelection::Both,
            &mut solver,
        )
        .unwrap();
        assert_eq!(
            (rec.gamma_smb, rec.gamma_smb_prime),
            (Some(Finite(3)), Some(Finite(2)))
        );
        let rec = solve_record(&Graph::path(4), GameSelection::D, &mut solver).unwrap();
        assert!(rec.to_json().contains("\"gamma_smb\":\"inf\""));
    }

    #[test]
    fn formula_records() {
        let rec = formula_record(&Graph::subdivided_star(&[1, 1, 2])).unwrap();
        assert_eq!(rec.gamma_smb_prime, Some(Finite(2)));
        let rec = formula_record(&Graph::subdivided_star(&[2, 2, 2, 2])).unwrap();
        assert_eq!(rec.interval, Some([4, 5]));
        assert_eq!(rec.status.as_deref(), Some("OPEN"));
        assert_eq!(rec.gamma_smb_prime, None);
        let rec = formula_record(&Graph::path(6)).unwrap();
        assert_eq!(rec.gamma_smb_prime, Some(Infinite));
        let rec = formula_record(&Graph::subdivided_star(&[2, 2, 2])).unwrap();
        assert_eq!(rec.gamma_smb_prime, Some(Finite(4)));
        let mut g = Graph::subdivided_star(&[2, 2, 2]);
        let extra = g.add_vertex();
        g.add_edge(1, extra).unwrap();
        let rec = formula_record(&g).unwrap();
        assert_eq!(rec.method, Method::Structure);
        assert!(rec.certificate.is_some());
    }

    #[test]
    fn small_sweeps_agree() {
        for family in [
            SweepFamily::Trees,
            SweepFamily::Caterpillars,
            SweepFamily::Stars,
        ] {
            let report = verify_family(family, 9, 2, SolverConfig::default()).unwrap();
            assert_eq!(report.discrepancies().count(), 0, "{family:?}");
        }
        let trees = verify_family(SweepFamily::Trees, 10, 1, SolverConfig::default()).unwrap();
        assert_eq!(trees.rows.len(), 201);
    }
}

/// Interactive game: the human plays `human`, the engine plays the other
/// side optimally. Bad input re-prompts without changing the position.
pub fn play_session<R: std::io::BufRead, W: std::io::Write>(
    g: &Graph,
    human: crate::play::Role,
    first: crate::play::Role,
    config: SolverConfig,
    mut input: R,
    mut output: W,
) -> Result<crate::play::Transcript> {
    use crate::play::{optimal_strategy_with, Status, Strategy, Transcript};
    let io = |e: std::io::Error| Error::invalid(format!("i/o: {e}"));
    let engine = optimal_strategy_with(g, human.other(), config)?;
    let mut t = Transcript::new(g, first)?;
    writeln!(
        output,
        "{} vertices; you play {human}, {first} moves first",
        g.vertex_count()
    )
    .map_err(io)?;
    while let Some(role) = t.to_move() {
        if role == human {
            write!(output, "your move> ").map_err(io)?;
            output.flush().map_err(io)?;
            let mut line = String::new();
            if input.read_line(&mut line).map_err(io)? == 0 {
                writeln!(output).map_err(io)?;
                return Err(Error::invalid("input ended before the game did"));
            }
            match line.trim().parse::<usize>() {
                Ok(v) if v < t.vertex_count() && !t.is_played(v) => {
                    t.play(v)?;
                }
                Ok(v) if v < t.vertex_count() => {
                    writeln!(output, "vertex {v} is already played").map_err(io)?
                }
                _ => writeln!(
                    output,
                    "enter an unplayed vertex id below {}",
                    t.vertex_count()
                )
                .map_err(io)?,
            }
        } else {
            let v = engine
                .next_move(&t)
                .ok_or_else(|| Error::invalid("engine found no move"))?;
            t.play(v)?;
            writeln!(output, "{role} plays {v}").map_err(io)?;
        }
    }
    match t.status() {
        Status::StallerWin(k) => writeln!(output, "staller wins in {k} moves"),
        _ => writeln!(output, "dominator wins"),
    }
    .map_err(io)?;
    Ok(t)
}
