//! Shared test helpers: the worked four-movement example and seeded random
//! airport problems for the oracle and axiom suites.
#![allow(dead_code)]

use airport_games::airport::{AirportProblem, Movement};
use airport_games::numeric::rat;
use num_rational::BigRational;
use rand::Rng;
use rand_chacha::ChaCha8Rng;

/// The four-movement, three-airline example with one code-shared flight.
pub fn example_problem() -> AirportProblem {
    AirportProblem::new(
        vec![
            ("T1".into(), rat(10, 1)),
            ("T2".into(), rat(20, 1)),
            ("T3".into(), rat(22, 1)),
        ],
        vec![
            Movement::new("m1", 0, [0]),
            Movement::new("m2", 1, [1, 2]),
            Movement::new("m3", 2, [1]),
            Movement::new("m4", 1, [2]),
        ],
        vec!["a1".into(), "a2".into(), "a3".into()],
    )
    .unwrap()
}

/// A random airport problem: up to `max_n` movements, `max_types` types and
/// `max_airlines` airlines; each movement is code-shared (gets extra
/// airlines) with probability `overlap_p`. Costs are a random nondecreasing
/// rational ladder, ties allowed.
pub fn random_problem(
    rng: &mut ChaCha8Rng,
    max_n: usize,
    max_types: usize,
    max_airlines: usize,
    overlap_p: f64,
) -> AirportProblem {
    let n = rng.gen_range(2..=max_n);
    let t_count = rng.gen_range(1..=max_types);
    let a_count = rng.gen_range(1..=max_airlines);

    let mut costs: Vec<BigRational> = Vec::with_capacity(t_count);
    let mut level = rat(rng.gen_range(0..=10), rng.gen_range(1..=6));
    for _ in 0..t_count {
        costs.push(level.clone());
        level += rat(rng.gen_range(0..=20), rng.gen_range(1..=6));
    }
    let types: Vec<(String, BigRational)> = costs
        .into_iter()
        .enumerate()
        .map(|(t, c)| (format!("T{}", t + 1), c))
        .collect();

    let movements: Vec<Movement> = (0..n)
        .map(|i| {
            let t = rng.gen_range(0..t_count);
            let primary = rng.gen_range(0..a_count);
            let mut airlines = vec![primary];
            if a_count > 1 && rng.gen_bool(overlap_p) {
                let extras = rng.gen_range(1..a_count);
                let mut pool: Vec<usize> = (0..a_count).filter(|&a| a != primary).collect();
                for _ in 0..extras {
                    let k = rng.gen_range(0..pool.len());
                    airlines.push(pool.swap_remove(k));
                }
            }
            Movement::new(format!("m{i}"), t, airlines)
        })
        .collect();

    // keep only airlines that fly something, renumbered in order
    let mut used: Vec<usize> = movements
        .iter()
        .flat_map(|m| m.airlines.iter().copied())
        .collect();
    used.sort_unstable();
    used.dedup();
    let remap: Vec<Option<usize>> = (0..a_count)
        .map(|a| used.iter().position(|&u| u == a))
        .collect();
    let movements: Vec<Movement> = movements
        .into_iter()
        .map(|m| {
            Movement::new(
                m.id,
                m.type_index,
                m.airlines.iter().map(|&a| remap[a].unwrap()),
            )
        })
        .collect();
    let names: Vec<String> = (0..used.len()).map(|a| format!("al{a}")).collect();

    AirportProblem::new(types, movements, names).expect("random problem is valid")
}

/// Extends a random problem with a constructed doubles pair: two fresh
/// movements of one type, one joining an existing airline (so its block has
/// company), the other flying alone under a new airline. Returns the problem
/// and the movement indices of the pair.
pub fn random_problem_with_doubles(
    rng: &mut ChaCha8Rng,
    max_n: usize,
    max_types: usize,
    max_airlines: usize,
    overlap_p: f64,
) -> (AirportProblem, usize, usize) {
    let base = random_problem(rng, max_n, max_types, max_airlines, overlap_p);
    let n = base.movement_count();
    let t = rng.gen_range(0..base.type_count());
    let host_airline = rng.gen_range(0..base.airline_count());
    let solo_airline = base.airline_count();

    let types: Vec<(String, BigRational)> = (0..base.type_count())
        .map(|k| (base.type_code(k).to_string(), base.type_cost(k).clone()))
        .collect();
    let mut movements = base.movements().to_vec();
    movements.push(Movement::new("dbl_i", t, [host_airline]));
    movements.push(Movement::new("dbl_j", t, [solo_airline]));
    let mut names: Vec<String> = base.airline_names().to_vec();
    names.push("solo".into());
    let problem = AirportProblem::new(types, movements, names).expect("doubles problem");
    (problem, n, n + 1)
}

/// |value - expected| <= tol, with `expected` and `tol` decimal strings.
pub fn within(value: &BigRational, expected: &str, tol: &str) -> bool {
    let e = airport_games::numeric::parse_decimal(expected).unwrap();
    let t = airport_games::numeric::parse_decimal(tol).unwrap();
    let diff = if value >= &e { value - e } else { e - value };
    diff <= t
}

pub fn santiago_path() -> std::path::PathBuf {
    std::path::Path::new(env!("CARGO_MANIFEST_DIR")).join("../../data/santiago_scq.csv")
}

pub fn example_file_path() -> std::path::PathBuf {
    std::path::Path::new(env!("CARGO_MANIFEST_DIR")).join("../../data/example_four_movements.csv")
}
