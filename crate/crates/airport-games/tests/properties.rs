//! Property tests for the structural invariants.

mod common;

use airport_games::airport::{
    airline_totals, airport_game, configuration_closed, AirportProblem, Movement,
};
use airport_games::coalition::{subsets_of, Coalition};
use airport_games::config::CoalitionConfiguration;
use airport_games::game::quotient_game;
use airport_games::numeric::rat;
use airport_games::representatives::{build_representatives, isolate_representative};
use airport_games::values::{owen, shapley};
use num_rational::BigRational;
use proptest::prelude::*;
use std::collections::BTreeSet;

/// A small random airport problem: cost increments and per-movement
/// (type, airline-set) assignments.
fn problem_strategy() -> impl Strategy<Value = AirportProblem> {
    let increments = prop::collection::vec(0u8..=12, 1..=4);
    let movements = prop::collection::vec((0usize..4, 1u8..=15), 2..=7);
    (increments, movements).prop_map(|(increments, movements)| {
        let mut costs = Vec::new();
        let mut level = 0i64;
        for d in &increments {
            level += *d as i64;
            costs.push(level);
        }
        let t_count = costs.len();
        let types: Vec<(String, BigRational)> = costs
            .iter()
            .enumerate()
            .map(|(t, &c)| (format!("T{t}"), rat(c, 1)))
            .collect();
        let mvs: Vec<Movement> = movements
            .iter()
            .enumerate()
            .map(|(i, &(t, mask))| {
                let airlines: Vec<usize> = (0..4).filter(|a| mask & (1 << a) != 0).collect();
                Movement::new(format!("m{i}"), t % t_count, airlines)
            })
            .collect();
        let used: BTreeSet<usize> = mvs.iter().flat_map(|m| m.airlines.iter().copied()).collect();
        let remap: Vec<Option<usize>> = (0..4).map(|a| used.iter().position(|&u| u == a)).collect();
        let mvs: Vec<Movement> = mvs
            .into_iter()
            .map(|m| {
                Movement::new(
                    m.id,
                    m.type_index,
                    m.airlines.iter().map(|&a| remap[a].unwrap()),
                )
            })
            .collect();
        let names = (0..used.len()).map(|a| format!("al{a}")).collect();
        AirportProblem::new(types, mvs, names).expect("valid generated problem")
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    /// The lifted game evaluated on full-incidence coalitions reproduces the
    /// original characteristic function.
    #[test]
    fn representatives_reproduce_the_original_game(p in problem_strategy()) {
        let game = airport_game(&p);
        let cfg = p.configuration();
        let rg = build_representatives(&game, cfg).unwrap();
        let n = p.movement_count();
        let all: Vec<usize> = (0..n).collect();
        for s in subsets_of(n, &all) {
            let mut s_bar = Coalition::empty(rg.rep_count());
            for i in s.players() {
                for q in cfg.blocks_containing(i).unwrap() {
                    s_bar.insert(rg.rep_index(i, q).unwrap());
                }
            }
            prop_assert_eq!(rg.base().cost(&s_bar), game.cost(&s));
        }
    }

    /// Every isolation of a representative yields a partition.
    #[test]
    fn isolation_always_yields_partitions(p in problem_strategy()) {
        let game = airport_game(&p);
        let cfg = p.configuration();
        let rg = build_representatives(&game, cfg).unwrap();
        for (q, block) in cfg.blocks().iter().enumerate() {
            for i in block.players() {
                let iso = isolate_representative(&rg, i, q).unwrap();
                prop_assert!(iso.is_partition());
            }
        }
    }

    /// The quotient game over singleton blocks is the original game.
    #[test]
    fn quotient_of_singletons_is_the_original(p in problem_strategy()) {
        let game = airport_game(&p);
        let n = p.movement_count();
        let q = quotient_game(&game, &CoalitionConfiguration::singletons(n));
        let all: Vec<usize> = (0..n).collect();
        for s in subsets_of(n, &all) {
            prop_assert_eq!(q.cost(&s), game.cost(&s));
        }
    }

    /// Merging blocks keeps the covering invariant, and merging disjoint
    /// blocks of a partition keeps it a partition.
    #[test]
    fn merging_preserves_covering(p in problem_strategy(), picks in prop::collection::btree_set(0usize..4, 1..3)) {
        let cfg = p.configuration();
        let which: BTreeSet<usize> = picks
            .into_iter()
            .map(|k| k % cfg.block_count())
            .collect();
        let merged = cfg.merge_blocks(&which).unwrap();
        prop_assert_eq!(merged.player_count(), cfg.player_count());
        // constructor revalidates covering; also check partitions survive
        if cfg.is_partition() {
            prop_assert!(merged.is_partition());
        }
    }

    /// Efficiency holds exactly for all three brute-force solvers.
    #[test]
    fn solvers_are_efficient(p in problem_strategy()) {
        let game = airport_game(&p);
        let grand = game.grand_coalition_cost();
        prop_assert_eq!(shapley(&game).unwrap().sum(), grand.clone());
        let cv = airport_games::values::configuration_value(&game, p.configuration()).unwrap();
        prop_assert_eq!(cv.sum(), grand.clone());
        if p.configuration().is_partition() {
            prop_assert_eq!(owen(&game, p.configuration()).unwrap().sum(), grand);
        }
    }

    /// Within one airline, bigger types never pay a smaller share.
    #[test]
    fn shares_are_monotone_in_type(p in problem_strategy()) {
        let report = configuration_closed(&p);
        for a in 0..p.airline_count() {
            let mut shares: Vec<(usize, &BigRational)> = Vec::new();
            for i in 0..p.movement_count() {
                for (owner, share) in report.shares(i) {
                    if *owner == a {
                        shares.push((p.movements()[i].type_index, share));
                    }
                }
            }
            shares.sort_by_key(|&(t, _)| t);
            for w in shares.windows(2) {
                prop_assert!(w[0].1 <= w[1].1, "airline {a}: type {} pays more than type {}", w[0].0, w[1].0);
            }
        }
    }

    /// Adding a movement of a type the airline already covers leaves that
    /// airline's total unchanged.
    #[test]
    fn airline_total_ignores_smaller_additions(p in problem_strategy(), pick in any::<u32>()) {
        let report = configuration_closed(&p);
        let totals = airline_totals(&p, &report).unwrap();
        let a = (pick as usize) % p.airline_count();
        let max_type = p
            .movements()
            .iter()
            .filter(|m| m.airlines.contains(&a))
            .map(|m| m.type_index)
            .max()
            .unwrap();
        let new_type = (pick as usize) % (max_type + 1);
        let types: Vec<(String, BigRational)> = (0..p.type_count())
            .map(|t| (p.type_code(t).to_string(), p.type_cost(t).clone()))
            .collect();
        let mut movements = p.movements().to_vec();
        movements.push(Movement::new("extra", new_type, [a]));
        let names = p.airline_names().to_vec();
        let grown = AirportProblem::new(types, movements, names).unwrap();
        let grown_totals = airline_totals(&grown, &configuration_closed(&grown)).unwrap();
        prop_assert_eq!(&grown_totals[a].1, &totals[a].1);
    }

    /// parse(emit(parse(f))) == parse(f): parsing an emitted dataset is a
    /// fixed point, and the emitted text is canonical.
    #[test]
    fn dataset_round_trip(p in problem_strategy()) {
        let ds = airport_games::dataset::Dataset {
            problem: p,
            weights: None,
            total_fee: None,
            currency: Some("u".into()),
            alliances: None,
            reference_fees: None,
        };
        // an arbitrary in-memory dataset may order airlines differently than
        // a file would; one emit/parse round canonicalizes it
        let parsed = airport_games::dataset::parse_dataset_str(
            &airport_games::dataset::emit_dataset(&ds),
        )
        .unwrap();
        let text = airport_games::dataset::emit_dataset(&parsed);
        let reparsed = airport_games::dataset::parse_dataset_str(&text).unwrap();
        prop_assert_eq!(&reparsed, &parsed);
        prop_assert_eq!(airport_games::dataset::emit_dataset(&reparsed), text);
    }
}
