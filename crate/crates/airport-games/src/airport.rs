//! Airport problems and the closed-form fee schedules.
//!
//! A coalition of movements costs what the largest aircraft type among them
//! costs. On that game the Shapley, Owen and configuration values collapse to
//! ladder sums over cost increments, evaluated here directly on the problem
//! parameters — no coalition enumeration, so the real dataset sizes are
//! instant.

use crate::coalition::Coalition;
use crate::config::CoalitionConfiguration;
use crate::error::AirportError;
use crate::game::CostGame;
use crate::values::Method;
use num_rational::BigRational;
use num_traits::Zero;
use std::collections::BTreeSet;

/// One take-off or landing: an aircraft type plus the operating airlines
/// (more than one under code-sharing).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Movement {
    pub id: String,
    /// 0-based index into the problem's type ladder.
    pub type_index: usize,
    /// 0-based airline indices; sorted and deduplicated on construction.
    pub airlines: Vec<usize>,
}

impl Movement {
    pub fn new(
        id: impl Into<String>,
        type_index: usize,
        airlines: impl IntoIterator<Item = usize>,
    ) -> Self {
        let mut airlines: Vec<usize> = airlines.into_iter().collect();
        airlines.sort_unstable();
        airlines.dedup();
        Movement {
            id: id.into(),
            type_index,
            airlines,
        }
    }
}

/// An airport problem: a nondecreasing cost ladder over aircraft types, a
/// list of movements, and the covering family of airline blocks.
///
/// Construction compacts the type ladder (types with no movements are
/// dropped and indices renumbered), so every type carries at least one
/// movement afterwards.
#[derive(Clone, Debug, PartialEq)]
pub struct AirportProblem {
    type_codes: Vec<String>,
    type_costs: Vec<BigRational>,
    movements: Vec<Movement>,
    airline_names: Vec<String>,
    configuration: CoalitionConfiguration,
}

impl AirportProblem {
    pub fn new(
        types: Vec<(String, BigRational)>,
        movements: Vec<Movement>,
        airline_names: Vec<String>,
    ) -> Result<Self, AirportError> {
        if types.is_empty() {
            return Err(AirportError::NoTypes);
        }
        if movements.is_empty() {
            return Err(AirportError::NoMovements);
        }
        for (t, (_, cost)) in types.iter().enumerate() {
            if cost < &BigRational::zero() {
                return Err(AirportError::NegativeCost { index: t });
            }
            if t > 0 && cost < &types[t - 1].1 {
                return Err(AirportError::DecreasingCosts { index: t });
            }
        }
        let mut seen_names = BTreeSet::new();
        for name in &airline_names {
            if !seen_names.insert(name.clone()) {
                return Err(AirportError::DuplicateAirline { name: name.clone() });
            }
        }
        let mut seen_ids = BTreeSet::new();
        for (k, mv) in movements.iter().enumerate() {
            if !seen_ids.insert(mv.id.clone()) {
                return Err(AirportError::DuplicateMovement { id: mv.id.clone() });
            }
            if mv.type_index >= types.len() {
                return Err(AirportError::UnknownType {
                    movement: k,
                    type_index: mv.type_index,
                });
            }
            if mv.airlines.is_empty() {
                return Err(AirportError::NoAirlines { movement: k });
            }
            for &a in &mv.airlines {
                if a >= airline_names.len() {
                    return Err(AirportError::UnknownAirline {
                        movement: k,
                        airline: a,
                    });
                }
            }
        }
        let used_airlines: BTreeSet<usize> = movements
            .iter()
            .flat_map(|m| m.airlines.iter().copied())
            .collect();
        if let Some(unused) = (0..airline_names.len()).find(|a| !used_airlines.contains(a)) {
            return Err(AirportError::UnusedAirline {
                name: airline_names[unused].clone(),
            });
        }

        // compact the ladder to the types actually flown
        let used_types: BTreeSet<usize> = movements.iter().map(|m| m.type_index).collect();
        let mut remap = vec![usize::MAX; types.len()];
        for (new, &old) in used_types.iter().enumerate() {
            remap[old] = new;
        }
        let mut type_codes = Vec::with_capacity(used_types.len());
        let mut type_costs = Vec::with_capacity(used_types.len());
        for &old in &used_types {
            type_codes.push(types[old].0.clone());
            type_costs.push(types[old].1.clone());
        }
        let movements: Vec<Movement> = movements
            .into_iter()
            .map(|m| Movement {
                type_index: remap[m.type_index],
                ..m
            })
            .collect();

        let n = movements.len();
        let blocks = (0..airline_names.len())
            .map(|a| {
                Coalition::from_players(
                    n,
                    movements
                        .iter()
                        .enumerate()
                        .filter(|(_, m)| m.airlines.contains(&a))
                        .map(|(i, _)| i),
                )
            })
            .collect::<Result<Vec<_>, _>>()?;
        let configuration = CoalitionConfiguration::new(n, blocks)?;

        Ok(AirportProblem {
            type_codes,
            type_costs,
            movements,
            airline_names,
            configuration,
        })
    }

    pub fn movement_count(&self) -> usize {
        self.movements.len()
    }

    pub fn type_count(&self) -> usize {
        self.type_costs.len()
    }

    pub fn airline_count(&self) -> usize {
        self.airline_names.len()
    }

    pub fn movements(&self) -> &[Movement] {
        &self.movements
    }

    pub fn type_code(&self, t: usize) -> &str {
        &self.type_codes[t]
    }

    pub fn type_cost(&self, t: usize) -> &BigRational {
        &self.type_costs[t]
    }

    pub fn largest_cost(&self) -> &BigRational {
        self.type_costs.last().expect("nonempty ladder")
    }

    pub fn airline_name(&self, a: usize) -> &str {
        &self.airline_names[a]
    }

    pub fn airline_names(&self) -> &[String] {
        &self.airline_names
    }

    /// The airline blocks over movement indices.
    pub fn configuration(&self) -> &CoalitionConfiguration {
        &self.configuration
    }

    /// `|N_t ∩ B_a|`: movements of type `t` operated by airline `a`.
    pub fn movements_of_type_in(&self, t: usize, a: usize) -> usize {
        self.movements
            .iter()
            .filter(|m| m.type_index == t && m.airlines.contains(&a))
            .count()
    }
}

/// The induced cost game: `c(S) = max { c_τ : S ∩ N_τ ≠ ∅ }`, lazily
/// evaluated in `O(|S|)` per call.
pub fn airport_game(problem: &AirportProblem) -> CostGame {
    let type_of: Vec<usize> = problem.movements.iter().map(|m| m.type_index).collect();
    let costs = problem.type_costs.clone();
    CostGame::from_fn(problem.movement_count(), move |s| {
        s.players()
            .map(|i| type_of[i])
            .max()
            .map(|t| costs[t].clone())
            .unwrap_or_else(BigRational::zero)
    })
}

/// Per-problem counting tables shared by all three closed forms.
struct FeeBasis {
    /// `d_t = c_t − c_{t−1}` with `c_0 = 0`, 0-based.
    increments: Vec<BigRational>,
    /// `|𝒜_{≥t}|`: airlines flying type `t` or larger.
    airlines_geq: Vec<usize>,
    /// `|N^a_{≥t}|` per airline.
    airline_geq: Vec<Vec<usize>>,
    /// `|N_{≥t}|`: movements of type `t` or larger.
    movements_geq: Vec<usize>,
}

impl FeeBasis {
    fn new(p: &AirportProblem) -> Self {
        let t_count = p.type_count();
        let a_count = p.airline_count();
        let mut increments = Vec::with_capacity(t_count);
        let mut prev = BigRational::zero();
        for c in &p.type_costs {
            increments.push(c - &prev);
            prev = c.clone();
        }
        let mut airline_geq = vec![vec![0usize; t_count]; a_count];
        let mut movements_geq = vec![0usize; t_count];
        for m in &p.movements {
            for t in 0..=m.type_index {
                movements_geq[t] += 1;
                for &a in &m.airlines {
                    airline_geq[a][t] += 1;
                }
            }
        }
        let airlines_geq = (0..t_count)
            .map(|t| (0..a_count).filter(|&a| airline_geq[a][t] > 0).count())
            .collect();
        FeeBasis {
            increments,
            airlines_geq,
            airline_geq,
            movements_geq,
        }
    }

    /// `CV_{a,t} = Σ_{k ≤ t} d_k / (|𝒜_{≥k}| |N^a_{≥k}|)`: what one movement
    /// of type `t` pays towards airline `a`. Defined whenever `a` flies a
    /// movement of type ≥ `t`.
    fn airline_share(&self, a: usize, t: usize) -> BigRational {
        let mut total = BigRational::zero();
        for k in 0..=t {
            let denom = self.airlines_geq[k] * self.airline_geq[a][k];
            debug_assert!(denom > 0);
            total += &self.increments[k] / BigRational::from_integer(denom.into());
        }
        total
    }

    fn shapley_fee(&self, t: usize) -> BigRational {
        let mut total = BigRational::zero();
        for k in 0..=t {
            total += &self.increments[k] / BigRational::from_integer(self.movements_geq[k].into());
        }
        total
    }
}

/// A computed fee schedule: per-movement fees, their decomposition into
/// per-(movement, airline) shares, exact per-airline totals, and the
/// efficiency checksum (always the largest type cost).
#[derive(Clone, Debug, PartialEq)]
pub struct FeeReport {
    method: Method,
    movement_ids: Vec<String>,
    per_movement: Vec<BigRational>,
    shares: Vec<Vec<(usize, BigRational)>>,
    per_airline: Vec<BigRational>,
    checksum: BigRational,
}

impl FeeReport {
    fn assemble(
        method: Method,
        p: &AirportProblem,
        shares: Vec<Vec<(usize, BigRational)>>,
    ) -> FeeReport {
        let per_movement: Vec<BigRational> = shares
            .iter()
            .map(|s| s.iter().map(|(_, v)| v).sum())
            .collect();
        let mut per_airline = vec![BigRational::zero(); p.airline_count()];
        for row in &shares {
            for (a, v) in row {
                per_airline[*a] += v;
            }
        }
        let checksum: BigRational = per_movement.iter().sum();
        debug_assert_eq!(&checksum, p.largest_cost());
        FeeReport {
            method,
            movement_ids: p.movements.iter().map(|m| m.id.clone()).collect(),
            per_movement,
            shares,
            per_airline,
            checksum,
        }
    }

    pub fn method(&self) -> Method {
        self.method
    }

    pub fn movement_ids(&self) -> &[String] {
        &self.movement_ids
    }

    pub fn fee(&self, movement: usize) -> &BigRational {
        &self.per_movement[movement]
    }

    pub fn fees(&self) -> &[BigRational] {
        &self.per_movement
    }

    /// The (airline, share) decomposition of one movement's fee.
    pub fn shares(&self, movement: usize) -> &[(usize, BigRational)] {
        &self.shares[movement]
    }

    /// Exact total per airline (sum of that airline's shares).
    pub fn airline_total(&self, airline: usize) -> &BigRational {
        &self.per_airline[airline]
    }

    pub fn airline_totals_exact(&self) -> &[BigRational] {
        &self.per_airline
    }

    /// `Σ` of the per-movement fees, equal to the largest type cost.
    pub fn checksum(&self) -> &BigRational {
        &self.checksum
    }
}

/// Shapley fees: every movement of type `τ` pays `Σ_{t ≤ τ} d_t / |N_{≥t}|`.
/// Airline structure is ignored; a code-shared movement's fee is split
/// equally across its airlines in the share table.
pub fn shapley_closed(p: &AirportProblem) -> FeeReport {
    let basis = FeeBasis::new(p);
    let fee_per_type: Vec<BigRational> =
        (0..p.type_count()).map(|t| basis.shapley_fee(t)).collect();
    let shares = p
        .movements
        .iter()
        .map(|m| {
            let fee = &fee_per_type[m.type_index];
            let k = BigRational::from_integer(m.airlines.len().into());
            m.airlines.iter().map(|&a| (a, fee / &k)).collect()
        })
        .collect();
    FeeReport::assemble(Method::Shapley, p, shares)
}

/// Owen fees for a partition of movements into airlines (or alliances):
/// `Σ_{t ≤ τ} d_t / (|𝒜_{≥t}| |N^a_{≥t}|)` for the movement's block `a`.
///
/// Errors when code-sharing makes the blocks overlap; the configuration
/// method handles that case.
pub fn owen_closed(p: &AirportProblem) -> Result<FeeReport, AirportError> {
    if !p.configuration().is_partition() {
        return Err(AirportError::CodeSharingPresent);
    }
    let basis = FeeBasis::new(p);
    let shares = p
        .movements
        .iter()
        .map(|m| {
            let a = m.airlines[0];
            vec![(a, basis.airline_share(a, m.type_index))]
        })
        .collect();
    Ok(FeeReport::assemble(Method::Owen, p, shares))
}

/// Configuration-value fees under code-sharing: a movement pays the sum of
/// its per-airline shares, `CV_i = Σ_{a : i ∈ B_a} CV_{a,τ(i)}`.
/// Runs in `O(incidences × types)`.
pub fn configuration_closed(p: &AirportProblem) -> FeeReport {
    let basis = FeeBasis::new(p);
    let shares = p
        .movements
        .iter()
        .map(|m| {
            m.airlines
                .iter()
                .map(|&a| (a, basis.airline_share(a, m.type_index)))
                .collect()
        })
        .collect();
    FeeReport::assemble(Method::Configuration, p, shares)
}

/// Per-airline totals for a report on `p`.
///
/// For the configuration method this evaluates the direct decomposition
/// `TF_a = Σ_{t : N_t ∩ B_a ≠ ∅} |N_t ∩ B_a| · CV_{a,t}` — an independent
/// route from the report's share sums. Other methods return the report's
/// accumulated totals. Totals always sum back to the checksum.
pub fn airline_totals(
    p: &AirportProblem,
    report: &FeeReport,
) -> Result<Vec<(String, BigRational)>, AirportError> {
    if report.movement_ids.len() != p.movement_count()
        || report
            .movement_ids
            .iter()
            .zip(p.movements())
            .any(|(id, m)| id != &m.id)
    {
        return Err(AirportError::ReportMismatch);
    }
    match report.method {
        Method::Configuration => {
            let basis = FeeBasis::new(p);
            let mut out = Vec::with_capacity(p.airline_count());
            for a in 0..p.airline_count() {
                let mut total = BigRational::zero();
                for t in 0..p.type_count() {
                    let count = p.movements_of_type_in(t, a);
                    if count > 0 {
                        total +=
                            basis.airline_share(a, t) * BigRational::from_integer(count.into());
                    }
                }
                out.push((p.airline_names[a].clone(), total));
            }
            Ok(out)
        }
        _ => Ok(p
            .airline_names
            .iter()
            .cloned()
            .zip(report.per_airline.iter().cloned())
            .collect()),
    }
}

/// Merges a set of airlines into one: their blocks union into a single block
/// appended after the untouched airlines, named by joining the merged names
/// with `+`. Movements and types are unchanged.
pub fn merge_airlines(
    p: &AirportProblem,
    which: &BTreeSet<usize>,
) -> Result<AirportProblem, AirportError> {
    if which.is_empty() {
        return Err(crate::error::GameError::EmptySelection.into());
    }
    for &a in which {
        if a >= p.airline_count() {
            return Err(crate::error::GameError::BlockOutOfRange {
                block: a,
                m: p.airline_count(),
            }
            .into());
        }
    }
    let keep: Vec<usize> = (0..p.airline_count()).filter(|a| !which.contains(a)).collect();
    let merged_name = which
        .iter()
        .map(|&a| p.airline_names[a].as_str())
        .collect::<Vec<_>>()
        .join("+");
    let mut names: Vec<String> = keep.iter().map(|&a| p.airline_names[a].clone()).collect();
    names.push(merged_name);
    let renumber = |a: usize| -> usize {
        if which.contains(&a) {
            keep.len()
        } else {
            keep.iter().position(|&k| k == a).expect("kept airline")
        }
    };
    let movements = p
        .movements
        .iter()
        .map(|m| {
            Movement::new(
                m.id.clone(),
                m.type_index,
                m.airlines.iter().map(|&a| renumber(a)),
            )
        })
        .collect();
    let types = p
        .type_codes
        .iter()
        .cloned()
        .zip(p.type_costs.iter().cloned())
        .collect();
    AirportProblem::new(types, movements, names)
}

/// Derives the cost ladder from take-off weights: `c_τ = total · w_τ / w_max`.
/// Weights must be strictly positive and nondecreasing; the largest type
/// costs exactly `total`.
pub fn costs_from_weights(
    weights: &[BigRational],
    total: &BigRational,
) -> Result<Vec<BigRational>, AirportError> {
    if weights.is_empty() {
        return Err(AirportError::NoWeights);
    }
    for (i, w) in weights.iter().enumerate() {
        if w <= &BigRational::zero() {
            return Err(AirportError::NonpositiveWeight { index: i });
        }
        if i > 0 && w < &weights[i - 1] {
            return Err(AirportError::DecreasingWeights { index: i });
        }
    }
    let w_max = weights.last().expect("nonempty");
    Ok(weights.iter().map(|w| total * w / w_max).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numeric::rat;
    use crate::values;

    /// The four-movement, three-airline example problem.
    fn example_problem() -> AirportProblem {
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

    #[test]
    fn airport_game_takes_the_largest_type() {
        let p = example_problem();
        let g = airport_game(&p);
        assert_eq!(
            g.cost(&Coalition::from_players(4, [0, 3]).unwrap()),
            rat(20, 1)
        );
        assert_eq!(g.cost(&Coalition::singleton(4, 2)), rat(22, 1));
        assert_eq!(g.grand_coalition_cost(), rat(22, 1));
    }

    #[test]
    fn shapley_closed_matches_brute_force() {
        let p = example_problem();
        let report = shapley_closed(&p);
        let expected = [rat(5, 2), rat(35, 6), rat(47, 6), rat(35, 6)];
        assert_eq!(report.fees(), &expected);
        let brute = values::shapley(&airport_game(&p)).unwrap();
        assert_eq!(report.fees(), brute.values());
        assert_eq!(report.checksum(), &rat(22, 1));
    }

    #[test]
    fn lone_largest_movement_pays_everything() {
        let p = AirportProblem::new(
            vec![("small".into(), rat(3, 1)), ("big".into(), rat(9, 1))],
            vec![
                Movement::new("s1", 0, [0]),
                Movement::new("s2", 0, [0]),
                Movement::new("b", 1, [1]),
            ],
            vec!["al".into(), "bl".into()],
        )
        .unwrap();
        let report = shapley_closed(&p);
        // the big movement carries its own increment fully: 3/3 + 6/1 = 7
        assert_eq!(report.fee(2), &rat(7, 1));
        let solo = AirportProblem::new(
            vec![("big".into(), rat(9, 1))],
            vec![Movement::new("b", 0, [0])],
            vec!["bl".into()],
        )
        .unwrap();
        assert_eq!(shapley_closed(&solo).fee(0), &rat(9, 1));
    }

    #[test]
    fn owen_closed_matches_brute_force_on_partition() {
        let p = AirportProblem::new(
            vec![
                ("T1".into(), rat(10, 1)),
                ("T2".into(), rat(20, 1)),
                ("T3".into(), rat(22, 1)),
            ],
            vec![
                Movement::new("m1", 0, [0]),
                Movement::new("m2", 1, [1]),
                Movement::new("m3", 2, [1]),
                Movement::new("m4", 1, [2]),
            ],
            vec!["a1".into(), "a2".into(), "a3".into()],
        )
        .unwrap();
        let report = owen_closed(&p).unwrap();
        assert_eq!(
            report.fees(),
            &[rat(10, 3), rat(25, 6), rat(37, 6), rat(25, 3)]
        );
        let brute = values::owen(&airport_game(&p), p.configuration()).unwrap();
        assert_eq!(report.fees(), brute.values());
    }

    #[test]
    fn owen_closed_rejects_code_sharing() {
        assert!(matches!(
            owen_closed(&example_problem()),
            Err(AirportError::CodeSharingPresent)
        ));
    }

    #[test]
    fn owen_with_one_airline_is_shapley() {
        let p = AirportProblem::new(
            vec![("T1".into(), rat(4, 1)), ("T2".into(), rat(10, 1))],
            vec![
                Movement::new("m1", 0, [0]),
                Movement::new("m2", 1, [0]),
                Movement::new("m3", 1, [0]),
            ],
            vec!["only".into()],
        )
        .unwrap();
        let ow = owen_closed(&p).unwrap();
        let sh = shapley_closed(&p);
        assert_eq!(ow.fees(), sh.fees());
        let brute = values::owen(&airport_game(&p), p.configuration()).unwrap();
        assert_eq!(ow.fees(), brute.values());
    }

    #[test]
    fn configuration_closed_reproduces_the_example() {
        let p = example_problem();
        let report = configuration_closed(&p);
        assert_eq!(
            report.fees(),
            &[rat(10, 3), rat(50, 6), rat(37, 6), rat(25, 6)]
        );
        assert_eq!(report.checksum(), &rat(22, 1));
        // movement 2's fee decomposes equally across a2 and a3
        assert_eq!(report.shares(1), &[(1, rat(25, 6)), (2, rat(25, 6))]);
    }

    #[test]
    fn airline_totals_match_the_example() {
        let p = example_problem();
        let report = configuration_closed(&p);
        let totals = airline_totals(&p, &report).unwrap();
        assert_eq!(
            totals,
            vec![
                ("a1".to_string(), rat(10, 3)),
                ("a2".to_string(), rat(31, 3)),
                ("a3".to_string(), rat(25, 3)),
            ]
        );
        // the direct decomposition agrees with the share sums
        for (a, (_, total)) in totals.iter().enumerate() {
            assert_eq!(total, report.airline_total(a));
        }
        // single airline, single movement: total = the movement's fee
        let solo = AirportProblem::new(
            vec![("T".into(), rat(9, 1))],
            vec![Movement::new("m", 0, [0])],
            vec!["a".into()],
        )
        .unwrap();
        let solo_report = configuration_closed(&solo);
        let solo_totals = airline_totals(&solo, &solo_report).unwrap();
        assert_eq!(solo_totals[0].1, rat(9, 1));
        assert_eq!(&solo_totals[0].1, solo_report.fee(0));
    }

    #[test]
    fn airline_totals_reject_mismatched_reports() {
        let p = example_problem();
        let other = AirportProblem::new(
            vec![("T".into(), rat(9, 1))],
            vec![Movement::new("m", 0, [0])],
            vec!["a".into()],
        )
        .unwrap();
        let report = configuration_closed(&other);
        assert!(matches!(
            airline_totals(&p, &report),
            Err(AirportError::ReportMismatch)
        ));
    }

    #[test]
    fn merging_airlines_lowers_the_merged_total() {
        let p = example_problem();
        let report = configuration_closed(&p);
        let merged = merge_airlines(&p, &BTreeSet::from([1, 2])).unwrap();
        assert_eq!(
            merged.airline_names(),
            &["a1".to_string(), "a2+a3".to_string()]
        );
        let merged_report = configuration_closed(&merged);
        let merged_totals = airline_totals(&merged, &merged_report).unwrap();
        assert_eq!(merged_totals[1].1, rat(17, 1));
        let pre = report.airline_total(1) + report.airline_total(2);
        assert_eq!(pre, rat(56, 3));
        assert!(merged_totals[1].1 <= pre);
        // brute-force oracle on the merged configuration agrees
        let brute =
            values::configuration_value(&airport_game(&merged), merged.configuration()).unwrap();
        assert_eq!(merged_report.fees(), brute.values());
    }

    #[test]
    fn merging_one_airline_changes_nothing_but_order() {
        let p = example_problem();
        let merged = merge_airlines(&p, &BTreeSet::from([0])).unwrap();
        let before = configuration_closed(&p);
        let after = configuration_closed(&merged);
        assert_eq!(before.fees(), after.fees());
    }

    #[test]
    fn merging_all_airlines_collapses_to_shapley() {
        let p = example_problem();
        let merged = merge_airlines(&p, &BTreeSet::from([0, 1, 2])).unwrap();
        let cv = configuration_closed(&merged);
        let sh = shapley_closed(&p);
        assert_eq!(cv.fees(), sh.fees());
        let brute =
            values::configuration_value(&airport_game(&merged), merged.configuration()).unwrap();
        assert_eq!(cv.fees(), brute.values());
    }

    #[test]
    fn weight_proportional_costs() {
        let weights = [rat(9752, 1000), rat(41095, 1000), rat(8219, 100)];
        let total = rat(4231079, 100);
        let costs = costs_from_weights(&weights, &total).unwrap();
        assert_eq!(costs[2], total); // w_max maps to the full total
        assert_eq!(costs[1], &total / rat(2, 1)); // half the max weight
        assert!(costs[0] < costs[1]);
        assert!(matches!(
            costs_from_weights(&[], &total),
            Err(AirportError::NoWeights)
        ));
        assert!(matches!(
            costs_from_weights(&[rat(0, 1)], &total),
            Err(AirportError::NonpositiveWeight { index: 0 })
        ));
        assert!(matches!(
            costs_from_weights(&[rat(2, 1), rat(1, 1)], &total),
            Err(AirportError::DecreasingWeights { index: 1 })
        ));
    }

    #[test]
    fn type_compaction_drops_unflown_types() {
        let p = AirportProblem::new(
            vec![
                ("T1".into(), rat(1, 1)),
                ("ghost".into(), rat(2, 1)),
                ("T3".into(), rat(5, 1)),
            ],
            vec![Movement::new("m1", 0, [0]), Movement::new("m2", 2, [0])],
            vec!["a".into()],
        )
        .unwrap();
        assert_eq!(p.type_count(), 2);
        assert_eq!(p.type_code(1), "T3");
        assert_eq!(p.movements()[1].type_index, 1);
        assert_eq!(p.largest_cost(), &rat(5, 1));
    }

    #[test]
    fn tied_costs_contribute_nothing() {
        let p = AirportProblem::new(
            vec![("T1".into(), rat(5, 1)), ("T2".into(), rat(5, 1))],
            vec![Movement::new("m1", 0, [0]), Movement::new("m2", 1, [1])],
            vec!["a".into(), "b".into()],
        )
        .unwrap();
        let report = configuration_closed(&p);
        // the zero increment between tied costs means equal fees
        assert_eq!(report.fee(0), report.fee(1));
        assert_eq!(report.checksum(), &rat(5, 1));
    }

    #[test]
    fn construction_validation() {
        assert!(matches!(
            AirportProblem::new(vec![], vec![Movement::new("m", 0, [0])], vec!["a".into()]),
            Err(AirportError::NoTypes)
        ));
        assert!(matches!(
            AirportProblem::new(
                vec![("T".into(), rat(1, 1))],
                vec![Movement::new("m", 0, [])],
                vec!["a".into()]
            ),
            Err(AirportError::NoAirlines { movement: 0 })
        ));
        assert!(matches!(
            AirportProblem::new(
                vec![("T".into(), rat(2, 1)), ("U".into(), rat(1, 1))],
                vec![Movement::new("m", 0, [0])],
                vec!["a".into()]
            ),
            Err(AirportError::DecreasingCosts { index: 1 })
        ));
        assert!(matches!(
            AirportProblem::new(
                vec![("T".into(), rat(1, 1))],
                vec![Movement::new("m", 0, [0])],
                vec!["a".into(), "unused".into()]
            ),
            Err(AirportError::UnusedAirline { .. })
        ));
    }
}
