//! Definition-level solvers for the Shapley, Owen and configuration values.
//!
//! These enumerate the defining sums on exact rationals and act as oracles
//! for the airport closed forms. Enumeration sizes are capped: the Shapley
//! value needs `n ≤ 24`, the Owen and configuration values need at most 24
//! blocks and at most 24 players per block (their sums are block-local, so
//! the total player count is not constrained).

use crate::coalition::{subsets_of, Coalition};
use crate::config::CoalitionConfiguration;
use crate::error::SolveError;
use crate::game::CostGame;
use crate::numeric::factorials;
use crate::representatives::{build_representatives, RepresentativesGame};
use num_rational::BigRational;
use num_traits::Zero;

/// Hard limit on any single subset enumeration.
pub const BRUTE_FORCE_CAP: usize = 24;

/// Which rule produced an allocation.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Method {
    Shapley,
    Owen,
    Configuration,
    ConfigurationViaRepresentatives,
}

impl Method {
    pub fn label(self) -> &'static str {
        match self {
            Method::Shapley => "shapley",
            Method::Owen => "owen",
            Method::Configuration => "configuration",
            Method::ConfigurationViaRepresentatives => "configuration-via-representatives",
        }
    }
}

impl std::fmt::Display for Method {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.label())
    }
}

/// A per-player allocation of the grand coalition cost.
#[derive(Clone, Debug, PartialEq)]
pub struct Allocation {
    method: Method,
    values: Vec<BigRational>,
}

impl Allocation {
    pub fn new(method: Method, values: Vec<BigRational>) -> Self {
        Allocation { method, values }
    }

    pub fn method(&self) -> Method {
        self.method
    }

    pub fn values(&self) -> &[BigRational] {
        &self.values
    }

    pub fn value(&self, player: usize) -> &BigRational {
        &self.values[player]
    }

    pub fn sum(&self) -> BigRational {
        self.values.iter().sum()
    }
}

fn check_cap(what: &'static str, size: usize) -> Result<(), SolveError> {
    if size > BRUTE_FORCE_CAP {
        Err(SolveError::CapExceeded {
            what,
            size,
            cap: BRUTE_FORCE_CAP,
        })
    } else {
        Ok(())
    }
}

/// `|C|! (m - |C| - 1)! / m!` for every feasible `|C|`.
fn outer_weights(m: usize) -> Vec<BigRational> {
    let fact = factorials(m);
    (0..m)
        .map(|c| {
            BigRational::new(
                fact[c].clone() * fact[m - c - 1].clone(),
                fact[m].clone(),
            )
        })
        .collect()
}

/// `(|S| - 1)! (b - |S|)! / b!` for `|S| = 1..=b`, indexed by `|S| - 1`.
fn inner_weights(b: usize) -> Vec<BigRational> {
    let fact = factorials(b);
    (1..=b)
        .map(|s| {
            BigRational::new(
                fact[s - 1].clone() * fact[b - s].clone(),
                fact[b].clone(),
            )
        })
        .collect()
}

/// The Shapley value by the subset-sum formula
/// `Sh_i = Σ_{S ∌ i} |S|!(n-|S|-1)!/n! (c(S∪{i}) - c(S))`.
pub fn shapley(game: &CostGame) -> Result<Allocation, SolveError> {
    let n = game.player_count();
    check_cap("players", n)?;
    let fact = factorials(n.max(1));
    let weights: Vec<BigRational> = (0..n)
        .map(|s| {
            BigRational::new(
                fact[s].clone() * fact[n - s - 1].clone(),
                fact[n].clone(),
            )
        })
        .collect();
    let mut values = Vec::with_capacity(n);
    for i in 0..n {
        let others: Vec<usize> = (0..n).filter(|&p| p != i).collect();
        // group marginals by |S| and apply each factorial weight once
        let mut by_size: Vec<BigRational> = vec![BigRational::zero(); n];
        for s in subsets_of(n, &others) {
            let size = s.len();
            let marginal = game.cost(&s.with(i)) - game.cost(&s);
            by_size[size] += marginal;
        }
        let mut total = BigRational::zero();
        for (size, sum) in by_size.into_iter().enumerate() {
            if !sum.is_zero() {
                total += &weights[size] * sum;
            }
        }
        values.push(total);
    }
    Ok(Allocation::new(Method::Shapley, values))
}

/// The Owen value of a game with a priori unions, by its defining double sum.
pub fn owen(game: &CostGame, partition: &CoalitionConfiguration) -> Result<Allocation, SolveError> {
    if !partition.is_partition() {
        return Err(SolveError::NotAPartition);
    }
    configuration_value_impl(game, partition, Method::Owen)
}

/// The configuration value, by its defining triple sum over the blocks
/// containing the player, the outside-block subsets, and the inside
/// coalitions.
pub fn configuration_value(
    game: &CostGame,
    cfg: &CoalitionConfiguration,
) -> Result<Allocation, SolveError> {
    configuration_value_impl(game, cfg, Method::Configuration)
}

/// On a partition the configuration value's sums collapse to the Owen sums
/// (each player has exactly one block), so one enumeration serves both.
fn configuration_value_impl(
    game: &CostGame,
    cfg: &CoalitionConfiguration,
    method: Method,
) -> Result<Allocation, SolveError> {
    let n = game.player_count();
    let m = cfg.block_count();
    check_cap("blocks", m)?;
    for b in cfg.blocks() {
        check_cap("block members", b.len())?;
    }
    let outer = outer_weights(m);
    let block_members: Vec<Vec<usize>> = cfg.blocks().iter().map(|b| b.players().collect()).collect();

    let mut values = Vec::with_capacity(n);
    for i in 0..n {
        let my_blocks = cfg.blocks_containing(i)?;
        let outside: Vec<usize> = (0..m).filter(|q| !my_blocks.contains(q)).collect();
        let mut total = BigRational::zero();
        for &q in &my_blocks {
            let members = &block_members[q];
            let inner = inner_weights(members.len());
            let co_members: Vec<usize> = members.iter().copied().filter(|&p| p != i).collect();
            for outside_set in subsets_of(m, &outside) {
                let mut a_union = Coalition::empty(n);
                for r in outside_set.players() {
                    a_union = a_union.union(&cfg.blocks()[r]);
                }
                let w_out = &outer[outside_set.len()];
                for s0 in subsets_of(n, &co_members) {
                    let without = a_union.union(&s0);
                    let with = without.with(i);
                    let marginal = game.cost(&with) - game.cost(&without);
                    if marginal.is_zero() {
                        continue;
                    }
                    total += w_out * &inner[s0.len()] * marginal;
                }
            }
        }
        values.push(total);
    }
    Ok(Allocation::new(method, values))
}

/// The configuration value computed through the representatives game:
/// `CV_i = Σ_{q : B_q ∋ i} Ow_{i(q)}(N̄, c̄, B̄)`.
pub fn configuration_value_via_representatives(
    game: &CostGame,
    cfg: &CoalitionConfiguration,
) -> Result<Allocation, SolveError> {
    let rg = build_representatives(game, cfg)?;
    let bar = owen(rg.base(), rg.partition())?;
    Ok(sum_representative_shares(game.player_count(), &rg, &bar))
}

/// Folds an allocation on the representatives back onto the original players.
pub fn sum_representative_shares(
    n: usize,
    rg: &RepresentativesGame,
    bar: &Allocation,
) -> Allocation {
    let mut values = vec![BigRational::zero(); n];
    for rep in 0..rg.rep_count() {
        let (player, _) = rg.origin(rep);
        values[player] += bar.value(rep);
    }
    Allocation::new(Method::ConfigurationViaRepresentatives, values)
}
