//! Executable checkers for the axioms characterizing the configuration value.
//!
//! Each checker verifies one property on a concrete instance, exactly (no
//! tolerances), and returns a verdict carrying a counterexample description
//! when the property fails. Checkers that must enumerate coalitions to test
//! their hypothesis (null players, doubles, symmetric blocks) cap the player
//! count at [`ENUMERATION_CAP`].

use crate::coalition::{subsets_of, Coalition};
use crate::config::CoalitionConfiguration;
use crate::error::SolveError;
use crate::game::{quotient_game, shrink_game, CostGame};
use crate::numeric::format_exact;
use crate::representatives::{build_representatives, isolate_representative};
use crate::values::Allocation;
use num_rational::BigRational;
use num_traits::Zero;

/// Cap for the 2^n hypothesis enumerations inside checkers.
pub const ENUMERATION_CAP: usize = 16;

/// The axioms under test.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Axiom {
    Efficiency,
    NullPlayer,
    Linearity,
    Anonymity,
    CoalitionalSymmetry,
    Merger,
    AdditivityInRepresentatives,
    BalancedContributions,
    CoalitionalQuotient,
}

impl Axiom {
    pub fn label(self) -> &'static str {
        match self {
            Axiom::Efficiency => "EFF",
            Axiom::NullPlayer => "NPP",
            Axiom::Linearity => "L",
            Axiom::Anonymity => "A",
            Axiom::CoalitionalSymmetry => "CS",
            Axiom::Merger => "M",
            Axiom::AdditivityInRepresentatives => "ADD-R",
            Axiom::BalancedContributions => "BC-CC",
            Axiom::CoalitionalQuotient => "CQ",
        }
    }
}

/// Outcome of one check. A witness is present exactly when the axiom fails;
/// `NotApplicable` reports instances whose hypothesis does not hold (e.g.
/// the supplied pair is not doubles).
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Verdict {
    Holds,
    Fails { witness: String },
    NotApplicable { reason: String },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AxiomVerdict {
    pub axiom: Axiom,
    pub verdict: Verdict,
}

impl AxiomVerdict {
    fn holds(axiom: Axiom) -> Self {
        AxiomVerdict {
            axiom,
            verdict: Verdict::Holds,
        }
    }

    fn fails(axiom: Axiom, witness: String) -> Self {
        AxiomVerdict {
            axiom,
            verdict: Verdict::Fails { witness },
        }
    }

    fn not_applicable(axiom: Axiom, reason: String) -> Self {
        AxiomVerdict {
            axiom,
            verdict: Verdict::NotApplicable { reason },
        }
    }

    pub fn is_holds(&self) -> bool {
        self.verdict == Verdict::Holds
    }

    pub fn witness(&self) -> Option<&str> {
        match &self.verdict {
            Verdict::Fails { witness } => Some(witness),
            _ => None,
        }
    }
}

/// An allocation rule for games with coalition configuration, as the
/// checkers see it.
pub type Solver<'a> =
    &'a dyn Fn(&CostGame, &CoalitionConfiguration) -> Result<Allocation, SolveError>;

fn check_enum_cap(n: usize) -> Result<(), SolveError> {
    if n > ENUMERATION_CAP {
        Err(SolveError::CapExceeded {
            what: "players (axiom hypothesis enumeration)",
            size: n,
            cap: ENUMERATION_CAP,
        })
    } else {
        Ok(())
    }
}

/// (EFF): the allocation exhausts the grand coalition cost.
pub fn check_efficiency(game: &CostGame, alloc: &Allocation) -> AxiomVerdict {
    let total = alloc.sum();
    let grand = game.grand_coalition_cost();
    if total == grand {
        AxiomVerdict::holds(Axiom::Efficiency)
    } else {
        AxiomVerdict::fails(
            Axiom::Efficiency,
            format!(
                "allocation sums to {} but c(N) = {}",
                format_exact(&total),
                format_exact(&grand)
            ),
        )
    }
}

/// (NPP): every player whose marginal contribution is identically zero gets
/// exactly zero. Null players are detected by enumeration.
pub fn check_null_player(game: &CostGame, alloc: &Allocation) -> Result<AxiomVerdict, SolveError> {
    let n = game.player_count();
    check_enum_cap(n)?;
    for i in 0..n {
        let others: Vec<usize> = (0..n).filter(|&p| p != i).collect();
        let is_null = subsets_of(n, &others).all(|s| game.cost(&s.with(i)) == game.cost(&s));
        if is_null && !alloc.value(i).is_zero() {
            return Ok(AxiomVerdict::fails(
                Axiom::NullPlayer,
                format!(
                    "player {i} is null but receives {}",
                    format_exact(alloc.value(i))
                ),
            ));
        }
    }
    Ok(AxiomVerdict::holds(Axiom::NullPlayer))
}

/// (L): `ψ(λc + μc') = λψ(c) + μψ(c')` for the given coefficient pair.
pub fn check_linearity(
    game: &CostGame,
    other: &CostGame,
    cfg: &CoalitionConfiguration,
    solver: Solver,
    lambda: &BigRational,
    mu: &BigRational,
) -> Result<AxiomVerdict, SolveError> {
    let combined = CostGame::linear_combination(lambda.clone(), game, mu.clone(), other)?;
    let lhs = solver(&combined, cfg)?;
    let a = solver(game, cfg)?;
    let b = solver(other, cfg)?;
    for i in 0..game.player_count() {
        let rhs = lambda * a.value(i) + mu * b.value(i);
        if lhs.value(i) != &rhs {
            return Ok(AxiomVerdict::fails(
                Axiom::Linearity,
                format!(
                    "player {i}: ψ(λc+μc') = {} but λψ(c)+μψ(c') = {}",
                    format_exact(lhs.value(i)),
                    format_exact(&rhs)
                ),
            ));
        }
    }
    Ok(AxiomVerdict::holds(Axiom::Linearity))
}

/// (A): for a permutation σ fixing every block setwise,
/// `ψ_i(σc) = ψ_{σ(i)}(c)` where `(σc)(S) = c(σ(S))`.
pub fn check_anonymity(
    game: &CostGame,
    cfg: &CoalitionConfiguration,
    solver: Solver,
    sigma: &[usize],
) -> Result<AxiomVerdict, SolveError> {
    let n = game.player_count();
    if sigma.len() != n {
        return Err(SolveError::Precondition(format!(
            "permutation has {} entries for {} players",
            sigma.len(),
            n
        )));
    }
    let mut seen = vec![false; n];
    for &img in sigma {
        if img >= n || seen[img] {
            return Err(SolveError::Precondition(
                "σ is not a permutation of the player set".into(),
            ));
        }
        seen[img] = true;
    }
    for (q, block) in cfg.blocks().iter().enumerate() {
        let image = Coalition::from_players(n, block.players().map(|p| sigma[p]))?;
        if &image != block {
            return Err(SolveError::Precondition(format!(
                "σ does not stabilize block {q}"
            )));
        }
    }
    let sigma_owned = sigma.to_vec();
    let base = game.clone();
    let permuted = CostGame::from_fn(n, move |s| {
        let image = Coalition::from_players(n, s.players().map(|p| sigma_owned[p]))
            .expect("permutation image");
        base.cost(&image)
    });
    let lhs = solver(&permuted, cfg)?;
    let rhs = solver(game, cfg)?;
    for (i, &image) in sigma.iter().enumerate() {
        if lhs.value(i) != rhs.value(image) {
            return Ok(AxiomVerdict::fails(
                Axiom::Anonymity,
                format!(
                    "player {i}: ψ_i(σc) = {} but ψ_σ(i)(c) = {}",
                    format_exact(lhs.value(i)),
                    format_exact(rhs.value(image))
                ),
            ));
        }
    }
    Ok(AxiomVerdict::holds(Axiom::Anonymity))
}

/// (CS): on a partition, two blocks that are interchangeable against every
/// outside union receive equal totals. Stated for partitions only, and
/// enforced as such.
pub fn check_coalitional_symmetry(
    game: &CostGame,
    partition: &CoalitionConfiguration,
    alloc: &Allocation,
) -> Result<AxiomVerdict, SolveError> {
    if !partition.is_partition() {
        return Err(SolveError::NotAPartition);
    }
    let m = partition.block_count();
    check_enum_cap(m)?;
    let n = game.player_count();
    let block_total = |q: usize| -> BigRational {
        partition.blocks()[q]
            .players()
            .map(|i| alloc.value(i))
            .sum()
    };
    for p in 0..m {
        for q in (p + 1)..m {
            let rest: Vec<usize> = (0..m).filter(|&r| r != p && r != q).collect();
            let symmetric = subsets_of(m, &rest).all(|w| {
                let mut union = Coalition::empty(n);
                for r in w.players() {
                    union = union.union(&partition.blocks()[r]);
                }
                game.cost(&union.union(&partition.blocks()[p]))
                    == game.cost(&union.union(&partition.blocks()[q]))
            });
            if symmetric {
                let (tp, tq) = (block_total(p), block_total(q));
                if tp != tq {
                    return Ok(AxiomVerdict::fails(
                        Axiom::CoalitionalSymmetry,
                        format!(
                            "blocks {p} and {q} are symmetric but receive {} and {}",
                            format_exact(&tp),
                            format_exact(&tq)
                        ),
                    ));
                }
            }
        }
    }
    Ok(AxiomVerdict::holds(Axiom::CoalitionalSymmetry))
}

/// Builds the configuration `B_{i\j}` on `N \ {j}`: blocks containing `j`
/// swap it for `i`; indices above `j` shift down.
fn merger_configuration(
    cfg: &CoalitionConfiguration,
    i: usize,
    j: usize,
) -> Result<CoalitionConfiguration, SolveError> {
    let n = cfg.player_count();
    let shift = |p: usize| if p < j { p } else { p - 1 };
    let blocks = cfg
        .blocks()
        .iter()
        .map(|b| {
            let members = b
                .players()
                .map(|p| if p == j { i } else { p })
                .map(shift)
                .collect::<std::collections::BTreeSet<usize>>();
            Coalition::from_players(n - 1, members)
        })
        .collect::<Result<Vec<_>, _>>()?;
    Ok(CoalitionConfiguration::new(n - 1, blocks)?)
}

/// (M): if `i` and `j` are doubles with disjoint block sets, removing `j`
/// (folding it into `i`) leaves every third player's allocation unchanged.
///
/// The doubles hypothesis is verified by enumeration; instances where it
/// fails yield `NotApplicable`.
pub fn check_merger(
    game: &CostGame,
    cfg: &CoalitionConfiguration,
    i: usize,
    j: usize,
    solver: Solver,
) -> Result<AxiomVerdict, SolveError> {
    let n = game.player_count();
    check_enum_cap(n)?;
    if i == j || i >= n || j >= n {
        return Err(SolveError::Precondition(format!(
            "invalid player pair ({i}, {j})"
        )));
    }
    // (i) equal marginal costs over every coalition
    let all: Vec<usize> = (0..n).collect();
    for s in subsets_of(n, &all) {
        if game.cost(&s.with(i)) != game.cost(&s.with(j)) {
            return Ok(AxiomVerdict::not_applicable(
                Axiom::Merger,
                format!("players {i} and {j} are not doubles: c(S∪i) ≠ c(S∪j) at S = {s:?}"),
            ));
        }
    }
    // block sets must be disjoint by index
    let bi = cfg.blocks_containing(i)?;
    let bj = cfg.blocks_containing(j)?;
    if bi.iter().any(|q| bj.contains(q)) {
        return Ok(AxiomVerdict::not_applicable(
            Axiom::Merger,
            format!("players {i} and {j} share a block"),
        ));
    }
    // (ii) no block of i reappears as a block of j with j swapped in
    for &q in &bi {
        let b = &cfg.blocks()[q];
        if b.contains(j) {
            return Ok(AxiomVerdict::not_applicable(
                Axiom::Merger,
                format!("block {q} contains both {i} and {j}"),
            ));
        }
        let swapped = b.without(i).with(j);
        let with_both = b.with(j);
        for &r in &bj {
            let other = &cfg.blocks()[r];
            if other == &swapped || other == &with_both {
                return Ok(AxiomVerdict::not_applicable(
                    Axiom::Merger,
                    format!("blocks {q} and {r} violate the doubles block condition"),
                ));
            }
        }
    }

    let before = solver(game, cfg)?;
    let shrunk = shrink_game(game, i, j)?;
    let shrunk_cfg = merger_configuration(cfg, i, j)?;
    let after = solver(&shrunk, &shrunk_cfg)?;
    for k in (0..n).filter(|&k| k != i && k != j) {
        let new_k = if k < j { k } else { k - 1 };
        if before.value(k) != after.value(new_k) {
            return Ok(AxiomVerdict::fails(
                Axiom::Merger,
                format!(
                    "player {k}: ψ_k = {} before but {} after merging {j} into {i}",
                    format_exact(before.value(k)),
                    format_exact(after.value(new_k))
                ),
            ));
        }
    }
    Ok(AxiomVerdict::holds(Axiom::Merger))
}

/// (ADD-R): `ψ_i(N,c,B) = Σ_{q : B_q ∋ i} ψ_{i(q)}(N̄,c̄,B̄)`.
pub fn check_add_r(
    game: &CostGame,
    cfg: &CoalitionConfiguration,
    solver: Solver,
) -> Result<AxiomVerdict, SolveError> {
    let alloc = solver(game, cfg)?;
    let rg = build_representatives(game, cfg)?;
    let bar = solver(rg.base(), rg.partition())?;
    for i in 0..game.player_count() {
        let mut rhs = BigRational::zero();
        for q in cfg.blocks_containing(i)? {
            rhs += bar.value(rg.rep_index(i, q)?);
        }
        if alloc.value(i) != &rhs {
            return Ok(AxiomVerdict::fails(
                Axiom::AdditivityInRepresentatives,
                format!(
                    "player {i}: ψ_i = {} but its representatives sum to {}",
                    format_exact(alloc.value(i)),
                    format_exact(&rhs)
                ),
            ));
        }
    }
    Ok(AxiomVerdict::holds(Axiom::AdditivityInRepresentatives))
}

/// (BC-CC): for players with identical block sets,
/// `ψ_i − ψ_j = Σ_q [ψ_{i(q)}(B̄_{−j(q)}) − ψ_{j(q)}(B̄_{−i(q)})]`.
pub fn check_bc_cc(
    game: &CostGame,
    cfg: &CoalitionConfiguration,
    solver: Solver,
    i: usize,
    j: usize,
) -> Result<AxiomVerdict, SolveError> {
    let bi = cfg.blocks_containing(i)?;
    let bj = cfg.blocks_containing(j)?;
    if bi != bj {
        return Err(SolveError::Precondition(format!(
            "players {i} and {j} do not share the same block set"
        )));
    }
    let alloc = solver(game, cfg)?;
    let lhs = alloc.value(i) - alloc.value(j);
    let mut rhs = BigRational::zero();
    if i != j {
        let rg = build_representatives(game, cfg)?;
        for &q in &bi {
            let iso_j = isolate_representative(&rg, j, q)?;
            let iso_i = isolate_representative(&rg, i, q)?;
            let with_j_isolated = solver(rg.base(), &iso_j)?;
            let with_i_isolated = solver(rg.base(), &iso_i)?;
            rhs += with_j_isolated.value(rg.rep_index(i, q)?)
                - with_i_isolated.value(rg.rep_index(j, q)?);
        }
    }
    if lhs == rhs {
        Ok(AxiomVerdict::holds(Axiom::BalancedContributions))
    } else {
        Ok(AxiomVerdict::fails(
            Axiom::BalancedContributions,
            format!(
                "players {i},{j}: ψ_i − ψ_j = {} but the isolation differences sum to {}",
                format_exact(&lhs),
                format_exact(&rhs)
            ),
        ))
    }
}

/// (CQ): block totals of the representatives game equal the block's value in
/// the quotient game played among blocks with the trivial configuration.
pub fn check_cq(
    game: &CostGame,
    cfg: &CoalitionConfiguration,
    solver: Solver,
) -> Result<AxiomVerdict, SolveError> {
    let rg = build_representatives(game, cfg)?;
    let bar = solver(rg.base(), rg.partition())?;
    let quotient = quotient_game(game, cfg);
    let m = cfg.block_count();
    let quotient_alloc = solver(&quotient, &CoalitionConfiguration::singletons(m))?;
    for (q, block) in cfg.blocks().iter().enumerate() {
        let mut lhs = BigRational::zero();
        for player in block.players() {
            lhs += bar.value(rg.rep_index(player, q)?);
        }
        if &lhs != quotient_alloc.value(q) {
            return Ok(AxiomVerdict::fails(
                Axiom::CoalitionalQuotient,
                format!(
                    "block {q}: representative total {} but quotient share {}",
                    format_exact(&lhs),
                    format_exact(quotient_alloc.value(q))
                ),
            ));
        }
    }
    Ok(AxiomVerdict::holds(Axiom::CoalitionalQuotient))
}
