//! The representatives construction: one auxiliary player per
//! (player, block) incidence, with the induced partition and lifted game.

use crate::coalition::Coalition;
use crate::config::CoalitionConfiguration;
use crate::error::GameError;
use crate::game::CostGame;
use std::collections::HashMap;

/// The game with a priori unions built from a game with coalition
/// configuration: each player `i` gets one representative `i(q)` per block
/// `B_q` containing it, the blocks become disjoint, and the lifted game
/// charges a coalition of representatives the original cost of the players
/// they stand for.
#[derive(Clone)]
pub struct RepresentativesGame {
    base: CostGame,
    partition: CoalitionConfiguration,
    rep_index: HashMap<(usize, usize), usize>,
    origin: Vec<(usize, usize)>,
}

impl RepresentativesGame {
    /// The lifted game over the representatives.
    pub fn base(&self) -> &CostGame {
        &self.base
    }

    /// The induced partition of the representatives; block `q` holds the
    /// representatives of the members of the original block `q`.
    pub fn partition(&self) -> &CoalitionConfiguration {
        &self.partition
    }

    pub fn rep_count(&self) -> usize {
        self.origin.len()
    }

    /// Index of the representative of `player` in block `block`.
    pub fn rep_index(&self, player: usize, block: usize) -> Result<usize, GameError> {
        self.rep_index
            .get(&(player, block))
            .copied()
            .ok_or(GameError::NotAnIncidence { player, block })
    }

    /// The (player, block) incidence a representative stands for.
    pub fn origin(&self, rep: usize) -> (usize, usize) {
        self.origin[rep]
    }
}

/// Builds `(N̄, c̄, B̄)` for a game with coalition configuration.
///
/// Representatives are ordered by (block index, player index), so for a
/// partition input the map player → representative is a bijection and the
/// lifted game is the original one up to that relabeling.
pub fn build_representatives(
    game: &CostGame,
    cfg: &CoalitionConfiguration,
) -> Result<RepresentativesGame, GameError> {
    let n = game.player_count();
    if cfg.player_count() != n {
        return Err(GameError::WidthMismatch {
            left: n,
            right: cfg.player_count(),
        });
    }
    let mut origin = Vec::new();
    let mut rep_index = HashMap::new();
    let mut bar_blocks_members: Vec<Vec<usize>> = Vec::with_capacity(cfg.block_count());
    for (q, block) in cfg.blocks().iter().enumerate() {
        let mut members = Vec::with_capacity(block.len());
        for i in block.players() {
            let r = origin.len();
            origin.push((i, q));
            rep_index.insert((i, q), r);
            members.push(r);
        }
        bar_blocks_members.push(members);
    }
    let n_bar = origin.len();
    let bar_blocks = bar_blocks_members
        .into_iter()
        .map(|members| Coalition::from_players(n_bar, members))
        .collect::<Result<Vec<_>, _>>()?;
    let partition = CoalitionConfiguration::new(n_bar, bar_blocks)?;
    debug_assert!(partition.is_partition());

    let owners_of = origin.clone();
    let base_game = game.clone();
    let base = CostGame::from_fn(n_bar, move |s_bar| {
        let mut owners = Coalition::empty(n);
        for r in s_bar.players() {
            owners.insert(owners_of[r].0);
        }
        base_game.cost(&owners)
    });

    Ok(RepresentativesGame {
        base,
        partition,
        rep_index,
        origin,
    })
}

/// The partition `B̄_{-k(p)}`: block `p` loses the representative of player
/// `k`, which becomes a singleton inserted right after it. Isolating the
/// member of a singleton block leaves the partition unchanged.
pub fn isolate_representative(
    rg: &RepresentativesGame,
    player: usize,
    block: usize,
) -> Result<CoalitionConfiguration, GameError> {
    let rep = rg.rep_index(player, block)?;
    let partition = rg.partition();
    let mut blocks = Vec::with_capacity(partition.block_count() + 1);
    for (q, b) in partition.blocks().iter().enumerate() {
        if q != block || b.len() == 1 {
            blocks.push(b.clone());
        } else {
            blocks.push(b.without(rep));
            blocks.push(Coalition::singleton(rg.rep_count(), rep));
        }
    }
    CoalitionConfiguration::new(rg.rep_count(), blocks)
}
