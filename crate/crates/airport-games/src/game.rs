//! Cost games: a player count plus a characteristic function.

use crate::coalition::Coalition;
use crate::config::CoalitionConfiguration;
use crate::error::GameError;
use num_rational::BigRational;
use num_traits::Zero;
use std::sync::Arc;

/// A TU cost game `(N, c)` with `c(∅) = 0`.
///
/// The characteristic function is stored as a shared closure, so games built
/// from rules (airport games, quotient games, shrunk games) stay lazy and
/// never materialize the 2^n table. Games are immutable and cheap to clone.
#[derive(Clone)]
pub struct CostGame {
    n: usize,
    eval: Arc<dyn Fn(&Coalition) -> BigRational + Send + Sync>,
}

impl CostGame {
    /// Wraps a rule. The empty coalition short-circuits to 0, so the stored
    /// function never sees it and the `c(∅) = 0` invariant holds by
    /// construction.
    pub fn from_fn<F>(n: usize, eval: F) -> Self
    where
        F: Fn(&Coalition) -> BigRational + Send + Sync + 'static,
    {
        CostGame {
            n,
            eval: Arc::new(eval),
        }
    }

    /// Builds a game from an explicit table indexed by coalition bitmask.
    ///
    /// Only for small games: `n` is capped at 24 (2^n entries).
    pub fn from_table(n: usize, costs: Vec<BigRational>) -> Result<Self, GameError> {
        if n > 24 || costs.len() != 1usize << n {
            return Err(GameError::BadTableSize { n, got: costs.len() });
        }
        if !costs[0].is_zero() {
            return Err(GameError::NonzeroEmptyCoalition);
        }
        Ok(CostGame::from_fn(n, move |s| {
            let mut mask = 0usize;
            for p in s.players() {
                mask |= 1 << p;
            }
            costs[mask].clone()
        }))
    }

    pub fn player_count(&self) -> usize {
        self.n
    }

    /// `c(S)`. Panics if `S` has the wrong width.
    pub fn cost(&self, s: &Coalition) -> BigRational {
        assert_eq!(
            s.player_count(),
            self.n,
            "coalition over {} players evaluated in a {}-player game",
            s.player_count(),
            self.n
        );
        if s.is_empty() {
            return BigRational::zero();
        }
        (self.eval)(s)
    }

    pub fn grand_coalition_cost(&self) -> BigRational {
        self.cost(&Coalition::full(self.n))
    }

    /// The game `λ·c + μ·c'` over the same player set.
    pub fn linear_combination(
        lambda: BigRational,
        game: &CostGame,
        mu: BigRational,
        other: &CostGame,
    ) -> Result<CostGame, GameError> {
        if game.n != other.n {
            return Err(GameError::WidthMismatch {
                left: game.n,
                right: other.n,
            });
        }
        let (a, b) = (game.clone(), other.clone());
        Ok(CostGame::from_fn(game.n, move |s| {
            &lambda * a.cost(s) + &mu * b.cost(s)
        }))
    }
}

impl std::fmt::Debug for CostGame {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("CostGame").field("n", &self.n).finish()
    }
}

/// The game among coalitions `c^B(W) = c(∪_{k∈W} B_k)` over block indices.
pub fn quotient_game(game: &CostGame, cfg: &CoalitionConfiguration) -> CostGame {
    debug_assert_eq!(game.player_count(), cfg.player_count());
    let base = game.clone();
    let blocks: Vec<Coalition> = cfg.blocks().to_vec();
    let n = game.player_count();
    CostGame::from_fn(blocks.len(), move |w| {
        let mut union = Coalition::empty(n);
        for q in w.players() {
            union = union.union(&blocks[q]);
        }
        base.cost(&union)
    })
}

/// The game `c_{i\j}` on `N \ {j}`: coalitions containing `i` drag `j` along.
///
/// Player indices above `j` shift down by one in the result.
pub fn shrink_game(game: &CostGame, i: usize, j: usize) -> Result<CostGame, GameError> {
    let n = game.player_count();
    if i == j {
        return Err(GameError::SamePlayer { player: i });
    }
    for p in [i, j] {
        if p >= n {
            return Err(GameError::PlayerOutOfRange { index: p, n });
        }
    }
    let base = game.clone();
    Ok(CostGame::from_fn(n - 1, move |s| {
        let mut old = Coalition::empty(n);
        for p in s.players() {
            old.insert(if p < j { p } else { p + 1 });
        }
        if old.contains(i) {
            old.insert(j);
        }
        base.cost(&old)
    }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numeric::rat;

    /// The four-movement example: types 10/20/22, movement types (1,2,3,2).
    pub(crate) fn example_game() -> CostGame {
        let type_of = [1u32, 2, 3, 2];
        let cost_of = [rat(10, 1), rat(20, 1), rat(22, 1)];
        CostGame::from_fn(4, move |s| {
            s.players()
                .map(|p| cost_of[(type_of[p] - 1) as usize].clone())
                .max()
                .unwrap_or_else(BigRational::zero)
        })
    }

    #[test]
    fn games_are_shareable_across_threads() {
        fn assert_send_sync<T: Send + Sync>() {}
        assert_send_sync::<CostGame>();
        assert_send_sync::<Coalition>();
        assert_send_sync::<CoalitionConfiguration>();
    }

    #[test]
    fn empty_coalition_costs_zero() {
        let g = example_game();
        assert_eq!(g.cost(&Coalition::empty(4)), rat(0, 1));
        let table = CostGame::from_table(1, vec![rat(0, 1), rat(7, 1)]).unwrap();
        assert_eq!(table.cost(&Coalition::empty(1)), rat(0, 1));
    }

    #[test]
    fn table_game_validates() {
        assert!(matches!(
            CostGame::from_table(2, vec![rat(0, 1)]),
            Err(GameError::BadTableSize { n: 2, got: 1 })
        ));
        assert!(matches!(
            CostGame::from_table(1, vec![rat(1, 1), rat(7, 1)]),
            Err(GameError::NonzeroEmptyCoalition)
        ));
    }

    #[test]
    fn quotient_of_example() {
        let g = example_game();
        let cfg = CoalitionConfiguration::new(
            4,
            vec![
                Coalition::from_players(4, [0]).unwrap(),
                Coalition::from_players(4, [1, 2]).unwrap(),
                Coalition::from_players(4, [1, 3]).unwrap(),
            ],
        )
        .unwrap();
        let q = quotient_game(&g, &cfg);
        // W = {a2,a3} -> c({2,3,4}) = 22
        assert_eq!(q.cost(&Coalition::from_players(3, [1, 2]).unwrap()), rat(22, 1));
        // W = M -> c(N)
        assert_eq!(q.grand_coalition_cost(), rat(22, 1));
        // W = {a1} -> c({1}) = 10
        assert_eq!(q.cost(&Coalition::singleton(3, 0)), rat(10, 1));
    }

    #[test]
    fn shrink_follows_two_case_rule() {
        let g = example_game();
        // i = movement 2 (index 1), j = movement 4 (index 3)
        let s = shrink_game(&g, 1, 3).unwrap();
        assert_eq!(s.player_count(), 3);
        // c_{2\4}({2}) = c({2,4}) = 20
        assert_eq!(s.cost(&Coalition::singleton(3, 1)), rat(20, 1));
        // c_{2\4}({1}) = c({1}) = 10
        assert_eq!(s.cost(&Coalition::singleton(3, 0)), rat(10, 1));
        // empty set, i not in S
        assert_eq!(s.cost(&Coalition::empty(3)), rat(0, 1));
        assert!(matches!(
            shrink_game(&g, 2, 2),
            Err(GameError::SamePlayer { player: 2 })
        ));
    }
}
