//! Coalition configurations: covering families of (possibly overlapping) blocks.

use crate::coalition::Coalition;
use crate::error::GameError;
use std::collections::BTreeSet;

/// An ordered family of nonempty coalitions whose union is the grand
/// coalition. Blocks may overlap (code-sharing); a partition is the disjoint
/// special case. Block indices are stable identifiers, and duplicate blocks
/// (equal as sets) are allowed — they are distinct blocks by index.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoalitionConfiguration {
    n: usize,
    blocks: Vec<Coalition>,
}

impl CoalitionConfiguration {
    pub fn new(n: usize, blocks: Vec<Coalition>) -> Result<Self, GameError> {
        let mut covered = Coalition::empty(n);
        for (q, b) in blocks.iter().enumerate() {
            if b.player_count() != n {
                return Err(GameError::WidthMismatch {
                    left: n,
                    right: b.player_count(),
                });
            }
            if b.is_empty() {
                return Err(GameError::EmptyBlock { block: q });
            }
            covered = covered.union(b);
        }
        if let Some(missing) = (0..n).find(|&i| !covered.contains(i)) {
            return Err(GameError::NotACover { missing });
        }
        Ok(CoalitionConfiguration { n, blocks })
    }

    /// The trivial configuration `{{0}, .., {n-1}}`.
    pub fn singletons(n: usize) -> Self {
        let blocks = (0..n).map(|i| Coalition::singleton(n, i)).collect();
        CoalitionConfiguration { n, blocks }
    }

    /// The one-block configuration `{N}`.
    pub fn grand(n: usize) -> Self {
        CoalitionConfiguration {
            n,
            blocks: vec![Coalition::full(n)],
        }
    }

    pub fn player_count(&self) -> usize {
        self.n
    }

    pub fn block_count(&self) -> usize {
        self.blocks.len()
    }

    pub fn blocks(&self) -> &[Coalition] {
        &self.blocks
    }

    pub fn block(&self, q: usize) -> Result<&Coalition, GameError> {
        self.blocks.get(q).ok_or(GameError::BlockOutOfRange {
            block: q,
            m: self.blocks.len(),
        })
    }

    /// True when the blocks are pairwise disjoint. With the covering
    /// invariant this is equivalent to the block sizes summing to `n`.
    pub fn is_partition(&self) -> bool {
        self.blocks.iter().map(Coalition::len).sum::<usize>() == self.n
    }

    /// Ascending indices of the blocks containing `player` (never empty,
    /// since configurations cover the player set).
    pub fn blocks_containing(&self, player: usize) -> Result<Vec<usize>, GameError> {
        if player >= self.n {
            return Err(GameError::PlayerOutOfRange {
                index: player,
                n: self.n,
            });
        }
        Ok(self
            .blocks
            .iter()
            .enumerate()
            .filter(|(_, b)| b.contains(player))
            .map(|(q, _)| q)
            .collect())
    }

    /// Replaces the selected blocks by their union (appended after the
    /// remaining blocks, which keep their order).
    pub fn merge_blocks(&self, which: &BTreeSet<usize>) -> Result<Self, GameError> {
        if which.is_empty() {
            return Err(GameError::EmptySelection);
        }
        let mut merged = Coalition::empty(self.n);
        for &q in which {
            merged = merged.union(self.block(q)?);
        }
        let mut blocks: Vec<Coalition> = self
            .blocks
            .iter()
            .enumerate()
            .filter(|(q, _)| !which.contains(q))
            .map(|(_, b)| b.clone())
            .collect();
        blocks.push(merged);
        Ok(CoalitionConfiguration { n: self.n, blocks })
    }
}
