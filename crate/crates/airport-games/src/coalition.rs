//! Coalitions as fixed-width bitsets over 0-based player indices.

use crate::error::GameError;
use std::fmt;

/// A subset of the player set `{0, .., n-1}`.
///
/// The width `n` is part of the value; operations on coalitions of different
/// widths panic, since mixing player sets is a programming error.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Coalition {
    n: usize,
    words: Vec<u64>,
}

impl Coalition {
    pub fn empty(n: usize) -> Self {
        Coalition {
            n,
            words: vec![0; n.div_ceil(64)],
        }
    }

    pub fn full(n: usize) -> Self {
        let mut c = Coalition::empty(n);
        for i in 0..n {
            c.insert(i);
        }
        c
    }

    pub fn singleton(n: usize, player: usize) -> Self {
        let mut c = Coalition::empty(n);
        c.insert(player);
        c
    }

    /// Builds a coalition from an iterator of player indices.
    pub fn from_players<I: IntoIterator<Item = usize>>(n: usize, players: I) -> Result<Self, GameError> {
        let mut c = Coalition::empty(n);
        for p in players {
            if p >= n {
                return Err(GameError::PlayerOutOfRange { index: p, n });
            }
            c.insert(p);
        }
        Ok(c)
    }

    /// Interprets the low `n` bits of `mask` as a coalition (brute-force paths).
    pub fn from_mask(n: usize, mask: u64) -> Self {
        debug_assert!(n <= 64);
        let mut c = Coalition::empty(n);
        if !c.words.is_empty() {
            c.words[0] = mask & Self::tail_mask(n);
        }
        c
    }

    fn tail_mask(n: usize) -> u64 {
        if n.is_multiple_of(64) {
            u64::MAX
        } else {
            (1u64 << (n % 64)) - 1
        }
    }

    pub fn player_count(&self) -> usize {
        self.n
    }

    pub fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn contains(&self, player: usize) -> bool {
        player < self.n && self.words[player / 64] & (1 << (player % 64)) != 0
    }

    pub fn insert(&mut self, player: usize) {
        assert!(player < self.n, "player {player} out of range for {} players", self.n);
        self.words[player / 64] |= 1 << (player % 64);
    }

    pub fn remove(&mut self, player: usize) {
        assert!(player < self.n, "player {player} out of range for {} players", self.n);
        self.words[player / 64] &= !(1 << (player % 64));
    }

    pub fn with(&self, player: usize) -> Self {
        let mut c = self.clone();
        c.insert(player);
        c
    }

    pub fn without(&self, player: usize) -> Self {
        let mut c = self.clone();
        c.remove(player);
        c
    }

    pub fn union(&self, other: &Self) -> Self {
        self.check_width(other);
        let words = self
            .words
            .iter()
            .zip(&other.words)
            .map(|(a, b)| a | b)
            .collect();
        Coalition { n: self.n, words }
    }

    pub fn intersection(&self, other: &Self) -> Self {
        self.check_width(other);
        let words = self
            .words
            .iter()
            .zip(&other.words)
            .map(|(a, b)| a & b)
            .collect();
        Coalition { n: self.n, words }
    }

    pub fn is_disjoint(&self, other: &Self) -> bool {
        self.check_width(other);
        self.words.iter().zip(&other.words).all(|(a, b)| a & b == 0)
    }

    pub fn is_subset(&self, other: &Self) -> bool {
        self.check_width(other);
        self.words.iter().zip(&other.words).all(|(a, b)| a & !b == 0)
    }

    /// Ascending player indices.
    pub fn players(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(wi, &w)| {
            let mut bits = w;
            std::iter::from_fn(move || {
                if bits == 0 {
                    None
                } else {
                    let b = bits.trailing_zeros() as usize;
                    bits &= bits - 1;
                    Some(wi * 64 + b)
                }
            })
        })
    }

    fn check_width(&self, other: &Self) {
        assert_eq!(
            self.n, other.n,
            "coalition width mismatch: {} vs {}",
            self.n, other.n
        );
    }
}

impl fmt::Debug for Coalition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (k, p) in self.players().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, "}}")
    }
}

/// Iterates every subset of `members`, yielded as a [`Coalition`] of width `n`.
///
/// `members.len()` must stay below 64; brute-force callers cap it well below.
pub fn subsets_of(n: usize, members: &[usize]) -> impl Iterator<Item = Coalition> + '_ {
    let k = members.len();
    assert!(k < 64, "subset enumeration over {k} members");
    (0u64..(1u64 << k)).map(move |mask| {
        let mut c = Coalition::empty(n);
        for (bit, &p) in members.iter().enumerate() {
            if mask & (1 << bit) != 0 {
                c.insert(p);
            }
        }
        c
    })
}
