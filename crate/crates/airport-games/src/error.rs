//! Error types shared across the crate.

use thiserror::Error;

/// Structural errors on coalitions, games and configurations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GameError {
    #[error("player index {index} out of range for {n} players")]
    PlayerOutOfRange { index: usize, n: usize },
    #[error("operands are over different player sets ({left} vs {right} players)")]
    WidthMismatch { left: usize, right: usize },
    #[error("block {block} of the configuration is empty")]
    EmptyBlock { block: usize },
    #[error("configuration does not cover the player set: player {missing} is in no block")]
    NotACover { missing: usize },
    #[error("block index {block} out of range for {m} blocks")]
    BlockOutOfRange { block: usize, m: usize },
    #[error("no blocks selected")]
    EmptySelection,
    #[error("cannot shrink player {player} onto itself")]
    SamePlayer { player: usize },
    #[error("player {player} does not belong to block {block}")]
    NotAnIncidence { player: usize, block: usize },
    #[error("explicit cost table must have 2^n entries, got {got} for n = {n}")]
    BadTableSize { n: usize, got: usize },
    #[error("a cost game must assign 0 to the empty coalition")]
    NonzeroEmptyCoalition,
}

/// Errors from the brute-force value solvers.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SolveError {
    #[error("instance size {size} exceeds the brute-force cap of {cap} ({what})")]
    CapExceeded {
        what: &'static str,
        size: usize,
        cap: usize,
    },
    #[error("the Owen value requires a partition, but blocks overlap")]
    NotAPartition,
    #[error("axiom precondition violated: {0}")]
    Precondition(String),
    #[error(transparent)]
    Game(#[from] GameError),
}

/// Errors building or evaluating airport problems.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AirportError {
    #[error("airport problem needs at least one aircraft type")]
    NoTypes,
    #[error("airport problem needs at least one movement")]
    NoMovements,
    #[error("type costs must be nondecreasing: cost of type {index} is below its predecessor")]
    DecreasingCosts { index: usize },
    #[error("type cost {index} is negative")]
    NegativeCost { index: usize },
    #[error("movement {movement} references unknown type {type_index}")]
    UnknownType { movement: usize, type_index: usize },
    #[error("movement {movement} references unknown airline {airline}")]
    UnknownAirline { movement: usize, airline: usize },
    #[error("movement {movement} has no operating airlines")]
    NoAirlines { movement: usize },
    #[error("airline {name:?} operates no movements")]
    UnusedAirline { name: String },
    #[error("duplicate movement id {id:?}")]
    DuplicateMovement { id: String },
    #[error("duplicate airline name {name:?}")]
    DuplicateAirline { name: String },
    #[error("take-off weight {index} is not strictly positive")]
    NonpositiveWeight { index: usize },
    #[error("take-off weights must be nondecreasing: weight {index} is below its predecessor")]
    DecreasingWeights { index: usize },
    #[error("no take-off weights given")]
    NoWeights,
    #[error("the Owen fee schedule needs a partition, but code-sharing is present; use the configuration method or coarsen airlines into alliances")]
    CodeSharingPresent,
    #[error("fee report was computed for a different problem")]
    ReportMismatch,
    #[error(transparent)]
    Game(#[from] GameError),
}

/// Errors reading or writing dataset files.
#[derive(Debug, Error)]
pub enum DatasetError {
    #[error("cannot read {path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },
    #[error("line {line}: {message}")]
    Malformed { line: usize, message: String },
    #[error("the [types] section is missing or empty")]
    MissingTypes,
    #[error("the [movements] section is missing or empty")]
    MissingMovements,
    #[error("types give take-off weights but [meta] has no total_fee")]
    MissingTotalFee,
    #[error("the input file has no [alliances] section")]
    MissingAlliances,
    #[error(transparent)]
    Airport(#[from] AirportError),
}

impl DatasetError {
    pub fn malformed(line: usize, message: impl Into<String>) -> Self {
        DatasetError::Malformed {
            line,
            message: message.into(),
        }
    }
}
