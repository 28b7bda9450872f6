//! Cost allocation for airport runways as cooperative games.
//!
//! An airport problem has a set of aircraft *movements* (take-offs and
//! landings), each of a certain aircraft type with a nondecreasing cost
//! ladder, and each operated by one or more airlines (code-sharing). The
//! crate computes three fee schedules on the induced cost game:
//!
//! * the Shapley value (movements as isolated players),
//! * the Owen value (movements grouped into disjoint airlines or alliances),
//! * the configuration value (overlapping airline blocks, i.e. code-sharing),
//!
//! each both by its brute-force definition ([`values`]) and by the airport
//! closed form ([`airport`]), on exact rational arithmetic throughout.
//! The axioms characterizing these values ship as executable checkers
//! ([`axioms`]), and [`dataset`]/[`report`] provide the batch front end used
//! by the `fees` binary.

pub mod airport;
pub mod axioms;
pub mod coalition;
pub mod config;
pub mod dataset;
pub mod error;
pub mod game;
pub mod numeric;
pub mod report;
pub mod representatives;
pub mod values;

pub use airport::{AirportProblem, FeeReport, Movement};
pub use coalition::Coalition;
pub use config::CoalitionConfiguration;
pub use error::{AirportError, DatasetError, GameError, SolveError};
pub use game::CostGame;
pub use representatives::RepresentativesGame;
pub use values::{Allocation, Method};
