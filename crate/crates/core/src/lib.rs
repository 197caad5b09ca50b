pub mod alexander;
pub mod artin;
pub mod braid;
pub mod cable;
pub mod cli;
pub mod cocycle;
pub mod error;
pub mod garside;
pub mod laurent;
pub mod movie;
pub mod permutation;
pub mod presentation;
pub mod quandle;
pub mod quotients;
pub mod ribbon;
pub mod smith;
pub mod transforms;

pub use error::{Error, Result};
