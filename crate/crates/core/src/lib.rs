pub mod bwb;
pub mod cli;
pub mod coproduct;
pub mod divisibility;
pub mod dtseries;
pub mod error;
pub mod exactpoly;
pub mod limits;
pub mod schur;
pub mod selftest;
pub mod shuffle;
pub mod symfunc;
pub mod weights;

pub use error::{Error, Result};
pub use exactpoly::{BinFactor, BinFraction, LaurentPoly, QMono, TermKey, ZImage};
