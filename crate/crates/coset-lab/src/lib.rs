//! Exact algebra over Z/p^mu built around double cosets of GL(n) and their product.
//!
//! The command-line front end lives in [`cli`]; the binary only forwards to [`cli::run`].

pub mod error;
pub mod ring;
pub mod linalg;
pub mod submodule;
pub mod coset;
pub mod partial_iso;
pub mod idempotent;
pub mod stabilizer;
pub mod induced;
pub mod cli;

pub use error::{Error, Result};
pub use linalg::{Mat, Side, SmithDecomp};
pub use ring::{RingCtx, Residue};
pub use submodule::Submodule;
pub use coset::DoubleCoset;
pub use partial_iso::{LMorphism, PartialIso};
