//! Exact discriminants of symmetric pairs, computed by several independent
//! routes, together with sum-of-squares certificates and their verifier.
//!
//! ```
//! use symdisc::algebra::rat;
//! use symdisc::sympair::{PairData, PairId};
//!
//! let pair = PairData::build(PairId::GlnR(3))?;
//! let x = pair.cartan_element(&[rat(1), rat(2), rat(4)])?;
//! let routes = pair.discriminants(&x)?;
//! assert!(routes.values().all(|d| *d == rat(36)));
//! # Ok::<(), symdisc::Error>(())
//! ```

pub mod algebra;
#[cfg(doctest)]
mod book;
pub mod cli;
pub mod error;
pub mod exterior;
pub mod invariants;
pub mod sos;
pub mod sympair;

pub use error::{Error, Result};
