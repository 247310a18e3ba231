//! Qubit-qutrit entanglement under Rindler acceleration.
//!
//! The crate builds general qubit-qutrit density matrices from their Fano
//! (Bloch) parameters, sends them through the single-mode Unruh channels for
//! an accelerated qubit, an accelerated qutrit, or both, and measures the
//! surviving entanglement with the negativity. Every channel is obtained from
//! an explicit isometric dilation followed by a partial trace over Rindler
//! region II; the closed-form element tables that circulate for these channels
//! are kept in [`crosscheck`] purely as comparison targets.

pub mod cli;
pub mod crosscheck;
pub mod entanglement;
pub mod error;
pub mod families;
pub mod fano;
pub mod linalg;
pub mod random;
pub mod rindler;
pub mod tol;

pub use error::{Error, Result};
pub use linalg::{BipartiteState, ComplexMatrix, Factor, C64};
