//! Dense complex linear algebra sized for qubit-qutrit problems.

mod bipartite;
mod eigen;
mod matrix;

pub use bipartite::BipartiteState;
pub use eigen::hermitian_eigenvalues;
pub use matrix::{partial_trace, partial_transpose, tensor, ComplexMatrix, Factor, C64};
