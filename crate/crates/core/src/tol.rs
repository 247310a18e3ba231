//! Numerical tolerances shared by the whole crate.

/// Maximum `|M[i][j] - conj(M[j][i])|` for a matrix to count as Hermitian.
pub const HERMITICITY: f64 = 1e-12;

/// Slack on the smallest eigenvalue before a state is declared non-PSD.
pub const PSD_SLACK: f64 = 1e-10;

/// Allowed `|trace - 1|` for a validated density matrix.
pub const TRACE: f64 = 1e-10;

/// Jacobi sweeps stop once the off-diagonal Frobenius norm drops below this
/// fraction of the full Frobenius norm.
pub const EIG_OFFDIAG: f64 = 1e-13;

/// Upper bound on Jacobi sweeps; convergence is quadratic so this is never hit
/// for finite input.
pub const EIG_MAX_SWEEPS: usize = 100;

/// Default element tolerance for table cross-checks.
pub const TABLE_MATCH: f64 = 1e-12;

/// A partial-transpose eigenvalue below `-PPT_SLACK` certifies entanglement.
pub const PPT_SLACK: f64 = 1e-10;
