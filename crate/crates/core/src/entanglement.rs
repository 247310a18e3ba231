//! Negativity of `2 x d` states.
//!
//! `E = ||rho^{T_A}||_1 - 1 = 2 * sum |negative eigenvalues of rho^{T_A}|`,
//! with the partial transpose taken on the qubit. `E = 1` for Bell-type states
//! and `E = 0` exactly when the state has a positive partial transpose, which
//! for `2 x 2` and `2 x 3` is equivalent to separability.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::fano::require_physical;
use crate::linalg::{
    hermitian_eigenvalues, partial_transpose, BipartiteState, ComplexMatrix, Factor,
};
use crate::tol;

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct NegativityResult {
    pub negativity: f64,
    /// Full spectrum of the partial transpose, ascending.
    pub eigenvalues: Vec<f64>,
}

impl NegativityResult {
    /// `sum |lambda_i| - 1`; equals `negativity` up to rounding for unit-trace input.
    pub fn trace_norm_minus_one(&self) -> f64 {
        self.eigenvalues.iter().map(|x| x.abs()).sum::<f64>() - 1.0
    }

    pub fn min_eigenvalue(&self) -> f64 {
        self.eigenvalues[0]
    }
}

/// Negativity of a physical `(2,3)` or `(2,4)` state.
pub fn negativity(state: &BipartiteState) -> Result<NegativityResult> {
    require_physical(state)?;
    negativity_unchecked(state.rho(), state.dims())
}

/// Negativity computed on any Hermitian operator, without a physicality check.
///
/// The number is only an entanglement measure for density matrices; this entry
/// point exists for sweeps over configurations that are reported as unphysical.
pub fn negativity_unchecked(rho: &ComplexMatrix, dims: (usize, usize)) -> Result<NegativityResult> {
    if dims.0 != 2 || !matches!(dims.1, 3 | 4) {
        return Err(Error::DimensionMismatch(format!(
            "negativity is implemented for 2x3 and 2x4 states, got {dims:?}"
        )));
    }
    let pt = partial_transpose(rho, dims, Factor::A)?;
    let eigenvalues = hermitian_eigenvalues(&pt, tol::HERMITICITY)?;
    let negativity = 2.0
        * eigenvalues
            .iter()
            .filter(|&&x| x < 0.0)
            .map(|x| -x)
            .sum::<f64>();
    Ok(NegativityResult {
        negativity,
        eigenvalues,
    })
}

/// Peres-Horodecki test: `true` iff the smallest partial-transpose eigenvalue
/// is at least `-1e-10`.
pub fn is_ppt(state: &BipartiteState) -> Result<bool> {
    Ok(negativity(state)?.min_eigenvalue() >= -tol::PPT_SLACK)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::{tensor, C64};

    fn bell_block() -> BipartiteState {
        let h = std::f64::consts::FRAC_1_SQRT_2;
        let mut v = vec![C64::new(0.0, 0.0); 6];
        v[0] = C64::new(h, 0.0);
        v[5] = C64::new(h, 0.0);
        BipartiteState::new(ComplexMatrix::projector(&v), 2, 3).unwrap()
    }

    #[test]
    fn bell_block_is_maximally_entangled() {
        let n = negativity(&bell_block()).unwrap();
        assert!((n.negativity - 1.0).abs() < 1e-12);
        assert!((n.trace_norm_minus_one() - 1.0).abs() < 1e-12);
        assert!(!is_ppt(&bell_block()).unwrap());
    }

    #[test]
    fn product_state_is_ppt() {
        let a = ComplexMatrix::from_real_diagonal(&[0.3, 0.7]);
        let mut b = ComplexMatrix::from_real_diagonal(&[0.5, 0.25, 0.25]);
        b[(0, 1)] = C64::new(0.1, 0.05);
        b[(1, 0)] = C64::new(0.1, -0.05);
        let s = BipartiteState::new(tensor(&a, &b), 2, 3).unwrap();
        assert!(negativity(&s).unwrap().negativity.abs() < 1e-12);
        assert!(is_ppt(&s).unwrap());
    }

    #[test]
    fn maximally_mixed_is_ppt() {
        let s =
            BipartiteState::new(ComplexMatrix::identity(6).scale_real(1.0 / 6.0), 2, 3).unwrap();
        assert!(is_ppt(&s).unwrap());
    }

    #[test]
    fn noisy_bell_block() {
        // 0.9 I/6 + 0.1 |Phi><Phi|: PT spectrum is 0.1, 0.15 (x2), 0.2 (x3)
        // (block {10,02} has diagonal 0.15 and off-diagonal 0.05), so PPT.
        let noisy =
            &ComplexMatrix::identity(6).scale_real(0.9 / 6.0) + &bell_block().rho().scale_real(0.1);
        let s = BipartiteState::new(noisy, 2, 3).unwrap();
        let n = negativity(&s).unwrap();
        let expected = [0.1, 0.15, 0.15, 0.2, 0.2, 0.2];
        for (a, b) in n.eigenvalues.iter().zip(expected) {
            assert!((a - b).abs() < 1e-12, "{:?}", n.eigenvalues);
        }
        assert!(is_ppt(&s).unwrap());
    }

    #[test]
    fn rejects_unsupported_dims_and_unphysical() {
        assert!(negativity_unchecked(&ComplexMatrix::identity(4), (2, 2)).is_err());
        let bad = BipartiteState::new(
            ComplexMatrix::from_real_diagonal(&[1.2, -0.2, 0., 0., 0., 0.]),
            2,
            3,
        )
        .unwrap();
        assert!(matches!(negativity(&bad), Err(Error::Unphysical(_))));
    }
}
