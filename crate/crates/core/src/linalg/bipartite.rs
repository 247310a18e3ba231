use crate::error::{Error, Result};
use crate::tol;

use super::ComplexMatrix;

/// A density matrix on `C^dim_a ⊗ C^dim_b`.
///
/// The qubit is always factor A. Factor B is the qutrit (dimension 3) before
/// qutrit acceleration and the four-level Rindler mode `{0, D, U, P}` after.
/// Construction checks shape and Hermiticity only; positivity and unit trace
/// are checked by [`crate::fano::validate_state`].
#[derive(Clone, Debug, PartialEq)]
pub struct BipartiteState {
    rho: ComplexMatrix,
    dim_a: usize,
    dim_b: usize,
}

impl BipartiteState {
    pub fn new(rho: ComplexMatrix, dim_a: usize, dim_b: usize) -> Result<Self> {
        if !matches!((dim_a, dim_b), (2, 3) | (2, 4)) {
            return Err(Error::DimensionMismatch(format!(
                "factor dimensions ({dim_a},{dim_b}) are not (2,3) or (2,4)"
            )));
        }
        if !rho.is_square() || rho.rows() != dim_a * dim_b {
            return Err(Error::DimensionMismatch(format!(
                "{}x{} matrix does not act on a {dim_a}x{dim_b} space",
                rho.rows(),
                rho.cols()
            )));
        }
        let deviation = rho.hermiticity_deviation();
        // written so that a NaN deviation is rejected too
        if deviation.is_nan() || deviation > tol::HERMITICITY {
            return Err(Error::NotHermitian { deviation });
        }
        Ok(Self { rho, dim_a, dim_b })
    }

    /// Skips the Hermiticity check; shape must already be right.
    pub(crate) fn new_unchecked(rho: ComplexMatrix, dim_a: usize, dim_b: usize) -> Self {
        debug_assert!(rho.is_square() && rho.rows() == dim_a * dim_b);
        Self { rho, dim_a, dim_b }
    }

    pub fn rho(&self) -> &ComplexMatrix {
        &self.rho
    }

    pub fn into_matrix(self) -> ComplexMatrix {
        self.rho
    }

    pub fn dims(&self) -> (usize, usize) {
        (self.dim_a, self.dim_b)
    }

    pub fn dim_a(&self) -> usize {
        self.dim_a
    }

    pub fn dim_b(&self) -> usize {
        self.dim_b
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn accepts_maximally_mixed() {
        let s =
            BipartiteState::new(ComplexMatrix::identity(6).scale_real(1.0 / 6.0), 2, 3).unwrap();
        assert_eq!(s.dims(), (2, 3));
    }

    #[test]
    fn rejects_wrong_shape_and_dims() {
        assert!(BipartiteState::new(ComplexMatrix::identity(6), 2, 4).is_err());
        assert!(BipartiteState::new(ComplexMatrix::identity(9), 3, 3).is_err());
        assert!(BipartiteState::new(ComplexMatrix::unit(6, 0, 1), 2, 3).is_err());
    }
}
