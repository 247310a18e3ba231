//! Fano (Bloch) parameterization of qubit-qutrit states.
//!
//! A state on `C^2 ⊗ C^3` is written as
//!
//! ```text
//! rho = ( I6 + sum_i s_i sigma_i ⊗ I3 + sum_j t_j I2 ⊗ tau_j
//!            + sum_ij c_ij sigma_i ⊗ tau_j ) / 6
//! ```
//!
//! with the generator convention fixed by [`generators`]. Two independent
//! construction routes exist: the generator sum ([`fano_to_density`]) and a
//! closed-form element table ([`appendix_a_density`]).

use std::fmt;
use std::sync::OnceLock;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::{hermitian_eigenvalues, tensor, BipartiteState, ComplexMatrix, C64};
use crate::tol;

/// Qubit Bloch vector `s`, qutrit Bloch vector `t` and correlation matrix `c`.
///
/// Indices are zero-based in code: `s[0]` is `s_1`, `c[2][7]` is `c_38`.
#[derive(Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
pub struct FanoParams {
    pub s: [f64; 3],
    pub t: [f64; 8],
    pub c: [[f64; 8]; 3],
}

impl FanoParams {
    pub fn zero() -> Self {
        Self::default()
    }

    /// Coarse sanity bound: finite entries, `|s| <= 2`, `|t| <= 2`, `|c_ij| <= 2`.
    ///
    /// This is not a physicality test; see [`validate_state`].
    pub fn check_bounds(&self) -> Result<()> {
        let norm = |v: &[f64]| v.iter().map(|x| x * x).sum::<f64>().sqrt();
        let all = self.s.iter().chain(&self.t).chain(self.c.iter().flatten());
        if all.clone().any(|x| !x.is_finite()) {
            return Err(Error::InvalidFamily(
                "Fano parameters must be finite".into(),
            ));
        }
        if norm(&self.s) > 2.0
            || norm(&self.t) > 2.0
            || self.c.iter().flatten().any(|x| x.abs() > 2.0)
        {
            return Err(Error::InvalidFamily(
                "Fano parameters exceed the coarse bound |s|,|t|,|c_ij| <= 2".into(),
            ));
        }
        Ok(())
    }

    pub fn max_abs_diff(&self, other: &Self) -> f64 {
        let a = self.s.iter().chain(&self.t).chain(self.c.iter().flatten());
        let b = other
            .s
            .iter()
            .chain(&other.t)
            .chain(other.c.iter().flatten());
        a.zip(b).map(|(x, y)| (x - y).abs()).fold(0.0, f64::max)
    }
}

/// SU(2) and SU(3) generators.
#[derive(Clone, Debug)]
pub struct GeneratorSet {
    pub sigma: [ComplexMatrix; 3],
    pub tau: [ComplexMatrix; 8],
}

/// The fixed generator convention.
///
/// `sigma_1 = |0><1| + |1><0|`, `sigma_2 = i(|0><1| - |1><0|)`,
/// `sigma_3 = |1><1| - |0><0|`; `tau_1..tau_8` are the Gell-Mann matrices
/// with `tau_2 = i(|1><0| - |0><1|)`, `tau_5 = i(|2><0| - |0><2|)`,
/// `tau_7 = i(|2><1| - |1><2|)`, `tau_8 = (|0><0| + |1><1| - 2|2><2|)/sqrt 3`.
///
/// This is the unique sign choice (over flips of `sigma_2`, `sigma_3` and the
/// antisymmetric Gell-Mann matrices) that reproduces the closed-form element
/// table with the fewest disagreements; see [`crate::crosscheck`].
pub fn generators() -> &'static GeneratorSet {
    static SET: OnceLock<GeneratorSet> = OnceLock::new();
    SET.get_or_init(|| {
        let u2 = |i, j| ComplexMatrix::unit(2, i, j);
        let u3 = |i, j| ComplexMatrix::unit(3, i, j);
        let i = C64::i();
        let sym = |a: ComplexMatrix, b: ComplexMatrix| &a + &b;
        let anti = |a: ComplexMatrix, b: ComplexMatrix| (&a - &b).scale(i);
        GeneratorSet {
            sigma: [
                sym(u2(0, 1), u2(1, 0)),
                anti(u2(0, 1), u2(1, 0)),
                &u2(1, 1) - &u2(0, 0),
            ],
            tau: [
                sym(u3(0, 1), u3(1, 0)),
                anti(u3(1, 0), u3(0, 1)),
                &u3(0, 0) - &u3(1, 1),
                sym(u3(0, 2), u3(2, 0)),
                anti(u3(2, 0), u3(0, 2)),
                sym(u3(1, 2), u3(2, 1)),
                anti(u3(2, 1), u3(1, 2)),
                ComplexMatrix::from_real_diagonal(&[1.0, 1.0, -2.0]).scale_real(1.0 / 3f64.sqrt()),
            ],
        }
    })
}

/// Builds `rho` from the generator expansion. No positivity guarantee.
pub fn fano_to_density(p: &FanoParams) -> BipartiteState {
    let g = generators();
    let i2 = ComplexMatrix::identity(2);
    let i3 = ComplexMatrix::identity(3);

    let mut rho = ComplexMatrix::identity(6);
    for (k, sigma) in g.sigma.iter().enumerate() {
        rho = &rho + &tensor(sigma, &i3).scale_real(p.s[k]);
    }
    for (k, tau) in g.tau.iter().enumerate() {
        rho = &rho + &tensor(&i2, tau).scale_real(p.t[k]);
    }
    for (a, sigma) in g.sigma.iter().enumerate() {
        for (b, tau) in g.tau.iter().enumerate() {
            if p.c[a][b] != 0.0 {
                rho = &rho + &tensor(sigma, tau).scale_real(p.c[a][b]);
            }
        }
    }
    let rho = rho.scale_real(1.0 / 6.0).hermitian_part();
    BipartiteState::new_unchecked(rho, 2, 3)
}

/// Builds `rho` element by element from the closed-form table
/// `rho[(l-1)/6][(l-1)%6] = A_l`, in the basis `00,01,02,10,11,12`.
///
/// The expressions are written out independently of the generator matrices so
/// that agreement with [`fano_to_density`] is a real consistency check.
pub fn appendix_a_density(p: &FanoParams) -> BipartiteState {
    let [s1, s2, s3] = p.s;
    let [t1, t2, t3, t4, t5, t6, t7, t8] = p.t;
    let c = |i: usize, j: usize| p.c[i - 1][j - 1];
    let r3 = 3f64.sqrt();
    let z = |re: f64, im: f64| C64::new(re / 6.0, im / 6.0);

    let a: [C64; 36] = [
        z(1.0 - s3 + t3 - c(3, 3) + t8 / r3 - c(3, 8) / r3, 0.0),
        z(t1 - c(3, 1), -t2 + c(3, 2)),
        z(t4 - c(3, 4), -t5 + c(3, 5)),
        z(s1 + c(1, 3) + c(1, 8) / r3, s2 + c(2, 3) + c(2, 8) / r3),
        z(c(1, 1) + c(2, 2), -c(1, 2) + c(2, 1)),
        z(c(1, 4) + c(2, 5), -c(1, 5) + c(2, 4)),
        // row 01
        z(t1 - c(3, 1), t2 - c(3, 2)),
        z(1.0 - s3 - t3 + t8 / r3 + c(3, 3) - c(3, 8) / r3, 0.0),
        z(t6 - c(3, 6), -t7 + c(3, 7)),
        z(c(1, 1) - c(2, 2), c(1, 2) + c(2, 1)),
        z(s1 - c(1, 3) + c(1, 8) / r3, s2 - c(2, 3) + c(2, 8) / r3),
        z(c(1, 6) + c(2, 7), -c(1, 7) + c(2, 6)),
        // row 02
        z(t4 - c(3, 4), t5 - c(3, 5)),
        z(t6 - c(3, 6), t7 - c(3, 7)),
        z(1.0 - s3 - 2.0 * t8 / r3 + 2.0 * c(3, 8) / r3, 0.0),
        z(c(1, 4) - c(2, 5), c(1, 5) + c(2, 4)),
        z(c(1, 6) - c(2, 7), c(1, 7) + c(2, 6)),
        z(s1 - 2.0 * c(1, 8) / r3, s2 - 2.0 * c(2, 8) / r3),
        // row 10
        z(s1 + c(1, 3) + c(1, 8) / r3, -s2 - c(2, 3) - c(2, 8) / r3),
        z(c(1, 1) - c(2, 2), -c(1, 2) - c(2, 1)),
        z(c(1, 4) - c(2, 5), -c(1, 5) - c(2, 4)),
        z(1.0 + s3 + t3 + t8 / r3 + c(3, 3) + c(3, 8) / r3, 0.0),
        z(t1 + c(3, 1), -t2 - c(3, 2)),
        z(t4 + c(3, 4), -t5 - c(3, 5)),
        // row 11
        z(c(1, 1) + c(2, 2), c(1, 2) - c(2, 1)),
        z(s1 - c(1, 3) + c(1, 8) / r3, -s2 + c(2, 3) - c(2, 8) / r3),
        z(c(1, 6) - c(2, 7), -c(1, 7) - c(2, 6)),
        z(t1 + c(3, 1), t2 + c(3, 2)),
        z(1.0 + s3 - t3 + t8 / r3 - c(3, 3) + c(3, 8) / r3, 0.0),
        z(t6 + c(3, 6), -t7 - c(3, 7)),
        // row 12
        z(c(1, 4) + c(2, 5), c(1, 5) - c(2, 4)),
        z(c(1, 6) + c(2, 7), c(1, 7) - c(2, 6)),
        z(s1 - 2.0 * c(1, 8) / r3, -s2 + 2.0 * c(2, 8) / r3),
        z(t4 + c(3, 4), t5 + c(3, 5)),
        z(t6 + c(3, 6), t7 + c(3, 7)),
        z(1.0 + s3 - 2.0 * t8 / r3 - 2.0 * c(3, 8) / r3, 0.0),
    ];
    let rho = ComplexMatrix::from_vec(6, 6, a.to_vec()).expect("36 entries");
    BipartiteState::new_unchecked(rho, 2, 3)
}

/// Recovers the Fano parameters as the exact inverse of [`fano_to_density`]:
/// `s_i = tr(rho sigma_i ⊗ I)`, `t_j = (3/2) tr(rho I ⊗ tau_j)`,
/// `c_ij = (3/2) tr(rho sigma_i ⊗ tau_j)`.
///
/// The factor 3/2 follows from `tr(I2) tr(tau_j^2) = 4` against the overall
/// `1/6`; the bare trace formulas would return `t` and `c` scaled by 2/3.
pub fn density_to_fano(state: &BipartiteState) -> Result<FanoParams> {
    if state.dims() != (2, 3) {
        return Err(Error::DimensionMismatch(format!(
            "Fano parameters need a (2,3) state, got {:?}",
            state.dims()
        )));
    }
    let rho = state.rho();
    let g = generators();
    let i2 = ComplexMatrix::identity(2);
    let i3 = ComplexMatrix::identity(3);
    // tr(rho X) = sum_ij rho_ij X_ji
    let expect = |x: &ComplexMatrix| -> f64 {
        let mut acc = C64::new(0.0, 0.0);
        for i in 0..6 {
            for j in 0..6 {
                acc += rho[(i, j)] * x[(j, i)];
            }
        }
        acc.re
    };

    let mut p = FanoParams::zero();
    for (k, sigma) in g.sigma.iter().enumerate() {
        p.s[k] = expect(&tensor(sigma, &i3));
    }
    for (k, tau) in g.tau.iter().enumerate() {
        p.t[k] = 1.5 * expect(&tensor(&i2, tau));
    }
    for (a, sigma) in g.sigma.iter().enumerate() {
        for (b, tau) in g.tau.iter().enumerate() {
            p.c[a][b] = 1.5 * expect(&tensor(sigma, tau));
        }
    }
    Ok(p)
}

/// Outcome of a physicality check.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ValidationReport {
    pub hermitian: bool,
    pub hermiticity_deviation: f64,
    pub trace_deviation: f64,
    /// Smallest eigenvalue of the Hermitian part.
    pub min_eigenvalue: f64,
    pub is_physical: bool,
}

impl fmt::Display for ValidationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "hermitian={} (deviation {:.3e}), |trace-1|={:.3e}, min eigenvalue={:.6e}",
            self.hermitian, self.hermiticity_deviation, self.trace_deviation, self.min_eigenvalue
        )
    }
}

/// Hermiticity, trace and positivity report for a square matrix.
pub fn validate_state(m: &ComplexMatrix, tol_trace: f64, tol_psd: f64) -> ValidationReport {
    assert!(m.is_square(), "validate_state needs a square matrix");
    let hermiticity_deviation = m.hermiticity_deviation();
    let hermitian = hermiticity_deviation <= tol::HERMITICITY;
    let trace_deviation = (m.trace() - C64::new(1.0, 0.0)).norm();
    let min_eigenvalue = hermitian_eigenvalues(&m.hermitian_part(), f64::INFINITY)
        .map(|ev| ev[0])
        .unwrap_or(f64::NAN);
    let is_physical = hermitian && trace_deviation <= tol_trace && min_eigenvalue >= -tol_psd;
    ValidationReport {
        hermitian,
        hermiticity_deviation,
        trace_deviation,
        min_eigenvalue,
        is_physical,
    }
}

/// Fails with [`Error::Unphysical`] unless the state passes [`validate_state`]
/// at the crate tolerances.
pub fn require_physical(state: &BipartiteState) -> Result<()> {
    let report = validate_state(state.rho(), tol::TRACE, tol::PSD_SLACK);
    if report.is_physical {
        Ok(())
    } else {
        Err(Error::Unphysical(report))
    }
}
