//! The three concrete initial states used for the decay curves.
//!
//! * [`example_one`]: a polarized Fano configuration with diagonal
//!   correlations `c_11 = 1`, `c_22 = -1`, `c_33 = 1`;
//! * [`one_parameter`]: the mixture of two Bell-type blocks weighted by `p`;
//! * [`two_parameter`]: the `(alpha, beta, gamma)` family with
//!   `gamma + 2 alpha + 3 beta = 1`.
//!
//! Basis index of `|a b>` is `3 a + b` (qubit `a`, qutrit `b`).

use serde::{Deserialize, Serialize};

use crate::entanglement::negativity;
use crate::error::{Error, Result};
use crate::fano::{fano_to_density, validate_state, FanoParams, ValidationReport};
use crate::linalg::{BipartiteState, ComplexMatrix, C64};
use crate::tol;

/// One of the three families with its parameters.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "family", rename_all = "snake_case")]
pub enum FamilySpec {
    ExampleOne { s3: f64, t3: f64 },
    OneParameter { p: f64 },
    TwoParameter { alpha: f64, gamma: f64 },
}

/// A family member together with its physicality report.
///
/// Only [`FamilySpec::ExampleOne`] can produce an unphysical state; the other
/// two families refuse to construct one.
#[derive(Clone, Debug)]
pub struct PreparedState {
    pub state: BipartiteState,
    pub report: ValidationReport,
}

impl PreparedState {
    pub fn is_physical(&self) -> bool {
        self.report.is_physical
    }
}

impl FamilySpec {
    /// Builds the density matrix. Example-one states are returned even when
    /// they fail the positivity check; the report says so.
    pub fn prepare(&self) -> Result<PreparedState> {
        let state = match *self {
            FamilySpec::ExampleOne { s3, t3 } => {
                let params = example_one(s3, t3);
                params.check_bounds()?;
                fano_to_density(&params)
            }
            FamilySpec::OneParameter { p } => one_parameter(p)?,
            FamilySpec::TwoParameter { alpha, gamma } => two_parameter(alpha, gamma)?,
        };
        let report = validate_state(state.rho(), tol::TRACE, tol::PSD_SLACK);
        Ok(PreparedState { state, report })
    }

    /// Short human-readable description, e.g. `one_parameter(p=0.5)`.
    pub fn label(&self) -> String {
        match *self {
            FamilySpec::ExampleOne { s3, t3 } => format!("example_one(s3={s3}, t3={t3})"),
            FamilySpec::OneParameter { p } => format!("one_parameter(p={p})"),
            FamilySpec::TwoParameter { alpha, gamma } => {
                format!(
                    "two_parameter(alpha={alpha}, gamma={gamma}, beta={})",
                    beta(alpha, gamma)
                )
            }
        }
    }
}

/// Fano parameters `s = (0, 0, s3)`, `t_3 = t3`, `c_11 = 1`, `c_22 = -1`,
/// `c_33 = 1`; everything else zero. Physicality is not checked here.
pub fn example_one(s3: f64, t3: f64) -> FanoParams {
    let mut p = FanoParams::zero();
    p.s[2] = s3;
    p.t[2] = t3;
    p.c[0][0] = 1.0;
    p.c[1][1] = -1.0;
    p.c[2][2] = 1.0;
    p
}

fn real(x: f64) -> C64 {
    C64::new(x, 0.0)
}

/// `p/2 (|00> + |12>)(<00| + <12|) + p/2 (|01><01| + |11><11|)
///  + (1-2p)/2 (|02> + |10>)(<02| + <10|)` for `0 <= p <= 1/2`.
pub fn one_parameter(p: f64) -> Result<BipartiteState> {
    if !(0.0..=0.5).contains(&p) {
        return Err(Error::InvalidFamily(format!(
            "one-parameter family needs 0 <= p <= 1/2, got p = {p}"
        )));
    }
    let a = p / 2.0;
    let b = (1.0 - 2.0 * p) / 2.0;
    let mut m = ComplexMatrix::zeros(6, 6);
    for i in [0, 1, 4, 5] {
        m[(i, i)] = real(a);
    }
    m[(0, 5)] = real(a);
    m[(5, 0)] = real(a);
    for i in [2, 3] {
        m[(i, i)] = real(b);
    }
    m[(2, 3)] = real(b);
    m[(3, 2)] = real(b);
    BipartiteState::new(m, 2, 3)
}

/// `beta = (1 - gamma - 2 alpha) / 3`.
pub fn beta(alpha: f64, gamma: f64) -> f64 {
    (1.0 - gamma - 2.0 * alpha) / 3.0
}

/// Diagonal `(beta, (beta+gamma)/2, alpha, (beta+gamma)/2, beta, alpha)` with
/// the coherence `(beta-gamma)/2` between `|01>` and `|10>`.
///
/// Rejects parameters whose matrix is not positive semidefinite, naming the
/// first violated inequality.
pub fn two_parameter(alpha: f64, gamma: f64) -> Result<BipartiteState> {
    if !alpha.is_finite() || !gamma.is_finite() {
        return Err(Error::InvalidFamily(format!(
            "two-parameter family needs finite alpha, gamma (got {alpha}, {gamma})"
        )));
    }
    let beta = beta(alpha, gamma);
    let mid = (beta + gamma) / 2.0;
    let coherence = (beta - gamma) / 2.0;
    let slack = tol::PSD_SLACK;
    let violated = if alpha < -slack {
        Some(format!("alpha = {alpha} < 0"))
    } else if beta < -slack {
        Some(format!("beta = (1 - gamma - 2 alpha)/3 = {beta} < 0"))
    } else if mid < -slack {
        Some(format!("(beta+gamma)/2 = {mid} < 0"))
    } else if coherence.abs() > mid + slack {
        Some(format!(
            "|beta-gamma|/2 = {} exceeds (beta+gamma)/2 = {mid}",
            coherence.abs()
        ))
    } else {
        None
    };
    if let Some(v) = violated {
        return Err(Error::InvalidFamily(format!(
            "two-parameter state with alpha = {alpha}, gamma = {gamma} is not positive: {v}"
        )));
    }

    let diag = [beta, mid, alpha, mid, beta, alpha];
    let mut m = ComplexMatrix::from_real_diagonal(&diag);
    m[(1, 3)] = real(coherence);
    m[(3, 1)] = real(coherence);
    BipartiteState::new(m, 2, 3)
}

/// The valid two-parameter configuration standing in for an unattainable
/// figure setting, with a description of the search that produced it.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Fig3Substitute {
    pub alpha: f64,
    pub gamma: f64,
    pub beta: f64,
    /// Negativity of the chosen state at zero acceleration.
    pub negativity_at_zero: f64,
    pub search: String,
}

const FIG3_STEP: f64 = 0.05;
const FIG3_ALPHA_STEPS: usize = 10;
const FIG3_GAMMA_STEPS: usize = 20;

/// Grid search over `alpha` in `[0, 0.5]`, `gamma` in `[0, 1]` (step 0.05) for
/// the physical member with the largest negativity at `r = 0`. Ties keep the
/// first point in (alpha, gamma) lexicographic order.
pub fn fig3_substitute() -> Fig3Substitute {
    let mut best: Option<(f64, f64, f64)> = None;
    for i in 0..=FIG3_ALPHA_STEPS {
        for j in 0..=FIG3_GAMMA_STEPS {
            let alpha = i as f64 * FIG3_STEP;
            let gamma = j as f64 * FIG3_STEP;
            let Ok(state) = two_parameter(alpha, gamma) else {
                continue;
            };
            let Ok(n) = negativity(&state) else {
                continue;
            };
            if best.is_none_or(|(_, _, e)| n.negativity > e + tol::TABLE_MATCH) {
                best = Some((alpha, gamma, n.negativity));
            }
        }
    }
    let (alpha, gamma, e) = best.expect("the search grid contains physical points");
    Fig3Substitute {
        alpha,
        gamma,
        beta: beta(alpha, gamma),
        negativity_at_zero: e,
        search: format!(
            "argmax of negativity at r=0 over alpha in [0,0.5], gamma in [0,1], step {FIG3_STEP}, \
             restricted to positive semidefinite members"
        ),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn example_one_parameters() {
        let p = example_one(1.0, 1.0);
        assert_eq!(p.s, [0.0, 0.0, 1.0]);
        assert_eq!(p.t[2], 1.0);
        assert_eq!((p.c[0][0], p.c[1][1], p.c[2][2]), (1.0, -1.0, 1.0));
        let nonzero = p.c.iter().flatten().filter(|x| **x != 0.0).count();
        assert_eq!(nonzero, 3);
    }

    #[test]
    fn example_one_zero_corner_vanishes() {
        let rho = fano_to_density(&example_one(0.0, 0.0));
        assert!(rho.rho()[(0, 0)].norm() < 1e-15);
    }

    #[test]
    fn example_one_prepare_reports_unphysical() {
        let prepared = FamilySpec::ExampleOne { s3: 1.0, t3: 1.0 }
            .prepare()
            .unwrap();
        assert!(!prepared.is_physical());
        let prepared = FamilySpec::ExampleOne { s3: 0.0, t3: 0.0 }
            .prepare()
            .unwrap();
        assert!(prepared.is_physical());
    }

    #[test]
    fn one_parameter_trace_and_psd_on_grid() {
        for k in 0..=50 {
            let p = k as f64 * 0.01;
            let s = one_parameter(p).unwrap();
            let r = validate_state(s.rho(), 1e-12, 1e-12);
            assert!(r.is_physical, "p = {p}: {r}");
        }
    }

    #[test]
    fn one_parameter_endpoints() {
        let pure = one_parameter(0.0).unwrap();
        assert!((negativity(&pure).unwrap().negativity - 1.0).abs() < 1e-12);
        assert_eq!(pure.rho()[(2, 3)], real(0.5));
        let half = one_parameter(0.5).unwrap();
        assert_eq!(half.rho()[(5, 5)], real(0.25));
        assert!((half.rho().trace().re - 1.0).abs() < 1e-15);
    }

    #[test]
    fn one_parameter_rejects_out_of_range() {
        for p in [-0.01, 0.51, f64::NAN] {
            assert!(matches!(one_parameter(p), Err(Error::InvalidFamily(_))));
        }
    }

    #[test]
    fn two_parameter_zero_corner() {
        let s = two_parameter(0.0, 0.0).unwrap();
        let third = 1.0 / 3.0;
        let sixth = 1.0 / 6.0;
        let expected = [third, sixth, 0.0, sixth, third, 0.0];
        for (i, e) in expected.iter().enumerate() {
            assert!((s.rho()[(i, i)].re - e).abs() < 1e-15);
        }
        assert!((s.rho()[(1, 3)].re - sixth).abs() < 1e-15);
        assert!((s.rho().trace().re - 1.0).abs() < 1e-15);
    }

    #[test]
    fn two_parameter_rejects_figure_setting_by_name() {
        let err = two_parameter(0.5, -1.5).unwrap_err().to_string();
        assert!(err.contains("(beta+gamma)/2"), "{err}");
    }

    #[test]
    fn two_parameter_names_each_violation() {
        // alpha = 0, gamma = -0.1: (beta+gamma)/2 > 0 but the {01,10} block
        // has a negative eigenvalue
        let err = two_parameter(0.0, -0.1).unwrap_err().to_string();
        assert!(err.contains("|beta-gamma|/2"), "{err}");
        let err = two_parameter(-0.1, 0.0).unwrap_err().to_string();
        assert!(err.contains("alpha"), "{err}");
        let err = two_parameter(0.0, 1.5).unwrap_err().to_string();
        assert!(err.contains("beta ="), "{err}");
    }

    #[test]
    fn fig3_substitute_is_the_maximally_entangled_corner() {
        let sub = fig3_substitute();
        assert_eq!((sub.alpha, sub.gamma), (0.0, 1.0));
        assert!(sub.beta.abs() < 1e-15);
        assert!((sub.negativity_at_zero - 1.0).abs() < 1e-10);
    }

    #[test]
    fn spec_round_trips_through_json() {
        let spec = FamilySpec::TwoParameter {
            alpha: 0.1,
            gamma: 0.2,
        };
        let json = serde_json::to_string(&spec).unwrap();
        assert_eq!(
            json,
            r#"{"family":"two_parameter","alpha":0.1,"gamma":0.2}"#
        );
        assert_eq!(serde_json::from_str::<FamilySpec>(&json).unwrap(), spec);
    }
}
