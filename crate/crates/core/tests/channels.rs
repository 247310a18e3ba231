//! Channel construction: isometries, closed-form examples and complete
//! positivity.

mod common;

use std::f64::consts::{FRAC_1_SQRT_2, FRAC_PI_4};

use common::{basis_projector, r};
use rindler_qt::fano::validate_state;
use rindler_qt::linalg::{
    hermitian_eigenvalues, partial_trace, BipartiteState, ComplexMatrix, Factor,
};
use rindler_qt::rindler::{
    accelerate_both, accelerate_qubit, accelerate_qutrit, choi_matrix, qubit_isometry,
    qutrit_isometry, rindler_param_from_physical, ChannelMode,
};
use rindler_qt::Error;

fn grid() -> impl Iterator<Item = f64> {
    (0..64).map(|i| FRAC_PI_4 * i as f64 / 63.0)
}

fn pure(i: usize) -> BipartiteState {
    BipartiteState::new(basis_projector(6, i), 2, 3).unwrap()
}

#[test]
fn isometries_on_the_grid() {
    for x in grid() {
        let v = qubit_isometry(r(x));
        assert!((&v.adjoint() * &v).max_abs_diff(&ComplexMatrix::identity(2)) < 1e-14);
        let w = qutrit_isometry(r(x));
        assert!((&w.adjoint() * &w).max_abs_diff(&ComplexMatrix::identity(3)) < 1e-14);
    }
}

#[test]
fn qubit_isometry_at_maximal_acceleration() {
    let v = qubit_isometry(r(FRAC_PI_4));
    let col: Vec<f64> = (0..4).map(|i| v[(i, 0)].re).collect();
    for (got, want) in col.iter().zip([FRAC_1_SQRT_2, 0.0, 0.0, FRAC_1_SQRT_2]) {
        assert!((got - want).abs() < 1e-15);
    }
}

#[test]
fn qutrit_isometry_pair_term_sign() {
    let w = qutrit_isometry(r(0.3));
    // column 1, |P>_I |D>_II = index 4*3 + 1
    assert!((w[(13, 1)].re + 0.3f64.sin()).abs() < 1e-15);
    assert!((w[(14, 2)].re - 0.3f64.sin()).abs() < 1e-15);
}

#[test]
fn qubit_channel_on_vacuum_product() {
    let x: f64 = 0.7;
    let out = accelerate_qubit(&pure(0), r(x)).unwrap();
    let mut want = ComplexMatrix::zeros(6, 6);
    want[(0, 0)].re = x.cos().powi(2);
    want[(3, 3)].re = x.sin().powi(2);
    assert!(out.rho().max_abs_diff(&want) < 1e-15);
}

#[test]
fn qutrit_channel_on_vacuum_product() {
    let x: f64 = 0.4;
    let (c, s) = (x.cos(), x.sin());
    let out = accelerate_qutrit(&pure(0), r(x)).unwrap();
    let marginal = partial_trace(out.rho(), (2, 4), Factor::A).unwrap();
    let want = [c.powi(4), s * s * c * c, s * s * c * c, s.powi(4)];
    for (k, w) in want.iter().enumerate() {
        assert!((marginal[(k, k)].re - w).abs() < 1e-15);
    }
    assert!((marginal.trace().re - 1.0).abs() < 1e-15);
}

#[test]
fn zero_acceleration_embeds() {
    let s = rindler_qt::random::random_state(&mut rindler_qt::random::rng(4), 3);
    assert!(
        accelerate_qubit(&s, r(0.0))
            .unwrap()
            .rho()
            .max_abs_diff(s.rho())
            < 1e-14
    );
    let out = accelerate_qutrit(&s, r(0.0)).unwrap();
    for i in 0..8 {
        for j in 0..8 {
            let want = if i % 4 == 3 || j % 4 == 3 {
                0.0
            } else {
                s.rho()[((i / 4) * 3 + i % 4, (j / 4) * 3 + j % 4)].re
            };
            assert!((out.rho()[(i, j)].re - want).abs() < 1e-14);
        }
    }
}

#[test]
fn both_vacuum_element() {
    let s = rindler_qt::random::random_state(&mut rindler_qt::random::rng(8), 3);
    let (q, t): (f64, f64) = (0.2, 0.6);
    let out = accelerate_both(&s, r(q), r(t)).unwrap();
    let want = q.cos().powi(2) * t.cos().powi(4) * s.rho()[(0, 0)].re;
    assert!((out.rho()[(0, 0)].re - want).abs() < 1e-15);
}

#[test]
fn choi_matrices_are_positive_and_trace_preserving() {
    for x in [0.0, 0.3, FRAC_PI_4] {
        for mode in [
            ChannelMode::QubitOnly { r_q: r(x) },
            ChannelMode::QutritOnly { r_t: r(x) },
            ChannelMode::Both {
                r_q: r(x),
                r_t: r(0.5),
            },
        ] {
            let choi = choi_matrix(mode, 3).unwrap();
            let ev = hermitian_eigenvalues(&choi.hermitian_part(), 1e-13).unwrap();
            assert!(ev[0] >= -1e-10, "{mode:?}: {}", ev[0]);
            // trace preservation: the partial trace over the output is the identity
            let n_out = choi.rows() / 6;
            let reduced = partial_trace(&choi, (6, n_out), Factor::B).unwrap();
            assert!(reduced.max_abs_diff(&ComplexMatrix::identity(6)) < 1e-13);
        }
    }
}

#[test]
fn physical_parameter() {
    assert!(
        (rindler_param_from_physical(1.0, 1.0, 1.0).unwrap().value()
            - (-std::f64::consts::PI).exp().atan())
        .abs()
            < 1e-16
    );
    assert!(
        (rindler_param_from_physical(1.0, 1e12, 1.0).unwrap().value() - FRAC_PI_4).abs() < 1e-10
    );
    assert!(rindler_param_from_physical(1.0, 1e-3, 1.0).unwrap().value() < 1e-100);
    assert!(matches!(
        rindler_param_from_physical(1.0, 0.0, 1.0),
        Err(Error::NonPositive { .. })
    ));
    assert!(matches!(
        rindler_param_from_physical(-1.0, 1.0, 1.0),
        Err(Error::NonPositive { .. })
    ));
}

#[test]
fn unphysical_inputs_are_refused() {
    let mut m = ComplexMatrix::identity(6).scale_real(0.5);
    m[(0, 0)].re = -2.0;
    let bad = BipartiteState::new(m, 2, 3).unwrap();
    assert!(!validate_state(bad.rho(), 1e-10, 1e-10).is_physical);
    assert!(matches!(
        accelerate_qubit(&bad, r(0.1)),
        Err(Error::Unphysical(_))
    ));
}
